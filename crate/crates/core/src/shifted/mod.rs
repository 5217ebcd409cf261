//! Shifted symmetric functions: falling-factorial series, `τ`, shifted Schur functions and the
//! shifted operator calculus.

pub mod laurent;
pub mod lem2;
pub mod operators;
pub mod schur;
pub mod series;
pub mod tau;

pub use laurent::{ff_laurent, Basis, InvUSeries};
pub use lem2::{lem2_check, pole_free_points};
pub use operators::{
    check_shifted, check_star_agreement, check_star_decomposition, dqstar_apply, dqstar_series, drstar_apply,
    drstar_series, hstar_monomial, psi_star_minus, psi_star_plus, star_vertex_minus, star_vertex_plus,
};
pub use schur::{eval_shifted, qstar_multivar, rstar_multivar, shifted_bialternant, shifted_schur, twisted_det, MultiShiftedTable};
pub use series::{
    from_inv_u, invert_shifted, qr_product, qstar_series, rstar_series, shift_arg, to_e_presentation, to_h_presentation,
    to_inv_u, to_presentation, FallingSeries, Presentation, ShiftedInverse,
};
pub use tau::{tau_apply, tau_h, tau_inv_e, tau_iterated};
