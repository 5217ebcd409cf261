//! Single-variable shifted series `Q*(u)`, `R*(u)`, argument shifts and the `h*`/`e*` change of presentation.

use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use super::laurent::{to_basis, Basis, InvUSeries};
use crate::error::{Error, Result};
use crate::ring::{Element, Generator, GeneratorFamily};

/// `Σ_{k=0}^{K} c_k b_k(u)` in the falling (`1/(u|k)`) or rising (`(u|-k)`) basis.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FallingSeries {
    pub basis: Basis,
    pub coeffs: Vec<Element>,
}

impl FallingSeries {
    pub fn new(basis: Basis, coeffs: Vec<Element>) -> Self {
        FallingSeries { basis, coeffs }
    }

    /// Truncation order `K`.
    pub fn order(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, k: usize) -> Element {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }
}

/// Expansion in powers of `1/u`, exact through `u^-K`.
pub fn to_inv_u(s: &FallingSeries) -> InvUSeries<Element> {
    let low = -s.order();
    let mut acc = InvUSeries::zero(low);
    for (k, c) in s.coeffs.iter().enumerate() {
        if !c.is_zero() {
            acc = acc.add(&s.basis.element(k as i64, low).lift::<Element>().scale(c));
        }
    }
    acc
}

/// Re-expands a series with no positive powers of `u` in the basis, through its known order.
pub fn from_inv_u(s: &InvUSeries<Element>, basis: Basis) -> Result<FallingSeries> {
    let coeffs = to_basis(s, basis)?;
    if coeffs.iter().any(|(k, c)| *k < 0 && !c.is_zero()) {
        return Err(Error::Shape("series has positive powers of u".into()));
    }
    Ok(FallingSeries::new(basis, coeffs.into_iter().filter(|(k, _)| *k >= 0).map(|(_, c)| c).collect()))
}

/// `s(u + a)` in the same basis, by iterating `1/(u-1|k) = 1/(u|k) + k/(u|k+1)` and
/// `(u+1|-k) = (u|-k) - k(u|-k-1)` (or their inverses).
pub fn shift_arg(s: &FallingSeries, a: i64) -> FallingSeries {
    let mut c = s.coeffs.clone();
    let n = c.len();
    // forward: d_k = c_k + σ(k-1) c_{k-1}; backward: solves the same relation for c
    let step = |c: &mut Vec<Element>, sigma: i64, forward: bool| {
        if forward {
            for k in (1..n).rev() {
                let add = c[k - 1].scale_int(sigma * (k as i64 - 1));
                c[k].add_assign_ref(&add);
            }
        } else {
            for k in 1..n {
                let sub = c[k - 1].scale_int(sigma * (k as i64 - 1));
                c[k].sub_assign_ref(&sub);
            }
        }
    };
    for _ in 0..a.unsigned_abs() {
        match (s.basis, a < 0) {
            (Basis::Falling, true) => step(&mut c, 1, true),
            (Basis::Falling, false) => step(&mut c, 1, false),
            (Basis::Rising, false) => step(&mut c, -1, true),
            (Basis::Rising, true) => step(&mut c, -1, false),
        }
    }
    FallingSeries::new(s.basis, c)
}

/// `Q*(u) = Σ h*_k/(u|k)` through `k = K`.
pub fn qstar_series(k: u32) -> FallingSeries {
    FallingSeries::new(Basis::Falling, (0..=k as i64).map(Element::hs).collect())
}

/// `R*(u) = Σ (-1)^k e*_k (u|-k)` through `k = K`.
pub fn rstar_series(k: u32) -> FallingSeries {
    FallingSeries::new(Basis::Rising, (0..=k as i64).map(|i| Element::es(i).scale_int(if i % 2 == 0 { 1 } else { -1 })).collect())
}

/// Generators in which a shifted element is written.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Presentation {
    H,
    E,
}

/// `e*_k` in terms of `h*` and `h*_k` in terms of `e*`, for `k ≤ order`, from `Q*(u)R*(u) = 1`.
#[derive(Clone, Debug)]
pub struct ShiftedInverse {
    pub e_in_h: Vec<Element>,
    pub h_in_e: Vec<Element>,
}

impl ShiftedInverse {
    pub fn order(&self) -> usize {
        self.e_in_h.len() - 1
    }
}

/// Solves `Q*(u) · Σ_{k ≤ K} (-1)^k x_k (u|-k) = 1` for the `x_k`, or the mirror problem.
fn solve_inverse(known: &FallingSeries, unknown: Basis, sign: i64, k: u32) -> Vec<Element> {
    let low = -(k as i64);
    let known = to_inv_u(known);
    let mut product = InvUSeries::<Element>::zero(low).add(&known);
    let mut out = vec![Element::one()];
    for n in 1..=k as i64 {
        let c = product.coeff(-n);
        // the new term enters u^-n as ±x_n
        let s = if sign < 0 && n % 2 == 1 { -1 } else { 1 };
        let x = c.scale_int(-s);
        let term = unknown.element(n, low).lift::<Element>().scale(&x.scale_int(s));
        product = product.add(&known.mul(&term));
        out.push(x);
    }
    out
}

static INVERSE_CACHE: Mutex<Option<Arc<ShiftedInverse>>> = Mutex::new(None);

/// Cross-presentation data through order `k`, cached and grown on demand.
pub fn invert_shifted(k: u32) -> Arc<ShiftedInverse> {
    let mut guard = INVERSE_CACHE.lock().unwrap_or_else(|e| e.into_inner());
    if let Some(inv) = guard.as_ref() {
        if inv.order() >= k as usize {
            return inv.clone();
        }
    }
    let k = k.max(8);
    let inv = Arc::new(ShiftedInverse {
        e_in_h: solve_inverse(&qstar_series(k), Basis::Rising, -1, k),
        h_in_e: solve_inverse(&rstar_series(k), Basis::Falling, 1, k),
    });
    *guard = Some(inv.clone());
    inv
}

fn max_index(x: &Element, family: GeneratorFamily) -> u32 {
    x.generators().iter().filter(|g| g.family == family).map(|g| g.index).max().unwrap_or(0)
}

/// Rewrites every `e*` in terms of `h*`.
pub fn to_h_presentation(x: &Element) -> Element {
    let k = max_index(x, GeneratorFamily::EStar);
    if k == 0 {
        return x.clone();
    }
    let inv = invert_shifted(k);
    x.substitute(&|g: Generator| (g.family == GeneratorFamily::EStar).then(|| inv.e_in_h[g.index as usize].clone()))
}

/// Rewrites every `h*` in terms of `e*`.
pub fn to_e_presentation(x: &Element) -> Element {
    let k = max_index(x, GeneratorFamily::HStar);
    if k == 0 {
        return x.clone();
    }
    let inv = invert_shifted(k);
    x.substitute(&|g: Generator| (g.family == GeneratorFamily::HStar).then(|| inv.h_in_e[g.index as usize].clone()))
}

pub fn to_presentation(x: &Element, p: Presentation) -> Element {
    match p {
        Presentation::H => to_h_presentation(x),
        Presentation::E => to_e_presentation(x),
    }
}

/// `to_inv_u(Q*) · to_inv_u(R*)` with `e*` rewritten in `h*`, through `u^-k`; equals `1` when the inversion is right.
pub fn qr_product(k: u32) -> InvUSeries<Element> {
    let q = to_inv_u(&qstar_series(k));
    let r = to_inv_u(&rstar_series(k)).map(to_h_presentation);
    q.mul(&r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_first_terms() {
        let inv = invert_shifted(8);
        assert_eq!(inv.e_in_h[0], Element::one());
        assert_eq!(inv.e_in_h[1], Element::hs(1));
        assert_eq!(inv.h_in_e[1], Element::es(1));
        let p = qr_product(8);
        assert!(p.agrees_with(&InvUSeries::one(-8)), "{p:?}");
    }

    #[test]
    fn presentations_round_trip() {
        for k in 1..7 {
            assert_eq!(to_h_presentation(&to_e_presentation(&Element::hs(k))), Element::hs(k));
            assert_eq!(to_e_presentation(&to_h_presentation(&Element::es(k))), Element::es(k));
        }
    }

    #[test]
    fn shift_matches_expansion() {
        use crate::shifted::laurent::ff_laurent;
        for basis in [Basis::Falling, Basis::Rising] {
            let s = FallingSeries::new(basis, (0..7).map(|k| Element::from_int(k * k - 2)).collect());
            for a in -3i64..=3 {
                let shifted = to_inv_u(&shift_arg(&s, a));
                // s(u+a) directly: basis elements with shifted argument
                let low = -s.order();
                let mut direct = InvUSeries::<Element>::zero(low);
                for (k, c) in s.coeffs.iter().enumerate() {
                    let k = k as i64;
                    let b = match basis {
                        Basis::Falling => ff_laurent(a - k, -k, low),
                        Basis::Rising => ff_laurent(a, -k, low),
                    };
                    direct = direct.add(&b.lift::<Element>().scale(c));
                }
                assert!(shifted.agrees_with(&direct), "{basis:?} a={a}");
            }
        }
    }

    #[test]
    fn shift_examples() {
        let s = FallingSeries::new(Basis::Falling, vec![Element::zero(), Element::zero(), Element::one()]);
        let t = shift_arg(&s, -1);
        assert_eq!(t.coeffs, vec![Element::zero(), Element::zero(), Element::one()]);
        let s = FallingSeries::new(Basis::Falling, vec![Element::zero(), Element::zero(), Element::one(), Element::zero()]);
        assert_eq!(shift_arg(&s, -1).coeff(3), Element::from_int(2));
        let s = FallingSeries::new(Basis::Rising, vec![Element::zero(), Element::zero(), Element::one(), Element::zero()]);
        assert_eq!(shift_arg(&s, 1).coeff(3), Element::from_int(-2));
    }
}
