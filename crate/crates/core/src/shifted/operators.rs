//! `DR*`, `DQ*` and the shifted creation/annihilation operators.
//!
//! Conventions: `Ψ+(v) = Σ_k Ψ+_k/(v|k)` and `Ψ-(v) = Σ_k Ψ-_{-k} (v|-k)`, matching
//! `Ψ+_k(s*_λ) = s*_(k,λ)` and `Ψ-_{-k}(s*_λ) = (-1)^k s*_(k,λ')'`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::laurent::{ff_laurent, to_basis, Basis, InvUSeries};
use super::schur::{qstar_multivar, rstar_multivar, shifted_schur};
use super::series::Presentation;
use crate::combinatorics::{binomial, factorial, straighten, IntegerVector, Partition, StraightenResult};
use crate::error::{Error, Result};
use crate::operators::{check_fermion, MixedForm};
use crate::report::Report;
use crate::ring::{Element, GeneratorFamily, Monomial};
use crate::scalar::{Rational, Scalar};
use crate::series::Window;

/// Product of two polynomials in `(u|m)` (`sign = 1`) or `(u+1)...(u+m)` (`sign = -1`) coordinates:
/// `b_a b_b = Σ_k sign^k C(a,k) C(b,k) k! b_{a+b-k}`.
fn basis_mul(x: &[Element], y: &[Element], sign: i64) -> Vec<Element> {
    if x.is_empty() || y.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Element::zero(); x.len() + y.len() - 1];
    for (a, xa) in x.iter().enumerate() {
        if xa.is_zero() {
            continue;
        }
        for (b, yb) in y.iter().enumerate() {
            if yb.is_zero() {
                continue;
            }
            let p = xa * yb;
            for k in 0..=a.min(b) {
                let mut c: BigInt = binomial(a as u64, k as u64) * binomial(b as u64, k as u64) * factorial(k as u64);
                if sign < 0 && k % 2 == 1 {
                    c = -c;
                }
                out[a + b - k].add_scaled(&p, &Scalar::from(Rational::from_integer(c)));
            }
        }
    }
    out
}

fn star_series(
    x: &Element,
    family: GeneratorFamily,
    sign: i64,
    image: impl Fn(i64) -> [Element; 2],
) -> Result<Vec<Element>> {
    let mut out: Vec<Element> = Vec::new();
    let mut cache: BTreeMap<(u32, u32), Vec<Element>> = BTreeMap::new();
    for (m, c) in x.terms() {
        let mut acc = vec![Element::constant(c.clone())];
        for &(g, e) in m.factors() {
            if g.family != family {
                return Err(Error::MissingRule(format!("{g} outside the {} generators", family.prefix())));
            }
            let pw = cache.entry((g.index, e)).or_insert_with(|| {
                let base = image(g.index as i64).to_vec();
                (1..e).fold(base.clone(), |p, _| basis_mul(&p, &base, sign))
            });
            acc = basis_mul(&acc, pw, sign);
        }
        if out.len() < acc.len() {
            out.resize(acc.len(), Element::zero());
        }
        for (o, a) in out.iter_mut().zip(&acc) {
            o.add_assign_ref(a);
        }
    }
    while out.last().is_some_and(|e| e.is_zero()) {
        out.pop();
    }
    if out.is_empty() {
        out.push(Element::zero());
    }
    Ok(out)
}

/// `[DR*_0(x), DR*_1(x), ...]`, from `DR*(u)(h*_k) = τ(h*_k) - (u+1)h*_{k-1}` extended multiplicatively.
pub fn drstar_series(x: &Element) -> Result<Vec<Element>> {
    star_series(x, GeneratorFamily::HStar, 1, |k| {
        [&Element::hs(k) + &Element::hs(k - 1).scale_int(k - 2), -&Element::hs(k - 1)]
    })
}

/// `[DQ*_0(x), DQ*_1(x), ...]`, from `DQ*(u)(e*_k) = τ^-1(e*_k) + u e*_{k-1}` extended multiplicatively.
pub fn dqstar_series(x: &Element) -> Result<Vec<Element>> {
    star_series(x, GeneratorFamily::EStar, -1, |k| {
        [&Element::es(k) + &Element::es(k - 1).scale_int(k - 2), Element::es(k - 1)]
    })
}

pub fn drstar_apply(m: usize, x: &Element) -> Result<Element> {
    Ok(drstar_series(x)?.get(m).cloned().unwrap_or_default())
}

pub fn dqstar_apply(m: usize, x: &Element) -> Result<Element> {
    Ok(dqstar_series(x)?.get(m).cloned().unwrap_or_default())
}

fn vertex(
    x: &Element,
    lo: i64,
    hi: i64,
    d: Vec<Element>,
    d_basis: impl Fn(i64) -> InvUSeries<Rational>,
    gen: impl Fn(i64) -> Element,
    basis: Basis,
) -> Result<Vec<(i64, Element)>> {
    if x.is_zero() {
        return Ok((lo..=hi).map(|k| (k, Element::zero())).collect());
    }
    let deg = d.len() as i64 - 1;
    let low = -(hi.max(-deg) + deg);
    let mut dv = InvUSeries::<Element>::zero(super::laurent::EXACT);
    for (m, c) in d.iter().enumerate() {
        if !c.is_zero() {
            dv = dv.add(&d_basis(m as i64).lift::<Element>().scale(c));
        }
    }
    let mut g = InvUSeries::<Element>::zero(low);
    for k in 0..=-low {
        let c = gen(k);
        if !c.is_zero() {
            g = g.add(&basis.element(k, low).lift::<Element>().scale(&c));
        }
    }
    let prod = g.mul(&dv).truncate(-hi.max(-deg));
    let coeffs: BTreeMap<i64, Element> = to_basis(&prod, basis)?.into_iter().collect();
    Ok((lo..=hi).map(|k| (k, coeffs.get(&k).cloned().unwrap_or_default())).collect())
}

/// Coefficients of `1/(v|k)`, `lo ≤ k ≤ hi`, in `Q*(v) ∘ DR*(v)` applied to an `h*` element: `Ψ+_k(x)`.
pub fn star_vertex_plus(x: &Element, lo: i64, hi: i64) -> Result<Vec<(i64, Element)>> {
    let d = drstar_series(x)?;
    vertex(x, lo, hi, d, |m| ff_laurent(0, m, super::laurent::EXACT), Element::hs, Basis::Falling)
}

/// Coefficients of `(v|-k)`, `lo ≤ k ≤ hi`, in `R*(v) ∘ DQ*(v)` applied to an `e*` element: `Ψ-_{-k}(x)`.
pub fn star_vertex_minus(x: &Element, lo: i64, hi: i64) -> Result<Vec<(i64, Element)>> {
    let d = dqstar_series(x)?;
    let sign = |k: i64| if k % 2 == 0 { 1 } else { -1 };
    // DQ*(v) = Σ DQ*_m (v+1)...(v+m) = Σ DQ*_m (v+m|m)
    vertex(x, lo, hi, d, |m| ff_laurent(m, m, super::laurent::EXACT), |k| Element::es(k).scale_int(sign(k)), Basis::Rising)
}

/// `Ψ+_k(s*_λ) = s*_(k,λ)` via straightening.
pub fn psi_star_plus(k: i64, lambda: &Partition, p: Presentation) -> Element {
    shifted_schur(&lambda.to_vector().prepend(k), p)
}

/// `Ψ-_k(s*_λ) = (-1)^j s*_(j,λ')'` with `j = -k`, via straightening.
pub fn psi_star_minus(k: i64, lambda: &Partition, p: Presentation) -> Element {
    let j = -k;
    match straighten(&lambda.conjugate().to_vector().prepend(j)) {
        StraightenResult::Zero => Element::zero(),
        StraightenResult::Signed { sign, partition } => {
            let s = sign as i64 * if j.rem_euclid(2) == 0 { 1 } else { -1 };
            shifted_schur(&partition.conjugate().to_vector(), p).scale_int(s)
        }
    }
}

/// Decomposition operators against the straightening action on every `s*_λ`, `|λ| ≤ n`, `k ∈ [-w, w]`.
pub fn check_star_agreement(n: u32, w: i64) -> Result<Report> {
    let lambdas = Partition::up_to(n, usize::MAX);
    let outcomes: Result<Vec<Vec<Option<Value>>>> = lambdas
        .par_iter()
        .map(|lam| {
            let mut out = Vec::new();
            let sh = shifted_schur(&lam.to_vector(), Presentation::H);
            let se = shifted_schur(&lam.to_vector(), Presentation::E);
            let plus = star_vertex_plus(&sh, -w, w)?;
            let minus = star_vertex_minus(&se, -w, w)?;
            for ((k, p), (_, m)) in plus.iter().zip(&minus) {
                let bp = psi_star_plus(*k, lam, Presentation::H);
                out.push((p != &bp).then(|| json!({"side": "plus", "k": k, "lambda": lam.to_string(), "lhs": p.to_string(), "rhs": bp.to_string()})));
                let bm = psi_star_minus(-k, lam, Presentation::E);
                out.push((m != &bm).then(|| json!({"side": "minus", "k": -k, "lambda": lam.to_string(), "lhs": m.to_string(), "rhs": bm.to_string()})));
            }
            Ok(out)
        })
        .collect();
    let mut report = Report::new("shifted-agreement");
    report.extend(outcomes?.into_iter().flatten());
    Ok(report)
}

/// `Q*(v) ∘ DR*(v)` applied to the `l`-variable table gives the `(l+1)`-variable table, and
/// likewise `R*(v) ∘ DQ*(v)` on the `R*` tables, over the full windows of order `n`.
pub fn check_star_decomposition(l: usize, n: u32) -> Result<Report> {
    let top = Window::full(l + 1, n);
    let (q_top, r_top) = (qstar_multivar(&top)?, rstar_multivar(&top)?);
    let base = if l == 0 {
        None
    } else {
        let w = Window::full(l, n);
        Some((qstar_multivar(&w)?, rstar_multivar(&w)?))
    };
    let tails: Vec<Vec<i64>> = match &base {
        None => vec![vec![]],
        Some((q, _)) => q.window().vectors(),
    };
    let n = n as i64;
    let outcomes: Result<Vec<Vec<Option<Value>>>> = tails
        .par_iter()
        .map(|lam| {
            let (qb, rb) = match &base {
                None => (Element::one(), Element::one()),
                Some((q, r)) => (q.get(lam)?, r.get(lam)?),
            };
            let plus = star_vertex_plus(&qb, -n, n)?;
            let minus = star_vertex_minus(&rb, -n, n)?;
            let mut out = Vec::new();
            for ((k, p), (_, m)) in plus.iter().zip(&minus) {
                let v = IntegerVector(lam.clone()).prepend(*k);
                if !top.contains(v.entries()) {
                    continue;
                }
                let (qe, re) = (q_top.get(v.entries())?, r_top.get(v.entries())?);
                out.push((p != &qe).then(|| json!({"side": "plus", "lambda": v.0, "lhs": p.to_string(), "rhs": qe.to_string()})));
                out.push((m != &re).then(|| json!({"side": "minus", "lambda": v.0, "lhs": m.to_string(), "rhs": re.to_string()})));
            }
            Ok(out)
        })
        .collect();
    let mut report = Report::new("shifted-decomposition");
    report.extend(outcomes?.into_iter().flatten());
    Ok(report)
}

/// Shifted operator checks: the three relations on `s*_λ` (`|λ| ≤ k`, indices in `[-w, w]`), the
/// agreement of the decomposition with the straightening action, and the decomposition on the
/// multivariate tables with at most two base variables.
pub fn check_shifted(k: u32, w: i64, mixed: MixedForm) -> Result<Report> {
    let mut report = Report::new("shifted-relations");
    // on the s*-basis the action is the classical straightening action
    report.merge(check_fermion(k, w, mixed));
    report.merge(check_star_agreement(k, w)?);
    for l in 0..=2 {
        report.merge(check_star_decomposition(l, k)?);
    }
    Ok(report)
}

/// The monomial `Π h*_{λ_i}`.
pub fn hstar_monomial(parts: &[u32]) -> Element {
    let m = Monomial::from_factors(parts.iter().filter(|&&p| p > 0).map(|&p| (crate::ring::Generator::new(GeneratorFamily::HStar, p), 1)));
    Element::term(m, Scalar::from_int(1))
}
