//! Creation/annihilation operators `Ψ±_k`, the derivation families `DR`/`DQ`, and
//! coefficient-level checkers for the fermion, twisted and reordering identities.
//!
//! Conventions: `Ψ+(v) = Σ Ψ+_k v^k` and `Ψ-(v) = Σ Ψ-_{-k} v^k`, so that
//! `Ψ+_k(a) = Σ_m Q_{k+m} DR_m(a)` and `Ψ-_{-k}(a) = Σ_m R_{k+m} DQ_m(a)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::combinatorics::{straighten, IntegerVector, Partition, StraightenResult};
use crate::error::{Error, Result};
use crate::families::{correlation_function, family_r_table, family_table, schur_h, FamilyTag};
use crate::report::Report;
use crate::ring::{DerivationFamily, Element, GeneratorFamily};
use crate::scalar::{rat, Rational, Ring, Scalar};
use crate::series::{TruncatedSeries, Window};

/// Everything needed to apply `Ψ±` for one correlation factor `f`.
#[derive(Clone, Debug)]
pub struct OperatorContext {
    tag: Option<FamilyTag>,
    order: u32,
    alphabet: GeneratorFamily,
    f: TruncatedSeries<Scalar>,
    f_inv: TruncatedSeries<Scalar>,
    q: TruncatedSeries<Element>,
    r: TruncatedSeries<Element>,
    dr: DerivationFamily,
    dq: DerivationFamily,
}

impl OperatorContext {
    /// Context of a classical family, valid for indices and degrees up to `order`.
    pub fn new(tag: FamilyTag, order: u32) -> Self {
        let mut ctx = OperatorContext::with_correlation(correlation_function(tag, order), tag.generators(), order)
            .expect("classical correlation factors are unital");
        ctx.tag = Some(tag);
        ctx
    }

    /// Context for an arbitrary unital `f` over the alphabet `alphabet`.
    ///
    /// When the alphabet is `h`, the derivations also act on `e`, through `R_k = (-1)^k e_k`.
    pub fn with_correlation(f: TruncatedSeries<Scalar>, alphabet: GeneratorFamily, order: u32) -> Result<Self> {
        let f = f.truncate(order);
        if f.order() < order {
            return Err(Error::WindowOverflow(format!("f known to order {}, context needs {order}", f.order())));
        }
        let f_inv = f.invert()?;
        let q = TruncatedSeries::generic(alphabet, order);
        let r = q.invert()?;
        let with_e = alphabet == GeneratorFamily::H;
        let dr = derivation("DR", alphabet, with_e, Arc::new(f.coeffs().to_vec()), Arc::new(f_inv.coeffs().to_vec()));
        let dq = derivation("DQ", alphabet, with_e, Arc::new(f_inv.coeffs().to_vec()), Arc::new(f.coeffs().to_vec()));
        Ok(OperatorContext {
            tag: None,
            order,
            alphabet,
            f,
            f_inv,
            q,
            r,
            dr,
            dq,
        })
    }

    /// Context for `f(x) = (1 - x)/p(x)` over the generic `Q` alphabet; needs `p(0) = 1`.
    pub fn twisted(p: &[Scalar], order: u32) -> Result<Self> {
        let p_series = TruncatedSeries::new(order, p.to_vec());
        let one_minus_x = TruncatedSeries::new(order, vec![Scalar::from_int(1), Scalar::from_int(-1)]);
        let f = one_minus_x.mul(&p_series.invert()?);
        OperatorContext::with_correlation(f, GeneratorFamily::Q, order)
    }

    pub fn tag(&self) -> Option<FamilyTag> {
        self.tag
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn alphabet(&self) -> GeneratorFamily {
        self.alphabet
    }

    pub fn f(&self) -> &TruncatedSeries<Scalar> {
        &self.f
    }

    pub fn f_inv(&self) -> &TruncatedSeries<Scalar> {
        &self.f_inv
    }

    pub fn q(&self) -> &TruncatedSeries<Element> {
        &self.q
    }

    pub fn r(&self) -> &TruncatedSeries<Element> {
        &self.r
    }

    pub fn dr_family(&self) -> &DerivationFamily {
        &self.dr
    }

    pub fn dq_family(&self) -> &DerivationFamily {
        &self.dq
    }

    fn check_index(&self, top: i64) -> Result<()> {
        if top > self.order as i64 {
            return Err(Error::WindowOverflow(format!("needs index {top}, context order is {}", self.order)));
        }
        Ok(())
    }

    fn degree_or_zero(a: &Element) -> u32 {
        a.degree().unwrap_or(0)
    }

    /// `[DR_0(a), ..., DR_max(a)]`.
    pub fn dr_upto(&self, max: u32, a: &Element) -> Result<Vec<Element>> {
        self.check_index(max as i64)?;
        self.dr.apply_upto(max as usize, a)
    }

    /// `[DQ_0(a), ..., DQ_max(a)]`.
    pub fn dq_upto(&self, max: u32, a: &Element) -> Result<Vec<Element>> {
        self.check_index(max as i64)?;
        self.dq.apply_upto(max as usize, a)
    }

    /// `Ψ+_k(a) = Σ_m Q_{k+m} DR_m(a)`.
    pub fn psi_plus(&self, k: i64, a: &Element) -> Result<Element> {
        Ok(self.vertex_plus(a, k, k)?.pop().map(|x| x.1).unwrap_or_default())
    }

    /// `Ψ-_k(a) = Σ_m R_{m-k} DQ_m(a)`.
    pub fn psi_minus(&self, k: i64, a: &Element) -> Result<Element> {
        Ok(self.vertex_minus(a, -k, -k)?.pop().map(|x| x.1).unwrap_or_default())
    }

    /// Coefficients of `v^k`, `lo ≤ k ≤ hi`, of `Q(v) ∘ DR(v)` applied to `a`.
    pub fn vertex_plus(&self, a: &Element, lo: i64, hi: i64) -> Result<Vec<(i64, Element)>> {
        self.vertex(a, lo, hi, &self.dr, &self.q)
    }

    /// Coefficients of `v^k`, `lo ≤ k ≤ hi`, of `R(v) ∘ DQ(v)` applied to `a`; the `v^k` coefficient is `Ψ-_{-k}(a)`.
    pub fn vertex_minus(&self, a: &Element, lo: i64, hi: i64) -> Result<Vec<(i64, Element)>> {
        self.vertex(a, lo, hi, &self.dq, &self.r)
    }

    fn vertex(
        &self,
        a: &Element,
        lo: i64,
        hi: i64,
        d: &DerivationFamily,
        mult: &TruncatedSeries<Element>,
    ) -> Result<Vec<(i64, Element)>> {
        if a.is_zero() {
            return Ok((lo..=hi).map(|k| (k, Element::zero())).collect());
        }
        let deg = Self::degree_or_zero(a);
        self.check_index(hi + deg as i64)?;
        let ds = d.apply_upto(deg as usize, a)?;
        Ok((lo..=hi)
            .map(|k| {
                let mut acc = Element::zero();
                for (m, dm) in ds.iter().enumerate() {
                    if dm.is_zero() {
                        continue;
                    }
                    let c = mult.coeff(k + m as i64);
                    if !c.is_zero() {
                        acc.add_assign_ref(&(&c * dm));
                    }
                }
                (k, acc)
            })
            .collect())
    }
}

fn derivation(
    name: &'static str,
    alphabet: GeneratorFamily,
    with_e: bool,
    on_q: Arc<Vec<Scalar>>,
    on_r: Arc<Vec<Scalar>>,
) -> DerivationFamily {
    DerivationFamily::new(name, move |m, g| {
        let k = g.index as i64;
        if g.family == alphabet {
            let c = on_q.get(m).unwrap_or_else(|| panic!("{name}_{m} beyond the context order"));
            Some(Element::generator(alphabet, k - m as i64).scale(c))
        } else if with_e && g.family == GeneratorFamily::E {
            // R_k = (-1)^k e_k, and D(u) R(v) = g(v/u) R(v) with the other series
            let c = on_r.get(m).unwrap_or_else(|| panic!("{name}_{m} beyond the context order"));
            let c = if m % 2 == 1 { -c } else { c.clone() };
            Some(Element::e(k - m as i64).scale(&c))
        } else {
            None
        }
    })
}

/// `DR_m(a)` in the context.
pub fn dr_apply(ctx: &OperatorContext, m: u32, a: &Element) -> Result<Element> {
    Ok(ctx.dr_upto(m, a)?.pop().expect("non-empty"))
}

/// `DQ_m(a)` in the context.
pub fn dq_apply(ctx: &OperatorContext, m: u32, a: &Element) -> Result<Element> {
    Ok(ctx.dq_upto(m, a)?.pop().expect("non-empty"))
}

/// A finite linear combination of Schur functions `Σ c_λ s_λ`.
pub type SchurVector = BTreeMap<Partition, Rational>;

fn add_straightened(out: &mut SchurVector, alpha: &IntegerVector, c: &Rational, conj: bool) {
    if let StraightenResult::Signed { sign, partition } = straighten(alpha) {
        let key = if conj { partition.conjugate() } else { partition };
        let v = out.entry(key.clone()).or_insert_with(|| rat(0));
        *v += c * rat(sign as i64);
        if Ring::is_zero(v) {
            out.remove(&key);
        }
    }
}

/// `Ψ+_k(s_λ) = s_(k,λ)`, extended linearly.
pub fn basis_plus(k: i64, v: &SchurVector) -> SchurVector {
    let mut out = SchurVector::new();
    for (lam, c) in v {
        add_straightened(&mut out, &lam.to_vector().prepend(k), c, false);
    }
    out
}

/// `Ψ-_k(s_λ) = (-1)^j s_{(j,λ')'}` with `j = -k`, extended linearly.
pub fn basis_minus(k: i64, v: &SchurVector) -> SchurVector {
    let j = -k;
    let sign = if j.rem_euclid(2) == 0 { rat(1) } else { rat(-1) };
    let mut out = SchurVector::new();
    for (lam, c) in v {
        add_straightened(&mut out, &lam.conjugate().to_vector().prepend(j), &(c * &sign), true);
    }
    out
}

pub fn schur_vector(lambda: &Partition) -> SchurVector {
    SchurVector::from([(lambda.clone(), rat(1))])
}

/// `Σ c_λ s_λ` written in `h` through Jacobi–Trudi.
pub fn schur_vector_to_element(v: &SchurVector) -> Element {
    let mut out = Element::zero();
    for (lam, c) in v {
        out.add_scaled(&schur_h(&lam.to_vector()), &Scalar::from(c.clone()));
    }
    out
}

/// `Ψ+_k(s_λ)` in the Schur context, as an element over `h`.
pub fn psi_plus_basis(k: i64, lambda: &Partition) -> Element {
    schur_vector_to_element(&basis_plus(k, &schur_vector(lambda)))
}

/// `Ψ-_k(s_λ)` in the Schur context, as an element over `h`.
pub fn psi_minus_basis(k: i64, lambda: &Partition) -> Element {
    schur_vector_to_element(&basis_minus(k, &schur_vector(lambda)))
}

/// Form of the mixed relation checked by [`check_fermion`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MixedForm {
    /// `Ψ-_k Ψ+_l + Ψ+_{l+1} Ψ-_{k+1} = δ_{k,l}`, the coefficient form of the mixed generating-function relation.
    Staggered,
    /// `Ψ-_k Ψ+_l + Ψ+_l Ψ-_k = δ_{-k,l}`, with equal indices in both orders.
    SameIndex,
}

impl MixedForm {
    pub fn name(self) -> &'static str {
        match self {
            MixedForm::Staggered => "staggered",
            MixedForm::SameIndex => "same-index",
        }
    }
}

fn sv_add(a: &SchurVector, b: &SchurVector) -> SchurVector {
    let mut out = a.clone();
    for (k, c) in b {
        let v = out.entry(k.clone()).or_insert_with(|| rat(0));
        *v += c;
        if Ring::is_zero(v) {
            out.remove(k);
        }
    }
    out
}

fn sv_text(v: &SchurVector) -> String {
    if v.is_empty() {
        return "0".into();
    }
    v.iter().map(|(k, c)| format!("{c}*s({k})")).collect::<Vec<_>>().join(" + ")
}

/// Checks the three anticommutation relations on every `s_λ`, `|λ| ≤ n`, `k, l ∈ [-w, w]`,
/// using the straightening action.
pub fn check_fermion(n: u32, w: i64, mixed: MixedForm) -> Report {
    let lambdas = Partition::up_to(n, usize::MAX);
    let mut cases = Vec::new();
    for lam in &lambdas {
        for k in -w..=w {
            for l in -w..=w {
                cases.push((lam.clone(), k, l));
            }
        }
    }
    let outcomes: Vec<Vec<Option<Value>>> = cases
        .par_iter()
        .map(|(lam, k, l)| {
            let (k, l) = (*k, *l);
            let s = schur_vector(lam);
            let fail = |rel: &str, lhs: &SchurVector, rhs: &SchurVector| {
                (lhs != rhs).then(|| json!({"relation": rel, "k": k, "l": l, "lambda": lam.to_string(), "lhs": sv_text(lhs), "rhs": sv_text(rhs)}))
            };
            let zero = SchurVector::new();
            let pp = sv_add(&basis_plus(k, &basis_plus(l, &s)), &basis_plus(l - 1, &basis_plus(k + 1, &s)));
            let mm = sv_add(&basis_minus(k, &basis_minus(l, &s)), &basis_minus(l + 1, &basis_minus(k - 1, &s)));
            let (mixed_lhs, delta) = match mixed {
                MixedForm::Staggered => (
                    sv_add(&basis_minus(k, &basis_plus(l, &s)), &basis_plus(l + 1, &basis_minus(k + 1, &s))),
                    k == l,
                ),
                MixedForm::SameIndex => (
                    sv_add(&basis_minus(k, &basis_plus(l, &s)), &basis_plus(l, &basis_minus(k, &s))),
                    -k == l,
                ),
            };
            let rhs = if delta { s.clone() } else { zero.clone() };
            vec![fail("plus-plus", &pp, &zero), fail("minus-minus", &mm, &zero), fail(mixed.name(), &mixed_lhs, &rhs)]
        })
        .collect();
    let mut report = Report::new("fermion");
    report.extend(outcomes.into_iter().flatten());
    report
}

/// Monomials `Q_μ1 Q_μ2 ...` of the alphabet for all partitions `|μ| ≤ n`.
pub fn monomial_basis(alphabet: GeneratorFamily, n: u32) -> Vec<Element> {
    Partition::up_to(n, usize::MAX)
        .iter()
        .map(|mu| mu.parts().iter().fold(Element::one(), |acc, &p| &acc * &Element::generator(alphabet, p as i64)))
        .collect()
}

/// Coefficient-wise check of the twisted relations for `f = (1 - x)/p(x)`:
///
/// ```text
/// u p(v/u) Ψ±(u)Ψ±(v) + v p(u/v) Ψ±(v)Ψ±(u) = 0
/// v p(u/v) Ψ-(u)Ψ+(v) + u p(v/u) Ψ+(v)Ψ-(u) = p(1)^2 δ(u^-1, v^-1)
/// ```
///
/// on monomials of degree ≤ `n`, coefficients `u^a v^b` with `|a|, |b| ≤ w`.
pub fn check_twisted(p: &[Scalar], n: u32, w: i64) -> Result<Report> {
    if p.is_empty() || !p[0].is_one() {
        return Err(Error::NonUnit);
    }
    let dp = p.len() as i64 - 1;
    let order = n + 2 * (w + dp) as u32 + 1;
    let ctx = OperatorContext::twisted(p, order)?;
    let p1 = p.iter().fold(Scalar::default(), |a, c| &a + c);
    let p1sq = &p1 * &p1;
    let basis = monomial_basis(GeneratorFamily::Q, n);
    let mut cases = Vec::new();
    for (bi, x) in basis.iter().enumerate() {
        for a in -w..=w {
            for b in -w..=w {
                cases.push((bi, x, a, b));
            }
        }
    }
    let plus = |k: i64, x: &Element| ctx.psi_plus(k, x);
    // Ψ- coefficient of u^c is Ψ-_{-c}
    let minus = |c: i64, x: &Element| ctx.psi_minus(-c, x);
    let outcomes: Result<Vec<Vec<Option<Value>>>> = cases
        .par_iter()
        .map(|&(bi, x, a, b)| {
            let mut pp = Element::zero();
            let mut mm = Element::zero();
            let mut mixed = Element::zero();
            for (i, pi) in p.iter().enumerate() {
                let i = i as i64;
                if Ring::is_zero(pi) {
                    continue;
                }
                let t1 = plus(a - 1 + i, &plus(b - i, x)?)?;
                let t2 = plus(b - 1 + i, &plus(a - i, x)?)?;
                pp.add_scaled(&(&t1 + &t2), pi);
                let t1 = minus(a - 1 + i, &minus(b - i, x)?)?;
                let t2 = minus(b - 1 + i, &minus(a - i, x)?)?;
                mm.add_scaled(&(&t1 + &t2), pi);
                let t1 = minus(a - i, &plus(b - 1 + i, x)?)?;
                let t2 = plus(b - i, &minus(a - 1 + i, x)?)?;
                mixed.add_scaled(&(&t1 + &t2), pi);
            }
            let rhs = if a + b == 1 { x.scale(&p1sq) } else { Element::zero() };
            let fail = |rel: &str, lhs: &Element, rhs: &Element| {
                (lhs != rhs).then(|| json!({"relation": rel, "a": a, "b": b, "basis": bi, "x": x.to_string(), "lhs": lhs.to_string(), "rhs": rhs.to_string()}))
            };
            Ok(vec![
                fail("plus-plus", &pp, &Element::zero()),
                fail("minus-minus", &mm, &Element::zero()),
                fail("mixed", &mixed, &rhs),
            ])
        })
        .collect();
    let mut report = Report::new("twisted");
    report.extend(outcomes?.into_iter().flatten());
    Ok(report)
}

/// `Ψ+_k(Q_λ) = Q_(k,λ)` and `Ψ-_{-k}(R_λ) = R_(k,λ)` with the operators taken from the
/// decomposition, comparing the `l`- and `(l+1)`-variable tables of order `n`.
pub fn check_normal_order(tag: FamilyTag, l: usize, n: u32) -> Result<Report> {
    let ctx = OperatorContext::new(tag, n);
    let top = Window::full(l + 1, n);
    let (q_top, r_top) = (family_table(tag, &top)?, family_r_table(tag, &top)?);
    let base = if l == 0 {
        None
    } else {
        let w = Window::full(l, n);
        Some((family_table(tag, &w)?, family_r_table(tag, &w)?))
    };
    let vectors = top.vectors();
    let outcomes: Result<Vec<Vec<Option<Value>>>> = vectors
        .par_iter()
        .map(|v| {
            let (k, lam) = (v[0], &v[1..]);
            let (qb, rb) = match &base {
                None => (Element::one(), Element::one()),
                Some((qt, rt)) => (qt.get(lam)?, rt.get(lam)?),
            };
            let plus = ctx.psi_plus(k, &qb)?;
            let minus = ctx.psi_minus(-k, &rb)?;
            let (qe, re) = (q_top.get(v)?, r_top.get(v)?);
            let fail = |side: &str, lhs: &Element, rhs: &Element| {
                (lhs != rhs).then(|| json!({"family": tag.name(), "side": side, "lambda": v, "lhs": lhs.to_string(), "rhs": rhs.to_string()}))
            };
            Ok(vec![fail("plus", &plus, &qe), fail("minus", &minus, &re)])
        })
        .collect();
    let mut report = Report::new("normal-order");
    report.extend(outcomes?.into_iter().flatten());
    Ok(report)
}

/// Checks the four normal-reordering identities coefficient-wise on `x`, `|a|, |b| ≤ w`:
///
/// ```text
/// Ψ+_a Ψ+_b   = Σ f_r  Q_{a+r+p} Q_{b-r+q} DR_p DR_q
/// Ψ-_{-a}Ψ-_{-b} = Σ f_r  R_{a+r+p} R_{b-r+q} DQ_p DQ_q
/// Ψ+_a Ψ-_{-b}   = Σ f̃_r Q_{a+r+p} R_{b-r+q} DR_p DQ_q
/// Ψ-_{-b}Ψ+_a   = Σ f̃_r Q_{a-r+p} R_{b+r+q} DR_p DQ_q
/// ```
pub fn check_reordering(ctx: &OperatorContext, xs: &[Element], w: i64) -> Result<Report> {
    let mut cases = Vec::new();
    for (xi, x) in xs.iter().enumerate() {
        for a in -w..=w {
            for b in -w..=w {
                cases.push((xi, x, a, b));
            }
        }
    }
    let outcomes: Result<Vec<Vec<Option<Value>>>> = cases
        .par_iter()
        .map(|&(xi, x, a, b)| {
            let d = x.degree().unwrap_or(0);
            let dr = ctx.dr_upto(d, x)?;
            let dq = ctx.dq_upto(d, x)?;
            let mut drdr = vec![vec![Element::zero(); d as usize + 1]; d as usize + 1];
            let mut dqdq = drdr.clone();
            let mut drdq = drdr.clone();
            for qd in 0..=d as usize {
                let a1 = ctx.dr_upto(d, &dr[qd])?;
                let a2 = ctx.dq_upto(d, &dq[qd])?;
                let a3 = ctx.dr_upto(d, &dq[qd])?;
                for pd in 0..=d as usize {
                    drdr[pd][qd] = a1[pd].clone();
                    dqdq[pd][qd] = a2[pd].clone();
                    drdq[pd][qd] = a3[pd].clone();
                }
            }
            let reorder = |g: &TruncatedSeries<Scalar>, m1: &TruncatedSeries<Element>, m2: &TruncatedSeries<Element>, dd: &Vec<Vec<Element>>, s1: i64, s2: i64| -> Result<Element> {
                let mut acc = Element::zero();
                let rmax = ctx.order() as i64;
                for r in 0..=rmax {
                    let gr = g.coeff(r);
                    if Ring::is_zero(&gr) {
                        continue;
                    }
                    for (pd, row) in dd.iter().enumerate() {
                        for (qd, term) in row.iter().enumerate() {
                            if term.is_zero() {
                                continue;
                            }
                            let i1 = a + s1 * r + pd as i64;
                            let i2 = b + s2 * r + qd as i64;
                            if i1 < 0 || i2 < 0 {
                                continue;
                            }
                            ctx.check_index(i1.max(i2))?;
                            acc.add_scaled(&(&(&m1.coeff(i1) * &m2.coeff(i2)) * term), &gr);
                        }
                    }
                }
                Ok(acc)
            };
            let l11 = ctx.psi_plus(a, &ctx.psi_plus(b, x)?)?;
            let r11 = reorder(ctx.f(), ctx.q(), ctx.q(), &drdr, 1, -1)?;
            let l12 = ctx.psi_minus(-a, &ctx.psi_minus(-b, x)?)?;
            let r12 = reorder(ctx.f(), ctx.r(), ctx.r(), &dqdq, 1, -1)?;
            let l13 = ctx.psi_plus(a, &ctx.psi_minus(-b, x)?)?;
            let r13 = reorder(ctx.f_inv(), ctx.q(), ctx.r(), &drdq, 1, -1)?;
            let l14 = ctx.psi_minus(-b, &ctx.psi_plus(a, x)?)?;
            let r14 = reorder(ctx.f_inv(), ctx.q(), ctx.r(), &drdq, -1, 1)?;
            let fail = |id: &str, lhs: &Element, rhs: &Element| {
                (lhs != rhs).then(|| json!({"identity": id, "a": a, "b": b, "x": xi, "lhs": lhs.to_string(), "rhs": rhs.to_string()}))
            };
            Ok(vec![fail("plus-plus", &l11, &r11), fail("minus-minus", &l12, &r12), fail("plus-minus", &l13, &r13), fail("minus-plus", &l14, &r14)])
        })
        .collect();
    let mut report = Report::new("reordering");
    report.extend(outcomes?.into_iter().flatten());
    Ok(report)
}

/// `Σ_{p+q=m} DR_p DQ_q (x) = δ_{m,0} x` for `m ≤ max`.
pub fn check_dr_dq_inverse(ctx: &OperatorContext, xs: &[Element], max: u32) -> Result<Report> {
    let mut report = Report::new("dr-dq-inverse");
    for (xi, x) in xs.iter().enumerate() {
        let dq = ctx.dq_upto(max, x)?;
        let mut total = vec![Element::zero(); max as usize + 1];
        for (q, y) in dq.iter().enumerate() {
            let dr = ctx.dr_upto(max - q as u32, y)?;
            for (p, z) in dr.iter().enumerate() {
                total[p + q].add_assign_ref(z);
            }
        }
        for (m, t) in total.iter().enumerate() {
            let expect = if m == 0 { x.clone() } else { Element::zero() };
            report.record((t != &expect).then(|| json!({"x": xi, "m": m, "lhs": t.to_string(), "rhs": expect.to_string()})));
        }
    }
    Ok(report)
}

/// Compares `Ψ+_k` from the decomposition with the straightening action on `s_λ`, and the same for `Ψ-_k`.
pub fn check_basis_agreement(n: u32, k_lo: i64, k_hi: i64) -> Result<Report> {
    let ctx = OperatorContext::new(FamilyTag::Schur, n + k_hi.max(-k_lo).max(0) as u32 + 1);
    let lambdas = Partition::up_to(n, usize::MAX);
    let mut report = Report::new("basis-agreement");
    for lam in &lambdas {
        let s = schur_h(&lam.to_vector());
        let plus = ctx.vertex_plus(&s, k_lo, k_hi)?;
        let minus = ctx.vertex_minus(&s, k_lo, k_hi)?;
        for ((k, p), (_, m)) in plus.iter().zip(&minus) {
            let bp = psi_plus_basis(*k, lam);
            report.record((p != &bp).then(|| json!({"side": "plus", "k": k, "lambda": lam.to_string(), "lhs": p.to_string(), "rhs": bp.to_string()})));
            // v^k coefficient of the minus series is Ψ-_{-k}
            let bm = psi_minus_basis(-k, lam);
            report.record((m != &bm).then(|| json!({"side": "minus", "k": -k, "lambda": lam.to_string(), "lhs": m.to_string(), "rhs": bm.to_string()})));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn psi_plus_basis_examples() {
        assert_eq!(psi_plus_basis(3, &Partition::empty()), Element::h(3));
        assert!(psi_plus_basis(1, &p(&[2])).is_zero());
        assert_eq!(
            psi_plus_basis(1, &p(&[3])),
            -&(&Element::h(2).pow(2) - &(&Element::h(1) * &Element::h(3)))
        );
    }

    #[test]
    fn psi_minus_basis_examples() {
        assert_eq!(psi_minus_basis(0, &Partition::empty()), Element::one());
        assert_eq!(psi_minus_basis(-2, &Partition::empty()), &Element::h(1).pow(2) - &Element::h(2));
    }

    #[test]
    fn derivation_examples() {
        let ctx = OperatorContext::new(FamilyTag::Schur, 8);
        assert_eq!(dq_apply(&ctx, 2, &Element::h(5)).unwrap(), Element::h(3));
        for k in 1..6 {
            assert_eq!(dq_apply(&ctx, 1, &Element::e(k)).unwrap(), Element::e(k - 1));
            assert_eq!(dr_apply(&ctx, 1, &Element::h(k)).unwrap(), -&Element::h(k - 1));
            for m in 2..5 {
                assert!(dr_apply(&ctx, m, &Element::h(k)).unwrap().is_zero());
                assert!(dq_apply(&ctx, m, &Element::e(k)).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn vertex_examples() {
        let ctx = OperatorContext::new(FamilyTag::Schur, 6);
        let v = ctx.vertex_plus(&Element::one(), -2, 4).unwrap();
        for (k, c) in v {
            assert_eq!(c, Element::h(k));
        }
        assert!(ctx.psi_plus(1, &Element::h(2)).unwrap().is_zero());
    }

    #[test]
    fn fermion_small() {
        assert!(check_fermion(0, 0, MixedForm::Staggered).passed());
        assert!(check_fermion(4, 2, MixedForm::Staggered).passed());
    }

    #[test]
    fn same_index_mixed_form_fails_on_vacuum() {
        // Ψ-_0Ψ+_0(1) + Ψ+_0Ψ-_0(1) = 2, not 1
        let s = schur_vector(&Partition::empty());
        let lhs = sv_add(&basis_minus(0, &basis_plus(0, &s)), &basis_plus(0, &basis_minus(0, &s)));
        assert_eq!(lhs, SchurVector::from([(Partition::empty(), rat(2))]));
        assert!(!check_fermion(0, 0, MixedForm::SameIndex).passed());
    }

    #[test]
    fn twisted_schur_and_hl() {
        assert!(check_twisted(&[Scalar::from_int(1)], 3, 2).unwrap().passed());
        let hl = [Scalar::from_int(1), -&Scalar::t()];
        assert!(check_twisted(&hl, 2, 2).unwrap().passed());
    }

    #[test]
    fn normal_order_small() {
        for tag in FamilyTag::ALL {
            for l in 0..=1 {
                let r = check_normal_order(tag, l, 4).unwrap();
                assert!(r.passed(), "{tag} l={l}: {:?}", r.failures);
            }
        }
    }

    #[test]
    fn reordering_and_inverse() {
        for tag in FamilyTag::ALL {
            let ctx = OperatorContext::new(tag, 12);
            let xs = [Element::one(), Element::generator(tag.generators(), 2)];
            let r = check_reordering(&ctx, &xs, 3).unwrap();
            assert!(r.passed(), "{tag}: {:?}", r.failures);
            let ys = [Element::generator(tag.generators(), 3), monomial_basis(tag.generators(), 4)[5].clone()];
            assert!(check_dr_dq_inverse(&ctx, &ys, 6).unwrap().passed());
        }
    }

    #[test]
    fn basis_routes_agree() {
        let r = check_basis_agreement(4, -3, 5).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }
}
