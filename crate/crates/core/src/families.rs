//! Jacobi–Trudi determinants, Pfaffians, Schur Q-functions and the evaluation oracles
//! (bialternant, Hall–Littlewood symmetrization, product generating functions).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::combinatorics::{IntegerVector, Partition};
use crate::error::{Error, Result};
use crate::ring::{Element, Generator, GeneratorFamily};
use crate::scalar::{rat, Rational, Ring, Scalar};
use crate::series::{correlation_expand, CoeffTable, TruncatedSeries, Window};

/// The three classical correlation factors.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FamilyTag {
    /// `f(x) = 1 - x`
    Schur,
    /// `f(x) = (1 - x)/(1 + x)`
    SchurQ,
    /// `f(x) = (1 - x)/(1 - t x)`
    HallLittlewood,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 3] = [FamilyTag::Schur, FamilyTag::SchurQ, FamilyTag::HallLittlewood];

    /// Alphabet of the one-variable coefficients `Q_k`.
    pub fn generators(self) -> GeneratorFamily {
        match self {
            FamilyTag::Schur => GeneratorFamily::H,
            FamilyTag::SchurQ | FamilyTag::HallLittlewood => GeneratorFamily::Q,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Schur => "schur",
            FamilyTag::SchurQ => "schur-q",
            FamilyTag::HallLittlewood => "hall-littlewood",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "schur" => Ok(FamilyTag::Schur),
            "schur-q" | "schurq" => Ok(FamilyTag::SchurQ),
            "hall-littlewood" | "hl" => Ok(FamilyTag::HallLittlewood),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown family {s:?}") }),
        }
    }
}

/// Expansion of the family's `f` through `x^N`.
pub fn correlation_function(tag: FamilyTag, order: u32) -> TruncatedSeries<Scalar> {
    TruncatedSeries::from_fn(order, |k| match (tag, k) {
        (_, 0) => Scalar::from_int(1),
        (FamilyTag::Schur, 1) => Scalar::from_int(-1),
        (FamilyTag::Schur, _) => Scalar::from_int(0),
        (FamilyTag::SchurQ, k) => Scalar::from_int(if k % 2 == 0 { 2 } else { -2 }),
        // (1 - x) Σ t^k x^k
        (FamilyTag::HallLittlewood, k) => &Scalar::t().pow(k) - &Scalar::t().pow(k - 1),
    })
}

/// `Q(u) = Σ Q_k u^k` in the family's alphabet.
pub fn q_series(tag: FamilyTag, order: u32) -> TruncatedSeries<Element> {
    TruncatedSeries::generic(tag.generators(), order)
}

/// `R(u) = Q(u)^{-1}`.
pub fn r_series(tag: FamilyTag, order: u32) -> TruncatedSeries<Element> {
    q_series(tag, order).invert().expect("Q(u) is unital")
}

/// The coefficient table of `Π_{i<j} f(u_j/u_i) Π Q(u_i)` on `window`.
pub fn family_table(tag: FamilyTag, window: &Window) -> Result<CoeffTable> {
    correlation_expand(&correlation_function(tag, window.order), &q_series(tag, window.order), window)
}

/// The same product with `R(u_i)` in place of `Q(u_i)`.
pub fn family_r_table(tag: FamilyTag, window: &Window) -> Result<CoeffTable> {
    correlation_expand(&correlation_function(tag, window.order), &r_series(tag, window.order), window)
}

/// Division-free determinant by expansion over column subsets.
pub fn det<T: Ring>(m: &[Vec<T>]) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    let mut dp: Vec<Option<T>> = vec![None; 1 << n];
    dp[0] = Some(T::one());
    for mask in 0usize..(1 << n) {
        let Some(v) = dp[mask].take() else { continue };
        let row = mask.count_ones() as usize;
        if row == n {
            return v;
        }
        if v.is_zero() {
            continue;
        }
        for c in 0..n {
            if mask & (1 << c) != 0 || m[row][c].is_zero() {
                continue;
            }
            let above = (mask >> (c + 1)).count_ones();
            let mut term = v.mul(&m[row][c]);
            if above % 2 == 1 {
                term = term.neg();
            }
            let slot = &mut dp[mask | (1 << c)];
            match slot {
                Some(x) => x.add_assign(&term),
                None => *slot = Some(term),
            }
        }
    }
    T::zero()
}

/// `s_α = det[h_{α_i - i + j}]`.
pub fn schur_h(alpha: &IntegerVector) -> Element {
    let a = alpha.entries();
    let l = a.len();
    let m: Vec<Vec<Element>> = (0..l)
        .map(|i| (0..l).map(|j| Element::h(a[i] - i as i64 + j as i64)).collect())
        .collect();
    det(&m)
}

/// `s_λ = det[e_{λ'_i - i + j}]`.
pub fn schur_e(lambda: &Partition) -> Element {
    let c = lambda.conjugate();
    let l = c.len();
    let m: Vec<Vec<Element>> = (0..l)
        .map(|i| (0..l).map(|j| Element::e(c.part(i) as i64 - i as i64 + j as i64)).collect())
        .collect();
    det(&m)
}

/// A skew-symmetric matrix of even size.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewMatrix<T: Ring> {
    rows: Vec<Vec<T>>,
}

impl<T: Ring> SkewMatrix<T> {
    pub fn new(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if n % 2 == 1 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape(format!("need an even square matrix, got {n} rows")));
        }
        for i in 0..n {
            for j in 0..n {
                if rows[i][j] != rows[j][i].neg() {
                    return Err(Error::Shape(format!("entries ({i},{j}) and ({j},{i}) are not opposite")));
                }
            }
        }
        Ok(SkewMatrix { rows })
    }

    /// Builds the matrix from its strict upper triangle `upper(i, j)`, `i < j`.
    pub fn from_upper(n: usize, upper: impl Fn(usize, usize) -> T) -> Result<Self> {
        let mut rows = vec![vec![T::zero(); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let a = upper(i, j);
                rows[j][i] = a.neg();
                rows[i][j] = a;
            }
        }
        SkewMatrix::new(rows)
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }
}

/// Signed sum over perfect matchings, expanding along the lowest unmatched index.
pub fn pfaffian<T: Ring>(a: &SkewMatrix<T>) -> T {
    fn rec<T: Ring>(a: &[Vec<T>], left: u32, memo: &mut HashMap<u32, T>) -> T {
        if left == 0 {
            return T::one();
        }
        if let Some(v) = memo.get(&left) {
            return v.clone();
        }
        let i = left.trailing_zeros() as usize;
        let rest = left & !(1 << i);
        let mut acc = T::zero();
        let mut sign_odd = false;
        for j in (i + 1)..a.len() {
            if rest & (1 << j) == 0 {
                continue;
            }
            if !a[i][j].is_zero() {
                let sub = rec(a, rest & !(1 << j), memo);
                let term = a[i][j].mul(&sub);
                acc.add_assign(&if sign_odd { term.neg() } else { term });
            }
            sign_odd = !sign_odd;
        }
        memo.insert(left, acc.clone());
        acc
    }
    let n = a.size();
    rec(&a.rows, ((1u64 << n) - 1) as u32, &mut HashMap::new())
}

/// `Q_(a,b) = Q_a Q_b + 2 Σ_{s≥1} (-1)^s Q_{a+s} Q_{b-s}`.
pub fn schurq_two_row(a: i64, b: i64) -> Element {
    let mut acc = &Element::q(a) * &Element::q(b);
    for s in 1..=b.max(0) {
        let c = if s % 2 == 0 { 2 } else { -2 };
        acc.add_scaled(&(&Element::q(a + s) * &Element::q(b - s)), &Scalar::from_int(c));
    }
    acc
}

/// `Q_λ = Pf[Q_(λ_i, λ_j)]` after padding λ with a zero part to even length.
pub fn schurq(lambda: &Partition) -> Result<Element> {
    if !lambda.is_strict() {
        return Err(Error::NonStrictPartition(lambda.parts().to_vec()));
    }
    let mut parts: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    let m = SkewMatrix::from_upper(parts.len(), |i, j| schurq_two_row(parts[i], parts[j]))?;
    Ok(pfaffian(&m))
}

/// Which one-variable generating function [`eval_generators`] expands.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EvalKind {
    /// `Π 1/(1 - x_i u)`
    H,
    /// `Π (1 + x_i u)`
    E,
    /// power sums
    P,
    /// `Π (1 + x_i u)/(1 - x_i u)`
    SchurQ,
    /// `H(u) E(-t u)`
    HallLittlewood,
}

/// Values of the generators `c_0 = 1, c_1, ..., c_K` at the point `x`.
///
/// For the Hall–Littlewood kind `t = None` keeps `t` symbolic.
pub fn eval_generators(kind: EvalKind, x: &[Rational], t: Option<&Rational>, k_max: u32) -> Vec<Scalar> {
    let n = k_max as usize + 1;
    let point = |xi: &Rational| Scalar::from(xi.clone());
    let h_of = |xs: &mut dyn Iterator<Item = Scalar>| {
        let mut s = TruncatedSeries::one(k_max);
        for xi in xs {
            let geo = TruncatedSeries::from_fn(k_max, |k| xi.pow(k));
            s = s.mul(&geo);
        }
        s
    };
    let e_of = |xs: &mut dyn Iterator<Item = Scalar>| {
        let mut s = TruncatedSeries::one(k_max);
        for xi in xs {
            s = s.mul(&TruncatedSeries::new(k_max, vec![Scalar::from_int(1), xi]));
        }
        s
    };
    let out = match kind {
        EvalKind::H => h_of(&mut x.iter().map(point)),
        EvalKind::E => e_of(&mut x.iter().map(point)),
        EvalKind::P => TruncatedSeries::from_fn(k_max, |k| {
            if k == 0 {
                Scalar::from_int(1)
            } else {
                x.iter().fold(Scalar::default(), |a, xi| &a + &point(xi).pow(k))
            }
        }),
        EvalKind::SchurQ => h_of(&mut x.iter().map(point)).mul(&e_of(&mut x.iter().map(point))),
        EvalKind::HallLittlewood => {
            let t = t.map(|t| Scalar::from(t.clone())).unwrap_or_else(Scalar::t);
            let mt = -&t;
            h_of(&mut x.iter().map(point)).mul(&e_of(&mut x.iter().map(|xi| &point(xi) * &mt)))
        }
    };
    debug_assert_eq!(out.coeffs().len(), n);
    out.coeffs().to_vec()
}

/// Generator values per alphabet, for [`eval_element`].
#[derive(Clone, Debug, Default)]
pub struct GeneratorValues {
    values: HashMap<GeneratorFamily, Vec<Scalar>>,
}

impl GeneratorValues {
    pub fn new() -> Self {
        GeneratorValues::default()
    }

    /// Sets `family[k] = values[k]` (index 0 is ignored).
    pub fn with(mut self, family: GeneratorFamily, values: Vec<Scalar>) -> Self {
        self.values.insert(family, values);
        self
    }

    /// `h`, `e`, `p` at `x`, plus `Q` as Schur Q-generators, all through index `k_max`.
    pub fn classical(x: &[Rational], k_max: u32) -> Self {
        GeneratorValues::new()
            .with(GeneratorFamily::H, eval_generators(EvalKind::H, x, None, k_max))
            .with(GeneratorFamily::E, eval_generators(EvalKind::E, x, None, k_max))
            .with(GeneratorFamily::P, eval_generators(EvalKind::P, x, None, k_max))
            .with(GeneratorFamily::Q, eval_generators(EvalKind::SchurQ, x, None, k_max))
    }

    pub fn get(&self, g: Generator) -> Option<Scalar> {
        self.values.get(&g.family)?.get(g.index as usize).cloned()
    }
}

/// Substitutes generator values; fails on a generator without a value.
pub fn eval_element(a: &Element, values: &GeneratorValues) -> Result<Scalar> {
    a.eval(&|g| values.get(g))
}

fn check_distinct(x: &[Rational]) -> Result<()> {
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            if x[i] == x[j] {
                return Err(Error::CoincidentPoints(format!("x[{i}] = x[{j}] = {}", x[i])));
            }
        }
    }
    Ok(())
}

fn rpow(x: &Rational, e: u32) -> Rational {
    num_traits::pow(x.clone(), e as usize)
}

/// `det[x_i^{λ_j + n - j}] / det[x_i^{n - j}]`.
pub fn schur_bialternant(lambda: &Partition, x: &[Rational]) -> Result<Rational> {
    check_distinct(x)?;
    let n = x.len();
    if lambda.len() > n {
        return Ok(rat(0));
    }
    let alt = |shape: &dyn Fn(usize) -> u32| -> Rational {
        let m: Vec<Vec<Rational>> = (0..n).map(|i| (0..n).map(|j| rpow(&x[i], shape(j))).collect()).collect();
        det(&m)
    };
    let num = alt(&|j| lambda.part(j) + (n - 1 - j) as u32);
    let den = alt(&|j| (n - 1 - j) as u32);
    Ok(num / den)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Hall–Littlewood `P_λ(x; t)` by symmetrization:
/// `(1/v_λ(t)) Σ_{w ∈ S_n} w(x^λ Π_{i<j} (x_i - t x_j)/(x_i - x_j))`,
/// with `v_λ(t) = Π_{i≥0} Π_{j=1}^{m_i} (1 - t^j)/(1 - t)` and `m_0 = n - l(λ)`.
pub fn hl_p(lambda: &Partition, x: &[Rational], t: &Rational) -> Result<Rational> {
    check_distinct(x)?;
    let n = x.len();
    if lambda.len() > n {
        return Ok(rat(0));
    }
    let mut v = rat(1);
    let mut mult: HashMap<u32, usize> = HashMap::new();
    for i in 0..n {
        *mult.entry(lambda.part(i)).or_default() += 1;
    }
    for &m in mult.values() {
        for j in 1..=m {
            // (1 - t^j)/(1 - t) = 1 + t + ... + t^{j-1}
            v *= (0..j as u32).fold(rat(0), |a, e| a + rpow(t, e));
        }
    }
    if Zero::is_zero(&v) {
        return Err(Error::Pole(format!("normalizing factor of P_{lambda:?} vanishes at t = {t}")));
    }
    let mut acc = rat(0);
    for w in permutations(n) {
        let y: Vec<&Rational> = w.iter().map(|&i| &x[i]).collect();
        let mut term = rat(1);
        for i in 0..n {
            term *= rpow(y[i], lambda.part(i));
        }
        for i in 0..n {
            for j in i + 1..n {
                term *= (y[i] - t * y[j]) / (y[i] - y[j]);
            }
        }
        acc += term;
    }
    Ok(acc / v)
}

/// `b_λ(t) = Π_{i≥1} Π_{j=1}^{m_i} (1 - t^j)`, the ratio `Q_λ / P_λ`.
pub fn b_lambda(lambda: &Partition) -> Scalar {
    let mut acc = Scalar::from_int(1);
    let mut i = 0;
    while i < lambda.len() {
        let m = lambda.multiplicity(lambda.part(i));
        for j in 1..=m as u32 {
            acc = &acc * &(&Scalar::from_int(1) - &Scalar::t().pow(j));
        }
        i += m;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::straighten;
    use crate::scalar::ratio;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn xs(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&a| rat(a)).collect()
    }

    #[test]
    fn correlation_functions() {
        let s = correlation_function(FamilyTag::Schur, 3);
        assert_eq!(s.coeffs(), &[1, -1, 0, 0].map(Scalar::from_int));
        let q = correlation_function(FamilyTag::SchurQ, 3);
        assert_eq!(q.coeffs(), &[1, -2, 2, -2].map(Scalar::from_int));
        let h = correlation_function(FamilyTag::HallLittlewood, 3);
        let t = Scalar::t();
        assert_eq!(h.coeff(1), &t - &Scalar::from_int(1));
        assert_eq!(h.coeff(3), &t.pow(3) - &t.pow(2));
    }

    #[test]
    fn schur_h_examples() {
        assert_eq!(schur_h(&IntegerVector(vec![4])), Element::h(4));
        assert_eq!(
            schur_h(&IntegerVector(vec![2, 2])),
            &Element::h(2).pow(2) - &(&Element::h(1) * &Element::h(3))
        );
        assert!(schur_h(&IntegerVector(vec![1, 2])).is_zero());
        assert_eq!(schur_h(&IntegerVector(vec![])), Element::one());
    }

    #[test]
    fn schur_h_respects_straightening() {
        for a in -3i64..=5 {
            for b in -3i64..=5 {
                for c in -2i64..=4 {
                    let v = IntegerVector(vec![a, b, c]);
                    let expect = match straighten(&v) {
                        crate::StraightenResult::Zero => Element::zero(),
                        crate::StraightenResult::Signed { sign, partition } => {
                            schur_h(&partition.to_vector()).scale_int(sign as i64)
                        }
                    };
                    assert_eq!(schur_h(&v), expect, "{v:?}");
                }
            }
        }
    }

    #[test]
    fn schur_e_examples() {
        assert_eq!(schur_e(&p(&[1, 1, 1])), Element::e(3));
        assert_eq!(schur_e(&p(&[2, 1])), &(&Element::e(1) * &Element::e(2)) - &Element::e(3));
        let vals = GeneratorValues::classical(&xs(&[1, 2, 3, 4]), 8);
        let a = eval_element(&schur_e(&p(&[2, 2])), &vals).unwrap();
        let b = eval_element(&schur_h(&IntegerVector(vec![2, 2])), &vals).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn pfaffian_small() {
        let a = SkewMatrix::from_upper(2, |_, _| rat(7)).unwrap();
        assert_eq!(pfaffian(&a), rat(7));
        // a12 a34 - a13 a24 + a14 a23
        let vals = [2, 3, 5, 7, 11, 13];
        let idx = |i: usize, j: usize| match (i, j) {
            (0, 1) => 0,
            (0, 2) => 1,
            (0, 3) => 2,
            (1, 2) => 3,
            (1, 3) => 4,
            _ => 5,
        };
        let m = SkewMatrix::from_upper(4, |i, j| rat(vals[idx(i, j)])).unwrap();
        assert_eq!(pfaffian(&m), rat(2 * 13 - 3 * 11 + 5 * 7));
        assert!(matches!(SkewMatrix::<Rational>::new(vec![vec![rat(0)]; 1]), Err(Error::Shape(_))));
        assert!(matches!(
            SkewMatrix::new(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn schurq_examples() {
        assert_eq!(schurq(&p(&[3])).unwrap(), Element::q(3));
        assert_eq!(schurq(&p(&[2, 1])).unwrap(), &(&Element::q(2) * &Element::q(1)) - &Element::q(3).scale_int(2));
        let expect = &(&(&schurq_two_row(3, 2) * &Element::q(1)) - &(&schurq_two_row(3, 1) * &Element::q(2)))
            + &(&Element::q(3) * &schurq_two_row(2, 1));
        assert_eq!(schurq(&p(&[3, 2, 1])).unwrap(), expect);
        assert!(matches!(schurq(&p(&[2, 2])), Err(Error::NonStrictPartition(_))));
        assert_eq!(schurq(&Partition::empty()).unwrap(), Element::one());
    }

    #[test]
    fn generator_values() {
        let h = eval_generators(EvalKind::H, &xs(&[1, 1]), None, 2);
        assert_eq!(h[1..], [Scalar::from_int(2), Scalar::from_int(3)]);
        let e = eval_generators(EvalKind::E, &xs(&[1, 1]), None, 3);
        assert_eq!(e[1..], [2, 1, 0].map(Scalar::from_int));
        let q = eval_generators(EvalKind::SchurQ, &xs(&[1]), None, 2);
        assert_eq!(q[1..], [2, 2].map(Scalar::from_int));
        let hl = eval_generators(EvalKind::HallLittlewood, &xs(&[1, 2]), None, 2);
        // q_1 = (1 - t)(x_1 + x_2)
        assert_eq!(hl[1], Scalar::from_coeffs(vec![rat(3), rat(-3)]));
    }

    #[test]
    fn eval_examples() {
        let vals = GeneratorValues::classical(&xs(&[1, 1]), 4);
        assert_eq!(eval_element(&Element::h(1).pow(2), &vals).unwrap(), Scalar::from_int(4));
        assert_eq!(eval_element(&schur_h(&IntegerVector(vec![2, 1])), &vals).unwrap(), Scalar::from_int(2));
        assert_eq!(eval_element(&Element::zero(), &vals).unwrap(), Scalar::default());
        assert!(matches!(eval_element(&Element::hs(1), &vals), Err(Error::MissingValue(_))));
    }

    #[test]
    fn bialternant_examples() {
        assert_eq!(schur_bialternant(&Partition::empty(), &xs(&[1, 2])).unwrap(), rat(1));
        assert_eq!(schur_bialternant(&p(&[1]), &xs(&[1, 2])).unwrap(), rat(3));
        let vals = GeneratorValues::classical(&xs(&[1, 2, 3]), 4);
        let v = eval_element(&schur_h(&IntegerVector(vec![2, 1])), &vals).unwrap();
        assert_eq!(Scalar::from(schur_bialternant(&p(&[2, 1]), &xs(&[1, 2, 3])).unwrap()), v);
        assert!(matches!(schur_bialternant(&p(&[1]), &xs(&[2, 2])), Err(Error::CoincidentPoints(_))));
    }

    #[test]
    fn hl_specializations() {
        let x = vec![rat(1), rat(2), ratio(1, 3)];
        for lam in Partition::up_to(4, 3) {
            assert_eq!(hl_p(&lam, &x, &rat(0)).unwrap(), schur_bialternant(&lam, &x).unwrap(), "{lam:?}");
        }
        for t in [ratio(1, 2), rat(3), rat(-1)] {
            assert_eq!(hl_p(&p(&[1]), &x[..2], &t).unwrap(), rat(3));
        }
        assert!(matches!(hl_p(&p(&[1]), &x, &rat(-1)), Err(Error::Pole(_))));
        assert_eq!(b_lambda(&p(&[2, 1])), &(&Scalar::from_int(1) - &Scalar::t()) * &(&Scalar::from_int(1) - &Scalar::t()));
    }

    #[test]
    fn hl_at_minus_one_is_schur_q() {
        let x = xs(&[2, 3, 5]);
        let vals = GeneratorValues::classical(&x, 8);
        for lam in [p(&[2]), p(&[2, 1]), p(&[3, 1]), p(&[3, 2, 1]), p(&[4, 2])] {
            let q = eval_element(&schurq(&lam).unwrap(), &vals).unwrap();
            let n = (lam.len() + 1).min(3);
            let vals_n = GeneratorValues::classical(&x[..n], 8);
            let qn = eval_element(&schurq(&lam).unwrap(), &vals_n).unwrap();
            let b = b_lambda(&lam).eval_t(&rat(-1));
            assert_eq!(Scalar::from(b * hl_p(&lam, &x[..n], &rat(-1)).unwrap()), qn, "{lam:?}");
            assert!(!Ring::is_zero(&q) || lam.len() > 3);
        }
    }

    #[test]
    fn det_examples() {
        let m = vec![vec![rat(2), rat(1)], vec![rat(5), rat(3)]];
        assert_eq!(det(&m), rat(1));
        let m3 = vec![vec![rat(0), rat(1), rat(0)], vec![rat(1), rat(0), rat(0)], vec![rat(0), rat(0), rat(1)]];
        assert_eq!(det(&m3), rat(-1));
    }
}
