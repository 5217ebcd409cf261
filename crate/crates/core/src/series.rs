//! Truncated formal series and multivariate coefficient tables of correlation products.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::combinatorics::IntegerVector;
use crate::error::{Error, Result};
use crate::ring::{Element, GeneratorFamily};
use crate::scalar::{Ring, Scalar};

/// `Σ_{k=0}^{N} c_k u^k`, everything above order `N` unknown.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<T: Ring> {
    coeffs: Vec<T>,
}

impl<T: Ring> TruncatedSeries<T> {
    /// Pads with zeros or truncates to exactly `order + 1` coefficients.
    pub fn new(order: u32, mut coeffs: Vec<T>) -> Self {
        coeffs.resize(order as usize + 1, T::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_fn(order: u32, f: impl Fn(u32) -> T) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn one(order: u32) -> Self {
        TruncatedSeries::new(order, vec![T::one()])
    }

    pub fn order(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `u^k`; zero for negative `k`.
    ///
    /// Panics when `k` exceeds the truncation order, since that value is unknown.
    pub fn coeff(&self, k: i64) -> T {
        if k < 0 {
            return T::zero();
        }
        assert!(k as usize <= self.coeffs.len() - 1, "coefficient u^{k} beyond truncation order {}", self.order());
        self.coeffs[k as usize].clone()
    }

    pub fn truncate(&self, order: u32) -> Self {
        TruncatedSeries::new(order.min(self.order()), self.coeffs.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut out = vec![T::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    out[i + j].add_assign(&a.mul(b));
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// `u ↦ c u`.
    pub fn rescale(&self, c: &T) -> Self {
        let mut pw = T::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.mul(&pw));
            pw = pw.mul(c);
        }
        TruncatedSeries { coeffs: out }
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> TruncatedSeries<U> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Formal inverse; the constant term must be exactly one.
    pub fn invert(&self) -> Result<Self> {
        if self.coeffs[0] != T::one() {
            return Err(Error::NonUnit);
        }
        let n = self.coeffs.len();
        let mut r: Vec<T> = Vec::with_capacity(n);
        r.push(T::one());
        for k in 1..n {
            let mut acc = T::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() && !r[k - i].is_zero() {
                    acc.add_assign(&self.coeffs[i].mul(&r[k - i]));
                }
            }
            r.push(acc.neg());
        }
        Ok(TruncatedSeries { coeffs: r })
    }
}

impl TruncatedSeries<Element> {
    /// `Σ family[k] u^k` with generic generator coefficients.
    pub fn generic(family: GeneratorFamily, order: u32) -> Self {
        TruncatedSeries::from_fn(order, |k| Element::generator(family, k as i64))
    }
}

impl TruncatedSeries<Scalar> {
    pub fn to_elements(&self) -> TruncatedSeries<Element> {
        self.map(|c| Element::constant(c.clone()))
    }
}

/// `R(u) = Q(u)^{-1}`.
pub fn invert(q: &TruncatedSeries<Element>) -> Result<TruncatedSeries<Element>> {
    q.invert()
}

/// Box of exponent vectors `lo ≤ λ ≤ hi`, further cut to vectors whose suffix sums
/// `λ_j + ... + λ_l` are all at most the order `N`.
///
/// Coefficients with a negative suffix sum vanish, and each nonzero coefficient has
/// degree `|λ| ≤ N`; the suffix cut makes the region closed under the recursion that
/// builds tables variable by variable.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Window {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
    pub order: u32,
}

impl Window {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>, order: u32) -> Result<Self> {
        let n = order as i64;
        if lo.len() != hi.len() || lo.is_empty() {
            return Err(Error::Shape(format!("window bounds of lengths {} and {}", lo.len(), hi.len())));
        }
        if lo.iter().zip(&hi).any(|(a, b)| a > b || *a < -n || *b > n) {
            return Err(Error::WindowOverflow(format!("window {lo:?}..{hi:?} exceeds [-{n},{n}] for order {n}")));
        }
        Ok(Window { lo, hi, order })
    }

    /// `[lo, hi]^l`.
    pub fn cube(arity: usize, lo: i64, hi: i64, order: u32) -> Result<Self> {
        Window::new(vec![lo; arity], vec![hi; arity], order)
    }

    /// `[-N, N]^l`: every possibly nonzero coefficient of order `N`.
    pub fn full(arity: usize, order: u32) -> Self {
        let n = order as i64;
        Window::cube(arity, -n, n, order).expect("full window is valid")
    }

    pub fn arity(&self) -> usize {
        self.lo.len()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        v.len() == self.arity()
            && v.iter().zip(self.lo.iter().zip(&self.hi)).all(|(x, (a, b))| a <= x && x <= b)
            && suffix_sums(v).iter().all(|&s| s <= self.order as i64)
    }

    /// All vectors of the window in lexicographic order.
    pub fn vectors(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut cur = self.lo.clone();
        loop {
            if self.contains(&cur) {
                out.push(cur.clone());
            }
            let mut i = cur.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < self.hi[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = self.lo[i];
            }
        }
    }
}

pub(crate) fn suffix_sums(v: &[i64]) -> Vec<i64> {
    let mut out = vec![0; v.len()];
    let mut acc = 0;
    for i in (0..v.len()).rev() {
        acc += v[i];
        out[i] = acc;
    }
    out
}

/// Coefficients of a multivariate correlation product, keyed by exponent vectors.
#[derive(Clone, PartialEq, Debug)]
pub struct CoeffTable {
    window: Window,
    entries: BTreeMap<IntegerVector, Element>,
}

impl CoeffTable {
    pub fn from_entries(window: Window, entries: impl IntoIterator<Item = (IntegerVector, Element)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (k, v) in entries {
            if !window.contains(k.entries()) {
                return Err(Error::OutOfWindow(k.0));
            }
            if !v.is_zero() {
                map.insert(k, v);
            }
        }
        Ok(CoeffTable { window, entries: map })
    }

    pub fn arity(&self) -> usize {
        self.window.arity()
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    /// Nonzero entries in lexicographic order of the index vector.
    pub fn entries(&self) -> impl Iterator<Item = (&IntegerVector, &Element)> {
        self.entries.iter()
    }

    pub fn get(&self, lambda: &[i64]) -> Result<Element> {
        if !self.window.contains(lambda) {
            return Err(Error::OutOfWindow(lambda.to_vec()));
        }
        Ok(self.entries.get(&IntegerVector(lambda.to_vec())).cloned().unwrap_or_default())
    }

    /// Applies `f` to every entry, dropping zeros.
    pub fn map(&self, f: impl Fn(&Element) -> Element) -> CoeffTable {
        CoeffTable {
            window: self.window.clone(),
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (k.clone(), f(v)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "arity": self.arity(),
            "window": self.window,
            "entries": self.entries.iter().map(|(k, v)| serde_json::json!({
                "lambda": k.0,
                "element": v.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Stored coefficient at `lambda`; zero if absent.
pub fn extract(table: &CoeffTable, lambda: &IntegerVector) -> Result<Element> {
    table.get(lambda.entries())
}

fn check_inputs(f: &TruncatedSeries<Scalar>, gens: &TruncatedSeries<Element>, order: u32) -> Result<()> {
    if !f.coeffs()[0].is_one() || gens.coeffs()[0] != Element::one() {
        return Err(Error::NonUnit);
    }
    if f.order() < order || gens.order() < order {
        return Err(Error::WindowOverflow(format!(
            "series known to orders {} and {}, table needs {order}",
            f.order(),
            gens.order()
        )));
    }
    Ok(())
}

/// Calls `visit(shifted, weight, Σr)` for every `r ≥ 0` with `f_{r_i} ≠ 0` such that
/// `mu - r` keeps all suffix sums nonnegative; `weight = Π f_{r_i}`.
fn for_each_lowering(mu: &[i64], f: &[Scalar], visit: &mut dyn FnMut(&[i64], &Scalar, i64)) {
    let s = suffix_sums(mu);
    let mut cur = mu.to_vec();
    fn rec(
        j: usize,
        used: i64,
        w: Scalar,
        s: &[i64],
        f: &[Scalar],
        cur: &mut Vec<i64>,
        visit: &mut dyn FnMut(&[i64], &Scalar, i64),
    ) {
        if j == 0 {
            visit(cur, &w, used);
            return;
        }
        let j = j - 1;
        let budget = s[j] - used;
        if budget < 0 {
            return;
        }
        for r in 0..=budget.min(f.len() as i64 - 1) {
            let fr = &f[r as usize];
            if Ring::is_zero(fr) {
                continue;
            }
            cur[j] -= r;
            rec(j, used + r, &w * fr, s, f, cur, visit);
            cur[j] += r;
        }
    }
    rec(mu.len(), 0, Scalar::from_int(1), &s, f, &mut cur, visit);
}

/// Expands `Π_{i<j} f(u_j/u_i) Π Q(u_i)` on the window, adding one variable at a time
/// on the left: `Q(u, ū) = Q(u) Π_j f(u_j/u) Q(ū)`.
pub fn correlation_expand(f: &TruncatedSeries<Scalar>, gens: &TruncatedSeries<Element>, window: &Window) -> Result<CoeffTable> {
    let n = window.order;
    check_inputs(f, gens, n)?;
    let l = window.arity();
    let fc = &f.coeffs()[..=n as usize];

    // needed[s] holds the suffix vectors of length s + 1 that the recursion touches
    let mut needed: Vec<HashSet<Vec<i64>>> = vec![HashSet::new(); l];
    needed[l - 1] = window
        .vectors()
        .into_iter()
        .filter(|v| suffix_sums(v).iter().all(|&s| s >= 0))
        .collect();
    for s in (1..l).rev() {
        let mut below = HashSet::new();
        for v in &needed[s] {
            for_each_lowering(&v[1..], fc, &mut |w, _, _| {
                below.insert(w.to_vec());
            });
        }
        needed[s - 1] = below;
    }

    let mut values: HashMap<Vec<i64>, Element> = needed[0]
        .iter()
        .map(|v| (v.clone(), gens.coeff(v[0])))
        .collect();
    for level in needed.iter().skip(1) {
        let mut next = HashMap::with_capacity(level.len());
        for v in level {
            let k = v[0];
            let mut acc = Element::zero();
            for_each_lowering(&v[1..], fc, &mut |w, c, used| {
                let q = gens.coeff(k + used);
                if q.is_zero() {
                    return;
                }
                let tail = &values[w];
                if tail.is_zero() {
                    return;
                }
                acc.add_scaled(&(&q * tail), c);
            });
            next.insert(v.clone(), acc);
        }
        values = next;
    }
    CoeffTable::from_entries(
        window.clone(),
        values.into_iter().map(|(k, v)| (IntegerVector(k), v)).filter(|(k, _)| window.contains(k.entries())),
    )
}

/// Zero outside the region where coefficients can be nonzero, the stored value otherwise.
pub(crate) fn lookup_or_zero(table: &CoeffTable, v: &[i64]) -> Result<Element> {
    let n = table.window().order as i64;
    let s = suffix_sums(v);
    if s.iter().any(|&x| x < 0) || v.iter().any(|&x| x.abs() > n) {
        return Ok(Element::zero());
    }
    table.get(v)
}

/// Builds the table with one more variable on the right from `base`:
/// `Q(ū, v) = Π_i f(v/u_i) Q(ū) Q(v)`.
///
/// `base` must cover every vector `(a_1 + r_1, ..., a_l + r_l)` that occurs.
pub fn append_variable(
    f: &TruncatedSeries<Scalar>,
    gens: &TruncatedSeries<Element>,
    base: &CoeffTable,
    window: &Window,
) -> Result<CoeffTable> {
    let n = window.order;
    check_inputs(f, gens, n)?;
    if window.arity() != base.arity() + 1 {
        return Err(Error::Shape(format!("arity {} cannot extend arity {}", window.arity(), base.arity())));
    }
    let fc = &f.coeffs()[..=n as usize];
    let mut entries = Vec::new();
    for v in window.vectors() {
        let (a, m) = (&v[..v.len() - 1], v[v.len() - 1]);
        if m < 0 {
            continue;
        }
        let mut acc = Element::zero();
        let mut raised = a.to_vec();
        let mut err = None;
        raise_rec(0, m, Scalar::from_int(1), fc, &mut raised, &mut |w, c, used| {
            if err.is_some() {
                return;
            }
            let q = gens.coeff(m - used);
            match lookup_or_zero(base, w) {
                Ok(x) if !x.is_zero() => acc.add_scaled(&(&x * &q), c),
                Ok(_) => {}
                Err(e) => err = Some(e),
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        entries.push((IntegerVector(v), acc));
    }
    CoeffTable::from_entries(window.clone(), entries)
}

/// Visits every `cur + r` with `r ≥ 0`, `Σr ≤ left` and `f_{r_i} ≠ 0`, passing `Π f_{r_i}` and `Σr`.
fn raise_rec(j: usize, left: i64, w: Scalar, f: &[Scalar], cur: &mut Vec<i64>, visit: &mut dyn FnMut(&[i64], &Scalar, i64)) {
    fn go(j: usize, used: i64, left: i64, w: Scalar, f: &[Scalar], cur: &mut Vec<i64>, visit: &mut dyn FnMut(&[i64], &Scalar, i64)) {
        if j == cur.len() {
            visit(cur, &w, used);
            return;
        }
        for r in 0..=left.min(f.len() as i64 - 1) {
            if Ring::is_zero(&f[r as usize]) {
                continue;
            }
            cur[j] += r;
            go(j + 1, used + r, left - r, &w * &f[r as usize], f, cur, visit);
            cur[j] -= r;
        }
    }
    go(j, 0, left, w, f, cur, visit);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn schur_f(n: u32) -> TruncatedSeries<Scalar> {
        TruncatedSeries::new(n, vec![Scalar::from_int(1), Scalar::from_int(-1)])
    }

    fn schur_q_f(n: u32) -> TruncatedSeries<Scalar> {
        TruncatedSeries::from_fn(n, |k| Scalar::from_int(if k == 0 { 1 } else if k % 2 == 0 { 2 } else { -2 }))
    }

    #[test]
    fn invert_identity_and_generic() {
        let one = TruncatedSeries::<Element>::one(5);
        assert_eq!(invert(&one).unwrap(), one);
        let q = TruncatedSeries::generic(GeneratorFamily::Q, 4);
        let r = invert(&q).unwrap();
        assert_eq!(r.coeff(1), -&Element::q(1));
        assert_eq!(r.coeff(2), &Element::q(1).pow(2) - &Element::q(2));
        assert_eq!(q.mul(&r), TruncatedSeries::one(4));
    }

    #[test]
    fn invert_rejects_non_unit() {
        let s = TruncatedSeries::new(3, vec![Element::from_int(2)]);
        assert_eq!(s.invert(), Err(Error::NonUnit));
    }

    #[test]
    fn one_variable_table_is_the_series() {
        let gens = TruncatedSeries::generic(GeneratorFamily::Q, 5);
        let t = correlation_expand(&schur_q_f(5), &gens, &Window::full(1, 5)).unwrap();
        for k in -5..=5 {
            assert_eq!(t.get(&[k]).unwrap(), Element::q(k));
        }
    }

    #[test]
    fn schur_two_row_examples() {
        let gens = TruncatedSeries::generic(GeneratorFamily::H, 4);
        let t = correlation_expand(&schur_f(4), &gens, &Window::full(2, 4)).unwrap();
        assert_eq!(t.get(&[2, 1]).unwrap(), &(&Element::h(2) * &Element::h(1)) - &Element::h(3));
        assert_eq!(t.get(&[1, 2]).unwrap(), Element::zero());
        assert_eq!(t.get(&[1, 3]).unwrap(), &(&Element::h(1) * &Element::h(3)) - &Element::h(2).pow(2));
        assert_eq!(t.get(&[0, 0]).unwrap(), Element::one());
        assert_eq!(t.get(&[5, 0]), Err(Error::OutOfWindow(vec![5, 0])));
    }

    #[test]
    fn schur_q_two_row() {
        let gens = TruncatedSeries::generic(GeneratorFamily::Q, 6);
        let t = correlation_expand(&schur_q_f(6), &gens, &Window::full(2, 6)).unwrap();
        for (m, n) in [(2i64, 1i64), (3, 1), (4, 2), (3, 2), (5, 0)] {
            let mut expect = &Element::q(m) * &Element::q(n);
            for s in 1..=n {
                let sign = if s % 2 == 0 { 2 } else { -2 };
                expect = &expect + &(&Element::q(m + s) * &Element::q(n - s)).scale_int(sign);
            }
            assert_eq!(t.get(&[m, n]).unwrap(), expect, "({m},{n})");
        }
    }

    #[test]
    fn window_overflow() {
        assert!(matches!(Window::cube(2, -5, 5, 4), Err(Error::WindowOverflow(_))));
        let gens = TruncatedSeries::generic(GeneratorFamily::H, 3);
        let w = Window::full(2, 5);
        assert!(matches!(correlation_expand(&schur_f(5), &gens, &w), Err(Error::WindowOverflow(_))));
    }

    /// Direct expansion: multiplies out the whole product as a Laurent polynomial in l variables.
    fn brute_force(f: &TruncatedSeries<Scalar>, gens: &TruncatedSeries<Element>, l: usize, n: u32) -> HashMap<Vec<i64>, Element> {
        let n = n as i64;
        let mut poly: HashMap<Vec<i64>, Element> = HashMap::new();
        poly.insert(vec![0; l], Element::one());
        let keep = |v: &Vec<i64>| v.iter().all(|x| x.abs() <= 3 * n);
        for i in 0..l {
            let mut next: HashMap<Vec<i64>, Element> = HashMap::new();
            for (k, c) in &poly {
                for a in 0..=n {
                    let mut v = k.clone();
                    v[i] += a;
                    if !keep(&v) {
                        continue;
                    }
                    next.entry(v).or_default().add_assign_ref(&(c * &gens.coeff(a)));
                }
            }
            poly = next;
        }
        for i in 0..l {
            for j in i + 1..l {
                let mut next: HashMap<Vec<i64>, Element> = HashMap::new();
                for (k, c) in &poly {
                    for r in 0..=n {
                        let mut v = k.clone();
                        v[i] -= r;
                        v[j] += r;
                        if !keep(&v) {
                            continue;
                        }
                        next.entry(v).or_default().add_scaled(c, &f.coeff(r));
                    }
                }
                poly = next;
            }
        }
        poly
    }

    #[test]
    fn matches_brute_force_expansion() {
        let n = 4;
        for f in [schur_f(3 * n), schur_q_f(3 * n)] {
            let gens = TruncatedSeries::generic(GeneratorFamily::Q, 3 * n);
            let bf = brute_force(&f, &gens, 3, n);
            let t = correlation_expand(&f.truncate(n), &gens.truncate(n), &Window::full(3, n)).unwrap();
            for v in Window::full(3, n).vectors() {
                let expect = bf.get(&v).cloned().unwrap_or_default();
                assert_eq!(t.get(&v).unwrap(), expect, "{v:?}");
            }
        }
    }

    #[test]
    fn append_matches_prepend() {
        let n = 5;
        for f in [schur_f(n), schur_q_f(n)] {
            let gens = TruncatedSeries::generic(GeneratorFamily::Q, n);
            let base = correlation_expand(&f, &gens, &Window::full(2, n)).unwrap();
            let w = Window::full(3, n);
            let direct = correlation_expand(&f, &gens, &w).unwrap();
            let stepped = append_variable(&f, &gens, &base, &w).unwrap();
            assert_eq!(direct, stepped);
        }
    }

    #[test]
    fn rescale_and_map() {
        let s = TruncatedSeries::new(3, vec![rat(1), rat(1), rat(1), rat(1)]);
        let r = s.rescale(&rat(-1));
        assert_eq!(r.coeffs(), &[rat(1), rat(-1), rat(1), rat(-1)]);
    }
}
