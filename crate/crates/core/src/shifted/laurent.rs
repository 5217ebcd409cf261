//! Truncated expansions at `u = ∞`, the canonical form for shifted series.

use crate::error::{Error, Result};
use crate::scalar::{rat, Rational, Ring};

/// Stand-in for `-∞` as the known-through exponent of exact polynomials.
pub const EXACT: i64 = i64::MIN / 4;

/// `Σ c_e u^e` for `e ≤ top`, known exactly for every exponent `e ≥ low`.
///
/// Stored coefficients run from `u^top` downward; anything not stored (but `≥ low`) is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct InvUSeries<T: Ring> {
    top: i64,
    low: i64,
    coeffs: Vec<T>,
}

impl<T: Ring> InvUSeries<T> {
    /// `coeffs[i]` is the coefficient of `u^(top - i)`; entries below `low` are dropped.
    pub fn new(top: i64, low: i64, mut coeffs: Vec<T>) -> Self {
        let keep = if top < low { 0 } else { (top - low + 1).min(coeffs.len() as i64) as usize };
        coeffs.truncate(keep);
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        InvUSeries { top, low, coeffs }
    }

    pub fn zero(low: i64) -> Self {
        InvUSeries { top: low - 1, low, coeffs: Vec::new() }
    }

    pub fn one(low: i64) -> Self {
        InvUSeries::new(0, low, vec![T::one()])
    }

    /// Exact polynomial; `coeffs[i]` multiplies `u^(top - i)`.
    pub fn polynomial(top: i64, coeffs: Vec<T>) -> Self {
        InvUSeries::new(top, EXACT, coeffs)
    }

    pub fn top(&self) -> i64 {
        self.top
    }

    /// Lowest exponent whose coefficient is known.
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Coefficient of `u^e`. Panics below the known range.
    pub fn coeff(&self, e: i64) -> T {
        assert!(e >= self.low, "coefficient of u^{e} below the known order u^{}", self.low);
        if e > self.top {
            return T::zero();
        }
        self.coeffs.get((self.top - e) as usize).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Forgets everything below `u^low`.
    pub fn truncate(&self, low: i64) -> Self {
        InvUSeries::new(self.top, low.max(self.low), self.coeffs.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let top = self.top + other.top;
        let low = (self.low.saturating_add(other.top)).max(other.low.saturating_add(self.top)).max(EXACT);
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return InvUSeries::zero(low);
        }
        let span = if top < low { 0 } else { (top - low + 1).min(i64::MAX / 2) as usize };
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(span);
        let mut out = vec![T::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len || a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    out[i + j].add_assign(&a.mul(b));
                }
            }
        }
        InvUSeries::new(top, low, out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let low = self.low.max(other.low);
        let parts: Vec<&Self> = [self, other].into_iter().filter(|s| !s.coeffs.is_empty()).collect();
        let Some(top) = parts.iter().map(|s| s.top).max() else {
            return InvUSeries::zero(low);
        };
        let span = if top < low { 0 } else { (top - low + 1) as usize };
        let len = parts.iter().map(|s| (top - s.top) as usize + s.coeffs.len()).max().unwrap_or(0).min(span);
        let pick = |s: &Self, e: i64| if e > s.top { T::zero() } else { s.coeffs.get((s.top - e) as usize).cloned().unwrap_or_else(T::zero) };
        let out = (0..len).map(|i| {
            let e = top - i as i64;
            pick(self, e).add(&pick(other, e))
        });
        InvUSeries::new(top, low, out.collect())
    }

    pub fn neg(&self) -> Self {
        InvUSeries { top: self.top, low: self.low, coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &T) -> Self {
        InvUSeries::new(self.top, self.low, self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> InvUSeries<U> {
        InvUSeries::new(self.top, self.low, self.coeffs.iter().map(f).collect())
    }

    /// Equality of all coefficients known in both series.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let low = self.low.max(other.low);
        let top = self.top.max(other.top);
        (low..=top).all(|e| self.coeff(e) == other.coeff(e))
    }
}

impl InvUSeries<Rational> {
    /// Lifts a rational series into any coefficient ring.
    pub fn lift<T: Ring>(&self) -> InvUSeries<T> {
        self.map(|c| T::from_rational(c.clone()))
    }
}

/// Expansion of `u + c`.
fn linear(c: i64) -> InvUSeries<Rational> {
    InvUSeries::polynomial(1, vec![rat(1), rat(c)])
}

/// Expansion of `1/(u + c) = Σ (-c)^n u^(-n-1)` through `u^low`.
fn inv_linear(c: i64, low: i64) -> InvUSeries<Rational> {
    let n = (-1 - low).max(-1) + 1;
    let mut coeffs = Vec::with_capacity(n as usize);
    let mut p = rat(1);
    for _ in 0..n {
        coeffs.push(p.clone());
        p *= rat(-c);
    }
    InvUSeries::new(-1, low, coeffs)
}

/// Expansion of the falling power `(u + a | j)` through `u^low`, for any integer `j`.
pub fn ff_laurent(a: i64, j: i64, low: i64) -> InvUSeries<Rational> {
    let mut acc = InvUSeries::one(EXACT);
    if j >= 0 {
        for i in 0..j {
            acc = acc.mul(&linear(a - i));
        }
        acc.truncate(low)
    } else {
        for i in 1..=-j {
            acc = acc.mul(&inv_linear(a + i, low));
        }
        acc.truncate(low)
    }
}

/// The two bases of shifted series, both triangular against powers of `1/u`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// `1/(u|k)`
    Falling,
    /// `(u|-k)`
    Rising,
}

impl Basis {
    /// Expansion of the basis element with index `k ∈ ℤ`, leading term `u^-k`.
    pub fn element(self, k: i64, low: i64) -> InvUSeries<Rational> {
        match self {
            // 1/(u|k) = (u-k|-k)
            Basis::Falling => ff_laurent(-k, -k, low),
            Basis::Rising => ff_laurent(0, -k, low),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Basis::Falling => "falling",
            Basis::Rising => "rising",
        }
    }
}

/// Coefficients `(k, c_k)` of `s` in the basis, for `-top ≤ k ≤ -low`, by triangular solve.
pub fn to_basis<T: Ring>(s: &InvUSeries<T>, basis: Basis) -> Result<Vec<(i64, T)>> {
    if s.low() == EXACT {
        return Err(Error::Shape("basis expansion of an exact polynomial needs a truncation order".into()));
    }
    let mut work = s.clone();
    let mut out = Vec::new();
    for k in -s.top()..=-s.low() {
        let c = work.coeff(-k);
        if !c.is_zero() {
            work = work.sub(&basis.element(k, s.low()).lift::<T>().scale(&c));
        }
        out.push((k, c));
    }
    Ok(out)
}

/// `Σ c_k b_k` through `u^low`.
pub fn from_basis<T: Ring>(coeffs: &[(i64, T)], basis: Basis, low: i64) -> InvUSeries<T> {
    let mut acc = InvUSeries::zero(low);
    for (k, c) in coeffs {
        if !c.is_zero() && -k >= low {
            acc = acc.add(&basis.element(*k, low).lift::<T>().scale(c));
        }
    }
    acc
}
