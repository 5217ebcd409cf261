//! Semi-infinite wedge space and the boson–fermion dictionary `v_{m,λ} ↔ z^m s_λ`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::json;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::families::{schur_h, FamilyTag};
use crate::operators::OperatorContext;
use crate::report::Report;
use crate::ring::Element;
use crate::scalar::{Ring, Scalar};

/// `v_{i_1} ∧ ... ∧ v_{i_r} ∧ v_{m-r} ∧ v_{m-r-1} ∧ ...` of charge `m`, with the head stored minimally.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WedgeMonomial {
    charge: i64,
    head: Vec<i64>,
}

impl WedgeMonomial {
    /// Validates the head (strictly decreasing, last entry above `m - r`) and strips vacuum-pattern entries.
    pub fn new(charge: i64, head: Vec<i64>) -> Result<Self> {
        if head.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Shape(format!("head {head:?} is not strictly decreasing")));
        }
        if let Some(&last) = head.last() {
            if last <= charge - head.len() as i64 {
                return Err(Error::Shape(format!("head {head:?} collides with the charge-{charge} tail")));
            }
        }
        Ok(WedgeMonomial::canonical(charge, head))
    }

    fn canonical(charge: i64, mut head: Vec<i64>) -> Self {
        while let Some(&last) = head.last() {
            if last == charge - head.len() as i64 + 1 {
                head.pop();
            } else {
                break;
            }
        }
        WedgeMonomial { charge, head }
    }

    /// The charge-`m` vacuum `|m⟩`.
    pub fn vacuum(charge: i64) -> Self {
        WedgeMonomial { charge, head: Vec::new() }
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    pub fn head(&self) -> &[i64] {
        &self.head
    }

    fn tail_top(&self) -> i64 {
        self.charge - self.head.len() as i64
    }

    pub fn occupies(&self, k: i64) -> bool {
        k <= self.tail_top() || self.head.contains(&k)
    }

    /// `ψ+_k`: wedge `v_k` in front, then sort; `None` if `v_k` is already present.
    pub fn psi_plus(&self, k: i64) -> Option<(i64, WedgeMonomial)> {
        if self.occupies(k) {
            return None;
        }
        let p = self.head.iter().take_while(|&&i| i > k).count();
        let mut head = self.head.clone();
        head.insert(p, k);
        let sign = if p % 2 == 0 { 1 } else { -1 };
        Some((sign, WedgeMonomial::canonical(self.charge + 1, head)))
    }

    /// `ψ-_k`: contract `v_k` with the alternating sign of its position; `None` if absent.
    pub fn psi_minus(&self, k: i64) -> Option<(i64, WedgeMonomial)> {
        if !self.occupies(k) {
            return None;
        }
        let mut head = self.head.clone();
        let top = self.tail_top();
        if k <= top {
            head.extend((k..=top).rev());
        }
        let p = head.iter().position(|&i| i == k).expect("occupied");
        head.remove(p);
        let sign = if p % 2 == 0 { 1 } else { -1 };
        Some((sign, WedgeMonomial::canonical(self.charge - 1, head)))
    }
}

impl fmt::Display for WedgeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head: Vec<String> = self.head.iter().map(|i| i.to_string()).collect();
        write!(f, "m={}; head={}", self.charge, head.join(","))
    }
}

impl FromStr for WedgeMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse { pos: 0, msg: format!("{msg} in {s:?}") };
        let (m, h) = s.split_once(';').ok_or_else(|| bad("missing ';'"))?;
        let m = m.trim().strip_prefix("m=").ok_or_else(|| bad("missing m="))?;
        let h = h.trim().strip_prefix("head=").ok_or_else(|| bad("missing head="))?;
        let charge = m.trim().parse().map_err(|_| bad("bad charge"))?;
        let head = if h.trim().is_empty() {
            Vec::new()
        } else {
            h.split(',').map(|x| x.trim().parse::<i64>().map_err(|_| bad("bad index"))).collect::<Result<_>>()?
        };
        WedgeMonomial::new(charge, head)
    }
}

/// `(m, λ)` with `λ_j = i_j - (m - j + 1)`.
pub fn to_boson(w: &WedgeMonomial) -> (i64, Partition) {
    let m = w.charge;
    let parts = w.head.iter().enumerate().map(|(j, &i)| (i - (m - j as i64)) as u32).collect();
    (m, Partition::new(parts).expect("strictly decreasing head gives a partition"))
}

/// Inverse of [`to_boson`].
pub fn from_boson(m: i64, lambda: &Partition) -> WedgeMonomial {
    let head = lambda.parts().iter().enumerate().map(|(j, &p)| p as i64 + m - j as i64).collect();
    WedgeMonomial::canonical(m, head)
}

/// Finite combination of wedge monomials of a single charge.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct FockVector {
    terms: BTreeMap<WedgeMonomial, Scalar>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    pub fn monomial(w: WedgeMonomial) -> Self {
        FockVector { terms: BTreeMap::from([(w, Scalar::from_int(1))]) }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WedgeMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: WedgeMonomial, c: &Scalar) {
        let e = self.terms.entry(w.clone()).or_default();
        *e = &*e + c;
        if Ring::is_zero(e) {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    fn apply(&self, op: impl Fn(&WedgeMonomial) -> Option<(i64, WedgeMonomial)>) -> FockVector {
        let mut out = FockVector::zero();
        for (w, c) in &self.terms {
            if let Some((s, w2)) = op(w) {
                out.add_term(w2, &(c * &Scalar::from_int(s)));
            }
        }
        out
    }

    /// `Σ c · z^m s_λ` read off through the dictionary, with `s_λ` written in `h`; grouped by charge.
    pub fn to_boson(&self) -> BTreeMap<i64, Element> {
        let mut out: BTreeMap<i64, Element> = BTreeMap::new();
        for (w, c) in &self.terms {
            let (m, lam) = to_boson(w);
            out.entry(m).or_default().add_scaled(&schur_h(&lam.to_vector()), c);
        }
        out.retain(|_, e| !e.is_zero());
        out
    }
}

pub fn wedge_psi_plus(k: i64, v: &FockVector) -> FockVector {
    v.apply(|w| w.psi_plus(k))
}

pub fn wedge_psi_minus(k: i64, v: &FockVector) -> FockVector {
    v.apply(|w| w.psi_minus(k))
}

/// All monomials whose occupied set is `S ∪ {i < lo}` for `S ⊆ [lo, hi]`, keeping heads of length `≤ max_head`.
pub fn monomials_in_range(lo: i64, hi: i64, max_head: usize) -> Vec<WedgeMonomial> {
    let width = (hi - lo + 1) as u32;
    assert!(width < 31, "index range too wide for exhaustive enumeration");
    (0u32..1 << width)
        .filter_map(|mask| {
            let occupied: Vec<i64> = (lo..=hi).rev().filter(|i| mask & (1 << (i - lo)) != 0).collect();
            let charge = lo - 1 + occupied.len() as i64;
            let w = WedgeMonomial::canonical(charge, occupied);
            (w.head.len() <= max_head).then_some(w)
        })
        .collect()
}

/// The three anticommutation relations of `ψ±` on `monomials`, for all `k, l ∈ [lo, hi]`.
pub fn check_clifford(monomials: &[WedgeMonomial], lo: i64, hi: i64) -> Report {
    let outcomes: Vec<Vec<Option<serde_json::Value>>> = monomials
        .par_iter()
        .map(|w| {
            let v = FockVector::monomial(w.clone());
            let mut out = Vec::new();
            for k in lo..=hi {
                for l in lo..=hi {
                    let pp = wedge_psi_plus(k, &wedge_psi_plus(l, &v)).add(&wedge_psi_plus(l, &wedge_psi_plus(k, &v)));
                    let mm = wedge_psi_minus(k, &wedge_psi_minus(l, &v)).add(&wedge_psi_minus(l, &wedge_psi_minus(k, &v)));
                    let pm = wedge_psi_plus(k, &wedge_psi_minus(l, &v)).add(&wedge_psi_minus(l, &wedge_psi_plus(k, &v)));
                    let delta = if k == l { v.clone() } else { FockVector::zero() };
                    for (rel, lhs, rhs) in [("plus-plus", pp, FockVector::zero()), ("minus-minus", mm, FockVector::zero()), ("mixed", pm, delta)] {
                        out.push((lhs != rhs).then(|| json!({"relation": rel, "k": k, "l": l, "monomial": w.to_string()})));
                    }
                }
            }
            out
        })
        .collect();
    let mut report = Report::new("clifford");
    report.extend(outcomes.into_iter().flatten());
    report
}

/// Intertwining of the wedge action with the Schur-context operators:
/// `ψ+_j v_{m,λ} ↔ z^{m+1} Ψ+_{j-m-1}(s_λ)` and `ψ-_j v_{m,λ} ↔ z^{m-1} Ψ-_{j-m}(s_λ)`,
/// for `|λ| ≤ n`, `|m| ≤ max_charge`, `j ∈ [j_lo, j_hi]`.
pub fn check_bf(n: u32, max_charge: i64, j_lo: i64, j_hi: i64) -> Result<Report> {
    let reach = j_hi.abs().max(j_lo.abs()) + max_charge + 1;
    let ctx = OperatorContext::new(FamilyTag::Schur, n + reach as u32);
    let mut cases = Vec::new();
    for m in -max_charge..=max_charge {
        for lam in Partition::up_to(n, usize::MAX) {
            for j in j_lo..=j_hi {
                cases.push((m, lam.clone(), j));
            }
        }
    }
    let outcomes: Result<Vec<Vec<Option<serde_json::Value>>>> = cases
        .par_iter()
        .map(|(m, lam, j)| {
            let (m, j) = (*m, *j);
            let v = FockVector::monomial(from_boson(m, lam));
            let s = schur_h(&lam.to_vector());
            let mut out = Vec::new();
            let sides = [
                ("plus", wedge_psi_plus(j, &v), m + 1, ctx.psi_plus(j - m - 1, &s)?),
                ("minus", wedge_psi_minus(j, &v), m - 1, ctx.psi_minus(j - m, &s)?),
            ];
            for (side, fermion, charge, boson) in sides {
                let lhs = fermion.to_boson();
                let mut rhs = BTreeMap::new();
                if !boson.is_zero() {
                    rhs.insert(charge, boson);
                }
                out.push((lhs != rhs).then(|| {
                    json!({"side": side, "m": m, "j": j, "lambda": lam.to_string(),
                        "lhs": lhs.iter().map(|(c, e)| format!("z^{c}*({e})")).collect::<Vec<_>>(),
                        "rhs": rhs.iter().map(|(c, e)| format!("z^{c}*({e})")).collect::<Vec<_>>()})
                }));
            }
            Ok(out)
        })
        .collect();
    let mut report = Report::new("fock");
    report.extend(outcomes?.into_iter().flatten());
    Ok(report)
}
