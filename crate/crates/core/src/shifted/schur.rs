//! Shifted Schur functions, the multivariate shifted generating functions and evaluation.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::laurent::{ff_laurent, to_basis, Basis, InvUSeries};
use super::series::Presentation;
use super::tau::{tau_h, tau_inv_e};
use crate::combinatorics::{falling_factorial, straighten, IntegerVector, Partition, StraightenResult};
use crate::error::{Error, Result};
use crate::families::det;
use crate::ring::{Element, Generator, GeneratorFamily};
use crate::scalar::{rat, Rational, Ring, Scalar};
use crate::series::Window;

/// `det[τ^{j-1} h*_{r_i - i + j}]` or `det[τ^{1-j} e*_{r_i - i + j}]` on the given rows.
pub fn twisted_det(rows: &[i64], p: Presentation) -> Element {
    let l = rows.len();
    let m: Vec<Vec<Element>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let k = rows[i] - i as i64 + j as i64;
                    match p {
                        Presentation::H => tau_h(j as u32, k),
                        Presentation::E => tau_inv_e(j as u32, k),
                    }
                })
                .collect()
        })
        .collect();
    det(&m)
}

/// `s*_α`, straightened to `± s*_λ`, then written by the `h*` or `e*` Jacobi–Trudi determinant.
pub fn shifted_schur(alpha: &IntegerVector, p: Presentation) -> Element {
    match straighten(alpha) {
        StraightenResult::Zero => Element::zero(),
        StraightenResult::Signed { sign, partition } => {
            let rows = match p {
                Presentation::H => partition.to_vector(),
                Presentation::E => partition.conjugate().to_vector(),
            };
            twisted_det(rows.entries(), p).scale_int(sign as i64)
        }
    }
}

/// Coefficients of a multivariate shifted series in the product basis `Π 1/(u_i|λ_i)` or `Π (u_i|-λ_i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiShiftedTable {
    basis: Basis,
    window: Window,
    entries: BTreeMap<IntegerVector, Element>,
}

#[derive(Serialize)]
struct TableJson<'a> {
    arity: usize,
    basis: Basis,
    window: &'a Window,
    entries: Vec<EntryJson>,
}

#[derive(Serialize)]
struct EntryJson {
    lambda: Vec<i64>,
    element: String,
}

impl MultiShiftedTable {
    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn arity(&self) -> usize {
        self.window.arity()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&IntegerVector, &Element)> {
        self.entries.iter()
    }

    pub fn get(&self, lambda: &[i64]) -> Result<Element> {
        if !self.window.contains(lambda) {
            return Err(Error::OutOfWindow(lambda.to_vec()));
        }
        Ok(self.entries.get(&IntegerVector(lambda.to_vec())).cloned().unwrap_or_default())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TableJson {
            arity: self.arity(),
            basis: self.basis,
            window: &self.window,
            entries: self.entries.iter().map(|(k, v)| EntryJson { lambda: k.0.clone(), element: v.to_string() }).collect(),
        })
        .expect("serializable")
    }
}

fn window_top(window: &Window) -> i64 {
    window.vectors().iter().flatten().copied().max().unwrap_or(0).max(0)
}

/// Basis coefficients of `pref(u) · Σ_k g_k b_k(u + c)` for `k ≤ kmax`, keyed by basis index.
fn row_coefficients(
    pref: &InvUSeries<Rational>,
    gens: impl Fn(i64) -> Element,
    shifted_basis: impl Fn(i64, i64) -> InvUSeries<Rational>,
    basis: Basis,
    n: i64,
    ext: i64,
) -> Result<BTreeMap<i64, Element>> {
    let low = -(n + ext);
    let mut series = InvUSeries::<Element>::zero(low);
    for k in 0..=n + ext {
        let g = gens(k);
        if !g.is_zero() {
            series = series.add(&shifted_basis(k, low).lift::<Element>().scale(&g));
        }
    }
    let prod = pref.lift::<Element>().mul(&series).truncate(-n);
    Ok(to_basis(&prod, basis)?.into_iter().filter(|(_, c)| !c.is_zero()).collect())
}

fn table_from_rows(window: &Window, basis: Basis, coef: &[Vec<BTreeMap<i64, Element>>]) -> MultiShiftedTable {
    let l = window.arity();
    let entries: Vec<(IntegerVector, Element)> = window
        .vectors()
        .into_par_iter()
        .map(|v| {
            let m: Vec<Vec<Element>> = (0..l)
                .map(|i| (0..l).map(|j| coef[i][j].get(&v[i]).cloned().unwrap_or_default()).collect())
                .collect();
            (IntegerVector(v), det(&m))
        })
        .filter(|(_, e)| !e.is_zero())
        .collect();
    MultiShiftedTable { basis, window: window.clone(), entries: entries.into_iter().collect() }
}

/// Coefficients of `det[1/(u_i|i-j)] Π Q*(u_i - i + 1)` in the basis `Π 1/(u_i|λ_i)`, over the window.
///
/// Each entry is a determinant of single-variable coefficients, computed by expansion at `u = ∞`.
pub fn qstar_multivar(window: &Window) -> Result<MultiShiftedTable> {
    let l = window.arity();
    if l == 0 {
        return Err(Error::Shape("need at least one variable".into()));
    }
    let n = window_top(window);
    let ext = l as i64;
    let mut coef = vec![vec![BTreeMap::new(); l]; l];
    for (i, row) in coef.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            let m = i as i64 - j as i64;
            let pref = Basis::Falling.element(m, -(n + ext));
            let c = -(i as i64);
            // 1/(u + c | k) = (u + c - k | -k)
            *slot = row_coefficients(&pref, Element::hs, |k, low| ff_laurent(c - k, -k, low), Basis::Falling, n, ext)?;
        }
    }
    Ok(table_from_rows(window, Basis::Falling, &coef))
}

/// Coefficients of `det[(u_i|j-i)] Π R*(u_i + i - 1)` in the basis `Π (u_i|-λ_i)`, over the window.
pub fn rstar_multivar(window: &Window) -> Result<MultiShiftedTable> {
    let l = window.arity();
    if l == 0 {
        return Err(Error::Shape("need at least one variable".into()));
    }
    let n = window_top(window);
    let ext = l as i64;
    let mut coef = vec![vec![BTreeMap::new(); l]; l];
    for (i, row) in coef.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            let pref = ff_laurent(0, j as i64 - i as i64, -(n + ext));
            let c = i as i64;
            let gens = |k: i64| Element::es(k).scale_int(if k % 2 == 0 { 1 } else { -1 });
            *slot = row_coefficients(&pref, gens, |k, low| ff_laurent(c, -k, low), Basis::Rising, n, ext)?;
        }
    }
    Ok(table_from_rows(window, Basis::Rising, &coef))
}

/// Values of `h*_1..h*_kmax` at `(x_1, ..., x_n, 0, 0, ...)`.
pub fn hstar_values(x: &[Rational], kmax: u32) -> Vec<Rational> {
    (0..=kmax)
        .map(|r| {
            let r = r as usize;
            // dp[s]: sum over weakly increasing index sequences of length s of Π (x_{i_t} - r + t)
            let mut dp = vec![rat(0); r + 1];
            dp[0] = rat(1);
            for xi in x {
                for s in 1..=r {
                    let f = xi - rat(r as i64) + rat(s as i64);
                    let add = &dp[s - 1] * f;
                    dp[s] += add;
                }
            }
            dp[r].clone()
        })
        .collect()
}

/// Values of `e*_1..e*_kmax` at `(x_1, ..., x_n, 0, 0, ...)`.
pub fn estar_values(x: &[Rational], kmax: u32) -> Vec<Rational> {
    (0..=kmax)
        .map(|r| {
            let r = r as usize;
            let mut dp = vec![rat(0); r + 1];
            dp[0] = rat(1);
            for xi in x {
                for s in (1..=r).rev() {
                    let f = xi + rat(r as i64) - rat(s as i64);
                    let add = &dp[s - 1] * f;
                    dp[s] += add;
                }
            }
            dp[r].clone()
        })
        .collect()
}

/// Evaluates an element over `h*`/`e*` at `(x_1, ..., x_n, 0, ...)` by the defining sums.
pub fn eval_shifted(a: &Element, x: &[Rational]) -> Result<Scalar> {
    let gens = a.generators();
    let top = |f: GeneratorFamily| gens.iter().filter(|g| g.family == f).map(|g| g.index).max().unwrap_or(0);
    let hv = hstar_values(x, top(GeneratorFamily::HStar));
    let ev = estar_values(x, top(GeneratorFamily::EStar));
    a.eval(&|g: Generator| match g.family {
        GeneratorFamily::HStar => Some(Scalar::from(hv[g.index as usize].clone())),
        GeneratorFamily::EStar => Some(Scalar::from(ev[g.index as usize].clone())),
        _ => None,
    })
}

/// `det(x_i + n - i | λ_j + n - j) / det(x_i + n - i | n - j)`.
pub fn shifted_bialternant(lambda: &Partition, x: &[Rational]) -> Result<Rational> {
    let n = x.len();
    if lambda.len() > n {
        return Ok(rat(0));
    }
    let mat = |parts: &dyn Fn(usize) -> i64| -> Result<Vec<Vec<Rational>>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| falling_factorial(&(&x[i] + rat((n - 1 - i) as i64)), parts(j) + (n - 1 - j) as i64))
                    .collect()
            })
            .collect()
    };
    let den = det(&mat(&|_| 0)?);
    if Ring::is_zero(&den) {
        return Err(Error::CoincidentPoints(format!("x_i - i repeats in {x:?}")));
    }
    let num = det(&mat(&|j| lambda.part(j) as i64)?);
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn iv(v: &[i64]) -> IntegerVector {
        IntegerVector(v.to_vec())
    }

    #[test]
    fn schur_examples() {
        assert_eq!(shifted_schur(&iv(&[3]), Presentation::H), Element::hs(3));
        let s11 = &(&Element::hs(1).pow(2) - &Element::hs(1)) - &Element::hs(2);
        assert_eq!(shifted_schur(&iv(&[1, 1]), Presentation::H), s11);
        assert_eq!(shifted_schur(&iv(&[1, 3]), Presentation::H), -&shifted_schur(&iv(&[2, 2]), Presentation::H));
        assert_eq!(shifted_schur(&iv(&[1, 1]), Presentation::E), Element::es(2));
        assert!(shifted_schur(&iv(&[1, 2]), Presentation::H).is_zero());
    }

    #[test]
    fn row_straightening_is_automatic() {
        for v in [[1i64, 3], [0, 2], [-1, 4], [2, -1], [3, 5]] {
            assert_eq!(twisted_det(&v, Presentation::H), shifted_schur(&iv(&v), Presentation::H), "{v:?}");
        }
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval_shifted(&Element::hs(1), &[rat(1), rat(2)]).unwrap(), Scalar::from_int(3));
        assert_eq!(eval_shifted(&Element::hs(2), &[rat(1), rat(1)]).unwrap(), Scalar::from_int(0));
        let x = [rat(3), rat(1)];
        let s21 = shifted_schur(&iv(&[2, 1]), Presentation::H);
        let lam = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(eval_shifted(&s21, &x).unwrap(), Scalar::from(shifted_bialternant(&lam, &x).unwrap()));
    }

    #[test]
    fn both_presentations_match_bialternant() {
        let x = [ratio(13, 3), rat(7), ratio(-5, 2), ratio(9, 7)];
        for lam in Partition::up_to(5, usize::MAX) {
            let b = Scalar::from(shifted_bialternant(&lam, &x).unwrap());
            for p in [Presentation::H, Presentation::E] {
                assert_eq!(eval_shifted(&shifted_schur(&lam.to_vector(), p), &x).unwrap(), b, "{lam} {p:?}");
            }
        }
    }

    #[test]
    fn multivar_small() {
        let w = Window::full(1, 4);
        let t = qstar_multivar(&w).unwrap();
        for r in 0..=4 {
            assert_eq!(t.get(&[r]).unwrap(), Element::hs(r));
        }
        let w = Window::full(2, 4);
        let t = qstar_multivar(&w).unwrap();
        for v in w.vectors() {
            assert_eq!(t.get(&v).unwrap(), shifted_schur(&iv(&v), Presentation::H), "{v:?}");
        }
        let r = rstar_multivar(&w).unwrap();
        for v in w.vectors() {
            let sign = if v.iter().sum::<i64>() % 2 == 0 { 1 } else { -1 };
            assert_eq!(r.get(&v).unwrap(), twisted_det(&v, Presentation::E).scale_int(sign), "{v:?}");
        }
        assert_eq!(r.to_json()["basis"], "rising");
    }
}
