//! Pointwise check of the shift-operator identities behind the determinant forms of `Q*(ū)`, `R*(ū)`.

use rand::Rng;
use serde_json::json;

use crate::combinatorics::falling_factorial;
use crate::error::{Error, Result};
use crate::families::det;
use crate::report::Report;
use crate::scalar::{rat, ratio, Rational};

type Func = Box<dyn Fn(&[Rational]) -> Result<Rational> + Send + Sync>;

fn pole(what: &str, u: &[Rational]) -> Error {
    Error::Pole(format!("{what} at {}", u.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
}

fn vandermonde() -> Func {
    Box::new(|u: &[Rational]| {
        let mut acc = rat(1);
        for i in 0..u.len() {
            for j in i + 1..u.len() {
                acc *= &u[j] - &u[i];
            }
        }
        Ok(acc)
    })
}

/// `g ↦ (1/u_i) e^{-∂_i} g`, i.e. `g(.., u_i - 1, ..)/u_i`.
fn lower(i: usize, g: Func) -> Func {
    Box::new(move |u: &[Rational]| {
        if u[i] == rat(0) {
            return Err(pole("1/u", u));
        }
        let mut w = u.to_vec();
        w[i] -= rat(1);
        Ok(g(&w)? / &u[i])
    })
}

/// `g ↦ e^{∂_i} (1/u_i) g`, i.e. `g(.., u_i + 1, ..)/(u_i + 1)`.
fn raise(i: usize, g: Func) -> Func {
    Box::new(move |u: &[Rational]| {
        let mut w = u.to_vec();
        w[i] += rat(1);
        if w[i] == rat(0) {
            return Err(pole("1/u", u));
        }
        Ok(g(&w)? / &w[i])
    })
}

fn ff(u: &Rational, k: i64, all: &[Rational]) -> Result<Rational> {
    falling_factorial(u, k).map_err(|_| pole("falling factorial", all))
}

/// Both identities at each sample `ū ∈ ℚ^l`:
/// `Π_i ((1/u_i) e^{-∂_i})^{i-1} V(ū) = det[1/(u_i|i-j)]` and `Π_i (e^{∂_i} 1/u_i)^{i-1} V(ū) = det[(u_i|j-i)]`,
/// with `V(ū) = Π_{i<j} (u_j - u_i)`, plus the intermediate form `Π 1/(u_i|i-1) det[(u_i-i+2)^{j-1}]`.
pub fn lem2_check(l: usize, samples: &[Vec<Rational>]) -> Result<Report> {
    let mut lhs1 = vandermonde();
    let mut lhs2 = vandermonde();
    for i in 0..l {
        for _ in 0..i {
            lhs1 = lower(i, lhs1);
            lhs2 = raise(i, lhs2);
        }
    }
    let mut report = Report::new("lem2");
    for u in samples {
        if u.len() != l {
            return Err(Error::Shape(format!("sample of length {} for l = {l}", u.len())));
        }
        let m1: Vec<Vec<Rational>> = (0..l)
            .map(|i| (0..l).map(|j| ff(&u[i], i as i64 - j as i64, u).and_then(|v| if v == rat(0) { Err(pole("1/(u|k)", u)) } else { Ok(v.recip()) })).collect())
            .collect::<Result<_>>()?;
        let m2: Vec<Vec<Rational>> = (0..l)
            .map(|i| (0..l).map(|j| ff(&u[i], j as i64 - i as i64, u)).collect())
            .collect::<Result<_>>()?;
        let mut pref = rat(1);
        for (i, ui) in u.iter().enumerate() {
            let v = ff(ui, i as i64, u)?;
            if v == rat(0) {
                return Err(pole("1/(u|i-1)", u));
            }
            pref /= v;
        }
        let m3: Vec<Vec<Rational>> = (0..l)
            .map(|i| {
                let base = &u[i] - rat(i as i64) + rat(1);
                (0..l).map(|j| num_traits::pow(base.clone(), j)).collect()
            })
            .collect();
        let (a1, b1) = (lhs1(u)?, det(&m1));
        let mid = pref * det(&m3);
        let (a2, b2) = (lhs2(u)?, det(&m2));
        let show = |x: &Rational| x.to_string();
        let point: Vec<String> = u.iter().map(show).collect();
        report.record((a1 != b1).then(|| json!({"identity": "lowering", "u": point, "lhs": show(&a1), "rhs": show(&b1)})));
        report.record((a1 != mid).then(|| json!({"identity": "vandermonde-form", "u": point, "lhs": show(&a1), "rhs": show(&mid)})));
        report.record((a2 != b2).then(|| json!({"identity": "raising", "u": point, "lhs": show(&a2), "rhs": show(&b2)})));
    }
    Ok(report)
}

/// `count` points of `ℚ^n` whose coordinates are an integer `≥ min_int` plus a fraction with
/// denominator at most 7, so no falling factorial of small order vanishes.
pub fn pole_free_points(rng: &mut impl Rng, n: usize, count: usize, min_int: i64) -> Vec<Vec<Rational>> {
    (0..count)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let den = rng.gen_range(1..=7);
                    let num = rng.gen_range(0..den);
                    rat(rng.gen_range(min_int..min_int + 20)) + ratio(num, den)
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn two_variables_at_five_seven() {
        let r = lem2_check(2, &[vec![rat(5), rat(7)]]).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        // lowering side equals 1/7 there
        let mut f = vandermonde();
        f = lower(1, f);
        assert_eq!(f(&[rat(5), rat(7)]).unwrap(), ratio(1, 7));
    }

    #[test]
    fn random_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for l in 1..=4 {
            let pts = pole_free_points(&mut rng, l, 20, l as i64 + 1);
            assert!(lem2_check(l, &pts).unwrap().passed());
        }
    }

    #[test]
    fn poles_are_reported() {
        assert!(matches!(lem2_check(2, &[vec![rat(5), rat(0)]]), Err(Error::Pole(_))));
    }
}
