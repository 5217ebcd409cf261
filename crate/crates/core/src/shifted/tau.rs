//! The shift automorphism `τ` of the shifted ring.

use num_bigint::BigInt;

use super::series::{to_e_presentation, to_h_presentation};
use crate::combinatorics::{binomial, falling_int};
use crate::ring::{Element, Generator, GeneratorFamily};
use crate::scalar::{Rational, Scalar};

fn binomial_sum(family: GeneratorFamily, a: u32, k: i64) -> Element {
    if k <= 0 {
        return Element::generator(family, k);
    }
    let mut out = Element::zero();
    for i in 0..=a as i64 {
        let c: BigInt = binomial(a as u64, i as u64) * falling_int(k - 1, i as u64);
        if c != BigInt::from(0) {
            out.add_scaled(&Element::generator(family, k - i), &Scalar::from(Rational::from_integer(c)));
        }
    }
    out
}

/// `τ^a(h*_k) = Σ_i C(a,i) (k-1|i) h*_{k-i}`, `a ≥ 0`.
pub fn tau_h(a: u32, k: i64) -> Element {
    binomial_sum(GeneratorFamily::HStar, a, k)
}

/// `τ^-a(e*_k) = Σ_i C(a,i) (k-1|i) e*_{k-i}`, `a ≥ 0`.
pub fn tau_inv_e(a: u32, k: i64) -> Element {
    binomial_sum(GeneratorFamily::EStar, a, k)
}

fn has(x: &Element, family: GeneratorFamily) -> bool {
    x.generators().iter().any(|g| g.family == family)
}

fn direct(a: i64, x: &Element, family: GeneratorFamily) -> Element {
    let n = a.unsigned_abs() as u32;
    x.substitute(&|g: Generator| {
        (g.family == family).then(|| binomial_sum(family, n, g.index as i64))
    })
}

/// `τ^a(x)`. Positive powers act directly on `h*`, negative ones on `e*`; other inputs are
/// rewritten through the `h*`/`e*` inversion first and returned in their original presentation
/// (mixed inputs come back in `h*`).
pub fn tau_apply(a: i64, x: &Element) -> Element {
    if a == 0 {
        return x.clone();
    }
    let (hs, es) = (has(x, GeneratorFamily::HStar), has(x, GeneratorFamily::EStar));
    if !hs && !es {
        return x.clone();
    }
    let in_e = es && !hs;
    match (a > 0, in_e) {
        (true, false) => direct(a, &to_h_presentation(x), GeneratorFamily::HStar),
        (false, true) => direct(a, x, GeneratorFamily::EStar),
        (true, true) => to_e_presentation(&direct(a, &to_h_presentation(x), GeneratorFamily::HStar)),
        (false, false) => to_h_presentation(&direct(a, &to_e_presentation(x), GeneratorFamily::EStar)),
    }
}

/// `τ^a` by `|a|` single steps `τ(h*_k) = h*_k + (k-1)h*_{k-1}` (or the `e*` step for `a < 0`).
pub fn tau_iterated(a: i64, x: &Element) -> Element {
    let mut y = x.clone();
    for _ in 0..a.unsigned_abs() {
        y = tau_apply(a.signum(), &y);
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(tau_apply(1, &Element::hs(1)), Element::hs(1));
        assert_eq!(tau_apply(1, &Element::hs(2)), &Element::hs(2) + &Element::hs(1));
        let expect = &(&Element::hs(3) + &Element::hs(2).scale_int(4)) + &Element::hs(1).scale_int(2);
        assert_eq!(tau_apply(2, &Element::hs(3)), expect);
        assert_eq!(tau_iterated(2, &Element::hs(3)), expect);
    }

    #[test]
    fn binomial_formula_equals_iteration() {
        for a in 1..=4 {
            for k in 1..=8 {
                assert_eq!(tau_apply(a, &Element::hs(k)), tau_iterated(a, &Element::hs(k)));
                assert_eq!(tau_apply(-a, &Element::es(k)), tau_iterated(-a, &Element::es(k)));
            }
        }
    }

    #[test]
    fn group_law_through_inversion() {
        for k in 1..=6 {
            let x = Element::hs(k);
            for (a, b) in [(2, -1), (-1, 1), (-2, 3), (1, -3)] {
                assert_eq!(tau_apply(a, &tau_apply(b, &x)), tau_apply(a + b, &x), "a={a} b={b} k={k}");
            }
        }
    }

    #[test]
    fn multiplicative() {
        let x = &Element::hs(2) * &Element::hs(3);
        assert_eq!(tau_apply(2, &x), &tau_apply(2, &Element::hs(2)) * &tau_apply(2, &Element::hs(3)));
        let y = &Element::es(2) * &Element::hs(1);
        assert_eq!(tau_apply(-1, &y), to_h_presentation(&(&tau_apply(-1, &Element::es(2)) * &tau_apply(-1, &Element::hs(1)))));
    }
}
