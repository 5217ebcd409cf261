use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::element::{Element, Generator};
use crate::error::{Error, Result};

type Rule = dyn Fn(usize, Generator) -> Option<Element> + Send + Sync;

/// A Hasse–Schmidt family `D_0, D_1, ...` given by its values on generators.
///
/// `D_m(ab) = Σ_{k+l=m} D_k(a) D_l(b)` and `D_m(1) = δ_{m,0}` extend the rule to all of the ring.
#[derive(Clone)]
pub struct DerivationFamily {
    name: String,
    rule: Arc<Rule>,
}

impl fmt::Debug for DerivationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DerivationFamily({})", self.name)
    }
}

impl DerivationFamily {
    /// `rule(m, g)` returns `D_m(g)`, or `None` if `g` is outside the domain.
    pub fn new(name: impl Into<String>, rule: impl Fn(usize, Generator) -> Option<Element> + Send + Sync + 'static) -> Self {
        DerivationFamily {
            name: name.into(),
            rule: Arc::new(rule),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn on_generator(&self, m: usize, g: Generator) -> Result<Element> {
        (self.rule)(m, g).ok_or_else(|| Error::MissingRule(g.to_string()))
    }

    pub fn apply(&self, m: usize, a: &Element) -> Result<Element> {
        Ok(self.apply_upto(m, a)?.pop().expect("non-empty"))
    }

    /// `[D_0(a), ..., D_max(a)]`.
    pub fn apply_upto(&self, max: usize, a: &Element) -> Result<Vec<Element>> {
        let mut gen_series: HashMap<Generator, Vec<Element>> = HashMap::new();
        let mut pow_series: HashMap<(Generator, u32), Vec<Element>> = HashMap::new();
        let mut out = vec![Element::zero(); max + 1];
        for (mono, c) in a.terms() {
            let mut acc: Vec<Element> = vec![Element::zero(); max + 1];
            acc[0] = Element::constant(c.clone());
            for &(g, e) in mono.factors() {
                if !gen_series.contains_key(&g) {
                    let s = (0..=max).map(|m| self.on_generator(m, g)).collect::<Result<Vec<_>>>()?;
                    gen_series.insert(g, s);
                }
                let p = pow_series
                    .entry((g, e))
                    .or_insert_with(|| {
                        let base = &gen_series[&g];
                        let mut p = vec![Element::zero(); max + 1];
                        p[0] = Element::one();
                        for _ in 0..e {
                            p = convolve(&p, base, max);
                        }
                        p
                    })
                    .clone();
                acc = convolve(&acc, &p, max);
            }
            for (o, x) in out.iter_mut().zip(acc.iter()) {
                o.add_assign_ref(x);
            }
        }
        Ok(out)
    }
}

/// Truncated product of two coefficient sequences.
fn convolve(a: &[Element], b: &[Element], max: usize) -> Vec<Element> {
    let mut out = vec![Element::zero(); max + 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(max + 1 - i) {
            if y.is_zero() {
                continue;
            }
            out[i + j].add_assign_ref(&(x * y));
        }
    }
    out
}

/// `D_m(a)` for a Hasse–Schmidt family.
pub fn hs_apply(d: &DerivationFamily, m: usize, a: &Element) -> Result<Element> {
    d.apply(m, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::element::GeneratorFamily;

    fn schur_dr() -> DerivationFamily {
        DerivationFamily::new("DR", |m, g| {
            (g.family == GeneratorFamily::H).then(|| match m {
                0 => Element::h(g.index as i64),
                1 => -&Element::h(g.index as i64 - 1),
                _ => Element::zero(),
            })
        })
    }

    #[test]
    fn generator_values() {
        let d = schur_dr();
        assert_eq!(hs_apply(&d, 1, &Element::h(4)).unwrap(), -&Element::h(3));
        assert_eq!(hs_apply(&d, 2, &Element::h(4)).unwrap(), Element::zero());
    }

    #[test]
    fn square_of_h1() {
        let d = schur_dr();
        let a = Element::h(1).pow(2);
        assert_eq!(hs_apply(&d, 1, &a).unwrap(), Element::h(1).scale_int(-2));
        assert_eq!(hs_apply(&d, 2, &a).unwrap(), Element::one());
    }

    #[test]
    fn unit_is_delta() {
        let d = schur_dr();
        assert_eq!(hs_apply(&d, 0, &Element::one()).unwrap(), Element::one());
        assert_eq!(hs_apply(&d, 2, &Element::one()).unwrap(), Element::zero());
    }

    #[test]
    fn missing_rule() {
        let d = schur_dr();
        assert!(matches!(hs_apply(&d, 1, &Element::e(2)), Err(Error::MissingRule(_))));
    }
}
