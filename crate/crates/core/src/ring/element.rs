use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{fmt_rational, Rational, Ring, Scalar};

/// Which alphabet a generator belongs to.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GeneratorFamily {
    /// Generic `Q_k`; also used for Schur Q-functions and Hall–Littlewood `q_k`.
    Q,
    H,
    E,
    P,
    HStar,
    EStar,
}

impl GeneratorFamily {
    pub fn prefix(self) -> &'static str {
        match self {
            GeneratorFamily::Q => "Q",
            GeneratorFamily::H => "h",
            GeneratorFamily::E => "e",
            GeneratorFamily::P => "p",
            GeneratorFamily::HStar => "hs",
            GeneratorFamily::EStar => "es",
        }
    }

    pub fn from_prefix(s: &str) -> Option<Self> {
        Some(match s {
            "Q" => GeneratorFamily::Q,
            "h" => GeneratorFamily::H,
            "e" => GeneratorFamily::E,
            "p" => GeneratorFamily::P,
            "hs" => GeneratorFamily::HStar,
            "es" => GeneratorFamily::EStar,
            _ => return None,
        })
    }
}

/// A single generator `family[index]`, index ≥ 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Generator {
    pub family: GeneratorFamily,
    pub index: u32,
}

impl Generator {
    pub fn new(family: GeneratorFamily, index: u32) -> Self {
        assert!(index >= 1, "generator index must be positive");
        Generator { family, index }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.family.prefix(), self.index)
    }
}

/// A product of generator powers, sorted by generator with positive exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct Monomial(Vec<(Generator, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn single(g: Generator) -> Self {
        Monomial(vec![(g, 1)])
    }

    /// Builds a monomial from unsorted factors, merging repeats.
    pub fn from_factors(factors: impl IntoIterator<Item = (Generator, u32)>) -> Self {
        let mut v: Vec<(Generator, u32)> = factors.into_iter().filter(|f| f.1 > 0).collect();
        v.sort_by_key(|f| f.0);
        let mut out: Vec<(Generator, u32)> = Vec::with_capacity(v.len());
        for (g, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == g => last.1 += e,
                _ => out.push((g, e)),
            }
        }
        Monomial(out)
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(g, e)| g.index * e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Indices with multiplicity, largest first; the sort key for printing.
    fn index_shape(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self
            .0
            .iter()
            .flat_map(|(g, e)| std::iter::repeat(g.index).take(*e as usize))
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (g, e) in self.0.iter().rev() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial in the generators with exact scalar coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Element::constant(Scalar::from_int(1))
    }

    pub fn constant(c: Scalar) -> Self {
        Element::term(Monomial::one(), c)
    }

    pub fn from_int(n: i64) -> Self {
        Element::constant(Scalar::from_int(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        Element::constant(Scalar::from(r))
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !Ring::is_zero(&c) {
            terms.insert(m, c);
        }
        Element { terms }
    }

    /// The generator `family[k]`, with the conventions `family[0] = 1` and `family[k] = 0` for `k < 0`.
    pub fn generator(family: GeneratorFamily, k: i64) -> Self {
        match k {
            0 => Element::one(),
            k if k < 0 => Element::zero(),
            k => Element::term(Monomial::single(Generator::new(family, k as u32)), Scalar::from_int(1)),
        }
    }

    pub fn h(k: i64) -> Self {
        Element::generator(GeneratorFamily::H, k)
    }

    pub fn e(k: i64) -> Self {
        Element::generator(GeneratorFamily::E, k)
    }

    pub fn q(k: i64) -> Self {
        Element::generator(GeneratorFamily::Q, k)
    }

    pub fn hs(k: i64) -> Self {
        Element::generator(GeneratorFamily::HStar, k)
    }

    pub fn es(k: i64) -> Self {
        Element::generator(GeneratorFamily::EStar, k)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The constant term.
    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one())
    }

    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::default()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Highest weighted degree, with `deg family[k] = k`.
    pub fn degree(&self) -> Result<u32> {
        self.terms.keys().map(Monomial::degree).max().ok_or(Error::UndefinedDegree)
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if Ring::is_zero(c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if Ring::is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        if Ring::is_zero(c) {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), &(a * c));
        }
    }

    pub fn add_assign_ref(&mut self, other: &Element) {
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a);
        }
    }

    pub fn sub_assign_ref(&mut self, other: &Element) {
        for (m, a) in &other.terms {
            self.add_term(m.clone(), &-a);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if Ring::is_zero(c) {
            return Element::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        let mut out = Element::zero();
        for (m, a) in &self.terms {
            let p = a * c;
            if !Ring::is_zero(&p) {
                out.terms.insert(m.clone(), p);
            }
        }
        out
    }

    pub fn scale_int(&self, n: i64) -> Element {
        self.scale(&Scalar::from_int(n))
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Element {
        let mut out = Element::zero();
        if Ring::is_zero(c) {
            return out;
        }
        for (k, a) in &self.terms {
            let p = a * c;
            if !Ring::is_zero(&p) {
                out.terms.insert(k.mul(m), p);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Element {
        let mut base = self.clone();
        let mut acc = Element::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Element {
        let mut out = Element::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c));
        }
        out
    }

    /// Substitutes a rational value for `t` in every coefficient.
    pub fn specialize_t(&self, t: &Rational) -> Element {
        self.map_coeffs(|c| Scalar::from(c.eval_t(t)))
    }

    /// Ring homomorphism determined by images of generators; `None` keeps a generator fixed.
    pub fn substitute(&self, image: &dyn Fn(Generator) -> Option<Element>) -> Element {
        self.try_substitute(&|g| Ok(image(g).unwrap_or_else(|| Element::term(Monomial::single(g), Scalar::from_int(1)))))
            .expect("infallible image")
    }

    /// Ring homomorphism whose generator images may fail.
    pub fn try_substitute(&self, image: &dyn Fn(Generator) -> Result<Element>) -> Result<Element> {
        let mut cache: BTreeMap<(Generator, u32), Element> = BTreeMap::new();
        let mut out = Element::zero();
        for (m, c) in &self.terms {
            let mut acc = Element::constant(c.clone());
            for &(g, e) in m.factors() {
                if !cache.contains_key(&(g, e)) {
                    let base = match cache.get(&(g, 1)) {
                        Some(b) => b.clone(),
                        None => {
                            let b = image(g)?;
                            cache.insert((g, 1), b.clone());
                            b
                        }
                    };
                    cache.insert((g, e), base.pow(e));
                }
                acc = &acc * &cache[&(g, e)];
                if acc.is_zero() {
                    break;
                }
            }
            out.add_assign_ref(&acc);
        }
        Ok(out)
    }

    /// Evaluates under a scalar assignment of generators.
    pub fn eval(&self, value: &dyn Fn(Generator) -> Option<Scalar>) -> Result<Scalar> {
        let mut cache: BTreeMap<Generator, Scalar> = BTreeMap::new();
        let mut acc = Scalar::default();
        for (m, c) in &self.terms {
            let mut p = c.clone();
            for &(g, e) in m.factors() {
                let v = match cache.get(&g) {
                    Some(v) => v.clone(),
                    None => {
                        let v = value(g).ok_or_else(|| Error::MissingValue(g.to_string()))?;
                        cache.insert(g, v.clone());
                        v
                    }
                };
                p = &p * &v.pow(e);
            }
            acc = &acc + &p;
        }
        Ok(acc)
    }

    /// All generators occurring in the element.
    pub fn generators(&self) -> Vec<Generator> {
        let mut v: Vec<Generator> = self.terms.keys().flat_map(|m| m.0.iter().map(|f| f.0)).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Terms in printing order: degree descending, then index shape ascending.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Scalar)> {
        let mut v: Vec<(u32, Vec<u32>, &Monomial, &Scalar)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.degree(), m.index_shape(), m, c))
            .collect();
        v.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)).then_with(|| a.2.cmp(b.2)));
        v.into_iter().map(|(_, _, m, c)| (m, c)).collect()
    }
}

impl From<Scalar> for Element {
    fn from(c: Scalar) -> Self {
        Element::constant(c)
    }
}

impl From<Generator> for Element {
    fn from(g: Generator) -> Self {
        Element::term(Monomial::single(g), Scalar::from_int(1))
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let (big, small) = if self.terms.len() >= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        out.add_assign_ref(small);
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        let (big, small) = if self.terms.len() >= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let mut out = Element::zero();
        for (m, c) in &small.terms {
            if m.is_one() {
                out.add_assign_ref(&big.scale(c));
                continue;
            }
            for (k, a) in &big.terms {
                out.add_term(k.mul(m), &(a * c));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Element {
            type Output = Element;
            fn $m(self, rhs: Element) -> Element {
                <&Self as $tr>::$m(&self, &rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

impl Ring for Element {
    fn zero() -> Self {
        Element::zero()
    }
    fn one() -> Self {
        Element::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(r: Rational) -> Self {
        Element::from_rational(r)
    }
    fn add_assign(&mut self, other: &Self) {
        self.add_assign_ref(other);
    }
    fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&Scalar::from(r.clone()))
    }
}

/// Sign and magnitude text of a coefficient; `None` magnitude means a bare unit.
fn coeff_text(c: &Scalar) -> (bool, Option<String>) {
    if let Some(r) = c.as_rational() {
        let neg = r < Rational::from_integer(0.into());
        let mag = if neg { -r } else { r };
        if mag == Rational::from_integer(1.into()) {
            (neg, None)
        } else {
            (neg, Some(fmt_rational(&mag)))
        }
    } else {
        (false, Some(format!("({c})")))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let (neg, mag) = coeff_text(c);
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (mag, m.is_one()) {
                (None, true) => write!(f, "1")?,
                (None, false) => write!(f, "{m}")?,
                (Some(s), true) => write!(f, "{s}")?,
                (Some(s), false) => write!(f, "{s}*{m}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn commutative_product() {
        let a = &Element::h(2) * &Element::h(1);
        let b = &Element::h(1) * &Element::h(2);
        assert_eq!(a, b);
        assert_eq!(a.len(), 1);
        assert_eq!(a.to_string(), "h[2]*h[1]");
    }

    #[test]
    fn cancellation() {
        let x = &Element::h(1).pow(2) - &Element::h(2);
        let y = &x + &Element::h(2);
        assert_eq!(y, Element::h(1).pow(2));
        assert_eq!(y.len(), 1);
    }

    #[test]
    fn t_scaling() {
        let one_minus_t = &Scalar::from_int(1) - &Scalar::t();
        let one_plus_t = &Scalar::from_int(1) + &Scalar::t();
        let a = Element::q(1).scale(&one_minus_t).scale(&one_plus_t);
        let expect = Element::q(1).scale(&Scalar::from_coeffs(vec![rat(1), rat(0), rat(-1)]));
        assert_eq!(a, expect);
        assert_eq!(a.to_string(), "(1-t^2)*Q[1]");
    }

    #[test]
    fn degrees() {
        assert_eq!(Element::h(3).degree().unwrap(), 3);
        assert_eq!((&Element::h(1).pow(2) * &Element::h(2)).degree().unwrap(), 4);
        assert_eq!(Element::from_int(5).degree().unwrap(), 0);
        assert_eq!(Element::zero().degree(), Err(Error::UndefinedDegree));
    }

    #[test]
    fn generator_conventions() {
        assert_eq!(Element::h(0), Element::one());
        assert!(Element::h(-2).is_zero());
    }

    #[test]
    fn printing_order() {
        let a = &(&Element::h(2) * &Element::h(1)).scale(&Scalar::from(crate::scalar::ratio(3, 2))) - &Element::h(3);
        assert_eq!(a.to_string(), "3/2*h[2]*h[1] - h[3]");
        let b = &Element::h(2).pow(2) - &(&Element::h(1) * &Element::h(3));
        assert_eq!(b.to_string(), "h[2]^2 - h[3]*h[1]");
    }

    #[test]
    fn evaluation_and_substitution() {
        let a = Element::h(1).pow(2);
        let v = a.eval(&|g| (g.index == 1).then(|| Scalar::from_int(2))).unwrap();
        assert_eq!(v, Scalar::from_int(4));
        assert!(matches!(Element::h(2).eval(&|_| None), Err(Error::MissingValue(_))));
        let s = a.substitute(&|g| Some(Element::e(g.index as i64)));
        assert_eq!(s, Element::e(1).pow(2));
    }
}
