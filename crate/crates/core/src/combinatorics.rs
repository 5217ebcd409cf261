//! Partitions, integer vectors, straightening, falling factorials and Stirling numbers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{rat, Rational};

/// A weakly decreasing sequence of positive integers. Trailing zeros are stripped.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", try_from = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, dropping zero parts. Fails if the parts are not weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts.iter().map(|&p| p as i64).collect()));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    /// Multiplicity of the part value `v` (v ≥ 1).
    pub fn multiplicity(&self, v: u32) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    pub fn to_vector(&self) -> IntegerVector {
        IntegerVector(self.parts.iter().map(|&p| p as i64).collect())
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        partitions_rec(n, n, usize::MAX, &mut cur, &mut out);
        out
    }

    /// All partitions of weight ≤ `n` with at most `max_len` parts.
    pub fn up_to(n: u32, max_len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for w in 0..=n {
            let mut cur = Vec::new();
            partitions_rec(w, w, max_len, &mut cur, &mut out);
        }
        out
    }

    /// All strict partitions of weight ≤ `n`.
    pub fn strict_up_to(n: u32) -> Vec<Partition> {
        Partition::up_to(n, usize::MAX)
            .into_iter()
            .filter(Partition::is_strict)
            .collect()
    }
}

fn partitions_rec(rest: u32, max: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if cur.len() >= max_len {
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        partitions_rec(rest - p, p, max_len, cur, out);
        cur.pop();
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v: IntegerVector = s.parse()?;
        if v.0.iter().any(|&x| x < 0) {
            return Err(Error::InvalidPartition(v.0));
        }
        let parts: Vec<u32> = v.0.iter().map(|&x| x as u32).collect();
        Partition::new(parts).map_err(|_| Error::InvalidPartition(v.0))
    }
}

/// A finite sequence of integers of any sign.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntegerVector(pub Vec<i64>);

impl IntegerVector {
    pub fn new(entries: Vec<i64>) -> Self {
        IntegerVector(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `(k, self...)`.
    pub fn prepend(&self, k: i64) -> IntegerVector {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(k);
        v.extend_from_slice(&self.0);
        IntegerVector(v)
    }
}

impl From<&[i64]> for IntegerVector {
    fn from(s: &[i64]) -> Self {
        IntegerVector(s.to_vec())
    }
}

impl fmt::Display for IntegerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for IntegerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for IntegerVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(IntegerVector::default());
        }
        let mut out = Vec::new();
        let mut pos = 0;
        for tok in s.split(',') {
            let t = tok.trim();
            out.push(t.parse::<i64>().map_err(|e| Error::Parse {
                pos,
                msg: format!("bad integer {t:?}: {e}"),
            })?);
            pos += tok.len() + 1;
        }
        Ok(IntegerVector(out))
    }
}

/// Outcome of normalizing an integer-vector index.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum StraightenResult {
    Zero,
    Signed { sign: i8, partition: Partition },
}

impl StraightenResult {
    pub fn sign(&self) -> i8 {
        match self {
            StraightenResult::Zero => 0,
            StraightenResult::Signed { sign, .. } => *sign,
        }
    }

    pub fn partition(&self) -> Option<&Partition> {
        match self {
            StraightenResult::Zero => None,
            StraightenResult::Signed { partition, .. } => Some(partition),
        }
    }
}

impl fmt::Display for StraightenResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StraightenResult::Zero => write!(f, "0"),
            StraightenResult::Signed { sign, partition } => {
                write!(f, "{}s({})", if *sign < 0 { "-" } else { "" }, partition)
            }
        }
    }
}

pub fn conjugate(lambda: &Partition) -> Partition {
    let first = lambda.part(0);
    let parts = (1..=first)
        .map(|i| lambda.parts.iter().filter(|&&p| p >= i).count() as u32)
        .collect();
    Partition { parts }
}

/// Normalizes `alpha` with the row-swap rule
/// `s(.., a, b, ..) = -s(.., b - 1, a + 1, ..)`.
///
/// Equivalently: the shifted entries `alpha_i - i` must be distinct; sorting them
/// decreasingly gives the sign, and adding back the offsets gives the partition
/// (zero if its last part is negative).
pub fn straighten(alpha: &IntegerVector) -> StraightenResult {
    let mut shifted: Vec<i64> = alpha
        .0
        .iter()
        .enumerate()
        .map(|(i, &a)| a - i as i64 - 1)
        .collect();
    // insertion sort, counting transpositions
    let mut swaps = 0usize;
    for i in 1..shifted.len() {
        let mut j = i;
        while j > 0 && shifted[j - 1] < shifted[j] {
            shifted.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
    }
    if shifted.windows(2).any(|w| w[0] == w[1]) {
        return StraightenResult::Zero;
    }
    let parts: Vec<i64> = shifted
        .iter()
        .enumerate()
        .map(|(i, &b)| b + i as i64 + 1)
        .collect();
    if parts.last().is_some_and(|&p| p < 0) {
        return StraightenResult::Zero;
    }
    let parts: Vec<u32> = parts.into_iter().map(|p| p as u32).collect();
    StraightenResult::Signed {
        sign: if swaps % 2 == 0 { 1 } else { -1 },
        partition: Partition::new(parts).expect("sorted shifted entries give a partition"),
    }
}

/// The falling factorial `(u|k)`, extended to negative `k` as `1/((u+1)...(u+|k|))`.
pub fn falling_factorial(u: &Rational, k: i64) -> Result<Rational> {
    let mut acc = rat(1);
    if k >= 0 {
        for j in 0..k {
            acc *= u - rat(j);
        }
        Ok(acc)
    } else {
        for j in 1..=(-k) {
            acc *= u + rat(j);
        }
        if acc.is_zero() {
            return Err(Error::DivisionByZero(format!("({u}|{k}) has a vanishing factor")));
        }
        Ok(acc.recip())
    }
}

/// Stirling numbers of the second kind, `S(m, k)`; zero when `k > m`.
pub fn stirling2(m: u32, k: u32) -> BigInt {
    if k > m {
        return BigInt::zero();
    }
    // row-by-row recurrence S(n, j) = j S(n-1, j) + S(n-1, j-1)
    let mut row = vec![BigInt::zero(); (k + 1) as usize];
    row[0] = BigInt::one();
    for n in 1..=m {
        let top = n.min(k) as usize;
        for j in (1..=top).rev() {
            row[j] = BigInt::from(j) * &row[j] + &row[j - 1];
        }
        row[0] = BigInt::zero();
    }
    row[k as usize].clone()
}

pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub(crate) fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, i| a * BigInt::from(i))
}

/// `(n|i)` for integer `n`, as an integer.
pub(crate) fn falling_int(n: i64, i: u64) -> BigInt {
    (0..i as i64).fold(BigInt::one(), |a, j| a * BigInt::from(n - j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn iv(v: &[i64]) -> IntegerVector {
        IntegerVector(v.to_vec())
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&p(&[3])), p(&[1, 1, 1]));
        assert_eq!(conjugate(&p(&[2, 1])), p(&[2, 1]));
        assert_eq!(conjugate(&p(&[4, 2, 1])), p(&[3, 2, 1, 1]));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
    }

    #[test]
    fn conjugate_is_involution() {
        for lam in Partition::up_to(10, usize::MAX) {
            assert_eq!(conjugate(&conjugate(&lam)), lam);
            assert_eq!(conjugate(&lam).weight(), lam.weight());
        }
    }

    #[test]
    fn straighten_examples() {
        assert_eq!(
            straighten(&iv(&[1, 3])),
            StraightenResult::Signed { sign: -1, partition: p(&[2, 2]) }
        );
        assert_eq!(
            straighten(&iv(&[2, 1])),
            StraightenResult::Signed { sign: 1, partition: p(&[2, 1]) }
        );
        assert_eq!(straighten(&iv(&[1, 2])), StraightenResult::Zero);
        // s(1,3) = s(1,3,0) = -s(2,2) = s(2,-1,3) = -s(1,-1,4)
        assert_eq!(straighten(&iv(&[1, 3, 0])).sign(), -1);
        assert_eq!(straighten(&iv(&[2, -1, 3])).sign(), -1);
        assert_eq!(straighten(&iv(&[1, -1, 4])).sign(), 1);
        assert_eq!(straighten(&iv(&[1, -1, 4])).partition(), Some(&p(&[2, 2])));
        assert_eq!(straighten(&iv(&[])), StraightenResult::Signed { sign: 1, partition: Partition::empty() });
        assert_eq!(straighten(&iv(&[-1])), StraightenResult::Zero);
        assert_eq!(straighten(&iv(&[0, 0, 0])).partition(), Some(&Partition::empty()));
    }

    /// Applies the adjacent swap rule until the vector is weakly decreasing.
    fn straighten_by_swaps(alpha: &[i64]) -> StraightenResult {
        let mut v = alpha.to_vec();
        let mut sign = 1i8;
        loop {
            let Some(i) = (0..v.len().saturating_sub(1)).find(|&i| v[i] < v[i + 1]) else {
                break;
            };
            if v[i + 1] - 1 == v[i] {
                return StraightenResult::Zero;
            }
            let (a, b) = (v[i], v[i + 1]);
            v[i] = b - 1;
            v[i + 1] = a + 1;
            sign = -sign;
        }
        if v.iter().any(|&x| x < 0) {
            return StraightenResult::Zero;
        }
        let parts = v.into_iter().map(|x| x as u32).collect();
        StraightenResult::Signed { sign, partition: Partition::new(parts).unwrap() }
    }

    #[test]
    fn straighten_matches_swap_rule_sweep() {
        fn rec(cur: &mut Vec<i64>, depth: usize) {
            if depth > 0 {
                assert_eq!(straighten(&IntegerVector(cur.clone())), straighten_by_swaps(cur), "{cur:?}");
            }
            if depth == 4 {
                return;
            }
            for x in -5..=8 {
                cur.push(x);
                rec(cur, depth + 1);
                cur.pop();
            }
        }
        rec(&mut Vec::new(), 0);
    }

    #[test]
    fn falling_factorial_examples() {
        let u = rat(5);
        assert_eq!(falling_factorial(&u, 0).unwrap(), rat(1));
        assert_eq!(falling_factorial(&u, 2).unwrap(), rat(20));
        assert_eq!(falling_factorial(&u, -1).unwrap(), ratio(1, 6));
        assert!(matches!(falling_factorial(&rat(-2), -3), Err(Error::DivisionByZero(_))));
    }

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling2(4, 4), BigInt::from(1));
        assert_eq!(stirling2(0, 0), BigInt::from(1));
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(3, 5), BigInt::from(0));
        assert_eq!(stirling2(5, 0), BigInt::from(0));
    }

    /// Counts set partitions of an m-set into k blocks by restricted growth strings.
    fn stirling_by_enumeration(m: u32, k: u32) -> u64 {
        fn rec(i: u32, m: u32, used: u32, k: u32) -> u64 {
            if i == m {
                return (used == k) as u64;
            }
            (0..=used.min(k.saturating_sub(1)))
                .map(|b| rec(i + 1, m, if b == used { used + 1 } else { used }, k))
                .sum()
        }
        rec(0, m, 0, k)
    }

    #[test]
    fn stirling_matches_enumeration() {
        for m in 0..=7 {
            for k in 0..=m {
                assert_eq!(stirling2(m, k), BigInt::from(stirling_by_enumeration(m, k)), "S({m},{k})");
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(Partition::strict_up_to(8).iter().filter(|l| l.weight() == 8).count(), 6);
    }

    #[test]
    fn text_forms() {
        assert_eq!("4,2,1".parse::<Partition>().unwrap(), p(&[4, 2, 1]));
        assert_eq!("2,-1,3".parse::<IntegerVector>().unwrap(), iv(&[2, -1, 3]));
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(p(&[4, 2, 1]).to_string(), "4,2,1");
    }
}
