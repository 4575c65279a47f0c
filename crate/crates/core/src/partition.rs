//! Integer partitions, Young-diagram statistics and the exact rationals
//! used throughout the crate.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::parse(0, format!("invalid numerator in {text:?}")))?;
    let den: BigInt = den.parse().map_err(|_| {
        Error::parse(
            text.find('/').map_or(0, |p| p + 1),
            format!("invalid denominator in {text:?}"),
        )
    })?;
    if den.is_zero() {
        return Err(Error::parse(0, "zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// A weakly decreasing sequence of positive integers.
///
/// Partitions order first by weight and then reverse-lexicographically, so
/// `(2) < (1,1) < (3) < (2,1) < (1,1,1)`. Every table this crate emits uses
/// that order.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box of a Young diagram, 1-based, English convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition; zeros are dropped.
    pub fn from_parts_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `1^n`.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Part size → number of parts of that size.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for &p in &self.parts {
            *out.entry(p).or_insert(0) += 1;
        }
        out
    }

    pub fn multiplicity(&self, size: usize) -> usize {
        self.parts.iter().filter(|&&p| p == size).count()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row - 1)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
    }

    /// Arm `λ_i − j` and leg `λ'_j − i` of a cell.
    pub fn arm_leg(&self, cell: Cell) -> Result<(usize, usize)> {
        if !self.contains(cell) {
            return Err(Error::domain(format!(
                "cell ({}, {}) is outside the diagram of {self}",
                cell.row, cell.col
            )));
        }
        let arm = self.part(cell.row - 1) - cell.col;
        let leg = self.parts[cell.row..].iter().take_while(|&&p| p >= cell.col).count();
        Ok((arm, leg))
    }

    /// The pair `(H_λ(α), H'_λ(α))` of products over cells of
    /// `α·a + ℓ + 1` and `α·a + ℓ + α`.
    pub fn hook_products(&self, alpha: &Rational) -> (Rational, Rational) {
        let mut upper = Rational::one();
        let mut lower = Rational::one();
        for cell in self.cells() {
            let (arm, leg) = self.arm_leg(cell).expect("cell from own diagram");
            let scaled_arm = alpha * Rational::from_integer(arm.into());
            let leg = Rational::from_integer(leg.into());
            upper *= &scaled_arm + &leg + Rational::one();
            lower *= scaled_arm + leg + alpha;
        }
        (upper, lower)
    }

    /// `H_λ(α)·H'_λ(α)`.
    pub fn hook_product(&self, alpha: &Rational) -> Rational {
        let (h, h_prime) = self.hook_products(alpha);
        h * h_prime
    }

    /// Laplace–Beltrami eigenvalue `e(λ, α) = Σ_i λ_i(α λ_i + 2 − 2i − α)`.
    pub fn lb_eigenvalue(&self, alpha: &Rational) -> Rational {
        self.parts
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (idx, &part)| {
                let part = Rational::from_integer(part.into());
                let row = Rational::from_integer((idx + 1).into());
                let two = integer(2);
                let term = alpha * &part + &two - &two * row - alpha;
                acc + part * term
            })
    }

    /// Dominance order: `self ≥ other` iff every partial sum of `self` is at
    /// least the corresponding partial sum of `other`. Only meaningful for
    /// equal weights.
    pub fn dominates(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Removes one part of each listed size; `None` if a size is missing.
    pub(crate) fn without_parts(&self, sizes: &[usize]) -> Option<Partition> {
        let mut parts = self.parts.clone();
        for &s in sizes {
            let pos = parts.iter().position(|&p| p == s)?;
            parts.remove(pos);
        }
        Some(Partition { parts })
    }

    pub(crate) fn with_parts(&self, sizes: &[usize]) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(sizes);
        Partition::from_parts_unsorted(parts)
    }

    /// Comma-separated parts, `""` for the empty partition.
    pub fn to_text(&self) -> String {
        self.parts.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let mut offset = 0;
        for piece in inner.split(',') {
            let part: usize = piece
                .trim()
                .parse()
                .map_err(|_| Error::parse(offset, format!("invalid part {:?}", piece.trim())))?;
            parts.push(part);
            offset += piece.len() + 1;
        }
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// All partitions of `n`, largest first (`(n)`, …, `(1^n)`).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            prefix.push(k);
            go(rest - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_partition_lists() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(2), vec![p(&[2]), p(&[1, 1])]);
    }

    #[test]
    fn partition_counts_match_brute_force() {
        // Compositions of n, sorted and deduplicated.
        fn brute(n: usize) -> usize {
            let mut seen = std::collections::HashSet::new();
            for mask in 0u32..(1 << n.saturating_sub(1)) {
                let mut parts = Vec::new();
                let mut run = 1;
                for bit in 0..n.saturating_sub(1) {
                    if mask & (1 << bit) != 0 {
                        parts.push(run);
                        run = 1;
                    } else {
                        run += 1;
                    }
                }
                parts.push(run);
                parts.sort_unstable_by(|a, b| b.cmp(a));
                seen.insert(parts);
            }
            seen.len()
        }
        assert_eq!(partitions_of(5).len(), 7);
        for n in 1..=12 {
            assert_eq!(partitions_of(n).len(), brute(n), "n = {n}");
        }
    }

    #[test]
    fn partitions_are_distinct_with_correct_weight() {
        for n in 0..=12 {
            let list = partitions_of(n);
            let set: std::collections::HashSet<_> = list.iter().cloned().collect();
            assert_eq!(set.len(), list.len());
            assert!(list.iter().all(|l| l.weight() == n));
            // emitted order is the canonical order
            assert!(list.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn multiplicity_examples() {
        let m = p(&[2, 1, 1]).multiplicities();
        assert_eq!(m.into_iter().collect::<Vec<_>>(), vec![(1, 2), (2, 1)]);
        assert!(Partition::empty().multiplicities().is_empty());
        let m = p(&[3, 3, 1]).multiplicities();
        assert_eq!(m.into_iter().collect::<Vec<_>>(), vec![(1, 1), (3, 2)]);
    }

    #[test]
    fn arm_leg_examples() {
        assert_eq!(p(&[1]).arm_leg(Cell::new(1, 1)).unwrap(), (0, 0));
        assert_eq!(p(&[2, 1]).arm_leg(Cell::new(1, 1)).unwrap(), (1, 1));
        assert_eq!(p(&[3]).arm_leg(Cell::new(1, 1)).unwrap(), (2, 0));
        assert!(matches!(p(&[2, 1]).arm_leg(Cell::new(2, 2)), Err(Error::Domain(_))));
        assert!(p(&[2]).arm_leg(Cell::new(0, 1)).is_err());
    }

    #[test]
    fn zonal_hook_products() {
        let two = integer(2);
        let expected = [
            (p(&[1]), 2),
            (p(&[1, 1]), 12),
            (p(&[2]), 24),
            (p(&[1, 1, 1]), 144),
            (p(&[2, 1]), 80),
            (p(&[3]), 720),
        ];
        for (lambda, value) in expected {
            assert_eq!(lambda.hook_product(&two), integer(value), "{lambda}");
        }
        let (h, hp) = Partition::empty().hook_products(&rational(7, 3));
        assert!(h.is_one() && hp.is_one());
    }

    #[test]
    fn eigenvalue_examples() {
        let two = integer(2);
        assert!(p(&[1]).lb_eigenvalue(&rational(5, 7)).is_zero());
        assert_eq!(p(&[2]).lb_eigenvalue(&two), integer(4));
        assert_eq!(p(&[1, 1]).lb_eigenvalue(&two), integer(-2));
    }

    #[test]
    fn eigenvalue_at_two_is_twice_content_like_sum() {
        let two = integer(2);
        for n in 0..=8 {
            for lambda in partitions_of(n) {
                let s: i64 = lambda
                    .parts()
                    .iter()
                    .enumerate()
                    .map(|(i, &l)| l as i64 * (l as i64 - (i as i64 + 1)))
                    .sum();
                assert_eq!(lambda.lb_eigenvalue(&two), integer(2 * s));
            }
        }
    }

    #[test]
    fn hook_duality_exploratory() {
        // H_{λ'}(1/α) = α^{-|λ|} H'_λ(α); not an acceptance item.
        for alpha in [integer(2), rational(1, 2), integer(3)] {
            for n in 1..=6 {
                for lambda in partitions_of(n) {
                    let lhs = lambda.conjugate().hook_products(&alpha.recip()).0;
                    let rhs = lambda.hook_products(&alpha).1 / num_traits::pow(alpha.clone(), n);
                    assert_eq!(lhs, rhs, "{lambda} at {alpha}");
                }
            }
        }
    }

    #[test]
    fn text_syntax() {
        assert_eq!("3,1,1".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[3, 1, 1]).to_text(), "3,1,1");
        assert!("1,3".parse::<Partition>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("1/2").unwrap(), rational(1, 2));
        assert_eq!(parse_rational("-4/6").unwrap(), rational(-2, 3));
        assert_eq!(parse_rational("3").unwrap(), integer(3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a").is_err());
    }

    proptest! {
        #[test]
        fn conjugate_is_involution(parts in proptest::collection::vec(1usize..7, 0..7)) {
            let lambda = Partition::from_parts_unsorted(parts);
            prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
            prop_assert_eq!(lambda.conjugate().weight(), lambda.weight());
            let total: usize = lambda.multiplicities().iter().map(|(l, a)| l * a).sum();
            prop_assert_eq!(total, lambda.weight());
        }
    }
}
