//! Permutations of `{1, …, 2n}`, the involution `τ` and the twisted
//! centralizer `C~(τ) = {σ : τστ = σ⁻¹}`.
//!
//! Products compose right to left: `(p * q)(x) = p(q(x))`.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A bijection of `{1, …, size}`. Points are 1-based in every public method;
/// images are stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation {
            images: (0..size).collect(),
        }
    }

    /// Builds from 1-based images: `images[k-1]` is the image of `k`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let size = images.len();
        let mut seen = vec![false; size];
        let mut zero_based = Vec::with_capacity(size);
        for &img in images {
            if img == 0 || img > size || seen[img - 1] {
                return Err(Error::domain(format!("{images:?} is not a bijection of 1..={size}")));
            }
            seen[img - 1] = true;
            zero_based.push(img - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// Product of the given disjoint cycles on `size` points.
    pub fn from_cycles(size: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<Option<usize>> = vec![None; size];
        for cycle in cycles {
            for (k, &point) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                if point == 0 || point > size || next == 0 || next > size {
                    return Err(Error::domain(format!("point out of range 1..={size} in {cycle:?}")));
                }
                if images[point - 1].is_some() {
                    return Err(Error::domain(format!("point {point} appears twice")));
                }
                images[point - 1] = Some(next - 1);
            }
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(k, img)| img.unwrap_or(k))
            .collect();
        Ok(Permutation { images })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.images
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// `self ∘ other`, i.e. `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.size() != other.size() {
            return Err(Error::domain(format!(
                "cannot compose permutations of {} and {} points",
                self.size(),
                other.size()
            )));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn is_involution(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| self.images[y] == x)
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|(x, y)| x == *y).count()
    }

    /// Disjoint cycles including fixed points, each starting at its
    /// minimum, sorted by minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_parts_unsorted(self.cycles().iter().map(Vec::len).collect())
    }

    /// Parses cycle notation such as `"(1 3)(2 4)"`; `"()"` and `""` give
    /// the identity.
    pub fn parse_cycles(text: &str, size: usize) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        let mut number = String::new();
        let mut number_start = 0;
        let flush = |number: &mut String, current: &mut Option<Vec<usize>>, at: usize| -> Result<()> {
            if number.is_empty() {
                return Ok(());
            }
            let value: usize = number.parse().map_err(|_| Error::parse(at, "invalid point"))?;
            match current {
                Some(c) => c.push(value),
                None => return Err(Error::parse(at, "point outside of parentheses")),
            }
            number.clear();
            Ok(())
        };
        for (pos, ch) in text.char_indices() {
            match ch {
                '(' => {
                    if current.is_some() {
                        return Err(Error::parse(pos, "nested '('"));
                    }
                    current = Some(Vec::new());
                }
                ')' => {
                    flush(&mut number, &mut current, number_start)?;
                    match current.take() {
                        Some(c) if !c.is_empty() => cycles.push(c),
                        Some(_) => {}
                        None => return Err(Error::parse(pos, "unmatched ')'")),
                    }
                }
                c if c.is_ascii_digit() => {
                    if number.is_empty() {
                        number_start = pos;
                    }
                    number.push(c);
                }
                ' ' | ',' | '\t' => flush(&mut number, &mut current, number_start)?,
                other => return Err(Error::parse(pos, format!("unexpected character {other:?}"))),
            }
        }
        if current.is_some() || !number.is_empty() {
            return Err(Error::parse(text.len(), "unterminated cycle"));
        }
        Permutation::from_cycles(size, &cycles).map_err(|e| match e {
            Error::Domain(msg) => Error::parse(0, msg),
            other => other,
        })
    }

    /// `τ p τ`, the conjugate by `τ` of the matching size.
    pub fn conjugate_by_tau(&self) -> Permutation {
        let n = self.size() / 2;
        let t = |x: usize| if x < n { x + n } else { x - n };
        Permutation {
            images: (0..self.size()).map(|x| t(self.images[t(x)])).collect(),
        }
    }

    /// `τστ = σ⁻¹`. Requires an even number of points.
    pub fn in_twisted_centralizer(&self) -> bool {
        self.size().is_multiple_of(2) && self.conjugate_by_tau() == self.inverse()
    }

    /// Commutes with `τ`, i.e. belongs to the hyperoctahedral group `B_n`.
    pub fn in_centralizer(&self) -> bool {
        self.size().is_multiple_of(2) && self.conjugate_by_tau() == *self
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on a size mismatch; use [`Permutation::compose`] to get an error.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("permutation sizes differ")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            let body: Vec<String> = cycle.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(" "))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} on {}", self.size())
    }
}

/// A transposition `(a b)` with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    a: usize,
    b: usize,
}

impl Transposition {
    /// Accepts the points in either order.
    pub fn new(x: usize, y: usize) -> Result<Self> {
        if x == y || x == 0 || y == 0 {
            return Err(Error::domain(format!("({x} {y}) is not a transposition")));
        }
        Ok(Transposition {
            a: x.min(y),
            b: x.max(y),
        })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn to_permutation(&self, size: usize) -> Permutation {
        let mut p = Permutation::identity(size);
        p.images.swap(self.a - 1, self.b - 1);
        p
    }

    /// `τ (a b) τ` on `2n` points.
    pub fn conjugate_by_tau(&self, n: usize) -> Transposition {
        Transposition::new(tau_point(n, self.a), tau_point(n, self.b)).expect("τ is a bijection")
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.a, self.b)
    }
}

/// `τ(k)` on `2n` points: `k ↔ k + n`.
pub fn tau_point(n: usize, k: usize) -> usize {
    if k <= n {
        k + n
    } else {
        k - n
    }
}

/// `τ = (1, n+1)(2, n+2)…(n, 2n)`.
pub fn tau(n: usize) -> Permutation {
    Permutation {
        images: (0..2 * n).map(|x| if x < n { x + n } else { x - n }).collect(),
    }
}

/// Cycle structure of an element of `C~(τ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedClassification {
    /// `(c, c')` with `c' = τ c⁻¹ τ`; the first cycle of each pair holds the
    /// smaller minimum.
    pub symmetric_pairs: Vec<(Vec<usize>, Vec<usize>)>,
    pub self_symmetric_cycles: Vec<Vec<usize>>,
    /// Lengths of one cycle per pair; present iff no cycle is self-symmetric.
    pub doubled_type: Option<Partition>,
}

/// Splits the cycles of `p ∈ C~(τ)` into `τ`-symmetric pairs and
/// `τ`-self-symmetric cycles.
pub fn classify_twisted(p: &Permutation, n: usize) -> Result<TwistedClassification> {
    if p.size() != 2 * n {
        return Err(Error::domain(format!(
            "expected a permutation of {} points, got {}",
            2 * n,
            p.size()
        )));
    }
    if !p.in_twisted_centralizer() {
        return Err(Error::domain(format!("{p} is not in the twisted centralizer of τ")));
    }
    let cycles = p.cycles();
    let mut owner = vec![usize::MAX; 2 * n + 1];
    for (idx, cycle) in cycles.iter().enumerate() {
        for &x in cycle {
            owner[x] = idx;
        }
    }
    let mut used = vec![false; cycles.len()];
    let mut pairs = Vec::new();
    let mut selfsym = Vec::new();
    for (idx, cycle) in cycles.iter().enumerate() {
        if used[idx] {
            continue;
        }
        used[idx] = true;
        let partner = owner[tau_point(n, cycle[0])];
        if partner == idx {
            selfsym.push(cycle.clone());
        } else {
            used[partner] = true;
            pairs.push((cycle.clone(), cycles[partner].clone()));
        }
    }
    let doubled_type = selfsym
        .is_empty()
        .then(|| Partition::from_parts_unsorted(pairs.iter().map(|(c, _)| c.len()).collect()));
    Ok(TwistedClassification {
        symmetric_pairs: pairs,
        self_symmetric_cycles: selfsym,
        doubled_type,
    })
}

/// Fast doubled-type extraction for the enumeration loop.
///
/// `images` must be 0-based images of an element of `C~(τ)` on `2n` points;
/// writes one length per `τ`-symmetric pair into `lengths` and returns
/// `false` if a self-symmetric cycle is met. `seen` is scratch space of
/// length `2n`.
pub(crate) fn pair_lengths(images: &[usize], n: usize, seen: &mut [bool], lengths: &mut Vec<usize>) -> bool {
    lengths.clear();
    seen.iter_mut().for_each(|s| *s = false);
    let t = |x: usize| if x < n { x + n } else { x - n };
    for start in 0..2 * n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        loop {
            seen[x] = true;
            len += 1;
            x = images[x];
            if x == start {
                break;
            }
        }
        let mirror = t(start);
        if seen[mirror] {
            // τ(start) lies on the cycle just walked.
            return false;
        }
        let mut y = mirror;
        loop {
            seen[y] = true;
            y = images[y];
            if y == mirror {
                break;
            }
        }
        lengths.push(len);
    }
    true
}

/// Doubled type of `p`, or `None` if `p` has a self-symmetric cycle.
/// `p` must lie in `C~(τ)`.
pub fn doubled_type(p: &Permutation) -> Option<Partition> {
    let n = p.size() / 2;
    let mut seen = vec![false; 2 * n];
    let mut lengths = Vec::with_capacity(n);
    pair_lengths(p.zero_based(), n, &mut seen, &mut lengths).then(|| Partition::from_parts_unsorted(lengths))
}

/// A fixed element of `B~_λ`: for each part `k`, a cycle `(v1 … vk)` on
/// fresh points of `1..=n` times its partner `τ (v1 … vk)⁻¹ τ`.
pub fn canonical_representative(lambda: &Partition) -> Permutation {
    let n = lambda.weight();
    let mut images: Vec<usize> = (0..2 * n).collect();
    let mut start = 0;
    for &len in lambda.parts() {
        for k in 0..len {
            let from = start + k;
            let to = start + (k + 1) % len;
            images[from] = to;
            // τ c⁻¹ τ sends τ(to) to τ(from).
            images[to + n] = from + n;
        }
        start += len;
    }
    Permutation { images }
}

/// Every involution of `S_size` (fixed points allowed).
pub fn involutions(size: usize) -> Vec<Permutation> {
    fn go(images: &mut Vec<usize>, free: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        let Some(first) = free.iter().position(|&f| f) else {
            out.push(Permutation { images: images.clone() });
            return;
        };
        free[first] = false;
        images[first] = first;
        go(images, free, out);
        for partner in first + 1..free.len() {
            if free[partner] {
                free[partner] = false;
                images[first] = partner;
                images[partner] = first;
                go(images, free, out);
                images[partner] = partner;
                free[partner] = true;
            }
        }
        images[first] = first;
        free[first] = true;
    }
    let mut out = Vec::new();
    go(&mut (0..size).collect(), &mut vec![true; size], &mut out);
    out
}

/// Every fixed-point-free involution of `S_2n`.
pub fn fixed_point_free_involutions(n: usize) -> Vec<Permutation> {
    involutions(2 * n)
        .into_iter()
        .filter(|p| p.fixed_points() == 0)
        .collect()
}

pub const MAX_B_TWISTED_N: usize = 6;

/// Exhaustive size of `B~_n`.
///
/// `p ∈ C~(τ)` iff `p τ` is an involution, so walking every involution `ι`
/// of `S_2n` and testing `ι τ` covers all of `C~(τ)`. Refuses `n > 6`.
pub fn count_b_twisted(n: usize) -> Result<BigUint> {
    if n > MAX_B_TWISTED_N {
        return Err(Error::Resource {
            what: "count_b_twisted: n is limited to 6",
            workload: n as u128,
            budget: MAX_B_TWISTED_N as u128,
        });
    }
    let t = tau(n);
    let mut count = BigUint::zero();
    for iota in involutions(2 * n) {
        let p = &iota * &t;
        debug_assert!(p.in_twisted_centralizer());
        let class = classify_twisted(&p, n)?;
        if class.doubled_type.is_some() {
            count += 1u32;
        }
    }
    Ok(count)
}

/// The map `σ ↦ στ` from `B~_n` to fixed-point-free involutions.
pub fn involution_of(p: &Permutation) -> Result<Permutation> {
    let n = p.size() / 2;
    let class = classify_twisted(p, n)?;
    if class.doubled_type.is_none() {
        return Err(Error::domain(format!("{p} has a τ-self-symmetric cycle")));
    }
    p.compose(&tau(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(text: &str, size: usize) -> Permutation {
        Permutation::parse_cycles(text, size).unwrap()
    }

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(1), perm("(1 2)", 2));
        assert_eq!(tau(2), perm("(1 3)(2 4)", 4));
        assert_eq!(tau(3), perm("(1 4)(2 5)(3 6)", 6));
        for n in 1..6 {
            let t = tau(n);
            assert!(t.is_involution() && t.fixed_points() == 0);
        }
    }

    #[test]
    fn composition_convention() {
        let q = perm("(1 3 2)", 3);
        assert_eq!(Permutation::identity(3).compose(&q).unwrap(), q);
        let s = perm("(1 2)", 3);
        assert!((&s * &s).is_identity());
        let r = &s * &perm("(2 3)", 3);
        // (2 3) acts first: 1 -> 2, 2 -> 3, 3 -> 1.
        assert_eq!((r.apply(1), r.apply(2), r.apply(3)), (2, 3, 1));
        assert!(Permutation::identity(3).compose(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn cycle_normal_form() {
        let cycles = Permutation::identity(4).cycles();
        assert_eq!(cycles, vec![vec![1], vec![2], vec![3], vec![4]]);
        assert_eq!(perm("(3 1)(4 2)", 4).cycles(), vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(perm("(5 1 6)(4 2 3)", 6).cycles(), vec![vec![1, 6, 5], vec![2, 3, 4]]);
    }

    #[test]
    fn cycle_text_round_trip() {
        let p = perm("(1 6 5)(2 3 4)", 6);
        assert_eq!(p.to_string(), "(1 6 5)(2 3 4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!(perm("", 3), Permutation::identity(3));
        assert!(Permutation::parse_cycles("(1 2", 3).is_err());
        assert!(Permutation::parse_cycles("(1 4)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 x)", 3).is_err());
    }

    #[test]
    fn classification_examples() {
        let c = classify_twisted(&Permutation::identity(4), 2).unwrap();
        assert_eq!(c.symmetric_pairs.len(), 2);
        assert_eq!(c.doubled_type, Some(part(&[1, 1])));

        let c = classify_twisted(&perm("(1 2)(3 4)", 4), 2).unwrap();
        assert_eq!(c.symmetric_pairs, vec![(vec![1, 2], vec![3, 4])]);
        assert_eq!(c.doubled_type, Some(part(&[2])));

        let c = classify_twisted(&tau(2), 2).unwrap();
        assert_eq!(c.self_symmetric_cycles, vec![vec![1, 3], vec![2, 4]]);
        assert!(c.symmetric_pairs.is_empty());
        assert_eq!(c.doubled_type, None);

        let c = classify_twisted(&perm("(1 3)", 4), 2).unwrap();
        assert_eq!(c.self_symmetric_cycles, vec![vec![1, 3]]);
        assert_eq!(c.symmetric_pairs, vec![(vec![2], vec![4])]);

        assert!(classify_twisted(&perm("(1 2 3 4)", 4), 2).is_err());

        assert!(classify_twisted(&perm("(1 2)", 4), 2).is_err());
        assert!(classify_twisted(&perm("(1 2)", 4), 3).is_err());
    }

    #[test]
    fn b2_classes() {
        // B~_(2) = {(12)(34), (14)(23)}, B~_(1,1) = {e}
        let all = fixed_point_free_involutions(2);
        let t = tau(2);
        let mut by_type: Vec<(Partition, String)> = all
            .iter()
            .map(|iota| {
                let p = iota * &t;
                (doubled_type(&p).unwrap(), p.to_string())
            })
            .collect();
        by_type.sort();
        assert_eq!(
            by_type,
            vec![
                (part(&[2]), "(1 2)(3 4)".to_string()),
                (part(&[2]), "(1 4)(2 3)".to_string()),
                (part(&[1, 1]), "()".to_string()),
            ]
        );
    }

    #[test]
    fn canonical_representatives() {
        assert!(canonical_representative(&Partition::ones(4)).is_identity());
        assert_eq!(canonical_representative(&part(&[2])), perm("(1 2)(3 4)", 4));
        let rep = canonical_representative(&part(&[3]));
        let c = classify_twisted(&rep, 3).unwrap();
        assert_eq!(c.symmetric_pairs.len(), 1);
        assert_eq!(c.symmetric_pairs[0].0.len(), 3);
        for n in 1..=8 {
            for lambda in crate::partitions_of(n) {
                let rep = canonical_representative(&lambda);
                let c = classify_twisted(&rep, n).unwrap();
                assert_eq!(c.doubled_type.as_ref(), Some(&lambda));
                assert_eq!(doubled_type(&rep).as_ref(), Some(&lambda));
                for (a, b) in &c.symmetric_pairs {
                    assert_eq!(a.len(), b.len());
                }
            }
        }
    }

    #[test]
    fn symmetric_pair_partner_is_tau_reversed() {
        let n = 4;
        let t = tau(n);
        for iota in involutions(2 * n) {
            let p = &iota * &t;
            let c = classify_twisted(&p, n).unwrap();
            let total: usize = c.symmetric_pairs.iter().map(|(a, b)| a.len() + b.len()).sum::<usize>()
                + c.self_symmetric_cycles.iter().map(Vec::len).sum::<usize>();
            assert_eq!(total, 2 * n);
            for (first, second) in &c.symmetric_pairs {
                let expected: Vec<usize> = first.iter().rev().map(|&x| tau_point(n, x)).collect();
                let partner = Permutation::from_cycles(2 * n, &[expected]).unwrap();
                let actual = Permutation::from_cycles(2 * n, std::slice::from_ref(second)).unwrap();
                assert_eq!(partner, actual);
            }
            for cyc in &c.self_symmetric_cycles {
                assert_eq!(cyc.len() % 2, 0);
            }
            assert_eq!(doubled_type(&p), c.doubled_type);
        }
    }

    #[test]
    fn b_twisted_counts_small() {
        assert_eq!(count_b_twisted(1).unwrap(), 1u32.into());
        assert_eq!(count_b_twisted(2).unwrap(), 3u32.into());
        assert_eq!(count_b_twisted(3).unwrap(), 15u32.into());
        assert!(matches!(count_b_twisted(7), Err(Error::Resource { .. })));
    }

    #[test]
    fn involution_map_examples() {
        assert_eq!(involution_of(&Permutation::identity(4)).unwrap(), tau(2));
        assert_eq!(involution_of(&perm("(1 2)(3 4)", 4)).unwrap(), perm("(1 4)(2 3)", 4));
        assert!(involution_of(&perm("(1 2 3 4)", 4)).is_err());
        assert!(involution_of(&perm("(1 2)", 4)).is_err());
    }

    #[test]
    fn transposition_basics() {
        let t = Transposition::new(3, 1).unwrap();
        assert_eq!((t.a(), t.b()), (1, 3));
        assert!(Transposition::new(2, 2).is_err());
        assert_eq!(t.conjugate_by_tau(2), Transposition::new(3, 1).unwrap());
        assert_eq!(
            Transposition::new(1, 2).unwrap().conjugate_by_tau(3).to_string(),
            "(4 5)"
        );
    }
    fn all_permutations(size: usize) -> Vec<Permutation> {
        fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation::from_zero_based(prefix.clone()));
                return;
            }
            for x in 0..used.len() {
                if !used[x] {
                    used[x] = true;
                    prefix.push(x);
                    go(prefix, used, out);
                    prefix.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), &mut vec![false; size], &mut out);
        out
    }

    fn double_factorial_odd(n: usize) -> u64 {
        (1..n as u64).map(|k| 2 * k + 1).product()
    }

    #[test]
    fn b_twisted_counts_against_full_symmetric_group() {
        for n in 1..=3 {
            let brute = all_permutations(2 * n)
                .into_iter()
                .filter(|p| p.in_twisted_centralizer() && doubled_type(p).is_some())
                .count() as u64;
            assert_eq!(brute, double_factorial_odd(n));
            assert_eq!(count_b_twisted(n).unwrap(), BigUint::from(brute));
        }
        assert_eq!(count_b_twisted(5).unwrap(), BigUint::from(945u32));
        assert!(count_b_twisted(7).is_err());
    }

    #[test]
    fn involution_map_is_a_bijection() {
        use std::collections::HashSet;
        for n in 1..=4 {
            let t = tau(n);
            let b_twisted: Vec<Permutation> = involutions(2 * n)
                .into_iter()
                .map(|iota| &iota * &t)
                .filter(|p| doubled_type(p).is_some())
                .collect();
            let images: HashSet<Permutation> = b_twisted.iter().map(|p| involution_of(p).unwrap()).collect();
            let target: HashSet<Permutation> = fixed_point_free_involutions(n).into_iter().collect();
            assert_eq!(images.len(), b_twisted.len());
            assert_eq!(images, target);
        }
    }

    #[test]
    fn conjugation_by_centralizer_preserves_doubled_type() {
        use rand::rngs::StdRng;
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for n in 1..=6 {
            for lambda in crate::partitions_of(n) {
                let p = canonical_representative(&lambda);
                for _ in 0..100 {
                    // A signed permutation: x(k) = π(k) or τ(π(k)), x(τ k) = τ x(k).
                    let mut pi: Vec<usize> = (0..n).collect();
                    pi.shuffle(&mut rng);
                    let mut images = vec![0; 2 * n];
                    for k in 0..n {
                        let flip = rng.gen_bool(0.5);
                        let (a, b) = if flip { (pi[k] + n, pi[k]) } else { (pi[k], pi[k] + n) };
                        images[k] = a;
                        images[k + n] = b;
                    }
                    let x = Permutation::from_zero_based(images);
                    assert!(x.in_centralizer());
                    let q = &(&x * &p) * &x.inverse();
                    assert!(q.in_twisted_centralizer());
                    assert_eq!(doubled_type(&q), Some(lambda.clone()));
                }
            }
        }
    }
}
