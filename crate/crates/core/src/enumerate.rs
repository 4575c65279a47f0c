//! Brute-force model: tally every sequence of admissible transpositions by
//! the doubled cycle type of `u = σ1…σm τ σm…σ1 τ`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::{factorial, partitions_of, Partition, Rational};
use crate::perm::{classify_twisted, pair_lengths, tau, tau_point, Permutation, Transposition};

/// Upper bound on the number of product words an enumeration may evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_work: u128,
}

impl Budget {
    pub const DEFAULT_MAX_WORK: u128 = 1_000_000_000;

    pub fn new(max_work: u128) -> Self {
        Budget { max_work }
    }

    pub fn check(&self, what: &'static str, workload: u128) -> Result<()> {
        if workload > self.max_work {
            return Err(Error::Resource {
                what,
                workload,
                budget: self.max_work,
            });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_MAX_WORK)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    pub budget: Budget,
    /// Worker count; `1` runs serially on the calling thread.
    pub threads: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            budget: Budget::default(),
            threads: 1,
        }
    }
}

/// `(a, b)` with `1 ≤ a < b ≤ 2n` and `b ≠ τ(a)`; there are `2n(n−1)`.
pub fn admissible_transpositions(n: usize) -> Vec<Transposition> {
    let mut out = Vec::with_capacity(2 * n * n.saturating_sub(1));
    for a in 1..=2 * n {
        for b in a + 1..=2 * n {
            if b != tau_point(n, a) {
                out.push(Transposition::new(a, b).expect("a < b"));
            }
        }
    }
    out
}

/// An ordered list `(σ1, …, σm)` of admissible transpositions on `2n` points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TranspositionSequence {
    n: usize,
    sigmas: Vec<Transposition>,
}

impl TranspositionSequence {
    pub fn new(n: usize, sigmas: Vec<Transposition>) -> Result<Self> {
        for (k, s) in sigmas.iter().enumerate() {
            if s.b() > 2 * n {
                return Err(Error::domain(format!("σ{} = {s} leaves 1..={}", k + 1, 2 * n)));
            }
            if s.b() == tau_point(n, s.a()) {
                return Err(Error::domain(format!("σ{} = {s} is a factor of τ", k + 1)));
            }
        }
        Ok(TranspositionSequence { n, sigmas })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sigmas(&self) -> &[Transposition] {
        &self.sigmas
    }

    pub fn len(&self) -> usize {
        self.sigmas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigmas.is_empty()
    }
}

/// `u = σ1 … σm τ σm … σ1 τ`.
///
/// # Panics
///
/// If `u` has a `τ`-self-symmetric cycle, which admissible sequences
/// cannot produce.
pub fn product_word(seq: &TranspositionSequence) -> Permutation {
    let n = seq.n;
    let t = tau(n);
    let mut prefix = Permutation::identity(2 * n);
    for s in &seq.sigmas {
        prefix = &prefix * &s.to_permutation(2 * n);
    }
    let u = &(&(&prefix * &t) * &prefix.inverse()) * &t;
    let class = classify_twisted(&u, n).expect("u lies in the twisted centralizer");
    assert!(
        class.doubled_type.is_some(),
        "internal invariant violated: product word {u} of {:?} has self-symmetric cycles {:?}",
        seq.sigmas,
        class.self_symmetric_cycles
    );
    u
}

/// Enumeration result for fixed `n` and `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HurwitzCount {
    pub n: usize,
    pub m: usize,
    /// `#𝔥_{m,λ}` for every partition of `n` (zeros included).
    pub counts: BTreeMap<Partition, BigUint>,
    /// `h~_{m,λ} = #𝔥_{m,λ} / n!`.
    pub values: BTreeMap<Partition, Rational>,
}

impl HurwitzCount {
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }
}

pub fn workload(n: usize, m: usize) -> Option<u128> {
    let per_step = (2 * n * n.saturating_sub(1)) as u128;
    per_step.checked_pow(u32::try_from(m).ok()?)
}

pub fn enumerate(n: usize, m: usize) -> Result<HurwitzCount> {
    enumerate_with(n, m, EnumOptions::default())
}

/// Tallies all `(2n(n−1))^m` sequences. With `threads > 1` the first
/// transposition is split across workers, each keeping a private tally.
pub fn enumerate_with(n: usize, m: usize, options: EnumOptions) -> Result<HurwitzCount> {
    if n == 0 {
        return Err(Error::domain("enumeration needs n ≥ 1"));
    }
    let work = workload(n, m).ok_or(Error::Resource {
        what: "enumeration workload overflows",
        workload: u128::MAX,
        budget: options.budget.max_work,
    })?;
    options.budget.check("enumerate: (2n(n-1))^m product words", work)?;

    let parts = partitions_of(n);
    let index: HashMap<Vec<usize>, usize> = parts.iter().enumerate().map(|(i, p)| (p.parts().to_vec(), i)).collect();
    let gens = admissible_transpositions(n);

    let tally = if m == 0 || options.threads <= 1 || gens.is_empty() {
        let mut walker = Walker::new(n, &gens, &index);
        walker.run_all(m);
        walker.tally
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.threads)
            .build()
            .map_err(|e| Error::domain(format!("cannot start worker pool: {e}")))?;
        let partials: Vec<Vec<u64>> = pool.install(|| {
            gens.par_iter()
                .map(|first| {
                    let mut walker = Walker::new(n, &gens, &index);
                    walker.run_with_first(*first, m);
                    walker.tally
                })
                .collect()
        });
        let mut tally = vec![0u64; parts.len()];
        for partial in partials {
            for (acc, v) in tally.iter_mut().zip(partial) {
                *acc += v;
            }
        }
        tally
    };

    let n_fact = factorial(n);
    let mut counts = BTreeMap::new();
    let mut values = BTreeMap::new();
    for (lambda, c) in parts.into_iter().zip(tally) {
        let c = BigUint::from(c);
        values.insert(lambda.clone(), Rational::new(c.clone().into(), n_fact.clone()));
        counts.insert(lambda, c);
    }
    Ok(HurwitzCount { n, m, counts, values })
}

/// `h~_{m,λ}` by enumeration.
pub fn hurwitz_enumerated(m: usize, lambda: &Partition) -> Result<Rational> {
    hurwitz_enumerated_with(m, lambda, EnumOptions::default())
}

pub fn hurwitz_enumerated_with(m: usize, lambda: &Partition, options: EnumOptions) -> Result<Rational> {
    let n = lambda.weight();
    if n == 0 {
        return Err(Error::domain("h~ needs |λ| ≥ 1"));
    }
    let count = enumerate_with(n, m, options)?;
    Ok(count.values[lambda].clone())
}

/// Depth-first walk over sequences keeping `P = σ1…σk` and `P⁻¹` up to date
/// with one swap per step, so each product word costs `O(n)`.
struct Walker<'a> {
    n: usize,
    gens: &'a [Transposition],
    index: &'a HashMap<Vec<usize>, usize>,
    prefix: Vec<usize>,
    prefix_inv: Vec<usize>,
    word: Vec<usize>,
    seen: Vec<bool>,
    lengths: Vec<usize>,
    tally: Vec<u64>,
}

impl<'a> Walker<'a> {
    fn new(n: usize, gens: &'a [Transposition], index: &'a HashMap<Vec<usize>, usize>) -> Self {
        Walker {
            n,
            gens,
            index,
            prefix: (0..2 * n).collect(),
            prefix_inv: (0..2 * n).collect(),
            word: vec![0; 2 * n],
            seen: vec![false; 2 * n],
            lengths: Vec::with_capacity(n),
            tally: vec![0; index.len()],
        }
    }

    fn run_all(&mut self, m: usize) {
        self.descend(m);
    }

    fn run_with_first(&mut self, first: Transposition, m: usize) {
        self.push(first);
        self.descend(m - 1);
        self.push(first);
    }

    /// Right-multiplies the prefix by `(a b)`; applying twice undoes it.
    fn push(&mut self, s: Transposition) {
        let (a, b) = (s.a() - 1, s.b() - 1);
        self.prefix.swap(a, b);
        let (pa, pb) = (self.prefix[a], self.prefix[b]);
        self.prefix_inv[pa] = a;
        self.prefix_inv[pb] = b;
    }

    fn descend(&mut self, remaining: usize) {
        if remaining == 0 {
            self.record();
            return;
        }
        for k in 0..self.gens.len() {
            let s = self.gens[k];
            self.push(s);
            self.descend(remaining - 1);
            self.push(s);
        }
    }

    fn record(&mut self) {
        let n = self.n;
        let t = |x: usize| if x < n { x + n } else { x - n };
        // u = P τ P⁻¹ τ
        for x in 0..2 * n {
            self.word[x] = self.prefix[t(self.prefix_inv[t(x)])];
        }
        let ok = pair_lengths(&self.word, n, &mut self.seen, &mut self.lengths);
        assert!(
            ok,
            "internal invariant violated: product word {:?} has a self-symmetric cycle",
            Permutation::from_zero_based(self.word.clone())
        );
        self.lengths.sort_unstable_by(|a, b| b.cmp(a));
        let slot = self.index[self.lengths.as_slice()];
        self.tally[slot] += 1;
    }
}

/// `Σ_λ counts[λ]` as a machine integer, when it fits.
pub fn total_as_u128(count: &HurwitzCount) -> Option<u128> {
    count.total().to_u128()
}
