//! Polynomials in the power sums `p_1, p_2, …` with exact rational
//! coefficients, the Laplace–Beltrami family `Δ_α` and the twisted
//! cut-and-join operator `CJ~ = Δ_2`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::{factorial, integer, parse_rational, partitions_of, Partition, Rational};
use crate::perm::{canonical_representative, doubled_type, tau_point, Transposition};

/// Sparse linear combination of monomials `p_λ = p_{λ1}⋯p_{λs}`. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PSeries {
    coeffs: BTreeMap<Partition, Rational>,
}

impl PSeries {
    pub fn zero() -> Self {
        PSeries::default()
    }

    pub fn one() -> Self {
        PSeries::monomial(Partition::empty())
    }

    pub fn monomial(lambda: Partition) -> Self {
        PSeries::term(lambda, Rational::one())
    }

    pub fn term(lambda: Partition, coeff: Rational) -> Self {
        let mut s = PSeries::zero();
        s.add_term(lambda, coeff);
        s
    }

    /// `p_1^n`.
    pub fn p1_power(n: usize) -> Self {
        PSeries::monomial(Partition::ones(n))
    }

    /// `Σ_{k ≤ max_degree} p_1^k / k!`.
    pub fn exp_p1(max_degree: usize) -> Self {
        let mut s = PSeries::zero();
        for k in 0..=max_degree {
            s.add_term(Partition::ones(k), Rational::new(BigInt::one(), factorial(k)));
        }
        s
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.entry(lambda) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, factor: &Rational) -> PSeries {
        if factor.is_zero() {
            return PSeries::zero();
        }
        PSeries {
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * factor)).collect(),
        }
    }

    /// Degree-`n` homogeneous component.
    pub fn component(&self, degree: usize) -> PSeries {
        PSeries {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.weight() == degree)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Drops monomials of degree above `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> PSeries {
        PSeries {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.weight() <= max_degree)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self, degree: usize) -> bool {
        self.coeffs.keys().all(|k| k.weight() == degree)
    }
}

impl Add for &PSeries {
    type Output = PSeries;

    fn add(self, rhs: &PSeries) -> PSeries {
        let mut out = self.clone();
        for (k, v) in &rhs.coeffs {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl Sub for &PSeries {
    type Output = PSeries;

    fn sub(self, rhs: &PSeries) -> PSeries {
        self + &(-rhs)
    }
}

impl Neg for &PSeries {
    type Output = PSeries;

    fn neg(self) -> PSeries {
        PSeries {
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

impl Mul for &PSeries {
    type Output = PSeries;

    /// `p_λ · p_μ = p_{λ ∪ μ}`.
    fn mul(self, rhs: &PSeries) -> PSeries {
        let mut out = PSeries::zero();
        for (a, x) in &self.coeffs {
            for (b, y) in &rhs.coeffs {
                out.add_term(a.with_parts(b.parts()), x * y);
            }
        }
        out
    }
}

/// Renders `c * p[λ1,λ2,…]` terms joined by `" + "`; integers print without
/// a denominator, the zero series prints as `0`.
impl fmt::Display for PSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c} * p[{}]", lambda.to_text())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(PSeries::zero());
        }
        let mut out = PSeries::zero();
        let mut offset = 0;
        for piece in s.split(" + ") {
            let (coeff, mono) = piece
                .split_once(" * ")
                .ok_or_else(|| Error::parse(offset, format!("expected \"c * p[...]\", got {piece:?}")))?;
            let coeff =
                parse_rational(coeff).map_err(|_| Error::parse(offset, format!("bad coefficient {coeff:?}")))?;
            let inner = mono
                .trim()
                .strip_prefix("p[")
                .and_then(|m| m.strip_suffix(']'))
                .ok_or_else(|| Error::parse(offset, format!("bad monomial {mono:?}")))?;
            let lambda: Partition = inner
                .parse()
                .map_err(|_| Error::parse(offset, format!("bad partition {inner:?}")))?;
            if out.coeffs.contains_key(&lambda) {
                return Err(Error::parse(offset, format!("repeated monomial p[{inner}]")));
            }
            out.add_term(lambda, coeff);
            offset += piece.len() + 3;
        }
        Ok(out)
    }
}

/// `Δ_α = Σ_{i,j≥1} (i+j)(p_i p_j + (α−1) p_{i+j}) ∂/∂p_{i+j} + α ij p_{i+j} ∂²/∂p_i∂p_j`.
pub fn apply_laplace_beltrami(alpha: &Rational, series: &PSeries) -> PSeries {
    let mut out = PSeries::zero();
    let alpha_minus_one = alpha - Rational::one();
    for (lambda, c) in series.terms() {
        let mult = lambda.multiplicities();
        // cut: p_i p_j ∂/∂p_k over ordered (i, j) with i + j = k
        for (&k, &a_k) in &mult {
            let base = lambda.without_parts(&[k]).expect("part present");
            let weight = integer((k * a_k) as i64) * c;
            for i in 1..k {
                out.add_term(base.with_parts(&[i, k - i]), weight.clone());
            }
            // (α−1) k p_k ∂/∂p_k, once per ordered pair: k − 1 of them
            if k > 1 {
                let diag = &alpha_minus_one * integer((k * (k - 1) * a_k) as i64) * c;
                out.add_term(lambda.clone(), diag);
            }
        }
        // join: α ij p_{i+j} ∂²/∂p_i∂p_j over ordered (i, j)
        for (&i, &a_i) in &mult {
            for (&j, &a_j) in &mult {
                let pairs = if i == j { a_i * (a_i - 1) } else { a_i * a_j };
                if pairs == 0 {
                    continue;
                }
                let base = lambda.without_parts(&[i, j]).expect("parts present");
                let weight = alpha * integer((i * j * pairs) as i64) * c;
                out.add_term(base.with_parts(&[i + j]), weight);
            }
        }
    }
    out
}

/// `CJ~ = Δ_2`.
pub fn apply_twisted_cutjoin(series: &PSeries) -> PSeries {
    apply_laplace_beltrami(&integer(2), series)
}

/// One entry of the matrix of `CJ~` in the `p_λ` basis:
/// `CJ~(p_source) = Σ value · p_target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CJMatrixEntry {
    pub source: Partition,
    pub target: Partition,
    pub value: u64,
}

/// How `μ` relates to `λ` under one `CJ~` move.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// One part `ℓ` of `λ` splits into `m + k = ℓ`, `m ≤ k`.
    Cut {
        whole: usize,
        small: usize,
        large: usize,
    },
    /// Parts `m ≤ k` of `λ` merge into `ℓ = m + k`.
    Join {
        small: usize,
        large: usize,
        whole: usize,
    },
    Same,
    Unrelated,
}

/// Multiset difference between `λ` and `μ` classified as cut, join, equal
/// or unrelated.
pub fn classify_move(lambda: &Partition, mu: &Partition) -> Move {
    if lambda == mu {
        return Move::Same;
    }
    let mut removed = Vec::new();
    let mut added = Vec::new();
    let (lm, mm) = (lambda.multiplicities(), mu.multiplicities());
    for (&size, &a) in &lm {
        let b = mm.get(&size).copied().unwrap_or(0);
        removed.extend(std::iter::repeat_n(size, a.saturating_sub(b)));
    }
    for (&size, &b) in &mm {
        let a = lm.get(&size).copied().unwrap_or(0);
        added.extend(std::iter::repeat_n(size, b.saturating_sub(a)));
    }
    match (removed.as_slice(), added.as_slice()) {
        (&[whole], &[small, large]) if small + large == whole => Move::Cut { whole, small, large },
        (&[small, large], &[whole]) if small + large == whole => Move::Join { small, large, whole },
        _ => Move::Unrelated,
    }
}

/// Closed-form matrix element `CJ~: p_λ → p_μ`:
///
/// - cut `ℓ → m + k`: `2ℓ a_ℓ` if `m < k`, `ℓ a_ℓ` if `m = k`;
/// - join `m + k → ℓ`: `4mk a_m a_k` if `m < k`, `2m² a_m (a_m − 1)` if `m = k`;
/// - `μ = λ`: `Σ_ℓ ℓ(ℓ−1) a_ℓ`;
///
/// with multiplicities `a` taken in `λ`.
pub fn cj_matrix_element_formula(lambda: &Partition, mu: &Partition) -> Result<u64> {
    if lambda.weight() != mu.weight() {
        return Err(Error::domain(format!(
            "matrix element between {lambda} and {mu} of different weights"
        )));
    }
    let a = |size: usize| lambda.multiplicity(size) as u64;
    Ok(match classify_move(lambda, mu) {
        Move::Cut { whole, small, large } => {
            let l = whole as u64;
            if small < large {
                2 * l * a(whole)
            } else {
                l * a(whole)
            }
        }
        Move::Join { small, large, .. } => {
            let (m, k) = (small as u64, large as u64);
            if small < large {
                4 * m * k * a(small) * a(large)
            } else {
                2 * m * m * a(small) * a(small).saturating_sub(1)
            }
        }
        Move::Same => lambda
            .multiplicities()
            .iter()
            .map(|(&l, &al)| (l * (l - 1) * al) as u64)
            .sum(),
        Move::Unrelated => 0,
    })
}

pub const MAX_DIRECT_WEIGHT: usize = 6;

/// Counts of `(i j) σ (τ(i) τ(j))` by doubled type, over ordered pairs
/// `(i, j)` with `j ∉ {i, τ(i)}` and `σ` the canonical representative of
/// `B~_λ`. Halving gives the matrix row of `CJ~`.
pub fn cj_ordered_pair_counts(lambda: &Partition) -> Result<BTreeMap<Partition, u64>> {
    let n = lambda.weight();
    if n > MAX_DIRECT_WEIGHT {
        return Err(Error::Resource {
            what: "direct matrix element: weight is limited to 6",
            workload: n as u128,
            budget: MAX_DIRECT_WEIGHT as u128,
        });
    }
    let sigma = canonical_representative(lambda);
    let mut counts = BTreeMap::new();
    for i in 1..=2 * n {
        for j in 1..=2 * n {
            if j == i || j == tau_point(n, i) {
                continue;
            }
            let left = Transposition::new(i, j)?.to_permutation(2 * n);
            let right = Transposition::new(tau_point(n, i), tau_point(n, j))?.to_permutation(2 * n);
            let moved = &(&left * &sigma) * &right;
            if let Some(mu) = doubled_type(&moved) {
                *counts.entry(mu).or_insert(0) += 1;
            }
        }
    }
    Ok(counts)
}

/// `½ #S(σ, μ)` for `σ = canonical_representative(λ)`.
pub fn cj_matrix_element_direct(lambda: &Partition, mu: &Partition) -> Result<u64> {
    if lambda.weight() != mu.weight() {
        return Err(Error::domain(format!(
            "matrix element between {lambda} and {mu} of different weights"
        )));
    }
    let counts = cj_ordered_pair_counts(lambda)?;
    let ordered = counts.get(mu).copied().unwrap_or(0);
    debug_assert!(ordered % 2 == 0, "(i j) and (j i) give the same product");
    Ok(ordered / 2)
}

/// Nonzero entries of the `CJ~` matrix at degree `n`, from the closed form.
pub fn cj_matrix(n: usize) -> Vec<CJMatrixEntry> {
    let parts = partitions_of(n);
    let mut out = Vec::new();
    for source in &parts {
        for target in &parts {
            let value = cj_matrix_element_formula(source, target).expect("same weight");
            if value > 0 {
                out.push(CJMatrixEntry {
                    source: source.clone(),
                    target: target.clone(),
                    value,
                });
            }
        }
    }
    out
}

/// `(CJ~)^k (p_1^n / n!)` for `k = 0..=m_max`.
pub fn cutjoin_iterates(n: usize, m_max: usize) -> Vec<PSeries> {
    let start = PSeries::term(Partition::ones(n), Rational::new(BigInt::one(), factorial(n)));
    let mut out = Vec::with_capacity(m_max + 1);
    out.push(start);
    for _ in 0..m_max {
        let next = apply_twisted_cutjoin(out.last().expect("nonempty"));
        out.push(next);
    }
    out
}

/// `h~_{m,λ}`: the coefficient of `p_λ` in `(CJ~)^m (p_1^n / n!)`.
pub fn hurwitz_by_cutjoin(m: usize, lambda: &Partition) -> Rational {
    cutjoin_iterates(lambda.weight(), m)[m].coeff(lambda)
}

/// One row of a Hurwitz table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub m: usize,
    pub lambda: Partition,
    pub value: Rational,
}

/// `h~_{m,λ}` for `1 ≤ |λ| ≤ n_max`, `m ≤ m_max`, ordered by `|λ|`, then
/// `m`, then canonical partition order.
pub fn generating_table(n_max: usize, m_max: usize) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let iterates = cutjoin_iterates(n, m_max);
        for (m, series) in iterates.iter().enumerate() {
            for lambda in partitions_of(n) {
                rows.push(TableRow {
                    m,
                    value: series.coeff(&lambda),
                    lambda,
                });
            }
        }
    }
    rows
}

/// Truncated `Σ_m β^m/m! (CJ~)^m exp(p_1)`, returned as its `β^m`
/// coefficients for `m ≤ m_max`, degrees `≤ max_degree`.
pub fn hurwitz_series(max_degree: usize, m_max: usize) -> Vec<PSeries> {
    let mut coeffs = vec![PSeries::zero(); m_max + 1];
    for n in 0..=max_degree {
        for (m, series) in cutjoin_iterates(n, m_max).into_iter().enumerate() {
            let scaled = series.scale(&Rational::new(BigInt::one(), factorial(m)));
            coeffs[m] = &coeffs[m] + &scaled;
        }
    }
    coeffs
}

/// True when every coefficient is a nonnegative integer.
pub fn has_nonnegative_integer_coefficients(series: &PSeries) -> bool {
    series.terms().all(|(_, c)| c.is_integer() && !c.is_negative())
}
