//! Jack polynomials as eigenvectors of `Δ_α`, zonal polynomials (`α = 2`)
//! and the closed-form Hurwitz evaluation through them.
//!
//! `J_λ^{(α)}` is found by an exact linear solve in the `p_μ` basis of
//! degree `|λ|`:
//!
//! - `(Δ_α − e(λ,α)) v = 0`;
//! - `v` expanded in monomial symmetric functions has no `m_ν` with `ν`
//!   outside the dominance ideal below `λ`;
//! - `[p_1^n] v = 1`.
//!
//! A rank-deficient system means the eigenvector is not determined by
//! these conditions and is reported as [`Error::Degeneracy`].

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::{integer, partitions_of, Partition, Rational};
use crate::symfunc::{apply_laplace_beltrami, PSeries};

pub const MAX_JACK_WEIGHT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JackPolynomial {
    pub partition: Partition,
    pub alpha: Rational,
    /// Expansion in `p_μ`, homogeneous of degree `|partition|`.
    pub expansion: PSeries,
}

impl JackPolynomial {
    pub fn eigenvalue(&self) -> Rational {
        self.partition.lb_eigenvalue(&self.alpha)
    }
}

type CacheKey = (Partition, Rational);

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<JackPolynomial>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<JackPolynomial>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `J_λ^{(α)}`, cached per `(λ, α)`.
pub fn jack_polynomial(lambda: &Partition, alpha: &Rational) -> Result<Arc<JackPolynomial>> {
    let key = (lambda.clone(), alpha.clone());
    if let Some(hit) = cache().lock().expect("jack cache poisoned").get(&key) {
        return Ok(Arc::clone(hit));
    }
    // Computed outside the lock; a concurrent duplicate fill stores an
    // identical value.
    let jack = Arc::new(compute_jack(lambda, alpha)?);
    cache()
        .lock()
        .expect("jack cache poisoned")
        .entry(key)
        .or_insert_with(|| Arc::clone(&jack));
    Ok(jack)
}

/// `Z_λ = J_λ^{(2)}`.
pub fn zonal(lambda: &Partition) -> Result<Arc<JackPolynomial>> {
    jack_polynomial(lambda, &integer(2))
}

pub fn compute_jack(lambda: &Partition, alpha: &Rational) -> Result<JackPolynomial> {
    if !alpha.is_positive() {
        return Err(Error::domain(format!("Jack parameter must be positive, got {alpha}")));
    }
    let n = lambda.weight();
    if n > MAX_JACK_WEIGHT {
        return Err(Error::Resource {
            what: "Jack polynomial weight",
            workload: n as u128,
            budget: MAX_JACK_WEIGHT as u128,
        });
    }
    let eigen = lambda.lb_eigenvalue(alpha);
    let basis = partitions_of(n);
    let degenerate = |detail: String| Error::Degeneracy {
        partition: lambda.to_string(),
        alpha: alpha.to_string(),
        detail,
    };

    if let Some(mu) = basis
        .iter()
        .find(|mu| *mu != lambda && lambda.dominates(mu) && mu.lb_eigenvalue(alpha) == eigen)
    {
        return Err(degenerate(format!("e({mu}, α) equals e({lambda}, α) = {eigen}")));
    }

    let dim = basis.len();
    let index: HashMap<&Partition, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut rows: Vec<Vec<Rational>> = Vec::new();

    // (Δ_α − e) v = 0, one row per target monomial.
    let mut operator = vec![vec![Rational::zero(); dim + 1]; dim];
    for (col, mu) in basis.iter().enumerate() {
        let image = apply_laplace_beltrami(alpha, &PSeries::monomial(mu.clone()));
        for (target, c) in image.terms() {
            operator[index[target]][col] += c;
        }
        operator[col][col] -= &eigen;
    }
    rows.extend(operator);

    // [m_ν] v = 0 for ν not dominated by λ.
    for nu in basis.iter().filter(|nu| !lambda.dominates(nu)) {
        let mut row = vec![Rational::zero(); dim + 1];
        for (col, mu) in basis.iter().enumerate() {
            row[col] = Rational::from_integer(BigInt::from(power_sum_to_monomial(mu, nu)));
        }
        rows.push(row);
    }

    let mut norm = vec![Rational::zero(); dim + 1];
    norm[index[&Partition::ones(n)]] = Rational::one();
    norm[dim] = Rational::one();
    rows.push(norm);

    let solution = solve_unique(rows, dim).map_err(|e| match e {
        SolveFailure::Underdetermined(rank) => degenerate(format!("eigenvector conditions have rank {rank} < {dim}")),
        SolveFailure::Inconsistent => degenerate("no normalized eigenvector satisfies the support conditions".into()),
    })?;

    let mut expansion = PSeries::zero();
    for (mu, c) in basis.into_iter().zip(solution) {
        expansion.add_term(mu, c);
    }
    Ok(JackPolynomial {
        partition: lambda.clone(),
        alpha: alpha.clone(),
        expansion,
    })
}

/// Coefficient of `m_ν` in `p_μ`: ordered ways to pour the parts of `μ`
/// into the parts of `ν` filling each exactly.
pub fn power_sum_to_monomial(mu: &Partition, nu: &Partition) -> u64 {
    fn go(parts: &[usize], room: &mut [usize], memo: &mut HashMap<(usize, Vec<usize>), u64>) -> u64 {
        let Some((&first, rest)) = parts.split_first() else {
            return u64::from(room.iter().all(|&r| r == 0));
        };
        let key = (parts.len(), room.to_vec());
        if let Some(&hit) = memo.get(&key) {
            return hit;
        }
        let mut total = 0;
        for slot in 0..room.len() {
            if room[slot] >= first {
                room[slot] -= first;
                total += go(rest, room, memo);
                room[slot] += first;
            }
        }
        memo.insert(key, total);
        total
    }
    if mu.weight() != nu.weight() {
        return 0;
    }
    go(mu.parts(), &mut nu.parts().to_vec(), &mut HashMap::new())
}

enum SolveFailure {
    Underdetermined(usize),
    Inconsistent,
}

/// Gauss–Jordan on an augmented matrix with `unknowns + 1` columns;
/// succeeds only when the solution is unique.
fn solve_unique(mut rows: Vec<Vec<Rational>>, unknowns: usize) -> Result<Vec<Rational>, SolveFailure> {
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(unknowns);
    for col in 0..unknowns {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = rows[pivot_row][col].recip();
        for x in rows[pivot_row].iter_mut() {
            *x *= &inv;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|row| !row[unknowns].is_zero()) {
        return Err(SolveFailure::Inconsistent);
    }
    if pivots.len() < unknowns {
        return Err(SolveFailure::Underdetermined(pivots.len()));
    }
    Ok(rows
        .into_iter()
        .take(unknowns)
        .map(|mut row| row.swap_remove(unknowns))
        .collect())
}

/// `Σ_{|λ|=n} α^n J_λ^{(α)} / (H_λ(α) H'_λ(α)) = p_1^n / n!`.
pub fn verify_cauchy(n: usize, alpha: &Rational) -> Result<bool> {
    Ok(cauchy_sum(n, alpha)?
        == PSeries::term(
            Partition::ones(n),
            Rational::new(BigInt::one(), crate::partition::factorial(n)),
        ))
}

/// Left-hand side of the degree-`n` Cauchy identity.
pub fn cauchy_sum(n: usize, alpha: &Rational) -> Result<PSeries> {
    let weight = num_traits::pow(alpha.clone(), n);
    let mut sum = PSeries::zero();
    for lambda in partitions_of(n) {
        let jack = jack_polynomial(&lambda, alpha)?;
        let coeff = &weight / lambda.hook_product(alpha);
        sum = &sum + &jack.expansion.scale(&coeff);
    }
    Ok(sum)
}

/// `h~_{m,λ} = Σ_{|μ|=|λ|} e(μ,2)^m · 2^n [p_λ] Z_μ / (H_μ(2) H'_μ(2))`.
pub fn hurwitz_by_zonal(m: usize, lambda: &Partition) -> Result<Rational> {
    let form = zonal_exponential_form(lambda)?;
    Ok(form
        .iter()
        .map(|(rate, coeff)| coeff * num_traits::pow(rate.clone(), m))
        .sum())
}

/// `β ↦ Σ_m h~_{m,λ} β^m / m!` written as `Σ c_k exp(r_k β)`: pairs
/// `(r_k, c_k)` with distinct rates, zero coefficients dropped, rates
/// descending.
pub fn zonal_exponential_form(lambda: &Partition) -> Result<Vec<(Rational, Rational)>> {
    let n = lambda.weight();
    let two = integer(2);
    let scale = num_traits::pow(two.clone(), n);
    let mut by_rate: Vec<(Rational, Rational)> = Vec::new();
    for mu in partitions_of(n) {
        let z = zonal(&mu)?;
        let c = z.expansion.coeff(lambda);
        if c.is_zero() {
            continue;
        }
        let c = &scale * c / mu.hook_product(&two);
        let rate = mu.lb_eigenvalue(&two);
        match by_rate.iter_mut().find(|(r, _)| *r == rate) {
            Some((_, acc)) => *acc += c,
            None => by_rate.push((rate, c)),
        }
    }
    by_rate.retain(|(_, c)| !c.is_zero());
    by_rate.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(by_rate)
}
