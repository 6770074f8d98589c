//! Ground truth for the lex approximations, independent of the recursion.
//!
//! For a monomial ideal I and a ring size N there is a unique lex ideal with
//! the Hilbert function of I·R^(N). Two constructions of its generator
//! counts live here: an explicit one that walks each degree slice in lex
//! order and picks generators greedily, and an arithmetic one that never
//! materializes a monomial, using Macaulay growth on the quotient
//! dimensions, so N can be astronomically large. Running the arithmetic
//! mode over a window of N values certifies the stabilized counts.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::bigcomb::{macaulay_growth, monomial_count_big};
use crate::error::{Error, Result};
use crate::lcbc::evaluate_big;
use crate::monomial::{hilbert_numerator, DegreeIter, Monomial, MonomialIdeal};

/// Default cap on the largest degree slice explicit mode will walk.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 10_000_000;

/// Per-degree outcome: the target dimension of the lex ideal's slice, how
/// many new generators it needs, and (explicit mode only) which monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeRecord {
    pub degree: usize,
    pub dim_target: BigInt,
    pub new_generators: BigInt,
    pub generators: Option<Vec<Monomial>>,
}

/// Lex approximation of one ideal at one ring size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexApproxResult {
    pub ideal: MonomialIdeal,
    pub n: BigInt,
    pub per_degree: Vec<DegreeRecord>,
}

impl LexApproxResult {
    /// a_1..a_{d_max}.
    pub fn a_sequence(&self) -> Vec<BigInt> {
        self.per_degree.iter().map(|r| r.new_generators.clone()).collect()
    }

    /// b_0..b_{d_max}.
    pub fn b_sequence(&self) -> Vec<BigInt> {
        let mut b = vec![BigInt::zero()];
        for r in &self.per_degree {
            b.push(b.last().unwrap() + &r.new_generators);
        }
        b
    }

    /// All generator monomials through the last degree (explicit mode).
    pub fn all_generators(&self) -> Vec<Monomial> {
        self.per_degree
            .iter()
            .filter_map(|r| r.generators.as_ref())
            .flatten()
            .cloned()
            .collect()
    }
}

/// Build the lex ideal degree by degree by explicit enumeration.
///
/// Each degree-t slice is walked lex-descending, lazily (only a prefix is
/// ever visited): monomials divisible by an already-chosen generator are in
/// the ideal, and the largest non-members are appended as new generators
/// until the slice reaches the target dimension of I·R^(N) in degree t.
pub fn lex_approx_explicit(
    ideal: &MonomialIdeal,
    n: i64,
    d_max: usize,
    budget: u64,
) -> Result<LexApproxResult> {
    if n < ideal.num_vars() as i64 {
        return Err(Error::InvalidArgument(format!(
            "explicit mode needs N >= {} (the ideal's variable count), got {n}",
            ideal.num_vars()
        )));
    }
    if d_max < 1 {
        return Err(Error::InvalidArgument("d_max must be >= 1".into()));
    }
    let n_big = BigInt::from(n);
    let slice = monomial_count_big(&n_big, d_max as i64);
    if slice > BigInt::from(budget) {
        return Err(Error::EnumerationBudgetExceeded {
            size: slice,
            budget,
        });
    }
    let numerator = hilbert_numerator(ideal);
    let mut chosen: Vec<Monomial> = Vec::new();
    let mut per_degree = Vec::with_capacity(d_max);
    for t in 1..=d_max {
        let target = evaluate_big(&numerator, &n_big, t as i64)?;
        let mut members = BigInt::zero();
        let mut new_gens: Vec<Monomial> = Vec::new();
        let mut iter = DegreeIter::new(n, t as i64);
        while members < target {
            let Some(mono) = iter.next() else {
                return Err(Error::InfeasibleDimension {
                    degree: t,
                    target,
                    forced: members,
                });
            };
            if !chosen.iter().any(|g| g.divides(&mono)) {
                chosen.push(mono.clone());
                new_gens.push(mono);
            }
            members += 1;
        }
        // a forced member just past the stopping point would push the slice
        // over the target
        if let Some(next) = iter.next() {
            if chosen.iter().any(|g| g.degree() < t as i64 && g.divides(&next)) {
                return Err(Error::InfeasibleDimension {
                    degree: t,
                    target: target.clone(),
                    forced: target + 1,
                });
            }
        }
        per_degree.push(DegreeRecord {
            degree: t,
            dim_target: target,
            new_generators: BigInt::from(new_gens.len()),
            generators: Some(new_gens),
        });
    }
    Ok(LexApproxResult {
        ideal: ideal.clone(),
        n: n_big,
        per_degree,
    })
}

/// Generator counts of the lex ideal by pure arithmetic.
///
/// With q_t the quotient dimension in degree t, Macaulay growth gives the
/// largest quotient the next degree could keep without new generators;
/// every unit short of that is one new generator:
/// a_t = q_{t−1}^{⟨t−1⟩} − q_t for t >= 2, and a_1 = dim I_1.
pub fn lex_approx_macaulay(
    ideal: &MonomialIdeal,
    n: &BigInt,
    d_max: usize,
) -> Result<LexApproxResult> {
    if n < &BigInt::from(ideal.num_vars()) {
        return Err(Error::InvalidArgument(format!(
            "arithmetic mode needs N >= {} (the ideal's variable count), got {n}",
            ideal.num_vars()
        )));
    }
    if d_max < 1 {
        return Err(Error::InvalidArgument("d_max must be >= 1".into()));
    }
    let numerator = hilbert_numerator(ideal);
    let mut per_degree = Vec::with_capacity(d_max);
    let mut q_prev = BigInt::zero();
    for t in 1..=d_max {
        let dim = evaluate_big(&numerator, n, t as i64)?;
        let q = monomial_count_big(n, t as i64) - &dim;
        let a = if t == 1 {
            dim.clone()
        } else {
            macaulay_growth(&q_prev, t as i64 - 1)? - &q
        };
        if a < BigInt::zero() {
            return Err(Error::NegativeGeneratorCount {
                degree: t,
                count: a,
            });
        }
        per_degree.push(DegreeRecord {
            degree: t,
            dim_target: dim,
            new_generators: a,
            generators: None,
        });
        q_prev = q;
    }
    Ok(LexApproxResult {
        ideal: ideal.clone(),
        n: n.clone(),
        per_degree,
    })
}

/// Stabilized counts with their witness range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stabilization {
    pub a: Vec<BigInt>,
    pub b: Vec<BigInt>,
    pub witness_lo: BigInt,
    pub witness_hi: BigInt,
}

/// Find the stable a_1..a_{d_max}: iterate the arithmetic mode at
/// N = max(h, b̂+1) until the cumulative count b̂ is self-consistent, then
/// demand degreewise agreement across `margin` consecutive ring sizes.
pub fn stabilization(
    ideal: &MonomialIdeal,
    d_max: usize,
    margin: usize,
) -> Result<Stabilization> {
    if d_max < 1 || margin < 1 {
        return Err(Error::InvalidArgument(
            "stabilization needs d_max >= 1 and margin >= 1".into(),
        ));
    }
    let h = BigInt::from(ideal.num_vars());
    let mut b_hat = BigInt::zero();
    for _ in 0..64 {
        let n_lo: BigInt = (&b_hat + 1u32).max(h.clone());
        let run = lex_approx_macaulay(ideal, &n_lo, d_max)?;
        let b_new = run.b_sequence().last().unwrap().clone();
        if b_new != b_hat {
            b_hat = b_new;
            continue;
        }
        // self-consistent; check the whole witness window
        let base_a = run.a_sequence();
        for offset in 1..margin {
            let n = &n_lo + BigInt::from(offset);
            let other = lex_approx_macaulay(ideal, &n, d_max)?;
            if other.a_sequence() != base_a {
                return Err(Error::NotStabilized(format!(
                    "a-sequences differ between N = {n_lo} and N = {n}"
                )));
            }
        }
        return Ok(Stabilization {
            a: base_a,
            b: run.b_sequence(),
            witness_lo: n_lo.clone(),
            witness_hi: &n_lo + BigInt::from(margin - 1),
        });
    }
    Err(Error::NotStabilized(
        "cumulative count did not reach a fixed point in 64 rounds".into(),
    ))
}

/// Full-slice audit of an explicit-mode result: every degree slice of the
/// constructed ideal must be an upward-closed lex segment of exactly the
/// target dimension. Returns false with no further detail on violation.
pub fn verify_lex_segments(result: &LexApproxResult, budget: u64) -> Result<bool> {
    let n = result.n.to_i64().ok_or_else(|| {
        Error::InvalidArgument("explicit results only exist for machine-size N".into())
    })?;
    let gens = result.all_generators();
    for record in &result.per_degree {
        if record.generators.is_none() {
            return Err(Error::InvalidArgument(
                "lex-segment audit needs an explicit-mode result".into(),
            ));
        }
        let t = record.degree as i64;
        let slice = monomial_count_big(&result.n, t);
        if slice > BigInt::from(budget) {
            return Err(Error::EnumerationBudgetExceeded {
                size: slice,
                budget,
            });
        }
        let mut members = BigInt::zero();
        let mut seen_nonmember = false;
        for mono in DegreeIter::new(n, t) {
            let member = gens
                .iter()
                .any(|g| g.degree() <= t && g.divides(&mono));
            if member {
                if seen_nonmember {
                    return Ok(false);
                }
                members += 1;
            } else {
                seen_nonmember = true;
            }
        }
        if members != record.dim_target {
            return Ok(false);
        }
    }
    Ok(true)
}
