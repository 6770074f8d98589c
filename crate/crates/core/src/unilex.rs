//! Universal lex ideals from Γ-specifications.
//!
//! A Γ-specification lists the degrees and counts of minimal generators,
//! (d_1, α_1), …, (d_h, α_h) with d_1 < … < d_h. That data determines the
//! universal lex ideal completely: its generators follow an explicit μ
//! recursion, and its Hilbert function in any ring with more than β_h
//! variables has a closed form as a telescoping sum of binomials.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::bigcomb::bco;
use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Degrees and generator counts (d_j, α_j), strictly increasing in degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSpec {
    pairs: Vec<(i64, usize)>,
}

impl GammaSpec {
    pub fn new(pairs: Vec<(i64, usize)>) -> Result<Self> {
        for w in pairs.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::InvalidArgument(format!(
                    "gamma degrees must be strictly increasing, got {} then {}",
                    w[0].0, w[1].0
                )));
            }
        }
        for (d, alpha) in &pairs {
            if *d < 1 {
                return Err(Error::InvalidArgument(format!(
                    "gamma degrees must be >= 1, got {d}"
                )));
            }
            if *alpha < 1 {
                return Err(Error::InvalidArgument(format!(
                    "gamma generator counts must be >= 1, got {alpha} in degree {d}"
                )));
            }
        }
        Ok(GammaSpec { pairs })
    }

    pub fn pairs(&self) -> &[(i64, usize)] {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Partial sums β_0 = 0, β_i = α_1 + … + α_i.
    pub fn betas(&self) -> Vec<usize> {
        let mut betas = vec![0];
        for (_, alpha) in &self.pairs {
            betas.push(betas.last().unwrap() + alpha);
        }
        betas
    }

    /// β_h: total generator count, which is also the number of variables
    /// occurring in the generators.
    pub fn total_generators(&self) -> usize {
        self.pairs.iter().map(|(_, a)| a).sum()
    }

    pub fn max_degree(&self) -> i64 {
        self.pairs.last().map(|(d, _)| *d).unwrap_or(0)
    }
}

/// The generator set 𝔅_Γ, in canonical order (degree ascending,
/// lex-descending within a degree).
///
/// μ_1 = x_1^{d_1−1} and μ_{j+1} = μ_j·x_{β_j+1}^{d_{j+1}−d_j}; degree d_j
/// contributes μ_j·x_{β_{j−1}+1}, …, μ_j·x_{β_j}. Exactly β_h variables
/// occur.
pub fn generators_from_gamma(gamma: &GammaSpec) -> Vec<Monomial> {
    let pairs = gamma.pairs();
    if pairs.is_empty() {
        return Vec::new();
    }
    let betas = gamma.betas();
    let mut gens = Vec::with_capacity(gamma.total_generators());
    let mut mu = Monomial::var_pow(1, (pairs[0].0 - 1) as u32);
    for (j, &(d, _alpha)) in pairs.iter().enumerate() {
        for pos in betas[j] + 1..=betas[j + 1] {
            gens.push(mu.mul_var(pos, 1));
        }
        if let Some(&(d_next, _)) = pairs.get(j + 1) {
            mu = mu.mul_var(betas[j + 1] + 1, (d_next - d) as u32);
        }
    }
    gens
}

/// Hilbert function of the universal lex ideal of Γ in N variables, degree t.
/// Closed telescoping form; requires N > β_h (at N = β_h one subtracted term
/// would be wrong).
pub fn hf_gamma(gamma: &GammaSpec, n: i64, t: i64) -> Result<BigInt> {
    let beta_h = gamma.total_generators() as i64;
    if n <= beta_h {
        return Err(Error::InvalidArgument(format!(
            "hf_gamma requires N > β_h = {beta_h}, got N = {n}"
        )));
    }
    let betas = gamma.betas();
    let mut total = BigInt::zero();
    for (j, &(d, _)) in gamma.pairs().iter().enumerate() {
        let r = t - d + 1;
        total += bco(&BigInt::from(n - betas[j] as i64 + t - d), r)
            - bco(&BigInt::from(n - betas[j + 1] as i64 + t - d), r);
    }
    Ok(total)
}

/// Hilbert function of the universal lex ideal with cumulative generator
/// counts b_1..b_d, in N variables at degree t; requires N > b_d and b
/// nondecreasing. Degrees with b_j = b_{j−1} contribute nothing, so this
/// agrees with [`hf_gamma`] on the Γ obtained by dropping repeats.
pub fn hf_from_b(b: &[BigInt], n: &BigInt, t: i64) -> Result<BigInt> {
    check_nondecreasing(b)?;
    if let Some(b_d) = b.last() {
        if n <= b_d {
            return Err(Error::InvalidArgument(format!(
                "hf_from_b requires N > b_d = {b_d}, got N = {n}"
            )));
        }
    }
    let mut total = BigInt::zero();
    let mut b_prev = BigInt::zero();
    for (idx, b_j) in b.iter().enumerate() {
        let j = idx as i64 + 1;
        let r = t - j + 1;
        total += bco(&(n - &b_prev + BigInt::from(t - j)), r)
            - bco(&(n - b_j + BigInt::from(t - j)), r);
        b_prev = b_j.clone();
    }
    Ok(total)
}

/// Γ from a nondecreasing cumulative count sequence b_1..b_d: the pairs
/// (j, b_j − b_{j−1}) at exactly the degrees where the count increases.
pub fn gamma_from_b(b: &[BigInt]) -> Result<GammaSpec> {
    check_nondecreasing(b)?;
    let mut pairs = Vec::new();
    let mut b_prev = BigInt::zero();
    for (idx, b_j) in b.iter().enumerate() {
        let diff = b_j - &b_prev;
        if diff > BigInt::zero() {
            let alpha = diff.to_usize().ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "generator count jump {diff} in degree {} too large to realize",
                    idx + 1
                ))
            })?;
            pairs.push((idx as i64 + 1, alpha));
        }
        b_prev = b_j.clone();
    }
    GammaSpec::new(pairs)
}

fn check_nondecreasing(b: &[BigInt]) -> Result<()> {
    if let Some(first) = b.first() {
        if first.is_negative() {
            return Err(Error::InvalidArgument(format!(
                "b must be nonnegative, got b_1 = {first}"
            )));
        }
    }
    for (idx, w) in b.windows(2).enumerate() {
        if w[0] > w[1] {
            return Err(Error::InvalidArgument(format!(
                "b must be nondecreasing, got b_{} = {} then b_{} = {}",
                idx + 1,
                w[0],
                idx + 2,
                w[1]
            )));
        }
    }
    Ok(())
}
