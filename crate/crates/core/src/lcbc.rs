//! Linear combinations of shifted binomial coefficient functions.
//!
//! An LCBC function of (N, t) is Σ_s c_s·bco(N+t+s−1, N−1) with finitely many
//! nonzero integer coefficients c_s. The extended Hilbert function of an
//! ideal (the Hilbert function of I·R^(N) for every N at once) is of this
//! form, with c_s read off the Hilbert-series numerator (shift s = −degree).
//!
//! This module evaluates such functions, extends a plain Hilbert-function
//! table by convolution (an independent route to the same values), freezes a
//! fixed degree into the polynomial in N it eventually agrees with, fits
//! coefficients back out of sampled values, and expands complete-intersection
//! numerators.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bigcomb::{bco, bcp_int, monomial_count};
use crate::error::{Error, Result};

/// Sparse integer coefficient vector s ↦ c_s. Vectors arising from proper
/// ideals are supported on s <= −1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoeffVector {
    coeffs: BTreeMap<i64, BigInt>,
}

impl CoeffVector {
    pub fn new() -> Self {
        CoeffVector::default()
    }

    pub fn from_pairs(pairs: Vec<(i64, BigInt)>) -> Self {
        pairs.into_iter().collect()
    }

    pub fn coeff(&self, s: i64) -> BigInt {
        self.coeffs.get(&s).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn set(&mut self, s: i64, value: BigInt) {
        if value.is_zero() {
            self.coeffs.remove(&s);
        } else {
            self.coeffs.insert(s, value);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Shifts with nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<i64> {
        self.coeffs.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(s, c)| (*s, c))
    }

    pub fn min_shift(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_shift(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Proper means c_s = 0 for all s >= 0 (no numerator constant term).
    pub fn is_proper(&self) -> bool {
        self.max_shift().is_none_or(|s| s < 0)
    }

    pub fn check_proper(&self) -> Result<()> {
        match self.coeffs.range(0..).next() {
            None => Ok(()),
            Some((s, c)) => Err(Error::ImproperCoefficients {
                shift: *s,
                value: c.clone(),
            }),
        }
    }
}

impl FromIterator<(i64, BigInt)> for CoeffVector {
    fn from_iter<I: IntoIterator<Item = (i64, BigInt)>>(iter: I) -> Self {
        let mut v = CoeffVector::new();
        for (s, c) in iter {
            let total = v.coeff(s) + c;
            v.set(s, total);
        }
        v
    }
}

/// Exact value of Σ_s c_s·bco(N+t+s−1, N−1) for N >= 1.
pub fn evaluate(c: &CoeffVector, n: i64, t: i64) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!(
            "evaluate requires N >= 1, got {n}"
        )));
    }
    evaluate_big(c, &BigInt::from(n), t)
}

/// `evaluate` for arbitrarily large N. Uses bco(N+t+s−1, t+s), the same
/// value with a small lower index.
pub fn evaluate_big(c: &CoeffVector, n: &BigInt, t: i64) -> Result<BigInt> {
    if n < &BigInt::one() {
        return Err(Error::InvalidArgument(format!(
            "evaluate requires N >= 1, got {n}"
        )));
    }
    let mut total = BigInt::zero();
    for (s, coeff) in c.iter() {
        let r = t + s;
        if r < 0 {
            continue;
        }
        total += coeff * bco(&(n + BigInt::from(r - 1)), r);
    }
    Ok(total)
}

/// A Hilbert-function table H(0..=t_max) over a ring with `h` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HFTable {
    h: usize,
    values: Vec<BigInt>,
}

impl HFTable {
    pub fn new(h: usize, values: Vec<BigInt>) -> Result<Self> {
        if h < 1 {
            return Err(Error::InvalidArgument("HFTable requires h >= 1".into()));
        }
        if values.is_empty() {
            return Err(Error::InvalidArgument(
                "HFTable needs at least the value H(0)".into(),
            ));
        }
        if let Some(v) = values.iter().find(|v| v.is_negative()) {
            return Err(Error::InvalidArgument(format!(
                "Hilbert function values must be nonnegative, got {v}"
            )));
        }
        Ok(HFTable { h, values })
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn t_max(&self) -> i64 {
        self.values.len() as i64 - 1
    }

    pub fn value(&self, t: i64) -> BigInt {
        self.values[t as usize].clone()
    }
}

/// Extension of H to N variables by convolution:
/// H^(N)(t) = Σ_{0<=i<=t} H(i)·(count of degree-(t−i) monomials in N−h vars).
///
/// An independent route to the extended Hilbert function; must agree with
/// [`evaluate`] on the numerator vector of the same ideal.
pub fn extend_by_convolution(table: &HFTable, n: i64, t: i64) -> Result<BigInt> {
    if n < table.h() as i64 {
        return Err(Error::InvalidArgument(format!(
            "extend_by_convolution requires N >= h = {}, got {n}",
            table.h()
        )));
    }
    if t < 0 || t > table.t_max() {
        return Err(Error::InvalidArgument(format!(
            "degree {t} outside the table range 0..={}",
            table.t_max()
        )));
    }
    let extra_vars = n - table.h() as i64;
    let mut total = BigInt::zero();
    for i in 0..=t {
        total += table.value(i) * monomial_count(extra_vars, t - i);
    }
    Ok(total)
}

/// The polynomial G_d(N) a fixed degree of an LCBC function eventually
/// agrees with: Σ_{s >= −d} c_s·bcp(N+d+s−1, d+s), kept in the bcp basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StablePolynomial {
    degree: i64,
    /// (c_s, d+s) pairs with d+s >= 0, ascending in d+s.
    terms: Vec<(BigInt, u32)>,
}

impl StablePolynomial {
    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// The (c_s, d+s) term list.
    pub fn terms(&self) -> &[(BigInt, u32)] {
        &self.terms
    }

    /// G_d(N) at any integer N, including N = 0.
    pub fn eval_at(&self, n: i64) -> BigInt {
        let mut total = BigInt::zero();
        for (coeff, r) in &self.terms {
            total += coeff * bcp_int(n + i64::from(*r) - 1, *r);
        }
        total
    }

    /// Constant term G_d(0): the coefficient c_{−d} (zero if absent).
    pub fn constant_term(&self) -> BigInt {
        self.terms
            .iter()
            .find(|(_, r)| *r == 0)
            .map(|(c, _)| c.clone())
            .unwrap_or_else(BigInt::zero)
    }
}

/// Freeze degree `d` of the LCBC function with coefficients `c` into its
/// polynomial in N. Terms with s < −d vanish for N >> 0 and are dropped.
pub fn stable_polynomial(c: &CoeffVector, d: i64) -> StablePolynomial {
    let terms = c
        .iter()
        .filter(|(s, _)| d + s >= 0)
        .map(|(s, coeff)| (coeff.clone(), (d + s) as u32))
        .collect();
    StablePolynomial { degree: d, terms }
}

/// Smallest N from which `evaluate(c, N, d)` agrees with the stable
/// polynomial: N >= 1 − d − s_min over the supported shifts.
pub fn stabilization_threshold(c: &CoeffVector, d: i64) -> i64 {
    match c.min_shift() {
        Some(s_min) => (1 - d - s_min).max(1),
        None => 1,
    }
}

/// Recover the unique coefficient vector supported on [s_min, s_max] that
/// reproduces every sample (N, t, value).
///
/// Triangular elimination in the bco basis: the shift s is isolated by any
/// sample at degree t = −s, where every lower shift's basis function
/// vanishes and the diagonal coefficient is bco(N−1, N−1) = 1. Every sample
/// is then re-verified against the solved vector.
pub fn fit(samples: &[(i64, i64, BigInt)], s_min: i64, s_max: i64) -> Result<CoeffVector> {
    if s_min > s_max {
        return Err(Error::InvalidArgument(format!(
            "empty shift range [{s_min}, {s_max}]"
        )));
    }
    for (n, _, _) in samples {
        if *n < 1 {
            return Err(Error::InvalidArgument(format!(
                "samples need N >= 1, got N = {n}"
            )));
        }
    }
    let mut solved = CoeffVector::new();
    for s in (s_min..=s_max).rev() {
        let t = -s;
        let Some((n, _, value)) = samples.iter().find(|(_, st, _)| *st == t) else {
            return Err(Error::Underdetermined { shift: s, degree: t });
        };
        // subtract the already-solved (higher-shift) contributions
        let mut rest = BigInt::zero();
        for (s2, coeff) in solved.iter() {
            let r = t + s2;
            if r >= 0 {
                rest += coeff * bco(&BigInt::from(n + r - 1), r);
            }
        }
        solved.set(s, value - rest);
    }
    for (n, t, value) in samples {
        let predicted = evaluate(&solved, *n, *t)?;
        if &predicted != value {
            return Err(Error::InconsistentSamples {
                n: *n,
                t: *t,
                expected: predicted,
                actual: value.clone(),
            });
        }
    }
    Ok(solved)
}

/// Coefficient vector of a complete intersection with the given form
/// degrees: the expansion of 1 − ∏_i (1 − z^{m_i}).
pub fn ci_numerator(degrees: &[i64]) -> Result<CoeffVector> {
    if degrees.is_empty() {
        return Err(Error::InvalidArgument(
            "complete intersection needs at least one degree".into(),
        ));
    }
    if let Some(d) = degrees.iter().find(|&&d| d < 1) {
        return Err(Error::InvalidArgument(format!(
            "complete intersection degrees must be >= 1, got {d}"
        )));
    }
    // product ∏ (1 − z^{m_i}) as degree -> coefficient
    let mut product: BTreeMap<i64, BigInt> = BTreeMap::new();
    product.insert(0, BigInt::one());
    for &m in degrees {
        let mut next: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (deg, coeff) in &product {
            *next.entry(*deg).or_insert_with(BigInt::zero) += coeff;
            *next.entry(deg + m).or_insert_with(BigInt::zero) -= coeff;
        }
        next.retain(|_, c| !c.is_zero());
        product = next;
    }
    // K = 1 − product; c_s = coefficient of z^{−s}
    Ok(product
        .into_iter()
        .filter(|(deg, _)| *deg != 0)
        .map(|(deg, coeff)| (-deg, -coeff))
        .collect())
}
