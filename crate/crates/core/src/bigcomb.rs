//! Exact binomial machinery over arbitrary-precision integers.
//!
//! Two binomial functions coexist here. `bco` is the combinatorial binomial
//! coefficient, extended by zero whenever the arguments leave the classical
//! range (negative `n`, negative `r`, or `r > n`). `bcp` is the
//! falling-factorial polynomial (1/r!)·∏_{j=0}^{r-1}(n−j), defined for every
//! integer `n` and every `r >= 0`; the two agree for `n >= 0`.
//!
//! Also here: the greedy Macaulay representation of an integer at a fixed
//! degree and the induced growth bound, which the lex-segment oracle uses for
//! its arithmetic (enumeration-free) mode.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Binomial coefficient `n choose r`, zero when `n < 0`, `r < 0`, or `r > n`.
///
/// Computed multiplicatively (never via Pascal tables), so `n` on the order
/// of 10^85 with small `r` stays cheap.
pub fn bco(n: &BigInt, r: i64) -> BigInt {
    if r < 0 || n.is_negative() {
        return BigInt::zero();
    }
    if &BigInt::from(r) > n {
        return BigInt::zero();
    }
    let mut result = BigInt::one();
    for i in 0..r {
        result = result * (n - BigInt::from(i)) / BigInt::from(i + 1);
    }
    result
}

/// `bco` on machine-size arguments.
pub fn bco_int(n: i64, r: i64) -> BigInt {
    bco(&BigInt::from(n), r)
}

/// Falling-factorial binomial: (1/r!)·∏_{j=0}^{r-1}(n−j), total in `n`.
///
/// The empty product makes `bcp(n, 0) = 1` for every `n`. Negative `r` is
/// rejected by the signature: the polynomial extension is only defined for
/// `r >= 0`.
///
/// The product of r consecutive integers is divisible by r!, so the division
/// is exact; this is asserted rather than silently truncated.
pub fn bcp(n: &BigInt, r: u32) -> BigInt {
    let mut product = BigInt::one();
    let mut factorial = BigInt::one();
    for j in 0..i64::from(r) {
        product *= n - BigInt::from(j);
        factorial *= BigInt::from(j + 1);
    }
    let (quotient, remainder) = num_integer::div_rem(product, factorial);
    debug_assert!(remainder.is_zero(), "falling factorial not divisible by r!");
    quotient
}

/// `bcp` on a machine-size numerator.
pub fn bcp_int(n: i64, r: u32) -> BigInt {
    bcp(&BigInt::from(n), r)
}

/// Number of monomials of degree `deg` in `vars` variables, which is the
/// Hilbert function of a polynomial ring.
///
/// Equals bco(vars+deg−1, vars−1); computed as bco(vars+deg−1, deg) so huge
/// variable counts stay cheap. The degree-0 count is 1 even for vars = 0,
/// where the binomial convention alone has one wrong value.
pub fn monomial_count(vars: i64, deg: i64) -> BigInt {
    if deg == 0 {
        return BigInt::one();
    }
    if vars <= 0 || deg < 0 {
        return BigInt::zero();
    }
    bco_int(vars + deg - 1, deg)
}

/// `monomial_count` for arbitrarily large variable counts.
pub fn monomial_count_big(vars: &BigInt, deg: i64) -> BigInt {
    if deg == 0 {
        return BigInt::one();
    }
    if vars.is_negative() || vars.is_zero() || deg < 0 {
        return BigInt::zero();
    }
    bco(&(vars + BigInt::from(deg - 1)), deg)
}

/// The unique greedy expansion m = Σ bco(a_i, i) with
/// a_d > a_{d−1} > … > a_j ≥ j ≥ 1, for m ≥ 0 and degree d ≥ 1.
///
/// Terms are listed with `i` descending from `d`; the empty list represents
/// m = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayRep {
    pub degree: i64,
    /// Pairs (a_i, i), i descending from `degree`.
    pub terms: Vec<(BigInt, i64)>,
}

impl MacaulayRep {
    /// Sum of bco(a_i, i) over the terms; reproduces the represented integer.
    pub fn value(&self) -> BigInt {
        self.terms.iter().map(|(a, i)| bco(a, *i)).sum()
    }
}

/// Greedy d-th Macaulay representation of `m >= 0`, `d >= 1`.
pub fn macaulay_rep(m: &BigInt, d: i64) -> Result<MacaulayRep> {
    if m.is_negative() {
        return Err(Error::InvalidArgument(format!(
            "macaulay_rep requires m >= 0, got {m}"
        )));
    }
    if d < 1 {
        return Err(Error::InvalidArgument(format!(
            "macaulay_rep requires d >= 1, got {d}"
        )));
    }
    let mut terms = Vec::new();
    let mut remaining = m.clone();
    let mut i = d;
    while !remaining.is_zero() {
        debug_assert!(i >= 1, "greedy expansion ran past degree 1");
        let a = largest_top(&remaining, i);
        remaining -= bco(&a, i);
        terms.push((a, i));
        i -= 1;
    }
    Ok(MacaulayRep { degree: d, terms })
}

/// Largest a with bco(a, i) <= m, for m >= 1. Exponential probe then binary
/// search; bco(i, i) = 1 <= m anchors the lower end.
fn largest_top(m: &BigInt, i: i64) -> BigInt {
    let mut lo = BigInt::from(i);
    let mut hi = lo.clone() + 1;
    while &bco(&hi, i) <= m {
        lo = hi.clone();
        hi *= 2;
    }
    // invariant: bco(lo, i) <= m < bco(hi, i)
    while &lo + 1 < hi {
        let mid: BigInt = (&lo + &hi) / 2;
        if &bco(&mid, i) <= m {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Macaulay growth m^{⟨d⟩}: with macaulay_rep(m, d) = [(a_i, i)], returns
/// Σ bco(a_i + 1, i + 1).
///
/// This is the degree-(d+1) dimension of the quotient-side complement of a
/// lex segment whose degree-d complement has size m, i.e. the largest
/// complement the next degree can have without new generators.
pub fn macaulay_growth(m: &BigInt, d: i64) -> Result<BigInt> {
    let rep = macaulay_rep(m, d)?;
    Ok(rep
        .terms
        .iter()
        .map(|(a, i)| bco(&(a + 1), i + 1))
        .sum())
}
