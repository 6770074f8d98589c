//! Dyadic fixed-point arithmetic for certified high-precision estimates.
//!
//! Everything here is integer-only: values are big-integer mantissas at an
//! explicit power-of-two scale, and every operation rounds in a known
//! direction, so callers get true enclosing intervals rather than floats.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Working bits kept beyond the extracted fraction bits.
const WORK_GUARD_BITS: u32 = 32;

/// log2(x) as an enclosing interval: returns (k, frac) with
/// log2(x) ∈ [k + frac/2^frac_bits, k + (frac+2)/2^frac_bits].
///
/// The mantissa x/2^k ∈ [1, 2) is squared repeatedly; each squaring emits
/// one binary fraction digit. Truncating division keeps every intermediate
/// a lower bound, and the total defect stays under two output ulps: one ulp
/// of unextracted remainder plus the truncation losses, which enter the
/// logarithm with geometrically decaying weight.
pub(crate) fn log2_bounds(x: &BigUint, frac_bits: u32) -> (u64, BigUint) {
    assert!(!x.is_zero(), "log2 of zero");
    let k = x.bits() - 1;
    let p = frac_bits + WORK_GUARD_BITS;
    let mut mantissa = (x << p) >> k;
    let threshold = BigUint::one() << (p + 1);
    let mut frac = BigUint::zero();
    for _ in 0..frac_bits {
        mantissa = (&mantissa * &mantissa) >> p;
        frac <<= 1;
        if mantissa >= threshold {
            mantissa >>= 1;
            frac += 1u32;
        }
    }
    (k, frac)
}

/// ln 2 as an enclosing interval at scale 2^prec: (lo, hi) with
/// lo/2^prec <= ln 2 <= hi/2^prec.
///
/// Series ln 2 = Σ_{k>=0} 2/((2k+1)·3^{2k+1}); each floored term loses under
/// one ulp and the tail past the first vanishing term is under two ulps.
pub(crate) fn ln2_bounds(prec: u32) -> (BigUint, BigUint) {
    let numerator = BigUint::one() << (prec + 1);
    let mut lo = BigUint::zero();
    let mut terms = 0u32;
    let mut power_of_nine = BigUint::from(3u32);
    let mut k = 0u64;
    loop {
        let term = &numerator / (&power_of_nine * BigUint::from(2 * k + 1));
        if term.is_zero() {
            break;
        }
        lo += term;
        terms += 1;
        power_of_nine *= 9u32;
        k += 1;
    }
    let hi = &lo + BigUint::from(terms + 2);
    (lo, hi)
}

/// Decimal rendering of the rational num/den, rounded up, with `sig`
/// significant digits, in scientific notation.
pub(crate) fn decimal_upper(num: &BigUint, den: &BigUint, sig: usize) -> String {
    assert!(sig >= 1 && !den.is_zero());
    if num.is_zero() {
        return "0".into();
    }
    // choose p with ceil(num·10^p/den) in [10^{sig-1}, 10^sig)
    let bits_diff = num.bits() as i64 - den.bits() as i64;
    // log10(value) is within one of bits_diff·log10(2)
    let mut p = sig as i64 - 1 - bits_diff * 30103 / 100000;
    let lower = BigUint::from(10u32).pow(sig as u32 - 1);
    let upper = BigUint::from(10u32).pow(sig as u32);
    let mantissa = loop {
        let m = ceil_div_shifted(num, den, p);
        if m < lower {
            p += 1;
        } else if m >= upper {
            p -= 1;
        } else {
            break m;
        }
    };
    let digits = mantissa.to_string();
    let exp10 = sig as i64 - 1 - p;
    format!("{}.{}e{}", &digits[..1], &digits[1..], exp10)
}

/// ceil(num·10^p/den), where p may be negative.
fn ceil_div_shifted(num: &BigUint, den: &BigUint, p: i64) -> BigUint {
    let (n, d) = if p >= 0 {
        (num * BigUint::from(10u32).pow(p as u32), den.clone())
    } else {
        (num.clone(), den * BigUint::from(10u32).pow((-p) as u32))
    };
    (&n + &d - BigUint::one()) / d
}
