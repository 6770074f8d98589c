//! Hamilton numbers: the ℓ recursion, alternate recursions, growth bounds,
//! the doubly-exponential-rate constant ρ with certified error, and the
//! block array whose leaders recover the same numbers.
//!
//! The base sequence is ℓ_0 = 3 and
//!
//!   ℓ_{n+1} = 1 + Σ_{j=0}^{n} (−1)^j·bco(ℓ_{n−j}, j+2),
//!
//! with H_n = ℓ_{n−1} − 1. ℓ_13 already has over 1300 digits, so every value
//! is an exact big integer and ρ is computed by integer fixed-point
//! arithmetic; no floating point anywhere.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::bigcomb::bco;
use crate::error::{Error, Result};
use crate::fixedpoint::{decimal_upper, ln2_bounds, log2_bounds};

/// ℓ_0..ℓ_{n_max}, with the extended seeds ℓ_{−3} = ℓ_{−2} = 0, ℓ_{−1} = 2
/// available through [`HamiltonTable::ell`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonTable {
    ell: Vec<BigInt>,
}

impl HamiltonTable {
    /// Run the base recursion up to ℓ_{n_max}.
    pub fn new(n_max: usize) -> Self {
        let mut ell: Vec<BigInt> = vec![BigInt::from(3)];
        for n in 0..n_max {
            let mut next = BigInt::one();
            for j in 0..=n {
                let term = bco(&ell[n - j], j as i64 + 2);
                if j % 2 == 0 {
                    next += term;
                } else {
                    next -= term;
                }
            }
            ell.push(next);
        }
        HamiltonTable { ell }
    }

    pub fn n_max(&self) -> usize {
        self.ell.len() - 1
    }

    /// ℓ_n for −3 <= n <= n_max.
    pub fn ell(&self, n: i64) -> BigInt {
        match n {
            -3 | -2 => BigInt::zero(),
            -1 => BigInt::from(2),
            _ => self.ell[usize::try_from(n).expect("ell index below -3")].clone(),
        }
    }

    pub fn ells(&self) -> &[BigInt] {
        &self.ell
    }

    /// H_n = ℓ_{n−1} − 1 for n >= 1 (H_0 = 1 under the extended seeds).
    pub fn hamilton(&self, n: usize) -> BigInt {
        self.ell(n as i64 - 1) - 1
    }
}

/// First alternate recursion: ℓ_{n+1} as
/// Σ_{j=1}^{n+1} (−1)^{j+1}·bco(ℓ_{n−j+1}+1, j+1), valid for n >= 1.
pub fn ell_alt_a(n: usize, table: &HamiltonTable) -> BigInt {
    assert!(n >= 1, "alternate recursion (a) needs n >= 1");
    let mut total = BigInt::zero();
    for j in 1..=n as i64 + 1 {
        let term = bco(&(table.ell(n as i64 - j + 1) + 1), j + 1);
        if j % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Alternate recursion (b): ℓ_n = 3 + Σ_{j=0}^{n−1} (−1)^j·bco(ℓ_{n−j−1}−1, j+2).
pub fn ell_alt_b(n: usize, table: &HamiltonTable) -> BigInt {
    let mut total = BigInt::from(3);
    for j in 0..n as i64 {
        let term = bco(&(table.ell(n as i64 - j - 1) - 1), j + 2);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Alternate recursion (c) on the Hamilton numbers themselves:
/// H_{n+1} = 2 + Σ_{j=0}^{n−1} (−1)^j·bco(H_{n−j}, j+2).
pub fn hamilton_alt_c(n: usize, table: &HamiltonTable) -> BigInt {
    let mut total = BigInt::from(2);
    for j in 0..n as i64 {
        let term = bco(&table.hamilton((n as i64 - j) as usize), j + 2);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Outcome of the growth-bound checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub n_max: usize,
    pub checks_run: usize,
    /// First violated inequality, if any.
    pub violation: Option<String>,
}

impl BoundsReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Verify the growth bounds on the table, in exact integer arithmetic:
/// the squaring bracket ℓ_n²/3 <= ℓ_{n+1} <= ℓ_n²/2, the nonincreasing
/// binomial terms inside the base recursion, and the double-exponential
/// envelope 3·2^{2^{n−1}} <= ℓ_{n+1} (n >= 1), ℓ_{n+1} <= 2·2^{2^n} (n >= 0).
pub fn check_bounds(table: &HamiltonTable) -> BoundsReport {
    assert!(table.n_max() >= 2, "check_bounds needs a table with n_max >= 2");
    let mut checks_run = 0;
    let mut violation = None;

    'outer: {
        for n in 0..table.n_max() as i64 {
            let sq = table.ell(n) * table.ell(n);
            checks_run += 2;
            if 3 * table.ell(n + 1) < sq {
                violation = Some(format!("squaring bracket lower: 3·ℓ_{} < ℓ_{}²", n + 1, n));
                break 'outer;
            }
            if 2 * table.ell(n + 1) > sq {
                violation = Some(format!("squaring bracket upper: 2·ℓ_{} > ℓ_{}²", n + 1, n));
                break 'outer;
            }
        }
        for n in 0..=table.n_max() as i64 {
            let mut prev: Option<BigInt> = None;
            for j in 0..=n {
                let term = bco(&table.ell(n - j), j + 2);
                checks_run += 1;
                if let Some(p) = prev {
                    if term > p {
                        violation =
                            Some(format!("recursion terms increase at n={n}, j={j}"));
                        break 'outer;
                    }
                }
                prev = Some(term);
            }
        }
        for n in 1..table.n_max() as i64 {
            checks_run += 1;
            let lower = BigInt::from(3) << (1u64 << (n - 1));
            if table.ell(n + 1) < lower {
                violation = Some(format!("envelope lower fails at n={n}"));
                break 'outer;
            }
        }
        for n in 0..table.n_max() as i64 {
            checks_run += 1;
            let upper = BigInt::from(2) << (1u64 << n);
            if table.ell(n + 1) > upper {
                violation = Some(format!("envelope upper fails at n={n}"));
                break 'outer;
            }
        }
    }

    BoundsReport {
        n_max: table.n_max(),
        checks_run,
        violation,
    }
}

// ---------------------------------------------------------------------------
// The constant ρ
// ---------------------------------------------------------------------------

/// An upper bound stated as an exact rational num/den.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatBound {
    num: BigUint,
    den: BigUint,
}

impl RatBound {
    /// True iff the bound is strictly below mant·10^exp10.
    pub fn is_below(&self, mant: u64, exp10: i64) -> bool {
        let mant = BigUint::from(mant);
        if exp10 >= 0 {
            self.num.clone() < mant * BigUint::from(10u32).pow(exp10 as u32) * &self.den
        } else {
            &self.num * BigUint::from(10u32).pow((-exp10) as u32) < mant * &self.den
        }
    }

    /// Rounded-up decimal rendering.
    pub fn to_decimal(&self, sig_digits: usize) -> String {
        decimal_upper(&self.num, &self.den, sig_digits)
    }
}

/// Default guard digits carried beyond the requested precision.
pub const DEFAULT_GUARD_DIGITS: usize = 20;

/// ρ_n = (log2(ℓ_{n+1}) − 1)/2^{n+1} as a certified decimal, together with
/// the error bounds on ρ_n − ρ.
///
/// `error_bound` is the stated 1/(2^{n−3}·ln2·√ℓ_n) form; `tight_bound` is
/// the sharper 1/(2^{n−3}·ln2·√ℓ_{n+1}) variant from the underlying
/// derivation. Both are exact rational upper bounds (floor square roots and
/// a lower bound on ln 2 only ever enlarge them).
#[derive(Debug, Clone)]
pub struct RhoEstimate {
    pub n: usize,
    pub digits: usize,
    decimal: String,
    /// ρ_n ∈ [v_lo/2^scale, (v_lo+2)/2^scale]
    v_lo: BigUint,
    scale: u32,
    pub error_bound: RatBound,
    pub tight_bound: RatBound,
}

impl RhoEstimate {
    /// "0.d…d" with exactly `digits` certified decimals (truncated).
    pub fn decimal(&self) -> &str {
        &self.decimal
    }

    /// Certified strict comparison of the underlying intervals.
    pub fn certainly_above(&self, other: &RhoEstimate) -> bool {
        // self.lo > other.hi
        let lhs = BigInt::from(self.v_lo.clone()) << other.scale;
        let rhs = BigInt::from(&other.v_lo + 2u32) << self.scale;
        lhs > rhs
    }

    /// Certified check that self.hi − other.lo <= factor·bound.
    pub fn gap_at_most(&self, other: &RhoEstimate, bound: &RatBound, factor: u64) -> bool {
        let hi = BigInt::from(&self.v_lo + 2u32) << other.scale;
        let lo = BigInt::from(other.v_lo.clone()) << self.scale;
        let gap = hi - lo; // scaled by 2^{self.scale + other.scale}
        if gap <= BigInt::zero() {
            return true;
        }
        let lhs = gap * BigInt::from(bound.den.clone());
        let rhs = (BigInt::from(factor) * BigInt::from(bound.num.clone()))
            << (self.scale + other.scale);
        lhs <= rhs
    }
}

/// ρ_n to `digits` certified decimals with the default guard precision.
pub fn rho_estimate(n: usize, table: &HamiltonTable, digits: usize) -> Result<RhoEstimate> {
    rho_estimate_with_guard(n, table, digits, DEFAULT_GUARD_DIGITS)
}

/// ρ_n with an explicit guard-digit count. The requested decimals are
/// certified against the enclosing interval; if the interval straddles a
/// decimal boundary the guard precision was insufficient and an error names
/// the remedy.
pub fn rho_estimate_with_guard(
    n: usize,
    table: &HamiltonTable,
    digits: usize,
    guard_digits: usize,
) -> Result<RhoEstimate> {
    // enough fraction bits for digits+guard decimals: 10/3 > log2(10)
    let frac_bits = (((digits + guard_digits) * 10).div_ceil(3) + n + 8) as u32;
    rho_with_frac_bits(n, table, digits, frac_bits)
}

fn rho_with_frac_bits(
    n: usize,
    table: &HamiltonTable,
    digits: usize,
    frac_bits: u32,
) -> Result<RhoEstimate> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!(
            "the error bound is only stated for n >= 4, got n = {n}"
        )));
    }
    if digits < 1 {
        return Err(Error::InvalidArgument("need at least one digit".into()));
    }
    if table.n_max() < n + 1 {
        return Err(Error::InvalidArgument(format!(
            "table holds ℓ up to {}, need ℓ_{}",
            table.n_max(),
            n + 1
        )));
    }
    let ell_next = table
        .ell(n as i64 + 1)
        .to_biguint()
        .expect("ell values are positive");
    let (k, frac) = log2_bounds(&ell_next, frac_bits);
    // rho = (k - 1 + frac)/2^{n+1} at scale frac_bits + n + 1
    let scale = frac_bits + n as u32 + 1;
    let v_lo = (BigUint::from(k - 1) << frac_bits) + frac;
    debug_assert!(v_lo.bits() <= u64::from(scale), "rho must be below 1");

    let pow10 = BigUint::from(10u32).pow(digits as u32);
    let d_lo = (&v_lo * &pow10) >> scale;
    let d_hi = ((&v_lo + 2u32) * &pow10) >> scale;
    if d_lo != d_hi {
        return Err(Error::PrecisionNotAchievable(format!(
            "digit {digits} of rho_{n} is not certified at {frac_bits} working bits; increase the guard digits"
        )));
    }
    let decimal = format!("0.{:0>width$}", d_lo.to_string(), width = digits);

    let prec = 128u32;
    let (ln2_lo, _) = ln2_bounds(prec);
    let make_bound = |ell: &BigInt| -> RatBound {
        let sqrt_floor = ell.to_biguint().expect("positive").sqrt();
        RatBound {
            num: BigUint::one() << prec,
            den: (&ln2_lo * sqrt_floor) << (n - 3),
        }
    };
    Ok(RhoEstimate {
        n,
        digits,
        decimal,
        v_lo,
        scale,
        error_bound: make_bound(&table.ell(n as i64)),
        tight_bound: make_bound(&table.ell(n as i64 + 1)),
    })
}

// ---------------------------------------------------------------------------
// The block array
// ---------------------------------------------------------------------------

/// One row: `width` entries covering columns `indentation` onward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LucasRow {
    pub indentation: usize,
    pub entries: Vec<BigInt>,
}

/// The block array: row 0 is 1 followed by zeros; a row whose first
/// entry λ exceeds 1 is followed by a row at the same indentation starting
/// with λ−1; a row starting with 1 closes its block and the next row is
/// indented one further. Every entry other than a block-internal first entry
/// is the running sum λ_{i+1,j} = Σ_{t<=j} λ_{i,t}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LucasArray {
    pub width: usize,
    pub rows: Vec<LucasRow>,
    /// Block leaders a_0, a_1, …, one per block.
    pub leaders: Vec<BigInt>,
    /// s_0 = 0, s_{n+1} = s_n + a_n.
    pub partial_sums: Vec<BigInt>,
}

impl LucasArray {
    /// H_n = s_n + 1.
    pub fn hamilton_number(&self, n: usize) -> BigInt {
        &self.partial_sums[n] + 1
    }

    pub fn num_blocks(&self) -> usize {
        self.leaders.len()
    }
}

/// Generate `num_blocks` complete blocks, each row carrying `width` entries.
///
/// The running-sum rule reaches one column further each time the
/// indentation steps, so the rows are built on an internal grid
/// `num_blocks − 1 + width` columns wide and truncated on output.
pub fn lucas_array(num_blocks: usize, width: usize) -> Result<LucasArray> {
    if num_blocks < 1 || width < 2 {
        return Err(Error::InvalidArgument(
            "lucas_array needs num_blocks >= 1 and width >= 2".into(),
        ));
    }
    let full = num_blocks - 1 + width;
    let mut row0 = vec![BigInt::zero(); full];
    row0[0] = BigInt::one();
    let mut rows = vec![LucasRow {
        indentation: 0,
        entries: row0,
    }];
    let mut leaders = vec![BigInt::one()];

    loop {
        let prev = rows.last().unwrap();
        let first = prev.entries[0].clone();
        let new_block = first == BigInt::one();
        if new_block && leaders.len() == num_blocks {
            break;
        }
        let indentation = prev.indentation + usize::from(new_block);
        // running sums of the previous row, indexed by absolute column
        let mut entries = Vec::with_capacity(full - indentation);
        let mut running = BigInt::zero();
        for col in 0..full {
            if col >= prev.indentation && col < prev.indentation + prev.entries.len() {
                running += &prev.entries[col - prev.indentation];
            }
            if col >= indentation {
                entries.push(running.clone());
            }
        }
        if !new_block {
            entries[0] = first - 1;
        } else {
            leaders.push(entries[0].clone());
        }
        rows.push(LucasRow { indentation, entries });
    }

    for row in &mut rows {
        row.entries.truncate(width);
    }
    let mut partial_sums = vec![BigInt::zero()];
    for leader in &leaders {
        partial_sums.push(partial_sums.last().unwrap() + leader);
    }
    Ok(LucasArray {
        width,
        rows,
        leaders,
        partial_sums,
    })
}
