//! Stable generator counts a_d, b_d of the lex approximations of an ideal.
//!
//! Given the coefficient vector of an ideal's extended Hilbert function, the
//! number of minimal generators of the universal lex approximation in degree
//! at most d satisfies a closed recursion:
//!
//!   b_{d+1} = c_{−(d+1)} + Σ_{j=1}^{d} (−1)^{d−j}·bcp(b_j + 1, d−j+2)
//!
//! with b_1 = c_{−1}. The counts grow doubly exponentially, so everything is
//! exact big-integer arithmetic and the caller supplies a hard degree cap.
//!
//! A second, independent route computes a_{d+1} as a difference of two
//! stable polynomials evaluated at N = 0; the two routes are cross-checked
//! in the tests and the acceptance suite.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::bigcomb::bcp;
use crate::error::{Error, Result};
use crate::lcbc::{stable_polynomial, CoeffVector};

/// Exact sequences a_1..a_d and b_0..b_d for one ideal shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxSequence {
    d_max: usize,
    a: Vec<BigInt>,
    b: Vec<BigInt>,
    source: CoeffVector,
}

impl ApproxSequence {
    pub fn d_max(&self) -> usize {
        self.d_max
    }

    /// a_d for 1 <= d <= d_max.
    pub fn a(&self, d: usize) -> &BigInt {
        &self.a[d - 1]
    }

    /// b_d for 0 <= d <= d_max.
    pub fn b(&self, d: usize) -> &BigInt {
        &self.b[d]
    }

    /// a_1..a_{d_max}.
    pub fn a_seq(&self) -> &[BigInt] {
        &self.a
    }

    /// b_0..b_{d_max}.
    pub fn b_seq(&self) -> &[BigInt] {
        &self.b
    }

    pub fn source(&self) -> &CoeffVector {
        &self.source
    }
}

/// Run the recursion up to degree `d_max`.
///
/// Fails with [`Error::ImproperCoefficients`] if `c` has support at s >= 0,
/// and with [`Error::NegativeGeneratorCount`] if any a_d comes out negative;
/// the latter means `c` is not the extended Hilbert function of any proper
/// homogeneous ideal.
pub fn b_sequence(c: &CoeffVector, d_max: usize) -> Result<ApproxSequence> {
    if d_max < 1 {
        return Err(Error::InvalidArgument("b_sequence needs d_max >= 1".into()));
    }
    c.check_proper()?;
    let mut b: Vec<BigInt> = vec![BigInt::zero(), c.coeff(-1)];
    for d in 1..d_max {
        let mut next = c.coeff(-(d as i64 + 1));
        for (j, b_j) in b.iter().enumerate().skip(1) {
            let term = bcp(&(b_j + 1), (d - j + 2) as u32);
            if (d - j) % 2 == 0 {
                next += term;
            } else {
                next -= term;
            }
        }
        b.push(next);
    }
    let a: Vec<BigInt> = (1..=d_max).map(|d| &b[d] - &b[d - 1]).collect();
    if let Some(d) = a.iter().position(|x| x.is_negative()) {
        return Err(Error::NegativeGeneratorCount {
            degree: d + 1,
            count: a[d].clone(),
        });
    }
    Ok(ApproxSequence {
        d_max,
        a,
        b,
        source: c.clone(),
    })
}

/// a_{d+1} by the difference of two stable polynomials at N = 0:
/// the degree-(d+1) polynomial of `c` minus the degree-(d+1) polynomial of
/// the universal lex ideal with cumulative counts `b_prefix` (= b_1..b_d).
///
/// This route never runs the closed recursion, so it can certify it.
pub fn a_by_difference(c: &CoeffVector, b_prefix: &[BigInt], d: usize) -> Result<BigInt> {
    if b_prefix.len() != d {
        return Err(Error::InvalidArgument(format!(
            "b_prefix must hold b_1..b_{d}, got {} entries",
            b_prefix.len()
        )));
    }
    c.check_proper()?;
    let target = stable_polynomial(c, d as i64 + 1).eval_at(0);
    Ok(target - ulex_poly_at_zero(b_prefix, d))
}

/// The Hilbert-function polynomial of the universal lex ideal with
/// cumulative counts b_1..b_d, at degree t = d+1, evaluated at N = 0.
/// Telescoping sum in the bcp basis, one pair of terms per degree.
fn ulex_poly_at_zero(b: &[BigInt], d: usize) -> BigInt {
    let d = d as i64;
    let mut total = BigInt::zero();
    let mut b_prev = BigInt::zero();
    for (idx, b_j) in b.iter().enumerate() {
        let j = idx as i64 + 1;
        let r = (d - j + 2) as u32;
        total += bcp(&(BigInt::from(d + 1 - j) - &b_prev), r)
            - bcp(&(BigInt::from(d + 1 - j) - b_j), r);
        b_prev = b_j.clone();
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lcbc::ci_numerator;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn bigs(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| big(x)).collect()
    }

    #[test]
    fn two_quadrics_worked_values() {
        let c = ci_numerator(&[2, 2]).unwrap();
        let seq = b_sequence(&c, 4).unwrap();
        assert_eq!(seq.b_seq(), &bigs(&[0, 0, 2, 3, 4]));
        assert_eq!(seq.a_seq(), &bigs(&[0, 2, 1, 1]));
    }

    #[test]
    fn one_variable_is_already_lex() {
        let c = ci_numerator(&[1]).unwrap();
        let seq = b_sequence(&c, 5).unwrap();
        assert_eq!(seq.b_seq(), &bigs(&[0, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn ci_2_3_sequence() {
        let c = ci_numerator(&[2, 3]).unwrap();
        let seq = b_sequence(&c, 4).unwrap();
        assert_eq!(seq.b_seq(), &bigs(&[0, 0, 1, 2, 3]));
    }

    #[test]
    fn improper_input_is_rejected() {
        let c = CoeffVector::from_pairs(vec![(-2, big(2)), (0, big(1))]);
        assert!(matches!(
            b_sequence(&c, 3),
            Err(Error::ImproperCoefficients { shift: 0, .. })
        ));
    }

    #[test]
    fn negative_count_is_rejected() {
        // not realizable: one generator in degree 2 claimed to span everything
        let c = CoeffVector::from_pairs(vec![(-1, big(-1))]);
        assert!(matches!(
            b_sequence(&c, 2),
            Err(Error::NegativeGeneratorCount { degree: 1, .. })
        ));
    }

    #[test]
    fn difference_route_examples() {
        let c22 = ci_numerator(&[2, 2]).unwrap();
        assert_eq!(a_by_difference(&c22, &bigs(&[0, 2]), 2).unwrap(), big(1));
        assert_eq!(
            a_by_difference(&c22, &bigs(&[0, 2, 3, 4, 6, 12]), 6).unwrap(),
            big(36)
        );
        let c1 = ci_numerator(&[1]).unwrap();
        assert_eq!(a_by_difference(&c1, &bigs(&[1]), 1).unwrap(), big(0));
    }

    #[test]
    fn both_routes_agree() {
        let vectors = vec![
            ci_numerator(&[2, 2]).unwrap(),
            ci_numerator(&[2, 3]).unwrap(),
            ci_numerator(&[1]).unwrap(),
            ci_numerator(&[3, 3, 4]).unwrap(),
            CoeffVector::from_pairs(vec![(-2, big(2)), (-3, big(-1))]),
        ];
        for c in vectors {
            let seq = b_sequence(&c, 11).unwrap();
            for d in 1..=10usize {
                let via_diff = a_by_difference(&c, &seq.b_seq()[1..=d], d).unwrap();
                assert_eq!(&via_diff, seq.a(d + 1), "c={c:?} d={d}");
            }
        }
    }

    #[test]
    fn constancy_in_n() {
        use crate::lcbc::evaluate_big;
        use crate::unilex::hf_from_b;
        let vectors = vec![ci_numerator(&[2, 2]).unwrap(), ci_numerator(&[2, 3]).unwrap()];
        for c in vectors {
            let seq = b_sequence(&c, 9).unwrap();
            for d in 1..=8usize {
                let prefix = &seq.b_seq()[1..=d];
                let a_next = seq.a(d + 1);
                let b_d = seq.b(d);
                for offset in 1..=6 {
                    let n = b_d + big(offset);
                    let lhs_d = evaluate_big(&c, &n, d as i64).unwrap();
                    let rhs_d = hf_from_b(prefix, &n, d as i64).unwrap();
                    assert_eq!(lhs_d, rhs_d, "agree in degree d, N={n}");
                    let lhs = evaluate_big(&c, &n, d as i64 + 1).unwrap();
                    let rhs = hf_from_b(prefix, &n, d as i64 + 1).unwrap();
                    assert_eq!(lhs - rhs, a_next.clone(), "constant gap at d+1, N={n}");
                }
            }
        }
    }

    /// The recursion with bcp(b_j+1, d−j) in place of d−j+2, a nearby
    /// mis-transcription. It fails to reproduce the worked values, which
    /// pins the correct exponent.
    fn b_sequence_low_index_variant(c: &CoeffVector, d_max: usize) -> Vec<BigInt> {
        let mut b: Vec<BigInt> = vec![BigInt::zero(), c.coeff(-1)];
        for d in 1..d_max {
            let mut next = c.coeff(-(d as i64 + 1));
            for (j, b_j) in b.iter().enumerate().skip(1) {
                let term = bcp(&(b_j + 1), (d - j) as u32);
                if (d - j) % 2 == 0 {
                    next += term;
                } else {
                    next -= term;
                }
            }
            b.push(next);
        }
        b
    }

    #[test]
    fn low_index_variant_regression() {
        let c = ci_numerator(&[2, 2]).unwrap();
        let wrong = b_sequence_low_index_variant(&c, 4);
        assert_ne!(wrong[4], big(4), "d−j variant must not reproduce b_4");
        let corrected = b_sequence(&c, 4).unwrap();
        assert_eq!(corrected.b(4), &big(4));
    }
}
