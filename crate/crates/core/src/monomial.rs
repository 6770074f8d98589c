//! Monomials under lex order, monomial ideals, and their exact Hilbert data.
//!
//! Variables are ordered x_1 > x_2 > …; a monomial is an exponent vector
//! indexed by variable position with trailing zeros normalized away, so the
//! same monomial can live in any ambient ring. The ambient variable count is
//! always an operation parameter, never part of the monomial.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bigcomb::monomial_count;
use crate::error::{Error, Result};
use crate::lcbc::CoeffVector;

/// A monomial as a normalized exponent vector (no trailing zeros).
/// Position 1 is x_1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Monomial { exponents }
    }

    /// The unit monomial 1.
    pub fn one() -> Self {
        Monomial { exponents: Vec::new() }
    }

    /// x_pos^k (1-based position).
    pub fn var_pow(pos: usize, k: u32) -> Self {
        assert!(pos >= 1, "variable positions are 1-based");
        if k == 0 {
            return Monomial::one();
        }
        let mut exponents = vec![0; pos];
        exponents[pos - 1] = k;
        Monomial { exponents }
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.exponents.iter().map(|&e| i64::from(e)).sum()
    }

    /// Exponent at 1-based position (0 beyond the stored support).
    pub fn exponent(&self, pos: usize) -> u32 {
        assert!(pos >= 1);
        self.exponents.get(pos - 1).copied().unwrap_or(0)
    }

    /// Largest variable position with nonzero exponent (0 for the unit).
    pub fn max_var(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Exponent vector padded with zeros to `n` positions.
    pub fn padded_exponents(&self, n: usize) -> Vec<u32> {
        let mut v = self.exponents.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.len() <= other.exponents.len()
            && self
                .exponents
                .iter()
                .zip(&other.exponents)
                .all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let n = self.exponents.len().max(other.exponents.len());
        Monomial::new(
            (1..=n)
                .map(|p| self.exponent(p).max(other.exponent(p)))
                .collect(),
        )
    }

    /// Multiply by x_pos^k.
    pub fn mul_var(&self, pos: usize, k: u32) -> Monomial {
        assert!(pos >= 1);
        let mut exponents = self.exponents.clone();
        if exponents.len() < pos {
            exponents.resize(pos, 0);
        }
        exponents[pos - 1] += k;
        Monomial::new(exponents)
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Pure lex comparison: at the first position where the exponents differ,
/// the larger exponent wins. Core comparisons happen within a fixed degree;
/// across degrees callers wanting the graded refinement should use
/// [`graded_lex_cmp`].
pub fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    let n = a.exponents.len().max(b.exponents.len());
    for p in 1..=n {
        match a.exponent(p).cmp(&b.exponent(p)) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// Degree first, then lex. Used for canonical generator ordering.
pub fn graded_lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| lex_cmp(a, b))
}

/// A proper monomial ideal: minimal generators in a ring with `num_vars`
/// variables. Generators are kept sorted by degree, lex-descending within a
/// degree, so outputs are reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    num_vars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Build from explicit ambient size and generators; generators must fit
    /// in `num_vars` positions and the unit monomial is rejected.
    pub fn new(num_vars: usize, gens: Vec<Monomial>) -> Result<Self> {
        if num_vars < 1 {
            return Err(Error::InvalidArgument(
                "monomial ideal needs num_vars >= 1".into(),
            ));
        }
        for g in &gens {
            if g.is_one() {
                return Err(Error::InvalidArgument(
                    "the unit monomial cannot be a generator of a proper ideal".into(),
                ));
            }
            if g.max_var() > num_vars {
                return Err(Error::InvalidArgument(format!(
                    "generator {g} uses variable x{} beyond num_vars = {num_vars}",
                    g.max_var()
                )));
            }
        }
        let generators = minimal_generators(gens);
        Ok(MonomialIdeal { num_vars, generators })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn max_degree(&self) -> i64 {
        self.generators.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    /// Degree-t membership: divisible by some generator.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }
}

fn minimal_generators(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(graded_lex_cmp);
    gens.dedup();
    let mut minimal: Vec<Monomial> = Vec::new();
    for g in gens {
        if !minimal.iter().any(|m| m.divides(&g)) {
            minimal.push(g);
        }
    }
    // canonical order: degree ascending, lex-descending within a degree
    minimal.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| lex_cmp(b, a))
    });
    minimal
}

/// Drop every generator divisible by another; ambient size is the largest
/// variable position used (at least 1).
pub fn minimalize(gens: Vec<Monomial>) -> Result<MonomialIdeal> {
    let num_vars = gens.iter().map(|g| g.max_var()).max().unwrap_or(0).max(1);
    MonomialIdeal::new(num_vars, gens)
}

// ---------------------------------------------------------------------------
// Hilbert numerator
// ---------------------------------------------------------------------------

/// Generator-count threshold beyond which inclusion–exclusion (2^k subsets)
/// gives way to pivot splitting.
const INCLUSION_EXCLUSION_CUTOFF: usize = 20;

/// Numerator K(z) of the Hilbert series of the ideal over (1−z)^h, returned
/// as the coefficient vector with c_s = coefficient of z^{−s}.
///
/// For every N >= num_vars and t, the degree-t dimension of I·R^(N) is
/// Σ_s c_s·bco(N+t+s−1, N−1).
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> CoeffVector {
    let q = quotient_numerator(ideal.generators());
    // K = 1 - Q
    let mut k: BTreeMap<i64, BigInt> = BTreeMap::new();
    k.insert(0, BigInt::one());
    for (deg, coeff) in q {
        let entry = k.entry(deg).or_insert_with(BigInt::zero);
        *entry -= coeff;
        if entry.is_zero() {
            k.remove(&deg);
        }
    }
    CoeffVector::from_iter(k.into_iter().map(|(deg, coeff)| (-deg, coeff)))
}

/// Numerator Q(z) of the quotient R/I, as degree -> coefficient.
/// Q = 1 − K, and the pivot split Q_I = Q_{I+(x)} + z·Q_{I:x} recurses to
/// coprime base cases.
fn quotient_numerator(gens: &[Monomial]) -> BTreeMap<i64, BigInt> {
    if gens.iter().any(|g| g.is_one()) {
        return BTreeMap::new(); // improper: Q = 0
    }
    if gens.is_empty() {
        let mut q = BTreeMap::new();
        q.insert(0, BigInt::one());
        return q;
    }
    if gens.len() <= INCLUSION_EXCLUSION_CUTOFF {
        return quotient_by_inclusion_exclusion(gens);
    }
    if let Some(q) = coprime_product(gens) {
        return q;
    }
    // pivot on the variable hitting the most generators
    let max_var = gens.iter().map(|g| g.max_var()).max().unwrap();
    let pivot = (1..=max_var)
        .max_by_key(|&v| gens.iter().filter(|g| g.exponent(v) > 0).count())
        .unwrap();

    // I + (x_pivot): generators not involving the pivot, and the pivot is
    // coprime to them, so Q picks up a factor (1 - z).
    let without: Vec<Monomial> = gens
        .iter()
        .filter(|g| g.exponent(pivot) == 0)
        .cloned()
        .collect();
    let q_plus = poly_mul_one_minus_z(&quotient_numerator(&without));

    // I : x_pivot
    let colon_gens: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut e = g.exponents().to_vec();
            if e.len() >= pivot && e[pivot - 1] > 0 {
                e[pivot - 1] -= 1;
            }
            Monomial::new(e)
        })
        .collect();
    let colon = minimal_generators(colon_gens);
    let q_colon = quotient_numerator(&colon);

    let mut q = q_plus;
    for (deg, coeff) in q_colon {
        let entry = q.entry(deg + 1).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            q.remove(&(deg + 1));
        }
    }
    q
}

fn quotient_by_inclusion_exclusion(gens: &[Monomial]) -> BTreeMap<i64, BigInt> {
    let mut q: BTreeMap<i64, BigInt> = BTreeMap::new();
    q.insert(0, BigInt::one());
    // K(z) = Σ over nonempty subsets S of (−1)^{|S|+1} z^{deg lcm S}; Q = 1 − K
    for mask in 1u64..(1u64 << gens.len()) {
        let mut lcm = Monomial::one();
        for (i, g) in gens.iter().enumerate() {
            if mask >> i & 1 == 1 {
                lcm = lcm.lcm(g);
            }
        }
        let sign = if mask.count_ones() % 2 == 1 { -1 } else { 1 };
        let entry = q.entry(lcm.degree()).or_insert_with(BigInt::zero);
        *entry += sign;
        if entry.is_zero() {
            q.remove(&lcm.degree());
        }
    }
    q
}

/// If the generators have pairwise disjoint supports, Q = ∏ (1 − z^{deg g}).
fn coprime_product(gens: &[Monomial]) -> Option<BTreeMap<i64, BigInt>> {
    let mut seen: Vec<usize> = Vec::new();
    for g in gens {
        for p in 1..=g.max_var() {
            if g.exponent(p) > 0 {
                if seen.contains(&p) {
                    return None;
                }
                seen.push(p);
            }
        }
    }
    let mut q = BTreeMap::new();
    q.insert(0, BigInt::one());
    for g in gens {
        q = poly_mul_one_minus_z_pow(&q, g.degree());
    }
    Some(q)
}

fn poly_mul_one_minus_z(p: &BTreeMap<i64, BigInt>) -> BTreeMap<i64, BigInt> {
    poly_mul_one_minus_z_pow(p, 1)
}

fn poly_mul_one_minus_z_pow(p: &BTreeMap<i64, BigInt>, m: i64) -> BTreeMap<i64, BigInt> {
    let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
    for (deg, coeff) in p {
        let e = out.entry(*deg).or_insert_with(BigInt::zero);
        *e += coeff;
        if e.is_zero() {
            out.remove(deg);
        }
        let e = out.entry(deg + m).or_insert_with(BigInt::zero);
        *e -= coeff;
        if e.is_zero() {
            out.remove(&(deg + m));
        }
    }
    out
}

/// Dimension of the degree-t piece of I·R^(N), via the Hilbert numerator.
pub fn dim_degree(ideal: &MonomialIdeal, n: i64, t: i64) -> Result<BigInt> {
    if n < ideal.num_vars() as i64 {
        return Err(Error::InvalidArgument(format!(
            "dim_degree requires N >= {} (the ideal's variable count), got {n}",
            ideal.num_vars()
        )));
    }
    if t < 0 {
        return Err(Error::InvalidArgument(format!(
            "dim_degree requires t >= 0, got {t}"
        )));
    }
    let c = hilbert_numerator(ideal);
    crate::lcbc::evaluate(&c, n, t)
}

// ---------------------------------------------------------------------------
// Lex rank / unrank and degree-slice iteration
// ---------------------------------------------------------------------------

/// The (k+1)-th largest monomial of degree t in N variables under lex.
pub fn lex_unrank(n: i64, t: i64, k: &BigInt) -> Result<Monomial> {
    if n < 1 || t < 0 {
        return Err(Error::InvalidArgument(format!(
            "lex_unrank requires N >= 1 and t >= 0, got N={n}, t={t}"
        )));
    }
    let total = monomial_count(n, t);
    if k < &BigInt::zero() || k >= &total {
        return Err(Error::InvalidArgument(format!(
            "rank {k} out of range [0, {total}) for N={n}, t={t}"
        )));
    }
    let mut exponents = vec![0u32; n as usize];
    let mut rest = t;
    let mut k = k.clone();
    for (pos, exponent) in exponents.iter_mut().enumerate() {
        if pos as i64 == n - 1 {
            *exponent = rest as u32;
            break;
        }
        // exponents at this position run from `rest` down to 0
        for e in (0..=rest).rev() {
            let count = monomial_count(n - pos as i64 - 1, rest - e);
            if k < count {
                *exponent = e as u32;
                rest -= e;
                break;
            }
            k -= count;
        }
        if rest == 0 {
            break;
        }
    }
    Ok(Monomial::new(exponents))
}

/// Rank of a degree-t monomial among all degree-t monomials in N variables,
/// counted from the lex-largest (rank 0). Inverse of [`lex_unrank`].
pub fn lex_rank(n: i64, m: &Monomial) -> Result<BigInt> {
    let t = m.degree();
    if n < m.max_var() as i64 || n < 1 {
        return Err(Error::InvalidArgument(format!(
            "lex_rank: monomial {m} does not live in {n} variables"
        )));
    }
    let mut rank = BigInt::zero();
    let mut rest = t;
    for pos in 1..=n as usize {
        let e = i64::from(m.exponent(pos));
        // monomials with a larger exponent at this position come first
        for bigger in (e + 1..=rest).rev() {
            rank += monomial_count(n - pos as i64, rest - bigger);
        }
        rest -= e;
        if rest == 0 {
            break;
        }
    }
    Ok(rank)
}

/// Iterator over the degree-t monomials of N variables in lex-descending
/// order, starting at x_1^t. Constant work per step.
pub struct DegreeIter {
    exponents: Vec<u32>,
    started: bool,
    done: bool,
}

impl DegreeIter {
    pub fn new(n: i64, t: i64) -> Self {
        assert!(n >= 1 && t >= 0);
        let mut exponents = vec![0u32; n as usize];
        exponents[0] = t as u32;
        DegreeIter {
            exponents,
            started: false,
            done: false,
        }
    }
}

impl Iterator for DegreeIter {
    type Item = Monomial;

    fn next(&mut self) -> Option<Monomial> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(Monomial::new(self.exponents.clone()));
        }
        let n = self.exponents.len();
        // rightmost position before the last with a nonzero exponent
        let Some(j) = (0..n - 1).rev().find(|&j| self.exponents[j] > 0) else {
            self.done = true;
            return None;
        };
        self.exponents[j] -= 1;
        let moved: u32 = 1 + self.exponents[j + 1..].iter().sum::<u32>();
        for e in &mut self.exponents[j + 1..] {
            *e = 0;
        }
        self.exponents[j + 1] = moved;
        Some(Monomial::new(self.exponents.clone()))
    }
}

// ---------------------------------------------------------------------------
// Universal lex test
// ---------------------------------------------------------------------------

/// Whether the (minimal) generator set stays lexicographic in every ring with
/// up to `n_max` variables.
///
/// Fast path: if the generators are exactly the canonical construction for
/// their degree/count profile, the ideal is universal lex in every ring,
/// so the answer is true without enumeration. Otherwise each N up to `n_max` is checked degree by degree.
pub fn is_universal_lex(gens: &[Monomial], n_max: i64) -> bool {
    if gens.is_empty() {
        return true;
    }
    if matches_gamma_construction(gens) {
        return true;
    }
    let h = gens.iter().map(|g| g.max_var()).max().unwrap() as i64;
    let t_max = gens.iter().map(|g| g.degree()).max().unwrap();
    for n in h..=n_max {
        if !lex_closed_in_ring(gens, n, t_max) {
            return false;
        }
    }
    true
}

/// Degreewise upward-closure of the ideal's slices in a fixed ring.
pub(crate) fn lex_closed_in_ring(gens: &[Monomial], n: i64, t_max: i64) -> bool {
    for t in 1..=t_max {
        let mut seen_nonmember = false;
        for m in DegreeIter::new(n, t) {
            let member = gens.iter().any(|g| g.divides(&m));
            if member && seen_nonmember {
                return false;
            }
            if !member {
                seen_nonmember = true;
            }
        }
    }
    true
}

fn matches_gamma_construction(gens: &[Monomial]) -> bool {
    let mut sorted = gens.to_vec();
    sorted.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| lex_cmp(b, a)));
    let mut pairs: Vec<(i64, usize)> = Vec::new();
    for g in &sorted {
        match pairs.last_mut() {
            Some((d, count)) if *d == g.degree() => *count += 1,
            _ => pairs.push((g.degree(), 1)),
        }
    }
    let Ok(gamma) = crate::unilex::GammaSpec::new(pairs) else {
        return false;
    };
    crate::unilex::generators_from_gamma(&gamma) == sorted
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_cmp_examples() {
        // x1*x3 > x2^2 in the larger ring
        assert_eq!(lex_cmp(&m(&[1, 0, 1]), &m(&[0, 2])), Ordering::Greater);
        assert_eq!(lex_cmp(&m(&[2]), &m(&[2])), Ordering::Equal);
        // x2^3 < x1*x2^2
        assert_eq!(lex_cmp(&m(&[0, 3]), &m(&[1, 2])), Ordering::Less);
    }

    #[test]
    fn minimalize_examples() {
        let i = minimalize(vec![m(&[2]), m(&[2, 1])]).unwrap();
        assert_eq!(i.generators(), &[m(&[2])]);

        let i = minimalize(vec![m(&[2]), m(&[0, 2])]).unwrap();
        assert_eq!(i.generators(), &[m(&[2]), m(&[0, 2])]);

        let i = minimalize(vec![m(&[1, 1]), m(&[0, 2]), m(&[1, 2])]).unwrap();
        assert_eq!(i.generators(), &[m(&[1, 1]), m(&[0, 2])]);

        assert!(minimalize(vec![Monomial::one()]).is_err());
    }

    #[test]
    fn numerator_examples() {
        let two_quadrics = minimalize(vec![m(&[2]), m(&[0, 2])]).unwrap();
        let c = hilbert_numerator(&two_quadrics);
        assert_eq!(c.coeff(-2), BigInt::from(2));
        assert_eq!(c.coeff(-4), BigInt::from(-1));
        assert_eq!(c.support().len(), 2);

        let one_var = minimalize(vec![m(&[1])]).unwrap();
        let c = hilbert_numerator(&one_var);
        assert_eq!(c.coeff(-1), BigInt::one());
        assert_eq!(c.support().len(), 1);

        let i = minimalize(vec![m(&[2]), m(&[1, 1])]).unwrap();
        let c = hilbert_numerator(&i);
        assert_eq!(c.coeff(-2), BigInt::from(2));
        assert_eq!(c.coeff(-3), BigInt::from(-1));
    }

    #[test]
    fn dim_degree_examples() {
        let two_quadrics = minimalize(vec![m(&[2]), m(&[0, 2])]).unwrap();
        assert_eq!(dim_degree(&two_quadrics, 3, 4).unwrap(), BigInt::from(11));
        assert_eq!(dim_degree(&two_quadrics, 2, 2).unwrap(), BigInt::from(2));
        assert!(dim_degree(&two_quadrics, 1, 2).is_err());

        let one_var = minimalize(vec![m(&[1])]).unwrap();
        assert_eq!(dim_degree(&one_var, 4, 3).unwrap(), BigInt::from(10));
    }

    fn brute_count(gens: &[Monomial], n: i64, t: i64) -> u64 {
        DegreeIter::new(n, t)
            .filter(|mm| gens.iter().any(|g| g.divides(mm)))
            .count() as u64
    }

    #[test]
    fn dim_degree_matches_enumeration_randomized() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0001);
        for case in 0..200 {
            let h = rng.gen_range(1..=3usize);
            let n_gens = rng.gen_range(1..=4usize);
            let gens: Vec<Monomial> = (0..n_gens)
                .map(|_| {
                    loop {
                        let e: Vec<u32> = (0..h).map(|_| rng.gen_range(0..=4u32)).collect();
                        let mono = Monomial::new(e);
                        if !mono.is_one() && mono.degree() <= 4 {
                            return mono;
                        }
                    }
                })
                .collect();
            let ideal = MonomialIdeal::new(h, gens).unwrap();
            let c = hilbert_numerator(&ideal);
            for n in h as i64..=8 {
                for t in 0..=8 {
                    let via_numerator = crate::lcbc::evaluate(&c, n, t).unwrap();
                    let brute = brute_count(ideal.generators(), n, t);
                    assert_eq!(
                        via_numerator,
                        BigInt::from(brute),
                        "case {case}: ideal {:?} at N={n}, t={t}",
                        ideal.generators()
                    );
                }
            }
        }
    }

    #[test]
    fn numerator_pivot_path_matches_enumeration() {
        // 21 generators: every degree-2 monomial in 6 variables; forces the
        // pivot recursion past the inclusion-exclusion cutoff
        let gens: Vec<Monomial> = DegreeIter::new(6, 2).collect();
        assert_eq!(gens.len(), 21);
        let ideal = MonomialIdeal::new(6, gens).unwrap();
        let c = hilbert_numerator(&ideal);
        for n in 6..=8i64 {
            for t in 0..=6 {
                let via = crate::lcbc::evaluate(&c, n, t).unwrap();
                let brute = brute_count(ideal.generators(), n, t);
                assert_eq!(via, BigInt::from(brute), "N={n} t={t}");
            }
        }
    }

    #[test]
    fn macaulay_growth_matches_segment_enumeration() {
        // quotient-side growth: with the m lex-smallest degree-d monomials
        // as the quotient, the next degree keeps exactly growth(m, d) of
        // them outside the ideal of the top segment
        use crate::bigcomb::macaulay_growth;
        for n in 2..=5i64 {
            for d in 1..=3i64 {
                let slice: Vec<Monomial> = DegreeIter::new(n, d).collect();
                for m in 0..=slice.len() {
                    let top = &slice[..slice.len() - m];
                    let outside = DegreeIter::new(n, d + 1)
                        .filter(|mono| !top.iter().any(|g| g.divides(mono)))
                        .count();
                    assert_eq!(
                        macaulay_growth(&BigInt::from(m), d).unwrap(),
                        BigInt::from(outside),
                        "N={n} d={d} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn pure_power_numerator_matches_ci_expansion() {
        for degrees in [vec![2i64, 2], vec![2, 3], vec![1, 4, 2], vec![3, 3, 3]] {
            let gens: Vec<Monomial> = degrees
                .iter()
                .enumerate()
                .map(|(i, &d)| Monomial::var_pow(i + 1, d as u32))
                .collect();
            let ideal = minimalize(gens).unwrap();
            assert_eq!(
                hilbert_numerator(&ideal),
                crate::lcbc::ci_numerator(&degrees).unwrap(),
                "{degrees:?}"
            );
        }
    }

    #[test]
    fn monomial_count_matches_hilbert_function() {
        use crate::bigcomb::bco_int;
        for n in 1..=8 {
            for t in 0..=8 {
                assert_eq!(monomial_count(n, t), bco_int(n + t - 1, n - 1));
                assert_eq!(
                    monomial_count(n, t),
                    BigInt::from(DegreeIter::new(n, t).count())
                );
            }
        }
        assert_eq!(monomial_count(0, 0), BigInt::one());
        assert_eq!(monomial_count(0, 3), BigInt::zero());
    }

    #[test]
    fn unrank_examples() {
        assert_eq!(lex_unrank(3, 3, &BigInt::zero()).unwrap(), m(&[3]));
        assert_eq!(lex_unrank(3, 2, &BigInt::from(5)).unwrap(), m(&[0, 0, 2]));
        assert_eq!(lex_unrank(3, 2, &BigInt::from(3)).unwrap(), m(&[0, 2]));
        assert!(lex_unrank(3, 2, &BigInt::from(6)).is_err());
        assert!(lex_unrank(3, 2, &BigInt::from(-1)).is_err());
    }

    #[test]
    fn rank_unrank_inverse_full_ranges() {
        for n in 1..=5i64 {
            for t in 0..=6i64 {
                let total = monomial_count(n, t);
                let mut k = BigInt::zero();
                while k < total {
                    let mono = lex_unrank(n, t, &k).unwrap();
                    assert_eq!(lex_rank(n, &mono).unwrap(), k, "N={n} t={t}");
                    k += 1;
                }
            }
        }
    }

    #[test]
    fn degree_iter_is_lex_descending_and_complete() {
        for n in 1..=5i64 {
            for t in 0..=6i64 {
                let items: Vec<Monomial> = DegreeIter::new(n, t).collect();
                assert_eq!(BigInt::from(items.len()), monomial_count(n, t));
                for w in items.windows(2) {
                    assert_eq!(lex_cmp(&w[0], &w[1]), Ordering::Greater);
                }
                for (k, mono) in items.iter().enumerate() {
                    assert_eq!(
                        lex_unrank(n, t, &BigInt::from(k)).unwrap(),
                        mono.clone()
                    );
                }
            }
        }
    }

    #[test]
    fn universal_lex_examples() {
        assert!(is_universal_lex(&[m(&[2]), m(&[1, 1])], 6));
        assert!(!is_universal_lex(&[m(&[2]), m(&[1, 1]), m(&[0, 2])], 3));
        assert!(is_universal_lex(&[m(&[1])], 9));
        // x2^3 alone is not even lex in its own ring
        assert!(!is_universal_lex(&[m(&[0, 3])], 4));
    }

    #[test]
    fn universal_lex_fast_path_agrees_with_enumeration() {
        let cases: Vec<Vec<Monomial>> = vec![
            vec![m(&[2]), m(&[1, 1])],
            vec![m(&[2]), m(&[1, 1]), m(&[1, 0, 2])],
            vec![m(&[1])],
        ];
        for gens in cases {
            assert!(matches_gamma_construction(&gens), "{gens:?}");
            let h = gens.iter().map(|g| g.max_var()).max().unwrap() as i64;
            let t_max = gens.iter().map(|g| g.degree()).max().unwrap();
            for n in h..=h + 4 {
                assert!(lex_closed_in_ring(&gens, n, t_max), "{gens:?} N={n}");
            }
        }
    }
}
