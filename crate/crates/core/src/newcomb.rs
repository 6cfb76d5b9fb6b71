//! Simon Newcomb numbers `A([b], k)`: the h-vector of the Segre ring
//! `R_[b]`, computed five independent ways.
//!
//! | algorithm | idea |
//! |---|---|
//! | [`Algorithm::BruteForce`] | count descents over every arrangement |
//! | [`Algorithm::DillonRoselle`] | alternating sum over the Hilbert function |
//! | [`Algorithm::Recurrence`] | peel one unit off the smallest part |
//! | [`Algorithm::Positive`] | sum of products of binomials, no signs |
//! | [`Algorithm::Convolution`] | fold Segre products of `1/(1-t)^{b_i+1}` |
//!
//! All five must agree on every spec; the tests and the acceptance suite
//! hold them to that.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{choose, multinomial, newcomb_bruteforce, Spec};
use crate::series::{segre_product, LaurentPolynomial, RationalSeries};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algorithm {
    BruteForce,
    DillonRoselle,
    Recurrence,
    Positive,
    Convolution,
    /// Family formulas; not a general algorithm, never part of [`Algorithm::ALL`].
    ClosedForm,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::BruteForce,
        Algorithm::DillonRoselle,
        Algorithm::Recurrence,
        Algorithm::Positive,
        Algorithm::Convolution,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::BruteForce => "brute",
            Algorithm::DillonRoselle => "dillon-roselle",
            Algorithm::Recurrence => "recurrence",
            Algorithm::Positive => "positive",
            Algorithm::Convolution => "convolution",
            Algorithm::ClosedForm => "closed-form",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Domain(alloc::format!("unknown algorithm {s:?}")))
    }
}

/// `(A([b], 0), ..., A([b], r))` tagged with the algorithm that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewcombVector {
    pub spec: Spec,
    pub values: Vec<BigUint>,
    pub algorithm: Algorithm,
}

/// A violated structural identity, as reported by [`NewcombVector::check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantViolation(pub String);

impl fmt::Display for InvariantViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl NewcombVector {
    pub fn new(spec: &Spec, values: Vec<BigUint>, algorithm: Algorithm) -> Self {
        NewcombVector { spec: spec.clone(), values, algorithm }
    }

    /// Degree of the h-polynomial.
    pub fn degree(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    pub fn as_polynomial(&self) -> LaurentPolynomial {
        LaurentPolynomial::from_coefficients(
            0,
            self.values
                .iter()
                .map(|v| BigRational::from_integer(BigInt::from(v.clone()))),
        )
    }

    /// The Hilbert series `A_[b](t) / (1 - t)^{N+1}`.
    pub fn hilbert_series(&self) -> RationalSeries {
        RationalSeries::new_raw(self.as_polynomial(), self.spec.dim() as u32)
    }

    pub fn is_palindromic(&self) -> bool {
        self.values.iter().eq(self.values.iter().rev())
    }

    /// Checks every identity the h-vector of `R_[b]` must satisfy.
    pub fn check(&self) -> core::result::Result<(), InvariantViolation> {
        let fail = |msg: String| Err(InvariantViolation(alloc::format!("{}: {msg}", self.spec)));
        let spec = &self.spec;
        if self.values.first() != Some(&BigUint::one()) {
            return fail("A([b],0) != 1".into());
        }
        if self.values.last().is_some_and(|v| v.is_zero()) {
            return fail("trailing zero".into());
        }
        if self.degree() as u64 != regularity(spec) {
            return fail(alloc::format!("degree {} != N - b* = {}", self.degree(), regularity(spec)));
        }
        if self.values.last() != Some(&top_coefficient(spec)) {
            return fail("top coefficient != prod C(b*, b_i)".into());
        }
        if self.values.iter().sum::<BigUint>() != multinomial(spec) {
            return fail("coefficient sum != multinomial".into());
        }
        if self.degree() >= 1 && self.values[1] != spec.codim() {
            return fail("h_1 != prod(b_i + 1) - N - 1".into());
        }
        Ok(())
    }
}

impl fmt::Display for NewcombVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// `r_[b] = N - b*`.
pub fn regularity(spec: &Spec) -> u64 {
    spec.total() - u64::from(spec.max_part())
}

/// `A([b], r) = prod_i C(b*, b_i)`.
pub fn top_coefficient(spec: &Spec) -> BigUint {
    let top = u64::from(spec.max_part());
    spec.parts().iter().map(|&b| choose(top, u64::from(b))).product()
}

/// Arithmetically Gorenstein iff the top coefficient is 1 iff all parts agree.
pub fn is_gorenstein(spec: &Spec) -> bool {
    top_coefficient(spec).is_one()
}

fn to_naturals(values: Vec<BigInt>, what: &str) -> Vec<BigUint> {
    values
        .into_iter()
        .map(|v| {
            v.to_biguint()
                .unwrap_or_else(|| panic!("{what}: negative Newcomb number {v}"))
        })
        .collect()
}

fn trim(values: &mut Vec<BigUint>) {
    while values.len() > 1 && values.last().is_some_and(|v| v.is_zero()) {
        values.pop();
    }
}

pub fn newcomb_bruteforce_vector(spec: &Spec, budget: u64) -> Result<NewcombVector> {
    Ok(NewcombVector::new(spec, newcomb_bruteforce(spec, budget)?, Algorithm::BruteForce))
}

/// `A([b], k) = sum_{j=0}^k (-1)^j C(d, j) prod_i C(b_i + k - j, b_i)`.
pub fn newcomb_dillon_roselle(spec: &Spec) -> NewcombVector {
    let d = spec.dim();
    let r = regularity(spec);
    let hilbert = |l: u64| -> BigInt {
        spec.parts()
            .iter()
            .map(|&b| choose(u64::from(b) + l, u64::from(b)))
            .product::<BigUint>()
            .into()
    };
    let values: Vec<BigInt> = (0..=r)
        .map(|k| {
            (0..=k).fold(BigInt::zero(), |acc, j| {
                let term = BigInt::from(choose(d, j)) * hilbert(k - j);
                if j.is_even() {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect();
    let mut values = to_naturals(values, "dillon-roselle");
    trim(&mut values);
    NewcombVector::new(spec, values, Algorithm::DillonRoselle)
}

/// Memo for [`newcomb_recurrence_cached`], keyed by descending-sorted parts.
#[derive(Debug, Default, Clone)]
pub struct RecurrenceCache {
    memo: BTreeMap<Vec<u32>, Vec<BigRational>>,
}

impl RecurrenceCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    fn vector(&mut self, parts: &[u32]) -> Vec<BigRational> {
        if parts.len() <= 1 {
            return vec![BigRational::one()];
        }
        if let Some(v) = self.memo.get(parts) {
            return v.clone();
        }
        // parts are sorted descending; peel off the smallest.
        let last = parts.len() - 1;
        let bi = parts[last];
        let mut smaller = parts.to_vec();
        smaller[last] -= 1;
        if smaller[last] == 0 {
            smaller.pop();
        }
        let prev = self.vector(&smaller);
        let d: i64 = parts.iter().map(|&b| i64::from(b)).sum::<i64>() + 1;
        let bi_r = BigRational::from_integer(BigInt::from(bi));
        let at = |k: i64| -> BigRational {
            if k < 0 {
                BigRational::zero()
            } else {
                prev.get(k as usize).cloned().unwrap_or_else(BigRational::zero)
            }
        };
        let r = prev.len() as i64 - 1;
        let mut out = Vec::with_capacity(prev.len() + 1);
        for k in 0..=r + 1 {
            let w_prev = BigInt::from(d - 1 - i64::from(bi) - (k - 1));
            let w_same = BigInt::from(i64::from(bi) + k);
            let num = BigRational::from_integer(w_prev) * at(k - 1)
                + BigRational::from_integer(w_same) * at(k);
            out.push(num / &bi_r);
        }
        while out.len() > 1 && out.last().is_some_and(|v| v.is_zero()) {
            out.pop();
        }
        self.memo.insert(parts.to_vec(), out.clone());
        out
    }
}

/// Recursion on the Hilbert series:
/// `h_k([b]) = ((d - 1 - b_i - (k - 1)) h_{k-1}([b - e_i]) + (b_i + k) h_k([b - e_i])) / b_i`.
pub fn newcomb_recurrence(spec: &Spec) -> NewcombVector {
    newcomb_recurrence_cached(spec, &mut RecurrenceCache::new())
}

/// [`newcomb_recurrence`] sharing a memo across calls.
pub fn newcomb_recurrence_cached(spec: &Spec, cache: &mut RecurrenceCache) -> NewcombVector {
    let sorted = spec.sorted_desc();
    let values = cache
        .vector(sorted.parts())
        .into_iter()
        .map(|v| {
            assert!(v.is_integer(), "recurrence produced non-integral entry {v} for {spec}");
            v.to_integer()
        })
        .collect();
    NewcombVector::new(spec, to_naturals(values, "recurrence"), Algorithm::Recurrence)
}

/// The published, uncorrected recursion
/// `A'([b], k) = (N - b_n - k + 1) A'([b - e_n], k - 1) + (k + b_n) A'([b - e_n], k)`,
/// where `A'(., k)` denotes `A(., k - 1)`. It is wrong; it is kept so that
/// the tests can show it disagreeing with brute force.
pub fn newcomb_recurrence_uncorrected(spec: &Spec) -> Vec<BigInt> {
    fn go(parts: &[u32]) -> Vec<BigInt> {
        if parts.len() <= 1 {
            return vec![BigInt::one()];
        }
        let last = parts.len() - 1;
        let bn = i64::from(parts[last]);
        let total: i64 = parts.iter().map(|&b| i64::from(b)).sum();
        let mut smaller = parts.to_vec();
        smaller[last] -= 1;
        if smaller[last] == 0 {
            smaller.pop();
        }
        let prev = go(&smaller);
        // Shifted indexing: prev_shifted(k) = prev[k - 1].
        let at = |k: i64| -> BigInt {
            if k < 1 {
                BigInt::zero()
            } else {
                prev.get((k - 1) as usize).cloned().unwrap_or_else(BigInt::zero)
            }
        };
        let mut out: Vec<BigInt> = (1..=prev.len() as i64 + 1)
            .map(|k| BigInt::from(total - bn - k + 1) * at(k - 1) + BigInt::from(k + bn) * at(k))
            .collect();
        while out.len() > 1 && out.last().is_some_and(|v| v.is_zero()) {
            out.pop();
        }
        out
    }
    go(spec.parts())
}

/// The sign-free formula
/// `A([b], k) = sum_{(i_2..i_{n-1})} A_{i_2} A_{i_2,i_3} ... A_{i_{n-1},k}` with
/// `A_{i} = C(b_1, i) C(b_2, i)` and
/// `A_{i,j} = C(b_1 + ... + b_s - i, j - i) C(b_{s+1} + i, j)`,
/// each `i_s` ranging over `0 ..= min(r_s, i_{s+1})` where `r_s` is the
/// regularity of `[b_1, ..., b_s]`.
///
/// Evaluated as a dynamic program over `s`; every quantity is a natural
/// number.
pub fn newcomb_positive(spec: &Spec) -> NewcombVector {
    let parts: Vec<u64> = spec.parts().iter().map(|&b| u64::from(b)).collect();
    if parts.len() == 1 {
        return NewcombVector::new(spec, vec![BigUint::one()], Algorithm::Positive);
    }
    let prefix_reg = |s: usize| -> u64 {
        let head = &parts[..s];
        head.iter().sum::<u64>() - head.iter().copied().max().unwrap_or(0)
    };
    // weights[i] = sum over i_2..i_s = i of the partial products.
    let r2 = prefix_reg(2);
    let mut weights: Vec<BigUint> =
        (0..=r2).map(|i| choose(parts[0], i) * choose(parts[1], i)).collect();
    for s in 2..parts.len() {
        let prefix_sum: u64 = parts[..s].iter().sum();
        let next = parts[s];
        let r_next = prefix_reg(s + 1);
        let r_here = weights.len() as u64 - 1;
        weights = (0..=r_next)
            .map(|j| {
                (0..=r_here.min(j))
                    .map(|i| {
                        &weights[i as usize]
                            * choose(prefix_sum - i, j - i)
                            * choose(next + i, j)
                    })
                    .sum()
            })
            .collect();
    }
    trim(&mut weights);
    NewcombVector::new(spec, weights, Algorithm::Positive)
}

/// A single term `A([b], k)` of the positive formula; zero outside
/// `0 ..= N - b*`.
pub fn newcomb_positive_term(spec: &Spec, k: u64) -> BigUint {
    if k > regularity(spec) {
        return BigUint::zero();
    }
    newcomb_positive(spec).values.get(k as usize).cloned().unwrap_or_default()
}

/// Folds the Segre products of the single-factor series `1 / (1 - t)^{b_i + 1}`.
pub fn newcomb_convolution(spec: &Spec) -> NewcombVector {
    let mut parts = spec.parts().iter();
    let first = *parts.next().expect("spec is nonempty");
    let mut acc = RationalSeries::model(first + 1);
    for &b in parts {
        acc = segre_product(&acc, &RationalSeries::model(b + 1))
            .expect("Segre numerators stay below their pole order");
    }
    let ints = acc
        .numerator()
        .to_integer_vec()
        .unwrap_or_else(|| panic!("convolution produced non-integral h-vector for {spec}"));
    let mut values = to_naturals(ints, "convolution");
    trim(&mut values);
    NewcombVector::new(spec, values, Algorithm::Convolution)
}

/// Runs one algorithm. Only brute force can fail (budget refusal).
pub fn compute(spec: &Spec, algorithm: Algorithm, budget: u64) -> Result<NewcombVector> {
    Ok(match algorithm {
        Algorithm::BruteForce => newcomb_bruteforce_vector(spec, budget)?,
        Algorithm::DillonRoselle => newcomb_dillon_roselle(spec),
        Algorithm::Recurrence => newcomb_recurrence(spec),
        Algorithm::Positive => newcomb_positive(spec),
        Algorithm::Convolution => newcomb_convolution(spec),
        Algorithm::ClosedForm => {
            return Err(Error::Domain("closed forms exist only for families".into()))
        }
    })
}

/// Closed-form families with small regularity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `[1, 1, b]`, regularity 2.
    R2,
    /// `[1, 2, b]` with `b >= 2`, regularity 3.
    R3a,
    /// `[1, 1, 1, b]`, regularity 3.
    R3b,
}

impl Family {
    pub fn spec(self, b: u32) -> Result<Spec> {
        let min = match self {
            Family::R2 | Family::R3b => 1,
            Family::R3a => 2,
        };
        if b < min {
            return Err(Error::Domain(alloc::format!("{self:?} needs b >= {min}, got {b}")));
        }
        Spec::new(match self {
            Family::R2 => vec![1, 1, b],
            Family::R3a => vec![1, 2, b],
            Family::R3b => vec![1, 1, 1, b],
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "r2" => Ok(Family::R2),
            "r3a" => Ok(Family::R3a),
            "r3b" => Ok(Family::R3b),
            _ => Err(Error::Domain(alloc::format!("unknown family {s:?}"))),
        }
    }
}

/// Closed-form h-vector of a small-regularity family, tagged
/// [`Algorithm::ClosedForm`].
pub fn family_h_vector(family: Family, b: u32) -> Result<NewcombVector> {
    let spec = family.spec(b)?;
    let b = BigUint::from(b);
    let one = BigUint::one();
    let values = match family {
        Family::R2 => vec![one, &b * 3u32 + 1u32, &b * &b],
        Family::R3a => vec![
            one,
            &b * 5u32 + 2u32,
            (&b * &b * 7u32 + &b) / 2u32,
            &b * &b * (&b - 1u32) / 2u32,
        ],
        Family::R3b => vec![
            one,
            &b * 7u32 + 4u32,
            &b * &b * 6u32 + &b * 4u32 + 1u32,
            &b * &b * &b,
        ],
    };
    Ok(NewcombVector::new(&spec, values, Algorithm::ClosedForm))
}

/// Outcome of running several algorithms on one spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Agreement {
    pub vectors: Vec<NewcombVector>,
}

impl Agreement {
    pub fn agree(&self) -> bool {
        self.vectors.windows(2).all(|w| w[0].values == w[1].values)
    }
}

/// Runs every algorithm in `algorithms` and collects the vectors.
pub fn cross_check(spec: &Spec, algorithms: &[Algorithm], budget: u64) -> Result<Agreement> {
    let vectors = algorithms
        .iter()
        .map(|&a| compute(spec, a, budget))
        .collect::<Result<Vec<_>>>()?;
    Ok(Agreement { vectors })
}

/// Renders a vector of naturals like `1,7,4`.
pub fn join(values: &[BigUint]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::DEFAULT_BUDGET;
    use crate::series::euler_polynomial;
    use proptest::prelude::*;

    fn spec(parts: &[u32]) -> Spec {
        Spec::new(parts.to_vec()).unwrap()
    }

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn dillon_roselle_examples() {
        assert_eq!(newcomb_dillon_roselle(&spec(&[1, 1, 1])).values, big(&[1, 4, 1]));
        assert_eq!(newcomb_dillon_roselle(&spec(&[1, 2])).values, big(&[1, 2]));
        for b in 1..=20u64 {
            assert_eq!(
                newcomb_dillon_roselle(&spec(&[1, 1, b as u32])).values,
                big(&[1, 3 * b + 1, b * b])
            );
        }
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(newcomb_recurrence(&spec(&[1, 1])).values, big(&[1, 1]));
        assert_eq!(newcomb_recurrence(&spec(&[1, 1, 1])).values, big(&[1, 4, 1]));
        assert_eq!(newcomb_recurrence(&spec(&[1])).values, big(&[1]));
        assert_eq!(newcomb_recurrence(&spec(&[1, 1, 2])).values, big(&[1, 7, 4]));
    }

    #[test]
    fn recurrence_cache_is_reused() {
        let mut cache = RecurrenceCache::new();
        let a = newcomb_recurrence_cached(&spec(&[3, 2, 2]), &mut cache);
        let filled = cache.len();
        assert!(filled > 0);
        let b = newcomb_recurrence_cached(&spec(&[2, 3, 2]), &mut cache);
        assert_eq!(cache.len(), filled);
        assert_eq!(a.values, b.values);
        assert_eq!(a.values, newcomb_recurrence(&spec(&[2, 2, 3])).values);
    }

    #[test]
    fn positive_examples() {
        assert_eq!(newcomb_positive_term(&spec(&[1, 1, 2]), 1), BigUint::from(7u32));
        assert_eq!(newcomb_positive_term(&spec(&[1, 1]), 1), BigUint::one());
        for parts in [&[1u32, 1, 2][..], &[3, 1], &[2, 2, 2], &[5]] {
            assert_eq!(newcomb_positive_term(&spec(parts), 0), BigUint::one());
        }
        assert_eq!(newcomb_positive_term(&spec(&[1, 1, 2]), 3), BigUint::zero());
        // n = 2 collapses to C(b_1, k) C(b_2, k).
        let v = newcomb_positive(&spec(&[3, 4])).values;
        assert_eq!(v, (0..=3).map(|k| choose(3, k) * choose(4, k)).collect::<Vec<_>>());
    }

    #[test]
    fn convolution_examples() {
        assert_eq!(newcomb_convolution(&spec(&[1, 1])).values, big(&[1, 1]));
        assert_eq!(newcomb_convolution(&spec(&[1, 1, 1])).values, big(&[1, 4, 1]));
        assert_eq!(newcomb_convolution(&spec(&[7])).values, big(&[1]));
    }

    #[test]
    fn structural_corollaries() {
        assert_eq!(regularity(&spec(&[1, 1, 1])), 2);
        assert_eq!(regularity(&spec(&[1, 1, 2])), 2);
        assert_eq!(regularity(&spec(&[5])), 0);
        assert_eq!(top_coefficient(&spec(&[1, 1, 2])), BigUint::from(4u32));
        assert!(!is_gorenstein(&spec(&[1, 1, 2])));
        assert!(is_gorenstein(&spec(&[2, 2, 2])));
        assert_eq!(regularity(&spec(&[2, 2, 2])), 4);
        assert!(is_gorenstein(&spec(&[3])));
        assert_eq!(top_coefficient(&spec(&[3])), BigUint::one());
    }

    #[test]
    fn family_examples() {
        assert_eq!(family_h_vector(Family::R2, 2).unwrap().values, big(&[1, 7, 4]));
        assert_eq!(family_h_vector(Family::R3a, 2).unwrap().values, big(&[1, 12, 15, 2]));
        assert_eq!(family_h_vector(Family::R3b, 1).unwrap().values, big(&[1, 11, 11, 1]));
        assert!(family_h_vector(Family::R3a, 1).is_err());
        assert!(family_h_vector(Family::R2, 0).is_err());
    }

    #[test]
    fn eulerian_specialization() {
        for n in 1..=8usize {
            let s = Spec::new(vec![1; n]).unwrap();
            let v = newcomb_dillon_roselle(&s);
            let euler = euler_polynomial(n as u32).to_integer_vec().unwrap();
            let euler: Vec<BigUint> = euler.into_iter().map(|x| x.to_biguint().unwrap()).collect();
            assert_eq!(v.values, euler);
        }
    }

    #[test]
    fn uncorrected_recursion_is_wrong() {
        let s = spec(&[1, 1, 2]);
        let brute: Vec<BigInt> = newcomb_bruteforce(&s, DEFAULT_BUDGET)
            .unwrap()
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_ne!(newcomb_recurrence_uncorrected(&s), brute);
        let corrected: Vec<BigInt> =
            newcomb_recurrence(&s).values.into_iter().map(BigInt::from).collect();
        assert_eq!(corrected, brute);
    }

    #[test]
    fn invariant_check_rejects_tampering() {
        let s = spec(&[1, 1, 2]);
        let mut v = newcomb_dillon_roselle(&s);
        assert!(v.check().is_ok());
        v.values[1] += 1u32;
        assert!(v.check().is_err());
    }

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert!("bogus".parse::<Algorithm>().is_err());
    }

    fn small_spec() -> impl Strategy<Value = Spec> {
        proptest::collection::vec(1u32..=6, 1..=5).prop_map(|p| Spec::new(p).unwrap())
    }

    proptest! {
        #[test]
        fn dillon_roselle_satisfies_invariants(s in small_spec()) {
            let v = newcomb_dillon_roselle(&s);
            prop_assert!(v.check().is_ok(), "{:?}", v.check());
        }

        #[test]
        fn algebraic_algorithms_agree(s in small_spec()) {
            let dr = newcomb_dillon_roselle(&s).values;
            prop_assert_eq!(&newcomb_recurrence(&s).values, &dr);
            prop_assert_eq!(&newcomb_positive(&s).values, &dr);
            prop_assert_eq!(&newcomb_convolution(&s).values, &dr);
        }

        #[test]
        fn uniform_specs_are_palindromic(b in 1u32..=5, n in 1usize..=4) {
            let v = newcomb_dillon_roselle(&Spec::new(vec![b; n]).unwrap());
            prop_assert!(v.is_palindromic());
        }
    }
}
