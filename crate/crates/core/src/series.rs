//! Exact Laurent polynomials and rational Hilbert series `h(t) / (1 - t)^d`.
//!
//! Coefficients are [`BigRational`] throughout: several of the formulas that
//! feed into this module (the Newcomb recurrence divides by a part `b_i`)
//! pass through non-integral intermediates, and integrality is checked by
//! the caller at the end.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::choose;
use crate::{Error, Result};

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn rat_uint(v: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `C(d, j)` as a rational.
fn choose_rat(d: u64, j: u64) -> BigRational {
    rat_uint(choose(d, j))
}

/// A finitely supported map `exponent -> coefficient` with no stored zeros.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, BigRational>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigRational::one())
    }

    pub fn monomial(exponent: i64, coefficient: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, coefficient);
        p
    }

    /// Dense constructor: `coefficients[k]` multiplies `t^{start + k}`.
    pub fn from_coefficients<I>(start: i64, coefficients: I) -> Self
    where
        I: IntoIterator<Item = BigRational>,
    {
        let mut p = Self::zero();
        for (k, c) in coefficients.into_iter().enumerate() {
            p.add_term(start + k as i64, c);
        }
        p
    }

    /// Dense constructor from small integers, starting at `t^0`.
    pub fn from_integers(coefficients: &[i64]) -> Self {
        Self::from_coefficients(0, coefficients.iter().map(|&c| rat(c)))
    }

    pub fn add_term(&mut self, exponent: i64, coefficient: BigRational) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exponent).or_insert_with(BigRational::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn coefficient(&self, exponent: i64) -> BigRational {
        self.coeffs.get(&exponent).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn lowest(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Value at `t = 1`, i.e. the sum of coefficients.
    pub fn eval_one(&self) -> BigRational {
        self.coeffs.values().fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// Evaluates at a nonzero rational (or any rational when no negative
    /// exponents are present).
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&e, c) in &self.coeffs {
            let p = if e >= 0 {
                num_traits::pow(x.clone(), e as usize)
            } else {
                num_traits::pow(x.recip(), (-e) as usize)
            };
            acc += c * p;
        }
        acc
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * factor)).collect(),
        }
    }

    /// Multiplies by `t^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// Exact quotient by `(1 - t)`, or `None` when `(1 - t)` does not divide.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if !self.eval_one().is_zero() {
            return None;
        }
        let (lo, hi) = match (self.lowest(), self.degree()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Some(Self::zero()),
        };
        // h = (1 - t) q  <=>  q_k = h_k + q_{k-1}
        let mut q = Self::zero();
        let mut running = BigRational::zero();
        for e in lo..hi {
            running += self.coefficient(e);
            q.add_term(e, running.clone());
        }
        Some(q)
    }

    /// Coefficients of `t^from ..= t^to`, zeros included.
    pub fn dense(&self, from: i64, to: i64) -> Vec<BigRational> {
        (from..=to).map(|e| self.coefficient(e)).collect()
    }

    /// The coefficients `h_0 ..= h_deg` as integers, provided the support is
    /// nonnegative and every coefficient is integral.
    pub fn to_integer_vec(&self) -> Option<Vec<BigInt>> {
        if self.lowest().is_some_and(|lo| lo < 0) {
            return None;
        }
        let deg = self.degree().unwrap_or(0);
        self.dense(0, deg)
            .into_iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Renders with a variable name other than `t`.
    pub fn display_in<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, var }
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        PolyDisplay { poly: self, var: "t" }.fmt(f)
    }
}

struct PolyDisplay<'a> {
    poly: &'a LaurentPolynomial,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.poly.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            match e {
                1 => f.write_str(self.var)?,
                _ => write!(f, "{}^{}", self.var, e)?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.scale(&rat(-1))
    }
}

/// A sequence `(a_l)` that vanishes below [`Sequence::start`].
pub trait Sequence {
    /// The index `sigma` with `a_l = 0` for every `l < sigma`.
    fn start(&self) -> i64;
    /// The term `a_l`; callers only ask for `l >= start()`.
    fn term(&self, l: i64) -> BigRational;
}

/// A [`Sequence`] backed by a closure.
pub struct FnSequence<F> {
    start: i64,
    f: F,
}

impl<F> FnSequence<F>
where
    F: Fn(i64) -> BigRational,
{
    pub fn new(start: i64, f: F) -> Self {
        FnSequence { start, f }
    }
}

impl<F> Sequence for FnSequence<F>
where
    F: Fn(i64) -> BigRational,
{
    fn start(&self) -> i64 {
        self.start
    }

    fn term(&self, l: i64) -> BigRational {
        if l < self.start {
            BigRational::zero()
        } else {
            (self.f)(l)
        }
    }
}

/// `h(t) / (1 - t)^d`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct RationalSeries {
    numerator: LaurentPolynomial,
    pole_order: u32,
}

impl RationalSeries {
    /// Canonical form: `(1 - t)` factors are cancelled until either the pole
    /// disappears or the numerator no longer vanishes at `t = 1`.
    pub fn new(numerator: LaurentPolynomial, pole_order: u32) -> Self {
        Self::new_raw(numerator, pole_order).canonical()
    }

    /// Keeps the given pole order even when it is not minimal.
    pub fn new_raw(numerator: LaurentPolynomial, pole_order: u32) -> Self {
        RationalSeries { numerator, pole_order }
    }

    /// `1 / (1 - t)^d`.
    pub fn model(pole_order: u32) -> Self {
        Self::new_raw(LaurentPolynomial::one(), pole_order)
    }

    pub fn canonical(mut self) -> Self {
        while self.pole_order > 0 && !self.numerator.is_zero() {
            match self.numerator.div_one_minus_t() {
                Some(q) => {
                    self.numerator = q;
                    self.pole_order -= 1;
                }
                None => break,
            }
        }
        if self.numerator.is_zero() {
            self.pole_order = 0;
        }
        self
    }

    pub fn is_canonical(&self) -> bool {
        self.pole_order == 0 || !self.numerator.eval_one().is_zero()
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.numerator
    }

    pub fn pole_order(&self) -> u32 {
        self.pole_order
    }

    /// Multiplicity `e_0 = h(1)`.
    pub fn multiplicity(&self) -> BigRational {
        self.numerator.eval_one()
    }

    /// Power-series coefficient `a_l`.
    pub fn coefficient(&self, l: i64) -> BigRational {
        let d = u64::from(self.pole_order);
        if d == 0 {
            return self.numerator.coefficient(l);
        }
        // 1 / (1 - t)^d = sum_m C(m + d - 1, d - 1) t^m
        let mut acc = BigRational::zero();
        for (k, h) in self.numerator.terms() {
            if k > l {
                break;
            }
            acc += h * choose_rat((l - k) as u64 + d - 1, d - 1);
        }
        acc
    }

    /// `a_sigma, ..., a_upto` where `sigma` is [`Sequence::start`].
    pub fn expand(&self, upto: i64) -> Vec<BigRational> {
        (self.start()..=upto).map(|l| self.coefficient(l)).collect()
    }

    /// The Hilbert polynomial `Phi` with `Phi(l) = a_l` for every
    /// `l >= deg h - d + 1`.
    pub fn hilbert_polynomial(&self) -> Result<HilbertPolynomial> {
        if self.pole_order == 0 {
            return Err(Error::Domain(
                "pole order 0: the sequence is eventually zero and has the zero Hilbert polynomial"
                    .into(),
            ));
        }
        if self.numerator.eval_one().is_zero() {
            return Err(Error::Domain("numerator vanishes at t = 1".into()));
        }
        let d = i64::from(self.pole_order);
        let deg = self.numerator.degree().unwrap_or(0);
        let from = deg - d + 1;

        // Forward differences of d consecutive exact values.
        let mut diffs: Vec<BigRational> = (0..d).map(|k| self.coefficient(from + k)).collect();
        let mut leading = Vec::with_capacity(diffs.len());
        while !diffs.is_empty() {
            leading.push(diffs[0].clone());
            diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        }

        // Phi(l) = sum_k Delta^k a(from) * C(l - from, k)
        let mut phi = LaurentPolynomial::zero();
        let mut falling = LaurentPolynomial::one();
        let mut factorial = BigRational::one();
        for (k, delta) in leading.iter().enumerate() {
            if k > 0 {
                let root = LaurentPolynomial::from_coefficients(0, [rat(-(from + k as i64 - 1)), rat(1)]);
                falling = &falling * &root;
                factorial *= rat(k as i64);
            }
            phi = &phi + &falling.scale(&(delta / &factorial));
        }
        Ok(HilbertPolynomial { polynomial: phi, exact_from: from })
    }
}

impl Sequence for RationalSeries {
    fn start(&self) -> i64 {
        self.numerator.lowest().unwrap_or(0)
    }

    fn term(&self, l: i64) -> BigRational {
        self.coefficient(l)
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / (1 - t)^{}", self.numerator, self.pole_order)
    }
}

/// A polynomial in `l` agreeing with a Hilbert function from `exact_from` on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    pub polynomial: LaurentPolynomial,
    pub exact_from: i64,
}

impl HilbertPolynomial {
    pub fn eval(&self, l: i64) -> BigRational {
        self.polynomial.eval(&rat(l))
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.polynomial
            .degree()
            .map(|d| self.polynomial.coefficient(d))
            .unwrap_or_else(BigRational::zero)
    }
}

/// Recovers `h` from the first terms of `h(t) / (1 - t)^d`:
/// `h_k = sum_{j=0}^{k - sigma} (-1)^j C(d, j) a_{k-j}` for `sigma <= k <= r`.
///
/// Garbage in, garbage out: if the series does not actually have that shape
/// with `deg h <= r`, the result simply fails to re-expand to `seq`.
pub fn h_from_sequence(seq: &impl Sequence, d: u32, r: i64) -> Result<LaurentPolynomial> {
    let sigma = seq.start();
    if r < sigma {
        return Err(Error::Domain(alloc::format!(
            "degree bound {r} is below the start index {sigma}"
        )));
    }
    let d = u64::from(d);
    let terms: Vec<BigRational> = (sigma..=r).map(|l| seq.term(l)).collect();
    let mut h = LaurentPolynomial::zero();
    for k in sigma..=r {
        let mut acc = BigRational::zero();
        for j in 0..=(k - sigma).min(d as i64) {
            let term = choose_rat(d, j as u64) * &terms[(k - j - sigma) as usize];
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        h.add_term(k, acc);
    }
    Ok(h)
}

/// Euler's polynomial: `sum_{l>=0} (l+1)^n t^l = A_n(t) / (1-t)^{n+1}`.
pub fn euler_polynomial(n: u32) -> LaurentPolynomial {
    let seq = FnSequence::new(0, |l| rat(l + 1).pow(n as i32));
    let r = i64::from(n.saturating_sub(1));
    h_from_sequence(&seq, n + 1, r).expect("r >= 0 = start")
}

fn div_ceil(a: i64, b: i64) -> i64 {
    let q = a.div_euclid(b);
    if a.rem_euclid(b) == 0 {
        q
    } else {
        q + 1
    }
}

/// The `n`-th Veronese subseries `sum_l a_{nl} t^l`, which keeps the pole
/// order of `series`.
pub fn veronese(series: &RationalSeries, n: u32) -> Result<RationalSeries> {
    if n == 0 {
        return Err(Error::Domain("Veronese degree must be positive".into()));
    }
    if n == 1 {
        return Ok(series.clone());
    }
    let step = i64::from(n);
    let d = series.pole_order();
    let deg = series.numerator().degree().unwrap_or(0);
    let start = div_ceil(series.start(), step);
    let sub = FnSequence::new(start, |l| series.coefficient(step * l));
    // deg h^<n> <= d - 1 + ceil(max(0, deg h - d + 1) / n) < d + max(deg h, 0)
    let r = i64::from(d) + deg.max(0);
    let h = h_from_sequence(&sub, d, r.max(start))?;
    Ok(RationalSeries::new(h, d))
}

/// Normalized Veronese numerators of the model series `1 / (1 - t)^{d+1}`
/// next to their limit `t A_d(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VeroneseProfile {
    /// Coefficients of `d! h^<n>(t) / n^d`, indices `0 ..= d`.
    pub profile: Vec<BigRational>,
    /// Coefficients of `t A_d(t)`, indices `0 ..= d`.
    pub target: Vec<BigRational>,
}

impl VeroneseProfile {
    /// `max_k |profile_k - target_k|`.
    pub fn linf_distance(&self) -> BigRational {
        self.profile
            .iter()
            .zip(&self.target)
            .map(|(p, t)| (p - t).abs())
            .max()
            .unwrap_or_else(BigRational::zero)
    }
}

pub fn veronese_limit_profile(d: u32, n: u32) -> Result<VeroneseProfile> {
    if d == 0 || n == 0 {
        return Err(Error::Domain("d and n must be positive".into()));
    }
    let model = RationalSeries::model(d + 1);
    let h = veronese(&model, n)?;
    // h(1) = 1 for the model series.
    let mut d_factorial = BigRational::one();
    for k in 1..=i64::from(d) {
        d_factorial *= rat(k);
    }
    let norm = d_factorial / rat(i64::from(n)).pow(d as i32);
    let hi = i64::from(d);
    let profile = h.numerator().scale(&norm).dense(0, hi);
    let target = euler_polynomial(d).shift(1).dense(0, hi);
    Ok(VeroneseProfile { profile, target })
}

/// Numerator of the Segre (coefficientwise) product `a (x) b` of two power
/// series, via
/// `h_m = sum_{i,j} h_i(a) h_j(b) C(b_a + j - i, m - i) C(b_b + i - j, m - j)`
/// with `b_a = d_a - 1`, `b_b = d_b - 1`. The result has pole order
/// `d_a + d_b - 1`.
///
/// Both numerators must be polynomials in `t` (no negative exponents) of
/// degree below their pole order, so every binomial above has a nonnegative
/// upper index.
pub fn segre_product(a: &RationalSeries, b: &RationalSeries) -> Result<RationalSeries> {
    if a.pole_order() == 0 || b.pole_order() == 0 {
        return Err(Error::Domain("Segre product needs pole orders >= 1".into()));
    }
    let ba = i64::from(a.pole_order()) - 1;
    let bb = i64::from(b.pole_order()) - 1;
    for (s, bound) in [(a, ba), (b, bb)] {
        if s.numerator().lowest().is_some_and(|lo| lo < 0)
            || s.numerator().degree().is_some_and(|hi| hi > bound)
        {
            return Err(Error::Domain(alloc::format!(
                "numerator {} must be supported in 0..={bound}",
                s.numerator()
            )));
        }
    }
    let deg_a = a.numerator().degree().unwrap_or(0);
    let deg_b = b.numerator().degree().unwrap_or(0);
    let top = (ba + deg_b).min(bb + deg_a);
    let binom = |x: i64, k: i64| -> BigRational {
        if k < 0 || x < k {
            BigRational::zero()
        } else {
            choose_rat(x as u64, k as u64)
        }
    };
    let mut h = LaurentPolynomial::zero();
    for m in 0..=top {
        let mut acc = BigRational::zero();
        for (i, hi) in a.numerator().terms() {
            for (j, hj) in b.numerator().terms() {
                let w = binom(ba + j - i, m - i) * binom(bb + i - j, m - j);
                if !w.is_zero() {
                    acc += hi * hj * w;
                }
            }
        }
        h.add_term(m, acc);
    }
    Ok(RationalSeries::new_raw(h, a.pole_order() + b.pole_order() - 1))
}

/// Human-readable rendering of a coefficient list (`"1, 4, 1"`).
pub fn join_coefficients(values: &[BigRational]) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    fn poly(v: &[i64]) -> LaurentPolynomial {
        LaurentPolynomial::from_integers(v)
    }

    #[test]
    fn printer() {
        assert_eq!(poly(&[1, 4, 1]).to_string(), "1 + 4*t + t^2");
        assert_eq!(poly(&[0, -1, 0, 3]).to_string(), "-t + 3*t^3");
        assert_eq!(poly(&[2, -1]).to_string(), "2 - t");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
        let mut p = LaurentPolynomial::monomial(-1, r(1, 2));
        p.add_term(0, rat(-3));
        assert_eq!(p.to_string(), "1/2*t^-1 - 3");
        assert_eq!(poly(&[1, 3, 3, 1]).display_in("l").to_string(), "1 + 3*l + 3*l^2 + l^3");
    }

    #[test]
    fn no_zero_coefficients_are_stored() {
        let mut p = poly(&[1, 2]);
        p.add_term(1, rat(-2));
        assert_eq!(p, poly(&[1]));
        assert_eq!(p.degree(), Some(0));
        let q = &poly(&[1, 1]) - &poly(&[1, 1]);
        assert!(q.is_zero());
        assert_eq!(q.degree(), None);
    }

    #[test]
    fn h_from_sequence_examples() {
        let p2 = FnSequence::new(0, |l| rat_uint(choose((l + 2) as u64, 2)));
        assert_eq!(h_from_sequence(&p2, 3, 3).unwrap(), poly(&[1]));
        let sq = FnSequence::new(0, |l| rat((l + 1) * (l + 1)));
        assert_eq!(h_from_sequence(&sq, 3, 2).unwrap(), poly(&[1, 1]));
        let cube = FnSequence::new(0, |l| rat((l + 1).pow(3)));
        assert_eq!(h_from_sequence(&cube, 4, 3).unwrap(), poly(&[1, 4, 1]));
        assert!(matches!(h_from_sequence(&cube, 4, -1), Err(Error::Domain(_))));
    }

    #[test]
    fn h_from_sequence_with_negative_start() {
        // t^-1 / (1 - t) = t^-1 + 1 + t + ...
        let seq = FnSequence::new(-1, |_| rat(1));
        let expected = LaurentPolynomial::monomial(-1, rat(1));
        assert_eq!(h_from_sequence(&seq, 1, 2).unwrap(), expected);
    }

    #[test]
    fn expand_examples() {
        assert_eq!(RationalSeries::model(1).expand(3), ints(&[1, 1, 1, 1]));
        let s = RationalSeries::new(poly(&[1, 4, 1]), 4);
        assert_eq!(s.expand(2), ints(&[1, 8, 27]));
        let s = RationalSeries::new(poly(&[1, 4]), 2);
        assert_eq!(s.expand(2), ints(&[1, 6, 11]));
    }

    #[test]
    fn canonicalization() {
        // (1 - t^2) / (1 - t)^3 = (1 + t) / (1 - t)^2
        let s = RationalSeries::new(poly(&[1, 0, -1]), 3);
        assert_eq!(s.numerator(), &poly(&[1, 1]));
        assert_eq!(s.pole_order(), 2);
        assert!(s.is_canonical());
        let raw = RationalSeries::new_raw(poly(&[1, -1]), 2);
        assert!(!raw.is_canonical());
        assert_eq!(raw.clone().canonical(), RationalSeries::model(1));
        assert_eq!(raw.expand(3), RationalSeries::model(1).expand(3));
        // (1 - t)^2 / (1 - t) = 1 - t with pole order 0 left over
        let s = RationalSeries::new(poly(&[1, -2, 1]), 1);
        assert_eq!(s.pole_order(), 0);
        assert_eq!(s.numerator(), &poly(&[1, -1]));
    }

    #[test]
    fn hilbert_polynomial_examples() {
        let hp = RationalSeries::model(3).hilbert_polynomial().unwrap();
        assert_eq!(hp.exact_from, -2);
        // (l + 1)(l + 2) / 2 = 1 + 3/2 l + 1/2 l^2
        let expected = LaurentPolynomial::from_coefficients(0, [r(1, 1), r(3, 2), r(1, 2)]);
        assert_eq!(hp.polynomial, expected);

        let hp = RationalSeries::new(poly(&[1, 4, 1]), 4).hilbert_polynomial().unwrap();
        assert_eq!(hp.polynomial, poly(&[1, 3, 3, 1]));

        let s = RationalSeries::new(poly(&[1, 1]), 1);
        let hp = s.hilbert_polynomial().unwrap();
        assert_eq!(hp.polynomial, poly(&[2]));
        assert_eq!(hp.exact_from, 1);
        assert_eq!(s.coefficient(0), rat(1));
        assert_ne!(hp.eval(0), s.coefficient(0));

        let constant = RationalSeries::new(poly(&[1, 1]), 0);
        assert!(matches!(constant.hilbert_polynomial(), Err(Error::Domain(_))));
    }

    #[test]
    fn euler_polynomial_examples() {
        assert_eq!(euler_polynomial(0), poly(&[1]));
        assert_eq!(euler_polynomial(1), poly(&[1]));
        assert_eq!(euler_polynomial(2), poly(&[1, 1]));
        assert_eq!(euler_polynomial(3), poly(&[1, 4, 1]));
        assert_eq!(euler_polynomial(4), poly(&[1, 11, 11, 1]));
    }

    #[test]
    fn euler_polynomial_symmetric_and_sums_to_factorial() {
        let mut fact = 1i64;
        for n in 1..=10u32 {
            fact *= i64::from(n);
            let a = euler_polynomial(n);
            let coeffs = a.dense(0, i64::from(n) - 1);
            let mut rev = coeffs.clone();
            rev.reverse();
            assert_eq!(coeffs, rev, "A_{n} not palindromic");
            assert_eq!(a.eval_one(), rat(fact));
        }
    }

    #[test]
    fn veronese_examples() {
        let v = veronese(&RationalSeries::model(2), 3).unwrap();
        assert_eq!(v, RationalSeries::new(poly(&[1, 2]), 2));
        let v = veronese(&RationalSeries::model(3), 2).unwrap();
        assert_eq!(v, RationalSeries::new(poly(&[1, 3]), 3));
        let f = RationalSeries::new(poly(&[1, 7, 4]), 5);
        assert_eq!(veronese(&f, 1).unwrap(), f);
        assert!(veronese(&f, 0).is_err());
    }

    #[test]
    fn veronese_matches_subsampled_expansion() {
        let f = RationalSeries::new(poly(&[2, 0, 5, 1]), 3);
        for n in 2..=5u32 {
            let v = veronese(&f, n).unwrap();
            assert_eq!(v.pole_order(), 3);
            for l in 0..12 {
                assert_eq!(v.coefficient(l), f.coefficient(l * i64::from(n)));
            }
        }
    }

    #[test]
    fn veronese_composes() {
        for d in 1..=4 {
            let f = RationalSeries::model(d);
            for a in 1..=4u32 {
                for b in 1..=4u32 {
                    let ab = veronese(&veronese(&f, a).unwrap(), b).unwrap();
                    assert_eq!(ab, veronese(&f, a * b).unwrap());
                }
            }
        }
    }

    #[test]
    fn veronese_profile_examples() {
        let p = veronese_limit_profile(1, 10).unwrap();
        assert_eq!(p.profile, [r(1, 10), r(9, 10)]);
        assert_eq!(p.target, ints(&[0, 1]));
        let p = veronese_limit_profile(1, 1000).unwrap();
        assert_eq!(p.profile, [r(1, 1000), r(999, 1000)]);
        let p = veronese_limit_profile(2, 1 << 20).unwrap();
        assert_eq!(p.target, ints(&[0, 1, 1]));
        assert!(p.linf_distance() < r(1, 100_000));
    }

    #[test]
    fn veronese_profile_converges_monotonically() {
        for d in 1..=3 {
            let dist: Vec<_> = [4u32, 8, 16, 32, 64, 128]
                .iter()
                .map(|&n| veronese_limit_profile(d, n).unwrap().linf_distance())
                .collect();
            for w in dist.windows(2) {
                assert!(w[1] < w[0], "d={d}: {dist:?}");
            }
        }
    }

    /// Oracle: multiply the expansions coefficientwise and recover `h`.
    fn segre_by_expansion(a: &RationalSeries, b: &RationalSeries) -> RationalSeries {
        let d = a.pole_order() + b.pole_order() - 1;
        let seq = FnSequence::new(0, |l| a.coefficient(l) * b.coefficient(l));
        let bound = 2 * i64::from(d) + 2;
        RationalSeries::new_raw(h_from_sequence(&seq, d, bound).unwrap(), d)
    }

    #[test]
    fn segre_product_matches_expansion_oracle() {
        let cases = [
            (poly(&[1]), 2, poly(&[1]), 2),
            (poly(&[1, 1]), 3, poly(&[1]), 2),
            (poly(&[1, 4, 1]), 4, poly(&[1, 2]), 3),
            (poly(&[3, 0, 2]), 3, poly(&[1, 5]), 4),
        ];
        for (ha, da, hb, db) in cases {
            let a = RationalSeries::new_raw(ha, da);
            let b = RationalSeries::new_raw(hb, db);
            let got = segre_product(&a, &b).unwrap();
            let want = segre_by_expansion(&a, &b);
            assert_eq!(got.numerator(), want.numerator(), "{a} x {b}");
        }
        let bad = RationalSeries::new_raw(poly(&[0, 0, 1]), 1);
        assert!(segre_product(&bad, &RationalSeries::model(2)).is_err());
    }

    fn small_series() -> impl Strategy<Value = RationalSeries> {
        (proptest::collection::vec(-5i64..=5, 1..=4), 1u32..=4).prop_filter_map(
            "canonical with nonzero h(1)",
            |(coeffs, d)| {
                let s = RationalSeries::new(poly(&coeffs), d);
                (s.pole_order() > 0 && !s.numerator().is_zero()).then_some(s)
            },
        )
    }

    proptest! {
        #[test]
        fn h_from_expansion_round_trips(s in small_series()) {
            let r = s.numerator().degree().unwrap();
            let d = i64::from(s.pole_order());
            let expansion = s.expand(r + d);
            let start = s.start();
            let seq = FnSequence::new(start, |l| expansion[(l - start) as usize].clone());
            prop_assert_eq!(&h_from_sequence(&seq, s.pole_order(), r).unwrap(), s.numerator());
        }

        #[test]
        fn hilbert_polynomial_is_exact_past_threshold(s in small_series()) {
            let hp = s.hilbert_polynomial().unwrap();
            let mut fact = BigRational::one();
            for k in 1..i64::from(s.pole_order()) {
                fact *= rat(k);
            }
            prop_assert_eq!(hp.leading_coefficient(), s.multiplicity() / fact);
            for l in hp.exact_from..hp.exact_from + 8 {
                prop_assert_eq!(hp.eval(l), s.coefficient(l));
            }
        }
    }
}
