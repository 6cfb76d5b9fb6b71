//! Big-integer combinatorial primitives and the brute-force descent oracle.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

/// Default cap on the number of permutations brute force will visit.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// A multiset specification `[b_1, ..., b_n]` of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Spec {
    parts: Vec<u32>,
}

impl Spec {
    /// Builds a spec, dropping zero parts. A part `b_i = 0` contributes the
    /// factor `C(l, 0) = 1` to the Hilbert function, so it changes nothing.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        parts.retain(|&b| b > 0);
        if parts.is_empty() {
            return Err(Error::EmptySpec);
        }
        Ok(Spec { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts `n`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Always false; kept for the `len`/`is_empty` pair.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `N = b_1 + ... + b_n`, the length of every permutation.
    pub fn total(&self) -> u64 {
        self.parts.iter().map(|&b| u64::from(b)).sum()
    }

    /// Krull dimension `d = N + 1` of the Segre ring.
    pub fn dim(&self) -> u64 {
        self.total() + 1
    }

    /// `b* = max b_i`.
    pub fn max_part(&self) -> u32 {
        self.parts.iter().copied().max().unwrap_or(0)
    }

    /// Number of lattice points `(b_1 + 1) ... (b_n + 1)` of the box.
    pub fn point_count(&self) -> BigUint {
        self.parts.iter().map(|&b| BigUint::from(b) + 1u32).product()
    }

    /// Codimension `c = (b_1 + 1) ... (b_n + 1) - (N + 1)`.
    pub fn codim(&self) -> BigUint {
        self.point_count() - BigUint::from(self.dim())
    }

    /// True if every part equals every other.
    pub fn is_uniform(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// The same multiset of parts sorted in descending order.
    pub fn sorted_desc(&self) -> Spec {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Spec { parts }
    }
}

impl fmt::Display for Spec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, b) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("]")
    }
}

/// `C(a, k)` for nonnegative `a`; zero when `k < 0` or `k > a`.
pub fn binomial(a: i64, k: i64) -> Result<BigUint> {
    if a < 0 {
        return Err(Error::Domain(alloc::format!(
            "binomial upper index must be nonnegative, got {a}"
        )));
    }
    if k < 0 {
        return Ok(BigUint::zero());
    }
    Ok(choose(a as u64, k as u64))
}

/// Unchecked `C(a, k)` on unsigned arguments.
pub fn choose(a: u64, k: u64) -> BigUint {
    if k > a {
        return BigUint::zero();
    }
    let k = k.min(a - k);
    let mut acc = BigUint::one();
    // acc = C(a - k + i, i) after step i, always an integer.
    for i in 1..=k {
        acc *= a - k + i;
        acc /= i;
    }
    acc
}

/// `N! / (b_1! ... b_n!)`, computed as `prod_i C(b_i + ... + b_n, b_i)`.
pub fn multinomial(spec: &Spec) -> BigUint {
    let mut tail = 0u64;
    let mut acc = BigUint::one();
    for &b in spec.parts().iter().rev() {
        tail += u64::from(b);
        acc *= choose(tail, u64::from(b));
    }
    acc
}

/// An arrangement of the multiset `1^{b_1} 2^{b_2} ... n^{b_n}`.
///
/// Letters are stored 0-based (`0..n`); [`fmt::Display`] prints them 1-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultisetPermutation {
    letters: Vec<usize>,
    alphabet: usize,
}

impl MultisetPermutation {
    /// Validates that `letters` uses letter `i` exactly `b_{i+1}` times.
    pub fn new(spec: &Spec, letters: Vec<usize>) -> Result<Self> {
        let mut counts = vec![0u64; spec.len()];
        for &l in &letters {
            match counts.get_mut(l) {
                Some(c) => *c += 1,
                None => {
                    return Err(Error::Domain(alloc::format!(
                        "letter {} outside alphabet 1..={}",
                        l + 1,
                        spec.len()
                    )))
                }
            }
        }
        let expected = spec.parts().iter().map(|&b| u64::from(b));
        if !counts.iter().copied().eq(expected) {
            return Err(Error::Domain(alloc::format!(
                "sequence does not have the multiplicities of {spec}"
            )));
        }
        Ok(MultisetPermutation { letters, alphabet: spec.len() })
    }

    /// Convenience constructor from the 1-based symbols used in print.
    pub fn from_symbols(spec: &Spec, symbols: &[u32]) -> Result<Self> {
        let mut letters = Vec::with_capacity(symbols.len());
        for &s in symbols {
            if s == 0 {
                return Err(Error::Domain("symbols are 1-based".to_string()));
            }
            letters.push(s as usize - 1);
        }
        Self::new(spec, letters)
    }

    /// The weakly increasing arrangement `1...1 2...2 ... n...n`.
    pub fn increasing(spec: &Spec) -> Self {
        let letters = spec
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &b)| core::iter::repeat_n(i, b as usize))
            .collect();
        MultisetPermutation { letters, alphabet: spec.len() }
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<usize>, alphabet: usize) -> Self {
        MultisetPermutation { letters, alphabet }
    }

    /// 0-based letters.
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// 1-based symbols as printed.
    pub fn symbols(&self) -> Vec<u32> {
        self.letters.iter().map(|&l| l as u32 + 1).collect()
    }

    /// Alphabet size `n`.
    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Positions `m` (1-based, `1 <= m < N`) with `u_m > u_{m+1}`.
    pub fn descent_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.letters
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(m, _)| m + 1)
    }

    /// `#{k : u_k > u_{k+1}}`.
    pub fn descent_count(&self) -> usize {
        count_descents(&self.letters)
    }
}

impl fmt::Display for MultisetPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.alphabet >= 10 { " " } else { "" };
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{}", l + 1)?;
        }
        Ok(())
    }
}

fn count_descents(letters: &[usize]) -> usize {
    letters.windows(2).filter(|w| w[0] > w[1]).count()
}

/// Rearranges `v` into its lexicographic successor. Returns false (leaving
/// `v` untouched) when `v` is already the last arrangement.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Lazy lexicographic stream over all multiset permutations of a spec.
#[derive(Debug, Clone)]
pub struct Permutations {
    current: Option<Vec<usize>>,
    alphabet: usize,
}

impl Iterator for Permutations {
    type Item = MultisetPermutation;

    fn next(&mut self) -> Option<Self::Item> {
        let cur = self.current.as_mut()?;
        let out = MultisetPermutation::from_letters_unchecked(cur.clone(), self.alphabet);
        if !next_permutation(cur) {
            self.current = None;
        }
        Some(out)
    }
}

/// Every arrangement of the multiset exactly once, in lexicographic order.
pub fn enumerate_permutations(spec: &Spec) -> Permutations {
    Permutations {
        current: Some(MultisetPermutation::increasing(spec).letters),
        alphabet: spec.len(),
    }
}

/// Counts arrangements by number of descents, visiting every one of them.
///
/// Refuses when `multinomial(spec)` exceeds `budget`.
pub fn newcomb_bruteforce(spec: &Spec, budget: u64) -> Result<Vec<BigUint>> {
    let size = multinomial(spec);
    if size > BigUint::from(budget) {
        return Err(Error::BudgetExceeded { required: size.to_string(), budget });
    }
    let n = spec.total() as usize;
    let mut counts = vec![0u64; n.max(1)];
    let mut letters = MultisetPermutation::increasing(spec).letters;
    loop {
        counts[count_descents(&letters)] += 1;
        if !next_permutation(&mut letters) {
            break;
        }
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    debug_assert_eq!(
        counts.iter().sum::<u64>(),
        size.to_u64().unwrap_or(u64::MAX)
    );
    Ok(counts.into_iter().map(BigUint::from).collect())
}
