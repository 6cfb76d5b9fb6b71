//! The Segre toric ideal `J_[b]` on the box `M = {0..b_1} x ... x {0..b_n}`.
//!
//! The variables `T_v` are indexed by lattice points `v in M`; `T_v` maps to
//! `x_{1,v_1} ... x_{n,v_n}`. Reduction modulo the quadratic Gröbner basis
//! `T_v T_w -> T_{min(v,w)} T_{max(v,w)}` sorts a monomial into a chain, and
//! the initial complex is the order complex of `M` under the componentwise
//! order. Its facets are lattice paths from the origin to `(b_1, ..., b_n)`,
//! i.e. multiset permutations, and the descent sets of those paths cut the
//! complex into disjoint intervals.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::combinatorics::{enumerate_permutations, MultisetPermutation, Spec};
use crate::newcomb::newcomb_dillon_roselle;
use crate::{Error, Result};

/// A point of `N^n`, usually of the box `M` of some spec.
///
/// The derived `Ord` is lexicographic, a linear extension of the
/// componentwise partial order exposed by [`LatticePoint::le`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LatticePoint(Vec<u32>);

impl LatticePoint {
    pub fn new(coords: impl Into<Vec<u32>>) -> Self {
        LatticePoint(coords.into())
    }

    /// Validates `0 <= v_i <= b_i`.
    pub fn in_box(spec: &Spec, coords: impl Into<Vec<u32>>) -> Result<Self> {
        let coords = coords.into();
        if coords.len() != spec.len() {
            return Err(Error::DimensionMismatch { expected: spec.len(), found: coords.len() });
        }
        if coords.iter().zip(spec.parts()).any(|(v, b)| v > b) {
            return Err(Error::Domain(alloc::format!("{coords:?} lies outside the box of {spec}")));
        }
        Ok(LatticePoint(coords))
    }

    /// `D = (0, ..., 0)`.
    pub fn origin(n: usize) -> Self {
        LatticePoint(vec![0; n])
    }

    /// `A = (b_1, ..., b_n)`.
    pub fn top(spec: &Spec) -> Self {
        LatticePoint(spec.parts().to_vec())
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// `|v| = v_1 + ... + v_n`, the step at which a path reaches `v`.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn comparable(&self, other: &Self) -> bool {
        self.le(other) || other.le(self)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Componentwise meet `U(u, v)` and join `V(u, v)`.
pub fn meet_join(u: &LatticePoint, v: &LatticePoint) -> Result<(LatticePoint, LatticePoint)> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch { expected: u.dim(), found: v.dim() });
    }
    Ok(meet_join_unchecked(u, v))
}

fn meet_join_unchecked(u: &LatticePoint, v: &LatticePoint) -> (LatticePoint, LatticePoint) {
    let (lo, hi) = u.0.iter().zip(&v.0).map(|(&a, &b)| (a.min(b), a.max(b))).unzip();
    (LatticePoint(lo), LatticePoint(hi))
}

/// All points of `M`, in lexicographic order.
pub fn box_points(spec: &Spec) -> Vec<LatticePoint> {
    let mut out = vec![LatticePoint(Vec::with_capacity(spec.len()))];
    for &b in spec.parts() {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=b).map(move |c| {
                    let mut q = p.0.clone();
                    q.push(c);
                    LatticePoint(q)
                })
            })
            .collect();
    }
    out
}

/// A monomial `T_{v_1} ... T_{v_s}`, stored as a lexicographically sorted
/// multiset of points.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TMonomial {
    points: Vec<LatticePoint>,
}

impl TMonomial {
    pub fn new(mut points: Vec<LatticePoint>) -> Result<Self> {
        if let Some(first) = points.first() {
            let n = first.dim();
            if let Some(bad) = points.iter().find(|p| p.dim() != n) {
                return Err(Error::DimensionMismatch { expected: n, found: bad.dim() });
            }
        }
        points.sort_unstable();
        Ok(TMonomial { points })
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn degree(&self) -> usize {
        self.points.len()
    }

    /// Sorted means the points form a weakly increasing chain.
    pub fn is_sorted(&self) -> bool {
        self.points.windows(2).all(|w| w[0].le(&w[1]))
    }

    /// Indices `(i, j)`, `i < j`, of incomparable pairs.
    pub fn unsorted_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.points.len() {
            for j in i + 1..self.points.len() {
                if !self.points[i].comparable(&self.points[j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `sum_p |p|^2`; every straightening step strictly increases it.
    fn spread(&self) -> u128 {
        self.points.iter().map(|p| u128::from(p.weight()).pow(2)).sum()
    }

    fn replace_pair(&mut self, i: usize, j: usize) {
        let (u, v) = meet_join_unchecked(&self.points[i], &self.points[j]);
        self.points[i] = u;
        self.points[j] = v;
        self.points.sort_unstable();
    }
}

impl fmt::Display for TMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.points.is_empty() {
            return f.write_str("1");
        }
        for p in &self.points {
            write!(f, "T{p}")?;
        }
        Ok(())
    }
}

/// Result of straightening a monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sorted {
    pub monomial: TMonomial,
    /// Number of `{v, w} -> {U, V}` replacements performed.
    pub steps: usize,
}

/// Straightens `m`, always replacing the first incomparable pair.
pub fn sort_monomial(m: &TMonomial) -> Sorted {
    sort_monomial_with(m, |_| 0)
}

/// Straightens `m`; `pick(k)` chooses which of the `k` currently
/// incomparable pairs to replace next (any value is reduced modulo `k`).
pub fn sort_monomial_with(m: &TMonomial, mut pick: impl FnMut(usize) -> usize) -> Sorted {
    let mut cur = m.clone();
    let mut steps = 0;
    loop {
        let pairs = cur.unsorted_pairs();
        if pairs.is_empty() {
            return Sorted { monomial: cur, steps };
        }
        let (i, j) = pairs[pick(pairs.len()) % pairs.len()];
        let before = cur.spread();
        cur.replace_pair(i, j);
        debug_assert!(cur.spread() > before, "straightening must increase the spread");
        steps += 1;
    }
}

/// The sorted monomial with the same image as `m`, read off directly:
/// the `k`-th point takes the `k`-th smallest value on every axis.
pub fn sorted_normal_form(m: &TMonomial) -> TMonomial {
    let Some(first) = m.points.first() else {
        return m.clone();
    };
    let n = first.dim();
    let mut axes: Vec<Vec<u32>> = (0..n)
        .map(|i| m.points.iter().map(|p| p.0[i]).collect())
        .collect();
    for a in &mut axes {
        a.sort_unstable();
    }
    let points = (0..m.degree())
        .map(|k| LatticePoint(axes.iter().map(|a| a[k]).collect()))
        .collect();
    TMonomial { points }
}

/// Exponent vector of the image monomial in the `x_{i,j}`: `(i, j) -> count`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct XMonomial(pub BTreeMap<(usize, u32), u32>);

/// Image of `m` under `T_v -> x_{1,v_1} ... x_{n,v_n}`.
pub fn monomial_map_image(m: &TMonomial) -> XMonomial {
    let mut out = BTreeMap::new();
    for p in &m.points {
        for (i, &c) in p.0.iter().enumerate() {
            *out.entry((i, c)).or_insert(0) += 1;
        }
    }
    XMonomial(out)
}

/// Whether `m1 - m2` is a nonzero element of `J_[b]`.
pub fn binomial_in_ideal(m1: &TMonomial, m2: &TMonomial) -> bool {
    m1 != m2 && monomial_map_image(m1) == monomial_map_image(m2)
}

/// `T_v T_w - T_U T_V` with `v, w` incomparable; the first term leads.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroebnerBinomial {
    pub lead: (LatticePoint, LatticePoint),
    pub trail: (LatticePoint, LatticePoint),
}

impl GroebnerBinomial {
    pub fn lead_monomial(&self) -> TMonomial {
        TMonomial::new(vec![self.lead.0.clone(), self.lead.1.clone()]).expect("same dimension")
    }

    pub fn trail_monomial(&self) -> TMonomial {
        TMonomial::new(vec![self.trail.0.clone(), self.trail.1.clone()]).expect("same dimension")
    }
}

impl fmt::Display for GroebnerBinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "T{}T{} - T{}T{}",
            self.lead.0, self.lead.1, self.trail.0, self.trail.1
        )
    }
}

/// One binomial per incomparable pair of points of `M`.
pub fn groebner_generators(spec: &Spec) -> Vec<GroebnerBinomial> {
    let pts = box_points(spec);
    let mut out = Vec::new();
    for (i, v) in pts.iter().enumerate() {
        for w in &pts[i + 1..] {
            if !v.comparable(w) {
                let (u, j) = meet_join_unchecked(v, w);
                out.push(GroebnerBinomial { lead: (v.clone(), w.clone()), trail: (u, j) });
            }
        }
    }
    out
}

/// A face of the initial complex: a strictly increasing chain of points.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Face {
    points: Vec<LatticePoint>,
}

impl Face {
    pub fn empty() -> Self {
        Face::default()
    }

    /// Collapses repeated points and checks the rest form a chain.
    pub fn new(mut points: Vec<LatticePoint>) -> Result<Self> {
        points.sort_unstable();
        points.dedup();
        if let Some(w) = points.windows(2).find(|w| !w[0].le(&w[1])) {
            return Err(Error::Domain(alloc::format!(
                "{} and {} are incomparable, so this is not a face",
                w[0],
                w[1]
            )));
        }
        Ok(Face { points })
    }

    /// The support of a sorted monomial.
    pub fn support(m: &TMonomial) -> Result<Self> {
        Face::new(m.points.clone())
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    /// Number of distinct points.
    pub fn cardinality(&self) -> usize {
        self.points.len()
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        self.points.iter().all(|p| other.contains(p))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// Points visited by the lattice path of `perm`, origin included.
fn path_points(perm: &MultisetPermutation) -> Vec<LatticePoint> {
    let mut cur = vec![0u32; perm.alphabet()];
    let mut out = Vec::with_capacity(perm.len() + 1);
    out.push(LatticePoint(cur.clone()));
    for &l in perm.letters() {
        cur[l] += 1;
        out.push(LatticePoint(cur.clone()));
    }
    out
}

/// `F_(u)`: the origin together with every partial sum of unit steps.
pub fn face_from_sequence(perm: &MultisetPermutation) -> Face {
    let mut points = path_points(perm);
    points.sort_unstable();
    Face { points }
}

/// `G_(u)`: the path points reached right before each descent.
pub fn descent_set(perm: &MultisetPermutation) -> Face {
    let path = path_points(perm);
    let mut points: Vec<_> = perm.descent_positions().map(|m| path[m].clone()).collect();
    points.sort_unstable();
    Face { points }
}

/// Maximal chains from the origin to the top corner, one per arrangement.
pub fn facets(spec: &Spec) -> impl Iterator<Item = Face> {
    enumerate_permutations(spec).map(|p| face_from_sequence(&p))
}

/// The sequence `u_G` passing through every point of `face` whose descents
/// all lie in `face`: the path runs weakly increasing from the origin to the
/// first point, then from each point to the next, then to the top corner.
pub fn canonical_sequence(spec: &Spec, face: &Face) -> Result<MultisetPermutation> {
    let top = LatticePoint::top(spec);
    for p in face.points() {
        if !p.le(&top) {
            return Err(Error::Domain(alloc::format!("{p} lies outside the box of {spec}")));
        }
    }
    let mut letters = Vec::with_capacity(spec.total() as usize);
    let mut prev = LatticePoint::origin(spec.len());
    for p in face.points().iter().chain(core::iter::once(&top)) {
        for (axis, (&a, &b)) in prev.0.iter().zip(&p.0).enumerate() {
            letters.extend(core::iter::repeat_n(axis, (b - a) as usize));
        }
        prev = p.clone();
    }
    MultisetPermutation::new(spec, letters)
}

/// A facet's interval `[G_(u), F_(u)]` in the face poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub sequence: MultisetPermutation,
    pub lower: Face,
    pub upper: Face,
}

impl Interval {
    pub fn of(perm: MultisetPermutation) -> Self {
        Interval { lower: descent_set(&perm), upper: face_from_sequence(&perm), sequence: perm }
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.lower.is_subset(face) && face.is_subset(&self.upper)
    }
}

/// The interval of the partition containing `face`.
pub fn partition_locate(spec: &Spec, face: &Face) -> Result<Interval> {
    Ok(Interval::of(canonical_sequence(spec, face)?))
}

/// For each facet, the points of `M` off the facet: a minimal prime of the
/// initial ideal, generated by `c([b])` variables.
pub fn minimal_primes(spec: &Spec) -> impl Iterator<Item = Vec<LatticePoint>> {
    let all = box_points(spec);
    facets(spec).map(move |f| all.iter().filter(|p| !f.contains(p)).cloned().collect())
}

/// Number of faces of the initial complex (empty face included), read off
/// the h-vector: `sum_k h_k 2^{N + 1 - k}`.
pub fn face_count(spec: &Spec) -> BigUint {
    let dim = spec.dim() as usize;
    newcomb_dillon_roselle(spec)
        .values
        .iter()
        .enumerate()
        .map(|(k, h)| h << (dim - k))
        .sum()
}

/// Every face of the initial complex, i.e. every chain of `M`, including the
/// empty one.
pub fn all_faces(spec: &Spec) -> Vec<Face> {
    fn extend(pts: &[LatticePoint], from: usize, chain: &mut Vec<LatticePoint>, out: &mut Vec<Face>) {
        out.push(Face { points: chain.clone() });
        for k in from..pts.len() {
            if chain.last().is_none_or(|last| last.le(&pts[k])) {
                chain.push(pts[k].clone());
                extend(pts, k + 1, chain, out);
                chain.pop();
            }
        }
    }
    let pts = box_points(spec);
    let mut out = Vec::new();
    extend(&pts, 0, &mut Vec::new(), &mut out);
    out
}

/// Outcome of [`check_partition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionReport {
    pub faces: usize,
    pub facets: usize,
    /// `sum_u 2^{N + 1 - |G_u|}`, which equals `faces` when the intervals
    /// are disjoint and cover.
    pub interval_sizes: BigUint,
    /// `sum_u t^{|G_u|}` as a coefficient list.
    pub descent_polynomial: Vec<BigUint>,
    /// A face lying in zero or several intervals, or whose canonical
    /// sequence is not its unique interval.
    pub counterexample: Option<Face>,
}

impl PartitionReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none() && BigUint::from(self.faces) == self.interval_sizes
    }
}

/// Exhaustively verifies that the intervals `[G_u, F_u]` partition the
/// initial complex. Refuses when the face count exceeds `budget`.
pub fn check_partition(spec: &Spec, budget: u64) -> Result<PartitionReport> {
    let expected = face_count(spec);
    if expected > BigUint::from(budget) {
        return Err(Error::BudgetExceeded { required: alloc::format!("{expected}"), budget });
    }
    let intervals: Vec<Interval> = enumerate_permutations(spec).map(Interval::of).collect();
    let dim = spec.dim() as usize;
    let mut descent_polynomial = vec![BigUint::zero(); dim];
    let mut interval_sizes = BigUint::zero();
    for iv in &intervals {
        let g = iv.lower.cardinality();
        descent_polynomial[g] += 1u32;
        interval_sizes += BigUint::one() << (dim - g);
    }
    while descent_polynomial.len() > 1 && descent_polynomial.last().is_some_and(|v| v.is_zero()) {
        descent_polynomial.pop();
    }

    let faces = all_faces(spec);
    let mut counterexample = None;
    for face in &faces {
        let mut owners = intervals.iter().filter(|iv| iv.contains(face));
        let (first, second) = (owners.next(), owners.next());
        let located = partition_locate(spec, face)?;
        let ok = matches!((first, second), (Some(iv), None) if iv.sequence == located.sequence);
        if !ok {
            counterexample = Some(face.clone());
            break;
        }
    }
    Ok(PartitionReport {
        faces: faces.len(),
        facets: intervals.len(),
        interval_sizes,
        descent_polynomial,
        counterexample,
    })
}
