//! The quadratic strand of the Betti diagram of `J_[b]`.
//!
//! For `n >= 3` the ideal satisfies `N_{2,3}`, so `beta_{i,i+2}` for
//! `i = 0..=3` is forced by the h-vector. Everything else in the diagram is
//! either a known zero (rows `>= 3` in columns `0..=2`), the corner
//! `beta_{c-1, c-1+reg+1} = A([b], reg)`, the nonzero-but-unknown entry
//! `beta_{3,6}`, or genuinely unknown.
//!
//! Indices are ideal indices throughout (column `i` of the diagram of `I`
//! is column `i + 1` of the diagram of `S/I`), matching the tables the
//! golden data comes from.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::combinatorics::{choose, Spec};
use crate::newcomb::{newcomb_dillon_roselle, regularity, top_coefficient};
use crate::{Error, Result};

/// One cell of a Betti diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BettiEntry {
    Known(BigUint),
    /// Provably nonzero, value not computed.
    Nonzero,
    Unknown,
}

impl fmt::Display for BettiEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BettiEntry::Known(v) => write!(f, "{v}"),
            BettiEntry::Nonzero => f.write_str("*"),
            BettiEntry::Unknown => f.write_str("."),
        }
    }
}

/// `(column, row, value)` of the last Betti number, ideal-indexed; the
/// corresponding graded degree is `column + row`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corner {
    pub column: usize,
    pub row: usize,
    pub value: BigUint,
}

/// Diagram grid: `entries[row - first_row][column]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiDiagram {
    pub first_row: usize,
    pub columns: usize,
    pub entries: Vec<Vec<BettiEntry>>,
}

impl BettiDiagram {
    pub fn rows(&self) -> impl Iterator<Item = usize> + '_ {
        self.first_row..self.first_row + self.entries.len()
    }

    pub fn get(&self, column: usize, row: usize) -> Option<&BettiEntry> {
        self.entries.get(row.checked_sub(self.first_row)?)?.get(column)
    }

    fn set(&mut self, column: usize, row: usize, entry: BettiEntry) {
        self.entries[row - self.first_row][column] = entry;
    }

    /// True when no cell is marked unknown or nonzero-unknown.
    pub fn is_fully_known(&self) -> bool {
        self.entries.iter().flatten().all(|e| matches!(e, BettiEntry::Known(_)))
    }
}

impl fmt::Display for BettiDiagram {
    /// Right-aligned table with a header row of column indices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<alloc::string::String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| alloc::format!("{e}")).collect())
            .collect();
        let label_width = self.rows().map(|r| alloc::format!("{r}").len()).max().unwrap_or(1);
        let widths: Vec<usize> = (0..self.columns)
            .map(|c| {
                let head = alloc::format!("{c}").len();
                cells.iter().map(|row| row[c].len()).max().unwrap_or(0).max(head)
            })
            .collect();
        write!(f, "{:>w$} ", "", w = label_width + 1)?;
        for (c, w) in widths.iter().enumerate() {
            write!(f, " {:>w$}", c, w = w)?;
        }
        writeln!(f)?;
        for (r, row) in self.rows().zip(&cells) {
            write!(f, "{:>w$}:", r, w = label_width + 1)?;
            for (cell, w) in row.iter().zip(&widths) {
                write!(f, " {:>w$}", cell, w = w)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The computed quadratic strand together with the diagram skeleton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiStrand {
    pub spec: Spec,
    /// `beta_{0,2}, beta_{1,3}, beta_{2,4}, beta_{3,5}`.
    pub beta: [BigUint; 4],
    pub corner: Corner,
    pub diagram: BettiDiagram,
}

/// Converts an ideal-indexed homological position to the quotient `S/I`.
pub fn ideal_to_quotient_column(column: usize) -> usize {
    column + 1
}

fn require_three_factors(spec: &Spec) -> Result<()> {
    if spec.len() < 3 {
        return Err(Error::Domain(alloc::format!(
            "{spec}: the quadratic strand is only determined for n >= 3 factors (N_{{2,3}} needs n >= 3), got n = {}",
            spec.len()
        )));
    }
    Ok(())
}

/// `C(prod(b_i + 1) + 1, 2) - prod C(b_i + 2, 2)`: the number of quadrics.
pub fn beta_02_closed_form(spec: &Spec) -> BigUint {
    let vars = spec.point_count();
    let pairs = (&vars + 1u32) * &vars / 2u32;
    let image: BigUint = spec
        .parts()
        .iter()
        .map(|&b| choose(u64::from(b) + 2, 2))
        .product();
    pairs - image
}

fn strand_entry(codim: u64, h: &[BigUint], i: usize) -> BigInt {
    (0..=i + 2).fold(BigInt::zero(), |acc, j| {
        let hj = h.get(j).cloned().unwrap_or_default();
        let term = BigInt::from(choose(codim, (i + 2 - j) as u64) * hj);
        if j.is_even() {
            acc - term
        } else {
            acc + term
        }
    })
}

/// `beta_{i,i+2}(J_[b]) = sum_{j=0}^{i+2} (-1)^{j+1} C(c, i+2-j) A([b], j)`.
pub fn beta_strand(spec: &Spec, i: usize) -> Result<BigUint> {
    if i > 3 {
        return Err(Error::Domain(alloc::format!(
            "beta_{{{i},{}}} is outside the N_{{2,3}} range i <= 3",
            i + 2
        )));
    }
    require_three_factors(spec)?;
    let codim = spec
        .codim()
        .to_u64()
        .ok_or_else(|| Error::Domain("codimension does not fit in 64 bits".into()))?;
    let h = newcomb_dillon_roselle(spec).values;
    let v = strand_entry(codim, &h, i);
    Ok(v
        .to_biguint()
        .unwrap_or_else(|| panic!("negative Betti number beta_{{{i},{}}} = {v} for {spec}", i + 2)))
}

/// `beta_{0,2}`, computed both from the closed form and from the strand
/// formula; the two must agree.
pub fn beta_02(spec: &Spec) -> Result<BigUint> {
    let closed = beta_02_closed_form(spec);
    if spec.len() >= 3 {
        let strand = beta_strand(spec, 0)?;
        assert_eq!(closed, strand, "beta_02 closed form and strand formula disagree on {spec}");
    }
    Ok(closed)
}

/// `(c([b]) - 1, reg + 1, A([b], reg))`.
pub fn corner_betti(spec: &Spec) -> Result<Corner> {
    if spec.len() < 2 {
        return Err(Error::Domain(alloc::format!("{spec}: a single factor has the zero ideal")));
    }
    let c = spec
        .codim()
        .to_usize()
        .ok_or_else(|| Error::Domain("codimension does not fit in usize".into()))?;
    Ok(Corner {
        column: c - 1,
        row: regularity(spec) as usize + 1,
        value: top_coefficient(spec),
    })
}

/// The diagram shape: columns `0..c`, rows `2..=reg+1`.
pub fn diagram_skeleton(spec: &Spec) -> Result<BettiStrand> {
    require_three_factors(spec)?;
    let beta = [
        beta_strand(spec, 0)?,
        beta_strand(spec, 1)?,
        beta_strand(spec, 2)?,
        beta_strand(spec, 3)?,
    ];
    let corner = corner_betti(spec)?;
    let columns = corner.column + 1;
    let last_row = corner.row;
    let mut diagram = BettiDiagram {
        first_row: 2,
        columns,
        entries: vec![vec![BettiEntry::Unknown; columns]; last_row - 1],
    };
    for (i, b) in beta.iter().enumerate() {
        diagram.set(i, 2, BettiEntry::Known(b.clone()));
    }
    for row in 3..=last_row {
        for col in 0..=2 {
            diagram.set(col, row, BettiEntry::Known(BigUint::zero()));
        }
    }
    // beta_{3,6} != 0 for every n >= 3.
    diagram.set(3, 3, BettiEntry::Nonzero);
    diagram.set(corner.column, corner.row, BettiEntry::Known(corner.value.clone()));
    Ok(BettiStrand { spec: spec.clone(), beta, corner, diagram })
}

/// The minimal resolution is pure exactly for `[1, 1, 1]`.
pub fn is_pure_resolution(spec: &Spec) -> Result<bool> {
    require_three_factors(spec)?;
    Ok(spec.parts() == [1, 1, 1])
}
