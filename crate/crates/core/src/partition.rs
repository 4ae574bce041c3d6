//! Integer partitions and the lattice operations used by growth diagrams.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are never stored, so the empty partition is the empty
/// sequence and equality is structural. Indexing past the last part yields 0.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// Classification of a skew shape `lambda / mu`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StripType {
    Equal,
    OneSquare,
    HorizontalStrip,
    VerticalStrip,
    /// At most one cell per row and per column, with two or more cells.
    HorizontalAndVertical,
    NotContained,
    Other,
}

impl StripType {
    /// True for every skew shape with at most one cell per column.
    pub fn is_horizontal(self) -> bool {
        matches!(
            self,
            StripType::Equal
                | StripType::OneSquare
                | StripType::HorizontalStrip
                | StripType::HorizontalAndVertical
        )
    }

    /// True for every skew shape with at most one cell per row.
    pub fn is_vertical(self) -> bool {
        matches!(
            self,
            StripType::Equal
                | StripType::OneSquare
                | StripType::VerticalStrip
                | StripType::HorizontalAndVertical
        )
    }
}

/// Shape statistics relevant to column-bounded tableaux.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColumnStats {
    pub num_columns: usize,
    pub max_column_length: usize,
    pub num_odd_columns: usize,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition, accepting trailing zeros but rejecting any
    /// increase.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "part {} ({}) is smaller than part {} ({})",
                i + 1,
                parts[i],
                i + 2,
                parts[i + 1]
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(
                "zero part before a positive part".into(),
            ));
        }
        Ok(Partition { parts })
    }

    /// The one-column shape `(1^m)`.
    pub fn column(m: usize) -> Self {
        Partition { parts: vec![1; m] }
    }

    /// The one-row shape `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of (nonzero) parts, i.e. the length of the first column.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of columns, i.e. the first part.
    pub fn num_columns(&self) -> usize {
        self.part(0)
    }

    /// True if `self` is contained in `other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    pub fn union(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition {
            parts: (0..len).map(|i| self.part(i).max(other.part(i))).collect(),
        }
    }

    pub fn intersection(&self, other: &Partition) -> Partition {
        let len = self.len().min(other.len());
        Partition {
            parts: (0..len).map(|i| self.part(i).min(other.part(i))).collect(),
        }
    }

    pub fn conjugate(&self) -> Partition {
        Partition {
            parts: (0..self.num_columns())
                .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
                .collect(),
        }
    }

    /// Classifies the skew shape `lambda / self`.
    pub fn strip_type(&self, lambda: &Partition) -> StripType {
        if !self.is_contained_in(lambda) {
            return StripType::NotContained;
        }
        let diff = lambda.size() - self.size();
        match diff {
            0 => return StripType::Equal,
            1 => return StripType::OneSquare,
            _ => {}
        }
        // At most one cell per row.
        let vertical = (0..lambda.len()).all(|i| lambda.part(i) - self.part(i) <= 1);
        // At most one cell per column: rows interlace.
        let horizontal = (0..lambda.len()).all(|i| lambda.part(i + 1) <= self.part(i));
        match (horizontal, vertical) {
            (true, true) => StripType::HorizontalAndVertical,
            (true, false) => StripType::HorizontalStrip,
            (false, true) => StripType::VerticalStrip,
            (false, false) => StripType::Other,
        }
    }

    pub fn column_stats(&self) -> ColumnStats {
        ColumnStats {
            num_columns: self.num_columns(),
            max_column_length: self.len(),
            num_odd_columns: self
                .conjugate()
                .parts
                .iter()
                .filter(|&&c| c % 2 == 1)
                .count(),
        }
    }

    /// Lengths of the columns, left to right.
    pub fn column_lengths(&self) -> Vec<usize> {
        self.conjugate().parts
    }

    /// Adds a cell at the end of `row` (0-based), if the result is a partition.
    pub fn with_cell_added(&self, row: usize) -> Option<Partition> {
        if row > self.len() || (row > 0 && self.part(row - 1) == self.part(row)) {
            return None;
        }
        let mut parts = self.parts.clone();
        if row == self.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Some(Partition { parts })
    }

    /// Removes the last cell of `row` (0-based), if it is a removable corner.
    pub fn with_cell_removed(&self, row: usize) -> Option<Partition> {
        if row >= self.len() || self.part(row + 1) == self.part(row) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Some(Partition { parts })
    }

    /// Rows (0-based) where a cell can be added.
    pub fn addable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.len()).filter(move |&r| r == 0 || self.part(r - 1) > self.part(r))
    }

    /// Rows (0-based) whose last cell is a removable corner.
    pub fn removable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&r| self.part(r) > self.part(r + 1))
    }

    /// The unique row in which `self` and `other` differ, if they differ in
    /// exactly one row.
    pub(crate) fn single_differing_row(&self, other: &Partition) -> Option<usize> {
        let len = self.len().max(other.len());
        let mut rows = (0..len).filter(|&i| self.part(i) != other.part(i));
        let first = rows.next()?;
        rows.next().is_none().then_some(first)
    }

    /// Cells `(row, col)` of the skew shape `lambda / self`, 0-based, in
    /// row-major order.
    pub fn skew_cells(&self, lambda: &Partition) -> Vec<(usize, usize)> {
        (0..lambda.len())
            .flat_map(|r| (self.part(r)..lambda.part(r)).map(move |c| (r, c)))
            .collect()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=remaining.min(max)).rev() {
                cur.push(p);
                rec(remaining - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Containment order. Incomparable shapes return `None`.
pub fn containment_cmp(a: &Partition, b: &Partition) -> Option<Ordering> {
    match (a.is_contained_in(b), b.is_contained_in(a)) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the bracket form `[3,1,1]`; `[]` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidPartition(format!("expected [..], got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidPartition(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Shorthand constructor used throughout tests: `p(&[2, 1])`.
pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition literal")
}
