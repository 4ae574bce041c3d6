//! Schensted row insertion and its inverse, for distinct or repeated entries.

use std::fmt;

use crate::error::{Error, Result};
use crate::tableau::{SemistandardTableau, StandardTableau, Tableau};

/// Row-inserts `x`, bumping in each row the leftmost entry strictly greater
/// than the incoming one. Returns the 0-based row of the new cell.
///
/// With distinct entries this is Schensted insertion; with repeats it is the
/// RSK variant that keeps rows weakly increasing.
pub fn row_insert<T: Copy + Ord + fmt::Display>(t: &mut Tableau<T>, x: T) -> usize {
    let rows = t.rows_mut();
    let mut x = x;
    for (r, row) in rows.iter_mut().enumerate() {
        let pos = row.partition_point(|&v| v <= x);
        if pos == row.len() {
            row.push(x);
            return r;
        }
        x = std::mem::replace(&mut row[pos], x);
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// Inverse of [`row_insert`]: removes the last cell of `row` (which must be
/// an outer corner) and bumps upward, returning the value leaving the first
/// row.
pub fn reverse_bump<T: Copy + Ord + fmt::Display>(t: &mut Tableau<T>, row: usize) -> Result<T> {
    let shape = t.shape();
    if shape.with_cell_removed(row).is_none() {
        return Err(Error::precondition(format!(
            "row {} does not end in an outer corner",
            row + 1
        )));
    }
    let rows = t.rows_mut();
    let mut y = rows[row].pop().expect("corner row is nonempty");
    if rows[row].is_empty() {
        rows.pop();
    }
    for r in (0..row).rev() {
        let line = &mut rows[r];
        // Rightmost entry strictly smaller than y.
        let pos = line.partition_point(|&v| v < y);
        debug_assert!(pos > 0, "column strictness guarantees a smaller entry");
        y = std::mem::replace(&mut line[pos - 1], y);
    }
    Ok(y)
}

/// Classical Schensted insertion of a word of distinct values; returns the
/// insertion tableau and the recording tableau (positions `1..=n`).
pub fn schensted(word: &[usize]) -> (Tableau<usize>, Tableau<usize>) {
    rsk_pairs(word.iter().enumerate().map(|(i, &v)| (i + 1, v)))
}

/// RSK on a two-line array given as `(top, bottom)` biletters in
/// lexicographic order.
pub fn rsk_pairs(
    pairs: impl IntoIterator<Item = (usize, usize)>,
) -> (Tableau<usize>, Tableau<usize>) {
    let mut p = Tableau::empty();
    let mut q: Tableau<usize> = Tableau::empty();
    for (top, bottom) in pairs {
        let r = row_insert(&mut p, bottom);
        let qr = q.rows_mut();
        if r == qr.len() {
            qr.push(vec![top]);
        } else {
            qr[r].push(top);
        }
    }
    (p, q)
}

/// RSK of a non-negative integer matrix `a[i][j]` (row `i` gives the top
/// letter `i + 1`, column `j` the bottom letter `j + 1`).
pub fn rsk_matrix(a: &[Vec<usize>]) -> (SemistandardTableau, SemistandardTableau) {
    let rows = a.len();
    let cols = a.iter().map(Vec::len).max().unwrap_or(0);
    let pairs = a.iter().enumerate().flat_map(|(i, row)| {
        row.iter()
            .enumerate()
            .flat_map(move |(j, &e)| std::iter::repeat_n((i + 1, j + 1), e))
    });
    let (p, q) = rsk_pairs(pairs);
    (
        SemistandardTableau::with_alphabet(p, cols).expect("RSK output is semistandard"),
        SemistandardTableau::with_alphabet(q, rows).expect("RSK output is semistandard"),
    )
}

/// Row insertion on standard tableaux, for callers outside this module.
pub fn insert_standard(t: &StandardTableau, x: usize) -> Result<StandardTableau> {
    let mut inner = t.tableau().clone();
    row_insert(&mut inner, x);
    StandardTableau::from_tableau(inner)
}
