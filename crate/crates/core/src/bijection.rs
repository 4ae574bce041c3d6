//! Bijections between column-bounded tableaux and oscillating tableaux, and
//! the reduction from odd column bounds to even ones.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::growth::{
    backward_sweep, forward_sweep, BoundaryWord, CellArrangement, Direction, Filling, GrowthDiagram,
};
use crate::insertion::{reverse_bump, row_insert};
use crate::jdt::{
    eject_to_semistandard, eject_to_standard, inject_markers_semistandard, inject_markers_standard,
};
use crate::knuth::{knuth_backward_sweep, knuth_forward_sweep, GeneralizedBoundaryWord};
use crate::partition::{Partition, StripType};
use crate::tableau::{
    AugmentedTableau, Flavor, Letter, PartitionChain, SemistandardTableau, StandardTableau,
};

/// A walk `∅ = λ^0, λ^1, ..., λ^n = (1^m)` in which consecutive shapes differ
/// by exactly one square and no shape has more than `k` columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OscillatingTableau {
    shapes: Vec<Partition>,
    k: usize,
}

impl OscillatingTableau {
    pub fn new(shapes: Vec<Partition>, k: usize) -> Result<Self> {
        check_walk(&shapes, k, |_, a, b| {
            matches!(a.strip_type(b), StripType::OneSquare)
                || matches!(b.strip_type(a), StripType::OneSquare)
        })?;
        Ok(OscillatingTableau { shapes, k })
    }

    /// Uses the widest shape as the column bound.
    pub fn with_minimal_k(shapes: Vec<Partition>) -> Result<Self> {
        let k = shapes.iter().map(Partition::num_columns).max().unwrap_or(0);
        Self::new(shapes, k)
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.shapes.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Height of the final one-column shape.
    pub fn m(&self) -> usize {
        self.shapes.last().map_or(0, Partition::len)
    }
}

/// Shared walk validation: starts at `∅`, ends at a single column, respects
/// the column bound, and each step passes `step_ok(index, from, to)`.
fn check_walk(
    shapes: &[Partition],
    k: usize,
    step_ok: impl Fn(usize, &Partition, &Partition) -> bool,
) -> Result<()> {
    match shapes.first() {
        Some(s) if s.is_empty() => {}
        _ => {
            return Err(Error::ChainStep {
                index: 0,
                reason: "walk must start at the empty partition".into(),
            })
        }
    }
    let last = shapes.last().expect("nonempty");
    if last.num_columns() > 1 {
        return Err(Error::ChainStep {
            index: shapes.len() - 1,
            reason: format!("walk must end at a one-column shape, found {last}"),
        });
    }
    for (i, s) in shapes.iter().enumerate() {
        if s.num_columns() > k {
            return Err(Error::ChainStep {
                index: i,
                reason: format!("{s} has more than {k} columns"),
            });
        }
    }
    for (i, w) in shapes.windows(2).enumerate() {
        if !step_ok(i + 1, &w[0], &w[1]) {
            return Err(Error::ChainStep {
                index: i + 1,
                reason: format!("illegal step {} -> {}", w[0], w[1]),
            });
        }
    }
    Ok(())
}

fn write_shapes(f: &mut fmt::Formatter<'_>, shapes: &[Partition]) -> fmt::Result {
    for s in shapes {
        writeln!(f, "{s}")?;
    }
    Ok(())
}

/// One bracketed partition per non-blank line; `#` starts a comment line.
pub fn parse_shapes(text: &str) -> Result<Vec<Partition>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            l.parse::<Partition>()
                .map_err(|e| Error::parse(i + 1, e.to_string()))
        })
        .collect()
}

impl fmt::Display for OscillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_shapes(f, &self.shapes)
    }
}

impl fmt::Debug for OscillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.shapes.iter().map(ToString::to_string).collect();
        write!(f, "Osc(k={})[{}]", self.k, s.join(" "))
    }
}

impl FromStr for OscillatingTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OscillatingTableau::with_minimal_k(parse_shapes(s)?)
    }
}

/// Intermediate objects of the standard-tableau bijection.
#[derive(Debug, Clone)]
pub struct StandardTrace {
    pub augmented: AugmentedTableau,
    /// The symmetric filling of the `N x N` square, `N = n + m`.
    pub square: Filling,
    /// Forward growth diagram on the staircase below the anti-diagonal.
    pub staircase: GrowthDiagram,
    /// Labels `W_0 .. W_N` of the anti-diagonal corners `(i, N - i)`.
    pub diagonal: Vec<Partition>,
}

/// Checks the column bound `2k` and returns the odd-column count.
fn check_column_bound(shape: &Partition, max_col: usize) -> Result<usize> {
    let stats = shape.column_stats();
    if stats.max_column_length > max_col {
        return Err(Error::precondition(format!(
            "shape {shape} has a column of length {} > {max_col}",
            stats.max_column_length
        )));
    }
    Ok(stats.num_odd_columns)
}

/// The boundary word of the square for a chain `λ^0..λ^N` placed along the
/// top edge from right to left and up the left edge, read in the canonical
/// frame of a top-left sweep.
fn mirrored_square_word(chain: &[Partition]) -> Vec<Partition> {
    chain
        .iter()
        .chain(chain.iter().rev().skip(1))
        .cloned()
        .collect()
}

/// Anti-diagonal reflection `(x, y) -> (N-1-y, N-1-x)` of a square cell.
fn anti(n: usize, x: usize, y: usize) -> (usize, usize) {
    (n - 1 - y, n - 1 - x)
}

/// Structural facts about the reconstructed square: symmetric, empty
/// anti-diagonal, no ones in the marker corner, marker rows forming one
/// south-east chain, and north-east chains no longer than `max_ne`.
pub fn check_square(square: &Filling, m: usize, max_ne: Option<usize>) -> Result<()> {
    let n = square.arrangement().width();
    let ones = square.ones();
    for &(x, y) in &ones {
        let bad = |reason: &str| Error::Reconstruction {
            x,
            y,
            reason: reason.into(),
        };
        let (ax, ay) = anti(n, x, y);
        if square.get(ax, ay) != square.get(x, y) {
            return Err(bad("filling is not symmetric about the anti-diagonal"));
        }
        if x + y == n - 1 {
            return Err(bad("entry on the anti-diagonal"));
        }
        if y < m && x >= n - m {
            return Err(bad("entry in the marker corner"));
        }
    }
    let mut marker_row_cols: Vec<(usize, usize)> =
        ones.iter().filter(|p| p.1 < m).copied().collect();
    // Cells sharing a column are refined into a south-east chain as well.
    marker_row_cols.sort_unstable_by_key(|&(x, y)| (x, std::cmp::Reverse(y)));
    if marker_row_cols.windows(2).any(|w| w[0].1 < w[1].1) {
        return Err(Error::precondition(
            "marker rows do not form one south-east chain",
        ));
    }
    if let Some(bound) = max_ne {
        let mut pts = ones.clone();
        pts.sort_unstable();
        let mut tails: Vec<usize> = Vec::new();
        for &(_, y) in &pts {
            let p = tails.partition_point(|&t| t < y);
            if p == tails.len() {
                tails.push(y);
            } else {
                tails[p] = y;
            }
        }
        if tails.len() > bound {
            return Err(Error::precondition(format!(
                "north-east chain of length {} exceeds {bound}",
                tails.len()
            )));
        }
    }
    Ok(())
}

/// Cells of the square strictly below the anti-diagonal.
fn lower_half(square: &Filling) -> Result<Filling> {
    let n = square.arrangement().width();
    Filling::from_entries(
        CellArrangement::staircase(n),
        square
            .nonzero()
            .into_iter()
            .filter(|&(x, y, _)| x + y + 2 <= n),
    )
}

/// Rebuilds the symmetric square from its lower half.
fn symmetric_completion(half: &Filling, n: usize) -> Result<Filling> {
    let entries = half.nonzero().into_iter().flat_map(|(x, y, v)| {
        let (ax, ay) = anti(n, x, y);
        [(x, y, v), (ax, ay, v)]
    });
    Filling::from_entries(CellArrangement::square(n), entries)
}

fn anti_diagonal(d: &GrowthDiagram, n: usize) -> Vec<Partition> {
    (0..=n)
        .map(|i| d.try_label(i, n - i).cloned().unwrap_or_default())
        .collect()
}

/// Staircase boundary word from the anti-diagonal labels: outer corners carry
/// `W_i`, the inner corner below each missing diagonal cell carries the
/// smaller of its two diagonal neighbours.
fn staircase_word(diag: &[Partition]) -> Result<BoundaryWord> {
    let n = diag.len() - 1;
    let arr = CellArrangement::staircase(n);
    let labels = arr
        .boundary_corners()
        .into_iter()
        .map(|(x, y)| {
            // On the diagonal, or the smaller neighbour on a horizontal step.
            if x + y == n || diag[x].size() < diag[x + 1].size() {
                diag[x].clone()
            } else {
                diag[x + 1].clone()
            }
        })
        .collect();
    BoundaryWord::new(&arr, labels)
}

/// The forced tail `(1^m), (1^{m-1}), ..., ∅`.
fn column_tail(m: usize) -> impl Iterator<Item = Partition> {
    (0..=m).rev().map(Partition::column)
}

/// Standard tableau with all columns of length at most `2k` to oscillating
/// tableau of the same length with at most `k` columns, ending at `(1^m)`
/// for `m` the number of odd columns.
pub fn syt_to_oscillating(t: &StandardTableau, k: usize) -> Result<OscillatingTableau> {
    Ok(syt_to_oscillating_traced(t, k)?.1)
}

pub fn syt_to_oscillating_traced(
    t: &StandardTableau,
    k: usize,
) -> Result<(StandardTrace, OscillatingTableau)> {
    let n = t.size();
    let m = check_column_bound(&t.shape(), 2 * k)?;
    let augmented = inject_markers_standard(t)?;
    let big_n = n + m;
    let chain = augmented.to_chain().into_shapes();
    let square_arr = CellArrangement::square(big_n);
    let word = BoundaryWord::new(&square_arr, mirrored_square_word(&chain))?;
    let square = backward_sweep(&square_arr, &word, Direction::TopLeft)?;
    check_square(&square, m, Some(2 * k))?;
    let staircase = forward_sweep(&lower_half(&square)?, Direction::TopRight)?;
    let diagonal = anti_diagonal(&staircase, big_n);
    for (j, want) in column_tail(m).enumerate() {
        if diagonal[n + j] != want {
            return Err(Error::precondition(format!(
                "diagonal label {} is {}, expected {want}",
                n + j,
                diagonal[n + j]
            )));
        }
    }
    let osc = OscillatingTableau::new(diagonal[..=n].to_vec(), k)?;
    Ok((
        StandardTrace {
            augmented,
            square,
            staircase,
            diagonal,
        },
        osc,
    ))
}

/// Inverse of [`syt_to_oscillating`].
pub fn oscillating_to_syt(o: &OscillatingTableau) -> Result<StandardTableau> {
    let n = o.len();
    let m = o.m();
    let big_n = n + m;
    let diag: Vec<Partition> = o
        .shapes()
        .iter()
        .cloned()
        .chain(column_tail(m).skip(1))
        .collect();
    let stair_arr = CellArrangement::staircase(big_n);
    let half = backward_sweep(&stair_arr, &staircase_word(&diag)?, Direction::TopRight)?;
    let square = symmetric_completion(&half, big_n)?;
    check_square(&square, m, None)?;
    let d = forward_sweep(&square, Direction::TopLeft)?;
    let word = d.boundary_word_toward(Direction::TopLeft)?;
    let labels = word.labels();
    if mirrored_square_word(&labels[..=big_n]) != labels {
        return Err(Error::precondition("square boundary is not symmetric"));
    }
    let chain = PartitionChain::new(labels[..=big_n].to_vec())?;
    let aug = AugmentedTableau::from_chain(&chain, m, Flavor::Standard)?;
    let t = eject_to_standard(&aug)?;
    let got = check_column_bound(&t.shape(), 2 * o.k())?;
    if got != m {
        return Err(Error::precondition(format!(
            "recovered tableau has {got} odd columns, expected {m}"
        )));
    }
    Ok(t)
}

/// A walk `∅ = λ^0 ⊇ λ^1 ⊆ λ^2 ⊇ ... ⊆ λ^{2n}` in which every step removes
/// or adds a vertical strip (possibly empty), no shape has more than `k`
/// columns, and the last shape is a single column.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedOscillatingTableau {
    shapes: Vec<Partition>,
    k: usize,
}

impl GeneralizedOscillatingTableau {
    pub fn new(shapes: Vec<Partition>, k: usize) -> Result<Self> {
        if shapes.len().is_multiple_of(2) {
            return Err(Error::ChainStep {
                index: shapes.len(),
                reason: "walk must have an even number of steps".into(),
            });
        }
        check_walk(&shapes, k, |i, a, b| {
            if i % 2 == 1 {
                b.strip_type(a).is_vertical()
            } else {
                a.strip_type(b).is_vertical()
            }
        })?;
        Ok(GeneralizedOscillatingTableau { shapes, k })
    }

    pub fn with_minimal_k(shapes: Vec<Partition>) -> Result<Self> {
        let k = shapes.iter().map(Partition::num_columns).max().unwrap_or(0);
        Self::new(shapes, k)
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    /// Number of remove-then-add pairs, which is the alphabet size.
    pub fn len(&self) -> usize {
        self.shapes.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.shapes.last().map_or(0, Partition::len)
    }

    /// Multiplicities `j_1..j_n` of the letters of the matching tableau. The
    /// `i`-th pair of steps accounts for letter `n - i + 1`.
    pub fn content(&self) -> Vec<usize> {
        let n = self.len();
        let mut j = vec![0; n];
        for i in 1..=n {
            let [a, b, c] = [2 * i - 2, 2 * i - 1, 2 * i].map(|t| self.shapes[t].size());
            j[n - i] = a + c - 2 * b;
        }
        j
    }
}

impl fmt::Display for GeneralizedOscillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_shapes(f, &self.shapes)
    }
}

impl fmt::Debug for GeneralizedOscillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.shapes.iter().map(ToString::to_string).collect();
        write!(f, "GenOsc(k={})[{}]", self.k, s.join(" "))
    }
}

impl FromStr for GeneralizedOscillatingTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GeneralizedOscillatingTableau::with_minimal_k(parse_shapes(s)?)
    }
}

/// Intermediate objects of the semistandard bijection.
#[derive(Debug, Clone)]
pub struct SemistandardTrace {
    pub augmented: AugmentedTableau,
    /// Symmetric integer filling of the `N x N` square, `N = n + m`.
    pub square: Filling,
    /// Staircase boundary word `∅, ..., ∅` of length `2N + 1`, including the
    /// two outermost diagonal corners.
    pub word: Vec<Partition>,
}

/// Forced end of the staircase word: `(1^{m-j})` twice for `j = 1..=m`.
fn doubled_column_tail(m: usize) -> impl Iterator<Item = Partition> {
    (0..m)
        .rev()
        .flat_map(|h| [Partition::column(h), Partition::column(h)])
}

/// Semistandard tableau over `1..=n` with columns at most `2k` long to
/// generalized oscillating tableau with `n` pairs of steps.
pub fn ssyt_to_gen_oscillating(
    t: &SemistandardTableau,
    k: usize,
) -> Result<GeneralizedOscillatingTableau> {
    Ok(ssyt_to_gen_oscillating_traced(t, k)?.1)
}

pub fn ssyt_to_gen_oscillating_traced(
    t: &SemistandardTableau,
    k: usize,
) -> Result<(SemistandardTrace, GeneralizedOscillatingTableau)> {
    let n = t.alphabet();
    let m = check_column_bound(&t.shape(), 2 * k)?;
    let augmented = inject_markers_semistandard(t)?;
    let big_n = n + m;
    if big_n == 0 {
        let osc = GeneralizedOscillatingTableau::new(vec![Partition::empty()], k)?;
        let square = Filling::zero(CellArrangement::square(0));
        let word = vec![Partition::empty()];
        return Ok((
            SemistandardTrace {
                augmented,
                square,
                word,
            },
            osc,
        ));
    }
    let chain = augmented.to_chain().into_shapes();
    let square_arr = CellArrangement::square(big_n);
    let word = GeneralizedBoundaryWord::new(&square_arr, mirrored_square_word(&chain))?;
    let square = knuth_backward_sweep(&square_arr, &word, Direction::TopLeft)?;
    check_square(&square, m, None)?;
    let stair = knuth_forward_sweep(&lower_half(&square)?, Direction::TopRight)?;
    let word: Vec<Partition> = std::iter::once(Partition::empty())
        .chain(stair.boundary_word().labels().iter().cloned())
        .chain(std::iter::once(Partition::empty()))
        .collect();
    for (j, want) in doubled_column_tail(m).enumerate() {
        let idx = 2 * n + 1 + j;
        if word[idx] != want {
            return Err(Error::precondition(format!(
                "staircase label {idx} is {}, expected {want}",
                word[idx]
            )));
        }
    }
    let osc = GeneralizedOscillatingTableau::new(word[..=2 * n].to_vec(), k)?;
    if osc.content() != t.content() {
        return Err(Error::precondition(
            "content of the walk differs from the tableau",
        ));
    }
    Ok((
        SemistandardTrace {
            augmented,
            square,
            word,
        },
        osc,
    ))
}

/// Inverse of [`ssyt_to_gen_oscillating`].
pub fn gen_oscillating_to_ssyt(o: &GeneralizedOscillatingTableau) -> Result<SemistandardTableau> {
    let n = o.len();
    let m = o.m();
    let big_n = n + m;
    let word: Vec<Partition> = o
        .shapes()
        .iter()
        .cloned()
        .chain(doubled_column_tail(m))
        .collect();
    debug_assert_eq!(word.len(), 2 * big_n + 1);
    if big_n == 0 {
        return SemistandardTableau::with_alphabet(crate::tableau::Tableau::empty(), 0);
    }
    let stair_arr = CellArrangement::staircase(big_n);
    let stair_word = GeneralizedBoundaryWord::new(&stair_arr, word[1..2 * big_n].to_vec())?;
    let half = knuth_backward_sweep(&stair_arr, &stair_word, Direction::TopRight)?;
    let square = symmetric_completion(&half, big_n)?;
    check_square(&square, m, None)?;
    let d = knuth_forward_sweep(&square, Direction::TopLeft)?;
    let boundary = d.boundary_word();
    let labels = boundary.labels();
    if mirrored_square_word(&labels[..=big_n]) != labels {
        return Err(Error::precondition("square boundary is not symmetric"));
    }
    let chain = PartitionChain::new(labels[..=big_n].to_vec())?;
    let aug = AugmentedTableau::from_chain(&chain, m, Flavor::Semistandard)?;
    let t = eject_to_semistandard(&aug)?;
    let got = check_column_bound(&t.shape(), 2 * o.k())?;
    if got != m {
        return Err(Error::precondition(format!(
            "recovered tableau has {got} odd columns, expected {m}"
        )));
    }
    Ok(t)
}

/// Row and column letters of the square: rows bottom to top and columns right
/// to left run through `I, II, ..., 1, 2, ...`.
pub fn square_letter(index: usize, markers: usize) -> Letter {
    if index < markers {
        Letter::Marker(index + 1)
    } else {
        Letter::Num(index - markers + 1)
    }
}

/// The involution encoded by a symmetric square filling, as sorted pairs
/// `(row letter, column letter)` with the smaller letter first.
pub fn square_involution(square: &Filling, markers: usize) -> Vec<(Letter, Letter)> {
    let n = square.arrangement().width();
    let mut pairs: Vec<(Letter, Letter)> = square
        .ones()
        .into_iter()
        .map(|(x, y)| {
            let a = square_letter(y, markers);
            let b = square_letter(n - 1 - x, markers);
            (a.min(b), a.max(b))
        })
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

/// Inverse Schensted correspondence applied to the pair `(t, t)`: the
/// involution with insertion tableau `t`.
pub fn involution_of(t: &AugmentedTableau) -> Vec<(Letter, Letter)> {
    let mut p = t.tableau().clone();
    let mut q = t.tableau().clone();
    let mut word = Vec::new();
    for letter in t.letters().collect::<Vec<_>>().into_iter().rev() {
        let row = q
            .rows()
            .iter()
            .position(|r| r.last() == Some(&letter))
            .expect("largest recording letter sits at a corner");
        let rows = q.rows_mut();
        rows[row].pop();
        if rows[row].is_empty() {
            rows.pop();
        }
        word.push((letter, reverse_bump(&mut p, row).expect("corner")));
    }
    let mut pairs: Vec<(Letter, Letter)> = word
        .into_iter()
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

/// Splits off the odd columns of a tableau whose columns are at most `2k+1`
/// long: repeatedly removes, by inverse row insertion, the last entry of the
/// right-most odd column. Returns the even-column core (entries keep their
/// values) and the removed values in increasing order.
pub fn odd_bound_reduce(t: &StandardTableau, k: usize) -> Result<(StandardTableau, Vec<usize>)> {
    check_column_bound(&t.shape(), 2 * k + 1)?;
    let mut core = t.tableau().clone();
    let mut marks = Vec::new();
    loop {
        let cols = core.shape().column_lengths();
        let Some(c) = cols.iter().rposition(|&l| l % 2 == 1) else {
            break;
        };
        marks.push(reverse_bump(&mut core, cols[c] - 1)?);
    }
    marks.sort_unstable();
    Ok((StandardTableau::from_tableau(core)?, marks))
}

/// Inverse of [`odd_bound_reduce`]: row-inserts the marks into the core in
/// increasing order.
pub fn odd_bound_expand(
    core: &StandardTableau,
    marks: &[usize],
    k: usize,
) -> Result<StandardTableau> {
    let shape = core.shape();
    if check_column_bound(&shape, 2 * k)? != 0 {
        return Err(Error::precondition(format!(
            "core shape {shape} has odd columns"
        )));
    }
    let mut sorted = marks.to_vec();
    sorted.sort_unstable();
    let n = core.size() + marks.len();
    let mut all: Vec<usize> = core
        .tableau()
        .entries()
        .chain(sorted.iter().copied())
        .collect();
    all.sort_unstable();
    if all.iter().enumerate().any(|(i, &v)| v != i + 1) {
        return Err(Error::precondition(format!(
            "core entries and marks must partition 1..={n}"
        )));
    }
    let mut t = core.tableau().clone();
    for &v in &sorted {
        row_insert(&mut t, v);
    }
    let t = StandardTableau::from_tableau(t)?;
    let reduced = odd_bound_reduce(&t, k)?;
    if reduced.0 != *core || reduced.1 != sorted {
        return Err(Error::precondition(
            "marks and core are not the image of any tableau".to_string(),
        ));
    }
    Ok(t)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::partition::p;
    use proptest::strategy::Strategy;

    pub(crate) fn running_example() -> StandardTableau {
        "1 3 4 8\n2 6 7\n5 10\n9 12\n11\n".parse().unwrap()
    }

    fn shapes(list: &[&[usize]]) -> Vec<Partition> {
        list.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn running_example_trace() {
        let (trace, osc) = syt_to_oscillating_traced(&running_example(), 3).unwrap();
        let diag = shapes(&[
            &[],
            &[1],
            &[1, 1],
            &[2, 1],
            &[2, 2],
            &[2, 1],
            &[3, 1],
            &[3, 1, 1],
            &[3, 1, 1, 1],
            &[3, 1, 1],
            &[3, 1],
            &[2, 1],
            &[1, 1],
            &[1],
            &[],
        ]);
        assert_eq!(trace.diagonal, diag);
        assert_eq!(osc.shapes(), &diag[..=12]);
        assert_eq!(oscillating_to_syt(&osc).unwrap(), running_example());
        let want = vec![
            (Letter::Marker(1), Letter::Num(5)),
            (Letter::Marker(2), Letter::Num(11)),
            (Letter::Num(1), Letter::Num(9)),
            (Letter::Num(2), Letter::Num(6)),
            (Letter::Num(3), Letter::Num(7)),
            (Letter::Num(4), Letter::Num(12)),
            (Letter::Num(8), Letter::Num(10)),
        ];
        assert_eq!(square_involution(&trace.square, 2), want);
        assert_eq!(involution_of(&trace.augmented), want);
    }

    #[test]
    fn tiny_cases() {
        let t = StandardTableau::new(vec![vec![1]]).unwrap();
        let o = syt_to_oscillating(&t, 1).unwrap();
        assert_eq!(o.shapes(), &shapes(&[&[], &[1]]));
        assert_eq!(oscillating_to_syt(&o).unwrap(), t);
        let t = StandardTableau::new(vec![vec![1], vec![2]]).unwrap();
        let o = syt_to_oscillating(&t, 1).unwrap();
        assert_eq!(o.shapes(), &shapes(&[&[], &[1], &[]]));
        assert_eq!(oscillating_to_syt(&o).unwrap(), t);
        let e = StandardTableau::empty();
        let o = syt_to_oscillating(&e, 1).unwrap();
        assert_eq!(o.shapes(), &shapes(&[&[]]));
        assert_eq!(oscillating_to_syt(&o).unwrap(), e);
        let t = StandardTableau::new(vec![vec![1], vec![2], vec![3]]).unwrap();
        assert!(syt_to_oscillating(&t, 1).is_err());
    }

    #[test]
    fn oscillating_validation() {
        assert!(OscillatingTableau::new(shapes(&[&[], &[1], &[2]]), 1).is_err());
        assert!(OscillatingTableau::new(shapes(&[&[], &[2]]), 2).is_err());
        assert!(OscillatingTableau::new(shapes(&[&[1]]), 2).is_err());
        let o: OscillatingTableau = "[]\n[1]\n[1,1]\n".parse().unwrap();
        assert_eq!(o.m(), 2);
        assert_eq!(o.to_string(), "[]\n[1]\n[1,1]\n");
    }

    #[test]
    fn odd_bound_examples() {
        let t = StandardTableau::new(vec![vec![1], vec![2], vec![3]]).unwrap();
        let (core, marks) = odd_bound_reduce(&t, 1).unwrap();
        assert_eq!(core.size(), 2);
        assert_eq!(core.shape().column_stats().num_odd_columns, 0);
        assert_eq!(marks.len(), 1);
        assert_eq!(odd_bound_expand(&core, &marks, 1).unwrap(), t);
        let even = StandardTableau::new(vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(odd_bound_reduce(&even, 1).unwrap(), (even.clone(), vec![]));
        let (c, _) = odd_bound_reduce(&StandardTableau::new(vec![vec![1]]).unwrap(), 0).unwrap();
        assert_eq!(odd_bound_expand(&c, &[1], 0).unwrap().rows(), &[vec![1]]);
    }

    fn knuth_example() -> SemistandardTableau {
        "1 1 1 1 1 3 3\n2 2 3 3 4 4\n3 3\n4\n".parse().unwrap()
    }

    #[test]
    fn knuth_example_trace() {
        let (trace, osc) = ssyt_to_gen_oscillating_traced(&knuth_example(), 2).unwrap();
        assert_eq!(
            trace.augmented.to_string(),
            "I II 1 1 1 3 3\n1 1 2 3 3 4 4\n2 3\n3 4\n"
        );
        let want = Filling::from_rows_bottom_up(&[
            vec![0, 0, 0, 1, 0, 0],
            vec![0, 1, 0, 0, 0, 0],
            vec![1, 2, 1, 0, 0, 1],
            vec![0, 1, 0, 1, 0, 0],
            vec![2, 0, 1, 2, 1, 0],
            vec![0, 2, 0, 1, 0, 0],
        ])
        .unwrap();
        assert_eq!(trace.square, want);
        let expected = shapes(&[
            &[],
            &[],
            &[1, 1, 1],
            &[1],
            &[2, 1, 1, 1],
            &[1, 1, 1, 1],
            &[2, 1, 1, 1],
            &[1],
            &[1, 1],
        ]);
        assert_eq!(osc.shapes(), &expected[..]);
        assert_eq!(osc.content(), knuth_example().content());
        assert_eq!(gen_oscillating_to_ssyt(&osc).unwrap(), knuth_example());
    }

    #[test]
    fn generalized_validation() {
        assert!(GeneralizedOscillatingTableau::new(shapes(&[&[], &[1]]), 1).is_err());
        assert!(GeneralizedOscillatingTableau::new(shapes(&[&[], &[], &[2]]), 2).is_err());
        let o = GeneralizedOscillatingTableau::new(shapes(&[&[], &[], &[1, 1]]), 1).unwrap();
        assert_eq!(o.content(), vec![2]);
        let o: GeneralizedOscillatingTableau = "[]\n[]\n[1]\n[]\n[]\n".parse().unwrap();
        assert_eq!(o.content(), vec![1, 1]);
        assert_eq!(o.m(), 0);
    }

    #[test]
    fn standard_case_specializes() {
        for n in 0..=7 {
            for t in crate::jdt::tests::all_syt(n) {
                let k = t
                    .shape()
                    .column_lengths()
                    .first()
                    .map_or(0, |&l| l.div_ceil(2))
                    .max(1);
                let o = syt_to_oscillating(&t, k).unwrap();
                let ss = t.to_semistandard().unwrap();
                let g = ssyt_to_gen_oscillating(&ss, k).unwrap();
                let even: Vec<Partition> = g.shapes().iter().step_by(2).cloned().collect();
                assert_eq!(even, o.shapes(), "{t}");
                assert_eq!(gen_oscillating_to_ssyt(&g).unwrap(), ss);
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn semistandard_roundtrip(
            a in (1usize..4, 1usize..5).prop_flat_map(|(r, c)| {
                proptest::collection::vec(proptest::collection::vec(0usize..3, c), r)
            })
        ) {
            let (t, _) = crate::insertion::rsk_matrix(&a);
            let k = t.shape().column_lengths().first().map_or(0, |&l| l.div_ceil(2)).max(1);
            let o = ssyt_to_gen_oscillating(&t, k).unwrap();
            proptest::prop_assert_eq!(o.content(), t.content());
            proptest::prop_assert!(o.shapes().iter().all(|s| s.num_columns() <= k));
            proptest::prop_assert_eq!(gen_oscillating_to_ssyt(&o).unwrap(), t);
        }
    }
}
