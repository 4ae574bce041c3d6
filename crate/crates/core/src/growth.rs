//! Fomin growth diagrams on left- and bottom-justified cell arrangements.
//!
//! Coordinates are Cartesian: cell `(x, y)` is column `x` from the left and
//! row `y` from the bottom; corner `(x, y)` is the lower-left corner of cell
//! `(x, y)`. The canonical sweep grows from the empty labels on the left and
//! bottom edges toward the top-right boundary; other directions are handled
//! by reflecting rectangular arrangements onto the canonical one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::insertion::schensted;
use crate::partition::Partition;
use crate::tableau::{PartitionChain, StandardTableau};

/// Column heights of a left- and bottom-justified arrangement, weakly
/// decreasing from left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CellArrangement {
    heights: Vec<usize>,
}

impl CellArrangement {
    /// Trailing zero-height columns are kept: they still contribute a
    /// horizontal boundary edge.
    pub fn new(heights: Vec<usize>) -> Result<Self> {
        if let Some(i) = heights.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::precondition(format!(
                "column {} is taller than column {}",
                i + 1,
                i
            )));
        }
        Ok(CellArrangement { heights })
    }

    pub fn rectangle(width: usize, height: usize) -> Self {
        CellArrangement {
            heights: vec![height; width],
        }
    }

    pub fn square(n: usize) -> Self {
        Self::rectangle(n, n)
    }

    /// Columns of heights `n-1, n-2, ..., 1`: the cells strictly below the
    /// anti-diagonal of the `n x n` square.
    pub fn staircase(n: usize) -> Self {
        CellArrangement {
            heights: (1..n).rev().collect(),
        }
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn width(&self) -> usize {
        self.heights.len()
    }

    pub fn height(&self) -> usize {
        self.heights.first().copied().unwrap_or(0)
    }

    pub fn column_height(&self, x: usize) -> usize {
        self.heights.get(x).copied().unwrap_or(0)
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        y < self.column_height(x)
    }

    pub fn num_cells(&self) -> usize {
        self.heights.iter().sum()
    }

    pub fn is_rectangle(&self) -> bool {
        self.heights.windows(2).all(|w| w[0] == w[1])
    }

    /// Highest corner in corner column `x`.
    pub fn corner_top(&self, x: usize) -> usize {
        if x == 0 {
            self.height()
        } else {
            self.column_height(x - 1)
        }
    }

    /// Corners along the top-right boundary, from the top-left corner
    /// `(0, height)` to the bottom-right corner `(width, 0)`.
    pub fn boundary_corners(&self) -> Vec<(usize, usize)> {
        let w = self.width();
        let mut out = Vec::with_capacity(w + self.height() + 1);
        for x in 0..=w {
            let low = self.column_height(x);
            for y in (low..=self.corner_top(x)).rev() {
                out.push((x, y));
            }
        }
        out
    }

    /// For each step of [`Self::boundary_corners`], whether it runs along a
    /// horizontal edge (to the right) rather than down a vertical one.
    pub fn boundary_steps(&self) -> Vec<Edge> {
        self.boundary_corners()
            .windows(2)
            .map(|w| {
                if w[0].1 == w[1].1 {
                    Edge::Horizontal
                } else {
                    Edge::Vertical
                }
            })
            .collect()
    }

    /// Mirror image under transposition.
    pub fn transpose(&self) -> Self {
        let conj = Partition::new(
            self.heights
                .iter()
                .copied()
                .filter(|&h| h > 0)
                .collect::<Vec<_>>(),
        )
        .expect("weakly decreasing")
        .conjugate();
        CellArrangement {
            heights: conj.parts().to_vec(),
        }
    }
}

impl TryFrom<Vec<usize>> for CellArrangement {
    type Error = Error;

    fn try_from(h: Vec<usize>) -> Result<Self> {
        CellArrangement::new(h)
    }
}

impl From<CellArrangement> for Vec<usize> {
    fn from(a: CellArrangement) -> Self {
        a.heights
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Edge {
    Horizontal,
    Vertical,
}

/// The corner toward which a sweep grows. The empty labels sit on the two
/// opposite sides. Every direction other than `TopRight` is a reflection and
/// requires a rectangular arrangement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    TopRight,
    TopLeft,
    BottomRight,
    BottomLeft,
}

impl Direction {
    pub(crate) fn flips(self) -> (bool, bool) {
        match self {
            Direction::TopRight => (false, false),
            Direction::TopLeft => (true, false),
            Direction::BottomRight => (false, true),
            Direction::BottomLeft => (true, true),
        }
    }
}

/// Reflection between an arrangement and the canonical sweep frame.
#[derive(Debug, Clone, Copy)]
struct Frame {
    width: usize,
    height: usize,
    flip_x: bool,
    flip_y: bool,
}

impl Frame {
    fn new(arr: &CellArrangement, dir: Direction) -> Result<Self> {
        let (flip_x, flip_y) = dir.flips();
        if (flip_x || flip_y) && !arr.is_rectangle() {
            return Err(Error::precondition(format!(
                "direction {dir:?} requires a rectangular arrangement"
            )));
        }
        Ok(Frame {
            width: arr.width(),
            height: arr.height(),
            flip_x,
            flip_y,
        })
    }

    fn cell(&self, x: usize, y: usize) -> (usize, usize) {
        (
            if self.flip_x { self.width - 1 - x } else { x },
            if self.flip_y { self.height - 1 - y } else { y },
        )
    }

    fn corner(&self, x: usize, y: usize) -> (usize, usize) {
        (
            if self.flip_x { self.width - x } else { x },
            if self.flip_y { self.height - y } else { y },
        )
    }
}

/// Non-negative integer entries on the cells of an arrangement.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Filling {
    arr: CellArrangement,
    cols: Vec<Vec<usize>>,
}

impl Filling {
    pub fn zero(arr: CellArrangement) -> Self {
        let cols = arr.heights().iter().map(|&h| vec![0; h]).collect();
        Filling { arr, cols }
    }

    pub fn from_entries(
        arr: CellArrangement,
        entries: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self> {
        let mut f = Filling::zero(arr);
        for (x, y, v) in entries {
            f.set(x, y, v)?;
        }
        Ok(f)
    }

    /// Square filling from matrix rows, `rows[y][x]`, bottom row first.
    pub fn from_rows_bottom_up(rows: &[Vec<usize>]) -> Result<Self> {
        let h = rows.len();
        let w = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != w) {
            return Err(Error::precondition("ragged matrix"));
        }
        let entries = rows
            .iter()
            .enumerate()
            .flat_map(|(y, r)| r.iter().enumerate().map(move |(x, &v)| (x, y, v)));
        Filling::from_entries(CellArrangement::rectangle(w, h), entries)
    }

    /// Permutation matrix of `perm` (values `1..=n`): a one in cell
    /// `(i, perm[i] - 1)`.
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &v in perm {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::precondition(format!(
                    "{perm:?} is not a permutation"
                )));
            }
        }
        Filling::from_entries(
            CellArrangement::square(n),
            perm.iter().enumerate().map(|(i, &v)| (i, v - 1, 1)),
        )
    }

    pub fn arrangement(&self) -> &CellArrangement {
        &self.arr
    }

    pub fn get(&self, x: usize, y: usize) -> usize {
        self.cols
            .get(x)
            .and_then(|c| c.get(y))
            .copied()
            .unwrap_or(0)
    }

    pub fn set(&mut self, x: usize, y: usize, v: usize) -> Result<()> {
        if !self.arr.contains(x, y) {
            return Err(Error::Filling {
                x,
                y,
                reason: "cell outside the arrangement".into(),
            });
        }
        self.cols[x][y] = v;
        Ok(())
    }

    /// Nonzero cells `(x, y, value)` in column-major order.
    pub fn nonzero(&self) -> Vec<(usize, usize, usize)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(x, c)| {
                c.iter()
                    .enumerate()
                    .filter(|(_, &v)| v > 0)
                    .map(move |(y, &v)| (x, y, v))
            })
            .collect()
    }

    pub fn ones(&self) -> Vec<(usize, usize)> {
        self.nonzero().into_iter().map(|(x, y, _)| (x, y)).collect()
    }

    pub fn total(&self) -> usize {
        self.cols.iter().flatten().sum()
    }

    pub fn row_sum(&self, y: usize) -> usize {
        self.cols.iter().filter_map(|c| c.get(y)).sum()
    }

    pub fn column_sum(&self, x: usize) -> usize {
        self.cols.get(x).map_or(0, |c| c.iter().sum())
    }

    /// Entries in `{0, 1}` with at most one `1` per row and per column.
    pub fn check_standard_01(&self) -> Result<()> {
        let mut row_owner: Vec<Option<usize>> = vec![None; self.arr.height()];
        for (x, col) in self.cols.iter().enumerate() {
            let mut seen = None;
            for (y, &v) in col.iter().enumerate() {
                let bad = |reason: String| Error::Filling { x, y, reason };
                if v > 1 {
                    return Err(bad(format!("entry {v} in a 0-1 filling")));
                }
                if v == 1 {
                    if let Some(other) = seen {
                        return Err(bad(format!(
                            "second 1 in column {x} (first in row {other})"
                        )));
                    }
                    if let Some(other) = row_owner[y] {
                        return Err(bad(format!(
                            "second 1 in row {y} (first in column {other})"
                        )));
                    }
                    seen = Some(y);
                    row_owner[y] = Some(x);
                }
            }
        }
        Ok(())
    }

    pub fn is_standard_01(&self) -> bool {
        self.check_standard_01().is_ok()
    }

    pub fn transpose(&self) -> Filling {
        let mut t = Filling::zero(self.arr.transpose());
        for (x, y, v) in self.nonzero() {
            t.cols[y][x] = v;
        }
        t
    }

    /// For square fillings: invariance under `(x, y) -> (y, x)`.
    pub fn is_symmetric(&self) -> bool {
        self.arr.is_rectangle()
            && self.arr.width() == self.arr.height()
            && self.nonzero().iter().all(|&(x, y, v)| self.get(y, x) == v)
    }

    fn reflect(&self, frame: &Frame) -> Filling {
        let mut out = Filling::zero(self.arr.clone());
        for (x, y, v) in self.nonzero() {
            let (a, b) = frame.cell(x, y);
            out.cols[a][b] = v;
        }
        out
    }
}

impl fmt::Display for Filling {
    /// Heights on the first line, then one `x y value` line per nonzero cell.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let heights: Vec<String> = self.arr.heights().iter().map(ToString::to_string).collect();
        writeln!(f, "{}", heights.join(" "))?;
        for (x, y, v) in self.nonzero() {
            writeln!(f, "{x} {y} {v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Filling{:?}{:?}", self.arr.heights(), self.nonzero())
    }
}

impl FromStr for Filling {
    type Err = Error;

    /// Lines starting with `#` are skipped; the first remaining line (which
    /// may be blank for the empty arrangement) holds the column heights.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim_start().starts_with('#'));
        let (hline, heights) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing arrangement heights"))?;
        let heights = parse_numbers(heights, hline + 1)?;
        let arr =
            CellArrangement::new(heights).map_err(|e| Error::parse(hline + 1, e.to_string()))?;
        let mut f = Filling::zero(arr);
        for (i, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let nums = parse_numbers(line, i + 1)?;
            let [x, y, v] = nums[..] else {
                return Err(Error::parse(i + 1, "expected `x y value`"));
            };
            f.set(x, y, v)
                .map_err(|e| Error::parse(i + 1, e.to_string()))?;
        }
        Ok(f)
    }
}

pub(crate) fn parse_numbers(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|e| Error::parse(lineno, format!("{t:?}: {e}")))
        })
        .collect()
}

/// Labels along the top-right boundary of an arrangement, in the order of
/// [`CellArrangement::boundary_corners`] (in the canonical frame of the sweep
/// direction).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundaryWord {
    labels: Vec<Partition>,
    steps: Vec<Edge>,
}

impl BoundaryWord {
    /// Checks that the word starts and ends at the empty partition, grows by
    /// at most one square along horizontal edges and shrinks by at most one
    /// along vertical edges.
    pub fn new(arr: &CellArrangement, labels: Vec<Partition>) -> Result<Self> {
        let steps = arr.boundary_steps();
        if labels.len() != steps.len() + 1 {
            return Err(Error::ChainStep {
                index: 0,
                reason: format!(
                    "boundary has {} corners, word has {} labels",
                    steps.len() + 1,
                    labels.len()
                ),
            });
        }
        for (end, idx) in [
            (&labels[0], 0),
            (labels.last().expect("nonempty"), labels.len() - 1),
        ] {
            if !end.is_empty() {
                return Err(Error::ChainStep {
                    index: idx,
                    reason: format!("boundary word must end at the empty partition, found {end}"),
                });
            }
        }
        for (i, (w, e)) in labels.windows(2).zip(&steps).enumerate() {
            let (small, big) = match e {
                Edge::Horizontal => (&w[0], &w[1]),
                Edge::Vertical => (&w[1], &w[0]),
            };
            if !small.is_contained_in(big) || big.size() > small.size() + 1 {
                return Err(Error::ChainStep {
                    index: i + 1,
                    reason: format!("{} -> {} along a {e:?} edge", w[0], w[1]),
                });
            }
        }
        Ok(BoundaryWord { labels, steps })
    }

    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn steps(&self) -> &[Edge] {
        &self.steps
    }
}

/// Forward local rule: the label of the top-right corner of a cell from the
/// labels `rho` (bottom-left), `mu` (bottom-right), `nu` (top-left) and
/// whether the cell holds a one.
pub fn forward_local(
    rho: &Partition,
    mu: &Partition,
    nu: &Partition,
    cross: bool,
) -> Result<Partition> {
    for (name, side) in [("bottom-right", mu), ("top-left", nu)] {
        if !rho.is_contained_in(side) || side.size() > rho.size() + 1 {
            return Err(Error::MalformedCell(format!(
                "{name} label {side} is not {rho} or one square larger"
            )));
        }
    }
    if cross && (rho != mu || rho != nu) {
        return Err(Error::MalformedCell(format!(
            "a one requires equal labels, found {rho}, {mu}, {nu}"
        )));
    }
    let out = match (rho == mu, rho == nu) {
        (true, true) if cross => rho.with_cell_added(0).expect("first row is addable"),
        (true, true) => rho.clone(),
        (true, false) => nu.clone(),
        (false, true) => mu.clone(),
        (false, false) if mu != nu => mu.union(nu),
        (false, false) => {
            let row = rho.single_differing_row(mu).expect("one square apart");
            mu.with_cell_added(row + 1).expect("next row is addable")
        }
    };
    Ok(out)
}

/// Backward local rule: recovers the bottom-left label and the cell entry
/// from `lambda` (top-right), `mu` (bottom-right) and `nu` (top-left).
pub fn backward_local(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<(Partition, bool)> {
    for (name, side) in [("bottom-right", mu), ("top-left", nu)] {
        if !side.is_contained_in(lambda) || lambda.size() > side.size() + 1 {
            return Err(Error::MalformedCell(format!(
                "{name} label {side} is not {lambda} or one square smaller"
            )));
        }
    }
    let out = match (lambda == mu, lambda == nu) {
        (true, true) => (lambda.clone(), false),
        (true, false) => (nu.clone(), false),
        (false, true) => (mu.clone(), false),
        (false, false) if mu != nu => (mu.intersection(nu), false),
        (false, false) => match mu.single_differing_row(lambda).expect("one square apart") {
            0 => (mu.clone(), true),
            row => (
                mu.with_cell_removed(row - 1)
                    .expect("row above is removable"),
                false,
            ),
        },
    };
    Ok(out)
}

/// Corner labels of an arrangement together with the filling they encode.
#[derive(Clone, PartialEq, Eq)]
pub struct GrowthDiagram {
    filling: Filling,
    labels: Vec<Vec<Partition>>,
}

/// Flat form of a growth diagram, for golden files and inspection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramDump {
    pub heights: Vec<usize>,
    pub entries: Vec<(usize, usize, usize)>,
    pub labels: Vec<(usize, usize, Partition)>,
}

impl GrowthDiagram {
    pub fn filling(&self) -> &Filling {
        &self.filling
    }

    pub fn arrangement(&self) -> &CellArrangement {
        self.filling.arrangement()
    }

    /// Label of corner `(x, y)`.
    pub fn label(&self, x: usize, y: usize) -> &Partition {
        &self.labels[x][y]
    }

    pub fn try_label(&self, x: usize, y: usize) -> Option<&Partition> {
        self.labels.get(x).and_then(|c| c.get(y))
    }

    /// Labels along the top-right boundary.
    pub fn boundary_labels(&self) -> Vec<Partition> {
        self.arrangement()
            .boundary_corners()
            .into_iter()
            .map(|(x, y)| self.labels[x][y].clone())
            .collect()
    }

    pub fn boundary_word(&self) -> BoundaryWord {
        BoundaryWord::new(self.arrangement(), self.boundary_labels())
            .expect("sweeps produce valid boundary words")
    }

    /// The boundary word as read in the canonical frame of `dir`.
    pub fn boundary_word_toward(&self, dir: Direction) -> Result<BoundaryWord> {
        let frame = Frame::new(self.arrangement(), dir)?;
        let labels = self
            .arrangement()
            .boundary_corners()
            .into_iter()
            .map(|(x, y)| {
                let (a, b) = frame.corner(x, y);
                self.labels[a][b].clone()
            })
            .collect();
        BoundaryWord::new(self.arrangement(), labels)
    }

    pub fn dump(&self) -> DiagramDump {
        DiagramDump {
            heights: self.arrangement().heights().to_vec(),
            entries: self.filling.nonzero(),
            labels: self
                .labels
                .iter()
                .enumerate()
                .flat_map(|(x, c)| c.iter().enumerate().map(move |(y, l)| (x, y, l.clone())))
                .collect(),
        }
    }

    /// Verifies the local rules on every cell (with crosses from the filling).
    pub fn check_local_rules(&self) -> Result<()> {
        let arr = self.arrangement();
        for x in 0..arr.width() {
            for y in 0..arr.column_height(x) {
                let l = &self.labels;
                let want = forward_local(
                    &l[x][y],
                    &l[x + 1][y],
                    &l[x][y + 1],
                    self.filling.get(x, y) == 1,
                )
                .map_err(|e| Error::Filling {
                    x,
                    y,
                    reason: e.to_string(),
                })?;
                if want != l[x + 1][y + 1] {
                    return Err(Error::Filling {
                        x,
                        y,
                        reason: format!("label {} should be {want}", l[x + 1][y + 1]),
                    });
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for GrowthDiagram {
    /// Filling in its text form, then one `x y label` line per corner.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.filling)?;
        writeln!(f, "labels")?;
        for (x, col) in self.labels.iter().enumerate() {
            for (y, l) in col.iter().enumerate() {
                writeln!(f, "{x} {y} {l}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GrowthDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn empty_labels(arr: &CellArrangement) -> Vec<Vec<Partition>> {
    (0..=arr.width())
        .map(|x| vec![Partition::empty(); arr.corner_top(x) + 1])
        .collect()
}

fn forward_kernel(f: &Filling) -> Result<Vec<Vec<Partition>>> {
    let arr = f.arrangement();
    let mut labels = empty_labels(arr);
    for x in 0..arr.width() {
        for y in 0..arr.column_height(x) {
            let lam = forward_local(
                &labels[x][y],
                &labels[x + 1][y],
                &labels[x][y + 1],
                f.get(x, y) == 1,
            )
            .map_err(|e| Error::Filling {
                x,
                y,
                reason: e.to_string(),
            })?;
            labels[x + 1][y + 1] = lam;
        }
    }
    Ok(labels)
}

fn backward_kernel(
    arr: &CellArrangement,
    word: &BoundaryWord,
) -> Result<(Filling, Vec<Vec<Partition>>)> {
    let mut labels = empty_labels(arr);
    for ((x, y), l) in arr.boundary_corners().into_iter().zip(word.labels()) {
        labels[x][y] = l.clone();
    }
    let mut f = Filling::zero(arr.clone());
    for x in (0..arr.width()).rev() {
        for y in (0..arr.column_height(x)).rev() {
            let (rho, cross) =
                backward_local(&labels[x + 1][y + 1], &labels[x + 1][y], &labels[x][y + 1])
                    .map_err(|e| Error::Reconstruction {
                        x,
                        y,
                        reason: e.to_string(),
                    })?;
            if (x == 0 || y == 0) && !rho.is_empty() {
                return Err(Error::Reconstruction {
                    x,
                    y,
                    reason: format!("edge corner would carry {rho} instead of the empty partition"),
                });
            }
            labels[x][y] = rho;
            if cross {
                f.cols[x][y] = 1;
            }
        }
    }
    f.check_standard_01().map_err(|e| match e {
        Error::Filling { x, y, reason } => Error::Reconstruction { x, y, reason },
        other => other,
    })?;
    Ok((f, labels))
}

fn unreflect_labels(
    arr: &CellArrangement,
    frame: &Frame,
    canon: &[Vec<Partition>],
) -> Vec<Vec<Partition>> {
    let mut labels = empty_labels(arr);
    for (x, col) in labels.iter_mut().enumerate() {
        for (y, l) in col.iter_mut().enumerate() {
            let (a, b) = frame.corner(x, y);
            *l = canon[a][b].clone();
        }
    }
    labels
}

/// Computes all corner labels from a standard 0-1 filling, growing toward
/// `dir` from empty labels on the opposite two sides.
pub fn forward_sweep(f: &Filling, dir: Direction) -> Result<GrowthDiagram> {
    f.check_standard_01()?;
    let arr = f.arrangement();
    let frame = Frame::new(arr, dir)?;
    let canon = forward_kernel(&f.reflect(&frame))?;
    Ok(GrowthDiagram {
        filling: f.clone(),
        labels: unreflect_labels(arr, &frame, &canon),
    })
}

/// Reconstructs the diagram from the boundary word read in the canonical
/// frame of `dir`.
pub fn backward_sweep_diagram(
    arr: &CellArrangement,
    word: &BoundaryWord,
    dir: Direction,
) -> Result<GrowthDiagram> {
    let frame = Frame::new(arr, dir)?;
    if word.steps() != arr.boundary_steps() {
        return Err(Error::precondition(
            "boundary word belongs to another arrangement",
        ));
    }
    let (canon_f, canon_labels) = backward_kernel(arr, word).map_err(|e| match e {
        Error::Reconstruction { x, y, reason } => {
            let (a, b) = frame.cell(x, y);
            Error::Reconstruction { x: a, y: b, reason }
        }
        other => other,
    })?;
    Ok(GrowthDiagram {
        filling: canon_f.reflect(&frame),
        labels: unreflect_labels(arr, &frame, &canon_labels),
    })
}

/// The unique standard 0-1 filling whose forward sweep toward `dir`
/// reproduces `word`.
pub fn backward_sweep(
    arr: &CellArrangement,
    word: &BoundaryWord,
    dir: Direction,
) -> Result<Filling> {
    Ok(backward_sweep_diagram(arr, word, dir)?.filling)
}

/// Largest number of ones the Greene oracle accepts in a region.
pub const GREENE_CAPACITY: usize = 16;

/// Brute-force Greene invariants of the region left of and below `corner`:
/// `ne[k-1]` is the largest union of `k` north-east chains of ones, `se[k-1]`
/// the largest union of `k` south-east chains, for `k = 1..=ones`.
pub fn greene_profile(f: &Filling, corner: (usize, usize)) -> Result<(Vec<usize>, Vec<usize>)> {
    let pts: Vec<(usize, usize)> = f
        .ones()
        .into_iter()
        .filter(|&(x, y)| x < corner.0 && y < corner.1)
        .collect();
    let oracle = GreeneOracle::new(&pts)?;
    Ok(oracle.profile(u32::MAX))
}

/// Greene invariants for a single `k`.
pub fn greene_ranks_bruteforce(
    f: &Filling,
    corner: (usize, usize),
    k: usize,
) -> Result<(usize, usize)> {
    let (ne, se) = greene_profile(f, corner)?;
    let at = |v: &[usize]| {
        if k == 0 {
            0
        } else {
            v.get(k - 1).or(v.last()).copied().unwrap_or(0)
        }
    };
    Ok((at(&ne), at(&se)))
}

/// Longest-chain tables over all subsets of a point set.
///
/// A subset is a union of `k` north-east chains exactly when its longest
/// south-east chain has at most `k` points (and symmetrically), so the
/// Greene invariants are maxima of subset sizes under a chain-length bound.
pub struct GreeneOracle {
    n: usize,
    longest_ne: Vec<u8>,
    longest_se: Vec<u8>,
}

impl GreeneOracle {
    /// Points must have distinct x and distinct y coordinates.
    pub fn new(pts: &[(usize, usize)]) -> Result<Self> {
        let n = pts.len();
        if n > GREENE_CAPACITY {
            return Err(Error::Capacity {
                ones: n,
                limit: GREENE_CAPACITY,
            });
        }
        let mut sorted = pts.to_vec();
        sorted.sort_unstable();
        let ys: Vec<usize> = sorted.iter().map(|p| p.1).collect();
        let size = 1usize << n;
        let mut longest_ne = vec![0u8; size];
        let mut longest_se = vec![0u8; size];
        let mut seq = Vec::with_capacity(n);
        for mask in 1..size {
            seq.clear();
            seq.extend((0..n).filter(|i| mask >> i & 1 == 1).map(|i| ys[i]));
            longest_ne[mask] = lis(seq.iter().copied()) as u8;
            longest_se[mask] = lis(seq.iter().map(|&y| usize::MAX - y)) as u8;
        }
        Ok(GreeneOracle {
            n,
            longest_ne,
            longest_se,
        })
    }

    /// Profiles restricted to the points selected by `region` (bit `i` is the
    /// `i`-th point in `(x, y)` order).
    pub fn profile(&self, region: u32) -> (Vec<usize>, Vec<usize>) {
        let region = region as usize & ((1usize << self.n) - 1);
        let ones = region.count_ones() as usize;
        // best_*[j]: largest subset whose longest opposite chain is exactly j.
        let mut best_ne = vec![0usize; ones + 1];
        let mut best_se = vec![0usize; ones + 1];
        let mut sub = region;
        loop {
            let c = sub.count_ones() as usize;
            let se = self.longest_se[sub] as usize;
            let ne = self.longest_ne[sub] as usize;
            best_ne[se] = best_ne[se].max(c);
            best_se[ne] = best_se[ne].max(c);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & region;
        }
        let prefix = |v: Vec<usize>| {
            v.into_iter()
                .scan(0, |m, x| {
                    *m = (*m).max(x);
                    Some(*m)
                })
                .skip(1)
                .collect::<Vec<_>>()
        };
        (prefix(best_ne), prefix(best_se))
    }
}

/// Length of the longest strictly increasing subsequence.
fn lis(seq: impl Iterator<Item = usize>) -> usize {
    let mut tails: Vec<usize> = Vec::new();
    for v in seq {
        let pos = tails.partition_point(|&t| t < v);
        if pos == tails.len() {
            tails.push(v);
        } else {
            tails[pos] = v;
        }
    }
    tails.len()
}

/// Checks every corner label of `d` against the Greene oracle: the first `k`
/// parts of the label sum to the `k`-chain north-east maximum, and the first
/// `k` parts of its conjugate to the south-east maximum.
pub fn check_greene(d: &GrowthDiagram) -> Result<()> {
    let f = d.filling();
    let mut pts = f.ones();
    pts.sort_unstable();
    let oracle = GreeneOracle::new(&pts)?;
    for (x, col) in d.labels.iter().enumerate() {
        for (y, label) in col.iter().enumerate() {
            let region = pts
                .iter()
                .enumerate()
                .filter(|(_, &(px, py))| px < x && py < y)
                .fold(0u32, |m, (i, _)| m | 1 << i);
            let (ne, se) = oracle.profile(region);
            let conj = label.conjugate();
            for k in 1..=ne.len().max(label.len()).max(conj.len()) {
                let want_ne: usize = label.parts().iter().take(k).sum();
                let want_se: usize = conj.parts().iter().take(k).sum();
                let got_ne = ne.get(k - 1).or(ne.last()).copied().unwrap_or(0);
                let got_se = se.get(k - 1).or(se.last()).copied().unwrap_or(0);
                if want_ne != got_ne || want_se != got_se {
                    return Err(Error::Filling {
                        x,
                        y,
                        reason: format!(
                            "label {label} disagrees with chain maxima at k={k}: ne {got_ne}, se {got_se}"
                        ),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Both tableaux from the growth diagram of the permutation matrix: `P` is
/// read up the right edge, `Q` along the top edge.
pub fn rs_correspondence(perm: &[usize]) -> Result<(StandardTableau, StandardTableau)> {
    let n = perm.len();
    let d = forward_sweep(&Filling::permutation(perm)?, Direction::TopRight)?;
    let p = PartitionChain::new((0..=n).map(|y| d.label(n, y).clone()).collect())?;
    let q = PartitionChain::new((0..=n).map(|x| d.label(x, n).clone()).collect())?;
    Ok((
        StandardTableau::from_chain(&p)?,
        StandardTableau::from_chain(&q)?,
    ))
}

/// Classical Schensted row insertion, for comparison with
/// [`rs_correspondence`].
pub fn rs_by_insertion(perm: &[usize]) -> Result<(StandardTableau, StandardTableau)> {
    Filling::permutation(perm)?;
    let (p, q) = schensted(perm);
    Ok((
        StandardTableau::from_tableau(p)?,
        StandardTableau::from_tableau(q)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;
    use proptest::prelude::*;

    /// The introductory example: heights 6,5,3,1,1 with three ones.
    fn intro_example() -> Filling {
        Filling::from_entries(
            CellArrangement::new(vec![6, 5, 3, 1, 1]).unwrap(),
            [(0, 3, 1), (1, 1, 1), (4, 0, 1)],
        )
        .unwrap()
    }

    #[test]
    fn intro_example_labels() {
        let d = forward_sweep(&intro_example(), Direction::TopRight).unwrap();
        let e = Partition::empty();
        let expected: [&[Partition]; 6] = [
            &[
                e.clone(),
                e.clone(),
                e.clone(),
                e.clone(),
                e.clone(),
                e.clone(),
                e.clone(),
            ],
            &[
                e.clone(),
                e.clone(),
                e.clone(),
                e.clone(),
                p(&[1]),
                p(&[1]),
                p(&[1]),
            ],
            &[
                e.clone(),
                e.clone(),
                p(&[1]),
                p(&[1]),
                p(&[1, 1]),
                p(&[1, 1]),
            ],
            &[e.clone(), e.clone(), p(&[1]), p(&[1])],
            &[e.clone(), e.clone()],
            &[e.clone(), p(&[1])],
        ];
        for (x, col) in expected.iter().enumerate() {
            for (y, l) in col.iter().enumerate() {
                assert_eq!(d.label(x, y), l, "corner ({x}, {y})");
            }
        }
        let w = d.boundary_word();
        assert_eq!(
            backward_sweep(d.arrangement(), &w, Direction::TopRight).unwrap(),
            intro_example()
        );
        assert_eq!(
            greene_ranks_bruteforce(&intro_example(), (2, 5), 1).unwrap(),
            (1, 2)
        );
    }

    #[test]
    fn forward_local_examples() {
        let e = Partition::empty();
        assert_eq!(forward_local(&e, &e, &e, true).unwrap(), p(&[1]));
        assert_eq!(
            forward_local(&e, &p(&[1]), &p(&[1]), false).unwrap(),
            p(&[1, 1])
        );
        assert_eq!(
            forward_local(&p(&[1]), &p(&[2]), &p(&[1, 1]), false).unwrap(),
            p(&[2, 1])
        );
        assert_eq!(forward_local(&e, &e, &e, false).unwrap(), e);
        assert!(forward_local(&e, &p(&[2]), &e, false).is_err());
        assert!(forward_local(&e, &p(&[1]), &e, true).is_err());
    }

    #[test]
    fn backward_local_examples() {
        let e = Partition::empty();
        assert_eq!(backward_local(&p(&[1]), &e, &e).unwrap(), (e.clone(), true));
        assert_eq!(
            backward_local(&p(&[1, 1]), &p(&[1]), &p(&[1])).unwrap(),
            (e.clone(), false)
        );
        assert_eq!(
            backward_local(&p(&[2, 1]), &p(&[2]), &p(&[1, 1])).unwrap(),
            (p(&[1]), false)
        );
        assert!(backward_local(&p(&[1]), &p(&[2]), &e).is_err());
    }

    #[test]
    fn local_rules_invert_exhaustively() {
        let shapes: Vec<Partition> = (0..=8)
            .flat_map(Partition::all_of_size)
            .filter(|s| s.len() <= 4 && s.num_columns() <= 4)
            .collect();
        let grow = |s: &Partition| -> Vec<Partition> {
            std::iter::once(s.clone())
                .chain(s.addable_rows().filter_map(|r| s.with_cell_added(r)))
                .collect()
        };
        for rho in &shapes {
            for mu in grow(rho) {
                for nu in grow(rho) {
                    for cross in [false, true] {
                        if cross && (mu != *rho || nu != *rho) {
                            continue;
                        }
                        let lam = forward_local(rho, &mu, &nu, cross).unwrap();
                        assert_eq!(
                            backward_local(&lam, &mu, &nu).unwrap(),
                            (rho.clone(), cross)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn arrangement_boundary() {
        let a = CellArrangement::new(vec![2, 1]).unwrap();
        assert_eq!(
            a.boundary_corners(),
            vec![(0, 2), (1, 2), (1, 1), (2, 1), (2, 0)]
        );
        assert_eq!(
            a.boundary_steps(),
            vec![
                Edge::Horizontal,
                Edge::Vertical,
                Edge::Horizontal,
                Edge::Vertical
            ]
        );
        assert_eq!(CellArrangement::staircase(3).heights(), &[2, 1]);
        assert!(CellArrangement::new(vec![1, 2]).is_err());
        assert_eq!(
            CellArrangement::new(vec![]).unwrap().boundary_corners(),
            vec![(0, 0)]
        );
    }

    #[test]
    fn filling_text_roundtrip_and_errors() {
        let f = Filling::permutation(&[2, 3, 1]).unwrap();
        let text = f.to_string();
        assert_eq!(text, "3 3 3\n0 1 1\n1 2 1\n2 0 1\n");
        assert_eq!(text.parse::<Filling>().unwrap(), f);
        let err = "2 1\n1 1 1\n".parse::<Filling>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let f: Filling = "2 2\n0 0 1\n1 0 1\n".parse().unwrap();
        assert!(matches!(
            forward_sweep(&f, Direction::TopRight),
            Err(Error::Filling { x: 1, y: 0, .. })
        ));
    }

    #[test]
    fn empty_filling_all_empty_labels() {
        let f = Filling::zero(CellArrangement::new(vec![4, 3, 3, 1]).unwrap());
        let d = forward_sweep(&f, Direction::TopRight).unwrap();
        assert!(d.dump().labels.iter().all(|(_, _, l)| l.is_empty()));
        let w = d.boundary_word();
        assert_eq!(
            backward_sweep(f.arrangement(), &w, Direction::TopRight).unwrap(),
            f
        );
    }

    #[test]
    fn two_crosses_give_column_label() {
        // Two ones forming a south-east chain: label (1,1) above them.
        let f = Filling::from_entries(CellArrangement::rectangle(2, 2), [(0, 1, 1), (1, 0, 1)])
            .unwrap();
        let d = forward_sweep(&f, Direction::TopRight).unwrap();
        assert_eq!(d.label(2, 2), &p(&[1, 1]));
        assert_eq!(greene_ranks_bruteforce(&f, (2, 2), 1).unwrap(), (1, 2));
        let zero = Filling::zero(CellArrangement::square(3));
        assert_eq!(greene_ranks_bruteforce(&zero, (3, 3), 2).unwrap(), (0, 0));
    }

    #[test]
    fn rs_examples() {
        let (p1, q1) = rs_correspondence(&[1, 2, 3]).unwrap();
        assert_eq!(p1.rows(), &[vec![1, 2, 3]]);
        assert_eq!(p1, q1);
        let (p1, q1) = rs_correspondence(&[3, 2, 1]).unwrap();
        assert_eq!(p1.rows(), &[vec![1], vec![2], vec![3]]);
        assert_eq!(p1, q1);
        assert_eq!(
            rs_correspondence(&[2, 3, 1]).unwrap(),
            rs_by_insertion(&[2, 3, 1]).unwrap()
        );
    }

    #[test]
    fn mirrored_sweeps_are_reflections() {
        let f = Filling::permutation(&[3, 1, 4, 2]).unwrap();
        let d = forward_sweep(&f, Direction::TopLeft).unwrap();
        // Growth toward the top-left starts from empty labels on the right.
        assert!((0..=4).all(|y| d.label(4, y).is_empty()));
        let w = d.boundary_word_toward(Direction::TopLeft).unwrap();
        assert_eq!(
            backward_sweep(f.arrangement(), &w, Direction::TopLeft).unwrap(),
            f
        );
        let stair = Filling::zero(CellArrangement::staircase(3));
        assert!(forward_sweep(&stair, Direction::BottomRight).is_err());
    }

    fn arb_filling() -> impl Strategy<Value = Filling> {
        (proptest::collection::vec(0usize..6, 0..6), any::<u64>()).prop_map(|(mut hs, seed)| {
            hs.sort_unstable_by(|a, b| b.cmp(a));
            let arr = CellArrangement::new(hs).unwrap();
            let mut f = Filling::zero(arr.clone());
            let mut s = seed;
            let mut used_rows = vec![false; arr.height()];
            for x in 0..arr.width() {
                s = s
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                let h = arr.column_height(x);
                if h == 0 || s >> 62 == 0 {
                    continue;
                }
                let y = (s >> 33) as usize % h;
                if !used_rows[y] {
                    used_rows[y] = true;
                    f.set(x, y, 1).unwrap();
                }
            }
            f
        })
    }

    proptest! {
        #[test]
        fn sweep_roundtrip(f in arb_filling()) {
            let d = forward_sweep(&f, Direction::TopRight).unwrap();
            d.check_local_rules().unwrap();
            let w = d.boundary_word();
            let back = backward_sweep_diagram(f.arrangement(), &w, Direction::TopRight).unwrap();
            prop_assert_eq!(back.filling(), &f);
            prop_assert_eq!(back.boundary_labels(), w.labels().to_vec());
        }

        #[test]
        fn greene_holds(f in arb_filling()) {
            let d = forward_sweep(&f, Direction::TopRight).unwrap();
            check_greene(&d).unwrap();
        }

        #[test]
        fn transpose_transposes_labels(perm in Just((1..=5usize).collect::<Vec<_>>()).prop_shuffle()) {
            let f = Filling::permutation(&perm).unwrap();
            let d = forward_sweep(&f, Direction::TopRight).unwrap();
            let t = forward_sweep(&f.transpose(), Direction::TopRight).unwrap();
            for x in 0..=5 {
                for y in 0..=5 {
                    prop_assert_eq!(d.label(x, y), t.label(y, x));
                }
            }
        }
    }
}
