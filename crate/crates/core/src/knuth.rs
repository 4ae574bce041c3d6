//! Growth sweeps for fillings with arbitrary non-negative entries, reduced to
//! the 0-1 engine by splitting every row and column into finer lines.
//!
//! An entry `e` becomes `e` ones forming a south-east chain inside its cell,
//! and the ones of a whole coarse row or column are likewise laid out as one
//! south-east chain (in the frame in which the diagram is drawn). A sweep
//! toward a mirrored direction therefore sees north-east chains, which makes
//! the boundary grow by horizontal strips (classical RSK), while a sweep
//! toward the top-right sees south-east chains and grows by vertical strips.

use crate::error::{Error, Result};
use crate::growth::{
    backward_sweep, forward_sweep, BoundaryWord, CellArrangement, Direction, Edge, Filling,
    GrowthDiagram,
};
use crate::partition::{Partition, StripType};

/// Shape of the chain the ones of a coarse line form after refinement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainOrientation {
    /// Later ones lie further right and lower.
    SouthEast,
    /// Later ones lie further right and higher.
    NorthEast,
}

/// Orientation used in the frame the diagram is drawn in.
pub const ORIENTATION: ChainOrientation = ChainOrientation::SouthEast;

impl ChainOrientation {
    /// Orientation seen in the canonical frame of a sweep toward `dir`.
    pub fn toward(self, dir: Direction) -> ChainOrientation {
        let (fx, fy) = dir.flips();
        match (self, fx != fy) {
            (o, false) => o,
            (ChainOrientation::SouthEast, true) => ChainOrientation::NorthEast,
            (ChainOrientation::NorthEast, true) => ChainOrientation::SouthEast,
        }
    }

    /// Boundary steps this orientation produces.
    pub fn strip_ok(self, kind: StripType) -> bool {
        match self {
            ChainOrientation::NorthEast => kind.is_horizontal(),
            ChainOrientation::SouthEast => kind.is_vertical(),
        }
    }
}

/// Where each coarse grid line lands in the refined grid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RefinedIndexMap {
    /// `col_starts[x]..col_starts[x+1]` are the fine columns of coarse
    /// column `x`; the last entry is the fine width.
    pub col_starts: Vec<usize>,
    pub row_starts: Vec<usize>,
}

impl RefinedIndexMap {
    fn from_sizes(cols: &[usize], rows: &[usize]) -> Self {
        let prefix = |v: &[usize]| {
            std::iter::once(0)
                .chain(v.iter().scan(0, |s, &x| {
                    *s += x;
                    Some(*s)
                }))
                .collect()
        };
        RefinedIndexMap {
            col_starts: prefix(cols),
            row_starts: prefix(rows),
        }
    }

    /// Fine corner at coarse corner `(x, y)`.
    pub fn corner(&self, x: usize, y: usize) -> (usize, usize) {
        (self.col_starts[x], self.row_starts[y])
    }

    fn fine_arrangement(&self, arr: &CellArrangement) -> CellArrangement {
        let heights = arr
            .heights()
            .iter()
            .enumerate()
            .flat_map(|(x, &h)| {
                std::iter::repeat_n(
                    self.row_starts[h],
                    self.col_starts[x + 1] - self.col_starts[x],
                )
            })
            .collect();
        CellArrangement::new(heights).expect("refinement keeps heights monotone")
    }

    /// Coarse cell containing fine cell `(x, y)`.
    fn coarse_cell(&self, x: usize, y: usize) -> (usize, usize) {
        (
            self.col_starts.partition_point(|&s| s <= x) - 1,
            self.row_starts.partition_point(|&s| s <= y) - 1,
        )
    }
}

/// Refines `f` with the module-wide orientation.
pub fn refine(f: &Filling) -> (Filling, RefinedIndexMap) {
    refine_oriented(f, ORIENTATION)
}

/// Replaces each coarse line by `max(1, line sum)` fine lines and each entry
/// `e` by `e` ones, with all ones of a coarse line forming one chain of the
/// given orientation.
pub fn refine_oriented(f: &Filling, orientation: ChainOrientation) -> (Filling, RefinedIndexMap) {
    let arr = f.arrangement();
    let col_sums: Vec<usize> = (0..arr.width()).map(|x| f.column_sum(x)).collect();
    let row_sums: Vec<usize> = (0..arr.height()).map(|y| f.row_sum(y)).collect();
    let map = RefinedIndexMap::from_sizes(
        &col_sums.iter().map(|&s| s.max(1)).collect::<Vec<_>>(),
        &row_sums.iter().map(|&s| s.max(1)).collect::<Vec<_>>(),
    );
    let mut fine = Filling::zero(map.fine_arrangement(arr));
    // Ones already placed in each coarse column (counted from the bottom or
    // the top) and in each coarse row (counted from the left).
    let mut below_in_col = vec![0usize; arr.width()];
    let mut left_in_row = vec![0usize; arr.height()];
    for x in 0..arr.width() {
        for y in 0..arr.column_height(x) {
            let e = f.get(x, y);
            for t in 0..e {
                let (dx, dy) = match orientation {
                    ChainOrientation::NorthEast => (below_in_col[x] + t, left_in_row[y] + t),
                    ChainOrientation::SouthEast => (
                        col_sums[x] - 1 - below_in_col[x] - (e - 1 - t),
                        row_sums[y] - 1 - left_in_row[y] - t,
                    ),
                };
                fine.set(map.col_starts[x] + dx, map.row_starts[y] + dy, 1)
                    .expect("offset inside the block");
            }
            below_in_col[x] += e;
            left_in_row[y] += e;
        }
    }
    (fine, map)
}

/// Block sums of a refined filling.
pub fn coarsen(fine: &Filling, arr: &CellArrangement, map: &RefinedIndexMap) -> Result<Filling> {
    let mut f = Filling::zero(arr.clone());
    for (x, y) in fine.ones() {
        let (cx, cy) = map.coarse_cell(x, y);
        let v = f.get(cx, cy);
        f.set(cx, cy, v + 1)?;
    }
    Ok(f)
}

/// Coarse labels along the top-right boundary, including inner corners.
/// Along horizontal edges the labels weakly grow, along vertical edges they
/// weakly shrink.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedBoundaryWord {
    labels: Vec<Partition>,
    steps: Vec<Edge>,
}

impl GeneralizedBoundaryWord {
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
        let last = labels.len() - 1;
        for idx in [0, last] {
            if !labels[idx].is_empty() {
                return Err(Error::ChainStep {
                    index: idx,
                    reason: format!(
                        "boundary word must end at the empty partition, found {}",
                        labels[idx]
                    ),
                });
            }
        }
        for (i, (w, e)) in labels.windows(2).zip(&steps).enumerate() {
            let ok = match e {
                Edge::Horizontal => w[0].is_contained_in(&w[1]),
                Edge::Vertical => w[1].is_contained_in(&w[0]),
            };
            if !ok {
                return Err(Error::ChainStep {
                    index: i + 1,
                    reason: format!("{} -> {} along a {e:?} edge", w[0], w[1]),
                });
            }
        }
        Ok(GeneralizedBoundaryWord { labels, steps })
    }

    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn steps(&self) -> &[Edge] {
        &self.steps
    }
}

/// A coarse filling with the growth diagram of its refinement.
#[derive(Debug, Clone)]
pub struct KnuthDiagram {
    filling: Filling,
    fine: GrowthDiagram,
    map: RefinedIndexMap,
    dir: Direction,
}

impl KnuthDiagram {
    pub fn filling(&self) -> &Filling {
        &self.filling
    }

    pub fn fine(&self) -> &GrowthDiagram {
        &self.fine
    }

    pub fn index_map(&self) -> &RefinedIndexMap {
        &self.map
    }

    /// Label of coarse corner `(x, y)`.
    pub fn label(&self, x: usize, y: usize) -> &Partition {
        let (fx, fy) = self.fine_corner(x, y);
        self.fine.label(fx, fy)
    }

    /// Fine corner of coarse corner `(x, y)` (both in the drawing frame).
    fn fine_corner(&self, x: usize, y: usize) -> (usize, usize) {
        let (flip_x, flip_y) = self.dir.flips();
        let arr = self.filling.arrangement();
        let fine_arr = self.fine.arrangement();
        // The map indexes the canonical frame; translate through it.
        let cx = if flip_x { arr.width() - x } else { x };
        let cy = if flip_y { arr.height() - y } else { y };
        let (fx, fy) = self.map.corner(cx, cy);
        (
            if flip_x { fine_arr.width() - fx } else { fx },
            if flip_y { fine_arr.height() - fy } else { fy },
        )
    }

    /// Coarse boundary word, read in the canonical frame of the sweep.
    pub fn boundary_word(&self) -> GeneralizedBoundaryWord {
        let arr = self.filling.arrangement();
        let canon = self
            .fine
            .boundary_word_toward(self.dir)
            .expect("valid sweep");
        let fine_corners = self.fine.arrangement().boundary_corners();
        let labels = arr
            .boundary_corners()
            .into_iter()
            .map(|(x, y)| {
                let target = self.map.corner(x, y);
                let idx = fine_corners
                    .iter()
                    .position(|&c| c == target)
                    .expect("coarse corner on fine boundary");
                canon.labels()[idx].clone()
            })
            .collect();
        GeneralizedBoundaryWord::new(arr, labels).expect("sweeps produce valid words")
    }
}

/// Reflects a coarse filling into the canonical frame of `dir`.
fn to_canonical(f: &Filling, dir: Direction) -> Result<Filling> {
    let arr = f.arrangement();
    let (flip_x, flip_y) = dir.flips();
    if !flip_x && !flip_y {
        return Ok(f.clone());
    }
    if !arr.is_rectangle() {
        return Err(Error::precondition(format!(
            "direction {dir:?} requires a rectangular arrangement"
        )));
    }
    let (w, h) = (arr.width(), arr.height());
    Filling::from_entries(
        arr.clone(),
        f.nonzero().into_iter().map(|(x, y, v)| {
            (
                if flip_x { w - 1 - x } else { x },
                if flip_y { h - 1 - y } else { y },
                v,
            )
        }),
    )
}

/// Refines in the canonical frame of `dir` and runs the 0-1 sweep there.
pub fn knuth_forward_sweep(f: &Filling, dir: Direction) -> Result<KnuthDiagram> {
    let canon = to_canonical(f, dir)?;
    let (fine_canon, map) = refine_oriented(&canon, ORIENTATION.toward(dir));
    let fine = to_canonical(&fine_canon, dir)?;
    let diagram = forward_sweep(&fine, dir)?;
    Ok(KnuthDiagram {
        filling: f.clone(),
        fine: diagram,
        map,
        dir,
    })
}

/// Cells of `big / small` in the order the refined sweep adds them.
fn strip_order(
    small: &Partition,
    big: &Partition,
    orientation: ChainOrientation,
) -> Vec<(usize, usize)> {
    let mut cells = small.skew_cells(big);
    match orientation {
        ChainOrientation::NorthEast => cells.sort_by_key(|&(r, c)| (c, r)),
        ChainOrientation::SouthEast => cells.sort_by_key(|&(r, c)| (r, c)),
    }
    cells
}

fn add_cell(p: &Partition, row: usize) -> Partition {
    p.with_cell_added(row)
        .expect("strip order keeps shapes valid")
}

/// Inverse of [`knuth_forward_sweep`]: the filling whose sweep toward `dir`
/// reproduces `word` (read in the canonical frame of `dir`).
pub fn knuth_backward_sweep(
    arr: &CellArrangement,
    word: &GeneralizedBoundaryWord,
    dir: Direction,
) -> Result<Filling> {
    if word.steps() != arr.boundary_steps() {
        return Err(Error::precondition(
            "boundary word belongs to another arrangement",
        ));
    }
    let orientation = ORIENTATION.toward(dir);
    let corners = arr.boundary_corners();
    let labels = word.labels();
    let mut col_sizes = vec![1; arr.width()];
    let mut row_sizes = vec![1; arr.height()];
    for (i, (w, e)) in labels.windows(2).zip(word.steps()).enumerate() {
        let (small, big) = match e {
            Edge::Horizontal => (&w[0], &w[1]),
            Edge::Vertical => (&w[1], &w[0]),
        };
        let kind = small.strip_type(big);
        if !orientation.strip_ok(kind) {
            return Err(Error::ChainStep {
                index: i + 1,
                reason: format!(
                    "{} -> {} is a {kind:?} step, not allowed toward {dir:?}",
                    w[0], w[1]
                ),
            });
        }
        let d = big.size() - small.size();
        let (x, y) = corners[i];
        match e {
            Edge::Horizontal => col_sizes[x] = d.max(1),
            Edge::Vertical => row_sizes[y - 1] = d.max(1),
        }
    }
    let map = RefinedIndexMap::from_sizes(&col_sizes, &row_sizes);
    let fine_arr = map.fine_arrangement(arr);
    let mut fine_labels = vec![labels[0].clone()];
    for (i, (w, e)) in labels.windows(2).zip(word.steps()).enumerate() {
        let (x, y) = corners[i];
        let (small, big, fine_steps) = match e {
            Edge::Horizontal => (&w[0], &w[1], col_sizes[x]),
            Edge::Vertical => (&w[1], &w[0], row_sizes[y - 1]),
        };
        let mut path = vec![small.clone()];
        for (r, _) in strip_order(small, big, orientation) {
            let next = add_cell(path.last().expect("nonempty"), r);
            path.push(next);
        }
        // An empty line still spans one fine step.
        path.resize(fine_steps + 1, big.clone());
        match e {
            Edge::Horizontal => fine_labels.extend(path.into_iter().skip(1)),
            Edge::Vertical => fine_labels.extend(path.into_iter().rev().skip(1)),
        }
    }
    let fine_word = BoundaryWord::new(&fine_arr, fine_labels)?;
    let fine = backward_sweep(&fine_arr, &fine_word, Direction::TopRight)?;
    let coarse = coarsen(&fine, arr, &map)?;
    if refine_oriented(&coarse, orientation).0 != fine {
        let (x, y) = fine
            .ones()
            .first()
            .map(|&(x, y)| map.coarse_cell(x, y))
            .unwrap_or((0, 0));
        return Err(Error::Reconstruction {
            x,
            y,
            reason: "refined filling is not the refinement of an integer filling".into(),
        });
    }
    to_canonical(&coarse, dir)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::insertion::rsk_matrix;
    use crate::partition::p;
    use crate::tableau::{PartitionChain, SemistandardTableau};
    use proptest::prelude::*;

    const DIRS: [Direction; 4] = [
        Direction::TopRight,
        Direction::TopLeft,
        Direction::BottomRight,
        Direction::BottomLeft,
    ];

    #[test]
    fn refine_single_cell() {
        let f = Filling::from_rows_bottom_up(&[vec![2]]).unwrap();
        let (fine, map) = refine(&f);
        assert_eq!(map.col_starts, vec![0, 2]);
        assert_eq!(fine.ones(), vec![(0, 1), (1, 0)]);
        let (fine, _) = refine_oriented(&f, ChainOrientation::NorthEast);
        assert_eq!(fine.ones(), vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn refine_keeps_empty_lines() {
        let f = Filling::from_rows_bottom_up(&[vec![0, 1], vec![0, 0]]).unwrap();
        let (fine, map) = refine(&f);
        assert_eq!(map.col_starts, vec![0, 1, 2]);
        assert_eq!(map.row_starts, vec![0, 1, 2]);
        assert_eq!(fine, f);
    }

    /// Matrix `a[i][j]` drawn so that the top-left sweep is classical RSK:
    /// top letter `i` runs leftward from the right edge, bottom letter `j`
    /// upward.
    fn rsk_filling(a: &[Vec<usize>]) -> Filling {
        let w = a.len();
        let h = a[0].len();
        Filling::from_entries(
            CellArrangement::rectangle(w, h),
            a.iter()
                .enumerate()
                .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &e)| (w - 1 - i, j, e))),
        )
        .unwrap()
    }

    fn knuth_rsk(a: &[Vec<usize>]) -> (SemistandardTableau, SemistandardTableau) {
        let f = rsk_filling(a);
        let d = knuth_forward_sweep(&f, Direction::TopLeft).unwrap();
        let (w, h) = (a.len(), a[0].len());
        let up = (0..=h).map(|y| d.label(0, y).clone()).collect();
        let across = (0..=w).map(|x| d.label(w - x, h).clone()).collect();
        (
            SemistandardTableau::from_chain(&PartitionChain::new(up).unwrap()).unwrap(),
            SemistandardTableau::from_chain(&PartitionChain::new(across).unwrap()).unwrap(),
        )
    }

    #[test]
    fn rsk_small_example() {
        let a = vec![vec![1, 0, 2], vec![0, 2, 0], vec![1, 1, 0]];
        assert_eq!(knuth_rsk(&a), rsk_matrix(&a));
    }

    #[test]
    fn zero_one_fillings_match_plain_sweep() {
        let f = Filling::permutation(&[3, 1, 4, 2]).unwrap();
        for dir in DIRS {
            let k = knuth_forward_sweep(&f, dir).unwrap();
            let plain = forward_sweep(&f, dir).unwrap();
            for x in 0..=4 {
                for y in 0..=4 {
                    assert_eq!(k.label(x, y), plain.label(x, y));
                }
            }
        }
    }

    #[test]
    fn strip_types_follow_orientation() {
        let f = Filling::from_rows_bottom_up(&[vec![2, 1], vec![1, 3]]).unwrap();
        for dir in DIRS {
            let word = knuth_forward_sweep(&f, dir).unwrap().boundary_word();
            let o = ORIENTATION.toward(dir);
            for (w, e) in word.labels().windows(2).zip(word.steps()) {
                let kind = match e {
                    Edge::Horizontal => w[0].strip_type(&w[1]),
                    Edge::Vertical => w[1].strip_type(&w[0]),
                };
                assert!(o.strip_ok(kind), "{dir:?}: {} {}", w[0], w[1]);
            }
        }
    }

    #[test]
    fn backward_rejects_wrong_strips() {
        let arr = CellArrangement::rectangle(1, 1);
        let word = GeneralizedBoundaryWord::new(&arr, vec![p(&[]), p(&[2]), p(&[])]).unwrap();
        assert!(knuth_backward_sweep(&arr, &word, Direction::TopRight).is_err());
        assert_eq!(
            knuth_backward_sweep(&arr, &word, Direction::TopLeft)
                .unwrap()
                .get(0, 0),
            2
        );
        let word = GeneralizedBoundaryWord::new(&arr, vec![p(&[]), p(&[1, 1]), p(&[])]).unwrap();
        assert_eq!(
            knuth_backward_sweep(&arr, &word, Direction::TopRight)
                .unwrap()
                .get(0, 0),
            2
        );
        // Shapes of unequal size on one edge cannot meet in a single cell.
        let word = GeneralizedBoundaryWord::new(&arr, vec![p(&[]), p(&[1]), p(&[])]);
        assert!(word.is_ok());
        assert!(GeneralizedBoundaryWord::new(&arr, vec![p(&[]), p(&[1])]).is_err());
    }

    fn arb_matrix() -> impl Strategy<Value = Vec<Vec<usize>>> {
        (1usize..4, 1usize..4).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(0usize..3, c), r)
        })
    }

    fn arb_staircase_filling() -> impl Strategy<Value = Filling> {
        (2usize..6, proptest::collection::vec(0usize..3, 15)).prop_map(|(n, vals)| {
            let arr = CellArrangement::staircase(n);
            let mut f = Filling::zero(arr.clone());
            let mut it = vals.into_iter().cycle();
            for x in 0..arr.width() {
                for y in 0..arr.column_height(x) {
                    f.set(x, y, it.next().unwrap()).unwrap();
                }
            }
            f
        })
    }

    proptest! {
        #[test]
        fn rsk_consistency(a in arb_matrix()) {
            prop_assert_eq!(knuth_rsk(&a), rsk_matrix(&a));
        }

        #[test]
        fn roundtrip_rectangles(a in arb_matrix()) {
            let f = Filling::from_rows_bottom_up(&a).unwrap();
            for dir in DIRS {
                let word = knuth_forward_sweep(&f, dir).unwrap().boundary_word();
                let back = knuth_backward_sweep(f.arrangement(), &word, dir).unwrap();
                prop_assert_eq!(&back, &f);
            }
        }

        #[test]
        fn roundtrip_staircases(f in arb_staircase_filling()) {
            let word = knuth_forward_sweep(&f, Direction::TopRight).unwrap().boundary_word();
            let back = knuth_backward_sweep(f.arrangement(), &word, Direction::TopRight).unwrap();
            prop_assert_eq!(back, f);
        }

        #[test]
        fn coarsen_inverts_refine(a in arb_matrix()) {
            let f = Filling::from_rows_bottom_up(&a).unwrap();
            let (fine, map) = refine(&f);
            prop_assert!(fine.is_standard_01());
            prop_assert_eq!(coarsen(&fine, f.arrangement(), &map).unwrap(), f);
        }
    }
}
