//! Marker injection and ejection by jeu de taquin, and inverse row insertion
//! at a chosen corner.

use crate::error::{Error, Result};
use crate::insertion::reverse_bump;
use crate::tableau::{
    AugmentedTableau, Flavor, Letter, SemistandardTableau, StandardTableau, Tableau,
};

/// A slide path: the cells `(row, col)` a marker visits, 0-based, in order.
pub type SlidePath = Vec<(usize, usize)>;

/// Places markers `I, II, ...` below the odd-length columns (left to right)
/// and slides each one, `I` first, to the first row. At every step the
/// marker trades places with the larger of its left and upper neighbours; on
/// a tie the upper neighbour moves down.
pub fn inject_markers_standard(t: &StandardTableau) -> Result<AugmentedTableau> {
    if !t.is_normalized() {
        return Err(Error::precondition(
            "marker injection requires entries 1..=n",
        ));
    }
    let (aug, _) = inject(t.tableau(), t.size(), Flavor::Standard)?;
    Ok(aug)
}

pub fn inject_markers_semistandard(t: &SemistandardTableau) -> Result<AugmentedTableau> {
    let (aug, _) = inject(t.tableau(), t.alphabet(), Flavor::Semistandard)?;
    Ok(aug)
}

/// Injection that also reports every marker's slide path. Successive paths
/// are asserted not to cross.
pub fn inject_with_paths(
    t: &Tableau<usize>,
    alphabet: usize,
    flavor: Flavor,
) -> Result<(AugmentedTableau, Vec<SlidePath>)> {
    inject(t, alphabet, flavor)
}

fn inject(
    t: &Tableau<usize>,
    alphabet: usize,
    flavor: Flavor,
) -> Result<(AugmentedTableau, Vec<SlidePath>)> {
    let mut grid: Vec<Vec<Letter>> = t
        .rows()
        .iter()
        .map(|r| r.iter().map(|&v| Letter::Num(v)).collect())
        .collect();
    let feet: Vec<(usize, usize)> = t
        .shape()
        .column_lengths()
        .iter()
        .enumerate()
        .filter(|(_, &len)| len % 2 == 1)
        .map(|(c, &len)| (len, c))
        .collect();
    // Marker cells are appended row by row; within a row they are added left
    // to right, so each push extends a row at its end.
    for (i, &(r, c)) in feet.iter().enumerate() {
        if r == grid.len() {
            grid.push(Vec::new());
        }
        debug_assert_eq!(grid[r].len(), c);
        grid[r].push(Letter::Marker(i + 1));
    }
    let mut paths = Vec::with_capacity(feet.len());
    for (i, &(mut r, mut c)) in feet.iter().enumerate() {
        let me = Letter::Marker(i + 1);
        let mut path = vec![(r, c)];
        loop {
            let left = (c > 0).then(|| grid[r][c - 1]).filter(|&v| v > me);
            let up = (r > 0).then(|| grid[r - 1][c]).filter(|&v| v > me);
            let (nr, nc) = match (left, up) {
                (None, None) => break,
                (Some(_), None) => (r, c - 1),
                (None, Some(_)) => (r - 1, c),
                (Some(l), Some(u)) => {
                    if l > u {
                        (r, c - 1)
                    } else {
                        (r - 1, c)
                    }
                }
            };
            grid[r][c] = grid[nr][nc];
            grid[nr][nc] = me;
            r = nr;
            c = nc;
            path.push((r, c));
        }
        if r != 0 || c != i {
            return Err(Error::precondition(format!(
                "marker {me} came to rest at row {}, column {}",
                r + 1,
                c + 1
            )));
        }
        paths.push(path);
    }
    check_non_crossing(&paths)?;
    let aug = AugmentedTableau::new(Tableau::from_rows(grid)?, feet.len(), alphabet, flavor)?;
    Ok((aug, paths))
}

/// Successive slide paths never cross: in every row both paths visit, the
/// earlier path leaves the row (upward, or by stopping) strictly left of
/// where the later one does.
pub fn check_non_crossing(paths: &[SlidePath]) -> Result<()> {
    let exit_col = |path: &SlidePath, r: usize| {
        path.iter()
            .filter(|&&(pr, _)| pr == r)
            .map(|&(_, c)| c)
            .min()
    };
    for (i, w) in paths.windows(2).enumerate() {
        let top = w[0].iter().map(|&(r, _)| r).max().unwrap_or(0);
        for r in 0..=top {
            if let (Some(a), Some(b)) = (exit_col(&w[0], r), exit_col(&w[1], r)) {
                if a >= b {
                    return Err(Error::precondition(format!(
                        "slide paths of markers {} and {} cross in row {}",
                        Letter::Marker(i + 1),
                        Letter::Marker(i + 2),
                        r + 1
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Reverses [`inject_markers_standard`] / [`inject_markers_semistandard`]:
/// the markers, last one first, slide toward an outer corner (trading places
/// with the smaller of the lower and right neighbours, the lower one on a
/// tie) and are deleted there.
pub fn eject_markers(t: &AugmentedTableau) -> Result<Tableau<usize>> {
    let m = t.markers();
    let mut grid: Vec<Vec<Letter>> = t.tableau().rows().to_vec();
    for i in 0..m {
        if grid.first().and_then(|row| row.get(i)) != Some(&Letter::Marker(i + 1)) {
            return Err(Error::precondition(format!(
                "marker {} is not in the first row",
                Letter::Marker(i + 1)
            )));
        }
    }
    for i in (0..m).rev() {
        let (mut r, mut c) = (0, i);
        loop {
            let down = grid.get(r + 1).and_then(|row| row.get(c)).copied();
            let right = grid[r].get(c + 1).copied();
            let (nr, nc) = match (down, right) {
                (None, None) => break,
                (Some(_), None) => (r + 1, c),
                (None, Some(_)) => (r, c + 1),
                (Some(d), Some(rt)) => {
                    if d <= rt {
                        (r + 1, c)
                    } else {
                        (r, c + 1)
                    }
                }
            };
            grid[r][c] = grid[nr][nc];
            grid[nr][nc] = Letter::Marker(i + 1);
            r = nr;
            c = nc;
        }
        grid[r].pop();
        if grid[r].is_empty() {
            grid.pop();
        }
    }
    let t = Tableau::from_rows(grid)?;
    Ok(t.map(|l| l.num().expect("all markers removed")))
}

pub fn eject_to_standard(t: &AugmentedTableau) -> Result<StandardTableau> {
    StandardTableau::from_tableau(eject_markers(t)?)
}

pub fn eject_to_semistandard(t: &AugmentedTableau) -> Result<SemistandardTableau> {
    SemistandardTableau::with_alphabet(eject_markers(t)?, t.alphabet())
}

/// Inverse row insertion starting at the outer corner `(row, col)` (1-based).
/// Entries keep their values; the value bumped out of the first row is
/// returned.
pub fn inverse_rs_extract(
    t: &StandardTableau,
    row: usize,
    col: usize,
) -> Result<(StandardTableau, usize)> {
    let shape = t.shape();
    if row == 0 || shape.part(row - 1) != col || col == 0 {
        return Err(Error::precondition(format!(
            "({row}, {col}) is not the last cell of a row"
        )));
    }
    let mut inner = t.tableau().clone();
    let v = reverse_bump(&mut inner, row - 1)?;
    Ok((StandardTableau::from_tableau(inner)?, v))
}
