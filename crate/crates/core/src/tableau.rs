//! Standard, semistandard and marker-augmented Young tableaux, and their
//! encoding as chains of partitions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Partition, StripType};

/// A letter of the augmented alphabet `I < II < III < ... < 1 < 2 < ...`.
///
/// `Marker(1)` is `I`. The derived order puts every marker before every
/// numeral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Marker(usize),
    Num(usize),
}

impl Letter {
    pub fn is_marker(self) -> bool {
        matches!(self, Letter::Marker(_))
    }

    pub fn num(self) -> Option<usize> {
        match self {
            Letter::Num(v) => Some(v),
            Letter::Marker(_) => None,
        }
    }
}

const ROMAN: [(usize, &str); 13] = [
    (1000, "M"),
    (900, "CM"),
    (500, "D"),
    (400, "CD"),
    (100, "C"),
    (90, "XC"),
    (50, "L"),
    (40, "XL"),
    (10, "X"),
    (9, "IX"),
    (5, "V"),
    (4, "IV"),
    (1, "I"),
];

pub fn to_roman(mut n: usize) -> String {
    let mut s = String::new();
    for &(v, r) in &ROMAN {
        while n >= v {
            s.push_str(r);
            n -= v;
        }
    }
    s
}

pub fn from_roman(s: &str) -> Option<usize> {
    if s.is_empty() {
        return None;
    }
    let mut rest = s;
    let mut n = 0;
    for &(v, r) in &ROMAN {
        while let Some(tail) = rest.strip_prefix(r) {
            n += v;
            rest = tail;
        }
    }
    // Reject non-canonical spellings such as "IIII".
    (rest.is_empty() && n > 0 && to_roman(n) == s).then_some(n)
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Letter::Marker(i) => f.write_str(&to_roman(i)),
            Letter::Num(v) => write!(f, "{v}"),
        }
    }
}

impl FromStr for Letter {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if let Ok(v) = s.parse::<usize>() {
            if v == 0 {
                return Err("entries must be positive".into());
            }
            return Ok(Letter::Num(v));
        }
        from_roman(s)
            .map(Letter::Marker)
            .ok_or_else(|| format!("unrecognized entry {s:?}"))
    }
}

/// Rows of a Young-diagram-shaped array, top row first.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau<T> {
    rows: Vec<Vec<T>>,
}

impl<T: Copy + Ord + fmt::Display> Tableau<T> {
    /// Checks only that the rows form a Ferrers shape.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::Tableau {
                    row: i + 1,
                    col: 1,
                    reason: "empty row".into(),
                });
            }
            if i > 0 && row.len() > rows[i - 1].len() {
                return Err(Error::Tableau {
                    row: i + 1,
                    col: rows[i - 1].len() + 1,
                    reason: "row longer than the row above".into(),
                });
            }
        }
        Ok(Tableau { rows })
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<T>> {
        &mut self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<T>> {
        self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect::<Vec<_>>())
            .expect("rows form a Ferrers shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> Option<T> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = T> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// Validates row and column monotonicity. With `strict_rows` false, rows
    /// may weakly increase; columns always strictly increase.
    pub fn check_monotone(&self, strict_rows: bool) -> Result<()> {
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if c > 0 {
                    let left = row[c - 1];
                    if left > v || (strict_rows && left == v) {
                        return Err(Error::Tableau {
                            row: r + 1,
                            col: c + 1,
                            reason: format!("{v} does not increase after {left} along the row"),
                        });
                    }
                }
                if r > 0 && self.rows[r - 1][c] >= v {
                    return Err(Error::Tableau {
                        row: r + 1,
                        col: c + 1,
                        reason: format!(
                            "{v} does not strictly increase below {} in the column",
                            self.rows[r - 1][c]
                        ),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn map<U: Copy + Ord + fmt::Display>(&self, f: impl Fn(T) -> U) -> Tableau<U> {
        Tableau {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&v| f(v)).collect())
                .collect(),
        }
    }

    /// Shape of the entries `<= bound`, valid for any semistandard filling.
    fn shape_up_to(&self, bound: T) -> Partition {
        Partition::new(
            self.rows
                .iter()
                .map(|r| r.iter().take_while(|&&v| v <= bound).count())
                .collect::<Vec<_>>(),
        )
        .expect("monotone tableau yields a partition")
    }
}

impl<T: fmt::Display> fmt::Display for Tableau<T> {
    /// One row per line, entries space-separated, newline-terminated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            for (i, v) in row.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for Tableau<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "Tableau[{}]", rows.join(" / "))
    }
}

/// Parses the line-oriented tableau text form into letters. Blank lines and
/// lines starting with `#` are skipped.
pub fn parse_letter_rows(text: &str) -> Result<Tableau<Letter>> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<Letter>().map_err(|m| Error::parse(i + 1, m)))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Tableau::from_rows(rows)
}

fn numerals_only(t: Tableau<Letter>) -> Result<Tableau<usize>> {
    for (r, row) in t.rows().iter().enumerate() {
        if let Some(c) = row.iter().position(|l| l.is_marker()) {
            return Err(Error::Tableau {
                row: r + 1,
                col: c + 1,
                reason: "marker letter in a marker-free tableau".into(),
            });
        }
    }
    Ok(t.map(|l| l.num().expect("checked")))
}

/// A chain of partitions, each contained in the next.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionChain(Vec<Partition>);

impl PartitionChain {
    pub fn new(shapes: Vec<Partition>) -> Result<Self> {
        for (i, w) in shapes.windows(2).enumerate() {
            if !w[0].is_contained_in(&w[1]) {
                return Err(Error::ChainStep {
                    index: i + 1,
                    reason: format!("{} is not contained in {}", w[0], w[1]),
                });
            }
        }
        Ok(PartitionChain(shapes))
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.0
    }

    pub fn into_shapes(self) -> Vec<Partition> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<&Partition> {
        self.0.last()
    }

    fn check_start(&self) -> Result<()> {
        match self.0.first() {
            Some(first) if first.is_empty() => Ok(()),
            Some(first) => Err(Error::ChainStep {
                index: 0,
                reason: format!("chain starts at {first}, not at the empty partition"),
            }),
            None => Err(Error::ChainStep {
                index: 0,
                reason: "empty chain".into(),
            }),
        }
    }

    /// Fills the cells of step `i` (`shapes[i-1] -> shapes[i]`) with `letter(i)`.
    fn fill<T: Copy + Ord + fmt::Display>(
        &self,
        allowed: impl Fn(usize, StripType) -> bool,
        letter: impl Fn(usize) -> T,
    ) -> Result<Tableau<T>> {
        self.check_start()?;
        let shape = self.last().expect("nonempty");
        let mut rows: Vec<Vec<Option<T>>> = shape.parts().iter().map(|&l| vec![None; l]).collect();
        for (i, w) in self.0.windows(2).enumerate() {
            let step = i + 1;
            let kind = w[0].strip_type(&w[1]);
            if !allowed(step, kind) {
                return Err(Error::ChainStep {
                    index: step,
                    reason: format!("{} -> {} is a {kind:?} step", w[0], w[1]),
                });
            }
            for (r, c) in w[0].skew_cells(&w[1]) {
                rows[r][c] = Some(letter(step));
            }
        }
        Tableau::from_rows(
            rows.into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|v| v.expect("every cell filled"))
                        .collect()
                })
                .collect(),
        )
    }
}

/// A standard Young tableau: distinct positive entries increasing along rows
/// and down columns.
///
/// Entries need not be exactly `1..=n`; tableaux produced by inverse row
/// insertion keep their original values. Chain conversion requires the
/// normalized entry set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau(Tableau<usize>);

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_tableau(Tableau::from_rows(rows)?)
    }

    pub fn from_tableau(t: Tableau<usize>) -> Result<Self> {
        for (r, row) in t.rows().iter().enumerate() {
            if let Some(c) = row.iter().position(|&v| v == 0) {
                return Err(Error::Tableau {
                    row: r + 1,
                    col: c + 1,
                    reason: "entries must be positive".into(),
                });
            }
        }
        t.check_monotone(true)?;
        let mut seen: Vec<usize> = t.entries().collect();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            let v = w[0];
            let (r, c) = position_of(&t, |x| x == v).expect("present");
            return Err(Error::Tableau {
                row: r + 1,
                col: c + 1,
                reason: format!("entry {v} repeated"),
            });
        }
        Ok(StandardTableau(t))
    }

    pub fn empty() -> Self {
        StandardTableau(Tableau::empty())
    }

    pub fn tableau(&self) -> &Tableau<usize> {
        &self.0
    }

    pub fn into_tableau(self) -> Tableau<usize> {
        self.0
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        self.0.rows()
    }

    pub fn shape(&self) -> Partition {
        self.0.shape()
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// True when the entries are exactly `1..=n`.
    pub fn is_normalized(&self) -> bool {
        let n = self.size();
        let mut v: Vec<_> = self.0.entries().collect();
        v.sort_unstable();
        v.iter().enumerate().all(|(i, &x)| x == i + 1) && v.len() == n
    }

    /// Relabels the entries by rank, so they become `1..=n`.
    pub fn standardize(&self) -> StandardTableau {
        let mut v: Vec<_> = self.0.entries().collect();
        v.sort_unstable();
        StandardTableau(self.0.map(|x| v.binary_search(&x).expect("present") + 1))
    }

    pub fn to_chain(&self) -> Result<PartitionChain> {
        if !self.is_normalized() {
            return Err(Error::precondition("chain form requires entries 1..=n"));
        }
        PartitionChain::new((0..=self.size()).map(|i| self.0.shape_up_to(i)).collect())
    }

    pub fn from_chain(chain: &PartitionChain) -> Result<Self> {
        chain
            .fill(|_, k| k == StripType::OneSquare, |i| i)
            .map(StandardTableau)
    }

    pub fn to_semistandard(&self) -> Result<SemistandardTableau> {
        SemistandardTableau::with_alphabet(self.0.clone(), self.size())
    }

    pub fn to_letters(&self) -> Tableau<Letter> {
        self.0.map(Letter::Num)
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StandardTableau::from_tableau(numerals_only(parse_letter_rows(s)?)?)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

fn position_of<T: Copy>(t: &Tableau<T>, pred: impl Fn(T) -> bool) -> Option<(usize, usize)> {
    t.rows
        .iter()
        .enumerate()
        .find_map(|(r, row)| row.iter().position(|&v| pred(v)).map(|c| (r, c)))
}

/// A semistandard tableau over the alphabet `1..=alphabet`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SemistandardTableau {
    tableau: Tableau<usize>,
    alphabet: usize,
}

impl SemistandardTableau {
    /// Uses the largest entry as the alphabet size.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau::from_rows(rows)?;
        let alphabet = t.entries().max().unwrap_or(0);
        Self::with_alphabet(t, alphabet)
    }

    pub fn with_alphabet(tableau: Tableau<usize>, alphabet: usize) -> Result<Self> {
        for (r, row) in tableau.rows().iter().enumerate() {
            if let Some(c) = row.iter().position(|&v| v == 0 || v > alphabet) {
                return Err(Error::Tableau {
                    row: r + 1,
                    col: c + 1,
                    reason: format!("entry {} outside 1..={alphabet}", row[c]),
                });
            }
        }
        tableau.check_monotone(false)?;
        Ok(SemistandardTableau { tableau, alphabet })
    }

    pub fn tableau(&self) -> &Tableau<usize> {
        &self.tableau
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        self.tableau.rows()
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn shape(&self) -> Partition {
        self.tableau.shape()
    }

    pub fn size(&self) -> usize {
        self.tableau.size()
    }

    /// `content()[i]` counts the entries equal to `i + 1`.
    pub fn content(&self) -> Vec<usize> {
        let mut j = vec![0; self.alphabet];
        for v in self.tableau.entries() {
            j[v - 1] += 1;
        }
        j
    }

    pub fn to_chain(&self) -> PartitionChain {
        PartitionChain::new(
            (0..=self.alphabet)
                .map(|i| self.tableau.shape_up_to(i))
                .collect(),
        )
        .expect("semistandard chains are monotone")
    }

    pub fn from_chain(chain: &PartitionChain) -> Result<Self> {
        let tableau = chain.fill(|_, k| k.is_horizontal(), |i| i)?;
        Ok(SemistandardTableau {
            tableau,
            alphabet: chain.len().saturating_sub(1),
        })
    }

    pub fn to_letters(&self) -> Tableau<Letter> {
        self.tableau.map(Letter::Num)
    }
}

impl FromStr for SemistandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = numerals_only(parse_letter_rows(s)?)?;
        let alphabet = t.entries().max().unwrap_or(0);
        SemistandardTableau::with_alphabet(t, alphabet)
    }
}

impl fmt::Display for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.tableau, f)
    }
}

impl fmt::Debug for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} over 1..={}", self.tableau, self.alphabet)
    }
}

/// Whether the numerals of an augmented tableau are distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Standard,
    Semistandard,
}

/// A tableau in the alphabet `I < II < ... < 1 < 2 < ...`, carrying `markers`
/// distinct marker letters `I..` and numerals from `1..=alphabet`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AugmentedTableau {
    tableau: Tableau<Letter>,
    markers: usize,
    alphabet: usize,
    flavor: Flavor,
}

impl AugmentedTableau {
    pub fn new(
        tableau: Tableau<Letter>,
        markers: usize,
        alphabet: usize,
        flavor: Flavor,
    ) -> Result<Self> {
        tableau.check_monotone(flavor == Flavor::Standard)?;
        let mut marker_seen = vec![false; markers];
        let mut num_seen = vec![0usize; alphabet];
        for (r, row) in tableau.rows().iter().enumerate() {
            for (c, &l) in row.iter().enumerate() {
                let bad = |reason: String| Error::Tableau {
                    row: r + 1,
                    col: c + 1,
                    reason,
                };
                match l {
                    Letter::Marker(i) if (1..=markers).contains(&i) => {
                        if std::mem::replace(&mut marker_seen[i - 1], true) {
                            return Err(bad(format!("marker {l} repeated")));
                        }
                    }
                    Letter::Num(v) if (1..=alphabet).contains(&v) => num_seen[v - 1] += 1,
                    _ => return Err(bad(format!("letter {l} outside the alphabet"))),
                }
            }
        }
        if let Some(i) = marker_seen.iter().position(|s| !s) {
            return Err(Error::precondition(format!(
                "marker {} missing",
                Letter::Marker(i + 1)
            )));
        }
        if flavor == Flavor::Standard {
            if let Some(v) = num_seen.iter().position(|&c| c != 1) {
                return Err(Error::precondition(format!(
                    "standard augmented tableau must contain {} exactly once",
                    v + 1
                )));
            }
        }
        Ok(AugmentedTableau {
            tableau,
            markers,
            alphabet,
            flavor,
        })
    }

    pub fn tableau(&self) -> &Tableau<Letter> {
        &self.tableau
    }

    pub fn markers(&self) -> usize {
        self.markers
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn shape(&self) -> Partition {
        self.tableau.shape()
    }

    /// The letters of the full alphabet in increasing order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (1..=self.markers)
            .map(Letter::Marker)
            .chain((1..=self.alphabet).map(Letter::Num))
    }

    /// Chain of length `markers + alphabet + 1`, markers first.
    pub fn to_chain(&self) -> PartitionChain {
        let shapes = std::iter::once(Partition::empty())
            .chain(self.letters().map(|l| self.tableau.shape_up_to(l)))
            .collect();
        PartitionChain::new(shapes).expect("monotone")
    }

    pub fn from_chain(chain: &PartitionChain, markers: usize, flavor: Flavor) -> Result<Self> {
        let alphabet = chain
            .len()
            .checked_sub(markers + 1)
            .ok_or_else(|| Error::precondition("chain shorter than the marker count"))?;
        let tableau = chain.fill(
            |step, k| {
                if step <= markers || flavor == Flavor::Standard {
                    k == StripType::OneSquare
                } else {
                    k.is_horizontal()
                }
            },
            |i| {
                if i <= markers {
                    Letter::Marker(i)
                } else {
                    Letter::Num(i - markers)
                }
            },
        )?;
        AugmentedTableau::new(tableau, markers, alphabet, flavor)
    }
}

impl fmt::Display for AugmentedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.tableau, f)
    }
}

impl fmt::Debug for AugmentedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.tableau, f)
    }
}

/// True iff the shape has every column of length at most `max_col_len` and
/// exactly `required_odd_cols` columns of odd length.
pub fn validate_bounds(shape: &Partition, max_col_len: usize, required_odd_cols: usize) -> bool {
    let s = shape.column_stats();
    s.max_column_length <= max_col_len && s.num_odd_columns == required_odd_cols
}
