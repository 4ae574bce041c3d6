//! Self-verification suites cross-checking the bijections against the
//! independent counters and classical algorithms. Random suites are seeded
//! and their output does not depend on the thread count.

use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bijection::{
    gen_oscillating_to_ssyt, oscillating_to_syt, ssyt_to_gen_oscillating, syt_to_oscillating,
};
use crate::counting::{
    bessel_count, count_oscillating, enumerate_gen_oscillating, enumerate_oscillating,
    enumerate_ssyt, enumerate_syt,
};
use crate::growth::{
    check_greene, forward_sweep, greene_ranks_bruteforce, rs_by_insertion, rs_correspondence,
    CellArrangement, Direction, Filling,
};
use crate::insertion::rsk_matrix;
use crate::knuth::knuth_forward_sweep;
use crate::tableau::{PartitionChain, SemistandardTableau};

pub const DEFAULT_SEED: u64 = 20_060_417;

/// Outcome of one suite: how many cases ran and what went wrong.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(suite: &str, parts: Vec<(usize, Vec<String>)>) -> Self {
        let mut r = SuiteReport {
            suite: suite.into(),
            ..Default::default()
        };
        for (c, f) in parts {
            r.cases += c;
            r.failures.extend(f);
        }
        r
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        writeln!(
            f,
            "{}: {} cases, {} failures, {status}",
            self.suite,
            self.cases,
            self.failures.len()
        )?;
        for line in self.failures.iter().take(20) {
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Standard bijection: every tableau round-trips, the images are distinct,
/// and they are exactly the oscillating tableaux of the right kind.
pub fn suite_standard(max_n: usize) -> SuiteReport {
    let jobs: Vec<(usize, usize, usize)> = (0..=max_n)
        .flat_map(|n| (1..=3).flat_map(move |k| (0..=n).map(move |m| (n, k, m))))
        .collect();
    let parts = jobs
        .into_par_iter()
        .map(|(n, k, m)| {
            let mut failures = Vec::new();
            let tabs = enumerate_syt(n, 2 * k, m);
            let mut images = HashSet::new();
            for t in &tabs {
                match syt_to_oscillating(t, k) {
                    Ok(o) => {
                        if oscillating_to_syt(&o).as_ref() != Ok(t) {
                            failures.push(format!("n={n} k={k}: round trip fails for\n{t}"));
                        }
                        images.insert(o.shapes().to_vec());
                    }
                    Err(e) => failures.push(format!("n={n} k={k}: {e}")),
                }
            }
            let expected: HashSet<_> = enumerate_oscillating(n, k, m)
                .into_iter()
                .map(|o| o.shapes().to_vec())
                .collect();
            if images != expected {
                failures.push(format!(
                    "n={n} k={k} m={m}: {} distinct images, {} oscillating tableaux",
                    images.len(),
                    expected.len()
                ));
            }
            (tabs.len(), failures)
        })
        .collect();
    SuiteReport::merge("thm3", parts)
}

/// Content vectors of length `len` with entries at most `max_entry` and sum
/// at most `max_sum`.
pub fn contents(len: usize, max_entry: usize, max_sum: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v: Vec<usize>| {
                let s: usize = v.iter().sum();
                (0..=max_entry.min(max_sum - s)).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

/// Semistandard bijection: exhaustive over small contents, plus seeded
/// random tableaux obtained from random matrices.
pub fn suite_semistandard(max_n: usize, seed: u64) -> SuiteReport {
    let mut jobs = Vec::new();
    for len in 1..=3 {
        for j in contents(len, 3, max_n.min(8)) {
            for k in 1..=2 {
                for m in 0..=j.iter().sum::<usize>() {
                    jobs.push((j.clone(), k, m));
                }
            }
        }
    }
    let mut parts: Vec<(usize, Vec<String>)> = jobs
        .into_par_iter()
        .map(|(j, k, m)| {
            let mut failures = Vec::new();
            let tabs = enumerate_ssyt(&j, 2 * k, m);
            let mut images = HashSet::new();
            for t in &tabs {
                match ssyt_to_gen_oscillating(t, k) {
                    Ok(o) => {
                        if gen_oscillating_to_ssyt(&o).as_ref() != Ok(t) {
                            failures.push(format!("j={j:?} k={k}: round trip fails for\n{t}"));
                        }
                        images.insert(o.shapes().to_vec());
                    }
                    Err(e) => failures.push(format!("j={j:?} k={k}: {e}")),
                }
            }
            let expected: HashSet<_> = enumerate_gen_oscillating(&j, k, m)
                .into_iter()
                .map(|o| o.shapes().to_vec())
                .collect();
            if images != expected {
                failures.push(format!(
                    "j={j:?} k={k} m={m}: {} distinct images, {} walks",
                    images.len(),
                    expected.len()
                ));
            }
            (tabs.len(), failures)
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..200 {
        let (t, _) = rsk_matrix(&random_matrix(&mut rng, 4, 4, 3));
        let k = t
            .shape()
            .column_lengths()
            .first()
            .map_or(1, |&l| l.div_ceil(2).max(1));
        match ssyt_to_gen_oscillating(&t, k).and_then(|o| gen_oscillating_to_ssyt(&o)) {
            Ok(back) if back == t => {}
            Ok(back) => failures.push(format!("random tableau\n{t}came back as\n{back}")),
            Err(e) => failures.push(format!("random tableau\n{t}failed: {e}")),
        }
    }
    parts.push((200, failures));
    SuiteReport::merge("thm4", parts)
}

/// A random arrangement (at most `max_w` columns, `max_h` rows) with a 0-1
/// filling having at most one 1 per row and column and at most `max_ones`
/// ones.
pub fn random_filling(rng: &mut impl Rng, max_w: usize, max_h: usize, max_ones: usize) -> Filling {
    let w = rng.gen_range(1..=max_w);
    let mut heights: Vec<usize> = (0..w).map(|_| rng.gen_range(0..=max_h)).collect();
    heights.sort_unstable_by(|a, b| b.cmp(a));
    let arr = CellArrangement::new(heights).expect("sorted heights");
    let mut f = Filling::zero(arr.clone());
    let mut used_rows = vec![false; arr.height()];
    let mut cols: Vec<usize> = (0..w).collect();
    for i in (1..cols.len()).rev() {
        cols.swap(i, rng.gen_range(0..=i));
    }
    let mut placed = 0;
    for x in cols {
        let h = arr.column_height(x);
        if placed == max_ones || h == 0 || rng.gen_bool(0.25) {
            continue;
        }
        let y = rng.gen_range(0..h);
        if !used_rows[y] {
            used_rows[y] = true;
            f.set(x, y, 1).expect("inside");
            placed += 1;
        }
    }
    f
}

pub fn random_matrix(
    rng: &mut impl Rng,
    max_rows: usize,
    max_cols: usize,
    max_entry: usize,
) -> Vec<Vec<usize>> {
    let r = rng.gen_range(1..=max_rows);
    let c = rng.gen_range(1..=max_cols);
    (0..r)
        .map(|_| (0..c).map(|_| rng.gen_range(0..=max_entry)).collect())
        .collect()
}

/// Greene's theorem on seeded random fillings: each corner label's partial
/// sums equal the chain maxima, by the bitmask oracle and by brute force.
pub fn suite_greene(cases: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fillings: Vec<Filling> = (0..cases)
        .map(|_| random_filling(&mut rng, 12, 12, 12))
        .collect();
    let parts = fillings
        .into_par_iter()
        .map(|f| {
            let mut failures = Vec::new();
            let d = match forward_sweep(&f, Direction::TopRight) {
                Ok(d) => d,
                Err(e) => return (1, vec![e.to_string()]),
            };
            if let Err(e) = check_greene(&d) {
                failures.push(format!("{e}\n{f}"));
            }
            let arr = f.arrangement();
            for x in 0..=arr.width() {
                for y in 0..=arr.corner_top(x) {
                    let label = d.label(x, y);
                    let conj = label.conjugate();
                    for k in 1..=f.total().max(1) {
                        let want = (
                            label.parts().iter().take(k).sum::<usize>(),
                            conj.parts().iter().take(k).sum::<usize>(),
                        );
                        match greene_ranks_bruteforce(&f, (x, y), k) {
                            Ok(got) if got == want => {}
                            Ok(got) => failures
                                .push(format!("corner ({x},{y}) k={k}: {got:?} vs {want:?}")),
                            Err(e) => failures.push(e.to_string()),
                        }
                    }
                }
            }
            (1, failures)
        })
        .collect();
    SuiteReport::merge("greene", parts)
}

/// Bessel determinant against brute-force counts.
pub fn suite_formula(max_n: usize) -> SuiteReport {
    let jobs: Vec<(usize, usize, usize)> = (1..=max_n)
        .flat_map(|n| (1..=3).flat_map(move |k| (0..=4.min(n)).map(move |m| (n, k, m))))
        .collect();
    let parts = jobs
        .into_par_iter()
        .map(|(n, k, m)| {
            let brute = count_oscillating(n, k, m);
            match bessel_count(n, k, m) {
                Ok(b) if b == brute => (1, vec![]),
                Ok(b) => (
                    1,
                    vec![format!("n={n} k={k} m={m}: brute {brute}, formula {b}")],
                ),
                Err(e) => (1, vec![format!("n={n} k={k} m={m}: {e}")]),
            }
        })
        .collect();
    SuiteReport::merge("formula", parts)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for i in 1..=n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=p.len()).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, i);
                    q
                })
            })
            .collect();
    }
    out
}

/// Growth diagrams against row insertion on all permutations up to `max_n`,
/// and Knuth sweeps against RSK on seeded random matrices.
pub fn suite_rs(max_n: usize, seed: u64) -> SuiteReport {
    let mut parts: Vec<(usize, Vec<String>)> = (0..=max_n)
        .into_par_iter()
        .map(|n| {
            let perms = permutations(n);
            let failures = perms
                .iter()
                .filter(|p| rs_correspondence(p) != rs_by_insertion(p))
                .map(|p| format!("permutation {p:?}"))
                .collect();
            (perms.len(), failures)
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..200 {
        let a = random_matrix(&mut rng, 4, 4, 3);
        if knuth_rsk(&a) != rsk_matrix(&a) {
            failures.push(format!("matrix {a:?}"));
        }
    }
    parts.push((200, failures));
    SuiteReport::merge("rs", parts)
}

/// RSK of `a` computed by a Knuth sweep toward the top-left: row `i` of `a`
/// (top letter `i + 1`) is drawn as column `w - 1 - i`, column `j` (bottom
/// letter `j + 1`) as row `j`.
pub fn knuth_rsk(a: &[Vec<usize>]) -> (SemistandardTableau, SemistandardTableau) {
    let w = a.len();
    let h = a.first().map_or(0, Vec::len);
    let f = Filling::from_entries(
        CellArrangement::rectangle(w, h),
        a.iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &e)| (w - 1 - i, j, e))),
    )
    .expect("entries inside the rectangle");
    let d =
        knuth_forward_sweep(&f, Direction::TopLeft).expect("rectangles sweep in every direction");
    let up =
        PartitionChain::new((0..=h).map(|y| d.label(0, y).clone()).collect()).expect("monotone");
    let across = PartitionChain::new((0..=w).map(|x| d.label(w - x, h).clone()).collect())
        .expect("monotone");
    (
        SemistandardTableau::from_chain(&up).expect("horizontal strips"),
        SemistandardTableau::from_chain(&across).expect("horizontal strips"),
    )
}

/// Involutions of `1..=n`.
pub fn involutions(n: usize) -> Vec<Vec<usize>> {
    fn rec(p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(i) = p.iter().position(|&v| v == 0) else {
            out.push(p.clone());
            return;
        };
        p[i] = i + 1;
        rec(p, out);
        for j in i + 1..p.len() {
            if p[j] == 0 {
                p[i] = j + 1;
                p[j] = i + 1;
                rec(p, out);
                p[j] = 0;
            }
        }
        p[i] = 0;
    }
    let mut out = Vec::new();
    rec(&mut vec![0; n], &mut out);
    out
}

/// An involution has no fixed points exactly when its insertion tableau
/// has only even columns.
pub fn suite_parity(max_n: usize) -> SuiteReport {
    let parts = (0..=max_n)
        .into_par_iter()
        .map(|n| {
            let invs = involutions(n);
            let mut failures = Vec::new();
            for inv in &invs {
                let f = Filling::permutation(inv).expect("permutation");
                let (p, q) = match rs_correspondence(inv) {
                    Ok(pq) => pq,
                    Err(e) => {
                        failures.push(e.to_string());
                        continue;
                    }
                };
                let empty_diag = (0..n).all(|i| f.get(i, i) == 0);
                let even = p.shape().column_stats().num_odd_columns == 0;
                if p != q || empty_diag != even {
                    failures.push(format!("involution {inv:?}"));
                }
            }
            (invs.len(), failures)
        })
        .collect();
    SuiteReport::merge("parity", parts)
}
