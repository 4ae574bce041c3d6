//! Acceptance suite: one line per criterion, `PASS` or `FAIL`, then a
//! non-zero exit if anything failed. Runs without the libtest harness so the
//! lines always reach the output.

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use oscillating_tableaux::bijection::{
    check_square, gen_oscillating_to_ssyt, involution_of, odd_bound_expand, odd_bound_reduce,
    oscillating_to_syt, square_involution, ssyt_to_gen_oscillating_traced, syt_to_oscillating,
    syt_to_oscillating_traced,
};
use oscillating_tableaux::counting::{
    bessel_count, count_oscillating, count_syt, enumerate_oscillating, enumerate_syt,
};
use oscillating_tableaux::growth::{
    forward_sweep, greene_ranks_bruteforce, rs_by_insertion, rs_correspondence, Direction, Filling,
};
use oscillating_tableaux::insertion::rsk_matrix;
use oscillating_tableaux::verify::{involutions, knuth_rsk, random_filling, random_matrix};
use oscillating_tableaux::{Letter, Partition, SemistandardTableau, StandardTableau};

/// Wall-clock limits, and the seeds of the randomized criteria.
const GOLDEN_LIMIT: Duration = Duration::from_secs(1);
const EXHAUSTIVE_LIMIT: Duration = Duration::from_secs(60);
const GREENE_SEED: u64 = 0x6772_6565_6e65;
const GREENE_CASES: usize = 500;
const GREENE_MAX_ONES: usize = 12;
const RSK_SEED: u64 = 0x0072_736b;
const RSK_CASES: usize = 200;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn shapes(text: &str) -> Vec<Partition> {
    text.split(',')
        .map(|w| {
            let w = w.trim();
            if w == "∅" {
                Partition::empty()
            } else {
                Partition::new(
                    w.chars()
                        .map(|c| c.to_digit(10).unwrap() as usize)
                        .collect::<Vec<_>>(),
                )
                .unwrap()
            }
        })
        .collect()
}

fn compact(word: &[Partition]) -> String {
    word.iter()
        .map(|p| {
            if p.is_empty() {
                "∅".to_string()
            } else {
                p.parts().iter().map(ToString::to_string).collect()
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

fn running_example() -> StandardTableau {
    "1 3 4 8\n2 6 7\n5 10\n9 12\n11\n".parse().unwrap()
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn golden_standard() -> Outcome {
    let t = running_example();
    let (res, elapsed) = timed(|| {
        let o = syt_to_oscillating(&t, 3).map_err(|e| e.to_string())?;
        let back = oscillating_to_syt(&o).map_err(|e| e.to_string())?;
        Ok::<_, String>((o.shapes().to_vec(), back))
    });
    let (word, back) = res?;
    ensure!(back == t, "round trip returned\n{back}");
    ensure!(elapsed < GOLDEN_LIMIT, "took {elapsed:?}");
    let expected = shapes("∅,1,11,21,31,311,3111,311,31,21,22,21,11");
    ensure!(
        word == expected,
        "expected {}, computed {} (round trip and time limit hold)",
        compact(&expected),
        compact(&word)
    );
    Ok(format!("{} in {elapsed:?}", compact(&word)))
}

fn golden_square() -> Outcome {
    let (trace, _) = syt_to_oscillating_traced(&running_example(), 3).map_err(|e| e.to_string())?;
    let n = |v| Letter::Num(v);
    let expected = vec![
        (Letter::Marker(1), n(5)),
        (Letter::Marker(2), n(11)),
        (n(1), n(9)),
        (n(2), n(6)),
        (n(3), n(7)),
        (n(4), n(12)),
        (n(8), n(10)),
    ];
    let sq = &trace.square;
    let size = sq.arrangement().width();
    ensure!(size == 14, "square has side {size}");
    ensure!(sq.ones().len() == 14, "square has {} ones", sq.ones().len());
    check_square(sq, 2, Some(6)).map_err(|e| e.to_string())?;
    let got = square_involution(sq, 2);
    ensure!(got == expected, "involution {got:?}");
    // The same involution from inverse row insertion of the pair (T', T').
    let by_insertion = involution_of(&trace.augmented);
    ensure!(by_insertion == expected, "insertion gives {by_insertion:?}");
    Ok("(I,5)(II,11)(1,9)(2,6)(3,7)(4,12)(8,10)".into())
}

fn golden_semistandard() -> Outcome {
    let t: SemistandardTableau = "1 1 1 1 1 3 3\n2 2 3 3 4 4\n3 3\n4\n".parse().unwrap();
    ensure!(t.content() == vec![5, 2, 6, 3], "content {:?}", t.content());
    let (res, elapsed) = timed(|| {
        let (trace, o) = ssyt_to_gen_oscillating_traced(&t, 2).map_err(|e| e.to_string())?;
        let back = gen_oscillating_to_ssyt(&o).map_err(|e| e.to_string())?;
        Ok::<_, String>((trace, o, back))
    });
    let (trace, o, back) = res?;
    let expected = shapes("∅,∅,111,1,2111,1111,2111,1,11");
    ensure!(o.shapes() == expected, "computed {}", compact(o.shapes()));
    ensure!(back == t, "round trip returned\n{back}");
    // Rows listed bottom to top.
    let matrix = Filling::from_rows_bottom_up(&[
        vec![0, 0, 0, 1, 0, 0],
        vec![0, 1, 0, 0, 0, 0],
        vec![1, 2, 1, 0, 0, 1],
        vec![0, 1, 0, 1, 0, 0],
        vec![2, 0, 1, 2, 1, 0],
        vec![0, 2, 0, 1, 0, 0],
    ])
    .unwrap();
    ensure!(
        trace.square == matrix,
        "intermediate matrix\n{}",
        trace.square
    );
    ensure!(elapsed < GOLDEN_LIMIT, "took {elapsed:?}");
    Ok(format!("{} in {elapsed:?}", compact(o.shapes())))
}

fn equinumeration() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for n in 0..=9 {
        for k in 1..=3 {
            for m in 0..=n {
                let a = count_oscillating(n, k, m);
                let b = count_syt(n, 2 * k, m);
                ensure!(a == b, "n={n} k={k} m={m}: {a} oscillating, {b} tableaux");
                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < EXHAUSTIVE_LIMIT, "took {elapsed:?}");
    Ok(format!("{checked} triples in {elapsed:?}"))
}

fn bijectivity() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for n in 0..=7 {
        for k in 1..=2 {
            for m in 0..=n {
                let domain = enumerate_syt(n, 2 * k, m);
                let image: HashSet<Vec<Partition>> = domain
                    .iter()
                    .map(|t| syt_to_oscillating(t, k).map(|o| o.shapes().to_vec()))
                    .collect::<Result<_, _>>()
                    .map_err(|e| e.to_string())?;
                let target: HashSet<Vec<Partition>> = enumerate_oscillating(n, k, m)
                    .into_iter()
                    .map(|o| o.shapes().to_vec())
                    .collect();
                ensure!(
                    image.len() == domain.len(),
                    "n={n} k={k} m={m}: not injective"
                );
                ensure!(
                    image == target,
                    "n={n} k={k} m={m}: image differs from the full set"
                );
                total += domain.len();
            }
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < EXHAUSTIVE_LIMIT, "took {elapsed:?}");
    Ok(format!("{total} tableaux in {elapsed:?}"))
}

fn formula() -> Outcome {
    let small = bessel_count(3, 1, 1).map_err(|e| e.to_string())?;
    ensure!(small == BigUint::from(2u8), "(3,1,1) gives {small}");
    let mut checked = 0;
    for n in 1..=10 {
        for k in 1..=3 {
            for m in 0..=4 {
                let brute = count_oscillating(n, k, m);
                let b = bessel_count(n, k, m).map_err(|e| e.to_string())?;
                ensure!(brute == b, "n={n} k={k} m={m}: brute {brute}, formula {b}");
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} triples"))
}

fn greene() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(GREENE_SEED);
    let mut corners = 0;
    for case in 0..GREENE_CASES {
        let f = random_filling(&mut rng, 12, 12, GREENE_MAX_ONES);
        let d = forward_sweep(&f, Direction::TopRight).map_err(|e| e.to_string())?;
        let arr = f.arrangement();
        for x in 0..=arr.width() {
            for y in 0..=arr.corner_top(x) {
                let label = d.label(x, y);
                let conj = label.conjugate();
                for k in 1..=f.total() {
                    let ne: usize = label.parts().iter().take(k).sum();
                    let se: usize = conj.parts().iter().take(k).sum();
                    let got = greene_ranks_bruteforce(&f, (x, y), k).map_err(|e| e.to_string())?;
                    ensure!(
                        got == (ne, se),
                        "case {case}, corner ({x},{y}), k={k}: label {label}, chains {got:?}\n{f}"
                    );
                }
                corners += 1;
            }
        }
    }
    Ok(format!("{GREENE_CASES} fillings, {corners} corners"))
}

fn rs_consistency() -> Outcome {
    let mut perms = 0;
    for n in 0..=6 {
        for p in permutations(n) {
            let g = rs_correspondence(&p).map_err(|e| e.to_string())?;
            let i = rs_by_insertion(&p).map_err(|e| e.to_string())?;
            ensure!(g == i, "permutation {p:?}");
            perms += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(RSK_SEED);
    for _ in 0..RSK_CASES {
        let a = random_matrix(&mut rng, 4, 4, 3);
        ensure!(knuth_rsk(&a) == rsk_matrix(&a), "matrix {a:?}");
    }
    Ok(format!("{perms} permutations, {RSK_CASES} matrices"))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

fn parity() -> Outcome {
    let mut count = 0;
    for n in 0..=6 {
        for inv in involutions(n) {
            let f = Filling::permutation(&inv).unwrap();
            ensure!(f.is_symmetric(), "{inv:?} is not symmetric");
            let (p, q) = rs_correspondence(&inv).map_err(|e| e.to_string())?;
            ensure!(p == q, "{inv:?}: P and Q differ");
            let empty_diagonal = (0..n).all(|i| f.get(i, i) == 0);
            let even = p.shape().column_lengths().iter().all(|l| l % 2 == 0);
            ensure!(
                empty_diagonal == even,
                "{inv:?}: diagonal empty {empty_diagonal}, even columns {even}"
            );
            count += 1;
        }
    }
    Ok(format!("{count} involutions"))
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::from(1u8), |acc, i| {
        acc * BigUint::from(n - i) / BigUint::from(i + 1)
    })
}

fn odd_bound() -> Outcome {
    for n in 0..=9 {
        for k in 0..=2 {
            for m in 0..=n {
                let lhs = count_syt(n, 2 * k + 1, m);
                let rhs = binomial(n, m) * count_syt(n - m, 2 * k, 0);
                ensure!(lhs == rhs, "n={n} k={k} m={m}: {lhs} vs {rhs}");
            }
        }
    }
    let mut tableaux = 0;
    for n in 0..=7 {
        for k in 0..=3 {
            for m in 0..=n {
                let all = enumerate_syt(n, 2 * k + 1, m);
                let mut images = HashSet::new();
                for t in &all {
                    let (core, marks) = odd_bound_reduce(t, k).map_err(|e| e.to_string())?;
                    ensure!(marks.len() == m, "{t}: {} marks", marks.len());
                    ensure!(
                        core.shape().column_stats().num_odd_columns == 0,
                        "{t}: odd core"
                    );
                    let back = odd_bound_expand(&core, &marks, k).map_err(|e| e.to_string())?;
                    ensure!(&back == t, "{t}: expanded to\n{back}");
                    images.insert((core.rows().to_vec(), marks));
                }
                ensure!(
                    images.len() == all.len(),
                    "n={n} k={k} m={m}: reduction not injective"
                );
                tableaux += all.len();
            }
        }
    }
    Ok(format!("identity for n <= 9, {tableaux} round trips"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("standard bijection, running example", golden_standard),
        ("square reconstruction and involution", golden_square),
        (
            "semistandard bijection, running example",
            golden_semistandard,
        ),
        ("equinumeration n <= 9, k <= 3", equinumeration),
        ("bijectivity n <= 7, k <= 2", bijectivity),
        ("Bessel determinant vs brute force", formula),
        ("corner labels vs chain maxima", greene),
        ("growth diagrams vs row insertion and RSK", rs_consistency),
        ("empty diagonal iff even columns", parity),
        ("odd column bound reduction", odd_bound),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
