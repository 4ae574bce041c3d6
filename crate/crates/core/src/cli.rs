//! The `osctab` command line. Exit codes: 0 on success, 1 when a
//! verification finds a mismatch, 2 on unreadable or invalid input.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bijection::{
    gen_oscillating_to_ssyt, odd_bound_expand, odd_bound_reduce, oscillating_to_syt,
    ssyt_to_gen_oscillating, syt_to_oscillating, GeneralizedOscillatingTableau, OscillatingTableau,
};
use crate::counting::{
    bessel_count, count_oscillating, count_syt, enumerate_oscillating, enumerate_syt,
};
use crate::error::Error;
use crate::growth::{
    backward_sweep_diagram, forward_sweep, rs_by_insertion, rs_correspondence, BoundaryWord,
    CellArrangement, Direction, Filling, GrowthDiagram,
};
use crate::partition::Partition;
use crate::tableau::{SemistandardTableau, StandardTableau};
use crate::verify;

#[derive(Parser, Debug)]
#[command(
    name = "osctab",
    version,
    about = "Oscillating tableaux, growth diagrams and column-bounded tableaux"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Map between tableaux and oscillating tableaux.
    Map {
        #[arg(value_enum)]
        direction: MapDirection,
        /// Column bound: columns of the tableau have length at most 2k and
        /// shapes of the walk have at most k columns. Defaults to the
        /// smallest bound the input allows.
        #[arg(long)]
        k: Option<usize>,
        /// Alphabet size for semistandard input (defaults to the largest entry).
        #[arg(long)]
        alphabet: Option<usize>,
        /// Input file; standard input when absent.
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Split a tableau with odd column bound 2k+1 into an even-column core and marks.
    Reduce {
        #[arg(value_enum)]
        what: OddBound,
        #[arg(long)]
        k: usize,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Inverse of `reduce`.
    Expand {
        #[arg(value_enum)]
        what: OddBound,
        #[arg(long)]
        k: usize,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Robinson-Schensted via growth diagrams, checked against row insertion.
    Rs {
        /// One-line permutation, e.g. `3,1,2` or `3 1 2`.
        perm: String,
    },
    /// Count oscillating tableaux by brute force and/or the Bessel determinant.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Final column height; with `--table`, every m up to n.
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        /// Print rows `n k m oscillating tableaux bessel agree` for all sizes up to n.
        #[arg(long)]
        table: bool,
    },
    /// List every object on one side of the standard bijection.
    Enumerate {
        #[arg(long, value_enum)]
        side: Side,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
    },
    /// Run a self-verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
    /// Dump a growth diagram.
    Diagram {
        #[arg(value_enum)]
        mode: SweepMode,
        /// Arrangement file: one line of column heights.
        #[arg(long)]
        arr: PathBuf,
        /// Filling file (forward) or boundary word file, one partition per
        /// line (backward).
        #[arg(long)]
        fill: PathBuf,
        #[arg(long, value_enum, default_value_t = SweepDirection::TopRight)]
        dir: SweepDirection,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum MapDirection {
    Syt2osc,
    Osc2syt,
    Ssyt2osc,
    Osc2ssyt,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum OddBound {
    OddBound,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Bessel,
    Both,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Side {
    Osc,
    Syt,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Suite {
    Thm3,
    Thm4,
    Greene,
    Formula,
    Rs,
    Parity,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum SweepMode {
    Forward,
    Backward,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum SweepDirection {
    TopRight,
    TopLeft,
    BottomRight,
    BottomLeft,
}

impl From<SweepDirection> for Direction {
    fn from(d: SweepDirection) -> Self {
        match d {
            SweepDirection::TopRight => Direction::TopRight,
            SweepDirection::TopLeft => Direction::TopLeft,
            SweepDirection::BottomRight => Direction::BottomRight,
            SweepDirection::BottomLeft => Direction::BottomLeft,
        }
    }
}

/// Failure of a command: bad input or a failed check.
enum Failure {
    Input(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<String, Failure>;

/// Runs the command line and returns the process exit code.
pub fn run<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    configure_threads();
    let result = dispatch(&cli);
    let mut stdout = io::stdout().lock();
    match result {
        Ok(out) => {
            let _ = stdout.write_all(out.as_bytes());
            0
        }
        Err(Failure::Mismatch(out)) => {
            let _ = stdout.write_all(out.as_bytes());
            1
        }
        Err(Failure::Input(msg)) => {
            eprintln!("osctab: {msg}");
            2
        }
    }
}

/// Honours `OSCTAB_THREADS` for the verification suites.
fn configure_threads() {
    if let Some(n) = std::env::var("OSCTAB_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) => {
            fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))
        }
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn shapes_json(shapes: &[Partition]) -> serde_json::Value {
    json!(shapes)
}

/// Smallest `k` with every column of `shape` at most `2k` long.
fn minimal_k(shape: &Partition) -> usize {
    shape.len().div_ceil(2).max(1)
}

fn dispatch(cli: &Cli) -> Outcome {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Map {
            direction,
            k,
            alphabet,
            input,
        } => {
            let text = read_input(input)?;
            map(*direction, *k, *alphabet, &text, json)
        }
        Command::Reduce { k, input, .. } => {
            let t: StandardTableau = read_input(input)?.parse()?;
            let (core, marks) = odd_bound_reduce(&t, *k)?;
            Ok(if json {
                format!("{}\n", json!({"core": core.rows(), "marks": marks}))
            } else {
                format!("{}{core}", marks_line(&marks))
            })
        }
        Command::Expand { k, input, .. } => {
            let text = read_input(input)?;
            let (marks, core) = parse_marked(&text)?;
            let t = odd_bound_expand(&core, &marks, *k)?;
            Ok(if json {
                format!("{}\n", json!({"tableau": t.rows()}))
            } else {
                t.to_string()
            })
        }
        Command::Rs { perm } => rs(perm, json),
        Command::Count {
            n,
            k,
            m,
            method,
            table,
        } => {
            if *table {
                Ok(count_table(*n, *k, json))
            } else {
                count(*n, *k, *m, *method, json)
            }
        }
        Command::Enumerate { side, n, k, m } => Ok(enumerate(*side, *n, *k, *m, json)),
        Command::Verify { suite, max_n, seed } => {
            let report = match suite {
                Suite::Thm3 => verify::suite_standard(*max_n),
                Suite::Thm4 => verify::suite_semistandard(*max_n, *seed),
                Suite::Greene => verify::suite_greene(500, *seed),
                Suite::Formula => verify::suite_formula(*max_n),
                Suite::Rs => verify::suite_rs(*max_n, *seed),
                Suite::Parity => verify::suite_parity(*max_n),
            };
            let out = if json {
                format!(
                    "{}\n",
                    json!({"suite": report.suite, "cases": report.cases, "failures": report.failures})
                )
            } else {
                report.to_string()
            };
            if report.passed() {
                Ok(out)
            } else {
                Err(Failure::Mismatch(out))
            }
        }
        Command::Diagram {
            mode,
            arr,
            fill,
            dir,
        } => diagram(*mode, arr, fill, (*dir).into(), json),
    }
}

fn map(
    direction: MapDirection,
    k: Option<usize>,
    alphabet: Option<usize>,
    text: &str,
    json: bool,
) -> Outcome {
    Ok(match direction {
        MapDirection::Syt2osc => {
            let t: StandardTableau = text.parse()?;
            let o = syt_to_oscillating(&t, k.unwrap_or_else(|| minimal_k(&t.shape())))?;
            if json {
                format!(
                    "{}\n",
                    json!({"k": o.k(), "shapes": shapes_json(o.shapes())})
                )
            } else {
                o.to_string()
            }
        }
        MapDirection::Osc2syt => {
            let o: OscillatingTableau = text.parse()?;
            let o = match k {
                Some(k) => OscillatingTableau::new(o.shapes().to_vec(), k)?,
                None => o,
            };
            let t = oscillating_to_syt(&o)?;
            if json {
                format!("{}\n", json!({"tableau": t.rows()}))
            } else {
                t.to_string()
            }
        }
        MapDirection::Ssyt2osc => {
            let t: SemistandardTableau = text.parse()?;
            let t = match alphabet {
                Some(a) => SemistandardTableau::with_alphabet(t.tableau().clone(), a)?,
                None => t,
            };
            let o = ssyt_to_gen_oscillating(&t, k.unwrap_or_else(|| minimal_k(&t.shape())))?;
            if json {
                format!(
                    "{}\n",
                    json!({"k": o.k(), "content": o.content(), "shapes": shapes_json(o.shapes())})
                )
            } else {
                o.to_string()
            }
        }
        MapDirection::Osc2ssyt => {
            let o: GeneralizedOscillatingTableau = text.parse()?;
            let o = match k {
                Some(k) => GeneralizedOscillatingTableau::new(o.shapes().to_vec(), k)?,
                None => o,
            };
            let t = gen_oscillating_to_ssyt(&o)?;
            if json {
                format!(
                    "{}\n",
                    json!({"alphabet": t.alphabet(), "tableau": t.rows()})
                )
            } else {
                t.to_string()
            }
        }
    })
}

fn marks_line(marks: &[usize]) -> String {
    let mut line = String::from("marks");
    for v in marks {
        line.push_str(&format!(" {v}"));
    }
    line + "\n"
}

/// `marks a b c` on the first content line, then the core's rows.
fn parse_marked(text: &str) -> Result<(Vec<usize>, StandardTableau), Failure> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let (i, first) = lines
        .next()
        .ok_or_else(|| Failure::Input("line 1: expected `marks ...`".into()))?;
    let mut words = first.split_whitespace();
    if words.next() != Some("marks") {
        return Err(Failure::Input(format!(
            "line {}: expected `marks ...`",
            i + 1
        )));
    }
    let marks = words
        .map(|w| {
            w.parse::<usize>()
                .map_err(|e| Failure::Input(format!("line {}: {w}: {e}", i + 1)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let rest: Vec<&str> = lines.map(|(_, l)| l).collect();
    let core = if rest.is_empty() {
        StandardTableau::empty()
    } else {
        rest.join("\n")
            .parse()
            .map_err(|e: Error| Failure::Input(e.to_string()))?
    };
    Ok((marks, core))
}

fn rs(perm: &str, json: bool) -> Outcome {
    let values = perm
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|w| !w.is_empty())
        .map(|w| {
            w.parse::<usize>()
                .map_err(|e| Failure::Input(format!("{w}: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let (p, q) = rs_correspondence(&values)?;
    let agree = rs_by_insertion(&values)? == (p.clone(), q.clone());
    let out = if json {
        format!(
            "{}\n",
            json!({"p": p.rows(), "q": q.rows(), "agree": agree})
        )
    } else {
        format!("P\n{p}Q\n{q}{}\n", if agree { "agree" } else { "disagree" })
    };
    if agree {
        Ok(out)
    } else {
        Err(Failure::Mismatch(out))
    }
}

fn count(n: usize, k: usize, m: usize, method: Method, json: bool) -> Outcome {
    let brute = (method != Method::Bessel).then(|| count_oscillating(n, k, m));
    let bessel = match method {
        Method::Brute => None,
        _ => Some(bessel_count(n, k, m)?),
    };
    let agree = match (&brute, &bessel) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let out = if json {
        format!(
            "{}\n",
            json!({
                "n": n, "k": k, "m": m,
                "brute": brute.as_ref().map(ToString::to_string),
                "bessel": bessel.as_ref().map(ToString::to_string),
                "agree": agree,
            })
        )
    } else {
        let mut fields: Vec<String> = brute
            .iter()
            .chain(&bessel)
            .map(ToString::to_string)
            .collect();
        if let Some(a) = agree {
            fields.push(if a { "agree" } else { "disagree" }.into());
        }
        format!("{}\n", fields.join(" "))
    };
    if agree == Some(false) {
        Err(Failure::Mismatch(out))
    } else {
        Ok(out)
    }
}

fn count_table(max_n: usize, k: usize, json: bool) -> String {
    let mut rows = Vec::new();
    for n in 0..=max_n {
        for m in (n % 2..=n).step_by(2) {
            let osc = count_oscillating(n, k, m);
            let syt = count_syt(n, 2 * k, m);
            let bessel = bessel_count(n, k, m)
                .map(|b| b.to_string())
                .unwrap_or_else(|e| e.to_string());
            let agree = osc == syt && osc.to_string() == bessel;
            rows.push((n, m, osc.to_string(), syt.to_string(), bessel, agree));
        }
    }
    if json {
        let v: Vec<_> = rows
            .iter()
            .map(|(n, m, o, s, b, a)| json!({"n": n, "k": k, "m": m, "oscillating": o, "tableaux": s, "bessel": b, "agree": a}))
            .collect();
        format!("{}\n", serde_json::Value::Array(v))
    } else {
        let mut out = String::from("n k m oscillating tableaux bessel agree\n");
        for (n, m, o, s, b, a) in rows {
            out.push_str(&format!(
                "{n} {k} {m} {o} {s} {b} {}\n",
                if a { "yes" } else { "no" }
            ));
        }
        out
    }
}

fn enumerate(side: Side, n: usize, k: usize, m: usize, json: bool) -> String {
    match side {
        Side::Osc => {
            let all = enumerate_oscillating(n, k, m);
            if json {
                let v: Vec<_> = all.iter().map(|o| shapes_json(o.shapes())).collect();
                format!("{}\n", serde_json::Value::Array(v))
            } else {
                all.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("\n")
            }
        }
        Side::Syt => {
            let all = enumerate_syt(n, 2 * k, m);
            if json {
                let v: Vec<_> = all.iter().map(|t| json!(t.rows())).collect();
                format!("{}\n", serde_json::Value::Array(v))
            } else {
                all.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("\n")
            }
        }
    }
}

fn diagram(
    mode: SweepMode,
    arr_path: &Path,
    fill_path: &Path,
    dir: Direction,
    json: bool,
) -> Outcome {
    let arr_text = read_input(&Some(arr_path.to_path_buf()))?;
    let heights = arr_text
        .lines()
        .find(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .unwrap_or("")
        .split_whitespace()
        .map(|w| {
            w.parse::<usize>()
                .map_err(|e| Failure::Input(format!("{}: {w}: {e}", arr_path.display())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let arr = CellArrangement::new(heights)?;
    let body = read_input(&Some(fill_path.to_path_buf()))?;
    let d: GrowthDiagram = match mode {
        SweepMode::Forward => {
            let f: Filling = body.parse()?;
            if f.arrangement() != &arr {
                return Err(Failure::Input(format!(
                    "{}: filling is on another arrangement than {}",
                    fill_path.display(),
                    arr_path.display()
                )));
            }
            forward_sweep(&f, dir)?
        }
        SweepMode::Backward => {
            let labels = crate::bijection::parse_shapes(&body)?;
            let word = BoundaryWord::new(&arr, labels)?;
            backward_sweep_diagram(&arr, &word, dir)?
        }
    };
    Ok(if json {
        format!(
            "{}\n",
            serde_json::to_string(&d.dump()).expect("serializable")
        )
    } else {
        d.to_string()
    })
}
