//! The `wph` command line.
//!
//! Each command prints a `#` header naming the statement it checks, a few
//! report lines, and a final machine-readable `RESULT key=value …` line.
//! Exit codes: 0 verified, 1 precondition, 2 budget, 3 parse.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_bigint::BigUint;

use crate::bounds;
use crate::error::{Error, Result};
use crate::format;
use crate::lift;
use crate::primitives::{Coloring, FSpec, Witness, DEFAULT_MAX_CELLS};
use crate::search::{self, SearchBudget};
use crate::transforms;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PRECONDITION: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

/// Search nodes allowed when `lift` re-verifies its output.
const LIFT_VERIFY_NODES: u64 = 50_000_000;

#[derive(Debug, Parser)]
#[command(name = "wph", about = "Weak Ramsey numbers and bad sequences", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Weak Ramsey number wr_c(a), optionally checked by brute force
    Wr {
        #[arg(long)]
        c: u32,
        #[arg(long)]
        a: u64,
        /// Confirm by enumerating every coloring
        #[arg(long)]
        brute: bool,
        /// Dimension for the brute-force check
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = SearchBudget::default().max_colorings)]
        max_colorings: u64,
    },
    /// D^f_c(a), the longest (a,f)-bad sequence length
    Dmax {
        #[arg(long)]
        c: usize,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        f: String,
        #[arg(long, default_value_t = 1000)]
        cap: usize,
        /// Write the witness sequence here
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Convert between bad pair colorings and bad sequences
    Transform {
        #[command(subcommand)]
        direction: Direction,
    },
    /// Lift an m-bad d-dim coloring on [0,R-1] to dimension d+1 on [0,2^R-1]
    Lift {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Write an explicit table instead of the rule form
        #[arg(long)]
        tabulate: bool,
    },
    /// Erdős–Rado tree and min_d-homogeneous set of a coloring
    Extract {
        #[arg(long)]
        input: PathBuf,
        /// Also look for a weakly homogeneous set of this size by dimension reduction
        #[arg(long)]
        target: Option<usize>,
    },
    /// Tower upper and lower bounds for wr^d_c(m)
    Bounds {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        c: u64,
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = bounds::DEFAULT_MAX_BITS)]
        max_bits: u64,
    },
    /// Fast-growing hierarchy F_n(x)
    Fgh {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        x: u64,
        #[arg(long, default_value_t = bounds::DEFAULT_MAX_BITS)]
        max_bits: u64,
    },
    /// Threshold floor(n-th root of log^(d-2)(x))
    Threshold {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        x: BigUint,
    },
}

#[derive(Debug, Subcommand)]
enum Direction {
    /// f-bad coloring file -> (a,f)-bad sequence
    ToSeq {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        f: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// bad sequence file -> bad coloring on [a, a+D]
    ToColoring {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        a: u64,
        /// Certify f-badness for this f (default: f(a+i) = |m_i| + 1)
        #[arg(long)]
        f: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget { .. } => EXIT_BUDGET,
        Error::Parse { .. } | Error::Io(_) => EXIT_PARSE,
        _ => EXIT_PRECONDITION,
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs one command line, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_PARSE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    let mut report = Report::default();
    let status = dispatch(cli.command, &mut report);
    let _ = out.write_all(report.text.as_bytes());
    match status {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            let _ = writeln!(out, "RESULT status=error code={}", exit_code(&e));
            exit_code(&e)
        }
    }
}

#[derive(Default)]
struct Report {
    text: String,
}

impl Report {
    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn result(&mut self, fields: &[(&str, String)]) {
        let body: Vec<String> = fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
        self.line(format!("RESULT {}", body.join(" ")));
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn fspec(spec: &str) -> Result<FSpec> {
    format::parse_fspec(spec, None)
}

fn dispatch(cmd: Command, r: &mut Report) -> Result<i32> {
    match cmd {
        Command::Wr {
            c,
            a,
            brute,
            d,
            max_colorings,
        } => cmd_wr(r, c, a, brute, d, max_colorings),
        Command::Dmax {
            c,
            a,
            f,
            cap,
            witness,
        } => cmd_dmax(r, c, a, &f, cap, witness.as_deref()),
        Command::Transform { direction } => cmd_transform(r, direction),
        Command::Lift {
            input,
            m,
            output,
            tabulate,
        } => cmd_lift(r, &input, m, output.as_deref(), tabulate),
        Command::Extract { input, target } => cmd_extract(r, &input, target),
        Command::Bounds { d, c, m, max_bits } => cmd_bounds(r, d, c, m, max_bits),
        Command::Fgh { n, x, max_bits } => {
            r.line("# fast-growing hierarchy: F_0(x) = x+1, F_{n+1}(x) = F_n^(x+1)(x)");
            let v = bounds::fgh_with(n, &BigUint::from(x), &bounds::BitBudget(max_bits))?;
            r.line(v.to_string());
            r.result(&[
                ("n", n.to_string()),
                ("x", x.to_string()),
                ("value", v.to_string()),
            ]);
            Ok(EXIT_OK)
        }
        Command::Threshold { d, n, x } => {
            r.line("# threshold function f_n(x) = floor(n-th root of log^(d-2)(x))");
            let v = bounds::threshold_f(d, n, &x)?;
            r.line(v.to_string());
            r.result(&[
                ("d", d.to_string()),
                ("n", n.to_string()),
                ("value", v.to_string()),
            ]);
            Ok(EXIT_OK)
        }
    }
}

fn cmd_wr(
    r: &mut Report,
    c: u32,
    a: u64,
    brute: bool,
    d: usize,
    max_colorings: u64,
) -> Result<i32> {
    r.line("# weak Ramsey number: wr_c(a) = a^c for pair colorings (a = c = 0 excluded)");
    if d != 2 && !brute {
        return Err(Error::precondition(
            "the closed formula covers d = 2 only; add --brute",
        ));
    }
    let formula = if d == 2 {
        Some(search::compute_wr(c, a)?)
    } else {
        None
    };
    if !brute {
        let v = formula.unwrap();
        r.line(format!("formula={v}"));
        r.result(&[
            ("c", c.to_string()),
            ("a", a.to_string()),
            ("formula", v.to_string()),
        ]);
        return Ok(EXIT_OK);
    }
    let budget = SearchBudget {
        max_colorings,
        ..SearchBudget::default()
    };
    let found = search::brute_wr(c, a, d, &budget)?;
    let mut fields = vec![
        ("c", c.to_string()),
        ("a", a.to_string()),
        ("d", d.to_string()),
    ];
    let code = match formula {
        Some(v) => {
            let agree = v == found.value as u128;
            let verdict = if agree { "AGREE" } else { "DISAGREE" };
            r.line(format!("formula={v} brute={} {verdict}", found.value));
            fields.push(("formula", v.to_string()));
            fields.push(("brute", found.value.to_string()));
            fields.push(("status", verdict.to_lowercase()));
            if agree {
                EXIT_OK
            } else {
                EXIT_PRECONDITION
            }
        }
        None => {
            r.line(format!("brute={}", found.value));
            fields.push(("brute", found.value.to_string()));
            fields.push(("status", "verified".into()));
            EXIT_OK
        }
    };
    r.result(&fields);
    Ok(code)
}

fn cmd_dmax(
    r: &mut Report,
    c: usize,
    a: u64,
    f: &str,
    cap: usize,
    witness: Option<&Path>,
) -> Result<i32> {
    r.line("# miniaturized Dickson's lemma: D^f_c(a) = least D such that every (a,f)-bounded sequence of D+1 tuples has i<j with m_i <= m_j");
    let f_spec = fspec(f)?;
    let found = search::longest_bad_sequence(c, a, &f_spec, cap)?;
    let seq = found.witness.sequence().unwrap();
    if found.capped {
        r.line(format!("D>={} (capped)", found.length));
    } else {
        r.line(format!("D={}", found.length));
    }
    r.line(format!("witness: {seq}"));
    r.line(format!("certificate: {}", found.witness.certificate()));
    if let Some(path) = witness {
        write(path, &format::write_sequence(seq))?;
    }
    let status = if found.capped { "capped" } else { "exact" };
    r.result(&[
        ("c", c.to_string()),
        ("a", a.to_string()),
        ("f", f_spec.to_string()),
        ("D", found.length.to_string()),
        ("status", status.into()),
    ]);
    Ok(if found.capped { EXIT_BUDGET } else { EXIT_OK })
}

fn cmd_transform(r: &mut Report, direction: Direction) -> Result<i32> {
    match direction {
        Direction::ToSeq { input, f, output } => {
            r.line("# bad coloring to bad sequence: an f-bad C: [a,R]^2 -> c gives an (a,f)-bad sequence of R-a+1 tuples");
            let coloring = format::parse_coloring(&read(&input)?)?;
            let f_spec = fspec(&f)?;
            let seq = transforms::coloring_to_sequence(&coloring, &f_spec)?;
            let w = Witness::bad_sequence(seq, coloring.lo(), f_spec)?;
            let seq = w.sequence().unwrap();
            emit(r, output.as_deref(), &format::write_sequence(seq))?;
            r.line(format!("certificate: {}", w.certificate()));
            r.result(&[
                ("kind", "sequence".into()),
                ("n", seq.len().to_string()),
                ("c", seq.arity().to_string()),
                ("status", "verified".into()),
            ]);
            Ok(EXIT_OK)
        }
        Direction::ToColoring {
            input,
            a,
            f,
            output,
        } => {
            r.line("# bad sequence to bad coloring: an (a,f)-bad sequence m_0..m_D gives an f-bad C: [a,a+D]^2 -> c");
            let seq = format::parse_sequence(&read(&input)?)?;
            let f_spec = match f {
                Some(f) => fspec(&f)?,
                None => tightest_bound(&seq, a),
            };
            if !seq.is_bounded(a, &f_spec) {
                return Err(Error::precondition(format!(
                    "sequence is not ({a},{f_spec})-bounded"
                )));
            }
            let coloring = transforms::sequence_to_coloring(&seq, a)?;
            let w = Witness::bad_coloring(coloring, f_spec)?;
            emit(
                r,
                output.as_deref(),
                &format::write_coloring(w.coloring().unwrap())?,
            )?;
            r.line(format!("certificate: {}", w.certificate()));
            r.result(&[
                ("kind", "coloring".into()),
                ("a", a.to_string()),
                ("R", w.coloring().unwrap().hi().to_string()),
                ("status", "verified".into()),
            ]);
            Ok(EXIT_OK)
        }
    }
}

/// `f(a+i) = ‖m_i‖ + 1`, the least `f` bounding the sequence.
fn tightest_bound(seq: &crate::primitives::TupleSequence, a: u64) -> FSpec {
    let mut values = vec![0; a as usize];
    values.extend(seq.items().iter().map(|t| t.norm() + 1));
    FSpec::Table { values, default: 0 }
}

fn emit(r: &mut Report, output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => {
            write(path, text)?;
            r.line(format!("wrote {}", path.display()));
        }
        None => r.text.push_str(text),
    }
    Ok(())
}

fn cmd_lift(
    r: &mut Report,
    input: &Path,
    m: u64,
    output: Option<&Path>,
    tabulate: bool,
) -> Result<i32> {
    r.line("# lower-bound lift: an m-bad C: [0,R-1]^d -> c gives D: [0,2^R-1]^(d+1) -> 4c+1 whose weakly homogeneous sets above d+1 points have at most m points");
    let source = format::parse_coloring(&read(input)?)?;
    let lifted = lift::lift_bad_coloring(&source, m)?;
    r.line(format!(
        "{}-color dim-{} coloring on [{},{}]",
        lifted.colors(),
        lifted.dim(),
        lifted.lo(),
        lifted.hi()
    ));
    let text = if tabulate {
        format::write_coloring(&lifted.tabulate(DEFAULT_MAX_CELLS)?)?
    } else {
        format::write_coloring(&lifted)?
    };
    if let Some(path) = output {
        write(path, &text)?;
        r.line(format!("wrote {}", path.display()));
    }
    let limit = m.max(lifted.dim() as u64) as usize;
    let (status, code) =
        match search::find_weakly_homogeneous_of_size_with(&lifted, limit + 1, LIFT_VERIFY_NODES) {
            Ok(None) => {
                r.line(format!(
                    "verified {m}-bad: no weakly homogeneous set of size {}",
                    limit + 1
                ));
                ("verified", EXIT_OK)
            }
            Ok(Some(set)) => {
                r.line(format!("NOT {m}-bad: weakly homogeneous set {set:?}"));
                ("refuted", EXIT_PRECONDITION)
            }
            Err(Error::Budget { .. }) => {
                r.line("unverified (budget)");
                ("unverified", EXIT_BUDGET)
            }
            Err(e) => return Err(e),
        };
    r.result(&[
        ("d", lifted.dim().to_string()),
        ("c", lifted.colors().to_string()),
        ("R", lifted.hi().to_string()),
        ("m", m.to_string()),
        ("status", status.into()),
    ]);
    Ok(code)
}

fn cmd_extract(r: &mut Report, input: &Path, target: Option<usize>) -> Result<i32> {
    r.line("# Erdős–Rado tree: leftmost longest min_d-homogeneous branches, reduced one dimension at a time");
    let coloring: Coloring = format::parse_coloring(&read(input)?)?;
    if coloring.dim() < 2 {
        return Err(Error::precondition(
            "extract needs a coloring of dimension at least 2",
        ));
    }
    let tree = lift::build_er_tree(&coloring)?;
    r.line(format!("tree nodes={} depth={}", tree.len(), tree.depth()));
    let w = lift::extract_min_d_homogeneous(&coloring)?;
    let set = w.set().unwrap();
    r.line(format!("min_d-homogeneous set: {set:?}"));
    r.line(format!("certificate: {}", w.certificate()));
    let mut fields = vec![
        ("tree_nodes", tree.len().to_string()),
        ("depth", tree.depth().to_string()),
        ("set_size", set.len().to_string()),
    ];
    let mut code = EXIT_OK;
    if let Some(target) = target {
        let found = lift::find_weakly_homogeneous_recursive(&coloring, target)?;
        for lvl in &found.levels {
            let extracted = lvl
                .extracted
                .map_or("exhaustive".to_string(), |n| n.to_string());
            r.line(format!(
                "level dim={} domain={} target={} extracted={extracted}",
                lvl.dim, lvl.domain_size, lvl.target
            ));
        }
        match &found.found {
            Some(w) => {
                r.line(format!("weakly homogeneous set: {:?}", w.set().unwrap()));
                fields.push(("found", w.set().unwrap().len().to_string()));
            }
            None => {
                r.line(format!(
                    "no weakly homogeneous set of size {target} by reduction"
                ));
                fields.push(("found", "none".into()));
                code = EXIT_PRECONDITION;
            }
        }
    }
    fields.push((
        "status",
        if code == EXIT_OK { "verified" } else { "short" }.into(),
    ));
    r.result(&fields);
    Ok(code)
}

fn cmd_bounds(r: &mut Report, d: u32, c: u64, m: u64, max_bits: u64) -> Result<i32> {
    r.line("# higher-dimensional weak Ramsey bounds: wr^d_c(m) <= tower(d-2, m^((d+1)! c)) and wr^d_(5^(d-2) c)(m) >= tower(d-2, m^c)");
    let budget = bounds::BitBudget(max_bits);
    let ub = bounds::ub_bound_with(d, c, m, &budget);
    let lb = bounds::lb_bound_with(d, c, m, &budget);
    let show = |v: &Result<BigUint>| match v {
        Ok(v) => v.to_string(),
        Err(Error::Budget { estimate, .. }) => format!("refused({estimate})"),
        Err(e) => format!("n/a({e})"),
    };
    let ub_text = show(&ub);
    let (lb_text, lb_colors) = match &lb {
        Ok((k, v)) => (v.to_string(), k.to_string()),
        Err(e) => (show(&Err(e.clone())), "n/a".to_string()),
    };
    r.line(format!("ub={ub_text} lb={lb_text} (colors {lb_colors})"));
    r.result(&[
        ("d", d.to_string()),
        ("c", c.to_string()),
        ("m", m.to_string()),
        ("ub", ub_text.replace(' ', "_")),
        ("lb", lb_text.replace(' ', "_")),
        ("lb_colors", lb_colors),
    ]);
    let worst = [ub.err(), lb.err()]
        .into_iter()
        .flatten()
        .map(|e| exit_code(&e))
        .max()
        .unwrap_or(EXIT_OK);
    Ok(worst)
}
