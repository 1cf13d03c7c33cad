//! Command-line frontend: build codes from descriptors, compute parameters,
//! run repair demos, reproduce the reference matrices and tables, and emit
//! bound reports.
//!
//! All coordinates in user-facing input and output are 1-indexed. Output is
//! deterministic for identical arguments; `--seed` is reserved for randomized
//! sweeps and does not affect any construction. Exit codes: 0 success, 1 on
//! precondition violations (one-line `error: ...` on stderr), 2 when the
//! min-distance search budget is exhausted.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;

use gaglrc::bounds::{
    asymptotic_rates, dv_order_r, gs_tower_params, gv_lrc_rate, lrc_defect, singleton_lrc,
    Rational,
};
use gaglrc::code::{CodeError, LinearCode, DEFAULT_DISTANCE_BUDGET};
use gaglrc::descriptor::{render_matrix, Descriptor};
use gaglrc::field::{Field, FieldElement};
use gaglrc::lrc::{
    build_concatenated, build_optimal_q_family, construction1_params, GagLrcCode,
};

const GOLDEN_G0: &str = include_str!("../golden/g0.txt");
const GOLDEN_G1: &str = include_str!("../golden/g1.txt");
const GOLDEN_GRS: &str = include_str!("../golden/grs.txt");
const GOLDEN_G: &str = include_str!("../golden/g.txt");
const EXAMPLE_DESC: &str = include_str!("../golden/example.desc");

#[derive(Parser)]
#[command(name = "gaglrc", version, about = "Locally recoverable codes from evaluation at non-rational places of GF(q)(x)")]
struct Cli {
    /// Seed for randomized sweeps (constructions are deterministic regardless).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Build the code from a descriptor file and print its generator matrix.
    Build {
        #[arg(long)]
        descriptor: PathBuf,
    },
    /// Compute the minimum distance (exhaustive, or certified with a witness).
    Mindist {
        #[arg(long)]
        descriptor: PathBuf,
        /// Codeword budget for the exhaustive search.
        #[arg(long)]
        budget: Option<u64>,
        /// Certify d >= CLAIM from the parity-check matrix instead of
        /// searching (2 or 3).
        #[arg(long)]
        claim: Option<usize>,
        /// Witness message (k elements) whose encoding upper-bounds d.
        #[arg(long, num_args = 1.., requires = "claim")]
        witness: Vec<String>,
    },
    /// Repair one erased symbol from its recovery set.
    Repair {
        #[arg(long)]
        descriptor: PathBuf,
        /// Received word, n field elements.
        #[arg(long, num_args = 1..)]
        word: Vec<String>,
        /// Erased coordinate, 1-indexed.
        #[arg(long)]
        erase: usize,
    },
    /// Report the certified locality of a descriptor's code.
    Locality {
        #[arg(long)]
        descriptor: PathBuf,
    },
    /// Build the optimal-family code over GF(q) and verify its parameters.
    Family {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = DEFAULT_DISTANCE_BUDGET)]
        budget: u64,
    },
    /// Concatenate an outer Reed-Solomon code with a single-parity-check
    /// inner code and print the resulting parameters.
    Concat {
        /// Outer code as q,s,k0: RS(s, k0) over GF(q) at the first s elements.
        #[arg(long)]
        outer: String,
        /// Inner code as q,n: the [n, n-1, 2] parity code over prime GF(q).
        #[arg(long)]
        inner: String,
        /// Also compute the exhaustive minimum distance.
        #[arg(long)]
        mindist: bool,
    },
    /// Reproduce the n = 9 genus-zero parameter table rows. Entries with
    /// n >= 12 depend on unrecorded random choices and are not covered.
    Table1,
    /// Print a bound report.
    Bounds {
        #[arg(long, value_enum)]
        kind: BoundKind,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        q: Option<u64>,
        /// Relative distance; a decimal for gv, a fraction a/b for asymptotic.
        #[arg(long)]
        delta: Option<String>,
        /// Tower level for gs and the tower entry of asymptotic.
        #[arg(long)]
        ell: Option<u32>,
    },
    /// Emit one of the reference matrices byte-for-byte.
    Golden {
        #[arg(long, value_enum)]
        which: GoldenKind,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum BoundKind {
    Singleton,
    Gv,
    Dv,
    Gs,
    Asymptotic,
}

#[derive(Copy, Clone, ValueEnum)]
enum GoldenKind {
    G0,
    G1,
    Grs,
    G,
}

enum CliError {
    Precondition(String),
    Budget(String),
}

impl CliError {
    fn pre(msg: impl Into<String>) -> CliError {
        CliError::Precondition(msg.into())
    }
}

impl From<CodeError> for CliError {
    fn from(e: CodeError) -> CliError {
        match e {
            CodeError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(CliError::Precondition(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let _ = cli.seed; // reserved: no subcommand draws randomness yet
    match &cli.command {
        Command::Build { descriptor } => {
            let code = load(descriptor)?;
            Ok(render_matrix(code.field(), code.base().generator()))
        }
        Command::Mindist {
            descriptor,
            budget,
            claim,
            witness,
        } => {
            let code = load(descriptor)?;
            if let Some(claim) = claim {
                let w = parse_word(code.field(), witness, code.k(), "witness")?;
                let witness = (!w.is_empty()).then_some(w);
                let b = code.base().distance_bounds(*claim, witness.as_deref())?;
                let line = match b.upper {
                    Some(u) if u == b.lower => format!("d={}", b.lower),
                    Some(u) => format!("d_lower={} d_upper={u}", b.lower),
                    None => format!("d_lower={}", b.lower),
                };
                Ok(report(cli.format, "mindist", &line))
            } else {
                let budget = budget.unwrap_or(DEFAULT_DISTANCE_BUDGET);
                let d = code.base().min_distance_exhaustive_with_budget(budget)?;
                Ok(report(cli.format, "mindist", &format!("d={d}")))
            }
        }
        Command::Repair {
            descriptor,
            word,
            erase,
        } => {
            let code = load(descriptor)?;
            if *erase < 1 || *erase > code.n() {
                return Err(CliError::pre(format!(
                    "erase index must lie in 1..={}, got {erase}",
                    code.n()
                )));
            }
            let word = parse_word(code.field(), word, code.n(), "word")?;
            let (symbol, used) = code
                .repair_symbol(&word, erase - 1)
                .map_err(|e| CliError::pre(e.to_string()))?;
            let used: Vec<String> = used.iter().map(|j| (j + 1).to_string()).collect();
            Ok(report(
                cli.format,
                "repair",
                &format!("symbol={symbol} recovery={}", used.join(",")),
            ))
        }
        Command::Locality { descriptor } => {
            let code = load(descriptor)?;
            let verified = code.verify_locality();
            Ok(report(
                cli.format,
                "locality",
                &format!("r={} verified={verified}", code.locality()),
            ))
        }
        Command::Family { q, budget } => {
            let fam = build_optimal_q_family(*q).map_err(|e| CliError::pre(e.to_string()))?;
            let base = fam.code.base();
            let total = (*q as u128).pow(fam.code.k() as u32);
            let d = if total - 1 <= *budget as u128 {
                base.min_distance_exhaustive_with_budget(*budget)?
            } else {
                let b = base.distance_bounds(3, Some(&fam.witness))?;
                let upper = b.upper.expect("witness supplied");
                if upper != b.lower {
                    return Err(CliError::pre(format!(
                        "certification left a gap: d in [{}, {upper}]",
                        b.lower
                    )));
                }
                upper
            };
            let r = fam.code.locality() as u64;
            let defect = lrc_defect(fam.code.n() as u64, fam.code.k() as u64, d as u64, r)
                .map_err(|e| CliError::pre(e.to_string()))?;
            Ok(report(
                cli.format,
                "family",
                &format!(
                    "n={} k={} d={d} r={r} defect={defect}",
                    fam.code.n(),
                    fam.code.k()
                ),
            ))
        }
        Command::Concat {
            outer,
            inner,
            mindist,
        } => {
            let [oq, s, k0] = parse_triple(outer, "--outer q,s,k0")?;
            let [iq, inn] = parse_pair(inner, "--inner q,n")?;
            if inn < 2 {
                return Err(CliError::pre("inner length must be at least 2"));
            }
            let (p, m) = factor(oq).ok_or_else(|| {
                CliError::pre(format!("outer field order {oq} is not a prime power"))
            })?;
            let outer_field =
                Field::new(p, m).map_err(|e| CliError::pre(e.to_string()))?;
            if s > oq {
                return Err(CliError::pre(format!(
                    "outer length {s} exceeds the field order {oq}"
                )));
            }
            let points: Vec<FieldElement> =
                (0..s).map(|i| outer_field.from_index(i)).collect();
            let outer_code = LinearCode::reed_solomon(outer_field, &points, k0 as usize)?;
            let inner_field = Field::new(iq, 1).map_err(|e| CliError::pre(e.to_string()))?;
            let inner_code = LinearCode::single_parity_check(inner_field, inn as usize - 1)?;
            let code = build_concatenated(&outer_code, &inner_code)
                .map_err(|e| CliError::pre(e.to_string()))?;
            let r = inn - 1;
            let params = construction1_params(iq, r, s, 0, k0)
                .map_err(|e| CliError::pre(e.to_string()))?;
            let mut line = format!(
                "n={} k={} r={r} d_design={} d_max={} defect={} rate_bound={}",
                params.n, params.k, params.d_design, params.d_singleton, params.defect,
                params.rate_bound
            );
            if *mindist {
                let d = code.min_distance_exhaustive()?;
                let refined = params.with_actual_distance(d as u64);
                line = format!(
                    "n={} k={} r={r} d={d} d_design={} d_max={} defect={} rate_bound={}",
                    refined.n,
                    refined.k,
                    refined.d_design,
                    refined.d_singleton,
                    refined.defect,
                    refined.rate_bound
                );
            }
            Ok(report(cli.format, "concat", &line))
        }
        Command::Table1 => {
            let mut out = String::new();
            for row in table1_rows()? {
                out.push_str(&report(cli.format, "table1", &row));
            }
            Ok(out)
        }
        Command::Bounds {
            kind,
            n,
            k,
            r,
            d,
            q,
            delta,
            ell,
        } => bounds_report(cli.format, *kind, *n, *k, *r, *d, *q, delta.as_deref(), *ell),
        Command::Golden { which } => Ok(match which {
            GoldenKind::G0 => GOLDEN_G0,
            GoldenKind::G1 => GOLDEN_G1,
            GoldenKind::Grs => GOLDEN_GRS,
            GoldenKind::G => GOLDEN_G,
        }
        .to_string()),
    }
}

/// The n = 9 genus-zero table rows: divisor degrees 2, 3, 4 over the
/// reference three-place descriptor, with exhaustively verified distances.
fn table1_rows() -> Result<Vec<String>, CliError> {
    let desc = Descriptor::parse(EXAMPLE_DESC)
        .map_err(|e| CliError::pre(e.to_string()))?;
    let mut rows = Vec::new();
    for divisor in [2usize, 3, 4] {
        let mut desc = desc.clone();
        desc.divisor_degree = divisor;
        let code = desc.build().map_err(|e| CliError::pre(e.to_string()))?;
        let d = code.base().min_distance_exhaustive()?;
        let defect = lrc_defect(
            code.n() as u64,
            code.k() as u64,
            d as u64,
            code.locality() as u64,
        )
        .map_err(|e| CliError::pre(e.to_string()))?;
        rows.push(format!("n={} k={} d={d} defect={defect}", code.n(), code.k()));
    }
    Ok(rows)
}

#[allow(clippy::too_many_arguments)]
fn bounds_report(
    format: Format,
    kind: BoundKind,
    n: Option<u64>,
    k: Option<u64>,
    r: Option<u64>,
    d: Option<u64>,
    q: Option<u64>,
    delta: Option<&str>,
    ell: Option<u32>,
) -> Result<String, CliError> {
    let need = |name: &str, v: Option<u64>| {
        v.ok_or_else(|| CliError::pre(format!("missing --{name} for this bound")))
    };
    match kind {
        BoundKind::Singleton => {
            let (n, k, r) = (need("n", n)?, need("k", k)?, need("r", r)?);
            let d_max = singleton_lrc(n, k, r).map_err(|e| CliError::pre(e.to_string()))?;
            let line = match d {
                Some(d) => {
                    let defect =
                        lrc_defect(n, k, d, r).map_err(|e| CliError::pre(e.to_string()))?;
                    format!("d_max={d_max} defect={defect}")
                }
                None => format!("d_max={d_max}"),
            };
            Ok(report(format, "singleton", &line))
        }
        BoundKind::Gv => {
            let (q, r) = (need("q", q)?, need("r", r)?);
            let delta: f64 = delta
                .unwrap_or("0")
                .parse()
                .map_err(|_| CliError::pre("--delta must be a decimal for gv"))?;
            let b = gv_lrc_rate(q, r, delta).map_err(|e| CliError::pre(e.to_string()))?;
            Ok(report(
                format,
                "gv",
                &format!(
                    "value={:.9} minimizer={:.9} clamped={}",
                    b.value, b.minimizer, b.clamped
                ),
            ))
        }
        BoundKind::Dv => {
            let (q, r) = (need("q", q)?, need("r", r)?);
            let b = dv_order_r(q, r).map_err(|e| CliError::pre(e.to_string()))?;
            let line = match b.exact {
                Some(x) => format!("value={x} approx={:.9}", b.value),
                None => format!("value={:.9}", b.value),
            };
            Ok(report(format, "dv", &line))
        }
        BoundKind::Gs => {
            let q = need("q", q)?;
            let ell = ell.ok_or_else(|| CliError::pre("missing --ell for this bound"))?;
            let t = gs_tower_params(q, ell).map_err(|e| CliError::pre(e.to_string()))?;
            Ok(report(
                format,
                "gs",
                &format!(
                    "genus_upper={} b1_lower={} ratio_lower={}",
                    t.genus_upper, t.b1_lower, t.ratio_lower
                ),
            ))
        }
        BoundKind::Asymptotic => {
            let (q, r) = (need("q", q)?, need("r", r)?);
            let delta = parse_rational(delta.unwrap_or("0"))?;
            let rep =
                asymptotic_rates(q, r, delta, ell).map_err(|e| CliError::pre(e.to_string()))?;
            let mut out = String::new();
            for entry in &rep.entries {
                let line = match &entry.value {
                    Ok(v) => {
                        let mut l = format!(
                            "{} value={v} approx={:.9} vacuous={}",
                            entry.name,
                            v.to_f64().unwrap_or(f64::NAN),
                            entry.vacuous
                        );
                        if let Some(flag) = &entry.flag {
                            let _ = write!(l, " flag=\"{flag}\"");
                        }
                        l
                    }
                    Err(reason) => format!("{} inapplicable=\"{reason}\"", entry.name),
                };
                out.push_str(&report(format, "asymptotic", &line));
            }
            Ok(out)
        }
    }
}

fn report(format: Format, name: &str, line: &str) -> String {
    match format {
        Format::Text => format!("{line}\n"),
        Format::Structured => {
            let mut out = format!("report {name}\n");
            for field in split_fields(line) {
                match field.split_once('=') {
                    Some((key, value)) => {
                        let _ = writeln!(out, "  {key} {}", value.trim_matches('"'));
                    }
                    None => {
                        let _ = writeln!(out, "  name {field}");
                    }
                }
            }
            out.push_str("end\n");
            out
        }
    }
}

/// Splits a report line on spaces, keeping double-quoted spans intact.
fn split_fields(line: &str) -> Vec<String> {
    let mut fields = Vec::new();
    let mut current = String::new();
    let mut quoted = false;
    for c in line.chars() {
        match c {
            '"' => {
                quoted = !quoted;
                current.push(c);
            }
            ' ' if !quoted => {
                if !current.is_empty() {
                    fields.push(std::mem::take(&mut current));
                }
            }
            _ => current.push(c),
        }
    }
    if !current.is_empty() {
        fields.push(current);
    }
    fields
}

fn load(path: &PathBuf) -> Result<GagLrcCode, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::pre(format!("cannot read {}: {e}", path.display())))?;
    let desc = Descriptor::parse(&text).map_err(|e| CliError::pre(e.to_string()))?;
    desc.build().map_err(|e| CliError::pre(e.to_string()))
}

fn parse_word(
    field: &Field,
    tokens: &[String],
    want: usize,
    what: &str,
) -> Result<Vec<FieldElement>, CliError> {
    if !tokens.is_empty() && tokens.len() != want {
        return Err(CliError::pre(format!(
            "{what} needs {want} elements, got {}",
            tokens.len()
        )));
    }
    tokens
        .iter()
        .map(|t| {
            field
                .parse_element(t)
                .map_err(|e| CliError::pre(e.to_string()))
        })
        .collect()
}

fn parse_triple(s: &str, usage: &str) -> Result<[u64; 3], CliError> {
    let parts: Vec<u64> = s
        .split(',')
        .map(|t| t.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::pre(format!("usage: {usage}")))?;
    parts
        .try_into()
        .map_err(|_| CliError::pre(format!("usage: {usage}")))
}

fn parse_pair(s: &str, usage: &str) -> Result<[u64; 2], CliError> {
    let parts: Vec<u64> = s
        .split(',')
        .map(|t| t.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::pre(format!("usage: {usage}")))?;
    parts
        .try_into()
        .map_err(|_| CliError::pre(format!("usage: {usage}")))
}

fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let bad = || CliError::pre("--delta must be an integer or a fraction a/b");
    match s.split_once('/') {
        Some((a, b)) => {
            let num: i128 = a.trim().parse().map_err(|_| bad())?;
            let den: i128 = b.trim().parse().map_err(|_| bad())?;
            if den == 0 {
                return Err(bad());
            }
            Ok(Rational::new(num, den))
        }
        None => {
            let num: i128 = s.trim().parse().map_err(|_| bad())?;
            Ok(Rational::new(num, 1))
        }
    }
}

fn factor(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut v = q;
            let mut m = 0;
            while v.is_multiple_of(p) {
                v /= p;
                m += 1;
            }
            return (v == 1).then_some((p, m));
        }
        p += 1;
    }
    Some((q, 1))
}

