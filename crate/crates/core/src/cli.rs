//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or argument error, 2 conjecture
//! counterexample, 3 verification failure, 4 internal consistency failure.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::Serialize;

use crate::characters;
use crate::classifier::{self, ConjectureEntry, Prediction, VerificationReport};
use crate::error::Error;
use crate::json;
use crate::oracle::{self, OracleReport};
use crate::partitions::Partition;
use crate::spectra::{ConnectionSpec, CycleCharacterTable, SpectralSummary, SpectrumEntry};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Debug, Parser)]
#[command(
    name = "sn-spectra",
    version,
    about = "Exact spectra of Cay(S_n, C(n,I)) from symmetric group characters"
)]
pub struct Cli {
    /// Output format. Defaults to human for `char` and `dim`, json elsewhere.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Worker threads for sweeps.
    #[arg(long, global = true, env = "SN_SPECTRA_JOBS", value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SetArgs {
    #[arg(long)]
    pub n: usize,
    /// Cycle lengths, comma separated, e.g. 2,3,7.
    #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
    pub set: Vec<usize>,
}

impl SetArgs {
    fn spec(&self) -> Result<ConnectionSpec, Error> {
        ConnectionSpec::new(self.n, self.set.iter().copied())
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Character value χ_ζ(γ) and its normalized value.
    Char {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        zeta: Partition,
        #[arg(long)]
        gamma: Partition,
    },
    /// Dimension of the irreducible representation labelled by ζ.
    Dim {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        zeta: Partition,
    },
    /// Full spectrum, one entry per partition.
    Spectrum(SetArgs),
    /// Strictly second largest eigenvalue and who attains it.
    Second(SetArgs),
    /// Predicted attaining partitions for n >= 7.
    Classify(SetArgs),
    /// Verify every non-empty I for each n in a range, then evaluate the conjectures.
    VerifyPaper {
        #[arg(long, default_value_t = 7)]
        n_min: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
    /// Compare against the eigenvalues of the explicit Cayley graph.
    OracleCheck {
        #[command(flatten)]
        set: SetArgs,
        /// Defaults to 1e-6·max(1, degree).
        #[arg(long)]
        tolerance: Option<f64>,
        #[arg(long, default_value_t = oracle::DEFAULT_LIMIT)]
        oracle_limit: usize,
    },
    /// Evaluate both conjectured inequalities at an odd n >= 7.
    CheckConjectures {
        #[arg(long)]
        n: usize,
    },
    /// Cheeger-type bounds on the isoperimetric number.
    Cheeger(SetArgs),
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(io::Error::other(e))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(io::Error::other(e))
    }
}

type Outcome = Result<i32, Failure>;

pub fn exit_code_for(error: &Error) -> i32 {
    match error {
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match &cli.out {
        Some(path) => match File::create(path) {
            Ok(file) => {
                let mut w = BufWriter::new(file);
                let r = dispatch(&cli, &mut w);
                r.and_then(|code| w.flush().map(|_| code).map_err(Failure::Io))
            }
            Err(e) => Err(Failure::Usage(format!(
                "cannot create {}: {e}",
                path.display()
            ))),
        },
        None => dispatch(&cli, stdout)
            .and_then(|code| stdout.flush().map(|_| code).map_err(Failure::Io)),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code_for(&e)
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INTERNAL
        }
    }
}

/// Output is buffered and written once the command has finished.
fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let mut buf = Vec::new();
    let code = match cli.jobs {
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs as usize)
                .build()
                .map_err(|e| Failure::Usage(format!("cannot start {jobs} workers: {e}")))?;
            pool.install(|| execute(cli, &mut buf))
        }
        None => execute(cli, &mut buf),
    }?;
    out.write_all(&buf)?;
    Ok(code)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let default = match cli.command {
        Command::Char { .. } | Command::Dim { .. } => Format::Human,
        _ => Format::Json,
    };
    let format = cli.format.unwrap_or(default);
    match &cli.command {
        Command::Char { n, zeta, gamma } => char_cmd(*n, zeta, gamma, format, out),
        Command::Dim { n, zeta } => dim_cmd(*n, zeta, format, out),
        Command::Spectrum(set) => spectrum_cmd(&set.spec()?, format, out),
        Command::Second(set) => second_cmd(&set.spec()?, format, out),
        Command::Classify(set) => classify_cmd(&set.spec()?, format, out),
        Command::VerifyPaper { n_min, n_max } => verify_paper_cmd(*n_min, *n_max, format, out),
        Command::OracleCheck {
            set,
            tolerance,
            oracle_limit,
        } => oracle_cmd(&set.spec()?, *tolerance, *oracle_limit, format, out),
        Command::CheckConjectures { n } => conjectures_cmd(*n, format, out),
        Command::Cheeger(set) => cheeger_cmd(&set.spec()?, format, out),
    }
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn csv_rows(out: &mut dyn Write, header: &[&str], rows: Vec<Vec<String>>) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

fn no_csv(command: &str) -> Failure {
    Failure::Usage(format!("{command} has no csv output; use json or human"))
}

fn set_string(cycles: impl IntoIterator<Item = usize>) -> String {
    let items: Vec<String> = cycles.into_iter().map(|k| k.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn partition_list(parts: &[Partition]) -> String {
    let items: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    items.join(" ")
}

fn check_size(n: Option<usize>, p: &Partition) -> Result<(), Error> {
    match n {
        Some(n) if n != p.size() => Err(Error::SizeMismatch {
            left: p.size(),
            right: n,
        }),
        _ => Ok(()),
    }
}

#[derive(Serialize)]
struct CharRecord<'a> {
    n: usize,
    zeta: &'a Partition,
    gamma: &'a Partition,
    #[serde(serialize_with = "json::decimal")]
    value: BigInt,
    #[serde(serialize_with = "json::ratio")]
    normalized: BigRational,
}

fn char_cmd(
    n: Option<usize>,
    zeta: &Partition,
    gamma: &Partition,
    format: Format,
    out: &mut dyn Write,
) -> Outcome {
    check_size(n, zeta)?;
    check_size(n, gamma)?;
    let value = characters::character(zeta, gamma)?;
    let normalized = characters::normalized_character(zeta, gamma)?;
    let rec = CharRecord {
        n: zeta.size(),
        zeta,
        gamma,
        value,
        normalized,
    };
    match format {
        Format::Json => json_line(out, &rec)?,
        Format::Human => writeln!(
            out,
            "{}\n{}",
            rec.value,
            json::format_ratio(&rec.normalized)
        )?,
        Format::Csv => csv_rows(
            out,
            &["n", "zeta", "gamma", "value", "normalized"],
            vec![vec![
                rec.n.to_string(),
                zeta.to_string(),
                gamma.to_string(),
                rec.value.to_string(),
                json::format_ratio(&rec.normalized),
            ]],
        )?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct DimRecord<'a> {
    n: usize,
    zeta: &'a Partition,
    #[serde(serialize_with = "json::decimal")]
    dimension: BigUint,
}

fn dim_cmd(n: Option<usize>, zeta: &Partition, format: Format, out: &mut dyn Write) -> Outcome {
    check_size(n, zeta)?;
    let rec = DimRecord {
        n: zeta.size(),
        zeta,
        dimension: zeta.dimension(),
    };
    match format {
        Format::Json => json_line(out, &rec)?,
        Format::Human => writeln!(out, "{}", rec.dimension)?,
        Format::Csv => csv_rows(
            out,
            &["n", "zeta", "dimension"],
            vec![vec![
                rec.n.to_string(),
                zeta.to_string(),
                rec.dimension.to_string(),
            ]],
        )?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SpectrumRecord<'a> {
    n: usize,
    #[serde(rename = "I")]
    cycles: &'a BTreeSet<usize>,
    #[serde(serialize_with = "json::decimal")]
    degree: BigUint,
    components: usize,
    entries: &'a [SpectrumEntry],
}

fn spectrum_cmd(spec: &ConnectionSpec, format: Format, out: &mut dyn Write) -> Outcome {
    let table = CycleCharacterTable::new(spec.n());
    let entries = table.full_spectrum(spec)?;
    let components = crate::spectra::component_count(spec);
    match format {
        Format::Json => json_line(
            out,
            &SpectrumRecord {
                n: spec.n(),
                cycles: spec.cycles(),
                degree: spec.degree(),
                components,
                entries: &entries,
            },
        )?,
        Format::Csv => csv_rows(
            out,
            &["zeta", "eigenvalue", "dimension", "multiplicity"],
            entries
                .iter()
                .map(|e| {
                    vec![
                        e.zeta.to_string(),
                        e.eigenvalue.to_string(),
                        e.dimension.to_string(),
                        e.multiplicity.to_string(),
                    ]
                })
                .collect(),
        )?,
        Format::Human => {
            writeln!(
                out,
                "{spec}  degree {}  components {components}",
                spec.degree()
            )?;
            let rows: Vec<[String; 4]> = entries
                .iter()
                .map(|e| {
                    [
                        e.zeta.to_string(),
                        e.eigenvalue.to_string(),
                        e.dimension.to_string(),
                        e.multiplicity.to_string(),
                    ]
                })
                .collect();
            let header = ["zeta", "eigenvalue", "dimension", "multiplicity"];
            let mut widths = header.map(str::len);
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            writeln!(
                out,
                "{:<w0$}  {:>w1$}  {:>w2$}  {:>w3$}",
                header[0],
                header[1],
                header[2],
                header[3],
                w0 = widths[0],
                w1 = widths[1],
                w2 = widths[2],
                w3 = widths[3]
            )?;
            for row in rows {
                writeln!(
                    out,
                    "{:<w0$}  {:>w1$}  {:>w2$}  {:>w3$}",
                    row[0],
                    row[1],
                    row[2],
                    row[3],
                    w0 = widths[0],
                    w1 = widths[1],
                    w2 = widths[2],
                    w3 = widths[3]
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn summary_row(s: &SpectralSummary) -> Vec<String> {
    vec![
        s.n.to_string(),
        set_string(s.cycles.iter().copied()),
        s.degree.to_string(),
        s.components.to_string(),
        s.second_value.to_string(),
        partition_list(&s.attaining),
        s.second_multiplicity.to_string(),
        s.aldous.to_string(),
        json::format_ratio(&s.cheeger_lower),
        s.cheeger_upper.clone(),
    ]
}

const SUMMARY_HEADER: [&str; 10] = [
    "n",
    "I",
    "degree",
    "components",
    "second_value",
    "attaining",
    "second_multiplicity",
    "aldous",
    "cheeger_lower",
    "cheeger_upper",
];

fn second_cmd(spec: &ConnectionSpec, format: Format, out: &mut dyn Write) -> Outcome {
    let summary = CycleCharacterTable::new(spec.n()).strictly_second_largest(spec)?;
    match format {
        Format::Json => json_line(out, &summary)?,
        Format::Csv => csv_rows(out, &SUMMARY_HEADER, vec![summary_row(&summary)])?,
        Format::Human => {
            writeln!(
                out,
                "{spec}  degree {}  components {}",
                summary.degree, summary.components
            )?;
            writeln!(out, "second largest  {}", summary.second_value)?;
            writeln!(
                out,
                "attained by     {}",
                partition_list(&summary.attaining)
            )?;
            writeln!(out, "multiplicity    {}", summary.second_multiplicity)?;
            writeln!(out, "aldous          {}", summary.aldous)?;
        }
    }
    Ok(EXIT_OK)
}

fn classify_cmd(spec: &ConnectionSpec, format: Format, out: &mut dyn Write) -> Outcome {
    let prediction: Prediction = classifier::predict(spec)?;
    match format {
        Format::Json => json_line(out, &prediction)?,
        Format::Csv => return Err(no_csv("classify")),
        Format::Human => {
            let sets: Vec<String> = prediction
                .candidate_sets
                .iter()
                .map(|s| format!("{{{}}}", partition_list(s)))
                .collect();
            let multiplicity = prediction
                .multiplicity
                .as_ref()
                .map_or("unknown".to_string(), |m| m.to_string());
            writeln!(out, "{spec}  case {}", prediction.case_tag)?;
            writeln!(out, "constraint    {:?}", prediction.constraint)?;
            writeln!(out, "candidates    {}", sets.join(" | "))?;
            writeln!(out, "multiplicity  {multiplicity}")?;
            writeln!(out, "aldous        {:?}", prediction.aldous_claim)?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct Tagged<'a, T: Serialize> {
    record: &'static str,
    #[serde(flatten)]
    body: &'a T,
}

#[derive(Serialize)]
struct SweepSummary {
    n_min: usize,
    n_max: usize,
    specs: usize,
    failed: usize,
    conjecture_cases: usize,
    conjecture_violations: usize,
}

fn verify_paper_cmd(n_min: usize, n_max: usize, format: Format, out: &mut dyn Write) -> Outcome {
    if n_min < classifier::MIN_CLASSIFIED_N {
        return Err(Error::OutOfTheoremRange { n: n_min }.into());
    }
    if n_min > n_max {
        return Err(Failure::Usage(format!("empty range {n_min}..={n_max}")));
    }
    if format == Format::Csv {
        return Err(no_csv("verify-paper"));
    }
    let mut reports: Vec<VerificationReport> = Vec::new();
    let mut conjectures: Vec<ConjectureEntry> = Vec::new();
    for n in n_min..=n_max {
        let table = CycleCharacterTable::new(n);
        reports.extend(classifier::verify_all(&table)?);
        conjectures.extend(classifier::check_conjectures_with(&table)?);
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    let violations = conjectures.iter().filter(|c| !c.holds).count();
    let summary = SweepSummary {
        n_min,
        n_max,
        specs: reports.len(),
        failed,
        conjecture_cases: conjectures.len(),
        conjecture_violations: violations,
    };
    match format {
        Format::Json => {
            for r in &reports {
                json_line(
                    out,
                    &Tagged {
                        record: "verification",
                        body: r,
                    },
                )?;
            }
            for c in &conjectures {
                json_line(
                    out,
                    &Tagged {
                        record: "conjecture",
                        body: c,
                    },
                )?;
            }
            json_line(
                out,
                &Tagged {
                    record: "summary",
                    body: &summary,
                },
            )?;
        }
        Format::Human => {
            for r in reports.iter().filter(|r| !r.passed) {
                let failing: Vec<String> = r
                    .checks
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| format!("{}: {}", c.name, c.detail))
                    .collect();
                writeln!(
                    out,
                    "FAIL n={} I={} case {}: {}",
                    r.n,
                    set_string(r.cycles.iter().copied()),
                    r.case_tag,
                    failing.join("; ")
                )?;
            }
            for c in conjectures.iter().filter(|c| !c.holds) {
                writeln!(
                    out,
                    "COUNTEREXAMPLE {:?} n={} I={}: lhs {} >= max {}",
                    c.conjecture,
                    c.n,
                    set_string(c.cycles.iter().copied()),
                    c.lhs,
                    c.rhs_max
                )?;
            }
            writeln!(
                out,
                "n={n_min}..={n_max}: {} of {} sets verified; conjectures {} of {} cases hold",
                summary.specs - failed,
                summary.specs,
                summary.conjecture_cases - violations,
                summary.conjecture_cases
            )?;
        }
        Format::Csv => unreachable!("rejected above"),
    }
    Ok(if failed > 0 {
        EXIT_VERIFICATION
    } else if violations > 0 {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    })
}

fn oracle_row(r: &OracleReport) -> Vec<String> {
    vec![
        r.n.to_string(),
        set_string(r.cycles.iter().copied()),
        r.vertices.to_string(),
        r.degree.to_string(),
        format!("{:e}", r.tolerance),
        format!("{:e}", r.max_deviation),
        r.worst_position.to_string(),
        r.worst_zeta
            .as_ref()
            .map_or(String::new(), |z| z.to_string()),
        r.components_bfs.to_string(),
        r.components_rule.to_string(),
        r.passed.to_string(),
    ]
}

fn oracle_cmd(
    spec: &ConnectionSpec,
    tolerance: Option<f64>,
    limit: usize,
    format: Format,
    out: &mut dyn Write,
) -> Outcome {
    if let Some(t) = tolerance {
        if !(t.is_finite() && t >= 0.0) {
            return Err(Failure::Usage(format!(
                "tolerance must be a non-negative number, got {t}"
            )));
        }
    }
    let report = oracle::compare_spectra(spec, tolerance, limit)?;
    match format {
        Format::Json => json_line(out, &report)?,
        Format::Csv => csv_rows(
            out,
            &[
                "n",
                "I",
                "vertices",
                "degree",
                "tolerance",
                "max_deviation",
                "worst_position",
                "worst_zeta",
                "components_bfs",
                "components_rule",
                "passed",
            ],
            vec![oracle_row(&report)],
        )?,
        Format::Human => {
            let worst = report
                .worst_zeta
                .as_ref()
                .map_or(String::new(), |z| format!(" at {z}"));
            writeln!(
                out,
                "{} {spec}: {} vertices, degree {}, max deviation {:e}{worst} (tolerance {:e}), components {} by search, {} by parity",
                if report.passed { "PASS" } else { "FAIL" },
                report.vertices,
                report.degree,
                report.max_deviation,
                report.tolerance,
                report.components_bfs,
                report.components_rule
            )?;
        }
    }
    Ok(if report.passed {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    })
}

fn conjectures_cmd(n: usize, format: Format, out: &mut dyn Write) -> Outcome {
    if n < classifier::MIN_CLASSIFIED_N {
        return Err(Error::OutOfTheoremRange { n }.into());
    }
    let entries = classifier::check_conjectures(n)?;
    match format {
        Format::Json => {
            for e in &entries {
                json_line(out, e)?;
            }
        }
        Format::Csv => csv_rows(
            out,
            &["conjecture", "n", "I", "holds", "lhs", "rhs_max"],
            entries
                .iter()
                .map(|e| {
                    vec![
                        format!("{:?}", e.conjecture),
                        e.n.to_string(),
                        set_string(e.cycles.iter().copied()),
                        e.holds.to_string(),
                        e.lhs.to_string(),
                        e.rhs_max.to_string(),
                    ]
                })
                .collect(),
        )?,
        Format::Human => {
            if entries.is_empty() {
                writeln!(
                    out,
                    "n={n}: no qualifying sets (both conjectures need odd n)"
                )?;
            }
            for e in &entries {
                writeln!(
                    out,
                    "{:<8} {:?} n={} I={}: lhs {} vs max {}",
                    if e.holds { "holds" } else { "VIOLATED" },
                    e.conjecture,
                    e.n,
                    set_string(e.cycles.iter().copied()),
                    e.lhs,
                    e.rhs_max
                )?;
            }
        }
    }
    Ok(if entries.iter().all(|e| e.holds) {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    })
}

#[derive(Serialize)]
struct CheegerRecord<'a> {
    n: usize,
    #[serde(rename = "I")]
    cycles: &'a BTreeSet<usize>,
    #[serde(serialize_with = "json::decimal")]
    degree: &'a BigUint,
    #[serde(serialize_with = "json::decimal")]
    spectral_gap: BigInt,
    #[serde(serialize_with = "json::ratio")]
    lower: &'a BigRational,
    upper: &'a str,
}

fn cheeger_cmd(spec: &ConnectionSpec, format: Format, out: &mut dyn Write) -> Outcome {
    let s = CycleCharacterTable::new(spec.n()).strictly_second_largest(spec)?;
    let rec = CheegerRecord {
        n: s.n,
        cycles: &s.cycles,
        degree: &s.degree,
        spectral_gap: s.spectral_gap(),
        lower: &s.cheeger_lower,
        upper: &s.cheeger_upper,
    };
    match format {
        Format::Json => json_line(out, &rec)?,
        Format::Csv => csv_rows(
            out,
            &["n", "I", "degree", "spectral_gap", "lower", "upper"],
            vec![vec![
                rec.n.to_string(),
                set_string(rec.cycles.iter().copied()),
                rec.degree.to_string(),
                rec.spectral_gap.to_string(),
                json::format_ratio(rec.lower),
                rec.upper.to_string(),
            ]],
        )?,
        Format::Human => {
            writeln!(
                out,
                "{spec}  degree {}  gap {}",
                rec.degree, rec.spectral_gap
            )?;
            writeln!(
                out,
                "{} <= h <= {}",
                json::format_ratio(rec.lower),
                rec.upper
            )?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("sn-spectra").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn dim_and_char_default_to_plain_values() {
        assert_eq!(
            call(&["dim", "--n", "9", "--zeta", "8,1"]),
            (0, "8\n".into(), String::new())
        );
        let (code, out, _) = call(&["char", "--n", "6", "--zeta", "4,2", "--gamma", "2,1,1,1,1"]);
        assert_eq!((code, out.as_str()), (0, "3\n1/3\n"));
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(call(&["second", "--n", "8", "--set", "9"]).0, EXIT_USAGE);
        assert_eq!(call(&["second", "--n", "1", "--set", "2"]).0, EXIT_USAGE);
        assert_eq!(call(&["dim", "--n", "5", "--zeta", "3,1"]).0, EXIT_USAGE);
        assert_eq!(call(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&["classify", "--n", "6", "--set", "2"]).0, EXIT_USAGE);
        assert_eq!(
            call(&["oracle-check", "--n", "8", "--set", "2"]).0,
            EXIT_USAGE
        );
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn duplicates_in_set_are_tolerated() {
        let a = call(&["second", "--n", "8", "--set", "7,7"]);
        let b = call(&["second", "--n", "8", "--set", "7"]);
        assert_eq!(a, b);
        assert_eq!(a.0, 0);
    }
}
