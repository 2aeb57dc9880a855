//! Command-line surface: `classify`, `enum`, `avalue`, `split`, `semisimple`
//! and `verify`.
//!
//! Machine-readable output goes to standard output (or `--out`), diagnostics
//! to standard error. Exit codes: 0 ok, 1 verification failure, 2 bad input,
//! 3 cap exceeded.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::afunction::{a_value_r, AValue};
use crate::classify::ClassifyReport;
use crate::clifford::semisimple_labels;
use crate::combinatorics::{enumerate_multipartitions, Multipartition, DEFAULT_TABLEAU_CAP};
use crate::flotw::{enumerate_flotw, enumerate_lambda1};
use crate::kleshchev::{enumerate_kleshchev, enumerate_lambda0, SignatureOrder};
use crate::parameters::{build_q, morita_split, ParameterSpec, RootOfUnity};
use crate::verify::{self, VerifyConfig};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "hecke",
    version,
    about = "Simple-module labels for cyclotomic Hecke algebras of type G(r,p,n)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the simple-module labels for size n.
    Classify {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// List FLOTW, Kleshchev or plain multipartitions.
    #[command(name = "enum")]
    Enumerate {
        target: Target,
        #[command(flatten)]
        spec: SpecArgs,
        /// Number of components; only for `multipartitions`.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Exact a-values (normalized with g(n) = 0).
    Avalue {
        #[command(flatten)]
        spec: SpecArgs,
        /// Every r-partition of this size.
        #[arg(long, required_unless_present = "lambda")]
        n: Option<usize>,
        /// A single r-partition in JSON form, e.g. '[[2,1],[]]'.
        #[arg(long, conflicts_with = "n")]
        lambda: Option<String>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// The parameter sequence Q and its splitting into eta_e-power classes.
    Split {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Labels and dimensions of the simple modules at generic parameters.
    Semisimple {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Check every cross-module identity over a range of sizes.
    Verify {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 0)]
        n_min: usize,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Flotw,
    Kleshchev,
    Lambda1,
    Lambda0,
    Multipartitions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Tsv,
    Pretty,
}

#[derive(Debug, Args)]
pub struct SpecArgs {
    /// Order of the root of unity.
    #[arg(long)]
    pub e: Option<u32>,
    #[arg(long)]
    pub p: Option<u32>,
    /// Number of charges; defaults to the length of --charges.
    #[arg(long)]
    pub delta: Option<usize>,
    /// Charges v_1 <= ... <= v_delta, comma or space separated.
    #[arg(long, allow_hyphen_values = true)]
    pub charges: Option<String>,
}

impl SpecArgs {
    fn given(&self) -> bool {
        self.e.is_some() || self.p.is_some() || self.delta.is_some() || self.charges.is_some()
    }

    pub fn build(&self) -> Result<ParameterSpec> {
        let missing = |flag: &str| Error::Parse(format!("missing --{flag}"));
        let e = self.e.ok_or_else(|| missing("e"))?;
        let p = self.p.ok_or_else(|| missing("p"))?;
        let charges = parse_charges(self.charges.as_deref().ok_or_else(|| missing("charges"))?)?;
        let delta = self.delta.unwrap_or(charges.len());
        ParameterSpec::new(e, p, delta, &charges)
    }
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Largest size whose standard tableaux are listed explicitly.
    #[arg(long, default_value_t = DEFAULT_TABLEAU_CAP)]
    pub cap: usize,
    /// Reading order of i-signatures: ascending, descending or ascending-first.
    #[arg(long, default_value = "ascending")]
    pub signature_order: String,
    /// Write the output here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `"0,1"`, `"0 1"` or `"0, 1"`.
pub fn parse_charges(s: &str) -> Result<Vec<i64>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad charge {t:?}")))
        })
        .collect()
}

fn lists(items: &[Multipartition]) -> Vec<Vec<Vec<u32>>> {
    items.iter().map(Multipartition::to_lists).collect()
}

fn compact(lambda: &Multipartition) -> String {
    serde_json::to_string(lambda).expect("multipartitions serialize")
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

/// What a command produced: its exit status.
enum Status {
    Ok,
    VerificationFailed,
}

fn classify_cmd(
    spec: &ParameterSpec,
    n: usize,
    common: &CommonArgs,
    out: &mut dyn Write,
) -> Result<Status> {
    let order: SignatureOrder = common.signature_order.parse()?;
    let report = ClassifyReport::build(n, spec, order)?;
    match common.format {
        Format::Json => write_json(out, &report)?,
        Format::Tsv => {
            writeln!(out, "lambda\to_lambda\ti\ta_value")?;
            for l in &report.labels {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}",
                    compact(&l.lambda),
                    l.o_lambda,
                    l.eigen_index,
                    l.a_value
                )?;
            }
        }
        Format::Pretty => {
            writeln!(out, "spec {spec}, n = {n}")?;
            for l in &report.labels {
                writeln!(
                    out,
                    "  {}  o={}  i={}  a={}",
                    l.lambda, l.o_lambda, l.eigen_index, l.a_value
                )?;
            }
            let c = &report.checks;
            writeln!(
                out,
                "labels {}  |Lambda0| {}  |Lambda1| {}  orbits {}  orbit sum {}",
                report.labels.len(),
                c.lambda0,
                c.lambda1,
                c.orbits,
                c.total
            )?;
        }
    }
    Ok(Status::Ok)
}

fn listing(
    target: &str,
    n: usize,
    items: &[Multipartition],
    format: Format,
    out: &mut dyn Write,
) -> io::Result<()> {
    match format {
        Format::Json => write_json(
            out,
            &json!({"target": target, "n": n, "items": lists(items), "count": items.len()}),
        ),
        Format::Tsv => {
            for item in items {
                writeln!(out, "{}", compact(item))?;
            }
            writeln!(out, "count\t{}", items.len())
        }
        Format::Pretty => {
            for item in items {
                writeln!(out, "{item}")?;
            }
            writeln!(out, "count: {}", items.len())
        }
    }
}

fn enum_cmd(
    target: Target,
    spec: &SpecArgs,
    r: Option<usize>,
    n: usize,
    common: &CommonArgs,
    out: &mut dyn Write,
) -> Result<Status> {
    let order: SignatureOrder = common.signature_order.parse()?;
    let (name, items) = match target {
        Target::Multipartitions => {
            let r = match (r, spec.given()) {
                (Some(r), _) if r >= 1 => r,
                (Some(_), _) => return Err(Error::Parse("--r must be positive".into())),
                (None, true) => spec.build()?.r(),
                (None, false) => return Err(Error::Parse("missing --r".into())),
            };
            ("multipartitions", enumerate_multipartitions(n, r))
        }
        Target::Flotw => ("flotw", enumerate_flotw(n, &spec.build()?)),
        Target::Kleshchev => ("kleshchev", enumerate_kleshchev(n, &spec.build()?, order)),
        Target::Lambda1 => ("lambda1", enumerate_lambda1(n, &spec.build()?)),
        Target::Lambda0 => ("lambda0", enumerate_lambda0(n, &spec.build()?, order)),
    };
    listing(name, n, &items, common.format, out)?;
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct AEntry {
    lambda: Multipartition,
    a_value: AValue,
}

fn avalue_cmd(
    spec: &ParameterSpec,
    n: Option<usize>,
    lambda: Option<&str>,
    common: &CommonArgs,
    out: &mut dyn Write,
) -> Result<Status> {
    let shapes = match (lambda, n) {
        (Some(text), _) => vec![text.parse::<Multipartition>()?],
        (None, Some(n)) => enumerate_multipartitions(n, spec.r()),
        (None, None) => return Err(Error::Parse("give --n or --lambda".into())),
    };
    let entries = shapes
        .into_iter()
        .map(|l| {
            a_value_r(&l, spec).map(|a| AEntry {
                lambda: l,
                a_value: a,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    match common.format {
        Format::Json => write_json(
            out,
            &json!({"spec": spec, "normalization": "g(n) = 0", "values": entries}),
        )?,
        Format::Tsv => {
            writeln!(out, "lambda\ta_value")?;
            for e in &entries {
                writeln!(out, "{}\t{}", compact(&e.lambda), e.a_value)?;
            }
        }
        Format::Pretty => {
            for e in &entries {
                writeln!(out, "a{} = {}", e.lambda, e.a_value)?;
            }
        }
    }
    Ok(Status::Ok)
}

fn split_cmd(spec: &ParameterSpec, common: &CommonArgs, out: &mut dyn Write) -> Result<Status> {
    let q = build_q(spec)?;
    let classes = morita_split(&q, spec.e());
    let exps: Vec<u64> = q.iter().map(RootOfUnity::exponent).collect();
    let one_based: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| c.iter().map(|i| i + 1).collect())
        .collect();
    match common.format {
        Format::Json => write_json(
            out,
            &json!({"spec": spec, "modulus": spec.lcm(), "q": exps, "classes": one_based}),
        )?,
        Format::Tsv => {
            writeln!(out, "index\texponent\tclass")?;
            for (k, class) in one_based.iter().enumerate() {
                for &i in class {
                    writeln!(out, "{i}\t{}\t{}", exps[i - 1], k + 1)?;
                }
            }
        }
        Format::Pretty => {
            writeln!(out, "Q as powers of eta_{}: {exps:?}", spec.lcm())?;
            for (k, class) in one_based.iter().enumerate() {
                writeln!(out, "class {}: {class:?}", k + 1)?;
            }
        }
    }
    Ok(Status::Ok)
}

fn semisimple_cmd(
    spec: &ParameterSpec,
    n: usize,
    common: &CommonArgs,
    out: &mut dyn Write,
) -> Result<Status> {
    let labels = semisimple_labels(n, spec)?;
    let total: u128 = labels.iter().map(|l| l.dimension.pow(2)).sum();
    match common.format {
        Format::Json => write_json(
            out,
            &json!({"spec": spec, "n": n, "labels": labels, "sum_of_squared_dimensions": total}),
        )?,
        Format::Tsv => {
            writeln!(
                out,
                "representative\to_lambda\teigen_index\tdimension\ta_value"
            )?;
            for l in &labels {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}",
                    compact(&l.representative),
                    l.o_lambda,
                    l.eigen_index,
                    l.dimension,
                    l.a_value
                )?;
            }
        }
        Format::Pretty => {
            for l in &labels {
                writeln!(
                    out,
                    "{}  o={}  i={}  dim={}  a={}",
                    l.representative, l.o_lambda, l.eigen_index, l.dimension, l.a_value
                )?;
            }
            writeln!(
                out,
                "labels {}  sum of squared dimensions {total}",
                labels.len()
            )?;
        }
    }
    Ok(Status::Ok)
}

fn verify_cmd(
    spec: &SpecArgs,
    n_min: usize,
    n_max: usize,
    common: &CommonArgs,
    out: &mut dyn Write,
) -> Result<Status> {
    let specs = if spec.given() {
        vec![spec.build()?]
    } else {
        verify::default_matrix()
    };
    let cfg = VerifyConfig {
        specs,
        n_min,
        n_max,
        cap: common.cap,
        order: common.signature_order.parse()?,
    };
    let report = verify::run(&cfg)?;
    match common.format {
        Format::Json => write_json(
            out,
            &json!({"passed": report.passed(), "outcomes": report.outcomes}),
        )?,
        Format::Tsv => {
            writeln!(out, "identity\tcases\tstatus\tcounterexample")?;
            for o in &report.outcomes {
                let status = if o.passed() { "pass" } else { "fail" };
                writeln!(
                    out,
                    "{}\t{}\t{status}\t{}",
                    o.name,
                    o.cases,
                    o.counterexample.as_deref().unwrap_or("")
                )?;
            }
        }
        Format::Pretty => {
            for o in &report.outcomes {
                writeln!(out, "{o}")?;
            }
        }
    }
    Ok(if report.passed() {
        Status::Ok
    } else {
        Status::VerificationFailed
    })
}

fn common_args(command: &Command) -> &CommonArgs {
    match command {
        Command::Classify { common, .. }
        | Command::Enumerate { common, .. }
        | Command::Avalue { common, .. }
        | Command::Split { common, .. }
        | Command::Semisimple { common, .. }
        | Command::Verify { common, .. } => common,
    }
}

fn dispatch(command: &Command, out: &mut dyn Write) -> Result<Status> {
    match command {
        Command::Classify { spec, n, common } => classify_cmd(&spec.build()?, *n, common, out),
        Command::Enumerate {
            target,
            spec,
            r,
            n,
            common,
        } => enum_cmd(*target, spec, *r, *n, common, out),
        Command::Avalue {
            spec,
            n,
            lambda,
            common,
        } => avalue_cmd(&spec.build()?, *n, lambda.as_deref(), common, out),
        Command::Split { spec, common } => split_cmd(&spec.build()?, common, out),
        Command::Semisimple { spec, n, common } => semisimple_cmd(&spec.build()?, *n, common, out),
        Command::Verify {
            spec,
            n_min,
            n_max,
            common,
        } => verify_cmd(spec, *n_min, *n_max, common, out),
    }
}

/// Runs a parsed command line. Output goes to `--out` when given, otherwise
/// to `stdout`. Returns the process exit status.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> u8 {
    let mut buffer = Vec::new();
    let status = match dispatch(&cli.command, &mut buffer) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let written = match &common_args(&cli.command).out {
        Some(path) => File::create(path).and_then(|mut f| f.write_all(&buffer)),
        None => stdout.write_all(&buffer).and_then(|_| stdout.flush()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return 2;
    }
    match status {
        Status::Ok => 0,
        Status::VerificationFailed => 1,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I, stdout: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, stdout),
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let rendered = e.to_string();
            eprintln!(
                "{}",
                rendered
                    .lines()
                    .next()
                    .unwrap_or("error: invalid arguments")
            );
            2
        }
    }
}

pub fn main() -> ExitCode {
    let stdout = io::stdout();
    ExitCode::from(run_args(std::env::args_os(), &mut stdout.lock()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &str) -> (u8, String) {
        let mut out = Vec::new();
        let code = run_args(
            std::iter::once("hecke").chain(args.split_whitespace()),
            &mut out,
        );
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn charges_parse() {
        assert_eq!(parse_charges("0,1").unwrap(), vec![0, 1]);
        assert_eq!(parse_charges(" 0 1, 2 ").unwrap(), vec![0, 1, 2]);
        assert!(parse_charges("0,x").is_err());
    }

    #[test]
    fn classify_size_one() {
        let (code, out) = run_str("classify --e 4 --p 2 --delta 1 --charges 0 --n 1 --format json");
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["labels"].as_array().unwrap().len(), 1);
        assert_eq!(v["checks"]["total"], 1);
    }

    #[test]
    fn bad_inputs_exit_two() {
        assert_eq!(
            run_str("classify --e 4 --p 2 --delta 1 --charges 7 --n 1").0,
            2
        );
        assert_eq!(run_str("classify --e 1 --p 2 --charges 0 --n 1").0, 2);
        assert_eq!(run_str("classify --e 4 --p 2 --n 1").0, 2);
        assert_eq!(run_str("classify --bogus").0, 2);
        assert_eq!(run_str("enum multipartitions --n 2").0, 2);
        assert_eq!(run_str("split --e 2 --p 1 --charges 0,0").0, 2);
        assert_eq!(
            run_str("enum flotw --e 4 --p 2 --charges 0 --n 1 --signature-order up").0,
            2
        );
    }

    #[test]
    fn listings_end_with_counts() {
        let (code, out) = run_str("enum multipartitions --r 2 --n 2 --format tsv");
        assert_eq!(code, 0);
        assert_eq!(out.lines().last(), Some("count\t5"));
        let (_, out) =
            run_str("enum kleshchev --e 4 --p 2 --delta 1 --charges 0 --n 0 --format pretty");
        assert_eq!(out.lines().last(), Some("count: 1"));
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(run_str("verify --n-max 2 --format pretty").0, 0);
        assert_eq!(run_str("verify --n-min 3 --n-max 2").0, 0);
        assert_eq!(run_str("verify --n-max 9").0, 3);
        assert_eq!(
            run_str("verify --e 4 --p 2 --charges 0 --n-max 4 --signature-order ascending-first").0,
            1
        );
    }
}
