//! Command-line harness for the workbench: polynomial computation with
//! engine cross-checking, the predicate checks as JSON-line reports, segment
//! plot data, and the built-in catalog.
//!
//! Exit codes: 0 all pass, 1 a check failed, 2 parse or usage error,
//! 3 resource limit refused, 4 internal inconsistency (engine mismatch).

mod instances;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use tuttelab::lab::convexity::{self, ConvexityMethod};
use tuttelab::lab::{self, bounds, closed_form, search};
use tuttelab::report::{decimal_string, unix_timestamp, Rounding, CSV_HEADER};
use tuttelab::tutte;
use tuttelab::{CheckReport, Error, InstanceRef, Limits, Verdict};

#[derive(Parser)]
#[command(name = "tuttelab", version, about = "Exact matroid / Tutte polynomial workbench")]
struct Cli {
    /// Suppress the timestamp field so identical runs emit identical bytes.
    #[arg(long, global = true)]
    no_timestamp: bool,

    /// Worker threads for corpus sweeps and subset expansion (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..=512))]
    workers: Option<u64>,

    /// Cap (in bits) for 2^m subset expansion; overrides TUTTE_MAX_BITS.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..=40))]
    max_bits: Option<u64>,

    /// Write reports to a file instead of stdout (JSON lines).
    #[arg(long, global = true)]
    output: Option<String>,

    /// Also write a one-row-per-report CSV summary.
    #[arg(long, global = true)]
    summary_csv: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a Tutte polynomial.
    Poly {
        /// Instance: shorthand, inline descriptor JSON, or @file.
        instance: String,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Run predicate checks; emits one JSON report line per predicate.
    Check {
        #[command(subcommand)]
        predicate: CheckCommand,
    },
    /// Sample the segment restriction f(t) = T(t, p - t) as CSV.
    Plotdata {
        instance: String,
        /// Segment parameter p > 0 (exact rational).
        #[arg(long)]
        p: String,
        /// Number of sample points (at least 2).
        #[arg(long)]
        samples: usize,
        /// Decimal digits in the rendered samples.
        #[arg(long, default_value_t = 12)]
        digits: usize,
    },
    /// Catalog utilities.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List the built-in shorthands and catalog instances.
    List,
}

#[derive(Subcommand)]
enum CheckCommand {
    /// max{T(2,0), T(0,2)} >= T(1,1); over a corpus this is the
    /// conjecture harness (packing hypothesis first).
    Mw(InstanceOrCorpus),
    /// The two-sided inequality max{T(2a,0), T(0,2a)} >= T(a,a) at each a.
    Family {
        instance: String,
        /// Comma-separated exact rationals, e.g. "2,5/2,3,4".
        #[arg(long, default_value = "2,5/2,3,4")]
        a: String,
    },
    /// Segment convexity of T along x + y = p.
    Convexity {
        instance: String,
        /// Comma-separated exact rationals, e.g. "1/2,1,2,3,7/2".
        #[arg(long, default_value = "1/2,1,2,3,7/2")]
        p: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Sturm)]
        method: MethodArg,
        /// Grid density for the grid method.
        #[arg(long, default_value_t = 16)]
        grid_density: usize,
    },
    /// Two-disjoint-bases / union-of-two-bases certificates.
    Packing { instance: String },
    /// Paving + coloopless recognition and the packing dichotomy.
    Paving { instance: String },
    /// Coefficient identities of the Tutte matrix.
    Relations { instance: String },
    /// Exploratory midpoint-convexity probe over the positive quadrant.
    QuadrantProbe {
        instance: String,
        /// Upper corner of the probed square (exact rational).
        #[arg(long, default_value = "4")]
        bound: String,
        #[arg(long, default_value_t = 8)]
        density: usize,
    },
    /// The Catalan binomial identity, exactly, for every m up to the bound.
    CatalanIdentity {
        #[arg(long, default_value_t = 50)]
        max_m: usize,
    },
    /// Certified acyclic-orientation / spanning-tree bounds for 3-regular
    /// graphs of girth at least 5.
    CubicBounds {
        /// Graph: shorthand, inline graph JSON, or @file.
        graph: String,
        #[arg(long, default_value_t = 128)]
        precision: u32,
    },
}

#[derive(Args)]
struct InstanceOrCorpus {
    /// Single instance (shorthand, inline JSON, or @file).
    instance: Option<String>,
    /// Corpus sweep: "wheel=2..8,whirl=2..8", "multigraphs<=9", or "@file".
    #[arg(long, conflicts_with = "instance")]
    corpus: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Subsets,
    Delcon,
    Activities,
    All,
    Auto,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Sturm,
    Grid,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = cli.workers {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(workers as usize).build_global();
    }
    let mut limits = Limits::default();
    if let Some(bits) = cli.max_bits {
        limits.max_subset_bits = bits as usize;
    }
    match run(&cli, &limits) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::ResourceLimit(_) => 3,
        Error::Internal(_) => 4,
        _ => 2,
    }
}

struct Emitter {
    out: Box<dyn Write>,
    csv: Option<std::fs::File>,
    timestamp: Option<u64>,
    any_fail: bool,
}

impl Emitter {
    fn new(cli: &Cli) -> Result<Emitter, Error> {
        let out: Box<dyn Write> = match &cli.output {
            Some(path) => Box::new(std::fs::File::create(path).map_err(|e| {
                Error::InvalidConstruction(format!("cannot create '{path}': {e}"))
            })?),
            None => Box::new(std::io::stdout()),
        };
        let csv = match &cli.summary_csv {
            Some(path) => {
                let mut f = std::fs::File::create(path).map_err(|e| {
                    Error::InvalidConstruction(format!("cannot create '{path}': {e}"))
                })?;
                writeln!(f, "{CSV_HEADER}").ok();
                Some(f)
            }
            None => None,
        };
        Ok(Emitter {
            out,
            csv,
            timestamp: if cli.no_timestamp { None } else { Some(unix_timestamp()) },
            any_fail: false,
        })
    }

    fn emit(&mut self, mut report: CheckReport) -> Result<(), Error> {
        report.timestamp = self.timestamp;
        if report.verdict == Verdict::Fail {
            self.any_fail = true;
        }
        writeln!(self.out, "{}", report.to_json_line())
            .map_err(|e| Error::Internal(format!("write failed: {e}")))?;
        if let Some(csv) = &mut self.csv {
            writeln!(csv, "{}", report.to_csv_row())
                .map_err(|e| Error::Internal(format!("csv write failed: {e}")))?;
        }
        Ok(())
    }

    fn finish(self) -> ExitCode {
        if self.any_fail {
            ExitCode::from(1)
        } else {
            ExitCode::SUCCESS
        }
    }
}

fn run(cli: &Cli, limits: &Limits) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Poly { instance, engine, format } => {
            cmd_poly(cli, limits, instance, *engine, *format)
        }
        Command::Check { predicate } => cmd_check(cli, limits, predicate),
        Command::Plotdata { instance, p, samples, digits } => {
            cmd_plotdata(cli, limits, instance, p, *samples, *digits)
        }
        Command::Catalog { action: CatalogCommand::List } => {
            let mut out = std::io::stdout();
            writeln!(out, "shorthand families:").ok();
            for (short, desc) in tuttelab::catalog::shorthand_help() {
                writeln!(out, "  {short:24} {desc}").ok();
            }
            writeln!(out, "\nstanding catalog instances:").ok();
            for entry in tuttelab::catalog::catalog() {
                writeln!(
                    out,
                    "  {:28} m={:2} r={}",
                    entry.id,
                    entry.matroid.size(),
                    entry.matroid.full_rank()
                )
                .ok();
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_poly(
    cli: &Cli,
    limits: &Limits,
    instance: &str,
    engine: EngineArg,
    format: FormatArg,
) -> Result<ExitCode, Error> {
    let (id, m) = instances::parse_matroid(instance, limits)?;
    let (poly, engine_label) = match engine {
        EngineArg::Subsets => (tutte::tutte_by_subsets(&m, limits)?, "subsets"),
        EngineArg::Delcon => (tutte::tutte_by_deletion_contraction(&m, limits)?, "delcon"),
        EngineArg::Activities => (tutte::tutte_by_activities(&m, None, limits)?, "activities"),
        EngineArg::Auto => (lab::tutte_auto(&m, limits)?, "auto"),
        EngineArg::All => {
            let subsets = tutte::tutte_by_subsets(&m, limits)?;
            let delcon = tutte::tutte_by_deletion_contraction(&m, limits)?;
            let activities = tutte::tutte_by_activities(&m, None, limits)?;
            if subsets != delcon || subsets != activities {
                return Err(Error::Internal(format!(
                    "engine mismatch on '{id}': subsets={subsets:?} delcon={delcon:?} activities={activities:?}"
                )));
            }
            (subsets, "all-agree")
        }
    };
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(std::fs::File::create(path).map_err(|e| {
            Error::InvalidConstruction(format!("cannot create '{path}': {e}"))
        })?),
        None => Box::new(std::io::stdout()),
    };
    match format {
        FormatArg::Json => {
            let mut doc = poly.to_json();
            doc["instance"] = serde_json::Value::String(id);
            doc["engine"] = serde_json::Value::String(engine_label.into());
            writeln!(out, "{doc}").map_err(|e| Error::Internal(e.to_string()))?;
        }
        FormatArg::Latex => {
            writeln!(out, "{}", poly.to_latex()).map_err(|e| Error::Internal(e.to_string()))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(cli: &Cli, limits: &Limits, predicate: &CheckCommand) -> Result<ExitCode, Error> {
    let mut emitter = Emitter::new(cli)?;
    match predicate {
        CheckCommand::Mw(source) => match (&source.instance, &source.corpus) {
            (Some(spec), None) => {
                // A single instance is checked unconditionally; the packing
                // hypothesis only gates corpus sweeps.
                let (id, m) = instances::parse_matroid(spec, limits)?;
                let cert = tuttelab::packing::packing_certificate(&m)?;
                let mut report = lab::check_merino_welsh(&m, limits, InstanceRef::name(&id))?;
                report.set_value("packing", cert.verdict().as_str());
                emitter.emit(report)?;
            }
            (None, Some(corpus)) => {
                let corpus = instances::parse_corpus(corpus, limits)?;
                for report in search::conjecture_search(&corpus, limits)? {
                    emitter.emit(report)?;
                }
            }
            _ => {
                return Err(Error::InvalidConstruction(
                    "check mw needs an instance or --corpus".into(),
                ))
            }
        },
        CheckCommand::Family { instance, a } => {
            let (id, m) = instances::parse_matroid(instance, limits)?;
            let values = instances::parse_rational_list(a)?;
            reject_negative(&values, "a")?;
            let cert = tuttelab::packing::packing_certificate(&m)?;
            for a in &values {
                emitter.emit(lab::check_family_inequality_with(
                    &m,
                    a,
                    &cert,
                    limits,
                    InstanceRef::name(&id),
                )?)?;
            }
        }
        CheckCommand::Convexity { instance, p, method, grid_density } => {
            let (id, m) = instances::parse_matroid(instance, limits)?;
            let values = instances::parse_rational_list(p)?;
            let poly = lab::tutte_auto(&m, limits)?;
            let method = match method {
                MethodArg::Sturm => ConvexityMethod::ExactSturm,
                MethodArg::Grid => ConvexityMethod::Grid { density: *grid_density },
            };
            for p in &values {
                let report = convexity::check_segment_convexity(&poly, p, method)?;
                emitter.emit(report.to_report(InstanceRef::name(&id)))?;
            }
        }
        CheckCommand::Packing { instance } => {
            let (id, m) = instances::parse_matroid(instance, limits)?;
            emitter.emit(lab::check_packing(&m, InstanceRef::name(&id))?)?;
        }
        CheckCommand::Paving { instance } => {
            let (id, m) = instances::parse_matroid(instance, limits)?;
            emitter.emit(lab::check_paving_dichotomy(&m, InstanceRef::name(&id))?)?;
        }
        CheckCommand::Relations { instance } => {
            let (id, m) = instances::parse_matroid(instance, limits)?;
            emitter.emit(lab::check_relations(&m, limits, InstanceRef::name(&id))?)?;
        }
        CheckCommand::QuadrantProbe { instance, bound, density } => {
            let (id, m) = instances::parse_matroid(instance, limits)?;
            let bound = instances::parse_rational(bound)?;
            let poly = lab::tutte_auto(&m, limits)?;
            emitter.emit(convexity::quadrant_convexity_probe(
                &poly,
                &bound,
                *density,
                InstanceRef::name(&id),
            )?)?;
        }
        CheckCommand::CatalanIdentity { max_m } => {
            for m in 1..=*max_m {
                emitter.emit(closed_form::catalan_binomial_identity(
                    m,
                    InstanceRef::name(format!("m={m}")),
                )?)?;
            }
        }
        CheckCommand::CubicBounds { graph, precision } => {
            let (id, g) = instances::parse_graph(graph)?;
            emitter.emit(bounds::cubic_girth5_bounds(
                &g,
                *precision,
                limits,
                InstanceRef::name(&id),
            )?)?;
        }
    }
    Ok(emitter.finish())
}

fn reject_negative(values: &[BigRational], name: &str) -> Result<(), Error> {
    use num_traits::Signed;
    for v in values {
        if v.is_negative() {
            return Err(Error::Precondition(format!("{name} values must be nonnegative")));
        }
    }
    Ok(())
}

fn cmd_plotdata(
    cli: &Cli,
    limits: &Limits,
    instance: &str,
    p: &str,
    samples: usize,
    digits: usize,
) -> Result<ExitCode, Error> {
    use num_traits::Signed;
    if samples < 2 {
        return Err(Error::Precondition("plotdata needs at least 2 samples".into()));
    }
    let p = instances::parse_rational(p)?;
    if !p.is_positive() {
        return Err(Error::Precondition("plotdata needs p > 0".into()));
    }
    let (_, m) = instances::parse_matroid(instance, limits)?;
    let poly = lab::tutte_auto(&m, limits)?;
    let f = poly.restrict_to_segment(&p);
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(std::fs::File::create(path).map_err(|e| {
            Error::InvalidConstruction(format!("cannot create '{path}': {e}"))
        })?),
        None => Box::new(std::io::stdout()),
    };
    writeln!(out, "t,f").map_err(|e| Error::Internal(e.to_string()))?;
    for i in 0..samples {
        let t = &p * BigRational::new(i.into(), (samples - 1).into());
        let v = f.eval(&t);
        writeln!(
            out,
            "{},{}",
            decimal_string(&t, digits, Rounding::Nearest),
            decimal_string(&v, digits, Rounding::Nearest)
        )
        .map_err(|e| Error::Internal(e.to_string()))?;
    }
    Ok(ExitCode::SUCCESS)
}
