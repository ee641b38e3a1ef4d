mod render;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gridnet_core::bounds::bounds_report;
use gridnet_core::constructions::{check_ds_na_conditions, check_na_mh_conditions, ds_to_mh, ds_to_na, na_to_mh};
use gridnet_core::graphs::diameter;
use gridnet_core::search::{line_digraph_law, sandwich_sweep, search, sweep_verify, MhMode, Theorem};
use gridnet_core::{CompileMode, Digraph, Family, FamilyError, FamilyParams, SearchOptions};

use render::{Format, Report};

const EXIT_INVALID: u8 = 1;
const EXIT_MISMATCH: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "gridnet", version, about = "Double-step, New Amsterdam and Manhattan digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the digraph for a parameter record.
    Gen {
        params: FamilyParams,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
        /// Compile even if the parameters fail validation.
        #[arg(long)]
        force: bool,
    },
    /// Diameter of a parameter record or of a graph in JSON form.
    Diameter {
        #[arg(required_unless_present = "input", conflicts_with = "input")]
        params: Option<FamilyParams>,
        /// JSON graph file, `-` for stdin.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Moore bound and order ranges for diameter `k`.
    Bounds {
        family: Family,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Translate steps: `na` from a double-step record, `mh` from either.
    Derive {
        #[arg(value_enum)]
        target: DeriveTarget,
        params: FamilyParams,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Exhaustive minimum-diameter search at one order.
    Search {
        family: Family,
        #[arg(long)]
        n: u32,
        /// Override the family's order cap.
        #[arg(long)]
        cap: Option<u32>,
        #[command(flatten)]
        workers: WorkerArgs,
        /// Manhattan only: enumerate Manhattan steps directly.
        #[arg(long)]
        direct: bool,
        /// Direct Manhattan search only: drop the mod-4 residue rule.
        #[arg(long, requires = "direct")]
        no_mod4: bool,
        #[arg(long, default_value_t = gridnet_core::search::DEFAULT_WITNESS_CAP)]
        witness_cap: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check a theorem or identity; exits 2 if any row fails.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[arg(long, default_value_t = 3)]
        k_max: u32,
        /// Largest order for `sandwich` (default 40) or the exhaustive part
        /// of `line-digraph` (default 24).
        #[arg(long)]
        n_max: Option<u32>,
        /// `line-digraph`: largest sampled order.
        #[arg(long, default_value_t = 60)]
        sample_max: u32,
        /// `line-digraph`: keep every n-th candidate above `--n-max`.
        #[arg(long, default_value_t = 5)]
        stride: usize,
        /// Also run the exhaustive search at every theorem order.
        #[arg(long)]
        search: bool,
        #[command(flatten)]
        workers: WorkerArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Order-to-diameter table of the New Amsterdam or Manhattan construction.
    Table {
        #[arg(value_enum)]
        family: TableFamily,
        #[arg(long, default_value_t = 3)]
        k_max: u32,
        /// Fill the missing orders with exhaustive search results.
        #[arg(long)]
        search: bool,
        #[arg(long)]
        csv: bool,
        #[command(flatten)]
        workers: WorkerArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct WorkerArgs {
    /// Search threads (default: all cores).
    #[arg(long, env = "GRIDNET_WORKERS")]
    workers: Option<usize>,
}

impl WorkerArgs {
    fn count(&self) -> usize {
        self.workers.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get())).max(1)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum DeriveTarget {
    Na,
    Mh,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFamily {
    Na,
    Mh,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    #[value(name = "4.1")]
    T41,
    #[value(name = "4.2")]
    T42,
    #[value(name = "4.3")]
    T43,
    Sandwich,
    LineDigraph,
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn invalid(e: impl ToString) -> Failure {
    Failure { code: EXIT_INVALID, message: e.to_string() }
}

fn usage(e: impl ToString) -> Failure {
    Failure { code: EXIT_USAGE, message: e.to_string() }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn warn_and_compile(p: &FamilyParams, force: bool) -> Result<Digraph, Failure> {
    let v = p.validate();
    for w in &v.warnings {
        eprintln!("warning: {p}: {w}");
    }
    if force {
        for issue in &v.violations {
            eprintln!("warning: {p}: {issue} (compiled anyway)");
        }
    }
    let mode = if force { CompileMode::Force } else { CompileMode::Strict };
    p.compile(mode).map_err(|e| invalid(format!("{p}: {e}")))
}

fn read_graph(path: &PathBuf) -> Result<Digraph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(usage)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?
    };
    Digraph::from_json(&text).map_err(invalid)
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Gen { params, format, force } => {
            let g = warn_and_compile(&params, force)?;
            match format {
                GraphFormat::Dot => print!("{}", g.to_dot()),
                GraphFormat::Json => println!("{}", g.to_json()),
            }
            Ok(0)
        }
        Command::Diameter { params, input, force, out } => {
            let (label, g) = match (params, input) {
                (Some(p), _) => (p.to_string(), warn_and_compile(&p, force)?),
                (None, Some(path)) => (path.display().to_string(), read_graph(&path)?),
                (None, None) => unreachable!("clap requires one of them"),
            };
            Report::Diameter { instance: label, order: g.order(), diameter: diameter(&g) }.print(out.format);
            Ok(0)
        }
        Command::Bounds { family, k, out } => {
            let report = bounds_report(family, k).map_err(usage)?;
            Report::Bounds(report).print(out.format);
            Ok(0)
        }
        Command::Derive { target, params, out } => derive(target, params, out.format),
        Command::Search { family, n, cap, workers, direct, no_mod4, witness_cap, out } => {
            if direct && family != Family::Mh {
                return Err(usage("--direct applies to mh only"));
            }
            let opts = SearchOptions {
                cap,
                workers: workers.count(),
                mh_mode: if direct { MhMode::Direct } else { MhMode::ViaNa },
                mod4_filter: !no_mod4,
                witness_cap,
            };
            let result = search(family, n, &opts).map_err(usage)?;
            Report::Search(result).print(out.format);
            Ok(0)
        }
        Command::Verify { target, k_max, n_max, sample_max, stride, search, workers, out } => {
            let opts = SearchOptions::default().with_workers(workers.count());
            let report = match target {
                VerifyTarget::T41 => Report::Sweep(sweep_verify(Theorem::T41, k_max, search, &opts)),
                VerifyTarget::T42 => Report::Sweep(sweep_verify(Theorem::T42, k_max, search, &opts)),
                VerifyTarget::T43 => Report::Sweep(sweep_verify(Theorem::T43, k_max, search, &opts)),
                VerifyTarget::Sandwich => Report::Sandwich(sandwich_sweep(n_max.unwrap_or(40))),
                VerifyTarget::LineDigraph => {
                    let n = n_max.unwrap_or(24);
                    Report::LineDigraph(line_digraph_law(n, sample_max, stride, Some(n)))
                }
            };
            report.print(out.format);
            Ok(if report.all_pass() { 0 } else { EXIT_MISMATCH })
        }
        Command::Table { family, k_max, search, csv, workers, out } => {
            let theorem = match family {
                TableFamily::Na => Theorem::T42,
                TableFamily::Mh => Theorem::T43,
            };
            let opts = SearchOptions::default().with_workers(workers.count());
            let report = Report::Table(sweep_verify(theorem, k_max, search, &opts));
            report.print(if csv { Format::Csv } else { out.format });
            Ok(if report.all_pass() { 0 } else { EXIT_MISMATCH })
        }
    }
}

fn derive(target: DeriveTarget, params: FamilyParams, format: Format) -> Result<u8, Failure> {
    let failed_conditions;
    let derived: FamilyParams = match (target, params) {
        (DeriveTarget::Na, FamilyParams::Ds(ds)) => {
            let na = ds_to_na(&ds).map_err(invalid)?;
            failed_conditions = check_ds_na_conditions(&ds, &na);
            na.into()
        }
        (DeriveTarget::Mh, FamilyParams::Ds(ds)) => {
            let na = ds_to_na(&ds).map_err(invalid)?;
            let mh = ds_to_mh(&ds).map_err(invalid)?;
            failed_conditions = [check_ds_na_conditions(&ds, &na), check_na_mh_conditions(&na, &mh)].concat();
            mh.into()
        }
        (DeriveTarget::Mh, FamilyParams::Na(na)) => {
            let mh = na_to_mh(&na).map_err(invalid)?;
            failed_conditions = check_na_mh_conditions(&na, &mh);
            mh.into()
        }
        (_, other) => {
            return Err(usage(format!("cannot derive {} from {}", target_name(target), other.family())));
        }
    };
    let diameter_of = |p: &FamilyParams| p.compile(CompileMode::Strict).map(|g| diameter(&g));
    let source_diameter = diameter_of(&params).map_err(|e: FamilyError| invalid(e))?;
    let derived_diameter = diameter_of(&derived).map_err(invalid)?;
    let ok = failed_conditions.is_empty();
    Report::Derive { source: params, source_diameter, derived, derived_diameter, failed_conditions }.print(format);
    Ok(if ok { 0 } else { EXIT_MISMATCH })
}

fn target_name(t: DeriveTarget) -> &'static str {
    match t {
        DeriveTarget::Na => "na",
        DeriveTarget::Mh => "mh",
    }
}
