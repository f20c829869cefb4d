//! The `iwa` command line. [`run`] is the whole program; `main` only wires
//! it to the process.

pub mod commands;
pub mod config;
pub mod emit;
mod error;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use iwa_mirror::NamedSpace;

pub use commands::{HodgeReport, Status};
pub use config::{FileConfig, Flags, Format, PointSource, RunConfig, Slice};
pub use emit::{emit_report, Report, Table};
pub use error::CliError;
pub use verify::{run_criterion, Criterion, CriterionResult, Ctx, KNOWN_UNATTAINABLE, REGISTRY};

#[derive(Debug, Parser)]
#[command(name = "iwa", version, about = "Exact computations on the Iwasawa manifold and its deformations")]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Parameter point, `0` or `t11=1/2,t22=-1/3i`; repeatable.
    #[arg(long = "t", global = true, value_name = "POINT")]
    pub t: Vec<String>,
    /// Sample this many seeded rational points instead of `--t`.
    #[arg(long, global = true)]
    pub sample: Option<usize>,
    /// Sampler seed; the IWA_SEED environment variable overrides it.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Largest denominator for sampled points (default 8).
    #[arg(long, global = true)]
    pub max_den: Option<u32>,
    /// `essential` zeroes t31, t32.
    #[arg(long, global = true, value_enum)]
    pub slice: Option<Slice>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// JSON file with the same keys as the flags.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dolbeault, Bott-Chern, Aeppli grids, Betti numbers, E1 and E2.
    Hodge,
    /// Frolicher pages E1..E3 and degeneration.
    Frolicher,
    /// Hodge star of a form.
    Star {
        #[arg(long)]
        form: String,
        #[arg(long, value_enum, default_value_t)]
        metric: commands::MetricChoice,
    },
    /// Gauduchon, strongly Gauduchon, balanced and Kahler conditions.
    Metric {
        #[arg(long, value_enum)]
        check: Option<commands::Check>,
        #[arg(long, value_enum, default_value_t)]
        metric: commands::MetricChoice,
    },
    /// The sigma functions from the frame and, on class (ii), the closed forms.
    Sigma,
    /// Canonical coordinates z and w (essential slice).
    Coords,
    /// Mirror map into H^{2,2}_A(X_0).
    Mirror {
        #[arg(long)]
        complexified: bool,
    },
    /// Signature of an intersection form.
    Signature {
        #[arg(long, value_parser = parse_space)]
        space: NamedSpace,
    },
    /// Transversality and holomorphicity checks at t = 0.
    VhsCheck,
    /// Replays every acceptance criterion.
    Verify {
        /// Restrict to these criterion numbers.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

fn parse_space(s: &str) -> Result<NamedSpace, String> {
    s.parse::<NamedSpace>().map_err(|e| e.to_string())
}

impl From<&CommonArgs> for Flags {
    fn from(a: &CommonArgs) -> Self {
        Flags {
            t: a.t.clone(),
            sample: a.sample,
            seed: a.seed,
            max_den: a.max_den,
            slice: a.slice,
            format: a.format,
            output: a.output.clone(),
            config: a.config.clone(),
        }
    }
}

fn verify_report(results: &[CriterionResult]) -> (Report, Status) {
    let mut tab = Table::new("acceptance criteria", &["criterion", "status", "title", "checks", "first failure"]);
    for r in results {
        let passed = r.checks.iter().filter(|c| c.pass).count();
        tab.row(vec![
            r.id.to_string(),
            if r.pass { "PASS" } else { "FAIL" }.to_string(),
            r.title.clone(),
            format!("{passed}/{}", r.checks.len()),
            r.first_failure().map(|f| format!("{}: {}", f.name, f.witness)).unwrap_or_default(),
        ]);
    }
    let status = match results.iter().find_map(|r| r.first_failure().map(|f| (r, f))) {
        Some((r, f)) => Status::Failed(format!("criterion {}: {}: {}", r.id, f.name, f.witness)),
        None => Status::Ok,
    };
    let report = Report {
        json: serde_json::to_value(results).expect("plain data"),
        tables: vec![tab],
    };
    (report, status)
}

fn dispatch(cmd: &Command, cfg: &RunConfig) -> commands::CommandResult {
    let pts = cfg.points();
    match cmd {
        Command::Hodge => commands::hodge(&pts),
        Command::Frolicher => commands::frolicher(&pts),
        Command::Star { form, metric } => commands::star(&pts, form, *metric),
        Command::Metric { check, metric } => commands::metric(&pts, *check, *metric),
        Command::Sigma => commands::sigma(&pts),
        Command::Coords => commands::coords(&pts),
        Command::Mirror { complexified } => commands::mirror(&pts, *complexified),
        Command::Signature { space } => commands::signature(*space),
        Command::VhsCheck => commands::vhs_check(),
        Command::Verify { only } => {
            let results = verify::verify(&Ctx { seed: cfg.seed }, only)?;
            Ok(verify_report(&results))
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<Status, CliError> {
    let env_seed = std::env::var("IWA_SEED").ok();
    let cfg = RunConfig::resolve(&Flags::from(&cli.common), env_seed.as_deref())?;
    let (report, status) = dispatch(&cli.command, &cfg)?;
    let text = emit_report(&report, cfg.format)?;
    match &cfg.output {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(status)
}

/// Exit code 0 on success, 1 on a failed verification (first witness on
/// `err`), 2 on usage or domain errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(Status::Ok) => 0,
        Ok(Status::Failed(w)) => {
            let _ = writeln!(err, "verification failed: {w}");
            1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
