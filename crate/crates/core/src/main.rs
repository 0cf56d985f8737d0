use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fracdyn::cli::{run, RunError, EXIT_VALIDATION};
use fracdyn::config::{apply_override, parse_object, RunConfig};
use fracdyn::Mode;

#[derive(Parser)]
#[command(name = "fracdyn", version, about = "Fractional ABM solver for the hereditary Dubovsky long-wave model")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the trajectory as `t,x,y`.
    Simulate(RunArgs),
    /// Write the phase-plane curve as `x,y`.
    Phase(RunArgs),
    /// Write a Runge convergence table as `N,tau,xi_x,xi_y,p_x,p_y`.
    Converge(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// JSON configuration; defaults apply when omitted.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output CSV path; falls back to `output_path` in the configuration.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Override a configuration key, applied in order after the file.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    overrides: Vec<String>,
}

fn load(args: &RunArgs, mode: Mode) -> Result<(RunConfig, PathBuf), RunError> {
    let text = match &args.config {
        Some(path) => std::fs::read_to_string(path).map_err(|source| RunError::Io {
            path: path.display().to_string(),
            source,
        })?,
        None => "{}".to_string(),
    };
    let mut map = parse_object(&text)?;
    for o in &args.overrides {
        apply_override(&mut map, o)?;
    }
    let mut config = RunConfig::from_map(&map)?;
    config.mode = mode;
    if let Some(out) = &args.out {
        config.output_path = Some(out.clone());
    }
    let path = config.output_path.clone().ok_or_else(|| {
        RunError::Config(fracdyn::config::ConfigError::BadValue {
            key: "output_path".into(),
            reason: "no output path given (use --out)".into(),
        })
    })?;
    Ok((config, path))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (args, mode) = match &cli.command {
        Command::Simulate(a) => (a, Mode::Simulate),
        Command::Phase(a) => (a, Mode::Phase),
        Command::Converge(a) => (a, Mode::Converge),
    };
    let result = load(args, mode).and_then(|(config, path)| run(&config, &path));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fracdyn: {e}");
            ExitCode::from(u8::try_from(e.exit_code()).unwrap_or(EXIT_VALIDATION as u8))
        }
    }
}
