use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use bcres::{load_input, render_report, run_command, CliError, Command, Format, Options};
use bcres_core::graph::Bridge;
use bcres_core::Characteristic;
use clap::Parser;

/// Exact analyses of matroids, broken-circuit complexes and their monomial ideals.
#[derive(Parser, Debug)]
#[command(name = "bcres", version)]
struct Cli {
    /// One of: info, bc, ideal, betti, hilbert, decompose, stratify, ci,
    /// cross-validate, arrangement, graph, gnr.
    command: String,
    /// Input document (JSON); "-" reads standard input.
    input: Option<PathBuf>,
    /// Element order as comma-separated labels, e.g. 2,1,3.
    #[arg(long, value_delimiter = ',')]
    order: Option<Vec<String>>,
    /// Field characteristic: 0 or a prime.
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
    /// Largest power checked by cross-validate.
    #[arg(long, default_value_t = 3)]
    max_power: u32,
    /// human or json.
    #[arg(long, default_value = "human")]
    format: String,
    /// Corpus seed; cross-validate without an input runs the whole corpus.
    #[arg(long)]
    seed: Option<u64>,
    /// Cycle sizes for gnr, e.g. 3,4.
    #[arg(long, value_delimiter = ',')]
    cycles: Option<Vec<usize>>,
    /// How gnr joins its cycles: disjoint, wedge or path:<edges>.
    #[arg(long, default_value = "disjoint")]
    bridge: String,
    /// Expected number of cycles for graph and gnr.
    #[arg(long)]
    expected_cycles: Option<usize>,
}

fn parse_bridge(s: &str) -> Result<Bridge, CliError> {
    match s {
        "disjoint" => Ok(Bridge::Disjoint),
        "wedge" => Ok(Bridge::Wedge),
        _ => s
            .strip_prefix("path:")
            .and_then(|k| k.parse().ok())
            .map(Bridge::Path)
            .ok_or_else(|| CliError::Usage(format!("unknown bridge {s:?}; use disjoint, wedge or path:<edges>"))),
    }
}

fn run(cli: Cli) -> Result<(String, i32), CliError> {
    let command = Command::from_name(&cli.command)
        .ok_or_else(|| CliError::Usage(format!("unknown command {:?}", cli.command)))?;
    let format = Format::from_name(&cli.format)
        .ok_or_else(|| CliError::Usage(format!("unknown format {:?}; use human or json", cli.format)))?;
    let characteristic = Characteristic::new(cli.characteristic).map_err(CliError::Core)?;
    let opts = Options {
        characteristic,
        max_power: cli.max_power,
        order: cli.order,
        seed: cli.seed,
        cycles: cli.cycles,
        bridge: parse_bridge(&cli.bridge)?,
        expected_cycles: cli.expected_cycles,
    };
    let input = match &cli.input {
        None => None,
        Some(p) => {
            let text = if p.as_os_str() == "-" {
                let mut s = String::new();
                std::io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| CliError::Io(e.to_string()))?;
                s
            } else {
                std::fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?
            };
            Some(load_input(&text)?)
        }
    };
    let report = run_command(command, input.as_ref(), &opts)?;
    Ok((render_report(&report, format), report.exit_code()))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
