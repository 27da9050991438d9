use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ddgalois::{batch_lines, error_json, parse_field_poly, render_text, run_batch, run_command, CliError, Command, Options};
use ddgalois_core::{NumberField, Settings};
use serde_json::Value;

#[derive(Parser)]
#[command(name = "ddgalois", version, about = "Difference-differential Galois groups of y(x+2) + a y(x+1) + b y(x) = 0")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// JSON output (default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Aligned text output.
    #[arg(long, global = true)]
    text: bool,
    /// Largest degree handed to the factorizer.
    #[arg(long, global = true, value_name = "N")]
    max_degree: Option<usize>,
    /// Designated extension of Q, e.g. "t^2-5".
    #[arg(long, global = true, value_name = "POLY")]
    number_field: Option<String>,
    /// Re-check every certificate (default).
    #[arg(long, global = true, overrides_with = "no_verify")]
    verify: bool,
    #[arg(long, global = true, overrides_with = "verify")]
    no_verify: bool,
    /// Shift step t for residues, telescope and hypergeom.
    #[arg(long, global = true, default_value_t = 1)]
    step: u32,
    /// Include wall-clock timings in the diagnostics.
    #[arg(long, global = true)]
    timings: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long, short, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify H and G for an equation or a batch file.
    Classify { input: String },
    /// Emit and verify relations among the solutions.
    Relations { input: String },
    /// Discrete residues of a rational function.
    Residues { input: String },
    /// Solve sigma^t(g) - g = f.
    Telescope { input: String },
    /// Hypergeometric solutions of an equation.
    Hypergeom { input: String },
}

fn options(g: &Global) -> Result<Options, CliError> {
    let mut settings = Settings::default();
    if let Some(d) = g.max_degree {
        settings.limits.max_factor_degree = d;
    }
    if let Some(nf) = &g.number_field {
        settings.number_field = Some(NumberField::new(&parse_field_poly(nf)?)?);
    }
    Ok(Options { settings, verify: !g.no_verify, step: g.step, timings: g.timings })
}

fn render(v: &Value, text: bool) -> String {
    if text {
        render_text(v)
    } else {
        let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
        s.push('\n');
        s
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let (cmd, input) = match &cli.command {
        Cmd::Classify { input } => (Command::Classify, input),
        Cmd::Relations { input } => (Command::Relations, input),
        Cmd::Residues { input } => (Command::Residues, input),
        Cmd::Telescope { input } => (Command::Telescope, input),
        Cmd::Hypergeom { input } => (Command::Hypergeom, input),
    };
    let batch = matches!(cmd, Command::Classify | Command::Relations) && Path::new(input).is_file();

    let (out, code) = match options(g) {
        Err(e) => (render(&error_json(input, &e), g.text), e.exit_code()),
        Ok(opts) if batch => match std::fs::read_to_string(input) {
            Err(e) => {
                let e = CliError::Usage(format!("cannot read {input}: {e}"));
                (render(&error_json(input, &e), g.text), e.exit_code())
            }
            Ok(text) => {
                let lines = batch_lines(&text);
                let results = run_batch(cmd, &lines, &opts);
                let code = results.iter().filter_map(|r| r.as_ref().err()).map(CliError::exit_code).max().unwrap_or(0);
                let values: Vec<Value> = lines
                    .iter()
                    .zip(results)
                    .map(|(l, r)| r.unwrap_or_else(|e| error_json(l, &e)))
                    .collect();
                let out = if g.text {
                    values.iter().map(render_text).collect::<Vec<_>>().join("\n")
                } else {
                    render(&Value::Array(values), false)
                };
                (out, code)
            }
        },
        Ok(opts) => match run_command(cmd, input, &opts) {
            Ok(v) => (render(&v, g.text), 0),
            Err(e) => {
                eprintln!("ddgalois: {e}");
                (render(&error_json(input, &e), g.text), e.exit_code())
            }
        },
    };

    match &g.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, out) {
                eprintln!("ddgalois: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{out}"),
    }
    ExitCode::from(code as u8)
}
