//! `lietorus`: build Lie tori and EALAs from JSON specs, run the verification
//! suites, lift involutions and export structure constants.
//!
//! Exit codes: 0 when every check passes, 1 on any violation, 2 on bad input.

mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use lietorus::export::export_structure_constants;
use lietorus::lie::CheckOptions;
use lietorus::report::Report;
use lietorus::spec::{any_from_json, AnySpec};
use serde_json::Value;

use suites::Suite;

#[derive(Parser)]
#[command(name = "lietorus", version, about = "Exact verification of Lie tori, Chevalley involutions and EALAs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the algebra described by a spec and print a summary.
    Build(Common),
    /// Run a verification suite and write its report.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[command(flatten)]
        common: Common,
    },
    /// Write the structure constants on the window atoms.
    Export(Common),
    /// Lift the Chevalley involution of L to E(L, D, κ) and verify the lift.
    Lift(Common),
}

#[derive(clap::Args)]
struct Common {
    /// Path to a JSON spec file.
    #[arg(long)]
    spec: PathBuf,
    /// Degree window radius; defaults to the spec's window, else 2.
    #[arg(long)]
    window: Option<i64>,
    /// Random samples for sampled sweeps.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Input errors, reported with exit code 2.
struct BadInput(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for BadInput {
    fn from(e: E) -> BadInput {
        BadInput(e.into())
    }
}

fn load(c: &Common) -> Result<AnySpec, BadInput> {
    if c.window.is_some_and(|r| r < 0) {
        return Err(anyhow::anyhow!("window radius must be >= 0").into());
    }
    let raw = std::fs::read_to_string(&c.spec).with_context(|| format!("reading {}", c.spec.display()))?;
    let v: Value = serde_json::from_str(&raw).with_context(|| format!("parsing {}", c.spec.display()))?;
    Ok(any_from_json(&v).with_context(|| format!("invalid spec {}", c.spec.display()))?)
}

fn emit(c: &Common, body: String) -> Result<(), BadInput> {
    match &c.out {
        Some(p) => std::fs::write(p, body + "\n").with_context(|| format!("writing {}", p.display()))?,
        None => println!("{body}"),
    }
    Ok(())
}

fn render_report(c: &Common, rep: &Report) -> String {
    match c.format {
        Format::Json => rep.to_json(),
        Format::Text => rep.to_text().trim_end().to_string(),
    }
}

fn render_value(c: &Common, v: &Value) -> String {
    match c.format {
        Format::Json => serde_json::to_string_pretty(v).expect("value serializes"),
        Format::Text => match v.as_object() {
            Some(m) => m.iter().map(|(k, x)| format!("{k}: {}", x.as_str().map(String::from).unwrap_or_else(|| x.to_string()))).collect::<Vec<_>>().join("\n"),
            None => v.to_string(),
        },
    }
}

fn export_text(v: &Value) -> String {
    let mut lines = Vec::new();
    for a in v["atoms"].as_array().into_iter().flatten() {
        lines.push(format!("atom {} root {} degree {} index {}: {}", a["id"], a["root"], a["degree"], a["index"], a["payload"]));
    }
    for r in v["brackets"].as_array().into_iter().flatten() {
        let terms: Vec<String> = r["terms"]
            .as_array()
            .into_iter()
            .flatten()
            .map(|t| format!("({})·#{}", t["c"]["value"].as_str().unwrap_or("?"), t["k"]))
            .collect();
        lines.push(format!("[#{}, #{}] = {}", r["i"], r["j"], terms.join(" + ")));
    }
    lines.join("\n")
}

fn run(cli: Cli) -> Result<bool, BadInput> {
    match cli.command {
        Command::Build(c) => {
            let spec = load(&c)?;
            let summary = suites::build_summary(&spec, &spec.degree_window(c.window));
            emit(&c, render_value(&c, &summary))?;
            Ok(true)
        }
        Command::Verify { suite, common: c } => {
            let spec = load(&c)?;
            let rep = suites::verify(&spec, suite, &spec.degree_window(c.window), &CheckOptions::with(c.samples, c.seed))?;
            emit(&c, render_report(&c, &rep))?;
            Ok(rep.all_pass())
        }
        Command::Export(c) => {
            let spec = load(&c)?;
            let l = match &spec {
                AnySpec::Lie(l) => l.construction.lie(),
                AnySpec::Eala(e) => e.lie.construction.lie(),
                AnySpec::Torus(..) => return Err(anyhow::anyhow!("export needs a Lie torus spec").into()),
            };
            let v = export_structure_constants(l.as_ref(), &spec.degree_window(c.window));
            let body = match c.format {
                Format::Json => serde_json::to_string_pretty(&v).expect("value serializes"),
                Format::Text => export_text(&v),
            };
            emit(&c, body)?;
            Ok(true)
        }
        Command::Lift(c) => {
            let spec = load(&c)?;
            let rep = suites::lift(&spec, &spec.degree_window(c.window), &CheckOptions::with(c.samples, c.seed))?;
            emit(&c, render_report(&c, &rep))?;
            Ok(rep.all_pass())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(BadInput(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
