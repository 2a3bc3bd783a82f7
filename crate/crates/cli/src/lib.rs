//! Command-line front end for the `manin` library.

pub mod cli;
pub mod commands;
pub mod inputs;

use anyhow::Result;
use clap::Parser;
use cli::{Cli, OutputFormat};
use commands::{execute, route, Outcome, Settings};
use inputs::Inputs;
use manin::format::FORMAT_DOC;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

pub use commands::DISPATCH;

/// Output of one invocation: exit status, stdout and stderr.
pub struct Invocation {
    pub status: u8,
    pub stdout: String,
    pub stderr: String,
}

fn out_path(base: &Path, size: Option<usize>) -> PathBuf {
    let Some(m) = size else {
        return base.to_path_buf();
    };
    let stem = base.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match base.extension() {
        Some(ext) => format!("{stem}_m{m}.{}", ext.to_string_lossy()),
        None => format!("{stem}_m{m}"),
    };
    base.with_file_name(name)
}

fn render(cli: &Cli, outcome: &Outcome) -> Result<String> {
    Ok(match cli.format {
        OutputFormat::Text => outcome.report.to_text(),
        OutputFormat::Json => serde_json::to_string_pretty(&outcome.report)? + "\n",
    })
}

fn run_parsed(cli: &Cli) -> Result<Outcome> {
    let Some(cmd) = &cli.command else {
        anyhow::bail!("no command given; see --help");
    };
    let inputs = Inputs::load(cli.field.as_deref(), cli.doc.as_deref())?;
    let settings = Settings {
        max_degree: cli.max_degree,
        seed: cli.seed,
    };
    let outcome = match execute(cmd, &inputs, &settings) {
        Ok(o) => o,
        Err(e) => match e.downcast_ref::<manin::Error>().and_then(|m| commands::failure_report(route(cmd), m)) {
            Some(report) => Outcome { report, bundles: Vec::new() },
            None => return Err(e),
        },
    };
    if let Some(base) = &cli.out {
        let many = outcome.bundles.len() > 1;
        for (size, doc) in &outcome.bundles {
            doc.save(&out_path(base, size.filter(|_| many)))?;
        }
    }
    Ok(outcome)
}

/// Parses and runs one command line without touching the process streams.
pub fn invoke<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if status == 0 {
                Invocation { status, stdout: text, stderr: String::new() }
            } else {
                Invocation { status, stdout: String::new(), stderr: text }
            };
        }
    };
    if cli.help_format {
        return Invocation {
            status: 0,
            stdout: FORMAT_DOC.to_string(),
            stderr: String::new(),
        };
    }
    let result = run_parsed(&cli).and_then(|o| Ok((o.report.pass, render(&cli, &o)?)));
    match result {
        Ok((pass, stdout)) => Invocation {
            status: if pass { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        },
        Err(e) => Invocation {
            status: 2,
            stdout: String::new(),
            stderr: format!("error: {e:#}\n"),
        },
    }
}
