use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use resonance_atlas::cli::{run, Cli, Format};
use resonance_atlas::{json, render};

fn init_threads() {
    let Ok(v) = std::env::var("RESONANCE_ATLAS_THREADS") else { return };
    match v.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            // Fails only if a pool already exists, which cannot happen this early.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
        _ => eprintln!("warning: ignoring RESONANCE_ATLAS_THREADS={v:?}"),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    init_threads();
    let output = cli.command.output().clone();
    let (value, code) = match run(&cli.command) {
        Ok(s) => (s.value, if s.checks_failed { 3 } else { 0 }),
        Err(f) => {
            if output.format == Format::Table {
                eprintln!("error: {}", f.to_json()["error"]["message"].as_str().unwrap_or_default());
                return ExitCode::from(f.exit_code() as u8);
            }
            (f.to_json(), f.exit_code())
        }
    };
    let text = match output.format {
        Format::Json => json::emit(&value),
        Format::Table => render::table(&value),
    };
    let written = match &output.out {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code as u8)
}
