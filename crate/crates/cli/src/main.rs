mod args;
mod commands;
mod document;
mod error;
mod render;
mod report;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use error::{CliError, EXIT_CHECK_FAILED};

fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("HYPWIDTH_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .map_err(|_| CliError::input(format!("HYPWIDTH_THREADS must be a nonnegative integer, got {v:?}")))?;
    if n > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::input(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32, CliError> {
    configure_threads()?;
    let g = &cli.global;
    if !(g.tol > 0.0) || !g.tol.is_finite() {
        return Err(CliError::input(format!("--tol must be positive, got {}", g.tol)));
    }
    let report = match &cli.command {
        Command::Make(a) => {
            let doc = commands::make(g, a)?;
            report::emit(&doc, a.out.as_deref(), g.json_indent)?;
            return Ok(0);
        }
        Command::Render(a) => {
            let p = commands::prepare(document::load_body(&a.body.body)?, a.body.discretize, g.tol, false)?;
            let mut search = hypwidth::metrology::SearchOptions::default().with_refine_iters(g.refine_iters);
            search.grid = g.grid;
            let svg = render::render(
                &p,
                &render::RenderOptions {
                    show_hyperplane: a.show_hyperplane,
                    show_width_segment: a.show_width_segment,
                    search,
                },
            )?;
            std::fs::write(&a.out, svg)
                .map_err(|e| CliError::input(format!("writing {}: {e}", a.out.display())))?;
            return Ok(0);
        }
        Command::Measure(a) => (commands::measure(g, a)?, a.out.as_deref()),
        Command::Check(a) => (commands::check(g, a)?, a.out.as_deref()),
        Command::Paper(a) => (commands::paper(g, a)?, a.out.as_deref()),
    };
    let (doc, out) = report;
    report::emit(&doc, out, g.json_indent)?;
    Ok(if doc.passed == Some(false) { EXIT_CHECK_FAILED } else { 0 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
