//! Command-line front end: replay a pointer trace over a scene document, or
//! compare two documents.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use mover_core::scene::{load, parse_trace, save};

#[derive(Parser)]
#[command(name = "mover", version, about = "Replay pointer traces over scene documents")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Feed a trace through a scene and write the resulting document.
    Replay {
        #[arg(long)]
        scene: PathBuf,
        #[arg(long)]
        trace: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Gesture log: effective points, accepted ticks, warps, clicks.
        #[arg(long)]
        log: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Outline every cover node in the SVG.
        #[arg(long, requires = "svg")]
        covers: bool,
    },
    /// Exit 0 when two documents are byte-identical.
    Diff {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn replay(
    scene: &Path,
    trace: &Path,
    out: &Path,
    log: Option<&Path>,
    svg: Option<&Path>,
    covers: bool,
) -> Result<(), String> {
    let mut s = load(&read(scene)?).map_err(|e| format!("{}: {e}", scene.display()))?;
    let events = parse_trace(&read(trace)?).map_err(|e| format!("{}: {e}", trace.display()))?;
    let gestures = s.replay(&events);
    write(out, &save(&s).map_err(|e| e.to_string())?)?;
    if let Some(p) = log {
        write(p, &gestures.to_string())?;
    }
    if let Some(p) = svg {
        write(p, &s.export_svg(covers))?;
    }
    Ok(())
}

fn diff(a: &Path, b: &Path) -> Result<bool, String> {
    let ta = read(a)?;
    let tb = read(b)?;
    if ta == tb {
        return Ok(true);
    }
    let mut la = ta.lines();
    let mut lb = tb.lines();
    let mut n = 1;
    loop {
        match (la.next(), lb.next()) {
            (Some(x), Some(y)) if x == y => n += 1,
            (None, None) => {
                eprintln!("documents differ only in line endings");
                return Ok(false);
            }
            (x, y) => {
                eprintln!("documents differ at line {n}");
                eprintln!("< {}", x.unwrap_or("<end of file>"));
                eprintln!("> {}", y.unwrap_or("<end of file>"));
                return Ok(false);
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Cmd::Replay { scene, trace, out, log, svg, covers } => {
            replay(&scene, &trace, &out, log.as_deref(), svg.as_deref(), covers).map(|()| true)
        }
        Cmd::Diff { a, b } => diff(&a, &b),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
