//! `equable`: classify, verify and draw equable triangles on the Eisenstein
//! lattice.
//!
//! Exit codes: 0 on success (and route agreement), 1 on usage or I/O errors,
//! 2 when two verification routes disagree.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use eisenstein_equable::diophantine::DEFAULT_BRUTEFORCE_BOUND;
use eisenstein_equable::render::{self, RenderOptions, DEFAULT_RANGE};
use eisenstein_equable::search::{self, DEFAULT_MAX_NORM};
use eisenstein_equable::{report, EisensteinInt, LatticeTriangle, SearchWindow, Sqrt3Length};
use serde::Serialize;

const EXIT_USAGE: u8 = 1;
const EXIT_DISAGREEMENT: u8 = 2;

#[derive(Parser)]
#[command(name = "equable", version, about = "Equable triangles on the Eisenstein lattice")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run the Diophantine route and the lattice scan and compare them.
    Classify {
        /// Bound on norm(A-C) and norm(B-C) for the lattice scan.
        #[arg(long, default_value_t = DEFAULT_MAX_NORM)]
        window: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check one triangle given by ω-coordinates "c1,cw" of A, B and C.
    Verify {
        #[arg(allow_hyphen_values = true)]
        a: EisensteinInt,
        #[arg(allow_hyphen_values = true)]
        b: EisensteinInt,
        #[arg(allow_hyphen_values = true)]
        c: EisensteinInt,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Solve 3xyz = 4(x+y+z) and cross-check against a brute-force scan.
    Enumerate {
        /// Box for the brute-force scan of 3uvw = 16(u+v+w).
        #[arg(long, default_value_t = DEFAULT_BRUTEFORCE_BOUND)]
        bound: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List lattice triangles (A, B, 0) with sides na√3, nb√3, nc√3.
    Realize {
        na: u64,
        nb: u64,
        nc: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Draw both equable triangles over the lattice as SVG.
    Render {
        #[arg(long, default_value = "equable.svg")]
        out: PathBuf,
        #[arg(long)]
        no_grid: bool,
        #[arg(long, default_value_t = DEFAULT_RANGE)]
        range: i64,
    },
}

fn emit<T: Serialize + std::fmt::Display>(value: &T, format: Format) {
    let text = match format {
        Format::Text => value.to_string(),
        Format::Json => serde_json::to_string_pretty(value).expect("reports serialize"),
    };
    // a closed pipe downstream is not an error worth reporting
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

#[derive(Serialize)]
struct RealizeOutput {
    sides: [u64; 3],
    triangles: Vec<LatticeTriangle>,
}

impl std::fmt::Display for RealizeOutput {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [a, b, c] = self.sides;
        write!(f, "{} triangle(s) with sides {a}√3, {b}√3, {c}√3", self.triangles.len())?;
        for t in &self.triangles {
            write!(f, "\n  {t}  D = {}", t.area_quanta())?;
        }
        Ok(())
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Classify { window, format } => {
            let window = SearchWindow::new(window).map_err(|e| e.to_string())?;
            let r = report::classify(window);
            emit(&r, format);
            Ok(if r.agreement { ExitCode::SUCCESS } else { ExitCode::from(EXIT_DISAGREEMENT) })
        }
        Command::Verify { a, b, c, format } => {
            emit(&report::verify(LatticeTriangle::new(a, b, c)), format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { bound, format } => {
            let r = report::enumerate(bound);
            emit(&r, format);
            Ok(if r.doubling_matches && r.all_even {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_DISAGREEMENT)
            })
        }
        Command::Realize { na, nb, nc, format } => {
            let sides = [na, nb, nc]
                .map(Sqrt3Length::new)
                .into_iter()
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            let sides: [Sqrt3Length; 3] = sides.try_into().expect("three sides");
            let out = RealizeOutput {
                sides: [na, nb, nc],
                triangles: search::realize_sides(sides),
            };
            emit(&out, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Render { out, no_grid, range } => {
            let svg = render::render_svg(&RenderOptions { grid: !no_grid, range })
                .map_err(|e| e.to_string())?;
            std::fs::write(&out, svg).map_err(|e| format!("cannot write {}: {e}", out.display()))?;
            eprintln!("wrote {}", out.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
