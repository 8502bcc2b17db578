//! Argument parsing and dispatch for the `pappus` binary.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::field::{int, parse_rational, BigRational, FieldTag};
use crate::perm::Perm3;
use crate::render::RenderOptions;
use crate::report::{
    cmd_dual, cmd_lattice, cmd_render, cmd_report, cmd_scan, cmd_verify, AnyScene, Grid, LatticeChoice, SceneFile,
    Theorem,
};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "pappus",
    version,
    about = "Exact checks and figures for the Pappus (9_3) arrangement"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SceneArgs {
    /// JSON scene file; overrides --field, --a and --b.
    #[arg(long, global = true)]
    pub scene: Option<PathBuf>,
    #[arg(long, global = true, default_value = "rational")]
    pub field: FieldTag,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Reject parameters at which two Pappus lines coincide.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    All,
    Pappus,
    Roundtrip,
    Lattice,
    Incidence,
    SIncidence,
    Super,
}

impl TheoremArg {
    fn selector(self) -> Option<Theorem> {
        match self {
            TheoremArg::All => None,
            TheoremArg::Pappus => Some(Theorem::Pappus),
            TheoremArg::Roundtrip => Some(Theorem::Roundtrip),
            TheoremArg::Lattice => Some(Theorem::Lattice),
            TheoremArg::Incidence => Some(Theorem::Incidence),
            TheoremArg::SIncidence => Some(Theorem::SIncidence),
            TheoremArg::Super => Some(Theorem::Super),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LatticeArg {
    Joins,
    Configuration,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run verification suites and print a JSON verdict report.
    Verify {
        #[command(flatten)]
        scene: SceneArgs,
        #[arg(long, value_enum, default_value = "all")]
        theorem: TheoremArg,
        /// Record elapsed time per suite.
        #[arg(long)]
        timing: bool,
    },
    /// Draw a rational scene as SVG.
    Render {
        #[command(flatten)]
        scene: SceneArgs,
        #[arg(long, default_value = "id")]
        sigma: Perm3,
        /// Drop points at infinity with a warning instead of failing.
        #[arg(long)]
        allow_infinite: bool,
        /// Chart form `p,q,r`: points are drawn at (x, y) / (p x + q y + r z).
        #[arg(long, value_parser = parse_chart, allow_hyphen_values = true)]
        chart: Option<[i64; 3]>,
    },
    /// Tabulate lines through S, super verdicts and t-vectors over a grid.
    Scan {
        #[command(flatten)]
        scene: SceneArgs,
        /// Comma-separated values used on both axes.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        values: Option<Vec<String>>,
        /// `start:stop:step`, inclusive, used on both axes.
        #[arg(long, allow_hyphen_values = true)]
        range: Option<String>,
        /// Number of random pairs.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Intersection lattice as JSON, or the incidence matrix as CSV.
    Lattice {
        #[command(flatten)]
        scene: SceneArgs,
        #[arg(long, value_enum, default_value = "joins")]
        which: LatticeArg,
        #[arg(long, default_value = "id")]
        sigma: Perm3,
        #[arg(long)]
        csv: bool,
    },
    /// Dualize, reconstruct and dualize back.
    Dual {
        #[command(flatten)]
        scene: SceneArgs,
    },
    /// Every applicable suite plus seeded random checks.
    Report {
        #[command(flatten)]
        scene: SceneArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        samples: usize,
        #[arg(long)]
        timing: bool,
    },
}

impl SceneArgs {
    fn file(&self) -> Result<SceneFile> {
        match &self.scene {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                SceneFile::from_json(&text)
            }
            None => Ok(SceneFile {
                field: self.field,
                a: self.a.clone(),
                b: self.b.clone(),
                points: None,
                render: None,
            }),
        }
    }

    fn load(&self) -> Result<(AnyScene, SceneFile)> {
        let file = self.file()?;
        Ok((AnyScene::from_file(&file, self.strict)?, file))
    }
}

fn parse_chart(text: &str) -> std::result::Result<[i64; 3], String> {
    let parts: Vec<i64> = text
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}")))
        .collect::<std::result::Result<_, _>>()?;
    parts
        .try_into()
        .map_err(|_| "chart needs three integers p,q,r".to_string())
}

fn parse_range(text: &str) -> Result<Vec<BigRational>> {
    let parts: Vec<&str> = text.split(':').collect();
    let [start, stop, step] = parts.as_slice() else {
        return Err(Error::Parse(format!("range `{text}` is not start:stop:step")));
    };
    let (start, stop, step) = (parse_rational(start)?, parse_rational(stop)?, parse_rational(step)?);
    if step <= int(0) {
        return Err(Error::Parse("range step must be positive".into()));
    }
    let mut out = Vec::new();
    let mut v = start;
    while v <= stop {
        out.push(v.clone());
        v += &step;
        if out.len() > 10_000 {
            return Err(Error::Parse("range has more than 10000 values".into()));
        }
    }
    Ok(out)
}

/// Output text and whether every check passed.
fn run(cmd: &Command) -> Result<(String, bool)> {
    Ok(match cmd {
        Command::Verify { scene, theorem, timing } => {
            let (s, _) = scene.load()?;
            let r = cmd_verify(&s, theorem.selector(), *timing)?;
            (r.to_json(), r.pass)
        }
        Command::Render {
            scene,
            sigma,
            allow_infinite,
            chart,
        } => {
            let (s, file) = scene.load()?;
            let mut opts = RenderOptions {
                sigma: *sigma,
                allow_infinite: *allow_infinite,
                ..Default::default()
            };
            if let Some(r) = &file.render {
                r.apply(&mut opts);
            }
            if chart.is_some() {
                opts.chart = *chart;
            }
            let rendered = cmd_render(&s, &opts)?;
            for w in &rendered.warnings {
                eprintln!("warning: {w}");
            }
            (rendered.svg, true)
        }
        Command::Scan {
            values,
            range,
            random,
            seed,
            ..
        } => {
            let grid = match (values, range, random) {
                (Some(v), None, None) => Grid::Values(
                    v.iter()
                        .map(|t| parse_rational(t))
                        .collect::<std::result::Result<_, _>>()?,
                ),
                (None, Some(r), None) => Grid::Values(parse_range(r)?),
                (None, None, Some(n)) => Grid::Random { count: *n, seed: *seed },
                _ => return Err(Error::Parse("give exactly one of --values, --range, --random".into())),
            };
            (cmd_scan(&grid)?, true)
        }
        Command::Lattice {
            scene,
            which,
            sigma,
            csv,
        } => {
            let (s, _) = scene.load()?;
            let which = match which {
                LatticeArg::Joins => LatticeChoice::Joins,
                LatticeArg::Configuration => LatticeChoice::Configuration,
            };
            (cmd_lattice(&s, which, *sigma, *csv)?, true)
        }
        Command::Dual { scene } => {
            let (s, _) = scene.load()?;
            let r = cmd_dual(&s)?;
            let pass = r.on_la.len() == 3 && r.on_lb.len() == 3 && r.single_parameter != Some(false);
            (r.to_json(), pass)
        }
        Command::Report {
            scene,
            seed,
            samples,
            timing,
        } => {
            let (s, _) = scene.load()?;
            let r = cmd_report(&s, *seed, *samples, *timing)?;
            (r.to_json(), r.pass)
        }
    })
}

fn scene_args(cmd: &Command) -> &SceneArgs {
    match cmd {
        Command::Verify { scene, .. }
        | Command::Render { scene, .. }
        | Command::Scan { scene, .. }
        | Command::Lattice { scene, .. }
        | Command::Dual { scene }
        | Command::Report { scene, .. } => scene,
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

/// Parse `args`, run the command and map the result to an exit code.
pub fn main_with<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS });
        }
    };
    match run(&cli.command) {
        Ok((text, pass)) => {
            if let Err(e) = emit(&text, scene_args(&cli.command).out.as_ref()) {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
            ExitCode::from(if pass { EXIT_PASS } else { EXIT_FAIL })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::TheoremViolation(_) | Error::CountingIdentity { .. } | Error::LandingFailure(_) => EXIT_FAIL,
                _ => EXIT_USAGE,
            })
        }
    }
}
