use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use latclass::construct::{assemble_batch, choices, Assembly};
use latclass::format::{
    catalog_jsonl, census_csv, growth_csv, to_json_line, witness_csv, ConstructionReport,
    PolygonReport, PolytopeJson,
};
use latclass::geometry::polytope::{lattice_count_d, DEFAULT_CELL_BUDGET};
use latclass::geometry::{
    build_m_tau, lemma2_polygon, pdwk_vertices, pdwk_volume, theorem4_witnesses,
    CensusMode, CensusResult, Error as CoreError, MTauMode,
};
use latclass::output::write_atomic;
use latclass::{Failure, Runner};

#[derive(Parser)]
#[command(name = "latclass", version, about = "Classify convex lattice polygons up to unimodular equivalence")]
struct Cli {
    /// Worker threads.
    #[arg(long, global = true, default_value_t = default_jobs())]
    jobs: usize,
    /// Upper limit on work units (census closure tests, polytope cells).
    #[arg(long, global = true, env = "LATTICE_CENSUS_BUDGET")]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Area,
    Cardinality,
}

impl From<Mode> for CensusMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Area => CensusMode::Area,
            Mode::Cardinality => CensusMode::Cardinality,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Lemma2,
    Mtau,
    AssembleSym,
    AssembleCard,
    Pdwk,
    Theorem4,
}

#[derive(Clone, Copy, ValueEnum)]
enum Shape {
    Quarter,
    Half,
}

#[derive(Subcommand)]
enum Command {
    /// Count classes for each parameter in a range.
    Census {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        min: i64,
        #[arg(long)]
        max: i64,
        /// Keep only polygons symmetric about a lattice point.
        #[arg(long)]
        symmetric: bool,
        /// CSV output; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write every class as JSON lines.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Build one of the explicit polygon or polytope families.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        ell: Option<i64>,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        tau2: Option<i64>,
        /// Target doubled area.
        #[arg(long)]
        m: Option<i64>,
        /// Target lattice-point count.
        #[arg(long)]
        w: Option<i64>,
        #[arg(long)]
        d: Option<i64>,
        #[arg(long, value_enum)]
        mode: Option<Shape>,
        /// Choice vector such as `1,2,1`.
        #[arg(long)]
        choice: Option<String>,
        /// Build every choice vector, however many.
        #[arg(long)]
        all: bool,
        /// Number of witnesses.
        #[arg(long, default_value_t = 10)]
        n: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Class counts with log2 growth columns.
    Growth {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        min: Option<i64>,
        #[arg(long)]
        max: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Every class for a single area or cardinality, as JSON lines.
    Catalog {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long)]
        w: Option<i64>,
        #[arg(long)]
        symmetric: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => write_atomic(path, text.as_bytes()),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| Failure::Io { path: "<stdout>".into(), source }),
    }
}

fn need(value: Option<i64>, flag: &str) -> Result<i64, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--{flag} is required for this family")))
}

fn summary(rows: &[CensusResult]) {
    let name = match rows.first().map(|r| r.mode) {
        Some(CensusMode::Area) => "m",
        _ => "w",
    };
    eprintln!("{name:>6} {:>10}", "classes");
    for r in rows {
        eprintln!("{:>6} {:>10}", r.parameter, r.count());
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let runner = Runner::new(cli.jobs, cli.budget)?;
    match cli.command {
        Command::Census { mode, min, max, symmetric, out, catalog } => {
            let rows = runner.table(mode.into(), min, max, symmetric)?;
            let csv = census_csv(&rows);
            let lines = catalog.as_ref().map(|_| catalog_jsonl(&rows)).transpose()?;
            emit(out.as_deref(), &csv)?;
            if let (Some(path), Some(lines)) = (catalog, lines) {
                write_atomic(&path, lines.as_bytes())?;
            }
            summary(&rows);
        }
        Command::Growth { mode, min, max, out } => {
            let mode: CensusMode = mode.into();
            let min = min.unwrap_or(match mode {
                CensusMode::Area => 1,
                CensusMode::Cardinality => 3,
            });
            let rows = runner.table(mode, min, max, false)?;
            emit(out.as_deref(), &growth_csv(&rows))?;
        }
        Command::Catalog { mode, m, w, symmetric, out } => {
            let param = match mode {
                Mode::Area => need(m, "m")?,
                Mode::Cardinality => need(w, "w")?,
            };
            let rows = runner.table(mode.into(), param, param, symmetric)?;
            emit(out.as_deref(), &catalog_jsonl(&rows)?)?;
            summary(&rows);
        }
        Command::Construct { family, ell, k, tau2, m, w, d, mode, choice, all, n, out } => {
            let text = match family {
                Family::Lemma2 => {
                    let p = lemma2_polygon(need(ell, "ell")?, need(k, "k")?)?;
                    single("lemma2", &p)?
                }
                Family::Mtau => {
                    let shape = match mode {
                        Some(Shape::Half) => MTauMode::Half,
                        Some(Shape::Quarter) | None => MTauMode::Quarter,
                    };
                    single("mtau", &build_m_tau(need(tau2, "tau2")?, shape)?)?
                }
                Family::AssembleSym | Family::AssembleCard => {
                    let (assembly, target) = match family {
                        Family::AssembleSym => (Assembly::Symmetric, need(m, "m")?),
                        _ => (Assembly::Cardinality, need(w, "w")?),
                    };
                    let tau2 = need(tau2, "tau2")?;
                    let cs = choices(assembly, tau2, choice.as_deref(), all)?;
                    let report = assemble_batch(&runner, assembly, tau2, target, &cs)?;
                    eprintln!("{} polygons, {} classes", report.polygons.len(), report.classes);
                    to_json_line(&report)?
                }
                Family::Pdwk => {
                    let (d, w, k) = (need(d, "d")?, need(w, "w")?, need(k, "k")?);
                    let p = pdwk_vertices(d, w, k)?;
                    let volume = pdwk_volume(d, w, k)?;
                    let count = match lattice_count_d(&p, cli.budget.unwrap_or(DEFAULT_CELL_BUDGET)) {
                        Ok(c) => Some(c),
                        Err(CoreError::BudgetExceeded { .. }) => None,
                        Err(e) => return Err(e.into()),
                    };
                    to_json_line(&PolytopeJson::new(&p, volume, count))?
                }
                Family::Theorem4 => {
                    let (d, w) = (need(d, "d")?, need(w, "w")?);
                    let ws = theorem4_witnesses(d, w, n, cli.budget.unwrap_or(DEFAULT_CELL_BUDGET))?;
                    witness_csv(d, w, &ws)
                }
            };
            emit(out.as_deref(), &text)?;
        }
    }
    Ok(())
}

fn single(family: &'static str, p: &latclass::geometry::LatticePolygon) -> Result<String, Failure> {
    to_json_line(&ConstructionReport { family, polygons: vec![PolygonReport::plain(p)], classes: 1 })
}
