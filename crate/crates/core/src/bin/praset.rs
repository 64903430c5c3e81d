use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use praset::principles::{check_all, PrincipleReport};
use praset::random::{corpus, RandomConfig};
use praset::report::{explain, to_dot, RunReport};
use praset::{analyze, parse_program, Analysis, Error, Options, PrioritizedProgram};

#[derive(Parser)]
#[command(name = "praset", version, about = "Preferred answer sets of prioritized extended logic programs")]
struct Cli {
    #[command(flatten)]
    engine: EngineArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct EngineArgs {
    /// Maximum number of argumentation structures per program.
    #[arg(long, global = true, env = "PRASET_LIMIT", default_value_t = praset::structures::DEFAULT_STRUCTURE_LIMIT)]
    limit: usize,
    /// Drop Q3's requirement that the joined structure is not attacked.
    #[arg(long, global = true)]
    lenient_q3: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List answer sets and preferred answer sets.
    Solve {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Also print the default literals of each answer set.
        #[arg(long)]
        total: bool,
        #[arg(long)]
        timing: bool,
    },
    /// Show derivations of one answer set and what blocks them.
    Explain {
        file: PathBuf,
        /// 1-based index from `solve`, or literals such as "a,-b".
        #[arg(long = "as", value_name = "SELECTOR", allow_hyphen_values = true)]
        selector: String,
        /// Write the attack graph in Graphviz format.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
    },
    /// Check the principles on a program, a directory or random programs.
    Check {
        #[arg(required_unless_present_any = ["corpus", "random"], conflicts_with_all = ["corpus", "random"])]
        file: Option<PathBuf>,
        #[arg(long, value_name = "DIR", conflicts_with = "random")]
        corpus: Option<PathBuf>,
        #[arg(long, value_name = "N")]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        atoms: usize,
        #[arg(long, default_value_t = 10)]
        rules: usize,
        /// Where random programs and witness files are written.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Engine(Error),
    Io(String),
    Principles,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Failure {
    Failure::Io(format!("{}: {e}", path.display()))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        e if e.is_input_error() => 2,
        Error::ResourceLimit { .. } | Error::TooManyAtoms(_) => 3,
        _ => 1,
    }
}

fn read_program(path: &Path) -> Result<PrioritizedProgram, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    parse_program(&text).map_err(Failure::Engine)
}

fn label(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| path.display().to_string())
}

fn select(a: &Analysis, selector: &str) -> Result<usize, Error> {
    let n = a.verdicts.len();
    if let Ok(i) = selector.trim().parse::<usize>() {
        return if (1..=n).contains(&i) { Ok(i - 1) } else { Err(Error::UnknownAnswerSet(selector.to_string())) };
    }
    let mut wanted: Vec<String> =
        selector.split(',').map(|s| s.trim().replace('¬', "-")).filter(|s| !s.is_empty()).collect();
    wanted.sort();
    wanted.dedup();
    a.verdicts
        .iter()
        .position(|v| {
            let mut names = v.answer_set.names();
            names.sort();
            names == wanted
        })
        .ok_or_else(|| Error::UnknownAnswerSet(selector.to_string()))
}

fn solve(engine: &Options, file: &Path, json: bool, total: bool, timing: bool) -> Result<(), Failure> {
    let start = Instant::now();
    let program = read_program(file)?;
    let a = analyze(&program, engine)?;
    let mut report = RunReport::new(&label(file), &a, total);
    if timing {
        report.timing_ms = Some(start.elapsed().as_secs_f64() * 1000.0);
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        print!("{}", report.to_text());
    }
    Ok(())
}

fn run_explain(engine: &Options, file: &Path, selector: &str, dot: Option<&Path>) -> Result<(), Failure> {
    let program = read_program(file)?;
    let a = analyze(&program, engine)?;
    let index = select(&a, selector)?;
    print!("{}", explain(&a, index));
    if let Some(path) = dot {
        fs::write(path, to_dot(&a, Some(index))).map_err(|e| io_err(path, e))?;
    }
    Ok(())
}

enum Outcome {
    Reports(Vec<PrincipleReport>),
    Error(Error),
}

fn print_outcome(id: &str, outcome: &Outcome, json: bool) {
    match outcome {
        Outcome::Reports(reports) => {
            for r in reports {
                if json {
                    println!("{}", serde_json::to_string(r).expect("report serializes"));
                } else {
                    let status = match (&r.witness, r.vacuous) {
                        (Some(w), _) => format!("fail: {}", w.detail),
                        (None, true) => "pass (vacuous)".to_string(),
                        (None, false) => "pass".to_string(),
                    };
                    println!("{id}\t{}\t{status}", r.principle);
                }
            }
        }
        Outcome::Error(e) => {
            if json {
                let line = serde_json::json!({ "program": id, "error": e.to_string() });
                println!("{line}");
            } else {
                println!("{id}\terror\t{e}");
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn check(
    engine: &Options,
    file: Option<&Path>,
    corpus_dir: Option<&Path>,
    random: Option<usize>,
    seed: u64,
    cfg: RandomConfig,
    out: Option<&Path>,
    json: bool,
) -> Result<(), Failure> {
    let programs: Vec<(String, PrioritizedProgram)> = if let Some(n) = random {
        let programs = corpus(seed, n, &cfg);
        let dir = out.map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from(format!("praset-random-{seed}")));
        fs::create_dir_all(&dir).map_err(|e| io_err(&dir, e))?;
        for (id, p) in &programs {
            let path = dir.join(format!("{id}.lp"));
            fs::write(&path, p.render()).map_err(|e| io_err(&path, e))?;
        }
        programs
    } else if let Some(dir) = corpus_dir {
        let mut paths: Vec<PathBuf> = fs::read_dir(dir)
            .map_err(|e| io_err(dir, e))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "lp"))
            .collect();
        paths.sort();
        paths.iter().map(|p| Ok((label(p), read_program(p)?))).collect::<Result<_, Failure>>()?
    } else {
        let path = file.expect("clap requires a source");
        vec![(label(path), read_program(path)?)]
    };

    let outcomes: Vec<Outcome> = programs
        .par_iter()
        .map(|(id, p)| match analyze(p, engine) {
            Ok(a) => Outcome::Reports(check_all(id, &a)),
            Err(e) => Outcome::Error(e),
        })
        .collect();

    let mut failed = false;
    for ((id, program), outcome) in programs.iter().zip(&outcomes) {
        print_outcome(id, outcome, json);
        match outcome {
            Outcome::Reports(reports) => {
                for r in reports.iter().filter(|r| !r.passed()) {
                    failed = true;
                    let dir = out.unwrap_or(Path::new("."));
                    fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
                    let path = dir.join(format!("{id}.{}.witness.json", r.principle));
                    let body = serde_json::json!({ "program": program.render(), "report": r });
                    fs::write(&path, serde_json::to_string_pretty(&body).expect("witness serializes"))
                        .map_err(|e| io_err(&path, e))?;
                }
            }
            Outcome::Error(_) => {}
        }
    }
    let worst = outcomes
        .iter()
        .filter_map(|o| match o {
            Outcome::Error(e) => Some(e),
            Outcome::Reports(_) => None,
        })
        .max_by_key(|e| exit_code(e));
    match worst {
        Some(e) => Err(Failure::Engine(e.clone())),
        None if failed => Err(Failure::Principles),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let engine = Options { limit: cli.engine.limit, strict_q3: !cli.engine.lenient_q3, ..Options::default() };
    let result = match &cli.command {
        Command::Solve { file, json, total, timing } => solve(&engine, file, *json, *total, *timing),
        Command::Explain { file, selector, dot } => run_explain(&engine, file, selector, dot.as_deref()),
        Command::Check { file, corpus: dir, random, seed, atoms, rules, out, json } => {
            let cfg = RandomConfig { atoms: *atoms, max_rules: *rules, ..RandomConfig::default() };
            check(&engine, file.as_deref(), dir.as_deref(), *random, *seed, cfg, out.as_deref(), *json)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Engine(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Principles) => {
            eprintln!("principle check failed; witness files written");
            ExitCode::from(4)
        }
    }
}
