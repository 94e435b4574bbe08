//! `csg`: evaluate expressions, run axiom suites, emit nerve simplices and
//! lift horns.
//!
//! Exit codes: 0 on success, 1 when a counterexample or an incompatible horn
//! is found, 2 on usage and parse errors.

mod expr;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use csg_core::barcx::{FiniteMonoid, MonoidSpec};
use csg_core::groupoid::{NerveSimplex, NerveSkeleton, SimplexRecord};
use csg_core::kan::{lift_horn, HornSpec};
use csg_core::random::{random_simplex, rng, Sample};
use csg_core::suites::{run_suite, Instance, Suite, SuiteParams};
use csg_core::{BraidWord, Perm, SimplicialSection};
use rand::Rng;
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "csg",
    version,
    about = "Crossed simplicial groups: symmetric and braid instances"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum NerveFormat {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression such as `circ_0([1,0],[1,0])` or `mul(inv(s1@1), s1@1)`.
    Eval {
        expression: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run an axiom suite.
    Check {
        /// One of the suite names, e.g. crossed, lemma-a1, bar.
        suite: String,
        #[arg(long, default_value = "symm", value_parser = parse_instance)]
        instance: Instance,
        #[arg(long, default_value_t = 3)]
        max_level: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Upper bound on random braid word length.
        #[arg(long, default_value_t = 12)]
        length: usize,
        /// Monoid description for the bar suite (JSON).
        #[arg(long)]
        monoid: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Emit random nerve simplices of the action groupoid with their faces,
    /// degeneracies and quotient images.
    Nerve {
        #[arg(long, default_value = "symm", value_parser = parse_instance)]
        instance: Instance,
        #[arg(long, default_value_t = 2)]
        level: usize,
        /// Largest simplex dimension.
        #[arg(long, default_value_t = 2)]
        dimension: usize,
        #[arg(long, default_value_t = 3)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        length: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: NerveFormat,
    },
    /// Lift a horn read from a JSON file.
    KanLift {
        horn: PathBuf,
        /// Used when the file does not name an instance.
        #[arg(long, default_value = "braid", value_parser = parse_instance)]
        instance: Instance,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn parse_instance(s: &str) -> Result<Instance, String> {
    s.parse().map_err(|e: csg_core::CsgError| e.to_string())
}

const FOUND: u8 = 1;
const USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    let code = match cli.command {
        Command::Eval { expression, format } => eval(&expression, format),
        Command::Check {
            suite,
            instance,
            max_level,
            trials,
            seed,
            length,
            monoid,
            format,
        } => {
            let params = SuiteParams {
                max_level,
                trials,
                seed,
                length,
            };
            check(&suite, instance, &params, monoid.as_deref(), format)
        }
        Command::Nerve {
            instance,
            level,
            dimension,
            count,
            seed,
            length,
            format,
        } => {
            let args = NerveArgs {
                level,
                dimension,
                count,
                seed,
                length,
            };
            match instance {
                Instance::Symm => nerve::<Perm>(&args, format),
                Instance::Braid => nerve::<BraidWord>(&args, format),
            }
        }
        Command::KanLift {
            horn,
            instance,
            format,
        } => kan_lift(&horn, instance, format),
    };
    ExitCode::from(code)
}

fn eval(source: &str, format: Format) -> u8 {
    let described = expr::evaluate(source)
        .map_err(|e| e.render(source))
        .and_then(|v| v.describe().map_err(|e| format!("{source}\n{e}")));
    match described {
        Ok(result) => {
            match format {
                Format::Text => print!("{}", result.to_text()),
                Format::Json => println!("{}", to_json(&result)),
            }
            0
        }
        Err(message) => {
            eprintln!("{message}");
            USAGE
        }
    }
}

fn check(
    suite: &str,
    instance: Instance,
    params: &SuiteParams,
    monoid: Option<&Path>,
    format: Format,
) -> u8 {
    let suite: Suite = match suite.parse() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            return USAGE;
        }
    };
    let monoid = match monoid.map(read_monoid).transpose() {
        Ok(m) => m,
        Err(e) => {
            eprintln!("{e}");
            return USAGE;
        }
    };
    let report = run_suite(suite, instance, params, monoid.as_ref());
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    if report.passed() {
        0
    } else {
        FOUND
    }
}

fn read_monoid(path: &Path) -> Result<FiniteMonoid, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let spec: MonoidSpec =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    FiniteMonoid::from_spec(&spec).map_err(|e| format!("{}: {e}", path.display()))
}

struct NerveArgs {
    level: usize,
    dimension: usize,
    count: usize,
    seed: u64,
    length: usize,
}

#[derive(Serialize)]
struct SimplexOperators {
    simplex: SimplexRecord,
    faces: Vec<SimplexRecord>,
    degeneracies: Vec<SimplexRecord>,
}

#[derive(Serialize)]
struct NerveOutput {
    seed: u64,
    skeleton: NerveSkeleton,
    operators: Vec<SimplexOperators>,
}

fn nerve<G: Sample>(args: &NerveArgs, format: NerveFormat) -> u8 {
    let mut r = rng(args.seed);
    let simplices: Vec<NerveSimplex<G>> = (0..args.count)
        .map(|_| {
            let m = r.gen_range(0..=args.dimension);
            random_simplex(&mut r, args.level, m, args.length)
        })
        .collect();
    let skeleton = NerveSkeleton::from_simplices(args.level, &simplices);
    match format {
        NerveFormat::Dot => print!("{}", skeleton.to_dot()),
        NerveFormat::Json => {
            let operators = simplices
                .iter()
                .map(|s| {
                    let m = s.dimension();
                    SimplexOperators {
                        simplex: SimplexRecord::of(s),
                        faces: (0..=m)
                            .filter(|_| m > 0)
                            .map(|i| SimplexRecord::of(&s.face(i).expect("index in range")))
                            .collect(),
                        degeneracies: (0..=m)
                            .map(|i| SimplexRecord::of(&s.degeneracy(i).expect("index in range")))
                            .collect(),
                    }
                })
                .collect();
            let out = NerveOutput {
                seed: args.seed,
                skeleton,
                operators,
            };
            println!("{}", to_json(&out));
        }
    }
    0
}

#[derive(Serialize)]
struct FaceCheck {
    index: usize,
    expected: String,
    actual: String,
    holds: bool,
}

#[derive(Serialize)]
struct LiftTranscript {
    instance: String,
    level: usize,
    k: usize,
    lift: String,
    faces: Vec<FaceCheck>,
    base: String,
    projection: String,
    projection_holds: bool,
}

fn kan_lift(path: &Path, default: Instance, format: Format) -> u8 {
    let spec = fs::read_to_string(path)
        .map_err(|e| e.to_string())
        .and_then(|text| serde_json::from_str::<HornSpec>(&text).map_err(|e| e.to_string()));
    let spec = match spec {
        Ok(spec) => spec,
        Err(e) => {
            eprintln!("{}: {e}", path.display());
            return USAGE;
        }
    };
    let instance = match spec.instance.as_deref().map(parse_instance).transpose() {
        Ok(i) => i.unwrap_or(default),
        Err(e) => {
            eprintln!("{}: {e}", path.display());
            return USAGE;
        }
    };
    match instance {
        Instance::Symm => lift_spec::<Perm>(&spec, format),
        Instance::Braid => lift_spec::<BraidWord>(&spec, format),
    }
}

fn lift_spec<G: SimplicialSection>(spec: &HornSpec, format: Format) -> u8 {
    let horn = match spec.to_horn::<G>() {
        Ok(h) => h,
        Err(e @ csg_core::CsgError::IncompatibleHorn(_)) => {
            eprintln!("{e}");
            return FOUND;
        }
        Err(e) => {
            eprintln!("{e}");
            return USAGE;
        }
    };
    let phi = match lift_horn(&horn) {
        Ok(phi) => phi,
        Err(e) => {
            eprintln!("{e}");
            return FOUND;
        }
    };
    let faces: Vec<FaceCheck> = horn
        .faces
        .iter()
        .map(|(&index, y)| {
            let actual = phi.face(index).expect("index in range");
            FaceCheck {
                index,
                expected: y.to_string(),
                holds: actual.group_eq(y),
                actual: actual.to_string(),
            }
        })
        .collect();
    let projection = phi.underlying_perm();
    let transcript = LiftTranscript {
        instance: G::INSTANCE.to_string(),
        level: horn.level,
        k: horn.missing,
        lift: phi.to_string(),
        projection_holds: projection == horn.base,
        projection: projection.to_string(),
        base: horn.base.to_string(),
        faces,
    };
    let ok = transcript.projection_holds && transcript.faces.iter().all(|f| f.holds);
    match format {
        Format::Json => println!("{}", to_json(&transcript)),
        Format::Text => {
            println!("Φ = {}", transcript.lift);
            for f in &transcript.faces {
                println!(
                    "d_{} Φ = {}  expected {}  {}",
                    f.index,
                    f.actual,
                    f.expected,
                    if f.holds { "ok" } else { "FAILED" }
                );
            }
            println!(
                "π Φ = {}  base {}  {}",
                transcript.projection,
                transcript.base,
                if transcript.projection_holds {
                    "ok"
                } else {
                    "FAILED"
                }
            );
        }
    }
    if ok {
        0
    } else {
        FOUND
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}
