//! Command-line front end: construct determined morphisms, decide
//! determination, compute minimal determinators, derive almost split
//! sequences, check posets, and cross-examine everything with the
//! brute-force oracle. Exit codes: 0 success, 1 malformed input,
//! 2 violated mathematical precondition.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use detmor::determined::{
    almost_split_ending_at, check_auslander_claim, construct_determined, determination_check,
    gamma_closure, image_hom, minimal_determinator, DeterminationReport,
};
use detmor::io::{
    read_json, write_json, AlgebraFile, GeneratorsFile, MorphismFile, PosetFile, ReportFile,
    RepresentationFile,
};
use detmor::oracle::{
    enumerate_test_modules, random_representation, refute_determination, DEFAULT_FAMILY_CAP,
    DEFAULT_MORPHISM_CAP,
};
use detmor::quiver::BoundQuiverAlgebra;
use detmor::rep::{right_minimalize, RepMorphism, Representation};

#[derive(Parser)]
#[command(
    name = "detmor",
    version,
    about = "Exact computations with morphisms determined by objects over bound quiver algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct the right minimal right C-determined morphism with a
    /// prescribed image H inside Hom(C, Y)
    Construct {
        #[arg(long)]
        algebra: PathBuf,
        /// representation file for C
        #[arg(long)]
        c: PathBuf,
        /// representation file for Y
        #[arg(long)]
        y: PathBuf,
        /// generators file for H (if not End(C)-closed, a notice is
        /// printed and the closure is used)
        #[arg(long)]
        h: PathBuf,
        /// write the constructed morphism to this file
        #[arg(long)]
        out: Option<PathBuf>,
        /// print the morphism as JSON on stdout
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a morphism is right determined by C
    Check {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        morphism: PathBuf,
        #[arg(long)]
        c: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Compute the minimal determinator of a morphism
    Mindet {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        morphism: PathBuf,
        /// write the summand list to this file
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Minimal right almost split morphism ending at an indecomposable
    Ar {
        #[arg(long)]
        algebra: PathBuf,
        /// representation file for the ending term Z
        #[arg(long)]
        z: PathBuf,
        /// write the morphism to this file
        #[arg(long)]
        out: Option<PathBuf>,
        /// write the sequence as a DOT digraph to this file
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Determination in a finite poset
    Poset {
        #[arg(long)]
        poset: PathBuf,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        /// a single candidate object
        #[arg(long)]
        c: Option<String>,
        /// a comma-separated class of objects
        #[arg(long)]
        class: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Search for a counterexample to right C-determination over an
    /// exhaustive family of small modules
    Oracle {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        morphism: PathBuf,
        #[arg(long)]
        c: PathBuf,
        /// per-vertex dimension bounds, e.g. "1:2,2:2" (default 1 each)
        #[arg(long, default_value = "")]
        max_dim: String,
        /// extend the family with this many seeded random modules
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// cap on raw enumeration size
        #[arg(long, default_value_t = DEFAULT_FAMILY_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Compare the classical determinator formula against the minimal one
    Claim {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        morphism: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

enum CliError {
    Input(String),
    Math(String),
}

impl From<detmor::Error> for CliError {
    fn from(e: detmor::Error) -> CliError {
        if e.is_math_precondition() {
            CliError::Math(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_algebra(path: &Path) -> CliResult<Arc<BoundQuiverAlgebra>> {
    let file: AlgebraFile = read_json(path)?;
    let alg = file.build()?;
    if alg.field().p() as u128 <= alg.dim() as u128 {
        eprintln!(
            "notice: p = {} does not exceed dim = {}; radical computations will be \
             rejected if the trace form degenerates",
            alg.field().p(),
            alg.dim()
        );
    }
    Ok(alg)
}

fn load_rep(path: &Path, alg: &Arc<BoundQuiverAlgebra>) -> CliResult<Representation> {
    let file: RepresentationFile = read_json(path)?;
    Ok(file.build(alg)?)
}

fn load_morphism(path: &Path, alg: &Arc<BoundQuiverAlgebra>) -> CliResult<RepMorphism> {
    let file: MorphismFile = read_json(path)?;
    Ok(file.build(alg)?)
}

fn dims_string(alg: &BoundQuiverAlgebra, rep: &Representation) -> String {
    let q = alg.quiver();
    let parts: Vec<String> = (0..q.vertex_count())
        .map(|v| format!("{}:{}", q.vertex_label(v), rep.dims()[v]))
        .collect();
    format!("({})", parts.join(", "))
}

fn emit_report(report: &DeterminationReport, json: bool, human: &str) -> CliResult<()> {
    if json {
        let file = ReportFile::from_report(report);
        let text = serde_json::to_string_pretty(&file)
            .map_err(|e| CliError::Input(format!("serialization failed: {e}")))?;
        println!("{text}");
    } else {
        println!("{human}");
    }
    Ok(())
}

fn run(cmd: Command) -> CliResult<()> {
    match cmd {
        Command::Construct { algebra, c, y, h, out, json } => {
            let alg = load_algebra(&algebra)?;
            let c_rep = load_rep(&c, &alg)?;
            let y_rep = load_rep(&y, &alg)?;
            let gens_file: GeneratorsFile = read_json(&h)?;
            let gens = gens_file.build(&alg, &c_rep, &y_rep)?;
            let (h_sub, was_closed) = gamma_closure(&c_rep, &y_rep, &gens)?;
            if !was_closed {
                eprintln!("notice: generators were not End(C)-closed; using their closure");
            }
            let alpha = construct_determined(&h_sub)?;
            let image = image_hom(&c_rep, &alpha)?;
            let minimal = right_minimalize(&alpha)?.dead.is_zero();
            if let Some(path) = out {
                write_json(&path, &MorphismFile::from_morphism(&alpha))?;
            }
            if json {
                let text = serde_json::to_string_pretty(&MorphismFile::from_morphism(&alpha))
                    .map_err(|e| CliError::Input(format!("serialization failed: {e}")))?;
                println!("{text}");
            } else {
                println!("X dims: {}", dims_string(&alg, alpha.source()));
                println!(
                    "image matches H: {}",
                    if image.coords() == h_sub.coords() { "yes" } else { "NO" }
                );
                println!("right minimal: {}", if minimal { "yes" } else { "NO" });
            }
            Ok(())
        }
        Command::Check { algebra, morphism, c, json } => {
            let alg = load_algebra(&algebra)?;
            let a = load_morphism(&morphism, &alg)?;
            let c_rep = load_rep(&c, &alg)?;
            let chk = determination_check(&a, &c_rep)?;
            let report = DeterminationReport {
                verdict: chk.verdict,
                witness: if chk.verdict { None } else { Some(chk.canonical) },
                minimal_summands: vec![],
                auslander_claim_agrees: None,
            };
            let human = if report.verdict {
                "right determined: yes".to_string()
            } else {
                format!(
                    "right determined: no (the canonical morphism with the same image has \
                     source dims {})",
                    dims_string(&alg, report.witness.as_ref().unwrap().source())
                )
            };
            emit_report(&report, json, &human)
        }
        Command::Mindet { algebra, morphism, out, json } => {
            let alg = load_algebra(&algebra)?;
            let a = load_morphism(&morphism, &alg)?;
            let summands = minimal_determinator(&a)?;
            if let Some(path) = out {
                let files: Vec<RepresentationFile> = summands
                    .iter()
                    .map(RepresentationFile::from_representation)
                    .collect();
                write_json(&path, &files)?;
            }
            let human = if summands.is_empty() {
                "minimal determinator: the zero module".to_string()
            } else {
                let dims: Vec<String> = summands.iter().map(|s| dims_string(&alg, s)).collect();
                format!("minimal determinator summands: {}", dims.join(" "))
            };
            let report = DeterminationReport {
                verdict: true,
                witness: None,
                minimal_summands: summands,
                auslander_claim_agrees: None,
            };
            emit_report(&report, json, &human)
        }
        Command::Ar { algebra, z, out, dot, json } => {
            let alg = load_algebra(&algebra)?;
            let z_rep = load_rep(&z, &alg)?;
            let asp = almost_split_ending_at(&z_rep)?;
            if let Some(path) = out {
                write_json(&path, &MorphismFile::from_morphism(&asp.morphism))?;
            }
            if let Some(path) = dot {
                let kernel_dims = match &asp.sequence {
                    Some(seq) => dims_string(&alg, &seq.kernel),
                    None => dims_string(&alg, &Representation::zero(&alg)),
                };
                let text = format!(
                    "digraph ar {{\n  \"tauZ {}\" -> \"X {}\";\n  \"X {}\" -> \"Z {}\";\n}}\n",
                    kernel_dims,
                    dims_string(&alg, asp.morphism.source()),
                    dims_string(&alg, asp.morphism.source()),
                    dims_string(&alg, asp.morphism.target()),
                );
                std::fs::write(&path, text)
                    .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
            }
            let human = match &asp.sequence {
                Some(seq) => format!(
                    "almost split sequence: 0 -> {} -> {} -> {} -> 0",
                    dims_string(&alg, &seq.kernel),
                    dims_string(&alg, asp.morphism.source()),
                    dims_string(&alg, asp.morphism.target())
                ),
                None => format!(
                    "minimal right almost split morphism: {} -> {} (projective ending term)",
                    dims_string(&alg, asp.morphism.source()),
                    dims_string(&alg, asp.morphism.target())
                ),
            };
            let report = DeterminationReport {
                verdict: true,
                witness: Some(asp.morphism.clone()),
                minimal_summands: asp
                    .sequence
                    .as_ref()
                    .map(|s| vec![s.kernel.clone()])
                    .unwrap_or_default(),
                auslander_claim_agrees: None,
            };
            emit_report(&report, json, &human)
        }
        Command::Poset { poset, x, y, c, class, json } => {
            let file: PosetFile = read_json(&poset)?;
            let p = file.build()?;
            let xi = p
                .index(&x)
                .ok_or_else(|| CliError::Input(format!("unknown element {x:?}")))?;
            let yi = p
                .index(&y)
                .ok_or_else(|| CliError::Input(format!("unknown element {y:?}")))?;
            let verdict = match (&c, &class) {
                (Some(c), None) => {
                    let ci = p
                        .index(c)
                        .ok_or_else(|| CliError::Input(format!("unknown element {c:?}")))?;
                    p.object_determines(xi, yi, ci)?
                }
                (None, Some(class)) => {
                    let mut d = Vec::new();
                    for label in class.split(',').filter(|s| !s.is_empty()) {
                        let i = p.index(label.trim()).ok_or_else(|| {
                            CliError::Input(format!("unknown element {label:?}"))
                        })?;
                        d.push(i);
                    }
                    p.class_determined(xi, yi, &d)?
                }
                _ => {
                    return Err(CliError::Input(
                        "exactly one of --c or --class is required".into(),
                    ))
                }
            };
            let report = DeterminationReport {
                verdict,
                witness: None,
                minimal_summands: vec![],
                auslander_claim_agrees: None,
            };
            let human = format!("determined: {}", if verdict { "yes" } else { "no" });
            emit_report(&report, json, &human)
        }
        Command::Oracle { algebra, morphism, c, max_dim, random, seed, cap, json } => {
            let alg = load_algebra(&algebra)?;
            let a = load_morphism(&morphism, &alg)?;
            let c_rep = load_rep(&c, &alg)?;
            let bounds = parse_max_dim(&alg, &max_dim)?;
            let mut family = enumerate_test_modules(&alg, &bounds, cap)?;
            for i in 0..random {
                family.push(random_representation(&alg, &bounds, seed.wrapping_add(i as u64))?);
            }
            let counterexample = refute_determination(&a, &c_rep, &family, DEFAULT_MORPHISM_CAP)?;
            let human = match &counterexample {
                Some(w) => format!(
                    "refuted: a morphism from {} satisfies the composite condition but does \
                     not factor",
                    dims_string(&alg, w.source())
                ),
                None => format!(
                    "no counterexample among {} modules (this does not prove determination)",
                    family.len()
                ),
            };
            let report = DeterminationReport {
                verdict: counterexample.is_none(),
                witness: counterexample,
                minimal_summands: vec![],
                auslander_claim_agrees: None,
            };
            emit_report(&report, json, &human)
        }
        Command::Claim { algebra, morphism, json } => {
            let alg = load_algebra(&algebra)?;
            let a = load_morphism(&morphism, &alg)?;
            let claim = check_auslander_claim(&a)?;
            let claim_dims: Vec<String> =
                claim.claim_summands.iter().map(|s| dims_string(&alg, s)).collect();
            let min_dims: Vec<String> =
                claim.minimal_summands.iter().map(|s| dims_string(&alg, s)).collect();
            let human = format!(
                "classical formula summands: [{}]\nminimal determinator: [{}]\nformula \
                 sufficient here: {}\nstrictly larger than needed: {}",
                claim_dims.join(" "),
                min_dims.join(" "),
                if claim.claim_sufficient { "yes" } else { "no" },
                if claim.claim_strictly_larger { "yes" } else { "no" }
            );
            let report = DeterminationReport {
                verdict: claim.claim_sufficient,
                witness: None,
                minimal_summands: claim.minimal_summands,
                auslander_claim_agrees: Some(claim.claim_sufficient),
            };
            emit_report(&report, json, &human)
        }
    }
}

fn parse_max_dim(alg: &Arc<BoundQuiverAlgebra>, text: &str) -> CliResult<Vec<usize>> {
    let q = alg.quiver();
    let mut bounds = vec![1usize; q.vertex_count()];
    if text.is_empty() {
        return Ok(bounds);
    }
    for part in text.split(',') {
        let Some((label, value)) = part.split_once(':') else {
            return Err(CliError::Input(format!(
                "bad --max-dim entry {part:?}, expected label:bound"
            )));
        };
        let v = q
            .vertex_index(label.trim())
            .ok_or_else(|| CliError::Input(format!("unknown vertex {label:?}")))?;
        bounds[v] = value
            .trim()
            .parse()
            .map_err(|e| CliError::Input(format!("bad bound {value:?}: {e}")))?;
    }
    Ok(bounds)
}
