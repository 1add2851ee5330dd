use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use burau_forge::algebra::{Field, FieldTag, Fp, Gaussian, LMat, MatrixJson, ProjMat, Rational};
use burau_forge::braid::{BraidWord, FreeWord};
use burau_forge::building::{explore, verify_identity, BuildingGen, LatticeIdentity, Named};
use burau_forge::burau::{
    burau_matrix, evaluation_predicates, gamma_membership, gamma_prime_membership, BurauKind, DiagData,
};
use burau_forge::counterexample::report;
use burau_forge::similitude::{parse_poly_x, q_normal_form, verify_relation, RelParams, Relation};
use burau_forge::stallings::fold;
use burau_forge::suite::verify_paper;
use burau_forge::Error;

#[derive(Parser)]
#[command(name = "burau-forge", version, about = "Exact Burau, similitude and building computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Burau image of a braid word as a JSON matrix.
    Burau {
        #[arg(long)]
        word: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "u")]
        kind: BurauKind,
        #[arg(long, default_value = "q")]
        field: FieldTag,
    },
    /// Target-group membership and evaluation criteria for a matrix file.
    Check {
        which: CheckKind,
        #[arg(long)]
        matrix: PathBuf,
    },
    #[command(subcommand)]
    Similitude(SimilitudeCmd),
    #[command(subcommand)]
    Counterexample(CounterexampleCmd),
    #[command(subcommand)]
    Building(BuildingCmd),
    /// Folds a list of free words and reports the rank of the subgroup.
    Fold(FoldArgs),
    /// Runs every registered identity check.
    VerifyPaper {
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Gamma,
    GammaPrime,
    #[value(name = "lemma39")]
    Evaluation,
}

#[derive(Subcommand)]
enum SimilitudeCmd {
    /// Verifies one relation among the similitude generators.
    Verify {
        #[arg(long)]
        rel: Relation,
        #[arg(long)]
        r: Option<String>,
        #[arg(long)]
        f: Option<String>,
        #[arg(long, default_value = "q")]
        field: FieldTag,
    },
    /// Normal form of a 2x2 matrix in the similitude generators.
    Nf {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
}

#[derive(Subcommand)]
enum CounterexampleCmd {
    /// Builds A and runs every check on it.
    Run {
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
        materialize_exponents: Option<Vec<i64>>,
    },
}

#[derive(Subcommand)]
enum BuildingCmd {
    /// Breadth-first exploration of the vertices reached by the generators.
    Explore {
        #[arg(long, value_delimiter = ',', default_value = "d1,d2,g1,g2,g3,g4")]
        gens: Vec<Named>,
        #[arg(long, default_value_t = 2)]
        radius: usize,
        #[arg(long, default_value_t = 100_000)]
        max_vertices: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Verifies one of the lattice identities.
    Verify {
        #[arg(long)]
        id: String,
        #[arg(long)]
        r: Option<String>,
        #[arg(long)]
        r2: Option<String>,
        #[arg(long)]
        j: Option<usize>,
    },
}

#[derive(Args)]
struct FoldArgs {
    #[arg(long)]
    alphabet: usize,
    #[arg(long)]
    gens_file: PathBuf,
    #[arg(long)]
    emit_graph: Option<PathBuf>,
    /// Words to test for membership.
    #[arg(long)]
    member: Vec<String>,
}

enum Failure {
    Usage(String),
    Checks,
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidParam(_) | Error::FieldMismatch { .. } | Error::Dimension(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

macro_rules! say {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! with_field {
    ($tag:expr, $f:ident => $body:expr) => {
        match $tag {
            FieldTag::Rational => {
                type $f = Rational;
                $body
            }
            FieldTag::Gaussian => {
                type $f = Gaussian;
                $body
            }
            FieldTag::Prime(2) => {
                type $f = Fp<2>;
                $body
            }
            FieldTag::Prime(3) => {
                type $f = Fp<3>;
                $body
            }
            FieldTag::Prime(5) => {
                type $f = Fp<5>;
                $body
            }
            FieldTag::Prime(7) => {
                type $f = Fp<7>;
                $body
            }
            FieldTag::Prime(11) => {
                type $f = Fp<11>;
                $body
            }
            FieldTag::Prime(13) => {
                type $f = Fp<13>;
                $body
            }
            FieldTag::Prime(17) => {
                type $f = Fp<17>;
                $body
            }
            other => Err(Failure::Usage(format!("field {other} is not supported here"))),
        }
    };
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))
}

fn print_json(value: &impl Serialize) {
    say!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn verdict(passed: bool) -> Outcome {
    if passed {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn read_matrix<F: Field>(path: &Path) -> Result<LMat<F>, Failure> {
    Ok(MatrixJson::from_json(&read(path)?)?.to_matrix()?)
}

fn burau(word: &str, n: usize, kind: BurauKind, field: FieldTag) -> Outcome {
    let w = BraidWord::parse(word, n)?;
    with_field!(field, F => {
        print_json(&MatrixJson::from_matrix(&burau_matrix::<F>(&w, kind)));
        Ok(())
    })
}

#[derive(Serialize)]
struct CheckOutput<T: Serialize> {
    check: &'static str,
    passed: bool,
    detail: T,
}

fn check(which: CheckKind, path: &Path) -> Outcome {
    let field = MatrixJson::from_json(&read(path)?)?.field_tag()?;
    with_field!(field, F => {
        let a = read_matrix::<F>(path)?;
        match which {
            CheckKind::Gamma => {
                let r = gamma_membership(&a, a.rows())?;
                print_json(&CheckOutput { check: "gamma", passed: r.passes(), detail: r });
                verdict(r.passes())
            }
            CheckKind::GammaPrime => {
                let r = gamma_prime_membership(&a, &DiagData::<F>::new())?;
                print_json(&CheckOutput { check: "gamma-prime", passed: r.passes(), detail: &r });
                verdict(r.passes())
            }
            CheckKind::Evaluation => {
                if a.rows() != 3 {
                    return Err(Failure::Usage("the evaluation criteria take a 3x3 matrix".into()));
                }
                let r = evaluation_predicates(&a, &DiagData::<F>::new())?;
                print_json(&CheckOutput { check: "lemma39", passed: r.consistent(), detail: r });
                verdict(r.consistent())
            }
        }
    })
}

fn similitude_verify(rel: Relation, r: Option<String>, f: Option<String>, field: FieldTag) -> Outcome {
    with_field!(field, F => {
        let params = RelParams::<F> {
            r: r.as_deref().map(F::parse).transpose()?,
            f: f.as_deref().map(parse_poly_x).transpose()?,
        };
        let ok = verify_relation(rel, &params)?;
        say!("{rel:?}: {}", if ok { "holds" } else { "fails" });
        verdict(ok)
    })
}

fn similitude_nf(path: &Path, max_len: usize) -> Outcome {
    let field = MatrixJson::from_json(&read(path)?)?.field_tag()?;
    with_field!(field, F => {
        let m = ProjMat::from_laurent(&read_matrix::<F>(path)?)?;
        say!("{}", q_normal_form(&m, max_len)?);
        Ok(())
    })
}

fn counterexample(exponents: Option<Vec<i64>>) -> Outcome {
    let rep = report(exponents.map(|v| (v[0], v[1])))?;
    print_json(&rep);
    verdict(rep.passes())
}

fn building_explore(
    gens: Vec<Named>,
    radius: usize,
    max_vertices: usize,
    out: Option<PathBuf>,
    dot: Option<PathBuf>,
) -> Outcome {
    let gens: Vec<BuildingGen> = gens.into_iter().map(BuildingGen::Named).collect();
    let rep = explore(&gens, radius, max_vertices)?;
    let json = serde_json::to_string_pretty(&rep).expect("serializable");
    match out {
        Some(p) => write(&p, &json)?,
        None => say!("{json}"),
    }
    if let Some(p) = dot {
        write(&p, &rep.to_dot())?;
    }
    eprintln!("visited {} vertices, {} edges, {} triangles", rep.visited, rep.edge_count(), rep.triangles);
    Ok(())
}

fn building_verify(id: &str, r: Option<String>, r2: Option<String>, j: Option<usize>) -> Outcome {
    let args: Vec<String> = [r, r2, j.map(|j| j.to_string())].into_iter().flatten().collect();
    let spec = if args.is_empty() { id.to_string() } else { format!("{id}:{}", args.join(",")) };
    let rep = verify_identity(&spec.parse::<LatticeIdentity>()?)?;
    print_json(&rep);
    verdict(rep.passed)
}

#[derive(Serialize)]
struct FoldOutput {
    rank: usize,
    vertices: usize,
    edges: usize,
    hash: String,
    membership: Vec<(String, bool)>,
}

fn letter_prefix(text: &str) -> char {
    text.chars().find(|c| c.is_ascii_alphabetic()).map(|c| c.to_ascii_lowercase()).unwrap_or('x')
}

fn fold_cmd(args: FoldArgs) -> Outcome {
    let text = read(&args.gens_file)?;
    let prefix = letter_prefix(&text);
    let gens = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| FreeWord::parse(l, prefix))
        .collect::<Result<Vec<_>, _>>()?;
    let g = fold(&gens, args.alphabet)?;
    if let Some(p) = &args.emit_graph {
        write(p, &serde_json::to_string_pretty(&g).expect("serializable"))?;
    }
    let membership = args
        .member
        .iter()
        .map(|w| Ok((w.clone(), g.contains(&FreeWord::parse(w, prefix)?))))
        .collect::<Result<Vec<_>, Error>>()?;
    print_json(&FoldOutput {
        rank: g.rank(),
        vertices: g.vertices,
        edges: g.edges.len(),
        hash: format!("{:016x}", g.canonical_hash()),
        membership,
    });
    Ok(())
}

fn verify_paper_cmd(filter: Option<String>, json: bool) -> Outcome {
    let card = verify_paper(filter.as_deref());
    if json {
        print_json(&card);
    } else {
        for row in &card.rows {
            let status = if row.passed { "pass" } else { "FAIL" };
            let err = row.error.as_deref().map(|e| format!("  {e}")).unwrap_or_default();
            say!("{status}  {:<48} {:>7} ms  {}{err}", row.id, row.millis, row.anchor);
        }
        let failures = card.failures().len();
        say!("{} checks, {} failing", card.rows.len(), failures);
    }
    verdict(card.passed)
}

fn configure_threads() {
    if let Some(n) = std::env::var("BURAU_FORGE_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Burau { word, n, kind, field } => burau(&word, n, kind, field),
        Command::Check { which, matrix } => check(which, &matrix),
        Command::Similitude(SimilitudeCmd::Verify { rel, r, f, field }) => similitude_verify(rel, r, f, field),
        Command::Similitude(SimilitudeCmd::Nf { matrix, max_len }) => similitude_nf(&matrix, max_len),
        Command::Counterexample(CounterexampleCmd::Run { materialize_exponents }) => {
            counterexample(materialize_exponents)
        }
        Command::Building(BuildingCmd::Explore { gens, radius, max_vertices, out, dot }) => {
            building_explore(gens, radius, max_vertices, out, dot)
        }
        Command::Building(BuildingCmd::Verify { id, r, r2, j }) => building_verify(&id, r, r2, j),
        Command::Fold(args) => fold_cmd(args),
        Command::VerifyPaper { filter, json } => verify_paper_cmd(filter, json),
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
