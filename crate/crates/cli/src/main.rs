//! `semiring-lab`: command-line access to the finite semiring toolkit.
//!
//! Exit codes: 0 success or every check holds, 1 refutation or failed check,
//! 2 inconclusive at the bound, 64 usage, 65 parse error, 66 invalid algebra
//! or unreadable file.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use semiring_lab::congruence::{
    enumerate_congruences, enumerate_ideals, enumerate_left_ideals, enumerate_right_ideals,
    enumerate_subsemimodules, is_semisimple, jacobson_radical, semiring_simplicity,
    simplicity_report, SemisimpleCertificate,
};
use semiring_lab::constructions::{
    b31, chain_semiring, direct_product, ext_semiring, lattice_boolean, lattice_chain,
    matrix_semiring,
};
use semiring_lab::format::{load, Algebra, AlgebraFile, LoadError};
use semiring_lab::hom::{
    are_isomorphic, enumerate_cyclic_semimodules, enumerate_homs, find_extension,
    is_essential_extension, structure_maps,
};
use semiring_lab::injectivity::{
    ci_verdict, ci_verdict_witness_mode, injectivity_verdict, FamilyVerdict, Verdict, VerdictStatus,
};
use semiring_lab::suite::{describe_witness, paper_suite, CheckStatus, Profile};
use semiring_lab::{
    classify_semiring, element_classes, Error, FiniteRing, FiniteSemimodule, FiniteSemiring,
    Limits, SubsetMask,
};

const EXIT_REFUTED: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_PARSE: u8 = 65;
const EXIT_INVALID: u8 = 66;

#[derive(Parser)]
#[command(
    name = "semiring-lab",
    version,
    about = "Finite semirings and semimodules given by Cayley tables"
)]
struct Cli {
    /// Largest carrier for exhaustive enumeration (default: $SEMIRING_LAB_SIZE_CAP, else 16).
    #[arg(long, global = true)]
    size_cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate an algebra file.
    Check { file: PathBuf },
    /// Element classes, and property flags of a semiring.
    Classes { file: PathBuf },
    /// All congruences.
    Congruences { file: PathBuf },
    /// Subsemimodules, or ideals of a semiring.
    Subobjects {
        file: PathBuf,
        /// Which ideals of a semiring to list.
        #[arg(long, value_enum, default_value_t = IdealKind::Left)]
        kind: IdealKind,
    },
    /// Cyclic semimodules of a semiring up to isomorphism, as algebra files.
    Cyclic { file: PathBuf },
    /// The Bourne radical of a semiring.
    Radical { file: PathBuf },
    /// Whether a semiring is a direct sum of atom left ideals (exit 1 if not).
    Semisimple { file: PathBuf },
    /// Simplicity notions.
    Simplicity { file: PathBuf },
    /// Every homomorphism between two semimodules (or semirings).
    Hom { source: PathBuf, target: PathBuf },
    /// Extend a map from a subsemimodule of AMBIENT to TARGET (exit 1 if none exists).
    Extend {
        ambient: PathBuf,
        target: PathBuf,
        /// Elements of the subsemimodule, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        sub: Vec<usize>,
        /// Images of the subsemimodule elements in ascending order, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        map: Vec<usize>,
    },
    /// Isomorphism test (exit 1 if not isomorphic).
    Iso { left: PathBuf, right: PathBuf },
    /// Whether a subsemimodule is essential in FILE (exit 1 if not).
    Essential {
        file: PathBuf,
        /// Elements of the subsemimodule, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        sub: Vec<usize>,
    },
    /// Bounded injectivity of a semimodule.
    Injective {
        file: PathBuf,
        #[arg(long, default_value_t = 5)]
        bound: usize,
    },
    /// Bounded injectivity of every cyclic semimodule of a semiring.
    Ci {
        file: PathBuf,
        #[arg(long, default_value_t = 5)]
        bound: usize,
        /// Test only against these ambient semimodule files.
        #[arg(long = "witness")]
        witnesses: Vec<PathBuf>,
    },
    /// Bounded injectivity of every simple semimodule of a semiring.
    V {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        simple_bound: usize,
        #[arg(long, default_value_t = 5)]
        ext_bound: usize,
    },
    /// Run the reproduction suite.
    PaperSuite {
        /// Lower bounds throughout.
        #[arg(long)]
        fast: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Include per-check runtimes (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Print a named semiring as an algebra file.
    Construct(ConstructArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Name written in the header line.
    #[arg(long, global = true)]
    name: Option<String>,
    #[command(subcommand)]
    which: Construct,
}

#[derive(Subcommand)]
enum Construct {
    /// The chain semiring on n elements (n >= 2).
    #[command(name = "bN")]
    Chain { n: usize },
    /// B(3,1).
    B31,
    /// Ext(R) for a ring R given as a semiring file.
    Ext { ring: PathBuf },
    /// n×n matrices over a semiring.
    Matrix { file: PathBuf, n: usize },
    /// The Boolean algebra of subsets of a k-element set.
    LatticeBool { k: usize },
    /// The chain lattice 0 < 1 < ... < n-1 with join and meet.
    LatticeChain { n: usize },
    /// Direct product of two semirings.
    Product { left: PathBuf, right: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum IdealKind {
    Left,
    Right,
    TwoSided,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Jsonl,
}

/// A reason to stop, carrying the exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        let code = match e {
            LoadError::Parse { .. } => EXIT_PARSE,
            LoadError::Io { .. } | LoadError::Invalid { .. } => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SizeCapExceeded { .. }
            | Error::InvalidArgument(_)
            | Error::NotASubsemimodule { .. } => EXIT_USAGE,
            Error::CrossCheckMismatch(_)
            | Error::IncompatiblePartition(_)
            | Error::NotACongruence(_) => EXIT_REFUTED,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type Outcome = Result<u8, Failure>;

fn semiring(path: &Path) -> Result<FiniteSemiring, Failure> {
    match load(path)? {
        Algebra::Semiring(s) => Ok(s),
        Algebra::Semimodule(_) => Err(usage(format!(
            "{}: expected a semiring file",
            path.display()
        ))),
    }
}

fn semimodule(path: &Path) -> Result<FiniteSemimodule, Failure> {
    match load(path)? {
        Algebra::Semimodule(m) => Ok(m),
        Algebra::Semiring(_) => Err(usage(format!(
            "{}: expected a semimodule file",
            path.display()
        ))),
    }
}

/// Re-homes `m` onto `base` so both share one semiring value.
fn same_base(base: &FiniteSemimodule, m: FiniteSemimodule) -> Result<FiniteSemimodule, Failure> {
    Ok(m.rebase(base.base())?)
}

fn set_of(elems: &[usize]) -> semiring_lab::ElementSet {
    elems.iter().copied().collect()
}

fn print_subset(k: &SubsetMask, semiring: bool) {
    let mut flags = Vec::new();
    if k.is_subtractive {
        flags.push("subtractive");
    }
    if k.is_strong {
        flags.push("strong");
    }
    if semiring {
        if k.is_left_ideal {
            flags.push("left-ideal");
        }
        if k.is_right_ideal {
            flags.push("right-ideal");
        }
    }
    println!("{} {}", k.mask, flags.join(" "));
}

fn verdict_code(status: VerdictStatus) -> u8 {
    match status {
        VerdictStatus::Holds => 0,
        VerdictStatus::RefutedWithWitness => EXIT_REFUTED,
        VerdictStatus::InconclusiveAtBound => EXIT_INCONCLUSIVE,
    }
}

fn print_verdict(label: &str, v: &Verdict) {
    println!(
        "{label}: {} (bound {}, {} ambients)",
        v.status.as_str(),
        v.bound,
        v.ambients
    );
    if let Some(w) = &v.witness {
        println!("  witness: {}", describe_witness(w));
    }
}

fn print_family(f: &FamilyVerdict) -> u8 {
    for (i, (m, v)) in f.members.iter().enumerate() {
        print_verdict(&format!("member {i} (order {})", m.order()), v);
    }
    print_verdict("verdict", &f.verdict);
    verdict_code(f.verdict.status)
}

fn run(cli: Cli) -> Outcome {
    let limits = cli
        .size_cap
        .map(Limits::with_size_cap)
        .unwrap_or_else(Limits::from_env);
    match cli.command {
        Command::Check { file } => {
            match load(&file)? {
                Algebra::Semiring(s) => println!("valid semiring of order {}", s.order()),
                Algebra::Semimodule(m) => {
                    println!(
                        "valid semimodule of order {} over a semiring of order {}",
                        m.order(),
                        m.base().order()
                    )
                }
            }
            Ok(0)
        }
        Command::Classes { file } => {
            let (report, flags) = match load(&file)? {
                Algebra::Semiring(s) => (element_classes(&s), Some(classify_semiring(&s))),
                Algebra::Semimodule(m) => (element_classes(&m), None),
            };
            println!("idempotents (I+): {}", report.iplus);
            println!("zeroids (Z): {}", report.zclass);
            println!("summands of zero (V): {}", report.vclass);
            println!("additively regular (A): {}", report.aclass);
            match report.infinite {
                Some(x) => println!("infinite element: {x}"),
                None => println!("infinite element: none"),
            }
            if let Some(units) = report.units {
                println!("units: {units}");
            }
            if let Some(f) = flags {
                let all = [
                    ("zerosumfree", f.zerosumfree),
                    ("zeroic", f.zeroic),
                    ("additively-idempotent", f.additively_idempotent),
                    ("additively-regular", f.additively_regular),
                    ("anti-bounded", f.anti_bounded),
                    ("gelfand", f.gelfand),
                    ("von-neumann-regular", f.vn_regular),
                    ("left-subtractive", f.left_subtractive),
                    ("commutative", f.commutative_mul),
                ];
                for (name, value) in all {
                    println!("{name}: {value}");
                }
            }
            Ok(0)
        }
        Command::Congruences { file } => {
            let list = match load(&file)? {
                Algebra::Semiring(s) => enumerate_congruences(&s, &limits)?,
                Algebra::Semimodule(m) => enumerate_congruences(&m, &limits)?,
            };
            println!("{} congruences", list.len());
            for theta in list {
                println!("{theta}");
            }
            Ok(0)
        }
        Command::Subobjects { file, kind } => {
            match load(&file)? {
                Algebra::Semimodule(m) => {
                    let list = enumerate_subsemimodules(&m, &limits)?;
                    println!("{} subsemimodules", list.len());
                    list.iter().for_each(|k| print_subset(k, false));
                }
                Algebra::Semiring(s) => {
                    let (what, list) = match kind {
                        IdealKind::Left => ("left ideals", enumerate_left_ideals(&s, &limits)?),
                        IdealKind::Right => ("right ideals", enumerate_right_ideals(&s, &limits)?),
                        IdealKind::TwoSided => ("ideals", enumerate_ideals(&s, &limits)?),
                    };
                    println!("{} {what}", list.len());
                    list.iter().for_each(|k| print_subset(k, true));
                }
            }
            Ok(0)
        }
        Command::Cyclic { file } => {
            let s = Arc::new(semiring(&file)?);
            let list = enumerate_cyclic_semimodules(&s, &limits)?;
            println!("# {} cyclic semimodules", list.len());
            let base = file.display().to_string();
            for (i, m) in list.iter().enumerate() {
                println!();
                print!(
                    "{}",
                    AlgebraFile::from_semimodule(&format!("cyclic-{i}"), &base, m).to_text()
                );
            }
            Ok(0)
        }
        Command::Radical { file } => {
            let j = jacobson_radical(&semiring(&file)?, &limits)?;
            println!("radical: {}", j.mask);
            Ok(0)
        }
        Command::Semisimple { file } => match is_semisimple(&semiring(&file)?, &limits)? {
            SemisimpleCertificate::Decomposition(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                println!("semisimple: {}", parts.join(" + "));
                Ok(0)
            }
            SemisimpleCertificate::Exhausted { atoms } => {
                let atoms: Vec<String> = atoms.iter().map(|p| p.to_string()).collect();
                println!("not semisimple; atom left ideals: {}", atoms.join(" "));
                Ok(EXIT_REFUTED)
            }
        },
        Command::Simplicity { file } => {
            match load(&file)? {
                Algebra::Semimodule(m) => {
                    let r = simplicity_report(&m, &limits)?;
                    println!("simple: {}", r.simple);
                    println!("atom: {}", r.atom);
                    println!("s-simple: {}", r.s_simple);
                    println!("congruences: {}", r.congruence_count);
                    println!("subsemimodules: {}", r.subobject_count);
                }
                Algebra::Semiring(s) => {
                    let r = semiring_simplicity(&s, &limits)?;
                    println!("congruence-simple: {}", r.congruence_simple);
                    println!("ideal-simple: {}", r.ideal_simple);
                    println!("congruences: {}", r.congruence_count);
                    println!("ideals: {}", r.subobject_count);
                }
            }
            Ok(0)
        }
        Command::Hom { source, target } => {
            let maps = match (load(&source)?, load(&target)?) {
                (Algebra::Semimodule(m), Algebra::Semimodule(n)) => {
                    let n = same_base(&m, n)?;
                    enumerate_homs(&m, &n, &limits)?
                }
                (Algebra::Semiring(s), Algebra::Semiring(t)) => {
                    limits.check("homomorphism source carrier", s.order())?;
                    structure_maps(&s, &t)
                }
                _ => return Err(usage("both files must be semirings or both semimodules")),
            };
            println!("{} homomorphisms", maps.len());
            for h in maps {
                println!("{:?}", h.map);
            }
            Ok(0)
        }
        Command::Extend {
            ambient,
            target,
            sub,
            map,
        } => {
            let b = semimodule(&ambient)?;
            let m = same_base(&b, semimodule(&target)?)?;
            let a = set_of(&sub);
            if a.len() != map.len() {
                return Err(usage("--sub and --map must have the same length"));
            }
            match find_extension(&b, a, &map, &m)? {
                Some(h) => {
                    println!("extension: {:?}", h.map);
                    Ok(0)
                }
                None => {
                    println!("no extension exists");
                    Ok(EXIT_REFUTED)
                }
            }
        }
        Command::Iso { left, right } => {
            let cert = match (load(&left)?, load(&right)?) {
                (Algebra::Semimodule(m), Algebra::Semimodule(n)) => {
                    are_isomorphic(&m, &same_base(&m, n)?)?
                }
                (Algebra::Semiring(s), Algebra::Semiring(t)) => are_isomorphic(&s, &t)?,
                _ => return Err(usage("both files must be semirings or both semimodules")),
            };
            match cert.map() {
                Some(map) => {
                    println!("isomorphic: {map:?}");
                    Ok(0)
                }
                None => {
                    println!("not isomorphic");
                    Ok(EXIT_REFUTED)
                }
            }
        }
        Command::Essential { file, sub } => {
            let n = semimodule(&file)?;
            let r = is_essential_extension(&n, set_of(&sub), &limits)?;
            match r.witness {
                None => {
                    println!("essential");
                    Ok(0)
                }
                Some(theta) => {
                    println!("not essential; separating congruence: {theta}");
                    Ok(EXIT_REFUTED)
                }
            }
        }
        Command::Injective { file, bound } => {
            let v = injectivity_verdict(&semimodule(&file)?, bound, &limits)?;
            print_verdict("verdict", &v);
            Ok(verdict_code(v.status))
        }
        Command::Ci {
            file,
            bound,
            witnesses,
        } => {
            let s = Arc::new(semiring(&file)?);
            let family = if witnesses.is_empty() {
                ci_verdict(&s, bound, &limits)?
            } else {
                let ambients = witnesses
                    .iter()
                    .map(|p| Ok(semimodule(p)?.rebase(&s)?))
                    .collect::<Result<Vec<_>, Failure>>()?;
                ci_verdict_witness_mode(&s, ambients, &limits)?
            };
            Ok(print_family(&family))
        }
        Command::V {
            file,
            simple_bound,
            ext_bound,
        } => {
            let s = Arc::new(semiring(&file)?);
            Ok(print_family(&semiring_lab::injectivity::v_verdict(
                &s,
                simple_bound,
                ext_bound,
                &limits,
            )?))
        }
        Command::PaperSuite {
            fast,
            format,
            timings,
        } => {
            let report = paper_suite(if fast { Profile::Fast } else { Profile::Full }, &limits);
            match format {
                ReportFormat::Text => print!("{}", report.to_text(timings)),
                ReportFormat::Jsonl => print!("{}", report.to_jsonl(timings)),
            }
            Ok(match report.overall() {
                CheckStatus::Pass => 0,
                CheckStatus::Fail => EXIT_REFUTED,
                CheckStatus::Inconclusive => EXIT_INCONCLUSIVE,
            })
        }
        Command::Construct(args) => {
            let (default_name, s) = match args.which {
                Construct::Chain { n } => {
                    if n < 2 {
                        return Err(usage("bN needs n >= 2"));
                    }
                    (format!("B{n}"), chain_semiring(n - 1)?)
                }
                Construct::B31 => ("B31".to_string(), b31()),
                Construct::Ext { ring } => {
                    let r = FiniteRing::new(semiring(&ring)?)?;
                    ("Ext".to_string(), ext_semiring(&r))
                }
                Construct::Matrix { file, n } => (
                    format!("M{n}"),
                    matrix_semiring(&semiring(&file)?, n, &limits)?,
                ),
                Construct::LatticeBool { k } => (format!("Bool{k}"), lattice_boolean(k)?),
                Construct::LatticeChain { n } => (format!("Chain{n}"), lattice_chain(n)?),
                Construct::Product { left, right } => (
                    "Product".to_string(),
                    direct_product(&semiring(&left)?, &semiring(&right)?)?,
                ),
            };
            let name = args.name.unwrap_or(default_name);
            print!("{}", AlgebraFile::from_semiring(&name, &s).to_text());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
