//! `padic-fft`: plan lengths, build roots of unity, run transforms and
//! multiply polynomials over `Z/p^K` from the command line.

mod files;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use padic_fft::fft::{dft, idft};
use padic_fft::lift::expand_lifted_factor;
use padic_fft::padic::{ResidueInt, RingElement};
use padic_fft::pipeline::{build, build_for_length, multiply, Pipeline, DEFAULT_PRECISION, DEFAULT_SEED};
use padic_fft::planner::{asymptotic_report, choose_parameters, render_csv, render_table};
use padic_fft::{selftest, Error, ErrorKind, FactoredOrder};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use files::{EvalFile, PolyFile};

#[derive(Parser)]
#[command(name = "padic-fft", version, about = "Exact FFTs over unramified p-adic extensions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Choose the transform length for N coefficients.
    Plan {
        #[arg(short)]
        p: u64,
        #[arg(short = 'N')]
        n: u64,
    },
    /// Build a primitive s-th root of unity and lift it to p^K.
    Root {
        #[arg(short)]
        p: u64,
        #[command(flatten)]
        length: Length,
        #[arg(short = 'K', default_value_t = DEFAULT_PRECISION)]
        k: u32,
        #[arg(long, default_value_t = DEFAULT_SEED, value_parser = parse_seed)]
        seed: u64,
    },
    /// Evaluate a polynomial file at the powers of the root.
    Dft {
        #[command(flatten)]
        length: Length,
        #[arg(long, default_value_t = DEFAULT_SEED, value_parser = parse_seed)]
        seed: u64,
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Interpolate an evaluation file back to a polynomial file.
    Idft {
        #[arg(short)]
        p: u64,
        #[arg(short = 'K', default_value_t = DEFAULT_PRECISION)]
        k: u32,
        #[arg(long, default_value_t = DEFAULT_SEED, value_parser = parse_seed)]
        seed: u64,
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Multiply two polynomial files.
    Mul {
        #[arg(long, default_value_t = DEFAULT_SEED, value_parser = parse_seed)]
        seed: u64,
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the acceptance criteria.
    Selftest,
    /// Sweep N, count the multiplications of one transform each, print CSV.
    Bench {
        #[arg(short, default_value_t = 3)]
        p: u64,
        #[arg(short = 'K', default_value_t = DEFAULT_PRECISION)]
        k: u32,
        #[arg(long, value_delimiter = ',', default_values_t = [10u64, 100, 1000, 10000])]
        ns: Vec<u64>,
        /// Skip the measurement for extension degrees above this.
        #[arg(long, default_value_t = 64)]
        max_degree: u64,
        #[arg(long, default_value_t = DEFAULT_SEED, value_parser = parse_seed)]
        seed: u64,
        /// Print an aligned table instead of CSV.
        #[arg(long)]
        table: bool,
    },
}

/// Either an explicit length or a coefficient count for the planner.
#[derive(Args)]
#[group(multiple = false)]
struct Length {
    #[arg(short)]
    s: Option<u64>,
    #[arg(short = 'N')]
    n: Option<u64>,
}

fn parse_seed(text: &str) -> Result<u64, String> {
    let parsed = match text.strip_prefix("0x").or_else(|| text.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => text.parse(),
    };
    parsed.map_err(|e| format!("bad seed {text:?}: {e}"))
}

enum Failure {
    Math(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Math(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Length for `len` coefficients: the explicit `-s`, the planner for `-N`,
/// or the planner for `len` itself.
fn resolve_length(p: u64, length: &Length, len: usize) -> padic_fft::Result<FactoredOrder> {
    match (length.s, length.n) {
        (Some(s), _) => FactoredOrder::new(s),
        (None, Some(n)) => Ok(choose_parameters(p, n)?.s),
        (None, None) => Ok(choose_parameters(p, len.saturating_sub(1).max(1) as u64)?.s),
    }
}

fn render_factor(coeffs: &[ResidueInt]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let unit = c == &ResidueInt::one();
            match i {
                0 => c.to_string(),
                1 if unit => "X".into(),
                1 => format!("{c}*X"),
                _ if unit => format!("X^{i}"),
                _ => format!("{c}*X^{i}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn run(command: Command) -> Result<bool, Failure> {
    match command {
        Command::Plan { p, n } => {
            let r = choose_parameters(p, n)?;
            let factors: Vec<String> = r
                .s
                .factors()
                .iter()
                .map(|&(q, v)| if v == 1 { q.to_string() } else { format!("{q}^{v}") })
                .collect();
            println!("p={} N={} r={} s={} d={}", r.p, r.n, r.r, r.s.value(), r.d);
            println!("factors={}", factors.join("*"));
            println!("radices={:?}", r.s.radices());
            println!("expected_d={} degree_matches={}", r.expected_d, r.degree_matches());
            println!("predicted_mults={} small_degree={}", r.predicted_mults, r.small_degree());
            if !r.degree_matches() {
                eprintln!("WARNING degree {} differs from the prime product {}", r.d, r.expected_d);
            }
        }
        Command::Root { p, length, k, seed } => {
            let s = resolve_length(p, &length, 1)?;
            let pipeline = build_for_length(p, &s, k, seed)?;
            let lifted = expand_lifted_factor(&pipeline.lift)?;
            println!("p={p} s={} K={k} d={}", s.value(), pipeline.root.degree());
            println!("f = {} (mod {p})", pipeline.root.modulus());
            println!("lifted = {} (mod {p}^{k})", render_factor(&lifted));
            println!("alpha = {}", pipeline.lift.alpha());
            println!("tower_mults={} lift_mults={}", pipeline.tower_mults, pipeline.lift_mults);
        }
        Command::Dft { length, seed, input, output } => {
            let poly = PolyFile::parse(&read(&input)?)?;
            let s = resolve_length(poly.p, &length, poly.coeffs.len())?;
            if poly.coeffs.len() > s.value() as usize {
                return Err(Error::DegreeOverflow { degree: poly.coeffs.len() - 1, s: s.value() }.into());
            }
            let pipeline = build_for_length(poly.p, &s, poly.k, seed)?;
            let ring = pipeline.plan.ring();
            let mut values: Vec<RingElement> = poly.coeffs.iter().map(|c| ring.constant(c)).collect();
            values.resize(pipeline.plan.len(), ring.zero());
            let evals = dft(&values, &pipeline.plan)?;
            emit(output.as_deref(), &EvalFile::from_values(poly.exponent, &evals).render())?;
        }
        Command::Idft { p, k, seed, input, output } => {
            let evals = EvalFile::parse(&read(&input)?)?;
            let pipeline = build_for_length(p, &FactoredOrder::new(evals.s as u64)?, k, seed)?;
            let values = idft(&evals.values(pipeline.plan.ring())?, &pipeline.plan)?;
            let coeffs = values
                .iter()
                .map(|v| v.constant_value().ok_or(Error::NonConstant))
                .collect::<padic_fft::Result<Vec<_>>>()?;
            let coeffs = pipeline.plan.ring().ctx().poly_trim(&coeffs);
            emit(output.as_deref(), &PolyFile { p, k, exponent: evals.exponent, coeffs }.render())?;
        }
        Command::Mul { seed, left, right, output } => {
            let f = PolyFile::parse(&read(&left)?)?;
            let g = PolyFile::parse(&read(&right)?)?;
            if (f.p, f.k) != (g.p, g.k) {
                return Err(Error::BadInput(format!(
                    "operands live modulo {}^{} and {}^{}",
                    f.p, f.k, g.p, g.k
                ))
                .into());
            }
            let coeffs = multiply(&f.coeffs, &g.coeffs, f.p, f.k, seed)?;
            let product = PolyFile { p: f.p, k: f.k, exponent: f.exponent + g.exponent, coeffs };
            emit(output.as_deref(), &product.render())?;
        }
        Command::Selftest => {
            let outcomes = selftest::run_all();
            for o in &outcomes {
                println!("{o}");
            }
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            println!("{} passed, {failed} failed", outcomes.len() - failed);
            return Ok(failed == 0);
        }
        Command::Bench { p, k, ns, max_degree, seed, table } => {
            let mut rows = asymptotic_report(p, &ns)?;
            for row in &mut rows {
                if row.d > max_degree {
                    continue;
                }
                let (_, pipeline) = build(p, row.n, k, seed)?;
                row.measured = Some(measure_transform(&pipeline, seed));
            }
            let text = if table { render_table(&rows) } else { render_csv(&rows) };
            print!("{text}");
        }
    }
    Ok(true)
}

/// Base multiplications of one forward transform of a random vector.
fn measure_transform(pipeline: &Pipeline, seed: u64) -> u64 {
    let plan = &pipeline.plan;
    let ring = plan.ring();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values: Vec<RingElement> = (0..plan.len())
        .map(|_| {
            let coeffs: Vec<ResidueInt> =
                (0..ring.degree()).map(|_| ring.ctx().residue(rng.gen::<u128>())).collect();
            ring.from_poly(&coeffs)
        })
        .collect();
    let counter = ring.ctx().counter().clone();
    counter.measure(|| dft(&values, plan).map(|_| ())).1
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(4),
        Err(Failure::Io(message)) => {
            eprintln!("ERROR Io {message}");
            ExitCode::from(2)
        }
        Err(Failure::Math(e)) => {
            eprintln!("ERROR {} {e}", e.code());
            ExitCode::from(match e.kind() {
                ErrorKind::Precondition => 3,
                ErrorKind::Internal => 4,
            })
        }
    }
}
