//! `steiner`: Steiner distances, k-eccentricities, ratio checks and scans.
//!
//! Output is `key=value` lines on stdout. Exit codes: 0 success, 1 usage
//! or input error, 2 refuted claim or bound violation, 3 budget exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use steiner_core::eccentricity::{k_eccentricity, steiner_profile, EccentricityError, SteinerProfile};
use steiner_core::families::{build_gk, build_h, EnsembleConfig};
use steiner_core::scan::ratio_scan;
use steiner_core::steiner::steiner_distance;
use steiner_core::verify::{
    check_bound, check_lemma, verify_claim_violation, verify_gk, verify_h, VerifyError,
};
use steiner_core::{parse_graph, write_graph, Budget, Graph, Rational, Status, TerminalSet, Tier, VerificationReport};

const EXIT_USAGE: u8 = 1;
const EXIT_REFUTED: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "steiner", version, about = "Exact Steiner distance and Steiner k-radius/k-diameter toolkit")]
struct Cli {
    /// Worker threads for the parallel sweeps (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    /// Ignore the computation budget.
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Steiner distance of a vertex set, with one minimum tree.
    Dist {
        #[arg(short = 'g', value_name = "FILE")]
        graph: PathBuf,
        /// Comma-separated labels or indices.
        #[arg(short = 'S', value_name = "L1,L2,...", value_delimiter = ',', required = true)]
        set: Vec<String>,
    },
    /// Steiner k-eccentricity of one vertex.
    Ecc {
        #[arg(short = 'g', value_name = "FILE")]
        graph: PathBuf,
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'v', value_name = "V")]
        vertex: String,
    },
    /// Steiner k-radius.
    Radius(ProfileArgs),
    /// Steiner k-diameter.
    Diameter(ProfileArgs),
    /// Steiner k-center.
    Center(ProfileArgs),
    /// Write a construction to a graph file.
    Gen {
        #[command(subcommand)]
        which: GenCommand,
    },
    /// Check a claim and print its report.
    Verify {
        #[command(subcommand)]
        which: VerifyCommand,
    },
    /// Seeded search for large sdiam/srad ratios.
    Scan {
        #[arg(long, value_enum)]
        ensemble: EnsembleKind,
        #[arg(short = 'n')]
        n: usize,
        /// Edge probability for gnp, as NUM/DEN.
        #[arg(short = 'p', value_parser = parse_rational)]
        p: Option<Rational>,
        #[arg(short = 'k')]
        k: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the best witness graph here.
        #[arg(short = 'o', value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Time the Steiner solver on fixed workloads.
    Bench {
        #[arg(long, default_value_t = 3)]
        reps: u32,
    },
}

#[derive(Debug, clap::Args)]
struct ProfileArgs {
    #[arg(short = 'g', value_name = "FILE")]
    graph: PathBuf,
    #[arg(short = 'k')]
    k: usize,
    /// Also print the center and a diametral set.
    #[arg(long)]
    witness: bool,
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    Gk {
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'o', value_name = "FILE")]
        out: PathBuf,
    },
    H {
        #[arg(short = 'o', value_name = "FILE")]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TierArg {
    Witness,
    Exhaustive,
}

impl From<TierArg> for Tier {
    fn from(t: TierArg) -> Tier {
        match t {
            TierArg::Witness => Tier::Witness,
            TierArg::Exhaustive => Tier::Exhaustive,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EnsembleKind {
    Tree,
    Gnp,
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    Gk {
        #[arg(short = 'k')]
        k: usize,
        #[arg(long, value_enum, default_value = "witness")]
        tier: TierArg,
    },
    H {
        #[arg(long, value_enum, default_value = "witness")]
        tier: TierArg,
    },
    Claim,
    Bound {
        #[arg(short = 'g', value_name = "FILE")]
        graph: PathBuf,
        #[arg(short = 'k')]
        k: usize,
    },
    Lemma {
        #[arg(short = 'g', value_name = "FILE")]
        graph: PathBuf,
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'p', value_parser = parse_rational)]
        p: Rational,
    },
}

/// `NUM/DEN` with a positive denominator. Decimals are rejected.
fn parse_rational(s: &str) -> Result<Rational, String> {
    let (num, den) = s
        .split_once('/')
        .ok_or_else(|| format!("expected NUM/DEN, got {s:?}"))?;
    let num: i64 = num.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let den: i64 = den.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if den <= 0 {
        return Err(format!("denominator must be positive in {s:?}"));
    }
    Ok(Rational::new(num, den))
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<EccentricityError> for Failure {
    fn from(e: EccentricityError) -> Self {
        let code = match e {
            EccentricityError::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Eccentricity(inner) => inner.into(),
            other => Failure::usage(other.to_string()),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("-g {}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Failure::usage(format!("-g {}: {e}", path.display())))
}

fn write_file(path: &Path, g: &Graph) -> Result<(), Failure> {
    std::fs::write(path, write_graph(g)).map_err(|e| Failure::usage(format!("-o {}: {e}", path.display())))
}

fn resolve(g: &Graph, token: &str, flag: &str) -> Result<usize, Failure> {
    g.resolve(token.trim())
        .ok_or_else(|| Failure::usage(format!("{flag}: unknown vertex {token:?}")))
}

fn names(g: &Graph, vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter().map(|v| g.display_name(v)).collect::<Vec<_>>().join(",")
}

fn report_exit(report: &VerificationReport) -> u8 {
    println!("{}", report.to_line());
    match report.status {
        Status::Verified | Status::PremiseNotMet => 0,
        Status::Refuted => EXIT_REFUTED,
        Status::Skipped => EXIT_BUDGET,
    }
}

fn profile(args: &ProfileArgs, budget: Budget) -> Result<(Graph, SteinerProfile), Failure> {
    let g = read_graph(&args.graph)?;
    let p = steiner_profile(&g, args.k, budget)?;
    Ok((g, p))
}

fn run(cli: Cli) -> Outcome {
    let budget = if cli.force {
        Budget::unlimited()
    } else {
        Budget::from_env().map_err(Failure::from)?
    };
    match cli.command {
        Command::Dist { graph, set } => {
            let g = read_graph(&graph)?;
            let vs = set
                .iter()
                .map(|t| resolve(&g, t, "-S"))
                .collect::<Result<Vec<_>, _>>()?;
            let s = TerminalSet::new(vs).map_err(|e| Failure::usage(format!("-S: {e}")))?;
            let r = steiner_distance(&g, &s).map_err(|e| Failure::usage(format!("-S: {e}")))?;
            println!("cost={}", r.cost);
            let edges: Vec<String> = r
                .tree
                .edges()
                .iter()
                .map(|&(u, v)| format!("{}-{}", g.display_name(u), g.display_name(v)))
                .collect();
            println!("edges={}", edges.join(","));
            Ok(0)
        }
        Command::Ecc { graph, k, vertex } => {
            let g = read_graph(&graph)?;
            let v = resolve(&g, &vertex, "-v")?;
            let e = k_eccentricity(&g, v, k, budget)?;
            println!(
                "vertex={} k={k} ecc={} witness={}",
                g.display_name(v),
                e.value,
                names(&g, e.witness.iter())
            );
            Ok(0)
        }
        Command::Radius(args) => {
            let (g, p) = profile(&args, budget)?;
            let r = p.report();
            println!("k={} srad={}", args.k, r.srad);
            if args.witness {
                println!("center={}", names(&g, r.center_vertices));
            }
            Ok(0)
        }
        Command::Diameter(args) => {
            let (g, p) = profile(&args, budget)?;
            let r = p.report();
            println!("k={} sdiam={}", args.k, r.sdiam);
            if args.witness {
                println!("diametral={}", names(&g, r.diametral_set.iter()));
            }
            Ok(0)
        }
        Command::Center(args) => {
            let (g, p) = profile(&args, budget)?;
            let r = p.report();
            println!("k={} center={}", args.k, names(&g, r.center_vertices));
            if args.witness {
                println!("srad={}", r.srad);
            }
            Ok(0)
        }
        Command::Gen { which } => {
            let (g, out) = match which {
                GenCommand::Gk { k, out } => (build_gk(k).map_err(|e| Failure::usage(format!("-k: {e}")))?.graph, out),
                GenCommand::H { out } => (build_h().graph, out),
            };
            write_file(&out, &g)?;
            println!("wrote={} vertices={} edges={}", out.display(), g.vertex_count(), g.edge_count());
            Ok(0)
        }
        Command::Verify { which } => {
            let report = match which {
                VerifyCommand::Gk { k, tier } => verify_gk(k, tier.into(), budget)?,
                VerifyCommand::H { tier } => verify_h(tier.into(), budget)?,
                VerifyCommand::Claim => verify_claim_violation()?,
                VerifyCommand::Bound { graph, k } => check_bound(&read_graph(&graph)?, k, budget)?,
                VerifyCommand::Lemma { graph, k, p } => check_lemma(&read_graph(&graph)?, k, p, budget)?,
            };
            Ok(report_exit(&report))
        }
        Command::Scan {
            ensemble,
            n,
            p,
            k,
            trials,
            seed,
            out,
        } => {
            let cfg = match (ensemble, p) {
                (EnsembleKind::Tree, None) => EnsembleConfig::tree(n, seed),
                (EnsembleKind::Tree, Some(_)) => return Err(Failure::usage("-p: only valid with --ensemble gnp")),
                (EnsembleKind::Gnp, Some(p)) => EnsembleConfig::gnp(n, p, seed),
                (EnsembleKind::Gnp, None) => return Err(Failure::usage("-p: required with --ensemble gnp")),
            };
            cfg.validate().map_err(|e| Failure::usage(format!("--ensemble: {e}")))?;
            let result = ratio_scan(&cfg, k, trials, budget).map_err(|e| Failure::usage(e.to_string()))?;
            for rec in result.failures() {
                if let steiner_core::scan::TrialOutcome::Failed(why) = &rec.outcome {
                    eprintln!("trial {} (seed {}) skipped: {why}", rec.trial, rec.seed);
                }
            }
            for (_, rep) in &result.violations {
                println!("{}", rep.to_line());
            }
            for (trial, rep) in &result.lemma_reports {
                if rep.status == Status::Refuted {
                    println!("trial={trial} {}", rep.to_line());
                }
            }
            if let (Some(path), Some(w)) = (&out, &result.best_witness) {
                write_file(path, &w.graph)?;
            }
            let report = result.to_report();
            Ok(report_exit(&report))
        }
        Command::Bench { reps } => {
            for t in steiner_bench::run_suite(reps) {
                println!(
                    "bench={} value={} reps={} mean_us={}",
                    t.name,
                    t.value,
                    t.reps,
                    t.mean.as_micros()
                );
            }
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
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads: must be at least 1");
            return ExitCode::from(EXIT_USAGE);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: --threads: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3/10"), Ok(Rational::new(3, 10)));
        assert_eq!(parse_rational(" 13 / 10 "), Ok(Rational::new(13, 10)));
        assert!(parse_rational("0.3").is_err());
        assert!(parse_rational("3").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
    }

    #[test]
    fn grammar() {
        Cli::command_for_tests().debug_assert();
        let cli = Cli::try_parse_from(["steiner", "dist", "-g", "x", "-S", "a,b"]).unwrap();
        assert!(matches!(cli.command, Command::Dist { ref set, .. } if set == &["a", "b"]));
        assert!(Cli::try_parse_from(["steiner", "verify", "lemma", "-g", "x", "-k", "5", "-p", "1.3"]).is_err());
        let cli = Cli::try_parse_from(["steiner", "--threads", "2", "verify", "gk", "-k", "5", "--tier", "exhaustive"]).unwrap();
        assert_eq!(cli.threads, Some(2));
    }

    impl Cli {
        fn command_for_tests() -> clap::Command {
            <Cli as clap::CommandFactory>::command()
        }
    }
}
