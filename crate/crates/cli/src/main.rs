//! `wisopt`: solve, verify and inspect weighted independence-system
//! instances from the command line.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use wisopt::instances::families::FamilyName;
use wisopt::instances::format::{load_instance, write_instance};
use wisopt::instances::random::{random_instance, rng_from_seed, RandomConfig};
use wisopt::monoid::{
    g_bound, gap_data, gap_data_with_bound, r_bound, restricted_monoid, saturation_defect,
};
use wisopt::solver::{solve_instance, SolveReport, SolverKind};
use wisopt::verify::{
    adversary_membership_run, adversary_run, brute_force_solve, certify_rank,
    exhaustive_linear_querier, exhaustive_membership_querier, AdversaryTranscript,
    MembershipBackedOracle, RankCertificate,
};
use wisopt::{GroundPoint, Instance, MultiIndex, PrimitiveTuple, WeightVector};

#[derive(Parser)]
#[command(name = "wisopt", version, about = "Nonlinear optimization over weighted independence systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Frobenius number, gap set and Schur bound of a tuple.
    Frobenius {
        #[arg(required = true)]
        tuple: Vec<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Representable values and gaps up to a bound, or the restricted
    /// monoid for a given lambda.
    Gapset {
        #[arg(required = true)]
        tuple: Vec<u64>,
        /// Upper end of the window; defaults to one that holds every gap.
        #[arg(long)]
        bound: Option<u64>,
        /// Show M(a, lambda) and its saturation defect instead.
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        lambda: Option<Vec<u64>>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a solver on an instance.
    Solve {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = SolverKind::Main)]
        solver: SolverKind,
        /// Append the true rank of the answer.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exact optimum, image, and the rank of each solver's answer.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Only certify this solver.
        #[arg(long)]
        solver: Option<SolverKind>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run an algorithm against a lower-bound adversary.
    Adversary {
        #[arg(long)]
        family: FamilyName,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = AdversarySolver::Main)]
        solver: AdversarySolver,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include every query and answer in the output.
        #[arg(long)]
        queries: bool,
    },
    /// Emit a seeded random instance file.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
        tuple: Vec<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        generators: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        /// Objective values are drawn from 0..levels.
        #[arg(long, default_value_t = 8)]
        levels: u32,
        /// Write the system as an explicit point list.
        #[arg(long)]
        explicit: bool,
    },
}

#[derive(Args)]
struct Source {
    /// Instance file (JSON).
    #[arg(long, conflicts_with_all = ["family", "m"], required_unless_present = "family")]
    instance: Option<PathBuf>,
    #[arg(long, requires = "m")]
    family: Option<FamilyName>,
    #[arg(long, requires = "family")]
    m: Option<usize>,
    /// Treat the weights as drawn from this tuple instead.
    #[arg(long, num_args = 1.., value_delimiter = ',')]
    tuple: Option<Vec<u64>>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AdversarySolver {
    Main,
    Naive,
    Quasiconvex,
    /// The family-specific querier that rules out every hidden point.
    Exhaustive,
    /// Answer the zero point without asking anything.
    None,
}

/// A failure reported as `error: <category>: <message>`.
struct Failure {
    category: &'static str,
    message: String,
}

impl From<wisopt::Error> for Failure {
    fn from(e: wisopt::Error) -> Self {
        Failure { category: e.category(), message: e.to_string() }
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let summary = rendered
                .lines()
                .take_while(|l| !l.trim().is_empty())
                .map(str::trim)
                .collect::<Vec<_>>()
                .join(" ");
            eprintln!("error: usage: {}", summary.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}: {}", f.category, f.message.replace('\n', " "));
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> CliResult<String> {
    match command {
        Command::Frobenius { tuple, format } => frobenius(&tuple, format),
        Command::Gapset { tuple, bound, lambda, format } => gapset(&tuple, bound, lambda, format),
        Command::Solve { source, solver, verify, format } => solve(&source, solver, verify, format),
        Command::Verify { source, solver, format } => verify(&source, solver, format),
        Command::Adversary { family, m, solver, format, queries } => {
            adversary(family, m, solver, format, queries)
        }
        Command::Gen { n, tuple, seed, generators, density, levels, explicit } => {
            let mut config = RandomConfig::new(n, PrimitiveTuple::new(tuple)?);
            config.generators = generators;
            config.density = density;
            config.levels = levels;
            let mut inst = random_instance(&config, &mut rng_from_seed(seed))?;
            inst.name = format!("random(n={n}, a={}, seed={seed})", config.tuple);
            if explicit {
                inst = inst.with_system(inst.system.to_explicit()?)?;
            }
            Ok(write_instance(&inst) + "\n")
        }
    }
}

fn to_json(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn join(values: impl IntoIterator<Item = impl ToString>) -> String {
    values.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn frobenius(tuple: &[u64], format: Format) -> CliResult<String> {
    let a = PrimitiveTuple::new(tuple.to_vec())?;
    let g = gap_data(&a);
    let (r, gb, schur) = (r_bound(&a), g_bound(&a), a.schur_bound());
    if format == Format::Json {
        return Ok(to_json(&json!({
            "tuple": a.entries(),
            "frobenius": g.frobenius,
            "gap_count": g.gap_count(),
            "gaps": g.gaps,
            "schur_bound": schur,
            "r_bound": r,
            "g_bound": gb,
        })));
    }
    let mut out = String::new();
    writeln!(out, "tuple: {a}").unwrap();
    writeln!(out, "F: {}", g.frobenius).unwrap();
    writeln!(out, "gap_count: {}", g.gap_count()).unwrap();
    writeln!(out, "G: {{{}}}", g.gaps.iter().map(u64::to_string).collect::<Vec<_>>().join(",")).unwrap();
    match schur {
        Some(s) => writeln!(out, "schur_bound: {s}").unwrap(),
        None => writeln!(out, "schur_bound: none").unwrap(),
    }
    writeln!(out, "r_bound: {r}").unwrap();
    writeln!(out, "g_bound: {gb}").unwrap();
    Ok(out)
}

fn gapset(tuple: &[u64], bound: Option<u64>, lambda: Option<Vec<u64>>, format: Format) -> CliResult<String> {
    let a = PrimitiveTuple::new(tuple.to_vec())?;
    if let Some(lambda) = lambda {
        let lam = MultiIndex::new(lambda);
        let m = restricted_monoid(&a, &lam)?;
        let defect = saturation_defect(&a, &lam)?;
        if format == Format::Json {
            return Ok(to_json(&json!({
                "tuple": a.entries(),
                "lambda": lam,
                "top": m.max_value(),
                "values": m.to_vec(),
                "saturated": defect.is_empty(),
                "missing": defect,
            })));
        }
        return Ok(format!(
            "tuple: {a}\nlambda: {}\ntop: {}\nvalues: {}\nsaturated: {}\nmissing: {}\n",
            join(lam.counts()),
            m.max_value(),
            join(m.iter()),
            defect.is_empty(),
            join(&defect)
        ));
    }
    let g = match bound {
        Some(b) => gap_data_with_bound(&a, b),
        None => gap_data(&a),
    };
    if format == Format::Json {
        return Ok(to_json(&json!({
            "tuple": a.entries(),
            "bound": g.bound,
            "complete": g.is_complete(),
            "reachable": g.reachable.to_vec(),
            "gaps": g.gaps,
        })));
    }
    Ok(format!(
        "tuple: {a}\nbound: {}\ncomplete: {}\nreachable: {}\ngaps: {}\n",
        g.bound,
        g.is_complete(),
        join(g.reachable.iter()),
        join(&g.gaps)
    ))
}

fn load(source: &Source) -> CliResult<Instance> {
    let mut inst = match (&source.instance, source.family, source.m) {
        (Some(path), _, _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure { category: "io", message: format!("{}: {e}", path.display()) })?;
            load_instance(&text)?
        }
        (None, Some(family), Some(m)) => family.instance(m)?,
        _ => {
            return Err(Failure { category: "usage", message: "give --instance or --family with --m".into() })
        }
    };
    if let Some(tuple) = &source.tuple {
        let a = PrimitiveTuple::new(tuple.clone())?;
        inst.weights = WeightVector::new(inst.weights.weights().to_vec(), a)?;
    }
    Ok(inst)
}

fn support(x: &GroundPoint) -> String {
    join(x.support().iter().map(|j| j + 1))
}

fn report_text(inst: &Instance, report: &SolveReport) -> String {
    let mut out = String::new();
    writeln!(out, "instance: {}", inst.name).unwrap();
    writeln!(out, "solver: {}", report.solver).unwrap();
    writeln!(out, "solution: {}", report.solution).unwrap();
    writeln!(out, "support: {}", support(&report.solution)).unwrap();
    writeln!(out, "weight: {}", report.weight).unwrap();
    match inst.objective.value(report.weight) {
        Ok(v) => writeln!(out, "value: {v}").unwrap(),
        Err(_) => writeln!(out, "value: unknown").unwrap(),
    }
    match report.guarantee {
        Some(r) => writeln!(out, "guarantee: {r}").unwrap(),
        None => writeln!(out, "guarantee: none").unwrap(),
    }
    writeln!(out, "linear_queries: {}", report.stats.linear_queries).unwrap();
    writeln!(out, "comparison_queries: {}", report.stats.comparison_queries).unwrap();
    out
}

fn certificate_text(cert: &RankCertificate) -> String {
    let within = match cert.within_guarantee {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    };
    format!(
        "feasible: {}\nrank: {}\nbetter_weights: {}\nwithin_guarantee: {within}\n",
        cert.feasible,
        cert.rank,
        join(&cert.better_weights)
    )
}

fn solve(source: &Source, solver: SolverKind, verify: bool, format: Format) -> CliResult<String> {
    let inst = load(source)?;
    let report = solve_instance(solver, &inst)?;
    let cert = if verify { Some(certify_rank(&report, &inst)?) } else { None };
    if format == Format::Json {
        return Ok(to_json(&json!({ "instance": inst.name, "report": report, "certificate": cert })));
    }
    let mut out = report_text(&inst, &report);
    if let Some(cert) = cert {
        out.push_str(&certificate_text(&cert));
    }
    Ok(out)
}

fn verify(source: &Source, solver: Option<SolverKind>, format: Format) -> CliResult<String> {
    let inst = load(source)?;
    let bf = brute_force_solve(&inst)?;
    let kinds: Vec<SolverKind> = match solver {
        Some(k) => vec![k],
        None => SolverKind::ALL.to_vec(),
    };
    let mut certs = Vec::new();
    for kind in kinds {
        let report = solve_instance(kind, &inst)?;
        certs.push((kind, certify_rank(&report, &inst)?));
    }
    if format == Format::Json {
        let certificates: Vec<_> =
            certs.iter().map(|(k, c)| json!({ "solver": k, "certificate": c })).collect();
        return Ok(to_json(&json!({ "instance": inst.name, "brute_force": bf, "certificates": certificates })));
    }
    let mut out = String::new();
    writeln!(out, "instance: {}", inst.name).unwrap();
    writeln!(out, "optimum: {}", bf.optimum).unwrap();
    writeln!(out, "optimal_weight: {}", bf.optimal_weight).unwrap();
    writeln!(out, "image: {}", join(&bf.image)).unwrap();
    for (kind, cert) in certs {
        let guarantee = cert.guarantee.map_or("none".to_string(), |g| g.to_string());
        writeln!(
            out,
            "{kind}: weight {} value {} rank {} guarantee {guarantee} feasible {}",
            cert.weight, cert.value, cert.rank, cert.feasible
        )
        .unwrap();
    }
    Ok(out)
}

fn adversary(
    family: FamilyName,
    m: usize,
    solver: AdversarySolver,
    format: Format,
    show_queries: bool,
) -> CliResult<String> {
    let kind = match solver {
        AdversarySolver::Main => Some(SolverKind::Main),
        AdversarySolver::Naive => Some(SolverKind::Naive),
        AdversarySolver::Quasiconvex => Some(SolverKind::Quasiconvex),
        _ => None,
    };
    let mut t: AdversaryTranscript = match family {
        FamilyName::LowerBound => adversary_run(
            |o, w, f| match (solver, kind) {
                (_, Some(k)) => Ok(k.run(o, w, f)?.solution),
                (AdversarySolver::Exhaustive, _) => exhaustive_linear_querier(o, w, f),
                _ => Ok(GroundPoint::zeros(o.dim())),
            },
            m,
        )?,
        FamilyName::Membership => adversary_membership_run(
            |o, w, f| match (solver, kind) {
                (_, Some(k)) => Ok(k.run(&MembershipBackedOracle::new(o)?, w, f)?.solution),
                (AdversarySolver::Exhaustive, _) => exhaustive_membership_querier(o, w, f),
                _ => Ok(GroundPoint::zeros(o.dim())),
            },
            m,
        )?,
        FamilyName::Example31 => {
            return Err(Failure {
                category: "parameter",
                message: "adversaries exist for lower_bound and membership only".into(),
            })
        }
    };
    let count = t.query_count();
    if !show_queries {
        t.queries.clear();
    }
    if format == Format::Json {
        return Ok(to_json(&json!({ "query_count": count, "transcript": t })));
    }
    let mut out = String::new();
    writeln!(out, "family: {}", t.family).unwrap();
    writeln!(out, "m: {}", t.m).unwrap();
    writeln!(out, "queries: {count}").unwrap();
    if t.family == FamilyName::Membership {
        writeln!(out, "hidden_queries: {}", t.hidden_queries).unwrap();
    }
    writeln!(out, "threshold: {}", t.threshold).unwrap();
    writeln!(out, "hidden: {}", t.hidden).unwrap();
    writeln!(out, "surviving_y: {}", t.surviving_y).unwrap();
    writeln!(out, "output: {}", t.output).unwrap();
    writeln!(out, "output_weight: {}", t.output_weight).unwrap();
    writeln!(out, "fooled: {}", t.fooled).unwrap();
    for q in &t.queries {
        writeln!(out, "query: {}", serde_json::to_string(q).expect("serializable")).unwrap();
    }
    Ok(out)
}
