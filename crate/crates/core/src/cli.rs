//! Command-line front end. Exit codes: 0 success, 1 usage error, 2 data error.

use crate::analysis::{
    components_to_tsv, decompose_profile, effective_basis, kernel_basis, masking_profile, scaling_report,
    subspace_catalog, tally, Profile,
};
use crate::ballots::{build_ballot_space, BallotKind, BallotSpace};
use crate::cyclic_orders::{
    classify_pair, co_character, distance_table, pair_orbits, transposition_distance, CyclicOrder, OrderingKind,
};
use crate::error::Error;
use crate::rational::{format_q, format_vec, parse_q, parse_q_list};
use crate::representation::{decompose_character, isotypic_projector_capped, space_character, ActionSpace};
use crate::scoring::{named_rule, parse_seed_file, RuleFamily, RuleParams, ScoringMatrix};
use crate::symmetric_group::{enumerate_classes, Partition};
use clap::{Args, Parser, Subcommand};
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Parser, Debug)]
#[command(name = "cyclic-vote", version, about = "Neutral points-based voting on cyclic orders")]
struct Cli {
    /// Refuse degrees above this value in n!-sized loops.
    #[arg(long, default_value_t = 7, global = true)]
    max_n: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the cyclic orders of degree n.
    Orders(SpaceArgs),
    /// Permutation character of a ballot space, one conjugacy class per line.
    Characters(SpaceArgs),
    /// Irreducible multiplicities of a ballot space.
    Decompose(SpaceArgs),
    /// Invariant subspace table of CO4, ROLO4 or CO5; with --profile, expand that profile.
    Catalog {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        profile: Option<PathBuf>,
    },
    /// Scoring matrix as CSV.
    Matrix(RuleArgs),
    /// Scores and winners of a profile.
    Tally {
        #[command(flatten)]
        rule: RuleArgs,
        #[arg(long)]
        profile: PathBuf,
    },
    /// Basis of the kernel of a rule.
    Kernel(RuleArgs),
    /// Basis of the effective space of a rule.
    Effective(RuleArgs),
    /// Isotypic projection of a vector or profile.
    Project {
        #[command(flatten)]
        space: SpaceArgs,
        /// Partition such as 2+1+1.
        #[arg(long)]
        lambda: String,
        /// Comma-separated rationals.
        #[arg(long, conflicts_with = "profile")]
        vector: Option<String>,
        #[arg(long)]
        profile: Option<PathBuf>,
    },
    /// How a rule acts on each catalog subspace.
    Scaling(RuleArgs),
    /// Step distance between two orders, or distance class sizes from the identity order.
    Distance {
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Orbit of a pair of orders, or every orbit of degree n.
    Classify {
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Profile electing the target while weighting ballots toward the decoys.
    Mask {
        #[command(flatten)]
        rule: RuleArgs,
        #[arg(long)]
        target: String,
        /// Comma-separated orders.
        #[arg(long, default_value = "")]
        decoys: String,
        #[arg(long, default_value = "1")]
        magnitude: String,
    },
}

#[derive(Args, Debug)]
struct SpaceArgs {
    /// Ballot kind: co, rolo or trad.
    #[arg(long, default_value = "co")]
    space: String,
    #[arg(long)]
    n: usize,
    /// paper or canonical; defaults to paper for n = 4 and 5.
    #[arg(long)]
    ordering: Option<String>,
}

#[derive(Args, Debug)]
struct RuleArgs {
    /// Named family: generic4, rolo_generic, rolo_x1, rolo21, trad21, generic5, distance5, adjusted_distance5.
    #[arg(long, required_unless_present = "seeds", conflicts_with = "seeds")]
    rule: Option<String>,
    /// Comma-separated rational parameters.
    #[arg(long, requires = "rule")]
    params: Option<String>,
    /// Seed file with lines `<ballot> <order> <rational>`.
    #[arg(long)]
    seeds: Option<PathBuf>,
    /// Ballot kind for seeded rules.
    #[arg(long, default_value = "co")]
    space: String,
    /// Degree for seeded rules.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    ordering: Option<String>,
}

enum Failure {
    Usage(String),
    Data(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Data(e.to_string())
    }
}

type Outcome = std::result::Result<String, Failure>;

/// Runs the CLI on `argv` (including the program name) and returns the exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            if out.write_all(text.as_bytes()).is_err() {
                return 2;
            }
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            1
        }
        Err(Failure::Data(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

/// Fixed reference ordering where one exists, canonical otherwise.
fn ordering_for(kind: BallotKind, n: usize, ordering: &Option<String>) -> std::result::Result<OrderingKind, Failure> {
    match ordering {
        Some(s) => OrderingKind::parse(s).map_err(|e| Failure::Usage(e.to_string())),
        None if kind != BallotKind::Cyclic && n != 4 => Ok(OrderingKind::Canonical),
        None => Ok(OrderingKind::default_for(n)),
    }
}

fn check_cap(n: usize, max_n: usize) -> std::result::Result<(), Failure> {
    if n > max_n {
        return Err(Error::DegreeCap(n, max_n).into());
    }
    Ok(())
}

fn build_space(args: &SpaceArgs, max_n: usize) -> std::result::Result<BallotSpace, Failure> {
    check_cap(args.n, max_n)?;
    let kind = BallotKind::parse(&args.space).map_err(|e| Failure::Usage(e.to_string()))?;
    let ordering = ordering_for(kind, args.n, &args.ordering)?;
    Ok(build_ballot_space(kind, args.n, ordering)?)
}

fn read_file(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

fn load_rule(args: &RuleArgs, max_n: usize) -> std::result::Result<ScoringMatrix, Failure> {
    let rp = match (&args.rule, &args.seeds) {
        (Some(name), _) => {
            let family = RuleFamily::parse(name).map_err(|e| Failure::Usage(e.to_string()))?;
            let params = match &args.params {
                Some(p) => parse_q_list(p).map_err(|e| Failure::Usage(e.to_string()))?,
                None => Vec::new(),
            };
            RuleParams::Family(family, params)
        }
        (None, Some(path)) => {
            let n = args
                .n
                .ok_or_else(|| Failure::Usage("--seeds needs --n".into()))?;
            check_cap(n, max_n)?;
            let kind = BallotKind::parse(&args.space).map_err(|e| Failure::Usage(e.to_string()))?;
            RuleParams::OrbitSeeds {
                kind,
                n,
                ordering: ordering_for(kind, n, &args.ordering)?,
                seeds: parse_seed_file(&read_file(path)?)?,
            }
        }
        (None, None) => return Err(Failure::Usage("either --rule or --seeds is required".into())),
    };
    if let RuleParams::Family(f, p) = &rp {
        if p.len() != f.arity() {
            return Err(Failure::Usage(
                Error::Arity {
                    family: f.to_string(),
                    expected: f.arity(),
                    actual: p.len(),
                }
                .to_string(),
            ));
        }
    }
    Ok(named_rule(&rp)?)
}

fn parse_order(s: &str) -> std::result::Result<CyclicOrder, Failure> {
    Ok(CyclicOrder::parse(s)?)
}

fn vectors_text(title: &str, vs: &[Vec<crate::Q>]) -> String {
    let mut out = format!("# {title} dimension {}\n", vs.len());
    for v in vs {
        out.push_str(&format_vec(v));
        out.push('\n');
    }
    out
}

fn execute(cli: &Cli) -> Outcome {
    let max_n = cli.max_n;
    match &cli.command {
        Command::Orders(args) => {
            let space = build_space(&SpaceArgs { space: "co".into(), n: args.n, ordering: args.ordering.clone() }, max_n)?;
            Ok(space.ballots().iter().map(|b| format!("{b}\n")).collect())
        }
        Command::Characters(args) => {
            let kind = BallotKind::parse(&args.space).map_err(|e| Failure::Usage(e.to_string()))?;
            check_cap(args.n, max_n)?;
            let chi = if kind == BallotKind::Cyclic {
                co_character(args.n)
            } else {
                space_character(&build_space(args, max_n)?)
            };
            let mut out = String::from("class\tsize\tvalue\n");
            for (mu, size) in enumerate_classes(args.n) {
                let _ = writeln!(out, "{mu}\t{size}\t{}", format_q(&chi.value(&mu)));
            }
            Ok(out)
        }
        Command::Decompose(args) => {
            let space = build_space(args, max_n)?;
            Ok(decompose_character(&space_character(&space))?.to_tsv())
        }
        Command::Catalog { space, profile } => {
            let space = build_space(space, max_n)?;
            let catalog = subspace_catalog(&space)?;
            if let Some(path) = profile {
                let p = Profile::parse(space, &read_file(path)?)?;
                return Ok(components_to_tsv(&decompose_profile(&p, &catalog)?));
            }
            let mut out = String::new();
            for e in &catalog.entries {
                let _ = writeln!(out, "# {}\t{}\tdimension {}", e.label, e.lambda, e.dim());
                for v in &e.vectors {
                    let _ = writeln!(out, "{}", format_vec(v));
                }
            }
            Ok(out)
        }
        Command::Matrix(rule) => Ok(load_rule(rule, max_n)?.to_csv()),
        Command::Tally { rule, profile } => {
            let m = load_rule(rule, max_n)?;
            let p = Profile::parse(m.ballots().clone(), &read_file(profile)?)?;
            Ok(tally(&m, &p)?.to_tsv())
        }
        Command::Kernel(rule) => Ok(vectors_text("kernel", &kernel_basis(&load_rule(rule, max_n)?))),
        Command::Effective(rule) => Ok(vectors_text("effective", &effective_basis(&load_rule(rule, max_n)?))),
        Command::Project { space, lambda, vector, profile } => {
            let space = build_space(space, max_n)?;
            let lambda = Partition::parse(lambda).map_err(|e| Failure::Usage(e.to_string()))?;
            let v = match (vector, profile) {
                (Some(v), None) => parse_q_list(v)?,
                (None, Some(path)) => Profile::parse(space.clone(), &read_file(path)?)?.weights().to_vec(),
                _ => return Err(Failure::Usage("exactly one of --vector or --profile is required".into())),
            };
            crate::linalg::check_len(space.dim(), v.len())?;
            let p = isotypic_projector_capped(&space, &lambda, max_n)?;
            Ok(format!("{}\n", format_vec(&crate::linalg::mat_vec(&p, &v))))
        }
        Command::Scaling(rule) => {
            let m = load_rule(rule, max_n)?;
            let catalog = subspace_catalog(m.ballots())?;
            Ok(scaling_report(&m, &catalog)?.to_text())
        }
        Command::Distance { x, y, n } => match (x, y, n) {
            (Some(x), Some(y), None) => {
                let (x, y) = (parse_order(x)?, parse_order(y)?);
                check_cap(x.degree(), max_n)?;
                Ok(format!("{}\n", transposition_distance(&x, &y)?))
            }
            (None, None, Some(n)) => {
                check_cap(*n, max_n)?;
                let table = distance_table(*n)?;
                let start = CyclicOrder::identity(*n);
                let space = build_ballot_space(BallotKind::Cyclic, *n, OrderingKind::Canonical)?;
                let mut counts: Vec<usize> = Vec::new();
                for i in 0..space.len() {
                    let d = table.distance(&start, space.order(i));
                    if counts.len() <= d {
                        counts.resize(d + 1, 0);
                    }
                    counts[d] += 1;
                }
                let mut out = String::from("distance\tcount\n");
                for (d, c) in counts.iter().enumerate() {
                    let _ = writeln!(out, "{d}\t{c}");
                }
                Ok(out)
            }
            _ => Err(Failure::Usage("give either --x and --y, or --n".into())),
        },
        Command::Classify { x, y, n } => match (x, y, n) {
            (Some(x), Some(y), None) => Ok(format!("{}\n", classify_pair(&parse_order(x)?, &parse_order(y)?)?)),
            (None, None, Some(n)) => {
                check_cap(*n, max_n)?;
                let mut out = String::from("name\tx\ty\tsize\n");
                for (class, size) in pair_orbits(*n)? {
                    let name = class.name.map_or_else(|| "-".to_string(), |p| p.to_string());
                    let (a, b) = &class.representative;
                    let _ = writeln!(out, "{name}\t{a}\t{b}\t{size}");
                }
                Ok(out)
            }
            _ => Err(Failure::Usage("give either --x and --y, or --n".into())),
        },
        Command::Mask { rule, target, decoys, magnitude } => {
            let m = load_rule(rule, max_n)?;
            let target = parse_order(target)?;
            let decoys = decoys
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(parse_order)
                .collect::<std::result::Result<Vec<_>, _>>()?;
            let magnitude = parse_q(magnitude).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(masking_profile(&m, &target, &decoys, &magnitude)?.to_tsv())
        }
    }
}
