use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use satlab::geometry::{self, Overlay};
use satlab::graphs::{self, DEFAULT_VERTEX_CAP};
use satlab::model::PositionMode;
use satlab::search::{self, SearchResult};
use satlab::{canonical_parse, canonical_serialize, posets, sequences};
use satlab::{Error, Mode, PlanarPointSet, Structure, Verdict, VerificationReport};

#[derive(Parser)]
#[command(name = "satlab", version, about = "Saturation and semisaturation toolkit")]
struct Cli {
    /// Worker threads for parallel verifiers (output does not depend on it).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one of the constructions and print it as canonical JSON.
    Construct(Params),
    /// Decide (semi)saturation of a structure read from --input.
    Verify(Params),
    /// Exhaustive search for the smallest (semi)saturated structure.
    Search(Params),
    /// Draw a point set (from --input, or constructed) as SVG.
    Render(Params),
    /// Evaluate the convex-position lower bound n - 1 + floor((n - 2) / d).
    Bound(Params),
    /// Sample the random graph coloring (requires --seed).
    Sample(Params),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Graph,
    Poset,
    Sequence,
    Cupcap,
    Convex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    /// Posets: chains below and above an antichain.
    Tower,
    /// Posets: two antichains around a chain plus a side antichain.
    Double,
    /// Posets: disjoint chains (saturated).
    Chains,
    /// Sequences: the smaller of the two semisaturated shapes.
    Semisat,
    /// Sequences: the shape with the long increasing runs.
    Increasing,
    /// Cups and caps: an n-cap.
    Cap,
    /// Cups and caps: an n-cup.
    Cup,
    /// Sequence search: every saturated permutation of length (k-1)(l-1).
    AllSaturated,
}

#[derive(Args)]
struct Params {
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Threshold(s); a comma-separated list for graphs.
    #[arg(long, value_delimiter = ',')]
    k: Vec<usize>,
    #[arg(long)]
    l: Option<usize>,
    /// Size parameter: convex n-sets, cap/cup size, search bound, toy sample size.
    #[arg(long)]
    n: Option<usize>,
    /// Dimension for the bound.
    #[arg(long)]
    d: Option<usize>,
    /// Number of colors for the sampler (default 2).
    #[arg(long)]
    c: Option<usize>,
    #[arg(long, default_value = "semisat")]
    mode: String,
    #[arg(long, value_enum)]
    variant: Option<Variant>,
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// Expected verdict; exit status 1 when the verdict differs.
    #[arg(long)]
    expect: Option<String>,
}

// Usage or input problems (exit 2).
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<Option<Verdict>, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure(msg.into())
}

impl Params {
    fn family(&self) -> Result<Family, Failure> {
        self.family.ok_or_else(|| usage("--family is required"))
    }

    fn k1(&self) -> Result<usize, Failure> {
        match self.k.as_slice() {
            [k] => Ok(*k),
            [] => Err(usage("--k is required")),
            _ => Err(usage("expected a single --k")),
        }
    }

    fn l(&self) -> Result<usize, Failure> {
        self.l.ok_or_else(|| usage("--l is required"))
    }

    fn n(&self) -> Result<usize, Failure> {
        self.n.ok_or_else(|| usage("--n is required"))
    }

    fn mode(&self) -> Result<Mode, Failure> {
        self.mode.parse::<Mode>().map_err(Failure::from)
    }

    fn emit(&self, text: &str) -> Result<(), Failure> {
        match &self.output {
            Some(path) => fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
            None => {
                println!("{text}");
                Ok(())
            }
        }
    }

    fn read_input(&self) -> Result<Structure, Failure> {
        let path = self.input.as_ref().ok_or_else(|| usage("--input is required"))?;
        let bytes = fs::read(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
        Ok(canonical_parse(&bytes)?)
    }

    fn reject_variant(&self) -> Result<(), Failure> {
        match self.variant {
            Some(_) => Err(usage("--variant does not apply here")),
            None => Ok(()),
        }
    }
}

fn construct(p: &Params) -> Result<Structure, Failure> {
    Ok(match (p.family()?, p.variant) {
        (Family::Graph, None) => {
            if p.k.is_empty() {
                return Err(usage("--k is required"));
            }
            graphs::construct_saturated_product(&p.k)?.into()
        }
        (Family::Poset, Some(Variant::Tower)) => posets::construct_semisat_tower(p.k1()?, p.l()?)?.into(),
        (Family::Poset, Some(Variant::Double)) => posets::construct_semisat_double(p.k1()?, p.l()?)?.into(),
        (Family::Poset, Some(Variant::Chains) | None) => posets::construct_saturated_chains(p.k1()?, p.l()?)?.into(),
        (Family::Sequence, Some(Variant::Semisat) | None) => {
            let (k, l) = (p.k1()?, p.l()?);
            check_pair(k, l, 2)?;
            sequences::construct_semisat(k, l).into()
        }
        (Family::Sequence, Some(Variant::Increasing)) => {
            let (k, l) = (p.k1()?, p.l()?);
            check_pair(k, l, 2)?;
            sequences::construct_semisat_increasing(k, l).into()
        }
        (Family::Cupcap, None) => geometry::construct_cupcap_semisat(p.k1()?, p.l()?)?.into(),
        (Family::Cupcap, Some(Variant::Cap)) => geometry::construct_cap(positive(p.n()?)?).into(),
        (Family::Cupcap, Some(Variant::Cup)) => geometry::construct_cup(positive(p.n()?)?).into(),
        (Family::Convex, None) => geometry::construct_convex_semisat(p.n()?)?.into(),
        _ => return Err(usage("this --variant does not apply to the family")),
    })
}

fn check_pair(k: usize, l: usize, min: usize) -> Result<(), Failure> {
    if k < min || l < min {
        return Err(Error::InvalidThreshold(format!("need k, l >= {min}, got k={k}, l={l}")).into());
    }
    Ok(())
}

fn positive(n: usize) -> Result<usize, Failure> {
    if n == 0 {
        return Err(Error::InvalidThreshold("need n >= 1".into()).into());
    }
    Ok(n)
}

fn verify(p: &Params) -> Result<VerificationReport, Failure> {
    p.reject_variant()?;
    let family = p.family()?;
    let mode = p.mode()?;
    let input = p.read_input()?;
    Ok(match (family, input) {
        (Family::Graph, Structure::Graph(g)) => graphs::verify(&g, &p.k, mode)?,
        (Family::Poset, Structure::Poset(q)) => posets::verify(&q, p.k1()?, p.l()?, mode),
        (Family::Sequence, Structure::Sequence(s)) => sequences::verify(&s, p.k1()?, p.l()?, mode),
        (Family::Sequence, Structure::Points(q)) => sequences::verify_points(&q, p.k1()?, p.l()?, mode)?,
        (Family::Cupcap, Structure::Points(q)) => geometry::verify_cupcap(&q, p.k1()?, p.l()?, mode)?,
        (Family::Convex, Structure::Points(q)) => {
            if mode != Mode::Semisat {
                return Err(usage("convex verification supports --mode semisat only"));
            }
            geometry::verify_convex(&q, p.n()?)?
        }
        (_, s) => return Err(usage(format!("a {} does not match the family", s.kind()))),
    })
}

fn search_cmd(p: &Params) -> Result<String, Failure> {
    let family = p.family()?;
    if p.variant == Some(Variant::AllSaturated) {
        if family != Family::Sequence {
            return Err(usage("all-saturated applies to sequences only"));
        }
        let all = search::all_saturated_sequences(p.k1()?, p.l()?)?;
        return Ok(serde_json::json!({ "count": all.len(), "permutations": all }).to_string());
    }
    p.reject_variant()?;
    let result: SearchResult = match family {
        Family::Graph => search::min_sat_graph(&p.k, p.mode()?, p.n.unwrap_or(5))?,
        Family::Poset => search::min_semisat_poset(p.k1()?, p.l()?, p.n.unwrap_or(search::POSET_MAX_N))?,
        Family::Sequence => search::min_semisat_sequence(p.k1()?, p.l()?, p.n.unwrap_or(search::SEQUENCE_MAX_N))?,
        _ => return Err(usage("search supports graph, poset and sequence")),
    };
    Ok(result.to_json().to_string())
}

fn render(p: &Params) -> Result<String, Failure> {
    let points: PlanarPointSet = match &p.input {
        Some(_) => match p.read_input()? {
            Structure::Points(q) => q,
            s => return Err(usage(format!("cannot render a {}", s.kind()))),
        },
        None => match construct(p)? {
            Structure::Points(q) => q,
            s => return Err(usage(format!("cannot render a {}", s.kind()))),
        },
    };
    let pts = points.points();
    let pick = |idx: Vec<usize>| idx.into_iter().map(|i| pts[i].clone()).collect::<Vec<_>>();
    let overlays = match points.mode() {
        PositionMode::Cupcap => vec![
            Overlay { points: pick(geometry::longest_cup(pts)?), closed: false },
            Overlay { points: pick(geometry::longest_cap(pts)?), closed: false },
        ],
        PositionMode::Convex => vec![Overlay { points: pick(geometry::convex_hull(pts)), closed: true }],
        PositionMode::Monotone => Vec::new(),
    };
    Ok(geometry::render_svg(&points, &overlays))
}

fn sample(p: &Params) -> Result<Structure, Failure> {
    p.reject_variant()?;
    if p.family()? != Family::Graph {
        return Err(usage("sample supports --family graph only"));
    }
    let seed = p.seed.ok_or_else(|| usage("--seed is required for sample"))?;
    let c = p.c.unwrap_or(2);
    if let Some(n) = p.n {
        return Ok(graphs::random_coloring(n, c, seed).into());
    }
    let cap = match std::env::var("SATLAB_VERTEX_CAP") {
        Ok(v) => v.trim().parse::<u64>().map_err(|_| usage(format!("SATLAB_VERTEX_CAP is not a number: {v:?}")))?,
        Err(_) => DEFAULT_VERTEX_CAP,
    };
    Ok(graphs::sample_random_semisat_candidate_capped(p.k1()?, c, seed, cap)?.into())
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Construct(p) => {
            p.emit(&canonical_serialize(&construct(p)?))?;
            Ok(None)
        }
        Command::Verify(p) => {
            let report = verify(p)?;
            p.emit(&report.to_json())?;
            Ok(Some(report.verdict))
        }
        Command::Search(p) => {
            p.emit(&search_cmd(p)?)?;
            Ok(None)
        }
        Command::Render(p) => {
            p.emit(&render(p)?)?;
            Ok(None)
        }
        Command::Bound(p) => {
            if p.family.is_some_and(|f| f != Family::Convex) {
                return Err(usage("bound applies to --family convex"));
            }
            let d = p.d.ok_or_else(|| usage("--d is required"))?;
            p.emit(&geometry::osat_convex_lower_bound(p.n()?, d)?.to_string())?;
            Ok(None)
        }
        Command::Sample(p) => {
            p.emit(&canonical_serialize(&sample(p)?))?;
            Ok(None)
        }
    }
}

impl Command {
    fn params(&self) -> &Params {
        match self {
            Command::Construct(p)
            | Command::Verify(p)
            | Command::Search(p)
            | Command::Render(p)
            | Command::Bound(p)
            | Command::Sample(p) => p,
        }
    }
}

#[cfg(feature = "parallel")]
fn set_jobs(jobs: Option<usize>) -> Result<(), Failure> {
    if let Some(n) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .map_err(|e| usage(format!("cannot start {n} workers: {e}")))?;
    }
    Ok(())
}

#[cfg(not(feature = "parallel"))]
fn set_jobs(_jobs: Option<usize>) -> Result<(), Failure> {
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let expected = match &cli.command.params().expect {
        None => None,
        Some(_) if !matches!(cli.command, Command::Verify(_)) => {
            eprintln!("error: --expect applies to verify only");
            return ExitCode::from(2);
        }
        Some(e) => match e.parse::<Verdict>() {
            Ok(v) => Some(v),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
    };
    let outcome = set_jobs(cli.jobs).and_then(|_| run(&cli));
    match (outcome, expected) {
        (Err(Failure(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        (Ok(Some(got)), Some(want)) if got != want => {
            eprintln!("verdict {got}, expected {want}");
            ExitCode::from(1)
        }
        _ => ExitCode::SUCCESS,
    }
}
