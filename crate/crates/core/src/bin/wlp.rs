use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use wlp_core::bounds::sigma;
use wlp_core::constructions::{construct_failing_ideal, family_ideal, ConstructionRecipe, Family};
use wlp_core::hilbert::hilbert_table;
use wlp_core::inverse::inverse_kernel_basis;
use wlp_core::linalg::RankPolicy;
use wlp_core::monomial::MonomialIdeal;
use wlp_core::verify::{run_campaign, write_report, CampaignConfig, CampaignReport, OutcomeKind, DEFAULT_ORBIT_CAP};
use wlp_core::witness::catalog_entry;
use wlp_core::wlp::{wlp_report, WlpOptions, WlpReport};

const EXIT_DOMAIN: u8 = 1;
const EXIT_DISCREPANCY: u8 = 2;
const EXIT_USAGE: u8 = 64;

/// Weak Lefschetz computations for artinian equigenerated monomial algebras.
#[derive(Parser, Debug)]
#[command(name = "wlp", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Rank policy; by default certified up to 400 rows or columns, fast above.
    #[arg(long, global = true)]
    policy: Option<RankPolicy>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Write the structured report here as well.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert function of S/I.
    Hilbert { ideal: String },
    /// Decide the WLP of S/I.
    Wlp { ideal: String },
    /// Build an ideal failing the WLP with mu generators, or a named family.
    Construct {
        n: Option<u32>,
        d: Option<u32>,
        mu: Option<u64>,
        #[arg(long)]
        family: Option<Family>,
    },
    /// The set of generator counts admitting a WLP failure.
    Sigma { n: u32, d: u32 },
    /// Dual polynomials of degree i annihilated by I and l.
    InverseKernel {
        ideal: String,
        degree: u32,
        /// Print a basis, not just the dimension.
        #[arg(long)]
        basis: bool,
    },
    /// Check a catalog dual witness.
    Witness { name: String, n: u32, d: u32 },
    /// Existence and exhaustive sharpness over (n, d) pairs.
    Verify {
        /// e.g. "(3,3),(4,2)"; defaults to the desk campaign.
        #[arg(long)]
        pairs: Option<String>,
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
        orbit_cap: usize,
    },
}

enum Failure {
    Domain(String),
    Usage(String),
    Discrepancy(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(t) = std::env::var("WLP_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_DOMAIN)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Discrepancy(m)) => {
            eprintln!("DISCREPANCY: {m}");
            ExitCode::from(EXIT_DISCREPANCY)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let g = &cli.global;
    let opts = WlpOptions {
        policy: g.policy,
        seed: g.seed,
    };
    match cli.command {
        Command::Hilbert { ideal } => {
            let ideal = parse_ideal(&ideal)?;
            let t = hilbert_table(&ideal)?;
            emit(g, &json!({"ideal": ideal.to_text(), "values": t.values, "series": t.series_string()}), || {
                let mut s = String::new();
                for (i, v) in t.values.iter().enumerate() {
                    s += &format!("{i:>4}  {v}\n");
                }
                s + &t.series_string()
            })
        }
        Command::Wlp { ideal } => {
            let ideal = parse_ideal(&ideal)?;
            let r = wlp_report(&ideal, opts)?;
            let structured = json!({"report": r, "policy": g.policy, "seed": g.seed});
            emit(g, &structured, || wlp_table(&r))
        }
        Command::Construct { n, d, mu, family } => {
            let recipe = match (family, n, d) {
                (Some(f), Some(n), Some(d)) => family_ideal(f, n, d, mu)?,
                (Some(_), _, _) => return Err(Failure::Usage("construct --family TAG needs n and d".into())),
                (None, Some(n), Some(d)) => {
                    let mu = mu.ok_or_else(|| Failure::Usage("construct needs n d mu".into()))?;
                    construct_failing_ideal(n, d, mu)?
                }
                _ => return Err(Failure::Usage("construct needs n d mu or --family TAG n d".into())),
            };
            emit(g, &recipe, || recipe_text(&recipe))
        }
        Command::Sigma { n, d } => {
            let s = sigma(n, d)?;
            emit(g, &json!({"n": n, "d": d, "sigma": s.to_string(), "size": s.len()}), || s.to_string())
        }
        Command::InverseKernel { ideal, degree, basis } => {
            let ideal = parse_ideal(&ideal)?;
            let b = inverse_kernel_basis(&ideal, degree);
            let texts: Vec<String> = b.iter().map(|f| f.to_text_with('X')).collect();
            let structured = json!({"ideal": ideal.to_text(), "degree": degree, "dimension": b.len(), "basis": if basis { Some(&texts) } else { None }});
            emit(g, &structured, || {
                let mut s = format!("kernel dimension in degree {degree}: {}", b.len());
                if basis {
                    for t in &texts {
                        s += &format!("\n  {t}");
                    }
                }
                s
            })
        }
        Command::Witness { name, n, d } => {
            let entry = catalog_entry(&name)?;
            let inst = entry.build(n, d)?;
            let checks = inst.check();
            let polys: Vec<_> = inst
                .polynomials
                .iter()
                .zip(&checks)
                .map(|(f, ok)| json!({"polynomial": f.to_text_with('X'), "degree": f.homogeneous_degree(), "member": ok}))
                .collect();
            let structured = json!({"family": name, "n": n, "d": d, "ideal": inst.ideal.to_text(), "witnesses": polys});
            emit(g, &structured, || {
                let mut s = format!("ideal: {}", inst.ideal.to_text());
                for (f, ok) in inst.polynomials.iter().zip(&checks) {
                    s += &format!("\n{}  {}", if *ok { "IN INVERSE SYSTEM" } else { "NOT A MEMBER" }, f.to_text_with('X'));
                }
                s
            })?;
            if checks.iter().all(|&b| b) {
                Ok(())
            } else {
                Err(Failure::Domain("a witness is not in the inverse system".into()))
            }
        }
        Command::Verify { pairs, orbit_cap } => {
            let mut config = CampaignConfig {
                orbit_cap,
                policy: g.policy,
                seed: g.seed,
                ..Default::default()
            };
            if let Some(p) = pairs {
                config.pairs = parse_pairs(&p).map_err(Failure::Usage)?;
            }
            let report = run_campaign(&config)?;
            if let Some(path) = &g.out {
                write_report(&report, path)?;
            }
            let g2 = Global { out: None, policy: g.policy, seed: g.seed, format: g.format };
            emit(&g2, &report, || campaign_text(&report))?;
            let first = report
                .discrepancies()
                .next()
                .map(|r| format!("({},{}) mu={}: {}", r.pair.0, r.pair.1, r.mu, r.detail.clone().unwrap_or_default()));
            match first {
                Some(m) => Err(Failure::Discrepancy(m)),
                None => Ok(()),
            }
        }
    }
}

fn parse_ideal(text: &str) -> Result<MonomialIdeal, Failure> {
    let ideal = MonomialIdeal::parse(text)?;
    if !ideal.is_artinian() {
        return Err(Failure::Domain(format!("({}) is not artinian: some x_i^d is missing", ideal.to_text())));
    }
    Ok(ideal)
}

fn parse_pairs(text: &str) -> Result<Vec<(u32, u32)>, String> {
    let nums: Vec<u32> = text
        .split(|c: char| !c.is_ascii_digit())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|e| format!("{s}: {e}")))
        .collect::<Result<_, _>>()?;
    if nums.is_empty() || nums.len() % 2 == 1 {
        return Err(format!("cannot read (n,d) pairs from {text:?}"));
    }
    Ok(nums.chunks(2).map(|c| (c[0], c[1])).collect())
}

fn emit<T: Serialize>(g: &Global, structured: &T, human: impl FnOnce() -> String) -> Outcome {
    let json = serde_json::to_string_pretty(structured)?;
    if let Some(path) = &g.out {
        std::fs::write(path, json.clone() + "\n")?;
    }
    match g.format {
        Format::Human => println!("{}", human()),
        Format::Structured => println!("{json}"),
    }
    Ok(())
}

fn wlp_table(r: &WlpReport) -> String {
    let mut s = format!("ideal: {}\n", r.ideal);
    s += "   i  dim A_i  dim A_i+1  rank  expected  policy     certification\n";
    for rec in &r.records {
        s += &format!(
            "{:>4}  {:>7}  {:>9}  {:>4}  {:>8}  {:<9}  {:?}{}\n",
            rec.degree,
            rec.dim_source,
            rec.dim_target,
            rec.rank,
            rec.expected_rank,
            format!("{:?}", rec.policy).to_lowercase(),
            rec.certification,
            if rec.maximal { "" } else { "  <- not maximal" }
        );
    }
    s + &r.verdict_line()
}

fn recipe_text(r: &ConstructionRecipe) -> String {
    let lineage: Vec<&str> = r.lineage().iter().map(|f| f.tag()).collect();
    let mut s = format!("{}\nfamily: {}\nn = {}, d = {}, mu = {}\n", r.ideal.to_text(), lineage.join(" <- "), r.n, r.d, r.mu);
    for (k, v) in &r.extras {
        s += &format!("{k} = {v}\n");
    }
    s += &format!("rationale: {}\n", r.rationale);
    for w in &r.witnesses {
        s += &format!("{:?} witness: {}\n", w.kind, w.text());
    }
    s + &r.expected_failure_text()
}

fn campaign_text(rep: &CampaignReport) -> String {
    let mut s = String::new();
    for p in &rep.pairs {
        s += &format!("(n,d) = ({},{})  Sigma = {}  mu in [{}, {}]\n", p.n, p.d, p.sigma, p.mu_range.0, p.mu_range.1);
        for r in &p.records {
            let what = match r.outcome {
                OutcomeKind::ConstructedAndFailed => format!(
                    "fails at degree {} ({}) via {}",
                    r.failure_degree.map_or("?".into(), |d| d.to_string()),
                    r.mode.map_or("?".into(), |m| m.to_string()),
                    r.recipe.as_ref().map_or("?", |x| x.family.tag())
                ),
                OutcomeKind::AllOrbitsHaveWlp => format!("all {} orbits have the WLP", r.orbit_count.unwrap_or(0)),
                OutcomeKind::Skipped => format!("skipped: {}", r.detail.clone().unwrap_or_default()),
                OutcomeKind::Discrepancy => format!("DISCREPANCY: {}", r.detail.clone().unwrap_or_default()),
            };
            let cert = match r.certified {
                Some(true) => "exact",
                Some(false) => "probabilistic",
                None => "-",
            };
            s += &format!("  mu = {:>3}  {:<13}  {what}\n", r.mu, cert);
        }
    }
    let t = &rep.totals;
    s + &format!(
        "constructed {}, sharpness {}, skipped {}, discrepancies {}",
        t.constructed, t.all_orbits_wlp, t.skipped, t.discrepancies
    )
}
