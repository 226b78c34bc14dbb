use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use corrpop::analytics::{self, DEFAULT_THRESHOLD};
use corrpop::error::{Error, Result};
use corrpop::lattice::{check_jordan_dedekind, export_dot, hasse_delta, hasse_gamma};
use corrpop::population::{pop_corr_with_budget, population_table_with_budget, Method};
use corrpop::realize::{realize_autocorrelation, realize_correlation};
use corrpop::sets::{cardinalities, enumerate_delta, enumerate_gamma};
use corrpop::words::{Budget, Correlation, BUDGET_ENV, DEFAULT_BUDGET};

#[derive(Debug, Parser)]
#[command(
    name = "corrpop",
    version,
    about = "Correlations of word pairs and their populations"
)]
struct Cli {
    /// Output format; not every command supports every format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest number of candidates a brute-force enumeration may visit.
    #[arg(long, global = true, env = BUDGET_ENV, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

fn sigma_arg(s: &str) -> std::result::Result<u32, String> {
    match s.parse::<u32>() {
        Ok(v) if v >= 2 => Ok(v),
        Ok(v) => Err(format!("alphabet size must be at least 2, got {v}")),
        Err(e) => Err(e.to_string()),
    }
}

fn range_arg(s: &str) -> std::result::Result<(usize, usize), String> {
    let (i, k) = s.split_once(':').ok_or("expected i:k")?;
    Ok((
        i.parse().map_err(|e| format!("{e}"))?,
        k.parse().map_err(|e| format!("{e}"))?,
    ))
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List Γₙ, the autocorrelations of length n.
    Gamma { n: usize },
    /// List Δₙ, the correlations of length n.
    Delta { n: usize },
    /// κₙ and δₙ for every length up to n.
    Card { n: usize },
    /// Population size of one correlation.
    Pop {
        #[arg(long)]
        corr: String,
        #[arg(long, value_parser = sigma_arg, default_value = "2")]
        sigma: u32,
        #[arg(long, default_value = "rec1")]
        method: Method,
    },
    /// Populations of every correlation of length n.
    PopTable {
        n: usize,
        /// Comma-separated alphabet sizes.
        #[arg(long, value_parser = sigma_arg, value_delimiter = ',', default_value = "2")]
        sigma: Vec<u32>,
        #[arg(long, default_value = "rec1")]
        method: Method,
    },
    /// A binary pair (or word, with --auto) realizing a correlation.
    Realize {
        bits: String,
        #[arg(long)]
        auto: bool,
    },
    /// Hasse diagram of Δₙ (or Γₙ with --gamma).
    Lattice {
        n: usize,
        #[arg(long)]
        gamma: bool,
        /// Write Graphviz output to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Compare the shortest and longest bottom-to-top chains.
        #[arg(long)]
        check_jd: bool,
    },
    /// Pairs grouped by the length of their longest border.
    Borders {
        n: usize,
        #[arg(long, value_parser = sigma_arg, default_value = "2")]
        sigma: u32,
        /// Inclusive length range i:k to sum.
        #[arg(long, value_parser = range_arg)]
        range: Option<(usize, usize)>,
    },
    /// Expected length of the longest border of a random pair.
    Expect {
        n: usize,
        #[arg(long, value_parser = sigma_arg, default_value = "2")]
        sigma: u32,
        /// Count pairs with u = v as having a border of length n.
        #[arg(long)]
        include_equal_pairs: bool,
        /// Threshold J of the asymptotic lower bound.
        #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
        threshold: usize,
    },
    /// Asymptotic population ratio bounds and exact ratios for 0^(n-j) s.
    Ratio {
        /// Autocorrelation s; "empty" for the empty one.
        #[arg(long)]
        suffix: String,
        #[arg(long, value_parser = sigma_arg, default_value = "2")]
        sigma: u32,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, default_value_t = analytics::DEFAULT_PRECISION)]
        precision: usize,
    },
    /// Check every counting route against the exhaustive oracles.
    Verify {
        n: usize,
        #[arg(long, value_parser = sigma_arg, default_value = "2")]
        sigma: u32,
    },
}

enum Failure {
    Usage(String),
    Run(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e)
    }
}

type Outcome = std::result::Result<String, Failure>;

fn parse_corr(text: &str) -> Result<Correlation> {
    text.parse()
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn unsupported(format: Format, command: &str) -> Failure {
    Failure::Usage(format!("format {format:?} is not available for {command}").to_lowercase())
}

fn list(items: &[Correlation], format: Format, command: &str) -> Outcome {
    match format {
        Format::Text | Format::Csv => Ok(items.iter().map(|c| format!("{c}\n")).collect()),
        Format::Json => Ok(json(&items)),
        Format::Dot => Err(unsupported(format, command)),
    }
}

fn run(cli: &Cli) -> Outcome {
    let budget = Budget::new(cli.budget);
    let format = cli.format;
    match &cli.command {
        Command::Gamma { n } => list(&enumerate_gamma(*n)?.members, format, "gamma"),
        Command::Delta { n } => list(&enumerate_delta(*n)?.members, format, "delta"),
        Command::Card { n } => {
            let rows = cardinalities(*n)?;
            match format {
                Format::Json => Ok(json(&rows)),
                Format::Text | Format::Csv => {
                    let mut out = String::from("n,kappa,delta\n");
                    for r in &rows {
                        let _ = writeln!(out, "{},{},{}", r.n, r.kappa, r.delta);
                    }
                    Ok(out)
                }
                Format::Dot => Err(unsupported(format, "card")),
            }
        }
        Command::Pop { corr, sigma, method } => {
            let t = parse_corr(corr)?;
            let p = pop_corr_with_budget(&t, *sigma, *method, &budget)?;
            match format {
                Format::Text => Ok(format!("{p}\n")),
                Format::Csv => Ok(format!(
                    "correlation,sigma,method,population\n{t},{sigma},{method},{p}\n"
                )),
                Format::Json => Ok(json(&serde_json::json!({
                    "correlation": t, "sigma": sigma, "method": method, "population": p,
                }))),
                Format::Dot => Err(unsupported(format, "pop")),
            }
        }
        Command::PopTable { n, sigma, method } => {
            let table = population_table_with_budget(*n, sigma, *method, &budget)?;
            match format {
                Format::Text | Format::Csv => Ok(table.to_csv()),
                Format::Json => Ok(json(&table)),
                Format::Dot => Err(unsupported(format, "pop-table")),
            }
        }
        Command::Realize { bits, auto } => {
            let t = parse_corr(bits)?;
            if *auto {
                let w = realize_autocorrelation(&t)?;
                match format {
                    Format::Text | Format::Csv => Ok(format!("{w}\n")),
                    Format::Json => Ok(json(&serde_json::json!({ "autocorrelation": t, "word": w }))),
                    Format::Dot => Err(unsupported(format, "realize")),
                }
            } else {
                let pair = realize_correlation(&t)?;
                match format {
                    Format::Text | Format::Csv => Ok(format!("{} {}\n", pair.u, pair.v)),
                    Format::Json => Ok(json(&serde_json::json!({ "correlation": t, "u": pair.u, "v": pair.v }))),
                    Format::Dot => Err(unsupported(format, "realize")),
                }
            }
        }
        Command::Lattice {
            n,
            gamma,
            dot,
            check_jd,
        } => {
            let diagram = if *gamma { hasse_gamma(*n)? } else { hasse_delta(*n)? };
            let dot_text = export_dot(&diagram);
            if let Some(path) = dot {
                std::fs::write(path, &dot_text).map_err(|e| {
                    Failure::Run(Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))
                })?;
            }
            let jd = if *check_jd {
                Some(check_jordan_dedekind(&diagram)?)
            } else {
                None
            };
            match format {
                Format::Dot => Ok(dot_text),
                Format::Json => Ok(json(&serde_json::json!({ "diagram": diagram, "jordan_dedekind": jd }))),
                Format::Text | Format::Csv => {
                    let mut out = format!(
                        "{} nodes, {} covering edges\n",
                        diagram.nodes.len(),
                        diagram.edges.len()
                    );
                    for &(lo, hi) in &diagram.edges {
                        let _ = writeln!(out, "{} -> {}", diagram.nodes[lo], diagram.nodes[hi]);
                    }
                    if let Some(jd) = jd {
                        let (short, long) = jd.lengths();
                        let verdict = if jd.holds { "holds" } else { "fails" };
                        let _ = writeln!(out, "Jordan-Dedekind {verdict}: chains of length {short} and {long}");
                        let chain = |c: &[Correlation]| c.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" < ");
                        let _ = writeln!(out, "shortest: {}", chain(&jd.shortest));
                        let _ = writeln!(out, "longest:  {}", chain(&jd.longest));
                    }
                    Ok(out)
                }
            }
        }
        Command::Borders { n, sigma, range } => {
            let table = analytics::longest_border_counts(*n, *sigma)?;
            if let Some((i, k)) = range {
                let total = table.range(*i, *k)?;
                return match format {
                    Format::Text => Ok(format!("{total}\n")),
                    Format::Csv => Ok(format!("i,k,count\n{i},{k},{total}\n")),
                    Format::Json => Ok(json(
                        &serde_json::json!({ "n": n, "sigma": sigma, "i": i, "k": k, "count": total }),
                    )),
                    Format::Dot => Err(unsupported(format, "borders")),
                };
            }
            match format {
                Format::Text | Format::Csv => Ok(table.to_csv()),
                Format::Json => Ok(json(&table)),
                Format::Dot => Err(unsupported(format, "borders")),
            }
        }
        Command::Expect {
            n,
            sigma,
            include_equal_pairs,
            threshold,
        } => {
            let e = analytics::expected_longest_border(*n, *sigma, *include_equal_pairs, *threshold)?;
            match format {
                Format::Text => Ok(format!(
                    "E(X) = {} ({:.6})\nlower bound at this n (J = {}): {}\nasymptotic range: [{:.6}, {}]\n",
                    e.value, e.value_f64, e.threshold, e.finite_lower_bound, e.asymptotic_lower_bound, e.upper_bound
                )),
                Format::Csv => Ok(format!(
                    "n,sigma,expectation,expectation_f64,upper_bound\n{},{},{},{:.12},{}\n",
                    e.n, e.sigma, e.value, e.value_f64, e.upper_bound
                )),
                Format::Json => Ok(json(&e)),
                Format::Dot => Err(unsupported(format, "expect")),
            }
        }
        Command::Ratio {
            suffix,
            sigma,
            n_max,
            precision,
        } => {
            let s = parse_corr(suffix)?;
            let bounds = analytics::asymptotic_constant(&s, *sigma, *precision)?;
            let mut probe = analytics::ratio_convergence_probe(&s, *sigma, *n_max)?;
            for p in &mut probe.points {
                p.within_bounds = bounds.contains(p.ratio);
            }
            probe.bounds = bounds;
            let b = &probe.bounds;
            match format {
                Format::Text => {
                    let mut out = format!(
                        "c = {:.12}  (tail bound {:.1e}, second route {:.12})\nbounds: [{:.3}, {:.3})\n",
                        b.c, b.series_tail_bound, b.c_limit, b.lower, b.upper
                    );
                    for p in &probe.points {
                        let mark = if p.within_bounds { "" } else { "  outside" };
                        let _ = writeln!(out, "n={:<3} {:.6}{mark}", p.n, p.ratio);
                    }
                    Ok(out)
                }
                Format::Csv => {
                    let mut out = String::from("n,correlation,population,ratio,within_bounds\n");
                    for p in &probe.points {
                        let _ = writeln!(
                            out,
                            "{},{},{},{:.12},{}",
                            p.n, p.correlation, p.population, p.ratio, p.within_bounds
                        );
                    }
                    Ok(out)
                }
                Format::Json => Ok(json(&probe)),
                Format::Dot => Err(unsupported(format, "ratio")),
            }
        }
        Command::Verify { n, sigma } => {
            let report = corrpop::verify::verify(*n, *sigma, &budget)?;
            let body = match format {
                Format::Text => format!("{report}\n"),
                Format::Json => json(&report),
                Format::Csv => {
                    let mut out = String::from("check,passed\n");
                    for c in &report.checks {
                        let _ = writeln!(out, "{},{}", c.name, c.passed);
                    }
                    out
                }
                Format::Dot => return Err(unsupported(format, "verify")),
            };
            if report.passed() {
                Ok(body)
            } else {
                print!("{body}");
                Err(Failure::Run(Error::InvalidArgument("verification failed".into())))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_budget() { 4 } else { 3 })
        }
    }
}
