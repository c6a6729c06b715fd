//! Command-line front end: parse ideal or system files, dispatch the
//! computations, and print human-readable or JSON results.
//!
//! Exit codes: 0 on success, 1 on input/parse errors, 2 on unsupported
//! parameter combinations.

mod format;

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use koszul::hilbert;
use koszul::monomial::{MonomialIdeal, Multidegree};
use koszul::mvtree::{self, PivotStrategy};
use koszul::reliability::{self, CoherentSystem};
use koszul::resolution;
use koszul::Coeff;
use serde_json::json;

use format::{
    betti_json, default_names, kpoly_json, monomial_string, parse_ideal, parse_paths,
    print_ideal, tree_json, unipoly_json, unipoly_string, IdealFile,
};

#[derive(Parser)]
#[command(name = "koszul", version, about = "Homological invariants of monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    #[value(alias = "lex_first")]
    LexFirst,
    #[value(alias = "lex_last")]
    LexLast,
    #[value(alias = "deglex_first")]
    DeglexFirst,
    #[value(alias = "deglex_last")]
    DeglexLast,
    #[value(alias = "degrevlex_first")]
    DegrevlexFirst,
    #[value(alias = "degrevlex_last")]
    DegrevlexLast,
    #[value(alias = "max_exponent")]
    MaxExponent,
}

impl From<StrategyArg> for PivotStrategy {
    fn from(value: StrategyArg) -> Self {
        match value {
            StrategyArg::LexFirst => PivotStrategy::LexFirst,
            StrategyArg::LexLast => PivotStrategy::LexLast,
            StrategyArg::DeglexFirst => PivotStrategy::DeglexFirst,
            StrategyArg::DeglexLast => PivotStrategy::DeglexLast,
            StrategyArg::DegrevlexFirst => PivotStrategy::DegrevlexFirst,
            StrategyArg::DegrevlexLast => PivotStrategy::DegrevlexLast,
            StrategyArg::MaxExponent => PivotStrategy::MaxExponent,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ResolutionKind {
    Taylor,
    Lyubeznik,
    Mv,
    Minimal,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SpecializeMode {
    /// Reliability variable: substitute every x_i by p.
    P,
    /// Graded Hilbert numerator: collect by total degree.
    T,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DecomposeKind {
    Stanley,
    Irreducible,
    Primary,
}

#[derive(Subcommand)]
enum Command {
    /// Betti bounds from a Mayer-Vietoris tree; `--exact` resolves every
    /// undecided multidegree.
    Betti {
        file: String,
        #[arg(long, value_enum, default_value = "lex-last")]
        strategy: StrategyArg,
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        json: bool,
        /// Expand sibling subtrees concurrently (identical output).
        #[arg(long)]
        parallel: bool,
    },
    /// Dump the Mayer-Vietoris tree.
    Mvt {
        file: String,
        #[arg(long, value_enum, default_value = "lex-last")]
        strategy: StrategyArg,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        parallel: bool,
    },
    /// Build a free resolution.
    Resolution {
        file: String,
        #[arg(long, value_enum, default_value = "minimal")]
        kind: ResolutionKind,
        #[arg(long, value_enum, default_value = "lex-last")]
        strategy: StrategyArg,
        #[arg(long)]
        json: bool,
    },
    /// K-polynomial of the ideal, optionally specialized to one variable.
    Hilbert {
        file: String,
        #[arg(long, value_enum)]
        specialize: Option<SpecializeMode>,
        #[arg(long)]
        json: bool,
    },
    /// Stanley, irreducible or primary decomposition.
    Decompose {
        file: String,
        #[arg(long, value_enum, default_value = "irreducible")]
        kind: DecomposeKind,
        #[arg(long)]
        json: bool,
    },
    /// Construct a family ideal (and its closed-form Betti numbers where
    /// available).
    Family {
        #[arg(long)]
        name: String,
        /// Comma-separated integer parameters.
        #[arg(long)]
        params: String,
        #[arg(long)]
        json: bool,
    },
    /// Reliability polynomial of a coherent system from its minimal paths.
    Reliability {
        #[arg(long)]
        paths_file: String,
        /// Bonferroni truncation level; omitted means the exact polynomial.
        #[arg(long)]
        bound_r: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            let unsupported = e.downcast_ref::<Unsupported>().is_some();
            ExitCode::from(if unsupported { 2 } else { 1 })
        }
    }
}

#[derive(Debug)]
struct Unsupported(String);

impl std::fmt::Display for Unsupported {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Unsupported {}

fn unsupported(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(Unsupported(msg.into()))
}

fn load_ideal(path: &str) -> anyhow::Result<IdealFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read `{path}`: {e}"))?;
    // a paths file (component header) also describes an ideal: its rows are
    // the exponent vectors of the minimal generators
    let header_word = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .and_then(|l| l.split_whitespace().next());
    let file = if header_word == Some("components") {
        let (names, rows) = parse_paths(&text)?;
        let distinct: std::collections::BTreeSet<_> = rows.iter().cloned().collect();
        let n = names.len();
        let count = rows.len();
        let ideal = koszul::monomial::min_generators(n, rows);
        IdealFile {
            names,
            reduced: ideal.num_gens() < distinct.len() || distinct.len() < count,
            ideal,
        }
    } else {
        parse_ideal(&text)?
    };
    if file.reduced {
        eprintln!("warning: generators were not minimal; reduced to the minimal set");
    }
    Ok(file)
}

fn betti_lines(names: &[String], map: &BTreeMap<(usize, Multidegree), usize>) -> String {
    let mut out = String::new();
    for ((i, m), mult) in map {
        out.push_str(&format!("beta[{i}] {} x {}\n", monomial_string(names, m), mult));
    }
    let totals = resolution::betti_totals(map);
    out.push_str(&format!(
        "totals {}\n",
        totals.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
    ));
    out
}

fn run(command: Command) -> anyhow::Result<()> {
    match command {
        Command::Betti { file, strategy, exact, json, parallel } => {
            let f = load_ideal(&file)?;
            let strategy: PivotStrategy = strategy.into();
            let tree = if parallel {
                mvtree::build_tree_parallel(&f.ideal, strategy)
            } else {
                mvtree::build_tree(&f.ideal, strategy)
            };
            let bounds = mvtree::relevant_betti_bounds(&tree);
            if exact {
                let map = mvtree::exact_betti(&f.ideal, strategy);
                if json {
                    println!("{}", json!({"betti": betti_json(&map)}));
                } else {
                    print!("{}", betti_lines(&f.names, &map));
                }
            } else if json {
                let upper: BTreeMap<(usize, Multidegree), usize> =
                    bounds.upper.iter().map(|(k, v)| (k.clone(), *v)).collect();
                let lower: BTreeMap<(usize, Multidegree), usize> =
                    bounds.lower.iter().map(|k| (k.clone(), 1)).collect();
                println!(
                    "{}",
                    json!({
                        "upper": betti_json(&upper),
                        "lower": betti_json(&lower),
                        "undecided": bounds
                            .undecided_entries()
                            .iter()
                            .map(|(i, m)| json!({"i": i, "multidegree": m.exps()}))
                            .collect::<Vec<_>>(),
                    })
                );
            } else {
                println!("lower bounds (certain Betti numbers):");
                for (i, m) in &bounds.lower {
                    println!("  beta[{i}] {} x 1", monomial_string(&f.names, m));
                }
                println!("upper bounds (relevant-node counts):");
                for ((i, m), c) in &bounds.upper {
                    println!("  beta[{i}] {} x {c}", monomial_string(&f.names, m));
                }
                let undecided = bounds.undecided_entries();
                if undecided.is_empty() {
                    println!("no repeated multidegrees: bounds are exact");
                    let totals = bounds.upper_totals();
                    println!(
                        "totals {}",
                        totals.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
                    );
                } else {
                    println!("undecided entries (rerun with --exact to settle):");
                    for (i, m) in undecided {
                        println!("  beta[{i}] {}", monomial_string(&f.names, &m));
                    }
                }
            }
        }
        Command::Mvt { file, strategy, json, parallel } => {
            let f = load_ideal(&file)?;
            let strategy: PivotStrategy = strategy.into();
            let tree = if parallel {
                mvtree::build_tree_parallel(&f.ideal, strategy)
            } else {
                mvtree::build_tree(&f.ideal, strategy)
            };
            if json {
                println!("{}", json!({"tree": tree_json(&tree)}));
            } else {
                let mut nodes: Vec<&mvtree::MVNode> = tree.nodes().iter().collect();
                nodes.sort_by_key(|n| n.position.clone());
                for node in nodes {
                    let gens: Vec<String> =
                        node.gens.iter().map(|g| monomial_string(&f.names, g)).collect();
                    println!("({}, {}) {}", node.position, node.dimension, gens.join(", "));
                }
            }
        }
        Command::Resolution { file, kind, strategy, json } => {
            let f = load_ideal(&file)?;
            let res: resolution::FreeResolution<Coeff> = match kind {
                ResolutionKind::Taylor => resolution::taylor(&f.ideal),
                ResolutionKind::Lyubeznik => resolution::lyubeznik(f.ideal.n(), f.ideal.gens()),
                ResolutionKind::Mv => {
                    let tree = mvtree::build_tree(&f.ideal, strategy.into());
                    resolution::mv_resolution(&tree)
                }
                ResolutionKind::Minimal => resolution::minimize(&resolution::taylor(&f.ideal)),
            };
            if json {
                let modules: Vec<Vec<Vec<u64>>> = res
                    .modules()
                    .iter()
                    .map(|level| level.iter().map(|m| m.exps().to_vec()).collect())
                    .collect();
                println!(
                    "{}",
                    json!({
                        "length": res.length(),
                        "size": res.size(),
                        "minimal": res.is_minimal(),
                        "modules": modules,
                    })
                );
            } else {
                println!("length {}", res.length());
                println!("size {} (with augmentation {})", res.size(), res.size_with_augmentation());
                println!("minimal {}", res.is_minimal());
                for (d, level) in res.modules().iter().enumerate() {
                    let labels: Vec<String> =
                        level.iter().map(|m| monomial_string(&f.names, m)).collect();
                    println!("P_{d} (rank {}): {}", level.len(), labels.join(", "));
                }
            }
        }
        Command::Hilbert { file, specialize, json } => {
            let f = load_ideal(&file)?;
            let k = hilbert::k_poly_from_lattice(&f.ideal);
            match specialize {
                Some(mode) => {
                    let p = k.specialize();
                    let var = match mode {
                        SpecializeMode::P => "p",
                        SpecializeMode::T => "t",
                    };
                    if json {
                        println!("{}", json!({"polynomial": unipoly_json(&p), "variable": var}));
                    } else {
                        println!("{}", unipoly_string(&p, var));
                    }
                }
                None => {
                    if json {
                        println!("{}", json!({"k_polynomial": kpoly_json(&k)}));
                    } else {
                        for (m, c) in k.coeffs() {
                            println!("{c:+} {}", monomial_string(&f.names, m));
                        }
                    }
                }
            }
        }
        Command::Decompose { file, kind, json } => {
            let f = load_ideal(&file)?;
            decompose(&f, kind, json)?;
        }
        Command::Family { name, params, json } => {
            family(&name, &params, json)?;
        }
        Command::Reliability { paths_file, bound_r, json } => {
            let text = std::fs::read_to_string(&paths_file)
                .map_err(|e| anyhow::anyhow!("cannot read `{paths_file}`: {e}"))?;
            let (names, rows) = parse_paths(&text)?;
            let (system, minimized) = CoherentSystem::new(names.len(), rows);
            if minimized {
                eprintln!("warning: points were not an antichain; reduced to minimal points");
            }
            match bound_r {
                None => {
                    let r = reliability::reliability_polynomial(&system);
                    if json {
                        println!("{}", json!({"reliability": unipoly_json(&r)}));
                    } else {
                        println!("R(p) = {}", unipoly_string(&r, "p"));
                    }
                }
                Some(r) => {
                    if r == 0 || r > system.minimal_points().len() {
                        return Err(unsupported(format!(
                            "bound level must be between 1 and {}",
                            system.minimal_points().len()
                        )));
                    }
                    let bound = reliability::bonferroni_bounds(&system, r);
                    let side = match bound.side {
                        reliability::BoundSide::Upper => "upper",
                        reliability::BoundSide::Lower => "lower",
                    };
                    if json {
                        println!(
                            "{}",
                            json!({
                                "r": bound.r,
                                "side": side,
                                "sets_used": bound.sets_used.to_string(),
                                "bound": unipoly_json(&bound.polynomial),
                            })
                        );
                    } else {
                        println!(
                            "r={} ({side} bound, {} sets): {}",
                            bound.r,
                            bound.sets_used,
                            unipoly_string(&bound.polynomial, "p")
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn decompose(f: &IdealFile, kind: DecomposeKind, json: bool) -> anyhow::Result<()> {
    use koszul::decomp;
    match kind {
        DecomposeKind::Stanley => {
            let s = decomp::stanley_decomposition(&f.ideal);
            if json {
                let cones: Vec<serde_json::Value> = s
                    .cones
                    .iter()
                    .map(|(b, fr)| json!({"base": b.exps(), "free": fr}))
                    .collect();
                println!("{}", json!({"cones": cones, "dimension": s.dimension()}));
            } else {
                for (base, free) in &s.cones {
                    if free.is_empty() {
                        println!("{}", monomial_string(&f.names, base));
                    } else {
                        let vars: Vec<String> =
                            free.iter().map(|&v| f.names[v].clone()).collect();
                        println!("{} * k[{}]", monomial_string(&f.names, base), vars.join(", "));
                    }
                }
                println!("dimension {}", s.dimension());
            }
        }
        DecomposeKind::Irreducible => {
            let comps =
                decomp::irreducible_decomposition(&f.ideal, decomp::IrreducibleRoute::ViaClosure);
            if json {
                let list: Vec<serde_json::Value> =
                    comps.iter().map(|c| json!(c.0.exps())).collect();
                println!("{}", json!({"components": list}));
            } else {
                for c in comps {
                    let gens: Vec<String> = c
                        .as_ideal()
                        .gens()
                        .iter()
                        .map(|g| monomial_string(&f.names, g))
                        .collect();
                    println!("<{}>", gens.join(", "));
                }
            }
        }
        DecomposeKind::Primary => {
            let comps = decomp::primary_decomposition(&f.ideal);
            if json {
                let list: Vec<serde_json::Value> = comps
                    .iter()
                    .map(|c| {
                        json!({
                            "generators": c.ideal.gens().iter().map(|g| g.exps().to_vec()).collect::<Vec<_>>(),
                            "radical_support": c.radical_support,
                        })
                    })
                    .collect();
                println!("{}", json!({"components": list}));
            } else {
                for c in comps {
                    let gens: Vec<String> = c
                        .ideal
                        .gens()
                        .iter()
                        .map(|g| monomial_string(&f.names, g))
                        .collect();
                    let radical: Vec<String> =
                        c.radical_support.iter().map(|&v| f.names[v].clone()).collect();
                    println!("<{}>  radical <{}>", gens.join(", "), radical.join(", "));
                }
            }
        }
    }
    Ok(())
}

fn family(name: &str, params: &str, json: bool) -> anyhow::Result<()> {
    use koszul::families;
    let values: Vec<u64> = params
        .split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|e| anyhow::anyhow!("bad parameter `{t}`: {e}")))
        .collect::<anyhow::Result<_>>()?;
    let arg = |i: usize| -> anyhow::Result<u64> {
        values
            .get(i)
            .copied()
            .ok_or_else(|| unsupported(format!("family `{name}` needs more parameters")))
    };
    let (ideal, betti): (MonomialIdeal, Option<Vec<u128>>) = match name {
        "k_out_of_n" => {
            let (k, n) = (arg(0)? as usize, arg(1)? as usize);
            if k == 0 || k > n {
                return Err(unsupported("need 1 <= k <= n"));
            }
            (families::k_out_of_n(k, n), Some(families::betti_k_out_of_n(k, n)))
        }
        "consecutive" => {
            let (k, n) = (arg(0)? as usize, arg(1)? as usize);
            if k == 0 || k > n {
                return Err(unsupported("need 1 <= k <= n"));
            }
            (families::consecutive(k, n), Some(families::betti_consecutive(k, n)))
        }
        "cyclic" => {
            let (k, n) = (arg(0)? as usize, arg(1)? as usize);
            if k == 0 || k > n {
                return Err(unsupported("need 1 <= k <= n"));
            }
            (families::cyclic(k, n), None)
        }
        "multistate" => {
            let (n, k, cap) = (arg(0)? as usize, arg(1)?, arg(2)?);
            if cap == 0 {
                return Err(unsupported("need cap >= 1"));
            }
            (families::multistate(n, k, cap), Some(families::betti_tail(n, k, cap)))
        }
        "prime_power" => {
            let (n, k) = (arg(0)? as usize, arg(1)?);
            let gens = families::prime_power_ideal(n, k);
            (MonomialIdeal::new(n, gens), Some(families::betti_prime_power(n, k)))
        }
        "valla" => {
            let (n, a, b) = (arg(0)? as usize, arg(1)?, arg(2)?);
            if n < 2 || a < b || b == 0 {
                return Err(unsupported("need n >= 2 and a >= b >= 1"));
            }
            let table = families::betti_valla(n, a, b);
            (families::valla(n, a, b), Some(families::betti_totals_u128(&table)))
        }
        "ferrers" => {
            if values.is_empty() || values.windows(2).any(|w| w[0] < w[1]) || *values.last().unwrap() == 0 {
                return Err(unsupported("ferrers needs a weakly decreasing positive partition"));
            }
            let lambda = families::FerrersPartition::new(values.clone());
            (families::ferrers(&lambda), Some(families::betti_ferrers(&lambda)))
        }
        "series_parallel" => {
            let rs: Vec<usize> = values.iter().map(|&v| v as usize).collect();
            if rs.contains(&0) {
                return Err(unsupported("series_parallel blocks must be positive"));
            }
            let ideal = koszul::families::network_ideal(&families::pure_series_parallel(&rs));
            (ideal, Some(families::betti_series_parallel(&rs)))
        }
        other => return Err(unsupported(format!("unknown family `{other}`"))),
    };
    let names = default_names(ideal.n());
    if json {
        println!(
            "{}",
            json!({
                "generators": ideal.gens().iter().map(|g| g.exps().to_vec()).collect::<Vec<_>>(),
                "betti": betti.as_ref().map(|b| b.iter().map(u128::to_string).collect::<Vec<_>>()),
            })
        );
    } else {
        print!("{}", print_ideal(&names, &ideal));
        if let Some(b) = betti {
            println!(
                "betti {}",
                b.iter().map(u128::to_string).collect::<Vec<_>>().join(" ")
            );
        }
    }
    Ok(())
}
