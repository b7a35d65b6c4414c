//! Command-line frontend: property checks, lattice exports, algebra
//! representation reports, weight tables, classification, and the
//! exhaustive equivalence verifier.
//!
//! Exit codes: 0 when everything requested holds, 1 on a failed check or
//! capacity limit, 2 on input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use heaplab::classify::{
    build_representation, build_representation_heap, classify_heap, classify_poset,
    exhaustive_instances, random_instances, run_harness, AlgebraKind,
};
use heaplab::error::Error;
use heaplab::heap::{Layer, PeriodicSplit};
use heaplab::io::{
    classification_json, frontier_json, heap_representation_json, lattice_dot, lattice_json,
    parse_frontier, parse_input, property_report_json, representation_json, weight_rows_json,
    LoadedInput,
};
use heaplab::poset::ColorPolicy;
use heaplab::properties::{check_property, check_property_heap_certified, Property};
use heaplab::splits::{split_cap_from_env, SplitLattice};
use heaplab::weights::{
    compute_mu_heap, compute_mu_tailed, compute_psi_tailed, compute_upsilon_tailed, mu_prime_table,
    mu_table,
};

#[derive(Parser)]
#[command(
    name = "heaplab",
    version,
    about = "Colored posets, split lattices, and the representations they carry"
)]
struct Cli {
    /// Worker threads for the verify harness (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArg {
    /// Input JSON file (graph + poset, heap, or tailed poset).
    input: PathBuf,
    /// Shrink the color graph to the image of the coloring instead of
    /// rejecting non-surjective input.
    #[arg(long)]
    restrict_colors: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide coloring properties; exit 1 if any requested property fails.
    Check {
        #[command(flatten)]
        input: InputArg,
        /// Check all eight properties.
        #[arg(long)]
        all: bool,
        /// Comma-separated property names (EC,ND,NA,I3ND,AC,I2A,Mx1GA,Mn1LA).
        #[arg(long, value_delimiter = ',')]
        props: Vec<String>,
        /// Census bound k used with --all.
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Window size in periods for heap inputs.
        #[arg(long, default_value_t = 3)]
        window: i64,
    },
    /// Enumerate the split lattice; print the split count.
    Lattice {
        #[command(flatten)]
        input: InputArg,
        /// Write the edge-colored Hasse diagram in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the lattice as JSON.
        #[arg(long)]
        json_out: Option<PathBuf>,
        /// Split cap (default: HEAPLAB_SPLIT_CAP or 1000000).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Build a representation for an algebra and verify its relations.
    Rep {
        #[command(flatten)]
        input: InputArg,
        /// n-plus, n-minus, b-plus, b-minus, or g-prime.
        #[arg(long)]
        algebra: String,
        /// Ball radius around the seed split for heap inputs.
        #[arg(long, default_value_t = 4)]
        ball: usize,
        /// Window size in periods for the EC certificate on heaps.
        #[arg(long, default_value_t = 3)]
        window: i64,
        /// Frontier JSON file for the seed split (default: all layers 0).
        #[arg(long)]
        seed_split: Option<PathBuf>,
    },
    /// Print weight tables (mu by default) or the census values of a
    /// tailed fixture split.
    Weights {
        #[command(flatten)]
        input: InputArg,
        /// Print the filter-emphasizing variant as well.
        #[arg(long)]
        mu_prime: bool,
        /// Frontier JSON file for heap inputs (default: all layers 0).
        #[arg(long)]
        frontier: Option<PathBuf>,
    },
    /// Decide the colored d-complete / minuscule classification.
    Classify {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = 3)]
        window: i64,
    },
    /// Cross-verify the equivalence theorems over generated instances.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_elements: usize,
        #[arg(long, default_value_t = 2)]
        max_colors: usize,
        /// exhaustive or random.
        #[arg(long, default_value = "exhaustive")]
        mode: String,
        /// Number of instances in random mode.
        #[arg(long, default_value_t = 10_000)]
        count: usize,
        #[arg(long, default_value_t = 20260811)]
        seed: u64,
        /// Constructed weight functions sampled per instance.
        #[arg(long, default_value_t = 1)]
        weight_functions: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load(input: &InputArg) -> Result<LoadedInput, Error> {
    let text = std::fs::read_to_string(&input.input)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", input.input.display())))?;
    let policy = if input.restrict_colors {
        ColorPolicy::RestrictColors
    } else {
        ColorPolicy::RequireSurjective
    };
    parse_input(&text, policy)
}

fn run(cmd: Command) -> Result<u8, Error> {
    match cmd {
        Command::Check {
            input,
            all,
            props,
            k,
            window,
        } => {
            let loaded = load(&input)?;
            let mut requested: Vec<Property> = Vec::new();
            if all || props.is_empty() {
                requested.extend(Property::all_eight(k));
            }
            for name in &props {
                requested
                    .push(Property::parse(name).ok_or_else(|| {
                        Error::InvalidInput(format!("unknown property `{name}`"))
                    })?);
            }
            let mut all_hold = true;
            match loaded {
                LoadedInput::Finite(p) => {
                    for prop in requested {
                        let r = check_property(&p, prop);
                        all_hold &= r.holds;
                        println!("{}", property_report_json(&p, &r));
                    }
                }
                LoadedInput::Heap(h) => {
                    for prop in requested {
                        let c = check_property_heap_certified(&h, prop, window)?;
                        all_hold &= c.report.holds && c.windows_agree;
                        let span = h.max_abs_shift().max(1);
                        let w = h.materialize_window(0, window * span - 1)?;
                        let mut v = property_report_json(&w.poset, &c.report);
                        v["window_periods"] = json!(c.window_periods);
                        v["windows_agree"] = json!(c.windows_agree);
                        println!("{v}");
                    }
                }
                LoadedInput::Tailed(_, _) => {
                    return Err(Error::InvalidInput(
                        "property checks run on finite posets or heaps, not tailed fixtures".into(),
                    ))
                }
            }
            Ok(if all_hold { 0 } else { 1 })
        }
        Command::Lattice {
            input,
            dot,
            json_out,
            cap,
        } => {
            let LoadedInput::Finite(p) = load(&input)? else {
                return Err(Error::InvalidInput(
                    "lattice enumeration needs a finite poset (heaps are navigated lazily)".into(),
                ));
            };
            let cap = cap.unwrap_or_else(split_cap_from_env);
            match SplitLattice::enumerate(&p, cap) {
                Ok(l) => {
                    println!("{} splits", l.len());
                    if let Some(path) = dot {
                        std::fs::write(&path, lattice_dot(&p, &l))
                            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
                    }
                    if let Some(path) = json_out {
                        std::fs::write(
                            &path,
                            serde_json::to_string_pretty(&lattice_json(&p, &l)).unwrap(),
                        )
                        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
                    }
                    Ok(0)
                }
                Err(e @ Error::SplitCapExceeded { .. }) => {
                    eprintln!("error: {e}");
                    Ok(1)
                }
                Err(e) => Err(e),
            }
        }
        Command::Rep {
            input,
            algebra,
            ball,
            window,
            seed_split,
        } => {
            let kind = AlgebraKind::parse(&algebra)
                .ok_or_else(|| Error::InvalidInput(format!("unknown algebra `{algebra}`")))?;
            match load(&input)? {
                LoadedInput::Finite(p) => {
                    let l = SplitLattice::enumerate(&p, split_cap_from_env())?;
                    let rep = build_representation(&p, &l, kind)?;
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&representation_json(&p, &rep)).unwrap()
                    );
                    Ok(if rep.success { 0 } else { 1 })
                }
                LoadedInput::Heap(h) => {
                    let seed = match seed_split {
                        None => PeriodicSplit::uniform(h.n_cells(), Layer::Fin(0)),
                        Some(path) => {
                            let text = std::fs::read_to_string(&path).map_err(|e| {
                                Error::InvalidInput(format!("{}: {e}", path.display()))
                            })?;
                            let v: serde_json::Value = serde_json::from_str(&text)
                                .map_err(|e| Error::InvalidInput(format!("json: {e}")))?;
                            parse_frontier(&h, &v)?
                        }
                    };
                    let rep = build_representation_heap(&h, &seed, ball, kind, window)?;
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&heap_representation_json(&h, &rep)).unwrap()
                    );
                    Ok(if rep.success_on_interior { 0 } else { 1 })
                }
                LoadedInput::Tailed(_, _) => Err(Error::InvalidInput(
                    "representations run on finite posets or heaps".into(),
                )),
            }
        }
        Command::Weights {
            input,
            mu_prime,
            frontier,
        } => match load(&input)? {
            LoadedInput::Finite(p) => {
                let l = SplitLattice::enumerate(&p, split_cap_from_env())?;
                let mu = mu_table(&p, &l)?;
                for row in weight_rows_json(&p, &mu) {
                    println!("{row}");
                }
                if mu_prime {
                    let mp = mu_prime_table(&p, &l)?;
                    for row in weight_rows_json(&p, &mp) {
                        let mut row = row;
                        row["variant"] = json!("mu'");
                        println!("{row}");
                    }
                }
                Ok(0)
            }
            LoadedInput::Heap(h) => {
                let split = match frontier {
                    None => PeriodicSplit::uniform(h.n_cells(), Layer::Fin(0)),
                    Some(path) => {
                        let text = std::fs::read_to_string(&path)
                            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
                        let v: serde_json::Value = serde_json::from_str(&text)
                            .map_err(|e| Error::InvalidInput(format!("json: {e}")))?;
                        parse_frontier(&h, &v)?
                    }
                };
                println!("{}", frontier_json(&h, &split));
                for b in 0..h.graph().len() {
                    let v = compute_mu_heap(&h, &split, b)?;
                    println!("{}", json!({"color": h.graph().name(b), "mu": v}));
                }
                Ok(0)
            }
            LoadedInput::Tailed(tp, split) => {
                let split = split.ok_or_else(|| {
                    Error::InvalidInput("tailed input needs a `split` block".into())
                })?;
                let g = tp.window().graph().clone();
                for b in 0..g.len() {
                    let u = compute_upsilon_tailed(&tp, &split, b)?;
                    let ps = compute_psi_tailed(&tp, &split, b)?;
                    let m = compute_mu_tailed(&tp, &split, b)?;
                    println!(
                        "{}",
                        json!({
                            "color": g.name(b),
                            "upsilon": u.value,
                            "psi": ps.value,
                            "mu": m,
                        })
                    );
                }
                Ok(0)
            }
        },
        Command::Classify { input, window } => match load(&input)? {
            LoadedInput::Finite(p) => {
                let c = classify_poset(&p);
                println!(
                    "{}",
                    serde_json::to_string_pretty(&classification_json(&p, &c)).unwrap()
                );
                Ok(0)
            }
            LoadedInput::Heap(h) => {
                let (c, agree) = classify_heap(&h, window)?;
                let span = h.max_abs_shift().max(1);
                let w = h.materialize_window(0, window * span - 1)?;
                let mut v = classification_json(&w.poset, &c);
                v["windows_agree"] = json!(agree);
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
                Ok(0)
            }
            LoadedInput::Tailed(_, _) => Err(Error::InvalidInput(
                "classification runs on finite posets or heaps".into(),
            )),
        },
        Command::Verify {
            max_elements,
            max_colors,
            mode,
            count,
            seed,
            weight_functions,
        } => {
            let instances = match mode.as_str() {
                "exhaustive" => {
                    let mut all = Vec::new();
                    for n in 1..=max_elements {
                        for m in 1..=max_colors.min(n) {
                            all.extend(exhaustive_instances(n, m)?);
                        }
                    }
                    all
                }
                "random" => random_instances(max_elements, max_colors, count, seed),
                other => {
                    return Err(Error::InvalidInput(format!(
                        "unknown mode `{other}` (use exhaustive or random)"
                    )))
                }
            };
            let summary = run_harness(&instances, weight_functions);
            let per_check: serde_json::Map<String, serde_json::Value> = summary
                .per_check
                .iter()
                .map(|(name, t)| {
                    (
                        name.clone(),
                        json!({"applicable": t.applicable, "agreed": t.agreed}),
                    )
                })
                .collect();
            let v = json!({
                "instances": summary.instances,
                "disagreements": summary.failed_instances,
                "per_check": per_check,
                "first_failures": summary.failures,
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
            Ok(if summary.failed_instances == 0 { 0 } else { 1 })
        }
    }
}
