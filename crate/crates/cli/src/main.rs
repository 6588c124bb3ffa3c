//! `treecorr` — exact spanning-tree and spanning-forest correlation checks
//! on weighted multigraphs, reported as deterministic JSON.
//!
//! Every subcommand prints one report object to stdout with the keys
//! `command`, `input_digest`, `payload`, `verdicts`; all rationals are
//! `"p/q"` strings and map keys are sorted, so identical invocations on
//! identical files produce byte-identical output. Exit code 0 means every
//! verdict held, 1 means a verdict was violated (a finding, not a
//! failure), 2 means the invocation or input was unusable.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use treecorr_core::forests::{forest_correlation_capped, search_counterexample, SearchSpec};
use treecorr_core::matroid::{matroid_rayleigh_check, MatroidBasisList};
use treecorr_core::rayleigh::{
    monomial_tally_capped, rayleigh_delta, verify_identity_capped,
};
use treecorr_core::sampler::{empirical_conditionals, exact_conditionals};
use treecorr_core::trees::{
    effective_resistance, family_weights, DEFAULT_TREE_EDGE_CAP,
};
use treecorr_core::forests::DEFAULT_FOREST_EDGE_CAP;
use treecorr_core::{parse_graph, Multigraph};

#[derive(Parser)]
#[command(
    name = "treecorr",
    version,
    about = "Exact spanning-tree and spanning-forest correlation toolkit",
    after_help = "Exit codes: 0 all verdicts hold, 1 a verdict is violated, 2 usage or input error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Effective resistance between the endpoints of an edge.
    Resistance {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        edge: String,
    },
    /// The four conditional spanning-tree family weights of an edge pair.
    Families {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        e1: String,
        #[arg(long)]
        e2: String,
    },
    /// The Rayleigh cross-product difference and its sign verdict.
    Rayleigh {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        e1: String,
        #[arg(long)]
        e2: String,
    },
    /// The square identity: family-weight difference vs weighted class gap.
    Identity {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        e1: String,
        #[arg(long)]
        e2: String,
        /// Override the enumeration edge cap.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Per-monomial coefficient counts and the counting equation verdicts.
    Monomials {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        e1: String,
        #[arg(long)]
        e2: String,
        /// Override the enumeration edge cap.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Sampled conditional frequencies next to their exact values.
    Sample {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        e1: String,
        #[arg(long)]
        e2: String,
        #[arg(long, default_value_t = 30000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Forest-family conditionals and the conjectured inequality.
    ForestCorr {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        e1: String,
        #[arg(long)]
        e2: String,
        /// Override the enumeration edge cap.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Drive the forest-conjecture search described by a spec file.
    Search {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Rayleigh check on an explicit matroid basis list.
    Matroid {
        #[arg(long)]
        matroid: PathBuf,
        #[arg(long)]
        e1: String,
        #[arg(long)]
        e2: String,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("treecorr: {message}");
            ExitCode::from(2)
        }
    }
}

struct Input {
    digest: String,
    text: String,
}

fn load(path: &Path) -> Result<Input, String> {
    let bytes = std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let hash = Sha256::digest(&bytes);
    let hex: String = hash.iter().map(|b| format!("{b:02x}")).collect();
    let text = String::from_utf8(bytes).map_err(|_| format!("{}: not UTF-8", path.display()))?;
    Ok(Input {
        digest: format!("sha256:{hex}"),
        text,
    })
}

fn load_graph(path: &Path) -> Result<(Input, Multigraph), String> {
    let input = load(path)?;
    let graph = parse_graph(&input.text).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok((input, graph))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let (name, digest, payload, verdicts) = match &cli.command {
        Command::Resistance { graph, edge } => {
            let (input, g) = load_graph(graph)?;
            let resistance = effective_resistance(&g, edge).map_err(|e| e.to_string())?;
            (
                "resistance",
                input.digest,
                json!({ "edge": edge, "resistance": resistance }),
                json!({}),
            )
        }
        Command::Families { graph, e1, e2 } => {
            let (input, g) = load_graph(graph)?;
            let fam = family_weights(&g, e1, e2).map_err(|e| e.to_string())?;
            let partition = fam.partition_holds();
            (
                "families",
                input.digest,
                json!({ "e1": e1, "e2": e2, "families": fam }),
                json!({ "partition": partition }),
            )
        }
        Command::Rayleigh { graph, e1, e2 } => {
            let (input, g) = load_graph(graph)?;
            let fam = family_weights(&g, e1, e2).map_err(|e| e.to_string())?;
            let delta = rayleigh_delta(&g, e1, e2).map_err(|e| e.to_string())?;
            let nonnegative = !delta.is_negative();
            (
                "rayleigh",
                input.digest,
                json!({ "delta": delta, "e1": e1, "e2": e2, "families": fam }),
                json!({ "nonnegative": nonnegative }),
            )
        }
        Command::Identity { graph, e1, e2, cap } => {
            let (input, g) = load_graph(graph)?;
            let cap = cap.unwrap_or(DEFAULT_TREE_EDGE_CAP);
            let report = verify_identity_capped(&g, e1, e2, cap).map_err(|e| e.to_string())?;
            (
                "identity",
                input.digest,
                json!({
                    "delta": report.delta,
                    "e1": e1,
                    "e2": e2,
                    "eq2_lhs": report.eq2_lhs,
                    "eq2_rhs": report.eq2_rhs,
                    "families": report.families,
                    "square_form": report.square_form,
                    "weight_negative": report.weight_negative,
                    "weight_positive": report.weight_positive,
                }),
                json!({ "eq2_equal": report.eq2_equal, "equal": report.equal }),
            )
        }
        Command::Monomials { graph, e1, e2, cap } => {
            let (input, g) = load_graph(graph)?;
            let cap = cap.unwrap_or(DEFAULT_TREE_EDGE_CAP);
            let tally = monomial_tally_capped(&g, e1, e2, cap).map_err(|e| e.to_string())?;
            let mut all_balanced = true;
            let mut all_feasible = true;
            let keys: Vec<Value> = tally
                .iter()
                .map(|(key, counts)| {
                    let balanced = counts.balanced();
                    let feasible = key.is_feasible(&g, e1, e2);
                    all_balanced &= balanced;
                    all_feasible &= feasible;
                    json!({
                        "balanced": balanced,
                        "counts": counts,
                        "feasible": feasible,
                        "monomial": key,
                    })
                })
                .collect();
            (
                "monomials",
                input.digest,
                json!({ "e1": e1, "e2": e2, "key_count": keys.len(), "keys": keys }),
                json!({ "all_balanced": all_balanced, "all_feasible": all_feasible }),
            )
        }
        Command::Sample {
            graph,
            e1,
            e2,
            samples,
            seed,
        } => {
            let (input, g) = load_graph(graph)?;
            let (exact_absent, exact_present) =
                exact_conditionals(&g, e1, e2).map_err(|e| e.to_string())?;
            let (absent, present) = empirical_conditionals(&g, e1, e2, *samples, *seed)
                .map_err(|e| e.to_string())?;
            let corollary = exact_absent >= exact_present;
            (
                "sample",
                input.digest,
                json!({
                    "e1": e1,
                    "e2": e2,
                    "given_absent": absent,
                    "given_present": present,
                }),
                json!({ "corollary_exact": corollary }),
            )
        }
        Command::ForestCorr { graph, e1, e2, cap } => {
            let (input, g) = load_graph(graph)?;
            let cap = cap.unwrap_or(DEFAULT_FOREST_EDGE_CAP);
            let corr = forest_correlation_capped(&g, e1, e2, cap).map_err(|e| e.to_string())?;
            let holds = corr.holds;
            (
                "forest-corr",
                input.digest,
                json!({
                    "delta_f": corr.delta_f,
                    "e1": e1,
                    "e2": e2,
                    "f_both": corr.f_both,
                    "f_first_only": corr.f_first_only,
                    "f_neither": corr.f_neither,
                    "f_second_only": corr.f_second_only,
                    "p_given_absent": corr.p_given_absent,
                    "p_given_present": corr.p_given_present,
                }),
                json!({ "holds": holds }),
            )
        }
        Command::Search { spec } => {
            let input = load(spec)?;
            let spec = SearchSpec::parse(&input.text).map_err(|e| e.to_string())?;
            let report = search_counterexample(&spec).map_err(|e| e.to_string())?;
            let clean = report.violation.is_none();
            (
                "search",
                input.digest,
                json!({
                    "argmin": report.argmin,
                    "instances_checked": report.instances_checked,
                    "min_delta_f": report.min_delta_f,
                    "pairs_checked": report.pairs_checked,
                    "spec": spec,
                    "violation": report.violation,
                }),
                json!({ "no_counterexample": clean }),
            )
        }
        Command::Matroid { matroid, e1, e2 } => {
            let input = load(matroid)?;
            let list = MatroidBasisList::parse(&input.text).map_err(|e| e.to_string())?;
            let report = matroid_rayleigh_check(&list, e1, e2).map_err(|e| e.to_string())?;
            let rayleigh = report.rayleigh;
            (
                "matroid",
                input.digest,
                json!({
                    "b_both": report.b_both,
                    "b_first_only": report.b_first_only,
                    "b_neither": report.b_neither,
                    "b_second_only": report.b_second_only,
                    "difference": report.difference,
                    "e1": e1,
                    "e2": e2,
                }),
                json!({ "rayleigh": rayleigh }),
            )
        }
    };

    let all_verdicts_hold = verdicts
        .as_object()
        .map(|map| map.values().all(|v| v.as_bool() == Some(true)))
        .unwrap_or(true);
    let report = json!({
        "command": name,
        "input_digest": digest,
        "payload": payload,
        "verdicts": verdicts,
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    Ok(if all_verdicts_hold {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
