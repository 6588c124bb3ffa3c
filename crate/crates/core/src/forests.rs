//! Spanning forests and the forest negative-correlation conjecture.
//!
//! A spanning forest here is any acyclic edge subset (the vertex set is
//! always all of `V`), including the empty set. Whether the conditional
//! inequality that provably holds for spanning trees also holds for
//! spanning forests is open; this module evaluates it exactly on explicit
//! graphs and drives exhaustive or randomized searches for a
//! counterexample over small multigraph families.

use serde::{Deserialize, Serialize};

use crate::catalog::{
    labeled_connected_multigraphs, random_connected_multigraph, WeightScheme,
};
use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::graph::{indices_sorted_by_id, EdgeSet, GraphFile, Multigraph};
use crate::rational::Rational;
use crate::rng::SplitMix64;

/// Default cap on enumerable (non-loop) edges for forest enumeration.
pub const DEFAULT_FOREST_EDGE_CAP: usize = 20;

/// All acyclic edge subsets as bitmasks, in lexicographic order of their
/// sorted id sequences (the empty forest first).
pub(crate) fn forest_masks(graph: &Multigraph, cap: usize) -> Result<Vec<u64>> {
    let non_loop = graph.non_loop_indices();
    crate::trees::check_edge_cap(non_loop.len(), cap)?;
    let order = indices_sorted_by_id(graph, &non_loop);
    let mut out = Vec::new();
    let dsu = Dsu::new(graph.vertex_count());
    extend_forest(graph, &order, 0, &dsu, 0, &mut out);
    Ok(out)
}

fn extend_forest(
    graph: &Multigraph,
    order: &[usize],
    pos: usize,
    dsu: &Dsu,
    mask: u64,
    out: &mut Vec<u64>,
) {
    out.push(mask);
    for j in pos..order.len() {
        let idx = order[j];
        let edge = &graph.edges()[idx];
        let mut next = dsu.clone();
        if next.union(edge.tail, edge.head) {
            extend_forest(graph, order, j + 1, &next, mask | (1 << idx), out);
        }
    }
}

/// Every spanning forest (acyclic edge subset) of the graph, the empty
/// forest included, in deterministic order. Self-loops never participate.
pub fn enumerate_forests(graph: &Multigraph) -> Result<Vec<EdgeSet>> {
    enumerate_forests_capped(graph, DEFAULT_FOREST_EDGE_CAP)
}

/// [`enumerate_forests`] with an explicit edge cap.
pub fn enumerate_forests_capped(graph: &Multigraph, cap: usize) -> Result<Vec<EdgeSet>> {
    Ok(forest_masks(graph, cap)?
        .into_iter()
        .map(|mask| EdgeSet::from_mask(graph, mask))
        .collect())
}

/// Exact forest-family weights and conditionals for one edge pair.
///
/// `p_given_present` is `None` when no forest contains the second edge
/// (it is a self-loop), the one way its conditioning event can have zero
/// mass; the event "second edge absent" always has positive mass because
/// the empty forest exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForestCorrelation {
    pub f_both: Rational,
    pub f_first_only: Rational,
    pub f_second_only: Rational,
    pub f_neither: Rational,
    /// `Pr[e1 in F | e2 not in F]`.
    pub p_given_absent: Rational,
    /// `Pr[e1 in F | e2 in F]`.
    pub p_given_present: Option<Rational>,
    /// Cross-product difference of the four family weights.
    pub delta_f: Rational,
    /// Whether the conjectured inequality holds here: `delta_f >= 0`.
    pub holds: bool,
}

/// Filters the forest enumeration into the four families for `(e1, e2)`
/// and evaluates the conjectured correlation inequality exactly.
pub fn forest_correlation(graph: &Multigraph, e1: &str, e2: &str) -> Result<ForestCorrelation> {
    forest_correlation_capped(graph, e1, e2, DEFAULT_FOREST_EDGE_CAP)
}

/// [`forest_correlation`] with an explicit edge cap.
pub fn forest_correlation_capped(
    graph: &Multigraph,
    e1: &str,
    e2: &str,
    cap: usize,
) -> Result<ForestCorrelation> {
    if e1 == e2 {
        return Err(Error::IdenticalEdges { id: e1.to_string() });
    }
    // Self-loops are legal arguments here; they simply never occur in a
    // forest.
    let i1 = graph.require_edge_index(e1)?;
    let i2 = graph.require_edge_index(e2)?;
    let bit1 = 1u64 << i1;
    let bit2 = 1u64 << i2;

    let mut f_both = Rational::zero();
    let mut f_first_only = Rational::zero();
    let mut f_second_only = Rational::zero();
    let mut f_neither = Rational::zero();
    for mask in forest_masks(graph, cap)? {
        let weight = graph.weight_of_mask(mask);
        match (mask & bit1 != 0, mask & bit2 != 0) {
            (true, true) => f_both = f_both + weight,
            (true, false) => f_first_only = f_first_only + weight,
            (false, true) => f_second_only = f_second_only + weight,
            (false, false) => f_neither = f_neither + weight,
        }
    }

    let without_second = &f_first_only + &f_neither;
    debug_assert!(without_second.is_positive(), "the empty forest exists");
    let with_second = &f_both + &f_second_only;
    let p_given_absent = &f_first_only / &without_second;
    let p_given_present = with_second
        .is_positive()
        .then(|| &f_both / &with_second);
    let delta_f = &f_first_only * &f_second_only - &f_both * &f_neither;
    let holds = !delta_f.is_negative();

    Ok(ForestCorrelation {
        f_both,
        f_first_only,
        f_second_only,
        f_neither,
        p_given_absent,
        p_given_present,
        delta_f,
        holds,
    })
}

/// Search family selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    /// Every connected multigraph within the bounds, in canonical order.
    Exhaustive,
    /// `count` seeded random connected multigraphs.
    Random,
}

/// Weight scheme selector: the string `"unit"` or `{"random_seed": s}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WeightSpec {
    #[default]
    Unit,
    Random { seed: u64 },
}

impl Serialize for WeightSpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            WeightSpec::Unit => serializer.serialize_str("unit"),
            WeightSpec::Random { seed } => {
                use serde::ser::SerializeMap;
                let mut map = serializer.serialize_map(Some(1))?;
                map.serialize_entry("random_seed", seed)?;
                map.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for WeightSpec {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Seeded { random_seed: u64 },
        }
        match Raw::deserialize(deserializer)? {
            Raw::Text(s) if s == "unit" => Ok(WeightSpec::Unit),
            Raw::Text(other) => Err(serde::de::Error::custom(format!(
                "unknown weight scheme \"{other}\"; expected \"unit\" or {{\"random_seed\": s}}"
            ))),
            Raw::Seeded { random_seed } => Ok(WeightSpec::Random { seed: random_seed }),
        }
    }
}

/// Search driver configuration:
/// `{ "mode", "max_vertices", "max_edges", "weights", "count" }`.
/// `count` is required for random mode and ignored otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSpec {
    pub mode: SearchMode,
    pub max_vertices: usize,
    pub max_edges: usize,
    #[serde(default)]
    pub weights: WeightSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<u64>,
}

impl SearchSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let spec: SearchSpec = serde_json::from_str(text)
            .map_err(|e| Error::InvalidSearchSpec(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_vertices == 0 {
            return Err(Error::InvalidSearchSpec(
                "max_vertices must be at least 1; the family is empty".into(),
            ));
        }
        if self.mode == SearchMode::Random {
            match self.count {
                None | Some(0) => {
                    return Err(Error::InvalidSearchSpec(
                        "random mode needs a positive \"count\"; the family is empty".into(),
                    ))
                }
                Some(_) => {}
            }
            if self.max_vertices < 2 || self.max_edges == 0 {
                return Err(Error::InvalidSearchSpec(
                    "random mode needs max_vertices >= 2 and max_edges >= 1".into(),
                ));
            }
        }
        Ok(())
    }
}

/// One evaluated (graph, edge pair) instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchFinding {
    pub graph: GraphFile,
    pub e1: String,
    pub e2: String,
    pub delta_f: Rational,
    /// Whether the instance contains parallel edges; flagged because the
    /// conjecture's intended scope for multigraphs is unsettled.
    pub has_parallel_edges: bool,
}

/// Search outcome: either the first violating instance in canonical order,
/// or a clean sweep with the most extreme instance seen.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub instances_checked: u64,
    pub pairs_checked: u64,
    pub violation: Option<SearchFinding>,
    /// Smallest `delta_f` observed, a tension metric even on success.
    pub min_delta_f: Option<Rational>,
    pub argmin: Option<SearchFinding>,
}

/// Runs the forest-correlation check over every ordered edge pair of every
/// graph in the family the spec describes. Stops at the first violation
/// (the ordering is deterministic, so "first" is canonical).
pub fn search_counterexample(spec: &SearchSpec) -> Result<SearchReport> {
    spec.validate()?;
    let mut state = SearchState::default();
    let cap = spec.max_edges.max(DEFAULT_FOREST_EDGE_CAP);

    match spec.mode {
        SearchMode::Exhaustive => {
            let reweight_rng = match spec.weights {
                WeightSpec::Unit => None,
                WeightSpec::Random { seed } => Some(SplitMix64::new(seed)),
            };
            let mut rng = reweight_rng;
            for graph in labeled_connected_multigraphs(spec.max_vertices, spec.max_edges) {
                let graph = match rng.as_mut() {
                    None => graph,
                    Some(rng) => reweight(&graph, rng),
                };
                if state.visit(&graph, cap)? {
                    break;
                }
            }
        }
        SearchMode::Random => {
            let seed = match spec.weights {
                WeightSpec::Unit => 0,
                WeightSpec::Random { seed } => seed,
            };
            let scheme = match spec.weights {
                WeightSpec::Unit => WeightScheme::Unit,
                WeightSpec::Random { .. } => WeightScheme::RandomRational,
            };
            let mut rng = SplitMix64::new(seed);
            for _ in 0..spec.count.expect("validated") {
                let graph =
                    random_connected_multigraph(&mut rng, spec.max_vertices, spec.max_edges, scheme)?;
                if state.visit(&graph, cap)? {
                    break;
                }
            }
        }
    }
    Ok(state.into_report())
}

fn reweight(graph: &Multigraph, rng: &mut SplitMix64) -> Multigraph {
    let edges = graph
        .edges()
        .iter()
        .map(|e| crate::graph::Edge {
            id: e.id.clone(),
            tail: e.tail,
            head: e.head,
            weight: WeightScheme::RandomRational.draw(rng),
        })
        .collect();
    Multigraph::new(graph.vertex_count(), edges).expect("reweighted graph is valid")
}

#[derive(Default)]
struct SearchState {
    instances_checked: u64,
    pairs_checked: u64,
    violation: Option<SearchFinding>,
    min_delta_f: Option<Rational>,
    argmin: Option<SearchFinding>,
}

impl SearchState {
    /// Checks every ordered pair of one graph; true when a violation ends
    /// the search.
    fn visit(&mut self, graph: &Multigraph, cap: usize) -> Result<bool> {
        self.instances_checked += 1;
        let ids: Vec<String> = graph.edges().iter().map(|e| e.id.to_string()).collect();
        for e1 in &ids {
            for e2 in &ids {
                if e1 == e2 {
                    continue;
                }
                let correlation = forest_correlation_capped(graph, e1, e2, cap)?;
                self.pairs_checked += 1;
                let finding = || SearchFinding {
                    graph: graph.to_graph_file(),
                    e1: e1.clone(),
                    e2: e2.clone(),
                    delta_f: correlation.delta_f.clone(),
                    has_parallel_edges: graph.has_parallel_edges(),
                };
                if self
                    .min_delta_f
                    .as_ref()
                    .is_none_or(|min| correlation.delta_f < *min)
                {
                    self.min_delta_f = Some(correlation.delta_f.clone());
                    self.argmin = Some(finding());
                }
                if correlation.delta_f.is_negative() {
                    self.violation = Some(finding());
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    fn into_report(self) -> SearchReport {
        SearchReport {
            instances_checked: self.instances_checked,
            pairs_checked: self.pairs_checked,
            violation: self.violation,
            min_delta_f: self.min_delta_f,
            argmin: self.argmin,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn ids(set: &EdgeSet) -> Vec<&str> {
        set.iter().map(|id| id.as_str()).collect()
    }

    #[test]
    fn triangle_has_seven_forests() {
        let forests = enumerate_forests(&triangle()).unwrap();
        assert_eq!(forests.len(), 7);
        assert_eq!(forests[0], EdgeSet::empty());
        let got: Vec<Vec<&str>> = forests.iter().map(ids).collect();
        assert_eq!(
            got,
            vec![
                vec![],
                vec!["e1"],
                vec!["e1", "e2"],
                vec!["e1", "e3"],
                vec!["e2"],
                vec!["e2", "e3"],
                vec!["e3"],
            ]
        );
    }

    #[test]
    fn single_edge_has_two_forests() {
        let g = Multigraph::new(2, vec![edge("e1", 0, 1, "1")]).unwrap();
        assert_eq!(enumerate_forests(&g).unwrap().len(), 2);
    }

    #[test]
    fn parallel_pair_has_three_forests() {
        assert_eq!(enumerate_forests(&parallel_pair()).unwrap().len(), 3);
    }

    #[test]
    fn tree_graphs_have_two_to_the_edges_forests() {
        let g = series_path();
        assert_eq!(enumerate_forests(&g).unwrap().len(), 4);
    }

    #[test]
    fn forest_cap_is_enforced() {
        assert_eq!(
            enumerate_forests_capped(&triangle(), 2).unwrap_err(),
            Error::EdgeCapExceeded { edges: 3, cap: 2 }
        );
    }

    #[test]
    fn triangle_correlation() {
        let c = forest_correlation(&triangle(), "e1", "e2").unwrap();
        assert_eq!(c.p_given_absent, r("1/2"));
        assert_eq!(c.p_given_present, Some(r("1/3")));
        assert!(c.holds);
        // Families: both {e1,e2}; first {e1},{e1,e3}; second {e2},{e2,e3};
        // neither {},{e3}.
        assert_eq!(c.f_both, r("1"));
        assert_eq!(c.f_first_only, r("2"));
        assert_eq!(c.f_second_only, r("2"));
        assert_eq!(c.f_neither, r("2"));
        assert_eq!(c.delta_f, r("2"));
    }

    #[test]
    fn parallel_pair_correlation() {
        let c = forest_correlation(&parallel_pair_unit(), "e1", "e2").unwrap();
        assert_eq!(c.p_given_absent, r("1/2"));
        assert_eq!(c.p_given_present, Some(r("0")));
        assert!(c.holds);
    }

    #[test]
    fn disjoint_edges_are_independent() {
        let g = Multigraph::new(4, vec![edge("e1", 0, 1, "1"), edge("e2", 2, 3, "1")]).unwrap();
        let c = forest_correlation(&g, "e1", "e2").unwrap();
        assert_eq!(Some(c.p_given_absent.clone()), c.p_given_present);
        assert_eq!(c.delta_f, Rational::zero());
        assert!(c.holds);
    }

    #[test]
    fn loop_as_second_edge_reports_zero_mass() {
        let g = Multigraph::new(2, vec![edge("e1", 0, 1, "1"), edge("l", 1, 1, "1")]).unwrap();
        let c = forest_correlation(&g, "e1", "l").unwrap();
        assert_eq!(c.p_given_present, None);
        assert_eq!(c.p_given_absent, r("1/2"));
        assert!(c.holds);
    }

    #[test]
    fn correlation_argument_errors() {
        assert!(matches!(
            forest_correlation(&triangle(), "e1", "e1").unwrap_err(),
            Error::IdenticalEdges { .. }
        ));
        assert!(matches!(
            forest_correlation(&triangle(), "e1", "zz").unwrap_err(),
            Error::UnknownEdge { .. }
        ));
    }

    #[test]
    fn search_spec_parsing() {
        let spec = SearchSpec::parse(
            r#"{"mode": "exhaustive", "max_vertices": 4, "max_edges": 6, "weights": "unit"}"#,
        )
        .unwrap();
        assert_eq!(spec.mode, SearchMode::Exhaustive);
        assert_eq!(spec.weights, WeightSpec::Unit);

        let spec = SearchSpec::parse(
            r#"{"mode": "random", "max_vertices": 6, "max_edges": 8,
                "weights": {"random_seed": 11}, "count": 200}"#,
        )
        .unwrap();
        assert_eq!(spec.weights, WeightSpec::Random { seed: 11 });
        assert_eq!(spec.count, Some(200));

        assert!(matches!(
            SearchSpec::parse(r#"{"mode": "exhaustive", "max_vertices": 0, "max_edges": 2}"#)
                .unwrap_err(),
            Error::InvalidSearchSpec(_)
        ));
        assert!(matches!(
            SearchSpec::parse(r#"{"mode": "random", "max_vertices": 4, "max_edges": 4}"#)
                .unwrap_err(),
            Error::InvalidSearchSpec(_)
        ));
        assert!(matches!(
            SearchSpec::parse(r#"{"mode": "sideways", "max_vertices": 4, "max_edges": 4}"#)
                .unwrap_err(),
            Error::InvalidSearchSpec(_)
        ));
        assert!(matches!(
            SearchSpec::parse(
                r#"{"mode": "exhaustive", "max_vertices": 3, "max_edges": 3, "weights": "gold"}"#
            )
            .unwrap_err(),
            Error::InvalidSearchSpec(_)
        ));
    }

    #[test]
    fn exhaustive_search_small_bounds_finds_nothing() {
        let spec = SearchSpec {
            mode: SearchMode::Exhaustive,
            max_vertices: 3,
            max_edges: 4,
            weights: WeightSpec::Unit,
            count: None,
        };
        let report = search_counterexample(&spec).unwrap();
        assert!(report.violation.is_none());
        assert!(report.instances_checked > 0);
        assert!(report.pairs_checked > 0);
        assert!(!report.min_delta_f.clone().unwrap().is_negative());
        assert!(report.argmin.is_some());
        // Deterministic: identical rerun.
        assert_eq!(search_counterexample(&spec).unwrap(), report);
    }

    #[test]
    fn random_search_is_deterministic() {
        let spec = SearchSpec {
            mode: SearchMode::Random,
            max_vertices: 5,
            max_edges: 6,
            weights: WeightSpec::Random { seed: 33 },
            count: Some(25),
        };
        let report = search_counterexample(&spec).unwrap();
        assert_eq!(report.instances_checked, 25);
        assert!(report.violation.is_none());
        assert_eq!(search_counterexample(&spec).unwrap(), report);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn family_partition_and_integer_delta(g in crate::testutil::arb_graph()) {
            let total = enumerate_forests(&g)
                .unwrap()
                .iter()
                .fold(Rational::zero(), |acc, f| acc + g.set_weight(f).unwrap());
            let ids: Vec<String> = g.edges().iter().map(|e| e.id.to_string()).collect();
            for e1 in &ids {
                for e2 in &ids {
                    if e1 == e2 {
                        continue;
                    }
                    let c = forest_correlation(&g, e1, e2).unwrap();
                    let sum = &c.f_both + &c.f_first_only;
                    let sum = sum + &c.f_second_only;
                    let sum = sum + &c.f_neither;
                    prop_assert_eq!(&sum, &total);
                }
            }
        }

        #[test]
        fn unit_weight_delta_is_an_integer(g in crate::testutil::arb_graph()) {
            use num_traits::One;
            let unit_edges = g
                .edges()
                .iter()
                .map(|e| crate::graph::Edge {
                    id: e.id.clone(),
                    tail: e.tail,
                    head: e.head,
                    weight: Rational::one(),
                })
                .collect();
            let g = Multigraph::new(g.vertex_count(), unit_edges).unwrap();
            let ids: Vec<String> = g.edges().iter().map(|e| e.id.to_string()).collect();
            for e1 in &ids {
                for e2 in &ids {
                    if e1 == e2 {
                        continue;
                    }
                    let c = forest_correlation(&g, e1, e2).unwrap();
                    prop_assert!(c.delta_f.denom().is_one());
                }
            }
        }
    }
}
