//! Spanning-tree family weights, two independent ways.
//!
//! [`enumerate_spanning_trees`] is the brute-force oracle: it walks edge
//! subsets directly and is only meant for desk-scale graphs (see
//! [`DEFAULT_TREE_EDGE_CAP`]). [`tree_weight_total`] computes the same
//! total weight through a cofactor of the weighted Laplacian, with
//! denominators cleared up front so the elimination stays in integers.
//! Everything downstream cross-checks one route against the other.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::graph::{indices_sorted_by_id, EdgeSet, Multigraph};
use crate::linalg::det_bareiss;
use crate::rational::Rational;

/// Default cap on enumerable (non-loop) edges for the brute-force paths.
pub const DEFAULT_TREE_EDGE_CAP: usize = 24;

/// Masks cover at most 64 edge positions.
const HARD_EDGE_LIMIT: usize = 63;

pub(crate) fn check_edge_cap(enumerable: usize, cap: usize) -> Result<()> {
    let effective = cap.min(HARD_EDGE_LIMIT);
    if enumerable > effective {
        return Err(Error::EdgeCapExceeded {
            edges: enumerable,
            cap: effective,
        });
    }
    Ok(())
}

/// All spanning trees as bitmasks over edge positions, in lexicographic
/// order of their sorted id sequences.
pub(crate) fn spanning_tree_masks(graph: &Multigraph, cap: usize) -> Result<Vec<u64>> {
    let non_loop = graph.non_loop_indices();
    check_edge_cap(non_loop.len(), cap)?;
    let order = indices_sorted_by_id(graph, &non_loop);
    let need = graph.vertex_count() - 1;
    let mut out = Vec::new();
    let dsu = Dsu::new(graph.vertex_count());
    extend_tree(graph, &order, 0, need, &dsu, 0, &mut out);
    Ok(out)
}

fn extend_tree(
    graph: &Multigraph,
    order: &[usize],
    pos: usize,
    need: usize,
    dsu: &Dsu,
    mask: u64,
    out: &mut Vec<u64>,
) {
    if need == 0 {
        out.push(mask);
        return;
    }
    if order.len() - pos < need {
        return;
    }
    for j in pos..=order.len() - need {
        let idx = order[j];
        let edge = &graph.edges()[idx];
        let mut next = dsu.clone();
        if next.union(edge.tail, edge.head) {
            extend_tree(graph, order, j + 1, need - 1, &next, mask | (1 << idx), out);
        }
    }
}

/// Every spanning tree of the graph, in deterministic lexicographic order
/// of the sorted edge-id sequence. Empty exactly when the graph is
/// disconnected. Self-loops never participate.
pub fn enumerate_spanning_trees(graph: &Multigraph) -> Result<Vec<EdgeSet>> {
    enumerate_spanning_trees_capped(graph, DEFAULT_TREE_EDGE_CAP)
}

/// [`enumerate_spanning_trees`] with an explicit edge cap.
pub fn enumerate_spanning_trees_capped(graph: &Multigraph, cap: usize) -> Result<Vec<EdgeSet>> {
    Ok(spanning_tree_masks(graph, cap)?
        .into_iter()
        .map(|mask| EdgeSet::from_mask(graph, mask))
        .collect())
}

/// Total spanning-tree weight through the weighted matrix-tree theorem:
/// any cofactor of the weighted Laplacian, evaluated by fraction-free
/// elimination after clearing denominators. Returns 0 for a disconnected
/// graph and 1 for the single-vertex graph.
pub fn tree_weight_total(graph: &Multigraph) -> Rational {
    let n = graph.vertex_count();
    if n == 1 {
        return Rational::one();
    }

    let non_loop = graph.non_loop_indices();
    let mut denom = BigInt::one();
    for &i in &non_loop {
        denom = denom.lcm(graph.edges()[i].weight.denom());
    }

    let mut lap = vec![vec![BigInt::zero(); n]; n];
    for &i in &non_loop {
        let e = &graph.edges()[i];
        let scaled = e.weight.numer() * (&denom / e.weight.denom());
        lap[e.tail][e.tail] += &scaled;
        lap[e.head][e.head] += &scaled;
        lap[e.tail][e.head] -= &scaled;
        lap[e.head][e.tail] -= &scaled;
    }
    let minor: Vec<Vec<BigInt>> = (1..n)
        .map(|i| (1..n).map(|j| lap[i][j].clone()).collect())
        .collect();
    let det = det_bareiss(minor);

    let scale = num_traits::pow(denom, n - 1);
    Rational::from_big_rational(BigRational::new(det, scale))
}

/// The four conditional spanning-tree family weights for an ordered pair
/// of distinct non-loop edges, plus the unconditional total.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct FamilyWeights {
    /// Weight of trees containing both edges.
    pub t_both: Rational,
    /// Weight of trees containing the first edge but not the second.
    pub t_first_only: Rational,
    /// Weight of trees containing the second edge but not the first.
    pub t_second_only: Rational,
    /// Weight of trees containing neither edge.
    pub t_neither: Rational,
    /// Weight of all spanning trees.
    pub t_total: Rational,
}

impl FamilyWeights {
    /// The four families partition the trees, so their weights must sum to
    /// the total.
    pub fn partition_holds(&self) -> bool {
        let sum = &self.t_both + &self.t_first_only;
        let sum = sum + &self.t_second_only;
        let sum = sum + &self.t_neither;
        sum == self.t_total
    }

    /// Weight of trees not containing the second edge.
    pub fn without_second(&self) -> Rational {
        &self.t_first_only + &self.t_neither
    }

    /// Weight of trees containing the second edge.
    pub fn with_second(&self) -> Rational {
        &self.t_both + &self.t_second_only
    }
}

/// Computes the four family weights by deletion and contraction:
/// contracting an edge and scaling by its weight gives the weight of trees
/// through it, deleting gives the weight of trees avoiding it. Contracting
/// the first edge can silently drop the second (it became a loop); that
/// branch contributes zero rather than an error.
pub fn family_weights(graph: &Multigraph, e1: &str, e2: &str) -> Result<FamilyWeights> {
    graph.require_edge_pair(e1, e2)?;
    let w1 = graph.edge(e1).expect("validated").weight.clone();
    let w2 = graph.edge(e2).expect("validated").weight.clone();

    let contracted_first = graph.contract_edge(e1)?;
    let t_both = if contracted_first.edge(e2).is_some() {
        let both = contracted_first.contract_edge(e2)?;
        &w1 * &w2 * tree_weight_total(&both)
    } else {
        Rational::zero()
    };

    let t_first_only = &w1 * tree_weight_total(&graph.delete_edge(e2)?.contract_edge(e1)?);
    let t_second_only = &w2 * tree_weight_total(&graph.delete_edge(e1)?.contract_edge(e2)?);
    let t_neither = tree_weight_total(&graph.delete_edge(e1)?.delete_edge(e2)?);
    let t_total = tree_weight_total(graph);

    Ok(FamilyWeights {
        t_both,
        t_first_only,
        t_second_only,
        t_neither,
        t_total,
    })
}

/// Effective resistance between the endpoints of an edge, as the exact
/// ratio of the contracted graph's tree weight to the full tree weight.
pub fn effective_resistance(graph: &Multigraph, edge: &str) -> Result<Rational> {
    graph.require_non_loop_edge(edge)?;
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let contracted = tree_weight_total(&graph.contract_edge(edge)?);
    let total = tree_weight_total(graph);
    Ok(contracted / total)
}
