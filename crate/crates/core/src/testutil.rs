//! Test-only strategies and independent oracles.
//!
//! The oracles here deliberately take different algorithmic routes from the
//! library code they check: total tree weight by deletion/contraction
//! recursion (the library uses subset enumeration and determinants), and
//! plain subset scans.

use proptest::prelude::*;

use crate::graph::{Edge, EdgeId, Multigraph};
use crate::rational::Rational;

/// Small arbitrary multigraph: 2..=6 vertices, up to 8 edges, small random
/// rational weights, self-loops allowed.
pub(crate) fn arb_graph() -> impl Strategy<Value = Multigraph> {
    (2usize..=6)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec((0usize..n, 0usize..n, 1i64..40, 1i64..40), 0..=8),
            )
        })
        .prop_map(|(n, raw_edges)| {
            let edges = raw_edges
                .into_iter()
                .enumerate()
                .map(|(i, (tail, head, p, q))| Edge {
                    id: EdgeId::new(format!("e{i}")),
                    tail,
                    head,
                    weight: Rational::new(p.into(), q.into()).unwrap(),
                })
                .collect();
            Multigraph::new(n, edges).unwrap()
        })
}

/// As [`arb_graph`], filtered to connected loop-free graphs with at least
/// two edges (enough structure for edge-pair operations).
pub(crate) fn arb_connected_graph() -> impl Strategy<Value = Multigraph> {
    arb_graph().prop_filter("connected, loop-free, >=2 edges", |g| {
        g.is_connected() && !g.has_self_loops() && g.edge_count() >= 2
    })
}

/// Total spanning-tree weight by deletion/contraction recursion:
/// `t(G) = t(G - e) + w(e) * t(G / e)` for any non-loop edge `e`.
pub(crate) fn naive_tree_weight(g: &Multigraph) -> Rational {
    if !g.is_connected() {
        return Rational::zero();
    }
    if g.vertex_count() == 1 {
        return Rational::one();
    }
    let edge = g
        .edges()
        .iter()
        .find(|e| !e.is_self_loop())
        .expect("connected graph on >=2 vertices has a non-loop edge");
    let id = edge.id.as_str();
    let weight = edge.weight.clone();
    let without = naive_tree_weight(&g.delete_edge(id).unwrap());
    let contracted = naive_tree_weight(&g.contract_edge(id).unwrap());
    without + weight * contracted
}
