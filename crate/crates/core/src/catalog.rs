//! Deterministic generation of small multigraph families.
//!
//! Three generators feed the property sweeps and the conjecture search:
//!
//! * [`labeled_connected_multigraphs`] — every connected multigraph on
//!   labeled vertices within the given bounds, one per edge multiset, in a
//!   fixed canonical order. Exhaustive but full of isomorphic repeats.
//! * [`structural_suite`] — one representative per isomorphism class of
//!   connected simple structure (canonical under vertex permutation), each
//!   expanded with every edge-multiplicity assignment that fits the edge
//!   budget. Far smaller than the labeled family while still covering
//!   every multigraph shape.
//! * [`random_connected_multigraph`] — seeded random instances with unit
//!   or random rational weights drawn as `p/q`, `p, q` uniform in 1..=100.
//!
//! All generators emit unit weights unless a weight scheme says otherwise,
//! number edges `e1, e2, ...` in generation order, and orient each edge
//! from its smaller endpoint except where randomness chooses otherwise.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeId, Multigraph};
use crate::rational::Rational;
use crate::rng::SplitMix64;

/// Vertex pairs `(u, v)` with `u < v` in lexicographic order.
fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

fn unit_graph(vertex_count: usize, endpoints: &[(usize, usize)]) -> Multigraph {
    let edges = endpoints
        .iter()
        .enumerate()
        .map(|(i, &(tail, head))| Edge {
            id: EdgeId::new(format!("e{}", i + 1)),
            tail,
            head,
            weight: Rational::one(),
        })
        .collect();
    Multigraph::new(vertex_count, edges).expect("generated graph is valid")
}

/// Every connected multigraph with `1..=max_vertices` labeled vertices and
/// at most `max_edges` edges, one per multiset of endpoint pairs, with unit
/// weights. Lazy; the order is fixed: by vertex count, then edge count,
/// then lexicographic multiset.
pub fn labeled_connected_multigraphs(
    max_vertices: usize,
    max_edges: usize,
) -> impl Iterator<Item = Multigraph> {
    (1..=max_vertices).flat_map(move |n| {
        let slots = vertex_pairs(n);
        let min_edges = n.saturating_sub(1);
        (min_edges..=max_edges).flat_map(move |m| {
            let slots = slots.clone();
            (0..slots.len())
                .combinations_with_replacement(m)
                .map(move |combo| {
                    let endpoints: Vec<(usize, usize)> =
                        combo.iter().map(|&k| slots[k]).collect();
                    unit_graph(n, &endpoints)
                })
                .filter(|g| g.is_connected())
        })
    })
}

/// Slot permutation tables: for each vertex permutation, where each vertex
/// pair lands.
fn slot_permutations(n: usize, slots: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let slot_index = |u: usize, v: usize| {
        let (a, b) = (u.min(v), u.max(v));
        slots
            .iter()
            .position(|&p| p == (a, b))
            .expect("pair is a slot")
    };
    (0..n)
        .permutations(n)
        .map(|perm| {
            slots
                .iter()
                .map(|&(u, v)| slot_index(perm[u], perm[v]))
                .collect()
        })
        .collect()
}

fn apply_slot_permutation(mask: u32, table: &[usize]) -> u32 {
    let mut image = 0u32;
    for (slot, &target) in table.iter().enumerate() {
        if mask & (1 << slot) != 0 {
            image |= 1 << target;
        }
    }
    image
}

fn mask_is_connected(n: usize, slots: &[(usize, usize)], mask: u32) -> bool {
    let mut dsu = crate::dsu::Dsu::new(n);
    let mut components = n;
    for (slot, &(u, v)) in slots.iter().enumerate() {
        if mask & (1 << slot) != 0 && dsu.union(u, v) {
            components -= 1;
        }
    }
    components == 1
}

/// Canonical representatives (minimal mask under vertex permutation) of
/// connected simple graphs on exactly `n` labeled vertices, with at most
/// `max_edges` edges.
fn canonical_connected_structures(n: usize, max_edges: usize) -> Vec<Vec<(usize, usize)>> {
    let slots = vertex_pairs(n);
    if n == 1 {
        return vec![Vec::new()];
    }
    let tables = slot_permutations(n, &slots);
    let mut out = Vec::new();
    'mask: for mask in 0u32..(1 << slots.len()) {
        if (mask.count_ones() as usize) > max_edges || !mask_is_connected(n, &slots, mask) {
            continue;
        }
        for table in &tables {
            if apply_slot_permutation(mask, table) < mask {
                continue 'mask;
            }
        }
        out.push(
            slots
                .iter()
                .enumerate()
                .filter(|&(slot, _)| mask & (1 << slot) != 0)
                .map(|(_, &pair)| pair)
                .collect(),
        );
    }
    out
}

/// One unit-weight multigraph per (isomorphism class of simple structure,
/// edge-multiplicity assignment) with at most `max_vertices` vertices and
/// at most `max_edges` total edges. Deterministic order.
pub fn structural_suite(max_vertices: usize, max_edges: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        for structure in canonical_connected_structures(n, max_edges) {
            let base = structure.len();
            if base > max_edges {
                continue;
            }
            let mut multiplicities = vec![1usize; base];
            spread_multiplicities(
                &structure,
                &mut multiplicities,
                0,
                max_edges - base,
                n,
                &mut out,
            );
        }
    }
    out
}

fn spread_multiplicities(
    structure: &[(usize, usize)],
    multiplicities: &mut Vec<usize>,
    position: usize,
    extra_left: usize,
    n: usize,
    out: &mut Vec<Multigraph>,
) {
    if position == structure.len() {
        let endpoints: Vec<(usize, usize)> = structure
            .iter()
            .zip(multiplicities.iter())
            .flat_map(|(&pair, &m)| std::iter::repeat_n(pair, m))
            .collect();
        out.push(unit_graph(n, &endpoints));
        return;
    }
    for extra in 0..=extra_left {
        multiplicities[position] = 1 + extra;
        spread_multiplicities(
            structure,
            multiplicities,
            position + 1,
            extra_left - extra,
            n,
            out,
        );
    }
    multiplicities[position] = 1;
}

/// How edge weights are drawn for generated graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightScheme {
    Unit,
    /// `p/q` with `p` and `q` uniform in `1..=100`.
    RandomRational,
}

impl WeightScheme {
    pub(crate) fn draw(&self, rng: &mut SplitMix64) -> Rational {
        match self {
            WeightScheme::Unit => Rational::one(),
            WeightScheme::RandomRational => {
                let p = rng.next_in_range(1, 100) as i64;
                let q = rng.next_in_range(1, 100) as i64;
                Rational::new(p.into(), q.into()).expect("positive denominator")
            }
        }
    }
}

/// One random connected multigraph: vertex count uniform in
/// `2..=min(max_vertices, max_edges + 1)`, edge count uniform in
/// `(n-1)..=max_edges`, endpoints uniform over distinct vertex pairs with
/// random orientation, redrawn wholesale until connected.
pub fn random_connected_multigraph(
    rng: &mut SplitMix64,
    max_vertices: usize,
    max_edges: usize,
    weights: WeightScheme,
) -> Result<Multigraph> {
    if max_vertices < 2 || max_edges < 1 {
        return Err(Error::InvalidSearchSpec(
            "random generation needs max_vertices >= 2 and max_edges >= 1".into(),
        ));
    }
    let top = max_vertices.min(max_edges + 1) as u64;
    for _ in 0..100_000 {
        let n = rng.next_in_range(2, top) as usize;
        let m = rng.next_in_range(n as u64 - 1, max_edges as u64) as usize;
        let edges = (0..m)
            .map(|i| {
                let tail = rng.next_below(n as u64) as usize;
                let mut head = rng.next_below(n as u64 - 1) as usize;
                if head >= tail {
                    head += 1;
                }
                Edge {
                    id: EdgeId::new(format!("e{}", i + 1)),
                    tail,
                    head,
                    weight: weights.draw(rng),
                }
            })
            .collect();
        let graph = Multigraph::new(n, edges).expect("generated graph is valid");
        if graph.is_connected() {
            return Ok(graph);
        }
    }
    unreachable!("connected draw succeeds long before the retry bound")
}

/// `count` seeded random connected multigraphs with random rational
/// weights, all drawn from one stream.
pub fn random_graph_suite(
    count: usize,
    max_vertices: usize,
    max_edges: usize,
    seed: u64,
) -> Vec<Multigraph> {
    let mut rng = SplitMix64::new(seed);
    (0..count)
        .map(|_| {
            random_connected_multigraph(
                &mut rng,
                max_vertices,
                max_edges,
                WeightScheme::RandomRational,
            )
            .expect("suite bounds are valid")
        })
        .collect()
}
