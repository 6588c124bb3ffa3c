//! Weighted random spanning trees and the conditional-probability check.
//!
//! Sampling uses Wilson's loop-erased random walk rooted at vertex 0: from
//! vertex `u` the walk crosses an incident non-loop edge with probability
//! proportional to its weight, parallel edges being distinct outcomes.
//! The resulting tree is distributed exactly proportionally to its weight
//! product. Step draws clear denominators per vertex and sample an
//! arbitrary-precision integer below the vertex's total, so the step
//! probabilities are exact and the whole procedure is reproducible from a
//! [`SplitMix64`] seed.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Multigraph};
use crate::rational::Rational;
use crate::rng::SplitMix64;
use crate::trees::family_weights;

use num_bigint::BigUint;

/// Reusable weighted-step sampler for one connected multigraph.
pub struct TreeSampler<'g> {
    graph: &'g Multigraph,
    /// Per vertex: (edge index, other endpoint, cumulative scaled weight).
    steps: Vec<Vec<(usize, usize, BigUint)>>,
    totals: Vec<BigUint>,
}

impl<'g> TreeSampler<'g> {
    pub fn new(graph: &'g Multigraph) -> Result<Self> {
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = graph.vertex_count();
        let mut steps: Vec<Vec<(usize, usize, BigUint)>> = vec![Vec::new(); n];
        let mut totals = vec![BigUint::from(0u8); n];
        for u in 0..n {
            let incident: Vec<(usize, usize)> = graph
                .edges()
                .iter()
                .enumerate()
                .filter(|(_, e)| !e.is_self_loop() && (e.tail == u || e.head == u))
                .map(|(i, e)| (i, if e.tail == u { e.head } else { e.tail }))
                .collect();
            let mut denom = BigInt::from(1);
            for &(i, _) in &incident {
                denom = denom.lcm(graph.edges()[i].weight.denom());
            }
            let mut cumulative = BigUint::from(0u8);
            for (i, other) in incident {
                let w = &graph.edges()[i].weight;
                let scaled = (w.numer() * (&denom / w.denom()))
                    .to_biguint()
                    .expect("weights are positive");
                cumulative += scaled;
                steps[u].push((i, other, cumulative.clone()));
            }
            totals[u] = cumulative;
        }
        Ok(TreeSampler { graph, steps, totals })
    }

    fn random_step(&self, rng: &mut SplitMix64, u: usize) -> (usize, usize) {
        let draw = rng.next_biguint_below(&self.totals[u]);
        for (edge, other, cumulative) in &self.steps[u] {
            if draw < *cumulative {
                return (*edge, *other);
            }
        }
        unreachable!("draw is below the cumulative total");
    }

    pub(crate) fn sample_mask(&self, rng: &mut SplitMix64) -> u64 {
        let n = self.graph.vertex_count();
        let mut in_tree = vec![false; n];
        let mut next_edge = vec![usize::MAX; n];
        let mut next_vertex = vec![usize::MAX; n];
        in_tree[0] = true;
        for start in 1..n {
            // Random walk from `start`, erasing loops by overwriting.
            let mut u = start;
            while !in_tree[u] {
                let (edge, other) = self.random_step(rng, u);
                next_edge[u] = edge;
                next_vertex[u] = other;
                u = other;
            }
            // Freeze the surviving path.
            let mut u = start;
            while !in_tree[u] {
                in_tree[u] = true;
                u = next_vertex[u];
            }
        }
        let mut mask = 0u64;
        for &edge in &next_edge[1..] {
            mask |= 1 << edge;
        }
        mask
    }

    /// Draws one spanning tree with probability proportional to its weight.
    pub fn sample(&self, rng: &mut SplitMix64) -> EdgeSet {
        EdgeSet::from_mask(self.graph, self.sample_mask(rng))
    }
}

/// One-shot convenience wrapper around [`TreeSampler`].
pub fn sample_spanning_tree(graph: &Multigraph, rng: &mut SplitMix64) -> Result<EdgeSet> {
    Ok(TreeSampler::new(graph)?.sample(rng))
}

/// The two exact conditional probabilities for an edge pair:
/// `(Pr[e1 in T | e2 not in T], Pr[e1 in T | e2 in T])` under the
/// weight-proportional tree distribution. The second edge must not be a
/// bridge, otherwise the first event conditions on probability zero.
pub fn exact_conditionals(graph: &Multigraph, e1: &str, e2: &str) -> Result<(Rational, Rational)> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let fam = family_weights(graph, e1, e2)?;
    let without_second = fam.without_second();
    if without_second.is_zero() {
        return Err(Error::BridgeEdge { id: e2.to_string() });
    }
    let with_second = fam.with_second();
    debug_assert!(with_second.is_positive(), "connected graph, non-loop e2");
    Ok((
        &fam.t_first_only / &without_second,
        &fam.t_both / &with_second,
    ))
}

/// Empirical estimate of one conditional probability next to its exact
/// value. `empirical_p` and `abs_gap` are `None` when the conditioning
/// event never occurred in the sample (insufficient samples).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleReport {
    pub n_samples: u64,
    pub seed: u64,
    /// How often the conditioning event occurred.
    pub conditioning_count: u64,
    pub empirical_p: Option<Rational>,
    pub exact_p: Rational,
    pub abs_gap: Option<Rational>,
}

impl SampleReport {
    fn new(
        n_samples: u64,
        seed: u64,
        hits: u64,
        conditioning_count: u64,
        exact_p: Rational,
    ) -> Self {
        let empirical_p = (conditioning_count > 0)
            .then(|| Rational::from_ratio(hits, conditioning_count).expect("nonzero denominator"));
        let abs_gap = empirical_p.as_ref().map(|p| (p - &exact_p).abs());
        SampleReport {
            n_samples,
            seed,
            conditioning_count,
            empirical_p,
            exact_p,
            abs_gap,
        }
    }
}

/// Draws `n_samples` trees from the seeded sampler and reports the two
/// conditional frequencies next to their exact values, in the order
/// (given `e2` absent, given `e2` present).
pub fn empirical_conditionals(
    graph: &Multigraph,
    e1: &str,
    e2: &str,
    n_samples: u64,
    seed: u64,
) -> Result<(SampleReport, SampleReport)> {
    if n_samples == 0 {
        return Err(Error::ZeroSamples);
    }
    let (exact_absent, exact_present) = exact_conditionals(graph, e1, e2)?;

    let sampler = TreeSampler::new(graph)?;
    let bit1 = 1u64 << graph.edge_index(e1).expect("validated");
    let bit2 = 1u64 << graph.edge_index(e2).expect("validated");
    let mut rng = SplitMix64::new(seed);
    let mut with_second = 0u64;
    let mut with_both = 0u64;
    let mut first_without_second = 0u64;
    for _ in 0..n_samples {
        let mask = sampler.sample_mask(&mut rng);
        if mask & bit2 != 0 {
            with_second += 1;
            if mask & bit1 != 0 {
                with_both += 1;
            }
        } else if mask & bit1 != 0 {
            first_without_second += 1;
        }
    }
    let without_second = n_samples - with_second;

    Ok((
        SampleReport::new(
            n_samples,
            seed,
            first_without_second,
            without_second,
            exact_absent,
        ),
        SampleReport::new(n_samples, seed, with_both, with_second, exact_present),
    ))
}
