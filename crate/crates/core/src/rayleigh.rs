//! Negative correlation of edge pairs in random spanning trees.
//!
//! For an ordered pair of distinct non-loop edges this module enumerates
//! the *important forests* (edge sets that extend to a spanning tree
//! through either edge), splits them by whether the two edges point the
//! same way around the unique cycle they close, and verifies:
//!
//! * the cross-product difference of the four tree-family weights is
//!   exactly the weighted square of the class-weight gap, hence
//!   nonnegative;
//! * the equivalent rearrangement of that identity;
//! * the per-monomial counting equation behind it, coefficient by
//!   coefficient.
//!
//! The family weights come from the determinant path while the class
//! weights come from brute-force enumeration, so every verified identity
//! also cross-checks the two computation routes against each other.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::graph::{mask_indices, EdgeId, EdgeSet, Multigraph};
use crate::rational::Rational;
use crate::trees::{family_weights, spanning_tree_masks, FamilyWeights, DEFAULT_TREE_EDGE_CAP};

/// Important forests for an edge pair, split by cycle orientation.
///
/// A forest is *positive* when the two distinguished edges point the same
/// way around the unique cycle of `F + e1 + e2`, *negative* otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientedForestClasses {
    pub positive: Vec<EdgeSet>,
    pub negative: Vec<EdgeSet>,
    pub weight_positive: Rational,
    pub weight_negative: Rational,
}

/// Per-pair tree and forest family masks; the shared input of the
/// enumeration-side computations.
pub(crate) struct PairFamilies {
    pub(crate) split_first: Vec<u64>,
    pub(crate) split_second: Vec<u64>,
    pub(crate) both: Vec<u64>,
    pub(crate) neither: Vec<u64>,
    /// Important forest masks (neither distinguished edge included).
    pub(crate) positive: Vec<u64>,
    pub(crate) negative: Vec<u64>,
}

pub(crate) fn pair_families(
    graph: &Multigraph,
    e1: &str,
    e2: &str,
    cap: usize,
) -> Result<PairFamilies> {
    let (i1, i2) = graph.require_edge_pair(e1, e2)?;
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let bit1 = 1u64 << i1;
    let bit2 = 1u64 << i2;

    let trees = spanning_tree_masks(graph, cap)?;
    let mut families = PairFamilies {
        split_first: Vec::new(),
        split_second: Vec::new(),
        both: Vec::new(),
        neither: Vec::new(),
        positive: Vec::new(),
        negative: Vec::new(),
    };
    for &mask in &trees {
        match (mask & bit1 != 0, mask & bit2 != 0) {
            (true, true) => families.both.push(mask),
            (true, false) => families.split_first.push(mask),
            (false, true) => families.split_second.push(mask),
            (false, false) => families.neither.push(mask),
        }
    }

    // Every important forest is some tree through e1 minus e1; the
    // candidate survives if adding e2 also makes a tree.
    for &mask in &families.split_first {
        let forest = mask & !bit1;
        if is_spanning_tree_mask(graph, forest | bit2) {
            if forest_is_positive(graph, forest, i1, i2) {
                families.positive.push(forest);
            } else {
                families.negative.push(forest);
            }
        }
    }
    families.positive.sort_unstable();
    families.negative.sort_unstable();
    Ok(families)
}

fn is_spanning_tree_mask(graph: &Multigraph, mask: u64) -> bool {
    let mut dsu = Dsu::new(graph.vertex_count());
    let mut size = 0usize;
    for idx in mask_indices(mask) {
        let e = &graph.edges()[idx];
        if !dsu.union(e.tail, e.head) {
            return false;
        }
        size += 1;
    }
    size == graph.vertex_count() - 1
}

/// Classifies one important forest: walk the tree path of `F + e1` from the
/// head of `e2` to its tail (the direction that closes the cycle along
/// `e2`), and report whether the walk crosses `e1` from tail to head.
fn forest_is_positive(graph: &Multigraph, forest: u64, i1: usize, i2: usize) -> bool {
    let n = graph.vertex_count();
    let tree = forest | (1 << i1);
    let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for idx in mask_indices(tree) {
        let e = &graph.edges()[idx];
        adjacency[e.tail].push((idx, e.head));
        adjacency[e.head].push((idx, e.tail));
    }

    let start = graph.edges()[i2].head;
    let target = graph.edges()[i2].tail;
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut stack = vec![start];
    let mut seen = vec![false; n];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for &(edge, v) in &adjacency[u] {
            if !seen[v] {
                seen[v] = true;
                parent[v] = Some((edge, u));
                stack.push(v);
            }
        }
    }

    let mut cursor = target;
    while cursor != start {
        let (edge, from) = parent[cursor].expect("tree spans all vertices");
        if edge == i1 {
            // Walk direction is from -> cursor.
            return from == graph.edges()[i1].tail;
        }
        cursor = from;
    }
    unreachable!("the tree path closing the cycle must cross e1");
}

fn classes_from_families(graph: &Multigraph, families: &PairFamilies) -> OrientedForestClasses {
    let weight_sum = |masks: &[u64]| {
        masks
            .iter()
            .fold(Rational::zero(), |acc, &m| acc + graph.weight_of_mask(m))
    };
    OrientedForestClasses {
        weight_positive: weight_sum(&families.positive),
        weight_negative: weight_sum(&families.negative),
        positive: families
            .positive
            .iter()
            .map(|&m| EdgeSet::from_mask(graph, m))
            .collect(),
        negative: families
            .negative
            .iter()
            .map(|&m| EdgeSet::from_mask(graph, m))
            .collect(),
    }
}

/// Enumerates the important forests of `(e1, e2)` and classifies each by
/// cycle orientation. Requires a connected graph and distinct non-loop
/// edges.
pub fn important_forests(graph: &Multigraph, e1: &str, e2: &str) -> Result<OrientedForestClasses> {
    important_forests_capped(graph, e1, e2, DEFAULT_TREE_EDGE_CAP)
}

/// [`important_forests`] with an explicit edge cap.
pub fn important_forests_capped(
    graph: &Multigraph,
    e1: &str,
    e2: &str,
    cap: usize,
) -> Result<OrientedForestClasses> {
    let families = pair_families(graph, e1, e2, cap)?;
    Ok(classes_from_families(graph, &families))
}

/// The Rayleigh difference
/// `|T_e1,not-e2| * |T_not-e1,e2| - |T_e1,e2| * |T_not-e1,not-e2|`
/// computed from the determinant-backed family weights. Nonnegative on
/// every multigraph.
pub fn rayleigh_delta(graph: &Multigraph, e1: &str, e2: &str) -> Result<Rational> {
    Ok(delta_of(&family_weights(graph, e1, e2)?))
}

pub(crate) fn delta_of(fam: &FamilyWeights) -> Rational {
    &fam.t_first_only * &fam.t_second_only - &fam.t_both * &fam.t_neither
}

/// Both sides of the square identity and of its rearranged form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub families: FamilyWeights,
    pub weight_positive: Rational,
    pub weight_negative: Rational,
    /// Cross-product difference of the family weights.
    pub delta: Rational,
    /// `w(e1) * w(e2) * (|C+| - |C-|)^2`.
    pub square_form: Rational,
    pub equal: bool,
    /// Split product plus twice the weighted mixed class product.
    pub eq2_lhs: Rational,
    /// Joint product plus the weighted sum of squared class weights.
    pub eq2_rhs: Rational,
    pub eq2_equal: bool,
}

/// Evaluates the square identity and its rearrangement, with the family
/// side computed by determinants and the class side by enumeration.
pub fn verify_identity(graph: &Multigraph, e1: &str, e2: &str) -> Result<IdentityReport> {
    verify_identity_capped(graph, e1, e2, DEFAULT_TREE_EDGE_CAP)
}

/// [`verify_identity`] with an explicit edge cap.
pub fn verify_identity_capped(
    graph: &Multigraph,
    e1: &str,
    e2: &str,
    cap: usize,
) -> Result<IdentityReport> {
    let classes = important_forests_capped(graph, e1, e2, cap)?;
    let families = family_weights(graph, e1, e2)?;
    let w1 = &graph.edge(e1).expect("validated").weight;
    let w2 = &graph.edge(e2).expect("validated").weight;
    let w12 = w1 * w2;

    let delta = delta_of(&families);
    let gap = &classes.weight_positive - &classes.weight_negative;
    let square_form = &w12 * gap.square();

    let eq2_lhs = &families.t_first_only * &families.t_second_only
        + Rational::from_integer(2) * &w12 * &classes.weight_positive * &classes.weight_negative;
    let eq2_rhs = &families.t_both * &families.t_neither
        + &w12 * (classes.weight_positive.square() + classes.weight_negative.square());

    Ok(IdentityReport {
        equal: delta == square_form,
        eq2_equal: eq2_lhs == eq2_rhs,
        weight_positive: classes.weight_positive,
        weight_negative: classes.weight_negative,
        families,
        delta,
        square_form,
        eq2_lhs,
        eq2_rhs,
    })
}

/// Formal monomial in the edge-weight variables: edge id -> multiplicity,
/// zero entries omitted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct MonomialKey(BTreeMap<EdgeId, u32>);

impl MonomialKey {
    pub(crate) fn from_exponents(graph: &Multigraph, exponents: &[u8]) -> Self {
        let map = exponents
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(i, &e)| (graph.edges()[i].id.clone(), u32::from(e)))
            .collect();
        MonomialKey(map)
    }

    /// Builds a key from explicit id/multiplicity pairs.
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (EdgeId, u32)>,
    {
        MonomialKey(pairs.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn exponent(&self, id: &str) -> u32 {
        self.0.get(id).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&EdgeId, u32)> {
        self.0.iter().map(|(id, &e)| (id, e))
    }

    pub fn total_degree(&self) -> u32 {
        self.0.values().sum()
    }

    /// Substitutes the graph's weights into the monomial.
    pub fn evaluate(&self, graph: &Multigraph) -> Result<Rational> {
        let mut product = Rational::one();
        for (id, exponent) in &self.0 {
            let edge = graph.edge(id.as_str()).ok_or_else(|| Error::UnknownEdge {
                id: id.to_string(),
            })?;
            for _ in 0..*exponent {
                product = product * &edge.weight;
            }
        }
        Ok(product)
    }

    /// The structural constraints every monomial with a nonzero count
    /// satisfies: both distinguished edges appear exactly once, the total
    /// degree is `2(|V| - 1)`, no multiplicity exceeds 2, and the monomial
    /// degree of every vertex exceeds 1.
    pub fn is_feasible(&self, graph: &Multigraph, e1: &str, e2: &str) -> bool {
        if self.exponent(e1) != 1 || self.exponent(e2) != 1 {
            return false;
        }
        if self.total_degree() != 2 * (graph.vertex_count() as u32 - 1) {
            return false;
        }
        let mut vertex_degree = vec![0u32; graph.vertex_count()];
        for (id, exponent) in &self.0 {
            if *exponent > 2 {
                return false;
            }
            let edge = match graph.edge(id.as_str()) {
                Some(e) => e,
                None => return false,
            };
            vertex_degree[edge.tail] += exponent;
            vertex_degree[edge.head] += exponent;
        }
        vertex_degree.iter().all(|&d| d > 1)
    }
}

/// Ordered-pair counts of one monomial across the five products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct CoefficientCounts {
    /// Pairs from the two split families.
    pub a_split: u64,
    /// Pairs from the joint and empty families.
    pub a_joint: u64,
    /// Mixed-orientation important-forest pairs (positive first).
    pub a_pm: u64,
    /// Positive/positive important-forest pairs.
    pub a_pp: u64,
    /// Negative/negative important-forest pairs.
    pub a_mm: u64,
}

impl CoefficientCounts {
    /// The counting equation: `a_split + 2 a_pm = a_joint + a_pp + a_mm`.
    /// The mixed count is doubled because it stores one orientation of
    /// each unordered mixed pair.
    pub fn balanced(&self) -> bool {
        self.a_split + 2 * self.a_pm == self.a_joint + self.a_pp + self.a_mm
    }
}

/// Tallies, for every monomial, how many ordered pairs from each of the
/// five products multiply to it. Keys are emitted in sorted order.
pub fn monomial_tally(
    graph: &Multigraph,
    e1: &str,
    e2: &str,
) -> Result<BTreeMap<MonomialKey, CoefficientCounts>> {
    monomial_tally_capped(graph, e1, e2, DEFAULT_TREE_EDGE_CAP)
}

/// [`monomial_tally`] with an explicit edge cap.
pub fn monomial_tally_capped(
    graph: &Multigraph,
    e1: &str,
    e2: &str,
    cap: usize,
) -> Result<BTreeMap<MonomialKey, CoefficientCounts>> {
    let families = pair_families(graph, e1, e2, cap)?;
    let i1 = graph.edge_index(e1).expect("validated");
    let i2 = graph.edge_index(e2).expect("validated");
    let edge_count = graph.edge_count();

    let mut tally: HashMap<Vec<u8>, CoefficientCounts> = HashMap::new();
    let exponents_of = |first: u64, second: u64| {
        let mut exps = vec![0u8; edge_count];
        for idx in mask_indices(first) {
            exps[idx] += 1;
        }
        for idx in mask_indices(second) {
            exps[idx] += 1;
        }
        exps
    };

    for &t1 in &families.split_first {
        for &t2 in &families.split_second {
            tally.entry(exponents_of(t1, t2)).or_default().a_split += 1;
        }
    }
    for &t1 in &families.both {
        for &t2 in &families.neither {
            tally.entry(exponents_of(t1, t2)).or_default().a_joint += 1;
        }
    }
    // Forest pairs additionally carry one copy of each distinguished edge.
    let forest_exponents = |f1: u64, f2: u64| {
        let mut exps = exponents_of(f1, f2);
        exps[i1] += 1;
        exps[i2] += 1;
        exps
    };
    for &f1 in &families.positive {
        for &f2 in &families.positive {
            tally.entry(forest_exponents(f1, f2)).or_default().a_pp += 1;
        }
        for &f2 in &families.negative {
            tally.entry(forest_exponents(f1, f2)).or_default().a_pm += 1;
        }
    }
    for &f1 in &families.negative {
        for &f2 in &families.negative {
            tally.entry(forest_exponents(f1, f2)).or_default().a_mm += 1;
        }
    }

    Ok(tally
        .into_iter()
        .map(|(exps, counts)| (MonomialKey::from_exponents(graph, &exps), counts))
        .collect())
}

/// Result of recomputing the orientation classes with the first edge's
/// stored orientation reversed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub original: OrientedForestClasses,
    pub flipped: OrientedForestClasses,
    /// Whether the positive and negative classes trade places exactly.
    pub swapped: bool,
}

/// Recomputes the classes with `e1` reversed and reports whether the two
/// orientation classes swap as sets.
pub fn flip_orientation_check(graph: &Multigraph, e1: &str, e2: &str) -> Result<SymmetryReport> {
    flip_orientation_check_capped(graph, e1, e2, DEFAULT_TREE_EDGE_CAP)
}

/// [`flip_orientation_check`] with an explicit edge cap.
pub fn flip_orientation_check_capped(
    graph: &Multigraph,
    e1: &str,
    e2: &str,
    cap: usize,
) -> Result<SymmetryReport> {
    let original = important_forests_capped(graph, e1, e2, cap)?;
    let flipped = important_forests_capped(&graph.flip_edge(e1)?, e1, e2, cap)?;
    let swapped = original.positive == flipped.negative && original.negative == flipped.positive;
    Ok(SymmetryReport {
        original,
        flipped,
        swapped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::testutil::arb_connected_graph;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn set(graph: &Multigraph, ids: &[&str]) -> EdgeSet {
        EdgeSet::from_ids(graph, ids.iter().copied()).unwrap()
    }

    #[test]
    fn triangle_has_one_positive_important_forest() {
        let g = triangle();
        let classes = important_forests(&g, "e1", "e2").unwrap();
        assert_eq!(classes.positive, vec![set(&g, &["e3"])]);
        assert!(classes.negative.is_empty());
        assert_eq!(classes.weight_positive, r("1"));
        assert_eq!(classes.weight_negative, r("0"));
    }

    #[test]
    fn parallel_pair_has_one_negative_important_forest() {
        let g = parallel_pair();
        let classes = important_forests(&g, "e1", "e2").unwrap();
        assert!(classes.positive.is_empty());
        assert_eq!(classes.negative, vec![EdgeSet::empty()]);
        assert_eq!(classes.weight_negative, r("1"));
    }

    #[test]
    fn series_path_has_no_important_forests() {
        let classes = important_forests(&series_path(), "e1", "e2").unwrap();
        assert!(classes.positive.is_empty());
        assert!(classes.negative.is_empty());
    }

    #[test]
    fn important_forests_rejects_bad_input() {
        let disconnected =
            Multigraph::new(4, vec![edge("e1", 0, 1, "1"), edge("e2", 2, 3, "1")]).unwrap();
        assert_eq!(
            important_forests(&disconnected, "e1", "e2").unwrap_err(),
            Error::Disconnected
        );
        assert!(matches!(
            important_forests(&triangle(), "e1", "e1").unwrap_err(),
            Error::IdenticalEdges { .. }
        ));
    }

    #[test]
    fn delta_spot_values() {
        assert_eq!(rayleigh_delta(&triangle(), "e1", "e2").unwrap(), r("1"));
        assert_eq!(
            rayleigh_delta(&parallel_pair(), "e1", "e2").unwrap(),
            r("10/21")
        );
        assert_eq!(rayleigh_delta(&series_path(), "e1", "e2").unwrap(), r("0"));
    }

    #[test]
    fn identity_spot_values() {
        let report = verify_identity(&triangle(), "e1", "e2").unwrap();
        assert_eq!(report.delta, r("1"));
        assert_eq!(report.square_form, r("1"));
        assert!(report.equal && report.eq2_equal);

        let report = verify_identity(&parallel_pair(), "e1", "e2").unwrap();
        assert_eq!(report.delta, r("10/21"));
        assert_eq!(report.square_form, r("10/21"));
        assert!(report.equal && report.eq2_equal);

        let report = verify_identity(&series_path(), "e1", "e2").unwrap();
        assert_eq!(report.delta, r("0"));
        assert_eq!(report.square_form, r("0"));
        assert!(report.equal && report.eq2_equal);
    }

    #[test]
    fn triangle_monomial_counts() {
        let g = triangle();
        let tally = monomial_tally(&g, "e1", "e2").unwrap();
        let key = MonomialKey::from_pairs([
            (EdgeId::new("e1"), 1),
            (EdgeId::new("e2"), 1),
            (EdgeId::new("e3"), 2),
        ]);
        let counts = tally.get(&key).copied().unwrap();
        assert_eq!(
            counts,
            CoefficientCounts {
                a_split: 1,
                a_joint: 0,
                a_pm: 0,
                a_pp: 1,
                a_mm: 0
            }
        );
        assert!(counts.balanced());
        for (key, counts) in &tally {
            assert!(counts.balanced(), "unbalanced key {key:?}");
            assert!(key.is_feasible(&g, "e1", "e2"));
        }
    }

    #[test]
    fn parallel_pair_monomial_counts() {
        let g = parallel_pair();
        let tally = monomial_tally(&g, "e1", "e2").unwrap();
        assert_eq!(tally.len(), 1);
        let key = MonomialKey::from_pairs([(EdgeId::new("e1"), 1), (EdgeId::new("e2"), 1)]);
        let counts = tally.get(&key).copied().unwrap();
        assert_eq!(
            counts,
            CoefficientCounts {
                a_split: 1,
                a_joint: 0,
                a_pm: 0,
                a_pp: 0,
                a_mm: 1
            }
        );
        assert!(counts.balanced());
    }

    #[test]
    fn series_path_monomial_tally_is_empty() {
        let tally = monomial_tally(&series_path(), "e1", "e2").unwrap();
        assert!(tally.is_empty());
    }

    #[test]
    fn orientation_flip_swaps_classes_on_fixtures() {
        for g in [triangle(), parallel_pair(), series_path()] {
            let report = flip_orientation_check(&g, "e1", "e2").unwrap();
            assert!(report.swapped);
        }
        // Triangle: the single forest moves from positive to negative.
        let report = flip_orientation_check(&triangle(), "e1", "e2").unwrap();
        assert!(report.original.negative.is_empty());
        assert!(report.flipped.positive.is_empty());
        assert_eq!(report.original.positive, report.flipped.negative);
    }

    #[test]
    fn monomial_evaluate_substitutes_weights() {
        let g = parallel_pair();
        let key = MonomialKey::from_pairs([(EdgeId::new("e1"), 1), (EdgeId::new("e2"), 1)]);
        assert_eq!(key.evaluate(&g).unwrap(), r("10/21"));
        assert_eq!(key.total_degree(), 2);
        assert_eq!(key.exponent("e1"), 1);
        assert_eq!(key.exponent("absent"), 0);
    }

    fn ordered_non_loop_pairs(g: &Multigraph) -> Vec<(String, String)> {
        let ids: Vec<String> = g
            .edges()
            .iter()
            .filter(|e| !e.is_self_loop())
            .map(|e| e.id.to_string())
            .collect();
        let mut pairs = Vec::new();
        for a in &ids {
            for b in &ids {
                if a != b {
                    pairs.push((a.clone(), b.clone()));
                }
            }
        }
        pairs
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn identity_and_balance_hold(g in arb_connected_graph()) {
            for (e1, e2) in ordered_non_loop_pairs(&g) {
                let report = verify_identity(&g, &e1, &e2).unwrap();
                prop_assert!(report.equal);
                prop_assert!(report.eq2_equal);
                prop_assert!(!report.delta.is_negative());

                let tally = monomial_tally(&g, &e1, &e2).unwrap();
                for (key, counts) in &tally {
                    prop_assert!(counts.balanced());
                    prop_assert!(key.is_feasible(&g, &e1, &e2));
                }
            }
        }

        #[test]
        fn tally_reconstructs_the_five_products(g in arb_connected_graph()) {
            for (e1, e2) in ordered_non_loop_pairs(&g) {
                let tally = monomial_tally(&g, &e1, &e2).unwrap();
                let fam = family_weights(&g, &e1, &e2).unwrap();
                let classes = important_forests(&g, &e1, &e2).unwrap();
                let w12 = &g.edge(&e1).unwrap().weight * &g.edge(&e2).unwrap().weight;

                let mut split = Rational::zero();
                let mut joint = Rational::zero();
                let mut pp = Rational::zero();
                let mut mm = Rational::zero();
                let mut pm = Rational::zero();
                for (key, counts) in &tally {
                    let value = key.evaluate(&g).unwrap();
                    let weigh = |count: u64| Rational::from_integer(count as i64) * &value;
                    split = split + weigh(counts.a_split);
                    joint = joint + weigh(counts.a_joint);
                    pp = pp + weigh(counts.a_pp);
                    mm = mm + weigh(counts.a_mm);
                    pm = pm + weigh(counts.a_pm);
                }
                prop_assert_eq!(split, &fam.t_first_only * &fam.t_second_only);
                prop_assert_eq!(joint, &fam.t_both * &fam.t_neither);
                prop_assert_eq!(pp, &w12 * classes.weight_positive.square());
                prop_assert_eq!(mm, &w12 * classes.weight_negative.square());
                prop_assert_eq!(
                    pm,
                    &w12 * &classes.weight_positive * &classes.weight_negative
                );
            }
        }

        #[test]
        fn flip_swaps_classes(g in arb_connected_graph()) {
            for (e1, e2) in ordered_non_loop_pairs(&g) {
                prop_assert!(flip_orientation_check(&g, &e1, &e2).unwrap().swapped);
            }
        }
    }
}
