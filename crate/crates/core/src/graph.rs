//! Weighted multigraph with stable edge identities.
//!
//! Vertices are `0..n`. Edges carry a caller-supplied string id, an
//! orientation (the stored tail/head pair, kept as data and never
//! recomputed), and a strictly positive exact weight. Parallel edges are
//! allowed and stay distinct through every operation; self-loops are
//! accepted at construction but flagged, and the tree machinery ignores
//! them.
//!
//! All values here are immutable after construction: deletion, contraction
//! and orientation flips return new graphs. Ids of surviving edges are
//! preserved verbatim, which keeps derived graphs and monomial keys
//! comparable across a whole computation.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Caller-supplied edge identifier, unique within a graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(String);

impl EdgeId {
    pub fn new(id: impl Into<String>) -> Self {
        EdgeId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<&str> for EdgeId {
    fn from(s: &str) -> Self {
        EdgeId(s.to_string())
    }
}

impl From<String> for EdgeId {
    fn from(s: String) -> Self {
        EdgeId(s)
    }
}

impl std::borrow::Borrow<str> for EdgeId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

/// One oriented, weighted edge. The (tail, head) order is the stored
/// orientation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Edge {
    pub id: EdgeId,
    pub tail: usize,
    pub head: usize,
    pub weight: Rational,
}

impl Edge {
    pub fn is_self_loop(&self) -> bool {
        self.tail == self.head
    }

    /// Unordered endpoint pair, for parallel-edge detection.
    pub fn endpoints(&self) -> (usize, usize) {
        (self.tail.min(self.head), self.tail.max(self.head))
    }
}

/// Weighted multigraph on vertices `0..vertex_count`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl Multigraph {
    /// Validates endpoints, weights and id uniqueness.
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::NoVertices);
        }
        let mut seen = HashSet::new();
        for edge in &edges {
            if !edge.weight.is_positive() {
                return Err(Error::NonPositiveWeight {
                    edge: edge.id.to_string(),
                });
            }
            for v in [edge.tail, edge.head] {
                if v >= vertex_count {
                    return Err(Error::EndpointOutOfRange {
                        edge: edge.id.to_string(),
                        vertex: v,
                        vertex_count,
                    });
                }
            }
            if !seen.insert(edge.id.clone()) {
                return Err(Error::DuplicateId {
                    id: edge.id.to_string(),
                });
            }
        }
        Ok(Multigraph {
            vertex_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id.as_str() == id)
    }

    /// Position of an edge in the stored edge list.
    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id.as_str() == id)
    }

    pub(crate) fn require_edge_index(&self, id: &str) -> Result<usize> {
        self.edge_index(id).ok_or_else(|| Error::UnknownEdge {
            id: id.to_string(),
        })
    }

    /// Index of a named edge, additionally rejecting self-loops.
    pub(crate) fn require_non_loop_edge(&self, id: &str) -> Result<usize> {
        let idx = self.require_edge_index(id)?;
        if self.edges[idx].is_self_loop() {
            return Err(Error::SelfLoop { id: id.to_string() });
        }
        Ok(idx)
    }

    /// Validates an ordered pair of distinct non-loop edges.
    pub(crate) fn require_edge_pair(&self, e1: &str, e2: &str) -> Result<(usize, usize)> {
        if e1 == e2 {
            return Err(Error::IdenticalEdges { id: e1.to_string() });
        }
        Ok((self.require_non_loop_edge(e1)?, self.require_non_loop_edge(e2)?))
    }

    pub fn has_self_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_self_loop)
    }

    pub fn has_parallel_edges(&self) -> bool {
        let mut seen = HashSet::new();
        self.edges
            .iter()
            .filter(|e| !e.is_self_loop())
            .any(|e| !seen.insert(e.endpoints()))
    }

    pub(crate) fn non_loop_indices(&self) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| !self.edges[i].is_self_loop())
            .collect()
    }

    /// Returns the graph without the named edge; everything else unchanged.
    pub fn delete_edge(&self, id: &str) -> Result<Multigraph> {
        let idx = self.require_edge_index(id)?;
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Ok(Multigraph {
            vertex_count: self.vertex_count,
            edges,
        })
    }

    /// Identifies the endpoints of the named edge and removes it.
    ///
    /// The smaller endpoint index survives and every vertex above the larger
    /// endpoint shifts down by one. Any edge that is a self-loop after the
    /// identification is dropped; parallel edges stay distinct. Surviving
    /// edges keep their ids, weights and orientations.
    pub fn contract_edge(&self, id: &str) -> Result<Multigraph> {
        let idx = self.require_edge_index(id)?;
        let target = &self.edges[idx];
        if target.is_self_loop() {
            return Err(Error::ContractSelfLoop { id: id.to_string() });
        }
        let keep = target.tail.min(target.head);
        let drop = target.tail.max(target.head);
        let relabel = |v: usize| {
            if v == drop {
                keep
            } else if v > drop {
                v - 1
            } else {
                v
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, e)| Edge {
                id: e.id.clone(),
                tail: relabel(e.tail),
                head: relabel(e.head),
                weight: e.weight.clone(),
            })
            .filter(|e| !e.is_self_loop())
            .collect();
        Ok(Multigraph {
            vertex_count: self.vertex_count - 1,
            edges,
        })
    }

    /// Returns the graph with the named edge's stored orientation reversed.
    pub fn flip_edge(&self, id: &str) -> Result<Multigraph> {
        let idx = self.require_edge_index(id)?;
        let mut edges = self.edges.clone();
        let flipped = &mut edges[idx];
        std::mem::swap(&mut flipped.tail, &mut flipped.head);
        Ok(Multigraph {
            vertex_count: self.vertex_count,
            edges,
        })
    }

    /// True iff every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count;
        let mut adjacency = vec![Vec::new(); n];
        for edge in &self.edges {
            if !edge.is_self_loop() {
                adjacency[edge.tail].push(edge.head);
                adjacency[edge.head].push(edge.tail);
            }
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }

    /// Whether deleting the edge disconnects the graph. Only meaningful on
    /// connected input; self-loops are never bridges.
    pub fn is_bridge(&self, id: &str) -> Result<bool> {
        let idx = self.require_edge_index(id)?;
        if self.edges[idx].is_self_loop() {
            return Ok(false);
        }
        Ok(!self.delete_edge(id)?.is_connected())
    }

    /// Product of the weights of the edges in `set`.
    pub fn set_weight(&self, set: &EdgeSet) -> Result<Rational> {
        let mut product = Rational::one();
        for id in set.iter() {
            let edge = self.edge(id.as_str()).ok_or_else(|| Error::UnknownEdge {
                id: id.to_string(),
            })?;
            product = product * &edge.weight;
        }
        Ok(product)
    }

    pub(crate) fn weight_of_mask(&self, mask: u64) -> Rational {
        let mut product = Rational::one();
        for (i, edge) in self.edges.iter().enumerate() {
            if mask & (1 << i) != 0 {
                product = product * &edge.weight;
            }
        }
        product
    }

    /// Parses the JSON graph format and validates the result.
    pub fn parse(text: &str) -> Result<Multigraph> {
        let file: GraphFile = serde_json::from_str(text)
            .map_err(|e| Error::Malformed(format!("graph file: {e}")))?;
        Multigraph::try_from(&file)
    }

    pub fn to_graph_file(&self) -> GraphFile {
        GraphFile {
            vertices: self.vertex_count,
            edges: self
                .edges
                .iter()
                .map(|e| GraphFileEdge {
                    id: e.id.to_string(),
                    tail: e.tail,
                    head: e.head,
                    weight: e.weight.to_string(),
                })
                .collect(),
        }
    }
}

/// Parses the JSON graph format; see [`GraphFile`].
pub fn parse_graph(text: &str) -> Result<Multigraph> {
    Multigraph::parse(text)
}

/// On-disk graph document:
/// `{ "vertices": n, "edges": [ { "id", "tail", "head", "weight" } ] }`
/// with weights written as `"p/q"` or `"p"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: usize,
    pub edges: Vec<GraphFileEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFileEdge {
    pub id: String,
    pub tail: usize,
    pub head: usize,
    pub weight: String,
}

impl TryFrom<&GraphFile> for Multigraph {
    type Error = Error;

    fn try_from(file: &GraphFile) -> Result<Multigraph> {
        let mut edges = Vec::with_capacity(file.edges.len());
        for (index, e) in file.edges.iter().enumerate() {
            let weight: Rational = e.weight.parse().map_err(|err| match err {
                Error::InvalidRational { text, reason } => Error::Malformed(format!(
                    "edge \"{}\" (index {index}): invalid weight \"{text}\": {reason}",
                    e.id
                )),
                other => other,
            })?;
            edges.push(Edge {
                id: EdgeId::new(e.id.clone()),
                tail: e.tail,
                head: e.head,
                weight,
            });
        }
        Multigraph::new(file.vertices, edges)
    }
}

/// Set of edge ids of one graph; iteration order is sorted by id.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct EdgeSet(BTreeSet<EdgeId>);

impl EdgeSet {
    pub fn empty() -> Self {
        EdgeSet::default()
    }

    /// Builds a set from ids, validating that each exists in `graph`.
    pub fn from_ids<I, S>(graph: &Multigraph, ids: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<EdgeId>,
    {
        let mut set = BTreeSet::new();
        for id in ids {
            let id = id.into();
            if graph.edge(id.as_str()).is_none() {
                return Err(Error::UnknownEdge { id: id.to_string() });
            }
            set.insert(id);
        }
        Ok(EdgeSet(set))
    }

    pub(crate) fn from_mask(graph: &Multigraph, mask: u64) -> Self {
        let set = graph
            .edges()
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, e)| e.id.clone())
            .collect();
        EdgeSet(set)
    }

    pub fn contains(&self, id: &str) -> bool {
        self.0.contains(id)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &EdgeId> {
        self.0.iter()
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    fn from_iter<T: IntoIterator<Item = EdgeId>>(iter: T) -> Self {
        EdgeSet(iter.into_iter().collect())
    }
}

/// Index positions of a mask's edges, used by the enumeration internals.
pub(crate) fn mask_indices(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask & (1 << i) != 0)
}

/// Sorted-by-id index permutation: entry k is the index of the k-th
/// smallest edge id. Enumerators walk edges in this order so emitted sets
/// come out in lexicographic id order.
pub(crate) fn indices_sorted_by_id(graph: &Multigraph, indices: &[usize]) -> Vec<usize> {
    let mut order = indices.to_vec();
    order.sort_by(|&a, &b| graph.edges()[a].id.cmp(&graph.edges()[b].id));
    order
}

#[allow(dead_code)]
fn _assert_send_sync() {
    fn check<T: Send + Sync>() {}
    check::<Rational>();
    check::<Edge>();
    check::<Multigraph>();
    check::<EdgeSet>();
}
