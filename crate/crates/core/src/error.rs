use thiserror::Error;

/// Errors reported by graph ingestion and the combinatorial operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("invalid rational \"{text}\": {reason}")]
    InvalidRational { text: String, reason: String },

    #[error("non-positive weight on edge \"{edge}\"")]
    NonPositiveWeight { edge: String },

    #[error("edge \"{edge}\" endpoint {vertex} out of range (graph has {vertex_count} vertices)")]
    EndpointOutOfRange {
        edge: String,
        vertex: usize,
        vertex_count: usize,
    },

    #[error("duplicate id \"{id}\"")]
    DuplicateId { id: String },

    #[error("graph must have at least one vertex")]
    NoVertices,

    #[error("unknown edge id \"{id}\"")]
    UnknownEdge { id: String },

    #[error("edge \"{id}\" is a self-loop")]
    SelfLoop { id: String },

    #[error("cannot contract self-loop \"{id}\"")]
    ContractSelfLoop { id: String },

    #[error("e1 and e2 must be distinct (both were \"{id}\")")]
    IdenticalEdges { id: String },

    #[error("graph has {edges} enumerable edges, exceeding the cap of {cap}")]
    EdgeCapExceeded { edges: usize, cap: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("edge \"{id}\" is a bridge; conditioning on its absence has zero probability")]
    BridgeEdge { id: String },

    #[error("sample count must be at least 1")]
    ZeroSamples,

    #[error("unknown element id \"{id}\"")]
    UnknownElement { id: String },

    #[error("basis {index} has {found} elements, expected {expected}")]
    RaggedBases {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("basis list is empty")]
    EmptyBasisList,

    #[error("invalid search spec: {0}")]
    InvalidSearchSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
