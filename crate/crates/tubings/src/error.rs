use crate::graph::NodeSet;

/// Errors reported by graph, tubing, projection and algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("graph must have at least one node")]
    EmptyGraph,
    #[error("node {0} is out of range 1..={1}")]
    NodeOutOfRange(usize, usize),
    #[error("edge {0}-{1} is invalid (self-loop or endpoint out of range)")]
    BadEdge(usize, usize),
    #[error("edge {0}-{1} is not an edge of the graph")]
    EdgeNotInGraph(usize, usize),
    #[error("{0} is not a tube: the induced subgraph is empty or disconnected")]
    NotATube(NodeSet),
    #[error("tube {0} is not a strict subset of the node set")]
    NotProper(NodeSet),
    #[error("tubes {0} and {1} are incompatible: neither nested nor far apart")]
    Incompatible(NodeSet, NodeSet),
    #[error("a tubing of a disconnected graph cannot contain every component")]
    AllComponentsPresent,
    #[error("operands live on different graphs")]
    GraphMismatch,
    #[error("the graph is connected; expected at least two components")]
    ConnectedGraph,
    #[error("tubes {0} and {1} are not far apart")]
    NotFarApart(NodeSet, NodeSet),
    #[error("factor tubing {index} lives on the wrong graph")]
    FactorGraphMismatch { index: usize },
    #[error("outer tubing does not live on the reconnected complement")]
    OuterGraphMismatch,
    #[error("{0:?} is not a basis element of {1}")]
    NotInAlgebra(String, &'static str),
    #[error("no coproduct is defined on {0}")]
    NoCoproduct(&'static str),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
}
