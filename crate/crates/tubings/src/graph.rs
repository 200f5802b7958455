//! Labeled simple graphs on nodes `1..=n`, node sets as bitmasks, and the
//! reconnected complement construction.

use std::fmt;

use crate::{Error, Result};

/// Largest supported node count. Node sets are single `u64` bitmasks.
pub const MAX_NODES: usize = 64;

/// A set of graph nodes, each in `1..=MAX_NODES`, stored as a bitmask.
///
/// Bit `i` holds node `i + 1`. The derived `Ord` is the numeric mask order,
/// which is a convenient total order for map keys; the display/storage order
/// of tubes inside a [`Tubing`](crate::tubing::Tubing) is the canonical tube
/// order from [`tube_cmp`](crate::tubing::tube_cmp).
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeSet(u64);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    /// The set `{1, ..., n}`.
    pub fn full(n: usize) -> NodeSet {
        assert!(n <= MAX_NODES);
        if n == 0 {
            NodeSet(0)
        } else {
            NodeSet(u64::MAX >> (MAX_NODES - n))
        }
    }

    pub fn singleton(node: usize) -> NodeSet {
        assert!((1..=MAX_NODES).contains(&node));
        NodeSet(1 << (node - 1))
    }

    pub fn from_nodes<I: IntoIterator<Item = usize>>(nodes: I) -> NodeSet {
        nodes.into_iter().fold(NodeSet::EMPTY, |s, v| s.insert(v))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, node: usize) -> bool {
        (1..=MAX_NODES).contains(&node) && self.0 & (1 << (node - 1)) != 0
    }

    #[must_use]
    pub fn insert(self, node: usize) -> NodeSet {
        self | NodeSet::singleton(node)
    }

    #[must_use]
    pub fn remove(self, node: usize) -> NodeSet {
        NodeSet(self.0 & !NodeSet::singleton(node).0)
    }

    pub fn union(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 | other.0)
    }

    pub fn intersect(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 & other.0)
    }

    pub fn minus(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: NodeSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest node in the set, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    /// Nodes in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub(crate) fn mask(self) -> u64 {
        self.0
    }
}

impl std::ops::BitOr for NodeSet {
    type Output = NodeSet;
    fn bitor(self, rhs: NodeSet) -> NodeSet {
        self.union(rhs)
    }
}

impl std::ops::BitAnd for NodeSet {
    type Output = NodeSet;
    fn bitand(self, rhs: NodeSet) -> NodeSet {
        self.intersect(rhs)
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The four graph families the algebras are built on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphFamily {
    Complete,
    Cycle,
    Path,
    Edgeless,
}

impl GraphFamily {
    pub const ALL: [GraphFamily; 4] = [
        GraphFamily::Complete,
        GraphFamily::Cycle,
        GraphFamily::Path,
        GraphFamily::Edgeless,
    ];

    /// Build the family graph on `n` nodes.
    ///
    /// Labeling conventions: the path has edges `{i, i+1}`; the cycle has the
    /// path edges plus the wraparound edge `{n, 1}`. For `n <= 2` the cycle
    /// coincides with the complete graph so that every family is total in `n`.
    pub fn build(self, n: usize) -> Result<SimpleGraph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut edges = Vec::new();
        match self {
            GraphFamily::Complete => {
                for a in 1..=n {
                    for b in a + 1..=n {
                        edges.push((a, b));
                    }
                }
            }
            GraphFamily::Path => {
                for a in 1..n {
                    edges.push((a, a + 1));
                }
            }
            GraphFamily::Cycle => {
                for a in 1..n {
                    edges.push((a, a + 1));
                }
                if n >= 3 {
                    edges.push((1, n));
                }
            }
            GraphFamily::Edgeless => {}
        }
        SimpleGraph::new(n, &edges)
    }

    pub fn name(self) -> &'static str {
        match self {
            GraphFamily::Complete => "complete",
            GraphFamily::Cycle => "cycle",
            GraphFamily::Path => "path",
            GraphFamily::Edgeless => "edgeless",
        }
    }

    pub fn parse(s: &str) -> Result<GraphFamily> {
        match s.to_ascii_lowercase().as_str() {
            "complete" => Ok(GraphFamily::Complete),
            "cycle" => Ok(GraphFamily::Cycle),
            "path" => Ok(GraphFamily::Path),
            "edgeless" => Ok(GraphFamily::Edgeless),
            other => Err(Error::Parse(format!("unknown graph family `{other}`"))),
        }
    }
}

/// Order-preserving relabeling from a subset of old nodes onto `1..=m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    kept: Vec<usize>, // kept[new - 1] = old, ascending
}

impl Relabeling {
    /// Relabeling that keeps exactly `kept` (in ascending node order).
    pub fn onto(kept: NodeSet) -> Relabeling {
        Relabeling {
            kept: kept.iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.kept.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kept.is_empty()
    }

    pub fn new_to_old(&self, new: usize) -> Option<usize> {
        self.kept.get(new.checked_sub(1)?).copied()
    }

    pub fn old_to_new(&self, old: usize) -> Option<usize> {
        self.kept.binary_search(&old).ok().map(|i| i + 1)
    }

    /// Push a set of old labels forward to new labels; nodes not kept are dropped.
    pub fn forward(&self, set: NodeSet) -> NodeSet {
        NodeSet::from_nodes(set.iter().filter_map(|v| self.old_to_new(v)))
    }

    /// Pull a set of new labels back to old labels.
    pub fn backward(&self, set: NodeSet) -> NodeSet {
        NodeSet::from_nodes(set.iter().map(|v| {
            self.new_to_old(v)
                .expect("set contains a label outside the relabeling range")
        }))
    }
}

/// A labeled simple graph on nodes `1..=n`.
///
/// No self-loops, no duplicate edges; equality is structural.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<NodeSet>, // adj[v - 1] = neighbors of v
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<SimpleGraph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_NODES {
            return Err(Error::OutOfRange(format!(
                "node count {n} exceeds the supported maximum {MAX_NODES}"
            )));
        }
        let mut adj = vec![NodeSet::EMPTY; n];
        for &(a, b) in edges {
            if a == b || a < 1 || b < 1 || a > n || b > n {
                return Err(Error::BadEdge(a, b));
            }
            adj[a - 1] = adj[a - 1].insert(b);
            adj[b - 1] = adj[b - 1].insert(a);
        }
        Ok(SimpleGraph { n, adj })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    /// The full node set `{1, ..., n}` (the universal tube).
    pub fn nodes(&self) -> NodeSet {
        NodeSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> NodeSet {
        self.adj[v - 1]
    }

    /// All nodes adjacent to at least one node of `set` (may include `set` itself).
    pub fn neighborhood(&self, set: NodeSet) -> NodeSet {
        set.iter()
            .fold(NodeSet::EMPTY, |acc, v| acc | self.adj[v - 1])
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a >= 1 && a <= self.n && self.adj[a - 1].contains(b)
    }

    /// Edges as ordered pairs `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.n {
            for b in self.adj[a - 1].iter() {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Are two disjoint node sets joined by at least one edge?
    pub fn adjacent_sets(&self, a: NodeSet, b: NodeSet) -> bool {
        !self.neighborhood(a).intersect(b).is_empty()
    }

    /// Is the induced subgraph on `set` connected? The empty set is not.
    pub fn is_connected_within(&self, set: NodeSet) -> bool {
        let Some(start) = set.min() else {
            return false;
        };
        let mut seen = NodeSet::singleton(start);
        loop {
            let grown = seen | self.neighborhood(seen).intersect(set);
            if grown == seen {
                return seen == set;
            }
            seen = grown;
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.nodes())
    }

    /// Connected components of the induced subgraph on `set`, sorted by
    /// minimum node.
    pub fn components_within(&self, set: NodeSet) -> Vec<NodeSet> {
        let mut rest = set;
        let mut out = Vec::new();
        while let Some(start) = rest.min() {
            let mut comp = NodeSet::singleton(start);
            loop {
                let grown = comp | self.neighborhood(comp).intersect(rest);
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            out.push(comp);
            rest = rest.minus(comp);
        }
        out
    }

    /// Connected components of the whole graph, sorted by minimum node.
    pub fn components(&self) -> Vec<NodeSet> {
        self.components_within(self.nodes())
    }

    /// The graph with one edge removed.
    pub fn remove_edge(&self, a: usize, b: usize) -> Result<SimpleGraph> {
        if !self.has_edge(a, b) {
            return Err(Error::EdgeNotInGraph(a.min(b), a.max(b)));
        }
        let mut g = self.clone();
        g.adj[a - 1] = g.adj[a - 1].remove(b);
        g.adj[b - 1] = g.adj[b - 1].remove(a);
        Ok(g)
    }

    /// The graph with a set of edges removed.
    pub fn remove_edges(&self, edges: &[(usize, usize)]) -> Result<SimpleGraph> {
        edges
            .iter()
            .try_fold(self.clone(), |g, &(a, b)| g.remove_edge(a, b))
    }

    /// Induced subgraph on `set`, relabeled order-preservingly onto `1..=|set|`.
    pub fn induced(&self, set: NodeSet) -> (SimpleGraph, Relabeling) {
        let relabel = Relabeling::onto(set);
        let m = relabel.len();
        let mut adj = vec![NodeSet::EMPTY; m];
        for new in 1..=m {
            let old = relabel.new_to_old(new).unwrap();
            adj[new - 1] = relabel.forward(self.adj[old - 1].intersect(set));
        }
        (SimpleGraph { n: m, adj }, relabel)
    }

    /// The reconnected complement with respect to `t`.
    ///
    /// The node set is `V - t` relabeled onto `1..=(n - |t|)`; nodes `a` and
    /// `b` are adjacent exactly when `{a, b} ∪ t'` induces a connected
    /// subgraph of `self` for some `t' ⊆ t`, i.e. when `b` is reachable from
    /// `a` inside the induced subgraph on `{a, b} ∪ t`.
    pub fn reconnected_complement(&self, t: NodeSet) -> Result<(SimpleGraph, Relabeling)> {
        let all = self.nodes();
        if t.is_empty() || !t.is_subset(all) || t == all {
            return Err(Error::NotProper(t));
        }
        let kept = all.minus(t);
        let relabel = Relabeling::onto(kept);
        let m = relabel.len();
        let mut adj = vec![NodeSet::EMPTY; m];
        let kept_nodes: Vec<usize> = kept.iter().collect();
        for (i, &a) in kept_nodes.iter().enumerate() {
            for &b in &kept_nodes[i + 1..] {
                let scope = t.insert(a).insert(b);
                let mut reach = NodeSet::singleton(a);
                loop {
                    let grown = reach | self.neighborhood(reach).intersect(scope);
                    if grown == reach {
                        break;
                    }
                    reach = grown;
                }
                if reach.contains(b) {
                    let (na, nb) = (
                        relabel.old_to_new(a).unwrap(),
                        relabel.old_to_new(b).unwrap(),
                    );
                    adj[na - 1] = adj[na - 1].insert(nb);
                    adj[nb - 1] = adj[nb - 1].insert(na);
                }
            }
        }
        Ok((SimpleGraph { n: m, adj }, relabel))
    }

    /// All connected node subsets, including the full set when connected.
    ///
    /// Enumerated by growing from each minimum node, so every set appears
    /// exactly once; the result is sorted in canonical tube order.
    pub fn connected_subsets(&self) -> Vec<NodeSet> {
        let mut out = Vec::new();
        for v in 1..=self.n {
            // Only allow nodes >= v so that v is the minimum of everything found here.
            let allowed = NodeSet::full(self.n).minus(NodeSet::full(v - 1));
            let start = NodeSet::singleton(v);
            let frontier = self.neighborhood(start).intersect(allowed).minus(start);
            self.grow_connected(start, frontier, allowed, &mut out);
        }
        out.sort_by(|a, b| crate::tubing::tube_cmp(*a, *b));
        out
    }

    fn grow_connected(
        &self,
        set: NodeSet,
        frontier: NodeSet,
        allowed: NodeSet,
        out: &mut Vec<NodeSet>,
    ) {
        out.push(set);
        let mut frontier = frontier;
        let mut banned = NodeSet::EMPTY;
        while let Some(u) = frontier.min() {
            frontier = frontier.remove(u);
            let grown = set.insert(u);
            let next = frontier
                .union(self.neighborhood(NodeSet::singleton(u)))
                .intersect(allowed)
                .minus(grown)
                .minus(banned);
            self.grow_connected(grown, next, allowed.minus(banned), out);
            banned = banned.insert(u);
        }
    }

    /// Parse a graph literal: `family:<name>,n:<int>` or `n=<int>;edges=(1-2,2-3)`.
    pub fn parse(s: &str) -> Result<SimpleGraph> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("family:") {
            let (name, n_part) = rest
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected `family:<name>,n:<int>`: `{s}`")))?;
            let n_str = n_part
                .trim()
                .strip_prefix("n:")
                .ok_or_else(|| Error::Parse(format!("expected `n:<int>` after family: `{s}`")))?;
            let n: usize = n_str
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad node count `{n_str}`")))?;
            return GraphFamily::parse(name.trim())?.build(n);
        }
        if let Some(rest) = s.strip_prefix("n=") {
            let (n_str, edge_part) = rest
                .split_once(';')
                .ok_or_else(|| Error::Parse(format!("expected `n=<int>;edges=(...)`: `{s}`")))?;
            let n: usize = n_str
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad node count `{n_str}`")))?;
            let inner = edge_part
                .trim()
                .strip_prefix("edges=(")
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("expected `edges=(a-b,...)`: `{s}`")))?;
            let mut edges = Vec::new();
            for item in inner.split(',').map(str::trim).filter(|i| !i.is_empty()) {
                let (a, b) = item
                    .split_once('-')
                    .ok_or_else(|| Error::Parse(format!("bad edge `{item}`")))?;
                let a: usize = a
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad edge `{item}`")))?;
                let b: usize = b
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad edge `{item}`")))?;
                edges.push((a, b));
            }
            return SimpleGraph::new(n, &edges);
        }
        Err(Error::Parse(format!("unrecognized graph literal `{s}`")))
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};edges=(", self.n)?;
        for (i, (a, b)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
