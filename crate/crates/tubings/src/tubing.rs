//! Tubes, tubings, compatibility, face-poset enumeration and f-vectors.
//!
//! A *tube* of a graph is a nonempty node set whose induced subgraph is
//! connected. Two tubes are *compatible* when they are nested or far apart
//! (their union is not a tube). A [`Tubing`] is a set of pairwise compatible
//! proper tubes; the universal tube (the whole node set) belongs to every
//! tubing implicitly and is never stored. Tubings of a graph on `n` nodes,
//! ordered by reverse inclusion, form the face poset of a simple convex
//! polytope of dimension `n - 1`: a tubing with `r` proper tubes indexes a
//! face of dimension `n - 1 - r`.

use std::cmp::Ordering;
use std::fmt;

use crate::graph::{NodeSet, SimpleGraph};
use crate::{Error, Result};

/// Canonical tube order: ascending minimum node, then size, then
/// lexicographic on the ascending node sequence.
pub fn tube_cmp(a: NodeSet, b: NodeSet) -> Ordering {
    let key = |s: NodeSet| (s.min().unwrap_or(0), s.len());
    key(a).cmp(&key(b)).then_with(|| {
        let diff = a.mask() ^ b.mask();
        if diff == 0 {
            Ordering::Equal
        } else if a.mask() & diff & diff.wrapping_neg() != 0 {
            // The smallest differing node belongs to `a`.
            Ordering::Less
        } else {
            Ordering::Greater
        }
    })
}

/// Is `s` a tube of `g`: nonempty, within range, inducing a connected subgraph?
pub fn is_tube(g: &SimpleGraph, s: NodeSet) -> bool {
    s.is_subset(g.nodes()) && g.is_connected_within(s)
}

/// Are two tubes nested or far apart?
///
/// Far apart means the union is not a tube: either disconnected or joined by
/// no edge. Overlapping, non-nested tubes always have a connected union, so
/// they are never compatible. Non-tube inputs are rejected.
pub fn tubes_compatible(g: &SimpleGraph, t1: NodeSet, t2: NodeSet) -> Result<bool> {
    for t in [t1, t2] {
        if !is_tube(g, t) {
            return Err(Error::NotATube(t));
        }
    }
    Ok(compatible_unchecked(g, t1, t2))
}

pub(crate) fn compatible_unchecked(g: &SimpleGraph, t1: NodeSet, t2: NodeSet) -> bool {
    t1.is_subset(t2) || t2.is_subset(t1) || !is_tube(g, t1.union(t2))
}

/// A set of pairwise compatible proper tubes of a graph, in canonical order.
///
/// The universal tube is implicit. `rank` (the number of stored tubes)
/// determines the face dimension: `dim = n - 1 - rank`; vertices have rank
/// `n - 1`. For a disconnected graph the stored tubes never include every
/// connected component at once.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tubing {
    graph: SimpleGraph,
    tubes: Vec<NodeSet>,
}

impl Tubing {
    /// The empty tubing (just the implicit universal tube): the whole polytope.
    pub fn empty(graph: SimpleGraph) -> Tubing {
        Tubing {
            graph,
            tubes: Vec::new(),
        }
    }

    /// Validate a collection of node sets as a tubing of `graph`.
    ///
    /// Duplicates collapse; an explicit universal tube is accepted and
    /// dropped, since every tubing contains it by default.
    pub fn validate<I>(graph: SimpleGraph, tubes: I) -> Result<Tubing>
    where
        I: IntoIterator<Item = NodeSet>,
    {
        let mut list: Vec<NodeSet> = Vec::new();
        for t in tubes {
            if t == graph.nodes() {
                continue;
            }
            if !is_tube(&graph, t) {
                return Err(Error::NotATube(t));
            }
            if !list.contains(&t) {
                list.push(t);
            }
        }
        list.sort_by(|a, b| tube_cmp(*a, *b));
        for i in 0..list.len() {
            for j in i + 1..list.len() {
                if !compatible_unchecked(&graph, list[i], list[j]) {
                    return Err(Error::Incompatible(list[i], list[j]));
                }
            }
        }
        let components = graph.components();
        if components.len() >= 2 && components.iter().all(|c| list.contains(c)) {
            return Err(Error::AllComponentsPresent);
        }
        Ok(Tubing { graph, tubes: list })
    }

    /// Construct from tubes already known to be valid, deduplicated and
    /// canonically sorted. Checked in debug builds.
    pub(crate) fn from_sorted_unchecked(graph: SimpleGraph, tubes: Vec<NodeSet>) -> Tubing {
        debug_assert!(Tubing::validate(graph.clone(), tubes.iter().copied())
            .map(|t| t.tubes == tubes)
            .unwrap_or(false));
        Tubing { graph, tubes }
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    /// Proper tubes in canonical order.
    pub fn tubes(&self) -> &[NodeSet] {
        &self.tubes
    }

    pub fn contains_tube(&self, t: NodeSet) -> bool {
        self.tubes.contains(&t)
    }

    /// Number of proper tubes.
    pub fn rank(&self) -> usize {
        self.tubes.len()
    }

    /// Dimension of the face this tubing indexes: `n - 1 - rank`.
    pub fn dimension(&self) -> usize {
        self.graph.node_count() - 1 - self.rank()
    }

    /// A vertex of the graph associahedron has rank `n - 1`.
    pub fn is_vertex(&self) -> bool {
        self.rank() + 1 == self.graph.node_count()
    }

    /// This tubing with one more tube, revalidated.
    pub fn with_tube(&self, t: NodeSet) -> Result<Tubing> {
        Tubing::validate(
            self.graph.clone(),
            self.tubes.iter().copied().chain(std::iter::once(t)),
        )
    }

    /// Face order: `a <= b` exactly when the tubes of `b` all appear in `a`
    /// (more tubes means a smaller face).
    pub fn face_leq(a: &Tubing, b: &Tubing) -> Result<bool> {
        if a.graph != b.graph {
            return Err(Error::GraphMismatch);
        }
        Ok(b.tubes.iter().all(|t| a.tubes.contains(t)))
    }

    /// Parse the tubing grammar `n=<int>;{a,b,..}{c,..}` against a graph.
    pub fn parse(graph: SimpleGraph, s: &str) -> Result<Tubing> {
        let (n, tubes) = parse_tubing_literal(s)?;
        if n != graph.node_count() {
            return Err(Error::Parse(format!(
                "tubing is on {n} nodes but the graph has {}",
                graph.node_count()
            )));
        }
        Tubing::validate(graph, tubes)
    }
}

impl fmt::Display for Tubing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.graph.node_count())?;
        for t in &self.tubes {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tubing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parse `n=<int>;{a,b,..}{c,..}` into the node count and the tube list.
pub fn parse_tubing_literal(s: &str) -> Result<(usize, Vec<NodeSet>)> {
    let s = s.trim();
    let rest = s
        .strip_prefix("n=")
        .ok_or_else(|| Error::Parse(format!("tubing must start with `n=`: `{s}`")))?;
    let (n_str, mut body) = rest
        .split_once(';')
        .ok_or_else(|| Error::Parse(format!("missing `;` after node count: `{s}`")))?;
    let n: usize = n_str
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad node count `{n_str}`")))?;
    let mut tubes = Vec::new();
    body = body.trim();
    while !body.is_empty() {
        let close = body
            .find('}')
            .ok_or_else(|| Error::Parse(format!("unclosed tube brace in `{s}`")))?;
        let inner = body[..close]
            .trim()
            .strip_prefix('{')
            .ok_or_else(|| Error::Parse(format!("expected `{{` to open a tube in `{s}`")))?;
        let mut set = NodeSet::EMPTY;
        for item in inner.split(',').map(str::trim).filter(|i| !i.is_empty()) {
            let v: usize = item
                .parse()
                .map_err(|_| Error::Parse(format!("bad node `{item}`")))?;
            if v == 0 || v > crate::graph::MAX_NODES {
                return Err(Error::Parse(format!("node {v} out of range")));
            }
            set = set.insert(v);
        }
        if set.is_empty() {
            return Err(Error::Parse(format!("empty tube in `{s}`")));
        }
        tubes.push(set);
        body = body[close + 1..].trim_start();
    }
    Ok((n, tubes))
}

/// Which tubings to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankFilter {
    All,
    /// Rank `n - 1`.
    Vertices,
    Exact(usize),
}

impl RankFilter {
    fn target(self, n: usize) -> Option<usize> {
        match self {
            RankFilter::All => None,
            RankFilter::Vertices => Some(n - 1),
            RankFilter::Exact(r) => Some(r),
        }
    }
}

/// Visit every tubing matching the filter, in canonical order, without
/// materializing the whole list.
pub fn for_each_tubing<F: FnMut(&Tubing)>(g: &SimpleGraph, filter: RankFilter, mut f: F) {
    let n = g.node_count();
    let full = g.nodes();
    let proper: Vec<NodeSet> = g
        .connected_subsets()
        .into_iter()
        .filter(|&t| t != full)
        .collect();

    // Pairwise compatibility, as bit rows over tube indices.
    let words = proper.len().div_ceil(64).max(1);
    let mut compat = vec![vec![0u64; words]; proper.len()];
    for i in 0..proper.len() {
        for j in i + 1..proper.len() {
            if compatible_unchecked(g, proper[i], proper[j]) {
                compat[i][j / 64] |= 1 << (j % 64);
                compat[j][i / 64] |= 1 << (i % 64);
            }
        }
    }

    let components = g.components();
    let component_index: Vec<Option<usize>> = proper
        .iter()
        .map(|t| components.iter().position(|c| c == t))
        .collect();
    let total_components = if components.len() >= 2 {
        components.len()
    } else {
        usize::MAX // rule never fires for connected graphs
    };

    let target = filter.target(n);
    let mut chosen: Vec<usize> = Vec::new();
    let mut chosen_mask = vec![0u64; words];

    struct Dfs<'a, F: FnMut(&Tubing)> {
        g: &'a SimpleGraph,
        proper: &'a [NodeSet],
        compat: &'a [Vec<u64>],
        component_index: &'a [Option<usize>],
        total_components: usize,
        target: Option<usize>,
        f: F,
    }

    impl<F: FnMut(&Tubing)> Dfs<'_, F> {
        fn run(
            &mut self,
            start: usize,
            chosen: &mut Vec<usize>,
            chosen_mask: &mut [u64],
            components_used: usize,
        ) {
            if self.target.is_none_or(|t| chosen.len() == t) {
                let tubes: Vec<NodeSet> = chosen.iter().map(|&i| self.proper[i]).collect();
                (self.f)(&Tubing::from_sorted_unchecked(self.g.clone(), tubes));
            }
            if self.target == Some(chosen.len()) {
                return; // adding tubes only raises the rank
            }
            for i in start..self.proper.len() {
                let row = &self.compat[i];
                if chosen_mask.iter().zip(row).any(|(c, r)| c & !r != 0) {
                    continue;
                }
                let used = components_used + usize::from(self.component_index[i].is_some());
                if used == self.total_components {
                    continue;
                }
                chosen.push(i);
                chosen_mask[i / 64] |= 1 << (i % 64);
                self.run(i + 1, chosen, chosen_mask, used);
                chosen_mask[i / 64] &= !(1 << (i % 64));
                chosen.pop();
            }
        }
    }

    Dfs {
        g,
        proper: &proper,
        compat: &compat,
        component_index: &component_index,
        total_components,
        target,
        f: &mut f,
    }
    .run(0, &mut chosen, &mut chosen_mask, 0);
}

/// All tubings matching the filter, duplicate-free, in canonical order.
pub fn enumerate_tubings(g: &SimpleGraph, filter: RankFilter) -> Vec<Tubing> {
    let mut out = Vec::new();
    for_each_tubing(g, filter, |t| out.push(t.clone()));
    out
}

/// Number of tubings matching the filter, without materializing them.
pub fn count_tubings(g: &SimpleGraph, filter: RankFilter) -> u64 {
    let mut count = 0;
    for_each_tubing(g, filter, |_| count += 1);
    count
}

/// Face counts indexed by dimension `0..n-1`: entry `d` counts tubings of
/// rank `n - 1 - d`.
pub fn f_vector(g: &SimpleGraph) -> Vec<u64> {
    let n = g.node_count();
    let mut counts = vec![0u64; n];
    for_each_tubing(g, RankFilter::All, |t| {
        counts[t.dimension()] += 1;
    });
    counts
}
