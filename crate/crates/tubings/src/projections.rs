//! Cellular projections between graph associahedra.
//!
//! Deleting an edge `e` of a graph `G` induces a poset-preserving,
//! dimension-nonincreasing surjection from the tubings of `G` onto the
//! tubings of `G - e`: a tube that survives the deletion is kept, a broken
//! tube is replaced by its two connected pieces. Deleting edge sets in any
//! order gives the same map, so [`project_edges`] is well defined. Chaining
//! deletions down from the complete graph factors the Tonks projection from
//! the permutohedron to the associahedron through every connected graph
//! associahedron; the named factors live in [`ProjectionMap`].
//!
//! In the other direction, [`include_product_face`] is the face inclusion of
//! a product of graph associahedra into a bigger one, and
//! [`maximal_preimage`] picks a preimage of a tubing under a single edge
//! deletion.

use std::collections::BTreeSet;

use crate::graph::{GraphFamily, NodeSet, SimpleGraph};
use crate::tubing::{is_tube, tube_cmp, Tubing};
use crate::{Error, Result};

/// A set of edges of a host graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeSet {
    edges: BTreeSet<(usize, usize)>,
}

impl EdgeSet {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(edges: I) -> EdgeSet {
        EdgeSet {
            edges: edges
                .into_iter()
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Check every edge is present in the host graph.
    pub fn check_in(&self, g: &SimpleGraph) -> Result<()> {
        for (a, b) in self.iter() {
            if !g.has_edge(a, b) {
                return Err(Error::EdgeNotInGraph(a, b));
            }
        }
        Ok(())
    }

    /// Parse `1-3,2-4` (an empty string is the empty set).
    pub fn parse(s: &str) -> Result<EdgeSet> {
        let mut edges = Vec::new();
        for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
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
            if a == b {
                return Err(Error::BadEdge(a, b));
            }
            edges.push((a, b));
        }
        Ok(EdgeSet::new(edges))
    }
}

impl std::fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, (a, b)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

/// Named edge-deletion maps, plus explicit edge lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProjectionMap {
    /// Complete graph to path: delete every non-consecutive chord.
    TonksPath,
    /// Complete graph to cycle: delete every chord except the wraparound
    /// edge `{1, n}`.
    TonksCycle,
    /// Cycle to path: delete the wraparound edge `{1, n}`.
    CycleToPath,
    /// Any graph to the edgeless graph: delete every edge.
    ToEdgeless,
    /// An explicit edge set of the host graph.
    Edges(EdgeSet),
}

impl ProjectionMap {
    /// The default host graph for a named map on `n` nodes.
    pub fn default_host(&self, n: usize) -> Result<SimpleGraph> {
        match self {
            ProjectionMap::TonksPath | ProjectionMap::TonksCycle | ProjectionMap::ToEdgeless => {
                GraphFamily::Complete.build(n)
            }
            ProjectionMap::CycleToPath => GraphFamily::Cycle.build(n),
            ProjectionMap::Edges(_) => Err(Error::Parse(
                "an explicit edge list needs an explicit host graph".into(),
            )),
        }
    }

    /// The edges this map deletes from the given host.
    pub fn edge_set(&self, host: &SimpleGraph) -> Result<EdgeSet> {
        let n = host.node_count();
        let set = match self {
            ProjectionMap::TonksPath => {
                EdgeSet::new(host.edges().into_iter().filter(|&(a, b)| b != a + 1))
            }
            ProjectionMap::TonksCycle => EdgeSet::new(
                host.edges()
                    .into_iter()
                    .filter(|&(a, b)| b != a + 1 && !(a == 1 && b == n)),
            ),
            ProjectionMap::CycleToPath => {
                if n >= 3 {
                    EdgeSet::new([(1, n)])
                } else {
                    EdgeSet::default()
                }
            }
            ProjectionMap::ToEdgeless => EdgeSet::new(host.edges()),
            ProjectionMap::Edges(e) => e.clone(),
        };
        set.check_in(host)?;
        Ok(set)
    }

    /// Parse `tonks-p | tonks-c | tonks-w | tonks-delta | edges=1-3,2-4`.
    pub fn parse(s: &str) -> Result<ProjectionMap> {
        match s.trim() {
            "tonks-p" => Ok(ProjectionMap::TonksPath),
            "tonks-c" => Ok(ProjectionMap::TonksCycle),
            "tonks-w" => Ok(ProjectionMap::CycleToPath),
            "tonks-delta" => Ok(ProjectionMap::ToEdgeless),
            other => {
                if let Some(list) = other.strip_prefix("edges=") {
                    Ok(ProjectionMap::Edges(EdgeSet::parse(list)?))
                } else {
                    Err(Error::Parse(format!("unknown projection map `{other}`")))
                }
            }
        }
    }
}

fn split_tubes_into(image_graph: &SimpleGraph, t: &Tubing) -> Tubing {
    let mut tubes = Vec::new();
    for &tube in t.tubes() {
        for piece in image_graph.components_within(tube) {
            if !tubes.contains(&piece) {
                tubes.push(piece);
            }
        }
    }
    tubes.sort_by(|a, b| tube_cmp(*a, *b));
    Tubing::from_sorted_unchecked(image_graph.clone(), tubes)
}

/// The cellular projection induced by deleting one edge of the host graph.
///
/// Tubes that survive in `host - e` are kept; a broken tube is replaced by
/// its two connected pieces. The implicit universal tube maps to the
/// implicit universal tube, so the empty tubing maps to the empty tubing.
pub fn project_edge(host: &SimpleGraph, edge: (usize, usize), t: &Tubing) -> Result<Tubing> {
    if t.graph() != host {
        return Err(Error::GraphMismatch);
    }
    let image_graph = host.remove_edge(edge.0, edge.1)?;
    Ok(split_tubes_into(&image_graph, t))
}

/// The composite projection deleting a whole edge set.
///
/// Edge deletions commute, so this equals the composition of [`project_edge`]
/// over the set in any order; it is computed in one pass by splitting every
/// tube into its connected components in the image graph.
pub fn project_edges(host: &SimpleGraph, edges: &EdgeSet, t: &Tubing) -> Result<Tubing> {
    if t.graph() != host {
        return Err(Error::GraphMismatch);
    }
    edges.check_in(host)?;
    let image_graph = host.remove_edges(&edges.iter().collect::<Vec<_>>())?;
    Ok(split_tubes_into(&image_graph, t))
}

/// Apply a named map to a tubing of the given host.
pub fn project_map(map: &ProjectionMap, host: &SimpleGraph, t: &Tubing) -> Result<Tubing> {
    let edges = map.edge_set(host)?;
    project_edges(host, &edges, t)
}

/// Split a tubing of a disconnected graph into one tubing per component.
///
/// Every proper tube lies inside exactly one component and is assigned
/// there, relabeled; a tube equal to a full component node set becomes that
/// factor's implicit universal tube. Components are ordered by minimum node.
pub fn factor_components(g: &SimpleGraph, t: &Tubing) -> Result<Vec<Tubing>> {
    if t.graph() != g {
        return Err(Error::GraphMismatch);
    }
    let components = g.components();
    if components.len() < 2 {
        return Err(Error::ConnectedGraph);
    }
    let mut out = Vec::with_capacity(components.len());
    for &comp in &components {
        let (factor_graph, relabel) = g.induced(comp);
        let tubes: Vec<NodeSet> = t
            .tubes()
            .iter()
            .filter(|tube| tube.is_subset(comp) && **tube != comp)
            .map(|&tube| relabel.forward(tube))
            .collect();
        out.push(Tubing::validate(factor_graph, tubes)?);
    }
    Ok(out)
}

/// The face inclusion of a product of graph associahedra.
///
/// `parts` is a list of pairwise far-apart proper tubes of `host`. Each
/// `factors[i]` is a tubing of the induced subgraph on `parts[i]` (relabeled
/// onto `1..`), and `outer` is a tubing of the reconnected complement of the
/// union of the parts. The image contains the parts themselves, the factor
/// tubes relabeled into the host, and each outer tube relabeled into the
/// host and then expanded by absorbing every part adjacent to it, repeated
/// to a fixed point.
pub fn include_product_face(
    host: &SimpleGraph,
    parts: &[NodeSet],
    factors: &[Tubing],
    outer: &Tubing,
) -> Result<Tubing> {
    if factors.len() != parts.len() {
        return Err(Error::OutOfRange(format!(
            "{} parts but {} factor tubings",
            parts.len(),
            factors.len()
        )));
    }
    let full = host.nodes();
    let mut union = NodeSet::EMPTY;
    for (i, &p) in parts.iter().enumerate() {
        if !is_tube(host, p) {
            return Err(Error::NotATube(p));
        }
        if p == full {
            return Err(Error::NotProper(p));
        }
        for &q in &parts[i + 1..] {
            // Far apart: disjoint with a non-tube union.
            if !p.is_disjoint(q) || is_tube(host, p.union(q)) {
                return Err(Error::NotFarApart(p, q));
            }
        }
        union = union.union(p);
    }

    let mut tubes: Vec<NodeSet> = parts.to_vec();
    for (i, (&part, factor)) in parts.iter().zip(factors).enumerate() {
        let (part_graph, relabel) = host.induced(part);
        if factor.graph() != &part_graph {
            return Err(Error::FactorGraphMismatch { index: i });
        }
        for &tube in factor.tubes() {
            tubes.push(relabel.backward(tube));
        }
    }

    let (complement, relabel) = host.reconnected_complement(union)?;
    if outer.graph() != &complement {
        return Err(Error::OuterGraphMismatch);
    }
    for &tube in outer.tubes() {
        tubes.push(expand_by_parts(host, relabel.backward(tube), parts));
    }

    tubes.sort_by(|a, b| tube_cmp(*a, *b));
    tubes.dedup();
    Tubing::validate(host.clone(), tubes)
}

/// Expand a node set by absorbing every part adjacent to it, iterated to a
/// fixed point.
///
/// The parts are pairwise far apart, so absorbing one never makes another
/// newly adjacent and a single pass suffices; the loop stays for safety on
/// arbitrary hosts.
pub(crate) fn expand_by_parts(host: &SimpleGraph, seed: NodeSet, parts: &[NodeSet]) -> NodeSet {
    let mut grown = seed;
    loop {
        let mut changed = false;
        for &part in parts {
            if !part.is_subset(grown) && host.adjacent_sets(part, grown) {
                grown = grown.union(part);
                changed = true;
            }
        }
        if !changed {
            return grown;
        }
    }
}

/// A preimage of `t` under the edge-deletion projection out of `host`.
///
/// Follows the merge procedure: take the tubes of `t` as a candidate tubing
/// of `host`; while invalid, pick a disjoint pair of tubes joined by the
/// deleted edge with no tube of the collection separating them, and replace
/// the pair by its union. Among eligible pairs the one whose canonically
/// smaller tube is least merges first, which makes the result deterministic;
/// the contract is `project_edge(host, edge, result) == t`.
pub fn maximal_preimage(host: &SimpleGraph, edge: (usize, usize), t: &Tubing) -> Result<Tubing> {
    let image_graph = host.remove_edge(edge.0, edge.1)?;
    if t.graph() != &image_graph {
        return Err(Error::GraphMismatch);
    }
    let (a, b) = edge;
    let mut tubes: Vec<NodeSet> = t.tubes().to_vec();
    loop {
        tubes.sort_by(|x, y| tube_cmp(*x, *y));
        tubes.dedup();
        if let Ok(valid) = Tubing::validate(host.clone(), tubes.iter().copied()) {
            return Ok(valid);
        }
        let mut merged = None;
        'search: for (i, &x) in tubes.iter().enumerate() {
            for &y in &tubes[i + 1..] {
                if !x.is_disjoint(y) {
                    continue;
                }
                let crosses = (x.contains(a) && y.contains(b)) || (x.contains(b) && y.contains(a));
                if !crosses {
                    continue;
                }
                let separated = tubes.iter().any(|&s| {
                    s != x
                        && s != y
                        && ((x.is_subset(s) && !y.is_subset(s))
                            || (y.is_subset(s) && !x.is_subset(s)))
                });
                if separated {
                    continue;
                }
                merged = Some((x, y));
                break 'search;
            }
        }
        let (x, y) = merged.expect("an edge-adjacent mergeable pair exists while invalid");
        tubes.retain(|&s| s != x && s != y);
        tubes.push(x.union(y));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tubing::{enumerate_tubings, RankFilter};

    fn ns(nodes: &[usize]) -> NodeSet {
        NodeSet::from_nodes(nodes.iter().copied())
    }

    fn tubing(g: &SimpleGraph, tubes: &[&[usize]]) -> Tubing {
        Tubing::validate(g.clone(), tubes.iter().map(|t| ns(t))).unwrap()
    }

    #[test]
    fn project_edge_examples() {
        let k3 = GraphFamily::Complete.build(3).unwrap();
        let t = tubing(&k3, &[&[1], &[1, 3]]);
        let image = project_edge(&k3, (1, 3), &t).unwrap();
        let path = k3.remove_edge(1, 3).unwrap();
        assert_eq!(image, tubing(&path, &[&[1], &[3]]));

        // A tubing untouched by the edge keeps its tubes.
        let u = tubing(&k3, &[&[1], &[1, 2]]);
        let image = project_edge(&k3, (1, 3), &u).unwrap();
        assert_eq!(image.tubes(), u.tubes());

        // The empty tubing maps to the empty tubing.
        let e = Tubing::empty(k3.clone());
        assert_eq!(project_edge(&k3, (1, 3), &e).unwrap().rank(), 0);

        assert!(project_edge(&k3, (1, 4), &e).is_err());
    }

    #[test]
    fn edge_deletions_commute() {
        let k4 = GraphFamily::Complete.build(4).unwrap();
        let edges = EdgeSet::new([(1, 3), (2, 4), (1, 4)]);
        for t in enumerate_tubings(&k4, RankFilter::All) {
            let direct = project_edges(&k4, &edges, &t).unwrap();
            let mut g = k4.clone();
            let mut cur = t.clone();
            for e in [(2, 4), (1, 4), (1, 3)] {
                cur = project_edge(&g, e, &cur).unwrap();
                g = g.remove_edge(e.0, e.1).unwrap();
            }
            assert_eq!(direct, cur);
        }
    }

    #[test]
    fn named_map_edge_sets() {
        let k4 = GraphFamily::Complete.build(4).unwrap();
        let set = ProjectionMap::TonksPath.edge_set(&k4).unwrap();
        assert_eq!(
            set,
            EdgeSet::new([(1, 3), (1, 4), (2, 4)]),
            "all non-consecutive chords"
        );
        let cyc = ProjectionMap::TonksCycle.edge_set(&k4).unwrap();
        assert_eq!(
            cyc,
            EdgeSet::new([(1, 3), (2, 4)]),
            "keeps the wraparound edge"
        );
        let c4 = GraphFamily::Cycle.build(4).unwrap();
        assert_eq!(
            ProjectionMap::CycleToPath.edge_set(&c4).unwrap(),
            EdgeSet::new([(1, 4)])
        );
        assert_eq!(ProjectionMap::ToEdgeless.edge_set(&c4).unwrap().len(), 4);
    }

    #[test]
    fn factor_components_examples() {
        let e3 = GraphFamily::Edgeless.build(3).unwrap();
        let t = tubing(&e3, &[&[1], &[3]]);
        let factors = factor_components(&e3, &t).unwrap();
        assert_eq!(factors.len(), 3);
        for f in &factors {
            assert_eq!(f.rank(), 0, "singleton tubes become factor universals");
        }

        let g = SimpleGraph::new(3, &[(1, 2)]).unwrap();
        let t = tubing(&g, &[&[1]]);
        let factors = factor_components(&g, &t).unwrap();
        assert_eq!(factors[0].tubes(), &[ns(&[1])]);
        assert_eq!(factors[1].rank(), 0);

        let empty = Tubing::empty(g.clone());
        assert!(factor_components(&g, &empty)
            .unwrap()
            .iter()
            .all(|f| f.rank() == 0));

        let k3 = GraphFamily::Complete.build(3).unwrap();
        assert_eq!(
            factor_components(&k3, &Tubing::empty(k3.clone())).unwrap_err(),
            Error::ConnectedGraph
        );
    }

    #[test]
    fn include_product_face_trivial() {
        // Empty factor data reproduces exactly the parts.
        let c6 = GraphFamily::Cycle.build(6).unwrap();
        let parts = [ns(&[1, 2]), ns(&[4, 5])];
        let factors: Vec<Tubing> = parts
            .iter()
            .map(|&p| Tubing::empty(c6.induced(p).0))
            .collect();
        let (complement, _) = c6.reconnected_complement(ns(&[1, 2, 4, 5])).unwrap();
        let outer = Tubing::empty(complement);
        let image = include_product_face(&c6, &parts, &factors, &outer).unwrap();
        assert_eq!(image.tubes(), &[ns(&[1, 2]), ns(&[4, 5])]);
    }

    #[test]
    fn include_product_face_rejects_bad_parts() {
        let c6 = GraphFamily::Cycle.build(6).unwrap();
        // Adjacent arcs are not far apart.
        let parts = [ns(&[1, 2]), ns(&[3, 4])];
        let factors: Vec<Tubing> = parts
            .iter()
            .map(|&p| Tubing::empty(c6.induced(p).0))
            .collect();
        let (complement, _) = c6.reconnected_complement(ns(&[1, 2, 3, 4])).unwrap();
        let outer = Tubing::empty(complement);
        assert_eq!(
            include_product_face(&c6, &parts, &factors, &outer).unwrap_err(),
            Error::NotFarApart(ns(&[1, 2]), ns(&[3, 4]))
        );

        // Factor on the wrong graph.
        let good_parts = [ns(&[1, 2]), ns(&[4, 5])];
        let bad_factors = [
            Tubing::empty(GraphFamily::Path.build(3).unwrap()),
            Tubing::empty(c6.induced(good_parts[1]).0),
        ];
        let (complement, _) = c6.reconnected_complement(ns(&[1, 2, 4, 5])).unwrap();
        let outer = Tubing::empty(complement.clone());
        assert_eq!(
            include_product_face(&c6, &good_parts, &bad_factors, &outer).unwrap_err(),
            Error::FactorGraphMismatch { index: 0 }
        );

        // Outer tubing on the wrong graph.
        let good_factors: Vec<Tubing> = good_parts
            .iter()
            .map(|&p| Tubing::empty(c6.induced(p).0))
            .collect();
        let bad_outer = Tubing::empty(GraphFamily::Edgeless.build(2).unwrap());
        assert_eq!(
            include_product_face(&c6, &good_parts, &good_factors, &bad_outer).unwrap_err(),
            Error::OuterGraphMismatch
        );

        // Part count and factor count must agree.
        assert!(matches!(
            include_product_face(&c6, &good_parts, &good_factors[..1], &outer).unwrap_err(),
            Error::OutOfRange(_)
        ));
    }

    #[test]
    fn expansion_bridges_through_parts() {
        // Outer tubes may be disconnected in the host until the parts they
        // bridge through are absorbed.
        let p7 = GraphFamily::Path.build(7).unwrap();
        let parts = [ns(&[2]), ns(&[5])];
        let factors: Vec<Tubing> = parts
            .iter()
            .map(|&p| Tubing::empty(p7.induced(p).0))
            .collect();
        let (complement, _) = p7.reconnected_complement(ns(&[2, 5])).unwrap();
        assert_eq!(complement, GraphFamily::Path.build(5).unwrap());
        let outer = tubing(&complement, &[&[1, 2, 3, 4]]);
        let image = include_product_face(&p7, &parts, &factors, &outer).unwrap();
        assert!(image.contains_tube(ns(&[1, 2, 3, 4, 5, 6])));
    }

    #[test]
    fn maximal_preimage_examples() {
        let k3 = GraphFamily::Complete.build(3).unwrap();
        let path = k3.remove_edge(1, 3).unwrap();

        // Already valid upstairs: unchanged.
        let t = tubing(&path, &[&[1], &[1, 2]]);
        let pre = maximal_preimage(&k3, (1, 3), &t).unwrap();
        assert_eq!(pre.tubes(), t.tubes());

        // {1},{3} merge; the projection restores them.
        let t = tubing(&path, &[&[1], &[3]]);
        let pre = maximal_preimage(&k3, (1, 3), &t).unwrap();
        assert_eq!(project_edge(&k3, (1, 3), &pre).unwrap(), t);

        // Surjectivity: every cycle tubing has a preimage in the complete graph.
        let k4 = GraphFamily::Complete.build(4).unwrap();
        let mid_graph = k4.remove_edge(1, 3).unwrap();
        let c4 = mid_graph.remove_edge(2, 4).unwrap();
        assert_eq!(c4, GraphFamily::Cycle.build(4).unwrap());
        for t in enumerate_tubings(&c4, RankFilter::All) {
            let mid = maximal_preimage(&mid_graph, (2, 4), &t).unwrap();
            let pre = maximal_preimage(&k4, (1, 3), &mid).unwrap();
            let down1 = project_edge(&k4, (1, 3), &pre).unwrap();
            let down2 = project_edge(&mid_graph, (2, 4), &down1).unwrap();
            assert_eq!(down2, t);
        }
    }
}
