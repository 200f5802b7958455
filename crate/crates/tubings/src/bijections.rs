//! The dictionary between tubings and classical combinatorial objects.
//!
//! Vertices of the complete graph associahedron (the permutohedron) are
//! permutations; its faces are ordered partitions. Vertices of the path
//! graph associahedron (the associahedron) are binary trees; its faces are
//! planar trees. The conversions here are the map `f` (ordered partitions,
//! equivalently leveled trees, to complete graph tubings) and the map `g`
//! (planar trees to path graph tubings), together with the classical
//! surjection [`tau_classic`] from permutations to binary trees, kept as an
//! independent oracle for the projection machinery.
//!
//! Orientation convention for trees: leaves are numbered `0..=n` left to
//! right, internal node `i` of a binary tree sits between leaves `i - 1`
//! and `i`, and the node with the deepest level in a range is the local
//! root, so the identity permutation maps to the left comb.

use std::fmt;

use crate::graph::{GraphFamily, NodeSet};
use crate::tubing::Tubing;
use crate::{Error, Result};

/// A permutation of `1..=n`, stored as its image sequence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::Parse(format!(
                    "image sequence {images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// The image `σ(i)`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(items: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Permutation>) {
            if items.is_empty() {
                out.push(Permutation {
                    images: prefix.clone(),
                });
                return;
            }
            for i in 0..items.len() {
                let v = items.remove(i);
                prefix.push(v);
                rec(items, prefix, out);
                prefix.pop();
                items.insert(i, v);
            }
        }
        let mut out = Vec::new();
        rec(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
        out
    }

    /// Parse `2431`, `2,4,3,1`, or either wrapped in parentheses.
    pub fn parse(s: &str) -> Result<Permutation> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(s)
            .trim();
        let images: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|item| {
                    item.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad entry `{item}`")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| d > 0)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad digit `{c}` in permutation")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.images.len() <= 9 {
            for v in &self.images {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let joined: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", joined.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// An ordered partition of `1..=n` into disjoint nonempty blocks.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderedPartition {
    blocks: Vec<NodeSet>,
    n: usize,
}

impl OrderedPartition {
    pub fn new(n: usize, blocks: Vec<NodeSet>) -> Result<OrderedPartition> {
        let mut union = NodeSet::EMPTY;
        for &b in &blocks {
            if b.is_empty() || !b.is_disjoint(union) {
                return Err(Error::Parse(format!(
                    "blocks must be nonempty and disjoint, got {blocks:?}"
                )));
            }
            union = union.union(b);
        }
        if union != NodeSet::full(n) {
            return Err(Error::Parse(format!("blocks do not cover 1..={n}")));
        }
        Ok(OrderedPartition { blocks, n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[NodeSet] {
        &self.blocks
    }

    /// The singleton-block partition `({σ⁻¹(1)}, ..., {σ⁻¹(n)})`.
    pub fn from_permutation(p: &Permutation) -> OrderedPartition {
        let inv = p.inverse();
        OrderedPartition {
            blocks: (1..=p.len())
                .map(|j| NodeSet::singleton(inv.image(j)))
                .collect(),
            n: p.len(),
        }
    }

    /// All ordered partitions of `1..=n`, built by inserting one element at
    /// a time into an existing block or as a new block at any position.
    pub fn all(n: usize) -> Vec<OrderedPartition> {
        let mut current: Vec<Vec<NodeSet>> = vec![vec![]];
        for v in 1..=n {
            let mut next = Vec::new();
            for blocks in &current {
                for i in 0..blocks.len() {
                    let mut b = blocks.clone();
                    b[i] = b[i].insert(v);
                    next.push(b);
                }
                for i in 0..=blocks.len() {
                    let mut b = blocks.clone();
                    b.insert(i, NodeSet::singleton(v));
                    next.push(b);
                }
            }
            current = next;
        }
        let mut out: Vec<OrderedPartition> = current
            .into_iter()
            .map(|blocks| OrderedPartition { blocks, n })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Parse `({1,2,4},{3})`.
    pub fn parse(s: &str) -> Result<OrderedPartition> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("partition must be parenthesized: `{s}`")))?;
        let mut blocks = Vec::new();
        let mut rest = inner.trim();
        while !rest.is_empty() {
            let rest2 = rest
                .strip_prefix('{')
                .ok_or_else(|| Error::Parse(format!("expected `{{` in `{s}`")))?;
            let close = rest2
                .find('}')
                .ok_or_else(|| Error::Parse(format!("unclosed block in `{s}`")))?;
            let mut set = NodeSet::EMPTY;
            for item in rest2[..close]
                .split(',')
                .map(str::trim)
                .filter(|i| !i.is_empty())
            {
                let v: usize = item
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad node `{item}`")))?;
                if v == 0 || v > crate::graph::MAX_NODES {
                    return Err(Error::Parse(format!("node {v} out of range")));
                }
                set = set.insert(v);
            }
            blocks.push(set);
            rest = rest2[close + 1..]
                .trim_start()
                .trim_start_matches(',')
                .trim_start();
        }
        let n = blocks.iter().flat_map(|b| b.iter()).max().unwrap_or(0);
        OrderedPartition::new(n, blocks)
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A rooted planar tree; internal nodes have at least two children.
///
/// A tree with `n + 1` leaves indexes a face of the path graph
/// associahedron on `n` nodes; it is binary exactly when the face is a
/// vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlanarTree {
    Leaf,
    Node(Vec<PlanarTree>),
}

impl PlanarTree {
    pub fn node(children: Vec<PlanarTree>) -> Result<PlanarTree> {
        if children.len() < 2 {
            return Err(Error::Parse(
                "internal nodes need at least two children".into(),
            ));
        }
        Ok(PlanarTree::Node(children))
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            PlanarTree::Leaf => 1,
            PlanarTree::Node(children) => children.iter().map(|c| c.leaf_count()).sum(),
        }
    }

    pub fn internal_count(&self) -> usize {
        match self {
            PlanarTree::Leaf => 0,
            PlanarTree::Node(children) => {
                1 + children.iter().map(|c| c.internal_count()).sum::<usize>()
            }
        }
    }

    pub fn is_binary(&self) -> bool {
        match self {
            PlanarTree::Leaf => true,
            PlanarTree::Node(children) => {
                children.len() == 2 && children.iter().all(|c| c.is_binary())
            }
        }
    }

    /// All binary trees with `n` internal nodes (`n + 1` leaves).
    pub fn all_binary(n: usize) -> Vec<PlanarTree> {
        if n == 0 {
            return vec![PlanarTree::Leaf];
        }
        let mut out = Vec::new();
        for k in 0..n {
            for left in PlanarTree::all_binary(k) {
                for right in PlanarTree::all_binary(n - 1 - k) {
                    out.push(PlanarTree::Node(vec![left.clone(), right]));
                }
            }
        }
        out
    }

    /// Parse balanced-parenthesis form: `.` is a leaf, `(c1 c2 ...)` an
    /// internal node, e.g. `((..)(.(..)))`.
    pub fn parse(s: &str) -> Result<PlanarTree> {
        fn rec(chars: &mut std::iter::Peekable<std::str::Chars>) -> Result<PlanarTree> {
            match chars.next() {
                Some('.') => Ok(PlanarTree::Leaf),
                Some('(') => {
                    let mut children = Vec::new();
                    loop {
                        match chars.peek() {
                            Some(')') => {
                                chars.next();
                                break;
                            }
                            Some('.') | Some('(') => children.push(rec(chars)?),
                            Some(c) if c.is_whitespace() => {
                                chars.next();
                            }
                            _ => return Err(Error::Parse("unbalanced tree literal".into())),
                        }
                    }
                    PlanarTree::node(children)
                }
                _ => Err(Error::Parse("expected `.` or `(` in tree literal".into())),
            }
        }
        let mut chars = s.trim().chars().peekable();
        let tree = rec(&mut chars)?;
        if chars.next().is_some() {
            return Err(Error::Parse("trailing input after tree literal".into()));
        }
        Ok(tree)
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanarTree::Leaf => write!(f, "."),
            PlanarTree::Node(children) => {
                write!(f, "(")?;
                for c in children {
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl fmt::Debug for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A leveled tree, stored canonically as its ordered partition: block `i`
/// collects the raindrop spaces at level `i`, counted from the top.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LeveledTree {
    partition: OrderedPartition,
}

impl LeveledTree {
    pub fn from_partition(partition: OrderedPartition) -> LeveledTree {
        LeveledTree { partition }
    }

    pub fn from_permutation(p: &Permutation) -> LeveledTree {
        LeveledTree {
            partition: OrderedPartition::from_permutation(p),
        }
    }

    pub fn as_partition(&self) -> &OrderedPartition {
        &self.partition
    }

    /// Forget the levels. Within a leaf segment the spaces of the latest
    /// block present merge into one internal node whose children are the
    /// sub-segments they cut out.
    pub fn underlying_tree(&self) -> PlanarTree {
        fn rec(blocks: &[NodeSet], lo: usize, hi: usize) -> PlanarTree {
            if lo == hi {
                return PlanarTree::Leaf;
            }
            let spaces = NodeSet::from_nodes(lo + 1..=hi);
            let cuts = blocks
                .iter()
                .rev()
                .map(|b| b.intersect(spaces))
                .find(|c| !c.is_empty())
                .expect("a nonempty segment meets some block");
            let mut children = Vec::new();
            let mut start = lo;
            for s in cuts.iter() {
                children.push(rec(blocks, start, s - 1));
                start = s;
            }
            children.push(rec(blocks, start, hi));
            PlanarTree::Node(children)
        }
        rec(self.partition.blocks(), 0, self.partition.n())
    }
}

impl fmt::Display for LeveledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.partition, f)
    }
}

fn expect_family(t: &Tubing, family: GraphFamily, what: &'static str) -> Result<()> {
    let n = t.graph().node_count();
    if t.graph() != &family.build(n)? {
        return Err(Error::NotInAlgebra(t.to_string(), what));
    }
    Ok(())
}

/// The permutation `σ` as a vertex tubing of the complete graph: tube `j`
/// collects the nodes `i` with `σ(i) <= j`, for `j = 1..n-1`.
pub fn perm_to_tubing(p: &Permutation) -> Result<Tubing> {
    let n = p.len();
    let graph = GraphFamily::Complete.build(n)?;
    let tubes: Vec<NodeSet> = (1..n)
        .map(|j| NodeSet::from_nodes((1..=n).filter(|&i| p.image(i) <= j)))
        .collect();
    Tubing::validate(graph, tubes)
}

/// Inverse of [`perm_to_tubing`]: `σ(i)` is the index of the smallest tube
/// containing node `i` in the nested chain.
pub fn tubing_to_perm(t: &Tubing) -> Result<Permutation> {
    expect_family(t, GraphFamily::Complete, "complete graph vertex tubings")?;
    if !t.is_vertex() {
        return Err(Error::NotInAlgebra(
            t.to_string(),
            "complete graph vertex tubings",
        ));
    }
    let n = t.graph().node_count();
    let mut chain: Vec<NodeSet> = t.tubes().to_vec();
    chain.sort_by_key(|s| s.len());
    chain.push(t.graph().nodes());
    let images = (1..=n)
        .map(|i| chain.iter().position(|s| s.contains(i)).unwrap() + 1)
        .collect();
    Permutation::new(images)
}

/// The ordered partition `(S_1, ..., S_m)` as the tubing whose proper tubes
/// are the partial unions `S_1 ∪ ... ∪ S_i`, innermost first.
pub fn partition_to_tubing(p: &OrderedPartition) -> Result<Tubing> {
    let graph = GraphFamily::Complete.build(p.n())?;
    let mut tubes = Vec::new();
    let mut acc = NodeSet::EMPTY;
    for b in &p.blocks()[..p.blocks().len().saturating_sub(1)] {
        acc = acc.union(*b);
        tubes.push(acc);
    }
    Tubing::validate(graph, tubes)
}

/// Inverse of [`partition_to_tubing`]: successive differences of the nested
/// chain of tubes, the universal tube closing the last block.
pub fn tubing_to_partition(t: &Tubing) -> Result<OrderedPartition> {
    expect_family(t, GraphFamily::Complete, "complete graph tubings")?;
    let n = t.graph().node_count();
    let mut chain: Vec<NodeSet> = t.tubes().to_vec();
    chain.sort_by_key(|s| s.len());
    chain.push(t.graph().nodes());
    let mut blocks = Vec::new();
    let mut prev = NodeSet::EMPTY;
    for s in chain {
        blocks.push(s.minus(prev));
        prev = s;
    }
    OrderedPartition::new(n, blocks)
}

/// The planar tree as a tubing of the path graph: each non-root internal
/// node spanning leaves `a..=b` contributes the tube `{a+1, ..., b}`.
pub fn tree_to_tubing(tree: &PlanarTree) -> Result<Tubing> {
    let leaves = tree.leaf_count();
    if leaves < 2 {
        return Err(Error::OutOfRange(
            "tree needs at least one internal node".into(),
        ));
    }
    let n = leaves - 1;
    let graph = GraphFamily::Path.build(n)?;
    fn walk(t: &PlanarTree, offset: usize, is_root: bool, tubes: &mut Vec<NodeSet>) -> usize {
        match t {
            PlanarTree::Leaf => offset + 1,
            PlanarTree::Node(children) => {
                let mut pos = offset;
                for c in children {
                    pos = walk(c, pos, false, tubes);
                }
                // This node spans leaves offset..=pos-1.
                if !is_root {
                    tubes.push(NodeSet::from_nodes(offset + 1..=pos - 1));
                }
                pos
            }
        }
    }
    let mut tubes = Vec::new();
    walk(tree, 0, true, &mut tubes);
    Tubing::validate(graph, tubes)
}

/// Inverse of [`tree_to_tubing`], defined on every path graph tubing.
pub fn tubing_to_tree(t: &Tubing) -> Result<PlanarTree> {
    expect_family(t, GraphFamily::Path, "path graph tubings")?;
    let n = t.graph().node_count();
    // Leaf spans (lo, hi) inclusive; start ascending, wider spans first.
    let mut spans: Vec<(usize, usize)> = t
        .tubes()
        .iter()
        .map(|&s| (s.min().unwrap() - 1, s.iter().last().unwrap()))
        .collect();
    spans.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));

    fn build(lo: usize, hi: usize, spans: &[(usize, usize)]) -> PlanarTree {
        let mut children = Vec::new();
        let mut pos = lo;
        while pos <= hi {
            if let Some(&(c, d)) = spans.iter().find(|&&(c, _)| c == pos) {
                let inside: Vec<(usize, usize)> = spans
                    .iter()
                    .filter(|&&(c2, d2)| c2 >= c && d2 <= d && (c2, d2) != (c, d))
                    .copied()
                    .collect();
                children.push(build(c, d, &inside));
                pos = d + 1;
            } else {
                children.push(PlanarTree::Leaf);
                pos += 1;
            }
        }
        PlanarTree::Node(children)
    }
    Ok(build(0, n, &spans))
}

/// The classical surjection from permutations to binary trees: node `i`
/// sits at level `σ(i)`; the deepest node in each range is the local root.
pub fn tau_classic(p: &Permutation) -> PlanarTree {
    fn rec(p: &Permutation, lo: usize, hi: usize) -> PlanarTree {
        if lo > hi {
            return PlanarTree::Leaf;
        }
        let root = (lo..=hi).max_by_key(|&i| p.image(i)).unwrap();
        PlanarTree::Node(vec![rec(p, lo, root - 1), rec(p, root + 1, hi)])
    }
    rec(p, 1, p.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projections::{project_map, ProjectionMap};
    use crate::tubing::{count_tubings, tube_cmp, RankFilter};

    fn ns(nodes: &[usize]) -> NodeSet {
        NodeSet::from_nodes(nodes.iter().copied())
    }

    #[test]
    fn perm_tubing_round_trip() {
        let sigma = Permutation::parse("2431").unwrap();
        let t = perm_to_tubing(&sigma).unwrap();
        let mut expect = vec![ns(&[4]), ns(&[1, 4]), ns(&[1, 3, 4])];
        expect.sort_by(|a, b| tube_cmp(*a, *b));
        assert_eq!(t.tubes(), expect.as_slice());

        let id = Permutation::identity(4);
        let t = perm_to_tubing(&id).unwrap();
        assert_eq!(
            t.tubes(),
            &[ns(&[1]), ns(&[1, 2]), ns(&[1, 2, 3])],
            "identity gives the nested chain"
        );

        for sigma in Permutation::all(5) {
            let t = perm_to_tubing(&sigma).unwrap();
            assert_eq!(tubing_to_perm(&t).unwrap(), sigma);
        }
    }

    #[test]
    fn partition_tubing_round_trip() {
        let p = OrderedPartition::parse("({1,2,4},{3})").unwrap();
        let t = partition_to_tubing(&p).unwrap();
        assert_eq!(t.tubes(), &[ns(&[1, 2, 4])]);
        assert_eq!(tubing_to_partition(&t).unwrap(), p);

        // One-block partition: the whole polytope face.
        let p = OrderedPartition::parse("({1,2,3})").unwrap();
        assert_eq!(partition_to_tubing(&p).unwrap().rank(), 0);

        // Singleton-block partitions agree with the permutation map.
        for sigma in Permutation::all(4) {
            let p = OrderedPartition::from_permutation(&sigma);
            assert_eq!(
                partition_to_tubing(&p).unwrap(),
                perm_to_tubing(&sigma).unwrap()
            );
        }

        for p in OrderedPartition::all(4) {
            let t = partition_to_tubing(&p).unwrap();
            assert_eq!(tubing_to_partition(&t).unwrap(), p);
        }
    }

    #[test]
    fn ordered_partition_counts() {
        // Fubini numbers.
        for (n, expect) in [(1, 1), (2, 3), (3, 13), (4, 75), (5, 541)] {
            assert_eq!(OrderedPartition::all(n).len(), expect);
        }
    }

    #[test]
    fn tree_tubing_round_trip() {
        // Right comb: each internal node spans a suffix.
        let comb = PlanarTree::parse("(.(.(..)))").unwrap();
        let t = tree_to_tubing(&comb).unwrap();
        let mut expect = vec![ns(&[2, 3]), ns(&[3])];
        expect.sort_by(|a, b| tube_cmp(*a, *b));
        assert_eq!(t.tubes(), expect.as_slice());

        // Corolla: only the root, hence the empty tubing.
        let corolla = PlanarTree::parse("(....)").unwrap();
        assert_eq!(tree_to_tubing(&corolla).unwrap().rank(), 0);

        for n in 1..=7 {
            let trees = PlanarTree::all_binary(n);
            let catalan =
                count_tubings(&GraphFamily::Path.build(n).unwrap(), RankFilter::Vertices) as usize;
            assert_eq!(trees.len(), catalan, "binary trees match path vertices");
            for tree in &trees {
                let t = tree_to_tubing(tree).unwrap();
                assert!(t.is_vertex());
                assert_eq!(&tubing_to_tree(&t).unwrap(), tree);
            }
        }

        // Faces too: the inverse is defined on every path tubing.
        let g = GraphFamily::Path.build(5).unwrap();
        for t in crate::tubing::enumerate_tubings(&g, RankFilter::All) {
            let tree = tubing_to_tree(&t).unwrap();
            assert_eq!(tree_to_tubing(&tree).unwrap(), t);
        }
    }

    #[test]
    fn tau_matches_projected_tubings() {
        // Projecting the permutation tubing onto the path reproduces the
        // classical map.
        for n in 1..=5 {
            let host = GraphFamily::Complete.build(n).unwrap();
            for sigma in Permutation::all(n) {
                let upstairs = perm_to_tubing(&sigma).unwrap();
                let projected = project_map(&ProjectionMap::TonksPath, &host, &upstairs).unwrap();
                let via_tubings = tubing_to_tree(&projected).unwrap();
                assert_eq!(via_tubings, tau_classic(&sigma), "sigma = {sigma}");
            }
        }
    }

    #[test]
    fn tau_orientation_pinned_by_worked_example() {
        let sigma = Permutation::parse("2431").unwrap();
        let expect = PlanarTree::parse("((..)(.(..)))").unwrap();
        assert_eq!(tau_classic(&sigma), expect);
        let id = Permutation::identity(4);
        assert_eq!(
            tau_classic(&id),
            PlanarTree::parse("((((..).).).)").unwrap(),
            "identity gives the left comb"
        );
        assert_eq!(
            tau_classic(&Permutation::identity(1)),
            PlanarTree::parse("(..)").unwrap()
        );
    }

    #[test]
    fn leveled_tree_underlying() {
        // A single block merges everything into the corolla.
        let p = OrderedPartition::parse("({1,2,3})").unwrap();
        assert_eq!(
            LeveledTree::from_partition(p).underlying_tree(),
            PlanarTree::parse("(....)").unwrap()
        );

        // Face level: forgetting levels matches projecting the tubing.
        let host = GraphFamily::Complete.build(4).unwrap();
        for p in OrderedPartition::all(4) {
            let leveled = LeveledTree::from_partition(p.clone());
            let upstairs = partition_to_tubing(&p).unwrap();
            let projected = project_map(&ProjectionMap::TonksPath, &host, &upstairs).unwrap();
            assert_eq!(
                tree_to_tubing(&leveled.underlying_tree()).unwrap(),
                projected,
                "partition {p}"
            );
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Permutation::parse("1231").is_err());
        assert!(OrderedPartition::parse("({1},{1})").is_err());
        assert!(OrderedPartition::parse("({1},{3})").is_err());
        assert!(PlanarTree::parse("(.)").is_err());
        assert!(PlanarTree::parse("((..)").is_err());
    }
}
