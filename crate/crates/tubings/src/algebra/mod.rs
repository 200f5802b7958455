//! Graded algebras on the vertices and faces of graph associahedra.
//!
//! Eight algebras share one product template. The basis of the degree-`n`
//! component is the set of vertex tubings (for `SSym`, `YSym`, `WSym`,
//! `DSym`) or all tubings (for the `-Faces` extensions) of the family graph
//! on `n` nodes; `DSymFaces` adjoins one null face per degree, represented
//! by the otherwise forbidden collection of all `n` singleton tubes.
//!
//! The product of `F_u` (degree `p`) and `F_v` (degree `q`) sums one term
//! per `(p, q)`-shuffle. A shuffle picks `p` of the `p + q` nodes; the tubes
//! of `u` (universal included) land on those nodes and break into connected
//! pieces, the tubes of `v` land on the remaining nodes and absorb every
//! piece of the first kind they touch. This is exactly the composite of the
//! edge-deletion projection, the component splitting and the product face
//! inclusion from [`crate::projections`], and it reproduces the classical
//! shuffle product of permutations and the splitting/grafting product of
//! binary trees.
//!
//! Coproducts (where defined) restrict a tubing to the first `i` and last
//! `n - i` nodes. The edge-deletion maps induce algebra homomorphisms
//! between the families ([`AlgebraMap`]), which also give `WSym` an `SSym`
//! module structure and `YSym` a `WSym` module structure ([`module_action`]).

pub mod combo;
pub mod oracles;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graph::{GraphFamily, NodeSet, SimpleGraph};
use crate::projections::{expand_by_parts, maximal_preimage, project_map, ProjectionMap};
use crate::tubing::{enumerate_tubings, tube_cmp, RankFilter, Tubing};
use crate::{Error, Result};

pub use combo::{LinCombo, TensorCombo};

/// The eight graded algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algebra {
    /// Permutohedron vertices (permutations).
    Ssym,
    /// Associahedron vertices (binary trees).
    Ysym,
    /// Cyclohedron vertices.
    Wsym,
    /// Simplex vertices.
    Dsym,
    /// All permutohedron faces (ordered partitions).
    SsymFaces,
    /// All associahedron faces (planar trees).
    YsymFaces,
    /// All cyclohedron faces.
    WsymFaces,
    /// All simplex faces plus a null face per degree.
    DsymFaces,
}

impl Algebra {
    pub const ALL: [Algebra; 8] = [
        Algebra::Ssym,
        Algebra::Ysym,
        Algebra::Wsym,
        Algebra::Dsym,
        Algebra::SsymFaces,
        Algebra::YsymFaces,
        Algebra::WsymFaces,
        Algebra::DsymFaces,
    ];

    pub fn family(self) -> GraphFamily {
        match self {
            Algebra::Ssym | Algebra::SsymFaces => GraphFamily::Complete,
            Algebra::Ysym | Algebra::YsymFaces => GraphFamily::Path,
            Algebra::Wsym | Algebra::WsymFaces => GraphFamily::Cycle,
            Algebra::Dsym | Algebra::DsymFaces => GraphFamily::Edgeless,
        }
    }

    /// Does the basis include every face, or vertices only?
    pub fn all_faces(self) -> bool {
        matches!(
            self,
            Algebra::SsymFaces | Algebra::YsymFaces | Algebra::WsymFaces | Algebra::DsymFaces
        )
    }

    /// Only the simplex face algebra carries null faces.
    pub fn has_null(self) -> bool {
        self == Algebra::DsymFaces
    }

    pub fn name(self) -> &'static str {
        match self {
            Algebra::Ssym => "ssym",
            Algebra::Ysym => "ysym",
            Algebra::Wsym => "wsym",
            Algebra::Dsym => "dsym",
            Algebra::SsymFaces => "ssym-tilde",
            Algebra::YsymFaces => "ysym-tilde",
            Algebra::WsymFaces => "wsym-tilde",
            Algebra::DsymFaces => "dsym-tilde",
        }
    }

    pub fn parse(s: &str) -> Result<Algebra> {
        Algebra::ALL
            .into_iter()
            .find(|a| a.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::Parse(format!("unknown algebra `{s}`")))
    }

    /// The family graph carrying the degree-`n` basis.
    pub fn graph(self, n: usize) -> Result<SimpleGraph> {
        self.family().build(n)
    }

    /// Check a basis element belongs to this algebra.
    pub fn check_member(self, b: &BasisElement) -> Result<()> {
        match b {
            BasisElement::Unit => Ok(()),
            BasisElement::Null(n) => {
                if self.has_null() && *n >= 1 {
                    Ok(())
                } else {
                    Err(Error::NotInAlgebra(b.to_string(), self.name()))
                }
            }
            BasisElement::Face(t) => {
                let n = t.graph().node_count();
                if t.graph() != &self.graph(n)? {
                    return Err(Error::NotInAlgebra(b.to_string(), self.name()));
                }
                if !self.all_faces() && !t.is_vertex() {
                    return Err(Error::NotInAlgebra(b.to_string(), self.name()));
                }
                Ok(())
            }
        }
    }

    /// The degree-`n` basis (the unit alone in degree 0).
    pub fn basis(self, n: usize) -> Result<Vec<BasisElement>> {
        if n == 0 {
            return Ok(vec![BasisElement::Unit]);
        }
        let g = self.graph(n)?;
        let filter = if self.all_faces() {
            RankFilter::All
        } else {
            RankFilter::Vertices
        };
        let mut out: Vec<BasisElement> = enumerate_tubings(&g, filter)
            .into_iter()
            .map(BasisElement::Face)
            .collect();
        if self.has_null() {
            out.push(BasisElement::Null(n));
        }
        Ok(out)
    }
}

/// A graded basis label: the unit, a face of the family polytope, or a null
/// face.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum BasisElement {
    /// The basis element of degree 0.
    Unit,
    /// A tubing of the family graph on `degree` nodes.
    Face(Tubing),
    /// The null face adjoined in degree `n` of the simplex face algebra; it
    /// stands for the collection of all `n` singleton tubes.
    Null(usize),
}

impl BasisElement {
    pub fn degree(&self) -> usize {
        match self {
            BasisElement::Unit => 0,
            BasisElement::Face(t) => t.graph().node_count(),
            BasisElement::Null(n) => *n,
        }
    }

    /// The simplex vertex `e_j^n`: every node is a singleton tube except `j`.
    pub fn simplex_vertex(j: usize, n: usize) -> Result<BasisElement> {
        if j == 0 || j > n {
            return Err(Error::OutOfRange(format!("e_{j}^{n} needs 1 <= j <= n")));
        }
        let g = GraphFamily::Edgeless.build(n)?;
        let tubes = (1..=n).filter(|&v| v != j).map(NodeSet::singleton);
        Ok(BasisElement::Face(Tubing::validate(g, tubes)?))
    }

    /// Parse `1`, `null(<n>)`, or a tubing literal, as a member of `alg`.
    pub fn parse(alg: Algebra, s: &str) -> Result<BasisElement> {
        let s = s.trim();
        let b = if s == "1" {
            BasisElement::Unit
        } else if let Some(inner) = s.strip_prefix("null(").and_then(|r| r.strip_suffix(')')) {
            let n: usize = inner
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad null face degree `{inner}`")))?;
            BasisElement::Null(n)
        } else {
            let (n, tubes) = crate::tubing::parse_tubing_literal(s)?;
            BasisElement::Face(Tubing::validate(alg.graph(n)?, tubes)?)
        };
        alg.check_member(&b)?;
        Ok(b)
    }

    fn variant_rank(&self) -> u8 {
        match self {
            BasisElement::Unit => 0,
            BasisElement::Face(_) => 1,
            BasisElement::Null(_) => 2,
        }
    }
}

impl Ord for BasisElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.variant_rank().cmp(&other.variant_rank()))
            .then_with(|| match (self, other) {
                (BasisElement::Face(a), BasisElement::Face(b)) => a.cmp(b),
                _ => std::cmp::Ordering::Equal,
            })
    }
}

impl PartialOrd for BasisElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElement::Unit => write!(f, "1"),
            BasisElement::Face(t) => write!(f, "{t}"),
            BasisElement::Null(n) => write!(f, "null({n})"),
        }
    }
}

impl fmt::Debug for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A `(p, q)`-shuffle, encoded by the `p`-element image set of its first
/// block inside `1..=p+q`.
///
/// `iota` is the unique increasing map of `1..=p` onto the image and
/// `iota_hat` the increasing map of `1..=q` onto the complement, so the
/// shuffle read as a permutation has at most one descent, at position `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shuffle {
    p: usize,
    q: usize,
    image: NodeSet,
    left: Vec<usize>,  // iota(1..=p)
    right: Vec<usize>, // iota_hat(1..=q)
}

impl Shuffle {
    pub fn new(p: usize, q: usize, image: NodeSet) -> Result<Shuffle> {
        if image.len() != p || !image.is_subset(NodeSet::full(p + q)) {
            return Err(Error::OutOfRange(format!(
                "image {image} is not a {p}-subset of 1..={}",
                p + q
            )));
        }
        let left: Vec<usize> = image.iter().collect();
        let right: Vec<usize> = NodeSet::full(p + q).minus(image).iter().collect();
        Ok(Shuffle {
            p,
            q,
            image,
            left,
            right,
        })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn image(&self) -> NodeSet {
        self.image
    }

    pub fn complement(&self) -> NodeSet {
        NodeSet::full(self.p + self.q).minus(self.image)
    }

    /// `iota(i)` for `i` in `1..=p`.
    pub fn iota(&self, i: usize) -> usize {
        self.left[i - 1]
    }

    /// `iota_hat(i)` for `i` in `1..=q`.
    pub fn iota_hat(&self, i: usize) -> usize {
        self.right[i - 1]
    }

    /// Push a subset of `1..=p` through `iota`.
    pub fn map_left(&self, s: NodeSet) -> NodeSet {
        NodeSet::from_nodes(s.iter().map(|i| self.iota(i)))
    }

    /// Push a subset of `1..=q` through `iota_hat`.
    pub fn map_right(&self, s: NodeSet) -> NodeSet {
        NodeSet::from_nodes(s.iter().map(|i| self.iota_hat(i)))
    }

    /// The shuffle as a permutation of `1..=p+q`.
    pub fn as_permutation(&self) -> crate::bijections::Permutation {
        let images = self.left.iter().chain(&self.right).copied().collect();
        crate::bijections::Permutation::new(images).expect("shuffle blocks partition 1..=p+q")
    }
}

/// All `(p, q)`-shuffles in canonical order (ascending image bitmask).
pub fn shuffles(p: usize, q: usize) -> Vec<Shuffle> {
    let mut out = Vec::new();
    let mut image = Vec::new();
    fn rec(
        next: usize,
        remaining: usize,
        total: usize,
        image: &mut Vec<usize>,
        out: &mut Vec<NodeSet>,
    ) {
        if remaining == 0 {
            out.push(NodeSet::from_nodes(image.iter().copied()));
            return;
        }
        for v in next..=(total - remaining + 1) {
            image.push(v);
            rec(v + 1, remaining - 1, total, image, out);
            image.pop();
        }
    }
    let mut images = Vec::new();
    rec(1, p, p + q, &mut image, &mut images);
    images.sort();
    for im in images {
        out.push(Shuffle::new(p, q, im).expect("enumerated image is valid"));
    }
    out
}

/// Exact binomial coefficient.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut out = BigInt::one();
    for i in 0..k.min(n - k) {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

/// The tubes of `u` that land on the image nodes: every tube including the
/// universal one (for null faces, every singleton plus the universal).
fn left_tube_collection(u: &BasisElement) -> Vec<NodeSet> {
    let p = u.degree();
    let mut tubes = match u {
        BasisElement::Face(t) => t.tubes().to_vec(),
        BasisElement::Null(n) => (1..=*n).map(NodeSet::singleton).collect(),
        BasisElement::Unit => unreachable!("the unit never enters the shuffle template"),
    };
    tubes.push(NodeSet::full(p));
    tubes
}

/// The proper tubes of `v` that land on the complement nodes.
fn right_tube_collection(v: &BasisElement) -> Vec<NodeSet> {
    match v {
        BasisElement::Face(t) => t.tubes().to_vec(),
        BasisElement::Null(n) => (1..=*n).map(NodeSet::singleton).collect(),
        BasisElement::Unit => unreachable!("the unit never enters the shuffle template"),
    }
}

/// One term of the shuffle product template.
///
/// The tubes of `u` (universal included) map through `iota` and split into
/// connected components of the target family graph; the proper tubes of `v`
/// map through `iota_hat` and absorb every maximal first-kind piece they are
/// adjacent to. The deduplicated union is the term. Closure is a theorem for
/// the four families, so a validation failure here is a bug, not an input
/// error.
pub fn product_term(
    alg: Algebra,
    u: &BasisElement,
    v: &BasisElement,
    shuffle: &Shuffle,
) -> Result<BasisElement> {
    alg.check_member(u)?;
    alg.check_member(v)?;
    let (p, q) = (u.degree(), v.degree());
    if p == 0 || q == 0 {
        return Err(Error::OutOfRange(
            "the shuffle template needs positive-degree operands".into(),
        ));
    }
    if shuffle.p() != p || shuffle.q() != q {
        return Err(Error::OutOfRange(format!(
            "shuffle is of type ({}, {}), operands of degrees ({p}, {q})",
            shuffle.p(),
            shuffle.q()
        )));
    }
    let host = alg.graph(p + q)?;

    let mut tubes: Vec<NodeSet> = Vec::new();
    let mut parts: Vec<NodeSet> = Vec::new();
    for t in left_tube_collection(u) {
        let image = shuffle.map_left(t);
        for piece in host.components_within(image) {
            if !tubes.contains(&piece) {
                tubes.push(piece);
            }
            if t == NodeSet::full(p) {
                parts.push(piece);
            }
        }
    }
    for s in right_tube_collection(v) {
        let expanded = expand_by_parts(&host, shuffle.map_right(s), &parts);
        if !tubes.contains(&expanded) {
            tubes.push(expanded);
        }
    }
    tubes.sort_by(|a, b| tube_cmp(*a, *b));

    if alg.has_null() && tubes.len() == p + q {
        // Every singleton appeared: the term is the null face.
        return Ok(BasisElement::Null(p + q));
    }
    let term = Tubing::validate(host, tubes)
        .expect("the shuffle template closes on valid tubings of the family graphs");
    if !alg.all_faces() {
        assert!(
            term.is_vertex(),
            "vertex operands must produce a vertex term"
        );
    }
    Ok(BasisElement::Face(term))
}

/// The graded product, extended bilinearly.
///
/// The unit is two-sided everywhere except in the simplex face algebra,
/// where right multiplication by the unit lands on the null face of the
/// operand's degree.
pub fn product(alg: Algebra, a: &LinCombo, b: &LinCombo) -> Result<LinCombo> {
    let mut out = LinCombo::zero();
    for (u, cu) in a.iter() {
        for (v, cv) in b.iter() {
            let coeff = cu * cv;
            match (u, v) {
                (BasisElement::Unit, x) => {
                    alg.check_member(x)?;
                    out.add_term(x.clone(), coeff);
                }
                (x, BasisElement::Unit) => {
                    alg.check_member(x)?;
                    if alg.has_null() {
                        out.add_term(BasisElement::Null(x.degree()), coeff);
                    } else {
                        out.add_term(x.clone(), coeff);
                    }
                }
                (u, v) => {
                    for s in shuffles(u.degree(), v.degree()) {
                        out.add_term(product_term(alg, u, v, &s)?, coeff.clone());
                    }
                }
            }
        }
    }
    Ok(out)
}

fn restriction_window(alg: Algebra, t: &Tubing, lo: usize, hi: usize) -> Result<BasisElement> {
    if lo > hi {
        return Ok(BasisElement::Unit);
    }
    let m = hi - lo + 1;
    let factor = alg.graph(m)?;
    let window = NodeSet::from_nodes(lo..=hi);
    let shift = |s: NodeSet| NodeSet::from_nodes(s.iter().map(|v| v - lo + 1));

    let mut tubes: Vec<NodeSet> = Vec::new();
    for &tube in t.tubes() {
        let cut = tube.intersect(window);
        if cut.is_empty() {
            continue;
        }
        // In the null-face algebra a restriction covering the whole window
        // still counts tube by tube; elsewhere it is the factor's universal.
        if cut == window && !alg.has_null() {
            continue;
        }
        for piece in factor.components_within(shift(cut)) {
            if !tubes.contains(&piece) {
                tubes.push(piece);
            }
        }
    }
    if alg.has_null() && tubes.len() == m {
        return Ok(BasisElement::Null(m));
    }
    let restricted = Tubing::validate(factor, tubes)
        .expect("restrictions of valid tubings are valid on the family graphs");
    if !alg.all_faces() {
        assert!(
            restricted.is_vertex(),
            "restricting a vertex must give a vertex"
        );
    }
    Ok(BasisElement::Face(restricted))
}

fn null_or_unit(n: usize) -> BasisElement {
    if n == 0 {
        BasisElement::Unit
    } else {
        BasisElement::Null(n)
    }
}

/// The coproduct of a basis element: the sum over `i` of its restrictions to
/// nodes `1..=i` and `i+1..=n`, relabeled.
///
/// Defined for `SSym`, `YSym`, their face extensions, and the simplex face
/// algebra, where the null face restricts to null faces (with the degree-0
/// null face read as the unit). The cyclohedron algebras carry no coproduct.
pub fn coproduct(alg: Algebra, b: &BasisElement) -> Result<TensorCombo> {
    match alg {
        Algebra::Ssym
        | Algebra::Ysym
        | Algebra::SsymFaces
        | Algebra::YsymFaces
        | Algebra::DsymFaces => {}
        Algebra::Wsym | Algebra::WsymFaces | Algebra::Dsym => {
            return Err(Error::NoCoproduct(alg.name()));
        }
    }
    alg.check_member(b)?;
    let mut out = TensorCombo::zero();
    let one = BigInt::one();
    match b {
        BasisElement::Unit => out.add_term(BasisElement::Unit, BasisElement::Unit, one),
        BasisElement::Null(n) => {
            for i in 0..=*n {
                out.add_term(null_or_unit(i), null_or_unit(n - i), one.clone());
            }
        }
        BasisElement::Face(t) => {
            let n = t.graph().node_count();
            for i in 0..=n {
                let left = restriction_window(alg, t, 1, i)?;
                let right = restriction_window(alg, t, i + 1, n)?;
                out.add_term(left, right, one.clone());
            }
        }
    }
    Ok(out)
}

/// Linear extension of [`coproduct`].
pub fn coproduct_combo(alg: Algebra, a: &LinCombo) -> Result<TensorCombo> {
    let mut out = TensorCombo::zero();
    for (b, c) in a.iter() {
        for ((l, r), k) in coproduct(alg, b)?.iter() {
            out.add_term(l.clone(), r.clone(), c * k);
        }
    }
    Ok(out)
}

/// The product on tensor squares, componentwise: `(a⊗b)(c⊗d) = ac⊗bd`.
pub fn tensor_product(alg: Algebra, a: &TensorCombo, b: &TensorCombo) -> Result<TensorCombo> {
    let mut out = TensorCombo::zero();
    for ((al, ar), ca) in a.iter() {
        for ((bl, br), cb) in b.iter() {
            let left = product(
                alg,
                &LinCombo::basis(al.clone()),
                &LinCombo::basis(bl.clone()),
            )?;
            let right = product(
                alg,
                &LinCombo::basis(ar.clone()),
                &LinCombo::basis(br.clone()),
            )?;
            let coeff = ca * cb;
            for (lb, lc) in left.iter() {
                for (rb, rc) in right.iter() {
                    out.add_term(lb.clone(), rb.clone(), &coeff * lc * rc);
                }
            }
        }
    }
    Ok(out)
}

/// The algebra homomorphisms induced by edge-deletion projections.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraMap {
    /// Complete to cycle: `SSym -> WSym`.
    SsymToWsym,
    /// Cycle to path: `WSym -> YSym`.
    WsymToYsym,
    /// Complete to edgeless: `SSym -> DSym`.
    SsymToDsym,
    /// Complete to path, the full Tonks projection: `SSym -> YSym`.
    SsymToYsym,
}

impl AlgebraMap {
    pub const ALL: [AlgebraMap; 4] = [
        AlgebraMap::SsymToWsym,
        AlgebraMap::WsymToYsym,
        AlgebraMap::SsymToDsym,
        AlgebraMap::SsymToYsym,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraMap::SsymToWsym => "ssym-to-wsym",
            AlgebraMap::WsymToYsym => "wsym-to-ysym",
            AlgebraMap::SsymToDsym => "ssym-to-dsym",
            AlgebraMap::SsymToYsym => "ssym-to-ysym",
        }
    }

    pub fn parse(s: &str) -> Result<AlgebraMap> {
        AlgebraMap::ALL
            .into_iter()
            .find(|m| m.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::Parse(format!("unknown algebra map `{s}`")))
    }

    pub fn source_family(self) -> GraphFamily {
        match self {
            AlgebraMap::SsymToWsym | AlgebraMap::SsymToDsym | AlgebraMap::SsymToYsym => {
                GraphFamily::Complete
            }
            AlgebraMap::WsymToYsym => GraphFamily::Cycle,
        }
    }

    pub fn target_family(self) -> GraphFamily {
        match self {
            AlgebraMap::SsymToWsym => GraphFamily::Cycle,
            AlgebraMap::WsymToYsym | AlgebraMap::SsymToYsym => GraphFamily::Path,
            AlgebraMap::SsymToDsym => GraphFamily::Edgeless,
        }
    }

    fn projection(self) -> ProjectionMap {
        match self {
            AlgebraMap::SsymToWsym => ProjectionMap::TonksCycle,
            AlgebraMap::WsymToYsym => ProjectionMap::CycleToPath,
            AlgebraMap::SsymToDsym => ProjectionMap::ToEdgeless,
            AlgebraMap::SsymToYsym => ProjectionMap::TonksPath,
        }
    }

    /// Source algebra for a given vertices/faces flavor.
    pub fn source(self, all_faces: bool) -> Algebra {
        algebra_for(self.source_family(), all_faces)
    }

    /// Target algebra for a given vertices/faces flavor.
    pub fn target(self, all_faces: bool) -> Algebra {
        algebra_for(self.target_family(), all_faces)
    }
}

fn algebra_for(family: GraphFamily, all_faces: bool) -> Algebra {
    match (family, all_faces) {
        (GraphFamily::Complete, false) => Algebra::Ssym,
        (GraphFamily::Path, false) => Algebra::Ysym,
        (GraphFamily::Cycle, false) => Algebra::Wsym,
        (GraphFamily::Edgeless, false) => Algebra::Dsym,
        (GraphFamily::Complete, true) => Algebra::SsymFaces,
        (GraphFamily::Path, true) => Algebra::YsymFaces,
        (GraphFamily::Cycle, true) => Algebra::WsymFaces,
        (GraphFamily::Edgeless, true) => Algebra::DsymFaces,
    }
}

/// Apply a projection-induced homomorphism to a combo in the source algebra.
///
/// Returns the target algebra together with the image. Works on the vertex
/// algebras and on their face extensions alike; the unit maps to the unit.
pub fn hom_map(map: AlgebraMap, source: Algebra, a: &LinCombo) -> Result<(Algebra, LinCombo)> {
    if source.family() != map.source_family() {
        return Err(Error::NotInAlgebra(
            format!("source of {}", map.name()),
            source.name(),
        ));
    }
    let target = map.target(source.all_faces());
    let projection = map.projection();
    let image = a.map_basis(|b| {
        source.check_member(b)?;
        match b {
            BasisElement::Unit => Ok(BasisElement::Unit),
            BasisElement::Null(_) => Err(Error::NotInAlgebra(b.to_string(), source.name())),
            BasisElement::Face(t) => {
                let host = t.graph().clone();
                let mut image = project_map(&projection, &host, t)?;
                // Rebuild on the canonical family graph so equality works.
                let canonical = target.graph(image.graph().node_count())?;
                debug_assert_eq!(&canonical, image.graph());
                image = Tubing::validate(canonical, image.tubes().iter().copied())?;
                Ok(BasisElement::Face(image))
            }
        }
    })?;
    Ok((target, image))
}

/// Lift a vertex tubing through a projection to a vertex of the source
/// family graph: chain maximal preimages over the deleted edges, then grow
/// the resulting face down to a vertex. Any vertex of the preimage face
/// projects back onto the input, so the choice of extra tubes is free.
pub fn lift_vertex(map: AlgebraMap, t: &Tubing) -> Result<Tubing> {
    let n = t.graph().node_count();
    if t.graph() != &map.target_family().build(n)? || !t.is_vertex() {
        return Err(Error::NotInAlgebra(
            t.to_string(),
            "vertices of the target family",
        ));
    }
    let source_graph = map.source_family().build(n)?;
    let deleted: Vec<(usize, usize)> = map.projection().edge_set(&source_graph)?.iter().collect();

    // Walk back up, re-adding the deleted edges one at a time.
    let mut current = t.clone();
    for k in (0..deleted.len()).rev() {
        let host = source_graph.remove_edges(&deleted[..k])?;
        current = maximal_preimage(&host, deleted[k], &current)?;
    }

    // Grow the preimage face down to a vertex.
    let mut vertex = current;
    if !vertex.is_vertex() {
        let candidates = source_graph.connected_subsets();
        'grow: while !vertex.is_vertex() {
            for &c in &candidates {
                if c == source_graph.nodes() || vertex.contains_tube(c) {
                    continue;
                }
                if let Ok(next) = vertex.with_tube(c) {
                    vertex = next;
                    continue 'grow;
                }
            }
            unreachable!("a face of a simple polytope always contains a vertex");
        }
    }
    Ok(vertex)
}

/// Which homomorphism gives which module structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModulePair {
    /// `WSym` as a module over `SSym`, via the complete-to-cycle map.
    SsymOnWsym,
    /// `YSym` as a module over `WSym`, via the cycle-to-path map.
    WsymOnYsym,
}

impl ModulePair {
    fn map(self) -> AlgebraMap {
        match self {
            ModulePair::SsymOnWsym => AlgebraMap::SsymToWsym,
            ModulePair::WsymOnYsym => AlgebraMap::WsymToYsym,
        }
    }

    /// The acting algebra.
    pub fn acting(self) -> Algebra {
        self.map().source(false)
    }

    /// The module algebra.
    pub fn module(self) -> Algebra {
        self.map().target(false)
    }

    pub fn name(self) -> &'static str {
        match self {
            ModulePair::SsymOnWsym => "ssym-on-wsym",
            ModulePair::WsymOnYsym => "wsym-on-ysym",
        }
    }

    pub fn parse(s: &str) -> Result<ModulePair> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ssym-on-wsym" => Ok(ModulePair::SsymOnWsym),
            "wsym-on-ysym" => Ok(ModulePair::WsymOnYsym),
            other => Err(Error::Parse(format!("unknown module pair `{other}`"))),
        }
    }
}

/// Which side the acting algebra multiplies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The module action: lift the module operand to the acting algebra through
/// a maximal-preimage chain, multiply upstairs, and project back down.
///
/// For the left action `a` lies in the acting algebra and `b` in the module;
/// for the right action the roles swap. The homomorphism property makes the
/// result independent of the chosen lift.
pub fn module_action(
    side: Side,
    pair: ModulePair,
    a: &BasisElement,
    b: &BasisElement,
) -> Result<LinCombo> {
    let map = pair.map();
    let acting = pair.acting();
    let module = pair.module();
    let (acting_elt, module_elt) = match side {
        Side::Left => (a, b),
        Side::Right => (b, a),
    };
    acting.check_member(acting_elt)?;
    module.check_member(module_elt)?;

    let lifted = match module_elt {
        BasisElement::Unit => BasisElement::Unit,
        BasisElement::Null(_) => unreachable!("vertex algebras carry no null faces"),
        BasisElement::Face(t) => BasisElement::Face(lift_vertex(map, t)?),
    };
    let (x, y) = match side {
        Side::Left => (acting_elt.clone(), lifted),
        Side::Right => (lifted, acting_elt.clone()),
    };
    let upstairs = product(acting, &LinCombo::basis(x), &LinCombo::basis(y))?;
    let (_, down) = hom_map(map, acting, &upstairs)?;
    Ok(down)
}

/// The closed-form simplex product `e_j^p · e_l^q` (independent of `j`):
/// the sum over `i` from `l` to `p + l` of
/// `C(i-1, l-1) C(p+q-i, q-l) e_i^{p+q}`.
pub fn simplex_formula(p: usize, l: usize, q: usize) -> Result<LinCombo> {
    if p < 1 || l < 1 || l > q {
        return Err(Error::OutOfRange(format!(
            "simplex formula needs p >= 1 and 1 <= l <= q, got p={p}, l={l}, q={q}"
        )));
    }
    let mut out = LinCombo::zero();
    for i in l..=(p + l) {
        let coeff = binomial(i - 1, l - 1) * binomial(p + q - i, q - l);
        out.add_term(BasisElement::simplex_vertex(i, p + q)?, coeff);
    }
    Ok(out)
}
