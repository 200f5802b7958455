//! Exhaustive and sampled verification drivers for the algebraic identities.
//!
//! Each driver checks one identity over every case up to a degree bound,
//! optionally followed by seeded random sampling one or two degrees higher,
//! and reports the first counterexample on failure. The drivers back the
//! `verify` CLI command and the acceptance suite.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    coproduct, coproduct_combo, hom_map, lift_vertex, module_action, product, shuffles,
    simplex_formula, tensor_product, Algebra, AlgebraMap, BasisElement, LinCombo, ModulePair, Side,
};
use crate::bijections::{perm_to_tubing, tau_classic, tubing_to_tree, Permutation};
use crate::graph::{GraphFamily, SimpleGraph};
use crate::projections::{project_edge, project_edges, project_map, EdgeSet, ProjectionMap};
use crate::tubing::{count_tubings, enumerate_tubings, RankFilter};
use crate::{Error, Result};

/// Outcome of one verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub property: String,
    pub passed: bool,
    pub cases: u64,
    pub counterexample: Option<String>,
}

impl Report {
    fn pass(property: impl Into<String>, cases: u64) -> Report {
        Report {
            property: property.into(),
            passed: true,
            cases,
            counterexample: None,
        }
    }

    fn fail(property: impl Into<String>, cases: u64, counterexample: String) -> Report {
        Report {
            property: property.into(),
            passed: false,
            cases,
            counterexample: Some(counterexample),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "{}: pass ({} cases)", self.property, self.cases)
        } else {
            write!(
                f,
                "{}: FAIL after {} cases\n  counterexample: {}",
                self.property,
                self.cases,
                self.counterexample.as_deref().unwrap_or("-")
            )
        }
    }
}

/// Degree bound, sample count and seed for a verification run.
///
/// `max_degree` bounds the exhaustive part (each property has its own
/// default), `limit` is the number of random samples beyond the bound where
/// the property supports sampling, and `seed` fixes the sample stream.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub max_degree: Option<usize>,
    pub limit: Option<u64>,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Bounds {
        Bounds {
            max_degree: None,
            limit: None,
            seed: 0x7457,
        }
    }
}

impl Bounds {
    fn degree_or(&self, default: usize) -> usize {
        self.max_degree.unwrap_or(default)
    }

    fn limit_or(&self, default: u64) -> u64 {
        self.limit.unwrap_or(default)
    }
}

/// A verifiable property, as addressed by the CLI.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Property {
    Assoc(Algebra),
    Coassoc(Algebra),
    Hom(AlgebraMap),
    Bialgebra,
    ThetaCommute,
    TonksFactorization,
    FormulaVsTemplate,
    ModuleConsistency,
    Counting,
}

impl Property {
    /// Parse a property name plus its optional algebra/map argument.
    pub fn parse(name: &str, algebra: Option<&str>, which: Option<&str>) -> Result<Property> {
        let need_algebra = || -> Result<Algebra> {
            Algebra::parse(
                algebra
                    .ok_or_else(|| Error::Parse(format!("property `{name}` needs --algebra")))?,
            )
        };
        match name.trim() {
            "assoc" => Ok(Property::Assoc(need_algebra()?)),
            "coassoc" => Ok(Property::Coassoc(need_algebra()?)),
            "hom" => {
                let w = which
                    .ok_or_else(|| Error::Parse("property `hom` needs --which <map>".into()))?;
                Ok(Property::Hom(AlgebraMap::parse(w)?))
            }
            "bialgebra" => Ok(Property::Bialgebra),
            "theta-commute" => Ok(Property::ThetaCommute),
            "tonks-factorization" => Ok(Property::TonksFactorization),
            "formula-vs-template" => Ok(Property::FormulaVsTemplate),
            "module-consistency" => Ok(Property::ModuleConsistency),
            "counting" => Ok(Property::Counting),
            other => Err(Error::Parse(format!("unknown property `{other}`"))),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Property::Assoc(a) => format!("assoc({})", a.name()),
            Property::Coassoc(a) => format!("coassoc({})", a.name()),
            Property::Hom(m) => format!("hom({})", m.name()),
            Property::Bialgebra => "bialgebra(dsym-tilde)".into(),
            Property::ThetaCommute => "theta-commute".into(),
            Property::TonksFactorization => "tonks-factorization".into(),
            Property::FormulaVsTemplate => "formula-vs-template".into(),
            Property::ModuleConsistency => "module-consistency".into(),
            Property::Counting => "counting".into(),
        }
    }
}

/// Run one property check.
pub fn verify(property: &Property, bounds: &Bounds) -> Result<Report> {
    match property {
        Property::Assoc(alg) => associativity(*alg, bounds),
        Property::Coassoc(alg) => coassociativity(*alg, bounds),
        Property::Hom(map) => homomorphism(*map, bounds),
        Property::Bialgebra => bialgebra(bounds),
        Property::ThetaCommute => theta_commute(bounds),
        Property::TonksFactorization => tonks_factorization(bounds),
        Property::FormulaVsTemplate => formula_vs_template(bounds),
        Property::ModuleConsistency => module_consistency(bounds),
        Property::Counting => counting(bounds),
    }
}

fn combo(b: &BasisElement) -> LinCombo {
    LinCombo::basis(b.clone())
}

/// Associativity on all triples with total degree up to the bound
/// (default 6), then seeded random triples one and two degrees higher.
pub fn associativity(alg: Algebra, bounds: &Bounds) -> Result<Report> {
    let name = format!("assoc({})", alg.name());
    let max = bounds.degree_or(6);
    let mut cases = 0;
    let check = |a: &BasisElement, b: &BasisElement, c: &BasisElement| -> Result<Option<String>> {
        let ab = product(alg, &combo(a), &combo(b))?;
        let bc = product(alg, &combo(b), &combo(c))?;
        let left = product(alg, &ab, &combo(c))?;
        let right = product(alg, &combo(a), &bc)?;
        Ok((left != right).then(|| format!("a={a} b={b} c={c}")))
    };
    for p in 1..max {
        for q in 1..max {
            for r in 1..max {
                if p + q + r > max {
                    continue;
                }
                for a in alg.basis(p)? {
                    for b in alg.basis(q)? {
                        for c in alg.basis(r)? {
                            cases += 1;
                            if let Some(cx) = check(&a, &b, &c)? {
                                return Ok(Report::fail(name, cases, cx));
                            }
                        }
                    }
                }
            }
        }
    }
    // Seeded sampling at total degree max+1 ..= max+2.
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    let samples = bounds.limit_or(1000);
    let mut bases: BTreeMap<usize, Vec<BasisElement>> = BTreeMap::new();
    for _ in 0..samples {
        let total = rng.gen_range(max + 1..=max + 2);
        let p = rng.gen_range(1..=total - 2);
        let q = rng.gen_range(1..=total - p - 1);
        let r = total - p - q;
        let mut pick = |d: usize, rng: &mut ChaCha8Rng| -> Result<BasisElement> {
            let list = match bases.entry(d) {
                std::collections::btree_map::Entry::Occupied(e) => e.into_mut(),
                std::collections::btree_map::Entry::Vacant(e) => e.insert(alg.basis(d)?),
            };
            Ok(list.choose(rng).expect("nonempty basis").clone())
        };
        let a = pick(p, &mut rng)?;
        let b = pick(q, &mut rng)?;
        let c = pick(r, &mut rng)?;
        cases += 1;
        if let Some(cx) = check(&a, &b, &c)? {
            return Ok(Report::fail(name, cases, cx));
        }
    }
    Ok(Report::pass(name, cases))
}

/// Coassociativity of the coproduct, termwise, for degrees up to the bound
/// (default 6).
pub fn coassociativity(alg: Algebra, bounds: &Bounds) -> Result<Report> {
    let name = format!("coassoc({})", alg.name());
    let max = bounds.degree_or(6);
    let mut cases = 0;
    for n in 1..=max {
        for b in alg.basis(n)? {
            cases += 1;
            let delta = coproduct(alg, &b)?;
            let mut left: BTreeMap<(BasisElement, BasisElement, BasisElement), BigInt> =
                BTreeMap::new();
            let mut right = left.clone();
            for ((x, y), c) in delta.iter() {
                for ((x1, x2), k) in coproduct(alg, x)?.iter() {
                    *left.entry((x1.clone(), x2.clone(), y.clone())).or_default() += c * k;
                }
                for ((y1, y2), k) in coproduct(alg, y)?.iter() {
                    *right
                        .entry((x.clone(), y1.clone(), y2.clone()))
                        .or_default() += c * k;
                }
            }
            left.retain(|_, v| *v != BigInt::default());
            right.retain(|_, v| *v != BigInt::default());
            if left != right {
                return Ok(Report::fail(name, cases, format!("u={b}")));
            }
        }
    }
    Ok(Report::pass(name, cases))
}

/// The projection-induced maps commute with products (exhaustive up to the
/// bound: default 6 on vertices, one less on faces) and hit the whole
/// target basis (degrees up to 5).
pub fn homomorphism(map: AlgebraMap, bounds: &Bounds) -> Result<Report> {
    let name = format!("hom({})", map.name());
    let mut cases = 0;
    for faces in [false, true] {
        let source = map.source(faces);
        let target = map.target(faces);
        let max = bounds.degree_or(6) - usize::from(faces);
        for p in 1..max {
            for q in 1..max - p + 1 {
                if p + q > max {
                    continue;
                }
                for u in source.basis(p)? {
                    for v in source.basis(q)? {
                        cases += 1;
                        let uv = product(source, &combo(&u), &combo(&v))?;
                        let (_, lhs) = hom_map(map, source, &uv)?;
                        let (_, fu) = hom_map(map, source, &combo(&u))?;
                        let (_, fv) = hom_map(map, source, &combo(&v))?;
                        let rhs = product(target, &fu, &fv)?;
                        if lhs != rhs {
                            return Ok(Report::fail(name, cases, format!("u={u} v={v}")));
                        }
                    }
                }
            }
        }
        // Surjectivity onto the target basis.
        for n in 1..=bounds.degree_or(6).min(5) {
            let mut images: Vec<BasisElement> = Vec::new();
            for b in source.basis(n)? {
                let (_, img) = hom_map(map, source, &combo(&b))?;
                for (t, _) in img.iter() {
                    if !images.contains(t) {
                        images.push(t.clone());
                    }
                }
            }
            for t in target.basis(n)? {
                cases += 1;
                if matches!(t, BasisElement::Null(_)) {
                    continue;
                }
                if !images.contains(&t) {
                    return Ok(Report::fail(
                        name,
                        cases,
                        format!("{t} has no preimage in degree {n}"),
                    ));
                }
            }
        }
    }
    Ok(Report::pass(name, cases))
}

/// The simplex face algebra is a bialgebra: the coproduct of a product is
/// the product of the coproducts, one-sided unit rules included. Exhaustive
/// for `p + q` up to the bound (default 6).
pub fn bialgebra(bounds: &Bounds) -> Result<Report> {
    let alg = Algebra::DsymFaces;
    let name = "bialgebra(dsym-tilde)".to_string();
    let max = bounds.degree_or(6);
    let mut cases = 0;
    for p in 0..=max {
        for q in 0..=max - p {
            if p + q == 0 || p + q > max {
                continue;
            }
            for u in alg.basis(p)? {
                for v in alg.basis(q)? {
                    cases += 1;
                    let uv = product(alg, &combo(&u), &combo(&v))?;
                    let lhs = coproduct_combo(alg, &uv)?;
                    let du = coproduct(alg, &u)?;
                    let dv = coproduct(alg, &v)?;
                    let rhs = tensor_product(alg, &du, &dv)?;
                    if lhs != rhs {
                        return Ok(Report::fail(name, cases, format!("u={u} v={v}")));
                    }
                }
            }
        }
    }
    Ok(Report::pass(name, cases))
}

fn random_graph(rng: &mut ChaCha8Rng, max_nodes: usize) -> SimpleGraph {
    let n = rng.gen_range(2..=max_nodes);
    let mut edges = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if rng.gen_bool(0.5) {
                edges.push((a, b));
            }
        }
    }
    SimpleGraph::new(n, &edges).expect("n >= 2")
}

/// Order-independence of composite edge deletions: the one-shot projection
/// agrees with single-edge chains in 10 random orders, over seeded random
/// graphs, edge sets and tubings (default 200 cases, nodes up to 6).
pub fn theta_commute(bounds: &Bounds) -> Result<Report> {
    let name = "theta-commute".to_string();
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    let max_nodes = bounds.degree_or(6).clamp(2, 8);
    let cases_target = bounds.limit_or(200);
    let mut cases = 0;
    while cases < cases_target {
        let g = random_graph(&mut rng, max_nodes);
        let all_edges = g.edges();
        if all_edges.is_empty() {
            continue;
        }
        let k = rng.gen_range(1..=all_edges.len());
        let mut chosen = all_edges.clone();
        chosen.shuffle(&mut rng);
        chosen.truncate(k);
        let tubings = enumerate_tubings(&g, RankFilter::All);
        let t = tubings[rng.gen_range(0..tubings.len())].clone();
        let direct = project_edges(&g, &EdgeSet::new(chosen.iter().copied()), &t)?;
        cases += 1;
        for _ in 0..10 {
            let mut order = chosen.clone();
            order.shuffle(&mut rng);
            let mut host = g.clone();
            let mut cur = t.clone();
            for &e in &order {
                cur = project_edge(&host, e, &cur)?;
                host = host.remove_edge(e.0, e.1)?;
            }
            if cur != direct {
                return Ok(Report::fail(
                    name,
                    cases,
                    format!("graph={g} edges={chosen:?} tubing={t} order={order:?}"),
                ));
            }
        }
    }
    Ok(Report::pass(name, cases))
}

/// The factored projection through path tubings reproduces the classical
/// permutations-to-trees map, exhaustively for `n` up to the bound
/// (default 5).
pub fn tonks_factorization(bounds: &Bounds) -> Result<Report> {
    let name = "tonks-factorization".to_string();
    let max = bounds.degree_or(5);
    let mut cases = 0;
    for n in 1..=max {
        let host = GraphFamily::Complete.build(n)?;
        for sigma in Permutation::all(n) {
            cases += 1;
            let projected =
                project_map(&ProjectionMap::TonksPath, &host, &perm_to_tubing(&sigma)?)?;
            if tubing_to_tree(&projected)? != tau_classic(&sigma) {
                return Ok(Report::fail(name, cases, format!("sigma={sigma}")));
            }
        }
    }
    Ok(Report::pass(name, cases))
}

/// The closed simplex product formula agrees with the shuffle template for
/// all `p, q` up to the bound (default 6) and every choice of the vertex
/// indices, checking in particular that the left index is irrelevant.
pub fn formula_vs_template(bounds: &Bounds) -> Result<Report> {
    let name = "formula-vs-template".to_string();
    let max = bounds.degree_or(6);
    let mut cases = 0;
    for p in 1..=max {
        for q in 1..=max {
            for l in 1..=q {
                let expect = simplex_formula(p, l, q)?;
                for j in 1..=p {
                    cases += 1;
                    let u = BasisElement::simplex_vertex(j, p)?;
                    let v = BasisElement::simplex_vertex(l, q)?;
                    let got = product(Algebra::Dsym, &combo(&u), &combo(&v))?;
                    if got != expect {
                        return Ok(Report::fail(
                            name,
                            cases,
                            format!("p={p} j={j} q={q} l={l}"),
                        ));
                    }
                }
            }
        }
    }
    Ok(Report::pass(name, cases))
}

/// Module structures behave: the unit acts trivially, the action matches
/// multiplying upstairs and projecting down for any lift, and every vertex
/// in a projection fiber gives the same action. Exhaustive in low degree,
/// fibers sampled at the bound (default 5).
pub fn module_consistency(bounds: &Bounds) -> Result<Report> {
    let name = "module-consistency".to_string();
    let max = bounds.degree_or(5);
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    let mut cases = 0;
    for pair in [ModulePair::SsymOnWsym, ModulePair::WsymOnYsym] {
        let acting = pair.acting();
        let module = pair.module();
        let map = match pair {
            ModulePair::SsymOnWsym => AlgebraMap::SsymToWsym,
            ModulePair::WsymOnYsym => AlgebraMap::WsymToYsym,
        };
        // Unit acts trivially on both sides.
        for m in module.basis(max.min(4))? {
            cases += 1;
            for side in [Side::Left, Side::Right] {
                let acted = match side {
                    Side::Left => module_action(side, pair, &BasisElement::Unit, &m)?,
                    Side::Right => module_action(side, pair, &m, &BasisElement::Unit)?,
                };
                if acted != combo(&m) {
                    return Ok(Report::fail(name, cases, format!("unit action on {m}")));
                }
            }
        }
        // Definition check: acting on a projected vertex equals projecting
        // the upstairs product.
        for p in 1..max {
            for q in 1..=(max - p).min(3) {
                for u in acting.basis(p)? {
                    for v in acting.basis(q)? {
                        cases += 1;
                        let uv = product(acting, &combo(&u), &combo(&v))?;
                        let (_, expect_left) = hom_map(map, acting, &uv)?;
                        let (_, v_down) = hom_map(map, acting, &combo(&v))?;
                        let (vb, _) = v_down.iter().next().expect("basis image");
                        let got = module_action(Side::Left, pair, &u, vb)?;
                        if got != expect_left {
                            return Ok(Report::fail(name, cases, format!("left u={u} v={v}")));
                        }
                        let vu = product(acting, &combo(&v), &combo(&u))?;
                        let (_, expect_right) = hom_map(map, acting, &vu)?;
                        let got = module_action(Side::Right, pair, vb, &u)?;
                        if got != expect_right {
                            return Ok(Report::fail(name, cases, format!("right u={u} v={v}")));
                        }
                    }
                }
            }
        }
        // Lift independence: any two vertices in a fiber act identically.
        for n in 2..=max.min(4) {
            let source_vertices = acting.basis(n)?;
            let mut fibers: BTreeMap<BasisElement, Vec<BasisElement>> = BTreeMap::new();
            for s in &source_vertices {
                let (_, img) = hom_map(map, acting, &combo(s))?;
                let (b, _) = img.iter().next().expect("vertex image");
                fibers.entry(b.clone()).or_default().push(s.clone());
            }
            for (down, fiber) in fibers {
                if fiber.len() < 2 {
                    continue;
                }
                let acting_elts = acting.basis(2)?;
                let a = &acting_elts[rng.gen_range(0..acting_elts.len())];
                let mut results = Vec::new();
                for lift in fiber.iter().take(4) {
                    cases += 1;
                    let prod = product(acting, &combo(a), &combo(lift))?;
                    let (_, down_prod) = hom_map(map, acting, &prod)?;
                    results.push(down_prod);
                }
                if results.windows(2).any(|w| w[0] != w[1]) {
                    return Ok(Report::fail(
                        name,
                        cases,
                        format!("lifts of {down} disagree under {a}"),
                    ));
                }
            }
        }
    }
    Ok(Report::pass(name, cases))
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn fubini(n: usize) -> u64 {
    // Ordered Bell numbers: a(n) = sum over k of C(n, k) a(n - k).
    let mut a = vec![1u64; n + 1];
    for m in 1..=n {
        a[m] = (1..=m)
            .map(|k| {
                let mut c = 1u64;
                for i in 0..k {
                    c = c * (m - i) as u64 / (i + 1) as u64;
                }
                c * a[m - k]
            })
            .sum();
    }
    a[n]
}

fn catalan(n: usize) -> u64 {
    // C(2n, n) / (n + 1), exactly.
    let mut c: u128 = 1;
    for i in 0..n as u128 {
        c = c * (2 * (n as u128) - i) / (i + 1);
    }
    (c / (n as u128 + 1)) as u64
}

fn central_binomial(n: usize) -> u64 {
    let mut c: u128 = 1;
    for i in 0..n as u128 {
        c = c * (2 * (n as u128) - i) / (i + 1);
    }
    c as u64
}

/// Enumerated face counts match the closed forms: factorials, Catalan and
/// central binomial numbers for vertices, `n(n-1)` cyclohedron facets, and
/// `2^n - 1` total simplex faces.
pub fn counting(bounds: &Bounds) -> Result<Report> {
    let name = "counting".to_string();
    let mut cases = 0;
    let max = bounds.degree_or(7);
    let mut check = |label: String, got: u64, expect: u64| -> Option<Report> {
        cases += 1;
        (got != expect).then(|| {
            Report::fail(
                name.clone(),
                cases,
                format!("{label}: got {got}, expected {expect}"),
            )
        })
    };
    for n in 1..=max.min(6) {
        let g = GraphFamily::Complete.build(n)?;
        let got = count_tubings(&g, RankFilter::Vertices);
        if let Some(r) = check(format!("complete_{n} vertices"), got, factorial(n)) {
            return Ok(r);
        }
        let total = count_tubings(&g, RankFilter::All);
        if let Some(r) = check(format!("complete_{n} total"), total, fubini(n)) {
            return Ok(r);
        }
    }
    for n in 2..=max.min(5) {
        let g = GraphFamily::Cycle.build(n)?;
        let got = count_tubings(&g, RankFilter::Vertices);
        if let Some(r) = check(format!("cycle_{n} vertices"), got, central_binomial(n - 1)) {
            return Ok(r);
        }
    }
    for n in 1..=max {
        let g = GraphFamily::Path.build(n)?;
        let got = count_tubings(&g, RankFilter::Vertices);
        if let Some(r) = check(format!("path_{n} vertices"), got, catalan(n)) {
            return Ok(r);
        }
    }
    for n in 1..=max {
        let g = GraphFamily::Edgeless.build(n)?;
        let vertices = count_tubings(&g, RankFilter::Vertices);
        if let Some(r) = check(format!("edgeless_{n} vertices"), vertices, n as u64) {
            return Ok(r);
        }
        let total = count_tubings(&g, RankFilter::All);
        if let Some(r) = check(format!("edgeless_{n} total"), total, (1 << n) - 1) {
            return Ok(r);
        }
    }
    for n in 3..=max.min(6) {
        let g = GraphFamily::Cycle.build(n)?;
        let facets = count_tubings(&g, RankFilter::Exact(1));
        if let Some(r) = check(format!("cycle_{n} facets"), facets, (n * (n - 1)) as u64) {
            return Ok(r);
        }
    }
    Ok(Report::pass(name, cases))
}

/// Every lift produced by [`lift_vertex`] projects back onto its input;
/// exposed for tests and the CLI.
pub fn lift_round_trip(map: AlgebraMap, n: usize) -> Result<Report> {
    let name = format!("lift-round-trip({})", map.name());
    let target = map.target(false);
    let mut cases = 0;
    for b in target.basis(n)? {
        let BasisElement::Face(t) = &b else { continue };
        cases += 1;
        let lifted = lift_vertex(map, t)?;
        let source = map.source(false);
        let (_, down) = hom_map(map, source, &combo(&BasisElement::Face(lifted)))?;
        if down != combo(&b) {
            return Ok(Report::fail(name, cases, format!("lift of {b}")));
        }
    }
    Ok(Report::pass(name, cases))
}

/// Check `shuffles` sizes against binomials; used as a cheap self-test by
/// the counting command.
pub fn shuffle_count(p: usize, q: usize) -> usize {
    shuffles(p, q).len()
}
