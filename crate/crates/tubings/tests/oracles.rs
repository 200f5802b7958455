//! Cross-checks of the shuffle template against independent classical
//! implementations: the permutation and ordered partition products by
//! composing with inverse shuffles, the binary tree product by splitting
//! and grafting, and the face-inclusion route through the projection
//! machinery.

use num_bigint::BigInt;
use num_traits::One;

use tubings::algebra::{
    coproduct, oracles, product, shuffles, Algebra, BasisElement, LinCombo, Shuffle, TensorCombo,
};
use tubings::bijections::{
    partition_to_tubing, perm_to_tubing, tree_to_tubing, OrderedPartition, Permutation, PlanarTree,
};
use tubings::graph::{GraphFamily, NodeSet, SimpleGraph};
use tubings::projections::{factor_components, include_product_face, project_edges, EdgeSet};
use tubings::tubing::{enumerate_tubings, RankFilter, Tubing};

fn basis_combo(b: BasisElement) -> LinCombo {
    LinCombo::basis(b)
}

#[test]
fn ssym_template_equals_permutation_oracle() {
    // Exhaustive for p + q <= 6.
    for p in 1..=5 {
        for q in 1..=(6 - p) {
            for u in Permutation::all(p) {
                for v in Permutation::all(q) {
                    let lhs = product(
                        Algebra::Ssym,
                        &basis_combo(BasisElement::Face(perm_to_tubing(&u).unwrap())),
                        &basis_combo(BasisElement::Face(perm_to_tubing(&v).unwrap())),
                    )
                    .unwrap();
                    let mut rhs = LinCombo::zero();
                    for w in oracles::ssym_product(&u, &v) {
                        rhs.add_term(
                            BasisElement::Face(perm_to_tubing(&w).unwrap()),
                            BigInt::one(),
                        );
                    }
                    assert_eq!(lhs, rhs, "u={u} v={v}");
                    // In SSym all shuffle terms are distinct permutations.
                    assert_eq!(
                        lhs.len(),
                        shuffles(p, q).len(),
                        "terms must be distinct for u={u} v={v}"
                    );
                }
            }
        }
    }
}

#[test]
fn ssym_template_terms_match_oracle_per_shuffle() {
    // Termwise, not just as sums: each shuffle produces the tubing of
    // (u x v) composed with the inverse shuffle.
    for (p, q) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
        for u in Permutation::all(p) {
            for v in Permutation::all(q) {
                let terms = oracles::ssym_product(&u, &v);
                for (s, w) in shuffles(p, q).iter().zip(&terms) {
                    let got = tubings::algebra::product_term(
                        Algebra::Ssym,
                        &BasisElement::Face(perm_to_tubing(&u).unwrap()),
                        &BasisElement::Face(perm_to_tubing(&v).unwrap()),
                        s,
                    )
                    .unwrap();
                    assert_eq!(
                        got,
                        BasisElement::Face(perm_to_tubing(w).unwrap()),
                        "u={u} v={v} image={}",
                        s.image()
                    );
                }
            }
        }
    }
}

#[test]
fn ssym_coproduct_equals_splitting_oracle() {
    for n in 1..=6 {
        for u in Permutation::all(n) {
            let lhs = coproduct(
                Algebra::Ssym,
                &BasisElement::Face(perm_to_tubing(&u).unwrap()),
            )
            .unwrap();
            let mut rhs = TensorCombo::zero();
            for (a, b) in oracles::ssym_coproduct(&u) {
                let left = if a.is_empty() {
                    BasisElement::Unit
                } else {
                    BasisElement::Face(perm_to_tubing(&a).unwrap())
                };
                let right = if b.is_empty() {
                    BasisElement::Unit
                } else {
                    BasisElement::Face(perm_to_tubing(&b).unwrap())
                };
                rhs.add_term(left, right, BigInt::one());
            }
            assert_eq!(lhs, rhs, "u={u}");
        }
    }
}

#[test]
fn ysym_template_equals_tree_oracle() {
    // Exhaustive for p + q <= 6.
    for p in 1..=5 {
        for q in 1..=(6 - p) {
            for u in PlanarTree::all_binary(p) {
                for v in PlanarTree::all_binary(q) {
                    let lhs = product(
                        Algebra::Ysym,
                        &basis_combo(BasisElement::Face(tree_to_tubing(&u).unwrap())),
                        &basis_combo(BasisElement::Face(tree_to_tubing(&v).unwrap())),
                    )
                    .unwrap();
                    let rhs = oracles::ysym_product(&u, &v).unwrap();
                    assert_eq!(lhs, rhs, "u={u} v={v}");
                }
            }
        }
    }
}

#[test]
fn tilde_ssym_template_equals_partition_oracle() {
    // Exhaustive for p + q <= 5.
    for p in 1..=4 {
        for q in 1..=(5 - p) {
            for u in OrderedPartition::all(p) {
                for v in OrderedPartition::all(q) {
                    let lhs = product(
                        Algebra::SsymFaces,
                        &basis_combo(BasisElement::Face(partition_to_tubing(&u).unwrap())),
                        &basis_combo(BasisElement::Face(partition_to_tubing(&v).unwrap())),
                    )
                    .unwrap();
                    let mut rhs = LinCombo::zero();
                    for w in oracles::partition_product(&u, &v) {
                        rhs.add_term(
                            BasisElement::Face(partition_to_tubing(&w).unwrap()),
                            BigInt::one(),
                        );
                    }
                    assert_eq!(lhs, rhs, "u={u} v={v}");
                }
            }
        }
    }
}

/// Compute one product term by the explicit composition: project the left
/// operand onto the part subgraphs, split into factors, and include the
/// result paired with the right operand as a product face.
fn term_via_inclusion(alg: Algebra, u: &Tubing, v: &Tubing, shuffle: &Shuffle) -> BasisElement {
    let p = u.graph().node_count();
    let q = v.graph().node_count();
    let host = alg.graph(p + q).unwrap();
    let parts = host.components_within(shuffle.map_left(NodeSet::full(p)));

    // Edges of u's graph whose image is no longer an edge of the host.
    let broken: Vec<(usize, usize)> = u
        .graph()
        .edges()
        .into_iter()
        .filter(|&(a, b)| !host.has_edge(shuffle.iota(a), shuffle.iota(b)))
        .collect();
    let projected = project_edges(u.graph(), &EdgeSet::new(broken), u).unwrap();

    let factors: Vec<Tubing> = if projected.graph().components().len() >= 2 {
        factor_components(projected.graph(), &projected).unwrap()
    } else {
        vec![projected.clone()]
    };
    // Rebuild each factor on the host's induced part graph; the graphs agree
    // because the relabelings are order-preserving.
    let factors: Vec<Tubing> = factors
        .iter()
        .zip(&parts)
        .map(|(f, &part)| {
            let (part_graph, _) = host.induced(part);
            assert_eq!(&part_graph, f.graph(), "part graph mismatch");
            Tubing::validate(part_graph, f.tubes().iter().copied()).unwrap()
        })
        .collect();

    let union = parts
        .iter()
        .fold(NodeSet::EMPTY, |acc, &part| acc.union(part));
    let (complement, _) = host.reconnected_complement(union).unwrap();
    assert_eq!(
        &complement,
        v.graph(),
        "the reconnected complement of the parts is the right factor's graph"
    );
    let outer = Tubing::validate(complement, v.tubes().iter().copied()).unwrap();

    BasisElement::Face(include_product_face(&host, &parts, &factors, &outer).unwrap())
}

#[test]
fn template_equals_projection_inclusion_composite() {
    // The uniform product template is literally project, split, include.
    for alg in [Algebra::Ssym, Algebra::Ysym, Algebra::Wsym, Algebra::Dsym] {
        for p in 1..=3 {
            for q in 1..=(5 - p).min(3) {
                for u in alg.basis(p).unwrap() {
                    for v in alg.basis(q).unwrap() {
                        let (BasisElement::Face(ut), BasisElement::Face(vt)) = (&u, &v) else {
                            unreachable!()
                        };
                        for s in shuffles(p, q) {
                            let direct = tubings::algebra::product_term(alg, &u, &v, &s).unwrap();
                            let via = term_via_inclusion(alg, ut, vt, &s);
                            assert_eq!(direct, via, "alg={} u={u} v={v}", alg.name());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn ssym_k1_inclusion_is_shuffled_permutation() {
    // On the complete graph the image of the left block is a single part, so
    // the face inclusion with k = 1 reproduces the shuffled permutation.
    for u in Permutation::all(2) {
        for v in Permutation::all(3) {
            let ut = perm_to_tubing(&u).unwrap();
            let vt = perm_to_tubing(&v).unwrap();
            for (s, w) in shuffles(2, 3).iter().zip(oracles::ssym_product(&u, &v)) {
                let got = term_via_inclusion(Algebra::Ssym, &ut, &vt, s);
                assert_eq!(got, BasisElement::Face(perm_to_tubing(&w).unwrap()));
            }
        }
    }
}

#[test]
fn coproduct_restriction_is_cross_edge_projection() {
    // Restricting to the first i and last n-i nodes equals deleting every
    // crossing edge and splitting the two components apart. For the complete
    // and path families the cut graph has exactly the two windows as
    // components, so the factors are the coproduct legs on the nose.
    for alg in [
        Algebra::Ssym,
        Algebra::Ysym,
        Algebra::SsymFaces,
        Algebra::YsymFaces,
    ] {
        for n in 2..=5 {
            let g = alg.graph(n).unwrap();
            for b in alg.basis(n).unwrap() {
                let BasisElement::Face(t) = &b else {
                    unreachable!()
                };
                let delta = coproduct(alg, &b).unwrap();
                for i in 1..n {
                    let cross: Vec<(usize, usize)> = g
                        .edges()
                        .into_iter()
                        .filter(|&(a, c)| a <= i && c > i)
                        .collect();
                    let projected = project_edges(&g, &EdgeSet::new(cross), t).unwrap();
                    let factors = factor_components(projected.graph(), &projected).unwrap();
                    assert_eq!(factors.len(), 2);
                    let coeff = delta.coeff(
                        &BasisElement::Face(factors[0].clone()),
                        &BasisElement::Face(factors[1].clone()),
                    );
                    assert_eq!(
                        coeff,
                        BigInt::one(),
                        "alg={} t={t} i={i}: expected ({}) (x) ({})",
                        alg.name(),
                        factors[0],
                        factors[1]
                    );
                }
            }
        }
    }
}

#[test]
fn enumeration_matches_powerset_oracle() {
    // Brute force over subsets of the candidate tube list.
    fn powerset_tubings(g: &SimpleGraph) -> Vec<Tubing> {
        let full = g.nodes();
        let tubes: Vec<NodeSet> = g
            .connected_subsets()
            .into_iter()
            .filter(|&t| t != full)
            .collect();
        assert!(tubes.len() <= 20, "oracle only for small tube lists");
        let mut out = Vec::new();
        for mask in 0u32..(1 << tubes.len()) {
            let subset: Vec<NodeSet> = (0..tubes.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| tubes[i])
                .collect();
            if let Ok(t) = Tubing::validate(g.clone(), subset.iter().copied()) {
                if t.rank() == subset.len() {
                    out.push(t);
                }
            }
        }
        out.sort();
        out
    }

    let mut graphs: Vec<SimpleGraph> = Vec::new();
    for n in 1..=4 {
        graphs.push(GraphFamily::Complete.build(n).unwrap());
    }
    for n in 1..=5 {
        graphs.push(GraphFamily::Path.build(n).unwrap());
        graphs.push(GraphFamily::Cycle.build(n).unwrap());
        graphs.push(GraphFamily::Edgeless.build(n).unwrap());
    }
    graphs.push(SimpleGraph::new(5, &[(1, 2), (2, 3), (4, 5)]).unwrap());
    graphs.push(SimpleGraph::new(4, &[(1, 2), (1, 3), (1, 4)]).unwrap());

    for g in graphs {
        let mut fast = enumerate_tubings(&g, RankFilter::All);
        fast.sort();
        let slow = powerset_tubings(&g);
        assert_eq!(fast, slow, "graph {g}");
    }
}

#[test]
fn homomorphism_commutes_termwise_on_a_large_case() {
    // The termwise identity behind the homomorphism property, at a specific
    // degree-7 shuffle: projecting a product term equals the product term of
    // the projections, both for the cycle and the edgeless target.
    let u = BasisElement::Face(
        perm_to_tubing(&Permutation::parse("2314").unwrap()).unwrap(),
    );
    let v = BasisElement::Face(perm_to_tubing(&Permutation::parse("312").unwrap()).unwrap());
    let shuffle = Shuffle::new(4, 3, NodeSet::from_nodes([2, 4, 6, 7])).unwrap();

    for (map, target) in [
        (tubings::algebra::AlgebraMap::SsymToWsym, Algebra::Wsym),
        (tubings::algebra::AlgebraMap::SsymToDsym, Algebra::Dsym),
        (tubings::algebra::AlgebraMap::SsymToYsym, Algebra::Ysym),
    ] {
        let term = tubings::algebra::product_term(Algebra::Ssym, &u, &v, &shuffle).unwrap();
        let (_, lhs) =
            tubings::algebra::hom_map(map, Algebra::Ssym, &basis_combo(term)).unwrap();

        let (_, u_down) =
            tubings::algebra::hom_map(map, Algebra::Ssym, &basis_combo(u.clone())).unwrap();
        let (_, v_down) =
            tubings::algebra::hom_map(map, Algebra::Ssym, &basis_combo(v.clone())).unwrap();
        let (ub, _) = u_down.iter().next().unwrap();
        let (vb, _) = v_down.iter().next().unwrap();
        let rhs = tubings::algebra::product_term(target, ub, vb, &shuffle).unwrap();
        assert_eq!(lhs, basis_combo(rhs), "target {}", target.name());
    }
}

#[test]
fn grammar_round_trips_exhaustively() {
    // Display then parse is the identity on every object the grammars cover.
    for family in GraphFamily::ALL {
        for n in 1..=5 {
            let g = family.build(n).unwrap();
            assert_eq!(SimpleGraph::parse(&g.to_string()).unwrap(), g);
            for t in enumerate_tubings(&g, RankFilter::All) {
                assert_eq!(Tubing::parse(g.clone(), &t.to_string()).unwrap(), t);
            }
        }
    }
    for sigma in Permutation::all(4) {
        assert_eq!(Permutation::parse(&sigma.to_string()).unwrap(), sigma);
    }
    for p in OrderedPartition::all(4) {
        assert_eq!(OrderedPartition::parse(&p.to_string()).unwrap(), p);
    }
    for tree in PlanarTree::all_binary(4) {
        assert_eq!(PlanarTree::parse(&tree.to_string()).unwrap(), tree);
    }
    // Basis element grammar, including the unit and null faces.
    for alg in Algebra::ALL {
        for n in 0..=3 {
            for b in alg.basis(n).unwrap() {
                assert_eq!(BasisElement::parse(alg, &b.to_string()).unwrap(), b);
            }
        }
    }
}
