//! Independent implementations of the classical products, used to
//! cross-check the shuffle template on tubings.
//!
//! These never touch the tubing machinery except to label their results:
//! the permutation product composes with inverse shuffles, the ordered
//! partition product does the same on block functions, and the binary tree
//! product splits and grafts trees directly.

use num_bigint::BigInt;
use num_traits::One;

use super::{shuffles, BasisElement, LinCombo};
use crate::bijections::{tree_to_tubing, OrderedPartition, Permutation, PlanarTree};
use crate::graph::NodeSet;
use crate::Result;

/// The shuffle product of permutations: one term `(u × v) ∘ σ⁻¹` for each
/// `(p, q)`-shuffle `σ`.
pub fn ssym_product(u: &Permutation, v: &Permutation) -> Vec<Permutation> {
    let (p, q) = (u.len(), v.len());
    let juxtaposed: Vec<usize> = u
        .images()
        .iter()
        .copied()
        .chain(v.images().iter().map(|&x| x + p))
        .collect();
    shuffles(p, q)
        .iter()
        .map(|s| {
            let sigma_inv = s.as_permutation().inverse();
            let images = (1..=p + q)
                .map(|x| juxtaposed[sigma_inv.image(x) - 1])
                .collect();
            Permutation::new(images).expect("composition of bijections")
        })
        .collect()
}

fn standardize(values: &[usize]) -> Permutation {
    let mut sorted: Vec<usize> = values.to_vec();
    sorted.sort_unstable();
    let images = values
        .iter()
        .map(|v| sorted.binary_search(v).unwrap() + 1)
        .collect();
    Permutation::new(images).expect("standardization of distinct values")
}

/// The deconcatenation coproduct of permutations: the `n + 1` splittings of
/// the image word, each part standardized.
pub fn ssym_coproduct(u: &Permutation) -> Vec<(Permutation, Permutation)> {
    let w = u.images();
    (0..=w.len())
        .map(|i| (standardize(&w[..i]), standardize(&w[i..])))
        .collect()
}

/// The shuffle product of ordered partitions: one term `(u × v) ∘ σ⁻¹` per
/// shuffle, where the blocks of `v` are shifted past those of `u`.
pub fn partition_product(u: &OrderedPartition, v: &OrderedPartition) -> Vec<OrderedPartition> {
    let (p, q) = (u.n(), v.n());
    let (k, l) = (u.blocks().len(), v.blocks().len());
    // Block index of each element of the juxtaposition, 1-based.
    let block_of = |x: usize| -> usize {
        if x <= p {
            u.blocks().iter().position(|b| b.contains(x)).unwrap() + 1
        } else {
            v.blocks().iter().position(|b| b.contains(x - p)).unwrap() + 1 + k
        }
    };
    shuffles(p, q)
        .iter()
        .map(|s| {
            let sigma_inv = s.as_permutation().inverse();
            let mut blocks = vec![NodeSet::EMPTY; k + l];
            for x in 1..=p + q {
                let j = block_of(sigma_inv.image(x));
                blocks[j - 1] = blocks[j - 1].insert(x);
            }
            OrderedPartition::new(p + q, blocks).expect("shuffled blocks partition 1..=p+q")
        })
        .collect()
}

/// Split a binary tree along the path from leaf `i` to the root.
fn split_at(tree: &PlanarTree, leaf: usize) -> (PlanarTree, PlanarTree) {
    match tree {
        PlanarTree::Leaf => {
            debug_assert_eq!(leaf, 0);
            (PlanarTree::Leaf, PlanarTree::Leaf)
        }
        PlanarTree::Node(children) => {
            let (l, r) = (&children[0], &children[1]);
            let left_leaves = l.leaf_count();
            if leaf < left_leaves {
                let (a, b) = split_at(l, leaf);
                (a, PlanarTree::Node(vec![b, r.clone()]))
            } else {
                let (a, b) = split_at(r, leaf - left_leaves);
                (PlanarTree::Node(vec![l.clone(), a]), b)
            }
        }
    }
}

/// Replace the leaves of `v`, left to right, by the given trees.
fn graft(v: &PlanarTree, pieces: &[PlanarTree]) -> PlanarTree {
    fn rec(t: &PlanarTree, pieces: &[PlanarTree], next: &mut usize) -> PlanarTree {
        match t {
            PlanarTree::Leaf => {
                let piece = pieces[*next].clone();
                *next += 1;
                piece
            }
            PlanarTree::Node(children) => {
                PlanarTree::Node(children.iter().map(|c| rec(c, pieces, next)).collect())
            }
        }
    }
    let mut next = 0;
    let out = rec(v, pieces, &mut next);
    debug_assert_eq!(next, pieces.len());
    out
}

/// The splitting/grafting product of binary trees, expressed in path graph
/// tubings: split the first tree along a weakly increasing sequence of
/// leaves into `m + 1` pieces and graft them onto the second tree's leaves,
/// left to right. `C(n + m, n)` terms in total.
pub fn ysym_product(u: &PlanarTree, v: &PlanarTree) -> Result<LinCombo> {
    let n = u.internal_count();
    let m = v.internal_count();
    assert!(
        u.is_binary() && v.is_binary(),
        "the tree oracle is binary-only"
    );
    let mut out = LinCombo::zero();
    let mut cuts = Vec::with_capacity(m);
    fn rec(
        u: &PlanarTree,
        v: &PlanarTree,
        n: usize,
        m: usize,
        start: usize,
        cuts: &mut Vec<usize>,
        out: &mut LinCombo,
    ) -> Result<()> {
        if cuts.len() == m {
            // Split at the largest cut first; the left part keeps its leaf
            // numbering, so earlier cuts stay valid.
            let mut pieces = vec![PlanarTree::Leaf; m + 1];
            let mut rest = u.clone();
            for (idx, &c) in cuts.iter().enumerate().rev() {
                let (a, b) = split_at(&rest, c);
                pieces[idx + 1] = b;
                rest = a;
            }
            pieces[0] = rest;
            let grafted = graft(v, &pieces);
            out.add_term(BasisElement::Face(tree_to_tubing(&grafted)?), BigInt::one());
            return Ok(());
        }
        for c in start..=n {
            cuts.push(c);
            rec(u, v, n, m, c, cuts, out)?;
            cuts.pop();
        }
        Ok(())
    }
    rec(u, v, n, m, 0, &mut cuts, &mut out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::binomial;

    #[test]
    fn ssym_oracle_basics() {
        let u = Permutation::parse("1").unwrap();
        let terms = ssym_product(&u, &u);
        assert_eq!(terms.len(), 2);
        assert!(terms.contains(&Permutation::parse("12").unwrap()));
        assert!(terms.contains(&Permutation::parse("21").unwrap()));

        let splits = ssym_coproduct(&Permutation::parse("1342").unwrap());
        assert_eq!(splits.len(), 5);
        assert_eq!(splits[2].0, Permutation::parse("12").unwrap());
        assert_eq!(splits[2].1, Permutation::parse("21").unwrap());
    }

    #[test]
    fn partition_oracle_blocks_shift() {
        let u = OrderedPartition::parse("({1,2})").unwrap();
        let v = OrderedPartition::parse("({1})").unwrap();
        let terms = partition_product(&u, &v);
        assert_eq!(terms.len(), 3);
        for t in &terms {
            assert_eq!(t.blocks().len(), 2);
            assert_eq!(t.blocks()[0].len(), 2, "u's block stays first");
        }
    }

    #[test]
    fn tree_oracle_smallest_products() {
        let one = PlanarTree::parse("(..)").unwrap();
        let prod = ysym_product(&one, &one).unwrap();
        assert_eq!(prod.len(), 2, "the two binary trees on two nodes");
        assert_eq!(prod.coeff_sum(), BigInt::from(2));

        // Grafting onto a corolla-shaped comb: C(n+m, n) terms in total.
        for n in 1..=3 {
            for m in 1..=3 {
                for u in PlanarTree::all_binary(n) {
                    for v in PlanarTree::all_binary(m) {
                        let prod = ysym_product(&u, &v).unwrap();
                        assert_eq!(prod.coeff_sum(), binomial(n + m, n));
                    }
                }
            }
        }
    }
}
