//! Combinatorics of graph associahedra and the graded algebras built on them.
//!
//! The central objects are *tubes* (node sets inducing connected subgraphs)
//! and *tubings* (pairwise compatible collections of tubes) of a labeled
//! simple graph. Tubings of a graph on `n` nodes index the faces of a simple
//! convex polytope of dimension `n - 1`: the permutohedron for the complete
//! graph, the associahedron for the path, the cyclohedron for the cycle and
//! the simplex for the edgeless graph.
//!
//! On top of that face combinatorics the crate provides:
//!
//! * cellular projections induced by edge deletion, including the Tonks
//!   projection from the permutohedron to the associahedron and its
//!   factorizations through cycle and edgeless graphs ([`projections`]);
//! * the dictionary between tubings and permutations, ordered set
//!   partitions, and planar trees ([`bijections`]);
//! * the graded algebras `SSym`, `YSym`, `WSym` and `DSym` on polytope
//!   vertices, their extensions to all faces, the connecting algebra
//!   homomorphisms and module actions ([`algebra`]);
//! * exhaustive small-degree verification drivers for the algebraic
//!   identities the construction satisfies ([`verify`]).
//!
//! All values are immutable after construction and all operations are pure
//! functions, so everything here is safe to use from multiple threads.
//!
//! ```
//! use tubings::algebra::{product, Algebra, BasisElement, LinCombo};
//!
//! // Multiply two simplex vertices; the coefficients count shuffles.
//! let left = LinCombo::basis(BasisElement::simplex_vertex(2, 2)?);
//! let right = LinCombo::basis(BasisElement::simplex_vertex(2, 3)?);
//! let prod = product(Algebra::Dsym, &left, &right)?;
//! assert_eq!(
//!     prod.to_string(),
//!     "3 * n=5;{1}{2}{3}{5}\n4 * n=5;{1}{2}{4}{5}\n3 * n=5;{1}{3}{4}{5}"
//! );
//! # Ok::<(), tubings::Error>(())
//! ```

pub mod algebra;
pub mod bijections;
pub mod graph;
pub mod projections;
pub mod tubing;
pub mod verify;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
