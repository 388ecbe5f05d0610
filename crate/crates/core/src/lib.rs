//! Pruned subset-sum engines for broken-circuit style reductions.
//!
//! The central object is a sum `Σ_{A ⊆ S} f(A)` over all subsets of a finite,
//! linearly ordered ground set `S`, where `f` takes values in an abelian group.
//! When `f` cancels along a family of circuits (`f(A) + f(A ∖ {max C}) = 0` for
//! every circuit `C ⊆ A`), the sum may be restricted to the subsets that avoid
//! every broken circuit `C ∖ {max C}`. [`engine`] implements that reduction and
//! its poset and semilattice variants; [`convex`] implements the reduction to the
//! free sets of a convex geometry.
//!
//! On top of the engines sit the applications: chromatic, subgraph component and
//! domination polynomials of graphs ([`graph`]), chromatic polynomials of
//! hypergraphs ([`hypergraph`]), characteristic polynomials and beta invariants
//! of matroids ([`matroid`]), Möbius functions of lattices through crosscuts
//! ([`lattice`]) and gcd/lcm expansions of arithmetic functions ([`number`]).
//! Every restricted sum can be refereed by the naive enumerators in [`oracle`].
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod convex;
pub mod engine;
pub mod error;
pub mod generators;
pub mod graph;
pub mod hypergraph;
pub mod lattice;
pub mod matroid;
pub mod number;
pub mod oracle;
pub mod poset;
pub mod subset;

pub use algebra::{BiPolynomial, GroupValue, IntPolynomial};
pub use error::{Error, Result};
pub use subset::Subset;
