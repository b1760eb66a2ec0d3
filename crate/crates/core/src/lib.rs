//! Atomistic lattices on few atoms, their realizations as monomial ideals,
//! and the homological and combinatorial invariants attached to them.
//!
//! The pipeline runs in four stages:
//!
//! 1. [`enumerate`] generates every isomorphism class of atomistic lattices
//!    on `k` atoms by repeatedly identifying a non-atom meet-irreducible
//!    element with its unique cover, starting from the boolean lattice.
//! 2. [`realize`] turns each lattice into a squarefree monomial ideal with
//!    that lcm-lattice, and computes lcm-lattices of arbitrary ideals.
//! 3. [`homology`] reads multigraded Betti numbers (hence projective
//!    dimension and depth) off the order complexes of lower intervals;
//!    [`sdepth`] computes Stanley depth exactly by interval partitions of
//!    the characteristic poset; [`invariants`] covers length, breadth and
//!    order dimension.
//! 4. [`verify`] checks `depth S/I = sdepth S/I < sdepth I` across the
//!    enumeration, computing Stanley depth only at extremal nodes and
//!    propagating along the quotient edges.

pub mod canon;
pub mod enumerate;
pub mod error;
pub mod homology;
pub mod invariants;
pub mod lattice;
pub mod realize;
pub mod sdepth;
pub mod verify;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use enumerate::{generate_all, EnumerationDag};
pub use error::{Error, Result};
pub use lattice::{boolean_lattice, free_map, is_atomistic, meet_irreducibles, quotient, Lattice, LatticeMorphism};
pub use realize::{lcm_lattice, parse_ideal, realize, LcmLattice, MonomialIdeal};
