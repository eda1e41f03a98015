//! Exact-arithmetic toolkit for extended formulations of the permutahedron.
//!
//! Everything here runs over arbitrary-precision rationals: constructing the
//! permutahedron's facet description and its Birkhoff-style extensions,
//! certifying projections and symmetries by exact linear programming, and
//! running the symmetry lower-bound machinery (sections, isotropy groups,
//! component partitions, subgroup averaging, violating-point certificates)
//! as concrete, checkable algorithms at small `n`.
//!
//! The crate is organised around the objects it manipulates:
//!
//! - [`exactnum`]: rationals, vectors, matrices, exact linear solving and an
//!   exact simplex LP solver,
//! - [`permgroup`]: permutations of `[n]`, enumerated subgroups, the vertex
//!   map and the coordinate action,
//! - [`polytope`]: the permutahedron's facets and vertices,
//! - [`formulation`]: extended formulations, the Birkhoff construction, the
//!   subspace transformation, projection and symmetry verification,
//! - [`section`]: sections of an extension, component functions, isotropy
//!   groups and essential elements,
//! - [`audit`]: the lower-bound pipeline producing consistent / refuted /
//!   inconclusive verdicts with self-contained certificates,
//! - [`cli`]: the command-line surface and text file formats.

pub mod audit;
pub mod cli;
mod error;
pub mod exactnum;
pub mod formulation;
pub mod permgroup;
pub mod polytope;
pub mod section;

pub use error::Error;

/// Default cap on `n` for operations that enumerate all of `S_n`.
pub const DEFAULT_ENUMERATION_CAP: usize = 8;
