//! Combinatorial and homological invariants of finite simplicial complexes.
//!
//! Starting from a complex `K` on vertices `1..=m` the crate computes
//!
//! - missing faces, flagification, restrictions, skeleta and barycentric
//!   subdivisions ([`complex`]);
//! - the face category and a cubical model of its classifying space ([`facecat`]);
//! - Stanley-Reisner algebras and coalgebras in the real, complex and exterior
//!   gradings, with Hilbert series ([`sralg`]);
//! - graph products of `C2`, `Z` or the circle over the 1-skeleton, with a
//!   normal-form solution of the word problem ([`graphprod`]);
//! - the real moment-angle complex as a cubical complex, with its `C2^m`-action
//!   and exact homology ([`macomplex`], [`homology`]);
//! - coordinate subspace arrangements ([`arrangement`]) and the connectivity
//!   bounds derived from missing faces ([`connectivity`]).
//!
//! The `examples/` directory has one runnable program per area, and the
//! `flagtop` binary exposes the same computations on JSON input.

pub mod arrangement;
pub mod cli;
pub mod complex;
pub mod connectivity;
pub mod cubical;
pub mod error;
pub mod facecat;
pub mod graphprod;
pub mod homology;
pub mod macomplex;
pub mod sralg;

pub use complex::{SimplicialComplex, VertexSet};
pub use error::{Error, Result};
