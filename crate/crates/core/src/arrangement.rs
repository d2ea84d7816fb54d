//! Coordinate subspace arrangements attached to a complex.
//!
//! For `W ⊆ V` let `Y_W` be the coordinate subspace where every coordinate in
//! `W` vanishes. The arrangement of `K` consists of `Y_W` for the non-faces `W`;
//! its maximal members come from the minimal non-faces. A point lies in the
//! complement exactly when its zero set is a face of `K`.

use std::fmt;

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::Result;
use crate::homology::{Coefficients, Homology};
use crate::macomplex::ma_homology;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ArrangementField {
    Real,
    Complex,
    /// The 1-star: combinatorially the same zero-set data as the real case.
    Exterior,
}

impl ArrangementField {
    /// Real codimension of a single coordinate hyperplane.
    pub fn real_codimension_per_vertex(self) -> usize {
        match self {
            ArrangementField::Complex => 2,
            ArrangementField::Real | ArrangementField::Exterior => 1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ArrangementField::Real => "R",
            ArrangementField::Complex => "C",
            ArrangementField::Exterior => "E",
        }
    }
}

impl fmt::Display for ArrangementField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// An arrangement recorded by its maximal subspaces `Y_W`, `W` a minimal non-face.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Arrangement {
    pub field: ArrangementField,
    pub generators: Vec<VertexSet>,
}

impl Arrangement {
    /// Real codimension of `Y_W`.
    pub fn codimension(&self, w: VertexSet) -> usize {
        w.len() * self.field.real_codimension_per_vertex()
    }

    /// Whether a point with zero set `s` lies on some subspace of the arrangement.
    pub fn covers(&self, s: VertexSet) -> bool {
        self.generators.iter().any(|w| w.is_subset(s))
    }
}

pub fn arrangement(k: &SimplicialComplex, field: ArrangementField) -> Arrangement {
    Arrangement { field, generators: k.missing_faces() }
}

/// Whether a point whose zero set is `s` lies in the complement of the arrangement.
pub fn in_complement(k: &SimplicialComplex, s: VertexSet) -> bool {
    k.contains(s)
}

/// Integral homology of the real complement, computed on the real
/// moment-angle complex (the two are homotopy equivalent).
pub fn complement_homology_real(k: &SimplicialComplex) -> Result<Homology> {
    ma_homology(k, Coefficients::Integers)
}
