//! Connectivity invariants read off the missing faces of a complex.
//!
//! `c(K)` is the least dimension of a missing face with at least three
//! vertices and `c'(K)` the least dimension of any missing face. The bounds
//! `d` and `d'` follow by `c - 1` for the discrete groups and `2c` for the circle.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graphprod::GroupKind;

/// An integer or `∞`, with `∞` above every integer.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ExtendedInt {
    Finite(i64),
    Infinite,
}

impl ExtendedInt {
    pub fn is_infinite(self) -> bool {
        self == ExtendedInt::Infinite
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            ExtendedInt::Finite(x) => Some(x),
            ExtendedInt::Infinite => None,
        }
    }

    fn map(self, f: impl FnOnce(i64) -> i64) -> Self {
        match self {
            ExtendedInt::Finite(x) => ExtendedInt::Finite(f(x)),
            ExtendedInt::Infinite => ExtendedInt::Infinite,
        }
    }

    /// `c - 1` for `C2` and `Z`, `2c` for `T`.
    pub fn to_d(self, kind: GroupKind) -> Self {
        match kind {
            GroupKind::Cyclic2 | GroupKind::Integer => self.map(|c| c - 1),
            GroupKind::Circle => self.map(|c| 2 * c),
        }
    }
}

impl fmt::Display for ExtendedInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedInt::Finite(x) => write!(f, "{x}"),
            ExtendedInt::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for ExtendedInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtendedInt::Finite(x) => serializer.serialize_i64(*x),
            ExtendedInt::Infinite => serializer.serialize_str("inf"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ConnectivityReport {
    pub c: ExtendedInt,
    pub c_prime: ExtendedInt,
    pub flag: bool,
}

impl ConnectivityReport {
    pub fn d(&self, kind: GroupKind) -> ExtendedInt {
        self.c.to_d(kind)
    }

    pub fn d_prime(&self, kind: GroupKind) -> ExtendedInt {
        self.c_prime.to_d(kind)
    }
}

fn min_dimension(faces: impl Iterator<Item = usize>) -> ExtendedInt {
    faces.map(|n| n as i64 - 1).min().map_or(ExtendedInt::Infinite, ExtendedInt::Finite)
}

pub fn connectivity_report(k: &SimplicialComplex) -> ConnectivityReport {
    let missing = k.missing_faces();
    let c = min_dimension(missing.iter().map(|w| w.len()).filter(|&n| n >= 3));
    let c_prime = min_dimension(missing.iter().map(|w| w.len()));
    ConnectivityReport { c, c_prime, flag: c.is_infinite() }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PairConnectivity {
    pub c: ExtendedInt,
}

impl PairConnectivity {
    pub fn d(&self, kind: GroupKind) -> ExtendedInt {
        self.c.to_d(kind)
    }
}

/// `c(K, L)`: `c(K)` when `L ⊆ Fl(K)`, otherwise 1.
pub fn pair_connectivity(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<PairConnectivity> {
    if k.vertex_count() != l.vertex_count() {
        return Err(Error::VertexCountMismatch(k.vertex_count(), l.vertex_count()));
    }
    if !k.is_subcomplex_of(l) {
        return Err(Error::NotSubcomplex);
    }
    let c = if l.is_subcomplex_of(&k.flagify()) {
        connectivity_report(k).c
    } else {
        ExtendedInt::Finite(1)
    };
    Ok(PairConnectivity { c })
}

/// Whether the comparison map from the Davis-Januszkiewicz space to the
/// classifying space of the graph product is an equivalence: exactly when `K` is flag.
pub fn flag_equivalence_predicate(k: &SimplicialComplex) -> bool {
    k.is_flag()
}
