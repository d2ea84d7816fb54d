//! The face category of a complex and the cubical model of its classifying space.
//!
//! Objects of the face category are the faces of `K` (with `∅` initial) and
//! morphisms are inclusions. Its classifying space sits inside the unit cube
//! `I^m`: the cell `(σ, τ)` with `σ ⊆ τ ∈ K` is the set of points whose
//! coordinates are `1` on `σ`, free in `τ \ σ` and `0` elsewhere. Each object
//! `σ` is the vertex `(σ, σ)`, its characteristic function.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::complex::{SimplicialComplex, VertexSet};
use crate::cubical::{Cube, CubicalComplex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CubicalCell {
    lower: VertexSet,
    upper: VertexSet,
}

impl CubicalCell {
    /// # Panics
    /// If `lower` is not contained in `upper`.
    pub fn new(lower: VertexSet, upper: VertexSet) -> Self {
        assert!(lower.is_subset(upper), "{lower} is not contained in {upper}");
        CubicalCell { lower, upper }
    }

    /// Coordinates fixed at 1.
    pub fn lower(&self) -> VertexSet {
        self.lower
    }

    /// Coordinates outside `upper` are fixed at 0.
    pub fn upper(&self) -> VertexSet {
        self.upper
    }

    /// Free coordinates.
    pub fn free(&self) -> VertexSet {
        self.upper.difference(self.lower)
    }
}

impl Cube for CubicalCell {
    fn dimension(&self) -> usize {
        self.free().len()
    }

    fn boundary(&self) -> Vec<(i8, Self)> {
        let mut out = Vec::with_capacity(2 * self.dimension());
        for (pos, i) in self.free().iter().enumerate() {
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            out.push((sign, CubicalCell::new(self.lower.with(i), self.upper)));
            out.push((-sign, CubicalCell::new(self.lower, self.upper.without(i))));
        }
        out
    }
}

/// Number of objects of the face category, counting `∅`.
pub fn object_count(k: &SimplicialComplex) -> usize {
    k.face_count()
}

/// Number of strictly increasing chains `σ_0 ⊂ ... ⊂ σ_n` of faces (including `∅`),
/// i.e. nondegenerate `n`-simplices of the nerve.
pub fn chain_count(k: &SimplicialComplex, n: usize) -> BigUint {
    let mut ending_at: HashMap<VertexSet, BigUint> = k.faces().map(|f| (f, BigUint::one())).collect();
    for _ in 0..n {
        ending_at = k
            .faces()
            .map(|tau| {
                let total = tau
                    .subsets()
                    .filter(|&s| s != tau)
                    .fold(BigUint::zero(), |acc, s| acc + &ending_at[&s]);
                (tau, total)
            })
            .collect();
    }
    ending_at.into_values().sum()
}

/// All cells `(σ, τ)` with `σ ⊆ τ ∈ K`.
pub fn cubical_model(k: &SimplicialComplex) -> CubicalComplex<CubicalCell> {
    CubicalComplex::from_cells(
        k.faces().flat_map(|tau| tau.subsets().map(move |sigma| CubicalCell::new(sigma, tau))),
    )
}

/// The cells of the face `B(σ↓cat(K))`: those `(ρ, τ)` with `σ ⊆ ρ ⊆ τ ∈ K`.
pub fn face_subcomplex(k: &SimplicialComplex, sigma: VertexSet) -> Result<BTreeSet<CubicalCell>> {
    if !k.contains(sigma) {
        return Err(Error::NotAFace(sigma.to_string()));
    }
    Ok(k.faces()
        .filter(|tau| sigma.is_subset(*tau))
        .flat_map(|tau| {
            tau.difference(sigma)
                .subsets()
                .map(move |extra| CubicalCell::new(sigma.union(extra), tau))
        })
        .collect())
}

/// The facet `B(v↓cat(K))` for a vertex `v`.
pub fn facet(k: &SimplicialComplex, v: usize) -> Result<BTreeSet<CubicalCell>> {
    let vertex = VertexSet::try_new(k.vertex_count(), [v])?;
    face_subcomplex(k, vertex)
}
