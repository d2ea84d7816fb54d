//! The real moment-angle complex as a cubical subcomplex of `[-1, 1]^m`.
//!
//! A cell is a face `J ∈ K` together with a sign `±1` for every vertex outside
//! `J`: the cube that is `[-1, 1]` in the coordinates of `J` and constant
//! elsewhere. The group `C2^m` acts by flipping coordinate signs; the stabiliser
//! of a cell is generated by the coordinates in `J`.

use crate::complex::{SimplicialComplex, VertexSet};
use crate::cubical::{Cube, CubicalComplex};
use crate::error::{Error, Result};
use crate::homology::{Coefficients, Homology};

/// Largest vertex count for which the cubical model is built.
pub const MAX_MA_VERTICES: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MACell {
    face: VertexSet,
    /// Vertices outside `face` whose coordinate is `+1`; disjoint from `face`.
    plus: VertexSet,
}

impl MACell {
    /// # Panics
    /// If `plus` meets `face`.
    pub fn new(face: VertexSet, plus: VertexSet) -> Self {
        assert!(face.intersection(plus).is_empty(), "sign assigned inside the face");
        MACell { face, plus }
    }

    pub fn face(&self) -> VertexSet {
        self.face
    }

    pub fn plus(&self) -> VertexSet {
        self.plus
    }

    /// Sign of coordinate `v` (`None` for a free coordinate).
    pub fn sign(&self, v: usize) -> Option<i8> {
        if self.face.contains(v) {
            None
        } else if self.plus.contains(v) {
            Some(1)
        } else {
            Some(-1)
        }
    }

    /// Coordinate pattern over `1..=m`: `*` free, `+` or `-` fixed.
    pub fn pattern(&self, m: usize) -> String {
        (1..=m)
            .map(|v| match self.sign(v) {
                None => '*',
                Some(1) => '+',
                Some(_) => '-',
            })
            .collect()
    }

    /// The action of the `v`-th generator of `C2^m`.
    pub fn flip(&self, v: usize) -> MACell {
        if self.face.contains(v) {
            *self
        } else {
            MACell { face: self.face, plus: VertexSet::from_bits(self.plus.bits() ^ VertexSet::singleton(v).bits()) }
        }
    }
}

impl Cube for MACell {
    fn dimension(&self) -> usize {
        self.face.len()
    }

    fn boundary(&self) -> Vec<(i8, Self)> {
        let mut out = Vec::with_capacity(2 * self.face.len());
        for (pos, i) in self.face.iter().enumerate() {
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            let face = self.face.without(i);
            out.push((sign, MACell { face, plus: self.plus.with(i) }));
            out.push((-sign, MACell { face, plus: self.plus }));
        }
        out
    }
}

fn check_size(k: &SimplicialComplex) -> Result<()> {
    if k.vertex_count() > MAX_MA_VERTICES {
        return Err(Error::TooManyVertices { m: k.vertex_count(), max: MAX_MA_VERTICES });
    }
    Ok(())
}

/// All cells `(J, ε)` with `J ∈ K`: `Σ_J 2^{m-|J|}` of them.
pub fn build_real_ma(k: &SimplicialComplex) -> Result<CubicalComplex<MACell>> {
    check_size(k)?;
    let all = k.vertex_set();
    Ok(CubicalComplex::from_cells(k.faces().flat_map(move |face| {
        all.difference(face).subsets().map(move |plus| MACell { face, plus })
    })))
}

pub fn ma_homology(k: &SimplicialComplex, coefficients: Coefficients) -> Result<Homology> {
    build_real_ma(k)?.homology(coefficients)
}

/// Coordinates generating the isotropy subgroup of the cell.
pub fn stabilizer(cell: &MACell) -> VertexSet {
    cell.face
}

/// Number of `C2^m`-orbits of cells in each dimension. Orbits of `k`-cells
/// correspond to faces with `k` vertices.
pub fn orbit_counts(k: &SimplicialComplex) -> Result<Vec<usize>> {
    check_size(k)?;
    let mut counts = vec![0; (k.dim() + 1) as usize + 1];
    for face in k.faces() {
        counts[face.len()] += 1;
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::try_new(64, vs.iter().copied()).unwrap()
    }

    #[test]
    fn cell_counts() {
        assert_eq!(build_real_ma(&SimplicialComplex::simplex(2).unwrap()).unwrap().cell_counts(), vec![4, 4, 1]);
        assert_eq!(build_real_ma(&SimplicialComplex::discrete(2).unwrap()).unwrap().cell_counts(), vec![4, 4]);
        let d3 = build_real_ma(&SimplicialComplex::simplex_boundary(3).unwrap()).unwrap();
        assert_eq!(d3.cell_counts(), vec![8, 12, 6]);
        assert!(build_real_ma(&SimplicialComplex::discrete(17).unwrap()).is_err());
    }

    #[test]
    fn sphere_and_torus() {
        let d3 = SimplicialComplex::simplex_boundary(3).unwrap();
        let h = ma_homology(&d3, Coefficients::Integers).unwrap();
        assert_eq!(h.betti_numbers(), vec![1, 0, 1]);
        let sq = SimplicialComplex::polygon(4).unwrap();
        let h = ma_homology(&sq, Coefficients::Integers).unwrap();
        assert_eq!(h.betti_numbers(), vec![1, 2, 1]);
        assert!(!h.has_torsion());
        let cube = ma_homology(&SimplicialComplex::simplex(3).unwrap(), Coefficients::Integers).unwrap();
        assert_eq!(cube.reduced_betti_numbers(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn stabilizers_and_orbits() {
        let empty = MACell::new(VertexSet::EMPTY, set(&[1]));
        assert_eq!(stabilizer(&empty), VertexSet::EMPTY);
        let top = MACell::new(set(&[1, 2, 3]), VertexSet::EMPTY);
        assert_eq!(stabilizer(&top), set(&[1, 2, 3]));
        let edge = MACell::new(set(&[1, 2]), set(&[3]));
        assert_eq!(stabilizer(&edge), set(&[1, 2]));
        assert_eq!(edge.flip(1), edge);
        assert_eq!(edge.flip(3), MACell::new(set(&[1, 2]), VertexSet::EMPTY));
        assert_eq!(orbit_counts(&SimplicialComplex::simplex_boundary(3).unwrap()).unwrap(), vec![1, 3, 3]);
        assert_eq!(orbit_counts(&SimplicialComplex::simplex(4).unwrap()).unwrap(), vec![1, 4, 6, 4, 1]);
        assert_eq!(edge.pattern(4), "**+-");
    }
}
