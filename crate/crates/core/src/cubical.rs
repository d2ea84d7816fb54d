//! Finite cubical complexes given by their cells and a signed boundary rule.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::homology::{ChainComplex, Coefficients, Homology, IntMatrix};

/// A cell of a cubical complex.
pub trait Cube: Clone + Ord + Hash + fmt::Debug {
    fn dimension(&self) -> usize;

    /// Codimension-one faces with their incidence signs.
    fn boundary(&self) -> Vec<(i8, Self)>;
}

/// Cells grouped by dimension, each group sorted.
#[derive(Clone, Debug)]
pub struct CubicalComplex<C> {
    cells: Vec<Vec<C>>,
}

impl<C: Cube> CubicalComplex<C> {
    pub fn from_cells(cells: impl IntoIterator<Item = C>) -> Self {
        let mut by_dim: Vec<Vec<C>> = Vec::new();
        for c in cells {
            let d = c.dimension();
            if by_dim.len() <= d {
                by_dim.resize_with(d + 1, Vec::new);
            }
            by_dim[d].push(c);
        }
        for group in &mut by_dim {
            group.sort();
            group.dedup();
        }
        CubicalComplex { cells: by_dim }
    }

    /// Cells of dimension `k`.
    pub fn cells(&self, k: usize) -> &[C] {
        self.cells.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = &C> {
        self.cells.iter().flatten()
    }

    /// Number of cells per dimension.
    pub fn cell_counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.len() as i64 } else { -(c.len() as i64) })
            .sum()
    }

    /// Cellular chain complex; fails if some boundary leaves the complex
    /// or `∂∂ ≠ 0`.
    pub fn chain_complex(&self) -> Result<ChainComplex> {
        let index: Vec<HashMap<&C, usize>> = self
            .cells
            .iter()
            .map(|group| group.iter().enumerate().map(|(i, c)| (c, i)).collect())
            .collect();
        let mut boundaries = Vec::new();
        for k in 1..self.cells.len() {
            let mut d = IntMatrix::zeros(self.cells[k - 1].len(), self.cells[k].len());
            for (j, cell) in self.cells[k].iter().enumerate() {
                for (sign, face) in cell.boundary() {
                    let i = *index[k - 1]
                        .get(&face)
                        .ok_or_else(|| Error::MissingBoundaryCell(format!("{face:?}")))?;
                    d.add_to(i, j, sign);
                }
            }
            boundaries.push(d);
        }
        ChainComplex::new(self.cell_counts(), boundaries)
    }

    pub fn homology(&self, coefficients: Coefficients) -> Result<Homology> {
        Ok(self.chain_complex()?.homology(coefficients))
    }
}
