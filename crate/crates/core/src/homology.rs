//! Exact homology of finite chain complexes of free abelian groups.
//!
//! Integer homology goes through a sparse Smith normal form over [`BigInt`];
//! mod 2 homology through Gaussian elimination on bit rows.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A sparse integer matrix stored by rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    ncols: usize,
    rows: Vec<BTreeMap<usize, BigInt>>,
}

impl IntMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IntMatrix { ncols, rows: vec![BTreeMap::new(); nrows] }
    }

    /// # Panics
    /// If the rows have different lengths.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = IntMatrix::zeros(rows.len(), ncols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged matrix");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x.into());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.rows[i].get(&j).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        assert!(j < self.ncols, "column {j} out of range");
        if value.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, value);
        }
    }

    /// Adds `value` to entry `(i, j)`.
    pub fn add_to(&mut self, i: usize, j: usize, value: impl Into<BigInt>) {
        let updated = self.get(i, j) + value.into();
        self.set(i, j, updated);
    }

    /// Nonzero entries of row `i`, by ascending column.
    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, &BigInt)> {
        self.rows[i].iter().map(|(&j, x)| (j, x))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.ncols, other.nrows(), "shape mismatch");
        let mut out = IntMatrix::zeros(self.nrows(), other.ncols);
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (&k, a) in row {
                for (&j, b) in &other.rows[k] {
                    *acc.entry(j).or_default() += a * b;
                }
            }
            acc.retain(|_, x| !x.is_zero());
            out.rows[i] = acc;
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        (0..self.nrows()).map(|i| (0..self.ncols).map(|j| self.get(i, j)).collect()).collect()
    }
}

/// Invariant factors `d_1 | d_2 | ... | d_r` of an integer matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

/// Sparse elimination state: rows plus a column -> rows index.
struct Eliminator {
    rows: Vec<BTreeMap<usize, BigInt>>,
    cols: Vec<BTreeSet<usize>>,
}

impl Eliminator {
    fn new(a: &IntMatrix) -> Self {
        let mut cols = vec![BTreeSet::new(); a.ncols];
        for (i, row) in a.rows.iter().enumerate() {
            for &j in row.keys() {
                cols[j].insert(i);
            }
        }
        Eliminator { rows: a.rows.clone(), cols }
    }

    fn set(&mut self, i: usize, j: usize, value: BigInt) {
        if value.is_zero() {
            self.rows[i].remove(&j);
            self.cols[j].remove(&i);
        } else {
            self.rows[i].insert(j, value);
            self.cols[j].insert(i);
        }
    }

    /// row[target] -= factor * row[source]
    fn row_axpy(&mut self, target: usize, factor: &BigInt, source: usize) {
        let source_row: Vec<(usize, BigInt)> =
            self.rows[source].iter().map(|(&j, x)| (j, x.clone())).collect();
        for (j, x) in source_row {
            let current = self.rows[target].get(&j).cloned().unwrap_or_default();
            self.set(target, j, current - factor * x);
        }
    }

    fn remove_row(&mut self, i: usize) {
        for j in std::mem::take(&mut self.rows[i]).into_keys() {
            self.cols[j].remove(&i);
        }
    }

    /// Nonzero entry of least absolute value, stopping early on a unit.
    fn smallest_entry(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, &BigInt)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            for (&j, x) in row {
                if best.is_none_or(|(_, _, b)| x.abs() < b.abs()) {
                    if x.is_one() || (-x).is_one() {
                        return Some((i, j));
                    }
                    best = Some((i, j, x));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    /// Clears row `r` and column `c` around the pivot, returning the final pivot
    /// magnitude. The pivot moves to a strictly smaller entry whenever a division
    /// leaves a remainder.
    fn eliminate_at(&mut self, mut r: usize, mut c: usize) -> BigInt {
        loop {
            let p = self.rows[r][&c].clone();
            let others: Vec<usize> = self.cols[c].iter().copied().filter(|&i| i != r).collect();
            for i in others {
                let q = &self.rows[i][&c] / &p;
                if !q.is_zero() {
                    self.row_axpy(i, &q, r);
                }
            }
            if let Some(i) = self.smallest_in_col(c, r) {
                r = i;
                continue;
            }
            // Column c is now zero outside row r, so column operations only touch row r.
            let row_entries: Vec<(usize, BigInt)> = self.rows[r]
                .iter()
                .filter(|&(&j, _)| j != c)
                .map(|(&j, x)| (j, x.clone()))
                .collect();
            for (j, x) in row_entries {
                let rem = &x - (&x / &p) * &p;
                self.set(r, j, rem);
            }
            if let Some(j) = self.smallest_in_row(r, c) {
                c = j;
                continue;
            }
            self.remove_row(r);
            return p.abs();
        }
    }

    fn smallest_in_col(&self, c: usize, skip: usize) -> Option<usize> {
        self.cols[c]
            .iter()
            .copied()
            .filter(|&i| i != skip)
            .min_by_key(|&i| self.rows[i][&c].abs())
    }

    fn smallest_in_row(&self, r: usize, skip: usize) -> Option<usize> {
        self.rows[r]
            .iter()
            .filter(|&(&j, _)| j != skip)
            .min_by_key(|(_, x)| x.abs())
            .map(|(&j, _)| j)
    }
}

/// Smith normal form by gcd-pivot elimination on the sparse matrix.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let mut elim = Eliminator::new(a);
    let mut units = 0usize;
    let mut others: Vec<BigInt> = Vec::new();
    while let Some((r, c)) = elim.smallest_entry() {
        let d = elim.eliminate_at(r, c);
        if d.is_one() {
            units += 1;
        } else {
            others.push(d);
        }
    }
    // A diagonal matrix has the same invariant factors after (gcd, lcm) normalisation.
    for i in 0..others.len() {
        for j in i + 1..others.len() {
            let (g, l) = (others[i].gcd(&others[j]), others[i].lcm(&others[j]));
            others[i] = g;
            others[j] = l;
        }
    }
    let mut diagonal = vec![BigInt::one(); units];
    diagonal.extend(others);
    diagonal.sort();
    SmithForm { diagonal }
}

/// Rank over the field with two elements.
pub fn rank_mod2(a: &IntMatrix) -> usize {
    let words = a.ncols.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = a
        .rows
        .iter()
        .map(|row| {
            let mut bits = vec![0u64; words];
            for (&j, x) in row {
                if x.is_odd() {
                    bits[j / 64] |= 1 << (j % 64);
                }
            }
            bits
        })
        .filter(|bits| bits.iter().any(|&w| w != 0))
        .collect();
    let mut rank = 0;
    for col in 0..a.ncols {
        let (w, b) = (col / 64, 1u64 << (col % 64));
        let Some(pos) = rows[rank..].iter().position(|r| r[w] & b != 0) else {
            continue;
        };
        rows.swap(rank, rank + pos);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[w] & b != 0 {
                row.iter_mut().zip(&pivot).for_each(|(x, y)| *x ^= y);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Coefficient ring for homology.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Coefficients {
    Integers,
    Mod2,
}

/// `ranks[k]` free generators in degree `k`; `boundaries[k-1]` is `∂_k`,
/// a `ranks[k-1] x ranks[k]` matrix.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    /// Validates shapes and `∂_k ∘ ∂_{k+1} = 0`.
    pub fn new(ranks: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self> {
        let expected = ranks.len().saturating_sub(1);
        for (idx, d) in boundaries.iter().enumerate() {
            let k = idx + 1;
            let (rows, cols) = (d.nrows(), d.ncols());
            if idx >= expected || rows != ranks[k - 1] || cols != ranks[k] {
                return Err(Error::BoundaryShape {
                    index: k,
                    rows,
                    cols,
                    expected_rows: ranks.get(k - 1).copied().unwrap_or(0),
                    expected_cols: ranks.get(k).copied().unwrap_or(0),
                });
            }
        }
        if boundaries.len() != expected {
            return Err(Error::BoundaryShape {
                index: boundaries.len() + 1,
                rows: 0,
                cols: 0,
                expected_rows: ranks[boundaries.len()],
                expected_cols: ranks[boundaries.len() + 1],
            });
        }
        for k in 1..boundaries.len() {
            if !boundaries[k - 1].mul(&boundaries[k]).is_zero() {
                return Err(Error::BoundaryNotNilpotent(k));
            }
        }
        Ok(ChainComplex { ranks, boundaries })
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `∂_k` for `k >= 1`.
    pub fn boundary(&self, k: usize) -> Option<&IntMatrix> {
        k.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(self.ranks.iter().map(|&r| r as i64))
    }

    pub fn homology(&self, coefficients: Coefficients) -> Homology {
        let n = self.ranks.len();
        let mut groups = Vec::with_capacity(n);
        match coefficients {
            Coefficients::Integers => {
                let snf: Vec<SmithForm> = self.boundaries.iter().map(smith_normal_form).collect();
                for k in 0..n {
                    let rank_out = if k == 0 { 0 } else { snf[k - 1].rank() };
                    let incoming = snf.get(k);
                    let rank_in = incoming.map_or(0, SmithForm::rank);
                    let torsion = incoming
                        .map(|s| s.diagonal.iter().filter(|d| !d.is_one()).cloned().collect())
                        .unwrap_or_default();
                    groups.push(HomologyGroup { betti: self.ranks[k] - rank_out - rank_in, torsion });
                }
            }
            Coefficients::Mod2 => {
                let ranks: Vec<usize> = self.boundaries.iter().map(rank_mod2).collect();
                for k in 0..n {
                    let rank_out = if k == 0 { 0 } else { ranks[k - 1] };
                    let rank_in = ranks.get(k).copied().unwrap_or(0);
                    groups.push(HomologyGroup {
                        betti: self.ranks[k] - rank_out - rank_in,
                        torsion: Vec::new(),
                    });
                }
            }
        }
        Homology { coefficients, groups }
    }
}

fn alternating_sum(xs: impl Iterator<Item = i64>) -> i64 {
    xs.enumerate().map(|(k, x)| if k % 2 == 0 { x } else { -x }).sum()
}

/// One homology group: `Z^betti ⊕ ⊕ Z/d_i` (or `(Z/2)^betti` over `Z/2`).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn free(betti: usize) -> Self {
        HomologyGroup { betti, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

/// Homology in degrees `0..=top`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Homology {
    pub coefficients: Coefficients,
    pub groups: Vec<HomologyGroup>,
}

impl Homology {
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.betti).collect()
    }

    /// Betti numbers of reduced homology (degree 0 lowered by one for a nonempty complex).
    pub fn reduced_betti_numbers(&self) -> Vec<usize> {
        let mut b = self.betti_numbers();
        if let Some(b0) = b.first_mut() {
            *b0 = b0.saturating_sub(1);
        }
        b
    }

    /// Whether reduced homology vanishes in every degree `<= k`.
    pub fn reduced_vanishes_through(&self, k: usize) -> bool {
        self.groups
            .iter()
            .take(k + 1)
            .enumerate()
            .all(|(i, g)| g.torsion.is_empty() && g.betti == usize::from(i == 0))
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.iter().any(|g| !g.torsion.is_empty())
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(self.groups.iter().map(|g| g.betti as i64))
    }

    /// Homology of the sphere `S^n` with the given coefficients.
    pub fn sphere(n: usize, coefficients: Coefficients) -> Self {
        let mut groups = vec![HomologyGroup::default(); n + 1];
        if n == 0 {
            groups[0].betti = 2;
        } else {
            groups[0].betti = 1;
            groups[n].betti = 1;
        }
        Homology { coefficients, groups }
    }

    /// Same groups after dropping trailing zeros.
    pub fn trimmed(&self) -> Vec<HomologyGroup> {
        let mut groups = self.groups.clone();
        while groups.last().is_some_and(HomologyGroup::is_zero) {
            groups.pop();
        }
        groups
    }

    /// Compares up to trailing zero groups.
    pub fn same_groups(&self, other: &Homology) -> bool {
        self.coefficients == other.coefficients && self.trimmed() == other.trimmed()
    }

    pub fn describe(&self, k: usize) -> String {
        let g = &self.groups[k];
        let base = match self.coefficients {
            Coefficients::Integers => "Z",
            Coefficients::Mod2 => "Z/2",
        };
        let mut parts = Vec::new();
        match g.betti {
            0 => {}
            1 => parts.push(base.to_string()),
            b if base.contains('/') => parts.push(format!("({base})^{b}")),
            b => parts.push(format!("{base}^{b}")),
        }
        parts.extend(g.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for Homology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..self.groups.len() {
            writeln!(f, "H_{k}: {}", self.describe(k))?;
        }
        Ok(())
    }
}
