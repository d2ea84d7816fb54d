//! Finite simplicial complexes on the vertex set `{1, ..., m}`.
//!
//! Faces are stored as 64-bit masks, so `m <= 64`. Every complex contains the
//! empty face and all `m` singletons; constructors add them automatically.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A subset of `{1, ..., 64}`, stored as a bitmask (vertex `v` is bit `v - 1`).
///
/// Sets are ordered first by cardinality and then lexicographically on their
/// ascending vertex lists, so `{} < {1} < {2} < {1,2} < {1,3} < {2,3}`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// # Panics
    /// If `v` is not in `1..=64`.
    pub fn singleton(v: usize) -> Self {
        assert!((1..=MAX_VERTICES).contains(&v), "vertex {v} out of range");
        VertexSet(1 << (v - 1))
    }

    /// The full set `{1, ..., m}`.
    pub fn full(m: usize) -> Self {
        assert!(m <= MAX_VERTICES);
        if m == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << m) - 1)
        }
    }

    /// Builds a set, checking every vertex lies in `1..=m`.
    pub fn try_new(m: usize, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v > m || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange { vertex: v, m });
            }
            bits |= 1 << (v - 1);
        }
        Ok(VertexSet(bits))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Self {
        self.union(VertexSet::singleton(v))
    }

    pub fn without(self, v: usize) -> Self {
        self.difference(VertexSet::singleton(v))
    }

    /// Largest vertex, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Number of elements of `self` strictly smaller than `v`.
    pub fn rank_of(self, v: usize) -> usize {
        (self.0 & ((1u64 << (v - 1)) - 1)).count_ones() as usize
    }

    /// All subsets, including `self` and the empty set.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let mask = self.0;
        let mut next = Some(mask);
        std::iter::from_fn(move || {
            let current = next?;
            next = (current != 0).then(|| (current - 1) & mask);
            Some(VertexSet(current))
        })
    }

    /// Subsets obtained by deleting exactly one vertex.
    pub fn facets(self) -> impl Iterator<Item = VertexSet> {
        self.iter().map(move |v| self.without(v))
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                // self holds the smallest differing vertex
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite simplicial complex on `{1, ..., m}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialComplex {
    m: usize,
    faces: BTreeSet<VertexSet>,
}

impl SimplicialComplex {
    /// Downward closure of `maximal`, together with `∅` and every singleton.
    pub fn from_maximal_faces<I, F>(m: usize, maximal: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = usize>,
    {
        check_vertex_count(m)?;
        let mut generators = Vec::new();
        for face in maximal {
            generators.push(VertexSet::try_new(m, face)?);
        }
        Ok(Self::from_generators(m, generators))
    }

    fn from_generators(m: usize, generators: impl IntoIterator<Item = VertexSet>) -> Self {
        let mut faces = BTreeSet::new();
        faces.insert(VertexSet::EMPTY);
        for v in 1..=m {
            faces.insert(VertexSet::singleton(v));
        }
        for g in generators {
            if faces.contains(&g) {
                continue;
            }
            faces.extend(g.subsets());
        }
        SimplicialComplex { m, faces }
    }

    /// Builds a complex from a family that is already downward closed and
    /// contains every singleton.
    fn from_closed_family(m: usize, faces: BTreeSet<VertexSet>) -> Self {
        debug_assert!(faces.contains(&VertexSet::EMPTY));
        SimplicialComplex { m, faces }
    }

    /// The full simplex `2^V` on `m` vertices.
    pub fn simplex(m: usize) -> Result<Self> {
        check_vertex_count(m)?;
        Ok(Self::from_generators(m, [VertexSet::full(m)]))
    }

    /// The boundary `∂(n)` of the `(n-1)`-simplex: all proper subsets of `{1..n}`.
    pub fn simplex_boundary(n: usize) -> Result<Self> {
        check_vertex_count(n)?;
        let full = VertexSet::full(n);
        Ok(Self::from_generators(n, full.facets()))
    }

    /// `m` isolated points.
    pub fn discrete(m: usize) -> Result<Self> {
        check_vertex_count(m)?;
        Ok(Self::from_generators(m, []))
    }

    /// The boundary of a planar `m`-gon with edges `{i, i+1}` and `{m, 1}`.
    pub fn polygon(m: usize) -> Result<Self> {
        check_vertex_count(m)?;
        let edges = (1..=m).map(|i| VertexSet::singleton(i).with(i % m + 1));
        Ok(Self::from_generators(m, edges))
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.m)
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.faces.contains(&face)
    }

    /// All faces including `∅`, ordered by dimension then lexicographically.
    pub fn faces(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.faces.iter().copied()
    }

    /// Number of faces including `∅`.
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Dimension of the largest face; `-1` when there are no vertices.
    pub fn dim(&self) -> isize {
        self.faces.last().map_or(-1, |f| f.len() as isize - 1)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; (self.dim() + 1) as usize];
        for face in self.faces.iter().filter(|f| !f.is_empty()) {
            f[face.len() - 1] += 1;
        }
        f
    }

    pub fn maximal_faces(&self) -> Vec<VertexSet> {
        self.faces
            .iter()
            .filter(|&&f| {
                (1..=self.m).all(|v| f.contains(v) || !self.faces.contains(&f.with(v)))
            })
            .copied()
            .collect()
    }

    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        i != j
            && (1..=self.m).contains(&i)
            && (1..=self.m).contains(&j)
            && self.contains(VertexSet::singleton(i).with(j))
    }

    /// Neighbourhood masks of the 1-skeleton, indexed by `v - 1`.
    pub fn adjacency(&self) -> Vec<VertexSet> {
        let mut adj = vec![VertexSet::EMPTY; self.m];
        for e in self.faces.iter().filter(|f| f.len() == 2) {
            let vs = e.to_vec();
            adj[vs[0] - 1] = adj[vs[0] - 1].with(vs[1]);
            adj[vs[1] - 1] = adj[vs[1] - 1].with(vs[0]);
        }
        adj
    }

    /// True when every pair of vertices of `w` spans an edge.
    pub fn spans_clique(&self, w: VertexSet) -> bool {
        let adj = self.adjacency();
        w.iter().all(|v| w.without(v).is_subset(adj[v - 1]))
    }

    /// Minimal non-faces: sets outside `K` whose proper subsets all lie in `K`.
    pub fn missing_faces(&self) -> Vec<VertexSet> {
        // Every missing face W arises exactly once as σ ∪ {v} with σ = W \ {max W}.
        let mut missing = BTreeSet::new();
        for &sigma in &self.faces {
            let start = sigma.max().unwrap_or(0) + 1;
            for v in start..=self.m {
                let candidate = sigma.with(v);
                if !self.contains(candidate) && candidate.facets().all(|f| self.contains(f)) {
                    missing.insert(candidate);
                }
            }
        }
        missing.into_iter().collect()
    }

    pub fn is_flag(&self) -> bool {
        self.missing_faces().iter().all(|w| w.len() == 2)
    }

    /// The flagification: the clique complex of the 1-skeleton.
    pub fn flagify(&self) -> Self {
        let adj = self.adjacency();
        let mut faces = BTreeSet::new();
        faces.insert(VertexSet::EMPTY);
        extend_cliques(&adj, VertexSet::EMPTY, VertexSet::full(self.m), &mut faces);
        Self::from_closed_family(self.m, faces)
    }

    /// `K_W`, relabelled so that the vertices of `W` become `1..|W|` in ascending order.
    pub fn restriction(&self, w: VertexSet) -> Result<Self> {
        if let Some(v) = w.max().filter(|&v| v > self.m) {
            return Err(Error::VertexOutOfRange { vertex: v, m: self.m });
        }
        let relabel = |face: VertexSet| {
            VertexSet::from_bits(face.iter().fold(0u64, |acc, v| acc | 1 << w.rank_of(v)))
        };
        let faces = self
            .faces
            .iter()
            .filter(|f| f.is_subset(w))
            .map(|&f| relabel(f))
            .collect();
        Ok(Self::from_closed_family(w.len(), faces))
    }

    /// Faces of dimension at most `j`.
    pub fn skeleton(&self, j: usize) -> Self {
        let faces = self.faces.iter().filter(|f| f.len() <= j + 1).copied().collect();
        Self::from_closed_family(self.m, faces)
    }

    /// Faces of `K'` are chains of nonempty faces of `K` under strict inclusion.
    ///
    /// Vertex `i` of the result is the `i`-th nonempty face of `K` in the order of
    /// [`SimplicialComplex::faces`].
    pub fn barycentric_subdivision(&self) -> Result<Self> {
        let vertices: Vec<VertexSet> = self.faces.iter().filter(|f| !f.is_empty()).copied().collect();
        check_vertex_count(vertices.len())?;
        // Strict supersets of each face, as a mask over the new vertex labels.
        let above: Vec<u64> = vertices
            .iter()
            .map(|&f| {
                vertices
                    .iter()
                    .enumerate()
                    .filter(|&(_, &g)| g != f && f.is_subset(g))
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        let mut faces = BTreeSet::new();
        faces.insert(VertexSet::EMPTY);
        let mut stack: Vec<(u64, u64)> = (0..vertices.len()).map(|i| (1u64 << i, above[i])).collect();
        while let Some((chain, extensions)) = stack.pop() {
            faces.insert(VertexSet::from_bits(chain));
            let mut rest = extensions;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                stack.push((chain | 1 << i, extensions & above[i]));
            }
        }
        Ok(Self::from_closed_family(vertices.len(), faces))
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.m == other.m && self.faces.is_subset(&other.faces)
    }
}

fn check_vertex_count(m: usize) -> Result<()> {
    if m > MAX_VERTICES {
        return Err(Error::TooManyVertices { m, max: MAX_VERTICES });
    }
    Ok(())
}

fn extend_cliques(
    adj: &[VertexSet],
    clique: VertexSet,
    candidates: VertexSet,
    out: &mut BTreeSet<VertexSet>,
) {
    for v in candidates.iter() {
        let next = clique.with(v);
        out.insert(next);
        let later = candidates.difference(VertexSet::full(v));
        extend_cliques(adj, next, later.intersection(adj[v - 1]), out);
    }
}
