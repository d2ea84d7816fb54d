#![allow(dead_code)]

pub mod words;

use flagtop::complex::{SimplicialComplex, VertexSet};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn set(vs: &[usize]) -> VertexSet {
    VertexSet::try_new(64, vs.iter().copied()).unwrap()
}

/// A complex on `1..=max_m` vertices generated by a handful of random faces.
pub fn random_complex(rng: &mut StdRng, min_m: usize, max_m: usize) -> SimplicialComplex {
    let m = rng.random_range(min_m..=max_m);
    let generators = rng.random_range(0..=m + 2);
    let faces: Vec<Vec<usize>> = (0..generators)
        .map(|_| (1..=m).filter(|_| rng.random_bool(0.45)).collect())
        .collect();
    SimplicialComplex::from_maximal_faces(m, faces).unwrap()
}

pub fn random_complexes(seed: u64, count: usize, min_m: usize, max_m: usize) -> Vec<SimplicialComplex> {
    let mut r = rng(seed);
    (0..count).map(|_| random_complex(&mut r, min_m, max_m)).collect()
}

/// Fixed complexes every module is checked against.
pub fn named_complexes() -> Vec<(&'static str, SimplicialComplex)> {
    vec![
        ("point", SimplicialComplex::simplex(1).unwrap()),
        ("two points", SimplicialComplex::discrete(2).unwrap()),
        ("three points", SimplicialComplex::discrete(3).unwrap()),
        ("boundary 3", SimplicialComplex::simplex_boundary(3).unwrap()),
        ("boundary 4", SimplicialComplex::simplex_boundary(4).unwrap()),
        ("square", SimplicialComplex::polygon(4).unwrap()),
        ("pentagon", SimplicialComplex::polygon(5).unwrap()),
        ("simplex 3", SimplicialComplex::simplex(3).unwrap()),
        (
            "two triangles",
            SimplicialComplex::from_maximal_faces(4, [vec![1, 2, 3], vec![2, 3, 4]]).unwrap(),
        ),
        (
            "hollow and filled",
            SimplicialComplex::from_maximal_faces(5, [vec![1, 2], vec![2, 3], vec![1, 3], vec![3, 4, 5]]).unwrap(),
        ),
    ]
}

/// Named complexes followed by `random` seeded random ones on at most `max_m` vertices.
pub fn test_complexes(random: usize, max_m: usize) -> Vec<SimplicialComplex> {
    let mut out: Vec<_> = named_complexes().into_iter().map(|(_, k)| k).collect();
    out.extend(random_complexes(0x5eed, random, 1, max_m));
    out
}

pub fn arb_complex(max_m: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_m).prop_flat_map(|m| {
        prop::collection::vec(0u64..(1u64 << m), 0..=m + 2).prop_map(move |gens| {
            let faces: Vec<Vec<usize>> = gens.iter().map(|&b| VertexSet::from_bits(b).to_vec()).collect();
            SimplicialComplex::from_maximal_faces(m, faces).unwrap()
        })
    })
}

/// Every subset of `{1..=m}` as a bitmask-backed set.
pub fn all_subsets(m: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..(1u64 << m)).map(VertexSet::from_bits)
}
