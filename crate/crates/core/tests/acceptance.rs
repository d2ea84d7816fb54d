//! Acceptance suite: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::Instant;

use common::words::{all_words, to_word, Family, Graph, RawWord};
use common::{all_subsets, random_complexes, test_complexes};
use flagtop::arrangement::{arrangement, in_complement, ArrangementField};
use flagtop::complex::{SimplicialComplex, VertexSet};
use flagtop::connectivity::{connectivity_report, ExtendedInt};
use flagtop::cubical::Cube;
use flagtop::facecat::{cubical_model, face_subcomplex};
use flagtop::graphprod::{GroupKind, Letter, Word};
use flagtop::homology::{Coefficients, Homology};
use flagtop::macomplex::{build_real_ma, ma_homology, orbit_counts, stabilizer, MACell};
use flagtop::sralg::{coproduct, hilbert_series, monomial_basis, multiply, CoalgebraBasisElement, GradingMode, Monomial};
use num_bigint::BigInt;
use rand::Rng;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn flagification() -> Check {
    for n in 3..=8 {
        let k = SimplicialComplex::simplex_boundary(n).unwrap();
        ensure(k.flagify() == SimplicialComplex::simplex(n).unwrap(), || format!("Fl(boundary {n}) is not the simplex"))?;
    }
    for m in 4..=10 {
        ensure(SimplicialComplex::polygon(m).unwrap().is_flag(), || format!("{m}-gon not flag"))?;
    }
    for (i, k) in random_complexes(101, 10, 1, 6).iter().enumerate() {
        let sd = k.barycentric_subdivision().unwrap();
        ensure(sd.is_flag() && sd.flagify() == sd, || format!("subdivision of random complex {i} not flag"))?;
    }
    Ok(())
}

fn moment_angle_spheres() -> Check {
    for (m, cells) in [(3, 26), (4, 80), (5, 242)] {
        let k = SimplicialComplex::simplex_boundary(m).unwrap();
        let model = build_real_ma(&k).unwrap();
        ensure(model.len() == cells, || format!("boundary {m}: {} cells, expected {cells}", model.len()))?;
        let h = model.homology(Coefficients::Integers).unwrap();
        ensure(h.same_groups(&Homology::sphere(m - 1, Coefficients::Integers)), || {
            format!("boundary {m}: homology {:?}", h.groups)
        })?;
    }
    Ok(())
}

fn torus() -> Check {
    let k = SimplicialComplex::polygon(4).unwrap();
    let model = build_real_ma(&k).unwrap();
    ensure(model.cell_counts() == vec![16, 32, 16], || format!("cells {:?}", model.cell_counts()))?;
    let h = model.homology(Coefficients::Integers).unwrap();
    ensure(h.betti_numbers() == vec![1, 2, 1], || format!("betti {:?}", h.betti_numbers()))?;
    ensure(!h.has_torsion(), || "torsion present".into())?;
    ensure(h.euler_characteristic() == 0 && model.euler_characteristic() == 0, || "euler characteristic".into())
}

fn connectivity() -> Check {
    for (i, k) in random_complexes(404, 20, 1, 6).iter().enumerate() {
        let report = connectivity_report(k);
        let h = ma_homology(k, Coefficients::Integers).unwrap();
        let ok = match report.d_prime(GroupKind::Cyclic2) {
            ExtendedInt::Infinite => h.reduced_vanishes_through(h.groups.len()),
            ExtendedInt::Finite(d) if d < 0 => true,
            ExtendedInt::Finite(d) => h.reduced_vanishes_through(d as usize),
        };
        ensure(ok, || format!("random complex {i}: d' = {}, homology {:?}", report.c_prime, h.groups))?;
    }
    Ok(())
}

/// Checks that `reduce` (and hence `equal`) partitions `words` exactly as the oracle does.
fn oracle_agrees(graph: &Graph, family: Family, words: &[RawWord]) -> Check {
    let g = graph.product(family);
    let mut key_to_reduced: HashMap<RawWord, Word> = HashMap::new();
    let mut reduced_to_key: HashMap<Word, RawWord> = HashMap::new();
    let mut representative: HashMap<RawWord, Word> = HashMap::new();
    let mut previous: Option<(RawWord, Word)> = None;
    for raw in words {
        let key = graph.key(raw, family);
        let w = to_word(raw, family);
        let reduced = g.reduce(&w).unwrap();
        let clash = || format!("edges {:?}, word {w}", graph.edges());
        ensure(*key_to_reduced.entry(key.clone()).or_insert_with(|| reduced.clone()) == reduced, clash)?;
        ensure(*reduced_to_key.entry(reduced.clone()).or_insert_with(|| key.clone()) == key, clash)?;
        let rep = representative.entry(key.clone()).or_insert_with(|| w.clone());
        ensure(g.equal(&w, rep).unwrap(), clash)?;
        if let Some((prev_key, prev)) = &previous {
            ensure(g.equal(&w, prev).unwrap() == (*prev_key == key), clash)?;
        }
        previous = Some((key, w));
    }
    Ok(())
}

fn word_oracle() -> Check {
    let artin: Vec<Vec<RawWord>> = (0..=4).map(|m| all_words(m, 5, Family::Artin)).collect();
    let coxeter: Vec<Vec<RawWord>> = (0..=4).map(|m| all_words(m, 6, Family::Coxeter)).collect();
    for m in 0..=4 {
        for graph in Graph::all(m) {
            oracle_agrees(&graph, Family::Artin, &artin[m])?;
            oracle_agrees(&graph, Family::Coxeter, &coxeter[m])?;
        }
    }
    Ok(())
}

fn complete_coxeter() -> Check {
    for m in 2..=4 {
        let graph = Graph::complete(m);
        let g = graph.product(Family::Coxeter);
        let forms: BTreeSet<Word> =
            all_words(m, m + 2, Family::Coxeter).iter().map(|w| g.reduce(&to_word(w, Family::Coxeter)).unwrap()).collect();
        ensure(forms.len() == 1 << m, || format!("K_{m}: {} normal forms", forms.len()))?;
    }
    Ok(())
}

fn flag_blocks() -> Check {
    let mut rng = common::rng(707);
    for m in 4..=7 {
        let k = SimplicialComplex::polygon(m).unwrap();
        let g = flagtop::graphprod::GraphProduct::new(GroupKind::Integer, &k);
        for _ in 0..1000 {
            let len = rng.random_range(0..=16);
            let w = Word::new(
                (0..len)
                    .map(|_| {
                        let e = rng.random_range(1..=3) * if rng.random_bool(0.5) { 1 } else { -1 };
                        Letter::power(rng.random_range(1..=m), e)
                    })
                    .collect(),
            );
            let blocks = g.cartier_foata_blocks(&w).unwrap();
            for b in &blocks {
                ensure(k.contains(b.support()), || format!("{m}-gon: block {b} of {w} is not a face"))?;
            }
            let product = blocks.iter().fold(Word::identity(), |acc, b| acc.concat(b));
            ensure(g.equal(&product, &w).unwrap(), || format!("{m}-gon: blocks of {w} multiply wrongly"))?;
        }
    }
    Ok(())
}

fn hilbert() -> Check {
    let mut complexes = vec![
        SimplicialComplex::simplex_boundary(3).unwrap(),
        SimplicialComplex::simplex_boundary(4).unwrap(),
        SimplicialComplex::polygon(4).unwrap(),
    ];
    complexes.extend(random_complexes(808, 10, 1, 5));
    for (i, k) in complexes.iter().enumerate() {
        for mode in GradingMode::ALL {
            let series = hilbert_series(k, mode);
            for d in 0..=6 {
                let count = monomial_basis(k, mode, d).len();
                ensure(series.coefficient(d) == BigInt::from(count), || {
                    format!("complex {i}, {mode:?}, degree {d}: series {} vs {count}", series.coefficient(d))
                })?;
            }
        }
    }
    let ext = hilbert_series(&complexes[0], GradingMode::Exterior);
    let expected: Vec<BigInt> = [1, 3, 3].map(BigInt::from).to_vec();
    ensure(ext.denominator_power == 0 && ext.numerator == expected, || format!("exterior series {ext}"))
}

type Tensor = BTreeMap<Vec<Monomial>, i64>;

fn normalise(t: Tensor, mode: GradingMode) -> Tensor {
    t.into_iter()
        .map(|(k, c)| (k, if mode == GradingMode::Real { c.rem_euclid(2) } else { c }))
        .filter(|&(_, c)| c != 0)
        .collect()
}

fn coalgebra() -> Check {
    let complexes = [
        SimplicialComplex::simplex_boundary(3).unwrap(),
        SimplicialComplex::simplex_boundary(4).unwrap(),
        SimplicialComplex::polygon(4).unwrap(),
        SimplicialComplex::from_maximal_faces(4, [vec![1, 2, 3], vec![3, 4]]).unwrap(),
    ];
    for (i, k) in complexes.iter().enumerate() {
        for mode in GradingMode::ALL {
            for d in 0..=4 {
                for z in monomial_basis(k, mode, d) {
                    let delta = coproduct(&CoalgebraBasisElement(z.clone()), mode);
                    let mut left = Tensor::new();
                    let mut right = Tensor::new();
                    for (s, a, b) in &delta {
                        for (t, a1, a2) in coproduct(a, mode) {
                            *left.entry(vec![a1.0, a2.0, b.0.clone()]).or_default() += (s * t) as i64;
                        }
                        for (t, b1, b2) in coproduct(b, mode) {
                            *right.entry(vec![a.0.clone(), b1.0, b2.0]).or_default() += (s * t) as i64;
                        }
                    }
                    ensure(normalise(left, mode) == normalise(right, mode), || {
                        format!("complex {i}, {mode:?}: coassociativity fails on {z}")
                    })?;
                    let pairing: HashMap<(Monomial, Monomial), i8> =
                        delta.into_iter().map(|(s, a, b)| ((a.0, b.0), s)).collect();
                    for da in 0..=d {
                        for a in monomial_basis(k, mode, da) {
                            for b in monomial_basis(k, mode, d - da) {
                                let lhs = pairing.get(&(a.clone(), b.clone())).copied().unwrap_or(0);
                                let rhs = match multiply(&a, &b, k, mode) {
                                    Some((s, p)) if p == z => s,
                                    _ => 0,
                                };
                                ensure(lhs == rhs, || {
                                    format!("complex {i}, {mode:?}: <d({z}), {a} x {b}> = {lhs}, <{z}, ab> = {rhs}")
                                })?;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn face_category() -> Check {
    for m in 2..=6 {
        let model = cubical_model(&SimplicialComplex::simplex_boundary(m).unwrap());
        let expected = 3usize.pow(m as u32) - (1 << m);
        ensure(model.len() == expected, || format!("boundary {m}: {} cells", model.len()))?;
    }
    for (i, k) in test_complexes(10, 6).iter().enumerate() {
        let model = cubical_model(k);
        ensure(model.euler_characteristic() == 1, || format!("complex {i}: euler characteristic"))?;
        let h = model.homology(Coefficients::Integers).unwrap();
        ensure(h.trimmed() == point_groups(), || {
            format!("complex {i}: homology {:?}", h.groups)
        })?;
        let faces: Vec<VertexSet> = k.faces().filter(|f| !f.is_empty()).collect();
        for &s in &faces {
            let ps = face_subcomplex(k, s).unwrap();
            for &t in &faces {
                let pt = face_subcomplex(k, t).unwrap();
                let meet: BTreeSet<_> = ps.intersection(&pt).copied().collect();
                let union = s.union(t);
                let expected = if k.contains(union) { face_subcomplex(k, union).unwrap() } else { BTreeSet::new() };
                ensure(meet == expected, || format!("complex {i}: panels {s} and {t}"))?;
            }
        }
    }
    Ok(())
}

fn point_groups() -> Vec<flagtop::homology::HomologyGroup> {
    vec![flagtop::homology::HomologyGroup::free(1)]
}

/// Corner points of a cell in `{±1}^m`, as bitmasks of the `+1` coordinates.
fn corners(cell: &MACell) -> BTreeSet<u64> {
    cell.face().subsets().map(|s| s.union(cell.plus()).bits()).collect()
}

fn stabilizers() -> Check {
    for (i, k) in test_complexes(6, 6).iter().enumerate() {
        let m = k.vertex_count();
        let model = build_real_ma(k).unwrap();
        let mut visited: BTreeSet<MACell> = BTreeSet::new();
        let mut orbits = vec![0usize; model.cell_counts().len()];
        for cell in model.iter() {
            let points = corners(cell);
            let fixed: Vec<usize> = (1..=m)
                .filter(|&v| points.iter().map(|p| p ^ (1 << (v - 1))).collect::<BTreeSet<_>>() == points)
                .collect();
            ensure(stabilizer(cell).to_vec() == fixed && cell.face().to_vec() == fixed, || {
                format!("complex {i}: stabiliser of {}", cell.pattern(m))
            })?;
            if visited.insert(*cell) {
                orbits[cell.dimension()] += 1;
                let mut stack = vec![*cell];
                while let Some(c) = stack.pop() {
                    for v in 1..=m {
                        let next = c.flip(v);
                        if visited.insert(next) {
                            stack.push(next);
                        }
                    }
                }
            }
        }
        let mut by_size = vec![0usize; orbits.len()];
        for f in k.faces() {
            by_size[f.len()] += 1;
        }
        let counted = orbit_counts(k).unwrap();
        ensure(orbits == by_size && counted == by_size, || format!("complex {i}: orbits {orbits:?} {counted:?} vs {by_size:?}"))?;
    }
    Ok(())
}

fn arrangements() -> Check {
    for m in 3..=5 {
        let a = arrangement(&SimplicialComplex::discrete(m).unwrap(), ArrangementField::Complex);
        let pairs: Vec<VertexSet> = all_subsets(m).filter(|s| s.len() == 2).collect();
        ensure(a.generators.iter().copied().collect::<BTreeSet<_>>() == pairs.into_iter().collect(), || {
            format!("discrete {m}: generators {:?}", a.generators)
        })?;
    }
    for m in 2..=6 {
        let a = arrangement(&SimplicialComplex::simplex_boundary(m).unwrap(), ArrangementField::Real);
        ensure(a.generators == vec![VertexSet::full(m)], || format!("boundary {m}: generators {:?}", a.generators))?;
    }
    for (i, k) in test_complexes(10, 6).iter().enumerate() {
        let m = k.vertex_count();
        let non_faces: Vec<VertexSet> = all_subsets(m).filter(|w| !k.contains(*w)).collect();
        for s in all_subsets(m) {
            let on_subspace = non_faces.iter().any(|w| w.is_subset(s));
            ensure(in_complement(k, s) == !on_subspace, || format!("complex {i}: zero set {s}"))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("flagification", flagification),
        ("moment-angle spheres", moment_angle_spheres),
        ("torus", torus),
        ("connectivity", connectivity),
        ("word-problem oracle", word_oracle),
        ("complete-graph Coxeter", complete_coxeter),
        ("flag block property", flag_blocks),
        ("Hilbert series", hilbert),
        ("coalgebra", coalgebra),
        ("face category model", face_category),
        ("stabilisers and orbits", stabilizers),
        ("arrangements", arrangements),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({secs:.2}s)", n + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.2}s): {e}", n + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
