//! Coordinate subspace arrangements and membership in their complements.

use flagtop::arrangement::{arrangement, complement_homology_real, in_complement, ArrangementField};
use flagtop::{SimplicialComplex, VertexSet};

fn main() -> flagtop::Result<()> {
    let k = SimplicialComplex::from_maximal_faces(4, [vec![1, 2], vec![2, 3], vec![3, 1], vec![3, 4]])?;
    for field in [ArrangementField::Real, ArrangementField::Complex, ArrangementField::Exterior] {
        let a = arrangement(&k, field);
        let gens: Vec<String> = a.generators.iter().map(|&w| format!("Y{w} (codim {})", a.codimension(w))).collect();
        println!("{field}: {}", gens.join(", "));
    }

    for zeros in [vec![], vec![3], vec![1, 2], vec![1, 4], vec![1, 2, 3]] {
        let s = VertexSet::try_new(4, zeros)?;
        println!("zero set {s}: in complement = {}", in_complement(&k, s));
    }
    print!("real complement:\n{}", complement_homology_real(&k)?);
    Ok(())
}
