//! The cubical model of `B cat(K)` inside the unit cube.

use flagtop::facecat::{chain_count, cubical_model, face_subcomplex, object_count};
use flagtop::homology::Coefficients;
use flagtop::{SimplicialComplex, VertexSet};

fn main() -> flagtop::Result<()> {
    for m in 2..=5 {
        let k = SimplicialComplex::simplex_boundary(m)?;
        let model = cubical_model(&k);
        println!(
            "boundary({m}): {} objects, cells per dimension {:?} ({} total), chi = {}",
            object_count(&k),
            model.cell_counts(),
            model.len(),
            model.euler_characteristic()
        );
    }

    let square = SimplicialComplex::polygon(4)?;
    let nerve: Vec<String> = (0..3).map(|n| chain_count(&square, n).to_string()).collect();
    println!("square: nerve simplices {}", nerve.join(", "));
    print!("{}", cubical_model(&square).homology(Coefficients::Integers)?);

    let edge = VertexSet::try_new(4, [1, 2])?;
    for cell in face_subcomplex(&square, edge)? {
        println!("  panel of {edge}: {} <= {}", cell.lower(), cell.upper());
    }
    Ok(())
}
