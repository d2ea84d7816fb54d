//! Real moment-angle complexes and their homology.

use flagtop::homology::Coefficients;
use flagtop::macomplex::{build_real_ma, orbit_counts};
use flagtop::SimplicialComplex;

fn main() -> flagtop::Result<()> {
    let examples = [
        ("two points", SimplicialComplex::discrete(2)?),
        ("boundary(3)", SimplicialComplex::simplex_boundary(3)?),
        ("boundary(4)", SimplicialComplex::simplex_boundary(4)?),
        ("square", SimplicialComplex::polygon(4)?),
        ("pentagon", SimplicialComplex::polygon(5)?),
        ("three points", SimplicialComplex::discrete(3)?),
    ];
    for (name, k) in &examples {
        let model = build_real_ma(k)?;
        let h = model.homology(Coefficients::Integers)?;
        let groups: Vec<String> = (0..h.groups.len()).map(|i| h.describe(i)).collect();
        println!(
            "{name}: cells {:?}, orbits {:?}, H = ({})",
            model.cell_counts(),
            orbit_counts(k)?,
            groups.join(", ")
        );
    }
    Ok(())
}
