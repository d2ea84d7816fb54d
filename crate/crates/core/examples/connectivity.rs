//! Connectivity bounds from missing faces, checked against moment-angle homology.

use flagtop::connectivity::{connectivity_report, pair_connectivity, ExtendedInt};
use flagtop::graphprod::GroupKind;
use flagtop::homology::Coefficients;
use flagtop::macomplex::ma_homology;
use flagtop::SimplicialComplex;

fn main() -> flagtop::Result<()> {
    let complexes = [
        ("boundary(3)", SimplicialComplex::simplex_boundary(3)?),
        ("boundary(5)", SimplicialComplex::simplex_boundary(5)?),
        ("square", SimplicialComplex::polygon(4)?),
        ("2-skeleton of the 4-simplex", SimplicialComplex::simplex(5)?.skeleton(2)),
    ];
    for (name, k) in &complexes {
        let r = connectivity_report(k);
        let d: Vec<String> = GroupKind::ALL.iter().map(|&g| format!("{}={}", g.symbol(), r.d_prime(g))).collect();
        let reduced = ma_homology(k, Coefficients::Integers)?.reduced_betti_numbers();
        println!("{name}: c = {}, c' = {}, d' {}, reduced betti {:?}", r.c, r.c_prime, d.join(" "), reduced);
        if let ExtendedInt::Finite(n) = r.d_prime(GroupKind::Cyclic2) {
            println!("  vanishes through degree {n}: {}", reduced.iter().take(n as usize + 1).all(|&b| b == 0));
        }
    }

    let k = SimplicialComplex::simplex_boundary(4)?;
    let p = pair_connectivity(&k, &k.flagify())?;
    println!("c(K, Fl K) for boundary(4) = {}, d for T = {}", p.c, p.d(GroupKind::Circle));
    Ok(())
}
