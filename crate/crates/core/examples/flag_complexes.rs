//! Missing faces, flagification and barycentric subdivision.
//!
//! ```text
//! cargo run --example flag_complexes
//! ```

use flagtop::SimplicialComplex;

fn show(name: &str, k: &SimplicialComplex) {
    let missing = k.missing_faces();
    let sizes: Vec<usize> = missing.iter().map(|w| w.len()).collect();
    if missing.len() <= 8 {
        let shown: Vec<String> = missing.iter().map(ToString::to_string).collect();
        println!("{name}: f = {:?}, flag = {}, missing = [{}]", k.f_vector(), k.is_flag(), shown.join(" "));
    } else {
        let largest = sizes.iter().max().unwrap();
        println!("{name}: f = {:?}, flag = {}, {} missing faces, largest has {largest} vertices", k.f_vector(), k.is_flag(), missing.len());
    }
}

fn main() -> flagtop::Result<()> {
    let hollow = SimplicialComplex::simplex_boundary(4)?;
    show("boundary of the 3-simplex", &hollow);
    show("its flagification", &hollow.flagify());

    let pentagon = SimplicialComplex::polygon(5)?;
    show("pentagon", &pentagon);

    // Two triangles glued on an edge, plus an empty triangle hanging off vertex 4.
    let k = SimplicialComplex::from_maximal_faces(6, [vec![1, 2, 3], vec![2, 3, 4], vec![4, 5], vec![5, 6], vec![4, 6]])?;
    show("K", &k);
    let sd = k.barycentric_subdivision()?;
    show("K'", &sd);
    Ok(())
}
