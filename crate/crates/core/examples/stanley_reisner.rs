//! Hilbert series, bases, products and coproducts in the three gradings.

use flagtop::sralg::{coalgebra_basis, coproduct, hilbert_series, monomial_basis, multiply, GradingMode, Monomial};
use flagtop::SimplicialComplex;

fn main() -> flagtop::Result<()> {
    let k = SimplicialComplex::simplex_boundary(3)?;
    for mode in GradingMode::ALL {
        let series = hilbert_series(&k, mode);
        let coeffs: Vec<String> = series.expand(6).iter().map(ToString::to_string).collect();
        println!("{mode:?}: {series}  ->  {}", coeffs.join(" "));
    }

    let degree2: Vec<String> = monomial_basis(&k, GradingMode::Real, 2).iter().map(ToString::to_string).collect();
    println!("real basis in degree 2: {}", degree2.join(", "));

    let (a, b) = (Monomial::from_vertices([2]), Monomial::from_vertices([1]));
    for mode in [GradingMode::Complex, GradingMode::Exterior] {
        match multiply(&a, &b, &k, mode) {
            Some((sign, p)) => println!("{mode:?}: ({a})({b}) = {sign} * {p}"),
            None => println!("{mode:?}: ({a})({b}) = 0"),
        }
    }
    let full = Monomial::from_vertices([1, 2, 3]);
    println!("({full})({b}) is zero: {}", multiply(&full, &b, &k, GradingMode::Complex).is_none());

    let z = &coalgebra_basis(&k, GradingMode::Exterior, 2)[0];
    for (sign, left, right) in coproduct(z, GradingMode::Exterior) {
        println!("  delta({z}) contains {sign:+} {left} (x) {right}");
    }
    Ok(())
}
