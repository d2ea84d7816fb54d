//! Smith normal form and integral homology of a small chain complex.

use flagtop::homology::{rank_mod2, smith_normal_form, ChainComplex, Coefficients, IntMatrix};

fn main() -> flagtop::Result<()> {
    let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let snf = smith_normal_form(&a);
    let diag: Vec<String> = snf.diagonal.iter().map(ToString::to_string).collect();
    println!("SNF diagonal: {} (rank {}, rank mod 2 {})", diag.join(" "), snf.rank(), rank_mod2(&a));

    // Minimal cell structure on the real projective plane: one cell per dimension.
    let rp2 = ChainComplex::new(vec![1, 1, 1], vec![IntMatrix::from_rows(&[vec![0]]), IntMatrix::from_rows(&[vec![2]])])?;
    for coefficients in [Coefficients::Integers, Coefficients::Mod2] {
        let h = rp2.homology(coefficients);
        print!("{h}");
        println!("euler characteristic {}\n", h.euler_characteristic());
    }
    Ok(())
}
