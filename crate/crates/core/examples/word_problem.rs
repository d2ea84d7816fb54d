//! Normal forms, wordlength and Cartier-Foata blocks in graph products.

use flagtop::graphprod::{GraphProduct, GroupKind};
use flagtop::SimplicialComplex;

fn main() -> flagtop::Result<()> {
    let pentagon = SimplicialComplex::polygon(5)?;
    for (kind, text) in [
        (GroupKind::Cyclic2, "a1 a2 a1 a3 a3 a5 a1"),
        (GroupKind::Integer, "v1^2 v3^1 v2^-1 v1^-2 v4^1 v3^-1"),
        (GroupKind::Circle, "t1@1/2 t2@1/3 t1@1/2 t4@3/4 t3@1/4"),
    ] {
        let g = GraphProduct::new(kind, &pentagon);
        let w = g.parse_word(text)?;
        let blocks: Vec<String> = g.cartier_foata_blocks(&w)?.iter().map(|b| format!("[{b}]")).collect();
        println!("{} group of the pentagon", kind.family());
        println!("  {w}  =  {}  (length {})", g.reduce(&w)?, g.wordlength(&w)?);
        println!("  blocks {}", blocks.join(" "));
        println!("  in the commutator subgroup: {}", g.in_commutator_subgroup(&w)?);
    }

    let square = SimplicialComplex::polygon(4)?;
    let g = GraphProduct::new(GroupKind::Integer, &square);
    let (u, v) = (g.parse_word("v1 v2 v1^-1 v2^-1")?, g.parse_word("v1 v3 v1^-1 v3^-1")?);
    println!("square: [v1,v2] trivial: {}, [v1,v3] trivial: {}", g.reduce(&u)?.is_empty(), g.reduce(&v)?.is_empty());
    Ok(())
}
