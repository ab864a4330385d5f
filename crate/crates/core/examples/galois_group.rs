//! Automorphism groups and Galois verdicts of a few fields.
//!
//!     cargo run --example galois_group

use fieldlab::criteria::galois_verdict;
use fieldlab::galois::{galois_group, GaloisOptions};
use fieldlab::parse::parse_poly;
use fieldlab::NumberField;

fn main() -> fieldlab::Result<()> {
    let opts = GaloisOptions::default();
    for f in ["x^2 + 1", "x^3 - 2", "x^3 - x - 1", "x^4 + x^3 + x^2 + x + 1", "x^4 + 1"] {
        let e = NumberField::new(&parse_poly(f)?)?;
        let v = galois_verdict(&e, &opts)?;
        println!("{f}: {} automorphisms, Galois {}", v.automorphisms.automorphisms.len(), v.is_galois);
        for s in &v.automorphisms.automorphisms {
            println!("    {s}");
        }
        if v.is_galois {
            let g = galois_group(&e, &opts)?;
            let orders: Vec<usize> = (0..g.order()).map(|i| g.element_order(i)).collect();
            println!("    element orders {orders:?}, abelian {}", g.is_abelian());
            for row in g.table() {
                println!("    {row:?}");
            }
        }
    }
    Ok(())
}
