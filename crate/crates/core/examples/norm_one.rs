//! Norm-one primitive elements, with and without the normal-basis condition.
//!
//!     cargo run --example norm_one

use fieldlab::parse::parse_poly;
use fieldlab::search::{norm_one_normal, norm_one_primitive, SearchOptions};
use fieldlab::NumberField;

fn main() -> fieldlab::Result<()> {
    let opts = SearchOptions::default();
    for f in ["x^2 + 1", "x^3 - 2"] {
        let e = NumberField::new(&parse_poly(f)?)?;
        println!("{f}:");
        for w in norm_one_primitive(&e, 5, &opts)? {
            println!("    a = {}   from b = {}", w.a, w.base.expect("constructed from b"));
        }
    }
    let e = NumberField::new(&parse_poly("x^4 - 10*x^2 + 1")?)?;
    println!("x^4 - 10*x^2 + 1, normal as well:");
    for w in norm_one_normal(&e, 3, &opts)? {
        println!("    a = {}", w.a);
    }
    Ok(())
}
