//! Rational points on x² + bxy + cy² = 1 through norm-one elements.
//!
//!     cargo run --example pell [b] [c] [count]

use fieldlab::search::{pell_form, pell_solutions, SearchOptions};
use fieldlab::{Error, Rat};

fn main() -> fieldlab::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, default: &str| -> Rat { args.get(i).map_or(default, String::as_str).parse().expect("rational") };
    let (b, c) = (arg(0, "0"), arg(1, "-2"));
    let count = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(8);

    match pell_solutions(&b, &c, count, &SearchOptions::default()) {
        Ok(sols) => {
            println!("x^2 + ({b})xy + ({c})y^2 = 1");
            for s in sols {
                println!("    ({}, {})  value {}", s.x, s.y, pell_form(&b, &c, &s));
            }
        }
        Err(Error::NotAField { witness }) => println!("b^2 - 4c = ({witness})^2, no field to search in"),
        Err(e) => return Err(e),
    }
    Ok(())
}
