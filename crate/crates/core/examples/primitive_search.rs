//! Elements a for which x, x² and x³ + x all give primitive elements.
//!
//!     cargo run --example primitive_search [poly] [count]

use fieldlab::parse::{parse_poly, parse_poly_list};
use fieldlab::search::{distinct_mod_scalars, search_primitive, SearchConfig};
use fieldlab::NumberField;

fn main() -> fieldlab::Result<()> {
    let mut args = std::env::args().skip(1);
    let f = args.next().unwrap_or_else(|| "x^3 - x - 1".into());
    let count = args.next().and_then(|s| s.parse().ok()).unwrap_or(10);

    let e = NumberField::new(&parse_poly(&f)?)?;
    let set = parse_poly_list("x; x^2; x^3 + x")?;
    let found = search_primitive(&e, &SearchConfig::new(set, count))?;
    for w in &found {
        let degrees: Vec<String> = w.per_h.iter().map(|c| format!("{} -> {}", c.h, c.minpoly)).collect();
        println!("#{:<4} a = {}\n       {}", w.stream_index, w.a, degrees.join("; "));
    }
    let elems: Vec<_> = found.iter().map(|w| w.a.clone()).collect();
    println!("pairwise distinct modulo Q^x: {}", distinct_mod_scalars(&elems));
    Ok(())
}
