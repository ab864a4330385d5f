//! Normal-basis generators in Q(ζ5) that stay normal after squaring.
//!
//!     cargo run --example normal_basis

use fieldlab::criteria::{conjugate_rank, is_normal_generator};
use fieldlab::galois::{galois_group, GaloisOptions};
use fieldlab::parse::{parse_poly, parse_poly_list};
use fieldlab::search::{search_normal, SearchConfig};
use fieldlab::NumberField;

fn main() -> fieldlab::Result<()> {
    let e = NumberField::new(&parse_poly("x^4 + x^3 + x^2 + x + 1")?)?;
    let group = galois_group(&e, &GaloisOptions::default())?;

    // θ is normal; θ + θ⁴ lies in the real quadratic subfield and is not
    let theta = e.generator();
    for a in [theta.clone(), &theta + &theta.pow(4)] {
        let report = is_normal_generator(&group, &a)?;
        println!("{a}: normal {} (conjugate rank {})", report.is_normal, conjugate_rank(&group, &a)?);
    }

    let set = parse_poly_list("x; x^2")?;
    for w in search_normal(&e, &SearchConfig::new(set, 5))? {
        println!("a = {}", w.a);
        for c in &w.per_h {
            println!("    {}: det = {}", c.h, c.normal_det.as_ref().expect("normal search"));
        }
        let conj = group.conjugate_vector(&w.a)?;
        let shown: Vec<String> = conj.iter().map(|c| c.to_string()).collect();
        println!("    basis {{{}}}", shown.join(", "));
    }
    Ok(())
}
