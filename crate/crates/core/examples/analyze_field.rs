//! Arithmetic, minimal polynomials, norm and trace in Q(√2, √3).
//!
//!     cargo run --example analyze_field

use fieldlab::criteria::{is_primitive, is_separable_ext};
use fieldlab::parse::parse_poly;
use fieldlab::repr::{minpoly, norm, trace};
use fieldlab::{NumberField, Rat};

fn main() -> fieldlab::Result<()> {
    let e = NumberField::new(&parse_poly("x^4 - 10*x^2 + 1")?)?;
    println!("E = Q[x]/({}), certificate {:?}", e.minpoly(), e.certificate());

    let theta = e.generator();
    // √2 = (θ³ − 9θ)/2 when θ = √2 + √3
    let sqrt2 = e.element(vec![Rat::zero(), Rat::new(-9, 2), Rat::zero(), Rat::new(1, 2)]);
    println!("(√2)^2 = {}", &sqrt2 * &sqrt2);

    for a in [theta.clone(), sqrt2.clone(), &theta + &e.one()] {
        let report = is_primitive(&e, &a)?;
        println!(
            "a = {a}\n  minpoly {}\n  primitive {}  norm {}  trace {}",
            minpoly(&a)?,
            report.is_primitive,
            norm(&a),
            trace(&a)
        );
    }

    let inv = theta.inv()?;
    println!("1/θ = {inv}, check θ·(1/θ) = {}", &theta * &inv);

    let sep = is_separable_ext(&e);
    println!("trace form determinant {} (separable: {})", sep.gram_determinant, sep.separable);
    Ok(())
}
