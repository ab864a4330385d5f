//! Grid images of polynomial maps satisfy no low-degree relation, while the
//! rational points of the unit circle do.
//!
//!     cargo run --example density_probe

use fieldlab::cli::density_points;
use fieldlab::criteria::{density_rank, no_low_degree_relation};
use fieldlab::parse::{parse_poly, parse_poly_list};
use fieldlab::{NumberField, Rat};

fn main() -> fieldlab::Result<()> {
    let hs = parse_poly_list("x^2; x^3 + x")?;
    let points = density_points(&hs, 10);
    for d in 1..=4 {
        println!("{} grid points, degree {d}: no relation {}", points.len(), no_low_degree_relation(&points, d)?);
    }

    let circle: Vec<Vec<Rat>> = (1..=20i64)
        .map(|t| vec![Rat::new(1 - t * t, 1 + t * t), Rat::new(2 * t, 1 + t * t)])
        .collect();
    println!("unit circle, degree 2: no relation {}", no_low_degree_relation(&circle, 2)?);

    // the power basis spans a 2-dimensional subspace over E of E^2
    let e = NumberField::new(&parse_poly("x^2 - 5")?)?;
    let theta = e.generator();
    let vectors = vec![vec![e.one(), e.one()], vec![theta.clone(), -&theta]];
    println!("rank over E of the conjugate vectors: {}", density_rank(&vectors)?);
    Ok(())
}
