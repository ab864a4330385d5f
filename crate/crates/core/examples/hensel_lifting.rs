//! Split primes, p-adic roots and rational reconstruction.
//!
//!     cargo run --example hensel_lifting

use fieldlab::exact::rational_reconstruct;
use fieldlab::galois::{find_split_prime, hensel_lift};
use fieldlab::parse::parse_poly;
use fieldlab::NumberField;
use num_bigint::BigInt;

fn main() -> fieldlab::Result<()> {
    let e = NumberField::new(&parse_poly("x^4 + 1")?)?;
    let data = find_split_prime(&e, 1000)?;
    println!("x^4 + 1 splits mod {} with roots {:?}", data.p, data.lifted_roots);

    let lifted = hensel_lift(&e, &data, 8);
    println!("lifted to {}^{} = {}", lifted.p, lifted.precision, lifted.modulus());
    for r in &lifted.lifted_roots {
        println!("    {r}");
    }

    // 3/7 from its image modulo 1000003
    let m = BigInt::from(1_000_003);
    let residue = BigInt::from(3) * BigInt::from(7).modinv(&m).expect("invertible") % &m;
    let q = rational_reconstruct(&residue, &m, &BigInt::from(700))?;
    println!("{residue} mod {m} reconstructs to {}", q.expect("in range"));
    Ok(())
}
