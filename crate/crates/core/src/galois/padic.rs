//! Split primes and Newton lifting of simple roots to `p^k` precision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{is_prime, ModPoly};
use crate::field::NumberField;

/// A prime at which the integral model of `f` splits into distinct linear
/// factors, with its roots known modulo `p^precision`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPrimeData {
    pub p: u64,
    /// Roots of the integral model, in increasing order of their residue mod `p`.
    pub lifted_roots: Vec<BigInt>,
    pub precision: u32,
}

impl SplitPrimeData {
    pub fn modulus(&self) -> BigInt {
        num_traits::pow(BigInt::from(self.p), self.precision as usize)
    }
}

/// Integer coefficients of the monic integral model of the defining polynomial.
pub(crate) fn model_coeffs(field: &NumberField) -> Vec<BigInt> {
    let (_, g) = field.integral_model();
    g.coeffs()
        .iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.numer().clone()
        })
        .collect()
}

/// Smallest prime `p ≤ bound` at which the integral model is squarefree and
/// splits completely modulo `p`.
pub fn find_split_prime(field: &NumberField, bound: u64) -> Result<SplitPrimeData> {
    find_split_prime_from(field, 2, bound)
}

/// As [`find_split_prime`], considering only primes `p ≥ start`.
pub fn find_split_prime_from(field: &NumberField, start: u64, bound: u64) -> Result<SplitPrimeData> {
    let (_, g) = field.integral_model();
    for p in (start.max(2)..=bound).filter(|&p| is_prime(p)) {
        let Some(gp) = ModPoly::from_upoly(g, p) else {
            continue;
        };
        if gp.degree() != g.degree() || !gp.splits_completely() {
            continue;
        }
        let roots = gp.roots_brute_force();
        debug_assert_eq!(roots.len(), field.degree());
        return Ok(SplitPrimeData {
            p,
            lifted_roots: roots.into_iter().map(BigInt::from).collect(),
            precision: 1,
        });
    }
    Err(Error::NoSplitPrimeFound { bound })
}

fn eval_mod(coeffs: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn derivative(coeffs: &[BigInt]) -> Vec<BigInt> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect()
}

/// Inverse of `a` modulo `m`, `None` when they are not coprime.
pub fn inv_mod_big(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Newton iteration `r ← r − g(r)/g'(r)`, doubling the precision each step
/// until it reaches `target_k`.
pub fn hensel_lift(field: &NumberField, data: &SplitPrimeData, target_k: u32) -> SplitPrimeData {
    if data.precision >= target_k {
        return data.clone();
    }
    let g = model_coeffs(field);
    let dg = derivative(&g);
    let p = BigInt::from(data.p);
    let mut k = data.precision;
    let mut roots = data.lifted_roots.clone();
    while k < target_k {
        let next = (2 * k).min(target_k);
        let m = num_traits::pow(p.clone(), next as usize);
        for r in roots.iter_mut() {
            let value = eval_mod(&g, r, &m);
            let slope = eval_mod(&dg, r, &m);
            let inv = inv_mod_big(&slope, &m).expect("simple root: g'(r) is a unit mod p");
            *r = (&*r - value * inv).mod_floor(&m);
        }
        k = next;
    }
    SplitPrimeData {
        p: data.p,
        lifted_roots: roots,
        precision: k,
    }
}
