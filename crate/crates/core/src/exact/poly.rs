use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rat;
use crate::error::{Error, Result};

/// A commutative ℚ-algebra that polynomials can be evaluated in.
///
/// The receiver of `scalar_like` supplies context (the parent field, the
/// matrix size) for embedding a rational.
pub trait Algebra: Clone {
    fn scalar_like(&self, c: &Rat) -> Self;
    fn alg_add(&self, rhs: &Self) -> Self;
    fn alg_mul(&self, rhs: &Self) -> Self;
}

impl Algebra for Rat {
    fn scalar_like(&self, c: &Rat) -> Self {
        c.clone()
    }
    fn alg_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn alg_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Algebra for UPoly {
    fn scalar_like(&self, c: &Rat) -> Self {
        UPoly::constant(c.clone())
    }
    fn alg_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn alg_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

/// Dense univariate polynomial over ℚ; `coeffs[i]` is the coefficient of `x^i`.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Rat>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UPoly::new(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(Rat::one())
    }

    pub fn x() -> Self {
        UPoly::monomial(Rat::one(), 1)
    }

    pub fn constant(c: Rat) -> Self {
        UPoly::new(vec![c])
    }

    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        UPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the zero polynomial and nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Rat::is_one)
    }

    pub fn monic(&self) -> UPoly {
        match self.leading() {
            None => UPoly::zero(),
            Some(lc) => self.scale(&lc.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn scale(&self, c: &Rat) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> UPoly {
        let mut base = self.clone();
        let mut acc = UPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division over ℚ.
    pub fn div_rem(&self, divisor: &UPoly) -> Result<(UPoly, UPoly)> {
        let db = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lc_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((UPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + db] * &lc_inv;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    let t = &c * d;
                    rem[k + j] -= &t;
                }
            }
            quot[k] = c;
        }
        rem.truncate(db);
        Ok((UPoly::new(quot), UPoly::new(rem)))
    }

    pub fn rem(&self, divisor: &UPoly) -> Result<UPoly> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// `true` iff `divisor` divides `self` exactly.
    pub fn is_divisible_by(&self, divisor: &UPoly) -> bool {
        matches!(self.rem(divisor), Ok(r) if r.is_zero())
    }

    /// `self(inner)`.
    pub fn compose(&self, inner: &UPoly) -> UPoly {
        poly_eval(self, inner)
    }

    pub fn eval_rat(&self, point: &Rat) -> Rat {
        poly_eval(self, point)
    }

    /// The primitive integer polynomial proportional to `self`, with a
    /// positive leading coefficient. Empty for zero.
    pub fn integer_primitive(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        int_primitive(ints)
    }

    pub fn from_big_ints(coeffs: &[BigInt]) -> UPoly {
        UPoly::new(coeffs.iter().map(|c| Rat::from_int(c.clone())).collect())
    }

    /// Renders with descending powers, e.g. `x^4 - 10*x^2 + 1`. The output
    /// parses back to the same polynomial.
    pub fn fmt_with_var(&self, var: &str) -> String {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero());
        join_terms(terms, var)
    }

    /// Ascending powers, the form used for field elements: `3/5 + 4/5*θ`.
    pub fn fmt_ascending(&self, var: &str) -> String {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero());
        join_terms(terms, var)
    }
}

fn join_terms<'a>(terms: impl Iterator<Item = (usize, &'a Rat)>, var: &str) -> String {
    let mut out = String::new();
    for (k, c) in terms {
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        let power = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if k == 0 {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&power);
        } else {
            out.push_str(&format!("{abs}*{power}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with_var("x"))
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({self})")
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UPoly::new(out)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for UPoly {
            type Output = UPoly;
            fn $method(self, rhs: UPoly) -> UPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// Horner evaluation of `p` at `point` in any commutative ℚ-algebra.
pub fn poly_eval<A: Algebra>(p: &UPoly, point: &A) -> A {
    let mut coeffs = p.coeffs().iter().rev();
    let Some(lead) = coeffs.next() else {
        return point.scalar_like(&Rat::zero());
    };
    let mut acc = point.scalar_like(lead);
    for c in coeffs {
        acc = acc.alg_mul(point);
        if !c.is_zero() {
            acc = acc.alg_add(&point.scalar_like(c));
        }
    }
    acc
}

fn int_trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn int_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    int_trim(&mut v);
    let Some(lead) = v.last() else {
        return v;
    };
    let mut content = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if lead.is_negative() {
        content = -content;
    }
    v.iter().map(|c| c / &content).collect()
}

/// Pseudo-remainder of integer polynomials; `b` must be nonzero.
fn int_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    int_trim(&mut r);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let lr = r[r.len() - 1].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        int_trim(&mut r);
    }
    r
}

/// Monic gcd over ℚ via a primitive pseudo-remainder sequence on the
/// integerized inputs. `gcd(0, 0) = 0`.
pub fn poly_gcd(p: &UPoly, q: &UPoly) -> UPoly {
    if p.is_zero() {
        return q.monic();
    }
    if q.is_zero() {
        return p.monic();
    }
    let mut a = p.integer_primitive();
    let mut b = q.integer_primitive();
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = int_primitive(int_prem(&a, &b));
        a = b;
        b = r;
    }
    UPoly::from_big_ints(&a).monic()
}

/// `monic(p / gcd(p, p'))`: the product of the distinct irreducible factors.
pub fn squarefree_part(p: &UPoly) -> Result<UPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = poly_gcd(p, &p.derivative());
    let (q, r) = p.div_rem(&g)?;
    debug_assert!(r.is_zero());
    Ok(q.monic())
}
