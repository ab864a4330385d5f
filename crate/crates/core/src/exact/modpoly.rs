use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::UPoly;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse modulo a prime; `a` must be nonzero mod `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Reduces a rational `num/den` mod `p`, `None` if `p` divides `den`.
pub fn reduce_rational(num: &BigInt, den: &BigInt, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let d = den.mod_floor(&pb).to_u64().unwrap();
    if d == 0 {
        return None;
    }
    let n = num.mod_floor(&pb).to_u64().unwrap();
    Some(mul_mod(n, inv_mod(d, p), p))
}

/// Dense polynomial over the prime field with `p` elements, `p < 2^62`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        assert!(p >= 2 && p < (1 << 62), "modulus out of range");
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    /// Reduction of a rational polynomial, `None` when `p` divides a denominator.
    pub fn from_upoly(f: &UPoly, p: u64) -> Option<Self> {
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| reduce_rational(c.numer(), c.denom(), p))
            .collect::<Option<Vec<_>>>()?;
        Some(ModPoly::new(p, coeffs))
    }

    pub fn x(p: u64) -> Self {
        ModPoly::new(p, vec![0, 1])
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => {
                let inv = inv_mod(lc, self.p);
                ModPoly::new(
                    self.p,
                    self.coeffs.iter().map(|&c| mul_mod(c, inv, self.p)).collect(),
                )
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |v: &[u64], i: usize| v.get(i).copied().unwrap_or(0);
        ModPoly::new(
            self.p,
            (0..n)
                .map(|i| (get(&self.coeffs, i) + get(&rhs.coeffs, i)) % self.p)
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |v: &[u64], i: usize| v.get(i).copied().unwrap_or(0);
        ModPoly::new(
            self.p,
            (0..n)
                .map(|i| (get(&self.coeffs, i) + self.p - get(&rhs.coeffs, i)) % self.p)
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return ModPoly::new(self.p, Vec::new());
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        ModPoly::new(self.p, out)
    }

    /// Remainder modulo a nonzero `divisor`.
    pub fn rem(&self, divisor: &Self) -> Self {
        let db = divisor.degree().expect("division by the zero polynomial");
        let inv = inv_mod(*divisor.coeffs.last().unwrap(), self.p);
        let mut r = self.coeffs.clone();
        while r.len() > db {
            let k = r.len() - 1 - db;
            let c = mul_mod(*r.last().unwrap(), inv, self.p);
            if c != 0 {
                for (j, &d) in divisor.coeffs.iter().enumerate() {
                    r[k + j] = (r[k + j] + self.p - mul_mod(c, d, self.p)) % self.p;
                }
            }
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        ModPoly::new(self.p, r)
    }

    /// Monic gcd.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        ModPoly::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % self.p, self.p))
                .collect(),
        )
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, x, self.p) + c) % self.p)
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Self {
        let mut base = self.rem(modulus);
        let mut acc = ModPoly::new(self.p, vec![1]).rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(modulus);
            }
        }
        acc
    }

    /// `x^(p^k) mod modulus`, by `k` successive p-th powers.
    pub fn frobenius_power(&self, k: usize, modulus: &Self) -> Self {
        let mut acc = ModPoly::x(self.p).rem(modulus);
        for _ in 0..k {
            acc = acc.pow_mod(self.p, modulus);
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Rabin's test: a squarefree `f` of degree `n` is irreducible iff
    /// `x^(p^n) ≡ x` and `gcd(x^(p^(n/q)) - x, f) = 1` for each prime `q | n`.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else {
            return false;
        };
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        if !self.is_squarefree() {
            return false;
        }
        let x = ModPoly::x(self.p).rem(self);
        if self.frobenius_power(n, self) != x {
            return false;
        }
        (2..=n)
            .filter(|&q| n % q == 0 && is_prime(q as u64))
            .all(|q| {
                let h = self.frobenius_power(n / q, self).sub(&x);
                self.gcd(&h).is_one()
            })
    }

    /// True iff the polynomial is a product of distinct linear factors.
    pub fn splits_completely(&self) -> bool {
        let Some(n) = self.degree() else {
            return false;
        };
        if n == 0 {
            return false;
        }
        let x = ModPoly::x(self.p).rem(self);
        self.is_squarefree() && self.frobenius_power(1, self) == x
    }

    /// All roots in `[0, p)` in increasing order, by exhaustive evaluation.
    pub fn roots_brute_force(&self) -> Vec<u64> {
        (0..self.p).filter(|&r| self.eval(r) == 0).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducibility_mod_p() {
        let f = UPoly::from_ints(&[1, 0, 1]);
        assert!(!ModPoly::from_upoly(&f, 2).unwrap().is_irreducible());
        assert!(ModPoly::from_upoly(&f, 3).unwrap().is_irreducible());
        assert!(!ModPoly::from_upoly(&f, 5).unwrap().is_irreducible());
        // x^4 + 1 is reducible modulo every prime
        let g = UPoly::from_ints(&[1, 0, 0, 0, 1]);
        for p in [3u64, 5, 7, 11, 13, 17] {
            assert!(!ModPoly::from_upoly(&g, p).unwrap().is_irreducible());
        }
        // x^3 - 2 stays irreducible mod 7 (2 is not a cube mod 7)
        let h = UPoly::from_ints(&[-2, 0, 0, 1]);
        assert!(ModPoly::from_upoly(&h, 7).unwrap().is_irreducible());
    }

    #[test]
    fn splitting() {
        let f = ModPoly::from_upoly(&UPoly::from_ints(&[1, 0, 1]), 5).unwrap();
        assert!(f.splits_completely());
        assert_eq!(f.roots_brute_force(), vec![2, 3]);
        let g = ModPoly::from_upoly(&UPoly::from_ints(&[1, 0, 1]), 3).unwrap();
        assert!(!g.splits_completely());
    }

    #[test]
    fn denominators_divisible_by_p() {
        let f = UPoly::new(vec![crate::exact::Rat::new(1, 3), crate::exact::Rat::one()]);
        assert!(ModPoly::from_upoly(&f, 3).is_none());
        assert_eq!(ModPoly::from_upoly(&f, 5).unwrap().coeffs(), &[2, 1]);
    }
}
