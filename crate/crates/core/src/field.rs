//! The extension `E = ℚ[x]/(f)` and exact arithmetic on its elements in the
//! power basis `1, θ, …, θ^(n-1)`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{is_prime, poly_gcd, Algebra, ModPoly, Rat, UPoly};
use crate::galois::padic::model_coeffs;
use crate::galois::{find_split_prime, hensel_lift};

/// The factor search tries `2^(n-1)` subsets; above this degree a field
/// without a modular certificate is only assumed irreducible.
const MAX_FACTOR_SEARCH_DEGREE: usize = 16;

/// How irreducibility of the defining polynomial is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IrreducibilityCertificate {
    /// `f mod p` is irreducible over the field with `p` elements.
    CertifiedModP(u64),
    /// No product of linear factors modulo the given split prime, lifted
    /// past the coefficient bound, divides `f` over ℤ.
    FactorSearch(u64),
    /// No certificate was found; a reducible `f` surfaces later as
    /// [`Error::ZeroDivisor`] with a factor.
    AssumedIrreducible,
}

#[derive(Clone, Copy, Debug)]
pub struct FieldOptions {
    /// Largest prime tried when looking for an irreducibility certificate.
    pub prime_bound: u64,
    /// Largest prime tried for the exhaustive factor search used when no
    /// certificate exists.
    pub split_prime_bound: u64,
}

impl Default for FieldOptions {
    fn default() -> Self {
        FieldOptions {
            prime_bound: 1000,
            split_prime_bound: 100_000,
        }
    }
}

struct FieldInner {
    minpoly: UPoly,
    degree: usize,
    certificate: IrreducibilityCertificate,
    // reduction[k] holds the coordinates of θ^(n+k)
    reduction: Vec<Vec<Rat>>,
    model_scale: BigInt,
    integral_model: UPoly,
}

/// A number field `ℚ[x]/(f)` with monic, squarefree `f`. Cheap to clone.
#[derive(Clone)]
pub struct NumberField(Arc<FieldInner>);

impl NumberField {
    /// Builds the field with default options. See [`NumberField::with_options`].
    pub fn new(f: &UPoly) -> Result<Self> {
        Self::with_options(f, FieldOptions::default())
    }

    /// Normalizes `f` to monic, rejects repeated and rational roots, and
    /// searches for a prime modulo which `f` stays irreducible.
    pub fn with_options(f: &UPoly, options: FieldOptions) -> Result<Self> {
        let f = Self::check_degree(f)?;
        let g = poly_gcd(&f, &f.derivative());
        if !g.is_constant() {
            return Err(Error::NotSquarefree { witness: g });
        }
        let field = Self::build(f, IrreducibilityCertificate::AssumedIrreducible);
        if field.degree() >= 2 {
            if let Some(root) = field.rational_root() {
                return Err(Error::RationalRoot { root });
            }
        }
        let certificate = (2..=options.prime_bound)
            .filter(|&p| is_prime(p))
            .find(|&p| {
                ModPoly::from_upoly(field.minpoly(), p)
                    .is_some_and(|fp| fp.is_irreducible())
            })
            .map(IrreducibilityCertificate::CertifiedModP);
        let certificate = match certificate {
            Some(c) => c,
            None => match field.factor_search(options.split_prime_bound) {
                Some((_, Some(factor))) => return Err(Error::ZeroDivisor { factor }),
                Some((p, None)) => IrreducibilityCertificate::FactorSearch(p),
                None => IrreducibilityCertificate::AssumedIrreducible,
            },
        };
        Ok(Self::build(field.minpoly().clone(), certificate))
    }

    /// Skips every check except non-constancy. Arithmetic in a field built
    /// from a reducible `f` fails with [`Error::ZeroDivisor`] on inversion.
    pub fn assume_irreducible(f: &UPoly) -> Result<Self> {
        let f = Self::check_degree(f)?;
        Ok(Self::build(f, IrreducibilityCertificate::AssumedIrreducible))
    }

    /// Tries every product of at most `n/2` linear factors of the integral
    /// model over a split prime, lifted far enough that any monic integer
    /// factor is recovered exactly. Returns the prime and a monic factor of
    /// `f` if one exists, or `None` when no split prime is found.
    fn factor_search(&self, bound: u64) -> Option<(u64, Option<UPoly>)> {
        let n = self.degree();
        if n > MAX_FACTOR_SEARCH_DEGREE {
            return None;
        }
        let data = find_split_prime(self, bound).ok()?;
        let g = model_coeffs(self);
        // coefficients of a degree-k factor are at most 2^k times the 1-norm of g
        let coeff_bound: BigInt = g.iter().map(|c| c.abs()).sum::<BigInt>() << n;
        let p = BigInt::from(data.p);
        let mut k = 1u32;
        while num_traits::pow(p.clone(), k as usize) <= &coeff_bound * 2 {
            k += 1;
        }
        let lifted = hensel_lift(self, &data, k);
        let m = lifted.modulus();
        let half = &m >> 1;
        let (scale, model) = self.integral_model();
        for size in 1..=n / 2 {
            for subset in (0..n).combinations(size) {
                let mut prod = vec![BigInt::one()];
                for &i in &subset {
                    let r = &lifted.lifted_roots[i];
                    let mut next = vec![BigInt::zero(); prod.len() + 1];
                    for (j, c) in prod.iter().enumerate() {
                        next[j + 1] += c;
                        next[j] -= c * r;
                    }
                    prod = next.into_iter().map(|c| c.mod_floor(&m)).collect();
                }
                let h: Vec<BigInt> = prod
                    .into_iter()
                    .map(|c| if c > half { c - &m } else { c })
                    .collect();
                let h = UPoly::from_big_ints(&h);
                if model.is_divisible_by(&h) {
                    // θ' = dθ, so h(d·x) is a factor of f up to a constant
                    let dx = UPoly::monomial(Rat::from_int(scale.clone()), 1);
                    return Some((data.p, Some(h.compose(&dx).monic())));
                }
            }
        }
        Some((data.p, None))
    }

    fn check_degree(f: &UPoly) -> Result<UPoly> {
        match f.degree() {
            None | Some(0) => Err(Error::ConstantPolynomial),
            Some(_) => Ok(f.monic()),
        }
    }

    fn build(f: UPoly, certificate: IrreducibilityCertificate) -> Self {
        let n = f.degree().unwrap();
        let mut reduction = Vec::with_capacity(n.saturating_sub(1));
        if n > 1 {
            let mut row: Vec<Rat> = (0..n).map(|i| -f.coeff(i)).collect();
            reduction.push(row.clone());
            for _ in 1..n - 1 {
                let top = row[n - 1].clone();
                let mut next = vec![Rat::zero(); n];
                for j in 1..n {
                    next[j] = row[j - 1].clone();
                }
                if !top.is_zero() {
                    for (j, r0) in reduction[0].iter().enumerate() {
                        next[j] += &(&top * r0);
                    }
                }
                reduction.push(next.clone());
                row = next;
            }
        }
        // θ' = dθ has the monic integral minimal polynomial d^n f(x/d)
        let scale = f
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let model = UPoly::new(
            (0..=n)
                .map(|i| {
                    let pow = num_traits::pow(scale.clone(), n - i);
                    f.coeff(i) * Rat::from_int(pow)
                })
                .collect(),
        );
        NumberField(Arc::new(FieldInner {
            minpoly: f,
            degree: n,
            certificate,
            reduction,
            model_scale: scale,
            integral_model: model,
        }))
    }

    pub fn minpoly(&self) -> &UPoly {
        &self.0.minpoly
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn certificate(&self) -> IrreducibilityCertificate {
        self.0.certificate
    }

    /// The monic integral polynomial `d^n f(x/d)` satisfied by `dθ`, where
    /// `d` is the least common denominator of `f`.
    pub fn integral_model(&self) -> (&BigInt, &UPoly) {
        (&self.0.model_scale, &self.0.integral_model)
    }

    /// A rational root of `f`, found among divisors of the integral model's
    /// constant term.
    fn rational_root(&self) -> Option<Rat> {
        let (d, g) = self.integral_model();
        let g0 = g.coeff(0);
        if g0.is_zero() {
            return Some(Rat::zero());
        }
        let c: BigUint = g0.numer().magnitude().clone();
        let mut t = BigUint::one();
        let d = Rat::from_int(d.clone());
        while &t * &t <= c {
            if (&c % &t).is_zero() {
                for cand in [t.clone(), &c / &t] {
                    for sign in [1i32, -1] {
                        let r = Rat::from_int(BigInt::from(cand.clone())) * Rat::from_int(sign);
                        if g.eval_rat(&r).is_zero() {
                            return Some(r / &d);
                        }
                    }
                }
            }
            t += 1u32;
        }
        None
    }

    pub fn same_field(&self, other: &NumberField) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.minpoly == other.0.minpoly
    }

    /// The element with the given power-basis coordinates. Longer inputs are
    /// reduced modulo `f`; shorter ones are zero-padded.
    pub fn element(&self, coeffs: Vec<Rat>) -> FieldElem {
        if coeffs.len() > self.degree() {
            return self.from_poly(&UPoly::new(coeffs));
        }
        let mut coeffs = coeffs;
        coeffs.resize(self.degree(), Rat::zero());
        FieldElem {
            field: self.clone(),
            coeffs,
        }
    }

    pub fn from_ints(&self, coeffs: &[i64]) -> FieldElem {
        self.element(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn from_rat(&self, c: Rat) -> FieldElem {
        self.element(vec![c])
    }

    /// The class of `p` modulo `f`.
    pub fn from_poly(&self, p: &UPoly) -> FieldElem {
        let r = p.rem(self.minpoly()).expect("f is nonzero");
        let mut coeffs = r.coeffs().to_vec();
        coeffs.resize(self.degree(), Rat::zero());
        FieldElem {
            field: self.clone(),
            coeffs,
        }
    }

    pub fn zero(&self) -> FieldElem {
        self.element(Vec::new())
    }

    pub fn one(&self) -> FieldElem {
        self.from_rat(Rat::one())
    }

    /// The class θ of `x`.
    pub fn generator(&self) -> FieldElem {
        self.from_poly(&UPoly::x())
    }

    /// `1, θ, …, θ^(n-1)`.
    pub fn power_basis(&self) -> Vec<FieldElem> {
        (0..self.degree())
            .map(|i| self.from_poly(&UPoly::monomial(Rat::one(), i)))
            .collect()
    }

    fn reduce_product(&self, conv: Vec<Rat>) -> Vec<Rat> {
        let n = self.degree();
        let mut out: Vec<Rat> = conv.iter().take(n).cloned().collect();
        out.resize(n, Rat::zero());
        for (k, c) in conv.iter().enumerate().skip(n) {
            if c.is_zero() {
                continue;
            }
            for (j, r) in self.0.reduction[k - n].iter().enumerate() {
                if !r.is_zero() {
                    out[j] += &(c * r);
                }
            }
        }
        out
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other)
    }
}

impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField(Q[x]/({}))", self.minpoly())
    }
}

/// An element of a [`NumberField`] as its power-basis coordinates.
#[derive(Clone)]
pub struct FieldElem {
    field: NumberField,
    coeffs: Vec<Rat>,
}

impl FieldElem {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// The representative polynomial of degree below `n`.
    pub fn to_poly(&self) -> UPoly {
        UPoly::new(self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rat::is_zero)
    }

    /// True iff the element lies in ℚ.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Rat::is_zero)
    }

    pub fn scale(&self, c: &Rat) -> FieldElem {
        FieldElem {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> FieldElem {
        let mut base = self.clone();
        let mut acc = self.field.one();
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

    fn check_field(&self, other: &FieldElem) -> Result<()> {
        if self.field.same_field(&other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check_field(other)?;
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check_field(other)?;
        Ok(self * other)
    }

    /// Inverse via the extended Euclidean algorithm on `(rep(a), f)`.
    ///
    /// A nontrivial gcd proves `f` reducible and is returned as the witness.
    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = self.field.minpoly();
        let (mut r0, mut r1) = (f.clone(), self.to_poly());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            r0 = std::mem::replace(&mut r1, r);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if !r0.is_constant() {
            return Err(Error::ZeroDivisor {
                factor: r0.monic(),
            });
        }
        let c = r0.coeff(0).inv().expect("gcd is nonzero");
        Ok(self.field.from_poly(&t0.scale(&c)))
    }

    pub fn try_div(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check_field(other)?;
        Ok(self * &other.inv()?)
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field.same_field(&other.field)
    }
}

impl Eq for FieldElem {}

impl Hash for FieldElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_poly().fmt_ascending("θ"))
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElem({self})")
    }
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        assert!(self.field.same_field(&rhs.field), "field mismatch");
        FieldElem {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        assert!(self.field.same_field(&rhs.field), "field mismatch");
        FieldElem {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        assert!(self.field.same_field(&rhs.field), "field mismatch");
        let n = self.coeffs.len();
        let mut conv = vec![Rat::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += &(a * b);
                }
            }
        }
        FieldElem {
            field: self.field.clone(),
            coeffs: self.field.reduce_product(conv),
        }
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                (&self).$method(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl Algebra for FieldElem {
    fn scalar_like(&self, c: &Rat) -> Self {
        self.field.from_rat(c.clone())
    }
    fn alg_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn alg_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}
