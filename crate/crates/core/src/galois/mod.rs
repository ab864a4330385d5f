//! Automorphisms of `E = ℚ[x]/(f)`: the roots of `f` inside `E`.
//!
//! Roots of the integral model of `f` are lifted p-adically at a fully split
//! prime. For each labelling permutation `π` of those roots the Vandermonde
//! system `Σ c_i m_t^i ≡ m_π(t)` is solved mod `p^k`, the `c_i` are
//! rationally reconstructed, and the candidate is accepted only after exact
//! evaluation `f(r) = 0` in `E`. Precision is deepened geometrically up to a
//! level at which reconstruction of every true automorphism is guaranteed,
//! so an empty slot at that level is a proof of absence.

pub(crate) mod padic;

pub use padic::{find_split_prime, find_split_prime_from, hensel_lift, inv_mod_big, SplitPrimeData};

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{poly_eval, rational_reconstruct, reduce_rational, Rat};
use crate::field::{FieldElem, NumberField};
use crate::repr::trace_gram;

#[derive(Clone, Copy, Debug)]
pub struct GaloisOptions {
    /// Largest degree handled; the permutation search is factorial in it.
    pub degree_cap: usize,
    /// Largest prime tried when looking for a split prime.
    pub prime_bound: u64,
    /// Smallest prime tried.
    pub first_prime: u64,
    /// Upper limit on the bit length of the p-adic modulus.
    pub precision_cap_bits: u64,
}

impl Default for GaloisOptions {
    fn default() -> Self {
        GaloisOptions {
            degree_cap: 8,
            prime_bound: 100_000,
            first_prime: 2,
            precision_cap_bits: 16_384,
        }
    }
}

/// A ℚ-automorphism of a number field, stored as the image `r` of θ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    image: FieldElem,
}

impl Automorphism {
    pub fn identity(field: &NumberField) -> Self {
        Automorphism {
            image: field.generator(),
        }
    }

    /// `None` unless `f(image) = 0`.
    pub fn from_image(image: FieldElem) -> Option<Self> {
        poly_eval(image.field().minpoly(), &image)
            .is_zero()
            .then_some(Automorphism { image })
    }

    pub fn field(&self) -> &NumberField {
        self.image.field()
    }

    pub fn image(&self) -> &FieldElem {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image == self.field().generator()
    }

    /// `a(θ) ↦ a(r)`.
    pub fn apply(&self, a: &FieldElem) -> Result<FieldElem> {
        if !a.field().same_field(self.field()) {
            return Err(Error::FieldMismatch);
        }
        Ok(poly_eval(&a.to_poly(), &self.image))
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "θ ↦ {}", self.image)
    }
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Automorphism({self})")
    }
}

/// `σ ∘ τ`; its image of θ is `σ(τ(θ))`.
pub fn compose(s: &Automorphism, t: &Automorphism) -> Result<Automorphism> {
    Ok(Automorphism {
        image: s.apply(&t.image)?,
    })
}

pub fn apply(s: &Automorphism, a: &FieldElem) -> Result<FieldElem> {
    s.apply(a)
}

/// All automorphisms together with the data used to find them.
#[derive(Clone, Debug)]
pub struct AutomorphismSet {
    /// Identity first, then ascending by the coordinates of the image of θ.
    pub automorphisms: Vec<Automorphism>,
    /// The split prime, absent for degree one.
    pub prime: Option<u64>,
    /// Final p-adic precision `k`.
    pub precision: u32,
}

/// Every automorphism of `field`, with default options.
pub fn automorphisms(field: &NumberField) -> Result<Vec<Automorphism>> {
    Ok(compute_automorphisms(field, &GaloisOptions::default())?.automorphisms)
}

pub fn compute_automorphisms(field: &NumberField, options: &GaloisOptions) -> Result<AutomorphismSet> {
    let n = field.degree();
    if n > options.degree_cap {
        return Err(Error::DegreeCapExceeded {
            degree: n,
            cap: options.degree_cap,
        });
    }
    if n == 1 {
        return Ok(AutomorphismSet {
            automorphisms: vec![Automorphism::identity(field)],
            prime: None,
            precision: 0,
        });
    }
    let data = find_split_prime_from(field, options.first_prime, options.prime_bound)?;
    automorphisms_with_prime(field, &data, options)
}

/// Runs the search at a caller-chosen split prime.
pub fn automorphisms_with_prime(
    field: &NumberField,
    data: &SplitPrimeData,
    options: &GaloisOptions,
) -> Result<AutomorphismSet> {
    let n = field.degree();
    if n > options.degree_cap {
        return Err(Error::DegreeCapExceeded {
            degree: n,
            cap: options.degree_cap,
        });
    }
    let (scale, g) = field.integral_model();
    let model = NumberField::assume_irreducible(g)?;
    let mut search = RootSearch::new(&model, data);

    let p = BigInt::from(data.p);
    let bits_per_step = (data.p as f64).log2();
    let target_k = precision_for(&(search.height_bound() * search.height_bound() * 2u32), &p);
    let cap_k = ((options.precision_cap_bits as f64 / bits_per_step).floor() as u32).max(1);
    let final_k = target_k.min(cap_k);
    let mut k = ((64.0 / bits_per_step).ceil() as u32).clamp(1, final_k);
    let mut lifted = data.clone();
    loop {
        lifted = hensel_lift(&model, &lifted, k);
        search.run_level(&lifted)?;
        if search.found.len() == n || k == final_k {
            break;
        }
        k = (2 * k).min(final_k);
    }
    if search.found.len() < n && final_k < target_k {
        return Err(Error::PrecisionCapExceeded {
            cap_bits: options.precision_cap_bits,
        });
    }

    let scale = Rat::from_int(scale.clone());
    let mut automorphisms: Vec<Automorphism> = search
        .found
        .iter()
        .map(|r| {
            // θ' = dθ, so σ(θ) = r'(dθ)/d
            let mut d_pow = scale.inv().unwrap();
            let coeffs = r
                .coeffs()
                .iter()
                .map(|c| {
                    let out = c * &d_pow;
                    d_pow *= &scale;
                    out
                })
                .collect();
            Automorphism::from_image(field.element(coeffs))
                .expect("transported automorphism satisfies f(r) = 0")
        })
        .collect();
    sort_canonical(&mut automorphisms);
    Ok(AutomorphismSet {
        automorphisms,
        prime: Some(data.p),
        precision: lifted.precision,
    })
}

/// Identity first, then lexicographic on the coordinates of the image of θ.
fn sort_canonical(auts: &mut [Automorphism]) {
    auts.sort_by(|a, b| {
        b.is_identity()
            .cmp(&a.is_identity())
            .then_with(|| a.image.coeffs().cmp(b.image.coeffs()))
    });
}

/// Smallest `k` with `p^k > bound`.
fn precision_for(bound: &BigInt, p: &BigInt) -> u32 {
    let mut k = 1;
    let mut m = p.clone();
    while m <= *bound {
        m *= p;
        k += 1;
    }
    k
}

struct RootSearch<'a> {
    model: &'a NumberField,
    residues: Vec<u64>,
    p: u64,
    found: Vec<FieldElem>,
    // covered[j]: some found automorphism sends root 0 to root j
    covered: Vec<bool>,
    height: BigInt,
}

impl<'a> RootSearch<'a> {
    fn new(model: &'a NumberField, data: &SplitPrimeData) -> Self {
        let n = model.degree();
        let p = BigInt::from(data.p);
        let residues = data
            .lifted_roots
            .iter()
            .map(|r| r.mod_floor(&p).try_into().unwrap())
            .collect();
        let mut search = RootSearch {
            model,
            residues,
            p: data.p,
            found: Vec::new(),
            covered: vec![false; n],
            height: Self::coefficient_bound(model),
        };
        search.add(model.generator());
        search
    }

    fn height_bound(&self) -> &BigInt {
        &self.height
    }

    /// Bound on numerators and denominators of automorphism coordinates in
    /// the integral model.
    ///
    /// With Cauchy root bound `R`, Lagrange interpolation over the complex
    /// roots bounds each coordinate by `n·2^(n-1)·R^n·(2R)^((n-1)^2)`, using
    /// `|disc| ≥ 1` to bound each product of root differences from below.
    /// Roots of `g` are integral, and `|disc|` times the ring of integers
    /// lies in `ℤ[θ']`, so `|disc|` clears every denominator.
    fn coefficient_bound(model: &NumberField) -> BigInt {
        let n = model.degree();
        let (_, g) = model.integral_model();
        let r = BigInt::one()
            + g.coeffs()[..n]
                .iter()
                .map(|c| c.numer().abs())
                .max()
                .unwrap_or_default();
        let disc = trace_gram(model)
            .det_fraction_free()
            .expect("square")
            .numer()
            .abs();
        let two_r: BigInt = &r * 2u32;
        let h = BigInt::from(n)
            * num_traits::pow(BigInt::from(2u32), n - 1)
            * num_traits::pow(r, n)
            * num_traits::pow(two_r, (n - 1) * (n - 1));
        disc * h
    }

    /// Index of the root that `r` sends root 0 to.
    fn root_index(&self, r: &FieldElem) -> Option<usize> {
        let x = self.residues[0];
        let mut acc = 0u64;
        for c in r.coeffs().iter().rev() {
            let c = reduce_rational(c.numer(), c.denom(), self.p)?;
            acc = ((acc as u128 * x as u128 + c as u128) % self.p as u128) as u64;
        }
        self.residues.iter().position(|&m| m == acc)
    }

    fn add(&mut self, r: FieldElem) {
        if self.found.contains(&r) {
            return;
        }
        let j = self
            .root_index(&r)
            .expect("an automorphism permutes the roots");
        self.covered[j] = true;
        self.found.push(r);
        self.close();
    }

    /// Adds all compositions of found automorphisms.
    fn close(&mut self) {
        loop {
            let mut fresh = None;
            'outer: for s in &self.found {
                for t in &self.found {
                    let st = poly_eval(&t.to_poly(), s);
                    if !self.found.contains(&st) {
                        fresh = Some(st);
                        break 'outer;
                    }
                }
            }
            match fresh {
                Some(r) => {
                    let j = self.root_index(&r).expect("composition permutes the roots");
                    self.covered[j] = true;
                    self.found.push(r);
                }
                None => return,
            }
        }
    }

    fn run_level(&mut self, lifted: &SplitPrimeData) -> Result<()> {
        let n = self.model.degree();
        let m = lifted.modulus();
        let window = ((&m - 1u32) / 2u32).sqrt().min(self.height.clone());
        let vinv = vandermonde_inverse(&lifted.lifted_roots, &m);
        let g = self.model.minpoly();
        for perm in (0..n).permutations(n) {
            if self.found.len() == n {
                break;
            }
            if self.covered[perm[0]] {
                continue;
            }
            let mut coeffs = Vec::with_capacity(n);
            for row in &vinv {
                let c = row
                    .iter()
                    .zip(&perm)
                    .fold(BigInt::zero(), |acc, (v, &t)| acc + v * &lifted.lifted_roots[t])
                    .mod_floor(&m);
                match rational_reconstruct(&c, &m, &window)? {
                    Some(q) => coeffs.push(q),
                    None => break,
                }
            }
            if coeffs.len() < n {
                continue;
            }
            let r = self.model.element(coeffs);
            if poly_eval(g, &r).is_zero() {
                self.add(r);
            }
        }
        Ok(())
    }
}

/// Inverse of the matrix `V[t][i] = m_t^i` modulo `m`; the roots must be
/// distinct modulo the prime underlying `m`.
fn vandermonde_inverse(roots: &[BigInt], m: &BigInt) -> Vec<Vec<BigInt>> {
    let n = roots.len();
    let mut a: Vec<Vec<BigInt>> = roots
        .iter()
        .enumerate()
        .map(|(t, r)| {
            let mut row = Vec::with_capacity(2 * n);
            let mut pw = BigInt::one();
            for _ in 0..n {
                row.push(pw.clone());
                pw = (pw * r).mod_floor(m);
            }
            row.extend((0..n).map(|j| if j == t { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let (p, inv) = (c..n)
            .find_map(|i| inv_mod_big(&a[i][c], m).map(|inv| (i, inv)))
            .expect("Vandermonde matrix of distinct roots is invertible");
        a.swap(c, p);
        for j in 0..2 * n {
            a[c][j] = (&a[c][j] * &inv).mod_floor(m);
        }
        for i in 0..n {
            if i == c || a[i][c].is_zero() {
                continue;
            }
            let factor = a[i][c].clone();
            for j in 0..2 * n {
                let t = &factor * &a[c][j];
                a[i][j] = (&a[i][j] - t).mod_floor(m);
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// The full automorphism group of a Galois field, in canonical order.
#[derive(Clone, Debug)]
pub struct GaloisGroup {
    field: NumberField,
    elements: Vec<Automorphism>,
    table: Vec<Vec<usize>>,
    prime: Option<u64>,
    precision: u32,
}

impl GaloisGroup {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    /// `table[i][j]` is the index of `elements[i] ∘ elements[j]`.
    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn compose_index(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        (0..self.order())
            .find(|&j| self.table[i][j] == 0)
            .expect("every group element has an inverse")
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut cur = i;
        while cur != 0 {
            cur = self.table[i][cur];
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (0..n).all(|j| self.table[i][j] == self.table[j][i]))
    }

    pub fn prime(&self) -> Option<u64> {
        self.prime
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// `(σ(a))_σ` in canonical group order.
    pub fn conjugate_vector(&self, a: &FieldElem) -> Result<Vec<FieldElem>> {
        self.elements.iter().map(|s| s.apply(a)).collect()
    }
}

pub fn conjugate_vector(group: &GaloisGroup, a: &FieldElem) -> Result<Vec<FieldElem>> {
    group.conjugate_vector(a)
}

/// The Galois group, or [`Error::NotGalois`] when fewer than `n`
/// automorphisms exist.
pub fn galois_group(field: &NumberField, options: &GaloisOptions) -> Result<GaloisGroup> {
    let set = compute_automorphisms(field, options)?;
    let count = set.automorphisms.len();
    if count != field.degree() {
        return Err(Error::NotGalois { count });
    }
    let elements = set.automorphisms;
    let table = elements
        .iter()
        .map(|s| {
            elements
                .iter()
                .map(|t| {
                    let st = compose(s, t).expect("same field");
                    elements
                        .iter()
                        .position(|e| *e == st)
                        .expect("automorphisms are closed under composition")
                })
                .collect()
        })
        .collect();
    Ok(GaloisGroup {
        field: field.clone(),
        elements,
        table,
        prime: set.prime,
        precision: set.precision,
    })
}
