//! Testable characterizations: primitivity via the minimal polynomial,
//! separability via the trace form, Galois-ness via automorphism counts, the
//! normal-basis determinant, and density as exact rank.

use crate::error::{Error, Result};
use crate::exact::{squarefree_part, Rat, UPoly};
use crate::field::{FieldElem, NumberField};
use crate::galois::{compute_automorphisms, AutomorphismSet, GaloisGroup, GaloisOptions};
use crate::repr::{minpoly, trace, trace_gram, EMatrix, QMatrix};

#[derive(Clone, Debug, PartialEq)]
pub struct PrimitivityReport {
    pub element: FieldElem,
    pub minpoly: UPoly,
    pub minpoly_degree: usize,
    pub squarefree: bool,
    pub is_primitive: bool,
}

/// `a` generates `E` iff its minimal polynomial has degree `n` and no
/// repeated roots, i.e. its conjugates are pairwise distinct.
pub fn is_primitive(field: &NumberField, a: &FieldElem) -> Result<PrimitivityReport> {
    if !a.field().same_field(field) {
        return Err(Error::FieldMismatch);
    }
    let mp = minpoly(a)?;
    let minpoly_degree = mp.degree().expect("minimal polynomial is nonzero");
    let squarefree = squarefree_part(&mp)? == mp;
    Ok(PrimitivityReport {
        element: a.clone(),
        is_primitive: minpoly_degree == field.degree() && squarefree,
        minpoly: mp,
        minpoly_degree,
        squarefree,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeparabilityReport {
    pub separable: bool,
    pub gram_determinant: Rat,
    /// Index `i` of the first power-basis element `θ^i` with nonzero trace.
    pub nonzero_trace_at: Option<usize>,
}

/// Separable iff the trace form is nondegenerate; the weaker witness "the
/// trace functional is nonzero" is computed alongside and must agree.
pub fn is_separable_ext(field: &NumberField) -> SeparabilityReport {
    let gram_determinant = trace_gram(field).det_fraction_free().expect("square");
    let nonzero_trace_at = field
        .power_basis()
        .iter()
        .position(|b| !trace(b).is_zero());
    let separable = !gram_determinant.is_zero();
    assert_eq!(
        separable,
        nonzero_trace_at.is_some(),
        "trace form and trace functional disagree"
    );
    SeparabilityReport {
        separable,
        gram_determinant,
        nonzero_trace_at,
    }
}

#[derive(Clone, Debug)]
pub struct GaloisVerdict {
    pub automorphisms: AutomorphismSet,
    /// Rank over `E` of the conjugate vectors of the power basis.
    pub density_rank: usize,
    pub is_galois: bool,
}

/// Galois iff there are `n` automorphisms, cross-checked against the rank of
/// the conjugate-vector embedding of the power basis.
pub fn galois_verdict(field: &NumberField, options: &GaloisOptions) -> Result<GaloisVerdict> {
    let automorphisms = compute_automorphisms(field, options)?;
    let vectors = field
        .power_basis()
        .iter()
        .map(|b| {
            automorphisms
                .automorphisms
                .iter()
                .map(|s| s.apply(b))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let density = density_rank(&vectors)?;
    let n = field.degree();
    let by_count = automorphisms.automorphisms.len() == n;
    assert_eq!(by_count, density == n, "automorphism count and density rank disagree");
    Ok(GaloisVerdict {
        automorphisms,
        density_rank: density,
        is_galois: by_count,
    })
}

pub fn is_galois(field: &NumberField, options: &GaloisOptions) -> Result<bool> {
    Ok(galois_verdict(field, options)?.is_galois)
}

/// `det((στ)(a))` over `E`, rows and columns in canonical group order.
pub fn normal_det(group: &GaloisGroup, a: &FieldElem) -> Result<FieldElem> {
    if !a.field().same_field(group.field()) {
        return Err(Error::FieldMismatch);
    }
    let conj = group.conjugate_vector(a)?;
    let n = group.order();
    let rows = (0..n)
        .map(|i| (0..n).map(|j| conj[group.compose_index(i, j)].clone()).collect())
        .collect();
    EMatrix::from_rows(rows)?.det()
}

#[derive(Clone, Debug, PartialEq)]
pub struct NormalReport {
    pub element: FieldElem,
    pub det_value: FieldElem,
    pub is_normal: bool,
}

pub fn is_normal_generator(group: &GaloisGroup, a: &FieldElem) -> Result<NormalReport> {
    let det_value = normal_det(group, a)?;
    Ok(NormalReport {
        element: a.clone(),
        is_normal: !det_value.is_zero(),
        det_value,
    })
}

/// Rank over ℚ of the coordinate vectors of the conjugates `σ(a)`; equal to
/// `n` exactly when the conjugates form a basis.
pub fn conjugate_rank(group: &GaloisGroup, a: &FieldElem) -> Result<usize> {
    let columns = group
        .conjugate_vector(a)?
        .into_iter()
        .map(|c| c.coeffs().to_vec())
        .collect();
    QMatrix::from_columns(columns)?.rank()
}

/// Rank over `E` of the given vectors: the dimension of the Zariski closure
/// of their ℚ-span in `Eⁿ`.
pub fn density_rank(vectors: &[Vec<FieldElem>]) -> Result<usize> {
    if vectors.is_empty() {
        return Ok(0);
    }
    EMatrix::from_rows(vectors.to_vec())?.rank()
}

/// Exponent vectors of all monomials in `m` variables of total degree at
/// most `d`, by increasing degree.
fn monomials(m: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == m {
            if left == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(m, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for total in 0..=d {
        rec(m, total, &mut Vec::new(), &mut out);
    }
    out
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Certifies that no nonzero polynomial of total degree `≤ d` vanishes on
/// all of `points`: the monomial evaluation matrix has full column rank.
///
/// `false` proves a relation exists; `true` says nothing about degrees
/// above `d`.
pub fn no_low_degree_relation(points: &[Vec<Rat>], d: usize) -> Result<bool> {
    let m = points.first().map_or(0, Vec::len);
    if points.iter().any(|p| p.len() != m) {
        return Err(Error::DimensionMismatch("points of different dimension".into()));
    }
    let needed = binomial(m + d, d);
    if points.len() < needed {
        return Err(Error::InsufficientSample {
            needed,
            got: points.len(),
        });
    }
    let monos = monomials(m, d);
    debug_assert_eq!(monos.len(), needed);
    let rows = points
        .iter()
        .map(|pt| {
            monos
                .iter()
                .map(|exps| {
                    pt.iter()
                        .zip(exps)
                        .map(|(x, &e)| x.pow(e as u32))
                        .product()
                })
                .collect()
        })
        .collect();
    Ok(QMatrix::from_rows(rows)?.rank()? == needed)
}
