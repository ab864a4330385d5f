//! The regular representation `a ↦ (y ↦ a·y)` of a number field over ℚ,
//! with trace, norm, minimal polynomials and the trace form, plus the exact
//! elimination engine shared by the rest of the crate.

mod matrix;

pub use matrix::{EMatrix, Matrix, QMatrix, Scalar, Solved};

use crate::error::Result;
use crate::exact::{Rat, UPoly};
use crate::field::{FieldElem, NumberField};

/// Matrix of multiplication by `a` in the power basis: column `j` holds the
/// coordinates of `a·θ^j`.
pub fn regrep(a: &FieldElem) -> QMatrix {
    let columns: Vec<Vec<Rat>> = a
        .field()
        .power_basis()
        .iter()
        .map(|b| (a * b).coeffs().to_vec())
        .collect();
    QMatrix::from_columns(columns).expect("square by construction")
}

pub fn trace(a: &FieldElem) -> Rat {
    regrep(a).trace().expect("degree is at least one")
}

/// Determinant of the regular representation.
pub fn norm(a: &FieldElem) -> Rat {
    regrep(a)
        .det_fraction_free()
        .expect("degree is at least one")
}

/// Monic minimal polynomial of `a` over ℚ, from the first linear dependency
/// among `1, a, a², …`.
pub fn minpoly(a: &FieldElem) -> Result<UPoly> {
    let n = a.field().degree();
    let mut powers = vec![a.field().one()];
    for k in 1..=n {
        let next = &powers[k - 1] * a;
        let basis = QMatrix::from_columns(powers.iter().map(|p| p.coeffs().to_vec()).collect())?;
        let solved = basis.rank_and_solve(Some(next.coeffs()))?;
        if let Some(c) = solved.solution {
            let mut coeffs: Vec<Rat> = c.into_iter().map(|x| -x).collect();
            coeffs.push(Rat::one());
            return Ok(UPoly::new(coeffs));
        }
        powers.push(next);
    }
    unreachable!("the powers 1, a, …, a^n are always dependent")
}

/// Gram matrix of the trace form on the power basis:
/// `G[i][j] = Tr(θ^i·θ^j)`. Its determinant is the discriminant of `f`.
pub fn trace_gram(field: &NumberField) -> QMatrix {
    let n = field.degree();
    let theta = field.generator();
    let mut traces = Vec::with_capacity(2 * n - 1);
    let mut p = field.one();
    for _ in 0..2 * n - 1 {
        traces.push(trace(&p));
        p = &p * &theta;
    }
    QMatrix::from_rows(
        (0..n)
            .map(|i| (0..n).map(|j| traces[i + j].clone()).collect())
            .collect(),
    )
    .expect("square by construction")
}
