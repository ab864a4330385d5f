//! Independent oracles for the integration tests. They work on plain
//! coefficient vectors and `UPoly` ring operations with their own Gaussian
//! elimination, and never call the library's matrix or field code.

#![allow(dead_code)]

use fieldlab::{FieldElem, NumberField, Rat, UPoly};

pub const REFERENCE_FIELDS: [(&str, &[i64]); 7] = [
    ("x^2 + 1", &[1, 0, 1]),
    ("x^2 - 2", &[-2, 0, 1]),
    ("x^3 - 2", &[-2, 0, 0, 1]),
    ("x^3 - x - 1", &[-1, -1, 0, 1]),
    ("x^4 - 10*x^2 + 1", &[1, 0, -10, 0, 1]),
    ("x^4 + x^3 + x^2 + x + 1", &[1, 1, 1, 1, 1]),
    ("x^4 + 1", &[1, 0, 0, 0, 1]),
];

pub const GALOIS_FIELDS: [&[i64]; 4] = [
    &[1, 0, 1],
    &[-2, 0, 1],
    &[1, 0, -10, 0, 1],
    &[1, 0, 0, 0, 1],
];

pub fn field(c: &[i64]) -> NumberField {
    NumberField::new(&UPoly::from_ints(c)).unwrap()
}

pub fn r(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

/// Coordinates of `p` reduced modulo `f`, padded to length `deg f`.
pub fn coords_mod(p: &UPoly, f: &UPoly) -> Vec<Rat> {
    let n = f.degree().unwrap();
    let red = p.rem(f).unwrap();
    (0..n).map(|i| red.coeff(i)).collect()
}

pub fn mul_mod(a: &UPoly, b: &UPoly, f: &UPoly) -> UPoly {
    (a * b).rem(f).unwrap()
}

/// Row-echelon rank over ℚ.
pub fn rank(mut rows: Vec<Vec<Rat>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for i in rank + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let factor = &rows[i][c] / &pivot;
            for j in c..cols {
                let v = &rows[rank][j] * &factor;
                rows[i][j] = &rows[i][j] - &v;
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant over ℚ by elimination with row swaps.
pub fn det(mut rows: Vec<Vec<Rat>>) -> Rat {
    let n = rows.len();
    let mut acc = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !rows[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            rows.swap(p, c);
            acc = -acc;
        }
        let pivot = rows[c][c].clone();
        acc = &acc * &pivot;
        for i in c + 1..n {
            let factor = &rows[i][c] / &pivot;
            for j in c..n {
                let v = &rows[c][j] * &factor;
                rows[i][j] = &rows[i][j] - &v;
            }
        }
    }
    acc
}

/// Matrix of multiplication by `a` on `1, x, ..., x^{n-1}` modulo `f`, as rows.
pub fn mult_matrix(a: &UPoly, f: &UPoly) -> Vec<Vec<Rat>> {
    let n = f.degree().unwrap();
    let cols: Vec<Vec<Rat>> = (0..n)
        .map(|j| coords_mod(&mul_mod(a, &UPoly::monomial(Rat::one(), j), f), f))
        .collect();
    (0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
}

pub fn norm_oracle(a: &UPoly, f: &UPoly) -> Rat {
    det(mult_matrix(a, f))
}

pub fn trace_oracle(a: &UPoly, f: &UPoly) -> Rat {
    let m = mult_matrix(a, f);
    (0..m.len()).map(|i| m[i][i].clone()).sum()
}

/// Degree of the minimal polynomial of `a`: the rank of its first `n` powers.
pub fn minpoly_degree_oracle(a: &UPoly, f: &UPoly) -> usize {
    let n = f.degree().unwrap();
    let mut rows = Vec::with_capacity(n);
    let mut power = UPoly::one();
    for _ in 0..n {
        rows.push(coords_mod(&power, f));
        power = mul_mod(&power, a, f);
    }
    rank(rows)
}

/// `a(r) mod f`: the image of `a` under `θ ↦ r`.
pub fn conjugate(a: &UPoly, image: &UPoly, f: &UPoly) -> UPoly {
    a.compose(image).rem(f).unwrap()
}

/// Rank of the coordinate matrix of the conjugates of `a`.
pub fn conjugate_rank_oracle(a: &UPoly, images: &[UPoly], f: &UPoly) -> usize {
    rank(images.iter().map(|s| coords_mod(&conjugate(a, s, f), f)).collect())
}

/// `det(tI - M)` by evaluating at `n + 1` integers and interpolating.
pub fn charpoly_oracle(m: &[Vec<Rat>]) -> UPoly {
    let n = m.len();
    let xs: Vec<Rat> = (0..=n as i64).map(Rat::from_int).collect();
    let ys: Vec<Rat> = xs
        .iter()
        .map(|t| {
            det((0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let d = if i == j { t.clone() } else { Rat::zero() };
                            &d - &m[i][j]
                        })
                        .collect()
                })
                .collect())
        })
        .collect();
    let mut out = UPoly::zero();
    for (i, (xi, yi)) in xs.iter().zip(&ys).enumerate() {
        let mut basis = UPoly::constant(yi.clone());
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                let lin = UPoly::new(vec![-xj.clone(), Rat::one()]);
                basis = (&basis * &lin).scale(&(xi - xj).inv().unwrap());
            }
        }
        out = &out + &basis;
    }
    out
}

/// `f(r) ≡ 0 mod f`, by polynomial composition.
pub fn is_root_image(image: &UPoly, f: &UPoly) -> bool {
    f.compose(image).rem(f).unwrap().is_zero()
}

pub fn elem_poly(a: &FieldElem) -> UPoly {
    UPoly::new(a.coeffs().to_vec())
}

/// Removes the timing field so JSON documents can be compared byte for byte.
pub fn strip_timings(json: &str) -> String {
    let mut v: serde_json::Value = serde_json::from_str(json).unwrap();
    if let Some(d) = v.get_mut("diagnostics").and_then(|d| d.as_object_mut()) {
        d.remove("timings");
    }
    serde_json::to_string(&v).unwrap()
}
