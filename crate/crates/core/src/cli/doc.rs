//! The JSON output document (schema version "1") and its independent
//! re-verification.
//!
//! Rationals are always written as `"p/q"` strings and field elements as
//! arrays of them in the power basis, so every certificate can be checked
//! again from the document and the defining polynomial alone.

use serde::{Deserialize, Serialize};

use crate::criteria::normal_det;
use crate::error::Error;
use crate::exact::{poly_eval, Rat, UPoly};
use crate::field::{FieldElem, IrreducibilityCertificate, NumberField};
use crate::galois::{galois_group, GaloisOptions};
use crate::parse::parse_poly;
use crate::repr::{minpoly, norm};
use crate::search::{pell_form, PellSolution, WitnessedElement};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: String,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldDoc>,
    pub results: Vec<ResultDoc>,
    pub diagnostics: Diagnostics,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FieldDoc {
    pub polynomial: String,
    pub coefficients: Vec<String>,
    pub degree: usize,
    pub certificate: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ResultDoc {
    Analysis(AnalysisDoc),
    Witness(WitnessDoc),
    Pell(PellDoc),
    DensityProbe(DensityDoc),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisDoc {
    pub degree: usize,
    pub gram_determinant: String,
    pub separable: bool,
    /// Images of θ, identity first.
    pub automorphisms: Vec<Vec<String>>,
    pub galois: bool,
    pub density_rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub composition_table: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub h: String,
    pub value: Vec<String>,
    pub minpoly: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normal_det: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub a: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Vec<String>>,
    pub certificates: Vec<CertificateDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub norm: Option<String>,
    pub stream_index: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PellDoc {
    pub b: String,
    pub c: String,
    pub x: String,
    pub y: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityDoc {
    pub polynomials: Vec<String>,
    pub degree: usize,
    pub grid: u64,
    pub points: usize,
    pub monomials: usize,
    pub no_relation: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precision: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_height: Option<u64>,
    /// Wall-clock time; the only field that varies between identical runs.
    pub timings: Timings,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub total_us: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorDoc {
    pub kind: String,
    pub message: String,
    pub exit_code: i32,
}

pub fn rat_strings(coeffs: &[Rat]) -> Vec<String> {
    coeffs.iter().map(Rat::to_exact_string).collect()
}

pub fn elem_doc(a: &FieldElem) -> Vec<String> {
    rat_strings(a.coeffs())
}

impl FieldDoc {
    pub fn new(field: &NumberField) -> Self {
        FieldDoc {
            polynomial: field.minpoly().to_string(),
            coefficients: rat_strings(field.minpoly().coeffs()),
            degree: field.degree(),
            certificate: match field.certificate() {
                IrreducibilityCertificate::CertifiedModP(p) => format!("irreducible mod {p}"),
                IrreducibilityCertificate::FactorSearch(p) => format!("no factor over split prime {p}"),
                IrreducibilityCertificate::AssumedIrreducible => "assumed irreducible".into(),
            },
        }
    }
}

impl WitnessDoc {
    pub fn new(w: &WitnessedElement) -> Self {
        WitnessDoc {
            a: elem_doc(&w.a),
            base: w.base.as_ref().map(elem_doc),
            certificates: w
                .per_h
                .iter()
                .map(|c| CertificateDoc {
                    h: c.h.to_string(),
                    value: elem_doc(&c.value),
                    minpoly: rat_strings(c.minpoly.coeffs()),
                    normal_det: c.normal_det.as_ref().map(elem_doc),
                })
                .collect(),
            norm: w.norm_value.as_ref().map(Rat::to_exact_string),
            stream_index: w.stream_index,
        }
    }
}

impl PellDoc {
    pub fn new(b: &Rat, c: &Rat, s: &PellSolution) -> Self {
        PellDoc {
            b: b.to_exact_string(),
            c: c.to_exact_string(),
            x: s.x.to_exact_string(),
            y: s.y.to_exact_string(),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("certificate check failed: {0}")]
    Failed(String),
    #[error(transparent)]
    Compute(#[from] Error),
}

fn parse_rat(s: &str) -> Result<Rat, VerifyError> {
    s.parse()
        .map_err(|_| VerifyError::Malformed(format!("bad rational `{s}`")))
}

fn parse_rats(v: &[String]) -> Result<Vec<Rat>, VerifyError> {
    v.iter().map(|s| parse_rat(s)).collect()
}

fn parse_elem(field: &NumberField, v: &[String]) -> Result<FieldElem, VerifyError> {
    if v.len() != field.degree() {
        return Err(VerifyError::Malformed(format!(
            "element with {} coordinates in a degree-{} field",
            v.len(),
            field.degree()
        )));
    }
    Ok(field.element(parse_rats(v)?))
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), VerifyError> {
    if cond {
        Ok(())
    } else {
        Err(VerifyError::Failed(what()))
    }
}

/// Recomputes every certificate in `doc` from the defining polynomial.
/// Returns the number of results checked.
pub fn verify_document(doc: &OutputDocument) -> Result<usize, VerifyError> {
    if doc.schema_version != SCHEMA_VERSION {
        return Err(VerifyError::Malformed(format!(
            "schema version {}",
            doc.schema_version
        )));
    }
    let field = match &doc.field {
        Some(fd) => {
            let f = UPoly::new(parse_rats(&fd.coefficients)?);
            let printed = parse_poly(&fd.polynomial)?;
            check(printed == f, || "polynomial text and coefficients differ".into())?;
            let field = NumberField::new(&f)?;
            check(field.degree() == fd.degree, || "degree mismatch".into())?;
            Some(field)
        }
        None => None,
    };
    let need_field = || {
        field
            .clone()
            .ok_or_else(|| VerifyError::Malformed("result requires a field".into()))
    };
    let mut group = None;
    for (i, result) in doc.results.iter().enumerate() {
        match result {
            ResultDoc::Witness(w) => {
                let field = need_field()?;
                let n = field.degree();
                let a = parse_elem(&field, &w.a)?;
                for c in &w.certificates {
                    let h = parse_poly(&c.h)?;
                    let value = poly_eval(&h, &a);
                    check(parse_elem(&field, &c.value)? == value, || {
                        format!("result {i}: h(a) differs for h = {}", c.h)
                    })?;
                    let mp = minpoly(&value)?;
                    check(UPoly::new(parse_rats(&c.minpoly)?) == mp, || {
                        format!("result {i}: minimal polynomial differs")
                    })?;
                    check(mp.degree() == Some(n), || {
                        format!("result {i}: h(a) does not generate the field")
                    })?;
                    if let Some(det) = &c.normal_det {
                        if group.is_none() {
                            group = Some(galois_group(&field, &GaloisOptions::default())?);
                        }
                        let d = normal_det(group.as_ref().unwrap(), &value)?;
                        check(!d.is_zero() && parse_elem(&field, det)? == d, || {
                            format!("result {i}: normal-basis determinant differs or vanishes")
                        })?;
                    }
                }
                if let Some(nv) = &w.norm {
                    let nv = parse_rat(nv)?;
                    check(nv.is_one() && norm(&a) == nv, || format!("result {i}: norm is not 1"))?;
                }
                if let Some(b) = &w.base {
                    let b = parse_elem(&field, b)?;
                    let nb = norm(&b).inv().ok_or(Error::DivisionByZero)?;
                    check(b.pow(n as u32).scale(&nb) == a, || {
                        format!("result {i}: a is not bⁿ/N(b)")
                    })?;
                }
            }
            ResultDoc::Pell(p) => {
                let (b, c) = (parse_rat(&p.b)?, parse_rat(&p.c)?);
                let s = PellSolution {
                    x: parse_rat(&p.x)?,
                    y: parse_rat(&p.y)?,
                };
                check(pell_form(&b, &c, &s).is_one(), || {
                    format!("result {i}: x² + bxy + cy² ≠ 1")
                })?;
            }
            ResultDoc::Analysis(an) => {
                let field = need_field()?;
                for img in &an.automorphisms {
                    let r = parse_elem(&field, img)?;
                    check(poly_eval(field.minpoly(), &r).is_zero(), || {
                        format!("result {i}: an automorphism image is not a root of f")
                    })?;
                }
                check(an.galois == (an.automorphisms.len() == field.degree()), || {
                    format!("result {i}: Galois verdict contradicts the automorphism count")
                })?;
            }
            ResultDoc::DensityProbe(_) => {}
        }
    }
    Ok(doc.results.len())
}
