//! Constructive searches over the integer grid of power-basis coordinates.
//!
//! Candidates are enumerated by height `max |c_i|`, then lexicographically,
//! and filtered by exact certificates. A nonzero polynomial cannot vanish on
//! all of `ℤⁿ`, so any proper Zariski-closed bad set is escaped infinitely
//! often and every request for `count` results is eventually met.
//! Evaluation may run on a thread pool in fixed batches; acceptance is
//! committed in stream order, so output never depends on the thread count.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::criteria::{is_normal_generator, is_primitive, is_separable_ext, normal_det};
use crate::error::{Error, Result};
use crate::exact::{poly_eval, Rat, UPoly};
use crate::field::{FieldElem, NumberField};
use crate::galois::{galois_group, GaloisGroup, GaloisOptions};
use crate::repr::{minpoly, norm, QMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Deterministic,
    /// Seeded uniform draws from the current height box.
    Randomized,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub max_height: u64,
    pub seed: u64,
    pub mode: SearchMode,
    /// Worker threads for candidate evaluation; `None` uses the global pool.
    pub threads: Option<usize>,
    pub batch_size: usize,
    pub galois: GaloisOptions,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_height: 1000,
            seed: 0,
            mode: SearchMode::Deterministic,
            threads: None,
            batch_size: 32,
            galois: GaloisOptions::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// The polynomial set `S`; every member must be non-constant.
    pub set: Vec<UPoly>,
    pub count: usize,
    pub options: SearchOptions,
}

impl SearchConfig {
    pub fn new(set: Vec<UPoly>, count: usize) -> Self {
        SearchConfig {
            set,
            count,
            options: SearchOptions::default(),
        }
    }

    pub fn with_options(mut self, options: SearchOptions) -> Self {
        self.options = options;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.set.is_empty() {
            return Err(Error::InvalidConfig("the polynomial set is empty".into()));
        }
        if let Some(h) = self.set.iter().find(|h| h.is_constant()) {
            return Err(Error::InvalidConfig(format!("`{h}` is constant")));
        }
        validate_count(self.count)
    }
}

fn validate_count(count: usize) -> Result<()> {
    if count == 0 {
        return Err(Error::InvalidConfig("count must be at least 1".into()));
    }
    Ok(())
}

/// Certificate for one `h ∈ S` at a found element.
#[derive(Clone, Debug, PartialEq)]
pub struct HCertificate {
    pub h: UPoly,
    pub value: FieldElem,
    pub minpoly: UPoly,
    pub normal_det: Option<FieldElem>,
}

/// A search result with everything needed to re-verify it.
#[derive(Clone, Debug, PartialEq)]
pub struct WitnessedElement {
    pub a: FieldElem,
    /// For the norm-one constructions, the candidate `b` with `a = bⁿ/N(b)`.
    pub base: Option<FieldElem>,
    pub per_h: Vec<HCertificate>,
    pub norm_value: Option<Rat>,
    /// Position of the originating candidate in the stream.
    pub stream_index: u64,
}

/// Height-ordered stream of non-rational candidates with integer coordinates.
pub struct CandidateStream {
    field: NumberField,
    n: usize,
    height: u64,
    max_height: u64,
    mode: SearchMode,
    current: Option<Vec<i64>>,
    rng: ChaCha8Rng,
    draws_left: u64,
    seen: HashSet<Vec<i64>>,
    emitted: u64,
}

/// The candidate stream for `field`; degree-one fields have none.
pub fn enumerate_candidates(field: &NumberField, options: &SearchOptions) -> Result<CandidateStream> {
    let n = field.degree();
    if n < 2 {
        return Err(Error::TrivialExtension);
    }
    Ok(CandidateStream {
        field: field.clone(),
        n,
        height: 1,
        max_height: options.max_height,
        mode: options.mode,
        current: None,
        rng: ChaCha8Rng::seed_from_u64(options.seed),
        draws_left: box_size(1, n),
        seen: HashSet::new(),
        emitted: 0,
    })
}

fn box_size(h: u64, n: usize) -> u64 {
    (2 * h + 1).saturating_pow(n as u32)
}

impl CandidateStream {
    /// Height of the most recently emitted candidate.
    pub fn height(&self) -> u64 {
        self.height
    }

    fn accept(v: &[i64], h: i64) -> bool {
        v[1..].iter().any(|&c| c != 0) && v.iter().any(|c| c.abs() == h)
    }

    fn next_deterministic(&mut self) -> Option<Vec<i64>> {
        loop {
            if self.height > self.max_height {
                return None;
            }
            let h = self.height as i64;
            let next = match self.current.take() {
                None => Some(vec![-h; self.n]),
                Some(mut v) => {
                    let mut i = self.n;
                    loop {
                        if i == 0 {
                            break None;
                        }
                        i -= 1;
                        if v[i] < h {
                            v[i] += 1;
                            break Some(v);
                        }
                        v[i] = -h;
                    }
                }
            };
            match next {
                None => {
                    self.height += 1;
                }
                Some(v) => {
                    self.current = Some(v.clone());
                    if Self::accept(&v, h) {
                        return Some(v);
                    }
                }
            }
        }
    }

    fn next_random(&mut self) -> Option<Vec<i64>> {
        loop {
            if self.height > self.max_height {
                return None;
            }
            if self.draws_left == 0 {
                self.height += 1;
                self.draws_left = box_size(self.height, self.n);
                continue;
            }
            self.draws_left -= 1;
            let h = self.height as i64;
            let v: Vec<i64> = (0..self.n).map(|_| self.rng.random_range(-h..=h)).collect();
            if v[1..].iter().all(|&c| c == 0) || !self.seen.insert(v.clone()) {
                continue;
            }
            return Some(v);
        }
    }
}

impl Iterator for CandidateStream {
    type Item = FieldElem;

    fn next(&mut self) -> Option<FieldElem> {
        let v = match self.mode {
            SearchMode::Deterministic => self.next_deterministic(),
            SearchMode::Randomized => self.next_random(),
        }?;
        self.emitted += 1;
        Some(self.field.from_ints(&v))
    }
}

/// Per-candidate filter: `Ok(None)` rejects, `Ok(Some)` proposes a result.
type Filter<'a> = dyn Fn(&FieldElem, u64) -> Result<Option<WitnessedElement>> + Sync + 'a;

/// Drives the filter over the stream in batches and commits results in
/// stream order; `keep` sees each proposal in order and may veto it.
fn drive(
    field: &NumberField,
    count: usize,
    options: &SearchOptions,
    filter: &Filter<'_>,
    mut keep: impl FnMut(&WitnessedElement) -> bool,
) -> Result<Vec<WitnessedElement>> {
    let batch_size = options.batch_size.max(1);
    let mut source: Box<dyn Iterator<Item = FieldElem>> = if field.degree() == 1 {
        // every element generates ℚ; offer 1, 2, 3, …
        let f = field.clone();
        Box::new((1..=options.max_height).map(move |k| f.from_rat(Rat::from_int(k as i64))))
    } else {
        Box::new(enumerate_candidates(field, options)?)
    };
    let pool = match options.threads {
        Some(t) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .map_err(|e| Error::InvalidConfig(e.to_string()))?,
        ),
        None => None,
    };
    let mut results = Vec::with_capacity(count);
    let mut index = 0u64;
    loop {
        let batch: Vec<(u64, FieldElem)> = source
            .by_ref()
            .take(batch_size)
            .map(|a| {
                index += 1;
                (index - 1, a)
            })
            .collect();
        if batch.is_empty() {
            return Err(Error::HeightCapExceeded {
                max_height: options.max_height,
                partial: results,
            });
        }
        let eval = || -> Vec<Result<Option<WitnessedElement>>> {
            batch.par_iter().map(|(i, a)| filter(a, *i)).collect()
        };
        let outcomes = match &pool {
            Some(p) => p.install(eval),
            None => eval(),
        };
        for outcome in outcomes {
            if let Some(w) = outcome? {
                if keep(&w) {
                    results.push(w);
                    if results.len() == count {
                        return Ok(results);
                    }
                }
            }
        }
    }
}

/// Scales `a` so its first nonzero coordinate is 1; equal keys mean the
/// elements differ by a factor in ℚ^×.
fn projective_key(a: &FieldElem) -> Vec<Rat> {
    let Some(pivot) = a.coeffs().iter().find(|c| !c.is_zero()) else {
        return a.coeffs().to_vec();
    };
    let inv = pivot.inv().unwrap();
    a.coeffs().iter().map(|c| c * &inv).collect()
}

fn primitive_certificates(
    field: &NumberField,
    set: &[UPoly],
    a: &FieldElem,
    group: Option<&GaloisGroup>,
) -> Result<Option<Vec<HCertificate>>> {
    let mut certs = Vec::with_capacity(set.len());
    for h in set {
        let value = poly_eval(h, a);
        let report = is_primitive(field, &value)?;
        if !report.is_primitive {
            return Ok(None);
        }
        let normal_det = match group {
            Some(g) => {
                let r = is_normal_generator(g, &value)?;
                if !r.is_normal {
                    return Ok(None);
                }
                Some(r.det_value)
            }
            None => None,
        };
        certs.push(HCertificate {
            h: h.clone(),
            value,
            minpoly: report.minpoly,
            normal_det,
        });
    }
    Ok(Some(certs))
}

fn projective_dedupe(field: &NumberField) -> impl FnMut(&WitnessedElement) -> bool {
    let trivial = field.degree() == 1;
    let mut seen = HashSet::new();
    move |w: &WitnessedElement| trivial || seen.insert(projective_key(&w.a))
}

/// The first `count` candidates `a` with `E = ℚ(h(a))` for every `h ∈ S`,
/// pairwise distinct modulo ℚ^×.
pub fn search_primitive(field: &NumberField, cfg: &SearchConfig) -> Result<Vec<WitnessedElement>> {
    cfg.validate()?;
    assert!(is_separable_ext(field).separable, "fields over ℚ are separable");
    let filter = |a: &FieldElem, i: u64| -> Result<Option<WitnessedElement>> {
        Ok(primitive_certificates(field, &cfg.set, a, None)?.map(|per_h| WitnessedElement {
            a: a.clone(),
            base: None,
            per_h,
            norm_value: None,
            stream_index: i,
        }))
    };
    drive(field, cfg.count, &cfg.options, &filter, projective_dedupe(field))
}

/// As [`search_primitive`], additionally requiring every `h(a)` to generate
/// a normal basis. Fails with [`Error::NotGalois`] for non-Galois fields.
pub fn search_normal(field: &NumberField, cfg: &SearchConfig) -> Result<Vec<WitnessedElement>> {
    cfg.validate()?;
    let group = galois_group(field, &cfg.options.galois)?;
    let filter = |a: &FieldElem, i: u64| -> Result<Option<WitnessedElement>> {
        Ok(
            primitive_certificates(field, &cfg.set, a, Some(&group))?.map(|per_h| WitnessedElement {
                a: a.clone(),
                base: None,
                per_h,
                norm_value: None,
                stream_index: i,
            }),
        )
    };
    drive(field, cfg.count, &cfg.options, &filter, projective_dedupe(field))
}

/// True iff no two of the elements differ by a factor in ℚ^×.
pub fn distinct_mod_scalars(results: &[FieldElem]) -> bool {
    for (i, a) in results.iter().enumerate() {
        for b in &results[i + 1..] {
            let m = QMatrix::from_rows(vec![a.coeffs().to_vec(), b.coeffs().to_vec()]);
            match m.and_then(|m| m.rank()) {
                Ok(2) => {}
                _ => return false,
            }
        }
    }
    true
}

fn x_pow(n: usize) -> UPoly {
    UPoly::monomial(Rat::one(), n)
}

/// `a = bⁿ/N(b)` for candidates `b` with `E = ℚ(bⁿ)` (and, given a group,
/// `bⁿ` normal); `N(a) = 1` and the generating properties transfer to `a`.
fn norm_one_search(
    field: &NumberField,
    count: usize,
    options: &SearchOptions,
    group: Option<&GaloisGroup>,
) -> Result<Vec<WitnessedElement>> {
    validate_count(count)?;
    let n = field.degree();
    if n < 2 {
        return Err(Error::TrivialExtension);
    }
    let set = [x_pow(n)];
    let filter = |b: &FieldElem, i: u64| -> Result<Option<WitnessedElement>> {
        if primitive_certificates(field, &set, b, group)?.is_none() {
            return Ok(None);
        }
        let nb = norm(b);
        let a = b.pow(n as u32).scale(&nb.inv().expect("b is nonzero"));
        let norm_a = norm(&a);
        let mp = minpoly(&a)?;
        let det = group.map(|g| normal_det(g, &a)).transpose()?;
        assert!(norm_a.is_one(), "N(bⁿ/N(b)) = 1");
        assert_eq!(mp.degree(), Some(n), "scaling preserves primitivity");
        assert!(det.as_ref().is_none_or(|d| !d.is_zero()), "scaling preserves normality");
        Ok(Some(WitnessedElement {
            per_h: vec![HCertificate {
                h: UPoly::x(),
                value: a.clone(),
                minpoly: mp,
                normal_det: det,
            }],
            a,
            base: Some(b.clone()),
            norm_value: Some(norm_a),
            stream_index: i,
        }))
    };
    let mut seen = HashSet::new();
    drive(field, count, options, &filter, |w| seen.insert(w.a.clone()))
}

/// Distinct primitive elements of norm one.
pub fn norm_one_primitive(
    field: &NumberField,
    count: usize,
    options: &SearchOptions,
) -> Result<Vec<WitnessedElement>> {
    norm_one_search(field, count, options, None)
}

/// Distinct primitive normal-basis generators of norm one.
pub fn norm_one_normal(
    field: &NumberField,
    count: usize,
    options: &SearchOptions,
) -> Result<Vec<WitnessedElement>> {
    if field.degree() < 2 {
        return Err(Error::TrivialExtension);
    }
    let group = galois_group(field, &options.galois)?;
    norm_one_search(field, count, options, Some(&group))
}

/// A rational point on `x² + bxy + cy² = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PellSolution {
    pub x: Rat,
    pub y: Rat,
}

/// The square root of a nonnegative rational square, if it is one.
fn rational_sqrt(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let sqrt = |z: &num_bigint::BigInt| {
        let r = z.sqrt();
        (&r * &r == *z).then_some(r)
    };
    Some(Rat::new(sqrt(q.numer())?, sqrt(q.denom())?))
}

/// Rational solutions of `x² + bxy + cy² = 1` from norm-one elements
/// `u + vθ` of `ℚ[x]/(x² + bx + c)`, whose norm is `u² − buv + cv²`; the
/// solution is `(u, −v)`.
pub fn pell_solutions(b: &Rat, c: &Rat, count: usize, options: &SearchOptions) -> Result<Vec<PellSolution>> {
    let disc = b * b - Rat::from_int(4) * c;
    if let Some(witness) = rational_sqrt(&disc) {
        return Err(Error::NotAField { witness });
    }
    let field = NumberField::new(&UPoly::new(vec![c.clone(), b.clone(), Rat::one()]))?;
    let found = norm_one_primitive(&field, count, options)?;
    Ok(found
        .iter()
        .map(|w| {
            let u = w.a.coeffs()[0].clone();
            let v = w.a.coeffs()[1].clone();
            let s = PellSolution { x: u, y: -v };
            debug_assert!(pell_form(b, c, &s).is_one());
            s
        })
        .collect())
}

/// `x² + bxy + cy²`.
pub fn pell_form(b: &Rat, c: &Rat, s: &PellSolution) -> Rat {
    &s.x * &s.x + b * &s.x * &s.y + c * &s.y * &s.y
}
