//! Command-line front end. [`run`] takes the argument vector and returns the
//! exit code and both output streams, so it can be driven from tests without
//! spawning a process; the `fieldlab` binary only prints the [`Outcome`].

pub mod doc;

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::criteria::{galois_verdict, is_separable_ext, no_low_degree_relation};
use crate::error::Error;
use crate::exact::{poly_eval, Rat, UPoly};
use crate::field::{FieldOptions, NumberField};
use crate::galois::{galois_group, GaloisOptions};
use crate::parse::{parse_poly, parse_poly_list};
use crate::search::{
    norm_one_normal, norm_one_primitive, pell_solutions, search_normal, search_primitive, PellSolution,
    SearchConfig, SearchMode, SearchOptions, WitnessedElement,
};

pub use doc::{verify_document, OutputDocument, VerifyError};
use doc::{AnalysisDoc, DensityDoc, Diagnostics, ErrorDoc, FieldDoc, PellDoc, ResultDoc, Timings, WitnessDoc};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_NOT_GALOIS: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_CAP: i32 = 5;

const AFTER_HELP: &str = "\
Polynomials are written in x with explicit `*`, e.g. \"x^4 - 10*x^2 + 1\" or
\"1/2*x^3 + x\". Sets of polynomials are separated by `;`.

Text output prints field elements in the power basis as \"3/5 + 4/5*θ\".
With --json a single document (schema_version \"1\") is printed instead; all
rationals in it are \"p/q\" strings and elements are arrays of them.

Exit codes: 0 success, 2 invalid input, 3 field not Galois, 4 height budget
exhausted (partial results are still printed), 5 degree or precision cap.";

#[derive(Debug, Parser)]
#[command(name = "fieldlab", version, about = "Exact computations in number fields over Q", after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest candidate height searched.
    #[arg(long, global = true, env = "FIELDLAB_MAX_HEIGHT", default_value_t = 1000)]
    max_height: u64,
    /// Seed for --randomized.
    #[arg(long, global = true, env = "FIELDLAB_SEED", default_value_t = 0)]
    seed: u64,
    /// Draw candidates at random from each height box instead of in order.
    #[arg(long, global = true)]
    randomized: bool,
    /// Largest field degree for automorphism computations.
    #[arg(long, global = true, env = "FIELDLAB_DEGREE_CAP", default_value_t = 8)]
    degree_cap: usize,
    /// Largest prime tried for irreducibility certificates and split primes.
    #[arg(long, global = true)]
    prime_bound: Option<u64>,
    /// Worker threads for candidate evaluation.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Separability, automorphisms and the Galois verdict for Q[x]/(f).
    Analyze {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Elements a with h(a) primitive for every h in the set.
    Primitive {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Elements a with h(a) a normal-basis generator for every h in the set.
    Normal {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Primitive elements of norm one.
    NormOne {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Also require a normal-basis generator (Galois fields only).
        #[arg(long)]
        normal: bool,
    },
    /// Rational points on x^2 + b*x*y + c*y^2 = 1.
    Pell {
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Checks that (h1(t1), ..., hk(tk)) over the grid {-m..m}^k satisfies
    /// no polynomial relation of degree <= d.
    DensityProbe {
        #[arg(allow_hyphen_values = true)]
        polys: String,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long, default_value_t = 10)]
        grid: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Analyze { .. } => "analyze",
            Command::Primitive { .. } => "primitive",
            Command::Normal { .. } => "normal",
            Command::NormOne { .. } => "norm-one",
            Command::Pell { .. } => "pell",
            Command::DensityProbe { .. } => "density-probe",
        }
    }
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit code for an error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NotGalois { .. } => EXIT_NOT_GALOIS,
        Error::HeightCapExceeded { .. } => EXIT_BUDGET,
        Error::DegreeCapExceeded { .. } | Error::PrecisionCapExceeded { .. } | Error::NoSplitPrimeFound { .. } => {
            EXIT_CAP
        }
        _ => EXIT_INVALID_INPUT,
    }
}

fn error_kind(err: &Error) -> &'static str {
    match err {
        Error::ZeroPolynomial => "zero_polynomial",
        Error::ConstantPolynomial => "constant_polynomial",
        Error::NotSquarefree { .. } => "not_squarefree",
        Error::RationalRoot { .. } => "rational_root",
        Error::DivisionByZero => "division_by_zero",
        Error::ZeroDivisor { .. } => "zero_divisor",
        Error::BoundTooLargeForModulus { .. } => "bound_too_large",
        Error::DimensionMismatch(_) => "dimension_mismatch",
        Error::FieldMismatch => "field_mismatch",
        Error::NoSplitPrimeFound { .. } => "no_split_prime",
        Error::DegreeCapExceeded { .. } => "degree_cap_exceeded",
        Error::PrecisionCapExceeded { .. } => "precision_cap_exceeded",
        Error::NotGalois { .. } => "not_galois",
        Error::TrivialExtension => "trivial_extension",
        Error::HeightCapExceeded { .. } => "height_cap_exceeded",
        Error::NotAField { .. } => "not_a_field",
        Error::InsufficientSample { .. } => "insufficient_sample",
        Error::Syntax { .. } => "syntax",
        Error::EmptyInput => "empty_input",
        Error::InvalidConfig(_) => "invalid_config",
    }
}

struct Ctx {
    json: bool,
    search: SearchOptions,
    field_options: FieldOptions,
}

struct Report {
    field: Option<NumberField>,
    results: Vec<ResultDoc>,
    text: String,
    diagnostics: Diagnostics,
    error: Option<Error>,
}

impl Report {
    fn new() -> Self {
        Report {
            field: None,
            results: Vec::new(),
            text: String::new(),
            diagnostics: Diagnostics::default(),
            error: None,
        }
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: rendered }
            } else {
                Outcome { code, stdout: rendered, stderr: String::new() }
            };
        }
    };
    let start = Instant::now();
    let mut galois = GaloisOptions {
        degree_cap: cli.degree_cap,
        ..GaloisOptions::default()
    };
    let mut field_options = FieldOptions::default();
    if let Some(p) = cli.prime_bound {
        galois.prime_bound = p;
        field_options.prime_bound = p;
        field_options.split_prime_bound = p;
    }
    let ctx = Ctx {
        json: cli.json,
        search: SearchOptions {
            max_height: cli.max_height,
            seed: cli.seed,
            mode: if cli.randomized { SearchMode::Randomized } else { SearchMode::Deterministic },
            threads: cli.threads,
            galois,
            ..SearchOptions::default()
        },
        field_options,
    };
    let mut report = Report::new();
    if let Err(e) = execute(&cli.command, &ctx, &mut report) {
        report.error = Some(e);
    }
    report.diagnostics.timings = Timings {
        total_us: start.elapsed().as_micros() as u64,
    };
    finish(cli.command.name(), &ctx, report)
}

fn finish(command: &str, ctx: &Ctx, report: Report) -> Outcome {
    let code = report.error.as_ref().map_or(EXIT_OK, exit_code);
    let stderr = report
        .error
        .as_ref()
        .map(|e| format!("error: {e}\n"))
        .unwrap_or_default();
    let stdout = if ctx.json {
        let doc = OutputDocument {
            schema_version: doc::SCHEMA_VERSION.into(),
            command: command.into(),
            field: report.field.as_ref().map(FieldDoc::new),
            results: report.results,
            diagnostics: report.diagnostics,
            error: report.error.as_ref().map(|e| ErrorDoc {
                kind: error_kind(e).into(),
                message: e.to_string(),
                exit_code: code,
            }),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("document serializes");
        s.push('\n');
        s
    } else {
        report.text
    };
    Outcome { code, stdout, stderr }
}

fn build_field(poly: &str, ctx: &Ctx, report: &mut Report) -> Result<NumberField, Error> {
    let f = parse_poly(poly)?;
    let field = NumberField::with_options(&f, ctx.field_options)?;
    let _ = writeln!(report.text, "field Q[x]/({}) of degree {}", field.minpoly(), field.degree());
    report.field = Some(field.clone());
    Ok(field)
}

fn search_diagnostics(ctx: &Ctx, report: &mut Report) {
    let o = &ctx.search;
    report.diagnostics.seed = Some(o.seed);
    report.diagnostics.max_height = Some(o.max_height);
    report.diagnostics.mode = Some(
        match o.mode {
            SearchMode::Deterministic => "deterministic",
            SearchMode::Randomized => "randomized",
        }
        .into(),
    );
}

fn push_witnesses(found: &[WitnessedElement], report: &mut Report) {
    for (i, w) in found.iter().enumerate() {
        let _ = writeln!(report.text, "#{} a = {}", i + 1, w.a);
        if let Some(b) = &w.base {
            let _ = writeln!(report.text, "   from b = {b}");
        }
        for c in &w.per_h {
            let _ = write!(report.text, "   h = {}: h(a) = {}, minpoly {}", c.h, c.value, c.minpoly);
            if let Some(d) = &c.normal_det {
                let _ = write!(report.text, ", normal det {d}");
            }
            report.text.push('\n');
        }
        if let Some(nv) = &w.norm_value {
            let _ = writeln!(report.text, "   norm {nv}");
        }
        report.results.push(ResultDoc::Witness(WitnessDoc::new(w)));
    }
}

/// Emits whatever a search produced, including the partial list carried by
/// a height-cap error, then propagates the error.
fn emit_search<F>(
    outcome: Result<Vec<WitnessedElement>, Error>,
    report: &mut Report,
    emit: F,
) -> Result<(), Error>
where
    F: Fn(&[WitnessedElement], &mut Report),
{
    match outcome {
        Ok(found) => {
            emit(&found, report);
            Ok(())
        }
        Err(Error::HeightCapExceeded { max_height, partial }) => {
            emit(&partial, report);
            Err(Error::HeightCapExceeded { max_height, partial })
        }
        Err(e) => Err(e),
    }
}

/// Rejects flag combinations before any field is built.
fn validate(command: &Command, ctx: &Ctx) -> Result<(), Error> {
    if ctx.search.threads == Some(0) {
        return Err(Error::InvalidConfig("--threads must be at least 1".into()));
    }
    match command {
        Command::Primitive { count, .. }
        | Command::Normal { count, .. }
        | Command::NormOne { count, .. }
        | Command::Pell { count, .. }
            if *count == 0 =>
        {
            Err(Error::InvalidConfig("--count must be at least 1".into()))
        }
        Command::DensityProbe { grid, .. } if *grid > 1000 => {
            Err(Error::InvalidConfig("--grid must be at most 1000".into()))
        }
        _ => Ok(()),
    }
}

fn execute(command: &Command, ctx: &Ctx, report: &mut Report) -> Result<(), Error> {
    validate(command, ctx)?;
    match command {
        Command::Analyze { poly } => analyze(poly, ctx, report),
        Command::Primitive { poly, set, count } | Command::Normal { poly, set, count } => {
            let set = parse_poly_list(set)?;
            let field = build_field(poly, ctx, report)?;
            let cfg = SearchConfig::new(set, *count).with_options(ctx.search.clone());
            search_diagnostics(ctx, report);
            let outcome = if matches!(command, Command::Normal { .. }) {
                let group = galois_group(&field, &ctx.search.galois)?;
                report.diagnostics.prime = group.prime();
                report.diagnostics.precision = Some(group.precision());
                search_normal(&field, &cfg)
            } else {
                search_primitive(&field, &cfg)
            };
            emit_search(outcome, report, push_witnesses)
        }
        Command::NormOne { poly, count, normal } => {
            let field = build_field(poly, ctx, report)?;
            search_diagnostics(ctx, report);
            let outcome = if *normal {
                let group = galois_group(&field, &ctx.search.galois)?;
                report.diagnostics.prime = group.prime();
                report.diagnostics.precision = Some(group.precision());
                norm_one_normal(&field, *count, &ctx.search)
            } else {
                norm_one_primitive(&field, *count, &ctx.search)
            };
            emit_search(outcome, report, push_witnesses)
        }
        Command::Pell { b, c, count } => {
            let parse = |s: &str| -> Result<Rat, Error> {
                match parse_poly(s)? {
                    p if p.degree().unwrap_or(0) == 0 => Ok(p.coeff(0)),
                    _ => Err(Error::InvalidConfig(format!("`{s}` is not a rational number"))),
                }
            };
            let (b, c) = (parse(b)?, parse(c)?);
            search_diagnostics(ctx, report);
            let emit = |sols: &[PellSolution], report: &mut Report| {
                for s in sols {
                    let _ = writeln!(report.text, "(x, y) = ({}, {})", s.x, s.y);
                    report.results.push(ResultDoc::Pell(PellDoc::new(&b, &c, s)));
                }
            };
            let _ = writeln!(report.text, "x^2 + ({b})*x*y + ({c})*y^2 = 1");
            match pell_solutions(&b, &c, *count, &ctx.search) {
                Ok(sols) => {
                    emit(&sols, report);
                    Ok(())
                }
                Err(Error::HeightCapExceeded { max_height, partial }) => {
                    let sols: Vec<PellSolution> = partial
                        .iter()
                        .map(|w| PellSolution {
                            x: w.a.coeffs()[0].clone(),
                            y: -w.a.coeffs()[1].clone(),
                        })
                        .collect();
                    emit(&sols, report);
                    Err(Error::HeightCapExceeded { max_height, partial })
                }
                Err(e) => Err(e),
            }
        }
        Command::DensityProbe { polys, degree, grid } => density_probe(polys, *degree, *grid, report),
    }
}

fn analyze(poly: &str, ctx: &Ctx, report: &mut Report) -> Result<(), Error> {
    let field = build_field(poly, ctx, report)?;
    let sep = is_separable_ext(&field);
    let verdict = galois_verdict(&field, &ctx.search.galois)?;
    let set = &verdict.automorphisms;
    report.diagnostics.prime = set.prime;
    report.diagnostics.precision = Some(set.precision);
    let _ = writeln!(
        report.text,
        "trace form determinant {} ({})",
        sep.gram_determinant,
        if sep.separable { "separable" } else { "inseparable" }
    );
    let _ = writeln!(report.text, "automorphisms: {}", set.automorphisms.len());
    for (i, s) in set.automorphisms.iter().enumerate() {
        let _ = writeln!(report.text, "  σ{i}: {s}");
    }
    let table = if verdict.is_galois {
        Some(galois_group(&field, &ctx.search.galois)?.table().to_vec())
    } else {
        None
    };
    let _ = writeln!(
        report.text,
        "Galois: {} (density rank {})",
        if verdict.is_galois { "yes" } else { "no" },
        verdict.density_rank
    );
    report.results.push(ResultDoc::Analysis(AnalysisDoc {
        degree: field.degree(),
        gram_determinant: sep.gram_determinant.to_exact_string(),
        separable: sep.separable,
        automorphisms: set.automorphisms.iter().map(|s| doc::elem_doc(s.image())).collect(),
        galois: verdict.is_galois,
        density_rank: verdict.density_rank,
        composition_table: table,
    }));
    Ok(())
}

/// All points `(h1(t1), ..., hk(tk))` for `t ∈ {-m..m}^k`.
pub fn density_points(polys: &[UPoly], grid: u64) -> Vec<Vec<Rat>> {
    let m = grid as i64;
    let values: Vec<Vec<Rat>> = polys
        .iter()
        .map(|h| (-m..=m).map(|t| poly_eval(h, &Rat::from_int(t))).collect())
        .collect();
    let mut points = vec![Vec::new()];
    for vs in &values {
        points = points
            .into_iter()
            .flat_map(|p| {
                vs.iter().map(move |v| {
                    let mut q = p.clone();
                    q.push(v.clone());
                    q
                })
            })
            .collect();
    }
    points
}

fn density_probe(polys: &str, degree: usize, grid: u64, report: &mut Report) -> Result<(), Error> {
    let hs = parse_poly_list(polys)?;
    let points = density_points(&hs, grid);
    let no_relation = no_low_degree_relation(&points, degree)?;
    let k = hs.len();
    let monomials = (1..=degree).fold(1usize, |acc, i| acc * (k + i) / i);
    let _ = writeln!(
        report.text,
        "{} points, {} monomials of degree <= {}: {}",
        points.len(),
        monomials,
        degree,
        if no_relation { "no relation" } else { "relation found" }
    );
    report.results.push(ResultDoc::DensityProbe(DensityDoc {
        polynomials: hs.iter().map(UPoly::to_string).collect(),
        degree,
        grid,
        points: points.len(),
        monomials,
        no_relation,
    }));
    Ok(())
}
