//! Command-line front end: reads a complex as JSON and prints reports.
//!
//! Input documents look like
//! `{"vertices": 4, "maximal_faces": [[1,2],[2,3],[3,4],[4,1]], "name": "square"}`
//! with 1-indexed vertices. Exit codes: 0 on success, 1 for domain errors,
//! 2 for malformed input.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::arrangement::{arrangement, ArrangementField};
use crate::complex::{SimplicialComplex, MAX_VERTICES};
use crate::connectivity::{connectivity_report, pair_connectivity, ExtendedInt};
use crate::error::Error;
use crate::facecat::{cubical_model, object_count};
use crate::graphprod::{GraphProduct, GroupKind, VertexElement};
use crate::homology::{Coefficients, Homology};
use crate::macomplex::{build_real_ma, MAX_MA_VERTICES};
use crate::sralg::{hilbert_series, monomial_basis, GradingMode};

/// A complex as read from or written to disk.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub vertices: usize,
    pub maximal_faces: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl ComplexDocument {
    pub fn to_complex(&self) -> Result<SimplicialComplex, Error> {
        SimplicialComplex::from_maximal_faces(self.vertices, self.maximal_faces.iter().cloned())
    }

    pub fn from_complex(k: &SimplicialComplex, name: Option<String>) -> Self {
        ComplexDocument {
            vertices: k.vertex_count(),
            maximal_faces: k.maximal_faces().into_iter().filter(|f| !f.is_empty()).map(|f| f.to_vec()).collect(),
            name,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Malformed or out-of-range input (exit code 2).
    Input(String),
    /// A well-formed request that the mathematics rejects (exit code 1).
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Input(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Domain(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::VertexOutOfRange { .. }
            | Error::TooManyVertices { .. }
            | Error::WordSyntax(_)
            | Error::LetterKind { .. } => CliError::Input(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

/// Parses a complex document from JSON text.
pub fn parse_complex(text: &str) -> Result<(ComplexDocument, SimplicialComplex), CliError> {
    let doc: ComplexDocument =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid complex document: {e}")))?;
    if doc.vertices > MAX_VERTICES {
        return Err(Error::TooManyVertices { m: doc.vertices, max: MAX_VERTICES }.into());
    }
    let k = doc.to_complex()?;
    Ok((doc, k))
}

#[derive(Parser, Debug)]
#[command(name = "flagtop", version, about = "Invariants of finite simplicial complexes")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// f-vector, dimension, missing faces and connectivity invariants.
    Info { input: Option<PathBuf> },
    /// Print the document of the flagification.
    Flagify { input: Option<PathBuf> },
    /// Hilbert series of the Stanley-Reisner algebra.
    SrHilbert {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Highest power of t to expand.
        #[arg(long, default_value_t = 8)]
        degree: usize,
        input: Option<PathBuf>,
    },
    /// Monomial basis of the Stanley-Reisner algebra in one degree.
    SrBasis {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        degree: usize,
        input: Option<PathBuf>,
    },
    /// Normal form of a word in the graph product over the 1-skeleton.
    WordReduce {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(allow_hyphen_values = true)]
        word: String,
        input: Option<PathBuf>,
    },
    /// Decide whether two words represent the same element.
    WordEqual {
        #[arg(long, value_enum)]
        group: Group,
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
        input: Option<PathBuf>,
    },
    /// Homology of the real moment-angle complex.
    MaHomology {
        #[arg(long)]
        mod2: bool,
        input: Option<PathBuf>,
    },
    /// Cell counts of the cubical model of the face category's classifying space.
    BcatCells { input: Option<PathBuf> },
    /// Maximal subspaces of the coordinate subspace arrangement.
    Arrangement {
        #[arg(long, value_enum)]
        field: Field,
        input: Option<PathBuf>,
    },
    /// c(K, L) and d(K, L) for K inside a second complex L.
    PairConnectivity {
        #[arg(long = "with")]
        with: PathBuf,
        input: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Mode {
    Real,
    Complex,
    Exterior,
}

impl From<Mode> for GradingMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Real => GradingMode::Real,
            Mode::Complex => GradingMode::Complex,
            Mode::Exterior => GradingMode::Exterior,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Group {
    Coxeter,
    Artin,
    Circulation,
}

impl From<Group> for GroupKind {
    fn from(g: Group) -> Self {
        match g {
            Group::Coxeter => GroupKind::Cyclic2,
            Group::Artin => GroupKind::Integer,
            Group::Circulation => GroupKind::Circle,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Field {
    #[value(name = "R")]
    R,
    #[value(name = "C")]
    C,
    #[value(name = "E")]
    E,
}

impl From<Field> for ArrangementField {
    fn from(f: Field) -> Self {
        match f {
            Field::R => ArrangementField::Real,
            Field::C => ArrangementField::Complex,
            Field::E => ArrangementField::Exterior,
        }
    }
}

fn mode_name(mode: GradingMode) -> &'static str {
    match mode {
        GradingMode::Real => "real",
        GradingMode::Complex => "complex",
        GradingMode::Exterior => "exterior",
    }
}

fn read_input(input: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<String, CliError> {
    match input {
        Some(path) if path.as_os_str() != "-" => fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display()))),
        _ => {
            let mut buf = String::new();
            stdin.read_to_string(&mut buf).map_err(|e| CliError::Input(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn load(input: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<(ComplexDocument, SimplicialComplex), CliError> {
    parse_complex(&read_input(input, stdin)?)
}

fn check_ma_size(k: &SimplicialComplex) -> Result<(), CliError> {
    if k.vertex_count() > MAX_MA_VERTICES {
        return Err(Error::TooManyVertices { m: k.vertex_count(), max: MAX_MA_VERTICES }.into());
    }
    Ok(())
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn per_group(f: impl Fn(GroupKind) -> ExtendedInt) -> (String, Value) {
    let text = join(GroupKind::ALL.iter().map(|&g| format!("{}={}", g.symbol(), f(g))));
    let mut map = serde_json::Map::new();
    for g in GroupKind::ALL {
        map.insert(g.symbol().to_string(), json!(f(g)));
    }
    (text, Value::Object(map))
}

fn homology_json(h: &Homology) -> Value {
    let groups: Vec<Value> = h
        .groups
        .iter()
        .enumerate()
        .map(|(k, g)| {
            json!({
                "dim": k,
                "betti": g.betti,
                "torsion": g.torsion.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "coefficients": match h.coefficients { Coefficients::Integers => "Z", Coefficients::Mod2 => "Z/2" },
        "groups": groups,
        "betti": h.betti_numbers(),
    })
}

fn abelian_json(coords: &[Option<VertexElement>]) -> Value {
    Value::Array(
        coords
            .iter()
            .map(|c| match c {
                None => json!(0),
                Some(VertexElement::Flip) => json!(1),
                Some(VertexElement::Power(e)) => json!(e),
                Some(VertexElement::Angle(q)) => json!(format!("{}/{}", q.numer(), q.denom())),
            })
            .collect(),
    )
}

/// Output of one subcommand: a text rendering and a JSON value.
struct Report {
    text: String,
    json: Value,
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Report, CliError> {
    match &cli.command {
        Command::Info { input } => {
            let (doc, k) = load(input, stdin)?;
            let missing = k.missing_faces();
            let report = connectivity_report(&k);
            let (d_text, d_json) = per_group(|g| report.d(g));
            let (dp_text, dp_json) = per_group(|g| report.d_prime(g));
            let mut text = String::new();
            if let Some(name) = &doc.name {
                writeln!(text, "name: {name}").unwrap();
            }
            writeln!(text, "vertices: {}", k.vertex_count()).unwrap();
            writeln!(text, "dimension: {}", k.dim()).unwrap();
            writeln!(text, "f-vector: {}", join(k.f_vector())).unwrap();
            writeln!(text, "flag: {}", report.flag).unwrap();
            let missing_text = if missing.is_empty() { "none".to_string() } else { join(&missing) };
            writeln!(text, "missing faces: {missing_text}").unwrap();
            writeln!(text, "c: {}", report.c).unwrap();
            writeln!(text, "c': {}", report.c_prime).unwrap();
            writeln!(text, "d: {d_text}").unwrap();
            writeln!(text, "d': {dp_text}").unwrap();
            let json = json!({
                "name": doc.name,
                "vertices": k.vertex_count(),
                "dimension": k.dim(),
                "f_vector": k.f_vector(),
                "flag": report.flag,
                "missing_faces": missing.iter().map(|w| w.to_vec()).collect::<Vec<_>>(),
                "connectivity": {
                    "c": report.c,
                    "c_prime": report.c_prime,
                    "d": d_json,
                    "d_prime": dp_json,
                },
            });
            Ok(Report { text, json })
        }
        Command::Flagify { input } => {
            let (doc, k) = load(input, stdin)?;
            let out = ComplexDocument::from_complex(&k.flagify(), doc.name);
            let json = serde_json::to_value(&out).expect("document serialises");
            let text = format!("{}\n", serde_json::to_string(&out).expect("document serialises"));
            Ok(Report { text, json })
        }
        Command::SrHilbert { mode, degree, input } => {
            let (_, k) = load(input, stdin)?;
            let mode = GradingMode::from(*mode);
            let series = hilbert_series(&k, mode);
            let coeffs = series.expand(*degree);
            let text = format!(
                "mode: {}\nseries: {series}\ncoefficients: {}\n",
                mode_name(mode),
                join(&coeffs)
            );
            let json = json!({
                "mode": mode_name(mode),
                "numerator": series.numerator.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "denominator": { "generator_degree": series.generator_degree, "power": series.denominator_power },
                "coefficients": coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            });
            Ok(Report { text, json })
        }
        Command::SrBasis { mode, degree, input } => {
            let (_, k) = load(input, stdin)?;
            let mode = GradingMode::from(*mode);
            let basis = monomial_basis(&k, mode, *degree);
            let mut text = format!("mode: {}\ndegree: {degree}\ncount: {}\n", mode_name(mode), basis.len());
            for b in &basis {
                writeln!(text, "{b}").unwrap();
            }
            let json = json!({
                "mode": mode_name(mode),
                "degree": degree,
                "basis": basis.iter().map(|b| b.vertices().to_vec()).collect::<Vec<_>>(),
            });
            Ok(Report { text, json })
        }
        Command::WordReduce { group, word, input } => {
            let (_, k) = load(input, stdin)?;
            let g = GraphProduct::new((*group).into(), &k);
            let w = g.parse_word(word)?;
            let normal = g.reduce(&w)?;
            let blocks = g.cartier_foata_blocks(&w)?;
            let abelian = g.abelianize(&w)?;
            let text = format!("{normal}\n");
            let json = json!({
                "group": g.kind().family(),
                "normal_form": normal.to_string(),
                "wordlength": normal.len(),
                "blocks": blocks.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
                "abelianization": abelian_json(&abelian),
                "in_commutator_subgroup": g.in_commutator_subgroup(&w)?,
            });
            Ok(Report { text, json })
        }
        Command::WordEqual { group, first, second, input } => {
            let (_, k) = load(input, stdin)?;
            let g = GraphProduct::new((*group).into(), &k);
            let (a, b) = (g.parse_word(first)?, g.parse_word(second)?);
            let equal = g.equal(&a, &b)?;
            Ok(Report { text: format!("{equal}\n"), json: json!({ "equal": equal }) })
        }
        Command::MaHomology { mod2, input } => {
            let (_, k) = load(input, stdin)?;
            check_ma_size(&k)?;
            let coefficients = if *mod2 { Coefficients::Mod2 } else { Coefficients::Integers };
            let model = build_real_ma(&k)?;
            let h = model.homology(coefficients)?;
            let mut text = format!(
                "coefficients: {}\ncells: {}\n",
                if *mod2 { "Z/2" } else { "Z" },
                join(model.cell_counts())
            );
            write!(text, "{h}").unwrap();
            writeln!(text, "betti: {}", join(h.betti_numbers())).unwrap();
            let mut json = homology_json(&h);
            json["cells"] = json!(model.cell_counts());
            Ok(Report { text, json })
        }
        Command::BcatCells { input } => {
            let (_, k) = load(input, stdin)?;
            let model = cubical_model(&k);
            let text = format!(
                "objects: {}\ncells: {}\ntotal: {}\neuler characteristic: {}\n",
                object_count(&k),
                join(model.cell_counts()),
                model.len(),
                model.euler_characteristic()
            );
            let json = json!({
                "objects": object_count(&k),
                "cells": model.cell_counts(),
                "total": model.len(),
                "euler_characteristic": model.euler_characteristic(),
            });
            Ok(Report { text, json })
        }
        Command::Arrangement { field, input } => {
            let (_, k) = load(input, stdin)?;
            let a = arrangement(&k, (*field).into());
            let mut text = format!("field: {}\ngenerators: {}\n", a.field, a.generators.len());
            for &w in &a.generators {
                writeln!(text, "{w} codim {}", a.codimension(w)).unwrap();
            }
            let json = json!({
                "field": a.field.symbol(),
                "generators": a.generators.iter().map(|&w| json!({
                    "vertices": w.to_vec(),
                    "real_codimension": a.codimension(w),
                })).collect::<Vec<_>>(),
            });
            Ok(Report { text, json })
        }
        Command::PairConnectivity { with, input } => {
            let (_, k) = load(input, stdin)?;
            let (_, l) = load(&Some(with.clone()), stdin)?;
            let p = pair_connectivity(&k, &l)?;
            let (d_text, d_json) = per_group(|g| p.d(g));
            let text = format!("c(K,L): {}\nd(K,L): {d_text}\n", p.c);
            Ok(Report { text, json: json!({ "c": p.c, "d": d_json }) })
        }
    }
}

/// Runs the CLI on explicit arguments and streams, returning the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(&cli, stdin) {
        Ok(report) => {
            let out = if cli.json {
                format!("{}\n", serde_json::to_string_pretty(&report.json).expect("json output"))
            } else {
                report.text
            };
            let _ = stdout.write_all(out.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message());
            e.exit_code()
        }
    }
}

pub fn main() -> ExitCode {
    let code = run(std::env::args_os(), &mut io::stdin(), &mut io::stdout(), &mut io::stderr());
    ExitCode::from(code)
}
