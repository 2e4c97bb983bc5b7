//! Command-line front end: parse a Schubert variety and a fixed point, run
//! one of the backends and print the requested artifact.

pub mod json;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, ValueEnum};
use num_bigint::BigInt;

use schubert_core::diagrams::{energies, enumerate_eyd};
use schubert_core::hecke::DEFAULT_CAP;
use schubert_core::restriction::{
    expansion, graded_character, hilbert_data, pullback_b_via_d, pullback_with, Backend, Expansion, HilbertData, Problem,
};
use schubert_core::ring::LaurentPoly;
use schubert_core::tableaux::{enumerate_svt, SetValuedTableau};
use schubert_core::weyl::{parse_list, Kind};

use json::{
    class_to_json, diagram_to_json, hilbert_to_json, monomials, tableau_to_json, CharacterJson, CheckJson, Document,
    PolynomialJson, SliceJson,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Class,
    Hilbert,
    HilbertPoly,
    Mult,
    Diagrams,
    Tableaux,
    Character,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BackendArg {
    Eyd,
    Svt,
    Hecke,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Backend {
        match b {
            BackendArg::Eyd => Backend::Eyd,
            BackendArg::Svt => Backend::Svt,
            BackendArg::Hecke => Backend::Hecke,
        }
    }
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse::<Kind>().map_err(|e| e.to_string())
}

/// Restrictions of Schubert structure sheaves to torus fixed points.
///
/// Give the variety and the point either as windows (--w, --v) or as
/// shapes (--lambda, --mu).
#[derive(Debug, Parser)]
#[command(name = "schubert", version)]
pub struct Cli {
    /// Root system type: A, B, C or D.
    #[arg(long = "type", value_parser = parse_kind)]
    pub kind: Kind,
    /// Rank (n).
    #[arg(long = "n", visible_alias = "rank")]
    pub n: usize,
    /// Grassmannian parameter (type A only).
    #[arg(long)]
    pub d: Option<usize>,
    /// Window of w, e.g. 1,3,5,2,4,6,7 or 1,2,-4,-3.
    #[arg(long, allow_hyphen_values = true)]
    pub w: Option<String>,
    /// Window of v.
    #[arg(long, allow_hyphen_values = true)]
    pub v: Option<String>,
    /// Shape of w (partition in type A, strict partition otherwise).
    #[arg(long)]
    pub lambda: Option<String>,
    /// Shape of v.
    #[arg(long)]
    pub mu: Option<String>,
    #[arg(long, value_enum, default_value = "eyd")]
    pub backend: BackendArg,
    #[arg(long, value_enum, default_value = "class")]
    pub emit: Emit,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Highest degree for --emit character and the values of --emit hilbert-poly.
    #[arg(long, default_value_t = 5)]
    pub trunc: usize,
    /// Print only the number of diagrams or tableaux.
    #[arg(long)]
    pub count_only: bool,
    /// Run every backend and compare the classes.
    #[arg(long)]
    pub check: bool,
    /// Only reduced diagrams (type 1 excitations) or single-valued tableaux.
    #[arg(long)]
    pub reduced_only: bool,
    /// Longest word the Hecke backend will enumerate.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Worker threads for the backends.
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

/// First disagreement between two backend classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub first: String,
    pub second: String,
    pub exp: Vec<i32>,
    pub first_coef: BigInt,
    pub second_coef: BigInt,
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} and {} differ at e^{{{}}}: {} vs {}",
            self.first,
            self.second,
            schubert_core::ring::format_weight(&self.exp),
            self.first_coef,
            self.second_coef
        )
    }
}

/// Compare named classes against the first one; report the smallest
/// exponent vector where some class differs.
pub fn compare_classes(classes: &[(String, LaurentPoly)]) -> Result<(), Box<Mismatch>> {
    let Some((name0, c0)) = classes.first() else { return Ok(()) };
    for (name, c) in &classes[1..] {
        let exps: std::collections::BTreeSet<&Vec<i32>> = c0.terms().chain(c.terms()).map(|(e, _)| e).collect();
        for e in exps {
            let (a, b) = (c0.coefficient(e), c.coefficient(e));
            if a != b {
                return Err(Box::new(Mismatch {
                    first: name0.clone(),
                    second: name.clone(),
                    exp: e.clone(),
                    first_coef: a,
                    second_coef: b,
                }));
            }
        }
    }
    Ok(())
}

/// Classes from every applicable backend: all three, plus the `D_{n+1}`
/// route in type B.
pub fn backend_classes(p: &Problem, cap: usize) -> schubert_core::Result<Vec<(String, LaurentPoly)>> {
    let mut out = Vec::new();
    for b in Backend::ALL {
        out.push((b.to_string(), pullback_with(p, b, cap)?.value));
    }
    if p.kind() == Kind::B {
        out.push(("eyd via D".to_string(), pullback_b_via_d(p, Backend::Eyd, cap)?.value));
    }
    Ok(out)
}

enum Failure {
    Input(String),
    Mismatch(String),
}

impl From<schubert_core::Error> for Failure {
    fn from(e: schubert_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Parse `args` (including the program name), run and print. Returns the
/// exit code: 0 success, 1 backend mismatch, 2 invalid input.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{text}");
                0
            } else {
                let _ = write!(err, "{text}");
                2
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads.max(1)).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let mut buf = String::new();
    let result = pool.install(|| execute(&cli, &mut buf));
    let _ = out.write_all(buf.as_bytes());
    match result {
        Ok(()) => 0,
        Err(Failure::Mismatch(msg)) => {
            let _ = writeln!(err, "mismatch: {msg}");
            1
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn parse_problem(cli: &Cli) -> Result<Problem, Failure> {
    let d = if cli.kind == Kind::A { cli.d } else { cli.d.or(Some(cli.n)) };
    match (&cli.w, &cli.v, &cli.lambda, &cli.mu) {
        (Some(w), Some(v), None, None) => {
            Ok(Problem::from_windows(cli.kind, cli.n, d, &parse_list::<i32>(w)?, &parse_list::<i32>(v)?)?)
        }
        (None, None, Some(l), Some(m)) => {
            Ok(Problem::from_shapes(cli.kind, cli.n, d, &parse_list::<usize>(l)?, &parse_list::<usize>(m)?)?)
        }
        _ => Err(Failure::Input("give either --w and --v, or --lambda and --mu".into())),
    }
}

fn document(p: &Problem) -> Document {
    Document {
        kind: p.kind().to_string(),
        rank: p.rank(),
        d: p.d(),
        w: p.w().window().to_vec(),
        v: p.v().window().to_vec(),
        lambda: p.lambda(),
        mu: p.mu(),
        status: if p.on_variety() { "on-variety" } else { "off-variety" }.into(),
        ..Document::default()
    }
}

fn latex_terms(mu: &[i32], positive_first: bool) -> String {
    let mut idx: Vec<usize> = (0..mu.len()).filter(|&i| mu[i] != 0).collect();
    if positive_first {
        idx.sort_by_key(|&i| (mu[i] < 0, i));
    }
    let mut s = String::new();
    for i in idx {
        let c = mu[i];
        if c < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if c.abs() != 1 {
            s.push_str(&c.abs().to_string());
        }
        let _ = write!(s, "\\varepsilon_{{{}}}", i + 1);
    }
    s
}

/// `e^{-r}-1`, written `e^{-(a+b)}` when `r` is a sum of several positive
/// terms and with positive terms first otherwise.
fn latex_factor(r: &[i32]) -> String {
    let nonzero = r.iter().filter(|&&x| x != 0).count();
    if nonzero > 1 && r.iter().all(|&x| x >= 0) {
        return format!("(e^{{-({})}}-1)", latex_terms(r, true));
    }
    let neg: Vec<i32> = r.iter().map(|x| -x).collect();
    format!("(e^{{{}}}-1)", latex_terms(&neg, true))
}

/// Factored display: `±Σ Π (e^{-r}-1)`.
pub fn latex_expansion(e: &Expansion) -> String {
    if e.terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, term) in e.terms.iter().enumerate() {
        let sign = if e.negative { "-" } else { "+" };
        if k == 0 {
            if e.negative {
                s.push('-');
            }
        } else {
            let _ = write!(s, " {sign} ");
        }
        if term.is_empty() {
            s.push('1');
        }
        for r in term.iter().rev() {
            s.push_str(&latex_factor(r));
        }
    }
    s
}

fn hilbert_series_text(h: &HilbertData) -> String {
    if h.m.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, &c) in h.m.iter().enumerate() {
        if k > 0 {
            s.push_str(if k % 2 == 0 { " + " } else { " - " });
        }
        let _ = write!(s, "{c}/(1-t)^{}", h.d_w - k);
    }
    s
}

/// `c_k n^k + ... + c_0` from coefficient strings, highest degree first.
fn polynomial_text(coefs: &[String]) -> String {
    let mut s = String::new();
    for (e, c) in coefs.iter().enumerate().rev() {
        if c == "0" {
            continue;
        }
        let (neg, abs) = match c.strip_prefix('-') {
            Some(a) => (true, a),
            None => (false, c.as_str()),
        };
        match (s.is_empty(), neg) {
            (true, true) => s.push('-'),
            (true, false) => {}
            (false, true) => s.push_str(" - "),
            (false, false) => s.push_str(" + "),
        }
        let var = match e {
            0 => String::new(),
            1 => "n".into(),
            _ => format!("n^{e}"),
        };
        if var.is_empty() {
            s.push_str(abs);
        } else if abs == "1" {
            s.push_str(&var);
        } else if abs.contains('/') {
            let _ = write!(s, "({abs}) {var}");
        } else {
            let _ = write!(s, "{abs} {var}");
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn tableau_text(t: &SetValuedTableau) -> String {
    let mut s = String::new();
    let mut row = 0;
    for (&(i, j), set) in t.cells() {
        if i != row {
            if row != 0 {
                s.push('\n');
            }
            row = i;
            let first = if t.geometry().is_shifted() { i } else { 1 };
            s.push_str(&"  ".repeat(j - first + if t.geometry().is_shifted() { i - 1 } else { 0 }));
        } else {
            s.push(' ');
        }
        let entries: Vec<String> = set.iter().map(|x| x.to_string()).collect();
        if set.len() == 1 {
            s.push_str(&entries[0]);
        } else {
            let _ = write!(s, "{{{}}}", entries.join(","));
        }
    }
    s.push('\n');
    s
}

fn emit_json(out: &mut String, doc: &Document) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(doc).map_err(|e| Failure::Input(e.to_string()))?;
    out.push_str(&text);
    out.push('\n');
    Ok(())
}

fn execute(cli: &Cli, out: &mut String) -> Result<(), Failure> {
    let p = parse_problem(cli)?;
    if cli.check {
        return run_check(cli, &p, out);
    }
    let mut doc = document(&p);
    let json = cli.format == Format::Json;
    let latex = cli.format == Format::Latex;
    let via = (p.kind() == Kind::B).then(|| format!("D{}", p.rank() + 1));
    match cli.emit {
        Emit::Class => {
            let e = expansion(&p, cli.backend.into(), cli.cap)?;
            let value = e.to_poly();
            if json {
                doc.backend = Some(Backend::from(cli.backend).to_string());
                doc.class = Some(class_to_json(&value));
                return emit_json(out, &doc);
            }
            if latex {
                let _ = writeln!(out, "{}", latex_expansion(&e));
            } else {
                let _ = writeln!(out, "{value}");
            }
        }
        Emit::Hilbert | Emit::Mult => {
            let h = hilbert_data(&p)?;
            if json {
                doc.multiplicity = Some(h.multiplicity());
                if cli.emit == Emit::Hilbert {
                    doc.hilbert = Some(hilbert_to_json(&h, via));
                }
                return emit_json(out, &doc);
            }
            if cli.emit == Emit::Mult {
                let _ = writeln!(out, "{}", h.multiplicity());
                return Ok(());
            }
            if let Some(via) = &via {
                let _ = writeln!(out, "type B Hilbert data computed in {via}");
            }
            if !p.on_variety() {
                let _ = writeln!(out, "status: off-variety");
            }
            let m: Vec<String> = h.m.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "d_w={}", h.d_w);
            let _ = writeln!(out, "m=[{}]", m.join(","));
            let _ = writeln!(out, "mult={}", h.multiplicity());
            let _ = writeln!(out, "H(t) = {}", hilbert_series_text(&h));
        }
        Emit::HilbertPoly => {
            let h = hilbert_data(&p)?;
            let coefficients: Vec<String> = if h.m.is_empty() {
                vec!["0".into()]
            } else {
                h.polynomial().iter().map(|c| c.to_string()).collect()
            };
            let values: Vec<String> = (0..=cli.trunc).map(|i| h.hilbert_function(i).to_string()).collect();
            if json {
                doc.hilbert = Some(hilbert_to_json(&h, via));
                doc.hilbert_polynomial = Some(PolynomialJson { coefficients, values });
                return emit_json(out, &doc);
            }
            if let Some(via) = &via {
                let _ = writeln!(out, "type B Hilbert data computed in {via}");
            }
            let _ = writeln!(out, "h(n) = {}", polynomial_text(&coefficients));
            let _ = writeln!(out, "h(0..={}) = {}", cli.trunc, values.join(", "));
        }
        Emit::Diagrams => {
            let (lambda, mu, g) = (p.lambda(), p.mu(), p.geometry());
            let list = if p.on_variety() { enumerate_eyd(&lambda, &mu, g, cli.reduced_only)? } else { Vec::new() };
            if json {
                doc.count = Some(list.len());
                if !cli.count_only {
                    doc.diagrams = Some(list.iter().map(|c| diagram_to_json(c, &lambda)).collect());
                }
                return emit_json(out, &doc);
            }
            let _ = writeln!(out, "{}", list.len());
            if cli.count_only {
                return Ok(());
            }
            for (k, c) in list.iter().enumerate() {
                let (e1, e2) = energies(c, &lambda);
                let _ = writeln!(out, "\ndiagram {}: {} boxes, e1={e1}, e2={e2}", k + 1, c.len());
                out.push_str(&c.render());
            }
        }
        Emit::Tableaux => {
            let (lambda, mu, g) = (p.lambda(), p.mu(), p.geometry());
            let list = if p.on_variety() { enumerate_svt(&lambda, &mu, g, cli.reduced_only)? } else { Vec::new() };
            if json {
                doc.count = Some(list.len());
                if !cli.count_only {
                    doc.tableaux = Some(list.iter().map(tableau_to_json).collect());
                }
                return emit_json(out, &doc);
            }
            let _ = writeln!(out, "{}", list.len());
            if cli.count_only {
                return Ok(());
            }
            for (k, t) in list.iter().enumerate() {
                let _ = writeln!(out, "\ntableau {}: {} entries", k + 1, t.entry_count());
                out.push_str(&tableau_text(t));
            }
        }
        Emit::Character => {
            let series = graded_character(&p, cli.trunc)?;
            let dims = series.dims();
            if json {
                let slices = series
                    .slices
                    .iter()
                    .zip(&dims)
                    .enumerate()
                    .map(|(degree, (s, dim))| SliceJson { degree, dim: dim.to_string(), monomials: monomials(s) })
                    .collect();
                doc.character = Some(CharacterJson { trunc: cli.trunc, slices });
                return emit_json(out, &doc);
            }
            for (k, (s, dim)) in series.slices.iter().zip(&dims).enumerate() {
                let _ = writeln!(out, "degree {k} (dim {dim}): {s}");
            }
        }
    }
    Ok(())
}

/// Text report for a set of backend classes; returns the exit code.
pub fn check_report(classes: &[(String, LaurentPoly)], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match compare_classes(classes) {
        Ok(()) => {
            let _ = writeln!(out, "{} backends agree", classes.len());
            0
        }
        Err(m) => {
            let _ = writeln!(err, "mismatch: {m}");
            1
        }
    }
}

fn run_check(cli: &Cli, p: &Problem, out: &mut String) -> Result<(), Failure> {
    let classes = backend_classes(p, cli.cap)?;
    let verdict = compare_classes(&classes);
    if cli.format == Format::Json {
        let mut doc = document(p);
        doc.check = Some(CheckJson {
            backends: classes.iter().map(|c| c.0.clone()).collect(),
            agree: verdict.is_ok(),
            mismatch: verdict.as_ref().err().map(|m| m.to_string()),
        });
        if verdict.is_ok() {
            doc.class = Some(class_to_json(&classes[0].1));
        }
        emit_json(out, &doc)?;
    } else if verdict.is_ok() {
        let _ = writeln!(out, "{} backends agree", classes.len());
    }
    verdict.map_err(|m| Failure::Mismatch(m.to_string()))
}
