//! WebAssembly bindings for the browser demo. Each operation has a plain
//! Rust version returning JSON or text, and a thin exported wrapper.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use schubert_core::diagrams::{energies, enumerate_eyd};
use schubert_core::hecke::DEFAULT_CAP;
use schubert_core::restriction::{expansion, hilbert_data, Backend, Problem};
use schubert_core::weyl::{parse_list, Kind};

/// Upper bound on `|mu|` so a click cannot hang the page.
pub const MAX_BOXES: usize = 16;

fn problem(kind: &str, rank: usize, d: usize, lambda: &str, mu: &str) -> Result<Problem, String> {
    let kind: Kind = kind.parse().map_err(|e: schubert_core::Error| e.to_string())?;
    let lambda = parse_list::<usize>(lambda).map_err(|e| e.to_string())?;
    let mu = parse_list::<usize>(mu).map_err(|e| e.to_string())?;
    if mu.iter().sum::<usize>() > MAX_BOXES {
        return Err(format!("mu has more than {MAX_BOXES} boxes"));
    }
    let d = (kind == Kind::A).then_some(d);
    Problem::from_shapes(kind, rank, d, &lambda, &mu).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Diagram {
    boxes: Vec<[usize; 2]>,
    e1: String,
    e2: usize,
    picture: String,
}

#[derive(Serialize)]
struct Diagrams {
    w: Vec<i32>,
    v: Vec<i32>,
    on_variety: bool,
    count: usize,
    diagrams: Vec<Diagram>,
}

/// Excited diagrams of `lambda` inside `mu` as JSON.
pub fn diagrams_json(kind: &str, rank: usize, d: usize, lambda: &str, mu: &str, reduced_only: bool) -> Result<String, String> {
    let p = problem(kind, rank, d, lambda, mu)?;
    let (lambda, mu) = (p.lambda(), p.mu());
    let list = if p.on_variety() {
        enumerate_eyd(&lambda, &mu, p.geometry(), reduced_only).map_err(|e| e.to_string())?
    } else {
        Vec::new()
    };
    let diagrams = list
        .iter()
        .map(|c| {
            let (e1, e2) = energies(c, &lambda);
            Diagram { boxes: c.boxes().iter().map(|&(i, j)| [i, j]).collect(), e1: e1.to_string(), e2, picture: c.render() }
        })
        .collect();
    let out = Diagrams { w: p.w().window().to_vec(), v: p.v().window().to_vec(), on_variety: p.on_variety(), count: list.len(), diagrams };
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Hilbert {
    d_w: usize,
    m: Vec<u64>,
    multiplicity: u64,
    values: Vec<String>,
    computed_in: Option<String>,
}

/// Hilbert data and `h(0..=trunc)` as JSON.
pub fn hilbert_json(kind: &str, rank: usize, d: usize, lambda: &str, mu: &str, trunc: usize) -> Result<String, String> {
    let p = problem(kind, rank, d, lambda, mu)?;
    let h = hilbert_data(&p).map_err(|e| e.to_string())?;
    let out = Hilbert {
        d_w: h.d_w,
        multiplicity: h.multiplicity(),
        values: (0..=trunc.min(50)).map(|i| h.hilbert_function(i).to_string()).collect(),
        m: h.m,
        computed_in: (p.kind() == Kind::B).then(|| format!("D{}", p.rank() + 1)),
    };
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

/// The restricted class, expanded (`text`) or as a sum of products of
/// factors `(e^{-r}-1)` written with `ε_i` (`factored`).
pub fn class_text(kind: &str, rank: usize, d: usize, lambda: &str, mu: &str, style: &str) -> Result<String, String> {
    let p = problem(kind, rank, d, lambda, mu)?;
    let e = expansion(&p, Backend::Eyd, DEFAULT_CAP).map_err(|e| e.to_string())?;
    match style {
        "text" => Ok(e.to_poly().to_string()),
        "factored" => {
            if e.terms.is_empty() {
                return Ok("0".into());
            }
            let sign = if e.negative { "-" } else { "+" };
            let terms: Vec<String> = e
                .terms
                .iter()
                .map(|t| {
                    if t.is_empty() {
                        return "1".to_string();
                    }
                    t.iter()
                        .rev()
                        .map(|r| {
                            let body = schubert_core::ring::format_weight(r);
                            if r.iter().filter(|&&x| x != 0).count() > 1 {
                                format!("(e^{{-({body})}}-1)")
                            } else {
                                format!("(e^{{-{body}}}-1)")
                            }
                        })
                        .collect()
                })
                .collect();
            let joined = terms.join(&format!(" {sign} "));
            Ok(if e.negative { format!("-{joined}") } else { joined })
        }
        _ => Err(format!("unknown style {style:?}")),
    }
}

#[wasm_bindgen]
pub fn excited_diagrams(kind: &str, rank: usize, d: usize, lambda: &str, mu: &str, reduced_only: bool) -> Result<String, JsValue> {
    diagrams_json(kind, rank, d, lambda, mu, reduced_only).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn hilbert(kind: &str, rank: usize, d: usize, lambda: &str, mu: &str, trunc: usize) -> Result<String, JsValue> {
    hilbert_json(kind, rank, d, lambda, mu, trunc).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn restricted_class(kind: &str, rank: usize, d: usize, lambda: &str, mu: &str, style: &str) -> Result<String, JsValue> {
    class_text(kind, rank, d, lambda, mu, style).map_err(|e| JsValue::from_str(&e))
}
