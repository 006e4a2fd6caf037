//! WebAssembly bindings behind `www/index.html`. Every export takes the
//! graph as JSON text and returns a JSON string; errors come back as
//! exceptions carrying the library's message.

use raag::conjugacy;
use raag::growth;
use raag::twisted;
use raag::{DefiningGraph, LengthPreservingAut, Piling, Word};
use serde_json::json;
use wasm_bindgen::prelude::*;

const GROWTH_LIMIT: usize = 10;

fn graph(text: &str) -> Result<DefiningGraph, String> {
    DefiningGraph::from_json(text).map_err(|e| e.to_string())
}

/// Stacks, normal form and factor structure of a word.
pub fn piling_view(graph_json: &str, word: &str) -> Result<String, String> {
    let g = graph(graph_json)?;
    let w = Word::parse(&g, word).map_err(|e| e.to_string())?;
    let p = Piling::build(&g, &w);
    let reduced = p.cyclic_reduce();
    let stacks: Vec<_> = g
        .names()
        .iter()
        .enumerate()
        .map(|(v, name)| {
            let beads: Vec<String> = p
                .stack(v)
                .iter()
                .map(|b| {
                    match b {
                        raag::Bead::Plus => "+",
                        raag::Bead::Minus => "-",
                        raag::Bead::Zero => "0",
                    }
                    .to_string()
                })
                .collect();
            json!({ "vertex": name, "beads": beads })
        })
        .collect();
    let factors: Vec<String> = conjugacy::class_key_of(&p)
        .0
        .iter()
        .map(|(_, w)| w.to_string(&g))
        .collect();
    Ok(json!({
        "normal_form": p.normal_word().to_string(&g),
        "length": p.len(),
        "stacks": stacks,
        "cyclically_reduced": reduced.normal_word().to_string(&g),
        "split": reduced.is_split(),
        "cyclic_factors": factors,
    })
    .to_string())
}

/// Conjugacy, or twisted conjugacy when `aut_json` is non-empty.
pub fn conjugacy_check(
    graph_json: &str,
    aut_json: &str,
    u: &str,
    v: &str,
) -> Result<String, String> {
    let g = graph(graph_json)?;
    let u = Word::parse(&g, u).map_err(|e| e.to_string())?;
    let v = Word::parse(&g, v).map_err(|e| e.to_string())?;
    if aut_json.trim().is_empty() {
        return Ok(
            json!({ "answer": conjugacy::conjugate(&g, &u, &v), "method": "conjugacy" })
                .to_string(),
        );
    }
    let phi = LengthPreservingAut::from_json(&g, aut_json).map_err(|e| e.to_string())?;
    let answer =
        twisted::tcp(&g, &u, &v, &phi, twisted::DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let method = if phi.is_inversion() {
        "inversions"
    } else {
        "closure"
    };
    Ok(json!({ "answer": answer, "method": method, "order": phi.order() }).to_string())
}

/// Conjugacy growth coefficients `c(0..=max)`.
pub fn growth_series(graph_json: &str, max: usize) -> Result<String, String> {
    if max > GROWTH_LIMIT {
        return Err(format!(
            "max length is capped at {GROWTH_LIMIT} in the browser"
        ));
    }
    let g = graph(graph_json)?;
    let t = growth::raag_conj_growth(&g, max, growth::DEFAULT_GROWTH_BUDGET)
        .map_err(|e| e.to_string())?;
    Ok(json!({ "coefficients": t.coefficients, "note": t.note() }).to_string())
}

#[wasm_bindgen(js_name = pilingView)]
pub fn piling_view_js(graph_json: &str, word: &str) -> Result<String, JsError> {
    piling_view(graph_json, word).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = conjugacyCheck)]
pub fn conjugacy_check_js(
    graph_json: &str,
    aut_json: &str,
    u: &str,
    v: &str,
) -> Result<String, JsError> {
    conjugacy_check(graph_json, aut_json, u, v).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = growthSeries)]
pub fn growth_series_js(graph_json: &str, max: usize) -> Result<String, JsError> {
    growth_series(graph_json, max).map_err(|e| JsError::new(&e))
}
