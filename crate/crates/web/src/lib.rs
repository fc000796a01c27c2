//! Browser bindings: check a table, browse the census, double a word.
//!
//! Every export takes and returns JSON text so the page stays plain JS.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;
use ybx_core::braid::simplicial::vp_normal_form;
use ybx_core::braid::{doubling_vp, Word};
use ybx_core::io::Document;
use ybx_core::ybset::{check_braid, check_ybe, convert, enumerate_solutions, nondegeneracy, Direction, Equation};

fn check_table_json(text: &str) -> Result<Value, String> {
    let m = Document::parse(text).and_then(Document::into_set_yb).map_err(|e| e.to_string())?;
    let (left, right) = nondegeneracy(&m);
    Ok(json!({
        "size": m.size(),
        "invertible": m.is_invertible(),
        "left_nondegenerate": left,
        "right_nondegenerate": right,
        "ybe": check_ybe(&m),
        "braid": check_braid(&m),
        "ybe_of_composite": check_ybe(&convert(&m, Direction::BraidToYb)).passed,
    }))
}

fn census_json(size: usize, braid: bool, invertible: bool) -> Result<Value, String> {
    let eq = if braid { Equation::Braid } else { Equation::Ybe };
    let sols = enumerate_solutions(size, eq, invertible).map_err(|e| e.to_string())?;
    let docs: Vec<Value> = sols.iter().map(|m| serde_json::to_value(Document::set_yb(m)).expect("json")).collect();
    Ok(json!({"count": docs.len(), "solutions": docs}))
}

fn double_json(word: &str, n: usize, k: usize) -> Result<Value, String> {
    let w: Word = word.parse().map_err(|e: ybx_core::Error| e.to_string())?;
    let d = doubling_vp(&w, n, k).map_err(|e| e.to_string())?;
    Ok(json!({"word": d.to_string(), "normal_form": vp_normal_form(&d).to_string(), "length": d.len()}))
}

fn finish(r: Result<Value, String>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

/// YBE and braid verdicts for a `set_yb` document.
#[wasm_bindgen(js_name = checkTable)]
pub fn check_table(text: &str) -> Result<String, JsError> {
    finish(check_table_json(text))
}

#[wasm_bindgen]
pub fn census(size: usize, braid: bool, invertible: bool) -> Result<String, JsError> {
    finish(census_json(size, braid, invertible))
}

/// `D_n^{(k)}` of a word in the virtual pure braid group.
#[wasm_bindgen(js_name = doubleWord)]
pub fn double_word(word: &str, n: usize, k: usize) -> Result<String, JsError> {
    finish(double_json(word, n, k))
}
