//! wasm-bindgen entry points for the static demo page in `www/`.
//!
//! Every export returns a JSON string: the drawing on success, or
//! `{"error": "..."}`.

pub mod demo;

use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

fn to_json<T: Serialize>(r: Result<T, String>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v).expect("view serializes"),
        Err(e) => serde_json::json!({ "error": e }).to_string(),
    }
}

#[wasm_bindgen]
pub fn path_demo(n: usize, k: u32) -> String {
    to_json(demo::path_demo(n, k))
}

#[wasm_bindgen]
pub fn verify_on_family(family: &str, a: usize, b: usize, k: u32, set: &str) -> String {
    to_json(demo::verify_on_family(family, a, b, k, set))
}

#[wasm_bindgen]
pub fn tree_beta1(edge_list: &str) -> String {
    to_json(demo::tree_beta1(edge_list))
}
