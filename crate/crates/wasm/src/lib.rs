//! Browser bindings for the demo page in `www/`.
//!
//! Every export takes strings and returns a JSON string; errors come back as
//! a thrown string.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use nucleon::chain::{ChainDescriptor, ChainElement};
use nucleon::nucleus;
use nucleon::variety::{verify_classification, VarietyDescriptor};

/// Cap on the window so the page stays responsive.
const MAX_WINDOW: u64 = 24;

#[derive(Serialize)]
struct OpTable {
    op: String,
    labels: Vec<String>,
    cells: Vec<Vec<String>>,
    /// Position of each cell in the chain order of every value that occurs.
    ranks: Vec<Vec<usize>>,
    levels: usize,
}

#[derive(Serialize)]
struct NucleusRow {
    values: Vec<String>,
    image: Vec<String>,
    dense: Vec<String>,
    glivenko: bool,
    kind: nucleus::NucleusKind,
}

#[derive(Serialize)]
struct NucleiView {
    elements: Vec<String>,
    nuclei: Vec<NucleusRow>,
}

fn descriptor(desc: &str) -> Result<ChainDescriptor, String> {
    desc.parse().map_err(|e| format!("{desc}: {e}"))
}

/// `op` is one of `mul`, `imp`, `meet`, `join` over the first `window`
/// elements of each component, axes in chain order.
pub fn op_table_json(desc: &str, op: &str, window: u64) -> Result<String, String> {
    if !["mul", "imp", "meet", "join"].contains(&op) {
        return Err(format!("unknown operation `{op}`"));
    }
    let d = descriptor(desc)?;
    let mut elems = d.enumerate_window(window.min(MAX_WINDOW));
    elems.sort();
    let f = |a: ChainElement, b: ChainElement| match op {
        "mul" => d.mul(a, b),
        "imp" => d.imp(a, b),
        "meet" => d.meet(a, b),
        "join" => d.join(a, b),
        _ => unreachable!(),
    };
    let mut grid = Vec::with_capacity(elems.len());
    for &a in &elems {
        let row = elems
            .iter()
            .map(|&b| f(a, b))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        grid.push(row);
    }
    let mut seen: Vec<ChainElement> = grid.iter().flatten().copied().chain(elems.iter().copied()).collect();
    seen.sort();
    seen.dedup();
    let rank = |x: &ChainElement| seen.binary_search(x).expect("value was collected");
    let table = OpTable {
        op: op.to_string(),
        labels: elems.iter().map(ToString::to_string).collect(),
        cells: grid.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
        ranks: grid.iter().map(|r| r.iter().map(rank).collect()).collect(),
        levels: seen.len(),
    };
    Ok(serde_json::to_string(&table).expect("table serialises"))
}

/// All nuclei of a finite chain, with elements printed in chain notation.
pub fn nuclei_json(desc: &str) -> Result<String, String> {
    let d = descriptor(desc)?;
    let (alg, elems) = d.materialize_finite().map_err(|e| e.to_string())?;
    let all = nucleus::enumerate_nuclei(&alg).map_err(|e| e.to_string())?;
    let names = |xs: &[usize]| xs.iter().map(|&i| elems[i].to_string()).collect::<Vec<_>>();
    let nuclei = all
        .iter()
        .map(|g| {
            let r = nucleus::report(&alg, g);
            NucleusRow {
                values: names(&r.values),
                image: names(&r.image),
                dense: names(&r.dense),
                glivenko: r.glivenko,
                kind: r.kind,
            }
        })
        .collect();
    let view = NucleiView {
        elements: elems.iter().map(ToString::to_string).collect(),
        nuclei,
    };
    Ok(serde_json::to_string(&view).expect("view serialises"))
}

/// Generators separated by `;`, e.g. `S1 + S1 + Sw; S1 + Sw`.
pub fn variety_json(gens: &str, window: u64) -> Result<String, String> {
    let v: VarietyDescriptor = gens.parse().map_err(|e: nucleon::variety::VarietyError| e.to_string())?;
    let report = verify_classification(&v, window.min(MAX_WINDOW)).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string(&report).expect("report serialises"))
}

#[wasm_bindgen(js_name = opTable)]
pub fn op_table(desc: &str, op: &str, window: u32) -> Result<String, JsValue> {
    op_table_json(desc, op, window.into()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn nuclei(desc: &str) -> Result<String, JsValue> {
    nuclei_json(desc).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = verifyVariety)]
pub fn verify_variety(gens: &str, window: u32) -> Result<String, JsValue> {
    variety_json(gens, window.into()).map_err(|e| JsValue::from_str(&e))
}
