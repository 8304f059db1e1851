//! WebAssembly bindings for a static demo page. Every entry point takes and
//! returns JSON text; the `*_json` functions hold the logic and run natively.

use latcover::cones::{hilbert_basis, sebo_triangulation};
use latcover::ellipsoid::{build_qd_family, ellipsoid_lattice_points};
use latcover::exact::{format_rational, AffineLattice};
use latcover::json::{nums, ConeJson, EllipsoidJson};
use latcover::normality::is_normal;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const MAX_QD_DIM: usize = 6;

fn text(v: Value) -> String {
    v.to_string()
}

/// Lattice points of a 2D ellipse `{"A": [[..],[..]], "center": [..]}`,
/// split into interior and boundary points.
pub fn ellipse_points_json(input: &str) -> Result<String, String> {
    let parsed: EllipsoidJson = serde_json::from_str(input).map_err(|e| e.to_string())?;
    let e = parsed.to_ellipsoid().map_err(|e| e.to_string())?;
    if e.dim() != 2 {
        return Err(format!("expected a 2D ellipse, got dimension {}", e.dim()));
    }
    let lattice = AffineLattice::standard(2);
    let solid = ellipsoid_lattice_points(&e, &lattice, true);
    let surface = ellipsoid_lattice_points(&e, &lattice, false);
    let interior: Vec<_> = solid.iter().filter(|x| !surface.contains(x)).map(|x| nums(x)).collect();
    let boundary: Vec<_> = surface.iter().map(|x| nums(x)).collect();
    Ok(text(json!({ "count": solid.len(), "interior": interior, "boundary": boundary })))
}

/// Hilbert basis of a pointed cone `{"rays": [[..], ..]}`, with a
/// unimodular Hilbert triangulation when the cone is 3-dimensional.
pub fn cone_hilbert_basis_json(input: &str) -> Result<String, String> {
    let parsed: ConeJson = serde_json::from_str(input).map_err(|e| e.to_string())?;
    let cone = parsed.to_cone().map_err(|e| e.to_string())?;
    let hb = hilbert_basis(&cone).map_err(|e| e.to_string())?;
    let pieces = if cone.dim() == 3 {
        let t = sebo_triangulation(&cone).map_err(|e| e.to_string())?;
        json!({ "rays": t.rays, "pieces": t.pieces })
    } else {
        Value::Null
    };
    Ok(text(json!({ "hilbert_basis": hb.elements, "triangulation": pieces })))
}

/// Summary of the half-integral ball family in dimension `d` (5 or 6).
pub fn qd_report_json(d: usize) -> Result<String, String> {
    if !(5..=MAX_QD_DIM).contains(&d) {
        return Err(format!("dimension {d} is outside 5..={MAX_QD_DIM}"));
    }
    let fam = build_qd_family(d).map_err(|e| e.to_string())?;
    let normal = is_normal(&fam.q);
    let witness = normal.witness.map(|(k, x)| json!({ "degree": k, "point": x.iter().map(format_rational).collect::<Vec<_>>() }));
    Ok(text(json!({
        "d": d,
        "ball_points": fam.p.lattice_points().len(),
        "q_points": fam.q.lattice_points().len(),
        "delta_is_facet": fam.delta_is_facet,
        "delta_is_empty": fam.delta_is_empty,
        "q_is_normal": normal.is_normal,
        "witness": witness,
    })))
}

#[wasm_bindgen]
pub fn ellipse_points(input: &str) -> Result<String, JsError> {
    ellipse_points_json(input).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn cone_hilbert_basis(input: &str) -> Result<String, JsError> {
    cone_hilbert_basis_json(input).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn qd_report(d: usize) -> Result<String, JsError> {
    qd_report_json(d).map_err(|e| JsError::new(&e))
}
