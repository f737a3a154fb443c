//! Structure-constant export of a Lie torus on the atoms of a window.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::lattice::DegreeWindow;
use crate::lie::{window_atoms, Atom, LieTorus};

/// `{"atoms": [{"id", "root", "degree", "index", "payload"}], "brackets":
/// [{"i", "j", "terms": [{"k", "c"}]}]}`. Atoms are ordered by
/// `(root, degree, index)`; rows list the pairs `i < j` whose bracket is
/// nonzero and has degree in the window. Coefficients are scalar JSON values.
pub fn export_structure_constants(l: &dyn LieTorus, w: &DegreeWindow) -> Value {
    let atoms = window_atoms(l, w);
    let ids: BTreeMap<&Atom, usize> = atoms.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let legend: Vec<Value> = atoms
        .iter()
        .enumerate()
        .map(|(i, a)| json!({"id": i, "root": a.root.0, "degree": a.deg.0, "index": a.idx, "payload": l.describe(a)}))
        .collect();
    let mut rows = Vec::new();
    for (i, a) in atoms.iter().enumerate() {
        for (j, b) in atoms.iter().enumerate().skip(i + 1) {
            if !w.contains(&(&a.deg + &b.deg)) {
                continue;
            }
            let br = l.bracket_atoms(a, b);
            if br.is_zero() {
                continue;
            }
            let mut terms: Vec<(usize, Value)> = br
                .iter()
                .map(|(k, c)| (ids[k], crate::scalar::json::to_value(c)))
                .collect();
            terms.sort_by_key(|t| t.0);
            let terms: Vec<Value> = terms.into_iter().map(|(k, c)| json!({"k": k, "c": c})).collect();
            rows.push(json!({"i": i, "j": j, "terms": terms}));
        }
    }
    json!({"construction": l.name(), "window": w.radius, "atoms": legend, "brackets": rows})
}
