//! Affine cocycles `κ: D × D -> D^{gr*}` and their validation.

use std::collections::BTreeMap;

use serde_json::json;

use crate::error::{Error, Result};
use crate::lattice::DegreeWindow;
use crate::lie::check::{pairs, sweep, CheckOptions};
use crate::report::Report;
use crate::scalar::Scalar;

use super::derivations::{DAtom, DSubalgebra, DualElement, SCDer};

/// `κ` is either zero, a finite table on basis atoms of a reference `D`
/// (zero on all other atom pairs), or a sum of such.
#[derive(Clone, Debug)]
pub enum AffineCocycle {
    Zero,
    Table { domain: DSubalgebra, entries: BTreeMap<(DAtom, DAtom), DualElement> },
    Sum(Vec<AffineCocycle>),
}

impl AffineCocycle {
    /// A table keyed by index pairs into `generators`, each generator a basis
    /// atom of `domain`.
    pub fn table(domain: &DSubalgebra, generators: &[DAtom], entries: &[(usize, usize, DualElement)]) -> Result<AffineCocycle> {
        for g in generators {
            if g.0.len() != domain.nullity() || g.1 >= domain.space(&g.0).dim() {
                return Err(Error::InvalidCocycle(format!("generator ({}, {}) is not a basis atom of D", g.0, g.1)));
            }
        }
        let mut map: BTreeMap<(DAtom, DAtom), DualElement> = BTreeMap::new();
        for (i, j, v) in entries {
            let (Some(a), Some(b)) = (generators.get(*i), generators.get(*j)) else {
                return Err(Error::InvalidCocycle(format!("generator index pair ({i}, {j}) out of range")));
            };
            if v.terms.keys().any(|mu| mu.len() != domain.nullity()) {
                return Err(Error::InvalidCocycle(format!("value for ({i}, {j}) has the wrong rank")));
            }
            map.entry((a.clone(), b.clone())).or_default().add_scaled(v, &Scalar::one());
        }
        Ok(AffineCocycle::Table { domain: domain.clone(), entries: map })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            AffineCocycle::Zero => true,
            AffineCocycle::Table { entries, .. } => entries.values().all(DualElement::is_zero),
            AffineCocycle::Sum(parts) => parts.iter().all(AffineCocycle::is_zero),
        }
    }

    /// `κ(d1, d2)` as an element of `SCDer^{gr*}`, before restriction.
    /// Arguments outside the reference domain of a table contribute zero.
    pub fn eval(&self, d1: &SCDer, d2: &SCDer) -> DualElement {
        match self {
            AffineCocycle::Zero => DualElement::zero(),
            AffineCocycle::Table { domain, entries } => {
                let mut out = DualElement::zero();
                if entries.is_empty() || d1.is_zero() || d2.is_zero() {
                    return out;
                }
                let (Some(c1), Some(c2)) = (domain.coords(d1), domain.coords(d2)) else {
                    return out;
                };
                for (a, x) in &c1 {
                    for (b, y) in &c2 {
                        if let Some(v) = entries.get(&(a.clone(), b.clone())) {
                            out.add_scaled(v, &(x * y));
                        }
                    }
                }
                out
            }
            AffineCocycle::Sum(parts) => {
                let mut out = DualElement::zero();
                for p in parts {
                    out.add_scaled(&p.eval(d1, d2), &Scalar::one());
                }
                out
            }
        }
    }

    /// `κ_τ(τ̄ d, τ̄ d') = τ̄ κ(d, d')` on `D_τ`.
    pub fn reflected(&self) -> AffineCocycle {
        match self {
            AffineCocycle::Zero => AffineCocycle::Zero,
            AffineCocycle::Table { domain, entries } => {
                // τ̄(χ^μ ∂_{u_i}) = -(atom (-μ, i) of D_τ); the two signs cancel.
                let entries = entries
                    .iter()
                    .map(|((a, b), v)| (((-&a.0, a.1), (-&b.0, b.1)), v.reflect()))
                    .collect();
                AffineCocycle::Table { domain: domain.reflected(), entries }
            }
            AffineCocycle::Sum(parts) => AffineCocycle::Sum(parts.iter().map(AffineCocycle::reflected).collect()),
        }
    }

    pub fn plus(&self, other: &AffineCocycle) -> AffineCocycle {
        match (self, other) {
            (AffineCocycle::Zero, k) | (k, AffineCocycle::Zero) => k.clone(),
            (a, b) => AffineCocycle::Sum(vec![a.clone(), b.clone()]),
        }
    }
}

/// Checks the five cocycle axioms on basis atoms of `D` in the window:
/// alternation, `κ(D^0, D) = 0`, the grading rule, cyclic symmetry of
/// `κ(d1, d2)(d3)` and the cyclic identity.
pub fn validate_cocycle(d: &DSubalgebra, k: &AffineCocycle, w: &DegreeWindow, opts: &CheckOptions) -> Report {
    let atoms = d.atoms(w);
    let elems: Vec<SCDer> = atoms.iter().map(|a| d.atom_elem(a)).collect();
    let mut rep = Report::new(w.radius);
    rep.atoms_checked = atoms.len();
    let kap = |x: &SCDer, y: &SCDer| d.reduce_dual(&k.eval(x, y));
    let desc = |i: usize| d.describe_atom(&atoms[i]);

    let all = pairs(atoms.len());
    let (t, f, first) = sweep(&all, |&(i, j)| {
        let v = if i == j { kap(&elems[i], &elems[i]) } else { kap(&elems[i], &elems[j]).add(&kap(&elems[j], &elems[i])) };
        (!v.is_zero()).then(|| {
            let lhs = if i == j { "κ(d,d)" } else { "κ(a,b) + κ(b,a)" };
            json!({"atoms": [desc(i), desc(j)], "expr": lhs, "lhs": v.to_string(), "rhs": "0"})
        })
    });
    rep.tally("alternating", t, f, first);

    let zero_deg: Vec<(usize, usize)> = all.iter().copied().filter(|&(i, _)| atoms[i].0.is_zero()).collect();
    let (t, f, first) = sweep(&zero_deg, |&(i, j)| {
        let v = kap(&elems[i], &elems[j]);
        (!v.is_zero()).then(|| json!({"atoms": [desc(i), desc(j)], "lhs": v.to_string(), "rhs": "0"}))
    });
    rep.tally("degree_zero_vanishing", t, f, first);

    let (t, f, first) = sweep(&all, |&(i, j)| {
        let want = &atoms[i].0 + &atoms[j].0;
        let v = kap(&elems[i], &elems[j]);
        v.terms.keys().find(|mu| **mu != want).map(|mu| {
            json!({"atoms": [desc(i), desc(j)], "lhs": format!("term c^({mu})"), "rhs": format!("only c^({want})")})
        })
    });
    rep.tally("graded", t, f, first);

    let tri = opts.triples(atoms.len(), 11);
    let (t, f, first) = sweep(&tri, |&(i, j, l)| {
        let lhs = kap(&elems[i], &elems[j]).pair(&elems[l]);
        let rhs = kap(&elems[j], &elems[l]).pair(&elems[i]);
        (lhs != rhs).then(|| json!({"atoms": [desc(i), desc(j), desc(l)], "lhs": lhs.to_string(), "rhs": rhs.to_string()}))
    });
    rep.tally("cyclic_symmetry", t, f, first);

    let (t, f, first) = sweep(&tri, |&(i, j, l)| {
        let ds = [&elems[i], &elems[j], &elems[l]];
        let mut lhs = DualElement::zero();
        let mut rhs = DualElement::zero();
        for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            lhs.add_scaled(&k.eval(&ds[a].bracket(ds[b]), ds[c]), &Scalar::one());
            rhs.add_scaled(&ds[a].act_dual(&k.eval(ds[b], ds[c])), &Scalar::one());
        }
        let (lhs, rhs) = (d.reduce_dual(&lhs), d.reduce_dual(&rhs));
        (lhs != rhs).then(|| json!({"atoms": [desc(i), desc(j), desc(l)], "lhs": lhs.to_string(), "rhs": rhs.to_string()}))
    });
    rep.tally("cyclic_identity", t, f, first);
    rep
}
