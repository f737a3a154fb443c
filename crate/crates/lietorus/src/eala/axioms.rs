//! Window forms of the axioms A1, A2, A3, A5 and A6 for `E(L, D, κ)`.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::json;

use crate::lattice::{DegreeWindow, LatticeVector};
use crate::lie::check::{pairs, sweep, CheckOptions};
use crate::lie::{all_roots, Atom};
use crate::linalg::{integer_rank, ScalarMatrix, Span};
use crate::report::Report;
use crate::scalar::Scalar;

use super::algebra::{EAtom, EalaAlgebra, EalaElem};

type Weight = (LatticeVector, LatticeVector);

/// The values `α(h_k)` on the atoms `h_k` of `L_0^0`, obtained from the
/// action on `L_β^0` for a basis of roots `β` and extended linearly.
struct RootValues {
    h: Vec<Atom>,
    basis_values: Vec<Vec<Scalar>>,
    span: Span,
}

impl RootValues {
    fn new(e: &EalaAlgebra) -> RootValues {
        let l = e.torus();
        let h: Vec<Atom> = e
            .cartan_atoms()
            .into_iter()
            .filter_map(|a| match a {
                EAtom::L(b) => Some(b),
                _ => None,
            })
            .collect();
        let zero_deg = LatticeVector::zero(l.nullity());
        let mut rv = RootValues { h, basis_values: Vec::new(), span: Span::new() };
        for beta in &l.root_system().roots {
            if l.dim(beta, &zero_deg) == 0 {
                continue;
            }
            let v: Vec<Scalar> = beta.0.iter().map(|x| Scalar::from_int(*x)).collect();
            if !rv.span.insert(&v) {
                continue;
            }
            let eb = Atom::new(beta.clone(), zero_deg.clone(), 0);
            let vals = rv.h.iter().map(|hk| l.bracket_atoms(hk, &eb).coeff(&eb)).collect();
            rv.basis_values.push(vals);
        }
        rv
    }

    fn values(&self, alpha: &LatticeVector) -> Option<Vec<Scalar>> {
        let v: Vec<Scalar> = alpha.0.iter().map(|x| Scalar::from_int(*x)).collect();
        let coeffs = self.span.express(&v)?;
        let mut out = vec![Scalar::zero(); self.h.len()];
        for (c, vals) in coeffs.iter().zip(&self.basis_values) {
            for (o, x) in out.iter_mut().zip(vals) {
                *o += &(c * x);
            }
        }
        Some(out)
    }
}

/// Runs the window checks of A1, A2, A3, A5 and A6.
pub fn eala_axiom_checks(e: &EalaAlgebra, w: &DegreeWindow, opts: &CheckOptions) -> Report {
    let atoms = e.atoms(w);
    let elems: Vec<EalaElem> = atoms.iter().map(|a| e.atom_elem(a)).collect();
    let weights: Vec<Weight> = atoms.iter().map(|a| e.weight(a)).collect();
    let mut rep = Report::new(w.radius);
    rep.atoms_checked = atoms.len();
    let desc = |i: usize| e.describe(&atoms[i]);

    // A1: invariance on triples, symmetry, nondegeneracy between opposite weights
    let tri = opts.triples(atoms.len(), 21);
    let (t, f, first) = sweep(&tri, |&(i, j, k)| {
        let lhs = e.form(&e.bracket(&elems[i], &elems[j]), &elems[k]);
        let rhs = e.form(&elems[i], &e.bracket(&elems[j], &elems[k]));
        (lhs != rhs).then(|| json!({"atoms": [desc(i), desc(j), desc(k)], "lhs": lhs.to_string(), "rhs": rhs.to_string()}))
    });
    let mut invariance = Report::new(w.radius);
    invariance.tally("invariant", t, f, first);
    let (t, f, first) = sweep(&pairs(atoms.len()), |&(i, j)| {
        let a = e.form(&elems[i], &elems[j]);
        let b = e.form(&elems[j], &elems[i]);
        (a != b).then(|| json!({"atoms": [desc(i), desc(j)], "lhs": a.to_string(), "rhs": b.to_string()}))
    });
    invariance.tally("symmetric", t, f, first);
    let mut groups: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for (i, wt) in weights.iter().enumerate() {
        groups.entry(wt.clone()).or_default().push(i);
    }
    let keys: Vec<&Weight> = groups.keys().collect();
    let (t, f, first) = sweep(&keys, |wt| {
        let opp = (-&wt.0, -&wt.1);
        let xs = &groups[*wt];
        let ys = groups.get(&opp).cloned().unwrap_or_default();
        let rank = if xs.len() == ys.len() {
            let rows = xs.iter().map(|&x| ys.iter().map(|&y| e.form(&elems[x], &elems[y])).collect()).collect();
            ScalarMatrix::from_rows(rows).rank()
        } else {
            0
        };
        (rank != xs.len()).then(|| {
            json!({"root": wt.0.to_string(), "degree": wt.1.to_string(), "lhs": format!("rank {rank}"),
                   "rhs": format!("dim {}", xs.len())})
        })
    });
    invariance.tally("nondegenerate", t, f, first);
    merge(&mut rep, "A1", invariance);

    // A2: every atom is an ad ℋ eigenvector with the declared weight, and
    // only ℋ has weight zero
    let rv = RootValues::new(e);
    let cartan = e.cartan_atoms();
    let cartan_elems: Vec<EalaElem> = cartan.iter().map(|a| e.atom_elem(a)).collect();
    let eigen = |wt: &Weight| -> Option<Vec<Scalar>> {
        let alpha = rv.values(&wt.0)?;
        let mut k = 0;
        Some(
            cartan
                .iter()
                .map(|h| match h {
                    EAtom::L(_) => {
                        k += 1;
                        alpha[k - 1].clone()
                    }
                    EAtom::C(..) => Scalar::zero(),
                    EAtom::D(mu, i) => e.d.space(mu).basis_hom(*i).eval(&wt.1),
                })
                .collect(),
        )
    };
    let idx: Vec<usize> = (0..atoms.len()).collect();
    let (t, f, first) = sweep(&idx, |&i| {
        let Some(vals) = eigen(&weights[i]) else {
            return Some(json!({"atom": desc(i), "lhs": "root outside the span of degree-zero roots", "rhs": "functional on ℋ"}));
        };
        for (h, c) in cartan_elems.iter().zip(&vals) {
            let lhs = e.bracket(h, &elems[i]);
            let rhs = elems[i].scale(c);
            if lhs != rhs {
                return Some(json!({"atom": desc(i), "h": e.show(h), "lhs": e.show(&lhs), "rhs": e.show(&rhs)}));
            }
        }
        let is_zero_weight = weights[i].0.is_zero() && weights[i].1.is_zero();
        if !is_zero_weight && vals.iter().all(Scalar::is_zero) {
            return Some(json!({"atom": desc(i), "lhs": "ad ℋ acts by zero", "rhs": "nonzero root"}));
        }
        None
    });
    rep.tally("A2", t, f, first);

    // pairing on roots: (α, β) = a^T G^{-1} b with G the Gram matrix of L_0^0
    let l = e.torus();
    let gram = ScalarMatrix::from_rows(
        rv.h.iter().map(|a| rv.h.iter().map(|b| l.form_atoms(a, b)).collect()).collect(),
    );
    let inner = |a: &LatticeVector, b: &LatticeVector| -> Option<Scalar> {
        let va = rv.values(a)?;
        let vb = rv.values(b)?;
        if rv.h.is_empty() {
            return Some(Scalar::zero());
        }
        let t = gram.solve(&vb).ok()?;
        Some(va.iter().zip(&t).fold(Scalar::zero(), |acc, (x, y)| acc + x * y))
    };
    let distinct: BTreeSet<Weight> = weights.iter().cloned().collect();
    let mut nonisotropic: Vec<Weight> = Vec::new();
    let mut pairing_failed = None;
    for wt in &distinct {
        match inner(&wt.0, &wt.0) {
            Some(s) if !s.is_zero() => nonisotropic.push(wt.clone()),
            Some(_) => {}
            None => pairing_failed = Some(wt.clone()),
        }
    }

    // A3: ad(x)^k kills every window atom, k = 1 + longest root string
    let rs = l.root_system();
    let roots = all_roots(l);
    let root_set: BTreeSet<LatticeVector> = roots.iter().cloned().collect();
    let mut longest = 1;
    let non_iso_roots: BTreeSet<LatticeVector> = nonisotropic.iter().map(|w| w.0.clone()).collect();
    for alpha in &non_iso_roots {
        for beta in &roots {
            let mut len = 1;
            for dir in [1, -1] {
                let mut j = 1;
                while root_set.contains(&(beta + &alpha.scaled(dir * j))) {
                    len += 1;
                    j += 1;
                }
            }
            longest = longest.max(len);
        }
    }
    let k = 1 + longest;
    let xs: Vec<usize> = idx.iter().copied().filter(|&i| nonisotropic.binary_search(&weights[i]).is_ok()).collect();
    let (t, f, first) = sweep(&xs, |&i| {
        for (j, y) in elems.iter().enumerate() {
            let mut z = y.clone();
            for _ in 0..k {
                z = e.bracket(&elems[i], &z);
                if z.is_zero() {
                    break;
                }
            }
            if !z.is_zero() {
                return Some(json!({"atoms": [desc(i), desc(j)], "lhs": format!("ad(x)^{k} y = {}", e.show(&z)), "rhs": "0"}));
            }
        }
        None
    });
    rep.tally("A3", t, f, first);

    // A5: the observed roots span a free group of rank ℓ + n
    let rows: Vec<Vec<i128>> = distinct.iter().map(|(a, b)| a.concat(b).as_i128()).collect();
    let rank = integer_rank(&rows);
    let want = rs.rank + l.nullity();
    if rank == want {
        rep.pass("A5", json!({"rank": rank}));
    } else {
        rep.fail("A5", json!({"lhs": format!("rank {rank}"), "rhs": format!("ℓ + n = {want}")}));
    }

    // A6: non-isotropic roots form one component under nonzero pairing
    if let Some(wt) = pairing_failed {
        rep.fail("A6", json!({"root": wt.0.to_string(), "degree": wt.1.to_string(), "lhs": "pairing undefined", "rhs": "defined"}));
    } else {
        let m = nonisotropic.len();
        let mut seen = vec![false; m];
        let mut stack = Vec::new();
        if m > 0 {
            seen[0] = true;
            stack.push(0);
        }
        while let Some(i) = stack.pop() {
            for j in 0..m {
                if !seen[j] && inner(&nonisotropic[i].0, &nonisotropic[j].0).is_some_and(|s| !s.is_zero()) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        match seen.iter().position(|s| !s) {
            None => rep.pass("A6", json!({"nonisotropic_roots": m})),
            Some(j) => rep.fail(
                "A6",
                json!({"lhs": format!("({}, {}) not connected to ({}, {})", nonisotropic[j].0, nonisotropic[j].1,
                                      nonisotropic[0].0, nonisotropic[0].1), "rhs": "connected"}),
            ),
        }
    }
    rep
}

/// Folds the checks of `sub` into a single check named `name`.
fn merge(rep: &mut Report, name: &str, sub: Report) {
    match sub.failures().first() {
        Some(c) => rep.fail(name, json!({"part": c.name, "witness": c.witness})),
        None => rep.pass(name, json!({"parts": sub.checks.iter().map(|c| c.name.clone()).collect::<Vec<_>>()})),
    }
}

