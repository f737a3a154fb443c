//! Window-scale verification of the Lie torus axioms, the Lie algebra
//! identities and the properties of the graded form and centroid.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::lattice::{box_enum, DegreeWindow, LatticeVector};
use crate::linalg::{hnf, hnf_index, ScalarMatrix, Span};
use crate::report::Report;
use crate::scalar::Scalar;

use super::{all_roots, atoms_at, bracket, component_coords, form, show, window_atoms, Atom, LieElem, LieTorus};

#[derive(Clone, Debug)]
pub struct CheckOptions {
    /// Number of random samples for sampled sweeps.
    pub samples: usize,
    pub seed: u64,
    /// Triple sweeps are exhaustive when the number of triples is at most this.
    pub exhaustive_limit: usize,
    /// Minimum number of triples drawn when a triple sweep is sampled.
    pub min_triples: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { samples: 200, seed: 42, exhaustive_limit: 30_000, min_triples: 2000 }
    }
}

impl CheckOptions {
    pub fn with(samples: usize, seed: u64) -> CheckOptions {
        CheckOptions { samples, seed, ..CheckOptions::default() }
    }

    pub fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }

    /// All index triples when few enough, else a seeded sample.
    pub fn triples(&self, n: usize, salt: u64) -> Vec<(usize, usize, usize)> {
        if n == 0 {
            return Vec::new();
        }
        if n.saturating_pow(3) <= self.exhaustive_limit {
            let mut v = Vec::with_capacity(n * n * n);
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        v.push((i, j, k));
                    }
                }
            }
            return v;
        }
        let mut rng = self.rng(salt);
        (0..self.samples.max(self.min_triples))
            .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
            .collect()
    }
}

/// Runs `f` over `items` in parallel; returns (tested, failures, first failing
/// witness in item order).
pub fn sweep<T: Sync>(items: &[T], f: impl Fn(&T) -> Option<Value> + Sync + Send) -> (usize, usize, Option<Value>) {
    let results: Vec<Option<Value>> = items.par_iter().map(f).collect();
    let failures = results.iter().filter(|r| r.is_some()).count();
    (items.len(), failures, results.into_iter().flatten().next())
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
}

fn basis(a: &Atom) -> LieElem {
    LieElem::basis(a.clone())
}

fn is_multiple(x: &LieElem, e: &Atom) -> Option<Scalar> {
    if x.is_zero() {
        return Some(Scalar::zero());
    }
    if x.len() == 1 {
        return Some(x.coeff(e)).filter(|c| !c.is_zero());
    }
    None
}

/// Checks every axiom and identity on the window; violations become report
/// entries with witnesses.
pub fn check_lie_torus(l: &dyn LieTorus, w: &DegreeWindow, opts: &CheckOptions) -> Report {
    let mut rep = Report::new(w.radius);
    let atoms = window_atoms(l, w);
    rep.atoms_checked = atoms.len();
    let rs = l.root_system();
    let degs = w.enumerate(l.nullity());
    let roots = all_roots(l);
    let n = atoms.len();
    let all_pairs = pairs(n);

    // alternation and antisymmetry
    let (t, f, first) = sweep(&all_pairs, |&(i, j)| {
        let (a, b) = (&atoms[i], &atoms[j]);
        let ab = l.bracket_atoms(a, b);
        let ok = if i == j { ab.is_zero() } else { ab.add(&l.bracket_atoms(b, a)).is_zero() };
        (!ok).then(|| json!({"atoms": [l.describe(a), l.describe(b)], "lhs": show(l, &ab), "rhs": "0 or -[b,a]"}))
    });
    rep.tally("alternation", t, f, first);

    // LT1: bigrade closure
    let (t, f, first) = sweep(&all_pairs, |&(i, j)| {
        let (a, b) = (&atoms[i], &atoms[j]);
        let ab = l.bracket_atoms(a, b);
        let root = &a.root + &b.root;
        let deg = &a.deg + &b.deg;
        let bad = ab.iter().find(|(k, _)| {
            k.root != root || k.deg != deg || !rs.contains(&k.root) || k.idx as usize >= l.dim(&k.root, &k.deg)
        });
        bad.map(|(k, _)| {
            json!({"atoms": [l.describe(a), l.describe(b)], "expected": format!("({root}, {deg})"),
                   "lhs": show(l, &ab), "rhs": format!("term in ({}, {})", k.root, k.deg)})
        })
    });
    rep.tally("LT1", t, f, first);

    // LT2(i): dimensions
    let mut cases = 0;
    let mut bad = Vec::new();
    for r in roots.iter().filter(|r| !r.is_zero()) {
        for d in &degs {
            cases += 1;
            let dim = l.dim(r, d);
            let need_one = d.is_zero() && rs.is_indivisible(r);
            if dim > 1 || (need_one && dim != 1) {
                bad.push(json!({"root": r.to_string(), "degree": d.to_string(), "lhs": dim.to_string(),
                                "rhs": if need_one { "1" } else { "<= 1" }}));
            }
        }
    }
    let nb = bad.len();
    rep.tally("LT2(i)", cases, nb, bad.into_iter().next());

    // LT2(ii): sl2-triples act by Cartan integers
    let mut triples = Vec::new();
    for r in roots.iter().filter(|r| !r.is_zero()) {
        for d in &degs {
            if l.dim(r, d) > 0 {
                triples.push((r.clone(), d.clone()));
            }
        }
    }
    let (t, f, first) = sweep(&triples, |(r, d)| {
        let e = Atom::new(r.clone(), d.clone(), 0);
        let nr = -r;
        let nd = -d;
        if l.dim(&nr, &nd) == 0 {
            return Some(json!({"root": r.to_string(), "degree": d.to_string(), "lhs": "dim L_{-a}^{-l} = 0", "rhs": "1"}));
        }
        let fa = Atom::new(nr, nd, 0);
        let h = l.bracket_atoms(&e, &fa);
        let he = bracket(l, &h, &basis(&e));
        let c = match is_multiple(&he, &e) {
            Some(c) if !c.is_zero() => c,
            _ => {
                return Some(json!({"atoms": [l.describe(&e), l.describe(&fa)], "lhs": show(l, &he),
                                   "rhs": "nonzero multiple of e"}))
            }
        };
        let h = h.scale(&(Scalar::from_int(2) * c.inv().expect("nonzero")));
        for x in &atoms {
            let Ok(k) = rs.cartan_integer(&x.root, r) else {
                return Some(json!({"root": r.to_string(), "lhs": "Cartan integer undefined", "rhs": x.root.to_string()}));
            };
            let lhs = bracket(l, &h, &basis(x));
            let rhs = basis(x).scale(&Scalar::from_int(k));
            if lhs != rhs {
                return Some(json!({"atoms": [l.describe(&e), l.describe(&fa), l.describe(x)],
                                   "lhs": show(l, &lhs), "rhs": show(l, &rhs)}));
            }
        }
        None
    });
    rep.tally("LT2(ii)", t, f, first);

    // LT3: L_0^l is spanned by brackets of opposite root spaces
    let pmax = l.period().0.iter().copied().max().unwrap_or(1).max(1);
    let mus = box_enum(&vec![(-pmax, pmax); l.nullity()]);
    let zero = rs.zero();
    let lt3_degs: Vec<LatticeVector> = degs.iter().filter(|d| l.dim(&zero, d) > 0).cloned().collect();
    let (t, f, first) = sweep(&lt3_degs, |d| {
        let target = l.dim(&zero, d);
        let mut span = Span::new();
        'outer: for r in rs.roots.iter() {
            for mu in &mus {
                let nu = d - mu;
                for a in atoms_at(l, r, mu) {
                    for b in atoms_at(l, &-r, &nu) {
                        let v = component_coords(l, &l.bracket_atoms(&a, &b), &zero, d);
                        span.insert(&v);
                        if span.dim() == target {
                            break 'outer;
                        }
                    }
                }
            }
        }
        (span.dim() != target).then(|| {
            json!({"degree": d.to_string(), "lhs": format!("rank {}", span.dim()), "rhs": format!("dim {target}")})
        })
    });
    rep.tally("LT3", t, f, first);

    // LT4: the support generates the lattice
    let support: Vec<Vec<i128>> = degs
        .iter()
        .filter(|d| roots.iter().any(|r| l.dim(r, d) > 0))
        .map(|d| d.as_i128())
        .collect();
    let h = hnf(&support);
    let idx = if h.len() == l.nullity() { hnf_index(&h) } else { 0 };
    if idx == 1 || l.nullity() == 0 {
        rep.pass("LT4", json!({"support_size": support.len()}));
    } else {
        rep.fail("LT4", json!({"lhs": format!("index {idx}, rank {}", h.len()), "rhs": "index 1"}));
    }

    // Jacobi
    let tri = opts.triples(n, 1);
    let (t, f, first) = sweep(&tri, |&(i, j, k)| {
        let (a, b, c) = (basis(&atoms[i]), basis(&atoms[j]), basis(&atoms[k]));
        let mut acc = bracket(l, &a, &bracket(l, &b, &c));
        acc = acc.add(&bracket(l, &b, &bracket(l, &c, &a)));
        acc = acc.add(&bracket(l, &c, &bracket(l, &a, &b)));
        (!acc.is_zero()).then(|| {
            json!({"atoms": [l.describe(&atoms[i]), l.describe(&atoms[j]), l.describe(&atoms[k])],
                   "lhs": show(l, &acc), "rhs": "0"})
        })
    });
    rep.tally("jacobi", t, f, first);

    form_checks(l, &atoms, &degs, &roots, opts, &mut rep);
    centroid_check(l, &atoms, w, opts, &mut rep);
    rep
}

fn form_checks(
    l: &dyn LieTorus,
    atoms: &[Atom],
    degs: &[LatticeVector],
    roots: &[LatticeVector],
    opts: &CheckOptions,
    rep: &mut Report,
) {
    let all_pairs = pairs(atoms.len());
    let (t, f, first) = sweep(&all_pairs, |&(i, j)| {
        let (a, b) = (&atoms[i], &atoms[j]);
        let v = l.form_atoms(a, b);
        let graded_ok = v.is_zero() || ((&a.root + &b.root).is_zero() && (&a.deg + &b.deg).is_zero());
        let sym = l.form_atoms(b, a);
        (!graded_ok || v != sym).then(|| {
            json!({"atoms": [l.describe(a), l.describe(b)], "lhs": v.to_string(), "rhs": sym.to_string()})
        })
    });
    rep.tally("form_graded_symmetric", t, f, first);

    let tri = opts.triples(atoms.len(), 2);
    let (t, f, first) = sweep(&tri, |&(i, j, k)| {
        let (a, b, c) = (basis(&atoms[i]), basis(&atoms[j]), basis(&atoms[k]));
        let lhs = form(l, &l.bracket_atoms(&atoms[i], &atoms[j]), &c);
        let rhs = form(l, &a, &bracket(l, &b, &c));
        (lhs != rhs).then(|| {
            json!({"atoms": [l.describe(&atoms[i]), l.describe(&atoms[j]), l.describe(&atoms[k])],
                   "lhs": lhs.to_string(), "rhs": rhs.to_string()})
        })
    });
    rep.tally("form_invariant", t, f, first);

    let mut comps = Vec::new();
    for r in roots {
        for d in degs {
            if l.dim(r, d) > 0 {
                comps.push((r.clone(), d.clone()));
            }
        }
    }
    let (t, f, first) = sweep(&comps, |(r, d)| {
        let xs = atoms_at(l, r, d);
        let ys = atoms_at(l, &-r, &-d);
        let rank = if xs.len() == ys.len() {
            let rows = xs.iter().map(|x| ys.iter().map(|y| l.form_atoms(x, y)).collect()).collect();
            ScalarMatrix::from_rows(rows).rank()
        } else {
            0
        };
        (rank != xs.len()).then(|| {
            json!({"root": r.to_string(), "degree": d.to_string(), "lhs": format!("rank {rank}"),
                   "rhs": format!("dim {}", xs.len())})
        })
    });
    rep.tally("form_nondegenerate", t, f, first);
}

fn centroid_check(l: &dyn LieTorus, atoms: &[Atom], w: &DegreeWindow, opts: &CheckOptions, rep: &mut Report) {
    let mus: Vec<LatticeVector> = w.enumerate(l.nullity()).into_iter().filter(|m| l.in_centroid_support(m)).collect();
    if atoms.is_empty() || mus.is_empty() {
        rep.pass("centroid", json!({"tested": 0}));
        return;
    }
    let mut closed = true;
    for a in &mus {
        for b in &mus {
            let s = a + b;
            if w.contains(&s) && !l.in_centroid_support(&s) || !l.in_centroid_support(&-a) {
                closed = false;
            }
        }
    }
    let mut rng = opts.rng(3);
    let cases: Vec<(usize, usize, usize)> = (0..opts.samples)
        .map(|_| (rng.gen_range(0..mus.len()), rng.gen_range(0..atoms.len()), rng.gen_range(0..atoms.len())))
        .collect();
    let (t, f, first) = sweep(&cases, |&(m, i, j)| {
        let mu = &mus[m];
        let (x, y) = (&atoms[i], &atoms[j]);
        let lhs = l.bracket_atoms(x, y).map_linear(|a| l.centroid_atom(mu, a));
        let mid = bracket(l, &l.centroid_atom(mu, x), &basis(y));
        let rhs = bracket(l, &basis(x), &l.centroid_atom(mu, y));
        (lhs != mid || lhs != rhs).then(|| {
            json!({"mu": mu.to_string(), "atoms": [l.describe(x), l.describe(y)], "lhs": show(l, &lhs),
                   "rhs": show(l, &mid)})
        })
    });
    if !closed {
        rep.fail("centroid", json!({"lhs": "support not closed under sums and negation", "rhs": "subgroup"}));
    } else {
        rep.tally("centroid", t, f, first);
    }
}
