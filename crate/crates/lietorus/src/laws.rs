//! Window checks of the coordinate torus laws: grading, invertibility, the
//! variety identities, the pre-Chevalley law, anti-involutions and the
//! normal-ordering oracle for quantum structure constants.

use rand::Rng;
use serde_json::json;

use crate::graded::{Elem, GradedAlgebra, Variety};
use crate::lattice::{DegreeWindow, LatticeVector};
use crate::lie::check::{pairs, sweep, CheckOptions};
use crate::report::Report;
use crate::scalar::Scalar;
use crate::tori::{rewrite, AntiInvolution, AntiKind, Family, TorusAlgebra};

fn show(e: &Elem) -> String {
    if e.is_zero() {
        return "0".into();
    }
    e.iter().map(|(k, c)| format!("({})·{k:?}", c.to_text())).collect::<Vec<_>>().join(" + ")
}

/// Supported degrees of the window.
fn support(a: &TorusAlgebra, w: &DegreeWindow) -> Vec<LatticeVector> {
    w.enumerate(a.rank()).into_iter().filter(|l| a.in_support(l)).collect()
}

/// A seeded element: a sum of up to three window monomials with small
/// integer coefficients.
fn random_elem(a: &TorusAlgebra, degs: &[LatticeVector], rng: &mut impl Rng) -> Elem {
    let mut e = Elem::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let d = &degs[rng.gen_range(0..degs.len())];
        let c = Scalar::from_int(rng.gen_range(-3..=3));
        e.add_scaled(&a.mono(&d.0), &c);
    }
    e
}

/// The anti-involution each family carries by default, if any.
pub fn default_anti_involution(a: &TorusAlgebra) -> Option<AntiInvolution> {
    match a.family() {
        Family::Octonion => a.anti_involution(AntiKind::OctonionStandard).ok(),
        Family::Quantum | Family::Laurent if a.modulus() <= 2 => a.anti_involution(AntiKind::SigmaE(vec![1; a.rank()])).ok(),
        _ => None,
    }
}

/// Checks the torus laws on the window. Jordan and alternative identities
/// run on all basis pairs within `jordan_radius` plus `opts.samples` seeded
/// random element pairs within the full window.
pub fn check_torus(a: &TorusAlgebra, w: &DegreeWindow, jordan_radius: i64, opts: &CheckOptions) -> Report {
    let degs = support(a, w);
    let mut rep = Report::new(w.radius);
    rep.atoms_checked = degs.len();
    let mono = |d: &LatticeVector| a.mono(&d.0);
    let all = pairs(degs.len());

    let (t, f, first) = sweep(&all, |&(i, j)| {
        let p = a.mul(&mono(&degs[i]), &mono(&degs[j]));
        let want = &degs[i] + &degs[j];
        let bad = p.iter().find(|(k, _)| k.deg != want || !a.in_support(&k.deg)).map(|(k, _)| {
            json!({"pair": [degs[i].to_string(), degs[j].to_string()], "lhs": format!("{k:?}"), "rhs": format!("degree {want}")})
        });
        bad
    });
    rep.tally("grading", t, f, first);

    let idx: Vec<usize> = (0..degs.len()).collect();
    let (t, f, first) = sweep(&idx, |&i| {
        let x = mono(&degs[i]);
        let y = match a.homog_inverse(&x) {
            Ok(y) => y,
            Err(e) => return Some(json!({"degree": degs[i].to_string(), "lhs": e.to_string(), "rhs": "invertible"})),
        };
        let one = a.unit();
        let xy = a.mul(&x, &y);
        if xy != one {
            return Some(json!({"degree": degs[i].to_string(), "lhs": show(&xy), "rhs": "1"}));
        }
        if a.variety() == Variety::Jordan {
            let x2y = a.mul(&a.mul(&x, &x), &y);
            (x2y != x).then(|| json!({"degree": degs[i].to_string(), "lhs": format!("x^2·y = {}", show(&x2y)), "rhs": show(&x)}))
        } else {
            let yx = a.mul(&y, &x);
            (yx != one).then(|| json!({"degree": degs[i].to_string(), "lhs": format!("y·x = {}", show(&yx)), "rhs": "1"}))
        }
    });
    rep.tally("invertibility", t, f, first);

    match a.variety() {
        Variety::Associative => {
            let tri = opts.triples(degs.len(), 31);
            let (t, f, first) = sweep(&tri, |&(i, j, k)| {
                let (x, y, z) = (mono(&degs[i]), mono(&degs[j]), mono(&degs[k]));
                let lhs = a.mul(&a.mul(&x, &y), &z);
                let rhs = a.mul(&x, &a.mul(&y, &z));
                (lhs != rhs).then(|| {
                    json!({"triple": [degs[i].to_string(), degs[j].to_string(), degs[k].to_string()],
                           "lhs": show(&lhs), "rhs": show(&rhs)})
                })
            });
            rep.tally("associativity", t, f, first);
        }
        Variety::Alternative => {
            let elems = sample_pairs(a, &degs, &degs, opts);
            let (t, f, first) = sweep(&elems, |(u, v)| {
                let uu = a.mul(u, u);
                let (l1, r1) = (a.mul(&uu, v), a.mul(u, &a.mul(u, v)));
                let (l2, r2) = (a.mul(v, &uu), a.mul(&a.mul(v, u), u));
                (l1 != r1 || l2 != r2).then(|| json!({"u": show(u), "v": show(v), "lhs": show(&l1), "rhs": show(&r1)}))
            });
            rep.tally("alternativity", t, f, first);
            let gens: Vec<usize> = (0..a.rank().min(3)).collect();
            let gp: Vec<(usize, usize)> = gens.iter().flat_map(|&i| gens.iter().map(move |&j| (i, j))).filter(|(i, j)| i != j).collect();
            let (t, f, first) = sweep(&gp, |&(i, j)| {
                let (x, y) = (Elem::mono(LatticeVector::unit(a.rank(), i)), Elem::mono(LatticeVector::unit(a.rank(), j)));
                let lhs = a.mul(&x, &y);
                let rhs = a.mul(&y, &x).neg();
                (lhs != rhs).then(|| json!({"generators": [i, j], "lhs": show(&lhs), "rhs": show(&rhs)}))
            });
            rep.tally("anticommuting_generators", t, f, first);
        }
        Variety::Jordan => {
            let (t, f, first) = sweep(&all, |&(i, j)| {
                let (x, y) = (mono(&degs[i]), mono(&degs[j]));
                let (lhs, rhs) = (a.mul(&x, &y), a.mul(&y, &x));
                (lhs != rhs).then(|| json!({"pair": [degs[i].to_string(), degs[j].to_string()], "lhs": show(&lhs), "rhs": show(&rhs)}))
            });
            rep.tally("commutativity", t, f, first);
            let inner = support(a, &DegreeWindow::new(jordan_radius.min(w.radius)));
            let elems = sample_pairs(a, &inner, &degs, opts);
            let (t, f, first) = sweep(&elems, |(u, v)| {
                let uu = a.mul(u, u);
                let lhs = a.mul(&a.mul(&uu, v), u);
                let rhs = a.mul(&uu, &a.mul(v, u));
                (lhs != rhs).then(|| json!({"u": show(u), "v": show(v), "lhs": show(&lhs), "rhs": show(&rhs)}))
            });
            rep.tally("jordan_identity", t, f, first);
        }
    }

    let (t, f, first) = sweep(&all, |&(i, j)| {
        let (x, y) = (&degs[i], &degs[j]);
        let lhs = a.k(x, y);
        let rhs = a.k(&-x, &-y);
        (lhs != rhs).then(|| json!({"pair": [x.to_string(), y.to_string()], "lhs": lhs.to_text(), "rhs": rhs.to_text()}))
    });
    rep.tally("pre_chevalley_law", t, f, first);

    if let Some(s) = default_anti_involution(a) {
        let (t, f, first) = sweep(&all, |&(i, j)| {
            let (x, y) = (mono(&degs[i]), mono(&degs[j]));
            let lhs = s.apply(&a.mul(&x, &y));
            let rhs = a.mul(&s.apply(&y), &s.apply(&x));
            let sx = s.apply(&x);
            let bad = lhs != rhs || s.apply(&sx) != x || sx.degree() != x.degree();
            bad.then(|| json!({"pair": [degs[i].to_string(), degs[j].to_string()], "lhs": show(&lhs), "rhs": show(&rhs)}))
        });
        rep.tally("anti_involution", t, f, first);
    }
    rep
}

/// All basis pairs `(x, y)` with `x` from `inner` and `y` from `outer`, plus
/// seeded random element pairs from `outer`.
fn sample_pairs(a: &TorusAlgebra, inner: &[LatticeVector], outer: &[LatticeVector], opts: &CheckOptions) -> Vec<(Elem, Elem)> {
    let mut out: Vec<(Elem, Elem)> = Vec::new();
    for x in inner {
        for y in outer {
            out.push((a.mono(&x.0), a.mono(&y.0)));
        }
    }
    let mut rng = opts.rng(37);
    for _ in 0..opts.samples {
        out.push((random_elem(a, outer, &mut rng), random_elem(a, outer, &mut rng)));
    }
    out
}

/// Compares the closed-form quantum constant with the word-rewriting oracle
/// on every pair of window degrees.
pub fn check_quantum_oracle(q: &[Vec<Scalar>], w: &DegreeWindow) -> crate::Result<Report> {
    let a = TorusAlgebra::quantum(q)?;
    let degs = w.enumerate(q.len());
    let mut rep = Report::new(w.radius);
    rep.atoms_checked = degs.len();
    let (t, f, first) = sweep(&pairs(degs.len()), |&(i, j)| {
        let (x, y) = (&degs[i], &degs[j]);
        let lhs = a.k(x, y);
        let rhs = rewrite::quantum_product_coefficient(q, &x.0, &y.0);
        (lhs != rhs).then(|| json!({"pair": [x.to_string(), y.to_string()], "lhs": lhs.to_text(), "rhs": rhs.to_text()}))
    });
    rep.tally("quantum_oracle", t, f, first);
    Ok(rep)
}
