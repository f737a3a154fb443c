//! The nine acceptance criteria, one verdict line each.
//!
//! Criteria 1 and 4 contain one construction each that cannot pass: the
//! Albert torus violates `k(α,β) = k(-α,-β)`, and `Quantum(ζ₃)` has no
//! anti-involution, so `SL(4, Quantum(ζ₃))` has no Chevalley involution.
//! Those lines print FAIL. The target exits successfully only when every
//! other part passes and these two fail in exactly the known way.

use std::path::PathBuf;
use std::process::Command;
use std::sync::Arc;
use std::time::Instant;

use lietorus::eala::{
    eala_axiom_checks, invariant_meet, is_D_invariant, is_pair_invariant, lift_involution, validate_cocycle,
    verify_eala_involution, AffineCocycle, DKind, DSubalgebra, DualElement, EalaAlgebra, EalaElem, SCDer, Subspace,
};
use lietorus::graded::GradedAlgebra;
use lietorus::involution::{chevalley, verify_involution};
use lietorus::jordan::HermitianMatrix;
use lietorus::laws::{check_quantum_oracle, check_torus};
use lietorus::lattice::{DegreeWindow, LatticeVector, Semilattice};
use lietorus::lie::multiloop::MultiLoop;
use lietorus::lie::psl3::Psl3Torus;
use lietorus::lie::sl::SlTorus;
use lietorus::lie::tensor::TensorTorus;
use lietorus::lie::tits::TitsB;
use lietorus::lie::tkk::Tkk;
use lietorus::lie::{check_lie_torus, CheckOptions, Construction, Involution, LieElem, MatrixLie};
use lietorus::tori::{AntiKind, Family, TorusAlgebra};
use lietorus::{Error, Scalar};

/// Outcome of one criterion: whether it passed, whether that outcome is the
/// expected one, and a one-line detail.
struct Verdict {
    pass: bool,
    expected: bool,
    detail: String,
}

impl Verdict {
    fn of(pass: bool, detail: impl Into<String>) -> Verdict {
        Verdict { pass, expected: pass, detail: detail.into() }
    }
}

fn lv(v: &[i64]) -> LatticeVector {
    LatticeVector(v.to_vec())
}

fn z(k: i64, n: i64) -> Scalar {
    Scalar::root_of_unity(k, n).unwrap()
}

fn minus_one() -> Vec<Vec<Scalar>> {
    vec![vec![Scalar::one(), Scalar::from_int(-1)], vec![Scalar::from_int(-1), Scalar::one()]]
}

fn tensor_sl2(n: usize) -> Arc<TensorTorus> {
    Arc::new(TensorTorus::new(Arc::new(MatrixLie::builtin("A", 1).unwrap()), n))
}

fn specs() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs")
}

fn cli_exit(args: &[&str]) -> i32 {
    let out = Command::new(env!("CARGO_BIN_EXE_lietorus")).args(args).output().expect("binary runs");
    out.status.code().unwrap_or(-1)
}

fn torus_laws() -> Verdict {
    let tori = vec![
        (TorusAlgebra::laurent(2), 2),
        (TorusAlgebra::quantum2(z(1, 4)).unwrap(), 2),
        (TorusAlgebra::octonion(3).unwrap(), 2),
        (TorusAlgebra::jordan_plus(&minus_one()).unwrap(), 2),
        (TorusAlgebra::hermitian(&minus_one()).unwrap(), 2),
        (TorusAlgebra::clifford(2, Semilattice::new(2, vec![lv(&[1, 0])]).unwrap()).unwrap(), 2),
        (TorusAlgebra::albert(3).unwrap(), 1),
    ];
    let mut failing = Vec::new();
    let mut albert_only_degree_law = false;
    for (a, r) in &tori {
        let rep = check_torus(a, &DegreeWindow::new(*r), 1, &CheckOptions::with(200, 42));
        let bad: Vec<String> = rep.failures().iter().map(|c| c.name.clone()).collect();
        if !bad.is_empty() {
            albert_only_degree_law = a.family() == Family::Albert && bad == ["pre_chevalley_law"];
            failing.push(format!("{}: {}", a.name(), bad.join(", ")));
        }
    }
    let pass = failing.is_empty();
    let expected = failing.len() == 1 && albert_only_degree_law;
    let detail = if pass { "7 tori, all laws".to_string() } else { format!("6 of 7 tori pass; {}", failing.join("; ")) };
    Verdict { pass, expected, detail }
}

fn quantum_oracle() -> Verdict {
    let ok = [z(1, 4), z(1, 3)].iter().all(|q| {
        let m = vec![vec![Scalar::one(), q.clone()], vec![q.inv().unwrap(), Scalar::one()]];
        check_quantum_oracle(&m, &DegreeWindow::new(3)).unwrap().all_pass()
    });
    Verdict::of(ok, "q = ζ₄ and ζ₃, all pairs in R=3")
}

/// The seven constructions of criteria 3 and 4 with their windows.
fn constructions() -> Vec<(Construction, i64)> {
    let sl = SlTorus::new(4, TorusAlgebra::quantum2(z(1, 3)).unwrap()).unwrap();
    let psl3 = Psl3Torus::new(TorusAlgebra::octonion(3).unwrap()).unwrap();
    let tkk = Tkk::new(Arc::new(TorusAlgebra::jordan_plus(&minus_one()).unwrap())).unwrap();
    let q = TorusAlgebra::quantum(&minus_one()).unwrap();
    let sigma = q.anti_involution(AntiKind::SigmaE(vec![1, 1])).unwrap();
    let h = HermitianMatrix::new(2, q, sigma).unwrap();
    let idem = vec![h.idempotent(0), h.idempotent(1)];
    let tkk_c = Tkk::with_idempotents(Arc::new(h), idem).unwrap();
    let tits = TitsB::new(3, 1, vec![lv(&[0]), lv(&[1])]).unwrap();
    let (ml, tau) = MultiLoop::sl2_example().unwrap();
    vec![
        (Construction::Sl(Arc::new(sl), None), 2),
        (Construction::Tensor(tensor_sl2(1)), 2),
        (Construction::Psl3(Arc::new(psl3), None), 1),
        (Construction::Tkk(Arc::new(tkk)), 2),
        (Construction::Tkk(Arc::new(tkk_c)), 2),
        (Construction::TitsB(Arc::new(tits)), 1),
        (Construction::MultiLoop(Arc::new(ml), Some(tau), None), 2),
    ]
}

fn lie_torus_axioms() -> Verdict {
    let mut bad = Vec::new();
    for (c, r) in constructions() {
        let l = c.lie();
        let rep = check_lie_torus(l.as_ref(), &DegreeWindow::new(r), &CheckOptions::default());
        if !rep.all_pass() {
            bad.push(format!("{}: {}", l.name(), rep.failures().iter().map(|c| c.name.clone()).collect::<Vec<_>>().join(", ")));
        }
    }
    Verdict::of(bad.is_empty(), if bad.is_empty() { "7 constructions, LT1-LT4, Jacobi, alternation".into() } else { bad.join("; ") })
}

fn chevalley_involutions() -> Verdict {
    let mut bad = Vec::new();
    let mut only_sl_zeta3 = true;
    for (i, (c, r)) in constructions().into_iter().enumerate() {
        let l = c.lie();
        match chevalley(&c) {
            Ok(tau) => {
                let rep = verify_involution(l.as_ref(), &tau, &DegreeWindow::new(r));
                if !rep.all_pass() {
                    only_sl_zeta3 = false;
                    bad.push(format!("{}: {}", l.name(), rep.failures().iter().map(|c| c.name.clone()).collect::<Vec<_>>().join(", ")));
                }
            }
            Err(e) => {
                only_sl_zeta3 &= i == 0 && matches!(e, Error::MissingAntiInvolution(_));
                bad.push(format!("{}: {e}", l.name()));
            }
        }
    }
    let pass = bad.is_empty();
    let detail = if pass { "7 constructions, all verdicts".to_string() } else { format!("6 of 7 pass; {}", bad.join("; ")) };
    Verdict { pass, expected: bad.len() == 1 && only_sl_zeta3, detail }
}

fn affine_sl2() -> (Arc<TensorTorus>, EalaAlgebra) {
    let t = tensor_sl2(1);
    let d = DSubalgebra::build(t.clone(), DKind::DegreeOnly { u: Subspace::full(1) }).unwrap();
    let e = EalaAlgebra::build(t.clone(), d, AffineCocycle::Zero, &DegreeWindow::new(3)).unwrap();
    (t, e)
}

fn eala_assembly() -> Verdict {
    let (t, e) = affine_sl2();
    let w = DegreeWindow::new(3);
    let rep = eala_axiom_checks(&e, &w, &CheckOptions::default());
    let axioms = ["A1", "A2", "A3", "A5", "A6"].iter().all(|a| rep.passed(a)) && rep.all_pass();
    let x = EalaElem::lie(LieElem::basis(t.atom(0, lv(&[1]))));
    let y = EalaElem::lie(LieElem::basis(t.atom(2, lv(&[-1]))));
    let want = EalaElem { x: LieElem::basis(t.atom(1, lv(&[0]))), c: DualElement::atom(lv(&[0]), &lv(&[1])), d: SCDer::zero() };
    let bracket = e.bracket(&x, &y) == want;
    Verdict::of(axioms && bracket, format!("axioms {}, [e⊗t, f⊗t⁻¹] = h⊗1 + c^(0)_1: {bracket}", if axioms { "pass" } else { "fail" }))
}

fn lift_theorem() -> Verdict {
    let (t, e) = affine_sl2();
    let w = DegreeWindow::new(3);
    let tau = chevalley(&Construction::Tensor(t.clone())).unwrap();
    let lift = lift_involution(&e, &tau, &w, true).unwrap();
    let degree_only = verify_eala_involution(&lift, &w).all_pass() && lift.is_involution_of_source;
    let mut full = true;
    for (n, r) in [(1, 3), (2, 1)] {
        let t = tensor_sl2(n);
        let w = DegreeWindow::new(r);
        let d = DSubalgebra::build(t.clone(), DKind::FullScder).unwrap();
        let invariant = is_D_invariant(&d, &w);
        let e = EalaAlgebra::build(t.clone(), d, AffineCocycle::Zero, &w).unwrap();
        let tau = chevalley(&Construction::Tensor(t)).unwrap();
        let lift = lift_involution(&e, &tau, &w, true).unwrap();
        full &= invariant && lift.is_involution_of_source && verify_eala_involution(&lift, &w).all_pass();
    }
    Verdict::of(degree_only && full, format!("degree-only D: {degree_only}; full_scder (n = 1, 2): {full}"))
}

fn skew_counterexample() -> Verdict {
    let t = tensor_sl2(2);
    let w = DegreeWindow::new(2);
    let kind = DKind::SkewExample { u: Subspace::full(2), gamma: lv(&[1, 0]), uplus: Subspace::full(2), uminus: Subspace::zero(2) };
    let d = DSubalgebra::build(t, kind).unwrap();
    let closed = d.closure_report(&w).all_pass();
    let not_invariant = !is_D_invariant(&d, &w);
    let (dm, km) = invariant_meet(&d, &AffineCocycle::Zero);
    let meet = is_pair_invariant(&dm, &km, &w);
    let ok = d.permissible && closed && not_invariant && meet;
    Verdict::of(ok, format!("permissible {}, closed {closed}, D invariant {}, meet invariant {meet}", d.permissible, !not_invariant))
}

fn multiloop_example() -> Verdict {
    let (ml, tau) = MultiLoop::sl2_example().unwrap();
    let i = z(1, 4);
    let one = Scalar::one();
    let fixed = ml.residue_space(&lv(&[0]));
    let e_minus_f = vec![one.clone(), Scalar::zero(), -&one];
    let fixed_ok = fixed.len() == 1 && {
        let v = &fixed[0];
        let c = &v[0];
        !c.is_zero() && v.iter().zip(&e_minus_f).all(|(x, y)| *x == c * y)
    };
    let ad = ml.g.ad(&ml.hprime[0]);
    let y = vec![one.clone(), -&i, one.clone()];
    let zz = vec![one.clone(), i.clone(), one.clone()];
    let scale = |v: &[Scalar], c: i64| v.iter().map(|x| x * &Scalar::from_int(c)).collect::<Vec<_>>();
    let eig = ad.apply(&y) == scale(&y, -1) && ad.apply(&zz) == scale(&zz, 1);
    let l = Arc::new(ml);
    let c = Construction::MultiLoop(l.clone(), Some(tau), None);
    let inv = verify_involution(l.as_ref(), &chevalley(&c).unwrap(), &DegreeWindow::new(3)).all_pass();
    Verdict::of(fixed_ok && eig && inv, format!("g^0 = span(e-f): {fixed_ok}, eigenvalues -1/+1: {eig}, chevalley at R=3: {inv}"))
}

fn negative_controls() -> Verdict {
    let spec = |s: &str| specs().join(s).to_string_lossy().into_owned();
    let corrupted = {
        let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(spec("sl2_corrupted.json")).unwrap()).unwrap();
        let c = lietorus::spec::lie_from_json(&v).unwrap().construction;
        let rep = check_lie_torus(c.lie().as_ref(), &DegreeWindow::new(1), &CheckOptions::default());
        !rep.passed("jacobi") && rep.get("jacobi").is_some_and(|c| c.witness.get("example").is_some())
    };
    let identity = {
        let t = tensor_sl2(1);
        let rep = verify_involution(t.as_ref(), &Involution::identity(), &DegreeWindow::new(2));
        !rep.all_pass() && rep.failures().iter().all(|c| c.witness.get("example").is_some())
    };
    let kappa = {
        let t = tensor_sl2(2);
        let d = DSubalgebra::build(t, DKind::FullScder).unwrap();
        let value = DualElement::atom(lv(&[2, 0]), &lv(&[0, 1]));
        let k = AffineCocycle::table(&d, &[(lv(&[1, 0]), 0)], &[(0, 0, value)]).unwrap();
        let rep = validate_cocycle(&d, &k, &DegreeWindow::new(1), &CheckOptions::default());
        !rep.passed("alternating") && rep.get("alternating").is_some_and(|c| c.witness.get("example").is_some())
    };
    let exits = [
        cli_exit(&["verify", "--suite", "lietorus", "--spec", &spec("sl2_corrupted.json")]),
        cli_exit(&["verify", "--suite", "involution", "--spec", &spec("tensor_sl2_identity.json")]),
        cli_exit(&["verify", "--suite", "eala", "--spec", &spec("kappa_self_pairing.json")]),
    ];
    let ok = corrupted && identity && kappa && exits == [1, 1, 1];
    Verdict::of(ok, format!("corrupted table {corrupted}, identity {identity}, κ(d,d) ≠ 0 {kappa}, CLI exits {exits:?}"))
}

fn main() {
    let criteria: Vec<(&str, fn() -> Verdict)> = vec![
        ("torus laws", torus_laws),
        ("quantum structure-constant oracle", quantum_oracle),
        ("Lie torus axioms", lie_torus_axioms),
        ("Chevalley involutions", chevalley_involutions),
        ("EALA assembly", eala_assembly),
        ("lifted involution", lift_theorem),
        ("non-invariance counterexample", skew_counterexample),
        ("multi-loop worked example", multiloop_example),
        ("negative controls", negative_controls),
    ];
    let results: Vec<(Verdict, f64)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|(_, f)| {
                s.spawn(move || {
                    let start = Instant::now();
                    let v = f();
                    (v, start.elapsed().as_secs_f64())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("criterion panicked")).collect()
    });
    let mut unexpected = 0;
    for (k, ((name, _), (v, secs))) in criteria.iter().zip(&results).enumerate() {
        let status = if v.pass { "PASS" } else { "FAIL" };
        let note = if v.expected { "" } else { " [UNEXPECTED]" };
        println!("criterion {} {status} {name} ({secs:.1}s): {}{note}", k + 1, v.detail);
        if !v.expected {
            unexpected += 1;
        }
    }
    let passed = results.iter().filter(|(v, _)| v.pass).count();
    println!("acceptance: {passed}/9 criteria pass, {unexpected} unexpected outcomes");
    if unexpected > 0 {
        std::process::exit(1);
    }
}
