//! The verification suites, the build summary and the lift driver.

use lietorus::eala::{
    eala_axiom_checks, invariant_meet, lift_involution, pair_invariance_report, validate_cocycle, verify_eala_involution,
    AffineCocycle, DSubalgebra, EalaAlgebra,
};
use lietorus::graded::GradedAlgebra;
use lietorus::involution::{chevalley, verify_involution};
use lietorus::laws::{check_quantum_oracle, check_torus};
use lietorus::lattice::DegreeWindow;
use lietorus::lie::{check_lie_torus, window_atoms, CheckOptions, Involution, LieTorus};
use lietorus::report::Report;
use lietorus::spec::{AnySpec, EalaSpec, InvolutionChoice, LieSpec};
use lietorus::tori::{Family, TorusAlgebra};
use lietorus::{Error, Result};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Torus,
    Lietorus,
    Involution,
    Eala,
}

fn wrong_kind(suite: &str, want: &str) -> Error {
    Error::Spec(format!("the {suite} suite needs a {want} spec"))
}

fn lie_of(spec: &AnySpec, suite: &str) -> Result<LieSpec> {
    match spec {
        AnySpec::Lie(l) => Ok(l.clone()),
        AnySpec::Eala(e) => Ok(e.lie.clone()),
        AnySpec::Torus(..) => Err(wrong_kind(suite, "Lie torus")),
    }
}

fn eala_of(spec: &AnySpec, suite: &str) -> Result<EalaSpec> {
    match spec {
        AnySpec::Eala(e) => Ok((**e).clone()),
        _ => Err(wrong_kind(suite, "EALA")),
    }
}

pub fn verify(spec: &AnySpec, suite: Suite, w: &DegreeWindow, opts: &CheckOptions) -> Result<Report> {
    match suite {
        Suite::Torus => match spec {
            AnySpec::Torus(a, _) => Ok(torus_suite(a, w, opts)),
            _ => Err(wrong_kind("torus", "torus")),
        },
        Suite::Lietorus => {
            let l = lie_of(spec, "lietorus")?.construction.lie();
            Ok(check_lie_torus(l.as_ref(), w, opts))
        }
        Suite::Involution => Ok(involution_suite(&lie_of(spec, "involution")?, w)),
        Suite::Eala => {
            let (e, mut rep) = match assemble(&eala_of(spec, "eala")?, w, opts) {
                Ok(x) => x,
                Err(rep) => return Ok(rep),
            };
            rep.absorb("", eala_axiom_checks(&e, w, opts));
            Ok(rep)
        }
    }
}

fn torus_suite(a: &TorusAlgebra, w: &DegreeWindow, opts: &CheckOptions) -> Report {
    let mut rep = check_torus(a, w, 1, opts);
    if a.family() == Family::Quantum {
        let n = a.rank();
        let q: Vec<Vec<_>> = (0..n).map(|i| (0..n).map(|j| a.q(i, j)).collect()).collect();
        if let Ok(oracle) = check_quantum_oracle(&q, w) {
            rep.checks.extend(oracle.checks);
        }
    }
    rep
}

fn involution_of(spec: &LieSpec) -> Result<Involution> {
    match spec.involution {
        InvolutionChoice::Chevalley => chevalley(&spec.construction),
        InvolutionChoice::Identity => Ok(Involution::identity()),
    }
}

fn involution_suite(spec: &LieSpec, w: &DegreeWindow) -> Report {
    match involution_of(spec) {
        Ok(tau) => verify_involution(spec.construction.lie().as_ref(), &tau, w),
        Err(e) => {
            let mut rep = Report::new(w.radius);
            rep.fail("chevalley", json!({"construction": spec.construction.lie().name(), "error": e.to_string()}));
            rep
        }
    }
}

/// Validates `κ` and permissibility of `D`, then assembles `E`. On a
/// violation the report so far is returned as the error.
fn assemble(spec: &EalaSpec, w: &DegreeWindow, opts: &CheckOptions) -> std::result::Result<(EalaAlgebra, Report), Report> {
    let (d, kappa): (DSubalgebra, AffineCocycle) =
        if spec.meet { invariant_meet(&spec.d, &spec.kappa) } else { (spec.d.clone(), spec.kappa.clone()) };
    let mut rep = Report::new(w.radius);
    for c in validate_cocycle(&d, &kappa, w, opts).checks {
        let mut c = c;
        c.name = format!("cocycle_{}", c.name);
        rep.checks.push(c);
    }
    if d.permissible {
        rep.pass("permissible", json!({"D": d.kind.name()}));
    } else {
        rep.fail("permissible", json!({"D": d.kind.name(), "lhs": "ev: Λ -> (D^0)* not injective", "rhs": "injective"}));
    }
    if !rep.all_pass() {
        return Err(rep);
    }
    let l = spec.lie.construction.lie();
    Ok((EalaAlgebra::assemble(l, d, kappa), rep))
}

/// Lifts the chosen involution of `L` to `E` and verifies the lift.
pub fn lift(spec: &AnySpec, w: &DegreeWindow, opts: &CheckOptions) -> Result<Report> {
    let spec = eala_of(spec, "lift")?;
    let (e, mut rep) = match assemble(&spec, w, opts) {
        Ok(x) => x,
        Err(rep) => return Ok(rep),
    };
    let tau = match involution_of(&spec.lie) {
        Ok(t) => t,
        Err(err) => {
            rep.fail("chevalley", json!({"error": err.to_string()}));
            return Ok(rep);
        }
    };
    match lift_involution(&e, &tau, w, true) {
        Ok(lift) => {
            let inv = pair_invariance_report(&e.d, &e.kappa, w);
            rep.pass(
                "lift",
                json!({"source": format!("{:?}", lift.source), "target": format!("{:?}", lift.target),
                       "involution_of_source": lift.is_involution_of_source,
                       "pair_invariance": inv.checks.iter().map(|c| json!({"name": c.name, "holds": c.status == lietorus::report::Status::Pass})).collect::<Vec<_>>()}),
            );
            rep.absorb("", verify_eala_involution(&lift, w));
        }
        Err(err) => rep.fail("lift", json!({"error": err.to_string()})),
    }
    Ok(rep)
}

fn lie_summary(l: &dyn LieTorus, w: &DegreeWindow) -> Value {
    let atoms = window_atoms(l, w);
    let mut by_root: Vec<(String, usize)> = Vec::new();
    for a in &atoms {
        let r = a.root.to_string();
        match by_root.last_mut() {
            Some((last, n)) if *last == r => *n += 1,
            _ => by_root.push((r, 1)),
        }
    }
    let rs = l.root_system();
    json!({"name": l.name(), "root_system": rs.label, "rank": rs.rank, "nullity": l.nullity(), "window": w.radius,
           "atoms": atoms.len(),
           "atoms_by_root": by_root.into_iter().map(|(r, n)| json!({"root": r, "count": n})).collect::<Vec<_>>()})
}

pub fn build_summary(spec: &AnySpec, w: &DegreeWindow) -> Value {
    match spec {
        AnySpec::Torus(a, _) => {
            let degs = w.enumerate(a.rank()).into_iter().filter(|d| a.in_support(d)).count();
            json!({"kind": "torus", "family": a.family().name(), "name": format!("{a:?}"), "rank": a.rank(),
                   "window": w.radius, "supported_degrees": degs})
        }
        AnySpec::Lie(l) => {
            let mut s = lie_summary(l.construction.lie().as_ref(), w);
            s["kind"] = json!("lie_torus");
            s["construction"] = json!(l.construction.tag());
            s
        }
        AnySpec::Eala(e) => {
            let mut s = lie_summary(e.lie.construction.lie().as_ref(), w);
            s["kind"] = json!("eala");
            s["construction"] = json!(e.lie.construction.tag());
            s["D"] = json!(e.d.kind.name());
            s["D_atoms"] = json!(e.d.atoms(w).len());
            s["permissible"] = json!(e.d.permissible);
            s["kappa_zero"] = json!(e.kappa.is_zero());
            s
        }
    }
}
