//! The lift `τ̄` of a pre-Chevalley involution `τ` of `L` to
//! `E(L, D, κ) -> E(L, D_τ, κ_τ)`, and the invariance tests for `D` and `κ`.

use std::collections::BTreeMap;

use serde_json::json;

use crate::error::{Error, Result};
use crate::involution::verify_involution;
use crate::lattice::{DegreeWindow, LatticeVector};
use crate::lie::check::{pairs, sweep};
use crate::lie::{centroid_act, window_atoms, Atom, Involution, LieTorus};
use crate::report::Report;
use crate::scalar::Scalar;

use super::algebra::{EalaAlgebra, EalaElem};
use super::cocycle::AffineCocycle;
use super::derivations::{DSubalgebra, SCDer};

/// `x + c + d ↦ τ(x) + τ̄(c) + τ̄(d)` with `τ̄(χ^μ∂_θ) = χ^{-μ}∂_{-θ}` and
/// `τ̄(c^(μ)_λ) = c^(-μ)_{-λ}`.
#[derive(Clone, Debug)]
pub struct EalaInvolution {
    pub tau: Involution,
}

/// `τ̄(χ^μ∂_θ) = χ^{-μ}∂_{-θ}`.
pub fn reflect_der(d: &SCDer) -> SCDer {
    let mut out = SCDer::zero();
    for (mu, t) in &d.terms {
        out.add_term(-mu, t, &Scalar::from_int(-1));
    }
    out
}

impl EalaInvolution {
    pub fn apply(&self, u: &EalaElem) -> EalaElem {
        EalaElem { x: self.tau.apply(&u.x), c: u.c.reflect(), d: reflect_der(&u.d) }
    }
}

/// The lifted map together with its source `E` and target `E^τ`.
#[derive(Clone, Debug)]
pub struct Lift {
    pub tau_bar: EalaInvolution,
    pub source: EalaAlgebra,
    pub target: EalaAlgebra,
    /// `(D, κ)` is `τ`-invariant on the window, so `E^τ = E` and `τ̄` is an
    /// involution of `E`.
    pub is_involution_of_source: bool,
}

/// `η_μ` with `τ χ^μ τ^{-1} = η_μ χ^{-μ}`, read off the window atoms.
pub fn centroid_eta(l: &dyn LieTorus, tau: &Involution, mu: &LatticeVector, atoms: &[Atom]) -> Result<Scalar> {
    let mut eta: Option<Scalar> = None;
    for a in atoms {
        let lhs = tau.apply(&centroid_act(l, mu, &tau.on_atom(a)));
        let rhs = l.centroid_atom(&-mu, a);
        let Some((k, c)) = rhs.iter().next() else {
            if lhs.is_zero() {
                continue;
            }
            return Err(Error::HypothesisViolated(format!("τ χ^{mu} τ is not a multiple of χ^{}", -mu)));
        };
        let r = lhs.coeff(k).div_ref(c)?;
        if lhs != rhs.scale(&r) || eta.as_ref().is_some_and(|e| *e != r) {
            return Err(Error::HypothesisViolated(format!("τ χ^{mu} τ is not a multiple of χ^{}", -mu)));
        }
        eta = Some(r);
    }
    Ok(eta.unwrap_or_else(Scalar::one))
}

/// The rescaling factors `η_μ^{-1/2}` that make `τ̄(χ^μ) = χ^{-μ}`.
pub fn centroid_normalization(l: &dyn LieTorus, tau: &Involution, mus: &[LatticeVector], w: &DegreeWindow) -> Result<BTreeMap<LatticeVector, Scalar>> {
    let atoms = window_atoms(l, w);
    let mut out = BTreeMap::new();
    for mu in mus {
        let eta = centroid_eta(l, tau, mu, &atoms)?;
        out.insert(mu.clone(), eta.sqrt_root_of_unity()?.inv()?);
    }
    Ok(out)
}

/// Lifts `τ` to `τ̄: E -> E^τ`. With `verify`, `τ` is first checked to be a
/// pre-Chevalley involution on the window. The centroid must already be
/// `τ`-normalized on the degrees of `D` in the window.
pub fn lift_involution(e: &EalaAlgebra, tau: &Involution, w: &DegreeWindow, verify: bool) -> Result<Lift> {
    let l = e.torus();
    if verify {
        let rep = verify_involution(l, tau, w);
        for name in ["order_two", "automorphism", "degree_reversal"] {
            if !rep.passed(name) {
                let witness = rep.get(name).map(|c| c.witness.to_string()).unwrap_or_default();
                return Err(Error::NotPreChevalley(format!("{name}: {witness}")));
            }
        }
    }
    let mus: Vec<LatticeVector> = w
        .enumerate(l.nullity())
        .into_iter()
        .filter(|mu| !mu.is_zero() && e.d.space(mu).dim() > 0)
        .collect();
    let atoms = window_atoms(l, w);
    for mu in &mus {
        let eta = centroid_eta(l, tau, mu, &atoms)?;
        if !eta.is_one() {
            return Err(Error::HypothesisViolated(format!(
                "centroid basis is not τ-normalized at {mu}: η = {eta}, rescale χ^μ by η^(-1/2)"
            )));
        }
    }
    let target = EalaAlgebra::assemble(e.l.clone(), e.d.reflected(), e.kappa.reflected());
    let invariant = is_pair_invariant(&e.d, &e.kappa, w);
    Ok(Lift { tau_bar: EalaInvolution { tau: tau.clone() }, source: e.clone(), target, is_involution_of_source: invariant })
}

/// `D_τ = D` on the window, i.e. `U_D^μ = U_D^{-μ}`.
#[allow(non_snake_case)]
pub fn is_D_invariant(d: &DSubalgebra, w: &DegreeWindow) -> bool {
    d.is_invariant(w)
}

/// `(D_τ, κ_τ) = (D, κ)` on the window.
pub fn is_pair_invariant(d: &DSubalgebra, kappa: &AffineCocycle, w: &DegreeWindow) -> bool {
    pair_invariance_report(d, kappa, w).all_pass()
}

/// `U_D^μ = U_D^{-μ}`, and
/// `κ(χ^μ∂_θ, χ^ν∂_γ)(χ^{-μ-ν}∂_{-η}) = κ(χ^{-μ}∂_θ, χ^{-ν}∂_γ)(χ^{μ+ν}∂_η)`.
pub fn pair_invariance_report(d: &DSubalgebra, kappa: &AffineCocycle, w: &DegreeWindow) -> Report {
    let mut rep = Report::new(w.radius);
    let mus = w.enumerate(d.nullity());
    match mus.iter().find(|mu| d.space(mu) != d.space(&-*mu)) {
        None => rep.pass("D_invariant", json!({"degrees": mus.len()})),
        Some(mu) => {
            rep.fail(
                "D_invariant",
                json!({"degree": mu.to_string(), "lhs": format!("dim U^μ = {}", d.space(mu).dim()),
                       "rhs": format!("dim U^-μ = {}", d.space(&-mu).dim())}),
            );
            rep.fail("kappa_invariant", json!({"lhs": "D not invariant", "rhs": "D invariant"}));
            return rep;
        }
    }
    let atoms = d.atoms(w);
    rep.atoms_checked = atoms.len();
    if kappa.is_zero() {
        rep.pass("kappa_invariant", json!({"tested": 0, "kappa": "zero"}));
        return rep;
    }
    let (t, f, first) = sweep(&pairs(atoms.len()), |&(i, j)| {
        let (mu, a) = &atoms[i];
        let (nu, b) = &atoms[j];
        let theta = d.space(mu).basis_hom(*a);
        let gamma = d.space(nu).basis_hom(*b);
        let d1 = SCDer::term(mu.clone(), theta.clone()).ok()?;
        let d2 = SCDer::term(nu.clone(), gamma.clone()).ok()?;
        let d1r = SCDer::term(-mu, theta).ok()?;
        let d2r = SCDer::term(-nu, gamma).ok()?;
        let lhs_k = d.reduce_dual(&kappa.eval(&d1, &d2));
        let rhs_k = d.reduce_dual(&kappa.eval(&d1r, &d2r));
        let s = mu + nu;
        let space = d.space(&s);
        for k in 0..space.dim() {
            let eta = space.basis_hom(k);
            let lhs = lhs_k.pair(&SCDer::term(-&s, eta.scale(&Scalar::from_int(-1))).ok()?);
            let rhs = rhs_k.pair(&SCDer::term(s.clone(), eta).ok()?);
            if lhs != rhs {
                return Some(json!({"atoms": [d.describe_atom(&atoms[i]), d.describe_atom(&atoms[j])],
                                   "eta": k, "lhs": lhs.to_string(), "rhs": rhs.to_string()}));
            }
        }
        None
    });
    rep.tally("kappa_invariant", t, f, first);
    rep
}

/// `(D ∩ D_τ, κ + κ_τ)`, a `τ`-invariant pair.
pub fn invariant_meet(d: &DSubalgebra, kappa: &AffineCocycle) -> (DSubalgebra, AffineCocycle) {
    (d.meet(&d.reflected()), kappa.plus(&kappa.reflected()))
}

/// Verdicts for `τ̄: E -> E^τ` on the window atoms of `E`: order two,
/// bracket homomorphism into `E^τ`, image in `E^τ`, degree and root
/// reversal, and `τ̄ = -id` on `ℋ`.
pub fn verify_eala_involution(lift: &Lift, w: &DegreeWindow) -> Report {
    let (src, dst) = (&lift.source, &lift.target);
    let tb = &lift.tau_bar;
    let atoms = src.atoms(w);
    let elems: Vec<EalaElem> = atoms.iter().map(|a| src.atom_elem(a)).collect();
    let images: Vec<EalaElem> = elems.iter().map(|u| dst.normalize(&tb.apply(u))).collect();
    let mut rep = Report::new(w.radius);
    rep.atoms_checked = atoms.len();
    let idx: Vec<usize> = (0..atoms.len()).collect();
    let desc = |i: usize| src.describe(&atoms[i]);

    let (t, f, first) = sweep(&idx, |&i| {
        let back = src.normalize(&tb.apply(&images[i]));
        (back != elems[i]).then(|| json!({"atom": desc(i), "lhs": src.show(&back), "rhs": desc(i)}))
    });
    rep.tally("order_two", t, f, first);

    let ps: Vec<(usize, usize)> = pairs(atoms.len()).into_iter().filter(|(i, j)| i < j).collect();
    let (t, f, first) = sweep(&ps, |&(i, j)| {
        let lhs = dst.normalize(&tb.apply(&src.bracket(&elems[i], &elems[j])));
        let rhs = dst.bracket(&images[i], &images[j]);
        (lhs != rhs).then(|| json!({"atoms": [desc(i), desc(j)], "lhs": dst.show(&lhs), "rhs": dst.show(&rhs)}))
    });
    rep.tally("homomorphism", t, f, first);

    let (t, f, first) = sweep(&idx, |&i| {
        (!dst.d.contains(&images[i].d)).then(|| json!({"atom": desc(i), "lhs": images[i].d.to_string(), "rhs": "element of D_τ"}))
    });
    rep.tally("image_in_target", t, f, first);

    let amb = src.ambient();
    let (t, f, first) = sweep(&idx, |&i| {
        let (r, d) = src.weight(&atoms[i]);
        let want = (-&r, -&d);
        images[i].weights(amb).into_iter().find(|wt| *wt != want).map(|wt| {
            json!({"atom": desc(i), "lhs": format!("term of weight ({}, {})", wt.0, wt.1),
                   "rhs": format!("({}, {})", want.0, want.1)})
        })
    });
    rep.tally("weight_reversal", t, f, first);

    let cartan: Vec<usize> = idx.iter().copied().filter(|&i| src.weight(&atoms[i]).0.is_zero() && src.weight(&atoms[i]).1.is_zero()).collect();
    let (t, f, first) = sweep(&cartan, |&i| {
        let want = elems[i].neg();
        (images[i] != want).then(|| json!({"atom": desc(i), "lhs": dst.show(&images[i]), "rhs": dst.show(&want)}))
    });
    rep.tally("cartan_negation", t, f, first);
    rep
}

