//! The Lie algebra `E(L, D, κ) = L ⊕ D^{gr*} ⊕ D`, its bracket, its form and
//! its Cartan subalgebra `ℋ = L_0^0 ⊕ (D^0)* ⊕ D^0`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::{DegreeWindow, LatticeVector};
use crate::lie::check::CheckOptions;
use crate::lie::{self, window_atoms, Atom, LieElem, LieTorus};
use crate::scalar::Scalar;

use super::cocycle::{validate_cocycle, AffineCocycle};
use super::derivations::{sigma_raw, DAtom, DSubalgebra, DualElement, SCDer};

/// `x + c + d` with `x` in `L`, `c` in `D^{gr*}` and `d` in `D`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EalaElem {
    pub x: LieElem,
    pub c: DualElement,
    pub d: SCDer,
}

impl EalaElem {
    pub fn zero() -> EalaElem {
        EalaElem::default()
    }

    pub fn lie(x: LieElem) -> EalaElem {
        EalaElem { x, ..EalaElem::default() }
    }

    pub fn dual(c: DualElement) -> EalaElem {
        EalaElem { c, ..EalaElem::default() }
    }

    pub fn der(d: SCDer) -> EalaElem {
        EalaElem { d, ..EalaElem::default() }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn add_scaled(&mut self, other: &EalaElem, s: &Scalar) {
        self.x.add_scaled(&other.x, s);
        self.c.add_scaled(&other.c, s);
        self.d.add_scaled(&other.d, s);
    }

    pub fn add(&self, other: &EalaElem) -> EalaElem {
        let mut e = self.clone();
        e.add_scaled(other, &Scalar::one());
        e
    }

    pub fn scale(&self, s: &Scalar) -> EalaElem {
        let mut e = EalaElem::zero();
        e.add_scaled(self, s);
        e
    }

    pub fn neg(&self) -> EalaElem {
        self.scale(&Scalar::from_int(-1))
    }

    /// The `(root, degree)` pairs of all terms.
    pub fn weights(&self, ambient: usize) -> Vec<(LatticeVector, LatticeVector)> {
        let zero = LatticeVector::zero(ambient);
        let mut out: Vec<(LatticeVector, LatticeVector)> = self.x.iter().map(|(a, _)| (a.root.clone(), a.deg.clone())).collect();
        out.extend(self.c.terms.keys().map(|mu| (zero.clone(), mu.clone())));
        out.extend(self.d.terms.keys().map(|mu| (zero.clone(), mu.clone())));
        out
    }
}

/// A basis atom of `E`: a Lie torus atom, a dual atom `(μ, i)` of
/// `(D^{gr*})^μ`, or a derivation atom `(μ, i)` of `D^μ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EAtom {
    L(Atom),
    C(LatticeVector, usize),
    D(LatticeVector, usize),
}

#[derive(Clone)]
pub struct EalaAlgebra {
    pub l: Arc<dyn LieTorus>,
    pub d: DSubalgebra,
    pub kappa: AffineCocycle,
}

impl fmt::Debug for EalaAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E({}, {:?}, κ{})", self.l.name(), self.d, if self.kappa.is_zero() { " = 0" } else { "" })
    }
}

impl EalaAlgebra {
    /// Requires `D` permissible and `κ` to pass validation on the window.
    pub fn build(l: Arc<dyn LieTorus>, d: DSubalgebra, kappa: AffineCocycle, w: &DegreeWindow) -> Result<EalaAlgebra> {
        let d = d.require_permissible()?;
        let rep = validate_cocycle(&d, &kappa, w, &CheckOptions::default());
        if let Some(c) = rep.failures().first() {
            return Err(Error::InvalidCocycle(format!("{}: {}", c.name, c.witness)));
        }
        Ok(EalaAlgebra { l, d, kappa })
    }

    /// Assembles without validating `D` or `κ`.
    pub fn assemble(l: Arc<dyn LieTorus>, d: DSubalgebra, kappa: AffineCocycle) -> EalaAlgebra {
        EalaAlgebra { l, d, kappa }
    }

    pub fn torus(&self) -> &dyn LieTorus {
        self.l.as_ref()
    }

    pub fn ambient(&self) -> usize {
        self.l.root_system().ambient()
    }

    /// The canonical form: the dual part restricted to `D`.
    pub fn normalize(&self, u: &EalaElem) -> EalaElem {
        EalaElem { x: u.x.clone(), c: self.d.reduce_dual(&u.c), d: u.d.clone() }
    }

    /// `[x1 + c1 + d1, x2 + c2 + d2]`, the three-part bracket.
    pub fn bracket(&self, u: &EalaElem, v: &EalaElem) -> EalaElem {
        let l = self.torus();
        let mut x = lie::bracket(l, &u.x, &v.x);
        x.add_scaled(&u.d.act_unchecked(l, &v.x), &Scalar::one());
        x.add_scaled(&v.d.act_unchecked(l, &u.x), &Scalar::from_int(-1));
        let mut c = sigma_raw(l, &u.x, &v.x);
        c.add_scaled(&u.d.act_dual(&v.c), &Scalar::one());
        c.add_scaled(&v.d.act_dual(&u.c), &Scalar::from_int(-1));
        c.add_scaled(&self.kappa.eval(&u.d, &v.d), &Scalar::one());
        EalaElem { x, c: self.d.reduce_dual(&c), d: u.d.bracket(&v.d) }
    }

    /// `(x1, x2)_L + c1(d2) + c2(d1)`.
    pub fn form(&self, u: &EalaElem, v: &EalaElem) -> Scalar {
        lie::form(self.torus(), &u.x, &v.x) + u.c.pair(&v.d) + v.c.pair(&u.d)
    }

    pub fn atom_elem(&self, a: &EAtom) -> EalaElem {
        match a {
            EAtom::L(b) => EalaElem::lie(LieElem::basis(b.clone())),
            EAtom::C(mu, i) => EalaElem::dual(self.d.dual_atom_elem(mu, *i)),
            EAtom::D(mu, i) => EalaElem::der(self.d.atom_elem(&(mu.clone(), *i))),
        }
    }

    /// All atoms with degree in the window.
    pub fn atoms(&self, w: &DegreeWindow) -> Vec<EAtom> {
        let mut out: Vec<EAtom> = window_atoms(self.torus(), w).into_iter().map(EAtom::L).collect();
        out.extend(self.d.dual_atoms(w).into_iter().map(|(mu, i)| EAtom::C(mu, i)));
        out.extend(self.d.atoms(w).into_iter().map(|(mu, i)| EAtom::D(mu, i)));
        out
    }

    /// Atoms spanning `ℋ`.
    pub fn cartan_atoms(&self) -> Vec<EAtom> {
        self.atoms(&DegreeWindow::new(0)).into_iter().filter(|a| self.weight(a).0.is_zero()).collect()
    }

    /// The `(root, degree)` label of an atom.
    pub fn weight(&self, a: &EAtom) -> (LatticeVector, LatticeVector) {
        match a {
            EAtom::L(b) => (b.root.clone(), b.deg.clone()),
            EAtom::C(mu, _) | EAtom::D(mu, _) => (LatticeVector::zero(self.ambient()), mu.clone()),
        }
    }

    pub fn describe(&self, a: &EAtom) -> String {
        match a {
            EAtom::L(b) => self.l.describe(b),
            EAtom::C(mu, i) => self.d.dual_atom_elem(mu, *i).to_string(),
            EAtom::D(mu, i) => self.d.describe_atom(&(mu.clone(), *i)),
        }
    }

    pub fn show(&self, u: &EalaElem) -> String {
        let mut parts = Vec::new();
        if !u.x.is_zero() {
            parts.push(lie::show(self.torus(), &u.x));
        }
        if !u.c.is_zero() {
            parts.push(u.c.to_string());
        }
        if !u.d.is_zero() {
            parts.push(u.d.to_string());
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// The derivation atom `(μ, i)` as an element of `D`.
    pub fn d_atom(&self, a: &DAtom) -> SCDer {
        self.d.atom_elem(a)
    }
}
