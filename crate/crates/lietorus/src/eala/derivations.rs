//! Skew centroidal derivations `χ^μ ∂_θ`, their graded duals `c^(μ)_λ`, and
//! graded subalgebras `D` of `SCDer(L)` given by per-degree spaces `U_D^μ`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use serde_json::json;

use crate::error::{Error, Result};
use crate::lattice::{DegreeWindow, GroupHom, LatticeVector};
use crate::lie::check::sweep;
use crate::lie::{LieElem, LieTorus};
use crate::linalg::{hnf, integer_kernel, lattice_coords, ScalarMatrix};
use crate::report::Report;
use crate::scalar::Scalar;

fn lattice_scalars(mu: &LatticeVector) -> Vec<Scalar> {
    mu.0.iter().map(|x| Scalar::from_int(*x)).collect()
}

/// A subspace of `Hom(Λ, K) = K^n`, held by its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    n: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(n: usize) -> Subspace {
        Subspace { n, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(n: usize) -> Subspace {
        Subspace::span(n, &(0..n).map(|i| GroupHom::coordinate(n, i).values).collect::<Vec<_>>())
    }

    pub fn span(n: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        let rows: Vec<Vec<Scalar>> = vectors.iter().filter(|v| v.iter().any(|x| !x.is_zero())).cloned().collect();
        if rows.is_empty() {
            return Subspace::zero(n);
        }
        let (r, pivots) = ScalarMatrix::from_rows(rows).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { n, basis, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn basis_hom(&self, i: usize) -> GroupHom {
        GroupHom::new(self.basis[i].clone())
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates on the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let c: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (ci, b) in c.iter().zip(&self.basis) {
            for (r, x) in rest.iter_mut().zip(b) {
                *r -= &(ci * x);
            }
        }
        rest.iter().all(Scalar::is_zero).then_some(c)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }

    /// `{v : Σ v_i w_i = 0 for all w in self}`.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.n);
        }
        Subspace::span(self.n, &ScalarMatrix::from_rows(self.basis.clone()).kernel_basis())
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let mut rows = self.annihilator().basis;
        rows.extend(other.annihilator().basis);
        Subspace::span(self.n, &rows).annihilator()
    }

    /// `{θ in self : θ(μ) = 0}`.
    pub fn vanishing_at(&self, mu: &LatticeVector) -> Subspace {
        self.intersect(&Subspace::span(self.n, &[lattice_scalars(mu)]).annihilator())
    }

    /// The canonical representative of the functional `θ ↦ θ(v)` restricted
    /// to this subspace: supported on the pivot columns.
    pub fn restrict_functional(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.n];
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            out[p] = b.iter().zip(v).fold(Scalar::zero(), |acc, (x, y)| acc + x * y);
        }
        out
    }

    /// Whether `ev(λ)(θ) = θ(λ)` is injective on `Λ`.
    pub fn separates_points(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        if self.basis.is_empty() {
            return false;
        }
        integer_kernel(&ScalarMatrix::from_rows(self.basis.clone())).is_empty()
    }
}

/// An element `Σ χ^μ ∂_{θ_μ}` of `SCDer(L)`, one homomorphism per degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SCDer {
    pub terms: BTreeMap<LatticeVector, GroupHom>,
}

impl SCDer {
    pub fn zero() -> SCDer {
        SCDer::default()
    }

    /// `χ^μ ∂_θ`, which is skew only when `θ(μ) = 0`.
    pub fn term(mu: LatticeVector, theta: GroupHom) -> Result<SCDer> {
        if !theta.eval(&mu).is_zero() {
            return Err(Error::HypothesisViolated(format!("χ^{mu}∂_{theta} has θ(μ) ≠ 0")));
        }
        let mut d = SCDer::zero();
        d.add_term(mu, &theta, &Scalar::one());
        Ok(d)
    }

    /// The degree derivation `∂_θ`.
    pub fn degree(theta: GroupHom) -> SCDer {
        let n = theta.values.len();
        SCDer::term(LatticeVector::zero(n), theta).expect("θ(0) = 0")
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mu: LatticeVector, theta: &GroupHom, c: &Scalar) {
        if c.is_zero() || theta.is_zero() {
            return;
        }
        let next = match self.terms.get(&mu) {
            Some(t) => t.add_scaled(theta, c),
            None => theta.scale(c),
        };
        if next.is_zero() {
            self.terms.remove(&mu);
        } else {
            self.terms.insert(mu, next);
        }
    }

    pub fn add_scaled(&mut self, other: &SCDer, c: &Scalar) {
        for (mu, t) in &other.terms {
            self.add_term(mu.clone(), t, c);
        }
    }

    pub fn add(&self, other: &SCDer) -> SCDer {
        let mut d = self.clone();
        d.add_scaled(other, &Scalar::one());
        d
    }

    pub fn scale(&self, c: &Scalar) -> SCDer {
        let mut d = SCDer::zero();
        d.add_scaled(self, c);
        d
    }

    pub fn neg(&self) -> SCDer {
        self.scale(&Scalar::from_int(-1))
    }

    /// `[χ^μ∂_θ, χ^ν∂_ψ] = χ^{μ+ν}(θ(ν)∂_ψ - ψ(μ)∂_θ)`.
    pub fn bracket(&self, other: &SCDer) -> SCDer {
        let mut out = SCDer::zero();
        for (mu, theta) in &self.terms {
            for (nu, psi) in &other.terms {
                let deg = mu + nu;
                out.add_term(deg.clone(), psi, &theta.eval(nu));
                out.add_term(deg, theta, &-psi.eval(mu));
            }
        }
        out
    }

    /// `(χ^μ∂_θ)(x) = θ(λ) χ^μ x` for `x` of degree `λ`; the centroid action
    /// is taken on trust.
    pub(crate) fn act_unchecked(&self, l: &dyn LieTorus, x: &LieElem) -> LieElem {
        let mut out = LieElem::zero();
        for (mu, theta) in &self.terms {
            for (a, c) in x.iter() {
                let s = theta.eval(&a.deg);
                if !s.is_zero() {
                    out.add_scaled(&l.centroid_atom(mu, a), &(&s * c));
                }
            }
        }
        out
    }

    /// Contragredient action `(d.φ)(d') = φ([d', d])`.
    pub fn act_dual(&self, c: &DualElement) -> DualElement {
        let mut out = DualElement::zero();
        for (nu, psi) in &self.terms {
            for (mu, v) in &c.terms {
                let deg = mu + nu;
                let a = psi.eval_vec(v);
                let b = psi.eval(&deg);
                let w: Vec<Scalar> = v.iter().zip(&nu.0).map(|(vi, ni)| &(&a * &Scalar::from_int(*ni)) + &(&b * vi)).collect();
                out.add_vec(deg, &w, &Scalar::one());
            }
        }
        out
    }
}

impl fmt::Display for SCDer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(mu, t)| format!("χ^{mu}∂_{t}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `(χ^μ∂_θ)(x) = θ(λ) χ^μ x`; fails when `χ^μ` is not in the centroid.
pub fn scder_action(l: &dyn LieTorus, d: &SCDer, x: &LieElem) -> Result<LieElem> {
    if let Some(mu) = d.terms.keys().find(|mu| !l.in_centroid_support(mu)) {
        return Err(Error::UnsupportedCentroidDegree(mu.to_string()));
    }
    Ok(d.act_unchecked(l, x))
}

/// An element of `SCDer(L)^{gr*}`: per degree `μ` a vector `v` in `K^n`
/// standing for `Σ v_i c^(μ)_{e_i}`, so that `c^(μ)_λ` is the vector `λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DualElement {
    pub terms: BTreeMap<LatticeVector, Vec<Scalar>>,
}

impl DualElement {
    pub fn zero() -> DualElement {
        DualElement::default()
    }

    /// `c^(μ)_λ`.
    pub fn atom(mu: LatticeVector, lambda: &LatticeVector) -> DualElement {
        DualElement::from_vec(mu, lattice_scalars(lambda))
    }

    pub fn from_vec(mu: LatticeVector, v: Vec<Scalar>) -> DualElement {
        let mut c = DualElement::zero();
        c.add_vec(mu, &v, &Scalar::one());
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_vec(&mut self, mu: LatticeVector, v: &[Scalar], c: &Scalar) {
        if c.is_zero() || v.iter().all(Scalar::is_zero) {
            return;
        }
        let next: Vec<Scalar> = match self.terms.get(&mu) {
            Some(w) => w.iter().zip(v).map(|(a, b)| a + &(b * c)).collect(),
            None => v.iter().map(|b| b * c).collect(),
        };
        if next.iter().all(Scalar::is_zero) {
            self.terms.remove(&mu);
        } else {
            self.terms.insert(mu, next);
        }
    }

    pub fn add_scaled(&mut self, other: &DualElement, c: &Scalar) {
        for (mu, v) in &other.terms {
            self.add_vec(mu.clone(), v, c);
        }
    }

    pub fn add(&self, other: &DualElement) -> DualElement {
        let mut e = self.clone();
        e.add_scaled(other, &Scalar::one());
        e
    }

    pub fn sub(&self, other: &DualElement) -> DualElement {
        let mut e = self.clone();
        e.add_scaled(other, &Scalar::from_int(-1));
        e
    }

    pub fn scale(&self, c: &Scalar) -> DualElement {
        let mut e = DualElement::zero();
        e.add_scaled(self, c);
        e
    }

    /// `c^(μ)_λ(χ^{-μ}∂_θ) = θ(λ)`, and zero against other degrees.
    pub fn pair(&self, d: &SCDer) -> Scalar {
        let mut acc = Scalar::zero();
        for (mu, v) in &self.terms {
            if let Some(theta) = d.terms.get(&-mu) {
                acc += &theta.eval_vec(v);
            }
        }
        acc
    }

    /// `τ̄(c^(μ)_λ) = c^(-μ)_{-λ}`.
    pub fn reflect(&self) -> DualElement {
        let mut e = DualElement::zero();
        for (mu, v) in &self.terms {
            e.add_vec(-mu, v, &Scalar::from_int(-1));
        }
        e
    }
}

impl fmt::Display for DualElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(mu, v)| format!("c^({mu})_{}", GroupHom::new(v.clone())))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `σ_D(x, y)(d) = (d(x) | y)` as an element of `SCDer^{gr*}` before
/// restriction to `D`.
pub fn sigma_raw(l: &dyn LieTorus, x: &LieElem, y: &LieElem) -> DualElement {
    let mut out = DualElement::zero();
    for (a, ca) in x.iter() {
        if a.deg.is_zero() {
            continue;
        }
        for (b, cb) in y.iter() {
            let deg = &a.deg + &b.deg;
            let mu = -&deg;
            if !l.in_centroid_support(&mu) {
                continue;
            }
            let moved = l.centroid_atom(&mu, a);
            let s = crate::lie::form(l, &moved, &LieElem::basis(b.clone()));
            if !s.is_zero() {
                out.add_vec(deg, &lattice_scalars(&a.deg), &(&s * &(ca * cb)));
            }
        }
    }
    out
}

/// `σ_D(x, y)` restricted to `D`.
pub fn sigma_d(l: &dyn LieTorus, d: &DSubalgebra, x: &LieElem, y: &LieElem) -> DualElement {
    d.reduce_dual(&sigma_raw(l, x, y))
}

/// How the per-degree spaces `U_D^μ` are produced.
#[derive(Clone, Debug, PartialEq)]
pub enum DKind {
    /// `SCDer(L)` itself: `U^μ = {θ : θ(μ) = 0}` for `μ` in `Γ`.
    FullScder,
    /// `D = D^0` with `U^0 = U`.
    DegreeOnly { u: Subspace },
    /// `U^0 = U`, `U^μ = {θ in U' : θ(μ) = 0}` for `0 ≠ μ` in `Γ'`.
    Triple { u: Subspace, uprime: Subspace, gamma_prime: Vec<LatticeVector> },
    /// `U^0 = U`, `U^{±γ} = {θ in U_± : θ(γ) = 0}`, zero elsewhere.
    SkewExample { u: Subspace, gamma: LatticeVector, uplus: Subspace, uminus: Subspace },
    /// The span, degree by degree, of the listed terms `χ^μ∂_θ`.
    Explicit(Vec<(LatticeVector, GroupHom)>),
    /// `D_τ = τ̄(D)`: `U^μ_{D_τ} = U^{-μ}_D`.
    Reflected(Box<DKind>),
    /// Degree-wise intersection.
    Meet(Box<DKind>, Box<DKind>),
}

impl DKind {
    fn space(&self, n: usize, mu: &LatticeVector, l: &dyn LieTorus, gp: &[Vec<i128>]) -> Subspace {
        let in_gamma = l.in_centroid_support(mu);
        match self {
            DKind::FullScder if in_gamma => Subspace::full(n).vanishing_at(mu),
            DKind::FullScder => Subspace::zero(n),
            DKind::DegreeOnly { u } if mu.is_zero() => u.clone(),
            DKind::DegreeOnly { .. } => Subspace::zero(n),
            DKind::Triple { u, .. } if mu.is_zero() => u.clone(),
            DKind::Triple { uprime, .. } => {
                let in_gp = !gp.is_empty() && lattice_coords(gp, &mu.as_i128()).is_some();
                if in_gamma && in_gp {
                    uprime.vanishing_at(mu)
                } else {
                    Subspace::zero(n)
                }
            }
            DKind::SkewExample { u, .. } if mu.is_zero() => u.clone(),
            DKind::SkewExample { gamma, uplus, .. } if mu == gamma => uplus.vanishing_at(mu),
            DKind::SkewExample { gamma, uminus, .. } if *mu == -gamma => uminus.vanishing_at(mu),
            DKind::SkewExample { .. } => Subspace::zero(n),
            DKind::Explicit(gens) => {
                let vs: Vec<Vec<Scalar>> = gens.iter().filter(|(m, _)| m == mu).map(|(_, t)| t.values.clone()).collect();
                Subspace::span(n, &vs)
            }
            DKind::Reflected(k) => k.space(n, &-mu, l, gp),
            DKind::Meet(a, b) => a.space(n, mu, l, gp).intersect(&b.space(n, mu, l, gp)),
        }
    }

    fn gamma_prime(&self) -> Vec<LatticeVector> {
        match self {
            DKind::Triple { gamma_prime, .. } => gamma_prime.clone(),
            DKind::Reflected(k) => k.gamma_prime(),
            DKind::Meet(a, b) => {
                let mut v = a.gamma_prime();
                v.extend(b.gamma_prime());
                v
            }
            _ => Vec::new(),
        }
    }

    pub fn name(&self) -> String {
        match self {
            DKind::FullScder => "full_scder".into(),
            DKind::DegreeOnly { .. } => "degree_only".into(),
            DKind::Triple { .. } => "triple".into(),
            DKind::SkewExample { .. } => "skew_example".into(),
            DKind::Explicit(_) => "explicit".into(),
            DKind::Reflected(k) => format!("reflected({})", k.name()),
            DKind::Meet(a, b) => format!("meet({}, {})", a.name(), b.name()),
        }
    }
}

/// A basis element `χ^μ ∂_{u_i}` of `D^μ`, with `u_i` the `i`-th echelon
/// basis vector of `U_D^μ`.
pub type DAtom = (LatticeVector, usize);

/// A graded subalgebra `D = ⊕ D^μ` of `SCDer(L)`.
#[derive(Clone)]
pub struct DSubalgebra {
    pub l: Arc<dyn LieTorus>,
    pub kind: DKind,
    pub permissible: bool,
    /// Injectivity of `ev` is decided; discreteness of its image is not.
    pub discreteness: &'static str,
    gp_basis: Vec<Vec<i128>>,
    cache: Arc<RwLock<HashMap<LatticeVector, Arc<Subspace>>>>,
}

impl fmt::Debug for DSubalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DSubalgebra({}, permissible: {})", self.kind.name(), self.permissible)
    }
}

fn check_space(n: usize, s: &Subspace, what: &str) -> Result<()> {
    if s.ambient() != n {
        return Err(Error::Spec(format!("{what} lives in K^{}, expected K^{n}", s.ambient())));
    }
    Ok(())
}

impl DSubalgebra {
    /// Materializes `D`, validating the data and recording permissibility.
    pub fn build(l: Arc<dyn LieTorus>, kind: DKind) -> Result<DSubalgebra> {
        let n = l.nullity();
        match &kind {
            DKind::DegreeOnly { u } => check_space(n, u, "U")?,
            DKind::Triple { u, uprime, gamma_prime } => {
                check_space(n, u, "U")?;
                check_space(n, uprime, "U'")?;
                if let Some(g) = gamma_prime.iter().find(|g| g.len() != n || !l.in_centroid_support(g)) {
                    return Err(Error::Spec(format!("Γ' generator {g} is not in the centroid grading group")));
                }
            }
            DKind::SkewExample { u, gamma, uplus, uminus } => {
                check_space(n, u, "U")?;
                check_space(n, uplus, "U+")?;
                check_space(n, uminus, "U-")?;
                if gamma.len() != n || gamma.is_zero() || !l.in_centroid_support(gamma) {
                    return Err(Error::Spec(format!("γ = {gamma} must be a nonzero element of the centroid grading group")));
                }
            }
            DKind::Explicit(gens) => {
                for (mu, t) in gens {
                    if mu.len() != n || t.values.len() != n {
                        return Err(Error::RankMismatch { expected: n, got: mu.len().min(t.values.len()) });
                    }
                    if !l.in_centroid_support(mu) {
                        return Err(Error::UnsupportedCentroidDegree(mu.to_string()));
                    }
                    SCDer::term(mu.clone(), t.clone())?;
                }
            }
            _ => {}
        }
        let gp: Vec<Vec<i128>> = kind.gamma_prime().iter().map(|g| g.as_i128()).collect();
        let mut d = DSubalgebra {
            l,
            kind,
            permissible: false,
            discreteness: "injectivity verified, discreteness asserted by construction pattern",
            gp_basis: hnf(&gp),
            cache: Arc::default(),
        };
        d.permissible = d.space(&LatticeVector::zero(n)).separates_points();
        if let DKind::Explicit(gens) = &d.kind {
            for (mu, t) in gens {
                for (nu, s) in gens {
                    let br = SCDer::term(mu.clone(), t.clone())?.bracket(&SCDer::term(nu.clone(), s.clone())?);
                    if !d.contains(&br) {
                        return Err(Error::HypothesisViolated(format!(
                            "explicit generators are not closed: [χ^{mu}∂_{t}, χ^{nu}∂_{s}] = {br} is not in D"
                        )));
                    }
                }
            }
        }
        Ok(d)
    }

    /// Fails with `NotPermissible` unless `ev` is injective on `D^0`.
    pub fn require_permissible(self) -> Result<DSubalgebra> {
        if self.permissible {
            Ok(self)
        } else {
            Err(Error::NotPermissible(format!("ev: Λ -> (D^0)* is not injective for {}", self.kind.name())))
        }
    }

    pub fn nullity(&self) -> usize {
        self.l.nullity()
    }

    /// `U_D^μ`.
    pub fn space(&self, mu: &LatticeVector) -> Arc<Subspace> {
        if let Some(s) = self.cache.read().expect("cache poisoned").get(mu) {
            return s.clone();
        }
        let s = Arc::new(self.kind.space(self.nullity(), mu, self.l.as_ref(), &self.gp_basis));
        self.cache.write().expect("cache poisoned").entry(mu.clone()).or_insert(s).clone()
    }

    /// `τ̄(D)`.
    pub fn reflected(&self) -> DSubalgebra {
        DSubalgebra::build(self.l.clone(), DKind::Reflected(Box::new(self.kind.clone()))).expect("reflection preserves validity")
    }

    /// Degree-wise intersection with another subalgebra on the same torus.
    pub fn meet(&self, other: &DSubalgebra) -> DSubalgebra {
        let kind = DKind::Meet(Box::new(self.kind.clone()), Box::new(other.kind.clone()));
        DSubalgebra::build(self.l.clone(), kind).expect("intersection preserves validity")
    }

    pub fn atom_elem(&self, a: &DAtom) -> SCDer {
        let mut d = SCDer::zero();
        d.add_term(a.0.clone(), &self.space(&a.0).basis_hom(a.1), &Scalar::one());
        d
    }

    /// Basis atoms of `D^μ` for `μ` in the window.
    pub fn atoms(&self, w: &DegreeWindow) -> Vec<DAtom> {
        let mut out = Vec::new();
        for mu in w.enumerate(self.nullity()) {
            let dim = self.space(&mu).dim();
            out.extend((0..dim).map(|i| (mu.clone(), i)));
        }
        out
    }

    /// Coordinates of `d` on the atoms of `D`, if `d` lies in `D`.
    pub fn coords(&self, d: &SCDer) -> Option<Vec<(DAtom, Scalar)>> {
        let mut out = Vec::new();
        for (mu, t) in &d.terms {
            let c = self.space(mu).coords(&t.values)?;
            out.extend(c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| ((mu.clone(), i), x)));
        }
        Some(out)
    }

    pub fn contains(&self, d: &SCDer) -> bool {
        self.coords(d).is_some()
    }

    /// The canonical form of a functional restricted to `D`: the degree-`μ`
    /// part pairs with `D^{-μ}`.
    pub fn reduce_dual(&self, c: &DualElement) -> DualElement {
        let mut out = DualElement::zero();
        for (mu, v) in &c.terms {
            let s = self.space(&-mu);
            out.add_vec(mu.clone(), &s.restrict_functional(v), &Scalar::one());
        }
        out
    }

    /// The basis of `(D^{gr*})^μ` dual to the atoms of `D^{-μ}`.
    pub fn dual_atom_elem(&self, mu: &LatticeVector, i: usize) -> DualElement {
        let s = self.space(&-mu);
        let mut v = vec![Scalar::zero(); self.nullity()];
        v[s.pivots()[i]] = Scalar::one();
        DualElement::from_vec(mu.clone(), v)
    }

    /// Atoms of `D^{gr*}` in the window.
    pub fn dual_atoms(&self, w: &DegreeWindow) -> Vec<DAtom> {
        let mut out = Vec::new();
        for mu in w.enumerate(self.nullity()) {
            let dim = self.space(&-&mu).dim();
            out.extend((0..dim).map(|i| (mu.clone(), i)));
        }
        out
    }

    pub fn describe_atom(&self, a: &DAtom) -> String {
        format!("χ^{}∂_{}", a.0, self.space(&a.0).basis_hom(a.1))
    }

    /// `[D^μ, D^ν] ⊆ D^{μ+ν}` on all window atom pairs.
    pub fn closure_report(&self, w: &DegreeWindow) -> Report {
        let atoms = self.atoms(w);
        let mut rep = Report::new(w.radius);
        rep.atoms_checked = atoms.len();
        let ps: Vec<(usize, usize)> = crate::lie::check::pairs(atoms.len());
        let (t, f, first) = sweep(&ps, |&(i, j)| {
            let br = self.atom_elem(&atoms[i]).bracket(&self.atom_elem(&atoms[j]));
            (!self.contains(&br)).then(|| {
                json!({"atoms": [self.describe_atom(&atoms[i]), self.describe_atom(&atoms[j])],
                       "lhs": br.to_string(), "rhs": "element of D"})
            })
        });
        rep.tally("closure", t, f, first);
        rep
    }

    /// `U_D^μ = U_D^{-μ}` for every `μ` in the window.
    pub fn is_invariant(&self, w: &DegreeWindow) -> bool {
        w.enumerate(self.nullity()).iter().all(|mu| self.space(mu) == self.space(&-mu))
    }
}

/// Parses a subspace from rows of homomorphism values.
pub fn subspace_from_rows(n: usize, rows: &[Vec<Scalar>]) -> Result<Subspace> {
    if let Some(r) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::RankMismatch { expected: n, got: r.len() });
    }
    Ok(Subspace::span(n, rows))
}

/// The line `K (p_1 θ_1 + ... + p_n θ_n)`.
pub fn line_subspace(p: &[Scalar]) -> Subspace {
    Subspace::span(p.len(), &[p.to_vec()])
}
