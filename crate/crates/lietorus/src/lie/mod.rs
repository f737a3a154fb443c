//! Lie tori: `(Q x Lambda)`-graded Lie algebras given by an atom basis of each
//! bigraded component, a bracket on atoms, a graded invariant form and a
//! centroid action.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::lattice::{DegreeWindow, LatticeVector, RootSystem};
use crate::linalg::Span;
use crate::scalar::Scalar;
use crate::sparse::Sparse;

pub mod check;
pub mod construction;
pub mod matrix;
pub mod multiloop;
pub mod psl3;
pub mod sl;
pub mod tensor;
pub mod tits;
pub mod tkk;

pub use check::{check_lie_torus, CheckOptions};
pub use construction::Construction;
pub use matrix::MatrixLie;

/// A basis vector of `L_root^deg`; `idx` numbers the basis of that component.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub root: LatticeVector,
    pub deg: LatticeVector,
    pub idx: u32,
}

impl Atom {
    pub fn new(root: LatticeVector, deg: LatticeVector, idx: u32) -> Atom {
        Atom { root, deg, idx }
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};{};{}]", self.root, self.deg, self.idx)
    }
}

pub type LieElem = Sparse<Atom>;

pub trait LieTorus: Send + Sync {
    fn name(&self) -> String;
    fn root_system(&self) -> &RootSystem;
    /// Rank of `Lambda`.
    fn nullity(&self) -> usize;
    /// Dimension of `L_root^deg` (root given in ambient coordinates).
    fn dim(&self, root: &LatticeVector, deg: &LatticeVector) -> usize;
    fn bracket_atoms(&self, a: &Atom, b: &Atom) -> LieElem;
    fn form_atoms(&self, a: &Atom, b: &Atom) -> Scalar;
    fn describe(&self, a: &Atom) -> String;
    /// Whether `mu` lies in the centroidal grading group.
    fn in_centroid_support(&self, mu: &LatticeVector) -> bool;
    /// The centroid element `chi^mu` applied to an atom.
    fn centroid_atom(&self, mu: &LatticeVector, a: &Atom) -> LieElem;
    /// Periods of the structure constants in the degree; brackets of atoms
    /// whose degrees differ by multiples of the period differ only by shifts.
    fn period(&self) -> LatticeVector {
        LatticeVector(vec![1; self.nullity()])
    }
}

/// Human-readable form of an element.
pub fn show(l: &dyn LieTorus, x: &LieElem) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.iter().map(|(a, c)| format!("({c}){}", l.describe(a))).collect::<Vec<_>>().join(" + ")
}

/// Coordinates of the `(root, deg)` component of `x` on the atom basis.
pub fn component_coords(l: &dyn LieTorus, x: &LieElem, root: &LatticeVector, deg: &LatticeVector) -> Vec<Scalar> {
    atoms_at(l, root, deg).iter().map(|a| x.coeff(a)).collect()
}

/// The roots `{0} ∪ Delta^x` in ambient coordinates, zero first.
pub fn all_roots(l: &dyn LieTorus) -> Vec<LatticeVector> {
    let rs = l.root_system();
    let mut v = vec![rs.zero()];
    v.extend(rs.roots.iter().cloned());
    v
}

pub fn atoms_at(l: &dyn LieTorus, root: &LatticeVector, deg: &LatticeVector) -> Vec<Atom> {
    (0..l.dim(root, deg) as u32).map(|i| Atom::new(root.clone(), deg.clone(), i)).collect()
}

/// All atoms with degree in the window, ordered by `(root, degree, index)`.
pub fn window_atoms(l: &dyn LieTorus, w: &DegreeWindow) -> Vec<Atom> {
    let mut out = Vec::new();
    let degs = w.enumerate(l.nullity());
    for r in all_roots(l) {
        for d in &degs {
            out.extend(atoms_at(l, &r, d));
        }
    }
    out.sort();
    out
}

pub fn bracket(l: &dyn LieTorus, x: &LieElem, y: &LieElem) -> LieElem {
    let mut out = LieElem::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_scaled(&l.bracket_atoms(a, b), &(ca * cb));
        }
    }
    out
}

pub fn form(l: &dyn LieTorus, x: &LieElem, y: &LieElem) -> Scalar {
    let mut acc = Scalar::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            let f = l.form_atoms(a, b);
            if !f.is_zero() {
                acc += &(&f * &(ca * cb));
            }
        }
    }
    acc
}

pub fn centroid_act(l: &dyn LieTorus, mu: &LatticeVector, x: &LieElem) -> LieElem {
    x.map_linear(|a| l.centroid_atom(mu, a))
}

/// A linear self-map given on atoms.
#[derive(Clone)]
pub struct Involution {
    pub name: String,
    map: Arc<dyn Fn(&Atom) -> LieElem + Send + Sync>,
}

impl fmt::Debug for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Involution({})", self.name)
    }
}

impl Involution {
    pub fn new(name: impl Into<String>, f: impl Fn(&Atom) -> LieElem + Send + Sync + 'static) -> Involution {
        Involution { name: name.into(), map: Arc::new(f) }
    }

    pub fn identity() -> Involution {
        Involution::new("identity", |a| LieElem::basis(a.clone()))
    }

    pub fn on_atom(&self, a: &Atom) -> LieElem {
        (self.map)(a)
    }

    pub fn apply(&self, x: &LieElem) -> LieElem {
        x.map_linear(|a| self.on_atom(a))
    }
}

/// A finite-dimensional space of vectors with a chosen basis drawn from a list
/// of labelled generators.
#[derive(Clone, Debug)]
pub struct GenBasis<G> {
    pub gens: Vec<G>,
    pub vectors: Vec<Vec<Scalar>>,
    span: Span,
}

impl<G> GenBasis<G> {
    pub fn build(candidates: impl IntoIterator<Item = (G, Vec<Scalar>)>) -> GenBasis<G> {
        let mut b = GenBasis { gens: Vec::new(), vectors: Vec::new(), span: Span::new() };
        for (g, v) in candidates {
            if b.span.insert(&v) {
                b.gens.push(g);
                b.vectors.push(v);
            }
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn express(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.span.express(v)
    }
}

/// A lazily filled cache of component bases keyed by root and degree residue.
pub struct ComponentCache<G> {
    inner: RwLock<HashMap<(LatticeVector, LatticeVector), Arc<GenBasis<G>>>>,
}

impl<G> Default for ComponentCache<G> {
    fn default() -> Self {
        ComponentCache { inner: RwLock::new(HashMap::new()) }
    }
}

impl<G> ComponentCache<G> {
    pub fn get_or(&self, key: (LatticeVector, LatticeVector), f: impl FnOnce() -> GenBasis<G>) -> Arc<GenBasis<G>> {
        if let Some(v) = self.inner.read().expect("cache poisoned").get(&key) {
            return v.clone();
        }
        let v = Arc::new(f());
        self.inner.write().expect("cache poisoned").entry(key).or_insert(v).clone()
    }
}
