//! Sparse elements of `Z^n`-graded algebras with homogeneous bases.
//!
//! A basis element is addressed by a [`Key`]: its degree and a slot number
//! distinguishing basis vectors of the same degree. Coordinate tori use only
//! slot 0.

use std::fmt;

use crate::lattice::{residue_box, LatticeVector};
use crate::scalar::{Rational, Scalar};
use crate::sparse::Sparse;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Key {
    pub deg: LatticeVector,
    pub slot: u32,
}

impl Key {
    pub fn new(deg: LatticeVector, slot: u32) -> Key {
        Key { deg, slot }
    }
}

impl fmt::Debug for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slot == 0 {
            write!(f, "x^{}", self.deg)
        } else {
            write!(f, "x^{}#{}", self.deg, self.slot)
        }
    }
}

/// A finite linear combination of basis keys; zero coefficients are pruned.
pub type Elem = Sparse<Key>;

impl Sparse<Key> {
    pub fn mono(deg: LatticeVector) -> Elem {
        Elem::basis(Key::new(deg, 0))
    }

    /// The common degree of all terms, if any and unique.
    pub fn degree(&self) -> Option<LatticeVector> {
        let mut it = self.terms.keys();
        let d = it.next()?.deg.clone();
        if it.all(|k| k.deg == d) {
            Some(d)
        } else {
            None
        }
    }

    /// Translates every degree by `s`.
    pub fn shifted(&self, s: &LatticeVector) -> Elem {
        self.map_keys(|k| (Key::new(&k.deg + s, k.slot), Scalar::one()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variety {
    Associative,
    Alternative,
    Jordan,
}

/// A `Z^n`-graded algebra with a homogeneous basis and periodic structure
/// constants: `mul_basis(a + P e_i, b)` equals `mul_basis(a, b)` up to the
/// degree shift for every period vector component `P_i`.
pub trait GradedAlgebra: Send + Sync {
    fn name(&self) -> String;
    fn rank(&self) -> usize;
    fn variety(&self) -> Variety;
    /// Basis slots present in degree `deg`.
    fn slots(&self, deg: &LatticeVector) -> Vec<u32>;
    /// Product of two basis elements, as coefficients on slots of degree
    /// `a.deg + b.deg`.
    fn mul_basis(&self, a: &Key, b: &Key) -> Vec<(u32, Scalar)>;
    fn period(&self) -> LatticeVector;
    fn unit(&self) -> Elem;
    /// Normalized trace functional on a basis element.
    fn trace(&self, key: &Key) -> Scalar {
        if key.deg.is_zero() && key.slot == 0 {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }
    fn describe(&self, key: &Key) -> String {
        if key.slot == 0 {
            format!("x^{}", key.deg)
        } else {
            format!("x^{}#{}", key.deg, key.slot)
        }
    }
    /// The grading-reversing map on basis elements, `x^a -> x^{-a}` by default.
    fn pre_chevalley_key(&self, key: &Key) -> (Key, Scalar) {
        (Key::new(-&key.deg, key.slot), Scalar::one())
    }
    /// An element `c` of degree `mu` whose multiplication operator is a
    /// centroid element, if one exists.
    fn centroid_elem(&self, mu: &LatticeVector) -> Option<Elem> {
        let s = self.slots(mu);
        if s.len() != 1 {
            return None;
        }
        let c = Elem::basis(Key::new(mu.clone(), s[0]));
        is_centroidal(self, &c).then_some(c)
    }
}

pub fn basis_at<A: GradedAlgebra + ?Sized>(a: &A, deg: &LatticeVector) -> Vec<Key> {
    a.slots(deg).into_iter().map(|s| Key::new(deg.clone(), s)).collect()
}

/// All basis keys with degree in the residue box of the period.
pub fn residue_basis<A: GradedAlgebra + ?Sized>(a: &A) -> Vec<Key> {
    residue_box(&a.period()).iter().flat_map(|d| basis_at(a, d)).collect()
}

pub fn mul<A: GradedAlgebra + ?Sized>(a: &A, u: &Elem, v: &Elem) -> Elem {
    let mut out = Elem::zero();
    for (ka, ca) in &u.terms {
        for (kb, cb) in &v.terms {
            let c = ca * cb;
            let deg = &ka.deg + &kb.deg;
            for (slot, s) in a.mul_basis(ka, kb) {
                out.add_term(Key::new(deg.clone(), slot), &s * &c);
            }
        }
    }
    out
}

/// The bilinear trace pairing `t(u, v) = trace(u v)`.
pub fn trace_pair<A: GradedAlgebra + ?Sized>(a: &A, u: &Elem, v: &Elem) -> Scalar {
    let mut acc = Scalar::zero();
    for (ka, ca) in &u.terms {
        for (kb, cb) in &v.terms {
            let deg = &ka.deg + &kb.deg;
            if !deg.is_zero() {
                continue;
            }
            for (slot, s) in a.mul_basis(ka, kb) {
                let t = a.trace(&Key::new(deg.clone(), slot));
                if !t.is_zero() {
                    acc += &(&(&s * &t) * &(ca * cb));
                }
            }
        }
    }
    acc
}

/// Whether multiplication by `c` commutes with all multiplications, tested on
/// the residue box (exact because structure constants are periodic).
pub fn is_centroidal<A: GradedAlgebra + ?Sized>(a: &A, c: &Elem) -> bool {
    let basis = residue_basis(a);
    for x in &basis {
        let ex = Elem::basis(x.clone());
        let cx = mul(a, c, &ex);
        if mul(a, &ex, c) != cx {
            return false;
        }
        for y in &basis {
            let ey = Elem::basis(y.clone());
            let xy = mul(a, &ex, &ey);
            let lhs = mul(a, c, &xy);
            if lhs != mul(a, &cx, &ey) || lhs != mul(a, &ex, &mul(a, c, &ey)) {
                return false;
            }
        }
    }
    true
}

pub fn half() -> Scalar {
    Scalar::from_rational(Rational::new(1, 2))
}

/// Applies the pre-Chevalley map of `a` to an element.
pub fn pre_chevalley<A: GradedAlgebra + ?Sized>(a: &A, x: &Elem) -> Elem {
    x.map_keys(|k| a.pre_chevalley_key(k))
}
