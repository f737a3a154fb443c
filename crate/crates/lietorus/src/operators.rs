//! Operators on graded algebras.
//!
//! [`OperatorElement`] is a formal combination of multiplication operators and
//! inner derivations, evaluated through the algebra product. [`OpTable`] is the
//! concrete form used by the Lie constructions: a homogeneous operator of
//! degree `d` on an algebra with periodic structure constants is determined by
//! its values on the basis elements whose degrees lie in the residue box.

use crate::error::{Error, Result};
use crate::graded::{basis_at, mul, residue_basis, Elem, GradedAlgebra, Key, Variety};
use crate::lattice::{DegreeWindow, LatticeVector};
use crate::scalar::Scalar;
use crate::sparse::Sparse;

/// Primitive operator symbols on basis elements.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Prim {
    L(Key),
    R(Key),
    /// `[L_a, L_b]`.
    JInner(Key, Key),
    /// `[L_a,L_b] + [R_a,R_b] + [L_a,R_b]`.
    AltInner(Key, Key),
}

pub type OperatorElement = Sparse<Prim>;

fn skew(a: &Key, b: &Key, make: fn(Key, Key) -> Prim) -> OperatorElement {
    match a.cmp(b) {
        std::cmp::Ordering::Equal => OperatorElement::zero(),
        std::cmp::Ordering::Less => OperatorElement::basis(make(a.clone(), b.clone())),
        std::cmp::Ordering::Greater => OperatorElement::single(make(b.clone(), a.clone()), Scalar::from_int(-1)),
    }
}

fn bilinear(a: &Elem, b: &Elem, f: impl Fn(&Key, &Key) -> OperatorElement) -> OperatorElement {
    let mut out = OperatorElement::zero();
    for (ka, ca) in a.iter() {
        for (kb, cb) in b.iter() {
            out.add_scaled(&f(ka, kb), &(ca * cb));
        }
    }
    out
}

pub fn op_l(a: &Elem) -> OperatorElement {
    a.iter().map(|(k, c)| (Prim::L(k.clone()), c.clone())).collect()
}

pub fn op_r(a: &Elem) -> OperatorElement {
    a.iter().map(|(k, c)| (Prim::R(k.clone()), c.clone())).collect()
}

pub fn op_jinner(a: &Elem, b: &Elem) -> OperatorElement {
    bilinear(a, b, |x, y| skew(x, y, Prim::JInner))
}

pub fn op_altinner(a: &Elem, b: &Elem) -> OperatorElement {
    bilinear(a, b, |x, y| skew(x, y, Prim::AltInner))
}

fn eval_prim<A: GradedAlgebra + ?Sized>(alg: &A, p: &Prim, x: &Elem) -> Elem {
    match p {
        Prim::L(a) => mul(alg, &Elem::basis(a.clone()), x),
        Prim::R(a) => mul(alg, x, &Elem::basis(a.clone())),
        Prim::JInner(a, b) => {
            let (ea, eb) = (Elem::basis(a.clone()), Elem::basis(b.clone()));
            mul(alg, &ea, &mul(alg, &eb, x)).sub(&mul(alg, &eb, &mul(alg, &ea, x)))
        }
        Prim::AltInner(a, b) => {
            let (ea, eb) = (Elem::basis(a.clone()), Elem::basis(b.clone()));
            let m = |u: &Elem, v: &Elem| mul(alg, u, v);
            let mut out = m(&ea, &m(&eb, x)).sub(&m(&eb, &m(&ea, x)));
            out = out.add(&m(&m(x, &eb), &ea)).sub(&m(&m(x, &ea), &eb));
            out.add(&m(&ea, &m(x, &eb))).sub(&m(&m(&ea, x), &eb))
        }
    }
}

/// Evaluates an operator on an element through the algebra product.
pub fn op_eval<A: GradedAlgebra + ?Sized>(alg: &A, e: &OperatorElement, x: &Elem) -> Elem {
    let mut out = Elem::zero();
    for (p, c) in e.iter() {
        out.add_scaled(&eval_prim(alg, p, x), c);
    }
    out
}

fn prim_bracket<A: GradedAlgebra + ?Sized>(alg: &A, p: &Prim, q: &Prim) -> Result<OperatorElement> {
    use Prim::*;
    let variety = alg.variety();
    let d_apply = |d: &Prim, k: &Key| eval_prim(alg, d, &Elem::basis(k.clone()));
    match variety {
        Variety::Jordan => match (p, q) {
            (L(a), L(b)) => Ok(skew(a, b, JInner)),
            (JInner(..), L(c)) => Ok(op_l(&d_apply(p, c))),
            (L(_), JInner(..)) => Ok(prim_bracket(alg, q, p)?.neg()),
            (JInner(..), JInner(c, d)) => {
                let (ec, ed) = (Elem::basis(c.clone()), Elem::basis(d.clone()));
                Ok(op_jinner(&d_apply(p, c), &ed).add(&op_jinner(&ec, &d_apply(p, d))))
            }
            _ => Err(Error::IncompatibleVariety("Jordan algebras use L and JInner symbols".into())),
        },
        Variety::Alternative | Variety::Associative => match (p, q) {
            (AltInner(..), AltInner(c, d)) => {
                let (ec, ed) = (Elem::basis(c.clone()), Elem::basis(d.clone()));
                Ok(op_altinner(&d_apply(p, c), &ed).add(&op_altinner(&ec, &d_apply(p, d))))
            }
            (AltInner(..), L(c)) => Ok(op_l(&d_apply(p, c))),
            (AltInner(..), R(c)) => Ok(op_r(&d_apply(p, c))),
            (L(_) | R(_), AltInner(..)) => Ok(prim_bracket(alg, q, p)?.neg()),
            (L(a), L(b)) if variety == Variety::Associative => {
                let (ea, eb) = (Elem::basis(a.clone()), Elem::basis(b.clone()));
                Ok(op_l(&mul(alg, &ea, &eb).sub(&mul(alg, &eb, &ea))))
            }
            (R(a), R(b)) if variety == Variety::Associative => {
                let (ea, eb) = (Elem::basis(a.clone()), Elem::basis(b.clone()));
                Ok(op_r(&mul(alg, &eb, &ea).sub(&mul(alg, &ea, &eb))))
            }
            (L(_), R(_)) | (R(_), L(_)) if variety == Variety::Associative => Ok(OperatorElement::zero()),
            _ => Err(Error::IncompatibleVariety(format!("bracket of {p:?} and {q:?} in a {variety:?} algebra"))),
        },
    }
}

/// Closed-form bracket of two operators, rewritten into primitive symbols.
pub fn op_bracket<A: GradedAlgebra + ?Sized>(alg: &A, e: &OperatorElement, f: &OperatorElement) -> Result<OperatorElement> {
    let mut out = OperatorElement::zero();
    for (p, cp) in e.iter() {
        for (q, cq) in f.iter() {
            out.add_scaled(&prim_bracket(alg, p, q)?, &(cp * cq));
        }
    }
    Ok(out)
}

/// Equality by evaluation on every basis element with degree in the window.
pub fn op_equal<A: GradedAlgebra + ?Sized>(alg: &A, e: &OperatorElement, f: &OperatorElement, w: &DegreeWindow) -> bool {
    let diff = e.sub(f);
    w.enumerate(alg.rank())
        .iter()
        .flat_map(|d| basis_at(alg, d))
        .all(|k| op_eval(alg, &diff, &Elem::basis(k)).is_zero())
}

/// Equality by evaluation on the residue box, which is exact for algebras
/// with periodic structure constants.
pub fn op_equal_periodic<A: GradedAlgebra + ?Sized>(alg: &A, e: &OperatorElement, f: &OperatorElement) -> bool {
    let diff = e.sub(f);
    residue_basis(alg).into_iter().all(|k| op_eval(alg, &diff, &Elem::basis(k)).is_zero())
}

/// A homogeneous operator of degree `deg`, stored by its values on the
/// residue basis.
#[derive(Clone, Debug, PartialEq)]
pub struct OpTable {
    pub deg: LatticeVector,
    pub cols: Vec<(Key, Elem)>,
}

impl OpTable {
    pub fn from_fn<A: GradedAlgebra + ?Sized>(alg: &A, deg: LatticeVector, f: impl Fn(&Elem) -> Elem) -> OpTable {
        let cols = residue_basis(alg).into_iter().map(|k| {
            let v = f(&Elem::basis(k.clone()));
            (k, v)
        });
        OpTable { deg, cols: cols.collect() }
    }

    pub fn zero<A: GradedAlgebra + ?Sized>(alg: &A, deg: LatticeVector) -> OpTable {
        OpTable::from_fn(alg, deg, |_| Elem::zero())
    }

    pub fn left_mul<A: GradedAlgebra + ?Sized>(alg: &A, a: &Elem) -> OpTable {
        let deg = a.degree().unwrap_or_else(|| LatticeVector::zero(alg.rank()));
        OpTable::from_fn(alg, deg, |x| mul(alg, a, x))
    }

    pub fn from_operator<A: GradedAlgebra + ?Sized>(alg: &A, deg: LatticeVector, e: &OperatorElement) -> OpTable {
        OpTable::from_fn(alg, deg, |x| op_eval(alg, e, x))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|(_, v)| v.is_zero())
    }

    /// Evaluates on an arbitrary element using periodicity.
    pub fn eval<A: GradedAlgebra + ?Sized>(&self, alg: &A, x: &Elem) -> Elem {
        let p = alg.period();
        let mut out = Elem::zero();
        for (k, c) in x.iter() {
            let r = k.deg.rem_euclid(&p);
            let shift = &k.deg - &r;
            let rk = Key::new(r, k.slot);
            if let Ok(i) = self.cols.binary_search_by(|(kk, _)| kk.cmp(&rk)) {
                out.add_scaled(&self.cols[i].1.shifted(&shift), c);
            }
        }
        out
    }

    pub fn add(&self, other: &OpTable) -> OpTable {
        self.combine(other, &Scalar::one())
    }

    /// `self + c * other`.
    pub fn combine(&self, other: &OpTable, c: &Scalar) -> OpTable {
        assert_eq!(self.deg, other.deg, "operator degree mismatch");
        let cols = self.cols.iter().zip(&other.cols).map(|((k, a), (k2, b))| {
            debug_assert_eq!(k, k2);
            let mut v = a.clone();
            v.add_scaled(b, c);
            (k.clone(), v)
        });
        OpTable { deg: self.deg.clone(), cols: cols.collect() }
    }

    pub fn scale(&self, c: &Scalar) -> OpTable {
        OpTable { deg: self.deg.clone(), cols: self.cols.iter().map(|(k, v)| (k.clone(), v.scale(c))).collect() }
    }

    /// `self ∘ other`.
    pub fn compose<A: GradedAlgebra + ?Sized>(&self, alg: &A, other: &OpTable) -> OpTable {
        let cols = other.cols.iter().map(|(k, v)| (k.clone(), self.eval(alg, v)));
        OpTable { deg: &self.deg + &other.deg, cols: cols.collect() }
    }

    pub fn commutator<A: GradedAlgebra + ?Sized>(&self, alg: &A, other: &OpTable) -> OpTable {
        let ab = self.compose(alg, other);
        let ba = other.compose(alg, self);
        ab.combine(&ba, &Scalar::from_int(-1))
    }

    /// `t ∘ self ∘ t` for a degree-reversing (or preserving) linear map `t`
    /// of order two; `new_deg` is the degree of the result.
    pub fn conjugate<A: GradedAlgebra + ?Sized>(&self, alg: &A, new_deg: LatticeVector, t: impl Fn(&Elem) -> Elem) -> OpTable {
        OpTable::from_fn(alg, new_deg, |x| t(&self.eval(alg, &t(x))))
    }

    /// Coordinates on the layout of [`op_layout`].
    pub fn to_vec<A: GradedAlgebra + ?Sized>(&self, alg: &A) -> Vec<Scalar> {
        let mut out = Vec::new();
        for (k, v) in &self.cols {
            for t in basis_at(alg, &(&k.deg + &self.deg)) {
                out.push(v.coeff(&t));
            }
        }
        out
    }

    pub fn from_vec<A: GradedAlgebra + ?Sized>(alg: &A, deg: LatticeVector, v: &[Scalar]) -> OpTable {
        let mut it = v.iter();
        let mut cols = Vec::new();
        for k in residue_basis(alg) {
            let mut img = Elem::zero();
            for t in basis_at(alg, &(&k.deg + &deg)) {
                img.add_term(t, it.next().expect("vector length").clone());
            }
            cols.push((k, img));
        }
        let t = OpTable { deg, cols };
        assert!(it.next().is_none(), "vector length");
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tori::TorusAlgebra;

    fn lv(v: &[i64]) -> LatticeVector {
        LatticeVector(v.to_vec())
    }

    #[test]
    fn skew_normalization() {
        let a = Elem::mono(lv(&[1, 0]));
        let b = Elem::mono(lv(&[0, 1]));
        assert!(op_jinner(&a, &b).add(&op_jinner(&b, &a)).is_zero());
        assert!(op_jinner(&a, &a).is_zero());
    }

    #[test]
    fn unit_left_multiplication_is_identity() {
        let o = TorusAlgebra::octonion(3).unwrap();
        let x = o.mono(&[1, 1, 0]);
        assert_eq!(op_eval(&o, &op_l(&o.unit()), &x), x);
    }

    #[test]
    fn table_round_trip() {
        let m = vec![vec![Scalar::one(), Scalar::from_int(-1)], vec![Scalar::from_int(-1), Scalar::one()]];
        let j = TorusAlgebra::jordan_plus(&m).unwrap();
        let t = OpTable::left_mul(&j, &j.mono(&[1, 1]));
        let v = t.to_vec(&j);
        assert_eq!(OpTable::from_vec(&j, lv(&[1, 1]), &v), t);
        let x = j.mono(&[5, -3]);
        assert_eq!(t.eval(&j, &x), j.mul(&j.mono(&[1, 1]), &x));
    }
}
