//! The Tits construction `T(Cliff(f), Cliff(g))` of type `B_l`:
//! `(g ⊗ B) ⊕ (V ⊗ W) ⊕ D_{W,W}` with `g = so(V, f)` and `B` the Laurent
//! polynomials.

use std::sync::Arc;

use crate::error::Result;
use crate::graded::{basis_at, mul, Elem, GradedAlgebra, Key};
use crate::jordan::CliffordForm;
use crate::lattice::{residue_box, LatticeVector, RootSystem};
use crate::linalg::ScalarMatrix;
use crate::operators::OpTable;
use crate::scalar::Scalar;

use super::{Atom, ComponentCache, GenBasis, LieElem, LieTorus, MatrixLie};

/// The generator `D_{w, w'}` of a `D_{W,W}` atom.
pub type WGen = (Key, Key);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TitsPart {
    /// `b_i ⊗ x^a` for a basis index of `g`.
    G(usize),
    /// `v_k ⊗ y` for the basis key `y` of `W`.
    V(usize, u32),
    /// A `D_{W,W}` basis element.
    D(usize),
}

pub struct TitsB {
    pub ell: usize,
    pub g: Arc<MatrixLie>,
    pub y: CliffordForm,
    dcache: ComponentCache<WGen>,
}

impl std::fmt::Debug for TitsB {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl TitsB {
    pub fn new(ell: usize, n: usize, taus: Vec<LatticeVector>) -> Result<TitsB> {
        if ell < 3 {
            return Err(crate::Error::RankTooSmall(format!("TitsB needs l >= 3, got {ell}")));
        }
        let g = Arc::new(MatrixLie::builtin("B", ell)?);
        let y = CliffordForm::new(n, taus)?;
        Ok(TitsB { ell, g, y, dcache: ComponentCache::default() })
    }

    /// `f(v_a, v_b)`.
    pub fn f(&self, a: usize, b: usize) -> Scalar {
        let l = self.ell;
        let one = (a < l && b == a + l) || (b < l && a == b + l) || (a == 2 * l && b == 2 * l);
        if one {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }

    pub fn weight(&self, k: usize) -> LatticeVector {
        let mut v = vec![0; self.ell];
        if k < self.ell {
            v[k] = 1;
        } else if k < 2 * self.ell {
            v[k - self.ell] = -1;
        }
        LatticeVector(v)
    }

    fn v_of_root(&self, r: &LatticeVector) -> Option<usize> {
        (0..=2 * self.ell).find(|k| self.weight(*k) == *r)
    }

    /// The `Y` slot class of a degree: 0 for even degrees, `i` for `w_{i+1}`.
    pub fn class(&self, d: &LatticeVector) -> Option<u32> {
        self.y.slots(d).first().copied()
    }

    fn half(d: &LatticeVector) -> LatticeVector {
        LatticeVector(d.0.iter().map(|x| x / 2).collect())
    }

    /// Basis of `D_{W,W}^deg`, from generators `-[L_w, L_w']`.
    pub fn dww_basis(&self, deg: &LatticeVector) -> Arc<GenBasis<WGen>> {
        let zero = LatticeVector::zero(self.ell);
        self.dcache.get_or((zero, deg.clone()), || {
            let y = &self.y;
            let mut cands = Vec::new();
            for mu in residue_box(&y.period()) {
                let nu = deg - &mu;
                for a in basis_at(y, &mu).into_iter().filter(|k| k.slot > 0) {
                    for b in basis_at(y, &nu).into_iter().filter(|k| k.slot > 0) {
                        let t = self.dww_table(&a, &b, deg.clone());
                        cands.push(((a.clone(), b), t.to_vec(y)));
                    }
                }
            }
            GenBasis::build(cands)
        })
    }

    /// `D_{w,w'} = -[L_w, L_w']` on `Y`.
    pub fn dww_table(&self, a: &Key, b: &Key, deg: LatticeVector) -> OpTable {
        let y = &self.y;
        let (ea, eb) = (Elem::basis(a.clone()), Elem::basis(b.clone()));
        OpTable::from_fn(y, deg, |z| mul(y, &eb, &mul(y, &ea, z)).sub(&mul(y, &ea, &mul(y, &eb, z))))
    }

    fn dww_express(&self, t: &OpTable) -> LieElem {
        let b = self.dww_basis(&t.deg);
        let coords = b.express(&t.to_vec(&self.y)).expect("operator lies in D_{W,W}");
        let off = self.dww_offset(&t.deg);
        let zero = LatticeVector::zero(self.ell);
        coords
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (Atom::new(zero.clone(), t.deg.clone(), (off + i) as u32), c))
            .collect()
    }

    fn dww_offset(&self, d: &LatticeVector) -> usize {
        match self.class(d) {
            Some(0) => self.ell,
            Some(_) => 1,
            None => 0,
        }
    }

    pub fn dww_atom_table(&self, a: &Atom, i: usize) -> OpTable {
        let b = self.dww_basis(&a.deg);
        OpTable::from_vec(&self.y, a.deg.clone(), &b.vectors[i])
    }

    pub fn part(&self, a: &Atom) -> TitsPart {
        let class = self.class(&a.deg);
        if a.root.is_zero() {
            let off = self.dww_offset(&a.deg);
            let i = a.idx as usize;
            if i >= off {
                return TitsPart::D(i - off);
            }
            let class = class.expect("degree in support");
            if class == 0 {
                return TitsPart::G(self.g.cartan()[i]);
            }
            return TitsPart::V(2 * self.ell, class);
        }
        let class = class.expect("degree in support");
        if class == 0 {
            TitsPart::G(self.g.by_root(&a.root)[0])
        } else {
            TitsPart::V(self.v_of_root(&a.root).expect("short root"), class)
        }
    }

    /// `sum_i c_i b_i ⊗ x^a` at degree `2a`.
    pub fn g_atoms(&self, coords: &[(usize, Scalar)], a: &LatticeVector) -> LieElem {
        let d = a.scaled(2);
        coords
            .iter()
            .map(|(i, c)| (Atom::new(self.g.roots[*i].clone(), d.clone(), self.g.local_index(*i)), c.clone()))
            .collect()
    }

    /// `v ⊗ y` for a vector `v` of `V` and an element `y` of `W`.
    pub fn v_atoms(&self, v: &[Scalar], y: &Elem) -> LieElem {
        let mut out = LieElem::zero();
        for (k, c) in y.iter() {
            assert!(k.slot > 0, "v ⊗ 1 is not in the algebra");
            for (i, vi) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let root = self.weight(i);
                out.add_term(Atom::new(root, k.deg.clone(), 0), vi * c);
            }
        }
        out
    }

    fn vec_v(&self, k: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); 2 * self.ell + 1];
        v[k] = Scalar::one();
        v
    }

    fn w_elem(&self, a: &Atom, class: u32) -> Elem {
        Elem::basis(Key::new(a.deg.clone(), class))
    }

    fn matrix(&self, i: usize) -> &ScalarMatrix {
        &self.g.matrices.as_ref().expect("builtin so has matrices")[i]
    }

    /// `D_{v_a, v_b}` in basis coordinates of `g`.
    pub fn d_vv(&self, a: usize, b: usize) -> Vec<(usize, Scalar)> {
        if a == b {
            return Vec::new();
        }
        let (lo, hi, s) = if a < b { (a, b, 1) } else { (b, a, -1) };
        let name = format!("D{},{}", lo + 1, hi + 1);
        let i = self.g.names.iter().position(|n| *n == name).expect("basis pair");
        vec![(i, Scalar::from_int(s))]
    }

    /// `x^a` as an element of `Y`.
    fn b_elem(&self, a: &LatticeVector) -> Elem {
        Elem::basis(Key::new(a.scaled(2), 0))
    }

    /// Laurent exponent of `g(w, w')` and its coefficient, if nonzero.
    fn g_form(&self, w: &Key, w2: &Key) -> Option<LatticeVector> {
        (w.slot == w2.slot).then(|| self.y.exponent(&Key::new(&w.deg + &w2.deg, 0)))
    }
}

impl LieTorus for TitsB {
    fn name(&self) -> String {
        format!("TitsB({}, m={})", self.ell, self.y.m())
    }

    fn root_system(&self) -> &RootSystem {
        &self.g.root_system
    }

    fn nullity(&self) -> usize {
        self.y.n
    }

    fn dim(&self, root: &LatticeVector, deg: &LatticeVector) -> usize {
        if root.is_zero() {
            return self.dww_offset(deg) + self.dww_basis(deg).dim();
        }
        let Some(class) = self.class(deg) else {
            return 0;
        };
        if class == 0 {
            self.g.by_root(root).len()
        } else {
            usize::from(self.v_of_root(root).is_some())
        }
    }

    fn bracket_atoms(&self, a: &Atom, b: &Atom) -> LieElem {
        let y = &self.y;
        match (self.part(a), self.part(b)) {
            (TitsPart::G(i), TitsPart::G(j)) => {
                let e = &TitsB::half(&a.deg) + &TitsB::half(&b.deg);
                self.g_atoms(self.g.bracket_basis(i, j), &e)
            }
            (TitsPart::G(_), TitsPart::D(_)) | (TitsPart::D(_), TitsPart::G(_)) => LieElem::zero(),
            (TitsPart::G(i), TitsPart::V(k, c)) => {
                let v = self.matrix(i).column(k);
                let w = mul(y, &self.b_elem(&TitsB::half(&a.deg)), &self.w_elem(b, c));
                self.v_atoms(&v, &w)
            }
            (TitsPart::V(..), TitsPart::G(_)) => self.bracket_atoms(b, a).neg(),
            (TitsPart::D(i), TitsPart::V(k, c)) => {
                let w = self.dww_atom_table(a, i).eval(y, &self.w_elem(b, c));
                self.v_atoms(&self.vec_v(k), &w)
            }
            (TitsPart::V(..), TitsPart::D(_)) => self.bracket_atoms(b, a).neg(),
            (TitsPart::V(k, c), TitsPart::V(k2, c2)) => {
                let (w, w2) = (Key::new(a.deg.clone(), c), Key::new(b.deg.clone(), c2));
                let mut out = LieElem::zero();
                if let Some(e) = self.g_form(&w, &w2) {
                    out = self.g_atoms(&self.d_vv(k, k2), &e);
                }
                let fv = self.f(k, k2);
                if !fv.is_zero() {
                    let t = self.dww_table(&w, &w2, &a.deg + &b.deg);
                    out = out.add(&self.dww_express(&t).scale(&fv));
                }
                out
            }
            (TitsPart::D(i), TitsPart::D(j)) => {
                let c = self.dww_atom_table(a, i).commutator(y, &self.dww_atom_table(b, j));
                self.dww_express(&c)
            }
        }
    }

    fn form_atoms(&self, a: &Atom, b: &Atom) -> Scalar {
        if !(&a.deg + &b.deg).is_zero() || !(&a.root + &b.root).is_zero() {
            return Scalar::zero();
        }
        let y = &self.y;
        match (self.part(a), self.part(b)) {
            (TitsPart::G(i), TitsPart::G(j)) => self.g.form_basis(i, j) * &Scalar::frac(-1, 2),
            (TitsPart::V(k, c), TitsPart::V(k2, c2)) => {
                let (w, w2) = (Key::new(a.deg.clone(), c), Key::new(b.deg.clone(), c2));
                match self.g_form(&w, &w2) {
                    Some(e) if e.is_zero() => self.f(k, k2),
                    _ => Scalar::zero(),
                }
            }
            (TitsPart::D(i), TitsPart::D(j)) => {
                let prod = self.dww_atom_table(a, i).compose(y, &self.dww_atom_table(b, j));
                let mut tr = Scalar::zero();
                let zero = LatticeVector::zero(y.n);
                for s in 0..y.m() {
                    let k = if s == 0 { Key::new(zero.clone(), 0) } else { y.w_key(&zero, s + 1) };
                    tr += &prod.eval(y, &Elem::basis(k.clone())).coeff(&k);
                }
                &tr * &Scalar::frac(-1, 2)
            }
            _ => Scalar::zero(),
        }
    }

    fn describe(&self, a: &Atom) -> String {
        match self.part(a) {
            TitsPart::G(i) => format!("{}⊗x^{}", self.g.names[i], TitsB::half(&a.deg)),
            TitsPart::V(k, c) => format!("v{}⊗{}", k + 1, self.y.describe(&Key::new(a.deg.clone(), c))),
            TitsPart::D(i) => {
                let b = self.dww_basis(&a.deg);
                let (w, w2) = &b.gens[i];
                format!("D({},{})", self.y.describe(w), self.y.describe(w2))
            }
        }
    }

    fn in_centroid_support(&self, mu: &LatticeVector) -> bool {
        mu.len() == self.y.n && mu.0.iter().all(|x| x % 2 == 0)
    }

    fn centroid_atom(&self, mu: &LatticeVector, a: &Atom) -> LieElem {
        let y = &self.y;
        let z = self.b_elem(&TitsB::half(mu));
        match self.part(a) {
            TitsPart::G(i) => self.g_atoms(&[(i, Scalar::one())], &TitsB::half(&(&a.deg + mu))),
            TitsPart::V(k, c) => self.v_atoms(&self.vec_v(k), &mul(y, &z, &self.w_elem(a, c))),
            TitsPart::D(i) => {
                let lz = OpTable::from_fn(y, mu.clone(), |x| mul(y, &z, x));
                self.dww_express(&lz.compose(y, &self.dww_atom_table(a, i)))
            }
        }
    }

    fn period(&self) -> LatticeVector {
        self.y.period()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(v: &[i64]) -> LatticeVector {
        LatticeVector(v.to_vec())
    }

    #[test]
    fn vw_bracket() {
        let t = TitsB::new(3, 1, vec![lv(&[0]), lv(&[1])]).unwrap();
        let a = Atom::new(t.weight(0), lv(&[1]), 0);
        let b = Atom::new(t.weight(3), lv(&[1]), 0);
        let r = t.bracket_atoms(&a, &b);
        let i = t.g.names.iter().position(|n| n == "D1,4").unwrap();
        let expect = t.g_atoms(&[(i, Scalar::one())], &lv(&[1]));
        assert_eq!(r, expect);
        assert_eq!(t.dim(&lv(&[0, 0, 0]), &lv(&[1])), 1);
        assert_eq!(t.dim(&lv(&[1, 1, 0]), &lv(&[1])), 0);
    }
}
