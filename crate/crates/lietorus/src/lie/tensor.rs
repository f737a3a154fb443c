//! The untwisted loop algebra `g ⊗ K[x_1^{±1}, ..., x_n^{±1}]`.

use std::sync::Arc;

use crate::lattice::{LatticeVector, RootSystem};
use crate::scalar::Scalar;

use super::{Atom, LieElem, LieTorus, MatrixLie};

#[derive(Clone, Debug)]
pub struct TensorTorus {
    pub g: Arc<MatrixLie>,
    pub n: usize,
}

impl TensorTorus {
    pub fn new(g: Arc<MatrixLie>, n: usize) -> TensorTorus {
        TensorTorus { g, n }
    }

    /// The basis index of `g` underlying an atom.
    pub fn basis_index(&self, a: &Atom) -> usize {
        self.g.by_root(&a.root)[a.idx as usize]
    }

    /// The atom `b_i ⊗ x^deg`.
    pub fn atom(&self, i: usize, deg: LatticeVector) -> Atom {
        Atom::new(self.g.roots[i].clone(), deg, self.g.local_index(i))
    }

    /// Lifts a coordinate vector of `g` to degree `deg`.
    pub fn lift(&self, v: &[Scalar], deg: &LatticeVector) -> LieElem {
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.atom(i, deg.clone()), c.clone()))
            .collect()
    }
}

impl LieTorus for TensorTorus {
    fn name(&self) -> String {
        format!("Tensor({}, {})", self.g.label, self.n)
    }

    fn root_system(&self) -> &RootSystem {
        &self.g.root_system
    }

    fn nullity(&self) -> usize {
        self.n
    }

    fn dim(&self, root: &LatticeVector, _deg: &LatticeVector) -> usize {
        self.g.by_root(root).len()
    }

    fn bracket_atoms(&self, a: &Atom, b: &Atom) -> LieElem {
        let deg = &a.deg + &b.deg;
        self.g
            .bracket_basis(self.basis_index(a), self.basis_index(b))
            .iter()
            .map(|(k, c)| (self.atom(*k, deg.clone()), c.clone()))
            .collect()
    }

    fn form_atoms(&self, a: &Atom, b: &Atom) -> Scalar {
        if !(&a.deg + &b.deg).is_zero() {
            return Scalar::zero();
        }
        self.g.form_basis(self.basis_index(a), self.basis_index(b)).clone()
    }

    fn describe(&self, a: &Atom) -> String {
        format!("{}⊗x^{}", self.g.names[self.basis_index(a)], a.deg)
    }

    fn in_centroid_support(&self, mu: &LatticeVector) -> bool {
        mu.len() == self.n
    }

    fn centroid_atom(&self, mu: &LatticeVector, a: &Atom) -> LieElem {
        LieElem::basis(Atom::new(a.root.clone(), &a.deg + mu, a.idx))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::DegreeWindow;
    use crate::lie::{check_lie_torus, CheckOptions};

    fn lv(v: &[i64]) -> LatticeVector {
        LatticeVector(v.to_vec())
    }

    #[test]
    fn loop_sl2_brackets_and_form() {
        let t = TensorTorus::new(Arc::new(MatrixLie::builtin("A", 1).unwrap()), 1);
        let e1 = t.atom(0, lv(&[1]));
        let f1 = t.atom(2, lv(&[-1]));
        let h0 = t.atom(1, lv(&[0]));
        assert_eq!(t.bracket_atoms(&e1, &f1), LieElem::basis(h0.clone()));
        assert_eq!(t.bracket_atoms(&h0, &e1), LieElem::single(e1.clone(), Scalar::from_int(2)));
        assert_eq!(t.form_atoms(&e1, &f1), Scalar::one());
        assert!(t.form_atoms(&e1, &t.atom(2, lv(&[1]))).is_zero());
    }

    #[test]
    fn loop_sl2_is_a_lie_torus() {
        let t = TensorTorus::new(Arc::new(MatrixLie::builtin("A", 1).unwrap()), 1);
        let rep = check_lie_torus(&t, &DegreeWindow::new(3), &CheckOptions::default());
        assert!(rep.all_pass(), "{}", rep.to_text());
    }
}
