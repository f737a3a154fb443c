//! `sl_{l+1}(A)` over an associative coordinate torus `A`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graded::{GradedAlgebra, Variety};
use crate::lattice::{root_system, LatticeVector, RootSystem};
use crate::scalar::Scalar;
use crate::tori::TorusAlgebra;

use super::{Atom, LieElem, LieTorus};

/// A matrix over `A` whose entries are scalar multiples of monomials of one
/// degree: entry `(i, j)` holds `c x^deg`.
type Mat = BTreeMap<(usize, usize), Scalar>;

#[derive(Debug)]
pub struct SlTorus {
    pub size: usize,
    pub torus: TorusAlgebra,
    rs: RootSystem,
}

impl SlTorus {
    pub fn new(size: usize, torus: TorusAlgebra) -> Result<SlTorus> {
        if torus.variety() != Variety::Associative {
            return Err(Error::NotAssociative);
        }
        if size < 4 {
            return Err(Error::RankTooSmall(format!("sl_{size} needs size >= 4")));
        }
        let rs = root_system("A", size - 1)?;
        Ok(SlTorus { size, torus, rs })
    }

    pub fn root_of(&self, i: usize, j: usize) -> LatticeVector {
        let mut v = vec![0; self.size];
        v[i] += 1;
        v[j] -= 1;
        LatticeVector(v)
    }

    /// The matrix unit position of an off-diagonal root.
    pub fn position(&self, root: &LatticeVector) -> Option<(usize, usize)> {
        let i = root.0.iter().position(|x| *x == 1)?;
        let j = root.0.iter().position(|x| *x == -1)?;
        Some((i, j))
    }

    /// The atom `x^deg E_ij` (`i != j`).
    pub fn unit_atom(&self, i: usize, j: usize, deg: LatticeVector) -> Atom {
        Atom::new(self.root_of(i, j), deg, 0)
    }

    fn shape(&self, a: &Atom) -> Mat {
        let mut m = Mat::new();
        if let Some(p) = self.position(&a.root) {
            m.insert(p, Scalar::one());
        } else if (a.idx as usize) < self.size - 1 {
            let i = a.idx as usize;
            m.insert((i, i), Scalar::one());
            m.insert((i + 1, i + 1), Scalar::from_int(-1));
        } else {
            m.insert((0, 0), Scalar::one());
        }
        m
    }

    fn mat_mul(&self, a: &Mat, b: &Mat, c: &Scalar) -> Mat {
        let mut out = Mat::new();
        for ((i, k), x) in a {
            for ((k2, j), y) in b {
                if k == k2 {
                    let e = out.entry((*i, *j)).or_insert_with(Scalar::zero);
                    *e += &(&(x * y) * c);
                }
            }
        }
        out
    }

    /// Decomposes a degree-`deg` matrix into atoms.
    fn to_atoms(&self, m: &Mat, deg: &LatticeVector) -> LieElem {
        let mut out = LieElem::zero();
        let zero = self.rs.zero();
        let mut diag = vec![Scalar::zero(); self.size];
        for ((i, j), c) in m {
            if c.is_zero() {
                continue;
            }
            if i == j {
                diag[*i] += c;
            } else {
                out.add_term(self.unit_atom(*i, *j, deg.clone()), c.clone());
            }
        }
        let total = diag.iter().fold(Scalar::zero(), |acc, x| &acc + x);
        if !total.is_zero() {
            out.add_term(Atom::new(zero.clone(), deg.clone(), (self.size - 1) as u32), total.clone());
            diag[0] = &diag[0] - &total;
        }
        let mut partial = Scalar::zero();
        for (i, d) in diag.iter().take(self.size - 1).enumerate() {
            partial += d;
            out.add_term(Atom::new(zero.clone(), deg.clone(), i as u32), partial.clone());
        }
        out
    }

    /// `c M^t` (or `c M`) at degree `deg`, for the matrix shape `M` of an atom.
    pub fn reshape(&self, a: &Atom, transpose: bool, c: &Scalar, deg: &LatticeVector) -> LieElem {
        let m: Mat = self
            .shape(a)
            .into_iter()
            .map(|((i, j), v)| (if transpose { (j, i) } else { (i, j) }, &v * c))
            .collect();
        self.to_atoms(&m, deg)
    }

    fn trace(m: &Mat) -> Scalar {
        m.iter().filter(|((i, j), _)| i == j).fold(Scalar::zero(), |acc, (_, c)| &acc + c)
    }
}

impl LieTorus for SlTorus {
    fn name(&self) -> String {
        format!("SL({}, {})", self.size, self.torus.name())
    }

    fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    fn nullity(&self) -> usize {
        self.torus.rank()
    }

    fn dim(&self, root: &LatticeVector, deg: &LatticeVector) -> usize {
        if root.is_zero() {
            self.size - 1 + usize::from(self.torus.commutator_component(deg))
        } else if self.rs.contains(root) {
            1
        } else {
            0
        }
    }

    fn bracket_atoms(&self, a: &Atom, b: &Atom) -> LieElem {
        let (ma, mb) = (self.shape(a), self.shape(b));
        let kab = self.torus.k(&a.deg, &b.deg);
        let kba = self.torus.k(&b.deg, &a.deg);
        let mut m = self.mat_mul(&ma, &mb, &kab);
        for (p, v) in self.mat_mul(&mb, &ma, &-&kba) {
            let e = m.entry(p).or_insert_with(Scalar::zero);
            *e += &v;
        }
        self.to_atoms(&m, &(&a.deg + &b.deg))
    }

    fn form_atoms(&self, a: &Atom, b: &Atom) -> Scalar {
        if !(&a.deg + &b.deg).is_zero() {
            return Scalar::zero();
        }
        let m = self.mat_mul(&self.shape(a), &self.shape(b), &self.torus.k(&a.deg, &b.deg));
        SlTorus::trace(&m)
    }

    fn describe(&self, a: &Atom) -> String {
        match self.position(&a.root) {
            Some((i, j)) => format!("x^{}E{}{}", a.deg, i + 1, j + 1),
            None if (a.idx as usize) < self.size - 1 => {
                let i = a.idx as usize + 1;
                format!("x^{}(E{i}{i}-E{}{})", a.deg, i + 1, i + 1)
            }
            None => format!("x^{}E11", a.deg),
        }
    }

    fn in_centroid_support(&self, mu: &LatticeVector) -> bool {
        mu.len() == self.nullity() && self.torus.center_support(mu)
    }

    fn centroid_atom(&self, mu: &LatticeVector, a: &Atom) -> LieElem {
        let c = self.torus.k(mu, &a.deg);
        let m: Mat = self.shape(a).into_iter().map(|(p, v)| (p, &v * &c)).collect();
        self.to_atoms(&m, &(&a.deg + mu))
    }

    fn period(&self) -> LatticeVector {
        self.torus.period()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(v: &[i64]) -> LatticeVector {
        LatticeVector(v.to_vec())
    }

    #[test]
    fn diagonal_dimensions() {
        let l = SlTorus::new(4, TorusAlgebra::laurent(1)).unwrap();
        assert_eq!(l.dim(&lv(&[0, 0, 0, 0]), &lv(&[2])), 3);
        let q = SlTorus::new(4, TorusAlgebra::quantum2(Scalar::root_of_unity(1, 3).unwrap()).unwrap()).unwrap();
        assert_eq!(q.dim(&lv(&[0, 0, 0, 0]), &lv(&[1, 0])), 4);
        assert_eq!(q.dim(&lv(&[0, 0, 0, 0]), &lv(&[3, 0])), 3);
    }

    #[test]
    fn unit_bracket() {
        let l = SlTorus::new(4, TorusAlgebra::laurent(1)).unwrap();
        let z = lv(&[0]);
        let r = l.bracket_atoms(&l.unit_atom(0, 1, z.clone()), &l.unit_atom(1, 0, z.clone()));
        assert_eq!(r, LieElem::basis(Atom::new(lv(&[0, 0, 0, 0]), z, 0)));
        assert!(matches!(SlTorus::new(3, TorusAlgebra::laurent(1)), Err(Error::RankTooSmall(_))));
    }
}
