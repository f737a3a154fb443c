//! `psl_3(A) = (sl_3 ⊗ A) ⊕ D_{A,A}` over an alternative coordinate torus.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graded::{mul, Elem, GradedAlgebra, Variety};
use crate::lattice::{residue_box, root_system, LatticeVector, RootSystem};
use crate::operators::OpTable;
use crate::scalar::Scalar;
use crate::tori::TorusAlgebra;

use super::{Atom, ComponentCache, GenBasis, LieElem, LieTorus};

type Mat = BTreeMap<(usize, usize), Scalar>;

/// The generator `D_{x^a, x^b}` of a derivation atom.
pub type DGen = (LatticeVector, LatticeVector);

pub struct Psl3Torus {
    pub torus: TorusAlgebra,
    rs: RootSystem,
    dcache: ComponentCache<DGen>,
    central: HashSet<LatticeVector>,
}

impl std::fmt::Debug for Psl3Torus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

fn matmul(a: &Mat, b: &Mat) -> Mat {
    let mut out = Mat::new();
    for ((i, k), x) in a {
        for ((k2, j), y) in b {
            if k == k2 {
                let e = out.entry((*i, *j)).or_insert_with(Scalar::zero);
                *e += &(x * y);
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn mat_lin(a: &Mat, b: &Mat, cb: &Scalar) -> Mat {
    let mut out = a.clone();
    for (p, v) in b {
        let e = out.entry(*p).or_insert_with(Scalar::zero);
        *e += &(v * cb);
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn mat_trace(a: &Mat) -> Scalar {
    a.iter().filter(|((i, j), _)| i == j).fold(Scalar::zero(), |acc, (_, v)| &acc + v)
}

impl Psl3Torus {
    pub fn new(torus: TorusAlgebra) -> Result<Psl3Torus> {
        if torus.variety() == Variety::Jordan {
            return Err(Error::NotAlternative);
        }
        let rs = root_system("A", 2)?;
        let central = residue_box(&torus.period()).into_iter().filter(|m| torus.center_support(m)).collect();
        Ok(Psl3Torus { torus, rs, dcache: ComponentCache::default(), central })
    }

    pub fn root_of(i: usize, j: usize) -> LatticeVector {
        let mut v = vec![0; 3];
        v[i] += 1;
        v[j] -= 1;
        LatticeVector(v)
    }

    fn position(root: &LatticeVector) -> Option<(usize, usize)> {
        let i = root.0.iter().position(|x| *x == 1)?;
        let j = root.0.iter().position(|x| *x == -1)?;
        Some((i, j))
    }

    fn mono(&self, d: &LatticeVector) -> Elem {
        Elem::mono(d.clone())
    }

    /// `D_{a,b} = [L_a,L_b] + [R_a,R_b] + [L_a,R_b]`.
    pub fn d_table(&self, a: &Elem, b: &Elem, deg: LatticeVector) -> OpTable {
        let t = &self.torus;
        OpTable::from_fn(t, deg, |x| {
            let m = |u: &Elem, v: &Elem| mul(t, u, v);
            let mut out = m(a, &m(b, x));
            out = out.sub(&m(b, &m(a, x)));
            out = out.add(&m(&m(x, b), a));
            out = out.sub(&m(&m(x, a), b));
            out = out.add(&m(a, &m(x, b)));
            out.sub(&m(&m(a, x), b))
        })
    }

    /// Basis of `D_{A,A}^deg` chosen among the generators `D_{x^m, x^{deg-m}}`
    /// with `m` in the residue box.
    pub fn d_basis(&self, deg: &LatticeVector) -> Arc<GenBasis<DGen>> {
        let key = (self.rs.zero(), deg.clone());
        self.dcache.get_or(key, || {
            let cands = residue_box(&self.torus.period()).into_iter().map(|m| {
                let nu = deg - &m;
                let v = self.d_table(&self.mono(&m), &self.mono(&nu), deg.clone()).to_vec(&self.torus);
                ((m, nu), v)
            });
            GenBasis::build(cands)
        })
    }

    pub fn d_atom_table(&self, a: &Atom) -> OpTable {
        let b = self.d_basis(&a.deg);
        OpTable::from_vec(&self.torus, a.deg.clone(), &b.vectors[a.idx as usize - 2])
    }

    /// Expresses a derivation table of degree `deg` in derivation atoms.
    pub fn d_express(&self, t: &OpTable) -> LieElem {
        let b = self.d_basis(&t.deg);
        let coords = b.express(&t.to_vec(&self.torus)).expect("derivation lies in D_{A,A}");
        let zero = self.rs.zero();
        coords
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (Atom::new(zero.clone(), t.deg.clone(), i as u32 + 2), c))
            .collect()
    }

    pub fn is_derivation(a: &Atom) -> bool {
        a.root.is_zero() && a.idx >= 2
    }

    /// The `sl_3` matrix of a matrix atom.
    pub fn shape(a: &Atom) -> Mat {
        let mut m = Mat::new();
        if let Some(p) = Psl3Torus::position(&a.root) {
            m.insert(p, Scalar::one());
        } else {
            let i = a.idx as usize;
            m.insert((i, i), Scalar::one());
            m.insert((i + 1, i + 1), Scalar::from_int(-1));
        }
        m
    }

    /// `m ⊗ c` for a traceless matrix and a torus element.
    pub fn tensor(&self, m: &Mat, c: &Elem) -> LieElem {
        let mut out = LieElem::zero();
        let zero = self.rs.zero();
        for (k, coef) in c.iter() {
            let mut diag = [Scalar::zero(), Scalar::zero(), Scalar::zero()];
            for ((i, j), v) in m {
                let v = v * coef;
                if i == j {
                    diag[*i] += &v;
                } else {
                    out.add_term(Atom::new(Psl3Torus::root_of(*i, *j), k.deg.clone(), 0), v);
                }
            }
            let a1 = &diag[0] + &diag[1];
            out.add_term(Atom::new(zero.clone(), k.deg.clone(), 0), diag[0].clone());
            out.add_term(Atom::new(zero.clone(), k.deg.clone(), 1), a1);
        }
        out
    }
}

impl LieTorus for Psl3Torus {
    fn name(&self) -> String {
        format!("PSL3({})", self.torus.name())
    }

    fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    fn nullity(&self) -> usize {
        self.torus.rank()
    }

    fn dim(&self, root: &LatticeVector, deg: &LatticeVector) -> usize {
        if root.is_zero() {
            2 + self.d_basis(deg).dim()
        } else if self.rs.contains(root) {
            1
        } else {
            0
        }
    }

    fn bracket_atoms(&self, a: &Atom, b: &Atom) -> LieElem {
        let t = &self.torus;
        match (Psl3Torus::is_derivation(a), Psl3Torus::is_derivation(b)) {
            (true, true) => {
                let c = self.d_atom_table(a).commutator(t, &self.d_atom_table(b));
                self.d_express(&c)
            }
            (true, false) => {
                let img = self.d_atom_table(a).eval(t, &self.mono(&b.deg));
                self.tensor(&Psl3Torus::shape(b), &img)
            }
            (false, true) => self.bracket_atoms(b, a).neg(),
            (false, false) => {
                let (x, y) = (Psl3Torus::shape(a), Psl3Torus::shape(b));
                let (ea, eb) = (self.mono(&a.deg), self.mono(&b.deg));
                let ab = mul(t, &ea, &eb);
                let ba = mul(t, &eb, &ea);
                let h = crate::graded::half();
                let xy = matmul(&x, &y);
                let yx = matmul(&y, &x);
                let comm = mat_lin(&xy, &yx, &Scalar::from_int(-1));
                let tr = mat_trace(&xy);
                let mut out = self.tensor(&comm, &ab.add(&ba).scale(&h));
                let mut sym = mat_lin(&xy, &yx, &Scalar::one());
                let shift = &tr * &Scalar::frac(-2, 3);
                for i in 0..3 {
                    let e = sym.entry((i, i)).or_insert_with(Scalar::zero);
                    *e += &shift;
                }
                out = out.add(&self.tensor(&sym, &ab.sub(&ba).scale(&h)));
                if !tr.is_zero() {
                    let d = self.d_table(&ea, &eb, &a.deg + &b.deg);
                    out = out.add(&self.d_express(&d).scale(&(&tr * &Scalar::frac(1, 3))));
                }
                out
            }
        }
    }

    fn form_atoms(&self, a: &Atom, b: &Atom) -> Scalar {
        let t = &self.torus;
        if !(&a.deg + &b.deg).is_zero() {
            return Scalar::zero();
        }
        match (Psl3Torus::is_derivation(a), Psl3Torus::is_derivation(b)) {
            (false, false) => {
                let tr = mat_trace(&matmul(&Psl3Torus::shape(a), &Psl3Torus::shape(b)));
                &tr * &crate::graded::trace_pair(t, &self.mono(&a.deg), &self.mono(&b.deg))
            }
            (true, true) => {
                let basis = self.d_basis(&a.deg);
                let (m, nu) = &basis.gens[a.idx as usize - 2];
                let e = self.d_atom_table(b).eval(t, &self.mono(nu));
                &Scalar::from_int(-3) * &crate::graded::trace_pair(t, &self.mono(m), &e)
            }
            _ => Scalar::zero(),
        }
    }

    fn describe(&self, a: &Atom) -> String {
        if let Some((i, j)) = Psl3Torus::position(&a.root) {
            return format!("E{}{}⊗x^{}", i + 1, j + 1, a.deg);
        }
        match a.idx {
            0 => format!("(E11-E22)⊗x^{}", a.deg),
            1 => format!("(E22-E33)⊗x^{}", a.deg),
            k => {
                let b = self.d_basis(&a.deg);
                let (m, nu) = &b.gens[k as usize - 2];
                format!("D(x^{m},x^{nu})")
            }
        }
    }

    fn in_centroid_support(&self, mu: &LatticeVector) -> bool {
        mu.len() == self.nullity() && self.central.contains(&mu.rem_euclid(&self.torus.period()))
    }

    fn centroid_atom(&self, mu: &LatticeVector, a: &Atom) -> LieElem {
        let t = &self.torus;
        let z = self.mono(mu);
        if Psl3Torus::is_derivation(a) {
            let zl = OpTable::left_mul(t, &z);
            self.d_express(&zl.compose(t, &self.d_atom_table(a)))
        } else {
            self.tensor(&Psl3Torus::shape(a), &mul(t, &z, &self.mono(&a.deg)))
        }
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
    fn unit_bracket() {
        let p = Psl3Torus::new(TorusAlgebra::octonion(3).unwrap()).unwrap();
        let z = lv(&[0, 0, 0]);
        let e12 = Atom::new(Psl3Torus::root_of(0, 1), z.clone(), 0);
        let e21 = Atom::new(Psl3Torus::root_of(1, 0), z.clone(), 0);
        assert_eq!(p.bracket_atoms(&e12, &e21), LieElem::basis(Atom::new(lv(&[0, 0, 0]), z, 0)));
    }

    #[test]
    fn octonion_derivation_dimensions() {
        let p = Psl3Torus::new(TorusAlgebra::octonion(3).unwrap()).unwrap();
        let total: usize = residue_box(&lv(&[2, 2, 2])).iter().map(|d| p.d_basis(d).dim()).sum();
        assert_eq!(total, 14);
    }
}
