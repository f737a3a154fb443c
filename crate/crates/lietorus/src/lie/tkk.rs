//! The Tits-Kantor-Koecher algebra `J ⊕ Instrl(J) ⊕ J̄` of a graded Jordan
//! algebra, root-graded by the Peirce decomposition relative to a family of
//! orthogonal idempotents (the unit alone gives type `A_1`).

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::graded::{basis_at, mul, residue_basis, trace_pair, Elem, GradedAlgebra, Key, Variety};
use crate::lattice::{residue_box, root_system, LatticeVector, RootSystem};
use crate::operators::OpTable;
use crate::scalar::Scalar;

use super::{Atom, ComponentCache, GenBasis, LieElem, LieTorus};

/// The generator `x △ y` of an `Instrl` atom.
pub type InstrlGen = (Key, Key);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    J,
    Bar,
    Instrl,
}

pub struct Tkk {
    pub j: Arc<dyn GradedAlgebra>,
    idempotents: Vec<Elem>,
    rs: RootSystem,
    j_roots: Vec<LatticeVector>,
    peirce: HashMap<Key, LatticeVector>,
    icache: ComponentCache<InstrlGen>,
    central: Vec<LatticeVector>,
    cent: RwLock<HashMap<LatticeVector, Option<Elem>>>,
}

impl std::fmt::Debug for Tkk {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl Tkk {
    /// `TKK(J)` graded by `A_1`.
    pub fn new(j: Arc<dyn GradedAlgebra>) -> Result<Tkk> {
        let u = j.unit();
        Tkk::with_idempotents(j, vec![u])
    }

    /// `TKK(J)` graded by `C_l` from `l` orthogonal idempotents summing to 1.
    pub fn with_idempotents(j: Arc<dyn GradedAlgebra>, idempotents: Vec<Elem>) -> Result<Tkk> {
        if j.variety() != Variety::Jordan {
            return Err(Error::NotJordan);
        }
        let l = idempotents.len();
        if l == 0 {
            return Err(Error::BadPeirce("no idempotents".into()));
        }
        let mut sum = Elem::zero();
        for (a, e) in idempotents.iter().enumerate() {
            sum = sum.add(e);
            for (b, f) in idempotents.iter().enumerate() {
                let p = mul(j.as_ref(), e, f);
                let want = if a == b { e.clone() } else { Elem::zero() };
                if p != want {
                    return Err(Error::BadPeirce(format!("e{} e{} is not {}", a + 1, b + 1, if a == b { "e" } else { "0" })));
                }
            }
        }
        if sum != j.unit() {
            return Err(Error::BadPeirce("idempotents do not sum to 1".into()));
        }
        let h = crate::graded::half();
        let mut peirce = HashMap::new();
        for k in residue_basis(j.as_ref()) {
            let x = Elem::basis(k.clone());
            let mut root = vec![0i64; l];
            for (i, e) in idempotents.iter().enumerate() {
                let ex = mul(j.as_ref(), e, &x);
                let c = ex.coeff(&k);
                if ex != x.scale(&c) {
                    return Err(Error::BadPeirce(format!("{} is not Peirce homogeneous", j.describe(&k))));
                }
                root[i] = if c.is_zero() {
                    0
                } else if c == h {
                    1
                } else if c.is_one() {
                    2
                } else {
                    return Err(Error::BadPeirce(format!("eigenvalue {c} on {}", j.describe(&k))));
                };
            }
            let total: i64 = root.iter().sum();
            if total != 2 {
                return Err(Error::BadPeirce(format!("{} has Peirce weight {total}", j.describe(&k))));
            }
            peirce.insert(k, LatticeVector(root));
        }
        let rs = root_system("C", l)?;
        let mut j_roots = Vec::new();
        for a in 0..l {
            for b in a..l {
                let mut v = vec![0; l];
                v[a] += 1;
                v[b] += 1;
                j_roots.push(LatticeVector(v));
            }
        }
        let central = residue_box(&j.period()).into_iter().filter(|m| j.centroid_elem(m).is_some()).collect();
        Ok(Tkk {
            j,
            idempotents,
            rs,
            j_roots,
            peirce,
            icache: ComponentCache::default(),
            central,
            cent: RwLock::new(HashMap::new()),
        })
    }

    pub fn rank(&self) -> usize {
        self.idempotents.len()
    }

    pub fn part(&self, root: &LatticeVector) -> Part {
        if self.j_roots.contains(root) {
            Part::J
        } else if self.j_roots.contains(&-root) {
            Part::Bar
        } else {
            Part::Instrl
        }
    }

    pub fn peirce_root(&self, k: &Key) -> LatticeVector {
        let r = Key::new(k.deg.rem_euclid(&self.j.period()), k.slot);
        self.peirce.get(&r).cloned().expect("residue key has Peirce data")
    }

    /// The `J` keys of degree `deg` in the Peirce space of root `r`.
    pub fn j_keys(&self, r: &LatticeVector, deg: &LatticeVector) -> Vec<Key> {
        basis_at(self.j.as_ref(), deg).into_iter().filter(|k| self.peirce_root(k) == *r).collect()
    }

    /// The basis element of `J` underlying a `J` or `J̄` atom.
    pub fn j_key(&self, a: &Atom) -> Key {
        let r = if self.part(&a.root) == Part::J { a.root.clone() } else { -&a.root };
        self.j_keys(&r, &a.deg)[a.idx as usize].clone()
    }

    /// Splits a `J` element into atoms of the `J` part (or the `J̄` part).
    pub fn from_j(&self, x: &Elem, bar: bool) -> LieElem {
        let mut out = LieElem::zero();
        for (k, c) in x.iter() {
            let r = self.peirce_root(k);
            let idx = self.j_keys(&r, &k.deg).iter().position(|t| t == k).expect("key in basis");
            let root = if bar { -&r } else { r };
            out.add_term(Atom::new(root, k.deg.clone(), idx as u32), c.clone());
        }
        out
    }

    /// `x △ y = L_{xy} + [L_x, L_y]`.
    pub fn triangle(&self, x: &Elem, y: &Elem, deg: LatticeVector) -> OpTable {
        let j = self.j.as_ref();
        OpTable::from_fn(j, deg, |z| {
            let xy = mul(j, x, y);
            let mut out = mul(j, &xy, z);
            out = out.add(&mul(j, x, &mul(j, y, z)));
            out.sub(&mul(j, y, &mul(j, x, z)))
        })
    }

    /// Basis of `Instrl(J)` in bidegree `(alpha, deg)` chosen among the
    /// generators `x △ y` with `x` of degree in the residue box.
    pub fn instrl_basis(&self, alpha: &LatticeVector, deg: &LatticeVector) -> Arc<GenBasis<InstrlGen>> {
        self.icache.get_or((alpha.clone(), deg.clone()), || {
            let j = self.j.as_ref();
            let mut cands = Vec::new();
            for mu in residue_box(&j.period()) {
                let nu = deg - &mu;
                for x in basis_at(j, &mu) {
                    let rx = self.peirce_root(&x);
                    for y in basis_at(j, &nu) {
                        if &rx - &self.peirce_root(&y) != *alpha {
                            continue;
                        }
                        let t = self.triangle(&Elem::basis(x.clone()), &Elem::basis(y.clone()), deg.clone());
                        cands.push(((x.clone(), y), t.to_vec(j)));
                    }
                }
            }
            GenBasis::build(cands)
        })
    }

    pub fn instrl_table(&self, a: &Atom) -> OpTable {
        let b = self.instrl_basis(&a.root, &a.deg);
        OpTable::from_vec(self.j.as_ref(), a.deg.clone(), &b.vectors[a.idx as usize])
    }

    /// Expresses an operator of root `alpha` in `Instrl` atoms.
    pub fn instrl_express(&self, alpha: &LatticeVector, t: &OpTable) -> LieElem {
        let b = self.instrl_basis(alpha, &t.deg);
        let coords = b.express(&t.to_vec(self.j.as_ref())).expect("operator lies in Instrl(J)");
        coords
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (Atom::new(alpha.clone(), t.deg.clone(), i as u32), c))
            .collect()
    }

    /// `Ē = E - 2 L_{E(1)}`, the bar map on `Instrl(J)`.
    pub fn bar_op(&self, e: &OpTable) -> OpTable {
        let j = self.j.as_ref();
        let e1 = e.eval(j, &j.unit());
        if e1.is_zero() {
            return e.clone();
        }
        let l = OpTable::from_fn(j, e.deg.clone(), |z| mul(j, &e1, z));
        e.combine(&l, &Scalar::from_int(-2))
    }

    fn centroid_elem(&self, mu: &LatticeVector) -> Option<Elem> {
        if let Some(v) = self.cent.read().expect("centroid cache poisoned").get(mu) {
            return v.clone();
        }
        let v = self.j.centroid_elem(mu);
        self.cent.write().expect("centroid cache poisoned").insert(mu.clone(), v.clone());
        v
    }
}

impl LieTorus for Tkk {
    fn name(&self) -> String {
        if self.rank() == 1 {
            format!("TKK({})", self.j.name())
        } else {
            format!("TKK_C({})", self.j.name())
        }
    }

    fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    fn nullity(&self) -> usize {
        self.j.rank()
    }

    fn dim(&self, root: &LatticeVector, deg: &LatticeVector) -> usize {
        match self.part(root) {
            Part::J => self.j_keys(root, deg).len(),
            Part::Bar => self.j_keys(&-root, deg).len(),
            Part::Instrl => self.instrl_basis(root, deg).dim(),
        }
    }

    fn bracket_atoms(&self, a: &Atom, b: &Atom) -> LieElem {
        let j = self.j.as_ref();
        let deg = &a.deg + &b.deg;
        match (self.part(&a.root), self.part(&b.root)) {
            (Part::J, Part::J) | (Part::Bar, Part::Bar) => LieElem::zero(),
            (Part::J, Part::Bar) => {
                let (x, y) = (Elem::basis(self.j_key(a)), Elem::basis(self.j_key(b)));
                self.instrl_express(&(&a.root + &b.root), &self.triangle(&x, &y, deg))
            }
            (Part::Bar, Part::J) => self.bracket_atoms(b, a).neg(),
            (Part::Instrl, Part::J) => {
                let x = Elem::basis(self.j_key(b));
                self.from_j(&self.instrl_table(a).eval(j, &x), false)
            }
            (Part::Instrl, Part::Bar) => {
                let y = Elem::basis(self.j_key(b));
                self.from_j(&self.bar_op(&self.instrl_table(a)).eval(j, &y), true)
            }
            (Part::J | Part::Bar, Part::Instrl) => self.bracket_atoms(b, a).neg(),
            (Part::Instrl, Part::Instrl) => {
                let c = self.instrl_table(a).commutator(j, &self.instrl_table(b));
                self.instrl_express(&(&a.root + &b.root), &c)
            }
        }
    }

    fn form_atoms(&self, a: &Atom, b: &Atom) -> Scalar {
        let j = self.j.as_ref();
        if !(&a.deg + &b.deg).is_zero() || !(&a.root + &b.root).is_zero() {
            return Scalar::zero();
        }
        match (self.part(&a.root), self.part(&b.root)) {
            (Part::J, Part::Bar) | (Part::Bar, Part::J) => {
                trace_pair(j, &Elem::basis(self.j_key(a)), &Elem::basis(self.j_key(b)))
            }
            (Part::Instrl, Part::Instrl) => {
                let basis = self.instrl_basis(&a.root, &a.deg);
                let (x, y) = &basis.gens[a.idx as usize];
                let ey = self.bar_op(&self.instrl_table(b)).eval(j, &Elem::basis(y.clone()));
                -trace_pair(j, &Elem::basis(x.clone()), &ey)
            }
            _ => Scalar::zero(),
        }
    }

    fn describe(&self, a: &Atom) -> String {
        match self.part(&a.root) {
            Part::J => self.j.describe(&self.j_key(a)),
            Part::Bar => format!("bar({})", self.j.describe(&self.j_key(a))),
            Part::Instrl => {
                let b = self.instrl_basis(&a.root, &a.deg);
                let (x, y) = &b.gens[a.idx as usize];
                format!("{}△{}", self.j.describe(x), self.j.describe(y))
            }
        }
    }

    fn in_centroid_support(&self, mu: &LatticeVector) -> bool {
        mu.len() == self.nullity() && self.central.contains(&mu.rem_euclid(&self.j.period()))
    }

    fn centroid_atom(&self, mu: &LatticeVector, a: &Atom) -> LieElem {
        let j = self.j.as_ref();
        let c = self.centroid_elem(mu).expect("degree in the centroid support");
        match self.part(&a.root) {
            Part::J => self.from_j(&mul(j, &c, &Elem::basis(self.j_key(a))), false),
            Part::Bar => self.from_j(&mul(j, &c, &Elem::basis(self.j_key(a))), true),
            Part::Instrl => {
                let lc = OpTable::from_fn(j, mu.clone(), |z| mul(j, &c, z));
                self.instrl_express(&a.root, &lc.compose(j, &self.instrl_table(a)))
            }
        }
    }

    fn period(&self) -> LatticeVector {
        self.j.period()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tori::TorusAlgebra;

    fn plus() -> Tkk {
        let m = vec![vec![Scalar::one(), Scalar::from_int(-1)], vec![Scalar::from_int(-1), Scalar::one()]];
        Tkk::new(Arc::new(TorusAlgebra::jordan_plus(&m).unwrap())).unwrap()
    }

    fn lv(v: &[i64]) -> LatticeVector {
        LatticeVector(v.to_vec())
    }

    #[test]
    fn unit_pair_brackets() {
        let t = plus();
        let z = lv(&[0, 0]);
        let one = Atom::new(lv(&[2]), z.clone(), 0);
        let one_bar = Atom::new(lv(&[-2]), z.clone(), 0);
        let l1 = t.bracket_atoms(&one, &one_bar);
        assert_eq!(l1.len(), 1);
        let (h, c) = l1.iter().next().unwrap();
        assert!(c.is_one());
        let y = Atom::new(lv(&[-2]), lv(&[1, 0]), 0);
        assert_eq!(t.bracket_atoms(h, &y), LieElem::single(y.clone(), Scalar::from_int(-1)));
    }
}
