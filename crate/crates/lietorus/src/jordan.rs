//! Jordan algebras built from coordinate tori: Hermitian matrices
//! `H_l(A, sigma)`, the reduced Clifford algebra `RedCliff` and the Clifford
//! Jordan algebra `Cliff(g)` of a diagonal Laurent-valued form.

use crate::error::{Error, Result};
use crate::graded::{half, is_centroidal, mul, Elem, GradedAlgebra, Key, Variety};
use crate::lattice::LatticeVector;
use crate::scalar::Scalar;
use crate::tori::{AntiInvolution, TorusAlgebra};

/// `H_l(A, sigma) = {X in Mat_l(A) : sigma(X^t) = X}` with `X.Y = (XY + YX)/2`.
///
/// The basis element in slot `s` at degree `d` is `x^d E_ii` for a diagonal
/// position `(i, i)` (present only when `sigma(x^d) = x^d`) and
/// `x^d E_ij + sigma(x^d) E_ji` for an off-diagonal position `i < j`.
#[derive(Clone, Debug)]
pub struct HermitianMatrix {
    pub ell: usize,
    pub torus: TorusAlgebra,
    pub sigma: AntiInvolution,
    positions: Vec<(usize, usize)>,
}

impl HermitianMatrix {
    pub fn new(ell: usize, torus: TorusAlgebra, sigma: AntiInvolution) -> Result<HermitianMatrix> {
        if ell < 2 {
            return Err(Error::RankTooSmall(format!("H_l needs l >= 2, got {ell}")));
        }
        match torus.variety() {
            Variety::Associative => {}
            Variety::Alternative if ell == 3 => {}
            Variety::Alternative => return Err(Error::OctonionRankNot3),
            Variety::Jordan => return Err(Error::NotAlternative),
        }
        let mut positions = Vec::new();
        for i in 0..ell {
            for j in i..ell {
                positions.push((i, j));
            }
        }
        Ok(HermitianMatrix { ell, torus, sigma, positions })
    }

    pub fn position(&self, slot: u32) -> (usize, usize) {
        self.positions[slot as usize]
    }

    pub fn slot_of(&self, i: usize, j: usize) -> u32 {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        self.positions.iter().position(|p| *p == (a, b)).expect("valid position") as u32
    }

    /// The diagonal matrix unit `E_ii`.
    pub fn idempotent(&self, i: usize) -> Elem {
        Elem::basis(Key::new(LatticeVector::zero(self.torus.rank()), self.slot_of(i, i)))
    }

    /// Sparse matrix entries of a basis element.
    fn entries(&self, k: &Key) -> Vec<(usize, usize, Scalar)> {
        let (i, j) = self.position(k.slot);
        if i == j {
            vec![(i, i, Scalar::one())]
        } else {
            vec![(i, j, Scalar::one()), (j, i, self.sigma.sign(&k.deg))]
        }
    }
}

impl GradedAlgebra for HermitianMatrix {
    fn name(&self) -> String {
        format!("H_{}({})", self.ell, self.torus.name())
    }

    fn rank(&self) -> usize {
        self.torus.rank()
    }

    fn variety(&self) -> Variety {
        Variety::Jordan
    }

    fn slots(&self, deg: &LatticeVector) -> Vec<u32> {
        if !self.torus.in_support(deg) {
            return Vec::new();
        }
        let sym = self.sigma.sign(deg).is_one();
        (0..self.positions.len() as u32)
            .filter(|s| {
                let (i, j) = self.positions[*s as usize];
                i != j || sym
            })
            .collect()
    }

    fn mul_basis(&self, a: &Key, b: &Key) -> Vec<(u32, Scalar)> {
        let target = &a.deg + &b.deg;
        let k = self.torus.k(&a.deg, &b.deg);
        let kr = self.torus.k(&b.deg, &a.deg);
        let mut z = vec![vec![Scalar::zero(); self.ell]; self.ell];
        let ea = self.entries(a);
        let eb = self.entries(b);
        for (i, j, ca) in &ea {
            for (j2, l, cb) in &eb {
                if j == j2 {
                    z[*i][*l] += &(&(ca * cb) * &k);
                }
            }
        }
        for (i, j, cb) in &eb {
            for (j2, l, ca) in &ea {
                if j == j2 {
                    z[*i][*l] += &(&(ca * cb) * &kr);
                }
            }
        }
        let h = half();
        let mut out = Vec::new();
        for s in self.slots(&target) {
            let (i, j) = self.positions[s as usize];
            let c = &z[i][j] * &h;
            if !c.is_zero() {
                out.push((s, c));
            }
        }
        out
    }

    fn period(&self) -> LatticeVector {
        self.torus.period()
    }

    fn unit(&self) -> Elem {
        let mut u = Elem::zero();
        for i in 0..self.ell {
            u = u.add(&self.idempotent(i));
        }
        u
    }

    /// `x^mu I` when `x^mu` is central and fixed by `sigma`.
    fn centroid_elem(&self, mu: &LatticeVector) -> Option<Elem> {
        if !self.torus.center_support(mu) || !self.sigma.sign(mu).is_one() {
            return None;
        }
        let c: Elem = (0..self.ell).map(|i| (Key::new(mu.clone(), self.slot_of(i, i)), Scalar::one())).collect();
        is_centroidal(self, &c).then_some(c)
    }

    fn trace(&self, key: &Key) -> Scalar {
        let (i, j) = self.position(key.slot);
        if key.deg.is_zero() && i == j {
            Scalar::frac(1, self.ell as i64)
        } else {
            Scalar::zero()
        }
    }

    fn describe(&self, key: &Key) -> String {
        let (i, j) = self.position(key.slot);
        if i == j {
            format!("x^{}E{}{}", key.deg, i + 1, j + 1)
        } else {
            format!("x^{}E{}{}+s", key.deg, i + 1, j + 1)
        }
    }
}

fn check_taus(n: usize, taus: &[LatticeVector]) -> Result<()> {
    if taus.is_empty() {
        return Err(Error::BadTauList("empty tau list".into()));
    }
    if !taus[0].is_zero() {
        return Err(Error::BadTauList("tau_1 must be 0".into()));
    }
    let two = LatticeVector(vec![2; n]);
    for (i, a) in taus.iter().enumerate() {
        if a.len() != n {
            return Err(Error::BadTauList(format!("tau_{} has rank {} not {n}", i + 1, a.len())));
        }
        for (j, b) in taus.iter().enumerate().skip(i + 1) {
            if a.rem_euclid(&two) == b.rem_euclid(&two) {
                return Err(Error::BadTauList(format!("tau_{} and tau_{} agree mod 2", i + 1, j + 1)));
            }
        }
    }
    Ok(())
}

fn parity_slot(taus: &[LatticeVector], d: &LatticeVector) -> Option<usize> {
    let two = LatticeVector(vec![2; d.len()]);
    let r = d.rem_euclid(&two);
    taus.iter().position(|t| t.rem_euclid(&two) == r)
}

/// `RedCliff`: triples `(a1, a2, x)` with `a_i` Laurent and `x = sum x^{l_i} v_i`,
/// product `(a1 b1 + h(x,y), a2 b2 + h(x,y), (a1 y + a2 y + b1 x + b2 x)/2)`
/// where `h(v_i, v_j) = delta_ij x^{tau_i}`.
///
/// Slots: 0 is `(x^l, 0, 0)` and 1 is `(0, x^l, 0)`, both of degree `2l`;
/// slot `2 + i` is `(0, 0, x^l v_i)` of degree `2l + tau_i`.
#[derive(Clone, Debug)]
pub struct RedCliff {
    pub n: usize,
    pub taus: Vec<LatticeVector>,
}

impl RedCliff {
    pub fn new(n: usize, taus: Vec<LatticeVector>) -> Result<RedCliff> {
        check_taus(n, &taus)?;
        Ok(RedCliff { n, taus })
    }

    pub fn idempotent(&self, i: usize) -> Elem {
        Elem::basis(Key::new(LatticeVector::zero(self.n), i as u32))
    }
}

impl GradedAlgebra for RedCliff {
    fn name(&self) -> String {
        format!("RedCliff({}, m={})", self.n, self.taus.len())
    }

    fn rank(&self) -> usize {
        self.n
    }

    fn variety(&self) -> Variety {
        Variety::Jordan
    }

    fn slots(&self, deg: &LatticeVector) -> Vec<u32> {
        match parity_slot(&self.taus, deg) {
            Some(0) => vec![0, 1, 2],
            Some(i) => vec![2 + i as u32],
            None => Vec::new(),
        }
    }

    fn mul_basis(&self, a: &Key, b: &Key) -> Vec<(u32, Scalar)> {
        match (a.slot, b.slot) {
            (0, 0) => vec![(0, Scalar::one())],
            (1, 1) => vec![(1, Scalar::one())],
            (0, 1) | (1, 0) => Vec::new(),
            (0 | 1, s) | (s, 0 | 1) => vec![(s, half())],
            (s, t) if s == t => vec![(0, Scalar::one()), (1, Scalar::one())],
            _ => Vec::new(),
        }
    }

    fn period(&self) -> LatticeVector {
        LatticeVector(vec![2; self.n])
    }

    fn unit(&self) -> Elem {
        self.idempotent(0).add(&self.idempotent(1))
    }

    /// `(x^l, x^l, 0)` in even degrees `2l`.
    fn centroid_elem(&self, mu: &LatticeVector) -> Option<Elem> {
        (parity_slot(&self.taus, mu) == Some(0))
            .then(|| Elem::basis(Key::new(mu.clone(), 0)).add(&Elem::basis(Key::new(mu.clone(), 1))))
    }

    fn trace(&self, key: &Key) -> Scalar {
        if key.deg.is_zero() && key.slot < 2 {
            half()
        } else {
            Scalar::zero()
        }
    }

    fn describe(&self, key: &Key) -> String {
        match key.slot {
            0 => format!("(x^{},0,0)", key.deg),
            1 => format!("(0,x^{},0)", key.deg),
            s => format!("(0,0,v{}@{})", s - 1, key.deg),
        }
    }
}

/// `Cliff(g) = B 1 + W` for `g(w_i, w_j) = delta_ij x^{tau_i}` on the free
/// Laurent module with basis `w_2, ..., w_m`.
///
/// Slot 0 is `x^l 1` of degree `2l`; slot `i >= 1` is `x^l w_{i+1}` of degree
/// `2l + tau_{i+1}`.
#[derive(Clone, Debug)]
pub struct CliffordForm {
    pub n: usize,
    pub taus: Vec<LatticeVector>,
}

impl CliffordForm {
    pub fn new(n: usize, taus: Vec<LatticeVector>) -> Result<CliffordForm> {
        check_taus(n, &taus)?;
        Ok(CliffordForm { n, taus })
    }

    pub fn m(&self) -> usize {
        self.taus.len()
    }

    /// `x^a w_i` (with `i >= 2`) as a basis key.
    pub fn w_key(&self, a: &LatticeVector, i: usize) -> Key {
        Key::new(&a.scaled(2) + &self.taus[i - 1], (i - 1) as u32)
    }

    /// The Laurent exponent of a basis key.
    pub fn exponent(&self, k: &Key) -> LatticeVector {
        let t = &k.deg - &self.taus[k.slot as usize];
        LatticeVector(t.0.iter().map(|x| x / 2).collect())
    }

    /// The Laurent-valued normalized trace `T(b 1 + w) = b`, as the Laurent
    /// exponent and coefficient of the slot-0 terms.
    pub fn trace_b(&self, y: &Elem) -> Vec<(LatticeVector, Scalar)> {
        y.iter().filter(|(k, _)| k.slot == 0).map(|(k, c)| (self.exponent(k), c.clone())).collect()
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        mul(self, a, b)
    }
}

impl GradedAlgebra for CliffordForm {
    fn name(&self) -> String {
        format!("Cliff(g; n={}, m={})", self.n, self.taus.len())
    }

    fn rank(&self) -> usize {
        self.n
    }

    fn variety(&self) -> Variety {
        Variety::Jordan
    }

    fn slots(&self, deg: &LatticeVector) -> Vec<u32> {
        parity_slot(&self.taus, deg).map(|i| vec![i as u32]).unwrap_or_default()
    }

    fn mul_basis(&self, a: &Key, b: &Key) -> Vec<(u32, Scalar)> {
        match (a.slot, b.slot) {
            (0, s) | (s, 0) => vec![(s, Scalar::one())],
            (s, t) if s == t => vec![(0, Scalar::one())],
            _ => Vec::new(),
        }
    }

    fn period(&self) -> LatticeVector {
        LatticeVector(vec![2; self.n])
    }

    fn unit(&self) -> Elem {
        Elem::basis(Key::new(LatticeVector::zero(self.n), 0))
    }

    fn describe(&self, key: &Key) -> String {
        let e = self.exponent(key);
        if key.slot == 0 {
            format!("x^{e}")
        } else {
            format!("x^{e}w{}", key.slot + 1)
        }
    }

    /// `x^l 1 -> x^{-l} 1` and `x^l w_i -> x^{-l-tau_i} w_i`; both send degree
    /// `d` to `-d`.
    fn pre_chevalley_key(&self, key: &Key) -> (Key, Scalar) {
        (Key::new(-&key.deg, key.slot), Scalar::one())
    }
}
