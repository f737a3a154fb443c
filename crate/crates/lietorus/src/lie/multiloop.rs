//! Multi-loop algebras `M(g, σ) = ⊕ g^{λ̄} ⊗ z^λ`, graded by the weights of an
//! ad-diagonalizable subalgebra `h'` of the fixed points of `σ`.
//!
//! The `Λ`-grading is re-based so that every simple root has a degree-zero
//! component: with `φ(α_i)` the first residue carrying `α_i`, extended
//! linearly, an element `x ⊗ z^λ` of root `α` gets the coordinates of
//! `λ - φ(α)` in a basis of the lattice spanned by all such differences and
//! the `m_j e_j`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::{residue_box, LatticeVector, RootSystem};
use crate::linalg::{char_poly, hnf, lattice_coords, rational_roots, ScalarMatrix, Span};
use crate::scalar::{Rational, Scalar};

use super::{Atom, LieElem, LieTorus, MatrixLie};

type Weight = Vec<Rational>;

pub struct MultiLoop {
    pub g: Arc<MatrixLie>,
    pub sigmas: Vec<ScalarMatrix>,
    pub periods: LatticeVector,
    pub hprime: Vec<Vec<Scalar>>,
    rs: RootSystem,
    /// `h'`-weight of each root, keyed by its simple-root coordinates.
    weights: BTreeMap<LatticeVector, Weight>,
    phi: Vec<LatticeVector>,
    /// Row basis of the re-based degree lattice inside `Z^ν`.
    lattice: Vec<Vec<i128>>,
    comps: BTreeMap<(LatticeVector, LatticeVector), Vec<Vec<Scalar>>>,
    residues: BTreeMap<LatticeVector, (Span, Vec<(LatticeVector, u32)>)>,
}

impl std::fmt::Debug for MultiLoop {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

fn is_automorphism(g: &MatrixLie, m: &ScalarMatrix) -> bool {
    let n = g.dim();
    (0..n).all(|i| {
        (i..n).all(|j| {
            let lhs = m.apply(&g.bracket_vec(&g.basis_vec(i), &g.basis_vec(j)));
            lhs == g.bracket_vec(&m.column(i), &m.column(j))
        })
    })
}

fn independent(vectors: impl IntoIterator<Item = Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    let mut span = Span::new();
    vectors.into_iter().filter(|v| span.insert(v)).collect()
}

fn rational_vec(v: &[Scalar], what: &str) -> Result<Weight> {
    v.iter()
        .map(|x| x.to_rational().ok_or_else(|| Error::NotDiagonalizable(format!("{what} {x} is not rational"))))
        .collect()
}

/// Eigenvalues of a diagonalizable matrix with rational spectrum.
fn rational_spectrum(m: &ScalarMatrix) -> Result<Vec<Rational>> {
    let c = rational_vec(&char_poly(m), "characteristic coefficient")?;
    Ok(rational_roots(&c))
}

/// Joint eigenspaces of commuting matrices with rational eigenvalues.
fn joint_eigenspaces(mats: &[ScalarMatrix], dim: usize) -> Result<Vec<(Weight, Vec<Vec<Scalar>>)>> {
    let mut parts: Vec<(Weight, Vec<Vec<Scalar>>)> =
        vec![(Vec::new(), (0..dim).map(|i| ScalarMatrix::identity(dim).column(i)).collect())];
    for m in mats {
        let spectrum = rational_spectrum(m)?;
        let mut next = Vec::new();
        for (w, basis) in &parts {
            let v = ScalarMatrix::from_columns(basis, dim);
            for r in &spectrum {
                let shifted = m.shift(&Scalar::from_rational(*r)).mul(&v);
                let sub: Vec<Vec<Scalar>> = shifted.kernel_basis().iter().map(|c| v.apply(c)).collect();
                if !sub.is_empty() {
                    let mut w2 = w.clone();
                    w2.push(*r);
                    next.push((w2, sub));
                }
            }
        }
        parts = next;
    }
    let total: usize = parts.iter().map(|(_, b)| b.len()).sum();
    if total != dim {
        return Err(Error::NotDiagonalizable(format!("eigenspaces span {total} of {dim} dimensions")));
    }
    Ok(parts)
}

fn lex_positive(w: &Weight) -> bool {
    w.iter().find(|x| !x.is_zero()).is_some_and(|x| *x > Rational::zero())
}

fn add_w(a: &Weight, b: &Weight) -> Weight {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl MultiLoop {
    pub fn new(
        g: Arc<MatrixLie>,
        sigmas: Vec<ScalarMatrix>,
        periods: Vec<i64>,
        hprime: Vec<Vec<Scalar>>,
    ) -> Result<MultiLoop> {
        let n = g.dim();
        if sigmas.len() != periods.len() || sigmas.is_empty() {
            return Err(Error::Spec("one period per automorphism is required".into()));
        }
        if sigmas.iter().any(|s| s.rows() != n || s.cols() != n) || hprime.iter().any(|h| h.len() != n) {
            return Err(Error::RankMismatch { expected: n, got: sigmas[0].rows() });
        }
        for (j, (s, m)) in sigmas.iter().zip(&periods).enumerate() {
            if !is_automorphism(&g, s) {
                return Err(Error::HypothesisViolated(format!("σ_{} is not an automorphism", j + 1)));
            }
            let mut p = ScalarMatrix::identity(n);
            for _ in 0..*m {
                p = p.mul(s);
            }
            if *m < 1 || p != ScalarMatrix::identity(n) {
                return Err(Error::HypothesisViolated(format!("σ_{} does not have period {m}", j + 1)));
            }
        }
        for a in &sigmas {
            for b in &sigmas {
                if a.mul(b) != b.mul(a) {
                    return Err(Error::NonCommutingAutomorphisms);
                }
            }
        }
        for h in &hprime {
            if sigmas.iter().any(|s| s.apply(h) != *h) {
                return Err(Error::HypothesisViolated("h' is not fixed by σ".into()));
            }
            if hprime.iter().any(|k| g.bracket_vec(h, k).iter().any(|x| !x.is_zero())) {
                return Err(Error::HypothesisViolated("h' is not abelian".into()));
            }
        }
        let ads: Vec<ScalarMatrix> = hprime.iter().map(|h| g.ad(h)).collect();
        let spaces = joint_eigenspaces(&ads, n)?;
        let periods = LatticeVector(periods);
        let mut ml = MultiLoop {
            g,
            sigmas,
            periods,
            hprime,
            rs: RootSystem { label: String::new(), rank: 0, roots: Vec::new(), gram: Vec::new() },
            weights: BTreeMap::new(),
            phi: Vec::new(),
            lattice: Vec::new(),
            comps: BTreeMap::new(),
            residues: BTreeMap::new(),
        };
        ml.build_roots(&spaces)?;
        ml.build_components(&spaces)?;
        Ok(ml)
    }

    fn build_roots(&mut self, spaces: &[(Weight, Vec<Vec<Scalar>>)]) -> Result<()> {
        let nonzero: Vec<&Weight> = spaces.iter().map(|(w, _)| w).filter(|w| w.iter().any(|x| !x.is_zero())).collect();
        let positive: Vec<&Weight> = nonzero.iter().copied().filter(|w| lex_positive(w)).collect();
        let simple: Vec<Weight> = positive
            .iter()
            .filter(|w| !positive.iter().any(|p| positive.iter().any(|q| add_w(p, q) == ***w)))
            .map(|w| (*w).clone())
            .collect();
        let r = self.hprime.len();
        let s = ScalarMatrix::from_columns(
            &simple.iter().map(|w| w.iter().map(|x| Scalar::from_rational(*x)).collect()).collect::<Vec<_>>(),
            r,
        );
        let mut roots = Vec::new();
        for w in &nonzero {
            let target: Vec<Scalar> = w.iter().map(|x| Scalar::from_rational(*x)).collect();
            let c = s.solve(&target).map_err(|_| Error::InvalidTable("weights are not spanned by simple roots".into()))?;
            let coords: Vec<i64> = rational_vec(&c, "root coordinate")?
                .iter()
                .map(|x| if x.is_integer() { Ok(*x.numer() as i64) } else { Err(Error::InvalidTable(format!("non-integral root coordinate {x}"))) })
                .collect::<Result<_>>()?;
            let root = LatticeVector(coords);
            self.weights.insert(root.clone(), (*w).clone());
            roots.push(root);
        }
        self.weights.insert(LatticeVector::zero(simple.len()), vec![Rational::zero(); r]);
        let k = ScalarMatrix::from_rows(
            self.hprime.iter().map(|a| self.hprime.iter().map(|b| self.g.form_vec(a, b)).collect()).collect(),
        );
        let dual: Vec<Vec<Scalar>> = simple
            .iter()
            .map(|w| k.solve(&w.iter().map(|x| Scalar::from_rational(*x)).collect::<Vec<_>>()))
            .collect::<Result<_>>()
            .map_err(|_| Error::HypothesisViolated("form is degenerate on h'".into()))?;
        let mut gram = Vec::new();
        for wi in &simple {
            let row: Vec<Scalar> = dual
                .iter()
                .map(|d| d.iter().zip(wi).fold(Scalar::zero(), |acc, (x, y)| &acc + &(x * &Scalar::from_rational(*y))))
                .collect();
            gram.push(rational_vec(&row, "root inner product")?);
        }
        let has_double = roots.iter().any(|a| roots.contains(&a.scaled(2)));
        let label = format!("{}{}", if has_double { "BC" } else { "Δ'" }, simple.len());
        self.rs = RootSystem::from_roots(&label, simple.len(), roots, gram)?;
        Ok(())
    }

    fn build_components(&mut self, spaces: &[(Weight, Vec<Vec<Scalar>>)]) -> Result<()> {
        let n = self.g.dim();
        let residues = residue_box(&self.periods);
        let projections: Vec<ScalarMatrix> = residues.iter().map(|r| self.projection(r)).collect::<Result<_>>()?;
        let by_weight: BTreeMap<&Weight, LatticeVector> = self.weights.iter().map(|(k, w)| (w, k.clone())).collect();
        for (w, basis) in spaces {
            let root = by_weight[w].clone();
            for (r, p) in residues.iter().zip(&projections) {
                let comp = independent(basis.iter().map(|v| p.apply(v)));
                if !comp.is_empty() {
                    self.comps.insert((root.clone(), r.clone()), comp);
                }
            }
        }
        let dim: usize = self.comps.values().map(Vec::len).sum();
        if dim != n {
            return Err(Error::NotDiagonalizable("σ-eigenspaces do not split the h'-weight spaces".into()));
        }
        let zero = self.rs.zero();
        for i in 0..self.rs.rank {
            let mut a = zero.clone();
            a.0[i] = 1;
            let r = residues
                .iter()
                .find(|r| self.comps.contains_key(&(a.clone(), (*r).clone())))
                .ok_or_else(|| Error::InvalidTable(format!("simple root {a} has no component")))?;
            self.phi.push(r.clone());
        }
        let nu = self.periods.len();
        let mut rows: Vec<Vec<i128>> = (0..nu)
            .map(|j| (0..nu).map(|k| if j == k { i128::from(self.periods.0[j]) } else { 0 }).collect())
            .collect();
        for (root, r) in self.comps.keys() {
            rows.push((r - &self.phi_of(root)).as_i128());
        }
        self.lattice = hnf(&rows);
        for ((root, r), comp) in &self.comps {
            let entry = self.residues.entry(r.clone()).or_insert_with(|| (Span::new(), Vec::new()));
            for (i, v) in comp.iter().enumerate() {
                entry.0.insert(v);
                entry.1.push((root.clone(), i as u32));
            }
        }
        Ok(())
    }

    /// `π_r = Π_j (1/m_j) Σ_k ω_j^{-r_j k} σ_j^k`, with `ω_j = e^{2πi/m_j}`.
    pub fn projection(&self, r: &LatticeVector) -> Result<ScalarMatrix> {
        let n = self.g.dim();
        let mut out = ScalarMatrix::identity(n);
        for (j, s) in self.sigmas.iter().enumerate() {
            let m = self.periods.0[j];
            let mut acc = ScalarMatrix::zeros(n, n);
            let mut power = ScalarMatrix::identity(n);
            for k in 0..m {
                let w = Scalar::root_of_unity((-r.0[j] * k).rem_euclid(m), m)?;
                acc = acc.add(&power.scale(&w));
                power = power.mul(s);
            }
            out = out.mul(&acc.scale(&Scalar::frac(1, m)));
        }
        Ok(out)
    }

    pub fn residue_of(&self, lambda: &LatticeVector) -> LatticeVector {
        lambda.rem_euclid(&self.periods)
    }

    /// Basis of `g_α^{r}` for a root in simple-root coordinates.
    pub fn component(&self, root: &LatticeVector, r: &LatticeVector) -> &[Vec<Scalar>] {
        self.comps.get(&(root.clone(), r.clone())).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Basis of `g^{r}`.
    pub fn residue_space(&self, r: &LatticeVector) -> Vec<Vec<Scalar>> {
        self.comps.iter().filter(|((_, s), _)| s == r).flat_map(|(_, c)| c.iter().cloned()).collect()
    }

    pub fn weight(&self, root: &LatticeVector) -> Option<&[Rational]> {
        self.weights.get(root).map(Vec::as_slice)
    }

    fn phi_of(&self, root: &LatticeVector) -> LatticeVector {
        let mut out = LatticeVector::zero(self.periods.len());
        for (c, p) in root.0.iter().zip(&self.phi) {
            out = &out + &p.scaled(*c);
        }
        out
    }

    /// The `z`-exponent of an atom.
    pub fn exponent(&self, a: &Atom) -> LatticeVector {
        let mut out = self.phi_of(&a.root);
        for (c, row) in a.deg.0.iter().zip(&self.lattice) {
            let row = LatticeVector(row.iter().map(|x| *x as i64).collect());
            out = &out + &row.scaled(*c);
        }
        out
    }

    /// The degree of `x ⊗ z^λ` for `x` of the given root.
    pub fn degree(&self, root: &LatticeVector, lambda: &LatticeVector) -> LatticeVector {
        let c = lattice_coords(&self.lattice, &(lambda - &self.phi_of(root)).as_i128()).expect("exponent lies in the degree lattice");
        LatticeVector(c.into_iter().map(|x| x as i64).collect())
    }

    /// The vector of `g` underlying an atom, and its `z`-exponent.
    pub fn element(&self, a: &Atom) -> (Vec<Scalar>, LatticeVector) {
        let lambda = self.exponent(a);
        let v = self.component(&a.root, &self.residue_of(&lambda))[a.idx as usize].clone();
        (v, lambda)
    }

    /// `x ⊗ z^λ` in atoms, for `x` in `g^{λ̄}`.
    pub fn atoms_of(&self, x: &[Scalar], lambda: &LatticeVector) -> Result<LieElem> {
        if x.iter().all(Scalar::is_zero) {
            return Ok(LieElem::zero());
        }
        let r = self.residue_of(lambda);
        let (span, labels) =
            self.residues.get(&r).ok_or_else(|| Error::HypothesisViolated(format!("g^{r} is zero")))?;
        let coords = span.express(x).ok_or_else(|| Error::HypothesisViolated(format!("vector is not in g^{r}")))?;
        Ok(coords
            .into_iter()
            .zip(labels)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, (root, i))| (Atom::new(root.clone(), self.degree(root, lambda), *i), c))
            .collect())
    }

    /// Whether `ψ(g^{r}) ⊆ g^{-r}` for every residue `r`.
    pub fn reverses_residues(&self, psi: &ScalarMatrix) -> Result<bool> {
        for r in residue_box(&self.periods) {
            let target = self.projection(&self.residue_of(&-&r))?;
            for v in self.residue_space(&r) {
                let img = psi.apply(&v);
                if target.apply(&img) != img {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Checks the hypotheses under which `x ⊗ z^λ ↦ ψτ(x) ⊗ z^{-λ}` is a
    /// Chevalley involution.
    pub fn check_chevalley_data(&self, tau: &ScalarMatrix, psi: &ScalarMatrix) -> Result<()> {
        let n = self.g.dim();
        let bad = |m: &str| Err(Error::HypothesisViolated(m.to_string()));
        if !is_automorphism(&self.g, tau) {
            return bad("τ is not an automorphism");
        }
        if tau.mul(tau) != ScalarMatrix::identity(n) {
            return bad("τ is not an involution");
        }
        if self.sigmas.iter().any(|s| s.mul(tau) != tau.mul(s)) {
            return bad("τ does not commute with σ");
        }
        let neg = Scalar::from_int(-1);
        if self.hprime.iter().any(|h| tau.apply(h) != h.iter().map(|x| x * &neg).collect::<Vec<_>>()) {
            return bad("τ(h') ≠ -h'");
        }
        if !is_automorphism(&self.g, psi) {
            return bad("ψ is not an automorphism");
        }
        if self.hprime.iter().any(|h| psi.apply(h) != *h) {
            return bad("ψ is not the identity on h'");
        }
        if !self.reverses_residues(psi)? {
            return bad("ψ(g^λ̄) is not contained in g^{-λ̄}");
        }
        Ok(())
    }

    /// `g = sl_2`, `σ: e ↔ -f, h ↦ -h`, `h' = i(e-f)/2`; also returns
    /// `τ: e ↦ -e, f ↦ -f, h ↦ h`, which sends `y = e+f-ih` to `-z`.
    pub fn sl2_example() -> Result<(MultiLoop, ScalarMatrix)> {
        let g = Arc::new(MatrixLie::builtin("A", 1)?);
        let sigma = ScalarMatrix::from_ints(&[vec![0, 0, -1], vec![0, -1, 0], vec![-1, 0, 0]]);
        let i = Scalar::root_of_unity(1, 4)?;
        let half_i = &i * &Scalar::frac(1, 2);
        let hp = vec![half_i.clone(), Scalar::zero(), -&half_i];
        let tau = ScalarMatrix::from_ints(&[vec![-1, 0, 0], vec![0, 1, 0], vec![0, 0, -1]]);
        Ok((MultiLoop::new(g, vec![sigma], vec![2], vec![hp])?, tau))
    }
}

/// The matrix of `Ad(P): X ↦ P X P^{-1}` on the basis of a matrix Lie algebra.
pub fn adjoint_action(g: &MatrixLie, p: &ScalarMatrix, p_inv: &ScalarMatrix) -> Result<ScalarMatrix> {
    let mats = g.matrices.as_ref().ok_or(Error::NotTransposeClosed)?;
    let flat = |m: &ScalarMatrix| (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect::<Vec<_>>();
    let mut span = Span::new();
    for m in mats {
        span.insert(&flat(m));
    }
    let cols: Vec<Vec<Scalar>> = mats
        .iter()
        .map(|m| span.express(&flat(&p.mul(m).mul(p_inv))).ok_or_else(|| Error::HypothesisViolated("Ad(P) leaves g".into())))
        .collect::<Result<_>>()?;
    Ok(ScalarMatrix::from_columns(&cols, g.dim()))
}

impl LieTorus for MultiLoop {
    fn name(&self) -> String {
        format!("MultiLoop({}, m={:?})", self.g.label, self.periods.0)
    }

    fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    fn nullity(&self) -> usize {
        self.periods.len()
    }

    fn dim(&self, root: &LatticeVector, deg: &LatticeVector) -> usize {
        if !self.weights.contains_key(root) {
            return 0;
        }
        let a = Atom::new(root.clone(), deg.clone(), 0);
        self.component(root, &self.residue_of(&self.exponent(&a))).len()
    }

    fn bracket_atoms(&self, a: &Atom, b: &Atom) -> LieElem {
        let (x, la) = self.element(a);
        let (y, lb) = self.element(b);
        self.atoms_of(&self.g.bracket_vec(&x, &y), &(&la + &lb)).expect("bracket stays in the loop algebra")
    }

    fn form_atoms(&self, a: &Atom, b: &Atom) -> Scalar {
        if !(&a.deg + &b.deg).is_zero() || !(&a.root + &b.root).is_zero() {
            return Scalar::zero();
        }
        let (x, _) = self.element(a);
        let (y, _) = self.element(b);
        self.g.form_vec(&x, &y)
    }

    fn describe(&self, a: &Atom) -> String {
        let (x, lambda) = self.element(a);
        let terms: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c}){}", self.g.names[i]))
            .collect();
        format!("[{}]⊗z^{}", terms.join("+"), lambda)
    }

    fn in_centroid_support(&self, mu: &LatticeVector) -> bool {
        if mu.len() != self.nullity() {
            return false;
        }
        let a = Atom::new(self.rs.zero(), mu.clone(), 0);
        self.residue_of(&self.exponent(&a)).is_zero()
    }

    fn centroid_atom(&self, mu: &LatticeVector, a: &Atom) -> LieElem {
        LieElem::basis(Atom::new(a.root.clone(), &a.deg + mu, a.idx))
    }
}
