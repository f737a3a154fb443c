//! Finite-dimensional split simple Lie algebras with a marked diagonal Cartan
//! subalgebra: classical matrix algebras and user-supplied structure tables.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lattice::{root_system, LatticeVector, RootSystem};
use crate::linalg::{ScalarMatrix, Span};
use crate::scalar::Scalar;

/// A structure-constant table: basis names with roots, and brackets
/// `[x, y] = sum c_k k` listed for unordered or ordered pairs.
#[derive(Clone, Debug)]
pub struct TableSpec {
    pub kind: String,
    pub rank: usize,
    pub basis: Vec<(String, LatticeVector)>,
    pub brackets: Vec<(String, String, Vec<(String, Scalar)>)>,
    /// Optional Chevalley involution on basis elements.
    pub theta: Option<Vec<(String, Vec<(String, Scalar)>)>>,
    pub validate: bool,
}

#[derive(Clone, Debug)]
pub struct MatrixLie {
    pub label: String,
    pub names: Vec<String>,
    /// Root of each basis element, in the ambient coordinates of `root_system`.
    pub roots: Vec<LatticeVector>,
    pub root_system: RootSystem,
    structure: Vec<Vec<Vec<(usize, Scalar)>>>,
    form: Vec<Vec<Scalar>>,
    pub matrices: Option<Vec<ScalarMatrix>>,
    by_root: BTreeMap<LatticeVector, Vec<usize>>,
    theta: Option<ScalarMatrix>,
}

fn unit(n: usize, i: usize, j: usize) -> ScalarMatrix {
    let mut m = ScalarMatrix::zeros(n, n);
    m.set(i, j, Scalar::one());
    m
}

fn lin(a: &ScalarMatrix, b: &ScalarMatrix, cb: &Scalar) -> ScalarMatrix {
    let mut out = a.clone();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let v = b.get(i, j);
            if !v.is_zero() {
                out.set(i, j, a.get(i, j) + &(v * cb));
            }
        }
    }
    out
}

fn flatten(m: &ScalarMatrix) -> Vec<Scalar> {
    (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()
}

fn trace(m: &ScalarMatrix) -> Scalar {
    let mut acc = Scalar::zero();
    for i in 0..m.rows() {
        acc += m.get(i, i);
    }
    acc
}

/// The operator `u -> b(v_a, u) v_b + s b(v_b, u) v_a` for a bilinear form with
/// matrix `gram`.
fn rank_two(gram: &ScalarMatrix, a: usize, b: usize, s: i64) -> ScalarMatrix {
    let n = gram.rows();
    let mut m = ScalarMatrix::zeros(n, n);
    for u in 0..n {
        let x = gram.get(a, u);
        if !x.is_zero() {
            m.set(b, u, m.get(b, u) + x);
        }
        let y = gram.get(b, u);
        if !y.is_zero() {
            m.set(a, u, m.get(a, u) + &(y * &Scalar::from_int(s)));
        }
    }
    m
}

fn sparse_coords(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

impl MatrixLie {
    /// A classical algebra: `A` (`sl_{l+1}`), `B` (`so_{2l+1}`), `C` (`sp_{2l}`)
    /// or `D` (`so_{2l}`), with the trace form.
    pub fn builtin(kind: &str, rank: usize) -> Result<MatrixLie> {
        let rs = root_system(kind, rank)?;
        let l = rank;
        let mut names = Vec::new();
        let mut mats = Vec::new();
        let mut roots = Vec::new();
        match kind {
            "A" => {
                let n = l + 1;
                let eps = |i: usize, j: usize| {
                    let mut v = vec![0; n];
                    v[i] += 1;
                    v[j] -= 1;
                    LatticeVector(v)
                };
                let mut push = |name: String, m: ScalarMatrix, r: LatticeVector| {
                    names.push(name);
                    mats.push(m);
                    roots.push(r);
                };
                for i in 0..n {
                    for j in i + 1..n {
                        push(format!("E{}{}", i + 1, j + 1), unit(n, i, j), eps(i, j));
                    }
                }
                for i in 0..l {
                    let h = lin(&unit(n, i, i), &unit(n, i + 1, i + 1), &Scalar::from_int(-1));
                    push(format!("H{}", i + 1), h, LatticeVector::zero(n));
                }
                for i in 0..n {
                    for j in i + 1..n {
                        push(format!("E{}{}", j + 1, i + 1), unit(n, j, i), eps(j, i));
                    }
                }
                if l == 1 {
                    names = vec!["e".into(), "h".into(), "f".into()];
                }
            }
            "B" | "C" | "D" => {
                let n = if kind == "B" { 2 * l + 1 } else { 2 * l };
                let mut gram = ScalarMatrix::zeros(n, n);
                for i in 0..l {
                    gram.set(i, l + i, Scalar::one());
                    gram.set(l + i, i, Scalar::from_int(if kind == "C" { -1 } else { 1 }));
                }
                if kind == "B" {
                    gram.set(2 * l, 2 * l, Scalar::one());
                }
                let wt = |a: usize| {
                    let mut v = vec![0; l];
                    if a < l {
                        v[a] = 1;
                    } else if a < 2 * l {
                        v[a - l] = -1;
                    }
                    LatticeVector(v)
                };
                let (sign, lead) = if kind == "C" { (1, "S") } else { (-1, "D") };
                for a in 0..n {
                    let start = if kind == "C" { a } else { a + 1 };
                    for b in start..n {
                        // `D_{a,b}(u) = f(v_a,u) v_b - f(v_b,u) v_a`, `S_{a,b}` symmetric.
                        names.push(format!("{lead}{},{}", a + 1, b + 1));
                        mats.push(rank_two(&gram, a, b, sign));
                        roots.push(&wt(a) + &wt(b));
                    }
                }
            }
            _ => return Err(Error::UnsupportedType(format!("{kind}{rank}"))),
        }
        MatrixLie::from_matrices(&format!("{kind}{rank}"), names, mats, roots, rs)
    }

    /// Builds structure constants, the trace form and `theta(X) = -X^t` from a
    /// basis of matrices.
    pub fn from_matrices(
        label: &str,
        names: Vec<String>,
        mats: Vec<ScalarMatrix>,
        roots: Vec<LatticeVector>,
        rs: RootSystem,
    ) -> Result<MatrixLie> {
        let mut span = Span::new();
        for m in &mats {
            if !span.insert(&flatten(m)) {
                return Err(Error::InvalidTable(format!("{label}: dependent basis")));
            }
        }
        let express = |m: &ScalarMatrix| span.express(&flatten(m));
        let d = mats.len();
        let mut structure = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let c = lin(&mats[i].mul(&mats[j]), &mats[j].mul(&mats[i]), &Scalar::from_int(-1));
                let v = express(&c).ok_or_else(|| Error::InvalidTable(format!("{label}: bracket not closed")))?;
                structure[i][j] = sparse_coords(&v);
            }
        }
        let form = (0..d).map(|i| (0..d).map(|j| trace(&mats[i].mul(&mats[j]))).collect()).collect();
        let mut theta = Some(ScalarMatrix::zeros(d, d));
        for (j, m) in mats.iter().enumerate() {
            let t = lin(&ScalarMatrix::zeros(m.rows(), m.cols()), &m.transpose(), &Scalar::from_int(-1));
            match express(&t) {
                Some(v) => {
                    let th = theta.as_mut().expect("present");
                    for (i, c) in v.into_iter().enumerate() {
                        th.set(i, j, c);
                    }
                }
                None => {
                    theta = None;
                    break;
                }
            }
        }
        let mut out = MatrixLie {
            label: label.to_string(),
            names,
            roots,
            root_system: rs,
            structure,
            form,
            matrices: Some(mats),
            by_root: BTreeMap::new(),
            theta,
        };
        out.index_roots();
        Ok(out)
    }

    /// Builds from a structure table; the form is the Killing form.
    pub fn from_table(t: &TableSpec) -> Result<MatrixLie> {
        let rs = root_system(&t.kind, t.rank)?;
        let d = t.basis.len();
        let index: BTreeMap<&str, usize> = t.basis.iter().enumerate().map(|(i, (n, _))| (n.as_str(), i)).collect();
        if index.len() != d {
            return Err(Error::InvalidTable("repeated basis name".into()));
        }
        let look = |n: &str| index.get(n).copied().ok_or_else(|| Error::InvalidTable(format!("unknown basis name {n}")));
        for (n, r) in &t.basis {
            if r.len() != rs.ambient() || !(r.is_zero() || rs.contains(r)) {
                return Err(Error::InvalidTable(format!("{n} has invalid root {r}")));
            }
        }
        let mut table: Vec<Vec<Option<Vec<Scalar>>>> = vec![vec![None; d]; d];
        for (x, y, terms) in &t.brackets {
            let (i, j) = (look(x)?, look(y)?);
            let mut v = vec![Scalar::zero(); d];
            for (k, c) in terms {
                let k = look(k)?;
                v[k] = &v[k] + c;
            }
            let neg: Vec<Scalar> = v.iter().map(|c| -c).collect();
            for (a, b, val) in [(i, j, v), (j, i, neg)] {
                match &table[a][b] {
                    Some(old) if *old != val => {
                        return Err(Error::InvalidTable(format!("antisymmetry fails at [{},{}]", t.basis[a].0, t.basis[b].0)));
                    }
                    _ => table[a][b] = Some(val),
                }
            }
        }
        let structure: Vec<Vec<Vec<(usize, Scalar)>>> = table
            .into_iter()
            .map(|row| row.into_iter().map(|v| v.map(|v| sparse_coords(&v)).unwrap_or_default()).collect())
            .collect();
        let mut out = MatrixLie {
            label: format!("table:{}{}", t.kind, t.rank),
            names: t.basis.iter().map(|(n, _)| n.clone()).collect(),
            roots: t.basis.iter().map(|(_, r)| r.clone()).collect(),
            root_system: rs,
            structure,
            form: Vec::new(),
            matrices: None,
            by_root: BTreeMap::new(),
            theta: None,
        };
        if t.validate {
            out.validate()?;
        }
        out.form = (0..d).map(|i| (0..d).map(|j| out.killing(i, j)).collect()).collect();
        if let Some(th) = &t.theta {
            let mut m = ScalarMatrix::zeros(d, d);
            for (x, terms) in th {
                let j = look(x)?;
                for (k, c) in terms {
                    let i = look(k)?;
                    m.set(i, j, m.get(i, j) + c);
                }
            }
            out.theta = Some(m);
        }
        out.index_roots();
        Ok(out)
    }

    fn index_roots(&mut self) {
        self.by_root.clear();
        for (i, r) in self.roots.iter().enumerate() {
            self.by_root.entry(r.clone()).or_default().push(i);
        }
    }

    /// Antisymmetry, `[x,x] = 0` and Jacobi on all basis triples.
    pub fn validate(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            if !self.structure[i][i].is_empty() {
                return Err(Error::InvalidTable(format!("[{0},{0}] != 0", self.names[i])));
            }
        }
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let mut acc = vec![Scalar::zero(); d];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let inner = self.bracket_vec(&self.basis_vec(b), &self.basis_vec(c));
                        let outer = self.bracket_vec(&self.basis_vec(a), &inner);
                        for (x, y) in acc.iter_mut().zip(outer) {
                            *x += &y;
                        }
                    }
                    if acc.iter().any(|x| !x.is_zero()) {
                        return Err(Error::InvalidTable(format!(
                            "Jacobi fails at ({}, {}, {})",
                            self.names[i], self.names[j], self.names[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = Scalar::one();
        v
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.structure[i][j]
    }

    pub fn bracket_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in &self.structure[i][j] {
                    out[*k] += &(c * &ab);
                }
            }
        }
        out
    }

    pub fn form_basis(&self, i: usize, j: usize) -> &Scalar {
        &self.form[i][j]
    }

    pub fn form_vec(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let f = &self.form[i][j];
                if !f.is_zero() {
                    acc += &(f * &(a * b));
                }
            }
        }
        acc
    }

    /// The matrix of `ad x`; column `j` holds `[x, b_j]`.
    pub fn ad(&self, x: &[Scalar]) -> ScalarMatrix {
        let d = self.dim();
        let mut m = ScalarMatrix::zeros(d, d);
        for j in 0..d {
            for (i, c) in self.bracket_vec(x, &self.basis_vec(j)).into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    /// `tr(ad b_i ad b_j)`.
    pub fn killing(&self, i: usize, j: usize) -> Scalar {
        let mut acc = Scalar::zero();
        for k in 0..self.dim() {
            for (l, c) in &self.structure[j][k] {
                for (m, c2) in &self.structure[i][*l] {
                    if *m == k {
                        acc += &(c * c2);
                    }
                }
            }
        }
        acc
    }

    /// Basis indices with the given root.
    pub fn by_root(&self, root: &LatticeVector) -> &[usize] {
        self.by_root.get(root).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn cartan(&self) -> &[usize] {
        self.by_root(&self.root_system.zero())
    }

    /// Position of basis element `i` within its root space.
    pub fn local_index(&self, i: usize) -> u32 {
        self.by_root(&self.roots[i]).iter().position(|&j| j == i).expect("indexed") as u32
    }

    /// `theta(X) = -X^t` as a matrix on basis coordinates.
    pub fn theta(&self) -> Result<&ScalarMatrix> {
        self.theta.as_ref().ok_or(Error::NotTransposeClosed)
    }
}
