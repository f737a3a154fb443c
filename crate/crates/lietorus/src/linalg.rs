//! Exact linear algebra over cyclotomic scalars and integer lattices.

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// Dense matrix of scalars in row-major order.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ScalarMatrix {
    pub fn zeros(rows: usize, cols: usize) -> ScalarMatrix {
        ScalarMatrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> ScalarMatrix {
        let mut m = ScalarMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> ScalarMatrix {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        ScalarMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> ScalarMatrix {
        ScalarMatrix::from_rows(rows.iter().map(|r| r.iter().map(|x| Scalar::from_int(*x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> ScalarMatrix {
        let mut t = ScalarMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = ScalarMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        ScalarMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> ScalarMatrix {
        let data = self.data.iter().map(|a| a * c).collect();
        ScalarMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// `self - c I` for a square matrix.
    pub fn shift(&self, c: &Scalar) -> ScalarMatrix {
        self.add(&ScalarMatrix::identity(self.rows).scale(&-c))
    }

    pub fn from_columns(cols: &[Vec<Scalar>], rows: usize) -> ScalarMatrix {
        let mut m = ScalarMatrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(Scalar::zero(), |acc, i| &acc + self.get(i, i))
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (ScalarMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let rv = m.get(r, j);
                    if rv.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&f * rv);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Kernel basis: one vector per free column, with a 1 in that column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, free);
            }
            out.push(v);
        }
        out
    }

    /// One solution of `self * x = b`.
    pub fn solve(&self, b: &[Scalar]) -> Result<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = ScalarMatrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(Error::Inconsistent);
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Ok(x)
    }
}

/// Incrementally maintained row-echelon basis of a subspace of `K^d`, with the
/// expression of every stored row in terms of the accepted input vectors.
#[derive(Clone, Debug, Default)]
pub struct Span {
    rows: Vec<(usize, Vec<Scalar>, Vec<Scalar>)>,
    accepted: usize,
}

impl Span {
    pub fn new() -> Span {
        Span::default()
    }

    pub fn dim(&self) -> usize {
        self.accepted
    }

    /// Reduces `v` against the basis; returns the residue and the combination
    /// of accepted inputs that was subtracted.
    fn reduce(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut v = v.to_vec();
        let mut comb = vec![Scalar::zero(); self.accepted];
        for (p, row, rc) in &self.rows {
            if *p >= v.len() {
                continue;
            }
            let f = v[*p].clone();
            if f.is_zero() {
                continue;
            }
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    v[j] = &v[j] - &(&f * x);
                }
            }
            for (j, x) in rc.iter().enumerate() {
                if !x.is_zero() {
                    comb[j] = &comb[j] + &(&f * x);
                }
            }
        }
        (v, comb)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).0.iter().all(Scalar::is_zero)
    }

    /// Inserts `v`; returns true if it was independent of the current span.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let (mut r, comb) = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero pivot");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        // row = (v - comb) * inv, expressed in accepted inputs
        let mut rc: Vec<Scalar> = comb.iter().map(|c| -(c * &inv)).collect();
        rc.push(inv);
        for (_, _, other) in self.rows.iter_mut() {
            other.push(Scalar::zero());
        }
        self.rows.push((p, r, rc));
        self.accepted += 1;
        true
    }

    /// Coefficients of `v` in terms of the accepted inputs, if `v` lies in the
    /// span.
    pub fn express(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let (r, comb) = self.reduce(v);
        if r.iter().all(Scalar::is_zero) {
            Some(comb)
        } else {
            None
        }
    }
}

/// Rank of a list of vectors.
pub fn rank_of(vectors: &[Vec<Scalar>]) -> usize {
    let mut s = Span::new();
    vectors.iter().filter(|v| s.insert(v)).count()
}

/// Expands a scalar matrix over the rational power basis of a common
/// conductor, returning integer rows with denominators cleared.
fn integer_rows(m: &ScalarMatrix) -> Vec<Vec<i128>> {
    let mut cond = 1u32;
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            cond = cond.lcm(&m.get(i, j).conductor());
        }
    }
    let mut out = Vec::new();
    for i in 0..m.rows() {
        let expanded: Vec<Vec<Rational>> = (0..m.cols()).map(|j| m.get(i, j).coeffs_at(cond)).collect();
        let phi = expanded.first().map(|e| e.len()).unwrap_or(0);
        for t in 0..phi {
            let row: Vec<Rational> = expanded.iter().map(|e| e[t]).collect();
            let den = row.iter().fold(1i128, |acc, r| acc.lcm(r.denom()));
            let ints: Vec<i128> = row.iter().map(|r| r.numer() * (den / r.denom())).collect();
            if ints.iter().any(|x| *x != 0) {
                out.push(ints);
            }
        }
    }
    out
}

/// Hermite normal form (row style) of the lattice generated by `rows`;
/// returns the nonzero rows, pivots positive, entries above pivots reduced.
pub fn hnf(rows: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let Some(n) = rows.first().map(|r| r.len()) else {
        return Vec::new();
    };
    let mut m: Vec<Vec<i128>> = rows.iter().filter(|r| r.iter().any(|x| *x != 0)).cloned().collect();
    let mut out: Vec<Vec<i128>> = Vec::new();
    for c in 0..n {
        loop {
            let nz: Vec<usize> = (0..m.len()).filter(|&i| m[i][c] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let best = *nz.iter().min_by_key(|&&i| m[i][c].abs()).expect("nonempty");
            let piv = m[best].clone();
            for &i in &nz {
                if i == best {
                    continue;
                }
                let q = m[i][c].div_euclid(piv[c]);
                for j in 0..n {
                    m[i][j] -= q * piv[j];
                }
            }
        }
        if let Some(i) = (0..m.len()).find(|&i| m[i][c] != 0) {
            let mut row = m.remove(i);
            if row[c] < 0 {
                row.iter_mut().for_each(|x| *x = -*x);
            }
            for prev in out.iter_mut() {
                let q = prev[c].div_euclid(row[c]);
                if q != 0 {
                    for j in 0..n {
                        prev[j] -= q * row[j];
                    }
                }
            }
            out.push(row);
        }
        m.retain(|r| r.iter().any(|x| *x != 0));
    }
    out
}

/// Coordinates of `v` with respect to an HNF basis, if `v` lies in the lattice.
pub fn lattice_coords(basis: &[Vec<i128>], v: &[i128]) -> Option<Vec<i128>> {
    let mut v = v.to_vec();
    let mut coords = Vec::with_capacity(basis.len());
    for row in basis {
        let p = row.iter().position(|x| *x != 0)?;
        if v[..p].iter().any(|x| *x != 0) {
            return None;
        }
        if v[p] % row[p] != 0 {
            return None;
        }
        let q = v[p] / row[p];
        for j in 0..v.len() {
            v[j] -= q * row[j];
        }
        coords.push(q);
    }
    if v.iter().all(|x| *x == 0) {
        Some(coords)
    } else {
        None
    }
}

/// A `Z`-basis of `{x in Z^n : M x = 0}`, in Hermite normal form.
pub fn integer_kernel(m: &ScalarMatrix) -> Vec<Vec<i64>> {
    let n = m.cols();
    let a = integer_rows(m);
    // column reduction B = A U with U unimodular; kernel = trailing columns of U
    let mut b = a.clone();
    let mut u: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    let col_op = |mat: &mut Vec<Vec<i128>>, dst: usize, src: usize, q: i128| {
        for row in mat.iter_mut() {
            row[dst] -= q * row[src];
        }
    };
    let swap = |mat: &mut Vec<Vec<i128>>, x: usize, y: usize| {
        for row in mat.iter_mut() {
            row.swap(x, y);
        }
    };
    let mut p = 0;
    for r in 0..b.len() {
        if p == n {
            break;
        }
        loop {
            let nz: Vec<usize> = (p..n).filter(|&j| b[r][j] != 0).collect();
            if nz.is_empty() {
                break;
            }
            let best = *nz.iter().min_by_key(|&&j| b[r][j].abs()).expect("nonempty");
            if best != p {
                swap(&mut b, best, p);
                swap(&mut u, best, p);
            }
            if nz.len() == 1 {
                break;
            }
            for j in p + 1..n {
                if b[r][j] != 0 {
                    let q = b[r][j].div_euclid(b[r][p]);
                    col_op(&mut b, j, p, q);
                    col_op(&mut u, j, p, q);
                }
            }
        }
        if b[r][p] != 0 {
            p += 1;
        }
    }
    let kernel: Vec<Vec<i128>> = (p..n).map(|j| u.iter().map(|row| row[j]).collect()).collect();
    hnf(&kernel)
        .into_iter()
        .map(|r| r.into_iter().map(|x| i64::try_from(x).expect("kernel entry overflow")).collect())
        .collect()
}

/// Rank over `Q` of an integer matrix given by rows.
pub fn integer_rank(rows: &[Vec<i128>]) -> usize {
    hnf(rows).len()
}

/// Determinant of a square integer HNF basis (product of pivots).
pub fn hnf_index(basis: &[Vec<i128>]) -> i128 {
    basis
        .iter()
        .map(|r| *r.iter().find(|x| **x != 0).expect("nonzero row"))
        .product::<i128>()
        .abs()
}

/// Coefficients `c_0, ..., c_n` of the characteristic polynomial
/// `det(t I - M) = sum c_k t^k`, by the Faddeev-LeVerrier recursion.
pub fn char_poly(m: &ScalarMatrix) -> Vec<Scalar> {
    let n = m.rows();
    let mut c = vec![Scalar::zero(); n + 1];
    c[n] = Scalar::one();
    let mut mk = ScalarMatrix::zeros(n, n);
    for k in 1..=n {
        mk = m.mul(&mk).add(&ScalarMatrix::identity(n).scale(&c[n + 1 - k]));
        let t = m.mul(&mk).trace();
        c[n - k] = -(&t * &Scalar::frac(1, k as i64));
    }
    c
}

fn divisors(n: i128) -> Vec<i128> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            out.push(n / d);
        }
        d += 1;
    }
    out
}

/// The distinct rational roots of `sum c_k t^k`, sorted.
pub fn rational_roots(c: &[Rational]) -> Vec<Rational> {
    let lcm = c.iter().fold(1i128, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i128> = c.iter().map(|x| (x * Rational::from_integer(lcm)).to_integer()).collect();
    let Some(low) = ints.iter().position(|x| *x != 0) else {
        return Vec::new();
    };
    let high = ints.iter().rposition(|x| *x != 0).expect("nonzero polynomial");
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Rational::zero());
    }
    let eval = |r: &Rational| {
        ints[low..=high]
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, a| acc * r + Rational::from_integer(*a))
    };
    for p in divisors(ints[low]) {
        for q in divisors(ints[high]) {
            for s in [1, -1] {
                let r = Rational::new(s * p, q);
                if eval(&r).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: i64, n: i64) -> Scalar {
        Scalar::root_of_unity(k, n).unwrap()
    }

    #[test]
    fn rank_and_kernel_of_ones() {
        let m = ScalarMatrix::from_ints(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![Scalar::from_int(-1), Scalar::one()]]);
    }

    #[test]
    fn cyclotomic_rank_one() {
        let m = ScalarMatrix::from_rows(vec![vec![Scalar::one(), z(1, 3)], vec![z(2, 3), Scalar::one()]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn solve_and_inconsistent() {
        let m = ScalarMatrix::from_ints(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(m.solve(&[Scalar::from_int(1), Scalar::from_int(2)]), Err(Error::Inconsistent));
        let x = m.solve(&[Scalar::from_int(3), Scalar::from_int(3)]).unwrap();
        assert_eq!(m.apply(&x), vec![Scalar::from_int(3), Scalar::from_int(3)]);
    }

    #[test]
    fn integer_kernel_examples() {
        let m = ScalarMatrix::from_rows(vec![vec![Scalar::one(), z(1, 3)]]);
        assert!(integer_kernel(&m).is_empty());
        let m = ScalarMatrix::from_ints(&[vec![1, 0]]);
        assert_eq!(integer_kernel(&m), vec![vec![0, 1]]);
        let m = ScalarMatrix::from_ints(&[vec![2, 4]]);
        assert_eq!(integer_kernel(&m), vec![vec![2, -1]]);
    }

    #[test]
    fn span_expresses_combinations() {
        let mut s = Span::new();
        let a = vec![Scalar::one(), Scalar::from_int(2), Scalar::zero()];
        let b = vec![Scalar::zero(), Scalar::one(), z(1, 4)];
        assert!(s.insert(&a));
        assert!(s.insert(&b));
        let v: Vec<Scalar> = a.iter().zip(&b).map(|(x, y)| x.scale(&Rational::from_integer(3)) - y * &z(1, 3)).collect();
        assert!(!s.insert(&v));
        let c = s.express(&v).unwrap();
        assert_eq!(c, vec![Scalar::from_int(3), -z(1, 3)]);
    }

    #[test]
    fn hnf_and_coords() {
        let b = hnf(&[vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(b, vec![vec![1, 1], vec![0, 2]]);
        assert_eq!(lattice_coords(&b, &[3, 5]), Some(vec![3, 1]));
        assert_eq!(lattice_coords(&b, &[1, 0]), None);
        assert_eq!(hnf_index(&b), 2);
    }
}
