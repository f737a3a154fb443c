//! Degree lattices `Z^n`, degree windows, finite root systems, group
//! homomorphisms `Z^n -> K` and semilattice data.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{rdiv, rmul, radd, Rational, Scalar};

/// A vector of `Z^n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct LatticeVector(pub Vec<i64>);

impl LatticeVector {
    pub fn zero(n: usize) -> LatticeVector {
        LatticeVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> LatticeVector {
        let mut v = vec![0; n];
        v[i] = 1;
        LatticeVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| *x == 0)
    }

    pub fn scaled(&self, k: i64) -> LatticeVector {
        LatticeVector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn dot(&self, other: &LatticeVector) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Componentwise representative in `[0, p_i)`.
    pub fn rem_euclid(&self, periods: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&periods.0).map(|(a, p)| a.rem_euclid(*p)).collect())
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &LatticeVector) -> LatticeVector {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        LatticeVector(v)
    }

    pub fn as_i128(&self) -> Vec<i128> {
        self.0.iter().map(|x| *x as i128).collect()
    }
}

impl From<Vec<i64>> for LatticeVector {
    fn from(v: Vec<i64>) -> LatticeVector {
        LatticeVector(v)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&LatticeVector> for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        assert_eq!(self.len(), rhs.len(), "lattice rank mismatch");
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&LatticeVector> for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        assert_eq!(self.len(), rhs.len(), "lattice rank mismatch");
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| -a).collect())
    }
}

impl Neg for LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        -&self
    }
}

/// The box `[-R, R]^n`, optionally with per-axis radii.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeWindow {
    pub radius: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub per_axis: Option<Vec<i64>>,
}

impl DegreeWindow {
    pub fn new(radius: i64) -> DegreeWindow {
        DegreeWindow { radius, per_axis: None }
    }

    fn radius_of(&self, axis: usize) -> i64 {
        self.per_axis.as_ref().and_then(|r| r.get(axis).copied()).unwrap_or(self.radius)
    }

    pub fn contains(&self, v: &LatticeVector) -> bool {
        v.0.iter().enumerate().all(|(i, x)| x.abs() <= self.radius_of(i))
    }

    /// Lexicographic enumeration of the box.
    pub fn enumerate(&self, n: usize) -> Vec<LatticeVector> {
        let bounds: Vec<(i64, i64)> = (0..n).map(|i| (-self.radius_of(i), self.radius_of(i))).collect();
        box_enum(&bounds)
    }
}

pub fn window_enum(w: &DegreeWindow, n: usize) -> Vec<LatticeVector> {
    w.enumerate(n)
}

/// Lexicographic enumeration of the integer box with inclusive bounds.
pub fn box_enum(bounds: &[(i64, i64)]) -> Vec<LatticeVector> {
    let mut out = vec![Vec::new()];
    for &(lo, hi) in bounds {
        let mut next = Vec::new();
        for prefix in &out {
            for x in lo..=hi {
                let mut v: Vec<i64> = prefix.clone();
                v.push(x);
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter().map(LatticeVector).collect()
}

/// Residues `[0, p_1) x ... x [0, p_n)` in lexicographic order.
pub fn residue_box(periods: &LatticeVector) -> Vec<LatticeVector> {
    let bounds: Vec<(i64, i64)> = periods.0.iter().map(|p| (0, p - 1)).collect();
    box_enum(&bounds)
}

/// A finite root system in coordinates, with the inner product given by a
/// Gram matrix on those coordinates (identity for the epsilon models).
#[derive(Clone, Debug, PartialEq)]
pub struct RootSystem {
    pub label: String,
    pub rank: usize,
    /// Nonzero roots, sorted.
    pub roots: Vec<LatticeVector>,
    pub gram: Vec<Vec<Rational>>,
}

impl RootSystem {
    pub fn ambient(&self) -> usize {
        self.gram.len()
    }

    pub fn zero(&self) -> LatticeVector {
        LatticeVector::zero(self.ambient())
    }

    pub fn inner(&self, a: &LatticeVector, b: &LatticeVector) -> Rational {
        let mut acc = Rational::from_integer(0);
        for (i, x) in a.0.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if *y == 0 {
                    continue;
                }
                acc = radd(&acc, &rmul(&self.gram[i][j], &Rational::from_integer((*x as i128) * (*y as i128))));
            }
        }
        acc
    }

    /// `<beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)`.
    pub fn cartan_integer(&self, beta: &LatticeVector, alpha: &LatticeVector) -> Result<i64> {
        if alpha.is_zero() {
            return Err(Error::ZeroRoot);
        }
        let aa = self.inner(alpha, alpha);
        if aa == Rational::from_integer(0) {
            return Err(Error::ZeroRoot);
        }
        let v = rdiv(&rmul(&Rational::from_integer(2), &self.inner(beta, alpha)), &aa);
        if !v.is_integer() {
            return Err(Error::InvalidTable(format!("non-integral Cartan number for {beta} and {alpha}")));
        }
        Ok(*v.numer() as i64)
    }

    /// Whether `v` is in `Delta = {0} ∪ roots`.
    pub fn contains(&self, v: &LatticeVector) -> bool {
        v.is_zero() || self.roots.binary_search(v).is_ok()
    }

    /// `alpha ≠ 0` with `alpha/2` not a root.
    pub fn is_indivisible(&self, alpha: &LatticeVector) -> bool {
        if alpha.is_zero() {
            return true;
        }
        if alpha.0.iter().any(|x| x % 2 != 0) {
            return true;
        }
        let half = LatticeVector(alpha.0.iter().map(|x| x / 2).collect());
        !self.roots.binary_search(&half).is_ok()
    }

    pub fn indivisible(&self) -> Vec<LatticeVector> {
        self.roots.iter().filter(|a| self.is_indivisible(a)).cloned().collect()
    }

    fn lengths(&self) -> Vec<Rational> {
        let mut l: Vec<Rational> = self.roots.iter().map(|a| self.inner(a, a)).collect();
        l.sort();
        l.dedup();
        l
    }

    /// Roots of minimal length; empty when all roots have one length.
    pub fn short_roots(&self) -> Vec<LatticeVector> {
        let l = self.lengths();
        if l.len() < 2 {
            return Vec::new();
        }
        self.roots.iter().filter(|a| self.inner(a, a) == l[0]).cloned().collect()
    }

    pub fn long_roots(&self) -> Vec<LatticeVector> {
        let l = self.lengths();
        let top = *l.last().expect("nonempty root system");
        self.roots.iter().filter(|a| self.inner(a, a) == top).cloned().collect()
    }

    pub fn reflect(&self, beta: &LatticeVector, alpha: &LatticeVector) -> Result<LatticeVector> {
        let c = self.cartan_integer(beta, alpha)?;
        Ok(beta - &alpha.scaled(c))
    }

    /// Checks negation closure, reflection closure and the Cartan-integer range.
    pub fn validate(&self) -> Result<()> {
        for a in &self.roots {
            if !self.contains(&-a) {
                return Err(Error::InvalidTable(format!("{a} has no negative")));
            }
            for b in &self.roots {
                let c = self.cartan_integer(b, a)?;
                if !(-4..=4).contains(&c) {
                    return Err(Error::InvalidTable(format!("Cartan number {c} out of range")));
                }
                if !self.contains(&(b - &a.scaled(c))) {
                    return Err(Error::InvalidTable(format!("not reflection closed at {b}, {a}")));
                }
            }
        }
        Ok(())
    }

    pub fn from_roots(label: &str, rank: usize, roots: Vec<LatticeVector>, gram: Vec<Vec<Rational>>) -> Result<RootSystem> {
        let mut roots: Vec<LatticeVector> = roots.into_iter().filter(|r| !r.is_zero()).collect();
        roots.sort();
        roots.dedup();
        let rs = RootSystem { label: label.to_string(), rank, roots, gram };
        rs.validate()?;
        Ok(rs)
    }
}

fn identity_gram(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| (0..n).map(|j| Rational::from_integer(i128::from(i == j))).collect())
        .collect()
}

fn eps(n: usize, terms: &[(usize, i64)]) -> LatticeVector {
    let mut v = vec![0; n];
    for &(i, c) in terms {
        v[i] += c;
    }
    LatticeVector(v)
}

/// The epsilon model of an irreducible root system of classical type.
pub fn root_system(kind: &str, rank: usize) -> Result<RootSystem> {
    let l = rank;
    let mut roots = Vec::new();
    let ambient;
    match kind {
        "A" if l >= 1 => {
            ambient = l + 1;
            for i in 0..=l {
                for j in 0..=l {
                    if i != j {
                        roots.push(eps(ambient, &[(i, 1), (j, -1)]));
                    }
                }
            }
        }
        "B" | "C" | "D" | "BC" if l >= 1 => {
            if kind == "D" && l < 2 {
                return Err(Error::UnsupportedType(format!("{kind}{l}")));
            }
            ambient = l;
            for i in 0..l {
                for s in [1, -1] {
                    match kind {
                        "B" => roots.push(eps(l, &[(i, s)])),
                        "C" => roots.push(eps(l, &[(i, 2 * s)])),
                        "BC" => {
                            roots.push(eps(l, &[(i, s)]));
                            roots.push(eps(l, &[(i, 2 * s)]));
                        }
                        _ => {}
                    }
                }
                for j in i + 1..l {
                    for s in [1, -1] {
                        for t in [1, -1] {
                            roots.push(eps(l, &[(i, s), (j, t)]));
                        }
                    }
                }
            }
        }
        _ => return Err(Error::UnsupportedType(format!("{kind}{l}"))),
    }
    RootSystem::from_roots(&format!("{kind}{l}"), l, roots, identity_gram(ambient))
}

/// A homomorphism `Z^n -> K`, given by its values on the standard basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    pub values: Vec<Scalar>,
}

impl GroupHom {
    pub fn new(values: Vec<Scalar>) -> GroupHom {
        GroupHom { values }
    }

    pub fn zero(n: usize) -> GroupHom {
        GroupHom { values: vec![Scalar::zero(); n] }
    }

    pub fn coordinate(n: usize, i: usize) -> GroupHom {
        let mut v = vec![Scalar::zero(); n];
        v[i] = Scalar::one();
        GroupHom { values: v }
    }

    pub fn eval(&self, lambda: &LatticeVector) -> Scalar {
        let mut acc = Scalar::zero();
        for (v, x) in self.values.iter().zip(&lambda.0) {
            if *x != 0 && !v.is_zero() {
                acc += &v.scale(&Rational::from_integer(*x as i128));
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }

    /// The `K`-linear extension to `K^n`.
    pub fn eval_vec(&self, v: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (a, b) in self.values.iter().zip(v) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }

    pub fn add_scaled(&self, other: &GroupHom, c: &Scalar) -> GroupHom {
        GroupHom { values: self.values.iter().zip(&other.values).map(|(a, b)| a + &(b * c)).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> GroupHom {
        GroupHom { values: self.values.iter().map(|a| a * c).collect() }
    }
}

impl fmt::Display for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Semilattice data: the rank `m` of `Lambda_m` and representatives of the
/// nonzero cosets of `2 Lambda_m` that the semilattice meets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semilattice {
    pub m: usize,
    pub reps: Vec<LatticeVector>,
}

impl Semilattice {
    pub fn new(m: usize, reps: Vec<LatticeVector>) -> Result<Semilattice> {
        let mut seen = Vec::new();
        for r in &reps {
            if r.len() != m {
                return Err(Error::BadSemilattice(format!("representative {r} has rank {} not {m}", r.len())));
            }
            let red = r.rem_euclid(&LatticeVector(vec![2; m]));
            if red.is_zero() {
                return Err(Error::BadSemilattice(format!("representative {r} lies in 2Λ")));
            }
            if seen.contains(&red) {
                return Err(Error::BadSemilattice(format!("representative {r} repeats a coset")));
            }
            seen.push(red);
        }
        Ok(Semilattice { m, reps: seen })
    }

    /// `None` if `alpha` is outside the semilattice, `Some(None)` for the
    /// class of `2 Lambda_m`, `Some(Some(i))` for the class of `reps[i]`.
    pub fn class_of(&self, alpha: &LatticeVector) -> Result<Option<Option<usize>>> {
        if alpha.len() != self.m {
            return Err(Error::RankMismatch { expected: self.m, got: alpha.len() });
        }
        let red = alpha.rem_euclid(&LatticeVector(vec![2; self.m]));
        if red.is_zero() {
            return Ok(Some(None));
        }
        Ok(self.reps.iter().position(|r| *r == red).map(Some))
    }

    pub fn contains(&self, alpha: &LatticeVector) -> Result<bool> {
        Ok(self.class_of(alpha)?.is_some())
    }
}

pub fn semilattice_contains(s: &Semilattice, alpha: &LatticeVector) -> Result<bool> {
    s.contains(alpha)
}
