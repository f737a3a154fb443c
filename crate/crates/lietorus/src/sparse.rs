//! Finite sparse linear combinations over an ordered key type.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// A finite linear combination of keys with nonzero scalar coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Sparse<K: Ord> {
    pub terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for Sparse<K> {
    fn default() -> Self {
        Sparse { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Sparse<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::single(key, Scalar::one())
    }

    pub fn single(key: K, c: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(key, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: K, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut e = self.clone();
        e.add_scaled(other, &Scalar::one());
        e
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut e = self.clone();
        e.add_scaled(other, &Scalar::from_int(-1));
        e
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut e = Self::zero();
        e.add_scaled(self, c);
        e
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn coeff(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    /// Applies a linear map given on keys.
    pub fn map_linear<K2: Ord + Clone>(&self, f: impl Fn(&K) -> Sparse<K2>) -> Sparse<K2> {
        let mut e = Sparse::zero();
        for (k, v) in &self.terms {
            e.add_scaled(&f(k), v);
        }
        e
    }

    /// Applies a monomial map `k -> c(k) k'`.
    pub fn map_keys(&self, f: impl Fn(&K) -> (K, Scalar)) -> Self {
        let mut e = Self::zero();
        for (k, v) in &self.terms {
            let (k2, c) = f(k);
            e.add_term(k2, v * &c);
        }
        e
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for Sparse<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut e = Self::zero();
        for (k, c) in iter {
            e.add_term(k, c);
        }
        e
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for Sparse<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, v)| format!("({v}){k:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
