//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! A [`Scalar`] stores its coefficients on the power basis
//! `1, z, ..., z^{phi(N)-1}` of `Q(zeta_N)`, always reduced modulo the
//! `N`-th cyclotomic polynomial. Scalars whose irrational part vanishes are
//! stored with conductor 1 so rational arithmetic stays cheap.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{OnceLock, RwLock};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

pub(crate) fn radd(a: &Rational, b: &Rational) -> Rational {
    a.checked_add(b).expect("rational overflow")
}

pub(crate) fn rsub(a: &Rational, b: &Rational) -> Rational {
    a.checked_sub(b).expect("rational overflow")
}

pub(crate) fn rmul(a: &Rational, b: &Rational) -> Rational {
    a.checked_mul(b).expect("rational overflow")
}

pub(crate) fn rdiv(a: &Rational, b: &Rational) -> Rational {
    a.checked_div(b).expect("rational overflow")
}

/// Euler's totient.
pub fn totient(n: u32) -> usize {
    let mut m = n;
    let mut result = n as u64;
    let mut p = 2u32;
    while (p as u64) * (p as u64) <= m as u64 {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p as u64;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m as u64;
    }
    result as usize
}

struct Cyclo {
    phi: usize,
    /// `powers[k]` is `zeta^k` on the power basis, sparse, for `0 <= k < N`.
    powers: Vec<Vec<(usize, i64)>>,
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic integer polynomial.
fn poly_div_monic(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let dq = rem.len() - 1 - db;
    let mut q = vec![0i128; dq + 1];
    for k in (0..=dq).rev() {
        let c = rem[k + db];
        q[k] = c;
        if c != 0 {
            for (j, bj) in b.iter().enumerate() {
                rem[k + j] -= c * bj;
            }
        }
    }
    debug_assert!(rem.iter().all(|x| *x == 0));
    q
}

fn cyclotomic_poly(n: u32) -> Vec<i128> {
    // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}
    let mut num = vec![1i128];
    let mut den = vec![1i128];
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let mut f = vec![0i128; d as usize + 1];
        f[0] = -1;
        f[d as usize] = 1;
        match mobius(n / d) {
            1 => num = poly_mul(&num, &f),
            -1 => den = poly_mul(&den, &f),
            _ => {}
        }
    }
    poly_div_monic(&num, &den)
}

fn mobius(mut n: u32) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

impl Cyclo {
    fn new(n: u32) -> Cyclo {
        let phi = totient(n);
        let poly = cyclotomic_poly(n);
        assert_eq!(poly.len(), phi + 1);
        let mut dense: Vec<i128> = vec![0; phi];
        let mut powers = Vec::with_capacity(n as usize);
        for k in 0..n as usize {
            if k < phi {
                dense = vec![0; phi];
                dense[k] = 1;
            } else {
                // multiply the previous power by z and reduce z^phi
                let top = dense[phi - 1];
                for i in (1..phi).rev() {
                    dense[i] = dense[i - 1];
                }
                dense[0] = 0;
                if top != 0 {
                    for i in 0..phi {
                        dense[i] -= top * poly[i];
                    }
                }
            }
            powers.push(
                dense
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| **c != 0)
                    .map(|(i, c)| (i, i64::try_from(*c).expect("cyclotomic coefficient overflow")))
                    .collect(),
            );
        }
        Cyclo { phi, powers }
    }
}

const SMALL: usize = 257;

fn cyclo(n: u32) -> &'static Cyclo {
    static TABLES: [OnceLock<Cyclo>; SMALL] = [const { OnceLock::new() }; SMALL];
    static LARGE: OnceLock<RwLock<HashMap<u32, &'static Cyclo>>> = OnceLock::new();
    if (n as usize) < SMALL {
        return TABLES[n as usize].get_or_init(|| Cyclo::new(n));
    }
    let map = LARGE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(c) = map.read().expect("cyclotomic cache poisoned").get(&n) {
        return c;
    }
    let mut w = map.write().expect("cyclotomic cache poisoned");
    w.entry(n).or_insert_with(|| Box::leak(Box::new(Cyclo::new(n))))
}

/// An exact element of `Q(zeta_N)`.
#[derive(Clone)]
pub struct Scalar {
    n: u32,
    c: Vec<Rational>,
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar { n: 1, c: vec![Rational::zero()] }
    }

    pub fn one() -> Scalar {
        Scalar::from_int(1)
    }

    pub fn from_int(v: i64) -> Scalar {
        Scalar { n: 1, c: vec![Rational::from_integer(v as i128)] }
    }

    pub fn from_rational(r: Rational) -> Scalar {
        Scalar { n: 1, c: vec![r] }
    }

    pub fn frac(p: i64, q: i64) -> Scalar {
        Scalar::from_rational(Rational::new(p as i128, q as i128))
    }

    /// `zeta_N^k`.
    pub fn root_of_unity(k: i64, n: i64) -> Result<Scalar> {
        if n < 1 || n > u32::MAX as i64 {
            return Err(Error::InvalidConductor(n));
        }
        let n = n as u32;
        let e = k.rem_euclid(n as i64) as usize;
        let tab = cyclo(n);
        let mut c = vec![Rational::zero(); tab.phi];
        for &(i, v) in &tab.powers[e] {
            c[i] = Rational::from_integer(v as i128);
        }
        Ok(Scalar { n, c }.normalized())
    }

    /// Builds a scalar from power-basis coefficients at conductor `n`.
    pub fn from_coeffs(n: u32, coeffs: &[Rational]) -> Result<Scalar> {
        if n < 1 {
            return Err(Error::InvalidConductor(n as i64));
        }
        let tab = cyclo(n);
        let mut c = vec![Rational::zero(); tab.phi];
        for (k, a) in coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(i, v) in &tab.powers[k % n as usize] {
                c[i] = radd(&c[i], &rmul(a, &Rational::from_integer(v as i128)));
            }
        }
        Ok(Scalar { n, c }.normalized())
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.to_rational().map(|r| r.is_one()).unwrap_or(false)
    }

    /// The value as a rational, when it lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.c[1..].iter().all(|x| x.is_zero()) {
            Some(self.c[0])
        } else {
            None
        }
    }

    fn normalized(mut self) -> Scalar {
        if self.n != 1 && self.c[1..].iter().all(|x| x.is_zero()) {
            let r = self.c[0];
            self.n = 1;
            self.c = vec![r];
        }
        self
    }

    /// Coefficients of `self` re-expressed in `Q(zeta_m)`; `m` must be a
    /// multiple of the conductor.
    fn embed(&self, m: u32) -> Vec<Rational> {
        if m == self.n {
            return self.c.clone();
        }
        debug_assert_eq!(m % self.n, 0);
        let step = (m / self.n) as usize;
        let tab = cyclo(m);
        let mut out = vec![Rational::zero(); tab.phi];
        for (j, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(i, v) in &tab.powers[j * step] {
                out[i] = radd(&out[i], &rmul(a, &Rational::from_integer(v as i128)));
            }
        }
        out
    }

    fn common(&self, other: &Scalar) -> (u32, Vec<Rational>, Vec<Rational>) {
        if self.n == other.n {
            return (self.n, self.c.clone(), other.c.clone());
        }
        let m = self.n.lcm(&other.n);
        (m, self.embed(m), other.embed(m))
    }

    /// The same value written over `Q(zeta_m)`; `m` must be a multiple of the
    /// conductor. The result is not demoted.
    pub fn coeffs_at(&self, m: u32) -> Vec<Rational> {
        self.embed(m)
    }

    pub fn add_ref(&self, other: &Scalar) -> Scalar {
        if self.n == 1 && other.n == 1 {
            return Scalar::from_rational(radd(&self.c[0], &other.c[0]));
        }
        let (m, a, b) = self.common(other);
        let c = a.iter().zip(b.iter()).map(|(x, y)| radd(x, y)).collect();
        Scalar { n: m, c }.normalized()
    }

    pub fn sub_ref(&self, other: &Scalar) -> Scalar {
        if self.n == 1 && other.n == 1 {
            return Scalar::from_rational(rsub(&self.c[0], &other.c[0]));
        }
        let (m, a, b) = self.common(other);
        let c = a.iter().zip(b.iter()).map(|(x, y)| rsub(x, y)).collect();
        Scalar { n: m, c }.normalized()
    }

    pub fn mul_ref(&self, other: &Scalar) -> Scalar {
        if self.n == 1 {
            if other.n == 1 {
                return Scalar::from_rational(rmul(&self.c[0], &other.c[0]));
            }
            return other.scale(&self.c[0]);
        }
        if other.n == 1 {
            return self.scale(&other.c[0]);
        }
        let (m, a, b) = self.common(other);
        let tab = cyclo(m);
        let mut acc = vec![Rational::zero(); tab.phi];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let p = rmul(x, y);
                for &(t, v) in &tab.powers[(i + j) % m as usize] {
                    acc[t] = radd(&acc[t], &rmul(&p, &Rational::from_integer(v as i128)));
                }
            }
        }
        Scalar { n: m, c: acc }.normalized()
    }

    pub fn scale(&self, r: &Rational) -> Scalar {
        if r.is_zero() {
            return Scalar::zero();
        }
        Scalar { n: self.n, c: self.c.iter().map(|x| rmul(x, r)).collect() }
    }

    pub fn neg_ref(&self) -> Scalar {
        Scalar { n: self.n, c: self.c.iter().map(|x| -*x).collect() }
    }

    /// Image under the Galois automorphism `zeta_N -> zeta_N^k`, `gcd(k,N)=1`.
    pub fn galois(&self, k: i64) -> Scalar {
        if self.n == 1 {
            return self.clone();
        }
        let n = self.n as i64;
        let tab = cyclo(self.n);
        let mut out = vec![Rational::zero(); tab.phi];
        for (j, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let e = (j as i64 * k).rem_euclid(n) as usize;
            for &(i, v) in &tab.powers[e] {
                out[i] = radd(&out[i], &rmul(a, &Rational::from_integer(v as i128)));
            }
        }
        Scalar { n: self.n, c: out }.normalized()
    }

    /// Complex conjugation `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Scalar {
        self.galois(-1)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.n == 1 {
            return Ok(Scalar::from_rational(self.c[0].recip()));
        }
        // a^{-1} = (prod of the other conjugates) / norm(a)
        let n = self.n as i64;
        let mut others = Scalar::one();
        for k in 2..n {
            if k.gcd(&n) == 1 {
                others = others.mul_ref(&self.galois(k));
            }
        }
        let norm = self.mul_ref(&others).to_rational().expect("norm is rational");
        Ok(others.scale(&norm.recip()))
    }

    pub fn div_ref(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul_ref(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Scalar> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// If `self = zeta_L^j` for `L = lcm(2, N)`, returns `j`.
    pub fn root_exponent(&self) -> Option<(u32, u32)> {
        let l = self.n.lcm(&2);
        (0..l).find(|j| {
            Scalar::root_of_unity(*j as i64, l as i64)
                .map(|z| z == *self)
                .unwrap_or(false)
        })
        .map(|j| (j, l))
    }

    /// A square root of a root of unity: with `u = zeta_L^j` (`L = lcm(2,N)`,
    /// `0 <= j < L`), returns `zeta_{2L}^j`.
    pub fn sqrt_root_of_unity(&self) -> Result<Scalar> {
        match self.root_exponent() {
            Some((j, l)) => Scalar::root_of_unity(j as i64, 2 * l as i64),
            None => Err(Error::NotRootOfUnity(self.to_string())),
        }
    }

    /// Parses the text grammar `<rational>` or sums of `<rational>*z^<k>`
    /// interpreted in `Q(zeta_conductor)`.
    pub fn parse(conductor: u32, text: &str) -> Result<Scalar> {
        if conductor < 1 {
            return Err(Error::InvalidConductor(conductor as i64));
        }
        let bad = || Error::ScalarParse(text.to_string());
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad());
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev: Option<char> = None;
        for ch in s.chars() {
            let split = (ch == '+' || ch == '-') && !matches!(prev, None | Some('^') | Some('*') | Some('/'));
            if split {
                if cur.is_empty() {
                    return Err(bad());
                }
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if (ch == '+' || ch == '-') && prev.is_none() {
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        if cur.is_empty() {
            return Err(bad());
        }
        terms.push((neg, cur));
        let mut coeffs = vec![Rational::zero(); conductor as usize];
        for (neg, t) in terms {
            let (coef, exp) = parse_term(&t).ok_or_else(bad)?;
            let coef = if neg { -coef } else { coef };
            let k = exp.rem_euclid(conductor as i64) as usize;
            coeffs[k] = radd(&coeffs[k], &coef);
        }
        Scalar::from_coeffs(conductor, &coeffs)
    }

    /// Text form on the power basis of the stored conductor.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mag = fmt_rational(&a.abs());
            let body = if k == 0 { mag } else { format!("{mag}*z^{k}") };
            if out.is_empty() {
                if a.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if a.is_negative() { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Total order used only for deterministic output: compares by conductor
    /// then coefficients.
    pub fn canonical_cmp(&self, other: &Scalar) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.c.cmp(&other.c))
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    if let Some((p, q)) = s.split_once('/') {
        let p: i128 = p.parse().ok()?;
        let q: i128 = q.parse().ok()?;
        if q == 0 {
            return None;
        }
        Some(Rational::new(p, q))
    } else {
        Some(Rational::from_integer(s.parse().ok()?))
    }
}

fn parse_term(t: &str) -> Option<(Rational, i64)> {
    if let Some(pos) = t.find('z') {
        let (coef, rest) = t.split_at(pos);
        let coef = coef.strip_suffix('*').unwrap_or(coef);
        let c = if coef.is_empty() { Rational::one() } else { parse_rational(coef)? };
        let rest = &rest[1..];
        let e = if rest.is_empty() {
            1
        } else {
            rest.strip_prefix('^')?.parse().ok()?
        };
        Some((c, e))
    } else {
        Some((parse_rational(t)?, 0))
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        if self.n == other.n {
            return self.c == other.c;
        }
        let (_, a, b) = self.common(other);
        a == b
    }
}

impl Eq for Scalar {}

impl Default for Scalar {
    fn default() -> Scalar {
        Scalar::zero()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            write!(f, "{}", self.to_text())
        } else {
            write!(f, "[{}]_{}", self.to_text(), self.n)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Scalar {
        Scalar::from_int(v)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Scalar {
        Scalar::from_rational(r)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.$f(rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$f(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.$f(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$f(&rhs)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.sub_ref(rhs);
    }
}

/// JSON form `{"conductor":N,"value":"..."}`; integers, rational strings and
/// `{"zeta":[k,N]}` are also accepted on input.
pub mod json {
    use super::*;
    use serde_json::{json, Value};

    pub fn to_value(s: &Scalar) -> Value {
        json!({"conductor": s.conductor(), "value": s.to_text()})
    }

    pub fn from_value(v: &Value) -> Result<Scalar> {
        match v {
            Value::Number(n) => n
                .as_i64()
                .map(Scalar::from_int)
                .ok_or_else(|| Error::ScalarParse(n.to_string())),
            Value::String(s) => Scalar::parse(1, s),
            Value::Object(m) => {
                if let Some(z) = m.get("zeta") {
                    let arr = z.as_array().filter(|a| a.len() == 2).ok_or_else(|| Error::ScalarParse(z.to_string()))?;
                    let k = arr[0].as_i64().ok_or_else(|| Error::ScalarParse(z.to_string()))?;
                    let n = arr[1].as_i64().ok_or_else(|| Error::ScalarParse(z.to_string()))?;
                    return Scalar::root_of_unity(k, n);
                }
                let n = m.get("conductor").and_then(Value::as_i64).unwrap_or(1);
                if n < 1 || n > u32::MAX as i64 {
                    return Err(Error::InvalidConductor(n));
                }
                match m.get("value") {
                    Some(Value::String(s)) => Scalar::parse(n as u32, s),
                    Some(Value::Number(x)) => x
                        .as_i64()
                        .map(Scalar::from_int)
                        .ok_or_else(|| Error::ScalarParse(x.to_string())),
                    _ => Err(Error::ScalarParse(v.to_string())),
                }
            }
            _ => Err(Error::ScalarParse(v.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: i64, n: i64) -> Scalar {
        Scalar::root_of_unity(k, n).unwrap()
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        assert_eq!(z(1, 4) * z(1, 4), Scalar::from_int(-1));
    }

    #[test]
    fn cube_roots_sum_to_zero() {
        assert!((Scalar::one() + z(1, 3) + z(2, 3)).is_zero());
    }

    #[test]
    fn inverse_of_zeta8_cubed() {
        let a = z(3, 8);
        let b = a.inv().unwrap();
        assert_eq!(b, z(5, 8));
        assert!((a * b).is_one());
    }

    #[test]
    fn root_of_unity_examples() {
        assert_eq!(z(2, 4), Scalar::from_int(-1));
        assert_eq!(z(3, 3), Scalar::one());
        let z6 = z(1, 6);
        assert_eq!(z6, -z(2, 3));
        assert!(z6.pow(6).unwrap().is_one());
        assert_eq!(Scalar::root_of_unity(1, 0), Err(Error::InvalidConductor(0)));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(Scalar::one().sqrt_root_of_unity().unwrap(), Scalar::one());
        assert_eq!(Scalar::from_int(-1).sqrt_root_of_unity().unwrap(), z(1, 4));
        assert_eq!(z(1, 3).sqrt_root_of_unity().unwrap(), z(1, 6));
        assert!(matches!(Scalar::from_int(2).sqrt_root_of_unity(), Err(Error::NotRootOfUnity(_))));
    }

    #[test]
    fn sqrt_squares_back_for_small_conductors() {
        for n in 1..=24 {
            for k in 0..n {
                let u = z(k, n);
                let v = u.sqrt_root_of_unity().unwrap();
                assert_eq!(&v * &v, u, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn parse_and_print_round_trip() {
        let s = Scalar::parse(8, "1/2 - 1*z^3").unwrap();
        assert_eq!(s.to_text(), "1/2 - 1*z^3");
        assert_eq!(Scalar::parse(8, &s.to_text()).unwrap(), s);
        assert_eq!(Scalar::parse(4, "z^2").unwrap(), Scalar::from_int(-1));
        assert_eq!(Scalar::parse(3, "-z - z^2").unwrap(), Scalar::one());
        assert!(Scalar::parse(3, "1 +").is_err());
    }

    #[test]
    fn json_forms() {
        use serde_json::json;
        assert_eq!(json::from_value(&json!(3)).unwrap(), Scalar::from_int(3));
        assert_eq!(json::from_value(&json!("-2/3")).unwrap(), Scalar::frac(-2, 3));
        assert_eq!(json::from_value(&json!({"zeta": [1, 4]})).unwrap(), z(1, 4));
        assert_eq!(json::from_value(&json!({"conductor": 4, "value": "z^1"})).unwrap(), z(1, 4));
        let s = z(3, 8) + Scalar::frac(1, 2);
        assert_eq!(json::from_value(&json::to_value(&s)).unwrap(), s);
    }

    #[test]
    fn mixed_conductors_promote() {
        // zeta_3 * zeta_4 = zeta_12^{4+3}
        assert_eq!(z(1, 3) * z(1, 4), z(7, 12));
        assert_eq!(z(1, 4) + z(1, 6), z(3, 12) + z(2, 12));
    }

    #[test]
    fn conj_inverts_roots() {
        for n in 1..13 {
            for k in 0..n {
                assert_eq!(z(k, n).conj(), z(-k, n));
            }
        }
    }
}
