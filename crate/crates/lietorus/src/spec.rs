//! JSON input files for coordinate tori, Lie tori, derivation
//! subalgebras, affine cocycles and EALAs.
//!
//! Scalars are written as integers, rational strings, `{"zeta":[k,N]}` or
//! `{"conductor":N,"value":"..."}`; bare strings inside a torus spec are read
//! in `Q(zeta_N)` with `N` the spec's `"conductor"` field.

use std::sync::Arc;

use serde_json::Value;

use crate::eala::{AffineCocycle, DAtom, DKind, DSubalgebra, DualElement, Subspace};
use crate::error::{Error, Result};
use crate::jordan::{HermitianMatrix, RedCliff};
use crate::lattice::{DegreeWindow, GroupHom, LatticeVector, Semilattice};
use crate::lie::matrix::TableSpec;
use crate::lie::multiloop::MultiLoop;
use crate::lie::psl3::Psl3Torus;
use crate::lie::sl::SlTorus;
use crate::lie::tensor::TensorTorus;
use crate::lie::tits::TitsB;
use crate::lie::tkk::Tkk;
use crate::lie::{Construction, MatrixLie};
use crate::linalg::ScalarMatrix;
use crate::scalar::{self, Scalar};
use crate::tori::{AntiKind, TorusAlgebra};

fn bad(msg: impl Into<String>) -> Error {
    Error::Spec(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("missing field \"{key}\"")))
}

fn uint(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?.as_u64().map(|x| x as usize).ok_or_else(|| bad(format!("\"{key}\" must be a non-negative integer")))
}

fn text<'a>(v: &'a Value, key: &str) -> Result<&'a str> {
    field(v, key)?.as_str().ok_or_else(|| bad(format!("\"{key}\" must be a string")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("{what} must be an array")))
}

/// A scalar; bare strings are read in `Q(zeta_conductor)`.
pub fn scalar_in(v: &Value, conductor: u32) -> Result<Scalar> {
    match v {
        Value::String(s) => Scalar::parse(conductor, s),
        _ => scalar::json::from_value(v),
    }
}

fn scalars(v: &Value, conductor: u32, what: &str) -> Result<Vec<Scalar>> {
    array(v, what)?.iter().map(|x| scalar_in(x, conductor)).collect()
}

fn matrix(v: &Value, conductor: u32, what: &str) -> Result<Vec<Vec<Scalar>>> {
    array(v, what)?.iter().map(|r| scalars(r, conductor, what)).collect()
}

pub fn lattice_vector(v: &Value) -> Result<LatticeVector> {
    let xs = array(v, "lattice vector")?;
    xs.iter()
        .map(|x| x.as_i64().ok_or_else(|| bad(format!("lattice vector entry {x} is not an integer"))))
        .collect::<Result<Vec<_>>>()
        .map(LatticeVector)
}

fn lattice_vectors(v: &Value, what: &str) -> Result<Vec<LatticeVector>> {
    array(v, what)?.iter().map(lattice_vector).collect()
}

fn conductor(v: &Value) -> Result<u32> {
    match v.get("conductor") {
        None => Ok(1),
        Some(c) => c.as_u64().filter(|&n| n >= 1 && n <= u32::MAX as u64).map(|n| n as u32).ok_or_else(|| bad("\"conductor\" must be a positive integer")),
    }
}

/// `{"family", "rank", "q", "e", "semilattice": {"m", "reps"}, "conductor"}`.
/// For rank-2 quantum and plus tori `"q"` may be the single scalar `q_12`.
pub fn torus_from_json(v: &Value) -> Result<TorusAlgebra> {
    let family = text(v, "family")?;
    let n = uint(v, "rank")?;
    let cond = conductor(v)?;
    let qmatrix = |key: &str| -> Result<Vec<Vec<Scalar>>> {
        let q = field(v, key)?;
        let m = if q.is_array() {
            matrix(q, cond, key)?
        } else {
            let q12 = scalar_in(q, cond)?;
            vec![vec![Scalar::one(), q12.clone()], vec![q12.inv()?, Scalar::one()]]
        };
        if m.len() != n {
            return Err(Error::RankMismatch { expected: n, got: m.len() });
        }
        Ok(m)
    };
    match family {
        "laurent" => Ok(TorusAlgebra::laurent(n)),
        "quantum" => TorusAlgebra::quantum(&qmatrix("q")?),
        "octonion" => TorusAlgebra::octonion(n),
        "jordan_plus" => TorusAlgebra::jordan_plus(&qmatrix("q")?),
        "hermitian" => TorusAlgebra::hermitian(&qmatrix("e")?),
        "clifford" => {
            let s = field(v, "semilattice")?;
            let reps = lattice_vectors(field(s, "reps")?, "semilattice reps")?;
            TorusAlgebra::clifford(n, Semilattice::new(uint(s, "m")?, reps)?)
        }
        "albert" => TorusAlgebra::albert(n),
        other => Err(bad(format!("unknown torus family \"{other}\""))),
    }
}

/// `"octonion_standard"`, `"hermitian_bar"` or `{"sigma_e": [±1, ...]}`.
pub fn anti_kind_from_json(v: &Value) -> Result<AntiKind> {
    match v {
        Value::String(s) if s == "octonion_standard" => Ok(AntiKind::OctonionStandard),
        Value::String(s) if s == "hermitian_bar" => Ok(AntiKind::HermitianBar),
        Value::Object(_) => {
            let e = array(field(v, "sigma_e")?, "sigma_e")?;
            e.iter().map(|x| x.as_i64().ok_or_else(|| bad("sigma_e entries must be ±1"))).collect::<Result<_>>().map(AntiKind::SigmaE)
        }
        _ => Err(bad(format!("unknown anti-involution {v}"))),
    }
}

fn optional_anti(v: &Value) -> Result<Option<AntiKind>> {
    v.get("anti").filter(|a| !a.is_null()).map(anti_kind_from_json).transpose()
}

/// Sparse vectors over named basis elements: `[{"k": name, "c": scalar}]`.
fn named_terms(v: &Value) -> Result<Vec<(String, Scalar)>> {
    array(v, "terms")?.iter().map(|t| Ok((text(t, "k")?.to_string(), scalar_in(field(t, "c")?, 1)?))).collect()
}

/// `{"builtin": ["A", 1]}` or `{"table": {"kind", "rank", "basis":
/// [{"name", "root"}], "brackets": [{"x", "y", "value"}], "theta"?:
/// [{"x", "value"}], "validate"?}}`.
pub fn matrix_lie_from_json(v: &Value) -> Result<MatrixLie> {
    if let Some(b) = v.get("builtin") {
        let pair = array(b, "builtin")?;
        let kind = pair.first().and_then(Value::as_str).ok_or_else(|| bad("builtin needs a type letter"))?;
        let rank = pair.get(1).and_then(Value::as_u64).ok_or_else(|| bad("builtin needs a rank"))?;
        return MatrixLie::builtin(kind, rank as usize);
    }
    let t = field(v, "table")?;
    let basis = array(field(t, "basis")?, "basis")?
        .iter()
        .map(|b| Ok((text(b, "name")?.to_string(), lattice_vector(field(b, "root")?)?)))
        .collect::<Result<Vec<_>>>()?;
    let brackets = array(field(t, "brackets")?, "brackets")?
        .iter()
        .map(|b| Ok((text(b, "x")?.to_string(), text(b, "y")?.to_string(), named_terms(field(b, "value")?)?)))
        .collect::<Result<Vec<_>>>()?;
    let theta = match t.get("theta").filter(|x| !x.is_null()) {
        None => None,
        Some(th) => Some(
            array(th, "theta")?.iter().map(|b| Ok((text(b, "x")?.to_string(), named_terms(field(b, "value")?)?))).collect::<Result<Vec<_>>>()?,
        ),
    };
    let validate = t.get("validate").and_then(Value::as_bool).unwrap_or(true);
    MatrixLie::from_table(&TableSpec { kind: text(t, "kind")?.to_string(), rank: uint(t, "rank")?, basis, brackets, theta, validate })
}

/// Which map the involution suite verifies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvolutionChoice {
    Chevalley,
    Identity,
}

/// A parsed Lie-torus spec.
#[derive(Clone, Debug)]
pub struct LieSpec {
    pub construction: Construction,
    pub window: Option<i64>,
    pub involution: InvolutionChoice,
}

fn window_of(v: &Value) -> Result<Option<i64>> {
    match v.get("window") {
        None | Some(Value::Null) => Ok(None),
        Some(Value::Number(n)) => n.as_i64().filter(|r| *r >= 0).map(Some).ok_or_else(|| bad("window radius must be >= 0")),
        Some(w) => w.get("radius").and_then(Value::as_i64).filter(|r| *r >= 0).map(Some).ok_or_else(|| bad("window needs a radius >= 0")),
    }
}

fn square(v: &Value, what: &str) -> Result<ScalarMatrix> {
    Ok(ScalarMatrix::from_rows(matrix(v, 1, what)?))
}

/// `{"construction": "sl|tensor|psl3|tkk|tkk_hermitian|tkk_redcliff|tits_b|multiloop", params...,
/// "window"?: {"radius"}, "involution"?: "chevalley|identity"}`.
pub fn lie_from_json(v: &Value) -> Result<LieSpec> {
    let kind = text(v, "construction")?;
    let construction = match kind {
        "sl" => Construction::Sl(Arc::new(SlTorus::new(uint(v, "size")?, torus_from_json(field(v, "coordinates")?)?)?), optional_anti(v)?),
        "tensor" => Construction::Tensor(Arc::new(TensorTorus::new(Arc::new(matrix_lie_from_json(field(v, "g")?)?), uint(v, "n")?))),
        "psl3" => Construction::Psl3(Arc::new(Psl3Torus::new(torus_from_json(field(v, "coordinates")?)?)?), optional_anti(v)?),
        "tkk" => Construction::Tkk(Arc::new(Tkk::new(Arc::new(torus_from_json(field(v, "jordan")?)?))?)),
        "tkk_hermitian" => {
            let a = torus_from_json(field(v, "coordinates")?)?;
            let s = a.anti_involution(anti_kind_from_json(field(v, "sigma")?)?)?;
            let ell = uint(v, "ell")?;
            let h = HermitianMatrix::new(ell, a, s)?;
            let idem = (0..ell).map(|i| h.idempotent(i)).collect();
            Construction::Tkk(Arc::new(Tkk::with_idempotents(Arc::new(h), idem)?))
        }
        "tkk_redcliff" => {
            let r = RedCliff::new(uint(v, "n")?, lattice_vectors(field(v, "taus")?, "taus")?)?;
            let idem = vec![r.idempotent(0), r.idempotent(1)];
            Construction::Tkk(Arc::new(Tkk::with_idempotents(Arc::new(r), idem)?))
        }
        "tits_b" => Construction::TitsB(Arc::new(TitsB::new(uint(v, "ell")?, uint(v, "n")?, lattice_vectors(field(v, "taus")?, "taus")?)?)),
        "multiloop" => multiloop_from_json(v)?,
        other => return Err(bad(format!("unknown construction \"{other}\""))),
    };
    let involution = match v.get("involution").and_then(Value::as_str) {
        None | Some("chevalley") => InvolutionChoice::Chevalley,
        Some("identity") => InvolutionChoice::Identity,
        Some(other) => return Err(bad(format!("unknown involution \"{other}\""))),
    };
    Ok(LieSpec { construction, window: window_of(v)?, involution })
}

/// `{"preset": "sl2_example"}` or `{"g", "sigmas", "periods", "hprime",
/// "tau"?, "psi"?}` with matrices acting on the basis of `g`.
fn multiloop_from_json(v: &Value) -> Result<Construction> {
    let psi = v.get("psi").filter(|x| !x.is_null()).map(|p| square(p, "psi")).transpose()?;
    let tau = v.get("tau").filter(|x| !x.is_null()).map(|t| square(t, "tau")).transpose()?;
    if let Some(p) = v.get("preset") {
        if p.as_str() != Some("sl2_example") {
            return Err(bad(format!("unknown multiloop preset {p}")));
        }
        let (ml, t) = MultiLoop::sl2_example()?;
        return Ok(Construction::MultiLoop(Arc::new(ml), Some(tau.unwrap_or(t)), psi));
    }
    let g = Arc::new(matrix_lie_from_json(field(v, "g")?)?);
    let sigmas = array(field(v, "sigmas")?, "sigmas")?.iter().map(|s| square(s, "sigma")).collect::<Result<Vec<_>>>()?;
    let periods = array(field(v, "periods")?, "periods")?
        .iter()
        .map(|p| p.as_i64().ok_or_else(|| bad("periods must be integers")))
        .collect::<Result<Vec<_>>>()?;
    let hprime = matrix(field(v, "hprime")?, 1, "hprime")?;
    Ok(Construction::MultiLoop(Arc::new(MultiLoop::new(g, sigmas, periods, hprime)?), tau, psi))
}

/// A subspace of `K^n`: `"full"`, `"zero"` or a list of spanning rows.
fn subspace(v: &Value, n: usize, what: &str) -> Result<Subspace> {
    match v {
        Value::String(s) if s == "full" => Ok(Subspace::full(n)),
        Value::String(s) if s == "zero" => Ok(Subspace::zero(n)),
        _ => {
            let rows = matrix(v, 1, what)?;
            if let Some(r) = rows.iter().find(|r| r.len() != n) {
                return Err(bad(format!("{what} row has length {}, expected {n}", r.len())));
            }
            Ok(Subspace::span(n, &rows))
        }
    }
}

fn subspace_or_full(v: &Value, key: &str, n: usize) -> Result<Subspace> {
    match v.get(key) {
        None => Ok(Subspace::full(n)),
        Some(x) => subspace(x, n, key),
    }
}

/// `{"kind": "triple|degree_only|full_scder|skew_example|explicit", "U",
/// "Uprime", "GammaPrime", "gamma", "Uplus", "Uminus", "terms"}`; omitted
/// spaces default to all of `Hom(Λ, K)`.
pub fn d_kind_from_json(v: &Value, n: usize) -> Result<DKind> {
    Ok(match text(v, "kind")? {
        "full_scder" => DKind::FullScder,
        "degree_only" => DKind::DegreeOnly { u: subspace_or_full(v, "U", n)? },
        "triple" => DKind::Triple {
            u: subspace_or_full(v, "U", n)?,
            uprime: subspace_or_full(v, "Uprime", n)?,
            gamma_prime: lattice_vectors(field(v, "GammaPrime")?, "GammaPrime")?,
        },
        "skew_example" => DKind::SkewExample {
            u: subspace_or_full(v, "U", n)?,
            gamma: lattice_vector(field(v, "gamma")?)?,
            uplus: subspace_or_full(v, "Uplus", n)?,
            uminus: subspace(field(v, "Uminus")?, n, "Uminus")?,
        },
        "explicit" => DKind::Explicit(
            array(field(v, "terms")?, "terms")?
                .iter()
                .map(|t| Ok((lattice_vector(field(t, "mu")?)?, GroupHom::new(scalars(field(t, "theta")?, 1, "theta")?))))
                .collect::<Result<Vec<_>>>()?,
        ),
        other => return Err(bad(format!("unknown D kind \"{other}\""))),
    })
}

/// `{"generators": [{"mu", "index"}], "entries": [{"pair": [i, j], "value":
/// [{"mu", "lambda", "c"?}]}]}`; each value term is `c · c^(mu)_lambda`.
pub fn kappa_from_json(v: &Value, d: &DSubalgebra) -> Result<AffineCocycle> {
    if v.is_null() {
        return Ok(AffineCocycle::Zero);
    }
    let gens = array(field(v, "generators")?, "generators")?
        .iter()
        .map(|g| Ok((lattice_vector(field(g, "mu")?)?, uint(g, "index")?)))
        .collect::<Result<Vec<DAtom>>>()?;
    let mut entries = Vec::new();
    for e in array(field(v, "entries")?, "entries")? {
        let pair = array(field(e, "pair")?, "pair")?;
        let idx = |k: usize| pair.get(k).and_then(Value::as_u64).map(|x| x as usize).ok_or_else(|| bad("pair must be two indices"));
        let mut value = DualElement::zero();
        for t in array(field(e, "value")?, "value")? {
            let c = t.get("c").map(|c| scalar_in(c, 1)).transpose()?.unwrap_or_else(Scalar::one);
            let atom = DualElement::atom(lattice_vector(field(t, "mu")?)?, &lattice_vector(field(t, "lambda")?)?);
            value.add_scaled(&atom, &c);
        }
        entries.push((idx(0)?, idx(1)?, value));
    }
    AffineCocycle::table(d, &gens, &entries)
}

/// A parsed EALA spec: `{"lie": <lie spec>, "D": <D spec>, "kappa"?: <κ
/// table>, "meet"?: bool}`. With `"meet": true` the pair is replaced by
/// `(D ∩ D_τ, κ + κ_τ)`.
#[derive(Clone, Debug)]
pub struct EalaSpec {
    pub lie: LieSpec,
    pub d: DSubalgebra,
    pub kappa: AffineCocycle,
    pub meet: bool,
}

pub fn eala_from_json(v: &Value) -> Result<EalaSpec> {
    let lie = lie_from_json(field(v, "lie")?)?;
    let l = lie.construction.lie();
    let kind = d_kind_from_json(field(v, "D")?, l.nullity())?;
    let d = DSubalgebra::build(l, kind)?;
    let kappa = kappa_from_json(v.get("kappa").unwrap_or(&Value::Null), &d)?;
    let meet = v.get("meet").and_then(Value::as_bool).unwrap_or(false);
    Ok(EalaSpec { lie, d, kappa, meet })
}

/// The three kinds of spec file, told apart by their top-level keys.
#[derive(Clone, Debug)]
pub enum AnySpec {
    Torus(Box<TorusAlgebra>, Option<i64>),
    Lie(LieSpec),
    Eala(Box<EalaSpec>),
}

pub fn any_from_json(v: &Value) -> Result<AnySpec> {
    if v.get("construction").is_some() {
        lie_from_json(v).map(AnySpec::Lie)
    } else if v.get("lie").is_some() {
        eala_from_json(v).map(|e| AnySpec::Eala(Box::new(e)))
    } else if v.get("family").is_some() {
        Ok(AnySpec::Torus(Box::new(torus_from_json(v)?), window_of(v)?))
    } else {
        Err(bad("expected a \"construction\", \"lie\" or \"family\" field"))
    }
}

impl AnySpec {
    pub fn window(&self) -> Option<i64> {
        match self {
            AnySpec::Torus(_, w) => *w,
            AnySpec::Lie(l) => l.window,
            AnySpec::Eala(e) => e.lie.window,
        }
    }

    pub fn degree_window(&self, cli: Option<i64>) -> DegreeWindow {
        DegreeWindow::new(cli.or(self.window()).unwrap_or(2))
    }
}
