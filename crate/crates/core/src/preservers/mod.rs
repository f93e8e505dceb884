//! Stability preservers as symbolic transforms, with an audit harness.
//!
//! Each [`PreserverSpec`] maps a polynomial to a polynomial. Most of them are
//! known to map stable (or K-stable, or psd-stable) polynomials to stable
//! polynomials or zero under conditions on their parameters; [`audit`] runs
//! the falsifier before and after and flags any clean input whose image has
//! a verified counterexample while the guarantee applies.

mod audit;
mod lieb_sokal;

pub use audit::{audit, guarantee, AuditReport, Guarantee};
pub use lieb_sokal::{lieb_sokal_transform, ratio_condition_check, RatioReport};

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::PreserverError;
use crate::poly::{ExponentVector, Polynomial, Weights};
use crate::space::Space;
use crate::symmat::{self, BlockInversion, CongruenceKind, SymVarSpace, WeightMatrix};

/// A transform from the preserver catalogue. Indices are 0-based.
#[derive(Clone, Debug, PartialEq)]
pub enum PreserverSpec {
    /// `f(z_σ(1), …, z_σ(n))`.
    Permute(Vec<usize>),
    /// `c · f(a_1 z_1, …, a_n z_n)`, `a > 0`.
    Scale { c: Complex64, a: Vec<f64> },
    /// Substitutes `z_j := z_i`.
    Identify { i: usize, j: usize },
    /// Substitutes `z_i := b`, `Im(b) ≥ 0`.
    Specialize { i: usize, b: Complex64 },
    /// `z_i^{deg_i f} · f(…, -1/z_i, …)`.
    Invert(usize),
    Differentiate(usize),
    /// `∂_v f`.
    DirDerivative(Vec<f64>),
    /// `g(y) = f(a + Σ_j y_j v^{(j)})` in `k` fresh variables.
    Affine { a: Vec<Complex64>, dirs: Vec<Vec<f64>> },
    InitialForm(Weights),
    PsdDiag,
    PsdMinor(Vec<usize>),
    PsdCongruence { s: DMatrix<f64>, kind: CongruenceKind },
    PsdPermute(Vec<usize>),
    PsdDirDerivative(DMatrix<f64>),
    PsdInversion(Option<BlockInversion>),
    PsdInitialForm(WeightMatrix),
    /// `g - ∂_v f`, applied to `f`.
    LiebSokal { g: Polynomial, v: Vec<f64> },
}

impl PreserverSpec {
    pub fn name(&self) -> &'static str {
        match self {
            PreserverSpec::Permute(_) => "permute",
            PreserverSpec::Scale { .. } => "scale",
            PreserverSpec::Identify { .. } => "identify",
            PreserverSpec::Specialize { .. } => "specialize",
            PreserverSpec::Invert(_) => "invert",
            PreserverSpec::Differentiate(_) => "differentiate",
            PreserverSpec::DirDerivative(_) => "dir_derivative",
            PreserverSpec::Affine { .. } => "affine",
            PreserverSpec::InitialForm(_) => "initial_form",
            PreserverSpec::PsdDiag => "psd_diag",
            PreserverSpec::PsdMinor(_) => "psd_minor",
            PreserverSpec::PsdCongruence { .. } => "psd_congruence",
            PreserverSpec::PsdPermute(_) => "psd_permute",
            PreserverSpec::PsdDirDerivative(_) => "psd_dir_derivative",
            PreserverSpec::PsdInversion(_) => "psd_inversion",
            PreserverSpec::PsdInitialForm(_) => "psd_initial_form",
            PreserverSpec::LiebSokal { .. } => "lieb_sokal",
        }
    }

    pub fn is_psd(&self) -> bool {
        self.name().starts_with("psd_")
    }
}

/// The image of `f` and the space it lives in.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Transformed {
    pub space: Space,
    pub polynomial: Polynomial,
    /// Condition number of `S` for congruence transforms.
    pub condition: Option<f64>,
}

fn invalid(kind: &'static str, reason: impl Into<String>) -> PreserverError {
    PreserverError::InvalidParameter {
        kind,
        reason: reason.into(),
    }
}

fn check_index(kind: &'static str, i: usize, n: usize) -> Result<(), PreserverError> {
    if i >= n {
        return Err(invalid(kind, format!("index {} out of range for {n} variables", i + 1)));
    }
    Ok(())
}

fn check_permutation(kind: &'static str, p: &[usize], n: usize) -> Result<(), PreserverError> {
    let mut seen = vec![false; n];
    if p.len() != n || !p.iter().all(|&x| x < n && !std::mem::replace(&mut seen[x], true)) {
        return Err(invalid(kind, format!("not a permutation of {n} indices")));
    }
    Ok(())
}

fn sym_space<'a>(spec: &PreserverSpec, space: &'a Space) -> Result<&'a SymVarSpace, PreserverError> {
    space.as_sym().ok_or(PreserverError::WrongSpace {
        kind: spec.name(),
        expected: "symmetric",
    })
}

/// Reflects the exponent of `z_i`: `e_i ↦ d - e_i` with sign `(-1)^{e_i}`, `d = deg_i f`.
pub fn invert_variable(f: &Polynomial, i: usize) -> Result<Polynomial, PreserverError> {
    check_index("invert", i, f.nvars())?;
    let d = f.degree_in(i)?;
    if d == 0 {
        return Ok(f.clone());
    }
    Ok(f.map_terms(f.nvars(), |e, c| {
        let mut v = e.clone().into_inner();
        let k = v[i];
        v[i] = d - k;
        (ExponentVector::new(v), if k % 2 == 0 { c } else { -c })
    })?)
}

/// Applies `spec` to `f` over `space`.
pub fn apply(
    spec: &PreserverSpec,
    space: &Space,
    f: &Polynomial,
) -> Result<Transformed, PreserverError> {
    let n = space.nvars();
    if f.nvars() != n {
        return Err(crate::error::PolyError::SpaceMismatch {
            left: n,
            right: f.nvars(),
        }
        .into());
    }
    let kind = spec.name();
    let same = |p: Polynomial| Transformed {
        space: *space,
        polynomial: p,
        condition: None,
    };
    let out = match spec {
        PreserverSpec::Permute(sigma) => {
            check_permutation(kind, sigma, n)?;
            same(f.map_terms(n, |e, c| {
                let mut v = vec![0; n];
                for (i, &k) in e.iter().enumerate() {
                    v[sigma[i]] += k;
                }
                (ExponentVector::new(v), c)
            })?)
        }
        PreserverSpec::Scale { c, a } => {
            if a.len() != n {
                return Err(invalid(kind, format!("expected {n} scale factors")));
            }
            if a.iter().any(|&x| !(x > 0.0)) {
                return Err(invalid(kind, "scale factors must be positive"));
            }
            same(f.map_terms(n, |e, coeff| {
                let factor = e
                    .iter()
                    .zip(a)
                    .fold(1.0, |acc, (&k, &x)| acc * x.powi(k as i32));
                (e.clone(), coeff * c * factor)
            })?)
        }
        PreserverSpec::Identify { i, j } => {
            check_index(kind, *i, n)?;
            check_index(kind, *j, n)?;
            if i == j {
                return Err(invalid(kind, "the two indices must differ"));
            }
            same(f.map_terms(n, |e, c| {
                let mut v = e.clone().into_inner();
                v[*i] += v[*j];
                v[*j] = 0;
                (ExponentVector::new(v), c)
            })?)
        }
        PreserverSpec::Specialize { i, b } => {
            check_index(kind, *i, n)?;
            if b.im < 0.0 {
                return Err(invalid(kind, "the value must satisfy Im(b) >= 0"));
            }
            same(f.map_terms(n, |e, c| {
                let mut v = e.clone().into_inner();
                let k = std::mem::take(&mut v[*i]);
                (ExponentVector::new(v), c * b.powu(k))
            })?)
        }
        PreserverSpec::Invert(i) => same(invert_variable(f, *i)?),
        PreserverSpec::Differentiate(i) => {
            check_index(kind, *i, n)?;
            same(f.partial_derivative(*i)?)
        }
        PreserverSpec::DirDerivative(v) => same(f.directional_derivative(v)?),
        PreserverSpec::Affine { a, dirs } => {
            let g = f.affine_substitute(a, dirs)?;
            Transformed {
                space: Space::Vector(dirs.len()),
                polynomial: g,
                condition: None,
            }
        }
        PreserverSpec::InitialForm(w) => {
            if f.is_zero() {
                return Err(crate::error::PolyError::ZeroPolynomial.into());
            }
            same(f.initial_form(w)?)
        }
        PreserverSpec::PsdDiag => {
            let s = sym_space(spec, space)?;
            Transformed {
                space: Space::Vector(s.order()),
                polynomial: symmat::diag_restriction(s, f)?,
                condition: None,
            }
        }
        PreserverSpec::PsdMinor(j) => {
            let s = sym_space(spec, space)?;
            let (sub, g) = symmat::minor_restriction(s, f, j)?;
            Transformed {
                space: Space::Sym(sub),
                polynomial: g,
                condition: None,
            }
        }
        PreserverSpec::PsdCongruence { s: m, kind: k } => {
            let s = sym_space(spec, space)?;
            let c = symmat::congruence_transform(s, f, m, *k)?;
            Transformed {
                space: *space,
                polynomial: c.polynomial,
                condition: Some(c.condition),
            }
        }
        PreserverSpec::PsdPermute(pi) => {
            let s = sym_space(spec, space)?;
            same(symmat::permute_indices(s, f, pi)?)
        }
        PreserverSpec::PsdDirDerivative(v) => {
            let s = sym_space(spec, space)?;
            same(symmat::matrix_directional_derivative(s, f, v)?)
        }
        PreserverSpec::PsdInversion(blocks) => {
            let s = sym_space(spec, space)?;
            if f.is_zero() {
                return Err(crate::error::PolyError::ZeroPolynomial.into());
            }
            same(symmat::inversion_image(s, f, blocks.as_ref())?)
        }
        PreserverSpec::PsdInitialForm(w) => {
            let s = sym_space(spec, space)?;
            if f.is_zero() {
                return Err(crate::error::PolyError::ZeroPolynomial.into());
            }
            same(symmat::frobenius_initial_form(s, f, w)?)
        }
        PreserverSpec::LiebSokal { g, v } => same(lieb_sokal_transform(g, f, v)?),
    };
    Ok(out)
}
