//! Polynomials in the entries of a complex symmetric matrix.
//!
//! The variables `z_ij = z_ji` of an `n × n` symmetric matrix are flattened
//! row by row over the upper triangle: `z11, z12, …, z1n, z22, …, znn`. The
//! flat exponent of an off-diagonal variable counts `z_ij` once; the
//! [`ExponentMatrix`] view splits it evenly between `(i, j)` and `(j, i)`.

mod det;

pub(crate) use det::check_order;
pub use det::{
    inversion_image, poly_matrix_determinant, principal_minor, symbolic_adjugate,
    symbolic_determinant, variable_matrix, BlockInversion, DET_ORDER_CAP,
};

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::SymError;
use crate::poly::{ExponentVector, Polynomial, Weights};

const SYMMETRY_TOL: f64 = 1e-12;

/// Determinants below this modulus make a congruence matrix singular.
pub const SINGULAR_TOL: f64 = 1e-10;

/// Condition numbers above this are flagged on `SZS⁻¹` transforms.
pub const CONDITION_WARNING: f64 = 1e8;

/// Indexing of the symmetric variables `z_ij`, `i ≤ j`, of a matrix of order `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymVarSpace {
    order: usize,
}

impl SymVarSpace {
    /// # Panics
    /// If `order` is zero.
    pub fn new(order: usize) -> Self {
        assert!(order > 0, "symmetric variable space needs a positive order");
        SymVarSpace { order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `n(n+1)/2`.
    pub fn nvars(&self) -> usize {
        self.order * (self.order + 1) / 2
    }

    /// Flat index of `z_ij`; `(i, j)` and `(j, i)` name the same variable. 0-based.
    pub fn index(&self, i: usize, j: usize) -> usize {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        debug_assert!(b < self.order);
        a * self.order - a * a.saturating_sub(1) / 2 + (b - a)
    }

    /// The `(i, j)` pair with `i ≤ j` behind a flat index.
    pub fn pair(&self, k: usize) -> (usize, usize) {
        let mut k = k;
        for i in 0..self.order {
            let row = self.order - i;
            if k < row {
                return (i, i + k);
            }
            k -= row;
        }
        panic!("flat index out of range for order {}", self.order)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.nvars()).map(move |k| self.pair(k))
    }

    pub fn is_diagonal(&self, k: usize) -> bool {
        let (i, j) = self.pair(k);
        i == j
    }

    /// The variable `z_ij` as a polynomial.
    pub fn var(&self, i: usize, j: usize) -> Polynomial {
        Polynomial::var(self.nvars(), self.index(i, j)).expect("index within space")
    }

    /// Upper-triangle entries of a square matrix, checked for symmetry.
    pub fn flatten(&self, m: &DMatrix<f64>) -> Result<Vec<f64>, SymError> {
        check_symmetric(m, self.order)?;
        Ok(self.pairs().map(|(i, j)| m[(i, j)]).collect())
    }

    /// Rebuilds the full symmetric matrix from a flat vector.
    pub fn unflatten(&self, flat: &[f64]) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.order, self.order);
        for (k, (i, j)) in self.pairs().enumerate() {
            m[(i, j)] = flat[k];
            m[(j, i)] = flat[k];
        }
        m
    }

    /// Flat positions of the diagonal variables `z_11, …, z_nn`.
    pub fn diagonal_indices(&self) -> Vec<usize> {
        (0..self.order).map(|i| self.index(i, i)).collect()
    }

    /// True if the monomial uses only diagonal variables (constants included).
    pub fn is_diagonal_monomial(&self, e: &ExponentVector) -> bool {
        e.iter()
            .enumerate()
            .all(|(k, &x)| x == 0 || self.is_diagonal(k))
    }

    /// True if the monomial is nonconstant and uses only off-diagonal variables.
    pub fn is_offdiagonal_monomial(&self, e: &ExponentVector) -> bool {
        !e.is_constant()
            && e.iter()
                .enumerate()
                .all(|(k, &x)| x == 0 || !self.is_diagonal(k))
    }

    pub(crate) fn check(&self, f: &Polynomial) -> Result<(), SymError> {
        if f.nvars() != self.nvars() {
            return Err(crate::error::PolyError::SpaceMismatch {
                left: self.nvars(),
                right: f.nvars(),
            }
            .into());
        }
        Ok(())
    }
}

pub(crate) fn check_symmetric(m: &DMatrix<f64>, order: usize) -> Result<(), SymError> {
    if m.nrows() != order || m.ncols() != order {
        return Err(SymError::OrderMismatch {
            expected: order,
            found: m.nrows().max(m.ncols()),
        });
    }
    let scale = m.amax().max(1.0);
    for i in 0..order {
        for j in (i + 1)..order {
            if (m[(i, j)] - m[(j, i)]).abs() > SYMMETRY_TOL * scale {
                return Err(SymError::NotSymmetric { row: i, col: j });
            }
        }
    }
    Ok(())
}

/// A symmetric matrix stored by its upper triangle.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymMatrix<T> {
    order: usize,
    upper: Vec<T>,
}

/// A point `M = X + iY` of the complex symmetric matrices.
pub type MatrixPoint = SymMatrix<Complex64>;

impl<T: Clone> SymMatrix<T> {
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let space = SymVarSpace::new(order);
        SymMatrix {
            order,
            upper: space.pairs().map(|(i, j)| f(i, j)).collect(),
        }
    }

    pub fn from_flat(order: usize, upper: Vec<T>) -> Self {
        assert_eq!(upper.len(), order * (order + 1) / 2);
        SymMatrix { order, upper }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.upper[SymVarSpace::new(self.order).index(i, j)]
    }

    pub fn flat(&self) -> &[T] {
        &self.upper
    }
}

impl MatrixPoint {
    /// `X + iY` from real symmetric parts.
    pub fn from_parts(real: &DMatrix<f64>, imag: &DMatrix<f64>) -> Result<Self, SymError> {
        let space = SymVarSpace::new(real.nrows());
        let re = space.flatten(real)?;
        let im = space.flatten(imag)?;
        Ok(SymMatrix {
            order: space.order(),
            upper: re
                .into_iter()
                .zip(im)
                .map(|(a, b)| Complex64::new(a, b))
                .collect(),
        })
    }

    /// `i·I_n`.
    pub fn i_identity(order: usize) -> Self {
        SymMatrix::from_fn(order, |i, j| {
            if i == j {
                Complex64::i()
            } else {
                Complex64::zero()
            }
        })
    }

    pub fn imag_part(&self) -> DMatrix<f64> {
        let space = SymVarSpace::new(self.order);
        let flat: Vec<f64> = self.upper.iter().map(|z| z.im).collect();
        space.unflatten(&flat)
    }
}

/// A monomial's exponents as a symmetric matrix: integer diagonal, half-integer off-diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentMatrix {
    order: usize,
    entries: Vec<Ratio<i64>>,
}

impl ExponentMatrix {
    /// `α_ii = e_ii`, `α_ij = α_ji = e_ij / 2`.
    pub fn from_flat(space: &SymVarSpace, e: &ExponentVector) -> Self {
        let n = space.order();
        let mut entries = vec![Ratio::zero(); n * n];
        for (k, (i, j)) in space.pairs().enumerate() {
            let v = i64::from(e[k]);
            if i == j {
                entries[i * n + i] = Ratio::from_integer(v);
            } else {
                entries[i * n + j] = Ratio::new(v, 2);
                entries[j * n + i] = Ratio::new(v, 2);
            }
        }
        ExponentMatrix { order: n, entries }
    }

    pub fn get(&self, i: usize, j: usize) -> Ratio<i64> {
        self.entries[i * self.order + j]
    }

    /// Inverse of [`ExponentMatrix::from_flat`]; `None` if the matrix is not a valid exponent matrix.
    pub fn to_flat(&self, space: &SymVarSpace) -> Option<ExponentVector> {
        if space.order() != self.order {
            return None;
        }
        let mut out = Vec::with_capacity(space.nvars());
        for (i, j) in space.pairs() {
            let v = if i == j {
                self.get(i, i)
            } else {
                if self.get(i, j) != self.get(j, i) {
                    return None;
                }
                self.get(i, j) * 2
            };
            if !v.is_integer() || *v.numer() < 0 {
                return None;
            }
            out.push(u32::try_from(*v.numer()).ok()?);
        }
        Some(ExponentVector::new(out))
    }

    /// `|α| = Σ_{i,j} |α_ij|`.
    pub fn abs_sum(&self) -> Ratio<i64> {
        self.entries.iter().map(|r| r.abs()).sum()
    }

    /// Frobenius pairing `⟨W, α⟩_F`.
    pub fn frobenius(&self, w: &DMatrix<f64>) -> f64 {
        let n = self.order;
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| {
                let r = self.get(i, j);
                w[(i, j)] * (*r.numer() as f64 / *r.denom() as f64)
            })
            .sum()
    }
}

/// `f(M)` with `z_ij ↦ M_ij`.
pub fn eval_at_matrix(
    space: &SymVarSpace,
    f: &Polynomial,
    m: &MatrixPoint,
) -> Result<Complex64, SymError> {
    space.check(f)?;
    if m.order() != space.order() {
        return Err(SymError::OrderMismatch {
            expected: space.order(),
            found: m.order(),
        });
    }
    Ok(f.evaluate(m.flat())?)
}

/// `f_diag`: off-diagonal variables set to zero, presented over `z_11, …, z_nn`.
pub fn diag_restriction(space: &SymVarSpace, f: &Polynomial) -> Result<Polynomial, SymError> {
    space.check(f)?;
    let diag = space.diagonal_indices();
    let kept = f.filter_terms(|e, _| space.is_diagonal_monomial(e));
    Ok(kept.map_terms(space.order(), |e, c| {
        (ExponentVector::new(diag.iter().map(|&k| e[k]).collect()), c)
    })?)
}

/// `f(Z_J)`: variables with an index outside `J` set to zero, reindexed to order `|J|`.
pub fn minor_restriction(
    space: &SymVarSpace,
    f: &Polynomial,
    subset: &[usize],
) -> Result<(SymVarSpace, Polynomial), SymError> {
    space.check(f)?;
    let n = space.order();
    let mut j: Vec<usize> = subset.to_vec();
    j.sort_unstable();
    j.dedup();
    if j.is_empty() || j.len() != subset.len() || j.iter().any(|&x| x >= n) {
        return Err(SymError::BadIndexSet { order: n });
    }
    let sub = SymVarSpace::new(j.len());
    let position = |i: usize| j.iter().position(|&x| x == i);
    let kept = f.filter_terms(|e, _| {
        e.iter().enumerate().all(|(k, &x)| {
            let (a, b) = space.pair(k);
            x == 0 || (position(a).is_some() && position(b).is_some())
        })
    });
    let g = kept.map_terms(sub.nvars(), |e, c| {
        let mut out = vec![0; sub.nvars()];
        for (k, &x) in e.iter().enumerate() {
            if x > 0 {
                let (a, b) = space.pair(k);
                let (pa, pb) = (position(a).unwrap(), position(b).unwrap());
                out[sub.index(pa, pb)] += x;
            }
        }
        (ExponentVector::new(out), c)
    })?;
    Ok((sub, g))
}

/// Which congruence-type substitution [`congruence_transform`] applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CongruenceKind {
    /// `Z ↦ S Z Sᵀ`.
    Transpose,
    /// `Z ↦ sym(S Z S⁻¹)`, the symmetric part of the similarity transform.
    Inverse,
}

/// Result of [`congruence_transform`], with the condition number of `S`.
#[derive(Clone, Debug, PartialEq)]
pub struct Congruence {
    pub polynomial: Polynomial,
    pub condition: f64,
}

impl Congruence {
    pub fn ill_conditioned(&self) -> bool {
        self.condition > CONDITION_WARNING
    }
}

/// `f(S Z Sᵀ)` or `f(sym(S Z S⁻¹))` by exact substitution.
pub fn congruence_transform(
    space: &SymVarSpace,
    f: &Polynomial,
    s: &DMatrix<f64>,
    kind: CongruenceKind,
) -> Result<Congruence, SymError> {
    space.check(f)?;
    let n = space.order();
    if s.nrows() != n || s.ncols() != n {
        return Err(SymError::OrderMismatch {
            expected: n,
            found: s.nrows().max(s.ncols()),
        });
    }
    let det = s.determinant();
    if det.abs() < SINGULAR_TOL {
        return Err(SymError::Singular { det });
    }
    let sv = s.clone().singular_values();
    let condition = sv.max() / sv.min();
    let right = match kind {
        CongruenceKind::Transpose => s.transpose(),
        CongruenceKind::Inverse => s
            .clone()
            .try_inverse()
            .ok_or(SymError::Singular { det })?,
    };
    // Entry (i, j) of S Z R is Σ_{k,l} S_ik z_kl R_lj.
    let entry = |i: usize, j: usize| -> Vec<f64> {
        let mut lin = vec![0.0; space.nvars()];
        for k in 0..n {
            for l in 0..n {
                lin[space.index(k, l)] += s[(i, k)] * right[(l, j)];
            }
        }
        lin
    };
    let images: Vec<Polynomial> = space
        .pairs()
        .map(|(i, j)| {
            let a = entry(i, j);
            let lin: Vec<Complex64> = match kind {
                CongruenceKind::Transpose => a.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
                CongruenceKind::Inverse => {
                    let b = entry(j, i);
                    a.iter()
                        .zip(&b)
                        .map(|(x, y)| Complex64::new(0.5 * (x + y), 0.0))
                        .collect()
                }
            };
            Polynomial::linear(&lin, Complex64::zero())
        })
        .collect();
    Ok(Congruence {
        polynomial: f.substitute(&images)?,
        condition,
    })
}

/// `f((Z_{π(j),π(k)})_{j,k})`: relabels `z_ij ↦ z_{π(i)π(j)}`. 0-based `π`.
pub fn permute_indices(
    space: &SymVarSpace,
    f: &Polynomial,
    perm: &[usize],
) -> Result<Polynomial, SymError> {
    space.check(f)?;
    let n = space.order();
    let mut seen = vec![false; n];
    if perm.len() != n
        || !perm
            .iter()
            .all(|&p| p < n && !std::mem::replace(&mut seen[p], true))
    {
        return Err(SymError::BadPermutation { order: n });
    }
    Ok(f.map_terms(space.nvars(), |e, c| {
        let mut out = vec![0; space.nvars()];
        for (k, &x) in e.iter().enumerate() {
            let (i, j) = space.pair(k);
            out[space.index(perm[i], perm[j])] += x;
        }
        (ExponentVector::new(out), c)
    })?)
}

/// `∂_V f = Σ_{i≤j} V_ij ∂f/∂z_ij`, the derivative of `t ↦ f(Z + tV)` at 0.
pub fn matrix_directional_derivative(
    space: &SymVarSpace,
    f: &Polynomial,
    v: &DMatrix<f64>,
) -> Result<Polynomial, SymError> {
    space.check(f)?;
    let flat = space.flatten(v)?;
    Ok(f.directional_derivative(&flat)?)
}

/// A symmetric weight matrix for Frobenius initial forms.
#[derive(Clone, Debug, PartialEq)]
pub enum WeightMatrix {
    /// Rational entries, row-major; pairings and ties are exact.
    Exact(Vec<Vec<Ratio<i64>>>),
    Float(DMatrix<f64>),
}

impl WeightMatrix {
    pub fn order(&self) -> usize {
        match self {
            WeightMatrix::Exact(rows) => rows.len(),
            WeightMatrix::Float(m) => m.nrows(),
        }
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        match self {
            WeightMatrix::Exact(rows) => {
                let n = rows.len();
                DMatrix::from_fn(n, n, |i, j| {
                    rows[i]
                        .get(j)
                        .map(|r| *r.numer() as f64 / *r.denom() as f64)
                        .unwrap_or(f64::NAN)
                })
            }
            WeightMatrix::Float(m) => m.clone(),
        }
    }

    /// Flat weights `w_k = W_ij` so that `⟨w, e⟩ = Σ_i W_ii e_ii + Σ_{i<j} W_ij e_ij = ⟨W, α⟩_F`.
    pub fn flat_weights(&self, space: &SymVarSpace) -> Result<Weights, SymError> {
        let n = space.order();
        match self {
            WeightMatrix::Float(m) => Ok(Weights::Float(space.flatten(m)?)),
            WeightMatrix::Exact(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(SymError::OrderMismatch {
                        expected: n,
                        found: rows.len(),
                    });
                }
                for i in 0..n {
                    for j in (i + 1)..n {
                        if rows[i][j] != rows[j][i] {
                            return Err(SymError::NotSymmetric { row: i, col: j });
                        }
                    }
                }
                Ok(Weights::Exact(space.pairs().map(|(i, j)| rows[i][j]).collect()))
            }
        }
    }
}

/// `init_W(f)`: the terms maximizing the Frobenius pairing `⟨W, α⟩_F`.
pub fn frobenius_initial_form(
    space: &SymVarSpace,
    f: &Polynomial,
    w: &WeightMatrix,
) -> Result<Polynomial, SymError> {
    space.check(f)?;
    let weights = w.flat_weights(space)?;
    Ok(f.initial_form(&weights)?)
}

/// Frobenius pairing of every term, keyed like `f.terms()`.
pub fn frobenius_pairings(
    space: &SymVarSpace,
    f: &Polynomial,
    w: &DMatrix<f64>,
) -> Result<Vec<(ExponentVector, f64)>, SymError> {
    space.check(f)?;
    let weights = Weights::Float(space.flatten(w)?);
    Ok(f.terms().map(|(e, _)| (e.clone(), weights.pairing(e))).collect())
}

/// `f_λ(Z) = λ^{-φ} f(λ^W ∘ Z)` with `φ` the maximal Frobenius pairing over `supp(f)`.
pub fn hadamard_scale(
    space: &SymVarSpace,
    f: &Polynomial,
    w: &DMatrix<f64>,
    lambda: f64,
) -> Result<Polynomial, SymError> {
    space.check(f)?;
    if !(lambda > 0.0) {
        return Err(SymError::NonPositiveScale(lambda));
    }
    let weights = Weights::Float(space.flatten(w)?);
    let phi = f
        .terms()
        .map(|(e, _)| weights.pairing(e))
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(f.map_terms(f.nvars(), |e, c| {
        (e.clone(), c * lambda.powf(weights.pairing(e) - phi))
    })?)
}

/// The matrix `V^{(ij)}` with ones at `(i,i), (j,j), (i,j), (j,i)`.
pub fn v_matrix(order: usize, i: usize, j: usize) -> DMatrix<f64> {
    let mut v = DMatrix::zeros(order, order);
    v[(i, i)] = 1.0;
    v[(j, j)] = 1.0;
    v[(i, j)] = 1.0;
    v[(j, i)] = 1.0;
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn det2() -> (SymVarSpace, Polynomial) {
        let s = SymVarSpace::new(2);
        let f = &(&s.var(0, 0) * &s.var(1, 1)) - &s.var(0, 1).pow(2);
        (s, f)
    }

    #[test]
    fn flat_indexing_is_a_bijection() {
        for n in 1..=7 {
            let s = SymVarSpace::new(n);
            let mut seen = vec![false; s.nvars()];
            for i in 0..n {
                for j in i..n {
                    let k = s.index(i, j);
                    assert_eq!(k, s.index(j, i));
                    assert_eq!(s.pair(k), (i, j));
                    assert!(!seen[k]);
                    seen[k] = true;
                }
            }
            assert!(seen.into_iter().all(|x| x));
        }
    }

    #[test]
    fn det2_at_i_identity() {
        let (s, f) = det2();
        let v = eval_at_matrix(&s, &f, &MatrixPoint::i_identity(2)).unwrap();
        assert!((v + Complex64::one()).norm() < 1e-15);
        let z12 = s.var(0, 1);
        assert_eq!(
            eval_at_matrix(&s, &z12, &MatrixPoint::i_identity(2)).unwrap(),
            Complex64::zero()
        );
        assert!(eval_at_matrix(&s, &f, &MatrixPoint::i_identity(3)).is_err());
    }

    #[test]
    fn diag_restriction_examples() {
        let (s, f) = det2();
        let d = diag_restriction(&s, &f).unwrap();
        let z = |i| Polynomial::var(2, i).unwrap();
        assert_eq!(d, &z(0) * &z(1));
        let off = &s.var(0, 1).pow(2) + &s.var(0, 1);
        assert!(diag_restriction(&s, &off).unwrap().is_zero());
    }

    #[test]
    fn minor_restriction_examples() {
        let (s, f) = det2();
        let (sub, g) = minor_restriction(&s, &f, &[0, 1]).unwrap();
        assert_eq!(sub.order(), 2);
        assert_eq!(g, f);
        let (_, h) = minor_restriction(&s, &f, &[0]).unwrap();
        assert!(h.is_zero());
        let s3 = SymVarSpace::new(3);
        let d3 = symbolic_determinant(&s3).unwrap();
        let (_, k) = minor_restriction(&s3, &d3, &[0, 1]).unwrap();
        assert!(k.is_zero());
        assert!(minor_restriction(&s, &f, &[]).is_err());
        assert!(minor_restriction(&s, &f, &[2]).is_err());
    }

    #[test]
    fn directional_derivative_of_det2_along_v12() {
        let (s, f) = det2();
        let d = matrix_directional_derivative(&s, &f, &v_matrix(2, 0, 1)).unwrap();
        let expected = &(&s.var(0, 0) + &s.var(1, 1)) - &s.var(0, 1).scale(Complex64::new(2.0, 0.0));
        assert_eq!(d, expected);
        let mut b11 = DMatrix::zeros(2, 2);
        b11[(0, 0)] = 1.0;
        assert_eq!(
            matrix_directional_derivative(&s, &f, &b11).unwrap(),
            f.partial_derivative(s.index(0, 0)).unwrap()
        );
        let asym = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        assert!(matches!(
            matrix_directional_derivative(&s, &f, &asym),
            Err(SymError::NotSymmetric { .. })
        ));
    }

    #[test]
    fn exponent_matrix_roundtrip_and_norm() {
        let s = SymVarSpace::new(2);
        let e = ExponentVector::new(vec![0, 1, 0]);
        let m = ExponentMatrix::from_flat(&s, &e);
        assert_eq!(m.get(0, 1), Ratio::new(1, 2));
        assert_eq!(m.get(1, 0), Ratio::new(1, 2));
        assert_eq!(m.abs_sum(), Ratio::from_integer(1));
        assert_eq!(m.to_flat(&s), Some(e));
    }

    #[test]
    fn permutation_identity_and_composition() {
        let s = SymVarSpace::new(3);
        let f = &(&s.var(0, 1) * &s.var(2, 2)) + &s.var(0, 2).pow(2);
        assert_eq!(permute_indices(&s, &f, &[0, 1, 2]).unwrap(), f);
        let p = [1, 2, 0];
        let twice = permute_indices(&s, &permute_indices(&s, &f, &p).unwrap(), &p).unwrap();
        // Substituting with π twice equals substituting with i ↦ π(π(i)).
        let pp: Vec<usize> = (0..3).map(|i| p[p[i]]).collect();
        assert_eq!(twice, permute_indices(&s, &f, &pp).unwrap());
        assert!(permute_indices(&s, &f, &[0, 0, 1]).is_err());
    }

    #[test]
    fn congruence_with_identity_is_identity() {
        let (s, f) = det2();
        let id = DMatrix::identity(2, 2);
        for kind in [CongruenceKind::Transpose, CongruenceKind::Inverse] {
            let out = congruence_transform(&s, &f, &id, kind).unwrap();
            assert!(out.polynomial.max_coeff_diff(&f) < 1e-14);
            assert!(!out.ill_conditioned());
        }
        let singular = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 4.0]);
        assert!(matches!(
            congruence_transform(&s, &f, &singular, CongruenceKind::Transpose),
            Err(SymError::Singular { .. })
        ));
    }

    #[test]
    fn det2_under_congruence_scales_by_det_squared() {
        let (s, f) = det2();
        let m = DMatrix::from_row_slice(2, 2, &[2.0, -1.0, 0.5, 3.0]);
        let d = m.determinant();
        let out = congruence_transform(&s, &f, &m, CongruenceKind::Transpose).unwrap();
        assert!(out.polynomial.max_coeff_diff(&f.scale(Complex64::new(d * d, 0.0))) < 1e-12);
    }

    #[test]
    fn frobenius_initial_form_of_det3_with_indefinite_weight() {
        let s = SymVarSpace::new(3);
        let f = symbolic_determinant(&s).unwrap();
        let w = DMatrix::from_row_slice(3, 3, &[4.0, 4.0, 6.0, 4.0, 4.0, 6.0, 6.0, 6.0, 0.0]);
        let mut pairings: Vec<f64> = frobenius_pairings(&s, &f, &w)
            .unwrap()
            .into_iter()
            .map(|(_, p)| p)
            .collect();
        pairings.sort_by(f64::total_cmp);
        assert_eq!(pairings, vec![8.0, 8.0, 16.0, 16.0, 16.0]);
        let init = frobenius_initial_form(&s, &f, &WeightMatrix::Float(w)).unwrap();
        let two = Complex64::new(2.0, 0.0);
        let expected = &(&(-&(&s.var(0, 0) * &s.var(1, 2).pow(2)))
            - &(&s.var(1, 1) * &s.var(0, 2).pow(2)))
            + &(&(&s.var(0, 1) * &s.var(0, 2)) * &s.var(1, 2)).scale(two);
        assert_eq!(init, expected);
    }

    #[test]
    fn frobenius_initial_form_trivial_weights() {
        let (s, f) = det2();
        let zero = WeightMatrix::Float(DMatrix::zeros(2, 2));
        assert_eq!(frobenius_initial_form(&s, &f, &zero).unwrap(), f);
        let id = WeightMatrix::Exact(vec![
            vec![Ratio::from_integer(1), Ratio::from_integer(0)],
            vec![Ratio::from_integer(0), Ratio::from_integer(1)],
        ]);
        assert_eq!(
            frobenius_initial_form(&s, &f, &id).unwrap(),
            &s.var(0, 0) * &s.var(1, 1)
        );
    }

    #[test]
    fn hadamard_scale_limits() {
        let (s, f) = det2();
        let w = DMatrix::identity(2, 2);
        assert_eq!(hadamard_scale(&s, &f, &w, 1.0).unwrap(), f);
        let scaled = hadamard_scale(&s, &f, &w, 10.0).unwrap();
        assert_eq!(scaled.coeff(&ExponentVector::new(vec![1, 0, 1])), Complex64::one());
        assert!((scaled.coeff(&ExponentVector::new(vec![0, 2, 0])) + 0.01).norm() < 1e-15);
        assert!(hadamard_scale(&s, &f, &w, 0.0).is_err());
    }
}
