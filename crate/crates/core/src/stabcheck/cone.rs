use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::StabError;
use crate::symmat::SymVarSpace;

/// The closed convex cone whose relative interior the imaginary parts must avoid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum ConeSpec {
    /// The nonnegative orthant of `R^n`.
    Orthant(usize),
    /// The cone generated by the given vectors.
    Polyhedral(Vec<Vec<f64>>),
    /// Positive semidefinite matrices of order `n`, in flat upper-triangle coordinates.
    Psd(usize),
    /// `K × R_{≥0}`: the inner cone with one extra nonnegative coordinate appended.
    Lifted(Box<ConeSpec>),
}

impl ConeSpec {
    /// `K × R_{≥0}`.
    pub fn lifted(&self) -> ConeSpec {
        ConeSpec::Lifted(Box::new(self.clone()))
    }

    /// Dimension of the ambient space, which must equal the number of variables.
    pub fn dim(&self) -> usize {
        match self {
            ConeSpec::Orthant(n) => *n,
            ConeSpec::Polyhedral(g) => g.first().map_or(0, Vec::len),
            ConeSpec::Psd(n) => n * (n + 1) / 2,
            ConeSpec::Lifted(inner) => inner.dim() + 1,
        }
    }

    pub fn validate(&self) -> Result<(), StabError> {
        match self {
            ConeSpec::Orthant(_) | ConeSpec::Psd(_) => Ok(()),
            ConeSpec::Polyhedral(gens) => {
                let Some(first) = gens.first() else {
                    return Err(StabError::EmptyCone);
                };
                for (k, g) in gens.iter().enumerate() {
                    if g.len() != first.len() {
                        return Err(StabError::ConeDimension {
                            cone: first.len(),
                            nvars: g.len(),
                        });
                    }
                    if g.iter().all(|&x| x == 0.0) {
                        return Err(StabError::ZeroGenerator(k));
                    }
                }
                Ok(())
            }
            ConeSpec::Lifted(inner) => inner.validate(),
        }
    }

    pub(crate) fn check_nvars(&self, nvars: usize) -> Result<(), StabError> {
        self.validate()?;
        if self.dim() != nvars {
            return Err(StabError::ConeDimension {
                cone: self.dim(),
                nvars,
            });
        }
        Ok(())
    }

    /// Length of the parameter vector describing a point of the cone.
    ///
    /// Polyhedral points are described by their generator weights, other
    /// cones by their coordinates.
    pub fn param_len(&self) -> usize {
        match self {
            ConeSpec::Polyhedral(g) => g.len(),
            ConeSpec::Lifted(inner) => inner.param_len() + 1,
            _ => self.dim(),
        }
    }

    /// The point with parameters `theta`.
    pub fn point(&self, theta: &[f64]) -> Vec<f64> {
        match self {
            ConeSpec::Polyhedral(gens) => {
                let mut out = vec![0.0; self.dim()];
                for (w, g) in theta.iter().zip(gens) {
                    for (o, x) in out.iter_mut().zip(g) {
                        *o += w * x;
                    }
                }
                out
            }
            ConeSpec::Lifted(inner) => {
                let (head, last) = theta.split_at(theta.len() - 1);
                let mut out = inner.point(head);
                out.push(last[0]);
                out
            }
            _ => theta.to_vec(),
        }
    }

    /// Interior certificate of the point with parameters `theta`: positive means relint.
    ///
    /// Minimum coordinate for the orthant, minimum eigenvalue for psd, minimum
    /// generator weight for polyhedral cones (a sufficient condition) and the
    /// minimum over both factors for a lifted cone.
    pub fn certificate(&self, theta: &[f64]) -> f64 {
        match self {
            ConeSpec::Orthant(_) | ConeSpec::Polyhedral(_) => {
                theta.iter().copied().fold(f64::INFINITY, f64::min)
            }
            ConeSpec::Psd(n) => min_eigenvalue(&SymVarSpace::new(*n).unflatten(theta)),
            ConeSpec::Lifted(inner) => {
                let (head, last) = theta.split_at(theta.len() - 1);
                inner.certificate(head).min(last[0])
            }
        }
    }

    /// Draws an interior point, returned as its parameter vector.
    ///
    /// Orthant coordinates and generator weights are uniform on `(0.1, 2)`;
    /// psd samples are `G Gᵀ + 0.1 I` with standard normal `G`.
    pub fn sample_params<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        match self {
            ConeSpec::Orthant(n) => (0..*n).map(|_| rng.random_range(0.1..2.0)).collect(),
            ConeSpec::Polyhedral(g) => (0..g.len()).map(|_| rng.random_range(0.1..2.0)).collect(),
            ConeSpec::Psd(n) => {
                let space = SymVarSpace::new(*n);
                let g = DMatrix::<f64>::from_fn(*n, *n, |_, _| rng.sample(StandardNormal));
                let m = &g * g.transpose() + DMatrix::identity(*n, *n) * 0.1;
                space.pairs().map(|(i, j)| m[(i, j)]).collect()
            }
            ConeSpec::Lifted(inner) => {
                let mut theta = inner.sample_params(rng);
                theta.push(rng.random_range(0.1..2.0));
                theta
            }
        }
    }

    /// A real point of the ambient space with standard normal coordinates.
    pub fn sample_real<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        (0..self.dim()).map(|_| rng.sample(StandardNormal)).collect()
    }

    /// Parameters of a fixed interior point: all ones, or the identity for psd.
    pub fn canonical_params(&self) -> Vec<f64> {
        match self {
            ConeSpec::Psd(n) => {
                let space = SymVarSpace::new(*n);
                space.pairs().map(|(i, j)| if i == j { 1.0 } else { 0.0 }).collect()
            }
            ConeSpec::Lifted(inner) => {
                let mut theta = inner.canonical_params();
                theta.push(1.0);
                theta
            }
            _ => vec![1.0; self.param_len()],
        }
    }

    /// Membership of a point of the ambient space in the closed cone, up to `tol`.
    pub fn contains(&self, point: &[f64], tol: f64) -> bool {
        if point.len() != self.dim() {
            return false;
        }
        match self {
            ConeSpec::Orthant(_) => point.iter().all(|&x| x >= -tol),
            ConeSpec::Psd(n) => min_eigenvalue(&SymVarSpace::new(*n).unflatten(point)) >= -tol,
            ConeSpec::Polyhedral(gens) => {
                let a = DMatrix::from_fn(point.len(), gens.len(), |i, j| gens[j][i]);
                let b = DVector::from_column_slice(point);
                let x = nnls(&a, &b);
                (&a * x - &b).norm() <= tol * b.norm().max(1.0)
            }
            ConeSpec::Lifted(inner) => {
                let (head, last) = point.split_at(point.len() - 1);
                last[0] >= -tol && inner.contains(head, tol)
            }
        }
    }
}

/// Nonnegative least squares `min ‖Ax - b‖, x ≥ 0` by the Lawson–Hanson active-set method.
fn nnls(a: &DMatrix<f64>, b: &DVector<f64>) -> DVector<f64> {
    let k = a.ncols();
    let tol = 1e-12 * a.amax().max(1.0) * b.amax().max(1.0);
    let mut x = DVector::zeros(k);
    let mut passive = vec![false; k];
    let solve = |passive: &[bool]| -> DVector<f64> {
        let cols: Vec<usize> = (0..k).filter(|&j| passive[j]).collect();
        let ap = DMatrix::from_fn(a.nrows(), cols.len(), |i, c| a[(i, cols[c])]);
        let sp = ap
            .svd(true, true)
            .solve(b, 1e-12)
            .unwrap_or_else(|_| DVector::zeros(cols.len()));
        let mut s = DVector::zeros(k);
        for (c, &j) in cols.iter().enumerate() {
            s[j] = sp[c];
        }
        s
    };
    for _ in 0..3 * k + 10 {
        let w = a.transpose() * (b - a * &x);
        let Some(j) = (0..k)
            .filter(|&j| !passive[j] && w[j] > tol)
            .max_by(|&p, &q| w[p].total_cmp(&w[q]))
        else {
            break;
        };
        passive[j] = true;
        loop {
            let s = solve(&passive);
            let blocked: Vec<usize> = (0..k).filter(|&i| passive[i] && s[i] <= 0.0).collect();
            if blocked.is_empty() {
                x = s;
                break;
            }
            let alpha = blocked
                .iter()
                .map(|&i| x[i] / (x[i] - s[i]))
                .fold(f64::INFINITY, f64::min);
            x += (s - &x) * alpha;
            for i in 0..k {
                if passive[i] && x[i] <= tol {
                    passive[i] = false;
                    x[i] = 0.0;
                }
            }
        }
    }
    x
}

/// An interior sample together with its certificate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InteriorSample {
    pub point: Vec<f64>,
    pub params: Vec<f64>,
    pub certificate: f64,
}

/// A random point of `relint K`.
pub fn sample_interior<R: Rng + ?Sized>(cone: &ConeSpec, rng: &mut R) -> InteriorSample {
    let params = cone.sample_params(rng);
    InteriorSample {
        point: cone.point(&params),
        certificate: cone.certificate(&params),
        params,
    }
}

pub(crate) fn min_eigenvalue(m: &DMatrix<f64>) -> f64 {
    m.clone().symmetric_eigenvalues().min()
}
