use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{PolyError, PreserverError};
use crate::poly::Polynomial;
use crate::stabcheck::{ConeSpec, FalsifierConfig};

/// Samples whose `|f(z)|` falls below this (relative to `1 + ‖f‖₁`) are redrawn.
const VANISHING_TOL: f64 = 1e-12;

/// Redraw budget per requested sample.
const MAX_RESAMPLES: usize = 10;

/// `g - ∂_v f`, after checking `ρ_v(f) ≤ 1`.
pub fn lieb_sokal_transform(
    g: &Polynomial,
    f: &Polynomial,
    v: &[f64],
) -> Result<Polynomial, PreserverError> {
    if g.nvars() != f.nvars() {
        return Err(PolyError::SpaceMismatch {
            left: g.nvars(),
            right: f.nvars(),
        }
        .into());
    }
    if f.is_zero() {
        f.directional_derivative(v)?;
        return Ok(g.clone());
    }
    let rho = f.degree_in_direction(v)?;
    if rho > 1 {
        return Err(PreserverError::DirectionalDegree { measured: rho });
    }
    Ok(g.checked_sub(&f.directional_derivative(v)?)?)
}

/// Outcome of [`ratio_condition_check`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioReport {
    /// Smallest observed `Im(g(z)/f(z))`.
    pub min_im: f64,
    /// A sample point where `Im(g/f) < 0` beyond rounding.
    pub violation: Option<Vec<Complex64>>,
    pub samples: usize,
    /// Samples redrawn because `f` nearly vanished there.
    pub resampled: usize,
    pub seed: u64,
}

/// Samples `z` with `Im(z) ∈ relint K` and standard normal real part and records `Im(g/f)`.
pub fn ratio_condition_check(
    g: &Polynomial,
    f: &Polynomial,
    cone: &ConeSpec,
    config: &FalsifierConfig,
) -> Result<RatioReport, PreserverError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial.into());
    }
    if g.nvars() != f.nvars() {
        return Err(PolyError::SpaceMismatch {
            left: g.nvars(),
            right: f.nvars(),
        }
        .into());
    }
    cone.validate()?;
    if cone.dim() != f.nvars() {
        return Err(crate::error::StabError::ConeDimension {
            cone: cone.dim(),
            nvars: f.nvars(),
        }
        .into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let floor = VANISHING_TOL * (1.0 + f.norm_l1());
    let mut report = RatioReport {
        min_im: f64::INFINITY,
        violation: None,
        samples: 0,
        resampled: 0,
        seed: config.seed,
    };
    let mut draws = 0;
    while report.samples < config.trials && draws < config.trials * MAX_RESAMPLES {
        draws += 1;
        let re = cone.sample_real(&mut rng);
        let im = cone.point(&cone.sample_params(&mut rng));
        let z: Vec<Complex64> = re
            .iter()
            .zip(&im)
            .map(|(&a, &b)| Complex64::new(a, b))
            .collect();
        let fz = f.evaluate(&z)?;
        if fz.norm() < floor {
            report.resampled += 1;
            continue;
        }
        report.samples += 1;
        let q = g.evaluate(&z)? / fz;
        if q.im < report.min_im {
            report.min_im = q.im;
        }
        if report.violation.is_none() && q.im < -1e-9 * (1.0 + q.norm()) {
            report.violation = Some(z);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_polynomial;
    use crate::Space;

    fn vector(src: &str, n: usize) -> Polynomial {
        parse_polynomial(src, &Space::Vector(n)).unwrap()
    }

    #[test]
    fn transform_examples() {
        let e1 = [1.0, 0.0];
        let out = lieb_sokal_transform(&vector("z1*z2", 2), &vector("z1", 2), &e1).unwrap();
        assert_eq!(out, vector("z1*z2 - 1", 2));
        let out = lieb_sokal_transform(&vector("z1", 2), &vector("1", 2), &e1).unwrap();
        assert_eq!(out, vector("z1", 2));
        let out = lieb_sokal_transform(&Polynomial::zero(2), &vector("z1", 2), &e1).unwrap();
        assert_eq!(out, vector("-1", 2));
    }

    #[test]
    fn degree_precondition() {
        let err = lieb_sokal_transform(&vector("1", 1), &vector("z1^2", 1), &[1.0]).unwrap_err();
        assert_eq!(err, PreserverError::DirectionalDegree { measured: 2 });
    }

    #[test]
    fn ratio_examples() {
        let cfg = FalsifierConfig::with_trials(200, 4);
        let k = ConeSpec::Orthant(1);
        let one = vector("1", 1);
        let r = ratio_condition_check(&one, &one, &k, &cfg).unwrap();
        assert_eq!(r.min_im, 0.0);
        assert!(r.violation.is_none());
        let r = ratio_condition_check(&vector("z1", 1), &one, &k, &cfg).unwrap();
        assert!(r.min_im > 0.0);
        assert!(r.violation.is_none());
        let r = ratio_condition_check(&vector("-z1", 1), &one, &k, &cfg).unwrap();
        assert!(r.violation.is_some());
        assert_eq!(r.samples, 200);
    }
}
