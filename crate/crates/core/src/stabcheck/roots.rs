use num_complex::Complex64;
use num_traits::Zero;

use crate::error::StabError;
use crate::univariate::UnivariatePoly;

/// Iteration cap for the simultaneous root iteration.
pub const MAX_ITERATIONS: usize = 200;

/// Stop once every correction is below this, relative to the root's modulus.
pub const CORRECTION_TOL: f64 = 1e-13;

/// Accepted backward error `|p(t)| / Σ|a_k||t|^k` of a computed root.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-9;

/// Leading coefficients below this fraction of the largest one are deflated away.
const LEADING_TOL: f64 = 1e-12;

/// Backward error of `t` as a root of `p`.
pub fn root_residual(p: &UnivariatePoly, t: Complex64) -> f64 {
    let scale = p.abs_eval(t);
    if scale == 0.0 {
        0.0
    } else {
        p.eval(t).norm() / scale
    }
}

/// All roots of `p`, repeated by multiplicity, by Aberth–Ehrlich iteration.
pub fn univariate_roots(p: &UnivariatePoly) -> Result<Vec<Complex64>, StabError> {
    let max = p.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut coeffs = p.coeffs().to_vec();
    while coeffs.last().is_some_and(|c| c.norm() <= LEADING_TOL * max) {
        coeffs.pop();
    }
    let zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
    if coeffs.len() <= 1 && zeros == 0 {
        return Err(StabError::Constant);
    }
    let reduced = UnivariatePoly::from_coeffs_trimmed(coeffs[zeros..].to_vec(), 0.0);
    let mut roots = vec![Complex64::zero(); zeros];
    match reduced.degree() {
        Some(0) | None => {}
        Some(1) => roots.push(-reduced.coeffs()[0] / reduced.coeffs()[1]),
        Some(_) => roots.extend(aberth(&reduced)?),
    }
    Ok(roots)
}

fn aberth(p: &UnivariatePoly) -> Result<Vec<Complex64>, StabError> {
    let n = p.degree().expect("degree at least 2");
    let lead = p.leading().expect("nonzero");
    let monic: Vec<Complex64> = p.coeffs().iter().map(|c| c / lead).collect();
    let monic = UnivariatePoly::from_coeffs_trimmed(monic, 0.0);
    let dp = monic.derivative();
    let radius = cauchy_radius(&monic);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius * (1.0 + 0.01 * k as f64 / n as f64), angle)
        })
        .collect();
    let mut last = f64::INFINITY;
    for _ in 0..MAX_ITERATIONS {
        last = 0.0;
        for k in 0..n {
            let value = monic.eval(z[k]);
            if value.is_zero() {
                continue;
            }
            let ratio = value / dp.eval(z[k]);
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.is_finite() {
                continue;
            }
            z[k] -= step;
            last = last.max(step.norm() / z[k].norm().max(1.0));
        }
        if last < CORRECTION_TOL {
            return Ok(z);
        }
    }
    if z.iter().all(|&t| root_residual(&monic, t) < ROOT_RESIDUAL_TOL) {
        return Ok(z);
    }
    Err(StabError::NoConvergence {
        iterations: MAX_ITERATIONS,
        last_correction: last,
    })
}

/// The positive root of `x^n = Σ_{k<n} |b_k| x^k`, an upper bound on the root moduli.
fn cauchy_radius(monic: &UnivariatePoly) -> f64 {
    let c = monic.coeffs();
    let n = c.len() - 1;
    let h = |x: f64| -> f64 {
        x.powi(n as i32) - (0..n).map(|k| c[k].norm() * x.powi(k as i32)).sum::<f64>()
    };
    let mut hi = 1.0 + c[..n].iter().map(|a| a.norm()).fold(0.0, f64::max);
    let mut lo = 0.0;
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if h(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi.max(f64::MIN_POSITIVE)
}

/// Outcome of [`univariate_is_stable`].
#[derive(Clone, Debug, PartialEq)]
pub enum UnivariateStability {
    Stable,
    /// The root with the largest imaginary part.
    Unstable(Complex64),
    IdenticallyZero,
}

/// Root-based stability test: stable iff every root has `Im ≤ im_threshold`.
pub fn univariate_is_stable(
    p: &UnivariatePoly,
    im_threshold: f64,
) -> Result<UnivariateStability, StabError> {
    if p.is_zero() {
        return Ok(UnivariateStability::IdenticallyZero);
    }
    if p.degree() == Some(0) {
        return Ok(UnivariateStability::Stable);
    }
    let roots = match univariate_roots(p) {
        Ok(r) => r,
        Err(StabError::Constant) => return Ok(UnivariateStability::Stable),
        Err(e) => return Err(e),
    };
    let top = roots
        .into_iter()
        .max_by(|a, b| a.im.total_cmp(&b.im))
        .expect("at least one root");
    Ok(if top.im > im_threshold {
        UnivariateStability::Unstable(top)
    } else {
        UnivariateStability::Stable
    })
}
