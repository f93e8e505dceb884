//! Randomized falsification of K-stability.
//!
//! `f` is K-stable iff `t ↦ f(x + t y)` is stable or identically zero for all
//! real `x` and `y ∈ relint K`. Each trial draws such a line, computes the
//! roots of the restriction and checks whether one of them lifts to a root
//! of `f` whose imaginary part lies in `relint K`. Every trial also draws a
//! line with complex base point `a + i b`, `b ∈ relint K`; its roots `t₀`
//! give `Im(z) = b + Im(t₀) y`, which may be interior even when `Im(t₀) ≤ 0`.
//!
//! A clean verdict means no counterexample was found in the trial budget.
//! It is evidence, not a proof.

mod cone;
mod roots;

pub(crate) use cone::min_eigenvalue;
pub use cone::{sample_interior, ConeSpec, InteriorSample};
pub use roots::{
    root_residual, univariate_is_stable, univariate_roots, UnivariateStability, CORRECTION_TOL,
    MAX_ITERATIONS, ROOT_RESIDUAL_TOL,
};

use std::fmt;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{PolyError, StabError};
use crate::poly::Polynomial;
use crate::symmat::SymVarSpace;
use crate::univariate::UnivariatePoly;

/// Roots with imaginary part above this count as lying in the open upper half-plane.
pub const IM_THRESHOLD: f64 = 1e-7;

/// Interior certificates must exceed this margin.
pub const INTERIOR_MARGIN: f64 = 1e-7;

/// A witness must also satisfy `|f(z)| < WITNESS_ABS_TOL · (1 + ‖f‖₁)`.
pub const WITNESS_ABS_TOL: f64 = 1e-8;

const NEWTON_POLISH_STEPS: usize = 3;

/// `|p|` on a winding circle must exceed this multiple of its rounding bound.
pub const ROOT_CONDITION_FACTOR: f64 = 1e4;

/// Sample counts tried when computing a winding number.
const WINDING_SAMPLES: [usize; 4] = [64, 256, 1024, 4096];

/// Roots closer than this, relative to `max(1, |t|)`, are treated as one multiple root.
pub const CLUSTER_RADIUS: f64 = 1e-3;

/// Stream reserved for the psd pre-pass so it does not disturb trial streams.
const PREPASS_STREAM: u64 = u64::MAX;

/// Falsifier parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FalsifierConfig {
    pub trials: usize,
    pub seed: u64,
    /// Bound on the relative residual `|f(z)| / Σ|c_α||z^α|` of a witness.
    pub root_tol: f64,
    pub im_threshold: f64,
    pub interior_margin: f64,
    /// Also search lines with complex base points.
    pub complex_lines: bool,
}

impl Default for FalsifierConfig {
    fn default() -> Self {
        FalsifierConfig {
            trials: 200,
            seed: 0,
            root_tol: ROOT_RESIDUAL_TOL,
            im_threshold: IM_THRESHOLD,
            interior_margin: INTERIOR_MARGIN,
            complex_lines: true,
        }
    }
}

impl FalsifierConfig {
    pub fn with_trials(trials: usize, seed: u64) -> Self {
        FalsifierConfig {
            trials,
            seed,
            ..Default::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessSource {
    /// Direct evaluation at a fixed interior point before the trials.
    PrePass,
    RealLine,
    ComplexLine,
}

/// A verified root of `f` with imaginary part in `relint K`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub point: Vec<Complex64>,
    /// `|f(z)|`.
    pub residual: f64,
    /// `|f(z)| / Σ|c_α||z^α|`.
    pub relative_residual: f64,
    /// Interior certificate of `Im(z)`; see [`ConeSpec::certificate`].
    pub certificate: f64,
    /// Cone parameters of `Im(z)`.
    pub cone_params: Vec<f64>,
    pub trial: Option<usize>,
    pub source: WitnessSource,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Counterexample,
    Clean,
}

/// Result of a falsifier run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StabilityVerdict {
    pub outcome: Outcome,
    pub witness: Option<Witness>,
    /// Trials actually run; fewer than requested when a counterexample stops the search.
    pub trials: usize,
    pub seed: u64,
    /// Roots whose imaginary part looked interior and were checked against `f`.
    pub candidates_examined: usize,
    /// Candidates that failed the residual or interior check.
    pub candidates_rejected: usize,
    /// Restrictions whose roots could not be computed.
    pub root_failures: usize,
}

impl StabilityVerdict {
    pub fn is_clean(&self) -> bool {
        self.outcome == Outcome::Clean
    }

    pub fn label(&self) -> &'static str {
        match self.outcome {
            Outcome::Counterexample => "counterexample found",
            Outcome::Clean => "no counterexample found",
        }
    }
}

impl fmt::Display for StabilityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} trials, seed {})", self.label(), self.trials, self.seed)?;
        if let Some(w) = &self.witness {
            write!(
                f,
                ", residual {:.3e}, certificate {:.3e}",
                w.residual, w.certificate
            )?;
        }
        Ok(())
    }
}

/// `Σ |c_α| |z^α|`, the scale of `|f(z)|` under rounding.
fn abs_scale(f: &Polynomial, z: &[Complex64]) -> f64 {
    let mags: Vec<f64> = z.iter().map(|w| w.norm()).collect();
    abs_scale_at(f, &mags)
}

/// `Σ |c_α| m^α`.
fn abs_scale_at(f: &Polynomial, mags: &[f64]) -> f64 {
    f.terms()
        .map(|(e, c)| e.iter().zip(mags).fold(c.norm(), |acc, (&k, m)| acc * m.powi(k as i32)))
        .sum()
}

/// Checks a witness from scratch: residuals against `f` and the interior certificate of `Im(z)`.
pub fn verify_witness(
    f: &Polynomial,
    cone: &ConeSpec,
    w: &Witness,
    root_tol: f64,
    interior_margin: f64,
) -> bool {
    if w.point.len() != f.nvars() || cone.dim() != f.nvars() {
        return false;
    }
    let Ok(value) = f.evaluate(&w.point) else {
        return false;
    };
    let residual = value.norm();
    let scale = abs_scale(f, &w.point);
    let relative = if scale == 0.0 { 0.0 } else { residual / scale };
    if relative >= root_tol || residual >= WITNESS_ABS_TOL * (1.0 + f.norm_l1()) {
        return false;
    }
    let im: Vec<f64> = w.point.iter().map(|z| z.im).collect();
    let certificate = match cone {
        ConeSpec::Orthant(_) | ConeSpec::Psd(_) => cone.certificate(&im),
        _ => {
            if w.cone_params.len() != cone.param_len() {
                return false;
            }
            let rebuilt = cone.point(&w.cone_params);
            let size = im.iter().map(|x| x.abs()).fold(1.0, f64::max);
            if rebuilt.iter().zip(&im).any(|(a, b)| (a - b).abs() > 1e-9 * size) {
                return false;
            }
            cone.certificate(&w.cone_params)
        }
    };
    certificate > interior_margin
}

struct Search<'a> {
    f: &'a Polynomial,
    cone: &'a ConeSpec,
    config: &'a FalsifierConfig,
    examined: usize,
    rejected: usize,
    root_failures: usize,
}

impl Search<'_> {
    fn witness_at(
        &self,
        z: Vec<Complex64>,
        params: Vec<f64>,
        trial: Option<usize>,
        source: WitnessSource,
    ) -> Option<Witness> {
        let value = self.f.evaluate(&z).ok()?;
        let residual = value.norm();
        let scale = abs_scale(self.f, &z);
        let w = Witness {
            relative_residual: if scale == 0.0 { 0.0 } else { residual / scale },
            residual,
            certificate: self.cone.certificate(&params),
            point: z,
            cone_params: params,
            trial,
            source,
        };
        verify_witness(
            self.f,
            self.cone,
            &w,
            self.config.root_tol,
            self.config.interior_margin,
        )
        .then_some(w)
    }

    /// Examines the roots of `t ↦ f(base + t·dir)`, where `Im(base)` has parameters `base_params`.
    fn line(
        &mut self,
        base: &[Complex64],
        base_params: &[f64],
        dir_params: &[f64],
        trial: usize,
        source: WitnessSource,
    ) -> Result<Option<Witness>, StabError> {
        let dir_real = self.cone.point(dir_params);
        let dir: Vec<Complex64> = dir_real.iter().map(|&r| Complex64::new(r, 0.0)).collect();
        let p = self.f.restrict_to_line(base, &dir)?;
        if p.degree().unwrap_or(0) == 0 {
            return Ok(None);
        }
        let roots = match univariate_roots(&p) {
            Ok(r) => r,
            Err(StabError::Constant) => return Ok(None),
            Err(StabError::NoConvergence { .. }) => {
                self.root_failures += 1;
                return Ok(None);
            }
            Err(e) => return Err(e),
        };
        for (t0, m) in cluster_centres(&roots) {
            let t0 = refine_multiple(&p, t0, m);
            if source == WitnessSource::RealLine && t0.im <= self.config.im_threshold {
                continue;
            }
            let params: Vec<f64> = base_params
                .iter()
                .zip(dir_params)
                .map(|(b, d)| b + t0.im * d)
                .collect();
            if self.cone.certificate(&params) <= self.config.interior_margin {
                continue;
            }
            self.examined += 1;
            let t = polish(&p, t0);
            let params: Vec<f64> = base_params
                .iter()
                .zip(dir_params)
                .map(|(b, d)| b + t.im * d)
                .collect();
            let z: Vec<Complex64> = base.iter().zip(&dir).map(|(b, d)| b + t * d).collect();
            let depth = self.interior_depth(base_params, dir_params, t.im);
            if !encloses_root(&p, self.f, base, &dir, t, 0.5 * depth) {
                self.rejected += 1;
                continue;
            }
            match self.witness_at(z, params, Some(trial), source) {
                Some(w) => return Ok(Some(w)),
                None => self.rejected += 1,
            }
        }
        Ok(None)
    }

    /// Largest `δ ≤ max(1, |s|)` such that `Im(t)` can drop from `s` by `δ` and stay interior.
    fn interior_depth(&self, base_params: &[f64], dir_params: &[f64], s: f64) -> f64 {
        let interior = |x: f64| {
            let q: Vec<f64> = base_params.iter().zip(dir_params).map(|(b, d)| b + x * d).collect();
            self.cone.certificate(&q) > self.config.interior_margin
        };
        let cap = s.abs().max(1.0);
        if interior(s - cap) {
            return cap;
        }
        let (mut lo, mut hi) = (0.0, cap);
        for _ in 0..40 {
            let mid = 0.5 * (lo + hi);
            if interior(s - mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    fn trial(&mut self, trial: usize) -> Result<Option<Witness>, StabError> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed);
        rng.set_stream(trial as u64);
        let x = self.cone.sample_real(&mut rng);
        let y = self.cone.sample_params(&mut rng);
        let base: Vec<Complex64> = x.iter().map(|&r| Complex64::new(r, 0.0)).collect();
        let zero = vec![0.0; y.len()];
        if let Some(w) = self.line(&base, &zero, &y, trial, WitnessSource::RealLine)? {
            return Ok(Some(w));
        }
        if !self.config.complex_lines {
            return Ok(None);
        }
        let a = self.cone.sample_real(&mut rng);
        let b_params = self.cone.sample_params(&mut rng);
        let b = self.cone.point(&b_params);
        let y = self.cone.sample_params(&mut rng);
        let base: Vec<Complex64> = a.iter().zip(&b).map(|(&re, &im)| Complex64::new(re, im)).collect();
        self.line(&base, &b_params, &y, trial, WitnessSource::ComplexLine)
    }

    fn probe(&mut self, params: Vec<f64>) -> Option<Witness> {
        let z: Vec<Complex64> = self
            .cone
            .point(&params)
            .into_iter()
            .map(|y| Complex64::new(0.0, y))
            .collect();
        self.examined += 1;
        let found = self.witness_at(z, params, None, WitnessSource::PrePass);
        if found.is_none() {
            self.rejected += 1;
        }
        found
    }

    fn verdict(&self, witness: Option<Witness>, trials: usize) -> StabilityVerdict {
        StabilityVerdict {
            outcome: if witness.is_some() {
                Outcome::Counterexample
            } else {
                Outcome::Clean
            },
            witness,
            trials,
            seed: self.config.seed,
            candidates_examined: self.examined,
            candidates_rejected: self.rejected,
            root_failures: self.root_failures,
        }
    }
}

/// Groups nearby roots, returning each centroid with its multiplicity.
///
/// A root of multiplicity `m` comes back as `m` approximations spread over a
/// radius of order `ε^(1/m)`, which can straddle the real axis.
pub fn cluster_centres(roots: &[Complex64]) -> Vec<(Complex64, usize)> {
    let mut used = vec![false; roots.len()];
    let mut out = Vec::new();
    for i in 0..roots.len() {
        if used[i] {
            continue;
        }
        let radius = CLUSTER_RADIUS * roots[i].norm().max(1.0);
        let mut sum = Complex64::new(0.0, 0.0);
        let mut count = 0;
        for j in i..roots.len() {
            if !used[j] && (roots[j] - roots[i]).norm() <= radius {
                used[j] = true;
                sum += roots[j];
                count += 1;
            }
        }
        out.push((sum / count as f64, count));
    }
    out
}

/// Whether `p` has a root in the disk of radius `r` about `t`, by the argument principle.
///
/// Every sample on the circle must clear the rounding bound of `f` along the
/// line by [`ROOT_CONDITION_FACTOR`], and consecutive samples must turn by
/// less than a quarter turn; otherwise the count is inconclusive and the
/// answer is no.
fn encloses_root(
    p: &UnivariatePoly,
    f: &Polynomial,
    base: &[Complex64],
    dir: &[Complex64],
    t: Complex64,
    r: f64,
) -> bool {
    if !(r > 0.0) {
        return false;
    }
    'sizes: for &n in &WINDING_SAMPLES {
        let mut total = 0.0;
        let mut prev: Option<Complex64> = None;
        let mut first = Complex64::new(0.0, 0.0);
        for k in 0..=n {
            let s = t + Complex64::from_polar(r, std::f64::consts::TAU * k as f64 / n as f64);
            let value = if k == n { first } else { p.eval(s) };
            if k < n {
                let mags: Vec<f64> = base.iter().zip(dir).map(|(b, d)| b.norm() + s.norm() * d.norm()).collect();
                if value.norm() <= ROOT_CONDITION_FACTOR * f64::EPSILON * abs_scale_at(f, &mags) {
                    return false;
                }
            }
            if let Some(q) = prev {
                let turn = (value / q).arg();
                if turn.abs() >= std::f64::consts::FRAC_PI_2 {
                    continue 'sizes;
                }
                total += turn;
            } else {
                first = value;
            }
            prev = Some(value);
        }
        return (total / std::f64::consts::TAU).round() >= 1.0;
    }
    false
}

/// Refines a cluster centre of multiplicity `m` as a simple root of `p^(m-1)`.
fn refine_multiple(p: &UnivariatePoly, t: Complex64, m: usize) -> Complex64 {
    if m < 2 {
        return t;
    }
    let q = (1..m).fold(p.clone(), |q, _| q.derivative());
    polish(&q, t)
}

/// Newton steps on `p` from `t`, kept only while the residual improves.
fn polish(p: &UnivariatePoly, t: Complex64) -> Complex64 {
    let dp = p.derivative();
    let mut best = t;
    let mut best_res = p.eval(t).norm();
    for _ in 0..NEWTON_POLISH_STEPS {
        let d = dp.eval(best);
        if d.norm() == 0.0 {
            break;
        }
        let next = best - p.eval(best) / d;
        let res = p.eval(next).norm();
        if !(res < best_res) {
            break;
        }
        best = next;
        best_res = res;
    }
    best
}

fn run(
    f: &Polynomial,
    cone: &ConeSpec,
    config: &FalsifierConfig,
    prepass: &[Vec<f64>],
) -> Result<StabilityVerdict, StabError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial.into());
    }
    cone.check_nvars(f.nvars())?;
    let mut search = Search {
        f,
        cone,
        config,
        examined: 0,
        rejected: 0,
        root_failures: 0,
    };
    for params in prepass {
        if let Some(w) = search.probe(params.clone()) {
            return Ok(search.verdict(Some(w), 0));
        }
    }
    if f.is_constant() {
        return Ok(search.verdict(None, config.trials));
    }
    for trial in 0..config.trials {
        if let Some(w) = search.trial(trial)? {
            return Ok(search.verdict(Some(w), trial + 1));
        }
    }
    Ok(search.verdict(None, config.trials))
}

/// Searches for a root of `f` with imaginary part in `relint K`.
pub fn check_cone_stability(
    f: &Polynomial,
    cone: &ConeSpec,
    config: &FalsifierConfig,
) -> Result<StabilityVerdict, StabError> {
    run(f, cone, config, &[])
}

/// psd-stability falsifier: evaluates at `i·I_n` and at `i·P` for a sampled
/// positive definite `P`, then runs the line trials on the psd cone.
pub fn check_psd_stability(
    space: &SymVarSpace,
    f: &Polynomial,
    config: &FalsifierConfig,
) -> Result<StabilityVerdict, StabError> {
    let cone = ConeSpec::Psd(space.order());
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(PREPASS_STREAM);
    let prepass = [cone.canonical_params(), cone.sample_params(&mut rng)];
    run(f, &cone, config, &prepass)
}

/// Dispatches to [`check_psd_stability`] for psd cones and [`check_cone_stability`] otherwise.
pub fn check_stability(
    f: &Polynomial,
    cone: &ConeSpec,
    config: &FalsifierConfig,
) -> Result<StabilityVerdict, StabError> {
    match cone {
        ConeSpec::Psd(n) => check_psd_stability(&SymVarSpace::new(*n), f, config),
        _ => check_cone_stability(f, cone, config),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ExponentVector;
    use crate::symmat::symbolic_determinant;
    use crate::text::parse_polynomial;
    use crate::Space;

    fn vector(src: &str, n: usize) -> Polynomial {
        parse_polynomial(src, &Space::Vector(n)).unwrap()
    }

    fn sym(src: &str, n: usize) -> Polynomial {
        parse_polynomial(src, &Space::sym(n)).unwrap()
    }

    #[test]
    fn orthant_examples() {
        let cfg = FalsifierConfig::with_trials(200, 7);
        let k = ConeSpec::Orthant(2);
        let v = check_cone_stability(&vector("z1*z2 + 1", 2), &k, &cfg).unwrap();
        assert_eq!(v.outcome, Outcome::Counterexample);
        assert!(verify_witness(&vector("z1*z2 + 1", 2), &k, v.witness.as_ref().unwrap(), 1e-9, 1e-7));
        let v = check_cone_stability(&vector("z1*z2 - 1", 2), &k, &cfg).unwrap();
        assert!(v.is_clean(), "{v}");
        assert_eq!(v.label(), "no counterexample found");
        let v = check_cone_stability(&vector("z1^2 + z2^2", 2), &k, &cfg).unwrap();
        assert_eq!(v.outcome, Outcome::Counterexample);
    }

    #[test]
    fn psd_examples() {
        let cfg = FalsifierConfig::with_trials(100, 1);
        let s2 = SymVarSpace::new(2);
        let v = check_psd_stability(&s2, &sym("z12", 2), &cfg).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(w.source, WitnessSource::PrePass);
        assert_eq!(w.point, vec![Complex64::i(), Complex64::new(0.0, 0.0), Complex64::i()]);
        let s3 = SymVarSpace::new(3);
        let g = sym("-z11*z23^2 - z22*z13^2 + 2*z12*z13*z23", 3);
        let v = check_psd_stability(&s3, &g, &cfg).unwrap();
        let w = v.witness.unwrap();
        assert!(w.residual < 1e-12);
        assert!((w.certificate - 1.0).abs() < 1e-12);
        let det = symbolic_determinant(&s3).unwrap();
        assert!(check_psd_stability(&s3, &det, &cfg).unwrap().is_clean());
    }

    #[test]
    fn real_lines_alone_miss_some_psd_roots() {
        // z11 + z12 vanishes at i[[1,-1],[-1,2]], which no line with a real base point reaches.
        let s2 = SymVarSpace::new(2);
        let f = sym("z11 + z12", 2);
        let mut cfg = FalsifierConfig::with_trials(50, 3);
        let v = check_psd_stability(&s2, &f, &cfg).unwrap();
        assert_eq!(v.outcome, Outcome::Counterexample);
        cfg.complex_lines = false;
        let w = check_psd_stability(&s2, &f, &cfg).unwrap();
        assert!(w.is_clean());
    }

    #[test]
    fn same_seed_same_verdict() {
        let cfg = FalsifierConfig::with_trials(50, 11);
        let f = vector("z1^2 + z2^2", 2);
        let k = ConeSpec::Orthant(2);
        assert_eq!(
            check_cone_stability(&f, &k, &cfg).unwrap(),
            check_cone_stability(&f, &k, &cfg).unwrap()
        );
    }

    #[test]
    fn clusters_average_to_the_multiple_root() {
        let r = [
            Complex64::new(2.0, 3e-6),
            Complex64::new(2.0, -3e-6),
            Complex64::new(-1.0, 0.5),
        ];
        let c = cluster_centres(&r);
        assert_eq!(c, [(Complex64::new(2.0, 0.0), 2), (r[2], 1)]);
    }

    #[test]
    fn repeated_factors_stay_clean() {
        let space = SymVarSpace::new(3);
        let d = crate::symmat::symbolic_determinant(&space).unwrap();
        let f = &(&d * &d) * &space.var(0, 0);
        let v = check_stability(&f, &ConeSpec::Psd(3), &FalsifierConfig::with_trials(200, 4)).unwrap();
        assert!(v.is_clean(), "{v}");
    }

    #[test]
    fn high_powers_of_the_determinant_stay_clean() {
        let space = SymVarSpace::new(3);
        let d = crate::symmat::symbolic_determinant(&space).unwrap();
        let f = &d.pow(6) * &(&space.var(0, 0) + &space.var(1, 1));
        let v = check_stability(&f, &ConeSpec::Psd(3), &FalsifierConfig::with_trials(300, 14)).unwrap();
        assert!(v.is_clean(), "{v}");
    }

    #[test]
    fn winding_counts_interior_roots_only() {
        let f = Polynomial::var(1, 0).unwrap();
        let base = [Complex64::new(0.0, 0.0)];
        let dir = [Complex64::new(1.0, 0.0)];
        let i = Complex64::new(0.0, 1.0);
        // (t - i)^2
        let p = UnivariatePoly::from_coeffs(vec![i * i, -2.0 * i, Complex64::new(1.0, 0.0)]);
        assert!(encloses_root(&p, &f.pow(2), &base, &dir, i, 0.5));
        assert!(!encloses_root(&p, &f.pow(2), &base, &dir, 3.0 * i, 0.5));
        // t^6 seen from just above the real axis
        let mut c = vec![Complex64::new(0.0, 0.0); 7];
        c[6] = Complex64::new(1.0, 0.0);
        let q = UnivariatePoly::from_coeffs(c);
        assert!(!encloses_root(&q, &f.pow(6), &base, &dir, Complex64::new(0.0, 1e-3), 5e-4));
    }

    #[test]
    fn constants_and_errors() {
        let cfg = FalsifierConfig::with_trials(10, 0);
        let k = ConeSpec::Orthant(1);
        let one = Polynomial::constant(1, Complex64::new(2.0, 0.0));
        assert!(check_cone_stability(&one, &k, &cfg).unwrap().is_clean());
        assert!(check_cone_stability(&Polynomial::zero(1), &k, &cfg).is_err());
        let f = Polynomial::monomial(ExponentVector::new(vec![1, 1]), Complex64::new(1.0, 0.0));
        assert!(matches!(
            check_cone_stability(&f, &k, &cfg),
            Err(StabError::ConeDimension { .. })
        ));
    }

    #[test]
    fn polyhedral_ray() {
        // On the ray through e1 only Im(z1) may be positive.
        let ray = ConeSpec::Polyhedral(vec![vec![1.0, 0.0]]);
        let cfg = FalsifierConfig::with_trials(100, 5);
        assert!(check_cone_stability(&vector("z1 + z2", 2), &ray, &cfg).unwrap().is_clean());
        assert!(check_cone_stability(&vector("-z1 + 1", 2), &ray, &cfg).unwrap().is_clean());
        let h = vector("z1*z1 + 1", 2);
        assert_eq!(check_cone_stability(&h, &ray, &cfg).unwrap().outcome, Outcome::Counterexample);
        let g = Polynomial::linear(
            &[Complex64::new(1.0, 0.0), Complex64::new(0.0, -1.0)],
            Complex64::new(0.0, 0.0),
        );
        let v = check_cone_stability(&g, &ray, &cfg).unwrap();
        let w = v.witness.unwrap();
        assert!(w.point[1].im.abs() < 1e-12);
        assert!(verify_witness(&g, &ray, &w, 1e-9, 1e-7));
    }
}
