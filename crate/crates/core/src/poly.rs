//! Sparse multivariate polynomials over complex coefficients.
//!
//! A [`Polynomial`] is a map from [`ExponentVector`]s to nonzero complex
//! coefficients over a fixed number of variables. Every arithmetic operation
//! prunes coefficients whose modulus falls below [`PRUNE_TOL`], so that
//! supports stay crisp: near-cancellations become structural zeros.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::PolyError;
use crate::univariate::UnivariatePoly;

/// Coefficients with modulus below this value are dropped after every ring operation.
pub const PRUNE_TOL: f64 = 1e-12;

/// Number of random base points used by [`Polynomial::degree_in_direction`].
pub const DIRECTION_DEGREE_SAMPLES: usize = 5;

/// Largest total degree [`Polynomial::restrict_to_line`] accepts; the restriction is dense.
pub const MAX_LINE_DEGREE: u32 = 1024;

/// Tolerance for ties in floating initial-form pairings.
pub const PAIRING_TIE_TOL: f64 = 1e-9;

const DIRECTION_DEGREE_SEED: u64 = 0x5eed_d1ec;

/// Nonnegative integer exponents of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        ExponentVector(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|α| = Σ α_i`, the total degree of the monomial, saturating at `u32::MAX`.
    pub fn degree(&self) -> u32 {
        self.0.iter().fold(0u32, |acc, &e| acc.saturating_add(e))
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u32> {
        self.0.iter()
    }

    /// # Panics
    /// If an entry overflows `u32`.
    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Componentwise minimum (the exponent of the gcd of two monomials).
    pub fn meet(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// `self - other`, or `None` if some entry would go negative.
    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    /// L1 distance `|α - β|`.
    pub fn l1_distance(&self, other: &ExponentVector) -> u32 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.abs_diff(*b))
            .sum()
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.0.iter().map(|&e| i64::from(e)).collect()
    }
}

impl Index<usize> for ExponentVector {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

/// Graded lexicographic order, largest monomial first.
///
/// Higher total degree comes first; ties are broken lexicographically with
/// larger exponents on earlier variables first.
pub fn graded_lex_desc(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    b.degree().cmp(&a.degree()).then_with(|| b.0.cmp(&a.0))
}

/// A linear functional on exponent vectors, used to select initial forms.
#[derive(Clone, Debug, PartialEq)]
pub enum Weights {
    /// Rational weights; ties in the pairing are resolved exactly.
    Exact(Vec<Ratio<i64>>),
    /// Floating weights; pairings within [`PAIRING_TIE_TOL`] of the maximum tie.
    Float(Vec<f64>),
}

impl Weights {
    pub fn len(&self) -> usize {
        match self {
            Weights::Exact(w) => w.len(),
            Weights::Float(w) => w.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Weights::Exact(w) => w.iter().all(|x| x.is_zero()),
            Weights::Float(w) => w.iter().all(|&x| x == 0.0),
        }
    }

    /// `⟨w, α⟩` as a float.
    pub fn pairing(&self, e: &ExponentVector) -> f64 {
        match self {
            Weights::Exact(w) => {
                let r = exact_pairing(w, e);
                *r.numer() as f64 / *r.denom() as f64
            }
            Weights::Float(w) => w.iter().zip(e.iter()).map(|(a, &b)| a * f64::from(b)).sum(),
        }
    }

    pub fn to_f64(&self) -> Vec<f64> {
        match self {
            Weights::Exact(w) => w
                .iter()
                .map(|r| *r.numer() as f64 / *r.denom() as f64)
                .collect(),
            Weights::Float(w) => w.clone(),
        }
    }
}

fn exact_pairing(w: &[Ratio<i64>], e: &ExponentVector) -> Ratio<i64> {
    w.iter()
        .zip(e.iter())
        .fold(Ratio::zero(), |acc, (a, &b)| acc + *a * i64::from(b))
}

/// A sparse polynomial in `nvars` variables with complex coefficients.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Polynomial {
    nvars: usize,
    #[serde(with = "term_list")]
    terms: BTreeMap<ExponentVector, Complex64>,
}

/// Terms serialize as a list of `[exponent, coefficient]` pairs so that JSON keys stay strings.
mod term_list {
    use std::collections::BTreeMap;

    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::ExponentVector;

    pub fn serialize<S: Serializer>(
        terms: &BTreeMap<ExponentVector, Complex64>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let list: Vec<_> = terms.iter().collect();
        list.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<ExponentVector, Complex64>, D::Error> {
        let list: Vec<(ExponentVector, Complex64)> = Vec::deserialize(d)?;
        Ok(list.into_iter().collect())
    }
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Complex64::one())
    }

    pub fn constant(nvars: usize, c: Complex64) -> Self {
        Self::monomial(ExponentVector::zeros(nvars), c)
    }

    /// The variable `z_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Result<Self, PolyError> {
        if i >= nvars {
            return Err(PolyError::IndexOutOfRange { index: i, nvars });
        }
        Ok(Self::monomial(ExponentVector::unit(nvars, i), Complex64::one()))
    }

    pub fn monomial(exponent: ExponentVector, c: Complex64) -> Self {
        let nvars = exponent.len();
        let mut p = Polynomial::zero(nvars);
        if c.norm() >= PRUNE_TOL {
            p.terms.insert(exponent, c);
        }
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (ExponentVector, Complex64)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(PolyError::LengthMismatch {
                    expected: nvars,
                    found: e.len(),
                });
            }
            *p.terms.entry(e).or_insert_with(Complex64::zero) += c;
        }
        p.prune();
        Ok(p)
    }

    /// A linear form `Σ a_i z_i + c`.
    pub fn linear(coeffs: &[Complex64], constant: Complex64) -> Self {
        let n = coeffs.len();
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(i, &a)| (ExponentVector::unit(n, i), a))
            .chain(std::iter::once((ExponentVector::zeros(n), constant)));
        Self::from_terms(n, terms).expect("lengths agree by construction")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(ExponentVector::is_constant)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Complex64)> {
        self.terms.iter()
    }

    /// Terms in graded lexicographic order, largest first.
    pub fn terms_graded(&self) -> Vec<(&ExponentVector, &Complex64)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| graded_lex_desc(a.0, b.0));
        t
    }

    pub fn coeff(&self, e: &ExponentVector) -> Complex64 {
        self.terms.get(e).copied().unwrap_or_else(Complex64::zero)
    }

    /// `supp(f)`: the exponents carrying a nonzero coefficient.
    pub fn support(&self) -> BTreeSet<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    /// Total degree; the zero polynomial reports 0.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(ExponentVector::degree).max().unwrap_or(0)
    }

    /// `deg_i(f)`, the degree in variable `i`.
    pub fn degree_in(&self, i: usize) -> Result<u32, PolyError> {
        self.check_index(i)?;
        Ok(self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(ExponentVector::degree);
        match degrees.next() {
            Some(d) => degrees.all(|x| x == d),
            None => true,
        }
    }

    /// Sum of coefficient moduli.
    pub fn norm_l1(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).sum()
    }

    /// True if every coefficient is real up to `tol` relative to its modulus.
    pub fn has_real_coefficients(&self, tol: f64) -> bool {
        self.terms.values().all(|c| c.im.abs() <= tol * c.norm().max(1.0))
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| c.norm() >= PRUNE_TOL);
    }

    fn check_index(&self, i: usize) -> Result<(), PolyError> {
        if i >= self.nvars {
            Err(PolyError::IndexOutOfRange {
                index: i,
                nvars: self.nvars,
            })
        } else {
            Ok(())
        }
    }

    fn check_len(&self, found: usize) -> Result<(), PolyError> {
        if found != self.nvars {
            Err(PolyError::LengthMismatch {
                expected: self.nvars,
                found,
            })
        } else {
            Ok(())
        }
    }

    fn check_space(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            Err(PolyError::SpaceMismatch {
                left: self.nvars,
                right: other.nvars,
            })
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            *out.terms.entry(e.clone()).or_insert_with(Complex64::zero) += c;
        }
        out.prune();
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_space(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            *out.terms.entry(e.clone()).or_insert_with(Complex64::zero) -= c;
        }
        out.prune();
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_space(other)?;
        let mut out = Polynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                *out.terms.entry(ea.add(eb)).or_insert_with(Complex64::zero) += ca * cb;
            }
        }
        out.prune();
        Ok(out)
    }

    pub fn scale(&self, c: Complex64) -> Polynomial {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out.prune();
        out
    }

    /// `f^k` by repeated squaring; `f^0 = 1`.
    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut result = Polynomial::one(self.nvars);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Direct sum `Σ c_α p^α`.
    pub fn evaluate(&self, point: &[Complex64]) -> Result<Complex64, PolyError> {
        self.check_len(point.len())?;
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(*c, |acc, (&k, z)| acc * z.powu(k))
            })
            .sum())
    }

    pub fn evaluate_real(&self, point: &[f64]) -> Result<Complex64, PolyError> {
        let p: Vec<Complex64> = point.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        self.evaluate(&p)
    }

    /// Formal partial derivative `∂f/∂z_i`.
    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial, PolyError> {
        self.check_index(i)?;
        let terms = self.terms.iter().filter(|(e, _)| e[i] > 0).map(|(e, c)| {
            let mut d = e.0.clone();
            let k = d[i];
            d[i] -= 1;
            (ExponentVector(d), c * f64::from(k))
        });
        Polynomial::from_terms(self.nvars, terms)
    }

    /// `∂_v f = Σ_i v_i ∂f/∂z_i`.
    pub fn directional_derivative(&self, v: &[f64]) -> Result<Polynomial, PolyError> {
        self.check_len(v.len())?;
        let mut terms = Vec::new();
        for (e, c) in &self.terms {
            for (i, &vi) in v.iter().enumerate() {
                if vi != 0.0 && e[i] > 0 {
                    let mut d = e.0.clone();
                    let k = d[i];
                    d[i] -= 1;
                    terms.push((ExponentVector(d), c * (vi * f64::from(k))));
                }
            }
        }
        Polynomial::from_terms(self.nvars, terms)
    }

    /// Substitutes `z_i ↦ images[i]`; all images share one target variable space.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        self.check_len(images.len())?;
        let target = match images.first() {
            Some(p) => p.nvars,
            None => return Err(PolyError::NoVariables),
        };
        if let Some(bad) = images.iter().find(|p| p.nvars != target) {
            return Err(PolyError::SpaceMismatch {
                left: target,
                right: bad.nvars,
            });
        }
        let powers = PowerTable::new(self, images, Polynomial::one(target));
        let mut out = Polynomial::zero(target);
        for (e, c) in &self.terms {
            let mut term = Polynomial::constant(target, *c);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = &term * powers.get(i, k);
                }
            }
            for (te, tc) in term.terms {
                *out.terms.entry(te).or_insert_with(Complex64::zero) += tc;
            }
        }
        out.prune();
        Ok(out)
    }

    /// `g(y_1..y_k) = f(a + Σ_j y_j v^{(j)})`.
    pub fn affine_substitute(
        &self,
        a: &[Complex64],
        dirs: &[Vec<f64>],
    ) -> Result<Polynomial, PolyError> {
        self.check_len(a.len())?;
        if dirs.is_empty() {
            return Err(PolyError::NoDirections);
        }
        for d in dirs {
            self.check_len(d.len())?;
        }
        let k = dirs.len();
        let images: Vec<Polynomial> = (0..self.nvars)
            .map(|i| {
                let coeffs: Vec<Complex64> =
                    dirs.iter().map(|d| Complex64::new(d[i], 0.0)).collect();
                Polynomial::linear(&coeffs, a[i])
            })
            .collect();
        debug_assert!(images.iter().all(|p| p.nvars == k));
        self.substitute(&images)
    }

    /// The univariate polynomial `t ↦ f(base + t·dir)` for complex base and direction.
    pub fn restrict_to_line(
        &self,
        base: &[Complex64],
        dir: &[Complex64],
    ) -> Result<UnivariatePoly, PolyError> {
        self.check_len(base.len())?;
        self.check_len(dir.len())?;
        if self.total_degree() > MAX_LINE_DEGREE {
            return Err(PolyError::DegreeTooLarge {
                degree: self.total_degree(),
                max: MAX_LINE_DEGREE,
            });
        }
        let lines: Vec<UnivariatePoly> = base
            .iter()
            .zip(dir)
            .map(|(&b, &d)| UnivariatePoly::from_coeffs_raw(vec![b, d]))
            .collect();
        let powers = PowerTable::new(self, &lines, UnivariatePoly::one());
        let mut acc = vec![Complex64::zero(); self.total_degree() as usize + 1];
        let mut bound = 0.0;
        for (e, c) in &self.terms {
            let mut term = UnivariatePoly::constant(*c);
            let mut mag = c.norm();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = term.mul(powers.get(i, k));
                    mag *= (base[i].norm() + dir[i].norm()).powi(k as i32);
                }
            }
            bound += mag;
            for (j, v) in term.coeffs().iter().enumerate() {
                acc[j] += v;
            }
        }
        Ok(UnivariatePoly::from_coeffs_trimmed(acc, PRUNE_TOL * bound.max(1.0)))
    }

    /// `t ↦ f(x + t·y)` for real `x, y`; coefficients in increasing degree.
    pub fn univariate_restriction(&self, x: &[f64], y: &[f64]) -> Result<UnivariatePoly, PolyError> {
        let to_c = |v: &[f64]| v.iter().map(|&r| Complex64::new(r, 0.0)).collect::<Vec<_>>();
        self.restrict_to_line(&to_c(x), &to_c(y))
    }

    /// `ρ_v(f)`: the degree of `t ↦ f(w + t v)` for generic `w`.
    ///
    /// Takes the maximum over [`DIRECTION_DEGREE_SAMPLES`] base points drawn
    /// uniformly from the unit polydisc with a fixed seed.
    pub fn degree_in_direction(&self, v: &[f64]) -> Result<u32, PolyError> {
        self.check_len(v.len())?;
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(DIRECTION_DEGREE_SEED);
        let dir: Vec<Complex64> = v.iter().map(|&r| Complex64::new(r, 0.0)).collect();
        let mut best = 0;
        for _ in 0..DIRECTION_DEGREE_SAMPLES {
            let w: Vec<Complex64> = (0..self.nvars)
                .map(|_| {
                    let r = rng.random::<f64>().sqrt();
                    let theta = rng.random::<f64>() * std::f64::consts::TAU;
                    Complex64::from_polar(r, theta)
                })
                .collect();
            let p = self.restrict_to_line(&w, &dir)?;
            best = best.max(p.degree().unwrap_or(0));
        }
        Ok(best as u32)
    }

    /// `init_w(f)`: the terms whose exponents maximize `⟨w, α⟩`.
    pub fn initial_form(&self, w: &Weights) -> Result<Polynomial, PolyError> {
        self.check_len(w.len())?;
        if self.is_zero() {
            return Ok(self.clone());
        }
        let keep: Vec<&ExponentVector> = match w {
            Weights::Exact(wq) => {
                let pairs: Vec<_> = self.terms.keys().map(|e| (e, exact_pairing(wq, e))).collect();
                let max = pairs.iter().map(|(_, p)| *p).max().expect("nonempty");
                pairs.into_iter().filter(|(_, p)| *p == max).map(|(e, _)| e).collect()
            }
            Weights::Float(_) => {
                let pairs: Vec<_> = self.terms.keys().map(|e| (e, w.pairing(e))).collect();
                let max = pairs
                    .iter()
                    .map(|(_, p)| *p)
                    .fold(f64::NEG_INFINITY, f64::max);
                let tol = PAIRING_TIE_TOL * max.abs().max(1.0);
                pairs
                    .into_iter()
                    .filter(|(_, p)| *p >= max - tol)
                    .map(|(e, _)| e)
                    .collect()
            }
        };
        let terms = keep.into_iter().map(|e| (e.clone(), self.terms[e]));
        Polynomial::from_terms(self.nvars, terms)
    }

    /// Keeps the terms for which `pred` holds.
    pub fn filter_terms(&self, mut pred: impl FnMut(&ExponentVector, &Complex64) -> bool) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, c)| pred(e, c))
                .map(|(e, c)| (e.clone(), *c))
                .collect(),
        }
    }

    /// Rewrites every term through `f`, merging collisions, into a space of `nvars` variables.
    pub fn map_terms(
        &self,
        nvars: usize,
        mut f: impl FnMut(&ExponentVector, Complex64) -> (ExponentVector, Complex64),
    ) -> Result<Polynomial, PolyError> {
        Polynomial::from_terms(nvars, self.terms.iter().map(|(e, c)| f(e, *c)))
    }

    /// The same polynomial in `nvars + 1` variables; the appended last variable does not occur.
    pub fn lift(&self) -> Polynomial {
        let n = self.nvars + 1;
        Polynomial {
            nvars: n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut v = e.0.clone();
                    v.push(0);
                    (ExponentVector(v), *c)
                })
                .collect(),
        }
    }

    /// Maximum coefficient difference against `other`, over the union of supports.
    pub fn max_coeff_diff(&self, other: &Polynomial) -> f64 {
        self.terms
            .keys()
            .chain(other.terms.keys())
            .map(|e| (self.coeff(e) - other.coeff(e)).norm())
            .fold(0.0, f64::max)
    }
}

/// Cached powers `images[i]^k` for `k ≤ deg_i(f)`.
struct PowerTable<T> {
    powers: Vec<Vec<T>>,
}

trait RingLike: Sized {
    fn ring_mul(&self, other: &Self) -> Self;
}

impl RingLike for Polynomial {
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl RingLike for UnivariatePoly {
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

impl<T: RingLike> PowerTable<T> {
    fn new(f: &Polynomial, images: &[T], one: T) -> Self
    where
        T: Clone,
    {
        let powers = images
            .iter()
            .enumerate()
            .map(|(i, img)| {
                let deg = f.terms.keys().map(|e| e[i]).max().unwrap_or(0);
                let mut row = vec![one.clone()];
                for k in 1..=deg as usize {
                    let next = row[k - 1].ring_mul(img);
                    row.push(next);
                }
                row
            })
            .collect();
        PowerTable { powers }
    }

    fn get(&self, i: usize, k: u32) -> &T {
        &self.powers[i][k as usize]
    }
}

impl<'a> Add for &'a Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial addition across variable spaces")
    }
}

impl<'a> Sub for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial subtraction across variable spaces")
    }
}

impl<'a> Mul for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial product across variable spaces")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(-Complex64::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_vector(self))
    }
}
