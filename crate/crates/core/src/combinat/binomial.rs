use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::CombinatError;
use crate::poly::{ExponentVector, Polynomial};
use crate::symmat::SymVarSpace;

/// Relative size of an imaginary part that still counts as real.
const RATIO_IM_TOL: f64 = 1e-12;

fn is_real(r: Complex64) -> bool {
    r.im.abs() <= RATIO_IM_TOL * r.norm()
}

/// Support shape of a binomial after its common monomial factor is removed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StableBinomialForm {
    /// `{0, e_i}`.
    FormA { i: usize },
    /// `{e_i, e_j}`, with `ratio_ok` iff `c_α / c_β ≥ 0`.
    FormB { i: usize, j: usize, ratio_ok: bool },
    /// `{0, e_i + e_j}` with `i ≤ j`, with `ratio_ok` iff `c_α / c_β < 0`.
    FormC { i: usize, j: usize, ratio_ok: bool },
    Violates,
}

impl StableBinomialForm {
    /// False when the classification rules out stability.
    pub fn is_consistent(&self) -> bool {
        match self {
            StableBinomialForm::FormA { .. } => true,
            StableBinomialForm::FormB { ratio_ok, .. } | StableBinomialForm::FormC { ratio_ok, .. } => {
                *ratio_ok
            }
            StableBinomialForm::Violates => false,
        }
    }
}

/// Positions of the nonzero entries, each repeated by its multiplicity.
fn spread(e: &ExponentVector) -> Vec<usize> {
    e.iter()
        .enumerate()
        .flat_map(|(k, &x)| std::iter::repeat_n(k, x as usize))
        .collect()
}

/// Classifies `c_α z^α + c_β z^β` against the possible supports of stable binomials.
pub fn classify_stable_binomial(
    alpha: &ExponentVector,
    beta: &ExponentVector,
    c_alpha: Complex64,
    c_beta: Complex64,
) -> Result<StableBinomialForm, CombinatError> {
    if alpha.len() != beta.len() {
        return Err(CombinatError::LengthMismatch);
    }
    if c_alpha == Complex64::new(0.0, 0.0) || c_beta == Complex64::new(0.0, 0.0) {
        return Err(CombinatError::ZeroCoefficient);
    }
    if alpha == beta {
        return Err(CombinatError::SamePoint);
    }
    let gamma = alpha.meet(beta);
    let a = spread(&alpha.checked_sub(&gamma).expect("meet is below alpha"));
    let b = spread(&beta.checked_sub(&gamma).expect("meet is below beta"));
    let ratio = c_alpha / c_beta;
    let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    Ok(match (short.as_slice(), long.as_slice()) {
        ([], [i]) => StableBinomialForm::FormA { i: *i },
        ([p], [q]) => StableBinomialForm::FormB {
            i: *p.min(q),
            j: *p.max(q),
            ratio_ok: is_real(ratio) && ratio.re > 0.0,
        },
        ([], [i, j]) => StableBinomialForm::FormC {
            i: *i,
            j: *j,
            ratio_ok: is_real(ratio) && ratio.re < 0.0,
        },
        _ => StableBinomialForm::Violates,
    })
}

/// Shape of a binomial in symmetric matrix variables.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum PsdBinomialForm {
    /// Only diagonal variables; `stable` classifies the diagonal binomial, with
    /// `i, j` as matrix indices.
    DiagFormA { stable: StableBinomialForm },
    /// `c_1 z_ii z_jj + c_2 z_ij^2` with `i < j`.
    OffdiagFormB { i: usize, j: usize, ratio_real: bool },
    Violates { reason: String },
}

/// Result of [`classify_psd_binomial`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PsdBinomialClass {
    /// Exponent of the common factor `Z^γ`.
    pub gamma: ExponentVector,
    pub form: PsdBinomialForm,
    /// Flat L1 distance between the two residual exponents.
    pub distance: u32,
}

impl PsdBinomialClass {
    /// False when the classification rules out psd-stability.
    pub fn is_consistent(&self) -> bool {
        match &self.form {
            PsdBinomialForm::DiagFormA { stable } => stable.is_consistent(),
            PsdBinomialForm::OffdiagFormB { ratio_real, .. } => *ratio_real,
            PsdBinomialForm::Violates { .. } => false,
        }
    }
}

/// Classifies a two-term polynomial over a symmetric variable space.
pub fn classify_psd_binomial(
    space: &SymVarSpace,
    f: &Polynomial,
) -> Result<PsdBinomialClass, CombinatError> {
    space.check(f)?;
    let terms: Vec<(&ExponentVector, &Complex64)> = f.terms().collect();
    let [(alpha, c1), (beta, c2)] = terms.as_slice() else {
        return Err(CombinatError::NotBinomial(terms.len()));
    };
    let gamma = alpha.meet(beta);
    let a = alpha.checked_sub(&gamma).expect("meet is below alpha");
    let b = beta.checked_sub(&gamma).expect("meet is below beta");
    let distance = a.l1_distance(&b);
    let violates = |reason: &str| PsdBinomialForm::Violates {
        reason: reason.to_string(),
    };
    let diagonal = space.is_diagonal_monomial(&a) && space.is_diagonal_monomial(&b);
    let form = if !space.is_diagonal_monomial(&gamma) {
        violates("common factor contains an off-diagonal variable")
    } else if diagonal && distance > 2 {
        violates("diagonal exponents are more than 2 apart")
    } else if diagonal {
        let diag = |e: &ExponentVector| -> ExponentVector {
            space.diagonal_indices().iter().map(|&k| e[k]).collect::<Vec<_>>().into()
        };
        PsdBinomialForm::DiagFormA {
            stable: classify_stable_binomial(&diag(&a), &diag(&b), **c1, **c2)?,
        }
    } else {
        let (diag_part, off_part, cd, co) = if space.is_diagonal_monomial(&a) {
            (&a, &b, **c1, **c2)
        } else {
            (&b, &a, **c2, **c1)
        };
        let off: Vec<usize> = spread(off_part);
        match off.as_slice() {
            [p, q] if p == q && !space.is_diagonal(*p) => {
                let (i, j) = space.pair(*p);
                let expected = space.index(i, i);
                let other = space.index(j, j);
                if spread(diag_part) == [expected.min(other), expected.max(other)] {
                    PsdBinomialForm::OffdiagFormB {
                        i,
                        j,
                        ratio_real: is_real(cd / co),
                    }
                } else {
                    violates("off-diagonal square is not paired with its diagonal product")
                }
            }
            _ => violates("residual pair is not of a psd-stable binomial shape"),
        }
    };
    Ok(PsdBinomialClass {
        gamma,
        form,
        distance,
    })
}
