//! Combinatorics of supports.
//!
//! Jump systems and the Two-Steps Axiom, the classifications of stable and
//! psd-stable binomials, the structure and non-mixed criteria, polynomials of
//! determinants and the step-sequence search between support monomials.

mod binomial;
mod detpoly;
mod steps;
mod structure;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::CombinatError;
use crate::poly::Polynomial;

pub use binomial::{
    classify_psd_binomial, classify_stable_binomial, PsdBinomialClass, PsdBinomialForm,
    StableBinomialForm,
};
pub use detpoly::{det_support_analysis, DetBlockSpec, DetSupportReport, IntervalFailure};
pub use steps::{
    conjecture_search, lpm_build, step_search, SearchOutcome, Step, StepKind, StepSequence,
};
pub use structure::{non_mixed_analysis, structure_check, NonMixedReport, StructureReport};

/// A finite set of integer points of a fixed dimension.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportSet {
    dim: usize,
    points: BTreeSet<Vec<i64>>,
}

impl SupportSet {
    pub fn new(dim: usize) -> Self {
        SupportSet {
            dim,
            points: BTreeSet::new(),
        }
    }

    pub fn from_points<I>(dim: usize, points: I) -> Result<Self, CombinatError>
    where
        I: IntoIterator<Item = Vec<i64>>,
    {
        let mut set = SupportSet::new(dim);
        for p in points {
            set.insert(p)?;
        }
        Ok(set)
    }

    /// `supp(f)`.
    pub fn of_polynomial(f: &Polynomial) -> Self {
        SupportSet {
            dim: f.nvars(),
            points: f.support().iter().map(|e| e.to_signed()).collect(),
        }
    }

    pub fn insert(&mut self, p: Vec<i64>) -> Result<bool, CombinatError> {
        if p.len() != self.dim {
            return Err(CombinatError::LengthMismatch);
        }
        Ok(self.points.insert(p))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.points.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.points.iter()
    }
}


fn plus(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `St(α, β)`: the signed unit vectors that move `α` one unit closer to `β`, in increasing order.
pub fn steps_between(alpha: &[i64], beta: &[i64]) -> Result<Vec<Vec<i64>>, CombinatError> {
    if alpha.len() != beta.len() {
        return Err(CombinatError::LengthMismatch);
    }
    if alpha == beta {
        return Err(CombinatError::SamePoint);
    }
    let mut out: Vec<Vec<i64>> = alpha
        .iter()
        .zip(beta)
        .enumerate()
        .filter(|(_, (a, b))| a != b)
        .map(|(i, (a, b))| {
            let mut s = vec![0; alpha.len()];
            s[i] = (b - a).signum();
            s
        })
        .collect();
    out.sort();
    Ok(out)
}

/// A failing instance of the Two-Steps Axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JumpViolation {
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    /// First step, with `α + σ` outside the set and no second step back in.
    pub sigma: Vec<i64>,
}

/// Result of [`is_jump_system`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum JumpSystemCheck {
    Holds,
    Fails(JumpViolation),
}

impl JumpSystemCheck {
    pub fn holds(&self) -> bool {
        matches!(self, JumpSystemCheck::Holds)
    }

    pub fn witness(&self) -> Option<&JumpViolation> {
        match self {
            JumpSystemCheck::Holds => None,
            JumpSystemCheck::Fails(v) => Some(v),
        }
    }
}

/// Exhaustive Two-Steps Axiom check over all ordered pairs.
///
/// The reported witness is the lexicographically smallest failing `(α, β, σ)`.
pub fn is_jump_system(set: &SupportSet) -> JumpSystemCheck {
    for alpha in set.iter() {
        for beta in set.iter() {
            if alpha == beta {
                continue;
            }
            let sigmas = steps_between(alpha, beta).expect("distinct points of equal length");
            for sigma in sigmas {
                let first = plus(alpha, &sigma);
                if set.contains(&first) {
                    continue;
                }
                let back = steps_between(&first, beta)
                    .expect("distinct points of equal length")
                    .iter()
                    .any(|tau| set.contains(&plus(&first, tau)));
                if !back {
                    return JumpSystemCheck::Fails(JumpViolation {
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                        sigma,
                    });
                }
            }
        }
    }
    JumpSystemCheck::Holds
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(dim: usize, pts: &[&[i64]]) -> SupportSet {
        SupportSet::from_points(dim, pts.iter().map(|p| p.to_vec())).unwrap()
    }

    #[test]
    fn step_sets() {
        assert_eq!(steps_between(&[0, 0], &[2, 0]).unwrap(), vec![vec![1, 0]]);
        assert_eq!(
            steps_between(&[1, 1], &[0, 0]).unwrap(),
            vec![vec![-1, 0], vec![0, -1]]
        );
        assert_eq!(steps_between(&[1, 2], &[1, 2]), Err(CombinatError::SamePoint));
        assert_eq!(steps_between(&[1], &[1, 2]), Err(CombinatError::LengthMismatch));
    }

    #[test]
    fn small_jump_systems() {
        assert!(is_jump_system(&SupportSet::new(2)).holds());
        assert!(is_jump_system(&set(2, &[&[4, 1]])).holds());
        let gap = is_jump_system(&set(2, &[&[0, 0], &[3, 0]]));
        assert_eq!(
            gap.witness(),
            Some(&JumpViolation {
                alpha: vec![0, 0],
                beta: vec![3, 0],
                sigma: vec![1, 0],
            })
        );
        assert!(is_jump_system(&set(2, &[&[0, 0], &[2, 0]])).holds());
        assert!(!is_jump_system(&set(2, &[&[0, 0], &[2, 2]])).holds());
        assert!(is_jump_system(&set(2, &[&[1, 0], &[0, 1]])).holds());
    }

    #[test]
    fn support_of_polynomial() {
        let f = crate::text::parse_polynomial("z1^2 - 1", &crate::Space::Vector(2)).unwrap();
        let s = SupportSet::of_polynomial(&f);
        assert_eq!(s.len(), 2);
        assert!(s.contains(&[2, 0]));
        assert!(is_jump_system(&s).holds());
    }
}
