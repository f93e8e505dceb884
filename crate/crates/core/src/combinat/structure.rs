use serde::{Deserialize, Serialize};

use crate::error::CombinatError;
use crate::poly::Polynomial;
use crate::symmat::SymVarSpace;

/// Off-diagonal variables whose diagonal partners are missing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    /// Pairs `(i, j)`, `i < j`, with `z_ij` present but `z_ii` or `z_jj` absent.
    pub violations: Vec<(usize, usize)>,
}

impl StructureReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn occurring(space: &SymVarSpace, f: &Polynomial) -> Vec<bool> {
    let mut seen = vec![false; space.nvars()];
    for (e, _) in f.terms() {
        for (k, &x) in e.iter().enumerate() {
            seen[k] |= x > 0;
        }
    }
    seen
}

/// Checks that every occurring `z_ij` comes with both `z_ii` and `z_jj`.
pub fn structure_check(space: &SymVarSpace, f: &Polynomial) -> Result<StructureReport, CombinatError> {
    space.check(f)?;
    let seen = occurring(space, f);
    let violations = space
        .pairs()
        .enumerate()
        .filter(|&(k, (i, j))| {
            i != j && seen[k] && !(seen[space.index(i, i)] && seen[space.index(j, j)])
        })
        .map(|(_, p)| p)
        .collect();
    Ok(StructureReport { violations })
}

/// Non-mixed criteria for psd-stability.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonMixedReport {
    /// Every monomial is purely diagonal or purely off-diagonal.
    pub is_non_mixed: bool,
    pub homogeneous: bool,
    pub degree: u32,
    pub has_offdiagonal: bool,
    /// False for a homogeneous non-mixed polynomial of degree at least 3 with an off-diagonal term.
    pub hom_degree_bound_ok: bool,
    /// For homogeneous non-mixed polynomials of degree 2: every off-diagonal monomial is a square `z_ij^2`.
    pub degree2_form_ok: Option<bool>,
    /// True only when one of the criteria rules out psd-stability.
    pub not_psd_stable: bool,
}

impl NonMixedReport {
    pub fn verdict(&self) -> &'static str {
        if self.not_psd_stable {
            "not psd-stable"
        } else {
            "consistent with psd-stability"
        }
    }
}

pub fn non_mixed_analysis(space: &SymVarSpace, f: &Polynomial) -> Result<NonMixedReport, CombinatError> {
    space.check(f)?;
    let is_non_mixed = f
        .terms()
        .all(|(e, _)| space.is_diagonal_monomial(e) || space.is_offdiagonal_monomial(e));
    let homogeneous = f.is_homogeneous();
    let degree = f.total_degree();
    let offdiag: Vec<_> = f
        .terms()
        .map(|(e, _)| e)
        .filter(|e| space.is_offdiagonal_monomial(e))
        .collect();
    let has_offdiagonal = !offdiag.is_empty();
    let applies = is_non_mixed && homogeneous;
    let hom_degree_bound_ok = !(applies && has_offdiagonal && degree >= 3);
    let degree2_form_ok = (applies && degree == 2).then(|| {
        offdiag
            .iter()
            .all(|e| e.iter().filter(|&&x| x > 0).count() == 1)
    });
    Ok(NonMixedReport {
        is_non_mixed,
        homogeneous,
        degree,
        has_offdiagonal,
        hom_degree_bound_ok,
        degree2_form_ok,
        not_psd_stable: !hom_degree_bound_ok || degree2_form_ok == Some(false),
    })
}
