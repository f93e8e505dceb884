use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{is_jump_system, JumpSystemCheck, SupportSet};
use crate::error::CombinatError;
use crate::poly::Polynomial;
use crate::symmat::{principal_minor, SymVarSpace};

/// A polynomial `Σ c_α det(Z_1)^{α_1} ⋯ det(Z_k)^{α_k}` in disjoint diagonal blocks.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DetBlockSpec {
    /// Block sizes `d_1, …, d_k`, laid out along the diagonal in order.
    pub sizes: Vec<usize>,
    /// Determinantal exponents and their coefficients.
    pub terms: Vec<(Vec<u32>, Complex64)>,
}

impl DetBlockSpec {
    pub fn new(sizes: Vec<usize>, terms: Vec<(Vec<u32>, Complex64)>) -> Result<Self, CombinatError> {
        let spec = DetBlockSpec { sizes, terms };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), CombinatError> {
        let bad = |msg: &str| Err(CombinatError::BadBlockSpec(msg.to_string()));
        if self.sizes.is_empty() || self.sizes.contains(&0) {
            return bad("block sizes must be positive");
        }
        if self.terms.is_empty() {
            return bad("no terms");
        }
        if self.terms.iter().any(|(a, _)| a.len() != self.sizes.len()) {
            return bad("exponent length differs from the number of blocks");
        }
        if self.terms.iter().any(|(_, c)| *c == Complex64::new(0.0, 0.0)) {
            return bad("zero coefficient");
        }
        Ok(())
    }

    /// Matrix order `Σ d_i`.
    pub fn order(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Exponents with coefficients summed; exact cancellations removed.
    pub fn collected(&self) -> BTreeMap<Vec<u32>, Complex64> {
        let mut out: BTreeMap<Vec<u32>, Complex64> = BTreeMap::new();
        for (a, c) in &self.terms {
            *out.entry(a.clone()).or_default() += c;
        }
        out.retain(|_, c| c.norm() > 0.0);
        out
    }

    /// The largest determinantal monomial dividing every term, and the quotient.
    pub fn standard_form(&self) -> (Vec<u32>, BTreeMap<Vec<u32>, Complex64>) {
        let terms = self.collected();
        let gamma: Vec<u32> = (0..self.sizes.len())
            .map(|i| terms.keys().map(|a| a[i]).min().unwrap_or(0))
            .collect();
        let residual = terms
            .into_iter()
            .map(|(a, c)| (a.iter().zip(&gamma).map(|(x, g)| x - g).collect(), c))
            .collect();
        (gamma, residual)
    }

    /// Expands the polynomial in the flat variables of the full matrix.
    pub fn to_polynomial(&self) -> Result<(SymVarSpace, Polynomial), CombinatError> {
        self.validate()?;
        let space = SymVarSpace::new(self.order());
        let mut offset = 0;
        let mut dets = Vec::with_capacity(self.sizes.len());
        for &d in &self.sizes {
            let block: Vec<usize> = (offset..offset + d).collect();
            dets.push(principal_minor(&space, &block)?);
            offset += d;
        }
        let mut f = Polynomial::zero(space.nvars());
        for (a, c) in &self.terms {
            let mut term = Polynomial::constant(space.nvars(), *c);
            for (det, &k) in dets.iter().zip(a) {
                term = term.checked_mul(&det.pow(k))?;
            }
            f = f.checked_add(&term)?;
        }
        Ok((space, f))
    }
}

/// A point of the residual support whose `e_i`-line is not filled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalFailure {
    pub block: usize,
    pub beta: Vec<u32>,
    /// The missing point `β + c e_i`.
    pub missing: Vec<u32>,
}

/// Determinantal-support report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DetSupportReport {
    /// Exponent of the factored-out `det(Z)^γ`.
    pub gamma: Vec<u32>,
    /// `supp_det` of the residual in standard form.
    pub supp_det: Vec<Vec<u32>>,
    pub jump_system: JumpSystemCheck,
    /// Blocks of size at least 3 that appear in the residual.
    pub oversized_blocks: Vec<usize>,
    pub block_size_ok: bool,
    pub interval_failures: Vec<IntervalFailure>,
    pub interval_property: bool,
}

impl DetSupportReport {
    /// True when some necessary condition for psd-stability fails.
    pub fn not_psd_stable(&self) -> bool {
        !(self.jump_system.holds() && self.block_size_ok && self.interval_property)
    }
}

pub fn det_support_analysis(spec: &DetBlockSpec) -> Result<DetSupportReport, CombinatError> {
    spec.validate()?;
    let (gamma, residual) = spec.standard_form();
    if residual.is_empty() {
        return Err(CombinatError::BadBlockSpec("all terms cancel".to_string()));
    }
    let support: Vec<Vec<u32>> = residual.keys().cloned().collect();
    let set = SupportSet::from_points(
        spec.sizes.len(),
        support.iter().map(|a| a.iter().map(|&x| i64::from(x)).collect()),
    )?;
    let jump_system = is_jump_system(&set);
    let oversized_blocks: Vec<usize> = (0..spec.sizes.len())
        .filter(|&i| spec.sizes[i] >= 3 && support.iter().any(|b| b[i] > 0))
        .collect();
    let mut interval_failures = Vec::new();
    for (i, _) in spec.sizes.iter().enumerate().filter(|(_, &d)| d == 2) {
        let cap = support.iter().map(|b| b[i]).max().unwrap_or(0);
        for beta in &support {
            for value in 0..=cap {
                let mut p = beta.clone();
                p[i] = value;
                if !residual.contains_key(&p) {
                    interval_failures.push(IntervalFailure {
                        block: i,
                        beta: beta.clone(),
                        missing: p,
                    });
                    break;
                }
            }
        }
    }
    Ok(DetSupportReport {
        gamma,
        supp_det: support,
        jump_system,
        block_size_ok: oversized_blocks.is_empty(),
        oversized_blocks,
        interval_property: interval_failures.is_empty(),
        interval_failures,
    })
}
