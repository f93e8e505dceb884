use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{CombinatError, SymError};
use crate::poly::{graded_lex_desc, ExponentVector, Polynomial};
use crate::symmat::{check_order, principal_minor, SymVarSpace};

/// Kinds of moves between monomials, in the order the search tries them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    /// Multiply by `z_ij^{±1}`.
    Linear,
    /// Multiply by `z_ij^{±1} z_kl^{±1}`.
    Double,
    /// Multiply by `z_ij z_kl z_ik^{-1} z_jl^{-1}`.
    Transposition,
}

impl StepKind {
    pub const ALL: [StepKind; 3] = [StepKind::Linear, StepKind::Double, StepKind::Transposition];
}

/// One move of a [`StepSequence`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub kind: StepKind,
    /// Change of the flat exponent vector.
    pub delta: Vec<i64>,
    /// Monomial reached.
    pub to: ExponentVector,
    /// Flat L1 distance from `to` to the target.
    pub distance: u32,
}

/// A path of support monomials towards a diagonal target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepSequence {
    pub start: ExponentVector,
    pub target: ExponentVector,
    pub start_distance: u32,
    pub steps: Vec<Step>,
}

impl StepSequence {
    /// Rechecks membership in `support`, strict decrease of the distance, step
    /// arithmetic and the endpoint.
    pub fn validate(&self, support: &BTreeSet<ExponentVector>) -> bool {
        if !support.contains(&self.start) || self.start_distance != self.start.l1_distance(&self.target) {
            return false;
        }
        let mut at = self.start.clone();
        let mut dist = self.start_distance;
        for step in &self.steps {
            let Some(next) = apply_delta(&at, &step.delta) else {
                return false;
            };
            let d = next.l1_distance(&self.target);
            if next != step.to || d != step.distance || d >= dist || !support.contains(&next) {
                return false;
            }
            at = next;
            dist = d;
        }
        at == self.target
    }

    /// Kinds used, in order.
    pub fn kinds(&self) -> Vec<StepKind> {
        self.steps.iter().map(|s| s.kind).collect()
    }
}

/// Result of a step search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchOutcome {
    Path(StepSequence),
    /// No diagonal target was reachable; `explored` counts visited monomials over all targets.
    Exhausted { explored: usize },
}

impl SearchOutcome {
    pub fn path(&self) -> Option<&StepSequence> {
        match self {
            SearchOutcome::Path(p) => Some(p),
            SearchOutcome::Exhausted { .. } => None,
        }
    }
}

fn apply_delta(e: &ExponentVector, delta: &[i64]) -> Option<ExponentVector> {
    e.iter()
        .zip(delta)
        .map(|(&x, &d)| u32::try_from(i64::from(x) + d).ok())
        .collect::<Option<Vec<u32>>>()
        .map(ExponentVector::from)
}

/// All distinct nonzero deltas of one step kind.
fn deltas(space: &SymVarSpace, kind: StepKind) -> Vec<Vec<i64>> {
    let m = space.nvars();
    let n = space.order();
    let mut out = BTreeSet::new();
    match kind {
        StepKind::Linear => {
            for k in 0..m {
                for s in [1, -1] {
                    let mut d = vec![0; m];
                    d[k] = s;
                    out.insert(d);
                }
            }
        }
        StepKind::Double => {
            for k in 0..m {
                for l in k..m {
                    for s in [1, -1] {
                        for t in [1, -1] {
                            let mut d = vec![0; m];
                            d[k] += s;
                            d[l] += t;
                            if d.iter().any(|&x| x != 0) {
                                out.insert(d);
                            }
                        }
                    }
                }
            }
        }
        StepKind::Transposition => {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        for l in 0..n {
                            let mut d = vec![0; m];
                            d[space.index(i, j)] += 1;
                            d[space.index(k, l)] += 1;
                            d[space.index(i, k)] -= 1;
                            d[space.index(j, l)] -= 1;
                            if d.iter().any(|&x| x != 0) {
                                out.insert(d);
                            }
                        }
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Breadth-first search from `beta` over distance-decreasing steps of the given kinds.
///
/// Diagonal targets in `supp(f)` are tried by increasing flat L1 distance, ties
/// in graded lexicographic order. Neighbours are visited kind by kind in the
/// order of `kinds`, then in graded lexicographic order.
pub fn step_search(
    space: &SymVarSpace,
    f: &Polynomial,
    beta: &ExponentVector,
    kinds: &[StepKind],
) -> Result<SearchOutcome, CombinatError> {
    space.check(f)?;
    let support = f.support();
    if !support.contains(beta) {
        return Err(CombinatError::NotInSupport);
    }
    let moves: Vec<(StepKind, Vec<Vec<i64>>)> = kinds.iter().map(|&k| (k, deltas(space, k))).collect();
    let mut targets: Vec<&ExponentVector> = support
        .iter()
        .filter(|e| space.is_diagonal_monomial(e))
        .collect();
    targets.sort_by(|a, b| {
        beta.l1_distance(a)
            .cmp(&beta.l1_distance(b))
            .then_with(|| graded_lex_desc(a, b))
    });
    let mut explored = 0;
    for target in targets {
        let mut parent: BTreeMap<ExponentVector, (ExponentVector, StepKind, Vec<i64>)> = BTreeMap::new();
        let mut queue = VecDeque::from([beta.clone()]);
        let mut seen = BTreeSet::from([beta.clone()]);
        while let Some(at) = queue.pop_front() {
            explored += 1;
            if &at == target {
                return Ok(SearchOutcome::Path(unwind(beta, target, &parent)));
            }
            let dist = at.l1_distance(target);
            for (kind, ds) in &moves {
                let mut next: Vec<(ExponentVector, &Vec<i64>)> = ds
                    .iter()
                    .filter_map(|d| apply_delta(&at, d).map(|e| (e, d)))
                    .filter(|(e, _)| support.contains(e) && e.l1_distance(target) < dist)
                    .collect();
                next.sort_by(|a, b| graded_lex_desc(&a.0, &b.0));
                for (e, d) in next {
                    if seen.insert(e.clone()) {
                        parent.insert(e.clone(), (at.clone(), *kind, d.clone()));
                        queue.push_back(e);
                    }
                }
            }
        }
    }
    Ok(SearchOutcome::Exhausted { explored })
}

fn unwind(
    start: &ExponentVector,
    target: &ExponentVector,
    parent: &BTreeMap<ExponentVector, (ExponentVector, StepKind, Vec<i64>)>,
) -> StepSequence {
    let mut steps = Vec::new();
    let mut at = target.clone();
    while let Some((prev, kind, delta)) = parent.get(&at) {
        steps.push(Step {
            kind: *kind,
            delta: delta.clone(),
            distance: at.l1_distance(target),
            to: at.clone(),
        });
        at = prev.clone();
    }
    steps.reverse();
    StepSequence {
        start: start.clone(),
        target: target.clone(),
        start_distance: start.l1_distance(target),
        steps,
    }
}

/// [`step_search`] with linear, double and transposition steps.
pub fn conjecture_search(
    space: &SymVarSpace,
    f: &Polynomial,
    beta: &ExponentVector,
) -> Result<SearchOutcome, CombinatError> {
    step_search(space, f, beta, &StepKind::ALL)
}

/// `Σ_J c_J det(Z_J)` over 0-based index subsets `J`, with `det(Z_∅) = 1`.
pub fn lpm_build(order: usize, coeffs: &[(Vec<usize>, Complex64)]) -> Result<Polynomial, SymError> {
    check_order(order)?;
    let space = SymVarSpace::new(order);
    let mut f = Polynomial::zero(space.nvars());
    for (subset, c) in coeffs {
        f = f.checked_add(&principal_minor(&space, subset)?.scale(*c))?;
    }
    Ok(f)
}
