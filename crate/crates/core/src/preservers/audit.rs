use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::{apply, PreserverSpec};
use crate::error::PreserverError;
use crate::poly::Polynomial;
use crate::space::Space;
use crate::stabcheck::{check_stability, min_eigenvalue, ConeSpec, FalsifierConfig, StabilityVerdict};
use crate::symmat::{CongruenceKind, WeightMatrix};
use crate::text::format_polynomial;

const MEMBERSHIP_TOL: f64 = 1e-12;
const ORTHOGONALITY_TOL: f64 = 1e-9;

/// Whether a stability guarantee licenses the transform for the audit cone.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Guarantee {
    /// Name of the statement that licenses the transform, if any.
    pub tag: Option<String>,
    pub applies: bool,
    pub reason: String,
}

impl Guarantee {
    fn holds(tag: &str, reason: impl Into<String>) -> Self {
        Guarantee {
            tag: Some(tag.to_string()),
            applies: true,
            reason: reason.into(),
        }
    }

    fn fails(tag: &str, reason: impl Into<String>) -> Self {
        Guarantee {
            tag: Some(tag.to_string()),
            applies: false,
            reason: reason.into(),
        }
    }
}

/// Before/after falsifier results for one transform application.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub transform: String,
    pub input_space: Space,
    pub input: String,
    /// Verdict on the input, or on `g + y f` over `K × R_{≥0}` for Lieb–Sokal.
    pub input_verdict: StabilityVerdict,
    pub output_space: Space,
    pub output: String,
    #[serde(skip)]
    pub output_polynomial: Option<Polynomial>,
    pub output_zero: bool,
    pub output_verdict: Option<StabilityVerdict>,
    pub guarantee: Guarantee,
    /// False only for a clean input whose image has a verified counterexample under an applicable guarantee.
    pub agreement: bool,
    pub notes: Vec<String>,
}

fn is_psd_matrix(m: &DMatrix<f64>, strict: bool) -> bool {
    let lam = min_eigenvalue(m);
    let scale = m.amax().max(1.0);
    if strict {
        lam > MEMBERSHIP_TOL * scale
    } else {
        lam >= -MEMBERSHIP_TOL * scale
    }
}

/// The guarantee attached to `spec` when auditing over `cone`.
pub fn guarantee(spec: &PreserverSpec, space: &Space, cone: &ConeSpec) -> Guarantee {
    let orthant = matches!(cone, ConeSpec::Orthant(n) if *n == space.nvars());
    let psd = match (cone, space) {
        (ConeSpec::Psd(n), Space::Sym(s)) => *n == s.order(),
        _ => false,
    };
    let elementary = |tag: &str| {
        if orthant {
            Guarantee::holds(tag, "stable inputs map to stable polynomials or zero")
        } else {
            Guarantee::fails(tag, "guarantee stated for the nonnegative orthant only")
        }
    };
    let psd_only = |tag: &str, ok: bool, why: &str| {
        if !psd {
            Guarantee::fails(tag, "guarantee stated for the psd cone of matching order")
        } else if ok {
            Guarantee::holds(tag, "psd-stable inputs map to psd-stable polynomials or zero")
        } else {
            Guarantee::fails(tag, why)
        }
    };
    match spec {
        PreserverSpec::Permute(_)
        | PreserverSpec::Scale { .. }
        | PreserverSpec::Identify { .. }
        | PreserverSpec::Specialize { .. }
        | PreserverSpec::Invert(_)
        | PreserverSpec::Differentiate(_) => elementary("elementary-preserver"),
        PreserverSpec::InitialForm(_) => elementary("initial-form"),
        PreserverSpec::DirDerivative(v) => {
            if cone.contains(v, MEMBERSHIP_TOL) {
                Guarantee::holds("conic-directional-derivative", "direction lies in K")
            } else {
                Guarantee::fails("conic-directional-derivative", "direction is not in K")
            }
        }
        PreserverSpec::Affine { a, dirs } => {
            let im: Vec<f64> = a.iter().map(|z| z.im).collect();
            if cone.contains(&im, MEMBERSHIP_TOL) && dirs.iter().all(|d| cone.contains(d, MEMBERSHIP_TOL)) {
                Guarantee::holds("cone-subset-substitution", "Im(a) and all directions lie in K")
            } else {
                Guarantee::fails(
                    "cone-subset-substitution",
                    "Im(a) + pos(directions) is not contained in K",
                )
            }
        }
        PreserverSpec::PsdDiag => psd_only("psd-diagonal-restriction", true, ""),
        PreserverSpec::PsdMinor(_) => psd_only("psd-minorization", true, ""),
        PreserverSpec::PsdPermute(_) => psd_only("psd-permutation", true, ""),
        PreserverSpec::PsdCongruence { s, kind } => {
            let ok = match kind {
                CongruenceKind::Transpose => true,
                CongruenceKind::Inverse => {
                    let n = s.nrows();
                    (s.transpose() * s - DMatrix::identity(n, n)).amax() < ORTHOGONALITY_TOL
                }
            };
            psd_only(
                "psd-congruence",
                ok,
                "the symmetrized similarity is only covered for orthogonal S",
            )
        }
        PreserverSpec::PsdDirDerivative(v) => psd_only(
            "psd-directional-derivative",
            is_psd_matrix(v, false),
            "direction matrix is not positive semidefinite",
        ),
        PreserverSpec::PsdInversion(blocks) => psd_only(
            if blocks.is_some() {
                "psd-block-inversion"
            } else {
                "psd-inversion"
            },
            true,
            "",
        ),
        PreserverSpec::PsdInitialForm(w) => {
            let m = match w {
                WeightMatrix::Float(m) => m.clone(),
                exact => exact.to_f64(),
            };
            psd_only(
                "pd-initial-form",
                is_psd_matrix(&m, true),
                "weight matrix is not positive definite",
            )
        }
        PreserverSpec::LiebSokal { v, .. } => {
            if cone.contains(v, MEMBERSHIP_TOL) {
                Guarantee::holds(
                    "conic-lieb-sokal",
                    "direction lies in K; hypothesis on g + y f checked by the falsifier only",
                )
            } else {
                Guarantee::fails("conic-lieb-sokal", "direction is not in K")
            }
        }
    }
}

fn output_cone(spec: &PreserverSpec, cone: &ConeSpec, out: &Space) -> ConeSpec {
    match (spec, out) {
        (PreserverSpec::PsdDiag, Space::Vector(n)) | (PreserverSpec::Affine { .. }, Space::Vector(n)) => {
            ConeSpec::Orthant(*n)
        }
        (PreserverSpec::PsdMinor(_), Space::Sym(s)) => ConeSpec::Psd(s.order()),
        _ => cone.clone(),
    }
}

/// Runs the falsifier on `f` and on `apply(spec, f)` and compares in the licensed direction.
pub fn audit(
    spec: &PreserverSpec,
    space: &Space,
    f: &Polynomial,
    cone: &ConeSpec,
    config: &FalsifierConfig,
) -> Result<AuditReport, PreserverError> {
    let mut guarantee = guarantee(spec, space, cone);
    let mut notes = Vec::new();
    let input_verdict = match spec {
        PreserverSpec::LiebSokal { g, .. } => {
            let n = f.nvars();
            let y = Polynomial::var(n + 1, n)?;
            let hypothesis = g.lift().checked_add(&(&y * &f.lift()))?;
            notes.push(format!(
                "input verdict is for g + y*f = {} over K x R>=0",
                format_polynomial(&hypothesis, &Space::Vector(n + 1))
            ));
            check_stability(&hypothesis, &cone.lifted(), config)?
        }
        _ => check_stability(f, cone, config)?,
    };
    let out = apply(spec, space, f)?;
    if let Some(c) = out.condition {
        if c > crate::symmat::CONDITION_WARNING {
            notes.push(format!("congruence matrix is ill-conditioned (condition number {c:.3e})"));
        }
    }
    let output_zero = out.polynomial.is_zero();
    let output_verdict = if output_zero {
        None
    } else {
        let k = output_cone(spec, cone, &out.space);
        Some(check_stability(&out.polynomial, &k, config)?)
    };
    if !guarantee.applies {
        notes.push(format!("no guarantee: {}", guarantee.reason));
    }
    let violated = guarantee.applies
        && input_verdict.is_clean()
        && output_verdict.as_ref().is_some_and(|v| !v.is_clean());
    if violated {
        guarantee.reason.push_str("; clean input produced a verified counterexample");
    }
    Ok(AuditReport {
        transform: spec.name().to_string(),
        input_space: *space,
        input: format_polynomial(f, space),
        input_verdict,
        output_space: out.space,
        output: format_polynomial(&out.polynomial, &out.space),
        output_polynomial: Some(out.polynomial),
        output_zero,
        output_verdict,
        guarantee,
        agreement: !violated,
        notes,
    })
}
