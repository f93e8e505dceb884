//! Built-in regression corpus and the preserver audit sweep.
//!
//! [`cases`] are fixed examples with known answers. [`stable_members`] are
//! polynomials that are stable by construction (determinants of shifted
//! variable matrices, products of stable factors, positive linear forms) and
//! [`audit_sweep`] pushes each of them through randomly parameterised
//! preservers, recording any clean input whose licensed image has a verified
//! counterexample.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::combinat::{
    classify_psd_binomial, classify_stable_binomial, det_support_analysis, non_mixed_analysis,
    step_search, structure_check, conjecture_search, DetBlockSpec, PsdBinomialForm,
    StableBinomialForm, StepKind,
};
use crate::error::PreserverError;
use crate::poly::{ExponentVector, Polynomial, Weights};
use crate::preservers::{audit, AuditReport, PreserverSpec};
use crate::space::Space;
use crate::stabcheck::{check_stability, ConeSpec, FalsifierConfig, WitnessSource};
use crate::symmat::{
    eval_at_matrix, frobenius_initial_form, frobenius_pairings, hadamard_scale,
    matrix_directional_derivative, poly_matrix_determinant, principal_minor, symbolic_determinant,
    v_matrix, BlockInversion, CongruenceKind, MatrixPoint, SymVarSpace, WeightMatrix,
};
use crate::text::{parse_polynomial, parse_weight_matrix};

/// A polynomial together with the space and cone it is stable for.
#[derive(Clone, Debug, PartialEq)]
pub struct Member {
    pub name: String,
    pub space: Space,
    pub cone: ConeSpec,
    pub polynomial: Polynomial,
    /// Block partition the polynomial respects, if any.
    pub blocks: Option<Vec<usize>>,
}

/// Outcome of one corpus case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseOutcome {
    pub key: String,
    pub passed: bool,
    pub detail: String,
}

/// A fixed example with a known answer.
pub struct Case {
    pub key: &'static str,
    pub run: fn(&FalsifierConfig) -> Result<String, String>,
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn sym(src: &str, n: usize) -> Result<(SymVarSpace, Polynomial), String> {
    let space = SymVarSpace::new(n);
    Ok((space, parse_polynomial(src, &Space::Sym(space)).map_err(err)?))
}

fn det(n: usize) -> Result<(SymVarSpace, Polynomial), String> {
    let space = SymVarSpace::new(n);
    Ok((space, symbolic_determinant(&space).map_err(err)?))
}

const INDEFINITE_W: &str = "[4,4,6;4,4,6;6,6,0]";
const INDEFINITE_FORM: &str = "-z11*z23^2 - z22*z13^2 + 2*z12*z13*z23";

fn case_det2_text(_: &FalsifierConfig) -> Result<String, String> {
    let (space, parsed) = sym("z11*z22 - z12^2", 2)?;
    ensure(parsed == symbolic_determinant(&space).map_err(err)?, "parsed text differs from det_2")?;
    Ok("parsed text equals the symbolic 2x2 determinant".into())
}

fn case_det3_monomials(_: &FalsifierConfig) -> Result<String, String> {
    let (_, d) = det(3)?;
    let (_, expected) = sym("z11*z22*z33 - z11*z23^2 - z22*z13^2 - z33*z12^2 + 2*z12*z13*z23", 3)?;
    ensure(d == expected, "det_3 differs from the five-term expansion")?;
    ensure(d.len() == 5, format!("det_3 has {} terms", d.len()))?;
    Ok("det_3 has the five expected terms".into())
}

fn vanishes_at_i_identity(src: &str, n: usize) -> Result<String, String> {
    let (space, f) = sym(src, n)?;
    let v = eval_at_matrix(&space, &f, &MatrixPoint::i_identity(n)).map_err(err)?;
    ensure(v.norm() == 0.0, format!("value at iI is {v}"))?;
    Ok(format!("{src} vanishes at iI_{n}"))
}

fn case_z12_at_i_identity(_: &FalsifierConfig) -> Result<String, String> {
    vanishes_at_i_identity("z12", 2)
}

fn case_indefinite_form_at_i_identity(_: &FalsifierConfig) -> Result<String, String> {
    vanishes_at_i_identity(INDEFINITE_FORM, 3)
}

fn case_indefinite_initial_form(_: &FalsifierConfig) -> Result<String, String> {
    let (space, d) = det(3)?;
    let w = parse_weight_matrix(INDEFINITE_W).map_err(err)?;
    let init = frobenius_initial_form(&space, &d, &w).map_err(err)?;
    let (_, expected) = sym(INDEFINITE_FORM, 3)?;
    ensure(init == expected, "initial form differs")?;
    let mut pairings: Vec<f64> = frobenius_pairings(&space, &d, &w.to_f64())
        .map_err(err)?
        .into_iter()
        .map(|(_, p)| p)
        .collect();
    pairings.sort_by(f64::total_cmp);
    ensure(pairings == [8.0, 8.0, 16.0, 16.0, 16.0], format!("pairings {pairings:?}"))?;
    Ok("initial form and pairings match exactly".into())
}

fn case_hadamard_limit(_: &FalsifierConfig) -> Result<String, String> {
    let (space, d) = det(3)?;
    let w = parse_weight_matrix(INDEFINITE_W).map_err(err)?;
    let init = frobenius_initial_form(&space, &d, &w).map_err(err)?;
    let scaled = hadamard_scale(&space, &d, &w.to_f64(), 1e6).map_err(err)?;
    let diff = scaled.max_coeff_diff(&init);
    ensure(diff < 1e-5, format!("max coefficient difference {diff:e}"))?;
    Ok(format!("lambda = 1e6 within {diff:.1e}"))
}

fn case_determinants_clean(cfg: &FalsifierConfig) -> Result<String, String> {
    for n in 2..=4 {
        let (space, d) = det(n)?;
        let v = check_stability(&d, &ConeSpec::Psd(space.order()), cfg).map_err(err)?;
        ensure(v.is_clean(), format!("det_{n}: {v}"))?;
    }
    Ok(format!("det_2, det_3, det_4 clean over {} trials", cfg.trials))
}

fn case_z12_counterexample(cfg: &FalsifierConfig) -> Result<String, String> {
    let (_, f) = sym("z12", 2)?;
    let v = check_stability(&f, &ConeSpec::Psd(2), cfg).map_err(err)?;
    let w = v.witness.as_ref().ok_or("no counterexample for z12")?;
    ensure(w.source == WitnessSource::PrePass, "witness is not iI_2")?;
    Ok(v.to_string())
}

fn case_indefinite_form_counterexample(cfg: &FalsifierConfig) -> Result<String, String> {
    let (_, f) = sym(INDEFINITE_FORM, 3)?;
    let v = check_stability(&f, &ConeSpec::Psd(3), cfg).map_err(err)?;
    let w = v.witness.as_ref().ok_or("no counterexample")?;
    ensure(w.source == WitnessSource::PrePass, "witness is not iI_3")?;
    ensure(w.residual < 1e-12, format!("residual {:e}", w.residual))?;
    Ok(v.to_string())
}

fn case_binomial_z1z2_minus_one(cfg: &FalsifierConfig) -> Result<String, String> {
    let f = parse_polynomial("z1*z2 - 1", &Space::Vector(2)).map_err(err)?;
    let v = check_stability(&f, &ConeSpec::Orthant(2), cfg).map_err(err)?;
    ensure(v.is_clean(), v.to_string())?;
    Ok(v.to_string())
}

fn case_specialization_as_affine(cfg: &FalsifierConfig) -> Result<String, String> {
    let space = Space::Vector(3);
    let f = &parse_polynomial("z1 + z2 + 1", &space).map_err(err)?
        * &parse_polynomial("z2 + 2*z3 - 1", &space).map_err(err)?;
    let b = Complex64::new(0.5, 0.25);
    let a = vec![b, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)];
    let dirs = vec![vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0]];
    let g = f.affine_substitute(&a, &dirs).map_err(err)?;
    let direct = f
        .substitute(&[
            Polynomial::constant(2, b),
            Polynomial::var(2, 0).map_err(err)?,
            Polynomial::var(2, 1).map_err(err)?,
        ])
        .map_err(err)?;
    ensure(g == direct, "affine substitution differs from specialization")?;
    let v = check_stability(&g, &ConeSpec::Orthant(2), cfg).map_err(err)?;
    ensure(v.is_clean(), v.to_string())?;
    Ok("specialization agrees with the affine form and stays clean".into())
}

fn case_diag_restriction_stable(cfg: &FalsifierConfig) -> Result<String, String> {
    for m in stable_members(cfg.seed).iter().filter(|m| m.space.as_sym().is_some()) {
        let s = m.space.as_sym().expect("filtered");
        let d = crate::symmat::diag_restriction(s, &m.polynomial).map_err(err)?;
        if d.is_zero() {
            continue;
        }
        let v = check_stability(&d, &ConeSpec::Orthant(s.order()), cfg).map_err(err)?;
        ensure(v.is_clean(), format!("{}: {v}", m.name))?;
    }
    Ok("diagonal restrictions of psd members are clean".into())
}

fn case_v12_derivative(cfg: &FalsifierConfig) -> Result<String, String> {
    let (space, d) = det(2)?;
    let out = matrix_directional_derivative(&space, &d, &v_matrix(2, 0, 1)).map_err(err)?;
    let (_, expected) = sym("z11 + z22 - 2*z12", 2)?;
    ensure(out == expected, "derivative differs")?;
    let r = audit(
        &PreserverSpec::PsdDirDerivative(v_matrix(2, 0, 1)),
        &Space::Sym(space),
        &d,
        &ConeSpec::Psd(2),
        cfg,
    )
    .map_err(err)?;
    ensure(r.input_verdict.is_clean(), "input not clean")?;
    ensure(
        r.output_verdict.as_ref().is_some_and(|v| v.is_clean()),
        "output not clean",
    )?;
    Ok("derivative matches and both sides are clean".into())
}

fn case_indefinite_weight_audit(cfg: &FalsifierConfig) -> Result<String, String> {
    let (space, d) = det(3)?;
    let w = parse_weight_matrix(INDEFINITE_W).map_err(err)?;
    let r = audit(
        &PreserverSpec::PsdInitialForm(w),
        &Space::Sym(space),
        &d,
        &ConeSpec::Psd(3),
        cfg,
    )
    .map_err(err)?;
    ensure(!r.guarantee.applies, "guarantee should not apply")?;
    ensure(
        r.output_verdict.as_ref().is_some_and(|v| !v.is_clean()),
        "output should have a counterexample",
    )?;
    ensure(r.agreement, "agreement flag violated")?;
    Ok("counterexample on the output, no guarantee, no disagreement".into())
}

fn case_stable_binomial_forms(_: &FalsifierConfig) -> Result<String, String> {
    let e = |v: &[u32]| ExponentVector::new(v.to_vec());
    let c = |x: f64| Complex64::new(x, 0.0);
    let a = classify_stable_binomial(&e(&[0, 0]), &e(&[1, 0]), c(1.0), c(-7.0)).map_err(err)?;
    ensure(a == StableBinomialForm::FormA { i: 0 }, format!("{a:?}"))?;
    let b = classify_stable_binomial(&e(&[1, 0]), &e(&[0, 1]), c(2.0), c(1.0)).map_err(err)?;
    ensure(b == StableBinomialForm::FormB { i: 0, j: 1, ratio_ok: true }, format!("{b:?}"))?;
    let cc = classify_stable_binomial(&e(&[0, 0]), &e(&[1, 1]), c(-1.0), c(1.0)).map_err(err)?;
    ensure(cc == StableBinomialForm::FormC { i: 0, j: 1, ratio_ok: true }, format!("{cc:?}"))?;
    Ok("forms a, b and c recognised".into())
}

fn case_psd_binomials(_: &FalsifierConfig) -> Result<String, String> {
    let (space, f) = sym("z11*z22 - z12^2", 2)?;
    let c = classify_psd_binomial(&space, &f).map_err(err)?;
    ensure(
        c.form == PsdBinomialForm::OffdiagFormB { i: 0, j: 1, ratio_real: true },
        format!("{:?}", c.form),
    )?;
    let (space, f) = sym("z11^2 - z22^2", 2)?;
    let c = classify_psd_binomial(&space, &f).map_err(err)?;
    ensure(matches!(c.form, PsdBinomialForm::Violates { .. }), format!("{:?}", c.form))?;
    Ok("det_2 is form b; z11^2 - z22^2 violates".into())
}

fn case_structure_z12(_: &FalsifierConfig) -> Result<String, String> {
    let (space, f) = sym("z12", 2)?;
    let r = structure_check(&space, &f).map_err(err)?;
    ensure(r.violations == [(0, 1)], format!("{:?}", r.violations))?;
    Ok("z12 lacks its diagonal partners".into())
}

fn case_non_mixed(_: &FalsifierConfig) -> Result<String, String> {
    let (s, f) = sym("z11*z22*z33 + z12*z13*z23", 3)?;
    let r = non_mixed_analysis(&s, &f).map_err(err)?;
    ensure(r.not_psd_stable && !r.hom_degree_bound_ok, "degree 3 case not flagged")?;
    let (s, f) = sym("z11*z22 + 5*z12^2", 2)?;
    let r = non_mixed_analysis(&s, &f).map_err(err)?;
    ensure(r.degree2_form_ok == Some(true) && !r.not_psd_stable, "square case flagged")?;
    let (s, f) = sym("z11*z22 + z12*z13", 3)?;
    let r = non_mixed_analysis(&s, &f).map_err(err)?;
    ensure(r.degree2_form_ok == Some(false), "mixed product not flagged")?;
    Ok("degree bound and degree-2 form behave as stated".into())
}

fn case_det_interval(_: &FalsifierConfig) -> Result<String, String> {
    let one = Complex64::new(1.0, 0.0);
    let spec = DetBlockSpec::new(
        vec![2, 1],
        vec![(vec![0, 0], one), (vec![1, 0], one), (vec![2, 0], one)],
    )
    .map_err(err)?;
    let r = det_support_analysis(&spec).map_err(err)?;
    ensure(r.interval_property && r.jump_system.holds(), "interval property fails")?;
    Ok("interval property holds with C = 2".into())
}

fn example_product() -> Result<(SymVarSpace, Polynomial), String> {
    let (space, a) = sym("z11 + z22 - 2*z12", 3)?;
    let (_, b) = sym("z11*z33 - z13^2", 3)?;
    Ok((space, &a * &b))
}

fn case_conjecture_path(_: &FalsifierConfig) -> Result<String, String> {
    let (space, f) = example_product()?;
    let (_, beta) = sym("z12*z13^2", 3)?;
    let beta = beta.support().into_iter().next().ok_or("empty monomial")?;
    let out = conjecture_search(&space, &f, &beta).map_err(err)?;
    let path = out.path().ok_or("search exhausted")?;
    ensure(
        path.kinds() == [StepKind::Double, StepKind::Transposition],
        format!("{:?}", path.kinds()),
    )?;
    let (_, mid) = sym("z11*z13^2", 3)?;
    let (_, end) = sym("z11^2*z33", 3)?;
    ensure(mid.support().contains(&path.steps[0].to), "wrong intermediate monomial")?;
    ensure(end.support().contains(&path.target), "wrong target")?;
    ensure(path.validate(&f.support()), "path does not re-validate")?;
    Ok("double step then transposition step".into())
}

fn case_det_transposition_paths(_: &FalsifierConfig) -> Result<String, String> {
    let mut count = 0;
    for n in 2..=4 {
        let (space, d) = det(n)?;
        for beta in d.support() {
            let out = step_search(&space, &d, &beta, &[StepKind::Transposition]).map_err(err)?;
            let path = out.path().ok_or(format!("det_{n}: no path from {beta:?}"))?;
            ensure(path.validate(&d.support()), "path does not re-validate")?;
            count += 1;
        }
    }
    Ok(format!("{count} monomials of det_2..det_4 reach the diagonal"))
}

/// The fixed examples, in run order.
pub fn cases() -> Vec<Case> {
    vec![
        Case { key: "det2-from-text", run: case_det2_text },
        Case { key: "det3-five-terms", run: case_det3_monomials },
        Case { key: "z12-vanishes-at-i-identity", run: case_z12_at_i_identity },
        Case { key: "indefinite-initial-form-vanishes-at-i-identity", run: case_indefinite_form_at_i_identity },
        Case { key: "indefinite-weight-initial-form", run: case_indefinite_initial_form },
        Case { key: "hadamard-scaling-limit", run: case_hadamard_limit },
        Case { key: "determinants-psd-clean", run: case_determinants_clean },
        Case { key: "z12-counterexample", run: case_z12_counterexample },
        Case { key: "indefinite-initial-form-counterexample", run: case_indefinite_form_counterexample },
        Case { key: "binomial-z1z2-minus-one-clean", run: case_binomial_z1z2_minus_one },
        Case { key: "specialization-as-affine-substitution", run: case_specialization_as_affine },
        Case { key: "diagonal-restriction-stable", run: case_diag_restriction_stable },
        Case { key: "v12-derivative-of-det2", run: case_v12_derivative },
        Case { key: "indefinite-weight-audit", run: case_indefinite_weight_audit },
        Case { key: "stable-binomial-forms", run: case_stable_binomial_forms },
        Case { key: "psd-binomial-forms", run: case_psd_binomials },
        Case { key: "structure-z12", run: case_structure_z12 },
        Case { key: "non-mixed-criteria", run: case_non_mixed },
        Case { key: "determinantal-interval", run: case_det_interval },
        Case { key: "step-path-example", run: case_conjecture_path },
        Case { key: "determinant-transposition-paths", run: case_det_transposition_paths },
    ]
}

pub fn run_cases(cfg: &FalsifierConfig) -> Vec<CaseOutcome> {
    cases()
        .into_iter()
        .map(|c| {
            let (passed, detail) = match (c.run)(cfg) {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CaseOutcome {
                key: c.key.to_string(),
                passed,
                detail,
            }
        })
        .collect()
}

fn gaussian(rng: &mut ChaCha8Rng, r: usize, c: usize) -> DMatrix<f64> {
    DMatrix::from_fn(r, c, |_, _| rng.sample(StandardNormal))
}

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> DMatrix<f64> {
    let g = gaussian(rng, n, n);
    (&g + g.transpose()) * 0.5
}

/// `G Gᵀ` with `G` of size `n × rank`; positive definite when `rank ≥ n`.
pub fn random_psd(rng: &mut ChaCha8Rng, n: usize, rank: usize) -> DMatrix<f64> {
    let g = gaussian(rng, n, rank);
    &g * g.transpose()
}

/// `G Gᵀ + I` with small integer `G`, kept exact.
pub fn random_integer_pd(rng: &mut ChaCha8Rng, n: usize) -> WeightMatrix {
    let g: Vec<Vec<i64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.random_range(-2..=2)).collect())
        .collect();
    WeightMatrix::Exact(
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let dot: i64 = (0..n).map(|k| g[i][k] * g[j][k]).sum();
                        num_rational::Ratio::from_integer(dot + i64::from(i == j))
                    })
                    .collect()
            })
            .collect(),
    )
}

fn random_orthogonal(rng: &mut ChaCha8Rng, n: usize) -> DMatrix<f64> {
    gaussian(rng, n, n).qr().q()
}

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.random_range(0..=i));
    }
    p
}

/// `det(Z + A)` for a real symmetric `A`; psd-stable because `Im(Z + A) = Im Z`.
pub fn shifted_determinant(space: &SymVarSpace, a: &DMatrix<f64>) -> Polynomial {
    let n = space.order();
    let m: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| &space.var(i, j) + &Polynomial::constant(space.nvars(), Complex64::new(a[(i, j)], 0.0)))
                .collect()
        })
        .collect();
    poly_matrix_determinant(space.nvars(), &m)
}

/// `⟨V, Z⟩` in flat variables.
pub fn trace_form(space: &SymVarSpace, v: &DMatrix<f64>) -> Polynomial {
    let coeffs: Vec<Complex64> = space
        .pairs()
        .map(|(i, j)| Complex64::new(if i == j { v[(i, i)] } else { 2.0 * v[(i, j)] }, 0.0))
        .collect();
    Polynomial::linear(&coeffs, Complex64::new(0.0, 0.0))
}

/// `Σ a_i z_i + b` with `a ≥ 0` not all zero.
fn positive_linear(rng: &mut ChaCha8Rng, n: usize) -> Polynomial {
    let mut a: Vec<Complex64> = (0..n)
        .map(|_| {
            if rng.random_bool(0.7) {
                Complex64::new(rng.random_range(0.2..2.0), 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect();
    let k = rng.random_range(0..n);
    a[k] = Complex64::new(rng.random_range(0.2..2.0), 0.0);
    Polynomial::linear(&a, Complex64::new(rng.random_range(-2.0..2.0), 0.0))
}

fn member(name: String, space: Space, cone: ConeSpec, polynomial: Polynomial) -> Member {
    Member {
        name,
        space,
        cone,
        polynomial,
        blocks: None,
    }
}

/// Polynomials stable by construction for their cone, drawn with `seed`.
pub fn stable_members(seed: u64) -> Vec<Member> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for n in 2..=3 {
        let space = SymVarSpace::new(n);
        let sp = Space::Sym(space);
        let psd = ConeSpec::Psd(n);
        let d = symbolic_determinant(&space).expect("small order");
        out.push(member(format!("det{n}"), sp, psd.clone(), d));
        for k in 0..2 {
            let a = random_symmetric(&mut rng, n);
            out.push(member(
                format!("shifted-det{n}-{k}"),
                sp,
                psd.clone(),
                shifted_determinant(&space, &a),
            ));
        }
        let v = random_psd(&mut rng, n, 1);
        out.push(member(format!("rank-one-trace{n}"), sp, psd.clone(), trace_form(&space, &v)));
        let a = random_symmetric(&mut rng, n);
        let v = random_psd(&mut rng, n, n);
        let prod = &shifted_determinant(&space, &a) * &trace_form(&space, &v);
        out.push(member(format!("det-times-trace{n}"), sp, psd, prod));
    }
    let space = SymVarSpace::new(2);
    let d = symbolic_determinant(&space).expect("small order");
    let deriv = matrix_directional_derivative(&space, &d, &v_matrix(2, 0, 1)).expect("order 2");
    out.push(member("v12-derivative".into(), Space::Sym(space), ConeSpec::Psd(2), deriv));

    let space = SymVarSpace::new(3);
    let (_, ex) = example_product().expect("fixed example parses");
    out.push(member("minor-product-example".into(), Space::Sym(space), ConeSpec::Psd(3), ex));
    let m12 = principal_minor(&space, &[0, 1]).expect("valid subset");
    let m23 = principal_minor(&space, &[1, 2]).expect("valid subset");
    out.push(member("overlapping-minors".into(), Space::Sym(space), ConeSpec::Psd(3), &m12 * &m23));
    let z33 = space.var(2, 2);
    let shift = Polynomial::constant(space.nvars(), Complex64::new(rng.random_range(-1.0..1.0), 0.0));
    let mut blocked = member(
        "block-det-times-z33".into(),
        Space::Sym(space),
        ConeSpec::Psd(3),
        &m12 * &(&z33 + &shift),
    );
    blocked.blocks = Some(vec![2, 1]);
    out.push(blocked);

    let v = Space::Vector(2);
    let fixed = [("z1*z2 - 1", 2), ("z1^2 - 1", 2), ("z1 + z2", 2), ("z1*z2 + z1 + z2", 2)];
    for (src, n) in fixed {
        let f = parse_polynomial(src, &v).expect("fixed member parses");
        out.push(member(src.to_string(), Space::Vector(n), ConeSpec::Orthant(n), f));
    }
    for k in 0..6 {
        let n = 2 + k % 2;
        let factors = 1 + k % 3;
        let mut f = Polynomial::one(n);
        for _ in 0..factors {
            f = &f * &positive_linear(&mut rng, n);
        }
        out.push(member(format!("linear-product-{k}"), Space::Vector(n), ConeSpec::Orthant(n), f));
    }
    let e3 = parse_polynomial("z1*z2 + z1*z3 + z2*z3", &Space::Vector(3)).expect("fixed member parses");
    out.push(member("elementary-symmetric-2".into(), Space::Vector(3), ConeSpec::Orthant(3), e3));
    out
}

fn flat_of(space: &SymVarSpace, m: &DMatrix<f64>) -> Vec<f64> {
    space.pairs().map(|(i, j)| m[(i, j)]).collect()
}

/// Randomly parameterised transforms suited to `m`.
fn transforms_for(m: &Member, rng: &mut ChaCha8Rng) -> Vec<PreserverSpec> {
    let mut out = Vec::new();
    let nonneg = |rng: &mut ChaCha8Rng, n: usize| -> Vec<f64> {
        (0..n)
            .map(|_| if rng.random_bool(0.3) { 0.0 } else { rng.random_range(0.1..2.0) })
            .collect()
    };
    match &m.space {
        Space::Vector(n) => {
            let n = *n;
            out.push(PreserverSpec::Permute(random_permutation(rng, n)));
            out.push(PreserverSpec::Scale {
                c: Complex64::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)),
                a: (0..n).map(|_| rng.random_range(0.3..3.0)).collect(),
            });
            let i = rng.random_range(0..n);
            let j = (i + 1 + rng.random_range(0..n - 1)) % n;
            out.push(PreserverSpec::Identify { i, j });
            out.push(PreserverSpec::Specialize {
                i: rng.random_range(0..n),
                b: Complex64::new(rng.random_range(-2.0..2.0), if rng.random_bool(0.5) { 0.0 } else { rng.random_range(0.0..2.0) }),
            });
            out.push(PreserverSpec::Invert(rng.random_range(0..n)));
            out.push(PreserverSpec::Differentiate(rng.random_range(0..n)));
            let mut v = nonneg(rng, n);
            v[rng.random_range(0..n)] = 1.0;
            out.push(PreserverSpec::DirDerivative(v));
            out.push(PreserverSpec::InitialForm(Weights::Exact(
                (0..n)
                    .map(|_| num_rational::Ratio::from_integer(rng.random_range(-2..=3)))
                    .collect(),
            )));
            out.push(PreserverSpec::Affine {
                a: (0..n)
                    .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(0.0..1.0)))
                    .collect(),
                dirs: (0..2).map(|_| nonneg(rng, n)).filter(|d| d.iter().any(|&x| x > 0.0)).collect::<Vec<_>>(),
            });
        }
        Space::Sym(s) => {
            let n = s.order();
            out.push(PreserverSpec::PsdDiag);
            let mut subset: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.6)).collect();
            if subset.is_empty() {
                subset.push(rng.random_range(0..n));
            }
            out.push(PreserverSpec::PsdMinor(subset));
            out.push(PreserverSpec::PsdCongruence {
                s: gaussian(rng, n, n),
                kind: CongruenceKind::Transpose,
            });
            out.push(PreserverSpec::PsdCongruence {
                s: random_orthogonal(rng, n),
                kind: CongruenceKind::Inverse,
            });
            out.push(PreserverSpec::PsdPermute(random_permutation(rng, n)));
            let rank = rng.random_range(1..=n);
            out.push(PreserverSpec::PsdDirDerivative(random_psd(rng, n, rank)));
            out.push(PreserverSpec::PsdInversion(None));
            if let Some(sizes) = &m.blocks {
                out.push(PreserverSpec::PsdInversion(Some(BlockInversion {
                    sizes: sizes.clone(),
                    target: rng.random_range(0..sizes.len()),
                })));
            }
            let w = if rng.random_bool(0.25) {
                WeightMatrix::Exact(
                    (0..n)
                        .map(|i| (0..n).map(|j| num_rational::Ratio::from_integer(i64::from(i == j))).collect())
                        .collect(),
                )
            } else {
                random_integer_pd(rng, n)
            };
            out.push(PreserverSpec::PsdInitialForm(w));
            let v = random_psd(rng, n, n);
            out.push(PreserverSpec::DirDerivative(flat_of(s, &v)));
            let rank = rng.random_range(1..=n);
            let im = random_psd(rng, n, rank);
            out.push(PreserverSpec::Affine {
                a: flat_of(s, &random_symmetric(rng, n))
                    .into_iter()
                    .zip(flat_of(s, &im))
                    .map(|(re, im)| Complex64::new(re, im))
                    .collect(),
                dirs: (0..2).map(|_| flat_of(s, &random_psd(rng, n, 1))).collect(),
            });
        }
    }
    out.retain(|t| !matches!(t, PreserverSpec::Affine { dirs, .. } if dirs.is_empty()));
    out
}

/// An audited application whose guarantee was contradicted.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepViolation {
    pub member: String,
    pub transform: String,
    pub input: String,
    pub output: String,
}

/// Summary of [`audit_sweep`].
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct AuditSweep {
    pub applications: usize,
    /// Applications where a guarantee applied.
    pub guaranteed: usize,
    pub clean_inputs: usize,
    pub zero_outputs: usize,
    /// Outputs with a verified counterexample, whether licensed or not.
    pub counterexample_outputs: usize,
    pub violations: Vec<SweepViolation>,
    /// Transforms that could not be applied, with the reason.
    pub errors: Vec<String>,
    pub tags: Vec<String>,
}

impl AuditSweep {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.errors.is_empty()
    }

    fn record(&mut self, member: &Member, r: &AuditReport) {
        self.applications += 1;
        self.guaranteed += usize::from(r.guarantee.applies);
        self.clean_inputs += usize::from(r.input_verdict.is_clean());
        self.zero_outputs += usize::from(r.output_zero);
        self.counterexample_outputs += usize::from(r.output_verdict.as_ref().is_some_and(|v| !v.is_clean()));
        if let Some(tag) = &r.guarantee.tag {
            if !self.tags.contains(tag) {
                self.tags.push(tag.clone());
            }
        }
        if !r.agreement {
            self.violations.push(SweepViolation {
                member: member.name.clone(),
                transform: r.transform.clone(),
                input: r.input.clone(),
                output: r.output.clone(),
            });
        }
    }
}

/// Audits `rounds` random transforms of every stable member.
pub fn audit_sweep(cfg: &FalsifierConfig, rounds: usize) -> AuditSweep {
    let members = stable_members(cfg.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5eed_a0d1);
    let mut sweep = AuditSweep::default();
    for round in 0..rounds {
        for m in &members {
            for spec in transforms_for(m, &mut rng) {
                let run = FalsifierConfig {
                    seed: cfg.seed.wrapping_add(round as u64),
                    ..cfg.clone()
                };
                match audit(&spec, &m.space, &m.polynomial, &m.cone, &run) {
                    Ok(r) => sweep.record(m, &r),
                    Err(PreserverError::Poly(crate::error::PolyError::ZeroPolynomial)) => {}
                    Err(e) => sweep.errors.push(format!("{} on {}: {e}", spec.name(), m.name)),
                }
            }
        }
    }
    sweep.tags.sort();
    sweep
}

/// `(g, f, v)` with `g + y f` stable for `K × R_{≥0}` by construction and `ρ_v(f) ≤ 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct LiebSokalTriple {
    pub space: Space,
    pub cone: ConeSpec,
    pub g: Polynomial,
    pub f: Polynomial,
    pub v: Vec<f64>,
}

/// Builds `count` triples, alternating between the orthant and the psd cone.
///
/// `g + y f = (ℓ(z) + c y) q(z)` with `ℓ` a positive linear (or trace) form,
/// `c > 0` and `q` stable of degree at most one in direction `v`.
pub fn lieb_sokal_triples(seed: u64, count: usize) -> Vec<LiebSokalTriple> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let c = Complex64::new(rng.random_range(0.2..2.0), 0.0);
            if k % 2 == 0 {
                let n = 3;
                let space = Space::Vector(n);
                let l = positive_linear(&mut rng, n);
                let q1 = Polynomial::linear(
                    &[
                        Complex64::new(rng.random_range(0.2..2.0), 0.0),
                        Complex64::new(rng.random_range(0.0..2.0), 0.0),
                        Complex64::new(0.0, 0.0),
                    ],
                    Complex64::new(rng.random_range(-1.0..1.0), 0.0),
                );
                let q2 = Polynomial::linear(
                    &[
                        Complex64::new(0.0, 0.0),
                        Complex64::new(rng.random_range(0.2..2.0), 0.0),
                        Complex64::new(rng.random_range(0.2..2.0), 0.0),
                    ],
                    Complex64::new(rng.random_range(-1.0..1.0), 0.0),
                );
                let q = &q1 * &q2;
                let g = &l * &q;
                let f = q.scale(c);
                LiebSokalTriple {
                    space,
                    cone: ConeSpec::Orthant(n),
                    g,
                    f,
                    v: vec![1.0, 0.0, 0.0],
                }
            } else {
                let s = SymVarSpace::new(3);
                let l = &trace_form(&s, &random_psd(&mut rng, 3, 3))
                    + &Polynomial::constant(s.nvars(), Complex64::new(rng.random_range(-1.0..1.0), 0.0));
                let lower = principal_minor(&s, &[1, 2]).expect("valid subset");
                let shift = Polynomial::constant(s.nvars(), Complex64::new(rng.random_range(-1.0..1.0), 0.0));
                let q = &lower * &(&s.var(0, 0) + &shift);
                let g = &l * &q;
                let f = q.scale(c);
                let mut e11 = DMatrix::zeros(3, 3);
                e11[(0, 0)] = 1.0;
                LiebSokalTriple {
                    space: Space::Sym(s),
                    cone: ConeSpec::Psd(3),
                    g,
                    f,
                    v: flat_of(&s, &e11),
                }
            }
        })
        .collect()
}
