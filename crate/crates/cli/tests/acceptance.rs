//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::Instant;

use conicstab::combinat::{
    classify_psd_binomial, classify_stable_binomial, conjecture_search, det_support_analysis,
    is_jump_system, lpm_build, step_search, DetBlockSpec, JumpSystemCheck, JumpViolation,
    StableBinomialForm, StepKind, SupportSet,
};
use conicstab::corpus::{lieb_sokal_triples, random_integer_pd, random_psd};
use conicstab::preservers::{audit, lieb_sokal_transform, PreserverSpec};
use conicstab::stabcheck::{check_stability, verify_witness, WitnessSource};
use conicstab::symmat::{
    frobenius_initial_form, hadamard_scale, inversion_image, matrix_directional_derivative,
    principal_minor, symbolic_determinant,
};
use conicstab::text::{format_polynomial, parse_polynomial, parse_weight_matrix};
use conicstab::{
    ConeSpec, ExponentVector, FalsifierConfig, Polynomial, PreserverError, Space, SymVarSpace,
};
use num_complex::Complex64;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

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

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn sym(src: &str, n: usize) -> Polynomial {
    parse_polynomial(src, &Space::sym(n)).expect("valid literal")
}

fn det(n: usize) -> (SymVarSpace, Polynomial) {
    let s = SymVarSpace::new(n);
    (s, symbolic_determinant(&s).expect("order in range"))
}

fn is_clean(f: &Polynomial, cone: &ConeSpec, trials: usize, seed: u64) -> Result<bool, String> {
    Ok(check_stability(f, cone, &FalsifierConfig::with_trials(trials, seed))
        .map_err(err)?
        .is_clean())
}

/// Runs the falsifier and re-verifies the witness it returns.
fn verified_counterexample(f: &Polynomial, cone: &ConeSpec, trials: usize, seed: u64) -> Result<bool, String> {
    let cfg = FalsifierConfig::with_trials(trials, seed);
    let v = check_stability(f, cone, &cfg).map_err(err)?;
    Ok(v.witness
        .as_ref()
        .is_some_and(|w| verify_witness(f, cone, w, cfg.root_tol, cfg.interior_margin)))
}

fn determinants_clean() -> Outcome {
    let start = Instant::now();
    let mut examined = 0;
    for n in 2..=4 {
        let (_, d) = det(n);
        let v = check_stability(&d, &ConeSpec::Psd(n), &FalsifierConfig::with_trials(1000, n as u64))
            .map_err(err)?;
        ensure(v.is_clean(), format!("det_{n}: {v}"))?;
        ensure(v.trials == 1000, format!("det_{n}: only {} trials", v.trials))?;
        ensure(v.root_failures == 0, format!("det_{n}: {} root failures", v.root_failures))?;
        ensure(
            v.candidates_examined == v.candidates_rejected,
            format!("det_{n}: unverified candidate accepted"),
        )?;
        examined += v.candidates_examined;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 30.0, format!("took {secs:.1} s"))?;
    Ok(format!("det_2..det_4 clean over 1000 trials, {examined} candidates re-checked and rejected, {secs:.1} s"))
}

fn indefinite_initial_form() -> Outcome {
    let (s, d) = det(3);
    let w = parse_weight_matrix("[4,4,6;4,4,6;6,6,0]").map_err(err)?;
    let init = frobenius_initial_form(&s, &d, &w).map_err(err)?;
    let expected = sym("-z11*z23^2 - z22*z13^2 + 2*z12*z13*z23", 3);
    ensure(init == expected, format!("initial form {}", format_polynomial(&init, &Space::Sym(s))))?;
    let v = check_stability(&init, &ConeSpec::Psd(3), &FalsifierConfig::with_trials(100, 0)).map_err(err)?;
    let w = v.witness.as_ref().ok_or("no counterexample")?;
    ensure(w.source == WitnessSource::PrePass, "witness is not from the iI pre-pass")?;
    let i3 = [0, 3, 5];
    let at_i_identity = w.point.iter().enumerate().all(|(k, z)| {
        *z == if i3.contains(&k) { Complex64::new(0.0, 1.0) } else { c(0.0) }
    });
    ensure(at_i_identity, "witness is not iI_3")?;
    ensure(w.residual < 1e-12, format!("residual {:e}", w.residual))?;
    Ok(format!("exact initial form, witness iI_3 with residual {:e}", w.residual))
}

fn pd_initial_forms() -> Outcome {
    let (s, d) = det(3);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst: f64 = 0.0;
    for k in 0..20 {
        let w = random_integer_pd(&mut rng, 3);
        let init = frobenius_initial_form(&s, &d, &w).map_err(err)?;
        ensure(is_clean(&init, &ConeSpec::Psd(3), 500, k)?, format!("W #{k}: counterexample"))?;
        let scaled = hadamard_scale(&s, &d, &w.to_f64(), 1e6).map_err(err)?;
        let diff = scaled.max_coeff_diff(&init);
        ensure(diff < 1e-5, format!("W #{k}: scaled form differs by {diff:e}"))?;
        worst = worst.max(diff);
    }
    Ok(format!("20 PD weights clean over 500 trials, worst scaling gap {worst:.1e}"))
}

/// A product of random principal minors, sometimes with a PD-directional derivative of `det`.
fn minor_product(rng: &mut ChaCha8Rng, s: &SymVarSpace) -> Result<Polynomial, String> {
    let n = s.order();
    let mut f = Polynomial::one(s.nvars());
    for _ in 0..rng.random_range(1..=2) {
        let subset: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.6)).collect();
        if !subset.is_empty() {
            f = &f * &principal_minor(s, &subset).map_err(err)?;
        }
    }
    if f.total_degree() == 0 || rng.random_bool(0.5) {
        let v = random_psd(rng, n, n + 1);
        let (_, d) = det(n);
        f = &f * &matrix_directional_derivative(s, &d, &v).map_err(err)?;
    }
    Ok(f)
}

fn inversion() -> Outcome {
    let (s2, d2) = det(2);
    ensure(inversion_image(&s2, &d2, None).map_err(err)? == d2, "inversion of det_2 is not det_2")?;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for k in 0..20u64 {
        let n = if k < 10 { 2 } else { 3 };
        let s = SymVarSpace::new(n);
        let f = minor_product(&mut rng, &s)?;
        let text = format_polynomial(&f, &Space::Sym(s));
        ensure(is_clean(&f, &ConeSpec::Psd(n), 500, k)?, format!("input {text} is not clean"))?;
        let g = inversion_image(&s, &f, None).map_err(err)?;
        ensure(is_clean(&g, &ConeSpec::Psd(n), 500, k)?, format!("image of {text} has a counterexample"))?;
    }
    Ok("inversion fixes det_2; 20 clean inputs have clean images over 500 trials".into())
}

fn exps(n: usize, entries: &[(usize, u32)]) -> ExponentVector {
    let mut e = vec![0; n];
    for &(i, x) in entries {
        e[i] += x;
    }
    ExponentVector::new(e)
}

fn random_gamma(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, u32)> {
    (0..n).map(|i| (i, rng.random_range(0..=1))).collect()
}

fn binomial(n: usize, a: ExponentVector, ca: Complex64, b: ExponentVector, cb: Complex64) -> Result<Polynomial, String> {
    Polynomial::from_terms(n, [(a, ca), (b, cb)]).map_err(err)
}

fn random_unit(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::from_polar(rng.random_range(0.5..2.0), rng.random_range(0.0..std::f64::consts::TAU))
}

/// One stable binomial of each form, or a violating one, over `n` vector variables.
fn vector_binomial(rng: &mut ChaCha8Rng, kind: usize, n: usize) -> Result<Polynomial, String> {
    let g = random_gamma(rng, n);
    let with = |extra: &[(usize, u32)]| {
        let mut e = g.clone();
        e.extend_from_slice(extra);
        exps(n, &e)
    };
    let i = rng.random_range(0..n);
    let j = (i + rng.random_range(1..n)) % n;
    let scale = random_unit(rng);
    let pos = rng.random_range(0.2..5.0);
    let (a, ca, b, cb) = match kind {
        // z_i + a with Im(a) ≥ 0
        0 => (with(&[(i, 1)]), c(1.0), with(&[]), Complex64::new(rng.random_range(-3.0..3.0), rng.random_range(0.0..2.0))),
        1 => (with(&[(i, 1)]), c(1.0), with(&[(j, 1)]), c(pos)),
        2 => {
            let jj = if rng.random_bool(0.3) { i } else { j };
            (with(&[(i, 1), (jj, 1)]), c(1.0), with(&[]), c(-pos))
        }
        // ratio violations
        3 => (with(&[(i, 1)]), c(1.0), with(&[(j, 1)]), -c(pos)),
        4 => (with(&[(i, 1), (j, 1)]), c(1.0), with(&[]), c(pos)),
        5 => (with(&[(i, 1)]), c(1.0), with(&[(j, 1)]), Complex64::new(pos, rng.random_range(0.5..2.0))),
        // distance violations
        _ => {
            let d = rng.random_range(3..=4);
            let spread: Vec<(usize, u32)> = (0..d).map(|_| (rng.random_range(0..n), 1)).collect();
            (with(&spread), c(1.0), with(&[]), random_unit(rng))
        }
    };
    binomial(n, a, ca * scale, b, cb * scale)
}

fn psd_binomial(rng: &mut ChaCha8Rng, kind: usize) -> Result<Polynomial, String> {
    let s = SymVarSpace::new(3);
    let n = s.nvars();
    let diag = [s.index(0, 0), s.index(1, 1), s.index(2, 2)];
    let mut gamma: Vec<(usize, u32)> = diag.iter().map(|&k| (k, rng.random_range(0..=1))).collect();
    let i = rng.random_range(0..3);
    let j = (i + rng.random_range(1..3)) % 3;
    let (i, j) = (i.min(j), i.max(j));
    let l = 3 - i - j;
    let with = |g: &[(usize, u32)], extra: &[(usize, u32)]| {
        let mut e = g.to_vec();
        e.extend_from_slice(extra);
        exps(n, &e)
    };
    let pos = rng.random_range(0.2..5.0);
    let (ii, jj, ij) = (s.index(i, i), s.index(j, j), s.index(i, j));
    let (a, b, cb) = match kind {
        0 => (with(&gamma, &[(ii, 1), (jj, 1)]), with(&gamma, &[(ij, 2)]), c(-pos)),
        1 => (with(&gamma, &[(ii, 1), (jj, 1)]), with(&gamma, &[(ij, 2)]), c(pos)),
        2 => (with(&gamma, &[(ii, 1), (jj, 1)]), with(&gamma, &[(ij, 2)]), Complex64::new(pos, 1.0)),
        3 => (with(&gamma, &[(ii, 1)]), with(&gamma, &[(jj, 1)]), c(pos)),
        4 => (with(&gamma, &[(ii, 1), (jj, 1)]), with(&gamma, &[]), c(-pos)),
        5 => (with(&gamma, &[(ii, 2), (jj, 1)]), with(&gamma, &[]), random_unit(rng)),
        6 => (with(&gamma, &[(ij, 1), (s.index(i, l), 1)]), with(&gamma, &[(ii, 1), (s.index(j, l), 1)]), c(pos)),
        7 => {
            gamma.push((ij, 1));
            (with(&gamma, &[(ii, 1), (jj, 1)]), with(&gamma, &[(ij, 2)]), c(-pos))
        }
        8 => (with(&gamma, &[(ij, 2)]), with(&gamma, &[]), c(pos)),
        _ => (with(&gamma, &[(ii, 1), (s.index(l, l), 1)]), with(&gamma, &[(ij, 2)]), c(-pos)),
    };
    let scale = random_unit(rng);
    binomial(n, a, scale, b, cb * scale)
}

fn binomials() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut seed = 0;
    for kind in 0..3 {
        for _ in 0..50 {
            let n = rng.random_range(2..=4);
            let f = vector_binomial(&mut rng, kind, n)?;
            let terms: Vec<_> = f.terms().collect();
            let form = classify_stable_binomial(terms[0].0, terms[1].0, *terms[0].1, *terms[1].1).map_err(err)?;
            let text = format_polynomial(&f, &Space::Vector(n));
            ensure(form.is_consistent(), format!("{text} classified {form:?}"))?;
            seed += 1;
            ensure(is_clean(&f, &ConeSpec::Orthant(n), 300, seed)?, format!("stable form {text} has a counterexample"))?;
        }
    }
    for k in 0..50 {
        let n = rng.random_range(2..=4);
        let f = vector_binomial(&mut rng, 3 + k % 4, n)?;
        let terms: Vec<_> = f.terms().collect();
        let form = classify_stable_binomial(terms[0].0, terms[1].0, *terms[0].1, *terms[1].1).map_err(err)?;
        let text = format_polynomial(&f, &Space::Vector(n));
        ensure(!form.is_consistent(), format!("{text} not flagged: {form:?}"))?;
        ensure(!matches!(form, StableBinomialForm::FormA { .. }), format!("{text} is form a"))?;
        seed += 1;
        ensure(
            verified_counterexample(&f, &ConeSpec::Orthant(n), 500, seed)?,
            format!("no verified counterexample for {text}"),
        )?;
    }
    let (mut consistent, mut violates, mut consistent_unstable) = (0, 0, 0);
    for k in 0..100 {
        let f = psd_binomial(&mut rng, k % 10)?;
        let s = SymVarSpace::new(3);
        let class = classify_psd_binomial(&s, &f).map_err(err)?;
        seed += 1;
        let cex = verified_counterexample(&f, &ConeSpec::Psd(3), 300, seed)?;
        if class.is_consistent() {
            consistent += 1;
            consistent_unstable += usize::from(cex);
        } else {
            violates += 1;
            ensure(cex, format!("disagreement: {} violates but is clean", format_polynomial(&f, &Space::Sym(s))))?;
        }
    }
    Ok(format!(
        "150 stable forms clean, 50 violations refuted, psd corpus {violates} violating all refuted ({consistent} consistent, {consistent_unstable} of them unstable)"
    ))
}

fn unit_steps(a: &[i64], b: &[i64]) -> Vec<Vec<i64>> {
    (0..a.len())
        .filter(|&i| a[i] != b[i])
        .map(|i| {
            let mut s = vec![0; a.len()];
            s[i] = (b[i] - a[i]).signum();
            s
        })
        .collect()
}

fn add(a: &[i64], s: &[i64]) -> Vec<i64> {
    a.iter().zip(s).map(|(x, y)| x + y).collect()
}

/// Lexicographically first failure of the Two-Steps Axiom by exhaustive search.
fn brute_force(set: &BTreeSet<Vec<i64>>) -> Option<(Vec<i64>, Vec<i64>, Vec<i64>)> {
    let mut out = Vec::new();
    for a in set {
        for b in set {
            for s in unit_steps(a, b) {
                let mid = add(a, &s);
                if !set.contains(&mid) && !unit_steps(&mid, b).iter().any(|t| set.contains(&add(&mid, t))) {
                    out.push((a.clone(), b.clone(), s));
                }
            }
        }
    }
    out.into_iter().min()
}

fn jump_systems() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut failing = 0;
    for _ in 0..200 {
        let dim = rng.random_range(1..=3);
        let size = rng.random_range(1..=6);
        let set: BTreeSet<Vec<i64>> = (0..size)
            .map(|_| (0..dim).map(|_| rng.random_range(0..=3)).collect())
            .collect();
        let got = is_jump_system(&SupportSet::from_points(dim, set.iter().cloned()).map_err(err)?);
        let expected = brute_force(&set);
        let agree = match (&got, &expected) {
            (JumpSystemCheck::Holds, None) => true,
            (JumpSystemCheck::Fails(JumpViolation { alpha, beta, sigma }), Some(e)) => {
                (alpha, beta, sigma) == (&e.0, &e.1, &e.2)
            }
            _ => false,
        };
        ensure(agree, format!("{set:?}: checker {got:?}, brute force {expected:?}"))?;
        failing += usize::from(expected.is_some());
    }
    let mut products = 0;
    for k in 0..100u64 {
        let n = rng.random_range(2..=4);
        let mut f = Polynomial::one(n);
        for _ in 0..rng.random_range(1..=3) {
            let mut l = Polynomial::constant(n, c(rng.random_range(-2.0..2.0)));
            let first = rng.random_range(0..n);
            for i in 0..n {
                if i == first || rng.random_bool(0.5) {
                    l = &l + &Polynomial::var(n, i).map_err(err)?.scale(c(rng.random_range(0.1..3.0)));
                }
            }
            f = &f * &l;
        }
        if f.total_degree() == 0 || !is_clean(&f, &ConeSpec::Orthant(n), 200, k)? {
            return Err(format!("product {} is not a clean input", format_polynomial(&f, &Space::Vector(n))));
        }
        ensure(
            is_jump_system(&SupportSet::of_polynomial(&f)).holds(),
            format!("support of {} is not a jump system", format_polynomial(&f, &Space::Vector(n))),
        )?;
        products += 1;
    }
    let mut constructed = 0;
    for _ in 0..20 {
        let a = rng.random_range(0..=2);
        let sizes = vec![2, 1, 1];
        let mut terms = Vec::new();
        // det(Z_1)^a times x z33 + y z44 + k or (z33 + y)(z44 + x) - m, m ≥ 0
        let x = rng.random_range(0.2..3.0);
        let y = rng.random_range(0.2..3.0);
        terms.push((vec![a, 1, 0], c(x)));
        terms.push((vec![a, 0, 1], c(y)));
        if rng.random_bool(0.5) {
            terms.push((vec![a, 1, 1], c(1.0)));
            terms.push((vec![a, 0, 0], c(x * y - rng.random_range(0.0..2.0))));
        } else {
            terms.push((vec![a, 0, 0], c(rng.random_range(-2.0..2.0))));
        }
        let spec = DetBlockSpec::new(sizes, terms).map_err(err)?;
        let (space, f) = spec.to_polynomial().map_err(err)?;
        ensure(is_clean(&f, &ConeSpec::Psd(space.order()), 100, 0)?, "constructed polynomial is not clean")?;
        let report = det_support_analysis(&spec).map_err(err)?;
        ensure(report.jump_system.holds(), format!("supp_det {:?} fails", report.supp_det))?;
        ensure(!report.not_psd_stable(), "necessary conditions reported as failing")?;
        constructed += 1;
    }
    Ok(format!(
        "200 sets match brute force ({failing} non-jump), {products} clean product supports, {constructed} determinantal supports"
    ))
}

fn conjecture() -> Outcome {
    let s = SymVarSpace::new(3);
    let f = &sym("z11 + z22 - 2*z12", 3) * &sym("z11*z33 - z13^2", 3);
    let beta = sym("z12*z13^2", 3).support().into_iter().next().ok_or("empty")?;
    let out = conjecture_search(&s, &f, &beta).map_err(err)?;
    let path = out.path().ok_or("example search exhausted")?;
    ensure(path.kinds() == [StepKind::Double, StepKind::Transposition], format!("{:?}", path.kinds()))?;
    ensure(sym("z11*z13^2", 3).support().contains(&path.steps[0].to), "wrong intermediate")?;
    ensure(sym("z11^2*z33", 3).support().contains(&path.target), "wrong target")?;
    ensure(path.validate(&f.support()), "example path does not re-validate")?;

    let mut monomials = 0;
    for n in 2..=4 {
        let (s, d) = det(n);
        for beta in d.support() {
            let out = step_search(&s, &d, &beta, &[StepKind::Transposition]).map_err(err)?;
            let path = out.path().ok_or(format!("det_{n}: no path from {beta:?}"))?;
            ensure(path.validate(&d.support()), "path does not re-validate")?;
            ensure(s.is_diagonal_monomial(&path.target), "target is not diagonal")?;
            monomials += 1;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let subsets: Vec<Vec<usize>> = (0..8u32)
        .map(|m| (0..3).filter(|i| m & (1 << i) != 0).collect())
        .collect();
    for _ in 0..20 {
        let count = rng.random_range(1..=5);
        let terms: Vec<(Vec<usize>, Complex64)> = subsets
            .choose_multiple(&mut rng, count)
            .map(|j| (j.clone(), c(rng.random_range(0.2..3.0))))
            .collect();
        let f = lpm_build(3, &terms).map_err(err)?;
        let support = f.support();
        for beta in &support {
            let out = conjecture_search(&s, &f, beta).map_err(err)?;
            let path = out.path().ok_or(format!("lpm: no path from {beta:?}"))?;
            ensure(path.validate(&support), "lpm path does not re-validate")?;
        }
    }
    Ok(format!("example path is double then transposition; {monomials} determinant monomials; 20 lpm polynomials"))
}

fn preserver_audit() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_conicstab"))
        .args(["--seed", "11", "--trials", "80", "corpus", "--rounds", "3"])
        .output()
        .map_err(err)?;
    let code = out.status.code().ok_or("corpus was killed")?;
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(err)?;
    let sweep = &doc["result"]["sweep"];
    let applications = sweep["applications"].as_u64().ok_or("no application count")?;
    let violations = sweep["violations"].as_array().map_or(usize::MAX, Vec::len);
    ensure(code == 0, format!("corpus exited with {code}"))?;
    ensure(applications >= 500, format!("only {applications} applications"))?;
    ensure(violations == 0, format!("{violations} violations"))?;
    Ok(format!("{applications} applications, 0 violations, exit code 0"))
}

fn lieb_sokal() -> Outcome {
    let mut zero = 0;
    let triples = lieb_sokal_triples(9, 30);
    for (k, t) in triples.iter().enumerate() {
        ensure(t.f.degree_in_direction(&t.v).map_err(err)? <= 1, format!("triple {k}: degree above 1"))?;
        let spec = PreserverSpec::LiebSokal { g: t.g.clone(), v: t.v.clone() };
        let r = audit(&spec, &t.space, &t.f, &t.cone, &FalsifierConfig::with_trials(200, k as u64)).map_err(err)?;
        ensure(r.input_verdict.is_clean(), format!("triple {k}: g + y f is not clean"))?;
        zero += usize::from(r.output_zero);
        ensure(
            r.output_zero || r.output_verdict.as_ref().is_some_and(|v| v.is_clean()),
            format!("triple {k}: output {} has a counterexample", r.output),
        )?;
        let squared = &t.f * &t.f;
        match lieb_sokal_transform(&t.g, &squared, &t.v) {
            Err(PreserverError::DirectionalDegree { measured: 2 }) => {}
            other => return Err(format!("triple {k}: squared f not rejected: {other:?}")),
        }
    }
    Ok(format!("30 triples clean ({zero} zero outputs); squared directions rejected"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("determinants are psd-stable", determinants_clean),
        ("indefinite weight gives an unstable initial form", indefinite_initial_form),
        ("PD initial forms", pd_initial_forms),
        ("inversion", inversion),
        ("binomial classification", binomials),
        ("jump systems", jump_systems),
        ("step paths", conjecture),
        ("preserver audit soundness", preserver_audit),
        ("conic Lieb-Sokal", lieb_sokal),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (tag, detail) = match run() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {} {tag}: {name}: {detail} [{:.1} s]", k + 1, start.elapsed().as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
