use conicstab::preservers::{audit, PreserverSpec};
use conicstab::stabcheck::{check_stability, verify_witness, Witness};
use conicstab::symmat::{symbolic_determinant, CongruenceKind};
use conicstab::text::parse_polynomial;
use conicstab::{ConeSpec, FalsifierConfig, Polynomial, Space, SymVarSpace};
use nalgebra::DMatrix;
use num_complex::Complex64;

fn poly(src: &str, space: &Space) -> Polynomial {
    parse_polynomial(src, space).unwrap()
}

/// Recomputes `f(z)` by hand and checks `Im(z)` is positive definite via Cholesky.
fn independent_psd_check(space: &SymVarSpace, f: &Polynomial, w: &Witness) {
    let mut value = Complex64::new(0.0, 0.0);
    for (e, c) in f.terms() {
        let mut m = *c;
        for (k, &x) in e.iter().enumerate() {
            m *= w.point[k].powu(x);
        }
        value += m;
    }
    let scale: f64 = f.terms().map(|(_, c)| c.norm()).sum::<f64>() * (1.0 + w.point.iter().map(|z| z.norm()).fold(0.0, f64::max)).powi(f.total_degree() as i32);
    assert!(value.norm() <= 1e-8 * scale, "|f(z)| = {:e}", value.norm());
    let n = space.order();
    let im = DMatrix::from_fn(n, n, |i, j| w.point[space.index(i, j)].im);
    assert!(im.cholesky().is_some(), "Im(z) is not positive definite");
}

#[test]
fn same_seed_same_verdict() {
    let space = Space::sym(3);
    for src in ["z11*z22*z33 - z12*z13*z23", "z11 + z12", "z11*z22 - z12^2 + z33"] {
        let f = poly(src, &space);
        let cfg = FalsifierConfig::with_trials(150, 42);
        let a = check_stability(&f, &ConeSpec::Psd(3), &cfg).unwrap();
        let b = check_stability(&f, &ConeSpec::Psd(3), &cfg).unwrap();
        assert_eq!(a, b);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}

#[test]
fn witnesses_survive_independent_checks() {
    let s = SymVarSpace::new(3);
    let space = Space::Sym(s);
    let cfg = FalsifierConfig::with_trials(300, 1);
    for src in [
        "z11 + z12",
        "z12",
        "z11*z22 + z12^2",
        "z11*z22*z33 + z12*z13*z23",
        "z11*z22 + z12*z13",
        "z11^3 - z22",
        "-z11*z23^2 - z22*z13^2 + 2*z12*z13*z23",
    ] {
        let f = poly(src, &space);
        let v = check_stability(&f, &ConeSpec::Psd(3), &cfg).unwrap();
        let w = v.witness.as_ref().unwrap_or_else(|| panic!("{src}: no counterexample"));
        assert!(verify_witness(&f, &ConeSpec::Psd(3), w, cfg.root_tol, cfg.interior_margin));
        independent_psd_check(&s, &f, w);
    }
}

#[test]
fn orthant_counterexamples() {
    let space = Space::Vector(2);
    let cfg = FalsifierConfig::with_trials(300, 5);
    for src in ["z1^2 + 1", "z1*z2 + 1", "z1 - z2", "z1^3 - 1", "z1 + (0-1i)"] {
        let f = poly(src, &space);
        let v = check_stability(&f, &ConeSpec::Orthant(2), &cfg).unwrap();
        let w = v.witness.as_ref().unwrap_or_else(|| panic!("{src}: no counterexample"));
        let value = f.evaluate(&w.point).unwrap();
        assert!(value.norm() < 1e-8, "{src}");
        assert!(w.point.iter().all(|z| z.im > 0.0), "{src}");
    }
}

#[test]
fn polyhedral_cone() {
    let space = Space::Vector(2);
    // Stable for the cone spanned by (1,0) and (1,1), where Im(z1) ≥ Im(z2) ≥ 0.
    let cone = ConeSpec::Polyhedral(vec![vec![1.0, 0.0], vec![1.0, 1.0]]);
    let cfg = FalsifierConfig::with_trials(300, 2);
    let f = poly("z1*z2 - 1", &space);
    assert!(check_stability(&f, &cone, &cfg).unwrap().is_clean());
    let g = poly("z1 - 2*z2", &space);
    let v = check_stability(&g, &cone, &cfg).unwrap();
    assert!(!v.is_clean());
}

#[test]
fn repeated_factors_are_clean() {
    let space = SymVarSpace::new(3);
    let d = symbolic_determinant(&space).unwrap();
    let f = &d.pow(3) * &space.var(1, 1);
    let v = check_stability(&f, &ConeSpec::Psd(3), &FalsifierConfig::with_trials(300, 8)).unwrap();
    assert!(v.is_clean(), "{v}");
}

#[test]
fn symmetrized_similarity_needs_orthogonal_s() {
    let space = SymVarSpace::new(2);
    let d = symbolic_determinant(&space).unwrap();
    let cfg = FalsifierConfig::with_trials(200, 0);
    for a in [0.5, 1.0, 3.0] {
        let s = DMatrix::from_row_slice(2, 2, &[1.0, a, 0.0, 1.0]);
        let spec = PreserverSpec::PsdCongruence {
            s,
            kind: CongruenceKind::Inverse,
        };
        let r = audit(&spec, &Space::Sym(space), &d, &ConeSpec::Psd(2), &cfg).unwrap();
        assert!(!r.guarantee.applies);
        assert!(r.output_verdict.as_ref().is_some_and(|v| !v.is_clean()), "a = {a}");
        assert!(r.agreement);
    }
    let (c, s) = (0.6f64, 0.8f64);
    let rot = DMatrix::from_row_slice(2, 2, &[c, -s, s, c]);
    let spec = PreserverSpec::PsdCongruence {
        s: rot,
        kind: CongruenceKind::Inverse,
    };
    let r = audit(&spec, &Space::Sym(space), &d, &ConeSpec::Psd(2), &cfg).unwrap();
    assert!(r.guarantee.applies);
    assert!(r.output_verdict.as_ref().is_some_and(|v| v.is_clean()));
}
