use std::collections::BTreeSet;

use conicstab::combinat::{
    conjecture_search, is_jump_system, lpm_build, step_search, JumpSystemCheck, JumpViolation,
    StepKind, SupportSet,
};
use conicstab::symmat::symbolic_determinant;
use conicstab::SymVarSpace;
use num_complex::Complex64;
use proptest::prelude::*;

/// Unit moves from `a` that bring it one closer to `b` in L1.
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

/// Every failing `(α, β, σ)` of the Two-Steps Axiom, in lexicographic order.
fn failures(set: &BTreeSet<Vec<i64>>) -> Vec<(Vec<i64>, Vec<i64>, Vec<i64>)> {
    let mut out = Vec::new();
    for a in set {
        for b in set {
            let mut sigmas = unit_steps(a, b);
            sigmas.sort();
            for s in sigmas {
                let mid = add(a, &s);
                if set.contains(&mid) {
                    continue;
                }
                if !unit_steps(&mid, b).iter().any(|t| set.contains(&add(&mid, t))) {
                    out.push((a.clone(), b.clone(), s));
                }
            }
        }
    }
    out.sort();
    out
}

fn point_set(dim: usize) -> impl Strategy<Value = BTreeSet<Vec<i64>>> {
    prop::collection::btree_set(prop::collection::vec(0i64..=3, dim), 1..7)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn jump_systems_match_brute_force(
        (dim, set) in (1usize..=3).prop_flat_map(|d| (Just(d), point_set(d)))
    ) {
        let support = SupportSet::from_points(dim, set.iter().cloned()).unwrap();
        let oracle = failures(&set);
        match is_jump_system(&support) {
            JumpSystemCheck::Holds => prop_assert!(oracle.is_empty()),
            JumpSystemCheck::Fails(JumpViolation { alpha, beta, sigma }) => {
                prop_assert_eq!(&oracle[0], &(alpha, beta, sigma));
            }
        }
    }
}

#[test]
fn determinant_paths_use_transpositions_only() {
    for n in 2..=4 {
        let space = SymVarSpace::new(n);
        let d = symbolic_determinant(&space).unwrap();
        let support = d.support();
        for beta in &support {
            let out = step_search(&space, &d, beta, &[StepKind::Transposition]).unwrap();
            let path = out.path().expect("determinant monomials reach the diagonal");
            assert!(path.validate(&support));
            assert!(path.kinds().iter().all(|&k| k == StepKind::Transposition));
            assert!(space.is_diagonal_monomial(&path.target));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn lpm_paths_validate(
        subsets in prop::collection::btree_set(prop::collection::btree_set(0usize..3, 0..=3), 1..6),
        coeffs in prop::collection::vec(0.2f64..3.0, 6),
    ) {
        let terms: Vec<(Vec<usize>, Complex64)> = subsets
            .into_iter()
            .zip(coeffs)
            .map(|(s, c)| (s.into_iter().collect(), Complex64::new(c, 0.0)))
            .collect();
        let f = lpm_build(3, &terms).unwrap();
        let space = SymVarSpace::new(3);
        let support = f.support();
        for beta in &support {
            let out = conjecture_search(&space, &f, beta).unwrap();
            let path = out.path();
            prop_assert!(path.is_some(), "no path from {:?}", beta);
            let path = path.unwrap();
            prop_assert!(path.validate(&support));
            let mut d = path.start_distance;
            for s in &path.steps {
                prop_assert!(s.distance < d);
                d = s.distance;
            }
            prop_assert_eq!(d, 0);
        }
    }
}
