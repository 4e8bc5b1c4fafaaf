//! Brute-force cross-checks of the library against naive reimplementations.

use std::collections::BTreeSet;

use p4bound::certifier::{eq4_check, scan_default, CertifierOptions, WMode};
use p4bound::configs::lambda_caps;
use p4bound::gin::{
    hilbert_function, is_borel_fixed, random_lifted_ideal, saturate_restrict, sporadic_zeros,
    Monomial, MonomialIdeal,
};
use p4bound::sporadic::extremal_profile;
use p4bound::{enumerate_configs, validate_config};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Every strictly decreasing sequence of `s` positive parts summing to `d`,
/// filtered by the gap condition afterwards.
fn naive_configs(d: i64, s: i64) -> BTreeSet<Vec<i64>> {
    fn go(left: i64, parts: i64, below: i64, acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if parts == 0 {
            if left == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for v in 1..below.min(left + 1) {
            acc.push(v);
            go(left - v, parts - 1, v, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(d, s, d + 1, &mut Vec::new(), &mut out);
    out.into_iter()
        .filter(|l| l.windows(2).all(|w| w[0] - w[1] <= 2))
        .collect()
}

#[test]
fn enumeration_matches_naive_search() {
    for s in 1..=6 {
        for d in 1..=45 {
            let got: BTreeSet<Vec<i64>> = enumerate_configs(d, s)
                .into_iter()
                .map(|c| c.into_vec())
                .collect();
            assert_eq!(got, naive_configs(d, s), "d={d} s={s}");
        }
    }
}

#[test]
fn enumerated_configs_are_valid_and_capped() {
    for s in 1..=7 {
        for d in 1..=95 {
            let (cap0, cap1) = lambda_caps(d, s);
            for c in enumerate_configs(d, s) {
                assert!(validate_config(&c, d, s).is_empty());
                assert!(cap0 >= c[0], "{c}");
                if s > 1 {
                    assert!(cap1 >= c[1], "{c}");
                }
            }
        }
    }
}

#[test]
fn scans_certify_every_degree_above_the_bound() {
    for w_mode in [WMode::Greedy, WMode::CaseFormula] {
        let opts = CertifierOptions::certified().with_w_mode(w_mode);
        for s in 4..=7 {
            let rep = scan_default(s, &opts).unwrap();
            let (last, above) = rep.degrees.split_last().unwrap();
            assert!(above.iter().all(|d| !d.any_feasible()), "s={s}");
            assert_eq!(rep.max_feasible_d.is_some(), last.any_feasible());
            for dv in above {
                assert_eq!(dv.verdicts.len(), enumerate_configs(dv.d, s).len());
            }
        }
    }
}

#[test]
fn verdict_margin_is_base_minus_w_minus_18() {
    for s in 4..=7 {
        for d in 40..=70 {
            for c in enumerate_configs(d, s) {
                let v = eq4_check(d, s, &c).unwrap();
                assert_eq!(v.margin, v.base - v.w_max - 18);
                // a negative zero budget means the genus floor is unreachable
                assert_eq!(v.feasible, v.z_cap >= 0 && v.margin <= 0);
                assert_eq!(v.profile.total(), v.z_cap.max(0));
            }
        }
    }
}

/// Column scan over every monomial of low degree, independent of the
/// generator-based computation.
fn naive_sporadic_degrees(ideal: &MonomialIdeal) -> Vec<i64> {
    let top = ideal.max_degree() + 2;
    let mut out = Vec::new();
    for a in 0..=top {
        for b in 0..=top - a {
            for c in 0..=top - a - b {
                let m = Monomial::new(a, b, c, 0);
                if ideal.contains(&m) {
                    continue;
                }
                if (c + 1..=c + top).any(|cc| ideal.contains(&Monomial::new(a, b, cc, 0))) {
                    out.push(i64::from(a + b + c));
                }
            }
        }
    }
    out.sort();
    out
}

#[test]
fn gin_sporadic_zeros_match_column_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let sample = random_lifted_ideal(&mut rng, 4, 12, 10);
        let profile = sporadic_zeros(&sample.ideal).unwrap();
        assert_eq!(profile.degrees(), naive_sporadic_degrees(&sample.ideal));
        assert!(is_borel_fixed(&sample.ideal));
        let sat = saturate_restrict(&sample.ideal).unwrap();
        assert_eq!(saturate_restrict(&sat).unwrap(), sat);
    }
}

#[test]
fn each_lift_removes_one_monomial_in_its_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..50 {
        let sample = random_lifted_ideal(&mut rng, 3, 8, 0);
        let base = sample.ideal;
        for m in p4bound::gin::liftable_generators(&base) {
            let lifted = p4bound::gin::lift(&base, &m).unwrap();
            for t in 0..=base.max_degree() + 3 {
                let diff = hilbert_function(&lifted, t) - hilbert_function(&base, t);
                // the new zero m spreads to m·x3^k in every higher degree
                let want = i64::from(t >= m.degree());
                assert_eq!(diff, want, "{base} lift {m} at t={t}");
            }
        }
    }
}

proptest! {
    #[test]
    fn greedy_weight_grows_with_z(l1 in 3i64..30, gap in 1i64..=2, extra in 0i64..40, z in 0i64..60) {
        let l0 = l1 + gap;
        let d = l0 + l1 + extra;
        let a = extremal_profile(l0, l1, d, z, true);
        let b = extremal_profile(l0, l1, d, z + 1, true);
        if let (Ok(a), Ok(b)) = (a, b) {
            prop_assert!(b.stats().w >= a.stats().w);
            prop_assert_eq!(b.total(), a.total() + 1);
        }
    }
}
