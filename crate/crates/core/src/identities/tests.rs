use std::collections::BTreeMap;

use super::cases::{compare, ratio_for_tests, Side};
use super::*;
use crate::arith::{int, rat, Rational};
use crate::hyperdet;
use crate::partition;
use crate::partition::ShiftVector;
use crate::poly::{vandermonde, LaurentPoly};
use crate::symfunc::{elementary_values, schur, SymFunc};

fn params(n: usize, k: usize) -> Params {
    Params { n: Some(n), k: Some(k), ..Params::default() }
}

#[test]
fn registry_tags_round_trip() {
    assert_eq!(IdentityId::ALL.len(), 21);
    for &id in IdentityId::ALL {
        assert_eq!(id.tag().parse::<IdentityId>().unwrap(), id);
        assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{}\"", id.tag()));
        assert!(!id.statement().is_empty());
    }
    assert_eq!("d2h".parse::<IdentityId>().unwrap(), IdentityId::D2h);
    assert!(matches!("NOPE".parse::<IdentityId>(), Err(Error::UnknownIdentity(_))));
}

#[test]
fn every_id_has_default_cases() {
    let cfg = GridConfig::default();
    for &id in IdentityId::ALL {
        assert!(!cases_for(id, &cfg).is_empty(), "{id}");
    }
    let d2h: Vec<(usize, usize)> =
        cases_for(IdentityId::D2h, &cfg).iter().map(|p| (p.n.unwrap(), p.k.unwrap())).collect();
    assert!(d2h.contains(&(4, 1)));
}

#[test]
fn d2h_example_on_values() {
    // hand expansion: Λ² - (Λ¹)² on {1, 2}
    let e = elementary_values(&[int(1), int(2)]);
    let expected = &e[2] - &e[1] * &e[1];
    assert_eq!(expected, int(-7));
    let t = hyperdet::hankel(1, 2, &ShiftVector::zeros(2), hyperdet::elementary_on(&[int(1), int(2)])).unwrap();
    assert_eq!(hyperdet::det(&t), expected);

    let formal = verify_identity(IdentityId::D2h, &params(2, 1));
    assert_eq!(formal.verdict, Verdict::Equal);
    let evaluated_cfg = GridConfig { formal_weight_cap: 0, ..GridConfig::default() };
    let evaluated = verify_identity_with(IdentityId::D2h, &params(2, 1), &evaluated_cfg);
    assert_eq!(evaluated.verdict, Verdict::Equal);
    assert!(evaluated.terms.is_some());
}

#[test]
fn ht_signs_at_one_variable() {
    for k in 1..=3 {
        for v in [-2, 0, 3] {
            for form in ["hankel", "toeplitz"] {
                let p = Params { v: Some(vec![v]), form: Some(form.into()), ..params(1, k) };
                assert_eq!(verify_identity(IdentityId::HtSigns, &p).verdict, Verdict::Equal);
            }
        }
    }
}

#[test]
fn schur_coeff_example() {
    let p = Params { lambda: Some(partition![2]), ..params(2, 1) };
    let case = verify_identity(IdentityId::SchurCoeff, &p);
    assert_eq!(case.verdict, Verdict::Equal);
    assert!(case.nondegenerate);
}

#[test]
fn vandermonde_expansion_two_variables() {
    // Δ² = x1² - 2 x1 x2 + x2² = s_2 - 3 s_11
    let e = schur_expand_vandermonde(2, 1).unwrap();
    let expected: BTreeMap<Partition, Rational> = [(partition![2], int(1)), (partition![1, 1], int(-3))].into();
    assert_eq!(e.coefficients, expected);
    assert!(e.vanishing.is_empty());
}

fn resum(e: &VandermondeExpansion) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(e.n);
    for (l, c) in &e.coefficients {
        acc = acc.add(&schur(l).to_polynomial(e.n).scale(c)).unwrap();
    }
    acc
}

#[test]
fn vandermonde_expansion_paths_agree_and_resum() {
    for (n, k) in [(1, 1), (2, 1), (3, 1), (2, 2), (3, 2)] {
        let a = schur_expand_vandermonde_via(n, k, ExpansionPath::Alternant, ExpansionCaps::default()).unwrap();
        let b = schur_expand_vandermonde_via(n, k, ExpansionPath::ScalarPrime, ExpansionCaps::default()).unwrap();
        assert_eq!(a, b, "n={n} k={k}");
        assert_eq!(resum(&a), vandermonde(n).pow(2 * k as u32), "n={n} k={k}");
        for l in a.coefficients.keys().chain(&a.vanishing) {
            assert_eq!(l.weight(), k * n * (n - 1));
            assert!(l.len() <= n);
        }
    }
}

#[test]
fn vandermonde_expansion_three_variables() {
    let e = schur_expand_vandermonde(3, 1).unwrap();
    // the dominant monomial of Δ² is x1⁴ x2², with coefficient 1
    assert_eq!(vandermonde(3).pow(2).coefficient(&[4, 2, 0]), int(1));
    assert_eq!(e.coefficients[&partition![4, 2]], int(1));
    assert!(matches!(
        schur_expand_vandermonde_via(5, 1, ExpansionPath::Alternant, ExpansionCaps::default()),
        Err(Error::CapExceeded(_))
    ));
}

#[test]
fn ratio_detection() {
    let f = SymFunc::e(2).add(&SymFunc::h(2));
    let lhs = Side::Sym(f.scale(&int(-1)));
    let rhs = Side::Sym(f.clone());
    assert_eq!(ratio_for_tests(&lhs, &rhs), Some(int(-1)));
    let (v, nd) = compare(&[(lhs.clone(), rhs.clone())]);
    assert_eq!(v, Verdict::Unequal { ratio: Some(Q(int(-1))) });
    assert!(nd);
    let other = Side::Sym(SymFunc::e(2));
    assert_eq!(ratio_for_tests(&other, &rhs), None);
    let (v, _) = compare(&[(Side::Value(int(2)), Side::Value(int(1))), (Side::Value(int(6)), Side::Value(int(2)))]);
    assert_eq!(v, Verdict::Unequal { ratio: None });
    let (v, nd) = compare(&[(Side::Value(int(0)), Side::Value(int(0)))]);
    assert_eq!((v, nd), (Verdict::Equal, false));
}

#[test]
fn status_modes() {
    let eq = Verdict::Equal;
    let half = Verdict::Unequal { ratio: Some(Q(rat(1, 2))) };
    let third = Verdict::Unequal { ratio: Some(Q(rat(1, 3))) };
    let skip = Verdict::Skipped { reason: "cap".into() };
    assert_eq!(status_of([&eq, &skip].into_iter()), IdStatus::Exact);
    assert_eq!(status_of([&half, &half, &skip].into_iter()), IdStatus::FittedConstant { constant: Q(rat(1, 2)) });
    assert!(matches!(status_of([&half, &third].into_iter()), IdStatus::Failed { .. }));
    assert!(matches!(status_of([&eq, &half].into_iter()), IdStatus::Failed { .. }));
    assert_eq!(status_of([&skip].into_iter()), IdStatus::Skipped);
}

#[test]
fn empty_run_is_empty() {
    let r = run_grid(&[], &GridConfig::default());
    assert!(r.cases.is_empty() && r.summary.is_empty() && r.accepted);
}

#[test]
fn small_grid_is_deterministic_and_complete() {
    let cfg = GridConfig::small();
    let a = run_grid(IdentityId::ALL, &cfg).without_timings();
    let b = run_grid(IdentityId::ALL, &cfg).without_timings();
    assert_eq!(a.to_json_pretty(), b.to_json_pretty());
    let expected: usize = IdentityId::ALL.iter().map(|&id| cases_for(id, &cfg).len()).sum();
    assert_eq!(a.cases.len(), expected);
    assert!(a.accepted, "{}", a.to_json_pretty());
    for s in &a.summary {
        assert_eq!(s.equal + s.unequal + s.skipped, s.cases);
    }
    // id-then-params order
    let ids: Vec<IdentityId> = a.cases.iter().map(|c| c.id).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn jack_cap_skips() {
    let cfg = GridConfig { jack_weight_cap: 3, ..GridConfig::default() };
    let p = Params { p: Some(2), l: Some(1), ..params(3, 1) };
    let case = verify_identity_with(IdentityId::GenMatsumoto, &p, &cfg);
    assert!(matches!(case.verdict, Verdict::Skipped { .. }));
    let report = run_grid(&[IdentityId::VandJack], &GridConfig { jack_weight_cap: 0, ..GridConfig::default() });
    let s = &report.summary[0];
    // only the one-variable cases have an empty rectangle
    assert_eq!(s.cases - s.skipped, 2);
    assert_eq!(s.status, IdStatus::Exact);
}

#[test]
fn missing_parameters_fail_loudly() {
    let case = verify_identity(IdentityId::D2h, &Params::default());
    assert_eq!(case.verdict, Verdict::Unequal { ratio: None });
    assert!(case.note.unwrap().contains("missing parameter"));
}

#[test]
fn config_and_params_json() {
    let cfg = GridConfig::default();
    let text = serde_json::to_string(&cfg).unwrap();
    assert!(text.contains(r#""alpha":["1","2","1/2"]"#));
    assert_eq!(serde_json::from_str::<GridConfig>(&text).unwrap(), cfg);
    let partial: GridConfig = serde_json::from_str(r#"{"n":[2],"k":[1]}"#).unwrap();
    assert_eq!(partial.n, vec![2]);
    assert_eq!(partial.p, cfg.p);

    let path = std::env::temp_dir().join(format!("grid-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"n":[1]}"#).unwrap();
    assert_eq!(GridConfig::load(path.to_str().unwrap()).unwrap().n, vec![1]);
    std::fs::remove_file(path).unwrap();
    assert_eq!(GridConfig::load("small").unwrap(), GridConfig::small());

    let p = Params { lambda: Some(partition![2, 1]), alpha: Some(Q(rat(1, 2))), ..params(2, 1) };
    let json = serde_json::to_string(&p).unwrap();
    assert_eq!(json, r#"{"n":2,"k":1,"lambda":[2,1],"alpha":"1/2"}"#);
    assert_eq!(serde_json::from_str::<Params>(&json).unwrap(), p);
}

#[test]
fn report_json_shape() {
    let r = run_grid(&[IdentityId::Dyson], &GridConfig::small());
    let v: serde_json::Value = serde_json::from_str(&r.to_json_pretty()).unwrap();
    assert_eq!(v["cases"][0]["id"], "DYSON");
    assert_eq!(v["cases"][0]["verdict"]["kind"], "equal");
    assert_eq!(v["summary"][0]["status"]["kind"], "exact");
    assert_eq!(v["summary"][0]["acceptance"], "exact");
    assert_eq!(v["accepted"], true);
}
