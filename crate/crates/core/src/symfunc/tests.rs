use super::*;
use crate::arith::{int, rat};
use crate::partition::partitions_of;
use crate::partition;
use crate::arith::Ring;
use proptest::prelude::*;

fn p1() -> SymFunc {
    SymFunc::p(1)
}

#[test]
fn degree_one_bases_coincide() {
    assert_eq!(SymFunc::h(1).convert(Basis::P), p1());
    assert_eq!(SymFunc::e(1).convert(Basis::P), p1());
    assert_eq!(SymFunc::m(partition![1]).convert(Basis::P), p1());
    assert_eq!(SymFunc::s(partition![1]).convert(Basis::P), p1());
}

#[test]
fn newton_identity_for_e2() {
    let expected = SymFunc::from_coeffs(
        Basis::P,
        [(partition![1, 1], rat(1, 2)), (partition![2], rat(-1, 2))],
    );
    let got = SymFunc::e(2).convert(Basis::P);
    assert_eq!(got.basis(), Basis::P);
    assert_eq!(got.coeffs(), expected.coeffs());
}

#[test]
fn schur_11_in_h() {
    let got = SymFunc::s(partition![1, 1]).convert(Basis::H);
    let expected = SymFunc::from_coeffs(
        Basis::H,
        [(partition![1, 1], int(1)), (partition![2], int(-1))],
    );
    assert_eq!(got.coeffs(), expected.coeffs());
}

#[test]
fn schur_from_jacobi_trudi() {
    assert_eq!(schur(&partition![1]).coeffs(), SymFunc::h(1).coeffs());
    let s11 = SymFunc::from_coeffs(Basis::H, [(partition![1, 1], int(1)), (partition![2], int(-1))]);
    assert_eq!(schur(&partition![1, 1]).coeffs(), s11.coeffs());
    let s21 = SymFunc::from_coeffs(Basis::H, [(partition![2, 1], int(1)), (partition![3], int(-1))]);
    assert_eq!(schur(&partition![2, 1]).coeffs(), s21.coeffs());
}

#[test]
fn schur_dual_examples() {
    assert_eq!(schur_dual(&partition![1], 1).unwrap().coeffs(), SymFunc::e(1).coeffs());
    let s2 = schur_dual(&partition![2], 2).unwrap();
    let expected = SymFunc::from_coeffs(Basis::E, [(partition![1, 1], int(1)), (partition![2], int(-1))]);
    assert_eq!(s2.coeffs(), expected.coeffs());
    assert_eq!(s2, SymFunc::h(2));
    assert_eq!(schur_dual(&partition![2, 1], 2).unwrap(), schur(&partition![2, 1]));
    assert!(schur_dual(&partition![3], 2).is_err());
}

#[test]
fn schur_dual_agrees_with_schur() {
    for d in 0..=6 {
        for l in partitions_of(d, None) {
            let need = l.conjugate().len();
            for n in need..=need + 1 {
                assert_eq!(schur_dual(&l, n).unwrap(), schur(&l), "λ = {l}, n = {n}");
            }
        }
    }
}

#[test]
fn monomial_products() {
    let f = SymFunc::m(partition![1]);
    assert_eq!(f.product(&SymFunc::constant(int(1))), f);
    assert_eq!(SymFunc::p(2).product(&SymFunc::p(1)).coeffs(), SymFunc::basis_element(Basis::P, partition![2, 1]).coeffs());
    let sq = f.product(&f);
    assert_eq!(sq.basis(), Basis::M);
    let expected = SymFunc::from_coeffs(Basis::M, [(partition![2], int(1)), (partition![1, 1], int(2))]);
    assert_eq!(sq.coeffs(), expected.coeffs());
}

#[test]
fn evaluation_examples() {
    let xs = [int(1), int(2), int(3)];
    assert_eq!(SymFunc::e(1).evaluate(&xs), int(6));
    assert_eq!(SymFunc::e(4).evaluate(&xs), int(0));
    assert_eq!(SymFunc::s(partition![2]).evaluate(&[int(1), int(2)]), int(7));
    assert_eq!(SymFunc::p(3).evaluate(&xs), int(36));
}

#[test]
fn lambda_of_examples() {
    assert!(lambda_of(&Alphabet::AZero, 3).is_zero());
    assert_eq!(lambda_of(&Alphabet::AZero, 0), SymFunc::constant(int(1)));
    assert!(lambda_of(&Alphabet::FormalInfinite, -2).is_zero());
    assert!(lambda_of(&Alphabet::FiniteValues(vec![int(1)]), -2).is_zero());
    assert_eq!(
        lambda_of(&Alphabet::FiniteValues(vec![int(1), int(2)]), 2).as_constant(),
        Some(int(2))
    );
    assert_eq!(lambda_of(&Alphabet::FormalInfinite, 3), SymFunc::e(3));
}

#[test]
fn alpha_scalar_product_examples() {
    let a = rat(3, 7);
    assert_eq!(scalar_alpha(&p1(), &p1(), &a).unwrap(), a);
    let p11 = SymFunc::basis_element(Basis::P, partition![1, 1]);
    assert_eq!(scalar_alpha(&SymFunc::p(2), &p11, &a).unwrap(), int(0));
    let s2 = SymFunc::s(partition![2]);
    assert_eq!(scalar_alpha(&s2, &s2, &int(1)).unwrap(), int(1));
    assert!(matches!(scalar_alpha(&s2, &s2, &int(0)), Err(Error::ZeroAlpha)));
}

#[test]
fn schur_functions_are_orthonormal() {
    for d in 0..=6 {
        let ps = partitions_of(d, None);
        for a in &ps {
            for b in &ps {
                let v = scalar_alpha(&schur(a), &schur(b), &int(1)).unwrap();
                assert_eq!(v, int(if a == b { 1 } else { 0 }), "{a} {b}");
            }
        }
    }
}

#[test]
fn primed_scalar_product() {
    let one = SymFunc::constant(int(1));
    assert_eq!(scalar_prime(&one, &one, 2, &int(1)).unwrap(), int(1));
    assert_eq!(scalar_prime(&one, &SymFunc::zero_in(Basis::M), 2, &int(1)).unwrap(), int(0));
    assert!(matches!(
        scalar_prime(&one, &one, 2, &rat(1, 2)),
        Err(Error::NonIntegerExponent(_))
    ));
    for d in 0..=4 {
        let ps: Vec<_> = partitions_of(d, Some(3));
        for a in &ps {
            for b in &ps {
                let v = scalar_prime(&schur(a), &schur(b), 3, &int(1)).unwrap();
                assert_eq!(v, int(if a == b { 1 } else { 0 }), "{a} {b}");
            }
        }
    }
}

#[test]
fn omega_examples() {
    let a = rat(5, 3);
    assert_eq!(omega_alpha(&p1(), &a), p1().scale(&a));
    for n in 0..=5 {
        assert_eq!(omega_alpha(&SymFunc::h(n), &int(1)), SymFunc::e(n));
    }
    for d in 0..=5 {
        for l in partitions_of(d, None) {
            let f = SymFunc::m(l);
            assert_eq!(omega_alpha(&omega_alpha(&f, &a), &a.recip()), f);
        }
    }
}

#[test]
fn negation_examples() {
    assert_eq!(negate_alphabet(&p1()), p1().scale(&int(-1)));
    // S^2(-X) = Λ^2(X)
    assert_eq!(negate_alphabet(&SymFunc::h(2)), SymFunc::e(2));
    for d in 0..=6i64 {
        for l in partitions_of(d as usize, None) {
            let f = SymFunc::s(l.clone());
            assert_eq!(negate_alphabet(&negate_alphabet(&f)), f);
            let via_omega = omega_alpha(&f, &int(1)).scale(&crate::arith::sign(d));
            assert_eq!(negate_alphabet(&f), via_omega, "{l}");
        }
    }
}

#[test]
fn generating_series_inverse() {
    // sum_{i+j=d} (-1)^j h_i e_j = 0
    for d in 1..=8i64 {
        let mut acc = SymFunc::zero_in(Basis::P);
        for j in 0..=d {
            let term = SymFunc::h(d - j).product(&SymFunc::e(j)).scale(&crate::arith::sign(j));
            acc = acc.add(&term);
        }
        assert!(acc.is_zero(), "d = {d}");
    }
}

#[test]
fn schur_laurent_examples() {
    assert_eq!(schur_laurent(&ShiftVector(vec![0, 0, 0])).unwrap(), LaurentPoly::one(3));
    let x = |i| LaurentPoly::variable(2, i);
    assert_eq!(schur_laurent(&ShiftVector(vec![1, 0])).unwrap(), x(0).add(&x(1)).unwrap());
    let inv = x(0).add(&x(1)).unwrap().invert_alphabet();
    assert_eq!(schur_laurent(&ShiftVector(vec![0, -1])).unwrap(), inv);
    // S̃_{(0,-1)} = e_2^{-1} s_1
    let e2_inv = LaurentPoly::monomial(vec![-1, -1], int(1));
    assert_eq!(inv, e2_inv.mul(&x(0).add(&x(1)).unwrap()).unwrap());
    assert!(schur_laurent(&ShiftVector(vec![0, 1])).is_err());
}

#[test]
fn schur_laurent_matches_evaluation() {
    let alphabets = [vec![int(2)], vec![int(1), rat(-1, 2)], vec![rat(2, 3), int(3), int(-1)]];
    for xs in &alphabets {
        let n = xs.len();
        for d in 0..=6 {
            for l in partitions_of(d, Some(n)) {
                let lp = schur_laurent(&l.padded(n).unwrap()).unwrap();
                assert_eq!(lp.evaluate(xs).unwrap(), schur(&l).evaluate(xs), "{l}");
                assert_eq!(lp, schur(&l).to_polynomial(n));
            }
        }
    }
}

#[test]
fn alternant_is_schur_times_vandermonde() {
    for n in 1..=3 {
        for d in 0..=6 {
            for l in partitions_of(d, Some(n)) {
                let shifted = ShiftVector(
                    (0..n).map(|j| l.part(j) as i64 + (n - 1 - j) as i64).collect(),
                );
                let lhs = poly::alternant(&shifted);
                let rhs = schur(&l).to_polynomial(n).mul(&poly::vandermonde(n)).unwrap();
                assert_eq!(lhs, rhs, "{l} n={n}");
            }
        }
    }
}

#[test]
fn p_to_m_agrees_with_h_duality() {
    // [m_μ] p_λ = ⟨p_λ, h_μ⟩, computed without the p -> m table
    for d in 1..=6 {
        for l in partitions_of(d, None) {
            let pl = SymFunc::basis_element(Basis::P, l.clone());
            let in_m = pl.convert(Basis::M);
            for mu in partitions_of(d, None) {
                let dual = scalar_alpha(&pl, &SymFunc::basis_element(Basis::H, mu.clone()), &int(1)).unwrap();
                assert_eq!(in_m.coefficient(&mu), dual);
            }
        }
    }
}

#[test]
fn cauchy_kernel_truncated_on_values() {
    // sum_{λ ⊢ d} s_λ(X) s_λ(Y) = h_d(XY)
    let xs = [int(1), rat(1, 2)];
    let ys = [int(2), int(-1), rat(1, 3)];
    let prod: Vec<Rational> = xs.iter().flat_map(|x| ys.iter().map(move |y| x * y)).collect();
    for d in 0..=5 {
        let lhs: Rational = partitions_of(d, None)
            .iter()
            .map(|l| schur(l).evaluate(&xs) * schur(l).evaluate(&ys))
            .sum();
        assert_eq!(lhs, SymFunc::h(d as i64).evaluate(&prod));
    }
}

#[test]
fn json_shape() {
    let f = SymFunc::from_coeffs(Basis::M, [(partition![2, 1], rat(-3, 4))]);
    let s = serde_json::to_string(&f).unwrap();
    assert_eq!(s, r#"{"basis":"m","terms":[{"partition":[2,1],"coeff":"-3/4"}]}"#);
    let back: SymFunc = serde_json::from_str(&s).unwrap();
    assert_eq!(back, f);
}

#[test]
fn concurrent_table_builds_agree() {
    let handles: Vec<_> = (0..4)
        .map(|_| std::thread::spawn(|| SymFunc::s(partition![3, 2, 2]).convert(Basis::M)))
        .collect();
    let results: Vec<SymFunc> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    for r in &results[1..] {
        assert_eq!(r.coeffs(), results[0].coeffs());
    }
    // Kostka: leading coefficient of m_λ in s_λ is one
    assert_eq!(results[0].coefficient(&partition![3, 2, 2]), int(1));
}

fn arb_symfunc(max_weight: usize) -> impl Strategy<Value = SymFunc> {
    let bases = prop_oneof![Just(Basis::M), Just(Basis::E), Just(Basis::H), Just(Basis::P), Just(Basis::S)];
    (
        bases,
        proptest::collection::vec((0..=max_weight, any::<prop::sample::Index>(), -9i64..10, 1i64..4), 0..4),
    )
        .prop_map(|(b, terms)| {
            SymFunc::from_coeffs(
                b,
                terms.into_iter().map(|(w, idx, p, q)| {
                    let ps = partitions_of(w, None);
                    (idx.get(&ps).clone(), rat(p, q))
                }),
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn basis_round_trips(f in arb_symfunc(8)) {
        for b in Basis::ALL {
            let there = f.convert(b);
            prop_assert_eq!(there.basis(), b);
            let back = there.convert(f.basis());
            prop_assert_eq!(back.coeffs(), f.coeffs());
        }
    }

    #[test]
    fn symfunc_ring_axioms(a in arb_symfunc(3), b in arb_symfunc(3), c in arb_symfunc(3)) {
        prop_assert_eq!(a.plus(&b), b.plus(&a));
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.plus(&b).plus(&c), a.plus(&b.plus(&c)));
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
        prop_assert_eq!(a.times(&<SymFunc as Ring>::one()), a.clone());
        prop_assert!(Ring::is_zero(&a.plus(&a.negate())));
    }

    #[test]
    fn negation_is_an_involution(f in arb_symfunc(6)) {
        prop_assert_eq!(negate_alphabet(&negate_alphabet(&f)), f);
    }
}
