//! Jack polynomials at a concrete rational parameter α.
//!
//! `P_λ` is built by Gram-Schmidt: it is `m_λ` plus a combination of the
//! `m_μ` with `μ` strictly below `λ` in dominance, orthogonal to all of them
//! for `⟨,⟩_α`. Results are memoized on `(λ, α)`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::arith::{self, big, factorial, int, uniform_multinomial, Rational};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::par;
use crate::partition::{dominance_leq, partitions_of, z_lambda, Partition};
use crate::symfunc::{scalar_alpha, Basis, SymFunc};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JackCacheKey {
    pub partition: Partition,
    pub alpha: Rational,
}

type Cache = RwLock<HashMap<JackCacheKey, Arc<SymFunc>>>;

static JACK_P: OnceLock<Cache> = OnceLock::new();

/// `P_λ^{(α)}` in the monomial basis.
pub fn jack_p(lambda: &Partition, alpha: &Rational) -> Result<SymFunc> {
    if alpha.is_zero() {
        return Err(Error::ZeroAlpha);
    }
    let key = JackCacheKey { partition: lambda.clone(), alpha: alpha.clone() };
    let cache = JACK_P.get_or_init(Default::default);
    if let Some(hit) = cache.read().expect("jack cache").get(&key) {
        return Ok((**hit).clone());
    }
    let fresh = Arc::new(gram_schmidt(lambda, alpha)?);
    let mut w = cache.write().expect("jack cache");
    Ok((**w.entry(key).or_insert(fresh)).clone())
}

fn gram_schmidt(lambda: &Partition, alpha: &Rational) -> Result<SymFunc> {
    let d = lambda.weight();
    let below: Vec<Partition> = partitions_of(d, None)
        .into_iter()
        .filter(|mu| mu != lambda && dominance_leq(mu, lambda).expect("same weight"))
        .collect();
    log::debug!("Gram-Schmidt for {lambda} at alpha = {}: {} unknowns", arith::format_rational(alpha), below.len());
    if below.is_empty() {
        return Ok(SymFunc::m(lambda.clone()));
    }
    let weights = PowerSumWeights::new(alpha);
    let expand = |mu: &Partition| SymFunc::m(mu.clone()).convert(Basis::P);
    let target = expand(lambda);
    let basis: Vec<SymFunc> = par::map_slice(&below, expand);
    let rows: Vec<(Vec<Rational>, Rational)> = par::map_slice(&basis, |row| {
        let entries = basis.iter().map(|col| weights.pair(row, col)).collect();
        (entries, -weights.pair(row, &target))
    });
    let (gram, rhs): (Matrix, Vec<Rational>) = rows.into_iter().unzip();
    let u = linalg::solve(&gram, &rhs).ok_or_else(|| Error::SingularGram {
        partition: lambda.parts().to_vec(),
        alpha: alpha.clone(),
    })?;
    Ok(SymFunc::from_coeffs(
        Basis::M,
        std::iter::once((lambda.clone(), Rational::one())).chain(below.into_iter().zip(u)),
    ))
}

/// `⟨,⟩_α` on power-sum expansions, with `z_ρ α^{l(ρ)}` cached per call site.
struct PowerSumWeights<'a> {
    alpha: &'a Rational,
    cache: RwLock<HashMap<Partition, Rational>>,
}

impl<'a> PowerSumWeights<'a> {
    fn new(alpha: &'a Rational) -> Self {
        PowerSumWeights { alpha, cache: RwLock::new(HashMap::new()) }
    }

    fn weight(&self, rho: &Partition) -> Rational {
        if let Some(w) = self.cache.read().expect("weights").get(rho) {
            return w.clone();
        }
        let w = big(z_lambda(rho)) * arith::pow(self.alpha, rho.len() as i64);
        self.cache.write().expect("weights").insert(rho.clone(), w.clone());
        w
    }

    fn pair(&self, f: &SymFunc, g: &SymFunc) -> Rational {
        let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
        let mut acc = Rational::zero();
        for (rho, a) in small.coeffs() {
            if let Some(b) = large.coeffs().get(rho) {
                acc += a * b * self.weight(rho);
            }
        }
        acc
    }
}

/// The hook products `(c_λ(α), c'_λ(α))`.
pub fn c_cprime(lambda: &Partition, alpha: &Rational) -> (Rational, Rational) {
    let conj = lambda.conjugate();
    let mut c = Rational::one();
    let mut cp = Rational::one();
    for (i, j) in lambda.cells() {
        let arm = int(lambda.part(i - 1) as i64 - j as i64);
        let leg = int(conj.part(j - 1) as i64 - i as i64);
        c *= alpha * &arm + &leg + int(1);
        cp *= alpha * (arm + int(1)) + leg;
    }
    (c, cp)
}

/// `b_λ(α) = P_λ / Q_λ = ⟨P_λ, P_λ⟩_α^{-1}`, from the hook products.
pub fn b_lambda(lambda: &Partition, alpha: &Rational) -> Result<Rational> {
    let (c, cp) = c_cprime(lambda, alpha);
    if cp.is_zero() {
        return Err(Error::DegenerateHook { partition: lambda.parts().to_vec(), alpha: alpha.clone() });
    }
    Ok(c / cp)
}

/// `Q_λ^{(α)} = b_λ(α) P_λ^{(α)}`.
pub fn jack_q(lambda: &Partition, alpha: &Rational) -> Result<SymFunc> {
    let b = b_lambda(lambda, alpha)?;
    Ok(jack_p(lambda, alpha)?.scale(&b))
}

/// `J_λ^{(α)} = c_λ(α) P_λ^{(α)}`.
pub fn jack_j(lambda: &Partition, alpha: &Rational) -> Result<SymFunc> {
    let (c, _) = c_cprime(lambda, alpha);
    Ok(jack_p(lambda, alpha)?.scale(&c))
}

/// `Q_{λ/μ} = sum_ν ⟨Q_λ, P_ν P_μ⟩_α Q_ν` over `ν ⊆ λ` of weight `|λ| - |μ|`.
/// The structure constants are computed as α-scalar products of
/// power-sum expansions.
pub fn skew_q(lambda: &Partition, mu: &Partition, alpha: &Rational) -> Result<SymFunc> {
    skew_q_over(lambda, mu, alpha, true)
}

pub(crate) fn skew_q_over(lambda: &Partition, mu: &Partition, alpha: &Rational, restrict: bool) -> Result<SymFunc> {
    if mu.weight() > lambda.weight() || (restrict && !lambda.contains(mu)) {
        return Ok(SymFunc::zero_in(Basis::M));
    }
    let q_lambda = jack_q(lambda, alpha)?.convert(Basis::P);
    let p_mu = jack_p(mu, alpha)?.convert(Basis::P);
    let nus: Vec<Partition> = partitions_of(lambda.weight() - mu.weight(), None)
        .into_iter()
        .filter(|nu| !restrict || lambda.contains(nu))
        .collect();
    let terms: Vec<Result<SymFunc>> = par::map_slice(&nus, |nu| {
        let p_nu = jack_p(nu, alpha)?.convert(Basis::P);
        let c = scalar_alpha(&q_lambda, &p_nu.product(&p_mu), alpha)?;
        Ok(if c.is_zero() { SymFunc::zero_in(Basis::M) } else { jack_q(nu, alpha)?.scale(&c) })
    });
    terms.into_iter().try_fold(SymFunc::zero_in(Basis::M), |acc, t| Ok(acc.add(&t?)))
}

/// `P_{λ/μ} = (b_μ / b_λ) Q_{λ/μ}`.
pub fn skew_p(lambda: &Partition, mu: &Partition, alpha: &Rational) -> Result<SymFunc> {
    let q = skew_q(lambda, mu, alpha)?;
    if q.is_zero() {
        return Ok(q);
    }
    Ok(q.scale(&(b_lambda(mu, alpha)? / b_lambda(lambda, alpha)?)))
}

/// Evaluates both sides of `Q_λ(X+Y) = sum_μ Q_μ(X) Q_{λ/μ}(Y)` on finite
/// alphabets and compares them.
pub fn branching_check(lambda: &Partition, alpha: &Rational, xs: &[Rational], ys: &[Rational]) -> Result<bool> {
    let (lhs, rhs) = branching_sides(lambda, alpha, xs, ys)?;
    Ok(lhs == rhs)
}

pub fn branching_sides(
    lambda: &Partition,
    alpha: &Rational,
    xs: &[Rational],
    ys: &[Rational],
) -> Result<(Rational, Rational)> {
    let joined: Vec<Rational> = xs.iter().chain(ys).cloned().collect();
    let lhs = jack_q(lambda, alpha)?.evaluate(&joined);
    let mut rhs = Rational::zero();
    for d in 0..=lambda.weight() {
        for mu in partitions_of(d, None) {
            if !lambda.contains(&mu) {
                continue;
            }
            rhs += jack_q(&mu, alpha)?.evaluate(xs) * skew_q(lambda, &mu, alpha)?.evaluate(ys);
        }
    }
    Ok((lhs, rhs))
}

/// Closed form of `⟨P_{λ'}^{(1/k)}, Q_{λ'}^{(1/k)}⟩'_{n,1/k}`, where the
/// Dyson constant term is the multinomial `(kn; k, ..., k)`. `shape` is
/// `λ'`; the value is zero when it has more than `n` parts.
pub fn scalar_prime_rect(shape: &Partition, n: usize, k: u32) -> Rational {
    if shape.len() > n {
        return Rational::zero();
    }
    let mut acc = big(uniform_multinomial(k as u64, n as u64)) / big(factorial(n as u64));
    let k = int(k as i64);
    let nn = int(n as i64);
    for (i, j) in shape.cells() {
        let (i, j) = (int(i as i64), int(j as i64));
        let num = &nn + (&j - int(1)) / &k - &i + int(1);
        let den = &nn + &j / &k - &i;
        acc *= num / den;
    }
    acc
}

/// `R_λ^{(k),n} = ⟨P_{λ'}^{(1/k)}, Q_{λ'}^{(1/k)}⟩'_{n,1/k} Q_λ^{(k)}`.
/// The parameter must be a positive integer because it is the exponent of
/// the constant-term kernel. Zero when `λ_1 > n`.
pub fn jack_r(lambda: &Partition, alpha: &Rational, n: usize) -> Result<SymFunc> {
    let k = arith::as_positive_integer(alpha).ok_or_else(|| Error::NonIntegerExponent(alpha.clone()))?;
    let scalar = scalar_prime_rect(&lambda.conjugate(), n, k);
    if scalar.is_zero() {
        return Ok(SymFunc::zero_in(Basis::M));
    }
    Ok(jack_q(lambda, alpha)?.scale(&scalar))
}

/// `κ(n,p,l;k)`.
pub fn kappa(n: usize, p: usize, l: usize, k: u32) -> Rational {
    let k = k as i64;
    let (n, p, l) = (n as i64, p as i64, l as i64);
    let mut acc = Rational::one();
    for i in 1..=n {
        for j in 1..=p {
            acc *= arith::rat(j + k * (i - 1), j - 1 + k * i);
        }
    }
    for i in 1..=l {
        acc *= arith::rat(p + 1 + k * (n - i), p + k * (n - i + 1));
    }
    acc
}

/// Closed form of `b_{n^{k(n-1)}}^{(k)}`.
pub fn b_rect_closed(n: usize, k: u32) -> Rational {
    let (n, k) = (n as u64, k as u64);
    let f = |m: u64| big(factorial(m));
    let num = f(2 * (n - 1)) * f(n * k) * f((n - 1) * k);
    let den = int(k as i64) * f(n) * f(n - 1) * f((2 * n - 1) * k - 1);
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::partition;
    use crate::symfunc::{omega_alpha, schur, scalar_prime};

    fn alphas() -> Vec<Rational> {
        vec![int(1), int(2), rat(1, 2), int(3)]
    }

    #[test]
    fn small_examples() {
        let a = rat(2, 5);
        assert_eq!(jack_p(&partition![1, 1], &a).unwrap().coeffs(), SymFunc::m(partition![1, 1]).coeffs());
        let p2 = jack_p(&partition![2], &a).unwrap();
        let expected = SymFunc::from_coeffs(
            Basis::M,
            [(partition![2], int(1)), (partition![1, 1], int(2) / (int(1) + &a))],
        );
        assert_eq!(p2.coeffs(), expected.coeffs());
        assert_eq!(jack_p(&Partition::empty(), &a).unwrap(), SymFunc::constant(int(1)));
        assert!(matches!(jack_p(&partition![1], &int(0)), Err(Error::ZeroAlpha)));
    }

    #[test]
    fn schur_at_alpha_one() {
        for d in 0..=6 {
            for l in partitions_of(d, None) {
                assert_eq!(jack_p(&l, &int(1)).unwrap(), schur(&l), "{l}");
            }
        }
    }

    #[test]
    fn orthogonality_and_duality() {
        for a in alphas() {
            for d in 0..=6 {
                let ps = partitions_of(d, None);
                for l in &ps {
                    let pl = jack_p(l, &a).unwrap();
                    for m in &ps {
                        let qm = jack_q(m, &a).unwrap();
                        let expected = int(if l == m { 1 } else { 0 });
                        assert_eq!(scalar_alpha(&pl, &qm, &a).unwrap(), expected, "{l} {m}");
                        if l != m {
                            let pm = jack_p(m, &a).unwrap();
                            assert!(scalar_alpha(&pl, &pm, &a).unwrap().is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hook_product_is_inverse_norm() {
        for a in alphas() {
            for d in 0..=6 {
                for l in partitions_of(d, None) {
                    let p = jack_p(&l, &a).unwrap();
                    let norm = scalar_alpha(&p, &p, &a).unwrap();
                    assert_eq!(b_lambda(&l, &a).unwrap(), norm.recip(), "{l}");
                }
            }
        }
    }

    #[test]
    fn hook_examples() {
        let a = rat(3, 4);
        assert_eq!(b_lambda(&Partition::empty(), &a).unwrap(), int(1));
        assert_eq!(b_lambda(&partition![1], &a).unwrap(), a.recip());
        assert_eq!(b_lambda(&partition![2], &int(1)).unwrap(), int(1));
        assert_eq!(c_cprime(&Partition::empty(), &a), (int(1), int(1)));
        assert_eq!(c_cprime(&partition![1], &a), (int(1), a.clone()));
        let (c, cp) = c_cprime(&partition![2], &a);
        assert_eq!(c, &a + int(1));
        assert_eq!(cp, int(2) * &a * &a);
        assert!(matches!(b_lambda(&partition![1], &int(0)), Err(Error::DegenerateHook { .. })));
        // a zero arm-leg factor at α = -1
        assert!(b_lambda(&partition![2], &int(-1)).unwrap().is_zero());
    }

    #[test]
    fn j_normalizations_agree() {
        for a in [int(2), rat(1, 3)] {
            for d in 0..=6 {
                for l in partitions_of(d, None) {
                    let (_, cp) = c_cprime(&l, &a);
                    let via_q = jack_q(&l, &a).unwrap().scale(&cp);
                    assert_eq!(jack_j(&l, &a).unwrap(), via_q, "{l}");
                }
            }
        }
        assert_eq!(jack_j(&partition![1], &int(5)).unwrap(), SymFunc::p(1));
    }

    #[test]
    fn omega_exchanges_p_and_q() {
        for a in [int(1), int(2), rat(1, 2)] {
            for d in 0..=6 {
                for l in partitions_of(d, None) {
                    let lhs = omega_alpha(&jack_p(&l, &a).unwrap(), &a);
                    let rhs = jack_q(&l.conjugate(), &a.recip()).unwrap();
                    assert_eq!(lhs, rhs, "{l}");
                }
            }
        }
    }

    /// Classical Gram-Schmidt along a total order of all partitions of a
    /// degree, orthogonalizing against every earlier element.
    fn sequential_gram_schmidt(order: &[Partition], alpha: &Rational) -> Vec<SymFunc> {
        let mut done: Vec<(SymFunc, Rational)> = Vec::new();
        for l in order {
            let m = SymFunc::m(l.clone());
            let mut f = m.clone();
            for (g, norm) in &done {
                let c = scalar_alpha(&m, g, alpha).unwrap() / norm;
                f = f.add(&g.scale(&-c));
            }
            let norm = scalar_alpha(&f, &f, alpha).unwrap();
            done.push((f, norm));
        }
        done.into_iter().map(|(f, _)| f.convert(Basis::M)).collect()
    }

    #[test]
    fn independent_of_linear_extension() {
        for a in [int(2), rat(1, 2)] {
            for d in 0..=5 {
                let mut by_lex = partitions_of(d, None);
                by_lex.reverse();
                let mut by_n = partitions_of(d, None);
                by_n.sort_by(|x, y| y.n_statistic().cmp(&x.n_statistic()).then_with(|| y.cmp(x)));
                for order in [by_lex, by_n] {
                    let got = sequential_gram_schmidt(&order, &a);
                    for (l, f) in order.iter().zip(got) {
                        assert_eq!(f, jack_p(l, &a).unwrap(), "{l}");
                    }
                }
            }
        }
    }

    #[test]
    fn primed_orthogonality() {
        for k in 1..=2u32 {
            let a = rat(1, k as i64);
            for n in 1..=3 {
                for d in 0..=4 {
                    let ps = partitions_of(d, Some(n));
                    for l in &ps {
                        for m in &ps {
                            if l == m {
                                continue;
                            }
                            let v = scalar_prime(&jack_p(l, &a).unwrap(), &jack_q(m, &a).unwrap(), n, &int(k as i64))
                                .unwrap();
                            assert!(v.is_zero(), "{l} {m} n={n} k={k}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn primed_norm_closed_form_matches_constant_term() {
        for k in 1..=2u32 {
            let a = rat(1, k as i64);
            for n in 1..=3 {
                for d in 0..=4 {
                    for shape in partitions_of(d, None) {
                        let brute = scalar_prime(
                            &jack_p(&shape, &a).unwrap(),
                            &jack_q(&shape, &a).unwrap(),
                            n,
                            &int(k as i64),
                        )
                        .unwrap();
                        assert_eq!(scalar_prime_rect(&shape, n, k), brute, "{shape} n={n} k={k}");
                    }
                }
            }
        }
        // empty shape: the Dyson factor alone
        assert_eq!(scalar_prime_rect(&Partition::empty(), 3, 2), int(90) / int(6));
    }

    #[test]
    fn r_normalization() {
        assert!(jack_r(&partition![3], &int(1), 2).unwrap().is_zero());
        assert_eq!(jack_r(&Partition::empty(), &int(2), 2).unwrap(), SymFunc::constant(int(6) / int(2)));
        let r = jack_r(&partition![1, 1], &int(1), 2).unwrap();
        let scalar = scalar_prime_rect(&partition![2], 2, 1);
        assert_eq!(r, schur(&partition![1, 1]).scale(&scalar));
        assert!(matches!(jack_r(&partition![1], &rat(1, 2), 2), Err(Error::NonIntegerExponent(_))));
    }

    #[test]
    fn r_changes_sign_with_degree_under_the_two_negations() {
        use crate::symfunc::negate_alphabet;
        for k in 1..=2 {
            let a = int(k);
            for d in 0..=5 {
                for l in partitions_of(d, None) {
                    let r = jack_r(&l, &a, 2).unwrap();
                    let minus_x = negate_alphabet(&r).scale(&arith::sign(d as i64));
                    let minus_x_bar = omega_alpha(&r, &int(1));
                    assert_eq!(minus_x, minus_x_bar, "{l}");
                }
            }
        }
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa(3, 0, 0, 2), int(1));
        assert_eq!(kappa(1, 1, 0, 1), int(1));
        assert_eq!(kappa(2, 1, 1, 1), int(1));
        // (1/2)(3/4)
        assert_eq!(kappa(2, 1, 0, 2), rat(3, 8));
    }

    #[test]
    fn rectangle_b_closed_form() {
        for n in 1..=3 {
            for k in 1..=2u32 {
                let rect = Partition::rectangle(k as usize * (n - 1), n);
                assert_eq!(b_rect_closed(n, k), b_lambda(&rect, &int(k as i64)).unwrap(), "n={n} k={k}");
            }
        }
        assert_eq!(b_rect_closed(1, 3), int(1));
        assert_eq!(b_rect_closed(2, 1), int(1));
    }

    #[test]
    fn skew_examples() {
        for a in [int(1), int(2), rat(1, 2)] {
            for d in 0..=4 {
                for l in partitions_of(d, None) {
                    assert_eq!(skew_q(&l, &Partition::empty(), &a).unwrap(), jack_q(&l, &a).unwrap());
                    assert_eq!(skew_q(&l, &l, &a).unwrap(), SymFunc::constant(int(1)));
                }
            }
        }
        assert!(skew_q(&partition![2], &partition![1, 1], &int(2)).unwrap().is_zero());
    }

    #[test]
    fn skew_vanishes_outside_containment() {
        let a = int(2);
        for d in 0..=5 {
            for l in partitions_of(d, None) {
                for e in 0..=d {
                    for mu in partitions_of(e, None) {
                        let full = skew_q_over(&l, &mu, &a, false).unwrap();
                        if !l.contains(&mu) {
                            assert!(full.is_zero(), "{l} / {mu}");
                        } else {
                            assert_eq!(full, skew_q(&l, &mu, &a).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn skew_p_matches_its_definition() {
        // ⟨P_{λ/μ}, Q_ν⟩ = ⟨P_λ, Q_μ Q_ν⟩
        let a = rat(1, 2);
        for d in 0..=5 {
            for l in partitions_of(d, None) {
                for e in 0..=d {
                    for mu in partitions_of(e, None) {
                        let sp = skew_p(&l, &mu, &a).unwrap();
                        for nu in partitions_of(d - e, None) {
                            let qn = jack_q(&nu, &a).unwrap();
                            let lhs = scalar_alpha(&sp, &qn, &a).unwrap();
                            let prod = jack_q(&mu, &a).unwrap().convert(Basis::P).product(&qn.convert(Basis::P));
                            let rhs = scalar_alpha(&jack_p(&l, &a).unwrap(), &prod, &a).unwrap();
                            assert_eq!(lhs, rhs, "{l}/{mu} against {nu}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn branching_examples() {
        let xs = [int(1), int(2)];
        assert!(branching_check(&partition![2, 1], &int(2), &xs, &[]).unwrap());
        assert!(branching_check(&partition![1], &rat(1, 2), &xs, &[int(3)]).unwrap());
        assert!(branching_check(&partition![2, 1], &int(2), &xs, &[int(3)]).unwrap());
        assert!(branching_check(&partition![3, 1], &rat(1, 3), &[rat(1, 2)], &[int(-1), int(4)]).unwrap());
    }

    #[test]
    fn concurrent_memo_is_consistent() {
        let handles: Vec<_> = (0..4)
            .map(|_| std::thread::spawn(|| jack_p(&partition![3, 2, 1], &rat(2, 3)).unwrap()))
            .collect();
        let got: Vec<SymFunc> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(got.windows(2).all(|w| w[0].coeffs() == w[1].coeffs()));
    }
}
