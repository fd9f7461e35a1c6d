//! One executable check per registry id.
//!
//! The two sides of each identity are produced by different routes:
//! polynomial expansion and the umbral map on one side, hyperdeterminants
//! or Jack polynomials on the other. Comments on each check name the routes.

use std::collections::BTreeMap;

use super::{GridConfig, IdentityId, Params, Verdict};
use crate::arith::{self, big, factorial, int, multinomial, uniform_multinomial, Rational, Ring, Q};
use crate::error::{Error, Result};
use crate::hyperdet::{self, hankel, hankel_sign, toeplitz, umbral, HyperTensor, Strategy};
use crate::jack::{b_lambda, branching_sides, jack_p, jack_q, jack_r, kappa, skew_q};
use crate::partition::{almost_rectangle, partitions_of, reverse_n, AlmostRectangle, Partition, ShiftVector};
use crate::poly::{self, alternant, vandermonde, LaurentPoly};
use crate::symfunc::{add_alphabet_values, h_determinant, h_determinant_transposed_shift, negate_alphabet, omega_alpha, schur, schur_laurent, Basis, SymFunc};

use super::vandermonde::alternant_coefficient;

pub(crate) struct Ctx<'a> {
    pub cfg: &'a GridConfig,
    pub terms: u64,
    pub note: Option<String>,
}

impl<'a> Ctx<'a> {
    pub fn new(cfg: &'a GridConfig) -> Self {
        Ctx { cfg, terms: 0, note: None }
    }

    fn det<R: Ring>(&mut self, t: Result<HyperTensor<R>>) -> Result<R> {
        let t = t?;
        let strategy = if crate::par::is_parallel() { Strategy::Parallel } else { Strategy::Reduced };
        let (value, report) = hyperdet::det_strategy_bench(&t, strategy);
        self.terms = self.terms.saturating_add(u64::try_from(report.terms).unwrap_or(u64::MAX));
        Ok(value)
    }

    fn jack_cap(&self, weight: usize) -> Result<()> {
        if weight > self.cfg.jack_weight_cap {
            return Err(Error::CapExceeded(format!("Jack weight {weight}")));
        }
        Ok(())
    }
}

/// One side of an identity.
#[derive(Clone, Debug)]
pub(crate) enum Side {
    Sym(SymFunc),
    Value(Rational),
    Poly(LaurentPoly),
}

impl Side {
    fn coefficients(&self) -> BTreeMap<String, Rational> {
        match self {
            Side::Sym(f) => f.convert(Basis::M).coeffs().iter().map(|(l, c)| (format!("{l:?}"), c.clone())).collect(),
            Side::Value(v) => {
                let mut m = BTreeMap::new();
                if !Ring::is_zero(v) {
                    m.insert(String::new(), v.clone());
                }
                m
            }
            Side::Poly(p) => p.terms().iter().map(|(e, c)| (format!("{e:?}"), c.clone())).collect(),
        }
    }
}

/// `Some(c)` when `lhs = c rhs` with `c ≠ 0`.
fn ratio(lhs: &Side, rhs: &Side) -> Option<Rational> {
    let a = lhs.coefficients();
    let b = rhs.coefficients();
    let (key, bv) = b.iter().next()?;
    let c = a.get(key)? / bv;
    let keys: std::collections::BTreeSet<&String> = a.keys().chain(b.keys()).collect();
    let zero = int(0);
    let proportional = keys.into_iter().all(|k| a.get(k).unwrap_or(&zero) == &(&c * b.get(k).unwrap_or(&zero)));
    proportional.then_some(c)
}

/// Equal when every pair is equal; otherwise the common ratio, if any.
pub(crate) fn compare(pairs: &[(Side, Side)]) -> (Verdict, bool) {
    let coeffs: Vec<_> = pairs.iter().map(|(l, r)| (l.coefficients(), r.coefficients())).collect();
    let nondegenerate = coeffs.iter().any(|(l, r)| !l.is_empty() || !r.is_empty());
    if coeffs.iter().all(|(l, r)| l == r) {
        return (Verdict::Equal, nondegenerate);
    }
    let ratios: Vec<Option<Rational>> = pairs.iter().map(|(l, r)| ratio(l, r)).collect();
    let common = match ratios.first() {
        Some(Some(c)) if ratios.iter().all(|r| r.as_ref() == Some(c)) => Some(Q(c.clone())),
        _ => None,
    };
    (Verdict::Unequal { ratio: common }, nondegenerate)
}

/// Where `Λ^m` and symmetric functions take their values.
#[derive(Clone, Copy)]
pub(crate) enum Env<'a> {
    Formal,
    Values(&'a [Rational]),
}

/// How `m -> Λ^m` is realized for an umbral map or a hyperdeterminant.
#[derive(Clone)]
enum GenKind {
    /// `Λ^m(Y)`.
    Elementary,
    /// `S^m(X)`, the generator of `∫_{-X̄}`.
    Complete,
    /// `Λ^m(Y + Z)` for numeric `Z`.
    ElementaryPlus(Vec<Rational>),
    /// `Λ^m(-kȲ) = ω_k Λ^m(Y)`.
    OmegaElementary(Rational),
}

type Gen<'a, R> = Box<dyn Fn(i64) -> R + Sync + 'a>;

/// The two concrete rings a check can run in.
trait Scalar: Ring {
    fn generator<'a>(kind: &'a GenKind, env: Env<'a>) -> Gen<'a, Self>;
    fn specialize(f: &SymFunc, env: Env<'_>) -> Self;
    fn side(self) -> Side;
}

impl Scalar for SymFunc {
    fn generator<'a>(kind: &'a GenKind, _env: Env<'a>) -> Gen<'a, Self> {
        match kind {
            GenKind::Elementary => Box::new(hyperdet::formal_elementary),
            GenKind::Complete => Box::new(hyperdet::formal_complete),
            GenKind::ElementaryPlus(z) => Box::new(hyperdet::elementary_plus_values(z)),
            GenKind::OmegaElementary(k) => Box::new(hyperdet::omega_elementary(k)),
        }
    }
    fn specialize(f: &SymFunc, _env: Env<'_>) -> Self {
        f.clone()
    }
    fn side(self) -> Side {
        Side::Sym(self)
    }
}

impl Scalar for Rational {
    fn generator<'a>(kind: &'a GenKind, env: Env<'a>) -> Gen<'a, Self> {
        let values: &[Rational] = match env {
            Env::Values(v) => v,
            Env::Formal => &[],
        };
        match kind {
            GenKind::Elementary => Box::new(hyperdet::elementary_on(values)),
            GenKind::Complete => Box::new(hyperdet::complete_on(values)),
            GenKind::ElementaryPlus(z) => {
                let all: Vec<Rational> = values.iter().chain(z).cloned().collect();
                Box::new(hyperdet::elementary_on(&all))
            }
            GenKind::OmegaElementary(k) => {
                let values = values.to_vec();
                Box::new(move |m| omega_alpha(&SymFunc::e(m), k).evaluate(&values))
            }
        }
    }
    fn specialize(f: &SymFunc, env: Env<'_>) -> Self {
        match env {
            Env::Values(v) => f.evaluate(v),
            Env::Formal => f.as_constant().expect("formal specialization of a constant"),
        }
    }
    fn side(self) -> Side {
        Side::Value(self)
    }
}

/// A check that can run formally or on numeric alphabets.
trait RingCase {
    /// Weight of the symmetric functions compared.
    fn weight(&self) -> usize;
    fn run<R: Scalar>(&self, ctx: &mut Ctx, env: Env<'_>) -> Result<(R, R)>;
}

/// Formal comparison up to the formal cap, else on every evaluation alphabet.
fn by_weight<C: RingCase>(ctx: &mut Ctx, case: &C) -> Result<Vec<(Side, Side)>> {
    if case.weight() <= ctx.cfg.formal_weight_cap {
        let (l, r) = case.run::<SymFunc>(ctx, Env::Formal)?;
        return Ok(vec![(l.side(), r.side())]);
    }
    let alphabets: Vec<Vec<Rational>> = ctx.cfg.eval_alphabets.iter().map(|a| GridConfig::alphabet(a)).collect();
    let mut out = Vec::new();
    for y in &alphabets {
        let (l, r) = case.run::<Rational>(ctx, Env::Values(y))?;
        out.push((l.side(), r.side()));
    }
    Ok(out)
}

fn need<T: Clone>(v: &Option<T>, name: &str) -> Result<T> {
    v.clone().ok_or_else(|| Error::Parse(format!("missing parameter {name}")))
}

fn nf(n: usize) -> Rational {
    big(factorial(n as u64))
}

fn umult(k: usize, n: usize) -> Rational {
    big(uniform_multinomial(k as u64, n as u64))
}

fn sign(e: usize) -> Rational {
    arith::sign(e as i64)
}

fn k_u32(k: usize) -> u32 {
    k as u32
}

/// `v = (p^{n-l}, (p+1)^l)`.
fn toeplitz_shift(n: usize, p: usize, l: usize) -> ShiftVector {
    ShiftVector((0..n).map(|i| (p + usize::from(i >= n - l)) as i64).collect())
}

/// `n^p l`: `p` parts equal to `n`, then `l`.
fn rows_then_part(n: usize, p: usize, l: usize) -> Result<Partition> {
    almost_rectangle(AlmostRectangle::RowsThenPart, n, p, l)
}

pub(crate) fn run(id: IdentityId, params: &Params, ctx: &mut Ctx) -> Result<Vec<(Side, Side)>> {
    match id {
        IdentityId::HtSigns => {
            let n = need(&params.n, "n")?;
            let case = HtSigns {
                n,
                k: need(&params.k, "k")?,
                v: ShiftVector(params.v.clone().unwrap_or_else(|| vec![0; n])),
                hankel_first: params.form.as_deref() != Some("toeplitz"),
            };
            by_weight(ctx, &case)
        }
        IdentityId::D2h => by_weight(ctx, &D2h { n: need(&params.n, "n")?, k: need(&params.k, "k")? }),
        IdentityId::TransSchur => by_weight(
            ctx,
            &TransSchur { n: need(&params.n, "n")?, k: need(&params.k, "k")?, lambda: need(&params.lambda, "lambda")? },
        ),
        IdentityId::K1Example => {
            by_weight(ctx, &K1Example { n: need(&params.n, "n")?, lambda: need(&params.lambda, "lambda")? })
        }
        IdentityId::GenMatsumoto | IdentityId::QKappa | IdentityId::Matsumoto | IdentityId::InvAlpha => {
            let n = need(&params.n, "n")?;
            let p = need(&params.p, "p")?;
            let l = if id == IdentityId::Matsumoto { 0 } else { need(&params.l, "l")? };
            if l > n {
                return Err(Error::TooLong { len: l, n });
            }
            let case = Rectangular { id, n, k: need(&params.k, "k")?, p, l };
            ctx.jack_cap(case.weight())?;
            by_weight(ctx, &case)
        }
        IdentityId::HankelJack => {
            let case = HankelJack { n: need(&params.n, "n")?, k: need(&params.k, "k")? };
            ctx.jack_cap(case.weight())?;
            by_weight(ctx, &case)
        }
        IdentityId::KernelDual => kernel_dual(params, ctx),
        IdentityId::LToP => ltop(params, ctx),
        IdentityId::Branching => branching(params, ctx),
        IdentityId::SkewHankel | IdentityId::FinalSkew => {
            let n = need(&params.n, "n")?;
            let k = need(&params.k, "k")?;
            let lambda = need(&params.lambda, "lambda")?;
            if lambda.len() > n || lambda.part(0) > k * (n - 1) {
                return Err(Error::CapExceeded(format!("λ = {lambda:?} outside the {n} x {} box", k * (n - 1))));
            }
            let case = Skew { final_form: id == IdentityId::FinalSkew, n, k, lambda };
            ctx.jack_cap(n * k * (n - 1))?;
            by_weight(ctx, &case)
        }
        IdentityId::YPlusZ => {
            let case = YPlusZ {
                n: need(&params.n, "n")?,
                k: need(&params.k, "k")?,
                z: need(&params.z, "z")?.into_iter().map(|q| q.0).collect(),
                via_jack: params.form.as_deref() == Some("jack"),
            };
            if case.via_jack {
                ctx.jack_cap(case.weight())?;
            }
            by_weight(ctx, &case)
        }
        IdentityId::SchurCoeff => schur_coeff(params, ctx),
        IdentityId::AltToDet => {
            let vectors = need(&params.vectors, "vectors")?;
            let n = need(&params.n, "n")?;
            if vectors.is_empty() || vectors.len() % 2 == 1 || vectors.iter().any(|v| v.len() != n) {
                return Err(Error::InvalidTensor(format!("need an even number of length-{n} vectors")));
            }
            by_weight(ctx, &AltToDet { n, vectors })
        }
        IdentityId::OmegaPlus => {
            let v = need(&params.v, "v")?;
            by_weight(ctx, &OmegaPlus { v: ShiftVector(v) })
        }
        IdentityId::PatMinusX => pat_minus_x(params, ctx),
        IdentityId::VandJack => vand_jack(params, ctx),
        IdentityId::Dyson => {
            let a = need(&params.a, "a")?;
            let total: u64 = a.iter().map(|&x| x as u64).sum();
            let parts: Vec<u64> = a.iter().map(|&x| x as u64).collect();
            let lhs = Rational::from(poly::dyson_ct(&a));
            let rhs = big(multinomial(total, &parts)?);
            Ok(vec![(Side::Value(lhs), Side::Value(rhs))])
        }
    }
}

/// Hankel versus Toeplitz hyperdeterminants of shifted vectors.
struct HtSigns {
    n: usize,
    k: usize,
    v: ShiftVector,
    hankel_first: bool,
}

impl RingCase for HtSigns {
    fn weight(&self) -> usize {
        let s: i64 = self.v.entries().iter().sum::<i64>() + (self.k * self.n * (self.n - 1)) as i64;
        s.max(0) as usize
    }
    fn run<R: Scalar>(&self, ctx: &mut Ctx, env: Env<'_>) -> Result<(R, R)> {
        let (n, k) = (self.n, self.k);
        let g = R::generator(&GenKind::Elementary, env);
        let shift = (k * (n - 1)) as i64;
        let s = hankel_sign(k, n);
        if self.hankel_first {
            let lhs = ctx.det(hankel(k, n, &self.v, &g))?;
            let rhs = ctx.det(toeplitz(k, n, &self.v.add_constant(shift), &g))?;
            Ok((lhs, rhs.scale(&s)))
        } else {
            let lhs = ctx.det(toeplitz(k, n, &self.v, &g))?;
            let rhs = ctx.det(hankel(k, n, &self.v.add_constant(-shift), &g))?;
            Ok((lhs, rhs.scale(&s)))
        }
    }
}

/// Umbral image of `Δ^{2k}` versus the Hankel hyperdeterminant.
struct D2h {
    n: usize,
    k: usize,
}

impl RingCase for D2h {
    fn weight(&self) -> usize {
        self.k * self.n * (self.n - 1)
    }
    fn run<R: Scalar>(&self, ctx: &mut Ctx, env: Env<'_>) -> Result<(R, R)> {
        let g = R::generator(&GenKind::Elementary, env);
        let lhs = umbral(&vandermonde(self.n).pow(2 * self.k as u32), &g).scale(&nf(self.n).recip());
        let rhs = ctx.det(hankel(self.k, self.n, &ShiftVector::zeros(self.n), &g))?;
        Ok((lhs, rhs))
    }
}

/// Umbral image of `S_λ Δ^{2k}` (Schur as an alternant quotient) versus a
/// shifted Hankel hyperdeterminant.
struct TransSchur {
    n: usize,
    k: usize,
    lambda: Partition,
}

impl RingCase for TransSchur {
    fn weight(&self) -> usize {
        self.lambda.weight() + self.k * self.n * (self.n - 1)
    }
    fn run<R: Scalar>(&self, ctx: &mut Ctx, env: Env<'_>) -> Result<(R, R)> {
        let (n, k) = (self.n, self.k);
        let g = R::generator(&GenKind::Elementary, env);
        let padded = self.lambda.padded(n)?;
        let integrand = schur_laurent(&padded)?.mul(&vandermonde(n).pow(2 * k as u32))?;
        let lhs = umbral(&integrand, &g).scale(&nf(n).recip());
        let shift = reverse_n(padded.entries(), n)?;
        let rhs = ctx.det(hankel(k, n, &shift, &g))?;
        Ok((lhs, rhs))
    }
}

/// Umbral image of `S_λ Δ^2` versus a Jacobi-Trudi Schur function.
struct K1Example {
    n: usize,
    lambda: Partition,
}

impl RingCase for K1Example {
    fn weight(&self) -> usize {
        self.lambda.weight() + self.n * (self.n - 1)
    }
    fn run<R: Scalar>(&self, _ctx: &mut Ctx, env: Env<'_>) -> Result<(R, R)> {
        let n = self.n;
        let g = R::generator(&GenKind::Elementary, env);
        let padded = self.lambda.padded(n)?;
        let integrand = schur_laurent(&padded)?.mul(&vandermonde(n).pow(2))?;
        let lhs = umbral(&integrand, &g).scale(&nf(n).recip());
        let shifted = Partition::new(padded.entries().iter().map(|&x| x as usize + n - 1).collect())?;
        let rhs = R::specialize(&schur(&shifted.conjugate()), env).scale(&sign(n * (n - 1) / 2));
        Ok((lhs, rhs))
    }
}

/// Jack polynomials from Gram-Schmidt versus Toeplitz hyperdeterminants,
/// for the four almost-rectangular statements.
struct Rectangular {
    id: IdentityId,
    n: usize,
    k: usize,
    p: usize,
    l: usize,
}

impl RingCase for Rectangular {
    fn weight(&self) -> usize {
        self.n * self.p + self.l
    }
    fn run<R: Scalar>(&self, ctx: &mut Ctx, env: Env<'_>) -> Result<(R, R)> {
        let (n, k, p, l) = (self.n, self.k, self.p, self.l);
        let ki = int(k as i64);
        let v = toeplitz_shift(n, p, l);
        let norm = nf(n) / umult(k, n);
        let kap = kappa(n, p, l, k_u32(k));
        match self.id {
            IdentityId::GenMatsumoto => {
                let lhs = R::specialize(&jack_r(&rows_then_part(n, p, l)?, &ki, n)?, env);
                let g = R::generator(&GenKind::Elementary, env);
                Ok((lhs, ctx.det(toeplitz(k, n, &v, &g))?))
            }
            IdentityId::QKappa => {
                let lhs = R::specialize(&jack_q(&rows_then_part(n, p, l)?, &ki)?, env);
                let g = R::generator(&GenKind::Elementary, env);
                Ok((lhs, ctx.det(toeplitz(k, n, &v, &g))?.scale(&(norm * kap))))
            }
            IdentityId::Matsumoto => {
                let lhs = R::specialize(&jack_p(&Partition::rectangle(p, n), &ki)?, env);
                let g = R::generator(&GenKind::Elementary, env);
                Ok((lhs, ctx.det(toeplitz(k, n, &v, &g))?.scale(&norm)))
            }
            _ => {
                let shape = almost_rectangle(AlmostRectangle::Flat, n, p, l)?;
                let lhs = R::specialize(&jack_p(&shape, &ki.recip())?, env);
                let kind = GenKind::OmegaElementary(ki);
                let g = R::generator(&kind, env);
                Ok((lhs, ctx.det(toeplitz(k, n, &v, &g))?.scale(&(norm * kap))))
            }
        }
    }
}

/// Hankel hyperdeterminant versus the Jack polynomial of a rectangle.
struct HankelJack {
    n: usize,
    k: usize,
}

impl RingCase for HankelJack {
    fn weight(&self) -> usize {
        self.k * self.n * (self.n - 1)
    }
    fn run<R: Scalar>(&self, ctx: &mut Ctx, env: Env<'_>) -> Result<(R, R)> {
        let (n, k) = (self.n, self.k);
        let g = R::generator(&GenKind::Elementary, env);
        let lhs = ctx.det(hankel(k, n, &ShiftVector::zeros(n), &g))?;
        let rect = Partition::rectangle(k * (n - 1), n);
        let c = hankel_sign(k, n) * umult(k, n) / nf(n);
        let rhs = R::specialize(&jack_p(&rect, &int(k as i64))?, env).scale(&c);
        Ok((lhs, rhs))
    }
}

/// `e_d` of the product alphabet versus the dual Cauchy sum of Jack `Q`s.
fn kernel_dual(params: &Params, _ctx: &mut Ctx) -> Result<Vec<(Side, Side)>> {
    let k = int(need(&params.k, "k")? as i64);
    let d = need(&params.d, "d")?;
    let x = GridConfig::alphabet(&need(&params.x, "x")?);
    let y = GridConfig::alphabet(&need(&params.y, "y")?);
    let xy: Vec<Rational> = x.iter().flat_map(|a| y.iter().map(move |b| a * b)).collect();
    let lhs = crate::symfunc::elementary_value(&xy, d as i64);
    let mut rhs = int(0);
    for lambda in partitions_of(d, None) {
        let left = jack_q(&lambda, &k.recip())?.evaluate(&x);
        if Ring::is_zero(&left) {
            continue;
        }
        rhs += left * jack_q(&lambda.conjugate(), &k)?.evaluate(&y);
    }
    Ok(vec![(Side::Value(lhs), Side::Value(rhs))])
}

/// A product of inverted elementary monomials, built from subsets, versus
/// the Jack polynomial expanded in `n` variables.
fn ltop(params: &Params, ctx: &mut Ctx) -> Result<Vec<(Side, Side)>> {
    let n = need(&params.n, "n")?;
    let k = need(&params.k, "k")?;
    let p = need(&params.p, "p")?;
    let l = need(&params.l, "l")?;
    let shape = almost_rectangle(AlmostRectangle::Flat, n, p, l)?;
    ctx.jack_cap(shape.weight())?;
    let top = LaurentPoly::monomial(vec![-1; n], int(1)).pow(p as u32);
    let mut el = LaurentPoly::zero(n);
    for subset in 0u32..(1 << n) {
        if subset.count_ones() as usize == l {
            let e = (0..n).map(|i| -i64::from(subset >> i & 1)).collect();
            el = el.add(&LaurentPoly::monomial(e, int(1)))?;
        }
    }
    let lhs = top.mul(&el)?;
    let rhs = jack_p(&shape, &int(k as i64).recip())?.to_polynomial(n).invert_alphabet();
    Ok(vec![(Side::Poly(lhs), Side::Poly(rhs))])
}

/// `Q_λ` on the union alphabet versus the skew expansion.
fn branching(params: &Params, _ctx: &mut Ctx) -> Result<Vec<(Side, Side)>> {
    let lambda = need(&params.lambda, "lambda")?;
    let alpha = need(&params.alpha, "alpha")?.0;
    let x = GridConfig::alphabet(&need(&params.x, "x")?);
    let y = GridConfig::alphabet(&need(&params.y, "y")?);
    let (lhs, rhs) = branching_sides(&lambda, &alpha, &x, &y)?;
    Ok(vec![(Side::Value(lhs), Side::Value(rhs))])
}

/// Umbral images of inverted Jack polynomials times Vandermonde powers
/// versus skew Jack polynomials of the complementary rectangle.
struct Skew {
    final_form: bool,
    n: usize,
    k: usize,
    lambda: Partition,
}

impl RingCase for Skew {
    fn weight(&self) -> usize {
        self.k * self.n * (self.n - 1) - self.lambda.weight()
    }
    fn run<R: Scalar>(&self, _ctx: &mut Ctx, env: Env<'_>) -> Result<(R, R)> {
        let (n, k) = (self.n, self.k);
        let ki = int(k as i64);
        let q = jack_q(&self.lambda, &ki.recip())?.to_polynomial(n).invert_alphabet();
        let rect = Partition::rectangle(k * (n - 1), n);
        let skew = skew_q(&rect, &self.lambda.conjugate(), &ki)?;
        let common = umult(k, n) / b_lambda(&rect, &ki)?;
        if !self.final_form {
            let g = R::generator(&GenKind::Elementary, env);
            let lhs = umbral(&q.mul(&vandermonde(n).pow(2 * k as u32))?, &g);
            let rhs = R::specialize(&skew, env).scale(&(hankel_sign(k, n) * common));
            return Ok((lhs, rhs));
        }
        let g = R::generator(&GenKind::Complete, env);
        let integrand = q
            .mul(&vandermonde(n).pow(2 * (k as u32 - 1)))?
            .mul(&LaurentPoly::monomial(vec![(n - 1) as i64; n], int(1)))?;
        let lhs = omega_plus(&integrand, &g)?;
        let s = sign(n * (n - 1) * (k - 1) / 2 + self.lambda.weight());
        let rhs = R::specialize(&negate_alphabet(&skew), env).scale(&(s * common / nf(n)));
        Ok((lhs, rhs))
    }
}

/// `Ω^+ F = 1/n! ∫_{-X̄} a_δ a_{-δ} F`.
fn omega_plus<R: Ring>(f: &LaurentPoly, g: &(dyn Fn(i64) -> R + Sync)) -> Result<R> {
    let n = f.nvars();
    let delta = ShiftVector((0..n).map(|i| (n - 1 - i) as i64).collect());
    let neg = ShiftVector(delta.entries().iter().map(|&x| -x).collect());
    let integrand = alternant(&delta).mul(&alternant(&neg))?.mul(f)?;
    Ok(umbral(&integrand, g).scale(&nf(n).recip()))
}

/// The umbral integral with numeric shifts versus the Hankel
/// hyperdeterminant on `Y + Z`, or the rectangular Jack polynomial on
/// `Y + Z`.
struct YPlusZ {
    n: usize,
    k: usize,
    z: Vec<Rational>,
    via_jack: bool,
}

impl RingCase for YPlusZ {
    fn weight(&self) -> usize {
        self.k * self.n * (self.n - 1)
    }
    fn run<R: Scalar>(&self, ctx: &mut Ctx, env: Env<'_>) -> Result<(R, R)> {
        let (n, k) = (self.n, self.k);
        let plus = GenKind::ElementaryPlus(self.z.clone());
        let gz = R::generator(&plus, env);
        let hz = ctx.det(hankel(k, n, &ShiftVector::zeros(n), &gz))?;
        if self.via_jack {
            let rect = Partition::rectangle(k * (n - 1), n);
            let c = hankel_sign(k, n) * umult(k, n) / nf(n);
            let shifted = add_alphabet_values(&jack_p(&rect, &int(k as i64))?, &self.z);
            return Ok((hz, R::specialize(&shifted, env).scale(&c)));
        }
        let m = self.z.len() as i64;
        let mut shifts = LaurentPoly::one(n);
        for i in 0..n {
            for zj in &self.z {
                let mut e = vec![0; n];
                e[i] = 1;
                let factor = LaurentPoly::monomial(e, int(1)).add(&LaurentPoly::constant(n, zj.clone()))?;
                shifts = shifts.mul(&factor)?;
            }
        }
        shifts = shifts.mul(&LaurentPoly::monomial(vec![-m; n], int(1)))?;
        let g = R::generator(&GenKind::Elementary, env);
        let lhs = umbral(&shifts.mul(&vandermonde(n).pow(2 * k as u32))?, &g).scale(&nf(n).recip());
        Ok((lhs, hz))
    }
}

/// Schur coefficient of `Δ^{2k}` read off `Δ^{2k+1}` versus a Hankel
/// hyperdeterminant on `A_0`.
fn schur_coeff(params: &Params, ctx: &mut Ctx) -> Result<Vec<(Side, Side)>> {
    let n = need(&params.n, "n")?;
    let k = need(&params.k, "k")?;
    let lambda = need(&params.lambda, "lambda")?;
    let lhs = alternant_coefficient(n, k, &lambda)?;
    let shift = reverse_n(lambda.padded(n)?.entries(), n)?.add_constant(-(((2 * k + 1) * (n - 1)) as i64));
    let rhs = ctx.det(hankel(k + 1, n, &shift, hyperdet::azero))? * sign(n * (n - 1) / 2);
    Ok(vec![(Side::Value(lhs), Side::Value(rhs))])
}

/// Umbral image of a product of alternants versus the hyperdeterminant of
/// complete functions indexed by sums of entries.
struct AltToDet {
    n: usize,
    vectors: Vec<Vec<i64>>,
}

impl RingCase for AltToDet {
    fn weight(&self) -> usize {
        self.vectors.iter().flatten().sum::<i64>().max(0) as usize
    }
    fn run<R: Scalar>(&self, ctx: &mut Ctx, env: Env<'_>) -> Result<(R, R)> {
        let n = self.n;
        let g = R::generator(&GenKind::Complete, env);
        let mut prod = LaurentPoly::one(n);
        for v in &self.vectors {
            prod = prod.mul(&alternant(&ShiftVector(v.clone())))?;
        }
        let lhs = umbral(&prod, &g).scale(&nf(n).recip());
        let vectors = &self.vectors;
        let key = |idx: &[usize]| idx.iter().enumerate().map(|(pos, &i)| vectors[pos][i]).sum::<i64>();
        let rhs = ctx.det(HyperTensor::from_key(vectors.len(), n, key, &g))?;
        Ok((lhs, rhs))
    }
}

/// `Ω^+` of a Laurent Schur function versus the Jacobi-Trudi determinant.
/// The transposed-shift determinant is reported in the note.
struct OmegaPlus {
    v: ShiftVector,
}

impl RingCase for OmegaPlus {
    fn weight(&self) -> usize {
        self.v.entries().iter().sum::<i64>().max(0) as usize
    }
    fn run<R: Scalar>(&self, ctx: &mut Ctx, env: Env<'_>) -> Result<(R, R)> {
        let g = R::generator(&GenKind::Complete, env);
        let lhs = omega_plus(&schur_laurent(&self.v)?, &g)?;
        let rhs = R::specialize(&h_determinant(self.v.entries()), env);
        let other = R::specialize(&h_determinant_transposed_shift(self.v.entries()), env);
        let matches = |x: &R| if *x == lhs { "matches" } else { "differs" };
        ctx.note = Some(format!(
            "det(S^(λ_i-i+j)) {}; det(S^(λ_i+i-j)) {}",
            matches(&rhs),
            matches(&other)
        ));
        Ok((lhs, rhs))
    }
}

/// A Jack `R` on the negated alphabet, expanded in `n` variables, versus a
/// Schur alternant quotient times a Vandermonde power.
fn pat_minus_x(params: &Params, ctx: &mut Ctx) -> Result<Vec<(Side, Side)>> {
    let n = need(&params.n, "n")?;
    let k = need(&params.k, "k")?;
    let p = need(&params.p, "p")?;
    let l = need(&params.l, "l")?;
    let rows = p + (k - 1) * (n - 1);
    let shape = rows_then_part(n, rows, l)?;
    ctx.jack_cap(shape.weight())?;
    let r = jack_r(&shape, &int(k as i64), n)?;
    let lhs = negate_alphabet(&r).to_polynomial(n);
    let flat = almost_rectangle(AlmostRectangle::Flat, n, p, l)?.padded(n)?;
    let s = sign((k - 1) * n * (n - 1) / 2 + n * p + l);
    let rhs = schur_laurent(&flat)?.mul(&vandermonde(n).pow(2 * (k as u32 - 1)))?.scale(&s);
    Ok(vec![(Side::Poly(lhs), Side::Poly(rhs))])
}

/// Expanded `Δ^{2k}` versus a rectangular Jack polynomial on `-X`.
fn vand_jack(params: &Params, ctx: &mut Ctx) -> Result<Vec<(Side, Side)>> {
    let n = need(&params.n, "n")?;
    let k = need(&params.k, "k")?;
    let rect = Partition::rectangle((n - 1) * k, n);
    ctx.jack_cap(rect.weight())?;
    let lhs = vandermonde(n).pow(2 * k as u32);
    let c = hankel_sign(k, n) * umult(k + 1, n) / nf(n);
    let p = jack_p(&rect, &int(k as i64 + 1))?;
    let rhs = negate_alphabet(&p).to_polynomial(n).scale(&c);
    Ok(vec![(Side::Poly(lhs), Side::Poly(rhs))])
}

#[cfg(test)]
pub(crate) fn ratio_for_tests(lhs: &Side, rhs: &Side) -> Option<Rational> {
    ratio(lhs, rhs)
}
