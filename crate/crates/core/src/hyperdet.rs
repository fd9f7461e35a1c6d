//! Even-order hyperdeterminants over a generic ring, Hankel and Toeplitz
//! tensors built from a generator `m -> Λ^m`, and the umbral substitution
//! `x^p -> Λ^p`.
//!
//! `Det M = 1/n! sum_{σ ∈ S_n^{2k}} sign(σ) prod_i M_{σ_1(i) ... σ_{2k}(i)}`.
//! The default evaluation fixes `σ_1 = id`, which absorbs the `1/n!`.

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::arith::{self, big, factorial, int, Rational, Ring};
use crate::error::{Error, Result};
use crate::par;
use crate::partition::ShiftVector;
use crate::perm::{permutations, SignedPerm};
use crate::poly::LaurentPoly;
use crate::symfunc::{self, omega_alpha, Basis, SymFunc};

/// A dense order-`order`, dimension-`dim` tensor. Cells hold ids into a
/// table of distinct values so products can be grouped by value.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperTensor<R> {
    order: usize,
    dim: usize,
    values: Vec<R>,
    ids: Vec<u32>,
}

impl<R: Ring> HyperTensor<R> {
    /// Row-major entries. Equal entries share an id.
    pub fn from_entries(order: usize, dim: usize, entries: Vec<R>) -> Result<Self> {
        check_shape(order, dim, entries.len())?;
        let mut values: Vec<R> = Vec::new();
        let mut ids = Vec::with_capacity(entries.len());
        for e in entries {
            let id = match values.iter().position(|v| *v == e) {
                Some(i) => i,
                None => {
                    values.push(e);
                    values.len() - 1
                }
            };
            ids.push(id as u32);
        }
        Ok(HyperTensor { order, dim, values, ids })
    }

    /// Entries `value(key(index))`; `value` is called once per distinct key.
    pub fn from_key(
        order: usize,
        dim: usize,
        key: impl Fn(&[usize]) -> i64,
        value: impl Fn(i64) -> R,
    ) -> Result<Self> {
        let total = dim.checked_pow(order as u32).ok_or_else(|| Error::InvalidTensor("too many cells".into()))?;
        check_shape(order, dim, total)?;
        let mut by_key: BTreeMap<i64, u32> = BTreeMap::new();
        let mut values = Vec::new();
        let mut ids = Vec::with_capacity(total);
        let mut idx = vec![0usize; order];
        for _ in 0..total {
            let k = key(&idx);
            let id = *by_key.entry(k).or_insert_with(|| {
                values.push(value(k));
                (values.len() - 1) as u32
            });
            ids.push(id);
            for pos in (0..order).rev() {
                idx[pos] += 1;
                if idx[pos] < dim {
                    break;
                }
                idx[pos] = 0;
            }
        }
        Ok(HyperTensor { order, dim, values, ids })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn offset(&self, idx: &[usize]) -> usize {
        idx.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    pub fn entry(&self, idx: &[usize]) -> &R {
        &self.values[self.ids[self.offset(idx)] as usize]
    }

    /// Row-major entries.
    pub fn entries(&self) -> impl Iterator<Item = &R> + '_ {
        self.ids.iter().map(|&i| &self.values[i as usize])
    }

    /// Replaces the entry at `idx`.
    pub fn set(&mut self, idx: &[usize], value: R) {
        let off = self.offset(idx);
        let id = match self.values.iter().position(|v| *v == value) {
            Some(i) => i,
            None => {
                self.values.push(value);
                self.values.len() - 1
            }
        };
        self.ids[off] = id as u32;
    }

    /// Number of distinct entry values.
    pub fn distinct_values(&self) -> usize {
        self.values.len()
    }
}

fn check_shape(order: usize, dim: usize, len: usize) -> Result<()> {
    if order == 0 || dim == 0 {
        return Err(Error::InvalidTensor(format!("order {order} and dimension {dim} must be positive")));
    }
    let expected = dim.checked_pow(order as u32);
    if expected != Some(len) {
        return Err(Error::InvalidTensor(format!("{len} entries for order {order}, dimension {dim}")));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// The full `(n!)^{order}` sum divided by `n!`.
    Naive,
    /// `σ_1 = id`, `(n!)^{order-1}` terms, one thread.
    Reduced,
    /// The reduced sum split over `σ_2` across worker threads.
    Parallel,
}

#[derive(Clone, Debug, Serialize)]
pub struct DetReport {
    pub strategy: Strategy,
    pub order: usize,
    pub dim: usize,
    /// Permutation tuples visited.
    pub terms: u128,
    /// Distinct multisets of entry values, i.e. ring products formed.
    pub distinct_products: usize,
    pub elapsed: Duration,
    pub parallel: bool,
}

/// Number of permutation tuples a strategy visits.
pub fn term_count(order: usize, dim: usize, strategy: Strategy) -> u128 {
    let nf: u128 = (1..=dim as u128).product();
    match strategy {
        Strategy::Naive => nf.pow(order as u32),
        Strategy::Reduced | Strategy::Parallel => nf.pow(order as u32 - 1),
    }
}

/// The hyperdeterminant with the default strategy (parallel when the
/// `parallel` feature is on).
pub fn det<R: Ring>(t: &HyperTensor<R>) -> R {
    let strategy = if par::is_parallel() { Strategy::Parallel } else { Strategy::Reduced };
    det_strategy_bench(t, strategy).0
}

/// The hyperdeterminant computed inside a pool of `threads` workers.
pub fn det_with_threads<R: Ring>(t: &HyperTensor<R>, threads: usize) -> R {
    par::with_threads(threads, || det_strategy_bench(t, Strategy::Parallel).0)
}

/// Evaluates with an explicit strategy and reports what it cost.
pub fn det_strategy_bench<R: Ring>(t: &HyperTensor<R>, strategy: Strategy) -> (R, DetReport) {
    let start = Instant::now();
    let (value, distinct) = if t.order % 2 == 1 && t.dim > 1 && strategy != Strategy::Naive {
        (R::zero(), 0)
    } else {
        let perms = permutations(t.dim);
        let counts = match strategy {
            Strategy::Naive => sign_counts(t, &perms, &perms, &perms),
            Strategy::Reduced => sign_counts(t, &perms, &perms[..1], &perms),
            Strategy::Parallel => parallel_counts(t),
        };
        let distinct = counts.len();
        let mut value = combine(t, counts);
        if strategy == Strategy::Naive {
            value = value.scale(&big(factorial(t.dim as u64)).recip());
        }
        (value, distinct)
    };
    let report = DetReport {
        strategy,
        order: t.order,
        dim: t.dim,
        terms: term_count(t.order, t.dim, strategy),
        distinct_products: distinct,
        elapsed: start.elapsed(),
        parallel: par::is_parallel() && strategy == Strategy::Parallel,
    };
    log::debug!("det {strategy:?}: {} terms, {distinct} products in {:?}", report.terms, report.elapsed);
    (value, report)
}

type Counts = HashMap<Vec<u32>, i64>;

fn parallel_counts<R: Ring>(t: &HyperTensor<R>) -> Counts {
    let perms = permutations(t.dim);
    if t.order == 1 {
        return sign_counts(t, &perms, &perms[..1], &[]);
    }
    // a few chunks per worker keeps the per-chunk maps few and large
    let chunk = perms.len().div_ceil(4 * par::current_threads()).max(1);
    let chunks: Vec<&[SignedPerm]> = perms.chunks(chunk).collect();
    let parts: Vec<Counts> = par::map_slice(&chunks, |c| sign_counts(t, &perms, &perms[..1], c));
    let mut total = Counts::new();
    for part in parts {
        for (k, v) in part {
            *total.entry(k).or_insert(0) += v;
        }
    }
    total
}

/// Signed counts of each multiset of value ids over tuples with
/// `σ_1 ∈ firsts`, `σ_2 ∈ seconds` and every later `σ_i ∈ perms`.
/// `seconds` is ignored for order one.
fn sign_counts<R>(t: &HyperTensor<R>, perms: &[SignedPerm], firsts: &[SignedPerm], seconds: &[SignedPerm]) -> Counts {
    let n = t.dim;
    let mut counts = Counts::new();
    // offsets[pos][i]: flat offset of row i after fixing positions < pos
    let mut offsets: Vec<Vec<usize>> = vec![vec![0; n]; t.order + 1];
    for s1 in firsts {
        offsets[1].copy_from_slice(&s1.image);
        if t.order == 1 {
            walk(t, perms, 1, s1.sign as i64, &mut offsets, &mut counts);
            continue;
        }
        for s2 in seconds {
            for i in 0..n {
                offsets[2][i] = offsets[1][i] * n + s2.image[i];
            }
            walk(t, perms, 2, (s1.sign * s2.sign) as i64, &mut offsets, &mut counts);
        }
    }
    counts
}

fn walk<R>(
    t: &HyperTensor<R>,
    perms: &[SignedPerm],
    pos: usize,
    sign: i64,
    offsets: &mut Vec<Vec<usize>>,
    counts: &mut Counts,
) {
    let n = t.dim;
    if pos == t.order {
        let mut key: Vec<u32> = offsets[pos].iter().map(|&o| t.ids[o]).collect();
        key.sort_unstable();
        *counts.entry(key).or_insert(0) += sign;
        return;
    }
    for p in perms {
        for i in 0..n {
            offsets[pos + 1][i] = offsets[pos][i] * n + p.image[i];
        }
        walk(t, perms, pos + 1, sign * p.sign as i64, offsets, counts);
    }
}

/// `sum count * prod values` over multisets, in a fixed order.
fn combine<R: Ring>(t: &HyperTensor<R>, counts: Counts) -> R {
    let mut items: Vec<(Vec<u32>, i64)> = counts.into_iter().filter(|(_, c)| *c != 0).collect();
    items.sort();
    let terms: Vec<R> = par::map_slice(&items, |(ids, c)| {
        let mut acc = t.values[ids[0] as usize].clone();
        for &id in &ids[1..] {
            acc = acc.times(&t.values[id as usize]);
        }
        acc.scale(&int(*c))
    });
    terms.iter().fold(R::zero(), |acc, x| acc.plus(x))
}

/// `H^k_v = Det(gen(i_1 + ... + i_{2k} + v_{i_1}))`.
pub fn hankel<R: Ring>(k: usize, n: usize, v: &ShiftVector, gen: impl Fn(i64) -> R) -> Result<HyperTensor<R>> {
    check_shift(n, v)?;
    let v = v.entries().to_vec();
    HyperTensor::from_key(2 * k, n, |idx| idx.iter().sum::<usize>() as i64 + v[idx[0]], gen)
}

/// `T^k_v = Det(gen(i_1 + ... + i_k - (i_{k+1} + ... + i_{2k}) + v_{i_1}))`.
pub fn toeplitz<R: Ring>(k: usize, n: usize, v: &ShiftVector, gen: impl Fn(i64) -> R) -> Result<HyperTensor<R>> {
    check_shift(n, v)?;
    let v = v.entries().to_vec();
    HyperTensor::from_key(
        2 * k,
        n,
        |idx| {
            let head: usize = idx[..k].iter().sum();
            let tail: usize = idx[k..].iter().sum();
            head as i64 - tail as i64 + v[idx[0]]
        },
        gen,
    )
}

fn check_shift(n: usize, v: &ShiftVector) -> Result<()> {
    if v.len() != n {
        return Err(Error::InvalidTensor(format!("shift vector of length {} for dimension {n}", v.len())));
    }
    Ok(())
}

/// The umbral map `c prod x_i^{p_i} -> c prod gen(p_i)`. Monomials with the
/// same multiset of exponents share one ring product.
pub fn umbral<R: Ring>(f: &LaurentPoly, gen: impl Fn(i64) -> R + Sync) -> R {
    let mut classes: BTreeMap<Vec<i64>, Rational> = BTreeMap::new();
    for (e, c) in f.terms() {
        let mut key = e.clone();
        key.sort_unstable();
        *classes.entry(key).or_insert_with(|| int(0)) += c;
    }
    let mut needed: Vec<i64> = classes.keys().flatten().copied().collect();
    needed.sort_unstable();
    needed.dedup();
    let cache: HashMap<i64, R> = needed.iter().map(|&p| (p, gen(p))).collect();
    let items: Vec<(Vec<i64>, Rational)> = classes.into_iter().filter(|(_, c)| !Ring::is_zero(c)).collect();
    let terms: Vec<R> = par::map_slice(&items, |(e, c)| {
        let mut acc = R::from_rational(c);
        for p in e {
            if Ring::is_zero(&acc) {
                break;
            }
            acc = acc.times(&cache[p]);
        }
        acc
    });
    terms.iter().fold(R::zero(), |acc, x| acc.plus(x))
}

/// `m -> Λ^m(Y)` for a formal alphabet `Y`.
pub fn formal_elementary(m: i64) -> SymFunc {
    SymFunc::e(m)
}

/// `m -> S^m(X)` for a formal alphabet, the generator of `∫_{-X̄}`.
pub fn formal_complete(m: i64) -> SymFunc {
    SymFunc::h(m)
}

/// `m -> Λ^m(A_0)`: one at zero, zero elsewhere.
pub fn azero(m: i64) -> Rational {
    int(if m == 0 { 1 } else { 0 })
}

/// `m -> Λ^m(values)`.
pub fn elementary_on(values: &[Rational]) -> impl Fn(i64) -> Rational + Sync {
    let e = symfunc::elementary_values(values);
    move |m| usize::try_from(m).ok().and_then(|i| e.get(i).cloned()).unwrap_or_else(|| int(0))
}

/// `m -> S^m(values)`.
pub fn complete_on(values: &[Rational]) -> impl Fn(i64) -> Rational + Sync {
    let values = values.to_vec();
    move |m| if m < 0 { int(0) } else { SymFunc::h(m).evaluate(&values) }
}

/// `m -> Λ^m(-kȲ) = ω_k Λ^m(Y)`.
pub fn omega_elementary(k: &Rational) -> impl Fn(i64) -> SymFunc + Sync {
    let k = k.clone();
    move |m| omega_alpha(&SymFunc::e(m), &k)
}

/// `m -> Λ^m(Y + Z) = sum_i Λ^{m-i}(Y) Λ^i(Z)` for a numeric alphabet `Z`.
pub fn elementary_plus_values(z: &[Rational]) -> impl Fn(i64) -> SymFunc + Sync {
    let ez = symfunc::elementary_values(z);
    move |m| {
        let mut acc = SymFunc::zero_in(Basis::E);
        for (i, c) in ez.iter().enumerate() {
            let i = i as i64;
            if i > m {
                break;
            }
            acc = acc.add(&SymFunc::e(m - i).scale(c));
        }
        acc
    }
}

/// `(-1)^{k n (n-1) / 2}`.
pub fn hankel_sign(k: usize, n: usize) -> Rational {
    arith::sign((k * n * n.saturating_sub(1) / 2) as i64)
}

/// Ring elements that can be written in tensor JSON.
pub trait JsonRing: Ring {
    const KIND: RingKind;
    fn to_json(&self) -> serde_json::Value;
    fn from_json(v: &serde_json::Value) -> Result<Self>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingKind {
    Rational,
    Symfunc,
}

impl JsonRing for Rational {
    const KIND: RingKind = RingKind::Rational;
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(arith::format_rational(self))
    }
    fn from_json(v: &serde_json::Value) -> Result<Self> {
        match v {
            serde_json::Value::String(s) => arith::parse_rational(s),
            serde_json::Value::Number(n) if n.is_i64() => Ok(int(n.as_i64().expect("checked"))),
            other => Err(Error::Parse(format!("expected a rational string, got {other}"))),
        }
    }
}

impl JsonRing for SymFunc {
    const KIND: RingKind = RingKind::Symfunc;
    fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("symmetric functions serialize")
    }
    fn from_json(v: &serde_json::Value) -> Result<Self> {
        Ok(serde_json::from_value(v.clone())?)
    }
}

#[derive(Serialize, Deserialize)]
struct TensorJson {
    order: usize,
    dim: usize,
    ring: RingKind,
    entries: Vec<serde_json::Value>,
}

impl<R: JsonRing> HyperTensor<R> {
    pub fn to_json(&self) -> serde_json::Value {
        let doc = TensorJson {
            order: self.order,
            dim: self.dim,
            ring: R::KIND,
            entries: self.entries().map(|e| e.to_json()).collect(),
        };
        serde_json::to_value(doc).expect("tensor serializes")
    }
}

/// A tensor read from JSON, in whichever ring the file declares.
#[derive(Clone, Debug)]
pub enum AnyTensor {
    Rational(HyperTensor<Rational>),
    SymFunc(HyperTensor<SymFunc>),
}

impl AnyTensor {
    pub fn from_json_str(s: &str) -> Result<Self> {
        let doc: TensorJson = serde_json::from_str(s)?;
        fn build<R: JsonRing>(doc: &TensorJson) -> Result<HyperTensor<R>> {
            let entries = doc.entries.iter().map(R::from_json).collect::<Result<Vec<_>>>()?;
            HyperTensor::from_entries(doc.order, doc.dim, entries)
        }
        Ok(match doc.ring {
            RingKind::Rational => AnyTensor::Rational(build(&doc)?),
            RingKind::Symfunc => AnyTensor::SymFunc(build(&doc)?),
        })
    }

    pub fn det_json(&self, threads: usize) -> serde_json::Value {
        match self {
            AnyTensor::Rational(t) => det_with_threads(t, threads).to_json(),
            AnyTensor::SymFunc(t) => det_with_threads(t, threads).to_json(),
        }
    }
}
