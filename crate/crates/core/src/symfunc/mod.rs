//! Symmetric functions in the monomial, elementary, complete, power-sum and
//! Schur bases.
//!
//! Power sums are the pivot basis: every conversion goes through them, and
//! the scalar products and λ-ring operators are diagonal there.

mod tables;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, as_positive_integer, big, factorial, int, Rational};
use crate::error::{Error, Result};
use crate::partition::{z_lambda, Partition, ShiftVector};
use crate::perm::distinct_rearrangements;
use crate::poly::{self, LaurentPoly};

pub(crate) use tables::{accumulate, concat_product};

pub(crate) type Coeffs = BTreeMap<Partition, Rational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    M,
    E,
    H,
    P,
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S];

    /// Bases in which the product of basis elements is again a basis element.
    pub fn is_multiplicative(self) -> bool {
        matches!(self, Basis::E | Basis::H | Basis::P)
    }
}

/// A symmetric function: a finite combination of basis elements.
#[derive(Clone)]
pub struct SymFunc {
    basis: Basis,
    coeffs: Coeffs,
}

impl SymFunc {
    pub fn zero_in(basis: Basis) -> Self {
        SymFunc { basis, coeffs: Coeffs::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(Basis::P, [(Partition::empty(), c)])
    }

    pub fn from_coeffs(basis: Basis, terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut coeffs = Coeffs::new();
        for (p, c) in terms {
            accumulate(&mut coeffs, p, c);
        }
        SymFunc { basis, coeffs }
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        Self::from_coeffs(basis, [(lambda, Rational::one())])
    }

    /// `e_r`; zero for negative `r`.
    pub fn e(r: i64) -> Self {
        Self::one_part(Basis::E, r)
    }

    /// `h_r`; zero for negative `r`.
    pub fn h(r: i64) -> Self {
        Self::one_part(Basis::H, r)
    }

    /// `p_r` for `r ≥ 1`.
    pub fn p(r: usize) -> Self {
        Self::one_part(Basis::P, r as i64)
    }

    fn one_part(basis: Basis, r: i64) -> Self {
        if r < 0 {
            return Self::zero_in(basis);
        }
        Self::basis_element(basis, Partition::from_unsorted(vec![r as usize]))
    }

    pub fn m(lambda: Partition) -> Self {
        Self::basis_element(Basis::M, lambda)
    }

    pub fn s(lambda: Partition) -> Self {
        Self::basis_element(Basis::S, lambda)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Rational> {
        &self.coeffs
    }

    pub fn coefficient(&self, lambda: &Partition) -> Rational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `Some(c)` when this is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => self.coeffs.get(&Partition::empty()).cloned(),
            _ => None,
        }
    }

    /// Largest weight appearing.
    pub fn degree(&self) -> usize {
        self.coeffs.keys().map(Partition::weight).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut w = self.coeffs.keys().map(Partition::weight);
        match w.next() {
            None => true,
            Some(first) => w.all(|x| x == first),
        }
    }

    /// Keeps only the terms of weight `d`.
    pub fn component(&self, d: usize) -> Self {
        SymFunc {
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(p, _)| p.weight() == d)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero_in(self.basis);
        }
        SymFunc {
            basis: self.basis,
            coeffs: self.coeffs.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    /// The same symmetric function written in `target`.
    pub fn convert(&self, target: Basis) -> Self {
        if self.basis == target {
            return self.clone();
        }
        let p = self.to_power_sums();
        if target == Basis::P {
            return SymFunc { basis: Basis::P, coeffs: p };
        }
        let mut out = Coeffs::new();
        for (d, terms) in split_by_degree(&p) {
            let t = tables::tables(d);
            let from = t.from_p(target);
            let mut row = vec![Rational::zero(); t.parts.len()];
            for (lambda, c) in terms {
                for (slot, x) in row.iter_mut().zip(&from[t.index[lambda]]) {
                    if !x.is_zero() {
                        *slot += c * x;
                    }
                }
            }
            for (i, c) in row.into_iter().enumerate() {
                accumulate(&mut out, t.parts[i].clone(), c);
            }
        }
        SymFunc { basis: target, coeffs: out }
    }

    fn to_power_sums(&self) -> Coeffs {
        if self.basis == Basis::P {
            return self.coeffs.clone();
        }
        let mut out = Coeffs::new();
        for (d, terms) in split_by_degree(&self.coeffs) {
            let t = tables::tables(d);
            let to = t.to_p(self.basis);
            let mut row = vec![Rational::zero(); t.parts.len()];
            for (lambda, c) in terms {
                for (slot, x) in row.iter_mut().zip(&to[t.index[lambda]]) {
                    if !x.is_zero() {
                        *slot += c * x;
                    }
                }
            }
            for (i, c) in row.into_iter().enumerate() {
                accumulate(&mut out, t.parts[i].clone(), c);
            }
        }
        out
    }

    /// Exact product. Multiplicative bases multiply by concatenating
    /// indices; anything else goes through power sums and comes back to
    /// the basis of `self`.
    pub fn product(&self, other: &Self) -> Self {
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if self.basis == other.basis && self.basis.is_multiplicative() {
            return SymFunc { basis: self.basis, coeffs: concat_product(&self.coeffs, &other.coeffs) };
        }
        let a = self.to_power_sums();
        let b = other.to_power_sums();
        SymFunc { basis: Basis::P, coeffs: concat_product(&a, &b) }.convert(self.basis)
    }

    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let rhs = if other.basis == self.basis { other.clone() } else { other.convert(self.basis) };
        let mut out = self.coeffs.clone();
        for (p, c) in rhs.coeffs {
            accumulate(&mut out, p, c);
        }
        SymFunc { basis: self.basis, coeffs: out }
    }

    /// Specialization at the finite alphabet `values`.
    pub fn evaluate(&self, values: &[Rational]) -> Rational {
        let p = self.to_power_sums();
        let top = p.keys().map(|l| l.part(0)).max().unwrap_or(0);
        let sums: Vec<Rational> = (0..=top)
            .map(|r| values.iter().map(|v| arith::pow(v, r as i64)).sum())
            .collect();
        p.iter()
            .map(|(l, c)| l.parts().iter().fold(c.clone(), |acc, &r| acc * &sums[r]))
            .sum()
    }

    /// Restriction to `n` variables as an explicit polynomial.
    pub fn to_polynomial(&self, n: usize) -> LaurentPoly {
        let m = self.convert(Basis::M);
        let mut terms = Vec::new();
        for (mu, c) in &m.coeffs {
            if mu.len() > n {
                continue;
            }
            let mut padded: Vec<i64> = mu.parts().iter().map(|&x| x as i64).collect();
            padded.resize(n, 0);
            for e in distinct_rearrangements(&padded) {
                terms.push((e, c.clone()));
            }
        }
        LaurentPoly::from_terms(n, terms)
    }

    /// Applies a multiplicative weight to every power-sum term and returns
    /// the result in the original basis.
    fn map_power_sums(&self, weight: impl Fn(&Partition) -> Rational) -> Self {
        let p = self.to_power_sums();
        let mut out = Coeffs::new();
        for (l, c) in p {
            let w = weight(&l);
            accumulate(&mut out, l, c * w);
        }
        SymFunc { basis: Basis::P, coeffs: out }.convert(self.basis)
    }
}

fn split_by_degree(c: &Coeffs) -> BTreeMap<usize, Vec<(&Partition, &Rational)>> {
    let mut out: BTreeMap<usize, Vec<_>> = BTreeMap::new();
    for (p, v) in c {
        out.entry(p.weight()).or_default().push((p, v));
    }
    out
}

impl PartialEq for SymFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            return self.coeffs == other.coeffs;
        }
        self.convert(Basis::M).coeffs == other.convert(Basis::M).coeffs
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let tag = match self.basis {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
        };
        for (i, (p, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}){tag}{p}", arith::format_rational(c))?;
        }
        Ok(())
    }
}

impl arith::Ring for SymFunc {
    fn zero() -> Self {
        Self::zero_in(Basis::P)
    }
    fn one() -> Self {
        Self::constant(int(1))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.product(rhs)
    }
    fn negate(&self) -> Self {
        SymFunc::scale(self, &int(-1))
    }
    fn scale(&self, c: &Rational) -> Self {
        SymFunc::scale(self, c)
    }
}

/// An alphabet to specialize at.
#[derive(Clone, Debug, PartialEq)]
pub enum Alphabet {
    /// Infinitely many independent letters: symmetric functions stay formal.
    FormalInfinite,
    /// A finite multiset of rational letters.
    FiniteValues(Vec<Rational>),
    /// The degenerate alphabet with `Λ^n = 0` for every `n ≠ 0`.
    AZero,
}

/// `Λ^p` of an alphabet. Scalars come back as constant symmetric functions.
pub fn lambda_of(x: &Alphabet, p: i64) -> SymFunc {
    if p < 0 {
        return SymFunc::zero_in(Basis::E);
    }
    if p == 0 {
        return SymFunc::constant(Rational::one());
    }
    match x {
        Alphabet::FormalInfinite => SymFunc::e(p),
        Alphabet::FiniteValues(v) => SymFunc::constant(elementary_value(v, p)),
        Alphabet::AZero => SymFunc::zero_in(Basis::E),
    }
}

/// `e_p(values)`, zero for `p < 0` or `p > len`.
pub fn elementary_value(values: &[Rational], p: i64) -> Rational {
    elementary_values(values)
        .get(usize::try_from(p).unwrap_or(usize::MAX))
        .cloned()
        .unwrap_or_else(Rational::zero)
}

/// All `e_0..e_len` of a finite alphabet.
pub fn elementary_values(values: &[Rational]) -> Vec<Rational> {
    // coefficients of prod (1 + x t)
    let mut e = vec![Rational::one()];
    for v in values {
        e.push(Rational::zero());
        for i in (1..e.len()).rev() {
            let add = &e[i - 1] * v;
            e[i] += add;
        }
    }
    e
}

/// `⟨f, g⟩_α` with `⟨p_λ, p_μ⟩ = δ z_λ α^{l(λ)}`.
pub fn scalar_alpha(f: &SymFunc, g: &SymFunc, alpha: &Rational) -> Result<Rational> {
    if alpha.is_zero() {
        return Err(Error::ZeroAlpha);
    }
    let a = f.to_power_sums();
    let b = g.to_power_sums();
    let mut acc = Rational::zero();
    for (l, c) in &a {
        if let Some(d) = b.get(l) {
            acc += c * d * big(z_lambda(l)) * arith::pow(alpha, l.len() as i64);
        }
    }
    Ok(acc)
}

/// `⟨f, g⟩'_{n,α} = 1/n! C.T.{f(X) g(X^∨) prod_{i≠j} (1 - x_i/x_j)^{1/α}}`,
/// computed by brute-force expansion. Only integer `1/α` is supported.
pub fn scalar_prime(f: &SymFunc, g: &SymFunc, n: usize, inv_alpha: &Rational) -> Result<Rational> {
    let k = as_positive_integer(inv_alpha).ok_or_else(|| Error::NonIntegerExponent(inv_alpha.clone()))?;
    let kernel = poly::dyson_kernel(n, k);
    let right = g.to_polynomial(n).invert_alphabet().mul(&kernel)?;
    let ct = f.to_polynomial(n).constant_term_of_product(&right)?;
    Ok(ct / big(factorial(n as u64)))
}

/// `ω_α`: `p_r -> (-1)^{r-1} α p_r`.
pub fn omega_alpha(f: &SymFunc, alpha: &Rational) -> SymFunc {
    f.map_power_sums(|l| arith::sign((l.weight() - l.len()) as i64) * arith::pow(alpha, l.len() as i64))
}

/// λ-ring negation of the alphabet: `p_r -> -p_r`.
pub fn negate_alphabet(f: &SymFunc) -> SymFunc {
    f.map_power_sums(|l| arith::sign(l.len() as i64))
}

/// `f(Y + Z)` for a formal `Y` and a finite numeric alphabet `Z`:
/// `p_r -> p_r + p_r(Z)`. Returned in the `p` basis.
pub fn add_alphabet_values(f: &SymFunc, z: &[Rational]) -> SymFunc {
    let p = f.to_power_sums();
    let top = p.keys().map(|l| l.part(0)).max().unwrap_or(0);
    let shifts: Vec<Coeffs> = (0..=top)
        .map(|r| {
            let mut c = Coeffs::new();
            if r > 0 {
                let value: Rational = z.iter().map(|v| arith::pow(v, r as i64)).sum();
                accumulate(&mut c, Partition::from_unsorted(vec![r]), Rational::one());
                accumulate(&mut c, Partition::empty(), value);
            }
            c
        })
        .collect();
    let mut out = Coeffs::new();
    for (l, c) in p {
        let expanded = l
            .parts()
            .iter()
            .fold(tables::unit(), |acc, &r| concat_product(&acc, &shifts[r]));
        for (mu, v) in expanded {
            accumulate(&mut out, mu, v * &c);
        }
    }
    SymFunc { basis: Basis::P, coeffs: out }
}

/// Jacobi-Trudi `det(h_{λ_i - i + j})`, expanded over permutations with a
/// nonzero product. Keys are `h` indices.
pub(crate) fn schur_h_coeffs(lambda: &Partition) -> Coeffs {
    let rows: Vec<i64> = lambda.parts().iter().map(|&x| x as i64).collect();
    jacobi_trudi(&rows)
}

/// Expands `det(g_{rows[i] - i + j})` where `g_0 = 1` and `g_{<0} = 0`,
/// returning the signed multisets of indices.
fn jacobi_trudi(rows: &[i64]) -> Coeffs {
    let l = rows.len();
    let mut out = Coeffs::new();
    let mut used = vec![false; l];
    let mut chosen: Vec<usize> = Vec::with_capacity(l);
    fn rec(
        i: usize,
        rows: &[i64],
        used: &mut [bool],
        chosen: &mut Vec<usize>,
        picked: &mut Vec<usize>,
        out: &mut Coeffs,
    ) {
        let l = rows.len();
        if i == l {
            let sign = crate::perm::sign_of(picked);
            accumulate(out, Partition::from_unsorted(chosen.clone()), int(sign as i64));
            return;
        }
        for j in 0..l {
            if used[j] {
                continue;
            }
            let idx = rows[i] - i as i64 + j as i64;
            if idx < 0 {
                continue;
            }
            used[j] = true;
            picked.push(j);
            chosen.push(idx as usize);
            rec(i + 1, rows, used, chosen, picked, out);
            chosen.pop();
            picked.pop();
            used[j] = false;
        }
    }
    rec(0, rows, &mut used, &mut chosen, &mut Vec::with_capacity(l), &mut out);
    out
}

/// Schur function from the complete-function Jacobi-Trudi determinant,
/// returned in the `h` basis.
pub fn schur(lambda: &Partition) -> SymFunc {
    SymFunc { basis: Basis::H, coeffs: schur_h_coeffs(lambda) }
}

/// Schur function from the elementary determinant `det(e_{λ'_i - i + j})`
/// of size `n ≥ l(λ')`, returned in the `e` basis.
pub fn schur_dual(lambda: &Partition, n: usize) -> Result<SymFunc> {
    let conj = lambda.conjugate();
    if conj.len() > n {
        return Err(Error::NotEnoughVariables { what: "dual Jacobi-Trudi determinant", needed: conj.len(), n });
    }
    let rows: Vec<i64> = (0..n).map(|i| conj.part(i) as i64).collect();
    Ok(SymFunc { basis: Basis::E, coeffs: jacobi_trudi(&rows) })
}

/// `det(h_{v_i + i - j})`, the transposed-shift convention, for integer
/// vectors. Used to check which determinant convention an operator matches.
pub fn h_determinant_transposed_shift(v: &[i64]) -> SymFunc {
    // det(g_{v_i + i - j}) over 0-based i, j
    let l = v.len();
    let mut out = Coeffs::new();
    for perm in crate::perm::permutations(l) {
        let mut idx = Vec::with_capacity(l);
        let mut ok = true;
        for (i, &j) in perm.image.iter().enumerate() {
            let d = v[i] + i as i64 - j as i64;
            if d < 0 {
                ok = false;
                break;
            }
            idx.push(d as usize);
        }
        if ok {
            accumulate(&mut out, Partition::from_unsorted(idx), int(perm.sign as i64));
        }
    }
    SymFunc { basis: Basis::H, coeffs: out }
}

/// `det(h_{v_i - i + j})` for an arbitrary integer vector (zero `h` of
/// negative index), in the `h` basis.
pub fn h_determinant(v: &[i64]) -> SymFunc {
    SymFunc { basis: Basis::H, coeffs: jacobi_trudi(v) }
}

/// `S̃_v(X) = det(x_i^{v_j + n - j}) / Δ(X)` for a weakly decreasing
/// integer vector, by exact division.
pub fn schur_laurent(v: &ShiftVector) -> Result<LaurentPoly> {
    if !v.is_weakly_decreasing() {
        return Err(Error::NotAPartition(v.entries().to_vec()));
    }
    let n = v.len();
    let shifted = ShiftVector(
        v.entries().iter().enumerate().map(|(j, &x)| x + (n - 1 - j) as i64).collect(),
    );
    poly::alternant(&shifted).div_vandermonde()
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    basis: Basis,
    terms: Vec<SymTermJson>,
}

#[derive(Serialize, Deserialize)]
struct SymTermJson {
    partition: Partition,
    #[serde(with = "crate::arith::serde_rational")]
    coeff: Rational,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncJson {
            basis: self.basis,
            terms: self
                .coeffs
                .iter()
                .map(|(p, c)| SymTermJson { partition: p.clone(), coeff: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SymFuncJson::deserialize(d)?;
        Ok(SymFunc::from_coeffs(j.basis, j.terms.into_iter().map(|t| (t.partition, t.coeff))))
    }
}

#[cfg(test)]
mod tests;
