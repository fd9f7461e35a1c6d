//! Exact Laurent polynomials in `x_1..x_n`.
//!
//! Terms are keyed by dense exponent vectors of fixed length `n`; negative
//! exponents are allowed and zero coefficients are never stored.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, Rational};
use crate::error::{Error, Result};
use crate::partition::ShiftVector;
use crate::perm::permutations;

pub type Exponents = Vec<i64>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl LaurentPoly {
    pub fn zero(n: usize) -> Self {
        LaurentPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::monomial(vec![0; n], c)
    }

    pub fn monomial(exponents: Exponents, c: Rational) -> Self {
        let mut p = Self::zero(exponents.len());
        if !c.is_zero() {
            p.terms.insert(exponents, c);
        }
        p
    }

    /// The variable `x_{i+1}` (0-based index).
    pub fn variable(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Exponents, Rational)>) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            assert_eq!(e.len(), n, "exponent vector of the wrong length");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &[i64]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VariableCountMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiplies every term by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        assert_eq!(shift.len(), self.n);
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (add_exponents(e, shift), c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.n));
        }
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let left: Vec<(&Exponents, &Rational)> = large.terms.iter().collect();
        let chunk = (left.len() / 64).max(16);
        let blocks: Vec<&[(&Exponents, &Rational)]> = left.chunks(chunk).collect();
        let partials = crate::par::map_slice(&blocks, |block| {
            let mut acc = LaurentPoly::zero(self.n);
            for (ea, ca) in block.iter() {
                for (eb, cb) in &small.terms {
                    acc.add_term(add_exponents(ea, eb), *ca * cb);
                }
            }
            acc
        });
        let mut out = Self::zero(self.n);
        for p in partials {
            for (e, c) in p.terms {
                out.add_term(e, c);
            }
        }
        Ok(out)
    }

    /// Power by repeated squaring. Logs the term count of every
    /// intermediate square, since `Δ^{2k}` is the memory hot spot.
    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.n);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same variable count");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same variable count");
                log::debug!("pow: squared base has {} terms", base.len());
            }
        }
        log::debug!("pow: result has {} terms", result.len());
        result
    }

    /// Coefficient of the all-zero exponent vector.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&vec![0; self.n])
    }

    /// `C.T.{f g}` without expanding the product.
    pub fn constant_term_of_product(&self, other: &Self) -> Result<Rational> {
        self.check_same(other)?;
        let mut acc = Rational::zero();
        let mut neg = vec![0i64; self.n];
        for (e, c) in &self.terms {
            for (slot, &x) in neg.iter_mut().zip(e) {
                *slot = -x;
            }
            if let Some(d) = other.terms.get(&neg) {
                acc += c * d;
            }
        }
        Ok(acc)
    }

    /// Substitutes `x_i -> 1/x_i`.
    pub fn invert_alphabet(&self) -> Self {
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    /// Applies `x_i -> x_{perm[i]}`.
    pub fn permute_variables(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.n];
            for (i, &x) in e.iter().enumerate() {
                f[perm[i]] = x;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    pub fn evaluate(&self, values: &[Rational]) -> Result<Rational> {
        if values.len() != self.n {
            return Err(Error::VariableCountMismatch { left: self.n, right: values.len() });
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, (&x, v)) in e.iter().zip(values).enumerate() {
                if x < 0 && v.is_zero() {
                    return Err(Error::ZeroAtPole { index: i + 1 });
                }
                if x != 0 {
                    t *= arith::pow(v, x);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Total degree of every term, if they all agree.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<i64>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Exact division by `x_i - x_j`.
    pub fn div_linear(&self, i: usize, j: usize) -> Result<Self> {
        // Group by the exponent of x_i; f_d = q_{d-1} - x_j q_d from the top.
        let mut slices: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let d = rest[i];
            rest[i] = 0;
            slices
                .entry(d)
                .or_insert_with(|| LaurentPoly::zero(self.n))
                .add_term(rest, c.clone());
        }
        let (Some(&lo), Some(&hi)) = (slices.keys().next(), slices.keys().next_back()) else {
            return Ok(Self::zero(self.n));
        };
        let mut xj = vec![0; self.n];
        xj[j] = 1;
        let mut quotient = Self::zero(self.n);
        let mut carry = LaurentPoly::zero(self.n); // q_d
        for d in (lo..=hi).rev() {
            let fd = slices.remove(&d).unwrap_or_else(|| LaurentPoly::zero(self.n));
            // q_{d-1} = f_d + x_j q_d
            let next = fd.add(&carry.shift(&xj))?;
            if d == lo {
                if !next.is_zero() {
                    return Err(Error::InexactDivision { divisor: format!("x{} - x{}", i + 1, j + 1) });
                }
                break;
            }
            for (e, c) in &next.terms {
                let mut full = e.clone();
                full[i] = d - 1;
                quotient.add_term(full, c.clone());
            }
            carry = next;
        }
        Ok(quotient)
    }

    /// Exact division by `Δ(X) = prod_{i<j} (x_i - x_j)`.
    pub fn div_vandermonde(&self) -> Result<Self> {
        let mut q = self.clone();
        for i in 0..self.n {
            for j in i + 1..self.n {
                q = q.div_linear(i, j)?;
            }
        }
        Ok(q)
    }
}

fn add_exponents(a: &[i64], b: &[i64]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `Δ(X) = prod_{i<j} (x_i - x_j)`, fully expanded.
pub fn vandermonde(n: usize) -> LaurentPoly {
    let mut out = LaurentPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            let f = LaurentPoly::variable(n, i)
                .sub(&LaurentPoly::variable(n, j))
                .expect("same n");
            out = out.mul(&f).expect("same n");
        }
    }
    out
}

/// `a_v = sum_σ ε(σ) x^{σ v}`.
pub fn alternant(v: &ShiftVector) -> LaurentPoly {
    let n = v.len();
    let mut out = LaurentPoly::zero(n);
    for p in permutations(n) {
        let mut e = vec![0; n];
        for (i, &target) in p.image.iter().enumerate() {
            e[target] = v.entries()[i];
        }
        out.add_term(e, Rational::from_integer(BigInt::from(p.sign)));
    }
    out
}

/// The Laurent polynomial `1 - x_i / x_j`.
pub fn one_minus_ratio(n: usize, i: usize, j: usize) -> LaurentPoly {
    let mut e = vec![0; n];
    e[i] = 1;
    e[j] = -1;
    LaurentPoly::one(n)
        .sub(&LaurentPoly::monomial(e, Rational::one()))
        .expect("same n")
}

/// `prod_{i≠j} (1 - x_i/x_j)^{a_i}`.
pub fn dyson_product(a: &[u32]) -> LaurentPoly {
    let n = a.len();
    let mut out = LaurentPoly::one(n);
    for i in 0..n {
        if a[i] == 0 {
            continue;
        }
        for j in 0..n {
            if i != j {
                out = out.mul(&one_minus_ratio(n, i, j).pow(a[i])).expect("same n");
            }
        }
    }
    out
}

/// The constant term of the Dyson product, by brute-force expansion.
pub fn dyson_ct(a: &[u32]) -> BigInt {
    let ct = dyson_product(a).constant_term();
    assert!(ct.is_integer(), "constant term of an integer polynomial");
    ct.to_integer()
}

/// The symmetric kernel `prod_{i≠j} (1 - x_i/x_j)^k`.
pub fn dyson_kernel(n: usize, k: u32) -> LaurentPoly {
    dyson_product(&vec![k; n])
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exponents: Vec<i64>,
    #[serde(with = "crate::arith::serde_rational")]
    coeff: Rational,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(e, c)| TermJson { exponents: e.clone(), coeff: c.clone() })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(d)?;
        let n = terms.first().map_or(0, |t| t.exponents.len());
        if terms.iter().any(|t| t.exponents.len() != n) {
            return Err(serde::de::Error::custom("exponent vectors of different lengths"));
        }
        Ok(LaurentPoly::from_terms(n, terms.into_iter().map(|t| (t.exponents, t.coeff))))
    }
}
