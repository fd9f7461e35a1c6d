//! The Schur expansion of even Vandermonde powers, by two routes.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::arith::{big, factorial, Rational};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::poly::{dyson_kernel, vandermonde};
use crate::symfunc::schur;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExpansionPath {
    /// `Δ^{2k} Δ = sum_λ c_λ a_{λ+δ}`: read `c_λ` off the leading monomials.
    Alternant,
    /// `c_λ = ⟨S_λ, Δ^{2k}⟩'_{n,1}` as a constant term.
    ScalarPrime,
}

#[derive(Clone, Copy, Debug)]
pub struct ExpansionCaps {
    pub max_n: usize,
    pub max_k: usize,
}

impl Default for ExpansionCaps {
    fn default() -> Self {
        ExpansionCaps { max_n: 4, max_k: 2 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VandermondeExpansion {
    pub n: usize,
    pub k: usize,
    /// Nonzero coefficients only.
    #[serde(serialize_with = "serialize_coefficients")]
    pub coefficients: BTreeMap<Partition, Rational>,
    /// Partitions of the right weight and length whose coefficient is zero.
    pub vanishing: Vec<Partition>,
}

fn serialize_coefficients<S: serde::Serializer>(
    c: &BTreeMap<Partition, Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    #[derive(Serialize)]
    struct Entry<'a> {
        partition: &'a Partition,
        #[serde(with = "crate::arith::serde_rational")]
        coeff: &'a Rational,
    }
    let mut seq = s.serialize_seq(Some(c.len()))?;
    for (partition, coeff) in c {
        seq.serialize_element(&Entry { partition, coeff })?;
    }
    seq.end()
}

/// Schur expansion of `Δ(X)^{2k}` in `n` variables via alternants.
pub fn schur_expand_vandermonde(n: usize, k: usize) -> Result<VandermondeExpansion> {
    schur_expand_vandermonde_via(n, k, ExpansionPath::Alternant, ExpansionCaps::default())
}

pub fn schur_expand_vandermonde_via(
    n: usize,
    k: usize,
    path: ExpansionPath,
    caps: ExpansionCaps,
) -> Result<VandermondeExpansion> {
    if n > caps.max_n || k > caps.max_k {
        return Err(Error::CapExceeded(format!("Vandermonde expansion n = {n}, k = {k}")));
    }
    let candidates = partitions_of(k * n * n.saturating_sub(1), Some(n));
    let values: Vec<Rational> = match path {
        ExpansionPath::Alternant => {
            let odd = vandermonde(n).pow(2 * k as u32 + 1);
            candidates.iter().map(|l| odd.coefficient(&leading_exponent(n, l))).collect()
        }
        ExpansionPath::ScalarPrime => {
            let right = vandermonde(n).pow(2 * k as u32).invert_alphabet().mul(&dyson_kernel(n, 1))?;
            let norm = big(factorial(n as u64));
            candidates
                .iter()
                .map(|l| Ok(schur(l).to_polynomial(n).constant_term_of_product(&right)? / &norm))
                .collect::<Result<_>>()?
        }
    };
    let mut coefficients = BTreeMap::new();
    let mut vanishing = Vec::new();
    for (l, c) in candidates.into_iter().zip(values) {
        if num_traits::Zero::is_zero(&c) {
            vanishing.push(l);
        } else {
            coefficients.insert(l, c);
        }
    }
    Ok(VandermondeExpansion { n, k, coefficients, vanishing })
}

/// `λ + δ`.
fn leading_exponent(n: usize, lambda: &Partition) -> Vec<i64> {
    (0..n).map(|i| (lambda.part(i) + n - 1 - i) as i64).collect()
}

/// The coefficient of `S_λ` in `Δ^{2k}`, from the monomial `x^{λ+δ}` of
/// `Δ^{2k+1}`.
pub(crate) fn alternant_coefficient(n: usize, k: usize, lambda: &Partition) -> Result<Rational> {
    if lambda.len() > n {
        return Err(Error::TooLong { len: lambda.len(), n });
    }
    Ok(vandermonde(n).pow(2 * k as u32 + 1).coefficient(&leading_exponent(n, lambda)))
}
