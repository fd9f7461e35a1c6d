//! Per-degree transition matrices between each basis and the power sums.
//!
//! Tables are built lazily and cached process-wide. Each matrix is
//! initialized at most once; readers never block each other.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use super::{schur_h_coeffs, Basis, Coeffs};
use crate::arith::{big, factorial, int, sign, Rational};
use crate::linalg::{self, Matrix};
use crate::partition::{partitions_of, z_lambda, Partition};

pub(crate) struct DegreeTables {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    to_p: [OnceLock<Arc<Matrix>>; 5],
    from_p: [OnceLock<Arc<Matrix>>; 5],
}

fn slot(b: Basis) -> usize {
    match b {
        Basis::M => 0,
        Basis::E => 1,
        Basis::H => 2,
        Basis::P => 3,
        Basis::S => 4,
    }
}

static TABLES: OnceLock<RwLock<HashMap<usize, Arc<DegreeTables>>>> = OnceLock::new();

pub(crate) fn tables(degree: usize) -> Arc<DegreeTables> {
    let lock = TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = lock.read().expect("table lock").get(&degree) {
        return Arc::clone(t);
    }
    let parts = partitions_of(degree, None);
    let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let fresh = Arc::new(DegreeTables {
        parts,
        index,
        to_p: Default::default(),
        from_p: Default::default(),
    });
    let mut w = lock.write().expect("table lock");
    Arc::clone(w.entry(degree).or_insert(fresh))
}

impl DegreeTables {
    fn degree(&self) -> usize {
        self.parts[0].weight()
    }

    /// Rows: basis element `b_λ` written in power sums.
    pub fn to_p(&self, b: Basis) -> Arc<Matrix> {
        Arc::clone(self.to_p[slot(b)].get_or_init(|| Arc::new(self.build_to_p(b))))
    }

    /// Rows: power sum `p_λ` written in basis `b`.
    pub fn from_p(&self, b: Basis) -> Arc<Matrix> {
        Arc::clone(self.from_p[slot(b)].get_or_init(|| Arc::new(self.build_from_p(b))))
    }

    fn dense(&self, c: &Coeffs) -> Vec<Rational> {
        let mut row = vec![Rational::zero(); self.parts.len()];
        for (p, v) in c {
            row[self.index[p]] = v.clone();
        }
        row
    }

    fn build_to_p(&self, b: Basis) -> Matrix {
        log::debug!("building {b:?} -> p table at degree {}", self.degree());
        match b {
            Basis::P => linalg::identity(self.parts.len()),
            Basis::E => self
                .parts
                .iter()
                .map(|l| self.dense(&multiplicative_row(l, e_in_p)))
                .collect(),
            Basis::H => self
                .parts
                .iter()
                .map(|l| self.dense(&multiplicative_row(l, h_in_p)))
                .collect(),
            Basis::M => linalg::invert(&self.from_p(Basis::M))
                .expect("p -> m is unitriangular up to a nonzero diagonal"),
            Basis::S => {
                let h = self.to_p(Basis::H);
                self.parts
                    .iter()
                    .map(|l| {
                        let mut row = vec![Rational::zero(); self.parts.len()];
                        for (mu, c) in schur_h_coeffs(l) {
                            for (slot, x) in row.iter_mut().zip(&h[self.index[&mu]]) {
                                if !x.is_zero() {
                                    *slot += &c * x;
                                }
                            }
                        }
                        row
                    })
                    .collect()
            }
        }
    }

    fn build_from_p(&self, b: Basis) -> Matrix {
        log::debug!("building p -> {b:?} table at degree {}", self.degree());
        match b {
            Basis::P => linalg::identity(self.parts.len()),
            Basis::E => self
                .parts
                .iter()
                .map(|l| self.dense(&multiplicative_row(l, p_in_e)))
                .collect(),
            Basis::H => self
                .parts
                .iter()
                .map(|l| self.dense(&multiplicative_row(l, p_in_h)))
                .collect(),
            Basis::M => self.parts.iter().map(|l| self.dense(&p_in_m(l))).collect(),
            Basis::S => {
                // Schur functions are self-dual: [s_μ] p_λ = z_λ [p_λ] s_μ.
                let s = self.to_p(Basis::S);
                self.parts
                    .iter()
                    .enumerate()
                    .map(|(i, l)| {
                        let z = big(z_lambda(l));
                        (0..self.parts.len()).map(|j| &z * &s[j][i]).collect()
                    })
                    .collect()
            }
        }
    }
}

/// Product of the one-part expansions `gen(λ_i)` in a multiplicative basis.
fn multiplicative_row(lambda: &Partition, gen: fn(usize) -> Coeffs) -> Coeffs {
    lambda.parts().iter().fold(unit(), |acc, &r| concat_product(&acc, &gen(r)))
}

pub(crate) fn unit() -> Coeffs {
    BTreeMap::from([(Partition::empty(), Rational::one())])
}

/// Product in a multiplicative basis: indices concatenate.
pub(crate) fn concat_product(a: &Coeffs, b: &Coeffs) -> Coeffs {
    let mut out = Coeffs::new();
    for (pa, ca) in a {
        for (pb, cb) in b {
            let mut parts = pa.parts().to_vec();
            parts.extend_from_slice(pb.parts());
            accumulate(&mut out, Partition::from_unsorted(parts), ca * cb);
        }
    }
    out
}

pub(crate) fn accumulate(map: &mut Coeffs, key: Partition, c: Rational) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(key);
    match entry {
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

/// `e_r = sum_{μ ⊢ r} ε_μ z_μ^{-1} p_μ`.
fn e_in_p(r: usize) -> Coeffs {
    partitions_of(r, None)
        .into_iter()
        .map(|mu| {
            let eps = sign((r - mu.len()) as i64);
            let c = eps / big(z_lambda(&mu));
            (mu, c)
        })
        .collect()
}

/// `h_r = sum_{μ ⊢ r} z_μ^{-1} p_μ`.
fn h_in_p(r: usize) -> Coeffs {
    partitions_of(r, None)
        .into_iter()
        .map(|mu| {
            let c = big(z_lambda(&mu)).recip();
            (mu, c)
        })
        .collect()
}

/// Newton's identity coefficient `r (l-1)! / prod m_i!` shared by both
/// expansions of `p_r`.
fn newton_weight(r: usize, mu: &Partition) -> Rational {
    let l = mu.len() as u64;
    let den = mu
        .multiplicities()
        .values()
        .fold(num_bigint::BigInt::one(), |acc, &m| acc * factorial(m as u64));
    int(r as i64) * big(factorial(l - 1)) / big(den)
}

/// `p_r = sum_{μ ⊢ r} (-1)^{r-l} r (l-1)!/prod m_i! e_μ`.
fn p_in_e(r: usize) -> Coeffs {
    partitions_of(r, None)
        .into_iter()
        .map(|mu| {
            let c = sign((r - mu.len()) as i64) * newton_weight(r, &mu);
            (mu, c)
        })
        .collect()
}

/// `p_r = sum_{μ ⊢ r} (-1)^{l-1} r (l-1)!/prod m_i! h_μ`.
fn p_in_h(r: usize) -> Coeffs {
    partitions_of(r, None)
        .into_iter()
        .map(|mu| {
            let c = sign(mu.len() as i64 - 1) * newton_weight(r, &mu);
            (mu, c)
        })
        .collect()
}

/// `p_λ` in monomials, built by multiplying `m_∅` by each `p_{λ_i}`.
fn p_in_m(lambda: &Partition) -> Coeffs {
    lambda
        .parts()
        .iter()
        .fold(unit(), |acc, &r| power_sum_times_monomials(r, &acc))
}

/// `p_r · sum c_μ m_μ`: adding `r` to one part of `μ` (or a new part)
/// gives `ν`, with coefficient the multiplicity of the enlarged part in `ν`.
pub(crate) fn power_sum_times_monomials(r: usize, f: &Coeffs) -> Coeffs {
    let mut out = Coeffs::new();
    for (mu, c) in f {
        let mut values: Vec<usize> = mu.parts().to_vec();
        values.dedup();
        values.push(0);
        for v in values {
            let mut parts = mu.parts().to_vec();
            if v == 0 {
                parts.push(r);
            } else {
                let pos = parts.iter().position(|&x| x == v).expect("value present");
                parts[pos] += r;
            }
            let nu = Partition::from_unsorted(parts);
            let mult = nu.parts().iter().filter(|&&x| x == v + r).count();
            accumulate(&mut out, nu, c * int(mult as i64));
        }
    }
    out
}
