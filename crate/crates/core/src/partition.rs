//! Integer partitions, signed shift vectors and their combinatorics.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::factorial;
use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts. Trailing zeros are never
/// stored, so every value has exactly one representation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Accepts any weakly decreasing list; zero parts are dropped.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Sorts an arbitrary multiset of parts.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The rectangle `cols^rows` (rows parts equal to cols).
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// Diagram containment: `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.0[i] >= other.0[i])
    }

    /// Multiplicity of each part value.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Cells `(i, j)` of the diagram, 1-based row and column.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// Pads with zeros to length `n` as a shift vector.
    pub fn padded(&self, n: usize) -> Result<ShiftVector> {
        if self.len() > n {
            return Err(Error::TooLong { len: self.len(), n });
        }
        let mut v: Vec<i64> = self.0.iter().map(|&p| p as i64).collect();
        v.resize(n, 0);
        Ok(ShiftVector(v))
    }

    /// `sum (i-1) λ_i`; strictly decreases along the dominance order, so
    /// sorting by it gives a linear extension.
    pub fn n_statistic(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::from_unsorted(parts.to_vec())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Shorthand for literals in tests and examples.
#[macro_export]
macro_rules! partition {
    ($($p:expr),* $(,)?) => {
        $crate::Partition::new(vec![$($p),*]).expect("weakly decreasing literal")
    };
}

/// A fixed-length integer vector; entries may be negative and unsorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ShiftVector(pub Vec<i64>);

impl ShiftVector {
    pub fn zeros(n: usize) -> Self {
        ShiftVector(vec![0; n])
    }

    /// All entries equal to `c`, the `(c)^n` of the shift formulas.
    pub fn constant(n: usize, c: i64) -> Self {
        ShiftVector(vec![c; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &ShiftVector) -> ShiftVector {
        assert_eq!(self.len(), other.len(), "shift vectors of different length");
        ShiftVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn add_constant(&self, c: i64) -> ShiftVector {
        ShiftVector(self.0.iter().map(|a| a + c).collect())
    }

    pub fn reversed(&self) -> ShiftVector {
        ShiftVector(self.0.iter().rev().copied().collect())
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

/// `μ ≤ λ` in dominance order. Errors on unequal weights.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.weight() != lambda.weight() {
        return Err(Error::WeightMismatch {
            left: mu.weight(),
            right: lambda.weight(),
        });
    }
    let (mut a, mut b) = (0, 0);
    for i in 0..mu.len().max(lambda.len()) {
        a += mu.part(i);
        b += lambda.part(i);
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Centralizer order `z_λ = prod_i i^{m_i} m_i!`.
pub fn z_lambda(lambda: &Partition) -> BigInt {
    lambda
        .multiplicities()
        .into_iter()
        .fold(BigInt::one(), |acc, (part, mult)| {
            acc * num_traits::pow(BigInt::from(part), mult) * factorial(mult as u64)
        })
}

/// Pads `v` with zeros to length `n` and reverses it.
pub fn reverse_n(v: &[i64], n: usize) -> Result<ShiftVector> {
    if v.len() > n {
        return Err(Error::TooLong { len: v.len(), n });
    }
    let mut out = v.to_vec();
    out.resize(n, 0);
    out.reverse();
    Ok(ShiftVector(out))
}

/// The two almost-rectangular shapes used by the rectangular Jack formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlmostRectangle {
    /// `n^p l`: p parts equal to n followed by a part l.
    RowsThenPart,
    /// `(p+1)^l p^{n-l}`: the conjugate-style shape with n parts.
    Flat,
}

pub fn almost_rectangle(mode: AlmostRectangle, n: usize, p: usize, l: usize) -> Result<Partition> {
    match mode {
        AlmostRectangle::RowsThenPart => {
            let mut parts = vec![n; p];
            parts.push(l);
            // l may exceed n only if there are no n-parts before it
            Partition::new(parts)
        }
        AlmostRectangle::Flat => {
            if l > n {
                return Err(Error::TooLong { len: l, n });
            }
            let mut parts = vec![p + 1; l];
            parts.extend(std::iter::repeat(p).take(n - l));
            Partition::new(parts)
        }
    }
}

/// Partitions of `weight` with at most `max_len` parts, in reverse
/// lexicographic order (`(3), (2,1), (1,1,1)`).
pub fn partitions_of(weight: usize, max_len: Option<usize>) -> Vec<Partition> {
    fn rec(
        remaining: usize,
        max_part: usize,
        slots: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            cur.push(p);
            rec(remaining - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(
        weight,
        weight,
        max_len.unwrap_or(usize::MAX),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Every partition contained in the box `rows x cols`, any weight.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    (0..=rows * cols)
        .flat_map(|w| partitions_of(w, Some(rows)))
        .filter(|p| p.part(0) <= cols)
        .collect()
}
