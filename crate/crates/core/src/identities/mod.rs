//! The identity registry: every relation between hyperdeterminants, Schur
//! functions and Jack polynomials, each compiled to an exact equality check
//! over a parameter grid.
//!
//! A failing identity is not silently repaired. If `lhs / rhs` is the same
//! constant on every case of an id, the id is reported as holding up to that
//! constant, which separates a misprinted normalization from a wrong
//! implementation.

mod cases;
mod grid;
mod vandermonde;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::arith::Q;
use crate::error::{Error, Result};
use crate::par;
use crate::partition::Partition;

pub use grid::{cases_for, GridConfig};
pub use vandermonde::{
    schur_expand_vandermonde, schur_expand_vandermonde_via, ExpansionCaps, ExpansionPath, VandermondeExpansion,
};

macro_rules! registry {
    ($($variant:ident => $tag:literal, $mode:ident, $statement:literal;)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        pub enum IdentityId {
            $(#[serde(rename = $tag)] $variant,)*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant,)*];

            pub fn tag(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $tag,)*
                }
            }

            pub fn acceptance(self) -> Acceptance {
                match self {
                    $(IdentityId::$variant => Acceptance::$mode,)*
                }
            }

            /// The statement being checked, in plain notation.
            pub fn statement(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $statement,)*
                }
            }
        }
    };
}

registry! {
    HtSigns => "HT-SIGNS", Exact,
        "H^k_v = (-1)^{kn(n-1)/2} T^k_{v+(k(n-1))^n}, and back";
    D2h => "D2H", Exact,
        "1/n! ∫_Y Δ^{2k} = H^k_n(Y)";
    TransSchur => "TRANS-SCHUR", Exact,
        "1/n! ∫_Y S_λ Δ^{2k} = H^k_{reverse_n(λ)}(Y)";
    K1Example => "K1-EXAMPLE", Exact,
        "1/n! ∫_Y S_λ Δ^2 = (-1)^{n(n-1)/2} S_{(λ+(n-1)^n)'}(Y)";
    GenMatsumoto => "GEN-MATSUMOTO", Exact,
        "R^{(k),n}_{n^p l} = T^k_{p^{n-l}(p+1)^l}";
    QKappa => "Q-KAPPA", Exact,
        "Q^{(k)}_{n^p l} = n! (kn; k,...,k)^{-1} κ(n,p,l;k) T^k_{p^{n-l}(p+1)^l}";
    Matsumoto => "MATSUMOTO", Exact,
        "P^{(k)}_{n^p} = n! (kn; k,...,k)^{-1} T^k_{p^n}";
    HankelJack => "HANKEL-JACK", Exact,
        "H^k_n = (-1)^{kn(n-1)/2} / n! (kn; k,...,k) P^{(k)}_{n^{k(n-1)}}";
    InvAlpha => "INV-ALPHA", ExactOrFitted,
        "P^{(1/k)}_{(p+1)^l p^{n-l}} = n! (kn; k,...,k)^{-1} κ(n,p,l;k) T^k_{p^{n-l}(p+1)^l}(-kȲ)";
    KernelDual => "KERNEL-DUAL", ExactOrFitted,
        "e_d(XY) = sum_{λ ⊢ d} Q^{(1/k)}_λ(X) Q^{(k)}_{λ'}(Y)";
    LToP => "LTOP", ExactOrFitted,
        "Λ^n(X^∨)^p Λ^l(X^∨) = P^{(1/k)}_{(p+1)^l p^{n-l}}(X^∨)";
    Branching => "BRANCHING", ExactOrFitted,
        "Q_λ(X+Y) = sum_μ Q_μ(X) Q_{λ/μ}(Y)";
    SkewHankel => "SKEW-HANKEL", ExactOrFitted,
        "∫_Y Q^{(1/k)}_λ(X^∨) Δ^{2k} = (-1)^{kn(n-1)/2} (nk; k,...,k) b_{n^{k(n-1)}}^{-1} Q^{(k)}_{n^{k(n-1)}/λ'}(Y)";
    YPlusZ => "Y-PLUS-Z", ExactOrFitted,
        "1/n! ∫_Y prod x_i^{-m} prod (x_i + z_j) Δ^{2k} = H^k_n(Y+Z)";
    SchurCoeff => "SCHUR-COEFF", Exact,
        "[S_λ] Δ^{2k} = (-1)^{n(n-1)/2} H^{k+1}_{reverse_n(λ) - ((2k+1)(n-1))^n}(A_0)";
    AltToDet => "ALT-TO-DET", ExactOrFitted,
        "1/n! ∫_{-X̄} a_λ a_μ ... a_ρ = Det(S^{λ_{i_1} + μ_{i_2} + ... + ρ_{i_{2k}}})";
    OmegaPlus => "OMEGA-PLUS", ExactOrFitted,
        "1/n! ∫_{-X̄} a_δ a_{-δ} S̃_λ = det(S^{λ_i - i + j})";
    PatMinusX => "PAT-MINUS-X", ExactOrFitted,
        "R^{(k),n}_{n^{p+(k-1)(n-1)} l}(-X) = (-1)^{(k-1)n(n-1)/2+np+l} S_{(p+1)^l p^{n-l}} Δ^{2(k-1)}";
    VandJack => "VAND-JACK", Exact,
        "Δ^{2k} = (-1)^{kn(n-1)/2} / n! ((k+1)n; k+1,...,k+1) P^{(k+1)}_{n^{(n-1)k}}(-X)";
    FinalSkew => "FINAL-SKEW", ExactOrFitted,
        "Ω^+[Q^{(1/k)}_λ(X^∨) Δ^{2(k-1)} Λ^n(X)^{n-1}] = (-1)^{n(n-1)(k-1)/2+|λ|} / n! (nk; k,...,k) b_{n^{k(n-1)}}^{-1} Q^{(k)}_{n^{k(n-1)}/λ'}(-X)";
    Dyson => "DYSON", Exact,
        "C.T. prod_{i≠j} (1 - x_i/x_j)^{a_i} = (|a|; a_1,...,a_n)";
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.tag().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// What an id must achieve for the run to be accepted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Acceptance {
    /// Every attempted case is an exact equality.
    Exact,
    /// Exact on enough nondegenerate cases, or a single constant ratio over
    /// the whole grid.
    ExactOrFitted,
}

/// Named parameters of one case. Absent fields are omitted from JSON.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vectors: Option<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Q>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<Q>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<Vec<Q>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<Vec<Q>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub form: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    Equal,
    /// `ratio` is `lhs / rhs` when that is a single constant.
    Unequal {
        #[serde(skip_serializing_if = "Option::is_none")]
        ratio: Option<Q>,
    },
    Skipped {
        reason: String,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdentityCase {
    pub id: IdentityId,
    pub params: Params,
    pub verdict: Verdict,
    /// False when both sides vanish.
    pub nondegenerate: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Permutation tuples visited by hyperdeterminant evaluations.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IdStatus {
    Exact,
    FittedConstant { constant: Q },
    Failed { reason: String },
    /// No case was attempted.
    Skipped,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdSummary {
    pub id: IdentityId,
    pub acceptance: Acceptance,
    pub status: IdStatus,
    pub cases: usize,
    pub equal: usize,
    pub unequal: usize,
    pub skipped: usize,
    pub nondegenerate: usize,
    pub accepted: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub cases: Vec<IdentityCase>,
    pub summary: Vec<IdSummary>,
    pub accepted: bool,
}

impl Report {
    /// Drops wall-clock fields so two runs compare byte for byte.
    pub fn without_timings(mut self) -> Self {
        for c in &mut self.cases {
            c.elapsed_ms = None;
        }
        self
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn summary_for(&self, id: IdentityId) -> Option<&IdSummary> {
        self.summary.iter().find(|s| s.id == id)
    }
}

/// Checks one case with the default grid caps.
pub fn verify_identity(id: IdentityId, params: &Params) -> IdentityCase {
    verify_identity_with(id, params, &GridConfig::default())
}

pub fn verify_identity_with(id: IdentityId, params: &Params, cfg: &GridConfig) -> IdentityCase {
    let start = Instant::now();
    let mut ctx = cases::Ctx::new(cfg);
    let (verdict, nondegenerate) = match cases::run(id, params, &mut ctx) {
        Ok(pairs) => cases::compare(&pairs),
        Err(Error::CapExceeded(what)) => (Verdict::Skipped { reason: format!("{what} exceeds the configured cap") }, false),
        Err(e) => {
            ctx.note = Some(format!("error: {e}"));
            (Verdict::Unequal { ratio: None }, false)
        }
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    log::debug!("{id} {params:?}: {verdict:?} in {elapsed_ms:.1} ms");
    IdentityCase {
        id,
        params: params.clone(),
        verdict,
        nondegenerate,
        note: ctx.note,
        terms: (ctx.terms > 0).then_some(ctx.terms),
        elapsed_ms: Some(elapsed_ms),
    }
}

/// Runs every grid case of `ids` (in registry order, each id once) and
/// summarizes per id.
pub fn run_grid(ids: &[IdentityId], cfg: &GridConfig) -> Report {
    let mut ids = ids.to_vec();
    ids.sort();
    ids.dedup();
    let jobs: Vec<(IdentityId, Params)> =
        ids.iter().flat_map(|&id| cases_for(id, cfg).into_iter().map(move |p| (id, p))).collect();
    let cases = par::map_slice(&jobs, |(id, p)| verify_identity_with(*id, p, cfg));
    let summary: Vec<IdSummary> = ids.iter().map(|&id| summarize(id, &cases, cfg)).collect();
    let accepted = summary.iter().all(|s| s.accepted);
    Report { cases, summary, accepted }
}

fn summarize(id: IdentityId, cases: &[IdentityCase], cfg: &GridConfig) -> IdSummary {
    let mine: Vec<&IdentityCase> = cases.iter().filter(|c| c.id == id).collect();
    let count = |f: fn(&Verdict) -> bool| mine.iter().filter(|c| f(&c.verdict)).count();
    let equal = count(|v| matches!(v, Verdict::Equal));
    let unequal = count(|v| matches!(v, Verdict::Unequal { .. }));
    let skipped = count(|v| matches!(v, Verdict::Skipped { .. }));
    let nondegenerate = mine
        .iter()
        .filter(|c| c.nondegenerate && matches!(c.verdict, Verdict::Equal))
        .count();
    let status = status_of(mine.iter().map(|c| &c.verdict));
    let acceptance = id.acceptance();
    let accepted = match (&status, acceptance) {
        (IdStatus::Skipped, _) => true,
        (IdStatus::Exact, Acceptance::Exact) => true,
        (IdStatus::Exact, Acceptance::ExactOrFitted) => nondegenerate >= cfg.min_nondegenerate,
        (IdStatus::FittedConstant { .. }, Acceptance::ExactOrFitted) => true,
        _ => false,
    };
    IdSummary { id, acceptance, status, cases: mine.len(), equal, unequal, skipped, nondegenerate, accepted }
}

/// Exact when every attempted case is equal, a fitted constant when every
/// attempted case has the same ratio, failed otherwise.
pub fn status_of<'a>(verdicts: impl Iterator<Item = &'a Verdict>) -> IdStatus {
    let attempted: Vec<&Verdict> = verdicts.filter(|v| !matches!(v, Verdict::Skipped { .. })).collect();
    if attempted.is_empty() {
        return IdStatus::Skipped;
    }
    if attempted.iter().all(|v| matches!(v, Verdict::Equal)) {
        return IdStatus::Exact;
    }
    let mut constant: Option<&Q> = None;
    for v in &attempted {
        match v {
            Verdict::Unequal { ratio: Some(r) } => match constant {
                None => constant = Some(r),
                Some(c) if c == r => {}
                Some(_) => return IdStatus::Failed { reason: "lhs/rhs ratio varies across cases".into() },
            },
            Verdict::Equal => {
                return IdStatus::Failed { reason: "some cases are equal and others are not".into() }
            }
            _ => return IdStatus::Failed { reason: "lhs/rhs is not a constant multiple".into() },
        }
    }
    IdStatus::FittedConstant { constant: constant.expect("at least one attempted case").clone() }
}

#[cfg(test)]
mod tests;
