//! Parameter grids: which cases each identity is checked on.

use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{IdentityId, Params};
use crate::arith::{int, rat, Rational, Q};
use crate::error::Result;
use crate::partition::{partitions_of, Partition};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct GridConfig {
    pub n: Vec<usize>,
    pub k: Vec<usize>,
    pub p: Vec<usize>,
    /// Largest `|λ|` for identities indexed by a free partition.
    pub lambda_weight: usize,
    /// Largest `|λ|` for the skew identities.
    pub skew_weight: usize,
    pub branching_weight: usize,
    pub kernel_degree: usize,
    pub alpha: Vec<Q>,
    /// Declared alphabets for identities that are checked on values.
    pub y_alphabets: Vec<Vec<Q>>,
    pub z: Vec<Q>,
    /// Alphabets used when a formal comparison would be too heavy.
    pub eval_alphabets: Vec<Vec<Q>>,
    /// Extra `(n, k)` pairs for the Vandermonde identities.
    pub extra_nk: Vec<(usize, usize)>,
    pub dyson_max_n: usize,
    pub dyson_extra: Vec<Vec<u32>>,
    /// Formal comparison up to this weight, evaluated beyond it.
    pub formal_weight_cap: usize,
    /// Cases needing Jack polynomials above this weight are skipped.
    pub jack_weight_cap: usize,
    /// Nondegenerate exact cases an id needs when a fitted constant would
    /// also be accepted.
    pub min_nondegenerate: usize,
    pub seed: u64,
}

fn qs(v: &[(i64, i64)]) -> Vec<Q> {
    v.iter().map(|&(p, q)| Q(rat(p, q))).collect()
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            n: vec![1, 2, 3],
            k: vec![1, 2],
            p: vec![0, 1, 2],
            lambda_weight: 6,
            skew_weight: 3,
            branching_weight: 4,
            kernel_degree: 5,
            alpha: qs(&[(1, 1), (2, 1), (1, 2)]),
            y_alphabets: vec![qs(&[(1, 1)]), qs(&[(1, 1), (2, 1)]), qs(&[(1, 1), (1, 2), (3, 1)])],
            z: qs(&[(2, 1), (5, 1)]),
            eval_alphabets: vec![
                qs(&[(1, 1), (2, 1), (3, 1), (5, 1), (7, 1)]),
                qs(&[(1, 2), (-1, 1), (2, 1), (-2, 3), (5, 1), (3, 1)]),
                qs(&[(2, 1), (-3, 1), (1, 3), (7, 1), (1, 1), (-1, 1), (4, 1)]),
            ],
            extra_nk: vec![(4, 1)],
            dyson_max_n: 3,
            dyson_extra: vec![vec![1, 1, 1, 1]],
            formal_weight_cap: 12,
            jack_weight_cap: 16,
            min_nondegenerate: 3,
            seed: 2024,
        }
    }
}

impl GridConfig {
    /// A fast grid for smoke runs.
    pub fn small() -> Self {
        GridConfig {
            n: vec![1, 2],
            k: vec![1],
            p: vec![0, 1],
            lambda_weight: 2,
            skew_weight: 2,
            branching_weight: 2,
            kernel_degree: 3,
            alpha: qs(&[(1, 1), (2, 1)]),
            extra_nk: vec![],
            dyson_max_n: 2,
            dyson_extra: vec![],
            min_nondegenerate: 1,
            ..GridConfig::default()
        }
    }

    /// `"default"`, `"small"`, or a path to a JSON file.
    pub fn load(spec: &str) -> Result<Self> {
        match spec {
            "default" => Ok(GridConfig::default()),
            "small" => Ok(GridConfig::small()),
            path => {
                let text = std::fs::read_to_string(Path::new(path))?;
                Ok(serde_json::from_str(&text)?)
            }
        }
    }

    pub(crate) fn alphabet(v: &[Q]) -> Vec<Rational> {
        v.iter().map(|q| q.0.clone()).collect()
    }

    fn nk(&self, with_extra: bool) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> =
            self.n.iter().flat_map(|&n| self.k.iter().map(move |&k| (n, k))).collect();
        if with_extra {
            for &e in &self.extra_nk {
                if !out.contains(&e) {
                    out.push(e);
                }
            }
        }
        out
    }
}

fn partitions_up_to(weight: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    (0..=weight)
        .flat_map(|w| partitions_of(w, Some(max_len)))
        .filter(|p| p.part(0) <= max_part)
        .collect()
}

fn base(n: usize, k: usize) -> Params {
    Params { n: Some(n), k: Some(k), ..Params::default() }
}

fn npl(cfg: &GridConfig, max_l: impl Fn(usize, usize) -> usize) -> Vec<Params> {
    let mut out = Vec::new();
    for (n, k) in cfg.nk(false) {
        for &p in &cfg.p {
            for l in 0..=max_l(n, p) {
                out.push(Params { p: Some(p), l: Some(l), ..base(n, k) });
            }
        }
    }
    out
}

fn random_strict(rng: &mut ChaCha8Rng, n: usize) -> Vec<i64> {
    let mut v: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v.iter().enumerate().map(|(i, &x)| x + (n - 1 - i) as i64).collect()
}

/// Grid cases of one id, in a fixed order.
pub fn cases_for(id: IdentityId, cfg: &GridConfig) -> Vec<Params> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (id as u64).wrapping_mul(0x9e37_79b9));
    let mut out = Vec::new();
    match id {
        IdentityId::HtSigns => {
            for (n, k) in cfg.nk(false) {
                let mut shifts = vec![vec![0; n]];
                for first in [1, -1] {
                    let mut v = vec![0; n];
                    v[0] = first;
                    shifts.push(v);
                }
                shifts.push((0..n).map(|_| rng.gen_range(-2..=2)).collect());
                for v in shifts {
                    for form in ["hankel", "toeplitz"] {
                        out.push(Params { v: Some(v.clone()), form: Some(form.into()), ..base(n, k) });
                    }
                }
            }
        }
        IdentityId::D2h | IdentityId::VandJack => {
            for (n, k) in cfg.nk(true) {
                out.push(base(n, k));
            }
        }
        IdentityId::TransSchur => {
            for (n, k) in cfg.nk(false) {
                for lambda in partitions_up_to(cfg.lambda_weight, n, usize::MAX) {
                    out.push(Params { lambda: Some(lambda), ..base(n, k) });
                }
            }
        }
        IdentityId::K1Example => {
            for &n in &cfg.n {
                for lambda in partitions_up_to(cfg.lambda_weight, n, usize::MAX) {
                    out.push(Params { lambda: Some(lambda), ..base(n, 1) });
                }
            }
        }
        IdentityId::GenMatsumoto | IdentityId::QKappa | IdentityId::InvAlpha | IdentityId::LToP => {
            out = npl(cfg, |n, _| n);
        }
        IdentityId::PatMinusX => {
            out = npl(cfg, |n, p| n.min(p));
        }
        IdentityId::Matsumoto => {
            for (n, k) in cfg.nk(false) {
                for &p in &cfg.p {
                    out.push(Params { p: Some(p), ..base(n, k) });
                }
            }
        }
        IdentityId::HankelJack | IdentityId::YPlusZ => {
            for (n, k) in cfg.nk(false) {
                if id == IdentityId::HankelJack {
                    out.push(base(n, k));
                    continue;
                }
                for form in ["hankel", "jack"] {
                    out.push(Params { z: Some(cfg.z.clone()), form: Some(form.into()), ..base(n, k) });
                }
            }
        }
        IdentityId::KernelDual => {
            let (x, y) = value_pair(cfg);
            for &k in &cfg.k {
                for d in 1..=cfg.kernel_degree {
                    out.push(Params {
                        k: Some(k),
                        d: Some(d),
                        x: Some(x.clone()),
                        y: Some(y.clone()),
                        ..Params::default()
                    });
                }
            }
        }
        IdentityId::Branching => {
            let (x, y) = value_pair(cfg);
            for w in 1..=cfg.branching_weight {
                for lambda in partitions_of(w, None) {
                    for alpha in &cfg.alpha {
                        out.push(Params {
                            lambda: Some(lambda.clone()),
                            alpha: Some(alpha.clone()),
                            x: Some(x.clone()),
                            y: Some(y.clone()),
                            ..Params::default()
                        });
                    }
                }
            }
        }
        IdentityId::SkewHankel | IdentityId::FinalSkew => {
            for (n, k) in cfg.nk(false) {
                for lambda in partitions_up_to(cfg.skew_weight, n, k * (n - 1)) {
                    out.push(Params { lambda: Some(lambda), ..base(n, k) });
                }
            }
        }
        IdentityId::SchurCoeff => {
            for (n, k) in cfg.nk(false) {
                for lambda in partitions_of(k * n * (n - 1), Some(n)) {
                    out.push(Params { lambda: Some(lambda), ..base(n, k) });
                }
            }
        }
        IdentityId::AltToDet => {
            for (n, k) in cfg.nk(false) {
                for _ in 0..2 {
                    let vectors = (0..2 * k).map(|_| random_strict(&mut rng, n)).collect();
                    out.push(Params { vectors: Some(vectors), ..base(n, k) });
                }
            }
        }
        IdentityId::OmegaPlus => {
            for &n in &cfg.n {
                for lambda in partitions_up_to(cfg.lambda_weight.min(4), n, usize::MAX) {
                    let v = lambda.padded(n).expect("length bounded by n").0;
                    out.push(Params { n: Some(n), v: Some(v), ..Params::default() });
                }
                if n >= 2 {
                    let mut v = vec![0; n];
                    v[0] = 1;
                    v[n - 1] = -1;
                    out.push(Params { n: Some(n), v: Some(v), ..Params::default() });
                }
            }
        }
        IdentityId::Dyson => {
            for n in 1..=cfg.dyson_max_n {
                let total = 3usize.pow(n as u32);
                for code in 0..total {
                    let a = (0..n).map(|i| (code / 3usize.pow(i as u32) % 3) as u32).collect();
                    out.push(Params { a: Some(a), ..Params::default() });
                }
            }
            for a in &cfg.dyson_extra {
                out.push(Params { a: Some(a.clone()), ..Params::default() });
            }
        }
    }
    out
}

/// Two disjoint declared alphabets for identities in two sets of letters.
fn value_pair(cfg: &GridConfig) -> (Vec<Q>, Vec<Q>) {
    let pick = |i: usize| cfg.y_alphabets.get(i).cloned().unwrap_or_else(|| vec![Q(int(1))]);
    let n = cfg.y_alphabets.len();
    (pick(n.saturating_sub(2)), pick(n.saturating_sub(1)))
}
