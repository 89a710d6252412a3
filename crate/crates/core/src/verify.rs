//! Sweeps that check each identity over a range of instances and report the first failure.
//!
//! Instances are visited in lexicographic `(n, λ, s)` order. Work runs on the rayon pool but the
//! reported counterexample is always the first failing instance in that order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::budget::Budget;
use crate::diagrams::{check_schubert_compatible, flatten_step, reading_filling, DeltaInstance, SchubertCheck};
use crate::error::{Error, Result};
use crate::fillings::{admissible_words, dinv, frob_delta_with, inv_stat, prd_of_word, Word};
use crate::fqgeom::{count_steinberg, count_y_mu, count_z, u_map_report, FillingKind};
use crate::hlexp::{
    coinv_identity_sides, containing_partitions, free_pair_count, free_pairs, hl_rev_rhs_with, hl_rhs_with, n_skew,
    n_skew_closed_form,
};
use crate::qcore::{compositions, partitions, sort_desc, strong_compositions, Composition, Partition};
use crate::symfunc::hall_littlewood::hl_modified;
use crate::symfunc::pieri::pieri_h;
use crate::symfunc::{Basis, SymmetricFunction};

type Sym = SymmetricFunction<BigInt>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Identity {
    #[serde(rename = "hl")]
    Hl,
    #[serde(rename = "rev")]
    Rev,
    #[serde(rename = "coinv")]
    Coinv,
    #[serde(rename = "dinv-inv")]
    DinvInv,
    #[serde(rename = "recursion")]
    Recursion,
    #[serde(rename = "fq")]
    Fq,
    #[serde(rename = "steinberg")]
    Steinberg,
    #[serde(rename = "freepairs")]
    FreePairs,
    #[serde(rename = "zdecomp")]
    ZDecomp,
    #[serde(rename = "pieri-top")]
    PieriTop,
    #[serde(rename = "schubert-compat")]
    SchubertCompat,
}

impl Identity {
    pub const ALL: [Identity; 11] = [
        Identity::Hl,
        Identity::Rev,
        Identity::Coinv,
        Identity::DinvInv,
        Identity::Recursion,
        Identity::Fq,
        Identity::Steinberg,
        Identity::FreePairs,
        Identity::ZDecomp,
        Identity::PieriTop,
        Identity::SchubertCompat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Hl => "hl",
            Identity::Rev => "rev",
            Identity::Coinv => "coinv",
            Identity::DinvInv => "dinv-inv",
            Identity::Recursion => "recursion",
            Identity::Fq => "fq",
            Identity::Steinberg => "steinberg",
            Identity::FreePairs => "freepairs",
            Identity::ZDecomp => "zdecomp",
            Identity::PieriTop => "pieri-top",
            Identity::SchubertCompat => "schubert-compat",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::InvalidArguments(format!("unknown identity {s:?}")))
    }
}

/// Range and resources for a sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepConfig {
    pub max_n: usize,
    pub max_s: usize,
    /// Largest `K` for the point-count sweeps.
    pub max_k: usize,
    pub primes: Vec<u32>,
    #[serde(skip)]
    pub budget: Budget,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { max_n: 4, max_s: 3, max_k: 5, primes: vec![2, 3], budget: Budget::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub identity: Identity,
    pub checked: usize,
    pub passed: bool,
    pub counterexample: Option<Value>,
}

/// Every `(n, λ, s)` with `n <= max_n`, `1 <= s <= max_s`, in lexicographic order.
pub fn instances(max_n: usize, max_s: usize) -> Vec<DeltaInstance> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let mut lambdas: Vec<Partition> =
            (0..=n).flat_map(partitions).filter(|l| l.len() <= max_s).collect();
        lambdas.sort();
        for lam in lambdas {
            for s in lam.len().max(1)..=max_s {
                out.push(DeltaInstance::new(n, lam.clone(), s).expect("valid by construction"));
            }
        }
    }
    out
}

fn inst_json(i: &DeltaInstance) -> Value {
    json!({"n": i.n(), "lambda": i.lambda(), "s": i.s()})
}

/// Runs `check` on each item in parallel; each call returns how many cases it checked and the
/// first failure, if any.
fn sweep<T: Sync>(
    identity: Identity,
    items: &[T],
    check: impl Fn(&T) -> Result<(usize, Option<Value>)> + Sync + Send,
) -> Result<VerifyReport> {
    let results: Vec<(usize, Option<Value>)> = items.par_iter().map(check).collect::<Result<_>>()?;
    let checked = results.iter().map(|r| r.0).sum();
    let counterexample = results.into_iter().find_map(|r| r.1);
    Ok(VerifyReport { identity, checked, passed: counterexample.is_none(), counterexample })
}

fn sym_json(f: &Sym) -> Value {
    serde_json::to_value(f).expect("symmetric functions serialize")
}

pub fn run(identity: Identity, cfg: &SweepConfig) -> Result<VerifyReport> {
    let budget = cfg.budget;
    let insts = instances(cfg.max_n, cfg.max_s);
    match identity {
        Identity::Hl => sweep(identity, &insts, |i| {
            let left: Sym = frob_delta_with(i, budget)?;
            let right: Sym = hl_rhs_with(i, budget)?;
            Ok((1, (left != right).then(|| json!({"instance": inst_json(i), "frob": sym_json(&left), "hl": sym_json(&right)}))))
        }),
        Identity::Rev => sweep(identity, &insts, |i| {
            let left: Sym = hl_rev_rhs_with(i, budget)?;
            let right: Sym = hl_rhs_with(i, budget)?;
            if left != right {
                return Ok((1, Some(json!({"instance": inst_json(i), "rev": sym_json(&left), "hl": sym_json(&right)}))));
            }
            for nu in containing_partitions(i) {
                let v = n_skew(&nu, i.lambda(), i)?;
                let closed = n_skew_closed_form(&nu, i.lambda()) as i64;
                if v != closed {
                    return Ok((1, Some(json!({"instance": inst_json(i), "nu": nu, "n_skew": v, "closed_form": closed}))));
                }
            }
            Ok((1, None))
        }),
        Identity::Coinv => {
            let mut triples = Vec::new();
            for size in 0..=cfg.max_n {
                for nu in partitions(size) {
                    for s in nu.len().max(1)..=cfg.max_s {
                        for k in 0..=size {
                            for lam in partitions(k).into_iter().filter(|l| nu.contains(l)) {
                                triples.push((nu.clone(), lam, s));
                            }
                        }
                    }
                }
            }
            sweep(identity, &triples, |(nu, lam, s)| {
                let (l, r) = coinv_identity_sides::<BigInt>(nu, lam, *s)?;
                Ok((1, (l != r).then(|| json!({"nu": nu, "lambda": lam, "s": s, "left": l, "right": r}))))
            })
        }
        Identity::DinvInv | Identity::Recursion => sweep(identity, &insts, |i| {
            let t = reading_filling(i);
            let words = admissible_words(&t, &Composition::new(vec![1; i.n()]))?;
            for w in &words {
                let inv = inv_stat(&t, w)?;
                if identity == Identity::DinvInv {
                    let d = dinv(&prd_of_word(&t, w)?);
                    if inv != d {
                        return Ok((words.len(), Some(json!({"instance": inst_json(i), "word": w, "inv": inv, "dinv": d}))));
                    }
                    continue;
                }
                if w.is_empty() {
                    continue;
                }
                let row = (1..=i.s()).find(|&r| t.rightmost(r) == Some(w.at(1))).expect("first letter ends a row");
                let (map, t2) = flatten_step(&t, row)?;
                let rest: Option<Vec<usize>> = w.0[1..].iter().map(|&x| map.apply(x)).collect();
                let ok = match rest {
                    Some(rest) => inv_stat(&t2, &Word(rest))? + row - 1 == inv,
                    None => false,
                };
                if !ok {
                    return Ok((words.len(), Some(json!({"instance": inst_json(i), "word": w, "row": row}))));
                }
            }
            Ok((words.len(), None))
        }),
        Identity::Fq => {
            let small: Vec<_> = insts.iter().filter(|i| i.big_k() <= cfg.max_k).cloned().collect();
            sweep(identity, &small, |i| {
                let frob: Sym = frob_delta_with(i, budget)?;
                let mut checked = 0;
                for mu in strong_compositions(i.n()) {
                    let poly = frob.coeff(&sort_desc(mu.parts()));
                    for &p in &cfg.primes {
                        let count = count_y_mu(i, &mu, p, FillingKind::Reading, false, budget)?;
                        let expect = poly.eval(&BigInt::from(p));
                        checked += 1;
                        if BigInt::from(count) != expect {
                            return Ok((checked, Some(json!({
                                "instance": inst_json(i), "mu": mu, "p": p,
                                "count": count.to_string(), "frob_at_p": expect.to_string()
                            }))));
                        }
                    }
                }
                Ok((checked, None))
            })
        }
        Identity::Steinberg => {
            let items: Vec<(Partition, u32)> = (0..=cfg.max_n)
                .flat_map(partitions)
                .flat_map(|l| cfg.primes.iter().map(move |&p| (l.clone(), p)))
                .collect();
            sweep(identity, &items, |(lam, p)| {
                let expect = hl_modified::<BigInt>(lam).to_basis(Basis::Monomial)?.eval_q(&BigInt::from(*p));
                for mu in partitions(lam.size()) {
                    let count = count_steinberg(lam, &Composition::from(&mu), *p, budget)?;
                    let want = expect.get(&mu).cloned().unwrap_or_default();
                    if BigInt::from(count) != want {
                        return Ok((1, Some(json!({"lambda": lam, "mu": mu, "p": p, "count": count.to_string(), "hl_at_p": want.to_string()}))));
                    }
                }
                Ok((1, None))
            })
        }
        Identity::FreePairs => sweep(identity, &insts, |i| {
            let alphas: Vec<Composition> = compositions(i.n(), i.s()).into_iter().filter(|a| a.contains(i.lambda())).collect();
            for a in &alphas {
                let (got, want) = (free_pairs(a, i)?.len(), free_pair_count(a, i)?);
                if got != want {
                    return Ok((alphas.len(), Some(json!({"instance": inst_json(i), "alpha": a, "pairs": got, "closed_form": want}))));
                }
            }
            Ok((alphas.len(), None))
        }),
        Identity::ZDecomp => {
            let small: Vec<_> = insts.iter().filter(|i| i.big_k() <= cfg.max_k.min(4)).cloned().collect();
            let p = 2;
            sweep(identity, &small, |i| {
                let alphas: Vec<Composition> =
                    compositions(i.n(), i.s()).into_iter().filter(|a| a.contains(i.lambda())).collect();
                let mut checked = 0;
                for mu in strong_compositions(i.n()) {
                    let mut total = 0u128;
                    for a in &alphas {
                        let ell = free_pairs(a, i)?.len() as u32;
                        let hat = count_z(i, a, &mu, p, true, budget)?;
                        let plain = count_z(i, a, &mu, p, false, budget)?;
                        let report = u_map_report(i, a, &mu, p, budget)?;
                        checked += 1;
                        if hat != (p as u128).pow(ell) * plain || !report.is_bijection() {
                            return Ok((checked, Some(json!({
                                "instance": inst_json(i), "alpha": a, "mu": mu,
                                "zhat": hat.to_string(), "z": plain.to_string(), "free_pairs": ell, "u_map": report
                            }))));
                        }
                        total += hat;
                    }
                    let y = count_y_mu(i, &mu, p, FillingKind::Reverse, true, budget)?;
                    if total != y {
                        return Ok((checked, Some(json!({"instance": inst_json(i), "mu": mu, "sum_zhat": total.to_string(), "y": y.to_string()}))));
                    }
                }
                Ok((checked, None))
            })
        }
        Identity::PieriTop => {
            let tall: Vec<_> = insts.iter().filter(|i| i.s() > i.lambda().len()).cloned().collect();
            sweep(identity, &tall, |i| {
                let frob: Sym = frob_delta_with(i, budget)?;
                let top = frob.q_component(i.top_degree()).to_basis(Basis::Schur)?;
                let top_coeffs = top.eval_q(&BigInt::from(1));
                let pieri = pieri_h::<BigInt>(i.lambda(), i.n() - i.k()).eval_q(&BigInt::from(1));
                let ok = frob.q_degree() == Some(i.top_degree()) && top_coeffs == pieri;
                Ok((1, (!ok).then(|| json!({"instance": inst_json(i), "top": sym_json(&top)}))))
            })
        }
        Identity::SchubertCompat => sweep(identity, &insts, |i| {
            Ok((1, match check_schubert_compatible(&reading_filling(i)) {
                SchubertCheck::Compatible => None,
                SchubertCheck::Violated { clause, witnesses } => {
                    Some(json!({"instance": inst_json(i), "clause": clause, "witnesses": witnesses}))
                }
            }))
        }),
    }
}
