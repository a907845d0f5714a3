//! Randomized checks of the planar structural lemmas.

use anyhow::Result;
use clap::ValueEnum;
use dompack::generators::derive_seed;
use dompack::io::emit_graph6;
use dompack::planar::{
    charge_audit, embed_min_degree_four, find_low_degree_edge, low_degree_independent, random_connected_embedding,
    thin_keeping_min_degree_four, triangulate_preserving_independent, PlanarEmbedding,
};
use dompack::rational::{format, int};
use dompack::{Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma {
    /// Triangulating while an independent set stays independent.
    Triangulate,
    /// Minimum degree 4 planar graphs have an edge with both ends of degree ≤ 7.
    Discharge,
    /// Discharging ledgers total −12 and leave a negative vertex when δ ≥ 4.
    ChargeAudit,
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaRecord {
    pub lemma: Lemma,
    pub index: usize,
    pub seed: u64,
    pub n: usize,
    pub graph6: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaSummary {
    pub lemma: Lemma,
    pub instances: usize,
    pub failures: usize,
}

/// Random independent set avoiding the one configuration that cannot be
/// triangulated: a star whose leaves are all chosen.
fn random_independent(g: &Graph, rng: &mut ChaCha8Rng) -> VertexSet {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    let mut s = VertexSet::new();
    for v in order {
        if rng.gen_bool(0.6) && g.neighbors(v).is_disjoint(&s) {
            s.insert(v);
        }
    }
    if g.m() + 1 == g.n() && (0..g.n()).any(|v| g.degree(v) + 1 == g.n()) {
        let leaves: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 1).collect();
        if leaves.iter().all(|&l| s.contains(l)) {
            s.remove(leaves[0]);
        }
    }
    s
}

/// A triangulation with minimum degree 4, retrying derived seeds.
fn min_degree_four(seed: u64, n: usize) -> Result<(u64, PlanarEmbedding)> {
    for k in 0.. {
        let s = derive_seed(seed, k);
        if let Some(e) = embed_min_degree_four(s, n)? {
            return Ok((s, e));
        }
    }
    unreachable!()
}

fn audit(e: &PlanarEmbedding, need_negative: bool) -> Result<Option<String>> {
    let ledger = charge_audit(e, &low_degree_independent(e))?;
    if ledger.total != int(-12) {
        return Ok(Some(format!("charge total {}", format(&ledger.total))));
    }
    if need_negative && ledger.negative.is_empty() {
        return Ok(Some("no vertex ends with negative charge".into()));
    }
    Ok(None)
}

fn check(lemma: Lemma, index: usize, base: u64, n_lo: usize, n_hi: usize) -> Result<LemmaRecord> {
    let seed = derive_seed(base, index as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (g, problem) = match lemma {
        Lemma::Triangulate => {
            let n = rng.gen_range(n_lo.max(3)..=n_hi.max(3));
            let m = rng.gen_range(n - 1..=3 * n - 6);
            let e = random_connected_embedding(seed, n, m)?;
            let g = e.to_graph()?;
            let ind = random_independent(&g, &mut rng);
            let problem = match triangulate_preserving_independent(&e, &ind) {
                Err(err) => Some(err.to_string()),
                Ok(t) => {
                    let h = t.to_multigraph().underlying();
                    if !t.is_triangulated() || !t.euler_holds() {
                        Some("result is not a triangulation".into())
                    } else if !h.is_independent(&ind) {
                        Some("independent set gained an edge".into())
                    } else if !g.edges().all(|(u, v)| h.has_edge(u, v)) {
                        Some("an original edge was lost".into())
                    } else {
                        audit(&t, false)?
                    }
                }
            };
            (g, problem)
        }
        Lemma::Discharge => {
            let n = rng.gen_range(n_lo.max(6)..=n_hi.max(6));
            let (_, e) = min_degree_four(seed, n)?;
            let g = thin_keeping_min_degree_four(seed, &e.to_graph()?, rng.gen_range(0.0..1.0))?;
            let problem = match find_low_degree_edge(&g)? {
                Some((u, v)) if g.has_edge(u, v) && g.degree(u) <= 7 && g.degree(v) <= 7 => None,
                other => Some(format!("no low-degree edge: {other:?}")),
            };
            (g, problem)
        }
        Lemma::ChargeAudit => {
            let n = rng.gen_range(n_lo.max(6)..=n_hi.max(6));
            let (_, e) = min_degree_four(seed, n)?;
            let problem = audit(&e, true)?;
            (e.to_graph()?, problem)
        }
    };
    Ok(LemmaRecord {
        lemma,
        index,
        seed,
        n: g.n(),
        graph6: emit_graph6(&g),
        pass: problem.is_none(),
        detail: problem.unwrap_or_default(),
    })
}

pub fn run(lemma: Lemma, count: usize, seed: u64, n_lo: usize, n_hi: usize) -> Result<(Vec<LemmaRecord>, LemmaSummary)> {
    let records = (0..count)
        .into_par_iter()
        .map(|i| check(lemma, i, seed, n_lo, n_hi))
        .collect::<Result<Vec<_>>>()?;
    let summary = LemmaSummary {
        lemma,
        instances: records.len(),
        failures: records.iter().filter(|r| !r.pass).count(),
    };
    Ok((records, summary))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_lemmas_hold_on_small_runs() {
        for lemma in [Lemma::Triangulate, Lemma::Discharge, Lemma::ChargeAudit] {
            let (records, summary) = run(lemma, 25, 3, 3, 20).unwrap();
            assert_eq!(summary.failures, 0, "{:?}", records.iter().find(|r| !r.pass));
        }
    }

    #[test]
    fn deterministic() {
        let a = run(Lemma::Triangulate, 10, 9, 3, 15).unwrap().0;
        let b = run(Lemma::Triangulate, 10, 9, 3, 15).unwrap().0;
        let g6 = |r: &Vec<LemmaRecord>| r.iter().map(|x| x.graph6.clone()).collect::<Vec<_>>();
        assert_eq!(g6(&a), g6(&b));
    }
}
