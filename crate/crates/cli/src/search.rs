//! Hill climbing for planar graphs with a large `γ/ρ`.

use anyhow::{bail, Result};
use dompack::generators::derive_seed;
use dompack::planar::embed_flipped_triangulation;
use dompack::rational::{format, Rational};
use dompack::solvers::{exact_domination, max_ratio};
use dompack::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::record::CampaignRecord;

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub target: Rational,
    pub n: usize,
    pub iterations: usize,
    pub restarts: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub target: String,
    pub found: bool,
    pub best_ratio: String,
    pub restart: usize,
    pub iterations: usize,
    pub best: CampaignRecord,
}

/// Largest `n` the search accepts.
pub const MAX_SEARCH_N: usize = 30;

/// `γ/ρ` first; ties go to fewer vertex pairs at distance above 2 (every
/// such pair allows a packing of size 2) and then to fewer dominating sets
/// of size `γ` (counted for `γ ≤ 3`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Score {
    ratio: Rational,
    far_pairs: std::cmp::Reverse<usize>,
    min_dominators: std::cmp::Reverse<usize>,
}

fn score(g: &Graph) -> Result<Score> {
    let n = g.n();
    let closed: Vec<u32> = (0..n).map(|v| g.closed(v).iter().fold(0, |m, u| m | 1 << u)).collect();
    let reach2: Vec<u32> = (0..n)
        .map(|v| (0..n).filter(|&u| closed[v] >> u & 1 == 1).fold(0, |m, u| m | closed[u]))
        .collect();
    let far_pairs = (0..n).map(|v| n - reach2[v].count_ones() as usize).sum::<usize>() / 2;
    let gamma = exact_domination(g, &VertexSet::new())?.value;
    let full = (1u32 << n) - 1;
    let min_dominators = match gamma {
        1 => closed.iter().filter(|&&c| c == full).count(),
        2 => (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| closed[a] | closed[b] == full).count(),
        3 => (0..n)
            .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| (a, b, c))))
            .filter(|&(a, b, c)| closed[a] | closed[b] | closed[c] == full)
            .count(),
        _ => 0,
    };
    Ok(Score {
        ratio: max_ratio(g)?,
        far_pairs: std::cmp::Reverse(far_pairs),
        min_dominators: std::cmp::Reverse(min_dominators),
    })
}

fn subgraph(n: usize, edges: &[(usize, usize)], keep: &[bool]) -> Result<Graph> {
    Ok(Graph::from_edges(n, edges.iter().zip(keep).filter(|(_, &k)| k).map(|(&e, _)| e))?)
}

/// Every restart starts from a fresh flipped triangulation on `n` vertices
/// and toggles single edges of it (deleting a present edge or reinserting a
/// deleted one), keeping moves that do not lower the score. Subgraphs of the
/// base are planar, so no planarity test is needed.
pub fn run(cfg: &SearchConfig) -> Result<SearchOutcome> {
    if !(3..=MAX_SEARCH_N).contains(&cfg.n) {
        bail!("search needs 3 ≤ n ≤ {MAX_SEARCH_N}");
    }
    let mut best: Option<(Score, Graph, usize)> = None;
    let mut total = 0;
    for restart in 0..cfg.restarts.max(1) {
        let seed = derive_seed(cfg.seed, restart as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let edges: Vec<_> = embed_flipped_triangulation(seed, cfg.n, 2 * cfg.n)?.to_graph()?.edges().collect();
        let mut keep = vec![true; edges.len()];
        let mut g = subgraph(cfg.n, &edges, &keep)?;
        let mut current = score(&g)?;
        for _ in 0..cfg.iterations {
            if current.ratio >= cfg.target {
                break;
            }
            total += 1;
            let k = rng.gen_range(0..edges.len());
            keep[k] = !keep[k];
            let h = subgraph(cfg.n, &edges, &keep)?;
            let s = score(&h)?;
            if s >= current {
                g = h;
                current = s;
            } else {
                keep[k] = !keep[k];
            }
        }
        let reached = current.ratio >= cfg.target;
        if best.as_ref().map_or(true, |(b, _, _)| current.ratio > b.ratio) {
            best = Some((current, g, restart));
        }
        if reached {
            break;
        }
    }
    let (score, g, restart) = best.expect("at least one restart");
    Ok(SearchOutcome {
        target: format(&cfg.target),
        found: score.ratio >= cfg.target,
        best_ratio: format(&score.ratio),
        restart,
        iterations: total,
        best: CampaignRecord::measure(&g, None, None, false)?,
    })
}
