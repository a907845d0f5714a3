//! Brute-force oracles and the shared instance corpus.
//!
//! The oracles work from the edge list alone, with their own bitmask
//! adjacency, so they share no code with the solvers under test.

#![allow(dead_code)]

use std::sync::OnceLock;

use dompack::classes::find_homogeneous_ordering;
use dompack::generators::{
    all_trees, derive_seed, gen_chordal_bipartite, gen_distance_hereditary, gen_interval, gen_tree,
    planar_edge_count, TwinOp,
};
use dompack::planar::random_planar_flipped;
use dompack::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Closed neighborhoods as bitmasks, for graphs with at most 64 vertices.
pub fn closed_masks(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64);
    let mut m: Vec<u64> = (0..g.n()).map(|v| 1u64 << v).collect();
    for (u, v) in g.edges() {
        m[u] |= 1 << v;
        m[v] |= 1 << u;
    }
    m
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Calls `f` on every `k`-subset of `0..n` as a bitmask until it returns true.
fn any_subset(n: usize, k: usize, f: &mut impl FnMut(u64) -> bool) -> bool {
    fn go(start: usize, n: usize, left: usize, acc: u64, f: &mut impl FnMut(u64) -> bool) -> bool {
        if left == 0 {
            return f(acc);
        }
        (start..=n - left).any(|v| go(v + 1, n, left - 1, acc | 1 << v, f))
    }
    k <= n && go(0, n, k, 0, f)
}

/// Smallest `D` with `N[D] ∪ X = V`, by subsets in increasing size.
pub fn brute_gamma_x(g: &Graph, x: u64) -> usize {
    let n = g.n();
    let nb = closed_masks(g);
    let target = full(n) & !x;
    (0..=n)
        .find(|&k| {
            any_subset(n, k, &mut |s| {
                let cover = (0..n).filter(|v| s >> v & 1 == 1).fold(0, |c, v| c | nb[v]);
                cover & target == target
            })
        })
        .expect("V dominates")
}

/// Largest set outside `X` with pairwise disjoint closed neighborhoods.
pub fn brute_rho_x(g: &Graph, x: u64) -> usize {
    let n = g.n();
    let nb = closed_masks(g);
    let ok = |s: u64| {
        if s & x != 0 {
            return false;
        }
        let mut seen = 0u64;
        for v in (0..n).filter(|v| s >> v & 1 == 1) {
            if seen & nb[v] != 0 {
                return false;
            }
            seen |= nb[v];
        }
        true
    };
    (0..=n).rev().find(|&k| any_subset(n, k, &mut |s| ok(s))).unwrap_or(0)
}

pub fn brute_gamma(g: &Graph) -> usize {
    brute_gamma_x(g, 0)
}

pub fn brute_rho(g: &Graph) -> usize {
    brute_rho_x(g, 0)
}

pub fn oracle_dominates(g: &Graph, d: &[usize]) -> bool {
    let nb = closed_masks(g);
    d.iter().fold(0, |c, &v| c | nb[v]) == full(g.n())
}

pub fn oracle_packing(g: &Graph, p: &[usize]) -> bool {
    let nb = closed_masks(g);
    p.iter().enumerate().all(|(i, &a)| p[i + 1..].iter().all(|&b| nb[a] & nb[b] == 0))
}

pub const BASE_SEED: u64 = 0x00d0_0b1e_5eed;

pub struct Corpus {
    /// Every tree on 1..=12 vertices up to isomorphism.
    pub trees_exhaustive: Vec<Graph>,
    pub trees_random: Vec<Graph>,
    pub chordal_bipartite: Vec<Graph>,
    pub interval: Vec<Graph>,
    pub homogeneous: Vec<Graph>,
    pub planar: Vec<Graph>,
    /// Rejection attempts spent on `chordal_bipartite`.
    pub chordal_bipartite_attempts: usize,
}

impl Corpus {
    fn build() -> Corpus {
        let seed = |family: u64, i: usize| derive_seed(BASE_SEED ^ family << 48, i as u64);
        let trees_exhaustive = (1..=12).flat_map(|n| all_trees(n).unwrap()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(BASE_SEED);
        let trees_random = (0..1000)
            .map(|i| gen_tree(rng.gen_range(1..=50), seed(1, i)).unwrap())
            .collect();
        let mut attempts = 0;
        let chordal_bipartite = (0..300)
            .map(|i| {
                let r = gen_chordal_bipartite(rng.gen_range(2..=16), 0.1, 0.9, seed(2, i)).unwrap();
                attempts += r.attempts;
                r.graph
            })
            .collect();
        let interval = (0..300)
            .map(|i| {
                let n = rng.gen_range(2..=40);
                gen_interval(n, rng.gen_range(1..=2 * n), seed(3, i)).unwrap()
            })
            .collect();
        let ops = [TwinOp::Pendant, TwinOp::TrueTwin, TwinOp::FalseTwin];
        let homogeneous = (0..200)
            .map(|i| gen_distance_hereditary(rng.gen_range(1..=14), &ops, seed(4, i)).unwrap().graph)
            .collect();
        let planar = (0..500)
            .map(|i| {
                let n = rng.gen_range(3..=30);
                let m = planar_edge_count(n, rng.gen_range(0.3..=1.0));
                random_planar_flipped(seed(5, i), n, m, 2 * n).unwrap()
            })
            .collect();
        Corpus {
            trees_exhaustive,
            trees_random,
            chordal_bipartite,
            interval,
            homogeneous,
            planar,
            chordal_bipartite_attempts: attempts,
        }
    }

    /// Every instance of criteria 1 to 5.
    pub fn all(&self) -> impl Iterator<Item = &Graph> {
        self.trees_exhaustive
            .iter()
            .chain(&self.trees_random)
            .chain(&self.chordal_bipartite)
            .chain(&self.interval)
            .chain(&self.homogeneous)
            .chain(&self.planar)
    }
}

pub fn corpus() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(Corpus::build)
}

/// A homogeneous ordering, which every corpus instance has by construction.
pub fn homogeneous_ordering(g: &Graph) -> dompack::classes::Ordering {
    find_homogeneous_ordering(g).unwrap().expect("generator certified an ordering")
}

/// Prints the criterion line and returns whether it passed.
pub fn report(criterion: u32, pass: bool, detail: &str) -> bool {
    println!("criterion {criterion:>2}: {} {detail}", if pass { "PASS" } else { "FAIL" });
    pass
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracles_on_known_graphs() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!((brute_gamma(&c4), brute_rho(&c4)), (2, 1));
        let p7 = Graph::from_edges(7, (1..7).map(|i| (i - 1, i))).unwrap();
        assert_eq!((brute_gamma(&p7), brute_rho(&p7)), (3, 3));
        // with X = {0, 2} on P_3 only vertex 1 is left to cover
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(brute_gamma_x(&p3, 0b101), 1);
        assert_eq!(brute_rho_x(&p3, 0b111), 0);
    }
}
