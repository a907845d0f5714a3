//! Exact X-domination and X-packing numbers by branch and bound, the greedy
//! dominating set, and keyed maximal packings.

use crate::error::Result;
use crate::graph::Graph;
use crate::rational::Rational;
use crate::vertex_set::VertexSet;
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub optimal: bool,
}

struct DomSearch<'a> {
    g: &'a Graph,
    closed: Vec<VertexSet>,
    closed2: Vec<VertexSet>,
    /// Vertices sorted by closed-neighborhood size, for the packing bound.
    by_degree: Vec<usize>,
    all: VertexSet,
    best: usize,
    best_set: Vec<usize>,
    nodes: u64,
}

impl DomSearch<'_> {
    /// Lower bound on the dominators still needed for `uncovered`: the
    /// larger of a greedy set of uncovered vertices with pairwise disjoint
    /// closed neighborhoods (each needs its own dominator) and the counting
    /// bound.
    fn lower_bound(&self, uncovered: &VertexSet) -> usize {
        let mut blocked = VertexSet::new();
        let mut independent = 0;
        for &w in &self.by_degree {
            if uncovered.contains(w) && !blocked.contains(w) {
                independent += 1;
                blocked |= self.closed2[w];
            }
        }
        let best_cover = (0..self.g.n())
            .map(|c| self.closed[c].intersection_len(uncovered))
            .max()
            .unwrap_or(1)
            .max(1);
        independent.max(uncovered.len().div_ceil(best_cover))
    }

    fn search(&mut self, covered: VertexSet, chosen: &mut Vec<usize>) {
        self.nodes += 1;
        let uncovered = self.all - covered;
        let Some(u) = uncovered.first() else {
            if chosen.len() < self.best {
                self.best = chosen.len();
                self.best_set = chosen.clone();
            }
            return;
        };
        if chosen.len() + self.lower_bound(&uncovered) >= self.best {
            return;
        }
        let mut cands: Vec<(usize, VertexSet)> = self.closed[u]
            .iter()
            .map(|c| (c, self.closed[c] & uncovered))
            .collect();
        // a candidate whose new coverage is contained in another's is never
        // needed; among equal coverages keep the lowest index
        let dominated: Vec<bool> = cands
            .iter()
            .map(|(c, s)| {
                cands
                    .iter()
                    .any(|(c2, s2)| c2 != c && s.is_subset(s2) && (s != s2 || c2 < c))
            })
            .collect();
        let mut keep: Vec<(usize, VertexSet)> = cands
            .drain(..)
            .zip(dominated)
            .filter(|(_, d)| !d)
            .map(|(c, _)| c)
            .collect();
        keep.sort_by_key(|(c, s)| (std::cmp::Reverse(s.len()), *c));
        for (c, _) in keep {
            chosen.push(c);
            self.search(covered | self.closed[c], chosen);
            chosen.pop();
        }
    }
}

/// Greedy X-dominating set: repeatedly take the vertex covering the most
/// uncovered vertices, lowest index on ties.
pub(crate) fn greedy_x_domination(g: &Graph, x: &VertexSet) -> VertexSet {
    let all = g.vertices();
    let mut covered = *x & all;
    let mut d = VertexSet::new();
    while covered.len() < g.n() {
        let uncovered = all - covered;
        let c = (0..g.n())
            .max_by_key(|&c| (g.closed(c).intersection_len(&uncovered), std::cmp::Reverse(c)))
            .expect("graph is nonempty");
        d.insert(c);
        covered |= g.closed(c);
    }
    d
}

/// Minimum X-dominating set.
pub fn exact_domination(g: &Graph, x: &VertexSet) -> Result<SolveResult> {
    g.check_set(x)?;
    let greedy = greedy_x_domination(g, x);
    let closed: Vec<VertexSet> = (0..g.n()).map(|v| g.closed(v)).collect();
    let closed2: Vec<VertexSet> = (0..g.n()).map(|v| g.closed2(v)).collect();
    let mut by_degree: Vec<usize> = (0..g.n()).collect();
    by_degree.sort_by_key(|&v| (closed[v].len(), v));
    let mut s = DomSearch {
        g,
        closed,
        closed2,
        by_degree,
        all: g.vertices(),
        best: greedy.len(),
        best_set: greedy.to_vec(),
        nodes: 0,
    };
    s.search(*x & g.vertices(), &mut Vec::new());
    let witness: VertexSet = s.best_set.iter().copied().collect();
    debug_assert!(g.is_dominating(&witness, x));
    Ok(SolveResult {
        value: witness.len(),
        witness,
        nodes_explored: s.nodes,
        optimal: true,
    })
}

struct PackSearch {
    conflict: Vec<VertexSet>,
    best: usize,
    best_set: VertexSet,
    nodes: u64,
}

impl PackSearch {
    /// Number of cliques in a greedy clique partition of the conflict graph
    /// restricted to `cand`; no packing takes two vertices from one clique.
    fn upper_bound(&self, cand: &VertexSet) -> usize {
        let mut rem = *cand;
        let mut count = 0;
        while let Some(u) = rem.first() {
            rem.remove(u);
            let mut common = self.conflict[u] & rem;
            while let Some(w) = common.first() {
                rem.remove(w);
                common &= self.conflict[w];
            }
            count += 1;
        }
        count
    }

    fn search(&mut self, cand: VertexSet, chosen: VertexSet) {
        self.nodes += 1;
        let Some(v) = cand.first() else {
            if chosen.len() > self.best {
                self.best = chosen.len();
                self.best_set = chosen;
            }
            return;
        };
        if chosen.len() + self.upper_bound(&cand) <= self.best {
            return;
        }
        let mut with = chosen;
        with.insert(v);
        let rest = cand - self.conflict[v];
        let mut rest_in = rest;
        rest_in.remove(v);
        self.search(rest_in, with);
        // a vertex without conflicts among the candidates is always taken
        if !(self.conflict[v] & cand).is_empty() {
            let mut without = cand;
            without.remove(v);
            self.search(without, chosen);
        }
    }
}

fn greedy_packing_in_order(g: &Graph, order: impl IntoIterator<Item = usize>, base: VertexSet, x: &VertexSet) -> VertexSet {
    let mut p = base;
    let mut blocked = VertexSet::new();
    for v in &p {
        blocked |= g.closed2(v);
    }
    for v in order {
        if !p.contains(v) && !x.contains(v) && !blocked.contains(v) {
            p.insert(v);
            blocked |= g.closed2(v);
        }
    }
    p
}

/// Maximum X-packing.
pub fn exact_packing(g: &Graph, x: &VertexSet) -> Result<SolveResult> {
    g.check_set(x)?;
    let conflict: Vec<VertexSet> = g.square();
    let greedy = greedy_packing_in_order(g, 0..g.n(), VertexSet::new(), x);
    let mut s = PackSearch {
        conflict,
        best: greedy.len(),
        best_set: greedy,
        nodes: 0,
    };
    s.search(g.vertices() - *x, VertexSet::new());
    debug_assert!(g.is_packing(&s.best_set, x));
    Ok(SolveResult {
        value: s.best,
        witness: s.best_set,
        nodes_explored: s.nodes,
        optimal: true,
    })
}

/// Classic greedy dominating set (no optimality claim).
pub fn greedy_domination(g: &Graph) -> SolveResult {
    let d = greedy_x_domination(g, &VertexSet::new());
    SolveResult {
        value: d.len(),
        witness: d,
        nodes_explored: 0,
        optimal: false,
    }
}

/// `γ(G) / ρ(G)` as an exact rational.
pub fn max_ratio(g: &Graph) -> Result<Rational> {
    let none = VertexSet::new();
    let gamma = exact_domination(g, &none)?.value;
    let rho = exact_packing(g, &none)?.value;
    Ok(Rational::new(BigInt::from(gamma), BigInt::from(rho)))
}

/// Objective for [`maximal_packing_keyed`].
#[derive(Debug, Clone, Copy)]
pub enum PackingKey<'a> {
    /// Minimize the sum of positions in `order` (a permutation of `0..n`).
    IndexSumMin { order: &'a [usize] },
    /// Maximize the sum of BFS depths from `root`.
    DepthSumMax { root: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyedPacking {
    pub packing: VertexSet,
    /// False when the exchange cap of `n²` steps was hit.
    pub converged: bool,
    pub exchanges: usize,
}

/// A maximal packing that no single exchange improves: no swap of one member
/// `z` for one non-member `w` such that `P − z + w` is a packing and its
/// greedy re-completion has a strictly better key. The seed and every
/// re-completion add vertices greedily in key order (increasing position,
/// or decreasing depth with lowest index on ties).
pub fn maximal_packing_keyed(g: &Graph, key: PackingKey<'_>) -> Result<KeyedPacking> {
    let n = g.n();
    let (seq, weight): (Vec<usize>, Vec<i64>) = match key {
        PackingKey::IndexSumMin { order } => {
            let mut pos = vec![usize::MAX; n];
            for (i, &v) in order.iter().enumerate() {
                g.check(v)?;
                pos[v] = i;
            }
            if order.len() != n || pos.contains(&usize::MAX) {
                return Err(crate::Error::InvalidOrdering(
                    "index key needs a permutation of all vertices".into(),
                ));
            }
            // smaller position is better: negate so larger weight wins
            (order.to_vec(), pos.iter().map(|&p| -(p as i64)).collect())
        }
        PackingKey::DepthSumMax { root } => {
            g.check(root)?;
            let depth: Vec<i64> = g
                .bfs(root)
                .iter()
                .map(|d| d.map_or(0, |d| d as i64))
                .collect();
            let mut seq: Vec<usize> = (0..n).collect();
            seq.sort_by_key(|&v| (std::cmp::Reverse(depth[v]), v));
            (seq, depth)
        }
    };
    let score = |p: &VertexSet| p.iter().map(|v| weight[v]).sum::<i64>();
    let none = VertexSet::new();
    let mut p = greedy_packing_in_order(g, seq.iter().copied(), VertexSet::new(), &none);
    let cap = n * n;
    let mut exchanges = 0;
    loop {
        if exchanges >= cap {
            return Ok(KeyedPacking {
                packing: p,
                converged: false,
                exchanges,
            });
        }
        let current = score(&p);
        let mut improved = None;
        'outer: for z in &p {
            let mut rest = p;
            rest.remove(z);
            let mut blocked = VertexSet::new();
            for v in &rest {
                blocked |= g.closed2(v);
            }
            for w in 0..n {
                if p.contains(w) || blocked.contains(w) {
                    continue;
                }
                let mut q = rest;
                q.insert(w);
                let q = greedy_packing_in_order(g, seq.iter().copied(), q, &none);
                if score(&q) > current {
                    improved = Some(q);
                    break 'outer;
                }
            }
        }
        match improved {
            Some(q) => {
                p = q;
                exchanges += 1;
            }
            None => {
                return Ok(KeyedPacking {
                    packing: p,
                    converged: true,
                    exchanges,
                })
            }
        }
    }
}
