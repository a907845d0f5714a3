//! Class recognition with ordering witnesses: trees, homogeneous sets and
//! h-extremal vertices, homogeneous orderings, simple elimination orderings
//! (strongly chordal graphs), the split-clique construction and chordal
//! bipartite recognition through it.
//!
//! Most predicates work on an induced subgraph given as an `alive` vertex
//! set of the ambient graph, so suffix subgraphs of an ordering never need
//! to be materialized.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Degree above which the h-extremality subset search refuses to run.
pub const H_EXTREMAL_DEGREE_CAP: usize = 20;

/// Node budget of the homogeneous-ordering backtracking search.
pub const DEFAULT_ORDERING_BUDGET: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderingKind {
    SimpleElimination,
    Homogeneous,
}

/// A vertex permutation together with the property it witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ordering {
    perm: Vec<usize>,
    kind: OrderingKind,
}

impl Ordering {
    /// Wraps `perm` after checking it is a permutation with the property of
    /// `kind` at every position.
    pub fn new(g: &Graph, perm: Vec<usize>, kind: OrderingKind) -> Result<Self> {
        if perm.len() != g.n() || perm.iter().collect::<HashSet<_>>().len() != g.n() {
            return Err(Error::InvalidOrdering("not a permutation of the vertices".into()));
        }
        g.check_set(&perm.iter().copied().collect())?;
        let ok = match kind {
            OrderingKind::SimpleElimination => validate_simple_elimination_ordering(g, &perm),
            OrderingKind::Homogeneous => validate_homogeneous_ordering(g, &perm)?,
        };
        if !ok {
            return Err(Error::InvalidOrdering(format!("{kind:?} property fails")));
        }
        Ok(Ordering { perm, kind })
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn kind(&self) -> OrderingKind {
        self.kind
    }

    /// `position()[v]` is the index of `v` in the ordering.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.perm.len()];
        for (i, &v) in self.perm.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Vertices from position `i` on.
    pub fn suffix(&self, i: usize) -> VertexSet {
        self.perm[i..].iter().copied().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HExtremalWitness {
    pub vertex: usize,
    /// A homogeneous set inside `N[vertex]` dominating `N²[vertex]`.
    pub set: VertexSet,
}

pub fn is_tree(g: &Graph) -> bool {
    g.m() + 1 == g.n() && g.is_connected()
}

fn closed_in(g: &Graph, alive: &VertexSet, v: usize) -> VertexSet {
    g.closed(v) & *alive
}

fn homogeneous_in(g: &Graph, alive: &VertexSet, a: &VertexSet) -> bool {
    let mut members = a.iter();
    let Some(first) = members.next() else {
        return false;
    };
    let outside = (*g.neighbors(first) & *alive) - *a;
    members.all(|v| (*g.neighbors(v) & *alive) - *a == outside)
}

/// Every member of `a` has the same neighborhood outside `a`.
pub fn is_homogeneous(g: &Graph, a: &VertexSet) -> Result<bool> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    g.check_set(a)?;
    Ok(homogeneous_in(g, &g.vertices(), a))
}

/// Smallest (then lexicographically first) nonempty subset of `N[v]`
/// that is homogeneous in the subgraph induced by `alive` and dominates
/// `N²[v]` there. The result is always a proper subset of `N²[v]`: when `v`
/// is universal the singleton `{v}` is found first.
pub(crate) fn h_extremal_in(g: &Graph, alive: &VertexSet, v: usize) -> Result<Option<VertexSet>> {
    let ball = closed_in(g, alive, v);
    let nb: Vec<usize> = ball.to_vec();
    if nb.len() - 1 > H_EXTREMAL_DEGREE_CAP {
        return Err(Error::DegreeCapExceeded {
            vertex: v,
            degree: nb.len() - 1,
            cap: H_EXTREMAL_DEGREE_CAP,
        });
    }
    let mut target = VertexSet::new();
    for u in &ball {
        target |= closed_in(g, alive, u);
    }
    let k = nb.len();
    for size in 1..=k {
        // Gosper's hack walks the size-`size` masks in increasing order
        let mut mask: u32 = (1 << size) - 1;
        while mask < 1 << k {
            let d: VertexSet = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| nb[i]).collect();
            let mut covered = VertexSet::new();
            for u in &d {
                covered |= closed_in(g, alive, u);
            }
            if target.is_subset(&covered) && homogeneous_in(g, alive, &d) {
                return Ok(Some(d));
            }
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    Ok(None)
}

/// A homogeneous dominating set of `N²[v]` inside `N[v]`, if one exists.
/// Witnesses must be proper subsets of `N²[v]` unless `v` is isolated;
/// under that reading the
/// search over `N[v]` is complete, so `None` means `v` is not h-extremal.
pub fn find_h_extremal_witness(g: &Graph, v: usize) -> Result<Option<HExtremalWitness>> {
    g.check(v)?;
    Ok(h_extremal_in(g, &g.vertices(), v)?.map(|set| HExtremalWitness { vertex: v, set }))
}

/// Every vertex is h-extremal in the subgraph induced by itself and the
/// vertices after it.
pub fn validate_homogeneous_ordering(g: &Graph, perm: &[usize]) -> Result<bool> {
    let mut alive = g.vertices();
    for &v in perm {
        if h_extremal_in(g, &alive, v)?.is_none() {
            return Ok(false);
        }
        alive.remove(v);
    }
    Ok(alive.is_empty())
}

struct OrderSearch<'a> {
    g: &'a Graph,
    failed: HashSet<VertexSet>,
    nodes: usize,
    budget: usize,
}

impl OrderSearch<'_> {
    fn search(&mut self, alive: VertexSet, perm: &mut Vec<usize>) -> Result<bool> {
        if alive.is_empty() {
            return Ok(true);
        }
        if self.failed.contains(&alive) {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        for v in &alive {
            if h_extremal_in(self.g, &alive, v)?.is_some() {
                perm.push(v);
                let mut rest = alive;
                rest.remove(v);
                if self.search(rest, perm)? {
                    return Ok(true);
                }
                perm.pop();
            }
        }
        self.failed.insert(alive);
        Ok(false)
    }
}

/// Backtracking search for a homogeneous ordering, taking the lowest-index
/// h-extremal vertex first and remembering vertex sets that cannot be
/// ordered. `Ok(None)` means no ordering exists; exhausting the node budget
/// is an error.
pub fn find_homogeneous_ordering(g: &Graph) -> Result<Option<Ordering>> {
    find_homogeneous_ordering_with_budget(g, DEFAULT_ORDERING_BUDGET)
}

pub fn find_homogeneous_ordering_with_budget(g: &Graph, budget: usize) -> Result<Option<Ordering>> {
    let mut s = OrderSearch {
        g,
        failed: HashSet::new(),
        nodes: 0,
        budget,
    };
    let mut perm = Vec::with_capacity(g.n());
    if !s.search(g.vertices(), &mut perm)? {
        return Ok(None);
    }
    Ordering::new(g, perm, OrderingKind::Homogeneous).map(Some)
}

/// `g` plus every edge inside `side`. `side` and its complement must be the
/// two parts of a bipartition of `g`.
pub fn split_clique(g: &Graph, side: &VertexSet) -> Result<Graph> {
    g.check_set(side)?;
    if let Some((u, v)) = g
        .edges()
        .find(|&(u, v)| side.contains(u) == side.contains(v))
    {
        return Err(Error::NotABipartition(u, v));
    }
    let members = side.to_vec();
    let extra = members
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| members[i + 1..].iter().map(move |&b| (a, b)));
    Graph::from_edges(g.n(), g.edges().chain(extra))
}

/// The closed neighborhoods (inside `alive`) of the members of `N[v]`
/// form a chain under inclusion.
pub(crate) fn is_simple_in(g: &Graph, alive: &VertexSet, v: usize) -> bool {
    let mut hoods: Vec<VertexSet> = closed_in(g, alive, v)
        .iter()
        .map(|u| closed_in(g, alive, u))
        .collect();
    hoods.sort_by_key(VertexSet::len);
    hoods.windows(2).all(|w| w[0].is_subset(&w[1]))
}

pub fn validate_simple_elimination_ordering(g: &Graph, perm: &[usize]) -> bool {
    let mut alive = g.vertices();
    for &v in perm {
        if !alive.contains(v) || !is_simple_in(g, &alive, v) {
            return false;
        }
        alive.remove(v);
    }
    alive.is_empty()
}

/// Greedy simple-vertex elimination, lowest index first. Strongly chordal
/// graphs are exactly those where every induced subgraph has a simple
/// vertex, so greedy elimination succeeds on them and only on them.
pub fn find_simple_elimination_ordering(g: &Graph) -> Option<Ordering> {
    let mut alive = g.vertices();
    let mut perm = Vec::with_capacity(g.n());
    while !alive.is_empty() {
        let v = alive.iter().find(|&v| is_simple_in(g, &alive, v))?;
        perm.push(v);
        alive.remove(v);
    }
    Some(Ordering {
        perm,
        kind: OrderingKind::SimpleElimination,
    })
}

/// Chordal bipartite test via the split lemma: bipartite `g` is chordal
/// bipartite iff `split_A(g)` is strongly chordal, `A` being the colour
/// class of each component's smallest vertex.
pub fn is_chordal_bipartite(g: &Graph) -> Result<bool> {
    let side = g.bipartition().ok_or(Error::NotBipartite)?;
    Ok(find_simple_elimination_ordering(&split_clique(g, &side)?).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e.iter().copied()).unwrap()
    }
    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }
    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }
    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }
    fn k33() -> Graph {
        g(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
    }

    #[test]
    fn trees() {
        assert!(is_tree(&path(5)));
        assert!(!is_tree(&cycle(4)));
        assert!(!is_tree(&g(4, &[(0, 1), (2, 3)])));
        assert!(is_tree(&Graph::empty(1).unwrap()));
    }

    #[test]
    fn homogeneous_sets() {
        assert!(is_homogeneous(&cycle(4), &set(&[0, 2])).unwrap());
        assert!(!is_homogeneous(&cycle(4), &set(&[0, 1])).unwrap());
        assert!(is_homogeneous(&path(5), &set(&[3])).unwrap());
        assert_eq!(is_homogeneous(&path(5), &VertexSet::new()), Err(Error::EmptySet));
    }

    #[test]
    fn h_extremal_witnesses() {
        let w = find_h_extremal_witness(&cycle(4), 0).unwrap().unwrap();
        assert_eq!(w.set, set(&[1, 3]));
        let w = find_h_extremal_witness(&Graph::empty(1).unwrap(), 0).unwrap().unwrap();
        assert_eq!(w.set, set(&[0]));
        assert_eq!(find_h_extremal_witness(&path(5), 2).unwrap(), None);
        assert!(find_h_extremal_witness(&path(5), 7).is_err());
    }

    #[test]
    fn h_extremal_degree_cap() {
        let star = Graph::from_edges(23, (1..23).map(|i| (0, i))).unwrap();
        assert!(matches!(
            find_h_extremal_witness(&star, 0),
            Err(Error::DegreeCapExceeded { degree: 22, .. })
        ));
        // leaves are fine: N[leaf] has two vertices
        assert!(find_h_extremal_witness(&star, 1).unwrap().is_some());
    }

    /// Witness search against enumeration of every subset of N²[v].
    #[test]
    fn h_extremal_agrees_with_search_over_second_neighborhood() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(1..=8);
            let edges: Vec<_> = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .filter(|_| rng.gen_bool(0.4))
                .collect();
            let gr = g(n, &edges);
            for v in 0..n {
                let ball2 = gr.closed2(v).to_vec();
                // proper subsets only, except for an isolated vertex: N²[v]
                // itself is trivially homogeneous whenever it is a component
                let full = (1u32 << ball2.len()) - 1;
                let top = if ball2.len() == 1 { full + 1 } else { full };
                let any = (1u32..top).any(|m| {
                    let d: VertexSet = (0..ball2.len()).filter(|i| m >> i & 1 == 1).map(|i| ball2[i]).collect();
                    gr.closed2(v).is_subset(&gr.closed_of_set(&d)) && is_homogeneous(&gr, &d).unwrap()
                });
                let w = find_h_extremal_witness(&gr, v).unwrap();
                assert_eq!(any, w.is_some(), "{gr:?} v={v}");
                if let Some(w) = w {
                    assert!(w.set.is_subset(&gr.closed(v)));
                    assert!(gr.closed2(v).is_subset(&gr.closed_of_set(&w.set)));
                }
            }
        }
    }

    #[test]
    fn homogeneous_orderings() {
        let o = find_homogeneous_ordering(&cycle(4)).unwrap().unwrap();
        assert_eq!(o.perm()[0], 0);
        assert!(validate_homogeneous_ordering(&cycle(4), o.perm()).unwrap());
        let o = find_homogeneous_ordering(&Graph::empty(1).unwrap()).unwrap().unwrap();
        assert_eq!(o.perm(), &[0]);
        let o = find_homogeneous_ordering(&path(9)).unwrap().unwrap();
        assert_eq!(o.kind(), OrderingKind::Homogeneous);
    }

    #[test]
    fn long_cycles_are_not_homogeneously_orderable() {
        // C_5 has no h-extremal vertex: N²[v] is everything and no
        // homogeneous subset of N[v] dominates it.
        assert_eq!(find_homogeneous_ordering(&cycle(5)).unwrap(), None);
        assert_eq!(find_homogeneous_ordering(&cycle(6)).unwrap(), None);
    }

    #[test]
    fn ordering_budget() {
        assert_eq!(
            find_homogeneous_ordering_with_budget(&path(9), 3),
            Err(Error::BudgetExceeded(3))
        );
    }

    #[test]
    fn split_cliques() {
        let d = split_clique(&cycle(4), &set(&[0, 2])).unwrap();
        assert_eq!(d.m(), 5);
        assert!(d.has_edge(0, 2));
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let s = split_clique(&star, &set(&[1, 2, 3])).unwrap();
        assert_eq!(s.m(), 6);
        let c6 = split_clique(&cycle(6), &set(&[0, 2, 4])).unwrap();
        assert_eq!(c6.m(), 9);
        assert!(c6.has_edge(0, 2) && c6.has_edge(2, 4) && c6.has_edge(0, 4));
        assert_eq!(split_clique(&cycle(4), &set(&[0, 1])), Err(Error::NotABipartition(0, 1)));
    }

    #[test]
    fn simple_elimination_orderings() {
        let o = find_simple_elimination_ordering(&path(4)).unwrap();
        assert!(validate_simple_elimination_ordering(&path(4), o.perm()));
        assert_eq!(o.perm()[0], 0);
        assert!(find_simple_elimination_ordering(&cycle(6)).is_none());
        assert!(find_simple_elimination_ordering(&cycle(4)).is_none());
        // trampoline (3-sun) is chordal but not strongly chordal
        let sun = g(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5)]);
        assert!(find_simple_elimination_ordering(&sun).is_none());
        assert!(!validate_simple_elimination_ordering(&path(4), &[1, 0, 2, 3]));
    }

    #[test]
    fn chordal_bipartite() {
        assert!(is_chordal_bipartite(&cycle(4)).unwrap());
        assert!(!is_chordal_bipartite(&cycle(6)).unwrap());
        assert!(is_chordal_bipartite(&k33()).unwrap());
        assert!(!is_chordal_bipartite(&cycle(8)).unwrap());
        assert_eq!(is_chordal_bipartite(&cycle(5)), Err(Error::NotBipartite));
    }

    #[test]
    fn ordering_constructor_validates() {
        assert!(Ordering::new(&path(4), vec![0, 1, 2, 3], OrderingKind::SimpleElimination).is_ok());
        assert!(Ordering::new(&path(4), vec![1, 0, 2, 3], OrderingKind::SimpleElimination).is_err());
        assert!(Ordering::new(&path(4), vec![0, 0, 2, 3], OrderingKind::SimpleElimination).is_err());
        assert!(Ordering::new(&cycle(5), vec![0, 1, 2, 3, 4], OrderingKind::Homogeneous).is_err());
    }
}
