//! Simple undirected graphs on dense vertex indices, plus the neighborhood,
//! distance and domination/packing predicates everything else is built on.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use crate::MAX_VERTICES;

/// A simple undirected graph on vertices `0..n`.
///
/// Values are immutable: every edit returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::BadVertexCount(n));
        }
        Ok(Graph {
            adj: vec![VertexSet::new(); n],
        })
    }

    /// Rejects self-loops, repeated edges and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.check(u)?;
            g.check(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !g.adj[u].insert(v) {
                return Err(Error::ParallelEdge(u.min(v), u.max(v)));
            }
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Like [`Graph::from_edges`] but silently merges duplicates.
    pub(crate) fn from_edges_dedup<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.check(u)?;
            g.check(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn check(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.last() {
            Some(v) => self.check(v),
            None => Ok(()),
        }
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Open neighborhood. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighborhood without the range check.
    #[inline]
    pub fn closed(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check(v)?;
        Ok(self.closed(v))
    }

    pub fn second_closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check(v)?;
        Ok(self.closed2(v))
    }

    /// `N²[v]` without the range check.
    pub fn closed2(&self, v: usize) -> VertexSet {
        self.closed_of_set(&self.closed(v))
    }

    /// `N[S]`.
    pub fn closed_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = *s;
        for u in s {
            out |= self.adj[u];
        }
        out
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    pub fn bfs(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path length; `None` when `u` and `v` are disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.bfs(u)[v])
    }

    /// `N[D] ∪ X = V`.
    pub fn is_dominating(&self, d: &VertexSet, x: &VertexSet) -> bool {
        let mut covered = self.closed_of_set(d) | *x;
        covered &= self.vertices();
        covered.len() == self.n()
    }

    /// `P ∩ X = ∅` and the closed neighborhoods of members of `P` are
    /// pairwise disjoint.
    pub fn is_packing(&self, p: &VertexSet, x: &VertexSet) -> bool {
        if !p.is_disjoint(x) || !p.within(self.n()) {
            return false;
        }
        let mut seen = VertexSet::new();
        for v in p {
            let c = self.closed(v);
            if !c.is_disjoint(&seen) {
                return false;
            }
            seen |= c;
        }
        true
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen.contains(s) {
                continue;
            }
            let comp: VertexSet = self
                .bfs(s)
                .iter()
                .enumerate()
                .filter_map(|(v, d)| d.map(|_| v))
                .collect();
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(Option::is_some)
    }

    /// Removes `v` and relabels the rest densely. The returned map sends each
    /// old index to its new index (`None` for `v`).
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Vec<Option<usize>>)> {
        self.check(v)?;
        if self.n() == 1 {
            return Err(Error::BadVertexCount(0));
        }
        let map: Vec<Option<usize>> = (0..self.n())
            .map(|u| match u.cmp(&v) {
                std::cmp::Ordering::Less => Some(u),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(u - 1),
            })
            .collect();
        let edges = self
            .edges()
            .filter_map(|(a, b)| Some((map[a]?, map[b]?)))
            .collect::<Vec<_>>();
        Ok((Graph::from_edges(self.n() - 1, edges)?, map))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check(u)?;
        self.check(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        Ok(g)
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::ParallelEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.adj[u].insert(v);
        g.adj[v].insert(u);
        Ok(g)
    }

    /// Induced subgraph on `keep`, relabelled in increasing order. Returns the
    /// new graph and the list of original vertices (new index → old index).
    pub fn induced(&self, keep: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(keep)?;
        let old: Vec<usize> = keep.to_vec();
        let mut new_of = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(a, b)| keep.contains(a) && keep.contains(b))
            .map(|(a, b)| (new_of[a], new_of[b]))
            .collect::<Vec<_>>();
        Ok((Graph::from_edges(old.len(), edges)?, old))
    }

    /// Graph on the same vertices with edges between vertices at distance
    /// 1 or 2. Its independent sets are exactly the packings.
    pub fn square(&self) -> Vec<VertexSet> {
        (0..self.n())
            .map(|v| {
                let mut s = self.closed2(v);
                s.remove(v);
                s
            })
            .collect()
    }

    /// Bipartition by BFS 2-colouring; `None` if an odd cycle exists. The
    /// returned set is the colour class containing each component's smallest
    /// vertex.
    pub fn bipartition(&self) -> Option<VertexSet> {
        let mut colour = vec![None; self.n()];
        for s in 0..self.n() {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for w in &self.adj[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(
            colour
                .iter()
                .enumerate()
                .filter(|(_, c)| **c == Some(false))
                .map(|(v, _)| v)
                .collect(),
        )
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

/// An undirected multigraph without self-loops. Only produced by the
/// triangulation step of the planar module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    pub n: usize,
    /// Unordered pairs, stored with the smaller endpoint first; may repeat.
    pub edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::BadVertexCount(n));
        }
        let mut out = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            out.push((u.min(v), u.max(v)));
        }
        Ok(Multigraph { n, edges: out })
    }

    /// Degree counting parallel edges.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        self.edges.iter().filter(|&&e| e == key).count()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().all(|e| seen.insert(*e))
    }

    /// The simple graph with the same adjacency.
    pub fn underlying(&self) -> Graph {
        Graph::from_edges_dedup(self.n, self.edges.iter().copied())
            .expect("multigraph invariants guarantee a valid simple graph")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn construction_rejects_non_simple() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::ParallelEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert_eq!(Graph::empty(0), Err(Error::BadVertexCount(0)));
        assert_eq!(Graph::empty(513), Err(Error::BadVertexCount(513)));
        assert!(Graph::empty(512).is_ok());
    }

    #[test]
    fn closed_neighborhoods() {
        assert_eq!(cycle(4).closed_neighborhood(0).unwrap(), set(&[0, 1, 3]));
        assert_eq!(Graph::empty(1).unwrap().closed_neighborhood(0).unwrap(), set(&[0]));
        let star = Graph::from_edges(6, (1..6).map(|i| (0, i))).unwrap();
        assert_eq!(star.closed_neighborhood(0).unwrap(), VertexSet::full(6));
        assert!(cycle(4).closed_neighborhood(4).is_err());
    }

    #[test]
    fn second_neighborhoods() {
        assert_eq!(
            cycle(6).second_closed_neighborhood(0).unwrap(),
            set(&[4, 5, 0, 1, 2])
        );
        assert_eq!(cycle(4).second_closed_neighborhood(0).unwrap(), VertexSet::full(4));
        assert_eq!(path(5).second_closed_neighborhood(0).unwrap(), set(&[0, 1, 2]));
    }

    #[test]
    fn distances() {
        let p5 = path(5);
        assert_eq!(p5.distance(0, 4).unwrap(), Some(4));
        assert_eq!(p5.distance(3, 3).unwrap(), Some(0));
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.distance(0, 3).unwrap(), None);
        assert!(p5.distance(0, 9).is_err());
    }

    #[test]
    fn domination_predicate() {
        let c4 = cycle(4);
        let empty = VertexSet::new();
        assert!(c4.is_dominating(&set(&[0, 2]), &empty));
        assert!(!c4.is_dominating(&set(&[0]), &empty));
        assert!(c4.is_dominating(&empty, &VertexSet::full(4)));
    }

    #[test]
    fn packing_predicate() {
        let empty = VertexSet::new();
        assert!(path(5).is_packing(&set(&[0, 3]), &empty));
        assert!(!cycle(4).is_packing(&set(&[0, 2]), &empty));
        assert!(!cycle(4).is_packing(&set(&[1]), &set(&[1])));
        assert!(cycle(4).is_packing(&empty, &empty));
    }

    #[test]
    fn edits() {
        let p3 = path(3);
        let (g, map) = p3.delete_vertex(1).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.m(), 0);
        assert_eq!(map, vec![Some(0), None, Some(1)]);

        assert_eq!(cycle(4).delete_edge(0, 1).unwrap(), {
            // 1-2-3-0 relabelled is still the path with ends 0 and 1
            Graph::from_edges(4, [(1, 2), (2, 3), (3, 0)]).unwrap()
        });
        assert_eq!(path(4).add_edge(0, 3).unwrap(), cycle(4));
        assert_eq!(cycle(4).delete_edge(0, 2), Err(Error::MissingEdge(0, 2)));
        assert_eq!(cycle(4).add_edge(0, 1), Err(Error::ParallelEdge(0, 1)));
        assert_eq!(
            Graph::empty(1).unwrap().delete_vertex(0).unwrap_err(),
            Error::BadVertexCount(0)
        );
    }

    #[test]
    fn bipartition_detects_odd_cycles() {
        assert_eq!(cycle(4).bipartition(), Some(set(&[0, 2])));
        assert_eq!(cycle(5).bipartition(), None);
    }

    #[test]
    fn multigraph_basics() {
        let mg = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (1, 3), (3, 1)]).unwrap();
        assert_eq!(mg.multiplicity(1, 3), 2);
        assert_eq!(mg.degree(1), 4);
        assert!(!mg.is_simple());
        assert_eq!(mg.underlying().m(), 5);
        assert_eq!(Multigraph::new(2, vec![(1, 1)]), Err(Error::SelfLoop(1)));
    }
}
