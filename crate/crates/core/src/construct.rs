//! Constructive domination/packing pairs. Each procedure returns a
//! certificate `(D, P)` with `D` dominating, `P` a packing and
//! `|D| ≤ c·|P|`, so `γ ≤ c·ρ` holds for the input. Certificates are only
//! produced after revalidation against the graph predicates.

use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::classes::{
    find_simple_elimination_ordering, h_extremal_in, is_chordal_bipartite, is_tree, split_clique,
    Ordering, OrderingKind,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{format, int, Rational};
use crate::solvers::{maximal_packing_keyed, PackingKey};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Deserialize, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassTag {
    Tree,
    StronglyChordal,
    ChordalBipartite,
    HomogeneouslyOrderable,
}

impl ClassTag {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassTag::Tree => "tree",
            ClassTag::StronglyChordal => "strongly-chordal",
            ClassTag::ChordalBipartite => "chordal-bipartite",
            ClassTag::HomogeneouslyOrderable => "homogeneously-orderable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomPackCertificate {
    d: VertexSet,
    p: VertexSet,
    class: ClassTag,
    bound: Rational,
    valid: bool,
}

impl DomPackCertificate {
    /// Checks `d` dominates, `p` is a packing and `|d| ≤ bound·|p|`.
    pub fn certify(g: &Graph, d: VertexSet, p: VertexSet, class: ClassTag, bound: Rational) -> Result<Self> {
        let none = VertexSet::new();
        if !g.is_dominating(&d, &none) {
            return Err(Error::Revalidation(format!("{} D = {d:?} does not dominate", class.as_str())));
        }
        if !g.is_packing(&p, &none) {
            return Err(Error::Revalidation(format!("{} P = {p:?} is not a packing", class.as_str())));
        }
        if int(d.len() as i64) > &bound * int(p.len() as i64) {
            return Err(Error::Revalidation(format!(
                "{} |D| = {} exceeds {}·|P| = {}·{}",
                class.as_str(),
                d.len(),
                format(&bound),
                format(&bound),
                p.len()
            )));
        }
        Ok(DomPackCertificate {
            d,
            p,
            class,
            bound,
            valid: true,
        })
    }

    pub fn d(&self) -> &VertexSet {
        &self.d
    }

    pub fn p(&self) -> &VertexSet {
        &self.p
    }

    pub fn class(&self) -> ClassTag {
        self.class
    }

    pub fn bound(&self) -> &Rational {
        &self.bound
    }

    pub fn valid(&self) -> bool {
        self.valid
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "class": self.class.as_str(),
            "D": self.d.to_vec(),
            "P": self.p.to_vec(),
            "bound": format(&self.bound),
            "valid": self.valid,
        })
    }

    /// `|D| / |P|` as a float, for summaries.
    pub fn ratio(&self) -> f64 {
        (int(self.d.len() as i64) / int(self.p.len() as i64)).to_f64().unwrap_or(f64::NAN)
    }
}

impl Serialize for DomPackCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// Deepest-first greedy packing from `root`, dominated by the parent image.
/// `|D| = |P|`, which with weak duality gives `γ = ρ` on trees.
pub fn tree_dompack(t: &Graph, root: usize) -> Result<DomPackCertificate> {
    t.check(root)?;
    if !is_tree(t) {
        return Err(Error::NotATree);
    }
    let n = t.n();
    let mut parent = vec![root; n];
    let mut depth = vec![0usize; n];
    let mut queue = std::collections::VecDeque::from([root]);
    let mut seen = VertexSet::singleton(root);
    while let Some(v) = queue.pop_front() {
        for u in t.neighbors(v) {
            if seen.contains(u) {
                continue;
            }
            seen.insert(u);
            parent[u] = v;
            depth[u] = depth[v] + 1;
            queue.push_back(u);
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(depth[v]), v));
    let mut p = VertexSet::new();
    let mut blocked = VertexSet::new();
    for v in order {
        if !blocked.contains(v) {
            p.insert(v);
            blocked |= t.closed2(v);
        }
    }
    let d = p.iter().map(|v| parent[v]).collect();
    DomPackCertificate::certify(t, d, p, ClassTag::Tree, int(1))
}

fn require_kind(ord: &Ordering, g: &Graph, kind: OrderingKind) -> Result<()> {
    if ord.kind() != kind || ord.perm().len() != g.n() {
        return Err(Error::InvalidOrdering(format!("expected a {kind:?} ordering of this graph")));
    }
    Ok(())
}

/// Single pass over a simple elimination ordering. Each undominated vertex
/// `v` joins `P`, and the closed neighbor of `v` whose neighborhood in the
/// suffix graph contains those of all others (it exists because `v` is
/// simple there) joins `D`; ties go to the latest position.
pub fn strongly_chordal_dompack(g: &Graph, ord: &Ordering) -> Result<DomPackCertificate> {
    require_kind(ord, g, OrderingKind::SimpleElimination)?;
    let pos = ord.positions();
    let mut d = VertexSet::new();
    let mut p = VertexSet::new();
    let mut covered = VertexSet::new();
    let mut alive = g.vertices();
    for &v in ord.perm() {
        let here = alive;
        alive.remove(v);
        if covered.contains(v) {
            continue;
        }
        let u = (g.closed(v) & here)
            .iter()
            .max_by_key(|&u| ((g.closed(u) & here).len(), pos[u]))
            .expect("v ∈ N[v]");
        p.insert(v);
        d.insert(u);
        covered |= g.closed(u);
    }
    DomPackCertificate::certify(g, d, p, ClassTag::StronglyChordal, int(1))
}

/// Runs the strongly chordal construction on both split graphs and returns
/// `D_A ∪ D_B` with the larger of `P_A`, `P_B`.
pub fn chordal_bipartite_dompack(g: &Graph) -> Result<DomPackCertificate> {
    let recognized = is_chordal_bipartite(g).map_err(|e| Error::ClassPrecondition(e.to_string()))?;
    if !recognized {
        return Err(Error::ClassPrecondition("graph is not chordal bipartite".into()));
    }
    let a = g.bipartition().ok_or(Error::NotBipartite)?;
    let b = g.vertices() - a;
    let mut halves = Vec::with_capacity(2);
    for side in [a, b] {
        let split = split_clique(g, &side)?;
        let ord = find_simple_elimination_ordering(&split)
            .ok_or_else(|| Error::Revalidation("split graph has no simple elimination ordering".into()))?;
        halves.push(strongly_chordal_dompack(&split, &ord)?);
    }
    let d = *halves[0].d() | *halves[1].d();
    let p = if halves[1].p().len() > halves[0].p().len() {
        *halves[1].p()
    } else {
        *halves[0].p()
    };
    DomPackCertificate::certify(g, d, p, ClassTag::ChordalBipartite, int(2))
}

/// `f(v)`: lowest-index member of the homogeneous dominating set of `N²[v]`
/// found inside `N[v]` in the suffix graph at `v`'s position.
fn partner(g: &Graph, ord: &Ordering, pos: &[usize], v: usize) -> Result<usize> {
    let suffix = ord.suffix(pos[v]);
    h_extremal_in(g, &suffix, v)?
        .and_then(|s| s.first())
        .ok_or_else(|| Error::Revalidation(format!("vertex {v} is not h-extremal in its suffix")))
}

/// Partner choice `f'(p) ∈ N[p]` for every `p ∈ P` such that `P ∪ f'(P)`
/// dominates, trying the suffix partner first. Depth-first with a node cap.
fn reselect_partners(g: &Graph, p: &VertexSet, f: &[Option<usize>]) -> Option<VertexSet> {
    let members = p.to_vec();
    let base = g.closed_of_set(p);
    let target = g.vertices() - base;
    // reach[k]: vertices some partner of members[k..] could still cover
    let mut reach = vec![VertexSet::new(); members.len() + 1];
    for k in (0..members.len()).rev() {
        reach[k] = reach[k + 1] | g.closed2(members[k]);
    }
    let cands: Vec<Vec<usize>> = members
        .iter()
        .map(|&v| {
            let mut c: Vec<usize> = f[v].into_iter().collect();
            c.extend(g.closed(v).iter().filter(|&u| Some(u) != f[v]));
            c
        })
        .collect();
    let mut budget = 100_000usize;
    fn go(
        g: &Graph,
        k: usize,
        covered: VertexSet,
        target: &VertexSet,
        reach: &[VertexSet],
        cands: &[Vec<usize>],
        chosen: &mut Vec<usize>,
        budget: &mut usize,
    ) -> bool {
        let missing = *target - covered;
        if missing.is_empty() {
            return true;
        }
        if k == cands.len() || !missing.is_subset(&reach[k]) || *budget == 0 {
            return false;
        }
        *budget -= 1;
        for &u in &cands[k] {
            chosen.push(u);
            if go(g, k + 1, covered | g.closed(u), target, reach, cands, chosen, budget) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    if !go(g, 0, VertexSet::new(), &target, &reach, &cands, &mut chosen, &mut budget) {
        return None;
    }
    Some(chosen.into_iter().collect())
}

/// `P ∪ f(P)` with `f(p) ∈ N[p]`, so `|D| ≤ 2|P|`.
///
/// `P` starts as the index-sum keyed packing and `f` is the suffix partner.
/// While some `w` is undominated and a single packing vertex `z` lies within
/// distance two of it, `z` is exchanged for `w` and the packing re-completed
/// greedily in order; a packing seen before ends the exchanges. The exchange
/// is only guaranteed to dominate `w` when the distance-two path from `z`
/// survives in the suffix graph at `z`, so when exchanges stall the partners
/// of each visited packing are re-chosen from `N[p]` by search.
pub fn homogeneously_orderable_dompack(g: &Graph, ord: &Ordering) -> Result<DomPackCertificate> {
    require_kind(ord, g, OrderingKind::Homogeneous)?;
    let n = g.n();
    let pos = ord.positions();
    let mut f = vec![None; n];
    let mut p = maximal_packing_keyed(g, PackingKey::IndexSumMin { order: ord.perm() })?.packing;
    let mut visited = vec![p];
    let cap = n * n;
    loop {
        let mut d = p;
        for v in &p {
            let fv = match f[v] {
                Some(fv) => fv,
                None => *f[v].insert(partner(g, ord, &pos, v)?),
            };
            d.insert(fv);
        }
        let covered = g.closed_of_set(&d);
        let Some(w) = (0..n).find(|&w| !covered.contains(w)) else {
            return DomPackCertificate::certify(g, d, p, ClassTag::HomogeneouslyOrderable, int(2));
        };
        let near: Vec<usize> = p.iter().filter(|&z| g.closed2(w).contains(z)).collect();
        let [z] = near.as_slice() else { break };
        let mut q = p;
        q.remove(*z);
        q.insert(w);
        let mut blocked = VertexSet::new();
        for v in &q {
            blocked |= g.closed2(v);
        }
        for &v in ord.perm() {
            if !blocked.contains(v) {
                q.insert(v);
                blocked |= g.closed2(v);
            }
        }
        if visited.contains(&q) || visited.len() > cap {
            break;
        }
        visited.push(q);
        p = q;
    }
    for p in &visited {
        for v in p {
            if f[v].is_none() {
                f[v] = Some(partner(g, ord, &pos, v)?);
            }
        }
        if let Some(partners) = reselect_partners(g, p, &f) {
            return DomPackCertificate::certify(g, *p | partners, *p, ClassTag::HomogeneouslyOrderable, int(2));
        }
    }
    Err(Error::NotConverged(visited.len()))
}
