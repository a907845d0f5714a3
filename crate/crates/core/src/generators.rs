//! Seeded instance generators and small exhaustive corpora.
//!
//! Every generator is a pure function of its [`GenSpec`]. Families whose
//! membership is not guaranteed by construction are filtered through the
//! matching recognizer, so every emitted instance is certified.

use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::classes::{find_homogeneous_ordering, find_simple_elimination_ordering, is_chordal_bipartite};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planar::{max_planar_edges, named_triangulation, random_planar_flipped};

/// Rejection attempts before a filtered family gives up.
pub const REJECTION_BUDGET: usize = 20_000;

/// Largest order accepted by the chordal bipartite rejection sampler.
pub const CHORDAL_BIPARTITE_MAX_N: usize = 16;

/// Growth operations for distance-hereditary graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwinOp {
    Pendant,
    TrueTwin,
    FalseTwin,
}

fn all_ops() -> Vec<TwinOp> {
    vec![TwinOp::Pendant, TwinOp::TrueTwin, TwinOp::FalseTwin]
}

/// Replayable description of one generated instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum GenSpec {
    Tree { n: usize, seed: u64 },
    /// Intervals with integer endpoints in `[0, 4n)` and lengths up to
    /// `max_len`.
    Interval { n: usize, max_len: usize, seed: u64 },
    /// Random bipartite graphs with edge probability drawn per attempt from
    /// `[density_lo, density_hi]`, kept when chordal bipartite.
    ChordalBipartite { n: usize, density_lo: f64, density_hi: f64, seed: u64 },
    DistanceHereditary {
        n: usize,
        #[serde(default = "all_ops")]
        ops: Vec<TwinOp>,
        seed: u64,
    },
    Rook { k: usize, l: usize },
    /// `m` edges kept from a flip-randomized triangulation.
    Planar { n: usize, m: usize, flips: usize, seed: u64 },
    Gnp { n: usize, p: f64, seed: u64 },
    Named { name: String },
}

/// A generated graph with the number of samples drawn to get it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub graph: Graph,
    pub attempts: usize,
}

/// SplitMix64 finalizer.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of the `index`-th instance of a campaign with seed `base`:
/// `splitmix64(base ^ splitmix64(index))`.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    splitmix64(base ^ splitmix64(index))
}

pub fn generate(spec: &GenSpec) -> Result<Generated> {
    let once = |graph| Ok(Generated { graph, attempts: 1 });
    match spec {
        GenSpec::Tree { n, seed } => once(gen_tree(*n, *seed)?),
        GenSpec::Interval { n, max_len, seed } => once(gen_interval(*n, *max_len, *seed)?),
        GenSpec::ChordalBipartite {
            n,
            density_lo,
            density_hi,
            seed,
        } => gen_chordal_bipartite(*n, *density_lo, *density_hi, *seed),
        GenSpec::DistanceHereditary { n, ops, seed } => gen_distance_hereditary(*n, ops, *seed),
        GenSpec::Rook { k, l } => once(gen_rook(*k, *l)?),
        GenSpec::Planar { n, m, flips, seed } => once(random_planar_flipped(*seed, *n, *m, *flips)?),
        GenSpec::Gnp { n, p, seed } => once(gen_gnp(*n, *p, *seed)?),
        GenSpec::Named { name } => once(gen_named(name)?),
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > crate::MAX_VERTICES {
        return Err(Error::BadVertexCount(n));
    }
    Ok(())
}

fn check_prob(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::GenParams(format!("probability {p} outside [0, 1]")));
    }
    Ok(())
}

/// Uniform labeled tree decoded from a random Prüfer sequence.
pub fn gen_tree(n: usize, seed: u64) -> Result<Graph> {
    check_n(n)?;
    if n <= 2 {
        return Graph::from_edges(n, (n == 2).then_some((0, 1)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Graph::from_edges(n, prufer_decode(n, &code))
}

fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = leaves.pop_first().expect("a Prüfer code always leaves a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    edges
}

/// Intersection graph of closed integer intervals `[a, b]`.
pub fn interval_graph(intervals: &[(i64, i64)]) -> Result<Graph> {
    check_n(intervals.len())?;
    let n = intervals.len();
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| {
        let (a, b) = intervals[i];
        let (c, d) = intervals[j];
        a <= d && c <= b
    });
    Graph::from_edges(n, edges)
}

/// Random interval graph. Output is checked to have a simple elimination
/// ordering.
pub fn gen_interval(n: usize, max_len: usize, seed: u64) -> Result<Graph> {
    check_n(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = 4 * n as i64;
    let intervals: Vec<(i64, i64)> = (0..n)
        .map(|_| {
            let a = rng.gen_range(0..span);
            (a, a + rng.gen_range(0..=max_len as i64))
        })
        .collect();
    let g = interval_graph(&intervals)?;
    if find_simple_elimination_ordering(&g).is_none() {
        return Err(Error::Revalidation("interval graph without simple elimination ordering".into()));
    }
    Ok(g)
}

/// Rejection sampler for chordal bipartite graphs on at most
/// [`CHORDAL_BIPARTITE_MAX_N`] vertices.
pub fn gen_chordal_bipartite(n: usize, density_lo: f64, density_hi: f64, seed: u64) -> Result<Generated> {
    check_n(n)?;
    if n > CHORDAL_BIPARTITE_MAX_N {
        return Err(Error::GenParams(format!(
            "chordal bipartite sampling needs n ≤ {CHORDAL_BIPARTITE_MAX_N}, got {n}"
        )));
    }
    check_prob(density_lo)?;
    check_prob(density_hi)?;
    if density_lo > density_hi {
        return Err(Error::GenParams("density_lo exceeds density_hi".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=REJECTION_BUDGET {
        let p = rng.gen_range(density_lo..=density_hi);
        let left = rng.gen_range(1..=n.div_ceil(2));
        let edges: Vec<(usize, usize)> = (0..left)
            .flat_map(|a| (left..n).map(move |b| (a, b)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::from_edges(n, edges)?;
        if is_chordal_bipartite(&g)? {
            return Ok(Generated { graph: g, attempts: attempt });
        }
    }
    Err(Error::GenerationBudget(REJECTION_BUDGET))
}

/// One pendant/twin growth sequence from `K_1`.
pub fn grow_twin_graph(n: usize, ops: &[TwinOp], rng: &mut impl Rng) -> Result<Graph> {
    check_n(n)?;
    if ops.is_empty() {
        return Err(Error::GenParams("no growth operations".into()));
    }
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
    for v in 1..n {
        let u = rng.gen_range(0..v);
        let mut nb = match ops.choose(rng).expect("ops is nonempty") {
            TwinOp::Pendant => BTreeSet::from([u]),
            TwinOp::FalseTwin => adj[u].clone(),
            TwinOp::TrueTwin => {
                let mut s = adj[u].clone();
                s.insert(u);
                s
            }
        };
        for &w in &nb {
            adj[w].insert(v);
        }
        adj.push(std::mem::take(&mut nb));
    }
    Graph::from_edges(
        n,
        adj.iter()
            .enumerate()
            .flat_map(|(v, s)| s.iter().filter(move |&&w| w > v).map(move |&w| (v, w))),
    )
}

/// Distance-hereditary graph grown by pendant and twin additions, kept only
/// when a homogeneous ordering is found for it.
pub fn gen_distance_hereditary(n: usize, ops: &[TwinOp], seed: u64) -> Result<Generated> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=REJECTION_BUDGET {
        let g = grow_twin_graph(n, ops, &mut rng)?;
        if let Ok(Some(_)) = find_homogeneous_ordering(&g) {
            return Ok(Generated { graph: g, attempts: attempt });
        }
    }
    Err(Error::GenerationBudget(REJECTION_BUDGET))
}

/// `K_k □ K_l`; cell `(r, c)` is vertex `r·l + c`.
pub fn gen_rook(k: usize, l: usize) -> Result<Graph> {
    if k == 0 || l == 0 {
        return Err(Error::GenParams("rook graph needs k, l ≥ 1".into()));
    }
    check_n(k * l)?;
    let cells: Vec<(usize, usize)> = (0..k).flat_map(|r| (0..l).map(move |c| (r, c))).collect();
    let edges = (0..cells.len())
        .flat_map(|i| (i + 1..cells.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| cells[i].0 == cells[j].0 || cells[i].1 == cells[j].1);
    Graph::from_edges(k * l, edges)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_n(n)?;
    check_prob(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges)
}

pub fn gen_path(n: usize) -> Result<Graph> {
    check_n(n)?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn gen_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::GenParams(format!("cycle needs n ≥ 3, got {n}")));
    }
    check_n(n)?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn gen_complete(n: usize) -> Result<Graph> {
    check_n(n)?;
    Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
}

pub fn gen_complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    check_n(a + b)?;
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// `C<n>`, `P<n>`, `K<n>`, `K<a>,<b>`, `S<k>` (star `K_{1,k}`),
/// `R<k>x<l>` (rook graph), `octahedron`, `icosahedron`.
pub fn gen_named(name: &str) -> Result<Graph> {
    let unknown = || Error::UnknownName(name.to_string());
    let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    let lower = name.trim().to_ascii_lowercase();
    if lower == "octahedron" || lower == "icosahedron" {
        return named_triangulation(&lower)?.to_graph();
    }
    let (head, rest) = lower.split_at(lower.chars().next().map_or(0, char::len_utf8));
    match head {
        "c" => gen_cycle(num(rest)?),
        "p" => gen_path(num(rest)?),
        "s" => gen_complete_bipartite(1, num(rest)?),
        "k" => match rest.split_once(',') {
            Some((a, b)) => gen_complete_bipartite(num(a)?, num(b)?),
            None => gen_complete(num(rest)?),
        },
        "r" => {
            let (k, l) = rest.split_once('x').ok_or_else(unknown)?;
            gen_rook(num(k)?, num(l)?)
        }
        _ => Err(unknown()),
    }
}

/// Canonical AHU string of a tree rooted at `root`.
fn ahu(g: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&u| u != parent)
        .map(|u| ahu(g, u, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Isomorphism-invariant code of a tree: the smaller AHU string over its
/// one or two centers.
pub fn tree_canonical_form(t: &Graph) -> String {
    let n = t.n();
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for u in t.neighbors(v) {
                degree[u] -= 1;
                if degree[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|&c| ahu(t, c, usize::MAX)).min().expect("a tree has a center")
}

/// All trees on `n ≤ 16` vertices up to isomorphism, grown leaf by leaf and
/// deduplicated by [`tree_canonical_form`].
pub fn all_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > 16 {
        return Err(Error::GenParams(format!("tree enumeration needs 1 ≤ n ≤ 16, got {n}")));
    }
    let mut level = vec![Graph::empty(1)?];
    for size in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..size - 1 {
                let grown = Graph::from_edges(size, t.edges().chain([(v, size - 1)]))?;
                if seen.insert(tree_canonical_form(&grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k % 2 == 0 { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

/// Smallest upper-triangle adjacency bit string over relabelings that sort
/// vertices by degree.
fn small_canonical_form(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let n = g.n();
    let mut sorted: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    sorted.sort_unstable();
    let mut best = u64::MAX;
    for p in perms {
        // p[i] is the old vertex placed at new position i
        if (0..n).any(|i| g.degree(p[i]) != sorted[i]) {
            continue;
        }
        let mut code = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                code = code << 1 | u64::from(g.has_edge(p[i], p[j]));
            }
        }
        best = best.min(code);
    }
    best
}

/// All graphs on `n ≤ 8` vertices up to isomorphism.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > 8 {
        return Err(Error::GenParams(format!("graph enumeration needs 1 ≤ n ≤ 8, got {n}")));
    }
    let mut level = vec![Graph::empty(1)?];
    for size in 2..=n {
        let perms = permutations(size);
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..1 << (size - 1) {
                let new_edges = (0..size - 1).filter(|i| mask >> i & 1 == 1).map(|i| (i, size - 1));
                let grown = Graph::from_edges(size, g.edges().chain(new_edges))?;
                if seen.insert(small_canonical_form(&grown, &perms)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// Edge count for a planar instance at the given density in `[0, 1]` of the
/// maximum `3n − 6`.
pub fn planar_edge_count(n: usize, density: f64) -> usize {
    (max_planar_edges(n) as f64 * density.clamp(0.0, 1.0)).round() as usize
}
