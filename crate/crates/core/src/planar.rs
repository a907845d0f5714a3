//! Combinatorial planar embeddings (rotation systems), triangulation that
//! keeps an independent set independent, the low-degree edge lemma, the
//! discharging charge audit, and planar generators.
//!
//! Every edge `e` is stored as two darts `2e` and `2e + 1`; dart `d` runs
//! from `tail(d)` to `head(d)` and `d ^ 1` is its reverse. Each vertex keeps
//! its outgoing darts in cyclic order. The face to the left of `d` continues
//! with the dart that follows `d ^ 1` in the rotation at `head(d)`.

use std::collections::HashMap;

use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Multigraph};
use crate::rational::{int, ratio, Rational};
use crate::vertex_set::VertexSet;
use crate::MAX_VERTICES;

#[derive(Clone, PartialEq, Eq)]
pub struct PlanarEmbedding {
    n: usize,
    head: Vec<usize>,
    rotation: Vec<Vec<usize>>,
    pos: Vec<usize>,
}

impl std::fmt::Debug for PlanarEmbedding {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PlanarEmbedding")
            .field("n", &self.n)
            .field("rotation", &self.rotation_neighbors())
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct EmbeddingJson {
    n: usize,
    rotation: Vec<Vec<usize>>,
}

impl PlanarEmbedding {
    fn from_parts(n: usize, head: Vec<usize>, rotation: Vec<Vec<usize>>) -> Self {
        let mut pos = vec![0; head.len()];
        for rot in &rotation {
            for (i, &d) in rot.iter().enumerate() {
                pos[d] = i;
            }
        }
        PlanarEmbedding {
            n,
            head,
            rotation,
            pos,
        }
    }

    /// Builds an embedding from per-vertex cyclic neighbor lists. Parallel
    /// edges are allowed; their dart pairing is chosen so that Euler's
    /// formula holds, and the input is rejected when no pairing does.
    pub fn from_rotation(n: usize, rot: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES || rot.len() != n {
            return Err(Error::Embedding(format!(
                "rotation list has {} entries for n={n}",
                rot.len()
            )));
        }
        let mut occ: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (u, list) in rot.iter().enumerate() {
            for (i, &v) in list.iter().enumerate() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if v == u {
                    return Err(Error::SelfLoop(u));
                }
                occ.entry((u, v)).or_default().push(i);
            }
        }
        let mut bundles: Vec<(usize, usize)> = Vec::new();
        for (&(u, v), list) in &occ {
            let back = occ.get(&(v, u)).map_or(0, Vec::len);
            if back != list.len() {
                return Err(Error::Embedding(format!(
                    "{u} lists {v} {} times but {v} lists {u} {back} times",
                    list.len()
                )));
            }
            if u < v {
                bundles.push((u, v));
            }
        }
        bundles.sort_unstable();
        let multi: Vec<usize> = (0..bundles.len())
            .filter(|&b| occ[&bundles[b]].len() > 1)
            .collect();
        if multi.len() > 12 {
            return Err(Error::Embedding(
                "too many parallel-edge bundles to resolve dart pairing".into(),
            ));
        }
        for mask in 0u32..(1 << multi.len()) {
            let mut head = Vec::new();
            let mut darts: Vec<Vec<usize>> = rot.iter().map(|l| vec![usize::MAX; l.len()]).collect();
            for (b, &(u, v)) in bundles.iter().enumerate() {
                let fwd = &occ[&(u, v)];
                let bwd = &occ[&(v, u)];
                let k = fwd.len();
                let straight = multi
                    .iter()
                    .position(|&x| x == b)
                    .is_some_and(|bit| mask >> bit & 1 == 1);
                for i in 0..k {
                    let j = if straight { i } else { k - 1 - i };
                    let d = head.len();
                    head.push(v);
                    head.push(u);
                    darts[u][fwd[i]] = d;
                    darts[v][bwd[j]] = d + 1;
                }
            }
            let e = Self::from_parts(n, head, darts);
            if e.euler_holds() {
                return Ok(e);
            }
        }
        Err(Error::Embedding("rotation system is not planar".into()))
    }

    /// Builds an embedding from consistently oriented triangular faces:
    /// every directed edge must occur in exactly one face.
    pub fn from_triangles(n: usize, faces: &[[usize; 3]]) -> Result<Self> {
        let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
        for f in faces {
            for k in 0..3 {
                let (v, x, y) = (f[k], f[(k + 1) % 3], f[(k + 2) % 3]);
                if v >= n || x >= n || y >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: v.max(x).max(y),
                        n,
                    });
                }
                if succ[v].insert(y, x).is_some() {
                    return Err(Error::Embedding(format!(
                        "directed edge {v}->{y} used by two faces"
                    )));
                }
            }
        }
        let mut rot = Vec::with_capacity(n);
        for (v, s) in succ.iter().enumerate() {
            let Some(&start) = s.keys().min() else {
                rot.push(Vec::new());
                continue;
            };
            let mut cyc = vec![start];
            let mut cur = s[&start];
            while cur != start {
                if cyc.len() > s.len() {
                    return Err(Error::Embedding(format!("faces around {v} do not close")));
                }
                cyc.push(cur);
                cur = *s.get(&cur).ok_or_else(|| {
                    Error::Embedding(format!("faces around {v} do not close"))
                })?;
            }
            if cyc.len() != s.len() {
                return Err(Error::Embedding(format!(
                    "faces around {v} form more than one cycle"
                )));
            }
            rot.push(cyc);
        }
        let e = Self::from_rotation(n, rot)?;
        if e.faces().len() != faces.len() {
            return Err(Error::Embedding("face list does not match the rotation".into()));
        }
        Ok(e)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: EmbeddingJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        Self::from_rotation(j.n, j.rotation)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&EmbeddingJson {
            n: self.n,
            rotation: self.rotation_neighbors(),
        })
        .expect("embedding serializes")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.head.len() / 2
    }

    #[inline]
    pub fn head(&self, d: usize) -> usize {
        self.head[d]
    }

    #[inline]
    pub fn tail(&self, d: usize) -> usize {
        self.head[d ^ 1]
    }

    /// Degree counting parallel edges.
    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Darts leaving `v`, in rotation order.
    pub fn darts(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotation_neighbors(&self) -> Vec<Vec<usize>> {
        self.rotation
            .iter()
            .map(|r| r.iter().map(|&d| self.head[d]).collect())
            .collect()
    }

    /// Successor of dart `d` along its face.
    #[inline]
    pub fn face_next(&self, d: usize) -> usize {
        let t = d ^ 1;
        let rot = &self.rotation[self.head[d]];
        rot[(self.pos[t] + 1) % rot.len()]
    }

    /// Faces as dart cycles, each starting at its smallest dart, ordered by
    /// that dart.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.head.len()];
        let mut out = Vec::new();
        for s in 0..self.head.len() {
            if seen[s] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                face.push(d);
                d = self.face_next(d);
            }
            out.push(face);
        }
        out
    }

    /// The vertex sequence of a face walk (tail of each dart).
    pub fn face_vertices(&self, face: &[usize]) -> Vec<usize> {
        face.iter().map(|&d| self.tail(d)).collect()
    }

    pub fn is_triangulated(&self) -> bool {
        self.m() > 0 && self.faces().iter().all(|f| f.len() == 3)
    }

    /// `n_i − m_i + f_i = 2` for every connected component (an isolated
    /// vertex counts one face).
    pub fn euler_holds(&self) -> bool {
        let mg = self.to_multigraph();
        let g = mg.underlying();
        let faces = self.faces();
        for comp in g.components() {
            let n = comp.len() as i64;
            let m = mg.edges.iter().filter(|e| comp.contains(e.0)).count() as i64;
            let f = if m == 0 {
                1
            } else {
                faces.iter().filter(|f| comp.contains(self.tail(f[0]))).count() as i64
            };
            if n - m + f != 2 {
                return false;
            }
        }
        true
    }

    pub fn to_multigraph(&self) -> Multigraph {
        let edges = (0..self.m())
            .map(|e| (self.head[2 * e + 1], self.head[2 * e]))
            .collect();
        Multigraph::new(self.n, edges).expect("embedding has no self-loops")
    }

    /// The underlying simple graph; fails if there are parallel edges.
    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, self.to_multigraph().edges)
    }

    /// Builds the embedding obtained by dropping one `u`–`v` edge.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self> {
        let d = *self.rotation[u]
            .iter()
            .find(|&&d| self.head[d] == v)
            .ok_or(Error::MissingEdge(u, v))?;
        let gone = d / 2;
        let renum = |x: usize| if x / 2 > gone { x - 2 } else { x };
        let head = self
            .head
            .iter()
            .enumerate()
            .filter(|(x, _)| x / 2 != gone)
            .map(|(_, &h)| h)
            .collect();
        let rotation = self
            .rotation
            .iter()
            .map(|r| r.iter().filter(|&&x| x / 2 != gone).map(|&x| renum(x)).collect())
            .collect();
        Ok(Self::from_parts(self.n, head, rotation))
    }

    /// Adds an edge inside a face: a new dart from `tail(in_a)`'s successor
    /// position is placed right after `in_a ^ 1` and its reverse right after
    /// `in_b ^ 1`, where `in_a`, `in_b` are the face darts entering the two
    /// chord endpoints. Splits that face in two.
    fn insert_chord(&mut self, in_a: usize, in_b: usize) {
        let a = self.head[in_a];
        let b = self.head[in_b];
        let d = self.head.len();
        self.head.push(b);
        self.head.push(a);
        let ia = self.pos[in_a ^ 1] + 1;
        self.rotation[a].insert(ia, d);
        let ib = self.pos[in_b ^ 1] + 1;
        self.rotation[b].insert(ib, d + 1);
        self.pos.resize(d + 2, 0);
        for v in [a, b] {
            for (i, &x) in self.rotation[v].iter().enumerate() {
                self.pos[x] = i;
            }
        }
    }
}

/// Adds edges inside faces until every face is a triangle, never joining
/// two members of `independent`. The result may have parallel edges.
///
/// Chords join two vertices two steps apart along a face walk when possible
/// (smallest endpoint pair first) and any non-adjacent pair of the walk
/// otherwise. Stars whose leaves all lie in `independent`, and graphs with
/// fewer than three vertices, admit no such triangulation and are reported
/// as [`Error::NoAdmissibleChord`].
pub fn triangulate_preserving_independent(
    e: &PlanarEmbedding,
    independent: &VertexSet,
) -> Result<PlanarEmbedding> {
    let g = e.to_graph()?;
    g.check_set(independent)?;
    for u in independent {
        if let Some(v) = (g.neighbors(u) & independent).first() {
            return Err(Error::NotIndependent(u.min(v), u.max(v)));
        }
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() < 3 {
        return Err(Error::NoAdmissibleChord {
            face: (0..g.n()).collect(),
        });
    }
    let mut out = e.clone();
    loop {
        let faces = out.faces();
        let Some(face) = faces.into_iter().find(|f| f.len() >= 4) else {
            break;
        };
        let walk = out.face_vertices(&face);
        let len = walk.len();
        // face[k] enters walk[k + 1]
        let mut candidates = Vec::new();
        for i in 0..len {
            for gap in 2..=len - 2 {
                let j = (i + gap) % len;
                let (a, b) = (walk[i], walk[j]);
                if a == b || (independent.contains(a) && independent.contains(b)) {
                    continue;
                }
                let far = gap != 2 && gap != len - 2;
                candidates.push(((far, a.min(b), a.max(b), i), i, j));
            }
        }
        candidates.sort_unstable();
        // a greedy chord can leave a sub-face that admits no further chord,
        // so each choice is checked against a full polygon triangulation
        let pick = candidates.into_iter().find(|&(_, i, j)| {
            let (lo, hi) = (i.min(j), i.max(j));
            let inner: Vec<usize> = walk[lo..=hi].to_vec();
            let outer: Vec<usize> = walk[hi..].iter().chain(&walk[..=lo]).copied().collect();
            polygon_triangulable(&inner, independent) && polygon_triangulable(&outer, independent)
        });
        let Some((_, i, j)) = pick else {
            return Err(Error::NoAdmissibleChord { face: walk });
        };
        let (ka, kb) = ((i + len - 1) % len, (j + len - 1) % len);
        out.insert_chord(face[ka], face[kb]);
    }
    Ok(out)
}

/// Whether the closed walk `walk` (consecutive entries adjacent, last joined
/// to first) can be cut into triangles by chords between distinct vertices
/// that are not both in `independent`. Interval dynamic program over walk
/// positions, `O(len³)`.
fn polygon_triangulable(walk: &[usize], independent: &VertexSet) -> bool {
    let len = walk.len();
    if len <= 3 {
        return len == 3;
    }
    let ok = |i: usize, j: usize| {
        j == i + 1
            || (walk[i] != walk[j]
                && !(independent.contains(walk[i]) && independent.contains(walk[j])))
    };
    // t[i][j]: the sub-polygon on positions i..=j, closed by chord (i, j),
    // can be triangulated
    let mut t = vec![vec![false; len]; len];
    for i in 0..len - 1 {
        t[i][i + 1] = true;
    }
    for span in 2..len {
        for i in 0..len - span {
            let j = i + span;
            t[i][j] = (i + 1..j).any(|k| t[i][k] && t[k][j] && ok(i, k) && ok(k, j));
        }
    }
    t[0][len - 1]
}

/// An edge whose endpoints both have degree at most 7, scanning edges in
/// lexicographic order. Requires minimum degree 4.
pub fn find_low_degree_edge(g: &Graph) -> Result<Option<(usize, usize)>> {
    let delta = g.min_degree();
    if delta < 4 {
        return Err(Error::MinDegreeTooLow(delta));
    }
    Ok(g.edges().find(|&(u, v)| g.degree(u) <= 7 && g.degree(v) <= 7))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub donor: usize,
    pub recipient: usize,
    pub amount: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeLedger {
    pub initial: Vec<Rational>,
    pub charge: Vec<Rational>,
    pub transfers: Vec<Transfer>,
    pub total: Rational,
    /// Vertices whose final charge is negative.
    pub negative: Vec<usize>,
}

/// Runs the discharging rule on a triangulated embedding: every vertex
/// starts with `d(v) − 6`, then every vertex of degree at least 8 sends 1/2
/// along each edge to a neighbor in `receivers` (parallel edges count
/// separately). `receivers` must be independent with all degrees ≤ 7.
pub fn charge_audit(e: &PlanarEmbedding, receivers: &VertexSet) -> Result<ChargeLedger> {
    if let Some(f) = e.faces().iter().find(|f| f.len() != 3) {
        return Err(Error::NotTriangulated(f.len()));
    }
    if e.m() == 0 {
        return Err(Error::NotTriangulated(0));
    }
    if !receivers.within(e.n()) {
        return Err(Error::ChargeSet("vertex out of range".into()));
    }
    for v in receivers {
        if e.degree(v) > 7 {
            return Err(Error::ChargeSet(format!("vertex {v} has degree {}", e.degree(v))));
        }
        if let Some(&d) = e.darts(v).iter().find(|&&d| receivers.contains(e.head(d))) {
            return Err(Error::ChargeSet(format!(
                "{v} and {} are adjacent",
                e.head(d)
            )));
        }
    }
    let initial: Vec<Rational> = (0..e.n()).map(|v| int(e.degree(v) as i64 - 6)).collect();
    let mut charge = initial.clone();
    let mut transfers = Vec::new();
    let half = ratio(1, 2);
    for v in 0..e.n() {
        if e.degree(v) < 8 {
            continue;
        }
        for &d in e.darts(v) {
            let w = e.head(d);
            if receivers.contains(w) {
                charge[v] -= &half;
                charge[w] += &half;
                transfers.push(Transfer {
                    donor: v,
                    recipient: w,
                    amount: half.clone(),
                });
            }
        }
    }
    let total = charge.iter().fold(Rational::zero(), |acc, c| acc + c);
    let negative = (0..e.n()).filter(|&v| charge[v].is_negative()).collect();
    Ok(ChargeLedger {
        initial,
        charge,
        transfers,
        total,
        negative,
    })
}

/// Oriented triangle list of a random stacked triangulation: start from a
/// triangle and repeatedly put a new vertex inside a uniformly chosen face.
fn stacked_faces(rng: &mut ChaCha8Rng, n: usize) -> Vec<[usize; 3]> {
    let mut faces = vec![[0, 1, 2], [0, 2, 1]];
    for v in 3..n {
        let k = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[k];
        faces[k] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([c, a, v]);
    }
    faces
}

/// Simple maximal planar graph on `n ≥ 3` vertices built by repeated
/// insertion into a uniformly chosen triangular face.
pub fn embed_maximal_planar(seed: u64, n: usize) -> Result<PlanarEmbedding> {
    if !(3..=MAX_VERTICES).contains(&n) {
        return Err(Error::GenParams(format!(
            "maximal planar graphs need 3..={MAX_VERTICES} vertices, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    PlanarEmbedding::from_triangles(n, &stacked_faces(&mut rng, n))
}

/// Oriented triangle list with an edge-to-face index, supporting flips.
struct FlipTriangulation {
    faces: Vec<[usize; 3]>,
    face_of: HashMap<(usize, usize), usize>,
    deg: Vec<usize>,
}

impl FlipTriangulation {
    fn new(n: usize, faces: Vec<[usize; 3]>) -> Self {
        let mut face_of = HashMap::new();
        // each corner of a face is one incident edge of that vertex
        let mut deg = vec![0usize; n];
        for (i, f) in faces.iter().enumerate() {
            for k in 0..3 {
                face_of.insert((f[k], f[(k + 1) % 3]), i);
                deg[f[k]] += 1;
            }
        }
        FlipTriangulation { faces, face_of, deg }
    }

    /// Flips the edge `a→b` of face `fi` (`a = f[k]`), returning whether the
    /// flip was legal: the new diagonal must not exist yet and `a`, `b` must
    /// stay at degree ≥ `floor`.
    fn flip(&mut self, fi: usize, k: usize, floor: usize) -> bool {
        let f = self.faces[fi];
        let (a, b, c) = (f[k], f[(k + 1) % 3], f[(k + 2) % 3]);
        let gi = self.face_of[&(b, a)];
        let d = *self.faces[gi]
            .iter()
            .find(|&&x| x != a && x != b)
            .expect("adjacent face has a third vertex");
        if c == d
            || self.face_of.contains_key(&(c, d))
            || self.deg[a] <= floor
            || self.deg[b] <= floor
        {
            return false;
        }
        for key in [(a, b), (b, c), (c, a), (b, a), (a, d), (d, b)] {
            self.face_of.remove(&key);
        }
        self.faces[fi] = [a, d, c];
        self.faces[gi] = [d, b, c];
        for i in [fi, gi] {
            let t = self.faces[i];
            for s in 0..3 {
                self.face_of.insert((t[s], t[(s + 1) % 3]), i);
            }
        }
        self.deg[a] -= 1;
        self.deg[b] -= 1;
        self.deg[c] += 1;
        self.deg[d] += 1;
        true
    }

    fn random_flips(&mut self, rng: &mut ChaCha8Rng, count: usize) {
        for _ in 0..count {
            let fi = rng.gen_range(0..self.faces.len());
            let k = rng.gen_range(0..3);
            self.flip(fi, k, 3);
        }
    }

    /// Raises degree-3 vertices by flipping the edge opposite to them, as
    /// long as the flip does not create a new vertex of degree below 4.
    fn lift_degree_three(&mut self, rng: &mut ChaCha8Rng, rounds: usize) {
        for _ in 0..rounds {
            let low: Vec<usize> = (0..self.deg.len()).filter(|&v| self.deg[v] == 3).collect();
            let Some(&v) = low.choose(rng) else {
                return;
            };
            let mut corners: Vec<(usize, usize)> = self
                .faces
                .iter()
                .enumerate()
                .filter_map(|(i, f)| f.iter().position(|&x| x == v).map(|p| (i, (p + 1) % 3)))
                .collect();
            corners.shuffle(rng);
            for (fi, k) in corners {
                if self.flip(fi, k, 4) {
                    break;
                }
            }
        }
    }
}

/// Like [`embed_maximal_planar`] followed by `flips` random edge-flip
/// attempts. A flip replaces the diagonal `ab` of the quadrilateral formed by
/// its two faces with the other diagonal when that keeps the graph simple and
/// both `a` and `b` keep degree ≥ 3.
pub fn embed_flipped_triangulation(seed: u64, n: usize, flips: usize) -> Result<PlanarEmbedding> {
    if !(3..=MAX_VERTICES).contains(&n) {
        return Err(Error::GenParams(format!(
            "maximal planar graphs need 3..={MAX_VERTICES} vertices, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = FlipTriangulation::new(n, stacked_faces(&mut rng, n));
    t.random_flips(&mut rng, flips);
    PlanarEmbedding::from_triangles(n, &t.faces)
}

/// A triangulation with minimum degree at least 4, or `None` when this seed
/// does not reach one. Stacked triangulations always contain a degree-3
/// vertex, so random flips are followed by flips aimed at degree-3 vertices.
pub fn embed_min_degree_four(seed: u64, n: usize) -> Result<Option<PlanarEmbedding>> {
    if !(6..=MAX_VERTICES).contains(&n) {
        return Err(Error::GenParams(format!(
            "minimum degree 4 triangulations need at least 6 vertices, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = FlipTriangulation::new(n, stacked_faces(&mut rng, n));
    t.random_flips(&mut rng, 4 * n);
    t.lift_degree_three(&mut rng, 20 * n);
    if t.deg.iter().any(|&d| d < 4) {
        return Ok(None);
    }
    PlanarEmbedding::from_triangles(n, &t.faces).map(Some)
}

/// Most edges a simple planar graph on `n` vertices can have.
pub fn max_planar_edges(n: usize) -> usize {
    match n {
        0 | 1 => 0,
        2 => 1,
        _ => 3 * n - 6,
    }
}

fn thin_to(seed: u64, g: &Graph, m: usize) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut edges: Vec<_> = g.edges().collect();
    edges.shuffle(&mut rng);
    edges.truncate(m);
    Graph::from_edges(g.n(), edges)
}

/// A planar graph with exactly `m` edges: a maximal planar graph with edges
/// removed uniformly at random.
pub fn random_planar(seed: u64, n: usize, m: usize) -> Result<Graph> {
    let max = max_planar_edges(n);
    if m > max {
        return Err(Error::EdgeCountOutOfRange { n, m, max });
    }
    match n {
        1 => Graph::empty(1),
        2 => Graph::from_edges(2, (m == 1).then_some((0, 1))),
        _ => thin_to(seed, &embed_maximal_planar(seed, n)?.to_graph()?, m),
    }
}

/// [`random_planar`] over a flip-randomized triangulation.
pub fn random_planar_flipped(seed: u64, n: usize, m: usize, flips: usize) -> Result<Graph> {
    let max = max_planar_edges(n);
    if m > max {
        return Err(Error::EdgeCountOutOfRange { n, m, max });
    }
    if n < 3 {
        return random_planar(seed, n, m);
    }
    thin_to(seed, &embed_flipped_triangulation(seed, n, flips)?.to_graph()?, m)
}

/// Embedding of a connected planar graph with `max(m, n − 1)` edges: a
/// flip-randomized triangulation with random edges removed while the graph
/// stays connected.
pub fn random_connected_embedding(seed: u64, n: usize, m: usize) -> Result<PlanarEmbedding> {
    let max = max_planar_edges(n);
    if m > max {
        return Err(Error::EdgeCountOutOfRange { n, m, max });
    }
    let mut e = embed_flipped_triangulation(seed, n, 2 * n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5bd1_e995);
    let mut g = e.to_graph()?;
    let mut edges: Vec<_> = g.edges().collect();
    edges.shuffle(&mut rng);
    for (u, v) in edges {
        if e.m() <= m {
            break;
        }
        let thinner = g.delete_edge(u, v)?;
        if thinner.is_connected() {
            e = e.delete_edge(u, v)?;
            g = thinner;
        }
    }
    Ok(e)
}

/// Removes random edges between vertices of degree above 4, each with
/// probability `p`, so the minimum degree stays at least 4.
pub fn thin_keeping_min_degree_four(seed: u64, g: &Graph, p: f64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = g.clone();
    let mut edges: Vec<_> = g.edges().collect();
    edges.shuffle(&mut rng);
    for (u, v) in edges {
        if out.degree(u) > 4 && out.degree(v) > 4 && rng.gen_bool(p.clamp(0.0, 1.0)) {
            out = out.delete_edge(u, v)?;
        }
    }
    Ok(out)
}

/// Triangle lists for a few fixed triangulations.
pub fn named_triangulation(name: &str) -> Result<PlanarEmbedding> {
    let faces: Vec<[usize; 3]> = match name {
        "K3" | "triangle" => vec![[0, 1, 2], [0, 2, 1]],
        "K4" => vec![[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]],
        "octahedron" => vec![
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 1],
            [5, 2, 1],
            [5, 3, 2],
            [5, 4, 3],
            [5, 1, 4],
        ],
        "icosahedron" => {
            // top 0, upper ring 1..=5, lower ring 6..=10, bottom 11
            let up = |i: usize| 1 + i % 5;
            let lo = |i: usize| 6 + i % 5;
            let mut f = Vec::new();
            for i in 0..5 {
                f.push([0, up(i), up(i + 1)]);
                f.push([up(i + 1), up(i), lo(i)]);
                f.push([up(i + 1), lo(i), lo(i + 1)]);
                f.push([lo(i + 1), lo(i), 11]);
            }
            f
        }
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    let n = faces.iter().flatten().max().unwrap() + 1;
    PlanarEmbedding::from_triangles(n, &faces)
}

/// Embedding of the cycle `0-1-…-(n−1)-0`.
pub fn cycle_embedding(n: usize) -> Result<PlanarEmbedding> {
    if n < 3 {
        return Err(Error::GenParams("cycles need at least 3 vertices".into()));
    }
    let rot = (0..n).map(|v| vec![(v + 1) % n, (v + n - 1) % n]).collect();
    PlanarEmbedding::from_rotation(n, rot)
}

/// Among the vertices of degree ≤ 7, a greedily chosen independent subset
/// (lowest index first).
pub fn low_degree_independent(e: &PlanarEmbedding) -> VertexSet {
    let mut chosen = VertexSet::new();
    let mut blocked = VertexSet::new();
    for v in 0..e.n() {
        if e.degree(v) <= 7 && !blocked.contains(v) {
            chosen.insert(v);
            blocked.insert(v);
            blocked.extend(e.darts(v).iter().map(|&d| e.head(d)));
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face_lengths(e: &PlanarEmbedding) -> Vec<usize> {
        e.faces().iter().map(Vec::len).collect()
    }

    #[test]
    fn connected_thinning() {
        for seed in 0..20 {
            let e = random_connected_embedding(seed, 12, 11).unwrap();
            assert_eq!(e.m(), 11);
            assert!(e.to_graph().unwrap().is_connected());
            assert!(e.euler_holds());
        }
        assert!(random_connected_embedding(0, 5, 10).is_err());
        let e = embed_min_degree_four(3, 14).unwrap().unwrap();
        let g = thin_keeping_min_degree_four(1, &e.to_graph().unwrap(), 0.5).unwrap();
        assert!(g.min_degree() >= 4);
    }

    #[test]
    fn named_triangulations_are_consistent() {
        for (name, n, m) in [("K4", 4, 6), ("octahedron", 6, 12), ("icosahedron", 12, 30)] {
            let e = named_triangulation(name).unwrap();
            assert_eq!((e.n(), e.m()), (n, m), "{name}");
            assert!(e.is_triangulated());
            assert!(e.euler_holds());
            assert_eq!(e.faces().len(), 2 * n - 4);
        }
        let ico = named_triangulation("icosahedron").unwrap().to_graph().unwrap();
        assert!((0..12).all(|v| ico.degree(v) == 5));
    }

    #[test]
    fn maximal_planar_sizes() {
        let t = embed_maximal_planar(1, 3).unwrap();
        assert_eq!(t.m(), 3);
        let k4 = embed_maximal_planar(9, 4).unwrap().to_graph().unwrap();
        assert_eq!(k4.m(), 6);
        for seed in 0..20 {
            let e = embed_maximal_planar(seed, 10).unwrap();
            assert_eq!(e.m(), 24);
            assert!(e.is_triangulated());
            assert!(e.euler_holds());
        }
        assert!(embed_maximal_planar(0, 2).is_err());
    }

    #[test]
    fn maximal_planar_is_deterministic() {
        assert_eq!(embed_maximal_planar(5, 30).unwrap(), embed_maximal_planar(5, 30).unwrap());
    }

    #[test]
    fn flips_keep_triangulations() {
        for seed in 0..10 {
            let e = embed_flipped_triangulation(seed, 30, 300).unwrap();
            assert!(e.is_triangulated());
            assert_eq!(e.m(), 84);
            assert!(e.to_graph().is_ok());
        }
    }

    #[test]
    fn min_degree_four_triangulations() {
        let mut found = 0;
        for seed in 0..20 {
            if let Some(e) = embed_min_degree_four(seed, 25).unwrap() {
                assert!(e.is_triangulated());
                assert!(e.to_graph().unwrap().min_degree() >= 4);
                found += 1;
            }
        }
        assert!(found >= 10, "only {found} of 20 seeds reached minimum degree 4");
    }

    #[test]
    fn random_planar_edge_counts() {
        let g = random_planar(3, 10, 24).unwrap();
        assert_eq!(g.m(), 24);
        assert_eq!(random_planar(3, 10, 0).unwrap().m(), 0);
        assert_eq!(random_planar(3, 30, 50).unwrap().m(), 50);
        assert!(matches!(
            random_planar(3, 10, 25),
            Err(Error::EdgeCountOutOfRange { .. })
        ));
    }

    #[test]
    fn c4_with_opposite_pair_gets_parallel_chords() {
        let e = cycle_embedding(4).unwrap();
        let i: VertexSet = [0, 2].into_iter().collect();
        let t = triangulate_preserving_independent(&e, &i).unwrap();
        assert!(t.is_triangulated());
        let mg = t.to_multigraph();
        assert_eq!(mg.edges.len(), 6);
        assert_eq!(mg.multiplicity(1, 3), 2);
        assert_eq!(mg.multiplicity(0, 2), 0);
        assert!(t.euler_holds());
    }

    #[test]
    fn triangle_is_left_alone() {
        let e = cycle_embedding(3).unwrap();
        let t = triangulate_preserving_independent(&e, &VertexSet::new()).unwrap();
        assert_eq!(t, e);
    }

    #[test]
    fn c5_triangulation() {
        let e = cycle_embedding(5).unwrap();
        let t = triangulate_preserving_independent(&e, &VertexSet::new()).unwrap();
        assert_eq!(t.n(), 5);
        // both faces of the pentagon get two chords each
        assert_eq!(t.m(), 9);
        assert_eq!(face_lengths(&t), vec![3; 6]);
        assert_eq!(t.faces().iter().map(Vec::len).sum::<usize>(), 2 * t.m());
        assert!(t.euler_holds());
    }

    #[test]
    fn star_with_independent_leaves_has_no_chord() {
        let rot = vec![vec![1, 2, 3], vec![0], vec![0], vec![0]];
        let e = PlanarEmbedding::from_rotation(4, rot).unwrap();
        let leaves: VertexSet = [1, 2, 3].into_iter().collect();
        assert!(matches!(
            triangulate_preserving_independent(&e, &leaves),
            Err(Error::NoAdmissibleChord { .. })
        ));
        // with only two of the leaves protected the third can take chords
        let two: VertexSet = [1, 2].into_iter().collect();
        let t = triangulate_preserving_independent(&e, &two).unwrap();
        assert!(t.is_triangulated());
    }

    #[test]
    fn triangulation_rejects_bad_input() {
        let e = cycle_embedding(4).unwrap();
        let adj: VertexSet = [0, 1].into_iter().collect();
        assert_eq!(
            triangulate_preserving_independent(&e, &adj),
            Err(Error::NotIndependent(0, 1))
        );
        let rot = vec![vec![1], vec![0], vec![3], vec![2]];
        let two = PlanarEmbedding::from_rotation(4, rot).unwrap();
        assert_eq!(
            triangulate_preserving_independent(&two, &VertexSet::new()),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn low_degree_edges_on_platonic_solids() {
        let ico = named_triangulation("icosahedron").unwrap().to_graph().unwrap();
        assert_eq!(find_low_degree_edge(&ico).unwrap(), Some((0, 1)));
        let oct = named_triangulation("octahedron").unwrap().to_graph().unwrap();
        assert!(find_low_degree_edge(&oct).unwrap().is_some());
        let k4 = named_triangulation("K4").unwrap().to_graph().unwrap();
        assert_eq!(find_low_degree_edge(&k4), Err(Error::MinDegreeTooLow(3)));
    }

    #[test]
    fn charge_audit_regular_solids() {
        let ico = named_triangulation("icosahedron").unwrap();
        let l = charge_audit(&ico, &VertexSet::new()).unwrap();
        assert!(l.charge.iter().all(|c| *c == int(-1)));
        assert_eq!(l.total, int(-12));
        assert_eq!(l.negative.len(), 12);

        let k4 = named_triangulation("K4").unwrap();
        let l = charge_audit(&k4, &VertexSet::new()).unwrap();
        assert!(l.charge.iter().all(|c| *c == int(-3)));
        assert_eq!(l.total, int(-12));
    }

    #[test]
    fn charge_audit_with_transfers() {
        for seed in 0..30 {
            let e = embed_maximal_planar(seed, 40).unwrap();
            let i = low_degree_independent(&e);
            let l = charge_audit(&e, &i).unwrap();
            assert_eq!(l.total, int(-12));
            assert!(!l.negative.is_empty());
            for t in &l.transfers {
                assert!(e.degree(t.donor) >= 8 && i.contains(t.recipient));
            }
        }
    }

    #[test]
    fn charge_audit_rejects_bad_input() {
        let c4 = cycle_embedding(4).unwrap();
        assert_eq!(charge_audit(&c4, &VertexSet::new()), Err(Error::NotTriangulated(4)));
        let k4 = named_triangulation("K4").unwrap();
        let adj: VertexSet = [0, 1].into_iter().collect();
        assert!(matches!(charge_audit(&k4, &adj), Err(Error::ChargeSet(_))));
    }

    #[test]
    fn json_round_trip_with_parallel_edges() {
        let e = cycle_embedding(4).unwrap();
        let i: VertexSet = [0, 2].into_iter().collect();
        let t = triangulate_preserving_independent(&e, &i).unwrap();
        let back = PlanarEmbedding::from_json(&t.to_json()).unwrap();
        assert_eq!(back.rotation_neighbors(), t.rotation_neighbors());
        assert!(back.is_triangulated());
        assert!(back.euler_holds());
    }

    #[test]
    fn json_rejects_nonplanar_rotation() {
        // K_{3,3} with an arbitrary rotation has genus 1
        let rot = vec![
            vec![3, 4, 5],
            vec![3, 4, 5],
            vec![3, 4, 5],
            vec![0, 1, 2],
            vec![0, 1, 2],
            vec![0, 1, 2],
        ];
        let text = serde_json::to_string(&EmbeddingJson { n: 6, rotation: rot }).unwrap();
        assert!(matches!(PlanarEmbedding::from_json(&text), Err(Error::Embedding(_))));
    }

    #[test]
    fn delete_edge_keeps_embedding_valid() {
        let e = named_triangulation("octahedron").unwrap();
        let d = e.delete_edge(0, 1).unwrap();
        assert_eq!(d.m(), 11);
        assert!(d.euler_holds());
        assert_eq!(face_lengths(&d).iter().filter(|&&l| l == 4).count(), 1);
        assert!(e.delete_edge(0, 5).is_err());
    }
}
