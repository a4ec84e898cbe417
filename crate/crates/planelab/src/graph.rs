//! Plane graphs as rotation systems, with face tracing, short-cycle
//! enumeration, cycle sides and vertex identification.
//!
//! Vertices are 1-based dense integers (`1..=n`), matching the planar_code
//! and rotlist external formats. A plane graph is given by the cyclic order
//! of neighbors around every vertex plus one directed edge whose left face
//! is the outer face. Faces are derived by tracing the orbits of the dart
//! permutation `(u,v) -> (v, succ_v(u))`, where `succ_v(u)` is the neighbor
//! following `u` in the rotation at `v`; the orbit of a dart is the boundary
//! walk of the face to its left.

use std::collections::{BTreeSet, HashMap, VecDeque};
use thiserror::Error;

/// 1-based vertex id.
pub type Vertex = usize;
/// Index into [`PlaneGraph::faces`].
pub type FaceId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("not a simple symmetric rotation system: {0}")]
    NotSimple(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("rotation system does not describe a sphere embedding: V-E+F = {0}, expected 2")]
    EulerViolation(i64),
    #[error("outer edge ({0}, {1}) is not a directed edge of the graph")]
    BadOuterEdge(Vertex, Vertex),
    #[error("vertex sequence is not a cycle of the graph: {0}")]
    NotACycle(String),
    #[error("identification part contains an internal edge ({0}, {1})")]
    NotIndependent(Vertex, Vertex),
    #[error("identification parts overlap at vertex {0}")]
    Overlap(Vertex),
}

/// Adjacency-only simple graph on vertices `1..=n`.
///
/// Used for identified graphs `G[S1,...,Sl]` and wherever the embedding is
/// irrelevant (membership checks, the coloring solver).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractGraph {
    adj: Vec<BTreeSet<Vertex>>, // slot 0 unused
}

impl AbstractGraph {
    pub fn new(n: usize) -> Self {
        AbstractGraph { adj: vec![BTreeSet::new(); n + 1] }
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        let mut g = AbstractGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        assert!(u != v && u >= 1 && v >= 1 && u <= self.vertex_count() && v <= self.vertex_count());
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.vertex_count()
    }

    /// Edges as ordered pairs (u < v), sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in self.vertices() {
            for w in self.neighbors(v) {
                if v < w {
                    out.push((v, w));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n + 1];
        let mut queue = VecDeque::from([1]);
        seen[1] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// BFS distances from `v`; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, v: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count() + 1];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// |V| + |E|.
    pub fn sigma(&self) -> usize {
        self.vertex_count() + self.edge_count()
    }
}

/// A simple cycle, stored under its canonical representative: smallest
/// vertex first, then the lexicographically smaller of the two directions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    vertices: Vec<Vertex>,
}

impl Cycle {
    /// Canonicalize and validate a vertex sequence against `g`.
    pub fn new(g: &AbstractGraph, vertices: &[Vertex]) -> Result<Self, GraphError> {
        let k = vertices.len();
        if k < 3 {
            return Err(GraphError::NotACycle(format!("length {k} < 3")));
        }
        let set: BTreeSet<_> = vertices.iter().copied().collect();
        if set.len() != k {
            return Err(GraphError::NotACycle("repeated vertex".into()));
        }
        for i in 0..k {
            let (u, v) = (vertices[i], vertices[(i + 1) % k]);
            if u < 1 || u > g.vertex_count() || !g.has_edge(u, v) {
                return Err(GraphError::NotACycle(format!("({u}, {v}) is not an edge")));
            }
        }
        Ok(Cycle { vertices: canonical_rotation(vertices) })
    }

    /// Canonicalize without adjacency checks (caller guarantees cycle-ness).
    pub(crate) fn new_unchecked(vertices: &[Vertex]) -> Self {
        Cycle { vertices: canonical_rotation(vertices) }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.vertices.iter().copied().collect()
    }

    /// Unordered edge pairs (u, v) with u < v.
    pub fn edge_set(&self) -> BTreeSet<(Vertex, Vertex)> {
        let k = self.vertices.len();
        (0..k)
            .map(|i| {
                let (a, b) = (self.vertices[i], self.vertices[(i + 1) % k]);
                (a.min(b), a.max(b))
            })
            .collect()
    }
}

fn canonical_rotation(vertices: &[Vertex]) -> Vec<Vertex> {
    let k = vertices.len();
    let start = (0..k).min_by_key(|&i| vertices[i]).unwrap();
    let fwd: Vec<_> = (0..k).map(|i| vertices[(start + i) % k]).collect();
    let rev: Vec<_> = (0..k).map(|i| vertices[(start + k - i) % k]).collect();
    if fwd <= rev {
        fwd
    } else {
        rev
    }
}

/// One face of the embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceRecord {
    pub id: FaceId,
    /// Directed boundary walk: the tail of every dart of the face orbit.
    /// For 2-connected graphs this is a simple cycle; walks may repeat
    /// vertices at bridges and cut vertices.
    pub boundary: Vec<Vertex>,
    pub is_outer: bool,
}

impl FaceRecord {
    /// Face degree = length of the boundary walk.
    pub fn degree(&self) -> usize {
        self.boundary.len()
    }

    /// b(f): the vertex set of the face.
    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.boundary.iter().copied().collect()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.boundary.contains(&v)
    }

    /// Unordered boundary edges, deduplicated.
    pub fn edge_set(&self) -> BTreeSet<(Vertex, Vertex)> {
        let k = self.boundary.len();
        (0..k)
            .map(|i| {
                let (a, b) = (self.boundary[i], self.boundary[(i + 1) % k]);
                (a.min(b), a.max(b))
            })
            .collect()
    }
}

/// A simple connected plane graph: rotation system plus a designated outer
/// face, with faces traced at construction time.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    rotation: Vec<Vec<Vertex>>, // slot 0 unused
    outer_edge: (Vertex, Vertex),
    faces: Vec<FaceRecord>,
    edge_count: usize,
    abs: AbstractGraph,
    /// face id to the left of each dart: dart_face[(u,v)]
    dart_face: HashMap<(Vertex, Vertex), FaceId>,
}

impl PartialEq for PlaneGraph {
    fn eq(&self, other: &Self) -> bool {
        self.rotation == other.rotation && self.outer_edge == other.outer_edge
    }
}
impl Eq for PlaneGraph {}

impl PlaneGraph {
    /// Build and fully validate a plane graph from a rotation system.
    ///
    /// `rotation[v]` lists the neighbors of vertex `v+1`... no: `rotation`
    /// must have length `n` and `rotation[i]` is the cyclic neighbor order
    /// of vertex `i+1`. The left face of `outer_edge` becomes the outer face.
    pub fn build_from_rotation(
        n: usize,
        rotation: Vec<Vec<Vertex>>,
        outer_edge: (Vertex, Vertex),
    ) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::NotSimple("empty vertex set".into()));
        }
        if rotation.len() != n {
            return Err(GraphError::NotSimple(format!(
                "expected {n} rotation lists, got {}",
                rotation.len()
            )));
        }
        let mut rot = Vec::with_capacity(n + 1);
        rot.push(Vec::new());
        rot.extend(rotation);

        // Simplicity: ids in range, no loops, no repeats, symmetric adjacency.
        let mut abs = AbstractGraph::new(n);
        for v in 1..=n {
            let mut seen = BTreeSet::new();
            for &w in &rot[v] {
                if w < 1 || w > n {
                    return Err(GraphError::NotSimple(format!("vertex {v} lists out-of-range neighbor {w}")));
                }
                if w == v {
                    return Err(GraphError::NotSimple(format!("loop at vertex {v}")));
                }
                if !seen.insert(w) {
                    return Err(GraphError::NotSimple(format!("vertex {v} lists neighbor {w} twice")));
                }
            }
        }
        for v in 1..=n {
            for &w in &rot[v] {
                if !rot[w].contains(&v) {
                    return Err(GraphError::NotSimple(format!("{v} lists {w} but {w} does not list {v}")));
                }
            }
        }
        for v in 1..=n {
            for &w in &rot[v] {
                if v < w {
                    abs.add_edge(v, w);
                }
            }
        }
        let edge_count = abs.edge_count();

        if !abs.is_connected() {
            return Err(GraphError::Disconnected);
        }

        // Trace the dart orbits; each directed edge lies in exactly one walk.
        let pos: Vec<HashMap<Vertex, usize>> = rot
            .iter()
            .map(|nbrs| nbrs.iter().enumerate().map(|(i, &w)| (w, i)).collect())
            .collect();
        let succ = |u: Vertex, v: Vertex| -> Vertex {
            let i = pos[v][&u];
            rot[v][(i + 1) % rot[v].len()]
        };

        let mut dart_face: HashMap<(Vertex, Vertex), FaceId> = HashMap::new();
        let mut faces: Vec<FaceRecord> = Vec::new();
        for v in 1..=n {
            for &w in &rot[v] {
                if dart_face.contains_key(&(v, w)) {
                    continue;
                }
                let id = faces.len();
                let mut walk = Vec::new();
                let (mut a, mut b) = (v, w);
                loop {
                    walk.push(a);
                    dart_face.insert((a, b), id);
                    let c = succ(a, b);
                    a = b;
                    b = c;
                    if (a, b) == (v, w) {
                        break;
                    }
                }
                faces.push(FaceRecord { id, boundary: walk, is_outer: false });
            }
        }

        let euler = n as i64 - edge_count as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(GraphError::EulerViolation(euler));
        }
        debug_assert_eq!(faces.iter().map(|f| f.degree()).sum::<usize>(), 2 * edge_count);

        let (ou, ov) = outer_edge;
        let outer_id = match dart_face.get(&(ou, ov)) {
            Some(&id) => id,
            None => return Err(GraphError::BadOuterEdge(ou, ov)),
        };
        faces[outer_id].is_outer = true;

        Ok(PlaneGraph { rotation: rot, outer_edge, faces, edge_count, abs, dart_face })
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.vertex_count()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rotation[v].len()
    }

    pub fn rotation_of(&self, v: Vertex) -> &[Vertex] {
        &self.rotation[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.abs.has_edge(u, v)
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.rotation[v].iter().copied()
    }

    pub fn outer_edge(&self) -> (Vertex, Vertex) {
        self.outer_edge
    }

    pub fn faces(&self) -> &[FaceRecord] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> &FaceRecord {
        &self.faces[id]
    }

    pub fn outer_face(&self) -> &FaceRecord {
        self.faces.iter().find(|f| f.is_outer).expect("validated graph has an outer face")
    }

    /// Face to the left of the directed edge (u, v).
    pub fn face_left_of(&self, u: Vertex, v: Vertex) -> Option<FaceId> {
        self.dart_face.get(&(u, v)).copied()
    }

    /// Faces incident to `v` (each face once, even if the walk meets `v` twice).
    pub fn faces_at(&self, v: Vertex) -> Vec<FaceId> {
        let mut ids: Vec<FaceId> = self.rotation[v].iter().map(|&w| self.dart_face[&(v, w)]).collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    /// Adjacency view of this graph.
    pub fn abstract_graph(&self) -> &AbstractGraph {
        &self.abs
    }

    /// Same embedding with a different outer face designation.
    pub fn with_outer_edge(&self, outer_edge: (Vertex, Vertex)) -> Result<Self, GraphError> {
        let rot = self.rotation[1..].to_vec();
        PlaneGraph::build_from_rotation(self.vertex_count(), rot, outer_edge)
    }

    /// |V| + |E|.
    pub fn sigma(&self) -> usize {
        self.vertex_count() + self.edge_count
    }

    /// All cycles of length 3..=max_len, canonically deduplicated.
    pub fn cycles_up_to(&self, max_len: usize) -> Vec<Cycle> {
        cycles_up_to(&self.abs, max_len)
    }

    /// Partition of V(G) \ C into the two sides of the cycle in the embedding.
    pub fn cycle_sides(&self, c: &Cycle) -> Result<CycleSides, GraphError> {
        // Re-validate against this graph.
        let c = Cycle::new(&self.abs, c.vertices())?;
        let cycle_edges = c.edge_set();
        let cycle_set = c.vertex_set();

        // Flood fill over faces, never crossing an edge of C. The side
        // reachable from the outer face is the exterior.
        let outer = self.outer_face().id;
        let mut side = vec![None::<bool>; self.faces.len()]; // true = exterior
        side[outer] = Some(true);
        let mut queue = VecDeque::from([outer]);
        while let Some(f) = queue.pop_front() {
            let s = side[f].unwrap();
            let walk = &self.faces[f].boundary;
            for i in 0..walk.len() {
                let (a, b) = (walk[i], walk[(i + 1) % walk.len()]);
                if cycle_edges.contains(&(a.min(b), a.max(b))) {
                    continue;
                }
                let g = self.dart_face[&(b, a)]; // face on the other side of edge (a,b)
                if side[g].is_none() {
                    side[g] = Some(s);
                    queue.push_back(g);
                }
            }
        }
        // Any face not reached from the outer face lies strictly inside C.
        let mut interior = BTreeSet::new();
        let mut exterior = BTreeSet::new();
        for f in &self.faces {
            let target = match side[f.id] {
                Some(true) => &mut exterior,
                _ => &mut interior,
            };
            for &v in &f.boundary {
                if !cycle_set.contains(&v) {
                    target.insert(v);
                }
            }
        }
        debug_assert!(interior.is_disjoint(&exterior));
        Ok(CycleSides {
            interior: interior.into_iter().collect(),
            exterior: exterior.into_iter().collect(),
        })
    }
}

/// Result of [`PlaneGraph::cycle_sides`]: int(C) and ext(C).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSides {
    pub interior: Vec<Vertex>,
    pub exterior: Vec<Vertex>,
}

impl CycleSides {
    pub fn is_separating(&self) -> bool {
        !self.interior.is_empty() && !self.exterior.is_empty()
    }
}

/// All cycles of length 3..=max_len (max_len <= 8), one canonical
/// representative each, sorted.
pub fn cycles_up_to(g: &AbstractGraph, max_len: usize) -> Vec<Cycle> {
    assert!((3..=8).contains(&max_len), "cycle length cap must be in 3..=8");
    let n = g.vertex_count();
    let mut found = Vec::new();
    let mut path: Vec<Vertex> = Vec::with_capacity(max_len);
    let mut on_path = vec![false; n + 1];

    // Grow paths whose start is their minimum vertex; close back to the
    // start and keep one direction (second vertex < last vertex).
    fn extend(
        g: &AbstractGraph,
        start: Vertex,
        path: &mut Vec<Vertex>,
        on_path: &mut Vec<bool>,
        max_len: usize,
        found: &mut Vec<Cycle>,
    ) {
        let last = *path.last().unwrap();
        for w in g.neighbors(last) {
            if w == start && path.len() >= 3 && path[1] < last {
                found.push(Cycle::new_unchecked(path));
            }
            if w > start && !on_path[w] && path.len() < max_len {
                path.push(w);
                on_path[w] = true;
                extend(g, start, path, on_path, max_len, found);
                on_path[w] = false;
                path.pop();
            }
        }
    }

    for s in 1..=n {
        path.clear();
        path.push(s);
        on_path[s] = true;
        extend(g, s, &mut path, &mut on_path, max_len, &mut found);
        on_path[s] = false;
    }
    found.sort();
    found.dedup();
    found
}

/// Result of identifying vertex sets: the abstract quotient graph plus the
/// map from old ids to new ids (the merged vertex for a part is addressable
/// through any of its members).
#[derive(Debug, Clone)]
pub struct IdentifiedGraph {
    pub graph: AbstractGraph,
    pub image: Vec<Vertex>, // image[old] = new id; slot 0 unused
}

impl IdentifiedGraph {
    pub fn image_of(&self, old: Vertex) -> Vertex {
        self.image[old]
    }
}

/// G[S1,...,Sl]: identify each part to a single vertex. Parts must be
/// pairwise disjoint independent sets; parallel edges are merged.
pub fn identify_vertices(
    g: &AbstractGraph,
    parts: &[Vec<Vertex>],
) -> Result<IdentifiedGraph, GraphError> {
    let n = g.vertex_count();
    let mut part_of = vec![None::<usize>; n + 1];
    for (i, part) in parts.iter().enumerate() {
        for &v in part {
            assert!(v >= 1 && v <= n, "identification vertex out of range");
            if part_of[v].is_some() {
                return Err(GraphError::Overlap(v));
            }
            part_of[v] = Some(i);
        }
        for &v in part {
            for &w in part {
                if v < w && g.has_edge(v, w) {
                    return Err(GraphError::NotIndependent(v, w));
                }
            }
        }
    }

    // Representatives keep relative order: untouched vertices and the
    // minimum of each part, renumbered densely.
    let rep = |v: Vertex| -> Vertex {
        match part_of[v] {
            Some(i) => *parts[i].iter().min().unwrap(),
            None => v,
        }
    };
    let mut reps: Vec<Vertex> = (1..=n).map(rep).collect();
    reps.sort_unstable();
    reps.dedup();
    let new_id: HashMap<Vertex, Vertex> =
        reps.iter().enumerate().map(|(i, &r)| (r, i + 1)).collect();

    let mut image = vec![0; n + 1];
    for v in 1..=n {
        image[v] = new_id[&rep(v)];
    }
    let mut out = AbstractGraph::new(reps.len());
    for (u, v) in g.edges() {
        let (a, b) = (image[u], image[v]);
        if a != b {
            out.add_edge(a, b);
        }
    }
    Ok(IdentifiedGraph { graph: out, image })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn triangle() -> PlaneGraph {
        PlaneGraph::build_from_rotation(3, vec![vec![2, 3], vec![3, 1], vec![1, 2]], (1, 2)).unwrap()
    }

    /// 3-cube with opposite faces 1234 / 5678, vertex i adjacent to i+4.
    pub(crate) fn cube() -> PlaneGraph {
        let rot = vec![
            vec![2, 4, 5],
            vec![3, 1, 6],
            vec![4, 2, 7],
            vec![1, 3, 8],
            vec![1, 8, 6],
            vec![2, 5, 7],
            vec![3, 6, 8],
            vec![4, 7, 5],
        ];
        PlaneGraph::build_from_rotation(8, rot, (1, 2)).unwrap()
    }

    pub(crate) fn k4() -> PlaneGraph {
        // Outer triangle 123, center 4.
        let rot = vec![vec![2, 4, 3], vec![3, 4, 1], vec![1, 4, 2], vec![1, 2, 3]];
        PlaneGraph::build_from_rotation(4, rot, (1, 2)).unwrap()
    }

    /// Wheel W5: hub 5 joined to 4-cycle 1234; hub-avoiding cycle is 1234.
    fn wheel5() -> PlaneGraph {
        let rot = vec![
            vec![2, 5, 4],
            vec![3, 5, 1],
            vec![4, 5, 3],
            vec![1, 5, 3].into_iter().collect::<Vec<_>>(),
            vec![1, 2, 3, 4],
        ];
        // fix rotation of 3 and 4: 3 ~ {2,4,5}, 4 ~ {3,1,5}
        let rot = vec![vec![2, 5, 4], vec![3, 5, 1], vec![4, 5, 2], vec![1, 5, 3], vec![1, 2, 3, 4]];
        PlaneGraph::build_from_rotation(5, rot, (1, 2)).unwrap()
    }

    #[test]
    fn triangle_faces() {
        let g = triangle();
        assert_eq!(g.faces().len(), 2);
        assert!(g.faces().iter().all(|f| f.degree() == 3));
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.sigma(), 6);
    }

    #[test]
    fn cube_faces() {
        let g = cube();
        assert_eq!(g.faces().len(), 6);
        assert!(g.faces().iter().all(|f| f.degree() == 4));
        assert_eq!(g.sigma(), 20);
    }

    #[test]
    fn k2_single_face() {
        let g = PlaneGraph::build_from_rotation(2, vec![vec![2], vec![1]], (1, 2)).unwrap();
        assert_eq!(g.faces().len(), 1);
        assert_eq!(g.faces()[0].degree(), 2);
        assert_eq!(g.sigma(), 3);
    }

    #[test]
    fn asymmetric_rotation_rejected() {
        let err = PlaneGraph::build_from_rotation(3, vec![vec![2, 3], vec![3], vec![1, 2]], (1, 2));
        assert!(matches!(err, Err(GraphError::NotSimple(_))));
    }

    #[test]
    fn disconnected_rejected() {
        let err = PlaneGraph::build_from_rotation(4, vec![vec![2], vec![1], vec![4], vec![3]], (1, 2));
        assert_eq!(err.unwrap_err(), GraphError::Disconnected);
    }

    #[test]
    fn euler_violation_rejected() {
        // K4 rotations tweaked into a torus-like system.
        let rot = vec![vec![2, 3, 4], vec![3, 4, 1], vec![4, 1, 2], vec![1, 2, 3]];
        match PlaneGraph::build_from_rotation(4, rot, (1, 2)) {
            Err(GraphError::EulerViolation(_)) => {}
            other => panic!("expected Euler violation, got {other:?}"),
        }
    }

    #[test]
    fn bad_outer_edge_rejected() {
        let err = PlaneGraph::build_from_rotation(3, vec![vec![2, 3], vec![3, 1], vec![1, 2]], (1, 5));
        assert!(matches!(err, Err(GraphError::BadOuterEdge(1, 5))));
    }

    #[test]
    fn cycles_c7() {
        let rot: Vec<Vec<usize>> = (1..=7)
            .map(|v| vec![if v == 7 { 1 } else { v + 1 }, if v == 1 { 7 } else { v - 1 }])
            .collect();
        let g = PlaneGraph::build_from_rotation(7, rot, (1, 2)).unwrap();
        let cycles = g.cycles_up_to(7);
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 7);
    }

    #[test]
    fn cycles_k4() {
        let g = k4();
        let cycles = g.cycles_up_to(5);
        let by_len = |k: usize| cycles.iter().filter(|c| c.len() == k).count();
        assert_eq!(by_len(3), 4);
        assert_eq!(by_len(4), 3);
        assert_eq!(by_len(5), 0);
    }

    #[test]
    fn cycles_cube() {
        let g = cube();
        let cycles = g.cycles_up_to(5);
        let by_len = |k: usize| cycles.iter().filter(|c| c.len() == k).count();
        assert_eq!(by_len(3), 0);
        assert_eq!(by_len(4), 6);
        assert_eq!(by_len(5), 0);
    }

    #[test]
    fn facial_cycle_not_separating() {
        let g = k4();
        for f in g.faces() {
            let c = Cycle::new(g.abstract_graph(), &f.boundary).unwrap();
            let sides = g.cycle_sides(&c).unwrap();
            assert!(!sides.is_separating(), "facial cycle reported separating");
        }
    }

    #[test]
    fn wheel_hub_inside() {
        let g = wheel5();
        let rim = Cycle::new(g.abstract_graph(), &[1, 2, 3, 4]).unwrap();
        let sides = g.cycle_sides(&rim).unwrap();
        assert_eq!(sides.interior, vec![5]);
        assert!(sides.exterior.is_empty());
        assert!(!sides.is_separating());
    }

    #[test]
    fn cycle_sides_partition() {
        let g = cube();
        for c in g.cycles_up_to(6) {
            let sides = g.cycle_sides(&c).unwrap();
            let mut all: Vec<Vertex> = sides.interior.iter().chain(&sides.exterior).copied().collect();
            all.extend(c.vertices());
            all.sort_unstable();
            assert_eq!(all, (1..=8).collect::<Vec<_>>());
        }
    }

    #[test]
    fn identify_path_ends() {
        // path 1-2-3, identify {1,3}
        let g = AbstractGraph::from_edges(3, &[(1, 2), (2, 3)]);
        let idg = identify_vertices(&g, &[vec![1, 3]]).unwrap();
        assert_eq!(idg.graph.vertex_count(), 2);
        assert_eq!(idg.graph.edge_count(), 1);
        assert_eq!(idg.image_of(1), idg.image_of(3));
    }

    #[test]
    fn identify_four_face_opposites() {
        // 4-cycle 1-2-3-4, identify {1,3}
        let g = AbstractGraph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        let idg = identify_vertices(&g, &[vec![1, 3]]).unwrap();
        assert_eq!(idg.graph.vertex_count(), 3);
        let m = idg.image_of(1);
        assert!(idg.graph.has_edge(m, idg.image_of(2)));
        assert!(idg.graph.has_edge(m, idg.image_of(4)));
        assert!(!idg.graph.has_edge(idg.image_of(2), idg.image_of(4)));
    }

    #[test]
    fn identify_rejects_edges_and_overlap() {
        let g = AbstractGraph::from_edges(3, &[(1, 2), (2, 3)]);
        assert!(matches!(identify_vertices(&g, &[vec![1, 2]]), Err(GraphError::NotIndependent(1, 2))));
        assert!(matches!(
            identify_vertices(&g, &[vec![1, 3], vec![3, 2]]),
            Err(GraphError::Overlap(3))
        ));
    }

    #[test]
    fn identified_vertex_count_drops() {
        let g = AbstractGraph::from_edges(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)]);
        let idg = identify_vertices(&g, &[vec![1, 4], vec![2, 5]]).unwrap();
        assert_eq!(idg.graph.vertex_count(), 4);
        // no loops / parallels by construction
        for (u, v) in idg.graph.edges() {
            assert_ne!(u, v);
        }
    }
}
