//! Combinatorial embeddings as rotation systems.
//!
//! Every edge `e` with endpoints `[a, b]` has two half-edges: `(e, 0)` sits
//! at `a` and `(e, 1)` sits at `b`. A half-edge also stands for the directed
//! traversal leaving its vertex. The rotation at a vertex is the cyclic order
//! of its half-edges. Faces are traced by the rule
//! `next(h) = successor of twin(h) in the rotation at the head of h`.

use std::collections::BTreeMap;
use std::fmt;

use crate::cycle_space::{CycleBasis, EdgeSet};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Thread, VertexId};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfEdge {
    pub edge: EdgeId,
    pub end: u8,
}

impl HalfEdge {
    pub fn new(edge: EdgeId, end: u8) -> Self {
        debug_assert!(end < 2);
        HalfEdge { edge, end }
    }

    pub fn twin(self) -> Self {
        HalfEdge {
            edge: self.edge,
            end: 1 - self.end,
        }
    }
}

impl fmt::Debug for HalfEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.edge, self.end)
    }
}

impl fmt::Display for HalfEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.edge, self.end)
    }
}

/// A face as a closed walk of directed half-edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    boundary: Vec<HalfEdge>,
    corners: Vec<VertexId>,
    circuit: EdgeSet,
}

impl Face {
    /// Directed half-edges in walk order, starting at the smallest.
    pub fn boundary(&self) -> &[HalfEdge] {
        &self.boundary
    }

    /// `corners()[i]` is the vertex that `boundary()[i]` leaves.
    pub fn corners(&self) -> &[VertexId] {
        &self.corners
    }

    /// Edges on the walk.
    pub fn circuit(&self) -> &EdgeSet {
        &self.circuit
    }

    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    /// Edges of the walk segment `boundary[from..to]`, cyclically.
    pub fn arc(&self, from: usize, to: usize) -> EdgeSet {
        let n = self.boundary.len();
        let mut set = EdgeSet::new();
        let mut i = from;
        while i != to {
            set.toggle(self.boundary[i].edge);
            i = (i + 1) % n;
        }
        set
    }
}

/// A path to be drawn inside a face. Its inner vertices and all its edges
/// are new; `ends[i]` is the stored endpoint order of `edges[i]`, which
/// decides which half-edge is `.0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathChord {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
    ends: Vec<[VertexId; 2]>,
}

impl PathChord {
    /// Edge `edges[i]` runs from `vertices[i]` to `vertices[i + 1]`.
    pub fn new(vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Self {
        let ends = vertices.windows(2).map(|w| [w[0], w[1]]).collect();
        PathChord {
            vertices,
            edges,
            ends,
        }
    }

    /// The path of thread `t`, keeping the endpoint order `g` stores.
    pub fn from_thread(g: &Graph, t: &Thread) -> Result<Self> {
        let ends = t
            .edges()
            .iter()
            .map(|&e| g.endpoints(e).ok_or(Error::UnknownEdgeId(e)))
            .collect::<Result<_>>()?;
        Ok(PathChord {
            vertices: t.vertices().to_vec(),
            edges: t.edges().to_vec(),
            ends,
        })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn ends(&self) -> (VertexId, VertexId) {
        (self.vertices[0], self.vertices[self.vertices.len() - 1])
    }

    /// Half-edge of `edges[i]` sitting at `v`.
    fn half_at(&self, i: usize, v: VertexId) -> HalfEdge {
        HalfEdge::new(self.edges[i], u8::from(self.ends[i][0] != v))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Embedding {
    graph: Graph,
    rotation: Vec<Vec<HalfEdge>>,
    position: Vec<[usize; 2]>,
}

impl Embedding {
    /// Checks that every half-edge of `graph` appears exactly once, in the
    /// rotation of the vertex it sits at. Vertices of degree zero may be
    /// omitted.
    pub fn new(graph: Graph, rotation: BTreeMap<VertexId, Vec<HalfEdge>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidRotation(msg));
        let mut table = vec![Vec::new(); graph.vertex_bound()];
        for (v, hs) in rotation {
            if !graph.contains_vertex(v) {
                return bad(format!("vertex {v} is not in the graph"));
            }
            table[v] = hs;
        }
        let mut position = vec![[usize::MAX; 2]; graph.edge_bound()];
        for v in graph.vertices() {
            for (i, &h) in table[v].iter().enumerate() {
                let Some(ends) = graph.endpoints(h.edge) else {
                    return bad(format!("half-edge {h} names an unknown edge"));
                };
                if h.end > 1 || ends[h.end as usize] != v {
                    return bad(format!("half-edge {h} does not sit at vertex {v}"));
                }
                let slot = &mut position[h.edge][h.end as usize];
                if *slot != usize::MAX {
                    return bad(format!("half-edge {h} appears twice"));
                }
                *slot = i;
            }
        }
        for (e, _) in graph.edges() {
            if position[e].contains(&usize::MAX) {
                return bad(format!("edge {e} is missing from the rotation"));
            }
        }
        Ok(Embedding::assemble(graph, table))
    }

    /// Rotates every cyclic order to start at its minimal half-edge, so
    /// equal rotation systems compare equal, and indexes positions.
    fn assemble(graph: Graph, mut rotation: Vec<Vec<HalfEdge>>) -> Self {
        let mut position = vec![[usize::MAX; 2]; graph.edge_bound()];
        for hs in &mut rotation {
            if let Some(min) = hs
                .iter()
                .enumerate()
                .min_by_key(|&(_, h)| *h)
                .map(|(i, _)| i)
            {
                hs.rotate_left(min);
            }
            for (i, h) in hs.iter().enumerate() {
                position[h.edge][h.end as usize] = i;
            }
        }
        Embedding {
            graph,
            rotation,
            position,
        }
    }

    /// The unique embedding of a cycle graph.
    pub fn of_cycle(g: &Graph) -> Result<Self> {
        if !g.is_cycle() {
            return Err(Error::InvalidRotation("graph is not a cycle".into()));
        }
        let mut rotation = BTreeMap::new();
        for v in g.vertices() {
            rotation.insert(v, Vec::new());
        }
        for (e, [a, b]) in g.edges() {
            rotation.get_mut(&a).unwrap().push(HalfEdge::new(e, 0));
            rotation.get_mut(&b).unwrap().push(HalfEdge::new(e, 1));
        }
        Embedding::new(g.clone(), rotation)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Rotation at `v`, starting at its minimal half-edge.
    pub fn rotation(&self, v: VertexId) -> &[HalfEdge] {
        self.rotation.get(v).map_or(&[], Vec::as_slice)
    }

    /// The vertex half-edge `h` sits at (the tail of the traversal).
    pub fn tail(&self, h: HalfEdge) -> VertexId {
        self.graph.endpoints(h.edge).expect("embedded edge")[h.end as usize]
    }

    pub fn head(&self, h: HalfEdge) -> VertexId {
        self.tail(h.twin())
    }

    /// Successor of `h` in the rotation at its vertex.
    pub fn succ(&self, h: HalfEdge) -> HalfEdge {
        let rot = &self.rotation[self.tail(h)];
        let i = self.position[h.edge][h.end as usize];
        rot[(i + 1) % rot.len()]
    }

    pub fn next_in_face(&self, h: HalfEdge) -> HalfEdge {
        self.succ(h.twin())
    }

    fn half_edges(&self) -> impl Iterator<Item = HalfEdge> + '_ {
        self.graph
            .edge_ids()
            .flat_map(|e| [HalfEdge::new(e, 0), HalfEdge::new(e, 1)])
    }

    fn trace(&self, start: HalfEdge, mut visit: impl FnMut(HalfEdge)) -> Face {
        let mut boundary = Vec::new();
        let mut corners = Vec::new();
        let mut circuit = EdgeSet::new();
        let mut h = start;
        loop {
            visit(h);
            boundary.push(h);
            corners.push(self.tail(h));
            circuit.insert(h.edge);
            h = self.next_in_face(h);
            if h == start {
                break;
            }
        }
        let first = (0..boundary.len())
            .min_by_key(|&i| boundary[i])
            .unwrap_or(0);
        boundary.rotate_left(first);
        corners.rotate_left(first);
        Face {
            boundary,
            corners,
            circuit,
        }
    }

    /// The face whose boundary walk contains `h`.
    pub fn face_of(&self, h: HalfEdge) -> Face {
        self.trace(h, |_| {})
    }

    /// All faces, ordered by their smallest half-edge. A graph without
    /// edges has one face with an empty walk.
    pub fn faces(&self) -> Result<Vec<Face>> {
        if !self.graph.is_connected() {
            return Err(Error::NotConnected);
        }
        if self.graph.edge_count() == 0 {
            return Ok(vec![Face {
                boundary: Vec::new(),
                corners: Vec::new(),
                circuit: EdgeSet::new(),
            }]);
        }
        let mut seen = vec![[false; 2]; self.graph.edge_bound()];
        let mut faces = Vec::new();
        for h in self.half_edges() {
            if seen[h.edge][h.end as usize] {
                continue;
            }
            faces.push(self.trace(h, |x| seen[x.edge][x.end as usize] = true));
        }
        Ok(faces)
    }

    /// Euler's formula: V - E + F = 2.
    pub fn is_planar(&self) -> Result<bool> {
        let f = self.faces()?.len();
        Ok(self.graph.vertex_count() + f == self.graph.edge_count() + 2)
    }

    /// The facial circuits F(H) of a planar embedding of a 2-connected graph.
    pub fn facial_circuits(&self) -> Result<Vec<EdgeSet>> {
        if !self.is_planar()? {
            return Err(Error::NotPlanarEmbedding);
        }
        if !self.graph.is_two_connected() {
            return Err(Error::NotTwoConnected);
        }
        Ok(self.faces()?.into_iter().map(|f| f.circuit).collect())
    }

    fn face_index(&self, faces: &[Face], f: &Face) -> Result<usize> {
        let Some(&start) = f.boundary.first() else {
            return faces
                .iter()
                .position(|g| g.boundary.is_empty())
                .ok_or(Error::FaceNotInEmbedding);
        };
        if !self.graph.contains_edge(start.edge) {
            return Err(Error::FaceNotInEmbedding);
        }
        let mut canonical = f.boundary.clone();
        let first = (0..canonical.len())
            .min_by_key(|&i| canonical[i])
            .unwrap_or(0);
        canonical.rotate_left(first);
        faces
            .iter()
            .position(|g| g.boundary == canonical)
            .ok_or(Error::FaceNotInEmbedding)
    }

    /// All facial circuits except the one of `f`, in face order.
    pub fn facial_basis(&self, f: &Face) -> Result<CycleBasis> {
        let circuits = self.facial_circuits()?;
        let faces = self.faces()?;
        let skip = self.face_index(&faces, f)?;
        let elements = circuits
            .into_iter()
            .enumerate()
            .filter_map(|(i, c)| (i != skip).then_some(c))
            .collect();
        CycleBasis::new(elements)
    }

    /// Draws `chord` inside face `f`, attaching its first vertex at walk
    /// position `at[0]` and its last at `at[1]` (positions index
    /// `f.corners()`). Face `f` is replaced by two faces: the chord followed
    /// by the walk from the second attachment back to the first, and the
    /// reversed chord followed by the walk from the first attachment to the
    /// second. All other faces are unchanged.
    pub fn insert_path_chord(&self, f: &Face, chord: &PathChord, at: [usize; 2]) -> Result<Self> {
        let faces = self.faces()?;
        self.face_index(&faces, f)?;
        self.check_chord(chord)?;
        let (x, y) = chord.ends();
        for (pos, v) in at.into_iter().zip([x, y]) {
            if f.corners.get(pos) != Some(&v) {
                return Err(Error::EndpointNotOnFace(v));
            }
        }

        let n = f.boundary.len();
        let k = chord.edges.len();
        let mut graph = self.graph.clone();
        for &v in &chord.vertices[1..k] {
            graph.add_vertex(v)?;
        }
        for (i, &e) in chord.edges.iter().enumerate() {
            graph.add_edge(e, chord.ends[i][0], chord.ends[i][1])?;
        }

        let mut rotation = self.rotation.clone();
        rotation.resize(graph.vertex_bound(), Vec::new());
        for (pos, v, new_half) in [
            (at[0], x, chord.half_at(0, x)),
            (at[1], y, chord.half_at(k - 1, y)),
        ] {
            // the face's corner at v lies between twin(incoming) and the
            // outgoing half-edge
            let incoming = f.boundary[(pos + n - 1) % n].twin();
            let rot = &mut rotation[v];
            let i = rot
                .iter()
                .position(|&h| h == incoming)
                .expect("walk half-edge is in the rotation");
            rot.insert(i + 1, new_half);
        }
        for i in 1..k {
            let v = chord.vertices[i];
            rotation[v] = vec![chord.half_at(i - 1, v), chord.half_at(i, v)];
        }
        Ok(Embedding::assemble(graph, rotation))
    }

    /// Like [`Embedding::insert_path_chord`], attaching at the first walk
    /// positions of the chord's ends.
    pub fn insert_path_chord_between(&self, f: &Face, chord: &PathChord) -> Result<Self> {
        let (x, y) = chord.ends();
        let find = |v| {
            f.corners
                .iter()
                .position(|&c| c == v)
                .ok_or(Error::EndpointNotOnFace(v))
        };
        let at = [find(x)?, find(y)?];
        self.insert_path_chord(f, chord, at)
    }

    fn check_chord(&self, chord: &PathChord) -> Result<()> {
        let bad = |msg: String| Err(Error::PathNotDisjoint(msg));
        let k = chord.edges.len();
        if k == 0 || chord.vertices.len() != k + 1 || chord.ends.len() != k {
            return bad("chord needs k >= 1 edges and k + 1 vertices".into());
        }
        let (x, y) = chord.ends();
        if x == y {
            return bad(format!("chord starts and ends at {x}"));
        }
        for v in [x, y] {
            if !self.graph.contains_vertex(v) {
                return Err(Error::EndpointNotOnFace(v));
            }
        }
        for (i, &v) in chord.vertices[1..k].iter().enumerate() {
            if self.graph.contains_vertex(v) || chord.vertices[..=i].contains(&v) || v == y {
                return bad(format!("inner vertex {v} already exists"));
            }
        }
        for (i, &e) in chord.edges.iter().enumerate() {
            if self.graph.contains_edge(e) || chord.edges[..i].contains(&e) {
                return bad(format!("edge {e} already exists"));
            }
            let [a, b] = chord.ends[i];
            let (p, q) = (chord.vertices[i], chord.vertices[i + 1]);
            if !((a == p && b == q) || (a == q && b == p)) {
                return bad(format!("edge {e} does not join {p} and {q}"));
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for v in self.graph.vertices() {
            m.entry(&v, &self.rotation[v]);
        }
        m.finish()
    }
}
