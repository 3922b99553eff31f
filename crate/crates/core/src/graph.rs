//! Undirected loopless multigraphs with stable vertex and edge ids.
//!
//! Ids are plain integers. Subgraph operations keep the ids of everything
//! they retain, so edge sets computed on a graph stay meaningful on its
//! subgraphs and on the graphs it was cut from.

use std::fmt;

use crate::cycle_space::EdgeSet;
use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Default)]
pub struct Graph {
    present: Vec<bool>,
    edges: Vec<Option<[VertexId; 2]>>,
    vertex_count: usize,
    edge_count: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// A graph on vertices `0..n` with no edges.
    pub fn with_vertices(n: usize) -> Self {
        Graph {
            present: vec![true; n],
            edges: Vec::new(),
            vertex_count: n,
            edge_count: 0,
        }
    }

    /// A graph on `0..n` whose edges get ids `0..edges.len()` in order.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Graph::with_vertices(n);
        for (id, &(u, v)) in edges.iter().enumerate() {
            g.add_edge(id, u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: VertexId) -> Result<()> {
        if self.contains_vertex(v) {
            return Err(Error::DuplicateVertex(v));
        }
        if v >= self.present.len() {
            self.present.resize(v + 1, false);
        }
        self.present[v] = true;
        self.vertex_count += 1;
        Ok(())
    }

    pub fn add_edge(&mut self, id: EdgeId, u: VertexId, v: VertexId) -> Result<()> {
        if self.contains_edge(id) {
            return Err(Error::DuplicateEdgeId(id));
        }
        if u == v {
            return Err(Error::Loop(id));
        }
        for w in [u, v] {
            if !self.contains_vertex(w) {
                return Err(Error::UnknownVertex(w));
            }
        }
        if id >= self.edges.len() {
            self.edges.resize(id + 1, None);
        }
        self.edges[id] = Some([u, v]);
        self.edge_count += 1;
        Ok(())
    }

    pub(crate) fn remove_edge(&mut self, id: EdgeId) {
        if let Some(slot) = self.edges.get_mut(id) {
            if slot.take().is_some() {
                self.edge_count -= 1;
            }
        }
    }

    /// Removes a vertex that has no incident edges left.
    pub(crate) fn remove_isolated_vertex(&mut self, v: VertexId) {
        debug_assert!(self.edges().all(|(_, [a, b])| a != v && b != v));
        if self.contains_vertex(v) {
            self.present[v] = false;
            self.vertex_count -= 1;
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// e(G), the number of edges.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// One past the largest vertex id ever used; sizes vertex-indexed tables.
    pub fn vertex_bound(&self) -> usize {
        self.present.len()
    }

    /// One past the largest edge id ever used; sizes edge-indexed tables.
    pub fn edge_bound(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.present.get(v).copied().unwrap_or(false)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        matches!(self.edges.get(e), Some(Some(_)))
    }

    pub fn endpoints(&self, e: EdgeId) -> Option<[VertexId; 2]> {
        self.edges.get(e).copied().flatten()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.present
            .iter()
            .enumerate()
            .filter_map(|(v, &p)| p.then_some(v))
    }

    /// Edges in ascending id order.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, [VertexId; 2])> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(e, ends)| ends.map(|ends| (e, ends)))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges().map(|(e, _)| e)
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edge_ids().collect()
    }

    /// Per-vertex incidence lists `(edge, other endpoint)`, edges ascending.
    /// Indexed by vertex id; absent vertices get an empty list.
    pub fn incidence(&self) -> Vec<Vec<(EdgeId, VertexId)>> {
        let mut adj = vec![Vec::new(); self.vertex_bound()];
        for (e, [u, v]) in self.edges() {
            adj[u].push((e, v));
            adj[v].push((e, u));
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_bound()];
        for (_, [u, v]) in self.edges() {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges().filter(|&(_, [a, b])| a == v || b == v).count()
    }

    /// Number of connected components, counting isolated vertices.
    pub fn component_count(&self) -> usize {
        let adj = self.incidence();
        let mut seen = vec![false; self.vertex_bound()];
        let mut count = 0;
        let mut stack = Vec::new();
        for root in self.vertices() {
            if seen[root] {
                continue;
            }
            count += 1;
            seen[root] = true;
            stack.push(root);
            while let Some(v) = stack.pop() {
                for &(_, w) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Connected, at least two vertices, minimum degree two and no cut
    /// vertex. A 2-cycle (two parallel edges) qualifies.
    pub fn is_two_connected(&self) -> bool {
        if self.vertex_count < 2 || !self.is_connected() {
            return false;
        }
        let deg = self.degrees();
        if self.vertices().any(|v| deg[v] < 2) {
            return false;
        }
        self.block_edge_sets().len() == 1
    }

    /// Connected with every vertex of degree exactly two.
    pub fn is_cycle(&self) -> bool {
        if self.vertex_count == 0 || !self.is_connected() {
            return false;
        }
        let deg = self.degrees();
        self.vertices().all(|v| deg[v] == 2)
    }

    /// Edge sets of the blocks, each sorted ascending, blocks ordered by
    /// their smallest edge id.
    fn block_edge_sets(&self) -> Vec<Vec<EdgeId>> {
        const UNSEEN: usize = usize::MAX;
        let adj = self.incidence();
        let n = self.vertex_bound();
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut time = 0;
        let mut edge_stack: Vec<EdgeId> = Vec::new();
        let mut blocks = Vec::new();
        // (vertex, edge to parent, next incidence index)
        let mut frames: Vec<(VertexId, Option<EdgeId>, usize)> = Vec::new();

        for root in self.vertices() {
            if disc[root] != UNSEEN {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            frames.push((root, None, 0));
            while let Some(frame) = frames.last_mut() {
                let (v, parent_edge, idx) = *frame;
                if idx < adj[v].len() {
                    frame.2 += 1;
                    let (e, w) = adj[v][idx];
                    if Some(e) == parent_edge {
                        continue;
                    }
                    if disc[w] == UNSEEN {
                        edge_stack.push(e);
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        frames.push((w, Some(e), 0));
                    } else if disc[w] < disc[v] {
                        edge_stack.push(e);
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    frames.pop();
                    if let (Some(pe), Some(&(u, _, _))) = (parent_edge, frames.last()) {
                        low[u] = low[u].min(low[v]);
                        if low[v] >= disc[u] {
                            let mut block = Vec::new();
                            while let Some(f) = edge_stack.pop() {
                                block.push(f);
                                if f == pe {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            blocks.push(block);
                        }
                    }
                }
            }
        }
        blocks.sort();
        blocks
    }

    /// Maximal 2-connected subgraphs and bridges. Every edge lies in exactly
    /// one block; isolated vertices belong to none.
    pub fn block_decomposition(&self) -> Vec<Graph> {
        self.block_edge_sets()
            .into_iter()
            .map(|edges| {
                let set: EdgeSet = edges.into_iter().collect();
                self.induced_edge_subgraph(&set)
                    .expect("block edges belong to the graph")
            })
            .collect()
    }

    /// The subgraph whose edges are `x` and whose vertices are their endpoints.
    pub fn induced_edge_subgraph(&self, x: &EdgeSet) -> Result<Graph> {
        let mut sub = Graph::new();
        for e in x.iter() {
            let [u, v] = self.endpoints(e).ok_or(Error::UnknownEdgeId(e))?;
            for w in [u, v] {
                if !sub.contains_vertex(w) {
                    sub.add_vertex(w)?;
                }
            }
            sub.add_edge(e, u, v)?;
        }
        Ok(sub)
    }

    pub fn check_edges(&self, x: &EdgeSet) -> Result<()> {
        match x.iter().find(|&e| !self.contains_edge(e)) {
            Some(e) => Err(Error::UnknownEdgeId(e)),
            None => Ok(()),
        }
    }

    /// All threads of a 2-connected graph that is not a cycle, ordered by
    /// smallest edge id. Each thread starts at its lower-numbered end.
    pub fn threads(&self) -> Result<Vec<Thread>> {
        if !self.is_two_connected() {
            return Err(Error::NotTwoConnected);
        }
        if self.is_cycle() {
            return Err(Error::IsACycle);
        }
        let adj = self.incidence();
        let deg = self.degrees();
        let mut used = vec![false; self.edge_bound()];
        let mut threads = Vec::new();
        for start in self.vertices().filter(|&v| deg[v] != 2) {
            for &(first, next) in &adj[start] {
                if used[first] {
                    continue;
                }
                used[first] = true;
                let mut vertices = vec![start, next];
                let mut edges = vec![first];
                let mut cur = next;
                let mut via = first;
                while deg[cur] == 2 {
                    let &(e, w) = adj[cur]
                        .iter()
                        .find(|&&(e, _)| e != via)
                        .expect("degree-2 vertex has a second edge");
                    used[e] = true;
                    edges.push(e);
                    vertices.push(w);
                    via = e;
                    cur = w;
                }
                threads.push(Thread { vertices, edges });
            }
        }
        threads.sort_by_key(Thread::min_edge);
        Ok(threads)
    }

    /// A thread whose removal leaves the graph 2-connected; among all such
    /// threads, the one with the smallest minimum edge id.
    pub fn find_reducible_thread(&self) -> Result<Thread> {
        for t in self.threads()? {
            if self.remove_thread(&t)?.is_two_connected() {
                return Ok(t);
            }
        }
        Err(Error::InternalContradiction(
            "2-connected non-cycle graph without a reducible thread".into(),
        ))
    }

    /// Deletes the edges and inner vertices of `t`, keeping its ends.
    pub fn remove_thread(&self, t: &Thread) -> Result<Graph> {
        self.validate_thread(t)?;
        let mut g = self.clone();
        for &e in &t.edges {
            g.remove_edge(e);
        }
        for &v in t.inner_vertices() {
            g.remove_isolated_vertex(v);
        }
        Ok(g)
    }

    fn validate_thread(&self, t: &Thread) -> Result<()> {
        let bad = |msg: String| Err(Error::NotAThread(msg));
        if t.edges.is_empty() || t.vertices.len() != t.edges.len() + 1 {
            return bad("thread needs k >= 1 edges and k + 1 vertices".into());
        }
        for (i, &e) in t.edges.iter().enumerate() {
            let Some([a, b]) = self.endpoints(e) else {
                return bad(format!("edge {e} is not in the graph"));
            };
            let (x, y) = (t.vertices[i], t.vertices[i + 1]);
            if !((a == x && b == y) || (a == y && b == x)) {
                return bad(format!("edge {e} does not join {x} and {y}"));
            }
        }
        let deg = self.degrees();
        for &v in t.inner_vertices() {
            if deg[v] != 2 {
                return bad(format!("inner vertex {v} has degree {}", deg[v]));
            }
        }
        let (x, y) = t.ends();
        for v in [x, y] {
            if deg[v] == 2 {
                return bad(format!("end vertex {v} has degree 2"));
            }
        }
        Ok(())
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("valid complete graph")
    }

    /// K_{a,b} with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::from_edges(a + b, &edges).expect("valid complete bipartite graph")
    }

    /// The cycle `0-1-...-(n-1)-0`; `n = 2` gives two parallel edges.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 2, "a cycle needs at least two vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    /// Internally disjoint paths of the given lengths between vertices 0 and 1.
    /// Inner vertices are numbered from 2 in path order.
    pub fn theta(lengths: &[usize]) -> Graph {
        let mut edges = Vec::new();
        let mut next = 2;
        for &len in lengths {
            assert!(len >= 1);
            let mut prev = 0;
            for _ in 1..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, 1));
        }
        Graph::from_edges(next, &edges).expect("valid theta graph")
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices().eq(other.vertices()) && self.edges().eq(other.edges())
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertices().collect::<Vec<_>>())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A maximal path whose inner vertices have degree two in the host graph
/// and whose ends do not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thread {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl Thread {
    /// Builds a thread without checking it against any graph.
    pub fn new(vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Self {
        Thread { vertices, edges }
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

    pub fn inner_vertices(&self) -> &[VertexId] {
        let n = self.vertices.len();
        if n <= 2 {
            &[]
        } else {
            &self.vertices[1..n - 1]
        }
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges.iter().copied().collect()
    }

    fn min_edge(&self) -> EdgeId {
        self.edges.iter().copied().min().unwrap_or(EdgeId::MAX)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Graph {
        // K4 minus edge {2,3}
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn two_connectivity_basics() {
        assert!(Graph::complete(4).is_two_connected());
        assert!(!Graph::from_edges(3, &[(0, 1), (1, 2)])
            .unwrap()
            .is_two_connected());
        assert!(Graph::cycle(2).is_two_connected());
        assert!(!Graph::from_edges(2, &[(0, 1)]).unwrap().is_two_connected());
        assert!(!Graph::with_vertices(1).is_two_connected());
        // bowtie: cut vertex 0
        let bowtie =
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert!(!bowtie.is_two_connected());
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!two_triangles.is_two_connected());
    }

    #[test]
    fn cycles() {
        assert!(Graph::cycle(3).is_cycle());
        assert!(!Graph::complete(4).is_cycle());
        assert!(Graph::cycle(2).is_cycle());
        assert!(!Graph::new().is_cycle());
    }

    #[test]
    fn no_loops() {
        let mut g = Graph::with_vertices(2);
        assert_eq!(g.add_edge(0, 1, 1), Err(Error::Loop(0)));
        g.add_edge(0, 0, 1).unwrap();
        assert_eq!(g.add_edge(0, 0, 1), Err(Error::DuplicateEdgeId(0)));
        assert_eq!(g.add_edge(1, 0, 5), Err(Error::UnknownVertex(5)));
    }

    #[test]
    fn threads_of_k4_are_single_edges() {
        let ts = Graph::complete(4).threads().unwrap();
        assert_eq!(ts.len(), 6);
        assert!(ts.iter().all(|t| t.edges().len() == 1));
    }

    #[test]
    fn threads_of_theta() {
        let g = Graph::theta(&[1, 2, 2]);
        let ts = g.threads().unwrap();
        assert_eq!(ts.len(), 3);
        let lens: Vec<_> = ts.iter().map(|t| t.edges().len()).collect();
        assert_eq!(lens, vec![1, 2, 2]);
        for t in &ts {
            let (x, y) = t.ends();
            assert_eq!((x.min(y), x.max(y)), (0, 1));
        }
        assert_eq!(ts[1].inner_vertices(), &[2]);
    }

    #[test]
    fn threads_reject_cycles_and_non_two_connected() {
        assert_eq!(Graph::cycle(3).threads(), Err(Error::IsACycle));
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.threads(), Err(Error::NotTwoConnected));
        assert_eq!(path.find_reducible_thread(), Err(Error::NotTwoConnected));
    }

    #[test]
    fn reducible_thread_in_k4_every_edge_works() {
        let g = Graph::complete(4);
        for e in 0..6 {
            let [u, v] = g.endpoints(e).unwrap();
            let t = Thread::new(vec![u, v], vec![e]);
            assert!(g.remove_thread(&t).unwrap().is_two_connected());
        }
        let t = g.find_reducible_thread().unwrap();
        assert_eq!(t.edges(), &[0]);
    }

    #[test]
    fn reducible_thread_in_theta() {
        let g = Graph::theta(&[1, 2, 2]);
        for t in g.threads().unwrap() {
            let h = g.remove_thread(&t).unwrap();
            assert!(h.is_cycle());
            assert!(h.is_two_connected());
        }
        assert_eq!(g.find_reducible_thread().unwrap().edges(), &[0]);
    }

    #[test]
    fn reducible_thread_skips_irreducible_minimum() {
        // triangle 0-1-2 with {0,1} and {1,2} doubled; dropping edge 0 = {2,0}
        // makes vertex 1 a cut vertex
        let g = Graph::from_edges(3, &[(2, 0), (0, 1), (0, 1), (1, 2), (1, 2)]).unwrap();
        let first = &g.threads().unwrap()[0];
        assert_eq!(first.edges(), &[0]);
        assert!(!g.remove_thread(first).unwrap().is_two_connected());
        let t = g.find_reducible_thread().unwrap();
        assert_eq!(t.edges(), &[1]);
        assert!(g.remove_thread(&t).unwrap().is_two_connected());

        let t = diamond().find_reducible_thread().unwrap();
        assert_eq!(t.edges(), &[0]);
    }

    #[test]
    fn remove_thread_keeps_ends() {
        let g = Graph::theta(&[1, 2, 2]);
        let t = Thread::new(vec![0, 2, 1], vec![1, 2]);
        let h = g.remove_thread(&t).unwrap();
        assert_eq!(h.vertices().collect::<Vec<_>>(), vec![0, 1, 3]);
        assert_eq!(h.edge_ids().collect::<Vec<_>>(), vec![0, 3, 4]);

        let k4 = Graph::complete(4);
        let h = k4.remove_thread(&Thread::new(vec![0, 1], vec![0])).unwrap();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.edge_count(), 5);
    }

    #[test]
    fn remove_thread_rejects_non_threads() {
        let g = Graph::theta(&[1, 2, 2]);
        // stops at a degree-2 vertex
        let t = Thread::new(vec![0, 2], vec![1]);
        assert!(matches!(g.remove_thread(&t), Err(Error::NotAThread(_))));
        // wrong endpoints
        let t = Thread::new(vec![0, 3], vec![1]);
        assert!(matches!(g.remove_thread(&t), Err(Error::NotAThread(_))));
        let t = Thread::new(vec![0, 1], vec![99]);
        assert!(matches!(g.remove_thread(&t), Err(Error::NotAThread(_))));
    }

    #[test]
    fn induced_subgraph() {
        let k4 = Graph::complete(4);
        assert_eq!(
            k4.induced_edge_subgraph(&EdgeSet::new()).unwrap(),
            Graph::new()
        );
        // edges 0:{0,1} 1:{0,2} 3:{1,2}
        let tri = k4
            .induced_edge_subgraph(&[0, 1, 3].into_iter().collect())
            .unwrap();
        assert!(tri.is_cycle());
        assert_eq!(tri.vertices().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(
            k4.induced_edge_subgraph(&[0, 17].into_iter().collect()),
            Err(Error::UnknownEdgeId(17))
        );
    }

    #[test]
    fn blocks() {
        let bowtie =
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let blocks = bowtie.block_decomposition();
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(Graph::is_cycle));

        let k4 = Graph::complete(4);
        assert_eq!(k4.block_decomposition(), vec![k4.clone()]);

        let edge = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(edge.block_decomposition(), vec![edge.clone()]);

        // triangle with a pendant path and a parallel pair hanging off it
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (4, 5)])
            .unwrap();
        let blocks = g.block_decomposition();
        let sets: Vec<Vec<_>> = blocks.iter().map(|b| b.edge_ids().collect()).collect();
        assert_eq!(sets, vec![vec![0, 1, 2], vec![3], vec![4], vec![5, 6]]);
    }
}
