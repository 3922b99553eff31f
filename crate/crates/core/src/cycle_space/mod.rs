//! The cycle space of a graph over GF(2): membership, circuits, bases and
//! the simplicity condition (every edge in at most two basis members).

mod edge_set;
mod search;

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

pub use edge_set::{sym_diff, EdgeSet};
pub use search::{
    all_simple_bases, circuits, find_simple_basis_bruteforce, BasisSearch, SearchAttestation,
    DEFAULT_BASIS_BUDGET,
};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// An ordered list of distinct edge sets claimed to span the cycle space.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycleBasis {
    elements: Vec<EdgeSet>,
}

impl CycleBasis {
    pub fn new(elements: Vec<EdgeSet>) -> Result<Self> {
        for (i, a) in elements.iter().enumerate() {
            if let Some(j) = elements[i + 1..].iter().position(|b| a == b) {
                return Err(Error::DuplicateBasisElement(i, i + 1 + j));
            }
        }
        Ok(CycleBasis { elements })
    }

    pub fn elements(&self) -> &[EdgeSet] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<EdgeSet> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, EdgeSet> {
        self.elements.iter()
    }

    /// GF(2) sum of all elements.
    pub fn sum(&self) -> EdgeSet {
        let mut acc = EdgeSet::new();
        for x in &self.elements {
            acc ^= x;
        }
        acc
    }
}

/// Incremental row-echelon form over GF(2). Rows are only ever appended, so
/// truncating back to an earlier length undoes insertions.
#[derive(Clone, Debug, Default)]
pub(crate) struct Echelon {
    rows: Vec<(EdgeId, EdgeSet)>,
}

impl Echelon {
    /// Reduces `v` against the rows; inserts and returns true if something
    /// nonzero is left.
    pub(crate) fn insert(&mut self, mut v: EdgeSet) -> bool {
        for (pivot, row) in &self.rows {
            if v.contains(*pivot) {
                v ^= row;
            }
        }
        match v.first() {
            Some(pivot) => {
                self.rows.push((pivot, v));
                true
            }
            None => false,
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn truncate(&mut self, rank: usize) {
        self.rows.truncate(rank);
    }
}

/// Rank over GF(2) of a family of edge sets.
pub fn gf2_rank<'a>(sets: impl IntoIterator<Item = &'a EdgeSet>) -> usize {
    let mut ech = Echelon::default();
    for s in sets {
        ech.insert(s.clone());
    }
    ech.rank()
}

fn parity_degrees(g: &Graph, x: &EdgeSet) -> Result<Vec<usize>> {
    let mut deg = vec![0usize; g.vertex_bound()];
    for e in x.iter() {
        let [u, v] = g.endpoints(e).ok_or(Error::UnknownEdgeId(e))?;
        deg[u] += 1;
        deg[v] += 1;
    }
    Ok(deg)
}

/// True iff every vertex of the subgraph induced by `x` has even degree.
pub fn is_cycle_space_member(g: &Graph, x: &EdgeSet) -> Result<bool> {
    Ok(parity_degrees(g, x)?.iter().all(|d| d % 2 == 0))
}

/// True iff `x` is the edge set of a cycle: nonempty, connected, all
/// degrees exactly two.
pub fn is_circuit(g: &Graph, x: &EdgeSet) -> Result<bool> {
    let deg = parity_degrees(g, x)?;
    if x.is_empty() || deg.iter().any(|&d| d != 0 && d != 2) {
        return Ok(false);
    }
    Ok(g.induced_edge_subgraph(x)?.is_connected())
}

/// e(G) - |V(G)| + number of components.
pub fn cycle_space_dimension(g: &Graph) -> usize {
    g.edge_count() + g.component_count() - g.vertex_count()
}

/// How many elements of `b` contain each edge.
pub fn edge_multiplicity(b: &CycleBasis) -> BTreeMap<EdgeId, usize> {
    let mut counts = BTreeMap::new();
    for x in b.iter() {
        for e in x.iter() {
            *counts.entry(e).or_insert(0) += 1;
        }
    }
    counts
}

/// Everything that can go wrong with a claimed simple basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityReport {
    pub element_count: usize,
    pub dimension: usize,
    pub rank: usize,
    /// Indices of empty elements.
    pub empty_elements: Vec<usize>,
    /// Indices of elements with an odd-degree vertex.
    pub non_members: Vec<usize>,
    /// Indices of elements that are not circuits (includes non-members).
    pub non_circuits: Vec<usize>,
    /// Edges covered three or more times, with their multiplicity.
    pub overloaded_edges: Vec<(EdgeId, usize)>,
    /// Set by callers that found a basis-level contradiction after the
    /// element checks passed.
    pub note: Option<String>,
}

impl SimplicityReport {
    pub fn is_basis(&self) -> bool {
        self.empty_elements.is_empty()
            && self.non_members.is_empty()
            && self.rank == self.element_count
            && self.element_count == self.dimension
    }

    pub fn is_simple(&self) -> bool {
        self.is_basis()
            && self.non_circuits.is_empty()
            && self.overloaded_edges.is_empty()
            && self.note.is_none()
    }

    /// One line per problem found.
    pub fn diagnostics(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.element_count != self.dimension {
            out.push(format!(
                "wrong count: {} elements, cycle space dimension {}",
                self.element_count, self.dimension
            ));
        }
        if self.rank < self.element_count {
            out.push(format!(
                "dependent: rank {} of {} elements",
                self.rank, self.element_count
            ));
        }
        if !self.empty_elements.is_empty() {
            out.push(format!("empty elements: {}", join(&self.empty_elements)));
        }
        if !self.non_members.is_empty() {
            out.push(format!(
                "elements outside the cycle space: {}",
                join(&self.non_members)
            ));
        }
        if !self.non_circuits.is_empty() {
            out.push(format!(
                "non-circuit elements: {}",
                join(&self.non_circuits)
            ));
        }
        for &(e, k) in &self.overloaded_edges {
            out.push(format!("edge {e} lies in {k} elements"));
        }
        if let Some(note) = &self.note {
            out.push(note.clone());
        }
        out
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for SimplicityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let diags = self.diagnostics();
        if diags.is_empty() {
            f.write_str("simple basis")
        } else {
            f.write_str(&diags.join("; "))
        }
    }
}

/// Runs every basis and simplicity check on `b` against `g`.
pub fn check_basis(g: &Graph, b: &CycleBasis) -> Result<SimplicityReport> {
    for x in b.iter() {
        g.check_edges(x)?;
    }
    let mut report = SimplicityReport {
        element_count: b.len(),
        dimension: cycle_space_dimension(g),
        rank: gf2_rank(b.iter()),
        empty_elements: Vec::new(),
        non_members: Vec::new(),
        non_circuits: Vec::new(),
        overloaded_edges: Vec::new(),
        note: None,
    };
    for (i, x) in b.iter().enumerate() {
        if x.is_empty() {
            report.empty_elements.push(i);
        }
        if !is_cycle_space_member(g, x)? {
            report.non_members.push(i);
        }
        if !is_circuit(g, x)? {
            report.non_circuits.push(i);
        }
    }
    report.overloaded_edges = edge_multiplicity(b)
        .into_iter()
        .filter(|&(_, k)| k > 2)
        .collect();
    Ok(report)
}

/// Nonempty cycle-space members, independent, as many as the dimension.
pub fn is_basis(g: &Graph, b: &CycleBasis) -> Result<bool> {
    Ok(check_basis(g, b)?.is_basis())
}

/// A basis made of circuits with every edge in at most two of them.
pub fn is_simple_basis(g: &Graph, b: &CycleBasis) -> Result<bool> {
    Ok(check_basis(g, b)?.is_simple())
}

/// Fundamental circuits of a BFS spanning tree grown from the smallest
/// vertex, scanning incident edges by ascending id. One circuit per
/// non-tree edge, in ascending order of that edge.
pub fn fundamental_cycle_basis(g: &Graph) -> Result<CycleBasis> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let Some(root) = g.vertices().next() else {
        return Ok(CycleBasis::default());
    };
    let adj = g.incidence();
    let n = g.vertex_bound();
    let mut parent: Vec<Option<(EdgeId, usize)>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    let mut tree_edge = vec![false; g.edge_bound()];
    depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &(e, w) in &adj[v] {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = Some((e, v));
                tree_edge[e] = true;
                queue.push_back(w);
            }
        }
    }
    let mut elements = Vec::new();
    for (e, [mut u, mut v]) in g.edges() {
        if tree_edge[e] {
            continue;
        }
        let mut circuit = EdgeSet::new();
        circuit.insert(e);
        while u != v {
            if depth[u] < depth[v] {
                std::mem::swap(&mut u, &mut v);
            }
            let (pe, p) = parent[u].expect("non-root vertex has a parent");
            circuit.insert(pe);
            u = p;
        }
        elements.push(circuit);
    }
    CycleBasis::new(elements)
}
