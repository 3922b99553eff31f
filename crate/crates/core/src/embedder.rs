//! Builds a planar embedding realizing a given simple cycle basis.
//!
//! The graph is peeled down to a cycle by repeatedly removing a reducible
//! thread `T`. The basis follows along: if one member `C` contains `E(T)` it
//! is dropped, if two members `S` and `Z` do they are replaced by `S + Z`.
//! Unwinding, each thread is drawn back as a path-chord: in the first case
//! inside the residual face (so that one side becomes `C`), in the second
//! inside the face `S + Z` (splitting it into `S` and `Z`).

use crate::cycle_space::{
    check_basis, find_simple_basis_bruteforce, BasisSearch, CycleBasis, EdgeSet, SearchAttestation,
};
use crate::embedding::{Embedding, Face, HalfEdge, PathChord};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// An embedding together with the one face that is not a basis member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingWithResidualFace {
    pub embedding: Embedding,
    pub residual_face: Face,
}

impl EmbeddingWithResidualFace {
    /// Facial circuits other than the residual one, in face order.
    pub fn basis_circuits(&self) -> Result<Vec<EdgeSet>> {
        let faces = self.embedding.faces()?;
        let skip = faces
            .iter()
            .position(|f| f == &self.residual_face)
            .ok_or(Error::FaceNotInEmbedding)?;
        Ok(faces
            .into_iter()
            .enumerate()
            .filter_map(|(i, f)| (i != skip).then(|| f.circuit().clone()))
            .collect())
    }
}

enum Surgery {
    Dropped(EdgeSet),
    Merged(EdgeSet, EdgeSet),
}

struct Reduction {
    chord: PathChord,
    thread_edges: EdgeSet,
    surgery: Surgery,
}

/// Embeds a 2-connected graph so that its faces are the members of `b`
/// plus one residual face, whose circuit is the GF(2) sum of `b`.
pub fn embed_from_simple_basis(g: &Graph, b: &CycleBasis) -> Result<EmbeddingWithResidualFace> {
    if !g.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    let report = check_basis(g, b)?;
    if !report.is_simple() {
        return Err(Error::NotASimpleBasis(Box::new(report)));
    }

    let mut graph = g.clone();
    let mut basis: Vec<EdgeSet> = b.elements().to_vec();
    let mut stack = Vec::with_capacity(g.edge_count());
    while !graph.is_cycle() {
        let thread = graph.find_reducible_thread()?;
        let thread_edges = thread.edge_set();
        let covering: Vec<usize> = (0..basis.len())
            .filter(|&i| !basis[i].is_disjoint(&thread_edges))
            .collect();
        if let Some(&i) = covering
            .iter()
            .find(|&&i| !thread_edges.is_subset(&basis[i]))
        {
            return Err(Error::InternalContradiction(format!(
                "basis circuit {} meets thread {:?} without containing it",
                basis[i], thread_edges
            )));
        }
        let surgery = match covering[..] {
            [] => {
                return Err(Error::ThreadCoverViolation(format!(
                    "thread {thread_edges:?} lies in no basis member"
                )))
            }
            [i] => Surgery::Dropped(basis.remove(i)),
            [i, j] => {
                let common = basis[i].intersection(&basis[j]);
                if common != thread_edges {
                    return Err(Error::ThreadCoverViolation(format!(
                        "members {} and {} share {:?}, not just thread {:?}",
                        basis[i], basis[j], common, thread_edges
                    )));
                }
                let z = basis.remove(j);
                let s = std::mem::replace(&mut basis[i], EdgeSet::new());
                basis[i] = &s ^ &z;
                Surgery::Merged(s, z)
            }
            _ => {
                return Err(Error::InternalContradiction(format!(
                    "thread {thread_edges:?} lies in {} members of a simple basis",
                    covering.len()
                )))
            }
        };
        let chord = PathChord::from_thread(&graph, &thread)?;
        graph = graph.remove_thread(&thread)?;
        if cfg!(debug_assertions) {
            let reduced = check_basis(&graph, &CycleBasis::new(basis.clone())?)?;
            if !reduced.is_simple() {
                return Err(Error::InternalContradiction(format!(
                    "reduced basis is not simple: {reduced}"
                )));
            }
        }
        stack.push(Reduction {
            chord,
            thread_edges,
            surgery,
        });
    }

    if basis.len() != 1 || basis[0] != graph.edge_set() {
        return Err(Error::InternalContradiction(format!(
            "cycle reached with basis {basis:?}"
        )));
    }
    let mut emb = Embedding::of_cycle(&graph)?;
    let mut residual = emb.faces()?[1].boundary()[0];

    while let Some(step) = stack.pop() {
        let (x, y) = step.chord.ends();
        match step.surgery {
            Surgery::Dropped(c) => {
                let d = emb.face_of(residual);
                let arc = c.difference(&step.thread_edges);
                if !arc.is_subset(d.circuit()) {
                    return Err(Error::InternalContradiction(format!(
                        "residual face {} does not contain {}",
                        d.circuit(),
                        arc
                    )));
                }
                let at = attachment(&d, x, y, &arc)?;
                emb = emb.insert_path_chord(&d, &step.chord, at)?;
                let h = chord_half_edge(&emb, &step.chord, x);
                residual = if emb.face_of(h).circuit() == &c {
                    h.twin()
                } else {
                    h
                };
            }
            Surgery::Merged(s, z) => {
                let sum = &s ^ &z;
                let d = emb.face_of(residual);
                let target = emb
                    .faces()?
                    .into_iter()
                    .find(|f| f.circuit() == &sum && f != &d);
                let Some(target) = target else {
                    if d.circuit() == &sum {
                        let mut report = report.clone();
                        report.note = Some(format!(
                            "residual face equals the merged circuit {sum}; the basis is dependent"
                        ));
                        return Err(Error::NotASimpleBasis(Box::new(report)));
                    }
                    return Err(Error::InternalContradiction(format!(
                        "no face with circuit {sum}"
                    )));
                };
                let arc = s.difference(&step.thread_edges);
                let at = attachment(&target, x, y, &arc)?;
                emb = emb.insert_path_chord(&target, &step.chord, at)?;
            }
        }
    }

    let residual_face = emb.face_of(residual);
    Ok(EmbeddingWithResidualFace {
        embedding: emb,
        residual_face,
    })
}

/// The half-edge of the chord's first edge that sits at `x`.
fn chord_half_edge(emb: &Embedding, chord: &PathChord, x: VertexId) -> HalfEdge {
    let e = chord.edges()[0];
    let [a, _] = emb.graph().endpoints(e).expect("chord edge was inserted");
    HalfEdge::new(e, u8::from(a != x))
}

/// Walk positions of `x` and `y` on `face` such that one of the two arcs
/// between them carries exactly the edges `arc`. Earliest positions win.
fn attachment(face: &Face, x: VertexId, y: VertexId, arc: &EdgeSet) -> Result<[usize; 2]> {
    let corners = face.corners();
    for i in (0..corners.len()).filter(|&i| corners[i] == x) {
        for j in (0..corners.len()).filter(|&j| corners[j] == y) {
            if &face.arc(i, j) == arc || &face.arc(j, i) == arc {
                return Ok([i, j]);
            }
        }
    }
    Err(Error::InternalContradiction(format!(
        "no split of face {} between {x} and {y} isolates {arc}",
        face.circuit()
    )))
}

/// A positive planarity verdict with its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarityCertificate {
    pub basis: CycleBasis,
    pub embedding: EmbeddingWithResidualFace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisVerdict {
    Planar(Box<PlanarityCertificate>),
    NonPlanar(SearchAttestation),
}

impl BasisVerdict {
    pub fn is_planar(&self) -> bool {
        matches!(self, BasisVerdict::Planar(_))
    }
}

/// Decides planarity of a 2-connected graph by searching for a simple basis
/// and, if one exists, embedding it.
pub fn is_planar_via_basis(g: &Graph, budget: u64) -> Result<BasisVerdict> {
    match find_simple_basis_bruteforce(g, budget)? {
        BasisSearch::Found(basis) => {
            let embedding = embed_from_simple_basis(g, &basis)?;
            Ok(BasisVerdict::Planar(Box::new(PlanarityCertificate {
                basis,
                embedding,
            })))
        }
        BasisSearch::NoneFound(att) => Ok(BasisVerdict::NonPlanar(att)),
    }
}

/// Outcome for one block of a general graph. Bridges are planar outright.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockOutcome {
    Bridge,
    Decided(BasisVerdict),
    Unknown(Error),
}

/// Runs [`is_planar_via_basis`] on every block. The graph is planar iff
/// every block is.
pub fn planarity_by_blocks(g: &Graph, budget: u64) -> Vec<(Graph, BlockOutcome)> {
    g.block_decomposition()
        .into_iter()
        .map(|block| {
            let outcome = if block.edge_count() == 1 {
                BlockOutcome::Bridge
            } else {
                match is_planar_via_basis(&block, budget) {
                    Ok(v) => BlockOutcome::Decided(v),
                    Err(e) => BlockOutcome::Unknown(e),
                }
            };
            (block, outcome)
        })
        .collect()
}
