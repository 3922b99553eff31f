//! Seeded random 2-connected planar graphs, grown from a triangle by
//! drawing path-chords inside faces.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embedding::{Embedding, PathChord};
use crate::graph::Graph;

/// A 2-connected simple planar graph on `n >= 3` vertices with an embedding
/// that is planar by construction. The same seed gives the same output.
pub fn random_planar_two_connected(seed: u64, n: usize) -> (Graph, Embedding) {
    assert!(n >= 3, "need at least three vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut emb = Embedding::of_cycle(&Graph::cycle(3)).expect("triangle");
    let mut next_vertex = 3;
    let mut next_edge = 3;
    while emb.graph().vertex_count() < n {
        let faces = emb.faces().expect("connected");
        let face = &faces[rng.gen_range(0..faces.len())];
        let len = face.len();
        let i = rng.gen_range(0..len);
        let j = (i + rng.gen_range(1..len)) % len;
        let (x, y) = (face.corners()[i], face.corners()[j]);
        let adjacent = emb
            .graph()
            .edges()
            .any(|(_, [a, b])| (a == x && b == y) || (a == y && b == x));
        let room = n - emb.graph().vertex_count();
        let inner = if !adjacent && rng.gen_bool(0.5) {
            0
        } else {
            rng.gen_range(1..=room.min(3))
        };
        let mut vertices = vec![x];
        vertices.extend(next_vertex..next_vertex + inner);
        vertices.push(y);
        let edges = (next_edge..next_edge + inner + 1).collect();
        next_vertex += inner;
        next_edge += inner + 1;
        emb = emb
            .insert_path_chord(face, &PathChord::new(vertices, edges), [i, j])
            .expect("fresh chord inside a face");
    }
    (emb.graph().clone(), emb)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_for_three() {
        let (g, emb) = random_planar_two_connected(7, 3);
        assert_eq!(g, Graph::cycle(3));
        assert!(emb.is_planar().unwrap());
    }

    #[test]
    fn deterministic_and_sound() {
        for seed in 0..40 {
            let n = 3 + (seed as usize % 20);
            let (g, emb) = random_planar_two_connected(seed, n);
            let (g2, emb2) = random_planar_two_connected(seed, n);
            assert_eq!(g, g2);
            assert_eq!(emb, emb2);
            assert_eq!(g.vertex_count(), n);
            assert!(g.is_two_connected());
            assert!(emb.is_planar().unwrap());
            // simple
            let mut pairs: Vec<_> = g.edges().map(|(_, [a, b])| (a.min(b), a.max(b))).collect();
            pairs.sort();
            pairs.dedup();
            assert_eq!(pairs.len(), g.edge_count());
        }
    }
}
