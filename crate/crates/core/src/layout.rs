//! Straight-line drawings of embeddings.
//!
//! The outer face is pinned to a regular polygon and every other vertex
//! relaxes to the average of its neighbors. For a simple 3-connected graph
//! this gives a crossing-free convex drawing; anything else is drawn the
//! same way and labeled best-effort.

use std::fmt::Write as _;

use crate::embedding::Face;
use crate::graph::{Graph, VertexId};

pub const ITERATIONS: usize = 1000;
pub const TOLERANCE: f64 = 1e-9;

const SIZE: f64 = 400.0;
const MARGIN: f64 = 30.0;

#[derive(Clone, Debug, PartialEq)]
pub struct Layout {
    /// coordinates indexed by vertex id; `None` for absent ids
    pub position: Vec<Option<(f64, f64)>>,
    /// false when the graph is not simple and 3-connected (or a cycle), in
    /// which case edges may cross or overlap
    pub faithful: bool,
}

/// Barycentric layout with `outer`'s corners on the unit circle.
pub fn tutte_layout(g: &Graph, outer: &Face) -> Layout {
    let n = g.vertex_bound();
    let mut position: Vec<Option<(f64, f64)>> = vec![None; n];
    let mut fixed = vec![false; n];

    let mut ring: Vec<VertexId> = Vec::new();
    for &v in outer.corners() {
        if !fixed[v] {
            fixed[v] = true;
            ring.push(v);
        }
    }
    for (k, &v) in ring.iter().enumerate() {
        let angle = std::f64::consts::TAU * k as f64 / ring.len() as f64;
        position[v] = Some((angle.cos(), -angle.sin()));
    }
    for v in g.vertices() {
        position[v].get_or_insert((0.0, 0.0));
    }

    let mut neighbors: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for (_, [a, b]) in g.edges() {
        neighbors[a].push(b);
        neighbors[b].push(a);
    }
    for ns in &mut neighbors {
        ns.sort_unstable();
        ns.dedup();
    }

    let free: Vec<VertexId> = g
        .vertices()
        .filter(|&v| !fixed[v] && !neighbors[v].is_empty())
        .collect();
    for _ in 0..ITERATIONS {
        let mut moved: f64 = 0.0;
        for &v in &free {
            let (mut x, mut y) = (0.0, 0.0);
            for &w in &neighbors[v] {
                let (wx, wy) = position[w].unwrap();
                x += wx;
                y += wy;
            }
            let k = neighbors[v].len() as f64;
            let (x, y) = (x / k, y / k);
            let (ox, oy) = position[v].unwrap();
            moved = moved.max((x - ox).abs()).max((y - oy).abs());
            position[v] = Some((x, y));
        }
        if moved < TOLERANCE {
            break;
        }
    }

    Layout {
        position,
        faithful: is_simple(g) && (g.is_cycle() || is_three_connected(g)),
    }
}

fn is_simple(g: &Graph) -> bool {
    let mut pairs: Vec<[VertexId; 2]> = g.edges().map(|(_, [a, b])| [a.min(b), a.max(b)]).collect();
    let m = pairs.len();
    pairs.sort_unstable();
    pairs.dedup();
    pairs.len() == m
}

fn is_three_connected(g: &Graph) -> bool {
    g.vertex_count() >= 4
        && g.is_two_connected()
        && g.vertices().all(|v| {
            let mut h = g.clone();
            for (e, ends) in g.edges() {
                if ends.contains(&v) {
                    h.remove_edge(e);
                }
            }
            h.remove_isolated_vertex(v);
            h.is_two_connected()
        })
}

/// SVG drawing of `layout`, with fixed three-decimal coordinates so output
/// is byte-stable.
pub fn render_svg(g: &Graph, layout: &Layout) -> String {
    let span = SIZE - 2.0 * MARGIN;
    let place = |v: VertexId| {
        let (x, y) = layout.position[v].unwrap_or((0.0, 0.0));
        (
            MARGIN + (x + 1.0) / 2.0 * span,
            MARGIN + (y + 1.0) / 2.0 * span,
        )
    };
    let total = SIZE + if layout.faithful { 0.0 } else { 20.0 };
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{total}" viewBox="0 0 {SIZE} {total}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    if !layout.faithful {
        writeln!(
            out,
            r#"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="12" fill="firebrick">best-effort layout: not a simple 3-connected graph, edges may cross</text>"#,
            MARGIN / 2.0,
            SIZE + 10.0
        )
        .unwrap();
    }
    for (e, [a, b]) in g.edges() {
        let (x1, y1) = place(a);
        let (x2, y2) = place(b);
        writeln!(
            out,
            r#"<line id="e{e}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="black" stroke-width="1.5"/>"#
        )
        .unwrap();
    }
    for v in g.vertices() {
        let (x, y) = place(v);
        writeln!(
            out,
            r#"<circle id="v{v}" cx="{x:.3}" cy="{y:.3}" r="9" fill="white" stroke="black"/>"#
        )
        .unwrap();
        writeln!(
            out,
            r#"<text x="{x:.3}" y="{:.3}" font-family="sans-serif" font-size="10" text-anchor="middle">{v}</text>"#,
            y + 3.5
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle_space::{find_simple_basis_bruteforce, BasisSearch};
    use crate::embedder::embed_from_simple_basis;
    use crate::embedding::tests::planar_k4;
    use crate::embedding::{Embedding, PathChord};

    fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    }

    /// Proper crossing of two segments with no shared endpoint.
    fn segments_cross(p: [(f64, f64); 2], q: [(f64, f64); 2]) -> bool {
        let d1 = cross(q[0], q[1], p[0]);
        let d2 = cross(q[0], q[1], p[1]);
        let d3 = cross(p[0], p[1], q[0]);
        let d4 = cross(p[0], p[1], q[1]);
        d1 * d2 < 0.0 && d3 * d4 < 0.0
    }

    #[test]
    fn k4_interior_vertex_is_centroid() {
        let emb = planar_k4();
        let faces = emb.faces().unwrap();
        let layout = tutte_layout(emb.graph(), &faces[0]);
        assert!(layout.faithful);
        let inner = (0..4).find(|v| !faces[0].corners().contains(v)).unwrap();
        let (x, y) = layout.position[inner].unwrap();
        let (mut cx, mut cy) = (0.0, 0.0);
        for &v in faces[0].corners() {
            let (a, b) = layout.position[v].unwrap();
            cx += a / 3.0;
            cy += b / 3.0;
        }
        assert!((x - cx).abs() < 1e-6 && (y - cy).abs() < 1e-6);
    }

    /// Adds straight chords across faces until none fits without a
    /// parallel edge.
    fn saturate(mut emb: Embedding) -> Embedding {
        let mut next = emb.graph().edge_bound();
        'grow: loop {
            let faces = emb.faces().unwrap();
            for f in &faces {
                let c = f.corners();
                for i in 0..c.len() {
                    for j in i + 2..c.len() {
                        let adjacent = emb
                            .graph()
                            .edges()
                            .any(|(_, [a, b])| [a, b] == [c[i], c[j]] || [b, a] == [c[i], c[j]]);
                        if c[i] == c[j] || adjacent {
                            continue;
                        }
                        let chord = PathChord::new(vec![c[i], c[j]], vec![next]);
                        emb = emb.insert_path_chord(f, &chord, [i, j]).unwrap();
                        next += 1;
                        continue 'grow;
                    }
                }
            }
            return emb;
        }
    }

    #[test]
    fn three_connected_drawings_have_no_crossings() {
        let mut checked = 0;
        for seed in 0..200 {
            let (_, emb) = crate::oracle::random_planar_two_connected(seed, 8);
            let emb = if seed % 2 == 0 { saturate(emb) } else { emb };
            let g = emb.graph().clone();
            let faces = emb.faces().unwrap();
            let outer = faces.iter().max_by_key(|f| f.len()).unwrap();
            let layout = tutte_layout(&g, outer);
            if !layout.faithful {
                continue;
            }
            checked += 1;
            let seg: Vec<_> = g
                .edges()
                .map(|(_, [a, b])| {
                    (
                        [a, b],
                        [layout.position[a].unwrap(), layout.position[b].unwrap()],
                    )
                })
                .collect();
            for (i, (ei, pi)) in seg.iter().enumerate() {
                for (ej, pj) in &seg[i + 1..] {
                    if ei.iter().any(|v| ej.contains(v)) {
                        continue;
                    }
                    assert!(
                        !segments_cross(*pi, *pj),
                        "seed {seed}: {ei:?} crosses {ej:?}"
                    );
                }
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn labels_and_determinism() {
        let g = Graph::theta(&[1, 2, 2]);
        let BasisSearch::Found(b) = find_simple_basis_bruteforce(&g, 1000).unwrap() else {
            panic!("theta graphs are planar");
        };
        let emb = embed_from_simple_basis(&g, &b).unwrap().embedding;
        let faces = emb.faces().unwrap();
        let layout = tutte_layout(emb.graph(), &faces[0]);
        let svg = render_svg(emb.graph(), &layout);
        assert_eq!(
            svg,
            render_svg(emb.graph(), &tutte_layout(emb.graph(), &faces[0]))
        );
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<line").count(), emb.graph().edge_count());
        assert_eq!(svg.contains("best-effort"), !layout.faithful);

        let k4 = planar_k4();
        let svg = render_svg(
            k4.graph(),
            &tutte_layout(k4.graph(), &k4.faces().unwrap()[0]),
        );
        assert!(!svg.contains("best-effort"));
    }

    #[test]
    fn three_connectivity() {
        assert!(is_three_connected(&Graph::complete(4)));
        assert!(is_three_connected(&Graph::complete(5)));
        assert!(!is_three_connected(&Graph::cycle(5)));
        assert!(!is_three_connected(&Graph::theta(&[2, 2, 2])));
        assert!(!is_simple(&Graph::cycle(2)));
    }
}
