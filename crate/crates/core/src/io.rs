//! Text formats: edge lists, basis files, rotation systems, face reports.
//!
//! `#` starts a comment that runs to the end of the line. Writers produce
//! exactly what the readers accept, and `write(read(write(x)))` is
//! byte-identical to `write(x)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::cycle_space::{CycleBasis, EdgeSet};
use crate::embedder::EmbeddingWithResidualFace;
use crate::embedding::{Embedding, Face, HalfEdge};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

/// Lines with comments stripped, numbered from 1.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| {
        let l = l.split_once('#').map_or(l, |(before, _)| before);
        (i + 1, l.trim())
    })
}

fn number(line: usize, token: &str, what: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found {token:?}")))
}

/// `graph <n> <m>` followed by `<id> <u> <v>` per edge, ascending ids.
/// Vertices must be exactly `0..n`.
pub fn write_graph(g: &Graph) -> Result<String> {
    if g.vertices().enumerate().any(|(i, v)| i != v) {
        return Err(Error::NonDenseVertices);
    }
    let mut out = format!("graph {} {}\n", g.vertex_count(), g.edge_count());
    for (e, [u, v]) in g.edges() {
        writeln!(out, "{e} {u} {v}").unwrap();
    }
    Ok(out)
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let mut body = lines(text).filter(|(_, l)| !l.is_empty());
    let Some((hline, header)) = body.next() else {
        return Err(Error::parse(1, "missing `graph <n> <m>` header"));
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [kw, n, m] = fields[..] else {
        return Err(Error::parse(hline, "expected `graph <n> <m>`"));
    };
    if kw != "graph" {
        return Err(Error::parse(hline, "expected `graph <n> <m>`"));
    }
    let n = number(hline, n, "vertex count")?;
    let m = number(hline, m, "edge count")?;

    let mut g = Graph::with_vertices(n);
    let mut seen = 0;
    for (line, l) in body {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [id, u, v] = fields[..] else {
            return Err(Error::parse(line, "expected `<edge_id> <u> <v>`"));
        };
        let id = number(line, id, "edge id")?;
        let u = number(line, u, "vertex id")?;
        let v = number(line, v, "vertex id")?;
        if seen == m {
            return Err(Error::parse(
                line,
                format!("more than the {m} declared edges"),
            ));
        }
        g.add_edge(id, u, v)
            .map_err(|e| Error::parse(line, e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::parse(
            text.lines().count().max(1),
            format!("declared {m} edges, found {seen}"),
        ));
    }
    Ok(g)
}

/// One element per line, ids ascending.
pub fn write_basis(b: &CycleBasis) -> String {
    let mut out = String::new();
    for c in b.iter() {
        writeln!(out, "{c}").unwrap();
    }
    out
}

/// Reads elements until the first blank line that follows an element.
/// Repeated ids within a line and repeated elements are rejected.
pub fn read_basis(text: &str) -> Result<CycleBasis> {
    let mut elements: Vec<EdgeSet> = Vec::new();
    let mut first_line = BTreeMap::new();
    for (line, raw) in text.lines().enumerate().map(|(i, l)| (i + 1, l)) {
        let l = raw.split_once('#').map_or(raw, |(before, _)| before).trim();
        if l.is_empty() {
            if raw.trim().is_empty() && !elements.is_empty() {
                break;
            }
            continue;
        }
        let mut c = EdgeSet::new();
        for token in l.split_whitespace() {
            let e = number(line, token, "edge id")?;
            if !c.insert(e) {
                return Err(Error::parse(line, format!("edge {e} repeated")));
            }
        }
        if let Some(prev) = first_line.insert(c.clone(), line) {
            return Err(Error::parse(line, format!("same element as line {prev}")));
        }
        elements.push(c);
    }
    CycleBasis::new(elements)
}

/// `<v>: <e.end> ...` per vertex, ascending, each rotation starting at its
/// minimal half-edge.
pub fn write_embedding(emb: &Embedding) -> String {
    let mut out = String::new();
    for v in emb.graph().vertices() {
        write!(out, "{v}:").unwrap();
        for h in emb.rotation(v) {
            write!(out, " {h}").unwrap();
        }
        out.push('\n');
    }
    out
}

fn half_edge(line: usize, token: &str) -> Result<HalfEdge> {
    let bad = || Error::parse(line, format!("expected `<edge>.<end>`, found {token:?}"));
    let (e, end) = token.split_once('.').ok_or_else(bad)?;
    let e: EdgeId = e.parse().map_err(|_| bad())?;
    match end {
        "0" => Ok(HalfEdge::new(e, 0)),
        "1" => Ok(HalfEdge::new(e, 1)),
        _ => Err(bad()),
    }
}

/// Reads a rotation system; the graph is rebuilt from where each half-edge
/// sits (end 0 at the first endpoint, end 1 at the second).
pub fn read_embedding(text: &str) -> Result<Embedding> {
    let mut rotation: BTreeMap<VertexId, Vec<HalfEdge>> = BTreeMap::new();
    let mut sits: BTreeMap<EdgeId, [Option<VertexId>; 2]> = BTreeMap::new();
    for (line, l) in lines(text) {
        if l.is_empty() {
            continue;
        }
        let (v, rest) = l
            .split_once(':')
            .ok_or_else(|| Error::parse(line, "expected `<vertex>: <half-edges>`"))?;
        let v = number(line, v.trim(), "vertex id")?;
        if rotation.contains_key(&v) {
            return Err(Error::parse(line, format!("vertex {v} listed twice")));
        }
        let mut hs = Vec::new();
        for token in rest.split_whitespace() {
            let h = half_edge(line, token)?;
            let slot = &mut sits.entry(h.edge).or_default()[h.end as usize];
            if slot.is_some() {
                return Err(Error::parse(line, format!("half-edge {h} listed twice")));
            }
            *slot = Some(v);
            hs.push(h);
        }
        rotation.insert(v, hs);
    }
    let mut g = Graph::new();
    for &v in rotation.keys() {
        g.add_vertex(v)?;
    }
    for (e, ends) in sits {
        let [Some(a), Some(b)] = ends else {
            return Err(Error::InvalidRotation(format!(
                "edge {e} has only one half-edge"
            )));
        };
        g.add_edge(e, a, b)?;
    }
    Embedding::new(g, rotation)
}

/// One face per line, edge ids ascending.
pub fn write_face_report(faces: &[Face]) -> String {
    let mut out = String::new();
    for f in faces {
        writeln!(out, "{}", f.circuit()).unwrap();
    }
    out
}

/// `planar: yes`, the residual circuit, then the face report.
pub fn write_certificate(cert: &EmbeddingWithResidualFace) -> Result<String> {
    let faces = cert.embedding.faces()?;
    let mut out = String::from("planar: yes\n");
    writeln!(out, "residual: {}", cert.residual_face.circuit()).unwrap();
    writeln!(out, "faces: {}", faces.len()).unwrap();
    out.push_str(&write_face_report(&faces));
    Ok(out)
}
