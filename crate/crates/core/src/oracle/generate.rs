//! Exhaustive generation of small 2-connected graphs up to isomorphism.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Upper-triangle edge multiplicities in pair order (0,1), (0,2), ..., (n-2,n-1).
type Code = Vec<u8>;

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// Lexicographically smallest code over all relabelings that keep vertices
/// sorted by (degree, sorted neighbor degrees). That invariant is preserved
/// by isomorphism, so the result is a canonical form.
fn canonical(n: usize, code: &[u8]) -> Code {
    let mut deg = vec![0usize; n];
    for (i, j) in pairs(n) {
        let m = code[pair_index(n, i, j)] as usize;
        deg[i] += m;
        deg[j] += m;
    }
    let invariant: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nb: Vec<usize> = (0..n)
                .filter(|&w| w != v)
                .flat_map(|w| {
                    let m = code[pair_index(n, v.min(w), v.max(w))] as usize;
                    std::iter::repeat_n(deg[w], m)
                })
                .collect();
            nb.sort_unstable();
            (deg[v], nb)
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| invariant[a].cmp(&invariant[b]));
    let mut cells = Vec::new();
    let mut start = 0;
    for k in 1..=n {
        if k == n || invariant[order[k]] != invariant[order[start]] {
            cells.push((start, k));
            start = k;
        }
    }

    let all_pairs = pairs(n);
    let mut best: Option<Code> = None;
    let mut label = order.clone();
    search_cells(&cells, 0, &mut label, &mut |label| {
        let candidate: Code = all_pairs
            .iter()
            .map(|&(p, q)| {
                let (a, b) = (label[p], label[q]);
                code[pair_index(n, a.min(b), a.max(b))]
            })
            .collect();
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    });
    best.unwrap_or_default()
}

/// Visits every labeling obtained by permuting within each cell.
fn search_cells(
    cells: &[(usize, usize)],
    c: usize,
    label: &mut [usize],
    emit: &mut impl FnMut(&[usize]),
) {
    let Some(&(lo, hi)) = cells.get(c) else {
        emit(label);
        return;
    };
    permute_range(label, lo, hi, &mut |label| {
        search_cells(cells, c + 1, label, emit)
    });
}

fn permute_range(xs: &mut [usize], k: usize, hi: usize, emit: &mut impl FnMut(&mut [usize])) {
    if k + 1 >= hi {
        emit(xs);
        return;
    }
    for i in k..hi {
        xs.swap(k, i);
        permute_range(xs, k + 1, hi, emit);
        xs.swap(k, i);
    }
}

fn to_graph(n: usize, code: &[u8]) -> Graph {
    let mut edges = Vec::new();
    for (i, j) in pairs(n) {
        for _ in 0..code[pair_index(n, i, j)] {
            edges.push((i, j));
        }
    }
    Graph::from_edges(n, &edges).expect("generated graph is loopless")
}

/// All graphs on exactly `n` vertices with at most `max_edges` edges and
/// at most `multiplicity` parallel copies of any edge, up to isomorphism,
/// grouped by edge count and ordered by canonical code within a group.
fn graphs_on(n: usize, max_edges: usize, multiplicity: u8) -> Vec<(usize, Code)> {
    let slots = n * n.saturating_sub(1) / 2;
    let mut level: BTreeSet<Code> = BTreeSet::from([vec![0; slots]]);
    let mut out: Vec<(usize, Code)> = level.iter().map(|c| (0, c.clone())).collect();
    for edges in 1..=max_edges.min(slots * multiplicity as usize) {
        let mut next = BTreeSet::new();
        for code in &level {
            for s in 0..slots {
                if code[s] < multiplicity {
                    let mut grown = code.clone();
                    grown[s] += 1;
                    next.insert(canonical(n, &grown));
                }
            }
        }
        out.extend(next.iter().map(|c| (edges, c.clone())));
        level = next;
    }
    out
}

/// Every 2-connected graph with at most `max_vertices` vertices and
/// `max_edges` edges, one per isomorphism class, parallel edges allowed up
/// to `multiplicity` (1 for simple graphs). Ordered by vertex count, then
/// edge count, then canonical code. Vertices are `0..n`, edge ids `0..m`.
pub fn enumerate_two_connected_graphs(
    max_vertices: usize,
    max_edges: usize,
    multiplicity: u8,
) -> impl Iterator<Item = Graph> {
    (2..=max_vertices).flat_map(move |n| {
        graphs_on(n, max_edges, multiplicity.max(1))
            .into_iter()
            .map(move |(_, code)| to_graph(n, &code))
            .filter(Graph::is_two_connected)
    })
}

/// Canonical code of a graph on vertices `0..n`; equal codes mean
/// isomorphic graphs.
pub fn canonical_code(g: &Graph) -> Vec<u8> {
    let n = g.vertex_bound();
    let mut code = vec![0u8; n * n.saturating_sub(1) / 2];
    for (_, [a, b]) in g.edges() {
        code[pair_index(n, a.min(b), a.max(b))] += 1;
    }
    canonical(n, &code)
}
