//! Planarity by trying every rotation system. Deliberately shares nothing
//! with the embedding and cycle-space code.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_ROTATION_BUDGET: u64 = 100_000_000;

/// All cyclic orders of `items` with the first item fixed.
fn cyclic_orders(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut rest: Vec<usize> = items.iter().skip(1).copied().collect();
    permute(&mut rest, 0, &mut |p| {
        let mut order = Vec::with_capacity(items.len());
        order.extend(items.first());
        order.extend_from_slice(p);
        out.push(order);
    });
    out
}

fn permute(xs: &mut [usize], k: usize, emit: &mut impl FnMut(&[usize])) {
    if k + 1 >= xs.len() {
        emit(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute(xs, k + 1, emit);
        xs.swap(k, i);
    }
}

/// Number of rotation systems [`is_planar_bruteforce`] would examine.
pub fn rotation_count(g: &Graph) -> u128 {
    let darts = DartGraph::new(g);
    darts.choices().iter().map(|c| c.len() as u128).product()
}

struct DartGraph {
    /// darts at each vertex; dart `2k` and `2k + 1` are the two sides of
    /// the k-th edge
    at: Vec<Vec<usize>>,
    darts: usize,
    vertices: usize,
    edges: usize,
}

impl DartGraph {
    fn new(g: &Graph) -> Self {
        let mut index = vec![usize::MAX; g.vertex_bound()];
        for (i, v) in g.vertices().enumerate() {
            index[v] = i;
        }
        let mut at = vec![Vec::new(); g.vertex_count()];
        for (k, (_, [a, b])) in g.edges().enumerate() {
            at[index[a]].push(2 * k);
            at[index[b]].push(2 * k + 1);
        }
        DartGraph {
            at,
            darts: 2 * g.edge_count(),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
        }
    }

    /// Candidate cyclic orders per vertex. The first vertex of degree at
    /// least three only gets one order out of each mirror pair.
    fn choices(&self) -> Vec<Vec<Vec<usize>>> {
        let mut mirrored = false;
        self.at
            .iter()
            .map(|darts| {
                let mut orders = cyclic_orders(darts);
                if !mirrored && darts.len() >= 3 {
                    mirrored = true;
                    orders.retain(|o| o[1] < o[o.len() - 1]);
                }
                orders
            })
            .collect()
    }
}

fn count_faces(succ: &[usize], seen: &mut [bool]) -> usize {
    seen.fill(false);
    let mut faces = 0;
    for start in 0..succ.len() {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = succ[d ^ 1];
        }
    }
    faces
}

/// True iff some rotation system of `g` satisfies V - E + F = 2.
pub fn is_planar_bruteforce(g: &Graph, budget: u64) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let dg = DartGraph::new(g);
    if dg.edges == 0 {
        return Ok(true);
    }
    let choices = dg.choices();
    let total: u128 = choices.iter().map(|c| c.len() as u128).product();
    if total > budget as u128 {
        return Err(Error::SearchBudgetExceeded(budget));
    }
    let target_faces = dg.edges + 2 - dg.vertices;

    let mut succ = vec![0; dg.darts];
    let apply = |succ: &mut [usize], order: &[usize]| {
        for (i, &d) in order.iter().enumerate() {
            succ[d] = order[(i + 1) % order.len()];
        }
    };
    for c in &choices {
        apply(&mut succ, &c[0]);
    }
    let mut seen = vec![false; dg.darts];
    let mut digits = vec![0usize; choices.len()];
    loop {
        if count_faces(&succ, &mut seen) == target_faces {
            return Ok(true);
        }
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(false);
            }
            digits[i] += 1;
            if digits[i] < choices[i].len() {
                apply(&mut succ, &choices[i][digits[i]]);
                break;
            }
            digits[i] = 0;
            apply(&mut succ, &choices[i][0]);
            i += 1;
        }
    }
}
