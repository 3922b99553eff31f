//! Exhaustive search for a simple cycle basis. Exponential; meant for
//! small graphs where it serves as ground truth.

use super::{cycle_space_dimension, CycleBasis, Echelon, EdgeSet};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// Default cap on search steps (circuit-enumeration steps plus candidate
/// subsets visited).
pub const DEFAULT_BASIS_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisSearch {
    Found(CycleBasis),
    NoneFound(SearchAttestation),
}

/// What an exhausted search covered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchAttestation {
    pub circuits: usize,
    pub dimension: usize,
    pub steps: u64,
}

struct Meter {
    used: u64,
    budget: u64,
}

impl Meter {
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.budget {
            Err(Error::SearchBudgetExceeded(self.budget))
        } else {
            Ok(())
        }
    }
}

/// All circuits of `g`, sorted by size and then lexicographically.
///
/// Each cycle is found once, rooted at its smallest edge `e = {u, v}`: the
/// search walks from `v` back to `u` using only edges larger than `e`.
pub fn circuits(g: &Graph, budget: u64) -> Result<Vec<EdgeSet>> {
    let mut meter = Meter { used: 0, budget };
    let mut out = enumerate_circuits(g, &mut meter)?;
    out.sort();
    Ok(out)
}

fn enumerate_circuits(g: &Graph, meter: &mut Meter) -> Result<Vec<EdgeSet>> {
    let adj = g.incidence();
    let mut on_path = vec![false; g.vertex_bound()];
    let mut out = Vec::new();
    for (root, [u, v]) in g.edges() {
        let mut path = vec![root];
        on_path[v] = true;
        walk(&adj, root, v, u, &mut on_path, &mut path, &mut out, meter)?;
        on_path[v] = false;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn walk(
    adj: &[Vec<(EdgeId, usize)>],
    root: EdgeId,
    at: usize,
    target: usize,
    on_path: &mut [bool],
    path: &mut Vec<EdgeId>,
    out: &mut Vec<EdgeSet>,
    meter: &mut Meter,
) -> Result<()> {
    meter.tick()?;
    for &(e, w) in &adj[at] {
        if e <= root || on_path[w] {
            continue;
        }
        path.push(e);
        if w == target {
            out.push(path.iter().copied().collect());
        } else {
            on_path[w] = true;
            walk(adj, root, w, target, on_path, path, out, meter)?;
            on_path[w] = false;
        }
        path.pop();
    }
    Ok(())
}

/// Looks for a simple basis of a 2-connected graph by exhaustion.
///
/// Subsets of the sorted circuit list are explored in lexicographic order,
/// pruning on a third cover of any edge, on linear dependence, on edges
/// that no remaining circuit can cover, and on running out of room: the
/// remaining elements are at least as long as the current candidate and
/// together may cover each edge at most twice. The first simple basis in that order
/// is returned.
pub fn find_simple_basis_bruteforce(g: &Graph, budget: u64) -> Result<BasisSearch> {
    let (mut search, all) = prepare(g, budget)?;
    if search.descend(0)? {
        let elements = search.chosen.iter().map(|&i| all[i].clone()).collect();
        return Ok(BasisSearch::Found(CycleBasis::new(elements)?));
    }
    Ok(BasisSearch::NoneFound(SearchAttestation {
        circuits: all.len(),
        dimension: search.dimension,
        steps: search.meter.used,
    }))
}

/// Every simple basis of a 2-connected graph, in the order the search
/// meets them. Empty iff the graph is not planar.
pub fn all_simple_bases(g: &Graph, budget: u64) -> Result<Vec<CycleBasis>> {
    let (mut search, all) = prepare(g, budget)?;
    search.found = Some(Vec::new());
    search.descend(0)?;
    search
        .found
        .unwrap_or_default()
        .into_iter()
        .map(|pick| CycleBasis::new(pick.iter().map(|&i| all[i].clone()).collect()))
        .collect()
}

fn prepare(g: &Graph, budget: u64) -> Result<(Search, Vec<EdgeSet>)> {
    if !g.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    let mut meter = Meter { used: 0, budget };
    let mut all = enumerate_circuits(g, &mut meter)?;
    all.sort();
    let dimension = cycle_space_dimension(g);

    let mut last_cover = vec![None; g.edge_bound()];
    for (i, c) in all.iter().enumerate() {
        for e in c.iter() {
            last_cover[e] = Some(i);
        }
    }
    let edges: Vec<EdgeId> = g.edge_ids().collect();
    // every edge of a 2-connected graph lies on a cycle
    debug_assert!(edges.iter().all(|&e| last_cover[e].is_some()));

    let search = Search {
        circuits: all.clone(),
        members: all.iter().map(|c| c.iter().collect()).collect(),
        edges,
        last_cover,
        dimension,
        cover: vec![0u8; g.edge_bound()],
        room: 2 * g.edge_count(),
        echelon: Echelon::default(),
        chosen: Vec::with_capacity(dimension),
        found: None,
        meter,
    };
    Ok((search, all))
}

struct Search {
    circuits: Vec<EdgeSet>,
    members: Vec<Vec<EdgeId>>,
    edges: Vec<EdgeId>,
    last_cover: Vec<Option<usize>>,
    dimension: usize,
    cover: Vec<u8>,
    room: usize,
    echelon: Echelon,
    chosen: Vec<usize>,
    /// when set, every basis is recorded and the search keeps going
    found: Option<Vec<Vec<usize>>>,
    meter: Meter,
}

impl Search {
    fn descend(&mut self, start: usize) -> Result<bool> {
        if self.chosen.len() == self.dimension {
            return Ok(match &mut self.found {
                Some(found) => {
                    found.push(self.chosen.clone());
                    false
                }
                None => true,
            });
        }
        let needed = self.dimension - self.chosen.len();
        // the last index at which every still-uncovered edge can be covered
        let deadline = self
            .edges
            .iter()
            .filter(|&&e| self.cover[e] == 0)
            .filter_map(|&e| self.last_cover[e])
            .min()
            .unwrap_or(usize::MAX);
        let end = self.circuits.len().saturating_sub(needed - 1);
        for i in start..end.min(deadline.saturating_add(1)) {
            self.meter.tick()?;
            if needed * self.members[i].len() > self.room {
                break;
            }
            if self.members[i].iter().any(|&e| self.cover[e] == 2) {
                continue;
            }
            let rank = self.echelon.rank();
            if !self.echelon.insert(self.circuits[i].clone()) {
                continue;
            }
            for &e in &self.members[i] {
                self.cover[e] += 1;
            }
            self.room -= self.members[i].len();
            self.chosen.push(i);
            if self.descend(i + 1)? {
                return Ok(true);
            }
            self.chosen.pop();
            self.room += self.members[i].len();
            for &e in &self.members[i] {
                self.cover[e] -= 1;
            }
            self.echelon.truncate(rank);
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle_space::is_simple_basis;

    #[test]
    fn circuit_counts() {
        let count = |g: &Graph| circuits(g, u64::MAX).unwrap().len();
        assert_eq!(count(&Graph::cycle(5)), 1);
        assert_eq!(count(&Graph::cycle(2)), 1);
        assert_eq!(count(&Graph::complete(4)), 7);
        assert_eq!(count(&Graph::complete(5)), 37);
        assert_eq!(count(&Graph::complete_bipartite(3, 3)), 15);
        assert_eq!(count(&Graph::theta(&[1, 2, 2])), 3);
    }

    #[test]
    fn circuits_are_sorted_and_distinct() {
        let cs = circuits(&Graph::complete(5), u64::MAX).unwrap();
        assert!(cs.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(cs.iter().filter(|c| c.len() == 3).count(), 10);
        assert_eq!(cs.iter().filter(|c| c.len() == 4).count(), 15);
        assert_eq!(cs.iter().filter(|c| c.len() == 5).count(), 12);
    }

    #[test]
    fn k4_has_simple_basis() {
        let g = Graph::complete(4);
        let BasisSearch::Found(b) = find_simple_basis_bruteforce(&g, DEFAULT_BASIS_BUDGET).unwrap()
        else {
            panic!("K4 is planar");
        };
        assert_eq!(b.len(), 3);
        assert!(b.iter().all(|c| c.len() == 3));
        assert!(is_simple_basis(&g, &b).unwrap());
    }

    #[test]
    fn k5_and_k33_have_none() {
        for g in [Graph::complete(5), Graph::complete_bipartite(3, 3)] {
            match find_simple_basis_bruteforce(&g, DEFAULT_BASIS_BUDGET).unwrap() {
                BasisSearch::NoneFound(att) => {
                    assert_eq!(att.dimension, cycle_space_dimension(&g));
                }
                BasisSearch::Found(b) => panic!("unexpected basis {b:?}"),
            }
        }
    }

    #[test]
    fn budget_and_preconditions() {
        assert_eq!(
            find_simple_basis_bruteforce(&Graph::complete(5), 10),
            Err(Error::SearchBudgetExceeded(10))
        );
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            find_simple_basis_bruteforce(&path, 100),
            Err(Error::NotTwoConnected)
        );
    }

    #[test]
    fn all_bases_of_small_graphs() {
        // K4 has a unique embedding with four faces; any three form a basis
        let k4 = all_simple_bases(&Graph::complete(4), DEFAULT_BASIS_BUDGET).unwrap();
        assert_eq!(k4.len(), 4);
        // a cycle has just its own circuit
        assert_eq!(all_simple_bases(&Graph::cycle(4), 100).unwrap().len(), 1);
        // theta with three paths: any two of the three circuits
        assert_eq!(
            all_simple_bases(&Graph::theta(&[1, 2, 3]), 100)
                .unwrap()
                .len(),
            3
        );
        assert!(all_simple_bases(&Graph::complete(5), DEFAULT_BASIS_BUDGET)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn multigraph_search() {
        // three parallel edges: dimension 2, circuits are the three 2-cycles
        let g = Graph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let BasisSearch::Found(b) = find_simple_basis_bruteforce(&g, 1000).unwrap() else {
            panic!("a bundle of parallel edges is planar");
        };
        let expect: Vec<EdgeSet> = vec![[0, 1].into_iter().collect(), [0, 2].into_iter().collect()];
        assert_eq!(b.elements(), &expect[..]);
    }
}
