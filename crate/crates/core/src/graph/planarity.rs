//! Planarity of very small graphs by searching for Kuratowski subdivisions.
//!
//! Only meant for the exhaustive small-graph corpus; the search is
//! exponential in `n`.

use itertools::Itertools;

use super::{ColoredGraph, Vertex};
use crate::error::{Error, Result};

/// Largest graph [`is_planar_small`] accepts.
pub const PLANARITY_LIMIT: usize = 8;

struct Router<'a> {
    g: &'a ColoredGraph,
    used: Vec<bool>,
}

impl Router<'_> {
    /// Routes every pattern edge as an internally disjoint path whose inner
    /// vertices are unused non-branch vertices.
    fn route(&mut self, pairs: &[(Vertex, Vertex)]) -> bool {
        let Some((&(a, b), rest)) = pairs.split_first() else {
            return true;
        };
        self.extend(a, b, rest)
    }

    fn extend(&mut self, at: Vertex, target: Vertex, rest: &[(Vertex, Vertex)]) -> bool {
        for &w in self.g.neighbors(at) {
            if w == target {
                if self.route(rest) {
                    return true;
                }
            } else if !self.used[w] {
                self.used[w] = true;
                let found = self.extend(w, target, rest);
                self.used[w] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }
}

fn routable(g: &ColoredGraph, branch: &[Vertex], pairs: &[(Vertex, Vertex)]) -> bool {
    let mut used = vec![false; g.n()];
    for &b in branch {
        used[b] = true;
    }
    // a direct edge can serve only its own pair, so reusing edges is impossible
    Router { g, used }.route(pairs)
}

pub fn contains_k5_subdivision(g: &ColoredGraph) -> bool {
    (0..g.n())
        .filter(|&v| g.degree(v) >= 4)
        .combinations(5)
        .any(|branch| {
            let pairs: Vec<_> = branch.iter().copied().tuple_combinations().collect();
            routable(g, &branch, &pairs)
        })
}

pub fn contains_k33_subdivision(g: &ColoredGraph) -> bool {
    let candidates: Vec<Vertex> = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
    candidates.iter().copied().combinations(6).any(|six| {
        // unordered bipartitions {A, B}: fix six[0] in A
        six[1..].iter().copied().combinations(2).any(|rest_a| {
            let side_a = [six[0], rest_a[0], rest_a[1]];
            let side_b: Vec<Vertex> = six
                .iter()
                .copied()
                .filter(|v| !side_a.contains(v))
                .collect();
            let pairs: Vec<_> = side_a
                .iter()
                .flat_map(|&a| side_b.iter().map(move |&b| (a, b)))
                .collect();
            routable(g, &six, &pairs)
        })
    })
}

/// Planarity via Kuratowski's theorem, for graphs with at most
/// [`PLANARITY_LIMIT`] vertices.
pub fn is_planar_small(g: &ColoredGraph) -> Result<bool> {
    let n = g.n();
    if n > PLANARITY_LIMIT {
        return Err(Error::InvalidParameter(format!(
            "brute-force planarity supports at most {PLANARITY_LIMIT} vertices, got {n}"
        )));
    }
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return Ok(false);
    }
    Ok(!contains_k5_subdivision(g) && !contains_k33_subdivision(g))
}

/// Upper bound on the number of rotation systems [`planar_rotation_small`]
/// will try.
pub const ROTATION_SEARCH_LIMIT: u64 = 5_000_000;

/// A rotation system of `g` passing the Euler check, found by trying every
/// combination of cyclic neighbor orders. `None` if `g` is not planar.
pub fn planar_rotation_small(g: &ColoredGraph) -> Result<Option<Vec<Vec<Vertex>>>> {
    if !g.is_connected() || g.edge_count() == 0 {
        return Err(Error::Disconnected);
    }
    // cyclic orders of each vertex with its first neighbor fixed in front
    let choices: Vec<Vec<Vec<Vertex>>> = (0..g.n())
        .map(|v| {
            let nb = g.neighbors(v);
            match nb.split_first() {
                None => vec![Vec::new()],
                Some((&first, rest)) => rest
                    .iter()
                    .copied()
                    .permutations(rest.len())
                    .map(|p| std::iter::once(first).chain(p).collect())
                    .collect(),
            }
        })
        .collect();
    let total = choices
        .iter()
        .try_fold(1u64, |acc, c| acc.checked_mul(c.len() as u64))
        .unwrap_or(u64::MAX);
    if total > ROTATION_SEARCH_LIMIT {
        return Err(Error::InvalidParameter(format!(
            "{total} rotation systems exceed the search limit of {ROTATION_SEARCH_LIMIT}"
        )));
    }
    let target = g.edge_count() + 2 - g.n();
    for pick in choices.iter().map(|c| 0..c.len()).multi_cartesian_product() {
        let rot: Vec<Vec<Vertex>> = pick
            .iter()
            .zip(&choices)
            .map(|(&i, c)| c[i].clone())
            .collect();
        let h = g
            .clone()
            .with_rotation(rot.clone())
            .expect("orders list all neighbors");
        if super::faces_unchecked(&h)?.len() == target {
            return Ok(Some(rot));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    fn k33() -> ColoredGraph {
        let mut g = ColoredGraph::new(6);
        for a in 0..3 {
            for b in 3..6 {
                g.add_edge(a, b).unwrap();
            }
        }
        g
    }

    #[test]
    fn kuratowski_graphs_are_nonplanar() {
        assert!(!is_planar_small(&complete_graph(5)).unwrap());
        assert!(!is_planar_small(&k33()).unwrap());
        assert!(is_planar_small(&complete_graph(4)).unwrap());
    }

    #[test]
    fn subdivisions_detected() {
        let k5s = complete_graph(5).subdivide_edge(0, 1).unwrap();
        assert!(contains_k5_subdivision(&k5s));
        assert!(!is_planar_small(&k5s).unwrap());
        let k33s = k33().subdivide_edge(0, 3).unwrap();
        assert!(!contains_k5_subdivision(&k33s));
        assert!(contains_k33_subdivision(&k33s));
    }

    #[test]
    fn rotation_search() {
        let rot = planar_rotation_small(&complete_graph(4)).unwrap().unwrap();
        let g = complete_graph(4).with_rotation(rot).unwrap();
        assert_eq!(crate::graph::faces(&g).unwrap().len(), 4);
        assert!(planar_rotation_small(&k33()).unwrap().is_none());
    }

    #[test]
    fn k5_minus_edge_is_planar() {
        let mut g = ColoredGraph::new(5);
        for (u, v) in (0..5).tuple_combinations() {
            if (u, v) != (0, 1) {
                g.add_edge(u, v).unwrap();
            }
        }
        assert!(is_planar_small(&g).unwrap());
    }
}
