//! Connectivity queries by brute-force subset enumeration.
//!
//! Separator searches try every vertex subset of a given size, which costs
//! `O(n^c * (n + m))` for separators of size `c`. All graphs handled here are
//! small (tens of vertices) with separators of size at most three.

use itertools::Itertools;

use super::{ColoredGraph, Vertex};
use crate::error::{Error, Result};

/// Connected components of `g - removed`, each sorted, ordered by smallest
/// vertex.
pub fn components_without(g: &ColoredGraph, removed: &[Vertex]) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut seen = vec![false; n];
    for &r in removed {
        seen[r] = true;
    }
    let mut comps = Vec::new();
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

fn disconnects(g: &ColoredGraph, set: &[Vertex]) -> bool {
    components_without(g, set).len() > 1
}

/// `true` iff `g` has more than `k` vertices and removing any fewer than `k`
/// vertices leaves it connected.
pub fn is_k_connected(g: &ColoredGraph, k: usize) -> bool {
    if g.n() <= k {
        return false;
    }
    (0..k).all(|size| {
        (0..g.n())
            .combinations(size)
            .all(|set| !disconnects(g, &set))
    })
}

/// Size of a minimum separator, or `n - 1` for complete graphs. Zero for
/// disconnected graphs.
pub fn connectivity(g: &ColoredGraph) -> usize {
    if !g.is_connected() {
        return 0;
    }
    let n = g.n();
    for size in 1..n.saturating_sub(1) {
        if (0..n).combinations(size).any(|set| disconnects(g, &set)) {
            return size;
        }
    }
    n.saturating_sub(1)
}

/// All separators of minimum cardinality, each sorted, in lexicographic order.
pub fn min_separators(g: &ColoredGraph) -> Result<Vec<Vec<Vertex>>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_complete() {
        return Err(Error::CompleteGraph);
    }
    let n = g.n();
    for size in 1..n {
        let seps: Vec<Vec<Vertex>> = (0..n)
            .combinations(size)
            .filter(|set| disconnects(g, set))
            .collect();
        if !seps.is_empty() {
            return Ok(seps);
        }
    }
    unreachable!("a connected non-complete graph has a separator")
}

/// Cut vertices of `g`, ascending.
pub fn cut_vertices(g: &ColoredGraph) -> Vec<Vertex> {
    let before = components_without(g, &[]).len();
    (0..g.n())
        .filter(|&v| components_without(g, &[v]).len() > before)
        .collect()
}

/// Biconnected blocks (maximal 2-connected subgraphs and bridges) as sorted
/// vertex sets, sorted. Isolated vertices form no block.
pub fn blocks(g: &ColoredGraph) -> Vec<Vec<Vertex>> {
    struct Dfs<'a> {
        g: &'a ColoredGraph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(Vertex, Vertex)>,
        out: Vec<Vec<Vertex>>,
    }
    impl Dfs<'_> {
        fn visit(&mut self, v: Vertex, parent: Option<Vertex>) {
            self.time += 1;
            self.disc[v] = self.time;
            self.low[v] = self.time;
            for &w in self.g.neighbors(v) {
                if self.disc[w] == 0 {
                    self.stack.push((v, w));
                    self.visit(w, Some(v));
                    self.low[v] = self.low[v].min(self.low[w]);
                    if self.low[w] >= self.disc[v] {
                        let mut block = Vec::new();
                        while let Some((a, b)) = self.stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (v, w) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        self.out.push(block);
                    }
                } else if Some(w) != parent && self.disc[w] < self.disc[v] {
                    self.stack.push((v, w));
                    self.low[v] = self.low[v].min(self.disc[w]);
                }
            }
        }
    }
    let n = g.n();
    let mut dfs = Dfs {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if dfs.disc[v] == 0 {
            dfs.visit(v, None);
        }
    }
    let mut out = dfs.out;
    out.sort();
    out
}

/// For every pair of vertices, whether both lie in a common 2-connected
/// component. Bridges are not 2-connected (they have only two vertices), so a
/// vertex lies in a 2-connected component iff it lies on a cycle.
pub fn shares_block(g: &ColoredGraph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut out = vec![vec![false; n]; n];
    for block in blocks(g).into_iter().filter(|b| b.len() >= 3) {
        for &a in &block {
            for &b in &block {
                out[a][b] = true;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph, star_graph};

    fn bowtie() -> ColoredGraph {
        ColoredGraph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    fn cube() -> ColoredGraph {
        let mut e = Vec::new();
        for v in 0..8usize {
            for bit in [1, 2, 4] {
                if v & bit == 0 {
                    e.push((v, v | bit));
                }
            }
        }
        ColoredGraph::from_edges(8, &e).unwrap()
    }

    #[test]
    fn k_connectivity_examples() {
        assert!(is_k_connected(&complete_graph(4), 3));
        assert!(!is_k_connected(&path_graph(3), 2));
        assert!(is_k_connected(&cube(), 3));
        assert!(!is_k_connected(&cube(), 4));
        assert!(!is_k_connected(&complete_graph(3), 3));
        assert_eq!(connectivity(&cube()), 3);
    }

    #[test]
    fn separator_examples() {
        assert_eq!(min_separators(&path_graph(3)).unwrap(), vec![vec![1]]);
        assert_eq!(
            min_separators(&cycle_graph(4)).unwrap(),
            vec![vec![0, 2], vec![1, 3]]
        );
        assert_eq!(min_separators(&bowtie()).unwrap(), vec![vec![2]]);
        assert!(matches!(
            min_separators(&complete_graph(4)),
            Err(Error::CompleteGraph)
        ));
        let two = ColoredGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(min_separators(&two), Err(Error::Disconnected)));
    }

    #[test]
    fn blocks_and_cut_vertices() {
        assert_eq!(blocks(&bowtie()), vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(cut_vertices(&bowtie()), vec![2]);
        assert_eq!(blocks(&path_graph(3)), vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(cut_vertices(&star_graph(3)), vec![0]);
        let sb = shares_block(&bowtie());
        assert!(sb[0][1] && sb[2][4] && !sb[0][3]);
        assert!(!shares_block(&path_graph(3))[0][1]);
    }
}
