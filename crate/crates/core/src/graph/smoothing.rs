//! Suppression of degree-2 vertices.

use std::collections::BTreeMap;

use super::{is_k_connected, ColorInterner, ColoredGraph, Vertex};
use crate::error::{Error, Result};

/// Tag separating smoothed edge colors from other keys in a shared interner.
const SMOOTH_TAG: u64 = 0x5300;

/// Walks from `u` through `first` along degree-2 vertices until a vertex of
/// degree at least 3 is reached. Returns the end vertex and the path key
/// `[length, λ(x0,x1), λ(x1,x0), λ(x1,x1), λ(x1,x2), λ(x2,x1), ...]` read from
/// `u` towards the end.
fn walk(g: &ColoredGraph, u: Vertex, first: Vertex) -> (Vertex, Vec<u64>) {
    let arc = |a, b| g.arc_color(a, b).expect("path arcs are edges");
    let mut colors = vec![arc(u, first), arc(first, u)];
    let (mut prev, mut at) = (u, first);
    let mut len = 1;
    while g.degree(at) == 2 {
        let next = if g.neighbors(at)[0] == prev {
            g.neighbors(at)[1]
        } else {
            g.neighbors(at)[0]
        };
        colors.push(g.vertex_color(at));
        colors.push(arc(at, next));
        colors.push(arc(next, at));
        prev = at;
        at = next;
        len += 1;
    }
    let mut key = Vec::with_capacity(colors.len() + 1);
    key.push(len);
    key.extend(colors);
    (at, key)
}

/// Removes all degree-2 vertices of a 2-connected graph that is not a cycle.
///
/// Retained vertices (degree at least 3) keep their relative order and their
/// vertex colors. Two retained vertices are adjacent iff some path between
/// them has only degree-2 inner vertices; the arc `(u, v)` is colored by the
/// interned multiset of keys of all such paths read from `u` to `v`. A direct
/// edge counts as a path of length 1 with key `[1, λ(u,v), λ(v,u)]`. Graphs
/// without degree-2 vertices are returned unchanged. The rotation system is
/// dropped.
pub fn smooth_degree2(g: &ColoredGraph, interner: &mut ColorInterner) -> Result<ColoredGraph> {
    if !is_k_connected(g, 2) {
        return Err(Error::NotTwoConnected);
    }
    if g.degrees().iter().all(|&d| d == 2) {
        return Err(Error::IsCycle);
    }
    if g.degrees().iter().all(|&d| d != 2) {
        return Ok(g.clone());
    }

    let retained: Vec<Vertex> = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in retained.iter().enumerate() {
        index[v] = i;
    }

    let mut paths: BTreeMap<(Vertex, Vertex), Vec<Vec<u64>>> = BTreeMap::new();
    for &u in &retained {
        for &w in g.neighbors(u) {
            let (end, key) = walk(g, u, w);
            paths.entry((index[u], index[end])).or_default().push(key);
        }
    }

    let mut h = ColoredGraph::new(retained.len());
    for &(a, b) in paths.keys() {
        if a < b {
            h.add_edge(a, b)?;
        }
    }
    for (i, &v) in retained.iter().enumerate() {
        h.set_vertex_color(i, g.vertex_color(v))?;
    }
    for ((a, b), mut keys) in paths {
        keys.sort();
        let mut flat = vec![SMOOTH_TAG, keys.len() as u64];
        flat.extend(keys.into_iter().flatten());
        h.set_arc_color(a, b, interner.intern(flat))?;
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph};

    fn subdivide_all(g: &ColoredGraph) -> ColoredGraph {
        let mut h = g.clone();
        for (u, v) in g.edges().collect::<Vec<_>>() {
            h = h.subdivide_edge(u, v).unwrap();
        }
        h
    }

    #[test]
    fn k4_unchanged() {
        let mut i = ColorInterner::new();
        let k4 = complete_graph(4);
        assert_eq!(smooth_degree2(&k4, &mut i).unwrap(), k4);
        assert!(i.is_empty());
    }

    #[test]
    fn subdivided_k4_becomes_uniform_k4() {
        let mut i = ColorInterner::new();
        let s = smooth_degree2(&subdivide_all(&complete_graph(4)), &mut i).unwrap();
        assert_eq!(s.n(), 4);
        assert!(s.is_complete());
        let expected = i.intern(vec![SMOOTH_TAG, 1, 2, 0, 0, 0, 0, 0]);
        for (u, v) in s.edges() {
            assert_eq!(s.arc_color(u, v), Some(expected));
            assert_eq!(s.arc_color(v, u), Some(expected));
        }
        assert_eq!(i.len(), 1);
    }

    #[test]
    fn theta_graph_collapses_to_one_edge() {
        // vertices 0 and 1 joined by paths of lengths 2, 2 and 3
        let g =
            ColoredGraph::from_edges(6, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 5), (5, 1)])
                .unwrap();
        let mut i = ColorInterner::new();
        let s = smooth_degree2(&g, &mut i).unwrap();
        assert_eq!((s.n(), s.edge_count()), (2, 1));
        let two = vec![2, 0, 0, 0, 0, 0];
        let three = vec![3, 0, 0, 0, 0, 0, 0, 0, 0];
        let mut key = vec![SMOOTH_TAG, 3];
        key.extend(two.iter().chain(&two).chain(&three));
        assert_eq!(s.arc_color(0, 1), Some(i.intern(key)));
        assert_eq!(i.len(), 1);
    }

    #[test]
    fn direction_is_kept() {
        // K4 with one subdivided edge whose two halves differ in color
        let mut g = complete_graph(4).subdivide_edge(0, 1).unwrap();
        g.set_arc_color(0, 4, 7).unwrap();
        let mut i = ColorInterner::new();
        let s = smooth_degree2(&g, &mut i).unwrap();
        assert_ne!(s.arc_color(0, 1), s.arc_color(1, 0));
    }

    #[test]
    fn rejects_cycles_and_paths() {
        let mut i = ColorInterner::new();
        assert!(matches!(
            smooth_degree2(&cycle_graph(5), &mut i),
            Err(Error::IsCycle)
        ));
        assert!(matches!(
            smooth_degree2(&path_graph(4), &mut i),
            Err(Error::NotTwoConnected)
        ));
    }
}
