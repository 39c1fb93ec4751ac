//! Simple undirected graphs with optional arc colorings and rotation systems.
//!
//! Vertices are the contiguous integers `0..n`. An arc coloring assigns a
//! color to every loop position `(v, v)` (the vertex color) and to both
//! orientations of every edge; the two orientations may carry different
//! colors. A graph without an explicit coloring behaves as if every arc had
//! color `0`.

mod connectivity;
mod faces;
mod io;
mod planarity;
mod smoothing;

use std::collections::BTreeMap;

use crate::error::{Error, Result};

pub use connectivity::{
    blocks, components_without, connectivity, cut_vertices, is_k_connected, min_separators,
    shares_block,
};
pub use faces::{faces, faces_unchecked, vertices_share_face};
pub use io::{parse_graph, write_graph};
pub use planarity::{
    contains_k33_subdivision, contains_k5_subdivision, is_planar_small, planar_rotation_small,
};
pub use smoothing::smooth_degree2;

pub type Vertex = usize;
pub type Color = u64;

#[derive(Clone, Debug)]
pub struct ColoredGraph {
    n: usize,
    adj: Vec<Vec<Vertex>>,
    matrix: Vec<bool>,
    arc_colors: Option<BTreeMap<(Vertex, Vertex), Color>>,
    rotation: Option<Vec<Vec<Vertex>>>,
}

impl ColoredGraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        ColoredGraph {
            n,
            adj: vec![Vec::new(); n],
            matrix: vec![false; n * n],
            arc_colors: None,
            rotation: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = ColoredGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Adds the edge `{u, v}`. Any rotation system is dropped, since it no
    /// longer lists the full neighborhoods.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.matrix[u * self.n + v] {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.matrix[u * self.n + v] = true;
        self.matrix[v * self.n + u] = true;
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        if let Some(colors) = self.arc_colors.as_mut() {
            colors.entry((u, v)).or_insert(0);
            colors.entry((v, u)).or_insert(0);
        }
        self.rotation = None;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.matrix[u * self.n + v]
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Whether `(u, v)` is in the domain of an arc coloring: a loop position
    /// or an orientation of an edge.
    pub fn in_arc_domain(&self, u: Vertex, v: Vertex) -> bool {
        u == v || self.adjacent(u, v)
    }

    /// Color of `(u, v)`, or `None` outside the arc domain.
    pub fn arc_color(&self, u: Vertex, v: Vertex) -> Option<Color> {
        if !self.in_arc_domain(u, v) {
            return None;
        }
        Some(
            self.arc_colors
                .as_ref()
                .and_then(|c| c.get(&(u, v)).copied())
                .unwrap_or(0),
        )
    }

    pub fn vertex_color(&self, v: Vertex) -> Color {
        self.arc_color(v, v).unwrap_or(0)
    }

    pub fn has_arc_colors(&self) -> bool {
        self.arc_colors.is_some()
    }

    /// Explicit arc colors, if any were set.
    pub fn arc_colors(&self) -> Option<&BTreeMap<(Vertex, Vertex), Color>> {
        self.arc_colors.as_ref()
    }

    fn ensure_colors(&mut self) -> &mut BTreeMap<(Vertex, Vertex), Color> {
        if self.arc_colors.is_none() {
            let mut map = BTreeMap::new();
            for v in 0..self.n {
                map.insert((v, v), 0);
                for &w in &self.adj[v] {
                    map.insert((v, w), 0);
                }
            }
            self.arc_colors = Some(map);
        }
        self.arc_colors.as_mut().expect("just initialized")
    }

    pub fn set_arc_color(&mut self, u: Vertex, v: Vertex, color: Color) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.in_arc_domain(u, v) {
            return Err(Error::ArcOutsideDomain(u, v));
        }
        self.ensure_colors().insert((u, v), color);
        Ok(())
    }

    pub fn set_vertex_color(&mut self, v: Vertex, color: Color) -> Result<()> {
        self.set_arc_color(v, v, color)
    }

    /// Replaces every edge arc color by the vertex color of its tail, which
    /// turns a vertex coloring into the equivalent arc coloring.
    pub fn lift_vertex_colors(&self) -> ColoredGraph {
        let mut g = self.clone();
        for u in 0..self.n {
            let c = self.vertex_color(u);
            for &v in &self.adj[u] {
                g.ensure_colors().insert((u, v), c);
            }
        }
        g
    }

    pub fn rotation(&self) -> Option<&[Vec<Vertex>]> {
        self.rotation.as_deref()
    }

    /// Attaches a rotation system. Every vertex must list each of its
    /// neighbors exactly once.
    pub fn with_rotation(mut self, rotation: Vec<Vec<Vertex>>) -> Result<Self> {
        if rotation.len() != self.n {
            return Err(Error::InvalidRotation {
                vertex: rotation.len().min(self.n),
                reason: format!("expected {} cyclic orders, got {}", self.n, rotation.len()),
            });
        }
        for (v, order) in rotation.iter().enumerate() {
            let mut sorted = order.clone();
            sorted.sort_unstable();
            if sorted != self.adj[v] {
                return Err(Error::InvalidRotation {
                    vertex: v,
                    reason: format!("lists {:?}, neighbors are {:?}", order, self.adj[v]),
                });
            }
        }
        self.rotation = Some(rotation);
        Ok(self)
    }

    pub fn without_rotation(&self) -> ColoredGraph {
        let mut g = self.clone();
        g.rotation = None;
        g
    }

    /// Graph induced on `vertices`; vertex `vertices[i]` becomes `i`.
    /// Arc colors are kept, the rotation system is dropped.
    pub fn induced(&self, vertices: &[Vertex]) -> ColoredGraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = ColoredGraph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j).expect("induced edges are simple");
                }
            }
        }
        if let Some(colors) = &self.arc_colors {
            let map = g.ensure_colors();
            for (&(u, v), &c) in colors {
                let (iu, iv) = (index[u], index[v]);
                if iu != usize::MAX && iv != usize::MAX {
                    map.insert((iu, iv), c);
                }
            }
        }
        g
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> ColoredGraph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut g = ColoredGraph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])
                .expect("relabeling preserves simplicity");
        }
        if let Some(colors) = &self.arc_colors {
            let map = g.ensure_colors();
            for (&(u, v), &c) in colors {
                map.insert((perm[u], perm[v]), c);
            }
        }
        if let Some(rot) = &self.rotation {
            let mut new_rot = vec![Vec::new(); self.n];
            for (v, order) in rot.iter().enumerate() {
                new_rot[perm[v]] = order.iter().map(|&w| perm[w]).collect();
            }
            g.rotation = Some(new_rot);
        }
        g
    }

    /// Replaces the edge `{u, v}` by a path `u - x - v` through a new vertex
    /// `x = n`. Both new arcs inherit the colors of the old ones in their
    /// direction of travel; the new vertex has color 0. A rotation system is
    /// updated in place.
    pub fn subdivide_edge(&self, u: Vertex, v: Vertex) -> Result<ColoredGraph> {
        if !self.adjacent(u, v) {
            return Err(Error::ArcOutsideDomain(u, v));
        }
        let x = self.n;
        let mut g = ColoredGraph::new(self.n + 1);
        for (a, b) in self.edges() {
            if (a, b) != (u.min(v), u.max(v)) {
                g.add_edge(a, b)?;
            }
        }
        g.add_edge(u, x)?;
        g.add_edge(x, v)?;
        if let Some(colors) = &self.arc_colors {
            let map = g.ensure_colors();
            for (&(a, b), &c) in colors {
                if (a, b) == (u, v) {
                    map.insert((u, x), c);
                    map.insert((x, v), c);
                } else if (a, b) == (v, u) {
                    map.insert((v, x), c);
                    map.insert((x, u), c);
                } else {
                    map.insert((a, b), c);
                }
            }
        }
        if let Some(rot) = &self.rotation {
            let mut new_rot: Vec<Vec<Vertex>> = rot
                .iter()
                .enumerate()
                .map(|(a, order)| {
                    order
                        .iter()
                        .map(|&b| {
                            if (a == u && b == v) || (a == v && b == u) {
                                x
                            } else {
                                b
                            }
                        })
                        .collect()
                })
                .collect();
            new_rot.push(vec![u, v]);
            g.rotation = Some(new_rot);
        }
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &ColoredGraph) -> ColoredGraph {
        let off = self.n;
        let mut g = ColoredGraph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v).expect("simple");
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off).expect("simple");
        }
        if self.arc_colors.is_some() || other.arc_colors.is_some() {
            let map = g.ensure_colors();
            if let Some(c) = &self.arc_colors {
                map.extend(c.iter().map(|(&k, &v)| (k, v)));
            }
            if let Some(c) = &other.arc_colors {
                map.extend(c.iter().map(|(&(a, b), &v)| ((a + off, b + off), v)));
            }
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        components_without(self, &[]).len() <= 1
    }
}

/// Graphs compare equal when they have the same edges, the same color on
/// every arc (absent colorings read as 0) and the same rotation system.
impl PartialEq for ColoredGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.adj == other.adj
            && self.rotation == other.rotation
            && (0..self.n).all(|u| {
                self.vertex_color(u) == other.vertex_color(u)
                    && self.adj[u]
                        .iter()
                        .all(|&v| self.arc_color(u, v) == other.arc_color(u, v))
            })
    }
}

impl Eq for ColoredGraph {}

/// Interns structured color keys as small integers.
///
/// Ids are handed out densely in first-seen order, so two colors produced
/// through the same interner are equal iff their keys are equal.
#[derive(Clone, Debug, Default)]
pub struct ColorInterner {
    ids: BTreeMap<Vec<u64>, Color>,
}

impl ColorInterner {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn intern(&mut self, key: Vec<u64>) -> Color {
        let next = self.ids.len() as Color;
        *self.ids.entry(key).or_insert(next)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path_graph(n: usize) -> ColoredGraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    ColoredGraph::from_edges(n, &edges).expect("path is simple")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle_graph(n: usize) -> ColoredGraph {
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    ColoredGraph::from_edges(n, &edges).expect("cycle is simple")
}

pub fn complete_graph(n: usize) -> ColoredGraph {
    let mut g = ColoredGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).expect("simple");
        }
    }
    g
}

/// Star with center `0` and `leaves` leaves.
pub fn star_graph(leaves: usize) -> ColoredGraph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    ColoredGraph::from_edges(leaves + 1, &edges).expect("star is simple")
}
