//! Minimum-separator decompositions: the pair sets P(G) and P₀(G), torso
//! graphs and the reduced graph whose colors record torso isomorphism types.
//!
//! Graphs are used with their arc coloring as is; a graph whose information
//! sits only in vertex colors can be lifted first with
//! [`ColoredGraph::lift_vertex_colors`].

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    blocks, components_without, is_k_connected, min_separators, Color, ColorInterner, ColoredGraph,
    Vertex,
};
use crate::oracle::{canonical_form, DEFAULT_CANONICAL_LIMIT};

/// A minimum separator together with one component of its removal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SeparatorPair {
    pub separator: Vec<Vertex>,
    pub component: Vec<Vertex>,
}

impl SeparatorPair {
    /// The pair after renaming vertex `v` to `perm[v]`, with sets re-sorted.
    pub fn relabel(&self, perm: &[Vertex]) -> SeparatorPair {
        let map = |s: &[Vertex]| {
            let mut out: Vec<Vertex> = s.iter().map(|&v| perm[v]).collect();
            out.sort_unstable();
            out
        };
        SeparatorPair {
            separator: map(&self.separator),
            component: map(&self.component),
        }
    }
}

fn is_subset(a: &[Vertex], b: &[Vertex]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}

/// All pairs `(S, K)` with `S` a minimum separator and `K` a component of
/// `g - S`, sorted.
pub fn p_set(g: &ColoredGraph) -> Result<Vec<SeparatorPair>> {
    let mut out = Vec::new();
    for s in min_separators(g)? {
        for k in components_without(g, &s) {
            out.push(SeparatorPair {
                separator: s.clone(),
                component: k,
            });
        }
    }
    out.sort();
    Ok(out)
}

/// The minimal pairs of [`p_set`] under inclusion of components.
pub fn p0_set(g: &ColoredGraph) -> Result<Vec<SeparatorPair>> {
    let p = p_set(g)?;
    Ok(p.iter()
        .filter(|a| {
            !p.iter().any(|b| {
                b.component.len() < a.component.len() && is_subset(&b.component, &a.component)
            })
        })
        .cloned()
        .collect())
}

/// P₀ through the separator characterization: `(S, K)` is minimal iff no
/// minimum separator meets `K`.
pub fn p0_set_by_separators(g: &ColoredGraph) -> Result<Vec<SeparatorPair>> {
    let seps = min_separators(g)?;
    Ok(p_set(g)?
        .into_iter()
        .filter(|pair| {
            !seps
                .iter()
                .any(|s| s.iter().any(|v| pair.component.binary_search(v).is_ok()))
        })
        .collect())
}

/// A torso `G_⊤^S` or `G_⊤^(S,K)`. Vertex `i` of `base` is `vertices[i]` of
/// the original graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsoGraph {
    pub base: ColoredGraph,
    pub vertices: Vec<Vertex>,
    pub separator: Vec<Vertex>,
}

impl TorsoGraph {
    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }
}

/// Torso color tags packed into one integer: `(0,0) -> 0`,
/// `(λ,1) -> 3λ+1`, `(λ,2) -> 3λ+2`.
fn tag(lambda: Color, t: u64) -> Result<Color> {
    lambda
        .checked_mul(3)
        .and_then(|x| x.checked_add(t))
        .ok_or(Error::ColorOverflow(lambda))
}

fn build_torso(
    g: &ColoredGraph,
    separator: &[Vertex],
    vertices: Vec<Vertex>,
) -> Result<TorsoGraph> {
    let in_s = |v: Vertex| separator.contains(&v);
    let mut base = g.induced(&vertices);
    for (i, &a) in vertices.iter().enumerate() {
        for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
            if in_s(a) && in_s(b) && !g.adjacent(a, b) {
                base.add_edge(i, j)?;
            }
        }
    }
    for (i, &a) in vertices.iter().enumerate() {
        // the diagonal keeps the vertex color under the third tag
        base.set_vertex_color(i, tag(g.vertex_color(a), 2)?)?;
        for (j, &b) in vertices.iter().enumerate() {
            if i == j || !base.adjacent(i, j) {
                continue;
            }
            let c = if in_s(a) && in_s(b) {
                match g.arc_color(a, b) {
                    None => 0,
                    Some(l) => tag(l, 1)?,
                }
            } else {
                tag(g.arc_color(a, b).expect("torso edge off S is an edge"), 2)?
            };
            base.set_arc_color(i, j, c)?;
        }
    }
    Ok(TorsoGraph {
        base,
        vertices,
        separator: separator.to_vec(),
    })
}

fn p0_or_empty(g: &ColoredGraph) -> Result<Vec<SeparatorPair>> {
    match p0_set(g) {
        Err(Error::CompleteGraph) => Ok(Vec::new()),
        other => other,
    }
}

fn torso_from_p0(g: &ColoredGraph, p0: &[SeparatorPair], s: &[Vertex]) -> Result<TorsoGraph> {
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    for &v in &s {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
    }
    let mut vs: BTreeSet<Vertex> = s.iter().copied().collect();
    for pair in p0.iter().filter(|p| p.separator == s) {
        vs.extend(&pair.component);
    }
    build_torso(g, &s, vs.into_iter().collect())
}

/// `G_⊤^S`: `S` plus every component `K` with `(S, K)` in P₀, with `S`
/// completed to a clique and colored by the three-case rule. If `S` does
/// not occur as a separator in P₀ the torso is the clique on `S`.
pub fn g_top(g: &ColoredGraph, s: &[Vertex]) -> Result<TorsoGraph> {
    let p0 = p0_or_empty(g)?;
    torso_from_p0(g, &p0, s)
}

/// `G_⊤^(S,K)`: the torso restricted to `S ∪ K`.
pub fn g_top_pair(g: &ColoredGraph, pair: &SeparatorPair) -> Result<TorsoGraph> {
    let mut vs: Vec<Vertex> = pair
        .separator
        .iter()
        .chain(&pair.component)
        .copied()
        .collect();
    vs.sort_unstable();
    build_torso(g, &pair.separator, vs)
}

/// Canonical encoding of `g` with `individualized` fixed in order at the
/// first positions. Equal encodings are exactly the isomorphisms respecting
/// the individualization.
pub fn isotype(g: &ColoredGraph, individualized: &[Vertex]) -> Result<Vec<u64>> {
    canonical_form(g, individualized, DEFAULT_CANONICAL_LIMIT)
}

/// `G_⊥`. Vertex `i` of `base` is `vertices[i]` of the original graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedGraph {
    pub base: ColoredGraph,
    pub vertices: Vec<Vertex>,
    pub p0: Vec<SeparatorPair>,
}

/// Interning state shared by all reductions of one run, so that reduced
/// colors of different graphs are comparable.
#[derive(Clone, Debug)]
pub struct DecompositionContext {
    isotypes: ColorInterner,
    colors: ColorInterner,
    canonical_limit: usize,
}

impl Default for DecompositionContext {
    fn default() -> Self {
        DecompositionContext::new(DEFAULT_CANONICAL_LIMIT)
    }
}

impl DecompositionContext {
    pub fn new(canonical_limit: usize) -> Self {
        DecompositionContext {
            isotypes: ColorInterner::new(),
            colors: ColorInterner::new(),
            canonical_limit,
        }
    }

    /// Small integer id of the isomorphism type of `g` individualized at
    /// `individualized` (repeated entries are dropped).
    pub fn isotype_id(&mut self, g: &ColoredGraph, individualized: &[Vertex]) -> Result<Color> {
        let mut prefix: Vec<Vertex> = Vec::new();
        for &v in individualized {
            if !prefix.contains(&v) {
                prefix.push(v);
            }
        }
        let form = canonical_form(g, &prefix, self.canonical_limit)?;
        Ok(self.isotypes.intern(form))
    }

    pub fn isotype_count(&self) -> usize {
        self.isotypes.len()
    }

    fn pair_type(
        &mut self,
        g: &ColoredGraph,
        p0: &[SeparatorPair],
        v1: Vertex,
        v2: Vertex,
    ) -> Result<Color> {
        let torso = torso_from_p0(g, p0, &[v1, v2])?;
        let i1 = torso.index_of(v1).expect("S is in the torso");
        let i2 = torso.index_of(v2).expect("S is in the torso");
        self.isotype_id(&torso.base, &[i1, i2])
    }

    /// `G_⊥` with its coloring `λ_⊥`.
    ///
    /// Loops and original edges get `(λ(v1,v2), ISOTYPE)`, added separator
    /// edges get `(0, ISOTYPE)`, where ISOTYPE is the type of `G_⊤^{v1,v2}`
    /// individualized at `(v1, v2)`. Both components are interned into one
    /// color.
    pub fn g_bot(&mut self, g: &ColoredGraph) -> Result<ReducedGraph> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        if g.is_complete() {
            return Err(Error::CompleteGraph);
        }
        if is_k_connected(g, 3) {
            return Err(Error::ThreeConnected);
        }
        if is_k_connected(g, 2) && g.min_degree() < 3 {
            return Err(Error::MinDegree {
                required: 3,
                found: g.min_degree(),
            });
        }
        let p0 = p0_set(g)?;
        let mut removed = vec![false; g.n()];
        for pair in &p0 {
            for &v in &pair.component {
                removed[v] = true;
            }
        }
        let vertices: Vec<Vertex> = (0..g.n()).filter(|&v| !removed[v]).collect();
        let mut base = g.induced(&vertices);
        let index = |v: Vertex| vertices.binary_search(&v).expect("separators are retained");
        let mut separators: Vec<(usize, usize)> = Vec::new();
        for pair in &p0 {
            for (x, &a) in pair.separator.iter().enumerate() {
                for &b in &pair.separator[x + 1..] {
                    separators.push((index(a), index(b)));
                }
            }
        }
        separators.sort_unstable();
        separators.dedup();
        for &(i, j) in &separators {
            if !base.adjacent(i, j) {
                base.add_edge(i, j)?;
            }
        }

        for (i, &v) in vertices.iter().enumerate() {
            let iso = self.pair_type(g, &p0, v, v)?;
            let c = self.colors.intern(vec![g.vertex_color(v), iso]);
            base.set_vertex_color(i, c)?;
        }
        for i in 0..vertices.len() {
            for j in base.neighbors(i).to_vec() {
                let (a, b) = (vertices[i], vertices[j]);
                let iso = self.pair_type(g, &p0, a, b)?;
                let first = g.arc_color(a, b).unwrap_or(0);
                let c = self.colors.intern(vec![first, iso]);
                base.set_arc_color(i, j, c)?;
            }
        }
        Ok(ReducedGraph { base, vertices, p0 })
    }
}

/// [`DecompositionContext::g_bot`] with a fresh context.
pub fn g_bot(g: &ColoredGraph) -> Result<ReducedGraph> {
    DecompositionContext::default().g_bot(g)
}

/// Whether `g` is k-connected, not (k+1)-connected and has minimum degree
/// at least `(3k-1)/2`, for `k` in {1, 2}.
pub fn meets_degree_hypothesis(g: &ColoredGraph, k: usize) -> bool {
    is_k_connected(g, k) && !is_k_connected(g, k + 1) && 2 * g.min_degree() + 1 >= 3 * k
}

/// For distinct pairs of P₀: `(K ∪ S) ∩ (K' ∪ S') = S ∩ S'`.
pub fn closures_meet_in_separators(g: &ColoredGraph) -> Result<bool> {
    let p0 = p0_set(g)?;
    let closure = |p: &SeparatorPair| -> BTreeSet<Vertex> {
        p.separator.iter().chain(&p.component).copied().collect()
    };
    Ok(p0.iter().enumerate().all(|(i, a)| {
        p0[i + 1..].iter().all(|b| {
            let left: BTreeSet<Vertex> = closure(a).intersection(&closure(b)).copied().collect();
            let sa: BTreeSet<Vertex> = a.separator.iter().copied().collect();
            let sb: BTreeSet<Vertex> = b.separator.iter().copied().collect();
            left == sa.intersection(&sb).copied().collect()
        })
    }))
}

/// Vertices of `G_⊥` without computing colors.
pub fn reduced_vertices(g: &ColoredGraph) -> Result<Vec<Vertex>> {
    let p0 = p0_set(g)?;
    let mut removed = vec![false; g.n()];
    for pair in &p0 {
        for &v in &pair.component {
            removed[v] = true;
        }
    }
    Ok((0..g.n()).filter(|&v| !removed[v]).collect())
}

/// Right-hand side of the characterization of removed vertices: some `u` in
/// a minimum separator has `x` outside `V((G - u)_⊥)`, and the block of
/// `G - u` containing `x` holds exactly one vertex of a minimum separator.
fn removed_via_vertex_deletion(g: &ColoredGraph, seps: &[Vec<Vertex>], x: Vertex) -> Result<bool> {
    let in_sep: BTreeSet<Vertex> = seps.iter().flatten().copied().collect();
    for &u in &in_sep {
        if u == x {
            continue;
        }
        let keep: Vec<Vertex> = (0..g.n()).filter(|&v| v != u).collect();
        let h = g.induced(&keep);
        let hx = keep.binary_search(&x).expect("x kept");
        if reduced_vertices(&h)?.binary_search(&hx).is_ok() {
            continue;
        }
        let containing: Vec<Vec<Vertex>> = blocks(&h)
            .into_iter()
            .filter(|b| b.binary_search(&hx).is_ok())
            .collect();
        if let [block] = containing.as_slice() {
            let hits = block.iter().filter(|&&v| in_sep.contains(&keep[v])).count();
            if hits == 1 {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Checks that `x ∉ V(G_⊥)` agrees with the vertex-deletion
/// characterization for every vertex of a 2-connected, not 3-connected
/// graph of minimum degree at least 3.
pub fn removed_vertices_characterized(g: &ColoredGraph) -> Result<bool> {
    if !meets_degree_hypothesis(g, 2) {
        return Err(Error::InvalidParameter(
            "needs a 2-connected, not 3-connected graph of minimum degree 3".into(),
        ));
    }
    let kept = reduced_vertices(g)?;
    let seps = min_separators(g)?;
    for x in 0..g.n() {
        let removed = kept.binary_search(&x).is_err();
        if removed != removed_via_vertex_deletion(g, &seps, x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph};

    fn pair(s: &[Vertex], k: &[Vertex]) -> SeparatorPair {
        SeparatorPair {
            separator: s.to_vec(),
            component: k.to_vec(),
        }
    }

    fn bowtie() -> ColoredGraph {
        ColoredGraph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    /// Two copies of K4 glued along the non-edge {0, 1}: 2-connected,
    /// minimum degree 3, not 3-connected.
    fn glued_k4s() -> ColoredGraph {
        ColoredGraph::from_edges(
            6,
            &[
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 4),
                (0, 5),
                (1, 4),
                (1, 5),
                (4, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn p_set_examples() {
        assert_eq!(
            p_set(&bowtie()).unwrap(),
            vec![pair(&[2], &[0, 1]), pair(&[2], &[3, 4])]
        );
        assert_eq!(
            p_set(&path_graph(4)).unwrap(),
            vec![
                pair(&[1], &[0]),
                pair(&[1], &[2, 3]),
                pair(&[2], &[0, 1]),
                pair(&[2], &[3])
            ]
        );
        assert_eq!(
            p_set(&cycle_graph(4)).unwrap(),
            vec![
                pair(&[0, 2], &[1]),
                pair(&[0, 2], &[3]),
                pair(&[1, 3], &[0]),
                pair(&[1, 3], &[2])
            ]
        );
        assert!(matches!(
            p_set(&complete_graph(4)),
            Err(Error::CompleteGraph)
        ));
    }

    #[test]
    fn p0_examples() {
        assert_eq!(
            p0_set(&path_graph(4)).unwrap(),
            vec![pair(&[1], &[0]), pair(&[2], &[3])]
        );
        assert_eq!(p0_set(&bowtie()).unwrap(), p_set(&bowtie()).unwrap());
        let g = glued_k4s();
        assert_eq!(
            p0_set(&g).unwrap(),
            vec![pair(&[0, 1], &[2, 3]), pair(&[0, 1], &[4, 5])]
        );
        assert_eq!(p0_set(&g).unwrap(), p0_set_by_separators(&g).unwrap());
    }

    #[test]
    fn torso_examples() {
        let b = g_top(&bowtie(), &[2]).unwrap();
        assert_eq!(b.vertices, vec![0, 1, 2, 3, 4]);
        let t = g_top(&path_graph(4), &[1]).unwrap();
        assert_eq!(t.vertices, vec![0, 1]);
        assert_eq!(t.base.arc_color(0, 1), Some(2));
        assert_eq!(t.base.vertex_color(0), 2);
        // S not in P0: the clique on S, added edges tagged (0,0)
        let c = g_top(&path_graph(4), &[0, 3]).unwrap();
        assert_eq!(c.vertices, vec![0, 3]);
        assert_eq!(c.base.arc_color(0, 1), Some(0));
        let mut colored = path_graph(4);
        colored.set_arc_color(1, 2, 4).unwrap();
        let e = g_top(&colored, &[1, 2]).unwrap();
        assert_eq!(e.base.arc_color(0, 1), Some(13));
        assert_eq!(e.base.arc_color(1, 0), Some(1));
    }

    #[test]
    fn g_bot_examples() {
        let r = g_bot(&path_graph(4)).unwrap();
        assert_eq!(r.vertices, vec![1, 2]);
        assert_eq!(r.base.edge_count(), 1);
        // both ends carry the pendant-edge torso type
        assert_eq!(r.base.vertex_color(0), r.base.vertex_color(1));
        assert_eq!(r.base.arc_color(0, 1), r.base.arc_color(1, 0));

        let b = g_bot(&bowtie()).unwrap();
        assert_eq!(b.vertices, vec![2]);
        assert_eq!(b.base.edge_count(), 0);

        let g = g_bot(&glued_k4s()).unwrap();
        assert_eq!(g.vertices, vec![0, 1]);
        assert!(g.base.adjacent(0, 1));

        assert!(matches!(
            g_bot(&complete_graph(4)),
            Err(Error::CompleteGraph)
        ));
        assert!(matches!(
            g_bot(&cycle_graph(5)),
            Err(Error::MinDegree { .. })
        ));
    }

    #[test]
    fn isotype_examples() {
        let k3 = complete_graph(3);
        assert_eq!(isotype(&k3, &[0]).unwrap(), isotype(&k3, &[1]).unwrap());
        let p3 = path_graph(3);
        assert_ne!(isotype(&p3, &[0]).unwrap(), isotype(&p3, &[1]).unwrap());
    }

    #[test]
    fn lemma_properties_on_glued_graph() {
        let g = glued_k4s();
        assert!(meets_degree_hypothesis(&g, 2));
        assert!(closures_meet_in_separators(&g).unwrap());
        assert!(removed_vertices_characterized(&g).unwrap());
        assert!(closures_meet_in_separators(&path_graph(5)).unwrap());
    }
}
