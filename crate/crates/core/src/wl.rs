//! k-dimensional Weisfeiler-Leman refinement for k in {1, 2, 3}.
//!
//! Colors are stored densely per graph, indexed by `sum v_j * n^(k-1-j)`.
//! Every round builds one signature per tuple as a plain `Vec<u64>`; all
//! distinct signatures of all graphs in a run are sorted and numbered
//! `0..c`, so equal ids mean equal signatures across graphs and no hashing
//! is involved.
//!
//! * Round 0, k >= 2: `[λ-lift, λ-lift, atomic type]`, where the lift of an
//!   arc coloring is `(λ(u1,u2), 0)` inside its domain and `(1, 1)` outside,
//!   and the atomic type records for each position pair whether the entries
//!   are equal, adjacent or neither.
//! * Round 0, k = 1: `[λ(v,v)]`.
//! * Round i+1, k >= 2: `[prev, sorted multiset over w of the k colors
//!   obtained by substituting w into each position]`.
//! * Round i+1, k = 1: `[prev, sorted multiset over neighbors w of
//!   (λ(v,w), λ(w,v), χ(w))]`.
//!
//! A run stops as soon as the number of classes over the union of all
//! graphs does not grow.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    k: usize,
    n: usize,
    round: usize,
    colors: Vec<Color>,
}

fn check_dimension(k: usize) -> Result<()> {
    if (1..=3).contains(&k) {
        Ok(())
    } else {
        Err(Error::InvalidDimension(k))
    }
}

fn tuple_index(n: usize, tuple: &[Vertex]) -> usize {
    tuple.iter().fold(0, |acc, &v| acc * n + v)
}

fn index_tuple(n: usize, k: usize, mut idx: usize) -> Vec<Vertex> {
    let mut t = vec![0; k];
    for slot in t.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
    t
}

impl Coloring {
    /// Wraps explicit per-tuple colors, indexed like [`Coloring::color`].
    pub fn from_colors(k: usize, n: usize, colors: Vec<Color>) -> Result<Self> {
        check_dimension(k)?;
        if colors.len() != n.pow(k as u32) {
            return Err(Error::InvalidParameter(format!(
                "expected {} tuple colors, got {}",
                n.pow(k as u32),
                colors.len()
            )));
        }
        Ok(Coloring {
            k,
            n,
            round: 0,
            colors,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Index of the last round that refined the partition.
    pub fn round(&self) -> usize {
        self.round
    }

    /// Color of an ℓ-tuple with `1 <= ℓ <= k`; shorter tuples are extended
    /// by repeating their last entry.
    pub fn color(&self, tuple: &[Vertex]) -> Color {
        assert!(
            !tuple.is_empty() && tuple.len() <= self.k,
            "tuple length must be in 1..=k"
        );
        let last = *tuple.last().expect("non-empty");
        let mut idx = tuple_index(self.n, tuple);
        for _ in tuple.len()..self.k {
            idx = idx * self.n + last;
        }
        self.colors[idx]
    }

    pub fn vertex_color(&self, v: Vertex) -> Color {
        self.color(&[v])
    }

    /// Raw colors in tuple-index order.
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Map from color to the lexicographically sorted tuples carrying it.
    pub fn classes(&self) -> BTreeMap<Color, Vec<Vec<Vertex>>> {
        let mut out: BTreeMap<Color, Vec<Vec<Vertex>>> = BTreeMap::new();
        for (idx, &c) in self.colors.iter().enumerate() {
            out.entry(c)
                .or_default()
                .push(index_tuple(self.n, self.k, idx));
        }
        out
    }

    pub fn class_sizes(&self) -> BTreeMap<Color, usize> {
        let mut out = BTreeMap::new();
        for &c in &self.colors {
            *out.entry(c).or_insert(0) += 1;
        }
        out
    }

    pub fn class_count(&self) -> usize {
        self.class_sizes().len()
    }

    /// Vertex classes of the diagonal colors, each sorted, ordered by color.
    pub fn vertex_classes(&self) -> Vec<Vec<Vertex>> {
        let mut by_color: BTreeMap<Color, Vec<Vertex>> = BTreeMap::new();
        for v in 0..self.n {
            by_color.entry(self.vertex_color(v)).or_default().push(v);
        }
        by_color.into_values().collect()
    }

    /// The partition of tuple indices, independent of color names.
    pub fn partition(&self) -> Vec<Vec<usize>> {
        let mut by_color: BTreeMap<Color, Vec<usize>> = BTreeMap::new();
        for (idx, &c) in self.colors.iter().enumerate() {
            by_color.entry(c).or_default().push(idx);
        }
        let mut out: Vec<Vec<usize>> = by_color.into_values().collect();
        out.sort();
        out
    }

    /// Whether every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Coloring) -> bool {
        let mut seen: BTreeMap<Color, Color> = BTreeMap::new();
        self.colors
            .iter()
            .zip(&coarser.colors)
            .all(|(&fine, &coarse)| *seen.entry(fine).or_insert(coarse) == coarse)
    }

    /// `{"k":..,"round":..,"classes":{"id":[[v,..],..],..}}` with class ids
    /// ascending and tuples sorted.
    pub fn to_json(&self) -> String {
        let mut out = format!("{{\"k\":{},\"round\":{},\"classes\":{{", self.k, self.round);
        for (i, (c, tuples)) in self.classes().into_iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write!(out, "\"{c}\":").unwrap();
            out.push_str(&serde_json::to_string(&tuples).expect("vectors serialize"));
        }
        out.push_str("}}");
        out
    }
}

fn atomic(g: &ColoredGraph, a: Vertex, b: Vertex) -> u64 {
    if a == b {
        0
    } else if g.adjacent(a, b) {
        1
    } else {
        2
    }
}

fn initial_signatures(g: &ColoredGraph, k: usize) -> Vec<Vec<u64>> {
    let n = g.n();
    (0..n.pow(k as u32))
        .map(|idx| {
            let t = index_tuple(n, k, idx);
            if k == 1 {
                return vec![g.vertex_color(t[0])];
            }
            let mut sig = match g.arc_color(t[0], t[1]) {
                Some(c) => vec![c, 0],
                None => vec![1, 1],
            };
            for i in 0..k {
                for j in i + 1..k {
                    sig.push(atomic(g, t[i], t[j]));
                }
            }
            sig
        })
        .collect()
}

fn refine_signatures(g: &ColoredGraph, k: usize, prev: &[Color]) -> Vec<Vec<u64>> {
    let n = g.n();
    match k {
        1 => (0..n)
            .map(|v| {
                let mut m: Vec<[u64; 3]> = g
                    .neighbors(v)
                    .iter()
                    .map(|&w| {
                        [
                            g.arc_color(v, w).expect("edge"),
                            g.arc_color(w, v).expect("edge"),
                            prev[w],
                        ]
                    })
                    .collect();
                m.sort_unstable();
                let mut sig = Vec::with_capacity(1 + 3 * m.len());
                sig.push(prev[v]);
                sig.extend(m.into_iter().flatten());
                sig
            })
            .collect(),
        2 => (0..n * n)
            .map(|idx| {
                let (a, b) = (idx / n, idx % n);
                let mut m: Vec<[u64; 2]> =
                    (0..n).map(|w| [prev[w * n + b], prev[a * n + w]]).collect();
                m.sort_unstable();
                let mut sig = Vec::with_capacity(1 + 2 * n);
                sig.push(prev[idx]);
                sig.extend(m.into_iter().flatten());
                sig
            })
            .collect(),
        3 => (0..n * n * n)
            .map(|idx| {
                let (a, b, c) = (idx / (n * n), (idx / n) % n, idx % n);
                let mut m: Vec<[u64; 3]> = (0..n)
                    .map(|w| {
                        [
                            prev[(w * n + b) * n + c],
                            prev[(a * n + w) * n + c],
                            prev[(a * n + b) * n + w],
                        ]
                    })
                    .collect();
                m.sort_unstable();
                let mut sig = Vec::with_capacity(1 + 3 * n);
                sig.push(prev[idx]);
                sig.extend(m.into_iter().flatten());
                sig
            })
            .collect(),
        _ => unreachable!("dimension checked on construction"),
    }
}

/// Numbers all signatures of all graphs by their rank among the distinct
/// signatures. Returns the per-graph colors and the number of classes.
fn canonical_ids(sigs: Vec<Vec<Vec<u64>>>) -> (Vec<Vec<Color>>, usize) {
    let mut all: Vec<&Vec<u64>> = sigs.iter().flatten().collect();
    all.par_sort_unstable();
    all.dedup();
    let ids = sigs
        .par_iter()
        .map(|gs| {
            gs.iter()
                .map(|s| all.binary_search(&s).expect("signature collected") as Color)
                .collect()
        })
        .collect();
    (ids, all.len())
}

/// A refinement run over several graphs sharing one color dictionary.
#[derive(Clone, Debug)]
pub struct JointRefinement<'a> {
    graphs: &'a [ColoredGraph],
    k: usize,
    round: usize,
    colors: Vec<Vec<Color>>,
    classes: usize,
    stable: bool,
}

impl<'a> JointRefinement<'a> {
    /// Starts from the initial coloring of every graph.
    pub fn new(graphs: &'a [ColoredGraph], k: usize) -> Result<Self> {
        check_dimension(k)?;
        let sigs = graphs
            .par_iter()
            .map(|g| initial_signatures(g, k))
            .collect();
        let (colors, classes) = canonical_ids(sigs);
        Ok(JointRefinement {
            graphs,
            k,
            round: 0,
            colors,
            classes,
            stable: false,
        })
    }

    /// Starts from given colorings, one per graph, with shared color names.
    pub fn from_colorings(graphs: &'a [ColoredGraph], start: Vec<Coloring>) -> Result<Self> {
        let k = start.first().map_or(1, |c| c.k);
        check_dimension(k)?;
        if start.len() != graphs.len()
            || start
                .iter()
                .zip(graphs)
                .any(|(c, g)| c.k != k || c.n != g.n())
        {
            return Err(Error::InvalidParameter(
                "one coloring of matching size and dimension per graph required".into(),
            ));
        }
        let mut distinct: Vec<Color> = start
            .iter()
            .flat_map(|c| c.colors.iter().copied())
            .collect();
        distinct.sort_unstable();
        distinct.dedup();
        let round = start.iter().map(|c| c.round).max().unwrap_or(0);
        Ok(JointRefinement {
            graphs,
            k,
            round,
            colors: start.into_iter().map(|c| c.colors).collect(),
            classes: distinct.len(),
            stable: false,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn round(&self) -> usize {
        self.round
    }

    pub fn is_stable(&self) -> bool {
        self.stable
    }

    /// Number of classes over the union of all graphs.
    pub fn union_class_count(&self) -> usize {
        self.classes
    }

    /// Performs one refinement round. Returns `true` if the union partition
    /// became strictly finer; otherwise the run is marked stable and the
    /// current colors are kept.
    pub fn step(&mut self) -> bool {
        if self.stable {
            return false;
        }
        let k = self.k;
        let sigs = self
            .graphs
            .par_iter()
            .zip(&self.colors)
            .map(|(g, prev)| refine_signatures(g, k, prev))
            .collect();
        let (colors, classes) = canonical_ids(sigs);
        if classes <= self.classes {
            self.stable = true;
            return false;
        }
        self.colors = colors;
        self.classes = classes;
        self.round += 1;
        true
    }

    pub fn run_to_stable(&mut self) {
        while self.step() {}
    }

    pub fn colorings(&self) -> Vec<Coloring> {
        self.graphs
            .iter()
            .zip(&self.colors)
            .map(|(g, c)| Coloring {
                k: self.k,
                n: g.n(),
                round: self.round,
                colors: c.clone(),
            })
            .collect()
    }

    pub fn coloring(&self, i: usize) -> Coloring {
        Coloring {
            k: self.k,
            n: self.graphs[i].n(),
            round: self.round,
            colors: self.colors[i].clone(),
        }
    }
}

/// Round-0 coloring of a single graph.
pub fn initial_coloring(g: &ColoredGraph, k: usize) -> Result<Coloring> {
    let graphs = std::slice::from_ref(g);
    Ok(JointRefinement::new(graphs, k)?.coloring(0))
}

/// Refines `initial` until the partition stops getting finer.
pub fn refine_to_stable(g: &ColoredGraph, k: usize, initial: Coloring) -> Result<Coloring> {
    if initial.k != k {
        return Err(Error::InvalidParameter(format!(
            "initial coloring has dimension {}, expected {k}",
            initial.k
        )));
    }
    let graphs = std::slice::from_ref(g);
    let mut run = JointRefinement::from_colorings(graphs, vec![initial])?;
    run.run_to_stable();
    Ok(run.coloring(0))
}

pub fn stable_coloring(g: &ColoredGraph, k: usize) -> Result<Coloring> {
    let graphs = std::slice::from_ref(g);
    let mut run = JointRefinement::new(graphs, k)?;
    run.run_to_stable();
    Ok(run.coloring(0))
}

/// Stable colorings of all graphs from one joint run.
pub fn joint_stable(gs: &[ColoredGraph], k: usize) -> Result<Vec<Coloring>> {
    let mut run = JointRefinement::new(gs, k)?;
    run.run_to_stable();
    Ok(run.colorings())
}

/// Whether k-WL tells `g` and `h` apart: some color class has different
/// sizes in the two stable colorings of a joint run.
pub fn distinguishes(g: &ColoredGraph, h: &ColoredGraph, k: usize) -> Result<bool> {
    let graphs = [g.clone(), h.clone()];
    let c = joint_stable(&graphs, k)?;
    Ok(c[0].class_sizes() != c[1].class_sizes())
}

/// Largest number of vertices [`individualize`] can number.
pub const MAX_INDIVIDUALIZED: usize = (1 << 16) - 1;

/// Gives `vs[i]` the vertex color `i + 1` and every other vertex color 0,
/// paired with the existing vertex color as `(old << 16) + new`. Edge colors
/// are kept. An empty list returns `g` unchanged.
pub fn individualize(g: &ColoredGraph, vs: &[Vertex]) -> Result<ColoredGraph> {
    if vs.is_empty() {
        return Ok(g.clone());
    }
    if vs.len() > MAX_INDIVIDUALIZED {
        return Err(Error::InvalidParameter(format!(
            "at most {MAX_INDIVIDUALIZED} vertices can be individualized"
        )));
    }
    let mut position = vec![0u64; g.n()];
    for (i, &v) in vs.iter().enumerate() {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        if position[v] != 0 {
            return Err(Error::RepeatedVertex(v));
        }
        position[v] = i as u64 + 1;
    }
    let mut h = g.clone();
    for (v, &pos) in position.iter().enumerate() {
        let old = g.vertex_color(v);
        if old >= 1 << 48 {
            return Err(Error::ColorOverflow(old));
        }
        h.set_vertex_color(v, (old << 16) + pos)?;
    }
    Ok(h)
}

/// Whether every class of a 1-dimensional coloring is a singleton.
pub fn is_discrete(c: &Coloring) -> Result<bool> {
    if c.k != 1 {
        return Err(Error::NotDimensionOne(c.k));
    }
    Ok(c.class_count() == c.n)
}

/// Stable 1-WL coloring of `g` individualized at `vs` is discrete.
pub fn individualization_is_discrete(g: &ColoredGraph, vs: &[Vertex]) -> Result<bool> {
    is_discrete(&stable_coloring(&individualize(g, vs)?, 1)?)
}

/// `W_i(u, v)`: the number of walks of length exactly `i` from `u` to `v`.
///
/// # Panics
/// If a count overflows `u128`.
pub fn walk_counts(g: &ColoredGraph, i: usize) -> Vec<Vec<u128>> {
    let n = g.n();
    let mut w: Vec<Vec<u128>> = (0..n)
        .map(|u| (0..n).map(|v| u128::from(u == v)).collect())
        .collect();
    for _ in 0..i {
        w = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| {
                        g.neighbors(v).iter().fold(0u128, |acc, &x| {
                            acc.checked_add(w[u][x]).expect("walk count overflows u128")
                        })
                    })
                    .collect()
            })
            .collect();
    }
    w
}

/// Whether the vertex classes of the stable k-WL coloring are exactly the
/// automorphism orbits.
pub fn determines_orbits_check(g: &ColoredGraph, k: usize) -> Result<bool> {
    let orbits = crate::oracle::orbits(g)?;
    let classes = stable_coloring(g, k)?.vertex_classes();
    let mut a = orbits;
    let mut b = classes;
    a.sort();
    b.sort();
    Ok(a == b)
}
