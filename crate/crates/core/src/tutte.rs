//! Barycentric iteration with three pinned vertices, and its link to color
//! refinement after individualizing those vertices.
//!
//! Free vertices start at `(1, 1)`; the pinned ones sit at `(0, 0)`,
//! `(1, 0)` and `(0, 1)`. Each step moves every free vertex to the average
//! of its neighbors' previous positions.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{faces, is_k_connected, vertices_share_face, ColoredGraph, Vertex};
use crate::wl::{individualize, is_discrete, Coloring, JointRefinement};

pub type Point = [f64; 2];

pub const PINS: [Point; 3] = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TutteParams {
    pub eps: f64,
    pub max_iter: usize,
    /// Positions closer than this count as equal for the injectivity report.
    pub injectivity_tol: f64,
    /// Positions closer than this count as equal for the refinement link.
    pub link_tol: f64,
}

impl Default for TutteParams {
    fn default() -> Self {
        TutteParams {
            eps: 1e-9,
            max_iter: 100_000,
            injectivity_tol: 1e-6,
            link_tol: 1e-9,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingState {
    pub positions: Vec<Point>,
    pub fixed: [Vertex; 3],
    /// Number of steps performed.
    pub iteration: usize,
    /// Largest coordinate change in the last step.
    pub last_movement: f64,
    pub converged: bool,
    pub injective: bool,
}

fn check_input(g: &ColoredGraph, face3: [Vertex; 3], eps: f64) -> Result<()> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "eps must be positive, got {eps}"
        )));
    }
    for &v in &face3 {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
    }
    if face3[0] == face3[1] || face3[0] == face3[2] {
        return Err(Error::RepeatedVertex(face3[0]));
    }
    if face3[1] == face3[2] {
        return Err(Error::RepeatedVertex(face3[1]));
    }
    if !is_k_connected(g, 3) {
        return Err(Error::NotThreeConnected);
    }
    let f = faces(g)?;
    if !vertices_share_face(&f, &face3) {
        return Err(Error::NotOnCommonFace(face3));
    }
    Ok(())
}

fn min_pairwise_distance(p: &[Point]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            best = best.min((p[i][0] - p[j][0]).hypot(p[i][1] - p[j][1]));
        }
    }
    best
}

/// Runs the iteration, calling `observer(i, μ_i)` for every `i` from 0 up
/// to the final step.
pub fn tutte_iterate_with(
    g: &ColoredGraph,
    face3: [Vertex; 3],
    params: &TutteParams,
    observer: &mut dyn FnMut(usize, &[Point]),
) -> Result<EmbeddingState> {
    check_input(g, face3, params.eps)?;
    let n = g.n();
    let mut pinned = vec![None; n];
    for (i, &v) in face3.iter().enumerate() {
        pinned[v] = Some(PINS[i]);
    }
    let mut pos: Vec<Point> = (0..n).map(|v| pinned[v].unwrap_or([1.0, 1.0])).collect();
    observer(0, &pos);
    let mut iteration = 0;
    let mut movement = f64::INFINITY;
    while iteration < params.max_iter {
        let next: Vec<Point> = (0..n)
            .map(|v| {
                pinned[v].unwrap_or_else(|| {
                    let d = g.degree(v) as f64;
                    let (sx, sy) = g
                        .neighbors(v)
                        .iter()
                        .fold((0.0, 0.0), |(x, y), &w| (x + pos[w][0], y + pos[w][1]));
                    [sx / d, sy / d]
                })
            })
            .collect();
        movement = pos
            .iter()
            .zip(&next)
            .map(|(a, b)| (a[0] - b[0]).abs().max((a[1] - b[1]).abs()))
            .fold(0.0, f64::max);
        pos = next;
        iteration += 1;
        observer(iteration, &pos);
        if movement < params.eps {
            break;
        }
    }
    let injective = min_pairwise_distance(&pos) > params.injectivity_tol;
    Ok(EmbeddingState {
        positions: pos,
        fixed: face3,
        iteration,
        last_movement: movement,
        converged: movement < params.eps,
        injective,
    })
}

pub fn tutte_iterate(
    g: &ColoredGraph,
    face3: [Vertex; 3],
    eps: f64,
    max_iter: usize,
) -> Result<EmbeddingState> {
    let params = TutteParams {
        eps,
        max_iter,
        ..TutteParams::default()
    };
    tutte_iterate_with(g, face3, &params, &mut |_, _| {})
}

/// Outcome of [`link_check`].
#[derive(Clone, Debug, PartialEq)]
pub struct LinkReport {
    /// Stable 1-WL of the individualized graph is discrete.
    pub discrete: bool,
    /// At every step, vertices at distinct positions had distinct colors
    /// after the same number of refinement rounds.
    pub link_holds: bool,
    /// First step at which the link failed.
    pub first_violation: Option<usize>,
    pub embedding: EmbeddingState,
    /// Stable 1-WL coloring of the individualized graph.
    pub coloring: Coloring,
}

/// Per-round 1-WL colorings `ᵢχ¹` up to stability.
fn refinement_history(g: &ColoredGraph) -> Vec<Coloring> {
    let graphs = std::slice::from_ref(g);
    let mut run = JointRefinement::new(graphs, 1).expect("dimension 1 is valid");
    let mut history = vec![run.coloring(0)];
    while run.step() {
        history.push(run.coloring(0));
    }
    history
}

pub fn link_check(
    g: &ColoredGraph,
    face3: [Vertex; 3],
    params: &TutteParams,
) -> Result<LinkReport> {
    check_input(g, face3, params.eps)?;
    let ind = individualize(g, &face3)?;
    let history = refinement_history(&ind);
    let n = g.n();
    let mut first_violation = None;
    let embedding = tutte_iterate_with(g, face3, params, &mut |i, pos| {
        if first_violation.is_some() {
            return;
        }
        let chi = &history[i.min(history.len() - 1)];
        for a in 0..n {
            for b in a + 1..n {
                let apart = (pos[a][0] - pos[b][0]).abs() > params.link_tol
                    || (pos[a][1] - pos[b][1]).abs() > params.link_tol;
                if apart && chi.vertex_color(a) == chi.vertex_color(b) {
                    first_violation = Some(i);
                    return;
                }
            }
        }
    })?;
    let coloring = history.last().expect("round 0 exists").clone();
    Ok(LinkReport {
        discrete: is_discrete(&coloring)?,
        link_holds: first_violation.is_none(),
        first_violation,
        embedding,
        coloring,
    })
}

/// Whether 1-WL on `g` individualized at `face3` is discrete, with the
/// position/color link holding along the way.
pub fn discreteness_link_check(g: &ColoredGraph, face3: [Vertex; 3]) -> Result<bool> {
    let r = link_check(g, face3, &TutteParams::default())?;
    Ok(r.discrete && r.link_holds)
}

const PALETTE: [&str; 10] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
    "#9c755f", "#bab0ac",
];

/// Straight-line drawing of the embedding; vertices are filled by their
/// class in `coloring`.
pub fn to_svg(g: &ColoredGraph, state: &EmbeddingState, coloring: &Coloring) -> String {
    const SIZE: f64 = 480.0;
    const MARGIN: f64 = 20.0;
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in &state.positions {
        for d in 0..2 {
            lo[d] = lo[d].min(p[d]);
            hi[d] = hi[d].max(p[d]);
        }
    }
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(f64::EPSILON);
    let scale = (SIZE - 2.0 * MARGIN) / span;
    let at = |v: Vertex| {
        let p = state.positions[v];
        (
            MARGIN + (p[0] - lo[0]) * scale,
            SIZE - MARGIN - (p[1] - lo[1]) * scale,
        )
    };
    let classes: Vec<u64> = coloring.class_sizes().into_keys().collect();
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n"
    );
    for (u, v) in g.edges() {
        let ((x1, y1), (x2, y2)) = (at(u), at(v));
        writeln!(
            out,
            "  <line x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\" stroke=\"#333\" stroke-width=\"1\"/>"
        )
        .unwrap();
    }
    for v in 0..g.n() {
        let (x, y) = at(v);
        let class = classes
            .binary_search(&coloring.vertex_color(v))
            .unwrap_or(0);
        let fill = PALETTE[class % PALETTE.len()];
        writeln!(
            out,
            "  <circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"6\" fill=\"{fill}\" stroke=\"#000\"><title>{v}</title></circle>"
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    fn k4() -> ColoredGraph {
        complete_graph(4)
            .with_rotation(vec![
                vec![1, 2, 3],
                vec![0, 3, 2],
                vec![0, 1, 3],
                vec![0, 2, 1],
            ])
            .unwrap()
    }

    #[test]
    fn k4_free_vertex_reaches_barycenter() {
        let s = tutte_iterate(&k4(), [0, 1, 2], 1e-9, 10_000).unwrap();
        assert!(s.converged && s.injective);
        let p = s.positions[3];
        assert!((p[0] - 1.0 / 3.0).abs() < 1e-9 && (p[1] - 1.0 / 3.0).abs() < 1e-9);
        assert_eq!(s.positions[0], PINS[0]);
        assert!(s.iteration <= 10_000);
    }

    #[test]
    fn pins_never_move() {
        let mut seen = Vec::new();
        tutte_iterate_with(&k4(), [2, 0, 3], &TutteParams::default(), &mut |_, p| {
            seen.push((p[2], p[0], p[3]));
        })
        .unwrap();
        assert!(seen
            .iter()
            .all(|&(a, b, c)| a == PINS[0] && b == PINS[1] && c == PINS[2]));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            tutte_iterate(&k4(), [0, 1, 2], 0.0, 10),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            tutte_iterate(&complete_graph(4), [0, 1, 2], 1e-9, 10),
            Err(Error::MissingRotation)
        ));
        assert!(matches!(
            tutte_iterate(&k4(), [0, 1, 1], 1e-9, 10),
            Err(Error::RepeatedVertex(1))
        ));
    }

    #[test]
    fn k4_link() {
        assert!(discreteness_link_check(&k4(), [0, 1, 2]).unwrap());
        let r = link_check(&k4(), [1, 3, 2], &TutteParams::default()).unwrap();
        assert!(r.discrete && r.link_holds);
        let svg = to_svg(&k4(), &r.embedding, &r.coloring);
        assert!(svg.starts_with("<svg") && svg.matches("<circle").count() == 4);
    }
}
