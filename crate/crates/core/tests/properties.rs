use std::collections::BTreeSet;

use itertools::Itertools;
use proptest::prelude::*;
use proptest::sample::subsequence;

use wlplanar::catalog::{antiprism, prism, wheel};
use wlplanar::decompose::{p0_set, SeparatorPair};
use wlplanar::graph::{
    components_without, connectivity, is_k_connected, min_separators, parse_graph, smooth_degree2,
    write_graph, ColorInterner,
};
use wlplanar::oracle::{are_isomorphic, canonical_form, canonical_form_ir, isomorphic, orbits};
use wlplanar::wl::{distinguishes, joint_stable, stable_coloring, Coloring, JointRefinement};
use wlplanar::{ColoredGraph, Vertex};

fn graph(max_n: usize) -> impl Strategy<Value = ColoredGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(Vertex, Vertex)> = (0..n).tuple_combinations().collect();
        let m = pairs.len();
        subsequence(pairs, 0..=m).prop_map(move |e| ColoredGraph::from_edges(n, &e).unwrap())
    })
}

fn connected(max_n: usize) -> impl Strategy<Value = ColoredGraph> {
    graph(max_n).prop_filter("connected", ColoredGraph::is_connected)
}

/// A graph with a few random vertex and arc colors.
fn colored(max_n: usize) -> impl Strategy<Value = ColoredGraph> {
    (
        graph(max_n),
        proptest::collection::vec((0usize..64, 0u64..3), 0..6),
    )
        .prop_map(|(mut g, cs)| {
            let n = g.n();
            let edges: Vec<_> = g.edges().collect();
            for (i, c) in cs {
                if i % 2 == 0 || edges.is_empty() {
                    g.set_vertex_color(i % n, c).unwrap();
                } else {
                    let (u, v) = edges[i % edges.len()];
                    g.set_arc_color(u, v, c).unwrap();
                }
            }
            g
        })
}

fn with_perm<S: Strategy<Value = ColoredGraph>>(
    s: S,
) -> impl Strategy<Value = (ColoredGraph, Vec<Vertex>)> {
    s.prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn moved(c: &Coloring, perm: &[Vertex]) -> Vec<u64> {
    let (n, k) = (c.n(), c.k());
    let mut out = vec![0; c.colors().len()];
    for (idx, &col) in c.colors().iter().enumerate() {
        let mut rest = idx;
        let mut image = 0;
        let mut scale = 1;
        for _ in 0..k {
            image += perm[rest % n] * scale;
            rest /= n;
            scale *= n;
        }
        out[image] = col;
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn colorings_follow_relabelings((g, p) in with_perm(colored(6)), k in 1usize..=3) {
        let c = stable_coloring(&g, k).unwrap();
        let d = stable_coloring(&g.relabel(&p), k).unwrap();
        prop_assert_eq!(moved(&c, &p), d.colors().to_vec());
        prop_assert_eq!(c.class_sizes(), d.class_sizes());
        prop_assert!(!distinguishes(&g, &g.relabel(&p), k).unwrap());
    }

    #[test]
    fn rounds_refine(g in colored(7), k in 1usize..=3) {
        let graphs = [g];
        let mut run = JointRefinement::new(&graphs, k).unwrap();
        let mut prev = run.coloring(0);
        while run.step() {
            let next = run.coloring(0);
            prop_assert!(next.refines(&prev));
            prev = next;
        }
    }

    #[test]
    fn hierarchy_and_soundness(g in connected(6), h in connected(6)) {
        let d: Vec<bool> = (1..=3).map(|k| distinguishes(&g, &h, k).unwrap()).collect();
        prop_assert!(!d[0] || d[1]);
        prop_assert!(!d[1] || d[2]);
        if d[0] || d[1] || d[2] {
            prop_assert!(!are_isomorphic(&g, &h).unwrap());
        }
    }

    #[test]
    fn joint_runs_agree_with_pairwise(gs in proptest::collection::vec(colored(6), 2..5), k in 1usize..=3) {
        let joint = joint_stable(&gs, k).unwrap();
        for (i, j) in (0..gs.len()).tuple_combinations() {
            let split = joint[i].class_sizes() != joint[j].class_sizes();
            prop_assert_eq!(split, distinguishes(&gs[i], &gs[j], k).unwrap());
        }
    }

    #[test]
    fn orbits_sit_inside_color_classes(g in colored(7), k in 1usize..=2) {
        let c = stable_coloring(&g, k).unwrap();
        for orbit in orbits(&g).unwrap() {
            let colors: BTreeSet<u64> = orbit.iter().map(|&v| c.vertex_color(v)).collect();
            prop_assert_eq!(colors.len(), 1);
        }
    }

    #[test]
    fn oracle_finds_relabelings((g, p) in with_perm(colored(8))) {
        let h = g.relabel(&p);
        let f = isomorphic(&g, &h).unwrap().expect("relabeling is an isomorphism");
        for (u, v) in g.edges() {
            prop_assert!(h.adjacent(f[u], f[v]));
            prop_assert_eq!(g.arc_color(u, v), h.arc_color(f[u], f[v]));
        }
        for (v, &fv) in f.iter().enumerate() {
            prop_assert_eq!(g.vertex_color(v), h.vertex_color(fv));
        }
    }

    #[test]
    fn canonical_forms_are_invariant((g, p) in with_perm(colored(7))) {
        let h = g.relabel(&p);
        prop_assert_eq!(canonical_form_ir(&g), canonical_form_ir(&h));
        let prefix: Vec<Vertex> = (0..g.n().min(2)).collect();
        let image: Vec<Vertex> = prefix.iter().map(|&v| p[v]).collect();
        prop_assert_eq!(canonical_form(&g, &prefix, 10).unwrap(), canonical_form(&h, &image, 10).unwrap());
    }

    #[test]
    fn canonical_forms_separate(g in colored(6), h in colored(6)) {
        prop_assert_eq!(canonical_form_ir(&g) == canonical_form_ir(&h), are_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn minimum_separators_by_brute_force(g in connected(8)) {
        prop_assume!(!g.is_complete());
        let seps = min_separators(&g).unwrap();
        let c = connectivity(&g);
        let disconnects = |s: &[Vertex]| components_without(&g, s).len() > 1;
        let smaller = (0..c).any(|size| (0..g.n()).combinations(size).any(|s| disconnects(&s)));
        prop_assert!(!smaller);
        let expected: Vec<Vec<Vertex>> = (0..g.n()).combinations(c).filter(|s| disconnects(s)).collect();
        let mut got = seps.clone();
        got.sort();
        prop_assert_eq!(got, expected);
        prop_assert!(is_k_connected(&g, c) && !is_k_connected(&g, c + 1));
    }

    #[test]
    fn p0_follows_relabelings((g, p) in with_perm(connected(8))) {
        prop_assume!(!g.is_complete());
        let mut expected: Vec<SeparatorPair> = p0_set(&g).unwrap().iter().map(|x| x.relabel(&p)).collect();
        expected.sort();
        let mut got = p0_set(&g.relabel(&p)).unwrap();
        got.sort();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn files_round_trip(g in colored(8)) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }
}

fn three_connected_base() -> impl Strategy<Value = ColoredGraph> {
    prop_oneof![
        (3usize..=6).prop_map(|n| prism(n).unwrap()),
        (3usize..=6).prop_map(|n| antiprism(n).unwrap()),
        (3usize..=7).prop_map(|n| wheel(n).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Subdividing edges of a 3-connected graph and smoothing gives back the
    /// base graph; a second smoothing changes nothing.
    #[test]
    fn smoothing_undoes_subdivision(base in three_connected_base(), picks in proptest::collection::vec((0usize..64, 1usize..=3), 1..5)) {
        let base = base.without_rotation();
        let edges: Vec<_> = base.edges().collect();
        let mut g = base.clone();
        let mut used = BTreeSet::new();
        for (i, times) in picks {
            let (u, v) = edges[i % edges.len()];
            if !used.insert((u, v)) {
                continue;
            }
            let mut end = v;
            for _ in 0..times {
                let next = g.n();
                g = g.subdivide_edge(u, end).unwrap();
                end = next;
            }
        }
        let mut colors = ColorInterner::new();
        let once = smooth_degree2(&g, &mut colors).unwrap();
        let twice = smooth_degree2(&once, &mut colors).unwrap();
        prop_assert_eq!(&twice, &once);
        let plain = ColoredGraph::from_edges(once.n(), &once.edges().collect::<Vec<_>>()).unwrap();
        prop_assert!(are_isomorphic(&plain, &base).unwrap());
    }
}

/// The triangular prism with one vertex truncated: cubic, planar,
/// 3-connected, 8 vertices, not the cube.
fn truncated_prism() -> ColoredGraph {
    let e = [
        (1, 2),
        (3, 4),
        (4, 5),
        (3, 5),
        (1, 4),
        (2, 5),
        (0, 1),
        (2, 6),
        (3, 7),
        (0, 6),
        (6, 7),
        (0, 7),
    ];
    ColoredGraph::from_edges(8, &e).unwrap()
}

/// Two copies of K4 minus an edge joined by two edges.
fn two_diamonds() -> ColoredGraph {
    let e = [
        (0, 1),
        (0, 2),
        (1, 2),
        (1, 3),
        (2, 3),
        (4, 5),
        (4, 6),
        (5, 6),
        (5, 7),
        (6, 7),
        (0, 4),
        (3, 7),
    ];
    ColoredGraph::from_edges(8, &e).unwrap()
}

#[test]
fn cube_against_other_cubic_planar_graphs() {
    let cube = prism(4).unwrap().without_rotation();
    for other in [truncated_prism(), two_diamonds()] {
        assert!(other.degrees().iter().all(|&d| d == 3));
        assert!(!are_isomorphic(&cube, &other).unwrap());
        assert!(distinguishes(&cube, &other, 3).unwrap());
    }
    assert!(is_k_connected(&truncated_prism(), 3));
}
