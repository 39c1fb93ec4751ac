//! Face tracing on rotation systems.
//!
//! The dart `u -> v` is followed by `v -> w`, where `w` is the neighbor
//! after `u` in the cyclic order at `v`. Every dart lies on exactly one face.

use super::{ColoredGraph, Vertex};
use crate::error::{Error, Result};

/// Traces all faces without the Euler check. Each face is listed starting at
/// its lexicographically smallest dart; faces are ordered by that dart.
pub fn faces_unchecked(g: &ColoredGraph) -> Result<Vec<Vec<Vertex>>> {
    let rot = g.rotation().ok_or(Error::MissingRotation)?;
    let n = g.n();
    // position of each neighbor within rot[v]
    let pos: Vec<Vec<(Vertex, usize)>> = rot
        .iter()
        .map(|order| {
            let mut p: Vec<(Vertex, usize)> = order.iter().copied().zip(0..).collect();
            p.sort_unstable();
            p
        })
        .collect();
    let index_at = |v: Vertex, u: Vertex| -> usize {
        let p = &pos[v];
        p[p.binary_search_by_key(&u, |&(w, _)| w)
            .expect("rotation lists all neighbors")]
        .1
    };
    let next = |u: Vertex, v: Vertex| -> Vertex {
        let order = &rot[v];
        order[(index_at(v, u) + 1) % order.len()]
    };

    let mut used: Vec<Vec<bool>> = (0..n).map(|v| vec![false; rot[v].len()]).collect();
    let mut out = Vec::new();
    for u in 0..n {
        for &v in g.neighbors(u) {
            if used[u][index_at(u, v)] {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut b) = (u, v);
            loop {
                used[a][index_at(a, b)] = true;
                face.push(a);
                let c = next(a, b);
                a = b;
                b = c;
                if (a, b) == (u, v) {
                    break;
                }
            }
            out.push(face);
        }
    }
    Ok(out)
}

/// Traces all faces and checks `V - E + F = 2`. Requires a connected graph
/// with at least one edge.
pub fn faces(g: &ColoredGraph) -> Result<Vec<Vec<Vertex>>> {
    if g.rotation().is_none() {
        return Err(Error::MissingRotation);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let f = faces_unchecked(g)?;
    let (v, e) = (g.n(), g.edge_count());
    if e == 0 || v + f.len() != e + 2 {
        return Err(Error::EulerCheck {
            vertices: v,
            edges: e,
            faces: f.len(),
        });
    }
    Ok(f)
}

/// Whether all `vs` appear on one of `faces`.
pub fn vertices_share_face(faces: &[Vec<Vertex>], vs: &[Vertex]) -> bool {
    faces.iter().any(|f| vs.iter().all(|v| f.contains(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph};

    #[test]
    fn k4_has_four_triangles() {
        let g = complete_graph(4)
            .with_rotation(vec![
                vec![1, 2, 3],
                vec![0, 3, 2],
                vec![0, 1, 3],
                vec![0, 2, 1],
            ])
            .unwrap();
        let f = faces(&g).unwrap();
        assert_eq!(f.len(), 4);
        assert!(f.iter().all(|c| c.len() == 3));
        assert!(vertices_share_face(&f, &[0, 1, 3]));
    }

    #[test]
    fn nonplanar_rotation_fails_euler() {
        // every vertex uses ascending order: a toroidal embedding of K4
        let g = complete_graph(4)
            .with_rotation(vec![
                vec![1, 2, 3],
                vec![0, 2, 3],
                vec![0, 1, 3],
                vec![0, 1, 2],
            ])
            .unwrap();
        assert!(matches!(faces(&g), Err(Error::EulerCheck { .. })));
    }

    #[test]
    fn cycle_has_two_faces() {
        let n = 5;
        let rot = (0..n).map(|v| vec![(v + n - 1) % n, (v + 1) % n]).collect();
        let g = cycle_graph(n).with_rotation(rot).unwrap();
        let f = faces(&g).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|c| c.len() == 5));
    }

    #[test]
    fn missing_rotation() {
        assert!(matches!(
            faces(&complete_graph(3)),
            Err(Error::MissingRotation)
        ));
    }
}
