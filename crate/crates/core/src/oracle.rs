//! Brute-force isomorphism, automorphism and canonical-form computations.
//!
//! Searches backtrack over vertex maps; candidates are restricted to
//! vertices with the same stable 1-WL color in a joint run, and every
//! partial map must preserve adjacency and all arc colors.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, Vertex};
use crate::wl::{joint_stable, stable_coloring};

/// Default bound on `n` for isomorphism and automorphism searches.
pub const DEFAULT_ORACLE_LIMIT: usize = 16;
/// Default bound on `n` for exhaustive canonical forms.
pub const DEFAULT_CANONICAL_LIMIT: usize = 10;
pub const ORACLE_LIMIT_VAR: &str = "WLPLANAR_ORACLE_LIMIT";

/// The oracle size cap, from `WLPLANAR_ORACLE_LIMIT` when set.
pub fn oracle_limit() -> usize {
    std::env::var(ORACLE_LIMIT_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_ORACLE_LIMIT)
}

fn check_limit(n: usize) -> Result<()> {
    let limit = oracle_limit();
    if n > limit {
        Err(Error::OracleLimit { n, limit })
    } else {
        Ok(())
    }
}

struct Matcher<'a> {
    g: &'a ColoredGraph,
    h: &'a ColoredGraph,
    order: Vec<Vertex>,
    candidates: Vec<Vec<Vertex>>,
    map: Vec<Option<Vertex>>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn new<'a>(g: &'a ColoredGraph, h: &'a ColoredGraph) -> Matcher<'a> {
        let pair = [g.clone(), h.clone()];
        let c = joint_stable(&pair, 1).expect("dimension 1 is valid");
        let (cg, ch) = (&c[0], &c[1]);
        let n = g.n();
        let class_size = |col: Color| (0..n).filter(|&v| cg.vertex_color(v) == col).count();

        // greedy order: smallest class first, then most already-placed neighbors
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        for _ in 0..n {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .min_by_key(|&v| {
                    let linked = g.neighbors(v).iter().filter(|&&w| placed[w]).count();
                    (usize::MAX - linked, class_size(cg.vertex_color(v)), v)
                })
                .expect("unplaced vertex remains");
            placed[next] = true;
            order.push(next);
        }
        let candidates = (0..n)
            .map(|u| {
                (0..n)
                    .filter(|&x| ch.vertex_color(x) == cg.vertex_color(u))
                    .collect()
            })
            .collect();
        Matcher {
            g,
            h,
            order,
            candidates,
            map: vec![None; n],
            used: vec![false; n],
        }
    }

    fn consistent(&self, u: Vertex, x: Vertex) -> bool {
        if self.g.vertex_color(u) != self.h.vertex_color(x) {
            return false;
        }
        self.order.iter().all(|&w| match self.map[w] {
            None => true,
            Some(y) => {
                self.g.adjacent(u, w) == self.h.adjacent(x, y)
                    && self.g.arc_color(u, w) == self.h.arc_color(x, y)
                    && self.g.arc_color(w, u) == self.h.arc_color(y, x)
            }
        })
    }

    /// Depth-first search; `visit` receives each complete map and returns
    /// `false` to stop.
    fn search(&mut self, depth: usize, visit: &mut dyn FnMut(&[Vertex]) -> bool) -> bool {
        if depth == self.order.len() {
            let full: Vec<Vertex> = self.map.iter().map(|m| m.expect("complete")).collect();
            return visit(&full);
        }
        let u = self.order[depth];
        for i in 0..self.candidates[u].len() {
            let x = self.candidates[u][i];
            if self.used[x] || !self.consistent(u, x) {
                continue;
            }
            self.map[u] = Some(x);
            self.used[x] = true;
            let cont = self.search(depth + 1, visit);
            self.map[u] = None;
            self.used[x] = false;
            if !cont {
                return false;
            }
        }
        true
    }
}

fn quick_reject(g: &ColoredGraph, h: &ColoredGraph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return true;
    }
    let mut a = g.degrees();
    let mut b = h.degrees();
    a.sort_unstable();
    b.sort_unstable();
    a != b
}

/// A bijection `f` (vertex `v` of `g` maps to `f[v]` of `h`) preserving edges
/// and all arc colors, if one exists.
pub fn isomorphic(g: &ColoredGraph, h: &ColoredGraph) -> Result<Option<Vec<Vertex>>> {
    if quick_reject(g, h) {
        return Ok(None);
    }
    check_limit(g.n())?;
    let mut m = Matcher::new(g, h);
    let mut found = None;
    m.search(0, &mut |f| {
        found = Some(f.to_vec());
        false
    });
    Ok(found)
}

pub fn are_isomorphic(g: &ColoredGraph, h: &ColoredGraph) -> Result<bool> {
    Ok(isomorphic(g, h)?.is_some())
}

/// The full automorphism group as a list of permutations, identity first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismSet {
    perms: Vec<Vec<Vertex>>,
}

impl AutomorphismSet {
    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Vertex]> {
        self.perms.iter().map(Vec::as_slice)
    }

    pub fn contains(&self, p: &[Vertex]) -> bool {
        self.perms.binary_search_by(|q| q.as_slice().cmp(p)).is_ok()
    }

    /// Whether some non-identity element fixes every vertex of `set`.
    pub fn stabilizer_nontrivial(&self, set: &[Vertex]) -> bool {
        self.iter()
            .any(|p| p.iter().enumerate().any(|(v, &x)| v != x) && set.iter().all(|&s| p[s] == s))
    }
}

pub fn automorphisms(g: &ColoredGraph) -> Result<AutomorphismSet> {
    check_limit(g.n())?;
    let mut m = Matcher::new(g, g);
    let mut perms = Vec::new();
    m.search(0, &mut |f| {
        perms.push(f.to_vec());
        true
    });
    perms.sort();
    Ok(AutomorphismSet { perms })
}

fn orbits_of(n: usize, group: &AutomorphismSet) -> Vec<Vec<Vertex>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while parent[r] != r {
            r = parent[r];
        }
        let mut x = v;
        while parent[x] != r {
            let next = parent[x];
            parent[x] = r;
            x = next;
        }
        r
    }
    for p in group.iter() {
        for (v, &x) in p.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, x));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut out: Vec<Vec<Vertex>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        if slot[r] == usize::MAX {
            slot[r] = out.len();
            out.push(Vec::new());
        }
        out[slot[r]].push(v);
    }
    out
}

/// Orbits of the automorphism group, each sorted, ordered by least vertex.
pub fn orbits(g: &ColoredGraph) -> Result<Vec<Vec<Vertex>>> {
    Ok(orbits_of(g.n(), &automorphisms(g)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixingNumber {
    pub value: usize,
    /// The lexicographically first set of minimum size with trivial
    /// pointwise stabilizer.
    pub witness: Vec<Vertex>,
}

pub fn fixing_number(g: &ColoredGraph) -> Result<FixingNumber> {
    let group = automorphisms(g)?;
    for size in 0..=g.n() {
        if let Some(witness) = (0..g.n())
            .combinations(size)
            .find(|s| !group.stabilizer_nontrivial(s))
        {
            return Ok(FixingNumber {
                value: size,
                witness,
            });
        }
    }
    unreachable!("fixing all vertices leaves only the identity")
}

struct Canon<'a> {
    g: &'a ColoredGraph,
    /// Position `p` may hold only vertices of `slots[p]`.
    slots: Vec<Vec<Vertex>>,
    perm: Vec<Vertex>,
    used: Vec<bool>,
    current: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl Canon<'_> {
    fn segment(&self, p: usize, v: Vertex) -> Vec<u64> {
        let g = self.g;
        let entry = |a: Vertex, b: Vertex| -> [u64; 2] {
            match g.arc_color(a, b) {
                Some(c) if a != b => [1, c],
                _ => [0, 0],
            }
        };
        let mut seg = Vec::with_capacity(1 + 4 * p);
        seg.push(g.vertex_color(v));
        for &w in &self.perm[..p] {
            seg.extend(entry(v, w));
            seg.extend(entry(w, v));
        }
        seg
    }

    fn search(&mut self, p: usize) {
        if p == self.slots.len() {
            if self.best.as_ref().is_none_or(|b| self.current < *b) {
                self.best = Some(self.current.clone());
            }
            return;
        }
        for i in 0..self.slots[p].len() {
            let v = self.slots[p][i];
            if self.used[v] {
                continue;
            }
            let start = self.current.len();
            let seg = self.segment(p, v);
            self.current.extend(seg);
            let end = self.current.len();
            // prune orderings whose encoding already exceeds the best one
            if self
                .best
                .as_ref()
                .is_none_or(|b| self.current[..] <= b[..end])
            {
                self.perm.push(v);
                self.used[v] = true;
                self.search(p + 1);
                self.used[v] = false;
                self.perm.pop();
            }
            self.current.truncate(start);
        }
    }
}

fn run_canon(g: &ColoredGraph, prefix: &[Vertex], slots: Vec<Vec<Vertex>>) -> Vec<u64> {
    let mut c = Canon {
        g,
        slots,
        perm: Vec::with_capacity(g.n()),
        used: vec![false; g.n()],
        current: vec![g.n() as u64, prefix.len() as u64],
        best: None,
    };
    c.search(0);
    c.best.expect("some ordering exists")
}

fn check_prefix(g: &ColoredGraph, prefix: &[Vertex]) -> Result<()> {
    let mut seen = vec![false; g.n()];
    for &v in prefix {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        if seen[v] {
            return Err(Error::RepeatedVertex(v));
        }
        seen[v] = true;
    }
    Ok(())
}

/// Lexicographically least encoding of `g` over all vertex orderings that
/// start with `prefix`. The encoding is `[n, |prefix|]` followed, for each
/// position `p`, by the vertex color and then, for every earlier position
/// `q`, the entries of `(p, q)` and `(q, p)`: `[1, λ]` for an edge and
/// `[0, 0]` otherwise. Equal forms mean isomorphic graphs under a map that
/// respects the prefix order.
pub fn canonical_form(g: &ColoredGraph, prefix: &[Vertex], limit: usize) -> Result<Vec<u64>> {
    if g.n() > limit {
        return Err(Error::CanonicalLimit { n: g.n(), limit });
    }
    check_prefix(g, prefix)?;
    let rest: Vec<Vertex> = (0..g.n()).filter(|v| !prefix.contains(v)).collect();
    let slots = (0..g.n())
        .map(|p| {
            if p < prefix.len() {
                vec![prefix[p]]
            } else {
                rest.clone()
            }
        })
        .collect();
    Ok(run_canon(g, prefix, slots))
}

fn encode_order(g: &ColoredGraph, order: &[Vertex]) -> Vec<u64> {
    let mut c = Canon {
        g,
        slots: Vec::new(),
        perm: Vec::with_capacity(g.n()),
        used: Vec::new(),
        current: vec![g.n() as u64, 0],
        best: None,
    };
    for (p, &v) in order.iter().enumerate() {
        let seg = c.segment(p, v);
        c.current.extend(seg);
        c.perm.push(v);
    }
    c.current
}

fn ir_search(g: &ColoredGraph, vertex_colors: &[Color], best: &mut Option<Vec<u64>>) {
    let mut h = g.clone();
    for (v, &c) in vertex_colors.iter().enumerate() {
        h.set_vertex_color(v, c).expect("vertex in range");
    }
    let c = stable_coloring(&h, 1).expect("dimension 1 is valid");
    let classes = c.classes();
    match classes.values().find(|cell| cell.len() > 1) {
        None => {
            let order: Vec<Vertex> = classes.values().map(|cell| cell[0][0]).collect();
            let form = encode_order(g, &order);
            if best.as_ref().is_none_or(|b| form < *b) {
                *best = Some(form);
            }
        }
        Some(cell) => {
            for t in cell {
                let next: Vec<Color> = (0..g.n())
                    .map(|v| (c.vertex_color(v) << 1) | u64::from(v == t[0]))
                    .collect();
                ir_search(g, &next, best);
            }
        }
    }
}

/// Canonical form by individualization-refinement: the search branches on
/// every vertex of the first non-singleton stable 1-WL class until the
/// coloring is discrete, and keeps the least encoding (as in
/// [`canonical_form`]) of the resulting vertex orders. The tree is small for
/// graphs that few individualized vertices make discrete, such as
/// 3-connected planar graphs.
pub fn canonical_form_ir(g: &ColoredGraph) -> Vec<u64> {
    let start: Vec<Color> = (0..g.n()).map(|v| g.vertex_color(v)).collect();
    let mut best = None;
    ir_search(g, &start, &mut best);
    best.unwrap_or_else(|| vec![0, 0])
}
