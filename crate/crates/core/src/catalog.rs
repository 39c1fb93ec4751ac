//! Polyhedral generators, the exception test and the test corpus.
//!
//! Solids are built from consistently oriented face lists. The rotation at
//! `v` follows from the faces: whenever `a, v, b` are consecutive on a face,
//! `b` comes right after `a` in the cyclic order at `v`, so face tracing
//! reproduces the faces listed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    faces, is_k_connected, is_planar_small, planar_rotation_small, ColoredGraph, Vertex,
};
use crate::oracle::{are_isomorphic, canonical_form_ir, oracle_limit, orbits};
use crate::wl::individualization_is_discrete;

/// Largest `n` accepted by the exhaustive part of [`corpus`].
pub const CORPUS_LIMIT: usize = 7;

/// The solids of the fixing-number-3 classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Solid {
    Bipyramid(usize),
    Tetrahedron,
    Cube,
    TriakisTetrahedron,
    Icosahedron,
    RhombicDodecahedron,
    TriakisOctahedron,
    TetrakisHexahedron,
}

impl fmt::Display for Solid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Solid::Bipyramid(n) => write!(f, "bipyramid({n})"),
            Solid::Tetrahedron => f.write_str("tetrahedron"),
            Solid::Cube => f.write_str("cube"),
            Solid::TriakisTetrahedron => f.write_str("triakis-tetrahedron"),
            Solid::Icosahedron => f.write_str("icosahedron"),
            Solid::RhombicDodecahedron => f.write_str("rhombic-dodecahedron"),
            Solid::TriakisOctahedron => f.write_str("triakis-octahedron"),
            Solid::TetrakisHexahedron => f.write_str("tetrakis-hexahedron"),
        }
    }
}

impl Solid {
    pub const FIXED: [Solid; 7] = [
        Solid::Tetrahedron,
        Solid::Cube,
        Solid::TriakisTetrahedron,
        Solid::Icosahedron,
        Solid::RhombicDodecahedron,
        Solid::TriakisOctahedron,
        Solid::TetrakisHexahedron,
    ];

    /// Bipyramids on rims 3 to 8 followed by the seven other solids.
    pub fn figure1() -> Vec<Solid> {
        (3..=8).map(Solid::Bipyramid).chain(Solid::FIXED).collect()
    }

    pub fn spec(&self) -> SolidSpec {
        let t = |pairs: &[(usize, usize)]| -> BTreeMap<usize, usize> {
            let mut m = BTreeMap::new();
            for &(size, count) in pairs {
                *m.entry(size).or_insert(0) += count;
            }
            m
        };
        let (v, e, f, vt, ft) = match *self {
            Solid::Bipyramid(n) => (n + 2, 3 * n, 2 * n, t(&[(n, 2), (4, n)]), t(&[(3, 2 * n)])),
            Solid::Tetrahedron => (4, 6, 4, t(&[(3, 4)]), t(&[(3, 4)])),
            Solid::Cube => (8, 12, 6, t(&[(3, 8)]), t(&[(4, 6)])),
            Solid::TriakisTetrahedron => (8, 18, 12, t(&[(3, 4), (6, 4)]), t(&[(3, 12)])),
            Solid::Icosahedron => (12, 30, 20, t(&[(5, 12)]), t(&[(3, 20)])),
            Solid::RhombicDodecahedron => (14, 24, 12, t(&[(3, 8), (4, 6)]), t(&[(4, 12)])),
            Solid::TriakisOctahedron => (14, 36, 24, t(&[(3, 8), (8, 6)]), t(&[(3, 24)])),
            Solid::TetrakisHexahedron => (14, 36, 24, t(&[(4, 6), (6, 8)]), t(&[(3, 24)])),
        };
        SolidSpec {
            name: self.to_string(),
            vertices: v,
            edges: e,
            faces: f,
            v_type: vt,
            f_type: ft,
        }
    }
}

impl std::str::FromStr for Solid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(arg) = s
            .strip_prefix("bipyramid(")
            .and_then(|r| r.strip_suffix(')'))
        {
            let n = arg
                .parse()
                .map_err(|_| Error::UnknownSolid(s.to_string()))?;
            return Ok(Solid::Bipyramid(n));
        }
        Solid::FIXED
            .into_iter()
            .find(|x| x.to_string() == s)
            .ok_or_else(|| Error::UnknownSolid(s.to_string()))
    }
}

/// A row of the solid table: counts and degree/face-length multisets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolidSpec {
    pub name: String,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    /// degree -> number of vertices
    pub v_type: BTreeMap<usize, usize>,
    /// face length -> number of faces
    pub f_type: BTreeMap<usize, usize>,
}

/// Measures `g` (which must carry a planar rotation) as a table row.
pub fn measure(name: &str, g: &ColoredGraph) -> Result<SolidSpec> {
    let fs = faces(g)?;
    let mut v_type = BTreeMap::new();
    for d in g.degrees() {
        *v_type.entry(d).or_insert(0) += 1;
    }
    let mut f_type = BTreeMap::new();
    for f in &fs {
        *f_type.entry(f.len()).or_insert(0) += 1;
    }
    Ok(SolidSpec {
        name: name.to_string(),
        vertices: g.n(),
        edges: g.edge_count(),
        faces: fs.len(),
        v_type,
        f_type,
    })
}

/// Writes a multiset as `7{4}+2{7}`, ordered by key.
pub fn format_type(t: &BTreeMap<usize, usize>) -> String {
    t.iter().map(|(k, c)| format!("{c}{{{k}}}")).join("+")
}

/// Graph with rotation from oriented faces.
pub fn from_faces(n: usize, faces: &[Vec<Vertex>]) -> Result<ColoredGraph> {
    let mut g = ColoredGraph::new(n);
    let mut succ: Vec<BTreeMap<Vertex, Vertex>> = vec![BTreeMap::new(); n];
    for f in faces {
        let len = f.len();
        for i in 0..len {
            let (a, v, b) = (f[i], f[(i + 1) % len], f[(i + 2) % len]);
            if !g.adjacent(a, v) {
                g.add_edge(a, v)?;
            }
            if succ[v].insert(a, b).is_some() {
                return Err(Error::InvalidRotation {
                    vertex: v,
                    reason: format!("dart {a}->{v} lies on two faces"),
                });
            }
        }
    }
    let mut rot = Vec::with_capacity(n);
    for (v, s) in succ.iter().enumerate() {
        let Some((&start, _)) = s.iter().next() else {
            rot.push(Vec::new());
            continue;
        };
        let mut order = vec![start];
        let mut at = s[&start];
        while at != start {
            order.push(at);
            at = *s.get(&at).ok_or_else(|| Error::InvalidRotation {
                vertex: v,
                reason: format!("faces around {v} do not close up"),
            })?;
        }
        rot.push(order);
    }
    g.with_rotation(rot)
}

/// An oriented face list.
#[derive(Clone, Debug)]
struct Polyhedron {
    n: usize,
    faces: Vec<Vec<Vertex>>,
}

impl Polyhedron {
    fn build(&self) -> Result<ColoredGraph> {
        let g = from_faces(self.n, &self.faces)?;
        faces(&g)?;
        Ok(g)
    }

    /// Replaces each selected face by a pyramid over it.
    fn stellate(&self, pick: impl Fn(usize, &[Vertex]) -> bool) -> Polyhedron {
        let mut n = self.n;
        let mut out = Vec::new();
        for (i, f) in self.faces.iter().enumerate() {
            if !pick(i, f) {
                out.push(f.clone());
                continue;
            }
            let apex = n;
            n += 1;
            for j in 0..f.len() {
                out.push(vec![f[j], f[(j + 1) % f.len()], apex]);
            }
        }
        Polyhedron { n, faces: out }
    }

    fn kleetope(&self) -> Polyhedron {
        self.stellate(|_, _| true)
    }
}

fn bipyramid_faces(n: usize) -> Polyhedron {
    let mut faces = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![i, j, n]);
        faces.push(vec![j, i, n + 1]);
    }
    Polyhedron { n: n + 2, faces }
}

fn prism_faces(n: usize) -> Polyhedron {
    let mut faces = vec![(0..n).collect(), (n..2 * n).rev().collect()];
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![j, i, n + i, n + j]);
    }
    Polyhedron { n: 2 * n, faces }
}

fn antiprism_faces(n: usize) -> Polyhedron {
    let mut faces = vec![(0..n).collect(), (n..2 * n).rev().collect()];
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![j, i, n + i]);
        faces.push(vec![n + i, n + j, j]);
    }
    Polyhedron { n: 2 * n, faces }
}

fn wheel_faces(rim: usize) -> Polyhedron {
    let mut faces = vec![(0..rim).rev().collect()];
    for i in 0..rim {
        faces.push(vec![i, (i + 1) % rim, rim]);
    }
    Polyhedron { n: rim + 1, faces }
}

fn icosahedron_faces() -> Polyhedron {
    // the pentagonal antiprism with both caps replaced by pyramids
    antiprism_faces(5).stellate(|i, _| i < 2)
}

fn rhombic_dodecahedron_faces() -> Polyhedron {
    let cube = prism_faces(4);
    // face containing each dart
    let mut face_of = BTreeMap::new();
    for (i, f) in cube.faces.iter().enumerate() {
        for j in 0..f.len() {
            face_of.insert((f[j], f[(j + 1) % f.len()]), i);
        }
    }
    let center = |i: usize| cube.n + i;
    let mut faces = Vec::new();
    for (&(a, b), &left) in &face_of {
        if a < b {
            let right = face_of[&(b, a)];
            faces.push(vec![a, center(right), b, center(left)]);
        }
    }
    Polyhedron {
        n: cube.n + cube.faces.len(),
        faces,
    }
}

fn check_size(name: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::InvalidParameter(format!(
            "{name} needs n >= {min}, got {n}"
        )))
    } else {
        Ok(())
    }
}

/// Bipyramid over an `n`-cycle: rim `0..n`, apexes `n` and `n + 1`.
pub fn bipyramid(n: usize) -> Result<ColoredGraph> {
    check_size("bipyramid", n, 3)?;
    bipyramid_faces(n).build()
}

/// Prism: top cycle `0..n`, bottom cycle `n..2n`, rungs `i - (n+i)`.
pub fn prism(n: usize) -> Result<ColoredGraph> {
    check_size("prism", n, 3)?;
    prism_faces(n).build()
}

/// Antiprism: bottom vertex `n+i` is joined to top vertices `i` and `i+1`.
pub fn antiprism(n: usize) -> Result<ColoredGraph> {
    check_size("antiprism", n, 3)?;
    antiprism_faces(n).build()
}

/// Wheel: rim `0..rim`, hub `rim`.
pub fn wheel(rim: usize) -> Result<ColoredGraph> {
    check_size("wheel", rim, 3)?;
    wheel_faces(rim).build()
}

pub fn triakis_icosahedron() -> Result<ColoredGraph> {
    icosahedron_faces().kleetope().build()
}

pub fn generate(solid: Solid) -> Result<ColoredGraph> {
    match solid {
        Solid::Bipyramid(n) => bipyramid(n),
        Solid::Tetrahedron => wheel(3),
        Solid::Cube => prism(4),
        Solid::TriakisTetrahedron => wheel_faces(3).kleetope().build(),
        Solid::Icosahedron => icosahedron_faces().build(),
        Solid::RhombicDodecahedron => rhombic_dodecahedron_faces().build(),
        Solid::TriakisOctahedron => bipyramid_faces(4).kleetope().build(),
        Solid::TetrakisHexahedron => prism_faces(4).kleetope().build(),
    }
}

/// Generates a named graph: any solid, `prism(n)`, `antiprism(n)`,
/// `wheel(n)`, `octahedron` or `triakis-icosahedron`.
pub fn generate_named(name: &str) -> Result<ColoredGraph> {
    let arg = |prefix: &str| -> Option<Result<usize>> {
        name.strip_prefix(prefix)
            .and_then(|r| r.strip_prefix('('))
            .and_then(|r| r.strip_suffix(')'))
            .map(|a| a.parse().map_err(|_| Error::UnknownSolid(name.to_string())))
    };
    if let Some(n) = arg("prism") {
        return prism(n?);
    }
    if let Some(n) = arg("antiprism") {
        return antiprism(n?);
    }
    if let Some(n) = arg("wheel") {
        return wheel(n?);
    }
    match name {
        "octahedron" => bipyramid(4),
        "triakis-icosahedron" => triakis_icosahedron(),
        _ => generate(name.parse()?),
    }
}

/// A solid's expected row next to the measured one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub expected: SolidSpec,
    pub measured: SolidSpec,
    pub matches: bool,
}

pub fn table_row(solid: Solid) -> Result<TableRow> {
    let expected = solid.spec();
    let measured = measure(&expected.name, &generate(solid)?)?;
    let matches = expected == measured;
    Ok(TableRow {
        expected,
        measured,
        matches,
    })
}

/// An ordered pair whose individualization makes 1-WL discrete, if any.
///
/// Within the oracle limit only one first vertex per automorphism orbit is
/// tried.
pub fn discrete_pair(g: &ColoredGraph) -> Result<Option<(Vertex, Vertex)>> {
    let firsts: Vec<Vertex> = if g.n() <= oracle_limit() {
        orbits(g)?.into_iter().map(|o| o[0]).collect()
    } else {
        (0..g.n()).collect()
    };
    for v in firsts {
        for w in 0..g.n() {
            if w != v && individualization_is_discrete(g, &[v, w])? {
                return Ok(Some((v, w)));
            }
        }
    }
    Ok(None)
}

/// Whether no two individualized vertices make 1-WL discrete. Requires a
/// 3-connected graph with a planar rotation.
pub fn is_exception(g: &ColoredGraph) -> Result<bool> {
    if !is_k_connected(g, 3) {
        return Err(Error::NotThreeConnected);
    }
    faces(g)?;
    Ok(discrete_pair(g)?.is_none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Exhaustive,
    Prism,
    Antiprism,
    Wheel,
    Solid,
    TriakisIcosahedron,
    Subdivided,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub family: Family,
    pub graph: ColoredGraph,
    pub planar: bool,
    pub canonical: Vec<u64>,
}

impl CorpusEntry {
    fn new(name: String, family: Family, graph: ColoredGraph, planar: bool) -> Self {
        let canonical = canonical_form_ir(&graph);
        CorpusEntry {
            name,
            family,
            graph,
            planar,
            canonical,
        }
    }

    pub fn canonical_id(&self) -> String {
        canonical_id(&self.canonical)
    }

    pub fn is_three_connected_planar(&self) -> bool {
        self.planar && is_k_connected(&self.graph, 3)
    }
}

/// Short hex digest (64-bit FNV-1a) of a canonical form.
pub fn canonical_id(form: &[u64]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for word in form {
        for b in word.to_le_bytes() {
            h = (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3);
        }
    }
    format!("{h:016x}")
}

/// Connected graphs on exactly `n` vertices, one per isomorphism class,
/// sorted by edge count and canonical form.
pub fn connected_graphs(n: usize) -> Result<Vec<ColoredGraph>> {
    if n > CORPUS_LIMIT {
        return Err(Error::CorpusLimit(n));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let pairs: Vec<(Vertex, Vertex)> = (0..n).tuple_combinations().collect();
    let forms: BTreeMap<(usize, Vec<u64>), u64> = (0u64..1 << pairs.len())
        .into_par_iter()
        .filter(|mask| mask.count_ones() as usize + 1 >= n)
        .filter_map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = ColoredGraph::from_edges(n, &edges).expect("distinct pairs");
            g.is_connected()
                .then(|| ((edges.len(), canonical_form_ir(&g)), mask))
        })
        .fold(BTreeMap::new, |mut acc, (key, mask)| {
            let slot = acc.entry(key).or_insert(mask);
            *slot = (*slot).min(mask);
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, m) in b {
                let slot = a.entry(k).or_insert(m);
                *slot = (*slot).min(m);
            }
            a
        });
    Ok(forms
        .into_values()
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            ColoredGraph::from_edges(n, &edges).expect("distinct pairs")
        })
        .collect())
}

/// Attaches a planar rotation to small 3-connected planar graphs, which
/// have exactly one embedding up to mirror image.
fn with_found_rotation(g: ColoredGraph) -> ColoredGraph {
    if !is_k_connected(&g, 3) {
        return g;
    }
    match planar_rotation_small(&g) {
        Ok(Some(rot)) => g.with_rotation(rot).expect("search lists neighbors"),
        _ => g,
    }
}

/// Every connected graph with at most `max_n` vertices; planar 3-connected
/// ones get a rotation system.
pub fn exhaustive(max_n: usize) -> Result<Vec<CorpusEntry>> {
    if max_n > CORPUS_LIMIT {
        return Err(Error::CorpusLimit(max_n));
    }
    let mut out = Vec::new();
    for n in 1..=max_n {
        let graphs = connected_graphs(n)?;
        let entries: Vec<CorpusEntry> = graphs
            .into_par_iter()
            .enumerate()
            .map(|(i, g)| {
                let planar = is_planar_small(&g).expect("n within the planarity limit");
                let g = if planar { with_found_rotation(g) } else { g };
                CorpusEntry::new(format!("n{n}-{i:03}"), Family::Exhaustive, g, planar)
            })
            .collect();
        out.extend(entries);
    }
    Ok(out)
}

/// Prisms and antiprisms on 3 to 8, wheels on rims 4 to 10, the solids,
/// the triakis icosahedron, and each of these with its first edge
/// subdivided.
pub fn curated() -> Result<Vec<CorpusEntry>> {
    let mut base: Vec<(String, Family, ColoredGraph)> = Vec::new();
    for n in 3..=8 {
        base.push((format!("prism({n})"), Family::Prism, prism(n)?));
    }
    for n in 3..=8 {
        base.push((format!("antiprism({n})"), Family::Antiprism, antiprism(n)?));
    }
    for rim in 4..=10 {
        base.push((format!("wheel({rim})"), Family::Wheel, wheel(rim)?));
    }
    for s in Solid::figure1() {
        base.push((s.to_string(), Family::Solid, generate(s)?));
    }
    base.push((
        "triakis-icosahedron".into(),
        Family::TriakisIcosahedron,
        triakis_icosahedron()?,
    ));
    let mut all = base.clone();
    for (name, _, g) in &base {
        let (u, v) = g.edges().next().expect("solids have edges");
        all.push((
            format!("subdivided({name})"),
            Family::Subdivided,
            g.subdivide_edge(u, v)?,
        ));
    }
    Ok(all
        .into_par_iter()
        .map(|(name, family, g)| CorpusEntry::new(name, family, g, true))
        .collect())
}

/// [`exhaustive`] up to `max_n` followed by [`curated`].
pub fn corpus(max_n: usize) -> Result<Vec<CorpusEntry>> {
    let mut out = exhaustive(max_n)?;
    out.extend(curated()?);
    Ok(out)
}

/// Solids of the classification isomorphic to `g`.
pub fn matching_solid(g: &ColoredGraph) -> Result<Option<Solid>> {
    for s in Solid::figure1() {
        let h = generate(s)?;
        if h.n() == g.n() && are_isomorphic(&h, g)? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Face triples: every 3-subset of the vertices of each face, deduplicated.
pub fn face_triples(g: &ColoredGraph) -> Result<Vec<[Vertex; 3]>> {
    let mut out = BTreeSet::new();
    for f in faces(g)? {
        let mut vs = f.clone();
        vs.sort_unstable();
        vs.dedup();
        for t in vs.into_iter().combinations(3) {
            out.insert([t[0], t[1], t[2]]);
        }
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixing_number;

    #[test]
    fn solids_match_their_rows() {
        for s in Solid::figure1() {
            let row = table_row(s).unwrap();
            assert!(row.matches, "{s}: {row:?}");
        }
    }

    #[test]
    fn table_examples() {
        let b7 = measure("b7", &bipyramid(7).unwrap()).unwrap();
        assert_eq!((b7.vertices, b7.edges, b7.faces), (9, 21, 14));
        assert_eq!(format_type(&b7.v_type), "7{4}+2{7}");
        let th = table_row(Solid::TetrakisHexahedron).unwrap().measured;
        assert_eq!((th.vertices, th.edges, th.faces), (14, 36, 24));
        assert!(matches!(bipyramid(2), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn octahedron_is_square_bipyramid() {
        assert!(are_isomorphic(&bipyramid(4).unwrap(), &antiprism(3).unwrap()).unwrap());
    }

    #[test]
    fn face_examples() {
        let cube = generate(Solid::Cube).unwrap();
        let f = faces(&cube).unwrap();
        assert!(f.len() == 6 && f.iter().all(|c| c.len() == 4));
        let ico = generate(Solid::Icosahedron).unwrap();
        let f = faces(&ico).unwrap();
        assert!(f.len() == 20 && f.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn exception_examples() {
        assert!(is_exception(&generate(Solid::Icosahedron).unwrap()).unwrap());
        assert!(!is_exception(&prism(3).unwrap()).unwrap());
        assert!(!is_exception(&wheel(5).unwrap()).unwrap());
        assert!(!is_exception(&triakis_icosahedron().unwrap()).unwrap());
    }

    #[test]
    fn triakis_tetrahedron_orbits() {
        let orbs = orbits(&generate(Solid::TriakisTetrahedron).unwrap()).unwrap();
        let mut sizes: Vec<usize> = orbs.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![4, 4]);
        assert_eq!(
            fixing_number(&generate(Solid::Cube).unwrap())
                .unwrap()
                .value,
            3
        );
    }

    #[test]
    fn connected_graph_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        let c = exhaustive(6).unwrap();
        let triangles = c
            .iter()
            .filter(|e| e.graph.n() == 3 && e.graph.is_complete())
            .count();
        assert_eq!(triangles, 1);
        let planar6 = c.iter().filter(|e| e.graph.n() == 6 && e.planar).count();
        assert_eq!(planar6, 99);
        assert!(c
            .iter()
            .filter(|e| e.is_three_connected_planar())
            .all(|e| e.graph.rotation().is_some()));
    }

    #[test]
    fn names_round_trip() {
        for s in Solid::figure1() {
            assert_eq!(s.to_string().parse::<Solid>().unwrap(), s);
        }
        assert_eq!(generate_named("prism(5)").unwrap().n(), 10);
        assert!(matches!(
            generate_named("dodecahedron"),
            Err(Error::UnknownSolid(_))
        ));
    }
}
