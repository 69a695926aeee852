//! Four-valent ribbon graphs encoding filling curve collections.
//!
//! A collection of closed curves in general position on a closed oriented
//! surface is recorded by its double points (vertices), the arcs between them
//! (edges), and the counterclockwise order in which the four arcs leave each
//! double point. The surface itself is reconstructed from that data by gluing
//! a disk into every orbit of the face permutation, so every graph accepted
//! here fills the surface it determines.
//!
//! Conventions, fixed for the whole crate:
//!
//! * Vertex `i` owns half-edges `4i..4i+3`; its rotation lists them in
//!   counterclockwise order.
//! * The face permutation is `φ = σ∘α`, where `σ` advances a half-edge to its
//!   counterclockwise successor at the same vertex and `α` is the edge pairing.
//!   The face of `h` is the `φ`-orbit containing `h`.
//! * Edge `{h, α(h)}` is stored with base half-edge `h < α(h)` and directed
//!   `h → α(h)`. Its *positive crossing direction* goes from the face of the
//!   base half-edge to the face of the other half-edge. Every signed quantity
//!   in the crate (crossing tables, coorientations, classes) uses this framing.
//! * Strands go straight through a vertex: entering at slot `k` of the
//!   rotation, they leave at slot `k + 2`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Orientation of a strand or component relative to its base orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// One closed curve of the collection, obtained by walking straight ahead.
///
/// `departures` lists, in walking order, the half-edge through which the
/// walk leaves each vertex in the base orientation. The base orientation is
/// the one whose departure set contains the smallest half-edge of the curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    departures: Vec<usize>,
}

impl Component {
    pub fn len(&self) -> usize {
        self.departures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.departures.is_empty()
    }

    /// Departure half-edges of the walk in the requested orientation.
    pub fn departures(&self, graph: &RibbonGraph, sign: Sign) -> Vec<usize> {
        match sign {
            Sign::Plus => self.departures.clone(),
            Sign::Minus => {
                let d = &self.departures;
                let mut out = Vec::with_capacity(d.len());
                out.push(graph.pair(d[0]));
                out.extend(d[1..].iter().rev().map(|&h| graph.pair(h)));
                out
            }
        }
    }
}

/// Arc of the dual graph: crosses `edge` in its positive direction, from the
/// face `tail` to the face `head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualArc {
    pub edge: usize,
    pub tail: usize,
    pub head: usize,
}

/// Faces of the ribbon graph joined by one arc per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    pub nodes: usize,
    pub arcs: Vec<DualArc>,
}

/// A validated 4-valent ribbon graph with its faces and components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonGraph {
    rotation: Vec<usize>,
    slot: Vec<usize>,
    pairing: Vec<usize>,
    face_of: Vec<usize>,
    faces: Vec<Vec<usize>>,
    edges: Vec<[usize; 2]>,
    edge_of: Vec<usize>,
    components: Vec<Component>,
}

impl RibbonGraph {
    /// Builds a graph from per-vertex counterclockwise rotations and the list
    /// of edges as half-edge pairs.
    pub fn new(rotations: &[[usize; 4]], edges: &[(usize, usize)]) -> Result<Self> {
        let n = rotations.len();
        if n == 0 {
            return Err(Error::Validation("graph has no vertices".into()));
        }
        let total = 4 * n;
        let mut rotation = Vec::with_capacity(total);
        let mut slot = vec![usize::MAX; total];
        for (v, rot) in rotations.iter().enumerate() {
            for (k, &h) in rot.iter().enumerate() {
                if h / 4 != v || h >= total {
                    return Err(Error::Validation(format!(
                        "half-edge {h} listed at vertex {v} (expected {}..{})",
                        4 * v,
                        4 * v + 3
                    )));
                }
                if slot[h] != usize::MAX {
                    return Err(Error::Validation(format!(
                        "half-edge {h} repeated at vertex {v}"
                    )));
                }
                slot[h] = k;
                rotation.push(h);
            }
        }

        let mut pairing = vec![usize::MAX; total];
        for &(a, b) in edges {
            if a == b {
                return Err(Error::Validation(format!(
                    "half-edge {a} is paired with itself"
                )));
            }
            for h in [a, b] {
                if h >= total {
                    return Err(Error::Validation(format!("half-edge {h} does not exist")));
                }
                if pairing[h] != usize::MAX {
                    return Err(Error::Validation(format!(
                        "half-edge {h} appears in two edges"
                    )));
                }
            }
            pairing[a] = b;
            pairing[b] = a;
        }
        if let Some(h) = pairing.iter().position(|&p| p == usize::MAX) {
            return Err(Error::Validation(format!("half-edge {h} is not paired")));
        }

        let mut parent: Vec<usize> = (0..n).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for h in 0..total {
            let (a, b) = (root(&mut parent, h / 4), root(&mut parent, pairing[h] / 4));
            parent[a] = b;
        }
        let r0 = root(&mut parent, 0);
        if (0..n).any(|v| root(&mut parent, v) != r0) {
            return Err(Error::Validation("underlying graph is disconnected".into()));
        }

        let mut graph = RibbonGraph {
            rotation,
            slot,
            pairing,
            face_of: Vec::new(),
            faces: Vec::new(),
            edges: Vec::new(),
            edge_of: Vec::new(),
            components: Vec::new(),
        };
        graph.derive();
        Ok(graph)
    }

    fn derive(&mut self) {
        let total = self.pairing.len();

        let mut face_of = vec![usize::MAX; total];
        let mut faces = Vec::new();
        for start in 0..total {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut orbit = Vec::new();
            let mut h = start;
            while face_of[h] == usize::MAX {
                face_of[h] = id;
                orbit.push(h);
                h = self.face_next(h);
            }
            faces.push(orbit);
        }

        let mut edges = Vec::with_capacity(total / 2);
        let mut edge_of = vec![0; total];
        for h in 0..total {
            let o = self.pairing[h];
            if h < o {
                edge_of[h] = edges.len();
                edge_of[o] = edges.len();
                edges.push([h, o]);
            }
        }

        let mut seen = vec![false; total];
        let mut components = Vec::new();
        for start in 0..total {
            if seen[start] {
                continue;
            }
            let mut departures = Vec::new();
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                departures.push(h);
                h = self.opposite(self.pairing[h]);
            }
            for &d in &departures {
                seen[self.pairing[d]] = true;
            }
            components.push(Component { departures });
        }

        self.face_of = face_of;
        self.faces = faces;
        self.edges = edges;
        self.edge_of = edge_of;
        self.components = components;
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len() / 4
    }

    pub fn half_edge_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn genus(&self) -> usize {
        let chi = self.euler_characteristic();
        debug_assert!(chi <= 2 && (2 - chi) % 2 == 0);
        ((2 - chi) / 2) as usize
    }

    /// Genus-0 inputs carry no homology; norm computations on them are trivial.
    pub fn is_planar(&self) -> bool {
        self.genus() == 0
    }

    pub fn vertex_of(&self, h: usize) -> usize {
        h / 4
    }

    /// Counterclockwise rotation at vertex `v`.
    pub fn rotation(&self, v: usize) -> [usize; 4] {
        let r = &self.rotation[4 * v..4 * v + 4];
        [r[0], r[1], r[2], r[3]]
    }

    /// Edge partner `α(h)`.
    pub fn pair(&self, h: usize) -> usize {
        self.pairing[h]
    }

    /// Counterclockwise successor `σ(h)`.
    pub fn rotate(&self, h: usize) -> usize {
        let v = h / 4;
        self.rotation[4 * v + (self.slot[h] + 1) % 4]
    }

    /// Half-edge across the vertex from `h`, where a strand entering at `h` leaves.
    pub fn opposite(&self, h: usize) -> usize {
        let v = h / 4;
        self.rotation[4 * v + (self.slot[h] + 2) % 4]
    }

    /// Face permutation `φ = σ∘α`.
    pub fn face_next(&self, h: usize) -> usize {
        self.rotate(self.pairing[h])
    }

    pub fn face_of(&self, h: usize) -> usize {
        self.face_of[h]
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// Edges as `[base, other]` with `base < other`, sorted by base.
    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn edge_of(&self, h: usize) -> usize {
        self.edge_of[h]
    }

    /// `+1` when `h` is the base half-edge of its edge, `-1` otherwise.
    pub fn end_sign(&self, h: usize) -> i64 {
        if self.edges[self.edge_of[h]][0] == h {
            1
        } else {
            -1
        }
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Index of the component running through half-edge `h`.
    pub fn component_of(&self, h: usize) -> usize {
        self.components
            .iter()
            .position(|c| c.departures.iter().any(|&d| d == h || self.pairing[d] == h))
            .expect("every half-edge lies on a component")
    }

    pub fn dual_graph(&self) -> DualGraph {
        DualGraph {
            nodes: self.faces.len(),
            arcs: self
                .edges
                .iter()
                .enumerate()
                .map(|(edge, &[base, other])| DualArc {
                    edge,
                    tail: self.face_of[base],
                    head: self.face_of[other],
                })
                .collect(),
        }
    }

    /// Serializes to the line-oriented ribbon-graph format accepted by [`parse_collection`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "vertices {}", self.vertex_count());
        for v in 0..self.vertex_count() {
            let r = self.rotation(v);
            let _ = writeln!(out, "vertex {v}: {} {} {} {}", r[0], r[1], r[2], r[3]);
        }
        out.push_str("edges\n");
        for [a, b] in &self.edges {
            let _ = writeln!(out, "{a} {b}");
        }
        out.push_str("end\n");
        out
    }

    /// Same collection with vertex `v` renamed to `perm[v]` and each rotation
    /// cyclically shifted by `shifts[v]`. Half-edges follow their slot.
    pub fn relabeled(&self, perm: &[usize], shifts: &[usize]) -> Result<Self> {
        let n = self.vertex_count();
        if perm.len() != n || shifts.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: perm.len().min(shifts.len()),
            });
        }
        let rename = |h: usize| {
            let v = h / 4;
            4 * perm[v] + (self.slot[h] + 4 - shifts[v] % 4) % 4
        };
        let mut rotations = vec![[0; 4]; n];
        for v in 0..n {
            for k in 0..4 {
                let h = self.rotation[4 * v + (k + shifts[v]) % 4];
                rotations[perm[v]][k] = rename(h);
            }
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&[a, b]| (rename(a), rename(b)))
            .collect();
        RibbonGraph::new(&rotations, &edges)
    }
}

/// Result of smoothing a double point, with the map carrying old edges to new ones.
#[derive(Debug, Clone)]
pub struct Attachment {
    pub graph: RibbonGraph,
    /// For every old edge: the new edge containing it and `±1` according to
    /// whether the two base directions agree.
    pub edge_map: Vec<(usize, i64)>,
}

impl Attachment {
    /// Pushes an integer chain on old edges (e.g. a dual cycle) to the new graph.
    pub fn transport(&self, chain: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.graph.edge_count()];
        for (e, &(target, sign)) in self.edge_map.iter().enumerate() {
            out[target] += sign * chain[e];
        }
        out
    }
}

/// Orientation-respecting smoothing of the crossing at `vertex`.
///
/// `orientations[i]` orients component `i`. The incoming end of each strand
/// is joined to the outgoing end of the other strand.
pub fn attach(graph: &RibbonGraph, orientations: &[Sign], vertex: usize) -> Result<RibbonGraph> {
    attach_with_map(graph, orientations, vertex).map(|a| a.graph)
}

pub fn attach_with_map(
    graph: &RibbonGraph,
    orientations: &[Sign],
    vertex: usize,
) -> Result<Attachment> {
    let n = graph.vertex_count();
    if vertex >= n {
        return Err(Error::Validation(format!("vertex {vertex} does not exist")));
    }
    if orientations.len() != graph.components().len() {
        return Err(Error::DimensionMismatch {
            expected: graph.components().len(),
            got: orientations.len(),
        });
    }

    let mut departing = vec![false; graph.half_edge_count()];
    for (c, &s) in graph.components().iter().zip(orientations) {
        for h in c.departures(graph, s) {
            departing[h] = true;
        }
    }

    // smooth[y] = where a strand end at the vertex continues after smoothing
    let rot = graph.rotation(vertex);
    let mut smooth = [usize::MAX; 4];
    let mut ins = Vec::new();
    let mut outs = Vec::new();
    for k in 0..2 {
        let (a, b) = (rot[k], rot[k + 2]);
        if departing[a] {
            ins.push(b);
            outs.push(a);
        } else {
            ins.push(a);
            outs.push(b);
        }
    }
    let local = |h: usize| rot.iter().position(|&x| x == h);
    smooth[local(ins[0]).unwrap()] = outs[1];
    smooth[local(outs[1]).unwrap()] = ins[0];
    smooth[local(ins[1]).unwrap()] = outs[0];
    smooth[local(outs[0]).unwrap()] = ins[1];

    let at_vertex = |h: usize| h / 4 == vertex;
    let renumber = |h: usize| if h / 4 > vertex { h - 4 } else { h };

    // Follow x across the smoothed vertex; returns the far end and the old
    // half-edges traversed as (departure) steps.
    let follow = |x: usize| -> Option<(usize, Vec<usize>)> {
        let mut steps = vec![x];
        let mut y = graph.pair(x);
        let mut guard = 0;
        while at_vertex(y) {
            let z = smooth[local(y).unwrap()];
            steps.push(z);
            y = graph.pair(z);
            guard += 1;
            if guard > 4 {
                return None;
            }
        }
        Some((y, steps))
    };

    // any cycle of edges and smoothing links that never leaves the vertex is a free loop
    for &h in &rot {
        let mut y = h;
        let mut closed = false;
        for _ in 0..4 {
            y = graph.pair(smooth[local(y).unwrap()]);
            if !at_vertex(y) {
                break;
            }
            if y == h {
                closed = true;
                break;
            }
        }
        if closed {
            return Err(Error::DegenerateSmoothing { vertex });
        }
    }
    if n == 1 {
        return Err(Error::DegenerateSmoothing { vertex });
    }

    let mut new_pairs = Vec::new();
    let mut chains: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for x in 0..graph.half_edge_count() {
        if at_vertex(x) {
            continue;
        }
        let (y, steps) = follow(x).ok_or(Error::DegenerateSmoothing { vertex })?;
        if x < y {
            new_pairs.push((renumber(x), renumber(y)));
            chains.push((renumber(x), renumber(y), steps));
        }
    }

    let rotations: Vec<[usize; 4]> = (0..n)
        .filter(|&v| v != vertex)
        .map(|v| graph.rotation(v).map(renumber))
        .collect();
    let smoothed = RibbonGraph::new(&rotations, &new_pairs)?;
    if smoothed.genus() != graph.genus() {
        return Err(Error::Validation(format!(
            "smoothing at vertex {vertex} joins two corners of the same face; the result no longer fills the surface"
        )));
    }

    let mut edge_map = vec![(usize::MAX, 0); graph.edge_count()];
    for (x, y, steps) in chains {
        let target = smoothed.edge_of(x);
        let new_forward = smoothed.edges()[target][0] == x;
        debug_assert_eq!(smoothed.pair(x), y);
        for d in steps {
            let e = graph.edge_of(d);
            let old_forward = graph.edges()[e][0] == d;
            edge_map[e] = (target, if old_forward == new_forward { 1 } else { -1 });
        }
    }
    debug_assert!(edge_map.iter().all(|&(t, _)| t != usize::MAX));

    Ok(Attachment {
        graph: smoothed,
        edge_map,
    })
}

/// Joins the two strands at `vertex` as [`attach`] does, but the rejoined
/// arcs cross each other twice instead of separating.
///
/// The crossing at `vertex` becomes two crossings `P` (reusing the index)
/// and `Q` (index `V`) bounding a new bigon. Every region around the old
/// crossing survives with the same crossing cost to its neighbours, so the
/// intersection norm is unchanged; plain smoothing merges two opposite
/// regions and can lower it. Old edges keep their identity, so
/// [`Attachment::transport`] is a relabeling.
pub fn attach_crossed(
    graph: &RibbonGraph,
    orientations: &[Sign],
    vertex: usize,
) -> Result<Attachment> {
    let n = graph.vertex_count();
    if vertex >= n {
        return Err(Error::Validation(format!("vertex {vertex} does not exist")));
    }
    if orientations.len() != graph.components().len() {
        return Err(Error::DimensionMismatch {
            expected: graph.components().len(),
            got: orientations.len(),
        });
    }
    let mut departing = vec![false; graph.half_edge_count()];
    for (c, &s) in graph.components().iter().zip(orientations) {
        for h in c.departures(graph, s) {
            departing[h] = true;
        }
    }

    // a, c: incoming and outgoing ends of one strand; b, d: outgoing and
    // incoming ends of the other. arc1 runs a -> P -> Q -> b, arc2 d -> P -> Q -> c.
    let rot = graph.rotation(vertex);
    let k = if departing[rot[0]] { 2 } else { 0 };
    let (a, c) = (rot[k], rot[(k + 2) % 4]);
    let (next, prev) = (rot[(k + 1) % 4], rot[(k + 3) % 4]);
    let ccw = departing[next];
    let (b, d) = if ccw { (next, prev) } else { (prev, next) };

    let p = 4 * vertex;
    let q = 4 * n;
    let mut rename: Vec<usize> = (0..graph.half_edge_count()).collect();
    // ccw: P = [a, arc2 out, arc1 out, d], Q = [b, c, arc1 in, arc2 in]; otherwise mirrored
    let internal = if ccw {
        rename[a] = p;
        rename[d] = p + 3;
        rename[b] = q;
        rename[c] = q + 1;
        [(p + 2, q + 2), (p + 1, q + 3)]
    } else {
        rename[a] = p;
        rename[d] = p + 1;
        rename[b] = q;
        rename[c] = q + 3;
        [(p + 2, q + 2), (p + 3, q + 1)]
    };

    let mut pairs: Vec<(usize, usize)> = graph
        .edges()
        .iter()
        .map(|&[x, y]| (rename[x], rename[y]))
        .collect();
    pairs.extend(internal);
    let rotations: Vec<[usize; 4]> = (0..=n)
        .map(|v| [4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3])
        .collect();
    let result = RibbonGraph::new(&rotations, &pairs)?;
    debug_assert_eq!(result.genus(), graph.genus());

    let edge_map = graph
        .edges()
        .iter()
        .map(|&[x, _]| {
            let target = result.edge_of(rename[x]);
            (
                target,
                if result.edges()[target][0] == rename[x] {
                    1
                } else {
                    -1
                },
            )
        })
        .collect();
    Ok(Attachment {
        graph: result,
        edge_map,
    })
}

/// Parses the ribbon-graph file format.
///
/// ```text
/// vertices <n>
/// vertex <i>: <h0> <h1> <h2> <h3>
/// edges
/// <ha> <hb>
/// end
/// ```
///
/// `#` starts a comment. Syntax problems and repeated half-edges are parse
/// errors; structural problems (self-paired half-edges, wrong slots,
/// disconnection) are validation errors.
pub fn parse_collection(text: &str) -> Result<RibbonGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let int = |line: usize, tok: &str| -> Result<usize> {
        tok.parse::<usize>().map_err(|_| {
            Error::parse(
                line,
                format!("expected a nonnegative integer, found `{tok}`"),
            )
        })
    };

    let (line, header) = lines.next().ok_or_else(|| Error::parse(0, "empty input"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["vertices", count] => int(line, count)?,
        _ => return Err(Error::parse(line, "expected `vertices <n>`")),
    };

    let mut rotations = vec![None; n];
    for _ in 0..n {
        let (line, text) = lines
            .next()
            .ok_or_else(|| Error::parse(0, "unexpected end of input in vertex list"))?;
        let (head, rest) = text
            .split_once(':')
            .ok_or_else(|| Error::parse(line, "expected `vertex <i>: <h0> <h1> <h2> <h3>`"))?;
        let v = match head.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["vertex", i] => int(line, i)?,
            _ => return Err(Error::parse(line, "expected `vertex <i>:`")),
        };
        if v >= n {
            return Err(Error::parse(line, format!("vertex index {v} out of range")));
        }
        if rotations[v].is_some() {
            return Err(Error::parse(line, format!("vertex {v} listed twice")));
        }
        let hs = rest
            .split_whitespace()
            .map(|t| int(line, t))
            .collect::<Result<Vec<_>>>()?;
        let distinct: BTreeSet<_> = hs.iter().collect();
        if distinct.len() != hs.len() {
            return Err(Error::parse(line, "duplicate half-edge in vertex rotation"));
        }
        if hs.len() != 4 {
            return Err(Error::Validation(format!(
                "vertex {v} has degree {} (expected 4)",
                hs.len()
            )));
        }
        rotations[v] = Some([hs[0], hs[1], hs[2], hs[3]]);
    }
    let rotations: Vec<[usize; 4]> = rotations.into_iter().map(|r| r.unwrap()).collect();

    match lines.next() {
        Some((_, "edges")) => {}
        Some((line, _)) => return Err(Error::parse(line, "expected `edges`")),
        None => return Err(Error::parse(0, "missing `edges` section")),
    }

    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    loop {
        let (line, text) = lines
            .next()
            .ok_or_else(|| Error::parse(0, "missing `end`"))?;
        if text == "end" {
            break;
        }
        let (a, b) = match text.split_whitespace().collect::<Vec<_>>().as_slice() {
            [a, b] => (int(line, a)?, int(line, b)?),
            _ => return Err(Error::parse(line, "expected `<ha> <hb>`")),
        };
        if a == b {
            return Err(Error::Validation(format!(
                "half-edge {a} is paired with itself"
            )));
        }
        for h in [a, b] {
            if !seen.insert(h) {
                return Err(Error::parse(line, format!("half-edge {h} appears twice")));
            }
        }
        edges.push((a, b));
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::parse(line, "unexpected content after `end`"));
    }
    RibbonGraph::new(&rotations, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const T1: &str = "vertices 1\nvertex 0: 0 1 2 3\nedges\n0 2\n1 3\nend\n";
    pub(crate) const T0: &str = "vertices 1\nvertex 0: 0 1 2 3\nedges\n0 1\n2 3\nend\n";

    #[test]
    fn torus_one_vertex() {
        let g = parse_collection(T1).unwrap();
        assert_eq!(
            (g.vertex_count(), g.edge_count(), g.face_count(), g.genus()),
            (1, 2, 1, 1)
        );
        assert_eq!(g.components().len(), 2);
        // φ: 0 -> σ(2)=3 -> σ(1)=2 -> σ(0)=1 -> σ(3)=0
        assert_eq!(g.faces(), &[vec![0, 3, 2, 1]]);
    }

    #[test]
    fn sphere_figure_eight() {
        let g = parse_collection(T0).unwrap();
        assert_eq!(
            (g.vertex_count(), g.edge_count(), g.face_count(), g.genus()),
            (1, 2, 3, 0)
        );
        assert_eq!(g.components().len(), 1);
        assert!(g.is_planar());
        assert_eq!(g.faces(), &[vec![0, 2], vec![1], vec![3]]);
    }

    #[test]
    fn dual_graph_shapes() {
        let d = parse_collection(T1).unwrap().dual_graph();
        assert_eq!(d.nodes, 1);
        assert!(d.arcs.iter().all(|a| a.tail == 0 && a.head == 0));
        assert_eq!(d.arcs.len(), 2);

        let g = parse_collection(T0).unwrap();
        let d = g.dual_graph();
        assert_eq!(d.nodes, 3);
        assert_eq!(d.arcs.len(), 2);
        // edge 0-1: base 0 in face 0, other 1 in face 1
        assert_eq!(
            d.arcs[0],
            DualArc {
                edge: 0,
                tail: 0,
                head: 1
            }
        );
        assert_eq!(
            d.arcs[1],
            DualArc {
                edge: 1,
                tail: 0,
                head: 2
            }
        );
    }

    #[test]
    fn parse_errors() {
        let self_paired = "vertices 1\nvertex 0: 0 1 2 3\nedges\n0 0\n1 3\nend\n";
        assert!(matches!(
            parse_collection(self_paired),
            Err(Error::Validation(_))
        ));

        let dup = "vertices 1\nvertex 0: 0 1 2 3\nedges\n0 2\n2 3\nend\n";
        assert!(matches!(
            parse_collection(dup),
            Err(Error::Parse { line: 5, .. })
        ));

        let degree = "vertices 1\nvertex 0: 0 1 2\nedges\n0 2\n1 3\nend\n";
        assert!(matches!(
            parse_collection(degree),
            Err(Error::Validation(_))
        ));

        let junk = "vertices one\n";
        assert!(matches!(
            parse_collection(junk),
            Err(Error::Parse { line: 1, .. })
        ));

        let missing = "vertices 1\nvertex 0: 0 1 2 3\nedges\n0 2\nend\n";
        assert!(matches!(
            parse_collection(missing),
            Err(Error::Validation(_))
        ));

        let wrong_slot = "vertices 1\nvertex 0: 0 1 2 5\nedges\n0 2\n1 5\nend\n";
        assert!(matches!(
            parse_collection(wrong_slot),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn disconnected_rejected() {
        let two =
            "vertices 2\nvertex 0: 0 1 2 3\nvertex 1: 4 5 6 7\nedges\n0 2\n1 3\n4 6\n5 7\nend\n";
        assert!(matches!(parse_collection(two), Err(Error::Validation(_))));
    }

    #[test]
    fn comments_and_text_round_trip() {
        let text =
            "# torus\nvertices 1 # one double point\n\nvertex 0: 0 1 2 3\nedges\n0 2\n1 3\nend\n";
        let g = parse_collection(text).unwrap();
        assert_eq!(parse_collection(&g.to_text()).unwrap(), g);
        assert_eq!(g.to_text(), T1);
    }

    #[test]
    fn reversed_component_walk() {
        let g = parse_collection(T0).unwrap();
        let c = &g.components()[0];
        assert_eq!(c.departures(&g, Sign::Plus), vec![0, 3]);
        assert_eq!(c.departures(&g, Sign::Minus), vec![1, 2]);
    }

    #[test]
    fn attach_both_loops_is_degenerate() {
        let g = parse_collection(T1).unwrap();
        assert_eq!(
            attach(&g, &[Sign::Plus, Sign::Plus], 0),
            Err(Error::DegenerateSmoothing { vertex: 0 })
        );
    }

    fn norms_after(g: &RibbonGraph, at: &Attachment, classes: &[[i64; 2]]) -> Vec<(u64, u64)> {
        use crate::homology::build_model;
        use crate::norm::IntersectionNorm;
        let m = build_model(g);
        let before = IntersectionNorm::compute(&m, 24).unwrap();
        let after = IntersectionNorm::compute(&build_model(&at.graph), 24).unwrap();
        classes
            .iter()
            .map(|a| {
                (
                    before.norm(a).unwrap(),
                    after.norm_of_cycle(&at.transport(&m.representative(a))),
                )
            })
            .collect()
    }

    #[test]
    fn crossed_attach_on_torus() {
        let g = parse_collection(T1).unwrap();
        let at = attach_crossed(&g, &[Sign::Plus, Sign::Plus], 0).unwrap();
        let h = &at.graph;
        assert_eq!(
            (
                h.vertex_count(),
                h.face_count(),
                h.genus(),
                h.components().len()
            ),
            (2, 2, 1, 1)
        );
        for (before, after) in norms_after(&g, &at, &[[1, 0], [0, 1], [1, 1], [2, -1]]) {
            assert_eq!(before, after);
        }
    }

    #[test]
    fn smoothing_can_lower_the_norm() {
        // two parallel (1,0) geodesics and one (0,1) geodesic on the torus
        let text =
            "vertices 2\nvertex 0: 0 1 2 3\nvertex 1: 4 5 6 7\nedges\n0 6\n1 3\n2 4\n5 7\nend\n";
        let g = parse_collection(text).unwrap();
        let signs = [Sign::Plus; 3];
        let smoothed = attach_with_map(&g, &signs, 0).unwrap();
        let crossed = attach_crossed(&g, &signs, 0).unwrap();
        let classes = [[1, 1], [1, -1], [1, 0], [0, 1]];
        let lowered = norms_after(&g, &smoothed, &classes);
        assert!(lowered.iter().any(|(b, a)| a < b), "{lowered:?}");
        assert!(lowered.iter().all(|(b, a)| a <= b));
        assert!(norms_after(&g, &crossed, &classes)
            .iter()
            .all(|(b, a)| a == b));
    }
}
