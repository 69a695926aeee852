//! Realizability of intersection-norm balls as Thurston-norm balls.
//!
//! For an oriented filling curve with nonzero homology class, lifting it to a
//! knot `K` in the circle bundle `π: M → Σ_g` of Euler number 1 (suitably
//! braided along the fibers over double points) produces a knot exterior
//! `M_K` whose Thurston norm satisfies `x(a) = N(π_*(a))`; vertical tori
//! `π^{-1}(α) ∩ M_K` over minimal transverse curves realize it. Smoothing
//! double points turns any homologically nontrivial collection into such a
//! curve without changing the norm, so its dual ball is also a Thurston-norm
//! dual ball. None of the 3-manifold data is modeled; reports state the
//! identification as text.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::homology::{build_model, nontriviality_certificate, HomologyModel};
use crate::norm::{IntersectionNorm, DEFAULT_MAX_EDGES};
use crate::polytope::{minkowski_sum_of_segments, LatticePolytope};
use crate::ribbon::{RibbonGraph, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Realizable,
    InapplicableEvenNorm,
    TrivialGenusZero,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Realizable => "REALIZABLE",
            Verdict::InapplicableEvenNorm => "INAPPLICABLE_EVEN_NORM",
            Verdict::TrivialGenusZero => "TRIVIAL_GENUS_ZERO",
        })
    }
}

#[derive(Debug, Clone)]
pub struct CertificateReport {
    pub genus: usize,
    pub components: usize,
    /// `None` for genus 0.
    pub ball: Option<LatticePolytope>,
    pub certificate: Option<Vec<Sign>>,
    pub verdict: Verdict,
    /// Dual basis cycles as `(edge, sign)` crossing lists.
    pub basis: Vec<Vec<(usize, i64)>>,
    pub symmetric: bool,
    pub parity: bool,
    /// Whether every ball vertex has even coordinates.
    pub even_vertices: bool,
    pub statement: String,
}

pub fn certify(graph: &RibbonGraph) -> Result<CertificateReport> {
    certify_with(graph, DEFAULT_MAX_EDGES)
}

pub fn certify_with(graph: &RibbonGraph, max_edges: usize) -> Result<CertificateReport> {
    let model = build_model(graph);
    let genus = graph.genus();
    let components = graph.components().len();
    let basis = model
        .basis()
        .iter()
        .map(|d| {
            d.iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(e, &x)| (e, x))
                .collect()
        })
        .collect();

    if genus == 0 {
        return Ok(CertificateReport {
            genus,
            components,
            ball: None,
            certificate: None,
            verdict: Verdict::TrivialGenusZero,
            basis,
            symmetric: true,
            parity: true,
            even_vertices: true,
            statement: "the surface is a sphere; H_1 = 0 and the norm is identically zero".into(),
        });
    }

    let norm = IntersectionNorm::compute(&model, max_edges)?;
    let ball = norm.ball().clone();
    let certificate = nontriviality_certificate(&model);
    let (symmetric, parity, even_vertices) =
        (ball.is_symmetric(), ball.parity_property(), ball.all_even());
    assert!(
        symmetric && parity,
        "dual balls are symmetric with congruent vertices"
    );

    let (verdict, statement) = match &certificate {
        Some(_) => (
            Verdict::Realizable,
            format!(
                "P is the dual unit ball of the Thurston norm x of M_K, where pi: M -> S_{genus} \
                 is the circle bundle of Euler number 1 and K is a fiber-braided lift of the \
                 oriented collection smoothed into one curve; x(a) = N_Gamma(pi_*(a)) on \
                 H_2(M_K, dM_K) = H_1(S_{genus})"
            ),
        ),
        None => (
            Verdict::InapplicableEvenNorm,
            format!(
                "every orientation of the collection is null-homologous, so no knot exterior \
                 of this kind is available; the norm is even (all ball vertices even: {even_vertices})"
            ),
        ),
    };
    debug_assert!(certificate.is_some() || even_vertices);

    Ok(CertificateReport {
        genus,
        components,
        ball: Some(ball),
        certificate,
        verdict,
        basis,
        symmetric,
        parity,
        even_vertices,
        statement,
    })
}

impl CertificateReport {
    /// Stable `key: value` rendering used by the CLI.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "genus: {}", self.genus);
        let _ = writeln!(out, "components: {}", self.components);
        let _ = writeln!(out, "basis: {}", self.basis.len());
        for (j, cycle) in self.basis.iter().enumerate() {
            let _ = write!(out, "delta {j}:");
            for (e, s) in cycle {
                let _ = write!(out, " e{e}:{s:+}");
            }
            out.push('\n');
        }
        match &self.certificate {
            Some(signs) => {
                out.push_str("certificate:");
                for s in signs {
                    let _ = write!(out, " {s}");
                }
                out.push('\n');
            }
            None => out.push_str("certificate: NONE\n"),
        }
        match &self.ball {
            Some(ball) => {
                out.push_str("ball:\n");
                out.push_str(&ball.to_text());
            }
            None => out.push_str("ball: NONE\n"),
        }
        let _ = writeln!(out, "symmetric: {}", self.symmetric);
        let _ = writeln!(out, "parity: {}", self.parity);
        let _ = writeln!(out, "even_vertices: {}", self.even_vertices);
        let _ = writeln!(out, "verdict: {}", self.verdict);
        let _ = writeln!(out, "statement: {}", self.statement);
        out
    }
}

/// Closed geodesic of slope `(p, q)` on the flat torus, taken `multiplicity` times.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Geodesic {
    pub p: i64,
    pub q: i64,
    pub multiplicity: u64,
}

/// Filling collection of geodesics on the torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodesicCollection {
    geodesics: Vec<Geodesic>,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `(p, q)` with `q > 0`, or `q = 0` and `p > 0`.
fn normalize_slope(p: i64, q: i64) -> (i64, i64) {
    if q < 0 || (q == 0 && p < 0) {
        (-p, -q)
    } else {
        (p, q)
    }
}

impl GeodesicCollection {
    /// Normalizes slopes, merges repeated slopes, and sorts. Requires
    /// primitive slopes, positive multiplicities and at least two slopes.
    pub fn new(entries: &[(i64, i64, u64)]) -> Result<Self> {
        let mut geodesics: Vec<Geodesic> = Vec::new();
        for &(p, q, m) in entries {
            if gcd(p, q) != 1 {
                return Err(Error::Degenerate(format!(
                    "slope ({p}, {q}) is not primitive"
                )));
            }
            if m == 0 {
                return Err(Error::Degenerate(format!(
                    "slope ({p}, {q}) has multiplicity 0"
                )));
            }
            let (p, q) = normalize_slope(p, q);
            match geodesics.iter_mut().find(|g| (g.p, g.q) == (p, q)) {
                Some(g) => g.multiplicity += m,
                None => geodesics.push(Geodesic {
                    p,
                    q,
                    multiplicity: m,
                }),
            }
        }
        if geodesics.len() < 2 {
            return Err(Error::SingleSlope);
        }
        geodesics.sort();
        Ok(GeodesicCollection { geodesics })
    }

    pub fn geodesics(&self) -> &[Geodesic] {
        &self.geodesics
    }

    /// `Σ m_i |a q_i − b p_i|`, the crossing count of a curve of class `(a, b)`.
    pub fn norm(&self, a: i64, b: i64) -> u64 {
        self.geodesics
            .iter()
            .map(|g| g.multiplicity * (a * g.q - b * g.p).unsigned_abs())
            .sum()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("slopes: {}\n", self.geodesics.len());
        for g in &self.geodesics {
            let _ = writeln!(out, "geodesic {} {} {}", g.p, g.q, g.multiplicity);
        }
        out
    }
}

/// Geodesic line on the torus `R²/(N·Z²)`: `(x, y) + τ·(p, q)`, `τ ∈ [0, N)`.
#[derive(Debug, Clone, Copy)]
struct Line {
    x: i64,
    y: i64,
    p: i64,
    q: i64,
}

/// Intersection parameter along a line, as the exact fraction `num / den`.
#[derive(Debug, Clone, Copy)]
struct Param {
    num: i128,
    den: i128,
}

impl Param {
    fn cmp(&self, other: &Param) -> std::cmp::Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

const TORUS_SCALE: i64 = 1009;

impl GeodesicCollection {
    /// Ribbon graph of the collection drawn with straight lines on the flat
    /// torus, each slope repeated `multiplicity` times as parallel copies.
    ///
    /// Lines get deterministic offsets on a fine grid; offsets producing a
    /// triple point are skipped. Component `k` of the result need not be
    /// line `k`; [`TorusDrawing::line_chains`] gives each line's edge chain.
    pub fn to_ribbon_graph(&self) -> Result<TorusDrawing> {
        let slopes: Vec<(i64, i64)> = self
            .geodesics
            .iter()
            .flat_map(|g| std::iter::repeat_n((g.p, g.q), g.multiplicity as usize))
            .collect();
        for attempt in 0..64i64 {
            let lines: Vec<Line> = slopes
                .iter()
                .enumerate()
                .map(|(k, &(p, q))| {
                    let k = k as i64 + 1;
                    Line {
                        x: (k * 389 + attempt * 97 + 13) % TORUS_SCALE,
                        y: (k * k * 211 + attempt * 151 + 7) % TORUS_SCALE,
                        p,
                        q,
                    }
                })
                .collect();
            if let Some(drawing) = draw_lines(&lines) {
                return Ok(drawing);
            }
        }
        Err(Error::Degenerate(
            "could not place the geodesics in general position".into(),
        ))
    }
}

/// A geodesic collection realized as a ribbon graph.
#[derive(Debug, Clone)]
pub struct TorusDrawing {
    pub graph: RibbonGraph,
    /// Slope `(p, q)` of each drawn line.
    pub slopes: Vec<(i64, i64)>,
    /// For each line, its primal 1-chain walked in the `(p, q)` direction.
    pub line_chains: Vec<Vec<i64>>,
}

fn draw_lines(lines: &[Line]) -> Option<TorusDrawing> {
    let n = TORUS_SCALE as i128;
    // crossings[i] = (parameter along i, vertex id)
    let mut crossings: Vec<Vec<(Param, usize)>> = vec![Vec::new(); lines.len()];
    let mut vertex_lines: Vec<(usize, usize)> = Vec::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let (a, b) = (lines[i], lines[j]);
            let det = (b.p * a.q - a.p * b.q) as i128;
            if det == 0 {
                continue;
            }
            let span = (a.p.abs() + a.q.abs() + b.p.abs() + b.q.abs() + 2) as i128;
            let mut found = 0;
            for k in -span..=span {
                for l in -span..=span {
                    let b1 = (b.x - a.x) as i128 + n * k;
                    let b2 = (b.y - a.y) as i128 + n * l;
                    // a.p τ − b.p σ = b1, a.q τ − b.q σ = b2
                    let tau = Param {
                        num: b.p as i128 * b2 - b.q as i128 * b1,
                        den: det,
                    };
                    let sigma = Param {
                        num: a.p as i128 * b2 - a.q as i128 * b1,
                        den: det,
                    };
                    let tau = normalize_param(tau);
                    let sigma = normalize_param(sigma);
                    let inside = |t: &Param| t.num >= 0 && t.num < n * t.den;
                    if inside(&tau) && inside(&sigma) {
                        let v = vertex_lines.len();
                        vertex_lines.push((i, j));
                        crossings[i].push((tau, v));
                        crossings[j].push((sigma, v));
                        found += 1;
                    }
                }
            }
            debug_assert_eq!(found, det.abs());
        }
    }
    for list in crossings.iter_mut() {
        list.sort_by(|x, y| x.0.cmp(&y.0));
        if list.windows(2).any(|w| w[0].0.cmp(&w[1].0).is_eq()) {
            return None;
        }
        if list.is_empty() {
            return None;
        }
    }

    // slots at each vertex: the forward/backward directions of both lines in ccw order
    let slot_of = |v: usize, line: usize, forward: bool| -> usize {
        let (i, j) = vertex_lines[v];
        let (a, b) = (lines[i], lines[j]);
        let positive = a.p * b.q - a.q * b.p > 0;
        // ccw order: +a, +b, -a, -b when cross(a, b) > 0, else +a, -b, -a, +b
        let order = if positive {
            [(i, true), (j, true), (i, false), (j, false)]
        } else {
            [(i, true), (j, false), (i, false), (j, true)]
        };
        4 * v + order.iter().position(|&o| o == (line, forward)).unwrap()
    };

    let rotations: Vec<[usize; 4]> = (0..vertex_lines.len())
        .map(|v| [4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3])
        .collect();
    let mut pairs = Vec::new();
    let mut steps: Vec<Vec<usize>> = Vec::new();
    for (line, list) in crossings.iter().enumerate() {
        let mut departures = Vec::new();
        for idx in 0..list.len() {
            let from = list[idx].1;
            let to = list[(idx + 1) % list.len()].1;
            let h = slot_of(from, line, true);
            pairs.push((h, slot_of(to, line, false)));
            departures.push(h);
        }
        steps.push(departures);
    }
    let graph = RibbonGraph::new(&rotations, &pairs).ok()?;
    let line_chains = steps
        .iter()
        .map(|deps| {
            let mut chain = vec![0; graph.edge_count()];
            for &h in deps {
                chain[graph.edge_of(h)] += graph.end_sign(h);
            }
            chain
        })
        .collect();
    Some(TorusDrawing {
        graph,
        slopes: lines.iter().map(|l| (l.p, l.q)).collect(),
        line_chains,
    })
}

fn normalize_param(t: Param) -> Param {
    if t.den < 0 {
        Param {
            num: -t.num,
            den: -t.den,
        }
    } else {
        t
    }
}

/// Dual ball of the intersection norm of a geodesic collection: the zonotope
/// `Σ m_i [−(q_i, −p_i), (q_i, −p_i)]`.
pub fn torus_ball(collection: &GeodesicCollection) -> Result<LatticePolytope> {
    if collection.geodesics.len() < 2 {
        return Err(Error::SingleSlope);
    }
    let gens: Vec<(Vec<i64>, u64)> = collection
        .geodesics
        .iter()
        .map(|g| (vec![g.q, -g.p], g.multiplicity))
        .collect();
    minkowski_sum_of_segments(2, &gens)
}

/// Geodesic collection on the torus whose dual ball is the given symmetric
/// parity polygon.
pub fn realize_torus_polygon(polygon: &LatticePolytope) -> Result<GeodesicCollection> {
    if polygon.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: polygon.dim(),
        });
    }
    let gens = polygon.zonotope_decompose_2d()?;
    let entries: Vec<(i64, i64, u64)> = gens
        .iter()
        .map(|g| (-g.direction[1], g.direction[0], g.multiplicity))
        .collect();
    let collection = GeodesicCollection::new(&entries).map_err(|e| match e {
        Error::SingleSlope => Error::Degenerate("polygon has a single edge direction".into()),
        other => other,
    })?;
    debug_assert_eq!(torus_ball(&collection).as_ref(), Ok(polygon));
    Ok(collection)
}

/// Complexity of the vertical surface over a minimal transverse representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerticalSurfaceReport {
    /// `−χ` of the vertical surface, equal to `N(a)`.
    pub neg_euler: u64,
    pub statement: String,
}

pub fn vertical_surface_report(
    model: &HomologyModel,
    norm: &IntersectionNorm,
    a: &[i64],
) -> Result<VerticalSurfaceReport> {
    if model.genus() == 0 {
        return Err(Error::TrivialNorm);
    }
    let n = norm.norm(a)?;
    let statement = if n == 0 {
        "a = 0: the empty surface represents the class; x(a) = 0".to_string()
    } else {
        format!(
            "pi^-1(alpha) over a transverse multicurve alpha meeting Gamma {n} times is a union of \
             tori; its trace on M_K has {n} boundary circles, so -chi = {n} and x(a) = N_Gamma(pi_*(a)) = {n}"
        )
    };
    Ok(VerticalSurfaceReport {
        neg_euler: n,
        statement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::convex_hull;
    use crate::ribbon::parse_collection;

    const T1: &str = "vertices 1\nvertex 0: 0 1 2 3\nedges\n0 2\n1 3\nend\n";
    const T0: &str = "vertices 1\nvertex 0: 0 1 2 3\nedges\n0 1\n2 3\nend\n";

    fn square() -> LatticePolytope {
        convex_hull(2, &[vec![1, 1], vec![1, -1], vec![-1, 1], vec![-1, -1]]).unwrap()
    }

    #[test]
    fn torus_certificate() {
        let r = certify(&parse_collection(T1).unwrap()).unwrap();
        assert_eq!(r.verdict, Verdict::Realizable);
        assert_eq!(r.certificate, Some(vec![Sign::Plus, Sign::Plus]));
        assert_eq!(r.ball, Some(square()));
        assert!(r.to_text().contains("verdict: REALIZABLE\n"));
    }

    #[test]
    fn sphere_certificate() {
        let r = certify(&parse_collection(T0).unwrap()).unwrap();
        assert_eq!(r.verdict, Verdict::TrivialGenusZero);
        assert!(r.ball.is_none());
        assert!(r.to_text().contains("certificate: NONE\n"));
    }

    #[test]
    fn square_realization() {
        let gc = realize_torus_polygon(&square()).unwrap();
        assert_eq!(
            gc.geodesics(),
            &[
                Geodesic {
                    p: 0,
                    q: 1,
                    multiplicity: 1
                },
                Geodesic {
                    p: 1,
                    q: 0,
                    multiplicity: 1
                },
            ]
        );
        assert_eq!(torus_ball(&gc).unwrap(), square());
        let seg = convex_hull(2, &[vec![2, 0], vec![-2, 0]]).unwrap();
        assert!(matches!(
            realize_torus_polygon(&seg),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn torus_balls() {
        let gc = GeodesicCollection::new(&[(1, 0, 1), (0, 1, 1)]).unwrap();
        assert_eq!(torus_ball(&gc).unwrap(), square());
        let gc = GeodesicCollection::new(&[(1, 0, 2), (0, 1, 2)]).unwrap();
        let big = convex_hull(2, &[vec![2, 2], vec![2, -2], vec![-2, 2], vec![-2, -2]]).unwrap();
        assert_eq!(torus_ball(&gc).unwrap(), big);
        assert_eq!(
            GeodesicCollection::new(&[(1, 0, 1), (-1, 0, 2)]),
            Err(Error::SingleSlope)
        );
        assert!(matches!(
            GeodesicCollection::new(&[(2, 0, 1), (0, 1, 1)]),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn vertical_report_on_torus() {
        let g = parse_collection(T1).unwrap();
        let m = build_model(&g);
        let n = IntersectionNorm::compute(&m, DEFAULT_MAX_EDGES).unwrap();
        assert_eq!(
            vertical_surface_report(&m, &n, &[1, 1]).unwrap().neg_euler,
            2
        );
        let zero = vertical_surface_report(&m, &n, &[0, 0]).unwrap();
        assert_eq!(zero.neg_euler, 0);
        assert!(zero.statement.contains("empty surface"));
    }

    #[test]
    fn drawn_collection_matches_torus_formula() {
        use crate::homology::intersection;
        let gc = GeodesicCollection::new(&[(1, 0, 1), (0, 1, 1), (1, 1, 1)]).unwrap();
        let d = gc.to_ribbon_graph().unwrap();
        let g = &d.graph;
        assert_eq!(
            (g.vertex_count(), g.genus(), g.components().len()),
            (3, 1, 3)
        );
        let m = build_model(g);
        let n = IntersectionNorm::compute(&m, DEFAULT_MAX_EDGES).unwrap();
        // a line of slope (p, q) meets a cycle of class (x, y) algebraically x q - y p times
        let std: Vec<(i64, i64)> = m
            .basis()
            .iter()
            .map(|delta| {
                let u: Vec<i64> = d
                    .line_chains
                    .iter()
                    .map(|c| intersection(c, delta))
                    .collect();
                let k0 = d.slopes.iter().position(|&s| s == (1, 0)).unwrap();
                let k1 = d.slopes.iter().position(|&s| s == (0, 1)).unwrap();
                let (x, y) = (u[k1], -u[k0]);
                for (k, &(p, q)) in d.slopes.iter().enumerate() {
                    assert_eq!(u[k], x * q - y * p);
                }
                (x, y)
            })
            .collect();
        for a in [[1, 0], [0, 1], [1, 1], [2, -1], [-3, 2]] {
            let (x, y) = (
                a[0] * std[0].0 + a[1] * std[1].0,
                a[0] * std[0].1 + a[1] * std[1].1,
            );
            assert_eq!(n.norm(&a).unwrap(), gc.norm(x, y));
        }
    }
}
