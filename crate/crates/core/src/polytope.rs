//! Lattice polytopes given by their vertices, with exact predicates only.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lp::in_convex_hull;

/// Polytope in `Z^d` stored as its extreme points, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<Vec<i64>>,
}

/// Segment generator `[-m·w, m·w]` of a planar zonotope, `w` primitive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZonotopeGenerator {
    pub direction: [i64; 2],
    pub multiplicity: u64,
}

fn check_dims(dim: usize, points: &[Vec<i64>]) -> Result<()> {
    match points.iter().find(|p| p.len() != dim) {
        Some(p) => Err(Error::DimensionMismatch {
            expected: dim,
            got: p.len(),
        }),
        None => Ok(()),
    }
}

/// Convex hull of integer points, keeping extreme points only.
///
/// Planar inputs use a monotone chain with exact cross products; higher
/// dimensions go through [`convex_hull_lp`].
pub fn convex_hull(dim: usize, points: &[Vec<i64>]) -> Result<LatticePolytope> {
    check_dims(dim, points)?;
    if points.is_empty() {
        return Err(Error::Degenerate("empty point set".into()));
    }
    if dim == 2 {
        let vertices = planar_hull(points)
            .into_iter()
            .map(|[x, y]| vec![x, y])
            .collect();
        return Ok(LatticePolytope::from_sorted(dim, vertices));
    }
    convex_hull_lp(dim, points)
}

/// Dimension-agnostic hull: a point is kept iff it is not a convex
/// combination of the others, decided by exact linear feasibility.
pub fn convex_hull_lp(dim: usize, points: &[Vec<i64>]) -> Result<LatticePolytope> {
    check_dims(dim, points)?;
    if points.is_empty() {
        return Err(Error::Degenerate("empty point set".into()));
    }
    let distinct: BTreeSet<&Vec<i64>> = points.iter().collect();
    let mut order: Vec<&Vec<i64>> = distinct.into_iter().collect();
    // far points first, so interior points are usually rejected against a small set
    order.sort_by_key(|p| std::cmp::Reverse(p.iter().map(|x| x * x).sum::<i64>()));

    let mut hull: Vec<&Vec<i64>> = Vec::new();
    for p in order {
        let refs: Vec<&[i64]> = hull.iter().map(|v| v.as_slice()).collect();
        if in_convex_hull(p, &refs) {
            continue;
        }
        hull.push(p);
        let snapshot = hull.clone();
        hull = snapshot
            .iter()
            .enumerate()
            .filter(|&(i, w)| {
                if *w == p {
                    return true;
                }
                let others: Vec<&[i64]> = snapshot
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, v)| v.as_slice())
                    .collect();
                !in_convex_hull(w, &others)
            })
            .map(|(_, w)| *w)
            .collect();
    }
    Ok(LatticePolytope::from_sorted(
        dim,
        hull.into_iter().cloned().collect(),
    ))
}

fn cross(o: [i64; 2], a: [i64; 2], b: [i64; 2]) -> i128 {
    (a[0] - o[0]) as i128 * (b[1] - o[1]) as i128 - (a[1] - o[1]) as i128 * (b[0] - o[0]) as i128
}

/// Strictly convex hull in counterclockwise order starting from the
/// lexicographically smallest point.
fn planar_hull(points: &[Vec<i64>]) -> Vec<[i64; 2]> {
    let pts: Vec<[i64; 2]> = points
        .iter()
        .map(|p| [p[0], p[1]])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<[i64; 2]> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<[i64; 2]> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

impl LatticePolytope {
    fn from_sorted(dim: usize, mut vertices: Vec<Vec<i64>>) -> Self {
        vertices.sort();
        vertices.dedup();
        LatticePolytope { dim, vertices }
    }

    /// The polytope `{0}` in `Z^d`.
    pub fn origin(dim: usize) -> Self {
        LatticePolytope {
            dim,
            vertices: vec![vec![0; dim]],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    /// `max ⟨v, a⟩` over the vertices.
    pub fn support(&self, a: &[i64]) -> Result<i64> {
        if a.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: a.len(),
            });
        }
        Ok(self
            .vertices
            .iter()
            .map(|v| v.iter().zip(a).map(|(x, y)| x * y).sum::<i64>())
            .max()
            .unwrap_or(0))
    }

    pub fn negated(&self) -> LatticePolytope {
        LatticePolytope::from_sorted(
            self.dim,
            self.vertices
                .iter()
                .map(|v| v.iter().map(|x| -x).collect())
                .collect(),
        )
    }

    pub fn is_symmetric(&self) -> bool {
        self.negated() == *self
    }

    /// All vertices pairwise congruent mod 2.
    pub fn parity_property(&self) -> bool {
        let Some(first) = self.vertices.first() else {
            return true;
        };
        self.vertices
            .iter()
            .all(|v| v.iter().zip(first).all(|(a, b)| (a - b).rem_euclid(2) == 0))
    }

    pub fn all_even(&self) -> bool {
        self.vertices.iter().flatten().all(|x| x % 2 == 0)
    }

    pub fn contains(&self, point: &[i64]) -> Result<bool> {
        if point.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: point.len(),
            });
        }
        let refs: Vec<&[i64]> = self.vertices.iter().map(|v| v.as_slice()).collect();
        Ok(in_convex_hull(point, &refs))
    }

    /// `dim <d>` followed by one `v <c1> ... <cd>` line per vertex.
    pub fn to_text(&self) -> String {
        let mut out = format!("dim {}\n", self.dim);
        for v in &self.vertices {
            out.push('v');
            for x in v {
                let _ = write!(out, " {x}");
            }
            out.push('\n');
        }
        out
    }

    /// Parses the output of [`LatticePolytope::to_text`], re-hulling the points.
    pub fn parse(text: &str) -> Result<LatticePolytope> {
        let mut dim = None;
        let mut points = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut toks = line.split_whitespace();
            match toks.next() {
                Some("dim") if dim.is_none() => {
                    let d = toks
                        .next()
                        .and_then(|t| t.parse::<usize>().ok())
                        .ok_or_else(|| Error::parse(i + 1, "expected `dim <d>`"))?;
                    dim = Some(d);
                }
                Some("v") => points.push(parse_ints(i + 1, toks)?),
                _ => return Err(Error::parse(i + 1, format!("unexpected line `{line}`"))),
            }
        }
        let dim = dim.ok_or_else(|| Error::parse(0, "missing `dim` line"))?;
        convex_hull(dim, &points)
    }

    /// Centrally symmetric planar polygon as a sum of segments.
    ///
    /// The ccw edge vectors of a symmetric parity polygon come in antipodal
    /// pairs and are all even; each representative edge `2·m·w` (with `w`
    /// primitive) contributes the segment `[-m·w, m·w]`. Generators are
    /// normalized so the first nonzero coordinate is positive and ordered by
    /// angle. The Minkowski sum is re-hulled and compared with the input.
    pub fn zonotope_decompose_2d(&self) -> Result<Vec<ZonotopeGenerator>> {
        if self.dim != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: self.dim,
            });
        }
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if !self.parity_property() {
            return Err(Error::ParityFailure);
        }
        if self.vertices.len() < 3 {
            return Err(Error::Degenerate("polygon is a point or a segment".into()));
        }
        let ring = planar_hull(&self.vertices);
        let half = ring.len() / 2;
        let mut gens: Vec<ZonotopeGenerator> = Vec::with_capacity(half);
        for i in 0..half {
            let (a, b) = (ring[i], ring[i + 1]);
            let edge = [b[0] - a[0], b[1] - a[1]];
            debug_assert!(edge[0] % 2 == 0 && edge[1] % 2 == 0);
            let halfedge = [edge[0] / 2, edge[1] / 2];
            let m = gcd(halfedge[0], halfedge[1]);
            let mut w = [halfedge[0] / m, halfedge[1] / m];
            if w[0] < 0 || (w[0] == 0 && w[1] < 0) {
                w = [-w[0], -w[1]];
            }
            match gens.iter_mut().find(|g| g.direction == w) {
                Some(g) => g.multiplicity += m as u64,
                None => gens.push(ZonotopeGenerator {
                    direction: w,
                    multiplicity: m as u64,
                }),
            }
        }
        gens.sort_by(|a, b| {
            let c = a.direction[0] as i128 * b.direction[1] as i128
                - a.direction[1] as i128 * b.direction[0] as i128;
            0.cmp(&c)
        });

        let rebuilt = minkowski_sum_of_segments(
            2,
            &gens
                .iter()
                .map(|g| (g.direction.to_vec(), g.multiplicity))
                .collect::<Vec<_>>(),
        )?;
        if rebuilt != *self {
            return Err(Error::Degenerate(
                "edge generators do not recompose the polygon".into(),
            ));
        }
        Ok(gens)
    }
}

fn parse_ints<'a>(line: usize, toks: impl Iterator<Item = &'a str>) -> Result<Vec<i64>> {
    toks.map(|t| {
        t.parse::<i64>()
            .map_err(|_| Error::parse(line, format!("expected an integer, found `{t}`")))
    })
    .collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Hull of `Σ m_i [-w_i, w_i]`.
pub fn minkowski_sum_of_segments(
    dim: usize,
    generators: &[(Vec<i64>, u64)],
) -> Result<LatticePolytope> {
    let mut acc = LatticePolytope::origin(dim);
    for (w, m) in generators {
        if w.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: w.len(),
            });
        }
        let step: Vec<i64> = w.iter().map(|x| x * *m as i64).collect();
        let mut pts = Vec::with_capacity(2 * acc.vertices.len());
        for v in &acc.vertices {
            pts.push(v.iter().zip(&step).map(|(a, b)| a + b).collect());
            pts.push(v.iter().zip(&step).map(|(a, b)| a - b).collect());
        }
        acc = convex_hull(dim, &pts)?;
    }
    Ok(acc)
}

/// Reads a polygon file: one `v <x> <y>` line per point, `#` comments.
pub fn parse_polygon(text: &str) -> Result<LatticePolytope> {
    let mut points = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        if toks.next() != Some("v") {
            return Err(Error::parse(i + 1, "expected `v <x> <y>`"));
        }
        let p = parse_ints(i + 1, toks)?;
        if p.len() != 2 {
            return Err(Error::parse(i + 1, "expected exactly two coordinates"));
        }
        points.push(p);
    }
    if points.is_empty() {
        return Err(Error::parse(0, "polygon has no vertices"));
    }
    convex_hull(2, &points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> LatticePolytope {
        convex_hull(2, &[vec![1, 1], vec![1, -1], vec![-1, 1], vec![-1, -1]]).unwrap()
    }

    #[test]
    fn hull_drops_interior() {
        let p = convex_hull(
            2,
            &[
                vec![1, 1],
                vec![1, -1],
                vec![-1, 1],
                vec![-1, -1],
                vec![0, 0],
            ],
        )
        .unwrap();
        assert_eq!(p, square());
        assert_eq!(p.vertices().len(), 4);
        let single = convex_hull(3, &[vec![2, -1, 0]]).unwrap();
        assert_eq!(single.vertices(), &[vec![2, -1, 0]]);
        assert!(matches!(
            convex_hull(2, &[vec![1, 2, 3]]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn lp_hull_agrees_in_the_plane() {
        let pts = vec![
            vec![1, 1],
            vec![1, -1],
            vec![-1, 1],
            vec![-1, -1],
            vec![0, 0],
            vec![1, 0],
        ];
        assert_eq!(convex_hull_lp(2, &pts).unwrap(), square());
    }

    #[test]
    fn support_and_predicates() {
        let sq = square();
        assert_eq!(sq.support(&[1, 0]).unwrap(), 1);
        assert_eq!(sq.support(&[1, 1]).unwrap(), 2);
        assert_eq!(sq.support(&[0, 0]).unwrap(), 0);
        assert!(sq.is_symmetric() && sq.parity_property());

        let diamond = convex_hull(2, &[vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]]).unwrap();
        assert!(diamond.is_symmetric());
        assert!(!diamond.parity_property());

        let zero = LatticePolytope::origin(2);
        assert!(zero.is_symmetric() && zero.parity_property());
        assert!(matches!(
            sq.support(&[1]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn square_decomposition() {
        let gens = square().zonotope_decompose_2d().unwrap();
        assert_eq!(
            gens,
            vec![
                ZonotopeGenerator {
                    direction: [1, 0],
                    multiplicity: 1
                },
                ZonotopeGenerator {
                    direction: [0, 1],
                    multiplicity: 1
                },
            ]
        );
    }

    #[test]
    fn octagon_decomposition() {
        let oct = convex_hull(
            2,
            &[
                vec![3, 1],
                vec![1, 3],
                vec![-1, 3],
                vec![-3, 1],
                vec![-3, -1],
                vec![-1, -3],
                vec![1, -3],
                vec![3, -1],
            ],
        )
        .unwrap();
        let gens = oct.zonotope_decompose_2d().unwrap();
        let dirs: Vec<[i64; 2]> = gens.iter().map(|g| g.direction).collect();
        assert_eq!(dirs, vec![[1, -1], [1, 0], [1, 1], [0, 1]]);
        assert!(gens.iter().all(|g| g.multiplicity == 1));
    }

    #[test]
    fn decomposition_errors() {
        let seg = convex_hull(2, &[vec![2, 0], vec![-2, 0]]).unwrap();
        assert!(matches!(
            seg.zonotope_decompose_2d(),
            Err(Error::Degenerate(_))
        ));
        let diamond = convex_hull(2, &[vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]]).unwrap();
        assert_eq!(diamond.zonotope_decompose_2d(), Err(Error::ParityFailure));
        let shifted = convex_hull(2, &[vec![3, 1], vec![1, 1], vec![3, 3], vec![1, 3]]).unwrap();
        assert_eq!(shifted.zonotope_decompose_2d(), Err(Error::NotSymmetric));
    }

    #[test]
    fn text_round_trip() {
        let sq = square();
        assert_eq!(sq.to_text(), "dim 2\nv -1 -1\nv -1 1\nv 1 -1\nv 1 1\n");
        assert_eq!(LatticePolytope::parse(&sq.to_text()).unwrap(), sq);
        let poly = parse_polygon("# square\nv 1 1\nv -1 -1\nv 1 -1\nv -1 1\n").unwrap();
        assert_eq!(poly, sq);
        assert!(matches!(
            parse_polygon("v 1.5 2\n"),
            Err(Error::Parse { .. })
        ));
    }
}
