//! The intersection norm of a filling collection.
//!
//! A coorientation picks a transverse direction on every edge (`+1` is the
//! framing-positive direction). It is *closed* when it evaluates to zero on
//! the dual 2-cell around every vertex, i.e. exactly two of the four signed
//! incident terms are positive. Closed coorientations are cocycles, so they
//! have well-defined evaluation vectors; their convex hull is the dual unit
//! ball, and the norm is its support function.
//!
//! [`norm_oracle`] computes the same norm from the definition instead: the
//! least number of crossings with the collection over dual 1-cycles in a
//! given homology class.

use crate::error::{Error, Result};
use crate::homology::{Chain, HomologyModel};
use crate::polytope::{convex_hull, LatticePolytope};
use crate::ribbon::RibbonGraph;

pub const DEFAULT_MAX_EDGES: usize = 24;
pub const DEFAULT_ORACLE_BOUND: u32 = 6;

/// Transverse direction `±1` per edge.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coorientation {
    signs: Vec<i8>,
}

impl Coorientation {
    pub fn new(signs: Vec<i8>) -> Self {
        assert!(signs.iter().all(|&s| s == 1 || s == -1));
        Coorientation { signs }
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn as_cochain(&self) -> Vec<i64> {
        self.signs.iter().map(|&s| s as i64).collect()
    }

    pub fn negated(&self) -> Coorientation {
        Coorientation {
            signs: self.signs.iter().map(|s| -s).collect(),
        }
    }

    /// First vertex where the cocycle condition fails, if any.
    pub fn first_open_vertex(&self, graph: &RibbonGraph) -> Option<usize> {
        (0..graph.vertex_count()).find(|&v| {
            let s: i64 = graph
                .rotation(v)
                .iter()
                .map(|&h| graph.end_sign(h) * self.signs[graph.edge_of(h)] as i64)
                .sum();
            s != 0
        })
    }

    pub fn is_closed(&self, graph: &RibbonGraph) -> bool {
        self.first_open_vertex(graph).is_none()
    }
}

/// All closed coorientations, in lexicographic order of their sign vectors
/// (`-1` before `+1`).
///
/// Backtracks over edges in id order, tracking the partial signed sum at
/// every vertex and pruning as soon as the remaining incident edges cannot
/// bring it back to zero. Loop edges never constrain their vertex.
pub fn eulerian_coorientations(
    graph: &RibbonGraph,
    max_edges: usize,
) -> Result<Vec<Coorientation>> {
    let e_count = graph.edge_count();
    if e_count > max_edges {
        return Err(Error::ResourceLimit {
            edges: e_count,
            cap: max_edges,
        });
    }
    let n = graph.vertex_count();
    // (vertex, coefficient) pairs per edge, loops dropped
    let incidence: Vec<Vec<(usize, i64)>> = graph
        .edges()
        .iter()
        .map(|&[base, other]| {
            let (a, b) = (graph.vertex_of(base), graph.vertex_of(other));
            if a == b {
                Vec::new()
            } else {
                vec![(a, 1), (b, -1)]
            }
        })
        .collect();
    let mut remaining = vec![0i64; n];
    for inc in &incidence {
        for &(v, _) in inc {
            remaining[v] += 1;
        }
    }

    struct Search<'a> {
        incidence: &'a [Vec<(usize, i64)>],
        sums: Vec<i64>,
        remaining: Vec<i64>,
        signs: Vec<i8>,
        out: Vec<Coorientation>,
    }

    impl Search<'_> {
        fn go(&mut self, e: usize) {
            if e == self.incidence.len() {
                debug_assert!(self.sums.iter().all(|&s| s == 0));
                self.out.push(Coorientation {
                    signs: self.signs.clone(),
                });
                return;
            }
            for sign in [-1i8, 1] {
                let mut ok = true;
                for &(v, coef) in &self.incidence[e] {
                    self.sums[v] += coef * sign as i64;
                    self.remaining[v] -= 1;
                }
                for &(v, _) in &self.incidence[e] {
                    if self.sums[v].abs() > self.remaining[v] {
                        ok = false;
                    }
                }
                if ok {
                    self.signs[e] = sign;
                    self.go(e + 1);
                }
                for &(v, coef) in &self.incidence[e] {
                    self.sums[v] -= coef * sign as i64;
                    self.remaining[v] += 1;
                }
            }
        }
    }

    let mut search = Search {
        incidence: &incidence,
        sums: vec![0; n],
        remaining,
        signs: vec![0; e_count],
        out: Vec::new(),
    };
    search.go(0);
    Ok(search.out)
}

/// Evaluation vector `(⟨c, δ_j⟩)_j` of a closed coorientation.
pub fn coorientation_class(model: &HomologyModel, c: &Coorientation) -> Result<Vec<i64>> {
    let graph = model.graph();
    if c.signs.len() != graph.edge_count() {
        return Err(Error::DimensionMismatch {
            expected: graph.edge_count(),
            got: c.signs.len(),
        });
    }
    if let Some(vertex) = c.first_open_vertex(graph) {
        return Err(Error::NotClosed { vertex });
    }
    Ok(model.evaluate(&c.as_cochain()))
}

/// Dual unit ball together with the closed coorientations generating it.
#[derive(Debug, Clone)]
pub struct IntersectionNorm {
    coorientations: Vec<Coorientation>,
    classes: Vec<Vec<i64>>,
    ball: LatticePolytope,
}

impl IntersectionNorm {
    pub fn compute(model: &HomologyModel, max_edges: usize) -> Result<Self> {
        if model.genus() == 0 {
            return Err(Error::TrivialNorm);
        }
        let coorientations = eulerian_coorientations(model.graph(), max_edges)?;
        let classes: Vec<Vec<i64>> = coorientations
            .iter()
            .map(|c| model.evaluate(&c.as_cochain()))
            .collect();
        let ball = convex_hull(model.rank(), &classes)?;
        Ok(IntersectionNorm {
            coorientations,
            classes,
            ball,
        })
    }

    pub fn ball(&self) -> &LatticePolytope {
        &self.ball
    }

    pub fn coorientations(&self) -> &[Coorientation] {
        &self.coorientations
    }

    /// Evaluation vectors of [`IntersectionNorm::coorientations`], in the same order.
    pub fn classes(&self) -> &[Vec<i64>] {
        &self.classes
    }

    /// `N(a)` for homology coordinates `a`.
    pub fn norm(&self, a: &[i64]) -> Result<u64> {
        let value = self.ball.support(a)?;
        debug_assert!(value >= 0);
        Ok(value as u64)
    }

    /// Norm of the class of a dual cycle, evaluated directly on the chain.
    pub fn norm_of_cycle(&self, dual_cycle: &[i64]) -> u64 {
        self.coorientations
            .iter()
            .map(|c| {
                c.signs
                    .iter()
                    .zip(dual_cycle)
                    .map(|(&s, &f)| s as i64 * f)
                    .sum::<i64>()
            })
            .max()
            .unwrap_or(0) as u64
    }
}

pub fn dual_unit_ball(model: &HomologyModel, max_edges: usize) -> Result<LatticePolytope> {
    IntersectionNorm::compute(model, max_edges).map(|n| n.ball)
}

pub fn norm(model: &HomologyModel, a: &[i64], max_edges: usize) -> Result<u64> {
    if a.len() != model.rank() {
        return Err(Error::DimensionMismatch {
            expected: model.rank(),
            got: a.len(),
        });
    }
    IntersectionNorm::compute(model, max_edges)?.norm(a)
}

/// Minimum-weight dual cycle found by [`norm_oracle`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub value: u64,
    pub cycle: Chain,
    /// Potential bound at which two consecutive searches agreed.
    pub bound: u32,
}

/// `min Σ_e |f_e|` over integral dual cycles `f` in the class `a`.
///
/// Every such cycle is `r_a + ∂y` where `r_a = Σ a_j δ_j` and `y` assigns an
/// integer to each dual 2-cell (vertex of the graph); `∂y` adds
/// `y(tail end) − y(head end)` on each edge. The search enumerates `y` in the
/// box `[-b, b]` (the first vertex pinned to 0) for `b = 0, 1, …` and stops
/// once two consecutive boxes give the same minimum. The weight is a sum of
/// convex functions of potential differences, so a box minimizer that the
/// next larger box cannot improve is a global minimizer.
pub fn norm_oracle(model: &HomologyModel, a: &[i64], cap: u32) -> Result<OracleResult> {
    if a.len() != model.rank() {
        return Err(Error::DimensionMismatch {
            expected: model.rank(),
            got: a.len(),
        });
    }
    let graph = model.graph();
    let base = model.representative(a);
    let ends: Vec<(usize, usize)> = graph
        .edges()
        .iter()
        .map(|&[b, o]| (graph.vertex_of(b), graph.vertex_of(o)))
        .collect();
    let free = graph.vertex_count() - 1;

    let weight = |y: &[i64]| -> (u64, Chain) {
        let chain: Chain = base
            .iter()
            .zip(&ends)
            .map(|(r, &(u, w))| r + y[u] - y[w])
            .collect();
        (chain.iter().map(|x| x.unsigned_abs()).sum(), chain)
    };

    let mut previous: Option<(u64, Chain)> = None;
    for b in 0..=cap as i64 {
        let mut y = vec![0i64; free + 1];
        let mut best: Option<(u64, Chain)> = None;
        for slot in y.iter_mut().skip(1) {
            *slot = -b;
        }
        loop {
            let (w, chain) = weight(&y);
            if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                best = Some((w, chain));
            }
            // odometer over y[1..]
            let mut i = 1;
            while i <= free && y[i] == b {
                y[i] = -b;
                i += 1;
            }
            if i > free {
                break;
            }
            y[i] += 1;
        }
        let best = best.expect("box is nonempty");
        if let Some((prev, _)) = &previous {
            if *prev == best.0 {
                return Ok(OracleResult {
                    value: best.0,
                    cycle: best.1,
                    bound: b as u32,
                });
            }
        }
        previous = Some(best);
    }
    Err(Error::Unconverged { cap })
}
