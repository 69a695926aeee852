//! Integer first homology of the surface filled by a ribbon graph.
//!
//! The model works on two cell structures at once. The primal one has the
//! vertices, edges and faces of the graph. The dual one has a node per face,
//! an arc per edge (crossing it in the positive direction) and a 2-cell per
//! vertex. A tree–cotree split picks `2g` leftover edges; their fundamental
//! cycles in the dual graph form the basis `Δ`, and their fundamental cycles
//! in the primal graph form a companion basis `Z` with `Z · Δ = I`.
//!
//! Two coordinate systems on `Z^{2g}` appear throughout the crate:
//!
//! * *homology coordinates* `a`: the class `Σ a_j [δ_j]`;
//! * *evaluation coordinates* `u`: the values `u_j = ⟨ξ, δ_j⟩` of a cocycle
//!   `ξ`, or the intersection numbers `γ · δ_j` of a primal cycle `γ`.
//!
//! Dual-ball vertices and component classes are evaluation vectors; norm
//! arguments are homology coordinates; the pairing between them is the dot
//! product.

use std::collections::VecDeque;

use crate::ribbon::{RibbonGraph, Sign};
use crate::snf::{invariant_factors, IntMatrix};

/// Integer chain on the edges of the graph, indexed by edge id. Depending on
/// context it is a primal 1-chain (edges traversed base → other) or a dual
/// 1-chain (arcs crossed in the positive direction).
pub type Chain = Vec<i64>;

#[derive(Debug, Clone)]
pub struct HomologyModel {
    graph: RibbonGraph,
    genus: usize,
    /// ∂₁ of the primal complex, `V × E`.
    edge_boundary: IntMatrix,
    /// ∂₂ of the primal complex, `E × F`.
    face_boundary: IntMatrix,
    dual_tree: Vec<usize>,
    primal_tree: Vec<usize>,
    leftover: Vec<usize>,
    basis: Vec<Chain>,
    primal_basis: Vec<Chain>,
    relation_factors: Vec<i64>,
    basis_factors: Vec<i64>,
}

/// Builds the model with lexicographic (edge-order BFS) spanning trees.
pub fn build_model(graph: &RibbonGraph) -> HomologyModel {
    let (v_count, e_count, f_count) =
        (graph.vertex_count(), graph.edge_count(), graph.face_count());
    let edges = graph.edges();

    let mut edge_boundary = IntMatrix::zeros(v_count, e_count);
    for (e, &[base, other]) in edges.iter().enumerate() {
        edge_boundary[(graph.vertex_of(base), e)] -= 1;
        edge_boundary[(graph.vertex_of(other), e)] += 1;
    }
    let mut face_boundary = IntMatrix::zeros(e_count, f_count);
    for (f, orbit) in graph.faces().iter().enumerate() {
        for &h in orbit {
            face_boundary[(graph.edge_of(h), f)] += graph.end_sign(h);
        }
    }

    // spanning tree of the dual graph; parent[f] = (edge, sign of crossing f -> parent)
    let dual = graph.dual_graph();
    let mut dual_parent: Vec<Option<(usize, usize, i64)>> = vec![None; f_count];
    let mut in_dual_tree = vec![false; e_count];
    let mut reached = vec![false; f_count];
    reached[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(f) = queue.pop_front() {
        for arc in &dual.arcs {
            let (next, sign) = if arc.tail == f && !reached[arc.head] {
                (arc.head, -1)
            } else if arc.head == f && !reached[arc.tail] {
                (arc.tail, 1)
            } else {
                continue;
            };
            reached[next] = true;
            dual_parent[next] = Some((arc.edge, f, sign));
            in_dual_tree[arc.edge] = true;
            queue.push_back(next);
        }
    }

    // spanning tree of the primal graph avoiding the dual tree
    let mut primal_parent: Vec<Option<(usize, usize, i64)>> = vec![None; v_count];
    let mut in_primal_tree = vec![false; e_count];
    let mut reached = vec![false; v_count];
    reached[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for (e, &[base, other]) in edges.iter().enumerate() {
            if in_dual_tree[e] {
                continue;
            }
            let (a, b) = (graph.vertex_of(base), graph.vertex_of(other));
            let (next, sign) = if a == v && !reached[b] {
                (b, -1)
            } else if b == v && !reached[a] {
                (a, 1)
            } else {
                continue;
            };
            reached[next] = true;
            primal_parent[next] = Some((e, v, sign));
            in_primal_tree[e] = true;
            queue.push_back(next);
        }
    }
    assert!(
        reached.iter().all(|&r| r),
        "complement of a dual spanning tree is connected"
    );

    let path_to_root = |parent: &[Option<(usize, usize, i64)>], mut x: usize| {
        let mut chain = vec![0i64; e_count];
        while let Some((e, p, sign)) = parent[x] {
            chain[e] += sign;
            x = p;
        }
        chain
    };

    let leftover: Vec<usize> = (0..e_count)
        .filter(|&e| !in_dual_tree[e] && !in_primal_tree[e])
        .collect();
    let mut basis = Vec::with_capacity(leftover.len());
    let mut primal_basis = Vec::with_capacity(leftover.len());
    for &l in &leftover {
        let [base, other] = edges[l];

        // cross l positively, then return through the dual tree
        let (tail, head) = (graph.face_of(base), graph.face_of(other));
        let up = path_to_root(&dual_parent, head);
        let down = path_to_root(&dual_parent, tail);
        let mut delta: Chain = up.iter().zip(&down).map(|(u, d)| u - d).collect();
        delta[l] += 1;
        basis.push(delta);

        let (from, to) = (graph.vertex_of(base), graph.vertex_of(other));
        let up = path_to_root(&primal_parent, to);
        let down = path_to_root(&primal_parent, from);
        let mut z: Chain = up.iter().zip(&down).map(|(u, d)| u - d).collect();
        z[l] += 1;
        primal_basis.push(z);
    }

    let relations: Vec<Chain> = (0..v_count).map(|v| dual_face_boundary(graph, v)).collect();
    let relation_factors = invariant_factors(&IntMatrix::from_columns(e_count, &relations));
    let mut spanning = relations;
    spanning.extend(basis.iter().cloned());
    let basis_factors = invariant_factors(&IntMatrix::from_columns(e_count, &spanning));

    HomologyModel {
        graph: graph.clone(),
        genus: graph.genus(),
        edge_boundary,
        face_boundary,
        dual_tree: (0..e_count).filter(|&e| in_dual_tree[e]).collect(),
        primal_tree: (0..e_count).filter(|&e| in_primal_tree[e]).collect(),
        leftover,
        basis,
        primal_basis,
        relation_factors,
        basis_factors,
    }
}

/// Boundary of the dual 2-cell around vertex `v`, traversed counterclockwise:
/// crossing half-edge `h` ccw goes from the face of `h` to the face of `α(h)`.
pub fn dual_face_boundary(graph: &RibbonGraph, v: usize) -> Chain {
    let mut chain = vec![0; graph.edge_count()];
    for h in graph.rotation(v) {
        chain[graph.edge_of(h)] += graph.end_sign(h);
    }
    chain
}

/// Algebraic intersection of a primal 1-chain with a dual 1-chain.
pub fn intersection(primal: &[i64], dual: &[i64]) -> i64 {
    primal.iter().zip(dual).map(|(a, b)| a * b).sum()
}

impl HomologyModel {
    pub fn graph(&self) -> &RibbonGraph {
        &self.graph
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Rank of `H_1`, i.e. `2g`.
    pub fn rank(&self) -> usize {
        2 * self.genus
    }

    pub fn edge_boundary(&self) -> &IntMatrix {
        &self.edge_boundary
    }

    pub fn face_boundary(&self) -> &IntMatrix {
        &self.face_boundary
    }

    pub fn dual_tree(&self) -> &[usize] {
        &self.dual_tree
    }

    pub fn primal_tree(&self) -> &[usize] {
        &self.primal_tree
    }

    /// Edges outside both trees; `δ_j` is the fundamental dual cycle of `leftover()[j]`.
    pub fn leftover(&self) -> &[usize] {
        &self.leftover
    }

    /// Dual cycles `δ_1..δ_2g`.
    pub fn basis(&self) -> &[Chain] {
        &self.basis
    }

    /// Primal cycles `z_1..z_2g` with `z_i · δ_j = [i = j]`.
    pub fn primal_basis(&self) -> &[Chain] {
        &self.primal_basis
    }

    /// Crossing table `t(e, j)`: signed crossings of `δ_j` over edge `e`.
    pub fn crossing(&self, edge: usize, j: usize) -> i64 {
        self.basis[j][edge]
    }

    /// Invariant factors of the dual 2-cell relations (torsion of `H_1` if any exceeds 1).
    pub fn relation_factors(&self) -> &[i64] {
        &self.relation_factors
    }

    pub fn is_torsion_free(&self) -> bool {
        self.relation_factors.iter().all(|&d| d == 1)
            && self.relation_factors.len() + 1 == self.graph.vertex_count()
    }

    /// Whether the dual 2-cell boundaries together with `Δ` span every dual
    /// cycle over `Z`, which makes `Δ` a free basis of `H_1`.
    pub fn basis_is_certified(&self) -> bool {
        let g = &self.graph;
        let cycle_rank = g.edge_count() + 1 - g.face_count();
        let closed = self
            .basis
            .iter()
            .all(|d| self.dual_boundary_of(d).iter().all(|&x| x == 0));
        closed
            && self.basis_factors.len() == cycle_rank
            && self.basis_factors.iter().all(|&d| d == 1)
            && self.basis.len() == self.rank()
    }

    /// Pairing matrix `Z · Δ`; the identity for a tree–cotree basis.
    pub fn pairing_matrix(&self) -> Vec<Vec<i64>> {
        self.primal_basis
            .iter()
            .map(|z| self.basis.iter().map(|d| intersection(z, d)).collect())
            .collect()
    }

    /// Node boundary of a dual chain (head minus tail per arc), indexed by face.
    pub fn dual_boundary_of(&self, chain: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.graph.face_count()];
        for (e, &[base, other]) in self.graph.edges().iter().enumerate() {
            out[self.graph.face_of(other)] += chain[e];
            out[self.graph.face_of(base)] -= chain[e];
        }
        out
    }

    /// Vertex boundary of a primal chain.
    pub fn primal_boundary_of(&self, chain: &[i64]) -> Vec<i64> {
        let m = &self.edge_boundary;
        (0..m.rows())
            .map(|v| (0..m.cols()).map(|e| m[(v, e)] * chain[e]).sum())
            .collect()
    }

    /// Dual chain `Σ a_j δ_j` representing homology coordinates `a`.
    pub fn representative(&self, a: &[i64]) -> Chain {
        let mut chain = vec![0; self.graph.edge_count()];
        for (coef, delta) in a.iter().zip(&self.basis) {
            for (c, d) in chain.iter_mut().zip(delta) {
                *c += coef * d;
            }
        }
        chain
    }

    /// Homology coordinates of a dual cycle.
    pub fn coordinates(&self, dual_cycle: &[i64]) -> Vec<i64> {
        self.primal_basis
            .iter()
            .map(|z| intersection(z, dual_cycle))
            .collect()
    }

    /// Evaluation vector `(⟨ξ, δ_j⟩)_j` of an edge cochain.
    pub fn evaluate(&self, cochain: &[i64]) -> Vec<i64> {
        self.basis
            .iter()
            .map(|d| intersection(cochain, d))
            .collect()
    }

    /// Primal 1-chain of component `index` walked with orientation `sign`.
    pub fn component_chain(&self, index: usize, sign: Sign) -> Chain {
        let g = &self.graph;
        let mut chain = vec![0; g.edge_count()];
        for d in g.components()[index].departures(g, sign) {
            chain[g.edge_of(d)] += g.end_sign(d);
        }
        chain
    }

    /// Dual cycle obtained by pushing an oriented component off to its right.
    ///
    /// At each passage through a vertex the copy crosses the half-edge
    /// counterclockwise after the arrival slot; between vertices it runs
    /// inside a face. It is homologous to the component.
    pub fn component_push_off(&self, index: usize, sign: Sign) -> Chain {
        let g = &self.graph;
        let mut chain = vec![0; g.edge_count()];
        for d in g.components()[index].departures(g, sign) {
            let right = g.rotate(g.pair(d));
            chain[g.edge_of(right)] += g.end_sign(right);
        }
        chain
    }

    /// Intersection vector `(γ · δ_j)_j` of an oriented component.
    pub fn component_class(&self, index: usize, sign: Sign) -> Vec<i64> {
        self.evaluate(&self.component_chain(index, sign))
    }

    /// Intersection vector of the whole collection oriented by `orientation`.
    pub fn collection_class(&self, orientation: &[Sign]) -> Vec<i64> {
        let mut total = vec![0; self.rank()];
        for (i, &s) in orientation.iter().enumerate() {
            for (t, x) in total.iter_mut().zip(self.component_class(i, s)) {
                *t += x;
            }
        }
        total
    }
}

/// An orientation of the components with nonzero total class, if one exists.
///
/// Such an orientation exists iff some component class is nonzero: if every
/// signed sum vanished, two assignments differing in one sign would give
/// `2·[γ_i] = 0`, hence `[γ_i] = 0` since `H_1` is torsion-free.
pub fn nontriviality_certificate(model: &HomologyModel) -> Option<Vec<Sign>> {
    let k = model.graph().components().len();
    let mut orientation = vec![Sign::Plus; k];
    if model.collection_class(&orientation).iter().any(|&x| x != 0) {
        return Some(orientation);
    }
    let first = (0..k).find(|&i| model.component_class(i, Sign::Plus).iter().any(|&x| x != 0))?;
    orientation[first] = Sign::Minus;
    Some(orientation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ribbon::parse_collection;

    const T1: &str = "vertices 1\nvertex 0: 0 1 2 3\nedges\n0 2\n1 3\nend\n";
    const T0: &str = "vertices 1\nvertex 0: 0 1 2 3\nedges\n0 1\n2 3\nend\n";

    #[test]
    fn torus_basis() {
        let g = parse_collection(T1).unwrap();
        let m = build_model(&g);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.basis(), &[vec![1, 0], vec![0, 1]]);
        assert_eq!(m.pairing_matrix(), vec![vec![1, 0], vec![0, 1]]);
        assert!(m.basis_is_certified());
        assert!(m.is_torsion_free());
        assert!(m.edge_boundary().mul(m.face_boundary()).is_zero());
        // each component crosses exactly one basis cycle once
        assert_eq!(m.component_class(0, Sign::Plus), vec![1, 0]);
        assert_eq!(m.component_class(1, Sign::Plus), vec![0, 1]);
        assert_eq!(m.component_class(1, Sign::Minus), vec![0, -1]);
    }

    #[test]
    fn sphere_has_empty_basis() {
        let g = parse_collection(T0).unwrap();
        let m = build_model(&g);
        assert!(m.basis().is_empty());
        assert!(m.basis_is_certified());
        assert_eq!(nontriviality_certificate(&m), None);
    }

    #[test]
    fn torus_certificate() {
        let m = build_model(&parse_collection(T1).unwrap());
        let cert = nontriviality_certificate(&m).unwrap();
        assert_eq!(cert, vec![Sign::Plus, Sign::Plus]);
        assert_eq!(m.collection_class(&cert), vec![1, 1]);
    }

    #[test]
    fn push_off_is_a_homologous_cycle() {
        let m = build_model(&parse_collection(T1).unwrap());
        for i in 0..2 {
            let p = m.component_push_off(i, Sign::Plus);
            assert!(m.dual_boundary_of(&p).iter().all(|&x| x == 0));
            // self-intersection through a parallel copy vanishes
            assert_eq!(intersection(&m.component_chain(i, Sign::Plus), &p), 0);
        }
        let (a, b) = (
            m.component_chain(0, Sign::Plus),
            m.component_chain(1, Sign::Plus),
        );
        let (pa, pb) = (
            m.component_push_off(0, Sign::Plus),
            m.component_push_off(1, Sign::Plus),
        );
        assert_eq!(intersection(&a, &pb), -intersection(&b, &pa));
        assert_eq!(intersection(&a, &pb).abs(), 1);
    }
}
