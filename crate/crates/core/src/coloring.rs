//! Proper 3-edge-colouring with the nonzero elements of the Klein four-group
//! as colours.
//!
//! Colours are the bit patterns `01`, `10` and `11`; they add by XOR and the
//! three of them sum to zero, so a proper colouring of a cubic vertex is the
//! same thing as a nowhere-zero Kirchhoff-balanced assignment there.

use std::fmt;

use crate::error::{Error, Result};
use crate::flows::{FlowAssignment, Group};
use crate::graph::{CubicGraph, EdgeId, Endpoint, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KleinColor(u8);

impl KleinColor {
    pub const A: KleinColor = KleinColor(0b01);
    pub const B: KleinColor = KleinColor(0b10);
    pub const C: KleinColor = KleinColor(0b11);
    pub const ALL: [KleinColor; 3] = [Self::A, Self::B, Self::C];

    pub fn new(bits: u8) -> Option<Self> {
        (1..=3).contains(&bits).then_some(KleinColor(bits))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    /// Group sum; `None` when the result is the identity.
    pub fn plus(self, other: KleinColor) -> Option<KleinColor> {
        KleinColor::new(self.0 ^ other.0)
    }
}

impl fmt::Display for KleinColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:02b}", self.0)
    }
}

/// A colour for every edge of a loopless graph, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<KleinColor>,
}

impl EdgeColoring {
    pub fn from_colors(colors: Vec<KleinColor>) -> Self {
        EdgeColoring { colors }
    }

    pub fn color(&self, e: EdgeId) -> KleinColor {
        self.colors[e]
    }

    pub fn colors(&self) -> &[KleinColor] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Colours at each vertex pairwise distinct, one colour per edge, no loops.
    pub fn is_proper(&self, g: &CubicGraph) -> bool {
        if self.colors.len() != g.edge_count() {
            return false;
        }
        g.vertices().all(|v| {
            let mut seen = 0u8;
            g.incident(v).iter().all(|&e| {
                let bit = 1 << self.colors[e].0;
                let fresh = seen & bit == 0;
                seen |= bit;
                fresh
            })
        })
    }

    /// Applies a permutation of the three colours, given as the images of
    /// `A`, `B`, `C`.
    pub fn permuted(&self, images: [KleinColor; 3]) -> EdgeColoring {
        EdgeColoring {
            colors: self
                .colors
                .iter()
                .map(|c| images[(c.0 - 1) as usize])
                .collect(),
        }
    }
}

fn check_degrees(g: &CubicGraph) -> Result<()> {
    match g.vertices().find(|&v| g.degree(v) > 3) {
        Some(v) => Err(Error::DegreeTooHigh {
            vertex: v,
            degree: g.degree(v),
        }),
        None => Ok(()),
    }
}

/// Finds a proper 3-edge-colouring, or `None` if there is none.
///
/// Dangling edges are coloured and constrained only at their attached
/// vertex. Any loop makes the graph uncolourable.
pub fn three_edge_colorable(g: &CubicGraph) -> Result<Option<EdgeColoring>> {
    check_degrees(g)?;
    if g.loop_count() > 0 {
        return Ok(None);
    }
    let mut solver = Solver::new(g);
    for comp in g.components() {
        let order = solver.edge_order(&comp);
        if !solver.solve(&order, 0, 0) {
            return Ok(None);
        }
    }
    // free edges touch no vertex
    for (id, e) in g.edges().iter().enumerate() {
        if e.is_free() {
            solver.color[id] = KleinColor::A.0;
        }
    }
    let colors = solver.color.iter().map(|&c| KleinColor(c)).collect();
    Ok(Some(EdgeColoring { colors }))
}

/// True when no proper 3-edge-colouring exists.
pub fn chromatic_index_is_4(g: &CubicGraph) -> Result<bool> {
    Ok(three_edge_colorable(g)?.is_none())
}

/// Reads a proper colouring as a Z2×Z2 flow. Every element is its own
/// inverse, so the orientation is arbitrary; all edges are taken forward.
pub fn coloring_as_flow(c: &EdgeColoring) -> FlowAssignment {
    FlowAssignment::new(
        Group::Klein,
        c.colors.iter().map(|k| k.0).collect(),
        vec![true; c.colors.len()],
    )
}

struct Solver<'g> {
    g: &'g CubicGraph,
    // colour bits per edge, 0 while uncoloured
    color: Vec<u8>,
    // used colours per vertex, bit (1 << colour)
    mask: Vec<u8>,
}

impl<'g> Solver<'g> {
    fn new(g: &'g CubicGraph) -> Self {
        Solver {
            g,
            color: vec![0; g.edge_count()],
            mask: vec![0; g.vertex_count()],
        }
    }

    /// Edges of one component in DFS discovery order, starting from a
    /// vertex of maximum degree.
    fn edge_order(&self, comp: &[VertexId]) -> Vec<EdgeId> {
        let g = self.g;
        let start = *comp.iter().max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
        let mut seen_v = vec![false; g.vertex_count()];
        let mut seen_e = vec![false; g.edge_count()];
        let mut order = Vec::new();
        let mut stack = vec![start];
        seen_v[start] = true;
        while let Some(x) = stack.pop() {
            for &e in g.incident(x) {
                if seen_e[e] {
                    continue;
                }
                seen_e[e] = true;
                order.push(e);
                if let Endpoint::Vertex(y) = g.edges()[e].opposite(x) {
                    if !seen_v[y] {
                        seen_v[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        order
    }

    fn ends(&self, e: EdgeId) -> (Option<VertexId>, Option<VertexId>) {
        let edge = &self.g.edges()[e];
        (edge.a.vertex(), edge.b.vertex())
    }

    fn used(&self, v: Option<VertexId>) -> u8 {
        v.map_or(0, |v| self.mask[v])
    }

    /// Every uncoloured edge at `v` still has some colour available.
    fn viable(&self, v: VertexId) -> bool {
        self.g.incident(v).iter().all(|&f| {
            if self.color[f] != 0 {
                return true;
            }
            let (a, b) = self.ends(f);
            (self.used(a) | self.used(b)) & 0b1110 != 0b1110
        })
    }

    /// Colours `order[i..]`. `distinct` is how many colours have appeared so
    /// far; a fresh colour is always the next unused one, which fixes the
    /// colour permutation.
    fn solve(&mut self, order: &[EdgeId], i: usize, distinct: u8) -> bool {
        let Some(&e) = order.get(i) else {
            return true;
        };
        let (a, b) = self.ends(e);
        let blocked = self.used(a) | self.used(b);
        for c in 1..=(distinct + 1).min(3) {
            let bit = 1 << c;
            if blocked & bit != 0 {
                continue;
            }
            self.color[e] = c;
            for v in [a, b].into_iter().flatten() {
                self.mask[v] |= bit;
            }
            let ok = [a, b].into_iter().flatten().all(|v| self.viable(v))
                && self.solve(order, i + 1, distinct.max(c));
            if ok {
                return true;
            }
            for v in [a, b].into_iter().flatten() {
                self.mask[v] &= !bit;
            }
            self.color[e] = 0;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flows::verify_kirchhoff;
    use crate::graph::VertexPair;
    use crate::io::named::{make_named, Named};

    fn named(n: Named) -> CubicGraph {
        make_named(&n).unwrap()
    }

    #[test]
    fn klein_colors_sum_to_zero() {
        assert_eq!(KleinColor::A.plus(KleinColor::B), Some(KleinColor::C));
        assert_eq!(KleinColor::C.plus(KleinColor::C), None);
        assert_eq!(KleinColor::A.0 ^ KleinColor::B.0 ^ KleinColor::C.0, 0);
        assert_eq!(KleinColor::new(0), None);
        assert_eq!(KleinColor::new(4), None);
    }

    #[test]
    fn petersen_has_no_coloring() {
        assert_eq!(three_edge_colorable(&named(Named::Petersen)).unwrap(), None);
        assert!(chromatic_index_is_4(&named(Named::Petersen)).unwrap());
    }

    #[test]
    fn k4_and_theta_are_colorable() {
        for g in [named(Named::K4), named(Named::Theta)] {
            let c = three_edge_colorable(&g).unwrap().unwrap();
            assert!(c.is_proper(&g));
            assert!(!chromatic_index_is_4(&g).unwrap());
        }
    }

    #[test]
    fn flower_five_has_no_coloring() {
        assert!(chromatic_index_is_4(&named(Named::Flower(5))).unwrap());
    }

    #[test]
    fn petersen_minus_adjacent_pair_is_colorable() {
        let g = named(Named::Petersen);
        for p in VertexPair::adjacent(&g) {
            let h = g.remove_vertex_pair(p).unwrap();
            let c = three_edge_colorable(&h).unwrap().unwrap();
            assert!(c.is_proper(&h));
        }
    }

    #[test]
    fn loops_are_uncolorable() {
        assert_eq!(three_edge_colorable(&named(Named::Dumbbell)).unwrap(), None);
        let lonely = CubicGraph::from_pairs(1, &[(0, 0)]).unwrap();
        assert_eq!(three_edge_colorable(&lonely).unwrap(), None);
    }

    #[test]
    fn rejects_degree_four() {
        let g = named(Named::Petersen)
            .identify_vertices(VertexPair::new(0, 5).unwrap())
            .unwrap();
        assert!(matches!(
            three_edge_colorable(&g),
            Err(Error::DegreeTooHigh { degree: 6, .. })
        ));
    }

    #[test]
    fn empty_and_free_edges() {
        let empty = CubicGraph::empty();
        assert_eq!(three_edge_colorable(&empty).unwrap().unwrap().len(), 0);
        let free = CubicGraph::new(0, vec![crate::graph::Edge::new(Endpoint::Dangling, Endpoint::Dangling)]).unwrap();
        assert!(three_edge_colorable(&free).unwrap().is_some());
    }

    #[test]
    fn dangling_edges_at_one_vertex_must_differ() {
        // a path of two edges hanging off one vertex, plus a third dangling
        let g = CubicGraph::new(
            1,
            vec![
                crate::graph::Edge::new(0, Endpoint::Dangling),
                crate::graph::Edge::new(0, Endpoint::Dangling),
                crate::graph::Edge::new(0, Endpoint::Dangling),
            ],
        )
        .unwrap();
        let c = three_edge_colorable(&g).unwrap().unwrap();
        let mut seen: Vec<_> = c.colors().to_vec();
        seen.sort();
        assert_eq!(seen, KleinColor::ALL.to_vec());
    }

    #[test]
    fn permutations_keep_properness() {
        let g = named(Named::K4).expand_triangle(1).unwrap();
        let c = three_edge_colorable(&g).unwrap().unwrap();
        let perms = [
            [KleinColor::A, KleinColor::B, KleinColor::C],
            [KleinColor::A, KleinColor::C, KleinColor::B],
            [KleinColor::B, KleinColor::A, KleinColor::C],
            [KleinColor::B, KleinColor::C, KleinColor::A],
            [KleinColor::C, KleinColor::A, KleinColor::B],
            [KleinColor::C, KleinColor::B, KleinColor::A],
        ];
        for p in perms {
            assert!(c.permuted(p).is_proper(&g));
        }
    }

    #[test]
    fn colorings_are_klein_flows() {
        for g in [named(Named::K4), named(Named::Theta)] {
            let c = three_edge_colorable(&g).unwrap().unwrap();
            let f = coloring_as_flow(&c);
            assert!(verify_kirchhoff(&g, &f).unwrap());
            assert!(f.is_nowhere_zero());
        }
        let g = named(Named::Petersen);
        let h = g.remove_vertex_pair(VertexPair::new(0, 1).unwrap()).unwrap();
        let f = coloring_as_flow(&three_edge_colorable(&h).unwrap().unwrap());
        assert!(verify_kirchhoff(&h, &f).unwrap());
        assert_eq!(crate::flows::dangling_sum_outward(&h, &f), 0);
    }
}
