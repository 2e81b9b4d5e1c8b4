//! Nowhere-zero group-valued flows (Z4 or Z2×Z2) on multigraphs with loops,
//! parallel edges and dangling edges.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId, Endpoint, VertexId, VertexPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Group {
    Z4,
    /// Z2 × Z2, elements as 2-bit vectors.
    Klein,
}

const Z4_ADD: [[u8; 4]; 4] = [[0, 1, 2, 3], [1, 2, 3, 0], [2, 3, 0, 1], [3, 0, 1, 2]];
const KLEIN_ADD: [[u8; 4]; 4] = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
const Z4_NEG: [u8; 4] = [0, 3, 2, 1];
const KLEIN_NEG: [u8; 4] = [0, 1, 2, 3];

impl Group {
    /// Nonzero elements; both groups have order four.
    pub const NONZERO: [u8; 3] = [1, 2, 3];

    pub fn add(self, a: u8, b: u8) -> u8 {
        match self {
            Group::Z4 => Z4_ADD[a as usize][b as usize],
            Group::Klein => KLEIN_ADD[a as usize][b as usize],
        }
    }

    pub fn neg(self, a: u8) -> u8 {
        match self {
            Group::Z4 => Z4_NEG[a as usize],
            Group::Klein => KLEIN_NEG[a as usize],
        }
    }

    pub fn sub(self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Z4 => "Z4",
            Group::Klein => "Z2xZ2",
        })
    }
}

/// Edge values plus a reference orientation. `forward[e]` means the edge
/// runs from its `a` end to its `b` end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowAssignment {
    group: Group,
    values: Vec<u8>,
    forward: Vec<bool>,
}

impl FlowAssignment {
    pub fn new(group: Group, values: Vec<u8>, forward: Vec<bool>) -> Self {
        assert_eq!(values.len(), forward.len(), "one orientation per value");
        assert!(values.iter().all(|&x| x < 4), "group elements are 0..4");
        FlowAssignment {
            group,
            values,
            forward,
        }
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn value(&self, e: EdgeId) -> u8 {
        self.values[e]
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn is_forward(&self, e: EdgeId) -> bool {
        self.forward[e]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_nowhere_zero(&self) -> bool {
        self.values.iter().all(|&x| x != 0)
    }

    /// Same flow with edge `e` pointing the other way.
    pub fn reversed(&self, e: EdgeId) -> FlowAssignment {
        let mut out = self.clone();
        out.forward[e] = !out.forward[e];
        out.values[e] = self.group.neg(out.values[e]);
        out
    }

    fn tail_head(&self, g: &CubicGraph, e: EdgeId) -> (Endpoint, Endpoint) {
        let edge = &g.edges()[e];
        if self.forward[e] {
            (edge.a, edge.b)
        } else {
            (edge.b, edge.a)
        }
    }

    /// Outflow minus inflow at every vertex.
    fn net(&self, g: &CubicGraph) -> Vec<u8> {
        let mut net = vec![0u8; g.vertex_count()];
        for e in 0..g.edge_count() {
            let (tail, head) = self.tail_head(g, e);
            let x = self.values[e];
            if let Endpoint::Vertex(t) = tail {
                net[t] = self.group.add(net[t], x);
            }
            if let Endpoint::Vertex(h) = head {
                net[h] = self.group.sub(net[h], x);
            }
        }
        net
    }
}

/// Kirchhoff's law at every vertex. Loops cancel at their vertex and
/// dangling edges count at their attached end only.
pub fn verify_kirchhoff(g: &CubicGraph, f: &FlowAssignment) -> Result<bool> {
    if f.len() != g.edge_count() {
        return Err(Error::FlowShape {
            expected: g.edge_count(),
            got: f.len(),
        });
    }
    Ok(f.net(g).iter().all(|&x| x == 0))
}

/// Sum of dangling-edge values, each read as leaving its attached vertex.
pub fn dangling_sum_outward(g: &CubicGraph, f: &FlowAssignment) -> u8 {
    let group = f.group;
    g.edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.is_dangling())
        .fold(0, |acc, (id, _)| {
            let (tail, _) = f.tail_head(g, id);
            let outward = if tail.is_dangling() {
                group.neg(f.values[id])
            } else {
                f.values[id]
            };
            group.add(acc, outward)
        })
}

/// Finds a nowhere-zero flow with values in `group`, or `None`.
///
/// Values on cotree edges (and dangling edges) are searched; each tree edge
/// is then forced by Kirchhoff's law at its lower end, and the branch dies
/// as soon as a forced value is zero.
pub fn nowhere_zero_flow(g: &CubicGraph, group: Group) -> Option<FlowAssignment> {
    let mut search = FlowSearch::new(g, group);
    for comp in g.components() {
        let plan = search.plan(&comp);
        if !search.run(&plan, 0, 0) {
            return None;
        }
    }
    for (id, e) in g.edges().iter().enumerate() {
        if e.is_loop() || e.is_free() {
            search.values[id] = 1;
        }
    }
    Some(FlowAssignment::new(
        group,
        search.values,
        vec![true; g.edge_count()],
    ))
}

/// Statement "G/{u,v} has a nowhere-zero flow". The witness lives on
/// `g.identify_vertices(p)`.
pub fn flow_on_identification(
    g: &CubicGraph,
    p: VertexPair,
    group: Group,
) -> Result<Option<FlowAssignment>> {
    let h = g.identify_vertices(p)?;
    Ok(nowhere_zero_flow(&h, group))
}

struct Step {
    vertex: VertexId,
    free: Vec<EdgeId>,
    forced: Option<EdgeId>,
}

struct FlowSearch<'g> {
    g: &'g CubicGraph,
    group: Group,
    values: Vec<u8>,
}

impl<'g> FlowSearch<'g> {
    fn new(g: &'g CubicGraph, group: Group) -> Self {
        FlowSearch {
            g,
            group,
            values: vec![0; g.edge_count()],
        }
    }

    /// Vertices in reverse BFS order from the component's first vertex, so
    /// every vertex except the root is handled before its BFS parent.
    fn plan(&self, comp: &[VertexId]) -> Vec<Step> {
        let g = self.g;
        let n = g.vertex_count();
        let root = comp[0];
        let mut parent_edge: Vec<Option<EdgeId>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut bfs = vec![root];
        seen[root] = true;
        let mut i = 0;
        while i < bfs.len() {
            let x = bfs[i];
            for &e in g.incident(x) {
                if let Endpoint::Vertex(y) = g.edges()[e].opposite(x) {
                    if !seen[y] {
                        seen[y] = true;
                        parent_edge[y] = Some(e);
                        bfs.push(y);
                    }
                }
            }
            i += 1;
        }
        let mut pos = vec![usize::MAX; n];
        for (k, &x) in bfs.iter().rev().enumerate() {
            pos[x] = k;
        }

        bfs.iter()
            .rev()
            .map(|&x| {
                let mut free = Vec::new();
                let mut last = None;
                for &e in g.incident(x) {
                    let edge = &g.edges()[e];
                    if edge.is_loop() || Some(e) == parent_edge[x] || last == Some(e) {
                        continue;
                    }
                    last = Some(e);
                    match edge.opposite(x) {
                        Endpoint::Dangling => free.push(e),
                        Endpoint::Vertex(y) => {
                            if parent_edge[y] != Some(e) && pos[x] < pos[y] {
                                free.push(e);
                            }
                        }
                    }
                }
                Step {
                    vertex: x,
                    free,
                    forced: parent_edge[x],
                }
            })
            .collect()
    }

    /// Outflow minus inflow at `x` over edges already valued; all edges are
    /// oriented from their `a` end to their `b` end.
    fn net_at(&self, x: VertexId) -> u8 {
        let g = self.g;
        let mut net = 0;
        for &e in g.incident(x) {
            let edge = &g.edges()[e];
            if edge.is_loop() || self.values[e] == 0 {
                continue;
            }
            net = if edge.a == Endpoint::Vertex(x) {
                self.group.add(net, self.values[e])
            } else {
                self.group.sub(net, self.values[e])
            };
        }
        net
    }

    fn run(&mut self, plan: &[Step], step: usize, k: usize) -> bool {
        let Some(s) = plan.get(step) else {
            return true;
        };
        if let Some(&e) = s.free.get(k) {
            for x in Group::NONZERO {
                self.values[e] = x;
                if self.run(plan, step, k + 1) {
                    return true;
                }
            }
            self.values[e] = 0;
            return false;
        }
        let net = self.net_at(s.vertex);
        match s.forced {
            None => net == 0 && self.run(plan, step + 1, 0),
            Some(e) => {
                let tail = self.g.edges()[e].a == Endpoint::Vertex(s.vertex);
                let x = if tail { self.group.neg(net) } else { net };
                if x == 0 {
                    return false;
                }
                self.values[e] = x;
                if self.run(plan, step + 1, 0) {
                    return true;
                }
                self.values[e] = 0;
                false
            }
        }
    }
}
