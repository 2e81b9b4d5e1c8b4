//! Multigraph model with loops, parallel edges and dangling edges, plus the
//! local surgery operations used by the criticality checks.
//!
//! Vertex and edge ids are dense indices. Every operation returns a fresh
//! graph with its own dense numbering; the input is never touched.

use std::fmt;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// One end of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Endpoint {
    Vertex(VertexId),
    /// The detached side of an edge whose vertex was removed.
    Dangling,
}

impl Endpoint {
    pub fn vertex(self) -> Option<VertexId> {
        match self {
            Endpoint::Vertex(v) => Some(v),
            Endpoint::Dangling => None,
        }
    }

    pub fn is_dangling(self) -> bool {
        matches!(self, Endpoint::Dangling)
    }
}

impl From<VertexId> for Endpoint {
    fn from(v: VertexId) -> Self {
        Endpoint::Vertex(v)
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::Vertex(v) => write!(f, "{v}"),
            Endpoint::Dangling => f.write_str("*"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub a: Endpoint,
    pub b: Endpoint,
}

impl Edge {
    pub fn new(a: impl Into<Endpoint>, b: impl Into<Endpoint>) -> Self {
        Edge {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn is_loop(&self) -> bool {
        matches!((self.a, self.b), (Endpoint::Vertex(x), Endpoint::Vertex(y)) if x == y)
    }

    /// Exactly one dangling end.
    pub fn is_dangling(&self) -> bool {
        self.a.is_dangling() != self.b.is_dangling()
    }

    /// Both ends dangling.
    pub fn is_free(&self) -> bool {
        self.a.is_dangling() && self.b.is_dangling()
    }

    /// Vertices this edge is attached to (a loop yields its vertex twice).
    pub fn vertex_ends(&self) -> impl Iterator<Item = VertexId> {
        self.a.vertex().into_iter().chain(self.b.vertex())
    }

    /// Both ends as vertices, if neither is dangling.
    pub fn vertices(&self) -> Option<(VertexId, VertexId)> {
        Some((self.a.vertex()?, self.b.vertex()?))
    }

    /// The end opposite to `v`. For a loop at `v` this is `v` again.
    pub fn opposite(&self, v: VertexId) -> Endpoint {
        if self.a == Endpoint::Vertex(v) {
            self.b
        } else {
            self.a
        }
    }

    fn joins(&self, u: VertexId, v: VertexId) -> bool {
        (self.a == Endpoint::Vertex(u) && self.b == Endpoint::Vertex(v))
            || (self.a == Endpoint::Vertex(v) && self.b == Endpoint::Vertex(u))
    }
}

/// An immutable multigraph. Despite the name, vertices may have any degree;
/// [`CubicGraph::is_cubic`] tells whether every degree is exactly three.
#[derive(Clone, PartialEq, Eq)]
pub struct CubicGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
    degree: Vec<usize>,
    // edge ids at each vertex, a loop appears twice
    incidence: Vec<Vec<EdgeId>>,
}

impl fmt::Debug for CubicGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CubicGraph(n={}; ", self.vertex_count)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}-{}", e.a, e.b)?;
        }
        f.write_str(")")
    }
}

impl CubicGraph {
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut degree = vec![0; vertex_count];
        let mut incidence = vec![Vec::new(); vertex_count];
        for (id, e) in edges.iter().enumerate() {
            for v in e.vertex_ends() {
                if v >= vertex_count {
                    return Err(Error::NoSuchVertex {
                        edge: id,
                        vertex: v,
                        vertex_count,
                    });
                }
                degree[v] += 1;
                incidence[v].push(id);
            }
        }
        Ok(CubicGraph {
            vertex_count,
            edges,
            degree,
            incidence,
        })
    }

    /// Builds a graph from plain vertex pairs; `(v, v)` is a loop.
    pub fn from_pairs(vertex_count: usize, pairs: &[(VertexId, VertexId)]) -> Result<Self> {
        Self::new(
            vertex_count,
            pairs.iter().map(|&(a, b)| Edge::new(a, b)).collect(),
        )
    }

    pub fn empty() -> Self {
        CubicGraph {
            vertex_count: 0,
            edges: Vec::new(),
            degree: Vec::new(),
            incidence: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Result<&Edge> {
        self.edges.get(e).ok_or(Error::UnknownEdge(e))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.degree[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn max_degree(&self) -> usize {
        self.degree.iter().copied().max().unwrap_or(0)
    }

    pub fn is_cubic(&self) -> bool {
        self.degree.iter().all(|&d| d == 3) && !self.has_dangling()
    }

    pub fn has_dangling(&self) -> bool {
        self.edges.iter().any(|e| e.a.is_dangling() || e.b.is_dangling())
    }

    pub fn dangling_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_dangling()).count()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_loop()).count()
    }

    pub fn has_loop_at(&self, v: VertexId) -> bool {
        self.incidence[v].iter().any(|&e| self.edges[e].is_loop())
    }

    pub fn has_parallel_edges(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges
            .iter()
            .filter_map(|e| e.vertices())
            .filter(|(a, b)| a != b)
            .any(|(a, b)| !seen.insert((a.min(b), a.max(b))))
    }

    /// Loopless, no parallel edges, no dangling edges.
    pub fn is_simple(&self) -> bool {
        self.loop_count() == 0 && !self.has_dangling() && !self.has_parallel_edges()
    }

    /// Neighbours of `v` through non-dangling edges, with multiplicity.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let mut loop_seen = false;
        self.incidence[v].iter().filter_map(move |&e| {
            let edge = &self.edges[e];
            if edge.is_loop() {
                // a loop shows up twice in the incidence list; report it once
                loop_seen = !loop_seen;
                return if loop_seen { Some(v) } else { None };
            }
            edge.opposite(v).vertex()
        })
    }

    /// Non-loop edges joining `u` and `v`.
    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        if u == v || u >= self.vertex_count || v >= self.vertex_count {
            return Vec::new();
        }
        self.incidence[u]
            .iter()
            .copied()
            .filter(|&e| self.edges[e].joins(u, v))
            .collect()
    }

    pub fn is_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        !self.edges_between(u, v).is_empty()
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Sum of vertex degrees must equal twice the attached edges plus the
    /// dangling ones.
    pub fn degree_sum_consistent(&self) -> bool {
        let sum: usize = self.degree.iter().sum();
        let attached = self.edges.iter().filter(|e| e.vertices().is_some()).count();
        sum == 2 * attached + self.dangling_count()
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    fn check_pair(&self, p: VertexPair) -> Result<()> {
        self.check_vertex(p.u)?;
        self.check_vertex(p.v)
    }

    /// `G - {u,v}`: deletes both vertices, keeping every edge that had one
    /// end there as a dangling edge. Edges with both ends in `{u,v}` (the
    /// joining edges and loops at `u` or `v`) disappear.
    pub fn remove_vertex_pair(&self, p: VertexPair) -> Result<CubicGraph> {
        self.check_pair(p)?;
        let map = relabel(self.vertex_count, &[p.u, p.v]);
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let hit = |x: Endpoint| matches!(x, Endpoint::Vertex(w) if w == p.u || w == p.v);
            match (hit(e.a), hit(e.b)) {
                (true, true) => continue,
                (ha, hb) => {
                    let end = |x: Endpoint, removed: bool| {
                        if removed {
                            Endpoint::Dangling
                        } else {
                            map_end(&map, x)
                        }
                    };
                    edges.push(Edge {
                        a: end(e.a, ha),
                        b: end(e.b, hb),
                    });
                }
            }
        }
        CubicGraph::new(self.vertex_count - 2, edges)
    }

    /// `G/{u,v}`: merges `u` and `v` into one vertex. Edges between them
    /// become loops. The merged vertex takes the smaller id.
    pub fn identify_vertices(&self, p: VertexPair) -> Result<CubicGraph> {
        self.check_pair(p)?;
        if self.has_dangling() {
            return Err(Error::DanglingEdges);
        }
        Ok(self.merge(p.u, p.v, None))
    }

    /// `G - e`.
    pub fn delete_edge(&self, e: EdgeId) -> Result<CubicGraph> {
        self.edge(e)?;
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(id, _)| id != e)
            .map(|(_, &x)| x)
            .collect();
        CubicGraph::new(self.vertex_count, edges)
    }

    /// `G/e`: identifies the ends of `e` and drops `e` itself. Parallel
    /// companions of `e` survive as loops.
    pub fn contract_edge(&self, e: EdgeId) -> Result<CubicGraph> {
        let edge = *self.edge(e)?;
        if edge.is_loop() {
            return Err(Error::LoopEdge(e));
        }
        let (u, v) = edge.vertices().ok_or(Error::DanglingEdges)?;
        Ok(self.merge(u, v, Some(e)))
    }

    fn merge(&self, u: VertexId, v: VertexId, skip: Option<EdgeId>) -> CubicGraph {
        let (keep, drop) = (u.min(v), u.max(v));
        let mut map = relabel(self.vertex_count, &[drop]);
        map[drop] = map[keep];
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(id, _)| Some(id) != skip)
            .map(|(_, e)| Edge {
                a: map_end(&map, e.a),
                b: map_end(&map, e.b),
            })
            .collect();
        CubicGraph::new(self.vertex_count - 1, edges).expect("relabelled ids are in range")
    }

    /// `G ~ e`: deletes `e` and splices out both of its (now degree-two)
    /// ends. Fails with [`Error::NonSuppressible`] when an end is left
    /// carrying a loop, which happens e.g. for the bridge of the dumbbell.
    pub fn suppress_edge(&self, e: EdgeId) -> Result<CubicGraph> {
        let edge = *self.edge(e)?;
        if edge.is_loop() {
            return Err(Error::LoopEdge(e));
        }
        let (u, v) = edge.vertices().ok_or(Error::DanglingEdges)?;
        for x in [u, v] {
            if self.degree[x] != 3 {
                return Err(Error::WrongDegree {
                    vertex: x,
                    degree: self.degree[x],
                    expected: 3,
                });
            }
        }

        let mut work: Vec<Option<Edge>> = self.edges.iter().copied().map(Some).collect();
        work[e] = None;
        for x in [u, v] {
            let at_x: Vec<EdgeId> = work
                .iter()
                .enumerate()
                .filter_map(|(id, w)| w.filter(|w| w.vertex_ends().any(|y| y == x)).map(|_| id))
                .collect();
            if at_x.iter().any(|&id| work[id].unwrap().is_loop()) {
                return Err(Error::NonSuppressible { edge: e, vertex: x });
            }
            debug_assert_eq!(at_x.len(), 2);
            let p = work[at_x[0]].unwrap().opposite(x);
            let q = work[at_x[1]].unwrap().opposite(x);
            work[at_x[0]] = Some(Edge { a: p, b: q });
            work[at_x[1]] = None;
        }

        let map = relabel(self.vertex_count, &[u, v]);
        let edges = work
            .into_iter()
            .flatten()
            .map(|w| Edge {
                a: map_end(&map, w.a),
                b: map_end(&map, w.b),
            })
            .collect();
        CubicGraph::new(self.vertex_count - 2, edges)
    }

    /// Replaces `v` by a triangle; each triangle vertex inherits one of the
    /// three former incidences of `v`. The new vertices get ids `n` and
    /// `n + 1`, and `v` keeps its id as the first triangle corner.
    pub fn expand_triangle(&self, v: VertexId) -> Result<CubicGraph> {
        self.check_vertex(v)?;
        if self.has_loop_at(v) {
            return Err(Error::LoopAtVertex(v));
        }
        if self.degree[v] != 3 {
            return Err(Error::WrongDegree {
                vertex: v,
                degree: self.degree[v],
                expected: 3,
            });
        }
        let n = self.vertex_count;
        let corners = [v, n, n + 1];
        let mut edges = self.edges.clone();
        for (&id, &corner) in self.incidence[v].iter().zip(&corners) {
            let e = &mut edges[id];
            if e.a == Endpoint::Vertex(v) {
                e.a = Endpoint::Vertex(corner);
            } else {
                e.b = Endpoint::Vertex(corner);
            }
        }
        edges.push(Edge::new(corners[0], corners[1]));
        edges.push(Edge::new(corners[1], corners[2]));
        edges.push(Edge::new(corners[2], corners[0]));
        CubicGraph::new(n + 2, edges)
    }
}

/// Old id -> new id after deleting `removed`, preserving order.
fn relabel(n: usize, removed: &[VertexId]) -> Vec<Option<VertexId>> {
    let mut next = 0;
    (0..n)
        .map(|v| {
            if removed.contains(&v) {
                None
            } else {
                next += 1;
                Some(next - 1)
            }
        })
        .collect()
}

fn map_end(map: &[Option<VertexId>], x: Endpoint) -> Endpoint {
    match x {
        Endpoint::Vertex(v) => Endpoint::Vertex(map[v].expect("vertex was removed")),
        Endpoint::Dangling => Endpoint::Dangling,
    }
}

/// An unordered pair of distinct vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexPair {
    u: VertexId,
    v: VertexId,
}

impl VertexPair {
    pub fn new(u: VertexId, v: VertexId) -> Result<Self> {
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(VertexPair {
            u: u.min(v),
            v: u.max(v),
        })
    }

    pub fn u(&self) -> VertexId {
        self.u
    }

    pub fn v(&self) -> VertexId {
        self.v
    }

    pub fn is_adjacent(&self, g: &CubicGraph) -> bool {
        g.is_adjacent(self.u, self.v)
    }

    pub fn connecting_edges(&self, g: &CubicGraph) -> Vec<EdgeId> {
        g.edges_between(self.u, self.v)
    }

    /// All unordered pairs of `g` in lexicographic order.
    pub fn all(g: &CubicGraph) -> impl Iterator<Item = VertexPair> {
        let n = g.vertex_count();
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| VertexPair { u, v }))
    }

    /// Adjacent pairs of `g` in lexicographic order.
    pub fn adjacent(g: &CubicGraph) -> impl Iterator<Item = VertexPair> + '_ {
        VertexPair::all(g).filter(move |p| p.is_adjacent(g))
    }
}

impl fmt::Display for VertexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.u, self.v)
    }
}
