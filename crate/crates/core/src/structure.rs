//! Connectivity, girth, bridges and cyclic edge-connectivity.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId, Endpoint, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureProfile {
    pub connected: bool,
    pub bridge_count: usize,
    /// `None` for forests.
    pub girth: Option<usize>,
    /// `None` when undefined: fewer than two disjoint cycles, or the graph is
    /// not a connected cubic graph.
    pub cyclic_edge_connectivity: Option<usize>,
}

pub fn profile(g: &CubicGraph) -> StructureProfile {
    let connected = g.is_connected();
    StructureProfile {
        connected,
        bridge_count: find_bridges(g).len(),
        girth: girth(g),
        cyclic_edge_connectivity: if connected && g.is_cubic() {
            cyclic_edge_connectivity(g).ok().flatten()
        } else {
            None
        },
    }
}

/// Length of a shortest cycle; loops have length 1 and a pair of parallel
/// edges length 2. Dangling edges are ignored.
pub fn girth(g: &CubicGraph) -> Option<usize> {
    shortest_cycle(g).map(|c| c.len())
}

/// Vertices of one shortest cycle, in cyclic order.
pub fn shortest_cycle(g: &CubicGraph) -> Option<Vec<VertexId>> {
    if let Some(e) = g.edges().iter().find(|e| e.is_loop()) {
        return Some(vec![e.a.vertex().unwrap()]);
    }
    let mut best: Option<Vec<VertexId>> = None;
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut via: Vec<Option<(VertexId, EdgeId)>> = vec![None; n];
    for s in g.vertices() {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        via.iter_mut().for_each(|p| *p = None);
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        'bfs: while let Some(x) = queue.pop_front() {
            if let Some(b) = &best {
                if 2 * dist[x] + 1 >= b.len() {
                    break;
                }
            }
            for &e in g.incident(x) {
                if via[x].map(|(_, pe)| pe) == Some(e) {
                    continue;
                }
                let Endpoint::Vertex(y) = g.edges()[e].opposite(x) else {
                    continue;
                };
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    via[y] = Some((x, e));
                    queue.push_back(y);
                } else {
                    let len = dist[x] + dist[y] + 1;
                    if best.as_ref().is_some_and(|b| len >= b.len()) {
                        continue;
                    }
                    let walk = |mut z: VertexId| {
                        let mut path = vec![z];
                        while let Some((p, _)) = via[z] {
                            path.push(p);
                            z = p;
                        }
                        path
                    };
                    let px = walk(x);
                    let py = walk(y);
                    // the two tree paths must meet only at s
                    if px.iter().filter(|v| py.contains(v)).count() == 1 {
                        // s .. x then y .. (just before s)
                        let mut cycle: Vec<VertexId> = px.into_iter().rev().collect();
                        cycle.extend(&py[..py.len() - 1]);
                        best = Some(cycle);
                        if best.as_ref().unwrap().len() <= 2 {
                            break 'bfs;
                        }
                    }
                }
            }
        }
    }
    best
}

/// All cut edges, sorted by id. Loops and dangling edges are never bridges.
pub fn find_bridges(g: &CubicGraph) -> Vec<EdgeId> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut bridges = Vec::new();
    let mut time = 0;
    for root in g.vertices() {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, edge used to enter it, next incidence index)
        let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(&mut (x, entry, ref mut next)) = stack.last_mut() {
            if let Some(&e) = g.incident(x).get(*next) {
                *next += 1;
                if Some(e) == entry || g.edges()[e].is_loop() {
                    continue;
                }
                let Endpoint::Vertex(y) = g.edges()[e].opposite(x) else {
                    continue;
                };
                if disc[y] == usize::MAX {
                    disc[y] = time;
                    low[y] = time;
                    time += 1;
                    stack.push((y, Some(e), 0));
                } else {
                    low[x] = low[x].min(disc[y]);
                }
            } else {
                stack.pop();
                if let (Some(e), Some(&(p, _, _))) = (entry, stack.last()) {
                    low[p] = low[p].min(low[x]);
                    if low[x] > disc[p] {
                        bridges.push(e);
                    }
                }
            }
        }
    }
    bridges.sort_unstable();
    bridges
}

type VSet = u128;
const MAX_ORDER: usize = 128;

fn bit(v: VertexId) -> VSet {
    1 << v
}

fn members(mut s: VSet) -> impl Iterator<Item = VertexId> {
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(v)
        }
    })
}

/// Smallest edge cut leaving a cycle on both sides, for connected cubic
/// graphs (loops and parallel edges allowed). `None` when no such cut
/// exists, i.e. the graph lacks two vertex-disjoint cycles.
///
/// Both sides of a minimum cyclic cut are connected, and a connected side
/// with `k` boundary edges contains a cycle iff it has at least `k`
/// vertices. So a cyclic cut of size at most `k` exists iff two disjoint
/// connected `k`-vertex seeds are separated by at most `k` edges, which
/// is a unit-capacity max-flow question. `k` runs upwards from 1 and is
/// capped by the cut around a shortest cycle when that cut is cyclic.
pub fn cyclic_edge_connectivity(g: &CubicGraph) -> Result<Option<usize>> {
    if g.has_dangling() {
        return Err(Error::DanglingEdges);
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) != 3) {
        return Err(Error::WrongDegree {
            vertex: v,
            degree: g.degree(v),
            expected: 3,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    if n > MAX_ORDER {
        return Err(Error::TooLarge {
            order: n,
            limit: MAX_ORDER,
        });
    }
    let adj: Vec<VSet> = g
        .vertices()
        .map(|v| g.neighbors(v).filter(|&w| w != v).fold(0, |s, w| s | bit(w)))
        .collect();
    let bound = shortest_cycle(g).and_then(|c| cycle_cut_bound(g, &c));
    let mut net = CutNetwork::new(g);
    let mut k = 1;
    while 2 * k <= n {
        if bound.is_some_and(|b| k >= b) {
            return Ok(bound);
        }
        let seeds = connected_subsets(&adj, k);
        for (i, &a) in seeds.iter().enumerate() {
            for &b in &seeds[i + 1..] {
                if a & b == 0 && net.cut_at_most(a, b, k) {
                    return Ok(Some(k));
                }
            }
        }
        k += 1;
    }
    Ok(bound)
}

/// Size of the cut around `cycle` if the rest of the graph still has a cycle.
fn cycle_cut_bound(g: &CubicGraph, cycle: &[VertexId]) -> Option<usize> {
    let inside: VSet = cycle.iter().fold(0, |s, &v| s | bit(v));
    let is_in = |v: VertexId| inside & bit(v) != 0;
    let mut cut = 0;
    for e in g.edges() {
        let (a, b) = e.vertices()?;
        if is_in(a) != is_in(b) {
            cut += 1;
        }
    }
    // rest is a union of components; it has a cycle iff some component has
    // at least as many edges as vertices
    let rest: Vec<VertexId> = g.vertices().filter(|&v| !is_in(v)).collect();
    let mut comp_of = vec![usize::MAX; g.vertex_count()];
    let mut sizes: Vec<(usize, usize)> = Vec::new();
    for &s in &rest {
        if comp_of[s] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        sizes.push((0, 0));
        comp_of[s] = id;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            sizes[id].0 += 1;
            for y in g.neighbors(x) {
                if !is_in(y) && comp_of[y] == usize::MAX {
                    comp_of[y] = id;
                    stack.push(y);
                }
            }
        }
    }
    for e in g.edges() {
        let (a, b) = e.vertices()?;
        if !is_in(a) && !is_in(b) {
            sizes[comp_of[a]].1 += 1;
        }
    }
    sizes.iter().any(|&(v, e)| e >= v).then_some(cut)
}

/// All connected vertex sets of size `k` (ESU enumeration).
fn connected_subsets(adj: &[VSet], k: usize) -> Vec<VSet> {
    fn extend(adj: &[VSet], k: usize, root: VertexId, sub: VSet, nbhd: VSet, ext: VSet, out: &mut Vec<VSet>) {
        if sub.count_ones() as usize == k {
            out.push(sub);
            return;
        }
        let mut ext = ext;
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let above_root = !((bit(root) << 1) - 1);
            let fresh = adj[w] & !sub & !nbhd & above_root;
            extend(adj, k, root, sub | bit(w), nbhd | adj[w], ext | fresh, out);
        }
    }
    let mut out = Vec::new();
    for v in 0..adj.len() {
        let above = !((bit(v) << 1) - 1);
        extend(adj, k, v, bit(v), adj[v] | bit(v), adj[v] & above, &mut out);
    }
    out
}

/// Unit-capacity undirected network over the non-loop edges.
struct CutNetwork {
    n: usize,
    // arcs 2i and 2i+1 are the two directions of edge i
    head: Vec<VertexId>,
    cap: Vec<u8>,
    out: Vec<Vec<usize>>,
}

impl CutNetwork {
    fn new(g: &CubicGraph) -> Self {
        let n = g.vertex_count();
        let mut head = Vec::new();
        let mut out = vec![Vec::new(); n];
        for e in g.edges() {
            let Some((a, b)) = e.vertices() else { continue };
            if a == b {
                continue;
            }
            out[a].push(head.len());
            head.push(b);
            out[b].push(head.len());
            head.push(a);
        }
        let cap = vec![1; head.len()];
        CutNetwork { n, head, cap, out }
    }

    /// Whether at most `k` edges separate vertex sets `a` and `b`.
    fn cut_at_most(&mut self, a: VSet, b: VSet, k: usize) -> bool {
        self.cap.iter_mut().for_each(|c| *c = 1);
        let mut pred: Vec<Option<usize>> = vec![None; self.n];
        for _ in 0..=k {
            pred.iter_mut().for_each(|p| *p = None);
            let mut seen: VSet = a;
            let mut queue: std::collections::VecDeque<VertexId> = members(a).collect();
            let mut sink = None;
            'bfs: while let Some(x) = queue.pop_front() {
                for &arc in &self.out[x] {
                    let y = self.head[arc];
                    if self.cap[arc] == 0 || seen & bit(y) != 0 {
                        continue;
                    }
                    seen |= bit(y);
                    pred[y] = Some(arc);
                    if b & bit(y) != 0 {
                        sink = Some(y);
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
            let Some(mut y) = sink else {
                return true;
            };
            while let Some(arc) = pred[y] {
                self.cap[arc] -= 1;
                self.cap[arc ^ 1] += 1;
                y = self.head[arc ^ 1];
                if a & bit(y) != 0 {
                    break;
                }
            }
        }
        false
    }
}
