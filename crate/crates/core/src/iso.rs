//! Isomorphism testing for small multigraphs (loops, parallel and dangling
//! edges included). Colour refinement followed by backtracking; good enough
//! for the graph sizes this crate works with, not meant for large inputs.

use std::collections::HashMap;

use crate::graph::{CubicGraph, VertexId};

struct Shape {
    n: usize,
    mult: Vec<Vec<u16>>,
    loops: Vec<u16>,
    dangling: Vec<u16>,
    adj: Vec<Vec<VertexId>>,
}

impl Shape {
    fn of(g: &CubicGraph) -> Shape {
        let n = g.vertex_count();
        let mut mult = vec![vec![0u16; n]; n];
        let mut loops = vec![0u16; n];
        let mut dangling = vec![0u16; n];
        for e in g.edges() {
            match (e.a.vertex(), e.b.vertex()) {
                (Some(a), Some(b)) if a == b => loops[a] += 1,
                (Some(a), Some(b)) => {
                    mult[a][b] += 1;
                    mult[b][a] += 1;
                }
                (Some(a), None) | (None, Some(a)) => dangling[a] += 1,
                (None, None) => {}
            }
        }
        let adj = (0..n)
            .map(|v| (0..n).filter(|&w| mult[v][w] > 0).collect())
            .collect();
        Shape {
            n,
            mult,
            loops,
            dangling,
            adj,
        }
    }
}

/// Stable colour refinement computed over both graphs at once so the colour
/// ids are comparable.
fn refine(a: &Shape, b: &Shape) -> (Vec<usize>, Vec<usize>) {
    let mut table: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut initial = |s: &Shape| -> Vec<usize> {
        (0..s.n)
            .map(|v| {
                let deg: usize = s.mult[v].iter().map(|&m| m as usize).sum();
                let key = vec![deg, s.loops[v] as usize, s.dangling[v] as usize];
                let next = table.len();
                *table.entry(key).or_insert(next)
            })
            .collect()
    };
    let mut ca = initial(a);
    let mut cb = initial(b);
    let mut classes = table.len();
    loop {
        let mut table: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut step = |s: &Shape, c: &[usize]| -> Vec<usize> {
            (0..s.n)
                .map(|v| {
                    let mut sig: Vec<usize> = s.adj[v]
                        .iter()
                        .map(|&w| c[w] * 64 + s.mult[v][w] as usize)
                        .collect();
                    sig.sort_unstable();
                    sig.insert(0, c[v]);
                    let next = table.len();
                    *table.entry(sig).or_insert(next)
                })
                .collect()
        };
        let na = step(a, &ca);
        let nb = step(b, &cb);
        ca = na;
        cb = nb;
        if table.len() == classes {
            return (ca, cb);
        }
        classes = table.len();
    }
}

fn search_order(s: &Shape) -> (Vec<VertexId>, Vec<Option<VertexId>>) {
    let mut seen = vec![false; s.n];
    let mut order = Vec::with_capacity(s.n);
    let mut parent = vec![None; s.n];
    for root in 0..s.n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let x = order[i];
            for &y in &s.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(x);
                    order.push(y);
                }
            }
            i += 1;
        }
    }
    (order, parent)
}

struct Matcher<'a> {
    a: &'a Shape,
    b: &'a Shape,
    ca: Vec<usize>,
    cb: Vec<usize>,
    order: Vec<VertexId>,
    parent: Vec<Option<VertexId>>,
    map: Vec<Option<VertexId>>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn new<'a>(a: &'a Shape, b: &'a Shape) -> Matcher<'a> {
        let (ca, cb) = refine(a, b);
        let (order, parent) = search_order(a);
        Matcher {
            a,
            b,
            ca,
            cb,
            order,
            parent,
            map: vec![None; a.n],
            used: vec![false; b.n],
        }
    }

    fn fits(&self, x: VertexId, y: VertexId) -> bool {
        if self.used[y] || self.ca[x] != self.cb[y] {
            return false;
        }
        if self.a.loops[x] != self.b.loops[y] || self.a.dangling[x] != self.b.dangling[y] {
            return false;
        }
        self.order.iter().all(|&z| match self.map[z] {
            Some(w) => self.a.mult[x][z] == self.b.mult[y][w],
            None => true,
        })
    }

    /// Counts complete mappings, stopping once `limit` have been seen.
    fn count(&mut self, depth: usize, limit: u64) -> u64 {
        if depth == self.order.len() {
            return 1;
        }
        let x = self.order[depth];
        let candidates: Vec<VertexId> = match self.parent[x] {
            Some(p) => self.b.adj[self.map[p].unwrap()].clone(),
            None => (0..self.b.n).collect(),
        };
        let mut total = 0;
        for y in candidates {
            if !self.fits(x, y) {
                continue;
            }
            self.map[x] = Some(y);
            self.used[y] = true;
            total += self.count(depth + 1, limit - total);
            self.used[y] = false;
            self.map[x] = None;
            if total >= limit {
                break;
            }
        }
        total
    }
}

fn quick_invariants(g: &CubicGraph) -> (usize, usize, usize, usize, Vec<usize>) {
    let mut degrees = g.degrees().to_vec();
    degrees.sort_unstable();
    (
        g.vertex_count(),
        g.edge_count(),
        g.loop_count(),
        g.dangling_count(),
        degrees,
    )
}

pub fn is_isomorphic(g: &CubicGraph, h: &CubicGraph) -> bool {
    if quick_invariants(g) != quick_invariants(h) {
        return false;
    }
    let free = |x: &CubicGraph| x.edges().iter().filter(|e| e.is_free()).count();
    if free(g) != free(h) {
        return false;
    }
    let (a, b) = (Shape::of(g), Shape::of(h));
    let mut m = Matcher::new(&a, &b);
    {
        let mut ha: Vec<usize> = m.ca.clone();
        let mut hb: Vec<usize> = m.cb.clone();
        ha.sort_unstable();
        hb.sort_unstable();
        if ha != hb {
            return false;
        }
    }
    m.count(0, 1) == 1
}

/// Size of the automorphism group of `g` (as a permutation group on vertices).
pub fn automorphism_count(g: &CubicGraph) -> u64 {
    let a = Shape::of(g);
    let mut m = Matcher::new(&a, &a);
    m.count(0, u64::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::named::{make_named, Named};

    #[test]
    fn relabelled_petersen_is_isomorphic() {
        let g = make_named(&Named::Petersen).unwrap();
        let perm = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4];
        let pairs: Vec<_> = g
            .edges()
            .iter()
            .map(|e| {
                let (a, b) = e.vertices().unwrap();
                (perm[a], perm[b])
            })
            .collect();
        let h = CubicGraph::from_pairs(10, &pairs).unwrap();
        assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn petersen_is_not_the_prism_pair() {
        // 10-vertex cubic graph with triangles
        let k4 = make_named(&Named::K4).unwrap();
        let h = k4.expand_triangle(0).unwrap().expand_triangle(1).unwrap().expand_triangle(2).unwrap();
        let g = make_named(&Named::Petersen).unwrap();
        assert_eq!(h.vertex_count(), 10);
        assert!(!is_isomorphic(&g, &h));
    }

    #[test]
    fn automorphism_groups() {
        assert_eq!(automorphism_count(&make_named(&Named::Petersen).unwrap()), 120);
        assert_eq!(automorphism_count(&make_named(&Named::K4).unwrap()), 24);
        assert_eq!(automorphism_count(&make_named(&Named::Theta).unwrap()), 2);
    }
}
