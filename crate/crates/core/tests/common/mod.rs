//! Brute-force oracles and fixtures shared by the integration tests. Nothing
//! here calls the solvers under test.

#![allow(dead_code)]

use std::path::PathBuf;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use snarkcrit::io::{read_corpus, CorpusEntry};
use snarkcrit::CubicGraph;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

pub fn corpus(name: &str) -> Vec<CorpusEntry> {
    let path = data_path(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    read_corpus(&text, name).unwrap()
}

/// Every snark file, smallest orders first.
pub fn snark_corpus() -> Vec<CorpusEntry> {
    let mut all = corpus("snarks_10_22.g6");
    all.extend(corpus("snarks_24_sample.g6"));
    all.extend(corpus("snarks_26_28_products.g6"));
    all
}

/// Vertex ends of each edge, `None` for a dangling end.
fn ends(g: &CubicGraph) -> Vec<(Option<usize>, Option<usize>)> {
    g.edges().iter().map(|e| (e.a.vertex(), e.b.vertex())).collect()
}

/// Plain backtracking over edges in index order: no ordering heuristic, no
/// symmetry breaking, no look-ahead. Loops make colouring impossible.
pub fn naive_colorable(g: &CubicGraph) -> bool {
    let ends = ends(g);
    if ends.iter().any(|&(a, b)| a.is_some() && a == b) {
        return false;
    }
    let mut colour = vec![0u8; ends.len()];
    fn clash(ends: &[(Option<usize>, Option<usize>)], colour: &[u8], i: usize) -> bool {
        let (a, b) = ends[i];
        (0..i).any(|j| {
            colour[j] == colour[i] && {
                let (c, d) = ends[j];
                [a, b].iter().flatten().any(|v| Some(*v) == c || Some(*v) == d)
            }
        })
    }
    fn go(ends: &[(Option<usize>, Option<usize>)], colour: &mut [u8], i: usize) -> bool {
        if i == ends.len() {
            return true;
        }
        for c in 1..=3 {
            colour[i] = c;
            if !clash(ends, colour, i) && go(ends, colour, i + 1) {
                return true;
            }
        }
        colour[i] = 0;
        false
    }
    go(&ends, &mut colour, 0)
}

/// Values 1..=3 on every edge in index order, each edge oriented a -> b;
/// a vertex is checked once its last incident edge has a value.
/// `klein` selects Z2 x Z2 (xor) instead of Z4.
pub fn naive_flow(g: &CubicGraph, klein: bool) -> bool {
    let ends = ends(g);
    let n = g.vertex_count();
    let mut last = vec![None; n];
    for (i, &(a, b)) in ends.iter().enumerate() {
        for v in [a, b].into_iter().flatten() {
            last[v] = Some(i);
        }
    }
    let mut closes: Vec<Vec<usize>> = vec![Vec::new(); ends.len()];
    for (v, l) in last.iter().enumerate() {
        if let Some(i) = *l {
            closes[i].push(v);
        }
    }
    let net = |vals: &[u8], v: usize| -> u8 {
        let mut s = 0u8;
        for (i, &(a, b)) in ends.iter().enumerate().take(vals.len()) {
            if a == Some(v) {
                s = if klein { s ^ vals[i] } else { (s + vals[i]) % 4 };
            }
            if b == Some(v) {
                s = if klein { s ^ vals[i] } else { (s + 4 - vals[i]) % 4 };
            }
        }
        s
    };
    fn go(
        i: usize,
        vals: &mut Vec<u8>,
        total: usize,
        closes: &[Vec<usize>],
        net: &dyn Fn(&[u8], usize) -> u8,
    ) -> bool {
        if i == total {
            return true;
        }
        for x in 1..=3 {
            vals.push(x);
            if closes[i].iter().all(|&v| net(vals, v) == 0) && go(i + 1, vals, total, closes, net) {
                return true;
            }
            vals.pop();
        }
        false
    }
    go(0, &mut Vec::new(), ends.len(), &closes, &net)
}

/// Minimum cyclic edge cut by trying every vertex subset containing vertex
/// 0. `None` when no cut separates two cycles.
pub fn exhaustive_cyclic_connectivity(g: &CubicGraph) -> Option<usize> {
    let n = g.vertex_count();
    assert!(n <= 24, "exhaustive cut search is exponential");
    let ends: Vec<(usize, usize)> = g.edges().iter().map(|e| e.vertices().unwrap()).collect();
    let has_cycle = |side: u32, inside: bool| {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &ends {
            if ((side >> a) & 1 == 1) == inside && ((side >> b) & 1 == 1) == inside {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra == rb {
                    return true;
                }
                parent[ra] = rb;
            }
        }
        false
    };
    let mut best = None;
    for rest in 0..(1u32 << (n - 1)) {
        let side = (rest << 1) | 1;
        if side == (1u32 << n) - 1 {
            continue;
        }
        let cut = ends
            .iter()
            .filter(|&&(a, b)| ((side >> a) & 1) != ((side >> b) & 1))
            .count();
        if best.is_some_and(|b| cut >= b) {
            continue;
        }
        if has_cycle(side, true) && has_cycle(side, false) {
            best = Some(cut);
        }
    }
    best
}

/// Shortest cycle length by deleting each edge and measuring the distance
/// between its ends.
pub fn brute_girth(g: &CubicGraph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for (skip, e) in g.edges().iter().enumerate() {
        let Some((a, b)) = e.vertices() else { continue };
        if a == b {
            return Some(1);
        }
        let mut dist = vec![usize::MAX; n];
        dist[a] = 0;
        let mut queue = std::collections::VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            for (id, f) in g.edges().iter().enumerate() {
                if id == skip {
                    continue;
                }
                let Some((p, q)) = f.vertices() else { continue };
                let y = if p == x { q } else if q == x { p } else { continue };
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[b] != usize::MAX {
            let len = dist[b] + 1;
            best = Some(best.map_or(len, |c| c.min(len)));
        }
    }
    best
}

/// Connected after deleting any single edge.
pub fn brute_bridgeless(g: &CubicGraph) -> bool {
    (0..g.edge_count()).all(|e| g.delete_edge(e).unwrap().is_connected())
}

/// Uniform pairing of 3n half-edges, retried until the result is simple,
/// connected and bridgeless.
pub fn random_bridgeless_cubic(n: usize, rng: &mut StdRng) -> CubicGraph {
    assert!(n >= 4 && n.is_multiple_of(2));
    loop {
        let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
        points.shuffle(rng);
        let pairs: Vec<(usize, usize)> = points.chunks(2).map(|c| (c[0], c[1])).collect();
        let g = CubicGraph::from_pairs(n, &pairs).unwrap();
        if g.is_simple() && g.is_connected() && brute_bridgeless(&g) {
            return g;
        }
    }
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}
