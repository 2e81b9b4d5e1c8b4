//! Named constructions.

use std::fmt;
use std::str::FromStr;

use crate::criticality::is_snark;
use crate::error::{Error, Result};
use crate::graph::CubicGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Named {
    /// Two vertices joined by an edge, with a loop at each.
    Dumbbell,
    Petersen,
    /// Two vertices joined by three parallel edges.
    Theta,
    K4,
    /// Flower snark J_k, odd k >= 5.
    Flower(usize),
    Blanusa1,
    Blanusa2,
}

impl FromStr for Named {
    type Err = Error;

    /// Accepts `dumbbell`, `petersen`, `theta`, `k4`, `blanusa1`,
    /// `blanusa2` and flower snarks as `flower5`, `flower(5)`, `flower-5`
    /// or `j5`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let named = match lower.as_str() {
            "dumbbell" => Named::Dumbbell,
            "petersen" => Named::Petersen,
            "theta" => Named::Theta,
            "k4" => Named::K4,
            "blanusa1" | "blanusa-1" => Named::Blanusa1,
            "blanusa2" | "blanusa-2" => Named::Blanusa2,
            other => {
                let rest = other
                    .strip_prefix("flower")
                    .or_else(|| other.strip_prefix('j'))
                    .ok_or_else(|| Error::UnknownName(s.to_string()))?;
                let digits = rest.trim_matches(|c| c == '(' || c == ')' || c == '-' || c == '_');
                let k = digits
                    .parse::<usize>()
                    .map_err(|_| Error::UnknownName(s.to_string()))?;
                Named::Flower(k)
            }
        };
        Ok(named)
    }
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Named::Dumbbell => f.write_str("dumbbell"),
            Named::Petersen => f.write_str("petersen"),
            Named::Theta => f.write_str("theta"),
            Named::K4 => f.write_str("k4"),
            Named::Flower(k) => write!(f, "flower{k}"),
            Named::Blanusa1 => f.write_str("blanusa1"),
            Named::Blanusa2 => f.write_str("blanusa2"),
        }
    }
}

// Both Blanuša snarks are dot products of two Petersen graphs; these lists
// are the two non-isomorphic products (automorphism groups of order 8 and 4).
const BLANUSA1: [(usize, usize); 27] = [
    (0, 4), (0, 5), (0, 13), (1, 2), (1, 6), (1, 12), (2, 3), (3, 4), (5, 7),
    (5, 8), (6, 8), (6, 9), (7, 2), (7, 10), (8, 3), (9, 4), (9, 14), (10, 11),
    (11, 12), (13, 15), (13, 16), (14, 16), (14, 17), (15, 10), (15, 17),
    (16, 11), (17, 12),
];

const BLANUSA2: [(usize, usize); 27] = [
    (0, 4), (0, 5), (0, 13), (1, 2), (1, 6), (1, 12), (2, 3), (3, 4), (5, 8),
    (5, 10), (6, 8), (6, 9), (7, 2), (7, 9), (7, 14), (8, 3), (9, 4), (10, 11),
    (11, 12), (13, 15), (13, 16), (14, 16), (14, 17), (15, 10), (15, 17),
    (16, 11), (17, 12),
];

pub fn make_named(name: &Named) -> Result<CubicGraph> {
    match *name {
        Named::Dumbbell => CubicGraph::from_pairs(2, &[(0, 1), (0, 0), (1, 1)]),
        Named::Theta => CubicGraph::from_pairs(2, &[(0, 1), (0, 1), (0, 1)]),
        Named::K4 => CubicGraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        Named::Petersen => {
            let mut pairs = Vec::with_capacity(15);
            for i in 0..5 {
                pairs.push((i, (i + 1) % 5));
                pairs.push((i, i + 5));
                pairs.push((5 + i, 5 + (i + 2) % 5));
            }
            CubicGraph::from_pairs(10, &pairs)
        }
        Named::Flower(k) => flower(k),
        Named::Blanusa1 => stored_snark(&BLANUSA1),
        Named::Blanusa2 => stored_snark(&BLANUSA2),
    }
}

/// J_k: for each i a claw a_i joined to b_i, c_i, d_i; the b_i form a
/// k-cycle and the c_i, d_i together form one 2k-cycle
/// c_0 .. c_{k-1} d_0 .. d_{k-1}.
fn flower(k: usize) -> Result<CubicGraph> {
    if k < 5 || k.is_multiple_of(2) {
        return Err(Error::FlowerParameter(k));
    }
    let (a, b, c, d) = (|i| 4 * i, |i| 4 * i + 1, |i| 4 * i + 2, |i| 4 * i + 3);
    let mut pairs = Vec::with_capacity(6 * k);
    for i in 0..k {
        let j = (i + 1) % k;
        pairs.push((a(i), b(i)));
        pairs.push((a(i), c(i)));
        pairs.push((a(i), d(i)));
        pairs.push((b(i), b(j)));
        if j == 0 {
            pairs.push((c(i), d(0)));
            pairs.push((d(i), c(0)));
        } else {
            pairs.push((c(i), c(j)));
            pairs.push((d(i), d(j)));
        }
    }
    CubicGraph::from_pairs(4 * k, &pairs)
}

fn stored_snark(pairs: &[(usize, usize)]) -> Result<CubicGraph> {
    let n = pairs.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
    let g = CubicGraph::from_pairs(n, pairs)?;
    if !g.is_cubic() || !is_snark(&g)? {
        return Err(Error::Inconsistent(
            "stored snark adjacency failed its self-check".into(),
        ));
    }
    Ok(g)
}
