//! Criticality of snarks along two independent routes.
//!
//! The colouring route asks whether `G - {u,v}` is 3-edge-colourable; the
//! flow route asks whether `G/{u,v}` carries a nowhere-zero Z4-flow. For a
//! snark these agree pair by pair, together with the flow statements on
//! `G - {u,v}`, `G - e`, `G/e` and colourability of `G ~ e` when `u` and `v`
//! are joined by `e`. Everything here evaluates those statements separately
//! and checks the agreement instead of assuming it.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{chromatic_index_is_4, three_edge_colorable, EdgeColoring};
use crate::error::{Error, Result};
use crate::flows::{flow_on_identification, nowhere_zero_flow, verify_kirchhoff, FlowAssignment, Group};
use crate::graph::{CubicGraph, EdgeId, VertexPair};
use crate::structure;

/// Why a graph is not a snark.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NotSnark {
    NotCubic,
    Disconnected,
    Colorable,
}

impl fmt::Display for NotSnark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotSnark::NotCubic => "not cubic",
            NotSnark::Disconnected => "not connected",
            NotSnark::Colorable => "3-edge-colourable",
        })
    }
}

/// `Ok(None)` for a snark, `Ok(Some(reason))` otherwise. An uncolourable
/// graph is cross-checked for the absence of a Z4-flow; a colourable one
/// has a flow by construction.
pub fn snark_verdict(g: &CubicGraph) -> Result<Option<NotSnark>> {
    if !g.is_cubic() {
        return Ok(Some(NotSnark::NotCubic));
    }
    if !g.is_connected() {
        return Ok(Some(NotSnark::Disconnected));
    }
    if three_edge_colorable(g)?.is_some() {
        return Ok(Some(NotSnark::Colorable));
    }
    if nowhere_zero_flow(g, Group::Z4).is_some() {
        return Err(Error::Inconsistent(
            "uncolourable cubic graph has a nowhere-zero Z4-flow".into(),
        ));
    }
    Ok(None)
}

pub fn is_snark(g: &CubicGraph) -> Result<bool> {
    Ok(snark_verdict(g)?.is_none())
}

fn require_snark(g: &CubicGraph) -> Result<()> {
    match snark_verdict(g)? {
        None => Ok(()),
        Some(why) => Err(Error::NotSnark(why)),
    }
}

/// Statements (iv)-(vi) for one edge joining the pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeStatements {
    pub edge: EdgeId,
    /// `G - e` has a nowhere-zero 4-flow.
    pub deleted_has_flow: bool,
    /// `G/e` has a nowhere-zero 4-flow.
    pub contracted_has_flow: bool,
    /// `G ~ e` is 3-edge-colourable; `None` when `e` is not suppressible.
    pub suppressed_colorable: Option<bool>,
}

#[derive(Debug, Clone, Default)]
pub struct EdgeWitnesses {
    pub deleted: Option<FlowAssignment>,
    pub contracted: Option<FlowAssignment>,
    pub suppressed: Option<EdgeColoring>,
}

/// Witnesses for the statements that came out true, each on the graph the
/// statement talks about.
#[derive(Debug, Clone, Default)]
pub struct PairWitnesses {
    pub removed_coloring: Option<EdgeColoring>,
    pub removed_flow: Option<FlowAssignment>,
    pub identified_flow: Option<FlowAssignment>,
    pub per_edge: Vec<EdgeWitnesses>,
}

#[derive(Debug, Clone)]
pub struct PairReport {
    pub pair: VertexPair,
    pub adjacent: bool,
    /// (i) `G - {u,v}` is 3-edge-colourable.
    pub removed_colorable: bool,
    /// (ii) `G - {u,v}` has a nowhere-zero 4-flow.
    pub removed_has_flow: bool,
    /// (iii) `G/{u,v}` has a nowhere-zero 4-flow.
    pub identified_has_flow: bool,
    /// (iv)-(vi), conjunctions over the joining edges; `None` for
    /// non-adjacent pairs (and for (vi) when no joining edge is suppressible).
    pub deleted_has_flow: Option<bool>,
    pub contracted_has_flow: Option<bool>,
    pub suppressed_colorable: Option<bool>,
    pub per_edge: Vec<EdgeStatements>,
    /// The pair hit the deletion convention for loops at `u` or `v`, or a
    /// joining edge could not be suppressed.
    pub degenerate: bool,
    pub witnesses: PairWitnesses,
}

impl PairReport {
    /// Statements (i)-(vi) in order, `None` where not applicable.
    pub fn statements(&self) -> [Option<bool>; 6] {
        [
            Some(self.removed_colorable),
            Some(self.removed_has_flow),
            Some(self.identified_has_flow),
            self.deleted_has_flow,
            self.contracted_has_flow,
            self.suppressed_colorable,
        ]
    }

    /// All present statements agree.
    pub fn consistent(&self) -> bool {
        let mut present = self.statements().into_iter().flatten();
        let first = present.next().expect("statement (i) is always present");
        present.all(|x| x == first)
    }
}

fn check_coloring(g: &CubicGraph, c: &EdgeColoring) -> Result<()> {
    if c.is_proper(g) {
        Ok(())
    } else {
        Err(Error::Inconsistent("solver returned an improper colouring".into()))
    }
}

fn check_flow(g: &CubicGraph, f: &FlowAssignment) -> Result<()> {
    if f.is_nowhere_zero() && verify_kirchhoff(g, f)? {
        Ok(())
    } else {
        Err(Error::Inconsistent("solver returned an invalid flow".into()))
    }
}

fn colorable(g: &CubicGraph) -> Result<Option<EdgeColoring>> {
    let c = three_edge_colorable(g)?;
    if let Some(c) = &c {
        check_coloring(g, c)?;
    }
    Ok(c)
}

fn z4_flow(g: &CubicGraph) -> Result<Option<FlowAssignment>> {
    let f = nowhere_zero_flow(g, Group::Z4);
    if let Some(f) = &f {
        check_flow(g, f)?;
    }
    Ok(f)
}

/// Evaluates every applicable statement for `p`; `g` must be a snark.
pub fn pair_status(g: &CubicGraph, p: VertexPair) -> Result<PairReport> {
    require_snark(g)?;
    evaluate_pair(g, p)
}

fn evaluate_pair(g: &CubicGraph, p: VertexPair) -> Result<PairReport> {
    let removed = g.remove_vertex_pair(p)?;
    let identified = g.identify_vertices(p)?;
    let s1 = colorable(&removed)?;
    let s2 = z4_flow(&removed)?;
    let s3 = z4_flow(&identified)?;

    let mut degenerate = g.has_loop_at(p.u()) || g.has_loop_at(p.v());
    let joining = p.connecting_edges(g);
    let mut per_edge = Vec::with_capacity(joining.len());
    let mut edge_witnesses = Vec::with_capacity(joining.len());
    for &e in &joining {
        let deleted = z4_flow(&g.delete_edge(e)?)?;
        let contracted = z4_flow(&g.contract_edge(e)?)?;
        let suppressed = match g.suppress_edge(e) {
            Ok(h) => Some(colorable(&h)?),
            Err(Error::NonSuppressible { .. }) => {
                degenerate = true;
                None
            }
            Err(other) => return Err(other),
        };
        per_edge.push(EdgeStatements {
            edge: e,
            deleted_has_flow: deleted.is_some(),
            contracted_has_flow: contracted.is_some(),
            suppressed_colorable: suppressed.as_ref().map(Option::is_some),
        });
        edge_witnesses.push(EdgeWitnesses {
            deleted,
            contracted,
            suppressed: suppressed.flatten(),
        });
    }

    let adjacent = !joining.is_empty();
    let all = |f: fn(&EdgeStatements) -> bool| adjacent.then(|| per_edge.iter().all(f));
    let suppressed_colorable = {
        let known: Vec<bool> = per_edge.iter().filter_map(|s| s.suppressed_colorable).collect();
        (!known.is_empty()).then(|| known.iter().all(|&x| x))
    };
    Ok(PairReport {
        pair: p,
        adjacent,
        removed_colorable: s1.is_some(),
        removed_has_flow: s2.is_some(),
        identified_has_flow: s3.is_some(),
        deleted_has_flow: all(|s| s.deleted_has_flow),
        contracted_has_flow: all(|s| s.contracted_has_flow),
        suppressed_colorable,
        per_edge,
        degenerate,
        witnesses: PairWitnesses {
            removed_coloring: s1,
            removed_flow: s2,
            identified_flow: s3,
            per_edge: edge_witnesses,
        },
    })
}

/// Colouring route: `G - {u,v}` colourable for every pair given.
fn coloring_route(g: &CubicGraph, pairs: impl Iterator<Item = VertexPair>) -> Result<bool> {
    for p in pairs {
        if three_edge_colorable(&g.remove_vertex_pair(p)?)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Flow route: `G/{u,v}` has a nowhere-zero Z4-flow for every pair given.
fn flow_route(g: &CubicGraph, pairs: impl Iterator<Item = VertexPair>) -> Result<bool> {
    for p in pairs {
        if flow_on_identification(g, p, Group::Z4)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn non_adjacent(g: &CubicGraph) -> impl Iterator<Item = VertexPair> + '_ {
    VertexPair::all(g).filter(move |p| !p.is_adjacent(g))
}

/// `G - {u,v}` is 3-edge-colourable for every adjacent pair.
pub fn is_critical(g: &CubicGraph) -> Result<bool> {
    require_snark(g)?;
    coloring_route(g, VertexPair::adjacent(g))
}

/// `G - {u,v}` is 3-edge-colourable for every pair of distinct vertices.
pub fn is_bicritical(g: &CubicGraph) -> Result<bool> {
    require_snark(g)?;
    coloring_route(g, VertexPair::all(g))
}

/// Critical but not bicritical.
pub fn is_strictly_critical(g: &CubicGraph) -> Result<bool> {
    Ok(is_critical(g)? && !is_bicritical(g)?)
}

/// `G/{u,v}` has a nowhere-zero 4-flow for every adjacent pair. Uses only
/// the flow solver.
pub fn is_4_edge_critical(g: &CubicGraph) -> Result<bool> {
    require_snark(g)?;
    flow_route(g, VertexPair::adjacent(g))
}

/// `G/{u,v}` has a nowhere-zero 4-flow for every pair of distinct vertices.
pub fn is_4_vertex_critical(g: &CubicGraph) -> Result<bool> {
    require_snark(g)?;
    flow_route(g, VertexPair::all(g))
}

/// 5-irreducibility coincides with criticality; no reductions are computed.
pub fn is_5_irreducible(g: &CubicGraph) -> Result<bool> {
    is_critical(g)
}

/// 6-irreducibility coincides with criticality.
pub fn is_6_irreducible(g: &CubicGraph) -> Result<bool> {
    is_critical(g)
}

/// 7-irreducibility coincides with bicriticality.
pub fn is_7_irreducible(g: &CubicGraph) -> Result<bool> {
    is_bicritical(g)
}

/// Irreducibility coincides with bicriticality.
pub fn is_irreducible(g: &CubicGraph) -> Result<bool> {
    is_bicritical(g)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrongReport {
    /// Every suppressible `G ~ e` is a snark.
    pub by_suppression: bool,
    /// `G - {u,v}` has chromatic index 4 for every adjacent pair.
    pub by_pairs: bool,
    /// Edges that could not be suppressed; their verdict came from the
    /// adjacent-pair test on their ends.
    pub non_suppressible: Vec<EdgeId>,
}

impl StrongReport {
    pub fn agree(&self) -> bool {
        self.by_suppression == self.by_pairs
    }

    pub fn is_strong(&self) -> bool {
        self.by_pairs
    }
}

/// Strength decided both through `G ~ e` and through adjacent vertex pairs.
pub fn is_strong(g: &CubicGraph) -> Result<StrongReport> {
    require_snark(g)?;
    strong_unchecked(g)
}

fn strong_unchecked(g: &CubicGraph) -> Result<StrongReport> {
    let mut non_suppressible = Vec::new();
    let mut by_suppression = true;
    for (e, edge) in g.edges().iter().enumerate() {
        if edge.is_loop() {
            continue;
        }
        let snark = match g.suppress_edge(e) {
            Ok(h) => is_snark(&h)?,
            Err(Error::NonSuppressible { .. }) => {
                non_suppressible.push(e);
                let (u, v) = edge.vertices().expect("cubic graphs have no dangling edges");
                chromatic_index_is_4(&g.remove_vertex_pair(VertexPair::new(u, v)?)?)?
            }
            Err(other) => return Err(other),
        };
        if !snark {
            by_suppression = false;
            break;
        }
    }
    let mut by_pairs = true;
    for p in VertexPair::adjacent(g) {
        if !chromatic_index_is_4(&g.remove_vertex_pair(p)?)? {
            by_pairs = false;
            break;
        }
    }
    Ok(StrongReport {
        by_suppression,
        by_pairs,
        non_suppressible,
    })
}

/// Per-pair outcome of the local check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairSummary {
    pub u: usize,
    pub v: usize,
    pub adjacent: bool,
    pub statements: [Option<bool>; 6],
    pub consistent: bool,
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalCertificate {
    pub pairs: Vec<PairSummary>,
}

impl LocalCertificate {
    pub fn consistent(&self) -> bool {
        self.pairs.iter().all(|p| p.consistent)
    }

    pub fn violations(&self) -> impl Iterator<Item = &PairSummary> {
        self.pairs.iter().filter(|p| !p.consistent)
    }

    pub fn degenerate(&self) -> bool {
        self.pairs.iter().any(|p| p.degenerate)
    }
}

/// Runs [`pair_status`] on every unordered pair, without stopping early.
/// Pairs are evaluated in parallel on the current rayon pool and reported in
/// lexicographic order.
pub fn verify_theorem_local(g: &CubicGraph) -> Result<LocalCertificate> {
    require_snark(g)?;
    let pairs: Vec<VertexPair> = VertexPair::all(g).collect();
    let pairs = pairs
        .into_par_iter()
        .map(|p| {
            let r = evaluate_pair(g, p)?;
            Ok(PairSummary {
                u: p.u(),
                v: p.v(),
                adjacent: r.adjacent,
                statements: r.statements(),
                consistent: r.consistent(),
                degenerate: r.degenerate,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LocalCertificate { pairs })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoincidenceCertificate {
    pub critical: bool,
    pub four_edge_critical: bool,
    pub bicritical: bool,
    pub four_vertex_critical: bool,
    #[serde(skip)]
    pub coloring_path: Duration,
    #[serde(skip)]
    pub flow_path: Duration,
}

impl CoincidenceCertificate {
    pub fn holds(&self) -> bool {
        self.critical == self.four_edge_critical && self.bicritical == self.four_vertex_critical
    }
}

/// Decides criticality and bicriticality by colouring and the flow-critical
/// counterparts by flows, timing each route.
pub fn verify_classifier_coincidence(g: &CubicGraph) -> Result<CoincidenceCertificate> {
    require_snark(g)?;
    coincidence_unchecked(g)
}

fn coincidence_unchecked(g: &CubicGraph) -> Result<CoincidenceCertificate> {
    let start = Instant::now();
    let critical = coloring_route(g, VertexPair::adjacent(g))?;
    let bicritical = critical && coloring_route(g, non_adjacent(g))?;
    let coloring_path = start.elapsed();

    let start = Instant::now();
    let four_edge_critical = flow_route(g, VertexPair::adjacent(g))?;
    let four_vertex_critical = four_edge_critical && flow_route(g, non_adjacent(g))?;
    let flow_path = start.elapsed();

    Ok(CoincidenceCertificate {
        critical,
        four_edge_critical,
        bicritical,
        four_vertex_critical,
        coloring_path,
        flow_path,
    })
}

/// Per-graph verdicts. Criticality fields are `None` for non-snarks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    pub graph_index: usize,
    pub order: usize,
    pub is_snark: bool,
    pub girth: Option<usize>,
    pub cyclic_edge_connectivity: Option<usize>,
    pub is_critical: Option<bool>,
    pub is_bicritical: Option<bool>,
    pub is_strictly_critical: Option<bool>,
    pub is_4_edge_critical: Option<bool>,
    pub is_4_vertex_critical: Option<bool>,
    pub is_strong: Option<bool>,
    pub coloring_path_micros: Option<u64>,
    pub flow_path_micros: Option<u64>,
}

impl ClassificationRecord {
    /// Same record with the timing columns blanked.
    pub fn without_timings(mut self) -> Self {
        self.coloring_path_micros = None;
        self.flow_path_micros = None;
        self
    }
}

/// Full classification of one graph. Fails with [`Error::Inconsistent`]
/// when the two routes to strength disagree.
pub fn classify(g: &CubicGraph, graph_index: usize) -> Result<ClassificationRecord> {
    let snark = is_snark(g)?;
    let girth = structure::girth(g);
    let cyclic_edge_connectivity = if g.is_cubic() && g.is_connected() {
        structure::cyclic_edge_connectivity(g)?
    } else {
        None
    };
    let mut record = ClassificationRecord {
        graph_index,
        order: g.vertex_count(),
        is_snark: snark,
        girth,
        cyclic_edge_connectivity,
        is_critical: None,
        is_bicritical: None,
        is_strictly_critical: None,
        is_4_edge_critical: None,
        is_4_vertex_critical: None,
        is_strong: None,
        coloring_path_micros: None,
        flow_path_micros: None,
    };
    if !snark {
        return Ok(record);
    }
    let c = coincidence_unchecked(g)?;
    let strong = strong_unchecked(g)?;
    if !strong.agree() {
        return Err(Error::Inconsistent(format!(
            "graph {graph_index}: strength by suppression {} but by pairs {}",
            strong.by_suppression, strong.by_pairs
        )));
    }
    record.is_critical = Some(c.critical);
    record.is_bicritical = Some(c.bicritical);
    record.is_strictly_critical = Some(c.critical && !c.bicritical);
    record.is_4_edge_critical = Some(c.four_edge_critical);
    record.is_4_vertex_critical = Some(c.four_vertex_critical);
    record.is_strong = Some(strong.is_strong());
    record.coloring_path_micros = Some(c.coloring_path.as_micros() as u64);
    record.flow_path_micros = Some(c.flow_path.as_micros() as u64);
    Ok(record)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::named::{make_named, Named};

    fn named(n: Named) -> CubicGraph {
        make_named(&n).unwrap()
    }

    #[test]
    fn snark_verdicts() {
        assert_eq!(snark_verdict(&named(Named::Petersen)).unwrap(), None);
        assert_eq!(snark_verdict(&named(Named::Dumbbell)).unwrap(), None);
        assert_eq!(snark_verdict(&named(Named::K4)).unwrap(), Some(NotSnark::Colorable));
        assert_eq!(snark_verdict(&named(Named::Theta)).unwrap(), Some(NotSnark::Colorable));
        let path = CubicGraph::from_pairs(2, &[(0, 1)]).unwrap();
        assert_eq!(snark_verdict(&path).unwrap(), Some(NotSnark::NotCubic));
        let two = CubicGraph::from_pairs(4, &[(0, 1), (0, 0), (1, 1), (2, 3), (2, 2), (3, 3)]).unwrap();
        assert_eq!(snark_verdict(&two).unwrap(), Some(NotSnark::Disconnected));
    }

    #[test]
    fn petersen_pairs_all_true() {
        let g = named(Named::Petersen);
        let adj = VertexPair::adjacent(&g).next().unwrap();
        let r = pair_status(&g, adj).unwrap();
        assert!(r.adjacent);
        assert_eq!(r.statements(), [Some(true); 6]);
        assert!(r.consistent());
        assert!(!r.degenerate);

        let far = non_adjacent(&g).next().unwrap();
        let r = pair_status(&g, far).unwrap();
        assert_eq!(
            r.statements(),
            [Some(true), Some(true), Some(true), None, None, None]
        );
    }

    #[test]
    fn witnesses_are_valid() {
        let g = named(Named::Petersen);
        let p = VertexPair::new(0, 1).unwrap();
        let r = pair_status(&g, p).unwrap();
        let removed = g.remove_vertex_pair(p).unwrap();
        assert!(r.witnesses.removed_coloring.as_ref().unwrap().is_proper(&removed));
        let f = r.witnesses.removed_flow.as_ref().unwrap();
        assert!(verify_kirchhoff(&removed, f).unwrap());
        let identified = g.identify_vertices(p).unwrap();
        assert!(verify_kirchhoff(&identified, r.witnesses.identified_flow.as_ref().unwrap()).unwrap());
        let w = &r.witnesses.per_edge[0];
        let e = r.per_edge[0].edge;
        assert!(w.suppressed.as_ref().unwrap().is_proper(&g.suppress_edge(e).unwrap()));
    }

    #[test]
    fn pair_status_refuses_non_snarks() {
        let g = named(Named::K4);
        assert_eq!(
            pair_status(&g, VertexPair::new(0, 1).unwrap()).unwrap_err(),
            Error::NotSnark(NotSnark::Colorable)
        );
        assert!(matches!(is_critical(&g), Err(Error::NotSnark(_))));
        assert!(matches!(is_4_vertex_critical(&g), Err(Error::NotSnark(_))));
    }

    #[test]
    fn petersen_classifiers() {
        let g = named(Named::Petersen);
        assert!(is_critical(&g).unwrap());
        assert!(is_bicritical(&g).unwrap());
        assert!(!is_strictly_critical(&g).unwrap());
        assert!(is_4_edge_critical(&g).unwrap());
        assert!(is_4_vertex_critical(&g).unwrap());
        assert!(is_irreducible(&g).unwrap());
        let s = is_strong(&g).unwrap();
        assert!(s.agree());
        assert!(!s.is_strong());
    }

    #[test]
    fn triangle_expanded_petersen_is_not_critical() {
        let g = named(Named::Petersen).expand_triangle(0).unwrap();
        assert!(is_snark(&g).unwrap());
        assert!(!is_critical(&g).unwrap());
        assert!(!is_4_edge_critical(&g).unwrap());
        assert!(!is_bicritical(&g).unwrap());
        assert!(!is_4_vertex_critical(&g).unwrap());
        assert!(is_strong(&g).unwrap().agree());
    }

    #[test]
    fn dumbbell_under_the_deletion_convention() {
        let g = named(Named::Dumbbell);
        let r = pair_status(&g, VertexPair::new(0, 1).unwrap()).unwrap();
        assert!(r.degenerate);
        assert_eq!(
            r.statements(),
            [Some(true), Some(true), Some(true), Some(true), Some(true), None]
        );
        let cert = verify_theorem_local(&g).unwrap();
        assert!(cert.consistent());
        assert!(cert.degenerate());
        let s = is_strong(&g).unwrap();
        assert_eq!(s.non_suppressible, vec![0]);
        assert!(s.agree());
        assert!(!s.is_strong());
    }

    #[test]
    fn petersen_local_certificate() {
        let cert = verify_theorem_local(&named(Named::Petersen)).unwrap();
        assert_eq!(cert.pairs.len(), 45);
        assert!(cert.consistent());
        assert_eq!(cert.pairs.iter().filter(|p| p.adjacent).count(), 15);
    }

    #[test]
    fn petersen_record() {
        let r = classify(&named(Named::Petersen), 0).unwrap();
        assert!(r.is_snark);
        assert_eq!(r.girth, Some(5));
        assert_eq!(r.cyclic_edge_connectivity, Some(5));
        assert_eq!(r.is_bicritical, Some(true));
        assert_eq!(r.is_strictly_critical, Some(false));
        assert_eq!(r.is_strong, Some(false));
        assert!(r.coloring_path_micros.is_some());

        let k4 = classify(&named(Named::K4), 3).unwrap();
        assert!(!k4.is_snark);
        assert_eq!(k4.is_critical, None);
        assert_eq!(k4.graph_index, 3);
    }
}
