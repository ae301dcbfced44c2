//! Hedges and SC-hedges: graphical certificates of non-identifiability.
//!
//! A hedge for (X, Y) is a nested pair of R-rooted C-forests, the outer one
//! touching X and the inner one avoiding it, with R contained in the
//! ancestors of Y after removing X's outgoing edges. Hedges alone are too
//! weak for C-DMGs: a cycle through X and Y also ruins identifiability. The
//! SC-projection materialises that obstruction by adding a bidirected edge
//! between every distinct pair of clusters sharing a strongly connected
//! component; a hedge in the projection is an SC-hedge.

use crate::graph::{GraphError, MixedGraph, VertexId, VertexSet};
use crate::mutilation::mutilate;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HedgeError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("sets must be disjoint and nonempty (problem: {0})")]
    BadQuery(String),
}

/// Maximal sets of vertices connected by bidirected edges; isolated vertices
/// are singleton components. Self-loops are inert.
pub fn c_components(g: &MixedGraph) -> Vec<VertexSet> {
    let mut assigned: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut comps: Vec<VertexSet> = Vec::new();
    for start in g.vertices() {
        if assigned.contains_key(start) {
            continue;
        }
        let id = comps.len();
        let mut comp = VertexSet::new();
        let mut stack = vec![start.clone()];
        while let Some(x) = stack.pop() {
            if !comp.insert(x.clone()) {
                continue;
            }
            assigned.insert(x.clone(), id);
            for (a, b) in g.bidirected_edges() {
                if a == b {
                    continue;
                }
                if a == &x && !comp.contains(b) {
                    stack.push(b.clone());
                }
                if b == &x && !comp.contains(a) {
                    stack.push(a.clone());
                }
            }
        }
        comps.push(comp);
    }
    comps
}

fn bidirected_connected(g: &MixedGraph, over: &VertexSet) -> bool {
    if over.is_empty() {
        return false;
    }
    let induced = g.induced(over);
    let comps = c_components(&induced);
    comps.len() == 1
}

/// An R-rooted C-forest: an acyclic single-C-component subgraph in which
/// every vertex has at most one child; the childless vertices are the roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CForest {
    pub subgraph: MixedGraph,
    pub roots: VertexSet,
}

impl CForest {
    /// Checks the C-forest conditions and that `roots` is exactly the set of
    /// childless vertices.
    pub fn validate(&self) -> Result<(), String> {
        if !is_c_forest(&self.subgraph) {
            return Err("subgraph is not a C-forest".into());
        }
        let computed = forest_roots(&self.subgraph);
        if computed != self.roots {
            return Err(format!("declared roots {:?} differ from computed {:?}", self.roots, computed));
        }
        Ok(())
    }

    pub fn vertices(&self) -> &VertexSet {
        self.subgraph.vertex_set()
    }
}

/// Vertices without directed children.
pub fn forest_roots(g: &MixedGraph) -> VertexSet {
    g.vertices()
        .filter(|x| !g.directed_edges().any(|(t, _)| &t == x))
        .cloned()
        .collect()
}

/// True iff `g_sub` is acyclic, every vertex has at most one directed child,
/// and the bidirected edges form a single C-component spanning all vertices.
pub fn is_c_forest(g_sub: &MixedGraph) -> bool {
    if g_sub.vertex_count() == 0 {
        return false;
    }
    for (t, h) in g_sub.directed_edges() {
        if t == h {
            return false;
        }
    }
    for x in g_sub.vertices() {
        let child_count = g_sub.directed_edges().filter(|(t, _)| t == x).count();
        if child_count > 1 {
            return false;
        }
    }
    // Out-degree <= 1 and no self-loops: a directed cycle would make every
    // vertex on it have exactly one child, so plain cycle detection applies.
    let mut probe = g_sub.clone();
    let loops: Vec<(VertexId, VertexId)> = probe
        .bidirected_edges()
        .filter(|(a, b)| a == b)
        .cloned()
        .collect();
    for (a, b) in loops {
        probe.remove_bidirected(&a, &b);
    }
    if probe.validate_admg().is_err() {
        return false;
    }
    bidirected_connected(g_sub, g_sub.vertex_set())
}

/// The SC-projection with the added edges recorded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScProjection {
    pub graph: MixedGraph,
    /// Bidirected edges not present in the input, one per distinct pair of
    /// vertices sharing a strongly connected component.
    pub added: BTreeSet<(VertexId, VertexId)>,
}

/// Adds a bidirected edge between every distinct pair of vertices in a
/// common strongly connected component.
pub fn sc_projection_detailed(g: &MixedGraph) -> ScProjection {
    let mut out = g.clone();
    let mut added = BTreeSet::new();
    let vertices: Vec<VertexId> = g.vertex_set().iter().cloned().collect();
    let sccs: BTreeMap<VertexId, VertexSet> = vertices
        .iter()
        .map(|x| (x.clone(), g.scc(x).expect("vertex of g")))
        .collect();
    for (i, a) in vertices.iter().enumerate() {
        for b in vertices.iter().skip(i + 1) {
            if sccs[a].contains(b) && !g.has_bidirected(a, b) {
                out.add_bidirected(a.clone(), b.clone()).expect("new edge");
                added.insert((a.clone(), b.clone()));
            }
        }
    }
    ScProjection { graph: out, added }
}

/// The SC-projection graph alone.
pub fn sc_projection(g: &MixedGraph) -> MixedGraph {
    sc_projection_detailed(g).graph
}

/// A pair of nested R-rooted C-forests witnessing non-identifiability of
/// P(y | do(x)).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HedgeCertificate {
    pub f: CForest,
    pub f_prime: CForest,
    pub roots: VertexSet,
    pub x: VertexSet,
    pub y: VertexSet,
    /// Bidirected edges of the certificate introduced by the SC-projection;
    /// empty for a plain hedge.
    pub projection_edges_used: BTreeSet<(VertexId, VertexId)>,
}

impl HedgeCertificate {
    /// Structured text report for CLI output.
    pub fn report(&self) -> String {
        let list = |s: &VertexSet| {
            s.iter().map(|v| v.as_str().to_string()).collect::<Vec<_>>().join(", ")
        };
        let edges = |g: &MixedGraph| {
            let mut lines: Vec<String> = g
                .directed_edges()
                .map(|(t, h)| format!("    {t} -> {h}"))
                .collect();
            lines.extend(g.bidirected_edges().map(|(a, b)| format!("    {a} <-> {b}")));
            if lines.is_empty() {
                "    (no edges)".to_string()
            } else {
                lines.join("\n")
            }
        };
        let mut s = String::new();
        s.push_str(&format!("SC-hedge for do({}) on ({}):\n", list(&self.x), list(&self.y)));
        s.push_str(&format!("  roots R = {{{}}}\n", list(&self.roots)));
        s.push_str(&format!("  F  vertices: {{{}}}\n{}\n", list(self.f.vertices()), edges(&self.f.subgraph)));
        s.push_str(&format!(
            "  F' vertices: {{{}}}\n{}\n",
            list(self.f_prime.vertices()),
            edges(&self.f_prime.subgraph)
        ));
        if self.projection_edges_used.is_empty() {
            s.push_str("  projection edges used: none\n");
        } else {
            let e: Vec<String> = self
                .projection_edges_used
                .iter()
                .map(|(a, b)| format!("{a} <-> {b}"))
                .collect();
            s.push_str(&format!("  projection edges used: {}\n", e.join(", ")));
        }
        s
    }
}

/// Independent checker: re-verifies every hedge condition from scratch.
pub fn verify_hedge_certificate(host: &MixedGraph, cert: &HedgeCertificate) -> Result<(), String> {
    if cert.x.is_empty() || cert.y.is_empty() {
        return Err("x and y must be nonempty".into());
    }
    if cert.x.intersection(&cert.y).next().is_some() {
        return Err("x and y overlap".into());
    }
    if !cert.f.subgraph.is_subgraph_of(host) {
        return Err("F is not a subgraph of the host".into());
    }
    if !cert.f_prime.subgraph.is_subgraph_of(&cert.f.subgraph) {
        return Err("F' is not a subgraph of F".into());
    }
    cert.f.validate().map_err(|e| format!("F: {e}"))?;
    cert.f_prime.validate().map_err(|e| format!("F': {e}"))?;
    if cert.f.roots != cert.roots || cert.f_prime.roots != cert.roots {
        return Err("F and F' must both be rooted exactly at R".into());
    }
    if cert.x.intersection(cert.f.vertices()).next().is_none() {
        return Err("F does not touch X".into());
    }
    if cert.x.intersection(cert.f_prime.vertices()).next().is_some() {
        return Err("F' touches X".into());
    }
    let underlined = mutilate(host, &VertexSet::new(), &cert.x).map_err(|e| e.to_string())?;
    let an_y = underlined.ancestors(&cert.y).map_err(|e| e.to_string())?;
    if !cert.roots.is_subset(&an_y) {
        return Err("roots are not ancestors of Y in the outgoing-X mutilation".into());
    }
    Ok(())
}

/// Subsets of `pool` in (size, lexicographic) order.
fn subsets_ascending(pool: &VertexSet) -> Vec<VertexSet> {
    let items: Vec<VertexId> = pool.iter().cloned().collect();
    let mut all: Vec<VertexSet> = Vec::with_capacity(1 << items.len());
    for mask in 0u32..(1 << items.len()) {
        let set: VertexSet = items
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, v)| v.clone())
            .collect();
        all.push(set);
    }
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| {
        let av: Vec<&VertexId> = a.iter().collect();
        let bv: Vec<&VertexId> = b.iter().collect();
        av.cmp(&bv)
    }));
    all
}

/// Enumerates every directed-forest structure on `s_f` rooted exactly at
/// `roots`: each non-root picks one out-neighbour inside `s_f`, roots stay
/// childless, and the chosen edges are acyclic.
fn enumerate_forest_assignments(
    g: &MixedGraph,
    s_f: &VertexSet,
    roots: &VertexSet,
) -> Vec<BTreeMap<VertexId, VertexId>> {
    let non_roots: Vec<VertexId> = s_f.difference(roots).cloned().collect();
    let mut choices: Vec<(VertexId, Vec<VertexId>)> = Vec::new();
    for v_id in &non_roots {
        let targets: Vec<VertexId> = g
            .directed_edges()
            .filter(|(t, h)| t == v_id && h != v_id && s_f.contains(h))
            .map(|(_, h)| h.clone())
            .collect();
        if targets.is_empty() {
            return Vec::new();
        }
        choices.push((v_id.clone(), targets));
    }

    fn acyclic(assign: &BTreeMap<VertexId, VertexId>) -> bool {
        for start in assign.keys() {
            let mut seen = VertexSet::new();
            let mut cur = start;
            while let Some(next) = assign.get(cur) {
                if !seen.insert(cur.clone()) {
                    return false;
                }
                cur = next;
            }
        }
        true
    }

    let mut out = Vec::new();
    let mut current: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    fn rec(
        choices: &[(VertexId, Vec<VertexId>)],
        idx: usize,
        current: &mut BTreeMap<VertexId, VertexId>,
        out: &mut Vec<BTreeMap<VertexId, VertexId>>,
        acyclic: &dyn Fn(&BTreeMap<VertexId, VertexId>) -> bool,
    ) {
        if idx == choices.len() {
            if acyclic(current) {
                out.push(current.clone());
            }
            return;
        }
        let (v_id, targets) = &choices[idx];
        for t in targets {
            current.insert(v_id.clone(), t.clone());
            rec(choices, idx + 1, current, out, acyclic);
        }
        current.remove(v_id);
    }
    rec(&choices, 0, &mut current, &mut out, &acyclic);
    out
}

fn chain_to_root(
    assign: &BTreeMap<VertexId, VertexId>,
    start: &VertexId,
) -> Vec<VertexId> {
    let mut chain = vec![start.clone()];
    let mut cur = start;
    while let Some(next) = assign.get(cur) {
        chain.push(next.clone());
        cur = next;
    }
    chain
}

fn forest_graph(
    g: &MixedGraph,
    s_f: &VertexSet,
    assign: &BTreeMap<VertexId, VertexId>,
) -> MixedGraph {
    let mut f = MixedGraph::new();
    for v_id in s_f {
        f.add_vertex(v_id.clone()).expect("fresh vertex");
    }
    for (t, h) in assign {
        f.add_directed(t.clone(), h.clone()).expect("assigned edge");
    }
    for (a, b) in g.bidirected_edges() {
        if a != b && s_f.contains(a) && s_f.contains(b) {
            f.add_bidirected(a.clone(), b.clone()).expect("induced edge");
        }
    }
    f
}

/// Exhaustive hedge search in `g` for the pair (x, y), smallest root sets
/// first; the first certificate in canonical order is returned.
pub fn find_hedge(
    g: &MixedGraph,
    x: &VertexSet,
    y: &VertexSet,
) -> Result<Option<HedgeCertificate>, HedgeError> {
    g.check_subset(x)?;
    g.check_subset(y)?;
    if x.is_empty() || y.is_empty() {
        return Err(HedgeError::BadQuery("x and y must be nonempty".into()));
    }
    if let Some(shared) = x.intersection(y).next() {
        return Err(HedgeError::BadQuery(format!("x and y share {shared}")));
    }

    let underlined = mutilate(g, &VertexSet::new(), x)?;
    let an_y = underlined.ancestors(y)?;
    let root_pool: VertexSet = an_y.difference(x).cloned().collect();
    let all_vertices = g.vertex_set().clone();

    for roots in subsets_ascending(&root_pool) {
        if roots.is_empty() {
            continue;
        }
        let extension_pool: VertexSet = all_vertices.difference(&roots).cloned().collect();
        for ext in subsets_ascending(&extension_pool) {
            let s_f: VertexSet = roots.union(&ext).cloned().collect();
            if x.intersection(&s_f).next().is_none() {
                continue;
            }
            if !bidirected_connected(g, &s_f) {
                continue;
            }
            for assign in enumerate_forest_assignments(g, &s_f, &roots) {
                if let Some(cert) =
                    try_f_prime(g, x, y, &roots, &s_f, &assign)
                {
                    return Ok(Some(cert));
                }
            }
        }
    }
    Ok(None)
}

/// Given F's structure, looks for the smallest nested F' avoiding x.
fn try_f_prime(
    g: &MixedGraph,
    x: &VertexSet,
    y: &VertexSet,
    roots: &VertexSet,
    s_f: &VertexSet,
    assign: &BTreeMap<VertexId, VertexId>,
) -> Option<HedgeCertificate> {
    // Vertices whose whole descent chain avoids x can extend F'.
    let usable: VertexSet = s_f
        .difference(roots)
        .filter(|v_id| {
            !x.contains(*v_id) && chain_to_root(assign, v_id).iter().all(|c| !x.contains(c))
        })
        .cloned()
        .collect();

    let mut seen: BTreeSet<VertexSet> = BTreeSet::new();
    for t in subsets_ascending(&usable) {
        let mut s_prime: VertexSet = roots.clone();
        for v_id in &t {
            for c in chain_to_root(assign, v_id) {
                s_prime.insert(c);
            }
        }
        if !seen.insert(s_prime.clone()) {
            continue;
        }
        if !bidirected_connected(g, &s_prime) {
            continue;
        }
        let f = forest_graph(g, s_f, assign);
        let prime_assign: BTreeMap<VertexId, VertexId> = assign
            .iter()
            .filter(|(t, _)| s_prime.contains(*t))
            .map(|(t, h)| (t.clone(), h.clone()))
            .collect();
        let f_prime = forest_graph(g, &s_prime, &prime_assign);
        let cert = HedgeCertificate {
            f: CForest { subgraph: f, roots: roots.clone() },
            f_prime: CForest { subgraph: f_prime, roots: roots.clone() },
            roots: roots.clone(),
            x: x.clone(),
            y: y.clone(),
            projection_edges_used: BTreeSet::new(),
        };
        if verify_hedge_certificate(g, &cert).is_ok() {
            return Some(cert);
        }
    }
    None
}

/// Hedge search in the SC-projection of a C-DMG, with the projection edges
/// appearing in the certificate recorded.
pub fn find_sc_hedge(
    cdmg: &MixedGraph,
    x: &VertexSet,
    y: &VertexSet,
) -> Result<Option<HedgeCertificate>, HedgeError> {
    let proj = sc_projection_detailed(cdmg);
    let mut found = find_hedge(&proj.graph, x, y)?;
    if let Some(cert) = found.as_mut() {
        cert.projection_edges_used = cert
            .f
            .subgraph
            .bidirected_edges()
            .chain(cert.f_prime.subgraph.bidirected_edges())
            .filter(|e| proj.added.contains(*e))
            .cloned()
            .collect();
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{v, vset};

    fn with_self_loops(mut g: MixedGraph, directed: &[&str], dashed: &[&str]) -> MixedGraph {
        for c in directed {
            g.add_directed(v(c), v(c)).unwrap();
        }
        for c in dashed {
            g.add_bidirected(v(c), v(c)).unwrap();
        }
        g
    }

    fn fig2a() -> MixedGraph {
        with_self_loops(
            MixedGraph::build(
                &["CW", "CX", "CY"],
                &[("CX", "CY"), ("CX", "CW"), ("CW", "CX")],
                &[],
            ),
            &["CW", "CX", "CY"],
            &["CW", "CX", "CY"],
        )
    }

    fn fig2b() -> MixedGraph {
        with_self_loops(
            MixedGraph::build(&["CW", "CX", "CY"], &[("CX", "CW"), ("CW", "CY")], &[("CX", "CY")]),
            &["CW", "CX", "CY"],
            &["CW", "CX", "CY"],
        )
    }

    fn fig3a() -> MixedGraph {
        with_self_loops(
            MixedGraph::build(&["CX", "CY"], &[("CX", "CY"), ("CY", "CX")], &[]),
            &["CX"],
            &["CX", "CY"],
        )
    }

    fn fig3b() -> MixedGraph {
        with_self_loops(
            MixedGraph::build(&["CX", "CY"], &[("CX", "CY")], &[("CX", "CY")]),
            &["CX", "CY"],
            &["CX", "CY"],
        )
    }

    fn fig3d() -> MixedGraph {
        with_self_loops(
            MixedGraph::build(
                &["CW", "CX", "CY"],
                &[("CX", "CW"), ("CW", "CX"), ("CW", "CY"), ("CY", "CW")],
                &[("CX", "CY")],
            ),
            &["CW", "CX", "CY"],
            &[],
        )
    }

    #[test]
    fn c_components_without_bidirected_are_singletons() {
        let g = MixedGraph::build(&["A", "B", "C"], &[("A", "B")], &[]);
        let comps = c_components(&g);
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn c_components_fig2b() {
        // CX <-> CY joins the two exposure clusters; CW stays alone.
        let g = fig2b();
        let comps = c_components(&g);
        assert!(comps.contains(&vset(&["CX", "CY"])));
        assert!(comps.contains(&vset(&["CW"])));
        assert_eq!(comps.len(), 2);
    }

    #[test]
    fn c_components_chain_is_transitive() {
        let g = MixedGraph::build(&["A", "B", "C"], &[], &[("A", "B"), ("B", "C")]);
        assert_eq!(c_components(&g), vec![vset(&["A", "B", "C"])]);
    }

    #[test]
    fn is_c_forest_examples() {
        let single = MixedGraph::build(&["A"], &[], &[]);
        assert!(is_c_forest(&single));
        assert_eq!(forest_roots(&single), vset(&["A"]));

        // R is not bidirected-connected to {A, B}.
        let disconnected = MixedGraph::build(&["A", "B", "R"], &[("A", "R"), ("B", "R")], &[("A", "B")]);
        assert!(!is_c_forest(&disconnected));

        let pair = MixedGraph::build(&["A", "R"], &[("A", "R")], &[("A", "R")]);
        assert!(is_c_forest(&pair));
        assert_eq!(forest_roots(&pair), vset(&["R"]));

        // Two children break the forest condition.
        let fan = MixedGraph::build(&["A", "B", "C"], &[("A", "B"), ("A", "C")], &[("A", "B"), ("A", "C")]);
        assert!(!is_c_forest(&fan));
    }

    #[test]
    fn sc_projection_fig2a_adds_one_edge() {
        let proj = sc_projection_detailed(&fig2a());
        assert_eq!(proj.added, [(v("CW"), v("CX"))].into_iter().collect());
        assert!(proj.graph.has_bidirected(&v("CW"), &v("CX")));
    }

    #[test]
    fn sc_projection_fig3d_adds_two_edges() {
        let proj = sc_projection_detailed(&fig3d());
        let expected: BTreeSet<(VertexId, VertexId)> =
            [(v("CW"), v("CX")), (v("CW"), v("CY"))].into_iter().collect();
        assert_eq!(proj.added, expected);
    }

    #[test]
    fn sc_projection_acyclic_is_identity() {
        let g = fig2b();
        let proj = sc_projection_detailed(&g);
        assert!(proj.added.is_empty());
        assert_eq!(proj.graph, g);
    }

    #[test]
    fn sc_projection_idempotent_and_monotone() {
        for g in [fig2a(), fig3a(), fig3d()] {
            let once = sc_projection(&g);
            let twice = sc_projection(&once);
            assert_eq!(once, twice);
            assert!(g.is_subgraph_of(&once));
        }
    }

    #[test]
    fn bow_hedge_found_in_fig3b() {
        let cert = find_hedge(&fig3b(), &vset(&["CX"]), &vset(&["CY"]))
            .unwrap()
            .expect("hedge");
        assert_eq!(cert.roots, vset(&["CY"]));
        assert_eq!(cert.f.vertices(), &vset(&["CX", "CY"]));
        assert_eq!(cert.f_prime.vertices(), &vset(&["CY"]));
        assert!(cert.f.subgraph.has_directed(&v("CX"), &v("CY")));
        assert!(cert.f.subgraph.has_bidirected(&v("CX"), &v("CY")));
        verify_hedge_certificate(&fig3b(), &cert).unwrap();
    }

    #[test]
    fn no_hedge_in_fig2_projections() {
        for g in [fig2a(), fig2b()] {
            let proj = sc_projection(&g);
            assert!(find_hedge(&proj, &vset(&["CX"]), &vset(&["CY"])).unwrap().is_none());
        }
    }

    #[test]
    fn sc_hedge_found_for_fig3a_via_cycle_edge() {
        let cert = find_sc_hedge(&fig3a(), &vset(&["CX"]), &vset(&["CY"]))
            .unwrap()
            .expect("SC-hedge");
        assert_eq!(
            cert.projection_edges_used,
            [(v("CX"), v("CY"))].into_iter().collect::<BTreeSet<_>>()
        );
        verify_hedge_certificate(&sc_projection(&fig3a()), &cert).unwrap();
    }

    #[test]
    fn disconnected_pair_has_no_hedge() {
        let g = MixedGraph::build(&["CX", "CY"], &[], &[]);
        assert!(find_hedge(&g, &vset(&["CX"]), &vset(&["CY"])).unwrap().is_none());
    }

    #[test]
    fn plain_and_sc_hedge_agree_on_admgs() {
        // Acyclic bow: the projection adds nothing.
        let g = MixedGraph::build(&["A", "B"], &[("A", "B")], &[("A", "B")]);
        let plain = find_hedge(&g, &vset(&["A"]), &vset(&["B"])).unwrap();
        let sc = find_sc_hedge(&g, &vset(&["A"]), &vset(&["B"])).unwrap();
        assert_eq!(plain, sc);
        assert!(sc.unwrap().projection_edges_used.is_empty());
    }

    #[test]
    fn projection_coarsens_c_components() {
        for g in [fig2a(), fig3a(), fig3d()] {
            let before = c_components(&g);
            let after = c_components(&sc_projection(&g));
            // Every original component is contained in some projected one.
            for comp in &before {
                assert!(after.iter().any(|bigger| comp.is_subset(bigger)));
            }
        }
    }

    #[test]
    fn bad_queries_rejected() {
        let g = fig3b();
        assert!(find_hedge(&g, &VertexSet::new(), &vset(&["CY"])).is_err());
        assert!(find_hedge(&g, &vset(&["CX"]), &vset(&["CX"])).is_err());
    }
}
