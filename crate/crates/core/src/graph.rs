//! Mixed-graph representation and cluster abstraction.
//!
//! A single [`MixedGraph`] type underlies both ADMGs and C-DMGs: directed
//! edges carry causal influence, dashed bidirected edges carry latent
//! confounding. Cycles and self-loops are representable because clustering
//! can create them; [`MixedGraph::validate_admg`] enforces the acyclic,
//! self-loop-free subset.
//!
//! All vertex collections are ordered (lexicographic on names) so that every
//! derived artifact — estimands, certificates, enumeration order — is
//! reproducible.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use thiserror::Error;

/// A vertex name: a micro variable in an ADMG or a cluster in a C-DMG.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    /// Creates a vertex id. The name must be nonempty and whitespace-free.
    pub fn new(name: impl Into<String>) -> Result<Self, GraphError> {
        let name = name.into();
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(GraphError::BadVertexName(name));
        }
        Ok(VertexId(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexId({})", self.0)
    }
}

/// Shorthand used pervasively in tests and call sites.
pub fn v(name: &str) -> VertexId {
    VertexId::new(name).expect("valid vertex name")
}

/// An ordered set of vertices (the 𝕏, 𝕐, 𝕎, ℤ of the algorithms).
pub type VertexSet = BTreeSet<VertexId>;

/// Builds a [`VertexSet`] from names.
pub fn vset(names: &[&str]) -> VertexSet {
    names.iter().map(|n| v(n)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid vertex name {0:?}: must be nonempty without whitespace")]
    BadVertexName(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(VertexId),
    #[error("duplicate {kind} edge {a} - {b}")]
    DuplicateEdge { kind: &'static str, a: VertexId, b: VertexId },
    #[error("directed cycle found: {}", format_cycle(.0))]
    CycleFound(Vec<VertexId>),
    #[error("self-loop on {0} is not allowed in an ADMG")]
    SelfLoopFound(VertexId),
    #[error("cluster members do not partition the graph vertices: {0}")]
    NotAPartition(String),
    #[error("not a valid ADMG: {0}")]
    InvalidAdmg(Box<GraphError>),
    #[error("cluster {cluster} declares size {size} but has {members} members")]
    SizeMismatch { cluster: VertexId, size: usize, members: usize },
    #[error("query sets must be pairwise disjoint (shared vertex {0})")]
    SetsNotDisjoint(VertexId),
}

fn format_cycle(cycle: &[VertexId]) -> String {
    let mut s = String::new();
    for (i, x) in cycle.iter().enumerate() {
        if i > 0 {
            s.push_str(" -> ");
        }
        s.push_str(x.as_str());
    }
    s
}

/// A directed mixed graph: directed edges plus unordered bidirected edges.
///
/// Directed 2-cycles are two distinct edges, and self-loops of both kinds are
/// representable (C-DMGs need them). Bidirected edges are stored with
/// endpoints in sorted order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MixedGraph {
    vertices: BTreeSet<VertexId>,
    directed: BTreeSet<(VertexId, VertexId)>,
    bidirected: BTreeSet<(VertexId, VertexId)>,
}

impl Default for MixedGraph {
    fn default() -> Self {
        Self::new()
    }
}

impl MixedGraph {
    pub fn new() -> Self {
        MixedGraph {
            vertices: BTreeSet::new(),
            directed: BTreeSet::new(),
            bidirected: BTreeSet::new(),
        }
    }

    /// Builds a graph from vertex names and edge name pairs. Panics on
    /// invalid input; intended for fixtures and tests.
    pub fn build(vertices: &[&str], directed: &[(&str, &str)], bidirected: &[(&str, &str)]) -> Self {
        let mut g = MixedGraph::new();
        for name in vertices {
            g.add_vertex(v(name)).expect("vertex");
        }
        for (a, b) in directed {
            g.add_directed(v(a), v(b)).expect("directed edge");
        }
        for (a, b) in bidirected {
            g.add_bidirected(v(a), v(b)).expect("bidirected edge");
        }
        g
    }

    pub fn add_vertex(&mut self, id: VertexId) -> Result<(), GraphError> {
        if !self.vertices.insert(id.clone()) {
            return Err(GraphError::DuplicateVertex(id));
        }
        Ok(())
    }

    pub fn add_directed(&mut self, tail: VertexId, head: VertexId) -> Result<(), GraphError> {
        self.check_vertex(&tail)?;
        self.check_vertex(&head)?;
        if !self.directed.insert((tail.clone(), head.clone())) {
            return Err(GraphError::DuplicateEdge { kind: "directed", a: tail, b: head });
        }
        Ok(())
    }

    pub fn add_bidirected(&mut self, a: VertexId, b: VertexId) -> Result<(), GraphError> {
        self.check_vertex(&a)?;
        self.check_vertex(&b)?;
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        if !self.bidirected.insert((a.clone(), b.clone())) {
            return Err(GraphError::DuplicateEdge { kind: "bidirected", a, b });
        }
        Ok(())
    }

    pub fn remove_directed(&mut self, tail: &VertexId, head: &VertexId) -> bool {
        self.directed.remove(&(tail.clone(), head.clone()))
    }

    pub fn remove_bidirected(&mut self, a: &VertexId, b: &VertexId) -> bool {
        let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        self.bidirected.remove(&key)
    }

    fn check_vertex(&self, id: &VertexId) -> Result<(), GraphError> {
        if self.vertices.contains(id) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(id.clone()))
        }
    }

    /// Checks that every member of `set` is a vertex of this graph.
    pub fn check_subset(&self, set: &VertexSet) -> Result<(), GraphError> {
        for x in set {
            self.check_vertex(x)?;
        }
        Ok(())
    }

    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> {
        self.vertices.iter()
    }

    pub fn vertex_set(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains_vertex(&self, id: &VertexId) -> bool {
        self.vertices.contains(id)
    }

    pub fn directed_edges(&self) -> impl Iterator<Item = &(VertexId, VertexId)> {
        self.directed.iter()
    }

    pub fn bidirected_edges(&self) -> impl Iterator<Item = &(VertexId, VertexId)> {
        self.bidirected.iter()
    }

    pub fn has_directed(&self, tail: &VertexId, head: &VertexId) -> bool {
        self.directed.contains(&(tail.clone(), head.clone()))
    }

    pub fn has_bidirected(&self, a: &VertexId, b: &VertexId) -> bool {
        let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        self.bidirected.contains(&key)
    }

    /// Direct parents of `x` (tails of edges into `x`), excluding `x` itself
    /// unless a self-loop is present.
    pub fn parents(&self, x: &VertexId) -> Result<VertexSet, GraphError> {
        self.check_vertex(x)?;
        Ok(self
            .directed
            .iter()
            .filter(|(_, h)| h == x)
            .map(|(t, _)| t.clone())
            .collect())
    }

    pub fn children(&self, x: &VertexId) -> Result<VertexSet, GraphError> {
        self.check_vertex(x)?;
        Ok(self
            .directed
            .iter()
            .filter(|(t, _)| t == x)
            .map(|(_, h)| h.clone())
            .collect())
    }

    /// Vertices joined to `x` by a bidirected edge.
    pub fn spouses(&self, x: &VertexId) -> Result<VertexSet, GraphError> {
        self.check_vertex(x)?;
        let mut out = VertexSet::new();
        for (a, b) in &self.bidirected {
            if a == x {
                out.insert(b.clone());
            }
            if b == x {
                out.insert(a.clone());
            }
        }
        Ok(out)
    }

    /// Reflexive ancestors of `seeds`: every vertex with a directed path into
    /// the set, the seeds included.
    pub fn ancestors(&self, seeds: &VertexSet) -> Result<VertexSet, GraphError> {
        self.check_subset(seeds)?;
        Ok(self.reach(seeds, false))
    }

    /// Reflexive descendants of `seeds`.
    pub fn descendants(&self, seeds: &VertexSet) -> Result<VertexSet, GraphError> {
        self.check_subset(seeds)?;
        Ok(self.reach(seeds, true))
    }

    fn reach(&self, seeds: &VertexSet, forward: bool) -> VertexSet {
        let mut seen: VertexSet = seeds.clone();
        let mut queue: VecDeque<VertexId> = seeds.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            for (t, h) in &self.directed {
                let (from, to) = if forward { (t, h) } else { (h, t) };
                if from == &x && !seen.contains(to) {
                    seen.insert(to.clone());
                    queue.push_back(to.clone());
                }
            }
        }
        seen
    }

    /// The strongly connected component of `x`: `An(x) ∩ De(x)`.
    pub fn scc(&self, x: &VertexId) -> Result<VertexSet, GraphError> {
        let single: VertexSet = [x.clone()].into_iter().collect();
        let an = self.ancestors(&single)?;
        let de = self.descendants(&single)?;
        Ok(an.intersection(&de).cloned().collect())
    }

    /// Validates the ADMG discipline: no directed cycle and no self-loop of
    /// either kind.
    pub fn validate_admg(&self) -> Result<(), GraphError> {
        for (t, h) in &self.directed {
            if t == h {
                return Err(GraphError::SelfLoopFound(t.clone()));
            }
        }
        for (a, b) in &self.bidirected {
            if a == b {
                return Err(GraphError::SelfLoopFound(a.clone()));
            }
        }
        if let Some(cycle) = self.find_directed_cycle() {
            return Err(GraphError::CycleFound(cycle));
        }
        Ok(())
    }

    pub fn is_valid_admg(&self) -> bool {
        self.validate_admg().is_ok()
    }

    /// Returns one directed cycle as a closed vertex sequence, if any exists.
    fn find_directed_cycle(&self) -> Option<Vec<VertexId>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Colour {
            White,
            Grey,
            Black,
        }

        fn dfs(
            g: &MixedGraph,
            x: &VertexId,
            colour: &mut BTreeMap<VertexId, Colour>,
            path: &mut Vec<VertexId>,
        ) -> Option<Vec<VertexId>> {
            colour.insert(x.clone(), Colour::Grey);
            path.push(x.clone());
            for (t, h) in &g.directed {
                if t != x {
                    continue;
                }
                match colour[h] {
                    Colour::Grey => {
                        let start = path.iter().position(|p| p == h).expect("on path");
                        let mut cycle: Vec<VertexId> = path[start..].to_vec();
                        cycle.push(h.clone());
                        return Some(cycle);
                    }
                    Colour::White => {
                        if let Some(c) = dfs(g, h, colour, path) {
                            return Some(c);
                        }
                    }
                    Colour::Black => {}
                }
            }
            path.pop();
            colour.insert(x.clone(), Colour::Black);
            None
        }

        let mut colour: BTreeMap<VertexId, Colour> =
            self.vertices.iter().map(|x| (x.clone(), Colour::White)).collect();
        let mut path: Vec<VertexId> = Vec::new();
        let starts: Vec<VertexId> = self.vertices.iter().cloned().collect();
        for s in &starts {
            if colour[s] == Colour::White {
                if let Some(c) = dfs(self, s, &mut colour, &mut path) {
                    return Some(c);
                }
            }
        }
        None
    }

    /// Removes all self-loops (both kinds), reporting the vertices that had
    /// them. Path algorithms never traverse zero-length steps, so under the
    /// cluster-size assumption this does not change any identifiability
    /// answer.
    pub fn strip_self_loops(&self) -> (MixedGraph, SelfLoopReport) {
        let mut g = self.clone();
        let mut report = SelfLoopReport::default();
        g.directed.retain(|(t, h)| {
            if t == h {
                report.directed.insert(t.clone());
                false
            } else {
                true
            }
        });
        g.bidirected.retain(|(a, b)| {
            if a == b {
                report.bidirected.insert(a.clone());
                false
            } else {
                true
            }
        });
        (g, report)
    }

    /// Restriction to `keep`: induced subgraph on a vertex subset.
    pub fn induced(&self, keep: &VertexSet) -> MixedGraph {
        MixedGraph {
            vertices: self.vertices.intersection(keep).cloned().collect(),
            directed: self
                .directed
                .iter()
                .filter(|(t, h)| keep.contains(t) && keep.contains(h))
                .cloned()
                .collect(),
            bidirected: self
                .bidirected
                .iter()
                .filter(|(a, b)| keep.contains(a) && keep.contains(b))
                .cloned()
                .collect(),
        }
    }

    /// True when `self` is a vertex- and edge-wise subgraph of `host`.
    pub fn is_subgraph_of(&self, host: &MixedGraph) -> bool {
        self.vertices.is_subset(&host.vertices)
            && self.directed.is_subset(&host.directed)
            && self.bidirected.is_subset(&host.bidirected)
    }
}

/// Vertices that carried self-loops before normalisation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SelfLoopReport {
    pub directed: VertexSet,
    pub bidirected: VertexSet,
}

/// Per-cluster metadata: membership and/or size, either of which may be
/// unknown.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct ClusterInfo {
    pub members: Option<BTreeSet<VertexId>>,
    pub size: Option<usize>,
}

impl ClusterInfo {
    /// Declared size, or the member count when members are known.
    pub fn effective_size(&self) -> Option<usize> {
        self.size.or_else(|| self.members.as_ref().map(|m| m.len()))
    }
}

/// Partition metadata mapping cluster ids to optional member sets and sizes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct ClusterSpec {
    clusters: BTreeMap<VertexId, ClusterInfo>,
}

impl ClusterSpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, cluster: VertexId, info: ClusterInfo) -> Result<(), GraphError> {
        if let (Some(size), Some(members)) = (info.size, info.members.as_ref()) {
            if size != members.len() {
                return Err(GraphError::SizeMismatch {
                    cluster,
                    size,
                    members: members.len(),
                });
            }
        }
        if let Some(members) = info.members.as_ref() {
            for (other, other_info) in &self.clusters {
                if let Some(other_members) = other_info.members.as_ref() {
                    if let Some(shared) = members.intersection(other_members).next() {
                        return Err(GraphError::NotAPartition(format!(
                            "{shared} belongs to both {cluster} and {other}"
                        )));
                    }
                }
            }
        }
        if self.clusters.insert(cluster.clone(), info).is_some() {
            return Err(GraphError::DuplicateVertex(cluster));
        }
        Ok(())
    }

    /// Builds a spec with known members for each cluster. Panics on invalid
    /// input; intended for fixtures and tests.
    pub fn with_members(clusters: &[(&str, &[&str])]) -> Self {
        let mut spec = ClusterSpec::new();
        for (name, members) in clusters {
            spec.insert(
                v(name),
                ClusterInfo {
                    members: Some(members.iter().map(|m| v(m)).collect()),
                    size: None,
                },
            )
            .expect("cluster spec");
        }
        spec
    }

    /// Builds a spec with known sizes but unknown members.
    pub fn with_sizes(clusters: &[(&str, usize)]) -> Self {
        let mut spec = ClusterSpec::new();
        for (name, size) in clusters {
            spec.insert(v(name), ClusterInfo { members: None, size: Some(*size) })
                .expect("cluster spec");
        }
        spec
    }

    /// One singleton cluster per vertex, each named after its member.
    pub fn singletons(g: &MixedGraph) -> Self {
        let mut spec = ClusterSpec::new();
        for x in g.vertices() {
            spec.insert(
                x.clone(),
                ClusterInfo { members: Some([x.clone()].into_iter().collect()), size: Some(1) },
            )
            .expect("singleton spec");
        }
        spec
    }

    pub fn clusters(&self) -> impl Iterator<Item = (&VertexId, &ClusterInfo)> {
        self.clusters.iter()
    }

    pub fn cluster_ids(&self) -> VertexSet {
        self.clusters.keys().cloned().collect()
    }

    pub fn get(&self, cluster: &VertexId) -> Option<&ClusterInfo> {
        self.clusters.get(cluster)
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    /// The cluster containing micro vertex `x`, when memberships are known.
    pub fn cluster_of(&self, x: &VertexId) -> Option<&VertexId> {
        self.clusters
            .iter()
            .find(|(_, info)| info.members.as_ref().is_some_and(|m| m.contains(x)))
            .map(|(c, _)| c)
    }

    /// Union of the members of `clusters`.
    pub fn members_of(&self, clusters: &VertexSet) -> Result<VertexSet, GraphError> {
        let mut out = VertexSet::new();
        for c in clusters {
            let info = self.clusters.get(c).ok_or_else(|| GraphError::UnknownVertex(c.clone()))?;
            let members = info
                .members
                .as_ref()
                .ok_or_else(|| GraphError::NotAPartition(format!("members of {c} unknown")))?;
            out.extend(members.iter().cloned());
        }
        Ok(out)
    }

    /// True when every cluster has unknown size or size at least two — the
    /// prerequisite for the completeness results and for SC-hedge soundness.
    pub fn satisfies_assumption_1(&self) -> bool {
        self.clusters
            .values()
            .all(|info| info.effective_size().is_none_or(|s| s >= 2))
    }

    /// All member sets known and jointly partitioning `vertices`.
    pub fn check_partition_of(&self, vertices: &BTreeSet<VertexId>) -> Result<(), GraphError> {
        let mut seen = BTreeSet::new();
        for (cluster, info) in &self.clusters {
            let members = info.members.as_ref().ok_or_else(|| {
                GraphError::NotAPartition(format!("members of {cluster} unknown"))
            })?;
            if members.is_empty() {
                return Err(GraphError::NotAPartition(format!("cluster {cluster} is empty")));
            }
            for m in members {
                if !vertices.contains(m) {
                    return Err(GraphError::NotAPartition(format!(
                        "{m} in {cluster} is not a graph vertex"
                    )));
                }
                if !seen.insert(m.clone()) {
                    return Err(GraphError::NotAPartition(format!("{m} appears twice")));
                }
            }
        }
        if seen.len() != vertices.len() {
            let missing = vertices.difference(&seen).next().expect("some vertex uncovered");
            return Err(GraphError::NotAPartition(format!("{missing} is in no cluster")));
        }
        Ok(())
    }
}

/// The C-DMG induced by `admg` under `spec`: cluster `Ci -> Cj` is present
/// iff some member edge `X -> Y` is, including `i = j` (self-loops); same for
/// bidirected edges.
pub fn cluster_graph_of(admg: &MixedGraph, spec: &ClusterSpec) -> Result<MixedGraph, GraphError> {
    admg.validate_admg().map_err(|e| GraphError::InvalidAdmg(Box::new(e)))?;
    spec.check_partition_of(admg.vertex_set())?;

    let mut lookup: BTreeMap<&VertexId, &VertexId> = BTreeMap::new();
    for (cluster, info) in spec.clusters() {
        for m in info.members.as_ref().expect("partition checked") {
            lookup.insert(m, cluster);
        }
    }

    let mut cdmg = MixedGraph::new();
    for (cluster, _) in spec.clusters() {
        cdmg.add_vertex(cluster.clone())?;
    }
    for (t, h) in admg.directed_edges() {
        let (ct, ch) = (lookup[t].clone(), lookup[h].clone());
        if !cdmg.has_directed(&ct, &ch) {
            cdmg.add_directed(ct, ch)?;
        }
    }
    for (a, b) in admg.bidirected_edges() {
        let (ca, cb) = (lookup[a].clone(), lookup[b].clone());
        if !cdmg.has_bidirected(&ca, &cb) {
            cdmg.add_bidirected(ca, cb)?;
        }
    }
    Ok(cdmg)
}

/// True iff `cdmg` is exactly the cluster graph of `admg` under `spec`.
pub fn compatible(
    admg: &MixedGraph,
    spec: &ClusterSpec,
    cdmg: &MixedGraph,
) -> Result<bool, GraphError> {
    Ok(&cluster_graph_of(admg, spec)? == cdmg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> MixedGraph {
        MixedGraph::build(&["X", "Y", "Z"], &[("X", "Y"), ("Y", "Z")], &[])
    }

    /// Fig 1a: nine micro variables in three clusters.
    pub(crate) fn fig1a() -> MixedGraph {
        MixedGraph::build(
            &["W1", "W2", "W3", "W4", "X1", "X2", "X3", "Y1", "Y2"],
            &[
                ("X1", "X2"),
                ("X1", "X3"),
                ("W3", "W2"),
                ("W4", "W1"),
                ("X2", "W3"),
                ("W1", "X3"),
                ("Y2", "W4"),
                ("W2", "Y1"),
            ],
            &[("W3", "W4"), ("X1", "Y1")],
        )
    }

    pub(crate) fn fig1b() -> MixedGraph {
        MixedGraph::build(
            &["W1", "W2", "W3", "W4", "X1", "X2", "X3", "Y1", "Y2"],
            &[
                ("X2", "X1"),
                ("X3", "X1"),
                ("X2", "X3"),
                ("W1", "W3"),
                ("W2", "W4"),
                ("X2", "W1"),
                ("W1", "X3"),
                ("Y2", "W2"),
                ("W2", "Y1"),
            ],
            &[("W1", "W2"), ("X1", "Y1")],
        )
    }

    pub(crate) fn fig1_spec() -> ClusterSpec {
        ClusterSpec::with_members(&[
            ("CX", &["X1", "X2", "X3"]),
            ("CY", &["Y1", "Y2"]),
            ("CW", &["W1", "W2", "W3", "W4"]),
        ])
    }

    pub(crate) fn fig1c() -> MixedGraph {
        let mut g = MixedGraph::build(
            &["CW", "CX", "CY"],
            &[("CX", "CW"), ("CW", "CX"), ("CW", "CY"), ("CY", "CW"), ("CX", "CX"), ("CW", "CW")],
            &[("CX", "CY")],
        );
        g.add_bidirected(v("CW"), v("CW")).unwrap();
        g
    }

    #[test]
    fn chain_is_valid_admg() {
        assert!(chain().validate_admg().is_ok());
    }

    #[test]
    fn two_cycle_is_rejected() {
        let g = MixedGraph::build(&["X", "Y"], &[("X", "Y"), ("Y", "X")], &[]);
        match g.validate_admg() {
            Err(GraphError::CycleFound(cycle)) => {
                assert!(cycle.len() >= 3);
                assert_eq!(cycle.first(), cycle.last());
            }
            other => panic!("expected CycleFound, got {other:?}"),
        }
    }

    #[test]
    fn self_loops_are_rejected_in_admg_but_representable() {
        let g = MixedGraph::build(&["X"], &[("X", "X")], &[]);
        assert_eq!(g.validate_admg(), Err(GraphError::SelfLoopFound(v("X"))));
        let mut h = MixedGraph::build(&["X"], &[], &[]);
        h.add_bidirected(v("X"), v("X")).unwrap();
        assert_eq!(h.validate_admg(), Err(GraphError::SelfLoopFound(v("X"))));
    }

    #[test]
    fn fig1a_is_valid_admg() {
        assert!(fig1a().validate_admg().is_ok());
    }

    #[test]
    fn chain_descendants_are_reflexive() {
        let g = chain();
        assert_eq!(g.descendants(&vset(&["X"])).unwrap(), vset(&["X", "Y", "Z"]));
        assert_eq!(g.descendants(&VertexSet::new()).unwrap(), VertexSet::new());
    }

    #[test]
    fn fig2a_ancestors_of_cy() {
        // Fig 2a: CX -> CY, CX <=> CW (self-loops stripped for brevity).
        let g = MixedGraph::build(
            &["CW", "CX", "CY"],
            &[("CX", "CY"), ("CX", "CW"), ("CW", "CX")],
            &[],
        );
        assert_eq!(g.ancestors(&vset(&["CY"])).unwrap(), vset(&["CW", "CX", "CY"]));
        assert_eq!(g.scc(&v("CX")).unwrap(), vset(&["CW", "CX"]));
    }

    #[test]
    fn fig2d_scc_of_cy() {
        let g = MixedGraph::build(
            &["CR", "CU", "CW", "CX", "CY", "CZ"],
            &[
                ("CZ", "CX"),
                ("CZ", "CY"),
                ("CW", "CX"),
                ("CZ", "CW"),
                ("CW", "CU"),
                ("CY", "CU"),
                ("CW", "CY"),
                ("CW", "CR"),
                ("CU", "CR"),
                ("CR", "CY"),
                ("CX", "CR"),
            ],
            &[("CW", "CY")],
        );
        assert_eq!(g.scc(&v("CY")).unwrap(), vset(&["CR", "CU", "CY"]));
    }

    #[test]
    fn acyclic_scc_is_singleton() {
        let g = chain();
        assert_eq!(g.scc(&v("Y")).unwrap(), vset(&["Y"]));
    }

    #[test]
    fn unknown_vertex_is_reported() {
        let g = chain();
        assert!(matches!(g.parents(&v("Q")), Err(GraphError::UnknownVertex(_))));
        assert!(matches!(
            g.ancestors(&vset(&["X", "Q"])),
            Err(GraphError::UnknownVertex(_))
        ));
    }

    #[test]
    fn cluster_graph_of_fig1a_matches_fig1c() {
        let got = cluster_graph_of(&fig1a(), &fig1_spec()).unwrap();
        assert_eq!(got, fig1c());
    }

    #[test]
    fn cluster_graph_of_fig1b_matches_fig1c() {
        let got = cluster_graph_of(&fig1b(), &fig1_spec()).unwrap();
        assert_eq!(got, fig1c());
    }

    #[test]
    fn singleton_clustering_is_identity() {
        let g = fig1a();
        let spec = ClusterSpec::singletons(&g);
        assert_eq!(cluster_graph_of(&g, &spec).unwrap(), g);
        assert!(compatible(&g, &spec, &g).unwrap());
    }

    #[test]
    fn extra_micro_edge_breaks_compatibility() {
        let mut g = fig1a();
        g.add_directed(v("X1"), v("Y2")).unwrap();
        // The cluster graph now has CX -> CY, which Fig 1c lacks.
        assert!(!compatible(&g, &fig1_spec(), &fig1c()).unwrap());
    }

    #[test]
    fn compatibility_holds_by_construction() {
        let g = fig1b();
        let spec = fig1_spec();
        let cdmg = cluster_graph_of(&g, &spec).unwrap();
        assert!(compatible(&g, &spec, &cdmg).unwrap());
    }

    #[test]
    fn partition_violations_are_reported() {
        let spec = ClusterSpec::with_members(&[("CA", &["X"]), ("CB", &["Y"])]);
        let g = chain();
        assert!(matches!(
            cluster_graph_of(&g, &spec),
            Err(GraphError::NotAPartition(_))
        ));
    }

    #[test]
    fn overlapping_members_rejected_at_insert() {
        let mut spec = ClusterSpec::with_members(&[("CA", &["X"])]);
        let err = spec.insert(
            v("CB"),
            ClusterInfo { members: Some(vset(&["X"])), size: None },
        );
        assert!(matches!(err, Err(GraphError::NotAPartition(_))));
    }

    #[test]
    fn assumption_1_flag() {
        assert!(ClusterSpec::with_sizes(&[("CA", 2), ("CB", 3)]).satisfies_assumption_1());
        assert!(!ClusterSpec::with_sizes(&[("CA", 1), ("CB", 2)]).satisfies_assumption_1());
        // Unknown sizes satisfy the assumption.
        let mut spec = ClusterSpec::new();
        spec.insert(v("CA"), ClusterInfo::default()).unwrap();
        assert!(spec.satisfies_assumption_1());
    }

    #[test]
    fn size_mismatch_rejected() {
        let mut spec = ClusterSpec::new();
        let err = spec.insert(
            v("CA"),
            ClusterInfo { members: Some(vset(&["X", "Y"])), size: Some(3) },
        );
        assert!(matches!(err, Err(GraphError::SizeMismatch { .. })));
    }

    #[test]
    fn strip_self_loops_reports() {
        let g = fig1c();
        let (stripped, report) = g.strip_self_loops();
        assert_eq!(report.directed, vset(&["CW", "CX"]));
        assert_eq!(report.bidirected, vset(&["CW"]));
        assert!(stripped.directed_edges().all(|(t, h)| t != h));
        assert!(stripped.bidirected_edges().all(|(a, b)| a != b));
        assert_eq!(stripped.vertex_count(), 3);
    }

    #[test]
    fn scc_is_equivalence() {
        let g = fig1c();
        for a in g.vertex_set() {
            for b in g.vertex_set() {
                let sa = g.scc(a).unwrap();
                let sb = g.scc(b).unwrap();
                assert_eq!(sb.contains(a), sa == sb, "{a} vs {b}");
            }
        }
    }
}
