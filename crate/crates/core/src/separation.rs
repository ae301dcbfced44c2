//! Blocked walks, primary paths and d-separation for mixed graphs with
//! cycles.
//!
//! The blocking criterion is stated on walks: a walk is blocked when an
//! endpoint is conditioned on, when an interior non-collider is conditioned
//! on, or when an interior collider has no conditioned descendant. A walk
//! that is not blocked is active.
//!
//! d-separation quantifies over paths, but an active walk always reduces to
//! an active path via its primary path, so reachability over
//! (vertex, arrival-mark) states decides d-separation without enumerating
//! paths — this is what makes cyclic graphs tractable.

use crate::graph::{GraphError, MixedGraph, VertexId, VertexSet};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeparationError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("sets must be pairwise disjoint (shared vertex {0})")]
    SetsNotDisjoint(VertexId),
    #[error("walk is not in the graph: {0}")]
    WalkNotInGraph(String),
    #[error("a walk needs at least one step")]
    EmptyWalk,
    #[error("graph with {vertices} vertices exceeds the exhaustive-search bound {max}")]
    GraphTooLarge { vertices: usize, max: usize },
}

/// How one step of a walk traverses an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StepKind {
    /// `from -> to` along a directed edge.
    DirectedFwd,
    /// `from <- to`: the directed edge `to -> from` traversed backwards.
    DirectedBwd,
    /// `from <-> to` along a bidirected edge.
    Bidirected,
}

/// The mark an edge presents at one of its endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mark {
    Tail,
    Head,
}

impl StepKind {
    /// Mark presented at the step's `from` endpoint.
    pub fn mark_at_from(self) -> Mark {
        match self {
            StepKind::DirectedFwd => Mark::Tail,
            StepKind::DirectedBwd | StepKind::Bidirected => Mark::Head,
        }
    }

    /// Mark presented at the step's `to` endpoint.
    pub fn mark_at_to(self) -> Mark {
        match self {
            StepKind::DirectedBwd => Mark::Tail,
            StepKind::DirectedFwd | StepKind::Bidirected => Mark::Head,
        }
    }

    fn glyph(self) -> &'static str {
        match self {
            StepKind::DirectedFwd => "->",
            StepKind::DirectedBwd => "<-",
            StepKind::Bidirected => "<->",
        }
    }
}

/// One traversal step of a walk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub from: VertexId,
    pub kind: StepKind,
    pub to: VertexId,
}

impl Step {
    pub fn new(from: VertexId, kind: StepKind, to: VertexId) -> Self {
        Step { from, kind, to }
    }

    /// True when the underlying edge is present in `g`.
    pub fn in_graph(&self, g: &MixedGraph) -> bool {
        match self.kind {
            StepKind::DirectedFwd => g.has_directed(&self.from, &self.to),
            StepKind::DirectedBwd => g.has_directed(&self.to, &self.from),
            StepKind::Bidirected => g.has_bidirected(&self.from, &self.to),
        }
    }
}

/// An alternating vertex–edge sequence; vertices may repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    start: VertexId,
    steps: Vec<Step>,
}

impl Walk {
    /// The zero-length walk sitting at `at`.
    pub fn trivial(at: VertexId) -> Self {
        Walk { start: at, steps: Vec::new() }
    }

    pub fn from_steps(steps: Vec<Step>) -> Result<Self, SeparationError> {
        let first = steps.first().ok_or(SeparationError::EmptyWalk)?;
        let start = first.from.clone();
        for pair in steps.windows(2) {
            if pair[0].to != pair[1].from {
                return Err(SeparationError::WalkNotInGraph(format!(
                    "steps do not chain: {} then {}",
                    pair[0].to, pair[1].from
                )));
            }
        }
        Ok(Walk { start, steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Vertex sequence `V1, ..., Vn` (length `len() + 1`).
    pub fn vertices(&self) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(self.start.clone());
        for s in &self.steps {
            out.push(s.to.clone());
        }
        out
    }

    pub fn first_vertex(&self) -> &VertexId {
        &self.start
    }

    pub fn last_vertex(&self) -> &VertexId {
        self.steps.last().map(|s| &s.to).unwrap_or(&self.start)
    }

    pub fn check_in_graph(&self, g: &MixedGraph) -> Result<(), SeparationError> {
        g.check_subset(&[self.start.clone()].into_iter().collect())?;
        for s in &self.steps {
            if !s.in_graph(g) {
                return Err(SeparationError::WalkNotInGraph(format!(
                    "no edge for step {} {} {}",
                    s.from,
                    s.kind.glyph(),
                    s.to
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.start)?;
        for s in &self.steps {
            write!(f, " {} {}", s.kind.glyph(), s.to)?;
        }
        Ok(())
    }
}

/// A walk whose vertices are pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path(Walk);

impl Path {
    pub fn from_walk(walk: Walk) -> Result<Self, SeparationError> {
        let vs = walk.vertices();
        let distinct: VertexSet = vs.iter().cloned().collect();
        if distinct.len() != vs.len() {
            return Err(SeparationError::WalkNotInGraph(format!(
                "walk {walk} repeats a vertex, not a path"
            )));
        }
        Ok(Path(walk))
    }

    pub fn as_walk(&self) -> &Walk {
        &self.0
    }

    pub fn steps(&self) -> &[Step] {
        self.0.steps()
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        self.0.vertices()
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Whether `walk` is blocked by the conditioning set `z` in `g`.
///
/// Blocked means: an endpoint lies in `z`, or some interior non-collider lies
/// in `z`, or some interior collider has `De(collider) ∩ z = ∅` (descendants
/// reflexive).
pub fn is_blocked(g: &MixedGraph, walk: &Walk, z: &VertexSet) -> Result<bool, SeparationError> {
    walk.check_in_graph(g)?;
    g.check_subset(z)?;

    if z.contains(walk.first_vertex()) || z.contains(walk.last_vertex()) {
        return Ok(true);
    }
    let an_z = g.ancestors(z)?;
    let steps = walk.steps();
    for i in 1..steps.len() {
        let v = &steps[i].from;
        let collider =
            steps[i - 1].kind.mark_at_to() == Mark::Head && steps[i].kind.mark_at_from() == Mark::Head;
        if collider {
            // De(v) ∩ z = ∅ exactly when v is not an ancestor of z.
            if !an_z.contains(v) {
                return Ok(true);
            }
        } else if z.contains(v) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The primary path of a walk: repeatedly jump to the successor of the last
/// occurrence of the current vertex. Endpoints are preserved and every output
/// edge is an edge of the walk at the jumped position.
pub fn primary_path(walk: &Walk) -> Path {
    let vs = walk.vertices();
    let last = vs.last().expect("walk has at least one vertex");
    let mut out = Vec::new();
    let mut u = vs[0].clone();
    while &u != last {
        let j = vs
            .iter()
            .rposition(|x| x == &u)
            .expect("u occurs in the walk");
        out.push(walk.steps()[j].clone());
        u = vs[j + 1].clone();
    }
    let path = if out.is_empty() {
        Walk::trivial(vs[0].clone())
    } else {
        Walk::from_steps(out).expect("steps chain by construction")
    };
    Path::from_walk(path).expect("last-occurrence construction yields distinct vertices")
}

/// Adjacency of traversal steps, self-loops skipped.
fn step_adjacency(g: &MixedGraph) -> BTreeMap<VertexId, Vec<(StepKind, VertexId)>> {
    let mut adj: BTreeMap<VertexId, Vec<(StepKind, VertexId)>> =
        g.vertices().map(|x| (x.clone(), Vec::new())).collect();
    for (t, h) in g.directed_edges() {
        if t == h {
            continue;
        }
        adj.get_mut(t).expect("endpoint").push((StepKind::DirectedFwd, h.clone()));
        adj.get_mut(h).expect("endpoint").push((StepKind::DirectedBwd, t.clone()));
    }
    for (a, b) in g.bidirected_edges() {
        if a == b {
            continue;
        }
        adj.get_mut(a).expect("endpoint").push((StepKind::Bidirected, b.clone()));
        adj.get_mut(b).expect("endpoint").push((StepKind::Bidirected, a.clone()));
    }
    for list in adj.values_mut() {
        list.sort();
    }
    adj
}

fn check_disjoint(sets: &[&VertexSet]) -> Result<(), SeparationError> {
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if let Some(shared) = sets[i].intersection(sets[j]).next() {
                return Err(SeparationError::SetsNotDisjoint(shared.clone()));
            }
        }
    }
    Ok(())
}

/// Finds a `z`-active path from `x` to `y`, or `None` when `x` and `y` are
/// d-separated by `z`.
///
/// Reachability runs over states (vertex, arrival mark). A state expands
/// through a further edge when the vertex is passable in that step pair:
/// non-colliders must avoid `z`, colliders must have a descendant in `z`.
/// The discovered active walk is reduced to a path via [`primary_path`].
pub fn find_active_path(
    g: &MixedGraph,
    x: &VertexSet,
    y: &VertexSet,
    z: &VertexSet,
) -> Result<Option<Path>, SeparationError> {
    g.check_subset(x)?;
    g.check_subset(y)?;
    g.check_subset(z)?;
    check_disjoint(&[x, y, z])?;
    if x.is_empty() || y.is_empty() {
        return Ok(None);
    }

    let adj = step_adjacency(g);
    let an_z = g.ancestors(z)?;

    // States are (vertex, arrival mark); parents record the incoming step.
    type State = (VertexId, Mark);
    let mut parent: BTreeMap<(VertexId, bool), Option<((VertexId, bool), Step)>> = BTreeMap::new();
    let key = |s: &State| (s.0.clone(), s.1 == Mark::Head);
    let mut queue: VecDeque<State> = VecDeque::new();

    let reconstruct = |state: &State,
                       parent: &BTreeMap<(VertexId, bool), Option<((VertexId, bool), Step)>>|
     -> Walk {
        let mut rev = Vec::new();
        let mut cur = key(state);
        while let Some(Some((prev, step))) = parent.get(&cur) {
            rev.push(step.clone());
            cur = prev.clone();
        }
        rev.reverse();
        Walk::from_steps(rev).expect("reconstructed steps chain")
    };

    for sx in x {
        for (kind, to) in adj.get(sx).into_iter().flatten() {
            let state = (to.clone(), kind.mark_at_to());
            let k = key(&state);
            if parent.contains_key(&k) {
                continue;
            }
            // Virtual start state for sx so reconstruction terminates there.
            let start_key = (sx.clone(), false);
            parent.entry(start_key.clone()).or_insert(None);
            parent.insert(k, Some((start_key, Step::new(sx.clone(), *kind, to.clone()))));
            if y.contains(to) {
                let walk = reconstruct(&state, &parent);
                return Ok(Some(primary_path(&walk)));
            }
            queue.push_back(state);
        }
    }

    while let Some((v, mark_in)) = queue.pop_front() {
        for (kind, to) in adj.get(&v).into_iter().flatten() {
            let collider = mark_in == Mark::Head && kind.mark_at_from() == Mark::Head;
            let passable = if collider { an_z.contains(&v) } else { !z.contains(&v) };
            if !passable {
                continue;
            }
            let state = (to.clone(), kind.mark_at_to());
            let k = key(&state);
            if parent.contains_key(&k) {
                continue;
            }
            parent.insert(
                k,
                Some(((v.clone(), mark_in == Mark::Head), Step::new(v.clone(), *kind, to.clone()))),
            );
            if y.contains(to) {
                let walk = reconstruct(&state, &parent);
                return Ok(Some(primary_path(&walk)));
            }
            queue.push_back(state);
        }
    }
    Ok(None)
}

/// True iff `z` blocks every path from `x` to `y`.
pub fn d_separated(
    g: &MixedGraph,
    x: &VertexSet,
    y: &VertexSet,
    z: &VertexSet,
) -> Result<bool, SeparationError> {
    Ok(find_active_path(g, x, y, z)?.is_none())
}

pub const EXHAUSTIVE_VERTEX_BOUND: usize = 12;

/// Oracle for [`d_separated`]: enumerate every simple path from `x` to `y`
/// and test each with [`is_blocked`]. Only for small graphs.
pub fn d_separated_exhaustive(
    g: &MixedGraph,
    x: &VertexSet,
    y: &VertexSet,
    z: &VertexSet,
) -> Result<bool, SeparationError> {
    if g.vertex_count() > EXHAUSTIVE_VERTEX_BOUND {
        return Err(SeparationError::GraphTooLarge {
            vertices: g.vertex_count(),
            max: EXHAUSTIVE_VERTEX_BOUND,
        });
    }
    g.check_subset(x)?;
    g.check_subset(y)?;
    g.check_subset(z)?;
    check_disjoint(&[x, y, z])?;

    let adj = step_adjacency(g);

    // Enumerate every simple path from x into y and apply `is_blocked` to
    // each complete path. No reachability pruning: this is the independent
    // oracle for the state-based search above.
    fn dfs(
        g: &MixedGraph,
        adj: &BTreeMap<VertexId, Vec<(StepKind, VertexId)>>,
        y: &VertexSet,
        z: &VertexSet,
        steps: &mut Vec<Step>,
        visited: &mut VertexSet,
        at: &VertexId,
    ) -> Result<bool, SeparationError> {
        for (kind, to) in adj.get(at).into_iter().flatten() {
            if visited.contains(to) {
                continue;
            }
            steps.push(Step::new(at.clone(), *kind, to.clone()));
            if y.contains(to) {
                let path = Walk::from_steps(steps.clone()).expect("steps chain");
                if !is_blocked(g, &path, z)? {
                    return Ok(true);
                }
            } else {
                visited.insert(to.clone());
                if dfs(g, adj, y, z, steps, visited, to)? {
                    return Ok(true);
                }
                visited.remove(to);
            }
            steps.pop();
        }
        Ok(false)
    }

    for sx in x {
        let mut steps = Vec::new();
        let mut visited: VertexSet = [sx.clone()].into_iter().collect();
        if dfs(g, &adj, y, z, &mut steps, &mut visited, sx)? {
            return Ok(false);
        }
    }
    Ok(true)
}
