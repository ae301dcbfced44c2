//! Applicability of the three do-calculus rules on C-DMGs.
//!
//! Each rule is a purely graphical side condition: a d-separation statement
//! in a mutilated graph. For a query on disjoint sets Y, X, Z, W the rules
//! read
//!
//! - Rule 1 (drop an observation):  P(y | do(z), x, w) = P(y | do(z), w)
//!   if Y ⊥ X | Z ∪ W in the graph with incoming edges of Z removed;
//! - Rule 2 (exchange action and observation):
//!   P(y | do(z), do(x), w) = P(y | do(z), x, w)
//!   if Y ⊥ X | Z ∪ W with incoming-Z and outgoing-X removed;
//! - Rule 3 (drop an action):  P(y | do(z), do(x), w) = P(y | do(z), w)
//!   if Y ⊥ X | Z ∪ W with incoming edges of Z and of X(W) removed,
//!   where X(W) is the subset of X that are non-ancestors of W in the
//!   incoming-Z mutilation.

use crate::graph::{GraphError, MixedGraph, VertexId, VertexSet};
use crate::mutilation::mutilate;
use crate::separation::{d_separated, SeparationError};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocalcError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Separation(#[from] SeparationError),
    #[error("the rule applies; no counterexample exists")]
    RuleActuallyApplies,
    #[error("cluster sizes violate the size assumption; completeness does not hold")]
    AssumptionOneViolated,
    #[error("counterexample search space too large: {0}")]
    SearchSpaceTooLarge(String),
}

/// One of the three do-calculus rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    R1,
    R2,
    R3,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::R1 => write!(f, "Rule 1"),
            Rule::R2 => write!(f, "Rule 2"),
            Rule::R3 => write!(f, "Rule 3"),
        }
    }
}

/// A rule instance: the graph, the four pairwise disjoint vertex sets and the
/// rule under test.
#[derive(Debug, Clone)]
pub struct RuleQuery {
    pub graph: MixedGraph,
    pub y: VertexSet,
    pub x: VertexSet,
    pub z: VertexSet,
    pub w: VertexSet,
    pub rule: Rule,
}

impl RuleQuery {
    pub fn new(
        graph: MixedGraph,
        rule: Rule,
        y: VertexSet,
        x: VertexSet,
        z: VertexSet,
        w: VertexSet,
    ) -> Result<Self, DocalcError> {
        graph.check_subset(&y)?;
        graph.check_subset(&x)?;
        graph.check_subset(&z)?;
        graph.check_subset(&w)?;
        let sets = [&y, &x, &z, &w];
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                if let Some(shared) = sets[i].intersection(sets[j]).next() {
                    return Err(GraphError::SetsNotDisjoint(shared.clone()).into());
                }
            }
        }
        Ok(RuleQuery { graph, y, x, z, w, rule })
    }
}

/// The subset of `x` that are non-ancestors of every vertex of `w` in the
/// incoming-`z` mutilation.
pub fn x_given_w(
    g: &MixedGraph,
    x: &VertexSet,
    w: &VertexSet,
    z: &VertexSet,
) -> Result<VertexSet, DocalcError> {
    let mutilated = mutilate(g, z, &VertexSet::new())?;
    let an_w = mutilated.ancestors(w)?;
    Ok(x.iter().filter(|v| !an_w.contains(*v)).cloned().collect())
}

/// The mutilation a rule's side condition is evaluated in, as (incoming
/// removals, outgoing removals).
pub fn rule_mutilation_sets(q: &RuleQuery) -> Result<(VertexSet, VertexSet), DocalcError> {
    Ok(match q.rule {
        Rule::R1 => (q.z.clone(), VertexSet::new()),
        Rule::R2 => (q.z.clone(), q.x.clone()),
        Rule::R3 => {
            let xw = x_given_w(&q.graph, &q.x, &q.w, &q.z)?;
            (q.z.union(&xw).cloned().collect(), VertexSet::new())
        }
    })
}

/// Evaluates the rule's d-separation side condition.
pub fn rule_applies(q: &RuleQuery) -> Result<bool, DocalcError> {
    let (incoming, outgoing) = rule_mutilation_sets(q)?;
    let mutilated = mutilate(&q.graph, &incoming, &outgoing)?;
    let cond: VertexSet = q.z.union(&q.w).cloned().collect();
    Ok(d_separated(&mutilated, &q.y, &q.x, &cond)?)
}

/// An ADMG, produced by the completeness construction or by enumeration,
/// compatible with a C-DMG.
#[derive(Debug, Clone)]
pub struct CompatibleAdmgWitness {
    pub admg: MixedGraph,
    pub spec: crate::graph::ClusterSpec,
    pub construction: WitnessConstruction,
    /// The total order used by the two-copy construction, when applicable.
    pub order_used: Option<Vec<VertexId>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessConstruction {
    Enumerated,
    Theorem2Construction,
}

/// When a rule fails on the C-DMG, produces a compatible ADMG in which the
/// corresponding micro-level rule condition also fails.
///
/// The deterministic two-copies-per-cluster construction is tried first; if
/// its witness does not verify (rule 3's non-ancestor set can differ at the
/// micro level), the search falls back to exhaustive enumeration with
/// clusters of size two.
pub fn rule_counterexample(q: &RuleQuery) -> Result<CompatibleAdmgWitness, DocalcError> {
    crate::oracle::rule_counterexample_impl(q)
}

/// Micro-level rule check used to verify counterexamples: the same side
/// condition evaluated on an ADMG with the query sets lifted to unions of
/// cluster members.
pub fn rule_applies_micro(
    admg: &MixedGraph,
    spec: &crate::graph::ClusterSpec,
    q: &RuleQuery,
) -> Result<bool, DocalcError> {
    let lifted = RuleQuery::new(
        admg.clone(),
        q.rule,
        spec.members_of(&q.y)?,
        spec.members_of(&q.x)?,
        spec.members_of(&q.z)?,
        spec.members_of(&q.w)?,
    )?;
    rule_applies(&lifted)
}
