//! Mutilated graphs: the carriers of every do-calculus side condition.
//!
//! `mutilate(g, A, B)` removes all edges coming into `A` and all edges
//! coming out of `B`. A bidirected edge presents an arrowhead at both ends,
//! so it counts as "coming in" to each endpoint and is removed whenever
//! either endpoint lies in `A`. Outgoing removal concerns directed edges
//! only.

use crate::graph::{cluster_graph_of, ClusterSpec, GraphError, MixedGraph, VertexSet};

/// The graph with incoming edges of `a` and outgoing directed edges of `b`
/// removed. `a` and `b` may overlap; vertices are preserved.
pub fn mutilate(g: &MixedGraph, a: &VertexSet, b: &VertexSet) -> Result<MixedGraph, GraphError> {
    g.check_subset(a)?;
    g.check_subset(b)?;
    let mut out = MixedGraph::new();
    for x in g.vertices() {
        out.add_vertex(x.clone())?;
    }
    for (t, h) in g.directed_edges() {
        if a.contains(h) || b.contains(t) {
            continue;
        }
        out.add_directed(t.clone(), h.clone())?;
    }
    for (x, y) in g.bidirected_edges() {
        if a.contains(x) || a.contains(y) {
            continue;
        }
        out.add_bidirected(x.clone(), y.clone())?;
    }
    Ok(out)
}

/// Mutilation commutes with clustering: the cluster graph of the mutilated
/// ADMG equals the mutilated C-DMG. This always holds; the operation exists
/// as a tested theorem, not a runtime branch.
pub fn check_mutilation_compatibility(
    admg: &MixedGraph,
    spec: &ClusterSpec,
    cdmg: &MixedGraph,
    a_clusters: &VertexSet,
    b_clusters: &VertexSet,
) -> Result<bool, GraphError> {
    let a_micro = spec.members_of(a_clusters)?;
    let b_micro = spec.members_of(b_clusters)?;
    let micro_mutilated = mutilate(admg, &a_micro, &b_micro)?;
    let lifted = cluster_graph_of(&micro_mutilated, spec)?;
    let cluster_mutilated = mutilate(cdmg, a_clusters, b_clusters)?;
    Ok(lifted == cluster_mutilated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{v, vset};

    fn fig2a() -> MixedGraph {
        MixedGraph::build(
            &["CW", "CX", "CY"],
            &[("CX", "CY"), ("CX", "CW"), ("CW", "CX"), ("CX", "CX"), ("CW", "CW")],
            &[],
        )
    }

    #[test]
    fn empty_mutilation_is_identity() {
        let g = fig2a();
        assert_eq!(mutilate(&g, &VertexSet::new(), &VertexSet::new()).unwrap(), g);
    }

    #[test]
    fn outgoing_removal_on_fig2a() {
        let g = fig2a();
        let m = mutilate(&g, &VertexSet::new(), &vset(&["CX"])).unwrap();
        assert!(!m.has_directed(&v("CX"), &v("CY")));
        assert!(!m.has_directed(&v("CX"), &v("CW")));
        assert!(!m.has_directed(&v("CX"), &v("CX")));
        assert!(m.has_directed(&v("CW"), &v("CX")));
        assert!(m.has_directed(&v("CW"), &v("CW")));
        assert_eq!(m.vertex_count(), 3);
    }

    #[test]
    fn incoming_removal_takes_bidirected() {
        let g = MixedGraph::build(&["A", "B", "C"], &[("A", "B")], &[("B", "C")]);
        let m = mutilate(&g, &vset(&["B"]), &VertexSet::new()).unwrap();
        assert!(!m.has_directed(&v("A"), &v("B")));
        assert!(!m.has_bidirected(&v("B"), &v("C")));
    }

    #[test]
    fn fig2d_incoming_removal_keeps_outgoing() {
        // Incoming to CZ: nothing drawn except self-loops.
        let g = MixedGraph::build(
            &["CW", "CX", "CY", "CZ"],
            &[("CZ", "CX"), ("CZ", "CY"), ("CZ", "CW"), ("CZ", "CZ")],
            &[],
        );
        let m = mutilate(&g, &vset(&["CZ"]), &VertexSet::new()).unwrap();
        assert!(m.has_directed(&v("CZ"), &v("CX")));
        assert!(m.has_directed(&v("CZ"), &v("CY")));
        assert!(m.has_directed(&v("CZ"), &v("CW")));
        assert!(!m.has_directed(&v("CZ"), &v("CZ")));
    }

    #[test]
    fn idempotent() {
        let g = fig2a();
        let a = vset(&["CY"]);
        let b = vset(&["CX"]);
        let once = mutilate(&g, &a, &b).unwrap();
        let twice = mutilate(&once, &a, &b).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn overlapping_a_and_b_allowed() {
        let g = fig2a();
        let s = vset(&["CX"]);
        let m = mutilate(&g, &s, &s).unwrap();
        assert!(!m.has_directed(&v("CW"), &v("CX")));
        assert!(!m.has_directed(&v("CX"), &v("CY")));
    }

    #[test]
    fn commutes_with_clustering_on_fig1() {
        use crate::graph::{cluster_graph_of, ClusterSpec};
        let admg = MixedGraph::build(
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
        );
        let spec = ClusterSpec::with_members(&[
            ("CX", &["X1", "X2", "X3"]),
            ("CY", &["Y1", "Y2"]),
            ("CW", &["W1", "W2", "W3", "W4"]),
        ]);
        let cdmg = cluster_graph_of(&admg, &spec).unwrap();
        assert!(check_mutilation_compatibility(
            &admg,
            &spec,
            &cdmg,
            &vset(&["CW"]),
            &VertexSet::new()
        )
        .unwrap());
        assert!(check_mutilation_compatibility(
            &admg,
            &spec,
            &cdmg,
            &VertexSet::new(),
            &VertexSet::new()
        )
        .unwrap());
        assert!(
            check_mutilation_compatibility(&admg, &spec, &cdmg, &vset(&["CY"]), &vset(&["CX"]))
                .unwrap()
        );
    }
}
