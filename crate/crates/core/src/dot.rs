//! Deterministic Graphviz output. Identities are never drawn.

use std::fmt::Write;

use crate::cat::{FinCat, FinFunctor};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn edges(out: &mut String, c: &FinCat) {
    for f in c.non_identity_arrows() {
        let _ = writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(c.object_name(c.src(f))),
            quote(c.object_name(c.dst(f))),
            quote(c.arrow_name(f))
        );
    }
}

pub fn category_dot(c: &FinCat, name: &str) -> String {
    let mut out = format!("digraph {} {{\n", quote(name));
    for x in c.objects() {
        let _ = writeln!(out, "  {};", quote(c.object_name(x)));
    }
    edges(&mut out, c);
    out.push_str("}\n");
    out
}

/// One cluster per base object, in canonical order, empty fibers included.
pub fn clustered_dot(projection: &FinFunctor, name: &str) -> String {
    let (c, b) = (projection.source(), projection.target());
    let mut out = format!("digraph {} {{\n", quote(name));
    for base in b.objects() {
        let _ = writeln!(out, "  subgraph {} {{", quote(&format!("cluster_{}", base.0)));
        let _ = writeln!(out, "    label={};", quote(b.object_name(base)));
        for x in c.objects().filter(|&x| projection.ob(x) == base) {
            let _ = writeln!(out, "    {};", quote(c.object_name(x)));
        }
        out.push_str("  }\n");
    }
    edges(&mut out, c);
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn terminal_has_one_node_and_no_edges() {
        let t = catalog::category("terminal").unwrap();
        let dot = category_dot(&t, "terminal");
        assert_eq!(dot, "digraph \"terminal\" {\n  \"*\";\n}\n");
    }

    #[test]
    fn quop_a_has_three_edges() {
        let a = catalog::category("quop_A").unwrap();
        let dot = category_dot(&a, "A");
        assert_eq!(dot.matches("->").count(), 3);
        assert_eq!(dot.lines().filter(|l| l.ends_with("\";")).count(), 3);
    }

    #[test]
    fn empty_clusters_are_kept() {
        let f = catalog::functor("point0").unwrap();
        let gf = crate::comonad::build_gf(&f, Default::default()).unwrap();
        let dot = clustered_dot(&gf.projection, "G");
        assert_eq!(dot.matches("subgraph").count(), 2);
        assert!(dot.contains("  subgraph \"cluster_1\" {\n    label=\"1\";\n  }\n"));
    }
}
