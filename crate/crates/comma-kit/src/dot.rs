//! Graphviz export: one node per object, one labeled edge per non-identity
//! morphism, emitted in insertion order so the output is reproducible.

use crate::FinCategory;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Render a category as a dot digraph.
pub fn category_to_dot(c: &FinCategory) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph \"{}\" {{\n", escape(&c.name)));
    out.push_str("  rankdir=LR;\n");
    for o in c.objects() {
        out.push_str(&format!("  \"{}\";\n", escape(o)));
    }
    for m in c.non_identity_morphisms() {
        let s = c.src(m).unwrap_or("?");
        let t = c.tgt(m).unwrap_or("?");
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
            escape(s),
            escape(t),
            escape(m)
        ));
    }
    out.push_str("}\n");
    out
}
