use crate::category::ExplicitCategory;
use std::fmt::Write;

/// DOT rendering: objects become nodes, nonidentity generators become edges.
/// Output is deterministic for a fixed input.
pub fn category_to_dot(c: &ExplicitCategory, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {name} {{");
    for &o in &c.objects {
        let _ = writeln!(out, "  o{o} [label=\"{o}\"];");
    }
    for gid in c.generator_morphisms() {
        let m = c.morphism(gid).expect("generator exists");
        let _ = writeln!(out, "  o{} -> o{} [label=\"m{}\"];", m.src, m.tgt, m.id);
    }
    out.push_str("}\n");
    out
}
