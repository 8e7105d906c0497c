use std::fmt::Write;

/// One `digraph` block: nodes `1..=n` in index order, then arcs in the
/// order given (callers pass them sorted by `(from, to)`).
pub(super) fn render(n: usize, arcs: impl IntoIterator<Item = (usize, usize, String)>) -> String {
    let mut out = String::from("digraph G {\n");
    for v in 1..=n {
        writeln!(out, "  {v} [label=\"{v}\"];").unwrap();
    }
    for (from, to, label) in arcs {
        writeln!(out, "  {} -> {} [label=\"{}\"];", from + 1, to + 1, label.replace('"', "\\\"")).unwrap();
    }
    out.push_str("}\n");
    out
}
