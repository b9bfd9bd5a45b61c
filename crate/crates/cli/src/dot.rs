//! Graphviz export of Cayley graphs.

use std::fmt::Write;

use iquandle::FiniteQuandle;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// The Cayley graph as an undirected DOT graph: one node per element, one
/// edge per element and generator (each edge once, loops included), labelled
/// with the generator name. Nodes in index order, then edges by generator
/// and lower endpoint.
pub fn to_dot(q: &FiniteQuandle) -> String {
    let mut s = String::from("graph quandle {\n");
    let names = q.generator_names();
    let gens = q.generator_elements();
    for v in 0..q.order() {
        let mut attrs = format!("label=\"{v}\"");
        let named: Vec<&str> = gens
            .iter()
            .zip(names)
            .filter(|(&g, _)| g == v)
            .map(|(_, n)| n.as_str())
            .collect();
        if !named.is_empty() {
            write!(attrs, ", xlabel=\"{}\"", escape(&named.join(","))).unwrap();
        }
        writeln!(s, "  {v} [{attrs}];").unwrap();
    }
    for (g, name) in gens.iter().zip(names) {
        for v in 0..q.order() {
            let u = q.op(v, *g);
            if v <= u {
                writeln!(s, "  {v} -- {u} [label=\"{}\"];", escape(name)).unwrap();
            }
        }
    }
    s.push_str("}\n");
    s
}
