//! Graphviz output for lattice Hasse diagrams and specialization orders.

use std::fmt::Write as _;

use crate::lattice::FiniteIdealLattice;
use crate::topology::FiniteSpace;

fn quote(name: &str) -> String {
    let mut out = String::with_capacity(name.len() + 2);
    out.push('"');
    for c in name.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

fn digraph(title: &str, names: &[String], edges: &[(usize, usize)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(title));
    let _ = writeln!(out, "  rankdir=BT;");
    for name in names {
        let _ = writeln!(out, "  {};", quote(name));
    }
    for &(a, b) in edges {
        let _ = writeln!(out, "  {} -> {};", quote(&names[a]), quote(&names[b]));
    }
    out.push_str("}\n");
    out
}

/// Covering pairs, drawn from the smaller element upward.
pub fn hasse_dot(lattice: &FiniteIdealLattice) -> String {
    digraph("hasse", lattice.names(), &lattice.covers())
}

/// Edges `y -> x` for `y` in the closure of `x`, with edges implied by a
/// third point (of a different closure) removed. Closed points sit at the bottom.
pub fn specialization_dot(space: &FiniteSpace) -> String {
    let n = space.len();
    let cl: Vec<_> = (0..n).map(|x| space.closure(x)).collect();
    let mut edges = Vec::new();
    for (x, y) in space.specialization_edges() {
        let implied = (0..n).any(|z| {
            cl[z] != cl[x] && cl[z] != cl[y] && cl[z].contains(y) && cl[z].is_subset(cl[x])
        });
        if !implied {
            edges.push((y, x));
        }
    }
    edges.sort_unstable();
    digraph("specialization", space.names(), &edges)
}
