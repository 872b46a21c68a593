//! Graphviz export of the Hasse diagrams. Node labels are minimal generating
//! sets; in the algebraic-preorder diagram irreducible elements are boxed and
//! idempotents are filled gray. Output is byte-deterministic.

use std::fmt::Write;

use crate::error::Error;
use crate::monoid::{ClassMonoid, Classification, Order};

fn label(gens: &[u64]) -> String {
    let parts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Renders the covering relations of the chosen order as a DOT digraph with
/// edges pointing from covered to covering element.
pub fn hasse_dot(
    monoid: &ClassMonoid,
    order: Order,
    classifications: Option<&[Classification]>,
) -> Result<String, Error> {
    let edges = monoid.hasse(order)?;
    let mut out = String::new();
    out.push_str("digraph ideal_class_monoid {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=ellipse];\n");
    for (i, ideal) in monoid.ideals().iter().enumerate() {
        let mut attrs = format!("label=\"{}\"", label(ideal.min_generators()));
        if order == Order::Preceq {
            if let Some(cls) = classifications {
                if cls[i].irreducible {
                    attrs.push_str(", shape=box");
                }
                if cls[i].idempotent {
                    attrs.push_str(", style=filled, fillcolor=gray");
                }
            }
        }
        writeln!(out, "  {i} [{attrs}];").expect("write to string");
    }
    for (a, b) in edges {
        writeln!(out, "  {a} -> {b};").expect("write to string");
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::NumericalSemigroup;

    #[test]
    fn small_diagram_is_stable() {
        let s = NumericalSemigroup::from_generators(&[2, 5]).unwrap();
        let m = ClassMonoid::with_table(&s);
        let cls = m.classify().unwrap();
        let dot = hasse_dot(&m, Order::Preceq, Some(&cls)).unwrap();
        let expected = "digraph ideal_class_monoid {\n\
                        \x20 rankdir=BT;\n\
                        \x20 node [shape=ellipse];\n\
                        \x20 0 [label=\"{0}\", style=filled, fillcolor=gray];\n\
                        \x20 1 [label=\"{0,3}\", shape=box, style=filled, fillcolor=gray];\n\
                        \x20 2 [label=\"{0,1}\", shape=box, style=filled, fillcolor=gray];\n\
                        \x20 0 -> 1;\n\
                        \x20 1 -> 2;\n\
                        }\n";
        assert_eq!(dot, expected);
    }

    #[test]
    fn preceq_diagram_marks_idempotents() {
        let s = NumericalSemigroup::from_generators(&[4, 6, 9]).unwrap();
        let m = ClassMonoid::with_table(&s);
        let cls = m.classify().unwrap();
        let dot = hasse_dot(&m, Order::Preceq, Some(&cls)).unwrap();
        assert_eq!(dot.matches("label=").count(), 17);
        assert_eq!(dot.matches("fillcolor=gray").count(), 12);
    }

    #[test]
    fn naturals_diagram_is_one_node() {
        let m = ClassMonoid::with_table(&NumericalSemigroup::naturals());
        let dot = hasse_dot(&m, Order::Inclusion, None).unwrap();
        assert!(dot.contains("0 [label=\"{0}\"];"));
        assert!(!dot.contains("->"));
    }
}
