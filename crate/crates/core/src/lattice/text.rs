use std::fmt::Write as _;

use crate::parse::{lookup, parse_names, parse_table, ParseError, Sections};

use super::{Elem, FiniteIdealLattice, LatticeData};

/// Parses lattice source text:
///
/// ```text
/// elements: 0 a 1
/// leq: 0<a a<1        # covering or full pairs; chains a<b<c allowed
/// mul: 0*0=0 0*a=0 ...  # full table
/// top: 1
/// bottom: 0
/// ```
pub fn parse_lattice(text: &str) -> Result<LatticeData, ParseError> {
    let mut sections = Sections::parse(text, &["elements", "leq", "mul", "top", "bottom"])?;
    let elements = sections.require("elements")?;
    let names = parse_names(&elements, "element")?;
    if names.is_empty() {
        return Err(ParseError::new(elements.line, "a lattice needs at least one element"));
    }
    let mut pairs: Vec<(Elem, Elem)> = Vec::new();
    if let Some(leq) = sections.take("leq") {
        for tok in &leq.tokens {
            let chain: Vec<&str> = tok.text.split('<').collect();
            if chain.len() < 2 {
                return Err(ParseError::new(
                    tok.line,
                    format!("malformed order entry `{}`, expected `a<b`", tok.text),
                ));
            }
            let idx = chain
                .iter()
                .map(|n| lookup(&names, n, tok.line, "element"))
                .collect::<Result<Vec<_>, _>>()?;
            pairs.extend(idx.windows(2).map(|w| (w[0], w[1])));
        }
    }
    let mul = parse_table(&sections.require("mul")?, &names, '*', "mul")?;
    let top = sections.single("top")?;
    let top = lookup(&names, &top.text, top.line, "element")?;
    let bottom = sections.single("bottom")?;
    let bottom = lookup(&names, &bottom.text, bottom.line, "element")?;
    Ok(LatticeData::new(names, &pairs, mul, top, bottom))
}

/// Renders a lattice in the source format, with covering pairs for the order.
pub fn lattice_to_text(lattice: &FiniteIdealLattice) -> String {
    let mut out = String::new();
    let name = |a: Elem| lattice.name(a);
    let _ = writeln!(out, "elements: {}", lattice.names().join(" "));
    let covers: Vec<String> = lattice
        .covers()
        .into_iter()
        .map(|(a, b)| format!("{}<{}", name(a), name(b)))
        .collect();
    let _ = writeln!(out, "leq: {}", covers.join(" "));
    let _ = writeln!(out, "mul:");
    for a in lattice.elements() {
        let row: Vec<String> = lattice
            .elements()
            .map(|b| format!("{}*{}={}", name(a), name(b), name(lattice.mul(a, b))))
            .collect();
        let _ = writeln!(out, "  {}", row.join(" "));
    }
    let _ = writeln!(out, "top: {}", name(lattice.top()));
    let _ = writeln!(out, "bottom: {}", name(lattice.bottom()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const CHAIN: &str = "elements: 0 a 1\nleq: 0<a<1\n\
        mul: 0*0=0 0*a=0 0*1=0 a*0=0 a*a=a a*1=a 1*0=0 1*a=a 1*1=1\ntop: 1\nbottom: 0\n";

    #[test]
    fn chain_pairs_are_saturated() {
        let data = parse_lattice(CHAIN).unwrap();
        assert!(data.leq(0, 2));
        assert!(!data.leq(2, 0));
    }

    #[test]
    fn text_round_trip() {
        let l = FiniteIdealLattice::from_data(parse_lattice(CHAIN).unwrap()).unwrap();
        let again = FiniteIdealLattice::from_data(parse_lattice(&lattice_to_text(&l)).unwrap()).unwrap();
        assert_eq!(l, again);
    }

    #[test]
    fn missing_mul_entry_is_an_error() {
        let text = CHAIN.replace(" 1*1=1", "");
        let err = parse_lattice(&text).unwrap_err();
        assert!(err.message.contains("missing mul entry for 1*1"), "{err}");
    }

    #[test]
    fn unknown_name_reports_line() {
        let text = CHAIN.replace("top: 1", "top: q");
        let err = parse_lattice(&text).unwrap_err();
        assert_eq!(err.line, 4);
    }
}
