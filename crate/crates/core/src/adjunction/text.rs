use crate::lattice::FiniteIdealLattice;
use crate::parse::{lookup, parse_braced, ParseError, Sections, Token};
use crate::pointset::PointSet;
use crate::topology::FiniteSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DatumKind {
    /// `delta:` entries, open sets.
    Spectrum,
    /// `sigma:` entries, closed sets.
    Support,
}

/// Parsed datum source text, before names are resolved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DatumText {
    pub lattice_path: Option<String>,
    pub space_path: Option<String>,
    pub kind: DatumKind,
    /// `(element name, point names, line)`.
    pub entries: Vec<(String, Vec<String>, usize)>,
}

/// Parses `lattice: path`, `space: path` and either `delta:` or `sigma:`
/// entries of the form `a={p,q}`.
pub fn parse_datum(text: &str) -> Result<DatumText, ParseError> {
    let mut sections = Sections::parse(text, &["lattice", "space", "delta", "sigma"])?;
    let path = |s: &mut Sections, key: &str| -> Result<Option<String>, ParseError> {
        if s.peek(key) {
            s.single(key).map(|t| Some(t.text))
        } else {
            Ok(None)
        }
    };
    let lattice_path = path(&mut sections, "lattice")?;
    let space_path = path(&mut sections, "space")?;
    let (kind, section) = match (sections.take("delta"), sections.take("sigma")) {
        (Some(d), None) => (DatumKind::Spectrum, d),
        (None, Some(s)) => (DatumKind::Support, s),
        (Some(_), Some(s)) => {
            return Err(ParseError::new(s.line, "a datum has either `delta:` or `sigma:`, not both"))
        }
        (None, None) => return Err(ParseError::new(0, "missing section `delta` or `sigma`")),
    };
    let mut entries = Vec::with_capacity(section.tokens.len());
    for tok in &section.tokens {
        let (name, set) = tok.text.split_once('=').ok_or_else(|| {
            ParseError::new(tok.line, format!("malformed entry `{}`, expected `a={{p,q}}`", tok.text))
        })?;
        let set_tok = Token {
            text: set.to_string(),
            line: tok.line,
        };
        let points = parse_braced(&set_tok)?.into_iter().map(str::to_string).collect();
        entries.push((name.to_string(), points, tok.line));
    }
    Ok(DatumText {
        lattice_path,
        space_path,
        kind,
        entries,
    })
}

/// Resolves entries against a lattice and a space. Every element must be
/// assigned exactly once.
pub fn resolve_assignment(
    datum: &DatumText,
    lattice: &FiniteIdealLattice,
    space: &FiniteSpace,
) -> Result<Vec<PointSet>, ParseError> {
    let mut sets: Vec<Option<PointSet>> = vec![None; lattice.len()];
    for (name, points, line) in &datum.entries {
        let a = lookup(lattice.names(), name, *line, "element")?;
        if sets[a].is_some() {
            return Err(ParseError::new(*line, format!("element `{name}` assigned twice")));
        }
        let set = points
            .iter()
            .map(|p| lookup(space.names(), p, *line, "point"))
            .collect::<Result<PointSet, _>>()?;
        sets[a] = Some(set);
    }
    sets.iter()
        .enumerate()
        .map(|(a, s)| s.ok_or_else(|| ParseError::new(0, format!("element `{}` is not assigned", lattice.name(a)))))
        .collect()
}
