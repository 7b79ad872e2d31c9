//! Shared reader for the section-based text formats (`key: tok tok ...`).
//!
//! A section starts on a line of the form `key:` and runs until the next
//! section header. Tokens are whitespace separated, except that whitespace
//! inside `{...}` does not split. `#` starts a comment.

use std::collections::BTreeMap;

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub text: String,
    pub line: usize,
}

#[derive(Clone, Debug)]
pub(crate) struct Section {
    pub line: usize,
    pub tokens: Vec<Token>,
}

/// Characters that may not appear in element, point or object names.
pub const RESERVED: &[char] = &['<', '*', '=', '{', '}', ',', '#', ':', '+'];

pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty() && !name.chars().any(|c| c.is_whitespace() || RESERVED.contains(&c))
}

pub(crate) struct Sections {
    map: BTreeMap<String, Section>,
}

impl Sections {
    pub fn parse(text: &str, known: &[&str]) -> Result<Self, ParseError> {
        let mut map: BTreeMap<String, Section> = BTreeMap::new();
        let mut current: Option<String> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            let mut rest = content.trim();
            if rest.is_empty() {
                continue;
            }
            if let Some((key, tail)) = split_header(rest) {
                if !known.contains(&key) {
                    return Err(ParseError::new(
                        line,
                        format!("unknown section `{key}` (expected one of: {})", known.join(", ")),
                    ));
                }
                if map.contains_key(key) {
                    return Err(ParseError::new(line, format!("duplicate section `{key}`")));
                }
                map.insert(
                    key.to_string(),
                    Section {
                        line,
                        tokens: Vec::new(),
                    },
                );
                current = Some(key.to_string());
                rest = tail;
            }
            let Some(key) = current.as_ref() else {
                return Err(ParseError::new(line, "content before the first section header"));
            };
            let section = map.get_mut(key).expect("current section exists");
            for text in tokenize(rest, line)? {
                section.tokens.push(Token { text, line });
            }
        }
        Ok(Sections { map })
    }

    pub fn peek(&self, key: &str) -> bool {
        self.map.contains_key(key)
    }

    pub fn take(&mut self, key: &str) -> Option<Section> {
        self.map.remove(key)
    }

    pub fn require(&mut self, key: &str) -> Result<Section, ParseError> {
        self.take(key)
            .ok_or_else(|| ParseError::new(0, format!("missing section `{key}`")))
    }

    /// A section that must hold exactly one token.
    pub fn single(&mut self, key: &str) -> Result<Token, ParseError> {
        let section = self.require(key)?;
        let line = section.line;
        let mut tokens = section.tokens;
        match tokens.len() {
            1 => Ok(tokens.pop().unwrap()),
            0 => Err(ParseError::new(line, format!("section `{key}` is empty"))),
            _ => Err(ParseError::new(
                line,
                format!("section `{key}` takes a single value"),
            )),
        }
    }
}

fn split_header(line: &str) -> Option<(&str, &str)> {
    let colon = line.find(':')?;
    let key = &line[..colon];
    let ok = !key.is_empty()
        && key
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-');
    ok.then(|| (key, &line[colon + 1..]))
}

fn tokenize(text: &str, line: usize) -> Result<Vec<String>, ParseError> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut depth = 0usize;
    for c in text.chars() {
        match c {
            '{' => {
                depth += 1;
                current.push(c);
            }
            '}' => {
                if depth == 0 {
                    return Err(ParseError::new(line, "unbalanced `}`"));
                }
                depth -= 1;
                current.push(c);
            }
            c if c.is_whitespace() && depth == 0 => {
                if !current.is_empty() {
                    tokens.push(std::mem::take(&mut current));
                }
            }
            c if c.is_whitespace() => {}
            c => current.push(c),
        }
    }
    if depth != 0 {
        return Err(ParseError::new(line, "unbalanced `{`"));
    }
    if !current.is_empty() {
        tokens.push(current);
    }
    Ok(tokens)
}

/// Parses `{a,b,c}` (or `{}`) into its member names.
pub(crate) fn parse_braced(token: &Token) -> Result<Vec<&str>, ParseError> {
    let inner = token
        .text
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| {
            ParseError::new(token.line, format!("expected a set `{{...}}`, found `{}`", token.text))
        })?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|name| {
            if is_valid_name(name) {
                Ok(name)
            } else {
                Err(ParseError::new(token.line, format!("invalid name `{name}` in set")))
            }
        })
        .collect()
}

/// Names of a section, checked for validity and uniqueness.
pub(crate) fn parse_names(section: &Section, what: &str) -> Result<Vec<String>, ParseError> {
    let mut names: Vec<String> = Vec::with_capacity(section.tokens.len());
    for tok in &section.tokens {
        if !is_valid_name(&tok.text) {
            return Err(ParseError::new(tok.line, format!("invalid {what} name `{}`", tok.text)));
        }
        if names.contains(&tok.text) {
            return Err(ParseError::new(tok.line, format!("duplicate {what} `{}`", tok.text)));
        }
        names.push(tok.text.clone());
    }
    Ok(names)
}

pub(crate) fn lookup(names: &[String], name: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| ParseError::new(line, format!("unknown {what} `{name}`")))
}

/// Parses a full binary table given as `a<op>b=c` tokens.
pub(crate) fn parse_table(
    section: &Section,
    names: &[String],
    op: char,
    what: &str,
) -> Result<Vec<usize>, ParseError> {
    let n = names.len();
    let mut table: Vec<Option<usize>> = vec![None; n * n];
    for tok in &section.tokens {
        let malformed = || ParseError::new(tok.line, format!("malformed {what} entry `{}`, expected `a{op}b=c`", tok.text));
        let (lhs, value) = tok.text.split_once('=').ok_or_else(malformed)?;
        let (a, b) = lhs.split_once(op).ok_or_else(malformed)?;
        let a = lookup(names, a, tok.line, "element")?;
        let b = lookup(names, b, tok.line, "element")?;
        let c = lookup(names, value, tok.line, "element")?;
        match table[a * n + b] {
            Some(prev) if prev != c => {
                return Err(ParseError::new(
                    tok.line,
                    format!("conflicting {what} entries for {}{op}{}", names[a], names[b]),
                ))
            }
            _ => table[a * n + b] = Some(c),
        }
    }
    table
        .iter()
        .enumerate()
        .map(|(i, entry)| {
            entry.ok_or_else(|| {
                ParseError::new(
                    section.line,
                    format!("missing {what} entry for {}{op}{}", names[i / n], names[i % n]),
                )
            })
        })
        .collect()
}
