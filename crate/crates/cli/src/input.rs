//! The `.quiv` input format.
//!
//! ```text
//! FIELD Q            # or: FIELD F <prime>
//! VERTICES 1 2 3
//! ARROW a 1 2
//! ARROW b 2 3
//! RELATIONS ALL2     # or one `RELATION a b` per line
//! MAXDEG 6           # optional default for `hh --max`
//! ```

use std::collections::HashMap;

use hhquiver::algebra::{Algebra, RelationSet};
use hhquiver::quiver::Quiver;

/// Prime fields the binary is compiled for.
pub const SUPPORTED_PRIMES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 101, 32003];

pub const DEFAULT_MAX_DEGREE: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct InputSpec {
    pub algebra: Algebra,
    pub field: Field,
    pub max_degree: usize,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum InputError {
    #[error("{line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: unknown label `{label}`")]
    UnknownLabel { line: usize, col: usize, label: String },
    #[error("{line}:{col}: relation `{first} {second}` is not composable")]
    NonComposableRelation { line: usize, col: usize, first: String, second: String },
    #[error("the algebra is not finite-dimensional: paths through arrow `{0}` never vanish")]
    NonAdmissible(String),
}

#[derive(Clone, Copy)]
struct Token<'a> {
    line: usize,
    col: usize,
    text: &'a str,
}

fn tokens(line_no: usize, line: &str) -> Vec<Token<'_>> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token { line: line_no, col: content[..s].chars().count() + 1, text: &content[s..i] });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn parse_err<T>(t: &Token<'_>, msg: impl Into<String>) -> Result<T, InputError> {
    Err(InputError::Parse { line: t.line, col: t.col, msg: msg.into() })
}

fn expect_args<'a>(head: &Token<'a>, args: &[Token<'a>], n: usize) -> Result<(), InputError> {
    if args.len() != n {
        return parse_err(head, format!("{} takes {n} argument(s), found {}", head.text, args.len()));
    }
    Ok(())
}

fn parse_number<T: std::str::FromStr>(t: &Token<'_>, what: &str) -> Result<T, InputError> {
    t.text.parse().or_else(|_| parse_err(t, format!("expected {what}, found `{}`", t.text)))
}

pub fn parse_input(text: &str) -> Result<InputSpec, InputError> {
    let mut field: Option<Field> = None;
    let mut vertices: Option<Vec<Token<'_>>> = None;
    let mut arrows: Vec<[Token<'_>; 3]> = Vec::new();
    let mut all2: Option<Token<'_>> = None;
    let mut relations: Vec<[Token<'_>; 2]> = Vec::new();
    let mut max_degree = None;
    let mut last_line = 1;

    for (i, line) in text.lines().enumerate() {
        last_line = i + 1;
        let toks = tokens(i + 1, line);
        let Some((head, args)) = toks.split_first() else {
            continue;
        };
        match head.text {
            "FIELD" => {
                if field.is_some() {
                    return parse_err(head, "FIELD given twice");
                }
                field = Some(match args {
                    [q] if q.text == "Q" => Field::Rational,
                    [f, p] if f.text == "F" => {
                        let p: u64 = parse_number(p, "a prime")?;
                        if !SUPPORTED_PRIMES.contains(&p) {
                            return parse_err(&args[1], format!("unsupported field F{p}; supported primes: {SUPPORTED_PRIMES:?}"));
                        }
                        Field::Prime(p)
                    }
                    _ => return parse_err(head, "expected `FIELD Q` or `FIELD F <prime>`"),
                });
            }
            "VERTICES" => {
                if vertices.is_some() {
                    return parse_err(head, "VERTICES given twice");
                }
                if args.is_empty() {
                    return parse_err(head, "VERTICES needs at least one vertex");
                }
                vertices = Some(args.to_vec());
            }
            "ARROW" => {
                expect_args(head, args, 3)?;
                arrows.push([args[0], args[1], args[2]]);
            }
            "RELATIONS" => {
                expect_args(head, args, 1)?;
                if args[0].text != "ALL2" {
                    return parse_err(&args[0], "expected `RELATIONS ALL2`");
                }
                if all2.is_some() {
                    return parse_err(head, "RELATIONS given twice");
                }
                all2 = Some(*head);
            }
            "RELATION" => {
                expect_args(head, args, 2)?;
                relations.push([args[0], args[1]]);
            }
            "MAXDEG" => {
                expect_args(head, args, 1)?;
                max_degree = Some(parse_number(&args[0], "a degree")?);
            }
            other => return parse_err(head, format!("unknown directive `{other}`")),
        }
    }

    let Some(vertices) = vertices else {
        return Err(InputError::Parse { line: last_line, col: 1, msg: "missing VERTICES".into() });
    };
    if let (Some(_), Some(first)) = (all2, relations.first()) {
        return parse_err(&first[0], "RELATION lines cannot be combined with RELATIONS ALL2");
    }

    let mut seen: HashMap<&str, ()> = HashMap::new();
    for t in vertices.iter().chain(arrows.iter().map(|a| &a[0])) {
        if seen.insert(t.text, ()).is_some() {
            return parse_err(t, format!("duplicate label `{}`", t.text));
        }
    }
    let vertex_set: HashMap<&str, ()> = vertices.iter().map(|t| (t.text, ())).collect();
    for a in &arrows {
        for t in &a[1..] {
            if !vertex_set.contains_key(t.text) {
                return Err(InputError::UnknownLabel { line: t.line, col: t.col, label: t.text.to_owned() });
            }
        }
    }
    let quiver = Quiver::new(vertices.iter().map(|t| t.text), arrows.iter().map(|a| (a[0].text, a[1].text, a[2].text)))
        .map_err(|e| InputError::Parse { line: vertices[0].line, col: vertices[0].col, msg: e.to_string() })?;

    let rel = if all2.is_some() {
        RelationSet::all_length_two(&quiver)
    } else {
        let mut pairs = Vec::new();
        for [a, b] in &relations {
            let lookup = |t: &Token<'_>| {
                quiver
                    .arrow(t.text)
                    .map_err(|_| InputError::UnknownLabel { line: t.line, col: t.col, label: t.text.to_owned() })
            };
            let (x, y) = (lookup(a)?, lookup(b)?);
            if quiver.target(x) != quiver.source(y) {
                return Err(InputError::NonComposableRelation {
                    line: a.line,
                    col: a.col,
                    first: a.text.to_owned(),
                    second: b.text.to_owned(),
                });
            }
            if pairs.contains(&(x, y)) {
                return parse_err(a, format!("duplicate relation `{} {}`", a.text, b.text));
            }
            pairs.push((x, y));
        }
        RelationSet::new(&quiver, pairs).expect("relations checked above")
    };
    let algebra = Algebra::new(quiver, rel).map_err(|e| match e {
        hhquiver::Error::NonAdmissible(a) => InputError::NonAdmissible(a),
        other => InputError::Parse { line: 1, col: 1, msg: other.to_string() },
    })?;
    Ok(InputSpec { algebra, field: field.unwrap_or(Field::Rational), max_degree: max_degree.unwrap_or(DEFAULT_MAX_DEGREE) })
}
