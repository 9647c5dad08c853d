//! Plain-text algebra files.
//!
//! ```text
//! semiring <name>            | semimodule <name> over <file>
//! order N
//! one K                      (semirings only)
//! add
//! N rows of N indices
//! mul                        | action
//! N rows of N indices        | |S| rows of N indices
//! ```
//!
//! `#` starts a comment. The base file of a semimodule is resolved relative
//! to the directory of the file naming it.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::algebra::{
    validate_semimodule, validate_semiring, FiniteSemimodule, FiniteSemiring, RawSemimodule,
    RawSemiring,
};
use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {col}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraKind {
    Semiring {
        one: usize,
        mul: Vec<Vec<usize>>,
    },
    Semimodule {
        base: String,
        action: Vec<Vec<usize>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: String,
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub kind: AlgebraKind,
}

struct Token<'a> {
    text: &'a str,
    col: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

fn lex(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (pos, ch) in content
                .char_indices()
                .chain(std::iter::once((content.len(), ' ')))
            {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(pos),
                    (true, Some(s)) => {
                        tokens.push(Token {
                            text: &content[s..pos],
                            col: content[..s].chars().count() + 1,
                        });
                        start = None;
                    }
                    _ => {}
                }
            }
            (!tokens.is_empty()).then_some(Line {
                number: i + 1,
                tokens,
            })
        })
        .collect()
}

struct Parser<'a> {
    lines: Vec<Line<'a>>,
    next: usize,
    last_line: usize,
}

impl<'a> Parser<'a> {
    fn err(line: usize, col: usize, reason: impl Into<String>) -> ParseError {
        ParseError {
            line,
            col,
            reason: reason.into(),
        }
    }

    fn line(&mut self, what: &str) -> Result<&Line<'a>, ParseError> {
        let line = self.lines.get(self.next).ok_or_else(|| {
            Self::err(
                self.last_line + 1,
                1,
                format!("unexpected end of file, expected {what}"),
            )
        })?;
        self.next += 1;
        Ok(line)
    }

    fn keyword(&mut self, word: &str) -> Result<(), ParseError> {
        let line = self.line(&format!("`{word}`"))?;
        let t = &line.tokens[0];
        if t.text != word {
            return Err(Self::err(
                line.number,
                t.col,
                format!("expected `{word}`, found `{}`", t.text),
            ));
        }
        if let Some(extra) = line.tokens.get(1) {
            return Err(Self::err(
                line.number,
                extra.col,
                format!("unexpected `{}` after `{word}`", extra.text),
            ));
        }
        Ok(())
    }

    fn keyed_number(&mut self, word: &str) -> Result<usize, ParseError> {
        let line = self.line(&format!("`{word} <n>`"))?;
        let t = &line.tokens[0];
        if t.text != word {
            return Err(Self::err(
                line.number,
                t.col,
                format!("expected `{word}`, found `{}`", t.text),
            ));
        }
        if line.tokens.len() != 2 {
            let col = line.tokens.get(2).map_or(t.col + t.text.len(), |x| x.col);
            return Err(Self::err(
                line.number,
                col,
                format!("`{word}` takes exactly one number"),
            ));
        }
        number(line.number, &line.tokens[1])
    }

    fn row(&mut self, width: usize, bound: usize, what: &str) -> Result<Vec<usize>, ParseError> {
        let line = self.line(what)?;
        if line.tokens.len() != width {
            let col = line.tokens.get(width).map_or(1, |t| t.col);
            return Err(Self::err(
                line.number,
                col,
                format!("row has {} entries, expected {width}", line.tokens.len()),
            ));
        }
        line.tokens
            .iter()
            .map(|t| {
                let v = number(line.number, t)?;
                if v >= bound {
                    return Err(Self::err(
                        line.number,
                        t.col,
                        format!("entry {v} is outside 0..{bound}"),
                    ));
                }
                Ok(v)
            })
            .collect()
    }

    fn rows(
        &mut self,
        count: usize,
        width: usize,
        what: &str,
    ) -> Result<Vec<Vec<usize>>, ParseError> {
        (0..count).map(|_| self.row(width, width, what)).collect()
    }
}

fn number(line: usize, t: &Token<'_>) -> Result<usize, ParseError> {
    t.text.parse().map_err(|_| {
        Parser::err(
            line,
            t.col,
            format!("expected a non-negative integer, found `{}`", t.text),
        )
    })
}

pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile, ParseError> {
    let lines = lex(text);
    let last_line = text.lines().count();
    let mut p = Parser {
        lines,
        next: 0,
        last_line,
    };
    let header = p.line("a `semiring` or `semimodule` header")?;
    let (number, tokens) = (header.number, &header.tokens);
    let head = &tokens[0];
    enum Head {
        Semiring,
        Semimodule(String),
    }
    let (name, head_kind) = match head.text {
        "semiring" => {
            if tokens.len() != 2 {
                let col = tokens.get(2).map_or(head.col + head.text.len(), |t| t.col);
                return Err(Parser::err(number, col, "expected `semiring <name>`"));
            }
            (tokens[1].text.to_string(), Head::Semiring)
        }
        "semimodule" => {
            if tokens.len() != 4 || tokens[2].text != "over" {
                let col = tokens.get(2).map_or(head.col + head.text.len(), |t| t.col);
                return Err(Parser::err(
                    number,
                    col,
                    "expected `semimodule <name> over <file>`",
                ));
            }
            (
                tokens[1].text.to_string(),
                Head::Semimodule(tokens[3].text.to_string()),
            )
        }
        other => {
            return Err(Parser::err(
                number,
                head.col,
                format!("expected `semiring` or `semimodule`, found `{other}`"),
            ));
        }
    };
    let order = p.keyed_number("order")?;
    if order == 0 {
        let line = &p.lines[p.next - 1];
        return Err(Parser::err(
            line.number,
            line.tokens[1].col,
            "order must be positive",
        ));
    }
    let kind = match head_kind {
        Head::Semiring => {
            let one = p.keyed_number("one")?;
            if one >= order {
                let line = &p.lines[p.next - 1];
                return Err(Parser::err(
                    line.number,
                    line.tokens[1].col,
                    format!("one = {one} is outside 0..{order}"),
                ));
            }
            p.keyword("add")?;
            let add = p.rows(order, order, "an addition row")?;
            p.keyword("mul")?;
            let mul = p.rows(order, order, "a multiplication row")?;
            (add, AlgebraKind::Semiring { one, mul })
        }
        Head::Semimodule(base) => {
            p.keyword("add")?;
            let add = p.rows(order, order, "an addition row")?;
            p.keyword("action")?;
            let mut action = Vec::new();
            while p.next < p.lines.len() {
                action.push(p.row(order, order, "an action row")?);
            }
            if action.is_empty() {
                return Err(Parser::err(
                    last_line + 1,
                    1,
                    "unexpected end of file, expected an action row",
                ));
            }
            (add, AlgebraKind::Semimodule { base, action })
        }
    };
    if let Some(line) = p.lines.get(p.next) {
        return Err(Parser::err(
            line.number,
            line.tokens[0].col,
            "unexpected content after the last table",
        ));
    }
    let (add, kind) = kind;
    Ok(AlgebraFile {
        name,
        order,
        add,
        kind,
    })
}

fn write_rows(out: &mut String, rows: &[Vec<usize>]) {
    for row in rows {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
}

impl AlgebraFile {
    /// Canonical text: single spaces, no comments, trailing newline.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.kind {
            AlgebraKind::Semiring { one, mul } => {
                let _ = writeln!(
                    out,
                    "semiring {}\norder {}\none {}\nadd",
                    self.name, self.order, one
                );
                write_rows(&mut out, &self.add);
                out.push_str("mul\n");
                write_rows(&mut out, mul);
            }
            AlgebraKind::Semimodule { base, action } => {
                let _ = writeln!(
                    out,
                    "semimodule {} over {}\norder {}\nadd",
                    self.name, base, self.order
                );
                write_rows(&mut out, &self.add);
                out.push_str("action\n");
                write_rows(&mut out, action);
            }
        }
        out
    }

    pub fn from_semiring(name: &str, s: &FiniteSemiring) -> Self {
        let raw = s.to_raw();
        AlgebraFile {
            name: name.to_string(),
            order: s.order(),
            add: raw.add,
            kind: AlgebraKind::Semiring {
                one: raw.one,
                mul: raw.mul,
            },
        }
    }

    pub fn from_semimodule(name: &str, base: &str, m: &FiniteSemimodule) -> Self {
        let raw = m.to_raw();
        AlgebraFile {
            name: name.to_string(),
            order: m.order(),
            add: raw.add,
            kind: AlgebraKind::Semimodule {
                base: base.to_string(),
                action: raw.action,
            },
        }
    }
}

/// A validated object read from disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Algebra {
    Semiring(FiniteSemiring),
    Semimodule(FiniteSemimodule),
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("{path}: {error}")]
    Parse { path: PathBuf, error: ParseError },
    #[error("{path}: {error}")]
    Invalid { path: PathBuf, error: Error },
}

pub fn algebra_from_file(
    file: &AlgebraFile,
    base: Option<&Arc<FiniteSemiring>>,
) -> Result<Algebra, Error> {
    match &file.kind {
        AlgebraKind::Semiring { one, mul } => {
            Ok(Algebra::Semiring(validate_semiring(&RawSemiring {
                add: file.add.clone(),
                mul: mul.clone(),
                one: *one,
            })?))
        }
        AlgebraKind::Semimodule { action, .. } => {
            let base = base.ok_or_else(|| {
                Error::InvalidArgument("a semimodule needs its base semiring".into())
            })?;
            Ok(Algebra::Semimodule(validate_semimodule(
                base,
                &RawSemimodule {
                    add: file.add.clone(),
                    action: action.clone(),
                },
            )?))
        }
    }
}

fn read(path: &Path) -> Result<AlgebraFile, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|e| LoadError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    parse_algebra_file(&text).map_err(|error| LoadError::Parse {
        path: path.to_path_buf(),
        error,
    })
}

/// Reads, parses and validates a file, following a semimodule's base reference.
pub fn load(path: &Path) -> Result<Algebra, LoadError> {
    let file = read(path)?;
    let invalid = |p: &Path| {
        let p = p.to_path_buf();
        move |error| LoadError::Invalid { path: p, error }
    };
    let base = match &file.kind {
        AlgebraKind::Semiring { .. } => None,
        AlgebraKind::Semimodule { base, .. } => {
            let base_path = path.parent().unwrap_or(Path::new("")).join(base);
            let base_file = read(&base_path)?;
            match algebra_from_file(&base_file, None).map_err(invalid(&base_path))? {
                Algebra::Semiring(s) => Some(Arc::new(s)),
                Algebra::Semimodule(_) => {
                    return Err(LoadError::Invalid {
                        path: base_path,
                        error: Error::InvalidArgument(
                            "the base of a semimodule must be a semiring file".into(),
                        ),
                    })
                }
            }
        }
    };
    algebra_from_file(&file, base.as_ref()).map_err(invalid(path))
}
