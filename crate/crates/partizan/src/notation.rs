//! Text grammar for game forms: a recursive-descent parser and a
//! deterministic printer.
//!
//! ```text
//! form  := term ("+" term)*
//! term  := brace | named
//! brace := "{" list "|" list "}"
//! list  := e | form ("," form)*
//! named := INT | "*" | "hat(" INT ")" | "ostar(" INT ")" | "zeta(" INT ")"
//!        | "adj(" form ")" | "conj(" form ")"
//! ```
//!
//! `INT` is a signed decimal integer denoting the integer form of that
//! value, `+` is disjunctive sum, an empty list is the atom with no
//! moves, and whitespace is insignificant. This grammar is the wire
//! format of the CLI and of every JSON report.

use rustc_hash::FxHashMap;

use crate::algebra::{adjoint, conjugate, sum};
use crate::arena::{Arena, FormId};
use crate::error::EngineError;
use crate::family::{hat, moves, ostar, zeta};

/// Why a parse failed, and where (byte offset into the input).
#[derive(Debug, thiserror::Error)]
#[error("parse error at offset {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Syntax(String),
    /// The text was well-formed but a construction failed, e.g. a family
    /// index outside its domain or an arena at capacity.
    #[error(transparent)]
    Engine(#[from] EngineError),
}

impl ParseError {
    /// True when the underlying failure is resource exhaustion rather
    /// than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(&self.kind, ParseErrorKind::Engine(e) if e.is_resource())
    }
}

const MAX_DEPTH: usize = 1024;

/// Parses `text` into an interned form.
pub fn parse(arena: &mut Arena, text: &str) -> Result<FormId, ParseError> {
    let mut p = Parser {
        src: text,
        pos: 0,
        depth: 0,
    };
    p.skip_ws();
    let g = p.form(arena)?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.syntax_here("unexpected trailing input"));
    }
    Ok(g)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn syntax_here(&self, msg: impl Into<String>) -> ParseError {
        ParseError {
            offset: self.pos,
            kind: ParseErrorKind::Syntax(msg.into()),
        }
    }

    fn engine_at(&self, offset: usize, err: EngineError) -> ParseError {
        ParseError {
            offset,
            kind: ParseErrorKind::Engine(err),
        }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += self.src[self.pos..].chars().next().unwrap().len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.syntax_here(format!("expected `{c}`")))
        }
    }

    fn form(&mut self, arena: &mut Arena) -> Result<FormId, ParseError> {
        if self.depth >= MAX_DEPTH {
            return Err(self.syntax_here("nesting too deep"));
        }
        self.depth += 1;
        let start = self.pos;
        let mut g = self.term(arena)?;
        loop {
            self.skip_ws();
            if !self.eat('+') {
                break;
            }
            self.skip_ws();
            let h = self.term(arena)?;
            g = sum(arena, g, h).map_err(|e| self.engine_at(start, e))?;
        }
        self.depth -= 1;
        Ok(g)
    }

    fn term(&mut self, arena: &mut Arena) -> Result<FormId, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some('{') => self.brace(arena),
            Some('*') => {
                self.pos += 1;
                let zero = arena.zero();
                arena
                    .intern(&[zero], &[zero])
                    .map_err(|e| self.engine_at(self.pos - 1, e))
            }
            Some(c) if c.is_ascii_digit() || c == '-' => {
                let start = self.pos;
                let n = self.integer()?;
                moves(arena, n).map_err(|e| self.engine_at(start, e))
            }
            Some(c) if c.is_ascii_lowercase() => self.named(arena),
            _ => Err(self.syntax_here("expected a form")),
        }
    }

    fn brace(&mut self, arena: &mut Arena) -> Result<FormId, ParseError> {
        let start = self.pos;
        self.expect('{')?;
        let left = self.list(arena)?;
        self.expect('|')?;
        let right = self.list(arena)?;
        self.expect('}')?;
        arena
            .intern(&left, &right)
            .map_err(|e| self.engine_at(start, e))
    }

    fn list(&mut self, arena: &mut Arena) -> Result<Vec<FormId>, ParseError> {
        let mut out = Vec::new();
        self.skip_ws();
        if matches!(self.peek(), Some('|') | Some('}')) {
            return Ok(out);
        }
        loop {
            out.push(self.form(arena)?);
            self.skip_ws();
            if !self.eat(',') {
                return Ok(out);
            }
        }
    }

    fn named(&mut self, arena: &mut Arena) -> Result<FormId, ParseError> {
        let start = self.pos;
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_lowercase())
            .unwrap_or(rest.len());
        let name = &rest[..len];
        self.pos += len;
        self.skip_ws();
        self.expect('(')?;
        let g = match name {
            "hat" | "ostar" | "zeta" => {
                self.skip_ws();
                let n = self.integer()?;
                match name {
                    "hat" => hat(arena, n),
                    "ostar" => ostar(arena, n),
                    _ => zeta(arena, n),
                }
                .map_err(|e| self.engine_at(start, e))?
            }
            "adj" | "conj" => {
                self.skip_ws();
                let inner = self.form(arena)?;
                if name == "adj" {
                    adjoint(arena, inner)
                } else {
                    conjugate(arena, inner)
                }
                .map_err(|e| self.engine_at(start, e))?
            }
            _ => {
                return Err(ParseError {
                    offset: start,
                    kind: ParseErrorKind::Syntax(format!("unknown name `{name}`")),
                })
            }
        };
        self.skip_ws();
        self.expect(')')?;
        Ok(g)
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        self.eat('-');
        let rest = &self.src[self.pos..];
        let digits = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        if digits == 0 {
            return Err(self.syntax_here("expected digits"));
        }
        self.pos += digits;
        self.src[start..self.pos]
            .parse::<i64>()
            .map_err(|_| ParseError {
                offset: start,
                kind: ParseErrorKind::Syntax("integer out of range".into()),
            })
    }
}

/// How [`render`] prints the zero form.
#[derive(Debug, Clone, Copy, Default)]
pub struct RenderOptions {
    /// Print `{|}` instead of the default `0`.
    pub zero_as_braces: bool,
}

/// Canonical text for `g`: integers in decimal, `{0|0}` as `*`, braces
/// otherwise, with options ordered by (birthday, text) so that output
/// does not depend on arena insertion order.
///
/// Panics if `g` was not issued by `arena`.
pub fn render(arena: &Arena, g: FormId) -> String {
    render_with(arena, g, RenderOptions::default())
}

pub fn render_with(arena: &Arena, g: FormId, opts: RenderOptions) -> String {
    let mut memo = FxHashMap::default();
    render_id(arena, g, opts, &mut memo)
}

fn render_id(
    arena: &Arena,
    g: FormId,
    opts: RenderOptions,
    memo: &mut FxHashMap<FormId, String>,
) -> String {
    if let Some(s) = memo.get(&g) {
        return s.clone();
    }
    let s = if let Some(n) = as_integer(arena, g) {
        if n == 0 && opts.zero_as_braces {
            "{|}".to_string()
        } else {
            n.to_string()
        }
    } else if is_star(arena, g) {
        "*".to_string()
    } else {
        let mut out = String::from("{");
        out.push_str(&rendered_list(arena, arena.left(g), opts, memo));
        out.push('|');
        out.push_str(&rendered_list(arena, arena.right(g), opts, memo));
        out.push('}');
        out
    };
    memo.insert(g, s.clone());
    s
}

fn rendered_list(
    arena: &Arena,
    options: &[FormId],
    opts: RenderOptions,
    memo: &mut FxHashMap<FormId, String>,
) -> String {
    let mut rendered: Vec<(u32, String)> = options
        .iter()
        .map(|&o| (arena.birthday(o), render_id(arena, o, opts, memo)))
        .collect();
    rendered.sort();
    let texts: Vec<String> = rendered.into_iter().map(|(_, s)| s).collect();
    texts.join(",")
}

fn is_star(arena: &Arena, g: FormId) -> bool {
    arena.left(g) == [arena.zero()] && arena.right(g) == [arena.zero()]
}

/// Recognizes the integer forms: `Some(n)` iff `g` is a bare chain of
/// `|n|` moves for one player.
pub fn as_integer(arena: &Arena, g: FormId) -> Option<i64> {
    let zero = arena.zero();
    if g == zero {
        return Some(0);
    }
    if arena.right(g).is_empty() {
        let mut n = 0i64;
        let mut cur = g;
        while cur != zero {
            if !arena.right(cur).is_empty() || arena.left(cur).len() != 1 {
                return None;
            }
            n += 1;
            cur = arena.left(cur)[0];
        }
        Some(n)
    } else if arena.left(g).is_empty() {
        let mut n = 0i64;
        let mut cur = g;
        while cur != zero {
            if !arena.left(cur).is_empty() || arena.right(cur).len() != 1 {
                return None;
            }
            n -= 1;
            cur = arena.right(cur)[0];
        }
        Some(n)
    } else {
        None
    }
}
