//! Line-oriented text format.
//!
//! ```text
//! fatgraph
//! inf 2
//! fin 4 4 4
//! piece 0 rect z0
//! piece 1 gpoly c1
//! piece 2 poly c1 z0 Z0
//! glue 0.1 2.1
//! ```
//!
//! `fin` is omitted when there are no finite-order generators. `#` starts a
//! comment. Serialization lists pieces in index order and gluings sorted,
//! smaller endpoint first.

use std::fmt::Write as _;

use super::{EdgeId, Fatgraph, Piece};
use crate::error::{Error, Result};
use crate::words::{parse_symbol, tokens_with_columns, GenAlphabet, Letter};

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Strip a `#` comment and split into tokens with columns.
pub(crate) fn content_tokens(raw: &str) -> Vec<(usize, &str)> {
    let body = raw.split('#').next().unwrap_or("");
    tokens_with_columns(body).collect()
}

pub(crate) fn parse_count(tok: (usize, &str), line: usize) -> Result<usize> {
    tok.1.parse().map_err(|_| {
        perr(
            line,
            tok.0,
            format!("expected a non-negative integer, found `{}`", tok.1),
        )
    })
}

/// Parse `inf <I>` and optional `fin <o>...` lines starting at `lines`.
pub(crate) fn parse_alphabet_lines<'a>(
    lines: &mut std::iter::Peekable<impl Iterator<Item = (usize, Vec<(usize, &'a str)>)>>,
) -> Result<GenAlphabet> {
    let (ln, toks) = lines.next().ok_or_else(|| perr(0, 1, "missing `inf` line"))?;
    if toks[0].1 != "inf" || toks.len() != 2 {
        return Err(perr(ln, toks[0].0, "expected `inf <count>`"));
    }
    let inf = parse_count(toks[1], ln)?;
    let mut orders = Vec::new();
    if let Some((ln, toks)) = lines.peek() {
        if toks[0].1 == "fin" {
            let ln = *ln;
            for &t in &toks[1..] {
                orders.push(parse_count(t, ln)?);
            }
            if orders.is_empty() {
                return Err(perr(ln, toks[0].0, "`fin` needs at least one order"));
            }
            lines.next();
        }
    }
    GenAlphabet::new(inf, orders).map_err(|e| perr(ln, 1, e.to_string()))
}

pub(crate) fn alphabet_lines(a: &GenAlphabet) -> String {
    let mut s = format!("inf {}\n", a.inf_count());
    if a.fin_count() > 0 {
        s.push_str("fin");
        for o in a.fin_orders() {
            write!(s, " {o}").unwrap();
        }
        s.push('\n');
    }
    s
}

fn parse_edge_id(tok: (usize, &str), line: usize) -> Result<EdgeId> {
    let (p, s) = tok.1.split_once('.').ok_or_else(|| {
        perr(
            line,
            tok.0,
            format!("expected <piece>.<segment>, found `{}`", tok.1),
        )
    })?;
    let bad = || perr(line, tok.0, format!("bad edge `{}`", tok.1));
    Ok(EdgeId::new(
        p.parse().map_err(|_| bad())?,
        s.parse().map_err(|_| bad())?,
    ))
}

impl Fatgraph {
    pub fn parse(text: &str) -> Result<Fatgraph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, content_tokens(l)))
            .filter(|(_, t)| !t.is_empty())
            .peekable();
        match lines.next() {
            Some((_, t)) if t.len() == 1 && t[0].1 == "fatgraph" => {}
            Some((ln, t)) => return Err(perr(ln, t[0].0, "expected `fatgraph` header")),
            None => return Err(perr(0, 1, "empty input")),
        }
        let alphabet = parse_alphabet_lines(&mut lines)?;
        let mut f = Fatgraph::new(alphabet.clone());
        for (ln, toks) in lines {
            let (col, kw) = toks[0];
            match kw {
                "piece" => {
                    if toks.len() < 3 {
                        return Err(perr(ln, col, "expected `piece <index> <kind> ...`"));
                    }
                    let idx = parse_count(toks[1], ln)?;
                    if idx != f.piece_count() {
                        return Err(perr(
                            ln,
                            toks[1].0,
                            format!("expected piece index {}, found {idx}", f.piece_count()),
                        ));
                    }
                    let (kcol, kind) = toks[2];
                    let piece = match kind {
                        "rect" | "gpoly" => {
                            if toks.len() != 4 {
                                return Err(perr(ln, kcol, format!("`{kind}` takes one generator")));
                            }
                            let x = parse_symbol(toks[3].1, &alphabet, ln, toks[3].0)?;
                            match (kind, x.is_finite(), x.is_inverse()) {
                                ("rect", false, false) => Piece::Rectangle { i: x.index() },
                                ("gpoly", true, _) => Piece::GroupPolygon { j: x.index() },
                                _ => return Err(perr(ln, toks[3].0, format!("`{kind}` cannot carry {x}"))),
                            }
                        }
                        "poly" => {
                            let labels = toks[3..]
                                .iter()
                                .map(|&(c, t)| parse_symbol(t, &alphabet, ln, c))
                                .collect::<Result<Vec<Letter>>>()?;
                            if labels.is_empty() {
                                return Err(perr(ln, kcol, "polygon needs at least one edge"));
                            }
                            Piece::Polygon(crate::cyclic::CyclicSubOrder::new(labels))
                        }
                        _ => return Err(perr(ln, kcol, format!("unknown piece kind `{kind}`"))),
                    };
                    f.add_piece(piece).map_err(|e| perr(ln, kcol, e.to_string()))?;
                }
                "glue" => {
                    if toks.len() != 3 {
                        return Err(perr(ln, col, "expected `glue <p>.<s> <p>.<s>`"));
                    }
                    let a = parse_edge_id(toks[1], ln)?;
                    let b = parse_edge_id(toks[2], ln)?;
                    f.glue_unchecked(a, b)
                        .map_err(|e| perr(ln, toks[1].0, e.to_string()))?;
                }
                _ => return Err(perr(ln, col, format!("unknown directive `{kw}`"))),
            }
        }
        Ok(f)
    }

    /// Canonical text form.
    pub fn to_text(&self) -> String {
        let mut s = String::from("fatgraph\n");
        s.push_str(&alphabet_lines(self.alphabet()));
        for (p, piece) in self.pieces().enumerate() {
            match piece {
                Piece::Rectangle { i } => writeln!(s, "piece {p} rect z{i}").unwrap(),
                Piece::GroupPolygon { j } => writeln!(s, "piece {p} gpoly c{j}").unwrap(),
                Piece::Polygon(labels) => {
                    write!(s, "piece {p} poly").unwrap();
                    for x in labels.labels() {
                        write!(s, " {x}").unwrap();
                    }
                    s.push('\n');
                }
            }
        }
        for (a, b) in self.gluings() {
            writeln!(s, "glue {a} {b}").unwrap();
        }
        s
    }
}
