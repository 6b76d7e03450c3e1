//! Cyclic orders on the symbol set `S` and cyclically ordered sub-multisets
//! of it.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::words::{least_rotation, parse_symbol, tokens_with_columns, GenAlphabet, Letter};

/// A cyclic arrangement of every symbol of an alphabet, each exactly once.
///
/// Stored rotated so that the least symbol comes first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicOrder {
    symbols: Vec<Letter>,
    position: HashMap<Letter, usize>,
}

impl CyclicOrder {
    pub fn new(alphabet: &GenAlphabet, symbols: Vec<Letter>) -> Result<Self> {
        let expected = alphabet.symbols();
        let mut position = HashMap::with_capacity(symbols.len());
        for (k, &s) in symbols.iter().enumerate() {
            if !alphabet.contains(s) {
                return Err(Error::InvalidOrder(format!(
                    "{s} is not a symbol of the alphabet"
                )));
            }
            if position.insert(s, k).is_some() {
                return Err(Error::InvalidOrder(format!("{s} appears twice")));
            }
        }
        if let Some(missing) = expected.iter().find(|s| !position.contains_key(s)) {
            return Err(Error::InvalidOrder(format!("{missing} is missing")));
        }
        Ok(Self::from_permutation(symbols))
    }

    fn from_permutation(mut symbols: Vec<Letter>) -> Self {
        let start = symbols
            .iter()
            .enumerate()
            .min_by_key(|(_, s)| **s)
            .map(|(k, _)| k)
            .unwrap_or(0);
        symbols.rotate_left(start);
        let position = symbols.iter().enumerate().map(|(k, &s)| (s, k)).collect();
        CyclicOrder { symbols, position }
    }

    /// Parse `order <tok> <tok> ...`, or just the token list.
    pub fn parse(text: &str, alphabet: &GenAlphabet) -> Result<Self> {
        parse_order_line(text, alphabet, 1)
    }

    /// The symbols in canonical rotation.
    pub fn symbols(&self) -> &[Letter] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn contains(&self, x: Letter) -> bool {
        self.position.contains_key(&x)
    }

    pub fn position(&self, x: Letter) -> Result<usize> {
        self.position.get(&x).copied().ok_or(Error::SymbolNotInOrder(x))
    }

    /// The symbol immediately after `x`.
    pub fn next(&self, x: Letter) -> Result<Letter> {
        let p = self.position(x)?;
        Ok(self.symbols[(p + 1) % self.len()])
    }

    /// The symbol immediately before `x`.
    pub fn prev(&self, x: Letter) -> Result<Letter> {
        let p = self.position(x)?;
        Ok(self.symbols[(p + self.len() - 1) % self.len()])
    }

    /// The symbols read starting from `x`.
    pub fn rotation_from(&self, x: Letter) -> Result<Vec<Letter>> {
        let p = self.position(x)?;
        let mut v = self.symbols.clone();
        v.rotate_left(p);
        Ok(v)
    }

    /// The order restricted to the symbols accepted by `keep`.
    pub fn restrict(&self, keep: impl Fn(Letter) -> bool) -> Vec<Letter> {
        self.symbols.iter().copied().filter(|&s| keep(s)).collect()
    }

    /// `+1` if `x, y, z` occur in this cyclic order, `-1` if in the reverse
    /// one, `0` if they are not pairwise distinct.
    pub fn order_triple(&self, x: Letter, y: Letter, z: Letter) -> Result<i8> {
        let (px, py, pz) = (self.position(x)?, self.position(y)?, self.position(z)?);
        if px == py || py == pz || px == pz {
            return Ok(0);
        }
        let n = self.len();
        let dy = (py + n - px) % n;
        let dz = (pz + n - px) % n;
        Ok(if dy < dz { 1 } else { -1 })
    }

    /// Does `sub` (no repeats) agree with the restriction of this order?
    pub fn is_compatible(&self, sub: &CyclicSubOrder) -> Result<bool> {
        let items = sub.labels();
        for (k, &s) in items.iter().enumerate() {
            self.position(s)?;
            if items[..k].contains(&s) {
                return Err(Error::DuplicateSymbol(s));
            }
        }
        if items.len() <= 2 {
            return Ok(true);
        }
        Ok(self.first_incompatible_triple(sub)?.is_none())
    }

    /// A witness `(a_0, a_k, a_{k+1})` with negative orientation, if any.
    ///
    /// `sub` must have no repeated symbols. A cyclic sequence is compatible
    /// exactly when every such consecutive triple anchored at `a_0` is
    /// positively oriented.
    pub fn first_incompatible_triple(
        &self,
        sub: &CyclicSubOrder,
    ) -> Result<Option<(Letter, Letter, Letter)>> {
        let items = sub.labels();
        if items.len() <= 2 {
            return Ok(None);
        }
        let a0 = items[0];
        for k in 1..items.len() - 1 {
            if self.order_triple(a0, items[k], items[k + 1])? < 0 {
                return Ok(Some((a0, items[k], items[k + 1])));
            }
        }
        Ok(None)
    }

    /// The closed arc from `from` to `to` in the positive direction. Equal
    /// endpoints give the one-element arc.
    pub fn interval(&self, from: Letter, to: Letter) -> Result<CyclicSubOrder> {
        let p = self.position(from)?;
        let q = self.position(to)?;
        let n = self.len();
        let len = (q + n - p) % n + 1;
        Ok(CyclicSubOrder::new(
            (0..len).map(|k| self.symbols[(p + k) % n]).collect(),
        ))
    }

    /// Serialize as an `order ...` line.
    pub fn to_line(&self) -> String {
        let mut s = String::from("order");
        for x in &self.symbols {
            s.push(' ');
            s.push_str(&x.to_string());
        }
        s
    }
}

impl fmt::Display for CyclicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        CyclicSubOrder::new(self.symbols.clone()).fmt(f)
    }
}

pub(crate) fn parse_order_line(text: &str, alphabet: &GenAlphabet, line: usize) -> Result<CyclicOrder> {
    let mut toks = tokens_with_columns(text).peekable();
    if let Some((_, "order")) = toks.peek() {
        toks.next();
    }
    let mut symbols = Vec::new();
    for (col, tok) in toks {
        let s = parse_symbol(tok, alphabet, line, col)?;
        if symbols.contains(&s) {
            return Err(Error::Parse {
                line,
                column: col,
                message: format!("symbol `{tok}` repeated in the order"),
            });
        }
        symbols.push(s);
    }
    CyclicOrder::new(alphabet, symbols).map_err(|e| Error::Parse {
        line,
        column: 1,
        message: e.to_string(),
    })
}

/// A cyclically ordered multiset of symbols, e.g. the edge labels of a
/// polygon. Kept in the order given; repeats are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicSubOrder(Vec<Letter>);

impl CyclicSubOrder {
    pub fn new(labels: Vec<Letter>) -> Self {
        CyclicSubOrder(labels)
    }

    pub fn labels(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Does some symbol occur twice?
    pub fn has_repeats(&self) -> bool {
        self.0.iter().enumerate().any(|(k, s)| self.0[..k].contains(s))
    }

    /// Canonical rotation, for comparing sub-orders as cyclic sequences.
    pub fn canonical(&self) -> Vec<Letter> {
        let mut v = self.0.clone();
        let k = least_rotation(&v);
        v.rotate_left(k);
        v
    }

    pub fn cyclically_equal(&self, other: &CyclicSubOrder) -> bool {
        self.len() == other.len() && self.canonical() == other.canonical()
    }
}

impl fmt::Display for CyclicSubOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}
