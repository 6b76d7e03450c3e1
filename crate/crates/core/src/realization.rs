//! An orbifold realization: the alphabet together with the cyclic order on
//! its symbols, from which the boundary word is derived.

use std::fmt::{self, Write as _};

use crate::cyclic::{parse_order_line, CyclicOrder};
use crate::error::{Error, Result};
use crate::fatgraph::io::{alphabet_lines, content_tokens, parse_alphabet_lines};
use crate::stability::modules::module_a;
use crate::words::{is_cyclically_reduced, CyclicWord, GenAlphabet, Letter, Word};

/// Topological type of the orbifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    Disk { orders: Vec<usize> },
    Genus { genus: usize, orders: Vec<usize> },
}

impl Shape {
    /// Classify an alphabet and order without building a realization.
    ///
    /// The infinite-order symbols must sit in the order, up to rotation, as
    /// `z0 Z1 Z0 z1 z2 Z3 Z2 z3 ...`.
    pub fn detect(alphabet: &GenAlphabet, order: &CyclicOrder) -> Result<Shape> {
        let orders = alphabet.fin_orders().to_vec();
        let inf = alphabet.inf_count();
        if inf == 0 {
            return Ok(Shape::Disk { orders });
        }
        if !inf.is_multiple_of(2) {
            return Err(Error::NonStandardOrder);
        }
        let standard: Vec<Letter> = (0..inf / 2)
            .flat_map(|h| {
                let (a, b) = (2 * h, 2 * h + 1);
                [Letter::z(a), Letter::z_inv(b), Letter::z_inv(a), Letter::z(b)]
            })
            .collect();
        // the restriction starts at z0, the least symbol, by canonical rotation
        if order.restrict(|x| !x.is_finite()) != standard {
            return Err(Error::NonStandardOrder);
        }
        Ok(Shape::Genus {
            genus: inf / 2,
            orders,
        })
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, orders) = match self {
            Shape::Disk { orders } => ("disk".to_string(), orders),
            Shape::Genus { genus, orders } => (format!("genus {genus}"), orders),
        };
        write!(f, "{name}, cone orders {orders:?}")
    }
}

/// A validated realization with its derived boundary word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    alphabet: GenAlphabet,
    order: CyclicOrder,
    boundary: Word,
}

impl Realization {
    /// Validate and derive the boundary word from module A.
    ///
    /// Rejects non-hyperbolic alphabets (no infinite-order generators and
    /// fewer than three cone points) and orders with more than one cusp.
    pub fn new(alphabet: GenAlphabet, order: CyclicOrder) -> Result<Self> {
        if order.len() != alphabet.symbols().len() || !alphabet.symbols().iter().all(|&x| order.contains(x)) {
            return Err(Error::InvalidOrder("order does not match the alphabet".into()));
        }
        if alphabet.inf_count() == 0 && alphabet.fin_count() < 3 {
            return Err(Error::NotHyperbolicOrbifold(format!(
                "a disk with {} cone points",
                alphabet.fin_count()
            )));
        }
        let a = module_a(&alphabet, &order)?;
        let report = a.boundary()?;
        if report.len() != 1 {
            return Err(Error::MultipleCusps(report.len()));
        }
        let b = report.components[0].read_as_word()?;
        let boundary = CyclicWord::from_cyclically_reduced(b).to_word();
        if boundary.is_empty() || !is_cyclically_reduced(&boundary, &alphabet) {
            return Err(Error::Contract(format!(
                "derived boundary word {boundary} is not cyclically reduced"
            )));
        }
        Ok(Realization {
            alphabet,
            order,
            boundary,
        })
    }

    pub fn alphabet(&self) -> &GenAlphabet {
        &self.alphabet
    }

    pub fn order(&self) -> &CyclicOrder {
        &self.order
    }

    /// The boundary word `b`, in the least rotation of its cyclic class.
    pub fn boundary_word(&self) -> &Word {
        &self.boundary
    }

    pub fn boundary_cyclic(&self) -> CyclicWord {
        CyclicWord::from_cyclically_reduced(self.boundary.clone())
    }

    pub fn shape(&self) -> Result<Shape> {
        Shape::detect(&self.alphabet, &self.order)
    }

    /// `(b_{i,+}, b_{i,-})`: the parts of `b` strictly between `z_i` and
    /// `Z_i`, and between `Z_i` and `z_i`, cyclically.
    pub fn b_subwords(&self, i: usize) -> Result<(Word, Word)> {
        let b = self.boundary.letters();
        let find = |x: Letter| {
            b.iter()
                .position(|&y| y == x)
                .ok_or(Error::GeneratorNotInBoundary(i))
        };
        let p = find(Letter::z(i))?;
        let m = find(Letter::z_inv(i))?;
        let between = |from: usize, to: usize| {
            let n = b.len();
            let len = (to + n - from) % n - 1;
            Word::new((1..=len).map(|k| b[(from + k) % n]).collect())
        };
        Ok((between(p, m), between(m, p)))
    }

    /// Graphviz text of the core graph: a base vertex `p`, a loop through
    /// `z_i` for each infinite-order generator and a spike to `c_j` for each
    /// cone point. Each edge carries the position of its symbol in the
    /// cyclic order.
    pub fn core_graph_dot(&self) -> String {
        let mut s = String::from("digraph core {\n  p;\n");
        for i in 0..self.alphabet.inf_count() {
            writeln!(s, "  z{i};").unwrap();
        }
        for j in 0..self.alphabet.fin_count() {
            writeln!(s, "  c{j} [label=\"c{j} ({})\"];", self.alphabet.order(j)).unwrap();
        }
        let pos = |x: Letter| self.order.position(x).expect("order covers the alphabet");
        for i in 0..self.alphabet.inf_count() {
            writeln!(s, "  p -> z{i} [label=\"z{i}\", order={}];", pos(Letter::z(i))).unwrap();
            writeln!(
                s,
                "  z{i} -> p [label=\"Z{i}\", order={}];",
                pos(Letter::z_inv(i))
            )
            .unwrap();
        }
        for j in 0..self.alphabet.fin_count() {
            writeln!(s, "  p -> c{j} [label=\"c{j}\", order={}];", pos(Letter::c(j))).unwrap();
        }
        s.push_str("}\n");
        s
    }

    /// Parse the `orbifold` / `inf` / `fin` / `order` format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, content_tokens(l)))
            .filter(|(_, t)| !t.is_empty())
            .peekable();
        let perr = |line, column, message: &str| Error::Parse {
            line,
            column,
            message: message.to_string(),
        };
        match lines.next() {
            Some((_, t)) if t.len() == 1 && t[0].1 == "orbifold" => {}
            Some((ln, t)) => return Err(perr(ln, t[0].0, "expected `orbifold` header")),
            None => return Err(perr(0, 1, "empty input")),
        }
        let alphabet = parse_alphabet_lines(&mut lines)?;
        let (ln, toks) = lines.next().ok_or_else(|| perr(0, 1, "missing `order` line"))?;
        if toks[0].1 != "order" {
            return Err(perr(ln, toks[0].0, "expected `order` line"));
        }
        let raw = text.lines().nth(ln - 1).unwrap_or("");
        let body = raw.split('#').next().unwrap_or("");
        let order = parse_order_line(body, &alphabet, ln)?;
        if let Some((ln, t)) = lines.next() {
            return Err(perr(ln, t[0].0, "unexpected content after `order` line"));
        }
        Realization::new(alphabet, order)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("orbifold\n");
        s.push_str(&alphabet_lines(&self.alphabet));
        s.push_str(&self.order.to_line());
        s.push('\n');
        s
    }
}
