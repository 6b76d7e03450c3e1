//! Letters, words and normal forms in the free product
//! `(*Z_i) * (*C_j)` of infinite and finite cyclic groups.
//!
//! Words are stored letter by letter. Finite-order generators only ever
//! appear with positive sign, so `c_j^e` is `e` consecutive copies of `c_j`
//! with `0 < e < o_j` in reduced form.

use std::fmt;

use crate::error::{Error, Result};

/// A generator of the free product.
///
/// The derived order puts every infinite-order generator before every
/// finite-order one, which is what the letter order below relies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// `z_i`, of infinite order.
    Inf(usize),
    /// `c_j`, of finite order `o_j`.
    Fin(usize),
}

/// A signed generator.
///
/// Letters are totally ordered `z_0 < Z_0 < z_1 < Z_1 < ... < c_0 < c_1 < ...`,
/// where `Z_i` is `z_i^{-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    gen: Generator,
    inverse: bool,
}

impl Letter {
    pub const fn z(i: usize) -> Self {
        Letter {
            gen: Generator::Inf(i),
            inverse: false,
        }
    }

    pub const fn z_inv(i: usize) -> Self {
        Letter {
            gen: Generator::Inf(i),
            inverse: true,
        }
    }

    pub const fn c(j: usize) -> Self {
        Letter {
            gen: Generator::Fin(j),
            inverse: false,
        }
    }

    pub fn generator(self) -> Generator {
        self.gen
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn is_finite(self) -> bool {
        matches!(self.gen, Generator::Fin(_))
    }

    pub fn index(self) -> usize {
        match self.gen {
            Generator::Inf(i) | Generator::Fin(i) => i,
        }
    }

    /// The partner symbol: `z_i <-> Z_i`, and `c_j` maps to itself.
    ///
    /// For a rectangle or group polygon this is the label of the edge that
    /// leaves a side labeled `self`.
    pub fn partner(self) -> Self {
        match self.gen {
            Generator::Inf(_) => Letter {
                gen: self.gen,
                inverse: !self.inverse,
            },
            Generator::Fin(_) => self,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        matches!(self.gen, Generator::Inf(_)) && self.gen == other.gen && self.inverse != other.inverse
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.gen, self.inverse) {
            (Generator::Inf(i), false) => write!(f, "z{i}"),
            (Generator::Inf(i), true) => write!(f, "Z{i}"),
            (Generator::Fin(j), _) => write!(f, "c{j}"),
        }
    }
}

/// The generating set: `I` infinite-order generators and the orders of the
/// `J` finite-order ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenAlphabet {
    inf_count: usize,
    fin_orders: Vec<usize>,
}

impl GenAlphabet {
    pub fn new(inf_count: usize, fin_orders: Vec<usize>) -> Result<Self> {
        if let Some(o) = fin_orders.iter().find(|&&o| o < 2) {
            return Err(Error::InvalidAlphabet(format!("finite order {o} is below 2")));
        }
        if inf_count + fin_orders.len() == 0 {
            return Err(Error::InvalidAlphabet("no generators".into()));
        }
        Ok(GenAlphabet {
            inf_count,
            fin_orders,
        })
    }

    pub fn inf_count(&self) -> usize {
        self.inf_count
    }

    pub fn fin_count(&self) -> usize {
        self.fin_orders.len()
    }

    pub fn fin_orders(&self) -> &[usize] {
        &self.fin_orders
    }

    /// Order of `c_j`. Panics if `j` is out of range.
    pub fn order(&self, j: usize) -> usize {
        self.fin_orders[j]
    }

    pub fn contains(&self, letter: Letter) -> bool {
        match letter.gen {
            Generator::Inf(i) => i < self.inf_count,
            Generator::Fin(j) => j < self.fin_orders.len() && !letter.inverse,
        }
    }

    pub fn check(&self, letter: Letter) -> Result<()> {
        if self.contains(letter) {
            Ok(())
        } else {
            Err(Error::LetterOutOfRange(letter))
        }
    }

    /// The symbol set `S`, sorted by the letter order; `|S| = 2I + J`.
    pub fn symbols(&self) -> Vec<Letter> {
        (0..self.inf_count)
            .flat_map(|i| [Letter::z(i), Letter::z_inv(i)])
            .chain((0..self.fin_count()).map(Letter::c))
            .collect()
    }

    /// Least common multiple of the finite orders (1 when there are none).
    pub fn lcm_orders(&self) -> usize {
        self.fin_orders.iter().fold(1, |acc, &o| acc / gcd(acc, o) * o)
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A finite sequence of letters. Not necessarily reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Literal repetition, without reduction.
    pub fn repeat(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }

    /// The inverse in the group, written with positive powers of the `c_j`.
    pub fn inverse(&self, alphabet: &GenAlphabet) -> Result<Word> {
        let mut out = Vec::with_capacity(self.len());
        for &l in self.0.iter().rev() {
            alphabet.check(l)?;
            match l.gen {
                Generator::Inf(_) => out.push(l.partner()),
                Generator::Fin(j) => out.extend(std::iter::repeat_n(l, alphabet.order(j) - 1)),
            }
        }
        Ok(Word(out))
    }

    /// Parse the whitespace-separated token syntax, e.g. `z0 c0^2 Z0 c1`.
    ///
    /// Negative powers of `c_j` are rewritten as positive ones.
    pub fn parse(text: &str, alphabet: &GenAlphabet) -> Result<Word> {
        parse_word_at(text, alphabet, 1, 0)
    }

    /// Is the word free of `z z^{-1}` pairs and of `c_j` runs of length `>= o_j`?
    pub fn is_reduced(&self, alphabet: &GenAlphabet) -> bool {
        let mut run = 0;
        for (k, &l) in self.0.iter().enumerate() {
            if !alphabet.contains(l) {
                return false;
            }
            let prev = if k > 0 { Some(self.0[k - 1]) } else { None };
            if let Some(p) = prev {
                if p.cancels(l) {
                    return false;
                }
            }
            if let Generator::Fin(j) = l.gen {
                run = if prev == Some(l) { run + 1 } else { 1 };
                if run >= alphabet.order(j) {
                    return false;
                }
            }
        }
        true
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_runs(f, &self.0)
    }
}

fn write_runs(f: &mut fmt::Formatter<'_>, letters: &[Letter]) -> fmt::Result {
    let mut k = 0;
    let mut first = true;
    while k < letters.len() {
        let l = letters[k];
        let mut run = 1;
        while k + run < letters.len() && letters[k + run] == l {
            run += 1;
        }
        if !first {
            f.write_str(" ")?;
        }
        first = false;
        if run == 1 {
            write!(f, "{l}")?;
        } else {
            write!(f, "{l}^{run}")?;
        }
        k += run;
    }
    Ok(())
}

/// Parse a bare symbol of `S` (`z3`, `Z3`, `c1`).
pub fn parse_symbol(token: &str, alphabet: &GenAlphabet, line: usize, column: usize) -> Result<Letter> {
    let (letter, exp) = parse_token(token, line, column)?;
    if exp != 1 {
        return Err(Error::Parse {
            line,
            column,
            message: format!("symbol `{token}` must not carry an exponent"),
        });
    }
    if !alphabet.contains(letter) {
        return Err(Error::Parse {
            line,
            column,
            message: format!("symbol `{token}` is outside the alphabet"),
        });
    }
    Ok(letter)
}

fn parse_token(token: &str, line: usize, column: usize) -> Result<(Letter, i64)> {
    let err = |message: String| Error::Parse {
        line,
        column,
        message,
    };
    let (head, exp) = match token.split_once('^') {
        Some((h, e)) => {
            let e: i64 = e.parse().map_err(|_| err(format!("bad exponent in `{token}`")))?;
            (h, e)
        }
        None => (token, 1),
    };
    let mut chars = head.chars();
    let kind = chars.next().ok_or_else(|| err("empty token".into()))?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(format!("bad generator `{head}`")));
    }
    let index: usize = digits
        .parse()
        .map_err(|_| err(format!("bad generator index in `{head}`")))?;
    let letter = match kind {
        'z' => Letter::z(index),
        'Z' => Letter::z_inv(index),
        'c' => Letter::c(index),
        _ => return Err(err(format!("unknown generator `{head}`"))),
    };
    Ok((letter, exp))
}

pub(crate) fn parse_word_at(text: &str, alphabet: &GenAlphabet, line: usize, offset: usize) -> Result<Word> {
    let mut out = Vec::new();
    for (column, token) in tokens_with_columns(text) {
        let column = column + offset;
        let (letter, exp) = parse_token(token, line, column)?;
        if !alphabet.contains(letter) {
            return Err(Error::Parse {
                line,
                column,
                message: format!("`{token}` is outside the alphabet"),
            });
        }
        match letter.gen {
            Generator::Inf(_) => {
                let l = if exp < 0 { letter.partner() } else { letter };
                out.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
            }
            Generator::Fin(j) => {
                let o = alphabet.order(j) as i64;
                out.extend(std::iter::repeat_n(letter, exp.rem_euclid(o) as usize));
            }
        }
    }
    Ok(Word(out))
}

/// Whitespace-separated tokens with their 1-based character columns.
pub(crate) fn tokens_with_columns(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = text;
    let mut col = 1;
    std::iter::from_fn(move || {
        let trimmed = rest.trim_start();
        col += rest[..rest.len() - trimmed.len()].chars().count();
        if trimmed.is_empty() {
            return None;
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let tok = &trimmed[..end];
        let start = col;
        col += tok.chars().count();
        rest = &trimmed[end..];
        Some((start, tok))
    })
}

/// A syllable `g^e`: `e` is a nonzero integer for `z_i`, and lies in
/// `1..o_j` for `c_j`.
#[derive(Clone, Copy, Debug)]
struct Syllable {
    gen: Generator,
    exp: i64,
}

fn push_letter(stack: &mut Vec<Syllable>, l: Letter, alphabet: &GenAlphabet) {
    let delta = if l.inverse { -1 } else { 1 };
    if let Some(top) = stack.last_mut() {
        if top.gen == l.gen {
            top.exp += delta;
            if let Generator::Fin(j) = l.gen {
                top.exp = top.exp.rem_euclid(alphabet.order(j) as i64);
            }
            if top.exp == 0 {
                stack.pop();
            }
            return;
        }
    }
    stack.push(Syllable {
        gen: l.gen,
        exp: delta,
    });
}

fn expand(stack: &[Syllable]) -> Vec<Letter> {
    let mut out = Vec::new();
    for s in stack {
        let l = Letter {
            gen: s.gen,
            inverse: s.exp < 0,
        };
        out.extend(std::iter::repeat_n(l, s.exp.unsigned_abs() as usize));
    }
    out
}

/// Free-product normal form: cancel `z z^{-1}` pairs and reduce `c_j` runs
/// modulo `o_j`, to a fixed point.
pub fn free_reduce(w: &Word, alphabet: &GenAlphabet) -> Result<Word> {
    let mut stack: Vec<Syllable> = Vec::with_capacity(w.len());
    for &l in &w.0 {
        alphabet.check(l)?;
        push_letter(&mut stack, l, alphabet);
    }
    Ok(Word(expand(&stack)))
}

/// A cyclically reduced word up to rotation, stored in its least rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord(Vec<Letter>);

impl CyclicWord {
    /// Wrap a word that is already cyclically reduced, canonicalizing the
    /// rotation. No reduction is performed.
    pub fn from_cyclically_reduced(w: Word) -> Self {
        let mut v = w.0;
        let k = least_rotation(&v);
        v.rotate_left(k);
        CyclicWord(v)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The canonical linear representative.
    pub fn to_word(&self) -> Word {
        Word(self.0.clone())
    }

    /// `self^k` as a cyclic word; stays cyclically reduced when `self` is.
    pub fn power(&self, k: usize) -> CyclicWord {
        CyclicWord::from_cyclically_reduced(Word(self.0.repeat(k)))
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_runs(f, &self.0)?;
        f.write_str(")")
    }
}

/// Index of the lexicographically least rotation.
pub(crate) fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = &s[(i + k) % n];
        let b = &s[(j + k) % n];
        match a.cmp(b) {
            std::cmp::Ordering::Equal => k += 1,
            std::cmp::Ordering::Greater => {
                i += k + 1;
                if i == j {
                    i += 1;
                }
                k = 0;
            }
            std::cmp::Ordering::Less => {
                j += k + 1;
                if i == j {
                    j += 1;
                }
                k = 0;
            }
        }
    }
    i.min(j)
}

/// Split `w` into a cyclically reduced core and a conjugator with
/// `w = conjugator * core * conjugator^{-1}` in the group.
pub fn cyclic_reduce(w: &Word, alphabet: &GenAlphabet) -> Result<(CyclicWord, Word)> {
    let reduced = free_reduce(w, alphabet)?;
    let mut syl: Vec<Syllable> = Vec::new();
    for &l in &reduced.0 {
        push_letter(&mut syl, l, alphabet);
    }
    let mut conj: Vec<Syllable> = Vec::new();
    let mut lo = 0;
    let mut hi = syl.len();
    while hi - lo >= 2 && syl[lo].gen == syl[hi - 1].gen {
        let first = syl[lo];
        let last = syl[hi - 1];
        match first.gen {
            Generator::Inf(_) => {
                if first.exp.signum() == last.exp.signum() {
                    break;
                }
                let step = first.exp.signum();
                conj.push(Syllable {
                    gen: first.gen,
                    exp: step,
                });
                syl[lo].exp -= step;
                syl[hi - 1].exp -= last.exp.signum();
                if syl[lo].exp == 0 {
                    lo += 1;
                }
                if syl[hi - 1].exp == 0 {
                    hi -= 1;
                }
            }
            Generator::Fin(j) => {
                let o = alphabet.order(j) as i64;
                conj.push(first);
                lo += 1;
                let merged = (first.exp + last.exp).rem_euclid(o);
                if merged == 0 {
                    hi -= 1;
                } else {
                    syl[hi - 1].exp = merged;
                }
            }
        }
    }
    // the stored core is the least rotation Q P of the linear core P Q, so
    // the conjugator picks up P
    let core = expand(&syl[lo..hi]);
    let k = least_rotation(&core);
    let mut cstack = Vec::new();
    for l in expand(&conj).into_iter().chain(core[..k].iter().copied()) {
        push_letter(&mut cstack, l, alphabet);
    }
    Ok((
        CyclicWord::from_cyclically_reduced(Word(core)),
        Word(expand(&cstack)),
    ))
}

/// Is `w` cyclically reduced as written (reduced, and no cancellation or
/// overlong `c_j` run across the wrap-around)?
pub fn is_cyclically_reduced(w: &Word, alphabet: &GenAlphabet) -> bool {
    if !w.is_reduced(alphabet) {
        return false;
    }
    if w.len() < 2 {
        return true;
    }
    let doubled = w.concat(w);
    if doubled.is_reduced(alphabet) {
        return true;
    }
    // a single c_j syllable doubles into an overlong run without being
    // cyclically cancellable in a meaningful sense
    let first = w.0[0];
    first.is_finite() && w.0.iter().all(|&l| l == first)
}

/// Conjugacy type of a group element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementClass {
    Identity,
    Elliptic,
    Parabolic,
    Hyperbolic,
}

impl fmt::Display for ElementClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ElementClass::Identity => "identity",
            ElementClass::Elliptic => "elliptic",
            ElementClass::Parabolic => "parabolic",
            ElementClass::Hyperbolic => "hyperbolic",
        })
    }
}

/// Classify `w` given the cyclic boundary word `b` of a one-cusp orbifold.
///
/// Parabolic elements are exactly the conjugates of nonzero powers of `b`.
pub fn classify(w: &Word, boundary: &CyclicWord, alphabet: &GenAlphabet) -> Result<ElementClass> {
    let (core, _) = cyclic_reduce(w, alphabet)?;
    if core.is_empty() {
        return Ok(ElementClass::Identity);
    }
    let first = core.0[0];
    if first.is_finite() && core.0.iter().all(|&l| l == first) {
        return Ok(ElementClass::Elliptic);
    }
    if !boundary.is_empty() && core.len() % boundary.len() == 0 {
        let k = core.len() / boundary.len();
        if boundary.power(k) == core {
            return Ok(ElementClass::Parabolic);
        }
    }
    let (inv_b, _) = cyclic_reduce(&boundary.to_word().inverse(alphabet)?, alphabet)?;
    if !inv_b.is_empty() && core.len() % inv_b.len() == 0 {
        let k = core.len() / inv_b.len();
        if inv_b.power(k) == core {
            return Ok(ElementClass::Parabolic);
        }
    }
    Ok(ElementClass::Hyperbolic)
}

/// Signed count of each `z_i` in `w`.
pub fn z_exponent_sums(w: &Word, alphabet: &GenAlphabet) -> Result<Vec<i64>> {
    let mut sums = vec![0i64; alphabet.inf_count()];
    for &l in &w.0 {
        alphabet.check(l)?;
        if let Generator::Inf(i) = l.gen {
            sums[i] += if l.inverse { -1 } else { 1 };
        }
    }
    Ok(sums)
}
