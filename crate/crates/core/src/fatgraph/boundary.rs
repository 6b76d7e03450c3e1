use std::fmt;

use super::{EdgeId, EdgeKind, EdgeLabel, Fatgraph, Segment};
use crate::error::{Error, Result};
use crate::words::{cyclic_reduce, least_rotation, GenAlphabet, Letter, Word};

/// One step of a boundary component: a side, or an edge left unglued.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Token {
    Side(Letter),
    Unglued(EdgeLabel),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Side(x) => write!(f, "{x}"),
            Token::Unglued(l) => write!(f, "{l}"),
        }
    }
}

/// A boundary component as a cyclic token sequence, together with the
/// segment each token came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryComponent {
    tokens: Vec<Token>,
    at: Vec<EdgeId>,
}

impl BoundaryComponent {
    fn canonical(mut tokens: Vec<Token>, mut at: Vec<EdgeId>) -> Self {
        let k = least_rotation(&tokens);
        tokens.rotate_left(k);
        at.rotate_left(k);
        BoundaryComponent { tokens, at }
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    /// The segment each token was read from.
    pub fn locations(&self) -> &[EdgeId] {
        &self.at
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// The same loop read from the token at segment `e`.
    pub fn starting_at(&self, e: EdgeId) -> Option<BoundaryComponent> {
        let k = self.at.iter().position(|&x| x == e)?;
        let mut tokens = self.tokens.clone();
        let mut at = self.at.clone();
        tokens.rotate_left(k);
        at.rotate_left(k);
        Some(BoundaryComponent { tokens, at })
    }

    /// Unglued edges on this component, in traversal order.
    pub fn unglued(&self) -> impl Iterator<Item = (EdgeId, EdgeLabel)> + '_ {
        self.tokens.iter().zip(&self.at).filter_map(|(t, e)| match t {
            Token::Unglued(l) => Some((*e, *l)),
            Token::Side(_) => None,
        })
    }

    /// Read sides as their letters and each unglued edge through `read`.
    pub fn read_with(&self, read: impl Fn(EdgeLabel) -> Option<Vec<Letter>>) -> Result<Word> {
        let mut out = Vec::with_capacity(self.tokens.len());
        for t in &self.tokens {
            match t {
                Token::Side(x) => out.push(*x),
                Token::Unglued(l) => match read(*l) {
                    Some(ls) => out.extend(ls),
                    None => return Err(Error::UnreadableMarker(l.to_string())),
                },
            }
        }
        Ok(Word::new(out))
    }

    /// Read sides as letters and unglued `pe(c_j)` as `c_j`; any other
    /// unglued edge is an error.
    pub fn read_as_word(&self) -> Result<Word> {
        self.read_with(|l| (l.kind == EdgeKind::Polygon && l.label.is_finite()).then(|| vec![l.label]))
    }
}

impl fmt::Display for BoundaryComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.tokens.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// All boundary components, sorted by their canonical token sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryReport {
    pub components: Vec<BoundaryComponent>,
}

impl BoundaryReport {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn words(&self) -> Result<Vec<Word>> {
        self.components.iter().map(|c| c.read_as_word()).collect()
    }

    pub fn has_unglued(&self) -> bool {
        self.components.iter().any(|c| c.unglued().next().is_some())
    }
}

impl fmt::Display for BoundaryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.components {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Fatgraph {
    /// Walk the surface boundary.
    ///
    /// From a side or unglued edge, step to the next segment of the same
    /// piece; whenever that segment is a glued edge, cross to its partner and
    /// continue with the segment after the partner.
    pub fn boundary(&self) -> Result<BoundaryReport> {
        let total: usize = (0..self.piece_count()).map(|p| self.segments(p).len()).sum();
        let mut seen: Vec<Vec<bool>> = (0..self.piece_count())
            .map(|p| vec![false; self.segments(p).len()])
            .collect();
        let mut components = Vec::new();
        for p in 0..self.piece_count() {
            for s in 0..self.segments(p).len() {
                let start = EdgeId::new(p, s);
                if seen[p][s] || self.partner(start).is_some() {
                    continue;
                }
                let mut tokens = Vec::new();
                let mut at = Vec::new();
                let mut cur = start;
                loop {
                    if seen[cur.piece][cur.seg] {
                        return Err(Error::Contract(format!("boundary walk re-entered {cur}")));
                    }
                    seen[cur.piece][cur.seg] = true;
                    tokens.push(match self.segments(cur.piece)[cur.seg] {
                        Segment::Side(x) => Token::Side(x),
                        Segment::Edge(l) => Token::Unglued(l),
                    });
                    at.push(cur);
                    cur = self.next_emitting(cur, total)?;
                    if cur == start {
                        break;
                    }
                }
                components.push(BoundaryComponent::canonical(tokens, at));
            }
        }
        components.sort_by(|a, b| a.tokens.cmp(&b.tokens).then_with(|| a.at.cmp(&b.at)));
        Ok(BoundaryReport { components })
    }

    fn next_emitting(&self, from: EdgeId, guard: usize) -> Result<EdgeId> {
        let step = |e: EdgeId| EdgeId::new(e.piece, (e.seg + 1) % self.segments(e.piece).len());
        let mut cur = step(from);
        for _ in 0..=guard {
            match self.partner(cur) {
                Some(q) => cur = step(q),
                None => return Ok(cur),
            }
        }
        Err(Error::Contract(format!(
            "boundary walk from {from} crossed only glued edges"
        )))
    }
}

/// Total degree with which the boundary covers the loop `target`, or `None`
/// if some component is not a positive power of it.
///
/// Every component must read as a word (no unglued markers other than
/// polygon edges of finite order).
pub fn covers(report: &BoundaryReport, target: &Word, alphabet: &GenAlphabet) -> Result<Option<usize>> {
    let (t, _) = cyclic_reduce(target, alphabet)?;
    if t.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut degree = 0;
    for c in &report.components {
        if c.unglued().next().is_some() {
            return Err(Error::Incomplete);
        }
        let (u, _) = cyclic_reduce(&c.read_as_word()?, alphabet)?;
        if u.is_empty() || u.len() % t.len() != 0 {
            return Ok(None);
        }
        let k = u.len() / t.len();
        if t.power(k) != u {
            return Ok(None);
        }
        degree += k;
    }
    Ok(Some(degree))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fatgraph::Fatgraph;

    #[test]
    fn lone_rectangle() {
        let a = GenAlphabet::new(1, vec![]).unwrap();
        let mut f = Fatgraph::new(a);
        f.add_rectangle(0).unwrap();
        let r = f.boundary().unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.components[0].to_string(), "z0 re(Z0) Z0 re(z0)");
        assert!(matches!(r.words(), Err(Error::UnreadableMarker(_))));
    }

    #[test]
    fn monogon_on_group_polygon() {
        // g(c0) with o = 3 and one monogon: boundary c0 c0 ge(c0) c0 ge(c0)
        let a = GenAlphabet::new(0, vec![3]).unwrap();
        let mut f = Fatgraph::new(a);
        let g = f.add_group_polygon(0).unwrap();
        let m = f.add_polygon(vec![Letter::c(0)]).unwrap();
        f.glue(EdgeId::new(g, 1), EdgeId::new(m, 0)).unwrap();
        let r = f.boundary().unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.components[0].to_string(), "c0 c0 ge(c0) c0 ge(c0)");
    }

    #[test]
    fn cover_degrees() {
        let a = GenAlphabet::new(2, vec![]).unwrap();
        let t = Word::parse("z0 z1 Z0 Z1", &a).unwrap();
        let report_of = |words: &[&str]| {
            let ws: Vec<Word> = words.iter().map(|s| Word::parse(s, &a).unwrap()).collect();
            crate::fatgraph::pinch(&ws, &a).unwrap().boundary().unwrap()
        };
        let disjoint = report_of(&["z0 z1 Z0 Z1", "z1 Z0 Z1 z0"]);
        assert_eq!(covers(&disjoint, &t, &a).unwrap(), Some(2));
        let connected = report_of(&["Z1 z0 z1 Z0 Z1 z0 z1 Z0"]);
        assert_eq!(covers(&connected, &t, &a).unwrap(), Some(2));
        let longer = report_of(&["z0 z1 Z0 Z1 z0 Z1 Z0 z1"]);
        assert_eq!(covers(&longer, &t, &a).unwrap(), None);
    }
}
