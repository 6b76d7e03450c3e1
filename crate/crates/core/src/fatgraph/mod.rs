//! Cyclic fatgraphs: rectangles, group polygons and polygons glued along
//! labeled edges.
//!
//! Every piece is a disk whose boundary is a cyclic list of segments, read
//! counterclockwise. A segment is either a labeled side (which always ends up
//! on the surface boundary) or a gluable edge. Gluings pair a polygon edge
//! `pe(x)` with a rectangle edge `re(x)` or group-polygon edge `ge(x)`.

mod boundary;
mod dot;
pub(crate) mod io;
mod pinch;
mod topology;

use std::collections::BTreeMap;
use std::fmt;

use crate::cyclic::CyclicSubOrder;
use crate::error::{Error, Result};
use crate::words::{GenAlphabet, Generator, Letter};

pub use boundary::{covers, BoundaryComponent, BoundaryReport, Token};
pub use pinch::{pinch, pinch_seeded};
pub use topology::SurfaceSummary;

/// One building block of a fatgraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Piece {
    /// `r(z_i)`: segments `[z_i, re(Z_i), Z_i, re(z_i)]`.
    Rectangle { i: usize },
    /// `g(c_j)`: `o_j` sides `c_j`, each followed by an edge `ge(c_j)`.
    GroupPolygon { j: usize },
    /// A polygon whose segments are the edges `pe(x)` in the listed order.
    Polygon(CyclicSubOrder),
}

/// Which kind of piece an edge belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    Polygon,
    Rectangle,
    Group,
}

/// An edge label such as `pe(z0)`, `re(Z1)` or `ge(c2)`.
///
/// Rectangle and group-polygon edges are named for the side that comes
/// after them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeLabel {
    pub kind: EdgeKind,
    pub label: Letter,
}

impl EdgeLabel {
    pub fn pe(label: Letter) -> Self {
        EdgeLabel {
            kind: EdgeKind::Polygon,
            label,
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.kind {
            EdgeKind::Polygon => "pe",
            EdgeKind::Rectangle => "re",
            EdgeKind::Group => "ge",
        };
        write!(f, "{prefix}({})", self.label)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Segment {
    Side(Letter),
    Edge(EdgeLabel),
}

/// An edge (or any segment) addressed by piece index and segment index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId {
    pub piece: usize,
    pub seg: usize,
}

impl EdgeId {
    pub fn new(piece: usize, seg: usize) -> Self {
        EdgeId { piece, seg }
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.piece, self.seg)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Slot {
    piece: Piece,
    segments: Vec<Segment>,
    glued: Vec<Option<EdgeId>>,
}

/// A fatgraph over a fixed alphabet, possibly with unglued edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fatgraph {
    alphabet: GenAlphabet,
    slots: Vec<Slot>,
    gluings: usize,
}

/// A structural problem found by [`Fatgraph::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub at: EdgeId,
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    MonogonInfiniteOrder(Letter),
    NotLocallyReduced(Letter),
    LabelMismatch { partner: EdgeId },
    SameKindGluing { partner: EdgeId },
    AsymmetricGluing { partner: EdgeId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ViolationKind::MonogonInfiniteOrder(x) => {
                write!(
                    f,
                    "piece {}: monogon with infinite-order edge pe({x})",
                    self.at.piece
                )
            }
            ViolationKind::NotLocallyReduced(x) => {
                write!(f, "edge {}: pe({x}) immediately follows pe({x})", self.at)
            }
            ViolationKind::LabelMismatch { partner } => {
                write!(f, "edge {} glued to {partner}: label mismatch", self.at)
            }
            ViolationKind::SameKindGluing { partner } => {
                write!(
                    f,
                    "edge {} glued to {partner}: exactly one side must be a polygon edge",
                    self.at
                )
            }
            ViolationKind::AsymmetricGluing { partner } => {
                write!(f, "edge {} glued to {partner}, which is not glued back", self.at)
            }
        }
    }
}

/// Piece counts by kind and polygon size.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Census {
    /// Rectangles per infinite-order generator index.
    pub rectangles: BTreeMap<usize, usize>,
    /// Group polygons per finite-order generator index.
    pub group_polygons: BTreeMap<usize, usize>,
    /// Polygons per number of edges.
    pub polygons: BTreeMap<usize, usize>,
    pub unglued_polygon_edges: usize,
    pub unglued_rectangle_edges: usize,
    pub unglued_group_edges: usize,
}

impl Census {
    pub fn polygons_with(&self, edges: usize) -> usize {
        self.polygons.get(&edges).copied().unwrap_or(0)
    }
}

impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in &self.rectangles {
            writeln!(f, "rect z{i}: {n}")?;
        }
        for (j, n) in &self.group_polygons {
            writeln!(f, "gpoly c{j}: {n}")?;
        }
        for (k, n) in &self.polygons {
            writeln!(f, "poly {k}-gon: {n}")?;
        }
        writeln!(
            f,
            "unglued: pe {}, re {}, ge {}",
            self.unglued_polygon_edges, self.unglued_rectangle_edges, self.unglued_group_edges
        )
    }
}

impl Fatgraph {
    pub fn new(alphabet: GenAlphabet) -> Self {
        Fatgraph {
            alphabet,
            slots: Vec::new(),
            gluings: 0,
        }
    }

    pub fn alphabet(&self) -> &GenAlphabet {
        &self.alphabet
    }

    fn segments_of(&self, piece: &Piece) -> Result<Vec<Segment>> {
        Ok(match piece {
            Piece::Rectangle { i } => {
                self.alphabet.check(Letter::z(*i))?;
                let (z, zi) = (Letter::z(*i), Letter::z_inv(*i));
                vec![
                    Segment::Side(z),
                    Segment::Edge(EdgeLabel {
                        kind: EdgeKind::Rectangle,
                        label: zi,
                    }),
                    Segment::Side(zi),
                    Segment::Edge(EdgeLabel {
                        kind: EdgeKind::Rectangle,
                        label: z,
                    }),
                ]
            }
            Piece::GroupPolygon { j } => {
                let c = Letter::c(*j);
                self.alphabet.check(c)?;
                let edge = Segment::Edge(EdgeLabel {
                    kind: EdgeKind::Group,
                    label: c,
                });
                (0..self.alphabet.order(*j))
                    .flat_map(|_| [Segment::Side(c), edge])
                    .collect()
            }
            Piece::Polygon(labels) => {
                if labels.is_empty() {
                    return Err(Error::InvalidFatgraph("polygon with no edges".into()));
                }
                for &x in labels.labels() {
                    self.alphabet.check(x)?;
                }
                labels
                    .labels()
                    .iter()
                    .map(|&x| Segment::Edge(EdgeLabel::pe(x)))
                    .collect()
            }
        })
    }

    /// Add a piece and return its index.
    pub fn add_piece(&mut self, piece: Piece) -> Result<usize> {
        let segments = self.segments_of(&piece)?;
        let glued = vec![None; segments.len()];
        self.slots.push(Slot {
            piece,
            segments,
            glued,
        });
        Ok(self.slots.len() - 1)
    }

    pub fn add_rectangle(&mut self, i: usize) -> Result<usize> {
        self.add_piece(Piece::Rectangle { i })
    }

    pub fn add_group_polygon(&mut self, j: usize) -> Result<usize> {
        self.add_piece(Piece::GroupPolygon { j })
    }

    pub fn add_polygon(&mut self, labels: Vec<Letter>) -> Result<usize> {
        self.add_piece(Piece::Polygon(CyclicSubOrder::new(labels)))
    }

    pub fn piece_count(&self) -> usize {
        self.slots.len()
    }

    pub fn gluing_count(&self) -> usize {
        self.gluings
    }

    pub fn piece(&self, p: usize) -> &Piece {
        &self.slots[p].piece
    }

    pub fn pieces(&self) -> impl Iterator<Item = &Piece> {
        self.slots.iter().map(|s| &s.piece)
    }

    pub fn segments(&self, p: usize) -> &[Segment] {
        &self.slots[p].segments
    }

    pub fn segment(&self, e: EdgeId) -> Result<Segment> {
        self.slots
            .get(e.piece)
            .and_then(|s| s.segments.get(e.seg))
            .copied()
            .ok_or(Error::NoSuchSegment {
                piece: e.piece,
                segment: e.seg,
            })
    }

    /// The label of an edge, or an error if the segment is a side.
    pub fn edge_label(&self, e: EdgeId) -> Result<EdgeLabel> {
        match self.segment(e)? {
            Segment::Edge(l) => Ok(l),
            Segment::Side(_) => Err(Error::NotAnEdge {
                piece: e.piece,
                segment: e.seg,
            }),
        }
    }

    pub fn partner(&self, e: EdgeId) -> Option<EdgeId> {
        self.slots
            .get(e.piece)
            .and_then(|s| s.glued.get(e.seg).copied().flatten())
    }

    /// Glue two edges, checking only that both are free edges.
    ///
    /// Label agreement is left to [`Fatgraph::validate`], so that files with
    /// mislabeled gluings can still be loaded and diagnosed.
    pub fn glue_unchecked(&mut self, a: EdgeId, b: EdgeId) -> Result<()> {
        for e in [a, b] {
            self.edge_label(e)?;
            if self.partner(e).is_some() {
                return Err(Error::AlreadyGlued {
                    piece: e.piece,
                    segment: e.seg,
                });
            }
        }
        if a == b {
            return Err(Error::InvalidFatgraph(format!("edge {a} glued to itself")));
        }
        self.slots[a.piece].glued[a.seg] = Some(b);
        self.slots[b.piece].glued[b.seg] = Some(a);
        self.gluings += 1;
        Ok(())
    }

    /// Glue a polygon edge to a rectangle or group-polygon edge with the
    /// same label.
    pub fn glue(&mut self, a: EdgeId, b: EdgeId) -> Result<()> {
        let (la, lb) = (self.edge_label(a)?, self.edge_label(b)?);
        if la.label != lb.label {
            return Err(Error::InvalidFatgraph(format!(
                "cannot glue {la} at {a} to {lb} at {b}: labels differ"
            )));
        }
        if (la.kind == EdgeKind::Polygon) == (lb.kind == EdgeKind::Polygon) {
            return Err(Error::InvalidFatgraph(format!(
                "cannot glue {la} at {a} to {lb} at {b}: exactly one must be a polygon edge"
            )));
        }
        self.glue_unchecked(a, b)
    }

    /// All gluings, each as `(smaller, larger)`, sorted.
    pub fn gluings(&self) -> Vec<(EdgeId, EdgeId)> {
        let mut out = Vec::with_capacity(self.gluings);
        for (p, slot) in self.slots.iter().enumerate() {
            for (s, g) in slot.glued.iter().enumerate() {
                if let Some(q) = g {
                    let e = EdgeId::new(p, s);
                    if e < *q {
                        out.push((e, *q));
                    }
                }
            }
        }
        out
    }

    /// Unglued edges in (piece, segment) order.
    pub fn unglued_edges(&self) -> Vec<(EdgeId, EdgeLabel)> {
        let mut out = Vec::new();
        for (p, slot) in self.slots.iter().enumerate() {
            for (s, seg) in slot.segments.iter().enumerate() {
                if let Segment::Edge(l) = seg {
                    if slot.glued[s].is_none() {
                        out.push((EdgeId::new(p, s), *l));
                    }
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.slots.iter().all(|slot| {
            slot.segments
                .iter()
                .zip(&slot.glued)
                .all(|(seg, g)| matches!(seg, Segment::Side(_)) || g.is_some())
        })
    }

    /// Indices of polygon pieces.
    pub fn polygon_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.slots
            .iter()
            .enumerate()
            .filter(|(_, s)| matches!(s.piece, Piece::Polygon(_)))
            .map(|(p, _)| p)
    }

    /// Append a disjoint copy of `other`; returns the index offset of its
    /// pieces.
    pub fn append(&mut self, other: &Fatgraph) -> Result<usize> {
        if other.alphabet != self.alphabet {
            return Err(Error::InvalidFatgraph(
                "cannot combine fatgraphs over different alphabets".into(),
            ));
        }
        let offset = self.slots.len();
        for slot in &other.slots {
            let glued = slot
                .glued
                .iter()
                .map(|g| g.map(|e| EdgeId::new(e.piece + offset, e.seg)))
                .collect();
            self.slots.push(Slot {
                piece: slot.piece.clone(),
                segments: slot.segments.clone(),
                glued,
            });
        }
        self.gluings += other.gluings;
        Ok(offset)
    }

    /// Check every piece and gluing; an empty list means valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (p, slot) in self.slots.iter().enumerate() {
            if let Piece::Polygon(labels) = &slot.piece {
                let ls = labels.labels();
                if ls.len() == 1 && !ls[0].is_finite() {
                    out.push(Violation {
                        at: EdgeId::new(p, 0),
                        kind: ViolationKind::MonogonInfiniteOrder(ls[0]),
                    });
                }
                if ls.len() > 1 {
                    for k in 0..ls.len() {
                        let (prev, cur) = (ls[(k + ls.len() - 1) % ls.len()], ls[k]);
                        if let Generator::Inf(_) = cur.generator() {
                            if prev == cur {
                                out.push(Violation {
                                    at: EdgeId::new(p, k),
                                    kind: ViolationKind::NotLocallyReduced(cur),
                                });
                            }
                        }
                    }
                }
            }
            for (s, g) in slot.glued.iter().enumerate() {
                let Some(q) = *g else { continue };
                let e = EdgeId::new(p, s);
                if self.partner(q) != Some(e) {
                    out.push(Violation {
                        at: e,
                        kind: ViolationKind::AsymmetricGluing { partner: q },
                    });
                    continue;
                }
                if e > q {
                    continue;
                }
                let (Ok(la), Ok(lb)) = (self.edge_label(e), self.edge_label(q)) else {
                    continue;
                };
                if (la.kind == EdgeKind::Polygon) == (lb.kind == EdgeKind::Polygon) {
                    out.push(Violation {
                        at: e,
                        kind: ViolationKind::SameKindGluing { partner: q },
                    });
                } else if la.label != lb.label {
                    out.push(Violation {
                        at: e,
                        kind: ViolationKind::LabelMismatch { partner: q },
                    });
                }
            }
        }
        out
    }

    pub fn census(&self) -> Census {
        let mut c = Census::default();
        for slot in &self.slots {
            match &slot.piece {
                Piece::Rectangle { i } => *c.rectangles.entry(*i).or_default() += 1,
                Piece::GroupPolygon { j } => *c.group_polygons.entry(*j).or_default() += 1,
                Piece::Polygon(l) => *c.polygons.entry(l.len()).or_default() += 1,
            }
        }
        for (_, l) in self.unglued_edges() {
            match l.kind {
                EdgeKind::Polygon => c.unglued_polygon_edges += 1,
                EdgeKind::Rectangle => c.unglued_rectangle_edges += 1,
                EdgeKind::Group => c.unglued_group_edges += 1,
            }
        }
        c
    }

    /// `#pieces - #gluings`: each piece is a disk and each gluing an arc.
    pub fn euler_characteristic(&self) -> i64 {
        self.slots.len() as i64 - self.gluings as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha() -> GenAlphabet {
        GenAlphabet::new(2, vec![4, 5]).unwrap()
    }

    #[test]
    fn segment_layouts() {
        let mut f = Fatgraph::new(alpha());
        let r = f.add_rectangle(1).unwrap();
        let g = f.add_group_polygon(1).unwrap();
        assert_eq!(f.segments(r)[0], Segment::Side(Letter::z(1)));
        assert_eq!(f.edge_label(EdgeId::new(r, 1)).unwrap().to_string(), "re(Z1)");
        assert_eq!(f.edge_label(EdgeId::new(r, 3)).unwrap().to_string(), "re(z1)");
        assert_eq!(f.segments(g).len(), 10);
        assert_eq!(f.census().unglued_group_edges, 5);
        assert!(f.add_rectangle(2).is_err());
        assert!(f.add_polygon(vec![]).is_err());
    }

    #[test]
    fn glue_rules() {
        let mut f = Fatgraph::new(alpha());
        let r = f.add_rectangle(0).unwrap();
        let p = f.add_polygon(vec![Letter::z(0), Letter::c(0)]).unwrap();
        let q = f.add_polygon(vec![Letter::z(1)]).unwrap();
        assert!(f.glue(EdgeId::new(r, 0), EdgeId::new(p, 0)).is_err());
        assert!(f.glue(EdgeId::new(r, 1), EdgeId::new(p, 0)).is_err());
        f.glue(EdgeId::new(r, 3), EdgeId::new(p, 0)).unwrap();
        assert_eq!(
            f.glue(EdgeId::new(r, 3), EdgeId::new(p, 0)),
            Err(Error::AlreadyGlued { piece: r, segment: 3 })
        );
        assert_eq!(f.gluings(), vec![(EdgeId::new(0, 3), EdgeId::new(1, 0))]);
        assert_eq!(f.euler_characteristic(), 2);

        let v = f.validate();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::MonogonInfiniteOrder(Letter::z(1)));
        assert_eq!(v[0].at.piece, q);
    }

    #[test]
    fn mismatch_is_reported_not_rejected() {
        let mut f = Fatgraph::new(alpha());
        let r = f.add_rectangle(1).unwrap();
        let p = f.add_polygon(vec![Letter::z(0), Letter::c(1)]).unwrap();
        f.glue_unchecked(EdgeId::new(p, 0), EdgeId::new(r, 3)).unwrap();
        let v = f.validate();
        assert_eq!(v.len(), 1);
        assert!(matches!(v[0].kind, ViolationKind::LabelMismatch { .. }));
    }

    #[test]
    fn local_reduction() {
        let mut f = Fatgraph::new(alpha());
        f.add_polygon(vec![Letter::c(1), Letter::z(0), Letter::z_inv(0)])
            .unwrap();
        assert!(f.validate().is_empty());
        f.add_polygon(vec![Letter::z(0), Letter::c(0), Letter::z(0)])
            .unwrap();
        let v = f.validate();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::NotLocallyReduced(Letter::z(0)));
    }

    #[test]
    fn empty_census() {
        let f = Fatgraph::new(alpha());
        assert_eq!(f.census(), Census::default());
        assert!(f.is_complete());
    }
}
