use std::fmt::Write as _;

use super::{EdgeKind, Fatgraph, Piece};

impl Fatgraph {
    /// Graphviz text of the spine: one vertex per piece, one arc per gluing,
    /// directed from the polygon to the rectangle or group polygon.
    pub fn spine_dot(&self) -> String {
        let mut s = String::from("digraph spine {\n");
        for (p, piece) in self.pieces().enumerate() {
            let (shape, label) = match piece {
                Piece::Rectangle { i } => ("box", format!("r(z{i})")),
                Piece::GroupPolygon { j } => ("octagon", format!("g(c{j})")),
                Piece::Polygon(l) => ("circle", l.to_string()),
            };
            writeln!(s, "  n{p} [shape={shape}, label=\"{label}\"];").unwrap();
        }
        for (a, b) in self.gluings() {
            let la = self.edge_label(a).expect("gluings join edges");
            let (from, to) = if la.kind == EdgeKind::Polygon {
                (a, b)
            } else {
                (b, a)
            };
            writeln!(
                s,
                "  n{} -> n{} [label=\"{}\", taillabel=\"{}\", headlabel=\"{}\"];",
                from.piece, to.piece, la.label, from.seg, to.seg
            )
            .unwrap();
        }
        s.push_str("}\n");
        s
    }
}
