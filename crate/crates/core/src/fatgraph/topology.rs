//! Surface classification of a fatgraph from an explicit cell structure.

use super::{EdgeId, Fatgraph};
use crate::error::{Error, Result};

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Topological data of the surface underlying a fatgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceSummary {
    /// `V - E + F` of the cell structure whose faces are the pieces, whose
    /// edges are segments (glued pairs identified) and whose vertices are
    /// piece corners up to identification.
    pub euler_characteristic: i64,
    pub connected_components: usize,
    pub boundary_components: usize,
    /// Genus of each connected component, ordered by least piece index.
    pub genera: Vec<usize>,
}

impl SurfaceSummary {
    pub fn total_genus(&self) -> usize {
        self.genera.iter().sum()
    }
}

impl Fatgraph {
    /// Classify the surface: Euler characteristic from corners, segments and
    /// pieces, and genus per connected component from the boundary count.
    ///
    /// Fails if the corner count disagrees with `#pieces - #gluings` or a
    /// genus comes out fractional or negative.
    pub fn surface_summary(&self) -> Result<SurfaceSummary> {
        let n = self.piece_count();
        let mut offset = Vec::with_capacity(n + 1);
        offset.push(0);
        for p in 0..n {
            offset.push(offset[p] + self.segments(p).len());
        }
        let corner = |e: EdgeId| offset[e.piece] + e.seg % self.segments(e.piece).len();
        let mut corners = UnionFind::new(offset[n]);
        let mut pieces = UnionFind::new(n);
        for (a, b) in self.gluings() {
            corners.union(corner(a), corner(EdgeId::new(b.piece, b.seg + 1)));
            corners.union(corner(EdgeId::new(a.piece, a.seg + 1)), corner(b));
            pieces.union(a.piece, b.piece);
        }

        let roots: Vec<usize> = (0..n).map(|p| pieces.find(p)).collect();
        let mut comp_of_root = std::collections::BTreeMap::new();
        for &r in &roots {
            let next = comp_of_root.len();
            comp_of_root.entry(r).or_insert(next);
        }
        let c = comp_of_root.len();
        let comp = |p: usize| comp_of_root[&roots[p]];

        let mut chi = vec![0i64; c];
        for p in 0..n {
            // a face, and its segments as edges
            chi[comp(p)] += 1 - self.segments(p).len() as i64;
        }
        for (a, _) in self.gluings() {
            chi[comp(a.piece)] += 1;
        }
        let mut vertex_seen = std::collections::BTreeSet::new();
        for p in 0..n {
            for s in 0..self.segments(p).len() {
                let v = corners.find(offset[p] + s);
                if vertex_seen.insert(v) {
                    chi[comp(p)] += 1;
                }
            }
        }
        let total: i64 = chi.iter().sum();
        if total != self.euler_characteristic() {
            return Err(Error::Contract(format!(
                "cell-structure Euler characteristic {total} differs from pieces minus gluings {}",
                self.euler_characteristic()
            )));
        }

        let report = self.boundary()?;
        let mut bdry = vec![0i64; c];
        for comp_b in &report.components {
            if let Some(e) = comp_b.locations().first() {
                bdry[comp(e.piece)] += 1;
            }
        }
        let mut genera = Vec::with_capacity(c);
        for k in 0..c {
            let twice = 2 - chi[k] - bdry[k];
            if twice < 0 || twice % 2 != 0 {
                return Err(Error::Contract(format!(
                    "component {k} has chi {} and {} boundary loops",
                    chi[k], bdry[k]
                )));
            }
            genera.push((twice / 2) as usize);
        }
        Ok(SurfaceSummary {
            euler_characteristic: total,
            connected_components: c,
            boundary_components: report.len(),
            genera,
        })
    }
}
