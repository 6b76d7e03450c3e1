//! The immersion certificate: every polygon small and compatible with the
//! cyclic order, and every boundary loop hyperbolic.
//!
//! Passing is sufficient for the fatgraph map to be homotopic to an
//! immersion with geodesic boundary. Failing proves nothing.

use std::fmt;

use crate::cyclic::CyclicSubOrder;
use crate::error::{Error, Result};
use crate::fatgraph::{Fatgraph, Piece};
use crate::realization::Realization;
use crate::words::{classify, ElementClass, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolygonVerdict {
    /// Small and compatible; monogons and bigons pass vacuously.
    Pass,
    /// The label occurs more than once.
    NotSmall(Letter),
    /// `(a_0, a_k, a_{k+1})` is negatively oriented in the cyclic order.
    Incompatible(Letter, Letter, Letter),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonResult {
    pub piece: usize,
    pub labels: CyclicSubOrder,
    pub verdict: PolygonVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentResult {
    pub word: Word,
    pub class: ElementClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateReport {
    pub polygons: Vec<PolygonResult>,
    pub components: Vec<ComponentResult>,
}

impl CertificateReport {
    pub fn passed(&self) -> bool {
        self.polygons.iter().all(|p| p.verdict == PolygonVerdict::Pass)
            && self
                .components
                .iter()
                .all(|c| c.class == ElementClass::Hyperbolic)
    }

    /// One `polygon <idx> pass|notsmall:<x>|incompat:<x>,<y>,<z>` line per
    /// polygon.
    pub fn machine_lines(&self) -> String {
        let mut s = String::new();
        for p in &self.polygons {
            let v = match &p.verdict {
                PolygonVerdict::Pass => "pass".to_string(),
                PolygonVerdict::NotSmall(x) => format!("notsmall:{x}"),
                PolygonVerdict::Incompatible(x, y, z) => format!("incompat:{x},{y},{z}"),
            };
            s.push_str(&format!("polygon {} {v}\n", p.piece));
        }
        s
    }
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.polygons {
            match &p.verdict {
                PolygonVerdict::Pass => writeln!(f, "polygon {} {}: small, compatible", p.piece, p.labels)?,
                PolygonVerdict::NotSmall(x) => {
                    writeln!(f, "polygon {} {}: label {x} repeats", p.piece, p.labels)?
                }
                PolygonVerdict::Incompatible(x, y, z) => writeln!(
                    f,
                    "polygon {} {}: ({x}, {y}, {z}) is reversed in the cyclic order",
                    p.piece, p.labels
                )?,
            }
        }
        for (k, c) in self.components.iter().enumerate() {
            writeln!(f, "boundary {k}: {} ({})", c.word, c.class)?;
        }
        writeln!(f, "certificate: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

fn polygon_verdict(labels: &CyclicSubOrder, r: &Realization) -> Result<PolygonVerdict> {
    let ls = labels.labels();
    for (k, x) in ls.iter().enumerate() {
        if ls[..k].contains(x) {
            return Ok(PolygonVerdict::NotSmall(*x));
        }
    }
    Ok(match r.order().first_incompatible_triple(labels)? {
        None => PolygonVerdict::Pass,
        Some((x, y, z)) => PolygonVerdict::Incompatible(x, y, z),
    })
}

/// Run the certificate on a complete, valid fatgraph.
pub fn check_certificate(f: &Fatgraph, r: &Realization) -> Result<CertificateReport> {
    if f.alphabet() != r.alphabet() {
        return Err(Error::InvalidFatgraph(
            "fatgraph and realization use different alphabets".into(),
        ));
    }
    let violations = f.validate();
    if let Some(v) = violations.first() {
        return Err(Error::InvalidFatgraph(format!(
            "{v} ({} violations)",
            violations.len()
        )));
    }
    if !f.is_complete() {
        return Err(Error::Incomplete);
    }
    let mut polygons = Vec::new();
    for p in f.polygon_indices() {
        let Piece::Polygon(labels) = f.piece(p) else {
            unreachable!()
        };
        polygons.push(PolygonResult {
            piece: p,
            labels: labels.clone(),
            verdict: polygon_verdict(labels, r)?,
        });
    }
    let boundary = r.boundary_cyclic();
    let mut components = Vec::new();
    for word in f.boundary()?.words()? {
        let class = classify(&word, &boundary, r.alphabet())?;
        components.push(ComponentResult { word, class });
    }
    Ok(CertificateReport { polygons, components })
}
