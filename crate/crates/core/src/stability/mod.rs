//! Constructions of immersed surfaces whose boundary covers `w b^n`.
//!
//! The pipeline is: [`prepare_word`] pads `w` with copies of `b` until
//! nothing cancels against `b`; [`build_strip`] builds the partial fatgraph
//! `Y'` with boundary `w b^m`; padding or genus modules raise the exponent
//! and consume infinite-order edges; [`covering_trick`] closes up the
//! remaining finite-order edges.

mod covering;
mod disk;
mod genus;
pub mod modules;
mod number_theory;
mod padding;
mod prepare;
mod strip;

use crate::error::{Error, Result};
use crate::fatgraph::{BoundaryComponent, EdgeId, EdgeKind, Fatgraph};
use crate::realization::Realization;
use crate::words::{CyclicWord, Generator, Letter, Word};

pub use covering::covering_trick;
pub use disk::{achievable_exponents, build_disk_surface};
pub use genus::{attach_a_modules, build_genus_surface, build_yprime_genus, GenusOptions};
pub use modules::{build_module_a, build_module_a_i, build_module_a_ik, build_module_b};
pub use number_theory::{nt_bound, nt_witness, NtInstance};
pub use padding::pad_exponent_disk;
pub use prepare::{prepare_word, Prepared};
pub use strip::{build_strip, build_yprime_disk};

/// A partial fatgraph whose boundary reads `word * b^exponent`, reading
/// unglued `pe(c_j)` as `c_j` and unglued `pe(z_i^{±1})` through
/// [`expanded_reading`].
#[derive(Clone, Debug)]
pub struct PartialBuild {
    pub fatgraph: Fatgraph,
    /// The prepared word `w'` along the top of the strip.
    pub word: Word,
    pub exponent: usize,
    /// The side carrying the first letter of `word`.
    pub start: EdgeId,
}

/// A complete fatgraph whose boundary covers `target` with total degree
/// `degree`, where `target = w b^exponent` for the caller's original `w`.
#[derive(Clone, Debug)]
pub struct SurfaceBuild {
    pub fatgraph: Fatgraph,
    /// `w b^exponent` for the caller's `w`, cyclically reduced.
    pub target: CyclicWord,
    /// The exponent reached with no increment (`N`).
    pub base_exponent: usize,
    pub exponent: usize,
    pub degree: usize,
}

/// Read an unglued polygon edge as the boundary it will carry once a genus
/// module is attached: `pe(c_j)` as `c_j`, `pe(z_i)` as `z_i b_{i,+} Z_i`
/// and `pe(Z_i)` as `Z_i b_{i,-} z_i`. Other edges are unreadable.
pub fn expanded_reading(r: &Realization, component: &BoundaryComponent) -> Result<Word> {
    let mut subwords = Vec::new();
    for i in 0..r.alphabet().inf_count() {
        subwords.push(r.b_subwords(i)?);
    }
    component.read_with(|l| {
        if l.kind != EdgeKind::Polygon {
            return None;
        }
        let x = l.label;
        match x.generator() {
            Generator::Fin(_) => Some(vec![x]),
            Generator::Inf(i) => {
                let (plus, minus) = &subwords[i];
                let mid = if x.is_inverse() { minus } else { plus };
                let mut v = vec![x];
                v.extend_from_slice(mid.letters());
                v.push(x.partner());
                Some(v)
            }
        }
    })
}

/// If `word` is literally `prefix` followed by a power of `b`, return that
/// power.
pub(crate) fn power_after_prefix(word: &[Letter], prefix: &[Letter], b: &[Letter]) -> Option<usize> {
    if word.len() < prefix.len() || &word[..prefix.len()] != prefix {
        return None;
    }
    let rest = &word[prefix.len()..];
    if b.is_empty() || !rest.len().is_multiple_of(b.len()) {
        return None;
    }
    rest.chunks(b.len())
        .all(|c| c == b)
        .then_some(rest.len() / b.len())
}

impl PartialBuild {
    /// Check the boundary contract: one component which, read from
    /// `start` through [`expanded_reading`], is `word * b^exponent`.
    pub fn verify(&self, r: &Realization) -> Result<()> {
        let report = self.fatgraph.boundary()?;
        if report.len() != 1 {
            return Err(Error::Contract(format!(
                "{} boundary components, expected one",
                report.len()
            )));
        }
        let comp = report.components[0]
            .starting_at(self.start)
            .ok_or_else(|| Error::Contract(format!("boundary misses the start side {}", self.start)))?;
        let letters = expanded_reading(r, &comp)?.into_letters();
        match power_after_prefix(&letters, self.word.letters(), r.boundary_word().letters()) {
            Some(m) if m == self.exponent => Ok(()),
            _ => Err(Error::Contract(format!(
                "boundary {} is not {} followed by b^{}",
                Word::new(letters),
                self.word,
                self.exponent
            ))),
        }
    }
}
