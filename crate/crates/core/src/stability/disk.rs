use std::collections::BTreeSet;

use super::number_theory::reachable_table;
use super::{
    build_strip, build_yprime_genus, covering_trick, nt_bound, nt_witness, pad_exponent_disk, prepare_word,
    PartialBuild, SurfaceBuild,
};
use crate::error::{Error, Result};
use crate::fatgraph::{covers, EdgeKind};
use crate::realization::{Realization, Shape};
use crate::words::{cyclic_reduce, Word};

fn disk_orders(r: &Realization) -> Result<Vec<usize>> {
    match r.shape()? {
        Shape::Disk { orders } if orders.len() >= 3 => Ok(orders),
        Shape::Disk { orders } => Err(Error::TooFewConePoints(orders.len())),
        s => Err(Error::WrongShape(format!("expected a disk orbifold, found {s}"))),
    }
}

fn has_site(p: &PartialBuild, j: usize) -> bool {
    p.fatgraph
        .unglued_edges()
        .iter()
        .any(|(_, l)| l.kind == EdgeKind::Polygon && l.label.is_finite() && l.label.index() == j)
}

/// A complete fatgraph whose boundary covers `w b^(N + n g)` with degree
/// `L = lcm(o_j)`, where `g = gcd(o_j - 1)`.
///
/// `N` counts the copies of `b` absorbed while preparing `w`, the exponent
/// of `Y'` and the constructive bound for `x_j = o_j - 1`.
pub fn build_disk_surface(r: &Realization, w: &Word, n: usize) -> Result<SurfaceBuild> {
    let orders = disk_orders(r)?;
    let prepared = prepare_word(r, w)?;
    let b = r.boundary_word();
    let xs: Vec<i64> = orders.iter().map(|&o| o as i64 - 1).collect();
    let inst = nt_bound(&xs)?;
    let seq = nt_witness(&inst, inst.bound + n as i64 * inst.g)?;

    let mut absorbed = prepared.absorbed();
    let mut y = build_strip(r, &prepared.word)?;
    if !has_site(&y, seq[0]) {
        y = build_strip(r, &prepared.word.concat(b))?;
        absorbed += 1;
    }
    let base_exponent = absorbed + y.exponent + inst.bound as usize;
    let exponent = base_exponent + n * inst.g as usize;
    let padded = pad_exponent_disk(&y, r, &seq)?;
    debug_assert_eq!(absorbed + padded.exponent, exponent);

    let (fatgraph, degree) = covering_trick(&padded.fatgraph)?;
    let a = r.alphabet();
    let target = w.concat(&b.repeat(exponent));
    if covers(&fatgraph.boundary()?, &target, a)? != Some(degree) {
        return Err(Error::Contract(format!(
            "boundary does not cover w b^{exponent} with degree {degree}"
        )));
    }
    Ok(SurfaceBuild {
        fatgraph,
        target: cyclic_reduce(&target, a)?.0,
        base_exponent,
        exponent,
        degree,
    })
}

/// Exponents `e <= up_to` with `w b^e` reached by the constructions.
///
/// For a disk: the exponent of `Y'` plus any padding sum whose sequence can
/// start at an unglued edge of `Y'`. For a genus orbifold: every exponent
/// from the base onwards.
pub fn achievable_exponents(r: &Realization, w: &Word, up_to: usize) -> Result<BTreeSet<usize>> {
    let prepared = prepare_word(r, w)?;
    match r.shape()? {
        Shape::Disk { .. } => {
            let orders = disk_orders(r)?;
            let y = build_strip(r, &prepared.word)?;
            let base = prepared.absorbed() + y.exponent;
            let mut out = BTreeSet::new();
            if base > up_to {
                return Ok(out);
            }
            out.insert(base);
            let xs: Vec<i64> = orders.iter().map(|&o| o as i64 - 1).collect();
            // sequences read backwards: ending in j is starting in j
            let reach = reachable_table(&xs, (up_to - base) as i64);
            for (t, row) in reach.iter().enumerate() {
                if row.iter().enumerate().any(|(j, &ok)| ok && has_site(&y, j)) {
                    out.insert(base + t);
                }
            }
            Ok(out)
        }
        Shape::Genus { .. } => {
            let y = build_yprime_genus(r, &prepared.word, true)?;
            let base = prepared.absorbed() + 2 + y.exponent;
            Ok((base..=up_to).collect())
        }
    }
}
