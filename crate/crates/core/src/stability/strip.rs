//! The strip `Y'`: one piece per run of the word along the top, joined by
//! interval polygons, with the boundary word repeated along the bottom.

use super::modules::add_standard_polygon;
use super::{expanded_reading, power_after_prefix, PartialBuild};
use crate::error::{Error, Result};
use crate::fatgraph::{EdgeId, Fatgraph, Piece};
use crate::realization::{Realization, Shape};
use crate::words::{Generator, Letter, Word};

struct Run {
    first: Letter,
    last: Letter,
    top: EdgeId,
    entry: EdgeId,
    exit: EdgeId,
}

/// Split into maximal runs of one finite-order generator, with every
/// infinite-order letter a run of its own.
fn runs(word: &[Letter]) -> Vec<(Letter, usize)> {
    let mut out: Vec<(Letter, usize)> = Vec::new();
    for &x in word {
        match out.last_mut() {
            Some((y, n)) if *y == x && x.is_finite() => *n += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

fn add_run(f: &mut Fatgraph, r: &Realization, x: Letter, len: usize) -> Result<Run> {
    match x.generator() {
        Generator::Inf(i) => {
            let p = f.add_rectangle(i)?;
            let (top, exit, entry) = if x.is_inverse() { (2, 3, 1) } else { (0, 1, 3) };
            Ok(Run {
                first: x,
                last: x,
                top: EdgeId::new(p, top),
                entry: EdgeId::new(p, entry),
                exit: EdgeId::new(p, exit),
            })
        }
        Generator::Fin(j) => {
            let o = r.alphabet().order(j);
            if len >= o {
                return Err(Error::Contract(format!("run {x}^{len} is not reduced")));
            }
            let g = f.add_group_polygon(j)?;
            // monogons between consecutive top sides
            for k in 0..len - 1 {
                let m = f.add_polygon(vec![x])?;
                f.glue(EdgeId::new(g, 2 * k + 1), EdgeId::new(m, 0))?;
            }
            // standard polygons between consecutive bottom sides
            for k in len..o - 1 {
                let p = add_standard_polygon(f, r.order(), x)?;
                f.glue(EdgeId::new(g, 2 * k + 1), EdgeId::new(p, 0))?;
            }
            Ok(Run {
                first: x,
                last: x,
                top: EdgeId::new(g, 0),
                entry: EdgeId::new(g, 2 * o - 1),
                exit: EdgeId::new(g, 2 * len - 1),
            })
        }
    }
}

/// Build `Y'` for a prepared word and check that its boundary, read with
/// [`expanded_reading`], is literally `word * b^m`; `m` is recorded in the
/// result.
pub fn build_strip(r: &Realization, word: &Word) -> Result<PartialBuild> {
    let a = r.alphabet();
    let b = r.boundary_word();
    if word.is_empty() || !word.concat(b).is_reduced(a) || !b.concat(word).is_reduced(a) {
        return Err(Error::Contract(format!("{word} is not prepared against b = {b}")));
    }
    let mut f = Fatgraph::new(a.clone());
    let mut built = Vec::new();
    for (x, len) in runs(word.letters()) {
        built.push(add_run(&mut f, r, x, len)?);
    }
    for pair in built.windows(2) {
        let (left, right) = (&pair[0], &pair[1]);
        let q = f.add_piece(Piece::Polygon(
            r.order().interval(right.first, left.last.partner())?,
        ))?;
        let n = f.segments(q).len();
        if n < 2 {
            return Err(Error::Contract(format!(
                "degenerate connecting polygon after {}",
                left.last
            )));
        }
        f.glue(right.entry, EdgeId::new(q, 0))?;
        f.glue(left.exit, EdgeId::new(q, n - 1))?;
    }
    let (b0, b_last) = (
        b.first().expect("b is nonempty"),
        b.last().expect("b is nonempty"),
    );
    let first = &built[0];
    let last = &built[built.len() - 1];

    let tail = f.add_piece(Piece::Polygon(r.order().interval(b0, last.last.partner())?))?;
    let n = f.segments(tail).len();
    f.glue(last.exit, EdgeId::new(tail, n - 1))?;
    let head = f.add_piece(Piece::Polygon(r.order().interval(first.first, b_last.partner())?))?;
    f.glue(first.entry, EdgeId::new(head, 0))?;

    let report = f.boundary()?;
    if report.len() != 1 {
        return Err(Error::Contract(format!(
            "strip has {} boundary components",
            report.len()
        )));
    }
    let comp = report.components[0]
        .starting_at(first.top)
        .ok_or_else(|| Error::Contract("strip boundary misses the first top side".into()))?;
    let letters = expanded_reading(r, &comp)?.into_letters();
    let m = power_after_prefix(&letters, word.letters(), b.letters()).ok_or_else(|| {
        Error::Contract(format!(
            "strip boundary {} is not {word} followed by copies of {b}",
            Word::new(letters.clone())
        ))
    })?;
    Ok(PartialBuild {
        fatgraph: f,
        word: word.clone(),
        exponent: m,
        start: first.top,
    })
}

/// `Y'` for a disk orbifold.
pub fn build_yprime_disk(r: &Realization, word: &Word) -> Result<PartialBuild> {
    match r.shape()? {
        Shape::Disk { .. } => build_strip(r, word),
        s => Err(Error::WrongShape(format!("expected a disk orbifold, found {s}"))),
    }
}
