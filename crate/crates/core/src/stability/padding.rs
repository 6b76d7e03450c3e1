use super::modules::{add_standard_polygon, polygon_edge};
use super::PartialBuild;
use crate::error::{Error, Result};
use crate::fatgraph::{EdgeId, EdgeKind};
use crate::realization::Realization;
use crate::words::Letter;

/// Raise the exponent of a disk build by `sum(o_j - 1)` over `seq`.
///
/// Step `t` glues a new `c_{seq[t]}` group polygon by its last edge to an
/// unglued `pe(c_{seq[t]})` and fills its other edges with standard
/// polygons, inserting `o - 1` copies of `b` into the boundary. The first
/// step uses the lowest such edge of the build; later steps only use edges
/// of the polygons added by the step before, which carry every label except
/// the one just used. Two equal neighbours in `seq` therefore fail with
/// [`Error::NoAttachmentSite`].
pub fn pad_exponent_disk(p: &PartialBuild, r: &Realization, seq: &[usize]) -> Result<PartialBuild> {
    let a = r.alphabet();
    let mut f = p.fatgraph.clone();
    let mut exponent = p.exponent;
    let mut fresh: Option<Vec<usize>> = None;
    for &j in seq {
        let x = Letter::c(j);
        a.check(x)?;
        let site = match &fresh {
            None => f
                .unglued_edges()
                .into_iter()
                .find(|(_, l)| l.kind == EdgeKind::Polygon && l.label == x)
                .map(|(e, _)| e),
            Some(polys) => polys
                .iter()
                .filter_map(|&q| polygon_edge(&f, q, x).ok())
                .find(|&e| f.partner(e).is_none()),
        }
        .ok_or(Error::NoAttachmentSite(j))?;
        let o = a.order(j);
        let g = f.add_group_polygon(j)?;
        f.glue(EdgeId::new(g, 2 * o - 1), site)?;
        let mut added = Vec::with_capacity(o - 1);
        for k in 0..o - 1 {
            let q = add_standard_polygon(&mut f, r.order(), x)?;
            f.glue(EdgeId::new(g, 2 * k + 1), EdgeId::new(q, 0))?;
            added.push(q);
        }
        fresh = Some(added);
        exponent += o - 1;
    }
    let out = PartialBuild {
        fatgraph: f,
        word: p.word.clone(),
        exponent,
        start: p.start,
    };
    out.verify(r)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::CyclicOrder;
    use crate::stability::build_strip;
    use crate::words::{GenAlphabet, Word};

    fn setup() -> (Realization, PartialBuild) {
        let a = GenAlphabet::new(0, vec![3, 3, 4]).unwrap();
        let r = Realization::new(a.clone(), CyclicOrder::parse("c0 c1 c2", &a).unwrap()).unwrap();
        let w = Word::parse("c0 c1^2 c2 c1", &a).unwrap();
        let p = build_strip(&r, &w).unwrap();
        (r, p)
    }

    #[test]
    fn single_and_double_steps() {
        let (r, p) = setup();
        assert_eq!(pad_exponent_disk(&p, &r, &[0]).unwrap().exponent, p.exponent + 2);
        assert_eq!(
            pad_exponent_disk(&p, &r, &[0, 1]).unwrap().exponent,
            p.exponent + 4
        );
        assert_eq!(
            pad_exponent_disk(&p, &r, &[2, 0, 2, 1]).unwrap().exponent,
            p.exponent + 10
        );
    }

    #[test]
    fn repeated_index_has_no_site() {
        let (r, p) = setup();
        assert_eq!(
            pad_exponent_disk(&p, &r, &[0, 0]).unwrap_err(),
            Error::NoAttachmentSite(0)
        );
    }
}
