use crate::error::{Error, Result};
use crate::fatgraph::{EdgeId, EdgeKind, Fatgraph};

/// Close up a partial fatgraph whose only unglued edges are `pe(c_j)`.
///
/// Takes `L = lcm(o_j)` sheets. Over each unglued edge of the base, the
/// `L` lifts are split into `L / o_j` consecutive blocks of `o_j` sheets, and
/// each block is joined by one group polygon. The boundary reading of every
/// sheet is unchanged; only sheets are permuted, so the result covers the
/// base boundary with degree `L`.
///
/// Returns the complete fatgraph and `L`.
pub fn covering_trick(base: &Fatgraph) -> Result<(Fatgraph, usize)> {
    let unglued = base.unglued_edges();
    if let Some((e, l)) = unglued
        .iter()
        .find(|(_, l)| l.kind != EdgeKind::Polygon || !l.label.is_finite())
    {
        return Err(Error::UngluedInfiniteOrder(format!("{l} at {e}")));
    }
    let a = base.alphabet();
    let sheets = a.lcm_orders();
    let mut f = Fatgraph::new(a.clone());
    let mut offsets = Vec::with_capacity(sheets);
    for _ in 0..sheets {
        offsets.push(f.append(base)?);
    }
    for (e, l) in unglued {
        let j = l.label.index();
        let o = a.order(j);
        for block in 0..sheets / o {
            let g = f.add_group_polygon(j)?;
            for k in 0..o {
                let sheet = block * o + k;
                f.glue(
                    EdgeId::new(g, 2 * k + 1),
                    EdgeId::new(e.piece + offsets[sheet], e.seg),
                )?;
            }
        }
    }
    Ok((f, sheets))
}
