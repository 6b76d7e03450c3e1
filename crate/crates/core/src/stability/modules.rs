//! Genus modules: `A`, `A_i`, `A_{i,k}` and `B`.

use crate::cyclic::CyclicOrder;
use crate::error::{Error, Result};
use crate::fatgraph::{EdgeId, EdgeKind, Fatgraph, Segment};
use crate::realization::{Realization, Shape};
use crate::words::{GenAlphabet, Letter};

/// Add a standard polygon whose edges follow the cyclic order starting at
/// `start`; returns its piece index.
pub(crate) fn add_standard_polygon(f: &mut Fatgraph, order: &CyclicOrder, start: Letter) -> Result<usize> {
    f.add_polygon(order.rotation_from(start)?)
}

/// Segment of polygon `poly` carrying `pe(x)`; standard polygons have one.
pub(crate) fn polygon_edge(f: &Fatgraph, poly: usize, x: Letter) -> Result<EdgeId> {
    f.segments(poly)
        .iter()
        .position(|s| matches!(s, Segment::Edge(l) if l.label == x))
        .map(|s| EdgeId::new(poly, s))
        .ok_or_else(|| Error::Contract(format!("piece {poly} has no pe({x})")))
}

/// `re(z_i)` is segment 3 of a rectangle, `re(Z_i)` segment 1.
pub(crate) fn rect_edge(rect: usize, x: Letter) -> EdgeId {
    EdgeId::new(rect, if x.is_inverse() { 1 } else { 3 })
}

/// Module `A`: the standard polygon with every rectangle `r(z_i)` glued to
/// both of its edges `pe(z_i)` and `pe(Z_i)`. Its unglued edges are the
/// `pe(c_j)` and, read as letters, its boundary is the boundary word.
pub fn module_a(alphabet: &GenAlphabet, order: &CyclicOrder) -> Result<Fatgraph> {
    let mut f = Fatgraph::new(alphabet.clone());
    let start = order.symbols()[0];
    let poly = add_standard_polygon(&mut f, order, start)?;
    for i in 0..alphabet.inf_count() {
        let r = f.add_rectangle(i)?;
        for x in [Letter::z(i), Letter::z_inv(i)] {
            let pe = polygon_edge(&f, poly, x)?;
            f.glue(rect_edge(r, x), pe)?;
        }
    }
    Ok(f)
}

fn require_genus(r: &Realization) -> Result<()> {
    match r.shape()? {
        Shape::Genus { .. } => Ok(()),
        s => Err(Error::WrongShape(format!("expected a genus orbifold, found {s}"))),
    }
}

fn require_index(r: &Realization, i: usize) -> Result<()> {
    r.alphabet().check(Letter::z(i))
}

/// Glue a new `r(z_i)` with `re(z_i)` on `plus` and `re(Z_i)` on `minus`,
/// either of which may be left free.
fn add_rect_between(
    f: &mut Fatgraph,
    i: usize,
    plus: Option<EdgeId>,
    minus: Option<EdgeId>,
) -> Result<usize> {
    let rect = f.add_rectangle(i)?;
    if let Some(e) = plus {
        f.glue(rect_edge(rect, Letter::z(i)), e)?;
    }
    if let Some(e) = minus {
        f.glue(rect_edge(rect, Letter::z_inv(i)), e)?;
    }
    Ok(rect)
}

/// Unglued rectangle edges of a module labelled `x`, lowest first.
pub fn free_rect_edges(f: &Fatgraph, x: Letter) -> Vec<EdgeId> {
    f.unglued_edges()
        .into_iter()
        .filter(|(_, l)| l.kind == EdgeKind::Rectangle && l.label == x)
        .map(|(e, _)| e)
        .collect()
}

/// Module `A` for a genus orbifold; its boundary read as a word is `b`.
pub fn build_module_a(r: &Realization) -> Result<Fatgraph> {
    require_genus(r)?;
    module_a(r.alphabet(), r.order())
}

/// Module `A_i`: module `A` with `r(z_i)` split into two rectangles, one on
/// each of `pe(z_i)` and `pe(Z_i)`. Its two boundary components read
/// `re(z_i) z_i b_{i,+} Z_i` and `re(Z_i) Z_i b_{i,-} z_i`.
pub fn build_module_a_i(r: &Realization, i: usize) -> Result<Fatgraph> {
    require_genus(r)?;
    require_index(r, i)?;
    module_a_ik(r, i, 0, false)
}

/// Module `A_{i,k}` for even `k`: a chain of `k + 1` standard polygons
/// joined by copies of `r(z_i)` and, in pairs, `r(z_{i'})`. Its boundary is
/// that of `A_i` with `k` further copies of `b` after the `Z_i` of the
/// `re(Z_i)` component.
pub fn build_module_a_ik(r: &Realization, i: usize, k: usize) -> Result<Fatgraph> {
    require_genus(r)?;
    require_index(r, i)?;
    if !k.is_multiple_of(2) {
        return Err(Error::OddInsertion(k));
    }
    module_a_ik(r, i, k, false)
}

/// Module `B`: `A_{i,2}` with the `r(z_i)` between the first two polygons
/// cut into one rectangle on each. It has two free `re(z_i)` and two free
/// `re(Z_i)`.
pub fn build_module_b(r: &Realization, i: usize) -> Result<Fatgraph> {
    require_genus(r)?;
    require_index(r, i)?;
    module_a_ik(r, i, 2, true)
}

fn module_a_ik(r: &Realization, i: usize, k: usize, split_first: bool) -> Result<Fatgraph> {
    let a = r.alphabet();
    let order = r.order();
    let ip = i ^ 1;
    let (zi, zi_inv) = (Letter::z(i), Letter::z_inv(i));
    let (zp, zp_inv) = (Letter::z(ip), Letter::z_inv(ip));
    let mut f = Fatgraph::new(a.clone());
    let start = order.symbols()[0];
    let mut polys = Vec::with_capacity(k + 1);
    for _ in 0..=k {
        let p = add_standard_polygon(&mut f, order, start)?;
        for t in (0..a.inf_count()).filter(|&t| t != i && t != ip) {
            let plus = polygon_edge(&f, p, Letter::z(t))?;
            let minus = polygon_edge(&f, p, Letter::z_inv(t))?;
            add_rect_between(&mut f, t, Some(plus), Some(minus))?;
        }
        polys.push(p);
    }
    let pe = |f: &Fatgraph, l: usize, x: Letter| polygon_edge(f, polys[l], x);

    let e = pe(&f, 0, zi)?;
    add_rect_between(&mut f, i, Some(e), None)?;
    let e = pe(&f, k, zi_inv)?;
    add_rect_between(&mut f, i, None, Some(e))?;
    for l in 0..k {
        let minus = pe(&f, l, zi_inv)?;
        let plus = pe(&f, l + 1, zi)?;
        if split_first && l == 0 {
            add_rect_between(&mut f, i, None, Some(minus))?;
            add_rect_between(&mut f, i, Some(plus), None)?;
        } else {
            add_rect_between(&mut f, i, Some(plus), Some(minus))?;
        }
    }
    for l in (0..k).step_by(2) {
        let (p0, m0) = (pe(&f, l, zp)?, pe(&f, l, zp_inv)?);
        let (p1, m1) = (pe(&f, l + 1, zp)?, pe(&f, l + 1, zp_inv)?);
        add_rect_between(&mut f, ip, Some(p0), Some(m1))?;
        add_rect_between(&mut f, ip, Some(p1), Some(m0))?;
    }
    let (p, m) = (pe(&f, k, zp)?, pe(&f, k, zp_inv)?);
    add_rect_between(&mut f, ip, Some(p), Some(m))?;
    Ok(f)
}
