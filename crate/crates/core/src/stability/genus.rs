use super::modules::{build_module_a_i, build_module_a_ik, build_module_b, free_rect_edges};
use super::{build_strip, covering_trick, prepare_word, PartialBuild, SurfaceBuild};
use crate::error::{Error, Result};
use crate::fatgraph::{covers, EdgeId, EdgeKind, Fatgraph};
use crate::realization::{Realization, Shape};
use crate::words::{cyclic_reduce, least_rotation, Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenusOptions {
    /// Append `b^2` to the prepared word so that every `pe(z_i^{±1})`
    /// occurs at least four times.
    pub pad_b2: bool,
}

impl Default for GenusOptions {
    fn default() -> Self {
        GenusOptions { pad_b2: true }
    }
}

fn require_genus(r: &Realization) -> Result<()> {
    match r.shape()? {
        Shape::Genus { .. } => Ok(()),
        s => Err(Error::WrongShape(format!("expected a genus orbifold, found {s}"))),
    }
}

/// `Y'` for a genus orbifold and a prepared word, optionally followed by
/// `b^2`.
pub fn build_yprime_genus(r: &Realization, w: &Word, pad_b2: bool) -> Result<PartialBuild> {
    require_genus(r)?;
    let word = if pad_b2 {
        w.concat(&r.boundary_word().repeat(2))
    } else {
        w.clone()
    };
    build_strip(r, &word)
}

/// Unglued `pe(z_i)` and `pe(Z_i)` per index, lowest first.
fn z_sites(f: &Fatgraph) -> Result<Vec<(Vec<EdgeId>, Vec<EdgeId>)>> {
    let mut sites = vec![(Vec::new(), Vec::new()); f.alphabet().inf_count()];
    for (e, l) in f.unglued_edges() {
        if l.kind != EdgeKind::Polygon || l.label.is_finite() {
            continue;
        }
        let (plus, minus) = &mut sites[l.label.index()];
        if l.label.is_inverse() {
            minus.push(e);
        } else {
            plus.push(e);
        }
    }
    for (index, (plus, minus)) in sites.iter().enumerate() {
        if plus.len() != minus.len() {
            return Err(Error::EquidistributionFailure {
                index,
                plus: plus.len(),
                minus: minus.len(),
            });
        }
    }
    Ok(sites)
}

/// Copy `module` into `f` and glue its free `re(z_i)` edges to `plus` and
/// its free `re(Z_i)` edges to `minus`, in order.
fn attach(f: &mut Fatgraph, module: &Fatgraph, i: usize, plus: &[EdgeId], minus: &[EdgeId]) -> Result<()> {
    let free_plus = free_rect_edges(module, Letter::z(i));
    let free_minus = free_rect_edges(module, Letter::z_inv(i));
    if free_plus.len() != plus.len() || free_minus.len() != minus.len() {
        return Err(Error::Contract(format!(
            "module for z{i} has the wrong number of free edges"
        )));
    }
    let off = f.append(module)?;
    let shift = |e: EdgeId| EdgeId::new(e.piece + off, e.seg);
    for (m, &s) in free_plus.iter().zip(plus).chain(free_minus.iter().zip(minus)) {
        f.glue(shift(*m), s)?;
    }
    Ok(())
}

/// Fill every unglued `pe(z_i^{±1})` with copies of `A_i`, pairing the
/// `t`-th `pe(z_i)` with the `t`-th `pe(Z_i)`. When `insert > 0`, the first
/// pair of index 0 gets `A_{0,insert}` instead. The last `leave` pairs of
/// index 0 stay unglued.
fn fill_z_edges(p: &PartialBuild, r: &Realization, insert: usize, leave: usize) -> Result<PartialBuild> {
    let sites = z_sites(&p.fatgraph)?;
    let needed = leave + usize::from(insert > 0);
    if sites[0].0.len() < needed {
        return Err(Error::InsufficientEdges {
            index: 0,
            needed,
            found: sites[0].0.len(),
        });
    }
    let mut f = p.fatgraph.clone();
    for (i, (plus, minus)) in sites.iter().enumerate() {
        let module = build_module_a_i(r, i)?;
        let used = if i == 0 { plus.len() - leave } else { plus.len() };
        for t in 0..used {
            if i == 0 && t == 0 && insert > 0 {
                attach(
                    &mut f,
                    &build_module_a_ik(r, 0, insert)?,
                    0,
                    &plus[..1],
                    &minus[..1],
                )?;
            } else {
                attach(&mut f, &module, i, &plus[t..t + 1], &minus[t..t + 1])?;
            }
        }
    }
    Ok(PartialBuild {
        fatgraph: f,
        word: p.word.clone(),
        exponent: p.exponent + insert,
        start: p.start,
    })
}

/// Attach `A_i` modules to every unglued infinite-order polygon edge. The
/// boundary reading is unchanged.
pub fn attach_a_modules(p: &PartialBuild, r: &Realization) -> Result<PartialBuild> {
    require_genus(r)?;
    let out = fill_z_edges(p, r, 0, 0)?;
    out.verify(r)?;
    Ok(out)
}

fn cyclic_key(letters: &[Letter]) -> Vec<Letter> {
    let mut v = letters.to_vec();
    let k = least_rotation(&v);
    v.rotate_left(k);
    v
}

/// Two copies of `x`, which leaves the last two pairs of index 0 unglued,
/// closed up by two copies of `B`.
///
/// With `e1, e2` the open `pe(z_0)` and `e3, e4` the open `pe(Z_0)` of the
/// first sheet and primes on the second, one `B` takes `e1, e2, e3, e3'`
/// and the other `e1', e2', e4, e4'`. Both boundary components must then
/// read `word * b^(exponent + 1)`.
fn double_with_b(x: &PartialBuild, r: &Realization) -> Result<Fatgraph> {
    let sites = z_sites(&x.fatgraph)?;
    let (plus, minus) = &sites[0];
    if plus.len() != 2 {
        return Err(Error::Contract(format!(
            "expected two open pairs of z0, found {}",
            plus.len()
        )));
    }
    let b = build_module_b(r, 0)?;
    let mut f = Fatgraph::new(r.alphabet().clone());
    let off0 = f.append(&x.fatgraph)?;
    let off1 = f.append(&x.fatgraph)?;
    let lift = |e: EdgeId, off: usize| EdgeId::new(e.piece + off, e.seg);
    let (e1, e2, e3, e4) = (plus[0], plus[1], minus[0], minus[1]);
    attach(
        &mut f,
        &b,
        0,
        &[lift(e1, off0), lift(e2, off0)],
        &[lift(e3, off0), lift(e3, off1)],
    )?;
    attach(
        &mut f,
        &b,
        0,
        &[lift(e1, off1), lift(e2, off1)],
        &[lift(e4, off0), lift(e4, off1)],
    )?;

    let target = x.word.concat(&r.boundary_word().repeat(x.exponent + 1));
    let key = cyclic_key(target.letters());
    let words = f.boundary()?.words()?;
    if words.len() != 2 || words.iter().any(|w| cyclic_key(w.letters()) != key) {
        return Err(Error::Contract(
            "the two B modules do not give a double cover".into(),
        ));
    }
    Ok(f)
}

/// A complete fatgraph whose boundary covers `w b^(N + n)`, where `N` is the
/// exponent reached with no increment.
///
/// Even `n` replaces one `A_0` by `A_{0,n}`, giving degree `L`. Odd `n`
/// uses `A_{0,n-1}` and a double cover closed by two `B` modules, giving
/// degree `2L`.
pub fn build_genus_surface(r: &Realization, w: &Word, n: usize, opts: GenusOptions) -> Result<SurfaceBuild> {
    require_genus(r)?;
    let prepared = prepare_word(r, w)?;
    let y = build_yprime_genus(r, &prepared.word, opts.pad_b2)?;
    let base_exponent = prepared.absorbed() + if opts.pad_b2 { 2 } else { 0 } + y.exponent;
    let exponent = base_exponent + n;

    let (partial, sheets) = if n.is_multiple_of(2) {
        let filled = fill_z_edges(&y, r, n, 0)?;
        filled.verify(r)?;
        (filled.fatgraph, 1)
    } else {
        let x = fill_z_edges(&y, r, n - 1, 2)?;
        (double_with_b(&x, r)?, 2)
    };
    let (fatgraph, l) = covering_trick(&partial)?;
    let degree = sheets * l;

    let a = r.alphabet();
    let target = w.concat(&r.boundary_word().repeat(exponent));
    let report = fatgraph.boundary()?;
    if covers(&report, &target, a)? != Some(degree) {
        return Err(Error::Contract(format!(
            "boundary does not cover {target} with degree {degree}"
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
