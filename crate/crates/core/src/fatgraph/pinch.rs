//! Build a complete fatgraph with prescribed boundary by pairing `z_i` with
//! `Z_i` occurrences into rectangles, grouping `c_j` occurrences into group
//! polygons, and filling the gaps with polygons.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{EdgeId, Fatgraph};
use crate::error::{Error, Result};
use crate::words::{cyclic_reduce, GenAlphabet, Generator, Letter, Word};

/// Pinch with first-unmatched pairing and grouping in order of occurrence.
///
/// Each word is cyclically reduced first; the boundary of the result reads
/// the reduced words, one component each.
pub fn pinch(words: &[Word], alphabet: &GenAlphabet) -> Result<Fatgraph> {
    pinch_with(words, alphabet, None)
}

/// Pinch with pairings and groupings shuffled by a seeded generator.
pub fn pinch_seeded(words: &[Word], alphabet: &GenAlphabet, seed: u64) -> Result<Fatgraph> {
    pinch_with(words, alphabet, Some(seed))
}

fn pinch_with(words: &[Word], alphabet: &GenAlphabet, seed: Option<u64>) -> Result<Fatgraph> {
    let mut loops: Vec<Vec<Letter>> = Vec::with_capacity(words.len());
    for w in words {
        let (core, _) = cyclic_reduce(w, alphabet)?;
        if core.is_empty() {
            return Err(Error::EmptyWord);
        }
        loops.push(core.letters().to_vec());
    }
    if loops.is_empty() {
        return Err(Error::EmptyWord);
    }

    // occurrences (loop, position) per symbol
    let mut plus: Vec<Vec<(usize, usize)>> = vec![Vec::new(); alphabet.inf_count()];
    let mut minus: Vec<Vec<(usize, usize)>> = vec![Vec::new(); alphabet.inf_count()];
    let mut fin: Vec<Vec<(usize, usize)>> = vec![Vec::new(); alphabet.fin_count()];
    for (k, l) in loops.iter().enumerate() {
        for (pos, x) in l.iter().enumerate() {
            match x.generator() {
                Generator::Inf(i) if x.is_inverse() => minus[i].push((k, pos)),
                Generator::Inf(i) => plus[i].push((k, pos)),
                Generator::Fin(j) => fin[j].push((k, pos)),
            }
        }
    }
    for i in 0..alphabet.inf_count() {
        if plus[i].len() != minus[i].len() {
            return Err(Error::HomologyObstruction(format!(
                "z{i} occurs {} times and Z{i} {} times",
                plus[i].len(),
                minus[i].len()
            )));
        }
    }
    for (j, occ) in fin.iter().enumerate() {
        if occ.len() % alphabet.order(j) != 0 {
            return Err(Error::HomologyObstruction(format!(
                "c{j} occurs {} times, not a multiple of its order {}",
                occ.len(),
                alphabet.order(j)
            )));
        }
    }
    if let Some(seed) = seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for m in minus.iter_mut() {
            m.shuffle(&mut rng);
        }
        for f in fin.iter_mut() {
            f.shuffle(&mut rng);
        }
    }

    let mut f = Fatgraph::new(alphabet.clone());
    // side location of every letter occurrence
    let mut side: Vec<Vec<EdgeId>> = loops.iter().map(|l| vec![EdgeId::new(0, 0); l.len()]).collect();
    for i in 0..alphabet.inf_count() {
        for (&(k, p), &(k2, p2)) in plus[i].iter().zip(&minus[i]) {
            let r = f.add_rectangle(i)?;
            side[k][p] = EdgeId::new(r, 0);
            side[k2][p2] = EdgeId::new(r, 2);
        }
    }
    for (j, occ) in fin.iter().enumerate() {
        for group in occ.chunks(alphabet.order(j)) {
            let g = f.add_group_polygon(j)?;
            for (r, &(k, p)) in group.iter().enumerate() {
                side[k][p] = EdgeId::new(g, 2 * r);
            }
        }
    }

    // The edge after a side must be followed, around a polygon corner, by
    // the edge before the next side of the same loop.
    let piece_edges: Vec<EdgeId> = (0..f.piece_count())
        .flat_map(|p| {
            let n = f.segments(p).len();
            (0..n).filter(move |s| s % 2 == 1).map(move |s| EdgeId::new(p, s))
        })
        .collect();
    let index_of = |e: EdgeId| piece_edges.binary_search(&e).expect("odd segments are edges");
    let mut succ = vec![usize::MAX; piece_edges.len()];
    for (k, l) in loops.iter().enumerate() {
        for pos in 0..l.len() {
            let s = side[k][pos];
            let t = side[k][(pos + 1) % l.len()];
            let after = EdgeId::new(s.piece, s.seg + 1);
            let n = f.segments(t.piece).len();
            let before = EdgeId::new(t.piece, (t.seg + n - 1) % n);
            succ[index_of(after)] = index_of(before);
        }
    }
    let mut used = vec![false; piece_edges.len()];
    for start in 0..piece_edges.len() {
        if used[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut e = start;
        while !used[e] {
            used[e] = true;
            orbit.push(e);
            e = succ[e];
        }
        let labels = orbit
            .iter()
            .map(|&e| f.edge_label(piece_edges[e]).map(|l| l.label))
            .collect::<Result<Vec<_>>>()?;
        let poly = f.add_polygon(labels)?;
        for (slot, &e) in orbit.iter().enumerate() {
            f.glue(piece_edges[e], EdgeId::new(poly, slot))?;
        }
    }
    Ok(f)
}
