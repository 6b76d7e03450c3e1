use crate::error::{Error, Result};
use crate::realization::{Realization, Shape};
use crate::words::{classify, free_reduce, z_exponent_sums, ElementClass, Word};

/// A word `w' = b^before * w * b^after` (freely reduced) that neither
/// cancels against a following nor a preceding `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prepared {
    pub word: Word,
    pub before: usize,
    pub after: usize,
}

impl Prepared {
    /// Copies of `b` absorbed into the word.
    pub fn absorbed(&self) -> usize {
        self.before + self.after
    }
}

/// Prepend and append the fewest copies of `b` so that `w' b` and `b w'` are
/// reduced as written. Ties in the total are broken by fewer prepended
/// copies.
///
/// `w` must be hyperbolic, and for genus orbifolds null-homologous in the
/// infinite-order generators.
pub fn prepare_word(r: &Realization, w: &Word) -> Result<Prepared> {
    let a = r.alphabet();
    if classify(w, &r.boundary_cyclic(), a)? != ElementClass::Hyperbolic {
        return Err(Error::NotHyperbolic);
    }
    if let Shape::Genus { .. } = r.shape()? {
        let sums = z_exponent_sums(w, a)?;
        if let Some((i, s)) = sums.iter().enumerate().find(|(_, &s)| s != 0) {
            return Err(Error::HomologyObstruction(format!("z{i} has exponent sum {s}")));
        }
    }
    let b = r.boundary_word();
    let limit = 2 * (w.len() / b.len().max(1)) + 4;
    for total in 0..=limit {
        for before in 0..=total {
            let after = total - before;
            let candidate = free_reduce(&b.repeat(before).concat(w).concat(&b.repeat(after)), a)?;
            if candidate.is_empty() {
                continue;
            }
            if candidate.concat(b).is_reduced(a) && b.concat(&candidate).is_reduced(a) {
                return Ok(Prepared {
                    word: candidate,
                    before,
                    after,
                });
            }
        }
    }
    Err(Error::Contract(format!(
        "no padding of {w} by up to {limit} copies of b avoids cancellation"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::CyclicOrder;
    use crate::words::GenAlphabet;

    fn disk() -> Realization {
        let a = GenAlphabet::new(0, vec![3, 3, 4]).unwrap();
        Realization::new(a.clone(), CyclicOrder::parse("c0 c1 c2", &a).unwrap()).unwrap()
    }

    #[test]
    fn unchanged_when_nothing_cancels() {
        let r = disk();
        let w = Word::parse("c0 c1^2 c2 c1", r.alphabet()).unwrap();
        let p = prepare_word(&r, &w).unwrap();
        assert_eq!(
            p,
            Prepared {
                word: w,
                before: 0,
                after: 0
            }
        );
    }

    #[test]
    fn absorbs_copies_of_b() {
        let r = disk();
        // ends in c0^2 and b starts with c0, whose order is 3
        let w = Word::parse("c1 c0^2 c2 c0^2", r.alphabet()).unwrap();
        let p = prepare_word(&r, &w).unwrap();
        assert_eq!((p.before, p.after), (0, 1));
        let b = r.boundary_word();
        assert!(p.word.concat(b).is_reduced(r.alphabet()));
        assert!(b.concat(&p.word).is_reduced(r.alphabet()));
        let direct = free_reduce(
            &b.repeat(p.before).concat(&w).concat(&b.repeat(p.after)),
            r.alphabet(),
        )
        .unwrap();
        assert_eq!(direct, p.word);
    }

    #[test]
    fn rejects_non_hyperbolic() {
        let r = disk();
        let a = r.alphabet();
        assert_eq!(
            prepare_word(&r, &Word::parse("c0", a).unwrap()),
            Err(Error::NotHyperbolic)
        );
        assert_eq!(
            prepare_word(&r, &Word::parse("c1 c2 c0", a).unwrap()),
            Err(Error::NotHyperbolic)
        );
    }

    #[test]
    fn genus_homology() {
        let a = GenAlphabet::new(2, vec![3]).unwrap();
        let r = Realization::new(a.clone(), CyclicOrder::parse("z0 Z1 c0 Z0 z1", &a).unwrap()).unwrap();
        let w = Word::parse("z0 c0 z0 c0", &a).unwrap();
        assert!(matches!(prepare_word(&r, &w), Err(Error::HomologyObstruction(_))));
        let w = Word::parse("z0 c0 Z0 c0", &a).unwrap();
        assert_eq!(prepare_word(&r, &w).unwrap().absorbed(), 0);
    }
}
