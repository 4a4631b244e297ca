//! Exhaustive and seeded enumeration of monomial ideals and subquotients.

use crate::ideal::MonomialIdeal;
use crate::module::Subquotient;
use crate::monomial::Monomial;
use rand::Rng;
use std::collections::BTreeSet;

/// Exponent vectors of the box `[0, max_exponent]^n`, ordered by total
/// degree and then lexicographically.
pub fn box_points(n: usize, max_exponent: u32) -> Vec<Monomial> {
    let mut pts = Vec::new();
    crate::decomp::for_each_in_box(&vec![max_exponent; n], |b| pts.push(Monomial::new(b.to_vec())));
    pts.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    pts
}

/// Every monomial ideal whose minimal generators lie in the box
/// `[0, max_exponent]^n`, with at most `max_generators` generators, each
/// exactly once. Includes the zero ideal (no generators) and the unit ideal.
pub fn enumerate_ideals(n: usize, max_exponent: u32, max_generators: usize) -> Vec<MonomialIdeal> {
    let pts = box_points(n, max_exponent);
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    antichains(&pts, 0, max_generators, &mut chosen, &mut |c| {
        out.push(MonomialIdeal::new(n, c.iter().map(|&k| pts[k].clone())));
    });
    out
}

fn antichains(
    pts: &[Monomial],
    from: usize,
    max_size: usize,
    chosen: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    emit(chosen);
    if chosen.len() == max_size {
        return;
    }
    for k in from..pts.len() {
        let p = &pts[k];
        if chosen.iter().all(|&c| !pts[c].divides(p) && !p.divides(&pts[c])) {
            chosen.push(k);
            antichains(pts, k + 1, max_size, chosen, emit);
            chosen.pop();
        }
    }
}

/// Count of distinct ideals obtained from every subset of the box, by
/// comparing the sets of box points they contain. Independent of the
/// antichain search; only feasible for boxes of at most 20 points.
pub fn ideal_count_by_subsets(n: usize, max_exponent: u32, max_generators: usize) -> Option<usize> {
    let pts = box_points(n, max_exponent);
    if pts.len() > 20 {
        return None;
    }
    let mut seen = BTreeSet::new();
    for mask in 0u32..(1 << pts.len()) {
        let gens: Vec<&Monomial> = (0..pts.len()).filter(|k| mask >> k & 1 == 1).map(|k| &pts[k]).collect();
        // the minimal elements of the subset are the generators
        let minimal = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && h.divides(g)))
            .count();
        if minimal > max_generators {
            continue;
        }
        let members: Vec<bool> = pts.iter().map(|p| gens.iter().any(|g| g.divides(p))).collect();
        seen.insert(members);
    }
    Some(seen.len())
}

/// All subquotients `A/B` with `B ⊆ A` drawn from `ideals`.
pub fn enumerate_subquotients(ideals: &[MonomialIdeal]) -> Vec<Subquotient> {
    let mut out = Vec::new();
    for a in ideals {
        for b in ideals {
            if b.is_subset_of(a) {
                out.push(Subquotient::new(a.clone(), b.clone()).expect("B ⊆ A was checked"));
            }
        }
    }
    out
}

/// `R/K` for every `K` in `ideals`.
pub fn quotient_rings(ideals: &[MonomialIdeal]) -> Vec<Subquotient> {
    ideals.iter().cloned().map(Subquotient::quotient_ring).collect()
}

pub fn random_monomial(rng: &mut impl Rng, n: usize, max_exponent: u32) -> Monomial {
    Monomial::new((0..n).map(|_| rng.gen_range(0..=max_exponent)).collect())
}

/// A random ideal with up to `max_generators` generators, never the unit
/// ideal; zero only if `allow_zero`.
pub fn random_ideal(
    rng: &mut impl Rng,
    n: usize,
    max_exponent: u32,
    max_generators: usize,
    allow_zero: bool,
) -> MonomialIdeal {
    let lo = usize::from(!allow_zero);
    let k = rng.gen_range(lo..=max_generators.max(lo));
    let gens = (0..k).map(|_| loop {
        let m = random_monomial(rng, n, max_exponent);
        if !m.is_one() {
            break m;
        }
    });
    MonomialIdeal::new(n, gens.collect::<Vec<_>>())
}

/// A random nonzero-or-zero subquotient: `R/K` half the time, otherwise
/// `A/(A ∩ C)`.
pub fn random_module(rng: &mut impl Rng, n: usize, max_exponent: u32) -> Subquotient {
    if rng.gen_bool(0.5) {
        Subquotient::quotient_ring(random_ideal(rng, n, max_exponent, 3, true))
    } else {
        let a = random_ideal(rng, n, max_exponent, 2, false);
        let c = random_ideal(rng, n, max_exponent, 3, false);
        let b = a.intersect(&c);
        Subquotient::new(a, b).expect("A ∩ C ⊆ A")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_variable_census_has_twenty_ideals() {
        let ideals = enumerate_ideals(2, 2, 4);
        assert_eq!(ideals.len(), 20);
        let distinct: BTreeSet<_> = ideals.iter().collect();
        assert_eq!(distinct.len(), 20);
        assert_eq!(ideal_count_by_subsets(2, 2, 4), Some(20));
        assert!(ideals[0].is_zero());
        assert!(ideals.iter().any(|i| i.is_unit()));
    }

    #[test]
    fn subquotient_count_matches_nested_pairs() {
        // pairs of nested order ideals of a 3x3 grid: plane partitions in a
        // 3x3x2 box
        let ideals = enumerate_ideals(2, 2, 4);
        assert_eq!(enumerate_subquotients(&ideals).len(), 175);
    }

    #[test]
    fn three_variable_count_matches_plane_partitions() {
        // with no generator cap, ideals in a 3x3x3 box correspond to plane
        // partitions inside a 3x3x3 box
        let product = |a: u64, b: u64, c: u64| -> u64 {
            let mut num = 1u128;
            let mut den = 1u128;
            for i in 1..=a {
                for j in 1..=b {
                    for k in 1..=c {
                        num *= (i + j + k - 1) as u128;
                        den *= (i + j + k - 2) as u128;
                    }
                }
            }
            (num / den) as u64
        };
        assert_eq!(product(3, 3, 1), 20);
        assert_eq!(enumerate_ideals(3, 2, usize::MAX).len() as u64, product(3, 3, 3));
    }
}
