//! Non-monomial primes of `W(I,J)` in the local ring at the origin.
//!
//! Every prime `p ⊆ (x_1..x_n)` contains a largest monomial prime `p*`, and
//! for a multigraded module `depth(M_p) = depth(M_{p*}) + ht p - ht p*`.
//! So the infimum over all of `W(I,J)` is the least
//! `depth(M_q) + e(q)` over monomial primes `q`, where `e(q)` is the least
//! height of `p / q` over primes `p ∈ W(I,J)` with `p* = q` (zero exactly
//! when `q ∈ W(I,J)`).
//!
//! Write `T` for the variables outside `q`. Such `p` correspond to
//! irreducible germs `Z ⊆ A^T` at the origin that meet the torus, and
//! `p ∈ W(I,J)` says that no point of `Z` near the origin has a support
//! `F ⊆ T` on which `J` vanishes but `I` does not ("bad" supports). Every
//! germ realizes the supports `∅` and `T`. A curve (codimension `|T|-1`)
//! realizes nothing else. For `|T| = 3`, a surface must realize, for each
//! variable, a nonempty support avoiding it; a toric surface realizes any
//! two disjoint nonempty supports and a generic plane realizes the three
//! two-element supports. That settles `|T| ≤ 3`, which covers every ring of
//! at most three variables.

use crate::decomp::MonomialPrime;
use crate::ideal::MonomialIdeal;
use serde::{Deserialize, Serialize};

/// Which primes the depth infimum ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimeScope {
    /// Monomial primes only. An upper bound for the depth, attained in
    /// many but not all cases: `depth((x,y), (xy), R)` is 2 here but 1
    /// through the prime `(x - y)`.
    Monomial,
    /// All primes of the local ring at the origin, through the graded
    /// localization formula.
    #[default]
    Local,
}

/// Least height of `p / q` over primes `p ∈ W(I,J)` with `p* = q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Excess {
    Exact(u32),
    /// No such prime.
    Empty,
    /// Not decided for this many outside variables; the value lies in the
    /// closed range.
    Between(u32, u32),
}

fn support_masks(ideal: &MonomialIdeal) -> Vec<u64> {
    ideal
        .gens()
        .iter()
        .map(|g| g.support().iter().fold(0u64, |acc, &v| acc | 1 << v))
        .collect()
}

/// The ideal vanishes on points with support exactly `f`.
fn vanishes(gens: &[u64], f: u64) -> bool {
    !gens.iter().any(|&g| g & !f == 0)
}

fn submasks(t: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(t);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & t) };
        Some(cur)
    })
}

pub fn excess_height(q: &MonomialPrime, i: &MonomialIdeal, j: &MonomialIdeal) -> Excess {
    let n = i.nvars();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let t = full & !q.mask();
    let (ig, jg) = (support_masks(i), support_masks(j));
    let bad = |f: u64| vanishes(&jg, f) && !vanishes(&ig, f);
    if !submasks(t).any(bad) {
        return Excess::Exact(0);
    }
    let size = t.count_ones();
    if bad(t) || bad(0) || size < 2 {
        return Excess::Empty;
    }
    match size {
        2 => Excess::Exact(1),
        3 => {
            let good: Vec<u64> = submasks(t).filter(|&f| f != 0 && f != t && !bad(f)).collect();
            let disjoint_pair = good.iter().any(|&a| good.iter().any(|&b| a & b == 0));
            let all_pairs = good.iter().filter(|f| f.count_ones() == 2).count() == 3;
            Excess::Exact(if disjoint_pair || all_pairs { 1 } else { 2 })
        }
        _ => Excess::Between(1, size - 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| Monomial::new(g.to_vec())))
    }

    #[test]
    fn zero_prime_under_a_product() {
        // (x - y) lies over (0) and x^2, y^2 ∈ (x - y, xy)
        let m = MonomialIdeal::maximal(2);
        let xy = ideal(2, &[&[1, 1]]);
        assert_eq!(excess_height(&MonomialPrime::zero(2), &m, &xy), Excess::Exact(1));
        // (y) already lies in W(m, (x))
        let x = ideal(2, &[&[1, 0]]);
        assert_eq!(excess_height(&MonomialPrime::new(2, vec![1]), &m, &x), Excess::Exact(0));
    }

    #[test]
    fn zero_second_ideal_admits_nothing_new() {
        let m = MonomialIdeal::maximal(3);
        let zero = MonomialIdeal::zero(3);
        for q in MonomialPrime::all(3) {
            let e = excess_height(&q, &m, &zero);
            assert!(matches!(e, Excess::Empty | Excess::Exact(0)), "{q:?}: {e:?}");
        }
    }

    #[test]
    fn three_variables() {
        let m = MonomialIdeal::maximal(3);
        let zero = MonomialPrime::zero(3);
        // J = (z): a surface meets z = 0 in a curve, which I = m forbids,
        // so a curve is needed
        let z = ideal(3, &[&[0, 0, 1]]);
        assert_eq!(excess_height(&zero, &m, &z), Excess::Exact(2));
        // I = (y, z): the x-axis is allowed, so z = y^2 works
        let yz = ideal(3, &[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(excess_height(&zero, &yz, &z), Excess::Exact(1));
        // J = (xyz): every coordinate plane lies in V(J), so again a curve
        let xyz = ideal(3, &[&[1, 1, 1]]);
        assert_eq!(excess_height(&zero, &m, &xyz), Excess::Exact(2));
        // J = (xy, xz, yz): x + y + z = 0 meets the coordinate planes in
        // lines off V(J)
        let pairs = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(excess_height(&zero, &m, &pairs), Excess::Exact(1));
    }

    /// Two variables in closed form: only `q = (0)` can carry a
    /// non-monomial prime (a curve through the origin), and it does exactly
    /// when `J ≠ 0`, `I` is proper and `(0) ∉ W(I,J)`.
    #[test]
    fn two_variables_in_closed_form() {
        let ideals = crate::verify::enumerate::enumerate_ideals(2, 2, 4);
        for i in &ideals {
            for j in &ideals {
                for q in MonomialPrime::all(2) {
                    let got = excess_height(&q, i, j);
                    let in_w = crate::pair::w_member(&q, i, j);
                    let want = if in_w {
                        Excess::Exact(0)
                    } else if q.vars().is_empty() && !j.is_zero() && !i.is_unit() {
                        Excess::Exact(1)
                    } else {
                        Excess::Empty
                    };
                    assert_eq!(got, want, "q={:?} I={i:?} J={j:?}", q.vars());
                }
            }
        }
    }

    #[test]
    fn four_outside_variables_are_bounded() {
        let m = MonomialIdeal::maximal(4);
        let j = ideal(4, &[&[1, 1, 1, 1]]);
        assert_eq!(excess_height(&MonomialPrime::zero(4), &m, &j), Excess::Between(1, 3));
    }
}
