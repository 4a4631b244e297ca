//! Irreducible decomposition of monomial ideals, and the prime-ideal data
//! derived from it: minimal primes, height, Krull dimension, annihilators
//! and associated primes of subquotients.

use crate::depth::KrullDim;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::module::Subquotient;
use crate::monomial::Monomial;
use serde::{Deserialize, Serialize};

/// The prime `p_S = (x_i : i ∈ S)`. The empty set gives the zero prime.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MonomialPrime {
    nvars: usize,
    vars: Vec<usize>,
}

impl MonomialPrime {
    pub fn new(nvars: usize, mut vars: Vec<usize>) -> Self {
        vars.sort_unstable();
        vars.dedup();
        assert!(vars.iter().all(|&v| v < nvars), "variable index out of range");
        MonomialPrime { nvars, vars }
    }

    pub fn from_mask(nvars: usize, mask: u64) -> Self {
        let vars = (0..nvars).filter(|i| mask >> i & 1 == 1).collect();
        MonomialPrime { nvars, vars }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialPrime {
            nvars,
            vars: Vec::new(),
        }
    }

    pub fn maximal(nvars: usize) -> Self {
        MonomialPrime {
            nvars,
            vars: (0..nvars).collect(),
        }
    }

    /// All `2^n` monomial primes, ordered by bitmask.
    pub fn all(nvars: usize) -> impl Iterator<Item = MonomialPrime> {
        (0..1u64 << nvars).map(move |mask| MonomialPrime::from_mask(nvars, mask))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn mask(&self) -> u64 {
        self.vars.iter().fold(0, |acc, &i| acc | 1 << i)
    }

    pub fn height(&self) -> usize {
        self.vars.len()
    }

    /// `dim R/p_S = n - |S|`.
    pub fn dim_quotient(&self) -> usize {
        self.nvars - self.vars.len()
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::prime(self.nvars, &self.vars)
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.vars.iter().any(|&i| m.exps()[i] > 0)
    }

    /// `I ⊆ p_S`.
    pub fn contains_ideal(&self, i: &MonomialIdeal) -> bool {
        i.gens().iter().all(|g| self.contains_monomial(g))
    }

    pub fn is_subset_of(&self, other: &MonomialPrime) -> bool {
        self.mask() & !other.mask() == 0
    }

    pub fn var_names(&self, names: &[String]) -> Vec<String> {
        self.vars.iter().map(|&i| names[i].clone()).collect()
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.vars.is_empty() {
            "(0)".to_string()
        } else {
            format!("({})", self.var_names(names).join(", "))
        }
    }
}

/// An irreducible monomial ideal `(x_i^{e_i} : i ∈ dom)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IrreducibleComponent {
    nvars: usize,
    powers: Vec<(usize, u32)>,
}

impl IrreducibleComponent {
    fn from_ideal(i: &MonomialIdeal) -> Self {
        let mut powers: Vec<(usize, u32)> = i
            .gens()
            .iter()
            .map(|g| {
                let v = g.pure_power_var().expect("irreducible component has a mixed generator");
                (v, g.exps()[v])
            })
            .collect();
        powers.sort_unstable();
        IrreducibleComponent {
            nvars: i.nvars(),
            powers,
        }
    }

    pub fn powers(&self) -> &[(usize, u32)] {
        &self.powers
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(
            self.nvars,
            self.powers.iter().map(|&(v, e)| {
                let mut exps = vec![0; self.nvars];
                exps[v] = e;
                Monomial::new(exps)
            }),
        )
    }

    /// The radical `p_dom`.
    pub fn prime(&self) -> MonomialPrime {
        MonomialPrime::new(self.nvars, self.powers.iter().map(|&(v, _)| v).collect())
    }
}

/// Irredundant irreducible decomposition of a proper nonzero monomial ideal.
///
/// Splits on the first generator (canonical order) that is not a pure power,
/// at its first variable: if `m = u·v` with `u = x_i^{e_i}` then
/// `I = (I + (u)) ∩ (I + (v))`.
pub fn irreducible_decomposition(i: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    if i.is_zero() {
        return Err(Error::Domain(
            "the zero ideal has no irreducible decomposition into proper components".into(),
        ));
    }
    if i.is_unit() {
        return Err(Error::Domain(
            "the unit ideal has no irreducible decomposition".into(),
        ));
    }
    let mut leaves = Vec::new();
    split(i, &mut leaves);
    leaves.sort();
    leaves.dedup();
    // irreducible monomial ideals are meet-prime in the lattice of monomial
    // ideals, so dropping components that contain another one is enough
    let keep: Vec<bool> = leaves
        .iter()
        .enumerate()
        .map(|(k, c)| {
            !leaves
                .iter()
                .enumerate()
                .any(|(l, d)| l != k && d.is_subset_of(c))
        })
        .collect();
    Ok(leaves
        .iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(c, _)| IrreducibleComponent::from_ideal(c))
        .collect())
}

fn split(i: &MonomialIdeal, out: &mut Vec<MonomialIdeal>) {
    let n = i.nvars();
    match i.gens().iter().find(|g| g.support().len() > 1) {
        None => out.push(i.clone()),
        Some(g) => {
            let v = g.support()[0];
            let mut u = vec![0; n];
            u[v] = g.exps()[v];
            let u = Monomial::new(u);
            let rest = g.quotient_clamped(&u);
            split(&i.sum(&MonomialIdeal::principal(u)), out);
            split(&i.sum(&MonomialIdeal::principal(rest)), out);
        }
    }
}

/// Inclusion-minimal elements of a family of primes, sorted.
pub fn minimal_elements(primes: impl IntoIterator<Item = MonomialPrime>) -> Vec<MonomialPrime> {
    let mut all: Vec<MonomialPrime> = primes.into_iter().collect();
    all.sort();
    all.dedup();
    let minimal: Vec<MonomialPrime> = all
        .iter()
        .filter(|p| !all.iter().any(|q| q != *p && q.is_subset_of(p)))
        .cloned()
        .collect();
    minimal
}

/// Minimal primes of `I`. The unit ideal has none; the zero ideal has `(0)`.
pub fn minimal_primes(i: &MonomialIdeal) -> Vec<MonomialPrime> {
    if i.is_unit() {
        return Vec::new();
    }
    if i.is_zero() {
        return vec![MonomialPrime::zero(i.nvars())];
    }
    // The minimal primes of a monomial ideal are the minimal supports of its
    // radical's components; use the radical to keep the recursion small.
    let comps = irreducible_decomposition(&i.radical()).expect("proper nonzero ideal");
    minimal_elements(comps.iter().map(IrreducibleComponent::prime))
}

/// Height of `I`; `None` for the unit ideal.
pub fn height(i: &MonomialIdeal) -> Option<usize> {
    minimal_primes(i).iter().map(MonomialPrime::height).min()
}

/// `dim R/I`; `-∞` when `I` is the unit ideal.
pub fn krull_dim_quotient(i: &MonomialIdeal) -> KrullDim {
    match height(i) {
        Some(h) => KrullDim::Finite(i.nvars() - h),
        None => KrullDim::NegInfinity,
    }
}

/// `ann(A/B) = (B : A)`.
pub fn annihilator(m: &Subquotient) -> MonomialIdeal {
    m.bottom().colon(m.top())
}

pub fn dim_module(m: &Subquotient) -> KrullDim {
    krull_dim_quotient(&annihilator(m))
}

/// `p ∈ Supp(M)`, i.e. `ann(M) ⊆ p`.
pub fn support_contains(p: &MonomialPrime, m: &Subquotient) -> bool {
    p.contains_ideal(&annihilator(m))
}

/// Associated primes of `A/B`, found as the prime colons `(B : x^b)` with
/// `x^b ∈ A \ B`. Exponents beyond the generators' maxima do not change
/// either the colon or membership, so `b` ranges over the box
/// `0 ≤ b_i ≤ max exponent of x_i in A and B`.
pub fn associated_primes(m: &Subquotient) -> Vec<MonomialPrime> {
    if m.is_zero() {
        return Vec::new();
    }
    let n = m.nvars();
    let bounds = m.exponent_bounds();
    let mut found = Vec::new();
    for_each_in_box(&bounds, |b| {
        let mono = Monomial::new(b.to_vec());
        if !m.has_basis_monomial(&mono) {
            return;
        }
        let colon = m.bottom().colon_monomial(&mono);
        if colon.gens().iter().all(|g| g.degree() == 1) {
            let vars = colon.gens().iter().map(|g| g.support()[0]).collect();
            found.push(MonomialPrime::new(n, vars));
        }
    });
    found.sort();
    found.dedup();
    found
}

/// Visit every vector `0 ≤ b ≤ bounds` (inclusive).
pub(crate) fn for_each_in_box(bounds: &[u32], mut f: impl FnMut(&[u32])) {
    let mut cur = vec![0u32; bounds.len()];
    loop {
        f(&cur);
        let mut k = 0;
        loop {
            if k == bounds.len() {
                return;
            }
            if cur[k] < bounds[k] {
                cur[k] += 1;
                break;
            }
            cur[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        let n = gens[0].len();
        MonomialIdeal::new(n, gens.iter().map(|g| Monomial::new(g.to_vec())))
    }

    fn prime(n: usize, vars: &[usize]) -> MonomialPrime {
        MonomialPrime::new(n, vars.to_vec())
    }

    fn component_ideals(i: &MonomialIdeal) -> Vec<MonomialIdeal> {
        let mut v: Vec<_> = irreducible_decomposition(i)
            .unwrap()
            .iter()
            .map(IrreducibleComponent::to_ideal)
            .collect();
        v.sort();
        v
    }

    #[test]
    fn decomposition_examples() {
        let mut expected = vec![ideal(&[&[1, 0]]), ideal(&[&[2, 0], &[0, 1]])];
        expected.sort();
        assert_eq!(component_ideals(&ideal(&[&[2, 0], &[1, 1]])), expected);

        let mut expected = vec![ideal(&[&[1, 0]]), ideal(&[&[0, 1]])];
        expected.sort();
        assert_eq!(component_ideals(&ideal(&[&[1, 1]])), expected);

        let i = ideal(&[&[2, 0], &[0, 3]]);
        assert_eq!(component_ideals(&i), vec![i]);
    }

    #[test]
    fn decomposition_domain_errors() {
        assert!(matches!(
            irreducible_decomposition(&MonomialIdeal::zero(2)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            irreducible_decomposition(&MonomialIdeal::unit(2)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn minimal_primes_and_dimension() {
        let i = ideal(&[&[1, 1, 0], &[1, 0, 1]]);
        assert_eq!(minimal_primes(&i), vec![prime(3, &[0]), prime(3, &[1, 2])]);
        assert_eq!(krull_dim_quotient(&i), KrullDim::Finite(2));
        assert_eq!(krull_dim_quotient(&ideal(&[&[1, 0]])), KrullDim::Finite(1));
        assert_eq!(krull_dim_quotient(&MonomialIdeal::zero(3)), KrullDim::Finite(3));
        assert_eq!(krull_dim_quotient(&MonomialIdeal::unit(3)), KrullDim::NegInfinity);
        assert_eq!(minimal_primes(&MonomialIdeal::zero(2)), vec![MonomialPrime::zero(2)]);
    }

    #[test]
    fn annihilator_examples() {
        let xy = ideal(&[&[1, 1]]);
        assert_eq!(annihilator(&Subquotient::quotient_ring(xy.clone())), xy);
        let m = Subquotient::new(ideal(&[&[1, 0]]), ideal(&[&[2, 0], &[1, 1]])).unwrap();
        assert_eq!(annihilator(&m), ideal(&[&[1, 0], &[0, 1]]));
        assert!(annihilator(&Subquotient::zero(2)).is_unit());
    }

    #[test]
    fn associated_prime_examples() {
        let m = Subquotient::quotient_ring(ideal(&[&[2, 0], &[1, 1]]));
        assert_eq!(associated_primes(&m), vec![prime(2, &[0]), prime(2, &[0, 1])]);
        let m = Subquotient::quotient_ring(ideal(&[&[1, 1]]));
        assert_eq!(associated_primes(&m), vec![prime(2, &[0]), prime(2, &[1])]);
        assert_eq!(
            associated_primes(&Subquotient::ring(2)),
            vec![MonomialPrime::zero(2)]
        );
        assert!(associated_primes(&Subquotient::zero(2)).is_empty());
    }

    #[test]
    fn dimension_and_support() {
        let m = Subquotient::quotient_ring(ideal(&[&[1, 1]]));
        assert_eq!(dim_module(&m), KrullDim::Finite(1));
        assert!(support_contains(&prime(2, &[0]), &m));
        assert!(!support_contains(&MonomialPrime::zero(2), &m));
        // M = R, J = (x): dim M/JM = 1
        let mj = Subquotient::ring(2).quotient_by(&ideal(&[&[1, 0]]));
        assert_eq!(dim_module(&mj), KrullDim::Finite(1));
        assert_eq!(dim_module(&Subquotient::zero(2)), KrullDim::NegInfinity);
    }

    #[test]
    fn prime_helpers() {
        let p = prime(3, &[2, 0]);
        assert_eq!(p.vars(), &[0, 2]);
        assert_eq!(p.dim_quotient(), 1);
        assert_eq!(MonomialPrime::from_mask(3, p.mask()), p);
        assert_eq!(MonomialPrime::all(3).count(), 8);
        assert!(p.contains_monomial(&Monomial::new(vec![0, 1, 1])));
        assert!(!p.contains_monomial(&Monomial::new(vec![0, 1, 0])));
    }
}
