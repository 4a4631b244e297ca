//! Monomial ideals in canonical form.
//!
//! A [`MonomialIdeal`] stores its minimal generators, sorted in decreasing
//! lex order (`x^2 > x*y > y^3`). The zero ideal has no generators and the
//! unit ideal is generated by the monomial `1`. Two ideals are equal iff
//! their canonical generator lists are equal.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalize an arbitrary generating set.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        debug_assert!(all.iter().all(|g| g.nvars() == nvars));
        all.sort_by_key(|g| g.degree());
        all.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
        for g in all {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        kept.sort_by(|a, b| b.cmp(a));
        MonomialIdeal { nvars, gens: kept }
    }

    /// Build from signed exponent vectors, rejecting negative entries.
    pub fn from_exponents(nvars: usize, gens: &[Vec<i64>]) -> Result<Self> {
        let mut mons = Vec::with_capacity(gens.len());
        for g in gens {
            if g.len() != nvars {
                return Err(Error::Arity {
                    expected: nvars,
                    got: g.len(),
                });
            }
            mons.push(Monomial::from_signed(g)?);
        }
        Ok(Self::new(nvars, mons))
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    /// The monomial prime generated by the variables in `vars`.
    pub fn prime(nvars: usize, vars: &[usize]) -> Self {
        Self::new(nvars, vars.iter().map(|&i| Monomial::var(nvars, i)))
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(nvars: usize) -> Self {
        Self::prime(nvars, &(0..nvars).collect::<Vec<_>>())
    }

    pub fn principal(m: Monomial) -> Self {
        let n = m.nvars();
        MonomialIdeal { nvars: n, gens: vec![m] }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn member(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.member(g))
    }

    /// Largest exponent of each variable among the generators.
    pub fn exponent_bounds(&self) -> Vec<u32> {
        let mut b = vec![0; self.nvars];
        for g in &self.gens {
            for (slot, &e) in b.iter_mut().zip(g.exps()) {
                *slot = (*slot).max(e);
            }
        }
        b
    }

    pub fn max_generator_degree(&self) -> u64 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        Self::new(self.nvars, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.mul(b)));
        Self::new(self.nvars, gens)
    }

    /// `self^k`; `k = 0` gives the unit ideal.
    pub fn power(&self, k: u32) -> MonomialIdeal {
        let mut acc = Self::unit(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.product(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.product(&base);
            }
        }
        acc
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)));
        Self::new(self.nvars, gens)
    }

    /// `(self : m) = { f : f m ∈ self }`.
    pub fn colon_monomial(&self, m: &Monomial) -> MonomialIdeal {
        Self::new(self.nvars, self.gens.iter().map(|g| g.quotient_clamped(m)))
    }

    /// `(self : other)`; the intersection of the colons by the generators of
    /// `other`. Colon by the zero ideal is the unit ideal.
    pub fn colon(&self, other: &MonomialIdeal) -> MonomialIdeal {
        other
            .gens
            .iter()
            .map(|g| self.colon_monomial(g))
            .reduce(|a, b| a.intersect(&b))
            .unwrap_or_else(|| Self::unit(self.nvars))
    }

    pub fn radical(&self) -> MonomialIdeal {
        Self::new(self.nvars, self.gens.iter().map(Monomial::squarefree_part))
    }

    pub fn is_radical(&self) -> bool {
        self.gens.iter().all(|g| g.exps().iter().all(|&e| e <= 1))
    }

    /// `m ∈ √self`, i.e. some generator's support is contained in `m`'s.
    pub fn radical_member(&self, m: &Monomial) -> bool {
        let sq = m.squarefree_part();
        self.gens.iter().any(|g| g.squarefree_part().divides(&sq))
    }

    /// `√self ⊆ √other`.
    pub fn radical_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.radical_member(g))
    }

    /// Set the variables outside `vars` to 1; the result lives in the ring
    /// on the variables `vars` (in the given order).
    pub fn restrict(&self, vars: &[usize]) -> MonomialIdeal {
        Self::new(vars.len(), self.gens.iter().map(|g| g.restrict(vars)))
    }

    /// Render as `(x^2*y, y^3)`, `(0)` or `(1)`.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.render(names)).collect();
        format!("({})", parts.join(", "))
    }
}
