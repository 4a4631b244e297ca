use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use serde::{Deserialize, Serialize};

/// The multigraded module `M = A/B` for monomial ideals `B ⊆ A`. Its
/// `k`-basis is the set of monomials in `A` but not in `B`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Subquotient {
    a: MonomialIdeal,
    b: MonomialIdeal,
}

impl Subquotient {
    pub fn new(a: MonomialIdeal, b: MonomialIdeal) -> Result<Self> {
        if a.nvars() != b.nvars() {
            return Err(Error::Arity {
                expected: a.nvars(),
                got: b.nvars(),
            });
        }
        if !b.is_subset_of(&a) {
            return Err(Error::Precondition(
                "the submodule B of A/B must be contained in A".into(),
            ));
        }
        Ok(Subquotient { a, b })
    }

    /// `R/K`.
    pub fn quotient_ring(k: MonomialIdeal) -> Self {
        let n = k.nvars();
        Subquotient {
            a: MonomialIdeal::unit(n),
            b: k,
        }
    }

    /// The free module `R`.
    pub fn ring(nvars: usize) -> Self {
        Self::quotient_ring(MonomialIdeal::zero(nvars))
    }

    pub fn zero(nvars: usize) -> Self {
        Self::quotient_ring(MonomialIdeal::unit(nvars))
    }

    pub fn top(&self) -> &MonomialIdeal {
        &self.a
    }

    pub fn bottom(&self) -> &MonomialIdeal {
        &self.b
    }

    pub fn nvars(&self) -> usize {
        self.a.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_subset_of(&self.b)
    }

    /// Whether `x^m` is a nonzero basis element of `M`.
    pub fn has_basis_monomial(&self, m: &Monomial) -> bool {
        self.a.member(m) && !self.b.member(m)
    }

    /// `M / JM = A / (B + J·A)`.
    pub fn quotient_by(&self, j: &MonomialIdeal) -> Subquotient {
        Subquotient {
            a: self.a.clone(),
            b: self.b.sum(&j.product(&self.a)),
        }
    }

    /// Coordinate deletion: set the variables outside `vars` to 1.
    pub fn restrict(&self, vars: &[usize]) -> Subquotient {
        Subquotient {
            a: self.a.restrict(vars),
            b: self.b.restrict(vars),
        }
    }

    /// Per-variable exponent bound over the generators of `A` and `B`.
    pub fn exponent_bounds(&self) -> Vec<u32> {
        self.a
            .exponent_bounds()
            .into_iter()
            .zip(self.b.exponent_bounds())
            .map(|(x, y)| x.max(y))
            .collect()
    }

    /// Render as `A/B`.
    pub fn render(&self, names: &[String]) -> String {
        format!("{}/{}", self.a.render(names), self.b.render(names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(2, gens.iter().map(|g| Monomial::new(g.to_vec())))
    }

    #[test]
    fn containment_is_validated() {
        let x = ideal(&[&[1, 0]]);
        let y = ideal(&[&[0, 1]]);
        assert!(Subquotient::new(x.clone(), y.clone()).is_err());
        let m = Subquotient::new(x.clone(), x.product(&y)).unwrap();
        assert!(!m.is_zero());
        assert!(m.has_basis_monomial(&Monomial::new(vec![3, 0])));
        assert!(!m.has_basis_monomial(&Monomial::new(vec![1, 1])));
        assert!(Subquotient::new(x.clone(), x).unwrap().is_zero());
        assert!(Subquotient::zero(2).is_zero());
    }

    #[test]
    fn quotient_by_ideal() {
        // R/(x) from R and J = (x)
        let m = Subquotient::ring(2).quotient_by(&ideal(&[&[1, 0]]));
        assert_eq!(m, Subquotient::quotient_ring(ideal(&[&[1, 0]])));
        // (x)/(x^2) modulo (y): (x)/(x^2, xy)
        let m = Subquotient::new(ideal(&[&[1, 0]]), ideal(&[&[2, 0]])).unwrap();
        assert_eq!(
            m.quotient_by(&ideal(&[&[0, 1]])).bottom(),
            &ideal(&[&[2, 0], &[1, 1]])
        );
    }
}
