//! Exponent vectors. A [`Monomial`] is a point of `N^n`; a [`Multidegree`]
//! is a point of `Z^n`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Multidegree in `Z^n`.
pub type Multidegree = Vec<i64>;

/// The monomial `x^e`. Comparison is lexicographic on the exponent vector,
/// which agrees with the lex monomial order for `x_1 > x_2 > ... > x_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The variable `x_i` in `n` variables.
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_signed(exps: &[i64]) -> Result<Self> {
        exps.iter()
            .map(|&e| {
                if e < 0 {
                    Err(Error::NegativeExponent(e))
                } else {
                    u32::try_from(e).map_err(|_| Error::Overflow)
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Product of the variables in the support.
    pub fn squarefree_part(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| e.min(1)).collect())
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow in monomial product")
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|e| e.checked_mul(k).expect("exponent overflow in monomial power"))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// `self / gcd(self, other)`: exponents reduced by `other`, clamped at 0.
    pub fn quotient_clamped(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Keep only the coordinates listed in `vars` (in that order).
    pub fn restrict(&self, vars: &[usize]) -> Monomial {
        Monomial(vars.iter().map(|&i| self.0[i]).collect())
    }

    pub fn to_multidegree(&self) -> Multidegree {
        self.0.iter().map(|&e| e as i64).collect()
    }

    /// Whether this monomial is a pure power `x_i^e` with `e > 0`; returns `i`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let supp = self.support();
        if supp.len() == 1 {
            Some(supp[0])
        } else {
            None
        }
    }

    /// Render with variable names, e.g. `x^2*y`; the unit monomial is `1`.
    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(names)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, name)| {
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Whether a multidegree lies in `N^n` and names the monomial `x^b`.
pub fn as_monomial(b: &[i64]) -> Option<Monomial> {
    if b.iter().all(|&e| e >= 0 && e <= u32::MAX as i64) {
        Some(Monomial(b.iter().map(|&e| e as u32).collect()))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn arithmetic() {
        assert!(m(&[1, 0]).divides(&m(&[2, 1])));
        assert!(!m(&[0, 2]).divides(&m(&[2, 1])));
        assert_eq!(m(&[2, 1]).lcm(&m(&[1, 3])), m(&[2, 3]));
        assert_eq!(m(&[2, 1]).gcd(&m(&[1, 3])), m(&[1, 1]));
        assert_eq!(m(&[1, 1]).quotient_clamped(&m(&[0, 2])), m(&[1, 0]));
        assert_eq!(m(&[3, 0, 1]).squarefree_part(), m(&[1, 0, 1]));
        assert_eq!(m(&[1, 2]).pow(3), m(&[3, 6]));
        assert!(m(&[u32::MAX, 0]).checked_mul(&m(&[1, 0])).is_none());
    }

    #[test]
    fn lex_order_matches_variable_order() {
        // x > y^5 in lex
        assert!(m(&[1, 0]) > m(&[0, 5]));
        assert!(m(&[2, 0]) > m(&[1, 1]));
    }

    #[test]
    fn signed_conversion() {
        assert_eq!(Monomial::from_signed(&[-1, 0]), Err(Error::NegativeExponent(-1)));
        assert_eq!(Monomial::from_signed(&[2, 0]).unwrap(), m(&[2, 0]));
        assert!(as_monomial(&[0, -1]).is_none());
    }

    #[test]
    fn rendering() {
        let names = vec!["x".to_string(), "y".to_string()];
        assert_eq!(m(&[2, 1]).render(&names), "x^2*y");
        assert_eq!(m(&[0, 0]).render(&names), "1");
    }
}
