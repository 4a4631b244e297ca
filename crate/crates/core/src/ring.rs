use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Coefficient field of the polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum Field {
    #[default]
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::Ring(format!("{p} is not prime")))
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => f.write_str("Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A polynomial ring `k[x_1, ..., x_n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingContext {
    var_names: Vec<String>,
    field: Field,
}

impl RingContext {
    pub fn new<S: Into<String>>(field: Field, names: impl IntoIterator<Item = S>) -> Result<Self> {
        let var_names: Vec<String> = names.into_iter().map(Into::into).collect();
        if var_names.is_empty() {
            return Err(Error::Ring("at least one variable is required".into()));
        }
        for (i, name) in var_names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::Ring(format!("invalid variable name {name:?}")));
            }
            if var_names[..i].contains(name) {
                return Err(Error::Ring(format!("duplicate variable name {name:?}")));
            }
        }
        if let Field::Prime(p) = field {
            Field::prime(p)?;
        }
        Ok(RingContext { var_names, field })
    }

    /// `k[x, y, ...]` with the default names `x, y, z, w` for `n ≤ 4`, and
    /// `x1, ..., xn` beyond that.
    pub fn standard(field: Field, n: usize) -> Result<Self> {
        let names: Vec<String> = if n <= 4 {
            ["x", "y", "z", "w"][..n].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=n).map(|i| format!("x{i}")).collect()
        };
        Self::new(field, names)
    }

    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.var_names.iter().position(|v| v == name)
    }

    pub fn with_field(&self, field: Field) -> Self {
        RingContext {
            var_names: self.var_names.clone(),
            field,
        }
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.var_names.join(","))
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
