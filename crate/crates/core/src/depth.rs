//! Natural numbers extended by infinity, and Krull dimensions extended by
//! minus infinity.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// A depth value: a natural number or `+∞` (depth of the zero module, or of
/// an empty family of ideals).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedDepth {
    Finite(usize),
    Infinite,
}

impl ExtendedDepth {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedDepth::Finite(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            ExtendedDepth::Finite(v) => Some(v),
            ExtendedDepth::Infinite => None,
        }
    }

    /// `self + 1`, with `∞ + 1 = ∞`.
    pub fn succ(self) -> Self {
        match self {
            ExtendedDepth::Finite(v) => ExtendedDepth::Finite(v + 1),
            ExtendedDepth::Infinite => ExtendedDepth::Infinite,
        }
    }

    /// `self - 1` as a signed value; `∞ - 1 = ∞` is encoded as `None`.
    pub fn pred(self) -> Option<i64> {
        self.finite().map(|v| v as i64 - 1)
    }

    pub fn min_all<I: IntoIterator<Item = ExtendedDepth>>(values: I) -> ExtendedDepth {
        values.into_iter().min().unwrap_or(ExtendedDepth::Infinite)
    }
}

impl From<usize> for ExtendedDepth {
    fn from(v: usize) -> Self {
        ExtendedDepth::Finite(v)
    }
}

impl fmt::Display for ExtendedDepth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedDepth::Finite(v) => write!(f, "{v}"),
            ExtendedDepth::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for ExtendedDepth {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtendedDepth::Finite(v) => s.serialize_u64(*v as u64),
            ExtendedDepth::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedDepth {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(u64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(ExtendedDepth::Finite(v as usize)),
            Raw::Str(s) if s == "inf" => Ok(ExtendedDepth::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!(
                "expected an integer or \"inf\", got {s:?}"
            ))),
        }
    }
}

/// Krull dimension of a module; the zero module has dimension `-∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KrullDim {
    NegInfinity,
    Finite(usize),
}

impl KrullDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            KrullDim::Finite(v) => Some(v),
            KrullDim::NegInfinity => None,
        }
    }

    /// Signed value with `-∞` mapped to `-1`, which is exact for every
    /// comparison against thresholds `k ≥ -1`.
    pub fn as_i64(self) -> i64 {
        match self {
            KrullDim::Finite(v) => v as i64,
            KrullDim::NegInfinity => -1,
        }
    }

    /// Whether a depth value equals this dimension.
    pub fn equals_depth(self, depth: ExtendedDepth) -> bool {
        matches!((self, depth), (KrullDim::Finite(a), ExtendedDepth::Finite(b)) if a == b)
    }
}

impl fmt::Display for KrullDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KrullDim::Finite(v) => write!(f, "{v}"),
            KrullDim::NegInfinity => f.write_str("-inf"),
        }
    }
}

impl Serialize for KrullDim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            KrullDim::Finite(v) => s.serialize_u64(*v as u64),
            KrullDim::NegInfinity => s.serialize_str("-inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_puts_infinity_last() {
        assert!(ExtendedDepth::Finite(7) < ExtendedDepth::Infinite);
        assert_eq!(ExtendedDepth::min_all([]), ExtendedDepth::Infinite);
        assert_eq!(
            ExtendedDepth::min_all([3.into(), ExtendedDepth::Infinite, 1.into()]),
            ExtendedDepth::Finite(1)
        );
        assert_eq!(ExtendedDepth::Infinite.succ(), ExtendedDepth::Infinite);
        assert!(KrullDim::NegInfinity < KrullDim::Finite(0));
    }

    #[test]
    fn json_encoding() {
        let v = serde_json::to_string(&[ExtendedDepth::Finite(2), ExtendedDepth::Infinite]).unwrap();
        assert_eq!(v, r#"[2,"inf"]"#);
        let back: Vec<ExtendedDepth> = serde_json::from_str(&v).unwrap();
        assert_eq!(back, vec![ExtendedDepth::Finite(2), ExtendedDepth::Infinite]);
    }
}
