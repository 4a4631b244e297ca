//! Exact computation of the depth of a pair of ideals `depth(I, J, M)` for
//! monomial ideals `I`, `J` and monomial subquotients `M = A/B` of a
//! polynomial ring over a field, together with the `(I,J)`-Cohen-Macaulay
//! test and a census harness that checks the comparison laws satisfied by
//! this invariant.
//!
//! The layers, bottom-up:
//!
//! * [`monomial`], [`ideal`], [`module`]: exponent vectors, monomial ideals
//!   kept in canonical minimal form, and subquotients `A/B`.
//! * [`decomp`]: irreducible decomposition, minimal and associated primes,
//!   annihilators and Krull dimension.
//! * [`homology`]: multigraded Koszul and Taylor complexes, strand extraction
//!   and exact rank computation ([`linalg`]); `grade`, `Ext` nonvanishing and
//!   depth at monomial primes.
//! * [`pair`]: the sets `W(I,J)`, `depth(I,J,M)`, Cohen-Macaulay and torsion
//!   tests, and the law suite.
//! * [`sequences`]: regular and k-regular sequences.
//! * [`verify`]: brute-force oracles and the exhaustive census.

pub mod decomp;
pub mod depth;
pub mod error;
pub mod homology;
pub mod ideal;
pub mod linalg;
pub mod module;
pub mod monomial;
pub mod pair;
pub mod ring;
pub mod sequences;
pub mod syntax;
pub mod verify;

pub use decomp::{IrreducibleComponent, MonomialPrime};
pub use depth::{ExtendedDepth, KrullDim};
pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use module::Subquotient;
pub use monomial::{Monomial, Multidegree};
pub use pair::{DepthReport, PairContext, WSet};
pub use ring::{Field, RingContext};
