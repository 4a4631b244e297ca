//! Executable comparison laws for `depth(I, J, M)`.
//!
//! Each law evaluates both sides on concrete data and returns a
//! [`LawOutcome`]. A law whose hypothesis fails is reported as not
//! applicable and counts as holding.

use super::{w_tilde_member, DepthEngine};
use crate::decomp;
use crate::depth::{ExtendedDepth, KrullDim};
use crate::error::Result;
use crate::homology;
use crate::ideal::MonomialIdeal;
use crate::module::Subquotient;
use serde::Serialize;

pub const J_ZERO_REDUCTION: &str = "j-zero-reduction";
pub const LOCALIZED_INFIMUM: &str = "localized-infimum";
pub const GRADE_PATHS: &str = "grade-paths";
pub const CHAIN_INEQUALITY: &str = "chain-inequality";
pub const SECOND_IDEAL_SHRINK: &str = "second-ideal-shrink";
pub const ABSORB_INTO_FIRST: &str = "absorb-into-first";
pub const FIRST_RADICAL_EQUAL: &str = "first-radical-equal";
pub const SECOND_RADICAL_EQUAL: &str = "second-radical-equal";
pub const RADICAL_INVARIANCE: &str = "radical-invariance";
pub const PRODUCT_VS_INTERSECTION: &str = "product-vs-intersection";
pub const SHORT_EXACT_SEQUENCE: &str = "short-exact-sequence";
pub const EXT_CHARACTERIZATION: &str = "ext-characterization";
pub const EXT_CHARACTERIZATION_J_ZERO: &str = "ext-characterization-j-zero";
pub const CM_DESCENDS: &str = "cm-descends";
pub const CM_TO_MAXIMAL: &str = "cm-to-maximal";
pub const UPPER_BOUND_DIM: &str = "upper-bound-dim";
pub const PRIMARY_CM_CRITERION: &str = "primary-cm-criterion";
pub const TORSION_ARTINIAN: &str = "torsion-artinian";
pub const FAITHFUL_DIMENSION: &str = "faithful-dimension";

/// Every law id, in report order.
pub const ALL_LAWS: &[&str] = &[
    J_ZERO_REDUCTION,
    LOCALIZED_INFIMUM,
    GRADE_PATHS,
    CHAIN_INEQUALITY,
    SECOND_IDEAL_SHRINK,
    ABSORB_INTO_FIRST,
    FIRST_RADICAL_EQUAL,
    SECOND_RADICAL_EQUAL,
    RADICAL_INVARIANCE,
    PRODUCT_VS_INTERSECTION,
    SHORT_EXACT_SEQUENCE,
    EXT_CHARACTERIZATION,
    EXT_CHARACTERIZATION_J_ZERO,
    CM_DESCENDS,
    CM_TO_MAXIMAL,
    UPPER_BOUND_DIM,
    PRIMARY_CM_CRITERION,
    TORSION_ARTINIAN,
    FAITHFUL_DIMENSION,
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawOutcome {
    pub law: &'static str,
    pub holds: bool,
    pub applicable: bool,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl LawOutcome {
    pub(crate) fn new(law: &'static str, holds: bool, lhs: impl ToString, rhs: impl ToString) -> Self {
        LawOutcome {
            law,
            holds,
            applicable: true,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            detail: None,
        }
    }

    pub(crate) fn skipped(law: &'static str, why: &str) -> Self {
        LawOutcome {
            law,
            holds: true,
            applicable: false,
            lhs: String::new(),
            rhs: String::new(),
            detail: Some(why.to_string()),
        }
    }

    pub(crate) fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

fn radically_equal(a: &MonomialIdeal, b: &MonomialIdeal) -> bool {
    a.radical_subset_of(b) && b.radical_subset_of(a)
}

/// `depth(I, 0, M) = grade(I, M)`.
pub fn j_zero_reduction(e: &DepthEngine, i: &MonomialIdeal, m: &Subquotient) -> Result<LawOutcome> {
    let lhs = e.depth(i, &MonomialIdeal::zero(i.nvars()), m)?;
    let rhs = e.grade(i, m)?;
    Ok(LawOutcome::new(J_ZERO_REDUCTION, lhs == rhs, lhs, rhs))
}

/// Minimum of `grade(p, M)` over minimal primes of `W(I,J)` equals the
/// minimum of `depth(M_p)` over all primes of `W(I,J)`.
pub fn localized_infimum(
    e: &DepthEngine,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    m: &Subquotient,
) -> Result<LawOutcome> {
    let lhs = e.depth(i, j, m)?;
    let rhs = e.depth_localized(i, j, m)?;
    Ok(LawOutcome::new(LOCALIZED_INFIMUM, lhs == rhs, lhs, rhs))
}

/// Koszul, Ext and localization computations of `grade(a, M)` agree.
pub fn grade_paths(e: &DepthEngine, a: &MonomialIdeal, m: &Subquotient) -> Result<LawOutcome> {
    let koszul = e.grade(a, m)?;
    let ext = homology::grade_via_ext(a, m, e.field())?.value;
    let local = homology::grade_via_localization(a, m, e.field())?;
    Ok(LawOutcome::new(
        GRADE_PATHS,
        koszul == ext && ext == local,
        koszul,
        format!("{ext}, {local}"),
    ))
}

/// For `a ∈ W̃(I,J)`: `depth(I,J,M) ≤ depth(a,J,M) ≤ grade(a,M)`.
pub fn chain_inequality(
    e: &DepthEngine,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    m: &Subquotient,
    a: &MonomialIdeal,
) -> Result<LawOutcome> {
    if !w_tilde_member(a, i, j) {
        return Ok(LawOutcome::skipped(CHAIN_INEQUALITY, "a is not in W̃(I,J)"));
    }
    let d_i = e.depth(i, j, m)?;
    let d_a = e.depth(a, j, m)?;
    let g_a = e.grade(a, m)?;
    Ok(LawOutcome::new(
        CHAIN_INEQUALITY,
        d_i <= d_a && d_a <= g_a,
        format!("{d_i} <= {d_a}"),
        format!("{d_a} <= {g_a}"),
    ))
}

/// `J ⊆ √b ⇒ depth(I, b, M) ≤ depth(I, J, M)`.
pub fn second_ideal_shrink(
    e: &DepthEngine,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    m: &Subquotient,
    b: &MonomialIdeal,
) -> Result<LawOutcome> {
    if !j.radical_subset_of(b) {
        return Ok(LawOutcome::skipped(SECOND_IDEAL_SHRINK, "J is not inside √b"));
    }
    let lhs = e.depth(i, b, m)?;
    let rhs = e.depth(i, j, m)?;
    Ok(LawOutcome::new(SECOND_IDEAL_SHRINK, lhs <= rhs, lhs, rhs))
}

/// `c ⊆ √J ⇒ depth(I, J, M) = depth(I + c, J, M)`.
pub fn absorb_into_first(
    e: &DepthEngine,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    m: &Subquotient,
    c: &MonomialIdeal,
) -> Result<LawOutcome> {
    if !c.radical_subset_of(j) {
        return Ok(LawOutcome::skipped(ABSORB_INTO_FIRST, "c is not inside √J"));
    }
    let lhs = e.depth(i, j, m)?;
    let rhs = e.depth(&i.sum(c), j, m)?;
    Ok(LawOutcome::new(ABSORB_INTO_FIRST, lhs == rhs, lhs, rhs))
}

/// `√I = √b ⇒ depth(I, J, M) = depth(b, J, M)`.
pub fn first_radical_equal(
    e: &DepthEngine,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    m: &Subquotient,
    b: &MonomialIdeal,
) -> Result<LawOutcome> {
    if !radically_equal(i, b) {
        return Ok(LawOutcome::skipped(FIRST_RADICAL_EQUAL, "√I ≠ √b"));
    }
    let lhs = e.depth(i, j, m)?;
    let rhs = e.depth(b, j, m)?;
    Ok(LawOutcome::new(FIRST_RADICAL_EQUAL, lhs == rhs, lhs, rhs))
}

/// `√J = √c ⇒ depth(I, J, M) = depth(I, c, M)`.
pub fn second_radical_equal(
    e: &DepthEngine,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    m: &Subquotient,
    c: &MonomialIdeal,
) -> Result<LawOutcome> {
    if !radically_equal(j, c) {
        return Ok(LawOutcome::skipped(SECOND_RADICAL_EQUAL, "√J ≠ √c"));
    }
    let lhs = e.depth(i, j, m)?;
    let rhs = e.depth(i, c, m)?;
    Ok(LawOutcome::new(SECOND_RADICAL_EQUAL, lhs == rhs, lhs, rhs))
}

/// `depth(I,J,M) = depth(√I,J,M) = depth(I,√J,M) = depth(√I,√J,M)`.
pub fn radical_invariance(
    e: &DepthEngine,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    m: &Subquotient,
) -> Result<LawOutcome> {
    let (ri, rj) = (i.radical(), j.radical());
    let base = e.depth(i, j, m)?;
    let others = [e.depth(&ri, j, m)?, e.depth(i, &rj, m)?, e.depth(&ri, &rj, m)?];
    Ok(LawOutcome::new(
        RADICAL_INVARIANCE,
        others.iter().all(|&d| d == base),
        base,
        format!("{}, {}, {}", others[0], others[1], others[2]),
    ))
}

/// `depth(I, J·b, M) = depth(I, J ∩ b, M)`.
pub fn product_vs_intersection(
    e: &DepthEngine,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    m: &Subquotient,
    b: &MonomialIdeal,
) -> Result<LawOutcome> {
    let lhs = e.depth(i, &j.product(b), m)?;
    let rhs = e.depth(i, &j.intersect(b), m)?;
    Ok(LawOutcome::new(PRODUCT_VS_INTERSECTION, lhs == rhs, lhs, rhs))
}

/// Extended integers for the short exact sequence inequalities: `None` is
/// `+∞`, and `∞ ± 1 = ∞`.
type Ext = Option<i64>;

fn ext(d: ExtendedDepth) -> Ext {
    d.finite().map(|v| v as i64)
}

fn shift(v: Ext, by: i64) -> Ext {
    v.map(|x| x + by)
}

fn le(a: Ext, b: Ext) -> bool {
    match (a, b) {
        (_, None) => true,
        (None, Some(_)) => false,
        (Some(a), Some(b)) => a <= b,
    }
}

fn min(a: Ext, b: Ext) -> Ext {
    if le(a, b) {
        a
    } else {
        b
    }
}

fn show(v: Ext) -> String {
    v.map_or_else(|| "inf".to_string(), |x| x.to_string())
}

/// For `K ⊆ K'` and `0 → K'/K → R/K → R/K' → 0` with
/// `r, t, s` the depths of the three terms:
/// `t ≥ min(r, s)`, `r ≥ min(t, s+1)`, `s ≥ min(r-1, t)`, and one of
/// `t = r`, `t = s`, `s = r - 1` holds.
pub fn short_exact_sequence(
    e: &DepthEngine,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    k: &MonomialIdeal,
    k2: &MonomialIdeal,
) -> Result<LawOutcome> {
    if !k.is_subset_of(k2) {
        return Ok(LawOutcome::skipped(SHORT_EXACT_SEQUENCE, "K is not inside K'"));
    }
    let u = Subquotient::new(k2.clone(), k.clone())?;
    let m = Subquotient::quotient_ring(k.clone());
    let n = Subquotient::quotient_ring(k2.clone());
    let r = ext(e.depth(i, j, &u)?);
    let t = ext(e.depth(i, j, &m)?);
    let s = ext(e.depth(i, j, &n)?);
    let first = le(min(r, s), t);
    let second = le(min(t, shift(s, 1)), r);
    let third = le(min(shift(r, -1), t), s);
    let cases = t == r || t == s || s == shift(r, -1);
    let failed: Vec<&str> = [
        (first, "t >= min(r,s)"),
        (second, "r >= min(t,s+1)"),
        (third, "s >= min(r-1,t)"),
        (cases, "t=r or t=s or s=r-1"),
    ]
    .iter()
    .filter(|(ok, _)| !ok)
    .map(|(_, what)| *what)
    .collect();
    let out = LawOutcome::new(
        SHORT_EXACT_SEQUENCE,
        failed.is_empty(),
        format!("t={}", show(t)),
        format!("r={}, s={}", show(r), show(s)),
    );
    Ok(if failed.is_empty() {
        out
    } else {
        out.with_detail(format!("violated: {}", failed.join("; ")))
    })
}

fn ext_biconditional(
    e: &DepthEngine,
    law: &'static str,
    t: ExtendedDepth,
    a: &MonomialIdeal,
    m: &Subquotient,
) -> Result<LawOutcome> {
    let grade_is_t = e.grade(a, m)? == t;
    let ext_nonzero = match t {
        ExtendedDepth::Finite(t) => homology::ext_nonvanishing(a, m, t, e.field())?.is_some(),
        ExtendedDepth::Infinite => false,
    };
    Ok(LawOutcome::new(
        law,
        grade_is_t == ext_nonzero,
        format!("grade = t: {grade_is_t}"),
        format!("Ext^t != 0: {ext_nonzero}"),
    ))
}

/// For `a ∈ W̃(I,J)` with `aM ≠ M` and `t = depth(I,J,M)`:
/// `Ext^t(R/a, M) ≠ 0 ⇔ grade(a, M) = t`.
pub fn ext_characterization(
    e: &DepthEngine,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    m: &Subquotient,
    a: &MonomialIdeal,
) -> Result<LawOutcome> {
    if !w_tilde_member(a, i, j) {
        return Ok(LawOutcome::skipped(EXT_CHARACTERIZATION, "a is not in W̃(I,J)"));
    }
    if a.is_unit() || m.is_zero() {
        return Ok(LawOutcome::skipped(EXT_CHARACTERIZATION, "aM = M"));
    }
    let t = e.depth(i, j, m)?;
    ext_biconditional(e, EXT_CHARACTERIZATION, t, a, m)
}

/// For `b ∈ W̃(I,0)` with `bM ≠ M` and `t = depth(I,J,M)`:
/// `Ext^t(R/b, M) ≠ 0 ⇔ grade(b, M) = t`.
pub fn ext_characterization_j_zero(
    e: &DepthEngine,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    m: &Subquotient,
    b: &MonomialIdeal,
) -> Result<LawOutcome> {
    if !w_tilde_member(b, i, &MonomialIdeal::zero(i.nvars())) {
        return Ok(LawOutcome::skipped(EXT_CHARACTERIZATION_J_ZERO, "b is not in W̃(I,0)"));
    }
    if b.is_unit() || m.is_zero() {
        return Ok(LawOutcome::skipped(EXT_CHARACTERIZATION_J_ZERO, "bM = M"));
    }
    let t = e.depth(i, j, m)?;
    ext_biconditional(e, EXT_CHARACTERIZATION_J_ZERO, t, b, m)
}

/// `(I,J)`-Cohen-Macaulay ⇒ `(a,J)`-Cohen-Macaulay for proper `a ∈ W̃(I,J)`.
pub fn cm_descends(
    e: &DepthEngine,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    m: &Subquotient,
    a: &MonomialIdeal,
) -> Result<LawOutcome> {
    if !a.is_proper() || !w_tilde_member(a, i, j) {
        return Ok(LawOutcome::skipped(CM_DESCENDS, "a is not a proper member of W̃(I,J)"));
    }
    if !e.cm(i, j, m)?.is_cm {
        return Ok(LawOutcome::skipped(CM_DESCENDS, "M is not (I,J)-Cohen-Macaulay"));
    }
    let rhs = e.cm(a, j, m)?.is_cm;
    Ok(LawOutcome::new(CM_DESCENDS, rhs, true, rhs))
}

/// `(I,J)`-Cohen-Macaulay ⇒ `(m,J)`-Cohen-Macaulay, `m` the maximal
/// monomial prime.
pub fn cm_to_maximal(
    e: &DepthEngine,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    m: &Subquotient,
) -> Result<LawOutcome> {
    if !e.cm(i, j, m)?.is_cm {
        return Ok(LawOutcome::skipped(CM_TO_MAXIMAL, "M is not (I,J)-Cohen-Macaulay"));
    }
    let rhs = e.cm(&MonomialIdeal::maximal(i.nvars()), j, m)?.is_cm;
    Ok(LawOutcome::new(CM_TO_MAXIMAL, rhs, true, rhs))
}

/// For `M ≠ 0` and proper `J`: `depth(m, J, M) ≤ dim M/JM`.
pub fn upper_bound_dim(e: &DepthEngine, j: &MonomialIdeal, m: &Subquotient) -> Result<LawOutcome> {
    if m.is_zero() || j.is_unit() {
        return Ok(LawOutcome::skipped(UPPER_BOUND_DIM, "M = 0 or J = R"));
    }
    let d = e.depth(&MonomialIdeal::maximal(j.nvars()), j, m)?;
    let dim = decomp::dim_module(&m.quotient_by(j));
    let holds = match (d, dim) {
        (ExtendedDepth::Finite(d), KrullDim::Finite(k)) => d <= k,
        _ => false,
    };
    Ok(LawOutcome::new(UPPER_BOUND_DIM, holds, d, dim))
}

/// With `I + J` primary to the maximal ideal (`dim R/(I+J) = 0`):
/// `(I,J)`-Cohen-Macaulay ⇔ `(m,J)`-Cohen-Macaulay, and the test agrees
/// with `depth(I,J,M) = dim M/JM`.
pub fn primary_cm_criterion(
    e: &DepthEngine,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    m: &Subquotient,
) -> Result<LawOutcome> {
    if decomp::krull_dim_quotient(&i.sum(j)) != KrullDim::Finite(0) || m.is_zero() {
        return Ok(LawOutcome::skipped(PRIMARY_CM_CRITERION, "I + J is not m-primary, or M = 0"));
    }
    let here = e.cm(i, j, m)?;
    let at_max = e.cm(&MonomialIdeal::maximal(i.nvars()), j, m)?;
    let definitional = here.is_cm == here.dim_mod_jm.equals_depth(here.depth);
    Ok(LawOutcome::new(
        PRIMARY_CM_CRITERION,
        here.is_cm == at_max.is_cm && definitional,
        here.is_cm,
        at_max.is_cm,
    ))
}

/// `(I,J)`-torsion and `(I,J)`-Cohen-Macaulay ⇒ `M/JM` artinian.
pub fn torsion_artinian(
    e: &DepthEngine,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    m: &Subquotient,
) -> Result<LawOutcome> {
    if !e.is_torsion(i, j, m) || !e.cm(i, j, m)?.is_cm {
        return Ok(LawOutcome::skipped(TORSION_ARTINIAN, "M is not torsion and Cohen-Macaulay"));
    }
    let dim = decomp::dim_module(&m.quotient_by(j));
    Ok(LawOutcome::new(TORSION_ARTINIAN, dim <= KrullDim::Finite(0), "artinian", dim))
}

/// For the faithful module `R`: `dim R/J = n ⇔ J = 0`.
pub fn faithful_dimension(j: &MonomialIdeal) -> LawOutcome {
    let n = j.nvars();
    let dim = decomp::krull_dim_quotient(j);
    let full = dim == KrullDim::Finite(n);
    LawOutcome::new(FAITHFUL_DIMENSION, full == j.is_zero(), full, j.is_zero())
}

/// Laws that take an auxiliary ideal.
pub const AUX_LAWS: &[&str] = &[
    CHAIN_INEQUALITY,
    SECOND_IDEAL_SHRINK,
    ABSORB_INTO_FIRST,
    FIRST_RADICAL_EQUAL,
    SECOND_RADICAL_EQUAL,
    PRODUCT_VS_INTERSECTION,
    EXT_CHARACTERIZATION,
    EXT_CHARACTERIZATION_J_ZERO,
    CM_DESCENDS,
];

/// Evaluate a law by id on `(I, J, M)` and an optional auxiliary ideal.
/// The short exact sequence law reads `M = K'/K`; the grade-path law uses
/// the auxiliary ideal when given and `I` otherwise.
pub fn evaluate(
    e: &DepthEngine,
    law: &str,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    m: &Subquotient,
    aux: Option<&MonomialIdeal>,
) -> Result<LawOutcome> {
    let need = || {
        aux.ok_or_else(|| crate::error::Error::Precondition(format!("law {law} needs an auxiliary ideal")))
    };
    match law {
        J_ZERO_REDUCTION => j_zero_reduction(e, i, m),
        LOCALIZED_INFIMUM => localized_infimum(e, i, j, m),
        GRADE_PATHS => grade_paths(e, aux.unwrap_or(i), m),
        CHAIN_INEQUALITY => chain_inequality(e, i, j, m, need()?),
        SECOND_IDEAL_SHRINK => second_ideal_shrink(e, i, j, m, need()?),
        ABSORB_INTO_FIRST => absorb_into_first(e, i, j, m, need()?),
        FIRST_RADICAL_EQUAL => first_radical_equal(e, i, j, m, need()?),
        SECOND_RADICAL_EQUAL => second_radical_equal(e, i, j, m, need()?),
        RADICAL_INVARIANCE => radical_invariance(e, i, j, m),
        PRODUCT_VS_INTERSECTION => product_vs_intersection(e, i, j, m, need()?),
        SHORT_EXACT_SEQUENCE => short_exact_sequence(e, i, j, m.bottom(), m.top()),
        EXT_CHARACTERIZATION => ext_characterization(e, i, j, m, need()?),
        EXT_CHARACTERIZATION_J_ZERO => ext_characterization_j_zero(e, i, j, m, need()?),
        CM_DESCENDS => cm_descends(e, i, j, m, need()?),
        CM_TO_MAXIMAL => cm_to_maximal(e, i, j, m),
        UPPER_BOUND_DIM => upper_bound_dim(e, j, m),
        PRIMARY_CM_CRITERION => primary_cm_criterion(e, i, j, m),
        TORSION_ARTINIAN => torsion_artinian(e, i, j, m),
        FAITHFUL_DIMENSION => Ok(faithful_dimension(j)),
        other => Err(crate::error::Error::Precondition(format!("unknown law {other:?}"))),
    }
}
