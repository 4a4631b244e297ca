//! Depth of a pair of ideals.
//!
//! For monomial `I`, `J` the set `W(I,J) = { p : I^n ⊆ p + J for some n }`
//! is decided on monomial primes by radical containment `I ⊆ √(p + J)`.
//! `depth(I, J, M)` is the least `grade(p, M)` over the inclusion-minimal
//! monomial primes of `W(I,J)` (grade only grows along inclusions), and
//! independently the least `depth(M_p)` over all monomial primes of
//! `W(I,J)`. With [`PrimeScope::Local`] both infima also range over the
//! non-monomial primes of the local ring at the origin (see [`scope`]).

pub mod laws;
pub mod scope;

pub use scope::{Excess, PrimeScope};

use crate::decomp::{self, MonomialPrime};
use crate::depth::{ExtendedDepth, KrullDim};
use crate::error::{Error, Result};
use crate::homology;
use crate::ideal::MonomialIdeal;
use crate::module::Subquotient;
use crate::ring::Field;
use serde::Serialize;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, RwLock};

/// Default bound on `n` for the `2^n` enumeration of monomial primes.
pub const DEFAULT_ENUMERATION_CAP: usize = 16;

/// The triple `(I, J, M)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairContext {
    pub i: MonomialIdeal,
    pub j: MonomialIdeal,
    pub m: Subquotient,
}

impl PairContext {
    pub fn new(i: MonomialIdeal, j: MonomialIdeal, m: Subquotient) -> Result<Self> {
        let n = i.nvars();
        for got in [j.nvars(), m.nvars()] {
            if got != n {
                return Err(Error::Arity { expected: n, got });
            }
        }
        Ok(PairContext { i, j, m })
    }

    pub fn nvars(&self) -> usize {
        self.i.nvars()
    }
}

/// `a ∈ W̃(I,J)`: some power of `I` lies in `a + J`, i.e. `I ⊆ √(a + J)`.
pub fn w_tilde_member(a: &MonomialIdeal, i: &MonomialIdeal, j: &MonomialIdeal) -> bool {
    let s = a.sum(j);
    i.gens().iter().all(|g| s.radical_member(g))
}

/// `p ∈ W(I,J)`.
pub fn w_member(p: &MonomialPrime, i: &MonomialIdeal, j: &MonomialIdeal) -> bool {
    w_tilde_member(&p.to_ideal(), i, j)
}

/// Monomial primes of `W(I,J)`, all of them and the inclusion-minimal ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WSet {
    pub minimal_primes: Vec<MonomialPrime>,
    pub all_member_primes: Vec<MonomialPrime>,
}

pub fn enumerate_w(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<WSet> {
    enumerate_w_capped(i, j, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_w_capped(i: &MonomialIdeal, j: &MonomialIdeal, cap: usize) -> Result<WSet> {
    let n = i.nvars();
    if n > cap {
        return Err(Error::EnumerationCap { n, cap });
    }
    let all: Vec<MonomialPrime> = MonomialPrime::all(n).filter(|p| w_member(p, i, j)).collect();
    let minimal_primes = decomp::minimal_elements(all.iter().cloned());
    Ok(WSet {
        minimal_primes,
        all_member_primes: all,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeGrade {
    pub prime: MonomialPrime,
    pub grade: ExtendedDepth,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthReport {
    pub depth: ExtendedDepth,
    /// A minimal prime of `W(I,J)` attaining the depth; under
    /// [`PrimeScope::Local`] possibly the monomial part `p*` of a
    /// non-monomial witness `p`.
    pub witness_prime: Option<MonomialPrime>,
    /// `ht p - ht p*` for the witness; zero for a monomial witness.
    pub witness_excess: u32,
    pub dim_mod_jm: KrullDim,
    pub is_cm: bool,
    pub cm_diagnostic: Option<String>,
    pub w: WSet,
    /// `grade(p, M)` for each minimal prime `p` of `W(I,J)`.
    pub grade_table: Vec<PrimeGrade>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CmReport {
    pub is_cm: bool,
    pub depth: ExtendedDepth,
    pub dim_mod_jm: KrullDim,
    pub diagnostic: Option<String>,
}

/// Per-module cache of `grade(p_S, M)` and `depth(M_{p_S})`.
struct ModuleTable {
    module: Subquotient,
    grade: Mutex<HashMap<u64, ExtendedDepth>>,
    local: Mutex<HashMap<u64, ExtendedDepth>>,
    depth: Mutex<NestedMap<Witnessed>>,
}

/// A depth with the monomial prime under its witness and the excess height.
pub type Witnessed = (ExtendedDepth, Option<(MonomialPrime, u32)>);

/// `I -> J -> value`, so lookups borrow both keys.
type NestedMap<V> = HashMap<MonomialIdeal, HashMap<MonomialIdeal, V>>;

/// Computes depths of pairs, memoizing per-module prime data. Safe to share
/// between threads.
pub struct DepthEngine {
    field: Field,
    enumeration_cap: usize,
    scope: PrimeScope,
    tables: RwLock<HashMap<Subquotient, Arc<ModuleTable>>>,
    grades: RwLock<HashMap<(MonomialIdeal, Subquotient), ExtendedDepth>>,
    w_sets: RwLock<NestedMap<Arc<WSet>>>,
}

impl DepthEngine {
    pub fn new(field: Field) -> Self {
        DepthEngine {
            field,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            scope: PrimeScope::default(),
            tables: RwLock::default(),
            grades: RwLock::default(),
            w_sets: RwLock::default(),
        }
    }

    pub fn with_enumeration_cap(mut self, cap: usize) -> Self {
        self.enumeration_cap = cap;
        self
    }

    pub fn with_scope(mut self, scope: PrimeScope) -> Self {
        self.scope = scope;
        self
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn scope(&self) -> PrimeScope {
        self.scope
    }

    /// Fold the non-monomial primes of `W(I,J)` into `best`: for each
    /// monomial `q ∉ W(I,J)` in the support, `depth(M_q) + e(q)`.
    fn non_monomial(
        &self,
        i: &MonomialIdeal,
        j: &MonomialIdeal,
        m: &Subquotient,
        mut best: Witnessed,
    ) -> Result<Witnessed> {
        if self.scope == PrimeScope::Monomial {
            return Ok(best);
        }
        for q in MonomialPrime::all(i.nvars()) {
            let (lo, exact) = match scope::excess_height(&q, i, j) {
                Excess::Exact(0) | Excess::Empty => continue,
                Excess::Exact(e) => (e, true),
                Excess::Between(lo, _) => (lo, false),
            };
            let ExtendedDepth::Finite(d) = self.local_depth(&q, m)? else {
                continue;
            };
            let candidate = ExtendedDepth::Finite(d + lo as usize);
            if candidate >= best.0 {
                continue;
            }
            if !exact {
                return Err(Error::Domain(format!(
                    "non-monomial primes over {:?} are not decided for {} outside variables",
                    q.vars(),
                    i.nvars() - q.vars().len()
                )));
            }
            best = (candidate, Some((q, lo)));
        }
        Ok(best)
    }

    fn table(&self, m: &Subquotient) -> Arc<ModuleTable> {
        if let Some(t) = self.tables.read().unwrap().get(m) {
            return t.clone();
        }
        let mut tables = self.tables.write().unwrap();
        tables
            .entry(m.clone())
            .or_insert_with(|| {
                Arc::new(ModuleTable {
                    module: m.clone(),
                    grade: Mutex::default(),
                    local: Mutex::default(),
                    depth: Mutex::default(),
                })
            })
            .clone()
    }

    /// `grade(p, M)` through the Koszul complex on the variables of `p`.
    pub fn prime_grade(&self, p: &MonomialPrime, m: &Subquotient) -> Result<ExtendedDepth> {
        let t = self.table(m);
        if let Some(v) = t.grade.lock().unwrap().get(&p.mask()) {
            return Ok(*v);
        }
        let v = homology::grade(&p.to_ideal(), &t.module, self.field)?.value;
        t.grade.lock().unwrap().insert(p.mask(), v);
        Ok(v)
    }

    /// `depth(M_p)` through coordinate deletion.
    pub fn local_depth(&self, p: &MonomialPrime, m: &Subquotient) -> Result<ExtendedDepth> {
        let t = self.table(m);
        if let Some(v) = t.local.lock().unwrap().get(&p.mask()) {
            return Ok(*v);
        }
        let v = homology::depth_at_prime(p, &t.module, self.field)?.value;
        t.local.lock().unwrap().insert(p.mask(), v);
        Ok(v)
    }

    /// `grade(a, M)` through the Koszul complex on the generators of `a`.
    pub fn grade(&self, a: &MonomialIdeal, m: &Subquotient) -> Result<ExtendedDepth> {
        let key = (a.clone(), m.clone());
        if let Some(v) = self.grades.read().unwrap().get(&key) {
            return Ok(*v);
        }
        let v = homology::grade(a, m, self.field)?.value;
        self.grades.write().unwrap().insert(key, v);
        Ok(v)
    }

    pub fn w_set(&self, i: &MonomialIdeal, j: &MonomialIdeal) -> Result<Arc<WSet>> {
        if let Some(w) = self.w_sets.read().unwrap().get(i).and_then(|m| m.get(j)) {
            return Ok(w.clone());
        }
        let w = Arc::new(enumerate_w_capped(i, j, self.enumeration_cap)?);
        self.w_sets
            .write()
            .unwrap()
            .entry(i.clone())
            .or_default()
            .insert(j.clone(), w.clone());
        Ok(w)
    }

    /// `depth(I, J, M)` with the minimizing prime.
    pub fn depth_with_witness(
        &self,
        i: &MonomialIdeal,
        j: &MonomialIdeal,
        m: &Subquotient,
    ) -> Result<Witnessed> {
        if m.is_zero() {
            return Ok((ExtendedDepth::Infinite, None));
        }
        let t = self.table(m);
        if let Some(v) = t.depth.lock().unwrap().get(i).and_then(|row| row.get(j)) {
            return Ok(v.clone());
        }
        let w = self.w_set(i, j)?;
        let mut best = (ExtendedDepth::Infinite, None);
        for p in &w.minimal_primes {
            let g = self.prime_grade(p, m)?;
            if g < best.0 {
                best = (g, Some((p.clone(), 0)));
            }
        }
        let best = self.non_monomial(i, j, m, best)?;
        t.depth
            .lock()
            .unwrap()
            .entry(i.clone())
            .or_default()
            .insert(j.clone(), best.clone());
        Ok(best)
    }

    pub fn depth(&self, i: &MonomialIdeal, j: &MonomialIdeal, m: &Subquotient) -> Result<ExtendedDepth> {
        Ok(self.depth_with_witness(i, j, m)?.0)
    }

    /// `inf { depth(M_p) : p ∈ W(I,J) }` over all monomial members.
    pub fn depth_localized(
        &self,
        i: &MonomialIdeal,
        j: &MonomialIdeal,
        m: &Subquotient,
    ) -> Result<ExtendedDepth> {
        if m.is_zero() {
            return Ok(ExtendedDepth::Infinite);
        }
        let w = self.w_set(i, j)?;
        let mut best = ExtendedDepth::Infinite;
        for p in &w.all_member_primes {
            best = best.min(self.local_depth(p, m)?);
        }
        Ok(self.non_monomial(i, j, m, (best, None))?.0)
    }

    pub fn cm(&self, i: &MonomialIdeal, j: &MonomialIdeal, m: &Subquotient) -> Result<CmReport> {
        let depth = self.depth(i, j, m)?;
        let dim_mod_jm = decomp::dim_module(&m.quotient_by(j));
        if j.is_unit() {
            return Ok(CmReport {
                is_cm: false,
                depth,
                dim_mod_jm,
                diagnostic: Some("J is the unit ideal; the Cohen-Macaulay test needs a proper J".into()),
            });
        }
        let is_cm = m.is_zero() || dim_mod_jm.equals_depth(depth);
        Ok(CmReport {
            is_cm,
            depth,
            dim_mod_jm,
            diagnostic: None,
        })
    }

    pub fn report(&self, ctx: &PairContext) -> Result<DepthReport> {
        let w = (*self.w_set(&ctx.i, &ctx.j)?).clone();
        let (depth, witness) = self.depth_with_witness(&ctx.i, &ctx.j, &ctx.m)?;
        let (witness_prime, witness_excess) = match witness {
            Some((p, e)) => (Some(p), e),
            None => (None, 0),
        };
        let cm = self.cm(&ctx.i, &ctx.j, &ctx.m)?;
        let grade_table = if ctx.m.is_zero() {
            Vec::new()
        } else {
            w.minimal_primes
                .iter()
                .map(|p| {
                    Ok(PrimeGrade {
                        prime: p.clone(),
                        grade: self.prime_grade(p, &ctx.m)?,
                    })
                })
                .collect::<Result<_>>()?
        };
        Ok(DepthReport {
            depth,
            witness_prime,
            witness_excess,
            dim_mod_jm: cm.dim_mod_jm,
            is_cm: cm.is_cm,
            cm_diagnostic: cm.diagnostic,
            w,
            grade_table,
        })
    }

    /// `Γ_{I,J}(M) = M`: every minimal prime of `ann(M)` lies in `W(I,J)`;
    /// both sets are closed upwards. The same in either scope: a prime lies
    /// in `W(I,J)` whenever its monomial part does.
    pub fn is_torsion(&self, i: &MonomialIdeal, j: &MonomialIdeal, m: &Subquotient) -> bool {
        decomp::minimal_primes(&decomp::annihilator(m))
            .iter()
            .all(|p| w_member(p, i, j))
    }
}

pub fn pair_depth(ctx: &PairContext, field: Field) -> Result<DepthReport> {
    DepthEngine::new(field).report(ctx)
}

pub fn pair_depth_localized(ctx: &PairContext, field: Field) -> Result<ExtendedDepth> {
    DepthEngine::new(field).depth_localized(&ctx.i, &ctx.j, &ctx.m)
}

pub fn is_pair_cm(ctx: &PairContext, field: Field) -> Result<CmReport> {
    DepthEngine::new(field).cm(&ctx.i, &ctx.j, &ctx.m)
}

pub fn is_ij_torsion(ctx: &PairContext) -> bool {
    DepthEngine::new(Field::Rationals).is_torsion(&ctx.i, &ctx.j, &ctx.m)
}

/// `M/JM` is artinian: of dimension at most 0 (the zero module included).
pub fn artinian_conclusion(ctx: &PairContext) -> bool {
    decomp::dim_module(&ctx.m.quotient_by(&ctx.j)) <= KrullDim::Finite(0)
}

/// For `a ∈ W̃(I,J)` with `aM ≠ M`: checks that `grade(a, M) = t` holds
/// exactly when `Ext^t(R/a, M) ≠ 0`, for `t = depth(I, J, M)`.
pub fn ext_criterion_holds(ctx: &PairContext, a: &MonomialIdeal, field: Field) -> Result<bool> {
    if !w_tilde_member(a, &ctx.i, &ctx.j) {
        return Err(Error::Precondition("a is not in W̃(I, J)".into()));
    }
    ext_equivalence(ctx, a, field)
}

/// For `b ∈ W̃(I,0)` with `bM ≠ M`: the same biconditional as
/// [`ext_criterion_holds`] with `t = depth(I, J, M)`.
pub fn ext_criterion_holds_j_zero(ctx: &PairContext, b: &MonomialIdeal, field: Field) -> Result<bool> {
    if !w_tilde_member(b, &ctx.i, &MonomialIdeal::zero(ctx.nvars())) {
        return Err(Error::Precondition("b is not in W̃(I, 0)".into()));
    }
    ext_equivalence(ctx, b, field)
}

fn ext_equivalence(ctx: &PairContext, a: &MonomialIdeal, field: Field) -> Result<bool> {
    if a.is_unit() || ctx.m.is_zero() {
        return Err(Error::Precondition("aM = M".into()));
    }
    let engine = DepthEngine::new(field);
    let t = engine.depth(&ctx.i, &ctx.j, &ctx.m)?;
    let grade_is_t = engine.grade(a, &ctx.m)? == t;
    let ext_nonzero = match t {
        ExtendedDepth::Finite(t) => homology::ext_nonvanishing(a, &ctx.m, t, field)?.is_some(),
        ExtendedDepth::Infinite => false,
    };
    Ok(grade_is_t == ext_nonzero)
}

/// Evaluate the comparison laws that involve auxiliary ideals `b`, `c` on
/// one context (and, when given, a pair `K ⊆ K'` for the short exact
/// sequence `0 → K'/K → R/K → R/K' → 0`).
pub fn depth_law_suite(
    ctx: &PairContext,
    b: &MonomialIdeal,
    c: &MonomialIdeal,
    ses: Option<(&MonomialIdeal, &MonomialIdeal)>,
    field: Field,
) -> Result<Vec<laws::LawOutcome>> {
    let engine = DepthEngine::new(field);
    let (i, j, m) = (&ctx.i, &ctx.j, &ctx.m);
    let mut out = vec![
        laws::chain_inequality(&engine, i, j, m, i)?,
        laws::chain_inequality(&engine, i, j, m, b)?,
        laws::second_ideal_shrink(&engine, i, j, m, b)?,
        laws::absorb_into_first(&engine, i, j, m, c)?,
        laws::first_radical_equal(&engine, i, j, m, b)?,
        laws::second_radical_equal(&engine, i, j, m, c)?,
        laws::radical_invariance(&engine, i, j, m)?,
        laws::product_vs_intersection(&engine, i, j, m, b)?,
    ];
    if let Some((k, k2)) = ses {
        out.push(laws::short_exact_sequence(&engine, i, j, k, k2)?);
    }
    Ok(out)
}
