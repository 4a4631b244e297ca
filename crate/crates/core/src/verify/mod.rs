//! Census harness: exhaustive small instances, seeded random instances,
//! and the law suites evaluated over them.
//!
//! Failures never abort a run; each one becomes a
//! [`CounterexampleArtifact`] and the run continues.

pub mod artifact;
pub mod enumerate;
pub mod grid;

pub use artifact::{CounterexampleArtifact, LawInstance};

use crate::decomp::MonomialPrime;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::module::Subquotient;
use crate::monomial::Monomial;
use crate::pair::laws::{self, LawOutcome};
use crate::pair::{DepthEngine, PrimeScope};
use crate::ring::{Field, RingContext};
use crate::sequences::{self, GreedyOutcome};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const MAX_CENSUS_VARS: usize = 3;
pub const MAX_CENSUS_EXPONENT: u32 = 2;
pub const MAX_CENSUS_GENERATORS: usize = 4;

pub const SEQUENCE_COMPARISON: &str = "sequence-comparison";
pub const REGULAR_ELEMENT_ROUTES: &str = "regular-element-routes";
pub const POOR_K_MONOTONE: &str = "poor-k-monotone";
pub const GREEDY_SEQUENCE_VALID: &str = "greedy-sequence-valid";

pub const SEQUENCE_LAWS: &[&str] = &[
    SEQUENCE_COMPARISON,
    REGULAR_ELEMENT_ROUTES,
    POOR_K_MONOTONE,
    GREEDY_SEQUENCE_VALID,
];

/// Bounds of an exhaustive census, plus the seed used by sampled runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSpec {
    pub n: usize,
    pub max_exponent: u32,
    pub max_generators: usize,
    pub include_subquotients: bool,
    pub seed: u64,
    #[serde(default)]
    pub field: Field,
    #[serde(default)]
    pub scope: PrimeScope,
}

impl CensusSpec {
    pub fn exhaustive(n: usize, max_exponent: u32) -> Self {
        CensusSpec {
            n,
            max_exponent,
            max_generators: MAX_CENSUS_GENERATORS,
            include_subquotients: true,
            seed: 0,
            field: Field::Rationals,
            scope: PrimeScope::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > MAX_CENSUS_VARS {
            return Err(Error::Precondition(format!(
                "census needs 1 to {MAX_CENSUS_VARS} variables, got {}",
                self.n
            )));
        }
        if self.max_exponent > MAX_CENSUS_EXPONENT {
            return Err(Error::Precondition(format!(
                "census exponents are capped at {MAX_CENSUS_EXPONENT}, got {}",
                self.max_exponent
            )));
        }
        if self.max_generators > MAX_CENSUS_GENERATORS {
            return Err(Error::Precondition(format!(
                "census generator count is capped at {MAX_CENSUS_GENERATORS}, got {}",
                self.max_generators
            )));
        }
        Ok(())
    }

    pub fn ring(&self) -> RingContext {
        RingContext::standard(self.field, self.n).expect("standard ring")
    }

    pub fn ideals(&self) -> Vec<MonomialIdeal> {
        enumerate::enumerate_ideals(self.n, self.max_exponent, self.max_generators)
    }

    pub fn modules(&self, ideals: &[MonomialIdeal]) -> Vec<Subquotient> {
        if self.include_subquotients {
            enumerate::enumerate_subquotients(ideals)
        } else {
            enumerate::quotient_rings(ideals)
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LawTally {
    pub law: String,
    pub evaluated: usize,
    pub applicable: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub instances: usize,
    pub tallies: Vec<LawTally>,
    pub artifacts: Vec<CounterexampleArtifact>,
    /// Set when the evaluation budget ran out before the census finished.
    pub incomplete: bool,
}

impl CensusSummary {
    pub fn failures(&self) -> usize {
        self.tallies.iter().map(|t| t.failures).sum()
    }

    pub fn evaluated(&self) -> usize {
        self.tallies.iter().map(|t| t.evaluated).sum()
    }

    pub fn tally(&self, law: &str) -> Option<&LawTally> {
        self.tallies.iter().find(|t| t.law == law)
    }

    fn tally_mut(&mut self, law: &str) -> &mut LawTally {
        if let Some(k) = self.tallies.iter().position(|t| t.law == law) {
            return &mut self.tallies[k];
        }
        self.tallies.push(LawTally {
            law: law.to_string(),
            ..LawTally::default()
        });
        self.tallies.last_mut().unwrap()
    }

    fn record(&mut self, ring: &RingContext, scope: PrimeScope, law: &str, inst: &LawInstance, outcome: Result<LawOutcome>) {
        let t = self.tally_mut(law);
        t.evaluated += 1;
        let failed = match &outcome {
            Ok(o) => {
                if o.applicable {
                    t.applicable += 1;
                }
                !o.holds
            }
            Err(_) => true,
        };
        if failed {
            t.failures += 1;
            self.artifacts
                .push(CounterexampleArtifact::new(ring, law, inst, &outcome).with_scope(scope));
        }
    }

    fn merge(&mut self, other: CensusSummary) {
        self.instances += other.instances;
        for t in other.tallies {
            let mine = self.tally_mut(&t.law);
            mine.evaluated += t.evaluated;
            mine.applicable += t.applicable;
            mine.failures += t.failures;
        }
        self.artifacts.extend(other.artifacts);
        self.incomplete |= other.incomplete;
    }

    fn sort_tallies(&mut self, order: &[&str]) {
        self.tallies
            .sort_by_key(|t| order.iter().position(|l| *l == t.law).unwrap_or(usize::MAX));
    }
}

/// Evaluate a sequence law on an instance.
pub fn evaluate_sequence_law(e: &DepthEngine, law: &str, inst: &LawInstance) -> Result<LawOutcome> {
    let seq = || {
        inst.seq
            .as_deref()
            .filter(|s| !s.is_empty())
            .ok_or_else(|| Error::Precondition(format!("law {law} needs a nonempty sequence")))
    };
    let k = || inst.k.ok_or_else(|| Error::Precondition(format!("law {law} needs k")));
    match law {
        SEQUENCE_COMPARISON => {
            let c = sequences::compare_along_sequence(seq()?, &inst.i, &inst.j, &inst.m, k()?, e.field())?;
            if !c.hypothesis_holds {
                return Ok(LawOutcome::skipped(SEQUENCE_COMPARISON, "hypothesis fails"));
            }
            let cap = c.len;
            Ok(LawOutcome::new(
                SEQUENCE_COMPARISON,
                c.consequence_holds,
                format!("min({}, {cap})", c.depth_i),
                format!("min({}, {cap})", c.depth_a),
            ))
        }
        REGULAR_ELEMENT_ROUTES => {
            let u = &seq()?[0];
            let colon = sequences::is_regular_element(u, &inst.m)?;
            let ass = sequences::is_regular_element_via_ass(u, &inst.m)?;
            Ok(LawOutcome::new(REGULAR_ELEMENT_ROUTES, colon == ass, colon, ass))
        }
        POOR_K_MONOTONE => {
            let (s, k) = (seq()?, k()?);
            if !sequences::is_poor_k_regular(s, &inst.m, k).verdict {
                return Ok(LawOutcome::skipped(POOR_K_MONOTONE, "not poor k-regular"));
            }
            let next = sequences::is_poor_k_regular(s, &inst.m, k + 1).verdict;
            Ok(LawOutcome::new(POOR_K_MONOTONE, next, true, next))
        }
        GREEDY_SEQUENCE_VALID => {
            let a = inst
                .aux
                .as_ref()
                .ok_or_else(|| Error::Precondition(format!("law {law} needs an auxiliary ideal")))?;
            if !a.is_proper() || a.is_zero() {
                return Ok(LawOutcome::skipped(GREEDY_SEQUENCE_VALID, "a is zero or the unit ideal"));
            }
            let grade = e.grade(a, &inst.m)?;
            let Some(target) = grade.finite() else {
                return Ok(LawOutcome::skipped(GREEDY_SEQUENCE_VALID, "grade is infinite"));
            };
            match sequences::greedy_regular_sequence(a, &inst.m, target, e.field())? {
                GreedyOutcome::Found { sequence } => {
                    let regular = sequences::is_poor_k_regular(&sequence, &inst.m, -1).verdict;
                    let inside = sequence.iter().all(|u| a.member(u));
                    Ok(LawOutcome::new(
                        GREEDY_SEQUENCE_VALID,
                        regular && inside && sequence.len() == target,
                        sequence.len(),
                        grade,
                    ))
                }
                GreedyOutcome::Failed(f) => {
                    // the certificate: every generator of a lies in a cover prime
                    let covered = a
                        .gens()
                        .iter()
                        .all(|g| f.cover.iter().any(|p: &MonomialPrime| p.contains_monomial(g)));
                    Ok(LawOutcome::new(
                        GREEDY_SEQUENCE_VALID,
                        covered && !f.cover.is_empty(),
                        format!("stuck after {}", f.prefix.len()),
                        grade,
                    )
                    .with_detail("no monomial witness; Ass cover certificate"))
                }
            }
        }
        other => Err(Error::Precondition(format!("unknown sequence law {other:?}"))),
    }
}

fn wants(laws: &[&str], law: &str) -> bool {
    laws.contains(&law)
}

/// Evaluate `laws` on every `(I, J, M)` of the census, and every auxiliary
/// ideal of the census for the laws that take one.
pub fn run_census(spec: &CensusSpec, laws: &[&str]) -> Result<CensusSummary> {
    run_census_with_budget(spec, laws, None)
}

/// As [`run_census`], stopping once `budget` law evaluations have been
/// made (the summary is then flagged incomplete).
pub fn run_census_with_budget(spec: &CensusSpec, laws_wanted: &[&str], budget: Option<usize>) -> Result<CensusSummary> {
    spec.validate()?;
    if let Some(bad) = laws_wanted
        .iter()
        .find(|l| !laws::ALL_LAWS.contains(l) && !SEQUENCE_LAWS.contains(l))
    {
        return Err(Error::Precondition(format!("unknown law {bad:?}")));
    }
    let ring = spec.ring();
    let ideals = spec.ideals();
    let modules = spec.modules(&ideals);
    let engine = DepthEngine::new(spec.field).with_scope(spec.scope);
    let n = spec.n;
    let per_module = budget.map(|b| b.div_ceil(modules.len().max(1)));
    let partials: Vec<CensusSummary> = modules
        .par_iter()
        .map(|m| module_census(&engine, &ring, &ideals, m, laws_wanted, per_module, n))
        .collect();
    let mut summary = CensusSummary::default();
    for p in partials {
        summary.merge(p);
    }
    let mut order: Vec<&str> = laws::ALL_LAWS.to_vec();
    order.extend(SEQUENCE_LAWS);
    summary.sort_tallies(&order);
    Ok(summary)
}

fn module_census(
    engine: &DepthEngine,
    ring: &RingContext,
    ideals: &[MonomialIdeal],
    m: &Subquotient,
    wanted: &[&str],
    budget: Option<usize>,
    n: usize,
) -> CensusSummary {
    let mut s = CensusSummary::default();
    let zero = MonomialIdeal::zero(n);
    let over = |s: &CensusSummary| budget.is_some_and(|b| s.evaluated() >= b);
    let eval = |s: &mut CensusSummary, law: &str, inst: &LawInstance| {
        let out = inst.evaluate(law, engine);
        s.record(ring, engine.scope(), law, inst, out);
    };
    'outer: for (ii, i) in ideals.iter().enumerate() {
        for j in ideals {
            if over(&s) {
                s.incomplete = true;
                break 'outer;
            }
            s.instances += 1;
            let base = LawInstance::new(i.clone(), j.clone(), m.clone());
            for law in [
                laws::LOCALIZED_INFIMUM,
                laws::RADICAL_INVARIANCE,
                laws::SHORT_EXACT_SEQUENCE,
                laws::CM_TO_MAXIMAL,
                laws::PRIMARY_CM_CRITERION,
                laws::TORSION_ARTINIAN,
            ] {
                if wants(wanted, law) {
                    eval(&mut s, law, &base);
                }
            }
            if *j == zero {
                for law in [laws::J_ZERO_REDUCTION, laws::GRADE_PATHS] {
                    if wants(wanted, law) {
                        eval(&mut s, law, &base);
                    }
                }
            }
            if ii == 0 {
                if wants(wanted, laws::UPPER_BOUND_DIM) {
                    eval(&mut s, laws::UPPER_BOUND_DIM, &base);
                }
                if wants(wanted, laws::FAITHFUL_DIMENSION) && *m == Subquotient::ring(n) {
                    eval(&mut s, laws::FAITHFUL_DIMENSION, &base);
                }
            }
            for law in laws::AUX_LAWS {
                if !wants(wanted, law) {
                    continue;
                }
                for aux in ideals {
                    eval(&mut s, law, &base.clone().with_aux(aux.clone()));
                }
            }
        }
    }
    if !over(&s) {
        sequence_laws_on_module(&mut s, engine, ring, ideals, m, wanted, n);
    }
    s
}

fn sequence_laws_on_module(
    s: &mut CensusSummary,
    engine: &DepthEngine,
    ring: &RingContext,
    ideals: &[MonomialIdeal],
    m: &Subquotient,
    wanted: &[&str],
    n: usize,
) {
    let zero = MonomialIdeal::zero(n);
    let base = LawInstance::new(zero.clone(), zero, m.clone());
    let elems: Vec<Monomial> = enumerate::box_points(n, 2).into_iter().filter(|u| !u.is_one()).collect();
    let eval = |s: &mut CensusSummary, law: &str, inst: &LawInstance| {
        let out = inst.evaluate(law, engine);
        s.record(ring, engine.scope(), law, inst, out);
    };
    if wants(wanted, REGULAR_ELEMENT_ROUTES) {
        for u in &elems {
            eval(s, REGULAR_ELEMENT_ROUTES, &base.clone().with_sequence(vec![u.clone()], -1));
        }
    }
    if wants(wanted, POOR_K_MONOTONE) {
        for u in &elems {
            for v in &elems {
                for k in -1..=1 {
                    let inst = base.clone().with_sequence(vec![u.clone(), v.clone()], k);
                    eval(s, POOR_K_MONOTONE, &inst);
                }
            }
        }
    }
    if wants(wanted, GREEDY_SEQUENCE_VALID) {
        for a in ideals {
            eval(s, GREEDY_SEQUENCE_VALID, &base.clone().with_aux(a.clone()));
        }
    }
}

/// `depth(I,J,M)` against its localized form, `depth(I,0,M)` against
/// `grade(I,M)`, and the three grade computations, on the whole census.
pub fn cross_path_consistency(spec: &CensusSpec) -> Result<CensusSummary> {
    run_census(spec, &[laws::LOCALIZED_INFIMUM, laws::J_ZERO_REDUCTION, laws::GRADE_PATHS])
}

/// Seeded random instances `(a, M)` in `n` variables.
pub fn random_grade_instances(seed: u64, count: usize, n: usize, max_exponent: u32) -> Vec<(MonomialIdeal, Subquotient)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a = enumerate::random_ideal(&mut rng, n, max_exponent, 4, true);
            let m = enumerate::random_module(&mut rng, n, max_exponent);
            (a, m)
        })
        .collect()
}

/// The grade-path law on seeded random instances.
pub fn grade_path_sample(seed: u64, count: usize, n: usize, field: Field) -> Result<CensusSummary> {
    let ring = RingContext::standard(field, n)?;
    let engine = DepthEngine::new(field);
    let instances = random_grade_instances(seed, count, n, 2);
    let partials: Vec<CensusSummary> = instances
        .par_iter()
        .map(|(a, m)| {
            let mut s = CensusSummary {
                instances: 1,
                ..CensusSummary::default()
            };
            let inst = LawInstance::new(a.clone(), MonomialIdeal::zero(n), m.clone());
            let out = inst.evaluate(laws::GRADE_PATHS, &engine);
            s.record(&ring, engine.scope(), laws::GRADE_PATHS, &inst, out);
            s
        })
        .collect();
    let mut summary = CensusSummary::default();
    for p in partials {
        summary.merge(p);
    }
    Ok(summary)
}

/// Result of sampling the sequence comparison.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SequenceSample {
    pub attempted: usize,
    pub hypothesis_passed: usize,
    pub consequence_failures: usize,
    pub artifacts: Vec<CounterexampleArtifact>,
    /// Instances whose hypothesis passed, in order, for inspection.
    pub passed_instances: Vec<BTreeMap<String, String>>,
}

/// Draw seeded instances `(a, I, J, M, k)` with each `a_i ∈ I` until
/// `wanted` of them satisfy the hypothesis of the sequence comparison (or
/// `max_attempts` draws are used), and check the consequence on those.
pub fn sequence_comparison_sample(
    seed: u64,
    wanted: usize,
    max_attempts: usize,
    field: Field,
) -> Result<SequenceSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let engine = DepthEngine::new(field);
    let mut out = SequenceSample::default();
    while out.hypothesis_passed < wanted && out.attempted < max_attempts {
        out.attempted += 1;
        let n = rng.gen_range(2..=3);
        let ring = RingContext::standard(field, n)?;
        let i = enumerate::random_ideal(&mut rng, n, 2, 3, false);
        let j = enumerate::random_ideal(&mut rng, n, 2, 2, true);
        let m = enumerate::random_module(&mut rng, n, 2);
        let k = rng.gen_range(-1..=1);
        let len = rng.gen_range(1..=2);
        let seq: Vec<Monomial> = (0..len)
            .map(|_| {
                let g = &i.gens()[rng.gen_range(0..i.gens().len())];
                let extra = if rng.gen_bool(0.5) {
                    Monomial::var(n, rng.gen_range(0..n))
                } else {
                    Monomial::one(n)
                };
                g.mul(&extra)
            })
            .collect();
        let inst = LawInstance::new(i, j, m).with_sequence(seq, k);
        let outcome = inst.evaluate(SEQUENCE_COMPARISON, &engine);
        match &outcome {
            Ok(o) if !o.applicable => continue,
            Ok(o) => {
                out.hypothesis_passed += 1;
                out.passed_instances.push(CounterexampleArtifact::new(&ring, SEQUENCE_COMPARISON, &inst, &outcome).inputs);
                if o.holds {
                    continue;
                }
            }
            Err(_) => {}
        }
        out.consequence_failures += 1;
        out.artifacts.push(CounterexampleArtifact::new(&ring, SEQUENCE_COMPARISON, &inst, &outcome));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_caps() {
        assert!(CensusSpec::exhaustive(4, 2).validate().is_err());
        assert!(CensusSpec::exhaustive(2, 3).validate().is_err());
        assert!(CensusSpec::exhaustive(2, 2).validate().is_ok());
    }

    #[test]
    fn budget_flags_incomplete() {
        let spec = CensusSpec::exhaustive(2, 1);
        let s = run_census_with_budget(&spec, &[laws::LOCALIZED_INFIMUM], Some(10)).unwrap();
        assert!(s.incomplete);
        let s = run_census(&spec, &[laws::LOCALIZED_INFIMUM]).unwrap();
        assert!(!s.incomplete);
        assert_eq!(s.failures(), 0);
    }

    #[test]
    fn unknown_law_is_refused() {
        assert!(run_census(&CensusSpec::exhaustive(1, 1), &["no-such-law"]).is_err());
    }

    #[test]
    fn artifacts_replay() {
        let ring = RingContext::standard(Field::Rationals, 2).unwrap();
        let x = MonomialIdeal::prime(2, &[0]);
        let inst = LawInstance::new(MonomialIdeal::maximal(2), x.clone(), Subquotient::ring(2))
            .with_sequence(vec![Monomial::var(2, 0)], -1);
        let engine = DepthEngine::new(Field::Rationals);
        let out = inst.evaluate(SEQUENCE_COMPARISON, &engine);
        assert!(!out.as_ref().unwrap().holds);
        let art = CounterexampleArtifact::new(&ring, SEQUENCE_COMPARISON, &inst, &out);
        let back = CounterexampleArtifact::from_json(&art.to_json()).unwrap();
        assert_eq!(back, art);
        assert_eq!(back.replay().unwrap(), out.unwrap());
    }

    #[test]
    fn samples_are_deterministic() {
        let a = random_grade_instances(7, 20, 3, 2);
        assert_eq!(a, random_grade_instances(7, 20, 3, 2));
        assert_ne!(a, random_grade_instances(8, 20, 3, 2));
    }
}
