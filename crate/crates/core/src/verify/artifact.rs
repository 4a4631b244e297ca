//! Self-contained, replayable records of law failures.

use super::{evaluate_sequence_law, SEQUENCE_LAWS};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::module::Subquotient;
use crate::monomial::Monomial;
use crate::pair::laws::{self, LawOutcome};
use crate::pair::{DepthEngine, PrimeScope};
use crate::ring::RingContext;
use crate::syntax;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Inputs are stored in the text syntax of [`crate::syntax`], keyed by
/// role: `I`, `J`, `M`, `aux`, `seq` (comma-separated monomials) and `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleArtifact {
    pub law: String,
    pub ring: String,
    pub inputs: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default)]
    pub scope: PrimeScope,
}

/// Inputs of one law evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawInstance {
    pub i: MonomialIdeal,
    pub j: MonomialIdeal,
    pub m: Subquotient,
    pub aux: Option<MonomialIdeal>,
    pub seq: Option<Vec<Monomial>>,
    pub k: Option<i64>,
}

impl LawInstance {
    pub fn new(i: MonomialIdeal, j: MonomialIdeal, m: Subquotient) -> Self {
        LawInstance {
            i,
            j,
            m,
            aux: None,
            seq: None,
            k: None,
        }
    }

    pub fn with_aux(mut self, aux: MonomialIdeal) -> Self {
        self.aux = Some(aux);
        self
    }

    pub fn with_sequence(mut self, seq: Vec<Monomial>, k: i64) -> Self {
        self.seq = Some(seq);
        self.k = Some(k);
        self
    }

    pub fn evaluate(&self, law: &str, engine: &DepthEngine) -> Result<LawOutcome> {
        if SEQUENCE_LAWS.contains(&law) {
            evaluate_sequence_law(engine, law, self)
        } else {
            laws::evaluate(engine, law, &self.i, &self.j, &self.m, self.aux.as_ref())
        }
    }

    fn encode(&self, ring: &RingContext) -> BTreeMap<String, String> {
        let mut out = BTreeMap::new();
        out.insert("I".into(), syntax::print_ideal(&self.i, ring));
        out.insert("J".into(), syntax::print_ideal(&self.j, ring));
        out.insert("M".into(), syntax::print_module(&self.m, ring));
        if let Some(a) = &self.aux {
            out.insert("aux".into(), syntax::print_ideal(a, ring));
        }
        if let Some(seq) = &self.seq {
            let parts: Vec<String> = seq.iter().map(|m| syntax::print_monomial(m, ring)).collect();
            out.insert("seq".into(), parts.join(", "));
        }
        if let Some(k) = self.k {
            out.insert("k".into(), k.to_string());
        }
        out
    }

    fn decode(inputs: &BTreeMap<String, String>, ring: &RingContext) -> Result<Self> {
        let get = |key: &str| {
            inputs
                .get(key)
                .ok_or_else(|| Error::Precondition(format!("artifact input {key} is missing")))
        };
        let mut inst = LawInstance::new(
            syntax::parse_ideal(get("I")?, ring)?,
            syntax::parse_ideal(get("J")?, ring)?,
            syntax::parse_module(get("M")?, ring)?,
        );
        if let Some(a) = inputs.get("aux") {
            inst.aux = Some(syntax::parse_ideal(a, ring)?);
        }
        if let Some(s) = inputs.get("seq") {
            inst.seq = Some(
                s.split(',')
                    .map(|t| syntax::parse_monomial(t.trim(), ring))
                    .collect::<Result<_>>()?,
            );
        }
        if let Some(k) = inputs.get("k") {
            inst.k = Some(
                k.parse()
                    .map_err(|_| Error::Precondition(format!("artifact input k = {k:?} is not an integer")))?,
            );
        }
        Ok(inst)
    }
}

impl CounterexampleArtifact {
    pub fn new(ring: &RingContext, law: &str, inst: &LawInstance, outcome: &Result<LawOutcome>) -> Self {
        let (lhs, rhs, detail) = match outcome {
            Ok(o) => (o.lhs.clone(), o.rhs.clone(), o.detail.clone()),
            Err(e) => (String::new(), String::new(), Some(format!("error: {e}"))),
        };
        CounterexampleArtifact {
            law: law.to_string(),
            ring: syntax::print_ring(ring),
            inputs: inst.encode(ring),
            lhs,
            rhs,
            detail,
            scope: PrimeScope::default(),
        }
    }

    pub fn with_scope(mut self, scope: PrimeScope) -> Self {
        self.scope = scope;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("artifact serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(e.column(), e.to_string()))
    }

    pub fn instance(&self) -> Result<(RingContext, LawInstance)> {
        let ring = syntax::parse_ring(&self.ring)?;
        let inst = LawInstance::decode(&self.inputs, &ring)?;
        Ok((ring, inst))
    }

    /// Re-evaluate the recorded law on the recorded inputs.
    pub fn replay(&self) -> Result<LawOutcome> {
        let (ring, inst) = self.instance()?;
        inst.evaluate(&self.law, &DepthEngine::new(ring.field()).with_scope(self.scope))
    }
}
