//! Command dispatch. Every command produces one JSON document; the plain
//! text form is derived from it.

use crate::request::{Command, Request, Value};
use pairdepth_core::homology::{self, Certified};
use pairdepth_core::pair::{self, laws, DepthEngine, PairContext, PrimeScope};
use pairdepth_core::sequences::{self, GreedyOutcome};
use pairdepth_core::verify::{self, CensusSpec};
use pairdepth_core::{decomp, syntax, Error, MonomialIdeal, MonomialPrime, Result, RingContext, Subquotient};
use serde_json::{json, Value as Json};

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub scope: PrimeScope,
    pub seed: u64,
    /// Law-evaluation budget for `verify`.
    pub budget: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub doc: Json,
    /// Some checked law failed (`verify`, or a sequence comparison whose
    /// consequence failed).
    pub failures: bool,
}

impl Outcome {
    fn computed(doc: Json) -> Self {
        Outcome { doc, failures: false }
    }
}

fn missing(req: &Request, key: &str) -> Error {
    Error::Parse {
        pos: 0,
        msg: format!("{} needs {key}=...", req.command.name()),
    }
}

fn ideal<'r>(req: &'r Request, key: &str) -> Result<&'r MonomialIdeal> {
    match req.get(key) {
        Some(Value::Ideal(i)) => Ok(i),
        _ => Err(missing(req, key)),
    }
}

fn module(req: &Request) -> Result<&Subquotient> {
    match req.get("M") {
        Some(Value::Module(m)) => Ok(m),
        _ => Err(missing(req, "M")),
    }
}

fn int(req: &Request, key: &str) -> Option<i64> {
    match req.get(key) {
        Some(Value::Int(v)) => Some(*v),
        _ => None,
    }
}

fn names(p: &MonomialPrime, ring: &RingContext) -> Json {
    json!(p.var_names(ring.var_names()))
}

fn prime_list(ps: &[MonomialPrime], ring: &RingContext) -> Json {
    Json::Array(ps.iter().map(|p| names(p, ring)).collect())
}

fn certified(c: &Certified) -> Json {
    let mut doc = json!({ "value": c.value, "witness_degree": c.witness_degree });
    if let Some(w) = &c.warning {
        doc["warning"] = json!(w);
    }
    doc
}

fn context(req: &Request) -> Result<PairContext> {
    PairContext::new(ideal(req, "I")?.clone(), ideal(req, "J")?.clone(), module(req)?.clone())
}

fn as_prime(p: &MonomialIdeal) -> Result<MonomialPrime> {
    let mut vars = Vec::new();
    for g in p.gens() {
        match g.pure_power_var() {
            Some(v) if g.degree() == 1 => vars.push(v),
            _ => return Err(Error::Domain("p must be generated by variables".into())),
        }
    }
    if p.is_unit() {
        return Err(Error::Domain("p must be a proper ideal".into()));
    }
    Ok(MonomialPrime::new(p.nvars(), vars))
}

pub fn execute(req: &Request, opts: &Options) -> Result<Outcome> {
    if req.command == Command::Verify {
        return run_verify(req, opts);
    }
    let ring = req.ring.as_ref().expect("only verify runs without a ring");
    let field = ring.field();
    let engine = DepthEngine::new(field).with_scope(opts.scope);
    let doc = match req.command {
        Command::Depth => {
            let ctx = context(req)?;
            let r = engine.report(&ctx)?;
            let mut doc = json!({
                "depth": r.depth,
                "witness_prime": r.witness_prime.as_ref().map(|p| names(p, ring)),
                "dim_mod_JM": r.dim_mod_jm,
                "is_cm": r.is_cm,
                "w_minimal": prime_list(&r.w.minimal_primes, ring),
                "witness_excess": r.witness_excess,
                "scope": opts.scope,
            });
            if let Some(d) = r.cm_diagnostic {
                doc["diagnostic"] = json!(d);
            }
            doc
        }
        Command::Cm => {
            let ctx = context(req)?;
            let r = engine.cm(&ctx.i, &ctx.j, &ctx.m)?;
            let mut doc = json!({ "depth": r.depth, "dim_mod_JM": r.dim_mod_jm, "is_cm": r.is_cm });
            if let Some(d) = r.diagnostic {
                doc["diagnostic"] = json!(d);
            }
            doc
        }
        Command::Wset => {
            let w = engine.w_set(ideal(req, "I")?, ideal(req, "J")?)?;
            json!({
                "w_minimal": prime_list(&w.minimal_primes, ring),
                "w_all": prime_list(&w.all_member_primes, ring),
            })
        }
        Command::Torsion => {
            let ctx = context(req)?;
            json!({
                "torsion": engine.is_torsion(&ctx.i, &ctx.j, &ctx.m),
                "dim_mod_JM": decomp::dim_module(&ctx.m.quotient_by(&ctx.j)),
                "artinian": pair::artinian_conclusion(&ctx),
            })
        }
        Command::Grade => certified(&homology::grade(ideal(req, "a")?, module(req)?, field)?),
        Command::Depthp => {
            let p = as_prime(ideal(req, "p")?)?;
            certified(&homology::depth_at_prime(&p, module(req)?, field)?)
        }
        Command::Ext => {
            let i = int(req, "i").ok_or_else(|| missing(req, "i"))?;
            let i = usize::try_from(i).map_err(|_| Error::Domain("i must be nonnegative".into()))?;
            let w = homology::ext_nonvanishing(ideal(req, "a")?, module(req)?, i, field)?;
            json!({ "degree": i, "value": w.is_some(), "witness_degree": w })
        }
        Command::Ass => json!({ "associated_primes": prime_list(&decomp::associated_primes(module(req)?), ring) }),
        Command::Decomp => {
            let i = ideal(req, "I")?;
            let comps: Vec<String> = decomp::irreducible_decomposition(i)?
                .iter()
                .map(|c| syntax::print_ideal(&c.to_ideal(), ring))
                .collect();
            json!({ "components": comps, "minimal_primes": prime_list(&decomp::minimal_primes(i), ring) })
        }
        Command::Dim => {
            let m = match (req.get("M"), req.get("I")) {
                (Some(Value::Module(m)), None) => m.clone(),
                (None, Some(Value::Ideal(i))) => Subquotient::quotient_ring(i.clone()),
                _ => {
                    return Err(Error::Parse {
                        pos: 0,
                        msg: "dim needs exactly one of M=... or I=...".into(),
                    })
                }
            };
            json!({ "dim": decomp::dim_module(&m) })
        }
        Command::Regseq => return regseq(req, ring, opts),
        Command::Verify => unreachable!(),
    };
    Ok(Outcome::computed(doc))
}

fn monomials(ms: &[pairdepth_core::Monomial], ring: &RingContext) -> Json {
    json!(ms.iter().map(|m| syntax::print_monomial(m, ring)).collect::<Vec<_>>())
}

fn regularity(r: &sequences::RegularityReport, ring: &RingContext) -> Json {
    json!({
        "verdict": r.verdict,
        "k": r.k,
        "failing_index": r.failing_index,
        "blocking_prime": r.blocking_prime.as_ref().map(|p| names(p, ring)),
        "dim_quotient": r.dim_quotient,
        "reason": r.reason,
    })
}

fn regseq(req: &Request, ring: &RingContext, opts: &Options) -> Result<Outcome> {
    let field = ring.field();
    let m = module(req)?;
    if let Some(len) = int(req, "construct") {
        let a = ideal(req, "a")?;
        let len = usize::try_from(len).map_err(|_| Error::Domain("construct must be nonnegative".into()))?;
        let doc = match sequences::greedy_regular_sequence(a, m, len, field)? {
            GreedyOutcome::Found { sequence } => json!({ "outcome": "found", "sequence": monomials(&sequence, ring) }),
            GreedyOutcome::Failed(f) => json!({
                "outcome": "failed",
                "prefix": monomials(&f.prefix, ring),
                "cover": prime_list(&f.cover, ring),
                "grade": f.grade,
                "reason": f.reason,
            }),
        };
        return Ok(Outcome::computed(doc));
    }
    let seq = match req.get("seq") {
        Some(Value::Seq(s)) => s,
        _ => return Err(missing(req, "seq (or a=... construct=...)")),
    };
    let k = int(req, "k").ok_or_else(|| missing(req, "k"))?;
    if k < -1 {
        return Err(Error::Domain("k must be at least -1".into()));
    }
    if req.get("I").is_some() || req.get("J").is_some() {
        let c = sequences::compare_along_sequence(seq, ideal(req, "I")?, ideal(req, "J")?, m, k, field)?;
        let _ = opts;
        let failed = c.hypothesis_holds && !c.consequence_holds;
        let doc = json!({
            "regularity": regularity(&c.regularity, ring),
            "hypothesis_violators": prime_list(&c.hypothesis_violators, ring),
            "hypothesis_holds": c.hypothesis_holds,
            "depth_I": c.depth_i,
            "depth_a": c.depth_a,
            "len": c.len,
            "consequence_holds": c.consequence_holds,
            "status": c.status,
        });
        return Ok(Outcome { doc, failures: failed });
    }
    let poor = sequences::is_poor_k_regular(seq, m, k);
    let full = sequences::is_k_regular(seq, m, k);
    Ok(Outcome::computed(json!({
        "poor_k_regular": poor.verdict,
        "k_regular": full.verdict,
        "report": regularity(&full, ring),
    })))
}

fn run_verify(req: &Request, opts: &Options) -> Result<Outcome> {
    let mut spec = CensusSpec::exhaustive(2, 2);
    spec.seed = opts.seed;
    spec.scope = opts.scope;
    if let Some(field) = req.ring.as_ref().map(RingContext::field) {
        spec.field = field;
    }
    let size = |key: &str, default: usize| -> Result<usize> {
        match int(req, key) {
            None => Ok(default),
            Some(v) => usize::try_from(v).map_err(|_| Error::Domain(format!("{key} must be nonnegative"))),
        }
    };
    spec.n = size("n", spec.n)?;
    spec.max_exponent = size("exp", spec.max_exponent as usize)? as u32;
    spec.max_generators = size("gens", spec.max_generators)?;
    if let Some(Value::Words(w)) = req.get("modules") {
        spec.include_subquotients = match w.as_slice() {
            [m] if m == "subquotients" => true,
            [m] if m == "quotients" => false,
            _ => return Err(Error::Domain("modules must be subquotients or quotients".into())),
        };
    }
    let wanted: Vec<String> = match req.get("laws") {
        Some(Value::Words(w)) if w.iter().any(|l| l == "all") => all_laws(),
        Some(Value::Words(w)) => w.clone(),
        _ => all_laws(),
    };
    let known = all_laws();
    if let Some(bad) = wanted.iter().find(|l| !known.contains(l)) {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("unknown law {bad:?}; known: {}", known.join(",")),
        });
    }
    let wanted_refs: Vec<&str> = wanted.iter().map(String::as_str).collect();
    let s = verify::run_census_with_budget(&spec, &wanted_refs, opts.budget)?;
    let mut failures = s.failures() > 0;
    let mut doc = json!({
        "census": {
            "n": spec.n,
            "max_exponent": spec.max_exponent,
            "max_generators": spec.max_generators,
            "include_subquotients": spec.include_subquotients,
            "seed": spec.seed,
            "scope": spec.scope,
        },
        "instances": s.instances,
        "evaluations": s.evaluated(),
        "failures": s.failures(),
        "incomplete": s.incomplete,
        "laws": s.tallies,
        "artifacts": s.artifacts,
    });
    let samples = size("samples", 0)?;
    if samples > 0 {
        let grades = verify::grade_path_sample(opts.seed, samples, 3, spec.field)?;
        let seqs = verify::sequence_comparison_sample(opts.seed, samples, samples * 2000, spec.field)?;
        failures |= grades.failures() > 0 || seqs.consequence_failures > 0;
        doc["samples"] = json!({
            "grade_paths": {
                "evaluations": grades.evaluated(),
                "failures": grades.failures(),
                "artifacts": grades.artifacts,
            },
            "sequence_comparison": {
                "attempted": seqs.attempted,
                "hypothesis_passed": seqs.hypothesis_passed,
                "consequence_failures": seqs.consequence_failures,
                "artifacts": seqs.artifacts,
            },
        });
    }
    Ok(Outcome { doc, failures })
}

fn all_laws() -> Vec<String> {
    laws::ALL_LAWS
        .iter()
        .chain(&[verify::REGULAR_ELEMENT_ROUTES, verify::POOR_K_MONOTONE, verify::GREEDY_SEQUENCE_VALID])
        .map(|s| s.to_string())
        .collect()
}

/// Aligned `key  value` lines; nested values are shown as compact JSON.
pub fn plain(doc: &Json) -> String {
    let Json::Object(map) = doc else {
        return format!("{doc}\n");
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in map {
        let shown = match v {
            Json::String(s) => s.clone(),
            Json::Null => "-".into(),
            Json::Array(_) if k.ends_with("_prime") => scalar_or_list(v),
            Json::Array(items) if items.iter().all(|i| !i.is_object()) => {
                let parts: Vec<String> = items.iter().map(scalar_or_list).collect();
                parts.join(" ")
            }
            other => other.to_string(),
        };
        out.push_str(&format!("{k:<width$}  {shown}\n"));
    }
    out
}

fn scalar_or_list(v: &Json) -> String {
    match v {
        Json::String(s) => s.clone(),
        Json::Array(items) if items.is_empty() => "(0)".into(),
        Json::Array(items) => format!("({})", items.iter().map(scalar_or_list).collect::<Vec<_>>().join(",")),
        other => other.to_string(),
    }
}
