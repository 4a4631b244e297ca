//! Regular, poor k-regular and k-regular sequences of monomials on a
//! subquotient, greedy construction of regular sequences inside an ideal,
//! and the comparison of pair depths along a k-regular sequence.

use crate::decomp::{self, MonomialPrime};
use crate::depth::{ExtendedDepth, KrullDim};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::module::Subquotient;
use crate::monomial::Monomial;
use crate::pair::{self, DepthEngine};
use crate::ring::Field;
use serde::Serialize;

/// `m` is a nonzerodivisor on `M = A/B`, via `(B : m) ∩ A ⊆ B`.
pub fn is_regular_element(m: &Monomial, module: &Subquotient) -> Result<bool> {
    check_not_unit(m)?;
    let colon = module.bottom().colon_monomial(m);
    Ok(colon.intersect(module.top()).is_subset_of(module.bottom()))
}

/// Same as [`is_regular_element`], via avoidance of every associated prime.
pub fn is_regular_element_via_ass(m: &Monomial, module: &Subquotient) -> Result<bool> {
    check_not_unit(m)?;
    Ok(decomp::associated_primes(module)
        .iter()
        .all(|p| !p.contains_monomial(m)))
}

fn check_not_unit(m: &Monomial) -> Result<()> {
    if m.is_one() {
        return Err(Error::Precondition("the unit monomial is not a sequence element".into()));
    }
    Ok(())
}

/// `M / (a_1, …, a_i) M`.
fn quotient_by_prefix(module: &Subquotient, prefix: &[Monomial]) -> Subquotient {
    if prefix.is_empty() {
        return module.clone();
    }
    module.quotient_by(&MonomialIdeal::new(module.nvars(), prefix.iter().cloned()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub verdict: bool,
    pub k: i64,
    /// Index of the first element lying in a blocking prime.
    pub failing_index: Option<usize>,
    pub blocking_prime: Option<MonomialPrime>,
    /// `dim M/(a)M`, filled in by the k-regular test.
    pub dim_quotient: Option<KrullDim>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Each `a_i` avoids every associated prime `p` of `M/(a_1..a_{i-1})M`
/// with `dim R/p > k`.
pub fn is_poor_k_regular(seq: &[Monomial], module: &Subquotient, k: i64) -> RegularityReport {
    for (idx, a) in seq.iter().enumerate() {
        let current = quotient_by_prefix(module, &seq[..idx]);
        let blocking = decomp::associated_primes(&current)
            .into_iter()
            .find(|p| p.dim_quotient() as i64 > k && p.contains_monomial(a));
        if let Some(p) = blocking {
            return RegularityReport {
                verdict: false,
                k,
                failing_index: Some(idx),
                blocking_prime: Some(p),
                dim_quotient: None,
                reason: Some("element lies in an associated prime of dimension > k".into()),
            };
        }
    }
    RegularityReport {
        verdict: true,
        k,
        failing_index: None,
        blocking_prime: None,
        dim_quotient: None,
        reason: None,
    }
}

/// Poor k-regular and `dim M/(a)M > k`.
pub fn is_k_regular(seq: &[Monomial], module: &Subquotient, k: i64) -> RegularityReport {
    let mut report = is_poor_k_regular(seq, module, k);
    let dim = decomp::dim_module(&quotient_by_prefix(module, seq));
    report.dim_quotient = Some(dim);
    if report.verdict && dim.as_i64() <= k {
        report.verdict = false;
        report.reason = Some(format!("dim M/(a)M = {dim} is not > {k}"));
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum GreedyOutcome {
    Found { sequence: Vec<Monomial> },
    Failed(GreedyFailure),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreedyFailure {
    /// Sequence built before getting stuck.
    pub prefix: Vec<Monomial>,
    /// Associated primes of the current quotient whose union contains every
    /// generator of `a` (empty when the search was refused up front).
    pub cover: Vec<MonomialPrime>,
    pub grade: ExtendedDepth,
    pub reason: String,
}

/// Monomials of `a` with total degree `1..=max_degree`, by degree and then
/// lexicographically with `x_1` largest first.
fn candidates(a: &MonomialIdeal, max_degree: u32) -> Vec<Monomial> {
    let n = a.nvars();
    let mut out = Vec::new();
    for d in 1..=max_degree {
        let mut of_degree = Vec::new();
        compositions(n, d, &mut vec![0; n], 0, &mut of_degree);
        of_degree.sort_by(|x: &Monomial, y| y.cmp(x));
        out.extend(of_degree.into_iter().filter(|m| a.member(m)));
    }
    out
}

fn compositions(n: usize, left: u32, cur: &mut Vec<u32>, at: usize, out: &mut Vec<Monomial>) {
    if at + 1 >= n {
        if n > 0 {
            cur[n - 1] = left;
            out.push(Monomial::new(cur.clone()));
        }
        return;
    }
    for e in 0..=left {
        cur[at] = e;
        compositions(n, left - e, cur, at + 1, out);
    }
    cur[at] = 0;
}

/// Greedily pick, `target_len` times, the first candidate monomial of `a`
/// that avoids every associated prime of the current quotient.
pub fn greedy_regular_sequence(
    a: &MonomialIdeal,
    module: &Subquotient,
    target_len: usize,
    field: Field,
) -> Result<GreedyOutcome> {
    if !a.is_proper() || a.is_zero() {
        return Err(Error::Precondition("a must be a proper nonzero ideal".into()));
    }
    let grade = DepthEngine::new(field).grade(a, module)?;
    if ExtendedDepth::Finite(target_len) > grade {
        return Ok(GreedyOutcome::Failed(GreedyFailure {
            prefix: Vec::new(),
            cover: Vec::new(),
            grade,
            reason: format!("target length {target_len} exceeds grade(a, M) = {grade}"),
        }));
    }
    let pool = candidates(a, 1 + a.max_generator_degree() as u32);
    let mut seq: Vec<Monomial> = Vec::new();
    while seq.len() < target_len {
        let current = quotient_by_prefix(module, &seq);
        let ass = decomp::associated_primes(&current);
        match pool.iter().find(|m| ass.iter().all(|p| !p.contains_monomial(m))) {
            Some(m) => seq.push(m.clone()),
            None => {
                let cover = ass
                    .into_iter()
                    .filter(|p| a.gens().iter().any(|g| p.contains_monomial(g)))
                    .collect();
                return Ok(GreedyOutcome::Failed(GreedyFailure {
                    prefix: seq,
                    cover,
                    grade,
                    reason: "every monomial of a lies in an associated prime of the quotient".into(),
                }));
            }
        }
    }
    Ok(GreedyOutcome::Found { sequence: seq })
}

/// Comparison of `depth(I,J,M)` with `depth((a),J,M)` for a k-regular
/// sequence `a` in `I`. Checks over monomial primes only, hence the status
/// is "monomial-verified".
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceComparison {
    pub regularity: RegularityReport,
    /// Monomial primes `p` with `dim R/p ≤ k`, `p ∈ Supp(M)`,
    /// `p ∈ W((a),J)` and `p ∉ W(I,J)`; the hypothesis asks for none.
    pub hypothesis_violators: Vec<MonomialPrime>,
    pub hypothesis_holds: bool,
    pub depth_i: ExtendedDepth,
    pub depth_a: ExtendedDepth,
    pub len: usize,
    /// `min(depth(I,J,M), len) = min(depth((a),J,M), len)`.
    pub consequence_holds: bool,
    pub status: &'static str,
}

pub fn compare_along_sequence(
    seq: &[Monomial],
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    module: &Subquotient,
    k: i64,
    field: Field,
) -> Result<SequenceComparison> {
    if seq.is_empty() {
        return Err(Error::Precondition("the sequence must be nonempty".into()));
    }
    if let Some(bad) = seq.iter().find(|m| !i.member(m)) {
        return Err(Error::Precondition(format!(
            "sequence element {:?} is not in I",
            bad.exps()
        )));
    }
    let regularity = is_k_regular(seq, module, k);
    let a = MonomialIdeal::new(i.nvars(), seq.iter().cloned());
    let hypothesis_violators: Vec<MonomialPrime> = MonomialPrime::all(i.nvars())
        .filter(|p| p.dim_quotient() as i64 <= k)
        .filter(|p| decomp::support_contains(p, module))
        .filter(|p| pair::w_member(p, &a, j) && !pair::w_member(p, i, j))
        .collect();
    let engine = DepthEngine::new(field);
    let depth_i = engine.depth(i, j, module)?;
    let depth_a = engine.depth(&a, j, module)?;
    let len = seq.len();
    let cap = ExtendedDepth::Finite(len);
    Ok(SequenceComparison {
        hypothesis_holds: regularity.verdict && hypothesis_violators.is_empty(),
        regularity,
        hypothesis_violators,
        depth_i,
        depth_a,
        len,
        consequence_holds: depth_i.min(cap) == depth_a.min(cap),
        status: "monomial-verified",
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(gens[0].len(), gens.iter().map(|g| mono(g)))
    }

    fn quotient(gens: &[&[u32]]) -> Subquotient {
        Subquotient::quotient_ring(ideal(gens))
    }

    #[test]
    fn regular_elements() {
        let x = mono(&[1, 0]);
        let both = |m: &Monomial, module: &Subquotient| {
            let a = is_regular_element(m, module).unwrap();
            assert_eq!(a, is_regular_element_via_ass(m, module).unwrap());
            a
        };
        assert!(!both(&x, &quotient(&[&[1, 1]])));
        assert!(both(&x, &Subquotient::ring(2)));
        assert!(!both(&mono(&[0, 2]), &quotient(&[&[2, 0], &[1, 1]])));
        assert!(both(&x, &Subquotient::zero(2)));
        assert!(is_regular_element(&Monomial::one(2), &Subquotient::ring(2)).is_err());
    }

    #[test]
    fn poor_and_k_regular() {
        let x = mono(&[1, 0]);
        let y = mono(&[0, 1]);
        let m = quotient(&[&[1, 1]]);
        assert!(is_poor_k_regular(&[x.clone()], &m, 1).verdict);
        let r = is_poor_k_regular(&[x.clone()], &m, 0);
        assert!(!r.verdict);
        assert_eq!(r.failing_index, Some(0));
        assert_eq!(r.blocking_prime, Some(MonomialPrime::new(2, vec![0])));
        let r = Subquotient::ring(2);
        assert!(is_poor_k_regular(&[x.clone(), y.clone()], &r, -1).verdict);

        assert!(!is_k_regular(&[x.clone()], &m, 1).verdict);
        assert!(is_k_regular(&[x.clone()], &r, 0).verdict);
        assert!(is_k_regular(&[x, y], &r, -1).verdict);
    }

    #[test]
    fn greedy_construction() {
        let m2 = MonomialIdeal::maximal(2);
        let out = greedy_regular_sequence(&m2, &Subquotient::ring(2), 2, Field::Rationals).unwrap();
        assert_eq!(out, GreedyOutcome::Found { sequence: vec![mono(&[1, 0]), mono(&[0, 1])] });
        let out = greedy_regular_sequence(&m2, &quotient(&[&[1, 1]]), 1, Field::Rationals).unwrap();
        match out {
            GreedyOutcome::Failed(f) => {
                assert_eq!(
                    f.cover,
                    vec![MonomialPrime::new(2, vec![0]), MonomialPrime::new(2, vec![1])]
                );
                assert_eq!(f.grade, 1.into());
            }
            other => panic!("{other:?}"),
        }
        let out = greedy_regular_sequence(&ideal(&[&[1, 0]]), &Subquotient::ring(2), 1, Field::Rationals).unwrap();
        assert_eq!(out, GreedyOutcome::Found { sequence: vec![mono(&[1, 0])] });
        let out = greedy_regular_sequence(&ideal(&[&[1, 0]]), &Subquotient::ring(2), 2, Field::Rationals).unwrap();
        assert!(matches!(out, GreedyOutcome::Failed(f) if f.prefix.is_empty()));
    }

    #[test]
    fn candidate_order() {
        let c = candidates(&MonomialIdeal::maximal(2), 2);
        let exps: Vec<&[u32]> = c.iter().map(|m| m.exps()).collect();
        assert_eq!(exps, vec![&[1, 0][..], &[0, 1], &[2, 0], &[1, 1], &[0, 2]]);
    }

    #[test]
    fn comparison_examples() {
        let x = mono(&[1, 0]);
        let r = Subquotient::ring(2);
        let m2 = MonomialIdeal::maximal(2);
        let c = compare_along_sequence(&[x.clone()], &m2, &ideal(&[&[0, 1]]), &r, -1, Field::Rationals).unwrap();
        assert!(c.hypothesis_holds && c.consequence_holds);
        assert_eq!((c.depth_i, c.depth_a), (1.into(), 1.into()));

        let c = compare_along_sequence(&[x.clone()], &ideal(&[&[1, 0]]), &MonomialIdeal::zero(2), &r, -1, Field::Rationals).unwrap();
        assert!(c.hypothesis_holds && c.consequence_holds);

        let c = compare_along_sequence(&[x.clone()], &m2, &MonomialIdeal::zero(2), &r, 0, Field::Rationals).unwrap();
        assert!(c.hypothesis_violators.is_empty());
        assert!(c.consequence_holds);

        assert!(compare_along_sequence(&[mono(&[0, 1])], &ideal(&[&[1, 0]]), &m2, &r, -1, Field::Rationals).is_err());
    }

    #[test]
    fn comparison_fails_when_second_ideal_swallows_the_sequence() {
        // W((x),(x)) contains (0) but W((x,y),(x)) does not; with k = -1 the
        // hypothesis set is empty yet depth((x),(x),R) = 0 < 1 = depth((x,y),(x),R).
        let x = mono(&[1, 0]);
        let c = compare_along_sequence(
            &[x],
            &MonomialIdeal::maximal(2),
            &ideal(&[&[1, 0]]),
            &Subquotient::ring(2),
            -1,
            Field::Rationals,
        )
        .unwrap();
        assert!(c.hypothesis_holds);
        assert_eq!((c.depth_i, c.depth_a), (1.into(), 0.into()));
        assert!(!c.consequence_holds);
    }
}
