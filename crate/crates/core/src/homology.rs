//! Multigraded Koszul and Taylor cochain complexes with coefficients in a
//! monomial subquotient, and nonvanishing of their cohomology.
//!
//! Both complexes are indexed by subsets `S` of an ordered list of monomial
//! generators `m_1, ..., m_r`. Position `p` holds one summand per `S` with
//! `|S| = p`, carrying a shift `s_S ∈ N^n`:
//!
//! * Koszul: `s_S = Σ_{j∈S} deg m_j`, giving `Hom(K(m), M)`, whose `p`-th
//!   cohomology is `H_{r-p}(m; M)`;
//! * Taylor: `s_S = deg lcm(m_j : j ∈ S)`, giving `Hom(T(a), M)`, whose
//!   `p`-th cohomology is `Ext^p(R/a, M)`.
//!
//! The differential sends `e_S` to `e_{S∪{j}}` with sign `(-1)^{#{i∈S : i<j}}`
//! and multiplier `x^{s_{S∪j} - s_S}`. In multidegree `b ∈ Z^n` the summand
//! for `S` contributes `M_{b+s_S}`, which is `k` when `x^{b+s_S} ∈ A \ B` and
//! zero otherwise; this is the strand at `b`.
//!
//! Every membership test saturates once `b_i + s_i ≥ E_i` for all shifts,
//! where `E_i` bounds the exponents of `x_i` in `A` and `B`, and every
//! strand vanishes once `b_i + s_i < 0` for all shifts. So a finite
//! [`DegreeBox`] decides nonvanishing of the whole graded cohomology.

use crate::decomp::{support_contains, MonomialPrime};
use crate::depth::ExtendedDepth;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg;
use crate::module::Subquotient;
use crate::monomial::{as_monomial, Monomial, Multidegree};
use crate::ring::Field;
use rayon::prelude::*;
use serde::Serialize;

/// Largest generator count accepted by a template (it has `2^r` summands).
pub const MAX_TEMPLATE_GENERATORS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TemplateKind {
    Koszul,
    Taylor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub shift: Multidegree,
    /// Subset of generator indices, as a bitmask.
    pub label: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferentialEntry {
    pub source: usize,
    pub target: usize,
    pub sign: i8,
    pub monomial: Monomial,
}

/// A complex of free multigraded modules with signed monomial differentials.
#[derive(Debug, Clone)]
pub struct ComplexTemplate {
    kind: TemplateKind,
    nvars: usize,
    generators: Vec<Monomial>,
    positions: Vec<Vec<Summand>>,
    /// `differentials[p]` maps position `p` to position `p + 1`.
    differentials: Vec<Vec<DifferentialEntry>>,
}

impl ComplexTemplate {
    pub fn koszul(nvars: usize, gens: &[Monomial]) -> Result<Self> {
        Self::build(TemplateKind::Koszul, nvars, gens)
    }

    pub fn taylor(nvars: usize, gens: &[Monomial]) -> Result<Self> {
        Self::build(TemplateKind::Taylor, nvars, gens)
    }

    fn build(kind: TemplateKind, nvars: usize, gens: &[Monomial]) -> Result<Self> {
        let r = gens.len();
        if r > MAX_TEMPLATE_GENERATORS {
            return Err(Error::Domain(format!(
                "{r} generators exceed the template limit of {MAX_TEMPLATE_GENERATORS}"
            )));
        }
        let shift_of = |mask: u64| -> Monomial {
            let mut acc = Monomial::one(nvars);
            for (j, g) in gens.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    acc = match kind {
                        TemplateKind::Koszul => acc.mul(g),
                        TemplateKind::Taylor => acc.lcm(g),
                    };
                }
            }
            acc
        };
        let mut positions: Vec<Vec<Summand>> = vec![Vec::new(); r + 1];
        let mut index_of = vec![0usize; 1 << r];
        let mut shifts = Vec::with_capacity(1 << r);
        for mask in 0..(1u64 << r) {
            let p = mask.count_ones() as usize;
            let shift = shift_of(mask);
            index_of[mask as usize] = positions[p].len();
            positions[p].push(Summand {
                shift: shift.to_multidegree(),
                label: mask,
            });
            shifts.push(shift);
        }
        let mut differentials = vec![Vec::new(); r];
        for (p, summands) in positions.iter().enumerate().take(r) {
            for (source, summand) in summands.iter().enumerate() {
                let s = summand.label;
                for j in 0..r {
                    if s >> j & 1 == 1 {
                        continue;
                    }
                    let t = s | 1 << j;
                    let below = (s & ((1u64 << j) - 1)).count_ones();
                    differentials[p].push(DifferentialEntry {
                        source,
                        target: index_of[t as usize],
                        sign: if below.is_multiple_of(2) { 1 } else { -1 },
                        monomial: shifts[t as usize].quotient_clamped(&shifts[s as usize]),
                    });
                }
            }
        }
        Ok(ComplexTemplate {
            kind,
            nvars,
            generators: gens.to_vec(),
            positions,
            differentials,
        })
    }

    /// Koszul complex on the minimal generators of `a`.
    pub fn koszul_of(a: &MonomialIdeal) -> Result<Self> {
        Self::koszul(a.nvars(), a.gens())
    }

    /// Taylor resolution of `R/a` on the minimal generators of `a`.
    pub fn taylor_of(a: &MonomialIdeal) -> Result<Self> {
        Self::taylor(a.nvars(), a.gens())
    }

    pub fn kind(&self) -> TemplateKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// Number of generators `r`; positions run over `0..=r`.
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn positions(&self) -> &[Vec<Summand>] {
        &self.positions
    }

    pub fn differentials(&self) -> &[Vec<DifferentialEntry>] {
        &self.differentials
    }

    /// Formal check that `d^{p+1} ∘ d^p = 0` as signed-monomial matrices:
    /// every two-step path between the same summands carries the same
    /// monomial, and the signs cancel.
    pub fn composes_to_zero(&self) -> bool {
        for p in 0..self.differentials.len().saturating_sub(1) {
            let mut acc: std::collections::BTreeMap<(usize, usize), (i64, Option<Monomial>)> =
                Default::default();
            for first in &self.differentials[p] {
                for second in self.differentials[p + 1]
                    .iter()
                    .filter(|e| e.source == first.target)
                {
                    let mono = first.monomial.mul(&second.monomial);
                    let slot = acc.entry((first.source, second.target)).or_insert((0, None));
                    match &slot.1 {
                        Some(prev) if *prev != mono => return false,
                        _ => slot.1 = Some(mono),
                    }
                    slot.0 += first.sign as i64 * second.sign as i64;
                }
            }
            if acc.values().any(|(sum, _)| *sum != 0) {
                return false;
            }
        }
        true
    }
}

/// Finite box `lo_i ≤ b_i ≤ hi_i` of multidegrees deciding nonvanishing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeBox {
    pub lo: Multidegree,
    pub hi: Multidegree,
}

impl DegreeBox {
    /// `lo_i = -max shift_i - 1` (strands at and below are zero) and
    /// `hi_i = E_i - min shift_i` (strands at and above are saturated).
    pub fn new(template: &ComplexTemplate, module: &Subquotient) -> Self {
        let n = template.nvars;
        let bounds = module.exponent_bounds();
        let mut max_shift = vec![i64::MIN; n];
        let mut min_shift = vec![i64::MAX; n];
        for summand in template.positions.iter().flatten() {
            for i in 0..n {
                max_shift[i] = max_shift[i].max(summand.shift[i]);
                min_shift[i] = min_shift[i].min(summand.shift[i]);
            }
        }
        DegreeBox {
            lo: max_shift.iter().map(|&s| -s - 1).collect(),
            hi: (0..n).map(|i| bounds[i] as i64 - min_shift[i]).collect(),
        }
    }

    pub fn contains(&self, b: &[i64]) -> bool {
        b.iter()
            .zip(self.lo.iter().zip(&self.hi))
            .all(|(v, (lo, hi))| lo <= v && v <= hi)
    }

    pub fn clamp(&self, b: &[i64]) -> Multidegree {
        b.iter()
            .zip(self.lo.iter().zip(&self.hi))
            .map(|(v, (lo, hi))| (*v).clamp(*lo, *hi))
            .collect()
    }

    pub fn size(&self) -> usize {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(lo, hi)| (hi - lo + 1) as usize)
            .product()
    }

    /// The `k`-th point in scan order (first coordinate fastest).
    pub fn point(&self, mut k: usize) -> Multidegree {
        let mut b = Vec::with_capacity(self.lo.len());
        for (lo, hi) in self.lo.iter().zip(&self.hi) {
            let width = (hi - lo + 1) as usize;
            b.push(lo + (k % width) as i64);
            k /= width;
        }
        b
    }
}

/// The strand of a template at one multidegree: finite-dimensional vector
/// spaces with `{0, ±1}` matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandComplex {
    /// For each position, the template summand indices that are present.
    pub basis: Vec<Vec<usize>>,
    /// `matrices[p]` has `basis[p+1].len()` rows and `basis[p].len()` columns.
    pub matrices: Vec<Vec<Vec<i64>>>,
}

impl StrandComplex {
    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.iter().all(Vec::is_empty)
    }

    /// Whether consecutive matrices compose to zero.
    pub fn is_complex(&self) -> bool {
        self.matrices.windows(2).all(|w| {
            let (d0, d1) = (&w[0], &w[1]);
            d1.iter().all(|row| {
                (0..d0.first().map_or(0, Vec::len)).all(|col| {
                    row.iter()
                        .zip(d0.iter())
                        .map(|(a, r0)| a * r0[col])
                        .sum::<i64>()
                        == 0
                })
            })
        })
    }
}

pub fn strand(template: &ComplexTemplate, module: &Subquotient, b: &[i64]) -> StrandComplex {
    let present: Vec<Vec<Option<usize>>> = template
        .positions
        .iter()
        .map(|summands| {
            let mut next = 0;
            summands
                .iter()
                .map(|s| {
                    let c: Multidegree = b.iter().zip(&s.shift).map(|(x, y)| x + y).collect();
                    let here = as_monomial(&c).is_some_and(|m| module.has_basis_monomial(&m));
                    here.then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        })
        .collect();
    let basis: Vec<Vec<usize>> = present
        .iter()
        .map(|col| {
            col.iter()
                .enumerate()
                .filter_map(|(i, slot)| slot.map(|_| i))
                .collect()
        })
        .collect();
    let matrices = template
        .differentials
        .iter()
        .enumerate()
        .map(|(p, entries)| {
            let mut mat = vec![vec![0i64; basis[p].len()]; basis[p + 1].len()];
            for e in entries {
                if let (Some(col), Some(row)) = (present[p][e.source], present[p + 1][e.target]) {
                    mat[row][col] = e.sign as i64;
                }
            }
            mat
        })
        .collect();
    StrandComplex { basis, matrices }
}

/// `dim H^p = dim C^p - rank d^p - rank d^{p-1}`.
pub fn homology_dims(strand: &StrandComplex, field: Field) -> Vec<usize> {
    let ranks: Vec<usize> = strand
        .matrices
        .iter()
        .map(|m| linalg::rank(m, field))
        .collect();
    strand
        .basis
        .iter()
        .enumerate()
        .map(|(p, basis)| {
            let out = ranks.get(p).copied().unwrap_or(0);
            let inc = if p > 0 { ranks[p - 1] } else { 0 };
            basis.len() - out - inc
        })
        .collect()
}

/// For each position, a witness multidegree where the cohomology is
/// nonzero, or `None` if it vanishes in every degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonvanishingProfile {
    pub witnesses: Vec<Option<Multidegree>>,
}

impl NonvanishingProfile {
    pub fn nonzero_positions(&self) -> Vec<usize> {
        self.witnesses
            .iter()
            .enumerate()
            .filter(|(_, w)| w.is_some())
            .map(|(p, _)| p)
            .collect()
    }

    pub fn first_nonzero(&self) -> Option<(usize, &Multidegree)> {
        self.witnesses
            .iter()
            .enumerate()
            .find_map(|(p, w)| w.as_ref().map(|w| (p, w)))
    }

    pub fn is_nonzero(&self, p: usize) -> bool {
        self.witnesses.get(p).is_some_and(Option::is_some)
    }
}

/// Scan the whole degree box. The witness for each position is the first
/// nonvanishing degree in scan order, independent of thread scheduling.
pub fn nonvanishing_profile(
    template: &ComplexTemplate,
    module: &Subquotient,
    field: Field,
) -> NonvanishingProfile {
    let positions = template.len() + 1;
    if module.is_zero() {
        return NonvanishingProfile {
            witnesses: vec![None; positions],
        };
    }
    let bx = DegreeBox::new(template, module);
    let per_degree: Vec<Option<Vec<usize>>> = (0..bx.size())
        .into_par_iter()
        .map(|k| {
            let s = strand(template, module, &bx.point(k));
            if s.is_zero() {
                None
            } else {
                Some(homology_dims(&s, field))
            }
        })
        .collect();
    let mut witnesses = vec![None; positions];
    for (k, dims) in per_degree.iter().enumerate() {
        let Some(dims) = dims else { continue };
        for (p, &d) in dims.iter().enumerate() {
            if d > 0 && witnesses[p].is_none() {
                witnesses[p] = Some(bx.point(k));
            }
        }
    }
    NonvanishingProfile { witnesses }
}

/// A depth-like value with the multidegree certifying its nonvanishing
/// cohomology.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certified {
    pub value: ExtendedDepth,
    pub witness_degree: Option<Multidegree>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

impl Certified {
    fn infinite(warning: Option<String>) -> Self {
        Certified {
            value: ExtendedDepth::Infinite,
            witness_degree: None,
            warning,
        }
    }
}

fn first_nonvanishing(profile: &NonvanishingProfile, what: &str) -> Result<Certified> {
    match profile.first_nonzero() {
        Some((p, w)) => Ok(Certified {
            value: ExtendedDepth::Finite(p),
            witness_degree: Some(w.clone()),
            warning: None,
        }),
        None => Err(Error::Domain(format!(
            "{what} vanishes in every degree for a nonzero graded module and a proper ideal"
        ))),
    }
}

/// `grade(a, M)` as the Koszul codepth: the least `p` with
/// `H^p(Hom(K(a), M)) ≠ 0`, i.e. `r - max{i : H_i(a; M) ≠ 0}`.
pub fn grade(a: &MonomialIdeal, module: &Subquotient, field: Field) -> Result<Certified> {
    if module.is_zero() {
        return Ok(Certified::infinite(None));
    }
    if a.is_unit() {
        return Ok(Certified::infinite(Some(
            "grade of the unit ideal is infinite by convention".into(),
        )));
    }
    let t = ComplexTemplate::koszul_of(a)?;
    first_nonvanishing(&nonvanishing_profile(&t, module, field), "Koszul cohomology")
}

/// Nonvanishing of `Ext^p(R/a, M)` for every `p`, from the Taylor resolution.
pub fn ext_profile(a: &MonomialIdeal, module: &Subquotient, field: Field) -> Result<NonvanishingProfile> {
    if a.is_unit() {
        return Err(Error::Precondition("Ext(R/a, -) requires a proper ideal a".into()));
    }
    let t = ComplexTemplate::taylor_of(a)?;
    Ok(nonvanishing_profile(&t, module, field))
}

/// Witness degree if `Ext^i(R/a, M) ≠ 0`.
pub fn ext_nonvanishing(
    a: &MonomialIdeal,
    module: &Subquotient,
    i: usize,
    field: Field,
) -> Result<Option<Multidegree>> {
    let profile = ext_profile(a, module, field)?;
    Ok(profile.witnesses.get(i).cloned().flatten())
}

/// `grade(a, M)` as the least `p` with `Ext^p(R/a, M) ≠ 0`.
pub fn grade_via_ext(a: &MonomialIdeal, module: &Subquotient, field: Field) -> Result<Certified> {
    if module.is_zero() {
        return Ok(Certified::infinite(None));
    }
    if a.is_unit() {
        return Ok(Certified::infinite(Some(
            "grade of the unit ideal is infinite by convention".into(),
        )));
    }
    first_nonvanishing(&ext_profile(a, module, field)?, "Ext(R/a, M)")
}

/// `depth(M_p)` for `p = p_S`: infinite off the support, otherwise the
/// Koszul codepth of `x_S` on the module with the variables outside `S` set
/// to 1. The witness degree is lifted back to `n` coordinates (zero outside
/// `S`).
pub fn depth_at_prime(p: &MonomialPrime, module: &Subquotient, field: Field) -> Result<Certified> {
    if !support_contains(p, module) {
        return Ok(Certified::infinite(None));
    }
    let vars = p.vars();
    let local = module.restrict(vars);
    let maximal = MonomialIdeal::maximal(vars.len());
    let t = ComplexTemplate::koszul_of(&maximal)?;
    let mut c = first_nonvanishing(&nonvanishing_profile(&t, &local, field), "local Koszul cohomology")?;
    if let Some(w) = c.witness_degree.take() {
        let mut full = vec![0; module.nvars()];
        for (&v, e) in vars.iter().zip(w) {
            full[v] = e;
        }
        c.witness_degree = Some(full);
    }
    Ok(c)
}

/// `grade(a, M)` as `min{ depth(M_q) : q ⊇ a monomial prime }`.
pub fn grade_via_localization(
    a: &MonomialIdeal,
    module: &Subquotient,
    field: Field,
) -> Result<ExtendedDepth> {
    let mut best = ExtendedDepth::Infinite;
    for q in MonomialPrime::all(a.nvars()).filter(|q| q.contains_ideal(a)) {
        best = best.min(depth_at_prime(&q, module, field)?.value);
    }
    Ok(best)
}
