//! Brute-force membership oracle for the ideal operations.
//!
//! Each operation's output is compared against its defining set
//! comprehension on every monomial of the grid `[0, cap]^n`. The oracle
//! only uses "some generator divides" for membership in an input ideal.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GridOp {
    Sum,
    Product,
    Power(u32),
    Intersect,
    Colon,
    ColonMonomial,
    Radical,
}

impl GridOp {
    pub fn name(self) -> String {
        match self {
            GridOp::Sum => "sum".into(),
            GridOp::Product => "product".into(),
            GridOp::Power(k) => format!("power{k}"),
            GridOp::Intersect => "intersect".into(),
            GridOp::Colon => "colon".into(),
            GridOp::ColonMonomial => "colon_monomial".into(),
            GridOp::Radical => "radical".into(),
        }
    }

    fn binary(self) -> bool {
        !matches!(self, GridOp::Power(_) | GridOp::Radical)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridReport {
    pub op: String,
    pub cells: usize,
    /// Grid monomials on which the implementation and the oracle disagree.
    pub mismatches: Vec<Monomial>,
}

impl GridReport {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn in_ideal(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(m))
}

fn grid(n: usize, cap: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    crate::decomp::for_each_in_box(&vec![cap; n], |b| out.push(Monomial::new(b.to_vec())));
    out
}

fn below(m: &Monomial) -> Vec<Monomial> {
    let mut out = Vec::new();
    crate::decomp::for_each_in_box(m.exps(), |b| out.push(Monomial::new(b.to_vec())));
    out
}

fn minus(m: &Monomial, f: &Monomial) -> Monomial {
    Monomial::new(m.exps().iter().zip(f.exps()).map(|(a, b)| a - b).collect())
}

/// `m` is a product of `k` elements of the ideal generated by `gens`.
fn in_power(gens: &[Monomial], k: u32, m: &Monomial) -> bool {
    if k == 0 {
        return true;
    }
    below(m)
        .iter()
        .any(|f| in_ideal(gens, f) && in_power(gens, k - 1, &minus(m, f)))
}

/// Compare the implementation of `op` on `a` (and `b` for binary
/// operations; for the monomial colon, `b` must be principal) with the
/// defining set comprehension on the grid `[0, cap]^n`.
pub fn grid_oracle(op: GridOp, a: &MonomialIdeal, b: Option<&MonomialIdeal>, cap: u32) -> Result<GridReport> {
    let n = a.nvars();
    let max_in = a
        .exponent_bounds()
        .into_iter()
        .chain(b.map(|b| b.exponent_bounds()).unwrap_or_default())
        .max()
        .unwrap_or(0);
    if cap < max_in + 1 {
        return Err(Error::Precondition(format!(
            "grid cap {cap} must exceed the largest input exponent {max_in}"
        )));
    }
    if op.binary() && b.is_none() {
        return Err(Error::Precondition(format!("{} needs two ideals", op.name())));
    }
    let cells = grid(n, cap);
    let ga = a.gens();
    let gb = b.map(|b| b.gens()).unwrap_or(&[]);
    let (fast, oracle): (MonomialIdeal, Box<dyn Fn(&Monomial) -> bool>) = match op {
        GridOp::Sum => (
            a.sum(b.unwrap()),
            Box::new(|m| in_ideal(ga, m) || in_ideal(gb, m)),
        ),
        GridOp::Product => (
            a.product(b.unwrap()),
            Box::new(|m| below(m).iter().any(|f| in_ideal(ga, f) && in_ideal(gb, &minus(m, f)))),
        ),
        GridOp::Power(k) => (a.power(k), Box::new(move |m| in_power(ga, k, m))),
        GridOp::Intersect => (
            a.intersect(b.unwrap()),
            Box::new(|m| in_ideal(ga, m) && in_ideal(gb, m)),
        ),
        GridOp::Colon => {
            let cells = cells.clone();
            (
                a.colon(b.unwrap()),
                Box::new(move |m| {
                    cells
                        .iter()
                        .filter(|f| in_ideal(gb, f))
                        .all(|f| in_ideal(ga, &m.mul(f)))
                }),
            )
        }
        GridOp::ColonMonomial => {
            let [u] = gb else {
                return Err(Error::Precondition("the monomial colon needs a principal ideal".into()));
            };
            let u = u.clone();
            (a.colon_monomial(&u), Box::new(move |m| in_ideal(ga, &m.mul(&u))))
        }
        GridOp::Radical => (
            a.radical(),
            Box::new(move |m| (1..=cap + 1).any(|p| in_ideal(ga, &m.pow(p)))),
        ),
    };
    let mismatches = cells
        .iter()
        .filter(|m| fast.member(m) != oracle(m))
        .cloned()
        .collect();
    Ok(GridReport {
        op: op.name(),
        cells: cells.len(),
        mismatches,
    })
}

/// Run every operation over all (pairs of) `ideals`; returns the number of
/// checks and every disagreeing report.
pub fn full_grid_check(ideals: &[MonomialIdeal], cap: u32) -> Result<(usize, Vec<GridReport>)> {
    let mut checks = 0;
    let mut bad = Vec::new();
    let mut push = |r: GridReport| {
        checks += 1;
        if !r.agrees() {
            bad.push(r);
        }
    };
    for a in ideals {
        for k in 0..=3 {
            push(grid_oracle(GridOp::Power(k), a, None, cap)?);
        }
        push(grid_oracle(GridOp::Radical, a, None, cap)?);
        for b in ideals {
            for op in [GridOp::Sum, GridOp::Product, GridOp::Intersect, GridOp::Colon] {
                push(grid_oracle(op, a, Some(b), cap)?);
            }
            if b.gens().len() == 1 {
                push(grid_oracle(GridOp::ColonMonomial, a, Some(b), cap)?);
            }
        }
    }
    Ok((checks, bad))
}
