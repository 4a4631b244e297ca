//! Exact rank of integer matrices over `Q` (fraction-free Bareiss
//! elimination, escalating from checked `i64` to big integers) or over a
//! prime field `F_p`.

use crate::ring::Field;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank of a dense row-major integer matrix over the given field.
pub fn rank(rows: &[Vec<i64>], field: Field) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    match field {
        Field::Rationals => rank_rational(rows),
        Field::Prime(p) => rank_mod_p(rows, p),
    }
}

pub fn rank_rational(rows: &[Vec<i64>]) -> usize {
    bareiss_i64(rows).unwrap_or_else(|| bareiss_bigint(rows))
}

/// Bareiss elimination in `i64`; `None` if an intermediate overflows.
pub fn bareiss_i64(rows: &[Vec<i64>]) -> Option<usize> {
    let mut a: Vec<Vec<i64>> = rows.to_vec();
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut prev: i64 = 1;
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c];
        for i in r + 1..m {
            let lead = a[i][c];
            for j in c + 1..n {
                let t = pivot
                    .checked_mul(a[i][j])?
                    .checked_sub(lead.checked_mul(a[r][j])?)?;
                a[i][j] = t / prev;
            }
            a[i][c] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

pub fn bareiss_bigint(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        for i in r + 1..m {
            let lead = a[i][c].clone();
            for j in c + 1..n {
                let t = &pivot * &a[i][j] - &lead * &a[r][j];
                a[i][j] = t / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let p128 = p as i128;
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|&v| (v as i128).rem_euclid(p128) as u64)
                .collect()
        })
        .collect();
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mulmod = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(piv) = (r..m).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = pow_mod(a[r][c], p - 2, p);
        for j in c..n {
            a[r][j] = mulmod(a[r][j], inv);
        }
        for i in r + 1..m {
            let f = a[i][c];
            if f == 0 {
                continue;
            }
            for j in c..n {
                let sub = mulmod(f, a[r][j]);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        r += 1;
    }
    r
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}
