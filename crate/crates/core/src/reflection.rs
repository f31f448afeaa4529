//! Closed-form alternating sums from the reflection principle.
//!
//! A path confined to -s <= y-x <= m is counted by reflecting violators
//! across the barrier lines just outside the region, which telescopes into
//! an alternating sum over one row of a coefficient triangle, periodic with
//! period N = m + s + 2: the A-side terms march right of the anchor column,
//! the B-side terms march left, and the i = 0 term is counted once.
//!
//! [`bounded_formula`] is the d = 2 (binomial) case written directly
//! against binomial coefficients; [`altsum_row`] applies the same column
//! pattern to any d-Pascal row and anchor column, which is the form the
//! proposition verifiers sweep.

use num_traits::Zero;
use serde::Serialize;

use crate::exactnum::Integer;
use crate::triangles::{binomial, d_pascal_row};

/// C_n = C(2n, n) - C(2n, n-1), the two-term reflection count of paths
/// weakly above the diagonal.
pub fn catalan_formula(n: u32) -> Integer {
    let n2 = 2 * n as u64;
    binomial(n2, n as i64) - binomial(n2, n as i64 - 1)
}

/// Number of N/E paths (0,0) -> (n,n) with -s <= y-x <= m, as the
/// reflection alternating sum with period N = m + s + 2:
///
/// ```text
///   |A_2j| = |B_2j| = C(2n, n + jN)        (i = 2j, the j = 0 term once)
///   |A_2j+1|        = C(2n, n + jN + s+1)
///   |B_2j+1|        = C(2n, n - jN - m-1)
/// ```
///
/// The series truncates on its own once every column leaves the row.
pub fn bounded_formula(n: u32, m: u32, s: u32) -> Integer {
    let period = (m + s + 2) as i64;
    let n = n as i64;
    let n2 = (2 * n) as u64;
    let in_range = |col: i64| col >= 0 && col <= 2 * n;

    let mut value = binomial(n2, n);
    let mut j = 0i64;
    loop {
        // odd index i = 2j + 1
        let a_col = n + j * period + s as i64 + 1;
        let b_col = n - j * period - m as i64 - 1;
        value -= binomial(n2, a_col) + binomial(n2, b_col);
        // even index i = 2j + 2
        let e = (j + 1) * period;
        value += binomial(n2, n + e) + binomial(n2, n - e);
        j += 1;
        let all_out = !in_range(n + j * period)
            && !in_range(n - j * period)
            && !in_range(n + j * period + s as i64 + 1)
            && !in_range(n - j * period - m as i64 - 1);
        if all_out {
            break;
        }
    }
    value
}

/// Which side of the anchor a term sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Center,
    A,
    B,
}

/// One term of an alternating reflection sum: the triangle entry at a
/// shifted column, contributing with sign (-1)^index.
#[derive(Clone, Debug, Serialize)]
pub struct AltTerm {
    pub index: u32,
    pub side: Side,
    pub col: i64,
    #[serde(serialize_with = "crate::serialize_integer")]
    pub entry: Integer,
}

/// An alternating-sum instance: row `row` of the d-Pascal triangle,
/// anchored at centered column `base_col`, bound parameters (m, s) with
/// period N = m + s + 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AltSumSpec {
    pub d: u32,
    pub row: u32,
    pub base_col: i64,
    pub m: u32,
    pub s: u32,
}

impl AltSumSpec {
    pub fn period(&self) -> u32 {
        self.m + self.s + 2
    }
}

/// The alternating sum value; see [`altsum_terms`] for the term table.
pub fn altsum_row(spec: &AltSumSpec) -> Integer {
    altsum_terms(spec)
        .iter()
        .map(|t| {
            if t.index % 2 == 0 {
                t.entry.clone()
            } else {
                -t.entry.clone()
            }
        })
        .sum()
}

/// The nonzero terms of the alternating sum, in increasing index order
/// (the anchor term is always listed). Columns move in steps of one
/// triangle column, i.e. two exponent units.
pub fn altsum_terms(spec: &AltSumSpec) -> Vec<AltTerm> {
    let row = d_pascal_row(spec.d, spec.row);
    let parity = row.parity();
    let e0 = 2 * spec.base_col + parity;
    let period = 2 * spec.period() as i64; // in exponent units
    let off_s = 2 * (spec.s as i64 + 1);
    let off_m = 2 * (spec.m as i64 + 1);
    let (lo, hi) = {
        let p = row.as_poly();
        match (p.min_exp(), p.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => (0, 0),
        }
    };
    let col_of = |e: i64| (e - parity) / 2;

    let mut terms = vec![AltTerm {
        index: 0,
        side: Side::Center,
        col: spec.base_col,
        entry: row.entry_at_exp(e0),
    }];
    let push = |terms: &mut Vec<AltTerm>, index: u32, side: Side, e: i64| {
        let entry = row.entry_at_exp(e);
        if !entry.is_zero() {
            terms.push(AltTerm {
                index,
                side,
                col: col_of(e),
                entry,
            });
        }
    };
    let mut j = 0i64;
    loop {
        let i_odd = (2 * j + 1) as u32;
        push(&mut terms, i_odd, Side::A, e0 + j * period + off_s);
        push(&mut terms, i_odd, Side::B, e0 - j * period - off_m);
        let i_even = (2 * j + 2) as u32;
        push(&mut terms, i_even, Side::A, e0 + (j + 1) * period);
        push(&mut terms, i_even, Side::B, e0 - (j + 1) * period);
        j += 1;
        let all_out = e0 + j * period > hi
            && e0 - j * period < lo
            && e0 + j * period + off_s > hi
            && e0 - j * period - off_m < lo;
        if all_out {
            break;
        }
    }
    terms
}
