//! Automated sweeps behind the three proposition verifiers.
//!
//! Rows start at 1: the empty row 0 contributes the bare anchor entry 1 to
//! every alternating sum, which is the degenerate value of an empty
//! product, not evidence about the families.
//!
//! For triangles beyond the binomial one, only the lower-bound-on-the-
//! diagonal pattern (s = 0, and its mirror m = 0) is backed by stated
//! formulas; interior partitions extend that pattern by analogy. Extension
//! cells are swept and reported, but an off-family value there is surfaced
//! as `out_of_family` rather than scored as a mismatch — the d = 3, N = 6
//! interior partitions genuinely leave the Jacobsthal family (they count
//! two-level strips, landing on powers of two).

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::Result;
use crate::exactnum::{Integer, LaurentPoly};
use crate::qcomplex::{modified_euler_char, q_fibonacci, ExponentFn, QFibVariant};
use crate::reflection::{altsum_row, AltSumSpec};
use crate::triangles::d_pascal_row;

use super::report::{CellRecord, CellStatus, VerificationReport};
use super::sequences::{
    fibonacci, is_fibonacci, is_in_power3_halves, is_jacobsthal, is_power_of_two,
};

/// The named quadratic exponent functions: pentagonal numbers for the
/// width-one pattern, and the two classical Rogers-Ramanujan exponent
/// families for the width-four patterns.
pub fn exponent_fn(name: &str) -> Result<ExponentFn> {
    match name {
        "pentagonal_1_2" => ExponentFn::new(name, 3, -1),
        "rr_1_4" => ExponentFn::new(name, 5, -3),
        "rr_2_3" => ExponentFn::new(name, 5, -1),
        other => Err(crate::error::Error::InvalidParameter(format!(
            "unknown exponent function: {other}"
        ))),
    }
}

fn family_check_d2(order: u32, v: &Integer) -> (String, CellStatus) {
    match order {
        2 => (
            "0".into(),
            if v.is_zero() {
                CellStatus::Match
            } else {
                CellStatus::Mismatch
            },
        ),
        3 => (
            "0 or +-1".into(),
            if v.abs() <= Integer::one() {
                CellStatus::Match
            } else {
                CellStatus::Mismatch
            },
        ),
        4 => (
            "0 or +-2^k".into(),
            if v.is_zero() || is_power_of_two(v) {
                CellStatus::Match
            } else {
                CellStatus::Mismatch
            },
        ),
        5 => (
            "+-fibonacci".into(),
            if is_fibonacci(v) {
                CellStatus::Match
            } else {
                CellStatus::Mismatch
            },
        ),
        6 => (
            "+-{3^k, floor(3^k/2), ceil(3^k/2)}".into(),
            if is_in_power3_halves(v) {
                CellStatus::Match
            } else {
                // the source list ends in an ellipsis: surfaced, not scored
                CellStatus::OutOfFamily
            },
        ),
        _ => unreachable!("order out of sweep range"),
    }
}

fn family_check_d3(order: u32, v: &Integer) -> (String, bool) {
    match order {
        3 => ("0".into(), v.is_zero()),
        2 | 4 => ("0 or +-1".into(), v.abs() <= Integer::one()),
        5 => ("+-fibonacci".into(), is_fibonacci(v)),
        6 => ("+-jacobsthal".into(), is_jacobsthal(v)),
        _ => unreachable!(),
    }
}

fn family_check_d4(order: u32, v: &Integer) -> (String, bool) {
    match order {
        2 | 4 => ("0".into(), v.is_zero()),
        3 | 5 => ("0 or +-1".into(), v.abs() <= Integer::one()),
        _ => unreachable!(),
    }
}

fn sweep_rows<F>(d: u32, max_row: u32, orders: &[u32], classify: F) -> Vec<CellRecord>
where
    F: Fn(u32, u32, u32, &Integer) -> (String, CellStatus) + Sync,
{
    (1..=max_row)
        .into_par_iter()
        .map(|row| {
            let mut cells = Vec::new();
            let (lo, hi) = d_pascal_row(d, row).col_range();
            for &order in orders {
                for m in 0..=(order - 2) {
                    let s = order - 2 - m;
                    for col in lo..=hi {
                        let value = altsum_row(&AltSumSpec {
                            d,
                            row,
                            base_col: col,
                            m,
                            s,
                        });
                        let (expected, status) = classify(order, m, s, &value);
                        let mut cell = CellRecord::triangle(d, row, col, m, s);
                        cell.value = value.to_string();
                        cell.expected = expected;
                        cell.status = status;
                        cells.push(cell);
                    }
                }
            }
            cells
        })
        .flatten()
        .collect()
}

/// Sweeps the binomial (d = 2) alternating sums over all rows up to
/// `max_row`, all anchor columns and all partitions of N in {2..6}, and
/// classifies each value against the stated family for its N.
pub fn verify_prop1(max_row: u32) -> VerificationReport {
    let cells = sweep_rows(2, max_row, &[2, 3, 4, 5, 6], |order, _m, _s, v| {
        family_check_d2(order, v)
    });
    VerificationReport::assemble(
        "prop1",
        BTreeMap::from([("max_row".to_string(), max_row.to_string())]),
        cells,
    )
}

/// Sweeps the d = 3 and d = 4 triangles. Cells on the stated patterns
/// (m = 0 or s = 0) score matches and mismatches; interior partitions are
/// the analogy extension and report `out_of_family` when they leave the
/// named family.
pub fn verify_prop2(max_row: u32) -> VerificationReport {
    let classify_with = |in_family: bool, extension: bool, expected: String| {
        let status = if in_family {
            CellStatus::Match
        } else if extension {
            CellStatus::OutOfFamily
        } else {
            CellStatus::Mismatch
        };
        (expected, status)
    };
    let mut cells = sweep_rows(3, max_row, &[2, 3, 4, 5, 6], |order, m, s, v| {
        let (expected, ok) = family_check_d3(order, v);
        classify_with(ok, m > 0 && s > 0, expected)
    });
    cells.extend(sweep_rows(4, max_row, &[2, 3, 4, 5], |order, m, s, v| {
        let (expected, ok) = family_check_d4(order, v);
        classify_with(ok, m > 0 && s > 0, expected)
    }));
    VerificationReport::assemble(
        "prop2",
        BTreeMap::from([("max_row".to_string(), max_row.to_string())]),
        cells,
    )
}

/// One clause of the q-level proposition: a partition of N written
/// (s+1) + (m+1), its exponent function, and the value family.
struct QClause {
    label: &'static str,
    m: u32,
    s: u32,
    f: ExponentFn,
    family: QFamily,
}

enum QFamily {
    MonomialOrZero,
    QFib(QFibVariant),
}

/// Splits v as sign * q^a * w with w(0) > 0, returning (sign, a, w).
fn split_monomial(v: &LaurentPoly) -> Option<(i64, i64, LaurentPoly)> {
    let a = v.min_exp()?;
    let lead = v.coeff(a);
    let sign = if lead.is_negative() { -1 } else { 1 };
    let w = v.mul_monomial(-a, &Integer::from(sign));
    Some((sign, a, w))
}

/// Finds (sign, a, k) with v = sign * q^a * F_k, if any; k is minimal.
pub(crate) fn match_q_fibonacci(
    v: &LaurentPoly,
    variant: QFibVariant,
) -> Option<(i64, i64, u32)> {
    if v.is_zero() {
        return Some((1, 0, 0));
    }
    let (sign, a, w) = split_monomial(v)?;
    let target = w.eval_at_one();
    let mut k = 0u32;
    loop {
        let fib = fibonacci(k);
        if fib > target {
            return None;
        }
        if fib == target && q_fibonacci(k, variant) == w {
            return Some((sign, a, k));
        }
        k += 1;
    }
}

/// Sweeps the modified Euler characteristics chi_q for the central family
/// (M = 2n, anchor n) against the three exponent-function clauses:
/// pentagonal weights must collapse chi_q to 0 or +-q^a, and the two
/// Rogers-Ramanujan weights must land exactly on +-q^a times a q-Fibonacci
/// polynomial of the matching variant, Fibonacci at q = 1. The report
/// records the observed monomial exponent and index alignment per cell.
pub fn verify_prop3(max_n: u32) -> VerificationReport {
    let clauses = vec![
        QClause {
            label: "1+2",
            m: 1,
            s: 0,
            f: exponent_fn("pentagonal_1_2").unwrap(),
            family: QFamily::MonomialOrZero,
        },
        QClause {
            label: "1+4",
            m: 3,
            s: 0,
            f: exponent_fn("rr_1_4").unwrap(),
            family: QFamily::QFib(QFibVariant::F),
        },
        QClause {
            label: "2+3",
            m: 2,
            s: 1,
            f: exponent_fn("rr_2_3").unwrap(),
            family: QFamily::QFib(QFibVariant::FPrime),
        },
    ];

    let cells: Vec<CellRecord> = clauses
        .par_iter()
        .map(|clause| {
            let mut cells = Vec::new();
            for n in 1..=max_n {
                let v = modified_euler_char(2 * n, n, clause.m, clause.s, &clause.f)
                    .expect("central complex parameters are valid");
                let mut cell = CellRecord::complex(n, clause.m, clause.s);
                cell.value = v.to_string();
                cell.notes
                    .insert("partition".into(), clause.label.to_string());
                cell.notes
                    .insert("f".into(), clause.f.label().to_string());
                let q1 = v.eval_at_one();
                cell.notes.insert("q1".into(), q1.to_string());
                match clause.family {
                    QFamily::MonomialOrZero => {
                        cell.expected = "0 or +-q^a".into();
                        let ok = v.is_zero()
                            || split_monomial(&v)
                                .map(|(_, a, w)| {
                                    let hit = w == LaurentPoly::one();
                                    if hit {
                                        cell.notes.insert("a".into(), a.to_string());
                                    }
                                    hit
                                })
                                .unwrap_or(false);
                        // at q = 1 these are exactly the 0, +-1 values
                        let q1_ok = q1.abs() <= Integer::one();
                        cell.status = if ok && q1_ok {
                            CellStatus::Match
                        } else {
                            CellStatus::Mismatch
                        };
                    }
                    QFamily::QFib(variant) => {
                        cell.expected = match variant {
                            QFibVariant::F => "+-q^a * F_k".into(),
                            QFibVariant::FPrime => "+-q^a * F'_k".into(),
                        };
                        match match_q_fibonacci(&v, variant) {
                            Some((sign, a, k)) if is_fibonacci(&q1) => {
                                cell.notes.insert("sign".into(), sign.to_string());
                                cell.notes.insert("a".into(), a.to_string());
                                cell.notes.insert("k".into(), k.to_string());
                                cell.status = CellStatus::Match;
                            }
                            _ => cell.status = CellStatus::Mismatch,
                        }
                    }
                }
                cells.push(cell);
            }
            cells
        })
        .flatten()
        .collect();

    VerificationReport::assemble(
        "prop3",
        BTreeMap::from([("max_n".to_string(), max_n.to_string())]),
        cells,
    )
}
