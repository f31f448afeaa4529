//! Exploratory scan over quadratic exponent functions.
//!
//! For a fixed root-of-unity order N and partition (m, s), every
//! integer-valued candidate f(i) = (A i^2 + B i)/2 in the requested range
//! is pushed through the modified Euler characteristic of the central
//! complexes (M = 2n, anchor n). Candidates are ranked by how many of
//! their nonzero values are exactly a q-Fibonacci polynomial (either
//! recurrence variant) up to sign and a monomial factor; all-zero
//! candidates carry no evidence and sink to the bottom. The output order
//! is fully deterministic.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::CycloNumber;
use crate::qcomplex::{modified_euler_char, ExponentFn, QFibVariant};

use super::verify::match_q_fibonacci;

/// Scan request: order N, a partition (m, s) of N - 2, coefficient ranges
/// for A and B (inclusive), and the largest half-size n to sweep.
#[derive(Clone, Copy, Debug)]
pub struct ScanSpec {
    pub order: u32,
    pub m: u32,
    pub s: u32,
    pub a_range: (i64, i64),
    pub b_range: (i64, i64),
    pub max_n: u32,
}

/// One ranked candidate exponent function.
#[derive(Clone, Debug, Serialize)]
pub struct ScanCandidate {
    pub a: i64,
    pub b: i64,
    /// Cells with chi_q != 0.
    pub nonzero: u32,
    /// Nonzero cells that are +-q^a times a q-Fibonacci polynomial.
    pub matched: u32,
    /// Every nonzero cell matched, and there was at least one.
    pub all_matched: bool,
    /// Recurrence variants observed among matches ("F", "F'").
    pub variants: Vec<String>,
    /// True when every swept value reduces to zero mod Phi_N.
    pub reduced_all_zero: bool,
}

/// Runs the scan; the result is sorted best-first: more q-Fibonacci
/// matches, then full coverage, then small |A| + |B|, then (A, B).
pub fn scan_exponents(spec: &ScanSpec) -> Result<Vec<ScanCandidate>> {
    if spec.m + spec.s + 2 != spec.order {
        return Err(Error::InvalidParameter(format!(
            "partition ({}, {}) does not split order {}",
            spec.m, spec.s, spec.order
        )));
    }
    if spec.a_range.0 > spec.a_range.1 || spec.b_range.0 > spec.b_range.1 {
        return Err(Error::InvalidParameter("empty coefficient range".into()));
    }

    let candidates: Vec<(i64, i64)> = (spec.a_range.0..=spec.a_range.1)
        .flat_map(|a| {
            (spec.b_range.0..=spec.b_range.1)
                .filter(move |b| (a + b).rem_euclid(2) == 0)
                .map(move |b| (a, b))
        })
        .collect();

    let mut results: Vec<ScanCandidate> = candidates
        .into_par_iter()
        .map(|(a, b)| {
            let f = ExponentFn::new(format!("({a},{b})"), a, b)
                .expect("parity filtered above");
            let mut nonzero = 0u32;
            let mut matched = 0u32;
            let mut variants = Vec::new();
            let mut reduced_all_zero = true;
            for n in 1..=spec.max_n {
                let v = modified_euler_char(2 * n, n, spec.m, spec.s, &f)
                    .expect("central complex parameters are valid");
                if !CycloNumber::from_laurent(&v, spec.order)
                    .expect("order >= 2")
                    .is_zero()
                {
                    reduced_all_zero = false;
                }
                if v.is_zero() {
                    continue;
                }
                nonzero += 1;
                let mut hit = false;
                if match_q_fibonacci(&v, QFibVariant::F).is_some() {
                    hit = true;
                    if !variants.iter().any(|s| s == "F") {
                        variants.push("F".to_string());
                    }
                }
                if match_q_fibonacci(&v, QFibVariant::FPrime).is_some() {
                    hit = true;
                    if !variants.iter().any(|s| s == "F'") {
                        variants.push("F'".to_string());
                    }
                }
                if hit {
                    matched += 1;
                }
            }
            ScanCandidate {
                a,
                b,
                nonzero,
                matched,
                all_matched: nonzero > 0 && matched == nonzero,
                variants,
                reduced_all_zero,
            }
        })
        .collect();

    results.sort_by_key(|c| {
        (
            std::cmp::Reverse(c.matched),
            std::cmp::Reverse(c.all_matched),
            c.a.abs() + c.b.abs(),
            c.a,
            c.b,
        )
    });
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn top_tier(results: &[ScanCandidate]) -> Vec<(i64, i64)> {
        let best = results[0].matched;
        results
            .iter()
            .take_while(|c| c.matched == best)
            .map(|c| (c.a, c.b))
            .collect()
    }

    #[test]
    fn pentagonal_rediscovered_for_width_one() {
        let results = scan_exponents(&ScanSpec {
            order: 3,
            m: 1,
            s: 0,
            a_range: (-4, 4),
            b_range: (-4, 4),
            max_n: 6,
        })
        .unwrap();
        assert!(top_tier(&results).contains(&(3, -1)), "{:?}", &results[..5]);
    }

    #[test]
    fn rejects_inconsistent_partition() {
        assert!(scan_exponents(&ScanSpec {
            order: 5,
            m: 1,
            s: 1,
            a_range: (0, 1),
            b_range: (0, 1),
            max_n: 2,
        })
        .is_err());
    }
}
