//! Chain complexes of graded pieces with sigma-power differentials.
//!
//! A complex is anchored at index 0 on the piece of algebra degree c and
//! alternates the differentials sigma^{s+1} (even index) and sigma^{m+1}
//! (odd index), with N = m + s + 2 so consecutive composites are sigma^N
//! and vanish. The resulting degree law is
//!
//! ```text
//!   deg(2j)      = c + jN            deg(-2j)     = c - jN        (j >= 0)
//!   deg(2j+1)    = c + jN + s + 1                                 (j >= 0)
//!   deg(-(2j-1)) = c - (j-1)N - (m+1)                             (j >= 1)
//! ```
//!
//! truncated to algebra degrees inside [0, M], which keeps the complex
//! finite. Its Euler characteristic is exactly the reflection alternating
//! sum on row 2n of the Pascal triangle when M = 2n, c = n.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::Integer;
use crate::triangles::binomial;

use super::algebra::sigma_matrix;
use super::matrix::SparseMat;

/// Default cap on the dimension of any graded piece whose differential is
/// materialized. Central binomials reach this around M = 16.
pub const DEFAULT_MATRIX_BUDGET: u64 = 13_000;

/// A finite complex of graded pieces indexed by a contiguous interval of
/// integers (negative indices allowed), as produced by [`build_complex`].
#[derive(Clone, Debug)]
pub struct ChainComplex {
    generators: u32,
    base_degree: u32,
    m: u32,
    s: u32,
    degrees: BTreeMap<i32, u32>,
}

impl ChainComplex {
    pub fn generators(&self) -> u32 {
        self.generators
    }

    pub fn base_degree(&self) -> u32 {
        self.base_degree
    }

    pub fn bound_m(&self) -> u32 {
        self.m
    }

    pub fn shift_s(&self) -> u32 {
        self.s
    }

    /// Root-of-unity order N = m + s + 2.
    pub fn order(&self) -> u32 {
        self.m + self.s + 2
    }

    /// Complex indices carrying a nonzero piece, ascending.
    pub fn indices(&self) -> Vec<i32> {
        self.degrees.keys().copied().collect()
    }

    /// Algebra degree of the piece at a complex index.
    pub fn degree(&self, index: i32) -> Option<u32> {
        self.degrees.get(&index).copied()
    }

    /// Dimension C(M, deg(index)) of a piece; zero off the support.
    pub fn piece_dim(&self, index: i32) -> Integer {
        match self.degree(index) {
            Some(d) => binomial(self.generators as u64, d as i64),
            None => Integer::zero(),
        }
    }

    /// Exponent of sigma in the differential leaving `index`.
    pub fn differential_exponent(&self, index: i32) -> u32 {
        if index.rem_euclid(2) == 0 {
            self.s + 1
        } else {
            self.m + 1
        }
    }

    /// The differential at `index`, as a composed sigma-power matrix, or
    /// `None` where source or target piece is zero. Fails if a piece
    /// dimension exceeds the budget.
    pub fn differential(&self, index: i32, budget: u64) -> Result<Option<SparseMat>> {
        let (Some(src), Some(tgt)) = (self.degree(index), self.degree(index + 1)) else {
            return Ok(None);
        };
        let exponent = tgt - src;
        debug_assert_eq!(exponent, self.differential_exponent(index));
        let max_dim = (src..=tgt)
            .map(|d| {
                u64::try_from(binomial(self.generators as u64, d as i64)).unwrap_or(u64::MAX)
            })
            .max()
            .unwrap();
        if max_dim > budget {
            return Err(Error::BudgetExceeded {
                what: "matrix",
                size: max_dim,
                budget,
            });
        }
        let order = self.order();
        let mut product = sigma_matrix(self.generators, src, order);
        for step in 1..exponent {
            product = sigma_matrix(self.generators, src + step, order).multiply(&product);
        }
        Ok(Some(product))
    }
}

/// Builds the complex with M generators, anchor degree c at index 0, and
/// bound parameters (m, s). Rejects anchors outside the algebra.
pub fn build_complex(generators: u32, c: u32, m: u32, s: u32) -> Result<ChainComplex> {
    if c > generators {
        return Err(Error::InvalidParameter(format!(
            "anchor degree {c} outside the algebra on {generators} generators"
        )));
    }
    let order = (m + s + 2) as i64;
    let top = generators as i64;
    let mut degrees = BTreeMap::new();

    let deg_of = |index: i64| -> i64 {
        let c = c as i64;
        if index >= 0 {
            let j = index.div_euclid(2);
            if index % 2 == 0 {
                c + j * order
            } else {
                c + j * order + s as i64 + 1
            }
        } else {
            let j = (-index + 1).div_euclid(2); // index = -(2j-1) or -2j
            if (-index) % 2 == 1 {
                c - (j - 1) * order - (m as i64 + 1)
            } else {
                c - j * order
            }
        }
    };

    let mut i = 0i64;
    loop {
        let d = deg_of(i);
        if d > top {
            break;
        }
        degrees.insert(i as i32, d as u32);
        i += 1;
    }
    let mut i = -1i64;
    loop {
        let d = deg_of(i);
        if d < 0 {
            break;
        }
        degrees.insert(i as i32, d as u32);
        i -= 1;
    }

    let cx = ChainComplex {
        generators,
        base_degree: c,
        m,
        s,
        degrees,
    };
    // exponent bookkeeping: each index gap must match the sigma power
    let idxs = cx.indices();
    for pair in idxs.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        assert_eq!(b, a + 1, "complex support must be contiguous");
        let gap = cx.degree(b).unwrap() - cx.degree(a).unwrap();
        assert_eq!(gap, cx.differential_exponent(a), "degree law broken at {a}");
    }
    Ok(cx)
}

/// Euler characteristic: the alternating sum of piece dimensions.
pub fn euler_char(cx: &ChainComplex) -> Integer {
    cx.indices()
        .into_iter()
        .map(|i| {
            let dim = cx.piece_dim(i);
            if i.rem_euclid(2) == 0 {
                dim
            } else {
                -dim
            }
        })
        .sum()
}

/// Verifies d(i+1) . d(i) = 0 for every consecutive pair.
pub fn check_d_squared(cx: &ChainComplex, budget: u64) -> Result<bool> {
    for i in cx.indices() {
        let (Some(first), Some(second)) =
            (cx.differential(i, budget)?, cx.differential(i + 1, budget)?)
        else {
            continue;
        };
        if !second.multiply(&first).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Homology dimensions: rank H_i = dim C_i - rank d_i - rank d_{i-1},
/// with ranks computed exactly over the cyclotomic field.
pub fn homology_ranks(cx: &ChainComplex, budget: u64) -> Result<Vec<(i32, u64)>> {
    let mut diff_rank: BTreeMap<i32, u64> = BTreeMap::new();
    for i in cx.indices() {
        if let Some(d) = cx.differential(i, budget)? {
            diff_rank.insert(i, d.rank());
        }
    }
    let mut out = Vec::new();
    for i in cx.indices() {
        let dim = u64::try_from(cx.piece_dim(i)).expect("piece dimension fits u64");
        let r_out = diff_rank.get(&i).copied().unwrap_or(0);
        let r_in = diff_rank.get(&(i - 1)).copied().unwrap_or(0);
        assert!(
            r_out + r_in <= dim,
            "rank bookkeeping broken at index {i}: {r_out} + {r_in} > {dim}"
        );
        out.push((i, dim - r_out - r_in));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reflection::bounded_formula;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    #[test]
    fn central_complex_degrees_at_shift_zero() {
        // M = 2n, c = n, s = 0: pieces at ..., n-N, n-m-1, n, n+1, n+N, ...
        let cx = build_complex(8, 4, 2, 0).unwrap(); // N = 4
        assert_eq!(cx.degree(0), Some(4));
        assert_eq!(cx.degree(1), Some(5));
        assert_eq!(cx.degree(2), Some(8));
        assert_eq!(cx.degree(-1), Some(1));
        assert_eq!(cx.degree(-2), Some(0));
        assert_eq!(cx.degree(3), None); // degree 9 is out
        assert_eq!(cx.piece_dim(0), int(70));
        assert_eq!(cx.piece_dim(1), int(56));
    }

    #[test]
    fn full_exterior_complex_at_order_two() {
        let cx = build_complex(4, 2, 0, 0).unwrap();
        let dims: Vec<Integer> = cx.indices().iter().map(|&i| cx.piece_dim(i)).collect();
        assert_eq!(dims, [1, 4, 6, 4, 1].map(int).to_vec());
        for i in cx.indices() {
            assert_eq!(cx.differential_exponent(i), 1);
        }
        assert_eq!(euler_char(&cx), int(0));
    }

    #[test]
    fn negative_index_degree_example() {
        let cx = build_complex(12, 6, 3, 1).unwrap();
        assert_eq!(cx.degree(-1), Some(2)); // 6 - (3+1)
    }

    #[test]
    fn anchor_outside_algebra_rejected() {
        assert!(build_complex(4, 5, 1, 0).is_err());
    }

    #[test]
    fn euler_characteristic_matches_reflection_sum() {
        for n in 1..=6u32 {
            for m in 0..=3 {
                for s in 0..=2 {
                    let cx = build_complex(2 * n, n, m, s).unwrap();
                    assert_eq!(
                        euler_char(&cx),
                        bounded_formula(n, m, s),
                        "n={n} m={m} s={s}"
                    );
                }
            }
        }
    }

    #[test]
    fn single_piece_complex() {
        // with huge bounds only the anchor piece fits in [0, M]
        let cx = build_complex(6, 3, 20, 20).unwrap();
        assert_eq!(cx.indices(), vec![0]);
        assert_eq!(euler_char(&cx), int(20));
        let h = homology_ranks(&cx, DEFAULT_MATRIX_BUDGET).unwrap();
        assert_eq!(h, vec![(0, 20)]);
    }

    #[test]
    fn d_squared_vanishes() {
        for (gens, c, m, s) in [(4u32, 2u32, 0u32, 0u32), (6, 3, 1, 0), (8, 4, 1, 2), (10, 5, 3, 0)] {
            let cx = build_complex(gens, c, m, s).unwrap();
            assert!(
                check_d_squared(&cx, DEFAULT_MATRIX_BUDGET).unwrap(),
                "gens={gens} c={c} m={m} s={s}"
            );
        }
    }

    #[test]
    fn order_two_complex_is_exact() {
        let cx = build_complex(6, 3, 0, 0).unwrap();
        let h = homology_ranks(&cx, DEFAULT_MATRIX_BUDGET).unwrap();
        assert!(h.iter().all(|(_, r)| *r == 0), "{h:?}");
    }

    #[test]
    fn homology_concentrates_with_catalan_rank() {
        // small members of the central family: single nonzero homology,
        // equal to the Euler characteristic, at index 0
        for (n, nn) in [(2u32, 3u32), (2, 4), (3, 3), (3, 5)] {
            let m = nn - 2;
            let cx = build_complex(2 * n, n, m, 0).unwrap();
            let chi = euler_char(&cx);
            let h = homology_ranks(&cx, DEFAULT_MATRIX_BUDGET).unwrap();
            for (i, r) in &h {
                if *i == 0 {
                    assert_eq!(Integer::from(*r), chi, "n={n} N={nn}");
                } else {
                    assert_eq!(*r, 0, "n={n} N={nn} index {i}");
                }
            }
        }
    }

    #[test]
    fn budget_guards_materialization() {
        let cx = build_complex(14, 7, 1, 0).unwrap();
        assert!(matches!(
            cx.differential(0, 100),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
