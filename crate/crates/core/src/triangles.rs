//! Pascal-style coefficient triangles and their q-analogs.
//!
//! The d-Pascal triangle collects the coefficient rows of powers of the
//! d-term character q^{1-d} + q^{3-d} + ... + q^{d-1}; d = 2 is the usual
//! Pascal triangle (even rows read off central binomials), d = 3 the
//! trinomial triangle, where each entry is the sum of the d entries above
//! it. Rows are counted from 0.
//!
//! The q-side provides Gaussian binomials [n, k]_q with ordinary polynomial
//! support, the q-Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k], and
//! the q-Catalan numbers C_q(n) = [2n, n]_q - q [2n, n+1]_q.

use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::exactnum::{Integer, LaurentPoly};

/// Binomial coefficient C(n, k), zero outside 0 <= k <= n.
pub fn binomial(n: u64, k: i64) -> Integer {
    if k < 0 || k as u64 > n {
        return Integer::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

/// The multinomial n! / (i! (i+k)! (n-2i-k)!), zero whenever any of the
/// three lower arguments is negative. Counts step arrangements with i up
/// moves, i+k down moves and the rest level, which is why summing over i
/// yields the trinomial triangle entries.
pub fn trinomial_coeff(n: u64, i: i64, k: i64) -> Integer {
    let up = i;
    let down = i + k;
    if up < 0 || down < 0 || up as u64 > n {
        return Integer::zero();
    }
    let level = n as i64 - up - down;
    if level < 0 {
        return Integer::zero();
    }
    // n! / (up! down! level!) = C(n, up) * C(n-up, down)
    binomial(n, up) * binomial(n - up as u64, down)
}

/// One row of a d-Pascal triangle: the coefficients of the r-th power of
/// the d-term character, indexed by exponent. Adjacent entries sit two
/// exponent units apart; the row has entries at exponents congruent to
/// (d-1)r mod 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleRow {
    d: u32,
    r: u32,
    coeffs: LaurentPoly,
}

impl TriangleRow {
    pub fn arity(&self) -> u32 {
        self.d
    }

    pub fn row_index(&self) -> u32 {
        self.r
    }

    /// 0 when entries sit at even exponents, 1 when at odd ones.
    pub fn parity(&self) -> i64 {
        (((self.d - 1) as u64 * self.r as u64) % 2) as i64
    }

    /// Entry at centered column k, i.e. the coefficient of q^{2k + parity}.
    pub fn entry_at_col(&self, k: i64) -> Integer {
        self.coeffs.coeff(2 * k + self.parity())
    }

    /// Coefficient at a raw exponent.
    pub fn entry_at_exp(&self, e: i64) -> Integer {
        self.coeffs.coeff(e)
    }

    /// Column range holding nonzero entries: k from -(r(d-1)+p)/2 to
    /// (r(d-1)-p)/2 inclusive.
    pub fn col_range(&self) -> (i64, i64) {
        let span = (self.d as i64 - 1) * self.r as i64;
        let p = self.parity();
        (-(span + p) / 2, (span - p) / 2)
    }

    /// Entries left to right.
    pub fn entries(&self) -> Vec<Integer> {
        let (lo, hi) = self.col_range();
        (lo..=hi).map(|k| self.entry_at_col(k)).collect()
    }

    /// The underlying exponent-indexed coefficient map.
    pub fn as_poly(&self) -> &LaurentPoly {
        &self.coeffs
    }
}

/// Row r of the d-Pascal triangle, by repeated convolution with the
/// d-dimensional character q^{-(d-1)} + q^{-(d-3)} + ... + q^{d-1}.
pub fn d_pascal_row(d: u32, r: u32) -> TriangleRow {
    assert!(d >= 2, "triangle arity must be at least 2");
    let character = LaurentPoly::from_pairs(
        (0..d).map(|t| (2 * t as i64 - (d as i64 - 1), Integer::one())),
    );
    let mut coeffs = LaurentPoly::one();
    for _ in 0..r {
        coeffs = &coeffs * &character;
    }
    TriangleRow { d, r, coeffs }
}

static QBINOM_CACHE: Lazy<Mutex<HashMap<(u32, u32), LaurentPoly>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Gaussian binomial [n, k]_q with minimum exponent 0; zero outside
/// 0 <= k <= n. Computed through the q-Pascal recurrence
/// [n,k] = [n-1,k-1] + q^k [n-1,k], which keeps everything polynomial.
pub fn q_binomial(n: u32, k: i64) -> LaurentPoly {
    if k < 0 || k > n as i64 {
        return LaurentPoly::zero();
    }
    let k = k as u32;
    if k == 0 || k == n {
        return LaurentPoly::one();
    }
    if let Some(hit) = QBINOM_CACHE.lock().unwrap().get(&(n, k)) {
        return hit.clone();
    }
    let a = q_binomial(n - 1, k as i64 - 1);
    let b = q_binomial(n - 1, k as i64);
    let value = &a + &b.mul_monomial(k as i64, &Integer::one());
    QBINOM_CACHE
        .lock()
        .unwrap()
        .insert((n, k), value.clone());
    value
}

/// The q-Catalan number C_q(n) = [2n, n]_q - q [2n, n+1]_q, specializing
/// to the Catalan number C_n at q = 1.
pub fn q_catalan(n: u32) -> LaurentPoly {
    let middle = q_binomial(2 * n, n as i64);
    let next = q_binomial(2 * n, n as i64 + 1);
    &middle - &next.mul_monomial(1, &Integer::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(4, 2), int(6));
        assert_eq!(binomial(6, -1), int(0));
        assert_eq!(binomial(6, 7), int(0));
        assert_eq!(binomial(0, 0), int(1));
    }

    #[test]
    fn pascal_recurrence_holds() {
        for n in 1..=40u64 {
            for k in 0..=n as i64 {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k)
                );
            }
        }
    }

    #[test]
    fn pascal_row_four() {
        let row = d_pascal_row(2, 4);
        assert_eq!(row.entries(), [1, 4, 6, 4, 1].map(int).to_vec());
    }

    #[test]
    fn trinomial_rows_from_displayed_matrix() {
        let row2 = d_pascal_row(3, 2);
        assert_eq!(row2.entries(), [1, 2, 3, 2, 1].map(int).to_vec());
        let row4 = d_pascal_row(3, 4);
        assert_eq!(
            row4.entries(),
            [1, 4, 10, 16, 19, 16, 10, 4, 1].map(int).to_vec()
        );
    }

    #[test]
    fn trinomial_coeff_sums_match_triangle() {
        assert_eq!(trinomial_coeff(2, 0, 0), int(1));
        let central: Integer = (0..=4).map(|i| trinomial_coeff(4, i, 0)).sum();
        assert_eq!(central, int(19));
        let adjacent: Integer = (0..=4).map(|i| trinomial_coeff(4, i, 1)).sum();
        assert_eq!(adjacent, int(16));
        // and in general the triangle entry is the i-sum of multinomials
        for n in 0..=8u64 {
            let row = d_pascal_row(3, n as u32);
            let (lo, hi) = row.col_range();
            for k in lo..=hi {
                let s: Integer = (0..=n as i64).map(|i| trinomial_coeff(n, i, k)).sum();
                assert_eq!(s, row.entry_at_col(k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn row_entries_are_sums_of_d_above() {
        for d in 2..=5u32 {
            for r in 1..=12u32 {
                let prev = d_pascal_row(d, r - 1);
                let row = d_pascal_row(d, r);
                let (lo, hi) = row.col_range();
                for k in lo..=hi {
                    let e = 2 * k + row.parity();
                    let mut sum = Integer::zero();
                    for t in 0..d as i64 {
                        sum += prev.entry_at_exp(e - (2 * t - (d as i64 - 1)));
                    }
                    assert_eq!(sum, row.entry_at_col(k), "d={d} r={r} k={k}");
                }
            }
        }
    }

    #[test]
    fn row_sums_are_powers_of_arity() {
        for d in 2..=4u32 {
            for r in 0..=10u32 {
                let sum = d_pascal_row(d, r).as_poly().eval_at_one();
                assert_eq!(sum, Integer::from(d).pow(r));
            }
        }
    }

    #[test]
    fn rows_are_symmetric() {
        for d in 2..=4u32 {
            for r in 0..=10u32 {
                assert!(d_pascal_row(d, r).as_poly().is_symmetric());
            }
        }
    }

    /// Independent oracle: [n,k]_q as a quotient of q-factorial products,
    /// where (n!)_q is the product of 1 + q + ... + q^{j-1}. Exact division
    /// checks that the quotient really is a polynomial.
    fn q_binomial_by_factorials(n: u32, k: u32) -> LaurentPoly {
        fn q_int(j: u32) -> LaurentPoly {
            LaurentPoly::from_pairs((0..j).map(|e| (e as i64, Integer::one())))
        }
        let mut numer = LaurentPoly::one();
        for j in (n - k + 1)..=n {
            numer = &numer * &q_int(j);
        }
        let mut denom = LaurentPoly::one();
        for j in 1..=k {
            denom = &denom * &q_int(j);
        }
        // long division, denominator has unit constant term
        let mut rem = numer;
        let mut quot = LaurentPoly::zero();
        while !rem.is_zero() {
            let e = rem.min_exp().unwrap() - denom.min_exp().unwrap();
            let c = rem.coeff(rem.min_exp().unwrap());
            let t = LaurentPoly::monomial(e, c);
            quot = &quot + &t;
            rem = &rem - &(&t * &denom);
        }
        quot
    }

    #[test]
    fn q_binomial_small_values() {
        let expect21 = LaurentPoly::from_pairs([(0, int(1)), (1, int(1))]);
        assert_eq!(q_binomial(2, 1), expect21);
        let expect42 = q_binomial_by_factorials(4, 2);
        assert_eq!(
            expect42,
            LaurentPoly::from_pairs([(0, int(1)), (1, int(1)), (2, int(2)), (3, int(1)), (4, int(1))])
        );
        assert_eq!(q_binomial(4, 2), expect42);
        assert!(q_binomial(4, -1).is_zero());
        assert!(q_binomial(4, 5).is_zero());
    }

    #[test]
    fn q_binomial_matches_factorial_oracle() {
        for n in 0..=10u32 {
            for k in 0..=n {
                assert_eq!(
                    q_binomial(n, k as i64),
                    q_binomial_by_factorials(n, k),
                    "[{n},{k}]_q"
                );
            }
        }
    }

    #[test]
    fn q_pascal_recurrence() {
        for n in 1..=20u32 {
            for k in 0..=n as i64 {
                let lhs = q_binomial(n, k);
                let rhs = &q_binomial(n - 1, k - 1)
                    + &q_binomial(n - 1, k).mul_monomial(k, &Integer::one());
                assert_eq!(lhs, rhs, "recurrence at ({n},{k})");
            }
        }
    }

    #[test]
    fn q_binomial_specializes_to_binomial() {
        for n in 0..=20u32 {
            for k in -1..=(n as i64 + 1) {
                assert_eq!(q_binomial(n, k).eval_at_one(), binomial(n as u64, k));
            }
        }
    }

    #[test]
    fn q_binomial_coefficients_symmetric_in_degree() {
        for n in 0..=14u32 {
            for k in 0..=n as i64 {
                let p = q_binomial(n, k);
                let top = k * (n as i64 - k);
                for e in 0..=top {
                    assert_eq!(p.coeff(e), p.coeff(top - e), "({n},{k}) exp {e}");
                }
            }
        }
    }

    #[test]
    fn q_catalan_small() {
        assert_eq!(q_catalan(0), LaurentPoly::one());
        assert_eq!(
            q_catalan(2),
            LaurentPoly::from_pairs([(0, int(1)), (2, int(1))])
        );
    }
}
