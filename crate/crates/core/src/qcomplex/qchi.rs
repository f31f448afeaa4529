//! Modified Euler characteristics and q-Fibonacci polynomials.
//!
//! The modified Euler characteristic weighs each piece of a complex by a
//! quadratic exponent function f(i) = (A i^2 + B i) / 2 on the complex
//! index:
//!
//! ```text
//!   chi_q = sum_i (-1)^i q^{f(i)} qdim(piece_i)
//! ```
//!
//! kept as an exact Laurent polynomial (the q-Fibonacci identities it
//! produces are polynomial identities; reduction at a root of unity is a
//! separate view via [`crate::exactnum::CycloNumber::from_laurent`]).

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactnum::{Integer, LaurentPoly};

use super::algebra::graded_qdim_cached;
use super::complex::build_complex;

/// Integer-valued quadratic exponent function f(i) = (A i^2 + B i) / 2.
/// A and B must have equal parity, which makes f integral on all of Z.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentFn {
    label: String,
    a: i64,
    b: i64,
}

impl ExponentFn {
    pub fn new(label: impl Into<String>, a: i64, b: i64) -> Result<Self> {
        if (a + b).rem_euclid(2) != 0 {
            return Err(Error::InvalidParameter(format!(
                "({a} i^2 + {b} i)/2 is not integer-valued"
            )));
        }
        Ok(ExponentFn {
            label: label.into(),
            a,
            b,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn coefficients(&self) -> (i64, i64) {
        (self.a, self.b)
    }

    pub fn eval(&self, i: i64) -> i64 {
        (self.a * i * i + self.b * i) / 2
    }
}

/// The constant-zero exponent function.
pub fn trivial_exponent_fn() -> ExponentFn {
    ExponentFn::new("zero", 0, 0).unwrap()
}

/// chi_q of the complex on `generators` generators anchored at degree c
/// with bounds (m, s): the alternating sum of piece q-dimensions, each
/// twisted by q^{f(i)}.
pub fn modified_euler_char(
    generators: u32,
    c: u32,
    m: u32,
    s: u32,
    f: &ExponentFn,
) -> Result<LaurentPoly> {
    let cx = build_complex(generators, c, m, s)?;
    let mut acc = LaurentPoly::zero();
    for i in cx.indices() {
        let deg = cx.degree(i).unwrap();
        let qdim = graded_qdim_cached(generators, deg as i64);
        let sign = if i.rem_euclid(2) == 0 {
            Integer::one()
        } else {
            -Integer::one()
        };
        let term = qdim.mul_monomial(f.eval(i as i64), &sign);
        acc = &acc + &term;
    }
    Ok(acc)
}

/// The two q-Fibonacci recurrences of interest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QFibVariant {
    /// F_n = F_{n-1} + q^{n-1} F_{n-2}, F_0 = 0, F_1 = 1.
    F,
    /// F'_n = F'_{n-1} + q^{n-2} F'_{n-2}, F'_0 = 0, F'_1 = 1.
    FPrime,
}

/// The n-th q-Fibonacci polynomial of the chosen variant. Both collapse
/// to the ordinary Fibonacci numbers at q = 1.
pub fn q_fibonacci(n: u32, variant: QFibVariant) -> LaurentPoly {
    let shift = match variant {
        QFibVariant::F => 1,
        QFibVariant::FPrime => 2,
    };
    let mut prev = LaurentPoly::zero(); // F_0
    let mut cur = LaurentPoly::one(); // F_1
    if n == 0 {
        return prev;
    }
    for t in 2..=n as i64 {
        let next = &cur + &prev.mul_monomial(t - shift, &Integer::one());
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::LaurentPoly;
    use crate::qcomplex::euler_char;
    use crate::triangles::q_catalan;

    fn lp(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_pairs(pairs.iter().map(|&(e, c)| (e, Integer::from(c))))
    }

    #[test]
    fn exponent_fn_parity_check() {
        assert!(ExponentFn::new("bad", 2, 1).is_err());
        let f = ExponentFn::new("pentagonal", 3, -1).unwrap();
        let values: Vec<i64> = [0, 1, -1, 2, -2].iter().map(|&i| f.eval(i)).collect();
        assert_eq!(values, vec![0, 1, 2, 5, 7]);
    }

    #[test]
    fn trivial_weights_specialize_to_euler_char() {
        for (gens, c, m, s) in [(6u32, 3u32, 1u32, 0u32), (8, 4, 2, 1), (8, 3, 0, 0)] {
            let chi_q =
                modified_euler_char(gens, c, m, s, &trivial_exponent_fn()).unwrap();
            let cx = build_complex(gens, c, m, s).unwrap();
            assert_eq!(chi_q.eval_at_one(), euler_char(&cx));
        }
    }

    #[test]
    fn pentagonal_weights_collapse_to_monomials() {
        let f = ExponentFn::new("pentagonal", 3, -1).unwrap();
        for n in 1..=6u32 {
            let v = modified_euler_char(2 * n, n, 1, 0, &f).unwrap();
            assert!(
                v.is_zero() || (v.term_count() == 1 && v.coeff(v.min_exp().unwrap()).magnitude().is_one()),
                "n={n}: {v}"
            );
        }
    }

    #[test]
    fn rr_weights_give_q_fibonacci() {
        let f14 = ExponentFn::new("rr14", 5, -3).unwrap();
        for n in 1..=6u32 {
            let v = modified_euler_char(2 * n, n, 3, 0, &f14).unwrap();
            let k = if n == 1 { 2 } else { 2 * n - 1 };
            assert_eq!(v, q_fibonacci(k, QFibVariant::F), "n={n}");
        }
        let f23 = ExponentFn::new("rr23", 5, -1).unwrap();
        for n in 1..=6u32 {
            let v = modified_euler_char(2 * n, n, 2, 1, &f23).unwrap();
            assert_eq!(v, q_fibonacci(2 * n + 1, QFibVariant::FPrime), "n={n}");
        }
    }

    #[test]
    fn wide_bound_gives_q_catalan() {
        let f = ExponentFn::new("pentagonal", 3, -1).unwrap();
        for n in 1..=8u32 {
            let v = modified_euler_char(2 * n, n, n, 0, &f).unwrap();
            assert_eq!(v, q_catalan(n), "n={n}");
        }
    }

    #[test]
    fn q_fibonacci_small_values() {
        assert!(q_fibonacci(0, QFibVariant::F).is_zero());
        assert_eq!(q_fibonacci(1, QFibVariant::F), LaurentPoly::one());
        assert_eq!(q_fibonacci(3, QFibVariant::F), lp(&[(0, 1), (2, 1)]));
        assert_eq!(
            q_fibonacci(4, QFibVariant::FPrime),
            lp(&[(0, 1), (1, 1), (2, 1)])
        );
        assert_eq!(q_fibonacci(3, QFibVariant::FPrime), lp(&[(0, 1), (1, 1)]));
    }

    #[test]
    fn q_fibonacci_specializes_to_fibonacci() {
        let mut fib = vec![Integer::from(0), Integer::from(1)];
        for i in 2..=15 {
            let next = &fib[i - 1] + &fib[i - 2];
            fib.push(next);
        }
        for n in 0..=15u32 {
            for variant in [QFibVariant::F, QFibVariant::FPrime] {
                assert_eq!(
                    q_fibonacci(n, variant).eval_at_one(),
                    fib[n as usize],
                    "n={n} {variant:?}"
                );
            }
        }
    }
}
