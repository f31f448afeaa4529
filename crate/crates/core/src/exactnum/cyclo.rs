use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex};

use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

use super::{Integer, LaurentPoly, Rational};
use crate::error::{Error, Result};

/// Euler's totient, by trial-division factorization. `n` stays small here
/// (it is a root-of-unity order), so nothing fancier is warranted.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n as u64;
    let mut phi = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi as u32
}

/// Dense polynomial helpers over Integer, low exponent first.
/// Only what the cyclotomic computation needs.
fn dense_trim(p: &mut Vec<Integer>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Exact division of integer polynomials; `b` must be monic and divide `a`.
fn dense_div_exact(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    assert!(b.last().is_some_and(One::is_one), "divisor must be monic");
    let mut rem: Vec<Integer> = a.to_vec();
    let db = b.len() - 1;
    let mut quot = vec![Integer::zero(); a.len().saturating_sub(db)];
    for i in (db..a.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - db] = c.clone();
        for (j, bj) in b.iter().enumerate() {
            rem[i - db + j] -= &c * bj;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    dense_trim(&mut quot);
    quot
}

fn cyclotomic_dense(n: u32) -> Vec<Integer> {
    // q^n - 1 divided by the product of Phi_d over proper divisors d of n.
    let mut num = vec![Integer::zero(); n as usize + 1];
    num[0] = -Integer::one();
    num[n as usize] = Integer::one();
    for d in 1..n {
        if n % d == 0 {
            num = dense_div_exact(&num, &cyclotomic_dense(d));
        }
    }
    num
}

/// The N-th cyclotomic polynomial Phi_N(q): monic, integer coefficients,
/// degree phi(N). Computed by dividing q^N - 1 by the Phi_d of all proper
/// divisors d | N.
pub fn cyclotomic_polynomial(n: u32) -> Result<LaurentPoly> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "cyclotomic polynomial needs N >= 1".into(),
        ));
    }
    let dense = modulus(n);
    Ok(LaurentPoly::from_pairs(
        dense
            .iter()
            .enumerate()
            .map(|(e, c)| (e as i64, c.to_integer())),
    ))
}

/// Process-wide cache of Phi_N with rational coefficients, ready for
/// reduction. Guarded so concurrent readers are safe.
static MODULI: Lazy<Mutex<HashMap<u32, Arc<Vec<Rational>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn modulus(n: u32) -> Arc<Vec<Rational>> {
    let mut cache = MODULI.lock().unwrap();
    cache
        .entry(n)
        .or_insert_with(|| {
            Arc::new(
                cyclotomic_dense(n)
                    .into_iter()
                    .map(Rational::from_integer)
                    .collect(),
            )
        })
        .clone()
}

/// An element of the cyclotomic field Q[q]/Phi_N(q) — the exact home of
/// "q a primitive N-th root of unity". Always stored reduced, as a rational
/// coefficient vector of length phi(N), so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloNumber {
    n: u32,
    coeffs: Vec<Rational>,
}

impl CycloNumber {
    /// Root-of-unity order N of the ambient field.
    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn zero(n: u32) -> Self {
        CycloNumber {
            n,
            coeffs: vec![Rational::zero(); euler_phi(n) as usize],
        }
    }

    pub fn one(n: u32) -> Self {
        Self::monomial(n, 0)
    }

    /// The residue of q^exp; exponents are taken mod N since q^N = 1.
    pub fn monomial(n: u32, exp: i64) -> Self {
        let e = exp.rem_euclid(n as i64) as usize;
        let mut dense = vec![Rational::zero(); e + 1];
        dense[e] = Rational::one();
        Self::reduce(n, dense)
    }

    fn reduce(n: u32, mut dense: Vec<Rational>) -> Self {
        let phi = euler_phi(n) as usize;
        if dense.len() > phi {
            let m = modulus(n);
            for i in (phi..dense.len()).rev() {
                if dense[i].is_zero() {
                    continue;
                }
                let c = std::mem::replace(&mut dense[i], Rational::zero());
                for (j, mj) in m.iter().enumerate().take(phi) {
                    dense[i - phi + j] -= &c * mj;
                }
            }
        }
        dense.resize(phi, Rational::zero());
        CycloNumber { n, coeffs: dense }
    }

    /// Maps a Laurent polynomial into Q[q]/Phi_N: exponents reduce mod N
    /// (q is invertible), then the residue reduces mod Phi_N. This is a
    /// ring homomorphism.
    pub fn from_laurent(p: &LaurentPoly, n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(
                "root-of-unity reduction needs N >= 2".into(),
            ));
        }
        let mut dense = vec![Rational::zero(); n as usize];
        for (e, c) in p.terms() {
            let idx = e.rem_euclid(n as i64) as usize;
            dense[idx] += Rational::from_integer(c.clone());
        }
        Ok(Self::reduce(n, dense))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.first().is_some_and(One::is_one)
            && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Reduced coefficient vector (degree < phi(N)).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn check_orders(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::MixedOrders {
                left: self.n,
                right: other.n,
            })
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against
    /// Phi_N. Fails only on zero; Phi_N is irreducible over Q, so every
    /// nonzero residue is a unit.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero { n: self.n });
        }
        let deg = |p: &[Rational]| p.iter().rposition(|c| !c.is_zero());

        let mut r0: Vec<Rational> = modulus(self.n).as_ref().clone();
        let mut r1 = self.coeffs.clone();
        let mut s0 = vec![Rational::zero()];
        let mut s1 = vec![Rational::one()];

        while deg(&r1).expect("gcd chain hit zero before a constant") > 0 {
            let d1 = deg(&r1).unwrap();
            let lead1 = r1[d1].clone();
            let mut quot = vec![Rational::zero(); r0.len().saturating_sub(d1)];
            while let Some(d0) = deg(&r0) {
                if d0 < d1 {
                    break;
                }
                let f = &r0[d0] / &lead1;
                quot[d0 - d1] = f.clone();
                for (j, c) in r1.iter().enumerate().take(d1 + 1) {
                    r0[d0 - d1 + j] -= &f * c;
                }
                r0[d0] = Rational::zero(); // clear residual round-off-free term
            }
            // s_new = s0 - quot * s1
            let mut s_new = s0.clone();
            s_new.resize(s_new.len().max(quot.len() + s1.len() - 1), Rational::zero());
            for (i, qc) in quot.iter().enumerate() {
                if qc.is_zero() {
                    continue;
                }
                for (j, sc) in s1.iter().enumerate() {
                    s_new[i + j] -= qc * sc;
                }
            }
            std::mem::swap(&mut r0, &mut r1);
            r1.truncate(deg(&r1).map_or(0, |d| d + 1));
            s0 = std::mem::replace(&mut s1, s_new);
        }
        let c = r1[deg(&r1).unwrap()].clone();
        let inv: Vec<Rational> = s1.iter().map(|x| x / &c).collect();
        Ok(Self::reduce(self.n, inv))
    }
}

impl Add for &CycloNumber {
    type Output = CycloNumber;

    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        self.check_orders(rhs).expect("cyclotomic order mismatch");
        CycloNumber {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CycloNumber {
    type Output = CycloNumber;

    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        self.check_orders(rhs).expect("cyclotomic order mismatch");
        CycloNumber {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &CycloNumber {
    type Output = CycloNumber;

    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        self.check_orders(rhs).expect("cyclotomic order mismatch");
        if self.is_zero() || rhs.is_zero() {
            return CycloNumber::zero(self.n);
        }
        let mut dense = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    dense[i + j] += a * b;
                }
            }
        }
        CycloNumber::reduce(self.n, dense)
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;

    fn neg(self) -> CycloNumber {
        CycloNumber {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !mag.is_one() || e == 0 {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_pairs(pairs.iter().map(|&(e, c)| (e, Integer::from(c))))
    }

    #[test]
    fn small_cyclotomics_match_known_table() {
        let known: &[(u32, &[(i64, i64)])] = &[
            (1, &[(0, -1), (1, 1)]),
            (2, &[(0, 1), (1, 1)]),
            (3, &[(0, 1), (1, 1), (2, 1)]),
            (4, &[(0, 1), (2, 1)]),
            (5, &[(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)]),
            (6, &[(0, 1), (1, -1), (2, 1)]),
            (8, &[(0, 1), (4, 1)]),
            (9, &[(0, 1), (3, 1), (6, 1)]),
            (10, &[(0, 1), (1, -1), (2, 1), (3, -1), (4, 1)]),
            (12, &[(0, 1), (2, -1), (4, 1)]),
        ];
        for (n, pairs) in known {
            assert_eq!(cyclotomic_polynomial(*n).unwrap(), lp(pairs), "Phi_{n}");
        }
        assert!(cyclotomic_polynomial(0).is_err());
    }

    #[test]
    fn product_over_divisors_is_q_to_n_minus_one() {
        for n in 1..=30u32 {
            let mut prod = LaurentPoly::one();
            for d in 1..=n {
                if n % d == 0 {
                    prod = &prod * &cyclotomic_polynomial(d).unwrap();
                }
            }
            let expect = lp(&[(0, -1), (n as i64, 1)]);
            assert_eq!(prod, expect, "divisor product at n={n}");
        }
    }

    #[test]
    fn degree_is_totient() {
        for n in 1..=24u32 {
            assert_eq!(
                cyclotomic_polynomial(n).unwrap().max_exp(),
                Some(euler_phi(n) as i64)
            );
        }
    }

    #[test]
    fn reduction_examples() {
        // q^3 at N=3 is 1
        let x = CycloNumber::from_laurent(&lp(&[(3, 1)]), 3).unwrap();
        assert!(x.is_one());
        // 1 + q + q^2 at N=3 is 0 (Phi_3 divides it)
        let x = CycloNumber::from_laurent(&lp(&[(0, 1), (1, 1), (2, 1)]), 3).unwrap();
        assert!(x.is_zero());
        // q^-1 at N=4 is q^3 = -q mod q^2+1
        let x = CycloNumber::from_laurent(&lp(&[(-1, 1)]), 4).unwrap();
        let neg_q = -&CycloNumber::monomial(4, 1);
        assert_eq!(x, neg_q);
    }

    #[test]
    fn root_of_unity_inverse() {
        assert!(CycloNumber::one(3).inverse().unwrap().is_one());
        // q * q^2 = q^3 = 1 at N=3
        let q = CycloNumber::monomial(3, 1);
        assert_eq!(q.inverse().unwrap(), CycloNumber::monomial(3, 2));
    }

    #[test]
    fn euclid_inverse_roundtrip() {
        // (1+q) at N=3: invert and check the product is 1.
        let x = CycloNumber::from_laurent(&lp(&[(0, 1), (1, 1)]), 3).unwrap();
        let inv = x.inverse().unwrap();
        assert!((&x * &inv).is_one());
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert!(matches!(
            CycloNumber::zero(5).inverse(),
            Err(Error::DivisionByZero { n: 5 })
        ));
    }

    #[test]
    fn q_is_minus_one_at_order_two() {
        let q = CycloNumber::monomial(2, 1);
        let minus_one = -&CycloNumber::one(2);
        assert_eq!(q, minus_one);
    }
}
