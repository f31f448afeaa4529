use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Integer;

/// Integer-coefficient Laurent polynomial in the formal variable q.
///
/// Coefficients are kept in a sparse map from exponent to coefficient with
/// no explicitly stored zeros, so two polynomials are equal iff their maps
/// are equal. Exponents are signed machine integers; everything produced by
/// this crate stays far below that limit.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Integer>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, Integer::one())
    }

    /// The single term c * q^exp (zero if c = 0).
    pub fn monomial(exp: i64, coeff: Integer) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly { coeffs }
    }

    /// Builds from (exponent, coefficient) pairs, summing duplicates and
    /// dropping zeros.
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, Integer)>,
    {
        let mut coeffs: BTreeMap<i64, Integer> = BTreeMap::new();
        for (e, c) in pairs {
            let entry = coeffs.entry(e).or_insert_with(Integer::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(&e);
            }
        }
        LaurentPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of q^exp (zero when absent).
    pub fn coeff(&self, exp: i64) -> Integer {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Integer::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Integer)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    /// Sparse serialization: (exponent, coefficient) pairs, ascending.
    pub fn to_pairs(&self) -> Vec<(i64, Integer)> {
        self.coeffs.iter().map(|(e, c)| (*e, c.clone())).collect()
    }

    /// Specialization q -> 1, i.e. the sum of all coefficients.
    pub fn eval_at_one(&self) -> Integer {
        self.coeffs.values().sum()
    }

    /// Substitution q -> q^k (k may be negative; k = 0 collapses to the
    /// coefficient sum).
    pub fn substitute_power(&self, k: i64) -> LaurentPoly {
        if k == 0 {
            return LaurentPoly::monomial(0, self.eval_at_one());
        }
        LaurentPoly::from_pairs(self.coeffs.iter().map(|(e, c)| (e * k, c.clone())))
    }

    /// Multiplication by a single term c * q^exp.
    pub fn mul_monomial(&self, exp: i64, coeff: &Integer) -> LaurentPoly {
        if coeff.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + exp, c * coeff))
                .collect(),
        }
    }

    /// True iff coefficient(e) = coefficient(-e) for all e.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(e, c)| self.coeff(-e) == *c)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &rhs.coeffs {
            let entry = coeffs.entry(*e).or_insert_with(Integer::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(e);
            }
        }
        LaurentPoly { coeffs }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &rhs.coeffs {
            let entry = coeffs.entry(*e).or_insert_with(Integer::zero);
            *entry -= c;
            if entry.is_zero() {
                coeffs.remove(e);
            }
        }
        LaurentPoly { coeffs }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs: BTreeMap<i64, Integer> = BTreeMap::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                let e = e1 + e2;
                let entry = coeffs.entry(e).or_insert_with(Integer::zero);
                *entry += c1 * c2;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            let neg = c < &Integer::zero();
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
            let show_coeff = !mag.is_one() || *e == 0;
            if show_coeff {
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
