//! The quantum exterior algebra on generators x_1, ..., x_M with
//!
//! ```text
//!   x_i^2 = 0,     x_i x_j = q x_j x_i  (i > j),     q^N = 1.
//! ```
//!
//! Squarefree ascending monomials x_{i_1} x_{i_2} ... x_{i_k} form a basis
//! of the degree-k piece, so dimensions are binomial. Left multiplication
//! by sigma = x_1 + ... + x_M is the building block of every differential;
//! at q a primitive N-th root of unity it satisfies sigma^N = 0.

use std::collections::HashMap;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactnum::{CycloNumber, Integer, LaurentPoly};

use super::matrix::SparseMat;

/// Generator count and nilpotency order of a quantum exterior algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    /// Number of generators M (written 2n in the central applications).
    pub generators: u32,
    /// Root-of-unity order N; sigma^N = 0 holds at this order.
    pub order: u32,
}

/// The degree-k graded piece: all k-subsets of {1, ..., M} in lexicographic
/// order, standing for the ascending monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPiece {
    generators: u32,
    degree: i64,
    basis: Vec<Vec<u32>>,
}

impl GradedPiece {
    pub fn generators(&self) -> u32 {
        self.generators
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }
}

/// The degree-k basis; out-of-range k gives the zero piece (empty basis).
pub fn basis(generators: u32, degree: i64) -> GradedPiece {
    let mut subsets = Vec::new();
    if (0..=generators as i64).contains(&degree) {
        let k = degree as u32;
        let mut current: Vec<u32> = (1..=k).collect();
        loop {
            subsets.push(current.clone());
            // advance to the next k-subset in lexicographic order
            let mut i = k as i64 - 1;
            while i >= 0 && current[i as usize] == generators - (k - 1 - i as u32) {
                i -= 1;
            }
            if i < 0 {
                break;
            }
            current[i as usize] += 1;
            for j in (i as usize + 1)..k as usize {
                current[j] = current[j - 1] + 1;
            }
        }
    }
    GradedPiece {
        generators,
        degree,
        basis: subsets,
    }
}

/// Matrix of left multiplication by sigma = x_1 + ... + x_M from the
/// degree-k piece to degree k+1, over Q(zeta_order).
///
/// Moving x_i rightward into an ascending monomial crosses every smaller
/// index once, so the entry for S -> S + {i} is q^{#{j in S : j < i}}, and
/// x_i^2 = 0 kills the rest. At order 2 (q = -1) these are the classical
/// exterior-differential signs.
pub fn sigma_matrix(generators: u32, degree: u32, order: u32) -> SparseMat {
    let source = basis(generators, degree as i64);
    let target = basis(generators, degree as i64 + 1);
    let index: HashMap<&[u32], usize> = target
        .basis()
        .iter()
        .enumerate()
        .map(|(r, t)| (t.as_slice(), r))
        .collect();
    let mut mat = SparseMat::zero(order, target.dim(), source.dim());
    for (c, subset) in source.basis().iter().enumerate() {
        for i in 1..=generators {
            if subset.binary_search(&i).is_ok() {
                continue;
            }
            let mut extended = subset.clone();
            let pos = extended.partition_point(|&j| j < i);
            extended.insert(pos, i);
            let crossings = pos as i64; // elements of S smaller than i
            let row = index[extended.as_slice()];
            mat.push_entry(row, c, CycloNumber::monomial(order, crossings));
        }
    }
    mat
}

/// Checks (x_1 + ... + x_M)^order = 0: the composite of sigma over `order`
/// consecutive degrees must vanish from every starting degree.
pub fn check_nilpotent(generators: u32, order: u32, budget: u64) -> Result<bool> {
    let max_dim = (0..=generators)
        .map(|k| basis(generators, k as i64).dim() as u64)
        .max()
        .unwrap_or(0);
    if max_dim > budget {
        return Err(Error::BudgetExceeded {
            what: "matrix",
            size: max_dim,
            budget,
        });
    }
    for start in 0..=generators.saturating_sub(order) {
        let mut product = sigma_matrix(generators, start, order);
        for step in 1..order {
            product = sigma_matrix(generators, start + step, order).multiply(&product);
        }
        if !product.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Graded q-dimension of the degree-k piece: each ascending monomial
/// x_{i_1} ... x_{i_k} weighs prod_j q^{i_j - j}, summed over the basis.
/// Equals the Gaussian binomial [M, k]_q.
pub fn graded_qdim(generators: u32, degree: i64) -> LaurentPoly {
    let piece = basis(generators, degree);
    LaurentPoly::from_pairs(piece.basis().iter().map(|subset| {
        let weight: i64 = subset
            .iter()
            .enumerate()
            .map(|(j, i)| *i as i64 - (j as i64 + 1))
            .sum();
        (weight, Integer::one())
    }))
}

static QDIM_CACHE: once_cell::sync::Lazy<std::sync::Mutex<HashMap<(u32, i64), LaurentPoly>>> =
    once_cell::sync::Lazy::new(|| std::sync::Mutex::new(HashMap::new()));

/// Memoized [`graded_qdim`]; the exponent scans reuse the same pieces
/// thousands of times.
pub(crate) fn graded_qdim_cached(generators: u32, degree: i64) -> LaurentPoly {
    if let Some(hit) = QDIM_CACHE.lock().unwrap().get(&(generators, degree)) {
        return hit.clone();
    }
    let value = graded_qdim(generators, degree);
    QDIM_CACHE
        .lock()
        .unwrap()
        .insert((generators, degree), value.clone());
    value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangles::q_binomial;

    #[test]
    fn basis_examples() {
        let b = basis(3, 1);
        assert_eq!(b.basis(), &[vec![1], vec![2], vec![3]]);
        let b = basis(4, 2);
        assert_eq!(b.dim(), 6);
        assert_eq!(b.basis()[0], vec![1, 2]);
        assert_eq!(b.basis()[5], vec![3, 4]);
        assert_eq!(basis(4, 5).dim(), 0);
        assert_eq!(basis(4, -1).dim(), 0);
        assert_eq!(basis(4, 0).dim(), 1);
    }

    #[test]
    fn sigma_from_scalars_has_unit_entries() {
        let m = sigma_matrix(2, 0, 3);
        assert_eq!(m.rows(), 2);
        assert_eq!(m.cols(), 1);
        assert!(m.entry(0, 0).is_one());
        assert!(m.entry(1, 0).is_one());
    }

    #[test]
    fn sigma_commutation_entries_by_hand() {
        // M = 2, k = 1: sigma(x_1) = x_2 x_1 = q x_1 x_2, sigma(x_2) = x_1 x_2
        let m = sigma_matrix(2, 1, 3);
        assert_eq!(m.rows(), 1);
        assert_eq!(m.cols(), 2);
        assert_eq!(m.entry(0, 0), CycloNumber::monomial(3, 1));
        assert!(m.entry(0, 1).is_one());
    }

    #[test]
    fn sigma_at_order_two_is_koszul_differential() {
        // q = -1: entry for S -> S + {i} must be (-1)^{#{j in S: j < i}}
        let m = sigma_matrix(4, 2, 2);
        let src = basis(4, 2);
        let tgt = basis(4, 3);
        for (c, s) in src.basis().iter().enumerate() {
            for (r, t) in tgt.basis().iter().enumerate() {
                let e = m.entry(r, c);
                let extra: Vec<u32> = t.iter().copied().filter(|i| !s.contains(i)).collect();
                if extra.len() == 1 && t.len() == s.len() + 1 {
                    let i = extra[0];
                    let sign = s.iter().filter(|&&j| j < i).count();
                    let expect = if sign % 2 == 0 {
                        CycloNumber::one(2)
                    } else {
                        -&CycloNumber::one(2)
                    };
                    assert_eq!(e, expect);
                } else {
                    assert!(e.is_zero());
                }
            }
        }
    }

    #[test]
    fn nilpotency_small_cases() {
        assert!(check_nilpotent(4, 2, 10_000).unwrap());
        assert!(check_nilpotent(8, 3, 10_000).unwrap());
        assert!(check_nilpotent(6, 5, 10_000).unwrap());
    }

    #[test]
    fn nilpotency_budget() {
        assert!(matches!(
            check_nilpotent(12, 3, 100),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn qdim_examples() {
        assert_eq!(graded_qdim(2, 1), q_binomial(2, 1));
        assert_eq!(graded_qdim(4, 2), q_binomial(4, 2));
        assert!(graded_qdim(7, 0).is_zero() == false);
        assert_eq!(graded_qdim(7, 0), LaurentPoly::one());
    }

    #[test]
    fn qdim_is_gaussian_binomial() {
        for m in 0..=10u32 {
            for k in 0..=m as i64 {
                assert_eq!(graded_qdim(m, k), q_binomial(m, k), "M={m} k={k}");
            }
        }
    }
}
