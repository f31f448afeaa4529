//! Reference integer sequences and membership tests for the verifier
//! family classifications. Everything is exact; membership walks the
//! sequence until it passes the queried magnitude.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::Integer;

/// Named reference sequence, by recurrence or closed form:
/// fibonacci, jacobsthal (a(n) = a(n-1) + 2a(n-2)), power2, power3,
/// floor3 = floor(3^n / 2), ceil3 = ceil(3^n / 2).
pub fn reference_sequence(name: &str, n: u32) -> Result<Integer> {
    match name {
        "fibonacci" => Ok(fibonacci(n)),
        "jacobsthal" => Ok(jacobsthal(n)),
        "power2" => Ok(Integer::from(2).pow(n)),
        "power3" => Ok(Integer::from(3).pow(n)),
        "floor3" => Ok(Integer::from(3).pow(n) / 2),
        "ceil3" => Ok((Integer::from(3).pow(n) + 1) / 2),
        other => Err(Error::InvalidParameter(format!(
            "unknown sequence name: {other}"
        ))),
    }
}

pub fn fibonacci(n: u32) -> Integer {
    let (mut a, mut b) = (Integer::zero(), Integer::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

pub fn jacobsthal(n: u32) -> Integer {
    let (mut a, mut b) = (Integer::zero(), Integer::one());
    for _ in 0..n {
        let next = &b + 2 * &a;
        a = std::mem::replace(&mut b, next);
    }
    a
}

pub fn is_fibonacci(v: &Integer) -> bool {
    let target = v.abs();
    let (mut a, mut b) = (Integer::zero(), Integer::one());
    while a < target {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a == target
}

pub fn is_jacobsthal(v: &Integer) -> bool {
    let target = v.abs();
    let (mut a, mut b) = (Integer::zero(), Integer::one());
    while a < target {
        let next = &b + 2 * &a;
        a = std::mem::replace(&mut b, next);
    }
    a == target
}

pub fn is_power_of_two(v: &Integer) -> bool {
    let target = v.abs();
    if target.is_zero() {
        return false;
    }
    let mut p = Integer::one();
    while p < target {
        p *= 2;
    }
    p == target
}

/// Membership in {3^k} or {floor(3^k/2)} or {ceil(3^k/2)}, zero included
/// (floor(3^0 / 2) = 0).
pub fn is_in_power3_halves(v: &Integer) -> bool {
    let target = v.abs();
    let mut p = Integer::one();
    loop {
        let floor = &p / 2;
        let ceil = (&p + 1) / 2;
        if target == p || target == floor || target == ceil {
            return true;
        }
        if floor > target {
            return false;
        }
        p *= 3;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    #[test]
    fn jacobsthal_prefix() {
        let want = [0i64, 1, 1, 3, 5, 11, 21];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(reference_sequence("jacobsthal", n as u32).unwrap(), int(*w));
        }
    }

    #[test]
    fn fibonacci_and_power_families() {
        assert_eq!(reference_sequence("fibonacci", 6).unwrap(), int(8));
        assert_eq!(reference_sequence("floor3", 3).unwrap(), int(13));
        assert_eq!(reference_sequence("ceil3", 3).unwrap(), int(14));
        assert_eq!(reference_sequence("power2", 10).unwrap(), int(1024));
        assert!(reference_sequence("nope", 1).is_err());
    }

    #[test]
    fn membership_tests() {
        for v in [0i64, 1, 2, 3, 5, 8, 13, 21, 34] {
            assert!(is_fibonacci(&int(v)), "{v}");
            assert!(is_fibonacci(&int(-v)), "-{v}");
        }
        for v in [4i64, 6, 7, 9, 100] {
            assert!(!is_fibonacci(&int(v)), "{v}");
        }
        for v in [0i64, 1, 3, 5, 11, 21, 43] {
            assert!(is_jacobsthal(&int(v)), "{v}");
        }
        assert!(!is_jacobsthal(&int(7)));
        assert!(is_power_of_two(&int(-64)));
        assert!(!is_power_of_two(&int(0)));
        assert!(!is_power_of_two(&int(12)));
        // 3^k: 1 3 9 27; floors: 0 1 4 13; ceils: 1 2 5 14
        for v in [0i64, 1, 2, 3, 4, 5, 9, 13, 14, 27, 40, 41, 81] {
            assert!(is_in_power3_halves(&int(v)), "{v}");
        }
        for v in [6i64, 7, 8, 10, 15, 26, 28, 39, 42] {
            assert!(!is_in_power3_halves(&int(v)), "{v}");
        }
    }
}
