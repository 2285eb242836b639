//! Exact arithmetic in cyclotomic integer rings Z[z], z a primitive m-th
//! root of unity.
//!
//! Values are stored as integer coefficient vectors over the redundant basis
//! 1, z, z^2, ..., z^(m-1). Arithmetic is convolution with exponents mod m;
//! equality and integer-recognition go through reduction modulo the m-th
//! cyclotomic polynomial, which is exact integer polynomial division because
//! the divisor is monic. Character values computed from eigenvalue
//! multiplicities live naturally in this representation.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Cyclotomic polynomial cache, keyed by order.
fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of the m-th cyclotomic polynomial, ascending degree, monic.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<i64>> {
    if let Some(hit) = cyclotomic_cache().lock().unwrap().get(&m) {
        return Arc::clone(hit);
    }
    // x^m - 1 divided by the cyclotomic polynomials of all proper divisors.
    let mut num: Vec<i64> = vec![0; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    let result = Arc::new(num);
    cyclotomic_cache().lock().unwrap().insert(m, Arc::clone(&result));
    result
}

/// Exact division of integer polynomials; the divisor must be monic and the
/// remainder must vanish.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    assert_eq!(*den.last().unwrap(), 1, "divisor must be monic");
    let mut rem: Vec<i128> = num.iter().map(|&c| c as i128).collect();
    let dn = den.len() - 1;
    let qn = num.len() - 1 - dn;
    let mut quot = vec![0i64; qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn];
        quot[k] = i64::try_from(c).expect("quotient coefficient overflow");
        for i in 0..=dn {
            rem[k + i] -= c * den[i] as i128;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "division must be exact");
    quot
}

/// Euler totient of `m`.
pub fn euler_phi(m: u32) -> u32 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            result = result / p * (p - 1);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        result = result / n * (n - 1);
    }
    result
}

/// An element of Z[z], z = exp(2*pi*i/m), as coefficients over 1..z^(m-1).
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<i64>,
}

impl Cyclotomic {
    pub fn zero(order: u32) -> Self {
        assert!(order >= 1);
        Cyclotomic { order, coeffs: vec![0; order as usize] }
    }

    pub fn integer(order: u32, value: i64) -> Self {
        let mut c = Self::zero(order);
        c.coeffs[0] = value;
        c
    }

    /// `z^k` (exponent taken mod m).
    pub fn root_power(order: u32, k: u32) -> Self {
        let mut c = Self::zero(order);
        c.coeffs[(k % order) as usize] = 1;
        c
    }

    /// Builds a value directly from coefficients over 1..z^(m-1).
    pub fn from_coeffs(order: u32, coeffs: Vec<i64>) -> Self {
        assert_eq!(coeffs.len(), order as usize);
        Cyclotomic { order, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Raw coefficients in the redundant root-power basis.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| a.checked_add(b).expect("cyclotomic overflow"))
            .collect();
        Cyclotomic { order: self.order, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| a.checked_sub(b).expect("cyclotomic overflow"))
            .collect();
        Cyclotomic { order: self.order, coeffs }
    }

    pub fn scale(&self, s: i64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| a.checked_mul(s).expect("cyclotomic overflow"))
            .collect();
        Cyclotomic { order: self.order, coeffs }
    }

    /// Product; convolution of exponents mod m, sparse in the left factor.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        let m = self.order as usize;
        let mut acc = vec![0i128; m];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let a = a as i128;
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let mut t = i + j;
                if t >= m {
                    t -= m;
                }
                acc[t] += a * b as i128;
            }
        }
        let coeffs =
            acc.into_iter().map(|c| i64::try_from(c).expect("cyclotomic overflow")).collect();
        Cyclotomic { order: self.order, coeffs }
    }

    /// Complex conjugate: z^k maps to z^(m-k).
    pub fn conj(&self) -> Self {
        let m = self.order as usize;
        let mut coeffs = vec![0i64; m];
        coeffs[0] = self.coeffs[0];
        for k in 1..m {
            coeffs[m - k] = self.coeffs[k];
        }
        Cyclotomic { order: self.order, coeffs }
    }

    /// Canonical form: remainder modulo the m-th cyclotomic polynomial.
    /// Length is phi(m); two values are equal iff their reductions agree.
    pub fn reduced(&self) -> Vec<i64> {
        let phi = cyclotomic_polynomial(self.order);
        let d = phi.len() - 1;
        let mut rem: Vec<i128> = self.coeffs.iter().map(|&c| c as i128).collect();
        for k in (d..rem.len()).rev() {
            let c = rem[k];
            if c == 0 {
                continue;
            }
            rem[k] = 0;
            for i in 0..d {
                let delta = c.checked_mul(phi[i] as i128).expect("cyclotomic overflow");
                rem[k - d + i] = rem[k - d + i].checked_sub(delta).expect("cyclotomic overflow");
            }
        }
        rem.truncate(d.max(1));
        rem.into_iter().map(|c| i64::try_from(c).expect("cyclotomic overflow")).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().iter().all(|&c| c == 0)
    }

    /// Recognizes rational integers exactly.
    pub fn as_integer(&self) -> Option<i64> {
        let r = self.reduced();
        if r[1..].iter().all(|&c| c == 0) {
            Some(r[0])
        } else {
            None
        }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.sub(other).is_zero()
    }
}
impl Eq for Cyclotomic {}

impl std::fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(n) = self.as_integer() {
            return write!(f, "{n}");
        }
        let r = self.reduced();
        let mut first = true;
        for (k, &c) in r.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.unsigned_abs();
            if !first {
                write!(f, " {sign} ")?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            match (k, mag) {
                (0, v) => write!(f, "{v}")?,
                (1, 1) => write!(f, "z")?,
                (1, v) => write!(f, "{v}z")?,
                (_, 1) => write!(f, "z^{k}")?,
                (_, v) => write!(f, "{v}z^{k}")?,
            }
            first = false;
        }
        write!(f, "  (z = primitive root of order {})", self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi_coeffs(m: u32) -> Vec<i64> {
        cyclotomic_polynomial(m).as_ref().clone()
    }

    #[test]
    fn classical_cyclotomic_polynomials() {
        assert_eq!(phi_coeffs(1), vec![-1, 1]);
        assert_eq!(phi_coeffs(2), vec![1, 1]);
        assert_eq!(phi_coeffs(3), vec![1, 1, 1]);
        assert_eq!(phi_coeffs(4), vec![1, 0, 1]);
        assert_eq!(phi_coeffs(6), vec![1, -1, 1]);
        assert_eq!(phi_coeffs(12), vec![1, 0, -1, 0, 1]);
        // First order with a coefficient of magnitude 2 is 105 (at x^7).
        assert_eq!(phi_coeffs(105)[7], -2);
    }

    #[test]
    fn totient_matches_degree() {
        for m in 1..=120u32 {
            assert_eq!(phi_coeffs(m).len() as u32 - 1, euler_phi(m), "order {m}");
        }
    }

    #[test]
    fn full_root_sums_vanish() {
        for m in 2..=30u32 {
            let mut s = Cyclotomic::zero(m);
            for k in 0..m {
                s = s.add(&Cyclotomic::root_power(m, k));
            }
            assert!(s.is_zero(), "sum of all order-{m} roots must vanish");
            assert_eq!(s.as_integer(), Some(0));
        }
    }

    #[test]
    fn golden_ratio_relation() {
        // a = -(z^2 + z^3) over the 5th roots equals (1 + sqrt 5)/2, so
        // a^2 - a - 1 = 0 exactly.
        let a = Cyclotomic::root_power(5, 2).add(&Cyclotomic::root_power(5, 3)).scale(-1);
        let rel = a.mul(&a).sub(&a).sub(&Cyclotomic::integer(5, 1));
        assert!(rel.is_zero());
        assert_eq!(a.as_integer(), None);
    }

    #[test]
    fn conjugation_is_an_involution_and_fixes_norms() {
        let v = Cyclotomic::root_power(7, 3).add(&Cyclotomic::integer(7, 2));
        assert_eq!(v.conj().conj(), v);
        let norm = v.mul(&v.conj());
        // (2 + z^3)(2 + z^-3) = 5 + 2(z^3 + z^-3): not an integer.
        assert_eq!(norm.as_integer(), None);
        assert_eq!(norm.sub(&norm.conj()).as_integer(), Some(0));
    }

    #[test]
    fn multiplication_agrees_with_reduction_order() {
        let a = Cyclotomic::root_power(12, 7).add(&Cyclotomic::integer(12, 3));
        let b = Cyclotomic::root_power(12, 9).sub(&Cyclotomic::root_power(12, 2));
        let c = Cyclotomic::root_power(12, 5);
        let left = a.mul(&b).mul(&c);
        let right = a.mul(&b.mul(&c));
        assert_eq!(left, right);
        assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn integer_recognition() {
        assert_eq!(Cyclotomic::integer(9, -17).as_integer(), Some(-17));
        assert_eq!(Cyclotomic::root_power(9, 4).as_integer(), None);
        // z^2 * z^7 = z^9 = 1 over the 9th roots.
        let v = Cyclotomic::root_power(9, 2).mul(&Cyclotomic::root_power(9, 7));
        assert_eq!(v.as_integer(), Some(1));
    }
}
