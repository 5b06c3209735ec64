//! Exact arithmetic in the cyclotomic fields `Q(w)`, `w = exp(2*pi*i/s)`.
//!
//! Elements are polynomials in `w` reduced modulo the `s`-th cyclotomic
//! polynomial, so two elements of the same order are equal exactly when their
//! coefficient vectors agree. Rationals live in order 1 and embed into every
//! other order; mixed-order arithmetic happens in the field of order
//! `lcm(s, t)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_integer::Integer;
use num_rational::BigRational;
use once_cell::sync::Lazy;

use super::ring::{rational_text, Field, Ring};
use super::unipoly::UniPoly;

static CYCLOTOMIC_CACHE: Lazy<RwLock<HashMap<u32, Arc<UniPoly<BigRational>>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// The `s`-th cyclotomic polynomial, computed by dividing `x^s - 1` by every
/// `Phi_d` with `d | s`, `d < s`.
pub fn cyclotomic_polynomial(s: u32) -> Arc<UniPoly<BigRational>> {
    assert!(s >= 1, "cyclotomic order must be positive");
    if let Some(p) = CYCLOTOMIC_CACHE.read().unwrap().get(&s) {
        return p.clone();
    }
    let mut poly = UniPoly::monomial(BigRational::one(), s as usize)
        .sub(&UniPoly::constant(BigRational::one()));
    for d in 1..s {
        if s.is_multiple_of(d) {
            let (q, r) = poly
                .div_rem(&cyclotomic_polynomial(d))
                .expect("cyclotomic polynomials are monic");
            debug_assert!(r.is_zero());
            poly = q;
        }
    }
    let poly = Arc::new(poly);
    CYCLOTOMIC_CACHE.write().unwrap().insert(s, poly.clone());
    poly
}

/// Euler's totient, the degree of `Q(w_s)` over `Q`.
pub fn totient(s: u32) -> u32 {
    (1..=s).filter(|k| k.gcd(&s) == 1).count() as u32
}

/// An element of `Q(w_s)` in the power basis `1, w, ..., w^(phi(s)-1)`.
#[derive(Clone)]
pub struct CyclotomicScalar {
    order: u32,
    value: UniPoly<BigRational>,
}

impl CyclotomicScalar {
    /// Reduces an arbitrary polynomial in `w_order` into canonical form.
    pub fn from_poly(order: u32, poly: UniPoly<BigRational>) -> Self {
        let phi = cyclotomic_polynomial(order);
        let value = poly.rem(&phi).expect("cyclotomic polynomials are nonzero");
        CyclotomicScalar { order, value }
    }

    /// Builds `sum c_k w^k` from coefficients in any length.
    pub fn from_coeffs(order: u32, coeffs: Vec<BigRational>) -> Self {
        Self::from_poly(order, UniPoly::new(coeffs))
    }

    pub fn rational(q: BigRational) -> Self {
        CyclotomicScalar {
            order: 1,
            value: UniPoly::constant(q),
        }
    }

    /// `w_s^k`, exponent taken modulo `s`.
    pub fn omega_pow(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        Self::from_poly(order, UniPoly::monomial(BigRational::one(), e))
    }

    pub fn omega(order: u32) -> Self {
        Self::omega_pow(order, 1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficient vector of length `phi(order)`.
    pub fn coefficients(&self) -> Vec<BigRational> {
        let n = totient(self.order) as usize;
        (0..n).map(|k| self.value.coeff(k)).collect()
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.value.degree() {
            None => Some(BigRational::from_integer(0.into())),
            Some(0) => Some(self.value.coeff(0)),
            Some(_) => None,
        }
    }

    /// Re-expresses the element in `Q(w_target)`; `order` must divide `target`.
    pub fn embed(&self, target: u32) -> Self {
        assert!(
            target.is_multiple_of(self.order),
            "cannot embed order {} into order {}",
            self.order,
            target
        );
        if target == self.order {
            return self.clone();
        }
        let step = (target / self.order) as usize;
        Self::from_poly(target, self.value.inflate(step))
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            return (self.clone(), other.clone());
        }
        // rationals are order 1 and embed without reduction work
        if other.order == 1 {
            return (
                self.clone(),
                CyclotomicScalar {
                    order: self.order,
                    value: other.value.clone(),
                },
            );
        }
        if self.order == 1 {
            return (
                CyclotomicScalar {
                    order: other.order,
                    value: self.value.clone(),
                },
                other.clone(),
            );
        }
        let l = self.order.lcm(&other.order);
        (self.embed(l), other.embed(l))
    }

    /// Complex conjugation, `w -> w^-1`.
    pub fn conjugate(&self) -> Self {
        let s = self.order as usize;
        let mut v = vec![BigRational::from_integer(0.into()); s.max(1)];
        for (k, c) in self.value.coeffs().iter().enumerate() {
            let e = (s - k % s) % s;
            v[e] = &v[e] + c;
        }
        Self::from_coeffs(self.order, v)
    }

    /// Hashable canonical key at this element's own order.
    pub fn key(&self) -> (u32, Vec<BigRational>) {
        (self.order, self.coefficients())
    }
}

impl PartialEq for CyclotomicScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.value == other.value;
        }
        let (a, b) = self.aligned(other);
        a.value == b.value
    }
}

impl Eq for CyclotomicScalar {}

impl fmt::Debug for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (k, c) in self.value.coeffs().iter().enumerate() {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            parts.push(match k {
                0 => rational_text(c),
                1 => format!("{} * w{}", rational_text(c), self.order),
                _ => format!("{} * w{}^{}", rational_text(c), self.order, k),
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl Ring for CyclotomicScalar {
    fn zero() -> Self {
        CyclotomicScalar {
            order: 1,
            value: UniPoly::zero(),
        }
    }
    fn one() -> Self {
        Self::rational(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        CyclotomicScalar {
            order: a.order,
            value: a.value.add(&b.value),
        }
    }
    fn minus(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        CyclotomicScalar {
            order: a.order,
            value: a.value.sub(&b.value),
        }
    }
    fn times(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        if a.order == 1 {
            return CyclotomicScalar {
                order: 1,
                value: a.value.mul(&b.value),
            };
        }
        Self::from_poly(a.order, a.value.mul(&b.value))
    }
    fn negate(&self) -> Self {
        CyclotomicScalar {
            order: self.order,
            value: self.value.scale(&BigRational::from_integer((-1).into())),
        }
    }
    fn from_i64(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        self.divide(other)
    }
}

impl Field for CyclotomicScalar {
    fn inv(&self) -> Option<Self> {
        if self.value.is_zero() {
            return None;
        }
        if self.order == 1 || self.value.degree() == Some(0) {
            let c = self.value.coeff(0);
            return Some(CyclotomicScalar {
                order: self.order,
                value: UniPoly::constant(c.recip()),
            });
        }
        let phi = cyclotomic_polynomial(self.order);
        let (g, s, _) = self.value.xgcd(&phi);
        // Phi_s is irreducible, so any nonzero reduced element is coprime to it
        debug_assert_eq!(g.degree(), Some(0));
        Some(Self::from_poly(self.order, s))
    }
}

impl From<BigRational> for CyclotomicScalar {
    fn from(q: BigRational) -> Self {
        Self::rational(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::{rat, ratio};

    fn int_coeffs(p: &UniPoly<BigRational>) -> Vec<i64> {
        p.coeffs()
            .iter()
            .map(|c| c.numer().try_into().unwrap())
            .collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(int_coeffs(&cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(int_coeffs(&cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(int_coeffs(&cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(int_coeffs(&cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(int_coeffs(&cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
        for s in 1..=30 {
            assert_eq!(
                cyclotomic_polynomial(s).degree(),
                Some(totient(s) as usize)
            );
        }
    }

    #[test]
    fn omega_has_exact_order() {
        for s in 1..=12u32 {
            let w = CyclotomicScalar::omega(s);
            assert!(w.pow(s).is_one(), "w^{s} != 1");
            for k in 1..s {
                assert!(!w.pow(k).is_one());
            }
        }
    }

    #[test]
    fn power_sums_of_roots_of_unity() {
        for s in 1..=12u32 {
            for m in 0..(2 * s as i64) {
                let total = (0..s as i64).fold(CyclotomicScalar::zero(), |acc, k| {
                    acc.plus(&CyclotomicScalar::omega_pow(s, k * m))
                });
                let expected = if m % s as i64 == 0 { s as i64 } else { 0 };
                assert_eq!(total, CyclotomicScalar::from_i64(expected), "s={s} m={m}");
            }
        }
    }

    #[test]
    fn inverse_round_trip() {
        let x = CyclotomicScalar::from_coeffs(7, vec![rat(1), rat(2), ratio(-3, 5), rat(0), rat(4)]);
        let y = x.inv().unwrap();
        assert!(x.times(&y).is_one());
        assert!(CyclotomicScalar::zero().inv().is_none());
    }

    #[test]
    fn mixed_order_arithmetic() {
        // w_6^2 = w_3
        assert_eq!(CyclotomicScalar::omega_pow(6, 2), CyclotomicScalar::omega(3));
        // w_4 * w_3 = w_12^7
        assert_eq!(
            CyclotomicScalar::omega(4).times(&CyclotomicScalar::omega(3)),
            CyclotomicScalar::omega_pow(12, 7)
        );
        assert_eq!(CyclotomicScalar::omega(2), CyclotomicScalar::from_i64(-1));
    }

    #[test]
    fn conjugation_inverts_roots() {
        let w = CyclotomicScalar::omega(5);
        assert!(w.times(&w.conjugate()).is_one());
    }
}
