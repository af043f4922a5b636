//! Exact coefficient fields for the linear-algebra oracle.

use num_rational::Ratio;

/// An exact field. Everything in scope has field-independent
/// representation theory; the default is the rationals, with a prime
/// field available for the independence cross-check.
pub trait Field: Clone + PartialEq + core::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;

    fn from_int(v: i64) -> Self;
}

/// The rationals with exact fraction arithmetic.
pub type Rat = Ratio<i64>;

impl Field for Rat {
    fn zero() -> Self {
        Ratio::new(0, 1)
    }
    fn one() -> Self {
        Ratio::new(1, 1)
    }
    fn is_zero(&self) -> bool {
        *self.numer() == 0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        self.recip()
    }
    fn from_int(v: i64) -> Self {
        Ratio::new(v, 1)
    }
}

/// The prime field F_P.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp<const P: u64>(pub u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        let p = P as i64;
        Fp(v.rem_euclid(p) as u64)
    }

    fn pow(mut self, mut e: u64) -> Self {
        let mut acc = Fp::<P>(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = Field::mul(&acc, &self);
            }
            self = Field::mul(&self, &self);
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        Fp((self.0 + other.0) % P)
    }
    fn sub(&self, other: &Self) -> Self {
        Fp((self.0 + P - other.0) % P)
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(self.0 * other.0 % P)
    }
    fn neg(&self) -> Self {
        Fp((P - self.0) % P)
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "division by zero");
        self.pow(P - 2)
    }
    fn from_int(v: i64) -> Self {
        Fp::new(v)
    }
}

/// F_101, the prime-field backend used by the field-independence checks.
pub type F101 = Fp<101>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_arithmetic() {
        let a = F101::new(45);
        let b = F101::new(-3);
        assert_eq!(b, F101::new(98));
        assert_eq!(Field::mul(&a, &a.inv()), F101::new(1));
        assert_eq!(Field::add(&a, &b), F101::new(42));
    }

    #[test]
    fn rat_arithmetic() {
        let a = <Rat as Field>::from_int(6);
        let h = Field::mul(&a.inv(), &<Rat as Field>::from_int(3));
        assert_eq!(h, Rat::new(1, 2));
    }
}
