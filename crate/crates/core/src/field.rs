//! Arithmetic in the prime field `F_p`.
//!
//! Elements are stored as their canonical residue in `[0, p)`. The modulus
//! lives in [`PrimeField`]; elements carry no modulus of their own, so every
//! operation goes through the field value.

use core::fmt;

use crate::error::ArithmeticError;

/// Default modulus, small enough for `u64` products and large enough that
/// random genericity tests rarely hit a bad draw.
pub const DEFAULT_MODULUS: u32 = 32003;

/// A canonical residue modulo the ambient prime.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    /// Wraps a value already known to be reduced.
    #[inline]
    pub(crate) fn from_raw(v: u32) -> Self {
        FieldElement(v)
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Builds `F_p`, rejecting composite moduli and anything outside `[2, 2^31)`.
    pub fn new(p: u32) -> Result<Self, ArithmeticError> {
        if !(2..1 << 31).contains(&p) || !is_prime(p) {
            return Err(ArithmeticError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Canonical residue of an arbitrary integer.
    #[inline]
    pub fn element(&self, v: i64) -> FieldElement {
        FieldElement(v.rem_euclid(self.p as i64) as u32)
    }

    /// Re-reduces a raw value. Idempotent on canonical residues.
    #[inline]
    pub fn reduce(&self, v: u32) -> FieldElement {
        FieldElement(v % self.p)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let s = a.0 as u64 + b.0 as u64;
        let p = self.p as u64;
        FieldElement(if s >= p { s - p } else { s } as u32)
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 >= b.0 {
            FieldElement(a.0 - b.0)
        } else {
            FieldElement(a.0 + (self.p - b.0))
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if a.0 == 0 {
            a
        } else {
            FieldElement(self.p - a.0)
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32)
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat; `p` is prime.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, ArithmeticError> {
        if a.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        Ok(self.pow(a, self.p as u64 - 2))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, ArithmeticError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Symmetric representative in `(-p/2, p/2]`, used for display.
    pub fn signed(&self, a: FieldElement) -> i64 {
        let v = a.0 as i64;
        if v > self.p as i64 / 2 {
            v - self.p as i64
        } else {
            v
        }
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_MODULUS }
    }
}

/// Deterministic Miller-Rabin; the witness set {2, 3, 5, 7} is exact below 3.2e9.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u32, 3, 5, 7] {
        if n == small {
            return true;
        }
        if n.is_multiple_of(small) {
            return false;
        }
    }
    let n64 = n as u64;
    let mut d = n64 - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= n64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % n64;
            }
            b = b * b % n64;
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = powmod(a, d);
        if x == 1 || x == n64 - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n64;
            if x == n64 - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_examples() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.add(f5.element(2), f5.element(3)), FieldElement::ZERO);
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.div(FieldElement::ONE, f7.element(3)).unwrap(), f7.element(5));
        assert_eq!(f5.div(FieldElement::ONE, FieldElement::ZERO), Err(ArithmeticError::DivisionByZero));
    }

    #[test]
    fn rejects_composites() {
        assert_eq!(PrimeField::new(10), Err(ArithmeticError::NotPrime(10)));
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(2147483647).is_ok());
        assert!(PrimeField::new(u32::MAX).is_err());
    }

    #[test]
    fn primality_matches_trial_division() {
        let trial = |n: u32| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        for n in 0..5000 {
            assert_eq!(is_prime(n), trial(n), "n = {n}");
        }
        assert!(is_prime(2147483629));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn field_laws(a in 0u32..32003, b in 0u32..32003, c in 0u32..32003) {
            let f = PrimeField::default();
            let (a, b, c) = (f.reduce(a), f.reduce(b), f.reduce(c));
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.add(a, b), f.add(b, a));
            prop_assert_eq!(f.mul(a, b), f.mul(b, a));
            prop_assert_eq!(f.sub(f.add(a, b), b), a);
            if !a.is_zero() {
                prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
            }
            prop_assert_eq!(f.reduce(a.value()), a);
        }
    }
}
