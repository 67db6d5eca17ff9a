use serde::Serialize;

use crate::error::{Error, Result};

/// A residue in `0..p`; the modulus is carried by the surrounding [`PrimeField`].
pub type FpScalar = u64;

/// Largest modulus accepted, so that a product of two residues fits in `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

/// The prime field F_p for a prime `3 < p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PrimeField {
    p: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::PrimeTooLarge { p, bound: MAX_MODULUS });
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p <= 3 {
            return Err(Error::PrimeTooSmall(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn p(self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: u64) -> FpScalar {
        x % self.p
    }

    /// Canonical residue of a signed integer.
    #[inline]
    pub fn from_i64(self, x: i64) -> FpScalar {
        x.rem_euclid(self.p as i64) as u64
    }

    /// Symmetric lift of a residue into `(-p/2, p/2]`, used for display.
    pub fn to_signed(self, x: FpScalar) -> i64 {
        if x > self.p / 2 {
            x as i64 - self.p as i64
        } else {
            x as i64
        }
    }

    #[inline]
    pub fn add(self, a: FpScalar, b: FpScalar) -> FpScalar {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: FpScalar, b: FpScalar) -> FpScalar {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: FpScalar) -> FpScalar {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: FpScalar, b: FpScalar) -> FpScalar {
        (a * b) % self.p
    }

    /// `a + b * c`, reduced.
    #[inline]
    pub fn mul_add(self, a: FpScalar, b: FpScalar, c: FpScalar) -> FpScalar {
        (a + b * c) % self.p
    }

    pub fn pow(self, mut base: FpScalar, mut exp: u64) -> FpScalar {
        let mut acc = 1;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat; panics on zero.
    pub fn inv(self, a: FpScalar) -> FpScalar {
        assert!(a % self.p != 0, "zero has no inverse in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn elements(self) -> impl Iterator<Item = FpScalar> {
        0..self.p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_moduli() {
        assert_eq!(PrimeField::new(9), Err(Error::NotPrime(9)));
        assert_eq!(PrimeField::new(3), Err(Error::PrimeTooSmall(3)));
        assert_eq!(PrimeField::new(2), Err(Error::PrimeTooSmall(2)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert!(matches!(
            PrimeField::new((1 << 31) + 11),
            Err(Error::PrimeTooLarge { .. })
        ));
        assert!(PrimeField::new(2_147_483_647).is_ok());
    }

    #[test]
    fn arithmetic_mod_seven() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(5, 4), 2);
        assert_eq!(f.sub(2, 5), 4);
        assert_eq!(f.neg(3), 4);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.to_signed(6), -1);
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn largest_modulus_does_not_overflow() {
        let f = PrimeField::new(2_147_483_647).unwrap();
        let a = f.p() - 1;
        assert_eq!(f.mul(a, a), 1);
        assert_eq!(f.mul_add(a, a, a), 0);
    }
}
