//! Prime field arithmetic with a runtime modulus.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default modulus used for every computation unless overridden.
pub const DEFAULT_PRIME: u32 = 32003;

/// Smallest modulus accepted: random data must be "general" with high probability.
pub const MIN_PRIME: u32 = 1 << 14;

/// Canonical residue in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Scalar(pub(crate) u32);

impl Scalar {
    pub const ZERO: Scalar = Scalar(0);
    pub const ONE: Scalar = Scalar(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// The prime field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Field {
    p: u32,
}

impl Default for Field {
    fn default() -> Self {
        Field { p: DEFAULT_PRIME }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    /// Validates `p`: prime, at least 2^14 and below 2^31.
    pub fn new(p: u64) -> Result<Field> {
        if p < MIN_PRIME as u64 || p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Field { p: p as u32 })
    }

    #[inline]
    pub fn prime(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn elem(&self, v: i64) -> Scalar {
        Scalar(v.rem_euclid(self.p as i64) as u32)
    }

    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        let s = a.0 as u64 + b.0 as u64;
        let p = self.p as u64;
        Scalar(if s >= p { s - p } else { s } as u32)
    }

    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        if a.0 >= b.0 {
            Scalar(a.0 - b.0)
        } else {
            Scalar(a.0 + (self.p - b.0))
        }
    }

    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        if a.0 == 0 {
            a
        } else {
            Scalar(self.p - a.0)
        }
    }

    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        Scalar(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32)
    }

    pub fn pow(&self, a: Scalar, mut e: u64) -> Scalar {
        let mut base = a;
        let mut acc = Scalar::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        // extended Euclid on i64
        let (mut t, mut new_t) = (0i64, 1i64);
        let (mut r, mut new_r) = (self.p as i64, a.0 as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        Some(self.elem(t))
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        Scalar(rng.gen_range(0..self.p))
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        Scalar(rng.gen_range(1..self.p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rejects_bad_moduli() {
        assert!(Field::new(32003).is_ok());
        assert!(Field::new(32004).is_err());
        assert!(Field::new(7).is_err());
        assert!(Field::new(65521).is_ok());
        assert!(Field::new((1u64 << 31) - 1).is_ok());
        assert!(Field::new(2147483659).is_err());
    }

    #[test]
    fn field_axioms_on_random_triples() {
        let f = Field::default();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..1000 {
            let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
            assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            assert_eq!(f.add(a, f.neg(a)), Scalar::ZERO);
            assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
            if let Some(ai) = f.inv(a) {
                assert_eq!(f.mul(a, ai), Scalar::ONE);
            } else {
                assert!(a.is_zero());
            }
        }
    }

    #[test]
    fn fermat_little() {
        let f = Field::default();
        let a = f.elem(12345);
        assert_eq!(f.pow(a, f.prime() as u64 - 1), Scalar::ONE);
        assert_eq!(f.elem(-1), Scalar(32002));
    }
}
