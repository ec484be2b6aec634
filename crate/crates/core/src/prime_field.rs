//! Arithmetic in GF(p): the "real" scalars.
//!
//! Besides the ring operations this module carries the quadratic-residue
//! machinery needed for moduli of complex elements: Euler's criterion, the
//! signed modulus `|a|` (which always lands on a residue when p ≡ 3 mod 4)
//! and a canonical square root.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith;
use crate::error::{Error, Result};

/// An odd prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeModulus {
    p: u64,
    supports_complex: bool,
}

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || !arith::is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(PrimeModulus {
            p,
            supports_complex: p % 4 == 3,
        })
    }

    /// Like [`PrimeModulus::new`] but also requires p ≡ 3 (mod 4).
    pub fn complex(p: u64) -> Result<Self> {
        let m = Self::new(p)?;
        m.require_complex()?;
        Ok(m)
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.p
    }

    /// Whether −1 is a non-residue, i.e. GL(p) can be built over this prime.
    #[inline]
    pub fn supports_complex(self) -> bool {
        self.supports_complex
    }

    pub(crate) fn require_complex(self) -> Result<()> {
        if self.supports_complex {
            Ok(())
        } else {
            Err(Error::RequiresComplexPrime(self.p))
        }
    }

    /// Reduces an arbitrary signed integer into the field.
    pub fn elem(self, v: i64) -> FpElement {
        FpElement {
            value: (v as i128).rem_euclid(self.p as i128) as u64,
            modulus: self,
        }
    }

    pub fn from_u64(self, v: u64) -> FpElement {
        FpElement {
            value: v % self.p,
            modulus: self,
        }
    }

    /// Maps the rational `num/den` to `num · den⁻¹ (mod p)`.
    pub fn from_ratio(self, num: i64, den: i64) -> Result<FpElement> {
        Ok(self.elem(num) * self.elem(den).inv()?)
    }

    pub fn zero(self) -> FpElement {
        self.from_u64(0)
    }

    pub fn one(self) -> FpElement {
        self.from_u64(1)
    }

    /// All elements 0, 1, …, p−1 in order.
    pub fn elements(self) -> impl Iterator<Item = FpElement> {
        (0..self.p).map(move |v| self.from_u64(v))
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

/// A canonical residue in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpElement {
    value: u64,
    modulus: PrimeModulus,
}

impl FpElement {
    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    #[inline]
    fn p(self) -> u64 {
        self.modulus.p
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn check(self, rhs: FpElement) -> Result<()> {
        if self.modulus == rhs.modulus {
            Ok(())
        } else {
            Err(Error::ModulusMismatch {
                left: self.p(),
                right: rhs.p(),
            })
        }
    }

    fn with(self, value: u64) -> FpElement {
        FpElement {
            value,
            modulus: self.modulus,
        }
    }

    pub fn try_add(self, rhs: FpElement) -> Result<FpElement> {
        self.check(rhs)?;
        let s = self.value as u128 + rhs.value as u128;
        Ok(self.with((s % self.p() as u128) as u64))
    }

    pub fn try_sub(self, rhs: FpElement) -> Result<FpElement> {
        self.check(rhs)?;
        let s = self.value as u128 + (self.p() - rhs.value) as u128;
        Ok(self.with((s % self.p() as u128) as u64))
    }

    pub fn try_mul(self, rhs: FpElement) -> Result<FpElement> {
        self.check(rhs)?;
        let s = self.value as u128 * rhs.value as u128;
        Ok(self.with((s % self.p() as u128) as u64))
    }

    pub fn inv(self) -> Result<FpElement> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        // Fermat: x^(p-2)
        Ok(self.pow_u(self.p() - 2))
    }

    pub(crate) fn pow_u(self, mut e: u64) -> FpElement {
        let p = self.p() as u128;
        let mut base = self.value as u128;
        let mut acc = 1u128 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        self.with(acc as u64)
    }

    /// `x^e` for any integer exponent; negative exponents go through [`inv`](Self::inv).
    pub fn pow(self, e: i64) -> Result<FpElement> {
        if e < 0 {
            Ok(self.inv()?.pow_u(e.unsigned_abs()))
        } else {
            Ok(self.pow_u(e as u64))
        }
    }

    /// Euler's criterion: `x^((p-1)/2) == 1`.
    pub fn is_quadratic_residue(self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroArgument);
        }
        Ok(self.pow_u((self.p() - 1) / 2).value == 1)
    }

    /// The signed modulus `|x|`: `x` if it is a residue, `−x` otherwise.
    /// `|0| = 0`.
    pub fn modulus_signed(self) -> FpElement {
        match self.is_quadratic_residue() {
            Ok(true) | Err(_) => self,
            Ok(false) => -self,
        }
    }

    /// Square root of a residue, normalized through [`modulus_signed`](Self::modulus_signed)
    /// so the result is single-valued (it is the root that is itself a residue).
    ///
    /// Uses `x^((p+1)/4)`, so p ≡ 3 (mod 4) is required.
    pub fn sqrt_qr(self) -> Result<FpElement> {
        self.modulus.require_complex()?;
        if self.is_zero() {
            return Ok(self);
        }
        if !self.is_quadratic_residue()? {
            return Err(Error::NotAResidue(self.value));
        }
        Ok(self.pow_u((self.p() + 1) / 4).modulus_signed())
    }

    /// Least `k ≥ 1` with `x^k = 1`.
    pub fn multiplicative_order(self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroArgument);
        }
        Ok(arith::order_by_stripping(self.p() - 1, |e| {
            self.pow_u(e).value == 1
        }))
    }
}

impl fmt::Display for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

// Operator forms panic on mismatched moduli; use the `try_*` methods when
// the operands come from untrusted input.
macro_rules! fp_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for FpElement {
            type Output = FpElement;
            #[inline]
            fn $method(self, rhs: FpElement) -> FpElement {
                self.$checked(rhs).expect("GF(p) operands over different moduli")
            }
        }
    };
}

fp_binop!(Add, add, try_add);
fp_binop!(Sub, sub, try_sub);
fp_binop!(Mul, mul, try_mul);

impl Neg for FpElement {
    type Output = FpElement;
    fn neg(self) -> FpElement {
        if self.value == 0 {
            self
        } else {
            self.with(self.p() - self.value)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    // Brute-force oracles, independent of the exponentiation paths.
    fn inv_by_search(x: FpElement) -> u64 {
        let p = x.modulus().get();
        (1..p).find(|y| x.value() * y % p == 1).unwrap()
    }

    fn squares(p: u64) -> Vec<u64> {
        let mut s: Vec<u64> = (1..p).map(|x| x * x % p).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    #[test]
    fn rejects_non_primes() {
        assert_eq!(PrimeModulus::new(2), Err(Error::NotOddPrime(2)));
        assert_eq!(PrimeModulus::new(9), Err(Error::NotOddPrime(9)));
        assert!(PrimeModulus::new(13).is_ok());
        assert!(!gf(13).supports_complex());
        assert!(gf(7).supports_complex());
        assert_eq!(PrimeModulus::complex(5), Err(Error::RequiresComplexPrime(5)));
    }

    #[test]
    fn ring_ops() {
        let f = gf(7);
        assert_eq!((f.elem(3) + f.elem(5)).value(), 1);
        assert_eq!((f.elem(3) * f.elem(5)).value(), 1);
        assert_eq!((-gf(3).elem(1)).value(), 2);
        assert_eq!((f.elem(2) - f.elem(5)).value(), 4);
        assert_eq!(f.elem(-1).value(), 6);
    }

    #[test]
    fn mismatched_moduli() {
        let err = gf(7).elem(1).try_add(gf(11).elem(1)).unwrap_err();
        assert_eq!(err, Error::ModulusMismatch { left: 7, right: 11 });
    }

    #[test]
    fn inverses() {
        let f = gf(7);
        assert_eq!(inv_by_search(f.elem(6)), 6);
        assert_eq!(inv_by_search(f.elem(5)), 3);
        assert_eq!(f.elem(6).inv().unwrap().value(), 6);
        assert_eq!(f.elem(1).inv().unwrap().value(), 1);
        assert_eq!(f.elem(5).inv().unwrap().value(), 3);
        assert_eq!(f.zero().inv(), Err(Error::ZeroInverse));
        for p in [3, 7, 11, 13, 19, 23] {
            for x in gf(p).elements().skip(1) {
                assert_eq!(x.inv().unwrap().value(), inv_by_search(x));
            }
        }
    }

    #[test]
    fn powers() {
        let f = gf(7);
        let three = f.elem(3);
        let repeated = (0..6).fold(f.one(), |acc, _| acc * three);
        assert_eq!(repeated.value(), 1);
        assert_eq!(three.pow(6).unwrap().value(), 1);
        assert_eq!(three.pow(0).unwrap().value(), 1);
        assert_eq!(three.pow(2).unwrap().value(), 2);
        assert_eq!(three.pow(-1).unwrap(), three.inv().unwrap());
        assert_eq!(f.zero().pow(-2), Err(Error::ZeroInverse));
        assert_eq!(f.zero().pow(0).unwrap().value(), 1);
    }

    #[test]
    fn rationals() {
        let f = gf(7);
        // 1/2 = 4 mod 7
        assert_eq!(f.from_ratio(1, 2).unwrap().value(), 4);
        assert_eq!(f.from_ratio(-3, 4).unwrap().value(), 1);
        assert_eq!(f.from_ratio(1, 7), Err(Error::ZeroInverse));
    }

    #[test]
    fn quadratic_residues_match_square_table() {
        let f = gf(7);
        assert_eq!(squares(7), vec![1, 2, 4]);
        assert!(f.elem(2).is_quadratic_residue().unwrap());
        assert!(!f.elem(3).is_quadratic_residue().unwrap());
        assert!(f.elem(1).is_quadratic_residue().unwrap());
        assert_eq!(f.zero().is_quadratic_residue(), Err(Error::ZeroArgument));
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let sq = squares(p);
            for x in gf(p).elements().skip(1) {
                assert_eq!(
                    x.is_quadratic_residue().unwrap(),
                    sq.binary_search(&x.value()).is_ok()
                );
            }
        }
    }

    #[test]
    fn signed_modulus_examples() {
        let f = gf(7);
        assert_eq!(f.elem(3).modulus_signed().value(), 4);
        assert_eq!(f.elem(2).modulus_signed().value(), 2);
        assert_eq!(f.zero().modulus_signed().value(), 0);
    }

    #[test]
    fn signed_modulus_picks_the_residue_of_the_pair() {
        for p in (3..100u64).filter(|&p| arith::is_prime(p) && p % 4 == 3) {
            let sq = squares(p);
            for x in gf(p).elements().skip(1) {
                let is_sq = |v: FpElement| sq.binary_search(&v.value()).is_ok();
                assert!(is_sq(x) ^ is_sq(-x), "p={p} x={x}");
                let m = x.modulus_signed();
                assert!(is_sq(m));
                assert!(m == x || m == -x);
                assert_eq!(m.modulus_signed(), m);
            }
        }
    }

    #[test]
    fn canonical_square_roots() {
        let f = gf(7);
        assert_eq!(f.elem(2).sqrt_qr().unwrap().value(), 4);
        assert_eq!(f.elem(4).sqrt_qr().unwrap().value(), 2);
        assert_eq!(f.zero().sqrt_qr().unwrap().value(), 0);
        assert_eq!(f.elem(3).sqrt_qr(), Err(Error::NotAResidue(3)));
        assert_eq!(gf(13).elem(4).sqrt_qr(), Err(Error::RequiresComplexPrime(13)));
        for p in [3u64, 7, 11, 19, 23, 31, 43, 47] {
            for x in gf(p).elements().skip(1) {
                if x.is_quadratic_residue().unwrap() {
                    let s = x.sqrt_qr().unwrap();
                    assert_eq!(s * s, x);
                    assert!(s.is_quadratic_residue().unwrap());
                }
            }
        }
    }

    #[test]
    fn orders() {
        assert_eq!(gf(7).elem(3).multiplicative_order().unwrap(), 6);
        assert_eq!(gf(5).elem(1).multiplicative_order().unwrap(), 1);
        assert_eq!(gf(7).elem(6).multiplicative_order().unwrap(), 2);
        assert_eq!(gf(7).zero().multiplicative_order(), Err(Error::ZeroArgument));
        for p in [3u64, 5, 7, 11, 13, 19] {
            for x in gf(p).elements().skip(1) {
                let brute = (1..).find(|&k| x.pow_u(k).value() == 1).unwrap();
                let ord = x.multiplicative_order().unwrap();
                assert_eq!(ord, brute);
                assert_eq!((p - 1) % ord, 0);
            }
        }
    }

    proptest! {
        #[test]
        fn fermat_and_inverse(idx in 0usize..8, v in 1u64..1_000_000) {
            let p = [3u64, 7, 11, 19, 23, 10007, 65521, 1_000_003][idx];
            let x = gf(p).from_u64(v);
            prop_assume!(!x.is_zero());
            prop_assert_eq!(x.pow_u(p - 1).value(), 1);
            prop_assert_eq!((x * x.inv().unwrap()).value(), 1);
        }

        #[test]
        fn large_modulus_no_overflow(a in any::<u64>(), b in any::<u64>()) {
            // smallest prime above 2^32, so products overflow u64
            let f = gf(4_294_967_311);
            let (x, y) = (f.from_u64(a), f.from_u64(b));
            let expected = (x.value() as u128 * y.value() as u128 % f.get() as u128) as u64;
            prop_assert_eq!((x * y).value(), expected);
            prop_assert_eq!(x + y - y, x);
        }
    }
}
