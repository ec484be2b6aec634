//! GL(p): Galoisian integers `a + jb` over GF(p), p ≡ 3 (mod 4).
//!
//! Since −1 is a non-residue for such p, adjoining `j` with `j² = −1` gives a
//! field isomorphic to GF(p²). Its multiplicative group is cyclic of order
//! `p² − 1 = ((p−1)/2) · 2(p+1)` with coprime factors, which yields the polar
//! form `ζ = r · ε^θ`: `r` ranges over the quadratic residues of GF(p) and
//! `ε` generates the phase group of order `2(p+1)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith;
use crate::error::{Error, Result};
use crate::prime_field::{FpElement, PrimeModulus};

/// `re + j·im` in GL(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GlElement {
    re: FpElement,
    im: FpElement,
}

impl GlElement {
    pub fn new(re: FpElement, im: FpElement) -> Result<Self> {
        if re.modulus() != im.modulus() {
            return Err(Error::ModulusMismatch {
                left: re.modulus().get(),
                right: im.modulus().get(),
            });
        }
        re.modulus().require_complex()?;
        Ok(GlElement { re, im })
    }

    /// Builds `re + j·im` from raw integers.
    pub fn from_parts(p: PrimeModulus, re: i64, im: i64) -> Result<Self> {
        Self::new(p.elem(re), p.elem(im))
    }

    /// Embeds a real element. Panics if the prime does not support GL(p).
    pub fn real(x: FpElement) -> Self {
        Self::new(x, x.modulus().zero()).expect("prime must be 3 mod 4")
    }

    pub fn zero(p: PrimeModulus) -> Self {
        Self::real(p.zero())
    }

    pub fn one(p: PrimeModulus) -> Self {
        Self::real(p.one())
    }

    /// The imaginary unit.
    pub fn j(p: PrimeModulus) -> Self {
        GlElement {
            re: p.zero(),
            im: p.one(),
        }
    }

    #[inline]
    pub fn re(self) -> FpElement {
        self.re
    }

    #[inline]
    pub fn im(self) -> FpElement {
        self.im
    }

    #[inline]
    pub fn modulus(self) -> PrimeModulus {
        self.re.modulus()
    }

    pub fn is_zero(self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(self) -> bool {
        self.im.is_zero()
    }

    /// Every element of GL(p) in lexicographic `(re, im)` order.
    pub fn all(p: PrimeModulus) -> impl Iterator<Item = GlElement> {
        p.elements()
            .flat_map(move |a| p.elements().map(move |b| GlElement { re: a, im: b }))
    }

    fn check(self, rhs: GlElement) -> Result<()> {
        if self.modulus() == rhs.modulus() {
            Ok(())
        } else {
            Err(Error::ModulusMismatch {
                left: self.modulus().get(),
                right: rhs.modulus().get(),
            })
        }
    }

    pub fn try_add(self, rhs: GlElement) -> Result<GlElement> {
        self.check(rhs)?;
        Ok(GlElement {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        })
    }

    pub fn try_sub(self, rhs: GlElement) -> Result<GlElement> {
        self.check(rhs)?;
        Ok(GlElement {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        })
    }

    /// `(a₁a₂ − b₁b₂) + j(a₁b₂ + a₂b₁)`.
    pub fn try_mul(self, rhs: GlElement) -> Result<GlElement> {
        self.check(rhs)?;
        Ok(GlElement {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + rhs.re * self.im,
        })
    }

    pub fn scale(self, k: FpElement) -> GlElement {
        GlElement {
            re: self.re * k,
            im: self.im * k,
        }
    }

    pub fn conjugate(self) -> GlElement {
        GlElement {
            re: self.re,
            im: -self.im,
        }
    }

    /// `a² + b²`, which equals `ζ^(p+1)`.
    pub fn quadratic_norm(self) -> FpElement {
        self.re * self.re + self.im * self.im
    }

    /// `conj(x) · (a² + b²)⁻¹`.
    pub fn inv(self) -> Result<GlElement> {
        // the norm vanishes only at zero because -1 is a non-residue
        let n = self.quadratic_norm().inv()?;
        Ok(self.conjugate().scale(n))
    }

    pub(crate) fn pow_u(self, mut e: u64) -> GlElement {
        let mut base = self;
        let mut acc = GlElement::one(self.modulus());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn pow(self, e: i64) -> Result<GlElement> {
        if e < 0 {
            Ok(self.inv()?.pow_u(e.unsigned_abs()))
        } else {
            Ok(self.pow_u(e as u64))
        }
    }

    /// Multiplicative order; always divides `p² − 1`.
    pub fn order(self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroArgument);
        }
        let one = GlElement::one(self.modulus());
        Ok(arith::order_by_stripping(group_order(self.modulus()), |e| {
            self.pow_u(e) == one
        }))
    }

    /// `|a + jb| = | sqrt(|a² + b²|) |`, always a quadratic residue or zero.
    pub fn gl_modulus(self) -> FpElement {
        self.quadratic_norm()
            .modulus_signed()
            .sqrt_qr()
            .expect("signed modulus of the norm is a residue")
            .modulus_signed()
    }
}

impl fmt::Display for GlElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}j", self.re, self.im)
    }
}

macro_rules! gl_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for GlElement {
            type Output = GlElement;
            #[inline]
            fn $method(self, rhs: GlElement) -> GlElement {
                self.$checked(rhs).expect("GL(p) operands over different moduli")
            }
        }
    };
}

gl_binop!(Add, add, try_add);
gl_binop!(Sub, sub, try_sub);
gl_binop!(Mul, mul, try_mul);

impl Neg for GlElement {
    type Output = GlElement;
    fn neg(self) -> GlElement {
        GlElement {
            re: -self.re,
            im: -self.im,
        }
    }
}

/// `|GL(p)*| = p² − 1`.
pub fn group_order(p: PrimeModulus) -> u64 {
    let p = p.get();
    p * p - 1
}

/// Order of the modulus subgroup `G_r`: `(p − 1)/2`.
pub fn radial_order(p: PrimeModulus) -> u64 {
    (p.get() - 1) / 2
}

/// Order of the phase subgroup `G_θ`: `2(p + 1)`.
pub fn phase_order(p: PrimeModulus) -> u64 {
    2 * (p.get() + 1)
}

/// The fixed generators that give polar coordinates their meaning.
///
/// Construction is deterministic: the first generator of `GL(p)*` in
/// lexicographic `(re, im)` order is raised to the cofactors of the two
/// subgroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolarContext {
    p: PrimeModulus,
    generator: GlElement,
    epsilon: GlElement,
    g_r: FpElement,
}

impl PolarContext {
    pub fn new(p: PrimeModulus) -> Result<Self> {
        p.require_complex()?;
        let n = group_order(p);
        let primes = arith::prime_factors(n);
        let one = GlElement::one(p);
        let generator = GlElement::all(p)
            .filter(|g| !g.is_zero())
            .find(|g| primes.iter().all(|&l| g.pow_u(n / l) != one))
            .expect("GL(p)* is cyclic");

        let epsilon = generator.pow_u(radial_order(p));
        let g_r = generator.pow_u(phase_order(p));
        debug_assert!(g_r.is_real());
        let ctx = PolarContext {
            p,
            generator,
            epsilon,
            g_r: g_r.re(),
        };
        debug_assert_eq!(epsilon.order(), Ok(phase_order(p)));
        debug_assert_eq!(ctx.g_r.multiplicative_order(), Ok(radial_order(p)));
        Ok(ctx)
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    /// Generator of the whole multiplicative group.
    pub fn generator(&self) -> GlElement {
        self.generator
    }

    /// ε, of order exactly `2(p+1)`.
    pub fn epsilon(&self) -> GlElement {
        self.epsilon
    }

    /// Generator of the residues, of order `(p−1)/2`.
    pub fn g_r(&self) -> FpElement {
        self.g_r
    }

    pub fn phase_count(&self) -> usize {
        phase_order(self.p) as usize
    }

    /// `ε^k` for any integer `k`, reduced mod `2(p+1)`.
    pub fn epsilon_pow(&self, k: i64) -> GlElement {
        let n = phase_order(self.p) as i64;
        self.epsilon.pow_u(k.rem_euclid(n) as u64)
    }

    /// The unique `(r, θ)` with `x = r·ε^θ`, found by scanning the phases.
    pub fn to_polar(&self, x: GlElement) -> Result<PolarForm> {
        if x.modulus() != self.p {
            return Err(Error::ModulusMismatch {
                left: x.modulus().get(),
                right: self.p.get(),
            });
        }
        if x.is_zero() {
            return Err(Error::ZeroArgument);
        }
        let eps_inv = self.epsilon.inv()?;
        let mut rotated = x;
        for theta in 0..self.phase_count() {
            if rotated.is_real() && rotated.re().is_quadratic_residue()? {
                return Ok(PolarForm {
                    r: rotated.re(),
                    theta,
                    context: *self,
                });
            }
            rotated = rotated * eps_inv;
        }
        unreachable!("G_r x G_theta covers GL(p)*")
    }
}

/// `r · ε^θ` relative to a [`PolarContext`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolarForm {
    pub r: FpElement,
    pub theta: usize,
    pub context: PolarContext,
}

impl PolarForm {
    pub fn to_cartesian(&self) -> GlElement {
        self.context
            .epsilon_pow(self.theta as i64)
            .scale(self.r)
    }
}
