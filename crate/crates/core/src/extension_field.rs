//! GF(p^k) as polynomials modulo a monic irreducible, and the complex
//! alphabet GL(q^m) ≅ GF(q^(2m)) used by the complex-kernel transform.
//!
//! GL(q^m) is realized as the single field GF(p^(2rm)) with a distinguished
//! square root of −1 called `j`, rather than as pairs over GF(q^m). The
//! Cartesian view `a + b·j` is recovered on demand through the Frobenius
//! automorphism of the carrier over GF(q^m).

use std::fmt;
use std::sync::Arc;

use crate::arith;
use crate::error::{Error, Result};
use crate::prime_field::PrimeModulus;

mod poly {
    //! Dense polynomials over GF(p), constant term first, no trailing zeros.

    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv(a: u64, p: u64) -> u64 {
        let (mut acc, mut base, mut e) = (1u128, a as u128, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p as u128;
            }
            base = base * base % p as u128;
            e >>= 1;
        }
        acc as u64
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(out)
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u128; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u128 * y as u128) % p as u128;
            }
        }
        trim(out.into_iter().map(|v| v as u64).collect())
    }

    /// Remainder of `a` modulo the nonzero polynomial `f`.
    pub fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        let f = trim(f.to_vec());
        let mut r = trim(a.to_vec());
        let df = f.len() - 1;
        let lead_inv = inv(f[df], p) as u128;
        while r.len() > df {
            let shift = r.len() - 1 - df;
            let c = (*r.last().unwrap() as u128 * lead_inv % p as u128) as u64;
            for (i, &fc) in f.iter().enumerate() {
                let t = (c as u128 * fc as u128 % p as u128) as u64;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    pub fn pow_mod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1];
        let mut b = rem(base, f, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = rem(&mul(&acc, &b, p), f, p);
            }
            b = rem(&mul(&b, &b, p), f, p);
            e >>= 1;
        }
        acc
    }

    /// `x^(p^d) mod f` by `d` successive p-th powers.
    pub fn frobenius_x(d: usize, f: &[u64], p: u64) -> Vec<u64> {
        let mut t = rem(&[0, 1], f, p);
        for _ in 0..d {
            t = pow_mod(&t, p, f, p);
        }
        t
    }
}

/// Rabin's irreducibility test for a monic `f` of degree `k ≥ 1`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    if k == 1 {
        return true;
    }
    let x = [0u64, 1];
    if poly::sub(&poly::frobenius_x(k, f, p), &x, p) != Vec::<u64>::new() {
        return false;
    }
    arith::prime_factors(k as u64).into_iter().all(|l| {
        let h = poly::sub(&poly::frobenius_x(k / l as usize, f, p), &x, p);
        poly::gcd(&h, f, p).len() == 1
    })
}

/// GF(p^k) = GF(p)[x] / (modulus_poly).
#[derive(Debug, PartialEq, Eq)]
pub struct ExtField {
    p: PrimeModulus,
    k: usize,
    modulus_poly: Vec<u64>,
    size: u64,
}

impl ExtField {
    /// Wraps an explicit monic polynomial (constant term first), checking
    /// irreducibility.
    pub fn new(p: PrimeModulus, modulus_poly: Vec<u64>) -> Result<Arc<Self>> {
        let pv = p.get();
        let modulus_poly: Vec<u64> = modulus_poly.into_iter().map(|c| c % pv).collect();
        if modulus_poly.len() < 2 || modulus_poly.last() != Some(&1) {
            return Err(Error::Reducible(pv));
        }
        let k = modulus_poly.len() - 1;
        let size = pv.checked_pow(k as u32).ok_or(Error::TooLarge)?;
        if !is_irreducible(&modulus_poly, pv) {
            return Err(Error::Reducible(pv));
        }
        Ok(Arc::new(ExtField {
            p,
            k,
            modulus_poly,
            size,
        }))
    }

    /// The first monic irreducible of degree `k`, enumerating lower
    /// coefficients as base-p digits with the constant term least significant.
    pub fn find(p: PrimeModulus, k: usize) -> Result<Arc<Self>> {
        assert!(k >= 1, "extension degree must be positive");
        let pv = p.get();
        let count = pv.checked_pow(k as u32).ok_or(Error::TooLarge)?;
        for idx in 0..count {
            let mut f = digits(idx, pv, k);
            f.push(1);
            if is_irreducible(&f, pv) {
                return Ok(Arc::new(ExtField {
                    p,
                    k,
                    modulus_poly: f,
                    size: count,
                }));
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn prime(&self) -> PrimeModulus {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn modulus_poly(&self) -> &[u64] {
        &self.modulus_poly
    }

    /// Number of elements, `p^k`.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn element(self: &Arc<Self>, coeffs: &[u64]) -> ExtElement {
        let pv = self.p.get();
        let reduced = poly::rem(
            &coeffs.iter().map(|c| c % pv).collect::<Vec<_>>(),
            &self.modulus_poly,
            pv,
        );
        self.from_poly(reduced)
    }

    /// Signed integer constant.
    pub fn constant(self: &Arc<Self>, c: i64) -> ExtElement {
        self.element(&[self.p.elem(c).value()])
    }

    pub fn zero(self: &Arc<Self>) -> ExtElement {
        self.from_poly(Vec::new())
    }

    pub fn one(self: &Arc<Self>) -> ExtElement {
        self.constant(1)
    }

    /// The class of `x`.
    pub fn x(self: &Arc<Self>) -> ExtElement {
        self.element(&[0, 1])
    }

    fn from_poly(self: &Arc<Self>, mut c: Vec<u64>) -> ExtElement {
        c.resize(self.k, 0);
        ExtElement {
            coeffs: c,
            field: Arc::clone(self),
        }
    }

    /// Element number `idx` in the base-p digit enumeration.
    pub fn element_at(self: &Arc<Self>, idx: u64) -> ExtElement {
        self.from_poly(digits(idx, self.p.get(), self.k))
    }

    /// First element (in [`element_at`](Self::element_at) order) that
    /// generates the multiplicative group.
    pub fn generator(self: &Arc<Self>) -> ExtElement {
        let n = self.size - 1;
        let primes = arith::prime_factors(n);
        let one = self.one();
        (1..self.size)
            .map(|i| self.element_at(i))
            .find(|g| primes.iter().all(|&l| g.pow_u(n / l) != one))
            .expect("multiplicative group of a finite field is cyclic")
    }

    /// An element of order exactly `n`: `g^((size−1)/n)`.
    pub fn element_of_order(self: &Arc<Self>, n: u64) -> Result<ExtElement> {
        let group = self.size - 1;
        if n == 0 || !group.is_multiple_of(n) {
            return Err(Error::InvalidLength {
                n,
                group_order: group,
            });
        }
        Ok(self.generator().pow_u(group / n))
    }
}

impl fmt::Display for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p.get(), self.k)
    }
}

fn digits(mut idx: u64, p: u64, k: usize) -> Vec<u64> {
    (0..k)
        .map(|_| {
            let d = idx % p;
            idx /= p;
            d
        })
        .collect()
}

/// An element of an [`ExtField`]: `k` coefficients, constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtElement {
    coeffs: Vec<u64>,
    field: Arc<ExtField>,
}

impl ExtElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn field(&self) -> &Arc<ExtField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The constant term when the element lies in the prime subfield.
    pub fn as_prime(&self) -> Option<u64> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    fn p(&self) -> u64 {
        self.field.p.get()
    }

    fn check(&self, rhs: &ExtElement) -> Result<()> {
        if Arc::ptr_eq(&self.field, &rhs.field) || self.field == rhs.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, rhs: &ExtElement) -> Result<ExtElement> {
        self.check(rhs)?;
        let p = self.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| (a + b) % p)
            .collect();
        Ok(ExtElement {
            coeffs,
            field: Arc::clone(&self.field),
        })
    }

    pub fn sub(&self, rhs: &ExtElement) -> Result<ExtElement> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> ExtElement {
        let p = self.p();
        ExtElement {
            coeffs: self.coeffs.iter().map(|&c| (p - c) % p).collect(),
            field: Arc::clone(&self.field),
        }
    }

    pub fn mul(&self, rhs: &ExtElement) -> Result<ExtElement> {
        self.check(rhs)?;
        let p = self.p();
        let prod = poly::mul(&poly::trim(self.coeffs.clone()), &poly::trim(rhs.coeffs.clone()), p);
        Ok(self
            .field
            .from_poly(poly::rem(&prod, &self.field.modulus_poly, p)))
    }

    /// Multiplies by a prime-field scalar.
    pub fn scale(&self, k: u64) -> ExtElement {
        let p = self.p() as u128;
        let k = k as u128 % p;
        ExtElement {
            coeffs: self.coeffs.iter().map(|&c| (c as u128 * k % p) as u64).collect(),
            field: Arc::clone(&self.field),
        }
    }

    pub(crate) fn pow_u(&self, mut e: u64) -> ExtElement {
        let mut acc = self.field.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            e >>= 1;
        }
        acc
    }

    pub fn pow(&self, e: i64) -> Result<ExtElement> {
        if e < 0 {
            Ok(self.inv()?.pow_u(e.unsigned_abs()))
        } else {
            Ok(self.pow_u(e as u64))
        }
    }

    pub fn inv(&self) -> Result<ExtElement> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow_u(self.field.size - 2))
    }

    /// Multiplicative order; divides `p^k − 1`.
    pub fn order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroArgument);
        }
        let one = self.field.one();
        Ok(arith::order_by_stripping(self.field.size - 1, |e| {
            self.pow_u(e) == one
        }))
    }

    /// Whether the element is fixed by `x ↦ x^(p^d)`, i.e. lies in GF(p^d).
    pub fn in_subfield(&self, d: usize) -> bool {
        let mut t = self.clone();
        for _ in 0..d {
            t = t.pow_u(self.p());
        }
        t == *self
    }

    /// Horner evaluation of a polynomial with prime-field coefficients.
    fn eval_poly(&self, coeffs: &[u64]) -> ExtElement {
        coeffs.iter().rev().fold(self.field.zero(), |acc, &c| {
            acc.mul(self)
                .expect("same field")
                .add(&self.field.constant(c as i64))
                .expect("same field")
        })
    }
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

/// A field homomorphism GF(p^d) → GF(p^k), `d | k`, fixed by the image of `x`.
#[derive(Debug, Clone)]
pub struct Embedding {
    small: Arc<ExtField>,
    large: Arc<ExtField>,
    root: ExtElement,
}

impl Embedding {
    pub fn new(small: &Arc<ExtField>, large: &Arc<ExtField>) -> Result<Self> {
        if small.p != large.p || !large.k.is_multiple_of(small.k) {
            return Err(Error::FieldMismatch);
        }
        let is_root = |y: &ExtElement| y.eval_poly(&small.modulus_poly).is_zero();
        let zero = large.zero();
        let root = if is_root(&zero) {
            zero
        } else {
            // GF(p^d)* inside the large field is generated by g^((p^k-1)/(p^d-1))
            let sub_gen = large.generator().pow_u((large.size - 1) / (small.size - 1));
            let mut y = large.one();
            let mut found = None;
            for _ in 0..small.size - 1 {
                if is_root(&y) {
                    found = Some(y.clone());
                    break;
                }
                y = y.mul(&sub_gen)?;
            }
            found.expect("an irreducible of degree d splits in GF(p^k) when d | k")
        };
        Ok(Embedding {
            small: Arc::clone(small),
            large: Arc::clone(large),
            root,
        })
    }

    pub fn source(&self) -> &Arc<ExtField> {
        &self.small
    }

    pub fn target(&self) -> &Arc<ExtField> {
        &self.large
    }

    pub fn map(&self, x: &ExtElement) -> Result<ExtElement> {
        if *x.field != *self.small {
            return Err(Error::FieldMismatch);
        }
        Ok(self.root.eval_poly(&x.coeffs))
    }
}

/// GL(q^m) with q = p^r: the carrier GF(p^(2rm)) together with `j`, the
/// input alphabet GF(q) and the real subfield GF(q^m).
#[derive(Debug, Clone)]
pub struct ComplexExt {
    r: usize,
    m: usize,
    alphabet: Arc<ExtField>,
    base: Arc<ExtField>,
    carrier: Arc<ExtField>,
    generator: ExtElement,
    j: ExtElement,
    alphabet_embedding: Embedding,
    base_embedding: Embedding,
}

impl ComplexExt {
    pub fn build(p: PrimeModulus, r: usize, m: usize) -> Result<Self> {
        assert!(r >= 1 && m >= 1, "r and m must be positive");
        let k = 2 * r * m;
        let carrier = ExtField::find(p, k)?;
        let generator = carrier.generator();
        // p^k - 1 is divisible by 8 for odd p and even k
        let j = generator.pow_u((carrier.size - 1) / 4);
        let alphabet = ExtField::find(p, r)?;
        let base = ExtField::find(p, r * m)?;
        let alphabet_embedding = Embedding::new(&alphabet, &carrier)?;
        let base_embedding = Embedding::new(&base, &carrier)?;
        Ok(ComplexExt {
            r,
            m,
            alphabet,
            base,
            carrier,
            generator,
            j,
            alphabet_embedding,
            base_embedding,
        })
    }

    pub fn prime(&self) -> PrimeModulus {
        self.carrier.p
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `q = p^r`.
    pub fn q(&self) -> u64 {
        self.alphabet.size
    }

    pub fn carrier(&self) -> &Arc<ExtField> {
        &self.carrier
    }

    /// GF(q^m), the real part of GL(q^m).
    pub fn base(&self) -> &Arc<ExtField> {
        &self.base
    }

    /// GF(q), where transform inputs live.
    pub fn alphabet(&self) -> &Arc<ExtField> {
        &self.alphabet
    }

    pub fn j(&self) -> &ExtElement {
        &self.j
    }

    pub fn generator(&self) -> &ExtElement {
        &self.generator
    }

    /// `q^(2m) − 1`.
    pub fn group_order(&self) -> u64 {
        self.carrier.size - 1
    }

    pub fn alphabet_embedding(&self) -> &Embedding {
        &self.alphabet_embedding
    }

    pub fn base_embedding(&self) -> &Embedding {
        &self.base_embedding
    }

    pub fn element_of_order(&self, n: u64) -> Result<ExtElement> {
        let group = self.group_order();
        if n == 0 || !group.is_multiple_of(n) {
            return Err(Error::InvalidLength {
                n,
                group_order: group,
            });
        }
        Ok(self.generator.pow_u(group / n))
    }

    /// Whether `x` lies in the input alphabet GF(q).
    pub fn in_alphabet(&self, x: &ExtElement) -> bool {
        x.in_subfield(self.alphabet.k)
    }

    /// Whether `x` lies in GF(q^m), i.e. has zero imaginary part.
    pub fn is_real(&self, x: &ExtElement) -> bool {
        x.in_subfield(self.base.k)
    }

    /// Splits `x = a + b·j` with `a, b ∈ GF(q^m)`, both given as carrier
    /// elements. `None` when q^m ≡ 1 (mod 4): then `j` is already real and
    /// `{1, j}` is not a basis.
    pub fn cartesian(&self, x: &ExtElement) -> Option<(ExtElement, ExtElement)> {
        if self.base.size % 4 != 3 {
            return None;
        }
        let sigma = x.pow_u(self.base.size);
        let half = self.carrier.constant(2).inv().ok()?;
        let re = x.add(&sigma).ok()?.mul(&half).ok()?;
        let two_j_inv = self.j.scale(2).inv().ok()?;
        let im = x.sub(&sigma).ok()?.mul(&two_j_inv).ok()?;
        Some((re, im))
    }

    /// `a + b·j`.
    pub fn from_cartesian(&self, a: &ExtElement, b: &ExtElement) -> Result<ExtElement> {
        a.add(&b.mul(&self.j)?)
    }
}
