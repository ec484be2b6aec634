//! Finite-field Fourier transform with a complex kernel.
//!
//! `F_k = Σ_i f_i ζ^(ik)` where `f` lives over GF(q), q = p^r, and `ζ` has
//! order N in GL(q^m). Admissible lengths are the divisors of `q^(2m) − 1`,
//! which adds the divisors of `q^m + 1` to those available to a real kernel.
//! Evaluation is the direct O(N²) sum.

use crate::arith;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::extension_field::{ComplexExt, Embedding, ExtElement};
use crate::prime_field::PrimeModulus;

/// A transform length `N` with a fixed kernel `ζ` of order `N`.
#[derive(Debug, Clone)]
pub struct FfftPlan {
    n: usize,
    zeta: ExtElement,
    /// `ζ^e` for `e ∈ [0, N)`.
    powers: Vec<ExtElement>,
    field: ComplexExt,
    relaxed: bool,
}

impl FfftPlan {
    /// Builds GL(q^m) for q = p^r and picks a kernel of order `n`.
    pub fn new(p: PrimeModulus, r: usize, m: usize, n: u64) -> Result<Self> {
        let field = ComplexExt::build(p, r, m)?;
        let group_order = field.group_order();
        if n == 0 || group_order % n != 0 {
            return Err(Error::InvalidLength { n, group_order });
        }
        let zeta = field.element_of_order(n)?;
        Ok(Self::assemble(field, zeta, n as usize))
    }

    /// Uses a caller-chosen kernel; the length is its order.
    pub fn with_kernel(field: ComplexExt, zeta: ExtElement) -> Result<Self> {
        if **zeta.field() != **field.carrier() {
            return Err(Error::FieldMismatch);
        }
        let n = zeta.order()?;
        Ok(Self::assemble(field, zeta, n as usize))
    }

    fn assemble(field: ComplexExt, zeta: ExtElement, n: usize) -> Self {
        let mut powers = Vec::with_capacity(n);
        let mut acc = field.carrier().one();
        for _ in 0..n {
            powers.push(acc.clone());
            acc = acc.mul(&zeta).expect("same field");
        }
        debug_assert_eq!(acc, field.carrier().one());
        debug_assert_eq!(arith::gcd(n as u64, field.prime().get()), 1);
        FfftPlan {
            n,
            zeta,
            powers,
            field,
            relaxed: false,
        }
    }

    /// Accepts inputs anywhere in the carrier instead of only GF(q).
    pub fn relaxed(mut self) -> Self {
        self.relaxed = true;
        self
    }

    pub fn is_relaxed(&self) -> bool {
        self.relaxed
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn zeta(&self) -> &ExtElement {
        &self.zeta
    }

    pub fn field(&self) -> &ComplexExt {
        &self.field
    }

    /// Lifts a GF(p) integer into the carrier.
    pub fn lift(&self, v: i64) -> ExtElement {
        self.field.carrier().constant(v)
    }

    /// Embeds GF(q) elements, given as coefficient vectors over the
    /// alphabet's own polynomial basis.
    pub fn embed_input(&self, coeffs: &[Vec<u64>]) -> Result<Vec<ExtElement>> {
        let alphabet = self.field.alphabet();
        coeffs
            .iter()
            .map(|c| self.field.alphabet_embedding().map(&alphabet.element(c)))
            .collect()
    }

    fn check_len(&self, v: &[ExtElement]) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        for x in v {
            if **x.field() != **self.field.carrier() {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(())
    }

    /// `Σ_i v_i ζ^(sign·ik)`.
    fn kernel_sum(&self, v: &[ExtElement], k: usize, sign: i64) -> ExtElement {
        let n = self.n as i64;
        v.iter().enumerate().fold(self.field.carrier().zero(), |acc, (i, x)| {
            let e = (sign * (i as i64) * (k as i64)).rem_euclid(n) as usize;
            acc.add(&x.mul(&self.powers[e]).expect("same field"))
                .expect("same field")
        })
    }
}

pub fn ffft(f: &[ExtElement], plan: &FfftPlan) -> Result<Vec<ExtElement>> {
    ffft_with(f, plan, Exec::default())
}

/// `F_k = Σ_i f_i ζ^(ik)`.
pub fn ffft_with(f: &[ExtElement], plan: &FfftPlan, exec: Exec) -> Result<Vec<ExtElement>> {
    plan.check_len(f)?;
    if !plan.relaxed {
        if let Some(i) = f.iter().position(|x| !plan.field.in_alphabet(x)) {
            return Err(Error::NotInAlphabet(i));
        }
    }
    Ok(exec.map(plan.n, |k| plan.kernel_sum(f, k, 1)))
}

pub fn iffft(big_f: &[ExtElement], plan: &FfftPlan) -> Result<Vec<ExtElement>> {
    iffft_with(big_f, plan, Exec::default())
}

/// `f_i = N⁻¹ Σ_k F_k ζ^(−ik)`; `N` is invertible mod p because it divides
/// `q^(2m) − 1`.
pub fn iffft_with(big_f: &[ExtElement], plan: &FfftPlan, exec: Exec) -> Result<Vec<ExtElement>> {
    plan.check_len(big_f)?;
    let n_inv = plan.field.prime().from_u64(plan.n as u64).inv()?.value();
    Ok(exec.map(plan.n, |i| plan.kernel_sum(big_f, i, -1).scale(n_inv)))
}

pub fn pointwise_mul(a: &[ExtElement], b: &[ExtElement]) -> Result<Vec<ExtElement>> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    a.iter().zip(b).map(|(x, y)| x.mul(y)).collect()
}

/// `(f ⊛ g)_n = Σ_i f_i g_((n−i) mod N)`, evaluated directly.
pub fn cyclic_convolution(f: &[ExtElement], g: &[ExtElement]) -> Result<Vec<ExtElement>> {
    if f.len() != g.len() {
        return Err(Error::LengthMismatch {
            expected: f.len(),
            got: g.len(),
        });
    }
    let n = f.len();
    (0..n)
        .map(|k| {
            f.iter().enumerate().try_fold(f[0].field().zero(), |acc, (i, x)| {
                acc.add(&x.mul(&g[(k + n - i) % n])?)
            })
        })
        .collect()
}

/// Cyclic convolution through the transform: `iffft(ffft(f) · ffft(g))`.
pub fn convolve_via_transform(
    f: &[ExtElement],
    g: &[ExtElement],
    plan: &FfftPlan,
) -> Result<Vec<ExtElement>> {
    let ff = ffft(f, plan)?;
    let gg = ffft(g, plan)?;
    iffft(&pointwise_mul(&ff, &gg)?, plan)
}

/// The classic real-kernel transform `F_k = Σ f_i a^(ik)`, computed entirely
/// in GF(q^m).
///
/// `f` is given over the input alphabet GF(q) and `a` over GF(q^m); the
/// result stays in GF(q^m). Embedding the outputs into the carrier must give
/// the complex-kernel transform with `ζ = a + 0j`.
pub fn pollard_special_case(
    field: &ComplexExt,
    f: &[ExtElement],
    a: &ExtElement,
) -> Result<Vec<ExtElement>> {
    let base = field.base();
    if **a.field() != **base {
        return Err(Error::NotReal);
    }
    let n = f.len() as u64;
    let ord = a.order()?;
    if ord != n {
        return Err(Error::OrderMismatch {
            expected: n,
            actual: ord,
        });
    }
    let to_base = Embedding::new(field.alphabet(), base)?;
    let lifted: Vec<ExtElement> = f.iter().map(|x| to_base.map(x)).collect::<Result<_>>()?;
    (0..n)
        .map(|k| {
            lifted.iter().enumerate().try_fold(base.zero(), |acc, (i, x)| {
                acc.add(&x.mul(&a.pow_u(i as u64 * k % n))?)
            })
        })
        .collect()
}

/// How a transform length relates to the factorization
/// `q^(2m) − 1 = (q^m − 1)(q^m + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LengthClass {
    /// Divides `q^m − 1`: reachable with a real kernel.
    Classic,
    /// Divides `q^m + 1` but not `q^m − 1`.
    New,
    /// Divides neither factor alone.
    Mixed,
}

impl LengthClass {
    pub fn as_str(self) -> &'static str {
        match self {
            LengthClass::Classic => "classic",
            LengthClass::New => "new",
            LengthClass::Mixed => "mixed",
        }
    }
}

/// Every admissible length for GL(q^m), q = p^r, with its class.
pub fn length_catalogue(p: PrimeModulus, r: u32, m: u32) -> Result<Vec<(u64, LengthClass)>> {
    let q_m = p.get().checked_pow(r * m).ok_or(Error::TooLarge)?;
    let total = q_m.checked_mul(q_m).ok_or(Error::TooLarge)? - 1;
    Ok(arith::divisors(total)
        .into_iter()
        .map(|n| {
            let class = if (q_m - 1) % n == 0 {
                LengthClass::Classic
            } else if (q_m + 1) % n == 0 {
                LengthClass::New
            } else {
                LengthClass::Mixed
            };
            (n, class)
        })
        .collect())
}
