//! Integer helpers: primality, factorization, divisors.
//!
//! Everything here is trial division; moduli are desk scale.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_factors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(q, _)| q).collect()
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (q, e) in factorize(n) {
        let len = out.len();
        let mut pw = 1u64;
        for _ in 0..e {
            pw *= q;
            for i in 0..len {
                out.push(out[i] * pw);
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Order of an element in a cyclic group of order `group_order`, given a
/// predicate deciding whether `x^e` is the identity.
///
/// Starts from the group order and strips prime factors while the power
/// stays trivial.
pub fn order_by_stripping(group_order: u64, is_identity_pow: impl Fn(u64) -> bool) -> u64 {
    let mut ord = group_order;
    for (q, e) in factorize(group_order) {
        for _ in 0..e {
            if is_identity_pow(ord / q) {
                ord /= q;
            } else {
                break;
            }
        }
    }
    ord
}

/// Smallest `d` dividing `values.len()` such that `values` is `d`-periodic.
pub fn minimal_period<T: PartialEq>(values: &[T]) -> usize {
    let n = values.len();
    if n == 0 {
        return 0;
    }
    for d in divisors(n as u64) {
        let d = d as usize;
        if (d..n).all(|i| values[i] == values[i - d]) {
            return d;
        }
    }
    n
}
