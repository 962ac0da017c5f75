//! Dense univariate polynomials over Q, just enough for cyclotomic residues.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficients in increasing degree; trailing zeros are trimmed by `trim`.
pub(crate) type QPoly = Vec<BigRational>;

pub(crate) fn trim(p: &mut QPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn degree(p: &QPoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn mul(a: &[BigRational], b: &[BigRational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn sub_scaled_shifted(a: &mut QPoly, b: &[BigRational], scale: &BigRational, shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigRational::zero());
    }
    for (j, y) in b.iter().enumerate() {
        if !y.is_zero() {
            a[j + shift] -= scale * y;
        }
    }
}

/// Quotient and remainder of `a` by nonzero `b`.
pub(crate) fn divrem(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    let db = degree(&b.to_vec()).expect("division by the zero polynomial");
    let lead_inv = b[db].recip();
    let mut rem: QPoly = a.to_vec();
    trim(&mut rem);
    let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = &rem[dr] * &lead_inv;
        let shift = dr - db;
        sub_scaled_shifted(&mut rem, &b[..=db], &c, shift);
        rem[dr] = BigRational::zero();
        quot[shift] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Inverse of `a` modulo `m`, or `None` when they share a factor.
pub(crate) fn inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<QPoly> {
    // extended Euclid tracking only the coefficient of `a`
    let mut r0: QPoly = m.to_vec();
    let mut r1: QPoly = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: QPoly = Vec::new();
    let mut s1: QPoly = vec![BigRational::one()];
    while degree(&r1).is_some() {
        let (q, r) = divrem(&r0, &r1);
        let qs = mul(&q, &s1);
        let mut s2 = s0.clone();
        if s2.len() < qs.len() {
            s2.resize(qs.len(), BigRational::zero());
        }
        for (i, c) in qs.into_iter().enumerate() {
            s2[i] -= c;
        }
        trim(&mut s2);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is the gcd; invertible iff constant
    match degree(&r0) {
        Some(0) => {
            let c = r0[0].recip();
            Some(s0.into_iter().map(|x| x * &c).collect())
        }
        _ => None,
    }
}

fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Integer coefficients of the n-th cyclotomic polynomial.
fn cyclotomic_int(n: u32, memo: &mut HashMap<u32, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Φ_d with d | n, d < n
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let den = cyclotomic_int(d, memo);
            num = exact_int_div(&num, &den);
        }
    }
    debug_assert_eq!(num.len() as u32, euler_phi(n) + 1);
    memo.insert(n, num.clone());
    num
}

fn exact_int_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    // b is monic
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            rem[k + j] -= &c * y;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(|r| r.is_zero()));
    quot
}

/// Shared per-order data: Φ_N and its degree.
#[derive(Debug)]
pub(crate) struct CycloContext {
    pub phi: usize,
    /// Monic Φ_N, increasing degree, length `phi + 1`.
    pub modulus: QPoly,
}

fn registry() -> &'static RwLock<HashMap<u32, Arc<CycloContext>>> {
    static REG: OnceLock<RwLock<HashMap<u32, Arc<CycloContext>>>> = OnceLock::new();
    REG.get_or_init(|| RwLock::new(HashMap::new()))
}

pub(crate) fn context(order: u32) -> Arc<CycloContext> {
    assert!(order >= 1, "cyclotomic order must be positive");
    if let Some(ctx) = registry().read().expect("poisoned").get(&order) {
        return Arc::clone(ctx);
    }
    let mut memo = HashMap::new();
    let ints = cyclotomic_int(order, &mut memo);
    let modulus: QPoly = ints.into_iter().map(BigRational::from_integer).collect();
    let ctx = Arc::new(CycloContext {
        phi: modulus.len() - 1,
        modulus,
    });
    registry()
        .write()
        .expect("poisoned")
        .entry(order)
        .or_insert(ctx)
        .clone()
}

pub(crate) fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: &QPoly) -> Vec<i64> {
        p.iter()
            .map(|c| {
                assert!(c.is_integer());
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(ints(&context(1).modulus), vec![-1, 1]);
        assert_eq!(ints(&context(2).modulus), vec![1, 1]);
        assert_eq!(ints(&context(4).modulus), vec![1, 0, 1]);
        assert_eq!(ints(&context(6).modulus), vec![1, -1, 1]);
        assert_eq!(ints(&context(12).modulus), vec![1, 0, -1, 0, 1]);
        assert_eq!(context(105).phi, 48);
    }

    #[test]
    fn inverse_mod_small() {
        // (1 + x) * s ≡ 1 mod x^2 + 1  ⇒  s = (1 - x)/2
        let m = context(4).modulus.clone();
        let a = vec![BigRational::one(), BigRational::one()];
        let s = inverse_mod(&a, &m).unwrap();
        let (_, r) = divrem(&mul(&a, &s), &m);
        assert_eq!(r, vec![BigRational::one()]);
        assert!(inverse_mod(&[], &m).is_none());
    }
}
