//! Exact arithmetic in the cyclotomic field Q(ζ_N).
//!
//! Elements are stored as their canonical residue modulo the N-th cyclotomic
//! polynomial Φ_N in the power basis `1, ζ, …, ζ^{φ(N)-1}`, so two elements
//! of the same order are equal iff their coefficient vectors agree.
//! Operands of different orders are lifted to the lcm of their orders.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::Field;
use super::poly::{self, context};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<BigRational>,
}

/// Reduces `ζ`-polynomial coefficients to the canonical residue mod Φ_N.
pub fn cyclo_reduce(coeffs: &[BigRational], order: u32) -> Cyclotomic {
    let ctx = context(order);
    let n = order as usize;
    let mut folded = vec![BigRational::zero(); n.max(1)];
    for (i, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            folded[i % n] += c;
        }
    }
    Cyclotomic::from_folded(folded, order, ctx.phi)
}

impl Cyclotomic {
    fn from_folded(mut folded: Vec<BigRational>, order: u32, phi: usize) -> Self {
        if folded.len() > phi {
            poly::trim(&mut folded);
            if folded.len() > phi {
                let ctx = context(order);
                folded = poly::divrem(&folded, &ctx.modulus).1;
            }
        }
        folded.resize(phi, BigRational::zero());
        Cyclotomic {
            order,
            coeffs: folded,
        }
    }

    /// Builds an element from arbitrary power-basis coefficients.
    pub fn new(order: u32, coeffs: &[BigRational]) -> Self {
        cyclo_reduce(coeffs, order)
    }

    pub fn from_rational(q: BigRational) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// A rational constant represented at the given order.
    pub fn rational_in(q: BigRational, order: u32) -> Self {
        cyclo_reduce(&[q], order)
    }

    /// ζ_N^k for any integer k.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let n = order as i64;
        let e = k.rem_euclid(n) as usize;
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = BigRational::one();
        cyclo_reduce(&coeffs, order)
    }

    pub fn zeta(order: u32) -> Self {
        Self::zeta_pow(order, 1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Re-expresses the element in Q(ζ_M) for a multiple M of its order.
    pub fn lift(&self, target: u32) -> Self {
        if target == self.order {
            return self.clone();
        }
        assert!(
            target.is_multiple_of(self.order),
            "cannot lift order {} to {}",
            self.order,
            target
        );
        let step = (target / self.order) as usize;
        let mut coeffs = vec![BigRational::zero(); step * self.coeffs.len().max(1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        cyclo_reduce(&coeffs, target)
    }

    fn aligned<'a>(a: &'a Self, b: &'a Self) -> (AlignedRef<'a>, AlignedRef<'a>, u32) {
        if a.order == b.order {
            return (AlignedRef::Borrowed(a), AlignedRef::Borrowed(b), a.order);
        }
        let m = poly::lcm(a.order, b.order);
        let la = if a.order == m {
            AlignedRef::Borrowed(a)
        } else {
            AlignedRef::Owned(a.lift(m))
        };
        let lb = if b.order == m {
            AlignedRef::Borrowed(b)
        } else {
            AlignedRef::Owned(b.lift(m))
        };
        (la, lb, m)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    /// The rational value, if the element is rational.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn cyclo_add(&self, rhs: &Self) -> Self {
        let (a, b, order) = Self::aligned(self, rhs);
        Cyclotomic {
            order,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn cyclo_sub(&self, rhs: &Self) -> Self {
        let (a, b, order) = Self::aligned(self, rhs);
        Cyclotomic {
            order,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn cyclo_neg(&self) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn cyclo_mul(&self, rhs: &Self) -> Self {
        if self.is_rational() && rhs.order.is_multiple_of(self.order) {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.is_rational() && self.order.is_multiple_of(rhs.order) {
            return self.scale(&rhs.coeffs[0]);
        }
        let (a, b, order) = Self::aligned(self, rhs);
        let n = order as usize;
        let mut folded = vec![BigRational::zero(); n];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    folded[(i + j) % n] += x * y;
                }
            }
        }
        let phi = a.coeffs.len();
        Self::from_folded(folded, order, phi)
    }

    /// Multiplicative inverse; errors on zero.
    pub fn cyclo_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Cyclotomic {
                order: self.order,
                coeffs: {
                    let mut c = vec![BigRational::zero(); self.coeffs.len()];
                    c[0] = self.coeffs[0].recip();
                    c
                },
            });
        }
        let ctx = context(self.order);
        let s = poly::inverse_mod(&self.coeffs, &ctx.modulus).ok_or(Error::DivisionByZero)?;
        Ok(cyclo_reduce(&s, self.order))
    }

    /// Complex conjugation ζ ↦ ζ^{N-1}.
    pub fn cyclo_conj(&self) -> Self {
        let n = self.order as usize;
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[(n - i) % n] += c;
            }
        }
        cyclo_reduce(&coeffs, self.order)
    }

    /// Numeric value under ζ ↦ e^{2πi/N}.
    pub fn cyclo_embed(&self) -> Complex64 {
        let n = self.order as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = rational_to_f64(c);
            let theta = 2.0 * std::f64::consts::PI * (i as f64) / n;
            acc += Complex64::from_polar(v, theta);
        }
        acc
    }

    /// Exactly fixed by complex conjugation.
    pub fn is_real(&self) -> bool {
        self.cyclo_conj() == *self
    }

    pub fn pow(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 {
            self.cyclo_inv()?
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = Cyclotomic::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.cyclo_mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.cyclo_mul(&sq);
            }
        }
        Ok(acc)
    }
}

enum AlignedRef<'a> {
    Borrowed(&'a Cyclotomic),
    Owned(Cyclotomic),
}

impl std::ops::Deref for AlignedRef<'_> {
    type Target = Cyclotomic;
    fn deref(&self) -> &Cyclotomic {
        match self {
            AlignedRef::Borrowed(c) => c,
            AlignedRef::Owned(c) => c,
        }
    }
}

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // fall back for huge numerators/denominators
        let n = q.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = q.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b, _) = Self::aligned(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_integer(0)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::from_integer(1)
    }

    fn is_one(&self) -> bool {
        self.is_rational() && self.coeffs[0].is_one()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$inner(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                self.$inner(rhs)
            }
        }
        impl<'a, 'b> $tr<&'b Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &'b Cyclotomic) -> Cyclotomic {
                self.$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, cyclo_add);
forward_binop!(Sub, sub, cyclo_sub);
forward_binop!(Mul, mul, cyclo_mul);

impl Div<&Cyclotomic> for &Cyclotomic {
    type Output = Result<Cyclotomic>;
    fn div(self, rhs: &Cyclotomic) -> Result<Cyclotomic> {
        Ok(self.cyclo_mul(&rhs.cyclo_inv()?))
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.cyclo_neg()
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.cyclo_neg()
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if self.order == rhs.order {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                if !y.is_zero() {
                    *x += y;
                }
            }
        } else {
            *self = self.cyclo_add(rhs);
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        if self.order == rhs.order {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                if !y.is_zero() {
                    *x -= y;
                }
            }
        } else {
            *self = self.cyclo_sub(rhs);
        }
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.cyclo_mul(rhs);
    }
}

impl Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl Product for Cyclotomic {
    fn product<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::one(), |acc, x| acc.cyclo_mul(&x))
    }
}

impl From<BigRational> for Cyclotomic {
    fn from(q: BigRational) -> Self {
        Cyclotomic::from_rational(q)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_integer(n)
    }
}

impl Field for Cyclotomic {
    fn add_ref(&self, rhs: &Self) -> Self {
        self.cyclo_add(rhs)
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.cyclo_sub(rhs)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.cyclo_mul(rhs)
    }

    fn try_inv(&self) -> Option<Self> {
        self.cyclo_inv().ok()
    }

    fn from_i64(n: i64) -> Self {
        Cyclotomic::from_integer(n)
    }

    fn from_rational(q: &BigRational) -> Self {
        Cyclotomic::from_rational(q.clone())
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Prints in descending powers of `z`, e.g. `1/2*z^3 - z + 2`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            if mono.is_empty() {
                f.write_str(&fmt_rational(&mag))?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{}*{}", fmt_rational(&mag), mono)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::ratio;

    fn q(n: i64, d: i64) -> BigRational {
        ratio(n, d)
    }

    fn poly(order: u32, c: &[i64]) -> Cyclotomic {
        let coeffs: Vec<BigRational> = c.iter().map(|&x| q(x, 1)).collect();
        cyclo_reduce(&coeffs, order)
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(poly(4, &[0, 0, 1]), Cyclotomic::from_integer(-1));
        assert_eq!(poly(2, &[0, 1]), Cyclotomic::from_integer(-1));
        assert_eq!(poly(5, &[0, 0, 0, 0, 0, 1]), Cyclotomic::from_integer(1));
        let x = poly(12, &[3, -1, 4, 1, -5, 9, 2, 6, 5, 3, 5]);
        assert_eq!(cyclo_reduce(x.coeffs(), 12).coeffs(), x.coeffs());
    }

    #[test]
    fn arithmetic_examples() {
        let z = Cyclotomic::zeta(4);
        let one = Cyclotomic::rational_in(q(1, 1), 4);
        let prod = (&one + &z) * (&one - &z);
        assert_eq!(prod, Cyclotomic::from_integer(2));
        assert_eq!(
            Cyclotomic::from_integer(2).cyclo_inv().unwrap(),
            Cyclotomic::from_rational(q(1, 2))
        );
        assert_eq!(Cyclotomic::zero().cyclo_inv(), Err(Error::DivisionByZero));
        let w = Cyclotomic::zeta(7) + Cyclotomic::from_integer(3);
        let inv = w.cyclo_inv().unwrap();
        assert!((&w * &inv).is_one());
    }

    #[test]
    fn conj_examples() {
        let z = Cyclotomic::zeta(4);
        assert_eq!(z.cyclo_conj(), -z.clone());
        assert_eq!(z.cyclo_conj(), Cyclotomic::zeta_pow(4, 3));
        let r = Cyclotomic::from_rational(q(3, 2));
        assert_eq!(r.cyclo_conj(), r);
    }

    #[test]
    fn embed_examples() {
        let z = Cyclotomic::zeta(6).cyclo_embed();
        assert!((z.re - 0.5).abs() < 1e-12);
        assert!((z.im - 3f64.sqrt() / 2.0).abs() < 1e-12);
        assert!((Cyclotomic::one().cyclo_embed().re - 1.0).abs() < 1e-15);
        let s = (Cyclotomic::zeta(6) + Cyclotomic::zeta_pow(6, 5)).cyclo_embed();
        assert!((s.re - 1.0).abs() < 1e-12 && s.im.abs() < 1e-12);
    }

    #[test]
    fn mixed_orders_lift() {
        // ζ_4 = ζ_8^2, ζ_3 * ζ_4 lives in Q(ζ_12)
        assert_eq!(Cyclotomic::zeta(4), Cyclotomic::zeta_pow(8, 2));
        let p = Cyclotomic::zeta(3) * Cyclotomic::zeta(4);
        assert_eq!(p.order(), 12);
        assert_eq!(p, Cyclotomic::zeta_pow(12, 7));
        // ζ_6 = -ζ_3^2
        assert_eq!(Cyclotomic::zeta(6), -Cyclotomic::zeta_pow(3, 2));
    }

    #[test]
    fn display_format() {
        let x = cyclo_reduce(&[q(2, 1), q(-1, 1), q(0, 1), q(1, 2)], 12);
        assert_eq!(x.to_string(), "1/2*z^3 - z + 2");
        assert_eq!(Cyclotomic::zero().to_string(), "0");
        assert_eq!((-Cyclotomic::zeta(5)).to_string(), "-z");
        assert_eq!(Cyclotomic::from_rational(q(-3, 4)).to_string(), "-3/4");
    }

    #[test]
    fn pow_and_negative_exponent() {
        let z = Cyclotomic::zeta(5);
        assert!(z.pow(5).unwrap().is_one());
        assert_eq!(z.pow(-1).unwrap(), Cyclotomic::zeta_pow(5, 4));
    }
}
