//! Sparse exterior algebra Λ(F^n) on the monomial basis `e_S`, `S` a bitmask.

use std::collections::BTreeMap;

use super::{det, Mat};
use crate::arith::Field;

/// Sign of `e_S ∧ e_T` relative to `e_{S ∪ T}` when `S ∩ T = ∅`:
/// `(-1)^{#{(s, t) : s ∈ S, t ∈ T, s > t}}`.
pub fn wedge_sign(s: u32, t: u32) -> bool {
    let mut inversions = 0u32;
    let mut rest = t;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        rest &= rest - 1;
        let above = if bit >= 31 { 0 } else { s >> (bit + 1) };
        inversions += above.count_ones();
    }
    inversions % 2 == 1
}

/// Ascending list of the indices in a mask.
pub fn mask_indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Multivector<F> {
    terms: BTreeMap<u32, F>,
}

impl<F: Field> Default for Multivector<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> Multivector<F> {
    pub fn zero() -> Self {
        Multivector {
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(c: F) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(mask: u32, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mask, c);
        }
        Multivector { terms }
    }

    pub fn vector(v: &[F]) -> Self {
        let mut terms = BTreeMap::new();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                terms.insert(1u32 << i, c.clone());
            }
        }
        Multivector { terms }
    }

    /// `Σ_{i<j} m_ij e_i ∧ e_j` for a skew matrix `m`.
    pub fn bivector(m: &Mat<F>) -> Self {
        let mut terms = BTreeMap::new();
        for i in 0..m.rows() {
            for j in i + 1..m.cols() {
                if !m[(i, j)].is_zero() {
                    terms.insert((1u32 << i) | (1u32 << j), m[(i, j)].clone());
                }
            }
        }
        Multivector { terms }
    }

    pub fn terms(&self) -> &BTreeMap<u32, F> {
        &self.terms
    }

    pub fn coeff(&self, mask: u32) -> F {
        self.terms.get(&mask).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mask: u32, c: &F) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mask).or_insert_with(F::zero);
        *slot = slot.add_ref(c);
        if slot.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Multivector {
            terms: self.terms.iter().map(|(m, c)| (*m, c.mul_ref(s))).collect(),
        }
    }

    pub fn wedge(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&s, a) in &self.terms {
            for (&t, b) in &other.terms {
                if s & t != 0 {
                    continue;
                }
                let mut c = a.mul_ref(b);
                if wedge_sign(s, t) {
                    c = -c;
                }
                out.add_term(s | t, &c);
            }
        }
        out
    }

    /// Wedge keeping only the result monomials accepted by `keep`.
    pub fn wedge_pruned(&self, other: &Self, keep: impl Fn(u32) -> bool) -> Self {
        let mut out = Self::zero();
        for (&s, a) in &self.terms {
            for (&t, b) in &other.terms {
                if s & t != 0 || !keep(s | t) {
                    continue;
                }
                let mut c = a.mul_ref(b);
                if wedge_sign(s, t) {
                    c = -c;
                }
                out.add_term(s | t, &c);
            }
        }
        out
    }

    pub fn wedge_power(&self, k: usize) -> Self {
        (0..k).fold(Self::scalar(F::one()), |acc, _| acc.wedge(self))
    }

    /// Homogeneous part of degree `k`.
    pub fn grade(&self, k: u32) -> Self {
        Multivector {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.count_ones() == k)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Image under `Λ(A)`, with `A` an `m × n` matrix acting on `F^n`.
    pub fn apply(&self, a: &Mat<F>) -> Self {
        let mut out = Self::zero();
        for (&s, c) in &self.terms {
            out = out.add(&lambda_image(a, s).scale(c));
        }
        out
    }
}

/// `Λ(A) e_S = Σ_T det(A[T, S]) e_T`.
pub fn lambda_image<F: Field>(a: &Mat<F>, s: u32) -> Multivector<F> {
    let cols = mask_indices(s);
    let k = cols.len();
    let mut out = Multivector::zero();
    if k == 0 {
        return Multivector::scalar(F::one());
    }
    for_each_subset(a.rows(), k, |rows| {
        let minor = det(&a.select(rows, &cols)).expect("square minor");
        if !minor.is_zero() {
            let mask = rows.iter().fold(0u32, |m, &r| m | (1 << r));
            out.add_term(mask, &minor);
        }
    });
    out
}

/// Calls `f` on each increasing `k`-subset of `0..n`.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `v_1 ∧ … ∧ v_k`.
pub fn wedge_vectors<F: Field>(vs: &[Vec<F>]) -> Multivector<F> {
    vs.iter().fold(Multivector::scalar(F::one()), |acc, v| {
        acc.wedge(&Multivector::vector(v))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(x: i64) -> Rational {
        Rational::from_i64(x)
    }

    #[test]
    fn signs() {
        assert!(!wedge_sign(0b001, 0b010));
        assert!(wedge_sign(0b010, 0b001));
        // e_2 ∧ e_0e_1 = e_0e_1e_2 with two transpositions
        assert!(!wedge_sign(0b100, 0b011));
        assert!(!wedge_sign(0b110, 0b001));
        assert!(wedge_sign(0b10, 0b101));
    }

    #[test]
    fn anticommutation() {
        let a = Multivector::vector(&[r(1), r(2), r(0)]);
        let b = Multivector::vector(&[r(0), r(3), r(5)]);
        assert_eq!(a.wedge(&b), b.wedge(&a).scale(&r(-1)));
        assert!(a.wedge(&a).is_zero());
    }

    #[test]
    fn top_wedge_is_determinant() {
        let vs = vec![
            vec![r(1), r(2), r(3)],
            vec![r(0), r(1), r(4)],
            vec![r(5), r(6), r(0)],
        ];
        let w = wedge_vectors(&vs);
        let m = Mat::from_cols(3, &vs);
        assert_eq!(w.coeff(0b111), det(&m).unwrap());
    }

    #[test]
    fn symplectic_power() {
        // ω = e0∧e1 + e2∧e3, ω∧ω / 2 = e0e1e2e3
        let mut j = Mat::zeros(4, 4);
        j[(0, 1)] = r(1);
        j[(1, 0)] = r(-1);
        j[(2, 3)] = r(1);
        j[(3, 2)] = r(-1);
        let w = Multivector::bivector(&j).wedge_power(2);
        assert_eq!(w.coeff(0b1111), r(2));
    }

    #[test]
    fn lambda_of_matrix() {
        let a = Mat::from_rows(vec![vec![r(1), r(2)], vec![r(3), r(4)]]).unwrap();
        assert_eq!(lambda_image(&a, 0b11).coeff(0b11), r(-2));
        let v = Multivector::vector(&[r(1), r(1)]);
        assert_eq!(v.apply(&a), Multivector::vector(&[r(3), r(7)]));
    }

    #[test]
    fn subsets() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| seen.push(s.to_vec()));
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![0, 1]);
        assert_eq!(seen[5], vec![2, 3]);
        let mut count = 0;
        for_each_subset(3, 0, |_| count += 1);
        assert_eq!(count, 1);
    }
}
