//! Finite matrix groups enumerated from generators.

use std::collections::{HashMap, VecDeque};

use num_traits::Zero;

use crate::arith::{poly, Cyclotomic};
use crate::error::{Error, Result};
use crate::linalg::{det, Mat};
use crate::{CycloMat, Rational};

pub const DEFAULT_CAP: usize = 5000;

#[derive(Clone, Debug)]
pub struct GroupElement {
    pub id: usize,
    pub matrix: CycloMat,
}

/// A fully enumerated finite subgroup of GL_d(Q(ζ_N)).
///
/// Element 0 is the identity; the remaining elements are numbered in
/// breadth-first discovery order under right multiplication by generators.
#[derive(Clone, Debug)]
pub struct FiniteMatrixGroup {
    dim: usize,
    order_n: u32,
    elements: Vec<GroupElement>,
    generators: Vec<usize>,
    mult: Vec<usize>,
    inv: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    centralizers: Vec<Vec<usize>>,
    orders: Vec<usize>,
}

type MatKey = Vec<Rational>;

fn mat_key(m: &CycloMat, order: u32) -> MatKey {
    let mut key = Vec::with_capacity(m.entries().len());
    for x in m.entries() {
        if x.order() == order {
            key.extend(x.coeffs().iter().cloned());
        } else {
            key.extend(x.lift(order).coeffs().iter().cloned());
        }
    }
    key
}

/// Enumerates the group generated by `gens`, failing once it exceeds `cap`.
pub fn close_generators(gens: &[CycloMat], cap: usize) -> Result<FiniteMatrixGroup> {
    let dim = match gens.first() {
        Some(g) => g.rows(),
        None => return Err(Error::InvalidGenerators("no generators".into())),
    };
    let mut order_n = 1u32;
    for (i, g) in gens.iter().enumerate() {
        if g.rows() != dim || g.cols() != dim {
            return Err(Error::InvalidGenerators(format!(
                "generator {i} is {}x{}, expected {dim}x{dim}",
                g.rows(),
                g.cols()
            )));
        }
        if det(g)?.is_zero() {
            return Err(Error::SingularGenerator { index: i });
        }
        for x in g.entries() {
            order_n = poly::lcm(order_n, x.order());
        }
    }

    let mut elements = vec![GroupElement {
        id: 0,
        matrix: Mat::identity(dim),
    }];
    let mut index: HashMap<MatKey, usize> = HashMap::new();
    index.insert(mat_key(&elements[0].matrix, order_n), 0);
    let mut parent: Vec<(usize, usize)> = vec![(0, usize::MAX)];
    let mut rightgen: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let mut row = Vec::with_capacity(gens.len());
        for (s, g) in gens.iter().enumerate() {
            let y = elements[x].matrix.matmul(g);
            let key = mat_key(&y, order_n);
            let id = match index.get(&key) {
                Some(&id) => id,
                None => {
                    let id = elements.len();
                    if id >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    index.insert(key, id);
                    elements.push(GroupElement { id, matrix: y });
                    parent.push((x, s));
                    queue.push_back(id);
                    id
                }
            };
            row.push(id);
        }
        rightgen.push(row);
    }

    let n = elements.len();
    // x·y = (x·parent(y))·gen(y); parents precede children
    let mut mult = vec![0usize; n * n];
    for x in 0..n {
        mult[x * n] = x;
        for y in 1..n {
            let (p, s) = parent[y];
            mult[x * n + y] = rightgen[mult[x * n + p]][s];
        }
    }
    let mut inv = vec![0usize; n];
    for x in 0..n {
        inv[x] = (0..n)
            .find(|&y| mult[x * n + y] == 0)
            .expect("finite group");
    }
    let generators = gens.iter().map(|g| index[&mat_key(g, order_n)]).collect();

    let mut group = FiniteMatrixGroup {
        dim,
        order_n,
        elements,
        generators,
        mult,
        inv,
        classes: Vec::new(),
        class_of: vec![usize::MAX; n],
        centralizers: Vec::new(),
        orders: Vec::new(),
    };
    group.build_tables();
    Ok(group)
}

impl FiniteMatrixGroup {
    fn build_tables(&mut self) {
        let n = self.len();
        for g in 0..n {
            if self.class_of[g] != usize::MAX {
                continue;
            }
            let mut class: Vec<usize> = (0..n).map(|k| self.conjugate(k, g)).collect();
            class.sort_unstable();
            class.dedup();
            let c = self.classes.len();
            for &x in &class {
                self.class_of[x] = c;
            }
            self.classes.push(class);
        }
        self.centralizers = (0..n)
            .map(|g| {
                (0..n)
                    .filter(|&h| self.mul(h, g) == self.mul(g, h))
                    .collect()
            })
            .collect();
        self.orders = (0..n)
            .map(|g| {
                let mut x = g;
                let mut k = 1;
                while x != 0 {
                    x = self.mul(x, g);
                    k += 1;
                }
                k
            })
            .collect();
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Common cyclotomic order of all matrix entries.
    pub fn cyclotomic_order(&self) -> u32 {
        self.order_n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn matrix(&self, g: usize) -> &CycloMat {
        &self.elements[g].matrix
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Id of `matrix(g)·matrix(h)`.
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mult[g * self.len() + h]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    /// `k g k⁻¹`.
    pub fn conjugate(&self, k: usize, g: usize) -> usize {
        self.mul(self.mul(k, g), self.inv[k])
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn centralizer(&self, g: usize) -> &[usize] {
        &self.centralizers[g]
    }

    pub fn element_order(&self, g: usize) -> usize {
        self.orders[g]
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.len()
    }

    pub fn index_of(&self, m: &CycloMat) -> Option<usize> {
        self.elements.iter().position(|e| &e.matrix == m)
    }

    /// `gᵀ J g = J` for every element.
    pub fn check_symplectic(&self, j: &CycloMat) -> bool {
        self.elements.iter().all(|e| {
            let g = &e.matrix;
            &g.transpose().matmul(j).matmul(g) == j
        })
    }
}

/// Permutation matrix with `P e_i = e_{σ(i)}`.
pub fn permutation_matrix(sigma: &[usize]) -> CycloMat {
    let n = sigma.len();
    let mut m = Mat::zeros(n, n);
    for (i, &s) in sigma.iter().enumerate() {
        m[(s, i)] = Cyclotomic::from_integer(1);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn s3() -> FiniteMatrixGroup {
        close_generators(
            &[
                permutation_matrix(&[1, 0, 2]),
                permutation_matrix(&[1, 2, 0]),
            ],
            DEFAULT_CAP,
        )
        .unwrap()
    }

    #[test]
    fn symmetric_group_s3() {
        let g = s3();
        assert_eq!(g.len(), 6);
        assert_eq!(g.classes().len(), 3);
        assert!(g.matrix(0).is_identity());
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(g.matrix(g.mul(x, y)), &g.matrix(x).matmul(g.matrix(y)));
            }
            assert_eq!(g.inv(g.inv(x)), x);
        }
        let sizes: usize = g.classes().iter().map(Vec::len).sum();
        assert_eq!(sizes, 6);
        assert!(g.classes().iter().all(|c| 6 % c.len() == 0));
        let three_cycle = g.index_of(&permutation_matrix(&[1, 2, 0])).unwrap();
        assert_eq!(g.element_order(three_cycle), 3);
        assert_eq!(g.element_order(0), 1);
        assert_eq!(g.centralizer(three_cycle).len(), 3);
    }

    #[test]
    fn minus_identity() {
        let m = Mat::identity(2).scale(&Cyclotomic::from_integer(-1));
        let g = close_generators(&[m], DEFAULT_CAP).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.element_order(1), 2);
        let mut j = Mat::zeros(2, 2);
        j[(0, 1)] = Cyclotomic::one();
        j[(1, 0)] = -Cyclotomic::one();
        assert!(g.check_symplectic(&j));
        let r = Mat::diag(&[Cyclotomic::from_integer(-1), Cyclotomic::one()]);
        assert!(!close_generators(&[r], DEFAULT_CAP)
            .unwrap()
            .check_symplectic(&j));
    }

    #[test]
    fn infinite_or_singular() {
        let two = Mat::identity(2).scale(&Cyclotomic::from_integer(2));
        assert_eq!(
            close_generators(&[two], 1000).unwrap_err(),
            Error::CapExceeded { cap: 1000 }
        );
        let sing = Mat::diag(&[Cyclotomic::one(), Cyclotomic::zero()]);
        assert_eq!(
            close_generators(&[sing], 10).unwrap_err(),
            Error::SingularGenerator { index: 0 }
        );
        assert!(close_generators(&[], 10).is_err());
    }

    #[test]
    fn cyclotomic_entries() {
        let z = Cyclotomic::zeta(4);
        let g = Mat::diag(&[z.clone(), z.pow(-1).unwrap()]);
        let grp = close_generators(&[g], DEFAULT_CAP).unwrap();
        assert_eq!(grp.len(), 4);
        assert!(grp.is_abelian());
        assert_eq!(grp.cyclotomic_order(), 4);
    }
}
