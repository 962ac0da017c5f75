//! The fiber algebra `A = ⊕_g Λ(V^g) ⊗ det(N_g)` at the origin.
//!
//! A basis element is `(g, S)`: the wedge of the `V^g` kernel-basis vectors
//! indexed by the bitmask `S`, followed by the generator `ψ_g` of `det(N_g)`
//! on the right. Its cohomological degree is `|S| + codim(g)`.

mod invariants;
mod molien;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::Cyclotomic;
use crate::detalg::SAConstants;
use crate::fixedloci::FixedLoci;
use crate::linalg::exterior::{lambda_image, Multivector};
use crate::linalg::Mat;
use crate::verdict::Verdict;

pub use invariants::{invariant_dims, invariant_dims_bigraded, orbifold_dims, GradedDims};
pub use molien::{molien_bigraded, MolienSeries};

/// Sparse element: `(g, S) ↦ coefficient`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct FiberElement {
    terms: BTreeMap<(usize, u32), Cyclotomic>,
}

impl FiberElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(g: usize, mask: u32) -> Self {
        Self::term(g, mask, Cyclotomic::from_integer(1))
    }

    pub fn term(g: usize, mask: u32, c: Cyclotomic) -> Self {
        let mut out = Self::zero();
        out.add_term(g, mask, &c);
        out
    }

    pub fn terms(&self) -> &BTreeMap<(usize, u32), Cyclotomic> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: usize, mask: u32) -> Cyclotomic {
        self.terms
            .get(&(g, mask))
            .cloned()
            .unwrap_or_else(Cyclotomic::zero)
    }

    pub fn add_term(&mut self, g: usize, mask: u32, c: &Cyclotomic) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((g, mask)).or_insert_with(Cyclotomic::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(g, mask));
        }
    }

    pub fn add_scaled(&mut self, other: &Self, s: &Cyclotomic) {
        for ((g, m), c) in &other.terms {
            self.add_term(*g, *m, &(c * s));
        }
    }

    pub fn scale(&self, s: &Cyclotomic) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, s);
        out
    }

    fn from_multivector(g: usize, mv: &Multivector<Cyclotomic>) -> Self {
        FiberElement {
            terms: mv
                .terms()
                .iter()
                .map(|(m, c)| ((g, *m), c.clone()))
                .collect(),
        }
    }
}

type Images = Arc<Vec<Multivector<Cyclotomic>>>;

/// Product structure on the fiber algebra of a group.
pub struct FiberAlgebra<'a> {
    fl: &'a FixedLoci,
    sa: &'a SAConstants,
    basis: Vec<(usize, u32)>,
    index: HashMap<(usize, u32), usize>,
    projected: RwLock<HashMap<(usize, usize), Images>>,
    included: RwLock<HashMap<(usize, usize), Images>>,
    meets: RwLock<HashMap<(usize, usize), bool>>,
}

impl<'a> FiberAlgebra<'a> {
    pub fn new(fl: &'a FixedLoci, sa: &'a SAConstants) -> Self {
        let mut basis = Vec::new();
        for g in 0..fl.group().len() {
            let f = fl.fixed_data(g).fixed_dim();
            for mask in 0..(1u32 << f) {
                basis.push((g, mask));
            }
        }
        let index = basis.iter().enumerate().map(|(i, b)| (*b, i)).collect();
        FiberAlgebra {
            fl,
            sa,
            basis,
            index,
            projected: RwLock::new(HashMap::new()),
            included: RwLock::new(HashMap::new()),
            meets: RwLock::new(HashMap::new()),
        }
    }

    pub fn fixed_loci(&self) -> &FixedLoci {
        self.fl
    }

    pub fn sa(&self) -> &SAConstants {
        self.sa
    }

    pub fn basis(&self) -> &[(usize, u32)] {
        &self.basis
    }

    pub fn index_of(&self, g: usize, mask: u32) -> Option<usize> {
        self.index.get(&(g, mask)).copied()
    }

    pub fn degree(&self, g: usize, mask: u32) -> usize {
        mask.count_ones() as usize + self.fl.codim(g)
    }

    fn cached(
        map: &RwLock<HashMap<(usize, usize), Images>>,
        key: (usize, usize),
        build: impl FnOnce() -> Vec<Multivector<Cyclotomic>>,
    ) -> Images {
        if let Some(v) = map.read().expect("poisoned").get(&key) {
            return Arc::clone(v);
        }
        let built = Arc::new(build());
        map.write()
            .expect("poisoned")
            .entry(key)
            .or_insert(built)
            .clone()
    }

    /// `V^{gh} = V^g ∩ V^h`, cached per pair.
    fn meets_cleanly(&self, g: usize, h: usize) -> bool {
        if let Some(b) = self.meets.read().expect("poisoned").get(&(g, h)) {
            return *b;
        }
        let gh = self.fl.group().mul(g, h);
        let (fg, fh, fgh) = (
            self.fl.fixed_data(g),
            self.fl.fixed_data(h),
            self.fl.fixed_data(gh),
        );
        let b = fg.fixed.intersection(&fh.fixed).same_space(&fgh.fixed);
        self.meets.write().expect("poisoned").insert((g, h), b);
        b
    }

    /// `p_target(e_S)` for every mask `S` over the `V^τ` basis, in `V^target` coordinates.
    fn projected_images(&self, tau: usize, target: usize) -> Images {
        Self::cached(&self.projected, (tau, target), || {
            let f_tgt = self.fl.fixed_data(target).fixed_dim();
            let cols: Vec<Vec<Cyclotomic>> = self
                .fl
                .fixed_data(tau)
                .fixed
                .vectors()
                .iter()
                .map(|v| self.fl.fixed_coords(target, v))
                .collect();
            let p = Mat::from_cols(f_tgt, &cols);
            (0..1u32 << cols.len())
                .map(|s| lambda_image(&p, s))
                .collect()
        })
    }

    /// `e_S ∧ ψ_τ` in the adapted coordinates `[V^target | N_target]`.
    fn included_images(&self, tau: usize, target: usize) -> Images {
        Self::cached(&self.included, (tau, target), || {
            let fd = self.fl.fixed_data(target);
            let to_adapted = |v: &Vec<Cyclotomic>| Multivector::vector(&fd.adapted_coords(v));
            let fixed: Vec<_> = self
                .fl
                .fixed_data(tau)
                .fixed
                .vectors()
                .iter()
                .map(to_adapted)
                .collect();
            let psi = self
                .fl
                .fixed_data(tau)
                .normal
                .vectors()
                .iter()
                .map(to_adapted)
                .fold(
                    Multivector::scalar(Cyclotomic::from_integer(1)),
                    |acc, v| acc.wedge(&v),
                );
            (0..1u32 << fixed.len())
                .map(|s| {
                    let mut acc = Multivector::scalar(Cyclotomic::from_integer(1));
                    for (i, v) in fixed.iter().enumerate() {
                        if s >> i & 1 == 1 {
                            acc = acc.wedge(v);
                        }
                    }
                    acc.wedge(&psi)
                })
                .collect()
        })
    }

    /// `(e_α ψ_g)(e_β ψ_h) = (-1)^{codim(g)|β|} p(e_α) ∧ p(e_β) · c(g,h) ψ_{gh}`.
    pub fn multiply_basis(&self, g: usize, alpha: u32, h: usize, beta: u32) -> FiberElement {
        let c = self.sa.get(g, h);
        if c.is_zero() {
            return FiberElement::zero();
        }
        let gh = self.fl.group().mul(g, h);
        let pa = self.projected_images(g, gh);
        let pb = self.projected_images(h, gh);
        let mut w = pa[alpha as usize].wedge(&pb[beta as usize]);
        let odd = self.fl.codim(g) * beta.count_ones() as usize % 2 == 1;
        let s = if odd { -c.clone() } else { c.clone() };
        w = w.scale(&s);
        FiberElement::from_multivector(gh, &w)
    }

    /// Include both factors into `Λ(V)`, multiply there, then project with
    /// `P_{gh}`, which is zero unless `V^{gh} = V^g ∩ V^h`.
    pub fn alternate_multiply_basis(
        &self,
        g: usize,
        alpha: u32,
        h: usize,
        beta: u32,
    ) -> FiberElement {
        if !self.meets_cleanly(g, h) {
            return FiberElement::zero();
        }
        let gh = self.fl.group().mul(g, h);
        let f = self.fl.fixed_data(gh).fixed_dim() as u32;
        let d = self.fl.dim() as u32;
        let n_mask = ((1u32 << d) - 1) & !((1u32 << f) - 1);
        let ia = self.included_images(g, gh);
        let ib = self.included_images(h, gh);
        let w = ia[alpha as usize].wedge_pruned(&ib[beta as usize], |m| m & n_mask == n_mask);
        // e_T ∧ e_N with T below N carries no sign
        let mut out = FiberElement::zero();
        for (m, c) in w.terms() {
            out.add_term(gh, m & !n_mask, c);
        }
        out
    }

    pub fn multiply(&self, a: &FiberElement, b: &FiberElement) -> FiberElement {
        self.bilinear(a, b, |g, s, h, t| self.multiply_basis(g, s, h, t))
    }

    pub fn alternate_multiply(&self, a: &FiberElement, b: &FiberElement) -> FiberElement {
        self.bilinear(a, b, |g, s, h, t| self.alternate_multiply_basis(g, s, h, t))
    }

    fn bilinear(
        &self,
        a: &FiberElement,
        b: &FiberElement,
        f: impl Fn(usize, u32, usize, u32) -> FiberElement,
    ) -> FiberElement {
        let mut out = FiberElement::zero();
        for ((g, s), x) in &a.terms {
            for ((h, t), y) in &b.terms {
                out.add_scaled(&f(*g, *s, *h, *t), &(x * y));
            }
        }
        out
    }

    /// Products of all basis pairs, as sparse rows over basis indices.
    pub fn product_table(&self) -> ProductTable {
        let nb = self.basis.len();
        let rows: Vec<Vec<Vec<(usize, Cyclotomic)>>> = (0..nb)
            .into_par_iter()
            .map(|i| {
                let (g, s) = self.basis[i];
                (0..nb)
                    .map(|j| {
                        let (h, t) = self.basis[j];
                        self.multiply_basis(g, s, h, t)
                            .terms
                            .into_iter()
                            .map(|(k, c)| (self.index[&k], c))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        ProductTable { nb, rows }
    }

    /// Exhaustive comparison of the two products on all basis pairs.
    pub fn check_product_equivalence(&self) -> Verdict {
        let n = self.fl.group().len();
        let per_pair: Vec<Verdict> = (0..n * n)
            .into_par_iter()
            .map(|i| {
                let (g, h) = (i / n, i % n);
                let mut v = Verdict::new("multiply = alternate_multiply");
                let fg = 1u32 << self.fl.fixed_data(g).fixed_dim();
                let fh = 1u32 << self.fl.fixed_data(h).fixed_dim();
                for s in 0..fg {
                    for t in 0..fh {
                        let a = self.multiply_basis(g, s, h, t);
                        let b = self.alternate_multiply_basis(g, s, h, t);
                        v.record(a == b, || format!("basis pair ({g},{s:b}) x ({h},{t:b})"));
                    }
                }
                v
            })
            .collect();
        let mut v = Verdict::new("multiply = alternate_multiply");
        per_pair.into_iter().for_each(|x| v.merge(x));
        v
    }

    /// `(e ψ_g)(e ψ_h)` reproduces `c(g,h)`.
    pub fn check_restriction(&self) -> Verdict {
        let grp = self.fl.group();
        let n = grp.len();
        let mut v = Verdict::new("fiber product restricts to SA");
        for g in 0..n {
            for h in 0..n {
                let p = self.multiply_basis(g, 0, h, 0);
                let want = FiberElement::term(grp.mul(g, h), 0, self.sa.get(g, h).clone());
                v.record(p == want, || format!("pair ({g},{h})"));
            }
        }
        v
    }

    /// Unit, graded centrality of the identity component, and (for abelian
    /// groups) graded commutativity.
    pub fn check_unit_and_centrality(&self, table: &ProductTable) -> Verdict {
        let nb = self.basis.len();
        let unit = self.index[&(0, 0)];
        let abelian = self.fl.group().is_abelian();
        let mut v = Verdict::new("unit and graded centrality");
        for i in 0..nb {
            let (g, s) = self.basis[i];
            v.record(
                table.get(unit, i) == [(i, one())] && table.get(i, unit) == [(i, one())],
                || format!("unit fails on ({g},{s:b})"),
            );
            for j in 0..nb {
                let (h, t) = self.basis[j];
                if g != 0 && !abelian {
                    continue;
                }
                let sign_odd = self.degree(g, s) * self.degree(h, t) % 2 == 1;
                let xy = table.get(i, j);
                let yx = table.get(j, i);
                let ok = xy.len() == yx.len()
                    && xy.iter().zip(yx).all(|((a, x), (b, y))| {
                        a == b && (if sign_odd { x == &-y.clone() } else { x == y })
                    });
                v.record(ok, || {
                    format!("({g},{s:b}) and ({h},{t:b}) do not graded-commute")
                });
            }
        }
        v
    }
}

fn one() -> Cyclotomic {
    Cyclotomic::from_integer(1)
}

/// Dense-indexed table of basis products.
pub struct ProductTable {
    nb: usize,
    rows: Vec<Vec<Vec<(usize, Cyclotomic)>>>,
}

impl ProductTable {
    pub fn get(&self, i: usize, j: usize) -> &[(usize, Cyclotomic)] {
        &self.rows[i][j]
    }

    pub fn len(&self) -> usize {
        self.nb
    }

    pub fn is_empty(&self) -> bool {
        self.nb == 0
    }

    fn right_multiply(&self, lhs: &[(usize, Cyclotomic)], k: usize) -> BTreeMap<usize, Cyclotomic> {
        let mut out: BTreeMap<usize, Cyclotomic> = BTreeMap::new();
        for (m, c) in lhs {
            for (r, d) in self.get(*m, k) {
                let slot = out.entry(*r).or_insert_with(Cyclotomic::zero);
                *slot += &(c * d);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn left_multiply(&self, i: usize, rhs: &[(usize, Cyclotomic)]) -> BTreeMap<usize, Cyclotomic> {
        let mut out: BTreeMap<usize, Cyclotomic> = BTreeMap::new();
        for (m, c) in rhs {
            for (r, d) in self.get(i, *m) {
                let slot = out.entry(*r).or_insert_with(Cyclotomic::zero);
                *slot += &(c * d);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// `(x y) z = x (y z)` on all basis triples.
    pub fn check_associativity(&self) -> Verdict {
        let nb = self.nb;
        let per_i: Vec<Verdict> = (0..nb)
            .into_par_iter()
            .map(|i| {
                let mut v = Verdict::new("fiber associativity");
                for j in 0..nb {
                    let xy = self.get(i, j);
                    for k in 0..nb {
                        let left = self.right_multiply(xy, k);
                        let right = self.left_multiply(i, self.get(j, k));
                        v.record(left == right, || format!("basis triple ({i},{j},{k})"));
                    }
                }
                v
            })
            .collect();
        let mut v = Verdict::new("fiber associativity");
        per_i.into_iter().for_each(|x| v.merge(x));
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detalg::sa_table;
    use crate::group::{close_generators, DEFAULT_CAP};
    use crate::CycloMat;

    fn loci(gens: &[CycloMat]) -> FixedLoci {
        FixedLoci::new(close_generators(gens, DEFAULT_CAP).unwrap())
    }

    #[test]
    fn minus_one_products() {
        let fl = loci(&[Mat::identity(2).scale(&Cyclotomic::from_integer(-1))]);
        let sa = sa_table(&fl);
        let alg = FiberAlgebra::new(&fl, &sa);
        assert_eq!(alg.basis().len(), 5);
        // e_0 ∧ e_1 in the identity component
        let x = alg.multiply_basis(0, 0b01, 0, 0b10);
        assert_eq!(x, FiberElement::basis(0, 0b11));
        let y = alg.multiply_basis(0, 0b10, 0, 0b01);
        assert_eq!(
            y,
            FiberElement::basis(0, 0b11).scale(&Cyclotomic::from_integer(-1))
        );
        assert!(alg.multiply_basis(1, 0, 1, 0).is_zero());
        // vectors die against ψ_σ
        assert!(alg.multiply_basis(0, 0b01, 1, 0).is_zero());
        let table = alg.product_table();
        assert!(table.check_associativity().passed());
        assert!(alg.check_unit_and_centrality(&table).passed());
        assert!(alg.check_product_equivalence().passed());
        assert!(alg.check_restriction().passed());
    }

    #[test]
    fn reflection_sign() {
        let fl = loci(&[Mat::diag(&[Cyclotomic::from_integer(-1)])]);
        let sa = sa_table(&fl);
        let alg = FiberAlgebra::new(&fl, &sa);
        assert_eq!(alg.basis().len(), 3);
        let table = alg.product_table();
        assert!(table.check_associativity().passed());
        assert!(alg.check_product_equivalence().passed());
        assert!(alg.check_unit_and_centrality(&table).passed());
    }

    #[test]
    fn bilinear_extension() {
        let fl = loci(&[Mat::identity(2).scale(&Cyclotomic::from_integer(-1))]);
        let sa = sa_table(&fl);
        let alg = FiberAlgebra::new(&fl, &sa);
        let mut a = FiberElement::basis(0, 0b01);
        a.add_term(1, 0, &Cyclotomic::from_integer(3));
        let b = FiberElement::basis(0, 0b10);
        let p = alg.multiply(&a, &b);
        assert_eq!(p, FiberElement::basis(0, 0b11));
        assert_eq!(p, alg.alternate_multiply(&a, &b));
    }
}
