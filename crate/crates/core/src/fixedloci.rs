//! Fixed spaces `V^g = ker(1-g)`, normal spaces `N_g = (1-g)V`, and the
//! pair conditions relating them.

use std::sync::OnceLock;

use crate::arith::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::FiniteMatrixGroup;
use crate::linalg::{image, inverse, kernel, rank, Mat, Subspace};
use crate::CycloMat;

/// The splitting `V = V^g ⊕ N_g` for one element.
#[derive(Clone, Debug)]
pub struct FixedData {
    pub g: usize,
    pub fixed: Subspace<Cyclotomic>,
    pub normal: Subspace<Cyclotomic>,
    pub codim: usize,
    /// Inverse of `[fixed | normal]`: maps a vector to adapted coordinates.
    pub adapted_inv: CycloMat,
}

impl FixedData {
    pub fn fixed_dim(&self) -> usize {
        self.fixed.dim()
    }

    /// Coordinates of `v` in the basis `[fixed | normal]`.
    pub fn adapted_coords(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        self.adapted_inv.mul_vec(v)
    }
}

/// Results of the seven equivalent conditions for a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairReport {
    pub g: usize,
    pub h: usize,
    /// `(1-g)V ⊆ (1-gh)V`
    pub i: bool,
    /// `(1-g)V + (1-h)V = (1-gh)V`
    pub ii: bool,
    /// `(1-g)V ∩ (1-h)V = 0`
    pub iii: bool,
    /// `V^{⟨g,h⟩} = V^{gh}`
    pub iv: bool,
    /// `(1-gh)V = (1-g)V ⊕ (1-h)V`
    pub a: bool,
    /// `V^{gh} = V^g ∩ V^h`
    pub b: bool,
    /// `V = V^g + V^h`
    pub c: bool,
    pub codim_additive: bool,
    pub transverse_shared: bool,
}

impl PairReport {
    pub fn conditions(&self) -> [(&'static str, bool); 7] {
        [
            ("i", self.i),
            ("ii", self.ii),
            ("iii", self.iii),
            ("iv", self.iv),
            ("a", self.a),
            ("b", self.b),
            ("c", self.c),
        ]
    }

    /// All seven conditions agree, and transversality matches additivity.
    pub fn consistent(&self) -> bool {
        let all = self.conditions();
        all.iter().all(|(_, v)| *v == all[0].1) && self.transverse_shared == self.codim_additive
    }

    /// The implications that hold for every pair: (i), (ii), (iv), (b) agree;
    /// (iii), (a), (c) agree with transversality and additivity; the second
    /// group implies the first. A 3-cycle paired with itself satisfies the
    /// first group only, so [`PairReport::consistent`] can fail.
    pub fn implications_hold(&self) -> bool {
        let weak = [self.i, self.ii, self.iv, self.b];
        let strong = [
            self.iii,
            self.a,
            self.c,
            self.transverse_shared,
            self.codim_additive,
        ];
        weak.iter().all(|v| *v == weak[0])
            && strong.iter().all(|v| *v == strong[0])
            && (!strong[0] || weak[0])
    }
}

/// Codimension inequalities `codim(gh) ≤ d - dim(V^g ∩ V^h) ≤ codim g + codim h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodimCheck {
    pub codim_gh: usize,
    pub codim_intersection: usize,
    pub codim_sum: usize,
    pub lower: bool,
    pub upper: bool,
}

/// A group together with lazily computed per-element fixed-space data.
#[derive(Debug)]
pub struct FixedLoci {
    group: FiniteMatrixGroup,
    cache: Vec<OnceLock<FixedData>>,
}

impl FixedLoci {
    pub fn new(group: FiniteMatrixGroup) -> Self {
        let cache = (0..group.len()).map(|_| OnceLock::new()).collect();
        FixedLoci { group, cache }
    }

    pub fn group(&self) -> &FiniteMatrixGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.group.dim()
    }

    pub fn one_minus(&self, g: usize) -> CycloMat {
        Mat::identity(self.dim()).sub(self.group.matrix(g))
    }

    pub fn fixed_data(&self, g: usize) -> &FixedData {
        self.cache[g].get_or_init(|| self.compute(g))
    }

    fn compute(&self, g: usize) -> FixedData {
        let d = self.dim();
        let om = self.one_minus(g);
        let fixed = kernel(&om);
        let normal = image(&om);
        let adapted = fixed.basis().hstack(normal.basis());
        let adapted_inv = inverse(&adapted).expect("V = V^g ⊕ (1-g)V for finite-order g");
        let m = self.group.matrix(g);
        debug_assert!(fixed.vectors().iter().all(|v| &m.mul_vec(v) == v));
        FixedData {
            g,
            codim: d - fixed.dim(),
            fixed,
            normal,
            adapted_inv,
        }
    }

    pub fn codim(&self, g: usize) -> usize {
        self.fixed_data(g).codim
    }

    pub fn codim_additive(&self, g: usize, h: usize) -> bool {
        self.codim(self.group.mul(g, h)) == self.codim(g) + self.codim(h)
    }

    /// `V^{gh} = V^g ∩ V^h` and `V^g + V^h = V`.
    pub fn transverse_shared(&self, g: usize, h: usize) -> bool {
        let (fg, fh) = (self.fixed_data(g), self.fixed_data(h));
        let fgh = self.fixed_data(self.group.mul(g, h));
        fg.fixed.intersection(&fh.fixed).same_space(&fgh.fixed)
            && fg.fixed.sum(&fh.fixed).dim() == self.dim()
    }

    /// Evaluates every condition independently of the others.
    pub fn dualrels_battery(&self, g: usize, h: usize) -> PairReport {
        let d = self.dim();
        let gh = self.group.mul(g, h);
        let (fg, fh, fgh) = (self.fixed_data(g), self.fixed_data(h), self.fixed_data(gh));
        let (ng, nh, ngh) = (&fg.normal, &fh.normal, &fgh.normal);
        let i = ngh.contains_subspace(ng);
        let ii = ng.sum(nh).same_space(ngh);
        let iii = ng.intersection(nh).dim() == 0;
        let stacked = self.one_minus(g).vstack(&self.one_minus(h));
        let iv = kernel(&stacked).same_space(&fgh.fixed);
        let a = ii && ng.dim() + nh.dim() == ngh.dim();
        let b = fg.fixed.intersection(&fh.fixed).same_space(&fgh.fixed);
        let c = rank(&fg.fixed.basis().hstack(fh.fixed.basis())) == d;
        PairReport {
            g,
            h,
            i,
            ii,
            iii,
            iv,
            a,
            b,
            c,
            codim_additive: self.codim_additive(g, h),
            transverse_shared: b && c,
        }
    }

    pub fn codim_check(&self, g: usize, h: usize) -> CodimCheck {
        let d = self.dim();
        let gh = self.group.mul(g, h);
        let inter = self
            .fixed_data(g)
            .fixed
            .intersection(&self.fixed_data(h).fixed);
        let codim_gh = self.codim(gh);
        let codim_intersection = d - inter.dim();
        let codim_sum = self.codim(g) + self.codim(h);
        CodimCheck {
            codim_gh,
            codim_intersection,
            codim_sum,
            lower: codim_gh <= codim_intersection,
            upper: codim_intersection <= codim_sum,
        }
    }

    /// Projection of `v` onto `N_τ` along `V^τ`, in the `N_τ` basis.
    pub fn normal_coords(&self, tau: usize, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let fd = self.fixed_data(tau);
        fd.adapted_coords(v).split_off(fd.fixed_dim())
    }

    /// Projection of `v` onto `V^τ` along `N_τ`, in the `V^τ` basis.
    pub fn fixed_coords(&self, tau: usize, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let fd = self.fixed_data(tau);
        let mut c = fd.adapted_coords(v);
        c.truncate(fd.fixed_dim());
        c
    }

    /// Matrix of κ: N_g ⊕ N_h → N_{gh} in the pivot bases.
    pub fn kappa_matrix(&self, g: usize, h: usize) -> Result<CycloMat> {
        let gh = self.group.mul(g, h);
        let (cg, ch, cgh) = (self.codim(g), self.codim(h), self.codim(gh));
        if cg + ch != cgh {
            return Err(Error::DimensionMismatch(format!(
                "codim {cg} + {ch} != {cgh} for the pair ({g}, {h})"
            )));
        }
        let cols: Vec<Vec<Cyclotomic>> = self
            .fixed_data(g)
            .normal
            .vectors()
            .iter()
            .chain(self.fixed_data(h).normal.vectors().iter())
            .map(|v| self.normal_coords(gh, v))
            .collect();
        Ok(Mat::from_cols(cgh, &cols))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{close_generators, permutation_matrix, DEFAULT_CAP};
    use crate::linalg::det;
    use num_traits::Zero;

    fn cot_perm(sigma: &[usize]) -> CycloMat {
        let p = permutation_matrix(sigma);
        let z = Mat::zeros(sigma.len(), sigma.len());
        p.hstack(&z).vstack(&z.hstack(&p))
    }

    fn s3_cot() -> FixedLoci {
        let gens = [cot_perm(&[1, 0, 2]), cot_perm(&[1, 2, 0])];
        FixedLoci::new(close_generators(&gens, DEFAULT_CAP).unwrap())
    }

    #[test]
    fn identity_and_minus_one() {
        let m = Mat::identity(2).scale(&Cyclotomic::from_integer(-1));
        let fl = FixedLoci::new(close_generators(&[m], DEFAULT_CAP).unwrap());
        assert_eq!(fl.codim(0), 0);
        assert_eq!(fl.fixed_data(0).fixed.dim(), 2);
        assert_eq!(fl.codim(1), 2);
        assert_eq!(fl.fixed_data(1).fixed.dim(), 0);
    }

    #[test]
    fn s3_on_cotangent() {
        let fl = s3_cot();
        let g = fl.group();
        let t12 = g.index_of(&cot_perm(&[1, 0, 2])).unwrap();
        let t23 = g.index_of(&cot_perm(&[0, 2, 1])).unwrap();
        assert_eq!(fl.codim(t12), 2);
        let rep = fl.dualrels_battery(t12, t23);
        assert!(rep.conditions().iter().all(|(_, v)| *v));
        assert!(rep.consistent());
        let rep = fl.dualrels_battery(t12, t12);
        assert!(rep.conditions().iter().all(|(_, v)| !*v));
        let e = fl.dualrels_battery(0, 0);
        assert!(e.conditions().iter().all(|(_, v)| *v));

        let c = fl.codim_check(t12, t23);
        assert_eq!((c.codim_gh, c.codim_intersection, c.codim_sum), (4, 4, 4));
        let c = fl.codim_check(t12, t12);
        assert_eq!((c.codim_gh, c.codim_intersection, c.codim_sum), (0, 2, 4));
        assert!(c.lower && c.upper);

        let k = fl.kappa_matrix(t12, t23).unwrap();
        assert_eq!((k.rows(), k.cols()), (4, 4));
        assert!(!det(&k).unwrap().is_zero());
        assert!(fl.kappa_matrix(t12, t12).is_err());
        assert!(fl.kappa_matrix(0, t12).unwrap().is_identity());
    }
}
