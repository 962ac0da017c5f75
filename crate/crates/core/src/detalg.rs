//! The determinant-line subalgebra `SA = ⊕_g det(N_g)`.
//!
//! Constants are relative to the pivot bases chosen in [`crate::fixedloci`]:
//! `ψ_g ψ_h = c(g,h) ψ_{gh}` with `ψ_g` the wedge of the `N_g` basis.

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::Cyclotomic;
use crate::fixedloci::FixedLoci;
use crate::linalg::{det, wedge_coefficient};
use crate::verdict::Verdict;

/// `c(g,h)` for every ordered pair, zero off the transverse-shared pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct SAConstants {
    n: usize,
    table: Vec<Cyclotomic>,
}

impl SAConstants {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, g: usize, h: usize) -> &Cyclotomic {
        &self.table[g * self.n + h]
    }

    /// Overwrites one constant; used to exercise the verification paths.
    pub fn set(&mut self, g: usize, h: usize, value: Cyclotomic) {
        self.table[g * self.n + h] = value;
    }

    pub fn nonzero_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n * self.n)
            .filter(|&i| !self.table[i].is_zero())
            .map(|i| (i / self.n, i % self.n))
    }
}

/// `ε_k(g)` with `k·ψ_g = ε_k(g) ψ_{kgk⁻¹}`.
#[derive(Clone, Debug, PartialEq)]
pub struct EquivarianceScalars {
    n: usize,
    eps: Vec<Cyclotomic>,
}

impl EquivarianceScalars {
    pub fn get(&self, k: usize, g: usize) -> &Cyclotomic {
        &self.eps[k * self.n + g]
    }
}

/// `κ(v)` as a vector of `V`: the `N_{gh}` component along `V^{gh}`.
fn kappa_image(fl: &FixedLoci, gh: usize, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
    let coords = fl.normal_coords(gh, v);
    fl.fixed_data(gh).normal.basis().mul_vec(&coords)
}

/// Wedge of the κ-images against the `N_{gh}` reference wedge.
pub fn sa_constant(fl: &FixedLoci, g: usize, h: usize) -> Cyclotomic {
    if !fl.transverse_shared(g, h) {
        return Cyclotomic::zero();
    }
    let gh = fl.group().mul(g, h);
    let images: Vec<Vec<Cyclotomic>> = fl
        .fixed_data(g)
        .normal
        .vectors()
        .iter()
        .chain(fl.fixed_data(h).normal.vectors().iter())
        .map(|v| kappa_image(fl, gh, v))
        .collect();
    wedge_coefficient(&images, &fl.fixed_data(gh).normal).expect("κ lands in N_gh")
}

/// `det(κ)`, zero when the codimensions are not additive.
pub fn sa_constant_via_kappa(fl: &FixedLoci, g: usize, h: usize) -> Cyclotomic {
    match fl.kappa_matrix(g, h) {
        Ok(k) => det(&k).expect("square"),
        Err(_) => Cyclotomic::zero(),
    }
}

pub fn sa_table(fl: &FixedLoci) -> SAConstants {
    let n = fl.group().len();
    let table = (0..n * n)
        .into_par_iter()
        .map(|i| sa_constant(fl, i / n, i % n))
        .collect();
    SAConstants { n, table }
}

pub fn equivariance_scalars(fl: &FixedLoci) -> EquivarianceScalars {
    let grp = fl.group();
    let n = grp.len();
    let eps = (0..n * n)
        .into_par_iter()
        .map(|i| {
            let (k, g) = (i / n, i % n);
            let target = grp.conjugate(k, g);
            let km = grp.matrix(k);
            let moved: Vec<Vec<Cyclotomic>> = fl
                .fixed_data(g)
                .normal
                .vectors()
                .iter()
                .map(|v| km.mul_vec(v))
                .collect();
            wedge_coefficient(&moved, &fl.fixed_data(target).normal)
                .expect("k maps N_g onto N_kgk⁻¹")
        })
        .collect();
    EquivarianceScalars { n, eps }
}

/// `c(e,h) = c(g,e) = 1` and `c(g,h) ≠ 0 ⟺` transverse-shared `⟺` additive.
pub fn check_vanishing_pattern(fl: &FixedLoci, sa: &SAConstants) -> Verdict {
    let n = sa.len();
    let mut v = Verdict::new("SA vanishing pattern");
    for g in 0..n {
        v.record(sa.get(0, g).is_one() && sa.get(g, 0).is_one(), || {
            format!("unit constants fail at {g}")
        });
        for h in 0..n {
            let nz = !sa.get(g, h).is_zero();
            let ts = fl.transverse_shared(g, h);
            let add = fl.codim_additive(g, h);
            v.record(nz == ts && ts == add, || {
                format!("({g},{h}): nonzero={nz} transverse={ts} additive={add}")
            });
        }
    }
    v
}

/// Agreement of the wedge route with `det(κ)` on every pair.
pub fn check_two_routes(fl: &FixedLoci, sa: &SAConstants) -> Verdict {
    let n = sa.len();
    let results: Vec<(usize, usize, bool)> = (0..n * n)
        .into_par_iter()
        .map(|i| {
            let (g, h) = (i / n, i % n);
            (g, h, sa.get(g, h) == &sa_constant_via_kappa(fl, g, h))
        })
        .collect();
    let mut v = Verdict::new("SA wedge route = det(kappa)");
    for (g, h, ok) in results {
        v.record(ok, || {
            format!("c({g},{h}) = {} disagrees with det(kappa)", sa.get(g, h))
        });
    }
    v
}

/// `c(g,h) c(gh,k) = c(h,k) c(g,hk)` on all triples, zeros included.
pub fn check_associativity(fl: &FixedLoci, sa: &SAConstants) -> Verdict {
    let grp = fl.group();
    let n = sa.len();
    let per_g: Vec<Verdict> = (0..n)
        .into_par_iter()
        .map(|g| {
            let mut v = Verdict::new("SA associativity");
            for h in 0..n {
                let gh = grp.mul(g, h);
                for k in 0..n {
                    let hk = grp.mul(h, k);
                    let left = sa.get(g, h) * sa.get(gh, k);
                    let right = sa.get(h, k) * sa.get(g, hk);
                    v.record(left == right, || {
                        format!("triple ({g},{h},{k}): {left} vs {right}")
                    });
                }
            }
            v
        })
        .collect();
    let mut v = Verdict::new("SA associativity");
    per_g.into_iter().for_each(|x| v.merge(x));
    v
}

/// `ε_{k₁k₂}(g) = ε_{k₁}(k₂gk₂⁻¹) ε_{k₂}(g)` and `ε_e = 1`.
pub fn check_eps_cocycle(fl: &FixedLoci, eps: &EquivarianceScalars) -> Verdict {
    let grp = fl.group();
    let n = grp.len();
    let mut v = Verdict::new("equivariance cocycle");
    for g in 0..n {
        v.record(eps.get(0, g).is_one(), || format!("eps_e({g}) != 1"));
        for k1 in 0..n {
            for k2 in 0..n {
                let left = eps.get(grp.mul(k1, k2), g);
                let right = eps.get(k1, grp.conjugate(k2, g)) * eps.get(k2, g);
                v.record(left == &right, || format!("(k1,k2,g) = ({k1},{k2},{g})"));
            }
        }
    }
    v
}

/// `c(kgk⁻¹, khk⁻¹) ε_k(g) ε_k(h) = ε_k(gh) c(g,h)` whenever `c(g,h) ≠ 0`.
pub fn check_compatibility(fl: &FixedLoci, sa: &SAConstants, eps: &EquivarianceScalars) -> Verdict {
    let grp = fl.group();
    let n = grp.len();
    let mut v = Verdict::new("SA equivariance compatibility");
    for (g, h) in sa.nonzero_pairs() {
        let gh = grp.mul(g, h);
        for k in 0..n {
            let left =
                sa.get(grp.conjugate(k, g), grp.conjugate(k, h)) * eps.get(k, g) * eps.get(k, h);
            let right = eps.get(k, gh) * sa.get(g, h);
            v.record(left == right, || {
                format!("(k,g,h) = ({k},{g},{h}): {left} vs {right}")
            });
        }
    }
    v
}
