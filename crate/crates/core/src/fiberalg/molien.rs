use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::arith::{Cyclotomic, Field};
use crate::error::{Error, Result};
use crate::fixedloci::FixedLoci;
use crate::linalg::{det, det_one_minus_t, Mat};
use crate::{CycloMat, Rational};

/// Cohomological degree ↦ coefficients of `t^0 … t^maxdeg`.
#[derive(Clone, Debug, PartialEq)]
pub struct MolienSeries {
    pub maxdeg: usize,
    pub series: BTreeMap<usize, Vec<Rational>>,
}

impl MolienSeries {
    /// The `t^0` coefficients as dimensions.
    pub fn constant_terms(&self) -> BTreeMap<usize, usize> {
        self.series
            .iter()
            .map(|(d, s)| {
                let c = s[0].to_integer();
                (*d, usize::try_from(c).expect("checked nonnegative"))
            })
            .collect()
    }
}

/// Power-series inverse of `p` (with `p[0] = 1`) up to `t^maxdeg`.
fn series_inverse(p: &[Cyclotomic], maxdeg: usize) -> Vec<Cyclotomic> {
    let mut q = vec![Cyclotomic::from_integer(1)];
    for n in 1..=maxdeg {
        let mut acc = Cyclotomic::zero();
        for i in 1..=n.min(p.len() - 1) {
            acc += &(&p[i] * &q[n - i]);
        }
        q.push(-acc);
    }
    q
}

fn restrict(fl: &FixedLoci, g: usize, m: &CycloMat, normal: bool) -> CycloMat {
    let fd = fl.fixed_data(g);
    let space = if normal { &fd.normal } else { &fd.fixed };
    let cols: Vec<Vec<Cyclotomic>> = space
        .vectors()
        .iter()
        .map(|v| {
            let w = m.mul_vec(v);
            if normal {
                fl.normal_coords(g, &w)
            } else {
                fl.fixed_coords(g, &w)
            }
        })
        .collect();
    Mat::from_cols(space.dim(), &cols)
}

/// Bigraded Hilbert series of `(⊕_g O(V^g) ⊗ Λ(V^g) ⊗ det N_g)^G`.
///
/// For each class representative `g` and each `h` in its centralizer,
/// accumulates `det(1 + s·h|V^g) det(h|N_g) / det(1 - t·h⁻¹|V^g)`, sends
/// `s^j` to cohomological degree `j + codim g`, and averages over `C(g)`.
pub fn molien_bigraded(fl: &FixedLoci, maxdeg: usize) -> Result<MolienSeries> {
    let grp = fl.group();
    let parts: Vec<BTreeMap<usize, Vec<Cyclotomic>>> = grp
        .classes()
        .par_iter()
        .map(|class| {
            let g = class[0];
            let f = fl.fixed_data(g).fixed_dim();
            let codim = fl.codim(g);
            let cent = grp.centralizer(g);
            let mut acc: BTreeMap<usize, Vec<Cyclotomic>> = BTreeMap::new();
            for &h in cent {
                let a = restrict(fl, g, grp.matrix(h), false);
                let a_inv = restrict(fl, g, grp.matrix(grp.inv(h)), false);
                let b = restrict(fl, g, grp.matrix(h), true);
                let num =
                    det_one_minus_t(&a.scale(&-Cyclotomic::from_integer(1)), f).expect("square");
                let den = det_one_minus_t(&a_inv, maxdeg).expect("square");
                let inv = series_inverse(&den, maxdeg);
                let db = det(&b).expect("square");
                for (j, sj) in num.iter().enumerate() {
                    let scale = sj * &db;
                    if scale.is_zero() {
                        continue;
                    }
                    let slot = acc
                        .entry(j + codim)
                        .or_insert_with(|| vec![Cyclotomic::zero(); maxdeg + 1]);
                    for (t, q) in inv.iter().enumerate() {
                        slot[t] += &(&scale * q);
                    }
                }
                for j in num.len()..=f {
                    acc.entry(j + codim)
                        .or_insert_with(|| vec![Cyclotomic::zero(); maxdeg + 1]);
                }
            }
            let w = Cyclotomic::from_integer(cent.len() as i64)
                .try_inv()
                .expect("nonempty centralizer");
            for v in acc.values_mut() {
                for x in v.iter_mut() {
                    *x = &*x * &w;
                }
            }
            acc
        })
        .collect();

    let mut total: BTreeMap<usize, Vec<Cyclotomic>> = BTreeMap::new();
    for part in parts {
        for (d, v) in part {
            let slot = total
                .entry(d)
                .or_insert_with(|| vec![Cyclotomic::zero(); maxdeg + 1]);
            for (x, y) in slot.iter_mut().zip(&v) {
                *x += y;
            }
        }
    }
    let mut series = BTreeMap::new();
    for (d, v) in total {
        let mut out = Vec::with_capacity(v.len());
        for (t, x) in v.into_iter().enumerate() {
            let q = x.to_rational().ok_or_else(|| {
                Error::Inconsistent(format!(
                    "Molien coefficient (deg {d}, t^{t}) = {x} is irrational"
                ))
            })?;
            if !q.is_integer() || q.is_negative() {
                return Err(Error::Inconsistent(format!(
                    "Molien coefficient (deg {d}, t^{t}) = {q} is not a nonnegative integer"
                )));
            }
            out.push(q);
        }
        series.insert(d, out);
    }
    Ok(MolienSeries { maxdeg, series })
}
