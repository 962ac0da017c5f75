use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::arith::{Cyclotomic, Field};
use crate::detalg::EquivarianceScalars;
use crate::error::{Error, Result};
use crate::fixedloci::FixedLoci;
use crate::linalg::exterior::lambda_image;
use crate::linalg::{rank, Mat};
use crate::CycloMat;

/// Cohomological degree ↦ dimension.
pub type GradedDims = BTreeMap<usize, usize>;

/// Matrix of `k: V^g → V^{kgk⁻¹}` in the kernel bases.
pub(crate) fn transport_matrix(fl: &FixedLoci, k: usize, g: usize) -> CycloMat {
    let grp = fl.group();
    let target = grp.conjugate(k, g);
    let km = grp.matrix(k);
    let cols: Vec<Vec<Cyclotomic>> = fl
        .fixed_data(g)
        .fixed
        .vectors()
        .iter()
        .map(|v| fl.fixed_coords(target, &km.mul_vec(v)))
        .collect();
    Mat::from_cols(fl.fixed_data(target).fixed_dim(), &cols)
}

fn masks_of_size(f: usize, e: usize) -> Vec<u32> {
    (0..1u32 << f)
        .filter(|m| m.count_ones() as usize == e)
        .collect()
}

/// Rank of the averaging projector on each `(cohomological, exterior)` block.
///
/// `ρ(k)(g, S) = ε_k(g) · (kgk⁻¹, Λ(A_{k,g}) e_S)`; the action preserves
/// conjugacy classes and exterior degree, so the projector is block-diagonal.
pub fn invariant_dims_bigraded(
    fl: &FixedLoci,
    eps: &EquivarianceScalars,
) -> BTreeMap<(usize, usize), usize> {
    let grp = fl.group();
    let n = grp.len();
    let inv_order = Cyclotomic::from_integer(n as i64)
        .try_inv()
        .expect("nonempty group");
    let blocks: Vec<((usize, usize), usize)> = grp
        .classes()
        .par_iter()
        .flat_map_iter(|class| {
            let rep = class[0];
            let f = fl.fixed_data(rep).fixed_dim();
            let codim = fl.codim(rep);
            let transports: HashMap<(usize, usize), CycloMat> = class
                .iter()
                .flat_map(|&g| (0..n).map(move |k| (k, g)))
                .map(|(k, g)| ((k, g), transport_matrix(fl, k, g)))
                .collect();
            let inv_order = inv_order.clone();
            (0..=f).map(move |e| {
                let masks = masks_of_size(f, e);
                let cols: Vec<(usize, u32)> = class
                    .iter()
                    .flat_map(|&g| masks.iter().map(move |&m| (g, m)))
                    .collect();
                let pos: HashMap<(usize, u32), usize> =
                    cols.iter().enumerate().map(|(i, c)| (*c, i)).collect();
                let mut p = Mat::<Cyclotomic>::zeros(cols.len(), cols.len());
                for (j, &(g, s)) in cols.iter().enumerate() {
                    for k in 0..n {
                        let target = grp.conjugate(k, g);
                        let img = lambda_image(&transports[&(k, g)], s);
                        let scale = eps.get(k, g);
                        for (m, c) in img.terms() {
                            let i = pos[&(target, *m)];
                            let add = c * scale;
                            p[(i, j)] += &add;
                        }
                    }
                }
                let p = p.scale(&inv_order);
                ((codim + e, e), rank(&p))
            })
        })
        .collect();
    let mut out = BTreeMap::new();
    for (key, r) in blocks {
        *out.entry(key).or_insert(0) += r;
    }
    out
}

/// Dimensions of the `G`-invariant part of the fiber algebra by degree.
pub fn invariant_dims(fl: &FixedLoci, eps: &EquivarianceScalars) -> GradedDims {
    let mut out = GradedDims::new();
    for ((deg, _), r) in invariant_dims_bigraded(fl, eps) {
        *out.entry(deg).or_insert(0) += r;
    }
    out
}

/// Number of conjugacy classes with `codim V^g = j`; needs a symplectic action.
pub fn orbifold_dims(fl: &FixedLoci, symplectic: bool) -> Result<GradedDims> {
    if !symplectic {
        return Err(Error::NotSymplectic);
    }
    let mut out = GradedDims::new();
    for class in fl.group().classes() {
        *out.entry(fl.codim(class[0])).or_insert(0) += 1;
    }
    Ok(out)
}
