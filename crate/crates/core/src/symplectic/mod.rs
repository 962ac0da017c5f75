//! Symplectic normalization: canonical generators `ψ_g`, the cocycle
//! `a(g,h)`, the square roots `λ_g = det(1-g|N_g)^{1/2}`, and the checks
//! that `μ_g = λ_g ψ_g` multiply transparently.

pub mod complements;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{Cyclotomic, SqrtPosReal, POSITIVITY_TOL};
use crate::detalg::SAConstants;
use crate::error::{Error, Result};
use crate::fixedloci::FixedLoci;
use crate::linalg::{det, inverse, pfaffian, Mat};
use crate::verdict::Verdict;
use crate::CycloMat;

/// The form `ω` as a matrix `J` (`ω(x,y) = xᵀJy`) and the bivector `π = J⁻¹`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymplecticStructure {
    pub j: CycloMat,
    pub pi: CycloMat,
}

impl SymplecticStructure {
    pub fn new(j: CycloMat) -> Result<Self> {
        if !j.is_square() || j.rows() % 2 == 1 {
            return Err(Error::InvalidForm(format!(
                "form must be square of even size, got {}x{}",
                j.rows(),
                j.cols()
            )));
        }
        if !j.is_skew() {
            return Err(Error::InvalidForm("form is not skew-symmetric".into()));
        }
        let pi = inverse(&j).map_err(|_| Error::InvalidForm("form is degenerate".into()))?;
        Ok(SymplecticStructure { j, pi })
    }

    /// `[[0, I], [-I, 0]]` on `F^{2k}`.
    pub fn standard(dim: usize) -> Result<Self> {
        if dim % 2 == 1 {
            return Err(Error::OddDimension(dim));
        }
        let k = dim / 2;
        let j = Mat::from_fn(dim, dim, |r, c| {
            if c == r + k {
                Cyclotomic::from_integer(1)
            } else if r == c + k {
                Cyclotomic::from_integer(-1)
            } else {
                Cyclotomic::zero()
            }
        });
        Self::new(j)
    }

    pub fn dim(&self) -> usize {
        self.j.rows()
    }
}

/// Per-element data of the symplectic normalization.
#[derive(Clone, Debug)]
pub struct CanonicalGenerators {
    /// `ψ_g = s_g · (wedge of the N_g basis)`.
    pub s: Vec<Cyclotomic>,
    pub lambda: Vec<SqrtPosReal>,
}

/// `s_g`: Pfaffian of the `N_g` block of `π` in the adapted basis.
///
/// `(1/d!)(π_g^⊥)^d = Pf(π_NN) n_1 ∧ … ∧ n_{2d}` for a bivector with
/// coefficient matrix `π_NN`.
pub fn compute_psi(fl: &FixedLoci, sym: &SymplecticStructure, g: usize) -> Result<Cyclotomic> {
    let fd = fl.fixed_data(g);
    let f = fd.fixed_dim();
    let d = fl.dim();
    let b_inv = &fd.adapted_inv;
    let pi_adapted = b_inv.matmul(&sym.pi).matmul(&b_inv.transpose());
    let fixed: Vec<usize> = (0..f).collect();
    let normal: Vec<usize> = (f..d).collect();
    if !pi_adapted.select(&fixed, &normal).is_zero() {
        return Err(Error::MixedComponent { element: g });
    }
    pfaffian(&pi_adapted.select(&normal, &normal))
}

/// `λ_g² = det((1-g)|N_g)`, checked real and positive.
pub fn lambda(fl: &FixedLoci, g: usize) -> Result<SqrtPosReal> {
    let fd = fl.fixed_data(g);
    let om = fl.one_minus(g);
    let cols: Vec<Vec<Cyclotomic>> = fd
        .normal
        .vectors()
        .iter()
        .map(|v| fl.normal_coords(g, &om.mul_vec(v)))
        .collect();
    let square = det(&Mat::from_cols(fd.codim, &cols))?;
    SqrtPosReal::new(square)
}

pub fn canonical_generators(
    fl: &FixedLoci,
    sym: &SymplecticStructure,
) -> Result<CanonicalGenerators> {
    let n = fl.group().len();
    let s = (0..n)
        .into_par_iter()
        .map(|g| compute_psi(fl, sym, g))
        .collect::<Result<Vec<_>>>()?;
    let lambda = (0..n)
        .into_par_iter()
        .map(|g| lambda(fl, g))
        .collect::<Result<Vec<_>>>()?;
    Ok(CanonicalGenerators { s, lambda })
}

/// `a(g,h) = c(g,h) s_g s_h / s_{gh}` on transverse-shared pairs.
pub fn cocycle(
    fl: &FixedLoci,
    sa: &SAConstants,
    gens: &CanonicalGenerators,
    g: usize,
    h: usize,
) -> Result<Cyclotomic> {
    if !fl.transverse_shared(g, h) {
        return Err(Error::NotTransverse { g, h });
    }
    let gh = fl.group().mul(g, h);
    let num = sa.get(g, h) * &gens.s[g] * &gens.s[h];
    &num / &gens.s[gh]
}

/// All defined cocycle values, keyed by pair.
pub fn cocycle_table(
    fl: &FixedLoci,
    sa: &SAConstants,
    gens: &CanonicalGenerators,
) -> Vec<((usize, usize), Cyclotomic)> {
    let n = fl.group().len();
    let mut out = Vec::new();
    for g in 0..n {
        for h in 0..n {
            if let Ok(a) = cocycle(fl, sa, gens, g, h) {
                out.push(((g, h), a));
            }
        }
    }
    out
}

fn positive(x: &Cyclotomic) -> bool {
    let z = x.cyclo_embed();
    x.is_real() && z.re > POSITIVITY_TOL && z.im.abs() < POSITIVITY_TOL
}

/// The identities that make `λ_{gh}/(λ_g λ_h)` the cocycle.
pub fn verify_coboundary(
    fl: &FixedLoci,
    sa: &SAConstants,
    gens: &CanonicalGenerators,
) -> Vec<Verdict> {
    let grp = fl.group();
    let n = grp.len();
    let table = cocycle_table(fl, sa, gens);
    let mut squared = Verdict::new("a^2 lambda_g^2 lambda_h^2 = lambda_gh^2");
    let mut sign = Verdict::new("a(g,h) > 0");
    for ((g, h), a) in &table {
        let gh = grp.mul(*g, *h);
        let l = &gens.lambda;
        let left = a * a * l[*g].square() * l[*h].square();
        squared.record(&left == l[gh].square(), || {
            format!("({g},{h}): a = {a}, lhs {left} vs {}", l[gh].square())
        });
        sign.record(positive(a), || {
            format!("({g},{h}): a = {a} ~ {}", a.cyclo_embed())
        });
    }
    let mut lam = Verdict::new("lambda^2 conjugation invariant");
    let mut cov = Verdict::new("a conjugation invariant");
    for g in 0..n {
        for k in 0..n {
            let kg = grp.conjugate(k, g);
            lam.record(gens.lambda[g].square() == gens.lambda[kg].square(), || {
                format!("lambda^2 differs on ({g}, {kg})")
            });
        }
    }
    for ((g, h), a) in &table {
        for k in 0..n {
            let (kg, kh) = (grp.conjugate(k, *g), grp.conjugate(k, *h));
            let b = cocycle(fl, sa, gens, kg, kh);
            cov.record(b.as_ref() == Ok(a), || format!("k = {k}, pair ({g},{h})"));
        }
    }
    vec![squared, sign, lam, cov]
}

/// Rescaled constants `a λ_g λ_h / λ_{gh}`, decided as 1 through the squared
/// identity and positivity; compared with `gr_F C[G]` built from codimensions.
pub fn transparent_check(fl: &FixedLoci, sa: &SAConstants, gens: &CanonicalGenerators) -> Verdict {
    let grp = fl.group();
    let n = grp.len();
    let mut v = Verdict::new("rescaled det-line algebra = gr_F C[G]");
    for g in 0..n {
        for h in 0..n {
            let gh = grp.mul(g, h);
            let gr = fl.codim(gh) == fl.codim(g) + fl.codim(h);
            let rescaled = match cocycle(fl, sa, gens, g, h) {
                Ok(a) => {
                    let l = &gens.lambda;
                    let sq = &a * &a * l[g].square() * l[h].square();
                    let ratio = (&sq / l[gh].square()).expect("lambda nonzero");
                    ratio.is_one() && positive(&a)
                }
                Err(_) => false,
            };
            v.record(rescaled == gr, || {
                format!("({g},{h}): rescaled is one = {rescaled}, gr_F product nonzero = {gr}")
            });
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detalg::sa_table;
    use crate::group::{close_generators, DEFAULT_CAP};

    #[test]
    fn minus_one_generators() {
        let m = Mat::identity(2).scale(&Cyclotomic::from_integer(-1));
        let fl = FixedLoci::new(close_generators(&[m], DEFAULT_CAP).unwrap());
        let sym = SymplecticStructure::standard(2).unwrap();
        assert!(compute_psi(&fl, &sym, 0).unwrap().is_one());
        let s = compute_psi(&fl, &sym, 1).unwrap();
        assert!(!s.is_zero());
        assert_eq!(
            lambda(&fl, 1).unwrap().square(),
            &Cyclotomic::from_integer(4)
        );
        assert!(lambda(&fl, 0).unwrap().square().is_one());
        let sa = sa_table(&fl);
        let gens = canonical_generators(&fl, &sym).unwrap();
        assert!(verify_coboundary(&fl, &sa, &gens)
            .iter()
            .all(Verdict::passed));
        assert!(transparent_check(&fl, &sa, &gens).passed());
        assert_eq!(
            cocycle(&fl, &sa, &gens, 1, 1),
            Err(Error::NotTransverse { g: 1, h: 1 })
        );
    }

    #[test]
    fn invalid_forms() {
        assert!(SymplecticStructure::new(Mat::identity(2)).is_err());
        assert!(SymplecticStructure::new(Mat::zeros(2, 2)).is_err());
        assert!(SymplecticStructure::standard(3).is_err());
    }

    #[test]
    fn mixed_component_detected() {
        // diag(-1, 1) does not preserve ω on C^2
        let r = Mat::diag(&[Cyclotomic::from_integer(-1), Cyclotomic::from_integer(1)]);
        let fl = FixedLoci::new(close_generators(&[r], DEFAULT_CAP).unwrap());
        let sym = SymplecticStructure::standard(2).unwrap();
        assert_eq!(
            compute_psi(&fl, &sym, 1),
            Err(Error::MixedComponent { element: 1 })
        );
    }
}
