//! Randomized checks of the Pfaffian identities for a pair of complementary
//! nondegenerate subspaces `V = W ⊕ U`, over Q.
//!
//! Coordinates: `ω(x, y) = xᵀ J x` with `J` block-diagonal `J_{r+s}`, so the
//! bivector `π` has coefficient matrix `J` as well. A random symplectic
//! matrix `S` supplies the symplectic basis `v_i = S e_i`.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::{ratio, Field};
use crate::linalg::exterior::Multivector;
use crate::linalg::{det, inverse, pfaffian};
use crate::verdict::Verdict;
use crate::{Rational, RationalMat};

/// Block-diagonal `J_n = diag([[0,1],[-1,0]], …)`.
pub fn standard_j(n: usize) -> RationalMat {
    let mut j = RationalMat::zeros(2 * n, 2 * n);
    for p in 0..n {
        j[(2 * p, 2 * p + 1)] = Rational::one();
        j[(2 * p + 1, 2 * p)] = -Rational::one();
    }
    j
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

/// Product of random symplectic transvections `x ↦ x + c ω(u, x) u`.
fn random_symplectic(rng: &mut ChaCha8Rng, j: &RationalMat) -> RationalMat {
    let d = j.rows();
    let mut s = RationalMat::identity(d);
    for _ in 0..2 * d {
        let u: Vec<Rational> = (0..d).map(|_| ratio(rng.gen_range(-2..=2), 1)).collect();
        let c = ratio(if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(1..=2));
        let ucol = RationalMat::from_cols(d, &[u]);
        let t = RationalMat::identity(d).add(&ucol.matmul(&ucol.transpose()).matmul(j).scale(&c));
        s = t.matmul(&s);
    }
    s
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> RationalMat {
    loop {
        let m = RationalMat::from_fn(n, n, |_, _| small_rational(rng));
        if !det(&m).expect("square").is_zero() {
            return m;
        }
    }
}

/// One randomized instance of `V = W ⊕ U`.
#[derive(Clone, Debug)]
pub struct Instance {
    pub j: RationalMat,
    /// Columns `w_1 … w_{2r}`.
    pub bw: RationalMat,
    /// Columns `v_{2r+1} … v_{2r+2s}`.
    pub bu: RationalMat,
    /// `c_ik = ω(w_i, w_k)`.
    pub c: RationalMat,
}

impl Instance {
    /// Draws an instance; `perturb = false` gives `W ⊥ U`.
    pub fn random(rng: &mut ChaCha8Rng, r: usize, s: usize, perturb: bool) -> Self {
        let n = r + s;
        let j = standard_j(n);
        loop {
            let sm = random_symplectic(rng, &j);
            let v = sm.columns();
            let bu = RationalMat::from_cols(2 * n, &v[2 * r..]);
            let ws: Vec<Vec<Rational>> = (0..2 * r)
                .map(|i| {
                    let mut w = v[i].clone();
                    if perturb {
                        for u in &v[2 * r..] {
                            let b = small_rational(rng);
                            for (x, y) in w.iter_mut().zip(u) {
                                *x += &b * y;
                            }
                        }
                    }
                    w
                })
                .collect();
            let bw = RationalMat::from_cols(2 * n, &ws);
            let c = bw.transpose().matmul(&j).matmul(&bw);
            if !det(&c).expect("square").is_zero() {
                return Instance { j, bw, bu, c };
            }
        }
    }

    /// `ω`-orthogonal projector `B (BᵀJB)⁻¹ BᵀJ` onto the span of `b`.
    fn orthogonal_projector(&self, b: &RationalMat) -> RationalMat {
        let gram = b.transpose().matmul(&self.j).matmul(b);
        let gi = inverse(&gram).expect("nondegenerate");
        b.matmul(&gi).matmul(&b.transpose()).matmul(&self.j)
    }

    pub fn projectors(&self) -> (RationalMat, RationalMat) {
        (
            self.orthogonal_projector(&self.bw),
            self.orthogonal_projector(&self.bu),
        )
    }

    /// `a(W,U)` from `ψ_W ∧ ψ_U = a ψ_V`, with `ψ_X = π_X^k / k!` and
    /// `π_X = Λ²(P_X) π`.
    pub fn wedge_constant(&self) -> Rational {
        let d = self.j.rows();
        let (r, s) = (self.bw.cols() / 2, self.bu.cols() / 2);
        let pi = Multivector::bivector(&self.j);
        let (pw, pu) = self.projectors();
        let psi = |p: &RationalMat, k: usize| {
            let bi = pi.grade(2).apply(p);
            bi.wedge_power(k).scale(&factorial_inv(k))
        };
        let top = (1u32 << d) - 1;
        let lhs = psi(&pw, r).wedge(&psi(&pu, s)).coeff(top);
        let rhs = pi
            .wedge_power(r + s)
            .scale(&factorial_inv(r + s))
            .coeff(top);
        lhs / rhs
    }
}

fn factorial_inv(k: usize) -> Rational {
    let f: i64 = (1..=k as i64).product();
    ratio(1, f)
}

/// Verdicts of one suite run.
#[derive(Clone, Debug)]
pub struct ComplementReport {
    pub r: usize,
    pub s: usize,
    pub seed: u64,
    pub trials: usize,
    pub verdicts: Vec<Verdict>,
}

impl ComplementReport {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(Verdict::passed)
    }
}

pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Per trial: `a(W,U) = Pf(C^{-T})`, `det(P_W - P_U) = det(C⁻¹)`, the scaled
/// version with random `X`, `Y`, and `Pf² = det`. Trial `t` of seed `s` is
/// replayable on its own through [`trial_rng`]'s stream numbering.
pub fn complement_suite(seed: u64, trials: usize, r: usize, s: usize) -> ComplementReport {
    let results: Vec<[bool; 4]> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            let inst = Instance::random(&mut rng, r, s, true);
            check_instance(&mut rng, &inst)
        })
        .collect();
    let names = [
        "a(W,U) = Pf(C^-T)",
        "det(P_W - P_U) = det(C^-1)",
        "det(X P_W - Y P_U) / det X det Y = det(C^-1)",
        "Pf(C^-T)^2 = det(C^-1)",
    ];
    let verdicts = names
        .iter()
        .enumerate()
        .map(|(i, name)| {
            let mut v = Verdict::new(format!("{name} at (r,s) = ({r},{s})"));
            for (t, res) in results.iter().enumerate() {
                v.record(res[i], || format!("seed {seed} trial {t}"));
            }
            v
        })
        .collect();
    ComplementReport {
        r,
        s,
        seed,
        trials,
        verdicts,
    }
}

pub fn check_instance(rng: &mut ChaCha8Rng, inst: &Instance) -> [bool; 4] {
    let c_inv = inverse(&inst.c).expect("nondegenerate W");
    let pf = pfaffian(&c_inv.transpose()).expect("skew");
    let det_c_inv = det(&c_inv).expect("square");
    let (pw, pu) = inst.projectors();

    let one = inst.wedge_constant() == pf;
    let two = det(&pw.sub(&pu)).expect("square") == det_c_inv;

    let (r2, s2) = (inst.bw.cols(), inst.bu.cols());
    let x = random_invertible(rng, r2);
    let y = random_invertible(rng, s2);
    let b = inst.bw.hstack(&inst.bu);
    let b_inv = inverse(&b).expect("complementary");
    let lift = |top: &RationalMat, bottom: &RationalMat| {
        let n = top.rows() + bottom.rows();
        let blk = RationalMat::from_fn(n, n, |i, j| {
            if i < top.rows() && j < top.rows() {
                top[(i, j)].clone()
            } else if i >= top.rows() && j >= top.rows() {
                bottom[(i - top.rows(), j - top.rows())].clone()
            } else {
                Rational::zero()
            }
        });
        b.matmul(&blk).matmul(&b_inv)
    };
    let xt = lift(&x, &RationalMat::identity(s2));
    let yt = lift(&RationalMat::identity(r2), &y);
    let lhs = det(&xt.matmul(&pw).sub(&yt.matmul(&pu))).expect("square");
    let scale = det(&x).expect("square").mul_ref(&det(&y).expect("square"));
    let three = lhs == det_c_inv.mul_ref(&scale);

    let four = &pf * &pf == det_c_inv;
    [one, two, three, four]
}
