//! Shared fixtures and brute-force oracles over the full exterior algebra.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use orbihh_cli::{builtin, InputSpec};
use orbihh_core::detalg::sa_table;
use orbihh_core::fixedloci::FixedLoci;
use orbihh_core::group::{close_generators, permutation_matrix};
use orbihh_core::linalg::{rank, Mat};
use orbihh_core::symplectic::{canonical_generators, CanonicalGenerators};
use orbihh_core::{CycloMat, Cyclotomic};

pub struct Loaded {
    pub spec: InputSpec,
    pub fl: FixedLoci,
}

pub fn load(name: &str) -> Loaded {
    let spec = builtin(name).expect("builtin");
    let grp = close_generators(&spec.generators, spec.options.cap).expect("closes");
    Loaded {
        spec,
        fl: FixedLoci::new(grp),
    }
}

impl Loaded {
    pub fn generators(&self) -> CanonicalGenerators {
        let sym = self.spec.symplectic_form.as_ref().expect("symplectic");
        canonical_generators(&self.fl, sym).expect("canonical generators")
    }

    /// Element acting as `diag(P_σ, P_σ)` on `T*C^k`; `cycles` are 1-based.
    pub fn perm(&self, k: usize, cycles: &[&[usize]]) -> usize {
        let mut sigma: Vec<usize> = (0..k).collect();
        for c in cycles {
            for (i, &a) in c.iter().enumerate() {
                sigma[a - 1] = c[(i + 1) % c.len()] - 1;
            }
        }
        let p = permutation_matrix(&sigma);
        let m = Mat::from_fn(2 * k, 2 * k, |i, j| {
            if (i < k) == (j < k) {
                p[(i % k, j % k)].clone()
            } else {
                zero()
            }
        });
        self.fl.group().index_of(&m).expect("element present")
    }

    pub fn sa(&self) -> orbihh_core::detalg::SAConstants {
        sa_table(&self.fl)
    }
}

pub fn zero() -> Cyclotomic {
    Cyclotomic::from_integer(0)
}

pub fn is_zero(x: &Cyclotomic) -> bool {
    x == &zero()
}

/// Sparse multivector keyed by increasing index lists.
pub type Mv = BTreeMap<Vec<usize>, Cyclotomic>;

fn add_to(out: &mut Mv, key: Vec<usize>, c: Cyclotomic) {
    let slot = out.entry(key.clone()).or_insert_with(zero);
    *slot += &c;
    if is_zero(slot) {
        out.remove(&key);
    }
}

/// Sorts by adjacent transpositions and reports the parity.
fn sort_with_sign(mut v: Vec<usize>) -> Option<(Vec<usize>, bool)> {
    let mut odd = false;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                odd = !odd;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, odd))
}

pub fn wedge(a: &Mv, b: &Mv) -> Mv {
    let mut out = Mv::new();
    for (i, x) in a {
        for (j, y) in b {
            let cat: Vec<usize> = i.iter().chain(j).copied().collect();
            if let Some((key, odd)) = sort_with_sign(cat) {
                let c = x * y;
                add_to(&mut out, key, if odd { -c } else { c });
            }
        }
    }
    out
}

pub fn one() -> Mv {
    Mv::from([(Vec::new(), Cyclotomic::from_integer(1))])
}

pub fn vector(v: &[Cyclotomic]) -> Mv {
    let mut out = Mv::new();
    for (i, c) in v.iter().enumerate() {
        add_to(&mut out, vec![i], c.clone());
    }
    out
}

pub fn wedge_all(vs: &[Vec<Cyclotomic>]) -> Mv {
    vs.iter().fold(one(), |acc, v| wedge(&acc, &vector(v)))
}

/// `Λ(m)` applied monomial by monomial.
pub fn transform(m: &CycloMat, x: &Mv) -> Mv {
    let mut out = Mv::new();
    for (key, c) in x {
        let cols: Vec<Vec<Cyclotomic>> = key.iter().map(|&i| m.col(i)).collect();
        for (k, d) in wedge_all(&cols) {
            add_to(&mut out, k, &d * c);
        }
    }
    out
}

fn psi(fl: &FixedLoci, g: usize) -> Mv {
    wedge_all(&fl.fixed_data(g).normal.vectors())
}

/// `c(g,h)` from `ψ_g ∧ ψ_h = c ψ_{gh}` in `Λ(V)`, zero off the degree `codim(gh)`.
pub fn sa_oracle(fl: &FixedLoci, g: usize, h: usize) -> Option<Cyclotomic> {
    let gh = fl.group().mul(g, h);
    let z = wedge(&psi(fl, g), &psi(fl, h));
    if z.is_empty() || fl.codim(g) + fl.codim(h) != fl.codim(gh) {
        return Some(zero());
    }
    let target = psi(fl, gh);
    let (key, t) = target.iter().next()?;
    let c = (&z.get(key).cloned().unwrap_or_else(zero) / t).ok()?;
    let ok = z.len() == target.len() && target.iter().all(|(k, t)| z.get(k) == Some(&(t * &c)));
    ok.then_some(c)
}

fn meets_cleanly(fl: &FixedLoci, g: usize, h: usize) -> bool {
    let d = fl.dim();
    let gh = fl.group().mul(g, h);
    let both = fl.one_minus(g).vstack(&fl.one_minus(h));
    d - rank(&both) == fl.fixed_data(gh).fixed_dim()
}

/// Fiber products computed by wedging in `Λ(V)` and projecting along `V^{gh}`.
pub struct FiberOracle<'a> {
    fl: &'a FixedLoci,
    images: HashMap<(usize, usize), Vec<Mv>>,
}

impl<'a> FiberOracle<'a> {
    pub fn new(fl: &'a FixedLoci) -> Self {
        FiberOracle {
            fl,
            images: HashMap::new(),
        }
    }

    /// `e_S ∧ ψ_τ` in the coordinates `[V^target | N_target]`.
    fn images(&mut self, tau: usize, target: usize) -> &Vec<Mv> {
        let fl = self.fl;
        self.images.entry((tau, target)).or_insert_with(|| {
            let to_adapted = &fl.fixed_data(target).adapted_inv;
            let fixed = fl.fixed_data(tau).fixed.vectors();
            let p = psi(fl, tau);
            (0..1u32 << fixed.len())
                .map(|s| {
                    let chosen: Vec<Vec<Cyclotomic>> = (0..fixed.len())
                        .filter(|i| s >> i & 1 == 1)
                        .map(|i| fixed[i].clone())
                        .collect();
                    transform(to_adapted, &wedge(&wedge_all(&chosen), &p))
                })
                .collect()
        })
    }

    /// `(g, α)·(h, β)` as `(gh, T) ↦ coefficient`.
    pub fn product(
        &mut self,
        g: usize,
        alpha: u32,
        h: usize,
        beta: u32,
    ) -> BTreeMap<(usize, u32), Cyclotomic> {
        let mut out = BTreeMap::new();
        if !meets_cleanly(self.fl, g, h) {
            return out;
        }
        let gh = self.fl.group().mul(g, h);
        let f = self.fl.fixed_data(gh).fixed_dim();
        let d = self.fl.dim();
        let x = self.images(g, gh)[alpha as usize].clone();
        let y = &self.images(h, gh)[beta as usize];
        for (key, c) in wedge(&x, y) {
            let normal: Vec<usize> = key.iter().copied().filter(|&i| i >= f).collect();
            if normal.len() == d - f {
                let mask = key
                    .iter()
                    .filter(|&&i| i < f)
                    .fold(0u32, |m, &i| m | 1 << i);
                out.insert((gh, mask), c);
            }
        }
        out
    }
}

/// `(1/d!) (π_N)^d` read off as a coefficient, with `π_N` the `N_g` block.
pub fn psi_oracle(fl: &FixedLoci, pi: &CycloMat, g: usize) -> Cyclotomic {
    let fd = fl.fixed_data(g);
    let f = fd.fixed_dim();
    let d = fl.dim();
    let b_inv = &fd.adapted_inv;
    let adapted = b_inv.matmul(pi).matmul(&b_inv.transpose());
    let mut bivector = Mv::new();
    for i in f..d {
        for j in i + 1..d {
            add_to(&mut bivector, vec![i - f, j - f], adapted[(i, j)].clone());
        }
    }
    let half = (d - f) / 2;
    let mut power = one();
    let mut fact = 1i64;
    for k in 1..=half {
        power = wedge(&power, &bivector);
        fact *= k as i64;
    }
    let top: Vec<usize> = (0..d - f).collect();
    let c = power.get(&top).cloned().unwrap_or_else(zero);
    (&c / &Cyclotomic::from_integer(fact)).expect("nonzero factorial")
}
