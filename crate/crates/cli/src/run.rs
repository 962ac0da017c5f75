//! The verb driver: builds the group, computes the requested tables and
//! runs the verification battery.

use std::collections::BTreeMap;

use clap::ValueEnum;
use orbihh_core::detalg::{self, SAConstants};
use orbihh_core::fiberalg::{self, FiberAlgebra};
use orbihh_core::fixedloci::FixedLoci;
use orbihh_core::group::close_generators;
use orbihh_core::symplectic::complements::complement_suite;
use orbihh_core::symplectic::{self, CanonicalGenerators};
use orbihh_core::verdict::Verdict;
use orbihh_core::{Cyclotomic, Error};

use crate::error::{CliError, EXIT_VERIFY};
use crate::input::InputSpec;
use crate::report::{
    ClassRow, DimRow, ElementRow, GroupSummary, LambdaRow, MolienRow, PairValue, Report, VerdictRow,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    Compute,
    Verify,
    Molien,
    Cocycle,
    All,
}

impl Verb {
    fn name(self) -> &'static str {
        match self {
            Verb::Compute => "compute",
            Verb::Verify => "verify",
            Verb::Molien => "molien",
            Verb::Cocycle => "cocycle",
            Verb::All => "all",
        }
    }
}

/// Fiber associativity is cubic in the basis size; larger bases skip it.
pub const FIBER_ASSOC_LIMIT: usize = 256;

/// Dimensions `(r, s)` of the complementary-pair instances run by `verify`.
pub const COMPLEMENT_DIMS: [(usize, usize); 3] = [(1, 1), (1, 2), (2, 2)];

#[derive(Clone, Debug, Default)]
pub struct RunConfig {
    /// Doubles one nontrivial SA constant before verification.
    pub corrupt_sa: bool,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub exit_code: i32,
}

/// Everything derived from one input, computed on demand.
struct Context<'a> {
    spec: &'a InputSpec,
    fl: FixedLoci,
    sa: SAConstants,
    symplectic: bool,
    gens: Option<CanonicalGenerators>,
}

impl<'a> Context<'a> {
    fn new(spec: &'a InputSpec, cfg: &RunConfig) -> Result<Self, CliError> {
        let grp = close_generators(&spec.generators, spec.options.cap)?;
        let symplectic = spec
            .symplectic_form
            .as_ref()
            .is_some_and(|s| grp.check_symplectic(&s.j));
        let fl = FixedLoci::new(grp);
        let mut sa = detalg::sa_table(&fl);
        if cfg.corrupt_sa {
            corrupt(&mut sa);
        }
        let gens = match (&spec.symplectic_form, symplectic) {
            (Some(s), true) => Some(symplectic::canonical_generators(&fl, s)?),
            _ => None,
        };
        Ok(Context {
            spec,
            fl,
            sa,
            symplectic,
            gens,
        })
    }

    fn summary(&self) -> GroupSummary {
        let grp = self.fl.group();
        GroupSummary {
            order: grp.len(),
            dimension: grp.dim(),
            cyclotomic_order: grp.cyclotomic_order(),
            classes: grp.classes().len(),
            abelian: grp.is_abelian(),
            symplectic: self.symplectic,
        }
    }

    fn elements(&self) -> Vec<ElementRow> {
        let grp = self.fl.group();
        (0..grp.len())
            .map(|g| ElementRow {
                id: g,
                order: grp.element_order(g),
                matrix: grp
                    .matrix(g)
                    .to_rows()
                    .iter()
                    .map(|r| r.iter().map(|x| x.to_string()).collect())
                    .collect(),
            })
            .collect()
    }

    fn classes(&self) -> Vec<ClassRow> {
        let grp = self.fl.group();
        grp.classes()
            .iter()
            .map(|c| ClassRow {
                representative: c[0],
                size: c.len(),
                element_order: grp.element_order(c[0]),
                codim: self.fl.codim(c[0]),
            })
            .collect()
    }

    fn sa_rows(&self) -> Vec<PairValue> {
        self.sa
            .nonzero_pairs()
            .map(|(g, h)| PairValue::new(g, h, self.sa.get(g, h)))
            .collect()
    }

    fn lambda_rows(&self) -> Vec<LambdaRow> {
        let Some(gens) = &self.gens else {
            return Vec::new();
        };
        gens.lambda
            .iter()
            .enumerate()
            .map(|(g, l)| LambdaRow {
                g,
                square: l.square().to_string(),
                approx: l.approx(),
            })
            .collect()
    }

    fn cocycle_rows(&self) -> Vec<PairValue> {
        let Some(gens) = &self.gens else {
            return Vec::new();
        };
        symplectic::cocycle_table(&self.fl, &self.sa, gens)
            .iter()
            .map(|((g, h), a)| PairValue::new(*g, *h, a))
            .collect()
    }

    fn bigraded(&self) -> BTreeMap<(usize, usize), usize> {
        let eps = detalg::equivariance_scalars(&self.fl);
        fiberalg::invariant_dims_bigraded(&self.fl, &eps)
    }

    fn molien_rows(&self) -> Result<Vec<MolienRow>, CliError> {
        let m = fiberalg::molien_bigraded(&self.fl, self.spec.options.maxdeg)?;
        Ok(m.series
            .iter()
            .map(|(d, cs)| MolienRow {
                degree: *d,
                coefficients: cs.iter().map(|c| c.to_string()).collect(),
            })
            .collect())
    }

    fn verify(&self, notes: &mut Vec<String>) -> Result<Vec<Verdict>, CliError> {
        let fl = &self.fl;
        let grp = fl.group();
        let n = grp.len();
        let mut out = Vec::new();

        let mut battery =
            Verdict::new("pair conditions: (iii,a,c) => (i,ii,iv,b), each group equivalent");
        let mut bounds = Verdict::new("codimension bounds");
        let mut split = 0;
        for g in 0..n {
            for h in 0..n {
                let r = fl.dualrels_battery(g, h);
                if !r.consistent() {
                    split += 1;
                }
                battery.record(r.implications_hold(), || {
                    format!("pair ({g},{h}): {:?}", r.conditions())
                });
                let c = fl.codim_check(g, h);
                bounds.record(c.lower && c.upper, || format!("pair ({g},{h}): {c:?}"));
            }
        }
        out.push(battery);
        out.push(bounds);
        if split > 0 {
            notes.push(format!(
                "{split} pairs satisfy (i,ii,iv,b) but not (iii,a,c), so the seven conditions are not all equivalent"
            ));
        }

        let eps = detalg::equivariance_scalars(fl);
        out.push(detalg::check_vanishing_pattern(fl, &self.sa));
        out.push(detalg::check_two_routes(fl, &self.sa));
        out.push(detalg::check_associativity(fl, &self.sa));
        out.push(detalg::check_eps_cocycle(fl, &eps));
        out.push(detalg::check_compatibility(fl, &self.sa, &eps));

        let alg = FiberAlgebra::new(fl, &self.sa);
        out.push(alg.check_restriction());
        out.push(alg.check_product_equivalence());
        if alg.basis().len() <= FIBER_ASSOC_LIMIT {
            let table = alg.product_table();
            out.push(table.check_associativity());
            out.push(alg.check_unit_and_centrality(&table));
        } else {
            notes.push(format!(
                "fiber associativity skipped: basis size {} exceeds {FIBER_ASSOC_LIMIT}",
                alg.basis().len()
            ));
        }

        if self.spec.symplectic_form.is_some() {
            let mut pres = Verdict::new("generators preserve the symplectic form");
            pres.record(self.symplectic, || {
                "some element does not preserve J".into()
            });
            out.push(pres);
        }
        if let Some(gens) = &self.gens {
            out.extend(symplectic::verify_coboundary(fl, &self.sa, gens));
            out.push(symplectic::transparent_check(fl, &self.sa, gens));
        }

        let bigraded = fiberalg::invariant_dims_bigraded(fl, &eps);
        let total = nonzero(collapse(&bigraded, |_| true));
        let molien = fiberalg::molien_bigraded(fl, self.spec.options.maxdeg)?;
        let mut mv = Verdict::new("Molien t^0 slice = invariant dimensions");
        let constant = nonzero(molien.constant_terms());
        mv.record(constant == total, || {
            format!("molien {constant:?} vs invariants {total:?}")
        });
        out.push(mv);
        if self.symplectic {
            let orb = nonzero(fiberalg::orbifold_dims(fl, true)?);
            let slice = nonzero(collapse(&bigraded, |e| e == 0));
            let mut ov = Verdict::new("orbifold dimensions = exterior-degree-0 invariants");
            ov.record(orb == slice, || {
                format!("classes {orb:?} vs invariants {slice:?}")
            });
            out.push(ov);
        }

        let (seed, trials) = (self.spec.options.seed, self.spec.options.trials);
        for (r, s) in COMPLEMENT_DIMS {
            out.extend(complement_suite(seed, trials, r, s).verdicts);
        }
        Ok(out)
    }
}

fn collapse(
    bigraded: &BTreeMap<(usize, usize), usize>,
    keep: impl Fn(usize) -> bool,
) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for (&(deg, ext), &d) in bigraded {
        if keep(ext) {
            *out.entry(deg).or_insert(0) += d;
        }
    }
    out
}

fn nonzero(mut m: BTreeMap<usize, usize>) -> BTreeMap<usize, usize> {
    m.retain(|_, d| *d > 0);
    m
}

/// Doubles the first constant on a pair of nontrivial elements.
fn corrupt(sa: &mut SAConstants) {
    let (g, h) = sa
        .nonzero_pairs()
        .find(|&(g, h)| g != 0 && h != 0)
        .unwrap_or((0, 0));
    let doubled = sa.get(g, h) * &Cyclotomic::from_integer(2);
    sa.set(g, h, doubled);
}

fn dim_rows(m: &BTreeMap<usize, usize>) -> Vec<DimRow> {
    m.iter()
        .map(|(&degree, &dim)| DimRow {
            degree,
            exterior: None,
            dim,
        })
        .collect()
}

pub fn run(verb: Verb, spec: &InputSpec, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let ctx = Context::new(spec, cfg)?;
    let mut report = Report {
        name: spec.name.clone(),
        verb: verb.name().to_string(),
        group: ctx.summary(),
        elements: Vec::new(),
        fixed_loci: Vec::new(),
        sa_constants: Vec::new(),
        lambda: Vec::new(),
        cocycle: Vec::new(),
        invariant_dims: Vec::new(),
        orbifold_dims: Vec::new(),
        molien: Vec::new(),
        verdicts: Vec::new(),
        notes: Vec::new(),
    };
    if spec.symplectic_form.is_some() && !ctx.symplectic {
        report
            .notes
            .push("the group does not preserve the given symplectic form".into());
    }
    let all = verb == Verb::All;
    if verb == Verb::Cocycle && ctx.gens.is_none() {
        return Err(CliError::Core(Error::NotSymplectic));
    }
    if all || matches!(verb, Verb::Compute | Verb::Cocycle) {
        report.elements = ctx.elements();
        report.lambda = ctx.lambda_rows();
        report.cocycle = ctx.cocycle_rows();
    }
    if all || verb == Verb::Compute {
        report.fixed_loci = ctx.classes();
        report.sa_constants = ctx.sa_rows();
        let bigraded = ctx.bigraded();
        report.invariant_dims = bigraded
            .iter()
            .map(|(&(degree, e), &dim)| DimRow {
                degree,
                exterior: Some(e),
                dim,
            })
            .collect();
        if ctx.symplectic {
            report.orbifold_dims = dim_rows(&fiberalg::orbifold_dims(&ctx.fl, true)?);
        }
    }
    if all || verb == Verb::Molien {
        report.molien = ctx.molien_rows()?;
    }
    if all || verb == Verb::Verify {
        let mut notes = Vec::new();
        let verdicts = ctx.verify(&mut notes)?;
        report.verdicts = verdicts.iter().map(VerdictRow::from).collect();
        report.notes.extend(notes);
    }
    let exit_code = if report.all_passed() { 0 } else { EXIT_VERIFY };
    Ok(Outcome { report, exit_code })
}
