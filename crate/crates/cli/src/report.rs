//! Machine-readable results and their JSON, CSV and text renderings.

use std::fmt::Write as _;

use orbihh_core::verdict::Verdict;
use orbihh_core::Cyclotomic;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub order: usize,
    pub dimension: usize,
    pub cyclotomic_order: u32,
    pub classes: usize,
    pub abelian: bool,
    pub symplectic: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ElementRow {
    pub id: usize,
    pub order: usize,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassRow {
    pub representative: usize,
    pub size: usize,
    pub element_order: usize,
    pub codim: usize,
}

/// An exact scalar on a pair of element ids, with its complex approximation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairValue {
    pub g: usize,
    pub h: usize,
    pub exact: String,
    pub re: f64,
    pub im: f64,
}

impl PairValue {
    pub fn new(g: usize, h: usize, x: &Cyclotomic) -> Self {
        let z = x.cyclo_embed();
        PairValue {
            g,
            h,
            exact: x.to_string(),
            re: z.re,
            im: z.im,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LambdaRow {
    pub g: usize,
    pub square: String,
    pub approx: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DimRow {
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exterior: Option<usize>,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MolienRow {
    pub degree: usize,
    pub coefficients: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictRow {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub failed: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub examples: Vec<String>,
}

impl From<&Verdict> for VerdictRow {
    fn from(v: &Verdict) -> Self {
        VerdictRow {
            name: v.name.clone(),
            passed: v.passed(),
            checked: v.checked,
            failed: v.failed,
            examples: v.examples.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub verb: String,
    pub group: GroupSummary,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<ElementRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub fixed_loci: Vec<ClassRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sa_constants: Vec<PairValue>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lambda: Vec<LambdaRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cocycle: Vec<PairValue>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub invariant_dims: Vec<DimRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub orbifold_dims: Vec<DimRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub molien: Vec<MolienRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<VerdictRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    section: &'a str,
    i: Option<usize>,
    j: Option<usize>,
    value: String,
    re: Option<f64>,
    im: Option<f64>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Flat table `section,i,j,value,re,im`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut put = |row: CsvRow| w.serialize(row).expect("in-memory write");
        for c in &self.fixed_loci {
            put(CsvRow {
                section: "fixed_loci",
                i: Some(c.representative),
                j: Some(c.codim),
                value: c.size.to_string(),
                re: None,
                im: None,
            });
        }
        for (section, rows) in [("sa", &self.sa_constants), ("cocycle", &self.cocycle)] {
            for p in rows {
                put(CsvRow {
                    section,
                    i: Some(p.g),
                    j: Some(p.h),
                    value: p.exact.clone(),
                    re: Some(p.re),
                    im: Some(p.im),
                });
            }
        }
        for l in &self.lambda {
            put(CsvRow {
                section: "lambda_squared",
                i: Some(l.g),
                j: None,
                value: l.square.clone(),
                re: Some(l.approx),
                im: None,
            });
        }
        for (section, rows) in [
            ("invariant_dims", &self.invariant_dims),
            ("orbifold_dims", &self.orbifold_dims),
        ] {
            for d in rows {
                put(CsvRow {
                    section,
                    i: Some(d.degree),
                    j: d.exterior,
                    value: d.dim.to_string(),
                    re: None,
                    im: None,
                });
            }
        }
        for m in &self.molien {
            for (t, c) in m.coefficients.iter().enumerate() {
                put(CsvRow {
                    section: "molien",
                    i: Some(m.degree),
                    j: Some(t),
                    value: c.clone(),
                    re: None,
                    im: None,
                });
            }
        }
        for v in &self.verdicts {
            put(CsvRow {
                section: if v.passed { "pass" } else { "fail" },
                i: Some(v.checked),
                j: Some(v.failed),
                value: v.name.clone(),
                re: None,
                im: None,
            });
        }
        let bytes = w.into_inner().expect("in-memory flush");
        String::from_utf8(bytes).expect("utf-8")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let g = &self.group;
        let _ = writeln!(
            s,
            "{}: |G| = {}, dim V = {}, Q(z_{}), {} classes{}{}",
            self.name,
            g.order,
            g.dimension,
            g.cyclotomic_order,
            g.classes,
            if g.abelian { ", abelian" } else { "" },
            if g.symplectic { ", symplectic" } else { "" },
        );
        if !self.fixed_loci.is_empty() {
            let _ = writeln!(s, "\nclasses (rep, size, order, codim):");
            for c in &self.fixed_loci {
                let _ = writeln!(
                    s,
                    "  {:>4} {:>4} {:>4} {:>4}",
                    c.representative, c.size, c.element_order, c.codim
                );
            }
        }
        let pairs = |s: &mut String, title: &str, rows: &[PairValue]| {
            if rows.is_empty() {
                return;
            }
            let _ = writeln!(s, "\n{title}:");
            for p in rows {
                let _ = writeln!(
                    s,
                    "  ({}, {}) = {}  ~ {:.6}{:+.6}i",
                    p.g, p.h, p.exact, p.re, p.im
                );
            }
        };
        pairs(&mut s, "SA constants c(g,h), nonzero", &self.sa_constants);
        if !self.lambda.is_empty() {
            let _ = writeln!(s, "\nlambda(g)^2:");
            for l in &self.lambda {
                let _ = writeln!(s, "  {} : {}  (lambda ~ {:.6})", l.g, l.square, l.approx);
            }
        }
        pairs(&mut s, "cocycle a(g,h)", &self.cocycle);
        let dims = |s: &mut String, title: &str, rows: &[DimRow]| {
            if rows.is_empty() {
                return;
            }
            let _ = writeln!(s, "\n{title}:");
            for d in rows {
                match d.exterior {
                    Some(e) => {
                        let _ = writeln!(s, "  degree {} (exterior {}): {}", d.degree, e, d.dim);
                    }
                    None => {
                        let _ = writeln!(s, "  degree {}: {}", d.degree, d.dim);
                    }
                }
            }
        };
        dims(&mut s, "invariant dimensions", &self.invariant_dims);
        dims(&mut s, "orbifold dimensions", &self.orbifold_dims);
        if !self.molien.is_empty() {
            let _ = writeln!(
                s,
                "\nMolien series by cohomological degree (t^0, t^1, ...):"
            );
            for m in &self.molien {
                let _ = writeln!(s, "  {}: {}", m.degree, m.coefficients.join(", "));
            }
        }
        if !self.verdicts.is_empty() {
            let _ = writeln!(s, "\nchecks:");
            for v in &self.verdicts {
                let status = if v.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    s,
                    "  {status} {} ({} checked, {} failed)",
                    v.name, v.checked, v.failed
                );
                for e in &v.examples {
                    let _ = writeln!(s, "      {e}");
                }
            }
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    }
}
