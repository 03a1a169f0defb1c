//! Classification and decomposition reports.
//!
//! Structured output is JSON with fields in declaration order. Scalars are
//! strings in the canonical `p/q` form, so equal inputs give equal bytes.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use selfdual_core::classify::{Certificate, ReprType};
use selfdual_core::reptheory::IsotypicDecomposition;
use selfdual_core::{Matrix, RelationSpace, Scalar};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multiplicities {
    pub m_plus: usize,
    pub m_minus: usize,
    pub m_two: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lines {
    pub s: Vec<String>,
    pub t: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub a: String,
    pub b: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub dim: usize,
    /// Canonical (reduced echelon) basis of `U` in the `e`-basis.
    pub rows: Vec<Vec<String>>,
    pub multiplicities: Option<Multiplicities>,
    pub repr_type: Option<String>,
    pub self_dual: bool,
    pub verified: bool,
    pub plane: Option<Vec<Vec<String>>>,
    pub lines: Option<Lines>,
    pub plucker: Option<Vec<String>>,
    pub segre: Option<Vec<String>>,
    pub classes: Vec<String>,
    pub witness: Option<Witness>,
    pub reason: Option<String>,
}

fn strings(xs: &[Scalar]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.row_iter().map(strings).collect()
}

fn multiplicities((m_plus, m_minus, m_two): (usize, usize, usize)) -> Multiplicities {
    Multiplicities {
        m_plus,
        m_minus,
        m_two,
    }
}

impl Report {
    pub fn new(u: &RelationSpace, cert: &Certificate) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            dim: u.dim(),
            rows: matrix_strings(u.basis()),
            multiplicities: cert
                .repr_type
                .map(|r: ReprType| multiplicities(r.multiplicities)),
            repr_type: cert.repr_type.map(|r| r.tag.to_string()),
            self_dual: cert.self_dual,
            verified: cert.verified,
            plane: cert.plane.as_ref().map(|p| matrix_strings(p.basis())),
            lines: cert.lines.as_ref().map(|(s, t)| Lines {
                s: strings(s),
                t: strings(t),
            }),
            plucker: cert.plucker.as_ref().map(|p| strings(p.coords())),
            segre: cert.segre.as_ref().map(|z| strings(z.coords())),
            classes: cert.classes.iter().map(|c| c.name().to_string()).collect(),
            witness: cert.witness.as_ref().map(|w| Witness {
                a: w.a.to_string(),
                b: w.b.to_string(),
            }),
            reason: cert.reason.clone(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => json(self),
            Format::Text => {
                let mut out = String::new();
                let opt =
                    |v: &Option<Vec<String>>| v.as_ref().map_or("-".to_string(), |v| tuple(v));
                let _ = writeln!(out, "self_dual: {}", self.self_dual);
                let _ = writeln!(out, "verified: {}", self.verified);
                let _ = writeln!(out, "dim: {}", self.dim);
                let _ = writeln!(
                    out,
                    "multiplicities: {}",
                    self.multiplicities.as_ref().map_or("-".into(), |m| format!(
                        "({}, {}, {})",
                        m.m_plus, m.m_minus, m.m_two
                    ))
                );
                let _ = writeln!(
                    out,
                    "repr_type: {}",
                    self.repr_type.as_deref().unwrap_or("-")
                );
                let _ = writeln!(
                    out,
                    "plane: {}",
                    self.plane.as_ref().map_or("-".into(), |p| p
                        .iter()
                        .map(|r| tuple(r))
                        .collect::<Vec<_>>()
                        .join(" "))
                );
                let _ = writeln!(
                    out,
                    "lines: {}",
                    self.lines.as_ref().map_or("-".into(), |l| format!(
                        "s = {}, t = {}",
                        tuple(&l.s),
                        tuple(&l.t)
                    ))
                );
                let _ = writeln!(out, "plucker: {}", opt(&self.plucker));
                let _ = writeln!(out, "segre: {}", opt(&self.segre));
                let _ = writeln!(out, "classes: [{}]", self.classes.join(", "));
                let _ = writeln!(
                    out,
                    "witness: {}",
                    self.witness
                        .as_ref()
                        .map_or("-".into(), |w| format!("a = {}, b = {}", w.a, w.b))
                );
                if let Some(r) = &self.reason {
                    let _ = writeln!(out, "reason: {r}");
                }
                out.push_str("rows:\n");
                for r in &self.rows {
                    let _ = writeln!(out, "  {}", r.join(" "));
                }
                out
            }
        }
    }
}

fn tuple(v: &[String]) -> String {
    format!("({})", v.join(", "))
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub dim: usize,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub schema_version: u32,
    pub dim: usize,
    pub multiplicities: Multiplicities,
    pub repr_type: String,
    pub plus: Component,
    pub minus: Component,
    pub two: Component,
    pub plane: Option<Vec<Vec<String>>>,
    pub lines: Option<Lines>,
}

fn component(u: &RelationSpace) -> Component {
    Component {
        dim: u.dim(),
        rows: matrix_strings(u.basis()),
    }
}

impl DecompositionReport {
    pub fn new(u: &RelationSpace, d: &IsotypicDecomposition) -> Self {
        use selfdual_core::reptheory::{extract_parameter_plane, extract_segre_lines};
        DecompositionReport {
            schema_version: SCHEMA_VERSION,
            dim: u.dim(),
            multiplicities: multiplicities(d.multiplicities()),
            repr_type: ReprType::from_multiplicities(d.multiplicities())
                .tag
                .to_string(),
            plus: component(&d.comp_plus),
            minus: component(&d.comp_minus),
            two: component(&d.comp_two),
            plane: extract_parameter_plane(d)
                .ok()
                .map(|p| matrix_strings(p.basis())),
            lines: extract_segre_lines(d).ok().map(|(s, t)| Lines {
                s: strings(&s),
                t: strings(&t),
            }),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => json(self),
            Format::Text => {
                let m = &self.multiplicities;
                let mut out = String::new();
                let _ = writeln!(out, "dim: {}", self.dim);
                let _ = writeln!(
                    out,
                    "multiplicities: ({}, {}, {})",
                    m.m_plus, m.m_minus, m.m_two
                );
                let _ = writeln!(out, "repr_type: {}", self.repr_type);
                for (name, c) in [("M+", &self.plus), ("M-", &self.minus), ("M2", &self.two)] {
                    let _ = writeln!(out, "{name} component (dim {}):", c.dim);
                    for r in &c.rows {
                        let _ = writeln!(out, "  {}", r.join(" "));
                    }
                }
                if let Some(p) = &self.plane {
                    let _ = writeln!(
                        out,
                        "plane: {}",
                        p.iter().map(|r| tuple(r)).collect::<Vec<_>>().join(" ")
                    );
                }
                if let Some(l) = &self.lines {
                    let _ = writeln!(out, "lines: s = {}, t = {}", tuple(&l.s), tuple(&l.t));
                }
                out
            }
        }
    }
}
