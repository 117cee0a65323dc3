//! Machine-readable result documents for the command-line front end.
//!
//! A solve run is reported as the independent set, a per-vertex
//! certificate (the color and a simple path into the set for every
//! outside vertex), a trace summary, and the hypothesis report. Every
//! certificate is re-verified against the raw color relation before it
//! is handed out.

use crate::graph::{HypothesisReport, TwoColoredDigraph};
use crate::oracle::OracleReport;
use crate::path::{lex_min_shortest, Path};
use crate::relation::Relation;
use crate::solver;
use crate::universe::VertexSet;
use crate::{Error, Result};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Blue,
    Red,
}

impl std::fmt::Display for Color {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Color::Blue => "blue",
            Color::Red => "red",
        })
    }
}

/// A monochromatic route from a vertex outside the independent set to a
/// member of it. The path steps through the raw relation of the named
/// color, not its closure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub vertex: usize,
    pub color: Color,
    pub path: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesesSummary {
    pub nonempty: bool,
    pub blue_asym_acyclic: bool,
    pub red_asym_acyclic: bool,
    pub blue_cycle: Option<Vec<usize>>,
    pub red_cycle: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub n: usize,
    pub independent_set: Vec<usize>,
    pub iterations: usize,
    pub chain_sizes: Vec<usize>,
    pub hypotheses: HypothesesSummary,
    pub certificates: Vec<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub is_solution: bool,
    pub is_in_family_s: bool,
    pub is_kernel: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleSummary {
    pub n: usize,
    pub valid_solutions: Vec<Vec<usize>>,
    pub family_s_members: Vec<Vec<usize>>,
    pub kernel_sets: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpandReport {
    pub color: Color,
    pub input: Vec<usize>,
    pub expanded: Vec<usize>,
}

impl HypothesesSummary {
    pub fn from_report(report: &HypothesisReport) -> Self {
        let verts = |p: &Path| p.vertices().to_vec();
        HypothesesSummary {
            nonempty: report.nonempty,
            blue_asym_acyclic: report.blue_asym_acyclic,
            red_asym_acyclic: report.red_asym_acyclic,
            blue_cycle: report.blue_cycle.as_ref().map(verts),
            red_cycle: report.red_cycle.as_ref().map(verts),
        }
    }

    pub fn build(g: &TwoColoredDigraph) -> Self {
        Self::from_report(&g.check_hypotheses())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "nonempty {}", self.nonempty).unwrap();
        writeln!(out, "blue_asym_acyclic {}", self.blue_asym_acyclic).unwrap();
        writeln!(out, "red_asym_acyclic {}", self.red_asym_acyclic).unwrap();
        writeln!(out, "blue_cycle {}", fmt_opt_list(&self.blue_cycle)).unwrap();
        writeln!(out, "red_cycle {}", fmt_opt_list(&self.red_cycle)).unwrap();
        out
    }
}

impl SolveReport {
    /// Solves the graph and assembles the document, verifying every
    /// certificate before including it.
    pub fn build(g: &TwoColoredDigraph) -> Result<Self> {
        let trace = solver::solve(g)?;
        let result = trace.result();
        let certificates = certificates_for(g, result)?;
        Ok(SolveReport {
            n: g.universe().size(),
            independent_set: result.to_vec(),
            iterations: trace.iterations(),
            chain_sizes: trace.chain().sets().iter().map(|s| s.len()).collect(),
            hypotheses: HypothesesSummary::build(g),
            certificates,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n {}", self.n).unwrap();
        writeln!(out, "independent_set {}", fmt_list(&self.independent_set)).unwrap();
        writeln!(out, "iterations {}", self.iterations).unwrap();
        writeln!(out, "chain_sizes {}", fmt_list(&self.chain_sizes)).unwrap();
        out.push_str(&self.hypotheses.to_text());
        for c in &self.certificates {
            writeln!(out, "certificate {} {} {}", c.vertex, c.color, fmt_list(&c.path)).unwrap();
        }
        out
    }
}

impl VerifyReport {
    pub fn build(g: &TwoColoredDigraph, s: &VertexSet) -> Result<Self> {
        Ok(VerifyReport {
            is_solution: g.is_solution(s)?,
            is_in_family_s: g.is_in_family_s(s)?,
            is_kernel: g.is_kernel(s)?,
        })
    }

    pub fn to_text(&self) -> String {
        format!(
            "is_solution {}\nis_in_family_s {}\nis_kernel {}\n",
            self.is_solution, self.is_in_family_s, self.is_kernel
        )
    }
}

impl OracleSummary {
    pub fn from_report(n: usize, report: &OracleReport) -> Self {
        let lists = |sets: &[VertexSet]| sets.iter().map(|s| s.to_vec()).collect();
        OracleSummary {
            n,
            valid_solutions: lists(&report.valid_solutions),
            family_s_members: lists(&report.family_s_members),
            kernel_sets: lists(&report.kernel_sets),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for s in &self.valid_solutions {
            writeln!(out, "valid_solution {}", fmt_list(s)).unwrap();
        }
        for s in &self.family_s_members {
            writeln!(out, "family_s_member {}", fmt_list(s)).unwrap();
        }
        for s in &self.kernel_sets {
            writeln!(out, "kernel_set {}", fmt_list(s)).unwrap();
        }
        out
    }
}

impl ExpandReport {
    pub fn to_text(&self) -> String {
        format!(
            "color {}\ninput {}\nexpanded {}\n",
            self.color,
            fmt_list(&self.input),
            fmt_list(&self.expanded)
        )
    }
}

/// One certificate per vertex outside `s`. Blue is preferred when both
/// colors reach the set.
fn certificates_for(g: &TwoColoredDigraph, s: &VertexSet) -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    let nothing = VertexSet::empty(g.universe());
    for x in s.complement().iter() {
        let blue = lex_min_shortest(g.blue(), x, s, &nothing);
        let (color, verts) = match blue {
            Some(p) => (Color::Blue, p),
            None => match lex_min_shortest(g.red(), x, s, &nothing) {
                Some(p) => (Color::Red, p),
                None => {
                    return Err(Error::InvariantViolated(format!(
                        "vertex {x} of a solved graph has no monochromatic route"
                    )))
                }
            },
        };
        verify_certificate(g, s, x, color, &verts)?;
        out.push(Certificate {
            vertex: x,
            color,
            path: verts,
        });
    }
    Ok(out)
}

/// Emission implies validity: the path must be a walk of the claimed
/// raw color relation, start at the vertex, and end in the set.
fn verify_certificate(
    g: &TwoColoredDigraph,
    s: &VertexSet,
    x: usize,
    color: Color,
    verts: &[usize],
) -> Result<()> {
    let relation: &Relation = match color {
        Color::Blue => g.blue(),
        Color::Red => g.red(),
    };
    let path = Path::new(g.universe(), verts.to_vec())?;
    let ok = path.first() == x
        && path.is_walk(relation)?
        && path.len() >= 2
        && s.contains(path.last());
    if ok {
        Ok(())
    } else {
        Err(Error::InvariantViolated(format!(
            "certificate for vertex {x} failed re-verification"
        )))
    }
}

fn fmt_list<T: std::fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn fmt_opt_list(items: &Option<Vec<usize>>) -> String {
    match items {
        None => "-".to_string(),
        Some(list) => fmt_list(list),
    }
}
