//! Certificate-bearing analysis reports, in JSON and text form.
//!
//! JSON reports are deterministic for identical inputs except for the
//! `elapsed_ms` field, and they round-trip: parsing an emitted report and
//! re-serializing it reproduces the same value.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use toriented_core::orientability::{Certificate, ComponentIndex, OrientabilityVerdict};
use toriented_core::poset::ChainReport;
use toriented_core::{Gf2Matrix, SpanReport};

use crate::input::SCHEMA;

/// How many coset representatives the text renderer prints before eliding.
const TEXT_REP_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: String,
    pub kind: String,
    /// Verbatim echo of the input object.
    pub input: serde_json::Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub toric: Option<VerdictReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spherical: Option<VerdictReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower_bound: Option<LowerBoundSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poset: Option<PosetSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSection>,
    pub elapsed_ms: u64,
}

impl AnalysisReport {
    pub fn new(kind: &str, input: serde_json::Value) -> Self {
        Self {
            schema: SCHEMA.to_string(),
            kind: kind.to_string(),
            input,
            toric: None,
            spherical: None,
            lower_bound: None,
            poset: None,
            oracle: None,
            elapsed_ms: 0,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports always serialize");
        text.push('\n');
        text
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "toriented report ({})", self.schema);
        let _ = writeln!(out, "kind: {}", self.kind);
        if let Some(section) = &self.poset {
            render_poset(&mut out, section);
        }
        let toric_title = match self.kind.as_str() {
            "small-cover" => "small cover Y",
            "poset" => "toric variety Y of the order polytope",
            _ => "toric variety Y",
        };
        if let Some(verdict) = &self.toric {
            render_verdict(&mut out, toric_title, verdict);
        }
        if let Some(verdict) = &self.spherical {
            render_verdict(&mut out, "spherical variety Y+", verdict);
        }
        if let Some(section) = &self.lower_bound {
            render_lower_bound(&mut out, section);
        }
        if let Some(section) = &self.oracle {
            render_oracle(&mut out, section);
        }
        let _ = writeln!(out, "\nelapsed: {} ms", self.elapsed_ms);
        out
    }
}

/// One orientability verdict with components and its certificate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub orientable: bool,
    pub components: ComponentIndex,
    pub certificate: Certificate,
    pub generators: Gf2Matrix,
    pub provenance: Vec<Vec<String>>,
}

impl VerdictReport {
    pub fn new(verdict: OrientabilityVerdict, components: ComponentIndex) -> Self {
        Self {
            orientable: verdict.orientable,
            components,
            certificate: verdict.certificate,
            generators: verdict.generators,
            provenance: verdict.provenance,
        }
    }

    /// Re-validates the embedded certificate against the embedded rows.
    pub fn revalidate(&self) -> bool {
        let verdict = OrientabilityVerdict {
            orientable: self.orientable,
            certificate: self.certificate.clone(),
            generators: self.generators.clone(),
            provenance: self.provenance.clone(),
        };
        verdict.verify()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LowerBoundSection {
    pub span: SpanReport,
    pub applicable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound_multiple_of: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PosetSection {
    pub elements: Vec<String>,
    pub chains: ChainReport,
    /// Chain-length criterion for the real toric variety of the order polytope.
    pub toric_by_chains: bool,
    /// Ranked-mod-2 criterion for the spherical toric variety.
    pub spherical_by_ranking: bool,
    /// True when both chain criteria agree with the general polytope
    /// machinery; absent when the polytope path could not run.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polytope_agreement: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub toric: Option<OracleCheck>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spherical: Option<OracleCheck>,
    /// True when every executed oracle path agrees with the certificates.
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub orientable: bool,
    pub components: u64,
    /// Kernel rank of the explicit boundary matrix; absent when the ambient
    /// rank exceeds the boundary-path cap.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary_kernel_rank: Option<u64>,
    pub agrees: bool,
}

fn render_verdict(out: &mut String, title: &str, verdict: &VerdictReport) {
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "[{title}] {}",
        if verdict.orientable {
            "ORIENTABLE"
        } else {
            "NON-ORIENTABLE"
        }
    );
    let _ = writeln!(out, "  generators mod 2 (deduplicated):");
    for (i, row) in verdict.generators.rows().iter().enumerate() {
        let sources = verdict
            .provenance
            .get(i)
            .map(|labels| labels.join(", "))
            .unwrap_or_default();
        let _ = writeln!(out, "    [{i}] {row}    <- {sources}");
    }
    match &verdict.certificate {
        Certificate::OddDependence(witness) => {
            let indices: Vec<String> = witness.indices.iter().map(|i| i.to_string()).collect();
            let _ = writeln!(
                out,
                "  certificate: odd dependence {{{}}} (these rows XOR to zero)",
                indices.join(", ")
            );
        }
        Certificate::OddBasis(basis) => {
            let _ = writeln!(out, "  certificate: odd basis");
            for (i, b) in basis.basis.iter().enumerate() {
                let _ = writeln!(out, "    e[{i}] = {b}");
            }
            for (i, expansion) in basis.expansions.iter().enumerate() {
                let terms: Vec<String> = expansion.iter().map(|j| format!("e[{j}]")).collect();
                let _ = writeln!(
                    out,
                    "    row [{i}] = {} ({} terms, odd)",
                    terms.join(" ^ "),
                    expansion.len()
                );
            }
        }
    }
    let ambient = verdict.generators.dim();
    let _ = writeln!(
        out,
        "  components: 2^({ambient}-{}) = {}",
        verdict.components.rank, verdict.components.count
    );
    let reps: Vec<String> = verdict
        .components
        .coset_reps
        .iter()
        .take(TEXT_REP_LIMIT)
        .map(|r| r.to_string())
        .collect();
    let suffix = if verdict.components.coset_reps.len() > TEXT_REP_LIMIT {
        ", ..."
    } else {
        ""
    };
    let _ = writeln!(
        out,
        "    class representatives: {}{suffix}",
        reps.join(", ")
    );
}

fn render_lower_bound(out: &mut String, section: &LowerBoundSection) {
    let _ = writeln!(out);
    let _ = writeln!(out, "[lower bound applicability]");
    let _ = writeln!(
        out,
        "  lattice points affinely span: {} (rank {}, index {})",
        section.span.spans,
        section.span.rank,
        section
            .span
            .index
            .map(|i| i.to_string())
            .unwrap_or_else(|| "infinite".to_string())
    );
    if let Some(renorm) = &section.span.renormalizer {
        let _ = writeln!(
            out,
            "  renormalizer: base {} with {} basis rows",
            renorm.base_point,
            renorm.basis.len()
        );
    }
    if section.applicable {
        let _ = writeln!(
            out,
            "  applicable: yes; the projection degree exists and the lower bound is a multiple of {}",
            section.bound_multiple_of.unwrap_or(0)
        );
    } else {
        let _ = writeln!(
            out,
            "  applicable: no; the projection has no degree for this polytope"
        );
    }
}

fn render_poset(out: &mut String, section: &PosetSection) {
    let _ = writeln!(out);
    let _ = writeln!(out, "[poset] {} elements", section.elements.len());
    let _ = writeln!(
        out,
        "  maximal chains: {} with element counts {:?}",
        section.chains.maximal_chains.len(),
        section.chains.lengths
    );
    let _ = writeln!(
        out,
        "  all chains odd (toric criterion): {}",
        section.toric_by_chains
    );
    let _ = writeln!(
        out,
        "  ranked mod 2 (spherical criterion): {}",
        section.spherical_by_ranking
    );
    match section.polytope_agreement {
        Some(flag) => {
            let _ = writeln!(out, "  agreement with order-polytope machinery: {flag}");
        }
        None => {
            let _ = writeln!(
                out,
                "  agreement with order-polytope machinery: skipped ({})",
                section.note.as_deref().unwrap_or("unavailable")
            );
        }
    }
}

fn render_oracle(out: &mut String, section: &OracleSection) {
    let _ = writeln!(out);
    let _ = writeln!(out, "[oracle cross-check] agrees: {}", section.agrees);
    let render = |out: &mut String, name: &str, check: &OracleCheck| {
        let kernel = check
            .boundary_kernel_rank
            .map(|k| k.to_string())
            .unwrap_or_else(|| "skipped (over cap)".to_string());
        let _ = writeln!(
            out,
            "  {name}: orientable={}, components={}, boundary kernel rank={kernel}, agrees={}",
            check.orientable, check.components, check.agrees
        );
    };
    if let Some(check) = &section.toric {
        render(out, "toric", check);
    }
    if let Some(check) = &section.spherical {
        render(out, "spherical", check);
    }
}
