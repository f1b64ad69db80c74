//! The four analysis commands. Each parses an input file, computes verdicts
//! with certificates, optionally cross-checks against the brute-force
//! oracles, and assembles an [`AnalysisReport`].

use std::path::Path;
use std::time::Instant;

use anyhow::Result;
use toriented_core::oracle::{
    boundary_kernel_rank, oracle_components, oracle_orientable, OracleCaps,
};
use toriented_core::orientability::{
    components, lower_bound_report, small_cover_orientable, SmallCoverSpec,
};
use toriented_core::LatticePolytope;

use crate::input::{self, FanInput, PolytopeInput, PosetInput, SmallCoverInput};
use crate::report::{
    AnalysisReport, LowerBoundSection, OracleCheck, OracleSection, PosetSection, VerdictReport,
};

#[derive(Clone, Copy, Debug)]
pub struct AnalyzeOptions {
    /// Run the brute-force oracles and attach an agreement section.
    pub oracle: bool,
    /// Let the spherical verdict decide the exit code instead of the toric one.
    pub spherical_exit: bool,
    /// Attach the lower-bound applicability section (polytopes only).
    pub lower_bound: bool,
    pub caps: OracleCaps,
}

pub struct Outcome {
    pub report: AnalysisReport,
    /// Verdict governing the exit code: 0 when true, 1 when false.
    pub orientable: bool,
}

/// Cross-checks one spec against both oracle paths. The graph path must fit
/// under its cap (error otherwise); the boundary path is skipped when over
/// its own cap.
fn oracle_check(
    spec: &SmallCoverSpec,
    orientable: bool,
    count: u64,
    caps: &OracleCaps,
) -> Result<OracleCheck> {
    let graph_orientable = oracle_orientable(spec, caps)?;
    let graph_components = oracle_components(spec, caps)?;
    // Over the boundary cap the slow path is skipped, not an error.
    let kernel = boundary_kernel_rank(spec, caps).ok();
    let expected_kernel = if orientable { count } else { 0 };
    let agrees = graph_orientable == orientable
        && graph_components == count
        && kernel.is_none_or(|k| k == expected_kernel);
    Ok(OracleCheck {
        orientable: graph_orientable,
        components: graph_components,
        boundary_kernel_rank: kernel,
        agrees,
    })
}

fn verdict_pair(spec: &SmallCoverSpec) -> (VerdictReport, bool, u64) {
    let verdict = small_cover_orientable(spec);
    let comps = components(spec);
    let orientable = verdict.orientable;
    let count = comps.count;
    (VerdictReport::new(verdict, comps), orientable, count)
}

pub fn analyze_small_cover(path: &Path, opts: &AnalyzeOptions) -> Result<Outcome> {
    let start = Instant::now();
    let (parsed, echo) = input::parse_json::<SmallCoverInput>(path)?;
    let spec = parsed.into_spec()?;
    let (verdict, orientable, count) = verdict_pair(&spec);
    let mut report = AnalysisReport::new("small-cover", echo);
    report.toric = Some(verdict);
    if opts.oracle {
        let check = oracle_check(&spec, orientable, count, &opts.caps)?;
        let agrees = check.agrees;
        report.oracle = Some(OracleSection {
            toric: Some(check),
            spherical: None,
            agrees,
        });
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(Outcome { report, orientable })
}

pub fn analyze_fan(path: &Path, opts: &AnalyzeOptions) -> Result<Outcome> {
    let start = Instant::now();
    let (parsed, echo) = input::parse_json::<FanInput>(path)?;
    let (rank, rays) = parsed.into_rays()?;
    let spec = SmallCoverSpec::from_rays(rank, &rays)?;
    let (verdict, orientable, count) = verdict_pair(&spec);
    let mut report = AnalysisReport::new("fan", echo);
    report.toric = Some(verdict);
    if opts.oracle {
        let check = oracle_check(&spec, orientable, count, &opts.caps)?;
        let agrees = check.agrees;
        report.oracle = Some(OracleSection {
            toric: Some(check),
            spherical: None,
            agrees,
        });
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(Outcome { report, orientable })
}

/// Both verdict sections of a polytope: the real toric variety through its
/// normal-fan rays and the spherical variety through its facet vectors.
fn polytope_sections(
    polytope: &LatticePolytope,
    opts: &AnalyzeOptions,
) -> Result<(VerdictReport, VerdictReport, Option<OracleSection>)> {
    let rays = polytope.normal_fan_rays();
    let toric_spec = SmallCoverSpec::from_rays(polytope.dim(), &rays)?;
    let (toric, toric_orientable, toric_count) = verdict_pair(&toric_spec);
    let spherical_spec = SmallCoverSpec::from_polytope_facets(polytope);
    let (spherical, spherical_orientable, spherical_count) = verdict_pair(&spherical_spec);
    let oracle = if opts.oracle {
        let toric_check = oracle_check(&toric_spec, toric_orientable, toric_count, &opts.caps)?;
        let spherical_check = oracle_check(
            &spherical_spec,
            spherical_orientable,
            spherical_count,
            &opts.caps,
        )?;
        let agrees = toric_check.agrees && spherical_check.agrees;
        Some(OracleSection {
            toric: Some(toric_check),
            spherical: Some(spherical_check),
            agrees,
        })
    } else {
        None
    };
    Ok((toric, spherical, oracle))
}

pub fn analyze_polytope(path: &Path, opts: &AnalyzeOptions) -> Result<Outcome> {
    let start = Instant::now();
    let (parsed, echo) = input::parse_json::<PolytopeInput>(path)?;
    let polytope = parsed.into_polytope()?;
    let (toric, spherical, oracle) = polytope_sections(&polytope, opts)?;
    let orientable = if opts.spherical_exit {
        spherical.orientable
    } else {
        toric.orientable
    };
    let mut report = AnalysisReport::new("polytope", echo);
    if opts.lower_bound {
        let lb = lower_bound_report(&polytope)?;
        report.lower_bound = Some(LowerBoundSection {
            span: lb.span,
            applicable: lb.applicable,
            bound_multiple_of: lb.bound_multiple_of,
        });
    }
    report.toric = Some(toric);
    report.spherical = Some(spherical);
    report.oracle = oracle;
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(Outcome { report, orientable })
}

pub fn analyze_poset(path: &Path, opts: &AnalyzeOptions) -> Result<Outcome> {
    let start = Instant::now();
    let (parsed, echo) = input::parse_json::<PosetInput>(path)?;
    let poset = parsed.into_poset()?;
    let chains = poset.maximal_chains()?;
    let toric_by_chains = chains.all_odd;
    let spherical_by_ranking = chains.ranked_mod2;
    let mut section = PosetSection {
        elements: poset.elements().to_vec(),
        chains,
        toric_by_chains,
        spherical_by_ranking,
        polytope_agreement: None,
        note: None,
    };
    let mut report = AnalysisReport::new("poset", echo);
    match poset.order_polytope() {
        Ok(polytope) => {
            let (toric, spherical, oracle) = polytope_sections(&polytope, opts)?;
            section.polytope_agreement = Some(
                toric.orientable == toric_by_chains && spherical.orientable == spherical_by_ranking,
            );
            report.toric = Some(toric);
            report.spherical = Some(spherical);
            report.oracle = oracle;
        }
        Err(err) => {
            section.note = Some(format!("order polytope unavailable: {err}"));
        }
    }
    report.poset = Some(section);
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    let orientable = if opts.spherical_exit {
        spherical_by_ranking
    } else {
        toric_by_chains
    };
    Ok(Outcome { report, orientable })
}
