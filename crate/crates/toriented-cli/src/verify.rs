//! The `oracle verify` command: agreement tables between the certificate
//! machinery and the two brute-force oracle paths.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Result};
use toriented_core::gf2::Gf2Vector;
use toriented_core::oracle::{
    boundary_kernel_rank, oracle_components, oracle_orientable, OracleCaps,
};
use toriented_core::orientability::{components, small_cover_orientable, SmallCoverSpec};

use crate::input::{self, AnyInput};

pub struct VerifyOutcome {
    pub all_agree: bool,
    pub text: String,
}

/// One line of the agreement table: a spec checked along every path.
fn check_spec(label: &str, spec: &SmallCoverSpec, caps: &OracleCaps) -> Result<(bool, String)> {
    let verdict = small_cover_orientable(spec);
    let comps = components(spec);
    let certificate_ok = verdict.verify();
    let graph_orientable = oracle_orientable(spec, caps)?;
    let graph_components = oracle_components(spec, caps)?;
    // Over the boundary cap the slow path is skipped, not an error.
    let kernel = boundary_kernel_rank(spec, caps).ok();
    let expected_kernel = if verdict.orientable { comps.count } else { 0 };
    let agree = certificate_ok
        && graph_orientable == verdict.orientable
        && graph_components == comps.count
        && kernel.is_none_or(|k| k == expected_kernel);
    let kernel_text = kernel.map_or_else(|| "skipped".to_string(), |k| k.to_string());
    let line = format!(
        "  {label}: theorem=({}, {} components) graph=({}, {}) boundary-kernel={} certificate={} -> {}",
        if verdict.orientable { "orientable" } else { "non-orientable" },
        comps.count,
        if graph_orientable { "orientable" } else { "non-orientable" },
        graph_components,
        kernel_text,
        if certificate_ok { "valid" } else { "INVALID" },
        if agree { "agree" } else { "DISAGREE" },
    );
    Ok((agree, line))
}

/// Verifies one input file along every applicable path.
pub fn verify_file(path: &Path, caps: &OracleCaps) -> Result<(bool, String)> {
    let (parsed, _) = input::parse_any(path)?;
    let mut text = String::new();
    let _ = writeln!(text, "input {} ({})", path.display(), parsed.kind());
    let mut all = true;
    match parsed {
        AnyInput::SmallCover(raw) => {
            let spec = raw.into_spec()?;
            let (agree, line) = check_spec("small cover", &spec, caps)?;
            all &= agree;
            let _ = writeln!(text, "{line}");
        }
        AnyInput::Fan(raw) => {
            let (rank, rays) = raw.into_rays()?;
            let spec = SmallCoverSpec::from_rays(rank, &rays)?;
            let (agree, line) = check_spec("toric", &spec, caps)?;
            all &= agree;
            let _ = writeln!(text, "{line}");
        }
        AnyInput::Polytope(raw) => {
            let polytope = raw.into_polytope()?;
            let rays = polytope.normal_fan_rays();
            let toric_spec = SmallCoverSpec::from_rays(polytope.dim(), &rays)?;
            let (agree, line) = check_spec("toric", &toric_spec, caps)?;
            all &= agree;
            let _ = writeln!(text, "{line}");
            let spherical_spec = SmallCoverSpec::from_polytope_facets(&polytope);
            let (agree, line) = check_spec("spherical", &spherical_spec, caps)?;
            all &= agree;
            let _ = writeln!(text, "{line}");
        }
        AnyInput::Poset(raw) => {
            let poset = raw.into_poset()?;
            let chains = poset.maximal_chains()?;
            let polytope = poset.order_polytope()?;
            let rays = polytope.normal_fan_rays();
            let toric_spec = SmallCoverSpec::from_rays(polytope.dim(), &rays)?;
            let (agree, line) = check_spec("toric (order polytope)", &toric_spec, caps)?;
            all &= agree;
            let _ = writeln!(text, "{line}");
            let spherical_spec = SmallCoverSpec::from_polytope_facets(&polytope);
            let (agree, line) = check_spec("spherical (order polytope)", &spherical_spec, caps)?;
            all &= agree;
            let _ = writeln!(text, "{line}");
            // The chain criteria must match the machinery as well.
            let toric_matches = chains.all_odd == small_cover_orientable(&toric_spec).orientable;
            let spherical_matches =
                chains.ranked_mod2 == small_cover_orientable(&spherical_spec).orientable;
            all &= toric_matches && spherical_matches;
            let _ = writeln!(
                text,
                "  chain criteria: toric={} spherical={} -> {}",
                toric_matches,
                spherical_matches,
                if toric_matches && spherical_matches {
                    "agree"
                } else {
                    "DISAGREE"
                }
            );
        }
    }
    Ok((all, text))
}

pub fn verify_inputs(paths: &[std::path::PathBuf], caps: &OracleCaps) -> Result<VerifyOutcome> {
    let mut text = String::new();
    let mut all_agree = true;
    for path in paths {
        let (agree, block) = verify_file(path, caps)?;
        all_agree &= agree;
        text.push_str(&block);
    }
    let _ = writeln!(
        text,
        "{} input(s) checked: {}",
        paths.len(),
        if all_agree {
            "all agree"
        } else {
            "DISAGREEMENT FOUND"
        }
    );
    Ok(VerifyOutcome { all_agree, text })
}

/// Sweeps every generator set over GF(2)^n (all subsets of the nonzero
/// vectors, the empty set included) and checks the theorem path against
/// both oracle paths. Only feasible for n <= 4.
pub fn verify_exhaustive(n: usize, caps: &OracleCaps) -> Result<VerifyOutcome> {
    if n == 0 || n > 4 {
        bail!("exhaustive sweeps are supported for n between 1 and 4, got {n}");
    }
    let nonzero: Vec<u64> = (1..1u64 << n).collect();
    let total: u64 = 1 << nonzero.len();
    let mut disagreements = 0u64;
    for subset in 0..total {
        let generators: Vec<Gf2Vector> = nonzero
            .iter()
            .enumerate()
            .filter(|(i, _)| subset >> i & 1 == 1)
            .map(|(_, &mask)| Gf2Vector::from_bits((0..n).map(|i| mask >> i & 1 == 1)))
            .collect();
        let spec = SmallCoverSpec::new(n, generators).expect("nonzero generators");
        let verdict = small_cover_orientable(&spec);
        let comps = components(&spec);
        let ok = verdict.verify()
            && oracle_orientable(&spec, caps)? == verdict.orientable
            && oracle_components(&spec, caps)? == comps.count
            && boundary_kernel_rank(&spec, caps)?
                == if verdict.orientable { comps.count } else { 0 };
        if !ok {
            disagreements += 1;
        }
    }
    let all_agree = disagreements == 0;
    let text = format!(
        "exhaustive sweep n={n}: {total} generator sets checked along theorem, graph and boundary paths: {}\n",
        if all_agree {
            "all agree".to_string()
        } else {
            format!("{disagreements} DISAGREEMENTS")
        }
    );
    Ok(VerifyOutcome { all_agree, text })
}
