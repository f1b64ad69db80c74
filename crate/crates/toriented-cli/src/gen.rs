//! Generators for example input families, emitted in the polytope input
//! schema. Facets are emitted alongside vertices in closed form, so
//! analyzing a generated file never has to re-enumerate them.

use std::path::Path;

use anyhow::{bail, Result};
use serde::Serialize;
use toriented_core::{FacetData, LatticeVector};

use crate::input::{self, PosetInput, SCHEMA};

const MAX_GEN_RANK: usize = 12;

#[derive(Serialize)]
struct PolytopeFile {
    schema: &'static str,
    vertices: Vec<LatticeVector>,
    facets: Vec<FacetData>,
}

fn emit(file: &PolytopeFile) -> String {
    let mut text = serde_json::to_string_pretty(file).expect("generated files serialize");
    text.push('\n');
    text
}

fn check_rank(n: usize) -> Result<()> {
    if n == 0 || n > MAX_GEN_RANK {
        bail!("dimension must be between 1 and {MAX_GEN_RANK}, got {n}");
    }
    Ok(())
}

/// Cross polytope: convex hull of the unit vectors and their negatives.
/// Facets are the 2^n half-spaces s·y >= -1 over all sign vectors s.
pub fn cross_polytope(n: usize) -> Result<String> {
    check_rank(n)?;
    let mut vertices = Vec::with_capacity(2 * n);
    for i in 0..n {
        let mut plus = vec![0i64; n];
        plus[i] = 1;
        vertices.push(LatticeVector::new(plus));
        let mut minus = vec![0i64; n];
        minus[i] = -1;
        vertices.push(LatticeVector::new(minus));
    }
    let facets = (0..1u64 << n)
        .map(|mask| FacetData {
            normal: LatticeVector::new(
                (0..n)
                    .map(|i| if mask >> i & 1 == 1 { 1 } else { -1 })
                    .collect(),
            ),
            offset: -1,
        })
        .collect();
    Ok(emit(&PolytopeFile {
        schema: SCHEMA,
        vertices,
        facets,
    }))
}

/// Unit cube [0,1]^n.
pub fn cube(n: usize) -> Result<String> {
    check_rank(n)?;
    let vertices = (0..1u64 << n)
        .map(|mask| LatticeVector::new((0..n).map(|i| (mask >> i & 1) as i64).collect()))
        .collect();
    let mut facets = Vec::with_capacity(2 * n);
    for i in 0..n {
        facets.push(FacetData {
            normal: LatticeVector::unit(n, i),
            offset: 0,
        });
        let mut minus = vec![0i64; n];
        minus[i] = -1;
        facets.push(FacetData {
            normal: LatticeVector::new(minus),
            offset: -1,
        });
    }
    Ok(emit(&PolytopeFile {
        schema: SCHEMA,
        vertices,
        facets,
    }))
}

/// Order polytope of the poset in the given file.
pub fn order_polytope(poset_path: &Path) -> Result<String> {
    let (parsed, _) = input::parse_json::<PosetInput>(poset_path)?;
    let poset = parsed.into_poset()?;
    let polytope = poset.order_polytope()?;
    Ok(emit(&PolytopeFile {
        schema: SCHEMA,
        vertices: polytope.vertices().to_vec(),
        facets: polytope.facets().to_vec(),
    }))
}
