//! JSON input schemas and kind inference.
//!
//! Every input is a UTF-8 JSON object, optionally tagged with
//! `"schema": "toriented/v1"`. The object's fields decide its kind:
//! `generators` (small cover), `rays` (fan), `vertices`/`facets` (polytope),
//! `elements` (poset).

use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Deserialize;
use toriented_core::{
    FacetData, FinitePoset, Gf2Vector, LatticePolytope, LatticeVector, SmallCoverSpec,
};

pub const SCHEMA: &str = "toriented/v1";

fn check_schema(tag: Option<&String>) -> Result<()> {
    if let Some(tag) = tag {
        if tag != SCHEMA {
            bail!("unsupported schema tag {tag:?}, expected {SCHEMA:?}");
        }
    }
    Ok(())
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SmallCoverInput {
    pub schema: Option<String>,
    pub n: usize,
    pub generators: Vec<Gf2Vector>,
    pub labels: Option<Vec<String>>,
}

impl SmallCoverInput {
    pub fn into_spec(self) -> Result<SmallCoverSpec> {
        check_schema(self.schema.as_ref())?;
        let spec = match self.labels {
            Some(labels) => SmallCoverSpec::with_labels(self.n, self.generators, labels)?,
            None => SmallCoverSpec::new(self.n, self.generators)?,
        };
        Ok(spec)
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanInput {
    pub schema: Option<String>,
    pub rays: Vec<LatticeVector>,
}

impl FanInput {
    /// Ambient rank and validated rays.
    pub fn into_rays(self) -> Result<(usize, Vec<LatticeVector>)> {
        check_schema(self.schema.as_ref())?;
        let rank = self
            .rays
            .first()
            .context("fan input needs at least one ray")?
            .dim();
        Ok((rank, self.rays))
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeInput {
    pub schema: Option<String>,
    pub vertices: Option<Vec<LatticeVector>>,
    pub facets: Option<Vec<FacetData>>,
}

impl PolytopeInput {
    pub fn into_polytope(self) -> Result<LatticePolytope> {
        check_schema(self.schema.as_ref())?;
        let polytope = match (self.vertices, self.facets) {
            (Some(vertices), Some(facets)) => LatticePolytope::from_parts(vertices, facets)?,
            (Some(vertices), None) => LatticePolytope::from_vertices(vertices)?,
            (None, Some(facets)) => {
                let dim = facets.first().context("facet list is empty")?.normal.dim();
                LatticePolytope::from_facets(dim, facets)?
            }
            (None, None) => bail!("polytope input needs \"vertices\" or \"facets\""),
        };
        Ok(polytope)
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetInput {
    pub schema: Option<String>,
    pub elements: Vec<String>,
    /// Cover relations a ⋖ b by element label; must be irredundant.
    pub covers: Option<Vec<(String, String)>>,
    /// Arbitrary strict relations a < b; reduced to covers internally.
    pub relations: Option<Vec<(String, String)>>,
}

impl PosetInput {
    pub fn into_poset(self) -> Result<FinitePoset> {
        check_schema(self.schema.as_ref())?;
        let elements = self.elements;
        let resolve = |pairs: Vec<(String, String)>| -> Result<Vec<(usize, usize)>> {
            pairs
                .into_iter()
                .map(|(a, b)| {
                    let find = |label: &str| {
                        elements
                            .iter()
                            .position(|e| e == label)
                            .with_context(|| format!("unknown element {label:?} in relation"))
                    };
                    Ok((find(&a)?, find(&b)?))
                })
                .collect()
        };
        let poset = match (self.covers, self.relations) {
            (Some(covers), None) => FinitePoset::from_covers(elements.clone(), resolve(covers)?)?,
            (None, Some(relations)) => {
                FinitePoset::from_relations(elements.clone(), resolve(relations)?)?
            }
            (Some(_), Some(_)) => {
                bail!("poset input must not give both \"covers\" and \"relations\"")
            }
            (None, None) => bail!("poset input needs \"covers\" or \"relations\""),
        };
        Ok(poset)
    }
}

/// An input file of any analyzable kind, inferred from its fields.
#[derive(Debug)]
pub enum AnyInput {
    SmallCover(SmallCoverInput),
    Fan(FanInput),
    Polytope(PolytopeInput),
    Poset(PosetInput),
}

impl AnyInput {
    pub fn kind(&self) -> &'static str {
        match self {
            AnyInput::SmallCover(_) => "small-cover",
            AnyInput::Fan(_) => "fan",
            AnyInput::Polytope(_) => "polytope",
            AnyInput::Poset(_) => "poset",
        }
    }
}

pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn parse_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<(T, serde_json::Value)> {
    let text = read_file(path)?;
    let echo: serde_json::Value = serde_json::from_str(&text)
        .with_context(|| format!("{} is not valid JSON", path.display()))?;
    let parsed: T = serde_json::from_str(&text).with_context(|| {
        format!(
            "{} does not match the expected input schema",
            path.display()
        )
    })?;
    Ok((parsed, echo))
}

/// Parses an input file, inferring its kind from the fields present.
pub fn parse_any(path: &Path) -> Result<(AnyInput, serde_json::Value)> {
    let text = read_file(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .with_context(|| format!("{} is not valid JSON", path.display()))?;
    let object = value
        .as_object()
        .with_context(|| format!("{} must contain a JSON object", path.display()))?;
    let parsed = if object.contains_key("generators") {
        AnyInput::SmallCover(serde_json::from_value(value.clone())?)
    } else if object.contains_key("rays") {
        AnyInput::Fan(serde_json::from_value(value.clone())?)
    } else if object.contains_key("elements") {
        AnyInput::Poset(serde_json::from_value(value.clone())?)
    } else if object.contains_key("vertices") || object.contains_key("facets") {
        AnyInput::Polytope(serde_json::from_value(value.clone())?)
    } else {
        bail!(
            "cannot infer input kind of {}: expected \"generators\", \"rays\", \"vertices\"/\"facets\" or \"elements\"",
            path.display()
        );
    };
    Ok((parsed, value))
}
