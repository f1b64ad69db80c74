//! Orientability verdicts and component counts for generalized small covers,
//! real toric varieties given by fan rays, and spherical toric varieties
//! given by lattice polytopes.
//!
//! A space glued from copies of a cell indexed by {±1}^n is orientable
//! exactly when its rank-1 isotropy generators admit an odd basis: a basis of
//! GF(2)^n expressing every generator as a XOR of an odd number of basis
//! vectors. Otherwise an odd-cardinality dependence among the generators
//! witnesses non-orientability. Either way the verdict carries the
//! certificate, and the certificate re-validates independently of how the
//! verdict was computed.

use serde::{Deserialize, Serialize};

use crate::gf2::{Gf2Matrix, Gf2Vector, OddBasis, OddDependenceWitness};
use crate::lattice::{
    affine_span_check, GeometryError, LatticePolytope, LatticeVector, SpanReport,
};

/// Largest ambient rank accepted; keeps coset enumeration within desk scale.
pub const MAX_RANK: usize = 21;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("ambient rank must be between 1 and {MAX_RANK}, got {0}")]
    RankOutOfRange(usize),
    #[error("generator {index} is the zero vector (rank-1 isotropy groups are nontrivial)")]
    ZeroGenerator { index: usize },
    #[error("generator {index} has dimension {got}, expected {expected}")]
    GeneratorDimension {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("ray {index} is the zero vector")]
    ZeroRay { index: usize },
    #[error("ray {index} has dimension {got}, expected {expected}")]
    RayDimension {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("label count {got} does not match generator count {expected}")]
    LabelCount { expected: usize, got: usize },
}

/// The data governing orientability of a small cover: the ambient rank and
/// the rank-1 isotropy generators, with provenance labels for reporting.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmallCoverSpec {
    ambient_rank: usize,
    generators: Vec<Gf2Vector>,
    labels: Vec<String>,
}

impl SmallCoverSpec {
    pub fn new(ambient_rank: usize, generators: Vec<Gf2Vector>) -> Result<Self, SpecError> {
        let labels = (0..generators.len()).map(|i| format!("g[{i}]")).collect();
        Self::with_labels(ambient_rank, generators, labels)
    }

    pub fn with_labels(
        ambient_rank: usize,
        generators: Vec<Gf2Vector>,
        labels: Vec<String>,
    ) -> Result<Self, SpecError> {
        if ambient_rank == 0 || ambient_rank > MAX_RANK {
            return Err(SpecError::RankOutOfRange(ambient_rank));
        }
        if labels.len() != generators.len() {
            return Err(SpecError::LabelCount {
                expected: generators.len(),
                got: labels.len(),
            });
        }
        for (index, g) in generators.iter().enumerate() {
            if g.dim() != ambient_rank {
                return Err(SpecError::GeneratorDimension {
                    index,
                    expected: ambient_rank,
                    got: g.dim(),
                });
            }
            if g.is_zero() {
                return Err(SpecError::ZeroGenerator { index });
            }
        }
        Ok(Self {
            ambient_rank,
            generators,
            labels,
        })
    }

    /// Builds the small-cover data of a real toric variety from its fan
    /// rays: each ray is reduced to primitive form and taken modulo 2.
    pub fn from_rays(ambient_rank: usize, rays: &[LatticeVector]) -> Result<Self, SpecError> {
        let mut generators = Vec::with_capacity(rays.len());
        let mut labels = Vec::with_capacity(rays.len());
        for (index, ray) in rays.iter().enumerate() {
            if ray.dim() != ambient_rank {
                return Err(SpecError::RayDimension {
                    index,
                    expected: ambient_rank,
                    got: ray.dim(),
                });
            }
            if ray.is_zero() {
                return Err(SpecError::ZeroRay { index });
            }
            let primitive = ray
                .primitive()
                .expect("a nonzero vector always has a primitive form");
            generators.push(primitive.mod2());
            labels.push(format!("ray[{index}] = {ray}"));
        }
        Self::with_labels(ambient_rank, generators, labels)
    }

    /// Builds the rank-(n+1) spec of the spherical toric variety of a
    /// polytope: one generator (b mod 2, b·F mod 2) per facet.
    pub fn from_polytope_facets(polytope: &LatticePolytope) -> Self {
        let mut generators = Vec::with_capacity(polytope.facets().len());
        let mut labels = Vec::with_capacity(polytope.facets().len());
        for (index, facet) in polytope.facets().iter().enumerate() {
            let row = facet
                .normal
                .mod2()
                .with_appended_bit(facet.offset.rem_euclid(2) == 1);
            generators.push(row);
            labels.push(format!("facet[{index}]: {facet}"));
        }
        Self::with_labels(polytope.dim() + 1, generators, labels)
            .expect("facet vectors of a validated polytope are nonzero and bounded in rank")
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn generators(&self) -> &[Gf2Vector] {
        &self.generators
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Deduplicated generator matrix plus, per kept row, the labels of all
    /// inputs that reduced to it. Duplicates can only form even dependences,
    /// so dropping them never changes a verdict, but the provenance keeps
    /// certificates traceable to the original rays/facets.
    pub fn deduped_generators(&self) -> (Gf2Matrix, Vec<Vec<String>>) {
        let mut rows: Vec<Gf2Vector> = Vec::new();
        let mut provenance: Vec<Vec<String>> = Vec::new();
        for (g, label) in self.generators.iter().zip(&self.labels) {
            match rows.iter().position(|r| r == g) {
                Some(i) => provenance[i].push(label.clone()),
                None => {
                    rows.push(g.clone());
                    provenance.push(vec![label.clone()]);
                }
            }
        }
        let matrix = Gf2Matrix::new(self.ambient_rank, rows)
            .expect("generator dimensions were validated at construction");
        (matrix, provenance)
    }
}

/// Either certificate of an orientability verdict.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum Certificate {
    #[serde(rename = "odd-basis")]
    OddBasis(OddBasis),
    #[serde(rename = "odd-dependence")]
    OddDependence(OddDependenceWitness),
}

/// An orientability verdict with its certificate and the deduplicated
/// generator rows (plus provenance) the certificate indices refer to.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OrientabilityVerdict {
    pub orientable: bool,
    pub certificate: Certificate,
    pub generators: Gf2Matrix,
    pub provenance: Vec<Vec<String>>,
}

impl OrientabilityVerdict {
    /// Re-validates the certificate against the stored generators, without
    /// trusting anything about how it was constructed.
    pub fn verify(&self) -> bool {
        match &self.certificate {
            Certificate::OddBasis(basis) => self.orientable && basis.verify(&self.generators),
            Certificate::OddDependence(witness) => {
                !self.orientable && witness.verify(&self.generators)
            }
        }
    }
}

/// Component count of the smooth locus: 2^(n-k) classes of the quotient of
/// {±1}^n by the span of the generators, k being the span's rank.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ComponentIndex {
    pub rank: usize,
    pub count: u64,
    /// Lexicographically minimal representative of each quotient class, in
    /// lexicographic order.
    pub coset_reps: Vec<Gf2Vector>,
}

/// Applicability report for lower bounds on real solution counts: the degree
/// of the projection from the spherical toric variety exists exactly when
/// the lattice points affinely span and the spherical variety is orientable.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LowerBoundReport {
    pub span: SpanReport,
    pub spherical_verdict: OrientabilityVerdict,
    pub spherical_components: ComponentIndex,
    pub applicable: bool,
    /// When applicable, the lower bound is a multiple of this component count.
    pub bound_multiple_of: Option<u64>,
}

/// Decides orientability of the smooth locus of a small cover.
pub fn small_cover_orientable(spec: &SmallCoverSpec) -> OrientabilityVerdict {
    let (generators, provenance) = spec.deduped_generators();
    let (orientable, certificate) = match generators.find_odd_basis() {
        Some(basis) => (true, Certificate::OddBasis(basis)),
        None => {
            let witness = generators
                .odd_dependence()
                .expect("odd dependence and odd basis are complementary");
            (false, Certificate::OddDependence(witness))
        }
    };
    OrientabilityVerdict {
        orientable,
        certificate,
        generators,
        provenance,
    }
}

/// Counts connected components of the smooth locus.
pub fn components(spec: &SmallCoverSpec) -> ComponentIndex {
    let (generators, _) = spec.deduped_generators();
    let echelon = generators.row_reduce();
    let n = spec.ambient_rank();
    let k = echelon.rank;
    let count = 1u64 << (n - k);
    let free_cols: Vec<usize> = (0..n).filter(|c| !echelon.pivot_cols.contains(c)).collect();
    let mut coset_reps = Vec::with_capacity(count as usize);
    for i in 0..count {
        let mut rep = Gf2Vector::zeros(n);
        for (b, &col) in free_cols.iter().enumerate() {
            // Earlier coordinates are more significant, so reps come out in
            // lexicographic order.
            if i >> (free_cols.len() - 1 - b) & 1 == 1 {
                rep.set(col, true);
            }
        }
        coset_reps.push(rep);
    }
    ComponentIndex {
        rank: k,
        count,
        coset_reps,
    }
}

/// Orientability and components of a real toric variety given by fan rays.
pub fn toric_orientable(
    ambient_rank: usize,
    rays: &[LatticeVector],
) -> Result<(OrientabilityVerdict, ComponentIndex), SpecError> {
    let spec = SmallCoverSpec::from_rays(ambient_rank, rays)?;
    Ok((small_cover_orientable(&spec), components(&spec)))
}

/// Deduplicated facet vectors (b mod 2, b·F mod 2) of a polytope, one column
/// block per ambient coordinate plus the offset coordinate.
pub fn spherical_facet_vectors(polytope: &LatticePolytope) -> Gf2Matrix {
    SmallCoverSpec::from_polytope_facets(polytope)
        .deduped_generators()
        .0
}

/// Orientability and components of the spherical toric variety of a polytope.
pub fn spherical_orientable(polytope: &LatticePolytope) -> (OrientabilityVerdict, ComponentIndex) {
    let spec = SmallCoverSpec::from_polytope_facets(polytope);
    (small_cover_orientable(&spec), components(&spec))
}

/// Assembles the lower-bound applicability report for a Newton polytope.
/// The degree itself is never computed here; the report states whether it
/// exists and what its value must be a multiple of.
pub fn lower_bound_report(polytope: &LatticePolytope) -> Result<LowerBoundReport, GeometryError> {
    let points = polytope.lattice_points()?;
    let span = affine_span_check(&points)?;
    let (spherical_verdict, spherical_components) = spherical_orientable(polytope);
    let applicable = span.spans && spherical_verdict.orientable;
    let bound_multiple_of = applicable.then_some(spherical_components.count);
    Ok(LowerBoundReport {
        span,
        spherical_verdict,
        spherical_components,
        applicable,
        bound_multiple_of,
    })
}
