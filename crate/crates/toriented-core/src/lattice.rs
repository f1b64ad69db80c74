//! Integer-lattice and polytope computations: primitive vectors, facet
//! enumeration, lattice-point enumeration, affine-span checks and
//! normal-fan ray extraction.
//!
//! All arithmetic is exact: coordinates are `i64`, intermediate values that
//! can outgrow a machine word (Hermite normal forms, hyperplane minors) run
//! over arbitrary-precision integers, and conversions back to `i64` fail
//! loudly instead of wrapping.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::gf2::Gf2Vector;

/// Default cap on candidate points scanned by [`LatticePolytope::lattice_points`].
pub const DEFAULT_POINT_CAP: u128 = 10_000_000;

/// Cap on index subsets scanned by facet enumeration and vertex recovery.
const SUBSET_CAP: u128 = 10_000_000;

/// Largest ambient dimension accepted for polytopes.
pub const MAX_POLYTOPE_DIM: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("zero vector has no primitive form")]
    ZeroVector,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("not a lattice polytope: {0}")]
    NotLattice(String),
    #[error("resource cap exceeded: {0}")]
    ResourceExceeded(String),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
}

/// An integer vector of fixed dimension.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeVector {
    coords: Vec<i64>,
}

impl LatticeVector {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            coords: vec![0; dim],
        }
    }

    pub fn unit(dim: usize, index: usize) -> Self {
        assert!(index < dim);
        let mut coords = vec![0; dim];
        coords[index] = 1;
        Self { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Divides out the gcd of the entries; the result is a positive multiple
    /// of `self` with coprime entries.
    pub fn primitive(&self) -> Result<LatticeVector, GeometryError> {
        if self.is_zero() {
            return Err(GeometryError::ZeroVector);
        }
        let g = self
            .coords
            .iter()
            .fold(0i128, |acc, &c| acc.gcd(&(c as i128)));
        let coords = self
            .coords
            .iter()
            .map(|&c| i64::try_from(c as i128 / g).map_err(|_| GeometryError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LatticeVector { coords })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<LatticeVector, GeometryError> {
        if self.dim() != other.dim() {
            return Err(GeometryError::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| a.checked_sub(b).ok_or(GeometryError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LatticeVector { coords })
    }

    pub fn dot(&self, other: &Self) -> Result<i128, GeometryError> {
        if self.dim() != other.dim() {
            return Err(GeometryError::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        let mut acc: i128 = 0;
        for (&a, &b) in self.coords.iter().zip(&other.coords) {
            acc = acc
                .checked_add(a as i128 * b as i128)
                .ok_or(GeometryError::Overflow)?;
        }
        Ok(acc)
    }

    /// Coordinatewise reduction modulo 2.
    pub fn mod2(&self) -> Gf2Vector {
        Gf2Vector::from_bits(self.coords.iter().map(|&c| c.rem_euclid(2) == 1))
    }

    fn to_bigints(&self) -> Vec<BigInt> {
        self.coords.iter().map(|&c| BigInt::from(c)).collect()
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// One facet in inner-normal form: `normal · y >= offset` holds on the whole
/// polytope with equality exactly on the facet.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct FacetData {
    pub normal: LatticeVector,
    pub offset: i64,
}

impl FacetData {
    pub fn satisfied_by(&self, point: &LatticeVector) -> Result<bool, GeometryError> {
        Ok(self.normal.dot(point)? >= self.offset as i128)
    }

    pub fn tight_at(&self, point: &LatticeVector) -> Result<bool, GeometryError> {
        Ok(self.normal.dot(point)? == self.offset as i128)
    }
}

impl fmt::Display for FacetData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} . y >= {}", self.normal, self.offset)
    }
}

/// A full-dimensional lattice polytope carrying both its vertex list and its
/// facet list in inner-normal form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<LatticeVector>,
    facets: Vec<FacetData>,
}

impl LatticePolytope {
    /// Builds the polytope from its vertices, enumerating facets.
    ///
    /// Non-extreme input points are dropped, so `vertices()` always returns
    /// the actual vertex set.
    pub fn from_vertices(vertices: Vec<LatticeVector>) -> Result<Self, GeometryError> {
        let dim = check_uniform_dim(&vertices)?;
        let facets = facets_from_vertices(&vertices)?;
        let mut extreme = Vec::new();
        for v in vertices {
            if extreme.contains(&v) {
                continue;
            }
            let tight: Vec<&FacetData> = facets
                .iter()
                .filter(|f| f.tight_at(&v).unwrap_or(false))
                .collect();
            let rows = tight.iter().map(|f| f.normal.to_bigints());
            if rank_with_limit(rows, dim) == dim {
                extreme.push(v);
            }
        }
        let polytope = Self {
            dim,
            vertices: extreme,
            facets,
        };
        polytope.validate()?;
        Ok(polytope)
    }

    /// Builds the polytope from facet data, recovering vertices exactly.
    pub fn from_facets(dim: usize, facets: Vec<FacetData>) -> Result<Self, GeometryError> {
        check_facets(dim, &facets)?;
        let vertices = vertices_from_facets(dim, &facets)?;
        let polytope = Self {
            dim,
            vertices,
            facets,
        };
        polytope.validate()?;
        Ok(polytope)
    }

    /// Builds the polytope from matching vertex and facet data, verifying
    /// consistency without re-enumerating either side.
    pub fn from_parts(
        vertices: Vec<LatticeVector>,
        facets: Vec<FacetData>,
    ) -> Result<Self, GeometryError> {
        let dim = check_uniform_dim(&vertices)?;
        check_facets(dim, &facets)?;
        let polytope = Self {
            dim,
            vertices,
            facets,
        };
        polytope.validate()?;
        Ok(polytope)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[FacetData] {
        &self.facets
    }

    /// Primitive inner normals of the facets: the rays of the normal fan.
    pub fn normal_fan_rays(&self) -> Vec<LatticeVector> {
        self.facets.iter().map(|f| f.normal.clone()).collect()
    }

    /// All integer points of the polytope, in lexicographic order.
    pub fn lattice_points(&self) -> Result<Vec<LatticeVector>, GeometryError> {
        self.lattice_points_with_cap(DEFAULT_POINT_CAP)
    }

    /// As [`lattice_points`](Self::lattice_points) with an explicit cap on the
    /// number of bounding-box candidates scanned.
    pub fn lattice_points_with_cap(&self, cap: u128) -> Result<Vec<LatticeVector>, GeometryError> {
        let mut lo = vec![i64::MAX; self.dim];
        let mut hi = vec![i64::MIN; self.dim];
        for v in &self.vertices {
            for (i, &c) in v.coords().iter().enumerate() {
                lo[i] = lo[i].min(c);
                hi[i] = hi[i].max(c);
            }
        }
        let mut candidates: u128 = 1;
        for i in 0..self.dim {
            let width = (hi[i] - lo[i]) as u128 + 1;
            candidates = candidates.checked_mul(width).ok_or_else(cap_error)?;
            if candidates > cap {
                return Err(cap_error());
            }
        }
        let mut points = Vec::new();
        let mut current = lo.clone();
        'outer: loop {
            let point = LatticeVector::new(current.clone());
            let inside = self.facets.iter().try_fold(true, |acc, f| {
                Ok::<_, GeometryError>(acc && f.satisfied_by(&point)?)
            })?;
            if inside {
                points.push(point);
            }
            // Odometer step, last coordinate fastest.
            for i in (0..self.dim).rev() {
                if current[i] < hi[i] {
                    current[i] += 1;
                    continue 'outer;
                }
                current[i] = lo[i];
            }
            break;
        }
        points.sort();
        Ok(points)
    }

    fn validate(&self) -> Result<(), GeometryError> {
        if self.dim == 0 || self.dim > MAX_POLYTOPE_DIM {
            return Err(GeometryError::Degenerate(format!(
                "ambient dimension must be between 1 and {MAX_POLYTOPE_DIM}"
            )));
        }
        if self.vertices.is_empty() {
            return Err(GeometryError::EmptyInput("polytope has no vertices"));
        }
        if self.facets.is_empty() {
            return Err(GeometryError::Degenerate("polytope has no facets".into()));
        }
        // Full-dimensionality of the vertex set.
        let base = &self.vertices[0];
        let diffs = self
            .vertices
            .iter()
            .skip(1)
            .map(|v| v.checked_sub(base))
            .collect::<Result<Vec<_>, _>>()?;
        if rank_with_limit(diffs.iter().map(|d| d.to_bigints()), self.dim) != self.dim {
            return Err(GeometryError::Degenerate(
                "vertices do not affinely span the ambient space".into(),
            ));
        }
        // Every vertex satisfies every inequality.
        for v in &self.vertices {
            for f in &self.facets {
                if !f.satisfied_by(v)? {
                    return Err(GeometryError::Degenerate(format!(
                        "vertex {v} violates facet {f}"
                    )));
                }
            }
        }
        // Every facet is tight on >= dim affinely independent vertices.
        for f in &self.facets {
            let mut tight = Vec::new();
            for v in &self.vertices {
                if f.tight_at(v)? {
                    tight.push(v.clone());
                }
            }
            let enough = match tight.split_first() {
                None => false,
                Some((base, rest)) => {
                    let diffs = rest
                        .iter()
                        .map(|v| v.checked_sub(base))
                        .collect::<Result<Vec<_>, _>>()?;
                    rank_with_limit(diffs.iter().map(|d| d.to_bigints()), self.dim - 1)
                        == self.dim - 1
                }
            };
            if !enough {
                return Err(GeometryError::Degenerate(format!(
                    "facet {f} is not supported by {} affinely independent vertices",
                    self.dim
                )));
            }
        }
        Ok(())
    }
}

fn cap_error() -> GeometryError {
    GeometryError::ResourceExceeded("bounding box exceeds the lattice-point cap".into())
}

fn check_uniform_dim(vectors: &[LatticeVector]) -> Result<usize, GeometryError> {
    let first = vectors
        .first()
        .ok_or(GeometryError::EmptyInput("no vertices given"))?;
    let dim = first.dim();
    for v in vectors {
        if v.dim() != dim {
            return Err(GeometryError::DimensionMismatch {
                expected: dim,
                got: v.dim(),
            });
        }
    }
    Ok(dim)
}

fn check_facets(dim: usize, facets: &[FacetData]) -> Result<(), GeometryError> {
    for f in facets {
        if f.normal.dim() != dim {
            return Err(GeometryError::DimensionMismatch {
                expected: dim,
                got: f.normal.dim(),
            });
        }
        if f.normal.is_zero() {
            return Err(GeometryError::ZeroVector);
        }
        if f.normal.primitive()? != f.normal {
            return Err(GeometryError::Degenerate(format!(
                "facet normal {} is not primitive",
                f.normal
            )));
        }
    }
    let keys: BTreeSet<(&LatticeVector, i64)> =
        facets.iter().map(|f| (&f.normal, f.offset)).collect();
    if keys.len() != facets.len() {
        return Err(GeometryError::Degenerate("duplicate facet".into()));
    }
    Ok(())
}

/// Enumerates the facets of `conv(vertices)` by hyperplane search: every
/// dim-subset of points spanning a hyperplane is tested against the rest of
/// the point set, and supporting hyperplanes are kept in inner-normal form.
pub fn facets_from_vertices(vertices: &[LatticeVector]) -> Result<Vec<FacetData>, GeometryError> {
    let dim = check_uniform_dim(vertices)?;
    if dim == 0 || dim > MAX_POLYTOPE_DIM {
        return Err(GeometryError::Degenerate(format!(
            "ambient dimension must be between 1 and {MAX_POLYTOPE_DIM}"
        )));
    }
    let base = &vertices[0];
    let diffs = vertices
        .iter()
        .skip(1)
        .map(|v| v.checked_sub(base))
        .collect::<Result<Vec<_>, _>>()?;
    if rank_with_limit(diffs.iter().map(|d| d.to_bigints()), dim) != dim {
        return Err(GeometryError::Degenerate(
            "vertices do not affinely span the ambient space".into(),
        ));
    }
    if binomial(vertices.len(), dim) > SUBSET_CAP {
        return Err(GeometryError::ResourceExceeded(format!(
            "facet enumeration over {} vertices in dimension {dim} exceeds the subset cap",
            vertices.len()
        )));
    }

    let mut found: BTreeSet<(Vec<i64>, i64)> = BTreeSet::new();
    for subset in Combinations::new(vertices.len(), dim) {
        let anchor = &vertices[subset[0]];
        let rows: Vec<Vec<BigInt>> = subset[1..]
            .iter()
            .map(|&i| vertices[i].checked_sub(anchor).map(|d| d.to_bigints()))
            .collect::<Result<_, _>>()?;
        let Some(normal) = hyperplane_normal(&rows, dim) else {
            continue;
        };
        let offset: BigInt = normal
            .iter()
            .zip(anchor.coords())
            .map(|(n, &c)| n * BigInt::from(c))
            .sum();
        let mut above = false;
        let mut below = false;
        for v in vertices {
            let value: BigInt = normal
                .iter()
                .zip(v.coords())
                .map(|(n, &c)| n * BigInt::from(c))
                .sum();
            match value.cmp(&offset) {
                std::cmp::Ordering::Greater => above = true,
                std::cmp::Ordering::Less => below = true,
                std::cmp::Ordering::Equal => {}
            }
            if above && below {
                break;
            }
        }
        if above && below {
            continue;
        }
        let (normal, offset) = if below {
            (normal.iter().map(|n| -n).collect::<Vec<_>>(), -offset)
        } else {
            (normal, offset)
        };
        // Reduce to a primitive normal; the offset shares the content because
        // it is a dot product against the normal.
        let content = normal.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        let normal: Vec<i64> = normal
            .iter()
            .map(|n| bigint_to_i64(&(n / &content)))
            .collect::<Result<_, _>>()?;
        let offset = bigint_to_i64(&(offset / &content))?;
        found.insert((normal, offset));
    }
    Ok(found
        .into_iter()
        .map(|(normal, offset)| FacetData {
            normal: LatticeVector::new(normal),
            offset,
        })
        .collect())
}

/// Recovers the vertex set of a polytope given by facet inequalities, by
/// solving every dim-subset of facet equalities exactly.
fn vertices_from_facets(
    dim: usize,
    facets: &[FacetData],
) -> Result<Vec<LatticeVector>, GeometryError> {
    if facets.is_empty() {
        return Err(GeometryError::EmptyInput("no facets given"));
    }
    if binomial(facets.len(), dim) > SUBSET_CAP {
        return Err(GeometryError::ResourceExceeded(format!(
            "vertex recovery over {} facets in dimension {dim} exceeds the subset cap",
            facets.len()
        )));
    }
    let mut vertices: BTreeSet<LatticeVector> = BTreeSet::new();
    for subset in Combinations::new(facets.len(), dim) {
        let matrix: Vec<Vec<BigInt>> = subset
            .iter()
            .map(|&i| facets[i].normal.to_bigints())
            .collect();
        let rhs: Vec<BigInt> = subset
            .iter()
            .map(|&i| BigInt::from(facets[i].offset))
            .collect();
        let det = bareiss_det(matrix.clone());
        if det.is_zero() {
            continue;
        }
        // Cramer's rule: candidate = (numerators / det).
        let mut numerators = Vec::with_capacity(dim);
        for col in 0..dim {
            let mut replaced = matrix.clone();
            for (row, value) in replaced.iter_mut().zip(&rhs) {
                row[col] = value.clone();
            }
            numerators.push(bareiss_det(replaced));
        }
        let (numerators, det) = if det.is_negative() {
            (numerators.into_iter().map(|n| -n).collect::<Vec<_>>(), -det)
        } else {
            (numerators, det)
        };
        let feasible = facets.iter().all(|f| {
            let lhs: BigInt = f
                .normal
                .to_bigints()
                .iter()
                .zip(&numerators)
                .map(|(n, x)| n * x)
                .sum();
            lhs >= BigInt::from(f.offset) * &det
        });
        if !feasible {
            continue;
        }
        let mut coords = Vec::with_capacity(dim);
        for numerator in &numerators {
            let (q, r) = numerator.div_rem(&det);
            if !r.is_zero() {
                return Err(GeometryError::NotLattice(format!(
                    "facet data has a non-integral vertex ({numerator}/{det} in one coordinate)"
                )));
            }
            coords.push(bigint_to_i64(&q)?);
        }
        vertices.insert(LatticeVector::new(coords));
    }
    if vertices.is_empty() {
        return Err(GeometryError::Degenerate(
            "facet inequalities do not cut out a full-dimensional polytope".into(),
        ));
    }
    Ok(vertices.into_iter().collect())
}

/// Lattice index and renormalization data for the affine span of a point set.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SpanReport {
    /// True exactly when the points affinely generate the full integer lattice.
    pub spans: bool,
    /// Rank of the difference lattice.
    pub rank: usize,
    /// Index of the difference lattice in the ambient lattice; absent when
    /// the rank is deficient (the index is infinite in that case).
    pub index: Option<u64>,
    /// Coordinate change onto the sublattice, present whenever `spans` fails.
    pub renormalizer: Option<Renormalizer>,
}

/// Maps points of an affine sublattice to coordinates in which the
/// sublattice becomes the standard lattice of its rank.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Renormalizer {
    pub base_point: LatticeVector,
    /// Hermite-form basis of the difference lattice, one row per basis vector.
    pub basis: Vec<LatticeVector>,
}

impl Renormalizer {
    /// Coordinates of `point - base_point` in the sublattice basis, or `None`
    /// if the point does not lie on the affine sublattice.
    pub fn apply(&self, point: &LatticeVector) -> Option<LatticeVector> {
        let diff = point.checked_sub(&self.base_point).ok()?;
        let diff: Vec<BigInt> = diff.to_bigints();
        let rows: Vec<Vec<BigInt>> = self.basis.iter().map(|b| b.to_bigints()).collect();
        let pivot_cols: Vec<usize> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .position(|x| !x.is_zero())
                    .expect("basis rows are nonzero")
            })
            .collect();
        let mut coeffs: Vec<BigInt> = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let col = pivot_cols[i];
            let mut value = diff[col].clone();
            for (j, prev) in rows.iter().enumerate().take(i) {
                value -= &coeffs[j] * &prev[col];
            }
            let (q, r) = value.div_rem(&row[col]);
            if !r.is_zero() {
                return None;
            }
            coeffs.push(q);
        }
        // Verify the full reconstruction, not just the pivot columns.
        for col in 0..diff.len() {
            let acc: BigInt = rows.iter().zip(&coeffs).map(|(r, c)| &r[col] * c).sum();
            if acc != diff[col] {
                return None;
            }
        }
        let coords = coeffs
            .iter()
            .map(bigint_to_i64)
            .collect::<Result<Vec<_>, _>>()
            .ok()?;
        Some(LatticeVector::new(coords))
    }
}

/// Checks whether a point set affinely generates the full integer lattice,
/// via the Hermite normal form of the difference lattice.
pub fn affine_span_check(points: &[LatticeVector]) -> Result<SpanReport, GeometryError> {
    let dim = check_uniform_dim(points)?;
    let base = &points[0];
    let diffs: Vec<Vec<BigInt>> = points
        .iter()
        .skip(1)
        .map(|p| p.checked_sub(base).map(|d| d.to_bigints()))
        .collect::<Result<_, _>>()?;
    let basis = row_hnf(diffs, dim);
    let rank = basis.len();
    let index = if rank == dim {
        let product = basis
            .iter()
            .enumerate()
            .fold(BigInt::one(), |acc, (i, row)| acc * &row[i]);
        Some(u64::try_from(product).map_err(|_| GeometryError::Overflow)?)
    } else {
        None
    };
    let spans = index == Some(1);
    let renormalizer = if spans {
        None
    } else {
        let basis = basis
            .iter()
            .map(|row| {
                row.iter()
                    .map(bigint_to_i64)
                    .collect::<Result<Vec<_>, _>>()
                    .map(LatticeVector::new)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Some(Renormalizer {
            base_point: base.clone(),
            basis,
        })
    };
    Ok(SpanReport {
        spans,
        rank,
        index,
        renormalizer,
    })
}

/// In place: `rows[target] -= q * rows[source]`.
fn row_sub_mul(rows: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    debug_assert_ne!(target, source);
    let (a, b) = if target < source {
        let (lo, hi) = rows.split_at_mut(source);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(target);
        (&mut hi[0], &lo[source])
    };
    for (x, y) in a.iter_mut().zip(b) {
        *x -= q * y;
    }
}

/// Row-style Hermite normal form over arbitrary-precision integers.
///
/// Returns a basis of the row lattice: echelon rows with positive pivots and
/// entries above each pivot reduced into `[0, pivot)`.
fn row_hnf(mut rows: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<BigInt>> {
    let mut pivot = 0usize;
    for col in 0..cols {
        loop {
            let mut best: Option<usize> = None;
            for r in pivot..rows.len() {
                if !rows[r][col].is_zero() {
                    best = match best {
                        Some(b) if rows[b][col].abs() <= rows[r][col].abs() => Some(b),
                        _ => Some(r),
                    };
                }
            }
            let Some(b) = best else { break };
            rows.swap(pivot, b);
            let mut remaining = false;
            for r in pivot + 1..rows.len() {
                if !rows[r][col].is_zero() {
                    let q = rows[r][col].div_floor(&rows[pivot][col]);
                    if !q.is_zero() {
                        row_sub_mul(&mut rows, r, pivot, &q);
                    }
                    remaining = remaining || !rows[r][col].is_zero();
                }
            }
            if !remaining {
                if rows[pivot][col].is_negative() {
                    for x in rows[pivot].iter_mut() {
                        *x = -&*x;
                    }
                }
                for r in 0..pivot {
                    let q = rows[r][col].div_floor(&rows[pivot][col]);
                    if !q.is_zero() {
                        row_sub_mul(&mut rows, r, pivot, &q);
                    }
                }
                pivot += 1;
                break;
            }
        }
    }
    rows.truncate(pivot);
    rows
}

/// Normal to the hyperplane spanned by `rows` (dim-1 difference vectors in
/// dimension `dim`): the vector of signed maximal minors. `None` when the
/// rows do not span a hyperplane.
fn hyperplane_normal(rows: &[Vec<BigInt>], dim: usize) -> Option<Vec<BigInt>> {
    debug_assert_eq!(rows.len(), dim - 1);
    let mut normal = Vec::with_capacity(dim);
    for skip in 0..dim {
        let minor: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != skip)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let mut det = bareiss_det(minor);
        if skip % 2 == 1 {
            det = -det;
        }
        normal.push(det);
    }
    if normal.iter().all(|n| n.is_zero()) {
        None
    } else {
        Some(normal)
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub(crate) fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign {
        -det
    } else {
        det
    }
}

/// Rank of an integer matrix over the rationals, stopping early once `limit`
/// independent rows are found.
pub(crate) fn rank_with_limit<I>(rows: I, limit: usize) -> usize
where
    I: IntoIterator<Item = Vec<BigInt>>,
{
    if limit == 0 {
        return 0;
    }
    // (leading column, reduced row)
    let mut pivots: Vec<(usize, Vec<BigInt>)> = Vec::new();
    for mut row in rows {
        for (lead, pivot) in &pivots {
            if !row[*lead].is_zero() {
                let a = pivot[*lead].clone();
                let b = row[*lead].clone();
                for (x, p) in row.iter_mut().zip(pivot) {
                    *x = &*x * &a - p * &b;
                }
            }
        }
        if let Some(lead) = row.iter().position(|x| !x.is_zero()) {
            let content = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            for x in row.iter_mut() {
                *x = &*x / &content;
            }
            pivots.push((lead, row));
            if pivots.len() == limit {
                return limit;
            }
        }
    }
    pivots.len()
}

fn bigint_to_i64(value: &BigInt) -> Result<i64, GeometryError> {
    i64::try_from(value).map_err(|_| GeometryError::Overflow)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut result: u128 = 1;
    for i in 0..k.min(n - k) {
        result = result.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    result
}

/// Iterator over all k-subsets of `0..n`, in lexicographic order.
struct Combinations {
    n: usize,
    k: usize,
    indices: Vec<usize>,
    started: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            k,
            indices: (0..k).collect(),
            started: false,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.k > self.n {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.indices.clone());
        }
        let mut i = self.k.checked_sub(1)?;
        loop {
            if self.indices[i] < self.n - self.k + i {
                self.indices[i] += 1;
                for j in i + 1..self.k {
                    self.indices[j] = self.indices[j - 1] + 1;
                }
                return Some(self.indices.clone());
            }
            if i == 0 {
                return None;
            }
            i -= 1;
        }
    }
}
