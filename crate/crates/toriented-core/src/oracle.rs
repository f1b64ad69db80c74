//! Independent brute-force verifier for orientability and component counts.
//!
//! The smooth locus of a small cover is glued from 2^n copies of one cell,
//! with copies ξ and ξ⊕g identified along a facet for each generator g. Two
//! oracle paths reconstruct that gluing without touching the certificate
//! machinery:
//!
//! - a signed Cayley graph on {±1}^n, where orientability amounts to a
//!   consistent ±1 labeling with a sign flip across every edge (no odd
//!   cycle), and components are plain graph components;
//! - the explicit top boundary matrix of the gluing, whose exact kernel rank
//!   over the rationals is the number of components when orientable and
//!   zero otherwise.
//!
//! Both paths are exponential in n and guarded by caps.

use num_bigint::BigInt;

use crate::lattice::rank_with_limit;
use crate::orientability::SmallCoverSpec;

/// Size caps for the two oracle paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCaps {
    /// Largest ambient rank for the Cayley-graph path.
    pub graph: usize,
    /// Largest ambient rank for the boundary-matrix path.
    pub boundary: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        Self {
            graph: 12,
            boundary: 10,
        }
    }
}

impl OracleCaps {
    /// Uses one cap for both paths.
    pub fn uniform(cap: usize) -> Self {
        Self {
            graph: cap,
            boundary: cap,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("ambient rank {n} exceeds the oracle cap {cap}")]
    CapExceeded { n: usize, cap: usize },
}

/// The gluing graph on {±1}^n: one vertex per group element, one edge
/// (ξ, ξ⊕g) per generator g, labeled by the generator index.
#[derive(Clone, Debug)]
pub struct SignedCayleyGraph {
    rank: usize,
    generators: Vec<u64>,
}

impl SignedCayleyGraph {
    pub fn new(spec: &SmallCoverSpec) -> Self {
        Self {
            rank: spec.ambient_rank(),
            generators: spec.generators().iter().map(|g| g.as_mask()).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        1usize << self.rank
    }

    pub fn degree(&self) -> usize {
        self.generators.len()
    }

    /// Neighbors of a vertex, labeled by generator index.
    pub fn neighbors(&self, vertex: u64) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.generators
            .iter()
            .enumerate()
            .map(move |(i, g)| (i, vertex ^ g))
    }

    /// Attempts a ±1 labeling with a sign flip across every edge, by BFS per
    /// component. Returns `None` exactly when some component has an odd cycle.
    pub fn signed_labeling(&self) -> Option<Vec<i8>> {
        let mut labels = vec![0i8; self.vertex_count()];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.vertex_count() as u64 {
            if labels[start as usize] != 0 {
                continue;
            }
            labels[start as usize] = 1;
            queue.push_back(start);
            while let Some(vertex) = queue.pop_front() {
                let sign = labels[vertex as usize];
                for (_, next) in self.neighbors(vertex) {
                    let slot = &mut labels[next as usize];
                    if *slot == 0 {
                        *slot = -sign;
                        queue.push_back(next);
                    } else if *slot != -sign {
                        return None;
                    }
                }
            }
        }
        Some(labels)
    }

    /// Number of connected components.
    pub fn component_count(&self) -> u64 {
        let mut seen = vec![false; self.vertex_count()];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.vertex_count() as u64 {
            if seen[start as usize] {
                continue;
            }
            count += 1;
            seen[start as usize] = true;
            stack.push(start);
            while let Some(vertex) = stack.pop() {
                for (_, next) in self.neighbors(vertex) {
                    if !seen[next as usize] {
                        seen[next as usize] = true;
                        stack.push(next);
                    }
                }
            }
        }
        count
    }
}

/// The top boundary matrix of the gluing: columns indexed by the cells
/// (one per ξ in {±1}^n), rows indexed by classes [facet σ, {ξ, ξ⊕g_σ}],
/// each row carrying a 1 in the two cells it separates.
#[derive(Clone, Debug)]
pub struct BoundaryMatrix {
    columns: usize,
    rows: Vec<Vec<i64>>,
}

impl BoundaryMatrix {
    pub fn new(spec: &SmallCoverSpec) -> Self {
        let columns = 1usize << spec.ambient_rank();
        let mut rows = Vec::new();
        for g in spec.generators() {
            let mask = g.as_mask();
            for cell in 0..columns as u64 {
                let glued = cell ^ mask;
                if cell < glued {
                    let mut row = vec![0i64; columns];
                    row[cell as usize] = 1;
                    row[glued as usize] = 1;
                    rows.push(row);
                }
            }
        }
        Self { columns, rows }
    }

    pub fn column_count(&self) -> usize {
        self.columns
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        rank_over_q(&self.rows, self.columns)
    }

    /// Dimension of the kernel: column count minus exact rank.
    pub fn kernel_rank(&self) -> u64 {
        (self.columns - self.rank()) as u64
    }
}

/// Exact rank of an integer matrix over the rationals: fraction-free
/// elimination in machine words, redone in arbitrary precision if any
/// intermediate value overflows.
fn rank_over_q(rows: &[Vec<i64>], columns: usize) -> usize {
    match rank_i128(rows, columns) {
        Some(rank) => rank,
        None => rank_with_limit(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect()),
            columns,
        ),
    }
}

fn rank_i128(rows: &[Vec<i64>], columns: usize) -> Option<usize> {
    // (leading column, content-reduced row)
    let mut pivots: Vec<(usize, Vec<i128>)> = Vec::new();
    for source in rows {
        let mut row: Vec<i128> = source.iter().map(|&x| x as i128).collect();
        for (lead, pivot) in &pivots {
            if row[*lead] != 0 {
                let a = pivot[*lead];
                let b = row[*lead];
                for (x, p) in row.iter_mut().zip(pivot) {
                    *x = x.checked_mul(a)?.checked_sub(p.checked_mul(b)?)?;
                }
            }
        }
        if let Some(lead) = row.iter().position(|&x| x != 0) {
            let content = row.iter().fold(0i128, |acc, &x| num_integer::gcd(acc, x));
            for x in row.iter_mut() {
                *x /= content;
            }
            pivots.push((lead, row));
            if pivots.len() == columns {
                return Some(columns);
            }
        }
    }
    Some(pivots.len())
}

fn check_cap(n: usize, cap: usize) -> Result<(), OracleError> {
    if n > cap {
        Err(OracleError::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

/// Graph-path orientability: true exactly when the gluing graph carries a
/// consistent alternating ±1 labeling.
pub fn oracle_orientable(spec: &SmallCoverSpec, caps: &OracleCaps) -> Result<bool, OracleError> {
    check_cap(spec.ambient_rank(), caps.graph)?;
    Ok(SignedCayleyGraph::new(spec).signed_labeling().is_some())
}

/// Graph-path component count.
pub fn oracle_components(spec: &SmallCoverSpec, caps: &OracleCaps) -> Result<u64, OracleError> {
    check_cap(spec.ambient_rank(), caps.graph)?;
    Ok(SignedCayleyGraph::new(spec).component_count())
}

/// Boundary-path verdict: the exact kernel rank of the top boundary matrix,
/// which equals the component count when orientable and zero otherwise.
pub fn boundary_kernel_rank(spec: &SmallCoverSpec, caps: &OracleCaps) -> Result<u64, OracleError> {
    check_cap(spec.ambient_rank(), caps.boundary)?;
    Ok(BoundaryMatrix::new(spec).kernel_rank())
}

/// Graph-path oracle for the spherical toric variety of a polytope, running
/// in rank n+1 on the facet vectors (b mod 2, b·F mod 2).
pub fn oracle_spherical(
    polytope: &crate::lattice::LatticePolytope,
    caps: &OracleCaps,
) -> Result<(bool, u64), OracleError> {
    let spec = SmallCoverSpec::from_polytope_facets(polytope);
    check_cap(spec.ambient_rank(), caps.graph)?;
    let graph = SignedCayleyGraph::new(&spec);
    Ok((graph.signed_labeling().is_some(), graph.component_count()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::Gf2Vector;
    use crate::lattice::{LatticePolytope, LatticeVector};
    use crate::orientability::{components, small_cover_orientable};

    fn spec(n: usize, generators: &[&[u8]]) -> SmallCoverSpec {
        SmallCoverSpec::new(
            n,
            generators
                .iter()
                .map(|g| Gf2Vector::from_bits(g.iter().map(|&b| b != 0)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn graph_oracle_examples() {
        let caps = OracleCaps::default();
        assert!(oracle_orientable(&spec(2, &[&[1, 1]]), &caps).unwrap());
        assert!(!oracle_orientable(&spec(2, &[&[1, 0], &[0, 1], &[1, 1]]), &caps).unwrap());
        assert!(oracle_orientable(&spec(1, &[]), &caps).unwrap());
    }

    #[test]
    fn component_oracle_examples() {
        let caps = OracleCaps::default();
        assert_eq!(oracle_components(&spec(2, &[&[1, 1]]), &caps).unwrap(), 2);
        assert_eq!(oracle_components(&spec(3, &[]), &caps).unwrap(), 8);
        assert_eq!(
            oracle_components(&spec(2, &[&[1, 0], &[0, 1]]), &caps).unwrap(),
            1
        );
    }

    #[test]
    fn boundary_kernel_examples() {
        let caps = OracleCaps::default();
        assert_eq!(
            boundary_kernel_rank(&spec(2, &[&[1, 1]]), &caps).unwrap(),
            2
        );
        assert_eq!(
            boundary_kernel_rank(&spec(2, &[&[1, 0], &[0, 1], &[1, 1]]), &caps).unwrap(),
            0
        );
        assert_eq!(boundary_kernel_rank(&spec(1, &[&[1]]), &caps).unwrap(), 1);
    }

    #[test]
    fn boundary_matrix_shape() {
        let m = BoundaryMatrix::new(&spec(2, &[&[1, 1], &[1, 1]]));
        // Duplicate generators keep their own rows.
        assert_eq!(m.row_count(), 4);
        assert_eq!(m.column_count(), 4);
        for row in &m.rows {
            assert_eq!(row.iter().sum::<i64>(), 2);
        }
    }

    #[test]
    fn caps_are_enforced() {
        let caps = OracleCaps::uniform(3);
        let too_big = spec(4, &[&[1, 1, 1, 1]]);
        assert_eq!(
            oracle_orientable(&too_big, &caps),
            Err(OracleError::CapExceeded { n: 4, cap: 3 })
        );
        assert_eq!(
            boundary_kernel_rank(&too_big, &caps),
            Err(OracleError::CapExceeded { n: 4, cap: 3 })
        );
    }

    #[test]
    fn spherical_oracle_on_cross_polytope() {
        let mut vertices = Vec::new();
        for i in 0..2 {
            vertices.push(LatticeVector::unit(2, i));
            let mut minus = vec![0i64; 2];
            minus[i] = -1;
            vertices.push(LatticeVector::new(minus));
        }
        let cross = LatticePolytope::from_vertices(vertices).unwrap();
        let (orientable, count) = oracle_spherical(&cross, &OracleCaps::default()).unwrap();
        assert!(orientable);
        assert_eq!(count, 4);
    }

    #[test]
    fn spherical_oracle_on_order_polytopes() {
        let two_chain =
            crate::poset::FinitePoset::from_covers(vec!["a", "b"], vec![(0, 1)]).unwrap();
        let (orientable, count) =
            oracle_spherical(&two_chain.order_polytope().unwrap(), &OracleCaps::default()).unwrap();
        assert!(orientable);
        assert_eq!(count, 1);

        let non_ranked =
            crate::poset::FinitePoset::from_covers(vec!["x", "z", "w"], vec![(0, 1)]).unwrap();
        let (orientable, _) = oracle_spherical(
            &non_ranked.order_polytope().unwrap(),
            &OracleCaps::default(),
        )
        .unwrap();
        assert!(!orientable);
    }

    #[test]
    fn exhaustive_agreement_up_to_rank_three() {
        let caps = OracleCaps::default();
        for n in 1..=3usize {
            let nonzero: Vec<Gf2Vector> = (1u32..1 << n)
                .map(|mask| Gf2Vector::from_bits((0..n).map(|i| mask >> i & 1 == 1)))
                .collect();
            for subset in 0u32..1 << nonzero.len() {
                let generators: Vec<Gf2Vector> = nonzero
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| subset >> i & 1 == 1)
                    .map(|(_, g)| g.clone())
                    .collect();
                let spec = SmallCoverSpec::new(n, generators).unwrap();
                let verdict = small_cover_orientable(&spec);
                let comps = components(&spec);
                assert_eq!(
                    verdict.orientable,
                    oracle_orientable(&spec, &caps).unwrap(),
                    "graph oracle disagrees at n={n}, subset={subset:b}"
                );
                assert_eq!(comps.count, oracle_components(&spec, &caps).unwrap());
                let kernel = boundary_kernel_rank(&spec, &caps).unwrap();
                if verdict.orientable {
                    assert_eq!(kernel, comps.count);
                } else {
                    assert_eq!(kernel, 0);
                }
            }
        }
    }
}
