//! Deterministic input builders shared by the benchmarks.

use toriented_core::orientability::SmallCoverSpec;
use toriented_core::{FinitePoset, Gf2Matrix, Gf2Vector, LatticePolytope, LatticeVector};

/// Small deterministic PRNG so benchmark inputs are stable across runs.
pub struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

pub fn random_matrix(seed: u64, rows: usize, dim: usize) -> Gf2Matrix {
    let mut rng = SplitMix64::new(seed);
    let rows = (0..rows)
        .map(|_| Gf2Vector::from_bits((0..dim).map(|_| rng.below(2) == 1)))
        .collect();
    Gf2Matrix::new(dim, rows).expect("rows share the dimension")
}

pub fn random_spec(seed: u64, rank: usize, generators: usize) -> SmallCoverSpec {
    let mut rng = SplitMix64::new(seed);
    let generators = (0..generators)
        .map(|_| {
            let mask = 1 + rng.below((1 << rank) - 1);
            Gf2Vector::from_bits((0..rank).map(|i| mask >> i & 1 == 1))
        })
        .collect();
    SmallCoverSpec::new(rank, generators).expect("generators are nonzero")
}

pub fn cross_polytope_vertices(n: usize) -> Vec<LatticeVector> {
    let mut vertices = Vec::with_capacity(2 * n);
    for i in 0..n {
        vertices.push(LatticeVector::unit(n, i));
        let mut minus = vec![0i64; n];
        minus[i] = -1;
        vertices.push(LatticeVector::new(minus));
    }
    vertices
}

pub fn cross_polytope(n: usize) -> LatticePolytope {
    LatticePolytope::from_vertices(cross_polytope_vertices(n)).expect("full-dimensional")
}

pub fn chain_poset(n: usize) -> FinitePoset {
    let elements: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
    let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    FinitePoset::from_covers(elements, covers).expect("chains are posets")
}
