//! Acceptance suite: one test per criterion, each asserting exact agreement
//! (no tolerances) and printing a `[PASS]` line with its runtime.
//!
//! Run with `cargo test -p toriented-core --test acceptance -- --nocapture`
//! to see the per-criterion lines.

// The independent checkers below use raw index arithmetic on purpose.
#![allow(clippy::needless_range_loop)]

use std::time::Instant;

use toriented_core::gf2::{Gf2Matrix, Gf2Vector};
use toriented_core::lattice::{affine_span_check, LatticePolytope, LatticeVector};
use toriented_core::oracle::{
    boundary_kernel_rank, oracle_components, oracle_orientable, oracle_spherical, OracleCaps,
};
use toriented_core::orientability::{
    components, small_cover_orientable, spherical_orientable, toric_orientable, Certificate,
    OrientabilityVerdict, SmallCoverSpec,
};
use toriented_core::poset::FinitePoset;

/// Deterministic pseudo-random stream; the suite never depends on an
/// external RNG so rerunning it reproduces every case.
struct SplitMix64(u64);

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        Self(seed)
    }

    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

fn bits_vector(dim: usize, mask: u64) -> Gf2Vector {
    Gf2Vector::from_bits((0..dim).map(|i| mask >> i & 1 == 1))
}

fn lv(coords: &[i64]) -> LatticeVector {
    LatticeVector::new(coords.to_vec())
}

fn cross_polytope(n: usize) -> LatticePolytope {
    let mut vertices = Vec::new();
    for i in 0..n {
        vertices.push(LatticeVector::unit(n, i));
        let mut minus = vec![0i64; n];
        minus[i] = -1;
        vertices.push(LatticeVector::new(minus));
    }
    LatticePolytope::from_vertices(vertices).unwrap()
}

/// GF(2) rank computed from raw bit rows; deliberately separate from the
/// library's elimination so certificate checks do not trust it.
fn independent_rank_mod2(rows: &[Vec<u8>]) -> usize {
    let Some(cols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut rows = rows.to_vec();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in 0..rows.len() {
            if r != rank && rows[r][col] == 1 {
                for c in 0..cols {
                    rows[r][c] ^= rows[rank][c];
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Re-validates a verdict's certificate from first principles: odd parities,
/// XOR reconstruction and basis rank, using only raw bit arithmetic.
fn independent_certificate_check(verdict: &OrientabilityVerdict) -> bool {
    let dim = verdict.generators.dim();
    let generators: Vec<Vec<u8>> = verdict
        .generators
        .rows()
        .iter()
        .map(Gf2Vector::to_bits)
        .collect();
    match &verdict.certificate {
        Certificate::OddDependence(witness) => {
            if verdict.orientable || witness.indices.len() % 2 == 0 {
                return false;
            }
            let mut distinct = witness.indices.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != witness.indices.len() {
                return false;
            }
            let mut acc = vec![0u8; dim];
            for &i in &witness.indices {
                let Some(row) = generators.get(i) else {
                    return false;
                };
                for (a, b) in acc.iter_mut().zip(row) {
                    *a ^= *b;
                }
            }
            acc.iter().all(|&b| b == 0)
        }
        Certificate::OddBasis(basis) => {
            if !verdict.orientable || basis.basis.len() != dim {
                return false;
            }
            let basis_bits: Vec<Vec<u8>> = basis.basis.iter().map(Gf2Vector::to_bits).collect();
            if independent_rank_mod2(&basis_bits) != dim {
                return false;
            }
            if basis.expansions.len() != generators.len() {
                return false;
            }
            for (row, expansion) in generators.iter().zip(&basis.expansions) {
                if expansion.len() % 2 == 0 {
                    return false;
                }
                let mut acc = vec![0u8; dim];
                for &i in expansion {
                    let Some(b) = basis_bits.get(i) else {
                        return false;
                    };
                    for (a, x) in acc.iter_mut().zip(b) {
                        *a ^= *x;
                    }
                }
                if &acc != row {
                    return false;
                }
            }
            true
        }
    }
}

/// Brute force over all subsets of rows: does any odd-cardinality subset
/// XOR to zero?
fn brute_force_odd_dependence(rows: &[Vec<u8>], dim: usize) -> bool {
    assert!(rows.len() <= 20);
    (1u32..1 << rows.len()).any(|mask| {
        if mask.count_ones() % 2 == 0 {
            return false;
        }
        let mut acc = vec![0u8; dim];
        for (i, row) in rows.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for (a, b) in acc.iter_mut().zip(row) {
                    *a ^= *b;
                }
            }
        }
        acc.iter().all(|&b| b == 0)
    })
}

/// All labeled strict partial orders on `n` elements, by scanning every
/// relation on ordered pairs and keeping the antisymmetric transitive ones.
fn labeled_posets(n: usize) -> Vec<FinitePoset> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let mut posets = Vec::new();
    'mask: for mask in 0u64..1 << pairs.len() {
        let mut rel = [[false; 5]; 5];
        for (k, &(a, b)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rel[a][b] = true;
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if rel[a][b] && rel[b][a] {
                    continue 'mask;
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if rel[a][b] {
                    for c in 0..n {
                        if rel[b][c] && !rel[a][c] {
                            continue 'mask;
                        }
                    }
                }
            }
        }
        let relations: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let elements: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
        posets.push(FinitePoset::from_relations(elements, relations).unwrap());
    }
    posets
}

#[test]
fn criterion_1_exhaustive_theorem_vs_oracle_equivalence() {
    let start = Instant::now();
    let caps = OracleCaps::default();
    let mut cases = 0u64;
    for n in 1..=4usize {
        let nonzero: Vec<u64> = (1..1u64 << n).collect();
        for subset in 0u64..1 << nonzero.len() {
            let generators: Vec<Gf2Vector> = nonzero
                .iter()
                .enumerate()
                .filter(|(i, _)| subset >> i & 1 == 1)
                .map(|(_, &mask)| bits_vector(n, mask))
                .collect();
            let spec = SmallCoverSpec::new(n, generators).unwrap();
            let verdict = small_cover_orientable(&spec);
            let comps = components(&spec);
            assert_eq!(
                verdict.orientable,
                oracle_orientable(&spec, &caps).unwrap(),
                "orientability disagreement at n={n}, subset={subset:#b}"
            );
            assert_eq!(
                comps.count,
                oracle_components(&spec, &caps).unwrap(),
                "component disagreement at n={n}, subset={subset:#b}"
            );
            cases += 1;
        }
    }
    assert_eq!(cases, 2 + 8 + 128 + 32768);
    println!(
        "[PASS] criterion 1: theorem path agrees with the graph oracle on all {cases} generator sets for n=1..4 ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_2_boundary_kernel_matches_component_count() {
    let start = Instant::now();
    let caps = OracleCaps::default();
    let mut rng = SplitMix64::new(0x5EED_0002);
    for case in 0..200 {
        let n = 1 + rng.below(5) as usize;
        let generator_count = rng.below(7) as usize;
        let generators: Vec<Gf2Vector> = (0..generator_count)
            .map(|_| bits_vector(n, 1 + rng.below((1 << n) - 1)))
            .collect();
        let spec = SmallCoverSpec::new(n, generators).unwrap();
        let kernel = boundary_kernel_rank(&spec, &caps).unwrap();
        let verdict = small_cover_orientable(&spec);
        if verdict.orientable {
            assert_eq!(
                kernel,
                components(&spec).count,
                "kernel rank mismatch in case {case}"
            );
        } else {
            assert_eq!(
                kernel, 0,
                "non-orientable spec has nontrivial kernel in case {case}"
            );
        }
    }
    println!(
        "[PASS] criterion 2: boundary kernel rank equals the component count (orientable) or 0 on 200 random specs ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_3_odd_dependence_triple_equivalence() {
    let start = Instant::now();
    fn check(dim: usize, rows: Vec<Vec<u8>>) {
        let matrix = Gf2Matrix::new(
            dim,
            rows.iter()
                .map(|r| Gf2Vector::from_bits(r.iter().map(|&b| b != 0)))
                .collect(),
        )
        .unwrap();
        let brute = brute_force_odd_dependence(&rows, dim);
        let witness = matrix.odd_dependence();
        let basis = matrix.find_odd_basis();
        assert_eq!(witness.is_some(), brute);
        assert_eq!(basis.is_none(), brute);
        if let Some(w) = witness {
            assert!(w.verify(&matrix));
        }
    }
    let mut enumerated = 0u64;

    // Full enumeration: every ordered row list with up to 5 rows over
    // GF(2)^n for n <= 3.
    for dim in 1..=3usize {
        let alphabet = 1u64 << dim;
        for rows in 0..=5usize {
            let total = alphabet.pow(rows as u32);
            for code in 0..total {
                let mut c = code;
                let mut list = Vec::with_capacity(rows);
                for _ in 0..rows {
                    let mask = c % alphabet;
                    c /= alphabet;
                    list.push((0..dim).map(|i| (mask >> i & 1) as u8).collect());
                }
                check(dim, list);
                enumerated += 1;
            }
        }
    }

    // 1000 random matrices with n <= 6 and up to 12 rows.
    let mut rng = SplitMix64::new(0x5EED_0003);
    for _ in 0..1000 {
        let dim = 1 + rng.below(6) as usize;
        let rows = rng.below(13) as usize;
        let list: Vec<Vec<u8>> = (0..rows)
            .map(|_| {
                let mask = rng.below(1 << dim);
                (0..dim).map(|i| (mask >> i & 1) as u8).collect()
            })
            .collect();
        check(dim, list);
    }
    println!(
        "[PASS] criterion 3: exhaustive subset search, the dependence query and the basis query agree on {enumerated} enumerated + 1000 random matrices ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_4_cross_polytopes() {
    let start = Instant::now();
    let caps = OracleCaps::default();
    for n in 1..=5usize {
        let polytope = cross_polytope(n);
        assert_eq!(polytope.facets().len(), 1 << n);
        let rays = polytope.normal_fan_rays();
        let (verdict, comps) = toric_orientable(n, &rays).unwrap();
        assert!(
            verdict.orientable,
            "cross polytope n={n} must be orientable"
        );
        assert_eq!(
            comps.count,
            1 << (n - 1),
            "cross polytope n={n} component count"
        );

        let spec = SmallCoverSpec::from_rays(n, &rays).unwrap();
        assert!(oracle_orientable(&spec, &caps).unwrap());
        assert_eq!(oracle_components(&spec, &caps).unwrap(), 1 << (n - 1));
        assert_eq!(boundary_kernel_rank(&spec, &caps).unwrap(), 1 << (n - 1));

        let (spherical, _) = spherical_orientable(&polytope);
        assert!(
            spherical.orientable,
            "spherical cross polytope n={n} must be orientable"
        );
        let (oracle_ok, _) = oracle_spherical(&polytope, &caps).unwrap();
        assert!(oracle_ok);
    }
    println!(
        "[PASS] criterion 4: cross polytopes n=1..5 orientable with 2^(n-1) components, spherical covers orientable, both paths agree ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_5_order_polytope_sweep() {
    let start = Instant::now();
    let expected_counts = [1usize, 3, 19, 219, 4231];
    let mut total = 0usize;
    for n in 1..=5usize {
        let posets = labeled_posets(n);
        assert_eq!(
            posets.len(),
            expected_counts[n - 1],
            "labeled poset count on {n} elements"
        );
        for poset in &posets {
            let polytope = poset.order_polytope().unwrap();
            let rays = polytope.normal_fan_rays();
            let (toric, _) = toric_orientable(polytope.dim(), &rays).unwrap();
            assert_eq!(
                poset.toric_orientable_by_chains().unwrap(),
                toric.orientable,
                "chain criterion disagrees with the toric machinery on {:?}",
                poset.covers()
            );
            let (spherical, _) = spherical_orientable(&polytope);
            assert_eq!(
                poset.spherical_orientable_by_ranking().unwrap(),
                spherical.orientable,
                "parity criterion disagrees with the spherical machinery on {:?}",
                poset.covers()
            );
            total += 1;
        }
    }
    println!(
        "[PASS] criterion 5: chain criteria match the general machinery on all {total} labeled posets with <= 5 elements ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_6_named_sanity_anchors() {
    let start = Instant::now();
    // Projective plane fan: non-orientable.
    let (p2, _) = toric_orientable(2, &[lv(&[1, 0]), lv(&[0, 1]), lv(&[-1, -1])]).unwrap();
    assert!(!p2.orientable);

    // Projective line fan: orientable, one component.
    let (p1, comps) = toric_orientable(1, &[lv(&[1]), lv(&[-1])]).unwrap();
    assert!(p1.orientable);
    assert_eq!(comps.count, 1);

    // Product of two projective lines: orientable, one component.
    let rays = [lv(&[1, 0]), lv(&[-1, 0]), lv(&[0, 1]), lv(&[0, -1])];
    let (p1xp1, comps) = toric_orientable(2, &rays).unwrap();
    assert!(p1xp1.orientable);
    assert_eq!(comps.count, 1);

    // Order polytope of the 2-chain: real variety non-orientable, spherical
    // cover orientable.
    let two_chain = FinitePoset::from_covers(vec!["a", "b"], vec![(0, 1)]).unwrap();
    let triangle = two_chain.order_polytope().unwrap();
    let (toric, _) = toric_orientable(2, &triangle.normal_fan_rays()).unwrap();
    assert!(!toric.orientable);
    let (spherical, _) = spherical_orientable(&triangle);
    assert!(spherical.orientable);

    println!(
        "[PASS] criterion 6: named anchors behave as expected (projective plane, line, product, 2-chain) ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_7_affine_span_checks() {
    let start = Instant::now();
    // Unit cube: its lattice points are its 8 vertices and they span.
    let cube: Vec<LatticeVector> = (0..8u8)
        .map(|m| lv(&[(m & 1) as i64, (m >> 1 & 1) as i64, (m >> 2 & 1) as i64]))
        .collect();
    let polytope = LatticePolytope::from_vertices(cube.clone()).unwrap();
    let points = polytope.lattice_points().unwrap();
    let mut expected = cube.clone();
    expected.sort();
    assert_eq!(points, expected);
    let report = affine_span_check(&points).unwrap();
    assert!(report.spans);
    assert_eq!(report.index, Some(1));

    // Reeve-type simplex: only the 4 vertices are lattice points; the
    // difference lattice has index 2, and the renormalizer repairs it.
    let reeve = LatticePolytope::from_vertices(vec![
        lv(&[0, 0, 0]),
        lv(&[1, 0, 0]),
        lv(&[0, 1, 0]),
        lv(&[1, 1, 2]),
    ])
    .unwrap();
    let points = reeve.lattice_points().unwrap();
    let mut expected = vec![
        lv(&[0, 0, 0]),
        lv(&[1, 0, 0]),
        lv(&[0, 1, 0]),
        lv(&[1, 1, 2]),
    ];
    expected.sort();
    assert_eq!(points, expected);
    let report = affine_span_check(&points).unwrap();
    assert!(!report.spans);
    assert_eq!(report.index, Some(2));
    let renormalizer = report
        .renormalizer
        .expect("non-spanning report offers a renormalizer");
    let renormalized: Vec<LatticeVector> = points
        .iter()
        .map(|p| renormalizer.apply(p).unwrap())
        .collect();
    let repaired = affine_span_check(&renormalized).unwrap();
    assert!(repaired.spans);
    assert_eq!(repaired.index, Some(1));

    println!(
        "[PASS] criterion 7: unit cube spans (index 1), Reeve-type simplex has index 2 with a valid renormalizer ({:?})",
        start.elapsed()
    );
}

#[test]
fn criterion_8_certificate_soundness_fuzzing() {
    let start = Instant::now();
    let mut rng = SplitMix64::new(0x5EED_0008);
    let mut checked = 0usize;

    // Random small-cover specs.
    for _ in 0..600 {
        let n = 1 + rng.below(6) as usize;
        let generator_count = rng.below(9) as usize;
        let generators: Vec<Gf2Vector> = (0..generator_count)
            .map(|_| bits_vector(n, 1 + rng.below((1 << n) - 1)))
            .collect();
        let spec = SmallCoverSpec::new(n, generators).unwrap();
        let verdict = small_cover_orientable(&spec);
        assert!(
            independent_certificate_check(&verdict),
            "spec certificate failed"
        );
        checked += 1;
    }

    // Random fans.
    for _ in 0..300 {
        let n = 1 + rng.below(4) as usize;
        let ray_count = 1 + rng.below(6) as usize;
        let rays: Vec<LatticeVector> = (0..ray_count)
            .map(|_| loop {
                let coords: Vec<i64> = (0..n).map(|_| rng.below(9) as i64 - 4).collect();
                if coords.iter().any(|&c| c != 0) {
                    break LatticeVector::new(coords);
                }
            })
            .collect();
        let (verdict, _) = toric_orientable(n, &rays).unwrap();
        assert!(
            independent_certificate_check(&verdict),
            "fan certificate failed"
        );
        checked += 1;
    }

    // Random posets through the spherical path.
    for _ in 0..100 {
        let n = 1 + rng.below(5) as usize;
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        let relations: Vec<(usize, usize)> = pairs
            .iter()
            .filter(|_| rng.below(2) == 1)
            .copied()
            .collect();
        let elements: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
        let poset = FinitePoset::from_relations(elements, relations).unwrap();
        let polytope = poset.order_polytope().unwrap();
        let (verdict, _) = spherical_orientable(&polytope);
        assert!(
            independent_certificate_check(&verdict),
            "spherical certificate failed"
        );
        checked += 1;
    }

    assert_eq!(checked, 1000);
    println!(
        "[PASS] criterion 8: all 1000 fuzzed certificates re-validate under independent checks ({:?})",
        start.elapsed()
    );
}
