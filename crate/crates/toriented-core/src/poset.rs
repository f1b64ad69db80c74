//! Finite posets, maximal-chain parity analysis and order polytopes.
//!
//! The order polytope of a poset P is { y in [0,1]^P : a <= b implies
//! y_a <= y_b }. Its facets come in three families (minimal elements,
//! maximal elements, cover relations) and are emitted directly, never via
//! facet enumeration. Its integer points are the indicator vectors of the
//! up-closed subsets of P, and those are exactly its vertices.
//!
//! Chain length convention: the length of a chain is its number of
//! ELEMENTS, not its number of cover steps. A two-element chain a < b has
//! length 2 (even). This matters: the toric criterion below asks for all
//! maximal chains to have odd length in this element-count sense.

use serde::{Deserialize, Serialize};

use crate::lattice::{FacetData, GeometryError, LatticePolytope, LatticeVector};

/// Default cap on poset size for chain enumeration (chain counts can grow
/// exponentially).
pub const DEFAULT_ELEMENT_CAP: usize = 20;

/// Cap on the number of order-polytope vertices (up-closed subsets).
const VERTEX_CAP: usize = 65_536;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PosetError {
    #[error("cover relations contain a cycle")]
    CyclicCovers,
    #[error("cover ({0}, {1}) is implied by other covers (not a cover relation)")]
    RedundantCover(String, String),
    #[error("cover relates an element to itself: {0}")]
    SelfRelation(String),
    #[error("unknown element in relation: {0}")]
    UnknownElement(String),
    #[error("duplicate element label: {0}")]
    DuplicateElement(String),
    #[error("poset is empty")]
    Empty,
    #[error("poset has {got} elements, exceeding the cap {cap}")]
    TooLarge { got: usize, cap: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// A finite poset given by labeled elements and an irredundant cover
/// relation a ⋖ b.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinitePoset {
    elements: Vec<String>,
    covers: Vec<(usize, usize)>,
    /// Strict order as the transitive closure of the covers.
    less: Vec<bool>,
}

impl FinitePoset {
    /// Builds a poset from cover relations, rejecting cycles and covers that
    /// are implied by other covers.
    pub fn from_covers<S: Into<String>>(
        elements: Vec<S>,
        covers: Vec<(usize, usize)>,
    ) -> Result<Self, PosetError> {
        let poset = Self::from_relations(elements, covers.clone())?;
        if poset.covers.len() != covers.len() {
            let implied = covers
                .iter()
                .find(|pair| !poset.covers.contains(pair))
                .expect("reduction removed at least one pair");
            return Err(PosetError::RedundantCover(
                poset.elements[implied.0].clone(),
                poset.elements[implied.1].clone(),
            ));
        }
        Ok(poset)
    }

    /// Builds a poset from arbitrary strict relations (a, b) meaning a < b;
    /// relations are closed transitively and reduced to covers.
    pub fn from_relations<S: Into<String>>(
        elements: Vec<S>,
        relations: Vec<(usize, usize)>,
    ) -> Result<Self, PosetError> {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        let n = elements.len();
        for (i, label) in elements.iter().enumerate() {
            if elements[..i].contains(label) {
                return Err(PosetError::DuplicateElement(label.clone()));
            }
        }
        let mut less = vec![false; n * n];
        for &(a, b) in &relations {
            let big = a.max(b);
            if big >= n {
                return Err(PosetError::UnknownElement(format!("index {big}")));
            }
            if a == b {
                return Err(PosetError::SelfRelation(elements[a].clone()));
            }
            less[a * n + b] = true;
        }
        // Transitive closure.
        for k in 0..n {
            for a in 0..n {
                if less[a * n + k] {
                    for b in 0..n {
                        if less[k * n + b] {
                            less[a * n + b] = true;
                        }
                    }
                }
            }
        }
        for a in 0..n {
            if less[a * n + a] {
                return Err(PosetError::CyclicCovers);
            }
        }
        // Covers: a < b with nothing strictly between.
        let mut covers = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if less[a * n + b] && !(0..n).any(|c| less[a * n + c] && less[c * n + b]) {
                    covers.push((a, b));
                }
            }
        }
        Ok(Self {
            elements,
            covers,
            less,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Strict comparison a < b.
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.less[a * self.len() + b]
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&b| !(0..self.len()).any(|a| self.less(a, b)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| !(0..self.len()).any(|b| self.less(a, b)))
            .collect()
    }

    /// Enumerates all maximal chains by depth-first search along covers from
    /// the minimal elements.
    pub fn maximal_chains(&self) -> Result<ChainReport, PosetError> {
        self.maximal_chains_with_cap(DEFAULT_ELEMENT_CAP)
    }

    pub fn maximal_chains_with_cap(&self, cap: usize) -> Result<ChainReport, PosetError> {
        if self.len() > cap {
            return Err(PosetError::TooLarge {
                got: self.len(),
                cap,
            });
        }
        let mut upper: Vec<Vec<usize>> = vec![Vec::new(); self.len()];
        for &(a, b) in &self.covers {
            upper[a].push(b);
        }
        let mut chains = Vec::new();
        let mut stack: Vec<Vec<usize>> = self
            .minimal_elements()
            .into_iter()
            .rev()
            .map(|m| vec![m])
            .collect();
        while let Some(chain) = stack.pop() {
            let last = *chain.last().expect("chains are nonempty");
            if upper[last].is_empty() {
                chains.push(chain);
                continue;
            }
            for &next in upper[last].iter().rev() {
                let mut extended = chain.clone();
                extended.push(next);
                stack.push(extended);
            }
        }
        let lengths: Vec<usize> = {
            let mut l: Vec<usize> = chains.iter().map(Vec::len).collect();
            l.sort_unstable();
            l
        };
        let all_odd = lengths.iter().all(|&l| l % 2 == 1);
        let ranked_mod2 = lengths.windows(2).all(|w| w[0] % 2 == w[1] % 2);
        Ok(ChainReport {
            maximal_chains: chains,
            lengths,
            all_odd,
            ranked_mod2,
        })
    }

    /// The order polytope in H-representation, with coordinates ordered by
    /// the element list, together with its vertices (indicator vectors of
    /// up-closed subsets).
    pub fn order_polytope(&self) -> Result<LatticePolytope, PosetError> {
        if self.is_empty() {
            return Err(PosetError::Empty);
        }
        let n = self.len();
        let mut facets = Vec::new();
        for a in self.minimal_elements() {
            facets.push(FacetData {
                normal: LatticeVector::unit(n, a),
                offset: 0,
            });
        }
        for b in self.maximal_elements() {
            let mut coords = vec![0i64; n];
            coords[b] = -1;
            facets.push(FacetData {
                normal: LatticeVector::new(coords),
                offset: -1,
            });
        }
        for &(a, b) in &self.covers {
            let mut coords = vec![0i64; n];
            coords[b] = 1;
            coords[a] = -1;
            facets.push(FacetData {
                normal: LatticeVector::new(coords),
                offset: 0,
            });
        }
        let mut vertices: Vec<LatticeVector> = self
            .up_sets()?
            .into_iter()
            .map(|mask| LatticeVector::new((0..n).map(|i| i64::from(mask >> i & 1 == 1)).collect()))
            .collect();
        vertices.sort();
        Ok(LatticePolytope::from_parts(vertices, facets)?)
    }

    /// Chain-length criterion for the real toric variety of the order
    /// polytope: orientable exactly when every maximal chain has an odd
    /// number of elements.
    pub fn toric_orientable_by_chains(&self) -> Result<bool, PosetError> {
        Ok(self.maximal_chains()?.all_odd)
    }

    /// Parity criterion for the spherical toric variety of the order
    /// polytope: orientable exactly when all maximal chains have the same
    /// length parity (the poset is ranked modulo 2).
    pub fn spherical_orientable_by_ranking(&self) -> Result<bool, PosetError> {
        Ok(self.maximal_chains()?.ranked_mod2)
    }

    /// All up-closed subsets as bit masks over the element indices, by DFS
    /// over the elements in reverse topological order.
    fn up_sets(&self) -> Result<Vec<u32>, PosetError> {
        assert!(
            self.len() <= 32,
            "polytope dimension cap keeps posets small here"
        );
        let order = self.topological_order();
        let mut upper: Vec<Vec<usize>> = vec![Vec::new(); self.len()];
        for &(a, b) in &self.covers {
            upper[a].push(b);
        }
        let mut masks: Vec<u32> = Vec::new();
        // Decide membership maximals-first: an element may join only when all
        // of its upper covers are already in.
        let mut stack: Vec<(usize, u32)> = vec![(0, 0)];
        while let Some((depth, mask)) = stack.pop() {
            if depth == order.len() {
                masks.push(mask);
                if masks.len() > VERTEX_CAP {
                    return Err(PosetError::Geometry(GeometryError::ResourceExceeded(
                        format!("order polytope has more than {VERTEX_CAP} vertices"),
                    )));
                }
                continue;
            }
            let element = order[order.len() - 1 - depth];
            stack.push((depth + 1, mask));
            if upper[element].iter().all(|&b| mask >> b & 1 == 1) {
                stack.push((depth + 1, mask | 1 << element));
            }
        }
        Ok(masks)
    }

    fn topological_order(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        // Sorting by the number of elements below is a linear extension.
        let below: Vec<usize> = (0..n)
            .map(|b| (0..n).filter(|&a| self.less(a, b)).count())
            .collect();
        order.sort_by_key(|&i| (below[i], i));
        order
    }
}

/// All maximal chains of a poset with their length statistics.
///
/// Lengths count ELEMENTS: a maximal chain a ⋖ b has length 2.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ChainReport {
    /// Each chain as a sequence of element indices, minimal element first.
    pub maximal_chains: Vec<Vec<usize>>,
    /// Sorted multiset of chain lengths.
    pub lengths: Vec<usize>,
    /// True when every maximal chain has an odd number of elements.
    pub all_odd: bool,
    /// True when all maximal chains have the same length parity.
    pub ranked_mod2: bool,
}
