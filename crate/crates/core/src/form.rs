//! Diagonal weights of the invariant Hermitian form on the coloring
//! basis, their signs under a chosen embedding, signatures up to overall
//! sign, and indefiniteness searches across embeddings.
//!
//! The weight of a basis coloring is the product of its vertex weights
//! divided by the product of its internal edge weights. The global scalar
//! eta^{g+1} is omitted: it is constant across the basis, so signatures
//! are only defined up to swapping the two counts, and `SignaturePair` is
//! an unordered pair accordingly. Leg edges contribute no factor by
//! default for the same reason (constant across the basis for a fixed
//! boundary coloring); an option includes them for comparison against
//! other normalizations.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::blocks::{enumerate_colorings, Coloring};
use crate::cyclo::{
    quantum_factorial, quantum_integer, sign_under_embedding, CycloNum, RootSelector, Sign,
};
use crate::error::Error;
use crate::graph::TrivalentGraph;
use crate::level::{Color, LevelSpec};
use crate::Result;

/// (-1)^a [a+1], the weight of an edge colored a.
pub fn edge_weight(level: &LevelSpec, a: Color) -> Result<CycloNum> {
    level.check_color(a)?;
    let value = quantum_integer(level, a + 1)?;
    Ok(if a % 2 == 0 { value } else { -&value })
}

/// The weight of a trivalent vertex with incident colors (a, b, c):
/// (-1)^{i+j+k+1} [i+j+k+1]! [i]! [j]! [k]! / ([a]! [b]! [c]!), where
/// i, j, k are the half-sums (a+b-c)/2, (b+c-a)/2, (c+a-b)/2.
pub fn vertex_weight(level: &LevelSpec, a: Color, b: Color, c: Color) -> Result<CycloNum> {
    if !level.admissible_triple(a, b, c)? {
        return Err(Error::InadmissibleTriple(a, b, c));
    }
    let i = (a + b - c) / 2;
    let j = (b + c - a) / 2;
    let k = (c + a - b) / 2;
    let mut num = quantum_factorial(level, i + j + k + 1)?;
    for half in [i, j, k] {
        num = &num * &quantum_factorial(level, half)?;
    }
    let mut den = CycloNum::one(level.p());
    for color in [a, b, c] {
        den = &den * &quantum_factorial(level, color)?;
    }
    let value = &num * &den.inv()?;
    Ok(if (i + j + k + 1) % 2 == 0 { value } else { -&value })
}

/// Exact diagonal weights, one per admissible coloring, in enumeration
/// order.
#[derive(Debug, Clone)]
pub struct WeightVector {
    pub colorings: Vec<Coloring>,
    pub weights: Vec<CycloNum>,
}

/// Unordered pair of sign counts {n+, n-}; the overall sign is not
/// determined once the global scalar is dropped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignaturePair {
    counts: (usize, usize),
}

impl SignaturePair {
    pub fn new(a: usize, b: usize) -> Self {
        SignaturePair { counts: (a.max(b), a.min(b)) }
    }

    /// The two counts, larger first.
    pub fn parts(&self) -> (usize, usize) {
        self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.0 + self.counts.1
    }

    pub fn is_definite(&self) -> bool {
        self.counts.1 == 0
    }
}

pub fn diagonal_weights(
    level: &LevelSpec,
    graph: &TrivalentGraph,
    boundary: &[Color],
) -> Result<WeightVector> {
    diagonal_weights_with_options(level, graph, boundary, false)
}

/// As `diagonal_weights`; `include_leg_edges` also divides by the leg edge
/// weights, rescaling every entry by the same real factor.
pub fn diagonal_weights_with_options(
    level: &LevelSpec,
    graph: &TrivalentGraph,
    boundary: &[Color],
    include_leg_edges: bool,
) -> Result<WeightVector> {
    let colorings = enumerate_colorings(level, graph, boundary)?;
    // Incident slots per vertex, mirroring the enumeration convention.
    let mut incident: Vec<Vec<(bool, usize)>> = alloc::vec![Vec::new(); graph.vertex_count()];
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        incident[u].push((true, e));
        incident[v].push((true, e));
    }
    for (l, &v) in graph.legs().iter().enumerate() {
        incident[v].push((false, l));
    }
    let mut vertex_cache: BTreeMap<(Color, Color, Color), CycloNum> = BTreeMap::new();
    let mut edge_cache: BTreeMap<Color, CycloNum> = BTreeMap::new();
    let mut weights = Vec::with_capacity(colorings.len());
    for coloring in &colorings {
        let color_of = |&(is_edge, idx): &(bool, usize)| -> Color {
            if is_edge {
                coloring.internal[idx]
            } else {
                boundary[idx]
            }
        };
        let mut weight = CycloNum::one(level.p());
        for slots in &incident {
            let mut tri: Vec<Color> = slots.iter().map(color_of).collect();
            tri.sort_unstable();
            let key = (tri[0], tri[1], tri[2]);
            if !vertex_cache.contains_key(&key) {
                let w = vertex_weight(level, key.0, key.1, key.2)?;
                vertex_cache.insert(key, w);
            }
            weight = &weight * &vertex_cache[&key];
        }
        for &a in &coloring.internal {
            if !edge_cache.contains_key(&a) {
                edge_cache.insert(a, edge_weight(level, a)?.inv()?);
            }
            weight = &weight * &edge_cache[&a];
        }
        if include_leg_edges {
            for &a in boundary {
                if !edge_cache.contains_key(&a) {
                    edge_cache.insert(a, edge_weight(level, a)?.inv()?);
                }
                weight = &weight * &edge_cache[&a];
            }
        }
        weights.push(weight);
    }
    Ok(WeightVector { colorings, weights })
}

/// Counts of positive and negative weights under the embedding, as an
/// unordered pair. Every weight is nonzero, so the counts sum to the
/// dimension.
pub fn signature_up_to_sign(
    level: &LevelSpec,
    root: &RootSelector,
    graph: &TrivalentGraph,
    boundary: &[Color],
) -> Result<SignaturePair> {
    let wv = diagonal_weights(level, graph, boundary)?;
    let mut plus = 0usize;
    let mut minus = 0usize;
    for w in &wv.weights {
        match sign_under_embedding(w, root)? {
            Sign::Positive => plus += 1,
            Sign::Negative => minus += 1,
            Sign::Zero => unreachable!("diagonal weights are nonzero"),
        }
    }
    Ok(SignaturePair::new(plus, minus))
}

/// Searches the admissible embeddings for one where the form is
/// indefinite; returns the witness ell, or None when every embedding is
/// definite. Errors on spaces of dimension < 2, where the question is
/// vacuous.
pub fn is_indefinite_some_embedding(
    level: &LevelSpec,
    graph: &TrivalentGraph,
    boundary: &[Color],
) -> Result<Option<u32>> {
    let wv = diagonal_weights(level, graph, boundary)?;
    if wv.weights.len() < 2 {
        return Err(Error::TriviallyDefinite);
    }
    for root in RootSelector::all(level.p()) {
        let mut plus = 0usize;
        let mut minus = 0usize;
        for w in &wv.weights {
            match sign_under_embedding(w, &root)? {
                Sign::Positive => plus += 1,
                Sign::Negative => minus += 1,
                Sign::Zero => unreachable!("diagonal weights are nonzero"),
            }
            if plus > 0 && minus > 0 {
                return Ok(Some(root.ell()));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn level(p: u32) -> LevelSpec {
        LevelSpec::new(p).unwrap()
    }

    #[test]
    fn edge_weight_examples() {
        let l = level(5);
        assert_eq!(edge_weight(&l, 0).unwrap(), CycloNum::one(5));
        assert_eq!(edge_weight(&l, 2).unwrap(), quantum_integer(&l, 3).unwrap());
        let l10 = level(10);
        assert_eq!(
            edge_weight(&l10, 1).unwrap(),
            -&quantum_integer(&l10, 2).unwrap()
        );
    }

    #[test]
    fn vertex_weight_examples() {
        let l = level(5);
        assert_eq!(
            vertex_weight(&l, 0, 0, 0).unwrap(),
            -&CycloNum::one(5)
        );
        // (2,2,2): [4]!/[2]!^3 = [4][3]/[2]^2.
        let got = vertex_weight(&l, 2, 2, 2).unwrap();
        let expected = &(&quantum_integer(&l, 4).unwrap() * &quantum_integer(&l, 3).unwrap())
            * &(&quantum_integer(&l, 2).unwrap() * &quantum_integer(&l, 2).unwrap()).inv().unwrap();
        assert_eq!(got, expected);
        // (1,1,0) at an even level: [2].
        let l8 = level(8);
        assert_eq!(
            vertex_weight(&l8, 1, 1, 0).unwrap(),
            quantum_integer(&l8, 2).unwrap()
        );
    }

    #[test]
    fn vertex_weight_rejects_inadmissible() {
        let l = level(5);
        assert_eq!(
            vertex_weight(&l, 0, 0, 2),
            Err(Error::InadmissibleTriple(0, 0, 2))
        );
    }

    #[test]
    fn single_coloring_weight_on_one_handle() {
        let l = level(5);
        let g = TrivalentGraph::cycle_with_legs(1).unwrap();
        let wv = diagonal_weights(&l, &g, &[2]).unwrap();
        assert_eq!(wv.weights.len(), 1);
        let expected = &vertex_weight(&l, 2, 2, 2).unwrap()
            * &edge_weight(&l, 2).unwrap().inv().unwrap();
        assert_eq!(wv.weights[0], expected);
    }

    #[test]
    fn weights_are_real_and_nonzero() {
        for (p, graph, boundary) in [
            (5u32, TrivalentGraph::theta(), vec![]),
            (8, TrivalentGraph::dumbbell(), vec![]),
            (10, TrivalentGraph::cycle_with_legs(2).unwrap(), vec![1, 1]),
        ] {
            let l = level(p);
            let wv = diagonal_weights(&l, &graph, &boundary).unwrap();
            for w in &wv.weights {
                assert!(w.is_real());
                assert!(!w.is_zero());
            }
        }
    }

    #[test]
    fn lemma_twelve_chain_weights_from_the_hermitian_formula() {
        // On the genus-1 (1,1) graph the coloring (k, k+1) has weight
        // -[k+2]/[k+1]: checked division-free as w * [k+1] = -[k+2].
        let l = level(10);
        let g = TrivalentGraph::cycle_with_legs(2).unwrap();
        let wv = diagonal_weights(&l, &g, &[1, 1]).unwrap();
        for (coloring, w) in wv.colorings.iter().zip(&wv.weights) {
            let (i, j) = (coloring.internal[0], coloring.internal[1]);
            let k = i.min(j);
            assert_eq!(i.abs_diff(j), 1);
            let lhs = w * &quantum_integer(&l, k + 1).unwrap();
            let rhs = -&quantum_integer(&l, k + 2).unwrap();
            assert_eq!(lhs, rhs, "coloring ({i},{j})");
        }
    }

    #[test]
    fn unitary_root_is_positive_definite_here() {
        for (p, graph, boundary) in [
            (5u32, TrivalentGraph::theta(), vec![]),
            (7, TrivalentGraph::dumbbell(), vec![]),
            (10, TrivalentGraph::cycle_with_legs(2).unwrap(), vec![1, 1]),
            (12, TrivalentGraph::theta(), vec![]),
        ] {
            let l = level(p);
            let root = RootSelector::unitary(&l);
            let sig = signature_up_to_sign(&l, &root, &graph, &boundary).unwrap();
            assert!(sig.is_definite(), "p={p}: {:?}", sig);
        }
    }

    #[test]
    fn indefinite_witness_at_even_level_ten() {
        let l = level(10);
        let g = TrivalentGraph::cycle_with_legs(2).unwrap();
        let root = RootSelector::new(10, 3).unwrap();
        let sig = signature_up_to_sign(&l, &root, &g, &[1, 1]).unwrap();
        assert!(!sig.is_definite());
        assert_eq!(sig.total(), 6);
        assert!(is_indefinite_some_embedding(&l, &g, &[1, 1])
            .unwrap()
            .is_some());
    }

    #[test]
    fn indefinite_witness_at_odd_level_five() {
        let l = level(5);
        let g = TrivalentGraph::cycle_with_legs(2).unwrap();
        assert!(is_indefinite_some_embedding(&l, &g, &[2, 2])
            .unwrap()
            .is_some());
    }

    #[test]
    fn dimension_one_space_is_trivially_definite() {
        let l = level(5);
        let g = TrivalentGraph::cycle_with_legs(1).unwrap();
        let root = RootSelector::unitary(&l);
        let sig = signature_up_to_sign(&l, &root, &g, &[2]).unwrap();
        assert_eq!(sig.parts(), (1, 0));
        assert_eq!(
            is_indefinite_some_embedding(&l, &g, &[2]),
            Err(Error::TriviallyDefinite)
        );
    }

    #[test]
    fn conjugate_embedding_preserves_signs() {
        let l = level(10);
        let g = TrivalentGraph::cycle_with_legs(2).unwrap();
        for ell in [1u32, 3, 7, 9] {
            let root = RootSelector::new(10, ell).unwrap();
            let a = signature_up_to_sign(&l, &root, &g, &[1, 1]).unwrap();
            let b = signature_up_to_sign(&l, &root.conjugate(), &g, &[1, 1]).unwrap();
            assert_eq!(a, b, "ell={ell}");
        }
    }

    #[test]
    fn signature_sums_to_dimension() {
        let l = level(8);
        let g = TrivalentGraph::dumbbell();
        let root = RootSelector::unitary(&l);
        let sig = signature_up_to_sign(&l, &root, &g, &[]).unwrap();
        use num_traits::ToPrimitive;
        let dim = crate::blocks::dim_blocks(&l, &g, &[]).unwrap().to_usize().unwrap();
        assert_eq!(sig.total(), dim);
    }

    #[test]
    fn leg_edge_option_rescales_uniformly() {
        let l = level(10);
        let g = TrivalentGraph::cycle_with_legs(2).unwrap();
        let plain = diagonal_weights(&l, &g, &[1, 1]).unwrap();
        let scaled = diagonal_weights_with_options(&l, &g, &[1, 1], true).unwrap();
        // Ratio between the two conventions is the same for every entry:
        // w_plain * factor = w_scaled with factor = product of leg weights.
        let factor = &(&edge_weight(&l, 1).unwrap() * &edge_weight(&l, 1).unwrap())
            .inv()
            .unwrap();
        for (a, b) in plain.weights.iter().zip(&scaled.weights) {
            assert_eq!(&(a * factor), b);
        }
    }
}
