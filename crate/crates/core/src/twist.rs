//! Dehn twists along decomposition curves: eigenvalue exponents, effective
//! colors, exact projective orders, the order-lemma tables as predictions,
//! and level-vector factorization checks.
//!
//! The twist along the curve dual to an internal edge acts diagonally on
//! the coloring basis: the color-j summand is scaled by (-1)^j A^{j(j+2)},
//! recorded here as the exponent j(j+2) + p*j mod 2p using A^p = -1.
//! Orders are therefore pure integer arithmetic on exponent ratios of the
//! effective colors; no cyclotomic evaluation is involved. The computed
//! order is ground truth, and `predicted_order` encodes the published
//! tables for comparison. Table rows whose printed form is typographically
//! ambiguous are encoded under the reading consistent with the derivation
//! and flagged `typography_resolved`.

use alloc::vec::Vec;

use crate::blocks::{self, delta, delta_one_handle, DeltaReport};
use crate::cyclo::gcd_u64;
use crate::error::Error;
use crate::graph::{CurveType, TrivalentGraph};
use crate::level::{Color, LevelSpec, Parity};
use crate::Result;

/// Eigenvalue of the twist on the color-j summand, as the exponent e with
/// eigenvalue A^e, 0 <= e < 2p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EigenExponent {
    pub residue: u32,
}

pub fn twist_exponent(level: &LevelSpec, j: Color) -> Result<EigenExponent> {
    level.check_color(j)?;
    let p = level.p() as u64;
    let j = j as u64;
    let residue = ((j * (j + 2) + p * j) % (2 * p)) as u32;
    Ok(EigenExponent { residue })
}

/// The case analysis of the order lemmas for a decomposition curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveCase {
    /// Non-separating, ambient genus >= 2.
    NonseparatingHighGenus,
    /// Separating with positive genus on both sides; the parity of the sum
    /// of boundary colors on one side (both sides agree when the total
    /// boundary sum is even).
    SeparatingPositiveGenus { side_sum_parity: u8 },
    /// Bounds a holed sphere whose other boundary colors have the recorded
    /// delta report and color-sum parity.
    HoledSphere { delta: DeltaReport, side_sum_parity: u8 },
    /// Non-separating on an ambient genus-1 surface with n >= 1 legs.
    Genus1Nonseparating { delta1: DeltaReport },
    /// Separating with genus zero on both sides: ambient genus 0, outside
    /// the order lemmas.
    GenusZeroSeparating,
}

/// A classified curve, with the facts the prediction table needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSituation {
    pub parity: Parity,
    pub case: CurveCase,
    /// Some ambient boundary color is zero (the lemmas assume none is).
    pub zero_boundary: bool,
    /// The total boundary sum is odd (even levels: null space).
    pub boundary_sum_odd: bool,
}

/// Outcome of the prediction table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PredictedOrder {
    Covered { order: u64, typography_resolved: bool },
    NotCovered,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderReport {
    pub computed: u64,
    pub predicted: PredictedOrder,
    /// None when the situation is not covered by the tables.
    pub matches: Option<bool>,
}

/// Colors that appear effectively on the curve dual to edge `e`: those j
/// for which every piece of the cut graph has a nonzero block space.
pub fn effective_colors(
    level: &LevelSpec,
    graph: &TrivalentGraph,
    e: usize,
    boundary: &[Color],
) -> Result<Vec<Color>> {
    graph.check_edge(e)?;
    graph.check_boundary(boundary)?;
    level.check_colors(boundary)?;
    let mut out = Vec::new();
    for &j in level.colors() {
        let pieces = graph.cut_edge(e, j, boundary)?;
        let mut all_nonzero = true;
        for (piece, colors) in &pieces {
            if !blocks::has_nonzero_block(level, piece, &colors.0)? {
                all_nonzero = false;
                break;
            }
        }
        if all_nonzero {
            out.push(j);
        }
    }
    Ok(out)
}

fn order_of_exponent_set(p: u32, exponents: &[u32]) -> u64 {
    let two_p = 2 * p as u64;
    let anchor = exponents[0] as u64;
    let mut order = 1u64;
    for &e in exponents {
        let diff = (e as u64 + two_p - anchor) % two_p;
        if diff == 0 {
            continue;
        }
        let ord = two_p / gcd_u64(two_p, diff);
        order = order / gcd_u64(order, ord) * ord;
    }
    order
}

/// Least N >= 1 such that all eigenvalue ratios of the twist along edge
/// `e` are trivial in the projective group: lcm over effective colors of
/// 2p / gcd(2p, exponent difference).
pub fn twist_projective_order(
    level: &LevelSpec,
    graph: &TrivalentGraph,
    e: usize,
    boundary: &[Color],
) -> Result<u64> {
    let effective = effective_colors(level, graph, e, boundary)?;
    if effective.is_empty() {
        return Err(Error::EmptyBlockSpace);
    }
    let exponents: Vec<u32> = effective
        .iter()
        .map(|&j| twist_exponent(level, j).map(|x| x.residue))
        .collect::<Result<_>>()?;
    Ok(order_of_exponent_set(level.p(), &exponents))
}

/// Classifies the curve dual to edge `e` into the order-lemma case
/// analysis, computing the delta invariants the tables consume.
pub fn classify_situation(
    level: &LevelSpec,
    graph: &TrivalentGraph,
    e: usize,
    boundary: &[Color],
) -> Result<CurveSituation> {
    graph.check_edge(e)?;
    graph.check_boundary(boundary)?;
    level.check_colors(boundary)?;
    let zero_boundary = boundary.iter().any(|&c| c == 0);
    let total: u64 = boundary.iter().map(|&c| c as u64).sum();
    let boundary_sum_odd = total % 2 == 1;
    let case = match graph.classify_edge(e)? {
        CurveType::NonSeparating => {
            if graph.genus() >= 2 {
                CurveCase::NonseparatingHighGenus
            } else {
                CurveCase::Genus1Nonseparating { delta1: delta_one_handle(level, boundary)? }
            }
        }
        CurveType::Separating { sides } => {
            let side_sum = |side: &crate::graph::SurfaceSide| -> u64 {
                side.legs.iter().map(|&l| boundary[l] as u64).sum()
            };
            match (sides[0].genus, sides[1].genus) {
                (0, 0) => CurveCase::GenusZeroSeparating,
                (0, _) | (_, 0) => {
                    let sphere = if sides[0].genus == 0 { &sides[0] } else { &sides[1] };
                    let colors: Vec<Color> =
                        sphere.legs.iter().map(|&l| boundary[l]).collect();
                    CurveCase::HoledSphere {
                        delta: delta(level, &colors)?,
                        side_sum_parity: (side_sum(sphere) % 2) as u8,
                    }
                }
                _ => CurveCase::SeparatingPositiveGenus {
                    side_sum_parity: (side_sum(&sides[0]) % 2) as u8,
                },
            }
        }
    };
    Ok(CurveSituation {
        parity: level.parity(),
        case,
        zero_boundary,
        boundary_sum_odd,
    })
}

fn covered(order: u64) -> PredictedOrder {
    PredictedOrder::Covered { order, typography_resolved: false }
}

fn covered_resolved(order: u64) -> PredictedOrder {
    PredictedOrder::Covered { order, typography_resolved: true }
}

/// The order tables of the two twist-order lemmas, including every small-p
/// exceptional row. Situations outside them report `NotCovered`, never a
/// guess.
pub fn predicted_order(level: &LevelSpec, sit: &CurveSituation) -> PredictedOrder {
    let p = level.p() as u64;
    if sit.zero_boundary {
        return PredictedOrder::NotCovered;
    }
    match level.parity() {
        Parity::Odd => {
            if p < 5 {
                return PredictedOrder::NotCovered;
            }
            match &sit.case {
                CurveCase::NonseparatingHighGenus => covered(p),
                CurveCase::SeparatingPositiveGenus { .. } => covered(p),
                CurveCase::HoledSphere { delta, .. } => match delta.value {
                    0 => PredictedOrder::NotCovered,
                    1 => covered(1),
                    2 => covered(p / gcd_u64(delta.j_max as u64, p)),
                    _ => covered(p),
                },
                // The printed row mixes the plain and one-handle J
                // notations; encoded from the proof's eigenvalue ratio
                // A^{8 floor(Jmax/4)}.
                CurveCase::Genus1Nonseparating { delta1 } => match delta1.value {
                    0 => PredictedOrder::NotCovered,
                    1 => covered(1),
                    2 => covered_resolved(
                        p / gcd_u64((delta1.j_max / 4) as u64, p),
                    ),
                    _ => covered(p),
                },
                CurveCase::GenusZeroSeparating => PredictedOrder::NotCovered,
            }
        }
        Parity::Even => {
            if p < 6 || sit.boundary_sum_odd {
                return PredictedOrder::NotCovered;
            }
            let even_split = |parity: u8| -> PredictedOrder {
                if parity == 0 {
                    match p {
                        6 => covered(1),
                        _ if p % 4 == 0 => covered(p / 4),
                        _ => covered(p / 2),
                    }
                } else {
                    match p {
                        6 | 8 => covered(1),
                        10 => covered(5),
                        12 => covered(2),
                        _ => covered(p / 2),
                    }
                }
            };
            match &sit.case {
                CurveCase::NonseparatingHighGenus => {
                    if p == 6 {
                        covered(4)
                    } else {
                        covered(2 * p)
                    }
                }
                CurveCase::SeparatingPositiveGenus { side_sum_parity } => {
                    even_split(*side_sum_parity)
                }
                CurveCase::HoledSphere { delta, side_sum_parity } => match delta.value {
                    0 => PredictedOrder::NotCovered,
                    1 => covered(1),
                    // "p/2 gcd(J_max, p/2)": both parenthesizations agree,
                    // (p/2)/g = p/(2g).
                    2 => covered_resolved(
                        p / (2 * gcd_u64(delta.j_max as u64, p / 2)),
                    ),
                    _ => even_split(*side_sum_parity),
                },
                CurveCase::Genus1Nonseparating { delta1 } => match delta1.value {
                    0 => PredictedOrder::NotCovered,
                    1 => covered(1),
                    // Printed as 2p/gcd(2 + Jmax, p); the proof's ratio
                    // -A^{2j+3} with 2j+3 = Jmax+1 gives gcd(Jmax+1, p).
                    2 => covered_resolved(
                        2 * p / gcd_u64((delta1.j_max + 1) as u64, p),
                    ),
                    _ => covered(2 * p),
                },
                CurveCase::GenusZeroSeparating => PredictedOrder::NotCovered,
            }
        }
    }
}

/// Computes the exact order and compares it with the lemma tables.
pub fn order_report(
    level: &LevelSpec,
    graph: &TrivalentGraph,
    e: usize,
    boundary: &[Color],
) -> Result<OrderReport> {
    let computed = twist_projective_order(level, graph, e, boundary)?;
    let sit = classify_situation(level, graph, e, boundary)?;
    let predicted = predicted_order(level, &sit);
    let matches = match &predicted {
        PredictedOrder::Covered { order, .. } => Some(*order == computed),
        PredictedOrder::NotCovered => None,
    };
    Ok(OrderReport { computed, predicted, matches })
}

/// One entry of the factorization report: the twist along `edge` must have
/// order dividing the level-vector entry of its curve type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorEntry {
    pub edge: usize,
    pub type_index: usize,
    pub computed: u64,
    pub required: u64,
    pub divides: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorReport {
    pub entries: Vec<FactorEntry>,
    pub pass: bool,
}

/// Checks that the twist order along every internal edge divides the
/// level-vector entry of its curve type; `k` is indexed by the canonical
/// order of `curve_types(graph)`.
pub fn check_factorization(
    level: &LevelSpec,
    graph: &TrivalentGraph,
    boundary: &[Color],
    k: &[u64],
) -> Result<FactorReport> {
    let types = graph.curve_types();
    if k.len() != types.len() {
        return Err(Error::MissingCurveType { expected: types.len(), got: k.len() });
    }
    let mut entries = Vec::new();
    for e in 0..graph.edge_count() {
        let t = graph.classify_edge(e)?;
        let type_index = types
            .iter()
            .position(|(seen, _)| *seen == t)
            .expect("edge type is among curve_types");
        let computed = twist_projective_order(level, graph, e, boundary)?;
        let required = k[type_index];
        entries.push(FactorEntry {
            edge: e,
            type_index,
            computed,
            required,
            divides: required % computed == 0,
        });
    }
    let pass = entries.iter().all(|en| en.divides);
    Ok(FactorReport { entries, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn level(p: u32) -> LevelSpec {
        LevelSpec::new(p).unwrap()
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(twist_exponent(&level(7), 0).unwrap().residue, 0);
        assert_eq!(twist_exponent(&level(5), 2).unwrap().residue, 8);
        assert_eq!(twist_exponent(&level(10), 1).unwrap().residue, 13);
    }

    #[test]
    fn exponent_matches_cyclotomic_eigenvalue() {
        // (-1)^j A^{j(j+2)} == A^{twist_exponent(j)} symbolically.
        use crate::cyclo::CycloNum;
        for p in [5u32, 8, 10, 13] {
            let l = level(p);
            for &j in l.colors() {
                let e = twist_exponent(&l, j).unwrap().residue;
                let lhs = if j % 2 == 0 {
                    CycloNum::root_power(p, (j * (j + 2)) as i64)
                } else {
                    -&CycloNum::root_power(p, (j * (j + 2)) as i64)
                };
                assert_eq!(lhs, CycloNum::root_power(p, e as i64), "p={p} j={j}");
            }
        }
    }

    #[test]
    fn effective_colors_on_dumbbell_middle_edge() {
        let l = level(5);
        let g = TrivalentGraph::dumbbell();
        assert_eq!(effective_colors(&l, &g, 1, &[]).unwrap(), vec![0, 2]);
    }

    #[test]
    fn effective_colors_nonseparating_even_level() {
        let l = level(10);
        let g = TrivalentGraph::dumbbell();
        assert_eq!(effective_colors(&l, &g, 0, &[]).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn effective_colors_on_six_leg_chain() {
        // Six legs colored 1 at p=8; the middle edge bounds two of them.
        // (With five legs the total sum is odd and the space is zero.)
        let l = level(8);
        let g = TrivalentGraph::chain(0, 6).unwrap();
        let boundary = [1, 1, 1, 1, 1, 1];
        // Edge 0 separates legs {0,1} from the rest.
        let t = g.classify_edge(0).unwrap();
        match &t {
            CurveType::Separating { sides } => {
                assert!(sides.iter().any(|s| s.legs == vec![0, 1]));
            }
            _ => panic!("expected separating"),
        }
        assert_eq!(effective_colors(&l, &g, 0, &boundary).unwrap(), vec![0, 2]);
    }

    #[test]
    fn order_examples() {
        assert_eq!(
            twist_projective_order(&level(5), &TrivalentGraph::dumbbell(), 1, &[]).unwrap(),
            5
        );
        assert_eq!(
            twist_projective_order(&level(10), &TrivalentGraph::dumbbell(), 0, &[]).unwrap(),
            20
        );
        assert_eq!(
            twist_projective_order(&level(6), &TrivalentGraph::dumbbell(), 0, &[]).unwrap(),
            4
        );
    }

    #[test]
    fn order_independent_of_anchor_and_labels() {
        // Reversing the exponent list must not change the order.
        assert_eq!(order_of_exponent_set(7, &[0, 8, 10]), 7);
        assert_eq!(order_of_exponent_set(7, &[10, 8, 0]), 7);
        assert_eq!(order_of_exponent_set(8, &[8, 0]), 2);
    }

    #[test]
    fn predicted_odd_rows() {
        let l = level(7);
        let sit = CurveSituation {
            parity: Parity::Odd,
            case: CurveCase::SeparatingPositiveGenus { side_sum_parity: 0 },
            zero_boundary: false,
            boundary_sum_odd: false,
        };
        assert_eq!(predicted_order(&l, &sit), covered(7));
    }

    #[test]
    fn predicted_even_odd_splitting_rows() {
        for (p, want) in [(10u32, 5u64), (12, 2), (6, 1), (8, 1), (14, 7)] {
            let l = level(p);
            let sit = CurveSituation {
                parity: Parity::Even,
                case: CurveCase::SeparatingPositiveGenus { side_sum_parity: 1 },
                zero_boundary: false,
                boundary_sum_odd: false,
            };
            assert_eq!(predicted_order(&l, &sit), covered(want), "p={p}");
        }
    }

    #[test]
    fn holed_sphere_order_at_even_level_eight() {
        // Effective colors {0,2} on the six-leg chain: exponent ratio 8,
        // order 2 = p / (2 gcd(Jmax, p/2)).
        let l = level(8);
        let g = TrivalentGraph::chain(0, 6).unwrap();
        let boundary = [1, 1, 1, 1, 1, 1];
        assert_eq!(twist_projective_order(&l, &g, 0, &boundary).unwrap(), 2);
    }

    #[test]
    fn factorization_examples() {
        let l7 = level(7);
        let g = TrivalentGraph::dumbbell();
        let report = check_factorization(&l7, &g, &[], &[7, 7]).unwrap();
        assert!(report.pass);

        let l12 = level(12);
        let report = check_factorization(&l12, &g, &[], &[24, 3]).unwrap();
        assert!(report.pass);

        let l5 = level(5);
        let report = check_factorization(&l5, &g, &[], &[2, 5]).unwrap();
        assert!(!report.pass);
        // The failure is on the nonseparating entry (order 5 does not
        // divide 2).
        let bad: Vec<_> = report.entries.iter().filter(|e| !e.divides).collect();
        assert!(!bad.is_empty());
        for entry in bad {
            assert_eq!(entry.computed, 5);
            assert_eq!(entry.required, 2);
        }
    }

    #[test]
    fn factorization_requires_full_vector() {
        let l = level(7);
        let g = TrivalentGraph::dumbbell();
        assert_eq!(
            check_factorization(&l, &g, &[], &[7]),
            Err(Error::MissingCurveType { expected: 2, got: 1 })
        );
    }

    #[test]
    fn order_report_matches_on_dumbbell() {
        let l = level(5);
        let g = TrivalentGraph::dumbbell();
        for e in 0..3 {
            let r = order_report(&l, &g, e, &[]).unwrap();
            assert_eq!(r.matches, Some(true), "edge {e}");
            assert_eq!(r.computed, 5);
        }
    }

    #[test]
    fn headline_divisibility_smoke() {
        for p in [5u32, 7, 6, 8, 10] {
            let l = level(p);
            let modulus = if p % 2 == 1 { p as u64 } else { 2 * p as u64 };
            for graph in [
                TrivalentGraph::dumbbell(),
                TrivalentGraph::theta(),
                TrivalentGraph::chain(2, 1).unwrap(),
            ] {
                let boundary: Vec<Color> = if graph.leg_count() == 1 {
                    vec![2]
                } else {
                    vec![]
                };
                for e in 0..graph.edge_count() {
                    let ord =
                        twist_projective_order(&l, &graph, e, &boundary).unwrap();
                    assert_eq!(modulus % ord, 0, "p={p} edge={e}");
                }
            }
        }
    }

    #[test]
    fn empty_block_space_reported() {
        // Odd total boundary sum at an even level: the space is zero.
        let l = level(8);
        let g = TrivalentGraph::chain(1, 1).unwrap();
        assert_eq!(
            twist_projective_order(&l, &g, 0, &[1]),
            Err(Error::EmptyBlockSpace)
        );
    }
}
