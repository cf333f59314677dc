//! Conformal-block dimensions.
//!
//! The ground truth is backtracking enumeration of admissible colorings
//! over any trivalent graph. On top of that sit the closed-form genus-0
//! and genus-1 formulas (`genus0_nonzero`, `delta`, `delta_one_handle`,
//! `dim_genus1_pair`); each is a claim that the CLI verification sweeps
//! check against the enumeration oracle.
//!
//! Enumeration assigns internal edges in index order, pruning a vertex as
//! soon as two of its three colors are known (feasibility of the pair) and
//! checking admissibility once all three are known. Dimension counts use
//! unbounded integers.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::graph::TrivalentGraph;
use crate::level::{Color, LevelSpec, Parity};
use crate::Result;

/// A basis vector of the block space: colors of the internal edges
/// (indexed by edge position) extending the boundary coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub internal: Vec<Color>,
    pub boundary: Vec<Color>,
}

/// Value and attained J-bounds of a delta computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeltaReport {
    pub value: u64,
    pub j_min: i64,
    pub j_max: i64,
    pub variant: DeltaVariant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaVariant {
    Plain,
    OneHandle,
}

/// How incident colors of a vertex are looked up during enumeration.
#[derive(Debug, Clone, Copy)]
enum Slot {
    Edge(usize),
    Leg(usize),
}

struct Enumerator<'a> {
    level: &'a LevelSpec,
    boundary: &'a [Color],
    /// Three slots per vertex.
    vertex_slots: Vec<[Slot; 3]>,
    /// For each edge, the vertices whose last unknown slot it is.
    complete_at: Vec<Vec<usize>>,
    /// For each edge, the two already-known slots of a vertex that reaches
    /// two known colors when this edge is assigned.
    pair_check_at: Vec<Vec<(Slot, Slot)>>,
    palette: Vec<Color>,
    budget: Option<u64>,
    visited: u64,
}

impl<'a> Enumerator<'a> {
    fn new(
        level: &'a LevelSpec,
        graph: &'a TrivalentGraph,
        boundary: &'a [Color],
        budget: Option<u64>,
    ) -> Result<Self> {
        graph.check_boundary(boundary)?;
        level.check_colors(boundary)?;
        let mut vertex_slots: Vec<Vec<Slot>> = vec![Vec::new(); graph.vertex_count()];
        for (e, &(u, v)) in graph.edges().iter().enumerate() {
            vertex_slots[u].push(Slot::Edge(e));
            vertex_slots[v].push(Slot::Edge(e));
        }
        for (l, &v) in graph.legs().iter().enumerate() {
            vertex_slots[v].push(Slot::Leg(l));
        }
        let vertex_slots: Vec<[Slot; 3]> = vertex_slots
            .into_iter()
            .map(|s| <[Slot; 3]>::try_from(s.as_slice()).expect("trivalent"))
            .collect();
        let edge_count = graph.edge_count();
        let mut complete_at = vec![Vec::new(); edge_count];
        let mut pair_check_at = vec![Vec::new(); edge_count];
        for (v, slots) in vertex_slots.iter().enumerate() {
            let mut edge_indices: Vec<usize> = slots
                .iter()
                .filter_map(|s| match s {
                    Slot::Edge(e) => Some(*e),
                    Slot::Leg(_) => None,
                })
                .collect();
            edge_indices.sort_unstable();
            edge_indices.dedup();
            if let Some(&last) = edge_indices.last() {
                complete_at[last].push(v);
                // The vertex reaches two known colors when its
                // second-to-last distinct edge is assigned, unless a loop
                // fills two slots at once.
                if edge_indices.len() >= 2 {
                    let second = edge_indices[edge_indices.len() - 2];
                    let mut known: Vec<Slot> = Vec::new();
                    for s in slots {
                        match s {
                            Slot::Edge(e) if *e == last => {}
                            other => known.push(*other),
                        }
                    }
                    if known.len() == 2 {
                        pair_check_at[second].push((known[0], known[1]));
                    }
                }
            }
            // Vertices with no incident edges (all legs) are checked up
            // front in `run`.
        }
        Ok(Enumerator {
            level,
            boundary,
            vertex_slots,
            complete_at,
            pair_check_at,
            palette: level.colors().to_vec(),
            budget,
            visited: 0,
        })
    }

    #[inline]
    fn slot_color(&self, slot: Slot, assignment: &[Color]) -> Color {
        match slot {
            Slot::Edge(e) => assignment[e],
            Slot::Leg(l) => self.boundary[l],
        }
    }

    #[inline]
    fn vertex_colors(&self, v: usize, assignment: &[Color]) -> (Color, Color, Color) {
        let s = &self.vertex_slots[v];
        (
            self.slot_color(s[0], assignment),
            self.slot_color(s[1], assignment),
            self.slot_color(s[2], assignment),
        )
    }

    /// Runs the backtracking search, feeding each admissible coloring to
    /// the visitor; the visitor returns false to stop early.
    fn run(&mut self, visit: &mut dyn FnMut(&[Color]) -> bool) -> Result<()> {
        // All-leg vertices are fully determined by the boundary.
        for (v, slots) in self.vertex_slots.iter().enumerate() {
            if slots.iter().all(|s| matches!(s, Slot::Leg(_))) {
                let (a, b, c) = self.vertex_colors(v, &[]);
                if !self.level.admissible(a, b, c) {
                    return Ok(());
                }
            }
        }
        let edge_count = self.complete_at.len();
        let mut assignment = vec![0 as Color; edge_count];
        if edge_count == 0 {
            visit(&assignment);
            return Ok(());
        }
        self.descend(0, &mut assignment, visit)
    }

    fn descend(
        &mut self,
        e: usize,
        assignment: &mut Vec<Color>,
        visit: &mut dyn FnMut(&[Color]) -> bool,
    ) -> Result<()> {
        for idx in 0..self.palette.len() {
            let c = self.palette[idx];
            if let Some(budget) = self.budget {
                self.visited += 1;
                if self.visited > budget {
                    return Err(Error::CeilingExceeded { ceiling: budget });
                }
            }
            assignment[e] = c;
            let ok = self.complete_at[e].iter().all(|&v| {
                let (a, b, cc) = self.vertex_colors(v, assignment);
                self.level.admissible(a, b, cc)
            }) && self.pair_check_at[e].iter().all(|&(s1, s2)| {
                let a = self.slot_color(s1, assignment);
                let b = self.slot_color(s2, assignment);
                self.level.pair_extends(a, b)
            });
            if !ok {
                continue;
            }
            if e + 1 == assignment.len() {
                if !visit(assignment) {
                    return Ok(());
                }
            } else {
                self.descend(e + 1, assignment, visit)?;
            }
        }
        Ok(())
    }
}

/// All admissible colorings extending the boundary, in lexicographic
/// order by edge index.
pub fn enumerate_colorings(
    level: &LevelSpec,
    graph: &TrivalentGraph,
    boundary: &[Color],
) -> Result<Vec<Coloring>> {
    let mut out = Vec::new();
    let mut enumerator = Enumerator::new(level, graph, boundary, None)?;
    enumerator.run(&mut |assignment| {
        out.push(Coloring { internal: assignment.to_vec(), boundary: boundary.to_vec() });
        true
    })?;
    Ok(out)
}

/// Dimension of the block space: the number of admissible colorings.
pub fn dim_blocks(
    level: &LevelSpec,
    graph: &TrivalentGraph,
    boundary: &[Color],
) -> Result<BigUint> {
    dim_blocks_with_ceiling(level, graph, boundary, None)
}

/// As `dim_blocks`, but aborts with an error once the search has visited
/// more than `ceiling` nodes. Guards runaway enumeration in sweeps.
pub fn dim_blocks_with_ceiling(
    level: &LevelSpec,
    graph: &TrivalentGraph,
    boundary: &[Color],
    ceiling: Option<u64>,
) -> Result<BigUint> {
    let mut count = BigUint::zero();
    let mut enumerator = Enumerator::new(level, graph, boundary, ceiling)?;
    enumerator.run(&mut |_| {
        count += BigUint::one();
        true
    })?;
    Ok(count)
}

/// Whether the block space is nonzero, with early exit on the first
/// admissible coloring.
pub fn has_nonzero_block(
    level: &LevelSpec,
    graph: &TrivalentGraph,
    boundary: &[Color],
) -> Result<bool> {
    let mut found = false;
    let mut enumerator = Enumerator::new(level, graph, boundary, None)?;
    enumerator.run(&mut |_| {
        found = true;
        false
    })?;
    Ok(found)
}

fn require_min_level(level: &LevelSpec) -> Result<()> {
    let p = level.p();
    match level.parity() {
        Parity::Odd if p >= 5 => Ok(()),
        Parity::Even if p >= 6 => Ok(()),
        _ => Err(Error::InvalidLevel(p)),
    }
}

/// Nonvanishing of the genus-0 block space with the given boundary colors
/// (m >= 3), by the closed-form subset inequalities: for every k and every
/// subset of 2k+1 colors, twice its sum must not exceed the slack
/// 2k(p-2) + total (odd p) or k(p-4) + total (even p); even levels also
/// require an even total.
pub fn genus0_nonzero(level: &LevelSpec, colors: &[Color]) -> Result<bool> {
    require_min_level(level)?;
    level.check_colors(colors)?;
    if colors.len() < 3 {
        return Err(Error::NotEnoughColors { got: colors.len(), need: 3 });
    }
    let mut sorted: Vec<i64> = colors.iter().map(|&c| c as i64).collect();
    sorted.sort_unstable_by(|a, b| b.cmp(a)); // descending
    let total: i64 = sorted.iter().sum();
    let p = level.p() as i64;
    if level.parity() == Parity::Even && total % 2 != 0 {
        return Ok(false);
    }
    let m = sorted.len();
    let slack_unit = match level.parity() {
        Parity::Odd => 2 * (p - 2),
        Parity::Even => p - 4,
    };
    // Only the maximal subsets of each odd size bind.
    let mut top_sum = 0i64;
    let mut k = 0i64;
    let mut idx = 0usize;
    while 2 * (k as usize) + 1 <= m {
        while idx < (2 * k as usize + 1).min(m) {
            top_sum += sorted[idx];
            idx += 1;
        }
        if 2 * top_sum > k * slack_unit + total {
            return Ok(false);
        }
        k += 1;
    }
    Ok(true)
}

struct JBoundInput<'a> {
    /// Colors sorted ascending, as signed integers.
    sorted: &'a [i64],
    /// 2(p-2) for odd p, p-4 for even p.
    slack_unit: i64,
}

impl JBoundInput<'_> {
    fn n(&self) -> usize {
        self.sorted.len()
    }

    fn total(&self) -> i64 {
        self.sorted.iter().sum()
    }

    /// sum of i_t for t in 1..=hi (1-indexed, clamped).
    fn prefix(&self, hi: i64) -> i64 {
        if hi <= 0 {
            0
        } else {
            self.sorted[..(hi as usize).min(self.n())].iter().sum()
        }
    }

    /// sum of i_s for s in lo..=n (1-indexed, clamped).
    fn suffix(&self, lo: i64) -> i64 {
        let lo = lo.max(1) as usize;
        if lo > self.n() {
            0
        } else {
            self.sorted[lo - 1..].iter().sum()
        }
    }

    /// min over l in lo_l..=hi_l of prefix(n - 2l + shift) - suffix(n - 2l + shift + 1) + l*unit
    fn upper_bound(&self, lo_l: i64, hi_l: i64, shift: i64) -> i64 {
        let n = self.n() as i64;
        (lo_l..=hi_l)
            .map(|l| {
                let cut = n - 2 * l + shift;
                self.prefix(cut) - self.suffix(cut + 1) + l * self.slack_unit
            })
            .min()
            .expect("nonempty range")
    }

    /// max over k in 0..=hi_k of suffix(n - 2k) - prefix(n - 2k - 1) - k*unit
    fn lower_bound(&self, hi_k: i64) -> i64 {
        let n = self.n() as i64;
        (0..=hi_k)
            .map(|k| {
                let cut = n - 2 * k;
                self.suffix(cut) - self.prefix(cut - 1) - k * self.slack_unit
            })
            .max()
            .expect("nonempty range")
    }
}

fn delta_input(level: &LevelSpec, colors: &[Color], need: usize) -> Result<Vec<i64>> {
    require_min_level(level)?;
    level.check_colors(colors)?;
    if colors.len() < need {
        return Err(Error::NotEnoughColors { got: colors.len(), need });
    }
    let mut sorted: Vec<i64> = colors.iter().map(|&c| c as i64).collect();
    sorted.sort_unstable();
    Ok(sorted)
}

/// Number of colors j such that the genus-0 space with boundary
/// (i_1, ..., i_n, j) is nonzero, via the closed-form J-bounds.
pub fn delta(level: &LevelSpec, colors: &[Color]) -> Result<DeltaReport> {
    let sorted = delta_input(level, colors, 2)?;
    let p = level.p() as i64;
    let n = sorted.len() as i64;
    let report = match level.parity() {
        Parity::Odd => {
            let input = JBoundInput { sorted: &sorted, slack_unit: 2 * (p - 2) };
            let j_max = (p - 3).min(input.upper_bound(0, n / 2, 0));
            let j_min = 0i64.max(input.lower_bound(n / 2));
            let value = if j_max >= j_min { (1 + (j_max - j_min) / 2) as u64 } else { 0 };
            DeltaReport { value, j_min, j_max, variant: DeltaVariant::Plain }
        }
        Parity::Even => {
            let input = JBoundInput { sorted: &sorted, slack_unit: p - 4 };
            let eps = input.total().rem_euclid(2);
            let eps_p = if p % 4 == 0 { eps } else { 1 - eps };
            let j_max = ((p - 4) / 2 - eps_p).min(input.upper_bound(0, n / 2, 0));
            let j_min = eps.max(input.lower_bound(n / 2));
            let value = if j_max >= j_min { (1 + (j_max - j_min) / 2) as u64 } else { 0 };
            DeltaReport { value, j_min, j_max, variant: DeltaVariant::Plain }
        }
    };
    Ok(report)
}

/// Number of colors j such that the genus-0 space with boundary
/// (i_1, ..., i_n, j, j) is nonzero: the one-handle variant.
pub fn delta_one_handle(level: &LevelSpec, colors: &[Color]) -> Result<DeltaReport> {
    let sorted = delta_input(level, colors, 1)?;
    let p = level.p() as i64;
    let n = sorted.len() as i64;
    let report = match level.parity() {
        Parity::Odd => {
            let input = JBoundInput { sorted: &sorted, slack_unit: 2 * (p - 2) };
            // Bounds on 2j: the pair (j, j) enters subsets either twice
            // (upper bounds, shift +1) or not at all (lower bounds).
            let j_max = (2 * (p - 3)).min(input.upper_bound(1, (n + 1) / 2, 1));
            let j_min = 0i64.max(input.lower_bound((n - 1) / 2));
            // floor(j_max/4) and ceil(j_min/4), both arguments nonnegative.
            let value = 1 + j_max / 4 - (j_min + 3) / 4;
            DeltaReport {
                value: value.max(0) as u64,
                j_min,
                j_max,
                variant: DeltaVariant::OneHandle,
            }
        }
        Parity::Even => {
            let input = JBoundInput { sorted: &sorted, slack_unit: p - 4 };
            let eps = input.total().rem_euclid(2);
            let j_max = (p - 4).min(input.upper_bound(1, (n + 1) / 2, 1));
            let j_min = 0i64.max(input.lower_bound((n + 1) / 2));
            let value = if eps == 1 {
                0
            } else {
                (1 + (j_max - j_min) / 2).max(0) as u64
            };
            DeltaReport { value, j_min, j_max, variant: DeltaVariant::OneHandle }
        }
    };
    Ok(report)
}

/// Closed-form dimension of the genus-1 space with two boundary colors:
/// (p-1-max)(min+1)/2 for odd p; ((p-2)/2 - max)(1+min) for even p when
/// the colors agree mod 2, else zero.
pub fn dim_genus1_pair(level: &LevelSpec, i: Color, j: Color) -> Result<u64> {
    require_min_level(level)?;
    level.check_color(i)?;
    level.check_color(j)?;
    let p = level.p() as u64;
    let (lo, hi) = (i.min(j) as u64, i.max(j) as u64);
    Ok(match level.parity() {
        Parity::Odd => (p - 1 - hi) * (lo + 1) / 2,
        Parity::Even => {
            if i % 2 != j % 2 {
                0
            } else {
                ((p - 2) / 2 - hi) * (1 + lo)
            }
        }
    })
}
