//! Trivalent dual graphs of pants decompositions: validated construction,
//! genus and leg accounting, curve-type classification of internal edges,
//! and cutting along an edge.
//!
//! A graph records vertices 0..vertex_count, internal edges as unordered
//! vertex pairs (loops allowed, multi-edges allowed, identity is the
//! positional index) and legs as (vertex) entries indexed by position.
//! Every vertex has total degree 3, counting a loop twice and a leg once.
//! The ribbon structure (cyclic order at vertices) is not stored: nothing
//! computed here depends on it.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::level::Color;
use crate::Result;

/// One side of a separating curve: the genus of the complementary piece
/// and the set of original leg indices it carries, sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SurfaceSide {
    pub genus: usize,
    pub legs: Vec<usize>,
}

/// Orbit type of an internal edge under the mapping class group: the
/// homeomorphism type of the complement. Separating sides are kept in
/// canonical (sorted) order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurveType {
    NonSeparating,
    Separating { sides: [SurfaceSide; 2] },
}

impl CurveType {
    fn separating(a: SurfaceSide, b: SurfaceSide) -> Self {
        let sides = if a <= b { [a, b] } else { [b, a] };
        CurveType::Separating { sides }
    }

    pub fn is_separating(&self) -> bool {
        matches!(self, CurveType::Separating { .. })
    }
}

impl core::fmt::Display for CurveType {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CurveType::NonSeparating => write!(f, "nonsep"),
            CurveType::Separating { sides } => {
                let fmt_side = |f: &mut core::fmt::Formatter<'_>, s: &SurfaceSide| {
                    write!(f, "({},[", s.genus)?;
                    for (i, leg) in s.legs.iter().enumerate() {
                        if i > 0 {
                            write!(f, " ")?;
                        }
                        write!(f, "{leg}")?;
                    }
                    write!(f, "])")
                };
                write!(f, "sep")?;
                fmt_side(f, &sides[0])?;
                fmt_side(f, &sides[1])
            }
        }
    }
}

/// Total assignment of colors to the legs, indexed by leg position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundaryColoring(pub Vec<Color>);

/// Connected trivalent graph with legs; the dual graph of a pants
/// decomposition of a hyperbolic surface. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TrivalentGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    legs: Vec<usize>,
}

impl TrivalentGraph {
    pub fn new(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        legs: Vec<usize>,
    ) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::Disconnected);
        }
        for &(u, v) in &edges {
            for idx in [u, v] {
                if idx >= vertex_count {
                    return Err(Error::VertexIndexOutOfRange { index: idx, count: vertex_count });
                }
            }
        }
        for &v in &legs {
            if v >= vertex_count {
                return Err(Error::VertexIndexOutOfRange { index: v, count: vertex_count });
            }
        }
        let mut degree = vec![0usize; vertex_count];
        for &(u, v) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        for &v in &legs {
            degree[v] += 1;
        }
        for (v, &d) in degree.iter().enumerate() {
            if d != 3 {
                return Err(Error::DegreeViolation { vertex: v, degree: d });
            }
        }
        let graph = TrivalentGraph { vertex_count, edges, legs };
        if graph.component_of(0, None).iter().any(|&seen| !seen) {
            return Err(Error::Disconnected);
        }
        let (g, n) = (graph.genus(), graph.legs.len());
        if 2 >= 2 * g + n {
            return Err(Error::NonHyperbolic { genus: g, legs: n });
        }
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn leg_count(&self) -> usize {
        self.legs.len()
    }

    /// First Betti number of the graph = genus of the surface.
    pub fn genus(&self) -> usize {
        self.edges.len() + 1 - self.vertex_count
    }

    pub fn check_edge(&self, e: usize) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::EdgeIndexOutOfRange { index: e, count: self.edges.len() })
        }
    }

    pub fn check_boundary(&self, boundary: &[Color]) -> Result<()> {
        if boundary.len() == self.legs.len() {
            Ok(())
        } else {
            Err(Error::LegCountMismatch { expected: self.legs.len(), got: boundary.len() })
        }
    }

    /// Reachability from `start` skipping one optional edge index.
    fn component_of(&self, start: usize, skip: Option<usize>) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for (idx, &(a, b)) in self.edges.iter().enumerate() {
                if Some(idx) == skip {
                    continue;
                }
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen
    }

    /// Non-separating iff deleting the edge leaves the graph connected;
    /// otherwise the canonical (genus, legs) pair of the two components.
    pub fn classify_edge(&self, e: usize) -> Result<CurveType> {
        self.check_edge(e)?;
        let (u, v) = self.edges[e];
        let side_u = self.component_of(u, Some(e));
        if side_u[v] {
            return Ok(CurveType::NonSeparating);
        }
        let side = |mask: &[bool]| {
            let vertices = mask.iter().filter(|&&m| m).count();
            let edges = self
                .edges
                .iter()
                .enumerate()
                .filter(|&(idx, &(a, _))| idx != e && mask[a])
                .count();
            let legs: Vec<usize> = self
                .legs
                .iter()
                .enumerate()
                .filter(|&(_, &w)| mask[w])
                .map(|(i, _)| i)
                .collect();
            SurfaceSide { genus: edges + 1 - vertices, legs }
        };
        let mask_v: Vec<bool> = side_u.iter().map(|&m| !m).collect();
        Ok(CurveType::separating(side(&side_u), side(&mask_v)))
    }

    /// Deduplicated canonical curve types with a representative edge each,
    /// sorted with the non-separating type first.
    pub fn curve_types(&self) -> Vec<(CurveType, usize)> {
        let mut out: Vec<(CurveType, usize)> = Vec::new();
        for e in 0..self.edges.len() {
            let t = self.classify_edge(e).expect("edge index in range");
            if !out.iter().any(|(seen, _)| *seen == t) {
                out.push((t, e));
            }
        }
        out.sort();
        out
    }

    /// Cuts the graph open along edge `e`, coloring the two new legs `j`.
    /// One piece (genus g-1) for a non-separating edge, two pieces for a
    /// separating one. Legs keep their original colors, in their original
    /// relative order; the new legs are appended at the end of each piece.
    pub fn cut_edge(
        &self,
        e: usize,
        j: Color,
        boundary: &[Color],
    ) -> Result<Vec<(TrivalentGraph, BoundaryColoring)>> {
        self.check_edge(e)?;
        self.check_boundary(boundary)?;
        let (u, v) = self.edges[e];
        let side_u = self.component_of(u, Some(e));
        let masks: Vec<Vec<bool>> = if side_u[v] {
            vec![vec![true; self.vertex_count]]
        } else {
            let inverse = side_u.iter().map(|&m| !m).collect();
            vec![side_u, inverse]
        };
        let mut pieces = Vec::new();
        for mask in masks {
            let mut renumber = vec![usize::MAX; self.vertex_count];
            let mut next = 0usize;
            for (w, &inside) in mask.iter().enumerate() {
                if inside {
                    renumber[w] = next;
                    next += 1;
                }
            }
            let mut edges: Vec<(usize, usize)> = Vec::new();
            for (idx, &(a, b)) in self.edges.iter().enumerate() {
                if idx != e && mask[a] {
                    edges.push((renumber[a], renumber[b]));
                }
            }
            let mut legs: Vec<usize> = Vec::new();
            let mut colors: Vec<Color> = Vec::new();
            for (i, &w) in self.legs.iter().enumerate() {
                if mask[w] {
                    legs.push(renumber[w]);
                    colors.push(boundary[i]);
                }
            }
            // New legs from the cut ends that lie in this piece.
            for end in [u, v] {
                if mask[end] {
                    legs.push(renumber[end]);
                    colors.push(j);
                }
            }
            let piece = TrivalentGraph::new(next, edges, legs)
                .map_err(|_| Error::DegenerateCut)?;
            pieces.push((piece, BoundaryColoring(colors)));
        }
        Ok(pieces)
    }

    // ---- standard constructors -------------------------------------------

    /// Two vertices joined by a triple edge; genus 2, closed.
    pub fn theta() -> Self {
        Self::new(2, vec![(0, 1), (0, 1), (0, 1)], vec![]).expect("theta is valid")
    }

    /// A loop at each of two vertices joined by a bridge; genus 2, closed.
    pub fn dumbbell() -> Self {
        Self::new(2, vec![(0, 0), (0, 1), (1, 1)], vec![]).expect("dumbbell is valid")
    }

    /// The complete graph on four vertices; genus 3, closed.
    pub fn complete4() -> Self {
        Self::new(
            4,
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            vec![],
        )
        .expect("K4 is valid")
    }

    /// Genus-1 graph with m legs: a cycle of m vertices, one leg each
    /// (m = 1 degenerates to a single vertex carrying a loop and a leg).
    pub fn cycle_with_legs(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::NonHyperbolic { genus: 1, legs: 0 });
        }
        if m == 1 {
            return Self::new(1, vec![(0, 0)], vec![0]);
        }
        let edges = (0..m).map(|i| (i, (i + 1) % m)).collect();
        Self::new(m, edges, (0..m).collect())
    }

    /// Caterpillar dual graph with g loops and n legs, legs clustered at
    /// the front of the spine. The standard fixture for genus-0 chains and
    /// the induction graphs.
    pub fn chain(g: usize, n: usize) -> Result<Self> {
        Self::caterpillar(g, n, false)
    }

    /// Caterpillar with the legs split between the two ends of the spine,
    /// so that with n <= 2 every separating edge has positive genus on
    /// both sides.
    pub fn chain_spread(g: usize, n: usize) -> Result<Self> {
        Self::caterpillar(g, n, true)
    }

    fn caterpillar(g: usize, n: usize, spread: bool) -> Result<Self> {
        #[derive(Clone, Copy)]
        enum Slot {
            Leg(usize),
            Loop,
        }
        if 2 >= 2 * g + n {
            return Err(Error::NonHyperbolic { genus: g, legs: n });
        }
        let mut slots: Vec<Slot> = Vec::with_capacity(g + n);
        if spread {
            let front = n.div_ceil(2);
            slots.extend((0..front).map(Slot::Leg));
            slots.extend((0..g).map(|_| Slot::Loop));
            slots.extend((front..n).map(Slot::Leg));
        } else {
            slots.extend((0..n).map(Slot::Leg));
            slots.extend((0..g).map(|_| Slot::Loop));
        }
        struct Builder {
            next_vertex: usize,
            edges: Vec<(usize, usize)>,
            legs: Vec<(usize, usize)>, // (leg index, vertex)
        }
        impl Builder {
            fn vertex(&mut self) -> usize {
                self.next_vertex += 1;
                self.next_vertex - 1
            }
            fn attach(&mut self, slot: Slot, b: usize) {
                match slot {
                    Slot::Leg(i) => self.legs.push((i, b)),
                    Slot::Loop => {
                        let a = self.vertex();
                        self.edges.push((b, a));
                        self.edges.push((a, a));
                    }
                }
            }
        }
        let total = slots.len();
        let mut bld = Builder { next_vertex: 0, edges: Vec::new(), legs: Vec::new() };
        if total == 2 {
            // No internal spine. Loop+loop is the dumbbell, loop+leg the
            // one-vertex torus graph; leg+leg is non-hyperbolic (caught above).
            match (slots[0], slots[1]) {
                (Slot::Loop, Slot::Loop) => {
                    let a = bld.vertex();
                    let b = bld.vertex();
                    bld.edges.push((a, a));
                    bld.edges.push((a, b));
                    bld.edges.push((b, b));
                }
                (Slot::Loop, Slot::Leg(i)) | (Slot::Leg(i), Slot::Loop) => {
                    let a = bld.vertex();
                    bld.edges.push((a, a));
                    bld.legs.push((i, a));
                }
                (Slot::Leg(_), Slot::Leg(_)) => unreachable!("non-hyperbolic"),
            }
        } else {
            let spine_len = total - 2;
            let spine: Vec<usize> = (0..spine_len).map(|_| bld.vertex()).collect();
            for (k, &b) in spine.iter().enumerate() {
                if k == 0 {
                    bld.attach(slots[0], b);
                    bld.attach(slots[1], b);
                    if spine_len == 1 {
                        bld.attach(slots[2], b);
                    }
                } else {
                    bld.attach(slots[k + 1], b);
                    if k == spine_len - 1 {
                        bld.attach(slots[k + 2], b);
                    }
                }
                if k + 1 < spine_len {
                    bld.edges.push((b, spine[k + 1]));
                }
            }
        }
        bld.legs.sort();
        let leg_vertices = bld.legs.into_iter().map(|(_, v)| v).collect();
        Self::new(bld.next_vertex, bld.edges, leg_vertices)
    }
}
