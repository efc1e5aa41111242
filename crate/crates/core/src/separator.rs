//! Separator partitions `(I, V1, V2)`, their boundary statistics, and the two balance
//! conditions.
//!
//! For side `i` the statistics are `|V_i|`, `E_i` (edges inside `V_i`), `E_i^I` (edges
//! from `V_i` into `I`) and `β_i` (vertices of `V_i` with a neighbour in `I`). A
//! partition is *nice* when `I` is independent, no outside vertex has two neighbours
//! in `I`, and every vertex of `I` touches both sides.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alpha::Alpha;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    One,
    Two,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::One => "V1",
            Side::Two => "V2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeparatorPartition {
    pub separator: VertexSet,
    pub side1: VertexSet,
    pub side2: VertexSet,
}

impl SeparatorPartition {
    pub fn new(separator: VertexSet, side1: VertexSet, side2: VertexSet) -> Self {
        SeparatorPartition { separator, side1, side2 }
    }

    /// Builds a partition over `0..n` from id lists.
    pub fn from_ids(n: usize, separator: &[usize], side1: &[usize], side2: &[usize]) -> Result<Self> {
        Ok(SeparatorPartition {
            separator: VertexSet::from_ids(n, separator.iter().copied())?,
            side1: VertexSet::from_ids(n, side1.iter().copied())?,
            side2: VertexSet::from_ids(n, side2.iter().copied())?,
        })
    }

    pub fn side(&self, side: Side) -> &VertexSet {
        match side {
            Side::One => &self.side1,
            Side::Two => &self.side2,
        }
    }

    pub fn separator_size(&self) -> usize {
        self.separator.len()
    }

    /// Same partition with the two sides exchanged.
    pub fn swapped(&self) -> Self {
        SeparatorPartition {
            separator: self.separator.clone(),
            side1: self.side2.clone(),
            side2: self.side1.clone(),
        }
    }
}

/// A broken partition invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    UniverseMismatch { expected: usize, found: usize },
    Overlap { vertex: usize },
    Uncovered { vertex: usize },
    EmptySide(Side),
    /// An edge joins `V1` to `V2`.
    SidesConnected { u: usize, v: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UniverseMismatch { expected, found } => {
                write!(f, "partition covers {found} vertices, graph has {expected}")
            }
            Violation::Overlap { vertex } => write!(f, "vertex {vertex} is in more than one part"),
            Violation::Uncovered { vertex } => write!(f, "vertex {vertex} is in no part"),
            Violation::EmptySide(side) => write!(f, "empty side {side}"),
            Violation::SidesConnected { u, v } => {
                write!(f, "sides connected: edge {u}-{v} joins V1 and V2")
            }
        }
    }
}

/// Checks every partition invariant against `g`, collecting all violations.
pub fn validate_partition(g: &Graph, p: &SeparatorPartition) -> std::result::Result<(), Vec<Violation>> {
    let n = g.n();
    let mut violations = Vec::new();
    for part in [&p.separator, &p.side1, &p.side2] {
        if part.universe() != n {
            violations.push(Violation::UniverseMismatch { expected: n, found: part.universe() });
            return Err(violations);
        }
    }
    for v in 0..n {
        let hits = [&p.separator, &p.side1, &p.side2].iter().filter(|s| s.contains(v)).count();
        match hits {
            0 => violations.push(Violation::Uncovered { vertex: v }),
            1 => {}
            _ => violations.push(Violation::Overlap { vertex: v }),
        }
    }
    if p.side1.is_empty() {
        violations.push(Violation::EmptySide(Side::One));
    }
    if p.side2.is_empty() {
        violations.push(Violation::EmptySide(Side::Two));
    }
    for &(u, v) in g.edges() {
        let crosses = (p.side1.contains(u) && p.side2.contains(v))
            || (p.side2.contains(u) && p.side1.contains(v));
        if crosses {
            violations.push(Violation::SidesConnected { u, v });
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

fn require_valid(g: &Graph, p: &SeparatorPartition) -> Result<()> {
    validate_partition(g, p).map_err(Error::InvalidPartition)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideStats {
    pub vertices: usize,
    pub internal_edges: usize,
    pub separator_edges: usize,
    pub boundary: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryStats {
    pub separator_size: usize,
    /// Edges with both ends in `I`; zero when `I` is independent.
    pub separator_internal_edges: usize,
    pub sides: [SideStats; 2],
}

impl BoundaryStats {
    pub fn side(&self, side: Side) -> &SideStats {
        match side {
            Side::One => &self.sides[0],
            Side::Two => &self.sides[1],
        }
    }
}

pub fn boundary_stats(g: &Graph, p: &SeparatorPartition) -> Result<BoundaryStats> {
    require_valid(g, p)?;
    let mut stats = BoundaryStats {
        separator_size: p.separator.len(),
        separator_internal_edges: 0,
        sides: [SideStats::default(); 2],
    };
    for (i, side) in [&p.side1, &p.side2].into_iter().enumerate() {
        let s = &mut stats.sides[i];
        s.vertices = side.len();
        for v in side.iter() {
            let into_sep = g.neighbors(v).iter().filter(|&&w| p.separator.contains(w)).count();
            s.separator_edges += into_sep;
            if into_sep > 0 {
                s.boundary += 1;
            }
        }
    }
    for &(u, v) in g.edges() {
        for (i, side) in [&p.side1, &p.side2].into_iter().enumerate() {
            if side.contains(u) && side.contains(v) {
                stats.sides[i].internal_edges += 1;
            }
        }
        if p.separator.contains(u) && p.separator.contains(v) {
            stats.separator_internal_edges += 1;
        }
    }
    Ok(stats)
}

/// A failed niceness clause.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NiceFailure {
    /// (a) `I` is not independent.
    SeparatorEdge { u: usize, v: usize },
    /// (b) a vertex outside `I` has two or more neighbours in `I`.
    SharedSeparatorNeighbor { vertex: usize, count: usize },
    /// (c) a separator vertex has no neighbour on one side.
    MissesSide { vertex: usize, side: Side },
}

impl fmt::Display for NiceFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NiceFailure::SeparatorEdge { u, v } => {
                write!(f, "separator not independent: edge {u}-{v}")
            }
            NiceFailure::SharedSeparatorNeighbor { vertex, count } => {
                write!(f, "vertex {vertex} has {count} neighbours in the separator")
            }
            NiceFailure::MissesSide { vertex, side } => {
                write!(f, "separator vertex {vertex} has no neighbour in {side}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Niceness {
    pub failures: Vec<NiceFailure>,
}

impl Niceness {
    pub fn is_nice(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn independent(&self) -> bool {
        !self.failures.iter().any(|f| matches!(f, NiceFailure::SeparatorEdge { .. }))
    }
}

pub fn is_nice(g: &Graph, p: &SeparatorPartition) -> Result<Niceness> {
    require_valid(g, p)?;
    let mut failures = Vec::new();
    for &(u, v) in g.edges() {
        if p.separator.contains(u) && p.separator.contains(v) {
            failures.push(NiceFailure::SeparatorEdge { u, v });
        }
    }
    for v in (0..g.n()).filter(|&v| !p.separator.contains(v)) {
        let count = g.neighbors(v).iter().filter(|&&w| p.separator.contains(w)).count();
        if count >= 2 {
            failures.push(NiceFailure::SharedSeparatorNeighbor { vertex: v, count });
        }
    }
    for v in p.separator.iter() {
        for side in [Side::One, Side::Two] {
            if !g.neighbors(v).iter().any(|&w| p.side(side).contains(w)) {
                failures.push(NiceFailure::MissesSide { vertex: v, side });
            }
        }
    }
    Ok(Niceness { failures })
}

fn require_cubic(g: &Graph) -> Result<()> {
    if g.is_k_regular(3) {
        Ok(())
    } else {
        Err(Error::NotRegular(3))
    }
}

/// Per-side residual `3|V_i| - (2E_i + E_i^I)`; zero on every valid partition of a
/// cubic graph.
pub fn lemma1_check(g: &Graph, p: &SeparatorPartition) -> Result<[i64; 2]> {
    require_cubic(g)?;
    let stats = boundary_stats(g, p)?;
    Ok(stats.sides.map(|s| {
        3 * s.vertices as i64 - (2 * s.internal_edges as i64 + s.separator_edges as i64)
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundaryCountCheck {
    /// `β1 + β2 - 3|I|`.
    pub identity_residual: i64,
    /// `|I| <= β_i <= 2|I|` per side.
    pub bounds: [bool; 2],
}

impl BoundaryCountCheck {
    pub fn holds(&self) -> bool {
        self.identity_residual == 0 && self.bounds.iter().all(|&b| b)
    }
}

/// Boundary count identity and bounds for a nice partition of a cubic graph.
pub fn lemma2_check(g: &Graph, p: &SeparatorPartition) -> Result<BoundaryCountCheck> {
    require_cubic(g)?;
    let nice = is_nice(g, p)?;
    if !nice.is_nice() {
        let reasons: Vec<String> = nice.failures.iter().map(ToString::to_string).collect();
        return Err(Error::Precondition(format!(
            "partition is not nice: {}",
            reasons.join("; ")
        )));
    }
    let stats = boundary_stats(g, p)?;
    let i = stats.separator_size;
    let (b1, b2) = (stats.sides[0].boundary, stats.sides[1].boundary);
    Ok(BoundaryCountCheck {
        identity_residual: b1 as i64 + b2 as i64 - 3 * i as i64,
        bounds: [b1, b2].map(|b| i <= b && b <= 2 * i),
    })
}

/// An integer-cleared inequality `lhs <= rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalanceCheck {
    pub holds: bool,
    pub lhs: u128,
    pub rhs: u128,
}

impl BalanceCheck {
    fn new(lhs: u128, rhs: u128) -> Self {
        BalanceCheck { holds: lhs <= rhs, lhs, rhs }
    }
}

/// `max(|V1|, |V2|) <= alpha * n`, cleared to `den * max <= num * n`.
pub fn vertex_balance(g: &Graph, p: &SeparatorPartition, alpha: Alpha) -> Result<BalanceCheck> {
    require_valid(g, p)?;
    let largest = p.side1.len().max(p.side2.len()) as u128;
    Ok(BalanceCheck::new(
        u128::from(alpha.den()) * largest,
        u128::from(alpha.num()) * g.n() as u128,
    ))
}

/// Side weight `|V_i| + E_i + E_i^I`.
pub fn side_weight(s: &SideStats) -> usize {
    s.vertices + s.internal_edges + s.separator_edges
}

/// `max_i(|V_i| + E_i + E_i^I) + |I| <= alpha * (n + m)` for an independent `I`,
/// cleared to integers. On a cubic graph `n + m = 5n/2`.
pub fn subgraph_balance(g: &Graph, p: &SeparatorPartition, alpha: Alpha) -> Result<BalanceCheck> {
    let stats = boundary_stats(g, p)?;
    if stats.separator_internal_edges > 0 {
        let &(u, v) = g
            .edges()
            .iter()
            .find(|&&(u, v)| p.separator.contains(u) && p.separator.contains(v))
            .expect("an internal separator edge exists");
        return Err(Error::NotIndependent(u, v));
    }
    let weight = stats.sides.iter().map(side_weight).max().unwrap_or(0) + stats.separator_size;
    Ok(BalanceCheck::new(
        u128::from(alpha.den()) * weight as u128,
        u128::from(alpha.num()) * (g.n() + g.m()) as u128,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c6_partition() -> (Graph, SeparatorPartition) {
        (Graph::cycle(6), SeparatorPartition::from_ids(6, &[0, 3], &[1, 2], &[4, 5]).unwrap())
    }

    /// K_{3,3} with a = {0,1,2}, b = {3,4,5}; I = a, V1 = {b1}, V2 = {b2, b3}.
    fn k33_partition() -> (Graph, SeparatorPartition) {
        (
            Graph::complete_bipartite(3, 3),
            SeparatorPartition::from_ids(6, &[0, 1, 2], &[3], &[4, 5]).unwrap(),
        )
    }

    fn alpha(s: &str) -> Alpha {
        s.parse().unwrap()
    }

    #[test]
    fn validates_c6() {
        let (g, p) = c6_partition();
        assert_eq!(validate_partition(&g, &p), Ok(()));
    }

    #[test]
    fn detects_connected_sides_in_k4() {
        let g = Graph::complete(4);
        let p = SeparatorPartition::from_ids(4, &[0], &[1], &[2, 3]).unwrap();
        let v = validate_partition(&g, &p).unwrap_err();
        assert!(v.contains(&Violation::SidesConnected { u: 1, v: 2 }));
        assert!(v[0].to_string().starts_with("sides connected"));
    }

    #[test]
    fn detects_empty_side_overlap_and_gaps() {
        let g = Graph::path(4);
        let p = SeparatorPartition::from_ids(4, &[1], &[0, 2, 3], &[]).unwrap();
        assert!(validate_partition(&g, &p).unwrap_err().contains(&Violation::EmptySide(Side::Two)));
        let p = SeparatorPartition::from_ids(4, &[1], &[0, 1], &[2]).unwrap();
        let v = validate_partition(&g, &p).unwrap_err();
        assert!(v.contains(&Violation::Overlap { vertex: 1 }));
        assert!(v.contains(&Violation::Uncovered { vertex: 3 }));
        let p = SeparatorPartition::from_ids(5, &[1], &[0], &[2, 3]).unwrap();
        assert!(matches!(
            validate_partition(&g, &p).unwrap_err()[0],
            Violation::UniverseMismatch { expected: 4, found: 5 }
        ));
    }

    #[test]
    fn c6_stats() {
        let (g, p) = c6_partition();
        let s = boundary_stats(&g, &p).unwrap();
        let side = SideStats { vertices: 2, internal_edges: 1, separator_edges: 2, boundary: 2 };
        assert_eq!(s.sides, [side, side]);
        assert_eq!(s.separator_size, 2);
    }

    #[test]
    fn k33_stats() {
        let (g, p) = k33_partition();
        let s = boundary_stats(&g, &p).unwrap();
        assert_eq!(s.sides[0], SideStats { vertices: 1, internal_edges: 0, separator_edges: 3, boundary: 1 });
        assert_eq!(s.sides[1], SideStats { vertices: 2, internal_edges: 0, separator_edges: 6, boundary: 2 });
    }

    #[test]
    fn stats_reject_invalid_partitions() {
        let g = Graph::complete(4);
        let p = SeparatorPartition::from_ids(4, &[0], &[1], &[2, 3]).unwrap();
        assert!(matches!(boundary_stats(&g, &p), Err(Error::InvalidPartition(_))));
    }

    #[test]
    fn niceness() {
        let (g, p) = c6_partition();
        assert!(is_nice(&g, &p).unwrap().is_nice());

        let q3 = Graph::hypercube(3);
        let p = SeparatorPartition::from_ids(8, &[0b000, 0b011, 0b101], &[0b001], &[0b010, 0b100, 0b110, 0b111])
            .unwrap();
        let nice = is_nice(&q3, &p).unwrap();
        assert!(nice.independent());
        assert!(nice
            .failures
            .contains(&NiceFailure::SharedSeparatorNeighbor { vertex: 0b001, count: 3 }));

        let (g, p) = k33_partition();
        let nice = is_nice(&g, &p).unwrap();
        assert!(nice.failures.contains(&NiceFailure::SharedSeparatorNeighbor { vertex: 3, count: 3 }));
    }

    #[test]
    fn niceness_detects_dependent_separator_and_missing_side() {
        // Path 0-1-2-3-4 with I = {1, 2}: edge inside I, and 1 misses V2, 2 misses V1.
        let g = Graph::path(5);
        let p = SeparatorPartition::from_ids(5, &[1, 2], &[0], &[3, 4]).unwrap();
        let nice = is_nice(&g, &p).unwrap();
        assert!(!nice.independent());
        assert!(nice.failures.contains(&NiceFailure::MissesSide { vertex: 1, side: Side::Two }));
        assert!(nice.failures.contains(&NiceFailure::MissesSide { vertex: 2, side: Side::One }));
    }

    #[test]
    fn edge_count_residual_on_cube() {
        let (g, p) = c6_partition();
        assert!(matches!(lemma1_check(&g, &p), Err(Error::NotRegular(3))));
        let q3 = Graph::hypercube(3);
        let p = SeparatorPartition::from_ids(8, &[0b000, 0b101, 0b110, 0b011], &[0b001, 0b010], &[0b100, 0b111])
            .unwrap();
        assert_eq!(lemma1_check(&q3, &p).unwrap(), [0, 0]);
    }

    #[test]
    fn boundary_count_preconditions() {
        let (g, p) = c6_partition();
        assert!(matches!(lemma2_check(&g, &p), Err(Error::NotRegular(3))));
        let (g, p) = k33_partition();
        let err = lemma2_check(&g, &p).unwrap_err().to_string();
        assert!(err.contains("neighbours in the separator"), "{err}");
    }

    #[test]
    fn vertex_balance_examples() {
        let (g, p) = c6_partition();
        let c = vertex_balance(&g, &p, alpha("3/5")).unwrap();
        assert_eq!((c.holds, c.lhs, c.rhs), (true, 10, 18));

        // Star K_{1,5}: center separates, one leaf against four.
        let star = Graph::complete_bipartite(1, 5);
        let p = SeparatorPartition::from_ids(6, &[0], &[1], &[2, 3, 4, 5]).unwrap();
        assert!(!vertex_balance(&star, &p, alpha("51/100")).unwrap().holds);
    }

    #[test]
    fn subgraph_balance_examples() {
        let (g, p) = k33_partition();
        let c = subgraph_balance(&g, &p, alpha("3/4")).unwrap();
        assert_eq!((c.holds, c.lhs, c.rhs), (true, 44, 45));
        let c = subgraph_balance(&g, &p, alpha("7/10")).unwrap();
        assert_eq!((c.holds, c.lhs, c.rhs), (false, 110, 105));

        let (g, p) = c6_partition();
        let c = subgraph_balance(&g, &p, alpha("3/5")).unwrap();
        assert_eq!((c.holds, c.lhs, c.rhs), (true, 35, 36));

        let g = Graph::path(5);
        let p = SeparatorPartition::from_ids(5, &[1, 2], &[0], &[3, 4]).unwrap();
        assert!(matches!(subgraph_balance(&g, &p, alpha("3/4")), Err(Error::NotIndependent(1, 2))));
    }
}
