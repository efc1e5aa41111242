//! Exact solvers for the vertex-balanced and subgraph-balanced separator problems.
//!
//! [`solve_min_separator`] deepens on `|I|` and, for each candidate separator in
//! lexicographic order, groups the components of `G - I` into two sides. The first
//! size with a feasible grouping is optimal. Ties go to the lexicographically
//! smallest `I`, then the lexicographically smallest `V1`.
//!
//! [`brute_force_oracle`] enumerates every subset and every component bipartition and
//! checks each candidate through [`verify_certificate`]; it exists to cross-check the
//! solver.

use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::alpha::Alpha;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::separator::{
    is_nice, subgraph_balance, validate_partition, vertex_balance, SeparatorPartition,
};

/// Largest graph the exact solver accepts (vertex sets are packed into `u64`).
pub const SOLVER_CAP: usize = 64;
/// Default largest graph for [`brute_force_oracle`].
pub const ORACLE_CAP: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Problem {
    /// `max |V_i| <= alpha * n`.
    VertexBalanced,
    /// `max (|V_i| + E_i + E_i^I) + |I| <= alpha * (n + m)` with `I` independent.
    SubgraphBalanced,
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::VertexBalanced => "vertex_balanced",
            Problem::SubgraphBalanced => "subgraph_balanced",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub problem: Problem,
    pub alpha: Alpha,
    pub max_separator: Option<usize>,
    /// Only accept nice partitions (independent `I`, no shared separator
    /// neighbours, every separator vertex touching both sides).
    pub require_nice: bool,
    pub time_budget: Option<Duration>,
    /// Reject inputs with a vertex of degree above three.
    pub require_max_degree_three: bool,
}

impl SolverConfig {
    pub fn new(problem: Problem, alpha: Alpha) -> Self {
        SolverConfig {
            problem,
            alpha,
            max_separator: None,
            require_nice: false,
            time_budget: None,
            require_max_degree_three: false,
        }
    }

    pub fn with_max_separator(mut self, k: usize) -> Self {
        self.max_separator = Some(k);
        self
    }

    pub fn with_require_nice(mut self, on: bool) -> Self {
        self.require_nice = on;
        self
    }

    pub fn with_time_budget(mut self, budget: Duration) -> Self {
        self.time_budget = Some(budget);
        self
    }

    fn needs_independent(&self) -> bool {
        self.require_nice || self.problem == Problem::SubgraphBalanced
    }

    fn check_input(&self, g: &Graph) -> Result<()> {
        if self.max_separator == Some(0) {
            return Err(Error::Precondition("separator cap must be positive".into()));
        }
        if g.n() == 0 {
            return Err(Error::Precondition("graph has no vertices".into()));
        }
        if !g.is_connected() {
            return Err(Error::Precondition("input graph is disconnected".into()));
        }
        if self.require_max_degree_three && g.max_degree() > 3 {
            return Err(Error::Precondition(format!(
                "graph has maximum degree {} > 3",
                g.max_degree()
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Optimal,
    Infeasible,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub status: Status,
    pub partition: Option<SeparatorPartition>,
    pub separator_size: usize,
    pub nodes_explored: u64,
}

/// Wire form of a [`SolveOutcome`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub status: Status,
    pub separator: Option<Vec<usize>>,
    pub side1: Option<Vec<usize>>,
    pub side2: Option<Vec<usize>>,
    pub size: usize,
    pub nodes_explored: u64,
}

impl SolveOutcome {
    pub fn report(&self) -> SolveReport {
        SolveReport {
            status: self.status,
            separator: self.partition.as_ref().map(|p| p.separator.to_vec()),
            side1: self.partition.as_ref().map(|p| p.side1.to_vec()),
            side2: self.partition.as_ref().map(|p| p.side2.to_vec()),
            size: self.separator_size,
            nodes_explored: self.nodes_explored,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.report()).expect("report serialises")
    }
}

/// `true` iff the ascending member list of `a` sorts before that of `b`.
pub(crate) fn lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    if diff == 0 {
        return false;
    }
    let d = diff & diff.wrapping_neg();
    let above = !(d | (d - 1));
    if a & d != 0 {
        b & above != 0
    } else {
        a & above == 0
    }
}

/// Mask view of a graph with at most 64 vertices.
struct MaskGraph {
    n: usize,
    m: usize,
    nbr: Vec<u64>,
}

impl MaskGraph {
    fn new(g: &Graph) -> Result<Self> {
        let nbr = g
            .neighbor_masks()
            .ok_or(Error::Cap { what: "exact solver graph size", value: g.n(), cap: SOLVER_CAP })?;
        Ok(MaskGraph { n: g.n(), m: g.m(), nbr })
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Components of the vertices in `allowed`, ordered by smallest member.
    fn components(&self, allowed: u64) -> Vec<u64> {
        let mut rest = allowed;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.nbr[v] & allowed & !comp;
                comp |= new;
                frontier |= new;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    fn edges_within(&self, set: u64) -> usize {
        bits(set).map(|v| (self.nbr[v] & set).count_ones() as usize).sum::<usize>() / 2
    }

    fn edges_between(&self, a: u64, b: u64) -> usize {
        bits(a).map(|v| (self.nbr[v] & b).count_ones() as usize).sum()
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

struct Search<'a> {
    g: &'a MaskGraph,
    cfg: &'a SolverConfig,
    nodes: u64,
    started: Instant,
    out_of_time: bool,
}

impl<'a> Search<'a> {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if let Some(budget) = self.cfg.time_budget {
            if self.nodes.is_multiple_of(256) && self.started.elapsed() > budget {
                self.out_of_time = true;
            }
        }
        self.out_of_time
    }

    /// Largest admissible side weight for a separator of size `k`, if any.
    fn side_bound(&self, k: usize) -> Option<u64> {
        match self.cfg.problem {
            Problem::VertexBalanced => Some(self.cfg.alpha.floor_of(self.g.n as u64)),
            Problem::SubgraphBalanced => {
                self.cfg.alpha.floor_of((self.g.n + self.g.m) as u64).checked_sub(k as u64)
            }
        }
    }

    fn weight(&self, comp: u64, sep: u64) -> u64 {
        let vertices = comp.count_ones() as u64;
        match self.cfg.problem {
            Problem::VertexBalanced => vertices,
            Problem::SubgraphBalanced => {
                vertices + (self.g.edges_within(comp) + self.g.edges_between(comp, sep)) as u64
            }
        }
    }

    /// Lexicographically smallest feasible `V1` for separator `sep`, if any.
    fn best_sides(&mut self, sep: u64, k: usize) -> Option<u64> {
        let comps = self.g.components(self.g.full() & !sep);
        if comps.len() < 2 {
            return None;
        }
        let bound = self.side_bound(k)?;
        let weights: Vec<u64> = comps.iter().map(|&c| self.weight(c, sep)).collect();
        if weights.iter().any(|&w| w > bound) {
            return None;
        }
        if self.cfg.require_nice {
            let shared = bits(self.g.full() & !sep).any(|v| (self.g.nbr[v] & sep).count_ones() >= 2);
            if shared {
                return None;
            }
        }
        let touch: Vec<u64> = bits(sep).map(|v| self.g.nbr[v]).collect();
        let mut best = None;
        self.assign(&comps, &weights, bound, 1, comps[0], weights[0], 0, 0, &touch, &mut best);
        best
    }

    #[allow(clippy::too_many_arguments)]
    fn assign(
        &mut self,
        comps: &[u64],
        weights: &[u64],
        bound: u64,
        i: usize,
        side1: u64,
        w1: u64,
        side2: u64,
        w2: u64,
        touch: &[u64],
        best: &mut Option<u64>,
    ) {
        if self.tick() {
            return;
        }
        if i == comps.len() {
            if side2 == 0 {
                return;
            }
            if self.cfg.require_nice && !touch.iter().all(|&t| t & side1 != 0 && t & side2 != 0) {
                return;
            }
            if best.is_none_or(|b| lex_less(side1, b)) {
                *best = Some(side1);
            }
            return;
        }
        if w1 + weights[i] <= bound {
            self.assign(comps, weights, bound, i + 1, side1 | comps[i], w1 + weights[i], side2, w2, touch, best);
        }
        if w2 + weights[i] <= bound {
            self.assign(comps, weights, bound, i + 1, side1, w1, side2 | comps[i], w2 + weights[i], touch, best);
        }
    }

    /// Walks separators of size `k` in lexicographic order; returns the first feasible one.
    fn first_of_size(&mut self, k: usize) -> Option<(u64, u64)> {
        let mut found = None;
        self.combos(k, 0, 0, &mut found);
        found
    }

    fn combos(&mut self, k: usize, start: usize, sep: u64, found: &mut Option<(u64, u64)>) {
        if found.is_some() || self.out_of_time {
            return;
        }
        if k == 0 {
            if self.tick() {
                return;
            }
            let size = sep.count_ones() as usize;
            if let Some(side1) = self.best_sides(sep, size) {
                *found = Some((sep, side1));
            }
            return;
        }
        for v in start..self.g.n {
            if self.g.n - v < k {
                break;
            }
            if self.cfg.needs_independent() && self.g.nbr[v] & sep != 0 {
                continue;
            }
            self.combos(k - 1, v + 1, sep | (1 << v), found);
            if found.is_some() || self.out_of_time {
                return;
            }
        }
    }
}

fn partition_from_masks(n: usize, sep: u64, side1: u64, full: u64) -> SeparatorPartition {
    SeparatorPartition::new(
        VertexSet::from_mask(n, sep),
        VertexSet::from_mask(n, side1),
        VertexSet::from_mask(n, full & !sep & !side1),
    )
}

/// Minimum separator under the configured balance constraint.
pub fn solve_min_separator(g: &Graph, cfg: &SolverConfig) -> Result<SolveOutcome> {
    cfg.check_input(g)?;
    let mg = MaskGraph::new(g)?;
    let mut search = Search { g: &mg, cfg, nodes: 0, started: Instant::now(), out_of_time: false };
    let largest = g.n().saturating_sub(2).min(cfg.max_separator.unwrap_or(usize::MAX));
    for k in 1..=largest {
        let found = search.first_of_size(k);
        if search.out_of_time {
            return Ok(SolveOutcome {
                status: Status::BudgetExhausted,
                partition: None,
                separator_size: 0,
                nodes_explored: search.nodes,
            });
        }
        if let Some((sep, side1)) = found {
            return Ok(SolveOutcome {
                status: Status::Optimal,
                partition: Some(partition_from_masks(g.n(), sep, side1, mg.full())),
                separator_size: k,
                nodes_explored: search.nodes,
            });
        }
    }
    Ok(SolveOutcome {
        status: Status::Infeasible,
        partition: None,
        separator_size: 0,
        nodes_explored: search.nodes,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Answer {
    Yes,
    No,
    /// The time budget ran out first.
    Unknown,
}

/// Is there a feasible partition with `|I| <= k`?
pub fn decide(g: &Graph, cfg: &SolverConfig, k: usize) -> Result<Answer> {
    if k == 0 {
        cfg.check_input(g)?;
        return Ok(Answer::No);
    }
    let mut bounded = cfg.clone();
    bounded.max_separator = Some(cfg.max_separator.map_or(k, |cap| cap.min(k)));
    let outcome = solve_min_separator(g, &bounded)?;
    Ok(match outcome.status {
        Status::Optimal => Answer::Yes,
        Status::Infeasible => Answer::No,
        Status::BudgetExhausted => Answer::Unknown,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateCheck {
    pub reasons: Vec<String>,
}

impl CertificateCheck {
    pub fn is_valid(&self) -> bool {
        self.reasons.is_empty()
    }
}

/// Polynomial-time check of a claimed solution. Never searches.
pub fn verify_certificate(g: &Graph, p: &SeparatorPartition, cfg: &SolverConfig) -> CertificateCheck {
    let mut reasons = Vec::new();
    if let Err(violations) = validate_partition(g, p) {
        reasons.extend(violations.iter().map(ToString::to_string));
        return CertificateCheck { reasons };
    }
    if let Some(k) = cfg.max_separator {
        if p.separator.len() > k {
            reasons.push(format!("separator size {} exceeds cap {k}", p.separator.len()));
        }
    }
    let nice = is_nice(g, p).expect("partition validated");
    if cfg.require_nice {
        reasons.extend(nice.failures.iter().map(ToString::to_string));
    } else if cfg.needs_independent() && !nice.independent() {
        reasons.extend(
            nice.failures
                .iter()
                .filter(|f| matches!(f, crate::separator::NiceFailure::SeparatorEdge { .. }))
                .map(ToString::to_string),
        );
    }
    let balance = match cfg.problem {
        Problem::VertexBalanced => vertex_balance(g, p, cfg.alpha).map(Some),
        Problem::SubgraphBalanced if nice.independent() => subgraph_balance(g, p, cfg.alpha).map(Some),
        Problem::SubgraphBalanced => Ok(None),
    };
    match balance {
        Ok(Some(check)) if !check.holds => reasons.push(format!(
            "{} balance fails: {} > {} (integer-cleared)",
            cfg.problem, check.lhs, check.rhs
        )),
        Ok(_) => {}
        Err(e) => reasons.push(e.to_string()),
    }
    CertificateCheck { reasons }
}

/// Exhaustive reference solver: every subset as `I`, every grouping of components.
pub fn brute_force_oracle(g: &Graph, cfg: &SolverConfig) -> Result<SolveOutcome> {
    brute_force_oracle_with_cap(g, cfg, ORACLE_CAP)
}

pub fn brute_force_oracle_with_cap(g: &Graph, cfg: &SolverConfig, cap: usize) -> Result<SolveOutcome> {
    if g.n() > cap.min(SOLVER_CAP) {
        return Err(Error::Cap { what: "oracle graph size", value: g.n(), cap: cap.min(SOLVER_CAP) });
    }
    cfg.check_input(g)?;
    let n = g.n();
    let mut nodes = 0u64;
    let mut best: Option<SeparatorPartition> = None;
    let limit = cfg.max_separator.unwrap_or(n);
    for mask in 0u64..(1u64 << n) {
        nodes += 1;
        let size = mask.count_ones() as usize;
        // Larger separators can never win the (|I|, I, V1) order.
        if size > limit || best.as_ref().is_some_and(|b| size > b.separator.len()) {
            continue;
        }
        let sep = VertexSet::from_mask(n, mask);
        let comps = g.connected_components(&sep);
        if comps.len() < 2 {
            continue;
        }
        for assignment in 1u64..(1u64 << comps.len()) - 1 {
            nodes += 1;
            let mut side1 = VertexSet::new(n);
            let mut side2 = VertexSet::new(n);
            for (i, c) in comps.iter().enumerate() {
                if assignment & (1 << i) != 0 {
                    side1.union_with(c);
                } else {
                    side2.union_with(c);
                }
            }
            let candidate = SeparatorPartition::new(sep.clone(), side1, side2);
            if !verify_certificate(g, &candidate, cfg).is_valid() {
                continue;
            }
            let better = match &best {
                None => true,
                Some(b) => {
                    (candidate.separator.len(), &candidate.separator, &candidate.side1)
                        < (b.separator.len(), &b.separator, &b.side1)
                }
            };
            if better {
                best = Some(candidate);
            }
        }
    }
    Ok(match best {
        Some(p) => SolveOutcome {
            status: Status::Optimal,
            separator_size: p.separator.len(),
            partition: Some(p),
            nodes_explored: nodes,
        },
        None => SolveOutcome { status: Status::Infeasible, partition: None, separator_size: 0, nodes_explored: nodes },
    })
}

/// Calls `visit` once for every valid partition with `|I| <= max_separator`, up to
/// exchanging the sides (the side holding the smallest non-separator vertex is `V1`).
/// With `independent_only`, separators with an internal edge are skipped.
pub fn for_each_partition(
    g: &Graph,
    max_separator: usize,
    independent_only: bool,
    mut visit: impl FnMut(&SeparatorPartition),
) -> Result<()> {
    let mg = MaskGraph::new(g)?;
    let full = mg.full();
    let mut stack = vec![(0usize, 0u64)];
    // Explicit DFS over separators in lexicographic order.
    while let Some((start, sep)) = stack.pop() {
        let comps = mg.components(full & !sep);
        if comps.len() >= 2 {
            let rest = &comps[1..];
            for assignment in 0u64..(1u64 << rest.len()) - 1 {
                let side1 = rest
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| assignment & (1 << i) != 0)
                    .fold(comps[0], |acc, (_, c)| acc | c);
                visit(&partition_from_masks(g.n(), sep, side1, full));
            }
        }
        if (sep.count_ones() as usize) < max_separator {
            for v in (start..g.n()).rev() {
                if independent_only && mg.nbr[v] & sep != 0 {
                    continue;
                }
                stack.push((v + 1, sep | (1 << v)));
            }
        }
    }
    Ok(())
}
