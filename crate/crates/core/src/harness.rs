//! Step-by-step audit of the argument that, on a cubic graph with a nice separator,
//! the subgraph balance condition and the vertex balance condition coincide.
//!
//! Every quantity is an exact integer: fractions with denominators 2 and 5 and the
//! balance fraction `p/q` are cleared by multiplying through by `10q`.
//!
//! Two places where the displayed algebra does not follow from the definitions are
//! evaluated as written and tallied rather than corrected:
//!
//! * substituting `2E_i = 3V_i - β_i` into `V_i + E_i + E_i^I` gives
//!   `5/2 V_i + 1/2 β_i`, while the displayed bound uses `5/2 V_i - 1/2 β_i`. Both are
//!   recorded (`eq2_substituted_lhs` and `eq2_lhs`);
//! * in the second converse branch the equality `5/2 max(V1 + Δβ/5, V2) - β2/2 =
//!   5/2 V1 - β2/2` only holds when `Δβ = 0`.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::alpha::Alpha;
use crate::error::{Error, Result};
use crate::generate::{enumerate_cubic_with_cap, random_cubic, DEFAULT_ENUMERATION_CAP};
use crate::graph::Graph;
use crate::separator::{boundary_stats, is_nice, side_weight, SeparatorPartition};
use crate::solver::{brute_force_oracle, for_each_partition, Problem, SolverConfig, Status};

/// Names of the forward-chain links, in the order of `forward_chain`.
pub const FORWARD_LINKS: [&str; 6] = [
    "eq1 implies displayed eq2",
    "wlog rewrite equals displayed eq2",
    "max(V1,V2) <= max(V1+dbeta/5,V2)",
    "beta2 <= 2I",
    "max(V1+dbeta/5,V2) + 2I/5 - beta2/5 <= alpha V",
    "vertex balance",
];

/// Links of the first converse branch (`V1 + Δβ/5 <= V2`), then the conclusion.
pub const CONVERSE_LINKS_A: [&str; 4] = [
    "eq3 lhs = 5/2 max(V1,V2) - beta2/2",
    "5/2 max(V1,V2) - beta2/2 < 5/2 max(V1,V2)",
    "5/2 max(V1,V2) <= 5/2 alpha V",
    "eq3",
];

/// Links of the second converse branch (`V1 + Δβ/5 > V2`), then the conclusion.
pub const CONVERSE_LINKS_B: [&str; 4] = [
    "eq3 lhs = 5/2 V1 - beta2/2",
    "5/2 V1 - beta2/2 <= alpha 5/2 max(V1,V2)",
    "alpha 5/2 max(V1,V2) <= 5/2 alpha V",
    "eq3",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConverseCase {
    /// `V1 + Δβ/5 <= V2`.
    A,
    /// `V1 + Δβ/5 > V2`.
    B,
    NotApplicable,
}

/// Every quantity of the derivation for one partition at one `alpha`.
///
/// Sides are ordered so that `beta2 >= beta1`. All `eq*`, `vb*` and `*_lhs` values are
/// multiplied by `scale = 10q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalanceReport {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    #[serde(rename = "I_size")]
    pub i_size: usize,
    #[serde(rename = "V1")]
    pub v1: usize,
    #[serde(rename = "E1")]
    pub e1: usize,
    #[serde(rename = "E1I")]
    pub e1i: usize,
    pub beta1: usize,
    #[serde(rename = "V2")]
    pub v2: usize,
    #[serde(rename = "E2")]
    pub e2: usize,
    #[serde(rename = "E2I")]
    pub e2i: usize,
    pub beta2: usize,
    pub sides_swapped: bool,
    pub delta_beta: usize,
    pub alpha: Alpha,
    pub scale: i64,
    pub eq1_lhs: i64,
    pub eq1_rhs: i64,
    /// `max_i(4V_i - E_i) + I`.
    pub eq1_rewrite_lhs: i64,
    /// Displayed form `max_i(5/2 V_i - 1/2 β_i) + I`.
    pub eq2_lhs: i64,
    pub eq2_rhs: i64,
    /// Exact substitution `max_i(5/2 V_i + 1/2 β_i) + I`.
    pub eq2_substituted_lhs: i64,
    /// `5/2 max(V1 + Δβ/5, V2) - β2/2 + I`.
    pub wlog_lhs: i64,
    pub vb_lhs: i64,
    pub vb_rhs: i64,
    pub eq3_lhs: i64,
    pub eq3_rhs: i64,
    /// `2E_i = 3V_i - β_i` and `E_i^I = β_i` on both sides, the `4V_i - E_i` rewrite,
    /// the exact substitution, and the swapped form of the displayed bound.
    pub identities_hold: bool,
    pub eq1_holds: bool,
    pub vb_holds: bool,
    pub forward_chain: Vec<bool>,
    pub converse_case: ConverseCase,
    pub converse_chain: Vec<bool>,
    #[serde(rename = "converse_with_I")]
    pub converse_with_i: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainResult {
    pub applicable: bool,
    pub links: Vec<(&'static str, bool)>,
}

impl ChainResult {
    pub fn holds(&self) -> bool {
        self.links.iter().all(|&(_, ok)| ok)
    }

    fn skipped() -> Self {
        ChainResult { applicable: false, links: Vec::new() }
    }
}

fn max_v1_shifted(r: &BalanceReport, q: i64) -> i64 {
    // 10q * max(V1 + Δβ/5, V2)
    (10 * q * r.v1 as i64 + 2 * q * r.delta_beta as i64).max(10 * q * r.v2 as i64)
}

/// Evaluates the forward chain. Applicable only when the subgraph balance holds.
pub fn check_forward(r: &BalanceReport) -> ChainResult {
    if !r.eq1_holds {
        return ChainResult::skipped();
    }
    let (p, q) = (r.alpha.num() as i64, r.alpha.den() as i64);
    let n = r.n as i64;
    let i = r.i_size as i64;
    let beta2 = r.beta2 as i64;
    let shifted = max_v1_shifted(r, q);
    let slack = 4 * q * i - 2 * q * beta2;
    let links = vec![
        (FORWARD_LINKS[0], r.eq2_lhs <= r.eq2_rhs),
        (FORWARD_LINKS[1], r.wlog_lhs == r.eq2_lhs),
        (FORWARD_LINKS[2], 10 * q * r.v1.max(r.v2) as i64 <= shifted),
        (FORWARD_LINKS[3], shifted <= shifted + slack),
        (FORWARD_LINKS[4], shifted + slack <= 10 * p * n),
        (FORWARD_LINKS[5], r.vb_lhs <= r.vb_rhs),
    ];
    ChainResult { applicable: true, links }
}

/// Evaluates the displayed converse branch. Applicable only when vertex balance holds.
pub fn check_converse(r: &BalanceReport) -> ChainResult {
    if !r.vb_holds {
        return ChainResult::skipped();
    }
    let (p, q) = (r.alpha.num() as i64, r.alpha.den() as i64);
    let n = r.n as i64;
    let (v1, v2) = (r.v1 as i64, r.v2 as i64);
    let beta2 = r.beta2 as i64;
    let largest = v1.max(v2);
    let eq3 = r.eq3_lhs <= r.eq3_rhs;
    let links = match converse_case(r) {
        ConverseCase::A => vec![
            (CONVERSE_LINKS_A[0], r.eq3_lhs == 25 * q * largest - 5 * q * beta2),
            (CONVERSE_LINKS_A[1], 25 * q * largest - 5 * q * beta2 < 25 * q * largest),
            (CONVERSE_LINKS_A[2], 25 * q * largest <= 25 * p * n),
            (CONVERSE_LINKS_A[3], eq3),
        ],
        _ => vec![
            (CONVERSE_LINKS_B[0], r.eq3_lhs == 25 * q * v1 - 5 * q * beta2),
            (CONVERSE_LINKS_B[1], 25 * q * v1 - 5 * q * beta2 <= 25 * p * largest),
            (CONVERSE_LINKS_B[2], 25 * p * largest <= 25 * p * n),
            (CONVERSE_LINKS_B[3], eq3),
        ],
    };
    ChainResult { applicable: true, links }
}

fn converse_case(r: &BalanceReport) -> ConverseCase {
    if 5 * r.v1 + r.delta_beta <= 5 * r.v2 {
        ConverseCase::A
    } else {
        ConverseCase::B
    }
}

/// Computes every quantity of the derivation for a nice partition of a cubic graph.
pub fn eval_derivation(
    g: &Graph,
    p: &SeparatorPartition,
    alpha: Alpha,
    instance: impl Into<String>,
) -> Result<BalanceReport> {
    if !g.is_k_regular(3) {
        return Err(Error::Precondition("derivation needs a 3-regular graph".into()));
    }
    let nice = is_nice(g, p)?;
    if let Some(first) = nice.failures.first() {
        return Err(Error::Precondition(format!("derivation needs a nice partition: {first}")));
    }
    let stats = boundary_stats(g, p)?;
    let [mut s1, mut s2] = stats.sides;
    let swapped = s1.boundary > s2.boundary;
    if swapped {
        std::mem::swap(&mut s1, &mut s2);
    }
    let q = alpha.den() as i64;
    let a = alpha.num() as i64;
    let scale = 10 * q;
    let n = g.n() as i64;
    let i = stats.separator_size as i64;
    let sides = [s1, s2];
    let delta_beta = s2.boundary - s1.boundary;

    let eq1_lhs = scale * (sides.iter().map(side_weight).max().unwrap_or(0) as i64 + i);
    let eq1_rhs = 25 * a * n;
    let eq1_rewrite_lhs = scale
        * (sides.iter().map(|s| 4 * s.vertices as i64 - s.internal_edges as i64).max().unwrap_or(0) + i);
    let eq2_lhs = sides
        .iter()
        .map(|s| 5 * q * (5 * s.vertices as i64 - s.boundary as i64))
        .max()
        .unwrap_or(0)
        + scale * i;
    let eq2_substituted_lhs = sides
        .iter()
        .map(|s| 5 * q * (5 * s.vertices as i64 + s.boundary as i64))
        .max()
        .unwrap_or(0)
        + scale * i;
    let shifted25 = (25 * q * s1.vertices as i64 + 5 * q * delta_beta as i64).max(25 * q * s2.vertices as i64);
    let eq3_lhs = shifted25 - 5 * q * s2.boundary as i64;
    let wlog_lhs = eq3_lhs + scale * i;
    let vb_lhs = scale * s1.vertices.max(s2.vertices) as i64;
    let vb_rhs = 10 * a * n;
    let identities_hold = eq1_rewrite_lhs == eq1_lhs
        && eq2_substituted_lhs == eq1_lhs
        && wlog_lhs == eq2_lhs
        && sides.iter().all(|s| {
            2 * s.internal_edges == 3 * s.vertices - s.boundary && s.separator_edges == s.boundary
        });

    let mut report = BalanceReport {
        instance: instance.into(),
        n: g.n(),
        m: g.m(),
        i_size: stats.separator_size,
        v1: s1.vertices,
        e1: s1.internal_edges,
        e1i: s1.separator_edges,
        beta1: s1.boundary,
        v2: s2.vertices,
        e2: s2.internal_edges,
        e2i: s2.separator_edges,
        beta2: s2.boundary,
        sides_swapped: swapped,
        delta_beta,
        alpha,
        scale,
        eq1_lhs,
        eq1_rhs,
        eq1_rewrite_lhs,
        eq2_lhs,
        eq2_rhs: eq1_rhs,
        eq2_substituted_lhs,
        wlog_lhs,
        vb_lhs,
        vb_rhs,
        eq3_lhs,
        eq3_rhs: eq1_rhs,
        identities_hold,
        eq1_holds: eq1_lhs <= eq1_rhs,
        vb_holds: vb_lhs <= vb_rhs,
        forward_chain: Vec::new(),
        converse_case: ConverseCase::NotApplicable,
        converse_chain: Vec::new(),
        converse_with_i: false,
    };
    report.forward_chain = check_forward(&report).links.iter().map(|&(_, ok)| ok).collect();
    let converse = check_converse(&report);
    if converse.applicable {
        report.converse_case = converse_case(&report);
        report.converse_chain = converse.links.iter().map(|&(_, ok)| ok).collect();
        report.converse_with_i = report.eq3_lhs + scale * i <= report.eq3_rhs;
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphSource {
    /// Every graph from the cubic enumerator.
    Enumerate,
    /// `count` random connected cubic graphs per size.
    Random { seed: u64, count: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignParams {
    pub sizes: Vec<usize>,
    pub alphas: Vec<Alpha>,
    pub source: GraphSource,
    /// Audit every nice partition with `|I| <= max_separator` instead of the
    /// oracle's optimal nice partition per `alpha`.
    pub exhaustive: bool,
    pub max_separator: usize,
    pub enumeration_cap: usize,
}

impl CampaignParams {
    pub fn new(sizes: Vec<usize>, alphas: Vec<Alpha>, source: GraphSource) -> Self {
        CampaignParams {
            sizes,
            alphas,
            source,
            exhaustive: false,
            max_separator: 4,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignSummary {
    pub graphs: usize,
    pub instances: usize,
    pub identity_failures: usize,
    pub eq1_holds: usize,
    pub forward_applicable: usize,
    pub forward_failures: usize,
    /// Instances where the displayed `eq2_lhs` differs from the exact substitution.
    pub eq2_display_mismatches: usize,
    pub vb_holds: usize,
    pub converse_applicable: usize,
    pub converse_case_a: usize,
    pub converse_case_b: usize,
    /// Applicable instances with any false link in the displayed branch.
    pub converse_printed_failures: usize,
    pub converse_link_failures_a: Vec<usize>,
    pub converse_link_failures_b: Vec<usize>,
    pub eq3_failures: usize,
    #[serde(rename = "converse_with_I_flags")]
    pub converse_with_i_flags: usize,
    /// Vertex-balanced instances whose subgraph balance fails.
    pub converse_eq1_flags: usize,
}

impl CampaignSummary {
    fn absorb(&mut self, r: &BalanceReport) {
        if self.converse_link_failures_a.is_empty() {
            self.converse_link_failures_a = vec![0; CONVERSE_LINKS_A.len()];
            self.converse_link_failures_b = vec![0; CONVERSE_LINKS_B.len()];
        }
        self.instances += 1;
        self.identity_failures += usize::from(!r.identities_hold);
        self.eq1_holds += usize::from(r.eq1_holds);
        self.vb_holds += usize::from(r.vb_holds);
        self.eq2_display_mismatches += usize::from(r.eq2_lhs != r.eq2_substituted_lhs);
        if !r.forward_chain.is_empty() {
            self.forward_applicable += 1;
            self.forward_failures += usize::from(r.forward_chain.iter().any(|&ok| !ok));
        }
        if r.converse_case != ConverseCase::NotApplicable {
            self.converse_applicable += 1;
            let counts = match r.converse_case {
                ConverseCase::A => {
                    self.converse_case_a += 1;
                    &mut self.converse_link_failures_a
                }
                _ => {
                    self.converse_case_b += 1;
                    &mut self.converse_link_failures_b
                }
            };
            for (slot, &ok) in counts.iter_mut().zip(&r.converse_chain) {
                *slot += usize::from(!ok);
            }
            self.converse_printed_failures += usize::from(r.converse_chain.iter().any(|&ok| !ok));
            self.eq3_failures += usize::from(!r.converse_chain.last().copied().unwrap_or(false));
            self.converse_with_i_flags += usize::from(!r.converse_with_i);
            self.converse_eq1_flags += usize::from(!r.eq1_holds);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Campaign {
    pub reports: Vec<BalanceReport>,
    pub summary: CampaignSummary,
}

impl Campaign {
    /// One report per line, then `{"summary": {...}}`.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> Result<()> {
        for r in &self.reports {
            serde_json::to_writer(&mut out, r)?;
            out.write_all(b"\n")?;
        }
        serde_json::to_writer(&mut out, &serde_json::json!({ "summary": &self.summary }))?;
        out.write_all(b"\n")?;
        Ok(())
    }

    pub fn to_jsonl(&self) -> String {
        let mut buf = Vec::new();
        self.write_jsonl(&mut buf).expect("writing to memory cannot fail");
        String::from_utf8(buf).expect("json is utf-8")
    }
}

fn campaign_graphs(params: &CampaignParams, n: usize) -> Result<Vec<(String, Graph)>> {
    match &params.source {
        GraphSource::Enumerate => Ok(enumerate_cubic_with_cap(n, params.enumeration_cap)?
            .enumerate()
            .map(|(i, g)| (format!("n{n}-g{i}"), g))
            .collect()),
        GraphSource::Random { seed, count } => (0..*count)
            .map(|i| {
                let s = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add((n as u64) << 32 | i as u64);
                Ok((format!("n{n}-s{seed}-g{i}"), random_cubic(n, s)?))
            })
            .collect(),
    }
}

/// Runs the derivation over every graph of the source and every selected nice partition.
pub fn run_campaign(params: &CampaignParams) -> Result<Campaign> {
    if params.alphas.is_empty() {
        return Err(Error::Precondition("campaign needs at least one alpha".into()));
    }
    let mut reports = Vec::new();
    let mut summary = CampaignSummary::default();
    for &n in &params.sizes {
        for (id, g) in campaign_graphs(params, n)? {
            summary.graphs += 1;
            if params.exhaustive {
                let mut nice = Vec::new();
                for_each_partition(&g, params.max_separator, true, |p| {
                    if is_nice(&g, p).is_ok_and(|x| x.is_nice()) {
                        nice.push(p.clone());
                    }
                })?;
                for (k, p) in nice.iter().enumerate() {
                    for &alpha in &params.alphas {
                        reports.push(eval_derivation(&g, p, alpha, format!("{id}-p{k}"))?);
                    }
                }
            } else {
                for &alpha in &params.alphas {
                    let cfg = SolverConfig::new(Problem::SubgraphBalanced, alpha)
                        .with_require_nice(true)
                        .with_max_separator(params.max_separator);
                    let outcome = brute_force_oracle(&g, &cfg)?;
                    if outcome.status == Status::Optimal {
                        let p = outcome.partition.expect("optimal outcome has a partition");
                        reports.push(eval_derivation(&g, &p, alpha, format!("{id}-opt"))?);
                    }
                }
            }
        }
    }
    for r in &reports {
        summary.absorb(r);
    }
    if summary.converse_link_failures_a.is_empty() {
        summary.converse_link_failures_a = vec![0; CONVERSE_LINKS_A.len()];
        summary.converse_link_failures_b = vec![0; CONVERSE_LINKS_B.len()];
    }
    Ok(Campaign { reports, summary })
}
