//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.
//!
//! All checks are exact integer comparisons (tolerance zero). Runtime limits are
//! wall-clock on a single core.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use serde_json::Value;

use sepkit::catalog::{canonical_form, connected_graphs};
use sepkit::format::{parse_graph, serialize_graph};
use sepkit::gadget::{build_gadget, reduce, GadgetSpec};
use sepkit::generate::{enumerate_cubic, random_cubic, random_gnp, random_regular};
use sepkit::harness::{run_campaign, Campaign, CampaignParams, GraphSource};
use sepkit::separator::{is_nice, lemma1_check, lemma2_check};
use sepkit::solver::{brute_force_oracle, for_each_partition, solve_min_separator, verify_certificate, Status};
use sepkit::{Alpha, Graph, Problem, SeparatorPartition, SolverConfig, VertexSet};

const CUBIC_SIZES: [usize; 4] = [4, 6, 8, 10];
const MAX_SEPARATOR: usize = 4;
const ALPHAS: [&str; 3] = ["3/5", "2/3", "3/4"];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn alphas() -> Vec<Alpha> {
    ALPHAS.iter().map(|a| a.parse().unwrap()).collect()
}

/// Per-side counts computed straight from the edge list.
fn side_counts(g: &Graph, p: &SeparatorPartition, side: &VertexSet) -> (usize, usize, usize, usize) {
    let v = side.len();
    let mut internal = 0;
    let mut to_sep = 0;
    for &(a, b) in g.edges() {
        let (ia, ib) = (side.contains(a), side.contains(b));
        if ia && ib {
            internal += 1;
        } else if (ia && p.separator.contains(b)) || (ib && p.separator.contains(a)) {
            to_sep += 1;
        }
    }
    let boundary = side.iter().filter(|&x| g.neighbors(x).iter().any(|&y| p.separator.contains(y))).count();
    (v, internal, to_sep, boundary)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut failures = 0;
    let mut total_edges = 0;
    for i in 0..1000u64 {
        let n = 1 + (i as usize * 37) % 64;
        let g = if i % 5 == 4 && n.is_multiple_of(2) && n >= 4 {
            random_cubic(n, i).unwrap()
        } else {
            random_gnp(n, (i % 10) as f64 / 10.0 + 0.05, i)
        };
        let degree_sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        let text = serialize_graph(&g);
        let ok = degree_sum == 2 * g.m() && parse_graph(&text).ok().as_ref() == Some(&g) && serialize_graph(&parse_graph(&text).unwrap()) == text;
        failures += usize::from(!ok);
        total_edges += g.m();
    }
    let elapsed = start.elapsed();
    outcome(
        failures == 0 && elapsed < Duration::from_secs(5),
        format!("1000 graphs, {total_edges} edges, {failures} failures, {elapsed:.2?} (limit 5s)"),
    )
}

struct Sweep {
    graphs: usize,
    classes: Vec<usize>,
    partitions: usize,
    expected_partitions: usize,
    residual_failures: usize,
    nice: usize,
    nice_failures: usize,
    elapsed: Duration,
}

/// Number of partitions (up to side exchange) with `|I| <= max`, counted directly.
fn count_partitions(g: &Graph, max: usize) -> usize {
    let n = g.n();
    let mut total = 0;
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize > max {
            continue;
        }
        let comps = g.connected_components(&VertexSet::from_mask(n, mask)).len();
        if comps >= 2 {
            total += (1usize << (comps - 1)) - 1;
        }
    }
    total
}

fn sweep() -> Sweep {
    let start = Instant::now();
    let mut s = Sweep {
        graphs: 0,
        classes: Vec::new(),
        partitions: 0,
        expected_partitions: 0,
        residual_failures: 0,
        nice: 0,
        nice_failures: 0,
        elapsed: Duration::ZERO,
    };
    for n in CUBIC_SIZES {
        let mut classes = BTreeSet::new();
        for g in enumerate_cubic(n).unwrap() {
            s.graphs += 1;
            classes.insert(canonical_form(&g));
            s.expected_partitions += count_partitions(&g, MAX_SEPARATOR);
            for_each_partition(&g, MAX_SEPARATOR, false, |p| {
                s.partitions += 1;
                let sides = [&p.side1, &p.side2].map(|side| side_counts(&g, p, side));
                let direct = sides.map(|(v, e, ei, _)| 3 * v as i64 - (2 * e + ei) as i64);
                if direct != [0, 0] || lemma1_check(&g, p).unwrap() != [0, 0] {
                    s.residual_failures += 1;
                }
                if is_nice(&g, p).unwrap().is_nice() {
                    s.nice += 1;
                    let i = p.separator.len();
                    let check = lemma2_check(&g, p).unwrap();
                    let (b1, b2) = (sides[0].3, sides[1].3);
                    let ok = b1 + b2 == 3 * i
                        && [b1, b2].iter().all(|&b| i <= b && b <= 2 * i)
                        && sides.iter().all(|&(_, _, ei, b)| ei == b)
                        && check.holds()
                        && check.identity_residual == 0;
                    s.nice_failures += usize::from(!ok);
                }
            })
            .unwrap();
        }
        s.classes.push(classes.len());
    }
    s.elapsed = start.elapsed();
    s
}

fn criterion_2(s: &Sweep) -> Outcome {
    // Connected cubic graphs up to isomorphism on 4, 6, 8, 10 vertices: 1, 2, 5, 19.
    let coverage = s.classes == [1, 2, 5, 19];
    outcome(
        coverage && s.partitions == s.expected_partitions && s.residual_failures == 0 && s.elapsed < Duration::from_secs(600),
        format!(
            "{} graphs covering {:?} iso classes, {} partitions with |I|<={MAX_SEPARATOR} (direct count {}), {} nonzero residuals, {:.2?} (limit 10min)",
            s.graphs, s.classes, s.partitions, s.expected_partitions, s.residual_failures, s.elapsed
        ),
    )
}

fn criterion_3(s: &Sweep) -> Outcome {
    outcome(
        s.nice > 0 && s.nice_failures == 0,
        format!("{} nice partitions, {} violations of b1+b2=3|I|, |I|<=bi<=2|I|, EiI=bi", s.nice, s.nice_failures),
    )
}

fn exhaustive_campaign() -> Campaign {
    let mut params = CampaignParams::new(CUBIC_SIZES.to_vec(), alphas(), GraphSource::Enumerate);
    params.exhaustive = true;
    params.max_separator = MAX_SEPARATOR;
    run_campaign(&params).unwrap()
}

fn criterion_4(c: &Campaign) -> Outcome {
    let s = &c.summary;
    outcome(
        s.forward_failures == 0 && s.forward_applicable > 0 && s.identity_failures == 0,
        format!(
            "{} instances, {} satisfy eq1, forward_failures={}, identity_failures={}",
            s.instances, s.forward_applicable, s.forward_failures, s.identity_failures
        ),
    )
}

const INT_FIELDS: [&str; 24] = [
    "n", "m", "I_size", "V1", "E1", "E1I", "beta1", "V2", "E2", "E2I", "beta2", "delta_beta", "scale",
    "eq1_lhs", "eq1_rhs", "eq1_rewrite_lhs", "eq2_lhs", "eq2_rhs", "eq2_substituted_lhs", "wlog_lhs",
    "vb_lhs", "vb_rhs", "eq3_lhs", "eq3_rhs",
];
const BOOL_FIELDS: [&str; 5] = ["sides_swapped", "identities_hold", "eq1_holds", "vb_holds", "converse_with_I"];

fn line_is_valid(v: &Value) -> bool {
    let Some(obj) = v.as_object() else { return false };
    let ints = INT_FIELDS.iter().all(|k| obj.get(*k).is_some_and(|x| x.as_u64().is_some()));
    let bools = BOOL_FIELDS.iter().all(|k| obj.get(*k).is_some_and(Value::is_boolean));
    let strings = obj.get("instance").is_some_and(Value::is_string)
        && obj.get("alpha").and_then(Value::as_str).is_some_and(|a| a.parse::<Alpha>().is_ok());
    let chain = |k: &str| obj.get(k).and_then(Value::as_array).map(|a| a.iter().all(Value::is_boolean).then_some(a.len()));
    let (Some(Some(fwd)), Some(Some(conv))) = (chain("forward_chain"), chain("converse_chain")) else {
        return false;
    };
    let eq1 = obj["eq1_holds"].as_bool().unwrap_or(false);
    let vb = obj["vb_holds"].as_bool().unwrap_or(false);
    let case = obj.get("converse_case").and_then(Value::as_str);
    let beta_ordered = obj["beta2"].as_u64() >= obj["beta1"].as_u64();
    ints && bools && strings && beta_ordered
        && fwd == if eq1 { 6 } else { 0 }
        && conv == if vb { 4 } else { 0 }
        && match case {
            Some("a") | Some("b") => vb,
            Some("not_applicable") => !vb,
            _ => false,
        }
}

fn criterion_5(c: &Campaign) -> Outcome {
    let text = c.to_jsonl();
    let lines: Vec<&str> = text.lines().collect();
    let (body, last) = lines.split_at(lines.len() - 1);
    let parsed: Vec<Value> = body.iter().filter_map(|l| serde_json::from_str(l).ok()).collect();
    let valid = parsed.iter().filter(|v| line_is_valid(v)).count();
    let summary: Value = serde_json::from_str(last[0]).unwrap_or(Value::Null);
    let s = &summary["summary"];

    // Recount the tallies from the report lines.
    let count = |f: &dyn Fn(&Value) -> bool| parsed.iter().filter(|v| f(v)).count() as u64;
    let applicable = count(&|v| v["vb_holds"] == true);
    let case_a = count(&|v| v["converse_case"] == "a");
    let case_b = count(&|v| v["converse_case"] == "b");
    let printed = count(&|v| v["converse_chain"].as_array().unwrap().iter().any(|x| x == false));
    let with_i = count(&|v| v["vb_holds"] == true && v["converse_with_I"] == false);
    let tallies_match = s["instances"] == parsed.len() as u64
        && s["converse_applicable"] == applicable
        && s["converse_case_a"] == case_a
        && s["converse_case_b"] == case_b
        && s["converse_printed_failures"] == printed
        && s["converse_with_I_flags"] == with_i;
    let complete = !parsed.is_empty() && parsed.len() == body.len() && valid == parsed.len() && applicable == parsed.len() as u64;
    outcome(
        complete && tallies_match,
        format!(
            "{}/{} lines schema-valid, converse evaluated on {applicable}: case A {case_a}, case B {case_b}, \
             printed-branch failures {printed} (links A {}, links B {}), converse_with_I flags {with_i}, \
             vertex-balanced but eq1 false {}",
            valid,
            body.len(),
            s["converse_link_failures_a"],
            s["converse_link_failures_b"],
            s["converse_eq1_flags"]
        ),
    )
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut graphs = 0;
    let mut comparisons = 0;
    let mut mismatches = Vec::new();
    let mut unverified = 0;
    for n in 1..=8 {
        for g in connected_graphs(n).unwrap() {
            graphs += 1;
            for problem in [Problem::VertexBalanced, Problem::SubgraphBalanced] {
                for alpha in alphas() {
                    let cfg = SolverConfig::new(problem, alpha);
                    let fast = solve_min_separator(&g, &cfg).unwrap();
                    let slow = brute_force_oracle(&g, &cfg).unwrap();
                    comparisons += 1;
                    if (fast.status, fast.separator_size) != (slow.status, slow.separator_size) {
                        mismatches.push(format!("{:?} {problem} {alpha}", g.edges()));
                    }
                    if let Some(p) = &fast.partition {
                        unverified += usize::from(!verify_certificate(&g, p, &cfg).is_valid());
                    }
                }
            }
        }
    }
    let size = |g: &Graph, problem, alpha: &str| {
        let out = solve_min_separator(g, &SolverConfig::new(problem, alpha.parse().unwrap())).unwrap();
        (out.status, out.separator_size)
    };
    let c6 = size(&Graph::cycle(6), Problem::SubgraphBalanced, "3/5");
    let k33 = size(&Graph::complete_bipartite(3, 3), Problem::SubgraphBalanced, "3/4");
    let k4 = [Problem::VertexBalanced, Problem::SubgraphBalanced]
        .iter()
        .all(|&pr| ALPHAS.iter().all(|a| size(&Graph::complete(4), pr, a).0 == Status::Infeasible));
    let anchors = c6 == (Status::Optimal, 2) && k33 == (Status::Optimal, 3) && k4;
    let elapsed = start.elapsed();
    outcome(
        // Connected graphs up to isomorphism on 1..=8 vertices sum to 12113.
        graphs == 12_113 && mismatches.is_empty() && unverified == 0 && anchors && elapsed < Duration::from_secs(900),
        format!(
            "{graphs} connected graphs n<=8, {comparisons} comparisons, {} mismatches{}, {unverified} unverifiable certificates; \
             anchors C6={c6:?} K33={k33:?} K4 infeasible={k4}; {elapsed:.2?} (limit 15min)",
            mismatches.len(),
            mismatches.first().map(|m| format!(" (first: {m})")).unwrap_or_default()
        ),
    )
}

fn criterion_7() -> Outcome {
    let gadget = build_gadget(&GadgetSpec::new(16, 16, 4)).unwrap();
    let g = &gadget.graph;
    let outlets_ok = gadget.outlets.len() == 4
        && gadget.outlets.iter().all(|&o| g.degree(o) == 2)
        && gadget.outlets.iter().collect::<BTreeSet<_>>().len() == 4;
    let gadget_ok = g.n() == 256 && g.max_degree() == 3 && outlets_ok;

    let (k4star, _) = reduce(&Graph::complete(4), &GadgetSpec::new(4, 8, 4).three_regular(true)).unwrap();
    let regular_ok = k4star.is_k_regular(3) && k4star.is_connected();

    let mut reduced = 0;
    let mut over = 0;
    for n in [8, 10, 12, 16] {
        for seed in 0..4 {
            let h = random_regular(n, 7, seed).unwrap();
            let (hstar, _) = reduce(&h, &GadgetSpec::new(2, 2 * n, n)).unwrap();
            reduced += 1;
            over += usize::from(hstar.max_degree() != 3);
        }
    }
    outcome(
        gadget_ok && regular_ok && over == 0,
        format!(
            "gadget(16,16,4): {} vertices, outlets {:?} of degree 2, max degree {}; reduce(K4,4,8,4,3-regular): {} vertices, 3-regular={}; \
             {reduced} random 7-regular graphs reduced, {over} with max degree != 3",
            g.n(),
            gadget.outlets,
            g.max_degree(),
            k4star.n(),
            regular_ok
        ),
    )
}

fn criterion_8() -> Outcome {
    // Every doubled reduction of a graph with an edge that fits in 24 vertices.
    let mut small = Vec::new();
    for n in 2..=3usize {
        for g in connected_graphs(n).unwrap() {
            for cycles in 2..=6 {
                for len in (4..=12).step_by(2) {
                    for outlets in 1..=len / 2 {
                        for three_regular in [false, true] {
                            let spec = GadgetSpec::new(cycles, len, outlets).doubled(true).three_regular(three_regular);
                            if n * cycles * len > 24 {
                                continue;
                            }
                            if let Ok((gstar, _)) = reduce(&g, &spec) {
                                small.push(gstar);
                            }
                        }
                    }
                }
            }
        }
    }
    let mut lines = vec![format!("{} doubled instances with at most 24 vertices exist", small.len())];

    let mut instances = small;
    if instances.is_empty() {
        // Smallest doubled reductions: K2 with 4 outlets per gadget on 8-cycles.
        for spec in [GadgetSpec::new(2, 8, 4), GadgetSpec::new(2, 10, 4), GadgetSpec::new(3, 8, 4)] {
            for three_regular in [false, true] {
                if let Ok((gstar, _)) = reduce(&Graph::path(2), &spec.doubled(true).three_regular(three_regular)) {
                    instances.push(gstar);
                }
            }
        }
        lines.push(format!("using {} supplementary instances of 32-48 vertices", instances.len()));
    }
    let (mut solved, mut odd, mut exhausted) = (0, 0, 0);
    for gstar in &instances {
        for problem in [Problem::VertexBalanced, Problem::SubgraphBalanced] {
            for alpha in alphas() {
                let cfg = SolverConfig::new(problem, alpha).with_time_budget(Duration::from_secs(30));
                let out = solve_min_separator(gstar, &cfg).unwrap();
                match out.status {
                    Status::Optimal => {
                        solved += 1;
                        odd += out.separator_size % 2;
                    }
                    Status::BudgetExhausted => exhausted += 1,
                    Status::Infeasible => {}
                }
            }
        }
    }
    lines.push(format!("{solved} optimal separators, {odd} odd, {exhausted} budget-exhausted"));
    outcome(solved > 0 && odd == 0, lines.join("; "))
}

fn main() {
    let mut results = Vec::new();
    let mut report = |name: &str, o: Outcome| {
        println!("[{}] {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        results.push(o.pass);
    };
    report("C1 handshake and formats", criterion_1());
    let s = sweep();
    report("C2 edge-count residuals", criterion_2(&s));
    report("C3 boundary counts", criterion_3(&s));
    let campaign = exhaustive_campaign();
    report("C4 forward equivalence", criterion_4(&campaign));
    report("C5 converse audit", criterion_5(&campaign));
    report("C6 solver/oracle equivalence", criterion_6());
    report("C7 gadget structure", criterion_7());
    report("C8 doubled-reduction parity", criterion_8());
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
