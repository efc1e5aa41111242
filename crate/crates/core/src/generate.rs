//! Random and exhaustive generators for regular graphs.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default largest `n` accepted by [`enumerate_cubic`].
pub const DEFAULT_ENUMERATION_CAP: usize = 10;

const RESTART_LIMIT: usize = 100_000;

/// A connected 3-regular graph on `n` vertices, deterministic in `seed`.
pub fn random_cubic(n: usize, seed: u64) -> Result<Graph> {
    if n % 2 == 1 {
        return Err(Error::Precondition(format!(
            "cubic graph needs an even vertex count (3n must be even), got n={n}"
        )));
    }
    if n < 4 {
        return Err(Error::Precondition(format!("cubic graph needs n >= 4, got n={n}")));
    }
    random_regular(n, 3, seed)
}

/// A connected `d`-regular graph on `n` vertices drawn from the pairing model.
///
/// Points are paired one random pair at a time; a pair that would close a loop or
/// a parallel edge is redrawn, a dead end restarts the pairing, and a disconnected
/// result is rejected.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if (n * d) % 2 == 1 {
        return Err(Error::Precondition(format!("n*d must be even, got n={n}, d={d}")));
    }
    if d >= n || d == 0 {
        return Err(Error::Precondition(format!("need 0 < d < n, got n={n}, d={d}")));
    }
    if d == 1 && n > 2 {
        return Err(Error::Precondition("a connected 1-regular graph has exactly 2 vertices".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RESTART_LIMIT {
        if let Some(edges) = try_pairing(n, d, &mut rng) {
            let g = Graph::new(n, &edges)?;
            if g.is_connected() {
                return Ok(g);
            }
        }
    }
    Err(Error::Precondition(format!(
        "no connected {d}-regular graph on {n} vertices found after {RESTART_LIMIT} attempts"
    )))
}

fn try_pairing(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Option<Vec<(usize, usize)>> {
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    let mut adjacent = vec![vec![false; n]; n];
    let mut edges = Vec::with_capacity(n * d / 2);
    let mut misses = 0;
    while !points.is_empty() {
        let i = rng.gen_range(0..points.len());
        let j = rng.gen_range(0..points.len());
        let (u, v) = (points[i], points[j]);
        if i == j || u == v || adjacent[u][v] {
            misses += 1;
            if misses > 64 && !has_valid_pair(&points, &adjacent) {
                return None;
            }
            continue;
        }
        misses = 0;
        adjacent[u][v] = true;
        adjacent[v][u] = true;
        edges.push((u, v));
        let (hi, lo) = (i.max(j), i.min(j));
        points.swap_remove(hi);
        points.swap_remove(lo);
    }
    Some(edges)
}

fn has_valid_pair(points: &[usize], adjacent: &[Vec<bool>]) -> bool {
    points.iter().enumerate().any(|(i, &u)| {
        points[i + 1..].iter().any(|&v| u != v && !adjacent[u][v])
    })
}

/// Erdős–Rényi G(n, p) graph, deterministic in `seed`. May be disconnected.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("generated edges are valid")
}

/// Every connected cubic graph on `n` vertices, up to isomorphism, as labelled graphs.
/// See [`CubicStream`].
pub fn enumerate_cubic(n: usize) -> Result<CubicStream> {
    enumerate_cubic_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_cubic_with_cap(n: usize, cap: usize) -> Result<CubicStream> {
    if n > cap {
        return Err(Error::Cap { what: "cubic enumeration size", value: n, cap });
    }
    if n > 64 {
        return Err(Error::Cap { what: "cubic enumeration size", value: n, cap: 64 });
    }
    if n % 2 == 1 || n < 4 {
        return Err(Error::Precondition(format!(
            "cubic graphs exist only for even n >= 4, got n={n}"
        )));
    }
    Ok(CubicStream::new(n))
}

/// Backtracking stream of labelled connected cubic graphs.
///
/// Vertices are completed in id order. Untouched vertices are interchangeable, so a
/// vertex may only take fresh neighbours from the front of the untouched range; this
/// keeps one breadth-first style labelling of each graph among others. Every
/// isomorphism class appears at least once. Isomorphic duplicates are not removed.
pub struct CubicStream {
    n: usize,
    adj: Vec<u64>,
    deg: Vec<usize>,
    /// Smallest vertex id never chosen as a neighbour; vertex 0 counts as touched.
    fresh: usize,
    frames: Vec<Frame>,
    done: bool,
}

struct Frame {
    v: usize,
    choices: Vec<(u64, usize)>,
    next: usize,
    applied: Option<(u64, usize)>,
}

impl CubicStream {
    fn new(n: usize) -> Self {
        let mut s = CubicStream {
            n,
            adj: vec![0; n],
            deg: vec![0; n],
            fresh: 1,
            frames: Vec::new(),
            done: false,
        };
        let root = s.frame_for(0);
        s.frames.push(root);
        s
    }

    fn frame_for(&self, v: usize) -> Frame {
        let mut choices = Vec::new();
        if v < self.fresh {
            let need = 3 - self.deg[v];
            let old: Vec<usize> = (v + 1..self.fresh)
                .filter(|&w| self.deg[w] < 3 && self.adj[v] & (1 << w) == 0)
                .collect();
            for k in 0..=need.min(self.n - self.fresh) {
                let fresh_mask = (self.fresh..self.fresh + k).fold(0u64, |m, w| m | (1 << w));
                for_each_combination(&old, need - k, &mut |mask| {
                    choices.push((mask | fresh_mask, k));
                });
            }
        }
        Frame { v, choices, next: 0, applied: None }
    }

    fn apply(&mut self, v: usize, mask: u64, k: usize) {
        let mut m = mask;
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            self.adj[v] |= 1 << w;
            self.adj[w] |= 1 << v;
            self.deg[v] += 1;
            self.deg[w] += 1;
            m &= m - 1;
        }
        self.fresh += k;
    }

    fn undo(&mut self, v: usize, mask: u64, k: usize) {
        let mut m = mask;
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            self.adj[v] &= !(1 << w);
            self.adj[w] &= !(1 << v);
            self.deg[v] -= 1;
            self.deg[w] -= 1;
            m &= m - 1;
        }
        self.fresh -= k;
    }

    fn current_graph(&self) -> Graph {
        let edges: Vec<_> = (0..self.n)
            .flat_map(|u| {
                let row = self.adj[u];
                (u + 1..self.n).filter(move |&w| row & (1 << w) != 0).map(move |w| (u, w))
            })
            .collect();
        Graph::new(self.n, &edges).expect("enumerated edges are valid")
    }
}

impl Iterator for CubicStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.done {
            return None;
        }
        loop {
            let Some(top) = self.frames.last_mut() else {
                self.done = true;
                return None;
            };
            let v = top.v;
            if let Some((mask, k)) = top.applied.take() {
                self.undo(v, mask, k);
            }
            let top = self.frames.last_mut().expect("frame present");
            if top.next == top.choices.len() {
                self.frames.pop();
                continue;
            }
            let (mask, k) = top.choices[top.next];
            top.next += 1;
            top.applied = Some((mask, k));
            self.apply(v, mask, k);
            if v + 1 == self.n {
                if self.fresh == self.n {
                    return Some(self.current_graph());
                }
                continue;
            }
            let frame = self.frame_for(v + 1);
            self.frames.push(frame);
        }
    }
}

fn for_each_combination(items: &[usize], k: usize, f: &mut impl FnMut(u64)) {
    fn rec(items: &[usize], k: usize, start: usize, acc: u64, f: &mut impl FnMut(u64)) {
        if k == 0 {
            f(acc);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k {
                break;
            }
            rec(items, k - 1, i + 1, acc | (1 << items[i]), f);
        }
    }
    rec(items, k, 0, 0, f);
}
