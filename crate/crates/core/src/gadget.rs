//! The concentric-cycle local-replacement gadget and the reduction `G -> G*`.
//!
//! A gadget has `cycles` rings of `cycle_len` vertices. Ring `r` position `j` has id
//! `r * cycle_len + j`. Consecutive positions on a ring are adjacent, and rings `r` and
//! `r + 1` are joined by a spoke at position `j` iff `j ≡ r (mod 2)`, so every vertex
//! carries at most one spoke. Outlets sit on unspoked positions of the outermost
//! ring.
//!
//! The reduction replaces every vertex of `G` by a gadget and realises each edge
//! `(u, v)` as an edge between outlet `u` of gadget `v` and outlet `v` of gadget `u`.
//! Outlets used this way are *marked*.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separator::{validate_partition, SeparatorPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GadgetSpec {
    pub cycles: usize,
    pub cycle_len: usize,
    pub outlets: usize,
    /// Pair off leftover degree-2 vertices so the reduced graph is 3-regular.
    pub three_regular: bool,
    /// Install each original edge twice, on distinct outlet pairs.
    pub doubled: bool,
}

impl GadgetSpec {
    pub fn new(cycles: usize, cycle_len: usize, outlets: usize) -> Self {
        GadgetSpec { cycles, cycle_len, outlets, three_regular: false, doubled: false }
    }

    /// `4n²` rings of `4n²` vertices with `n²` outlets, for an `n`-vertex input.
    pub fn paper_scale(n: usize) -> Self {
        GadgetSpec::new(4 * n * n, 4 * n * n, n * n)
    }

    pub fn three_regular(mut self, on: bool) -> Self {
        self.three_regular = on;
        self
    }

    pub fn doubled(mut self, on: bool) -> Self {
        self.doubled = on;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::GadgetSpec(m));
        if self.cycle_len % 2 == 1 {
            return bad(format!("cycle length {} is odd", self.cycle_len));
        }
        if self.cycle_len < 4 {
            return bad(format!("cycle length {} is below 4", self.cycle_len));
        }
        if self.cycles < 2 {
            return bad(format!("need at least 2 cycles, got {}", self.cycles));
        }
        if self.outlets == 0 || self.outlets > self.cycle_len / 2 {
            return bad(format!(
                "outlet count {} outside 1..={}",
                self.outlets,
                self.cycle_len / 2
            ));
        }
        if self.three_regular && !self.cycle_len.is_multiple_of(4) {
            return bad(format!(
                "3-regular gadget needs cycle length divisible by 4, got {}",
                self.cycle_len
            ));
        }
        Ok(())
    }

    pub fn vertices_per_gadget(&self) -> usize {
        self.cycles * self.cycle_len
    }

    fn outer_parity(&self) -> usize {
        (self.cycles - 1) % 2
    }

    /// Positions on the outermost ring that carry no spoke, ascending.
    pub fn unspoked_outer_positions(&self) -> Vec<usize> {
        (self.outer_parity()..self.cycle_len).step_by(2).collect()
    }

    /// Outer-ring position of outlet `k`: the unspoked positions spread evenly, so
    /// consecutive outlets are `cycle_len / outlets` apart when that is even.
    pub fn outlet_position(&self, k: usize) -> usize {
        let slots = self.cycle_len / 2;
        2 * (k * slots / self.outlets) + self.outer_parity()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetInstance {
    pub spec: GadgetSpec,
    pub graph: Graph,
    /// Outlet vertex ids, indexed by outlet number.
    pub outlets: Vec<usize>,
}

impl GadgetInstance {
    pub fn vertex(&self, ring: usize, position: usize) -> usize {
        ring * self.spec.cycle_len + position
    }

    /// `(ring, position)` of a gadget vertex.
    pub fn position(&self, id: usize) -> (usize, usize) {
        (id / self.spec.cycle_len, id % self.spec.cycle_len)
    }
}

fn gadget_edges(spec: &GadgetSpec) -> Vec<(usize, usize)> {
    let (c, s) = (spec.cycles, spec.cycle_len);
    let id = |r: usize, j: usize| r * s + j;
    let mut edges = Vec::with_capacity(c * s + (c - 1) * s / 2);
    for r in 0..c {
        for j in 0..s {
            edges.push((id(r, j), id(r, (j + 1) % s)));
        }
    }
    for r in 0..c - 1 {
        for j in (r % 2..s).step_by(2) {
            edges.push((id(r, j), id(r + 1, j)));
        }
    }
    edges
}

pub fn build_gadget(spec: &GadgetSpec) -> Result<GadgetInstance> {
    spec.validate()?;
    let graph = Graph::new(spec.vertices_per_gadget(), &gadget_edges(spec))?;
    let outer = (spec.cycles - 1) * spec.cycle_len;
    let outlets = (0..spec.outlets).map(|k| outer + spec.outlet_position(k)).collect();
    Ok(GadgetInstance { spec: *spec, graph, outlets })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionStage {
    GadgetsPlaced,
    EdgesInstalled,
    ThreeRegular,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetEntry {
    pub original: usize,
    pub offset: usize,
    /// Global ids of this gadget's outlets, by outlet number.
    pub outlets: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstalledEdge {
    pub original: (usize, usize),
    pub copy: usize,
    pub endpoints: (usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaddingVertex {
    pub gadget: usize,
    pub vertex: usize,
    pub partner: usize,
    /// Outer-ring edge replaced by a path through the padding vertex.
    pub subdivided: (usize, usize),
}

/// Provenance of every vertex and installed edge of `G*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionMap {
    pub original_n: usize,
    pub spec: GadgetSpec,
    pub stage: ReductionStage,
    pub gadgets: Vec<GadgetEntry>,
    pub installed: Vec<InstalledEdge>,
    pub marked: Vec<usize>,
    pub pairing_edges: Vec<(usize, usize)>,
    pub padding: Vec<PaddingVertex>,
}

impl ReductionMap {
    pub fn total_vertices(&self) -> usize {
        self.original_n * self.spec.vertices_per_gadget() + self.padding.len()
    }

    /// Original vertex whose gadget contains `id`.
    pub fn owner(&self, id: usize) -> Option<usize> {
        let per = self.spec.vertices_per_gadget();
        if id < self.original_n * per {
            Some(id / per)
        } else {
            self.padding.iter().find(|p| p.vertex == id).map(|p| p.gadget)
        }
    }

    pub fn is_outlet(&self, id: usize) -> bool {
        self.owner(id)
            .is_some_and(|v| self.gadgets[v].outlets.binary_search(&id).is_ok())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Replaces every vertex of `g` with a gadget and installs the original edges.
pub fn reduce(g: &Graph, spec: &GadgetSpec) -> Result<(Graph, ReductionMap)> {
    spec.validate()?;
    let n = g.n();
    if spec.outlets < n {
        return Err(Error::Capacity(format!(
            "{} outlets cannot index {n} original vertices",
            spec.outlets
        )));
    }
    let copies = if spec.doubled { 2 } else { 1 };
    if copies * n > spec.outlets {
        return Err(Error::Capacity(format!(
            "doubled installation needs {} outlets, spec has {}",
            copies * n,
            spec.outlets
        )));
    }
    let gadget = build_gadget(spec)?;
    let per = spec.vertices_per_gadget();
    let mut edges = Vec::with_capacity(n * gadget.graph.m() + copies * g.m());
    let mut gadgets = Vec::with_capacity(n);
    for v in 0..n {
        let offset = v * per;
        edges.extend(gadget.graph.edges().iter().map(|&(a, b)| (a + offset, b + offset)));
        gadgets.push(GadgetEntry {
            original: v,
            offset,
            outlets: gadget.outlets.iter().map(|&o| o + offset).collect(),
        });
    }
    let mut installed = Vec::with_capacity(copies * g.m());
    let mut marked = BTreeSet::new();
    for &(u, v) in g.edges() {
        for copy in 0..copies {
            let a = gadgets[v].outlets[copy * n + u];
            let b = gadgets[u].outlets[copy * n + v];
            edges.push((a, b));
            marked.insert(a);
            marked.insert(b);
            installed.push(InstalledEdge { original: (u, v), copy, endpoints: (a, b) });
        }
    }
    let gstar = Graph::new(n * per, &edges)?;
    let map = ReductionMap {
        original_n: n,
        spec: *spec,
        stage: ReductionStage::EdgesInstalled,
        gadgets,
        installed,
        marked: marked.into_iter().collect(),
        pairing_edges: Vec::new(),
        padding: Vec::new(),
    };
    if spec.three_regular {
        three_regularize(&gstar, &map)
    } else {
        Ok((gstar, map))
    }
}

/// Raises every remaining degree-2 gadget vertex to degree 3.
///
/// Innermost unspoked vertices get antipodal chords. On the outermost ring the
/// unspoked non-outlet vertices are paired in position order, then the unmarked
/// outlets (plus any unpaired non-outlet vertex) are paired in position order. An
/// odd vertex out is joined to a new padding vertex that subdivides the next outer
/// ring edge not incident to it.
pub fn three_regularize(gstar: &Graph, map: &ReductionMap) -> Result<(Graph, ReductionMap)> {
    if map.stage != ReductionStage::EdgesInstalled {
        return Err(Error::Precondition(format!(
            "three_regularize needs installed edges, reduction stage is {:?}",
            map.stage
        )));
    }
    let spec = map.spec;
    if !spec.cycle_len.is_multiple_of(4) {
        return Err(Error::GadgetSpec(format!(
            "3-regular gadget needs cycle length divisible by 4, got {}",
            spec.cycle_len
        )));
    }
    if gstar.n() != map.total_vertices() {
        return Err(Error::Dimension { expected: map.total_vertices(), found: gstar.n() });
    }
    let (c, s) = (spec.cycles, spec.cycle_len);
    let marked: BTreeSet<usize> = map.marked.iter().copied().collect();
    let mut removed = BTreeSet::new();
    let mut added = Vec::new();
    let mut pairing_edges = Vec::new();
    let mut padding = Vec::new();
    let mut next_id = gstar.n();

    for entry in &map.gadgets {
        let at = |r: usize, j: usize| entry.offset + r * s + j;
        for j in (1..s / 2).step_by(2) {
            pairing_edges.push((at(0, j), at(0, j + s / 2)));
        }
        let outlet_positions: BTreeSet<usize> =
            entry.outlets.iter().map(|&o| o - entry.offset - (c - 1) * s).collect();
        let unspoked = spec.unspoked_outer_positions();
        let plain: Vec<usize> =
            unspoked.iter().copied().filter(|j| !outlet_positions.contains(j)).collect();
        for pair in plain.chunks_exact(2) {
            pairing_edges.push((at(c - 1, pair[0]), at(c - 1, pair[1])));
        }
        let mut pool: Vec<usize> = outlet_positions
            .iter()
            .copied()
            .filter(|&j| !marked.contains(&at(c - 1, j)))
            .collect();
        if plain.len() % 2 == 1 {
            pool.push(*plain.last().expect("odd length is non-empty"));
        }
        pool.sort_unstable();
        for pair in pool.chunks_exact(2) {
            pairing_edges.push((at(c - 1, pair[0]), at(c - 1, pair[1])));
        }
        if pool.len() % 2 == 1 {
            let j = *pool.last().expect("odd length is non-empty");
            let (a, b) = (at(c - 1, (j + 1) % s), at(c - 1, (j + 2) % s));
            let x = next_id;
            next_id += 1;
            removed.insert((a.min(b), a.max(b)));
            added.extend([(a, x), (x, b), (x, at(c - 1, j))]);
            padding.push(PaddingVertex {
                gadget: entry.original,
                vertex: x,
                partner: at(c - 1, j),
                subdivided: (a, b),
            });
        }
    }

    let mut edges: Vec<(usize, usize)> =
        gstar.edges().iter().copied().filter(|e| !removed.contains(e)).collect();
    edges.extend(pairing_edges.iter().copied());
    edges.extend(added);
    let graph = Graph::new(next_id, &edges)?;
    if !graph.is_k_regular(3) {
        return Err(Error::Precondition(
            "pairing did not produce a 3-regular graph; was the input built by reduce?".into(),
        ));
    }
    let mut out = map.clone();
    out.stage = ReductionStage::ThreeRegular;
    out.pairing_edges = pairing_edges;
    out.padding = padding;
    Ok((graph, out))
}

/// How a separator of `G*` sits relative to the gadgets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PullbackReport {
    pub outlet_only: bool,
    pub marked_only: bool,
    pub independent: bool,
    /// Separator vertices that are not outlets.
    pub interior_separator_vertices: Vec<usize>,
    /// Original vertices whose gadget has vertices on both sides.
    pub split_vertices: Vec<usize>,
}

pub fn separator_pullback(
    gstar: &Graph,
    map: &ReductionMap,
    p: &SeparatorPartition,
) -> Result<PullbackReport> {
    let expected = map.total_vertices();
    for part in [&p.separator, &p.side1, &p.side2] {
        if part.universe() != expected {
            return Err(Error::Dimension { expected, found: part.universe() });
        }
    }
    if gstar.n() != expected {
        return Err(Error::Dimension { expected, found: gstar.n() });
    }
    validate_partition(gstar, p).map_err(Error::InvalidPartition)?;
    let interior: Vec<usize> = p.separator.iter().filter(|&v| !map.is_outlet(v)).collect();
    let marked_only = p.separator.iter().all(|v| map.marked.binary_search(&v).is_ok());
    let independent = !gstar
        .edges()
        .iter()
        .any(|&(u, v)| p.separator.contains(u) && p.separator.contains(v));
    let mut in_side = vec![[false; 2]; map.original_n];
    for (i, side) in [&p.side1, &p.side2].into_iter().enumerate() {
        for v in side.iter() {
            if let Some(owner) = map.owner(v) {
                in_side[owner][i] = true;
            }
        }
    }
    let split_vertices = (0..map.original_n).filter(|&v| in_side[v][0] && in_side[v][1]).collect();
    Ok(PullbackReport {
        outlet_only: interior.is_empty(),
        marked_only,
        independent,
        interior_separator_vertices: interior,
        split_vertices,
    })
}
