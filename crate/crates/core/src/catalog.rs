//! Canonical labelling for small graphs and a catalog of all connected graphs up to
//! isomorphism.
//!
//! The canonical form uses colour refinement with individualisation: every leaf of the
//! search tree gives a labelling, and the lexicographically largest adjacency code
//! wins. No automorphism pruning, so this is only meant for graphs of a dozen or so
//! vertices.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `n` for which [`connected_graphs`] will build a catalog.
pub const CATALOG_CAP: usize = 8;

/// An isomorphism-invariant code: two graphs are isomorphic iff their forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    /// The graph relabelled into canonical order.
    pub fn to_graph(&self) -> Graph {
        let edges: Vec<_> = (0..self.n)
            .flat_map(|u| {
                let row = self.rows[u];
                (u + 1..self.n).filter(move |&w| row & (1 << w) != 0).map(move |w| (u, w))
            })
            .collect();
        Graph::new(self.n, &edges).expect("canonical rows encode a simple graph")
    }
}

/// Canonical form of `g`. Panics for graphs with more than 64 vertices.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let masks = g.neighbor_masks().expect("canonical_form supports at most 64 vertices");
    let n = g.n();
    let mut best: Option<Vec<u64>> = None;
    let initial = if n == 0 { Vec::new() } else { vec![(0..n).collect::<Vec<_>>()] };
    search(&masks, initial, &mut best);
    CanonicalForm { n, rows: best.unwrap_or_default() }
}

fn search(masks: &[u64], cells: Vec<Vec<usize>>, best: &mut Option<Vec<u64>>) {
    let cells = refine(masks, cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = code_for(masks, &order);
            if best.as_ref().is_none_or(|b| code > *b) {
                *best = Some(code);
            }
        }
        Some(i) => {
            for &v in &cells[i] {
                let mut next = Vec::with_capacity(cells.len() + 1);
                next.extend_from_slice(&cells[..i]);
                next.push(vec![v]);
                next.push(cells[i].iter().copied().filter(|&w| w != v).collect());
                next.extend_from_slice(&cells[i + 1..]);
                search(masks, next, best);
            }
        }
    }
}

/// Splits cells by neighbour counts into every cell until the partition is equitable.
fn refine(masks: &[u64], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let cell_masks: Vec<u64> =
            cells.iter().map(|c| c.iter().fold(0u64, |m, &v| m | (1 << v))).collect();
        let mut split_at = None;
        for (i, cell) in cells.iter().enumerate() {
            if cell.len() < 2 {
                continue;
            }
            let sig = |v: usize| -> Vec<u32> {
                cell_masks.iter().map(|cm| (masks[v] & cm).count_ones()).collect()
            };
            let first = sig(cell[0]);
            if cell[1..].iter().any(|&v| sig(v) != first) {
                let mut keyed: Vec<(Vec<u32>, usize)> = cell.iter().map(|&v| (sig(v), v)).collect();
                keyed.sort();
                let mut parts: Vec<Vec<usize>> = Vec::new();
                let mut last: Option<&Vec<u32>> = None;
                for (k, v) in &keyed {
                    if last != Some(k) {
                        parts.push(Vec::new());
                        last = Some(k);
                    }
                    parts.last_mut().expect("part pushed").push(*v);
                }
                split_at = Some((i, parts));
                break;
            }
        }
        match split_at {
            Some((i, parts)) => {
                cells.splice(i..=i, parts);
            }
            None => return cells,
        }
    }
}

fn code_for(masks: &[u64], order: &[usize]) -> Vec<u64> {
    let mut position = vec![0usize; masks.len()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    order
        .iter()
        .map(|&v| {
            let mut row = 0u64;
            let mut m = masks[v];
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                row |= 1 << position[w];
                m &= m - 1;
            }
            row
        })
        .collect()
}

/// One canonical representative of every graph (connected or not) on `n` vertices.
fn all_graphs(n: usize) -> Vec<CanonicalForm> {
    if n == 0 {
        return vec![canonical_form(&Graph::empty(0))];
    }
    let smaller = all_graphs(n - 1);
    extend_by_one_vertex(&smaller, n, false)
}

fn extend_by_one_vertex(base: &[CanonicalForm], n: usize, connected_only: bool) -> Vec<CanonicalForm> {
    let mut seen = HashSet::new();
    for form in base {
        let g = form.to_graph();
        for nbrs in 0u64..(1 << (n - 1)) {
            if connected_only && nbrs == 0 && n > 1 {
                continue;
            }
            let mut edges = g.edges().to_vec();
            edges.extend((0..n - 1).filter(|&w| nbrs & (1 << w) != 0).map(|w| (w, n - 1)));
            let h = Graph::new(n, &edges).expect("extension edges are valid");
            if connected_only && !h.is_connected() {
                continue;
            }
            seen.insert(canonical_form(&h));
        }
    }
    let mut forms: Vec<_> = seen.into_iter().collect();
    forms.sort();
    forms
}

/// Every connected graph on `n` vertices up to isomorphism, in canonical labelling.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > CATALOG_CAP {
        return Err(Error::Cap { what: "catalog size", value: n, cap: CATALOG_CAP });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let base = all_graphs(n - 1);
    Ok(extend_by_one_vertex(&base, n, true).iter().map(CanonicalForm::to_graph).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isomorphic_relabellings_agree() {
        let c6 = Graph::cycle(6);
        let relabelled = Graph::new(6, &[(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]).unwrap();
        assert_eq!(canonical_form(&c6), canonical_form(&relabelled));
        assert_ne!(canonical_form(&c6), canonical_form(&Graph::complete_bipartite(2, 4)));
        // K_{3,3} and the prism are both cubic on 6 vertices but not isomorphic.
        let prism =
            Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
                .unwrap();
        assert_ne!(canonical_form(&prism), canonical_form(&Graph::complete_bipartite(3, 3)));
    }

    #[test]
    fn known_counts_of_all_graphs() {
        let counts: Vec<usize> = (1..=5).map(|n| all_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn known_counts_of_connected_graphs() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        assert!(connected_graphs(9).is_err());
    }
}
