//! Finite posets of subsemimodules ordered by inclusion: Hasse diagram,
//! height, width and DOT export.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::semimodule::Subsemimodule;

/// Subsemimodules ordered by inclusion. Used for the k-ideal lattice, the
/// full subsemimodule lattice and the direct-summand poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KIdealLattice {
    nodes: Vec<Subsemimodule>,
    covers: Vec<(usize, usize)>,
    height: usize,
    width: usize,
    labels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeMetrics {
    pub height: usize,
    pub width: usize,
    /// Node indices of a longest chain, smallest first.
    pub chain: Vec<usize>,
}

impl KIdealLattice {
    /// `labels` are the carrier's element labels, used for display only.
    pub fn from_nodes(mut nodes: Vec<Subsemimodule>, labels: Vec<String>) -> Self {
        nodes.sort();
        nodes.dedup();
        let n = nodes.len();
        let below: Vec<Vec<bool>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| i != j && nodes[i].is_subset(&nodes[j]))
                    .collect()
            })
            .collect();
        // nodes are sorted by cardinality, so strict predecessors come first
        let mut covers = Vec::new();
        for j in 0..n {
            for i in 0..j {
                if below[j][i] && !(i + 1..j).any(|k| below[k][i] && below[j][k]) {
                    covers.push((i, j));
                }
            }
        }
        let height = longest_chain(n, &covers).len().saturating_sub(1);
        let width = max_antichain(n, &below);
        KIdealLattice {
            nodes,
            covers,
            height,
            width,
            labels,
        }
    }

    pub fn nodes(&self) -> &[Subsemimodule] {
        &self.nodes
    }

    /// Covering pairs `(lower, upper)` as node indices.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Edge count of a longest chain.
    pub fn height(&self) -> usize {
        self.height
    }

    /// Size of a largest antichain.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn position(&self, node: &Subsemimodule) -> Option<usize> {
        self.nodes.binary_search(node).ok()
    }

    pub fn contains(&self, node: &Subsemimodule) -> bool {
        self.position(node).is_some()
    }

    pub fn metrics(&self) -> LatticeMetrics {
        LatticeMetrics {
            height: self.height,
            width: self.width,
            chain: longest_chain(self.nodes.len(), &self.covers),
        }
    }

    /// Longest strictly descending chain, counted in edges, found by a
    /// separate search from the top down.
    pub fn longest_descending(&self) -> usize {
        let n = self.nodes.len();
        let mut best = vec![0usize; n];
        // best[i] is the longest chain from node i upwards; upper ends of
        // covers always have larger indices
        for i in (0..n).rev() {
            for &(lo, hi) in &self.covers {
                if lo == i {
                    best[i] = best[i].max(best[hi] + 1);
                }
            }
        }
        best.into_iter().max().unwrap_or(0)
    }

    pub fn node_label(&self, i: usize) -> String {
        let parts: Vec<&str> = self.nodes[i]
            .set()
            .iter()
            .map(|x| self.labels[x].as_str())
            .collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Hasse diagram as a DOT digraph, bottom-up, covering edges only.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", escape(name));
        let _ = writeln!(out, "  rankdir=BT;");
        let _ = writeln!(out, "  node [shape=box];");
        for i in 0..self.nodes.len() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", escape(&self.node_label(i)));
        }
        for &(lo, hi) in &self.covers {
            let _ = writeln!(out, "  n{lo} -> n{hi};");
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Longest path in the cover DAG; ties go to the lowest node indices.
fn longest_chain(n: usize, covers: &[(usize, usize)]) -> Vec<usize> {
    if n == 0 {
        return Vec::new();
    }
    let mut best = vec![0usize; n];
    let mut prev = vec![usize::MAX; n];
    // covers are emitted grouped by upper node in increasing order
    for &(lo, hi) in covers {
        if best[lo] + 1 > best[hi] {
            best[hi] = best[lo] + 1;
            prev[hi] = lo;
        }
    }
    let top = (0..n).fold(0, |b, i| if best[i] > best[b] { i } else { b });
    let mut chain = vec![top];
    while prev[*chain.last().unwrap()] != usize::MAX {
        chain.push(prev[*chain.last().unwrap()]);
    }
    chain.reverse();
    chain
}

/// Dilworth: width = n - maximum matching in the strict-order bipartite graph.
fn max_antichain(n: usize, below: &[Vec<bool>]) -> usize {
    let mut match_of_upper = vec![usize::MAX; n];
    fn augment(
        i: usize,
        below: &[Vec<bool>],
        seen: &mut [bool],
        match_of_upper: &mut [usize],
    ) -> bool {
        for j in 0..below.len() {
            if below[j][i] && !seen[j] {
                seen[j] = true;
                if match_of_upper[j] == usize::MAX
                    || augment(match_of_upper[j], below, seen, match_of_upper)
                {
                    match_of_upper[j] = i;
                    return true;
                }
            }
        }
        false
    }
    let mut matched = 0;
    for i in 0..n {
        let mut seen = vec![false; n];
        if augment(i, below, &mut seen, &mut match_of_upper) {
            matched += 1;
        }
    }
    n - matched
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elemset::ElemSet;

    fn node(universe: usize, xs: &[usize]) -> Subsemimodule {
        Subsemimodule::trusted(ElemSet::from_iter(universe, xs.iter().copied()))
    }

    #[test]
    fn diamond() {
        let nodes = vec![node(4, &[0]), node(4, &[0, 1]), node(4, &[0, 2]), node(4, &[0, 1, 2, 3])];
        let labels = (0..4).map(|i| i.to_string()).collect();
        let lat = KIdealLattice::from_nodes(nodes, labels);
        assert_eq!(lat.covers(), &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(lat.height(), 2);
        assert_eq!(lat.width(), 2);
        assert_eq!(lat.metrics().chain, vec![0, 1, 3]);
        assert_eq!(lat.longest_descending(), 2);
    }

    #[test]
    fn single_node() {
        let lat = KIdealLattice::from_nodes(vec![node(1, &[0])], vec!["0".into()]);
        assert_eq!(lat.height(), 0);
        assert_eq!(lat.width(), 1);
        assert!(lat.covers().is_empty());
        assert_eq!(
            lat.to_dot("t"),
            "digraph \"t\" {\n  rankdir=BT;\n  node [shape=box];\n  n0 [label=\"{0}\"];\n}\n"
        );
    }
}
