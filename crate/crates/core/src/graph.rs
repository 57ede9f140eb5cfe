//! Bipartite communication graphs: construction, classification,
//! canonicalization, alternating-path enumeration, half-squares, and
//! exhaustive enumeration of tree shapes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::game::{GameError, MixedAction};

/// A message node, optionally carrying the receiver's mixed action bound to
/// it by an equilibrium. Shape enumeration leaves actions unbound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiNode {
    pub message: String,
    pub action: Option<MixedAction>,
}

/// Undirected bipartite graph on states and message-action nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommGraph {
    pub states: Vec<String>,
    pub nodes: Vec<PiNode>,
    /// Pairs `(state index, node index)`.
    pub edges: BTreeSet<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClass {
    Tree,
    Forest,
    CyclicConnected,
    CyclicDisconnected,
}

impl GraphClass {
    pub fn is_acyclic(self) -> bool {
        matches!(self, GraphClass::Tree | GraphClass::Forest)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GraphClass::Tree => "tree",
            GraphClass::Forest => "forest",
            GraphClass::CyclicConnected => "cyclic-connected",
            GraphClass::CyclicDisconnected => "cyclic-disconnected",
        }
    }
}

impl CommGraph {
    pub fn new(
        states: Vec<String>,
        nodes: Vec<PiNode>,
        edges: BTreeSet<(usize, usize)>,
    ) -> Result<Self, GameError> {
        for &(s, n) in &edges {
            if s >= states.len() || n >= nodes.len() {
                return Err(GameError::Invalid(format!("edge ({s},{n}) out of range")));
            }
        }
        for s in 0..states.len() {
            if !edges.iter().any(|&(es, _)| es == s) {
                return Err(GameError::Invalid(format!("state {:?} has no edge", states[s])));
            }
        }
        for n in 0..nodes.len() {
            if !edges.iter().any(|&(_, en)| en == n) {
                return Err(GameError::Invalid(format!("node {:?} has no edge", nodes[n].message)));
            }
        }
        Ok(CommGraph { states, nodes, edges })
    }

    pub fn n_states(&self) -> usize {
        self.states.len()
    }

    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    /// Node indices adjacent to a state.
    pub fn nodes_of_state(&self, s: usize) -> Vec<usize> {
        self.edges.iter().filter(|&&(es, _)| es == s).map(|&(_, n)| n).collect()
    }

    /// State indices adjacent to a node.
    pub fn states_of_node(&self, n: usize) -> Vec<usize> {
        self.edges.iter().filter(|&&(_, en)| en == n).map(|&(s, _)| s).collect()
    }

    pub fn classify(&self) -> GraphClass {
        let total = self.n_states() + self.n_nodes();
        // Union-find over the disjoint vertex sets.
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        let mut components = total;
        let mut cyclic = false;
        for &(s, n) in &self.edges {
            let a = find(&mut parent, s);
            let b = find(&mut parent, self.n_states() + n);
            if a == b {
                cyclic = true;
            } else {
                parent[a] = b;
                components -= 1;
            }
        }
        let connected = components == 1;
        match (cyclic, connected) {
            (false, true) => GraphClass::Tree,
            (false, false) => GraphClass::Forest,
            (true, true) => GraphClass::CyclicConnected,
            (true, false) => GraphClass::CyclicDisconnected,
        }
    }

    /// Connected components as (state indices, node indices).
    pub fn components(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let total = self.n_states() + self.n_nodes();
        let mut seen = vec![false; total];
        let mut out = Vec::new();
        for start in 0..total {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = true;
            let mut states = Vec::new();
            let mut nodes = Vec::new();
            while let Some(v) = stack.pop() {
                if v < self.n_states() {
                    states.push(v);
                    for n in self.nodes_of_state(v) {
                        let w = self.n_states() + n;
                        if !seen[w] {
                            seen[w] = true;
                            stack.push(w);
                        }
                    }
                } else {
                    let n = v - self.n_states();
                    nodes.push(n);
                    for s in self.states_of_node(n) {
                        if !seen[s] {
                            seen[s] = true;
                            stack.push(s);
                        }
                    }
                }
            }
            states.sort_unstable();
            nodes.sort_unstable();
            out.push((states, nodes));
        }
        out
    }

    /// Every simple alternating path `(state, node, state, node, ...)` as a
    /// list of `(state, node)` pairs, yielded once per direction.
    pub fn alternating_paths(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for s in 0..self.n_states() {
            let mut used_states = vec![false; self.n_states()];
            let mut used_nodes = vec![false; self.n_nodes()];
            used_states[s] = true;
            let mut prefix = Vec::new();
            self.extend_path(s, &mut prefix, &mut used_states, &mut used_nodes, &mut out);
        }
        out
    }

    fn extend_path(
        &self,
        at_state: usize,
        prefix: &mut Vec<(usize, usize)>,
        used_states: &mut Vec<bool>,
        used_nodes: &mut Vec<bool>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        for n in self.nodes_of_state(at_state) {
            if used_nodes[n] {
                continue;
            }
            used_nodes[n] = true;
            prefix.push((at_state, n));
            out.push(prefix.clone());
            for s2 in self.states_of_node(n) {
                if used_states[s2] {
                    continue;
                }
                used_states[s2] = true;
                self.extend_path(s2, prefix, used_states, used_nodes, out);
                used_states[s2] = false;
            }
            prefix.pop();
            used_nodes[n] = false;
        }
    }

    /// Half square on the chosen side: vertices of that side, with an edge
    /// between two vertices iff they share a neighbour in the graph.
    pub fn half_square(&self, on_states: bool) -> HalfSquare {
        let n = if on_states { self.n_states() } else { self.n_nodes() };
        let mut adj = vec![BTreeSet::new(); n];
        let others = if on_states { self.n_nodes() } else { self.n_states() };
        for o in 0..others {
            let side = if on_states { self.states_of_node(o) } else { self.nodes_of_state(o) };
            for i in 0..side.len() {
                for j in i + 1..side.len() {
                    adj[side[i]].insert(side[j]);
                    adj[side[j]].insert(side[i]);
                }
            }
        }
        HalfSquare { adj }
    }

    /// Graph distance between a state and a node, `None` if disconnected.
    pub fn distance(&self, state: usize, node: usize) -> Option<usize> {
        let total = self.n_states() + self.n_nodes();
        let target = self.n_states() + node;
        let mut dist = vec![usize::MAX; total];
        dist[state] = 0;
        let mut queue = std::collections::VecDeque::from([state]);
        while let Some(v) = queue.pop_front() {
            if v == target {
                return Some(dist[v]);
            }
            let neighbours: Vec<usize> = if v < self.n_states() {
                self.nodes_of_state(v).into_iter().map(|n| n + self.n_states()).collect()
            } else {
                self.states_of_node(v - self.n_states())
            };
            for w in neighbours {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Largest finite state-to-node distance.
    pub fn diameter_bound(&self) -> usize {
        let mut d = 0;
        for s in 0..self.n_states() {
            for n in 0..self.n_nodes() {
                if let Some(x) = self.distance(s, n) {
                    d = d.max(x);
                }
            }
        }
        d
    }

    /// Deterministic DOT rendering: states as boxes, message nodes as
    /// circles, edges in sorted order.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "graph {name} {{").unwrap();
        for (i, s) in self.states.iter().enumerate() {
            writeln!(out, "  s{i} [label=\"{s}\", shape=box];").unwrap();
        }
        for (i, n) in self.nodes.iter().enumerate() {
            writeln!(out, "  m{i} [label=\"{}\", shape=circle];", n.message).unwrap();
        }
        for &(s, n) in &self.edges {
            writeln!(out, "  s{s} -- m{n};").unwrap();
        }
        writeln!(out, "}}").unwrap();
        out
    }
}

/// Simple graph on one side of the bipartition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfSquare {
    pub adj: Vec<BTreeSet<usize>>,
}

impl HalfSquare {
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(&j)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|nb| nb.len() == n - 1)
    }

    /// A star: one center adjacent to all others, no other edges. Complete
    /// graphs on one or two vertices count as (degenerate) stars.
    pub fn star_center(&self) -> Option<usize> {
        let n = self.n();
        if n <= 2 {
            return Some(0);
        }
        let center = (0..n).find(|&i| self.adj[i].len() == n - 1)?;
        for i in 0..n {
            if i != center && self.adj[i] != BTreeSet::from([center]) {
                return None;
            }
        }
        Some(center)
    }
}

/// All spanning-tree communication shapes on `n_states` labelled states and
/// up to `max_messages` anonymous messages, canonicalized up to message
/// relabelling. Message neighbourhoods are pairwise distinct: duplicate
/// neighbourhoods either create a cycle or consolidate to one message.
pub fn enumerate_trees(state_labels: &[String], max_messages: usize) -> Vec<CommGraph> {
    enumerate_acyclic(state_labels, max_messages, true)
}

/// All spanning-forest shapes with at least two components (acyclic,
/// disconnected, all vertices covered), canonicalized like the trees.
pub fn enumerate_forests(state_labels: &[String], max_messages: usize) -> Vec<CommGraph> {
    enumerate_acyclic(state_labels, max_messages, false)
}

fn enumerate_acyclic(state_labels: &[String], max_messages: usize, connected: bool) -> Vec<CommGraph> {
    let n = state_labels.len();
    assert!(n >= 1 && n <= 16, "state count out of supported range");
    assert!(max_messages >= 1);
    let mut shapes: BTreeSet<Vec<u32>> = BTreeSet::new();
    // A shape is a sorted list of distinct nonempty neighbourhood bitmasks,
    // one per message.
    let all_masks: Vec<u32> = (1..(1u32 << n)).collect();
    for k in 1..=max_messages {
        let mut chosen: Vec<u32> = Vec::with_capacity(k);
        pick_masks(&all_masks, 0, k, n, connected, &mut chosen, &mut shapes);
    }
    shapes
        .into_iter()
        .map(|masks| {
            let nodes: Vec<PiNode> = (0..masks.len())
                .map(|i| PiNode { message: format!("m{i}"), action: None })
                .collect();
            let mut edges = BTreeSet::new();
            for (i, mask) in masks.iter().enumerate() {
                for s in 0..n {
                    if mask & (1 << s) != 0 {
                        edges.insert((s, i));
                    }
                }
            }
            CommGraph::new(state_labels.to_vec(), nodes, edges).expect("enumerated shape is valid")
        })
        .collect()
}

fn pick_masks(
    all: &[u32],
    from: usize,
    remaining: usize,
    n: usize,
    connected: bool,
    chosen: &mut Vec<u32>,
    shapes: &mut BTreeSet<Vec<u32>>,
) {
    if remaining == 0 {
        if is_acyclic_cover(chosen, n, connected) {
            shapes.insert(chosen.clone());
        }
        return;
    }
    // Prune: a spanning acyclic graph has exactly n + k - 1 edges.
    let k_total = chosen.len() + remaining;
    let edges_so_far: u32 = chosen.iter().map(|m| m.count_ones()).sum();
    if edges_so_far as usize + remaining > n + k_total - 1 {
        return;
    }
    for idx in from..all.len() {
        chosen.push(all[idx]);
        pick_masks(all, idx + 1, remaining - 1, n, connected, chosen, shapes);
        chosen.pop();
    }
}

fn is_acyclic_cover(masks: &[u32], n: usize, want_connected: bool) -> bool {
    let k = masks.len();
    let edge_count: u32 = masks.iter().map(|m| m.count_ones()).sum();
    let mut covered = 0u32;
    for m in masks {
        covered |= m;
    }
    if covered != (1 << n) - 1 {
        return false;
    }
    // Acyclic spanning graph: per-component edge budget; check via
    // union-find while counting components.
    let total = n + k;
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    let mut components = total;
    for (i, m) in masks.iter().enumerate() {
        for s in 0..n {
            if m & (1 << s) != 0 {
                let a = find(&mut parent, s);
                let b = find(&mut parent, n + i);
                if a == b {
                    return false; // cycle
                }
                parent[a] = b;
                components -= 1;
            }
        }
    }
    let _ = edge_count;
    if want_connected {
        components == 1
    } else {
        components >= 2
    }
}

/// Canonical key of a graph shape for deduplication up to message
/// relabelling: the sorted list of message neighbourhood state sets.
pub fn shape_key(g: &CommGraph) -> Vec<Vec<usize>> {
    let mut key: Vec<Vec<usize>> = (0..g.n_nodes()).map(|n| g.states_of_node(n)).collect();
    key.sort();
    key
}

/// Convenience map from message label to adjacent state labels.
pub fn message_neighbourhoods(g: &CommGraph) -> BTreeMap<String, Vec<String>> {
    (0..g.n_nodes())
        .map(|n| {
            (
                g.nodes[n].message.clone(),
                g.states_of_node(n).into_iter().map(|s| g.states[s].clone()).collect(),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("t{i}")).collect()
    }

    fn graph(n: usize, masks: &[&[usize]]) -> CommGraph {
        let nodes = (0..masks.len())
            .map(|i| PiNode { message: format!("m{i}"), action: None })
            .collect();
        let mut edges = BTreeSet::new();
        for (i, states) in masks.iter().enumerate() {
            for &s in *states {
                edges.insert((s, i));
            }
        }
        CommGraph::new(labels(n), nodes, edges).unwrap()
    }

    #[test]
    fn classify_examples() {
        // Path: t0 - m0 - t1 - m1 - t2.
        let path = graph(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(path.classify(), GraphClass::Tree);

        // Disconnected acyclic: t0 - m0, t1 - m1 - t2.
        let forest = graph(3, &[&[0], &[1, 2]]);
        assert_eq!(forest.classify(), GraphClass::Forest);

        // Every state sends two of three messages: contains a cycle.
        let cyclic = graph(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert!(matches!(cyclic.classify(), GraphClass::CyclicConnected));
    }

    #[test]
    fn edge_count_matches_class() {
        for g in [
            graph(3, &[&[0, 1], &[1, 2]]),
            graph(3, &[&[0], &[1, 2]]),
            graph(3, &[&[0, 1], &[1, 2], &[0, 2]]),
        ] {
            let v = g.n_states() + g.n_nodes();
            let e = g.edges.len();
            match g.classify() {
                GraphClass::Tree => assert_eq!(e, v - 1),
                GraphClass::Forest => assert!(e < v - 1),
                _ => assert!(e >= v),
            }
        }
    }

    #[test]
    fn alternating_paths_examples() {
        // Single-message star admits only length-one paths.
        let star = graph(2, &[&[0, 1]]);
        let paths = star.alternating_paths();
        assert_eq!(paths.len(), 2);
        assert!(paths.iter().all(|p| p.len() == 1));

        // Path graph contains the two-step walk in both directions.
        let path = graph(3, &[&[0, 1], &[1, 2]]);
        let paths = path.alternating_paths();
        assert!(paths.contains(&vec![(0, 0), (1, 1)]));
        assert!(paths.contains(&vec![(2, 1), (1, 0)]));

        // Four-cycle: both orientations between the same endpoints exist.
        let cyc = graph(2, &[&[0, 1], &[0, 1]]);
        let paths = cyc.alternating_paths();
        assert!(paths.contains(&vec![(0, 0), (1, 1)]));
        assert!(paths.contains(&vec![(0, 1), (1, 0)]));
    }

    #[test]
    fn paths_unique_between_endpoints_on_trees() {
        let tree = graph(3, &[&[0, 1], &[1, 2]]);
        let paths = tree.alternating_paths();
        let mut endpoint_count = std::collections::BTreeMap::new();
        for p in &paths {
            let key = (p[0].0, p[p.len() - 1].1);
            *endpoint_count.entry(key).or_insert(0) += 1;
        }
        assert!(endpoint_count.values().all(|&c| c == 1));
    }

    #[test]
    fn paths_match_brute_force_dfs_count() {
        // Independent oracle: count all simple alternating sequences by a
        // straightforward recursive walk over explicit adjacency sets.
        let g = graph(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        fn walk(
            g: &CommGraph,
            state: usize,
            used_s: &mut BTreeSet<usize>,
            used_n: &mut BTreeSet<usize>,
        ) -> usize {
            let mut count = 0;
            for n in g.nodes_of_state(state) {
                if used_n.contains(&n) {
                    continue;
                }
                used_n.insert(n);
                count += 1;
                for s in g.states_of_node(n) {
                    if !used_s.contains(&s) {
                        used_s.insert(s);
                        count += walk(g, s, used_s, used_n);
                        used_s.remove(&s);
                    }
                }
                used_n.remove(&n);
            }
            count
        }
        let mut total = 0;
        for s in 0..g.n_states() {
            total += walk(&g, s, &mut BTreeSet::from([s]), &mut BTreeSet::new());
        }
        assert_eq!(g.alternating_paths().len(), total);
    }

    #[test]
    fn half_square_examples() {
        let path = graph(3, &[&[0, 1], &[1, 2]]);
        let hs = path.half_square(true);
        assert!(hs.has_edge(0, 1) && hs.has_edge(1, 2) && !hs.has_edge(0, 2));
        assert_eq!(hs.star_center(), Some(1));
        let hm = path.half_square(false);
        assert!(hm.is_complete());

        let babble = graph(3, &[&[0, 1, 2]]);
        assert!(babble.half_square(true).is_complete());
        assert_eq!(babble.half_square(false).n(), 1);

        // Partial revelation: centre state sends every message.
        let partial = graph(3, &[&[0, 1], &[0, 2]]);
        assert_eq!(partial.half_square(true).star_center(), Some(0));
        assert!(partial.half_square(false).is_complete());
    }

    #[test]
    fn half_square_matches_pairwise_brute_force() {
        for g in [
            graph(3, &[&[0, 1], &[1, 2]]),
            graph(4, &[&[0, 1, 2], &[2, 3]]),
            graph(3, &[&[0, 1], &[1, 2], &[0, 2]]),
        ] {
            let hs = g.half_square(true);
            for i in 0..g.n_states() {
                for j in 0..g.n_states() {
                    if i == j {
                        continue;
                    }
                    let share = (0..g.n_nodes()).any(|n| {
                        let sts = g.states_of_node(n);
                        sts.contains(&i) && sts.contains(&j)
                    });
                    assert_eq!(hs.has_edge(i, j), share);
                }
            }
        }
    }

    #[test]
    fn enumerate_tree_counts() {
        assert_eq!(enumerate_trees(&labels(1), 3).len(), 1);
        let two = enumerate_trees(&labels(2), 2);
        assert_eq!(two.len(), 3);
        // Shapes: babbling, and each state sending an extra private message.
        let keys: BTreeSet<_> = two.iter().map(shape_key).collect();
        assert!(keys.contains(&vec![vec![0, 1]]));
        assert!(keys.contains(&vec![vec![0], vec![0, 1]]));
        assert!(keys.contains(&vec![vec![0, 1], vec![1]]));

        // The three-state path shape appears with two messages.
        let three = enumerate_trees(&labels(3), 2);
        assert!(three.iter().map(shape_key).any(|k| k == vec![vec![0, 1], vec![1, 2]]));
    }

    #[test]
    fn enumerate_matches_bitmask_brute_force() {
        // Oracle: iterate over all edge subsets of the complete bipartite
        // graph, keep spanning acyclic covers with distinct nonempty message
        // neighbourhoods, and count canonical forms.
        for n in 1..=3usize {
            for k_max in 1..=3usize {
                let mut canon = BTreeSet::new();
                for k in 1..=k_max {
                    let cells = n * k;
                    'subsets: for mask in 0u32..(1 << cells) {
                        let mut neigh = vec![0u32; k];
                        for c in 0..cells {
                            if mask & (1 << c) != 0 {
                                neigh[c / n] |= 1 << (c % n);
                            }
                        }
                        if neigh.iter().any(|&m| m == 0) {
                            continue;
                        }
                        let mut sorted = neigh.clone();
                        sorted.sort_unstable();
                        sorted.dedup();
                        if sorted.len() != k {
                            continue 'subsets;
                        }
                        if is_acyclic_cover(&sorted, n, true) {
                            canon.insert(sorted);
                        }
                    }
                }
                assert_eq!(
                    enumerate_trees(&labels(n), k_max).len(),
                    canon.len(),
                    "n={n} k_max={k_max}"
                );
            }
        }
    }

    #[test]
    fn dot_output_is_deterministic() {
        let g = graph(2, &[&[0, 1], &[1]]);
        let a = g.to_dot("shape");
        let b = g.to_dot("shape");
        assert_eq!(a, b);
        assert!(a.contains("shape=box") && a.contains("shape=circle"));
    }
}
