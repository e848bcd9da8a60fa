//! Maximum-cardinality matching in general (non-bipartite) graphs.
//!
//! Edmonds' blossom algorithm in its O(V^3) array form: grow an alternating
//! BFS forest from each free vertex, contract odd cycles by relabelling
//! their base, and augment along the first free vertex found.

use std::collections::VecDeque;

/// Simple undirected graph with adjacency lists.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PlainGraph {
    adj: Vec<Vec<usize>>,
}

impl PlainGraph {
    pub fn new(n: usize) -> Self {
        PlainGraph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Adds `{u, v}`; loops and duplicates are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v && !self.adj[u].contains(&v) {
            self.adj[u].push(v);
            self.adj[v].push(u);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, ns) in self.adj.iter().enumerate() {
            out.extend(ns.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out.sort_unstable();
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    /// Matched pairs `(u, v)` with `u < v`, ascending.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(Option::is_some)
    }

    /// Pairs are edges of `g` and no vertex is used twice.
    pub fn is_valid_in(&self, g: &PlainGraph) -> bool {
        self.mate.len() == g.vertex_count()
            && self.mate.iter().enumerate().all(|(u, m)| match *m {
                None => true,
                Some(v) => v != u && self.mate[v] == Some(u) && g.has_edge(u, v),
            })
    }
}

struct Blossom<'g> {
    g: &'g PlainGraph,
    mate: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.g.vertex_count()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            match self.mate[a] {
                Some(m) => a = self.parent[m].expect("outer vertex has a tree parent"),
                None => break,
            }
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            let m = self.mate[b].expect("walk stays inside the tree");
            b = self.parent[m].expect("outer vertex has a tree parent");
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v].expect("inner path vertex is matched");
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("outer vertex has a tree parent");
        }
    }

    /// BFS from `root`; returns the free vertex reached, if any.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.vertex_count();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = None);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.g.neighbors(v).len() {
                let to = self.g.neighbors(v)[idx];
                if self.base[v] == self.base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                let to_is_outer =
                    to == root || self.mate[to].is_some_and(|m| self.parent[m].is_some());
                if to_is_outer {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match self.mate[to] {
                        None => return Some(to),
                        Some(m) => {
                            self.used[m] = true;
                            self.queue.push_back(m);
                        }
                    }
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        loop {
            let pv = self.parent[v].expect("augmenting path is rooted");
            let next = self.mate[pv];
            self.mate[v] = Some(pv);
            self.mate[pv] = Some(v);
            match next {
                Some(nv) => v = nv,
                None => break,
            }
        }
    }
}

/// A maximum-cardinality matching of `g`.
pub fn maximum_matching(g: &PlainGraph) -> Matching {
    let n = g.vertex_count();
    let mut state = Blossom {
        g,
        mate: vec![None; n],
        parent: vec![None; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    // Greedy warm start; blossom search completes it.
    for u in 0..n {
        if state.mate[u].is_none() {
            if let Some(&v) = g.neighbors(u).iter().find(|&&v| state.mate[v].is_none()) {
                state.mate[u] = Some(v);
                state.mate[v] = Some(u);
            }
        }
    }
    for root in 0..n {
        if state.mate[root].is_none() {
            if let Some(end) = state.find_path(root) {
                state.augment(end);
            }
        }
    }
    Matching { mate: state.mate }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(g: &PlainGraph) -> usize {
        fn go(edges: &[(usize, usize)], used: &mut Vec<bool>, from: usize) -> usize {
            let mut best = 0;
            for i in from..edges.len() {
                let (u, v) = edges[i];
                if !used[u] && !used[v] {
                    used[u] = true;
                    used[v] = true;
                    best = best.max(1 + go(edges, used, i + 1));
                    used[u] = false;
                    used[v] = false;
                }
            }
            best
        }
        go(&g.edges(), &mut vec![false; g.vertex_count()], 0)
    }

    #[test]
    fn single_edge() {
        let g = PlainGraph::from_edges(2, &[(0, 1)]);
        let m = maximum_matching(&g);
        assert_eq!(m.pairs(), vec![(0, 1)]);
        assert!(m.is_perfect());
    }

    #[test]
    fn triangle() {
        let g = PlainGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let m = maximum_matching(&g);
        assert_eq!(m.len(), 1);
        assert!(m.is_valid_in(&g));
    }

    #[test]
    fn blossom_needed() {
        // Greedy picks 1-2 and 3-4; the augmenting path runs through the
        // odd cycle 1-2-3-4-5.
        let g =
            PlainGraph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (3, 6)]);
        let m = maximum_matching(&g);
        assert_eq!(m.len(), brute_force(&g));
        assert_eq!(m.len(), 3);
        assert!(m.is_valid_in(&g));
    }

    #[test]
    fn empty_graph() {
        let m = maximum_matching(&PlainGraph::new(0));
        assert!(m.is_empty());
        assert!(m.is_perfect());
        assert_eq!(maximum_matching(&PlainGraph::new(3)).len(), 0);
    }

    #[test]
    fn petersen_is_perfect() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let g = PlainGraph::from_edges(10, &edges);
        let m = maximum_matching(&g);
        assert!(m.is_perfect());
        assert!(m.is_valid_in(&g));
    }
}
