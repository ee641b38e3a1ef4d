use std::collections::VecDeque;

use super::{bfs_profile, Digraph, GraphError, Vertex};

pub const DEFAULT_ISOMORPHISM_CAP: usize = 128;

pub fn are_isomorphic(g1: &Digraph, g2: &Digraph) -> Result<bool, GraphError> {
    are_isomorphic_with_cap(g1, g2, DEFAULT_ISOMORPHISM_CAP)
}

/// Backtracking isomorphism test. Vertices are first bucketed by
/// (out-degree, in-degree, eccentricity); the search then maps vertices in
/// BFS order of the underlying graph so each new vertex is usually pinned to
/// a neighbor of an already-mapped image.
pub fn are_isomorphic_with_cap(g1: &Digraph, g2: &Digraph, cap: usize) -> Result<bool, GraphError> {
    for g in [g1, g2] {
        if g.order() > cap {
            return Err(GraphError::OrderCapExceeded { order: g.order(), cap });
        }
    }
    if g1.order() != g2.order() || g1.arc_count() != g2.arc_count() {
        return Ok(false);
    }
    let sig1 = signatures(g1);
    let sig2 = signatures(g2);
    let mut sorted1 = sig1.clone();
    let mut sorted2 = sig2.clone();
    sorted1.sort_unstable();
    sorted2.sort_unstable();
    if sorted1 != sorted2 {
        return Ok(false);
    }

    let mut search = Search {
        n: g1.order(),
        adj1: adjacency(g1),
        adj2: adjacency(g2),
        in2: g2.reversed(),
        g2,
        sig1,
        sig2,
        plan: plan(g1),
        map: vec![usize::MAX; g1.order()],
        used: vec![false; g1.order()],
    };
    Ok(search.extend(0))
}

type Signature = (usize, usize, u32);

fn signatures(g: &Digraph) -> Vec<Signature> {
    let indeg = g.in_degrees();
    (0..g.order())
        .map(|v| {
            let p = bfs_profile(g, v).expect("vertex in range");
            let ecc = if p.reaches_all() { p.eccentricity } else { u32::MAX };
            (g.out_degree(v), indeg[v], ecc)
        })
        .collect()
}

fn adjacency(g: &Digraph) -> Vec<bool> {
    let n = g.order();
    let mut m = vec![false; n * n];
    for (t, h) in g.arcs() {
        m[t * n + h] = true;
    }
    m
}

#[derive(Clone, Copy)]
enum Anchor {
    Free,
    /// `(mapped vertex, true if the arc is mapped -> new)`
    Via(Vertex, bool),
}

/// Visiting order and, for each visited vertex, an already-visited neighbor.
fn plan(g: &Digraph) -> Vec<(Vertex, Anchor)> {
    let n = g.order();
    let rev = g.reversed();
    let mut seen = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([(root, Anchor::Free)]);
        while let Some((v, anchor)) = queue.pop_front() {
            out.push((v, anchor));
            for &w in g.out_neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back((w, Anchor::Via(v, true)));
                }
            }
            for &w in rev.out_neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back((w, Anchor::Via(v, false)));
                }
            }
        }
    }
    out
}

struct Search<'a> {
    n: usize,
    adj1: Vec<bool>,
    adj2: Vec<bool>,
    g2: &'a Digraph,
    in2: Digraph,
    sig1: Vec<Signature>,
    sig2: Vec<Signature>,
    plan: Vec<(Vertex, Anchor)>,
    map: Vec<Vertex>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.n {
            return true;
        }
        let (v, anchor) = self.plan[depth];
        let candidates: Vec<Vertex> = match anchor {
            Anchor::Free => (0..self.n).collect(),
            Anchor::Via(u, true) => self.g2.out_neighbors(self.map[u]).to_vec(),
            Anchor::Via(u, false) => self.in2.out_neighbors(self.map[u]).to_vec(),
        };
        for c in candidates {
            if self.used[c] || self.sig1[v] != self.sig2[c] || !self.consistent(depth, v, c) {
                continue;
            }
            self.map[v] = c;
            self.used[c] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[c] = false;
            self.map[v] = usize::MAX;
        }
        false
    }

    fn consistent(&self, depth: usize, v: Vertex, c: Vertex) -> bool {
        let n = self.n;
        if self.adj1[v * n + v] != self.adj2[c * n + c] {
            return false;
        }
        self.plan[..depth].iter().all(|&(w, _)| {
            let fw = self.map[w];
            self.adj1[v * n + w] == self.adj2[c * n + fw] && self.adj1[w * n + v] == self.adj2[fw * n + c]
        })
    }
}
