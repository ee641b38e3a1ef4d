//! Generic digraphs and the distance machinery every family compiles down to.

mod distance;
mod format;
mod iso;
mod line;

pub use distance::{
    all_pairs_oracle, bfs_profile, diameter, eccentricity_within, Diameter, DistanceMatrix,
    DistanceProfile, ORACLE_ORDER_CAP,
};
pub use iso::{are_isomorphic, are_isomorphic_with_cap, DEFAULT_ISOMORPHISM_CAP};
pub use line::line_digraph;

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a digraph needs at least one vertex")]
    Empty,
    #[error("arc {tail} -> {head} leaves the vertex range 0..{order}")]
    HeadOutOfRange { tail: Vertex, head: Vertex, order: usize },
    #[error("duplicate arc {tail} -> {head}")]
    DuplicateArc { tail: Vertex, head: Vertex },
    #[error("vertex {vertex} is out of range for a digraph of order {order}")]
    VertexOutOfRange { vertex: Vertex, order: usize },
    #[error("line digraph of a digraph without arcs")]
    NoArcs,
    #[error("order {order} exceeds the cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("malformed adjacency JSON: {0}")]
    Json(String),
}

/// Immutable directed graph on vertices `0..order`, stored as compressed
/// out-adjacency lists. Out-lists keep their insertion order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    offsets: Vec<usize>,
    heads: Vec<Vertex>,
}

impl Digraph {
    /// Builds a digraph from per-vertex out-lists, rejecting out-of-range heads
    /// and repeated arcs.
    pub fn from_out_lists<L, I>(lists: L) -> Result<Self, GraphError>
    where
        L: IntoIterator<Item = I>,
        I: IntoIterator<Item = Vertex>,
    {
        let lists: Vec<Vec<Vertex>> = lists.into_iter().map(|l| l.into_iter().collect()).collect();
        let order = lists.len();
        if order == 0 {
            return Err(GraphError::Empty);
        }
        let mut offsets = Vec::with_capacity(order + 1);
        let mut heads = Vec::with_capacity(lists.iter().map(Vec::len).sum());
        offsets.push(0);
        for (tail, list) in lists.iter().enumerate() {
            for (pos, &head) in list.iter().enumerate() {
                if head >= order {
                    return Err(GraphError::HeadOutOfRange { tail, head, order });
                }
                if list[..pos].contains(&head) {
                    return Err(GraphError::DuplicateArc { tail, head });
                }
                heads.push(head);
            }
            offsets.push(heads.len());
        }
        Ok(Digraph { offsets, heads })
    }

    /// Like [`Digraph::from_out_lists`] but silently drops repeated heads,
    /// keeping the first occurrence.
    pub fn from_out_lists_dedup<L, I>(lists: L) -> Result<Self, GraphError>
    where
        L: IntoIterator<Item = I>,
        I: IntoIterator<Item = Vertex>,
    {
        let deduped = lists.into_iter().map(|l| {
            let mut seen = Vec::new();
            for v in l {
                if !seen.contains(&v) {
                    seen.push(v);
                }
            }
            seen
        });
        Self::from_out_lists(deduped)
    }

    /// Directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn directed_cycle(n: usize) -> Result<Self, GraphError> {
        Self::from_out_lists((0..n).map(|i| [(i + 1) % n]))
    }

    pub fn order(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn arc_count(&self) -> usize {
        self.heads.len()
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.heads[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.order()];
        for &h in &self.heads {
            deg[h] += 1;
        }
        deg
    }

    /// Index of the arc `tail -> out_neighbors(tail)[pos]` in the fixed arc
    /// order (by tail, then out-list position).
    pub fn arc_index(&self, tail: Vertex, pos: usize) -> usize {
        self.offsets[tail] + pos
    }

    /// All arcs as `(tail, head)`, ordered by tail then out-list position.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.order()).flat_map(move |t| self.out_neighbors(t).iter().map(move |&h| (t, h)))
    }

    pub fn has_arc(&self, tail: Vertex, head: Vertex) -> bool {
        self.out_neighbors(tail).contains(&head)
    }

    /// `Some(d)` when every vertex has in- and out-degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.out_degree(0);
        let outs = (0..self.order()).all(|v| self.out_degree(v) == d);
        (outs && self.in_degrees().iter().all(|&x| x == d)).then_some(d)
    }

    /// True when the digraph is a single directed cycle through all vertices.
    pub fn is_directed_cycle(&self) -> bool {
        self.regular_degree() == Some(1) && diameter(self).finite() == Some(self.order() as u32 - 1)
    }

    pub fn reversed(&self) -> Digraph {
        let mut lists = vec![Vec::new(); self.order()];
        for (t, h) in self.arcs() {
            lists[h].push(t);
        }
        Digraph::from_out_lists(lists).expect("reversal preserves validity")
    }

    pub fn is_strongly_connected(&self) -> bool {
        let reaches_all = |g: &Digraph| bfs_profile(g, 0).map(|p| p.reaches_all()).unwrap_or(false);
        reaches_all(self) && reaches_all(&self.reversed())
    }

    pub fn to_out_lists(&self) -> Vec<Vec<Vertex>> {
        (0..self.order()).map(|v| self.out_neighbors(v).to_vec()).collect()
    }

    /// Graphviz `digraph` text. Vertices are declared first, then arcs in the
    /// fixed arc order.
    pub fn to_dot(&self) -> String {
        format::to_dot(self)
    }

    /// Compact `{"order":n,"arcs":[[...],...]}` adjacency JSON.
    pub fn to_json(&self) -> String {
        format::to_json(self)
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        format::from_json(text)
    }
}
