use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use super::{Digraph, GraphError, Vertex};

/// Largest order accepted by [`all_pairs_oracle`].
pub const ORACLE_ORDER_CAP: usize = 512;

/// Single-source BFS result. `dist[v]` is `None` for vertices the source
/// cannot reach.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceProfile {
    pub source: Vertex,
    pub dist: Vec<Option<u32>>,
    pub eccentricity: u32,
    /// Vertices at distance `eccentricity`. Contains only the source when
    /// nothing else is reachable.
    pub farthest: Vec<Vertex>,
}

impl DistanceProfile {
    pub fn reaches_all(&self) -> bool {
        self.dist.iter().all(Option::is_some)
    }
}

/// Serialized as the integer, or `null` when not strongly connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Diameter {
    Finite(u32),
    NotStronglyConnected,
}

impl Diameter {
    pub fn finite(self) -> Option<u32> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::NotStronglyConnected => None,
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.finite().serialize(serializer)
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::NotStronglyConnected => f.write_str("not strongly connected"),
        }
    }
}

pub fn bfs_profile(g: &Digraph, source: Vertex) -> Result<DistanceProfile, GraphError> {
    let order = g.order();
    if source >= order {
        return Err(GraphError::VertexOutOfRange { vertex: source, order });
    }
    let mut dist = vec![None; order];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    let mut eccentricity = 0;
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices have a distance");
        for &v in g.out_neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                eccentricity = du + 1;
                queue.push_back(v);
            }
        }
    }
    let farthest = (0..order).filter(|&v| dist[v] == Some(eccentricity)).collect();
    Ok(DistanceProfile { source, dist, eccentricity, farthest })
}

/// Exact eccentricity of `source` if it reaches every vertex within `limit`
/// steps; `None` as soon as some vertex is provably farther (or unreachable).
pub fn eccentricity_within(g: &Digraph, source: Vertex, limit: u32) -> Option<u32> {
    let order = g.order();
    let mut dist = vec![u32::MAX; order];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    let mut seen = 1;
    let mut ecc = 0;
    while let Some(u) = queue.pop_front() {
        let du = dist[u];
        for &v in g.out_neighbors(u) {
            if dist[v] == u32::MAX {
                if du + 1 > limit {
                    return None;
                }
                dist[v] = du + 1;
                ecc = du + 1;
                seen += 1;
                queue.push_back(v);
            }
        }
    }
    (seen == order).then_some(ecc)
}

/// Maximum eccentricity over every source vertex.
pub fn diameter(g: &Digraph) -> Diameter {
    let mut best = 0;
    for s in 0..g.order() {
        let p = bfs_profile(g, s).expect("source in range");
        if !p.reaches_all() {
            return Diameter::NotStronglyConnected;
        }
        best = best.max(p.eccentricity);
    }
    Diameter::Finite(best)
}

/// Row-major all-pairs distance matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    cells: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, from: Vertex, to: Vertex) -> Option<u32> {
        self.cells[from * self.order + to]
    }

    pub fn row(&self, from: Vertex) -> &[Option<u32>] {
        &self.cells[from * self.order..(from + 1) * self.order]
    }

    /// Largest entry, or the disconnection sentinel if any entry is missing.
    pub fn max_entry(&self) -> Diameter {
        let mut best = 0;
        for c in &self.cells {
            match c {
                Some(d) => best = best.max(*d),
                None => return Diameter::NotStronglyConnected,
            }
        }
        Diameter::Finite(best)
    }
}

/// Floyd–Warshall relaxation over unit arc lengths. Independent of the BFS
/// code path and used to cross-check it.
pub fn all_pairs_oracle(g: &Digraph) -> Result<DistanceMatrix, GraphError> {
    let n = g.order();
    if n > ORACLE_ORDER_CAP {
        return Err(GraphError::OrderCapExceeded { order: n, cap: ORACLE_ORDER_CAP });
    }
    let mut cells = vec![None; n * n];
    for v in 0..n {
        cells[v * n + v] = Some(0);
    }
    for (t, h) in g.arcs() {
        if t != h {
            cells[t * n + h] = Some(1);
        }
    }
    for mid in 0..n {
        for i in 0..n {
            let Some(left) = cells[i * n + mid] else { continue };
            for j in 0..n {
                if let Some(right) = cells[mid * n + j] {
                    let through = left + right;
                    let cell = &mut cells[i * n + j];
                    if cell.is_none_or(|d| through < d) {
                        *cell = Some(through);
                    }
                }
            }
        }
    }
    Ok(DistanceMatrix { order: n, cells })
}
