use super::Graph;
use crate::error::{invalid, Result};

/// Number of vertices other than `u`, `v` adjacent to exactly one of them.
pub fn delta_uv(g: &Graph, u: usize, v: usize) -> Result<usize> {
    if g.is_directed() {
        return invalid("delta is defined for undirected graphs");
    }
    if u == v {
        return invalid("delta needs two distinct vertices");
    }
    let mut d = g.neighbours(u).symmetric_difference_count(g.neighbours(v));
    // u in N(v) and v in N(u) both land in the symmetric difference
    if g.has_edge(u, v) {
        d -= 2;
    }
    Ok(d)
}

/// Minimum of `delta_uv` over all unordered pairs; `None` below two vertices.
pub fn min_delta(g: &Graph) -> Result<Option<usize>> {
    let n = g.vertex_count();
    let mut best = None;
    for u in 0..n {
        for v in u + 1..n {
            let d = delta_uv(g, u, v)?;
            best = Some(best.map_or(d, |b: usize| b.min(d)));
        }
    }
    Ok(best)
}

/// Whether the minimum of `delta_uv` attains `floor((n - 1) / 2)`.
pub fn is_delta_graph(g: &Graph) -> Result<bool> {
    let n = g.vertex_count();
    Ok(min_delta(g)?.is_some_and(|d| d == (n - 1) / 2))
}
