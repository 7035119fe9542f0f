use serde::Serialize;

use super::{are_isomorphic, Family, Graph, ThetaGraph, ThetaSpec};
use crate::error::{Error, Result};

/// Repeatedly deletes vertices of degree 1. A tree collapses to `K_1`.
/// Surviving vertices keep their relative order.
pub fn core_of(g: &Graph) -> Result<Graph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut remaining = n;
    let mut stack: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    while let Some(v) = stack.pop() {
        // K_2 peels down to a single vertex, not to nothing.
        if !alive[v] || degree[v] != 1 || remaining == 1 {
            continue;
        }
        alive[v] = false;
        remaining -= 1;
        for &w in g.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    Ok(g.induced(&keep))
}

/// Shape of a graph's core with respect to the bipartite characterization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoreShape {
    K1,
    EvenCycle(usize),
    Theta222,
    Other,
}

pub fn classify_core(g: &Graph) -> Result<CoreShape> {
    let core = core_of(g)?;
    let n = core.vertex_count();
    if n == 1 {
        return Ok(CoreShape::K1);
    }
    if n >= 4 && n % 2 == 0 && are_isomorphic(&core, &Family::Cycle(n).build()?) {
        return Ok(CoreShape::EvenCycle(n));
    }
    let k23 = Family::CompleteBipartite(2, 3).build()?;
    if are_isomorphic(&core, &k23) {
        return Ok(CoreShape::Theta222);
    }
    Ok(CoreShape::Other)
}

/// Vertices of a cycle graph in cyclic order starting `0, min(neighbors of 0), ...`.
pub fn recognize_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n < 3 || !g.is_connected() || (0..n).any(|v| g.degree(v) != 2) {
        return None;
    }
    let mut order = vec![0, g.neighbors(0)[0]];
    while order.len() < n {
        let (prev, cur) = (order[order.len() - 2], order[order.len() - 1]);
        let next = *g.neighbors(cur).iter().find(|&&w| w != prev)?;
        order.push(next);
    }
    Some(order)
}

/// Recognizes a theta graph. Returns the standard theta layout together with
/// `mapping`, where `mapping[i]` is the vertex of `g` playing the role of
/// vertex `i` in the layout.
pub fn recognize_theta(g: &Graph) -> Option<(ThetaGraph, Vec<usize>)> {
    let n = g.vertex_count();
    if !g.is_connected() {
        return None;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 3).collect();
    if branch.len() != 2 || (0..n).any(|v| g.degree(v) != 3 && g.degree(v) != 2) {
        return None;
    }
    let (a, b) = (branch[0], branch[1]);
    let mut traced: Vec<Vec<usize>> = Vec::new();
    for &start in g.neighbors(a) {
        let mut path = vec![a, start];
        while g.degree(*path.last()?) == 2 {
            let (prev, cur) = (path[path.len() - 2], path[path.len() - 1]);
            let next = *g.neighbors(cur).iter().find(|&&w| w != prev)?;
            path.push(next);
        }
        if *path.last()? != b {
            return None;
        }
        traced.push(path);
    }
    let lens: Vec<usize> = traced.iter().map(|p| p.len() - 1).collect();
    let spec = ThetaSpec::canonical(lens[0], lens[1], lens[2]).ok()?;
    let layout = ThetaGraph::build(spec);
    let mut mapping = vec![usize::MAX; n];
    let mut taken = [false; 3];
    for (i, target) in layout.paths.iter().enumerate() {
        let j = (0..3).find(|&j| !taken[j] && lens[j] == spec.lengths()[i])?;
        taken[j] = true;
        for (x, y) in target.iter().zip(&traced[j]) {
            mapping[*x] = *y;
        }
    }
    debug_assert!(mapping.iter().all(|&x| x != usize::MAX));
    Some((layout, mapping))
}
