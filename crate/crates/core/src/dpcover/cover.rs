use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::listcolor::ListAssignment;

/// An `m`-fold cover: every vertex has labels `0..m`, and every edge `(a, b)`
/// with `a < b` carries a matching from labels of `a` to labels of `b`
/// (`matching[x] = Some(y)` joins label `x` of `a` to label `y` of `b`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    m: usize,
    matchings: BTreeMap<(usize, usize), Vec<Option<usize>>>,
}

impl Cover {
    pub fn new(g: &Graph, m: usize, matchings: BTreeMap<(usize, usize), Vec<Option<usize>>>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidCover("m must be at least 1".into()));
        }
        if matchings.len() != g.edge_count() || g.edges().iter().any(|e| !matchings.contains_key(e)) {
            return Err(Error::InvalidCover("matchings must be given for exactly the edges of the graph".into()));
        }
        for (&(a, b), matching) in &matchings {
            if matching.len() != m {
                return Err(Error::InvalidCover(format!(
                    "edge ({a},{b}) has {} labels, expected {m}",
                    matching.len()
                )));
            }
            let mut hit = vec![false; m];
            for &y in matching.iter().flatten() {
                if y >= m || hit[y] {
                    return Err(Error::InvalidCover(format!(
                        "edge ({a},{b}) is not a matching on labels 0..{m}"
                    )));
                }
                hit[y] = true;
            }
        }
        Ok(Cover { m, matchings })
    }

    /// Every edge matched by the identity permutation.
    pub fn identity(g: &Graph, m: usize) -> Result<Self> {
        let matchings = g
            .edges()
            .iter()
            .map(|&e| (e, (0..m).map(Some).collect()))
            .collect();
        Cover::new(g, m, matchings)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn matching(&self, a: usize, b: usize) -> Option<&[Option<usize>]> {
        self.matchings.get(&(a.min(b), a.max(b))).map(Vec::as_slice)
    }

    pub fn matchings(&self) -> &BTreeMap<(usize, usize), Vec<Option<usize>>> {
        &self.matchings
    }

    /// Every edge carries a perfect matching.
    pub fn is_full(&self) -> bool {
        self.matchings.values().all(|mt| mt.iter().all(Option::is_some))
    }

    pub fn to_json(&self) -> CoverJson {
        CoverJson {
            m: self.m,
            edges: self
                .matchings
                .iter()
                .map(|(&(a, b), mt)| EdgeMatchingJson {
                    edge: [a, b],
                    pairs: mt
                        .iter()
                        .enumerate()
                        .filter_map(|(x, y)| y.map(|y| [x, y]))
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(g: &Graph, json: &CoverJson) -> Result<Self> {
        let mut matchings = BTreeMap::new();
        for e in &json.edges {
            let [a, b] = e.edge;
            if a >= b {
                return Err(Error::InvalidCover(format!("edge [{a},{b}] must have a < b")));
            }
            let mut mt = vec![None; json.m];
            for &[x, y] in &e.pairs {
                if x >= json.m || mt[x].is_some() {
                    return Err(Error::InvalidCover(format!("bad pair [{x},{y}] on edge [{a},{b}]")));
                }
                mt[x] = Some(y);
            }
            if matchings.insert((a, b), mt).is_some() {
                return Err(Error::InvalidCover(format!("edge [{a},{b}] listed twice")));
            }
        }
        Cover::new(g, json.m, matchings)
    }
}

/// Wire form of a general cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverJson {
    pub m: usize,
    pub edges: Vec<EdgeMatchingJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeMatchingJson {
    pub edge: [usize; 2],
    pub pairs: Vec<[usize; 2]>,
}

/// A full cover whose spanning-forest edges carry the identity; only the
/// remaining edges store a permutation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GaugedCover {
    pub m: usize,
    pub tree_edges: Vec<[usize; 2]>,
    pub free_edges: Vec<FreeEdge>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FreeEdge {
    pub edge: [usize; 2],
    pub perm: Vec<usize>,
}

impl GaugedCover {
    pub fn to_cover(&self, g: &Graph) -> Result<Cover> {
        let mut matchings = BTreeMap::new();
        for &[a, b] in &self.tree_edges {
            matchings.insert((a, b), (0..self.m).map(Some).collect());
        }
        for f in &self.free_edges {
            let [a, b] = f.edge;
            if f.perm.len() != self.m {
                return Err(Error::InvalidCover(format!("permutation on [{a},{b}] has wrong length")));
            }
            if matchings.insert((a, b), f.perm.iter().copied().map(Some).collect()).is_some() {
                return Err(Error::InvalidCover(format!("edge [{a},{b}] listed twice")));
            }
        }
        let cover = Cover::new(g, self.m, matchings)?;
        debug_assert!(cover.is_full());
        Ok(cover)
    }
}

/// The cover of `g` corresponding to `L`: label `i` of a vertex stands for
/// the `i`-th color of its sorted list, and two labels on adjacent vertices
/// are joined exactly when they stand for the same color.
pub fn cover_from_list_assignment(g: &Graph, assignment: &ListAssignment) -> Result<Cover> {
    assignment.check_graph(g)?;
    let matchings = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            let lb = assignment.list(b);
            let mt = assignment
                .list(a)
                .iter()
                .map(|c| lb.binary_search(c).ok())
                .collect();
            ((a, b), mt)
        })
        .collect();
    Cover::new(g, assignment.m(), matchings)
}

/// Counts independent transversals by coloring vertices in index order and
/// checking each against its lower-indexed neighbors.
pub struct CoverCounter {
    /// For each vertex, `(earlier neighbor, index into the matching table)`.
    earlier: Vec<Vec<(usize, usize)>>,
    edge_index: BTreeMap<(usize, usize), usize>,
    labels: Vec<usize>,
    m: usize,
}

impl CoverCounter {
    pub fn new(g: &Graph, m: usize) -> Self {
        let edge_index: BTreeMap<(usize, usize), usize> =
            g.edges().iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let earlier = (0..g.vertex_count())
            .map(|v| {
                g.neighbors(v)
                    .iter()
                    .filter(|&&w| w < v)
                    .map(|&w| (w, edge_index[&(w, v)]))
                    .collect()
            })
            .collect();
        CoverCounter {
            earlier,
            edge_index,
            labels: vec![usize::MAX; g.vertex_count()],
            m,
        }
    }

    /// Position of edge `(a, b)` in the table passed to [`CoverCounter::count`]
    /// (the graph's sorted edge order).
    pub fn edge_position(&self, a: usize, b: usize) -> Option<usize> {
        self.edge_index.get(&(a.min(b), a.max(b))).copied()
    }

    /// `table[e][x]` is the label of the larger endpoint of edge `e` joined to
    /// label `x` of its smaller endpoint. `fixed` pins vertex labels.
    pub fn count(&mut self, table: &[Vec<Option<usize>>], fixed: &[(usize, usize)]) -> u64 {
        let mut pin = vec![None; self.labels.len()];
        for &(v, x) in fixed {
            pin[v] = Some(x);
        }
        self.extend(table, &pin, 0)
    }

    fn extend(&mut self, table: &[Vec<Option<usize>>], pin: &[Option<usize>], v: usize) -> u64 {
        if v == self.labels.len() {
            return 1;
        }
        let (lo, hi) = match pin[v] {
            Some(x) => (x, x + 1),
            None => (0, self.m),
        };
        let mut total = 0;
        for x in lo..hi {
            let free = self.earlier[v]
                .iter()
                .all(|&(w, e)| table[e][self.labels[w]] != Some(x));
            if free {
                self.labels[v] = x;
                total += self.extend(table, pin, v + 1);
            }
        }
        self.labels[v] = usize::MAX;
        total
    }
}

/// Number of independent transversals (proper cover colorings).
pub fn count_cover_colorings(g: &Graph, cover: &Cover) -> Result<u64> {
    if cover.matchings.len() != g.edge_count() || g.edges().iter().any(|e| !cover.matchings.contains_key(e)) {
        return Err(Error::InvalidCover("cover does not match the graph's edges".into()));
    }
    let table: Vec<Vec<Option<usize>>> = g.edges().iter().map(|e| cover.matchings[e].clone()).collect();
    Ok(CoverCounter::new(g, cover.m).count(&table, &[]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn single_edge_full_cover() {
        let k2 = Family::Path(2).build().unwrap();
        let c = Cover::identity(&k2, 3).unwrap();
        assert_eq!(count_cover_colorings(&k2, &c).unwrap(), 6);
    }

    #[test]
    fn identity_cover_on_c4() {
        let c4 = Family::Cycle(4).build().unwrap();
        let c = Cover::identity(&c4, 3).unwrap();
        assert_eq!(count_cover_colorings(&c4, &c).unwrap(), 18);
    }

    #[test]
    fn twisted_triangle() {
        let c3 = Family::Cycle(3).build().unwrap();
        let mut mt = BTreeMap::new();
        mt.insert((0, 1), vec![Some(0), Some(1)]);
        mt.insert((1, 2), vec![Some(0), Some(1)]);
        mt.insert((0, 2), vec![Some(1), Some(0)]);
        let c = Cover::new(&c3, 2, mt).unwrap();
        assert_eq!(count_cover_colorings(&c3, &c).unwrap(), 2);
    }

    #[test]
    fn cover_from_lists() {
        let c4 = Family::Cycle(4).build().unwrap();
        let same = ListAssignment::new(3, 3, vec![vec![0, 1, 2]; 4]).unwrap();
        let c = cover_from_list_assignment(&c4, &same).unwrap();
        assert!(c.is_full());
        assert_eq!(c, Cover::identity(&c4, 3).unwrap());

        let k2 = Family::Path(2).build().unwrap();
        let disjoint = ListAssignment::new(2, 4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let c = cover_from_list_assignment(&k2, &disjoint).unwrap();
        assert_eq!(c.matching(0, 1).unwrap(), &[None, None]);
        assert_eq!(count_cover_colorings(&k2, &c).unwrap(), 4);

        let k24 = Family::CompleteBipartite(2, 4).build().unwrap();
        let zero = ListAssignment::new(
            2,
            4,
            vec![vec![0, 1], vec![2, 3], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]],
        )
        .unwrap();
        let c = cover_from_list_assignment(&k24, &zero).unwrap();
        assert_eq!(count_cover_colorings(&k24, &c).unwrap(), 0);
    }

    #[test]
    fn rejects_non_matchings() {
        let k2 = Family::Path(2).build().unwrap();
        let mut mt = BTreeMap::new();
        mt.insert((0, 1), vec![Some(0), Some(0)]);
        assert!(Cover::new(&k2, 2, mt).is_err());
        let mut mt = BTreeMap::new();
        mt.insert((0, 1), vec![Some(2), None]);
        assert!(Cover::new(&k2, 2, mt).is_err());
    }

    #[test]
    fn json_round_trip() {
        let c4 = Family::Cycle(4).build().unwrap();
        let l = ListAssignment::new(2, 5, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 4]]).unwrap();
        let c = cover_from_list_assignment(&c4, &l).unwrap();
        let json = serde_json::to_string(&c.to_json()).unwrap();
        let back = Cover::from_json(&c4, &serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, c);
    }
}
