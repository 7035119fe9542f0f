use rand::seq::index::sample;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An `m`-assignment: every vertex gets exactly `m` distinct colors from
/// `0..palette`. Lists are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "AssignmentJson", into = "AssignmentJson")]
pub struct ListAssignment {
    m: usize,
    palette: usize,
    lists: Vec<Vec<usize>>,
}

/// Wire form `{"m": int, "palette": int, "lists": [[colors...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignmentJson {
    pub m: usize,
    pub palette: usize,
    pub lists: Vec<Vec<usize>>,
}

impl TryFrom<AssignmentJson> for ListAssignment {
    type Error = Error;

    fn try_from(json: AssignmentJson) -> Result<Self> {
        ListAssignment::new(json.m, json.palette, json.lists)
    }
}

impl From<ListAssignment> for AssignmentJson {
    fn from(a: ListAssignment) -> Self {
        AssignmentJson {
            m: a.m,
            palette: a.palette,
            lists: a.lists,
        }
    }
}

impl ListAssignment {
    pub fn new(m: usize, palette: usize, mut lists: Vec<Vec<usize>>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidAssignment("m must be at least 1".into()));
        }
        for (v, list) in lists.iter_mut().enumerate() {
            list.sort_unstable();
            if list.len() != m {
                return Err(Error::InvalidAssignment(format!(
                    "vertex {v} has {} colors, expected {m}",
                    list.len()
                )));
            }
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidAssignment(format!("vertex {v} repeats a color")));
            }
            if list.last().is_some_and(|&c| c >= palette) {
                return Err(Error::InvalidAssignment(format!(
                    "vertex {v} uses a color outside 0..{palette}"
                )));
            }
        }
        Ok(ListAssignment { m, palette, lists })
    }

    /// The same `m` colors everywhere, over the palette `0..m*n`.
    pub fn uniform(n: usize, m: usize) -> Self {
        let lists = vec![(0..m).collect(); n];
        ListAssignment::new(m, (m * n).max(m), lists).expect("uniform lists are valid")
    }

    /// A uniformly random `m`-subset of `0..palette` for each of `n` vertices.
    pub fn random<R: Rng + ?Sized>(n: usize, m: usize, palette: usize, rng: &mut R) -> Result<Self> {
        if palette < m {
            return Err(Error::InvalidAssignment(format!(
                "palette {palette} is smaller than m = {m}"
            )));
        }
        let lists = (0..n)
            .map(|_| sample(rng, palette, m).into_vec())
            .collect();
        ListAssignment::new(m, palette, lists)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn lists(&self) -> &[Vec<usize>] {
        &self.lists
    }

    pub fn list(&self, v: usize) -> &[usize] {
        &self.lists[v]
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.lists.len() != g.vertex_count() {
            return Err(Error::InvalidAssignment(format!(
                "{} lists for a graph on {} vertices",
                self.lists.len(),
                g.vertex_count()
            )));
        }
        Ok(())
    }

    /// Relabels colors by first occurrence, scanning vertices in index order
    /// and each list in sorted order. The palette is unchanged.
    pub fn canonical(&self) -> Self {
        let mut map = vec![usize::MAX; self.palette];
        let mut next = 0;
        let lists = self
            .lists
            .iter()
            .map(|list| {
                let mut out: Vec<usize> = list
                    .iter()
                    .map(|&c| {
                        if map[c] == usize::MAX {
                            map[c] = next;
                            next += 1;
                        }
                        map[c]
                    })
                    .collect();
                out.sort_unstable();
                out
            })
            .collect();
        ListAssignment {
            m: self.m,
            palette: self.palette,
            lists,
        }
    }

    /// Applies a palette bijection `perm` (`perm[c]` is the new name of `c`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.palette {
            return Err(Error::DimensionMismatch(format!(
                "permutation of length {} for palette {}",
                perm.len(),
                self.palette
            )));
        }
        let lists = self
            .lists
            .iter()
            .map(|l| l.iter().map(|&c| perm[c]).collect())
            .collect();
        ListAssignment::new(self.m, self.palette, lists)
    }

    /// Every vertex has the same list.
    pub fn is_constant(&self) -> bool {
        self.lists.windows(2).all(|w| w[0] == w[1])
    }
}
