use serde::Serialize;

use super::ListAssignment;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Backtracking counter for proper list colorings, reusable across many
/// assignments of the same graph. Vertices are colored in index order and
/// each is checked only against its lower-indexed neighbors.
pub struct ListColoringCounter<'g> {
    graph: &'g Graph,
    earlier: Vec<Vec<usize>>,
    colors: Vec<usize>,
}

impl<'g> ListColoringCounter<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        let earlier = (0..graph.vertex_count())
            .map(|v| graph.neighbors(v).iter().copied().filter(|&w| w < v).collect())
            .collect();
        ListColoringCounter {
            graph,
            earlier,
            colors: vec![usize::MAX; graph.vertex_count()],
        }
    }

    /// Counts colorings with `lists[v]` available at `v`. `fixed` pins some
    /// vertices to a color (pins outside the vertex's list give zero).
    pub fn count(&mut self, lists: &[Vec<usize>], fixed: &[(usize, usize)]) -> u64 {
        debug_assert_eq!(lists.len(), self.graph.vertex_count());
        let mut pin = vec![None; lists.len()];
        for &(v, c) in fixed {
            if !lists[v].contains(&c) || pin[v].is_some_and(|p| p != c) {
                return 0;
            }
            pin[v] = Some(c);
        }
        self.extend(lists, &pin, 0)
    }

    fn extend(&mut self, lists: &[Vec<usize>], pin: &[Option<usize>], v: usize) -> u64 {
        if v == lists.len() {
            return 1;
        }
        let mut total = 0;
        let single;
        let options: &[usize] = match pin[v] {
            Some(c) => {
                single = [c];
                &single
            }
            None => &lists[v],
        };
        for &c in options {
            if self.earlier[v].iter().all(|&w| self.colors[w] != c) {
                self.colors[v] = c;
                total += self.extend(lists, pin, v + 1);
            }
        }
        self.colors[v] = usize::MAX;
        total
    }
}

/// Number of proper `L`-colorings of `g`.
pub fn count_list_colorings(g: &Graph, assignment: &ListAssignment) -> Result<u64> {
    assignment.check_graph(g)?;
    Ok(ListColoringCounter::new(g).count(assignment.lists(), &[]))
}

/// Number of proper `L`-colorings of `g` that use the given colors on the
/// pinned vertices.
pub fn count_list_colorings_fixed(
    g: &Graph,
    assignment: &ListAssignment,
    fixed: &[(usize, usize)],
) -> Result<u64> {
    assignment.check_graph(g)?;
    if let Some(&(v, _)) = fixed.iter().find(|&&(v, _)| v >= g.vertex_count()) {
        return Err(Error::InvalidAssignment(format!("pinned vertex {v} out of range")));
    }
    Ok(ListColoringCounter::new(g).count(assignment.lists(), fixed))
}

/// Counts `N(c, d)` between the two ends of a path: rows follow the first
/// endpoint's sorted list, columns the last endpoint's.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CountMatrix {
    rows: Vec<usize>,
    cols: Vec<usize>,
    entries: Vec<u64>,
}

impl CountMatrix {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>, entries: Vec<u64>) -> Result<Self> {
        if entries.len() != rows.len() * cols.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                rows.len(),
                cols.len()
            )));
        }
        Ok(CountMatrix { rows, cols, entries })
    }

    /// `[c != d]` on the given index sets: the matrix of a single edge.
    pub fn inequality(rows: &[usize], cols: &[usize]) -> Self {
        let entries = rows
            .iter()
            .flat_map(|&c| cols.iter().map(move |&d| u64::from(c != d)))
            .collect();
        CountMatrix {
            rows: rows.to_vec(),
            cols: cols.to_vec(),
            entries,
        }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols.len() + j]
    }

    /// Entry for endpoint colors `(c, d)`; `None` if either is not in its list.
    pub fn get(&self, c: usize, d: usize) -> Option<u64> {
        let i = self.rows.binary_search(&c).ok()?;
        let j = self.cols.binary_search(&d).ok()?;
        Some(self.at(i, j))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    /// Entrywise `self <= other` on identical index sets.
    pub fn dominated_by(&self, other: &CountMatrix) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }
}

/// Pushes counts across one edge of a path: given counts `prev[a]` for the
/// colors `a` of `prev_list`, returns for each `b` in `next_list` the sum of
/// `prev[a]` over `a != b`.
pub(crate) fn transfer(prev_list: &[usize], prev: &[u64], next_list: &[usize]) -> Result<Vec<u64>> {
    let total = prev
        .iter()
        .try_fold(0u64, |acc, &x| acc.checked_add(x))
        .ok_or(Error::Overflow("path transfer"))?;
    Ok(next_list
        .iter()
        .map(|b| match prev_list.binary_search(b) {
            Ok(i) => total - prev[i],
            Err(_) => total,
        })
        .collect())
}

/// Count matrix of a path with `lists.len() - 1` edges whose vertices, in
/// order, carry the given lists.
pub fn path_count_matrix(lists: &[Vec<usize>]) -> Result<CountMatrix> {
    if lists.len() < 2 {
        return Err(Error::DimensionMismatch("a path needs at least one edge".into()));
    }
    let first = &lists[0];
    let last = lists.last().expect("nonempty");
    let mut entries = Vec::with_capacity(first.len() * last.len());
    for &c in first {
        let mut list: &[usize] = std::slice::from_ref(&c);
        let mut vals = vec![1u64];
        for next in &lists[1..] {
            vals = transfer(list, &vals, next)?;
            list = next;
        }
        entries.extend(vals);
    }
    CountMatrix::new(first.clone(), last.clone(), entries)
}

/// `sum over (c, d) of M1(c,d) * M2(c,d) * M3(c,d)`, the number of colorings
/// of the theta graph assembled from the three paths.
pub fn assemble_theta_count(
    lu: &[usize],
    lv: &[usize],
    matrices: [&CountMatrix; 3],
) -> Result<u64> {
    for (i, mat) in matrices.iter().enumerate() {
        if mat.rows != lu || mat.cols != lv {
            return Err(Error::DimensionMismatch(format!(
                "matrix {} is indexed by {:?}x{:?}, expected {:?}x{:?}",
                i + 1,
                mat.rows,
                mat.cols,
                lu,
                lv
            )));
        }
    }
    let [a, b, c] = matrices;
    a.entries
        .iter()
        .zip(&b.entries)
        .zip(&c.entries)
        .try_fold(0u64, |acc, ((&x, &y), &z)| {
            x.checked_mul(y)
                .and_then(|p| p.checked_mul(z))
                .and_then(|p| acc.checked_add(p))
        })
        .ok_or(Error::Overflow("theta assembly"))
}
