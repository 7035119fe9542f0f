//! Achievable count matrices of a path with fixed endpoint lists.
//!
//! The internal lists are chosen one vertex at a time. After each vertex the
//! search keeps, per candidate, the partial counts `T(c, a)`: colorings of the
//! prefix with the first endpoint colored `c` and the current vertex `a`.
//! All later counts are nonnegative combinations of these, so a candidate
//! whose counts are entrywise at least another's can be dropped.
//!
//! Colors outside the endpoint lists ("outside colors") only interact with
//! the neighboring vertex, so they are interchangeable: new ones are always
//! the smallest outside colors not on the current vertex, and candidates that
//! differ only by a renaming of outside colors are merged.

use rayon::prelude::*;
use std::collections::HashMap;

use super::count::{transfer, CountMatrix};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Pruning {
    /// Keep only entrywise-minimal candidates.
    #[default]
    Dominance,
    /// Keep every distinct candidate.
    Off,
}

/// A count matrix together with internal lists that realize it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AchievableMatrix {
    pub matrix: CountMatrix,
    /// Lists of the internal vertices, from the first endpoint's side.
    pub internal_lists: Vec<Vec<usize>>,
}

#[derive(Clone)]
struct State {
    list: Vec<usize>,
    /// Row-major `T(c, a)`: rows follow the first endpoint list, columns `list`.
    counts: Vec<u64>,
    history: Vec<Vec<usize>>,
}

/// A successor state paired with its canonical key.
type Expansion = (State, (Vec<u64>, usize));

struct Context<'a> {
    lu: &'a [usize],
    endpoint_colors: Vec<usize>,
    is_endpoint: Vec<bool>,
    outside_total: usize,
    palette: usize,
    m: usize,
}

impl Context<'_> {
    /// Canonical key: columns of the endpoint colors in fixed order, then the
    /// nonzero outside columns sorted. Equal keys mean interchangeable states.
    fn key(&self, s: &State) -> (Vec<u64>, usize) {
        let rows = self.lu.len();
        let width = s.list.len();
        let mut key = Vec::with_capacity(rows * (self.endpoint_colors.len() + self.m));
        for &e in &self.endpoint_colors {
            match s.list.binary_search(&e) {
                Ok(j) => key.extend((0..rows).map(|i| s.counts[i * width + j])),
                Err(_) => key.extend(std::iter::repeat_n(0, rows)),
            }
        }
        let mut outside: Vec<Vec<u64>> = s
            .list
            .iter()
            .enumerate()
            .filter(|&(_, &a)| !self.is_endpoint[a])
            .map(|(j, _)| (0..rows).map(|i| s.counts[i * width + j]).collect::<Vec<_>>())
            .filter(|col| col.iter().any(|&x| x != 0))
            .collect();
        outside.sort_unstable();
        let k = outside.len();
        key.extend(outside.into_iter().flatten());
        (key, k)
    }

    /// Candidate lists for the vertex after one carrying `prev`.
    fn next_lists(&self, prev: &[usize]) -> Vec<Vec<usize>> {
        let mut named: Vec<usize> = self.endpoint_colors.clone();
        named.extend(prev.iter().copied().filter(|&a| !self.is_endpoint[a]));
        named.sort_unstable();
        let prev_outside = prev.iter().filter(|&&a| !self.is_endpoint[a]).count();
        let fresh_pool: Vec<usize> = (0..self.palette)
            .filter(|&c| !self.is_endpoint[c] && prev.binary_search(&c).is_err())
            .take(self.m)
            .collect();
        let fresh_available = (self.outside_total - prev_outside).min(fresh_pool.len());
        let mut out = Vec::new();
        for fresh in 0..=self.m.min(fresh_available) {
            let take = self.m - fresh;
            if take > named.len() {
                continue;
            }
            for combo in combinations(named.len(), take) {
                let mut list: Vec<usize> = combo.iter().map(|&i| named[i]).collect();
                list.extend_from_slice(&fresh_pool[..fresh]);
                list.sort_unstable();
                out.push(list);
            }
        }
        out
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Sound dominance test on canonical keys: `a <= b` entrywise on the
/// endpoint block, and `a`'s outside columns injected into `b`'s.
fn key_dominates(a: &(Vec<u64>, usize), b: &(Vec<u64>, usize), fixed_len: usize, rows: usize) -> bool {
    let (ka, na) = (&a.0, a.1);
    let (kb, nb) = (&b.0, b.1);
    if na > nb {
        return false;
    }
    if ka[..fixed_len].iter().zip(&kb[..fixed_len]).any(|(x, y)| x > y) {
        return false;
    }
    // Pair a's largest outside columns with b's largest.
    let offset = nb - na;
    (0..na).all(|t| {
        let ca = &ka[fixed_len + t * rows..fixed_len + (t + 1) * rows];
        let cb = &kb[fixed_len + (t + offset) * rows..fixed_len + (t + offset + 1) * rows];
        ca.iter().zip(cb).all(|(x, y)| x <= y)
    })
}

/// Deduplicates by key, then (with pruning) keeps the entrywise-minimal
/// items. Output is sorted by `(sum of key, key)` and independent of the
/// input order beyond first-occurrence tie-breaking among equal keys.
fn pareto<T>(
    items: Vec<(T, (Vec<u64>, usize))>,
    fixed_len: usize,
    rows: usize,
    pruning: Pruning,
    cap: usize,
    what: &'static str,
) -> Result<Vec<T>> {
    let mut seen: HashMap<(Vec<u64>, usize), usize> = HashMap::new();
    let mut unique: Vec<(T, (Vec<u64>, usize), u64)> = Vec::new();
    for (item, key) in items {
        if seen.contains_key(&key) {
            continue;
        }
        seen.insert(key.clone(), unique.len());
        let sum = key.0.iter().sum();
        unique.push((item, key, sum));
    }
    unique.sort_by(|a, b| (a.2, &a.1).cmp(&(b.2, &b.1)));
    let mut kept: Vec<(T, (Vec<u64>, usize), u64)> = Vec::new();
    for cand in unique {
        let dominated = pruning == Pruning::Dominance
            && kept
                .iter()
                .any(|k| k.2 <= cand.2 && key_dominates(&k.1, &cand.1, fixed_len, rows));
        if !dominated {
            if kept.len() >= cap {
                return Err(Error::BudgetExceeded {
                    what,
                    limit: cap as u64,
                });
            }
            kept.push(cand);
        }
    }
    Ok(kept.into_iter().map(|k| k.0).collect())
}

/// Count matrices of a path with `length` edges, endpoint lists `lu` and `lv`,
/// over all choices of internal `m`-lists from `0..palette`.
///
/// With [`Pruning::Dominance`] only the entrywise-minimal matrices are
/// returned; every achievable matrix dominates one of them. `frontier_cap`
/// bounds the number of candidates kept at any stage.
pub fn achievable_matrices(
    length: usize,
    lu: &[usize],
    lv: &[usize],
    palette: usize,
    pruning: Pruning,
    frontier_cap: usize,
) -> Result<Vec<AchievableMatrix>> {
    let m = lu.len();
    if length == 0 {
        return Err(Error::DimensionMismatch("path length must be at least 1".into()));
    }
    if lv.len() != m || m == 0 {
        return Err(Error::DimensionMismatch(format!(
            "endpoint lists of sizes {} and {}",
            lu.len(),
            lv.len()
        )));
    }
    let sorted_distinct = |l: &[usize]| l.windows(2).all(|w| w[0] < w[1]);
    if !sorted_distinct(lu) || !sorted_distinct(lv) {
        return Err(Error::InvalidAssignment("endpoint lists must be sorted and distinct".into()));
    }
    if lu.iter().chain(lv).any(|&c| c >= palette) {
        return Err(Error::InvalidAssignment(format!("endpoint color outside 0..{palette}")));
    }
    let mut endpoint_colors: Vec<usize> = lu.iter().chain(lv).copied().collect();
    endpoint_colors.sort_unstable();
    endpoint_colors.dedup();
    let mut is_endpoint = vec![false; palette];
    for &c in &endpoint_colors {
        is_endpoint[c] = true;
    }
    let ctx = Context {
        lu,
        outside_total: palette - endpoint_colors.len(),
        endpoint_colors,
        is_endpoint,
        palette,
        m,
    };
    let rows = m;
    let fixed_len = rows * ctx.endpoint_colors.len();

    // The first endpoint itself: T(c, a) = [c == a].
    let start = State {
        list: lu.to_vec(),
        counts: (0..m).flat_map(|i| (0..m).map(move |j| u64::from(i == j))).collect(),
        history: Vec::new(),
    };
    let mut frontier = vec![start];
    for _ in 1..length {
        let expanded: Vec<Vec<Expansion>> = frontier
            .par_iter()
            .map(|s| step(&ctx, s))
            .collect::<Result<_>>()?;
        frontier = pareto(
            expanded.into_iter().flatten().collect(),
            fixed_len,
            rows,
            pruning,
            frontier_cap,
            "path search frontier",
        )?;
    }

    let finals: Vec<(AchievableMatrix, (Vec<u64>, usize))> = frontier
        .par_iter()
        .map(|s| {
            let width = s.list.len();
            let mut entries = Vec::with_capacity(m * m);
            for i in 0..rows {
                let row = &s.counts[i * width..(i + 1) * width];
                entries.extend(transfer(&s.list, row, lv)?);
            }
            let matrix = CountMatrix::new(lu.to_vec(), lv.to_vec(), entries)?;
            let key = (matrix.entries().to_vec(), 0);
            Ok((
                AchievableMatrix {
                    matrix,
                    internal_lists: s.history.clone(),
                },
                key,
            ))
        })
        .collect::<Result<_>>()?;
    pareto(finals, m * m, rows, pruning, frontier_cap, "path search frontier")
}

fn step(ctx: &Context<'_>, s: &State) -> Result<Vec<Expansion>> {
    let rows = ctx.lu.len();
    let width = s.list.len();
    ctx.next_lists(&s.list)
        .into_iter()
        .map(|list| {
            let mut counts = Vec::with_capacity(rows * list.len());
            for i in 0..rows {
                counts.extend(transfer(&s.list, &s.counts[i * width..(i + 1) * width], &list)?);
            }
            let mut history = s.history.clone();
            history.push(list.clone());
            let next = State {
                list,
                counts,
                history,
            };
            let key = ctx.key(&next);
            Ok((next, key))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::listcolor::path_count_matrix;

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(
            combinations(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn single_edge_is_the_inequality_matrix() {
        let out = achievable_matrices(1, &[0, 1, 2], &[1, 3, 4], 9, Pruning::Dominance, 100).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].matrix, CountMatrix::inequality(&[0, 1, 2], &[1, 3, 4]));
        assert!(out[0].internal_lists.is_empty());
    }

    #[test]
    fn two_edges_can_reach_a_zero_entry() {
        let out = achievable_matrices(2, &[0, 1], &[0, 1], 4, Pruning::Dominance, 100).unwrap();
        assert!(out.iter().any(|a| a.matrix.entries().contains(&0)));
        let with_01 = out.iter().find(|a| a.internal_lists == vec![vec![0, 1]]);
        assert!(with_01.is_some());
    }

    #[test]
    fn witnesses_reproduce_their_matrices() {
        let lu = [0, 1, 2];
        let lv = [1, 3, 4];
        for pruning in [Pruning::Dominance, Pruning::Off] {
            let out = achievable_matrices(3, &lu, &lv, 15, pruning, 1_000_000).unwrap();
            for a in &out {
                let mut lists = vec![lu.to_vec()];
                lists.extend(a.internal_lists.iter().cloned());
                lists.push(lv.to_vec());
                assert_eq!(path_count_matrix(&lists).unwrap(), a.matrix);
            }
        }
    }

    #[test]
    fn frontier_cap_is_enforced() {
        let err = achievable_matrices(3, &[0, 1, 2], &[0, 1, 2], 15, Pruning::Off, 3).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { limit: 3, .. }));
    }

    #[test]
    fn rejects_bad_endpoints() {
        assert!(achievable_matrices(2, &[0, 1], &[0], 4, Pruning::Off, 10).is_err());
        assert!(achievable_matrices(2, &[1, 0], &[0, 1], 4, Pruning::Off, 10).is_err());
        assert!(achievable_matrices(2, &[0, 1], &[0, 7], 4, Pruning::Off, 10).is_err());
        assert!(achievable_matrices(0, &[0, 1], &[0, 1], 4, Pruning::Off, 10).is_err());
    }
}
