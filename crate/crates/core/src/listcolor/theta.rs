//! Exact list color function of graphs made of internally disjoint paths
//! between two end vertices `u` and `v` (theta graphs, and cycles seen as an
//! edge plus a path).
//!
//! For fixed end lists the paths are independent and the number of colorings
//! is `sum over (c, d) of the product of the paths' N(c, d)`, which is
//! monotone in every matrix entry. So it suffices to minimize over the
//! product of the per-path sets of minimal achievable matrices.

use num_bigint::BigUint;
use rayon::prelude::*;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use super::frontier::{achievable_matrices, AchievableMatrix, Pruning};
use super::{ListAssignment, ListColorResult, Method};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{ThetaGraph, ThetaSpec};

/// Minimum over assignments of the colorings of `paths.len()` parallel
/// paths, with the given lengths, joining `u` and `v`.
pub(crate) struct ParallelPathsOptimum {
    pub value: u64,
    pub lu: Vec<usize>,
    pub lv: Vec<usize>,
    /// Internal lists of each path, in the order of `lengths`.
    pub internal: Vec<Vec<Vec<usize>>>,
}

/// End list pairs up to palette relabeling: `L(u) = {0..m}` and `L(v)`
/// sharing its first `k` colors with `L(u)`.
pub(crate) fn end_list_pairs(m: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    (0..=m)
        .map(|k| {
            let lu: Vec<usize> = (0..m).collect();
            let lv: Vec<usize> = (0..k).chain(m..2 * m - k).collect();
            (lu, lv)
        })
        .collect()
}

pub(crate) fn parallel_paths_minimum(
    lengths: &[usize],
    m: usize,
    palette: usize,
    budget: &Budget,
    pruning: Pruning,
) -> Result<Vec<ParallelPathsOptimum>> {
    if m == 0 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    end_list_pairs(m)
        .into_par_iter()
        .map(|(lu, lv)| {
            let mut cache: BTreeMap<usize, Vec<AchievableMatrix>> = BTreeMap::new();
            for &l in lengths {
                if let Entry::Vacant(slot) = cache.entry(l) {
                    slot.insert(achievable_matrices(l, &lu, &lv, palette, pruning, budget.frontier)?);
                }
            }
            let frontiers: Vec<&[AchievableMatrix]> =
                lengths.iter().map(|l| cache[l].as_slice()).collect();
            let (value, picks) = minimize_product(&frontiers)?;
            let internal = picks
                .iter()
                .zip(&frontiers)
                .map(|(&i, f)| f[i].internal_lists.clone())
                .collect();
            Ok(ParallelPathsOptimum {
                value,
                lu,
                lv,
                internal,
            })
        })
        .collect()
}

/// Branch and bound over one matrix per frontier. Returns the minimum of
/// `sum of entrywise products` and the lexicographically first index tuple
/// attaining it.
fn minimize_product(frontiers: &[&[AchievableMatrix]]) -> Result<(u64, Vec<usize>)> {
    let cells = frontiers[0][0].matrix.entries().len();
    // floors[p] = entrywise product of the minima of frontiers p.. (a lower
    // bound on whatever the remaining paths contribute)
    let mut floors = vec![vec![1u64; cells]; frontiers.len() + 1];
    for p in (0..frontiers.len()).rev() {
        let mins: Vec<u64> = (0..cells)
            .map(|c| frontiers[p].iter().map(|a| a.matrix.entries()[c]).min().unwrap_or(0))
            .collect();
        floors[p] = mins
            .iter()
            .zip(&floors[p + 1])
            .map(|(x, y)| x.saturating_mul(*y))
            .collect();
    }

    let best = (0..frontiers[0].len())
        .into_par_iter()
        .map(|i| {
            let partial: Vec<u64> = frontiers[0][i].matrix.entries().to_vec();
            let mut best: Option<(u64, Vec<usize>)> = None;
            let mut picks = vec![i];
            search(frontiers, &floors, 1, &partial, &mut picks, &mut best)?;
            Ok(best)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .min_by(|a, b| a.cmp(b));
    best.ok_or_else(|| Error::Internal("empty frontier".into()))
}

fn search(
    frontiers: &[&[AchievableMatrix]],
    floors: &[Vec<u64>],
    depth: usize,
    partial: &[u64],
    picks: &mut Vec<usize>,
    best: &mut Option<(u64, Vec<usize>)>,
) -> Result<()> {
    let bound: u64 = partial
        .iter()
        .zip(&floors[depth])
        .fold(0u64, |acc, (x, y)| acc.saturating_add(x.saturating_mul(*y)));
    if best.as_ref().is_some_and(|(b, _)| bound >= *b) {
        return Ok(());
    }
    if depth == frontiers.len() {
        let value = partial
            .iter()
            .try_fold(0u64, |acc, &x| acc.checked_add(x))
            .ok_or(Error::Overflow("parallel path assembly"))?;
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            *best = Some((value, picks.clone()));
        }
        return Ok(());
    }
    for (i, a) in frontiers[depth].iter().enumerate() {
        let next: Vec<u64> = partial
            .iter()
            .zip(a.matrix.entries())
            .map(|(x, y)| x.checked_mul(*y).ok_or(Error::Overflow("parallel path assembly")))
            .collect::<Result<_>>()?;
        picks.push(i);
        search(frontiers, floors, depth + 1, &next, picks, best)?;
        picks.pop();
    }
    Ok(())
}

/// Exact `P_l(Θ, m)` with a witness assignment in the standard theta layout,
/// canonically relabeled, over the palette `0..m*|V|`.
pub fn list_color_function_theta(
    spec: &ThetaSpec,
    m: usize,
    budget: &Budget,
    pruning: Pruning,
) -> Result<ListColorResult> {
    let theta = ThetaGraph::build(*spec);
    let n = theta.graph.vertex_count();
    let palette = m * n;
    let optima = parallel_paths_minimum(&spec.lengths(), m, palette, budget, pruning)?;
    let best = optima
        .into_iter()
        .map(|opt| {
            let mut lists = vec![Vec::new(); n];
            lists[0] = opt.lu.clone();
            lists[1] = opt.lv.clone();
            for (path, internal) in theta.paths.iter().zip(&opt.internal) {
                for (&vertex, list) in path[1..path.len() - 1].iter().zip(internal) {
                    lists[vertex] = list.clone();
                }
            }
            let witness = ListAssignment::new(m, palette, lists).map(|a| a.canonical())?;
            Ok((opt.value, witness))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .ok_or_else(|| Error::Internal("no end list pairs".into()))?;
    Ok(ListColorResult {
        value: BigUint::from(best.0),
        witness: best.1,
        method: Method::PathFrontier,
    })
}
