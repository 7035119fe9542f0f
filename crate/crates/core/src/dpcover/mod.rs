//! DP-covers (correspondence coloring), transversal counting and the DP
//! color function.

mod cover;

pub use cover::{
    count_cover_colorings, cover_from_list_assignment, Cover, CoverCounter, CoverJson,
    EdgeMatchingJson, FreeEdge, GaugedCover,
};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::budget::Budget;
use crate::chromatic::exact_div;
use crate::error::{Error, Result};
use crate::graph::{Graph, ThetaSpec};

/// Transversals of a full `m`-fold cover of a `k`-edge path that contain a
/// given label at each end: `((m-1)^k - (-1)^k)/m`, plus `(-1)^k` when the
/// two labels are joined by a path in the cover graph.
pub fn path_cover_count(k: u32, m: u64, connected: bool) -> Result<BigInt> {
    if k == 0 || m < 2 {
        return Err(Error::Domain(format!("path cover count needs k >= 1 and m >= 2, got k={k}, m={m}")));
    }
    let sign = if k.is_multiple_of(2) { BigInt::from(1) } else { BigInt::from(-1) };
    let base = exact_div(
        &(BigInt::from(m - 1).pow(k) - &sign),
        &BigInt::from(m),
        "path cover count",
    )?;
    Ok(if connected { base + sign } else { base })
}

/// All permutations of `0..m` in lexicographic order of one-line notation.
pub(crate) fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..m).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..m).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let pivot = i - 1;
        let j = (pivot + 1..m).rev().find(|&j| cur[j] > cur[pivot]).expect("successor exists");
        cur.swap(pivot, j);
        cur[pivot + 1..].reverse();
        out.push(cur.clone());
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpResult {
    pub value: u64,
    pub witness: GaugedCover,
}

/// Exact `P_DP(G, m)`.
///
/// Only full covers are searched: deleting cover edges never removes an
/// independent transversal. Relabeling within label sets maps covers to
/// covers with the same count, so the BFS spanning forest can be fixed to
/// identity matchings; every remaining edge ranges over all `m!`
/// permutations. Tuples are visited lexicographically (edges sorted, each
/// permutation in one-line order) and the first minimum is the witness.
pub fn dp_color_function_exact(g: &Graph, m: usize, budget: &Budget) -> Result<DpResult> {
    if m == 0 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    let tree = g.bfs_spanning_forest();
    let free: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| tree.binary_search(e).is_err())
        .collect();
    let perms = permutations(m);
    let tuples = crate::budget::bounded_pow(perms.len() as u64, free.len() as u32, budget.covers)
        .ok_or(Error::BudgetExceeded {
            what: "gauge-fixed covers",
            limit: budget.covers,
        })?;
    debug_assert!(tuples >= 1);

    let identity: Vec<Option<usize>> = (0..m).map(Some).collect();
    let perm_tables: Vec<Vec<Option<usize>>> =
        perms.iter().map(|p| p.iter().copied().map(Some).collect()).collect();
    let counter_proto = CoverCounter::new(g, m);
    let free_pos: Vec<usize> = free
        .iter()
        .map(|&(a, b)| counter_proto.edge_position(a, b).expect("free edge is an edge"))
        .collect();
    let base_table: Vec<Vec<Option<usize>>> = vec![identity; g.edge_count()];

    let run = |first: Option<usize>| -> (u64, Vec<usize>) {
        let mut counter = CoverCounter::new(g, m);
        let mut table = base_table.clone();
        let mut choice = vec![0usize; free.len()];
        let start = usize::from(first.is_some());
        if let Some(f) = first {
            choice[0] = f;
            table[free_pos[0]] = perm_tables[f].clone();
        }
        let mut best: Option<(u64, Vec<usize>)> = None;
        loop {
            for (k, &c) in choice.iter().enumerate().skip(start) {
                table[free_pos[k]] = perm_tables[c].clone();
            }
            let value = counter.count(&table, &[]);
            if best.as_ref().is_none_or(|(b, _)| value < *b) {
                best = Some((value, choice.clone()));
            }
            // odometer over positions start.., last position fastest
            let mut k = free.len();
            loop {
                if k == start {
                    return best.expect("at least one cover");
                }
                k -= 1;
                choice[k] += 1;
                if choice[k] < perms.len() {
                    break;
                }
                choice[k] = 0;
            }
        }
    };

    let (value, choice) = if free.is_empty() {
        run(None)
    } else {
        (0..perms.len())
            .into_par_iter()
            .map(|f| run(Some(f)))
            .collect::<Vec<_>>()
            .into_iter()
            .min()
            .expect("m! >= 1")
    };

    let witness = GaugedCover {
        m,
        tree_edges: tree.iter().map(|&(a, b)| [a, b]).collect(),
        free_edges: free
            .iter()
            .zip(&choice)
            .map(|(&(a, b), &c)| FreeEdge {
                edge: [a, b],
                perm: perms[c].clone(),
            })
            .collect(),
    };
    Ok(DpResult { value, witness })
}

/// Closed form of `P_DP(Θ, m)` when `l1` and `l3` share a parity that differs
/// from `l2`'s:
/// `((m-1)^(l1+l2+l3) + (m-1)^l1 - (m-1)^l2 - (m-1)^(l3+1) + (-1)^(l2+1) (m-2)) / m`.
pub fn theta_dp_closed_form(spec: &ThetaSpec, m: u64) -> Result<BigInt> {
    if !spec.l1_l3_match_l2_differs() {
        return Err(Error::Domain(format!(
            "DP closed form needs l1, l3 of one parity and l2 of the other; got ({spec})"
        )));
    }
    if m < 2 {
        return Err(Error::Domain(format!("DP closed form needs m >= 2, got {m}")));
    }
    let q = BigInt::from(m - 1);
    let pw = |e: usize| q.pow(e as u32);
    let sign = if (spec.l2 + 1).is_multiple_of(2) { BigInt::from(1) } else { BigInt::from(-1) };
    let num = pw(spec.total_length()) + pw(spec.l1) - pw(spec.l2) - pw(spec.l3 + 1)
        + sign * BigInt::from(m as i64 - 2);
    exact_div(&num, &BigInt::from(m), "theta DP closed form")
}
