//! Exhaustive list color function over canonical assignments.

use num_bigint::BigUint;
use rayon::prelude::*;

use super::count::ListColoringCounter;
use super::frontier::combinations;
use super::{ListAssignment, ListColorResult, Method};
use crate::budget::Budget;
use crate::chromatic::chromatic_polynomial;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Candidate lists for the next vertex when `used` colors have appeared so
/// far: some old colors plus the next unused ones, lexicographically sorted.
fn extensions(used: usize, m: usize) -> Vec<(Vec<usize>, usize)> {
    let mut out = Vec::new();
    for fresh in 0..=m {
        let old = m - fresh;
        if old > used {
            continue;
        }
        for combo in combinations(used, old) {
            let mut list = combo;
            list.extend(used..used + fresh);
            out.push((list, used + fresh));
        }
    }
    out.sort();
    out
}

/// Number of canonical `m`-assignments of `n` vertices, saturating.
pub fn canonical_assignment_count(n: usize, m: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    let binom = |a: usize, b: usize| -> u64 {
        if b > a {
            return 0;
        }
        (0..b).fold(1u64, |acc, i| acc.saturating_mul((a - i) as u64) / (i as u64 + 1))
    };
    // ways[used] for the vertices still to be assigned
    let max_used = m * n;
    let mut ways = vec![1u64; max_used + 1];
    for _ in 1..n {
        let mut next = vec![0u64; max_used + 1];
        for (used, slot) in next.iter_mut().enumerate() {
            let mut total = 0u64;
            for fresh in 0..=m {
                if used + fresh > max_used {
                    break;
                }
                total = total.saturating_add(binom(used, m - fresh).saturating_mul(ways[used + fresh]));
            }
            *slot = total;
        }
        ways = next;
    }
    ways[m]
}

/// Minimum of `P(G, L)` over every canonical `m`-assignment of `g`,
/// without shortcuts. The witness is the lexicographically smallest
/// canonical assignment attaining the minimum.
pub fn list_color_function_exhaustive(g: &Graph, m: usize, budget: &Budget) -> Result<ListColorResult> {
    if m == 0 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    let n = g.vertex_count();
    let total = canonical_assignment_count(n, m);
    if total > budget.assignments {
        return Err(Error::BudgetExceeded {
            what: "canonical list assignments",
            limit: budget.assignments,
        });
    }

    // Split the search into independent subtrees by fixing a short prefix.
    let split = n.min(3);
    let mut prefixes: Vec<(Vec<Vec<usize>>, usize)> = vec![(vec![(0..m).collect()], m)];
    for _ in 1..split {
        prefixes = prefixes
            .into_iter()
            .flat_map(|(lists, used)| {
                extensions(used, m).into_iter().map(move |(l, u)| {
                    let mut lists = lists.clone();
                    lists.push(l);
                    (lists, u)
                })
            })
            .collect();
    }

    let best = prefixes
        .into_par_iter()
        .map(|(prefix, used)| {
            let mut counter = ListColoringCounter::new(g);
            let mut lists = prefix;
            let mut best: Option<(u64, Vec<Vec<usize>>)> = None;
            descend(&mut counter, n, m, used, &mut lists, &mut best);
            best.expect("every subtree has a leaf")
        })
        .collect::<Vec<_>>()
        .into_iter()
        .min()
        .expect("at least one prefix");

    let witness = ListAssignment::new(m, m * n, best.1)?;
    Ok(ListColorResult {
        value: BigUint::from(best.0),
        witness,
        method: Method::Exhaustive,
    })
}

fn descend(
    counter: &mut ListColoringCounter<'_>,
    n: usize,
    m: usize,
    used: usize,
    lists: &mut Vec<Vec<usize>>,
    best: &mut Option<(u64, Vec<Vec<usize>>)>,
) {
    if lists.len() == n {
        let value = counter.count(lists, &[]);
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            *best = Some((value, lists.clone()));
        }
        return;
    }
    for (list, next_used) in extensions(used, m) {
        lists.push(list);
        descend(counter, n, m, next_used, lists, best);
        lists.pop();
    }
}

/// `P_l(G, m)` for a general graph. When `m >= |E| - 1` the list color
/// function equals the chromatic polynomial and no search is done; otherwise
/// every canonical assignment is visited.
pub fn list_color_function_generic(g: &Graph, m: usize, budget: &Budget) -> Result<ListColorResult> {
    if m == 0 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    if m + 1 >= g.edge_count() {
        let value = chromatic_polynomial(g).eval_u64(m as u64);
        let value = value
            .to_biguint()
            .ok_or_else(|| Error::Internal("negative chromatic polynomial value".into()))?;
        return Ok(ListColorResult {
            value,
            witness: ListAssignment::uniform(g.vertex_count(), m),
            method: Method::Threshold,
        });
    }
    list_color_function_exhaustive(g, m, budget)
}
