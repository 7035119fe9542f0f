//! List assignments, exact `P(G, L)` counting and the list color function.

mod assignment;
mod count;
mod frontier;
mod generic;
mod theta;

pub use assignment::{AssignmentJson, ListAssignment};
pub use count::{
    assemble_theta_count, count_list_colorings, count_list_colorings_fixed, path_count_matrix,
    CountMatrix, ListColoringCounter,
};
pub use frontier::{achievable_matrices, AchievableMatrix, Pruning};
pub use generic::{canonical_assignment_count, list_color_function_exhaustive, list_color_function_generic};
pub use theta::list_color_function_theta;

use num_bigint::BigUint;
use serde::Serialize;

use crate::budget::Budget;
use crate::chromatic::chromatic_polynomial;
use crate::error::{Error, Result};
use crate::graph::{recognize_cycle, recognize_theta, Graph};

/// How a list color function value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// `m >= |E| - 1`, where the list color function equals the chromatic polynomial.
    Threshold,
    /// Minimal count matrices of the paths between two branch vertices.
    PathFrontier,
    /// Every canonical assignment.
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListColorResult {
    pub value: BigUint,
    pub witness: ListAssignment,
    pub method: Method,
}

/// `P_l(G, m)` by the cheapest exact route: the threshold shortcut, the path
/// search for theta graphs and cycles, or exhaustive enumeration otherwise.
/// Witnesses are expressed on `g`'s own vertex numbering.
pub fn list_color_function(g: &Graph, m: usize, budget: &Budget) -> Result<ListColorResult> {
    if m == 0 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    if m + 1 >= g.edge_count() {
        return list_color_function_generic(g, m, budget);
    }
    if let Some((layout, mapping)) = recognize_theta(g) {
        let r = list_color_function_theta(&layout.spec, m, budget, Pruning::Dominance)?;
        let mut lists = vec![Vec::new(); g.vertex_count()];
        for (i, &target) in mapping.iter().enumerate() {
            lists[target] = r.witness.list(i).to_vec();
        }
        let witness = ListAssignment::new(m, r.witness.palette(), lists)?.canonical();
        return Ok(ListColorResult { witness, ..r });
    }
    if let Some(order) = recognize_cycle(g) {
        return cycle_list_color_function(g, &order, m, budget);
    }
    list_color_function_exhaustive(g, m, budget)
}

/// A cycle is the edge `order[0] order[1]` in parallel with the path
/// `order[0], order[n-1], ..., order[1]`.
fn cycle_list_color_function(
    g: &Graph,
    order: &[usize],
    m: usize,
    budget: &Budget,
) -> Result<ListColorResult> {
    let n = order.len();
    let palette = m * n;
    let optima = theta::parallel_paths_minimum(&[1, n - 1], m, palette, budget, Pruning::Dominance)?;
    let mut best: Option<(u64, ListAssignment)> = None;
    for opt in optima {
        let mut lists = vec![Vec::new(); g.vertex_count()];
        lists[order[0]] = opt.lu.clone();
        lists[order[1]] = opt.lv.clone();
        let long_path_internal: Vec<usize> = (2..n).rev().map(|i| order[i]).collect();
        for (&vertex, list) in long_path_internal.iter().zip(&opt.internal[1]) {
            lists[vertex] = list.clone();
        }
        let witness = ListAssignment::new(m, palette, lists)?.canonical();
        let cand = (opt.value, witness);
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    let (value, witness) = best.ok_or_else(|| Error::Internal("no end list pairs".into()))?;
    Ok(ListColorResult {
        value: BigUint::from(value),
        witness,
        method: Method::PathFrontier,
    })
}

/// `P(G, m)` as an unsigned integer.
pub(crate) fn chromatic_value(g: &Graph, m: usize) -> BigUint {
    chromatic_polynomial(g)
        .eval_u64(m as u64)
        .to_biguint()
        .expect("chromatic polynomial values at nonnegative integers are nonnegative")
}
