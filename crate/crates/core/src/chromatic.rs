//! Chromatic polynomials: deletion–contraction, closed forms and a
//! brute-force coloring counter.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::collections::HashMap;

use crate::budget::bounded_pow;
use crate::error::{Error, Result};
use crate::graph::{Graph, ThetaSpec};
use crate::poly::IntPolynomial;

type MemoKey = (usize, Vec<(usize, usize)>);

/// Chromatic polynomial by deletion–contraction.
///
/// Each step removes the lexicographically smallest edge that closes a cycle
/// with the earlier edges (Kruskal order); forests are evaluated directly as
/// `m^c (m-1)^|E|`.
pub fn chromatic_polynomial(g: &Graph) -> IntPolynomial {
    let mut memo = HashMap::new();
    delete_contract(g.vertex_count(), g.edges().to_vec(), &mut memo)
}

fn delete_contract(
    n: usize,
    edges: Vec<(usize, usize)>,
    memo: &mut HashMap<MemoKey, IntPolynomial>,
) -> IntPolynomial {
    let key = (n, edges);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let (n, edges) = key;
    let result = match first_cycle_edge(n, &edges) {
        None => {
            let components = n - edges.len();
            let m = IntPolynomial::var();
            &m.pow(components as u32) * &IntPolynomial::var_minus(1).pow(edges.len() as u32)
        }
        Some(idx) => {
            let (a, b) = edges[idx];
            let mut deleted = edges.clone();
            deleted.remove(idx);
            let contracted = contract(&edges, a, b);
            let pd = delete_contract(n, deleted, memo);
            let pc = delete_contract(n - 1, contracted, memo);
            &pd - &pc
        }
    };
    memo.insert((n, edges), result.clone());
    result
}

/// Index of the first edge (in sorted order) whose endpoints are already
/// joined by earlier edges.
fn first_cycle_edge(n: usize, edges: &[(usize, usize)]) -> Option<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return Some(i);
        }
        parent[ra] = rb;
    }
    None
}

/// Contracts edge `(a, b)` with `a < b`: `b` merges into `a`, later vertices
/// shift down by one, and parallel edges collapse.
fn contract(edges: &[(usize, usize)], a: usize, b: usize) -> Vec<(usize, usize)> {
    let relabel = |x: usize| match x.cmp(&b) {
        std::cmp::Ordering::Less => x,
        std::cmp::Ordering::Equal => a,
        std::cmp::Ordering::Greater => x - 1,
    };
    let mut out: Vec<(usize, usize)> = edges
        .iter()
        .filter(|&&e| e != (a, b))
        .map(|&(x, y)| {
            let (x, y) = (relabel(x), relabel(y));
            (x.min(y), x.max(y))
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn eval_poly(p: &IntPolynomial, m: u64) -> BigInt {
    p.eval_u64(m)
}

/// Counts proper `m`-colorings by visiting all `m^n` assignments.
/// Refuses when `m^n` exceeds `budget`.
pub fn count_colorings_bruteforce(g: &Graph, m: u64, budget: u64) -> Result<u64> {
    let n = g.vertex_count();
    if bounded_pow(m, n as u32, budget).is_none() {
        return Err(Error::BudgetExceeded {
            what: "brute-force coloring enumeration",
            limit: budget,
        });
    }
    if m == 0 {
        return Ok(0);
    }
    let mut colors = vec![0u64; n];
    let mut count = 0u64;
    loop {
        if g.edges().iter().all(|&(a, b)| colors[a] != colors[b]) {
            count += 1;
        }
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                return Ok(count);
            }
            colors[i] += 1;
            if colors[i] < m {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Closed form for theta graphs as a sum of two exact quotients, over
/// `(m(m-1))^2` and `m^2`. Both divisions are checked.
pub fn theta_chromatic_closed_form(spec: &ThetaSpec, m: u64) -> Result<BigInt> {
    if m < 2 {
        return Err(Error::Domain(format!("theta closed form needs m >= 2, got {m}")));
    }
    let m = BigInt::from(m);
    let q: BigInt = &m - 1;
    let sign = |l: usize| if l.is_multiple_of(2) { BigInt::from(1) } else { BigInt::from(-1) };
    let mut first = BigInt::from(1);
    let mut second = BigInt::from(1);
    for l in spec.lengths() {
        first *= q.pow(l as u32 + 1) - sign(l) * &q;
        second *= q.pow(l as u32) + sign(l) * &q;
    }
    let d1 = (&m * &q).pow(2);
    let d2 = m.pow(2);
    Ok(exact_div(&first, &d1, "theta chromatic first term")?
        + exact_div(&second, &d2, "theta chromatic second term")?)
}

pub(crate) fn exact_div(num: &BigInt, den: &BigInt, what: &str) -> Result<BigInt> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::Internal(format!(
            "{what}: {num} is not divisible by {den}"
        )));
    }
    Ok(q)
}

/// Smallest `m >= 1` with a proper `m`-coloring.
pub fn chromatic_number(g: &Graph) -> usize {
    let p = chromatic_polynomial(g);
    (1..=g.vertex_count())
        .find(|&m| p.eval_u64(m as u64).is_positive())
        .expect("n colors always suffice")
}
