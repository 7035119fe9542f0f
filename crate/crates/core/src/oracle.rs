//! Slow reference implementations. Nothing here shares code with the
//! solvers: every quantity is obtained by visiting all candidates.

use std::collections::{BTreeMap, BTreeSet};

use crate::budget::bounded_pow;
use crate::dpcover::Cover;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::listcolor::CountMatrix;

fn refuse(what: &'static str, limit: u64) -> Error {
    Error::BudgetExceeded { what, limit }
}

/// Visits every tuple `(i_0, ..., i_{n-1})` with `i_k < sizes[k]`, last
/// position fastest.
fn for_each_tuple(sizes: &[usize], mut visit: impl FnMut(&[usize])) {
    if sizes.contains(&0) {
        return;
    }
    let mut idx = vec![0usize; sizes.len()];
    loop {
        visit(&idx);
        let mut k = sizes.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < sizes[k] {
                break;
            }
            idx[k] = 0;
        }
    }
}

fn product_size(sizes: &[usize], limit: u64, what: &'static str) -> Result<u64> {
    sizes.iter().try_fold(1u64, |acc, &s| {
        acc.checked_mul(s as u64)
            .filter(|&p| p <= limit)
            .ok_or_else(|| refuse(what, limit))
    })
}

/// Proper colorings of `g` from the given lists, with optional pinned
/// `(vertex, color)` pairs, by enumerating the full product of lists.
pub fn count_list_colorings_bruteforce(
    g: &Graph,
    lists: &[Vec<usize>],
    fixed: &[(usize, usize)],
    limit: u64,
) -> Result<u64> {
    if lists.len() != g.vertex_count() {
        return Err(Error::DimensionMismatch(format!(
            "{} lists for {} vertices",
            lists.len(),
            g.vertex_count()
        )));
    }
    let choices: Vec<Vec<usize>> = lists
        .iter()
        .enumerate()
        .map(|(v, l)| match fixed.iter().find(|&&(w, _)| w == v) {
            Some(&(_, c)) if l.contains(&c) => vec![c],
            Some(_) => Vec::new(),
            None => l.clone(),
        })
        .collect();
    let sizes: Vec<usize> = choices.iter().map(Vec::len).collect();
    product_size(&sizes, limit, "brute-force list colorings")?;
    let mut count = 0u64;
    for_each_tuple(&sizes, |idx| {
        let color = |v: usize| choices[v][idx[v]];
        if g.edges().iter().all(|&(a, b)| color(a) != color(b)) {
            count += 1;
        }
    });
    Ok(count)
}

/// Independent transversals of `cover`, with optional pinned
/// `(vertex, label)` pairs, by enumerating all `m^n` transversals.
pub fn count_transversals_bruteforce(
    g: &Graph,
    cover: &Cover,
    fixed: &[(usize, usize)],
    limit: u64,
) -> Result<u64> {
    let m = cover.m();
    let sizes: Vec<usize> = (0..g.vertex_count())
        .map(|v| if fixed.iter().any(|&(w, _)| w == v) { 1 } else { m })
        .collect();
    product_size(&sizes, limit, "brute-force transversals")?;
    let mut edges = Vec::with_capacity(g.edge_count());
    for &(a, b) in g.edges() {
        let matching = cover
            .matching(a, b)
            .ok_or_else(|| Error::InvalidCover(format!("no matching on edge ({a},{b})")))?;
        edges.push((a, b, matching));
    }
    let mut count = 0u64;
    for_each_tuple(&sizes, |idx| {
        let label = |v: usize| match fixed.iter().find(|&&(w, _)| w == v) {
            Some(&(_, x)) => x,
            None => idx[v],
        };
        if edges.iter().all(|&(a, b, matching)| matching[label(a)] != Some(label(b))) {
            count += 1;
        }
    });
    Ok(count)
}

/// Count matrix of a path whose vertices carry `lists`, from all colorings.
pub fn path_count_matrix_bruteforce(lists: &[Vec<usize>], limit: u64) -> Result<CountMatrix> {
    if lists.len() < 2 {
        return Err(Error::DimensionMismatch("a path needs at least two vertices".into()));
    }
    let n = lists.len();
    let path = Graph::new(n, (1..n).map(|i| (i - 1, i)))?;
    let mut entries = Vec::new();
    for &c in &lists[0] {
        for &d in &lists[n - 1] {
            entries.push(count_list_colorings_bruteforce(&path, lists, &[(0, c), (n - 1, d)], limit)?);
        }
    }
    CountMatrix::new(lists[0].clone(), lists[n - 1].clone(), entries)
}

fn subsets(palette: usize, m: usize) -> Vec<Vec<usize>> {
    (0u64..1 << palette)
        .filter(|mask| mask.count_ones() as usize == m)
        .map(|mask| (0..palette).filter(|&c| mask >> c & 1 == 1).collect())
        .collect()
}

/// Every distinct count matrix of a `length`-edge path with end lists `lu`
/// and `lv`, over all internal `m`-lists drawn from `0..palette`.
pub fn achievable_matrices_bruteforce(
    length: usize,
    lu: &[usize],
    lv: &[usize],
    palette: usize,
    limit: u64,
) -> Result<BTreeSet<Vec<u64>>> {
    if length == 0 || palette > 20 {
        return Err(Error::Domain("need length >= 1 and palette <= 20".into()));
    }
    let options = subsets(palette, lu.len());
    let sizes = vec![options.len(); length - 1];
    product_size(&sizes, limit, "internal list choices")?;
    let mut out = BTreeSet::new();
    let mut failure = None;
    for_each_tuple(&sizes, |idx| {
        let mut lists = vec![lu.to_vec()];
        lists.extend(idx.iter().map(|&i| options[i].clone()));
        lists.push(lv.to_vec());
        match path_count_matrix_bruteforce(&lists, limit) {
            Ok(matrix) => {
                out.insert(matrix.entries().to_vec());
            }
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

fn all_permutations(m: usize) -> Vec<Vec<Option<usize>>> {
    fn go(m: usize, cur: &mut Vec<Option<usize>>, used: &mut [bool], out: &mut Vec<Vec<Option<usize>>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for y in 0..m {
            if !used[y] {
                used[y] = true;
                cur.push(Some(y));
                go(m, cur, used, out);
                cur.pop();
                used[y] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(m, &mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

/// Every matching (partial or perfect) between two `m`-sets.
fn all_matchings(m: usize) -> Vec<Vec<Option<usize>>> {
    fn go(m: usize, cur: &mut Vec<Option<usize>>, used: &mut [bool], out: &mut Vec<Vec<Option<usize>>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        cur.push(None);
        go(m, cur, used, out);
        cur.pop();
        for y in 0..m {
            if !used[y] {
                used[y] = true;
                cur.push(Some(y));
                go(m, cur, used, out);
                cur.pop();
                used[y] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(m, &mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

fn min_over_covers(g: &Graph, m: usize, per_edge: &[Vec<Option<usize>>], limit: u64) -> Result<u64> {
    let sizes = vec![per_edge.len(); g.edge_count()];
    let covers = product_size(&sizes, limit, "covers")?;
    let transversals = bounded_pow(m as u64, g.vertex_count() as u32, limit)
        .ok_or_else(|| refuse("brute-force transversals", limit))?;
    if covers.saturating_mul(transversals) > limit {
        return Err(refuse("covers times transversals", limit));
    }
    let mut best = u64::MAX;
    let mut failure = None;
    for_each_tuple(&sizes, |idx| {
        let matchings: BTreeMap<(usize, usize), Vec<Option<usize>>> = g
            .edges()
            .iter()
            .zip(idx)
            .map(|(&e, &i)| (e, per_edge[i].clone()))
            .collect();
        match Cover::new(g, m, matchings).and_then(|c| count_transversals_bruteforce(g, &c, &[], limit)) {
            Ok(x) => best = best.min(x),
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(best),
    }
}

/// `P_DP(G, m)` over all full covers, with no relabeling reduction.
pub fn dp_color_function_ungauged(g: &Graph, m: usize, limit: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    min_over_covers(g, m, &all_permutations(m), limit)
}

/// `P_DP(G, m)` over all covers, including those with partial matchings.
pub fn dp_color_function_all_covers(g: &Graph, m: usize, limit: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    min_over_covers(g, m, &all_matchings(m), limit)
}
