use num_bigint::{BigInt, BigUint};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::{guard, sort_reports, CheckReport, Status};
use crate::budget::Budget;
use crate::certificate::Certificate;
use crate::chromatic::chromatic_number;
use crate::dpcover::dp_color_function_exact;
use crate::error::{Error, Result};
use crate::graph::{classify_core, recognize_cycle, recognize_theta, CoreShape, Family, Graph, ThetaGraph, ThetaSpec};
use crate::listcolor::{
    chromatic_value, list_color_function, list_color_function_theta, path_count_matrix, ListAssignment,
    ListColoringCounter, Pruning,
};

fn cert(c: Certificate) -> Value {
    serde_json::to_value(c).expect("certificate serializes")
}

fn assignment_cert(g: &Graph, a: &ListAssignment, fixed: &[(usize, usize)], seed: Option<u64>) -> Result<Value> {
    Certificate::for_assignment(g, a, fixed, seed).map(cert)
}

/// Short instance label: `theta(l1,l2,l3)` or `cycle(n)` when recognized,
/// otherwise the vertex count and edge list.
pub fn describe_graph(g: &Graph) -> String {
    if let Some((layout, _)) = recognize_theta(g) {
        return format!("theta({})", layout.spec);
    }
    if let Some(order) = recognize_cycle(g) {
        return format!("cycle({})", order.len());
    }
    let edges: Vec<String> = g.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
    format!("graph(n={}; {})", g.vertex_count(), edges.join(","))
}

/// A random `m`-assignment of `n` vertices from the palette `0..2m`, drawn
/// with `ChaCha8Rng::seed_from_u64(seed)`.
pub fn seeded_assignment(n: usize, m: usize, seed: u64) -> Result<ListAssignment> {
    ListAssignment::random(n, m, 2 * m, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn pow(base: usize, exp: usize) -> BigInt {
    BigInt::from(base).pow(exp as u32)
}

/// `P_DP(G, m) <= P_l(G, m) <= P(G, m)` with all three computed exactly.
pub fn check_sandwich(g: &Graph, m: usize, budget: &Budget) -> Result<CheckReport> {
    sandwich(&describe_graph(g), g, m, budget)
}

fn sandwich(label: &str, g: &Graph, m: usize, budget: &Budget) -> Result<CheckReport> {
    const NAME: &str = "sandwich";
    let instance = json!({ "graph": label, "m": m });
    guard(NAME, instance.clone(), || {
        if m == 0 {
            return Err(Error::Domain("m must be at least 1".into()));
        }
        let p = chromatic_value(g, m);
        let pl = list_color_function(g, m, budget)?;
        let dp = dp_color_function_exact(g, m, budget)?;
        let dpv = BigUint::from(dp.value);
        let chain = format!("{dpv} <= {} <= {p}", pl.value);
        let report = CheckReport::new(NAME, instance)
            .sides(&dpv, &p)
            .value("p", &p)
            .value("p_list", &pl.value)
            .value("p_dp", &dpv);
        if dpv <= pl.value && pl.value <= p {
            return Ok(report.status(Status::Pass, chain));
        }
        let mut report = report.status(Status::Fail, format!("chain broken: {chain}"));
        report.witness = Some(if dpv > pl.value {
            assignment_cert(g, &pl.witness, &[], None)?
        } else {
            assignment_cert(g, &ListAssignment::uniform(g.vertex_count(), m), &[], None)?
        });
        Ok(report)
    })
}

/// `P(G, L) >= P_DP(G, m) + C d` on the edge whose lists differ most, where
/// `d = |L(q) - L(s)|` and `C` lower-bounds the colorings with `q -> x`,
/// `s -> y` for every `x != y`. `C` is verified by counting first; when
/// omitted, the largest valid value is used.
pub fn check_lemma_dp_connection(
    g: &Graph,
    assignment: &ListAssignment,
    c: Option<u64>,
    budget: &Budget,
) -> Result<CheckReport> {
    const NAME: &str = "dp_connection";
    assignment.check_graph(g)?;
    let m = assignment.m();
    let instance = json!({
        "graph": describe_graph(g),
        "m": m,
        "lists": assignment.lists(),
        "c": c.map(|c| c.to_string()),
    });
    guard(NAME, instance.clone(), || {
        let report = CheckReport::new(NAME, instance);
        let diff = |q: usize, s: usize| {
            assignment
                .list(q)
                .iter()
                .filter(|x| assignment.list(s).binary_search(x).is_err())
                .count()
        };
        let mut edge = (0, 0, 0);
        for &(q, s) in g.edges() {
            let d = diff(q, s);
            if d > edge.0 {
                edge = (d, q, s);
            }
        }
        let (d, q, s) = edge;
        if d == 0 {
            return Ok(report.status(Status::Skipped, "every edge joins equal lists (d = 0)"));
        }

        let mut counter = ListColoringCounter::new(g);
        let mut weakest: Option<(u64, usize, usize)> = None;
        for &x in assignment.list(q) {
            for &y in assignment.list(s).iter().filter(|&&y| y != x) {
                let n = counter.count(assignment.lists(), &[(q, x), (s, y)]);
                if weakest.is_none_or(|(b, _, _)| n < b) {
                    weakest = Some((n, x, y));
                }
            }
        }
        let (c_min, x, y) = weakest.expect("d >= 1 leaves a pair with x != y");
        let c_used = c.unwrap_or(c_min);
        let report = report
            .value("edge", format!("{q}-{s}"))
            .value("d", d)
            .value("c", c_used)
            .value("c_verified", c_min);
        if c_used > c_min {
            let mut report = report.sides(c_min, c_used).status(
                Status::PreconditionFailed,
                format!("only {c_min} colorings send {q} to {x} and {s} to {y}"),
            );
            report.witness = Some(assignment_cert(g, assignment, &[(q, x), (s, y)], None)?);
            return Ok(report);
        }

        let p_l = BigUint::from(counter.count(assignment.lists(), &[]));
        let dp = dp_color_function_exact(g, m, budget)?;
        let rhs = BigUint::from(dp.value) + BigUint::from(c_used) * BigUint::from(d);
        let report = report.sides(&p_l, &rhs).value("p_dp", dp.value);
        if p_l >= rhs {
            let detail = format!("{p_l} >= {} + {c_used}*{d}", dp.value);
            return Ok(report.status(Status::Pass, detail));
        }
        let mut report = report.status(Status::Fail, format!("{p_l} < {rhs}"));
        report.witness = Some(json!({
            "assignment": assignment_cert(g, assignment, &[], None)?,
            "cover": cert(Certificate::for_cover(g, &dp.witness.to_cover(g)?, None)?),
        }));
        Ok(report)
    })
}

/// For sampled `m`-assignments of a theta graph, every edge `qs` and every
/// `x in L(q)`, `y in L(s)` with `x != y`: at least
/// `(m-1)^(l1+l2+l3-5) (m-2)^2` colorings send `q` to `x` and `s` to `y`.
pub fn check_lemma_count_bound(spec: &ThetaSpec, m: usize, samples: usize, seed: u64) -> Result<CheckReport> {
    const NAME: &str = "count_bound";
    let instance = json!({ "theta": spec.to_string(), "m": m, "samples": samples });
    let mut report = CheckReport::new(NAME, instance);
    report.seed = Some(seed);
    if m < 3 {
        return Ok(report.status(Status::Skipped, "bound is vacuous for m < 3"));
    }
    let Some(exp) = spec.total_length().checked_sub(5) else {
        return Ok(report.status(Status::Skipped, "negative exponent; no integer bound"));
    };
    let bound = (pow(m - 1, exp) * pow(m - 2, 2)).to_biguint().expect("nonnegative");
    let g = ThetaGraph::build(*spec).graph;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counter = ListColoringCounter::new(&g);
    type Pinned = (u64, ListAssignment, [(usize, usize); 2]);
    let mut worst: Option<Pinned> = None;
    for _ in 0..samples {
        let a = ListAssignment::random(g.vertex_count(), m, 2 * m, &mut rng)?;
        for &(q, s) in g.edges() {
            for &x in a.list(q) {
                for &y in a.list(s).iter().filter(|&&y| y != x) {
                    let n = counter.count(a.lists(), &[(q, x), (s, y)]);
                    if worst.as_ref().is_none_or(|w| n < w.0) {
                        worst = Some((n, a.clone(), [(q, x), (s, y)]));
                    }
                }
            }
        }
    }
    let report = report.value("bound", &bound);
    let Some((n, a, pins)) = worst else {
        return Ok(report.status(Status::Skipped, "no samples"));
    };
    let report = report.sides(n, &bound);
    if BigUint::from(n) >= bound {
        return Ok(report.status(Status::Pass, format!("smallest pinned count {n} >= {bound}")));
    }
    let mut report = report.status(Status::Fail, format!("pinned count {n} < {bound}"));
    report.witness = Some(assignment_cert(&g, &a, &pins, Some(seed))?);
    Ok(report)
}

/// Largest matching in the bipartite graph `allowed[i][j]` (Kuhn's algorithm).
fn max_matching(allowed: &[Vec<bool>]) -> usize {
    fn augment(i: usize, allowed: &[Vec<bool>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for j in 0..seen.len() {
            if allowed[i][j] && !seen[j] {
                seen[j] = true;
                if owner[j].is_none_or(|k| augment(k, allowed, seen, owner)) {
                    owner[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    let cols = allowed.first().map_or(0, Vec::len);
    let mut owner = vec![None; cols];
    (0..allowed.len())
        .filter(|&i| augment(i, allowed, &mut vec![false; cols], &mut owner))
        .count()
}

/// For a `k`-edge path (`k` even) with lists `assignment`: every `N(c, d)`
/// is at least `((m-1)^k - 1)/m`, and the entries reaching one more contain
/// a perfect matching between the two end lists (so there are at least `m`).
pub fn check_even_path_partition(k: usize, assignment: &ListAssignment) -> Result<CheckReport> {
    const NAME: &str = "even_path_partition";
    let m = assignment.m();
    if k == 0 || k % 2 == 1 || m < 2 {
        return Err(Error::Domain(format!("need even k >= 2 and m >= 2, got k={k}, m={m}")));
    }
    if assignment.len() != k + 1 {
        return Err(Error::DimensionMismatch(format!(
            "{} lists for a path with {} vertices",
            assignment.len(),
            k + 1
        )));
    }
    let instance = json!({ "k": k, "m": m, "lists": assignment.lists() });
    let matrix = path_count_matrix(assignment.lists())?;
    let weak = (m as u64)
        .checked_sub(1)
        .and_then(|b| b.checked_pow(k as u32))
        .ok_or(Error::Overflow("path bound"))?
        .saturating_sub(1)
        / m as u64;
    let strong = weak + 1;
    let (rows, cols) = (matrix.rows().len(), matrix.cols().len());
    let strong_mask: Vec<Vec<bool>> = (0..rows)
        .map(|i| (0..cols).map(|j| matrix.at(i, j) >= strong).collect())
        .collect();
    let strong_entries = strong_mask.iter().flatten().filter(|&&b| b).count();
    let matched = max_matching(&strong_mask);
    let (min_at, &min) = matrix
        .entries()
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| v)
        .expect("m >= 2 entries");
    let report = CheckReport::new(NAME, instance)
        .sides(min, weak)
        .value("weak_bound", weak)
        .value("strong_bound", strong)
        .value("strong_entries", strong_entries)
        .value("matching_size", matched);
    let path = Family::Path(k + 1).build()?;
    if min < weak {
        let (c, d) = (matrix.rows()[min_at / cols], matrix.cols()[min_at % cols]);
        let mut report = report.status(Status::Fail, format!("N({c},{d}) = {min} < {weak}"));
        report.witness = Some(assignment_cert(&path, assignment, &[(0, c), (k, d)], None)?);
        return Ok(report);
    }
    if matched < m {
        let mut report = report.status(
            Status::Fail,
            format!("entries >= {strong} admit a matching of size {matched} < {m}"),
        );
        report.witness = Some(json!({
            "assignment": assignment_cert(&path, assignment, &[], None)?,
            "matrix": matrix.entries(),
        }));
        return Ok(report);
    }
    Ok(report.status(
        Status::Pass,
        format!("all entries >= {weak}; {strong_entries} entries >= {strong}, perfect matching among them"),
    ))
}

/// [`check_even_path_partition`] on `samples` seeded random assignments.
pub fn check_even_path_partition_sampled(k: usize, m: usize, samples: usize, seed: u64) -> Result<CheckReport> {
    let instance = json!({ "k": k, "m": m, "samples": samples });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fewest_strong = usize::MAX;
    let mut last = None;
    for i in 0..samples {
        let a = ListAssignment::random(k + 1, m, 2 * m, &mut rng)?;
        let mut r = check_even_path_partition(k, &a)?;
        if r.status != Status::Pass {
            r.detail = format!("sample {i}: {}", r.detail);
            r.instance = instance;
            r.seed = Some(seed);
            return Ok(r);
        }
        let strong: usize = r.values["strong_entries"].parse().expect("decimal");
        fewest_strong = fewest_strong.min(strong);
        last = Some(r);
    }
    let Some(last) = last else {
        return Ok(CheckReport::new("even_path_partition", instance).status(Status::Skipped, "no samples"));
    };
    let mut report = CheckReport::new("even_path_partition", instance)
        .value("weak_bound", &last.values["weak_bound"])
        .value("strong_bound", &last.values["strong_bound"])
        .value("fewest_strong_entries", fewest_strong)
        .status(
            Status::Pass,
            format!("{samples} assignments meet the weak bound with a perfect matching of strong entries"),
        );
    report.seed = Some(seed);
    Ok(report)
}

fn known_corpus() -> Result<Vec<(String, Graph)>> {
    let mut out = vec![
        ("tree:k1".to_string(), Graph::empty(1)?),
        (
            "tree:chair".to_string(),
            Graph::new(5, [(0, 1), (1, 2), (2, 3), (1, 4)])?,
        ),
    ];
    let families = [
        Family::Path(2),
        Family::Path(3),
        Family::Path(4),
        Family::Path(5),
        Family::CompleteBipartite(1, 3),
        Family::CompleteBipartite(1, 4),
        Family::Complete(3),
        Family::Complete(4),
        Family::Cycle(3),
        Family::Cycle(4),
        Family::Cycle(5),
        Family::Cycle(6),
        Family::CompleteBipartite(2, 3),
    ];
    for f in families {
        out.push((f.to_string(), f.build()?));
    }
    Ok(out)
}

/// `P_l = P` on trees with at most five vertices, `K_3`, `K_4`, the cycles
/// `C_3` to `C_6` and `K_{2,3}` for `1 <= m <= min(3, |E| - 2)`; and on
/// `Θ(2,4,2)`, whose core is none of the choosable shapes, a search over
/// `m` in `{2, 3}` for `P_l < P`.
pub fn check_known_choosable_examples(budget: &Budget) -> Result<Vec<CheckReport>> {
    const NAME: &str = "known_choosable";
    let mut tasks = Vec::new();
    let mut reports = Vec::new();
    for (label, g) in known_corpus()? {
        let top = 3.min(g.edge_count().saturating_sub(2));
        if top == 0 {
            reports.push(
                CheckReport::new(NAME, json!({ "graph": label, "m": Value::Null }))
                    .status(Status::Pass, "vacuous: every m >= 1 is at least |E| - 1"),
            );
        }
        for m in 1..=top {
            tasks.push((label.clone(), g.clone(), m));
        }
    }
    let computed: Vec<CheckReport> = tasks
        .par_iter()
        .map(|(label, g, m)| {
            let instance = json!({ "graph": label, "m": m });
            guard(NAME, instance.clone(), || {
                let p = chromatic_value(g, *m);
                let pl = list_color_function(g, *m, budget)?;
                let report = CheckReport::new(NAME, instance).sides(&pl.value, &p);
                if pl.value == p {
                    return Ok(report.status(Status::Pass, format!("P_l = P = {p}")));
                }
                let mut report = report.status(Status::Fail, format!("P_l = {} != P = {p}", pl.value));
                report.witness = Some(assignment_cert(g, &pl.witness, &[], None)?);
                Ok(report)
            })
        })
        .collect::<Result<_>>()?;
    reports.extend(computed);
    reports.push(known_not_choosable(budget)?);
    sort_reports(&mut reports);
    Ok(reports)
}

fn known_not_choosable(budget: &Budget) -> Result<CheckReport> {
    const NAME: &str = "known_not_choosable";
    let spec = ThetaSpec::new(2, 4, 2)?;
    let instance = json!({ "graph": format!("theta({spec})"), "m_range": "2..3" });
    guard(NAME, instance.clone(), || {
        let g = ThetaGraph::build(spec).graph;
        let shape = classify_core(&g)?;
        let report = CheckReport::new(NAME, instance).value("core", format!("{shape:?}"));
        if shape != CoreShape::Other {
            let mut report = report.status(Status::Fail, format!("core classified as {shape:?}"));
            report.witness = Some(serde_json::to_value(g.to_json()).expect("graph serializes"));
            return Ok(report);
        }
        for m in 2..=3 {
            let pl = list_color_function_theta(&spec, m, budget, Pruning::Dominance)?;
            let p = chromatic_value(&g, m);
            if pl.value < p {
                let mut report = report
                    .sides(&pl.value, &p)
                    .value("witness_m", m)
                    .status(Status::Pass, format!("P_l = {} < P = {p} at m = {m}", pl.value));
                report.witness = Some(assignment_cert(&g, &pl.witness, &[], None)?);
                return Ok(report);
            }
        }
        Ok(report.status(Status::Inconclusive, "no m in 2..=3 with P_l < P"))
    })
}

/// Parity rule for every spec with lengths at most `l_max`: predicted
/// choosable specs must have `P_l = P` for `chi <= m <= min(m_max, |E| - 2)`;
/// for the others a gap `P_l < P` is searched for with `chi <= m <= m_max`.
pub fn check_characterization(l_max: usize, m_max: usize, budget: &Budget) -> Result<Vec<CheckReport>> {
    let specs = ThetaSpec::enumerate(l_max);
    let mut reports = specs
        .par_iter()
        .map(|spec| characterize(spec, m_max, budget))
        .collect::<Result<Vec<_>>>()?;
    sort_reports(&mut reports);
    Ok(reports)
}

fn characterize(spec: &ThetaSpec, m_max: usize, budget: &Budget) -> Result<CheckReport> {
    const NAME: &str = "characterization";
    let instance = json!({ "theta": spec.to_string(), "m_max": m_max });
    guard(NAME, instance.clone(), || {
        let g = ThetaGraph::build(*spec).graph;
        let chi = chromatic_number(&g);
        let choosable = !(spec.all_same_parity() && spec.lengths() != [2, 2, 2]);
        let mut report = CheckReport::new(NAME, instance)
            .value("predicted", if choosable { "choosable" } else { "not_choosable" })
            .value("chromatic_number", chi);
        let top = if choosable { m_max.min(g.edge_count() - 2) } else { m_max };
        for m in chi..=top {
            let pl = list_color_function_theta(spec, m, budget, Pruning::Dominance)?;
            let p = chromatic_value(&g, m);
            report = report
                .value(&format!("p(m={m})"), &p)
                .value(&format!("p_list(m={m})"), &pl.value);
            if pl.value > p {
                let mut r = report.sides(&pl.value, &p).status(
                    Status::Fail,
                    format!("P_l = {} exceeds P = {p} at m = {m}", pl.value),
                );
                r.witness = Some(assignment_cert(&g, &ListAssignment::uniform(g.vertex_count(), m), &[], None)?);
                return Ok(r);
            }
            if pl.value < p {
                let status = if choosable { Status::Fail } else { Status::Pass };
                let mut r = report
                    .sides(&pl.value, &p)
                    .value("witness_m", m)
                    .status(status, format!("P_l = {} < P = {p} at m = {m}", pl.value));
                r.witness = Some(assignment_cert(&g, &pl.witness, &[], None)?);
                return Ok(r);
            }
        }
        Ok(if choosable {
            if chi > top {
                report.status(Status::Pass, format!("vacuous: no m with {chi} <= m <= {top}"))
            } else {
                report.status(Status::Pass, format!("P_l = P for {chi} <= m <= {top}"))
            }
        } else {
            report.status(
                Status::Inconclusive,
                format!("witness not found within bounds: P_l = P for {chi} <= m <= {top}"),
            )
        })
    })
}

/// For `Θ(l1,l2,l3)` with `l1`, `l3` of one parity and `l2` of the other, and
/// `m >= 3` (`m >= 4` when `l1 + l3 = 4`): on sampled assignments with some
/// edge joining unequal lists,
/// `P(G,L) - P(G,m) >= (m-1)^l1 - (m-1)^l2 + (-1)^(l2+1)(m-2) + (m-1)^(l1+l2+l3-5)(m-2)^2`
/// and the difference is nonnegative. Constant assignments must give 0.
pub fn check_lemma_nochord_inequality(spec: &ThetaSpec, m: usize, samples: usize, seed: u64) -> Result<CheckReport> {
    const NAME: &str = "nochord_inequality";
    let instance = json!({ "theta": spec.to_string(), "m": m, "samples": samples });
    let mut report = CheckReport::new(NAME, instance);
    report.seed = Some(seed);
    if !spec.l1_l3_match_l2_differs() {
        return Ok(report.status(Status::Skipped, "parity hypothesis not met"));
    }
    let outer = spec.l1 + spec.l3;
    if !((outer >= 6 && m >= 3) || (outer == 4 && m >= 4)) {
        return Ok(report.status(Status::Skipped, "m below the range of the statement"));
    }
    let sign = if spec.l2 % 2 == 1 { BigInt::from(1) } else { BigInt::from(-1) };
    let bound = pow(m - 1, spec.l1) - pow(m - 1, spec.l2)
        + sign * BigInt::from(m - 2)
        + pow(m - 1, spec.total_length() - 5) * pow(m - 2, 2);
    let g = ThetaGraph::build(*spec).graph;
    let p = BigInt::from(chromatic_value(&g, m));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counter = ListColoringCounter::new(&g);
    let mut smallest: Option<BigInt> = None;
    let mut failure: Option<(ListAssignment, String)> = None;
    let mut assignments = vec![ListAssignment::uniform(g.vertex_count(), m)];
    for _ in 0..samples {
        assignments.push(ListAssignment::random(g.vertex_count(), m, 2 * m, &mut rng)?);
    }
    for a in assignments {
        let diff = BigInt::from(counter.count(a.lists(), &[])) - &p;
        let constant = g.edges().iter().all(|&(q, s)| a.list(q) == a.list(s));
        let bad = if constant {
            (diff != BigInt::from(0)).then(|| format!("constant lists give difference {diff}"))
        } else {
            (diff < bound || diff < BigInt::from(0)).then(|| format!("difference {diff} below {bound}"))
        };
        if let Some(why) = bad {
            failure = Some((a, why));
            break;
        }
        if !constant && smallest.as_ref().is_none_or(|s| diff < *s) {
            smallest = Some(diff);
        }
    }
    let report = report.value("bound", &bound).value("p", &p);
    if let Some((a, why)) = failure {
        let mut report = report.status(Status::Fail, why);
        report.witness = Some(assignment_cert(&g, &a, &[], Some(seed))?);
        return Ok(report);
    }
    Ok(match smallest {
        Some(s) => report
            .sides(&s, &bound)
            .status(Status::Pass, format!("smallest difference {s} >= {bound}")),
        None => report.status(Status::Pass, "only constant assignments sampled"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::listcolor::count_list_colorings;

    fn theta(a: usize, b: usize, c: usize) -> ThetaSpec {
        ThetaSpec::new(a, b, c).unwrap()
    }

    #[test]
    fn sandwich_examples() {
        let b = Budget::default();
        let g = ThetaGraph::build(theta(2, 3, 2)).graph;
        let r = check_sandwich(&g, 3, &b).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.detail, "39 <= 42 <= 42");
        let c4 = Family::Cycle(4).build().unwrap();
        assert_eq!(check_sandwich(&c4, 2, &b).unwrap().detail, "0 <= 2 <= 2");
        let k2 = Family::Path(2).build().unwrap();
        assert_eq!(check_sandwich(&k2, 1, &b).unwrap().detail, "0 <= 0 <= 0");
    }

    #[test]
    fn dp_connection_cases() {
        let b = Budget::default();
        let spec = theta(2, 3, 2);
        let g = ThetaGraph::build(spec).graph;
        let mut lists = vec![vec![0, 1, 2]; g.vertex_count()];
        lists[2] = vec![0, 1, 3];
        let a = ListAssignment::new(3, 6, lists).unwrap();
        // count bound 2^2 * 1 = 4
        let r = check_lemma_dp_connection(&g, &a, Some(4), &b).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.values["d"], "1");
        let zero = check_lemma_dp_connection(&g, &a, Some(0), &b).unwrap();
        assert_eq!(zero.status, Status::Pass);
        assert_eq!(zero.rhs.as_deref(), Some("39"));
        let too_big = check_lemma_dp_connection(&g, &a, Some(1000), &b).unwrap();
        assert_eq!(too_big.status, Status::PreconditionFailed);
        assert!(too_big.witness.is_some());
        let same = ListAssignment::uniform(g.vertex_count(), 3);
        assert_eq!(check_lemma_dp_connection(&g, &same, None, &b).unwrap().status, Status::Skipped);
    }

    #[test]
    fn count_bound_cases() {
        let r = check_lemma_count_bound(&theta(2, 3, 2), 3, 5, 1).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.values["bound"], "4");
        let r = check_lemma_count_bound(&theta(2, 2, 2), 3, 5, 1).unwrap();
        assert_eq!(r.values["bound"], "2");
        assert_eq!(check_lemma_count_bound(&theta(2, 3, 2), 2, 5, 1).unwrap().status, Status::Skipped);
    }

    #[test]
    fn even_path_examples() {
        let same = ListAssignment::new(3, 3, vec![vec![0, 1, 2]; 3]).unwrap();
        let r = check_even_path_partition(2, &same).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.values["weak_bound"], "1");
        assert_eq!(r.values["strong_entries"], "3");
        let two = ListAssignment::new(2, 2, vec![vec![0, 1]; 3]).unwrap();
        let r = check_even_path_partition(2, &two).unwrap();
        assert_eq!((r.values["weak_bound"].as_str(), r.values["strong_bound"].as_str()), ("0", "1"));
        assert_eq!(r.status, Status::Pass);
        assert!(check_even_path_partition(3, &same).is_err());
        let r = check_even_path_partition_sampled(4, 3, 20, 5).unwrap();
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn matching_sizes() {
        assert_eq!(max_matching(&[vec![true, true], vec![true, false]]), 2);
        assert_eq!(max_matching(&[vec![true, false], vec![true, false]]), 1);
    }

    #[test]
    fn nochord_cases() {
        let r = check_lemma_nochord_inequality(&theta(2, 3, 4), 3, 10, 3).unwrap();
        assert_eq!(r.status, Status::Pass, "{}", r.detail);
        let r = check_lemma_nochord_inequality(&theta(2, 3, 2), 4, 10, 3).unwrap();
        assert_eq!(r.status, Status::Pass, "{}", r.detail);
        assert_eq!(check_lemma_nochord_inequality(&theta(2, 3, 2), 3, 1, 3).unwrap().status, Status::Skipped);
        assert_eq!(check_lemma_nochord_inequality(&theta(2, 2, 2), 3, 1, 3).unwrap().status, Status::Skipped);
    }

    #[test]
    fn characterization_small() {
        let reports = check_characterization(3, 3, &Budget::default()).unwrap();
        assert!(reports.iter().all(|r| r.status != Status::Fail));
        let r = reports.iter().find(|r| r.instance["theta"] == "2,3,2").unwrap();
        assert_eq!(r.values["p_list(m=3)"], "42");
        let r = reports.iter().find(|r| r.instance["theta"] == "1,2,3").unwrap();
        assert_eq!(r.values["p(m=3)"], "18");
        let r = reports.iter().find(|r| r.instance["theta"] == "1,3,3").unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.values["witness_m"], "2");
    }

    #[test]
    fn witnesses_recount() {
        let reports = check_known_choosable_examples(&Budget::default()).unwrap();
        assert!(reports.iter().all(|r| r.status == Status::Pass), "{reports:#?}");
        let neg = reports.iter().find(|r| r.check_name == "known_not_choosable").unwrap();
        let cert: Certificate = serde_json::from_value(neg.witness.clone().unwrap()).unwrap();
        let g = Graph::try_from(cert.graph.clone()).unwrap();
        let a = ListAssignment::try_from(cert.assignment.clone().unwrap()).unwrap();
        assert_eq!(count_list_colorings(&g, &a).unwrap().to_string(), cert.count);
        assert_eq!(neg.lhs, Some(cert.count));
    }
}
