use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use thetacolor::certificate::{verify_certificate, Certificate};
use thetacolor::chromatic::{chromatic_polynomial, count_colorings_bruteforce, theta_chromatic_closed_form};
use thetacolor::dpcover::{
    count_cover_colorings, cover_from_list_assignment, dp_color_function_exact, path_cover_count,
    theta_dp_closed_form, Cover,
};
use thetacolor::graph::Family;
use thetacolor::listcolor::{
    count_list_colorings, list_color_function, list_color_function_exhaustive, list_color_function_theta,
    path_count_matrix, ListAssignment, Pruning,
};
use thetacolor::oracle;
use thetacolor::verify::{check_even_path_partition, check_sandwich, Status, DEFAULT_SEED};
use thetacolor::{Budget, Graph, ThetaGraph, ThetaSpec};

const LIMIT: u64 = 500_000_000;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn theta(a: usize, b: usize, c: usize) -> Result<(ThetaSpec, Graph), String> {
    let spec = ThetaSpec::new(a, b, c).map_err(err)?;
    Ok((spec, ThetaGraph::build(spec).graph))
}

fn chromatic_closed_forms() -> Outcome {
    for ((a, b, c), want) in [((2, 2, 2), 30u64), ((1, 2, 2), 6)] {
        let (spec, g) = theta(a, b, c)?;
        let closed = theta_chromatic_closed_form(&spec, 3).map_err(err)?;
        let brute = count_colorings_bruteforce(&g, 3, LIMIT).map_err(err)?;
        ensure(closed.to_string() == want.to_string() && brute == want, || {
            format!("theta({spec}): closed form {closed}, enumeration {brute}, expected {want}")
        })?;
    }
    Ok("theta(2,2,2) = 30 and theta(1,2,2) = 6 at m = 3, matching enumeration".into())
}

fn headline_value() -> Outcome {
    let (spec, g) = theta(2, 3, 2)?;
    let p = chromatic_polynomial(&g).eval_u64(3);
    let formula = 6 * ((1u64 << spec.l2) - 1);
    let pl = list_color_function_theta(&spec, 3, &Budget::default(), Pruning::Dominance).map_err(err)?;
    ensure(
        p.to_string() == "42" && formula == 42 && pl.value.to_string() == "42",
        || format!("P = {p}, 6(2^3 - 1) = {formula}, P_l = {}", pl.value),
    )?;
    Ok("P(theta(2,3,2), 3) = 42 = 6(2^3 - 1) = P_l".into())
}

fn dp_closed_form() -> Outcome {
    let (spec, g) = theta(2, 3, 2)?;
    let b = Budget::default();
    let closed = theta_dp_closed_form(&spec, 3).map_err(err)?;
    let exact = dp_color_function_exact(&g, 3, &b).map_err(err)?;
    let free = exact.witness.free_edges.len();
    let covers = 6u64.pow(free as u32);
    ensure(closed.to_string() == "39" && exact.value == 39, || {
        format!("closed form {closed}, enumeration {}", exact.value)
    })?;
    ensure(covers == 36, || format!("{covers} gauge-fixed covers, expected 36"))?;
    let sandwich = check_sandwich(&g, 3, &b).map_err(err)?;
    ensure(sandwich.status == Status::Pass, || sandwich.detail.clone())?;
    Ok(format!("P_DP = 39 over {covers} covers; sandwich {}", sandwich.detail))
}

fn path_cover_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let (mut covers, mut checked, mut connected) = (0, 0, 0);
    for k in 1..=5usize {
        for m in 2..=4usize {
            for _ in 0..14 {
                let path = Family::Path(k + 1).build().map_err(err)?;
                let perms: Vec<Vec<usize>> = (0..k)
                    .map(|_| {
                        let mut p: Vec<usize> = (0..m).collect();
                        p.shuffle(&mut rng);
                        p
                    })
                    .collect();
                let matchings: BTreeMap<_, _> = perms
                    .iter()
                    .enumerate()
                    .map(|(i, p)| ((i, i + 1), p.iter().copied().map(Some).collect()))
                    .collect();
                let cover = Cover::new(&path, m, matchings).map_err(err)?;
                covers += 1;
                for beta in 0..m {
                    let end = perms.iter().fold(beta, |x, p| p[x]);
                    for gamma in 0..m {
                        let brute = oracle::count_transversals_bruteforce(&path, &cover, &[(0, beta), (k, gamma)], LIMIT)
                            .map_err(err)?;
                        let formula = path_cover_count(k as u32, m as u64, end == gamma).map_err(err)?;
                        ensure(formula.to_string() == brute.to_string(), || {
                            format!("k={k} m={m} ends ({beta},{gamma}): enumeration {brute}, formula {formula}")
                        })?;
                        checked += 1;
                        connected += usize::from(end == gamma);
                    }
                }
            }
        }
    }
    ensure(covers >= 200, || format!("only {covers} covers"))?;
    Ok(format!("{covers} covers, {checked} end pairs ({connected} connected), zero mismatches"))
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Result<Graph, String> {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect::<Vec<_>>()
        .into_iter()
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    Graph::new(n, edges).map_err(err)
}

fn bijection() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let samples = 150;
    for i in 0..samples {
        let n = rng.gen_range(1..=6);
        let m = rng.gen_range(1..=3);
        let g = random_graph(&mut rng, n)?;
        let a = ListAssignment::random(n, m, 2 * m, &mut rng).map_err(err)?;
        let cover = cover_from_list_assignment(&g, &a).map_err(err)?;
        let via_cover = count_cover_colorings(&g, &cover).map_err(err)?;
        let direct = count_list_colorings(&g, &a).map_err(err)?;
        let brute = oracle::count_list_colorings_bruteforce(&g, a.lists(), &[], LIMIT).map_err(err)?;
        ensure(via_cover == direct && direct == brute, || {
            format!("sample {i}: cover {via_cover}, lists {direct}, enumeration {brute}")
        })?;
    }
    Ok(format!("{samples} random assignments on graphs with at most 6 vertices"))
}

fn negative_instance() -> Outcome {
    let g = Family::CompleteBipartite(2, 4).build().map_err(err)?;
    let r = list_color_function(&g, 2, &Budget::default()).map_err(err)?;
    let recount = count_list_colorings(&g, &r.witness).map_err(err)?;
    let brute = oracle::count_list_colorings_bruteforce(&g, r.witness.lists(), &[], LIMIT).map_err(err)?;
    let cert = Certificate::for_assignment(&g, &r.witness, &[], None).map_err(err)?;
    let verdict = verify_certificate(&cert);
    ensure(r.value.to_string() == "0" && recount == 0 && brute == 0 && verdict.valid, || {
        format!("P_l = {}, recount {recount}, enumeration {brute}, certificate {}", r.value, verdict.valid)
    })?;
    Ok(format!("P_l(K_2,4, 2) = 0 with witness lists {:?}", r.witness.lists()))
}

fn scan() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_thetacol"))
        .args(["scan", "--lmax", "4", "--mmax", "3", "--format", "jsonl"])
        .output()
        .map_err(err)?;
    ensure(out.status.success(), || {
        format!("scan exited with {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr))
    })?;
    let rows: Vec<Value> = String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(serde_json::from_str)
        .collect::<Result<_, _>>()
        .map_err(err)?;
    let (mut witnesses, mut inconclusive, mut specs) = (0, 0, 0);
    for row in rows.iter().filter(|r| r.get("check_name").is_some()) {
        specs += 1;
        let spec = row["instance"]["theta"].as_str().unwrap_or("?");
        let status = row["status"].as_str().unwrap_or("?");
        let predicted = row["values"]["predicted"].as_str().unwrap_or("?");
        ensure(status != "fail", || format!("theta({spec}) failed: {}", row["detail"]))?;
        match (predicted, status) {
            ("choosable", "pass") => {}
            ("not_choosable", "inconclusive") => inconclusive += 1,
            ("not_choosable", "pass") => {
                let cert: Certificate = serde_json::from_value(row["witness"].clone()).map_err(err)?;
                let verdict = verify_certificate(&cert);
                let strict = matches!((&verdict.recount, &verdict.reference), (Some(a), Some(b)) if a < b);
                ensure(verdict.valid && strict, || format!("theta({spec}) witness does not recount below P"))?;
                witnesses += 1;
            }
            _ => return Err(format!("theta({spec}): {predicted} with status {status}")),
        }
    }
    ensure(specs == 16, || format!("{specs} specs scanned, expected 16"))?;
    ensure(witnesses >= 1, || "no strict witness found".into())?;
    Ok(format!("{specs} specs, 0 fail, {witnesses} strict witnesses recounted, {inconclusive} inconclusive"))
}

fn even_path_partition() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut total = 0;
    for k in [2usize, 4] {
        for m in [2usize, 3] {
            let weak = ((m as u64 - 1).pow(k as u32) - 1) / m as u64;
            for i in 0..100 {
                let a = ListAssignment::random(k + 1, m, 2 * m, &mut rng).map_err(err)?;
                let brute = oracle::path_count_matrix_bruteforce(a.lists(), LIMIT).map_err(err)?;
                ensure(brute == path_count_matrix(a.lists()).map_err(err)?, || {
                    format!("k={k} m={m} sample {i}: count matrix differs from enumeration")
                })?;
                let entries = brute.entries();
                let strong = entries.iter().filter(|&&e| e > weak).count();
                ensure(entries.iter().all(|&e| e >= weak) && strong >= m, || {
                    format!("k={k} m={m} sample {i}: entries {entries:?} against bound {weak}")
                })?;
                let r = check_even_path_partition(k, &a).map_err(err)?;
                ensure(r.status == Status::Pass, || format!("k={k} m={m} sample {i}: {}", r.detail))?;
                total += 1;
            }
        }
    }
    Ok(format!("{total} assignments, zero violations"))
}

fn soundness_oracles() -> Outcome {
    let b = Budget::default();
    let specs: Vec<ThetaSpec> = ThetaSpec::enumerate(5)
        .into_iter()
        .filter(|s| s.total_length() <= 7)
        .collect();
    for spec in &specs {
        let g = ThetaGraph::build(*spec).graph;
        let pruned = list_color_function_theta(spec, 2, &b, Pruning::Dominance).map_err(err)?;
        let full = list_color_function_exhaustive(&g, 2, &b).map_err(err)?;
        ensure(pruned.value == full.value, || {
            format!("theta({spec}): pruned {}, exhaustive {}", pruned.value, full.value)
        })?;
    }
    let graphs = [
        ("C_3", Family::Cycle(3).build().map_err(err)?),
        ("C_4", Family::Cycle(4).build().map_err(err)?),
        ("theta(2,2,2)", theta(2, 2, 2)?.1),
    ];
    for (name, g) in &graphs {
        for m in 2..=3 {
            let gauged = dp_color_function_exact(g, m, &b).map_err(err)?.value;
            let full = oracle::dp_color_function_ungauged(g, m, LIMIT).map_err(err)?;
            ensure(gauged == full, || format!("{name} m={m}: gauge-fixed {gauged}, all covers {full}"))?;
        }
    }
    Ok(format!("{} theta specs at m = 2; C_3, C_4, theta(2,2,2) at m = 2, 3", specs.len()))
}

fn main() -> ExitCode {
    let criteria: [(usize, fn() -> Outcome); 9] = [
        (1, chromatic_closed_forms),
        (2, headline_value),
        (3, dp_closed_form),
        (4, path_cover_identity),
        (5, bijection),
        (6, negative_instance),
        (7, scan),
        (8, even_path_partition),
        (9, soundness_oracles),
    ];
    let mut failed = 0;
    for (n, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {n}: PASS ({secs:.2}s) {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {n}: FAIL ({secs:.2}s) {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
