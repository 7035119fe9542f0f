use proptest::prelude::*;

use thetacolor::certificate::{verify_certificate, Certificate};
use thetacolor::dpcover::dp_color_function_exact;
use thetacolor::listcolor::{list_color_function, ListAssignment};
use thetacolor::{Budget, ThetaGraph, ThetaSpec};

fn theta(a: usize, b: usize, c: usize) -> ThetaGraph {
    ThetaGraph::build(ThetaSpec::new(a, b, c).unwrap())
}

#[test]
fn solver_witnesses_round_trip() {
    let b = Budget::default();
    let g = theta(2, 4, 2).graph;
    let r = list_color_function(&g, 2, &b).unwrap();
    let cert = Certificate::for_assignment(&g, &r.witness, &[], Some(1)).unwrap();
    assert_eq!(cert.count, "1");
    assert_eq!(cert.reference, "2");
    let parsed = Certificate::from_json_str(&cert.to_json_string()).unwrap();
    assert!(verify_certificate(&parsed).valid);

    let g = theta(2, 3, 2).graph;
    let dp = dp_color_function_exact(&g, 3, &b).unwrap();
    let cert = Certificate::for_cover(&g, &dp.witness.to_cover(&g).unwrap(), None).unwrap();
    assert_eq!(cert.count, "39");
    assert!(verify_certificate(&cert).valid);
}

#[test]
fn malformed_certificates_are_rejected() {
    assert!(Certificate::from_json_str("{\"kind\": \"list_assignment\"}").is_err());
    let g = theta(1, 2, 2).graph;
    let mut cert = Certificate::for_assignment(&g, &ListAssignment::uniform(4, 3), &[], None).unwrap();
    cert.assignment.as_mut().unwrap().lists.pop();
    cert.digest = cert.compute_digest();
    let verdict = verify_certificate(&cert);
    assert!(!verdict.valid);
    assert!(verdict.recount.is_none());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn any_single_mutation_is_caught(
        seed in any::<u64>(),
        vertex in 0usize..6,
        slot in 0usize..3,
        color in 0usize..6,
        bump in 1u64..5,
    ) {
        let g = theta(2, 3, 2).graph;
        let a = thetacolor::verify::seeded_assignment(g.vertex_count(), 3, seed).unwrap();
        let cert = Certificate::for_assignment(&g, &a, &[], Some(seed)).unwrap();
        prop_assert!(verify_certificate(&cert).valid);

        let mut counted = cert.clone();
        counted.count = (counted.count.parse::<u64>().unwrap() + bump).to_string();
        prop_assert!(!verify_certificate(&counted).valid);

        let mut listed = cert.clone();
        let list = &mut listed.assignment.as_mut().unwrap().lists[vertex];
        prop_assume!(!list.contains(&color));
        list[slot] = color;
        list.sort_unstable();
        prop_assert!(!verify_certificate(&listed).valid);
    }
}
