mod common;

use common::random_connected_graph;
use costzdd::{grid_graph, parse_graph, parse_report, write_graph, write_report, BigUint, ExtInt, RunReport};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn prop_graph_text_is_canonical(seed in any::<u64>(), nv in 2u32..12, with_t in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected_graph(&mut rng, nv, 20, -1_000_000, 1_000_000);
        let term = with_t.then_some((1, nv));
        let text = write_graph(&g, term);
        let (back, t) = parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(t, term);
        prop_assert_eq!(write_graph(&back, t), text);
    }

    #[test]
    fn prop_grid_round_trip(n in 1u32..8, seed in any::<u64>()) {
        let g = grid_graph(n, 1000, 1999, seed).unwrap();
        let text = write_graph(&g, Some((1, (n + 1) * (n + 1))));
        let (back, _) = parse_graph(&text).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn prop_report_counts_survive(digits in "[1-9][0-9]{0,30}", calls in any::<u64>(), b in any::<i64>()) {
        let row = RunReport {
            bound: ExtInt::Finite(b),
            ratio: Some(1.25),
            solutions: digits.parse::<BigUint>().unwrap(),
            zdd_size: 42,
            calls,
            time_ms: 0.5,
            method: "interval".into(),
            accept_worst: Some(ExtInt::NegInf),
            reject_best: Some(ExtInt::PosInf),
        };
        let text = write_report(std::slice::from_ref(&row));
        let quoted = format!("\"solutions\":\"{digits}\"");
        prop_assert!(text.contains(&quoted));
        prop_assert_eq!(parse_report(&text).unwrap(), vec![row]);
    }
}

#[test]
fn sixteen_digit_count_is_exact() {
    let big: BigUint = "1445778936756068".parse().unwrap();
    let row = RunReport {
        bound: ExtInt::PosInf,
        ratio: None,
        solutions: big.clone(),
        zdd_size: 1,
        calls: 3,
        time_ms: 1.0,
        method: "interval".into(),
        accept_worst: None,
        reject_best: None,
    };
    let back = parse_report(&write_report(&[row])).unwrap();
    assert_eq!(back[0].solutions, big);
}
