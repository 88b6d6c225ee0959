use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use proptest::prelude::*;

use neron_jumps::catalog::{
    cycle_fiber, dihedral_fiber, elliptic_with_cycle, entries, figure_eight, genus_one_piece, join,
    lookup, run_entries, theta, FiberType, TABLE_ROWS, UNENCODED_JOINS,
};
use neron_jumps::dual_graph::DualGraph;
use neron_jumps::graph_file::{parse_graph, write_graph};
use neron_jumps::jumps::jump_spectrum;

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn jumps(g: &DualGraph) -> Vec<BigRational> {
    jump_spectrum(g, 4, 50).unwrap().jumps
}

#[test]
fn kodaira_dual_pairs_sum_to_one() {
    for t in ["II", "III", "IV"] {
        let a = jumps(&lookup(t).unwrap().graph);
        let b = jumps(&lookup(&format!("{t}*")).unwrap().graph);
        assert_eq!(&a[0] + &b[0], q(1, 1), "{t}");
    }
}

#[test]
fn entries_round_trip_through_text() {
    for e in entries() {
        let text = write_graph(&e.graph);
        assert_eq!(parse_graph(&text).unwrap(), e.graph, "{}", e.key());
    }
}

#[test]
fn denominators_divide_lcm() {
    for e in entries() {
        let g = &e.graph;
        assert_eq!(g.multiplicity_lcm() % g.expected_denominator(), 0, "{}", e.key());
    }
}

#[test]
fn corrupted_multiplicity_fails() {
    let mut broken = Vec::new();
    for e in entries().into_iter().filter(|e| e.genus() == 1) {
        let text = write_graph(&e.graph);
        // raise the multiplicity of the first component
        let bumped = text.replacen("mult=", "mult=1", 1);
        let graph = DualGraph::named(e.name.clone());
        let graph = parse_graph(&bumped).unwrap_or(graph);
        broken.push(FiberType { graph, ..e });
    }
    let report = run_entries(broken);
    assert_eq!(report.results.len(), 10);
    assert!(!report.all_passed());
    let fails = report.results.iter().filter(|r| !r.passed()).count();
    assert!(fails >= 9, "{}", report.summary());
    assert!(report.results.iter().any(|r| r.to_string().starts_with("FAIL")));
}

#[test]
fn every_join_row_is_a_union_except_one() {
    let mut mismatched = Vec::new();
    for row in TABLE_ROWS.iter().filter(|r| r.table > 1 && r.name.ends_with("-m")) {
        let Some((a, b)) = row.name.strip_suffix("-m").and_then(|s| s.split_once('-')) else {
            continue;
        };
        let (Ok(left), Ok(right)) = (genus_one_piece(a), genus_one_piece(b)) else {
            continue;
        };
        let mut union = jumps(&left);
        union.extend(jumps(&right));
        union.sort();
        if union != row.expected_jumps() {
            mismatched.push(row.name);
        }
    }
    assert_eq!(mismatched, UNENCODED_JOINS);
    // the union for that row; the table lists 2/12 in place of 3/12
    let g = join(&genus_one_piece("II*").unwrap(), &genus_one_piece("III").unwrap(), 1).unwrap();
    assert_eq!(jumps(&g), vec![q(3, 12), q(10, 12)]);
}

#[test]
fn family_parameters_do_not_change_jumps() {
    for n in 2..8 {
        assert_eq!(jumps(&cycle_fiber(n).unwrap()), vec![q(0, 1)]);
    }
    for n in 0..5 {
        assert_eq!(jumps(&dihedral_fiber(n).unwrap()), vec![q(1, 2)]);
    }
    for n in 1..5 {
        assert_eq!(jumps(&elliptic_with_cycle(n).unwrap()), vec![q(0, 1); 2]);
    }
    for (n, p) in [(1, 1), (2, 5), (4, 3)] {
        assert_eq!(jumps(&figure_eight(n, p).unwrap()), vec![q(0, 1); 2]);
    }
    for (n, p, r) in [(1, 1, 1), (2, 3, 4), (5, 1, 2)] {
        assert_eq!(jumps(&theta(n, p, r).unwrap()), vec![q(0, 1); 2]);
    }
}

#[test]
fn catalog_genus_matches_table() {
    for e in entries() {
        assert_eq!(e.graph.genus().unwrap(), e.genus() as u64, "{}", e.key());
        assert!(e.expected_jumps.iter().all(|j| *j >= q(0, 1) && *j < q(1, 1)));
    }
}

#[test]
fn minimal_jumps_generate() {
    for e in entries() {
        let s = jump_spectrum(&e.graph, 4, 50).unwrap();
        let g = s.numerators().iter().fold(s.predicted_denominator, |g, i| g.gcd(i));
        assert_eq!(g, 1, "{}", e.key());
        let den = BigRational::from_integer(BigInt::from(s.predicted_denominator));
        assert!(s.jumps.iter().all(|j| (j * &den).is_integer()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // chains of (-2)-curves between the two halves leave the jumps alone
    #[test]
    fn join_chain_length_is_irrelevant(
        a in prop::sample::select(vec!["I0", "I0*", "II", "II*", "III", "III*", "IV", "IV*", "In", "In*"]),
        b in prop::sample::select(vec!["I0", "I0*", "II", "II*", "III", "III*", "IV", "IV*", "In", "In*"]),
        k in 0u64..5,
    ) {
        let (l, r) = (genus_one_piece(a).unwrap(), genus_one_piece(b).unwrap());
        prop_assert_eq!(jumps(&join(&l, &r, k).unwrap()), jumps(&join(&l, &r, 1).unwrap()));
    }
}
