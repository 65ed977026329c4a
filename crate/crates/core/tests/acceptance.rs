//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! The heavy shared ingredient is a full scan of every isolate-free graph
//! with at most 9 vertices, one representative per isomorphism class. The
//! built-in enumerator stops at order 8; the order-9 stream is produced by
//! one census extension step and fed to the scanner as graph6 lines, the
//! same way an externally generated stream would be.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use rayon::prelude::*;

use chromastab::cycles::count_odd_cycles;
use chromastab::families::{enumerate_family_members, generate, FamilyParams, FamilyTag};
use chromastab::graph::{is_bipartite, Graph};
use chromastab::harness::{
    enumerate_small_graphs, extend_census, scan_graph6_lines_detailed, AnalyzedRow, ScanChecks,
    ScanReport,
};
use chromastab::reduction::verify_reduction;
use chromastab::stability::classify_critical;
use chromastab::{canonical_form, parse_graph6, recognize_32_critical_fast, write_graph6};

const SCAN_MAX_ORDER: usize = 9;

struct ScanData {
    report: ScanReport,
    rows: Vec<AnalyzedRow>,
}

/// Census levels 0..=8 from the built-in enumerator, order 9 by extension.
fn census_levels() -> &'static Vec<Vec<Graph>> {
    static LEVELS: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    LEVELS.get_or_init(|| {
        let mut levels: Vec<Vec<Graph>> = (0..=8)
            .map(|n| enumerate_small_graphs(n, false).unwrap())
            .collect();
        levels.push(extend_census(&levels[8]));
        // Unlabeled graph counts per order, a standard census.
        let expected = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668];
        let counts: Vec<usize> = levels.iter().map(|l| l.len()).collect();
        assert_eq!(counts, expected, "census sizes drifted");
        levels
    })
}

fn isolate_free(g: &Graph) -> bool {
    (0..g.n()).all(|v| g.degree(v) > 0)
}

fn scan_data() -> &'static ScanData {
    static SCAN: OnceLock<ScanData> = OnceLock::new();
    SCAN.get_or_init(|| {
        let lines: Vec<String> = census_levels()
            .iter()
            .skip(1)
            .take(SCAN_MAX_ORDER)
            .flatten()
            .filter(|g| isolate_free(g))
            .map(|g| write_graph6(g).unwrap())
            .collect();
        // Isolate-free classes of order n are the order-n classes minus
        // those with an isolated vertex, which biject onto order n-1; the
        // sum over orders 1..=9 telescopes.
        assert_eq!(lines.len(), 274_668 - 1);
        let (report, rows) = scan_graph6_lines_detailed(&lines, &ScanChecks::default());
        assert_eq!(report.parse_errors.len(), 0);
        assert_eq!(report.graphs_analyzed, lines.len());
        ScanData { report, rows }
    })
}

fn verdict(number: usize, name: &str, pass: bool) {
    println!(
        "acceptance criterion {number:2} [{name}]: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {number} ({name}) failed");
}

fn thirty_two_criticals_with_few_odd_cycles(
    report: &ScanReport,
) -> BTreeMap<usize, BTreeSet<String>> {
    let mut by_order: BTreeMap<usize, BTreeSet<String>> = BTreeMap::new();
    for entry in &report.criticals {
        if (entry.chi, entry.es) == (3, 2) && !entry.odd_saturated && entry.odd_cycles <= 4 {
            by_order.entry(entry.n).or_default().insert(entry.graph6.clone());
        }
    }
    by_order
}

#[test]
fn criterion_01_theorem1_classification_up_to_order_9() {
    let data = scan_data();
    let found = thirty_two_criticals_with_few_odd_cycles(&data.report);

    let mut expected: BTreeMap<usize, BTreeSet<String>> = BTreeMap::new();
    for tag in [FamilyTag::A, FamilyTag::B, FamilyTag::C, FamilyTag::D] {
        for g in enumerate_family_members(tag, SCAN_MAX_ORDER) {
            expected
                .entry(g.n())
                .or_default()
                .insert(write_graph6(&g).unwrap());
        }
    }

    let mut pass = true;
    for order in 1..=SCAN_MAX_ORDER {
        let empty = BTreeSet::new();
        let scan_side = found.get(&order).unwrap_or(&empty);
        let family_side = expected.get(&order).unwrap_or(&empty);
        if scan_side != family_side {
            pass = false;
            eprintln!(
                "order {order}: scan found {:?}, families enumerate {:?}",
                scan_side, family_side
            );
        }
    }
    // The family portrait at small orders is rigid; pin a few counts so a
    // silently empty comparison cannot pass.
    pass &= found.get(&5).map_or(0, |s| s.len()) == 1;
    pass &= found.get(&6).map_or(0, |s| s.len()) == 3;
    verdict(1, "criticals with <= 4 odd cycles are exactly families A-D, order <= 9", pass);
}

#[test]
fn criterion_02_no_critical_with_exactly_three_odd_cycles() {
    let data = scan_data();
    let mut pass = data.report.theorem5_holds == Some(true);
    for counts in data.report.per_order.values() {
        pass &= counts.criticals_32_odd3 == 0;
    }
    verdict(2, "no critical has exactly three odd cycles", pass);
}

#[test]
fn criterion_03_two_odd_in_ab_four_odd_in_cd() {
    let data = scan_data();
    let mut pass = data.report.theorem2_holds == Some(true)
        && data.report.theorem10_holds == Some(true);
    for entry in &data.report.criticals {
        if (entry.chi, entry.es) != (3, 2) || entry.odd_saturated {
            continue;
        }
        match entry.odd_cycles {
            2 => pass &= entry.families.iter().any(|f| *f == "A" || *f == "B"),
            4 => pass &= entry.families.iter().any(|f| *f == "C" || *f == "D"),
            _ => {}
        }
    }
    verdict(3, "two odd cycles implies A or B, four implies C or D", pass);
}

#[test]
fn criterion_04_two_two_criticals_are_p3_and_2k2() {
    let data = scan_data();
    let found: BTreeSet<String> = data
        .report
        .criticals
        .iter()
        .filter(|c| (c.chi, c.es) == (2, 2) && c.n <= 6)
        .map(|c| c.graph6.clone())
        .collect();
    let p3 = canonical_form(&Graph::path(3)).unwrap();
    let two_k2 = canonical_form(&Graph::path(2).disjoint_union(&Graph::path(2))).unwrap();
    let expected: BTreeSet<String> = [p3, two_k2].into_iter().collect();
    // Scanning beyond order 6 cannot add more: a (2,2)-critical graph has
    // exactly two edges.
    let beyond: Vec<&str> = data
        .report
        .criticals
        .iter()
        .filter(|c| (c.chi, c.es) == (2, 2) && c.n > 6)
        .map(|c| c.graph6.as_str())
        .collect();
    verdict(
        4,
        "only P3 and 2K2 are (2,2)-critical",
        found == expected && beyond.is_empty(),
    );
}

#[test]
fn criterion_05_chain_family_members_up_to_12_vertices_are_critical() {
    let mut cases: Vec<FamilyParams> = Vec::new();
    for lengths in [vec![4, 4], vec![4, 6], vec![6, 4], vec![6, 6]] {
        push_chain_cases(&lengths, &mut cases);
    }
    for a in [4, 6] {
        for b in [4, 6] {
            for c in [4, 6] {
                push_chain_cases(&[a, b, c], &mut cases);
            }
        }
    }
    cases.retain(|p| p.vertex_count() <= 12);
    assert!(cases.len() >= 20, "the parameter grid must not be trivial");
    let pass = cases.par_iter().all(|params| {
        let g = generate(params).unwrap();
        classify_critical(&g).unwrap() == Some((3, 2))
    });
    verdict(5, "family E members with <= 12 vertices are (3,2)-critical", pass);
}

fn push_chain_cases(lengths: &[usize], out: &mut Vec<FamilyParams>) {
    // All offset tuples with 1 <= d_i <= len_i/2 and odd sum.
    let mut offsets = vec![1usize; lengths.len()];
    loop {
        if offsets.iter().sum::<usize>() % 2 == 1 {
            let cycles: Vec<(usize, usize)> =
                lengths.iter().copied().zip(offsets.iter().copied()).collect();
            let params = FamilyParams::E { cycles };
            if params.validate().is_ok() {
                out.push(params);
            }
        }
        let mut i = 0;
        loop {
            if i == lengths.len() {
                return;
            }
            offsets[i] += 1;
            if offsets[i] <= lengths[i] / 2 {
                break;
            }
            offsets[i] = 1;
            i += 1;
        }
    }
}

#[test]
fn criterion_06_reduction_equivalence_over_connected_order_7() {
    let mut instances: Vec<(&Graph, usize, usize)> = Vec::new();
    let connected: Vec<Vec<Graph>> = (1..=7)
        .map(|n| enumerate_small_graphs(n, true).unwrap())
        .collect();
    for level in &connected {
        for g in level {
            for u in 0..g.n() {
                for k in [3, 4] {
                    instances.push((g, u, k));
                }
            }
        }
    }
    let failures: Vec<String> = instances
        .par_iter()
        .filter_map(|&(g, u, k)| {
            let result = verify_reduction(g, u, k).unwrap();
            (!result.equivalent).then(|| {
                format!(
                    "g={} u={u} k={k} lhs={} rhs={}",
                    write_graph6(g).unwrap(),
                    result.lhs,
                    result.rhs
                )
            })
        })
        .collect();
    for f in &failures {
        eprintln!("reduction mismatch: {f}");
    }
    verdict(
        6,
        "clique-gluing reduction equivalence, zero exceptions",
        failures.is_empty() && instances.len() > 10_000,
    );
}

#[test]
fn criterion_07_fast_recognizer_agrees_with_brute_force_through_order_8() {
    let mut pass = true;
    for n in 1..=8 {
        let disagreements: Vec<String> = census_levels()[n]
            .par_iter()
            .filter_map(|g| {
                let fast = recognize_32_critical_fast(g);
                let slow = matches!(classify_critical(g), Ok(Some((3, 2))));
                (fast != slow).then(|| write_graph6(g).unwrap())
            })
            .collect();
        for g6 in &disagreements {
            eprintln!("recognizer disagreement at order {n}: {g6}");
        }
        pass &= disagreements.is_empty();
    }
    // The K4 trap specifically: both bipartiteness conditions hold but the
    // chromatic number is 4.
    pass &= !recognize_32_critical_fast(&Graph::complete(4));
    verdict(7, "fast recognizer equals brute force through order 8", pass);
}

#[test]
fn supporting_recognizer_also_agrees_at_order_9() {
    // The scan already classified every order-9 graph; the recognizer must
    // land on the same verdicts.
    let data = scan_data();
    let disagreements: Vec<String> = data
        .rows
        .par_iter()
        .filter(|row| row.n == 9)
        .filter_map(|row| {
            let g = parse_graph6(&row.graph6).unwrap();
            let fast = recognize_32_critical_fast(&g);
            let slow = row.record.k_l == Some((3, 2));
            (fast != slow).then(|| row.graph6.clone())
        })
        .collect();
    for g6 in &disagreements {
        eprintln!("recognizer disagreement at order 9: {g6}");
    }
    assert!(disagreements.is_empty());
}

fn brute_max_cut(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    (0u32..1 << (n - 1))
        .map(|mask| {
            g.edges()
                .iter()
                .filter(|e| (mask >> e.u() & 1) != (mask >> e.v() & 1))
                .count()
        })
        .max()
        .unwrap()
}

#[test]
fn criterion_08_es_coincides_with_frustration_for_chi_3_and_edges_for_chi_2() {
    let data = scan_data();
    let failures: Vec<String> = data
        .rows
        .par_iter()
        .filter_map(|row| {
            let record = &row.record;
            match record.chi {
                2 => {
                    // es must equal the edge count, witnessed by all edges.
                    (record.es != Some(row.m)).then(|| row.graph6.clone())
                }
                3 => {
                    // Independent route: frustration = m - max cut, and the
                    // witness must actually drop the chromatic number to 2.
                    let g = parse_graph6(&row.graph6).unwrap();
                    let expected = row.m - brute_max_cut(&g);
                    if record.es != Some(expected) {
                        return Some(row.graph6.clone());
                    }
                    let witness = record.witness_set.as_ref().unwrap();
                    let reduced = g.delete_edges(witness).unwrap();
                    let dropped_to_two =
                        is_bipartite(&reduced).is_bipartite() && reduced.edge_count() > 0;
                    (!dropped_to_two).then(|| row.graph6.clone())
                }
                _ => None,
            }
        })
        .collect();
    for f in &failures {
        eprintln!("es coincidence failure: {f}");
    }
    let chi3 = data.rows.iter().filter(|r| r.record.chi == 3).count();
    verdict(
        8,
        "es = frustration when chi=3 and es = |E| when chi=2",
        failures.is_empty() && chi3 > 10_000,
    );
}

#[test]
fn criterion_09_lemma_suite_holds_over_the_scan() {
    let data = scan_data();
    for v in &data.report.lemma_violations {
        eprintln!("lemma violation: {} on {}: {}", v.lemma, v.graph6, v.detail);
    }
    // The lemma and subdivision checks must actually have had criticals
    // with at least three odd cycles to chew on.
    let with_many: usize = data
        .report
        .per_order
        .values()
        .map(|c| c.criticals_32_odd4 + c.criticals_32_odd5_plus)
        .sum();
    verdict(
        9,
        "lemma and subdivision properties, zero violations",
        data.report.lemma_violations.is_empty() && with_many > 0,
    );
}

#[test]
fn criterion_10_k4_has_seven_cycles_four_odd() {
    let census = count_odd_cycles(&Graph::complete(4), None);
    verdict(
        10,
        "K4 census: 7 cycles, 4 odd",
        (census.total_count, census.odd_count, census.saturated) == (7, 4, false),
    );
}

#[test]
fn supporting_scan_report_is_internally_consistent() {
    let data = scan_data();
    let report = &data.report;
    let total: usize = report.per_order.values().map(|c| c.graphs).sum();
    assert_eq!(report.graphs_analyzed, total);
    for (order, counts) in &report.per_order {
        let buckets = counts.criticals_32_odd2
            + counts.criticals_32_odd3
            + counts.criticals_32_odd4
            + counts.criticals_32_odd5_plus;
        assert_eq!(counts.criticals_32, buckets, "order {order}");
    }
    // Every reported critical re-validates from scratch.
    report.criticals.par_iter().for_each(|entry| {
        let g = parse_graph6(&entry.graph6).unwrap();
        assert_eq!(
            classify_critical(&g).unwrap(),
            Some((entry.chi, entry.es)),
            "{}",
            entry.graph6
        );
    });
}

#[test]
fn supporting_scan_witnesses_drop_chi_by_exactly_one() {
    // Each record's witness set must achieve the drop it claims.
    let data = scan_data();
    data.rows.par_iter().for_each(|row| {
        let record = &row.record;
        let (Some(es), Some(witness)) = (record.es, record.witness_set.as_ref()) else {
            assert!(record.chi <= 1);
            return;
        };
        assert_eq!(witness.len(), es, "{}", row.graph6);
        let g = parse_graph6(&row.graph6).unwrap();
        let reduced = g.delete_edges(witness).unwrap();
        assert_eq!(
            chromastab::chromatic_number(&reduced),
            record.chi - 1,
            "{}",
            row.graph6
        );
    });
}

#[test]
fn scan_problem1_exceptions_are_reported_not_failed() {
    // An empty exception list through order 9 supports the conjecture that
    // the five families are the whole story; a nonempty list would be a
    // finding, not an error. Print whatever turned up.
    let data = scan_data();
    for g6 in &data.report.problem1_exceptions {
        println!("critical outside all five families: {g6}");
    }
    println!(
        "problem 1 exceptions through order {SCAN_MAX_ORDER}: {}",
        data.report.problem1_exceptions.len()
    );
}
