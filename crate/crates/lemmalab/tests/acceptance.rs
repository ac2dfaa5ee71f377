//! Acceptance suite: ten criteria, one test each, every tolerance pinned in
//! code. Each test prints a single summary line on success; a failure carries
//! the first counterexample in its panic message.
//!
//! Run with `cargo test --test acceptance -- --test-threads=1 --nocapture`
//! for the per-criterion lines in order.

use graphcore::{emit_graph6, parse_graph6, Graph, VertexSet};
use lemmalab::{
    enumerate_all_graphs, generate, run_suite, ClaimId, GeneratorSpec, Source, SuiteOptions,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn opts() -> SuiteOptions {
    SuiteOptions { binding_budget: 4096, jobs: 1 }
}

fn assert_pass(report: &lemmalab::CorpusReport) {
    assert!(
        report.passed(),
        "claim {} found {} counterexamples; first: {:?}",
        report.claim,
        report.counterexamples.len(),
        report.counterexamples.first()
    );
}

/// Criterion 1: over all non-isomorphic graphs with n <= 8 (counts pinned to
/// 1, 2, 4, 11, 34, 156, 1044, 12346), is_berge equals is_perfect, zero
/// exceptions.
#[test]
fn criterion_01_spgt_desk_verification() {
    let expected_counts = [1usize, 2, 4, 11, 34, 156, 1044, 12346];
    let mut total = 0;
    for n in 1..=8 {
        let count = enumerate_all_graphs(n).unwrap().len();
        assert_eq!(count, expected_counts[n - 1], "enumerator count at n={n}");
        let report = run_suite(ClaimId::Spgt, &Source::Exhaustive(n), 0, opts()).unwrap();
        assert_eq!(report.graphs_checked, expected_counts[n - 1]);
        assert_pass(&report);
        total += count;
    }
    println!("criterion 1 PASS: spgt on all {total} graphs with n <= 8, zero exceptions");
}

/// Criterion 2: every Berge graph with n <= 8 decomposes (and its certificate
/// revalidates); zero exceptions.
#[test]
fn criterion_02_decomposition_theorem() {
    let mut berge_total = 0;
    for n in 1..=8 {
        let report = run_suite(ClaimId::Decomp, &Source::Exhaustive(n), 0, opts()).unwrap();
        assert_pass(&report);
        berge_total += report.graphs_checked;
    }
    assert_eq!(berge_total, 1 + 2 + 4 + 11 + 33 + 148 + 906 + 8887);
    println!("criterion 2 PASS: decompose on all {berge_total} Berge graphs with n <= 8");
}

/// Criterion 3: perfection is complement-invariant for all n <= 7.
#[test]
fn criterion_03_lovasz_complement_invariance() {
    let mut total = 0;
    for n in 1..=7 {
        let report = run_suite(ClaimId::Lovasz, &Source::Exhaustive(n), 0, opts()).unwrap();
        assert_pass(&report);
        total += report.graphs_checked;
    }
    println!("criterion 3 PASS: lovasz on all {total} graphs with n <= 7");
}

/// Criterion 4: the lemma suite passes exhaustively for n <= 7 and on 10^4
/// seeded Berge samples at n = 9..10 per claim, with budget overflows < 1%.
#[test]
fn criterion_04_lemma_suite() {
    let claims = [
        ClaimId::Rr,
        ClaimId::Greentouch,
        ClaimId::Evengap,
        ClaimId::Trianglev,
        ClaimId::Rrc,
        ClaimId::Bigholes,
    ];
    for claim in claims {
        let mut checked = 0;
        let mut overflows = 0;
        for n in 1..=7 {
            let report = run_suite(claim, &Source::Exhaustive(n), 0, opts()).unwrap();
            assert_pass(&report);
            checked += report.graphs_checked;
            overflows += report.budget_overflows;
        }
        for (n, p, seed) in [(9, 0.35, 90 + claim as u64), (10, 0.30, 100 + claim as u64)] {
            let source = Source::Generator {
                spec: GeneratorSpec::BergeRejection { n, p },
                samples: 5_000,
            };
            let report = run_suite(claim, &source, seed, opts()).unwrap();
            assert_pass(&report);
            checked += report.graphs_checked;
            overflows += report.budget_overflows;
        }
        assert!(
            overflows * 100 < checked,
            "{}: {overflows} overflows out of {checked} graphs breaks the 1% bound",
            claim.name()
        );
        println!(
            "criterion 4 PASS ({}): {checked} graphs, {overflows} budget overflows",
            claim.name()
        );
    }
}

/// Criterion 5: skew-partition machinery. geteven, singleton, mixedpair
/// exhaustively for n <= 8; findprism and oddskew on 10^3 seeded Berge
/// samples at n <= 9.
#[test]
fn criterion_05_skew_partition_machinery() {
    for claim in [ClaimId::Geteven, ClaimId::Singleton, ClaimId::Mixedpair] {
        let mut checked = 0;
        for n in 1..=8 {
            let report = run_suite(claim, &Source::Exhaustive(n), 0, opts()).unwrap();
            assert_pass(&report);
            checked += report.graphs_checked;
        }
        println!("criterion 5 PASS ({}): exhaustive n <= 8, {checked} Berge graphs", claim.name());
    }
    for claim in [ClaimId::Findprism, ClaimId::Oddskew] {
        let mut checked = 0;
        for (n, p, seed) in [(8, 0.40, 58), (9, 0.35, 59)] {
            let source =
                Source::Generator { spec: GeneratorSpec::BergeRejection { n, p }, samples: 500 };
            let report = run_suite(claim, &source, seed + claim as u64, opts()).unwrap();
            assert_pass(&report);
            checked += report.graphs_checked;
        }
        assert_eq!(checked, 1000);
        println!("criterion 5 PASS ({}): {checked} seeded Berge samples at n <= 9", claim.name());
    }
}

/// Criterion 6: the even-prism statement on constructions with path lengths
/// (2,2,2), (2,2,4), (4,4,4) -- 3/3.
#[test]
fn criterion_06_directed_even_prism() {
    let prisms: Vec<Graph> = [[2, 2, 2], [2, 2, 4], [4, 4, 4]]
        .into_iter()
        .map(structures::build_prism)
        .collect();
    let report =
        run_suite(ClaimId::Evenprism, &Source::Graphs(prisms), 0, opts()).unwrap();
    assert_eq!(report.graphs_checked, 3, "all three constructions are Berge");
    assert_pass(&report);
    println!("criterion 6 PASS: even-prism statement 3/3 on (2,2,2), (2,2,4), (4,4,4)");
}

/// Criterion 7: find_skew_partitions agrees with a naive independent
/// reference (union-find connectivity, plain bipartition loop) on 500 seeded
/// random graphs with n <= 9, on verdict and certificate count.
#[test]
fn criterion_07_skew_oracle_equivalence() {
    fn naive_components(g: &Graph, members: &[usize]) -> usize {
        let mut parent: Vec<usize> = (0..members.len()).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                if g.has_edge(members[i], members[j]) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        (0..members.len())
            .map(|i| find(&mut parent, i))
            .collect::<std::collections::BTreeSet<_>>()
            .len()
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7007);
    let mut agreements = 0;
    for trial in 0..500 {
        let n = 4 + trial % 6; // 4..=9
        let p = [0.3, 0.45, 0.6][trial % 3];
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        let comp = g.complement();
        let mut naive: Vec<u64> = Vec::new();
        for b_bits in 1..(1u64 << n).saturating_sub(1) {
            let b: Vec<usize> = (0..n).filter(|&v| b_bits >> v & 1 == 1).collect();
            let a: Vec<usize> = (0..n).filter(|&v| b_bits >> v & 1 == 0).collect();
            if naive_components(&g, &a) >= 2 && naive_components(&comp, &b) >= 2 {
                naive.push(b_bits);
            }
        }
        naive.sort_unstable();
        let mut ours: Vec<u64> =
            decompositions::find_skew_partitions(&g).iter().map(|c| c.b.bits()).collect();
        ours.sort_unstable();
        assert_eq!(ours, naive, "disagreement on {}", emit_graph6(&g));
        agreements += 1;
    }
    assert_eq!(agreements, 500);
    println!("criterion 7 PASS: skew finder vs naive reference, 500/500 agreement");
}

/// Criterion 8: every detector and recognizer verdict is invariant under 200
/// seeded random relabelings.
#[test]
fn criterion_08_isomorphism_invariance() {
    #[derive(Debug, PartialEq, Eq)]
    struct Profile {
        berge: bool,
        perfect: Option<bool>,
        basic_class: Option<&'static str>,
        prisms: (usize, usize, usize),
        wheels: (usize, usize),
        fixed: [bool; 3],
        appearances: (usize, usize),
        two_join: bool,
        m_join: bool,
        skew: (usize, usize, usize),
        balanced_skew: bool,
        ladder: Option<Vec<bool>>,
    }

    fn profile(g: &Graph) -> Profile {
        let berge = recognizers::is_berge(g);
        let perfect = recognizers::is_perfect_bounded(g, 12).ok().map(|r| r.perfect);
        let basic_class = recognizers::classify_basic(g).map(|c| match c {
            recognizers::BasicCert::Bipartite { .. } => "bip",
            recognizers::BasicCert::ComplementBipartite { .. } => "cobip",
            recognizers::BasicCert::LineOfBipartite(_) => "line",
            recognizers::BasicCert::ComplementLineOfBipartite(_) => "coline",
            recognizers::BasicCert::Bicograph(_) => "bico",
        });
        let prisms = structures::find_prisms(g);
        let prisms = (
            prisms.len(),
            prisms.iter().filter(|p| p.kind == structures::PrismKind::Even).count(),
            prisms.iter().filter(|p| p.long).count(),
        );
        let wheels = structures::find_wheels(g);
        let wheels = (wheels.len(), wheels.iter().filter(|w| w.odd).count());
        let fixed = [
            structures::contains_fixed(g, structures::FixedGraph::DoubleDiamond).is_some(),
            structures::contains_fixed(g, structures::FixedGraph::LK33).is_some(),
            structures::contains_fixed(g, structures::FixedGraph::LK33MinusE).is_some(),
        ];
        let apps = structures::find_appearances_k4(g, structures::DEFAULT_SUBSET_BUDGET).unwrap();
        let appearances = (apps.len(), apps.iter().filter(|a| a.degenerate).count());
        let skew = decompositions::find_skew_partitions(g);
        let skew = (
            skew.len(),
            skew.iter().filter(|c| c.loose).count(),
            skew.iter().filter(|c| c.balanced).count(),
        );
        let ladder = if berge {
            let r = structures::f_ladder(
                g,
                structures::LadderOptions {
                    f8: structures::F8Mode::On,
                    ..Default::default()
                },
            )
            .unwrap();
            Some(r.flags.iter().map(|f| f.holds()).collect())
        } else {
            None
        };
        Profile {
            berge,
            perfect,
            basic_class,
            prisms,
            wheels,
            fixed,
            appearances,
            two_join: decompositions::find_two_join(g).is_some(),
            m_join: decompositions::find_m_join(g).is_some(),
            skew,
            balanced_skew: decompositions::find_balanced_skew(g).is_some(),
            ladder,
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(888);
    for trial in 0..200 {
        let n = 5 + trial % 5; // 5..=9
        let p = [0.3, 0.5, 0.7][trial % 3];
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            perm.swap(i, j);
        }
        let h = g.relabel(&perm);
        assert_eq!(profile(&g), profile(&h), "relabeling changed a verdict on {}", emit_graph6(&g));
    }
    println!("criterion 8 PASS: 200/200 relabeled pairs agree on every detector");
}

/// Criterion 9: graph6 parse/emit is a fixed point on the full n <= 7
/// corpus, and generated bicographs / line-of-bipartite graphs are accepted
/// by their recognizers, 100 each.
#[test]
fn criterion_09_round_trips_and_generator_agreement() {
    let mut corpus = 0;
    for n in 1..=7 {
        for g in enumerate_all_graphs(n).unwrap() {
            let enc = emit_graph6(&g);
            let back = parse_graph6(&enc).unwrap();
            assert_eq!(back, g);
            assert_eq!(emit_graph6(&back), enc);
            corpus += 1;
        }
    }
    assert_eq!(corpus, 1 + 2 + 4 + 11 + 34 + 156 + 1044);
    for seed in 0..100u64 {
        let g = generate(&GeneratorSpec::Bicograph { m: 2 + (seed % 2) as usize, n: 2 }, seed)
            .unwrap();
        let cert = recognizers::recognize_bicograph(&g)
            .unwrap_or_else(|| panic!("bicograph seed {seed} not recognized"));
        assert!(recognizers::validate_bicograph(&g, &cert));
    }
    for seed in 0..100u64 {
        let spec = GeneratorSpec::LineOfBipartite { n1: 3, n2: 3, p: 0.6 };
        let g = generate(&spec, seed).unwrap();
        assert!(
            recognizers::recognize_line_of_bipartite(&g).is_some(),
            "line-of-bipartite seed {seed} not recognized"
        );
    }
    println!("criterion 9 PASS: {corpus} round trips, 100+100 generator/recognizer agreements");
}

/// Criterion 10: every F11 member of the Berge corpus with n <= 8 is
/// complete, bipartite, or admits a balanced skew partition.
#[test]
fn criterion_10_endgame() {
    let mut checked = 0;
    for n in 1..=8 {
        let report = run_suite(ClaimId::Endgame, &Source::Exhaustive(n), 0, opts()).unwrap();
        assert_pass(&report);
        checked += report.graphs_checked;
    }
    println!("criterion 10 PASS: endgame over {checked} Berge graphs with n <= 8");
}

/// The harness itself must be able to fail: a deliberately falsified claim
/// yields counterexamples.
#[test]
fn harness_selftest_detects_falsified_claims() {
    let report =
        run_suite(ClaimId::SelftestFalsified, &Source::Exhaustive(5), 0, opts()).unwrap();
    assert!(!report.passed());
    println!(
        "harness selftest PASS: falsified claim produced {} counterexamples",
        report.counterexamples.len()
    );
}

/// Sanity anchor used by several criteria: the vertex-set type round-trips
/// through sorted lists.
#[test]
fn vertex_sets_echo_as_sorted_lists() {
    let s = VertexSet::from_iter([5, 1, 3]);
    assert_eq!(s.to_vec(), vec![1, 3, 5]);
}
