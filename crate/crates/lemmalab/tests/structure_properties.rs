//! Corpus-level property tests for the structure detectors: statements that
//! quantify over Berge graphs and need generated corpora rather than
//! hand-built fixtures.

use graphcore::{emit_graph6, enumerate_antiholes, enumerate_holes, Parity};
use lemmalab::{generate, GeneratorSpec};
use structures::{f_ladder, find_prisms, has_odd_wheel, F8Mode, LadderOptions, PrismKind};

fn berge_corpus(sizes: &[(usize, f64)], per_size: usize, seed: u64) -> Vec<graphcore::Graph> {
    let mut out = Vec::new();
    for (i, &(n, p)) in sizes.iter().enumerate() {
        for k in 0..per_size {
            let s = seed ^ ((i * per_size + k) as u64);
            out.push(generate(&GeneratorSpec::BergeRejection { n, p }, s).unwrap());
        }
    }
    out
}

#[test]
fn prisms_in_berge_graphs_have_uniform_path_parity() {
    let corpus = berge_corpus(&[(8, 0.45), (9, 0.4), (10, 0.35)], 150, 41);
    let mut prisms_seen = 0;
    for g in &corpus {
        for p in find_prisms(g) {
            let parities: Vec<usize> = p.lengths().iter().map(|l| l % 2).collect();
            assert!(
                parities.iter().all(|&x| x == parities[0]),
                "mixed prism parity in Berge graph {}",
                emit_graph6(g)
            );
            prisms_seen += 1;
        }
    }
    assert!(prisms_seen > 0, "corpus should contain at least one prism");
}

#[test]
fn odd_wheel_detector_agrees_with_the_f7_flag() {
    let corpus = berge_corpus(&[(8, 0.5), (9, 0.4)], 200, 43);
    let opts = LadderOptions { f8: F8Mode::Off, ..Default::default() };
    for g in &corpus {
        let report = f_ladder(g, opts).unwrap();
        if report.flag(7).holds() {
            assert!(
                !has_odd_wheel(g) && !has_odd_wheel(&g.complement()),
                "F7 holds but an odd wheel exists in {}",
                emit_graph6(g)
            );
        }
    }
}

/// Desk-scale form of the hole/antihole exclusion: no F6 graph in a Berge
/// corpus with n <= 10 contains both a hole of length >= 6 and an antihole
/// of length >= 6.
#[test]
fn f6_graphs_avoid_simultaneous_long_hole_and_antihole() {
    let corpus = berge_corpus(&[(9, 0.4), (10, 0.35), (10, 0.45)], 150, 47);
    let opts = LadderOptions { f8: F8Mode::Off, ..Default::default() };
    let mut f6_members = 0;
    for g in &corpus {
        let report = f_ladder(g, opts).unwrap();
        if !report.flag(6).holds() {
            continue;
        }
        f6_members += 1;
        let hole = !enumerate_holes(g, 6, Parity::Any).is_empty();
        let antihole = !enumerate_antiholes(g, 6, Parity::Any).is_empty();
        assert!(
            !(hole && antihole),
            "F6 graph {} has both a long hole and a long antihole",
            emit_graph6(g)
        );
    }
    assert!(f6_members > 0, "corpus should contain F6 members");
}

#[test]
fn berge_graph_holes_and_antiholes_are_even() {
    let corpus = berge_corpus(&[(9, 0.4), (10, 0.4)], 100, 53);
    for g in &corpus {
        assert!(enumerate_holes(g, 4, Parity::Odd).is_empty());
        assert!(enumerate_antiholes(g, 4, Parity::Odd).is_empty());
    }
}

#[test]
fn even_prisms_are_long_and_detectors_agree_with_class_flags() {
    // F4 fails exactly when an even prism exists; F5 failing on the G side
    // implies a long prism; consistency spot check on a mixed corpus.
    let corpus = berge_corpus(&[(9, 0.45), (10, 0.4)], 100, 61);
    let opts = LadderOptions { f8: F8Mode::Off, ..Default::default() };
    for g in &corpus {
        let prisms = find_prisms(g);
        for p in &prisms {
            if p.kind == PrismKind::Even {
                assert!(p.long, "an even prism always has paths of length >= 2");
            }
        }
        let report = f_ladder(g, opts).unwrap();
        if report.flag(3).holds() && prisms.iter().any(|p| p.kind == PrismKind::Even) {
            assert!(!report.flag(4).holds());
        }
    }
}
