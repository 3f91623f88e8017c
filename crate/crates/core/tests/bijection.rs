mod common;

use std::collections::BTreeSet;

use common::{all_closures, dart_key, labeled_key, labeled_triangulations, partition_key, unlabeled_key};
use num_bigint::BigUint;
use transversal::bijection::{closure, open, opening, random_triangulation};
use transversal::counting::{count_ternary, rooted_irreducible_count, unrooted_irreducible_count};
use transversal::drawing::ccw_internal_edges;
use transversal::transversal::{is_minimal, verify_partition};
use transversal::Color;

#[test]
fn opening_undoes_closure() {
    for n in 1..=5 {
        for (bt, c) in all_closures(n) {
            assert_eq!(opening(&c.triangulation, &c.partition, Some(c.root)).unwrap(), bt);
        }
    }
}

#[test]
fn closure_undoes_opening() {
    for n in 1..=5 {
        for (t, ep) in labeled_triangulations(n) {
            let bt = open(&t).unwrap();
            let c = closure(&bt).unwrap();
            assert_eq!(labeled_key(&c.triangulation), labeled_key(&t));
            assert_eq!(partition_key(&c.triangulation, &c.partition), partition_key(&t, &ep));
        }
    }
}

#[test]
fn marked_images_are_distinct() {
    for n in 1..=5 {
        for color in [Color::Red, Color::Blue] {
            let images: BTreeSet<_> = all_closures(n)
                .into_iter()
                .filter(|(bt, _)| bt.root_color() == color)
                .map(|(_, c)| (labeled_key(&c.triangulation), dart_key(&c.triangulation, c.root)))
                .collect();
            assert_eq!(BigUint::from(images.len()), count_ternary(n), "n={n}");
        }
    }
}

#[test]
fn images_cover_rooted_triangulations() {
    for n in 1..=6 {
        let got = labeled_triangulations(n).len();
        assert_eq!(BigUint::from(got), rooted_irreducible_count(n), "n={n}");
    }
}

#[test]
fn rotation_classes_match_unrooted_count() {
    for n in 1..=6 {
        let classes: BTreeSet<_> = labeled_triangulations(n).iter().map(|(t, _)| unlabeled_key(t)).collect();
        assert_eq!(BigUint::from(classes.len()), unrooted_irreducible_count(n), "n={n}");
    }
}

#[test]
fn closures_are_minimal_transversal() {
    for n in 1..=5 {
        for (_, c) in all_closures(n) {
            assert!(verify_partition(&c.triangulation, &c.partition).is_empty());
            assert!(is_minimal(&c.triangulation, &c.partition));
        }
    }
}

#[test]
fn ccw_internal_edges_are_internal_tree_edges() {
    for n in 1..=5 {
        for (bt, c) in all_closures(n) {
            for col in [Color::Red, Color::Blue] {
                assert_eq!(ccw_internal_edges(&c.triangulation, &c.partition, col), bt.count_internal_edges(col));
            }
        }
    }
}

#[test]
fn red_edges_of_tree_and_triangulation_agree() {
    for n in 1..=5 {
        for (bt, c) in all_closures(n) {
            assert_eq!(c.partition.count(Color::Red), bt.count_red_edges());
        }
    }
}

#[test]
fn random_round_trips() {
    for seed in 0..40u64 {
        let n = 1 + (seed as usize * 53) % 400;
        let c = random_triangulation(n, seed).unwrap();
        let t = &c.triangulation;
        assert!(is_minimal(t, &c.partition));
        let bt = open(t).unwrap();
        assert_eq!(bt.tree().node_count(), n);
        let c2 = closure(&bt).unwrap();
        assert_eq!(labeled_key(&c2.triangulation), labeled_key(t), "n={n} seed={seed}");
        assert_eq!(partition_key(&c2.triangulation, &c2.partition), partition_key(t, &c.partition));
    }
}
