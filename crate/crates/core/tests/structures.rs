mod common;

use common::{brute_alpha0, brute_partitions, brute_structures, labeled_triangulations};
use rand::Rng;
use transversal::bijection::random_triangulation;
use transversal::planar_map::AngularGraph;
use transversal::rng::rng_from_seed;
use transversal::transversal::{
    classify_cycle, find_alpha0, find_alternating_cycles, flip, flop, is_minimal, minimal_structure, minimalize,
    minimalize_with, orient, phi, psi, sweep_preimage, verify_partition, AlternatingFourCycle, Chirality,
};

#[test]
fn small_structure_sets_coincide() {
    for n in 1..=3 {
        for (t, _) in labeled_triangulations(n) {
            let parts = brute_partitions(&t);
            let structs = brute_structures(&t, &parts);
            let q = AngularGraph::new(&t);
            let alphas = brute_alpha0(&t, &q);
            assert!(!parts.is_empty());
            assert_eq!(parts.len(), structs.len());
            assert_eq!(parts.len(), alphas.len());
            for o in &alphas {
                let ts = sweep_preimage(&t, &q, o).unwrap();
                assert_eq!(&psi(&t, &q, &phi(&ts)), o);
            }
            // every partition orients, and orientation forgets back
            for ep in &parts {
                assert_eq!(&phi(&orient(&t, ep).unwrap()), ep);
            }
        }
    }
}

#[test]
fn flow_and_sweep_agree_with_enumeration() {
    for (t, _) in labeled_triangulations(3) {
        let q = AngularGraph::new(&t);
        let o = find_alpha0(&t, &q).unwrap();
        assert!(brute_alpha0(&t, &q).contains(&o));
    }
}

#[test]
fn minimal_partition_is_the_unique_sink() {
    for n in 1..=4 {
        for (t, ep) in labeled_triangulations(n) {
            let minimal: Vec<_> = brute_partitions(&t).into_iter().filter(|p| is_minimal(&t, p)).collect();
            assert_eq!(minimal, vec![ep.clone()]);
            assert_eq!(phi(&minimal_structure(&t).unwrap()), ep);
        }
    }
}

fn mirrored(c: &AlternatingFourCycle) -> AlternatingFourCycle {
    let chirality = match c.chirality {
        Chirality::Left => Chirality::Right,
        Chirality::Right => Chirality::Left,
    };
    AlternatingFourCycle { chirality, ..c.clone() }
}

#[test]
fn flips_and_flops_are_inverse() {
    let mut rng = rng_from_seed(7);
    let mut done = 0;
    for seed in 0..20u64 {
        let c = random_triangulation(rng.gen_range(4..=30), seed).unwrap();
        let t = &c.triangulation;
        let mut cur = c.partition.clone();
        for _ in 0..50 {
            let cycles = find_alternating_cycles(t, &cur);
            if cycles.is_empty() {
                break;
            }
            let cy = &cycles[rng.gen_range(0..cycles.len())];
            let next = match cy.chirality {
                Chirality::Left => flop(t, &cur, cy).unwrap(),
                Chirality::Right => flip(t, &cur, cy).unwrap(),
            };
            assert!(verify_partition(t, &next).is_empty());
            let back = mirrored(cy);
            assert_eq!(classify_cycle(t, &next, &back.darts), Some(back.chirality));
            let undone = match back.chirality {
                Chirality::Left => flop(t, &next, &back).unwrap(),
                Chirality::Right => flip(t, &next, &back).unwrap(),
            };
            assert_eq!(undone, cur);
            // the wrong operation is refused
            assert!(match cy.chirality {
                Chirality::Left => flip(t, &cur, cy).is_err(),
                Chirality::Right => flop(t, &cur, cy).is_err(),
            });
            cur = next;
            done += 1;
        }
    }
    assert!(done > 200);
}

#[test]
fn minimalize_ignores_flip_order() {
    let mut rng = rng_from_seed(11);
    for seed in 0..40u64 {
        let c = random_triangulation(rng.gen_range(1..=40), seed).unwrap();
        let t = &c.triangulation;
        let mut cur = c.partition.clone();
        for _ in 0..rng.gen_range(0..30) {
            let lefts: Vec<_> =
                find_alternating_cycles(t, &cur).into_iter().filter(|c| c.chirality == Chirality::Left).collect();
            if lefts.is_empty() {
                break;
            }
            cur = flop(t, &cur, &lefts[rng.gen_range(0..lefts.len())]).unwrap();
        }
        let first = minimalize(t, &cur);
        let (last, _) = minimalize_with(t, &cur, |k| k - 1);
        assert_eq!(first, last);
        assert_eq!(first, c.partition);
    }
}
