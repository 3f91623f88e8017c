use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use transversal::counting::{
    count_ternary, four_connected_count, internal_red_means, red_edge_means, rooted_irreducible_count, series_a,
    series_c, series_t, tutte_count,
};
use transversal::ternary_tree::{bicolor, enumerate_trees};
use transversal::Color;

#[test]
fn rooted_counts() {
    let small: Vec<BigUint> = (1..=4).map(rooted_irreducible_count).collect();
    assert_eq!(small, [1u32, 2, 6, 22].map(BigUint::from));
    for n in 1..=50 {
        assert_eq!(rooted_irreducible_count(n) * BigUint::from(2 * n + 2), count_ternary(n) * 4u32, "n={n}");
    }
}

#[test]
fn ternary_counts_are_fuss_catalan() {
    let a = series_a(30);
    for n in 1..=30 {
        assert_eq!(a.coeff(n).to_integer(), BigInt::from(count_ternary(n)));
    }
    for n in 1..=8 {
        assert_eq!(BigUint::from(enumerate_trees(n).unwrap().len()), count_ternary(n));
    }
}

#[test]
fn series_t_counts_rooted_triangulations() {
    let t = series_t(40);
    for n in 1..=40 {
        assert_eq!(t.coeff(n).to_integer(), BigInt::from(rooted_irreducible_count(n)), "n={n}");
    }
}

#[test]
fn four_connected_series() {
    let c = series_c(12);
    let first: Vec<BigInt> = (1..=7).map(|k| c.coeff(k).to_integer()).collect();
    assert_eq!(first, [1, 0, 1, 3, 12, 52, 241].map(BigInt::from));
    for k in 1..=12 {
        assert!(c.coeff(k).is_integer());
        // the alternating sum is indexed one above the series
        assert_eq!(c.coeff(k).to_integer(), tutte_count(k + 1), "z^{k}");
        assert_eq!(four_connected_count(k), tutte_count(k + 1));
    }
}

fn exhaustive_mean(n: usize, f: impl Fn(&transversal::ternary_tree::BicoloredTernaryTree) -> usize) -> BigRational {
    let mut total = 0usize;
    let mut k = 0usize;
    for tree in enumerate_trees(n).unwrap() {
        for c in [Color::Red, Color::Blue] {
            total += f(&bicolor(&tree, c));
            k += 1;
        }
    }
    BigRational::new(total.into(), k.into())
}

#[test]
fn series_means_match_tree_averages() {
    let red = red_edge_means(6);
    let internal = internal_red_means(6);
    for n in 1..=6 {
        assert_eq!(red[n].clone().unwrap(), exhaustive_mean(n, |t| t.count_red_edges()), "n={n}");
        assert_eq!(internal[n].clone().unwrap(), exhaustive_mean(n, |t| t.count_internal_red_edges()), "n={n}");
    }
}
