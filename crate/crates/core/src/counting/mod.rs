//! Exact enumeration: closed formulas and power series.

mod series;
mod system;

pub use series::{series_a, series_c, series_t, series_u, Series};
pub use system::{
    bivariate_internal_red, bivariate_red_edges, internal_red_means, internal_red_system, red_edge_means,
    red_edge_system, BivariateSeries, Coeff, Dual, Expr, Poly, System,
};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use crate::ternary_tree::count_ternary;

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut c = BigUint::one();
    for i in 0..k {
        c = c * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    c
}

/// Rooted irreducible triangulations with `n >= 1` inner vertices:
/// `4 (3n)! / (n! (2n+2)!)`.
pub fn rooted_irreducible_count(n: usize) -> BigUint {
    assert!(n >= 1, "defined for n >= 1");
    BigUint::from(4u32) * factorial(3 * n) / (factorial(n) * factorial(2 * n + 2))
}

fn ratio(a: usize, b: usize, c: usize) -> BigRational {
    // a! / (b! c!)
    BigRational::new(BigInt::from(factorial(a)), BigInt::from(factorial(b) * factorial(c)))
}

/// Irreducible triangulations with `n >= 1` inner vertices up to rotation.
pub fn unrooted_irreducible_count(n: usize) -> BigUint {
    assert!(n >= 1, "defined for n >= 1");
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut total = ratio(3 * n, n, 2 * n + 2);
    if n.is_multiple_of(2) {
        let k = n / 2;
        total += &half * ratio(3 * k, k, 2 * k + 1);
    } else {
        let k = (n - 1) / 2;
        total += &half * ratio(3 * k + 1, k, 2 * k + 2);
        if n % 4 == 1 {
            let k2 = (n - 1) / 4;
            total += &half * ratio(3 * k2, k2, 2 * k2 + 1);
        }
    }
    assert!(total.is_integer(), "orbit count must be integral");
    total.to_integer().to_biguint().expect("positive")
}

/// Rooted 4-connected triangulations with `n - 1` inner vertices, by the
/// alternating binomial sum; `n >= 1`.
pub fn tutte_count(n: usize) -> BigInt {
    assert!(n >= 1);
    let mut sum = BigInt::zero();
    for i in 1..=n {
        let term = BigInt::from(binomial(3 * n - i - 1, n - i) * binomial(2 * i, 2));
        if i % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
    }
    debug_assert!((&sum % BigInt::from(n)).is_zero());
    sum / BigInt::from(n)
}

/// Rooted 4-connected triangulations with `n >= 1` inner vertices, read off C(z).
pub fn four_connected_count(n: usize) -> BigInt {
    series_c(n).coeff(n).to_integer()
}

/// Converts an exact ratio to `f64` for reporting only.
pub fn to_f64(r: &BigRational) -> f64 {
    let (n, d) = (r.numer(), r.denom());
    // scale down huge operands before converting
    let shift = n.bits().max(d.bits()).saturating_sub(900);
    let n = n.abs() >> shift;
    let d = d >> shift;
    let v = n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN);
    if r.numer().is_negative() {
        -v
    } else {
        v
    }
}
