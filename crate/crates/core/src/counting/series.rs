use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::system::System;

/// Power series in `z` truncated after `z^order`, exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Series::constant(BigRational::one(), order)
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        let mut s = Series::zero(order);
        if order >= 1 {
            s.coeffs[1] = BigRational::one();
        }
        s
    }

    pub fn from_integers(coeffs: &[BigInt], order: usize) -> Self {
        let mut s = Series::zero(order);
        for (i, c) in coeffs.iter().enumerate().take(order + 1) {
            s.coeffs[i] = BigRational::from_integer(c.clone());
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Integer coefficients; panics if one is fractional.
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        self.coeffs
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "non-integral coefficient {c}");
                c.to_integer()
            })
            .collect()
    }

    /// Multiplication by `z`, dropping the term that overflows the order.
    pub fn shift(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(BigRational::zero());
        coeffs.extend(self.coeffs[..self.order()].iter().cloned());
        Series { coeffs }
    }

    /// Division by `z`; the constant term must vanish. The top coefficient is unknown and set to 0,
    /// so the result is reliable up to `order - 1`.
    pub fn unshift(&self) -> Self {
        assert!(self.coeffs[0].is_zero(), "constant term must vanish");
        let mut coeffs: Vec<BigRational> = self.coeffs[1..].to_vec();
        coeffs.push(BigRational::zero());
        Series { coeffs }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut s = Series::zero(order);
        for k in 0..=order.min(self.order()) {
            s.coeffs[k] = self.coeffs[k].clone();
        }
        s
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Self {
        let c0 = &self.coeffs[0];
        assert!(!c0.is_zero(), "series is not invertible");
        let n = self.order();
        let mut inv = vec![BigRational::zero(); n + 1];
        inv[0] = c0.recip();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &inv[k - i];
            }
            inv[k] = -acc * &inv[0];
        }
        Series { coeffs: inv }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Series::one(self.order()), |acc, _| &acc * self)
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series { coeffs: (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect() }
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series { coeffs: (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect() }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                coeffs[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
            }
        }
        Series { coeffs }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z")?,
                _ => write!(f, "{c}*z^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

/// `A(z) = z (1 + A(z))^3`, rooted ternary trees by nodes.
pub fn series_a(order: usize) -> Series {
    let mut sys = System::new();
    let a = sys.var();
    let one = sys.one();
    let base = sys.add(one, a);
    let sq = sys.mul(base, base);
    let cube = sys.mul(sq, base);
    sys.define(a, cube);
    let coeffs: Vec<BigInt> = sys.solve::<BigInt>(order, &BigInt::one()).remove(0);
    Series::from_integers(&coeffs, order)
}

/// `T(z) = A - A^2`, rooted irreducible triangulations by inner vertices.
pub fn series_t(order: usize) -> Series {
    let a = series_a(order);
    &a - &(&a * &a)
}

/// `C(z) = z X / (1 + z X)` with `X = A - A^2 + 1`: rooted 4-connected
/// triangulations by inner vertices.
pub fn series_c(order: usize) -> Series {
    let x = &series_t(order) + &Series::one(order);
    let zx = x.shift();
    &zx * &(&Series::one(order) + &zx).inverse()
}

/// `U(z) = C/z - 1`, valid up to `z^(order-1)`.
pub fn series_u(order: usize) -> Series {
    let c = series_c(order + 1);
    (&c.unshift() - &Series::one(order + 1)).truncate(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &Series) -> Vec<i64> {
        s.integer_coeffs().iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn a_coefficients() {
        assert_eq!(ints(&series_a(6)), vec![0, 1, 3, 12, 55, 273, 1428]);
    }

    #[test]
    fn a_is_fixed_point() {
        let a = series_a(12);
        let rhs = (&Series::one(12) + &a).pow(3).shift();
        assert_eq!(a, rhs);
    }

    #[test]
    fn c_coefficients() {
        assert_eq!(ints(&series_c(7)), vec![0, 1, 0, 1, 3, 12, 52, 241]);
    }

    #[test]
    fn t_u_identity() {
        let n = 15;
        let t = series_t(n);
        let u = series_u(n);
        let one = Series::one(n);
        let up1 = &u + &one;
        let rhs = &up1 * &(&one - &up1.shift()).inverse();
        assert_eq!(&t + &one, rhs);
    }

    #[test]
    fn inverse_round_trip() {
        let s = &Series::one(10) + &Series::z(10).pow(2);
        assert_eq!(&s * &s.inverse(), Series::one(10));
    }
}
