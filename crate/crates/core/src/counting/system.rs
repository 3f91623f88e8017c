//! Polynomial systems `X_i = z Q_i(X, u)` solved coefficient by coefficient.
//!
//! The `z^k` coefficient of every `X_i` only depends on coefficients of lower
//! order, so one pass over `k = 0..=N` computes all series exactly, costing
//! `O(N^2)` ring operations per product in the system. The ring decides what
//! happens to the marking variable `u`: plain integers evaluate at `u = 1`,
//! [`Poly`] keeps it symbolic, [`Dual`] carries the first derivative at `u = 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub trait Coeff: Clone {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn is_zero_elem(&self) -> bool;
}

impl Coeff for BigInt {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Value and first derivative in `u`, both at `u = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dual {
    pub value: BigInt,
    pub deriv: BigInt,
}

impl Dual {
    /// The variable `u` itself.
    pub fn variable() -> Self {
        Dual { value: BigInt::one(), deriv: BigInt::one() }
    }
}

impl Coeff for Dual {
    fn zero_elem() -> Self {
        Dual { value: BigInt::zero(), deriv: BigInt::zero() }
    }
    fn one_elem() -> Self {
        Dual { value: BigInt::one(), deriv: BigInt::zero() }
    }
    fn plus(&self, o: &Self) -> Self {
        Dual { value: &self.value + &o.value, deriv: &self.deriv + &o.deriv }
    }
    fn times(&self, o: &Self) -> Self {
        Dual { value: &self.value * &o.value, deriv: &self.value * &o.deriv + &self.deriv * &o.value }
    }
    fn is_zero_elem(&self) -> bool {
        self.value.is_zero() && self.deriv.is_zero()
    }
}

/// Polynomial in `u` with integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly(pub Vec<BigInt>);

impl Poly {
    pub fn variable() -> Self {
        Poly(vec![BigInt::zero(), BigInt::one()])
    }

    fn trimmed(mut v: Vec<BigInt>) -> Self {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        Poly(v)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn at_one(&self) -> BigInt {
        self.0.iter().sum()
    }

    /// Derivative at `u = 1`.
    pub fn deriv_at_one(&self) -> BigInt {
        self.0.iter().enumerate().map(|(k, c)| c * BigInt::from(k)).sum()
    }
}

impl Coeff for Poly {
    fn zero_elem() -> Self {
        Poly(Vec::new())
    }
    fn one_elem() -> Self {
        Poly(vec![BigInt::one()])
    }
    fn plus(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Poly::trimmed((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
    fn times(&self, o: &Self) -> Self {
        if self.0.is_empty() || o.0.is_empty() {
            return Poly::zero_elem();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::trimmed(v)
    }
    fn is_zero_elem(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Expr(usize);

#[derive(Debug, Clone)]
enum Node {
    One,
    U,
    Var(usize),
    Add(Expr, Expr),
    Mul(Expr, Expr),
}

#[derive(Debug, Clone, Default)]
pub struct System {
    nodes: Vec<Node>,
    vars: Vec<Expr>,
    defs: Vec<Option<Expr>>,
}

impl System {
    pub fn new() -> Self {
        Self::default()
    }

    fn push(&mut self, n: Node) -> Expr {
        self.nodes.push(n);
        Expr(self.nodes.len() - 1)
    }

    pub fn var(&mut self) -> Expr {
        let i = self.vars.len();
        let e = self.push(Node::Var(i));
        self.vars.push(e);
        self.defs.push(None);
        e
    }

    pub fn one(&mut self) -> Expr {
        self.push(Node::One)
    }

    /// The marking variable.
    pub fn u(&mut self) -> Expr {
        self.push(Node::U)
    }

    pub fn add(&mut self, a: Expr, b: Expr) -> Expr {
        self.push(Node::Add(a, b))
    }

    pub fn mul(&mut self, a: Expr, b: Expr) -> Expr {
        self.push(Node::Mul(a, b))
    }

    pub fn sum(&mut self, terms: &[Expr]) -> Expr {
        let mut acc = terms[0];
        for &t in &terms[1..] {
            acc = self.add(acc, t);
        }
        acc
    }

    pub fn product(&mut self, factors: &[Expr]) -> Expr {
        let mut acc = factors[0];
        for &f in &factors[1..] {
            acc = self.mul(acc, f);
        }
        acc
    }

    /// Sets `var = z * q`.
    pub fn define(&mut self, var: Expr, q: Expr) {
        let Node::Var(i) = self.nodes[var.0] else { panic!("not a variable") };
        self.defs[i] = Some(q);
    }

    /// Coefficients `0..=order` of every variable, in creation order. `u` is
    /// the ring element substituted for the marking variable.
    pub fn solve<R: Coeff>(&self, order: usize, u: &R) -> Vec<Vec<R>> {
        let defs: Vec<Expr> = self.defs.iter().map(|d| d.expect("undefined variable")).collect();
        let mut c: Vec<Vec<R>> = vec![Vec::with_capacity(order + 1); self.nodes.len()];
        for k in 0..=order {
            for (i, v) in self.vars.iter().enumerate() {
                let val = if k == 0 { R::zero_elem() } else { c[defs[i].0][k - 1].clone() };
                c[v.0].push(val);
            }
            for idx in 0..self.nodes.len() {
                let val = match &self.nodes[idx] {
                    Node::Var(_) => continue,
                    Node::One => {
                        if k == 0 {
                            R::one_elem()
                        } else {
                            R::zero_elem()
                        }
                    }
                    Node::U => {
                        if k == 0 {
                            u.clone()
                        } else {
                            R::zero_elem()
                        }
                    }
                    Node::Add(a, b) => c[a.0][k].plus(&c[b.0][k]),
                    Node::Mul(a, b) => {
                        let mut acc = R::zero_elem();
                        for i in 0..=k {
                            let x = &c[a.0][i];
                            if x.is_zero_elem() {
                                continue;
                            }
                            let y = &c[b.0][k - i];
                            if !y.is_zero_elem() {
                                acc = acc.plus(&x.times(y));
                            }
                        }
                        acc
                    }
                };
                c[idx].push(val);
            }
        }
        self.vars.iter().map(|v| std::mem::take(&mut c[v.0])).collect()
    }
}

/// Series in `z` whose coefficients are polynomials in `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    coeffs: Vec<Poly>,
}

impl BivariateSeries {
    pub fn new(coeffs: Vec<Poly>) -> Self {
        BivariateSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `[z^n] u^k`.
    pub fn coeff(&self, n: usize, k: usize) -> BigInt {
        self.coeffs[n].coeff(k)
    }

    pub fn z_coeff(&self, n: usize) -> &Poly {
        &self.coeffs[n]
    }

    /// `[z^n]` of the series at `u = 1`.
    pub fn at_one(&self, n: usize) -> BigInt {
        self.coeffs[n].at_one()
    }

    /// `[z^n]` of the `u`-derivative at `u = 1`.
    pub fn deriv_at_one(&self, n: usize) -> BigInt {
        self.coeffs[n].deriv_at_one()
    }

    /// Mean of the marked parameter over objects of size `n`.
    pub fn mean(&self, n: usize) -> BigRational {
        BigRational::new(self.deriv_at_one(n), self.at_one(n))
    }

    pub fn add(&self, other: &Self) -> Self {
        BivariateSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.plus(b)).collect() }
    }
}

/// Red-rooted and blue-rooted bicolored trees by nodes (`z`) and red edges (`u`).
/// Returns the system and its variables `(R, B)`.
pub fn red_edge_system() -> (System, [Expr; 2]) {
    let mut s = System::new();
    let r = s.var();
    let b = s.var();
    let one = s.one();
    let u = s.u();
    let one_b = s.add(one, b);
    let u_r = s.add(u, r);
    let qr = s.product(&[u, one_b, u_r, one_b]);
    let qb = s.product(&[u_r, one_b, u_r]);
    s.define(r, qr);
    s.define(b, qb);
    (s, [r, b])
}

/// System for internal red edges, variables `(F^, G^, F, G)`.
pub fn internal_red_system() -> (System, [Expr; 4]) {
    let mut s = System::new();
    let fh = s.var();
    let gh = s.var();
    let f = s.var();
    let g = s.var();
    let one = s.one();
    let u = s.u();
    let one_f = s.add(one, f);
    let one_fh = s.add(one, fh);
    let one_gh = s.add(one, gh);

    let t2 = s.product(&[u, one_f, gh]);
    let t3 = s.product(&[one_fh, gh]);
    let t4 = s.product(&[u, gh, one_fh, gh]);
    let q_fh = s.sum(&[one_f, t2, t3, t4]);

    let t1 = s.product(&[one_fh, one_f]);
    let t2 = s.product(&[one_fh, gh, one_fh]);
    let q_gh = s.sum(&[t1, t2]);

    let t1 = s.product(&[one_f, one_gh]);
    let t2 = s.product(&[gh, one_fh, one_gh]);
    let q_f = s.sum(&[t1, t2]);

    let t1 = s.product(&[one_f, one_f]);
    let t2 = s.product(&[one_f, gh, one_fh]);
    let q_g = s.sum(&[t1, t2]);

    s.define(fh, q_fh);
    s.define(gh, q_gh);
    s.define(f, q_f);
    s.define(g, q_g);
    (s, [fh, gh, f, g])
}

fn sum_series(a: Vec<Poly>, b: Vec<Poly>) -> BivariateSeries {
    BivariateSeries::new(a.iter().zip(&b).map(|(x, y)| x.plus(y)).collect())
}

/// `E = R + B`, bicolored rooted trees by nodes and red edges.
pub fn bivariate_red_edges(order: usize) -> BivariateSeries {
    let (s, _) = red_edge_system();
    let mut sol = s.solve(order, &Poly::variable());
    let b = sol.pop().unwrap();
    let r = sol.pop().unwrap();
    sum_series(r, b)
}

/// `H = F + G`, bicolored rooted trees by nodes and internal red edges.
pub fn bivariate_internal_red(order: usize) -> BivariateSeries {
    let (s, _) = internal_red_system();
    let mut sol = s.solve(order, &Poly::variable());
    let g = sol.pop().unwrap();
    let f = sol.pop().unwrap();
    sum_series(f, g)
}

fn means_from(sol: &[Vec<Dual>], a: usize, b: usize) -> Vec<Option<BigRational>> {
    (0..sol[a].len())
        .map(|n| {
            let v = &sol[a][n].value + &sol[b][n].value;
            let d = &sol[a][n].deriv + &sol[b][n].deriv;
            (!v.is_zero()).then(|| BigRational::new(d, v))
        })
        .collect()
}

/// Exact mean number of red edges of a uniform bicolored rooted tree with
/// `n` nodes, for `n = 0..=order` (`None` where there is no tree).
pub fn red_edge_means(order: usize) -> Vec<Option<BigRational>> {
    let (s, _) = red_edge_system();
    means_from(&s.solve(order, &Dual::variable()), 0, 1)
}

/// Exact mean number of internal red edges, same conventions.
pub fn internal_red_means(order: usize) -> Vec<Option<BigRational>> {
    let (s, _) = internal_red_system();
    means_from(&s.solve(order, &Dual::variable()), 2, 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ternary_tree::count_ternary;

    #[test]
    fn e_at_one_is_twice_a() {
        let e = bivariate_red_edges(10);
        let h = bivariate_internal_red(10);
        for n in 1..=10 {
            let two_a = BigInt::from(count_ternary(n)) * 2;
            assert_eq!(e.at_one(n), two_a);
            assert_eq!(h.at_one(n), two_a);
        }
    }

    #[test]
    fn red_edges_n1() {
        // the red-rooted n=1 tree has 2 red edges, the blue-rooted one 2 as well
        let e = bivariate_red_edges(1);
        assert_eq!(e.z_coeff(1), &Poly(vec![BigInt::zero(), BigInt::zero(), BigInt::from(2)]));
    }

    #[test]
    fn dual_agrees_with_poly() {
        let e = bivariate_red_edges(12);
        let h = bivariate_internal_red(12);
        let rm = red_edge_means(12);
        let im = internal_red_means(12);
        for n in 1..=12 {
            assert_eq!(rm[n].as_ref().unwrap(), &e.mean(n));
            assert_eq!(im[n].as_ref().unwrap(), &h.mean(n));
        }
    }

    #[test]
    fn red_mean_is_half_the_edges() {
        // swapping colors is an involution, so the mean is (3n+1)/2
        for (n, m) in red_edge_means(30).iter().enumerate().skip(1) {
            assert_eq!(m.as_ref().unwrap(), &BigRational::new(BigInt::from(3 * n + 1), BigInt::from(2)));
        }
    }
}
