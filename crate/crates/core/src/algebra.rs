//! Exact arithmetic: the abelian-group abstraction every engine sums over, and
//! dense univariate / sparse bivariate polynomials with big-integer coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An additively written abelian group.
///
/// Engines only ever add values and compare against zero, so that is all an
/// implementation has to provide.
pub trait GroupValue: Clone + PartialEq + fmt::Debug {
    fn neutral() -> Self;

    fn is_neutral(&self) -> bool;

    fn add_assign_ref(&mut self, other: &Self);

    fn negated(&self) -> Self;

    fn added(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_ref(other);
        out
    }

    /// `k · self` by double-and-add, so any group gets an integer action.
    fn times(&self, k: &BigInt) -> Self {
        let base = if k.is_negative() {
            self.negated()
        } else {
            self.clone()
        };
        let mut k = k.abs();
        let mut acc = Self::neutral();
        let mut power = base;
        let two = BigInt::from(2u8);
        while !k.is_zero() {
            if (&k % &two).is_one() {
                acc.add_assign_ref(&power);
            }
            let doubled = power.added(&power);
            power = doubled;
            k /= &two;
        }
        acc
    }
}

impl GroupValue for BigInt {
    fn neutral() -> Self {
        Zero::zero()
    }
    fn is_neutral(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn negated(&self) -> Self {
        -self
    }
    fn times(&self, k: &BigInt) -> Self {
        self * k
    }
}

impl GroupValue for BigRational {
    fn neutral() -> Self {
        Zero::zero()
    }
    fn is_neutral(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn negated(&self) -> Self {
        -self
    }
    fn times(&self, k: &BigInt) -> Self {
        self * BigRational::from_integer(k.clone())
    }
}

/// Double precision is only meant for approximations; exact engines never use it.
impl GroupValue for f64 {
    fn neutral() -> Self {
        0.0
    }
    fn is_neutral(&self) -> bool {
        *self == 0.0
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += *other;
    }
    fn negated(&self) -> Self {
        -*self
    }
}

impl GroupValue for i64 {
    fn neutral() -> Self {
        0
    }
    fn is_neutral(&self) -> bool {
        *self == 0
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += *other;
    }
    fn negated(&self) -> Self {
        -*self
    }
}

/// Dense polynomial in one variable with big-integer coefficients.
///
/// `coeffs[k]` is the coefficient of `x^k`; the highest stored coefficient is
/// never zero, so the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^degree`.
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        IntPolynomial { coeffs }
    }

    /// `±x^degree`, the shape of every term in a signed subset expansion.
    pub fn signed_power(negative: bool, degree: usize) -> Self {
        let c = if negative { -BigInt::one() } else { BigInt::one() };
        Self::monomial(c, degree)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Adds `c · x^degree` in place.
    pub fn add_term(&mut self, c: &BigInt, degree: usize) {
        if c.is_zero() {
            return;
        }
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, BigInt::zero());
        }
        self.coeffs[degree] += c;
        self.normalize();
    }

    pub fn scale(&self, by: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * by).collect())
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * at + c)
    }

    pub fn eval_rational(&self, at: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * at + BigRational::from_integer(c.clone())
        })
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Exact value of `p'(at)`.
    pub fn derivative_eval(&self, at: &BigInt) -> BigInt {
        self.derivative().eval(at)
    }

    /// Renders the polynomial in the given variable, highest power first.
    pub fn display_in(&self, var: &str) -> String {
        let mut out = String::new();
        if self.coeffs.is_empty() {
            out.push('0');
            return out;
        }
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write_term(&mut out, c, &[(var, k)]);
        }
        out
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

fn write_term(out: &mut String, c: &BigInt, powers: &[(&str, usize)]) {
    let first = out.is_empty();
    let negative = c.is_negative();
    if first {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    let mag = c.abs();
    let has_var = powers.iter().any(|&(_, e)| e > 0);
    if !mag.is_one() || !has_var {
        let _ = write!(out, "{mag}");
    }
    for &(var, e) in powers {
        match e {
            0 => {}
            1 => out.push_str(var),
            _ => {
                let _ = write!(out, "{var}^{e}");
            }
        }
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(mut self, rhs: IntPolynomial) -> IntPolynomial {
        self += &rhs;
        self
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        &self - &rhs
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl GroupValue for IntPolynomial {
    fn neutral() -> Self {
        IntPolynomial::zero()
    }
    fn is_neutral(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn negated(&self) -> Self {
        -self
    }
    fn times(&self, k: &BigInt) -> Self {
        self.scale(k)
    }
}

/// Sparse polynomial in `x` and `y`; `terms[(i, j)]` is the coefficient of
/// `x^i y^j`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn monomial(c: BigInt, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(&c, i, j);
        p
    }

    pub fn add_term(&mut self, c: &BigInt, i: u32, j: u32) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// `(i, j, c)` triples in increasing `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitutes a value for `x`, leaving a polynomial in `y`.
    pub fn eval_x(&self, x: &BigInt) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (&(i, j), c) in &self.terms {
            let xi = num_traits::pow::pow(x.clone(), i as usize);
            out.add_term(&(c * xi), j as usize);
        }
        out
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.eval_x(x).eval(y)
    }
}

impl fmt::Display for BiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (&(i, j), c) in &self.terms {
            write_term(&mut out, c, &[("x", i as usize), ("y", j as usize)]);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for BiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPolynomial({self})")
    }
}

impl AddAssign<&BiPolynomial> for BiPolynomial {
    fn add_assign(&mut self, rhs: &BiPolynomial) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(c, i, j);
        }
    }
}

impl Add for &BiPolynomial {
    type Output = BiPolynomial;
    fn add(self, rhs: &BiPolynomial) -> BiPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &BiPolynomial {
    type Output = BiPolynomial;
    fn neg(self) -> BiPolynomial {
        BiPolynomial {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for &BiPolynomial {
    type Output = BiPolynomial;
    fn mul(self, rhs: &BiPolynomial) -> BiPolynomial {
        let mut out = BiPolynomial::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term(&(a * b), i1 + i2, j1 + j2);
            }
        }
        out
    }
}

impl GroupValue for BiPolynomial {
    fn neutral() -> Self {
        BiPolynomial::zero()
    }
    fn is_neutral(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn negated(&self) -> Self {
        -self
    }
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn add_examples() {
        assert!((&p(&[0, 0, 1]) + &p(&[0, 0, -1])).is_zero());
        assert_eq!(&p(&[-1, 1]) + &p(&[1, 1]), p(&[0, 2]));
        assert_eq!(&p(&[0, 2, -3, 1]) + &p(&[0, 0, 3]), p(&[0, 2, 0, 1]));
    }

    #[test]
    fn eval_examples() {
        let k3 = p(&[0, 2, -3, 1]);
        assert_eq!(k3.eval(&BigInt::from(3)), BigInt::from(6));
        assert_eq!(k3.eval(&BigInt::zero()), BigInt::zero());
        assert_eq!(p(&[7, 1, 1]).eval(&BigInt::zero()), BigInt::from(7));
        assert!(p(&[2, -3, 1]).eval(&BigInt::one()).is_zero());
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[2, -3, 1]).derivative_eval(&BigInt::one()), BigInt::from(-1));
        assert!(p(&[5]).derivative_eval(&BigInt::from(9)).is_zero());
        assert_eq!(p(&[0, 0, 0, 1]).derivative_eval(&BigInt::one()), BigInt::from(3));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, 2, -3, 1]).to_string(), "x^3 - 3x^2 + 2x");
        assert_eq!(p(&[1, -1]).display_in("y"), "-y + 1");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        let q = &BiPolynomial::one() + &BiPolynomial::monomial(BigInt::from(3), 1, 1);
        assert_eq!(q.to_string(), "1 + 3xy");
    }

    #[test]
    fn bivariate_square_and_substitution() {
        let one_plus_xy = &BiPolynomial::one() + &BiPolynomial::monomial(BigInt::one(), 1, 1);
        let sq = &one_plus_xy * &one_plus_xy;
        assert_eq!(sq.coeff(1, 1), BigInt::from(2));
        assert_eq!(sq.coeff(2, 2), BigInt::one());
        // (1 - y)^2 at x = -1
        assert_eq!(sq.eval_x(&BigInt::from(-1)), p(&[1, -2, 1]));
    }

    #[test]
    fn times_matches_scaling() {
        let q = p(&[1, -2, 3]);
        for k in -5i64..=5 {
            let generic = {
                // go through the default double-and-add path
                #[derive(Clone, PartialEq, Debug)]
                struct Wrap(IntPolynomial);
                impl GroupValue for Wrap {
                    fn neutral() -> Self {
                        Wrap(IntPolynomial::zero())
                    }
                    fn is_neutral(&self) -> bool {
                        self.0.is_zero()
                    }
                    fn add_assign_ref(&mut self, o: &Self) {
                        self.0 += &o.0;
                    }
                    fn negated(&self) -> Self {
                        Wrap(-&self.0)
                    }
                }
                Wrap(q.clone()).times(&BigInt::from(k)).0
            };
            assert_eq!(generic, q.scale(&BigInt::from(k)));
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    fn poly_strategy() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-50i64..50, 0..6).prop_map(|c| IntPolynomial::from_i64s(&c))
    }

    fn bipoly_strategy() -> impl Strategy<Value = BiPolynomial> {
        prop::collection::vec((0u32..3, 0u32..3, -9i64..9), 0..6).prop_map(|ts| {
            let mut b = BiPolynomial::zero();
            for (i, j, c) in ts {
                b.add_term(&BigInt::from(c), i, j);
            }
            b
        })
    }

    fn check_axioms<V: GroupValue>(a: &V, b: &V, c: &V) {
        assert_eq!(a.added(b).added(c), a.added(&b.added(c)));
        assert_eq!(a.added(b), b.added(a));
        assert_eq!(a.added(&V::neutral()), *a);
        assert!(a.added(&a.negated()).is_neutral());
    }

    proptest! {
        #[test]
        fn eval_is_additive(a in poly_strategy(), b in poly_strategy(), t in -20i64..20) {
            let t = BigInt::from(t);
            prop_assert_eq!((&a + &b).eval(&t), a.eval(&t) + b.eval(&t));
        }

        #[test]
        fn int_poly_group_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
            check_axioms(&a, &b, &c);
            prop_assert!(a.coeffs().last().is_none_or(|c| !c.is_zero()));
        }

        #[test]
        fn bipoly_group_axioms(a in bipoly_strategy(), b in bipoly_strategy(), c in bipoly_strategy()) {
            check_axioms(&a, &b, &c);
            prop_assert!(a.terms().all(|(_, _, c)| !c.is_zero()));
        }

        #[test]
        fn bigint_group_axioms(a in any::<i64>(), b in any::<i64>(), c in any::<i64>()) {
            check_axioms(&BigInt::from(a), &BigInt::from(b), &BigInt::from(c));
        }

        #[test]
        fn rational_group_axioms(a in (-99i64..99, 1i64..9), b in (-99i64..99, 1i64..9), c in (-99i64..99, 1i64..9)) {
            let r = |(n, d): (i64, i64)| BigRational::new(BigInt::from(n), BigInt::from(d));
            check_axioms(&r(a), &r(b), &r(c));
        }
    }
}
