//! Exact integer polynomials in one variable (dense) and two variables
//! (sparse).
//!
//! `IntPoly` carries the Lefschetz variable `L` (or the auxiliary `T`) and
//! Poincaré polynomials in `t`. `BiPoly` carries Hodge polynomials in `u, v`.
//! Both keep a canonical form: no trailing zero coefficients in `IntPoly`, no
//! stored zero entries in `BiPoly`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// `coeffs[k]` is the coefficient of the `k`-th power.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * X^k`
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// `X^k`
    pub fn x_pow(k: usize) -> Self {
        Self::monomial(1, k)
    }

    pub fn from_coeffs<C: Into<BigInt>>(coeffs: Vec<C>) -> Self {
        let mut p = Self {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    /// `X^lo + X^(lo+1) + ... + X^hi`; zero when `hi < lo`.
    pub fn geometric(lo: usize, hi: usize) -> Self {
        if hi < lo {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); hi + 1];
        for c in &mut coeffs[lo..] {
            *c = BigInt::one();
        }
        Self { coeffs }
    }

    /// `(X^a - X^b) / (1 - X)` expanded, for any `a, b >= 0`.
    ///
    /// Equals `X^a + ... + X^(b-1)` when `a <= b` and the negated sum
    /// `-(X^b + ... + X^(a-1))` otherwise.
    pub fn geometric_quotient(a: usize, b: usize) -> Self {
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => Self::zero(),
            std::cmp::Ordering::Less => Self::geometric(a, b - 1),
            std::cmp::Ordering::Greater => -Self::geometric(b, a - 1),
        }
    }

    /// `1 - X^k`
    pub fn one_minus_x_pow(k: usize) -> Self {
        &Self::one() - &Self::x_pow(k)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

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

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_nonneg(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiply by `X^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sum of all coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Long division over the integers. Returns `(quotient, remainder)` with
    /// `self = quotient * den + remainder` and `deg(remainder) < deg(den)`, or
    /// `NonExactDivision` as soon as a leading coefficient fails to divide.
    pub fn div_rem(&self, den: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let dd = den.degree().ok_or(Error::DivisionByZero)?;
        let lead = &den.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NonExactDivision {
                    remainder: format!("leading coefficient {top} not divisible by {lead}"),
                });
            }
            for (j, dc) in den.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact quotient `self / den`; fails unless the remainder is zero.
    pub fn div_exact(&self, den: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.div_rem(den)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonExactDivision {
                remainder: r.to_string(),
            })
        }
    }

    /// Render with a chosen variable name, ascending powers.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                out.push_str(&mag.to_string());
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&k.to_string());
                }
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("T"))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, BigInt::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
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
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned_binop!(IntPoly, Add, add);
forward_owned_binop!(IntPoly, Sub, sub);
forward_owned_binop!(IntPoly, Mul, mul);

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, s) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c += s;
        }
        self.normalize();
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, s) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        self.normalize();
    }
}

/// Sparse bivariate polynomial in `u, v`; key `(p, q)` is the exponent pair.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(0, 0, 1)
    }

    /// `c * u^p * v^q`
    pub fn term(p: u32, q: u32, c: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(p, q, &c.into());
        out
    }

    /// `(uv)^k`
    pub fn uv_pow(k: u32) -> Self {
        Self::term(k, k, 1)
    }

    pub fn add_term(&mut self, p: u32, q: u32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((p, q)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(p, q));
        }
    }

    pub fn coeff(&self, p: u32, q: u32) -> BigInt {
        self.terms.get(&(p, q)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        for (&(p, q), x) in &self.terms {
            out.add_term(p, q, &(x * c));
        }
        out
    }

    /// Multiply by `(uv)^k`.
    pub fn shift_uv(&self, k: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(p, q), c)| ((p + k, q + k), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Largest `p` and largest `q` occurring.
    pub fn max_exponents(&self) -> (u32, u32) {
        self.terms
            .keys()
            .fold((0, 0), |(a, b), &(p, q)| (a.max(p), b.max(q)))
    }

    /// The substitution `u = v = t`.
    pub fn specialize_diagonal(&self) -> IntPoly {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (&(p, q), c) in &self.terms {
            let k = (p + q) as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::zero());
            }
            coeffs[k] += c;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("BiPoly(")?;
        let mut first = true;
        for (&(p, q), c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}*u^{p}v^{q}")?;
        }
        if first {
            f.write_str("0")?;
        }
        f.write_str(")")
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(p, q), c) in &rhs.terms {
            out.add_term(p, q, &-c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(p1, q1), a) in &self.terms {
            for (&(p2, q2), b) in &rhs.terms {
                out.add_term(p1 + p2, q1 + q2, &(a * b));
            }
        }
        out
    }
}

impl AddAssign<&BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &BiPoly) {
        for (&(p, q), c) in &rhs.terms {
            self.add_term(p, q, c);
        }
    }
}

forward_owned_binop!(BiPoly, Add, add);
forward_owned_binop!(BiPoly, Sub, sub);
forward_owned_binop!(BiPoly, Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(c.to_vec())
    }

    /// Schoolbook convolution over plain integers, independent of `IntPoly`.
    fn convolve(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for i in 0..a.len() {
            for j in 0..b.len() {
                out[i + j] += a[i] * b[j];
            }
        }
        out
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(p(&[1, 1]) * p(&[1, -1]), p(&[1, 0, -1]));
    }

    #[test]
    fn times_zero_is_zero() {
        assert!((p(&[3, 4, 5]) * IntPoly::zero()).is_zero());
    }

    #[test]
    fn convolution_example() {
        let expected = convolve(&[1, 1, 1], &[1, 1, 1, 1, 1]);
        assert_eq!(expected, vec![1, 2, 3, 3, 3, 2, 1]);
        assert_eq!(p(&[1, 1, 1]) * p(&[1, 1, 1, 1, 1]), p(&expected));
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        let q = p(&[1, 2, 0, 0]);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(p(&[1, 1]) - p(&[1, 1]), IntPoly::zero());
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn geometric_sum_division() {
        let q = IntPoly::one_minus_x_pow(3)
            .div_exact(&IntPoly::one_minus_x_pow(1))
            .unwrap();
        assert_eq!(q, p(&[1, 1, 1]));
    }

    #[test]
    fn two_factor_division() {
        // (1-T^2)(1-T^3) = 1 - T^2 - T^3 + T^5; (1-T)^2 = 1 - 2T + T^2.
        // Long division by hand: quotient 1 + 2T + 2T^2 + T^3, remainder 0.
        let num = IntPoly::one_minus_x_pow(2) * IntPoly::one_minus_x_pow(3);
        assert_eq!(num, p(&[1, 0, -1, -1, 0, 1]));
        let den = IntPoly::one_minus_x_pow(1).pow(2);
        assert_eq!(num.div_exact(&den).unwrap(), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn non_divisible_pair_is_rejected() {
        let err = p(&[1, 1]).div_exact(&p(&[1, -1])).unwrap_err();
        assert!(matches!(err, Error::NonExactDivision { .. }));
    }

    #[test]
    fn non_unit_leading_coefficient_is_rejected() {
        let err = p(&[0, 1]).div_exact(&p(&[0, 2])).unwrap_err();
        assert!(matches!(err, Error::NonExactDivision { .. }));
        assert_eq!(p(&[0, 4]).div_exact(&p(&[0, 2])).unwrap(), p(&[2]));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            p(&[1]).div_exact(&IntPoly::zero()).unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn nonneg_scan() {
        assert!(p(&[1, 2, 2, 1]).is_nonneg());
        assert!(!p(&[1, -1]).is_nonneg());
        assert!(IntPoly::zero().is_nonneg());
    }

    #[test]
    fn geometric_quotient_both_orientations() {
        assert_eq!(IntPoly::geometric_quotient(1, 4), p(&[0, 1, 1, 1]));
        assert_eq!(IntPoly::geometric_quotient(3, 1), p(&[0, -1, -1]));
        assert!(IntPoly::geometric_quotient(2, 2).is_zero());
        for (a, b) in [(0usize, 5usize), (4, 2), (3, 3)] {
            let lhs = IntPoly::geometric_quotient(a, b) * IntPoly::one_minus_x_pow(1);
            assert_eq!(lhs, IntPoly::x_pow(a) - IntPoly::x_pow(b));
        }
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p(&[1, -2, 0, 1]).display_in("t"), "1 - 2t + t^3");
        assert_eq!(p(&[0, 0, 3]).to_string(), "3T^2");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn bipoly_basics() {
        let a = BiPoly::term(1, 0, 2) + BiPoly::term(0, 1, 2);
        let sq = &a * &a;
        assert_eq!(sq.coeff(2, 0), BigInt::from(4));
        assert_eq!(sq.coeff(1, 1), BigInt::from(8));
        assert!((&a - &a).is_zero());
        assert_eq!(a.shift_uv(2).coeff(3, 2), BigInt::from(2));
        assert_eq!(sq.specialize_diagonal(), p(&[0, 0, 16]));
        assert_eq!(a.pow(0), BiPoly::one());
    }

    fn arb_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-50i64..50, 0..31).prop_map(IntPoly::from_coeffs)
    }

    fn arb_bipoly() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec((0u32..6, 0u32..6, -20i64..20), 0..10).prop_map(|ts| {
            let mut out = BiPoly::zero();
            for (p, q, c) in ts {
                out.add_term(p, q, &BigInt::from(c));
            }
            out
        })
    }

    proptest! {
        #[test]
        fn exact_div_recovers_factor(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            let q = prod.div_exact(&b);
            // Leading coefficients over Z can block division only when a
            // quotient coefficient is non-integral, which cannot happen here.
            prop_assert_eq!(q.unwrap(), a);
        }

        #[test]
        fn div_rem_reconstructs(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            if let Ok((q, r)) = a.div_rem(&b) {
                prop_assert_eq!(&(&q * &b) + &r, a.clone());
                prop_assert!(r.degree() < b.degree() || r.is_zero());
            }
            if let Ok(q) = a.div_exact(&b) {
                prop_assert_eq!(&q * &b, a);
            }
        }

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn eval_is_a_homomorphism(a in arb_poly(), b in arb_poly(), x in -5i64..5) {
            let x = BigInt::from(x);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        }

        #[test]
        fn bipoly_ring_axioms(a in arb_bipoly(), b in arb_bipoly(), c in arb_bipoly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
        }
    }
}
