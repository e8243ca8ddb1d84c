//! The Grothendieck ring generated by a curve `C` of genus `g`, in normal form.
//!
//! A class is a finite sum `sum_m m * P_m(L)` where `m` runs over formal
//! products of the generators `S_b = [Sym^b h^1(C)]` with `1 <= b <= g` and
//! `P_m` is an integer polynomial in the Lefschetz class `L`. Generators with
//! `b > g` never survive construction: `S_b = S_{2g-b} L^{b-g}` for
//! `g < b <= 2g` and `S_b = 0` for `b > 2g`. `S_0` is the unit.
//!
//! Products of generators stay formal. The Hodge realization is
//! multiplicative, so nothing downstream needs them decomposed.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hodge::{big_to_json, HodgeMatrix};
use crate::polyring::{BiPoly, IntPoly};

/// Sorted multiset of generator indices in `1..=g`; empty is the unit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SymMonomial(Vec<u32>);

impl SymMonomial {
    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn single(b: u32) -> Self {
        Self::from_indices([b])
    }

    /// Sorts and drops zero indices. Does not reduce indices above `g`.
    pub fn from_indices(indices: impl IntoIterator<Item = u32>) -> Self {
        let mut v: Vec<u32> = indices.into_iter().filter(|&b| b != 0).collect();
        v.sort_unstable();
        Self(v)
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    /// Product of two monomials: merge of sorted multisets.
    pub fn merge(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] <= other.0[j] {
                out.push(self.0[i]);
                i += 1;
            } else {
                out.push(other.0[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Self(out)
    }
}

impl fmt::Display for SymMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|b| format!("S{b}")).collect();
        f.write_str(&parts.join("*"))
    }
}

/// Normal-form class in the ring generated by the curve motive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MotiveClass {
    genus: u32,
    terms: BTreeMap<SymMonomial, IntPoly>,
}

fn check_genus(g: u32) {
    assert!(g >= 1, "genus must be at least 1, got {g}");
}

impl MotiveClass {
    pub fn zero(g: u32) -> Self {
        check_genus(g);
        Self {
            genus: g,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(g: u32) -> Self {
        Self::from_lefschetz_poly(g, IntPoly::one())
    }

    /// A pure Tate class `P(L)`.
    pub fn from_lefschetz_poly(g: u32, poly: IntPoly) -> Self {
        Self::monomial(g, SymMonomial::unit(), poly)
    }

    fn monomial(g: u32, mono: SymMonomial, poly: IntPoly) -> Self {
        let mut out = Self::zero(g);
        if !poly.is_zero() {
            out.terms.insert(mono, poly);
        }
        out
    }

    /// Build a class from terms whose indices may exceed `g`, applying the
    /// Künnemann relations to every index.
    pub fn from_raw_terms<I>(g: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, IntPoly)>,
    {
        let mut out = Self::zero(g);
        for (indices, poly) in terms {
            let mut shift = 0usize;
            let mut kept = Vec::with_capacity(indices.len());
            let mut vanishes = false;
            for b in indices {
                if b > 2 * g {
                    vanishes = true;
                    break;
                } else if b > g {
                    shift += (b - g) as usize;
                    kept.push(2 * g - b);
                } else {
                    kept.push(b);
                }
            }
            if !vanishes {
                out.accumulate(SymMonomial::from_indices(kept), &poly.shift(shift));
            }
        }
        out
    }

    fn accumulate(&mut self, mono: SymMonomial, poly: &IntPoly) {
        if poly.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(poly.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += poly;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SymMonomial, &IntPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &SymMonomial) -> IntPoly {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_genus(&self, other: &Self) -> Result<()> {
        if self.genus == other.genus {
            Ok(())
        } else {
            Err(Error::GenusMismatch {
                left: self.genus,
                right: other.genus,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_genus(other)?;
        let mut out = self.clone();
        for (m, p) in &other.terms {
            out.accumulate(m.clone(), p);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_genus(other)?;
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_genus(other)?;
        let mut acc: BTreeMap<SymMonomial, IntPoly> = BTreeMap::new();
        for (m1, p1) in &self.terms {
            for (m2, p2) in &other.terms {
                *acc.entry(m1.merge(m2)).or_default() += &(p1 * p2);
            }
        }
        acc.retain(|_, p| !p.is_zero());
        Ok(Self {
            genus: self.genus,
            terms: acc,
        })
    }

    /// Tensor with `Q(k)`, i.e. multiply by `L^k`.
    pub fn tate_twist(&self, k: u32) -> Self {
        Self {
            genus: self.genus,
            terms: self
                .terms
                .iter()
                .map(|(m, p)| (m.clone(), p.shift(k as usize)))
                .collect(),
        }
    }

    /// Multiply by a polynomial in `L`.
    pub fn mul_lefschetz_poly(&self, poly: &IntPoly) -> Self {
        let mut out = Self::zero(self.genus);
        for (m, p) in &self.terms {
            out.accumulate(m.clone(), &(p * poly));
        }
        out
    }

    /// Every coefficient of every `L`-polynomial is non-negative.
    pub fn is_effective(&self) -> bool {
        self.terms.values().all(IntPoly::is_nonneg)
    }

    /// `Ok(())` when effective, otherwise names the first offending term.
    pub fn check_effective(&self) -> Result<()> {
        match self.terms.iter().find(|(_, p)| !p.is_nonneg()) {
            None => Ok(()),
            Some((m, p)) => Err(Error::NotEffective(format!(
                "{m} * ({})",
                p.display_in("L")
            ))),
        }
    }

    /// Hodge polynomial: `L -> uv`,
    /// `S_b -> sum_p C(g,p) C(g,b-p) u^p v^(b-p)`, extended multiplicatively.
    pub fn hodge_realize(&self) -> BiPoly {
        let g = self.genus;
        let gens: Vec<BiPoly> = (0..=g).map(|b| sym_h1_hodge(b, g)).collect();
        let mut cache: BTreeMap<&SymMonomial, BiPoly> = BTreeMap::new();
        let mut out = BiPoly::zero();
        for (m, p) in &self.terms {
            let base = cache.entry(m).or_insert_with(|| {
                m.indices()
                    .iter()
                    .fold(BiPoly::one(), |acc, &b| &acc * &gens[b as usize])
            });
            for (k, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out += &base.shift_uv(k as u32).scale(c);
                }
            }
        }
        out
    }

    pub fn hodge_matrix(&self) -> HodgeMatrix {
        HodgeMatrix::from_bipoly(&self.hodge_realize())
    }

    /// Poincaré polynomial in `t`: `L -> t^2`, `S_b -> C(2g, b) t^b`.
    ///
    /// Computed from the generator images directly; agrees with the diagonal
    /// specialization of [`hodge_realize`](Self::hodge_realize).
    pub fn poincare(&self) -> IntPoly {
        let g = self.genus;
        let gens: Vec<IntPoly> = (0..=g)
            .map(|b| IntPoly::monomial(binomial(2 * g, b), b as usize))
            .collect();
        let mut out = IntPoly::zero();
        for (m, p) in &self.terms {
            let base = m
                .indices()
                .iter()
                .fold(IntPoly::one(), |acc, &b| &acc * &gens[b as usize]);
            let mut lp = vec![BigInt::zero(); 2 * p.coeffs().len()];
            for (k, c) in p.coeffs().iter().enumerate() {
                lp[2 * k] = c.clone();
            }
            out += &(&base * &IntPoly::from_coeffs(lp));
        }
        out
    }

    /// Degree of the Poincaré polynomial (twice the dimension for the class
    /// of a smooth projective variety).
    pub fn top_poincare_degree(&self) -> Option<usize> {
        self.poincare().degree()
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Term {
            mono: Vec<u32>,
            coeffs: Vec<serde_json::Number>,
        }
        #[derive(Serialize)]
        struct ClassJson {
            genus: u32,
            terms: Vec<Term>,
        }
        let doc = ClassJson {
            genus: self.genus,
            terms: self
                .terms
                .iter()
                .map(|(m, p)| Term {
                    mono: m.indices().to_vec(),
                    coeffs: p.coeffs().iter().map(big_to_json).collect(),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("class serialization cannot fail")
    }

    /// Parse the canonical JSON form. Indices above `g` are reduced.
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Term {
            mono: Vec<u32>,
            coeffs: Vec<serde_json::Number>,
        }
        #[derive(Deserialize)]
        struct ClassJson {
            genus: u32,
            terms: Vec<Term>,
        }
        let doc: ClassJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        if doc.genus == 0 {
            return Err(Error::Json("genus must be positive".into()));
        }
        let terms = doc
            .terms
            .into_iter()
            .map(|t| {
                let coeffs = t
                    .coeffs
                    .iter()
                    .map(|n| {
                        n.to_string()
                            .parse::<BigInt>()
                            .map_err(|e| Error::Json(format!("coefficient {n}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok((t.mono, IntPoly::from_coeffs(coeffs)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_raw_terms(doc.genus, terms))
    }
}

impl fmt::Display for MotiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, p)| {
                let poly = p.display_in("L");
                if m.is_unit() {
                    format!("({poly})")
                } else {
                    format!("{m}*({poly})")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for MotiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MotiveClass[g={}]({self})", self.genus)
    }
}

// Operator forms panic on genus mismatch; the `try_*` methods report it.
impl Add for &MotiveClass {
    type Output = MotiveClass;
    fn add(self, rhs: &MotiveClass) -> MotiveClass {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &MotiveClass {
    type Output = MotiveClass;
    fn sub(self, rhs: &MotiveClass) -> MotiveClass {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &MotiveClass {
    type Output = MotiveClass;
    fn mul(self, rhs: &MotiveClass) -> MotiveClass {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &MotiveClass {
    type Output = MotiveClass;
    fn neg(self) -> MotiveClass {
        MotiveClass {
            genus: self.genus,
            terms: self.terms.iter().map(|(m, p)| (m.clone(), -p)).collect(),
        }
    }
}

impl Add for MotiveClass {
    type Output = MotiveClass;
    fn add(self, rhs: MotiveClass) -> MotiveClass {
        &self + &rhs
    }
}

impl Mul for MotiveClass {
    type Output = MotiveClass;
    fn mul(self, rhs: MotiveClass) -> MotiveClass {
        &self * &rhs
    }
}

impl std::iter::Sum for MotiveClass {
    /// Panics on an empty iterator (no genus to attach to).
    fn sum<I: Iterator<Item = MotiveClass>>(mut iter: I) -> MotiveClass {
        let first = iter.next().expect("sum of an empty class list");
        iter.fold(first, |acc, x| &acc + &x)
    }
}

pub(crate) fn binomial(n: u32, k: u32) -> BigInt {
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

/// Hodge polynomial of `Sym^b h^1(C)` straight from the binomial formula,
/// valid for every `b >= 0` (including `b > g`, where no reduction is done).
pub fn sym_h1_hodge(b: u32, g: u32) -> BiPoly {
    let mut out = BiPoly::zero();
    for p in 0..=b.min(g) {
        let c = binomial(g, p) * binomial(g, b - p);
        if c.is_positive() {
            out.add_term(p, b - p, &c);
        }
    }
    out
}

/// Normal form of `S_b`.
pub fn kunnemann_reduce(b: u32, g: u32) -> MotiveClass {
    MotiveClass::from_raw_terms(g, [(vec![b], IntPoly::one())])
}

/// Class of the symmetric power `C^(j)`: `sum_{a+b+c=j} S_b L^c`.
pub fn sym_curve(j: u32, g: u32) -> MotiveClass {
    MotiveClass::from_raw_terms(
        g,
        (0..=j).map(|b| (vec![b], IntPoly::geometric(0, (j - b) as usize))),
    )
}

/// Class of the Jacobian: `sum_{b=0}^{2g} S_b`.
pub fn jacobian(g: u32) -> MotiveClass {
    MotiveClass::from_raw_terms(g, (0..=2 * g).map(|b| (vec![b], IntPoly::one())))
}

/// Class of `P^n`: `1 + L + ... + L^n`.
pub fn projective_space(n: u32, g: u32) -> MotiveClass {
    MotiveClass::from_lefschetz_poly(g, IntPoly::geometric(0, n as usize))
}

/// `L^k` as a class.
pub fn lefschetz_pow(k: u32, g: u32) -> MotiveClass {
    MotiveClass::one(g).tate_twist(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(c: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(c.to_vec())
    }

    fn s(b: u32, g: u32) -> MotiveClass {
        MotiveClass::monomial(g, SymMonomial::single(b), IntPoly::one())
    }

    fn tate(g: u32, c: &[i64]) -> MotiveClass {
        MotiveClass::from_lefschetz_poly(g, lp(c))
    }

    #[test]
    fn kunnemann_cases() {
        for g in 1..6 {
            assert_eq!(kunnemann_reduce(g, g), s(g, g));
            assert_eq!(kunnemann_reduce(2 * g, g), lefschetz_pow(g, g));
            assert!(kunnemann_reduce(2 * g + 1, g).is_zero());
            assert_eq!(kunnemann_reduce(0, g), MotiveClass::one(g));
        }
        // S_3 at g = 2 is S_1 L
        assert_eq!(kunnemann_reduce(3, 2), s(1, 2).tate_twist(1));
    }

    #[test]
    fn small_symmetric_powers() {
        assert_eq!(sym_curve(0, 3), MotiveClass::one(3));
        assert_eq!(sym_curve(1, 3), &tate(3, &[1, 1]) + &s(1, 3));
    }

    /// Enumerate compositions a+b+c=j directly, reducing by hand-coded rules.
    fn sym_curve_by_enumeration(j: u32, g: u32) -> MotiveClass {
        let mut acc = MotiveClass::zero(g);
        for a in 0..=j {
            for b in 0..=(j - a) {
                let c = j - a - b;
                let gen = if b == 0 {
                    MotiveClass::one(g)
                } else if b <= g {
                    s(b, g)
                } else if b <= 2 * g {
                    let base = if b == 2 * g {
                        MotiveClass::one(g)
                    } else {
                        s(2 * g - b, g)
                    };
                    base.tate_twist(b - g)
                } else {
                    MotiveClass::zero(g)
                };
                acc = &acc + &gen.tate_twist(c);
            }
        }
        acc
    }

    #[test]
    fn sym_curve_matches_enumeration() {
        for g in 1..5 {
            for j in 0..(3 * g + 2) {
                assert_eq!(
                    sym_curve(j, g),
                    sym_curve_by_enumeration(j, g),
                    "g={g} j={j}"
                );
            }
        }
    }

    #[test]
    fn sym_cube_genus_two() {
        let expected = &(&tate(2, &[1, 1, 1, 1]) + &s(1, 2).mul_lefschetz_poly(&lp(&[1, 2, 1])))
            + &s(2, 2).mul_lefschetz_poly(&lp(&[1, 1]));
        assert_eq!(sym_curve(3, 2), expected);
        // C^(3) is a P^1-bundle over the Jacobian in genus 2
        assert_eq!(sym_curve(3, 2), &jacobian(2) * &projective_space(1, 2));
    }

    #[test]
    fn jacobian_small_genus() {
        assert_eq!(jacobian(1), &tate(1, &[1, 1]) + &s(1, 1));
        let j2 = &(&tate(2, &[1, 0, 1]) + &s(1, 2).mul_lefschetz_poly(&lp(&[1, 1]))) + &s(2, 2);
        assert_eq!(jacobian(2), j2);
        assert_eq!(jacobian(2).poincare().eval_one(), BigInt::from(16));
    }

    #[test]
    fn projective_spaces() {
        assert_eq!(projective_space(0, 2), MotiveClass::one(2));
        assert_eq!(projective_space(2, 2), tate(2, &[1, 1, 1]));
        // e = 3, g = 2: P^{e+g-2}
        assert_eq!(projective_space(3, 2), tate(2, &[1, 1, 1, 1]));
    }

    #[test]
    fn ring_operation_examples() {
        assert_eq!(MotiveClass::one(3).tate_twist(4), lefschetz_pow(4, 3));
        let m = &s(1, 2) * &tate(2, &[1, 1]);
        assert_eq!(m.coeff(&SymMonomial::single(1)), lp(&[1, 1]));
        assert_eq!(m.num_terms(), 1);
    }

    #[test]
    fn jacobian_square_monomials() {
        let sq = &jacobian(2) * &jacobian(2);
        let monos: Vec<Vec<u32>> = sq.terms().map(|(m, _)| m.indices().to_vec()).collect();
        assert_eq!(
            monos,
            vec![vec![], vec![1], vec![1, 1], vec![1, 2], vec![2], vec![2, 2]]
        );
        // (1 + L^2) * S1*(1+L) * 2 = S1 * 2(1 + L + L^2 + L^3)
        assert_eq!(sq.coeff(&SymMonomial::single(1)), lp(&[2, 2, 2, 2]));
        assert_eq!(sq.coeff(&SymMonomial::from_indices([1, 1])), lp(&[1, 2, 1]));
        assert_eq!(sq.poincare().eval_one(), BigInt::from(256));
    }

    #[test]
    fn genus_mismatch_is_an_error() {
        let err = MotiveClass::one(2)
            .try_mul(&MotiveClass::one(3))
            .unwrap_err();
        assert_eq!(err, Error::GenusMismatch { left: 2, right: 3 });
        assert!(MotiveClass::one(2).try_add(&MotiveClass::one(3)).is_err());
    }

    #[test]
    fn hodge_of_generators() {
        let h1 = s(1, 2).hodge_realize();
        assert_eq!(h1, BiPoly::term(1, 0, 2) + BiPoly::term(0, 1, 2));
        let h2 = s(2, 2).hodge_realize();
        let expected = &(&BiPoly::term(2, 0, 1) + &BiPoly::term(1, 1, 4)) + &BiPoly::term(0, 2, 1);
        assert_eq!(h2, expected);
        assert_eq!(lefschetz_pow(3, 2).hodge_realize(), BiPoly::uv_pow(3));
    }

    #[test]
    fn poincare_examples() {
        for g in 1..6 {
            let expected = IntPoly::from_coeffs(vec![1, 1]).pow(2 * g);
            assert_eq!(jacobian(g).poincare(), expected);
        }
        for n in 0..6 {
            let expected = IntPoly::from_coeffs(
                (0..=2 * n)
                    .map(|k| i64::from(k % 2 == 0))
                    .collect::<Vec<_>>(),
            );
            assert_eq!(projective_space(n, 3).poincare(), expected);
        }
    }

    #[test]
    fn realization_commutes_with_reduction() {
        for g in 1..=8 {
            for b in 0..=2 * g + 2 {
                assert_eq!(
                    kunnemann_reduce(b, g).hodge_realize(),
                    sym_h1_hodge(b, g),
                    "g={g} b={b}"
                );
            }
        }
    }

    #[test]
    fn symmetric_power_reduction_identity() {
        for g in 2..=8 {
            for j in g..=2 * g - 2 {
                let lhs = sym_curve(j, g);
                let rhs = &sym_curve(2 * g - 2 - j, g).tate_twist(j + 1 - g)
                    + &(&jacobian(g) * &projective_space(j - g, g));
                assert_eq!(lhs, rhs, "g={g} j={j}");
            }
        }
    }

    #[test]
    fn effectivity_check_names_offender() {
        let virt = &s(1, 2) - &MotiveClass::one(2).tate_twist(1);
        assert!(!virt.is_effective());
        assert!(virt.check_effective().is_err());
        assert!(jacobian(3).check_effective().is_ok());
    }

    #[test]
    fn json_shape() {
        let j = jacobian(1);
        assert_eq!(
            j.to_json(),
            r#"{"genus":1,"terms":[{"mono":[],"coeffs":[1,1]},{"mono":[1],"coeffs":[1]}]}"#
        );
        assert!(MotiveClass::from_json("{\"genus\":0,\"terms\":[]}").is_err());
        assert!(MotiveClass::from_json("not json").is_err());
    }

    #[test]
    fn display_is_stable() {
        assert_eq!(jacobian(1).to_string(), "(1 + L) + S1*(1)");
        assert_eq!(MotiveClass::zero(2).to_string(), "0");
    }

    fn arb_raw_class(g: u32) -> impl Strategy<Value = MotiveClass> {
        let term = (
            prop::collection::vec(0..=3 * g, 0..4),
            prop::collection::vec(-5i64..6, 0..5),
        );
        prop::collection::vec(term, 0..6).prop_map(move |ts| {
            MotiveClass::from_raw_terms(
                g,
                ts.into_iter().map(|(m, c)| (m, IntPoly::from_coeffs(c))),
            )
        })
    }

    fn arb_genus_and_classes() -> impl Strategy<Value = (MotiveClass, MotiveClass)> {
        (1u32..5).prop_flat_map(|g| (arb_raw_class(g), arb_raw_class(g)))
    }

    proptest! {
        #[test]
        fn normal_form_is_idempotent(c in (1u32..5).prop_flat_map(arb_raw_class)) {
            let g = c.genus();
            prop_assert!(c.terms().all(|(m, p)| m.indices().iter().all(|&b| (1..=g).contains(&b)) && !p.is_zero()));
            let again = MotiveClass::from_raw_terms(
                g,
                c.terms().map(|(m, p)| (m.indices().to_vec(), p.clone())),
            );
            prop_assert_eq!(again, c);
        }

        #[test]
        fn hodge_realization_is_multiplicative((a, b) in arb_genus_and_classes()) {
            prop_assert_eq!((&a * &b).hodge_realize(), &a.hodge_realize() * &b.hodge_realize());
            prop_assert_eq!((&a + &b).hodge_realize(), &a.hodge_realize() + &b.hodge_realize());
        }

        #[test]
        fn poincare_is_diagonal_of_hodge(c in (1u32..5).prop_flat_map(arb_raw_class)) {
            prop_assert_eq!(c.poincare(), c.hodge_realize().specialize_diagonal());
        }

        #[test]
        fn class_ring_axioms((a, b) in arb_genus_and_classes()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            let c = jacobian(a.genus());
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn json_round_trip(c in (1u32..5).prop_flat_map(arb_raw_class)) {
            prop_assert_eq!(MotiveClass::from_json(&c.to_json()).unwrap(), c);
        }
    }
}
