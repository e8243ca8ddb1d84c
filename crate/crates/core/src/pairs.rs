//! Moduli of rank-2 pairs `(V, phi)` of degree `e`, one space per stability
//! chamber.
//!
//! Three routes compute the same class:
//! - [`pair_motive_flip`]: sum over the standard flips between chambers. No
//!   hypothesis, used as the reference everywhere else.
//! - [`pair_motive_sym`]: closed form in the `S_b` basis with the `Q`/`R`
//!   polynomials.
//! - [`pair_motive_geo`]: closed form in symmetric powers of the curve and
//!   the Jacobian.

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::motive::{jacobian, kunnemann_reduce, projective_space, sym_curve, MotiveClass};
use crate::polyring::IntPoly;

pub type Rational = Ratio<i64>;

/// A chamber `C_i` for pairs of degree `e` on a genus-`g` curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChamberSpec {
    pub g: u32,
    pub e: u32,
    pub i: u32,
}

/// Index of the last chamber, `floor((e-1)/2)`.
pub fn max_chamber(e: u32) -> u32 {
    (e.saturating_sub(1)) / 2
}

impl ChamberSpec {
    pub fn new(g: u32, e: u32, i: u32) -> Result<Self> {
        if g == 0 {
            return Err(Error::InvalidGenus(g, "genus must be positive"));
        }
        if e < 2 {
            return Err(Error::InvalidPairDegree(e));
        }
        let max = max_chamber(e);
        if i > max {
            return Err(Error::InvalidChamber { e, i, max });
        }
        Ok(Self { g, e, i })
    }

    /// Every chamber for every `2 <= e <= max_e`.
    pub fn all_up_to(g: u32, max_e: u32) -> Vec<Self> {
        (2..=max_e)
            .flat_map(|e| (0..=max_chamber(e)).map(move |i| Self { g, e, i }))
            .collect()
    }
}

/// `(m, [sigma_0, ..., sigma_m])` with `sigma_i = e/2 - i`.
pub fn chambers(e: u32) -> Result<(u32, Vec<Rational>)> {
    if e < 2 {
        return Err(Error::InvalidPairDegree(e));
    }
    let m = max_chamber(e);
    let walls = (0..=m)
        .map(|i| Rational::new(i64::from(e), 2) - Rational::from_integer(i64::from(i)))
        .collect();
    Ok((m, walls))
}

/// The chamber containing a generic stability parameter `sigma`.
pub fn chamber_of(sigma: Rational, e: u32) -> Result<u32> {
    if e < 2 {
        return Err(Error::InvalidPairDegree(e));
    }
    let half_e = Rational::new(i64::from(e), 2);
    if sigma <= Rational::zero() || sigma > half_e {
        return Err(Error::OutOfRange {
            sigma: sigma.to_string(),
            half_e: half_e.to_string(),
        });
    }
    // sigma_{i+1} < sigma < sigma_i  <=>  i < e/2 - sigma < i + 1
    let offset = half_e - sigma;
    let i = offset
        .floor()
        .to_integer()
        .to_u32()
        .expect("offset is in [0, e/2)");
    if offset.is_integer() {
        return Err(Error::OnWall {
            sigma: sigma.to_string(),
            index: i,
        });
    }
    Ok(i)
}

/// Dimension of the pair moduli space, `e + 2g - 2`.
pub fn pair_dimension(spec: &ChamberSpec) -> u32 {
    spec.e + 2 * spec.g - 2
}

/// The pair class divided by the Jacobian:
/// `sum_{j=0}^{i} [C^(j)] (L^{e+g-2j-1} - L^j) / (L - 1)`.
///
/// The fraction is expanded as a signed geometric sum, so chambers where
/// `e + g - 2j - 1 < j` contribute negative terms.
pub fn pair_cofactor_flip(spec: &ChamberSpec) -> MotiveClass {
    let ChamberSpec { g, e, i } = *spec;
    let mut acc = MotiveClass::zero(g);
    for j in 0..=i {
        let top = (e + g - 2 * j - 1) as usize;
        let tate = IntPoly::geometric_quotient(j as usize, top);
        acc = &acc + &sym_curve(j, g).mul_lefschetz_poly(&tate);
    }
    acc
}

/// Class of `P^i_e` from the flip recursion.
pub fn pair_motive_flip(spec: &ChamberSpec) -> MotiveClass {
    &jacobian(spec.g) * &pair_cofactor_flip(spec)
}

fn violation(msg: String) -> Error {
    Error::HypothesisViolation(msg)
}

/// `Q_{i,e,b}(T) = (T^b - T^{e+g-1-2i})(1 - T^{i-b+1})(1 - T^{i-b+2})
/// / ((1-T)^2 (1-T^2))`, defined for `b <= i < e/2`.
pub fn q_poly(g: u32, i: u32, e: u32, b: u32) -> Result<IntPoly> {
    if b > i {
        return Err(violation(format!("Q needs b <= i, got b = {b}, i = {i}")));
    }
    if 2 * i >= e {
        return Err(violation(format!("Q needs i < e/2, got i = {i}, e = {e}")));
    }
    let c = (e + g - 1 - 2 * i) as usize;
    let a = (i - b + 1) as usize;
    let num = (IntPoly::x_pow(b as usize) - IntPoly::x_pow(c))
        * IntPoly::one_minus_x_pow(a)
        * IntPoly::one_minus_x_pow(a + 1);
    let den = IntPoly::one_minus_x_pow(1).pow(2) * IntPoly::one_minus_x_pow(2);
    num.div_exact(&den)
}

/// Whether `e+g-1-2i < b <= i < floor(e/2) <= 2g-3`.
pub fn positive_coeff_hypothesis(g: u32, i: u32, e: u32, b: u32) -> bool {
    let (g, i, e, b) = (i64::from(g), i64::from(i), i64::from(e), i64::from(b));
    e + g - 1 - 2 * i < b && b <= i && i < e / 2 && e / 2 <= 2 * g - 3
}

/// `R_{i,e,b}(T) = T^{b-g} Q_{i,e,b}(T) + Q_{i,e,2g-b}(T)`; every coefficient
/// is checked to be non-negative.
pub fn r_poly(g: u32, i: u32, e: u32, b: u32) -> Result<IntPoly> {
    if !positive_coeff_hypothesis(g, i, e, b) {
        return Err(violation(format!(
            "R needs e+g-1-2i < b <= i < floor(e/2) <= 2g-3, got g = {g}, i = {i}, e = {e}, b = {b}"
        )));
    }
    if b <= g {
        // the hypothesis is supposed to force b >= g+1
        return Err(violation(format!(
            "R hypothesis holds but b = {b} <= g = {g}"
        )));
    }
    let r = q_poly(g, i, e, b)?.shift((b - g) as usize) + q_poly(g, i, e, 2 * g - b)?;
    if !r.is_nonneg() {
        return Err(Error::NotEffective(format!(
            "R_{{{i},{e},{b}}} at g = {g}: {r}"
        )));
    }
    Ok(r)
}

fn sym_hypothesis(spec: &ChamberSpec) -> Result<()> {
    let ChamberSpec { g, e, i } = *spec;
    let half = e / 2;
    if i >= half {
        return Err(violation(format!(
            "sym route needs i < floor(e/2), got i = {i}, floor(e/2) = {half}"
        )));
    }
    if i64::from(half) > 2 * i64::from(g) - 3 {
        return Err(violation(format!(
            "sym route needs floor(e/2) <= 2g-3, got floor(e/2) = {half}, 2g-3 = {}",
            2 * i64::from(g) - 3
        )));
    }
    Ok(())
}

/// Whether `pair_motive_sym` accepts `spec`.
pub fn sym_route_applies(spec: &ChamberSpec) -> bool {
    sym_hypothesis(spec).is_ok()
}

/// Whether `pair_motive_geo` accepts `spec`.
pub fn geo_route_applies(spec: &ChamberSpec) -> bool {
    2 * spec.i < spec.e && i64::from(spec.e) <= 4 * i64::from(spec.g) - 5
}

/// Class of `P^i_e` in the `S_b` basis. Requires `i < floor(e/2) <= 2g-3`.
pub fn pair_motive_sym(spec: &ChamberSpec) -> Result<MotiveClass> {
    sym_hypothesis(spec)?;
    let ChamberSpec { g, e, i } = *spec;
    let mut cofactor = MotiveClass::zero(g);
    let mut add = |b: u32, poly: IntPoly| {
        cofactor = &cofactor + &kunnemann_reduce(b, g).mul_lefschetz_poly(&poly);
    };

    if 3 * i < e + g {
        for b in 0..=i {
            add(b, q_poly(g, i, e, b)?);
        }
    } else {
        // 0 < 2g-i <= g-e+2i < g < g+e-2i <= i
        let (gi, ii, ei) = (i64::from(g), i64::from(i), i64::from(e));
        let lo = 2 * gi - ii;
        let hi = gi - ei + 2 * ii;
        if !(0 < lo && lo <= hi && hi < gi && gi < gi + ei - 2 * ii && gi + ei - 2 * ii <= ii) {
            return Err(violation(format!(
                "expected 0 < 2g-i <= g-e+2i < g < g+e-2i <= i for g = {g}, e = {e}, i = {i}"
            )));
        }
        let band = ei - 2 * ii;
        for b in 0..=i {
            let bi = i64::from(b);
            if bi < lo || (bi - gi).abs() < band {
                add(b, q_poly(g, i, e, b)?);
            } else if bi <= hi {
                add(b, r_poly(g, i, e, 2 * g - b)?);
            }
            // b in [g+e-2i, i] is absorbed by the R terms
        }
    }
    cofactor.check_effective()?;
    Ok(&jacobian(g) * &cofactor)
}

fn projective_or_empty(n: i64, g: u32) -> MotiveClass {
    if n < 0 {
        MotiveClass::zero(g)
    } else {
        projective_space(n as u32, g)
    }
}

/// Class of `P^i_e` from symmetric powers and the Jacobian.
/// Requires `2i < e <= 4g-5`.
pub fn pair_motive_geo(spec: &ChamberSpec) -> Result<MotiveClass> {
    let ChamberSpec { g, e, i } = *spec;
    let (gi, ii, ei) = (i64::from(g), i64::from(i), i64::from(e));
    if !(2 * ii < ei && ei <= 4 * gi - 5) {
        return Err(violation(format!(
            "geo route needs 2i < e <= 4g-5, got i = {i}, e = {e}, 4g-5 = {}",
            4 * gi - 5
        )));
    }
    let jac = jacobian(g);
    let term = |k: u32, n: i64| -> MotiveClass { &sym_curve(k, g) * &projective_or_empty(n, g) };

    let cofactor = if 3 * ii < ei + gi {
        (0..=i)
            .map(|k| term(k, ei + gi - 3 * i64::from(k) - 2).tate_twist(k))
            .fold(MotiveClass::zero(g), |acc, x| &acc + &x)
    } else {
        // here i >= g + 1 and i <= 2g - 3
        let p_low = ei - 2 * gi + 1;
        let mut acc = term(g - 1, p_low).tate_twist(g - 1);
        for k in 0..=(2 * g - 3 - i) {
            acc = &acc + &term(k, ei + gi - 3 * i64::from(k) - 2).tate_twist(k);
        }
        for k in (2 * g - 2 - i)..=(g - 2) {
            let twists = IntPoly::x_pow((3 * g - 3 - 2 * k) as usize) + IntPoly::x_pow(k as usize);
            acc = &acc + &term(k, p_low).mul_lefschetz_poly(&twists);
        }
        let q = q_poly(g, i, e, g)?;
        &acc + &jac.mul_lefschetz_poly(&q)
    };
    cofactor.check_effective()?;
    Ok(&jac * &cofactor)
}
