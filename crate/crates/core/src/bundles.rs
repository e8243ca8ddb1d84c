//! Rank-3 stable bundles of degree `d` coprime to 3.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::motive::{jacobian, sym_curve, MotiveClass};
use crate::polyring::IntPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BundleSpec {
    pub g: u32,
    pub d: i64,
}

impl BundleSpec {
    pub fn new(g: u32, d: i64) -> Result<Self> {
        if g < 2 {
            return Err(Error::InvalidGenus(g, "rank-3 formulas need g >= 2"));
        }
        if d.gcd(&3) != 1 {
            return Err(Error::InvalidDegree(d));
        }
        Ok(Self { g, d })
    }
}

/// Pairs `(k1, k2)` with `k1 + k2 < 2g - 2`, or `k1 + k2 = 2g - 2` and
/// `k1 < g - 1`, in lexicographic order.
pub fn bundle_index_set(g: u32) -> Vec<(u32, u32)> {
    let top = 2 * g - 2;
    let mut out = Vec::new();
    for k1 in 0..=top {
        for k2 in 0..=(top - k1) {
            if k1 + k2 < top || k1 < g - 1 {
                out.push((k1, k2));
            }
        }
    }
    out
}

/// Class of the fixed-determinant moduli space `N_L(3, d)`:
///
/// `C^(g-1) x C^(g-1) L^{3g-3} + sum C^(k1) x C^(k2) (L^{k1+2k2} + L^{8g-8-2k1-3k2})`.
///
/// The degree only enters through validation; the class is the same for
/// every `d` coprime to 3.
pub fn bundle_motive_fixed_det(spec: &BundleSpec) -> MotiveClass {
    let g = spec.g;
    let syms: Vec<MotiveClass> = (0..=2 * g - 2).map(|k| sym_curve(k, g)).collect();
    let mut acc = (&syms[(g - 1) as usize] * &syms[(g - 1) as usize]).tate_twist(3 * g - 3);
    for (k1, k2) in bundle_index_set(g) {
        let twists = IntPoly::x_pow((k1 + 2 * k2) as usize)
            + IntPoly::x_pow((8 * g - 8 - 2 * k1 - 3 * k2) as usize);
        let product = &syms[k1 as usize] * &syms[k2 as usize];
        acc = &acc + &product.mul_lefschetz_poly(&twists);
    }
    acc
}

/// Class of `N(3, d) = N_L(3, d) x Jac(C)`.
pub fn bundle_motive(spec: &BundleSpec) -> MotiveClass {
    &bundle_motive_fixed_det(spec) * &jacobian(spec.g)
}
