//! Rank-3 Higgs moduli `M(3, d)` assembled from the fixed loci of the scaling
//! action. Each fixed component `F` contributes `[F] L^{codim F^+}` with
//! `codim F^+ = 9(g-1) + 1 - dim F`.

use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;

use crate::bundles::{bundle_motive_fixed_det, BundleSpec};
use crate::error::{Error, Result};
use crate::motive::{jacobian, sym_curve, MotiveClass};
use crate::pairs::{chamber_of, pair_dimension, pair_motive_flip, ChamberSpec, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HiggsSpec {
    pub g: u32,
    pub d: i64,
    /// Representative of `d mod 3` in `{1, 2}`.
    pub x: u32,
}

impl HiggsSpec {
    pub fn new(g: u32, d: i64) -> Result<Self> {
        let bundle = BundleSpec::new(g, d)?;
        Ok(Self {
            g: bundle.g,
            d,
            x: d.rem_euclid(3) as u32,
        })
    }

    fn bundle_spec(&self) -> BundleSpec {
        BundleSpec {
            g: self.g,
            d: self.d,
        }
    }
}

/// `9(g-1) + 1`: half the dimension of `M(3, d)` and the dimension of `N(3, d)`.
pub fn half_dimension(g: u32) -> u32 {
    9 * (g - 1) + 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentKind {
    /// `Phi = 0`: the bundle moduli space itself.
    Type3,
    Type111 {
        m1: u32,
        m2: u32,
    },
    Type12 {
        k: u32,
    },
    Type21 {
        k: u32,
    },
}

impl ComponentKind {
    pub fn label(&self) -> &'static str {
        match self {
            Self::Type3 => "(3)",
            Self::Type111 { .. } => "(1,1,1)",
            Self::Type12 { .. } => "(1,2)",
            Self::Type21 { .. } => "(2,1)",
        }
    }

    pub fn params(&self) -> String {
        match self {
            Self::Type3 => String::new(),
            Self::Type111 { m1, m2 } => format!("m1={m1} m2={m2}"),
            Self::Type12 { k } | Self::Type21 { k } => format!("k={k}"),
        }
    }
}

/// One component of the fixed locus.
#[derive(Clone, Debug)]
pub struct FixedComponent {
    pub kind: ComponentKind,
    /// The pair moduli factor for types (1,2) and (2,1).
    pub pair: Option<ChamberSpec>,
    pub dimension: u32,
    /// Tate twist, the codimension of the attracting stratum.
    pub twist: u32,
    /// Class of the component.
    pub motive: MotiveClass,
    /// The class divided by one Jacobian factor.
    pub cofactor: MotiveClass,
}

impl FixedComponent {
    fn new(
        kind: ComponentKind,
        pair: Option<ChamberSpec>,
        dimension: u32,
        twist: u32,
        cofactor: MotiveClass,
    ) -> Self {
        let motive = &jacobian(cofactor.genus()) * &cofactor;
        Self {
            kind,
            pair,
            dimension,
            twist,
            motive,
            cofactor,
        }
    }
}

/// The `Phi = 0` component `N(3, d)`.
pub fn fixed_locus_3(spec: &HiggsSpec) -> FixedComponent {
    FixedComponent::new(
        ComponentKind::Type3,
        None,
        half_dimension(spec.g),
        0,
        bundle_motive_fixed_det(&spec.bundle_spec()),
    )
}

/// `(m1, m2)` with `max(2m1+m2, m1+2m2) < 6g-6` and `d = m2 - m1 mod 3`,
/// sorted.
pub fn type111_region(spec: &HiggsSpec) -> Vec<(u32, u32)> {
    let bound = 6 * spec.g - 6;
    let mut out = Vec::new();
    for m1 in 0..bound {
        for m2 in 0..bound {
            let fits = (2 * m1 + m2).max(m1 + 2 * m2) < bound;
            if fits && (i64::from(m2) - i64::from(m1) - spec.d).mod_floor(&3) == 0 {
                out.push((m1, m2));
            }
        }
    }
    out
}

/// Components `Pic x C^(m1) x C^(m2)`, twist `8g-8-m1-m2`.
pub fn fixed_locus_111(spec: &HiggsSpec) -> Vec<FixedComponent> {
    let g = spec.g;
    type111_region(spec)
        .into_par_iter()
        .map(|(m1, m2)| {
            FixedComponent::new(
                ComponentKind::Type111 { m1, m2 },
                None,
                g + m1 + m2,
                8 * g - 8 - m1 - m2,
                &sym_curve(m1, g) * &sym_curve(m2, g),
            )
        })
        .collect()
}

fn pair_component(
    spec: &HiggsSpec,
    kind: ComponentKind,
    k: u32,
    e: u32,
    i: u32,
    sigma: Rational,
    twist: u32,
) -> Result<FixedComponent> {
    let actual = chamber_of(sigma, e)?;
    if actual != i {
        return Err(Error::ChamberMismatch {
            kind: kind.label(),
            k,
            expected: i,
            actual,
        });
    }
    let pair = ChamberSpec::new(spec.g, e, i)?;
    Ok(FixedComponent::new(
        kind,
        Some(pair),
        spec.g + pair_dimension(&pair),
        twist,
        pair_motive_flip(&pair),
    ))
}

/// Type (1,2): for `k = 0..=g-2`, `Pic x P^{i_k}_{e}` with
/// `e = 4g-3k-7+x`, `i_k = 2g-2k-5+x`, twist `2g+3k+1-x`, and stability
/// parameter `(k+1)/2 - x/6`.
pub fn fixed_locus_12(spec: &HiggsSpec) -> Result<Vec<FixedComponent>> {
    let (g, x) = (spec.g, spec.x);
    (0..=g - 2)
        .map(|k| {
            let sigma = Rational::new(i64::from(3 * k + 3 - x), 6);
            pair_component(
                spec,
                ComponentKind::Type12 { k },
                k,
                4 * g + x - 3 * k - 7,
                2 * g + x - 2 * k - 5,
                sigma,
                2 * g + 3 * k + 1 - x,
            )
        })
        .collect()
}

/// Type (2,1): for `k = 0..=g-2`, `Pic x P^{i(k)}_{f}` with
/// `f = 4g-4-3k-x`, `i(k) = 2g-2k-2-x`, twist `2g+3k-2+x`, and stability
/// parameter `k/2 + x/6`.
pub fn fixed_locus_21(spec: &HiggsSpec) -> Result<Vec<FixedComponent>> {
    let (g, x) = (spec.g, spec.x);
    (0..=g - 2)
        .map(|k| {
            let sigma = Rational::new(i64::from(3 * k + x), 6);
            pair_component(
                spec,
                ComponentKind::Type21 { k },
                k,
                4 * g - 4 - 3 * k - x,
                2 * g - 2 - 2 * k - x,
                sigma,
                2 * g + 3 * k + x - 2,
            )
        })
        .collect()
}

/// All fixed components: type (3), then (1,1,1) by `(m1, m2)`, then (1,2)
/// and (2,1) by `k`.
pub fn fixed_components(spec: &HiggsSpec) -> Result<Vec<FixedComponent>> {
    let mut out = vec![fixed_locus_3(spec)];
    out.extend(fixed_locus_111(spec));
    out.extend(fixed_locus_12(spec)?);
    out.extend(fixed_locus_21(spec)?);
    Ok(out)
}

fn twisted_sum<'a>(g: u32, parts: impl Iterator<Item = (&'a MotiveClass, u32)>) -> MotiveClass {
    parts.fold(MotiveClass::zero(g), |acc, (m, t)| &acc + &m.tate_twist(t))
}

/// Class of `M(3, d)`.
pub fn higgs_motive(spec: &HiggsSpec) -> Result<MotiveClass> {
    let comps = fixed_components(spec)?;
    let total = twisted_sum(spec.g, comps.iter().map(|c| (&c.motive, c.twist)));
    total.check_effective()?;
    Ok(total)
}

/// The class `Q` with `[Jac] Q = [M(3, d)]`, assembled from the cofactors and
/// checked by multiplying back.
pub fn higgs_motive_mod_jac(spec: &HiggsSpec) -> Result<MotiveClass> {
    let comps = fixed_components(spec)?;
    let quotient = twisted_sum(spec.g, comps.iter().map(|c| (&c.cofactor, c.twist)));
    let full = twisted_sum(spec.g, comps.iter().map(|c| (&c.motive, c.twist)));
    if &jacobian(spec.g) * &quotient != full {
        return Err(Error::QuotientMismatch);
    }
    quotient.check_effective()?;
    Ok(quotient)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditEntry {
    pub kind: ComponentKind,
    pub dimension: u32,
    /// Half the top degree of the component's Poincaré polynomial.
    pub recomputed_dimension: Option<u32>,
    pub twist: u32,
    pub expected_twist: i64,
    pub pass: bool,
}

impl fmt::Display for AuditEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let recomputed = self
            .recomputed_dimension
            .map_or_else(|| "-".to_string(), |d| d.to_string());
        write!(
            f,
            "{:<8} {:<12} dim={} recomputed={} twist={} expected={} {}",
            self.kind.label(),
            self.kind.params(),
            self.dimension,
            recomputed,
            self.twist,
            self.expected_twist,
            if self.pass { "pass" } else { "FAIL" }
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub g: u32,
    pub d: i64,
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AuditEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Check `twist = 9(g-1) + 1 - dim F` for every fixed component, with the
/// dimension recomputed from the component's class.
pub fn audit_fixed_loci(spec: &HiggsSpec) -> Result<AuditReport> {
    let comps = fixed_components(spec)?;
    let half = i64::from(half_dimension(spec.g));
    let entries = comps
        .par_iter()
        .map(|c| {
            let top = c.motive.top_poincare_degree();
            let recomputed = top.filter(|t| t % 2 == 0).map(|t| (t / 2) as u32);
            let expected_twist = half - i64::from(c.dimension);
            let pass = recomputed == Some(c.dimension)
                && i64::from(c.twist) == expected_twist
                && c.motive.is_effective();
            AuditEntry {
                kind: c.kind,
                dimension: c.dimension,
                recomputed_dimension: recomputed,
                twist: c.twist,
                expected_twist,
                pass,
            }
        })
        .collect();
    Ok(AuditReport {
        g: spec.g,
        d: spec.d,
        entries,
    })
}
