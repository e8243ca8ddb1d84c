//! Parameter sweeps over the identities the library relies on. Each check
//! runs in parallel; results are collected in parameter order so reports are
//! reproducible.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::bundles::{bundle_motive_fixed_det, BundleSpec};
use crate::higgs::{audit_fixed_loci, higgs_motive, higgs_motive_mod_jac, HiggsSpec};
use crate::motive::{jacobian, projective_space, sym_curve};
use crate::pairs::{
    geo_route_applies, pair_motive_flip, pair_motive_geo, pair_motive_sym,
    positive_coeff_hypothesis, q_poly, r_poly, sym_route_applies, ChamberSpec,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Identities,
    Positivity,
    Duality,
    DegreeIndependence,
    Audit,
    All,
}

impl Suite {
    pub fn run(self, max_genus: u32) -> Vec<CheckReport> {
        match self {
            Self::Identities => vec![
                route_agreement(max_genus),
                symmetric_power_reduction(max_genus),
            ],
            Self::Positivity => vec![r_positivity(max_genus), q_exactness(max_genus)],
            Self::Duality => vec![bundle_duality(max_genus), higgs_structure(max_genus)],
            Self::DegreeIndependence => vec![degree_independence(max_genus)],
            Self::Audit => vec![twist_audit(max_genus)],
            Self::All => [
                Self::Identities,
                Self::Positivity,
                Self::Duality,
                Self::DegreeIndependence,
                Self::Audit,
            ]
            .into_iter()
            .flat_map(|s| s.run(max_genus))
            .collect(),
        }
    }
}

/// Outcome of one sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    pub checked: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} checked, {} failed: {}",
            self.name,
            self.checked,
            self.failed,
            if self.passed() { "pass" } else { "FAIL" }
        )?;
        if let Some(msg) = &self.first_failure {
            write!(f, "\n  first counterexample: {msg}")?;
        }
        Ok(())
    }
}

type Outcome = std::result::Result<(), String>;

fn sweep<T, F>(name: &'static str, cases: Vec<T>, check: F) -> CheckReport
where
    T: Sync,
    F: Fn(&T) -> Outcome + Sync,
{
    let outcomes: Vec<Outcome> = cases.par_iter().map(&check).collect();
    let failures: Vec<String> = outcomes.into_iter().filter_map(|o| o.err()).collect();
    CheckReport {
        name,
        checked: cases.len(),
        failed: failures.len(),
        first_failure: failures.into_iter().next(),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn genera(max_genus: u32) -> std::ops::RangeInclusive<u32> {
    2..=max_genus
}

#[derive(Clone, Copy, Debug)]
enum Route {
    Sym,
    Geo,
}

/// Flip route against the sym and geo routes wherever their hypotheses hold,
/// for every chamber with `e <= 4g-5`.
pub fn route_agreement(max_genus: u32) -> CheckReport {
    let mut cases = Vec::new();
    for g in genera(max_genus) {
        for spec in ChamberSpec::all_up_to(g, 4 * g - 5) {
            if sym_route_applies(&spec) {
                cases.push((spec, Route::Sym));
            }
            if geo_route_applies(&spec) {
                cases.push((spec, Route::Geo));
            }
        }
    }
    sweep("route-agreement", cases, |(spec, route)| {
        let other = match route {
            Route::Sym => pair_motive_sym(spec),
            Route::Geo => pair_motive_geo(spec),
        }
        .map_err(|e| format!("{route:?} route at {spec:?}: {e}"))?;
        ensure(other == pair_motive_flip(spec), || {
            format!("{route:?} route differs from flip at {spec:?}")
        })
    })
}

/// `C^(j) = C^(2g-2-j) L^{j+1-g} + Jac P^{j-g}` for `g <= j <= 2g-2`.
pub fn symmetric_power_reduction(max_genus: u32) -> CheckReport {
    let cases: Vec<(u32, u32)> = genera(max_genus)
        .flat_map(|g| (g..=2 * g - 2).map(move |j| (g, j)))
        .collect();
    sweep("symmetric-power-reduction", cases, |&(g, j)| {
        let rhs = &sym_curve(2 * g - 2 - j, g).tate_twist(j + 1 - g)
            + &(&jacobian(g) * &projective_space(j - g, g));
        ensure(sym_curve(j, g) == rhs, || format!("g = {g}, j = {j}"))
    })
}

/// Every `(g, i, e, b)` with `e + g - 1 - 2i < b <= i < floor(e/2) <= 2g-3`.
pub fn positivity_tuples(max_genus: u32) -> Vec<(u32, u32, u32, u32)> {
    let mut out = Vec::new();
    for g in genera(max_genus) {
        for e in 2..=4 * g - 5 {
            for i in 0..e.div_ceil(2) {
                for b in 0..=i {
                    if positive_coeff_hypothesis(g, i, e, b) {
                        out.push((g, i, e, b));
                    }
                }
            }
        }
    }
    out
}

/// `R_{i,e,b}` has non-negative coefficients under its hypothesis.
pub fn r_positivity(max_genus: u32) -> CheckReport {
    sweep(
        "r-positivity",
        positivity_tuples(max_genus),
        |&(g, i, e, b)| {
            r_poly(g, i, e, b)
                .map(|_| ())
                .map_err(|err| err.to_string())
        },
    )
}

/// The division defining `Q_{i,e,b}` is exact for every chamber with
/// `e <= 4g-5` and `b <= i`.
pub fn q_exactness(max_genus: u32) -> CheckReport {
    let cases: Vec<(ChamberSpec, u32)> = genera(max_genus)
        .flat_map(|g| ChamberSpec::all_up_to(g, 4 * g - 5))
        .filter(|s| 2 * s.i < s.e)
        .flat_map(|s| (0..=s.i).map(move |b| (s, b)))
        .collect();
    sweep("q-exactness", cases, |&(s, b)| {
        q_poly(s.g, s.i, s.e, b)
            .map(|_| ())
            .map_err(|err| format!("{s:?}, b = {b}: {err}"))
    })
}

/// `N_L(3, d)` is Hodge symmetric and Poincaré dual about `8(g-1)`.
pub fn bundle_duality(max_genus: u32) -> CheckReport {
    let cases: Vec<u32> = genera(max_genus).collect();
    sweep("bundle-duality", cases, |&g| {
        let h = bundle_motive_fixed_det(&BundleSpec { g, d: 1 }).hodge_matrix();
        ensure(h.is_hodge_symmetric(), || {
            format!("N_L not Hodge symmetric at g = {g}")
        })?;
        ensure(h.is_poincare_dual(8 * (g as usize - 1)), || {
            format!("N_L not Poincaré dual at g = {g}")
        })
    })
}

/// Hodge symmetry, vanishing Euler characteristic, `b0 = 1` and `b1 = 2g`
/// for `M(3, 1)`, and the quotient identity for `M / Jac`.
pub fn higgs_structure(max_genus: u32) -> CheckReport {
    let cases: Vec<u32> = genera(max_genus).collect();
    sweep("higgs-structure", cases, |&g| {
        let spec = HiggsSpec { g, d: 1, x: 1 };
        let m = higgs_motive(&spec).map_err(|e| format!("g = {g}: {e}"))?;
        higgs_motive_mod_jac(&spec).map_err(|e| format!("g = {g}: {e}"))?;
        ensure(m.hodge_matrix().is_hodge_symmetric(), || {
            format!("M not Hodge symmetric at g = {g}")
        })?;
        let p = m.poincare();
        ensure(p.eval(&BigInt::from(-1)) == BigInt::from(0), || {
            format!("Euler characteristic of M nonzero at g = {g}")
        })?;
        ensure(p.coeff(0) == BigInt::from(1), || {
            format!("b0(M) = {} at g = {g}", p.coeff(0))
        })?;
        ensure(p.coeff(1) == BigInt::from(2 * g), || {
            format!("b1(M) = {} at g = {g}", p.coeff(1))
        })
    })
}

/// `M(3, 1)` and `M(3, 2)` have the same class.
pub fn degree_independence(max_genus: u32) -> CheckReport {
    let cases: Vec<u32> = genera(max_genus).collect();
    sweep("degree-independence", cases, |&g| {
        let a = higgs_motive(&HiggsSpec { g, d: 1, x: 1 }).map_err(|e| e.to_string())?;
        let b = higgs_motive(&HiggsSpec { g, d: 2, x: 2 }).map_err(|e| e.to_string())?;
        ensure(a == b, || {
            format!("classes for d = 1 and d = 2 differ at g = {g}")
        })
    })
}

/// The twist identity for every fixed component, `d` in `{1, 2}`.
pub fn twist_audit(max_genus: u32) -> CheckReport {
    let cases: Vec<(u32, i64)> = genera(max_genus).flat_map(|g| [(g, 1), (g, 2)]).collect();
    sweep("twist-audit", cases, |&(g, d)| {
        let spec = HiggsSpec::new(g, d).map_err(|e| e.to_string())?;
        let report = audit_fixed_loci(&spec).map_err(|e| format!("g = {g}, d = {d}: {e}"))?;
        let first = report
            .failures()
            .next()
            .map(|entry| format!("g = {g}, d = {d}: {entry}"));
        first.map_or(Ok(()), Err)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        for report in Suite::All.run(4) {
            assert!(report.passed(), "{report}");
            // the R hypothesis is first satisfiable at g = 6
            assert!(
                report.checked > 0 || report.name == "r-positivity",
                "{report}"
            );
        }
    }

    #[test]
    fn positivity_tuples_force_b_above_g() {
        assert!(positivity_tuples(5).is_empty());
        let tuples = positivity_tuples(8);
        assert!(tuples.contains(&(6, 8, 18, 8)));
        assert!(tuples.iter().all(|&(g, _, _, b)| b > g));
    }

    #[test]
    fn first_failure_is_reported_in_order() {
        let report = sweep("demo", vec![1, 2, 3, 4], |&n| {
            ensure(n % 2 == 1, || format!("n = {n}"))
        });
        assert_eq!(report.failed, 2);
        assert_eq!(report.first_failure.as_deref(), Some("n = 2"));
        assert!(report.to_string().contains("FAIL"));
    }
}
