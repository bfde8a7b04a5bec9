//! Linear Harbourne constants of line configurations, Miyaoka's inequality
//! for lines on smooth surfaces of degree n ≥ 4, and the lower bound it
//! implies for H_L.
//!
//! For a configuration of d lines with t_k points of multiplicity k and
//! s = Σ t_k singular points, the strict transform after blowing up the
//! singular points has
//!
//! ```text
//! L̃² = (2 − n)·d + I_d − Σ k²·t_k = (2 − n)·d − Σ k·t_k,
//! ```
//!
//! using l² = 2 − n for a line and I_d = Σ (k² − k)·t_k. Then H_L = L̃² / s,
//! and Miyaoka's inequality turns into H_L ≥ −4 + (2d + t_2 − 2n(n − 1)²)/s.

mod search;

use serde::Serialize;

use crate::catalog::{cubic_profile, IncidenceProfile};
use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::incidence::{incidence_count, squared_point_count, weighted_point_count};

pub use search::{
    bauer_search, bauer_search_with_points, extremal_profile_search, extremal_profile_search_with_budget,
    BauerSolution, ExtremalCandidate, DEFAULT_ENUMERATION_BUDGET,
};

fn require_theorem_degree(what: &str, n: u32) -> Result<()> {
    if n < 4 {
        Err(Error::Inapplicable(format!("{what} requires n >= 4, got n = {n}")))
    } else {
        Ok(())
    }
}

/// l² = 2 − n for a line on a smooth surface of degree n.
pub fn line_self_intersection(n: u32) -> Result<i64> {
    if n < 3 {
        return Err(Error::DegreeTooSmall { what: "the self-intersection of a line", min: 3, n });
    }
    Ok(2 - n as i64)
}

/// L̃², computed through both the incidence form and the cancelled form;
/// panics if they disagree.
pub fn strict_transform_sq(p: &IncidenceProfile) -> Rational {
    let n = p.surface_degree() as i128;
    let d = p.lines() as i128;
    let with_incidences =
        (2 - n) * d + incidence_count(p) as i128 - squared_point_count(p) as i128;
    let cancelled = (2 - n) * d - weighted_point_count(p) as i128;
    assert_eq!(with_incidences, cancelled, "I_d - sum k^2 t_k must equal -sum k t_k for {p}");
    Rational::from_integer(cancelled)
}

/// H_L = L̃² / s. Undefined (an error) without singular points.
pub fn harbourne_linear(p: &IncidenceProfile) -> Result<Rational> {
    let s = p.singular_points();
    if s == 0 {
        return Err(Error::NoSingularPoints);
    }
    Ok(strict_transform_sq(p) / Rational::from(s))
}

/// Both sides of n·d − t_2 + Σ_{k≥3} (k − 4)·t_k ≤ 2n(n − 1)².
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MiyaokaCheck {
    pub lhs: i128,
    pub rhs: i128,
    pub holds: bool,
}

pub fn miyaoka_check(p: &IncidenceProfile) -> Result<MiyaokaCheck> {
    let n = p.surface_degree();
    require_theorem_degree("Miyaoka's inequality for lines", n)?;
    let lhs = n as i128 * p.lines() as i128 - p.t_k(2) as i128
        + p.t().iter()
            .filter(|(&k, _)| k >= 3)
            .map(|(&k, &c)| (k as i128 - 4) * c as i128)
            .sum::<i128>();
    let rhs = miyaoka_rhs(n);
    Ok(MiyaokaCheck { lhs, rhs, holds: lhs <= rhs })
}

fn miyaoka_rhs(n: u32) -> i128 {
    let n = n as i128;
    2 * n * (n - 1) * (n - 1)
}

/// −4 + (2d + t_2 − 2n(n − 1)²)/s, the lower bound for H_L.
pub fn main_theorem_bound(p: &IncidenceProfile) -> Result<Rational> {
    require_theorem_degree("the lower bound for H_L", p.surface_degree())?;
    let s = p.singular_points();
    if s == 0 {
        return Err(Error::NoSingularPoints);
    }
    let numer = 2 * p.lines() as i128 + p.t_k(2) as i128 - miyaoka_rhs(p.surface_degree());
    Ok(Rational::from(-4) + Rational::new(numer, s)?)
}

/// The coarse strict form L̃² > −4s − 2n(n − 1)².
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrictBoundCheck {
    pub strict_transform_sq: Rational,
    pub lower: Rational,
    pub holds: bool,
}

pub fn strict_bound_check(p: &IncidenceProfile) -> Result<StrictBoundCheck> {
    require_theorem_degree("the lower bound for the strict transform", p.surface_degree())?;
    let sq = strict_transform_sq(p);
    let lower = Rational::from_integer(-4 * p.singular_points() as i128 - miyaoka_rhs(p.surface_degree()));
    Ok(StrictBoundCheck { holds: sq > lower, strict_transform_sq: sq, lower })
}

/// −3n²/(n² + 2), the value of H_L for the 3n² Fermat lines.
pub fn fermat_h_closed(n: u32) -> Result<Rational> {
    if n < 3 {
        return Err(Error::DegreeTooSmall { what: "the Fermat configuration", min: 3, n });
    }
    let n = n as i128;
    Rational::new(-3 * n * n, n * n + 2)
}

/// −n³/(2n² − 4n + 4), the value of H_L for the Rams grid.
pub fn rams_h_closed(n: u32) -> Result<Rational> {
    if n < 6 {
        return Err(Error::DegreeTooSmall { what: "the Rams configuration", min: 6, n });
    }
    let n = n as i128;
    Rational::new(-n * n * n, 2 * n * n - 4 * n + 4)
}

/// (−297 + 3t)/(135 − 2t), H_L for 27 lines on a cubic with t Eckardt points.
pub fn cubic_h(eckardt: u32) -> Result<Rational> {
    cubic_profile(eckardt)?;
    let t = eckardt as i64;
    Rational::new(-297 + 3 * t, 135 - 2 * t)
}

/// Everything derived from one incidence profile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HarbourneReport {
    pub profile: IncidenceProfile,
    pub n: u32,
    pub d: u64,
    pub s: u64,
    pub incidence_count: u64,
    pub strict_transform_sq: Rational,
    pub h_linear: Rational,
    /// `None` when n < 4.
    pub miyaoka: Option<MiyaokaCheck>,
    pub main_bound: Option<Rational>,
    /// H_L ≥ main_bound.
    pub main_bound_holds: Option<bool>,
    pub strict_bound: Option<StrictBoundCheck>,
}

impl HarbourneReport {
    pub fn theorems_applicable(&self) -> bool {
        self.miyaoka.is_some()
    }
}

pub fn analyze(p: &IncidenceProfile) -> Result<HarbourneReport> {
    let h_linear = harbourne_linear(p)?;
    let applicable = p.surface_degree() >= 4;
    let main_bound = applicable.then(|| main_theorem_bound(p)).transpose()?;
    Ok(HarbourneReport {
        profile: p.clone(),
        n: p.surface_degree(),
        d: p.lines(),
        s: p.singular_points(),
        incidence_count: incidence_count(p),
        strict_transform_sq: strict_transform_sq(p),
        miyaoka: applicable.then(|| miyaoka_check(p)).transpose()?,
        main_bound_holds: main_bound.as_ref().map(|b| &h_linear >= b),
        main_bound,
        strict_bound: applicable.then(|| strict_bound_check(p)).transpose()?,
        h_linear,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{bauer_profile, fermat_profile, rams_profile, schur_profile};

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d).unwrap()
    }

    #[test]
    fn self_intersection() {
        assert_eq!(line_self_intersection(3), Ok(-1));
        assert_eq!(line_self_intersection(4), Ok(-2));
        assert!(line_self_intersection(2).is_err());
    }

    #[test]
    fn strict_transform_examples() {
        assert_eq!(strict_transform_sq(&bauer_profile()), Rational::from(-64));
        assert_eq!(strict_transform_sq(&schur_profile()), Rational::from(-1024));
        let disjoint = IncidenceProfile::from_counts(4, 2, &[]).unwrap();
        assert_eq!(strict_transform_sq(&disjoint), Rational::from(-4));
        assert_eq!(harbourne_linear(&disjoint), Err(Error::NoSingularPoints));
    }

    #[test]
    fn harbourne_values() {
        assert_eq!(harbourne_linear(&fermat_profile(3).unwrap()).unwrap(), q(-27, 11));
        assert_eq!(harbourne_linear(&schur_profile()).unwrap(), q(-128, 51));
        assert_eq!(harbourne_linear(&bauer_profile()).unwrap(), Rational::from(-8));
    }

    #[test]
    fn miyaoka_values() {
        let schur = miyaoka_check(&schur_profile()).unwrap();
        assert_eq!((schur.lhs, schur.rhs, schur.holds), (-144, 72, true));
        let f4 = miyaoka_check(&fermat_profile(4).unwrap()).unwrap();
        assert_eq!((f4.lhs, f4.rhs, f4.holds), (0, 72, true));
        let bauer = miyaoka_check(&bauer_profile()).unwrap();
        assert_eq!(bauer.lhs, 64);
        let err = miyaoka_check(&fermat_profile(3).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Inapplicable(_)));
        assert!(err.to_string().contains("n >= 4"));
    }

    #[test]
    fn main_bound_values() {
        assert_eq!(main_theorem_bound(&bauer_profile()).unwrap(), Rational::from(-9));
        assert_eq!(main_theorem_bound(&schur_profile()).unwrap(), q(-155, 51));
        assert!(q(-128, 51) >= q(-155, 51));
        assert!(main_theorem_bound(&fermat_profile(3).unwrap()).is_err());
        let disjoint = IncidenceProfile::from_counts(4, 2, &[]).unwrap();
        assert_eq!(main_theorem_bound(&disjoint), Err(Error::NoSingularPoints));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(fermat_h_closed(3).unwrap(), q(-27, 11));
        assert_eq!(fermat_h_closed(4).unwrap(), q(-8, 3));
        assert_eq!(rams_h_closed(6).unwrap(), q(-54, 13));
        assert_eq!(rams_h_closed(10).unwrap(), q(-250, 41));
        assert_eq!(cubic_h(18).unwrap(), q(-27, 11));
        assert_eq!(cubic_h(0).unwrap(), q(-11, 5));
        assert!(cubic_h(19).is_err());
        assert!(rams_h_closed(5).is_err());
        assert!(fermat_h_closed(2).is_err());
    }

    #[test]
    fn closed_forms_match_profiles() {
        for n in 3..=30 {
            assert_eq!(fermat_h_closed(n).unwrap(), harbourne_linear(&fermat_profile(n).unwrap()).unwrap());
        }
        for n in 6..=30 {
            assert_eq!(rams_h_closed(n).unwrap(), harbourne_linear(&rams_profile(n).unwrap()).unwrap());
        }
        for t in 0..=18 {
            assert_eq!(cubic_h(t).unwrap(), harbourne_linear(&cubic_profile(t).unwrap()).unwrap());
        }
    }

    #[test]
    fn cubic_monotone() {
        for t in 0..18 {
            assert!(cubic_h(t + 1).unwrap() < cubic_h(t).unwrap(), "t = {t}");
            // the cross-multiplied form of the same comparison
            let t = t as i64;
            assert!((-297 + 3 * t) * (133 - 2 * t) - (-294 + 3 * t) * (135 - 2 * t) > 0);
        }
    }

    #[test]
    fn report_for_cubic_marks_theorems_inapplicable() {
        let r = analyze(&fermat_profile(3).unwrap()).unwrap();
        assert!(!r.theorems_applicable());
        assert_eq!(r.main_bound, None);
        assert_eq!(r.h_linear, q(-27, 11));
        assert_eq!(r.s, 99);
    }

    #[test]
    fn report_for_schur() {
        let r = analyze(&schur_profile()).unwrap();
        assert_eq!(r.incidence_count, 1152);
        assert_eq!(r.h_linear, &r.strict_transform_sq / &Rational::from(r.s));
        assert_eq!(r.main_bound_holds, Some(true));
        let strict = r.strict_bound.unwrap();
        assert_eq!(strict.lower, Rational::from(-4 * 408 - 72));
        assert!(strict.holds);
    }
}
