//! Singular locus and incidence statistics of explicit arrangements.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{Arrangement, IncidenceProfile};
use crate::projgeom::{line_intersection, point_on_line, ProjPoint};

/// A point where at least two lines of an arrangement meet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularPoint {
    pub location: ProjPoint,
    pub multiplicity: u32,
    pub incident_line_indices: Vec<usize>,
}

struct Scan {
    points: Vec<SingularPoint>,
    meeting_pairs: u64,
}

fn scan(arr: &Arrangement) -> Scan {
    let lines = arr.lines();
    let d = lines.len();
    let hits: Vec<(ProjPoint, usize, usize)> = (0..d)
        .into_par_iter()
        .flat_map_iter(|i| {
            (i + 1..d).filter_map(move |j| {
                line_intersection(&lines[i], &lines[j])
                    .expect("arrangement lines are distinct")
                    .map(|p| (p, i, j))
            })
        })
        .collect();
    let meeting_pairs = hits.len() as u64;

    let mut grouped: BTreeMap<ProjPoint, BTreeSet<usize>> = BTreeMap::new();
    for (p, i, j) in hits {
        let entry = grouped.entry(p).or_default();
        entry.insert(i);
        entry.insert(j);
    }

    let points = grouped
        .into_par_iter()
        .map(|(location, from_pairs)| {
            let incident: Vec<usize> = (0..d)
                .filter(|&k| point_on_line(&location, &lines[k]))
                .collect();
            assert!(
                incident.iter().copied().eq(from_pairs.iter().copied()),
                "recount through {location} disagrees with the pair scan"
            );
            SingularPoint {
                multiplicity: incident.len() as u32,
                incident_line_indices: incident,
                location,
            }
        })
        .collect();
    Scan { points, meeting_pairs }
}

/// All points of multiplicity ≥ 2, sorted by canonical coordinates.
pub fn singular_points(arr: &Arrangement) -> Vec<SingularPoint> {
    scan(arr).points
}

fn tally(n: u32, d: usize, points: &[SingularPoint]) -> IncidenceProfile {
    let mut t = BTreeMap::new();
    for p in points {
        *t.entry(p.multiplicity).or_insert(0u64) += 1;
    }
    IncidenceProfile::new(n, d as u64, t).expect("a realized arrangement has a valid profile")
}

/// Tallies the singular points of `arr` by multiplicity.
pub fn profile_from_arrangement(arr: &Arrangement) -> IncidenceProfile {
    tally(arr.surface_degree(), arr.len(), &singular_points(arr))
}

/// I_d = Σ (k² − k)·t_k, twice the number of intersecting line pairs.
pub fn incidence_count(p: &IncidenceProfile) -> u64 {
    p.t().iter().map(|(&k, &c)| k as u64 * (k as u64 - 1) * c).sum()
}

/// Σ k·t_k, the number of (line, singular point) incidences.
pub fn weighted_point_count(p: &IncidenceProfile) -> u64 {
    p.t().iter().map(|(&k, &c)| k as u64 * c).sum()
}

/// Σ k²·t_k.
pub fn squared_point_count(p: &IncidenceProfile) -> u64 {
    p.t().iter().map(|(&k, &c)| (k as u64).pow(2) * c).sum()
}

/// True iff the profile is consistent with every line meeting exactly
/// `valency` others: I_d = d·valency.
pub fn valency_consistent(p: &IncidenceProfile, valency: u64) -> bool {
    incidence_count(p) == p.lines() * valency
}

/// One checked identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
}

impl IdentityCheck {
    fn new(name: &'static str, lhs: u64, rhs: u64) -> Self {
        IdentityCheck { name, lhs, rhs, holds: lhs == rhs }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub profile: IncidenceProfile,
    pub meeting_pairs: u64,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Checks the counting identities on the computed singular points against
/// an independent count of intersecting line pairs.
pub fn verify_identities(arr: &Arrangement) -> IdentityReport {
    let Scan { points, meeting_pairs } = scan(arr);
    let profile = tally(arr.surface_degree(), arr.len(), &points);
    let mult_sum: u64 = points.iter().map(|p| p.multiplicity as u64).sum();
    let pair_sum: u64 = points
        .iter()
        .map(|p| {
            let m = p.multiplicity as u64;
            m * (m - 1) / 2
        })
        .sum();
    let checks = vec![
        IdentityCheck::new("sum of multiplicities = sum k t_k", mult_sum, weighted_point_count(&profile)),
        IdentityCheck::new("distinct singular points = sum t_k", points.len() as u64, profile.singular_points()),
        IdentityCheck::new("sum C(mult, 2) = intersecting pairs", pair_sum, meeting_pairs),
        IdentityCheck::new("I_d = sum (k^2 - k) t_k = 2 * intersecting pairs", incidence_count(&profile), 2 * meeting_pairs),
    ];
    IdentityReport { profile, meeting_pairs, checks }
}
