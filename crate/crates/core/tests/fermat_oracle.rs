//! Brute-force geometry against the closed-form Fermat counts.

use std::time::Instant;

use surface_lines::catalog::{fermat_lines, fermat_profile, on_surface};
use surface_lines::harbourne::{fermat_h_closed, harbourne_linear};
use surface_lines::incidence::{profile_from_arrangement, singular_points, verify_identities};
use surface_lines::projgeom::{line_intersection, point_on_line};

#[test]
fn geometric_profile_matches_closed_form() {
    for n in 3..=8 {
        let start = Instant::now();
        let arr = fermat_lines(n).unwrap();
        assert_eq!(arr.len() as u32, 3 * n * n);
        assert!(arr.lines().iter().all(|l| on_surface(l, n)));
        let profile = profile_from_arrangement(&arr);
        assert_eq!(profile, fermat_profile(n).unwrap(), "n = {n}");
        assert_eq!(harbourne_linear(&profile).unwrap(), fermat_h_closed(n).unwrap());
        eprintln!("n = {n}: {} lines, {:?}", arr.len(), start.elapsed());
    }
}

#[test]
fn identities_hold_on_fermat_arrangements() {
    for n in 3..=6 {
        let report = verify_identities(&fermat_lines(n).unwrap());
        assert!(report.all_hold(), "n = {n}: {:?}", report.checks);
    }
}

#[test]
fn plucker_relation_on_constructed_lines() {
    for n in 3..=7 {
        for l in fermat_lines(n).unwrap().lines() {
            assert!(l.plucker_relation().is_zero());
        }
    }
}

#[test]
fn intersection_is_symmetric_and_incident() {
    let arr = fermat_lines(4).unwrap();
    let lines = arr.lines();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let ab = line_intersection(&lines[i], &lines[j]).unwrap();
            let ba = line_intersection(&lines[j], &lines[i]).unwrap();
            assert_eq!(ab, ba);
            if let Some(p) = ab {
                assert!(point_on_line(&p, &lines[i]) && point_on_line(&p, &lines[j]));
            }
        }
    }
}

#[test]
fn same_family_lines_meet_as_expected() {
    // family A, index (j, k): x = zeta_j y, z = xi_k w
    let n = 4;
    let arr = fermat_lines(n).unwrap();
    let a = |j: u32, k: u32| &arr.lines()[(j * n + k) as usize];
    assert_eq!(line_intersection(a(0, 0), a(1, 1)).unwrap(), None);
    let p = line_intersection(a(2, 0), a(2, 3)).unwrap().unwrap();
    // (zeta, 1, 0, 0) normalizes to (1, zeta^-1, 0, 0)
    let c = p.coords();
    assert!(c[0].is_one() && c[2].is_zero() && c[3].is_zero());
    assert_eq!(c[1].pow(n), c[0].field().from_int(-1));
}

#[test]
fn every_singular_point_of_the_quartic_has_the_expected_lines() {
    let arr = fermat_lines(4).unwrap();
    for p in singular_points(&arr) {
        assert!(p.multiplicity == 2 || p.multiplicity == 4);
        assert_eq!(p.multiplicity as usize, p.incident_line_indices.len());
        for &i in &p.incident_line_indices {
            assert!(point_on_line(&p.location, &arr.lines()[i]));
        }
    }
}
