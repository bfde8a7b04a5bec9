use std::collections::BTreeMap;

use proptest::prelude::*;
use surface_lines::catalog::IncidenceProfile;
use surface_lines::harbourne::{
    harbourne_linear, main_theorem_bound, miyaoka_check, strict_bound_check, strict_transform_sq,
};
use surface_lines::incidence::{incidence_count, squared_point_count, weighted_point_count};
use surface_lines::Rational;

/// Random valid profiles: pick n and d, then t_k greedily inside the pair budget.
fn profile() -> impl Strategy<Value = IncidenceProfile> {
    profile_in(3..=9)
}

fn profile_in(degrees: std::ops::RangeInclusive<u32>) -> impl Strategy<Value = IncidenceProfile> {
    degrees
        .prop_flat_map(|n| {
            let max_d = (n as u64) * (7 * n as u64 - 12);
            (Just(n), 2u64..=max_d.min(120), prop::collection::vec((2u32..=9, 0u64..=40), 0..5))
        })
        .prop_map(|(n, d, raw)| {
            let mut budget = d * (d - 1);
            let mut t = BTreeMap::new();
            for (k, c) in raw {
                if k as u64 > d {
                    continue;
                }
                let cost = k as u64 * (k as u64 - 1);
                let c = c.min(budget / cost);
                budget -= c * cost;
                *t.entry(k).or_insert(0) += c;
            }
            IncidenceProfile::new(n, d, t).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn two_forms_of_the_strict_transform_agree(p in profile()) {
        let n = p.surface_degree() as i128;
        let d = p.lines() as i128;
        let long = (2 - n) * d + incidence_count(&p) as i128 - squared_point_count(&p) as i128;
        let short = (2 - n) * d - weighted_point_count(&p) as i128;
        prop_assert_eq!(long, short);
        prop_assert_eq!(strict_transform_sq(&p), Rational::from_integer(short));
    }

    #[test]
    fn bound_is_sound_whenever_miyaoka_holds(p in profile_in(4..=9)) {
        prop_assume!(p.singular_points() > 0);
        if !miyaoka_check(&p).unwrap().holds {
            return Ok(());
        }
        let h = harbourne_linear(&p).unwrap();
        prop_assert!(h >= main_theorem_bound(&p).unwrap());
        prop_assert!(strict_bound_check(&p).unwrap().holds);
    }

    #[test]
    fn h_linear_is_strict_transform_over_s(p in profile()) {
        prop_assume!(p.singular_points() > 0);
        let expected = strict_transform_sq(&p) / Rational::from(p.singular_points());
        prop_assert_eq!(harbourne_linear(&p).unwrap(), expected);
    }

    #[test]
    fn profile_json_round_trip(p in profile()) {
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<IncidenceProfile>(&json).unwrap(), p);
    }
}
