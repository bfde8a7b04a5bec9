//! Exact searches: sub-arrangements with only quadruple points, and abstract
//! t-vectors ranked by their linear Harbourne constant.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::{harbourne_linear, miyaoka_check};
use crate::catalog::{max_lines_bound, Arrangement, IncidenceProfile};
use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::incidence::{singular_points, SingularPoint};

/// A sub-arrangement whose singular points all have multiplicity 4.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BauerSolution {
    /// Indices into the ambient arrangement, ascending.
    pub line_indices: Vec<usize>,
    /// Indices into the ambient singular-point list, ascending.
    pub point_indices: Vec<usize>,
    pub profile: IncidenceProfile,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Open,
    In,
    Out,
}

#[derive(Clone)]
struct State {
    status: Vec<Status>,
    chosen: Vec<bool>,
    chosen_list: Vec<usize>,
}

struct BauerSearch<'a> {
    points: &'a [SingularPoint],
    /// Ambient quadruple points, in ambient order.
    candidates: Vec<usize>,
    /// Meeting point of each intersecting line pair (i < j).
    meet: HashMap<(usize, usize), usize>,
    size: usize,
    cap: Option<usize>,
    found: Vec<Vec<usize>>,
}

impl BauerSearch<'_> {
    fn meeting_point(&self, a: usize, b: usize) -> Option<usize> {
        self.meet.get(&(a.min(b), a.max(b))).copied()
    }

    /// Puts `start` in, then every point where a new line meets an already
    /// chosen one. Fails if such a point is excluded, is not a quadruple
    /// point, or the line budget is exceeded.
    fn include(&self, state: &mut State, start: usize) -> bool {
        let mut queue = vec![start];
        while let Some(p) = queue.pop() {
            match state.status[p] {
                Status::In => continue,
                Status::Out => return false,
                Status::Open => {}
            }
            state.status[p] = Status::In;
            for &l in &self.points[p].incident_line_indices {
                if state.chosen[l] {
                    continue;
                }
                for &other in &state.chosen_list {
                    if let Some(r) = self.meeting_point(l, other) {
                        if r != p {
                            queue.push(r);
                        }
                    }
                }
                state.chosen[l] = true;
                state.chosen_list.push(l);
                if state.chosen_list.len() > self.size {
                    return false;
                }
            }
        }
        true
    }

    fn done(&self) -> bool {
        self.cap.is_some_and(|c| self.found.len() >= c)
    }

    fn run(&mut self, state: State, next: usize) {
        if self.done() {
            return;
        }
        if state.chosen_list.len() == self.size {
            let mut lines = state.chosen_list.clone();
            lines.sort_unstable();
            self.found.push(lines);
            return;
        }
        let Some(pos) = (next..self.candidates.len())
            .find(|&i| state.status[self.candidates[i]] == Status::Open)
        else {
            return;
        };
        let p = self.candidates[pos];

        let mut with = state.clone();
        if self.include(&mut with, p) {
            self.run(with, pos + 1);
        }
        let mut without = state;
        without.status[p] = Status::Out;
        self.run(without, pos + 1);
    }
}

/// Sub-arrangements of exactly `size` lines whose singular points all have
/// multiplicity 4, built from the ambient quadruple points and the lines
/// through them. Stops after `cap` solutions when a cap is given; solutions
/// come in a fixed order determined by the ambient point order.
pub fn bauer_search(arr: &Arrangement, size: usize, cap: Option<usize>) -> Vec<BauerSolution> {
    let points = singular_points(arr);
    bauer_search_with_points(arr, &points, size, cap)
}

/// As [`bauer_search`], reusing already computed singular points of `arr`.
pub fn bauer_search_with_points(
    arr: &Arrangement,
    points: &[SingularPoint],
    size: usize,
    cap: Option<usize>,
) -> Vec<BauerSolution> {
    if size < 2 || cap == Some(0) {
        return Vec::new();
    }
    let mut meet = HashMap::new();
    for (idx, p) in points.iter().enumerate() {
        let ls = &p.incident_line_indices;
        for (a, &i) in ls.iter().enumerate() {
            for &j in &ls[a + 1..] {
                meet.insert((i.min(j), i.max(j)), idx);
            }
        }
    }
    let candidates = (0..points.len()).filter(|&i| points[i].multiplicity == 4).collect();
    let mut status = vec![Status::Out; points.len()];
    for &c in &candidates {
        status[c] = Status::Open;
    }
    let mut search = BauerSearch {
        points,
        candidates,
        meet,
        size,
        cap,
        found: Vec::new(),
    };
    let state = State {
        status,
        chosen: vec![false; arr.len()],
        chosen_list: Vec::new(),
    };
    search.run(state, 0);

    search
        .found
        .into_iter()
        .map(|line_indices| {
            let point_indices: Vec<usize> = (0..points.len())
                .filter(|&p| {
                    points[p].multiplicity == 4
                        && points[p].incident_line_indices.iter().all(|l| line_indices.binary_search(l).is_ok())
                })
                .collect();
            let profile = IncidenceProfile::from_counts(
                arr.surface_degree(),
                line_indices.len() as u64,
                &[(4, point_indices.len() as u64)],
            )
            .expect("sub-arrangement profile is valid");
            BauerSolution { line_indices, point_indices, profile }
        })
        .collect()
}

/// Maximum number of t-vectors the extremal search visits before giving up.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 5_000_000;

/// An abstract profile passing Miyaoka's inequality, with its H_L when s > 0.
///
/// Such profiles need not be realized by any actual configuration of lines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalCandidate {
    pub profile: IncidenceProfile,
    pub h_linear: Option<Rational>,
}

pub fn extremal_profile_search(n: u32, d: u64, k_max: u32) -> Result<Vec<ExtremalCandidate>> {
    extremal_profile_search_with_budget(n, d, k_max, DEFAULT_ENUMERATION_BUDGET)
}

/// Enumerates t-vectors on keys 2..=k_max with Σ (k² − k)·t_k ≤ d(d − 1),
/// keeps those passing Miyaoka's inequality, and sorts them by H_L
/// ascending (profiles without singular points last, ties by t-vector).
pub fn extremal_profile_search_with_budget(
    n: u32,
    d: u64,
    k_max: u32,
    budget: u64,
) -> Result<Vec<ExtremalCandidate>> {
    if n < 4 {
        return Err(Error::Inapplicable(format!(
            "the extremal search uses Miyaoka's inequality, which requires n >= 4, got n = {n}"
        )));
    }
    let bound = max_lines_bound(n);
    if d > bound {
        return Err(Error::Infeasible(format!("d = {d} exceeds n(7n-12) = {bound}")));
    }
    if k_max < 2 {
        return Err(Error::Infeasible(format!("k_max = {k_max} is below 2")));
    }
    let top = (k_max as u64).min(d);
    let keys: Vec<u32> = (2..=top as u32).rev().collect();
    let pair_budget = d * d.saturating_sub(1);

    let mut visited = 0u64;
    let mut out = Vec::new();
    let mut current = BTreeMap::new();
    enumerate(&keys, pair_budget, &mut current, &mut |t| {
        visited += 1;
        if visited > budget {
            return Err(Error::Infeasible(format!(
                "more than {budget} t-vectors for n = {n}, d = {d}, k_max = {k_max}"
            )));
        }
        let profile = IncidenceProfile::new(n, d, t.clone())?;
        if miyaoka_check(&profile)?.holds {
            let h_linear = harbourne_linear(&profile).ok();
            out.push(ExtremalCandidate { profile, h_linear });
        }
        Ok(())
    })?;

    out.sort_by(|a, b| {
        let by_value = match (&a.h_linear, &b.h_linear) {
            (Some(x), Some(y)) => x.cmp(y),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => Ordering::Equal,
        };
        by_value.then_with(|| a.profile.t().cmp(b.profile.t()))
    });
    Ok(out)
}

fn enumerate(
    keys: &[u32],
    budget: u64,
    current: &mut BTreeMap<u32, u64>,
    visit: &mut dyn FnMut(&BTreeMap<u32, u64>) -> Result<()>,
) -> Result<()> {
    let Some((&k, rest)) = keys.split_first() else {
        return visit(current);
    };
    let cost = k as u64 * (k as u64 - 1);
    for count in 0..=budget / cost {
        if count > 0 {
            current.insert(k, count);
        }
        enumerate(rest, budget - count * cost, current, visit)?;
    }
    current.remove(&k);
    Ok(())
}
