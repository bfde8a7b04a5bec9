//! Named line configurations: explicit Fermat lines, and abstract incidence
//! profiles for the configurations known only through their counts.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{nth_roots_of_minus_one, CycloNum};
use crate::projgeom::{line_through, normalize_point, ProjLine};

/// Upper bound n(7n − 12) on the number of lines of a smooth degree-n surface.
pub fn max_lines_bound(n: u32) -> u64 {
    let n = n as u64;
    n * (7 * n).saturating_sub(12)
}

fn require_degree(what: &'static str, n: u32, min: u32) -> Result<()> {
    if n < min {
        Err(Error::DegreeTooSmall { what, min, n })
    } else {
        Ok(())
    }
}

/// A finite set of distinct lines on a surface of degree n.
#[derive(Clone, Debug, Serialize)]
pub struct Arrangement {
    surface_degree: u32,
    lines: Vec<ProjLine>,
    labels: Vec<String>,
}

impl Arrangement {
    pub fn new(surface_degree: u32, lines: Vec<ProjLine>) -> Result<Self> {
        let labels = (0..lines.len()).map(|i| format!("L{i}")).collect();
        Self::with_labels(surface_degree, lines, labels)
    }

    pub fn with_labels(surface_degree: u32, lines: Vec<ProjLine>, labels: Vec<String>) -> Result<Self> {
        require_degree("a line arrangement on a smooth surface", surface_degree, 3)?;
        assert_eq!(lines.len(), labels.len(), "one label per line");
        if let Some(first) = lines.first() {
            let m = first.conductor();
            if let Some(l) = lines.iter().find(|l| l.conductor() != m) {
                return Err(Error::ConductorMismatch { left: m, right: l.conductor() });
            }
        }
        let bound = max_lines_bound(surface_degree);
        if lines.len() as u64 > bound {
            return Err(Error::InvalidProfile(format!(
                "{} lines exceed the bound n(7n-12) = {bound} for n = {surface_degree}",
                lines.len()
            )));
        }
        let mut seen: HashMap<&ProjLine, usize> = HashMap::with_capacity(lines.len());
        for (i, l) in lines.iter().enumerate() {
            if let Some(&first) = seen.get(l) {
                return Err(Error::DuplicateLine { first, second: i });
            }
            seen.insert(l, i);
        }
        Ok(Arrangement { surface_degree, lines, labels })
    }

    pub fn surface_degree(&self) -> u32 {
        self.surface_degree
    }

    pub fn lines(&self) -> &[ProjLine] {
        &self.lines
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// The sub-arrangement on the given line indices, keeping their labels.
    pub fn subset(&self, indices: &[usize]) -> Result<Arrangement> {
        Arrangement::with_labels(
            self.surface_degree,
            indices.iter().map(|&i| self.lines[i].clone()).collect(),
            indices.iter().map(|&i| self.labels[i].clone()).collect(),
        )
    }
}

/// The combinatorial record (n, d, t_k) of a line configuration.
///
/// Zero counts are not stored, so two profiles are equal iff they describe
/// the same t-vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ProfileRepr", into = "ProfileRepr")]
pub struct IncidenceProfile {
    n: u32,
    d: u64,
    t: BTreeMap<u32, u64>,
}

#[derive(Serialize, Deserialize)]
struct ProfileRepr {
    n: u32,
    d: u64,
    #[serde(default)]
    t: BTreeMap<u32, u64>,
}

impl TryFrom<ProfileRepr> for IncidenceProfile {
    type Error = Error;
    fn try_from(r: ProfileRepr) -> Result<Self> {
        IncidenceProfile::new(r.n, r.d, r.t)
    }
}

impl From<IncidenceProfile> for ProfileRepr {
    fn from(p: IncidenceProfile) -> Self {
        ProfileRepr { n: p.n, d: p.d, t: p.t }
    }
}

impl IncidenceProfile {
    /// Validates degree, multiplicity keys, the line-count bound and
    /// pair-count feasibility Σ (k² − k)·t_k ≤ d(d − 1).
    pub fn new(n: u32, d: u64, t: BTreeMap<u32, u64>) -> Result<Self> {
        require_degree("an incidence profile", n, 3)?;
        let t: BTreeMap<u32, u64> = t.into_iter().filter(|&(_, c)| c > 0).collect();
        if let Some(&k) = t.keys().find(|&&k| k < 2 || k as u64 > d) {
            return Err(Error::InvalidProfile(format!(
                "multiplicity {k} outside 2..={d}"
            )));
        }
        let bound = max_lines_bound(n);
        if d > bound {
            return Err(Error::InvalidProfile(format!(
                "d = {d} exceeds the bound n(7n-12) = {bound} for n = {n}"
            )));
        }
        let pairs: u128 = t.iter().map(|(&k, &c)| (k as u128 * (k as u128 - 1)) * c as u128).sum();
        let available = d as u128 * (d as u128).saturating_sub(1);
        if pairs > available {
            return Err(Error::InvalidProfile(format!(
                "pair-count feasibility fails: sum (k^2-k) t_k = {pairs} > d(d-1) = {available}"
            )));
        }
        Ok(IncidenceProfile { n, d, t })
    }

    pub fn from_counts(n: u32, d: u64, counts: &[(u32, u64)]) -> Result<Self> {
        Self::new(n, d, counts.iter().copied().collect())
    }

    pub fn surface_degree(&self) -> u32 {
        self.n
    }

    pub fn lines(&self) -> u64 {
        self.d
    }

    /// t_k for every k with a nonzero count.
    pub fn t(&self) -> &BTreeMap<u32, u64> {
        &self.t
    }

    pub fn t_k(&self, k: u32) -> u64 {
        self.t.get(&k).copied().unwrap_or(0)
    }

    /// s = Σ t_k, the number of singular points.
    pub fn singular_points(&self) -> u64 {
        self.t.values().sum()
    }

    /// Copy with one count replaced, revalidated.
    pub fn with_count(&self, k: u32, count: u64) -> Result<Self> {
        let mut t = self.t.clone();
        t.insert(k, count);
        Self::new(self.n, self.d, t)
    }

    /// Compact text form, e.g. `t2=336 t3=64 t4=8`.
    pub fn t_vector_string(&self) -> String {
        self.t
            .iter()
            .map(|(k, c)| format!("t{k}={c}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for IncidenceProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} d={}", self.n, self.d)?;
        if !self.t.is_empty() {
            write!(f, " {}", self.t_vector_string())?;
        }
        Ok(())
    }
}

/// True iff x^n + y^n + z^n + w^n vanishes identically on the line.
///
/// On the parametrization s·p + t·q the coefficient of C(n,k) s^k t^(n−k) is
/// Σ_i p_i^k q_i^(n−k); the line lies on the surface iff all of them vanish.
pub fn on_surface(l: &ProjLine, n: u32) -> bool {
    let [p, q] = l.base_points();
    (0..=n).all(|k| {
        p.coords()
            .iter()
            .zip(q.coords())
            .map(|(a, b)| &a.pow(k) * &b.pow(n - k))
            .reduce(|acc, x| &acc + &x)
            .expect("four coordinates")
            .is_zero()
    })
}

/// The three families of Fermat lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FermatFamily {
    /// x = ζy, z = ξw
    A,
    /// x = ζz, y = ξw
    B,
    /// x = ζw, y = ξz
    C,
}

/// The 3n² lines of x^n + y^n + z^n + w^n = 0 over Q(ζ_2n).
///
/// Lines are ordered by family, then by the exponent of ζ, then of ξ, where
/// the roots of −1 are ζ_2n^(2j+1). Labels read `A[j,k]`.
pub fn fermat_lines(n: u32) -> Result<Arrangement> {
    require_degree("the Fermat line construction", n, 3)?;
    let roots = nth_roots_of_minus_one(n)?;
    let field = roots[0].field().clone();
    let (zero, one) = (field.zero(), field.one());
    let point = |c: [&CycloNum; 4]| normalize_point(c.map(Clone::clone));

    let mut lines = Vec::with_capacity(3 * (n * n) as usize);
    let mut labels = Vec::with_capacity(lines.capacity());
    for family in [FermatFamily::A, FermatFamily::B, FermatFamily::C] {
        for (j, zeta) in roots.iter().enumerate() {
            for (k, xi) in roots.iter().enumerate() {
                let (p, q) = match family {
                    FermatFamily::A => (
                        point([zeta, &one, &zero, &zero])?,
                        point([&zero, &zero, xi, &one])?,
                    ),
                    FermatFamily::B => (
                        point([zeta, &zero, &one, &zero])?,
                        point([&zero, xi, &zero, &one])?,
                    ),
                    FermatFamily::C => (
                        point([zeta, &zero, &zero, &one])?,
                        point([&zero, xi, &one, &zero])?,
                    ),
                };
                lines.push(line_through(&p, &q)?);
                labels.push(format!("{family:?}[{j},{k}]"));
            }
        }
    }
    Arrangement::with_labels(n, lines, labels)
}

/// d = 3n², t_2 = 3n³, t_n = 6n.
pub fn fermat_profile(n: u32) -> Result<IncidenceProfile> {
    require_degree("the Fermat configuration", n, 3)?;
    let m = n as u64;
    IncidenceProfile::from_counts(n, 3 * m * m, &[(2, 3 * m * m * m), (n, 6 * m)])
}

/// Grid of n(n−2)+2 disjoint lines crossed by 2 disjoint lines:
/// d = n(n−2)+4, t_2 = 2n² − 4n + 4.
pub fn rams_profile(n: u32) -> Result<IncidenceProfile> {
    require_degree("the Rams configuration", n, 6)?;
    let m = n as u64;
    let verticals = m * (m - 2) + 2;
    IncidenceProfile::from_counts(n, verticals + 2, &[(2, 2 * verticals)])
}

/// The 64 lines on the Schur quartic.
pub fn schur_profile() -> IncidenceProfile {
    IncidenceProfile::from_counts(4, 64, &[(2, 336), (3, 64), (4, 8)]).expect("valid profile")
}

/// The 16-line subconfiguration of the Fermat quartic with 8 quadruple points.
pub fn bauer_profile() -> IncidenceProfile {
    IncidenceProfile::from_counts(4, 16, &[(4, 8)]).expect("valid profile")
}

/// The 27 lines of a smooth cubic with `eckardt` triple points; t_2 + 3t_3 = 135.
pub fn cubic_profile(eckardt: u32) -> Result<IncidenceProfile> {
    if eckardt > 18 {
        return Err(Error::OutOfRange { what: "number of Eckardt points", min: 0, max: 18, value: eckardt as i64 });
    }
    let t3 = eckardt as u64;
    IncidenceProfile::from_counts(3, 27, &[(2, 135 - 3 * t3), (3, t3)])
}
