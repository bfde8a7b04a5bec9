//! Points and lines of P^3 over a cyclotomic field, with exact incidence and
//! intersection predicates.
//!
//! A line keeps the two points it was built from, two linear forms cutting it
//! out, and its Plücker coordinates scaled so the first nonzero one is 1. The
//! Plücker vector is the line's identity: equality, hashing and ordering go
//! through it.

mod linalg;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::CycloNum;

pub use linalg::{kernel, rank};

/// Index pairs of the Plücker coordinates, in storage order.
pub const PLUCKER_INDICES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// A point of P^3 whose first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ProjPoint {
    coords: [CycloNum; 4],
}

impl ProjPoint {
    pub fn new(coords: [CycloNum; 4]) -> Result<Self> {
        normalize_point(coords)
    }

    pub fn coords(&self) -> &[CycloNum; 4] {
        &self.coords
    }

    pub fn conductor(&self) -> u32 {
        self.coords[0].conductor()
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z, w] = &self.coords;
        write!(f, "({x} : {y} : {z} : {w})")
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl<'de> Deserialize<'de> for ProjPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            coords: [CycloNum; 4],
        }
        let r = Repr::deserialize(d)?;
        normalize_point(r.coords).map_err(serde::de::Error::custom)
    }
}

fn check_same_field(values: &[CycloNum]) -> Result<()> {
    let m = values[0].conductor();
    match values.iter().find(|v| v.conductor() != m) {
        Some(v) => Err(Error::ConductorMismatch { left: m, right: v.conductor() }),
        None => Ok(()),
    }
}

/// Scales `coords` by the inverse of the first nonzero entry.
pub fn normalize_point(coords: [CycloNum; 4]) -> Result<ProjPoint> {
    check_same_field(&coords)?;
    let lead = coords.iter().find(|c| !c.is_zero()).ok_or(Error::ZeroPoint)?;
    if lead.is_one() {
        return Ok(ProjPoint { coords });
    }
    let inv = lead.inv()?;
    Ok(ProjPoint {
        coords: coords.map(|c| &c * &inv),
    })
}

/// A line of P^3.
#[derive(Clone, Serialize)]
pub struct ProjLine {
    base: [ProjPoint; 2],
    plucker: [CycloNum; 6],
    #[serde(skip)]
    forms: [[CycloNum; 4]; 2],
}

impl ProjLine {
    pub fn base_points(&self) -> &[ProjPoint; 2] {
        &self.base
    }

    /// Canonically scaled (p01, p02, p03, p12, p13, p23).
    pub fn plucker(&self) -> &[CycloNum; 6] {
        &self.plucker
    }

    /// Two independent linear forms whose common zero set is the line.
    pub fn forms(&self) -> &[[CycloNum; 4]; 2] {
        &self.forms
    }

    pub fn conductor(&self) -> u32 {
        self.plucker[0].conductor()
    }

    /// p01·p23 − p02·p13 + p03·p12; zero for every genuine line.
    pub fn plucker_relation(&self) -> CycloNum {
        let p = &self.plucker;
        &(&(&p[0] * &p[5]) - &(&p[1] * &p[4])) + &(&p[2] * &p[3])
    }

    /// Point of the line with parameters (s : t), namely s·p + t·q.
    pub fn point_at(&self, s: &CycloNum, t: &CycloNum) -> Result<ProjPoint> {
        let [p, q] = &self.base;
        let coords: [CycloNum; 4] =
            std::array::from_fn(|i| &(s * &p.coords[i]) + &(t * &q.coords[i]));
        normalize_point(coords)
    }
}

impl PartialEq for ProjLine {
    fn eq(&self, other: &Self) -> bool {
        self.plucker == other.plucker
    }
}

impl Eq for ProjLine {}

impl Hash for ProjLine {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.plucker.hash(state);
    }
}

impl PartialOrd for ProjLine {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProjLine {
    fn cmp(&self, other: &Self) -> Ordering {
        self.plucker.cmp(&other.plucker)
    }
}

impl fmt::Debug for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Line[{} , {}]", self.base[0], self.base[1])
    }
}

/// The line through two distinct points.
pub fn line_through(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine> {
    check_same_field(&[p.coords[0].clone(), q.coords[0].clone()])?;
    let raw: [CycloNum; 6] = PLUCKER_INDICES.map(|(i, j)| {
        &(&p.coords[i] * &q.coords[j]) - &(&p.coords[j] * &q.coords[i])
    });
    let lead = raw.iter().find(|c| !c.is_zero()).ok_or(Error::CoincidentPoints)?;
    let inv = lead.inv()?;
    let plucker = raw.clone().map(|c| &c * &inv);

    let zero = p.coords[0].field().zero();
    let rows = vec![p.coords.to_vec(), q.coords.to_vec()];
    let ker = kernel(&rows, 4, &zero);
    debug_assert_eq!(ker.len(), 2);
    let to_form = |v: &Vec<CycloNum>| -> [CycloNum; 4] { std::array::from_fn(|i| v[i].clone()) };
    let forms = [to_form(&ker[0]), to_form(&ker[1])];

    Ok(ProjLine {
        base: [p.clone(), q.clone()],
        plucker,
        forms,
    })
}

fn eval_form(form: &[CycloNum; 4], pt: &ProjPoint) -> CycloNum {
    form.iter()
        .zip(&pt.coords)
        .map(|(a, x)| a * x)
        .reduce(|acc, t| &acc + &t)
        .expect("four terms")
}

/// Exact incidence test: both defining forms of `l` vanish at `pt`.
pub fn point_on_line(pt: &ProjPoint, l: &ProjLine) -> bool {
    l.forms.iter().all(|f| eval_form(f, pt).is_zero())
}

/// The bilinear Plücker pairing; zero iff the two lines are coplanar.
pub fn plucker_pairing(a: &ProjLine, b: &ProjLine) -> CycloNum {
    let (a, b) = (&a.plucker, &b.plucker);
    // indices: 0=01 1=02 2=03 3=12 4=13 5=23
    let terms = [
        &a[0] * &b[5],
        -(&a[1] * &b[4]),
        &a[2] * &b[3],
        &a[5] * &b[0],
        -(&a[4] * &b[1]),
        &a[3] * &b[2],
    ];
    terms.into_iter().reduce(|acc, t| &acc + &t).expect("six terms")
}

/// The common point of two distinct lines, or `None` if they are skew.
pub fn line_intersection(a: &ProjLine, b: &ProjLine) -> Result<Option<ProjPoint>> {
    if a == b {
        return Err(Error::IdenticalLines);
    }
    if !plucker_pairing(a, b).is_zero() {
        return Ok(None);
    }
    let rows: Vec<Vec<CycloNum>> = a.forms.iter().chain(&b.forms).map(|f| f.to_vec()).collect();
    let zero = a.plucker[0].field().zero();
    let ker = kernel(&rows, 4, &zero);
    debug_assert_eq!(ker.len(), 1, "coplanar distinct lines meet in exactly one point");
    let v = ker.into_iter().next().ok_or(Error::IdenticalLines)?;
    let coords: [CycloNum; 4] = std::array::from_fn(|i| v[i].clone());
    normalize_point(coords).map(Some)
}
