//! Exact line arrangements on smooth surfaces of degree n in P^3: singular
//! points, incidence statistics and linear Harbourne constants.
//!
//! All arithmetic is exact. Coordinates live in a cyclotomic field Q(ζ_m),
//! every derived quantity is a [`Rational`], and decimal output is only a
//! rendering of those values.

pub mod catalog;
pub mod error;
pub mod exactnum;
pub mod harbourne;
pub mod incidence;
pub mod projgeom;

pub use catalog::{Arrangement, IncidenceProfile};
pub use error::{Error, Result};
pub use exactnum::{CycloNum, CyclotomicField, Rational, Rounding};
pub use harbourne::HarbourneReport;
pub use projgeom::{ProjLine, ProjPoint};
