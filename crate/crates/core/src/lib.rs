//! Exact vertex census of regular tessellations `{p,q}` by distance from a
//! vertex: rational generating functions, the recurrences they imply,
//! growth rates, and an independent check against explicitly built maps.

pub mod asymptotics;
pub mod genfunc;
pub mod oracle;
pub mod polyarith;
pub mod recurrence;

pub use asymptotics::{growth, GrowthClass, GrowthInfo};
pub use genfunc::{derive, CaseTag, CensusGF, FaceDegree, Geometry, Schlafli, SymbolError};
pub use polyarith::{series_coeffs, IntPoly, RationalGF};
pub use recurrence::{rec_eval, rec_from_gf, LinRec};
