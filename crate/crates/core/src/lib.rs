//! Exact characteristic classes of singular hypersurfaces.
//!
//! Computes Fulton, Chern-Mather and Chern-Schwartz-MacPherson classes of a
//! hypersurface with smooth singular locus from its polar classes, Segre
//! classes, and the local invariants `(χ, Eu)` along the singular locus. All
//! classes are pushed forward to `P^n` and all arithmetic is exact over `Q`.

pub mod charclass;
pub mod chow;
pub mod cli;
mod error;
pub mod scenarios;

pub use error::{Error, Result};
