//! Simultaneous core partitions.
//!
//! The crate is organised around three coordinate systems for `a`-cores:
//!
//! - [`abacus`]: the tilted `a`-abacus, mapping an `a`-core to an integer
//!   vector summing to zero ([`CCoords`]) and to its rational shift
//!   ([`XCoords`]), together with the coordinate criteria for also being a
//!   `b`-core.
//! - [`zcoords`]: non-negative integer vectors summing to `b0`, which
//!   parameterize `(a, b0, b1, ...)`-cores as lattice points cut out by
//!   cyclic window constraints.
//! - [`partition`]: plain part lists with hook lengths, used as ground truth.
//!
//! [`counting`] and [`extremal`] hold the closed forms; [`oracle`] is a
//! brute-force enumerator built only on hook lengths, and [`verify`] sweeps
//! formulas against it.

pub mod abacus;
pub mod counting;
mod error;
pub mod extremal;
pub mod numtheory;
pub mod oracle;
pub mod partition;
pub mod verify;
pub mod zcoords;

pub use abacus::{CCoords, XCoords};
pub use error::{Error, Result};
pub use oracle::EnumerationBudget;
pub use partition::{CoreSpec, Partition};
pub use zcoords::{WindowConstraint, ZCoords};
