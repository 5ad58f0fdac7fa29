// index loops in this crate mirror the matrix and polynomial arithmetic
// they implement; rewriting them over iterators obscures the coordinates
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod fingerprint;
pub mod gf;
pub mod kulshammer;
pub mod linalg;
pub mod quiver;
pub mod report;
#[cfg(test)]
pub(crate) mod testutil;
pub mod trivext;
