//! Finite groups with involutions, nonabelian `H¹`, finite groupoids with
//! involutions, and exact Poincaré-series arithmetic.

pub mod action;
pub mod group;
pub mod groupoid;
pub mod h1;
pub mod involution;
pub mod limits;
pub mod partition;
pub mod poincare;
