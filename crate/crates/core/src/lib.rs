//! Exact RA-matrix computations for finite simple graphs.

pub mod intlin;
pub mod graphs;
pub mod group_oracle;
pub mod products;
pub mod ra;
pub mod serde_big;
pub mod theorems;
pub mod verify;
