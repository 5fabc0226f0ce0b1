//! Exact-arithmetic geometry of three-dimensional Lorentzian Lie algebras:
//! Levi-Civita connection, curvature, Ricci operator, derivation algebras,
//! and the algebraic Ricci soliton equation `Ric = c Id + D`.

pub mod exact;
pub mod families;
pub mod geometry;
pub mod liealg;
pub mod sampling;
pub mod soliton;
pub mod verify;
