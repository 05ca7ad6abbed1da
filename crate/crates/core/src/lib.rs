//! Exact computation of the finite structures attached to Heisenberg-invariant
//! quartic surfaces in P³: the order-32 matrix group and its 30 fix lines,
//! the parameter space of invariant quartics with its special loci, Kummer
//! members with their 16₆ configurations and split conics, Klein-coordinate
//! line calculus, the 320-conic intersection model, and the integer lattice
//! arithmetic that pins the Picard discriminant at −2⁹.
//!
//! All arithmetic is exact: arbitrary-precision rationals, quadratic extension
//! towers, and integer lattice forms. Nothing is ever rounded.

pub mod conics;
pub mod family;
pub mod heisenberg;
pub mod klein;
pub mod kummer;
pub mod lattice;
pub mod linalg;
pub mod mpoly;
pub mod tower;
pub mod upoly;
pub mod verify;

pub use mpoly::MPoly;
pub use tower::{FieldElement, Rat, Tower};
