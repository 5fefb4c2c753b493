//! Exact-arithmetic workbench for Arnold's strange duality and its extension
//! to isolated complete intersection singularities.
//!
//! The crate computes and cross-verifies, with big-integer and exact rational
//! arithmetic throughout:
//!
//! * Frame shapes of monodromy operators, their characteristic polynomials,
//!   and Saito duality ([`frameshape`]);
//! * Milnor numbers and monodromy Frame shapes of weighted homogeneous
//!   hypersurfaces via the Milnor–Orlik divisor ([`weights`]);
//! * integer Gram lattices built from star-shaped graphs, their determinants,
//!   Smith normal forms, signatures, and Coxeter elements ([`lattice`]);
//! * the embedded catalog of the 14 exceptional unimodal singularities, the
//!   8 triangle ICIS, and the 11 quadrilateral singularities, with all duality
//!   links ([`catalog`]);
//! * Kobayashi's duality of weight systems through weighted magic squares
//!   ([`magicsquare`]);
//! * the exhaustive degree-24 self-dual Frame-shape search and its pairing
//!   against the Leech-lattice conjugacy-class list ([`moonshine`]);
//! * numerical Dedekind eta products and Saito's identity
//!   `eta_pi(-1/(N tau)) * eta_pi*(tau) * sqrt(d) = 1` ([`etaq`]).
//!
//! The [`verify`] module aggregates every cross-check into named suites; the
//! [`cli`] module exposes the whole workbench as a command-line tool. Each
//! major capability also has a runnable example under `examples/`.

pub mod catalog;
pub mod cli;
pub mod etaq;
pub mod frameshape;
pub mod lattice;
pub mod magicsquare;
pub mod moonshine;
pub mod poly;
pub mod verify;
pub mod weights;

pub use catalog::{Catalog, Family, SingularityRecord, Table8Row};
pub use frameshape::{FrameError, FrameShape};
pub use lattice::{GramLattice, LatticeAutomorphismReport, LatticeError};
pub use magicsquare::{MagicError, MagicSquare};
pub use poly::IntPolynomial;
pub use weights::{WeightError, WeightSystem};
