//! Exact certification of polyhedral-combinatorial properties of clutters and
//! graphs.
//!
//! The crate decides, with exact arithmetic throughout, whether a clutter is
//! Ehrhart (its lifted incidence vectors form a Hilbert basis), ideal, or MFMC;
//! whether an integer system `xA ≤ w` is totally dual integral; whether a graph
//! is Meyniel or perfect; and it computes Ehrhart-ring invariants (h-vector,
//! a-invariant, regularity) and compares ordinary powers, symbolic powers and
//! integral closures of edge ideals.
//!
//! Module map:
//!
//! * [`kernel`]: rationals, rank, solve, integer diagonalisation.
//! * [`polyhedron`]: double description, minimal faces, integrality, lattice points.
//! * [`lattice`]: Hilbert bases and semigroup membership.
//! * [`combinat`]: clutters, graphs, blockers, Meyniel and perfection tests.
//! * [`ehrhart`]: Ehrhart series, a-invariant, regularity, bound checks.
//! * [`ideals`]: monomial edge ideals, powers, symbolic powers, closures.
//! * [`tdi`]: TDI certificates, idealness, MFMC.
//! * [`families`]: instance generators and searches.
//! * [`certificate`]: instance files and byte-stable JSON certificates.

pub mod certificate;
pub mod combinat;
pub mod ehrhart;
mod error;
pub mod families;
pub mod ideals;
pub mod kernel;
pub mod lattice;
mod limits;
pub mod polyhedron;
pub mod tdi;

pub use error::{Error, Result};
pub use limits::{Limits, BUDGET_ENV};
