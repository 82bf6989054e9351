//! Exact polyhedral engine for Lojasiewicz exponents, log canonical
//! thresholds, and mixed multiplicities of monomial ideals and monomial
//! filtrations.
//!
//! Everything runs over arbitrary-precision rationals; there is no floating
//! point anywhere. Each headline computation is paired with an independent
//! brute-force oracle (vertex-description linear feasibility, exhaustive
//! lattice containment scans, colength interpolation windows, diagonal entry
//! programs) exercised by the test suite and the `selftest` CLI subcommand.

pub mod algnum;
pub mod closure;
pub mod error;
pub mod exponent;
pub mod families;
pub mod filtration;
pub mod hull;
pub mod ideal;
pub mod infinity;
pub mod io;
pub mod lattice;
pub mod multiplicity;
pub mod poly;
pub mod polyhedron;
pub mod rat;
pub mod simplex;
pub mod testkit;

pub use error::EngineError;
pub use exponent::{lct_ideal, loj_filtration, loj_ideal, theta, LojResult, ThetaReport};
pub use filtration::FiltrationSpec;
pub use ideal::MonomialIdeal;
pub use lattice::{ExpVec, WeightVec};
pub use multiplicity::{colength, mixed_multiplicities, MixedTable};
pub use polyhedron::{newton_polyhedron, Facet, NewtonPolyhedron};
pub use rat::Rat;
