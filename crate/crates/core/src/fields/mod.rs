//! Operator-valued plane waves as finite harmonic sums, exact termwise
//! calculus on them, and the τ/η solution family.

mod context;
mod family;
mod fd;
mod harmonic;

pub use context::{WaveContext, DEFAULT_COUPLING};
pub use family::{build_fields, build_potentials, fields_from_potentials, SolutionFamily, COPLANARITY_TOL};
pub use fd::{fd_oracle_scalar, fd_oracle_vector, ScalarFdEstimate, VectorFdEstimate};
pub use harmonic::{Amplitude, HarmonicField, HarmonicScalarField, HarmonicVectorField, MERGE_THRESHOLD};
