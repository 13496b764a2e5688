//! Generator sets and ordered (non-commutative) arithmetic on operator-valued
//! scalars and 3-vectors.

mod generators;
mod matrix;
mod vector;

pub use generators::{levi_civita, make_generators, structure_constants, GeneratorKind, GeneratorSet, StructureConstants};
pub use matrix::{anticommutator, commutator, OperatorMatrix};
pub use vector::{cross, dot, OperatorVector3};
