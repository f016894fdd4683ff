//! Bialgebras and Hopf algebras presented by structure constants.

mod element;
mod group;
mod json;
mod structure;
mod verify;

pub use element::{AlgElement, AlgebraId, EndoMap, Tensor3, TensorElement};
pub use group::AbelianGroupAlgebra;
pub use json::{MultEntry, StructureJson};
pub use structure::{SparseTensor, SparseVec, StructureConstantBialgebra};
pub use verify::{CheckScope, IntegralSummary, LeftIntegral};

pub(crate) use element::accumulate;
