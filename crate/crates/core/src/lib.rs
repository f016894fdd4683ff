//! Exact construction and verification of the semisimple Hopf algebras
//! H_{2n²} and their actions on quantum polynomial algebras.

pub mod actions;
pub mod bialgebra;
pub mod error;
pub mod exactnum;
pub mod h2n2;
pub mod linalg;
pub mod ore_twist;
pub mod qpa;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use exactnum::{Cyclo, CycloCtx, Rat};
pub use report::{Report, Violation};
pub use scalar::{Field, Ring};

pub type Bialgebra = bialgebra::StructureConstantBialgebra<Cyclo>;
pub type AlgElement = bialgebra::AlgElement<Cyclo>;
pub type TensorElement = bialgebra::TensorElement<Cyclo>;
pub type EndoMap = bialgebra::EndoMap<Cyclo>;
pub type TwistData = ore_twist::TwistData<Cyclo>;
pub type QPMatrix = qpa::QPMatrix<Cyclo>;
pub type QPAlgebra = qpa::QPAlgebra<Cyclo>;
pub type QPolynomial = qpa::QPolynomial<Cyclo>;
pub type Action = actions::LinearAction<Cyclo>;

pub use actions::{ActionSpec, ClassificationReport, Verdict};
pub use h2n2::{build_h2n2, H2n2, H2n2Params};
