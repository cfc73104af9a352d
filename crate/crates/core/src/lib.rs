//! Exact computations with support τ-tilting pairs and Gorenstein projective
//! modules over bound quiver algebras.

pub mod algebra;
pub mod error;
pub mod field;
pub mod homology;
pub mod linalg;
pub mod registry;
pub mod regression;
pub mod rep;
pub mod serialize;
pub mod tautilt;
pub mod torsion;

pub use algebra::{Algebra, AlgebraSpec, FieldChoice, Quiver, Relation};
pub use error::{Error, Result};
pub use field::{Field, Fp, Rational};
pub use linalg::Matrix;

pub use rep::Representation;
pub use tautilt::{ExchangeGraph, RigidPair, SupportTauTiltingPair};

pub type QAlgebra = Algebra<Rational>;
pub type QMatrix = Matrix<Rational>;
pub type QRep = Representation<Rational>;
pub type QPair = SupportTauTiltingPair<Rational>;
pub type QGraph = ExchangeGraph<Rational>;
