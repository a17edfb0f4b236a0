//! Exact computations for braided algebras and their Yang-Baxter Hochschild cohomology.

pub mod braided;
pub mod cochain;
pub mod complex;
pub mod constructions;
pub mod deformation;
pub mod degree3;
pub mod differential;
pub mod error;
pub mod fixtures;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod selftest;
pub mod tensor;

pub use braided::{Axiom, BraidedAlgebra, Verdict, Witness};
pub use cochain::{Summand4, Ybh2Cochain, Ybh3Cochain, Ybh4Cochain};
pub use complex::{CohomologySummary, ComplexSlice, DimensionGuard, H3Summary, IotaReport};
pub use deformation::{DeformationSeries, DeformationVerdict, ObstructionBundle, QuadraticOutcome, TrivializationReport};
pub use error::{Error, Result};
pub use fixtures::{Construction, Fixture};
pub use hopf::{HopfAlgebra, HopfMaps, HopfTwoCochain};
pub use io::{AlgebraDocument, Loaded};
pub use linalg::{ExactMatrix, Solution};
pub use report::Report;
pub use scalar::{Field, FieldSpec, PrimeField, Rationals, Ring, Truncated, TruncatedScalar};
pub use tensor::TensorMap;
