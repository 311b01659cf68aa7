pub mod catalog;
pub mod dagger;
pub mod field;
pub mod identities;
pub mod leonard;
pub mod matrix;
pub mod poly;
pub mod relatives;
pub mod report;
pub mod scalars;
pub mod suite;
pub mod transition;

pub use dagger::{anchor_vectors, compute_gram, verify_scalar_lemmas, AnchorVectors, GramForm};
pub use field::{Field, FieldElement, FieldError};
pub use leonard::{primitive_idempotents, validate_system, LeonardError, LeonardSystem, ParameterArray, ValidationReport};
pub use matrix::{is_basis, Matrix, MatrixError, Vector};
pub use relatives::{apply, orbit, transform_parameter_array, D4Element};
pub use report::Verdict;
pub use transition::{enumerate_bases, formula, oracle_change_of_basis, verify_all, BasisSet, BasisTag, Evaluator, TransitionFormula, TransitionReport};
pub use suite::{run_suites, Suite, SuiteOptions, VerificationReport};
