//! Independent verification: an exact rational oracle for the
//! biquaternion product, the eight-case theorem check and the worked
//! examples.

pub mod exact;
pub mod examples;
pub mod theorem;

pub use exact::{oracle_mul, ExactBiQuat, ExactScalar, STRUCTURE_CONSTANTS};
pub use examples::{verify_examples, ExampleReport, ExamplesReport};
pub use theorem::{
    theorem_closed_form, verify_case, verify_theorem, verify_theorem_with_tol, CaseReport, TheoremCase, TheoremReport,
    CASES,
};
