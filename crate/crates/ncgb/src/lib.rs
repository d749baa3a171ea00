//! Gröbner-basis computations in free associative algebras with weighted
//! gradings: two-sided division, guarded and degree-truncated completion,
//! minimal homogeneous generating sets of graded ideals, minimal standard
//! bases of arbitrary ideals, and an independent linear-algebra verifier.
//!
//! The crate works over exact coefficients only (arbitrary-precision
//! rationals or a prime field), so every certified result is exact.

pub mod completion;
pub mod division;
pub mod error;
pub mod mingen;
pub mod oracle;
pub mod order;
pub mod poly;
pub mod scalar;
pub mod stdbasis;
pub mod text;
pub mod word;

pub use completion::{
    buchberger, is_groebner_up_to, overlap_element, truncated_gb, CompletionResult,
    CompletionStatus, GbCheck, GbWitness, Guard, ObstructionTask, TruncatedBasis,
};
pub use division::{is_normal, normal_form, remainder, interreduce, Representation, Summand};
pub use error::{Error, ParseError};
pub use mingen::{min_gen_set, verify_minimal, MinGenOutput};
pub use oracle::{member, minimal_betti, span_ideal, OracleOptions, OracleReport};
pub use order::{check_monomial_ordering, OrderCheckReport, OrderKind, OrderSpec};
pub use poly::{Context, Homogeneity, Poly, Term};
pub use scalar::{ArithOp, FieldSpec, Scalar};
pub use stdbasis::{
    check_representation_bound, is_standard_basis, min_standard_basis, StdBasisOutput,
};
pub use text::{parse_poly_text, parse_problem, print_poly, print_word, ProblemFile};
pub use word::{occurrences, proper_overlaps, Occurrence, OverlapShape, Signature, Word};
