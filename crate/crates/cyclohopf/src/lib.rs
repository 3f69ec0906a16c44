//! Exact computations with finite-dimensional Hopf algebras over cyclotomic
//! fields.
//!
//! Everything here is exact: scalars live in Q(zeta_N) represented as
//! polynomials modulo the N-th cyclotomic polynomial, with arbitrary-precision
//! rational coefficients. Hopf algebras are given by structure constants
//! (multiplication, unit, comultiplication, counit, antipode), and the main
//! engine computes the Hopf image of an algebra representation: the smallest
//! Hopf-algebra quotient through which the representation factors. A
//! representation is inner faithful exactly when that quotient is the whole
//! algebra.
//!
//! Modules:
//! - [`field`]: the scalar field Q(zeta_N) and the scalar text grammar
//! - [`linalg`]: dense exact matrices, row reduction, subspaces, quotients
//! - [`hopfcore`]: structure-constant Hopf algebras, validation, duals,
//!   tensor products, Hopf ideals and quotients
//! - [`hopfimage`]: the convolution-closure engine, inner faithfulness,
//!   tensor representations
//! - [`pointed`]: group-likes, skew-primitives, and the pointed criterion
//! - [`twisting`]: Drinfeld twists and 2-cocycle deformations
//! - [`tannaka`]: comodules, relative Hom spaces, word comodules
//! - [`builders`]: group algebras, function algebras, Taft algebras, the
//!   half-liberated families A(k, e), and standard representations
//! - [`io`]: JSON interchange formats for all of the above

#![forbid(unsafe_code)]
// Dense tensor and matrix code walks coordinates by explicit index on
// purpose; iterator adapters obscure the (row, column) bookkeeping there.
#![allow(clippy::needless_range_loop)]

pub mod builders;
pub mod field;
#[cfg(test)]
pub(crate) mod testutil;
pub mod hopfcore;
pub mod hopfimage;
pub mod io;
pub mod linalg;
pub mod pointed;
pub mod tannaka;
pub mod twisting;

pub use builders::{
    ake, character_span_injectivity, cyclic_group, cyclic_rep, diagonal_algebra, dihedral_group,
    evaluation_rep, function_algebra, group_algebra, irreducible_characters, matrix_algebra,
    pi_q, symmetric_group, taft, AkeAlgebra, CharacterTable, GroupTable,
};
pub use field::{Cyclotomic, CyclotomicContext};
pub use hopfcore::{
    is_hopf_ideal, quotient_hopf, AlgebraData, HopfAlgebraData, HopfMorphism, SparseVec,
    ValidationReport,
};
pub use hopfimage::{
    check_factorization, compute_closure, hopf_image, is_inner_faithful,
    is_projectively_inner_faithful, tensor_rep, validate_rep, ClosureTrace, ConvolutionClosure,
    HopfImageResult, Representation,
};
pub use linalg::{Matrix, Subspace};
pub use pointed::{
    find_grouplikes, is_grouplike, pointed_criterion, skew_primitives, verify_grouplikes,
    GroupLikeSet, PointedCriterionResult, PointedWitness, SkewPrimitiveSpace,
};
pub use tannaka::{
    corep_level2_checker, hom_comodule, hom_pi, tannaka_equality_check,
    truncated_fixedpoint_criterion, word_comodule, Comodule, HomSpace, TannakaReport, TannakaRow,
    TruncationVerdict,
};
pub use twisting::{
    check_cocycle, check_pseudo_twist, cotwist_hopf, hopf_ideal_transport, induced_cocycle,
    one_sided_twisted_algebras, pushforward_twist, twist_hopf, twisted_hopf_image_check, Cocycle,
    TwistClassification, TwistElement, TwistKind,
};
pub use io::{
    algebra_from_file, algebra_to_file, comodule_to_file, grouplikes_to_file, hopf_from_file,
    hopf_to_file,
    parse_algebra, parse_cocycle, parse_comodule, parse_comodules, parse_grouplikes, parse_hopf,
    parse_rep, parse_twist, rep_from_file, rep_to_file, to_json, AlgebraFile, CocycleFile,
    ComoduleFile, ComodulesFile, GrouplikesFile, HopfFile, HopfSource, RepFile,
};

/// Errors shared by every module in the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic context mismatch: conductor {0} vs {1}")]
    ContextMismatch(u64, u64),
    #[error("parse error at byte {pos}: {msg}")]
    ParseError { pos: usize, msg: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("unsupported conductor {0}: {1}")]
    BadConductor(u64, String),
    #[error("{0} is not an {1}-th root of unity")]
    NotAnNthRoot(String, u64),
    #[error("scalar has wrong multiplicative order: {0}")]
    WrongOrder(String),
    #[error("subspace is not a Hopf ideal: {0}")]
    NotAHopfIdeal(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("set is not closed: {0}")]
    NotClosed(String),
    #[error("element is not group-like: {0}")]
    NotGroupLike(String),
    #[error("not a twist: {0}")]
    NotATwist(String),
    #[error("not a 2-cocycle: {0}")]
    NotACocycle(String),
    #[error("morphism is not surjective")]
    NotSurjective,
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("generator images violate the defining relations: {0}")]
    OrderMismatch(String),
    #[error("no character table available for {0}")]
    MissingCharacterTable(String),
    #[error("comodule host does not match: {0}")]
    HostMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
