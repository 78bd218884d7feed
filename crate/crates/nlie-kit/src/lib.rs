//! Exact-arithmetic toolkit for n-ary Lie (Filippov) algebras.
//!
//! The crate works over arbitrary-precision rationals throughout; every
//! verdict it produces is an exact algebraic statement, never a numerical
//! approximation. It provides:
//!
//! - [`nlie`]: n-ary skew-symmetric algebras given by structure constants,
//!   the Filippov (generalized Jacobi / Leibniz) identity checker, derivations,
//!   adjoint maps, semidirect sums with a module, and a plain-text
//!   structure-constant format.
//! - [`basiclie`]: the ordinary Lie algebra induced on the (n−1)-fold wedge
//!   power by an n-ary bracket, Jacobi/Killing checks, and the explicit
//!   sign-isomorphism between the wedge algebra of the vector-products
//!   algebra and the orthogonal Lie algebra.
//! - [`sorep`]: orthogonal Lie algebras `so_m` with concrete representations:
//!   homogeneous polynomial modules, harmonic (Laplacian-kernel) submodules,
//!   three-dimensional f-basis modules, `so_4` tensor modules with exact
//!   Casimir scalars, wedge-square modules, direct sums, restrictions, and a
//!   JSON export format.
//! - [`prolong`]: the decision procedure for whether a Lie-algebra module
//!   extends to a module of the n-ary algebra — quadratic obstruction
//!   operators, an independent tuple-wise check, module-axiom verification,
//!   irreducibility testing, the closed dimension formula, and the span of
//!   the obstruction space in the symmetric square.
//! - [`cli`]: report builders and command runners behind the `nlie-kit`
//!   binary (verify / prolong / dimensions / q2 / module subcommands).
//!
//! All public operations are pure functions over immutable values and are
//! safe to call concurrently.

pub mod basiclie;
pub mod cli;
pub mod exact;
pub mod nlie;
pub mod prolong;
pub mod sorep;

/// The scalar field: arbitrary-precision rationals in canonical form
/// (reduced, positive denominator).
pub type Rational = num_rational::BigRational;

/// Errors produced by construction, parsing, and verification entry points.
///
/// Mathematical *failures* (an identity that does not hold, a module that
/// does not prolong) are not errors; they are reported as verdicts with
/// witnesses. `Error` covers malformed inputs and impossible requests.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Bracket arity below 2 makes none of the definitions meaningful.
    #[error("invalid arity {0}: the bracket needs at least 2 arguments")]
    InvalidArity(usize),

    /// Orthogonal algebras are only built for m >= 3.
    #[error("invalid orthogonal size {0}: need m >= 3")]
    InvalidSoSize(usize),

    /// Wrong number of arguments passed to a fixed-arity operation.
    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    /// Dimension or shape disagreement between operands.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A basis index outside the valid range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// An obstruction-operator index violating the validity pattern.
    #[error("invalid obstruction index ({i},{j},{s},{k}): {reason}")]
    InvalidObstructionIndex {
        i: usize,
        j: usize,
        s: usize,
        k: usize,
        reason: String,
    },

    /// Text or JSON input that could not be parsed; 1-based line and column.
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    /// Two entries for the same bracket tuple with different values.
    #[error("conflicting structure constants: {0}")]
    ConflictingEntry(String),

    /// The requested object provably does not exist over the rationals.
    #[error("not realizable over the rationals: {0}")]
    NotRealizable(String),

    /// An internal consistency check failed (e.g. a representation whose
    /// matrices do not satisfy the algebra's brackets, or a Casimir operator
    /// that is not scalar where it must be).
    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    /// Two objects that must share the same underlying algebra do not.
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),

    /// Requested parameters exceed the configured budget.
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// A command invoked with a missing or contradictory flag combination.
    #[error("usage: {0}")]
    Usage(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: usage/parse/budget problems exit 2,
    /// everything else (internal inconsistencies surfacing as errors) exits 1.
    /// Mathematical check failures are handled by the commands themselves.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. }
            | Error::Budget(_)
            | Error::Usage(_)
            | Error::InvalidArity(_)
            | Error::InvalidSoSize(_)
            | Error::NotRealizable(_) => 2,
            _ => 1,
        }
    }
}
