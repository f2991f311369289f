use std::fmt;

/// Errors raised by constructors and operations across the crate.
///
/// Constructors validate aggressively (associativity, unit laws,
/// multiplicativity, ideal closure), so most variants carry a witness
/// locating the first violated law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The modulus is not a prime in the supported range.
    NotPrime(u64),
    /// Two objects over different moduli or of incompatible sizes were mixed.
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },
    /// Objects owned by different algebras (or modules) were mixed.
    OwnerMismatch(&'static str),
    /// `invert`/`solve` was asked for a non-square matrix where one is required.
    NotSquare { rows: usize, cols: usize },
    /// The zero polynomial has no factorization.
    ZeroPolynomial,
    /// Structure constants fail associativity at basis triple (i, j, k).
    AssociativityViolation { i: usize, j: usize, k: usize },
    /// The declared unit does not act as identity on basis vector i.
    UnitViolation { i: usize },
    /// A would-be morphism fails multiplicativity at basis pair (i, j).
    NotMultiplicative { i: usize, j: usize },
    /// A would-be morphism does not send unit to unit.
    UnitNotPreserved,
    /// Bimodule data for a trivial extension violates an axiom.
    BimoduleAxiomViolation(&'static str),
    /// The subspace passed as an ideal is not closed under multiplication.
    NotAnIdeal,
    /// Quotient by an ideal containing the unit was requested.
    IdealContainsUnit,
    /// The subspace is not closed under the module action.
    NotASubmodule,
    /// A module action matrix does not respect the structure constants.
    ActionViolation { i: usize, j: usize },
    /// The trace method needs p > dim; the caller should fall back to
    /// the enumeration method.
    CharTooSmall { p: u64, dim: usize },
    /// An exhaustive enumeration would exceed the configured budget.
    BudgetExceeded { needed: u128, budget: u64 },
    /// Center splitting ran out of random trials without certifying
    /// every block.
    SplitBudgetExceeded { trials: u32 },
    /// Dimension cap for validated construction exceeded.
    DimCapExceeded { dim: usize, cap: usize },
    /// The codomain of the morphism is not a product of one-dimensional
    /// matrix blocks over fields.
    CodomainNotFieldProduct,
    /// The operation requires a morphism certified local.
    NotLocal,
    /// The module is not biuniform (Goldie and dual Goldie dimension 1).
    NotBiuniform,
    /// A free cover violates the containment kernel <= F*J.
    CoverViolation,
    /// A verification step that must hold by construction failed; the
    /// payload names the violated clause.
    AssertionFailure(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not a supported prime modulus"),
            Error::DimensionMismatch {
                context,
                expected,
                got,
            } => write!(f, "dimension mismatch in {context}: expected {expected}, got {got}"),
            Error::OwnerMismatch(ctx) => write!(f, "objects belong to different owners in {ctx}"),
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, expected square")
            }
            Error::ZeroPolynomial => write!(f, "the zero polynomial cannot be factored"),
            Error::AssociativityViolation { i, j, k } => {
                write!(f, "associativity fails at basis triple ({i}, {j}, {k})")
            }
            Error::UnitViolation { i } => {
                write!(f, "declared unit does not fix basis vector {i}")
            }
            Error::NotMultiplicative { i, j } => {
                write!(f, "map is not multiplicative at basis pair ({i}, {j})")
            }
            Error::UnitNotPreserved => write!(f, "map does not preserve the unit"),
            Error::BimoduleAxiomViolation(which) => {
                write!(f, "bimodule axiom violated: {which}")
            }
            Error::NotAnIdeal => write!(f, "subspace is not a two-sided ideal"),
            Error::IdealContainsUnit => write!(f, "ideal contains the unit"),
            Error::NotASubmodule => write!(f, "subspace is not a submodule"),
            Error::ActionViolation { i, j } => {
                write!(f, "module action violates structure constants at ({i}, {j})")
            }
            Error::CharTooSmall { p, dim } => {
                write!(f, "trace method needs p > dim, got p = {p}, dim = {dim}")
            }
            Error::BudgetExceeded { needed, budget } => {
                write!(f, "enumeration needs {needed} elements, budget is {budget}")
            }
            Error::SplitBudgetExceeded { trials } => {
                write!(f, "center splitting uncertified after {trials} random trials")
            }
            Error::DimCapExceeded { dim, cap } => {
                write!(f, "algebra dimension {dim} exceeds validation cap {cap}")
            }
            Error::CodomainNotFieldProduct => {
                write!(f, "codomain is not a direct product of field blocks")
            }
            Error::NotLocal => write!(f, "morphism is not certified local"),
            Error::NotBiuniform => write!(f, "module is not biuniform"),
            Error::CoverViolation => write!(f, "cover kernel is not contained in F*J"),
            Error::AssertionFailure(clause) => write!(f, "verification failed: {clause}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
