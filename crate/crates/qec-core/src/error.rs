//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors reported by the algebra engine.
///
/// Every variant corresponds to a precondition named by an operation's
/// contract; internal consistency violations that are mathematically
/// impossible on valid inputs (`PhaseMismatch`, `NonScalarAction`) guard
/// against upstream bugs rather than user error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Group enumeration grew past the configured cap.
    CapExceeded { cap: usize },
    /// Generator images do not extend to a group homomorphism.
    NotAHomomorphism(String),
    /// A claimed action table violates the action axioms.
    NotAnAction(String),
    /// A claimed equivariant map fails `f(g·x) = g·f(x)`.
    NotEquivariant(String),
    /// A class function is not a character: its irreducible decomposition
    /// has a negative or non-integer coefficient.
    NotACharacter(String),
    /// A cyclotomic value does not lie in `Q`.
    NotRational,
    /// A character expected to be real-valued is not.
    NotRealValued,
    /// A product or restriction produced a basis component whose rotation
    /// phase is not congruent to the expected one.
    PhaseMismatch(String),
    /// A central element fails to act as a scalar on an irreducible.
    NonScalarAction(String),
    /// Structural mismatch between operands (different groups, bases, or
    /// decompositions).
    Mismatch(String),
    /// Malformed input data (bad permutation, point index, multiplicity...).
    Invalid(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::CapExceeded { cap } => {
                write!(f, "group enumeration exceeded cap of {cap} elements")
            }
            Error::NotAHomomorphism(m) => write!(f, "not a homomorphism: {m}"),
            Error::NotAnAction(m) => write!(f, "not an action: {m}"),
            Error::NotEquivariant(m) => write!(f, "not equivariant: {m}"),
            Error::NotACharacter(m) => write!(f, "not a character: {m}"),
            Error::NotRational => write!(f, "value is not rational"),
            Error::NotRealValued => write!(f, "character is not real-valued"),
            Error::PhaseMismatch(m) => write!(f, "phase mismatch: {m}"),
            Error::NonScalarAction(m) => write!(f, "non-scalar action: {m}"),
            Error::Mismatch(m) => write!(f, "mismatch: {m}"),
            Error::Invalid(m) => write!(f, "invalid input: {m}"),
        }
    }
}
