use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    NoConjugation,
    InvalidDisc(String),
    NotNormOne,
    Singular,
    NotAutomorphism,
    NotSquarefree,
    NoNormalForm,
    /// The invariant point is not fixed by conjugation.
    FieldOfModuliLarger,
    SchemaMismatch,
    NotFieldOfModuliK,
    Inconsistent(String),
    Unsupported(String),
    Lattice(String),
    Overflow,
    /// An exact self-check failed; never expected on valid input.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NoConjugation => write!(f, "no conjugation at base level"),
            Error::InvalidDisc(s) => write!(f, "invalid tower discriminant: {s}"),
            Error::NotNormOne => write!(f, "element does not have norm 1"),
            Error::Singular => write!(f, "singular matrix"),
            Error::NotAutomorphism => write!(f, "matrix is not an automorphism of the form"),
            Error::NotSquarefree => write!(f, "form is not squarefree"),
            Error::NoNormalForm => write!(f, "no cyclic normal form"),
            Error::FieldOfModuliLarger => write!(f, "field of moduli larger than k"),
            Error::SchemaMismatch => write!(f, "invariant schema mismatch"),
            Error::NotFieldOfModuliK => write!(f, "not a field-of-moduli-k datum"),
            Error::Inconsistent(s) => write!(f, "inconsistent input: {s}"),
            Error::Unsupported(s) => write!(f, "unsupported: {s}"),
            Error::Lattice(s) => write!(f, "lattice: {s}"),
            Error::Overflow => write!(f, "integer overflow in lattice arithmetic"),
            Error::Internal(s) => write!(f, "internal verification failure: {s}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
