use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed PD code: {0}")]
    PdSyntax(String),
    #[error("invalid PD code: {0}")]
    PdLabels(String),
    #[error("diagram is not connected (split PD codes are not supported)")]
    Disconnected,
    #[error("face data admits no proper checkerboard coloring")]
    NoProperColoring,
    #[error("region {0} is not a white region of the coloring")]
    RegionNotWhite(usize),
    #[error(
        "no negative-definite Goeritz presentation for this diagram; \
         supply a reduced negative-definite matrix directly with --goeritz"
    )]
    NoDefinitePresentation,
    #[error("malformed matrix: {0}")]
    MatrixSyntax(String),
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is singular mod 2")]
    SingularMod2,
    #[error("matrix is not negative definite")]
    NotNegativeDefinite,
    #[error("determinant {0} is even; not the Goeritz form of a knot")]
    EvenDeterminant(BigInt),
    #[error("cannot factor {0}")]
    Factorization(BigInt),
    #[error("{q} does not divide the group order {order}")]
    NotADivisor { q: BigInt, order: BigInt },
    #[error("the {p}-primary part of H^2 is not cyclic")]
    NonCyclic { p: BigInt },
    #[error("invalid prime power: {0}")]
    PrimePower(String),
}

impl Error {
    /// Pipeline stage the error belongs to, used in CLI messages.
    pub fn stage(&self) -> &'static str {
        match self {
            Error::PdSyntax(_) | Error::PdLabels(_) | Error::MatrixSyntax(_) => "parse",
            Error::Disconnected | Error::NoProperColoring | Error::RegionNotWhite(_) => "diagram",
            Error::NoDefinitePresentation
            | Error::NotSymmetric
            | Error::NotNegativeDefinite
            | Error::EvenDeterminant(_) => "goeritz",
            Error::NotSquare { .. } | Error::Dimension(_) | Error::Singular | Error::SingularMod2 => {
                "lattice"
            }
            Error::Factorization(_)
            | Error::NotADivisor { .. }
            | Error::NonCyclic { .. }
            | Error::PrimePower(_) => "invariants",
        }
    }
}
