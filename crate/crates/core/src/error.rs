use thiserror::Error;

use crate::parse::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,

    #[error("polynomial `{0}` is not monic")]
    NotMonic(String),

    #[error("polynomial `{0}` is not reciprocal")]
    NotReciprocal(String),

    #[error("polynomial `{0}` has odd degree; a trace polynomial needs even degree")]
    OddDegree(String),

    #[error("polynomial of degree {degree} does not fit in degree bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("{a} is divisible by {p}; the Legendre symbol is only defined for units")]
    DivisibleByPrime { a: i64, p: u64 },

    #[error("the primes must be distinct, got {0} twice")]
    SamePrime(u64),

    #[error("gcd({m}, {n}) > 1; the Euclidean chain needs coprime indices")]
    NotCoprime { m: u64, n: u64 },

    #[error("index must be positive")]
    ZeroIndex,

    #[error("g_n^# is only defined for odd n, got {0}")]
    EvenIndex(u64),

    #[error("remainder {actual} after dividing g_{n} by g_{m} should be g_{r}")]
    ChainMismatch {
        m: u64,
        n: u64,
        r: u64,
        actual: String,
    },

    #[error("residue {residue} of a^((p-1)/2) mod {p} is neither 1 nor -1")]
    EulerResidue { residue: u64, p: u64 },

    #[error("value {0} is not a sign")]
    NotASign(String),

    #[error("{0}")]
    Precondition(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
