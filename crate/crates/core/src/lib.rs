//! Exact resultants, trace polynomials and reciprocants of integer
//! polynomials, and a mechanical check of quadratic reciprocity built on them.
//!
//! For distinct odd primes `p, q` the resultant of `g_p = 1 + x + ... + x^{p-1}`
//! and `g_q` is 1, while the reciprocant `Rec(g_p, g_q) = Res(g_p^#, g_q^#)`
//! equals the Legendre symbol `(q/p)`. Swapping the arguments of a resultant
//! multiplies it by `(-1)^{deg f deg g}`, which is the reciprocity law.
//!
//! ```
//! use reciprocity_core::{gn, reciprocant, legendre_euler, OddPrime};
//!
//! let rec = reciprocant(&gn(3).unwrap(), &gn(5).unwrap()).unwrap();
//! let legendre = legendre_euler(5, OddPrime::new(3).unwrap()).unwrap();
//! assert_eq!(rec, legendre.to_bigint());
//! ```

pub mod error;
pub mod linalg;
pub mod numtheory;
pub mod parse;
pub mod poly;
pub mod reciprocal;
pub mod resultant;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{companion_matrix, det_bareiss, matrix_poly_eval, IntMatrix};
pub use numtheory::{
    is_prime, legendre_bruteforce, legendre_euler, mod_pow, odd_primes_up_to, OddPrime, Sign,
};
pub use parse::{format_poly, parse_poly, ParseError, ParseErrorKind};
pub use poly::{gn, phi4, power_of_linear, IntPoly, Modulus};
pub use reciprocal::{
    expand_trace, gn_sharp, hn_poly, is_reciprocal, lucas_h, lucas_poly, reciprocant, trace_poly,
    GnSharpSeq, TracePair,
};
pub use resultant::{
    check_res4, gchain_resultant, resultant, sylvester_matrix, ChainStep, EuclidChain,
    ResultantMethod,
};
pub use verify::{
    verify_qr_pair, verify_qr_range, verify_supplement, verify_supplement_range, PairReport,
    SuiteConfig, SuiteReport, SupplementReport,
};

pub use num_bigint::BigInt;
