//! Exact dimensions of the simple modules of the family algebra attached to
//! a dominant weight and a finite-dimensional module of a simple Lie algebra.
//!
//! Given a simple type, a dominant parameter `lambda` and the highest weight
//! of a finite-dimensional module `V`, the crate classifies the simple
//! modules of the associated finite-dimensional algebra by weight and
//! computes their dimensions, together with those of their projective covers
//! and standard (Verma-like) analogues. The computation runs entirely in
//! exact rational arithmetic and reduces to:
//!
//! * linkage combinatorics of the integral Weyl group of `lambda`
//!   ([`weightlat`]),
//! * formal characters of finite-dimensional modules ([`findim`]),
//! * Kazhdan-Lusztig polynomials and reciprocity for projectives
//!   ([`klengine`], [`blockcalc`]),
//! * an independent small-rank ground truth used to pin conventions
//!   ([`oracle`]).
//!
//! The core is generic over an exact scalar implementing [`scalar::Scalar`];
//! the aliases below fix arbitrary-precision rationals as the default.

pub mod blockcalc;
pub mod findim;
pub mod klengine;
pub mod mat;
pub mod oracle;
pub mod rootsys;
pub mod scalar;
pub mod weightlat;

pub use scalar::Scalar;

/// Default exact scalar: arbitrary-precision rationals.
pub type Rat = num::BigRational;
/// Fixed-width exact scalar for speed-sensitive callers; may overflow on
/// large inputs.
pub type Rat64 = num::rational::Ratio<i64>;

/// Concrete aliases over the default scalar.
pub type Weight = rootsys::Weight<Rat>;
pub type RootSystem = rootsys::RootSystem<Rat>;
pub type WeylElt = rootsys::WeylElt<Rat>;
pub type CoxeterGroup = rootsys::CoxeterGroup<Rat>;
pub type Character = findim::Character<Rat>;
pub type IntegralData = weightlat::IntegralData<Rat>;
pub type BlockReport = blockcalc::BlockReport<Rat>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unsupported simple type {letter}{rank}")]
    InvalidType { letter: char, rank: usize },
    #[error("{0} is not a root of this system")]
    NotARoot(String),
    #[error("Weyl group enumeration exceeds the cap of {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("element does not belong to this enumerated group")]
    GroupMismatch,
    #[error(
        "{lambda} is not dominant: pairing of lambda+rho with the integral root {root} is {value}"
    )]
    NotDominant {
        lambda: String,
        root: String,
        value: String,
    },
    #[error("{0} is not a dominant integral weight")]
    NotDominantIntegral(String),
    #[error("{0} is not in general position")]
    NotGeneralPosition(String),
    #[error("{mu} does not differ from {lambda} by an integral weight")]
    NotLinked { mu: String, lambda: String },
    #[error("graded Ext dimensions require a regular block (trivial dot stabilizer)")]
    SingularBlock,
    #[error("oracle scope exceeded: {0}")]
    Underdetermined(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error("arithmetic overflow in an exact integer computation")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
