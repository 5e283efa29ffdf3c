//! Exact computations for quantum covering groups attached to quivers with
//! automorphism and the spin quiver Hecke algebras that categorify them.

pub mod acceptance;
pub mod covering;
pub mod grothendieck;
pub mod linalg;
pub mod nilhecke;
pub mod perm;
pub mod polyrep;
pub mod ring;
pub mod rootdata;
pub mod scalar;

pub use ring::{LaurentPoly, PiScalar, PiSeries, RationalFunc, RingError};
pub use scalar::{Field, Scalar};

pub type Rat = num_rational::BigRational;
pub type Laurent = LaurentPoly<Rat>;
pub type RatFunc = RationalFunc<Rat>;
pub type Pi = PiScalar<Rat>;
pub type Series = PiSeries<Rat>;
