//! Exact arithmetic around linear independence of real radicals.
//!
//! The crate is organised bottom-up:
//!
//! * [`number`]: primality, factorization, perfect powers, multiplicative order.
//! * [`interval`]: certified rational enclosures of radicals.
//! * [`lattice`]: Hermite normal form and lattice index.
//! * [`radicals`]: canonical radicals, pairwise and full independence over Q,
//!   extension degrees.
//! * [`orbit`]: the `x -> 1 + dx`, `x -> -x` orbit of 0 in `Z_n`.
//! * [`cyclotomic`]: exact arithmetic in `Q(zeta_n)`, the DFT matrix identities
//!   and vanishing sums of roots of unity.
//! * [`finite_field`]: towers `GF(p^u) <= GF(p^v)` and independent sets built
//!   from divisors of `p^u - 1`.
//! * [`search`]: certified near-miss search for `x^(1/m) + y^(1/n) = z^(1/r)`.

pub mod cyclotomic;
pub mod error;
pub mod finite_field;
pub mod interval;
pub mod lattice;
pub mod number;
pub mod orbit;
pub mod radicals;
pub mod search;

pub use error::{Error, Result};
pub use interval::{Enclosure, Interval, RadicalTerm};
pub use number::PrimeFactorization;
pub use radicals::{IndependenceCertificate, Radical, RadicalSet, Sign};
