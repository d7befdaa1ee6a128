//! Exact fast Fourier transforms over unramified extensions of the p-adic
//! integers.
//!
//! The pipeline has four stages:
//!
//! 1. [`planner`] picks a transform length `s > N` built from cyclotomic
//!    values `Φ_q(p)` so that `s` factors into small primes;
//! 2. [`tower`] finds a primitive `s`-th root of unity over `F_p` by
//!    adjoining one prime power at a time with Cantor–Zassenhaus splitting;
//! 3. [`lift`] lifts that root to `(Z/p^K)[X]/F` by Newton iteration on the
//!    sparse polynomial `X^s - 1`;
//! 4. [`fft`] runs a mixed-radix Cooley–Tukey transform over that ring.
//!
//! [`padic`] provides the residue rings, [`ff`] the finite fields and
//! [`cyclotomic`] the number theory underneath.

pub mod counter;
pub mod cyclotomic;
pub mod error;
pub mod ff;
pub mod padic;
pub mod tower;
pub mod lift;
pub mod fft;
pub mod pipeline;
pub mod planner;
pub mod selftest;

pub use counter::MulCounter;
pub use cyclotomic::FactoredOrder;
pub use error::{Error, ErrorKind, Result};
