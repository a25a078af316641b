//! Exact computer algebra over the coefficient field `K = Frac(Z[v^±1, y1^±1, y2^±1])`
//! (with `v^2 = q`) for weight modules over the quantum general linear group.
//!
//! The crate is organised bottom-up:
//!
//! - [`scalar`]: Laurent polynomials, the fraction field `K`, q-brackets,
//!   partial and full specialization of the symbols `q`, `y1`, `y2`.
//! - [`roots`]: the gl(n+1) root system, weights with formal base-point parts,
//!   pairings, `rho`, truncated characters and classical character oracles.
//! - [`uq`]: free words in the generators `e_i`, `f_i`, `K_mu`, the Hopf maps,
//!   the involutions and compound root vectors.
//! - [`linalg`]: dense exact linear algebra over any [`linalg::Field`].
//! - [`reps`]: concrete weight modules (natural, dual, base module, tensor
//!   products, finite-dimensional irreducibles via form-kernel quotients).
//! - [`forms`]: contravariant (Shapovalov) Gram blocks and the canonical
//!   product form on tensor modules.
//! - [`extremal`]: singular vectors, the two extremal-twist routes, factored
//!   determinants and complete-reducibility verdicts.
//! - [`decomp`]: irreducible decompositions of `V (x) M`, character identities
//!   and invariant projectors.
//! - [`braiding`]: R-matrix actions, the FRT matrix, reflection-equation
//!   matrices, the Q-matrix, the character `chi` and coideal module splittings.
//! - [`funcalg`]: the bounded-degree model of the function Hopf algebra,
//!   translation actions, the embedded coordinate ring and bundle sections.
//!
//! All arithmetic is exact; there is no floating point anywhere in this crate.
//! The crate is `no_std` (with `alloc`) outside of tests.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod braiding;
pub mod decomp;
pub mod extremal;
pub mod forms;
pub mod funcalg;
pub mod linalg;
pub mod reps;
pub mod roots;
pub mod scalar;
pub mod uq;

pub use scalar::{Exponent, ScalarK};

