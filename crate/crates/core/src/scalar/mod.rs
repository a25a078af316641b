//! The exact coefficient field `K = Frac(Z[v^±1, y1^±1, y2^±1])` with `v^2 = q`.
//!
//! Base-point symbols: `q^(lambda, eps_1) = y1` and `q^(lambda, eps_i) = y2`
//! for `i >= 2`, so `z = q^s = y1/y2` and `x_i = y_i^2`. All q-exponents are
//! stored doubled (as powers of `v`) so that half-integral weights such as
//! `rho` never force fractional exponents.
//!
//! - [`Exponent`]: a formal exponent of `q`, i.e. the data of a monomial
//!   `v^a2 * y1^b1 * y2^b2`.
//! - [`LaurentPoly`]: Laurent polynomials in `v, y1, y2` over `Z`.
//! - [`ScalarK`]: canonically reduced fractions of Laurent polynomials.
//! - [`qbracket`]: the q-number `[e]_q = (q^e - q^-e)/(q - q^-1)`.
//! - [`SpecValue`], [`ScalarK::substitute_y`], [`ScalarK::eval_q`]: partial and
//!   full specialization at exact rational points.

mod eval;
mod gcd;
mod parse;
mod poly;
mod ratio;

pub use eval::{EvalError, SpecValue};
pub use parse::{parse_scalar, ParseError};
pub use poly::{LaurentPoly, Mono};
pub use ratio::ScalarK;

use core::ops::{Add, Neg, Sub};

/// A formal exponent of `q`: the monomial `v^a2 * y1^b1 * y2^b2` where
/// `v^2 = q`. The exponent `(0; 1, -1)` represents `s`, since
/// `q^s = y1/y2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exponent {
    /// Doubled q-exponent: the q-power contributes `v^a2`.
    pub a2: i64,
    /// Power of `y1`.
    pub b1: i64,
    /// Power of `y2`.
    pub b2: i64,
}

impl Exponent {
    pub const ZERO: Exponent = Exponent { a2: 0, b1: 0, b2: 0 };

    /// Exponent of an integer power of `q`.
    pub fn q(k: i64) -> Self {
        Exponent { a2: 2 * k, b1: 0, b2: 0 }
    }

    /// The exponent `s`, i.e. `q^s = y1 * y2^-1`.
    pub fn s() -> Self {
        Exponent { a2: 0, b1: 1, b2: -1 }
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }

    /// True when the exponent carries no `y1`/`y2` part.
    pub fn is_numeric(&self) -> bool {
        self.b1 == 0 && self.b2 == 0
    }

    pub fn scale(&self, k: i64) -> Self {
        Exponent { a2: k * self.a2, b1: k * self.b1, b2: k * self.b2 }
    }

    /// The monomial `v^a2 y1^b1 y2^b2` as a key of [`LaurentPoly`].
    pub fn mono(&self) -> Mono {
        [self.a2, self.b1, self.b2]
    }
}

impl Add for Exponent {
    type Output = Exponent;
    fn add(self, rhs: Exponent) -> Exponent {
        Exponent { a2: self.a2 + rhs.a2, b1: self.b1 + rhs.b1, b2: self.b2 + rhs.b2 }
    }
}

impl Sub for Exponent {
    type Output = Exponent;
    fn sub(self, rhs: Exponent) -> Exponent {
        Exponent { a2: self.a2 - rhs.a2, b1: self.b1 - rhs.b1, b2: self.b2 - rhs.b2 }
    }
}

impl Neg for Exponent {
    type Output = Exponent;
    fn neg(self) -> Exponent {
        self.scale(-1)
    }
}

/// The q-bracket `[e]_q = (q^e - q^{-e}) / (q - q^{-1})`.
pub fn qbracket(e: Exponent) -> ScalarK {
    let num = ScalarK::q_power(e) - ScalarK::q_power(-e);
    let den = ScalarK::q_power(Exponent::q(1)) - ScalarK::q_power(Exponent::q(-1));
    num.div(&den).expect("q - q^-1 is nonzero")
}

/// `[k]_q` for an integer `k`.
pub fn qint(k: i64) -> ScalarK {
    qbracket(Exponent::q(k))
}

#[cfg(test)]
mod tests;
