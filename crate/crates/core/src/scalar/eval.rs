//! Specialization of scalars at exact points. The symbols `y1`, `y2` can be
//! substituted by values of the form `r * q^k` (rational `r`, integer `k`)
//! while `q` stays formal; a fully numeric evaluation then sends `q` to an
//! exact rational. Values that would require an irrational square root of
//! `q0` are rejected rather than approximated.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::LaurentPoly;
use super::ratio::ScalarK;

/// A substitution value `coeff * q^qpow` for one of the base-point symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecValue {
    pub coeff: BigRational,
    pub qpow: i64,
}

impl SpecValue {
    pub fn rational(r: BigRational) -> Self {
        SpecValue { coeff: r, qpow: 0 }
    }

    pub fn int(k: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn q_power(k: i64) -> Self {
        SpecValue { coeff: BigRational::one(), qpow: k }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalError {
    /// The denominator vanishes at the requested point.
    DenominatorVanishes,
    /// The value involves an odd power of `v = q^(1/2)` and `q0` has no
    /// rational square root, so the result is irrational.
    IrrationalValue,
    /// A base-point symbol was substituted by zero.
    ZeroSubstitution,
}

impl core::fmt::Display for EvalError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EvalError::DenominatorVanishes => write!(f, "denominator vanishes at the point"),
            EvalError::IrrationalValue => write!(f, "value is irrational at the point"),
            EvalError::ZeroSubstitution => write!(f, "base-point symbols must be invertible"),
        }
    }
}

/// Substitute `y1 -> c1 q^k1, y2 -> c2 q^k2` into a polynomial. Returns the
/// resulting Laurent polynomial in `v` together with a positive integer `d`
/// such that the true value is `poly / d` (denominators of the rational
/// coefficients are cleared globally).
fn poly_substitute_y(
    p: &LaurentPoly,
    y1: &SpecValue,
    y2: &SpecValue,
) -> (LaurentPoly, BigInt) {
    // Common denominator of all coefficient values c1^b1 * c2^b2.
    let mut terms: Vec<(i64, BigRational)> = Vec::new();
    for (m, c) in p.terms() {
        let v_exp = m[0] + 2 * (m[1] * y1.qpow + m[2] * y2.qpow);
        let coeff = rat_pow(&y1.coeff, m[1]) * rat_pow(&y2.coeff, m[2])
            * BigRational::from_integer(c.clone());
        terms.push((v_exp, coeff));
    }
    let mut denom = BigInt::one();
    for (_, c) in &terms {
        denom = num_integer::Integer::lcm(&denom, c.denom());
    }
    let mut out = LaurentPoly::zero();
    for (e, c) in terms {
        let scaled = &c * BigRational::from_integer(denom.clone());
        debug_assert!(scaled.is_integer());
        out.add_term([e, 0, 0], scaled.to_integer());
    }
    (out, denom)
}

fn rat_pow(r: &BigRational, k: i64) -> BigRational {
    if k == 0 {
        return BigRational::one();
    }
    if k < 0 {
        return rat_pow(r, -k).recip();
    }
    let mut out = BigRational::one();
    for _ in 0..k {
        out *= r;
    }
    out
}

/// Evaluate a univariate Laurent polynomial in `v` at `v^2 = q0`, splitting
/// into even and odd `v`-parity: returns `(even_value, odd_value)` so that
/// the polynomial value is `even + v * odd`.
fn eval_parity(p: &LaurentPoly, q0: &BigRational) -> (BigRational, BigRational) {
    let mut even = BigRational::zero();
    let mut odd = BigRational::zero();
    for (m, c) in p.terms() {
        debug_assert!(m[1] == 0 && m[2] == 0);
        let a = m[0];
        let c = BigRational::from_integer(c.clone());
        if a.rem_euclid(2) == 0 {
            even += c * rat_pow(q0, a / 2);
        } else {
            // v^a = v * q^((a-1)/2)
            odd += c * rat_pow(q0, (a - 1).div_euclid(2));
        }
    }
    (even, odd)
}

impl ScalarK {
    /// Substitute the base-point symbols, leaving `q` formal. Requires
    /// invertible values.
    pub fn substitute_y(&self, y1: &SpecValue, y2: &SpecValue) -> Result<ScalarK, EvalError> {
        if y1.is_zero() || y2.is_zero() {
            return Err(EvalError::ZeroSubstitution);
        }
        let (np, nd) = poly_substitute_y(self.numerator(), y1, y2);
        let (dp, dd) = poly_substitute_y(self.denominator(), y1, y2);
        if dp.is_zero() {
            return Err(EvalError::DenominatorVanishes);
        }
        Ok(ScalarK::ratio(np.scale_int(&dd), dp.scale_int(&nd)))
    }

    /// Evaluate a scalar free of `y1, y2` at `q = q0`. The result is exact;
    /// odd powers of `v` are rationalized away when possible.
    pub fn eval_q(&self, q0: &BigRational) -> Result<BigRational, EvalError> {
        if q0.is_zero() {
            return Err(EvalError::ZeroSubstitution);
        }
        assert!(
            self.numerator().terms().all(|(m, _)| m[1] == 0 && m[2] == 0)
                && self.denominator().terms().all(|(m, _)| m[1] == 0 && m[2] == 0),
            "eval_q requires the base-point symbols to be substituted first"
        );
        let (pe, po) = eval_parity(self.numerator(), q0);
        let (qe, qo) = eval_parity(self.denominator(), q0);
        // (pe + v po)/(qe + v qo) with v^2 = q0: multiply by (qe - v qo).
        let den = &qe * &qe - &qo * &qo * q0;
        if den.is_zero() {
            // Degenerate rationalization: qe = ±sqrt(q0) qo. The fraction may
            // still be finite if the same factor divides the numerator, but in
            // canonical form that cannot happen; report a vanishing point.
            return Err(EvalError::DenominatorVanishes);
        }
        let even = (&pe * &qe - &po * &qo * q0) / &den;
        let odd = (&po * &qe - &pe * &qo) / &den;
        if !odd.is_zero() {
            return Err(EvalError::IrrationalValue);
        }
        Ok(even)
    }

    /// Full specialization: substitute the base-point symbols and evaluate at
    /// `q0`. Exact rational arithmetic throughout.
    pub fn specialize(
        &self,
        q0: &BigRational,
        y1: &SpecValue,
        y2: &SpecValue,
    ) -> Result<BigRational, EvalError> {
        self.substitute_y(y1, y2)?.eval_q(q0)
    }
}
