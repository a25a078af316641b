//! The fraction field `K`. Every value is stored in canonical reduced form:
//! the denominator is an ordinary polynomial, not divisible by any variable,
//! with positive leading coefficient, and shares no factor (including integer
//! content) with the polynomial part of the numerator. Equality is structural.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use super::gcd::{exact_div, gcd};
use super::poly::{LaurentPoly, Mono};
use super::Exponent;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScalarK {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl ScalarK {
    pub fn zero() -> Self {
        ScalarK { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        ScalarK { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn int(k: i64) -> Self {
        ScalarK { num: LaurentPoly::int(k), den: LaurentPoly::one() }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        ScalarK { num: p, den: LaurentPoly::one() }
    }

    pub fn monomial(coeff: BigInt, mono: Mono) -> Self {
        ScalarK { num: LaurentPoly::monomial(coeff, mono), den: LaurentPoly::one() }
    }

    /// The monomial `q^e`.
    pub fn q_power(e: Exponent) -> Self {
        Self::monomial(BigInt::from(1), e.mono())
    }

    /// Build `num/den` in canonical form.
    pub fn ratio(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        // Strip Laurent units so gcd runs on ordinary polynomials.
        let (mn, pn) = num.mono_split();
        let (md, pd) = den.mono_split();
        let g = gcd(&pn, &pd);
        let mut n = exact_div(&pn, &g);
        let mut d = exact_div(&pd, &g);
        if d.leading().map_or(false, |(_, c)| c.is_negative()) {
            n = -&n;
            d = -&d;
        }
        let shift: Mono = [mn[0] - md[0], mn[1] - md[1], mn[2] - md[2]];
        ScalarK { num: n.shift(shift), den: d }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// A unit of the Laurent ring: `± monomial / monomial`.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.num.is_monomial() && self.den.is_monomial()
    }

    pub fn div(&self, rhs: &ScalarK) -> Option<ScalarK> {
        if rhs.is_zero() {
            return None;
        }
        Some(Self::ratio(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn inv(&self) -> Option<ScalarK> {
        Self::one().div(self)
    }

    pub fn pow(&self, k: i64) -> ScalarK {
        if k < 0 {
            return self.inv().expect("inverse of zero").pow(-k);
        }
        let mut out = ScalarK::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl Add for &ScalarK {
    type Output = ScalarK;
    fn add(self, rhs: &ScalarK) -> ScalarK {
        if self.den.is_one() && rhs.den.is_one() {
            return ScalarK { num: &self.num + &rhs.num, den: LaurentPoly::one() };
        }
        ScalarK::ratio(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &ScalarK {
    type Output = ScalarK;
    fn sub(self, rhs: &ScalarK) -> ScalarK {
        self + &(-rhs)
    }
}

impl Neg for &ScalarK {
    type Output = ScalarK;
    fn neg(self) -> ScalarK {
        ScalarK { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &ScalarK {
    type Output = ScalarK;
    fn mul(self, rhs: &ScalarK) -> ScalarK {
        if self.is_zero() || rhs.is_zero() {
            return ScalarK::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return ScalarK { num: &self.num * &rhs.num, den: LaurentPoly::one() };
        }
        ScalarK::ratio(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for ScalarK {
            type Output = ScalarK;
            fn $method(self, rhs: ScalarK) -> ScalarK {
                $trait::$method(&self, &rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ScalarK {
    type Output = ScalarK;
    fn neg(self) -> ScalarK {
        -&self
    }
}

impl fmt::Display for ScalarK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = alloc::format!("{}", self.num);
        let den = alloc::format!("{}", self.den);
        let wrap = |s: String, multi: bool| -> String {
            if multi || s.contains(' ') {
                alloc::format!("({})", s)
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(num, self.num.num_terms() > 1), wrap(den, self.den.num_terms() > 1))
    }
}

impl fmt::Debug for ScalarK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
