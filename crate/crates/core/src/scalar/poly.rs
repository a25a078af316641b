//! Laurent polynomials in `v, y1, y2` with arbitrary-precision integer
//! coefficients. Monomials are kept sorted by exponent; no zero coefficients
//! are stored, so structural equality is semantic equality.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exponent vector of a monomial `v^m[0] * y1^m[1] * y2^m[2]`.
pub type Mono = [i64; 3];

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Mono, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), [0, 0, 0])
    }

    pub fn int(k: i64) -> Self {
        Self::monomial(BigInt::from(k), [0, 0, 0])
    }

    pub fn monomial(coeff: BigInt, mono: Mono) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Mono, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0, 0, 0]).map_or(false, |c| c.is_one())
    }

    /// Single-term test: Laurent monomials are the units of the ring.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Mono) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, m: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Leading term in lexicographic order on `(v, y1, y2)` exponents.
    pub fn leading(&self) -> Option<(&Mono, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Componentwise minimum of all exponent vectors.
    pub fn min_exponents(&self) -> Mono {
        let mut m = [i64::MAX; 3];
        for k in self.terms.keys() {
            for i in 0..3 {
                m[i] = m[i].min(k[i]);
            }
        }
        m
    }

    /// Multiply by the monomial `v^s[0] y1^s[1] y2^s[2]`.
    pub fn shift(&self, s: Mono) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| ([m[0] + s[0], m[1] + s[1], m[2] + s[2]], c.clone()))
                .collect(),
        }
    }

    /// Split off the monomial content: returns `(m, p)` with `self = m * p`
    /// and `p` having minimum exponent 0 in every variable. Zero splits as
    /// `([0,0,0], 0)`.
    pub fn mono_split(&self) -> (Mono, LaurentPoly) {
        if self.is_zero() {
            return ([0, 0, 0], Self::zero());
        }
        let m = self.min_exponents();
        ([m[0], m[1], m[2]], self.shift([-m[0], -m[1], -m[2]]))
    }

    /// gcd of all integer coefficients (positive; zero for the zero poly).
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = num_integer::Integer::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect() }
    }

    /// Exact division by an integer; panics if not exact.
    pub fn div_int(&self, k: &BigInt) -> Self {
        assert!(!k.is_zero());
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let (q, r) = num_integer::Integer::div_rem(c, k);
                    assert!(r.is_zero(), "non-exact integer division in polynomial");
                    (*m, q)
                })
                .collect(),
        }
    }

    /// Degree spread (max - min exponent) in variable `var`; 0 for zero.
    pub fn spread(&self, var: usize) -> i64 {
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for m in self.terms.keys() {
            lo = lo.min(m[var]);
            hi = hi.max(m[var]);
        }
        if self.terms.is_empty() {
            0
        } else {
            hi - lo
        }
    }

    pub(crate) fn map_ref<'a>(&'a self) -> &'a BTreeMap<Mono, BigInt> {
        &self.terms
    }

    fn fmt_monomial(m: &Mono, c: &BigInt, out: &mut String) {
        use core::fmt::Write;
        let mut parts: Vec<String> = Vec::new();
        let a2 = m[0];
        if a2 != 0 {
            if a2 % 2 == 0 {
                let k = a2 / 2;
                if k == 1 {
                    parts.push(String::from("q"));
                } else {
                    parts.push(alloc::format!("q^{}", k));
                }
            } else {
                parts.push(alloc::format!("q^({}/2)", a2));
            }
        }
        for (sym, e) in [("y1", m[1]), ("y2", m[2])] {
            if e == 1 {
                parts.push(String::from(sym));
            } else if e != 0 {
                parts.push(alloc::format!("{}^{}", sym, e));
            }
        }
        let abs = c.abs();
        if parts.is_empty() {
            let _ = write!(out, "{}", abs);
        } else {
            if !abs.is_one() {
                let _ = write!(out, "{}*", abs);
            }
            out.push_str(&parts.join("*"));
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut s = String::new();
        // Descending lex order: leading monomial first.
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    s.push('-');
                }
            } else if c.is_negative() {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            Self::fmt_monomial(m, c, &mut s);
        }
        write!(f, "{}", s)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in rhs.terms.iter() {
                out.add_term([m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]], c1 * c2);
            }
        }
        out
    }
}
