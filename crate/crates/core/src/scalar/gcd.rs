//! Multivariate polynomial gcd over `Z` by primitive pseudo-remainder
//! sequences, recursing through the variables, plus exact division. Inputs
//! here are ordinary polynomials (no negative exponents); the fraction layer
//! strips Laurent units before reducing.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::poly::{LaurentPoly, Mono};

/// A polynomial seen as univariate in `var` with polynomial coefficients.
fn coeff_map(p: &LaurentPoly, var: usize) -> BTreeMap<i64, LaurentPoly> {
    let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
    for (m, c) in p.terms() {
        let mut rest = *m;
        let d = rest[var];
        rest[var] = 0;
        out.entry(d).or_insert_with(LaurentPoly::zero).add_term(rest, c.clone());
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn from_coeff_map(map: &BTreeMap<i64, LaurentPoly>, var: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (d, c) in map {
        for (m, k) in c.terms() {
            let mut mm = *m;
            mm[var] = *d;
            out.add_term(mm, k.clone());
        }
    }
    out
}

fn degree_in(p: &LaurentPoly, var: usize) -> i64 {
    p.terms().map(|(m, _)| m[var]).max().unwrap_or(0)
}

fn leading_coeff_in(p: &LaurentPoly, var: usize) -> LaurentPoly {
    let d = degree_in(p, var);
    let mut out = LaurentPoly::zero();
    for (m, c) in p.terms() {
        if m[var] == d {
            let mut mm = *m;
            mm[var] = 0;
            out.add_term(mm, c.clone());
        }
    }
    out
}

/// Multiply `p` by `x_var^k`.
fn mul_var_pow(p: &LaurentPoly, var: usize, k: i64) -> LaurentPoly {
    let mut s: Mono = [0, 0, 0];
    s[var] = k;
    p.shift(s)
}

/// Pseudo-remainder of `a` by `b` in variable `var`: the remainder of
/// `lc(b)^(deg a - deg b + 1) * a` under division by `b`.
fn prem(a: &LaurentPoly, b: &LaurentPoly, var: usize) -> LaurentPoly {
    let db = degree_in(b, var);
    let lb = leading_coeff_in(b, var);
    let mut r = a.clone();
    let mut dr = degree_in(&r, var);
    while !r.is_zero() && dr >= db {
        let lr = leading_coeff_in(&r, var);
        // r <- lb*r - lr*x^(dr-db)*b
        let t = mul_var_pow(&(&lr * b), var, dr - db);
        r = &(&lb * &r) - &t;
        let new_dr = degree_in(&r, var);
        debug_assert!(r.is_zero() || new_dr < dr);
        dr = new_dr;
    }
    r
}

/// Content of `p` w.r.t. `var`: gcd of its polynomial coefficients.
fn content_in(p: &LaurentPoly, var: usize) -> LaurentPoly {
    let cm = coeff_map(p, var);
    let mut g = LaurentPoly::zero();
    for c in cm.values() {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// gcd of two ordinary polynomials over `Z` (nonnegative exponents), unique
/// up to sign; the result has a positive leading coefficient.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return positive_lead(b.clone());
    }
    if b.is_zero() {
        return positive_lead(a.clone());
    }
    // Fast path: both constants.
    let var = (0..3).rev().find(|&v| a.spread(v) > 0 || b.spread(v) > 0);
    let var = match var {
        None => {
            let ca = a.int_content();
            let cb = b.int_content();
            return LaurentPoly::monomial(num_integer::Integer::gcd(&ca, &cb), [0, 0, 0]);
        }
        Some(v) => v,
    };
    // Monomial fast path: gcd(m, p) = gcd-of-contents * common variable part.
    if a.is_monomial() || b.is_monomial() {
        return monomial_gcd(a, b);
    }

    let ca = content_in(a, var);
    let cb = content_in(b, var);
    let cg = gcd(&ca, &cb);
    let mut p = exact_div(a, &ca);
    let mut q = exact_div(b, &cb);
    if degree_in(&p, var) < degree_in(&q, var) {
        core::mem::swap(&mut p, &mut q);
    }
    // Primitive PRS.
    loop {
        let r = prem(&p, &q, var);
        if r.is_zero() {
            break;
        }
        let c = content_in(&r, var);
        p = q;
        q = exact_div(&r, &c);
    }
    positive_lead(&cg * &q)
}

fn monomial_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let ca = a.int_content();
    let cb = b.int_content();
    let c = num_integer::Integer::gcd(&ca, &cb);
    let ma = a.min_exponents();
    let mb = b.min_exponents();
    let mono: Mono = [ma[0].min(mb[0]), ma[1].min(mb[1]), ma[2].min(mb[2])];
    LaurentPoly::monomial(c, mono)
}

fn positive_lead(p: LaurentPoly) -> LaurentPoly {
    match p.leading() {
        Some((_, c)) if c.is_negative() => -&p,
        _ => p,
    }
}

/// Exact multivariate division; panics if the division is not exact (which
/// would indicate a broken gcd invariant upstream).
pub fn exact_div(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    assert!(!b.is_zero(), "division by zero polynomial");
    if b.is_one() {
        return a.clone();
    }
    if b.is_monomial() {
        let (bm, _) = b.mono_split();
        let bc = b.terms().next().unwrap().1.clone();
        return a.shift([-bm[0], -bm[1], -bm[2]]).div_int(&bc);
    }
    let mut r = a.clone();
    let mut quo: Vec<(Mono, BigInt)> = Vec::new();
    let (lb_m, lb_c) = {
        let (m, c) = b.leading().unwrap();
        (*m, c.clone())
    };
    while !r.is_zero() {
        let (lr_m, lr_c) = {
            let (m, c) = r.leading().unwrap();
            (*m, c.clone())
        };
        let qm: Mono = [lr_m[0] - lb_m[0], lr_m[1] - lb_m[1], lr_m[2] - lb_m[2]];
        let (qc, rem) = num_integer::Integer::div_rem(&lr_c, &lb_c);
        assert!(rem.is_zero(), "non-exact polynomial division (coefficient)");
        assert!(!qc.is_zero(), "non-exact polynomial division (degree)");
        let t = b.shift(qm).scale_int(&qc);
        r = &r - &t;
        quo.push((qm, qc));
    }
    LaurentPoly::from_terms(quo)
}

/// True iff `b` divides `a` exactly (no panic).
pub fn divides(b: &LaurentPoly, a: &LaurentPoly) -> bool {
    if a.is_zero() {
        return true;
    }
    if b.is_zero() {
        return false;
    }
    // Trial division mirroring exact_div but bailing out.
    let (lb_m, lb_c) = {
        let (m, c) = b.leading().unwrap();
        (*m, c.clone())
    };
    let mut r = a.clone();
    while !r.is_zero() {
        let (lr_m, lr_c) = {
            let (m, c) = r.leading().unwrap();
            (*m, c.clone())
        };
        let qm: Mono = [lr_m[0] - lb_m[0], lr_m[1] - lb_m[1], lr_m[2] - lb_m[2]];
        let (qc, rem) = num_integer::Integer::div_rem(&lr_c, &lb_c);
        if !rem.is_zero() || qc.is_zero() {
            return false;
        }
        let t = b.shift(qm).scale_int(&qc);
        r = &r - &t;
    }
    true
}

