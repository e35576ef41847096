//! Exact arithmetic in Z[q^{\pm 1}, t^{\pm 1}] and its fraction field Q(q,t).
//!
//! [`LaurentQT`] is a sparse Laurent polynomial in two variables with
//! arbitrary-precision integer coefficients; [`RatQT`] is a quotient of two
//! of them kept in a canonical reduced form, so that structural equality of
//! the stored data coincides with equality in Q(q,t).
//!
//! Both types support the two substitutions used throughout:
//! - `star`: (q,t) -> (q^{-1}, t^{-1}), an involution;
//! - `power(n)`: (q,t) -> (q^n, t^n), the substitution applied to a
//!   character sum when it is plugged into a power sum p_n.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

mod gcd;
mod modgcd;

/// gcd of two polynomials with min exponents 0: the fast modular route
/// with certification, falling back to the subresultant PRS.
fn gcd_qt(a: &LaurentQT, b: &LaurentQT) -> LaurentQT {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.as_monomial().is_some() || b.as_monomial().is_some() {
        // min exponents are 0, so a monomial operand is a constant
        let g = a.content().abs().gcd(&b.content().abs());
        return LaurentQT::monomial(0, 0, g);
    }
    modgcd::modular_gcd(a, b).unwrap_or_else(|| gcd::poly_gcd(a, b))
}

/// Error type for the arithmetic layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QtError {
    /// Division by the zero polynomial or zero rational function.
    DivisionByZero,
    /// A plethystic exponential of an argument with a constant term,
    /// which has no expansion as a rational function of q and t.
    OmegaOfConstant,
}

impl fmt::Display for QtError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QtError::DivisionByZero => write!(f, "division by zero in Q(q,t)"),
            QtError::OmegaOfConstant => {
                write!(f, "plethystic exponential of an argument with a constant term")
            }
        }
    }
}

impl std::error::Error for QtError {}

fn checked(e: Option<i64>) -> i64 {
    e.expect("exponent overflow in Z[q^{\\pm 1}, t^{\\pm 1}]")
}

/// A sparse Laurent polynomial in q and t over Z.
///
/// Terms map an exponent pair `(a, b)` (meaning q^a t^b) to a nonzero
/// coefficient. No zero coefficient is ever stored, so two values are equal
/// iff their term maps are identical.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentQT {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentQT {
    pub fn zero() -> Self {
        LaurentQT { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    /// c * q^a t^b
    pub fn monomial(a: i64, b: i64, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        LaurentQT { terms }
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial(0, 0, BigInt::from(c))
    }

    /// q^a t^b with coefficient 1.
    pub fn qt_pow(a: i64, b: i64) -> Self {
        Self::monomial(a, b, BigInt::one())
    }

    pub fn q() -> Self {
        Self::qt_pow(1, 0)
    }

    pub fn t() -> Self {
        Self::qt_pow(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&(0, 0)).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: i64, b: i64) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, key: (i64, i64), c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, &(-c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentQT {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentQT::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                let key = (checked(a1.checked_add(*a2)), checked(b1.checked_add(*b2)));
                out.add_term(key, &(c1 * c2));
            }
        }
        out
    }

    pub fn mul_int(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let c = BigInt::from(c);
        LaurentQT {
            terms: self.terms.iter().map(|(k, v)| (*k, v * &c)).collect(),
        }
    }

    /// Multiply by the monomial q^a t^b (an exponent shift).
    pub fn mul_monomial(&self, a: i64, b: i64) -> Self {
        LaurentQT {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), c)| {
                    ((checked(x.checked_add(a)), checked(y.checked_add(b))), c.clone())
                })
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = LaurentQT::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// (q,t) -> (q^{-1}, t^{-1}).
    pub fn star(&self) -> Self {
        LaurentQT {
            terms: self.terms.iter().map(|(&(a, b), c)| ((-a, -b), c.clone())).collect(),
        }
    }

    /// (q,t) -> (q^n, t^n) for n >= 1.
    pub fn power(&self, n: i64) -> Self {
        assert!(n >= 1, "power substitution requires n >= 1");
        LaurentQT {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| {
                    ((checked(a.checked_mul(n)), checked(b.checked_mul(n))), c.clone())
                })
                .collect(),
        }
    }

    /// Keep only the terms of total degree a + b <= d.
    pub fn truncate_total_degree(&self, d: i64) -> Self {
        LaurentQT {
            terms: self
                .terms
                .iter()
                .filter(|(&(a, b), _)| a + b <= d)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// Keep only the terms q^a t^b with b - a = color mod r.
    pub fn color_part(&self, color: i64, r: i64) -> Self {
        LaurentQT {
            terms: self
                .terms
                .iter()
                .filter(|(&(a, b), _)| (b - a).rem_euclid(r) == color.rem_euclid(r))
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    pub fn min_q(&self) -> i64 {
        self.terms.keys().map(|&(a, _)| a).min().unwrap_or(0)
    }

    pub fn min_t(&self) -> i64 {
        self.terms.keys().map(|&(_, b)| b).min().unwrap_or(0)
    }

    /// Leading term key under graded lexicographic order (total degree,
    /// then q-exponent, then t-exponent).
    fn leading_key(&self) -> Option<(i64, i64)> {
        self.terms
            .keys()
            .max_by_key(|&&(a, b)| (a + b, a, b))
            .copied()
    }

    /// gcd of all coefficients, with the sign of the graded-lex leading one.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
        }
        if let Some(k) = self.leading_key() {
            if self.terms[&k].is_negative() {
                g = -g;
            }
        }
        g
    }

    pub fn div_int_exact(&self, c: &BigInt) -> Self {
        assert!(!c.is_zero());
        LaurentQT {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| {
                    let (q, r) = v.div_rem(c);
                    assert!(r.is_zero(), "inexact integer division of coefficients");
                    (*k, q)
                })
                .collect(),
        }
    }

    /// Exact division by another Laurent polynomial; panics if not exact.
    /// Used only to divide out a known factor (a gcd).
    pub fn div_exact(&self, g: &Self) -> Self {
        self.try_div_exact(g).expect("inexact polynomial division")
    }

    /// Exact division, or None if the division leaves a remainder.
    pub fn try_div_exact(&self, g: &Self) -> Option<Self> {
        assert!(!g.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(LaurentQT::zero());
        }
        // For an exact quotient every term t satisfies componentwise
        // min(self) - min(g) <= t <= max(self) - max(g); leaving that box
        // certifies an inexact division and bounds the loop.
        let max_q = self.terms.keys().map(|&(a, _)| a).max().unwrap();
        let max_t = self.terms.keys().map(|&(_, b)| b).max().unwrap();
        let gmax_q = g.terms.keys().map(|&(a, _)| a).max().unwrap();
        let gmax_t = g.terms.keys().map(|&(_, b)| b).max().unwrap();
        let qbox = (self.min_q() - g.min_q(), max_q - gmax_q);
        let tbox = (self.min_t() - g.min_t(), max_t - gmax_t);
        let mut rem = self.clone();
        let mut quot = LaurentQT::zero();
        let glt = g.leading_key().unwrap();
        let gc = &g.terms[&glt];
        while !rem.is_zero() {
            let rlt = rem.leading_key().unwrap();
            let rc = &rem.terms[&rlt];
            let (qc, qr) = rc.div_rem(gc);
            if !qr.is_zero() {
                return None;
            }
            let key = (rlt.0 - glt.0, rlt.1 - glt.1);
            if key.0 < qbox.0 || key.0 > qbox.1 || key.1 < tbox.0 || key.1 > tbox.1 {
                return None;
            }
            let term = LaurentQT::monomial(key.0, key.1, qc);
            rem = rem.sub(&term.mul(g));
            quot = quot.add(&term);
        }
        Some(quot)
    }

    /// If this is a single term c * q^a t^b, return (a, b, c).
    pub fn as_monomial(&self) -> Option<(i64, i64, BigInt)> {
        if self.terms.len() == 1 {
            let (&(a, b), c) = self.terms.iter().next().unwrap();
            Some((a, b, c.clone()))
        } else {
            None
        }
    }

    /// Serialize as a list of [a, b, coefficient-decimal-string].
    pub fn to_serial(&self) -> Vec<(i64, i64, String)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c.to_string())).collect()
    }

    pub fn from_serial(terms: &[(i64, i64, String)]) -> Self {
        let mut out = LaurentQT::zero();
        for (a, b, s) in terms {
            let c: BigInt = s.parse().expect("invalid integer literal in serialized term");
            out.add_term((*a, *b), &c);
        }
        out
    }
}

impl fmt::Display for LaurentQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(a, b)| (a + b, a, b));
        for (i, (a, b)) in keys.iter().enumerate() {
            let c = &self.terms[&(*a, *b)];
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one();
            let has_var = *a != 0 || *b != 0;
            if !unit_coeff || !has_var {
                write!(f, "{}", mag)?;
                if has_var {
                    write!(f, " ")?;
                }
            }
            if *a != 0 {
                if *a == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{}", a)?;
                }
                if *b != 0 {
                    write!(f, " ")?;
                }
            }
            if *b != 0 {
                if *b == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{}", b)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl std::ops::Add for &LaurentQT {
    type Output = LaurentQT;
    fn add(self, rhs: &LaurentQT) -> LaurentQT {
        LaurentQT::add(self, rhs)
    }
}

impl std::ops::Sub for &LaurentQT {
    type Output = LaurentQT;
    fn sub(self, rhs: &LaurentQT) -> LaurentQT {
        LaurentQT::sub(self, rhs)
    }
}

impl std::ops::Mul for &LaurentQT {
    type Output = LaurentQT;
    fn mul(self, rhs: &LaurentQT) -> LaurentQT {
        LaurentQT::mul(self, rhs)
    }
}

impl std::ops::Neg for &LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        LaurentQT::neg(self)
    }
}

/// A rational function in q and t, stored as a reduced fraction.
///
/// Canonical form: the denominator is a polynomial whose minimal q- and
/// t-exponents are both 0 and whose graded-lex leading coefficient is
/// positive; the integer contents of numerator and denominator are coprime;
/// the polynomial gcd has been divided out. Any net monomial factor
/// q^a t^b lives in the numerator, which may therefore have negative
/// exponents. Equality of canonical forms is equality in Q(q,t).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatQT {
    num: LaurentQT,
    den: LaurentQT,
}

/// Serialized form of a [`RatQT`]: numerator and denominator term lists.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RatSerial {
    pub num: Vec<(i64, i64, String)>,
    pub den: Vec<(i64, i64, String)>,
}

impl RatQT {
    pub fn zero() -> Self {
        RatQT { num: LaurentQT::zero(), den: LaurentQT::one() }
    }

    pub fn one() -> Self {
        RatQT { num: LaurentQT::one(), den: LaurentQT::one() }
    }

    pub fn from_int(c: i64) -> Self {
        RatQT { num: LaurentQT::from_int(c), den: LaurentQT::one() }
    }

    pub fn from_laurent(p: LaurentQT) -> Self {
        RatQT { num: p, den: LaurentQT::one() }
    }

    /// Build num/den and reduce to canonical form. Panics if den = 0;
    /// fallible callers should use [`RatQT::div`].
    pub fn new(num: LaurentQT, den: LaurentQT) -> Self {
        assert!(!den.is_zero(), "RatQT with zero denominator");
        let mut r = RatQT { num, den };
        r.canonicalize();
        r
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentQT::one();
            return;
        }
        // Shift the denominator to a polynomial with min exponents 0; the
        // compensating monomial goes into the numerator.
        let (dq, dt) = (self.den.min_q(), self.den.min_t());
        self.den = self.den.mul_monomial(-dq, -dt);
        self.num = self.num.mul_monomial(-dq, -dt);
        // Record the numerator's monomial part, reduce the polynomial parts.
        let (nq, nt) = (self.num.min_q(), self.num.min_t());
        let mut num_poly = self.num.mul_monomial(-nq, -nt);
        if !self.den.is_one() {
            let g = gcd_qt(&num_poly, &self.den);
            if !g.is_one() {
                num_poly = num_poly.div_exact(&g);
                self.den = self.den.div_exact(&g);
            }
        }
        let cn = num_poly.content().abs();
        let cd = self.den.content();
        let ci = cn.gcd(&cd);
        if !ci.is_one() {
            num_poly = num_poly.div_int_exact(&ci);
            self.den = self.den.div_int_exact(&ci);
        }
        if self.den.content().is_negative() {
            num_poly = num_poly.neg();
            self.den = self.den.neg();
        }
        self.num = num_poly.mul_monomial(nq, nt);
    }

    /// Cheap normalization for fractions already known to have coprime
    /// polynomial parts: only monomial shifts, integer content and the
    /// denominator sign are adjusted.
    fn from_reduced(num: LaurentQT, den: LaurentQT) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatQT::zero();
        }
        let (dq, dt) = (den.min_q(), den.min_t());
        let den = den.mul_monomial(-dq, -dt);
        let mut num = num.mul_monomial(-dq, -dt);
        let mut den = den;
        let cn = num.content().abs();
        let cd = den.content();
        let ci = cn.gcd(&cd);
        if !ci.is_one() {
            num = num.div_int_exact(&ci);
            den = den.div_int_exact(&ci);
        }
        if den.content().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatQT { num, den }
    }

    /// Splits a Laurent polynomial into its monomial shift and a
    /// polynomial part with min exponents 0.
    fn split_monomial(p: &LaurentQT) -> ((i64, i64), LaurentQT) {
        let (a, b) = (p.min_q(), p.min_t());
        ((a, b), p.mul_monomial(-a, -b))
    }

    pub fn num(&self) -> &LaurentQT {
        &self.num
    }

    pub fn den(&self) -> &LaurentQT {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True if the value is a Laurent polynomial (denominator 1).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentQT> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Addition by Henrici's method: with reduced operands only the gcd of
    /// the denominators (and one gcd against it) is ever computed.
    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let g = gcd_qt(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            let den = self.den.mul(&other.den);
            return RatQT::from_reduced(num, den);
        }
        let d1g = self.den.div_exact(&g);
        let d2g = other.den.div_exact(&g);
        let num = self.num.mul(&d2g).add(&other.num.mul(&d1g));
        if num.is_zero() {
            return RatQT::zero();
        }
        let ((sq, st), num_poly) = Self::split_monomial(&num);
        let h = gcd_qt(&num_poly, &g);
        let num = num_poly.div_exact(&h).mul_monomial(sq, st);
        let den = d1g.mul(&other.den.div_exact(&h));
        RatQT::from_reduced(num, den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatQT { num: self.num.neg(), den: self.den.clone() }
    }

    /// Multiplication with cross-cancellation; reduced inputs give a
    /// reduced output without a final gcd.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatQT::zero();
        }
        let ((aq, at), na) = Self::split_monomial(&self.num);
        let ((bq, bt), nb) = Self::split_monomial(&other.num);
        let g1 = gcd_qt(&na, &other.den);
        let g2 = gcd_qt(&nb, &self.den);
        let num = na.div_exact(&g1).mul(&nb.div_exact(&g2)).mul_monomial(aq + bq, at + bt);
        let den = self.den.div_exact(&g2).mul(&other.den.div_exact(&g1));
        RatQT::from_reduced(num, den)
    }

    pub fn mul_laurent(&self, other: &LaurentQT) -> Self {
        self.mul(&RatQT::from_laurent(other.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, QtError> {
        if other.is_zero() {
            return Err(QtError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(RatQT::zero());
        }
        let ((aq, at), na) = Self::split_monomial(&self.num);
        let ((bq, bt), nb) = Self::split_monomial(&other.num);
        let g1 = gcd_qt(&na, &nb);
        let g2 = gcd_qt(&self.den, &other.den);
        let num = na.div_exact(&g1).mul(&other.den.div_exact(&g2)).mul_monomial(aq - bq, at - bt);
        let den = self.den.div_exact(&g2).mul(&nb.div_exact(&g1));
        Ok(RatQT::from_reduced(num, den))
    }

    pub fn inv(&self) -> Result<Self, QtError> {
        RatQT::one().div(self)
    }

    /// (q,t) -> (q^{-1}, t^{-1}); preserves reducedness, so no gcd is run.
    pub fn star(&self) -> Self {
        RatQT::from_reduced(self.num.star(), self.den.star())
    }

    pub fn power(&self, n: i64) -> Self {
        RatQT::new(self.num.power(n), self.den.power(n))
    }

    /// Equality by cross multiplication, independent of canonical forms.
    pub fn cross_mul_eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    pub fn to_serial(&self) -> RatSerial {
        RatSerial { num: self.num.to_serial(), den: self.den.to_serial() }
    }

    pub fn from_serial(s: &RatSerial) -> Self {
        RatQT::new(LaurentQT::from_serial(&s.num), LaurentQT::from_serial(&s.den))
    }
}

impl fmt::Display for RatQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl std::ops::Add for &RatQT {
    type Output = RatQT;
    fn add(self, rhs: &RatQT) -> RatQT {
        RatQT::add(self, rhs)
    }
}

impl std::ops::Sub for &RatQT {
    type Output = RatQT;
    fn sub(self, rhs: &RatQT) -> RatQT {
        RatQT::sub(self, rhs)
    }
}

impl std::ops::Mul for &RatQT {
    type Output = RatQT;
    fn mul(self, rhs: &RatQT) -> RatQT {
        RatQT::mul(self, rhs)
    }
}

impl std::ops::Neg for &RatQT {
    type Output = RatQT;
    fn neg(self) -> RatQT {
        RatQT::neg(self)
    }
}

/// Omega of a finite signed sum of monomials: for an argument
/// sum_k c_k q^{a_k} t^{b_k} with integer c_k, returns
/// prod_k (1 - q^{a_k} t^{b_k})^{-c_k}. Errors on a constant term, whose
/// plethystic exponential is not a rational function of q and t.
pub fn scalar_omega(arg: &LaurentQT) -> Result<RatQT, QtError> {
    let mut num = LaurentQT::one();
    let mut den = LaurentQT::one();
    for (&(a, b), c) in arg.terms() {
        if a == 0 && b == 0 {
            return Err(QtError::OmegaOfConstant);
        }
        let factor = LaurentQT::one().sub(&LaurentQT::qt_pow(a, b));
        let e = c.abs().try_into().unwrap_or(u32::MAX);
        if c.is_negative() {
            num = num.mul(&factor.pow(e));
        } else {
            den = den.mul(&factor.pow(e));
        }
    }
    Ok(RatQT::new(num, den))
}

/// e_k of a finite list of values: the sum over k-element subsets of the
/// product of their entries. e_0 = 1; e_k = 0 for k > len.
pub fn elementary_of_values(values: &[LaurentQT], k: usize) -> LaurentQT {
    let mut e = vec![LaurentQT::zero(); k + 1];
    e[0] = LaurentQT::one();
    for v in values {
        for j in (1..=k).rev() {
            let bump = e[j - 1].mul(v);
            e[j] = e[j].add(&bump);
        }
    }
    e[k].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> LaurentQT {
        LaurentQT::q()
    }

    fn t() -> LaurentQT {
        LaurentQT::t()
    }

    fn one() -> LaurentQT {
        LaurentQT::one()
    }

    #[test]
    fn distributivity_example() {
        // (1-q)(1-t) = 1 - q - t + qt
        let lhs = one().sub(&q()).mul(&one().sub(&t()));
        let mut rhs = LaurentQT::one();
        rhs = rhs.sub(&q()).sub(&t()).add(&q().mul(&t()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn self_division_is_one() {
        let p = one().sub(&q().mul(&t()));
        let r = RatQT::from_laurent(p.clone()).div(&RatQT::from_laurent(p)).unwrap();
        assert!(r.is_one());
    }

    #[test]
    fn geometric_factor_cancels() {
        // (1 - q^2 t^2)/(1 - qt) = 1 + qt, checked against cross multiplication
        let num = one().sub(&LaurentQT::qt_pow(2, 2));
        let den = one().sub(&LaurentQT::qt_pow(1, 1));
        let r = RatQT::new(num.clone(), den.clone());
        let expected = RatQT::from_laurent(one().add(&LaurentQT::qt_pow(1, 1)));
        assert_eq!(r, expected);
        assert!(RatQT::new(num, LaurentQT::one())
            .cross_mul_eq(&expected.mul(&RatQT::from_laurent(den))));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let r = RatQT::one().div(&RatQT::zero());
        assert_eq!(r, Err(QtError::DivisionByZero));
    }

    #[test]
    fn star_negates_exponents() {
        let p = q().mul(&LaurentQT::qt_pow(0, -2)); // q t^{-2}
        assert_eq!(p.star(), LaurentQT::qt_pow(-1, 2));
    }

    #[test]
    fn power_substitution() {
        let p = one().add(&q());
        assert_eq!(p.power(2), one().add(&LaurentQT::qt_pow(2, 0)));
    }

    #[test]
    fn star_of_fraction_canonicalizes() {
        // star((1-q)/(1-t)) = (1-q^{-1})/(1-t^{-1}); cross-multiplication check
        let f = RatQT::new(one().sub(&q()), one().sub(&t()));
        let s = f.star();
        let expect_num = RatQT::from_laurent(one().sub(&LaurentQT::qt_pow(-1, 0)));
        let expect_den = RatQT::from_laurent(one().sub(&LaurentQT::qt_pow(0, -1)));
        assert!(s.mul(&expect_den).cross_mul_eq(&expect_num));
        assert_eq!(s.star(), f);
    }

    #[test]
    fn scalar_omega_products() {
        // Omega[qt] = 1/(1-qt)
        let w = scalar_omega(&LaurentQT::qt_pow(1, 1)).unwrap();
        assert_eq!(w, RatQT::new(one(), one().sub(&LaurentQT::qt_pow(1, 1))));
        // Omega[-q - t] = (1-q)(1-t)
        let arg = q().neg().sub(&t());
        let w = scalar_omega(&arg).unwrap();
        assert_eq!(w, RatQT::from_laurent(one().sub(&q()).mul(&one().sub(&t()))));
        assert_eq!(scalar_omega(&one()), Err(QtError::OmegaOfConstant));
    }

    #[test]
    fn elementary_symmetric_of_values() {
        let vals = vec![q(), t(), LaurentQT::qt_pow(1, 1)];
        assert_eq!(elementary_of_values(&vals, 0), one());
        assert_eq!(
            elementary_of_values(&vals, 1),
            q().add(&t()).add(&LaurentQT::qt_pow(1, 1))
        );
        assert_eq!(
            elementary_of_values(&vals, 3),
            LaurentQT::qt_pow(2, 2)
        );
        assert!(elementary_of_values(&vals, 4).is_zero());
    }

    prop_compose! {
        fn arb_laurent()(terms in prop::collection::vec(((-4i64..5, -4i64..5), -6i64..7), 0..6)) -> LaurentQT {
            let mut p = LaurentQT::zero();
            for ((a, b), c) in terms {
                p = p.add(&LaurentQT::monomial(a, b, BigInt::from(c)));
            }
            p
        }
    }

    prop_compose! {
        fn arb_rat()(n in arb_laurent(), d in arb_laurent()) -> RatQT {
            if d.is_zero() {
                RatQT::from_laurent(n)
            } else {
                RatQT::new(n, d)
            }
        }
    }

    proptest! {
        #[test]
        fn canonical_mul_is_homomorphic(f in arb_rat(), g in arb_rat()) {
            let prod = f.mul(&g);
            prop_assert!(prod.cross_mul_eq(&RatQT::new(
                f.num().mul(g.num()),
                f.den().mul(g.den()),
            )));
        }

        #[test]
        fn star_is_an_involution(f in arb_rat()) {
            prop_assert_eq!(f.star().star(), f);
        }

        #[test]
        fn power_one_is_identity(f in arb_rat()) {
            prop_assert_eq!(f.power(1), f);
        }

        #[test]
        fn power_composes_multiplicatively(f in arb_rat(), m in 1i64..4, n in 1i64..4) {
            prop_assert_eq!(f.power(m).power(n), f.power(m * n));
        }

        #[test]
        fn add_sub_round_trip(f in arb_rat(), g in arb_rat()) {
            prop_assert_eq!(f.add(&g).sub(&g), f);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn equality_agrees_with_cross_multiplication(f in arb_rat(), g in arb_rat(), h in arb_laurent()) {
            // f and f * h/h are equal as fractions; unequal pairs cross-multiply unequal
            if !h.is_zero() {
                let scaled = RatQT::new(f.num().mul(&h), f.den().mul(&h));
                prop_assert_eq!(&scaled, &f);
            }
            prop_assert_eq!(f == g, f.cross_mul_eq(&g));
        }
    }
}
