//! Polynomial gcd in Z[q, t] via the subresultant PRS, viewing a bivariate
//! polynomial as a univariate polynomial in q with coefficients in Z[t].
//!
//! Inputs are assumed to be genuine polynomials (no negative exponents);
//! the caller shifts Laurent polynomials before reducing fractions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::LaurentQT;

/// Univariate polynomial over Z, dense coefficients by ascending degree.
/// The representation is kept normalized: no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
struct UPoly(Vec<BigInt>);

impl UPoly {
    fn zero() -> Self {
        UPoly(Vec::new())
    }

    fn constant(c: BigInt) -> Self {
        let mut p = UPoly(vec![c]);
        p.normalize();
        p
    }

    fn one() -> Self {
        Self::constant(BigInt::one())
    }

    fn normalize(&mut self) {
        while self.0.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.0.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lc(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_else(BigInt::zero)
    }

    fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] += c;
        }
        let mut p = UPoly(out);
        p.normalize();
        p
    }

    fn neg(&self) -> Self {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        let mut p = UPoly(out);
        p.normalize();
        p
    }

    fn mul_scalar(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UPoly(self.0.iter().map(|x| x * c).collect())
    }

    fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.0.iter().cloned());
        UPoly(out)
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
        }
        g
    }

    fn div_scalar_exact(&self, c: &BigInt) -> Self {
        UPoly(
            self.0
                .iter()
                .map(|x| {
                    let (q, r) = x.div_rem(c);
                    debug_assert!(r.is_zero());
                    q
                })
                .collect(),
        )
    }

    /// Exact division; panics if not exact.
    fn div_exact(&self, g: &Self) -> Self {
        assert!(!g.is_zero());
        let mut rem = self.clone();
        let mut quot = vec![BigInt::zero(); self.0.len().saturating_sub(g.0.len()) + 1];
        while !rem.is_zero() && rem.degree() >= g.degree() {
            let (q, r) = rem.lc().div_rem(&g.lc());
            assert!(r.is_zero(), "inexact univariate division");
            let k = rem.degree() - g.degree();
            quot[k] = q.clone();
            let sub = g.mul_scalar(&q).shift(k);
            rem = rem.add(&sub.neg());
        }
        assert!(rem.is_zero(), "inexact univariate division (remainder)");
        let mut p = UPoly(quot);
        p.normalize();
        p
    }

    /// Pseudo-remainder: lc(g)^{deg f - deg g + 1} f = q g + r. The full
    /// power of lc(g) is applied even when the degree drops by more than
    /// one per elimination step.
    fn pseudo_rem(&self, g: &Self) -> Self {
        let glc = g.lc();
        let gd = g.degree();
        let mut rem = self.clone();
        let mut e = self.degree() as i64 - gd as i64 + 1;
        while !rem.is_zero() && rem.degree() >= gd {
            let k = rem.degree() - gd;
            let rlc = rem.lc();
            rem = rem.mul_scalar(&glc).add(&g.mul_scalar(&rlc).shift(k).neg());
            e -= 1;
        }
        for _ in 0..e.max(0) {
            rem = rem.mul_scalar(&glc);
        }
        rem
    }

    fn pow_usize(&self, n: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }
}

/// gcd in Z[t] by the subresultant PRS, made positive and primitive-scaled
/// by the integer content gcd of the inputs.
fn upoly_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_zero() {
        return positive(b.clone());
    }
    if b.is_zero() {
        return positive(a.clone());
    }
    let ca = a.content();
    let cb = b.content();
    let c = ca.gcd(&cb);
    let mut f = a.div_scalar_exact(&ca);
    let mut g = b.div_scalar_exact(&cb);
    if f.degree() < g.degree() {
        std::mem::swap(&mut f, &mut g);
    }
    let mut gg = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let d = f.degree() - g.degree();
        let r = f.pseudo_rem(&g);
        if r.is_zero() {
            let prim = g.div_scalar_exact(&g.content());
            return positive(prim.mul_scalar(&c));
        }
        if r.degree() == 0 {
            return positive(UPoly::constant(c));
        }
        f = g;
        let mut divisor = gg.clone();
        for _ in 0..d {
            divisor *= &h;
        }
        g = r.div_scalar_exact(&divisor);
        gg = f.lc();
        h = if d == 0 {
            h
        } else {
            // h <- g^d / h^{d-1}, an exact integer division
            let mut numer = BigInt::one();
            for _ in 0..d {
                numer *= &gg;
            }
            let mut denom = BigInt::one();
            for _ in 0..d - 1 {
                denom *= &h;
            }
            let (q, rr) = numer.div_rem(&denom);
            debug_assert!(rr.is_zero());
            q
        };
    }
}

fn positive(p: UPoly) -> UPoly {
    if p.lc().is_negative() {
        p.neg()
    } else {
        p
    }
}

/// Bivariate polynomial as a vector of Z[t] coefficients by q-degree.
#[derive(Clone, PartialEq, Eq, Debug)]
struct BPoly(Vec<UPoly>);

impl BPoly {
    fn normalize(&mut self) {
        while self.0.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.0.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lc(&self) -> UPoly {
        self.0.last().cloned().unwrap_or_else(UPoly::zero)
    }

    fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![UPoly::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] = out[i].add(c);
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] = out[i].add(c);
        }
        let mut p = BPoly(out);
        p.normalize();
        p
    }

    fn neg(&self) -> Self {
        BPoly(self.0.iter().map(|c| c.neg()).collect())
    }

    fn mul_upoly(&self, c: &UPoly) -> Self {
        if c.is_zero() {
            return BPoly(Vec::new());
        }
        let mut p = BPoly(self.0.iter().map(|x| x.mul(c)).collect());
        p.normalize();
        p
    }

    fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return BPoly(Vec::new());
        }
        let mut out = vec![UPoly::zero(); k];
        out.extend(self.0.iter().cloned());
        BPoly(out)
    }

    fn content(&self) -> UPoly {
        let mut g = UPoly::zero();
        for c in &self.0 {
            g = upoly_gcd(&g, c);
        }
        g
    }

    fn div_upoly_exact(&self, c: &UPoly) -> Self {
        BPoly(self.0.iter().map(|x| x.div_exact(c)).collect())
    }

    fn pseudo_rem(&self, g: &Self) -> Self {
        let glc = g.lc();
        let gd = g.degree();
        let mut rem = self.clone();
        let mut e = self.degree() as i64 - gd as i64 + 1;
        while !rem.is_zero() && rem.degree() >= gd {
            let k = rem.degree() - gd;
            let rlc = rem.lc();
            rem = rem.mul_upoly(&glc).add(&g.mul_upoly(&rlc).shift(k).neg());
            e -= 1;
        }
        for _ in 0..e.max(0) {
            rem = rem.mul_upoly(&glc);
        }
        rem
    }
}

fn to_bpoly(p: &LaurentQT) -> BPoly {
    debug_assert!(p.min_q() >= 0 && p.min_t() >= 0);
    let qd = p.terms().map(|(&(a, _), _)| a).max().unwrap_or(0) as usize;
    let mut coeffs = vec![Vec::new(); qd + 1];
    for (&(a, b), c) in p.terms() {
        let row = &mut coeffs[a as usize];
        let b = b as usize;
        if row.len() <= b {
            row.resize(b + 1, BigInt::zero());
        }
        row[b] = c.clone();
    }
    let mut p = BPoly(
        coeffs
            .into_iter()
            .map(|v| {
                let mut u = UPoly(v);
                u.normalize();
                u
            })
            .collect(),
    );
    p.normalize();
    p
}

fn from_bpoly(p: &BPoly) -> LaurentQT {
    let mut out = LaurentQT::zero();
    for (a, u) in p.0.iter().enumerate() {
        for (b, c) in u.0.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&LaurentQT::monomial(a as i64, b as i64, c.clone()));
            }
        }
    }
    out
}

/// Primitive gcd of two polynomials in Z[q, t] (subresultant PRS in q over
/// Z[t]). The result is defined up to sign; it is normalized so that its
/// graded-lex leading coefficient is positive.
pub fn poly_gcd(a: &LaurentQT, b: &LaurentQT) -> LaurentQT {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let pa = to_bpoly(a);
    let pb = to_bpoly(b);
    // gcd of the Z[t] contents, carried along the q-level gcd
    let ca = pa.content();
    let cb = pb.content();
    let c = upoly_gcd(&ca, &cb);
    let mut f = pa.div_upoly_exact(&ca);
    let mut g = pb.div_upoly_exact(&cb);
    if f.degree() < g.degree() {
        std::mem::swap(&mut f, &mut g);
    }
    let mut gg = UPoly::one();
    let mut h = UPoly::one();
    let result = loop {
        let d = f.degree() - g.degree();
        let r = f.pseudo_rem(&g);
        if r.is_zero() {
            let prim = g.div_upoly_exact(&g.content());
            break prim.mul_upoly(&c);
        }
        if r.degree() == 0 {
            break BPoly(vec![c]);
        }
        f = g;
        let divisor = gg.mul(&h.pow_usize(d));
        g = r.div_upoly_exact(&divisor);
        gg = f.lc();
        h = if d == 0 {
            h
        } else {
            gg.pow_usize(d).div_exact(&h.pow_usize(d - 1))
        };
    };
    let mut out = from_bpoly(&result);
    if out.content().is_negative() {
        out = out.neg();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64, i64)]) -> LaurentQT {
        let mut p = LaurentQT::zero();
        for &(a, b, c) in terms {
            p = p.add(&LaurentQT::monomial(a, b, BigInt::from(c)));
        }
        p
    }

    #[test]
    fn gcd_of_coprime_is_constant() {
        let a = lp(&[(0, 0, 1), (1, 0, -1)]); // 1 - q
        let b = lp(&[(0, 0, 1), (0, 1, -1)]); // 1 - t
        assert_eq!(poly_gcd(&a, &b), LaurentQT::one());
    }

    #[test]
    fn gcd_extracts_common_factor() {
        // (1 - q^2 t^2) and (1 - qt) share (1 - qt)
        let a = lp(&[(0, 0, 1), (2, 2, -1)]);
        let b = lp(&[(0, 0, 1), (1, 1, -1)]);
        let g = poly_gcd(&a, &b);
        // normalized with positive graded-lex leading coefficient: qt - 1
        assert_eq!(g, lp(&[(0, 0, -1), (1, 1, 1)]));
        assert!(a.div_exact(&g).mul(&g) == a);
    }

    #[test]
    fn gcd_with_integer_content() {
        let a = lp(&[(0, 0, 2), (1, 0, 2)]); // 2(1 + q)
        let b = lp(&[(0, 0, 4), (0, 1, 4)]); // 4(1 + t)
        assert_eq!(poly_gcd(&a, &b), lp(&[(0, 0, 2)]));
    }

    #[test]
    fn gcd_nontrivial_bivariate() {
        // g = q + t, f1 = g (q - t), f2 = g (1 + qt)
        let g = lp(&[(1, 0, 1), (0, 1, 1)]);
        let f1 = g.mul(&lp(&[(1, 0, 1), (0, 1, -1)]));
        let f2 = g.mul(&lp(&[(0, 0, 1), (1, 1, 1)]));
        assert_eq!(poly_gcd(&f1, &f2), g);
    }

    #[test]
    fn gcd_higher_power() {
        let g = lp(&[(0, 0, 1), (1, 1, -1)]); // 1 - qt
        let f1 = g.mul(&g).mul(&lp(&[(1, 0, 1)]));
        let f2 = g.mul(&lp(&[(0, 1, 3)]));
        let d = poly_gcd(&f1, &f2);
        assert!(f1.div_exact(&d).mul(&d) == f1);
        assert!(f2.div_exact(&d).mul(&d) == f2);
        assert_eq!(d.num_terms(), 2);
    }
}
