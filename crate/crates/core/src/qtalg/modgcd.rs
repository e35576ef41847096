//! Modular gcd for Z[q, t]: split off integer and Z[t] contents, compute
//! the gcd of the primitive parts mod a 62-bit prime by
//! evaluation/interpolation in t, lift with symmetric representatives, and
//! certify the candidate by exact trial division over Z. Returns None when
//! the prime or the evaluation points are unlucky; the caller then falls
//! back to the subresultant PRS, so this fast path never affects
//! correctness.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::gcd::poly_gcd;
use super::LaurentQT;

const P: u64 = (1 << 61) - 1; // the Mersenne prime 2^61 - 1

fn addm(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn subm(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn mulm(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn powm(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a);
        }
        a = mulm(a, a);
        e >>= 1;
    }
    r
}

fn invm(a: u64) -> u64 {
    debug_assert!(a != 0);
    powm(a, P - 2)
}

fn to_fp(x: &BigInt) -> u64 {
    let m = x.mod_floor(&BigInt::from(P));
    let (_, digits) = m.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

/// Symmetric lift from F_p to Z.
fn lift(x: u64) -> BigInt {
    if x > P / 2 {
        BigInt::from(x) - BigInt::from(P)
    } else {
        BigInt::from(x)
    }
}

/// Dense univariate polynomial over F_p, ascending coefficients, no
/// trailing zeros.
type UMod = Vec<u64>;

fn unorm(p: &mut UMod) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn urem(a: &UMod, b: &UMod) -> UMod {
    let mut r = a.clone();
    unorm(&mut r);
    let db = b.len() - 1;
    let inv_lc = invm(*b.last().unwrap());
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = mulm(*r.last().unwrap(), inv_lc);
        for (j, &bc) in b.iter().enumerate() {
            r[k + j] = subm(r[k + j], mulm(c, bc));
        }
        unorm(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Monic gcd in F_p[x].
fn ugcd(a: &UMod, b: &UMod) -> UMod {
    let mut a = a.clone();
    let mut b = b.clone();
    unorm(&mut a);
    unorm(&mut b);
    while !b.is_empty() {
        let r = urem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(&lc) = a.last() {
        let inv = invm(lc);
        for c in a.iter_mut() {
            *c = mulm(*c, inv);
        }
    }
    a
}

fn ueval(p: &UMod, x: u64) -> u64 {
    let mut acc = 0u64;
    for &c in p.iter().rev() {
        acc = addm(mulm(acc, x), c);
    }
    acc
}

/// Newton interpolation through (xs, ys), returned in monomial form.
fn interpolate(xs: &[u64], ys: &[u64]) -> UMod {
    let n = xs.len();
    let mut divided = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = subm(divided[i], divided[i - 1]);
            let den = subm(xs[i], xs[i - level]);
            divided[i] = mulm(num, invm(den));
        }
    }
    let mut poly: UMod = Vec::new();
    for i in (0..n).rev() {
        // poly = poly * (x - xs[i]) + divided[i]
        let mut next = vec![0u64; poly.len() + 1];
        for (k, &c) in poly.iter().enumerate() {
            next[k + 1] = addm(next[k + 1], c);
            next[k] = subm(next[k], mulm(c, xs[i]));
        }
        next[0] = addm(next[0], divided[i]);
        poly = next;
        unorm(&mut poly);
    }
    poly
}

/// Bivariate polynomial over F_p: rows[i][j] is the q^i t^j coefficient.
struct BMod {
    rows: Vec<UMod>,
}

impl BMod {
    fn of(p: &LaurentQT) -> BMod {
        let dq = p.terms().map(|(&(a, _), _)| a).max().unwrap_or(0) as usize;
        let mut rows = vec![Vec::new(); dq + 1];
        for (&(a, b), c) in p.terms() {
            let row = &mut rows[a as usize];
            let b = b as usize;
            if row.len() <= b {
                row.resize(b + 1, 0);
            }
            row[b] = addm(row[b], to_fp(c));
        }
        for r in rows.iter_mut() {
            unorm(r);
        }
        BMod { rows }
    }

    fn deg_t(&self) -> usize {
        self.rows.iter().map(|r| r.len().saturating_sub(1)).max().unwrap_or(0)
    }

    fn lc_q(&self) -> &UMod {
        self.rows.last().unwrap()
    }

    /// Evaluate t = alpha, producing a univariate polynomial in q.
    fn eval_t(&self, alpha: u64) -> UMod {
        let mut out: UMod = self.rows.iter().map(|r| ueval(r, alpha)).collect();
        unorm(&mut out);
        out
    }
}

/// The Z[t]-content of a polynomial: the gcd of its q-coefficient rows.
fn t_content(p: &LaurentQT) -> LaurentQT {
    let mut rows: std::collections::BTreeMap<i64, LaurentQT> = std::collections::BTreeMap::new();
    for (&(a, b), c) in p.terms() {
        let row = rows.entry(a).or_insert_with(LaurentQT::zero);
        *row = row.add(&LaurentQT::monomial(0, b, c.clone()));
    }
    let mut g = LaurentQT::zero();
    for row in rows.values() {
        g = poly_gcd(&g, row);
        if g.is_one() {
            break;
        }
    }
    if g.content().is_negative() {
        g = g.neg();
    }
    g
}

/// Candidate gcd of two nonzero polynomials with min exponents 0, or None
/// if the modular computation is inconclusive.
pub fn modular_gcd(a: &LaurentQT, b: &LaurentQT) -> Option<LaurentQT> {
    let ca = a.content().abs();
    let cb = b.content().abs();
    let ci = ca.gcd(&cb);
    let ap = a.div_int_exact(&ca);
    let bp = b.div_int_exact(&cb);
    let cont_a = t_content(&ap);
    let cont_b = t_content(&bp);
    let pa = ap.div_exact(&cont_a);
    let pb = bp.div_exact(&cont_b);
    let cont_g = poly_gcd(&cont_a, &cont_b);
    let core = modular_core(&pa, &pb)?;
    let mut out = core.mul(&cont_g);
    if !ci.is_one() {
        out = out.mul(&LaurentQT::monomial(0, 0, ci));
    }
    if out.content().is_negative() {
        out = out.neg();
    }
    Some(out)
}

/// The leading q-coefficient of a polynomial, as a polynomial in t alone.
fn lc_q_row(p: &LaurentQT) -> LaurentQT {
    let dq = p.terms().map(|(&(a, _), _)| a).max().unwrap();
    let mut out = LaurentQT::zero();
    for (&(a, b), c) in p.terms() {
        if a == dq {
            out = out.add(&LaurentQT::monomial(0, b, c.clone()));
        }
    }
    out
}

/// gcd of two Z-primitive, Z[t]-primitive polynomials via evaluation in t
/// and interpolation, certified by trial division. The per-point monic
/// gcds are rescaled by Gamma(t), the Z[t]-gcd of the two leading
/// q-coefficients, so that the interpolated image lifts to the integer
/// polynomial (Gamma/lc(g)) * g with honest small coefficients.
fn modular_core(pa: &LaurentQT, pb: &LaurentQT) -> Option<LaurentQT> {
    let true_dq_a = pa.terms().map(|(&(x, _), _)| x).max().unwrap() as usize;
    let true_dq_b = pb.terms().map(|(&(x, _), _)| x).max().unwrap() as usize;
    if true_dq_a == 0 || true_dq_b == 0 {
        // a t-primitive polynomial of q-degree 0 is an integer, and the
        // inputs are Z-primitive
        return Some(LaurentQT::one());
    }
    let am = BMod::of(pa);
    let bm = BMod::of(pb);
    // the leading q-coefficients must survive reduction mod p
    if am.lc_q().is_empty() || bm.lc_q().is_empty() {
        return None;
    }
    let gamma_z = poly_gcd(&lc_q_row(pa), &lc_q_row(pb));
    let gamma_row: UMod = {
        let mut row = vec![0u64; gamma_z.terms().map(|(&(_, b), _)| b).max().unwrap() as usize + 1];
        for (&(_, b), c) in gamma_z.terms() {
            row[b as usize] = addm(row[b as usize], to_fp(c));
        }
        unorm(&mut row);
        row
    };
    if gamma_row.is_empty() {
        return None;
    }
    let dt_bound = am.deg_t().min(bm.deg_t()) + gamma_row.len();
    let mut points: Vec<u64> = Vec::new();
    let mut images: Vec<UMod> = Vec::new();
    let mut gdeg = usize::MAX;
    let mut alpha = 1u64;
    let mut tries = 0u64;
    while points.len() < dt_bound + 1 {
        tries += 1;
        if tries > 4 * (dt_bound as u64 + 4) {
            return None;
        }
        let x = alpha;
        alpha += 1;
        if ueval(am.lc_q(), x) == 0 || ueval(bm.lc_q(), x) == 0 {
            continue;
        }
        let g = ugcd(&am.eval_t(x), &bm.eval_t(x));
        if g.len() == 1 {
            return Some(LaurentQT::one());
        }
        let d = g.len() - 1;
        if d > gdeg {
            continue; // unlucky evaluation point
        }
        if d < gdeg {
            gdeg = d;
            points.clear();
            images.clear();
        }
        let scale = ueval(&gamma_row, x);
        points.push(x);
        images.push(g.iter().map(|&c| mulm(c, scale)).collect());
    }
    // interpolate each q-coefficient in t
    let n = points.len();
    let mut rows: Vec<UMod> = Vec::with_capacity(gdeg + 1);
    for i in 0..=gdeg {
        let vals: Vec<u64> = images.iter().map(|img| img.get(i).copied().unwrap_or(0)).collect();
        debug_assert_eq!(vals.len(), n);
        rows.push(interpolate(&points, &vals));
    }
    let mut lifted = LaurentQT::zero();
    for (i, r) in rows.iter().enumerate() {
        for (j, &c) in r.iter().enumerate() {
            if c != 0 {
                lifted = lifted.add(&LaurentQT::monomial(i as i64, j as i64, lift(c)));
            }
        }
    }
    if lifted.is_zero() {
        return None;
    }
    // remove the cofactor Gamma/lc(g): integer content plus Z[t]-content
    let content = lifted.content();
    let mut candidate = lifted.div_int_exact(&content);
    let tc = t_content(&candidate);
    if !tc.is_one() {
        candidate = candidate.div_exact(&tc);
    }
    pa.try_div_exact(&candidate)?;
    pb.try_div_exact(&candidate)?;
    Some(candidate)
}
