//! Multisymmetric functions over Q(q,t).
//!
//! An element of the r-fold tensor of symmetric function rings is stored as
//! a sparse map from multipartition labels to coefficients, tagged with the
//! basis (p, m, h, e or s, applied per color). The power sum basis is the
//! computational hub: every conversion, pairing and plethysm is routed
//! through it.
//!
//! Vector plethysm follows the epsilon-calculus: a linear map A on the
//! colored coordinates acts through
//!   p_n[eps_i A X*] = sum_j A_ij(q^n, t^n) p_n[X^(j)],
//! and virtual alphabets evaluate through p_n[eps_i Y*] = Y^(i)(q^n, t^n).
//! The color matrices sigma, iota, M_k = (1 - q sigma^k)(1 - t sigma^{-k})
//! and the color parts of 1/M_0 provide all the maps used downstream.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::partition::Partition;
use crate::qtalg::{LaurentQT, QtError, RatQT};

/// An r-tuple of partitions indexed by Z/rZ.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiPartition {
    comps: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(comps: Vec<Partition>) -> Self {
        MultiPartition { comps }
    }

    pub fn empty(r: usize) -> Self {
        MultiPartition { comps: vec![Partition::empty(); r] }
    }

    /// The multipartition with a single nonempty component.
    pub fn single(r: usize, color: usize, lam: Partition) -> Self {
        let mut comps = vec![Partition::empty(); r];
        comps[color % r] = lam;
        MultiPartition { comps }
    }

    pub fn r(&self) -> usize {
        self.comps.len()
    }

    pub fn comp(&self, i: usize) -> &Partition {
        &self.comps[i.rem_euclid(self.comps.len())]
    }

    pub fn comps(&self) -> &[Partition] {
        &self.comps
    }

    pub fn size(&self) -> u64 {
        self.comps.iter().map(|p| p.size()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.iter().all(|p| p.is_empty())
    }

    /// Componentwise multiset union of parts (the label of a product of
    /// power sums).
    pub fn merge(&self, other: &MultiPartition) -> MultiPartition {
        assert_eq!(self.r(), other.r());
        let comps = self
            .comps
            .iter()
            .zip(&other.comps)
            .map(|(a, b)| {
                let mut parts: Vec<u32> = a.parts().iter().chain(b.parts()).copied().collect();
                parts.sort_unstable_by(|x, y| y.cmp(x));
                Partition::new(parts)
            })
            .collect();
        MultiPartition { comps }
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// The classical bases, applied per color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    P,
    M,
    H,
    E,
    S,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Basis::P => 'p',
            Basis::M => 'm',
            Basis::H => 'h',
            Basis::E => 'e',
            Basis::S => 's',
        };
        write!(f, "{}", c)
    }
}

/// z_lambda = prod_i i^{m_i} m_i!.
pub fn z_factor(lam: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
    for &p in lam.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    for (p, m) in mult {
        for _ in 0..m {
            z *= BigInt::from(p);
        }
        for k in 1..=m {
            z *= BigInt::from(k);
        }
    }
    z
}

// ---------------------------------------------------------------------------
// Single-color conversion tables, cached per (basis, degree)
// ---------------------------------------------------------------------------

struct ConvTable {
    index: HashMap<Partition, usize>,
    /// expansion of basis element lambda in power sums
    b2p: Vec<BTreeMap<Partition, RatQT>>,
    /// expansion of p_lambda in basis elements
    p2b: Vec<BTreeMap<Partition, RatQT>>,
}

fn conv_cache() -> &'static Mutex<HashMap<(Basis, u32), &'static ConvTable>> {
    static CACHE: OnceLock<Mutex<HashMap<(Basis, u32), &'static ConvTable>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn rat_int(n: i64) -> RatQT {
    RatQT::from_int(n)
}

fn rat_big(n: BigInt) -> RatQT {
    RatQT::from_laurent(LaurentQT::monomial(0, 0, n))
}

/// h_n = sum_{mu |- n} p_mu / z_mu.
fn h_to_p(n: u32) -> BTreeMap<Partition, RatQT> {
    Partition::all_of(n)
        .into_iter()
        .map(|mu| {
            let z = rat_big(z_factor(&mu));
            (mu, RatQT::one().div(&z).unwrap())
        })
        .collect()
}

/// e_n = sum_{mu |- n} (-1)^{n - l(mu)} p_mu / z_mu.
fn e_to_p(n: u32) -> BTreeMap<Partition, RatQT> {
    Partition::all_of(n)
        .into_iter()
        .map(|mu| {
            let sign = if (n as usize - mu.len()).is_multiple_of(2) { 1 } else { -1 };
            let z = rat_big(z_factor(&mu));
            let c = rat_int(sign).div(&z).unwrap();
            (mu, c)
        })
        .collect()
}

fn p_map_mul(
    a: &BTreeMap<Partition, RatQT>,
    b: &BTreeMap<Partition, RatQT>,
) -> BTreeMap<Partition, RatQT> {
    let mut out: BTreeMap<Partition, RatQT> = BTreeMap::new();
    for (la, ca) in a {
        for (lb, cb) in b {
            let mut parts: Vec<u32> = la.parts().iter().chain(lb.parts()).copied().collect();
            parts.sort_unstable_by(|x, y| y.cmp(x));
            let key = Partition::new(parts);
            let c = ca.mul(cb);
            match out.get_mut(&key) {
                Some(v) => {
                    *v = v.add(&c);
                    if v.is_zero() {
                        out.remove(&key);
                    }
                }
                None => {
                    if !c.is_zero() {
                        out.insert(key, c);
                    }
                }
            }
        }
    }
    out
}

fn p_map_scale_add(
    acc: &mut BTreeMap<Partition, RatQT>,
    term: &BTreeMap<Partition, RatQT>,
    scale: &RatQT,
) {
    for (k, v) in term {
        let c = v.mul(scale);
        match acc.get_mut(k) {
            Some(existing) => {
                *existing = existing.add(&c);
                if existing.is_zero() {
                    acc.remove(k);
                }
            }
            None => {
                if !c.is_zero() {
                    acc.insert(k.clone(), c);
                }
            }
        }
    }
}

/// Product basis element b_lambda = prod b_{lambda_i} expanded in p.
fn product_to_p(
    n_to_p: impl Fn(u32) -> BTreeMap<Partition, RatQT>,
    lam: &Partition,
) -> BTreeMap<Partition, RatQT> {
    let mut acc: BTreeMap<Partition, RatQT> = BTreeMap::new();
    acc.insert(Partition::empty(), RatQT::one());
    for &part in lam.parts() {
        acc = p_map_mul(&acc, &n_to_p(part));
    }
    acc
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..n).collect();
    fn rec(k: usize, idx: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if k == idx.len() {
            out.push((idx.clone(), sign));
            return;
        }
        for i in k..idx.len() {
            idx.swap(k, i);
            let s = if i == k { sign } else { -sign };
            rec(k + 1, idx, s, out);
            idx.swap(k, i);
        }
    }
    rec(0, &mut idx, 1, &mut out);
    out
}

/// s_lambda by the Jacobi-Trudi determinant det(h_{lambda_i - i + j}).
fn schur_to_p(lam: &Partition) -> BTreeMap<Partition, RatQT> {
    if lam.is_empty() {
        let mut acc = BTreeMap::new();
        acc.insert(Partition::empty(), RatQT::one());
        return acc;
    }
    let l = lam.len();
    let mut acc: BTreeMap<Partition, RatQT> = BTreeMap::new();
    for (perm, sign) in permutations(l) {
        // row i picks h_{lambda_i - i + perm(i)}
        let mut degrees = Vec::with_capacity(l);
        let mut ok = true;
        for i in 0..l {
            let d = lam.part(i) as i64 - i as i64 + perm[i] as i64;
            if d < 0 {
                ok = false;
                break;
            }
            degrees.push(d as u32);
        }
        if !ok {
            continue;
        }
        degrees.retain(|&d| d > 0);
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let h_label = Partition::new(degrees);
        let expansion = product_to_p(h_to_p, &h_label);
        p_map_scale_add(&mut acc, &expansion, &rat_int(sign));
    }
    acc
}

/// Invert a small square matrix over Q(q,t) by Gauss-Jordan elimination.
fn invert_matrix(mat: &[Vec<RatQT>]) -> Vec<Vec<RatQT>> {
    let n = mat.len();
    let mut a: Vec<Vec<RatQT>> = mat.to_vec();
    let mut inv: Vec<Vec<RatQT>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { RatQT::one() } else { RatQT::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&i| !a[i][col].is_zero())
            .expect("singular conversion matrix");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = a[col][j].div(&p).unwrap();
            inv[col][j] = inv[col][j].div(&p).unwrap();
        }
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for j in 0..n {
                let sub_a = a[col][j].mul(&f);
                a[i][j] = a[i][j].sub(&sub_a);
                let sub_i = inv[col][j].mul(&f);
                inv[i][j] = inv[i][j].sub(&sub_i);
            }
        }
    }
    inv
}

fn build_table(basis: Basis, n: u32) -> ConvTable {
    let order = Partition::all_of(n);
    let index: HashMap<Partition, usize> =
        order.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let dim = order.len();
    let b2p: Vec<BTreeMap<Partition, RatQT>> = match basis {
        Basis::P => order
            .iter()
            .map(|lam| {
                let mut m = BTreeMap::new();
                m.insert(lam.clone(), RatQT::one());
                m
            })
            .collect(),
        Basis::H => order.iter().map(|lam| product_to_p(h_to_p, lam)).collect(),
        Basis::E => order.iter().map(|lam| product_to_p(e_to_p, lam)).collect(),
        Basis::S => order.iter().map(schur_to_p).collect(),
        Basis::M => {
            // coeff of m_lambda in p_nu is z_nu * [p_nu](h_lambda) by h/m
            // duality; invert that matrix to expand m_lambda in p.
            let h_table: Vec<_> = order.iter().map(|lam| product_to_p(h_to_p, lam)).collect();
            // p2m[lambda][nu] = coeff of m_lambda in p_nu
            let mut p2m = vec![vec![RatQT::zero(); dim]; dim];
            for (li, _) in order.iter().enumerate() {
                for (ni, nu) in order.iter().enumerate() {
                    if let Some(c) = h_table[li].get(nu) {
                        p2m[li][ni] = c.mul(&rat_big(z_factor(nu)));
                    }
                }
            }
            let m2p = invert_matrix(&p2m); // m2p[nu][lambda]: coeff of p_nu in m_lambda
            (0..dim)
                .map(|li| {
                    let mut out = BTreeMap::new();
                    for (ni, nu) in order.iter().enumerate() {
                        let c = m2p[ni][li].clone();
                        if !c.is_zero() {
                            out.insert(nu.clone(), c);
                        }
                    }
                    out
                })
                .collect()
        }
    };
    // p2b: expansion of p_nu in the basis, the inverse matrix of b2p
    let mut b2p_mat = vec![vec![RatQT::zero(); dim]; dim]; // [p-index][basis-index]
    for (bi, exp) in b2p.iter().enumerate() {
        for (nu, c) in exp {
            b2p_mat[index[nu]][bi] = c.clone();
        }
    }
    let p2b_mat = invert_matrix(&b2p_mat); // [basis-index][p-index]
    let p2b: Vec<BTreeMap<Partition, RatQT>> = (0..dim)
        .map(|pi| {
            let mut out = BTreeMap::new();
            for (bi, lam) in order.iter().enumerate() {
                let c = p2b_mat[bi][pi].clone();
                if !c.is_zero() {
                    out.insert(lam.clone(), c);
                }
            }
            out
        })
        .collect();
    ConvTable { index, b2p, p2b }
}

fn table(basis: Basis, n: u32) -> &'static ConvTable {
    let mut cache = conv_cache().lock().unwrap();
    if let Some(t) = cache.get(&(basis, n)) {
        return t;
    }
    let t: &'static ConvTable = Box::leak(Box::new(build_table(basis, n)));
    cache.insert((basis, n), t);
    t
}

fn b2p_row(basis: Basis, lam: &Partition) -> &'static BTreeMap<Partition, RatQT> {
    let t = table(basis, lam.size() as u32);
    &t.b2p[t.index[lam]]
}

fn p2b_row(basis: Basis, lam: &Partition) -> &'static BTreeMap<Partition, RatQT> {
    let t = table(basis, lam.size() as u32);
    &t.p2b[t.index[lam]]
}

// ---------------------------------------------------------------------------
// Color matrices
// ---------------------------------------------------------------------------

/// An r x r matrix over Q(q,t) acting on the colored coordinates eps_i:
/// A eps_j = sum_i A_{ij} eps_i, so that the eps_i component of A X* is
/// sum_j A_{ij} X^(j).
#[derive(Clone, PartialEq, Eq)]
pub struct ColorMatrix {
    r: usize,
    entries: Vec<Vec<RatQT>>,
}

impl ColorMatrix {
    pub fn zero(r: usize) -> Self {
        ColorMatrix { r, entries: vec![vec![RatQT::zero(); r]; r] }
    }

    pub fn identity(r: usize) -> Self {
        let mut m = Self::zero(r);
        for i in 0..r {
            m.entries[i][i] = RatQT::one();
        }
        m
    }

    pub fn from_fn(r: usize, f: impl Fn(usize, usize) -> RatQT) -> Self {
        ColorMatrix {
            r,
            entries: (0..r).map(|i| (0..r).map(|j| f(i, j)).collect()).collect(),
        }
    }

    /// sigma^k: eps_i -> eps_{i-k}.
    pub fn sigma_pow(r: usize, k: i64) -> Self {
        let k = k.rem_euclid(r as i64) as usize;
        Self::from_fn(r, |i, j| {
            if (j + r - k) % r == i {
                RatQT::one()
            } else {
                RatQT::zero()
            }
        })
    }

    pub fn sigma(r: usize) -> Self {
        Self::sigma_pow(r, 1)
    }

    /// iota: eps_i -> eps_{-i}.
    pub fn iota(r: usize) -> Self {
        Self::from_fn(r, |i, j| {
            if (i + j) % r == 0 {
                RatQT::one()
            } else {
                RatQT::zero()
            }
        })
    }

    /// M_k = (1 - q sigma^k)(1 - t sigma^{-k}).
    pub fn m_k(r: usize, k: i64) -> Self {
        let id = Self::identity(r);
        let q = Self::sigma_pow(r, k).scale(&RatQT::from_laurent(LaurentQT::q()));
        let t = Self::sigma_pow(r, -k).scale(&RatQT::from_laurent(LaurentQT::t()));
        id.sub(&q).mul(&id.sub(&t))
    }

    /// M = M_1.
    pub fn m(r: usize) -> Self {
        Self::m_k(r, 1)
    }

    /// M^T = M_{-1}.
    pub fn m_transpose(r: usize) -> Self {
        Self::m_k(r, -1)
    }

    /// The inverse of M^T: entries (1/M^T)_{ij} = (1/M_0)^{(j-i)}, the
    /// color parts of 1/((1-q)(1-t)).
    pub fn inv_m_transpose(r: usize) -> Self {
        Self::from_fn(r, |i, j| {
            let c = (j as i64 - i as i64).rem_euclid(r as i64);
            m0_color_part(c, r)
        })
    }

    /// The inverse of M: entries (1/M)_{ij} = (1/M_0)^{(i-j)}.
    pub fn inv_m(r: usize) -> Self {
        Self::inv_m_transpose(r).transpose()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn entry(&self, i: usize, j: usize) -> &RatQT {
        &self.entries[i.rem_euclid(self.r)][j.rem_euclid(self.r)]
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.r, other.r);
        Self::from_fn(self.r, |i, j| self.entries[i][j].add(&other.entries[i][j]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.r, other.r);
        Self::from_fn(self.r, |i, j| self.entries[i][j].sub(&other.entries[i][j]))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.r, |i, j| self.entries[i][j].neg())
    }

    pub fn scale(&self, c: &RatQT) -> Self {
        Self::from_fn(self.r, |i, j| self.entries[i][j].mul(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.r, other.r);
        Self::from_fn(self.r, |i, j| {
            let mut acc = RatQT::zero();
            for k in 0..self.r {
                acc = acc.add(&self.entries[i][k].mul(&other.entries[k][j]));
            }
            acc
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.r, |i, j| self.entries[j][i].clone())
    }

    /// Entrywise (q,t) -> (q^{-1}, t^{-1}).
    pub fn star(&self) -> Self {
        Self::from_fn(self.r, |i, j| self.entries[i][j].star())
    }

    /// Entrywise (q,t) -> (q^n, t^n).
    pub fn power(&self, n: i64) -> Self {
        Self::from_fn(self.r, |i, j| self.entries[i][j].power(n))
    }
}

impl fmt::Debug for ColorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            writeln!(f, "{:?}", row)?;
        }
        Ok(())
    }
}

/// The color-c part of 1/M_0 = 1/((1-q)(1-t)):
/// (1/(1-qt)) (t^c/(1-t^r) + q^{r-c}/(1-q^r)) for 0 <= c < r.
pub fn m0_color_part(c: i64, r: usize) -> RatQT {
    let c = c.rem_euclid(r as i64);
    let r = r as i64;
    let one = LaurentQT::one();
    let t_num = LaurentQT::qt_pow(0, c);
    let t_den = one.sub(&LaurentQT::qt_pow(0, r));
    let q_num = LaurentQT::qt_pow(r - c, 0);
    let q_den = one.sub(&LaurentQT::qt_pow(r, 0));
    let sum = RatQT::new(t_num, t_den).add(&RatQT::new(q_num, q_den));
    let qt = RatQT::new(one.clone(), one.sub(&LaurentQT::qt_pow(1, 1)));
    qt.mul(&sum)
}

// ---------------------------------------------------------------------------
// Polynomials in the formal marker z with Q(q,t) coefficients
// ---------------------------------------------------------------------------

/// A polynomial in the formal marker z over Q(q,t); used for evaluations
/// that track a degree variable, like H[eps_0 + z iota D*].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZPoly {
    coeffs: Vec<RatQT>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: RatQT) -> Self {
        let mut p = ZPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    pub fn one() -> Self {
        Self::constant(RatQT::one())
    }

    /// c * z^d.
    pub fn monomial(c: RatQT, d: usize) -> Self {
        let mut coeffs = vec![RatQT::zero(); d + 1];
        coeffs[d] = c;
        let mut p = ZPoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, d: usize) -> RatQT {
        self.coeffs.get(d).cloned().unwrap_or_else(RatQT::zero)
    }

    pub fn as_constant(&self) -> Option<RatQT> {
        match self.coeffs.len() {
            0 => Some(RatQT::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i).add(&other.coeff(i)));
        }
        let mut p = ZPoly { coeffs };
        p.normalize();
        p
    }

    pub fn neg(&self) -> Self {
        ZPoly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![RatQT::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        let mut p = ZPoly { coeffs };
        p.normalize();
        p
    }

    pub fn scale(&self, c: &RatQT) -> Self {
        let mut p = ZPoly { coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect() };
        p.normalize();
        p
    }

    /// The image under p_n: coefficients to (q^n, t^n), z-degrees times n.
    pub fn power(&self, n: i64) -> Self {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![RatQT::zero(); (self.coeffs.len() - 1) * n as usize + 1];
        for (d, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[d * n as usize] = c.power(n);
            }
        }
        let mut p = ZPoly { coeffs };
        p.normalize();
        p
    }
}

/// A virtual colored alphabet: for each color a z-polynomial "character".
/// Power sums evaluate through p_n[eps_i Y*] = Y^(i)(q^n, t^n, z^n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    comps: Vec<ZPoly>,
}

impl Alphabet {
    pub fn zero(r: usize) -> Self {
        Alphabet { comps: vec![ZPoly::zero(); r] }
    }

    /// The alphabet eps_k: component k is 1, the rest 0.
    pub fn eps(r: usize, k: usize) -> Self {
        let mut a = Self::zero(r);
        a.comps[k % r] = ZPoly::one();
        a
    }

    pub fn from_values(values: Vec<RatQT>) -> Self {
        Alphabet { comps: values.into_iter().map(ZPoly::constant).collect() }
    }

    pub fn from_zpolys(comps: Vec<ZPoly>) -> Self {
        Alphabet { comps }
    }

    pub fn r(&self) -> usize {
        self.comps.len()
    }

    pub fn component(&self, i: usize) -> &ZPoly {
        &self.comps[i.rem_euclid(self.comps.len())]
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.r(), other.r());
        Alphabet {
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Alphabet { comps: self.comps.iter().map(|c| c.neg()).collect() }
    }

    pub fn scale(&self, c: &RatQT) -> Self {
        Alphabet { comps: self.comps.iter().map(|x| x.scale(c)).collect() }
    }

    /// Multiply every component by z^d.
    pub fn scale_z(&self, d: usize) -> Self {
        let z = ZPoly::monomial(RatQT::one(), d);
        Alphabet { comps: self.comps.iter().map(|x| x.mul(&z)).collect() }
    }

    /// Apply a color matrix: component i of A Y* is sum_j A_{ij} Y^(j).
    pub fn apply_matrix(&self, a: &ColorMatrix) -> Self {
        assert_eq!(self.r(), a.r());
        let r = self.r();
        Alphabet {
            comps: (0..r)
                .map(|i| {
                    let mut acc = ZPoly::zero();
                    for j in 0..r {
                        acc = acc.add(&self.comps[j].scale(a.entry(i, j)));
                    }
                    acc
                })
                .collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// MultiSymFn
// ---------------------------------------------------------------------------

/// A multisymmetric function: a basis tag plus a sparse map from
/// multipartition labels to Q(q,t) coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiSymFn {
    r: usize,
    basis: Basis,
    coeffs: BTreeMap<MultiPartition, RatQT>,
}

impl MultiSymFn {
    pub fn zero(r: usize, basis: Basis) -> Self {
        MultiSymFn { r, basis, coeffs: BTreeMap::new() }
    }

    pub fn one(r: usize, basis: Basis) -> Self {
        Self::term(r, basis, MultiPartition::empty(r), RatQT::one())
    }

    pub fn term(r: usize, basis: Basis, label: MultiPartition, coeff: RatQT) -> Self {
        assert_eq!(label.r(), r);
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(label, coeff);
        }
        MultiSymFn { r, basis, coeffs }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiPartition, &RatQT)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, label: &MultiPartition) -> RatQT {
        self.coeffs.get(label).cloned().unwrap_or_else(RatQT::zero)
    }

    /// Total degree of the highest term, if any.
    pub fn degree(&self) -> Option<u64> {
        self.coeffs.keys().map(|k| k.size()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.coeffs.keys().map(|k| k.size());
        match sizes.next() {
            None => true,
            Some(first) => sizes.all(|s| s == first),
        }
    }

    fn insert_add(&mut self, label: MultiPartition, coeff: RatQT) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&label) {
            Some(v) => {
                *v = v.add(&coeff);
                if v.is_zero() {
                    self.coeffs.remove(&label);
                }
            }
            None => {
                self.coeffs.insert(label, coeff);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.r, other.r);
        let other = other.to_basis(self.basis);
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.insert_add(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiSymFn {
            r: self.r,
            basis: self.basis,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &RatQT) -> Self {
        if c.is_zero() {
            return Self::zero(self.r, self.basis);
        }
        MultiSymFn {
            r: self.r,
            basis: self.basis,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v.mul(c))).collect(),
        }
    }

    /// Drop all terms of total degree above maxdeg.
    pub fn truncate(&self, maxdeg: u64) -> Self {
        MultiSymFn {
            r: self.r,
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.size() <= maxdeg)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Exact change of basis, converting per color through power sums.
    pub fn to_basis(&self, target: Basis) -> Self {
        if self.basis == target {
            return self.clone();
        }
        let in_p = if self.basis == Basis::P {
            self.clone()
        } else {
            self.convert_rows(|lam| b2p_row(self.basis, lam), Basis::P)
        };
        if target == Basis::P {
            return in_p;
        }
        in_p.convert_rows(|lam| p2b_row(target, lam), target)
    }

    /// Apply a per-color row expansion to every term.
    fn convert_rows(
        &self,
        row: impl Fn(&Partition) -> &'static BTreeMap<Partition, RatQT>,
        target: Basis,
    ) -> Self {
        let mut out = MultiSymFn::zero(self.r, target);
        for (label, coeff) in &self.coeffs {
            // cross product of the per-color expansions
            let mut acc: Vec<(Vec<Partition>, RatQT)> = vec![(Vec::new(), coeff.clone())];
            for i in 0..self.r {
                let expansion = row(label.comp(i));
                let mut next = Vec::with_capacity(acc.len() * expansion.len());
                for (prefix, c) in &acc {
                    for (lam, d) in expansion {
                        let mut p = prefix.clone();
                        p.push(lam.clone());
                        next.push((p, c.mul(d)));
                    }
                }
                acc = next;
            }
            for (comps, c) in acc {
                out.insert_add(MultiPartition::new(comps), c);
            }
        }
        out
    }

    /// Product; computed in the p basis and converted back.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.r, other.r);
        let a = self.to_basis(Basis::P);
        let b = other.to_basis(Basis::P);
        let mut out = MultiSymFn::zero(self.r, Basis::P);
        for (ka, ca) in &a.coeffs {
            for (kb, cb) in &b.coeffs {
                out.insert_add(ka.merge(kb), ca.mul(cb));
            }
        }
        out.to_basis(self.basis)
    }

    /// The Hall pairing: <p_lam, p_mu> = delta prod_i z_{lam^i}.
    pub fn hall_pair(&self, other: &Self) -> RatQT {
        assert_eq!(self.r, other.r);
        let a = self.to_basis(Basis::P);
        let b = other.to_basis(Basis::P);
        let mut acc = RatQT::zero();
        for (k, ca) in &a.coeffs {
            let cb = match b.coeffs.get(k) {
                Some(c) => c,
                None => continue,
            };
            let mut z = BigInt::one();
            for comp in k.comps() {
                z *= z_factor(comp);
            }
            acc = acc.add(&ca.mul(cb).mul(&rat_big(z)));
        }
        acc
    }

    /// The wreath Macdonald pairing <F,G>_* = <F[-iota X*], G[M^T X*]>.
    pub fn star_pair(&self, other: &Self) -> RatQT {
        let r = self.r;
        let f = self.matrix_plethysm(&ColorMatrix::iota(r).neg());
        let g = other.matrix_plethysm(&ColorMatrix::m_transpose(r));
        f.hall_pair(&g)
    }

    /// Vector plethysm by a color matrix:
    /// p_n[eps_i A X*] = sum_j A_{ij}(q^n,t^n) p_n[X^(j)], extended
    /// multiplicatively. The result is returned in the original basis.
    pub fn matrix_plethysm(&self, a: &ColorMatrix) -> Self {
        assert_eq!(self.r, a.r());
        let f = self.to_basis(Basis::P);
        // matrices with (q,t) raised to each part size that occurs
        let mut powers: BTreeMap<u32, ColorMatrix> = BTreeMap::new();
        for label in f.coeffs.keys() {
            for comp in label.comps() {
                for &m in comp.parts() {
                    powers.entry(m).or_insert_with(|| a.power(m as i64));
                }
            }
        }
        let mut out = MultiSymFn::zero(self.r, Basis::P);
        for (label, coeff) in &f.coeffs {
            let mut acc: Vec<(MultiPartition, RatQT)> =
                vec![(MultiPartition::empty(self.r), coeff.clone())];
            for i in 0..self.r {
                for &m in label.comp(i).parts() {
                    let am = &powers[&m];
                    let mut next = Vec::with_capacity(acc.len() * self.r);
                    for (prefix, c) in &acc {
                        for j in 0..self.r {
                            let e = am.entry(i, j);
                            if e.is_zero() {
                                continue;
                            }
                            let label = prefix
                                .merge(&MultiPartition::single(self.r, j, Partition::new(vec![m])));
                            next.push((label, c.mul(e)));
                        }
                    }
                    acc = next;
                }
            }
            for (label, c) in acc {
                out.insert_add(label, c);
            }
        }
        out.to_basis(self.basis)
    }

    /// Evaluate at a virtual alphabet: p_n[eps_i Y*] = Y^(i)(q^n, t^n),
    /// with formal z-markers raised to z^n.
    pub fn eval(&self, y: &Alphabet) -> ZPoly {
        assert_eq!(self.r, y.r());
        let f = self.to_basis(Basis::P);
        let mut acc = ZPoly::zero();
        for (label, coeff) in &f.coeffs {
            let mut term = ZPoly::constant(coeff.clone());
            for i in 0..self.r {
                for &m in label.comp(i).parts() {
                    term = term.mul(&y.component(i).power(m as i64));
                    if term.is_zero() {
                        break;
                    }
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Evaluate at a z-free alphabet, returning the constant.
    pub fn eval_scalar(&self, y: &Alphabet) -> RatQT {
        self.eval(y).as_constant().expect("alphabet carries a z marker")
    }

    /// The dagger involution F |-> F[-iota X*; q^{-1}, t^{-1}].
    pub fn dagger(&self) -> Self {
        let starred = MultiSymFn {
            r: self.r,
            basis: self.basis,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v.star())).collect(),
        };
        starred.matrix_plethysm(&ColorMatrix::iota(self.r).neg())
    }

    /// Translation by a scalar at one color: F[X* + c eps_i], through
    /// p_n[X^(i) + c] = p_n[X^(i)] + c(q^n, t^n).
    pub fn translate(&self, i: usize, c: &RatQT) -> Self {
        let f = self.to_basis(Basis::P);
        let i = i % self.r;
        let mut out = MultiSymFn::zero(self.r, Basis::P);
        for (label, coeff) in &f.coeffs {
            let parts: Vec<u32> = label.comp(i).parts().to_vec();
            // binomial expansion over the parts at color i
            let mut acc: Vec<(Vec<u32>, RatQT)> = vec![(Vec::new(), coeff.clone())];
            for &m in &parts {
                let cm = c.power(m as i64);
                let mut next = Vec::with_capacity(acc.len() * 2);
                for (kept, w) in &acc {
                    let mut with = kept.clone();
                    with.push(m);
                    next.push((with, w.clone()));
                    let dropped = w.mul(&cm);
                    if !dropped.is_zero() {
                        next.push((kept.clone(), dropped));
                    }
                }
                acc = next;
            }
            for (kept, w) in acc {
                let mut comps = label.comps().to_vec();
                comps[i] = Partition::from_unsorted(kept);
                out.insert_add(MultiPartition::new(comps), w);
            }
        }
        out.to_basis(self.basis)
    }

    /// Skew by h_k at one color: the Hall adjoint of multiplication by
    /// h_k[X^(p)].
    pub fn skew_h(&self, p: usize, k: u32) -> Self {
        self.skew_by(p, &h_to_p(k))
    }

    /// Skew by e_k at one color.
    pub fn skew_e(&self, p: usize, k: u32) -> Self {
        self.skew_by(p, &e_to_p(k))
    }

    fn skew_by(&self, color: usize, expansion: &BTreeMap<Partition, RatQT>) -> Self {
        let f = self.to_basis(Basis::P);
        let color = color % self.r;
        let mut out = MultiSymFn::zero(self.r, Basis::P);
        for (mu, w) in expansion {
            // p_n^perp p_lam = n mult_n(lam) p_{lam minus n}, applied for
            // each part of mu with the coefficient w = 1/z_mu (or signed)
            for (label, coeff) in &f.coeffs {
                let mut parts = label.comp(color).parts().to_vec();
                let mut factor = w.mul(coeff);
                let mut ok = true;
                for &m in mu.parts() {
                    let mult = parts.iter().filter(|&&x| x == m).count() as i64;
                    if mult == 0 {
                        ok = false;
                        break;
                    }
                    factor = factor.mul(&rat_int(m as i64 * mult));
                    let pos = parts.iter().position(|&x| x == m).unwrap();
                    parts.remove(pos);
                }
                if !ok {
                    continue;
                }
                let mut comps = label.comps().to_vec();
                comps[color] = Partition::from_unsorted(parts);
                out.insert_add(MultiPartition::new(comps), factor);
            }
        }
        out.to_basis(self.basis)
    }

    /// e_k[eps_p A X*] as an explicit multisymmetric function (p basis),
    /// by the Newton recursion e_k = (1/k) sum (-1)^{m-1} p_m e_{k-m}.
    pub fn e_of_matrix_row(r: usize, p: usize, a: &ColorMatrix, k: u32) -> Self {
        let mut es: Vec<MultiSymFn> = vec![MultiSymFn::one(r, Basis::P)];
        for n in 1..=k {
            let mut acc = MultiSymFn::zero(r, Basis::P);
            for m in 1..=n {
                let pm = Self::p_of_matrix_row(r, p, a, m);
                let sign = if (m - 1) % 2 == 0 { 1 } else { -1 };
                acc = acc.add(&pm.mul(&es[(n - m) as usize]).scale(&rat_int(sign)));
            }
            es.push(acc.scale(&RatQT::one().div(&rat_int(n as i64)).unwrap()));
        }
        es.pop().unwrap()
    }

    /// h_k[eps_p A X*] by Newton's identity h_k = (1/k) sum p_m h_{k-m}.
    pub fn h_of_matrix_row(r: usize, p: usize, a: &ColorMatrix, k: u32) -> Self {
        let mut hs: Vec<MultiSymFn> = vec![MultiSymFn::one(r, Basis::P)];
        for n in 1..=k {
            let mut acc = MultiSymFn::zero(r, Basis::P);
            for m in 1..=n {
                let pm = Self::p_of_matrix_row(r, p, a, m);
                acc = acc.add(&pm.mul(&hs[(n - m) as usize]));
            }
            hs.push(acc.scale(&RatQT::one().div(&rat_int(n as i64)).unwrap()));
        }
        hs.pop().unwrap()
    }

    /// p_m[eps_p A X*] = sum_j A_{pj}(q^m,t^m) p_m[X^(j)].
    pub fn p_of_matrix_row(r: usize, p: usize, a: &ColorMatrix, m: u32) -> Self {
        let am = a.power(m as i64);
        let mut out = MultiSymFn::zero(r, Basis::P);
        for j in 0..r {
            let c = am.entry(p, j);
            if !c.is_zero() {
                out.insert_add(MultiPartition::single(r, j, Partition::new(vec![m])), c.clone());
            }
        }
        out
    }

    /// The truncation of Omega[eps_i A X*] = sum_n h_n[eps_i A X*] to
    /// total degree maxdeg.
    pub fn omega_truncated(r: usize, i: usize, a: &ColorMatrix, maxdeg: u32) -> Self {
        let mut acc = MultiSymFn::zero(r, Basis::P);
        for n in 0..=maxdeg {
            acc = acc.add(&Self::h_of_matrix_row(r, i, a, n));
        }
        acc
    }

    /// Multiplication by Omega[eps_i A X*], truncated beyond maxdeg.
    pub fn omega_mult(&self, i: usize, a: &ColorMatrix, maxdeg: u32) -> Self {
        let omega = Self::omega_truncated(self.r, i, a, maxdeg);
        omega.mul(self).truncate(maxdeg as u64)
    }
}

impl fmt::Display for MultiSymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (label, coeff)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}) {}_{}", coeff, self.basis, label)?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiSymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Omega[c] for a scalar Laurent-polynomial argument, as a rational
/// function: Omega[sum c_k q^a t^b] = prod (1 - q^a t^b)^{-c_k}.
pub fn omega_scalar(arg: &LaurentQT) -> Result<RatQT, QtError> {
    crate::qtalg::scalar_omega(arg)
}
