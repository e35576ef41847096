//! Pieri coefficients for wreath Macdonald polynomials.
//!
//! Three families of coefficients are computed here, all indexed by pairs
//! lam subset_k mu (mu obtained from lam by adding k cells of each color)
//! and a color p:
//!
//! - d: multiplication by e_k[eps_p X*/M^T] sends H_lam to
//!   sum d_{mu,lam} H_mu;
//! - c: skewing by h_k^perp[X^(p)] sends H_mu to sum c_{lam,mu} H_lam;
//! - c': skewing by e_k^perp[X^(p)] likewise.
//!
//! The degree-1 values have closed product formulas over the colored
//! addable and removable corners. Higher degrees reduce to degree 1 by the
//! five-term recursions: writing m = k + l with k, l >= 1,
//!
//!   d_{mu,lam} = (-1)^l / e_l[B^(s)_{mu/lam}]
//!                * sum_{lam subset_l nu subset_k mu} d_{mu,nu} d_{nu,lam} T^(s)_{nu/lam},
//!   c_{lam,mu} = (-1)^k / e_k[B^(s)_{mu/lam}]
//!                * sum_{lam subset_k nu subset_l mu} T^(s)_{nu/lam} c_{lam,nu} c_{nu,mu},
//!   c'_{lam,mu} = (-1)^l / e_l[B^(s)_{mu/lam}]
//!                * sum_{lam subset_k nu subset_l mu} c'_{lam,nu} c'_{nu,mu} T^(s)_{mu/nu},
//!
//! where e_j[B^(s)] is the elementary symmetric polynomial of the color-s
//! characters of mu/lam and T^(s) the signed product of -chi over color-s
//! cells of a skew shape: the elementary index always matches the power of
//! the Delta marker in the underlying operator identity (the gap adjacent
//! to lam for d and c, the gap adjacent to mu for c'). The starred variant
//! of the c recursion, with chain lam subset_l nu subset_k mu, uses
//! (-1)^k / e_k[(B^(s))_*] and 1/T^(s)_{mu/nu} weights and computes the
//! same value. The results are independent of the color s and of the
//! split (k,l); the memo table therefore stores one canonical value per
//! (kind, r, lam, mu, p).

use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, Write};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::maya;
use crate::partition::Partition;
use crate::qtalg::{elementary_of_values, LaurentQT, RatQT};

/// Which coefficient family a cached value belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PieriKind {
    D,
    C,
    CPrime,
}

impl fmt::Display for PieriKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PieriKind::D => write!(f, "d"),
            PieriKind::C => write!(f, "c"),
            PieriKind::CPrime => write!(f, "cprime"),
        }
    }
}

/// Memo key: the recursion color s and split are deliberately excluded,
/// since the value does not depend on them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PieriKey {
    pub kind: PieriKind,
    pub r: usize,
    pub lam: Partition,
    pub mu: Partition,
    pub color: usize,
}

/// Recursion policy: the color s used in the symmetric-function weights
/// and where the single-step base case sits. Correctness is policy
/// independent; the default (s = 0, single color layers) minimizes chain
/// enumeration width.
#[derive(Clone, Copy, Debug)]
pub struct RecursionPolicy {
    pub s: usize,
    /// Size of the recursion step placed next to the base case (clamped
    /// to the available gap); 1 descends by single color layers.
    pub split: usize,
}

impl Default for RecursionPolicy {
    fn default() -> Self {
        RecursionPolicy { s: 0, split: 1 }
    }
}

fn clamp_split(split: usize, m: usize) -> usize {
    split.max(1).min(m - 1)
}

/// Memoization table for Pieri coefficients, safe to share across threads.
pub struct PieriTable {
    memo: Mutex<HashMap<PieriKey, RatQT>>,
    policy: RecursionPolicy,
}

impl Default for PieriTable {
    fn default() -> Self {
        Self::new()
    }
}

/// The character of the unique color-i box of mu/lam for a subset_1 pair.
fn added_box_characters(lam: &Partition, mu: &Partition, r: usize) -> Vec<LaurentQT> {
    let cells = mu.skew_cells(lam);
    assert_eq!(cells.len(), r, "expected a subset_1 pair");
    let mut chi = vec![LaurentQT::zero(); r];
    for cell in cells {
        let color = cell.color(r);
        assert!(chi[color].is_zero(), "two added boxes share a color");
        chi[color] = cell.character();
    }
    chi
}

/// Degree-1 Pieri coefficient d_{mu,lam}:
/// (1/(qt-1)) (chi_0/chi_p) prod_i
///   prod_{R_i(mu)} (1 - q^{-1} t^{-1} chi_i / chi) /
///   prod_{A_i(mu)} (1 - chi_i / chi).
pub fn d1(lam: &Partition, mu: &Partition, p: usize, r: usize) -> RatQT {
    assert_eq!(maya::subset_k(lam, mu, r), Some(1), "d1 requires lam subset_1 mu");
    let chi = added_box_characters(lam, mu, r);
    let corners = mu.corners(r);
    let qt_inv = LaurentQT::qt_pow(-1, -1);
    let mut num = chi[0].clone();
    let mut den = chi[p % r].clone();
    den = den.mul(&LaurentQT::qt_pow(1, 1).sub(&LaurentQT::one()));
    for i in 0..r {
        for cell in &corners.removable[i] {
            let cc = cell.character();
            num = num.mul(&cc.sub(&qt_inv.mul(&chi[i]))); // (1 - q^{-1}t^{-1} chi_i/chi) * chi
            den = den.mul(&cc);
        }
        for cell in &corners.addable[i] {
            let cc = cell.character();
            den = den.mul(&cc.sub(&chi[i])); // (1 - chi_i/chi) * chi
            num = num.mul(&cc);
        }
    }
    RatQT::new(num, den)
}

/// Degree-1 dual Pieri coefficient c_{lam,mu}:
/// (1/(1-qt)) (chi_p/chi_0) prod_i
///   prod_{A_i(lam)} (1 - qt chi_i / chi) /
///   prod_{R_i(lam)} (1 - chi_i / chi).
pub fn c1(lam: &Partition, mu: &Partition, p: usize, r: usize) -> RatQT {
    assert_eq!(maya::subset_k(lam, mu, r), Some(1), "c1 requires lam subset_1 mu");
    let chi = added_box_characters(lam, mu, r);
    let corners = lam.corners(r);
    let qt = LaurentQT::qt_pow(1, 1);
    let mut num = chi[p % r].clone();
    let mut den = chi[0].clone();
    den = den.mul(&LaurentQT::one().sub(&qt));
    for i in 0..r {
        for cell in &corners.addable[i] {
            let cc = cell.character();
            num = num.mul(&cc.sub(&qt.mul(&chi[i])));
            den = den.mul(&cc);
        }
        for cell in &corners.removable[i] {
            let cc = cell.character();
            den = den.mul(&cc.sub(&chi[i]));
            num = num.mul(&cc);
        }
    }
    RatQT::new(num, den)
}

/// Degree-1 Pieri coefficient on the dagger basis:
/// (1/(1-qt)) (chi_p/chi_0) prod_i
///   prod_{R_i(mu)} (1 - qt chi / chi_i) /
///   prod_{A_i(mu)} (1 - chi / chi_i).
pub fn d_dagger1(lam: &Partition, mu: &Partition, p: usize, r: usize) -> RatQT {
    assert_eq!(maya::subset_k(lam, mu, r), Some(1), "d_dagger1 requires lam subset_1 mu");
    let chi = added_box_characters(lam, mu, r);
    let corners = mu.corners(r);
    let qt = LaurentQT::qt_pow(1, 1);
    let mut num = chi[p % r].clone();
    let mut den = chi[0].clone();
    den = den.mul(&LaurentQT::one().sub(&qt));
    for i in 0..r {
        for cell in &corners.removable[i] {
            let cc = cell.character();
            num = num.mul(&chi[i].sub(&qt.mul(&cc))); // (1 - qt chi/chi_i) * chi_i
            den = den.mul(&chi[i].clone());
        }
        for cell in &corners.addable[i] {
            let cc = cell.character();
            den = den.mul(&chi[i].sub(&cc)); // (1 - chi/chi_i) * chi_i
            num = num.mul(&chi[i].clone());
        }
    }
    RatQT::new(num, den)
}

/// e_k of the color-s characters of mu/lam, with an optional star.
fn e_of_skew_colors(
    lam: &Partition,
    mu: &Partition,
    r: usize,
    s: usize,
    k: usize,
    starred: bool,
) -> LaurentQT {
    let mut chars = maya::skew_color_characters(lam, mu, r, s);
    if starred {
        chars = chars.iter().map(|c| c.star()).collect();
    }
    elementary_of_values(&chars, k)
}

impl PieriTable {
    pub fn new() -> Self {
        PieriTable { memo: Mutex::new(HashMap::new()), policy: RecursionPolicy::default() }
    }

    pub fn with_policy(policy: RecursionPolicy) -> Self {
        PieriTable { memo: Mutex::new(HashMap::new()), policy }
    }

    pub fn len(&self) -> usize {
        self.memo.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn lookup(&self, key: &PieriKey) -> Option<RatQT> {
        self.memo.lock().unwrap().get(key).cloned()
    }

    fn store(&self, key: PieriKey, value: RatQT) {
        self.memo.lock().unwrap().insert(key, value);
    }

    fn get_or_compute(
        &self,
        kind: PieriKind,
        lam: &Partition,
        mu: &Partition,
        p: usize,
        r: usize,
        compute: impl FnOnce() -> RatQT,
    ) -> RatQT {
        let key = PieriKey { kind, r, lam: lam.clone(), mu: mu.clone(), color: p % r };
        if let Some(v) = self.lookup(&key) {
            return v;
        }
        let v = compute();
        self.store(key, v.clone());
        v
    }

    /// d_{mu,lam}^{(p)}, memoized, default policy.
    pub fn d(&self, lam: &Partition, mu: &Partition, p: usize, r: usize) -> RatQT {
        let m = maya::subset_k(lam, mu, r).expect("d requires lam subset_k mu");
        if m == 0 {
            return RatQT::one();
        }
        if m == 1 {
            return self.get_or_compute(PieriKind::D, lam, mu, p, r, || d1(lam, mu, p, r));
        }
        self.get_or_compute(PieriKind::D, lam, mu, p, r, || {
            self.d_step(lam, mu, p, r, self.policy.s, clamp_split(self.policy.split, m))
        })
    }

    /// One d-recursion step with explicit color s and lower gap l; the
    /// sub-coefficients come from the memoized default path.
    pub fn d_step(&self, lam: &Partition, mu: &Partition, p: usize, r: usize, s: usize, l: usize) -> RatQT {
        let m = maya::subset_k(lam, mu, r).expect("d requires lam subset_k mu");
        if m == 0 {
            return RatQT::one();
        }
        if m == 1 {
            return d1(lam, mu, p, r);
        }
        assert!(l >= 1 && l < m, "split must satisfy 1 <= l < k + l");
        let el = e_of_skew_colors(lam, mu, r, s, l, false);
        assert!(!el.is_zero(), "vanishing e_l[B^(s)] in the d recursion: lam={} mu={}", lam, mu);
        let mut sum = RatQT::zero();
        for nu in maya::chains(lam, mu, r, l) {
            let t = maya::skew_t_color(lam, &nu, r, s);
            let term = self.d(&nu, mu, p, r).mul(&self.d(lam, &nu, p, r)).mul_laurent(&t);
            sum = sum.add(&term);
        }
        let sign = if l.is_multiple_of(2) { 1 } else { -1 };
        sum.mul(&RatQT::from_int(sign)).div(&RatQT::from_laurent(el)).unwrap()
    }

    /// c_{lam,mu}^{(p)}, memoized, default policy.
    pub fn c(&self, lam: &Partition, mu: &Partition, p: usize, r: usize) -> RatQT {
        let m = maya::subset_k(lam, mu, r).expect("c requires lam subset_k mu");
        if m == 0 {
            return RatQT::one();
        }
        if m == 1 {
            return self.get_or_compute(PieriKind::C, lam, mu, p, r, || c1(lam, mu, p, r));
        }
        self.get_or_compute(PieriKind::C, lam, mu, p, r, || {
            self.c_step(lam, mu, p, r, self.policy.s, m - clamp_split(self.policy.split, m), false)
        })
    }

    /// One c-recursion step with explicit color s and lower gap k (nu sits
    /// k above lam); `starred` selects the variant with starred weights.
    pub fn c_step(
        &self,
        lam: &Partition,
        mu: &Partition,
        p: usize,
        r: usize,
        s: usize,
        k: usize,
        starred: bool,
    ) -> RatQT {
        let m = maya::subset_k(lam, mu, r).expect("c requires lam subset_k mu");
        if m == 0 {
            return RatQT::one();
        }
        if m == 1 {
            return c1(lam, mu, p, r);
        }
        assert!(k >= 1 && k < m, "split must satisfy 1 <= k < k + l");
        // unstarred: elementary index = lower gap k, weight T^(s)_{nu/lam};
        // starred: elementary index = upper gap m - k with starred
        // characters, weight 1/T^(s)_{mu/nu}
        let e_index = if starred { m - k } else { k };
        let ew = e_of_skew_colors(lam, mu, r, s, e_index, starred);
        assert!(!ew.is_zero(), "vanishing e[B^(s)] in the c recursion: lam={} mu={}", lam, mu);
        let mut sum = RatQT::zero();
        for nu in maya::chains(lam, mu, r, k) {
            let weight = if starred {
                RatQT::one()
                    .div(&RatQT::from_laurent(maya::skew_t_color(&nu, mu, r, s)))
                    .unwrap()
            } else {
                RatQT::from_laurent(maya::skew_t_color(lam, &nu, r, s))
            };
            let term = self.c(lam, &nu, p, r).mul(&self.c(&nu, mu, p, r)).mul(&weight);
            sum = sum.add(&term);
        }
        let sign = if e_index % 2 == 0 { 1 } else { -1 };
        sum.mul(&RatQT::from_int(sign)).div(&RatQT::from_laurent(ew)).unwrap()
    }

    /// c'_{lam,mu}^{(p)}, memoized, default policy. The base case is
    /// c'_1 = c_1: in degree 1, e_1 = h_1.
    pub fn cprime(&self, lam: &Partition, mu: &Partition, p: usize, r: usize) -> RatQT {
        let m = maya::subset_k(lam, mu, r).expect("cprime requires lam subset_k mu");
        if m == 0 {
            return RatQT::one();
        }
        if m == 1 {
            return self.get_or_compute(PieriKind::CPrime, lam, mu, p, r, || c1(lam, mu, p, r));
        }
        self.get_or_compute(PieriKind::CPrime, lam, mu, p, r, || {
            self.cprime_step(lam, mu, p, r, self.policy.s, clamp_split(self.policy.split, m))
        })
    }

    /// One c'-recursion step with explicit color s and upper gap l (nu
    /// sits l below mu).
    pub fn cprime_step(
        &self,
        lam: &Partition,
        mu: &Partition,
        p: usize,
        r: usize,
        s: usize,
        l: usize,
    ) -> RatQT {
        let m = maya::subset_k(lam, mu, r).expect("cprime requires lam subset_k mu");
        if m == 0 {
            return RatQT::one();
        }
        if m == 1 {
            return c1(lam, mu, p, r);
        }
        assert!(l >= 1 && l < m, "split must satisfy 1 <= l < k + l");
        let k = m - l;
        let el = e_of_skew_colors(lam, mu, r, s, l, false);
        assert!(!el.is_zero(), "vanishing e_l[B^(s)] in the c' recursion: lam={} mu={}", lam, mu);
        let mut sum = RatQT::zero();
        for nu in maya::chains(lam, mu, r, k) {
            let t = maya::skew_t_color(&nu, mu, r, s);
            let term = self.cprime(lam, &nu, p, r).mul(&self.cprime(&nu, mu, p, r)).mul_laurent(&t);
            sum = sum.add(&term);
        }
        let sign = if l.is_multiple_of(2) { 1 } else { -1 };
        sum.mul(&RatQT::from_int(sign)).div(&RatQT::from_laurent(el)).unwrap()
    }

    // -- persistence ---------------------------------------------------

    /// Write the table as JSON lines, one entry per line after a schema
    /// header, in a deterministic order.
    pub fn save<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        let memo = self.memo.lock().unwrap();
        writeln!(w, "{}", serde_json::to_string(&SchemaHeader::current()).unwrap())?;
        let mut lines: Vec<CacheLine> = memo
            .iter()
            .map(|(k, v)| CacheLine {
                kind: k.kind,
                r: k.r,
                lam: part_str(&k.lam),
                mu: part_str(&k.mu),
                color: k.color,
                value: v.to_serial(),
            })
            .collect();
        lines.sort_by(|a, b| {
            (a.kind as u8, a.r, &a.lam, &a.mu, a.color).cmp(&(b.kind as u8, b.r, &b.lam, &b.mu, b.color))
        });
        for line in lines {
            writeln!(w, "{}", serde_json::to_string(&line).unwrap())?;
        }
        Ok(())
    }

    /// Load entries from a JSON-lines stream produced by `save`.
    pub fn load<R: BufRead>(&self, r: R) -> std::io::Result<usize> {
        let mut lines = r.lines();
        let header = match lines.next() {
            Some(h) => h?,
            None => return Ok(0),
        };
        let header: SchemaHeader = serde_json::from_str(&header)
            .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))?;
        if header.schema != SchemaHeader::current().schema {
            return Err(std::io::Error::new(
                std::io::ErrorKind::InvalidData,
                format!("unsupported cache schema {}", header.schema),
            ));
        }
        let mut count = 0;
        let mut memo = self.memo.lock().unwrap();
        for line in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let entry: CacheLine = serde_json::from_str(&line)
                .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))?;
            let key = PieriKey {
                kind: entry.kind,
                r: entry.r,
                lam: entry.lam.parse().map_err(invalid)?,
                mu: entry.mu.parse().map_err(invalid)?,
                color: entry.color,
            };
            memo.insert(key, RatQT::from_serial(&entry.value));
            count += 1;
        }
        Ok(count)
    }
}

fn invalid<E: std::error::Error + Send + Sync + 'static>(e: E) -> std::io::Error {
    std::io::Error::new(std::io::ErrorKind::InvalidData, e)
}

fn part_str(p: &Partition) -> String {
    p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

#[derive(Serialize, Deserialize)]
struct SchemaHeader {
    schema: u32,
    kind: String,
}

impl SchemaHeader {
    fn current() -> Self {
        SchemaHeader { schema: 1, kind: "pieri-cache".into() }
    }
}

#[derive(Serialize, Deserialize)]
struct CacheLine {
    kind: PieriKind,
    r: usize,
    lam: String,
    mu: String,
    color: usize,
    value: crate::qtalg::RatSerial,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maya::{enumerate_same_core, r_core, successors};
    use rand::prelude::*;
    use rand::rngs::StdRng;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn c1_from_empty_is_the_added_box_character() {
        // h_1^perp[X^(p)] H_mu has coefficient chi_p at H_empty for the
        // three degree-1 shapes with empty 3-core
        let r = 3;
        let empty = Partition::empty();
        let expected: Vec<(&str, [(i64, i64); 3])> = vec![
            // (mu, [chi_0, chi_1, chi_2] as (q,t) exponents)
            ("3", [(0, 0), (2, 0), (1, 0)]),
            ("2,1", [(0, 0), (0, 1), (1, 0)]),
            ("1,1,1", [(0, 0), (0, 1), (0, 2)]),
        ];
        for (mu, chis) in expected {
            for (color, (a, b)) in chis.iter().enumerate() {
                let got = c1(&empty, &p(mu), color, r);
                assert_eq!(
                    got,
                    RatQT::from_laurent(LaurentQT::qt_pow(*a, *b)),
                    "mu={} p={}",
                    mu,
                    color
                );
            }
        }
    }

    #[test]
    fn d1_from_empty_to_row_three() {
        // hand-reduced value of d_{(3),empty}^{(0)}
        let r = 3;
        let got = d1(&Partition::empty(), &p("3"), 0, r);
        let num = LaurentQT::qt_pow(-1, -1);
        let den = LaurentQT::one()
            .sub(&LaurentQT::qt_pow(-3, 0))
            .mul(&LaurentQT::one().sub(&LaurentQT::qt_pow(2, -1)));
        assert_eq!(got, RatQT::new(num, den));
    }

    #[test]
    fn prefactor_relations() {
        let r = 3;
        for lam in enumerate_same_core(&Partition::empty(), r, 1) {
            for mu in successors(&lam, 1, r) {
                let chi = added_box_characters(&lam, &mu, r);
                for p in 0..r {
                    // d1(p) chi_p = d1(0) chi_0
                    let lhs = d1(&lam, &mu, p, r).mul_laurent(&chi[p]);
                    let rhs = d1(&lam, &mu, 0, r).mul_laurent(&chi[0]);
                    assert_eq!(lhs, rhs);
                    // c1(p) chi_0 = c1(0) chi_p
                    let lhs = c1(&lam, &mu, p, r).mul_laurent(&chi[0]);
                    let rhs = c1(&lam, &mu, 0, r).mul_laurent(&chi[p]);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    /// Random subset_1 pairs with bounded partition size.
    fn random_pairs(r: usize, count: usize, seed: u64) -> Vec<(Partition, Partition)> {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut out = Vec::new();
        while out.len() < count {
            let n = rng.random_range(0..9u32);
            let all = Partition::all_of(n);
            let lam = all[rng.random_range(0..all.len())].clone();
            let succ = successors(&lam, 1, r);
            if succ.is_empty() {
                continue;
            }
            let mu = succ[rng.random_range(0..succ.len())].clone();
            out.push((lam, mu));
        }
        out
    }

    #[test]
    fn dagger_degree_one_matches_star_of_d() {
        // star(d_dagger) = qt * d, equivalently d_dagger = (qt d)_*
        for r in [3usize, 4] {
            for (lam, mu) in random_pairs(r, 25, 0xd1 + r as u64) {
                for color in 0..r {
                    let d = d1(&lam, &mu, color, r);
                    let dd = d_dagger1(&lam, &mu, color, r);
                    let qt = RatQT::from_laurent(LaurentQT::qt_pow(1, 1));
                    assert_eq!(dd.star(), d.mul(&qt), "lam={} mu={} p={}", lam, mu, color);
                }
            }
        }
    }

    #[test]
    fn adjunction_relates_c_and_d_dagger() {
        // c_{lam,mu} = (N_mu / N_lam) d_dagger_{mu,lam}
        for r in [3usize, 4] {
            for (lam, mu) in random_pairs(r, 25, 0xad + r as u64) {
                for color in 0..r {
                    let c = c1(&lam, &mu, color, r);
                    let dd = d_dagger1(&lam, &mu, color, r);
                    let ratio = RatQT::new(mu.norm(r), lam.norm(r));
                    assert_eq!(c, ratio.mul(&dd), "lam={} mu={} p={}", lam, mu, color);
                }
            }
        }
    }

    #[test]
    fn hook_cancellation_lemma() {
        // (N_{lam + box}/N_lam) prod_{R_i(lam+box)} (1 - qt chi/chi_box)
        //                      / prod_{A_i(lam+box)} (1 - chi/chi_box)
        // = prod_{A_i(lam)} (1 - qt chi_box/chi) / prod_{R_i(lam)} (1 - chi_box/chi)
        // with i the color of the added box, for r > 1
        let mut rng = StdRng::seed_from_u64(0xca);
        let mut tested = 0;
        while tested < 200 {
            let r = [2usize, 3, 4, 5][rng.random_range(0..4)];
            let n = rng.random_range(0..10u32);
            let all = Partition::all_of(n);
            let lam = all[rng.random_range(0..all.len())].clone();
            let addable = lam.addable_corners();
            let cell = addable[rng.random_range(0..addable.len())];
            let bigger = lam.with_cell(cell);
            let i = cell.color(r);
            let chi_box = cell.character();
            let qt = LaurentQT::qt_pow(1, 1);
            let mut lhs_num = bigger.norm(r);
            let mut lhs_den = lam.norm(r);
            let corners_big = bigger.corners(r);
            for c in &corners_big.removable[i] {
                lhs_num = lhs_num.mul(&chi_box.sub(&qt.mul(&c.character())));
                lhs_den = lhs_den.mul(&chi_box.clone());
            }
            for c in &corners_big.addable[i] {
                lhs_den = lhs_den.mul(&chi_box.sub(&c.character()));
                lhs_num = lhs_num.mul(&chi_box.clone());
            }
            let corners = lam.corners(r);
            let mut rhs_num = LaurentQT::one();
            let mut rhs_den = LaurentQT::one();
            for c in &corners.addable[i] {
                rhs_num = rhs_num.mul(&c.character().sub(&qt.mul(&chi_box)));
                rhs_den = rhs_den.mul(&c.character());
            }
            for c in &corners.removable[i] {
                rhs_den = rhs_den.mul(&c.character().sub(&chi_box));
                rhs_num = rhs_num.mul(&c.character());
            }
            assert_eq!(
                RatQT::new(lhs_num, lhs_den),
                RatQT::new(rhs_num, rhs_den),
                "lam={} box=({},{}) r={}",
                lam,
                cell.col,
                cell.row,
                r
            );
            tested += 1;
        }
    }

    #[test]
    fn recursion_is_independent_of_color_and_split() {
        let r = 3;
        let table = PieriTable::new();
        let empty = Partition::empty();
        // all subset_2 pairs with core empty and |quot(mu)| <= 3
        for lam in [vec![empty.clone()], enumerate_same_core(&empty, r, 1)].concat() {
            for mu in successors(&lam, 2, r) {
                if maya::quotient_size(&mu, r) > 3 {
                    continue;
                }
                for p in 0..r {
                    let base_d = table.d_step(&lam, &mu, p, r, 0, 1);
                    let base_c = table.c_step(&lam, &mu, p, r, 0, 1, false);
                    for s in 0..r {
                        assert_eq!(table.d_step(&lam, &mu, p, r, s, 1), base_d, "d s-indep");
                        assert_eq!(
                            table.c_step(&lam, &mu, p, r, s, 1, false),
                            base_c,
                            "c s-indep"
                        );
                        assert_eq!(
                            table.c_step(&lam, &mu, p, r, s, 1, true),
                            base_c,
                            "c starred variant"
                        );
                    }
                }
            }
        }
        // split independence on subset_3 pairs from the empty partition
        for mu in successors(&empty, 3, r) {
            for p in 0..r {
                let v1 = table.d_step(&empty, &mu, p, r, 0, 1);
                let v2 = table.d_step(&empty, &mu, p, r, 0, 2);
                assert_eq!(v1, v2, "d split-indep mu={}", mu);
                let c1v = table.c_step(&empty, &mu, p, r, 0, 1, false);
                let c2v = table.c_step(&empty, &mu, p, r, 0, 2, false);
                assert_eq!(c1v, c2v, "c split-indep mu={}", mu);
                let cp1 = table.cprime_step(&empty, &mu, p, r, 0, 1);
                let cp2 = table.cprime_step(&empty, &mu, p, r, 0, 2);
                assert_eq!(cp1, cp2, "cprime split-indep mu={}", mu);
            }
        }
    }

    #[test]
    fn cprime_degree_one_agrees_with_c() {
        let r = 3;
        let table = PieriTable::new();
        for lam in enumerate_same_core(&Partition::empty(), r, 1) {
            for mu in successors(&lam, 1, r) {
                for p in 0..r {
                    assert_eq!(table.cprime(&lam, &mu, p, r), table.c(&lam, &mu, p, r));
                }
            }
        }
    }

    #[test]
    fn cache_round_trip_is_byte_identical() {
        let r = 3;
        let table = PieriTable::new();
        let empty = Partition::empty();
        for mu in successors(&empty, 2, r) {
            for p in 0..r {
                table.d(&empty, &mu, p, r);
                table.c(&empty, &mu, p, r);
                table.cprime(&empty, &mu, p, r);
            }
        }
        let mut buf = Vec::new();
        table.save(&mut buf).unwrap();
        let reloaded = PieriTable::new();
        let n = reloaded.load(std::io::BufReader::new(buf.as_slice())).unwrap();
        assert_eq!(n, table.len());
        let mut buf2 = Vec::new();
        reloaded.save(&mut buf2).unwrap();
        assert_eq!(buf, buf2);
        // warm values agree with cold ones
        for mu in successors(&empty, 2, r) {
            assert_eq!(reloaded.d(&empty, &mu, 0, r), table.d(&empty, &mu, 0, r));
        }
    }

    #[test]
    fn chains_respect_cores() {
        // the recursion only ever sees same-core pairs
        let r = 3;
        for lam in enumerate_same_core(&p("1"), r, 1) {
            for mu in successors(&lam, 2, r) {
                assert_eq!(r_core(&mu, r), p("1"));
            }
        }
    }
}
