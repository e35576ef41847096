//! The Young-Maya correspondence, r-cores, r-quotients and charge vectors.
//!
//! A Maya diagram is a two-colored bead sequence indexed by Z with black
//! beads far to the left (large indices) replaced by the vacuum pattern:
//! white for n >= 0, black for n < 0. We store only the finitely many
//! exceptions. The charge counts discrepancies across the central line:
//! charge = #{n >= 0 black} - #{n < 0 white}.
//!
//! A partition corresponds to a charge-0 diagram through its edge sequence:
//! position n is black exactly when n = tlambda_i - i for some i >= 1
//! (tlambda the transpose); equivalently the whites sit at j - lambda_{j+1}
//! for j >= 0. Splitting a diagram into the r sub-sequences of positions
//! congruent to i mod r and recentering each at its own charge yields the
//! r-quotient; replacing each sub-sequence by its charged vacuum and
//! reassembling yields the r-core.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::partition::Partition;
use crate::qtalg::LaurentQT;

/// A Maya diagram, stored as the finite sets of beads that differ from the
/// vacuum assignment (white for n >= 0, black for n < 0).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MayaDiagram {
    black_nonneg: BTreeSet<i64>,
    white_neg: BTreeSet<i64>,
}

/// The charge vector (c_0, ..., c_{r-1}) of the r sub-diagrams; the entries
/// of a partition's charge vector sum to zero, and charge vectors are in
/// bijection with r-cores.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ChargeVector(pub Vec<i64>);

impl MayaDiagram {
    pub fn vacuum() -> Self {
        MayaDiagram::default()
    }

    /// Vacuum diagram of a given charge: white for n >= c, black for n < c.
    pub fn charged_vacuum(c: i64) -> Self {
        let mut m = MayaDiagram::default();
        if c > 0 {
            m.black_nonneg = (0..c).collect();
        } else if c < 0 {
            m.white_neg = (c..0).collect();
        }
        m
    }

    pub fn is_black(&self, n: i64) -> bool {
        if n >= 0 {
            self.black_nonneg.contains(&n)
        } else {
            !self.white_neg.contains(&n)
        }
    }

    pub fn charge(&self) -> i64 {
        self.black_nonneg.len() as i64 - self.white_neg.len() as i64
    }

    pub fn black_nonneg(&self) -> &BTreeSet<i64> {
        &self.black_nonneg
    }

    pub fn white_neg(&self) -> &BTreeSet<i64> {
        &self.white_neg
    }

    /// Window [lo, hi) outside of which the diagram agrees with the vacuum.
    fn window(&self) -> (i64, i64) {
        let lo = self.white_neg.iter().next().copied().unwrap_or(0);
        let hi = self.black_nonneg.iter().next_back().copied().unwrap_or(-1) + 1;
        (lo, hi)
    }

    /// Builds a diagram from a bead predicate that agrees with the vacuum
    /// outside [lo, hi).
    fn from_predicate(lo: i64, hi: i64, is_black: impl Fn(i64) -> bool) -> Self {
        let mut m = MayaDiagram::default();
        for n in lo..hi {
            if n >= 0 && is_black(n) {
                m.black_nonneg.insert(n);
            } else if n < 0 && !is_black(n) {
                m.white_neg.insert(n);
            }
        }
        m
    }

    /// The diagram read with the central line moved to the right of the
    /// bead at position c: n -> bead at n + c.
    pub fn recentered(&self, c: i64) -> Self {
        let (lo, hi) = self.window();
        Self::from_predicate(lo - c.abs() - 1, hi + c.abs() + 1, |n| self.is_black(n + c))
    }

    /// Sub-diagram of positions congruent to i mod r.
    pub fn sub_diagram(&self, i: usize, r: usize) -> Self {
        let (lo, hi) = self.window();
        let (i, r) = (i as i64, r as i64);
        let sub_lo = (lo - i).div_euclid(r) - 1;
        let sub_hi = (hi - i).div_euclid(r) + 2;
        Self::from_predicate(sub_lo, sub_hi, |n| self.is_black(i + n * r))
    }

    /// Reassembles a diagram from its r sub-diagrams.
    pub fn recombine(subs: &[MayaDiagram]) -> Self {
        let r = subs.len() as i64;
        let mut lo = 0i64;
        let mut hi = 0i64;
        for s in subs {
            let (a, b) = s.window();
            lo = lo.min(a * r - r);
            hi = hi.max(b * r + r);
        }
        Self::from_predicate(lo, hi, |n| {
            let i = n.rem_euclid(r);
            subs[i as usize].is_black((n - i).div_euclid(r))
        })
    }
}

/// The Maya diagram of a partition (a charge-0 diagram).
pub fn partition_to_maya(lam: &Partition) -> MayaDiagram {
    let mut m = MayaDiagram::default();
    let conj = lam.conjugate();
    for i in 1..=conj.len() {
        let pos = conj.part(i - 1) as i64 - i as i64;
        if pos >= 0 {
            m.black_nonneg.insert(pos);
        }
    }
    for j in 0..lam.len() {
        let pos = j as i64 - lam.part(j) as i64;
        if pos < 0 {
            m.white_neg.insert(pos);
        }
    }
    m
}

/// The partition of a charge-0 Maya diagram: the j-th smallest white bead
/// sits at j - lambda_{j+1}. Panics on nonzero charge.
pub fn maya_to_partition(m: &MayaDiagram) -> Partition {
    assert_eq!(m.charge(), 0, "partition-valued Maya diagrams have charge 0");
    let mut parts = Vec::new();
    let mut j = 0i64;
    for &w in &m.white_neg {
        parts.push((j - w) as u32);
        j += 1;
    }
    let hi = m.black_nonneg.iter().next_back().copied().unwrap_or(-1) + 1;
    for n in 0..hi {
        if !m.is_black(n) {
            if j - n > 0 {
                parts.push((j - n) as u32);
            }
            j += 1;
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts)
}

/// Core-quotient decomposition: the r-core, the r-quotient and the charge
/// vector of the r sub-diagrams.
pub fn core_quotient(lam: &Partition, r: usize) -> (Partition, Vec<Partition>, ChargeVector) {
    assert!(r >= 2);
    let m = partition_to_maya(lam);
    let mut charges = Vec::with_capacity(r);
    let mut quot = Vec::with_capacity(r);
    let mut core_subs = Vec::with_capacity(r);
    for i in 0..r {
        let sub = m.sub_diagram(i, r);
        let c = sub.charge();
        charges.push(c);
        quot.push(maya_to_partition(&sub.recentered(c)));
        core_subs.push(MayaDiagram::charged_vacuum(c));
    }
    let core = maya_to_partition(&MayaDiagram::recombine(&core_subs));
    (core, quot, ChargeVector(charges))
}

/// The r-core alone.
pub fn r_core(lam: &Partition, r: usize) -> Partition {
    core_quotient(lam, r).0
}

/// The r-quotient alone.
pub fn r_quotient(lam: &Partition, r: usize) -> Vec<Partition> {
    core_quotient(lam, r).1
}

/// True if lam has no hook of length divisible by... no, an r-core is a
/// partition from which no length-r ribbon can be removed, equivalently
/// one equal to its own r-core.
pub fn is_r_core(lam: &Partition, r: usize) -> bool {
    r_core(lam, r) == *lam
}

/// Size of the r-quotient: |quot(lam)| = (|lam| - |core(lam)|) / r.
pub fn quotient_size(lam: &Partition, r: usize) -> u64 {
    let core = r_core(lam, r);
    (lam.size() - core.size()) / r as u64
}

/// Inverse of the core-quotient decomposition. Panics unless `core` is an
/// r-core and `quot` has length r.
pub fn combine(core: &Partition, quot: &[Partition], r: usize) -> Partition {
    assert!(r >= 2);
    assert_eq!(quot.len(), r, "quotient must have r components");
    assert!(is_r_core(core, r), "not an r-core: {}", core);
    let m = partition_to_maya(core);
    let subs: Vec<MayaDiagram> = (0..r)
        .map(|i| {
            let c = m.sub_diagram(i, r).charge();
            let part = partition_to_maya(&quot[i]);
            part.recentered(-c)
        })
        .collect();
    maya_to_partition(&MayaDiagram::recombine(&subs))
}

/// Applies a permutation of Z/rZ to the quotient Maya diagrams: the new
/// sub-diagram in slot i is the old sub-diagram in slot pi(i). `pi` is
/// given in one-line notation.
pub fn perm_act(pi: &[usize], lam: &Partition, r: usize) -> Partition {
    assert_eq!(pi.len(), r);
    let m = partition_to_maya(lam);
    let subs: Vec<MayaDiagram> = (0..r).map(|i| m.sub_diagram(pi[i], r)).collect();
    maya_to_partition(&MayaDiagram::recombine(&subs))
}

/// The longest element w_0: i -> r - 1 - i.
pub fn w0_perm(r: usize) -> Vec<usize> {
    (0..r).map(|i| r - 1 - i).collect()
}

/// The long cycle sigma: i -> i - 1 mod r, so that the sub-diagrams are
/// cyclically shifted by one slot.
pub fn sigma_perm(r: usize) -> Vec<usize> {
    (0..r).map(|i| (i + r - 1) % r).collect()
}

/// sigma^k for any integer k (negative k inverts).
pub fn sigma_pow_perm(r: usize, k: i64) -> Vec<usize> {
    let k = k.rem_euclid(r as i64) as usize;
    (0..r).map(|i| (i + r - k) % r).collect()
}

/// Composition in action order: acting by compose(a,b) equals acting by a
/// first and then by b, i.e. perm_act(compose(a,b), .) =
/// perm_act(b, perm_act(a, .)). As a function on indices this is a after b.
pub fn compose_perms(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

/// All r-tuples of partitions of total size n, in a fixed deterministic
/// order.
pub fn multipartitions(n: u32, r: usize) -> Vec<Vec<Partition>> {
    fn rec(n: u32, slots: usize, cur: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
        if slots == 1 {
            let mut tuple = cur.clone();
            for lam in Partition::all_of(n) {
                tuple.push(lam);
                out.push(tuple.clone());
                tuple.pop();
            }
            return;
        }
        for k in (0..=n).rev() {
            for lam in Partition::all_of(k) {
                cur.push(lam);
                rec(n - k, slots - 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, r, &mut Vec::new(), &mut out);
    out
}

/// All partitions with the given r-core and quotient size n, ordered by
/// descending lexicographic order on the parts (a dominance-compatible
/// total order: mu >= lambda in dominance implies mu comes first).
pub fn enumerate_same_core(core: &Partition, r: usize, n: u32) -> Vec<Partition> {
    assert!(is_r_core(core, r), "not an r-core: {}", core);
    let mut out: Vec<Partition> = multipartitions(n, r)
        .iter()
        .map(|q| combine(core, q, r))
        .collect();
    out.sort_by(|a, b| b.parts().cmp(a.parts()));
    out.dedup();
    out
}

/// Per-color counts of the skew cells mu/lam, if lam is contained in mu.
pub fn skew_color_counts(lam: &Partition, mu: &Partition, r: usize) -> Option<Vec<usize>> {
    if !mu.contains(lam) {
        return None;
    }
    let mut counts = vec![0usize; r];
    for c in mu.skew_cells(lam) {
        counts[c.color(r)] += 1;
    }
    Some(counts)
}

/// If mu is obtained from lam by adding exactly k cells of each color,
/// returns Some(k).
pub fn subset_k(lam: &Partition, mu: &Partition, r: usize) -> Option<usize> {
    let counts = skew_color_counts(lam, mu, r)?;
    let k = counts[0];
    counts.iter().all(|&c| c == k).then_some(k)
}

/// All mu with lam subset_k mu: add k cells of each color keeping a
/// partition shape at every step. Cells are added in row-major order,
/// which visits every such mu exactly once.
pub fn successors(lam: &Partition, k: usize, r: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut quotas = vec![k; r];
    fn rec(
        cur: &Partition,
        quotas: &mut Vec<usize>,
        min_cell: (u32, u32),
        r: usize,
        out: &mut Vec<Partition>,
    ) {
        if quotas.iter().all(|&q| q == 0) {
            out.push(cur.clone());
            return;
        }
        for cell in cur.addable_corners() {
            if (cell.row, cell.col) < min_cell {
                continue;
            }
            let color = cell.color(r);
            if quotas[color] == 0 {
                continue;
            }
            quotas[color] -= 1;
            rec(&cur.with_cell(cell), quotas, (cell.row, cell.col), r, out);
            quotas[color] += 1;
        }
    }
    rec(lam, &mut quotas, (0, 0), r, &mut out);
    out.sort_by(|a, b| b.parts().cmp(a.parts()));
    out.dedup();
    out
}

/// Intermediate partitions nu with lam subset_l nu subset_{k-l} mu, where
/// lam subset_k mu. Panics if lam is not a balanced subdiagram of mu.
pub fn chains(lam: &Partition, mu: &Partition, r: usize, l: usize) -> Vec<Partition> {
    let k = subset_k(lam, mu, r).expect("chains requires lam subset_k mu");
    assert!(l <= k);
    successors(lam, l, r)
        .into_iter()
        .filter(|nu| mu.contains(nu))
        .collect()
}

/// The signed eigenvalue monomial T^{(j)}_lam: the product of -chi over the
/// color-j cells of lam minus its r-core.
pub fn t_color(lam: &Partition, r: usize, j: usize) -> LaurentQT {
    assert!(r >= 2);
    let core = r_core(lam, r);
    skew_t_color(&core, lam, r, j)
}

/// T^{(j)} for a skew shape mu/lam: product of -chi over its color-j cells.
pub fn skew_t_color(lam: &Partition, mu: &Partition, r: usize, j: usize) -> LaurentQT {
    let mut out = LaurentQT::one();
    for cell in mu.skew_cells(lam) {
        if cell.color(r) == j {
            out = out.mul(&cell.character().neg());
        }
    }
    out
}

/// Characters of the color-s cells of mu/lam.
pub fn skew_color_characters(lam: &Partition, mu: &Partition, r: usize, s: usize) -> Vec<LaurentQT> {
    mu.skew_cells(lam)
        .into_iter()
        .filter(|c| c.color(r) == s)
        .map(|c| c.character())
        .collect()
}

/// Serialized Maya diagram: charge plus the two exception sets.
#[derive(Clone, Debug, Serialize)]
pub struct MayaSerial {
    pub charge: i64,
    pub black_nonneg: Vec<i64>,
    pub white_neg: Vec<i64>,
}

impl MayaSerial {
    pub fn of(m: &MayaDiagram) -> Self {
        MayaSerial {
            charge: m.charge(),
            black_nonneg: m.black_nonneg().iter().copied().collect(),
            white_neg: m.white_neg().iter().copied().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Cell;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn maya_of_422_matches_bead_sets() {
        let m = partition_to_maya(&p("4,2,2"));
        for n in [2, 1, -2, -3, -5] {
            assert!(m.is_black(n), "expected black at {}", n);
        }
        for n in [3, 0, -1, -4] {
            assert!(!m.is_black(n), "expected white at {}", n);
        }
        assert_eq!(m.charge(), 0);
    }

    #[test]
    fn maya_of_empty_is_vacuum() {
        assert_eq!(partition_to_maya(&Partition::empty()), MayaDiagram::vacuum());
        assert_eq!(maya_to_partition(&MayaDiagram::vacuum()), Partition::empty());
    }

    #[test]
    fn young_maya_round_trip() {
        for n in 0..=10u32 {
            for lam in Partition::all_of(n) {
                assert_eq!(maya_to_partition(&partition_to_maya(&lam)), lam);
            }
        }
    }

    #[test]
    fn quotient_core_charges_of_422() {
        let (core, quot, charges) = core_quotient(&p("4,2,2"), 3);
        assert_eq!(core, p("1,1"));
        assert_eq!(quot, vec![Partition::empty(), Partition::empty(), p("1,1")]);
        assert_eq!(charges, ChargeVector(vec![0, 1, -1]));
    }

    #[test]
    fn combine_inverts_core_quotient() {
        let lam = combine(&p("1,1"), &[Partition::empty(), Partition::empty(), p("1,1")], 3);
        assert_eq!(lam, p("4,2,2"));
        for n in 0..=10u32 {
            for lam in Partition::all_of(n) {
                for r in [2usize, 3, 4, 5] {
                    let (core, quot, _) = core_quotient(&lam, r);
                    assert_eq!(combine(&core, &quot, r), lam, "lambda={} r={}", lam, r);
                    assert_eq!(
                        lam.size(),
                        core.size() + r as u64 * quot.iter().map(|q| q.size()).sum::<u64>()
                    );
                }
            }
        }
    }

    #[test]
    fn sigma_and_w0_examples() {
        let lam = p("4,2,2");
        assert_eq!(perm_act(&w0_perm(3), &lam, 3), p("6,4"));
        assert_eq!(perm_act(&sigma_perm(3), &lam, 3), p("6,4,1"));
        let s2 = compose_perms(&sigma_perm(3), &sigma_perm(3));
        assert_eq!(perm_act(&s2, &lam, 3), p("5,3"));
        assert_eq!(perm_act(&sigma_pow_perm(3, 2), &lam, 3), p("5,3"));
        let id: Vec<usize> = (0..3).collect();
        assert_eq!(perm_act(&id, &lam, 3), lam);
    }

    #[test]
    fn perm_act_is_an_action() {
        let perms = [w0_perm(3), sigma_perm(3), sigma_pow_perm(3, 2)];
        for n in 0..=8u32 {
            for lam in Partition::all_of(n) {
                for a in &perms {
                    for b in &perms {
                        assert_eq!(
                            perm_act(&compose_perms(a, b), &lam, 3),
                            perm_act(b, &perm_act(a, &lam, 3), 3)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn charge_identity() {
        // #A_i - #R_i = delta_{i,0} + c_{i-1} - c_i
        for n in 0..=12u32 {
            for lam in Partition::all_of(n) {
                for r in [2usize, 3, 4, 5] {
                    let corners = lam.corners(r);
                    let ChargeVector(c) = core_quotient(&lam, r).2;
                    for i in 0..r {
                        let lhs = corners.addable[i].len() as i64 - corners.removable[i].len() as i64;
                        let rhs = if i == 0 { 1 } else { 0 } + c[(i + r - 1) % r] - c[i];
                        assert_eq!(lhs, rhs, "lambda={} r={} i={}", lam, r, i);
                    }
                }
            }
        }
    }

    #[test]
    fn color_zero_boxes_invariant_under_perms() {
        // lam and pi(lam) share color-0 box sets; lam and sigma^k w0 lam
        // share color-k box sets.
        for r in [3usize, 4] {
            for n in 0..=10u32 {
                for lam in Partition::all_of(n) {
                    let count0 = |m: &Partition| {
                        let mut cells: Vec<Cell> =
                            m.cells().filter(|c| c.color(r) == 0).collect();
                        cells.sort();
                        cells
                    };
                    let w0 = perm_act(&w0_perm(r), &lam, r);
                    assert_eq!(count0(&lam), count0(&w0));
                    for k in 0..r as i64 {
                        let s = perm_act(&sigma_pow_perm(r, k), &lam, r);
                        assert_eq!(count0(&lam), count0(&s));
                        // sigma^k w_0 lambda = sigma^k acting on (w_0 lambda)
                        let skw0 = perm_act(
                            &compose_perms(&w0_perm(r), &sigma_pow_perm(r, k)),
                            &lam,
                            r,
                        );
                        let cells_k = |m: &Partition| {
                            let mut cells: Vec<Cell> =
                                m.cells().filter(|c| c.color(r) == k as usize).collect();
                            cells.sort();
                            cells
                        };
                        assert_eq!(cells_k(&lam), cells_k(&skw0), "lam={} k={} r={}", lam, k, r);
                    }
                }
            }
        }
    }

    #[test]
    fn enumerate_same_core_examples() {
        let got = enumerate_same_core(&Partition::empty(), 3, 1);
        assert_eq!(got, vec![p("3"), p("2,1"), p("1,1,1")]);
        let alpha = p("1");
        assert_eq!(enumerate_same_core(&alpha, 3, 0), vec![alpha.clone()]);
        // 3-multipartitions of 2: there are 9
        assert_eq!(enumerate_same_core(&Partition::empty(), 3, 2).len(), 9);
        assert_eq!(multipartitions(2, 3).len(), 9);
    }

    #[test]
    fn enumerate_matches_filter_oracle() {
        // filter all partitions of 3n with empty 3-core
        for n in 1..=3u32 {
            let direct: Vec<Partition> = Partition::all_of(3 * n)
                .into_iter()
                .filter(|lam| r_core(lam, 3).is_empty())
                .collect();
            let enumerated = enumerate_same_core(&Partition::empty(), 3, n);
            assert_eq!(enumerated.len(), direct.len());
            for lam in direct {
                assert!(enumerated.contains(&lam));
            }
        }
    }

    #[test]
    fn successors_and_chains() {
        let from_empty = successors(&Partition::empty(), 1, 3);
        assert_eq!(from_empty, enumerate_same_core(&Partition::empty(), 3, 1));
        // adding boxes preserves the core
        for lam in enumerate_same_core(&p("1"), 3, 1) {
            for mu in successors(&lam, 1, 3) {
                assert_eq!(r_core(&mu, 3), p("1"));
                assert_eq!(subset_k(&lam, &mu, 3), Some(1));
                assert_eq!(chains(&lam, &mu, 3, 0), vec![lam.clone()]);
                assert_eq!(chains(&lam, &mu, 3, 1), vec![mu.clone()]);
            }
        }
    }

    #[test]
    fn successors_match_enumeration() {
        for k in 1..=2usize {
            let direct: Vec<Partition> = enumerate_same_core(&Partition::empty(), 3, k as u32)
                .into_iter()
                .collect();
            assert_eq!(successors(&Partition::empty(), k, 3), direct);
            for lam in enumerate_same_core(&Partition::empty(), 3, 1) {
                let succ = successors(&lam, k, 3);
                let filtered: Vec<Partition> =
                    enumerate_same_core(&Partition::empty(), 3, 1 + k as u32)
                        .into_iter()
                        .filter(|mu| subset_k(&lam, mu, 3) == Some(k))
                        .collect();
                assert_eq!(succ, filtered, "lam={} k={}", lam, k);
            }
        }
    }

    #[test]
    fn t_color_examples() {
        // any r-core has T = 1
        assert_eq!(t_color(&p("1"), 3, 0), LaurentQT::one());
        assert_eq!(t_color(&p("2"), 3, 1), LaurentQT::one());
        // (3)/core(3) = (3) with the single color-0 cell (0,0)
        assert_eq!(t_color(&p("3"), 3, 0), LaurentQT::from_int(-1));
        // (4,2,2)/ (1,1): color-0 cells are (3,0) and (1,1)
        assert_eq!(t_color(&p("4,2,2"), 3, 0), LaurentQT::qt_pow(4, 1));
    }
}
