//! Partitions and their Young diagrams in the French convention.
//!
//! The cell in column i >= 0 and row j >= 0 (lower-left cell = (0,0))
//! carries the character chi = q^i t^j and the content c = j - i; the color
//! of a cell is its content mod r. On top of the diagrams this module
//! provides colored addable/removable corners, the colored character sums
//! B^{(i)} and D^{(i)}, arm/leg/hook data, and the norm N_lambda given by
//! the product over cells with hook length divisible by r of
//! (1 - q^{a+1} t^{-l})(1 - q^{-a} t^{l+1}).

use std::fmt;
use std::str::FromStr;

use crate::maya;
use crate::qtalg::LaurentQT;

/// A partition: a weakly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

/// A cell of a Young diagram; `col` and `row` are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub col: u32,
    pub row: u32,
}

impl Cell {
    pub fn new(col: u32, row: u32) -> Self {
        Cell { col, row }
    }

    /// The character q^col t^row.
    pub fn character(&self) -> LaurentQT {
        LaurentQT::qt_pow(self.col as i64, self.row as i64)
    }

    /// The content row - col.
    pub fn content(&self) -> i64 {
        self.row as i64 - self.col as i64
    }

    /// The content mod r.
    pub fn color(&self, r: usize) -> usize {
        self.content().rem_euclid(r as i64) as usize
    }
}

/// Colored addable and removable corners of a partition, with cells listed
/// in (row, col) lexicographic order within each color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerData {
    pub addable: Vec<Vec<Cell>>,
    pub removable: Vec<Vec<Cell>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid partition: {}", self.0)
    }
}

impl std::error::Error for ParseError {}

impl Partition {
    /// Builds a partition; panics unless the parts are weakly decreasing
    /// and positive.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "partition parts must be weakly decreasing and positive"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds from any nonnegative parts, sorting and dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        (cell.row as usize) < self.parts.len() && cell.col < self.parts[cell.row as usize]
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(j, &p)| (0..p).map(move |i| Cell::new(i, j as u32)))
    }

    /// Cells of self not in the contained partition `inner`.
    pub fn skew_cells(&self, inner: &Partition) -> Vec<Cell> {
        assert!(self.contains(inner), "skew shape requires containment");
        self.cells().filter(|c| !inner.contains_cell(*c)).collect()
    }

    /// The transposed partition: t-lambda_i = #{k : lambda_k >= i}.
    pub fn conjugate(&self) -> Partition {
        let m = self.part(0);
        let parts = (1..=m)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Adds a cell, which must be an addable corner.
    pub fn with_cell(&self, cell: Cell) -> Partition {
        let mut parts = self.parts.clone();
        let row = cell.row as usize;
        if row == parts.len() {
            assert_eq!(cell.col, 0, "not an addable corner");
            parts.push(1);
        } else {
            assert!(row < parts.len() && parts[row] == cell.col, "not an addable corner");
            parts[row] += 1;
        }
        Partition::new(parts)
    }

    /// Removes a cell, which must be a removable corner.
    pub fn without_cell(&self, cell: Cell) -> Partition {
        let mut parts = self.parts.clone();
        let row = cell.row as usize;
        assert!(row < parts.len() && parts[row] == cell.col + 1, "not a removable corner");
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.remove(row);
        }
        Partition { parts }
    }

    /// All addable corners, bottom row first.
    pub fn addable_corners(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for j in 0..=self.parts.len() {
            let here = self.part(j);
            if j == 0 || self.parts[j - 1] > here {
                out.push(Cell::new(here, j as u32));
            }
        }
        out
    }

    /// All removable corners, bottom row first.
    pub fn removable_corners(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for j in 0..self.parts.len() {
            let below_ok = j + 1 == self.parts.len() || self.parts[j + 1] < self.parts[j];
            if below_ok {
                out.push(Cell::new(self.parts[j] - 1, j as u32));
            }
        }
        out
    }

    /// Colored corner data for a given r >= 2.
    pub fn corners(&self, r: usize) -> CornerData {
        assert!(r >= 2, "corners requires r >= 2");
        let mut addable = vec![Vec::new(); r];
        let mut removable = vec![Vec::new(); r];
        for cell in self.addable_corners() {
            addable[cell.color(r)].push(cell);
        }
        for cell in self.removable_corners() {
            removable[cell.color(r)].push(cell);
        }
        for v in addable.iter_mut().chain(removable.iter_mut()) {
            v.sort_by_key(|c| (c.row, c.col));
        }
        CornerData { addable, removable }
    }

    /// Colored character sums: B^{(i)} = sum of chi over color-i cells,
    /// D^{(i)} = -t B^{(i-1)} + (1+qt) B^{(i)} - q B^{(i+1)} - delta_{i,0},
    /// along with the colored cell counts d_i.
    pub fn char_sums(&self, r: usize) -> (Vec<LaurentQT>, Vec<LaurentQT>, Vec<usize>) {
        assert!(r >= 2);
        let mut b = vec![LaurentQT::zero(); r];
        let mut counts = vec![0usize; r];
        for cell in self.cells() {
            let i = cell.color(r);
            b[i] = b[i].add(&cell.character());
            counts[i] += 1;
        }
        let q = LaurentQT::q();
        let t = LaurentQT::t();
        let one_qt = LaurentQT::one().add(&q.mul(&t));
        let mut d = Vec::with_capacity(r);
        for i in 0..r {
            let prev = &b[(i + r - 1) % r];
            let next = &b[(i + 1) % r];
            let mut di = b[i].mul(&one_qt).sub(&prev.mul(&t)).sub(&next.mul(&q));
            if i == 0 {
                di = di.sub(&LaurentQT::one());
            }
            d.push(di);
        }
        (b, d, counts)
    }

    /// D^{(i)} in corner form: qt * sum_{R_i} chi - sum_{A_i} chi.
    pub fn d_corner_form(&self, r: usize) -> Vec<LaurentQT> {
        let corners = self.corners(r);
        let qt = LaurentQT::qt_pow(1, 1);
        (0..r)
            .map(|i| {
                let rem: LaurentQT = corners.removable[i]
                    .iter()
                    .fold(LaurentQT::zero(), |acc, c| acc.add(&c.character()));
                let add: LaurentQT = corners.addable[i]
                    .iter()
                    .fold(LaurentQT::zero(), |acc, c| acc.add(&c.character()));
                rem.mul(&qt).sub(&add)
            })
            .collect()
    }

    /// Arm, leg and hook length of a cell: the number of cells strictly
    /// right in its row, strictly above in its column, and arm + leg + 1.
    pub fn hook_data(&self, cell: Cell) -> (u32, u32, u32) {
        debug_assert!(self.contains_cell(cell));
        let arm = self.parts[cell.row as usize] - cell.col - 1;
        let conj = self.conjugate();
        let leg = conj.parts[cell.col as usize] - cell.row - 1;
        (arm, leg, arm + leg + 1)
    }

    /// Hook table, cells in (row, col) order.
    pub fn hooks(&self) -> Vec<(Cell, u32, u32, u32)> {
        let conj = self.conjugate();
        self.cells()
            .map(|cell| {
                let arm = self.parts[cell.row as usize] - cell.col - 1;
                let leg = conj.parts[cell.col as usize] - cell.row - 1;
                (cell, arm, leg, arm + leg + 1)
            })
            .collect()
    }

    /// The norm N_lambda: product over cells whose hook is divisible by r
    /// of (1 - q^{a+1} t^{-l})(1 - q^{-a} t^{l+1}).
    pub fn norm(&self, r: usize) -> LaurentQT {
        assert!(r >= 2);
        let mut out = LaurentQT::one();
        for (_, arm, leg, hook) in self.hooks() {
            if !(hook as usize).is_multiple_of(r) {
                continue;
            }
            let (a, l) = (arm as i64, leg as i64);
            let f1 = LaurentQT::one().sub(&LaurentQT::qt_pow(a + 1, -l));
            let f2 = LaurentQT::one().sub(&LaurentQT::qt_pow(-a, l + 1));
            out = out.mul(&f1).mul(&f2);
        }
        out
    }

    /// Dominance order for equal sizes: all partial sums of self are <=
    /// those of other.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.size(), other.size());
        let n = self.len().max(other.len());
        let mut s = 0i64;
        let mut o = 0i64;
        for i in 0..n {
            s += self.part(i) as i64;
            o += other.part(i) as i64;
            if s > o {
                return false;
            }
        }
        true
    }

    /// Dominance with the extra requirement of equal r-cores. Panics on a
    /// size mismatch.
    pub fn dominated_by_r(&self, other: &Partition, r: usize) -> bool {
        assert_eq!(self.size(), other.size(), "dominance compares equal sizes");
        self.dominated_by(other) && maya::r_core(self, r) == maya::r_core(other, r)
    }

    /// All partitions of n, in descending lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        fn rec(remaining: u32, max: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: stack.clone() });
                return;
            }
            let hi = max.min(remaining);
            for p in (1..=hi).rev() {
                stack.push(p);
                rec(remaining - p, p, stack, out);
                stack.pop();
            }
        }
        rec(n, n, &mut stack, &mut out);
        out
    }
}

impl FromStr for Partition {
    type Err = ParseError;

    /// Parses comma-separated descending positive integers; the empty
    /// string (or "0") is the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in s.split(',') {
            let p: u32 = token
                .trim()
                .parse()
                .map_err(|_| ParseError(format!("bad part {:?}", token)))?;
            if p == 0 {
                return Err(ParseError("parts must be positive".into()));
            }
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(ParseError("parts must be weakly decreasing".into()));
        }
        Ok(Partition { parts })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtalg::RatQT;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("4,2,2").conjugate(), p("3,3,1,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("5").conjugate(), p("1,1,1,1,1"));
    }

    #[test]
    fn conjugate_is_involution() {
        for n in 0..=9u32 {
            for lam in Partition::all_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn corners_of_422_mod_3() {
        let c = p("4,2,2").corners(3);
        assert_eq!(c.addable[0], vec![Cell::new(0, 3)]);
        assert!(c.addable[1].is_empty());
        assert_eq!(c.addable[2], vec![Cell::new(4, 0), Cell::new(2, 1)]);
        assert_eq!(c.removable[0], vec![Cell::new(3, 0)]);
        assert_eq!(c.removable[1], vec![Cell::new(1, 2)]);
        assert!(c.removable[2].is_empty());
    }

    #[test]
    fn corners_of_empty_and_single_box() {
        let c = Partition::empty().corners(3);
        assert_eq!(c.addable[0], vec![Cell::new(0, 0)]);
        assert!(c.addable[1].is_empty() && c.addable[2].is_empty());
        assert!(c.removable.iter().all(|v| v.is_empty()));

        let c = p("1").corners(3);
        assert_eq!(c.removable[0], vec![Cell::new(0, 0)]);
        assert_eq!(c.addable[1], vec![Cell::new(0, 1)]);
        assert_eq!(c.addable[2], vec![Cell::new(1, 0)]);
    }

    #[test]
    fn addable_and_removable_counts() {
        for n in 0..=10u32 {
            for lam in Partition::all_of(n) {
                assert_eq!(lam.addable_corners().len(), lam.removable_corners().len() + 1);
            }
        }
    }

    #[test]
    fn char_sums_of_empty() {
        let (b, d, counts) = Partition::empty().char_sums(3);
        assert!(b.iter().all(|x| x.is_zero()));
        assert_eq!(d[0], LaurentQT::from_int(-1));
        assert!(d[1].is_zero() && d[2].is_zero());
        assert_eq!(counts, vec![0, 0, 0]);
    }

    #[test]
    fn char_sums_of_single_box() {
        let lam = p("1");
        let (b, d, _) = lam.char_sums(3);
        assert_eq!(b[0], LaurentQT::one());
        assert!(b[1].is_zero() && b[2].is_zero());
        assert_eq!(d, lam.d_corner_form(3));
        assert_eq!(d[0], LaurentQT::qt_pow(1, 1));
        assert_eq!(d[1], LaurentQT::t().neg());
        assert_eq!(d[2], LaurentQT::q().neg());
    }

    #[test]
    fn char_sums_of_422() {
        // color-0 cells of (4,2,2): (0,0), (3,0), (1,1)
        let (b, _, counts) = p("4,2,2").char_sums(3);
        let expected = LaurentQT::one()
            .add(&LaurentQT::qt_pow(3, 0))
            .add(&LaurentQT::qt_pow(1, 1));
        assert_eq!(b[0], expected);
        assert_eq!(counts[0], 3);
    }

    #[test]
    fn d_forms_agree_up_to_size_12() {
        for n in 0..=12u32 {
            for lam in Partition::all_of(n) {
                for r in 2..=5 {
                    let (_, d, _) = lam.char_sums(r);
                    assert_eq!(d, lam.d_corner_form(r), "lambda={} r={}", lam, r);
                }
            }
        }
    }

    #[test]
    fn hook_examples() {
        assert_eq!(p("1").hook_data(Cell::new(0, 0)), (0, 0, 1));
        assert_eq!(p("4,2,2").hook_data(Cell::new(0, 0)), (3, 2, 6));
        assert_eq!(p("2,1").hook_data(Cell::new(0, 0)), (1, 1, 3));
    }

    #[test]
    fn norm_examples() {
        // (1): no hook divisible by 3
        assert_eq!(p("1").norm(3), LaurentQT::one());
        // (2,1): the corner cell has hook 3, arm 1, leg 1
        let expected = LaurentQT::one()
            .sub(&LaurentQT::qt_pow(2, -1))
            .mul(&LaurentQT::one().sub(&LaurentQT::qt_pow(-1, 2)));
        assert_eq!(p("2,1").norm(3), expected);
        // (3): cell (0,0) has hook 3, arm 2, leg 0
        let expected = LaurentQT::one()
            .sub(&LaurentQT::qt_pow(3, 0))
            .mul(&LaurentQT::one().sub(&LaurentQT::qt_pow(-2, 1)));
        assert_eq!(p("3").norm(3), expected);
    }

    #[test]
    fn dominance_examples() {
        assert!(p("2,1,1").dominated_by(&p("3,1")));
        assert!(p("2,1,1").dominated_by(&p("2,1,1")));
        assert!(!p("3,1").dominated_by(&p("2,1,1")));
        // same dominance but different 3-cores
        assert!(!p("2,1,1").dominated_by_r(&p("3,1"), 3));
        // both have empty 2-core
        assert!(p("1,1,1,1").dominated_by_r(&p("4"), 2));
        assert!(p("3,1").dominated_by_r(&p("3,1"), 4));
    }

    #[test]
    fn addrem_product_is_minus_one() {
        // prod over colors of prod_{A_i} (-chi) / prod_{R_i} (-qt chi) = -1
        for n in 0..=12u32 {
            for lam in Partition::all_of(n) {
                for r in [2usize, 3, 4, 5] {
                    let corners = lam.corners(r);
                    let mut num = LaurentQT::one();
                    let mut den = LaurentQT::one();
                    for i in 0..r {
                        for c in &corners.addable[i] {
                            num = num.mul(&c.character().neg());
                        }
                        for c in &corners.removable[i] {
                            den = den.mul(&c.character().mul_monomial(1, 1).neg());
                        }
                    }
                    assert_eq!(
                        RatQT::new(num, den),
                        RatQT::from_int(-1),
                        "lambda={} r={}",
                        lam,
                        r
                    );
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("4,2,2").to_string(), "(4,2,2)");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("2,3".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn all_partitions_count() {
        assert_eq!(Partition::all_of(6).len(), 11);
        assert_eq!(Partition::all_of(0), vec![Partition::empty()]);
    }
}
