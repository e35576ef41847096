//! Wreath Macdonald polynomials and their verification suites.
//!
//! The polynomial H_lambda (for r >= 2 and a partition lambda with
//! |quot(lambda)| = n) is the degree-n multisymmetric function
//! characterized by two triangularity conditions and a normalization:
//! plethysm by (1 - q sigma^{-1}) lands in the span of s_{quot(mu)} for
//! mu >=_r lambda, plethysm by (1 - t^{-1} sigma^{-1}) in the span for
//! mu <=_r lambda, and the coefficient of s_n[X^(0)] is 1.
//!
//! Two independent routes compute it here:
//! - [`solve_defining`] imposes the characterization literally and solves
//!   the linear system over Q(q,t) per fixed-core block;
//! - [`build_h`] assembles the monomial expansion from dual Pieri
//!   coefficients: the coefficient of m_gamma is the iterated skew
//!   prod h^perp_{gamma^i_j}[X^(i)] applied to H_lambda, evaluated by
//!   summing over chains of same-core partitions down to the core.
//!
//! The remaining functions verify orthogonality under the star pairing,
//! reciprocity, the empty-core evaluation identities, and the evaluation
//! H_mu[-eps_0] through e-skew chains.

pub mod operator;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::maya::{self, ChargeVector};
use crate::multisym::{Alphabet, Basis, ColorMatrix, MultiPartition, MultiSymFn, ZPoly};
use crate::partition::Partition;
use crate::pieri::PieriTable;
use crate::qtalg::{LaurentQT, RatQT, RatSerial};

/// A wreath Macdonald polynomial: the indexing partition, its core and
/// charges, and the monomial expansion of degree |quot(lambda)|.
#[derive(Clone)]
pub struct HPolynomial {
    pub lam: Partition,
    pub r: usize,
    pub core: Partition,
    pub charges: ChargeVector,
    pub expansion: MultiSymFn,
}

impl HPolynomial {
    pub fn quotient_degree(&self) -> u64 {
        maya::quotient_size(&self.lam, self.r)
    }

    /// Evaluate the polynomial at a virtual alphabet.
    pub fn eval(&self, y: &Alphabet) -> ZPoly {
        self.expansion.eval(y)
    }

    pub fn eval_scalar(&self, y: &Alphabet) -> RatQT {
        self.expansion.eval_scalar(y)
    }

    /// The dagger polynomial H_lambda[-iota X*; q^{-1}, t^{-1}].
    pub fn dagger(&self) -> MultiSymFn {
        self.expansion.dagger()
    }

    /// The norm N_lambda.
    pub fn norm(&self) -> LaurentQT {
        self.lam.norm(self.r)
    }
}

/// All partitions with the given core and quotient size, in the canonical
/// (dominance-compatible) order.
pub fn block(core: &Partition, r: usize, n: u32) -> Vec<Partition> {
    maya::enumerate_same_core(core, r, n)
}

/// Partitions nu with nu subset_k mu (same core, k boxes of each color
/// removed).
pub fn predecessors(mu: &Partition, k: usize, r: usize) -> Vec<Partition> {
    let n = maya::quotient_size(mu, r);
    if (k as u64) > n {
        return Vec::new();
    }
    let core = maya::r_core(mu, r);
    block(&core, r, (n - k as u64) as u32)
        .into_iter()
        .filter(|nu| mu.contains(nu))
        .collect()
}

/// The monomial coefficient M_{lambda,gamma} = prod_{i,j}
/// h^perp_{gamma^i_j}[X^(i)] H_lambda, computed by chaining dual Pieri
/// coefficients down to the core.
pub fn monomial_coefficient(
    table: &PieriTable,
    lam: &Partition,
    r: usize,
    gamma: &MultiPartition,
) -> RatQT {
    let mut ops = Vec::new();
    for color in 0..r {
        for &part in gamma.comp(color).parts() {
            ops.push((color, part as usize));
        }
    }
    skew_chain(table, lam, r, &ops)
}

/// Apply a sequence of h^perp skews, each given as (color, degree), to
/// H_lambda and return the coefficient of H_core. Skewing operators
/// commute, so the result does not depend on the order of `ops`.
pub fn skew_chain(
    table: &PieriTable,
    lam: &Partition,
    r: usize,
    ops: &[(usize, usize)],
) -> RatQT {
    let mut state: BTreeMap<Partition, RatQT> = BTreeMap::new();
    state.insert(lam.clone(), RatQT::one());
    for &(color, part) in ops {
        let mut next: BTreeMap<Partition, RatQT> = BTreeMap::new();
        for (nu, coeff) in &state {
            for nu_down in predecessors(nu, part, r) {
                let c = table.c(&nu_down, nu, color, r);
                if c.is_zero() {
                    continue;
                }
                let add = coeff.mul(&c);
                match next.get_mut(&nu_down) {
                    Some(v) => {
                        *v = v.add(&add);
                        if v.is_zero() {
                            next.remove(&nu_down);
                        }
                    }
                    None => {
                        next.insert(nu_down, add);
                    }
                }
            }
        }
        state = next;
    }
    let core = maya::r_core(lam, r);
    state.get(&core).cloned().unwrap_or_else(RatQT::zero)
}

/// The monomial expansion of H_lambda from the dual Pieri recursion.
pub fn build_h(table: &PieriTable, lam: &Partition, r: usize) -> HPolynomial {
    assert!(r >= 2, "wreath Macdonald polynomials require r >= 2");
    let (core, _, charges) = maya::core_quotient(lam, r);
    let n = maya::quotient_size(lam, r) as u32;
    let mut expansion = MultiSymFn::zero(r, Basis::M);
    for gamma in maya::multipartitions(n, r) {
        let gamma = MultiPartition::new(gamma);
        let coeff = monomial_coefficient(table, lam, r, &gamma);
        if !coeff.is_zero() {
            expansion = expansion.add(&MultiSymFn::term(r, Basis::M, gamma, coeff));
        }
    }
    HPolynomial { lam: lam.clone(), r, core, charges, expansion }
}

/// Build every H in the block with the given core and quotient size,
/// in parallel over the block.
pub fn build_block(
    table: &PieriTable,
    core: &Partition,
    r: usize,
    n: u32,
) -> Vec<HPolynomial> {
    let lams = block(core, r, n);
    lams.par_iter().map(|lam| build_h(table, lam, r)).collect()
}

// ---------------------------------------------------------------------------
// The defining-condition solver (the oracle)
// ---------------------------------------------------------------------------

/// Solve a consistent, uniquely determined linear system over Q(q,t) by
/// Gaussian elimination; rows are (coefficients, rhs).
fn solve_unique(mut rows: Vec<(Vec<RatQT>, RatQT)>, dim: usize) -> Result<Vec<RatQT>, String> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut used = vec![false; rows.len()];
    for col in 0..dim {
        let pivot = (0..rows.len())
            .find(|&i| !used[i] && !rows[i].0[col].is_zero())
            .ok_or_else(|| format!("no pivot for column {}: system is singular", col))?;
        used[pivot] = true;
        pivots.push(pivot);
        let p = rows[pivot].0[col].clone();
        for j in 0..dim {
            rows[pivot].0[j] = rows[pivot].0[j].div(&p).unwrap();
        }
        rows[pivot].1 = rows[pivot].1.div(&p).unwrap();
        let base = rows[pivot].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == pivot || row.0[col].is_zero() {
                continue;
            }
            let f = row.0[col].clone();
            for j in 0..dim {
                let s = base.0[j].mul(&f);
                row.0[j] = row.0[j].sub(&s);
            }
            let s = base.1.mul(&f);
            row.1 = row.1.sub(&s);
        }
    }
    // consistency of the leftover rows
    for (i, row) in rows.iter().enumerate() {
        if used[i] {
            continue;
        }
        if row.0.iter().any(|c| !c.is_zero()) || !row.1.is_zero() {
            return Err("inconsistent system: conditions are not satisfiable".into());
        }
    }
    let mut solution = vec![RatQT::zero(); dim];
    for (col, &pi) in pivots.iter().enumerate() {
        solution[col] = rows[pi].1.clone();
    }
    Ok(solution)
}

/// Solve the defining conditions on the block with the given core and
/// quotient size, returning each H_lambda in the Schur basis converted to
/// the monomial basis. This route is independent of the Pieri recursion.
pub fn solve_defining(
    core: &Partition,
    n: u32,
    r: usize,
) -> Result<BTreeMap<Partition, HPolynomial>, String> {
    assert!(r >= 2);
    let labels: Vec<MultiPartition> =
        maya::multipartitions(n, r).into_iter().map(MultiPartition::new).collect();
    let dim = labels.len();
    let index: BTreeMap<MultiPartition, usize> =
        labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
    let members: Vec<Partition> = labels.iter().map(|g| maya::combine(core, g.comps(), r)).collect();
    // plethysm matrices in the Schur basis: columns indexed by the input
    // label, rows by the output label
    let q_matrix = ColorMatrix::identity(r).sub(
        &ColorMatrix::sigma_pow(r, -1).scale(&RatQT::from_laurent(LaurentQT::q())),
    );
    let t_matrix = ColorMatrix::identity(r).sub(
        &ColorMatrix::sigma_pow(r, -1)
            .scale(&RatQT::one().div(&RatQT::from_laurent(LaurentQT::t())).unwrap()),
    );
    let column = |a: &ColorMatrix, g: &MultiPartition| -> Vec<RatQT> {
        let s = MultiSymFn::term(r, Basis::S, g.clone(), RatQT::one());
        let image = s.matrix_plethysm(a).to_basis(Basis::S);
        let mut col = vec![RatQT::zero(); dim];
        for (label, coeff) in image.terms() {
            col[index[label]] = coeff.clone();
        }
        col
    };
    let q_cols: Vec<Vec<RatQT>> = labels.iter().map(|g| column(&q_matrix, g)).collect();
    let t_cols: Vec<Vec<RatQT>> = labels.iter().map(|g| column(&t_matrix, g)).collect();
    let unit_row = index[&MultiPartition::single(r, 0, Partition::from_unsorted(vec![n]))];
    let mut out = BTreeMap::new();
    for lam in members.iter() {
        let mut rows: Vec<(Vec<RatQT>, RatQT)> = Vec::new();
        for (mi, mu) in members.iter().enumerate() {
            // condition (1): coefficient of s_{quot(mu)} vanishes in
            // H_lam[(1 - q sigma^{-1}) X*] unless mu >=_r lam
            if !lam.dominated_by(mu) {
                let row: Vec<RatQT> = (0..dim).map(|g| q_cols[g][mi].clone()).collect();
                rows.push((row, RatQT::zero()));
            }
            // condition (2): vanishing unless mu <=_r lam
            if !mu.dominated_by(lam) {
                let row: Vec<RatQT> = (0..dim).map(|g| t_cols[g][mi].clone()).collect();
                rows.push((row, RatQT::zero()));
            }
        }
        // normalization: the coefficient of s_n[X^(0)] is 1
        let mut norm_row = vec![RatQT::zero(); dim];
        norm_row[unit_row] = RatQT::one();
        rows.push((norm_row, RatQT::one()));
        let solution = solve_unique(rows, dim).map_err(|e| format!("H_{}: {}", lam, e))?;
        let mut expansion = MultiSymFn::zero(r, Basis::S);
        for (g, coeff) in labels.iter().zip(solution) {
            expansion = expansion.add(&MultiSymFn::term(r, Basis::S, g.clone(), coeff));
        }
        let (core, _, charges) = maya::core_quotient(lam, r);
        out.insert(
            lam.clone(),
            HPolynomial { lam: lam.clone(), r, core, charges, expansion: expansion.to_basis(Basis::M) },
        );
    }
    Ok(out)
}

/// Check the two triangularity conditions directly on a monomial
/// expansion.
pub fn check_triangularity(h: &HPolynomial) -> bool {
    let r = h.r;
    let q_matrix = ColorMatrix::identity(r).sub(
        &ColorMatrix::sigma_pow(r, -1).scale(&RatQT::from_laurent(LaurentQT::q())),
    );
    let t_matrix = ColorMatrix::identity(r).sub(
        &ColorMatrix::sigma_pow(r, -1)
            .scale(&RatQT::one().div(&RatQT::from_laurent(LaurentQT::t())).unwrap()),
    );
    let up = h.expansion.matrix_plethysm(&q_matrix).to_basis(Basis::S);
    let down = h.expansion.matrix_plethysm(&t_matrix).to_basis(Basis::S);
    for (label, coeff) in up.terms() {
        if coeff.is_zero() {
            continue;
        }
        let mu = maya::combine(&h.core, label.comps(), r);
        if !h.lam.dominated_by(&mu) {
            return false;
        }
    }
    for (label, coeff) in down.terms() {
        if coeff.is_zero() {
            continue;
        }
        let mu = maya::combine(&h.core, label.comps(), r);
        if !mu.dominated_by(&h.lam) {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Alphabets and evaluations
// ---------------------------------------------------------------------------

/// The alphabet of colored character sums D^(i)_mu.
pub fn alphabet_d(mu: &Partition, r: usize) -> Alphabet {
    let (_, d, _) = mu.char_sums(r);
    Alphabet::from_values(d.into_iter().map(RatQT::from_laurent).collect())
}

/// The alphabet of colored character sums B^(i)_mu.
pub fn alphabet_b(mu: &Partition, r: usize) -> Alphabet {
    let (b, _, _) = mu.char_sums(r);
    Alphabet::from_values(b.into_iter().map(RatQT::from_laurent).collect())
}

/// The product over color-k cells of lambda of (1 - z chi), as a
/// z-polynomial.
pub fn color_cell_product(lam: &Partition, r: usize, k: usize) -> ZPoly {
    let mut out = ZPoly::one();
    for cell in lam.cells() {
        if cell.color(r) == k {
            let factor = ZPoly::constant(RatQT::one())
                .sub(&ZPoly::monomial(RatQT::from_laurent(cell.character()), 1));
            out = out.mul(&factor);
        }
    }
    out
}

/// T^(j)_lambda as a rational scalar.
pub fn t_eigenvalue(lam: &Partition, r: usize, j: usize) -> RatQT {
    RatQT::from_laurent(maya::t_color(lam, r, j))
}

/// Reciprocity: for w_0 core(mu) = core(lam),
/// H_lam[iota D*_mu] / T^(0)_lam = H_mu[iota D*_lam] / T^(0)_mu.
pub fn verify_reciprocity_plain(hl: &HPolynomial, hm: &HPolynomial) -> Result<bool, String> {
    let r = hl.r;
    let w0_core_mu = maya::perm_act(&maya::w0_perm(r), &hm.core, r);
    if w0_core_mu != hl.core {
        return Err(format!(
            "hypothesis w0 core(mu) = core(lam) fails: w0 {} = {} vs {}",
            hm.core, w0_core_mu, hl.core
        ));
    }
    let iota = ColorMatrix::iota(r);
    let lhs = hl.eval_scalar(&alphabet_d(&hm.lam, r).apply_matrix(&iota));
    let rhs = hm.eval_scalar(&alphabet_d(&hl.lam, r).apply_matrix(&iota));
    Ok(lhs.mul(&t_eigenvalue(&hm.lam, r, 0)) == rhs.mul(&t_eigenvalue(&hl.lam, r, 0)))
}

/// Macdonald-Koornwinder reciprocity with a color shift: for
/// w_0 sigma^{-k} core(mu) = core(lam), the z-polynomial identity
/// H_lam[eps_0 + z iota sigma^k D*_mu] prod_{color-k cells of mu} (1 - z chi)
///   = (same with lam and mu exchanged).
pub fn verify_reciprocity_mk(hl: &HPolynomial, hm: &HPolynomial, k: usize) -> Result<bool, String> {
    let r = hl.r;
    let perm = maya::compose_perms(&maya::sigma_pow_perm(r, -(k as i64)), &maya::w0_perm(r));
    let moved = maya::perm_act(&perm, &hm.core, r);
    if moved != hl.core {
        return Err(format!(
            "hypothesis w0 sigma^-{} core(mu) = core(lam) fails: {} vs {}",
            k, moved, hl.core
        ));
    }
    let shift = ColorMatrix::iota(r).mul(&ColorMatrix::sigma_pow(r, k as i64));
    let eval = |h: &HPolynomial, other: &HPolynomial| -> ZPoly {
        let y = Alphabet::eps(r, 0).add(&alphabet_d(&other.lam, r).apply_matrix(&shift).scale_z(1));
        h.eval(&y)
    };
    let lhs = eval(hl, hm).mul(&color_cell_product(&hm.lam, r, k));
    let rhs = eval(hm, hl).mul(&color_cell_product(&hl.lam, r, k));
    Ok(lhs == rhs)
}

/// The product Pi^(k)_lambda over the color-k cells of lambda other than
/// the origin of (1 - chi).
pub fn pi_product(lam: &Partition, r: usize, k: usize) -> RatQT {
    let mut out = RatQT::one();
    for cell in lam.cells() {
        if (cell.col, cell.row) == (0, 0) || cell.color(r) != k {
            continue;
        }
        let factor = RatQT::from_laurent(LaurentQT::one().sub(&cell.character()));
        out = out.mul(&factor);
    }
    out
}

/// The Pi-normalized reciprocity: for w_0 sigma^{-k} core(mu) = core(lam),
/// the z = 1 specialization of the shifted reciprocity. The alphabet is
/// eps_0 + iota sigma^k D*_mu = eps_0 - eps_k + M^T iota sigma^k B*_mu.
/// For k = 0 the origin cells contribute a common factor (1 - z) to both
/// cell products, divided out before specializing; this requires both
/// diagrams to be nonempty.
pub fn verify_reciprocity_pi(hl: &HPolynomial, hm: &HPolynomial, k: usize) -> Result<bool, String> {
    let r = hl.r;
    let perm = maya::compose_perms(&maya::sigma_pow_perm(r, -(k as i64)), &maya::w0_perm(r));
    let moved = maya::perm_act(&perm, &hm.core, r);
    if moved != hl.core {
        return Err(format!(
            "hypothesis w0 sigma^-{} core(mu) = core(lam) fails: {} vs {}",
            k, moved, hl.core
        ));
    }
    if k == 0 && (hl.lam.is_empty() || hm.lam.is_empty()) {
        return Err("the Pi-normalized identity at k = 0 requires nonempty diagrams".into());
    }
    let shift = ColorMatrix::m_transpose(r)
        .mul(&ColorMatrix::iota(r))
        .mul(&ColorMatrix::sigma_pow(r, k as i64));
    let eval = |h: &HPolynomial, other: &HPolynomial| -> RatQT {
        let y = Alphabet::eps(r, 0)
            .add(&Alphabet::eps(r, k).neg())
            .add(&alphabet_b(&other.lam, r).apply_matrix(&shift));
        h.eval_scalar(&y)
    };
    let lhs = eval(hl, hm).mul(&pi_product(&hm.lam, r, k));
    let rhs = eval(hm, hl).mul(&pi_product(&hl.lam, r, k));
    Ok(lhs == rhs)
}

/// Empty-core product evaluation: H_lam[eps_0 - z eps_k] equals the
/// product over color-k cells of (1 - z chi).
pub fn verify_empty_core_product(h: &HPolynomial, k: usize) -> bool {
    debug_assert!(h.core.is_empty());
    let r = h.r;
    let y = Alphabet::eps(r, 0).add(&Alphabet::eps(r, k).scale_z(1).neg());
    h.eval(&y) == color_cell_product(&h.lam, r, k)
}

/// H_mu[-eps_0] computed through the e-skew chain:
/// (-1)^n c'_{core(mu),mu} with n = |quot(mu)|.
pub fn eval_minus_eps0(table: &PieriTable, mu: &Partition, r: usize) -> RatQT {
    let core = maya::r_core(mu, r);
    let n = maya::quotient_size(mu, r);
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    table.cprime(&core, mu, 0, r).mul(&RatQT::from_int(sign))
}

/// One row of the orthogonality report.
#[derive(Clone, Debug, Serialize)]
pub struct OrthPair {
    pub lam: String,
    pub mu: String,
    pub value: RatSerial,
    pub expected: RatSerial,
    pub pass: bool,
}

/// Star-pairing orthogonality on a block: <dagger(H_lam), H_mu>_* =
/// N_lambda delta_{lam,mu}, for all pairs with quotient size up to n_max.
pub fn verify_orthogonality(
    table: &PieriTable,
    core: &Partition,
    n_max: u32,
    r: usize,
) -> Vec<OrthPair> {
    let mut hs: Vec<HPolynomial> = Vec::new();
    for n in 0..=n_max {
        hs.extend(build_block(table, core, r, n));
    }
    let daggers: Vec<MultiSymFn> = hs.par_iter().map(|h| h.dagger()).collect();
    let pairs: Vec<(usize, usize)> =
        (0..hs.len()).flat_map(|i| (0..hs.len()).map(move |j| (i, j))).collect();
    pairs
        .par_iter()
        .map(|&(i, j)| {
            let value = daggers[i].star_pair(&hs[j].expansion);
            let expected = if i == j {
                RatQT::from_laurent(hs[i].norm())
            } else {
                RatQT::zero()
            };
            OrthPair {
                lam: format!("{}", hs[i].lam),
                mu: format!("{}", hs[j].lam),
                value: value.to_serial(),
                expected: expected.to_serial(),
                pass: value == expected,
            }
        })
        .collect()
}

/// <H_lam, h_{n-j}[X^(0)] e_j[X^(k)]> = e_j[B^(k)_lam] for empty cores.
pub fn verify_he_pairing(h: &HPolynomial, j: u32, k: usize) -> bool {
    let r = h.r;
    let n = h.quotient_degree() as u32;
    if j > n {
        return true;
    }
    let mut f = MultiSymFn::one(r, Basis::P);
    if n - j > 0 {
        f = f.mul(&MultiSymFn::term(
            r,
            Basis::H,
            MultiPartition::single(r, 0, Partition::new(vec![n - j])),
            RatQT::one(),
        ));
    }
    if j > 0 {
        f = f.mul(&MultiSymFn::term(
            r,
            Basis::E,
            MultiPartition::single(r, k, Partition::new(vec![j])),
            RatQT::one(),
        ));
    }
    let lhs = h.expansion.hall_pair(&f);
    let chars = maya::skew_color_characters(&Partition::empty(), &h.lam, r, k);
    let rhs = RatQT::from_laurent(crate::qtalg::elementary_of_values(&chars, j as usize));
    lhs == rhs
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

/// JSON-facing form of an H polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct HSerial {
    pub r: usize,
    pub lambda: String,
    pub core: String,
    pub charges: Vec<i64>,
    pub basis: String,
    pub terms: Vec<HTermSerial>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HTermSerial {
    pub gamma: Vec<Vec<u32>>,
    pub coeff: RatSerial,
}

impl HSerial {
    pub fn of(h: &HPolynomial) -> Self {
        let terms = h
            .expansion
            .terms()
            .map(|(label, coeff)| HTermSerial {
                gamma: label.comps().iter().map(|p| p.parts().to_vec()).collect(),
                coeff: coeff.to_serial(),
            })
            .collect();
        HSerial {
            r: h.r,
            lambda: parts_string(&h.lam),
            core: parts_string(&h.core),
            charges: h.charges.0.clone(),
            basis: "m".into(),
            terms,
        }
    }
}

fn parts_string(p: &Partition) -> String {
    p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// A LaTeX rendering of the monomial expansion.
pub fn latex(h: &HPolynomial) -> String {
    let mut out = format!("\\tilde{{H}}_{{{}}} = ", latex_partition(&h.lam));
    let mut first = true;
    for (label, coeff) in h.expansion.terms() {
        if !first {
            out.push_str(" + ");
        }
        first = false;
        out.push_str(&format!(
            "\\left({}\\right) m_{{({})}}",
            latex_rat(coeff),
            label
                .comps()
                .iter()
                .map(latex_partition)
                .collect::<Vec<_>>()
                .join(";")
        ));
    }
    if first {
        out.push('0');
    }
    out
}

fn latex_partition(p: &Partition) -> String {
    if p.is_empty() {
        "\\varnothing".into()
    } else {
        format!(
            "({})",
            p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

fn latex_rat(c: &RatQT) -> String {
    if c.is_polynomial() {
        latex_laurent(c.num())
    } else {
        format!("\\frac{{{}}}{{{}}}", latex_laurent(c.num()), latex_laurent(c.den()))
    }
}

fn latex_laurent(p: &LaurentQT) -> String {
    format!("{}", p).replace("q^", "q^{").replace("t^", "t^{")
        .split(' ')
        .map(|tok| {
            if tok.contains('{') && !tok.ends_with('}') {
                format!("{}}}", tok)
            } else {
                tok.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}
