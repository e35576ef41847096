//! Acceptance suite: one check per release criterion, each printed as a
//! pass/fail line with its runtime (run with `--nocapture` to see all
//! lines). Every check is an exact symbolic identity or a frozen
//! combinatorial value.

use std::time::{Duration, Instant};

use rand::prelude::*;
use rand::rngs::StdRng;

use wreath_macdonald::maya;
use wreath_macdonald::multisym::Alphabet;
use wreath_macdonald::partition::Partition;
use wreath_macdonald::pieri::{c1, d1, d_dagger1, PieriTable};
use wreath_macdonald::qtalg::{LaurentQT, RatQT};
use wreath_macdonald::wreath::{self, operator};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

struct Criterion {
    name: &'static str,
    limit: Duration,
    outcome: Result<(), String>,
    elapsed: Duration,
}

fn run(
    name: &'static str,
    limit_secs: u64,
    f: impl FnOnce() -> Result<(), String>,
) -> Criterion {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    Criterion { name, limit: Duration::from_secs(limit_secs), outcome, elapsed }
}

fn criterion_1() -> Result<(), String> {
    let lam = p("4,2,2");
    let m = maya::partition_to_maya(&lam);
    for n in [2i64, 1, -2, -3, -5] {
        if !m.is_black(n) {
            return Err(format!("expected a black bead at {}", n));
        }
    }
    for n in [3i64, 0, -1, -4] {
        if m.is_black(n) {
            return Err(format!("expected a white bead at {}", n));
        }
    }
    let (core, quot, _) = maya::core_quotient(&lam, 3);
    if quot != vec![Partition::empty(), Partition::empty(), p("1,1")] {
        return Err(format!("quotient came out as {:?}", quot));
    }
    if core != p("1,1") {
        return Err(format!("core came out as {}", core));
    }
    Ok(())
}

fn criterion_2() -> Result<(), String> {
    let lam = p("4,2,2");
    let checks = [
        (maya::w0_perm(3), "6,4"),
        (maya::sigma_perm(3), "6,4,1"),
        (maya::sigma_pow_perm(3, 2), "5,3"),
    ];
    for (perm, want) in checks {
        let got = maya::perm_act(&perm, &lam, 3);
        if got != p(want) {
            return Err(format!("expected {}, got {}", want, got));
        }
    }
    Ok(())
}

fn criterion_3() -> Result<(), String> {
    for n in 0..=12u32 {
        for lam in Partition::all_of(n) {
            for r in [2usize, 3, 4, 5] {
                let corners = lam.corners(r);
                let charges = maya::core_quotient(&lam, r).2;
                for i in 0..r {
                    let lhs =
                        corners.addable[i].len() as i64 - corners.removable[i].len() as i64;
                    let rhs = if i == 0 { 1 } else { 0 } + charges.0[(i + r - 1) % r]
                        - charges.0[i];
                    if lhs != rhs {
                        return Err(format!("lambda={} r={} i={}", lam, r, i));
                    }
                }
            }
        }
    }
    Ok(())
}

fn criterion_4(table: &PieriTable) -> Result<(), String> {
    let r = 3;
    let mut cores = Vec::new();
    for n in 0..=2u32 {
        for lam in Partition::all_of(n) {
            if maya::is_r_core(&lam, r) {
                cores.push(lam);
            }
        }
    }
    for core in cores {
        for n in 0..=2u32 {
            let oracle = wreath::solve_defining(&core, n, r)?;
            for (lam, want) in &oracle {
                let built = wreath::build_h(table, lam, r);
                if built.expansion != want.expansion {
                    return Err(format!("H_{} differs between the two routes", lam));
                }
            }
        }
    }
    Ok(())
}

fn criterion_5(table: &PieriTable) -> Result<(), String> {
    let report = wreath::verify_orthogonality(table, &Partition::empty(), 2, 3);
    let mut pairs = 0;
    for row in &report {
        if !row.pass {
            return Err(format!("pair ({}, {}) violates orthogonality", row.lam, row.mu));
        }
        pairs += 1;
    }
    if pairs < 144 {
        return Err(format!("only {} pairs checked", pairs));
    }
    Ok(())
}

fn criterion_6(table: &PieriTable) -> Result<(), String> {
    let r = 3;
    let empty = Partition::empty();
    let mut lams = vec![empty.clone()];
    for n in 1..=1u32 {
        lams.extend(wreath::block(&empty, r, n));
    }
    for lam in &lams {
        for gap in 2..=3usize {
            if maya::quotient_size(lam, r) + gap as u64 > 3 {
                continue;
            }
            for mu in maya::successors(lam, gap, r) {
                for color in 0..r {
                    let d0 = table.d_step(lam, &mu, color, r, 0, 1);
                    let c0 = table.c_step(lam, &mu, color, r, 0, 1, false);
                    for s in 0..r {
                        for l in 1..gap {
                            if table.d_step(lam, &mu, color, r, s, l) != d0 {
                                return Err(format!(
                                    "d({},{},p={}) at s={} l={}",
                                    lam, mu, color, s, l
                                ));
                            }
                            if table.c_step(lam, &mu, color, r, s, l, false) != c0 {
                                return Err(format!(
                                    "c({},{},p={}) at s={} l={}",
                                    lam, mu, color, s, l
                                ));
                            }
                            if table.c_step(lam, &mu, color, r, s, l, true) != c0 {
                                return Err(format!(
                                    "starred c({},{},p={}) at s={} l={}",
                                    lam, mu, color, s, l
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn criterion_7(table: &PieriTable) -> Result<(), String> {
    let r = 3;
    let mut hs = Vec::new();
    for n in 0..=2u32 {
        hs.extend(wreath::build_block(table, &Partition::empty(), r, n));
    }
    for a in &hs {
        for b in &hs {
            if !wreath::verify_reciprocity_plain(a, b)? {
                return Err(format!("plain reciprocity: ({}, {})", a.lam, b.lam));
            }
            for k in 0..r {
                if !wreath::verify_reciprocity_mk(a, b, k)? {
                    return Err(format!("shifted reciprocity k={}: ({}, {})", k, a.lam, b.lam));
                }
                if k == 0 && (a.lam.is_empty() || b.lam.is_empty()) {
                    continue;
                }
                if !wreath::verify_reciprocity_pi(a, b, k)? {
                    return Err(format!("Pi reciprocity k={}: ({}, {})", k, a.lam, b.lam));
                }
            }
        }
    }
    // a conjugate-core family on top of the empty-core sweep
    let core_lam = p("1");
    let core_mu = maya::perm_act(&maya::w0_perm(r), &core_lam, r);
    for lam in wreath::block(&core_lam, r, 1) {
        for mu in wreath::block(&core_mu, r, 1) {
            let hl = wreath::build_h(table, &lam, r);
            let hm = wreath::build_h(table, &mu, r);
            if !wreath::verify_reciprocity_plain(&hl, &hm)? {
                return Err(format!("plain reciprocity: ({}, {})", lam, mu));
            }
        }
    }
    Ok(())
}

fn criterion_8(table: &PieriTable) -> Result<(), String> {
    let r = 3;
    for n in 0..=2u32 {
        for lam in wreath::block(&Partition::empty(), r, n) {
            let h = wreath::build_h(table, &lam, r);
            for k in 0..r {
                if !wreath::verify_empty_core_product(&h, k) {
                    return Err(format!("product formula: lambda={} k={}", lam, k));
                }
            }
            let mut minus = vec![RatQT::zero(); r];
            minus[0] = RatQT::from_int(-1);
            let direct = h.eval_scalar(&Alphabet::from_values(minus));
            let want = wreath::t_eigenvalue(&lam, r, 0);
            if direct != want || wreath::eval_minus_eps0(table, &lam, r) != want {
                return Err(format!("H[-eps_0] != T^(0) for lambda={}", lam));
            }
            for j in 0..=n {
                for k in 0..r {
                    if !wreath::verify_he_pairing(&h, j, k) {
                        return Err(format!("h/e pairing: lambda={} j={} k={}", lam, j, k));
                    }
                }
            }
        }
    }
    Ok(())
}

fn criterion_9(table: &PieriTable) -> Result<(), String> {
    let r = 3;
    let window = operator::Window::new(&Partition::empty(), r, 2);
    for p in 0..r {
        for s in 0..r {
            for variant in [
                operator::FiveTermVariant::Primal,
                operator::FiveTermVariant::DualStar,
                operator::FiveTermVariant::Dual,
                operator::FiveTermVariant::Dagger,
            ] {
                operator::verify_five_term(&window, table, variant, p, s)
                    .map_err(|e| format!("{:?} p={} s={}: {}", variant, p, s, e))?;
            }
        }
    }
    Ok(())
}

fn criterion_10(table: &PieriTable) -> Result<(), String> {
    let r = 3;
    let window = operator::Window::new(&Partition::empty(), r, 3);
    for n in 1..=2usize {
        for p in 0..r {
            for s in 0..r {
                for i in 0..r {
                    operator::verify_theta_commutator(&window, table, p, s, i, n)?;
                }
            }
        }
    }
    Ok(())
}

fn criterion_11() -> Result<(), String> {
    let r = 3;
    let core = Partition::empty();
    // cold pass: fresh table, serialize every expansion and the cache
    let cold_table = PieriTable::new();
    let cold: Vec<String> = wreath::build_block(&cold_table, &core, r, 4)
        .iter()
        .map(|h| serde_json::to_string(&wreath::HSerial::of(h)).unwrap())
        .collect();
    if cold.len() != 51 {
        return Err(format!("expected 51 expansions, got {}", cold.len()));
    }
    let mut cache = Vec::new();
    cold_table.save(&mut cache).map_err(|e| e.to_string())?;
    // warm pass: reload the persisted coefficients and rebuild
    let warm_table = PieriTable::new();
    warm_table
        .load(std::io::BufReader::new(cache.as_slice()))
        .map_err(|e| e.to_string())?;
    let warm_start = Instant::now();
    let warm: Vec<String> = wreath::build_block(&warm_table, &core, r, 4)
        .iter()
        .map(|h| serde_json::to_string(&wreath::HSerial::of(h)).unwrap())
        .collect();
    let warm_elapsed = warm_start.elapsed();
    if warm != cold {
        return Err("cold and warm outputs differ".into());
    }
    if warm_elapsed > Duration::from_secs(300) {
        return Err(format!("warm rebuild took {:?}", warm_elapsed));
    }
    Ok(())
}

fn criterion_12() -> Result<(), String> {
    let qt = LaurentQT::qt_pow(1, 1);
    // AddRem product identity over the full sweep
    for n in 0..=12u32 {
        for lam in Partition::all_of(n) {
            let corners = lam.corners(3);
            let mut num = LaurentQT::one();
            let mut den = LaurentQT::one();
            for i in 0..3 {
                for c in &corners.addable[i] {
                    num = num.mul(&c.character().neg());
                }
                for c in &corners.removable[i] {
                    den = den.mul(&c.character().mul_monomial(1, 1).neg());
                }
            }
            if RatQT::new(num, den) != RatQT::from_int(-1) {
                return Err(format!("addable/removable product: lambda={}", lam));
            }
        }
    }
    // 200 random instances of the hook-cancellation identity
    let mut rng = StdRng::seed_from_u64(0xacce97);
    for _ in 0..200 {
        let r = [2usize, 3, 4, 5][rng.random_range(0..4)];
        let n = rng.random_range(0..10u32);
        let all = Partition::all_of(n);
        let lam = all[rng.random_range(0..all.len())].clone();
        let addable = lam.addable_corners();
        let cell = addable[rng.random_range(0..addable.len())];
        let bigger = lam.with_cell(cell);
        let i = cell.color(r);
        let chi_box = cell.character();
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
        if RatQT::new(lhs_num, lhs_den) != RatQT::new(rhs_num, rhs_den) {
            return Err(format!("hook cancellation: lambda={} r={}", lam, r));
        }
    }
    // 200 random degree-1 pairs: the dagger relation and the adjunction
    let mut tested = 0;
    while tested < 200 {
        let r = [3usize, 4][rng.random_range(0..2)];
        let n = rng.random_range(0..9u32);
        let all = Partition::all_of(n);
        let lam = all[rng.random_range(0..all.len())].clone();
        let succ = maya::successors(&lam, 1, r);
        if succ.is_empty() {
            continue;
        }
        let mu = succ[rng.random_range(0..succ.len())].clone();
        let color = rng.random_range(0..r);
        let d = d1(&lam, &mu, color, r);
        let dd = d_dagger1(&lam, &mu, color, r);
        if dd.star() != d.mul(&RatQT::from_laurent(qt.clone())) {
            return Err(format!("dagger relation: ({}, {}) p={} r={}", lam, mu, color, r));
        }
        let c = c1(&lam, &mu, color, r);
        let ratio = RatQT::new(mu.norm(r), lam.norm(r));
        if c != ratio.mul(&dd) {
            return Err(format!("adjunction: ({}, {}) p={} r={}", lam, mu, color, r));
        }
        tested += 1;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let table = PieriTable::new();
    let results = vec![
        run("1  figures: Maya beads, quotient and core of (4,2,2)", 1, criterion_1),
        run("2  symmetric group action on quotients of (4,2,2)", 1, criterion_2),
        run("3  charge identity, |lambda| <= 12, r in 2..5", 10, criterion_3),
        run("4  Pieri route equals defining-condition solver", 60, || criterion_4(&table)),
        run("5  star-pairing orthogonality with norms N", 120, || criterion_5(&table)),
        run("6  recursion invariance in color and split", 120, || criterion_6(&table)),
        run("7  reciprocity: plain, shifted, Pi-normalized", 60, || criterion_7(&table)),
        run("8  empty-core evaluations and h/e pairing", 30, || criterion_8(&table)),
        run("9  five-term relations, all variants and colors", 300, || criterion_9(&table)),
        run("10 Theta-D commutators, n in {1,2}", 300, || criterion_10(&table)),
        run("11 degree-4 batch: cold/warm byte-identical, in time", 300, criterion_11),
        run("12 appendix suite: hooks, corners, dagger, adjunction", 60, criterion_12),
    ];
    let mut failed = 0;
    for c in &results {
        let status = match (&c.outcome, c.elapsed <= c.limit) {
            (Ok(()), true) => "PASS",
            (Ok(()), false) => "FAIL (over time limit)",
            (Err(_), _) => "FAIL",
        };
        println!(
            "{} criterion {} [{:.2}s / {}s]{}",
            status,
            c.name,
            c.elapsed.as_secs_f64(),
            c.limit.as_secs(),
            c.outcome.as_ref().err().map(|e| format!(" -- {}", e)).unwrap_or_default()
        );
        if c.outcome.is_err() || c.elapsed > c.limit {
            failed += 1;
        }
    }
    assert_eq!(failed, 0, "{} acceptance criteria failed", failed);
}
