//! Command line interface for exact wreath Macdonald polynomial
//! computation.
//!
//! Subcommands fall into three groups:
//! - combinatorics: `maya`, `core`, `quot`, `charges`, `corners`, `perm`;
//! - polynomials: `H` computes monomial expansions (single or batch) and
//!   evaluations, backed by a persistent coefficient cache;
//! - `verify` runs the identity suites (charge identity, recursion
//!   invariance, defining-condition oracle, orthogonality, reciprocity,
//!   five-term relations, Theta commutators, evaluations) and reports
//!   per-check status and timings.
//!
//! Exit codes: 0 on success, 1 when a verified identity fails, 2 on usage
//! errors.

use std::fmt::Display;
use std::fs;
use std::io::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use wreath_macdonald::maya::{self, MayaSerial};
use wreath_macdonald::multisym::Alphabet;
use wreath_macdonald::partition::Partition;
use wreath_macdonald::pieri::{PieriTable, RecursionPolicy};
use wreath_macdonald::qtalg::RatQT;
use wreath_macdonald::wreath::{self, operator, HPolynomial, HSerial};

#[derive(Parser)]
#[command(
    name = "wreath",
    about = "Exact computation and verification of wreath Macdonald polynomials",
    version
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for batch computations
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Plain,
}

#[derive(Args)]
struct CombArgs {
    /// Number of colors r >= 2
    #[arg(short = 'r', long = "r")]
    r: usize,
    /// Partition as comma-separated descending parts; empty string for the
    /// empty partition
    lambda: String,
}

#[derive(Args)]
struct PermArgs {
    #[arg(short = 'r', long = "r")]
    r: usize,
    /// Apply the longest element w_0
    #[arg(long)]
    w0: bool,
    /// Apply sigma^k (the long cycle to the k-th power)
    #[arg(long)]
    sigma: Option<i64>,
    /// Apply a permutation in one-line notation, e.g. "2,0,1"
    #[arg(long)]
    perm: Option<String>,
    lambda: String,
}

#[derive(Args)]
struct HArgs {
    #[arg(short = 'r', long = "r")]
    r: usize,
    /// Single partition to expand
    #[arg(long)]
    lambda: Option<String>,
    /// Expand every partition with the given core and quotient size
    #[arg(long)]
    all: bool,
    /// r-core for batch mode (default: empty)
    #[arg(long, default_value = "")]
    core: String,
    /// Quotient size for batch mode
    #[arg(long)]
    quot_size: Option<u32>,
    /// Evaluate instead of printing the expansion
    #[arg(long, value_enum)]
    eval: Option<EvalKind>,
    /// Color index used by eval variants that need one
    #[arg(long, default_value_t = 0)]
    color: usize,
    /// Path of the JSON-lines coefficient cache to read and update
    #[arg(long)]
    cache: Option<String>,
    /// Recursion policy: the color s in the symmetric-function weights
    #[arg(long, default_value_t = 0)]
    policy_s: usize,
    /// Recursion policy: step size placed next to the base case
    #[arg(long, default_value_t = 1)]
    policy_split: usize,
    /// Allow r = 2 (outside the usual r > 2 regime)
    #[arg(long)]
    experimental_r2: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EvalKind {
    /// H[eps_0], always 1
    Eps0,
    /// H[-eps_0] through the e-skew chain
    MinusEps0,
    /// H[eps_0 - z eps_k] with k from --color
    Eps0MinusZEpsK,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite: charges, recursion-invariance, oracle, orthogonality,
    /// reciprocity, five-term, theta, evaluations, or all
    suite: String,
    #[arg(short = 'r', long = "r", default_value_t = 3)]
    r: usize,
    /// Partition size bound for the charge sweep
    #[arg(long, default_value_t = 12)]
    max_size: u32,
    /// Quotient size bound
    #[arg(long)]
    quot_size: Option<u32>,
    /// Window degree bound for operator identities
    #[arg(long)]
    maxdeg: Option<u32>,
    /// Core for block-based suites (default: empty)
    #[arg(long, default_value = "")]
    core: String,
    /// Restrict an operator sweep to one color p
    #[arg(long)]
    color: Option<usize>,
    #[arg(long)]
    cache: Option<String>,
    #[arg(long, default_value_t = 0)]
    policy_s: usize,
    #[arg(long, default_value_t = 1)]
    policy_split: usize,
    #[arg(long)]
    experimental_r2: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the Maya diagram bead sets of a partition
    Maya(CombArgs),
    /// Print the r-core
    Core(CombArgs),
    /// Print the r-quotient
    Quot(CombArgs),
    /// Print the charge vector
    Charges(CombArgs),
    /// Print the colored addable and removable corners
    Corners(CombArgs),
    /// Apply a symmetric group element to the quotient
    Perm(PermArgs),
    /// Compute monomial expansions or evaluations of H polynomials
    #[command(name = "H", alias = "h")]
    H(HArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let result = match cli.cmd {
        Cmd::Maya(a) => cmd_maya(&a, cli.format),
        Cmd::Core(a) => cmd_core(&a, cli.format),
        Cmd::Quot(a) => cmd_quot(&a, cli.format),
        Cmd::Charges(a) => cmd_charges(&a, cli.format),
        Cmd::Corners(a) => cmd_corners(&a, cli.format),
        Cmd::Perm(a) => cmd_perm(&a, cli.format),
        Cmd::H(a) => cmd_h(&a, cli.format),
        Cmd::Verify(a) => cmd_verify(&a, cli.format),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e| format!("{}", e))
}

fn check_r(r: usize) -> Result<(), String> {
    if r < 2 {
        return Err("r must be at least 2".into());
    }
    Ok(())
}

fn parts_str(p: &Partition) -> String {
    p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn cmd_maya(a: &CombArgs, format: Format) -> Result<ExitCode, String> {
    check_r(a.r)?;
    let lam = parse_partition(&a.lambda)?;
    let m = maya::partition_to_maya(&lam);
    let s = MayaSerial::of(&m);
    match format {
        Format::Json => println!("{}", serde_json::to_string(&s).unwrap()),
        _ => println!(
            "charge {}; black at nonnegative positions {:?}; white at negative positions {:?}",
            s.charge, s.black_nonneg, s.white_neg
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_core(a: &CombArgs, format: Format) -> Result<ExitCode, String> {
    check_r(a.r)?;
    let lam = parse_partition(&a.lambda)?;
    let core = maya::r_core(&lam, a.r);
    match format {
        Format::Json => println!("{}", json!({ "core": parts_str(&core) })),
        _ => println!("{}", core),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_quot(a: &CombArgs, format: Format) -> Result<ExitCode, String> {
    check_r(a.r)?;
    let lam = parse_partition(&a.lambda)?;
    let quot = maya::r_quotient(&lam, a.r);
    match format {
        Format::Json => {
            let parts: Vec<String> = quot.iter().map(parts_str).collect();
            println!("{}", json!({ "quotient": parts }));
        }
        _ => {
            let parts: Vec<String> = quot.iter().map(|p| format!("{}", p)).collect();
            println!("({})", parts.join(", "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_charges(a: &CombArgs, format: Format) -> Result<ExitCode, String> {
    check_r(a.r)?;
    let lam = parse_partition(&a.lambda)?;
    let (_, _, charges) = maya::core_quotient(&lam, a.r);
    match format {
        Format::Json => println!("{}", json!({ "charges": charges.0 })),
        _ => println!("{:?}", charges.0),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_corners(a: &CombArgs, format: Format) -> Result<ExitCode, String> {
    check_r(a.r)?;
    let lam = parse_partition(&a.lambda)?;
    let corners = lam.corners(a.r);
    let cells = |v: &Vec<wreath_macdonald::partition::Cell>| -> Vec<(u32, u32)> {
        v.iter().map(|c| (c.col, c.row)).collect()
    };
    match format {
        Format::Json => {
            let addable: Vec<Vec<(u32, u32)>> = corners.addable.iter().map(cells).collect();
            let removable: Vec<Vec<(u32, u32)>> = corners.removable.iter().map(cells).collect();
            println!("{}", json!({ "addable": addable, "removable": removable }));
        }
        _ => {
            for i in 0..a.r {
                println!(
                    "color {}: addable {:?}, removable {:?}",
                    i,
                    cells(&corners.addable[i]),
                    cells(&corners.removable[i])
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_perm(a: &PermArgs, format: Format) -> Result<ExitCode, String> {
    check_r(a.r)?;
    let lam = parse_partition(&a.lambda)?;
    let perm: Vec<usize> = if a.w0 {
        maya::w0_perm(a.r)
    } else if let Some(k) = a.sigma {
        maya::sigma_pow_perm(a.r, k)
    } else if let Some(p) = &a.perm {
        let perm: Result<Vec<usize>, _> = p.split(',').map(|t| t.trim().parse()).collect();
        let perm = perm.map_err(|_| "invalid permutation".to_string())?;
        let mut seen = vec![false; a.r];
        if perm.len() != a.r || perm.iter().any(|&i| i >= a.r || std::mem::replace(&mut seen[i], true)) {
            return Err("permutation must list each of 0..r exactly once".into());
        }
        perm
    } else {
        return Err("choose one of --w0, --sigma K, --perm LIST".into());
    };
    let image = maya::perm_act(&perm, &lam, a.r);
    match format {
        Format::Json => println!("{}", json!({ "result": parts_str(&image) })),
        _ => println!("{}", image),
    }
    Ok(ExitCode::SUCCESS)
}

fn load_table(cache: &Option<String>, policy: RecursionPolicy) -> Result<PieriTable, String> {
    let table = PieriTable::with_policy(policy);
    if let Some(path) = cache {
        if let Ok(file) = fs::File::open(path) {
            table
                .load(std::io::BufReader::new(file))
                .map_err(|e| format!("cache {}: {}", path, e))?;
        }
    }
    Ok(table)
}

fn save_table(table: &PieriTable, cache: &Option<String>) -> Result<(), String> {
    if let Some(path) = cache {
        let tmp = format!("{}.tmp", path);
        let mut buf = Vec::new();
        table.save(&mut buf).map_err(|e| e.to_string())?;
        let mut f = fs::File::create(&tmp).map_err(|e| e.to_string())?;
        f.write_all(&buf).map_err(|e| e.to_string())?;
        fs::rename(&tmp, path).map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn gate_r(r: usize, experimental_r2: bool) -> Result<(), String> {
    check_r(r)?;
    if r == 2 && !experimental_r2 {
        return Err(
            "r = 2 lies outside the usual r > 2 regime for H polynomials; \
             pass --experimental-r2 to proceed"
                .into(),
        );
    }
    Ok(())
}

fn print_h(h: &HPolynomial, format: Format) {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string(&HSerial::of(h)).unwrap())
        }
        Format::Latex => println!("{}", wreath::latex(h)),
        Format::Plain => println!("H_{} = {}", h.lam, h.expansion),
    }
}

fn print_value(label: &str, v: &RatQT, format: Format) {
    match format {
        Format::Json => {
            println!("{}", json!({ "eval": label, "value": v.to_serial() }))
        }
        _ => println!("{}", v),
    }
}

fn cmd_h(a: &HArgs, format: Format) -> Result<ExitCode, String> {
    gate_r(a.r, a.experimental_r2)?;
    let policy = RecursionPolicy { s: a.policy_s, split: a.policy_split };
    if policy.s >= a.r {
        return Err("--policy-s must be a color below r".into());
    }
    let table = load_table(&a.cache, policy)?;
    let lams: Vec<Partition> = if a.all {
        let core = parse_partition(&a.core)?;
        if !maya::is_r_core(&core, a.r) {
            return Err(format!("{} is not an {}-core", core, a.r));
        }
        let n = a.quot_size.ok_or("--all requires --quot-size")?;
        wreath::block(&core, a.r, n)
    } else {
        let lam = a.lambda.as_ref().ok_or("pass --lambda or --all")?;
        vec![parse_partition(lam)?]
    };
    for lam in &lams {
        match a.eval {
            None => {
                let h = wreath::build_h(&table, lam, a.r);
                print_h(&h, format);
            }
            Some(EvalKind::Eps0) => {
                let h = wreath::build_h(&table, lam, a.r);
                let v = h.eval_scalar(&Alphabet::eps(a.r, 0));
                print_value("eps0", &v, format);
            }
            Some(EvalKind::MinusEps0) => {
                let v = wreath::eval_minus_eps0(&table, lam, a.r);
                print_value("minus-eps0", &v, format);
            }
            Some(EvalKind::Eps0MinusZEpsK) => {
                let h = wreath::build_h(&table, lam, a.r);
                let y = Alphabet::eps(a.r, 0)
                    .add(&Alphabet::eps(a.r, a.color).scale_z(1).neg());
                let z = h.eval(&y);
                match format {
                    Format::Json => {
                        let coeffs: Vec<_> =
                            (0..=z.degree()).map(|d| z.coeff(d).to_serial()).collect();
                        println!("{}", json!({ "eval": "eps0-minus-z-epsk", "z_coeffs": coeffs }));
                    }
                    _ => {
                        for d in 0..=z.degree() {
                            println!("z^{}: {}", d, z.coeff(d));
                        }
                    }
                }
            }
        }
    }
    save_table(&table, &a.cache)?;
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct Check {
    name: String,
    pass: bool,
    millis: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    details: Option<String>,
}

struct Reporter {
    checks: Vec<Check>,
}

impl Reporter {
    fn new() -> Self {
        Reporter { checks: Vec::new() }
    }

    fn run<E: Display>(&mut self, name: &str, f: impl FnOnce() -> Result<(), E>) {
        let start = Instant::now();
        let outcome = f();
        let millis = start.elapsed().as_millis();
        match outcome {
            Ok(()) => self.checks.push(Check { name: name.into(), pass: true, millis, details: None }),
            Err(e) => self.checks.push(Check {
                name: name.into(),
                pass: false,
                millis,
                details: Some(format!("{}", e)),
            }),
        }
    }

    fn finish(self, suite: &str, r: usize, format: Format) -> ExitCode {
        let passed = self.checks.iter().all(|c| c.pass);
        match format {
            Format::Json => {
                println!(
                    "{}",
                    json!({ "suite": suite, "r": r, "passed": passed, "checks": self.checks })
                );
            }
            _ => {
                for c in &self.checks {
                    println!(
                        "{} {} ({} ms){}",
                        if c.pass { "PASS" } else { "FAIL" },
                        c.name,
                        c.millis,
                        c.details.as_ref().map(|d| format!(": {}", d)).unwrap_or_default()
                    );
                }
                println!("suite {}: {}", suite, if passed { "pass" } else { "FAIL" });
            }
        }
        if passed {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        }
    }
}

fn suite_charges(rep: &mut Reporter, r: usize, max_size: u32) {
    rep.run(&format!("charge identity, |lambda| <= {}, r = {}", max_size, r), || {
        for n in 0..=max_size {
            for lam in Partition::all_of(n) {
                let corners = lam.corners(r);
                let charges = maya::core_quotient(&lam, r).2;
                for i in 0..r {
                    let lhs =
                        corners.addable[i].len() as i64 - corners.removable[i].len() as i64;
                    let rhs = if i == 0 { 1 } else { 0 } + charges.0[(i + r - 1) % r]
                        - charges.0[i];
                    if lhs != rhs {
                        return Err(format!("lambda={} color={}: {} vs {}", lam, i, lhs, rhs));
                    }
                }
            }
        }
        Ok(())
    });
}

fn suite_recursion_invariance(rep: &mut Reporter, table: &PieriTable, r: usize, qmax: u32) {
    let core = Partition::empty();
    rep.run("d and c invariance under color and split", || {
        let mut lams = vec![Partition::empty()];
        for n in 1..=qmax.saturating_sub(2) {
            lams.extend(wreath::block(&core, r, n));
        }
        for lam in &lams {
            for gap in 2..=3usize {
                if maya::quotient_size(lam, r) + gap as u64 > qmax as u64 {
                    continue;
                }
                for mu in maya::successors(lam, gap, r) {
                    for p in 0..r {
                        let d0 = table.d_step(lam, &mu, p, r, 0, 1);
                        let c0 = table.c_step(lam, &mu, p, r, 0, 1, false);
                        for s in 0..r {
                            for l in 1..gap {
                                if table.d_step(lam, &mu, p, r, s, l) != d0 {
                                    return Err(format!(
                                        "d({}, {}, p={}) differs at s={} l={}",
                                        lam, mu, p, s, l
                                    ));
                                }
                                if table.c_step(lam, &mu, p, r, s, l, false) != c0 {
                                    return Err(format!(
                                        "c({}, {}, p={}) differs at s={} l={}",
                                        lam, mu, p, s, l
                                    ));
                                }
                                if table.c_step(lam, &mu, p, r, s, l, true) != c0 {
                                    return Err(format!(
                                        "starred c({}, {}, p={}) differs at s={} l={}",
                                        lam, mu, p, s, l
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    });
}

fn small_cores(r: usize) -> Vec<Partition> {
    let mut cores = Vec::new();
    for n in 0..=2u32 {
        for lam in Partition::all_of(n) {
            if maya::is_r_core(&lam, r) {
                cores.push(lam);
            }
        }
    }
    cores
}

fn suite_oracle(rep: &mut Reporter, table: &PieriTable, r: usize, qmax: u32) {
    for core in small_cores(r) {
        for n in 0..=qmax {
            rep.run(&format!("oracle equality, core {}, degree {}", core, n), || {
                let oracle = wreath::solve_defining(&core, n, r)?;
                for (lam, want) in &oracle {
                    let built = wreath::build_h(table, lam, r);
                    if built.expansion != want.expansion {
                        return Err(format!("H_{} differs between routes", lam));
                    }
                }
                Ok::<(), String>(())
            });
        }
    }
}

fn suite_orthogonality(rep: &mut Reporter, table: &PieriTable, core: &Partition, r: usize, nmax: u32) {
    rep.run(
        &format!("star-pairing orthogonality, core {}, degrees <= {}", core, nmax),
        || {
            let report = wreath::verify_orthogonality(table, core, nmax, r);
            for row in &report {
                if !row.pass {
                    return Err(format!("pair ({}, {}) off", row.lam, row.mu));
                }
            }
            Ok(())
        },
    );
}

fn suite_reciprocity(rep: &mut Reporter, table: &PieriTable, r: usize, qmax: u32) {
    // empty-core pairs for every shift k, plus one nonempty-core family
    rep.run("reciprocity on empty-core pairs", || {
        let mut hs: Vec<HPolynomial> = Vec::new();
        for n in 0..=qmax {
            hs.extend(wreath::build_block(table, &Partition::empty(), r, n));
        }
        for a in &hs {
            for b in &hs {
                if !wreath::verify_reciprocity_plain(a, b)? {
                    return Err(format!("plain: ({}, {})", a.lam, b.lam));
                }
                for k in 0..r {
                    if !wreath::verify_reciprocity_mk(a, b, k)? {
                        return Err(format!("shifted k={}: ({}, {})", k, a.lam, b.lam));
                    }
                    if k == 0 && (a.lam.is_empty() || b.lam.is_empty()) {
                        continue;
                    }
                    if !wreath::verify_reciprocity_pi(a, b, k)? {
                        return Err(format!("Pi k={}: ({}, {})", k, a.lam, b.lam));
                    }
                }
            }
        }
        Ok::<(), String>(())
    });
    rep.run("reciprocity across conjugate cores", || {
        let core_lam: Partition = "1".parse().unwrap();
        if !maya::is_r_core(&core_lam, r) {
            return Ok(());
        }
        let core_mu = maya::perm_act(&maya::w0_perm(r), &core_lam, r);
        for n in 0..=1u32 {
            for lam in wreath::block(&core_lam, r, n) {
                for mu in wreath::block(&core_mu, r, n) {
                    let hl = wreath::build_h(table, &lam, r);
                    let hm = wreath::build_h(table, &mu, r);
                    if !wreath::verify_reciprocity_plain(&hl, &hm)? {
                        return Err(format!("plain: ({}, {})", lam, mu));
                    }
                    if !wreath::verify_reciprocity_mk(&hl, &hm, 0)? {
                        return Err(format!("shifted k=0: ({}, {})", lam, mu));
                    }
                }
            }
        }
        Ok::<(), String>(())
    });
}

fn suite_five_term(
    rep: &mut Reporter,
    table: &PieriTable,
    core: &Partition,
    r: usize,
    maxdeg: u32,
    only_p: Option<usize>,
) {
    let window = operator::Window::new(core, r, maxdeg);
    let variants = [
        (operator::FiveTermVariant::Primal, "primal"),
        (operator::FiveTermVariant::Dual, "dual"),
        (operator::FiveTermVariant::DualStar, "dual-star"),
        (operator::FiveTermVariant::Dagger, "dagger"),
    ];
    for (variant, name) in variants {
        rep.run(&format!("five-term {} (all colors, degree <= {})", name, maxdeg), || {
            for p in 0..r {
                if only_p.map(|q| q != p).unwrap_or(false) {
                    continue;
                }
                for s in 0..r {
                    operator::verify_five_term(&window, table, variant, p, s)?;
                }
            }
            Ok::<(), String>(())
        });
    }
    rep.run("W(u,v) diagonality", || {
        for p in 0..r {
            for s in 0..r {
                operator::verify_w_diagonality(&window, table, p, s)?;
            }
        }
        Ok::<(), String>(())
    });
}

fn suite_theta(
    rep: &mut Reporter,
    table: &PieriTable,
    core: &Partition,
    r: usize,
    maxdeg: u32,
    only_p: Option<usize>,
) {
    let window = operator::Window::new(core, r, maxdeg);
    for n in 1..=2usize {
        rep.run(&format!("Theta-D commutator, n = {}", n), || {
            for p in 0..r {
                if only_p.map(|q| q != p).unwrap_or(false) {
                    continue;
                }
                for s in 0..r {
                    for i in 0..r {
                        operator::verify_theta_commutator(&window, table, p, s, i, n)?;
                    }
                }
            }
            Ok::<(), String>(())
        });
    }
}

fn suite_evaluations(rep: &mut Reporter, table: &PieriTable, r: usize, qmax: u32) {
    rep.run("empty-core product formula and H[-eps_0]", || {
        for n in 0..=qmax {
            for lam in wreath::block(&Partition::empty(), r, n) {
                let h = wreath::build_h(table, &lam, r);
                for k in 0..r {
                    if !wreath::verify_empty_core_product(&h, k) {
                        return Err(format!("product formula: lambda={} k={}", lam, k));
                    }
                }
                let want = wreath::t_eigenvalue(&lam, r, 0);
                if wreath::eval_minus_eps0(table, &lam, r) != want {
                    return Err(format!("H[-eps_0] != T^(0): lambda={}", lam));
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
    });
    rep.run("H[-eps_0] two-route agreement on a nonempty core", || {
        let core: Partition = "1".parse().unwrap();
        if !maya::is_r_core(&core, r) {
            return Ok(());
        }
        let mut minus = vec![RatQT::zero(); r];
        minus[0] = RatQT::from_int(-1);
        for lam in wreath::block(&core, r, 1) {
            let h = wreath::build_h(table, &lam, r);
            let direct = h.eval_scalar(&Alphabet::from_values(minus.clone()));
            let chain = wreath::eval_minus_eps0(table, &lam, r);
            if direct != chain {
                return Err(format!("lambda={}", lam));
            }
        }
        Ok(())
    });
}

fn cmd_verify(a: &VerifyArgs, format: Format) -> Result<ExitCode, String> {
    gate_r(a.r, a.experimental_r2)?;
    let policy = RecursionPolicy { s: a.policy_s, split: a.policy_split };
    if policy.s >= a.r {
        return Err("--policy-s must be a color below r".into());
    }
    let table = load_table(&a.cache, policy)?;
    let core = parse_partition(&a.core)?;
    if !maya::is_r_core(&core, a.r) {
        return Err(format!("{} is not an {}-core", core, a.r));
    }
    let mut rep = Reporter::new();
    let suite = a.suite.as_str();
    let known = [
        "charges",
        "recursion-invariance",
        "oracle",
        "orthogonality",
        "reciprocity",
        "five-term",
        "theta",
        "evaluations",
        "all",
    ];
    if !known.contains(&suite) {
        return Err(format!("unknown suite {:?}; choose one of {}", suite, known.join(", ")));
    }
    if suite == "charges" || suite == "all" {
        suite_charges(&mut rep, a.r, a.max_size);
    }
    if suite == "recursion-invariance" || suite == "all" {
        suite_recursion_invariance(&mut rep, &table, a.r, a.quot_size.unwrap_or(3));
    }
    if suite == "oracle" || suite == "all" {
        suite_oracle(&mut rep, &table, a.r, a.quot_size.unwrap_or(2));
    }
    if suite == "orthogonality" || suite == "all" {
        suite_orthogonality(&mut rep, &table, &core, a.r, a.quot_size.unwrap_or(2));
    }
    if suite == "reciprocity" || suite == "all" {
        suite_reciprocity(&mut rep, &table, a.r, a.quot_size.unwrap_or(2));
    }
    if suite == "five-term" || suite == "all" {
        suite_five_term(&mut rep, &table, &core, a.r, a.maxdeg.unwrap_or(2), a.color);
    }
    if suite == "theta" || suite == "all" {
        suite_theta(&mut rep, &table, &core, a.r, a.maxdeg.unwrap_or(3), a.color);
    }
    if suite == "evaluations" || suite == "all" {
        suite_evaluations(&mut rep, &table, a.r, a.quot_size.unwrap_or(2));
    }
    save_table(&table, &a.cache)?;
    Ok(rep.finish(suite, a.r, format))
}
