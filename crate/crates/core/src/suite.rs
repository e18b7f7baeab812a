//! The acceptance battery, parameterized by problem sizes so the command line
//! can run a scaled-down copy.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bsops;
use crate::exact::{rank, solve_nullspace, FormalSum, Rational};
use crate::oracle;
use crate::perm::{
    grass_decode, grass_encode, permutations_of_window, reduced_word_count, reduced_words, GrassCode, PermutationZ,
};
use crate::product::{verify_product, ProductEngine};
use crate::young::{
    border_strips, hook_syt_count, partitions_in_box, partitions_of, partitions_up_to, rotated_complement,
    Partition,
};
use crate::yops::{self, DiagElement, SchurRing};

/// Problem sizes for every criterion.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub lr_exhaustive: usize,
    pub lr_random_pairs: usize,
    pub lr_random_max: usize,
    pub leibniz_degrees: Vec<usize>,
    pub det_max: usize,
    pub rho_max_size: usize,
    pub rho_max_k: usize,
    pub mn_max_size: usize,
    pub mn_max_k: usize,
    pub duality_box: (usize, u32),
    pub xi_lambda_max: usize,
    pub prod_formula_max: usize,
    pub recover_samples: usize,
    pub recover_max_size: usize,
    pub kernel_max_degree: usize,
    pub stanley_max_len: usize,
    pub stanley_window: usize,
    pub stanley_rw_max_len: usize,
    pub stanley_rw_window: usize,
    pub product_max_degree: usize,
    pub product_window: usize,
    pub product_shifts: i64,
    pub monk_max_len: usize,
    pub monk_window: usize,
    pub bench_max: usize,
    pub bench_csv: Option<PathBuf>,
    pub seed: u64,
}

impl SuiteConfig {
    /// The sizes of the acceptance criteria.
    pub fn full() -> Self {
        SuiteConfig {
            lr_exhaustive: 5,
            lr_random_pairs: 200,
            lr_random_max: 7,
            leibniz_degrees: vec![2, 3, 4, 5],
            det_max: 8,
            rho_max_size: 8,
            rho_max_k: 8,
            mn_max_size: 6,
            mn_max_k: 4,
            duality_box: (3, 3),
            xi_lambda_max: 6,
            prod_formula_max: 4,
            recover_samples: 1000,
            recover_max_size: 8,
            kernel_max_degree: 8,
            stanley_max_len: 6,
            stanley_window: 5,
            stanley_rw_max_len: 7,
            stanley_rw_window: 6,
            product_max_degree: 7,
            product_window: 4,
            product_shifts: 2,
            monk_max_len: 6,
            monk_window: 5,
            bench_max: 7,
            bench_csv: None,
            seed: 0x5eed,
        }
    }

    /// Every size capped at `n`.
    pub fn scaled(n: usize) -> Self {
        let f = Self::full();
        let c = |x: usize| x.min(n);
        SuiteConfig {
            lr_exhaustive: c(f.lr_exhaustive),
            lr_random_pairs: if n >= f.lr_random_max { f.lr_random_pairs } else { 20 },
            lr_random_max: c(f.lr_random_max),
            leibniz_degrees: f.leibniz_degrees.into_iter().filter(|&d| d <= n.max(2)).collect(),
            det_max: c(f.det_max),
            rho_max_size: c(f.rho_max_size),
            rho_max_k: c(f.rho_max_k),
            mn_max_size: c(f.mn_max_size),
            mn_max_k: c(f.mn_max_k),
            duality_box: f.duality_box,
            xi_lambda_max: c(f.xi_lambda_max),
            prod_formula_max: c(f.prod_formula_max),
            recover_samples: if n >= f.recover_max_size { f.recover_samples } else { 100 },
            recover_max_size: c(f.recover_max_size),
            kernel_max_degree: c(f.kernel_max_degree),
            stanley_max_len: c(f.stanley_max_len),
            stanley_window: c(f.stanley_window),
            stanley_rw_max_len: c(f.stanley_rw_max_len),
            stanley_rw_window: c(f.stanley_rw_window),
            product_max_degree: c(f.product_max_degree),
            product_window: c(f.product_window),
            product_shifts: f.product_shifts,
            monk_max_len: c(f.monk_max_len),
            monk_window: c(f.monk_window),
            bench_max: c(f.bench_max),
            bench_csv: None,
            seed: f.seed,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} [{}] {}: {} ({:.1}s)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Accumulates failures; the first few are kept for the report.
#[derive(Default)]
struct Tally {
    checked: usize,
    failures: usize,
    examples: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < 3 {
                self.examples.push(what());
            }
        }
    }

    fn finish(self, summary: &str) -> (bool, String) {
        if self.failures == 0 {
            (true, format!("{} checks, {summary}", self.checked))
        } else {
            (
                false,
                format!("{} of {} checks failed, e.g. {}", self.failures, self.checked, self.examples.join(" | ")),
            )
        }
    }
}

type Outcome = (bool, String);

pub const NAMES: [&str; 13] = [
    "diagram operator example",
    "Littlewood-Richardson coefficients",
    "uniqueness of derivations",
    "determinantal identities",
    "bosonic operators",
    "Murnaghan-Nakayama and duality",
    "xi^lambda calculus",
    "recovery and kernel",
    "Stanley expansions",
    "two-term Schur times Schubert product",
    "Schur x Schubert ground truth",
    "permutation and polynomial anchors",
    "benchmark",
];

/// Runs criterion `id` (1-based), turning panics into failures.
pub fn run_criterion(id: u8, cfg: &SuiteConfig) -> CriterionResult {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(|| match id {
        1 => c01_example(),
        2 => c02_lr(cfg),
        3 => c03_leibniz(cfg),
        4 => c04_determinants(cfg),
        5 => c05_bosonic(cfg),
        6 => c06_mn_duality(cfg),
        7 => c07_xi_lambda(cfg),
        8 => c08_recover(cfg),
        9 => c09_stanley(cfg),
        10 => c10_two_term_product(),
        11 => c11_products(cfg),
        12 => c12_anchors(),
        13 => c13_bench(cfg),
        _ => (false, format!("no criterion {id}")),
    }));
    let (passed, detail) = outcome.unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        (false, format!("panicked: {msg}"))
    });
    CriterionResult {
        id,
        name: NAMES.get(id as usize - 1).copied().unwrap_or("unknown"),
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

pub fn run_all(cfg: &SuiteConfig) -> Vec<CriterionResult> {
    (1..=13).map(|id| run_criterion(id, cfg)).collect()
}

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

fn d(lam: &Partition) -> DiagElement {
    FormalSum::basis(lam.clone())
}

fn int(n: i64) -> Rational {
    Rational::from(n)
}

fn c01_example() -> Outcome {
    let x = d(&p(&[4, 3, 1]));
    let xi_want = DiagElement::parse_text("3,3,1 + 4,2,1 + 4,3").unwrap();
    let nabla_want = DiagElement::parse_text("3*3,3,1 + 4,2,1 + -2*4,3").unwrap();
    let (a, b) = (yops::xi(&x), yops::nabla(&x));
    (a == xi_want && b == nabla_want, format!("ξ(4,3,1) = {a}; ∇(4,3,1) = {b}"))
}

fn lr_agrees(lam: &Partition, mu: &Partition, t: &mut Tally) {
    let prod = yops::multiply(lam, mu);
    for nu in partitions_of(lam.size() + mu.size()) {
        let want = oracle::lr_count(lam, mu, &nu) as i64;
        let got = prod.coeff(&nu);
        t.check(got == int(want), || format!("c^{nu}_{{{lam},{mu}}}: {got} vs {want}"));
    }
    t.check(prod.keys().all(|k| k.size() == lam.size() + mu.size()), || format!("{lam}·{mu} not homogeneous"));
}

fn c02_lr(cfg: &SuiteConfig) -> Outcome {
    let mut t = Tally::default();
    let small = partitions_up_to(cfg.lr_exhaustive);
    for lam in &small {
        for mu in &small {
            lr_agrees(lam, mu, &mut t);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let pool: Vec<Partition> = (1..=cfg.lr_random_max).flat_map(partitions_of).collect();
    for _ in 0..cfg.lr_random_pairs {
        let lam = pool.choose(&mut rng).unwrap();
        let mu = pool.choose(&mut rng).unwrap();
        lr_agrees(lam, mu, &mut t);
    }
    t.finish(&format!(
        "all pairs up to size {} and {} random pairs up to size {}",
        cfg.lr_exhaustive, cfg.lr_random_pairs, cfg.lr_random_max
    ))
}

fn c03_leibniz(cfg: &SuiteConfig) -> Outcome {
    let mut t = Tally::default();
    let mut dims = Vec::new();
    for &deg in &cfg.leibniz_degrees {
        let space = yops::leibniz_operator_space(deg);
        dims.push(format!("d={deg}: {}", space.dimension));
        t.check(space.dimension == 2 && space.spans_xi_nabla, || {
            format!("d={deg}: dimension {} spans ξ,∇: {}", space.dimension, space.spans_xi_nabla)
        });
    }
    t.finish(&dims.join(", "))
}

fn c04_determinants(cfg: &SuiteConfig) -> Outcome {
    let mut t = Tally::default();
    for lam in partitions_up_to(cfg.det_max).into_iter().filter(|l| !l.is_empty()) {
        let want = d(&lam);
        t.check(yops::jacobi_trudi_h(&lam) == want, || format!("h-determinant of {lam}"));
        t.check(yops::jacobi_trudi_e(&lam) == want, || format!("e-determinant of {lam}"));
        t.check(yops::giambelli(&lam) == want, || format!("Giambelli for {lam}"));
    }
    t.finish(&format!("three identities for every |λ| ≤ {}", cfg.det_max))
}

fn c05_bosonic(cfg: &SuiteConfig) -> Outcome {
    let mut t = Tally::default();
    let shapes = partitions_up_to(cfg.rho_max_size);
    for lam in &shapes {
        let x = d(lam);
        for k in 1..=cfg.rho_max_k {
            t.check(yops::rho(k, &x) == yops::rho_border_strip(k, &x), || format!("ρ^({k}) on {lam}"));
        }
        for j in 1..=cfg.rho_max_k.min(lam.size()) {
            for k in j + 1..=cfg.rho_max_k.min(lam.size() - j) {
                let jk = yops::rho(j, &yops::rho(k, &x));
                let kj = yops::rho(k, &yops::rho(j, &x));
                t.check(jk == kj, || format!("ρ^({j}), ρ^({k}) on {lam}"));
            }
        }
    }
    for k in 1..=cfg.rho_max_k {
        for j in 1..=cfg.rho_max_k {
            let got = yops::rho(k, &yops::power_sum(j));
            let want = if j == k { d(&Partition::empty()).scale(&int(k as i64)) } else { FormalSum::zero() };
            t.check(got == want, || format!("ρ^({k}) p_{j} = {got}"));
        }
    }
    t.finish(&format!("|λ| ≤ {}, k ≤ {}", cfg.rho_max_size, cfg.rho_max_k))
}

/// `Σ (-1)^{ht-1} ν` over border strips `ν / λ` of size `k`.
fn add_strips(lam: &Partition, k: usize) -> DiagElement {
    let mut out = FormalSum::zero();
    for nu in partitions_of(lam.size() + k).into_iter().filter(|nu| nu.contains(lam)) {
        for s in border_strips(&nu, k) {
            if &s.inner == lam {
                out.add_term(nu.clone(), int(s.sign()));
            }
        }
    }
    out
}

fn c06_mn_duality(cfg: &SuiteConfig) -> Outcome {
    let mut t = Tally::default();
    for lam in partitions_up_to(cfg.mn_max_size) {
        for k in 1..=cfg.mn_max_k {
            let got = yops::mul_elements(&yops::power_sum(k), &d(&lam));
            t.check(got == add_strips(&lam, k), || format!("p_{k} · s_{lam}"));
        }
    }
    let (rows, cols) = cfg.duality_box;
    let boxed = partitions_in_box(rows, cols);
    for lam in &boxed {
        for mu in &boxed {
            if mu.size() >= lam.size() {
                continue;
            }
            let k = lam.size() - mu.size();
            let lhs = yops::rho(k, &d(lam)).coeff(mu);
            let lc = rotated_complement(lam, rows, cols);
            let mc = rotated_complement(mu, rows, cols);
            let rhs = yops::mul_elements(&yops::power_sum(k), &d(&lc)).coeff(&mc);
            t.check(lhs == rhs, || format!("ρ^({k}) {lam} → {mu}: {lhs} vs {rhs}"));
        }
    }
    t.finish(&format!("|λ| ≤ {}, k ≤ {}, duality in {rows}×{cols}", cfg.mn_max_size, cfg.mn_max_k))
}

fn random_element(rng: &mut ChaCha8Rng, max_size: usize, terms: usize) -> DiagElement {
    let pool = partitions_up_to(max_size);
    let mut x = FormalSum::zero();
    for _ in 0..terms {
        x.add_term(pool.choose(rng).unwrap().clone(), int(rng.gen_range(-3..=3)));
    }
    x
}

fn c07_xi_lambda(cfg: &SuiteConfig) -> Outcome {
    let mut t = Tally::default();
    for n in 0..=cfg.xi_lambda_max {
        for lam in partitions_of(n) {
            for mu in partitions_of(n) {
                let got = yops::xi_lambda(&lam, &d(&mu));
                let want = if lam == mu { d(&Partition::empty()) } else { FormalSum::zero() };
                t.check(got == want, || format!("ξ^{lam} s_{mu} = {got}"));
            }
        }
    }
    for lam in partitions_up_to(cfg.xi_lambda_max) {
        for nu in partitions_up_to(lam.size()) {
            let got = yops::xi_lambda(&nu, &d(&lam));
            for mu in partitions_of(lam.size() - nu.size()) {
                let want = oracle::lr_count(&mu, &nu, &lam) as i64;
                t.check(got.coeff(&mu) == int(want), || format!("[{mu}] ξ^{nu} s_{lam}"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 7);
    for lam in partitions_up_to(cfg.prod_formula_max).into_iter().filter(|l| !l.is_empty()) {
        for _ in 0..3 {
            let x = random_element(&mut rng, 3, 3);
            let y = random_element(&mut rng, 3, 3);
            let lhs = yops::xi_lambda(&lam, &yops::mul_elements(&x, &y));
            let mut rhs = FormalSum::zero();
            for mu in partitions_up_to(lam.size()) {
                for nu in partitions_of(lam.size() - mu.size()) {
                    let c = oracle::lr_count(&mu, &nu, &lam) as i64;
                    if c != 0 {
                        let term = yops::mul_elements(&yops::xi_lambda(&mu, &x), &yops::xi_lambda(&nu, &y));
                        rhs.add_scaled(&int(c), &term);
                    }
                }
            }
            t.check(lhs == rhs, || format!("ξ^{lam}(xy) with x = {x}, y = {y}"));
        }
    }
    t.finish(&format!("|λ| ≤ {}, product formula for |λ| ≤ {}", cfg.xi_lambda_max, cfg.prod_formula_max))
}

fn c08_recover(cfg: &SuiteConfig) -> Outcome {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 8);
    let pool: Vec<Partition> = (1..=cfg.recover_max_size).flat_map(partitions_of).collect();
    for _ in 0..cfg.recover_samples {
        let mut x = FormalSum::zero();
        for _ in 0..rng.gen_range(1..=5) {
            x.add_term(pool.choose(&mut rng).unwrap().clone(), int(rng.gen_range(1..=4)));
        }
        let got = yops::recover(&yops::xi(&x), &yops::nabla(&x));
        t.check(got.as_ref().ok() == Some(&x), || format!("recover failed on {x}: {got:?}"));
    }
    for n in 1..=cfg.kernel_max_degree {
        let cols = partitions_of(n);
        let lower = partitions_of(n - 1);
        let mut rows = Vec::new();
        for op in [yops::xi as fn(&DiagElement) -> DiagElement, yops::nabla] {
            for target in &lower {
                rows.push(cols.iter().map(|c| op(&d(c)).coeff(target)).collect::<Vec<_>>());
            }
        }
        let kernel = solve_nullspace(&rows, cols.len());
        t.check(kernel.is_empty() && rank(&rows, cols.len()) == cols.len(), || {
            format!("degree {n}: kernel of (ξ; ∇) has dimension {}", kernel.len())
        });
    }
    t.finish(&format!(
        "{} random elements up to size {}, kernels up to degree {}",
        cfg.recover_samples, cfg.recover_max_size, cfg.kernel_max_degree
    ))
}

fn c09_stanley(cfg: &SuiteConfig) -> Outcome {
    let mut t = Tally::default();
    for w in permutations_of_window(1, cfg.stanley_window) {
        if w.length() > cfg.stanley_max_len {
            continue;
        }
        let got = bsops::stanley_coeffs(&w);
        let want = oracle::stanley_schur_expand(&w);
        t.check(got == want, || format!("F_{w}: {got} vs {want}"));
        t.check(got.is_nonnegative_integral(), || format!("F_{w} = {got} is not Schur positive"));
    }
    for w in permutations_of_window(1, cfg.stanley_rw_window) {
        if w.length() > cfg.stanley_rw_max_len {
            continue;
        }
        let a = bsops::stanley_coeffs(&w);
        let mut total = Rational::zero();
        for (lam, c) in a.iter() {
            total += &(c * &Rational::from(BigInt::from(hook_syt_count(lam))));
        }
        let r = Rational::from(BigInt::from(reduced_word_count(&w)));
        t.check(total == r, || format!("Σ a f for {w}: {total} vs |R| = {r}"));
        t.check(a.is_nonnegative_integral(), || format!("F_{w} = {a} is not Schur positive"));
    }
    t.finish(&format!(
        "oracle agreement for ℓ ≤ {} in width {}, reduced-word counts for ℓ ≤ {} in width {}",
        cfg.stanley_max_len, cfg.stanley_window, cfg.stanley_rw_max_len, cfg.stanley_rw_window
    ))
}

fn c10_two_term_product() -> Outcome {
    let perm = |s: &str| s.parse::<PermutationZ>().unwrap().shift_tau(-2);
    let u = perm("0,1,3,2,4@0");
    let lam = match grass_decode(&u) {
        Ok(GrassCode { descent: 0, shape }) => shape,
        other => return (false, format!("Schur factor does not decode at descent 0: {other:?}")),
    };
    let w = perm("0,2,3,1,4@0");
    let want = FormalSum::from_terms([
        (perm("1,2,3,0,4@0"), Rational::one()),
        (perm("0,2,4,1,3@0"), Rational::one()),
    ]);
    let mut eng = ProductEngine::new();
    let got = match eng.schur_times_schubert(&lam, &w) {
        Ok(x) => x,
        Err(e) => return (false, e.to_string()),
    };
    let report = match verify_product(&mut eng, &lam, &w, &got) {
        Ok(r) => r,
        Err(e) => return (false, e.to_string()),
    };
    let failed: Vec<&str> = report.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
    (
        got == want && report.all_passed(),
        format!("s_{lam} · 𝔖_{w} = {got}; failed checks: {failed:?}"),
    )
}

/// Canonical permutations of the windows `[a, a + width)` for `a = -3..=1`.
pub fn window_family(width: usize) -> Vec<PermutationZ> {
    let set: BTreeSet<PermutationZ> = (-3..=1).flat_map(|a| permutations_of_window(a, width)).collect();
    set.into_iter().collect()
}

fn c11_products(cfg: &SuiteConfig) -> Outcome {
    let mut t = Tally::default();
    let mut eng = ProductEngine::new();
    let mut pairs = 0;
    for w in window_family(cfg.product_window) {
        if w.length() > cfg.product_max_degree {
            continue;
        }
        for lam in partitions_up_to(cfg.product_max_degree - w.length()) {
            pairs += 1;
            let got = match eng.schur_times_schubert(&lam, &w) {
                Ok(x) => x,
                Err(e) => {
                    t.check(false, || format!("({lam}, {w}): {e}"));
                    continue;
                }
            };
            let want = oracle::schur_times_schubert_oracle(&lam, &w, 0).expect("oracle expansion");
            t.check(got == want, || format!("s_{lam} · 𝔖_{w}: {got} vs oracle {want}"));
            if lam.size() + w.length() <= cfg.product_max_degree.saturating_sub(2) {
                for extra in 1..=cfg.product_shifts {
                    let shifted = oracle::schur_times_schubert_oracle(&lam, &w, extra).expect("oracle expansion");
                    t.check(shifted == want, || format!("oracle for ({lam}, {w}) changes under shift {extra}"));
                }
            }
            let report = verify_product(&mut eng, &lam, &w, &got).expect("verification runs");
            t.check(report.all_passed(), || format!("verification of ({lam}, {w}): {:?}", report.checks));
        }
    }
    let mut monk = 0;
    for w in window_family(cfg.monk_window) {
        if w.length() > cfg.monk_max_len {
            continue;
        }
        monk += 1;
        let got = eng.schur_times_schubert(&p(&[1]), &w);
        let want = oracle::monk_rule(0, &w);
        t.check(got.as_ref().ok() == Some(&want), || format!("Monk for {w}: {got:?} vs {want}"));
        let s1 = grass_encode(&GrassCode::new(0, p(&[1])));
        t.check(bsops::reduced_word_identity_check(&s1, &w, &want), || format!("reduced words for Monk {w}"));
    }
    t.finish(&format!("{pairs} products against the polynomial oracle, {monk} Monk cases"))
}

fn c12_anchors() -> Outcome {
    let mut t = Tally::default();
    let fig1: PermutationZ = "3,2,7,1,5,4,6@1".parse().unwrap();
    t.check(fig1.length() == 8, || format!("ℓ(3271546) = {}", fig1.length()));
    t.check(reduced_words(&fig1).contains(&vec![1, 2, 1, 4, 6, 5, 4, 3]), || "printed word missing".into());
    let fig2: PermutationZ = "3,2,6,1,5,4,7@1".parse().unwrap();
    let poly = oracle::schubert_poly(&fig2, 7);
    let c = poly.coeff(&[2, 2, 2, 1, 0, 0, 0]);
    t.check(c > BigInt::zero(), || format!("coefficient of x1²x2²x3²x4 is {c}"));
    let fig4: PermutationZ = "2,5,7,1,3,4,6@1".parse().unwrap();
    let g = grass_decode(&fig4);
    t.check(g.as_ref().ok() == Some(&GrassCode::new(3, p(&[4, 3, 1]))), || format!("{g:?}"));
    t.finish(&format!("coefficient of x1²x2²x3²x4 is {c}"))
}

/// The partition of `n` with the most standard tableaux, ties to the larger.
pub fn bench_shape(n: usize) -> Partition {
    partitions_of(n)
        .into_iter()
        .max_by(|a, b| hook_syt_count(a).cmp(&hook_syt_count(b)).then(a.cmp(b)))
        .unwrap()
}

/// One row of the LR benchmark.
#[derive(Clone, Debug)]
pub struct BenchRow {
    pub size: usize,
    pub instance: String,
    pub operator_secs: f64,
    pub oracle_secs: f64,
    pub terms: usize,
    pub agree: bool,
}

/// Times `s_λ s_λ` by the operator recursion (fresh memo table) and by the
/// tableau oracle, for the benchmark shape of each size.
pub fn bench_lr(max: usize) -> Vec<BenchRow> {
    (1..=max)
        .map(|n| {
            let lam = bench_shape(n);
            let ring = SchurRing::new();
            let t0 = Instant::now();
            let ours = ring.multiply(&lam, &lam);
            let operator_secs = t0.elapsed().as_secs_f64();
            let t1 = Instant::now();
            let theirs = oracle::schur_product_expand(&lam, &lam);
            let oracle_secs = t1.elapsed().as_secs_f64();
            BenchRow {
                size: n,
                instance: format!("{lam} x {lam}"),
                operator_secs,
                oracle_secs,
                terms: ours.len(),
                agree: ours == theirs,
            }
        })
        .collect()
}

/// The Schubert factor of the product benchmark: `s_1 s_2 ⋯ s_b`.
pub fn bench_cycle(b: usize) -> PermutationZ {
    PermutationZ::from_word(&(1..=b as i64).collect::<Vec<_>>())
}

/// Times `s_λ 𝔖_w` with `|λ| + ℓ(w) = n` by the operator recursion (empty
/// caches) and by the polynomial oracle.
pub fn bench_mult_ss(max: usize) -> Vec<BenchRow> {
    (1..=max)
        .map(|n| {
            let lam = bench_shape(n.div_ceil(2));
            let w = bench_cycle(n - lam.size());
            yops::clear_caches();
            bsops::clear_caches();
            let t0 = Instant::now();
            let ours = ProductEngine::new().schur_times_schubert(&lam, &w);
            let operator_secs = t0.elapsed().as_secs_f64();
            let t1 = Instant::now();
            let theirs = oracle::schur_times_schubert_oracle(&lam, &w, 0);
            let oracle_secs = t1.elapsed().as_secs_f64();
            let terms = ours.as_ref().map(|x| x.len()).unwrap_or(0);
            let agree = matches!((&ours, &theirs), (Ok(a), Ok(b)) if a == b);
            BenchRow { size: n, instance: format!("{lam} x {w}"), operator_secs, oracle_secs, terms, agree }
        })
        .collect()
}

pub fn bench_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("size,instance,operator_seconds,oracle_seconds,terms,agree\n");
    for r in rows {
        writeln!(
            out,
            "{},\"{}\",{:.6},{:.6},{},{}",
            r.size, r.instance, r.operator_secs, r.oracle_secs, r.terms, r.agree
        )
        .unwrap();
    }
    out
}

fn c13_bench(cfg: &SuiteConfig) -> Outcome {
    let rows = bench_lr(cfg.bench_max);
    if let Some(path) = &cfg.bench_csv {
        if let Err(e) = std::fs::write(path, bench_csv(&rows)) {
            return (false, format!("cannot write {}: {e}", path.display()));
        }
    }
    let agree = rows.iter().all(|r| r.agree);
    let growth = |f: fn(&BenchRow) -> f64| {
        let first = rows.iter().find(|r| r.size >= 2).map(f).unwrap_or(0.0).max(1e-9);
        rows.last().map(f).unwrap_or(0.0) / first
    };
    let (ops, orc) = (growth(|r| r.operator_secs), growth(|r| r.oracle_secs));
    (
        agree,
        format!(
            "results agree: {agree}; growth from size 2 to {}: operator ×{ops:.1}, oracle ×{orc:.1} ({})",
            cfg.bench_max,
            if ops <= orc { "operator grows no faster" } else { "operator grows faster" }
        ),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bench_shapes() {
        assert_eq!(bench_shape(3), p(&[2, 1]));
        assert_eq!(bench_shape(4), p(&[3, 1]));
    }

    #[test]
    fn scaled_suite_passes() {
        for r in run_all(&SuiteConfig::scaled(3)) {
            assert!(r.passed, "{}", r.line());
        }
    }
}
