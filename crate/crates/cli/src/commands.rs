//! Subcommand bodies. Each returns a human report, a JSON value and whether
//! every requested check passed.

use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use thiserror::Error;

use diffschub::exact::{BasisKey, FormalSum};
use diffschub::oracle;
use diffschub::perm::SchubElement;
use diffschub::product::{verify_product, ProductCache, ProductEngine};
use diffschub::suite::{self, SuiteConfig};
use diffschub::young::partitions_of;
use diffschub::yops::{self, DiagElement};
use diffschub::{bsops, Partition, PermutationZ};

use crate::op::parse_op;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] diffschub::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(_) => 1,
        }
    }
}

pub struct Report {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            1
        }
    }
}

fn usage(what: &str, input: &str, e: impl std::fmt::Display) -> CliError {
    CliError::Usage(format!("invalid {what} '{input}': {e}"))
}

pub fn parse_partition(s: &str) -> Result<Partition, CliError> {
    s.parse().map_err(|e| usage("partition", s, e))
}

pub fn parse_perm(s: &str) -> Result<PermutationZ, CliError> {
    s.parse().map_err(|e| usage("permutation", s, e))
}

/// One `coeff * key` line per term, or `0`.
pub fn format_sum<K: BasisKey>(x: &FormalSum<K>) -> String {
    if x.is_zero() {
        return "0\n".into();
    }
    x.iter().map(|(k, c)| format!("{c} * {k}\n")).collect()
}

fn diff_json<K: BasisKey>(ours: &FormalSum<K>, theirs: &FormalSum<K>) -> Vec<Value> {
    let keys: std::collections::BTreeSet<&K> = ours.keys().chain(theirs.keys()).collect();
    keys.into_iter()
        .filter(|k| ours.coeff(k) != theirs.coeff(k))
        .map(|k| json!({"key": k.to_string(), "operator": ours.coeff(k).to_string(), "oracle": theirs.coeff(k).to_string()}))
        .collect()
}

fn diff_text(diff: &[Value]) -> String {
    diff.iter()
        .map(|d| format!("mismatch {}: operator {}, oracle {}\n", d["key"], d["operator"], d["oracle"]))
        .collect()
}

pub fn lr(lambda: &str, mu: &str, verify: bool) -> Result<Report, CliError> {
    let (l, m) = (parse_partition(lambda)?, parse_partition(mu)?);
    let prod = yops::multiply(&l, &m);
    let mut text: String = prod.iter().map(|(k, c)| format!("{k}: {c}\n")).collect();
    let mut out = json!({"lambda": l.to_string(), "mu": m.to_string(), "expansion": prod.to_json()});
    let mut ok = true;
    if verify {
        let want = FormalSum::from_terms(
            partitions_of(l.size() + m.size())
                .into_iter()
                .map(|nu| {
                    let c = oracle::lr_count(&l, &m, &nu) as i64;
                    (nu, c.into())
                }),
        );
        let diff = diff_json(&prod, &want);
        ok = diff.is_empty();
        text += &diff_text(&diff);
        text += if ok { "verified against LR tableaux\n" } else { "verification FAILED\n" };
        out["verified"] = json!(ok);
        out["mismatches"] = Value::Array(diff);
    }
    Ok(Report { text, json: out, ok })
}

pub fn apply(basis: &str, op: &str, elem: &str) -> Result<Report, CliError> {
    let e = parse_op(op).map_err(|err| usage("operator expression", op, err))?;
    let (text, value) = match basis {
        "partition" => {
            let x = DiagElement::parse_text(elem).map_err(|err| usage("element", elem, err))?;
            let y = e.apply(&x);
            (format_sum(&y), y.to_json())
        }
        "permutation" => {
            let x = SchubElement::parse_text(elem).map_err(|err| usage("element", elem, err))?;
            let y = e.apply(&x);
            (format_sum(&y), y.to_json())
        }
        other => return Err(CliError::Usage(format!("unknown basis '{other}'"))),
    };
    Ok(Report { text, json: json!({"op": e.to_string(), "result": value}), ok: true })
}

/// The cache path from the flag, else from `DIFFSCHUB_CACHE`.
pub fn cache_path(flag: Option<PathBuf>) -> Option<PathBuf> {
    flag.or_else(|| std::env::var_os("DIFFSCHUB_CACHE").map(PathBuf::from))
}

pub fn mult_ss(partition: &str, perm: &str, verify: bool, cache: Option<&Path>) -> Result<Report, CliError> {
    let (l, w) = (parse_partition(partition)?, parse_perm(perm)?);
    let mut store = ProductCache::new();
    if let Some(path) = cache.filter(|p| p.exists()) {
        store.load(path)?;
    }
    let mut eng = ProductEngine::with_cache(store);
    let prod = eng.schur_times_schubert(&l, &w)?;
    let mut text = format_sum(&prod);
    let mut out = json!({"partition": l.to_string(), "perm": w.to_string(), "expansion": prod.to_json()});
    let mut ok = true;
    if verify {
        let report = verify_product(&mut eng, &l, &w, &prod)?;
        let want = oracle::schur_times_schubert_oracle(&l, &w, 0)?;
        let diff = diff_json(&prod, &want);
        let mut checks = Vec::new();
        for c in &report.checks {
            text += &format!("{}: {}{}\n", c.name, if c.passed { "pass" } else { "FAIL " }, c.detail);
            checks.push(json!({"name": c.name, "passed": c.passed, "detail": c.detail}));
        }
        text += &format!("polynomial oracle: {}\n", if diff.is_empty() { "pass" } else { "FAIL" });
        text += &diff_text(&diff);
        ok = report.all_passed() && diff.is_empty();
        out["checks"] = Value::Array(checks);
        out["mismatches"] = Value::Array(diff);
        out["verified"] = json!(ok);
    }
    if let Some(path) = cache {
        eng.cache.save(path)?;
    }
    Ok(Report { text, json: out, ok })
}

pub fn stanley(perm: &str, verify: bool) -> Result<Report, CliError> {
    let w = parse_perm(perm)?;
    let a = bsops::stanley_coeffs(&w);
    let mut text = format_sum(&a);
    let mut out = json!({"perm": w.to_string(), "expansion": a.to_json()});
    let mut ok = true;
    if verify {
        let diff = diff_json(&a, &oracle::stanley_schur_expand(&w));
        ok = diff.is_empty();
        text += &diff_text(&diff);
        text += if ok { "verified against the polynomial oracle\n" } else { "verification FAILED\n" };
        out["verified"] = json!(ok);
        out["mismatches"] = Value::Array(diff);
    }
    Ok(Report { text, json: out, ok })
}

pub fn identity(kind: &str, lambda: &str) -> Result<Report, CliError> {
    let l = parse_partition(lambda)?;
    let got = match kind {
        "jt-h" => yops::jacobi_trudi_h(&l),
        "jt-e" => yops::jacobi_trudi_e(&l),
        "giambelli" => yops::giambelli(&l),
        other => return Err(CliError::Usage(format!("unknown identity '{other}'"))),
    };
    let ok = got == FormalSum::basis(l.clone());
    let text = format!("{kind} {l}: {}\n{}", if ok { "pass" } else { "FAIL" }, if ok { String::new() } else { format_sum(&got) });
    Ok(Report { text, json: json!({"identity": kind, "lambda": l.to_string(), "passed": ok, "expansion": got.to_json()}), ok })
}

pub fn run_suite(max_size: Option<usize>) -> Report {
    let cfg = max_size.map(SuiteConfig::scaled).unwrap_or_else(SuiteConfig::full);
    let results = suite::run_all(&cfg);
    let text = results.iter().map(|r| r.line() + "\n").collect();
    let json = Value::Array(
        results
            .iter()
            .map(|r| json!({"id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail, "seconds": r.elapsed.as_secs_f64()}))
            .collect(),
    );
    Report { text, json, ok: results.iter().all(|r| r.passed) }
}

pub fn bench(kind: &str, max_size: usize, csv: Option<&Path>) -> Result<Report, CliError> {
    let rows = match kind {
        "lr" => suite::bench_lr(max_size),
        "mult-ss" => suite::bench_mult_ss(max_size),
        other => return Err(CliError::Usage(format!("unknown benchmark '{other}'"))),
    };
    let table = suite::bench_csv(&rows);
    if let Some(path) = csv {
        std::fs::write(path, &table).map_err(diffschub::Error::from)?;
    }
    let json = Value::Array(
        rows.iter()
            .map(|r| json!({"size": r.size, "instance": r.instance, "operator_seconds": r.operator_secs, "oracle_seconds": r.oracle_secs, "terms": r.terms, "agree": r.agree}))
            .collect(),
    );
    Ok(Report { text: table, json, ok: rows.iter().all(|r| r.agree) })
}
