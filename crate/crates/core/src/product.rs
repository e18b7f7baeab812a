//! `s_λ · 𝔅𝔖_w` in the back-stable Schubert basis, computed recursively.
//!
//! Terms with a descent `j ≠ 0` are read off `s_λ · 𝔅𝔖_{w s_j}` through the
//! divided difference `∂_j`, which commutes with `s_λ`. The remaining terms are
//! Grassmannian with descent 0, i.e. Schur functions; their ξ and ∇ images
//! follow from the Leibniz rule, and [`yops::recover`] reconstructs them.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use crate::bsops::{nabla_perm, reduced_word_identity_sides, xi_perm};
use crate::error::{Error, Result};
use crate::exact::{FormalSum, Rational};
use crate::perm::{divided_difference, grass_decode, grass_encode, GrassCode, PermutationZ, SchubElement};
use crate::young::Partition;
use crate::yops::{self, DiagElement};

pub const CACHE_VERSION: u64 = 1;

/// Memo table of computed products.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ProductCache {
    entries: HashMap<(Partition, PermutationZ), SchubElement>,
}

impl ProductCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, lambda: &Partition, w: &PermutationZ) -> Option<&SchubElement> {
        self.entries.get(&(lambda.clone(), w.clone()))
    }

    /// Inserts a result; an existing different value is a conflict.
    pub fn insert(&mut self, lambda: Partition, w: PermutationZ, value: SchubElement) -> Result<()> {
        match self.entries.get(&(lambda.clone(), w.clone())) {
            Some(old) if old != &value => Err(Error::Conflict(format!(
                "cached product for ({lambda}, {w}) is {old}, new value is {value}"
            ))),
            Some(_) => Ok(()),
            None => {
                self.entries.insert((lambda, w), value);
                Ok(())
            }
        }
    }

    pub fn to_json(&self) -> Value {
        let sorted: BTreeMap<_, _> = self.entries.iter().collect();
        let entries: Vec<Value> = sorted
            .into_iter()
            .map(|((lam, w), x)| json!({"lambda": lam.to_string(), "perm": w.to_string(), "expansion": x.to_json()}))
            .collect();
        json!({"version": CACHE_VERSION, "entries": entries})
    }

    /// Merges entries from JSON; disagreeing entries are a conflict.
    pub fn merge_json(&mut self, v: &Value) -> Result<()> {
        let found = v
            .get("version")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::CacheFormat("missing 'version'".into()))?;
        if found != CACHE_VERSION {
            return Err(Error::VersionMismatch { expected: CACHE_VERSION, found });
        }
        let entries = v
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::CacheFormat("missing 'entries' array".into()))?;
        for e in entries {
            let field = |name: &str| {
                e.get(name)
                    .and_then(Value::as_str)
                    .ok_or_else(|| Error::CacheFormat(format!("entry without '{name}'")))
            };
            let lambda: Partition = field("lambda")?.parse()?;
            let w: PermutationZ = field("perm")?.parse()?;
            let x = SchubElement::from_json(
                e.get("expansion").ok_or_else(|| Error::CacheFormat("entry without 'expansion'".into()))?,
            )?;
            self.insert(lambda, w, x)?;
        }
        Ok(())
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(&self.to_json()).expect("JSON values serialize");
        fs::write(path, text)?;
        Ok(())
    }

    /// Loads `path` into this cache (which may already hold entries).
    pub fn load(&mut self, path: &Path) -> Result<()> {
        let text = fs::read_to_string(path)?;
        let v: Value = serde_json::from_str(&text).map_err(|e| Error::CacheFormat(e.to_string()))?;
        self.merge_json(&v)
    }
}

/// The recursive product with its memo table.
#[derive(Default)]
pub struct ProductEngine {
    pub cache: ProductCache,
}

fn encode0(lambda: &Partition) -> PermutationZ {
    grass_encode(&GrassCode::new(0, lambda.clone()))
}

fn is_gr0(v: &PermutationZ) -> bool {
    matches!(v.descents().as_slice(), [] | [0])
}

/// Terms of `x` on Grassmannian permutations with descent 0, as diagrams.
fn to_diagrams(x: &SchubElement, what: &str) -> Result<DiagElement> {
    let mut out = FormalSum::zero();
    for (v, c) in x.iter() {
        if !is_gr0(v) {
            return Err(Error::InternalInconsistency(format!("{what} has non-Grassmannian term {v}")));
        }
        out.add_term(grass_decode(v)?.shape, c.clone());
    }
    Ok(out)
}

impl ProductEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cache(cache: ProductCache) -> Self {
        ProductEngine { cache }
    }

    /// `s_λ · 𝔅𝔖_w`.
    pub fn schur_times_schubert(&mut self, lambda: &Partition, w: &PermutationZ) -> Result<SchubElement> {
        if lambda.is_empty() {
            return Ok(FormalSum::basis(w.clone()));
        }
        if w.is_identity() {
            return Ok(FormalSum::basis(encode0(lambda)));
        }
        if let Some(x) = self.cache.get(lambda, w) {
            return Ok(x.clone());
        }
        let non_gr = self.non_grassmannian_part(lambda, w)?;
        let (mut d, mut n) = self.leibniz_images(lambda, w)?;
        d -= &xi_perm(&non_gr);
        n -= &nabla_perm(&non_gr);
        let dd = to_diagrams(&d, "ξ data")?;
        let nd = to_diagrams(&n, "∇ data")?;
        let gr = yops::recover(&dd, &nd).map_err(|e| {
            Error::InternalInconsistency(format!("recovery failed for ({lambda}, {w}): {e}"))
        })?;
        let mut out = gr.map_keys(encode0);
        out += &non_gr;
        let allowed = w.descents();
        for v in out.keys() {
            if let Some(j) = v.descents().into_iter().find(|j| *j != 0 && !allowed.contains(j)) {
                return Err(Error::InternalInconsistency(format!(
                    "term {v} of ({lambda}, {w}) has descent {j} outside the descents of w"
                )));
            }
        }
        self.cache.insert(lambda.clone(), w.clone(), out.clone())?;
        Ok(out)
    }

    /// Coefficients of all terms with a nonzero descent, read through `∂_j`.
    fn non_grassmannian_part(&mut self, lambda: &Partition, w: &PermutationZ) -> Result<SchubElement> {
        let mut coeffs: BTreeMap<PermutationZ, Rational> = BTreeMap::new();
        for j in w.descents().into_iter().filter(|&j| j != 0) {
            let q = self.schur_times_schubert(lambda, &w.right_s(j).0)?;
            for (u, c) in q.iter() {
                if u.has_descent(j) {
                    return Err(Error::InternalInconsistency(format!(
                        "∂_{j} image term {u} already has descent {j}"
                    )));
                }
                let v = u.right_s(j).0;
                match coeffs.get(&v) {
                    Some(old) if old != c => {
                        return Err(Error::InternalInconsistency(format!(
                            "coefficient of {v} read as {old} and {c} through different descents"
                        )))
                    }
                    _ => {
                        coeffs.insert(v, c.clone());
                    }
                }
            }
        }
        Ok(FormalSum::from_terms(coeffs))
    }

    /// `ξ` and `∇` of the product by the Leibniz rule.
    fn leibniz_images(&mut self, lambda: &Partition, w: &PermutationZ) -> Result<(SchubElement, SchubElement)> {
        let mut d = FormalSum::zero();
        let mut n = FormalSum::zero();
        for (cell, lower) in lambda.removable_corners() {
            let x = self.schur_times_schubert(&lower, w)?;
            d += &x;
            n.add_scaled(&Rational::from(cell.content()), &x);
        }
        for k in w.left_descents() {
            let x = self.schur_times_schubert(lambda, &w.left_s(k).0)?;
            d += &x;
            n.add_scaled(&Rational::from(k), &x);
        }
        Ok((d, n))
    }
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductReport {
    pub checks: Vec<CheckResult>,
}

impl ProductReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// The operator criterion: divided differences and both Leibniz rules.
    pub fn operator_criterion_passed(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| matches!(c.name, "divided-differences" | "xi-leibniz" | "nabla-leibniz"))
            .all(|c| c.passed)
    }
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> CheckResult {
    CheckResult { name, passed, detail: if passed { String::new() } else { detail.into() } }
}

/// Checks a candidate expansion of `s_λ · 𝔅𝔖_w` against the recursion's
/// neighbours, the reduced-word identity and integrality.
pub fn verify_product(
    engine: &mut ProductEngine,
    lambda: &Partition,
    w: &PermutationZ,
    expansion: &SchubElement,
) -> Result<ProductReport> {
    let mut checks = Vec::new();
    let degree = lambda.size() + w.length();
    let wrong_degree: Vec<String> =
        expansion.keys().filter(|v| v.length() != degree).map(|v| v.to_string()).collect();
    checks.push(check("degree", wrong_degree.is_empty(), format!("terms of wrong degree: {wrong_degree:?}")));

    let des = w.descents();
    let mut lo = w.window_start().min(0) - 1;
    let mut hi = w.window_end().max(0) + 1;
    for v in expansion.keys().filter(|v| !v.is_identity()) {
        lo = lo.min(v.window_start() - 1);
        hi = hi.max(v.window_end() + 1);
    }
    let mut bad = Vec::new();
    for j in (lo..=hi).filter(|&j| j != 0) {
        let got = divided_difference(j, expansion);
        let want = if des.contains(&j) {
            engine.schur_times_schubert(lambda, &w.right_s(j).0)?
        } else {
            FormalSum::zero()
        };
        if got != want {
            bad.push(format!("∂_{j}: got {got}, expected {want}"));
        }
    }
    checks.push(check("divided-differences", bad.is_empty(), bad.join("; ")));

    let (d, n) = engine.leibniz_images(lambda, w)?;
    let xi_got = xi_perm(expansion);
    checks.push(check("xi-leibniz", xi_got == d, format!("ξ gives {xi_got}, Leibniz gives {d}")));
    let nabla_got = nabla_perm(expansion);
    checks.push(check("nabla-leibniz", nabla_got == n, format!("∇ gives {nabla_got}, Leibniz gives {n}")));

    let (lhs, rhs) = reduced_word_identity_sides(&encode0(lambda), w, expansion);
    checks.push(check("reduced-words", lhs == rhs, format!("{lhs} ≠ {rhs}")));

    checks.push(check(
        "nonnegative-integral",
        expansion.is_nonnegative_integral(),
        format!("coefficients of {expansion} are not all nonnegative integers"),
    ));
    Ok(ProductReport { checks })
}
