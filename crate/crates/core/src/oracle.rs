//! Classical ground truth: tableaux, Kostka numbers, compatible sequences and
//! pipe dreams. Nothing here touches the operator modules.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, ParseError, Result};
use crate::exact::{FormalSum, Rational};
use crate::perm::{reduced_words, PermutationZ};
use crate::young::{partitions_of, Partition};

/// Integer polynomial in the variables `x_lo, ..., x_hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    lo: i64,
    hi: i64,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MonomialMap {
    pub fn zero(lo: i64, hi: i64) -> Self {
        assert!(hi >= lo - 1, "empty variable range must be [lo, lo-1]");
        MonomialMap { lo, hi, terms: BTreeMap::new() }
    }

    /// Polynomial in `x_1, ..., x_m`.
    pub fn zero_in(m: usize) -> Self {
        Self::zero(1, m as i64)
    }

    pub fn one_in(m: usize) -> Self {
        let mut p = Self::zero_in(m);
        p.add_term(vec![0; m], BigInt::one());
        p
    }

    pub fn range(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn nvars(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[u32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: BigInt) {
        assert_eq!(exp.len(), self.nvars(), "exponent vector has the wrong length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · other` over the same variables.
    pub fn add_scaled(&mut self, c: &BigInt, other: &Self) {
        assert_eq!(self.range(), other.range(), "variable ranges differ");
        for (e, v) in &other.terms {
            self.add_term(e.clone(), c * v);
        }
    }

    /// Monomials ordered by the exponent of the highest-index variable
    /// first; the largest is the leading monomial.
    pub fn leading(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().max_by(|a, b| a.0.iter().rev().cmp(b.0.iter().rev()))
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| json!({"exp": e, "coeff": c.to_string()}))
            .collect();
        json!({"vars": [self.lo, self.hi], "terms": terms})
    }

    pub fn from_json(v: &Value) -> std::result::Result<Self, ParseError> {
        let vars = v
            .get("vars")
            .and_then(Value::as_array)
            .filter(|a| a.len() == 2)
            .ok_or_else(|| ParseError::new("missing 'vars' pair", 0))?;
        let lo = vars[0].as_i64().ok_or_else(|| ParseError::new("bad 'vars'", 0))?;
        let hi = vars[1].as_i64().ok_or_else(|| ParseError::new("bad 'vars'", 0))?;
        let mut out = Self::zero(lo, hi);
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| ParseError::new("missing 'terms' array", 0))?;
        for t in terms {
            let exp: Vec<u32> = t
                .get("exp")
                .and_then(Value::as_array)
                .ok_or_else(|| ParseError::new("term without 'exp'", 0))?
                .iter()
                .map(|x| x.as_u64().map(|x| x as u32))
                .collect::<Option<_>>()
                .ok_or_else(|| ParseError::new("non-integer exponent", 0))?;
            if exp.len() != out.nvars() {
                return Err(ParseError::new("exponent vector length does not match 'vars'", 0));
            }
            let c: BigInt = t
                .get("coeff")
                .and_then(Value::as_str)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| ParseError::new("term without integer 'coeff'", 0))?;
            out.add_term(exp, c);
        }
        Ok(out)
    }
}

pub fn poly_multiply(a: &MonomialMap, b: &MonomialMap) -> MonomialMap {
    assert_eq!(a.range(), b.range(), "variable ranges differ");
    let mut out = MonomialMap::zero(a.lo, a.hi);
    for (ea, ca) in &a.terms {
        for (eb, cb) in &b.terms {
            let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            out.add_term(e, ca * cb);
        }
    }
    out
}

/// Shapes `μ ⊆ λ` such that `λ / μ` is a horizontal strip of size `k`.
fn horizontal_strips_below(lambda: &[u32], k: u32) -> Vec<Vec<u32>> {
    fn go(lambda: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == lambda.len() {
            if left == 0 {
                let mut v = cur.clone();
                while v.last() == Some(&0) {
                    v.pop();
                }
                out.push(v);
            }
            return;
        }
        let below = lambda.get(i + 1).copied().unwrap_or(0);
        for take in 0..=(lambda[i] - below).min(left) {
            cur.push(lambda[i] - take);
            go(lambda, i + 1, left - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, k, &mut Vec::new(), &mut out);
    out
}

/// Kostka numbers: semistandard tableaux of a shape with a given content.
#[derive(Default)]
pub struct Kostka {
    memo: HashMap<(Vec<u32>, Vec<u32>), BigInt>,
}

impl Kostka {
    pub fn new() -> Self {
        Self::default()
    }

    /// `K_{λ,α}`; symmetric in the order of `α`, so the content is sorted.
    pub fn get(&mut self, lambda: &Partition, alpha: &[u32]) -> BigInt {
        let mut a: Vec<u32> = alpha.iter().copied().filter(|&x| x > 0).collect();
        a.sort_unstable_by(|x, y| y.cmp(x));
        if a.iter().sum::<u32>() as usize != lambda.size() {
            return BigInt::zero();
        }
        self.count(lambda.parts(), &a)
    }

    fn count(&mut self, lambda: &[u32], alpha: &[u32]) -> BigInt {
        let Some((&last, rest)) = alpha.split_last() else {
            return if lambda.is_empty() { BigInt::one() } else { BigInt::zero() };
        };
        if lambda.len() > alpha.len() {
            return BigInt::zero();
        }
        let key = (lambda.to_vec(), alpha.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for mu in horizontal_strips_below(lambda, last) {
            total += self.count(&mu, rest);
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `s_λ(x_1, ..., x_m)` as a sum over semistandard tableaux.
pub fn schur_poly(lambda: &Partition, m: usize) -> MonomialMap {
    // Fill the values m, m-1, ..., 1 as horizontal strips peeled off λ.
    fn go(shape: &[u32], v: usize, exp: &mut Vec<u32>, out: &mut MonomialMap) {
        if v == 0 {
            if shape.is_empty() {
                out.add_term(exp.clone(), BigInt::one());
            }
            return;
        }
        if shape.len() > v {
            return;
        }
        let size: u32 = shape.iter().sum();
        for k in 0..=size {
            for mu in horizontal_strips_below(shape, k) {
                exp[v - 1] = k;
                go(&mu, v - 1, exp, out);
            }
        }
        exp[v - 1] = 0;
    }
    let mut out = MonomialMap::zero_in(m);
    go(lambda.parts(), m, &mut vec![0; m], &mut out);
    out
}

fn dominant_terms(p: &MonomialMap) -> BTreeMap<Partition, BigInt> {
    p.terms()
        .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
        .map(|(e, c)| (Partition::new(e.clone()), c.clone()))
        .collect()
}

/// Expands a symmetric polynomial in `x_1..x_m` in the Schur basis.
pub fn ssyt_expand(p: &MonomialMap) -> Result<FormalSum<Partition>> {
    if p.range().0 != 1 {
        return Err(Error::NotSymmetric("variables must start at x_1".into()));
    }
    for (e, c) in p.terms() {
        for i in 1..e.len() {
            let mut swapped = e.clone();
            swapped.swap(i - 1, i);
            if &p.coeff(&swapped) != c {
                return Err(Error::NotSymmetric(format!("not invariant under x_{i} <-> x_{}", i + 1)));
            }
        }
    }
    expand_dominant(dominant_terms(p), p.nvars())
}

/// Peels the largest dominant monomial against `K_{ν,·}` until nothing is left.
pub fn expand_dominant(mut dom: BTreeMap<Partition, BigInt>, m: usize) -> Result<FormalSum<Partition>> {
    let mut kostka = Kostka::new();
    let mut out = FormalSum::zero();
    let guard = dom.len() + 1;
    for _ in 0..guard {
        let Some((nu, c)) = dom.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) else {
            return Ok(out);
        };
        let keys: Vec<Partition> = dom.keys().filter(|k| k.size() == nu.size()).cloned().collect();
        for kappa in keys {
            let k = kostka.get(&nu, kappa.parts());
            if !k.is_zero() {
                let slot = dom.get_mut(&kappa).unwrap();
                *slot -= &c * k;
                if slot.is_zero() {
                    dom.remove(&kappa);
                }
            }
        }
        if dom.contains_key(&nu) {
            return Err(Error::NotSymmetric(format!("leading term {nu} did not cancel")));
        }
        debug_assert!(nu.length() <= m);
        out.add_term(nu, Rational::from(c));
    }
    if dom.is_empty() {
        Ok(out)
    } else {
        Err(Error::NotSymmetric("Schur expansion did not terminate".into()))
    }
}

/// Schur expansion of `s_λ s_μ` from the dominant monomials of the product
/// alone: `[x^ν] s_λ s_μ = Σ_{α+β=ν} K_{λ,α} K_{μ,β}`.
pub fn schur_product_expand(lambda: &Partition, mu: &Partition) -> FormalSum<Partition> {
    let n = lambda.size() + mu.size();
    let mut kostka = Kostka::new();
    let mut dom = BTreeMap::new();
    for nu in partitions_of(n) {
        let mut total = BigInt::zero();
        let parts = nu.parts().to_vec();
        let mut alpha = vec![0u32; parts.len()];
        loop {
            if alpha.iter().sum::<u32>() as usize == lambda.size() {
                let beta: Vec<u32> = parts.iter().zip(&alpha).map(|(n, a)| n - a).collect();
                let ka = kostka.get(lambda, &alpha);
                if !ka.is_zero() {
                    total += ka * kostka.get(mu, &beta);
                }
            }
            // odometer over 0 ≤ α_i ≤ ν_i
            let mut i = 0;
            while i < alpha.len() && alpha[i] == parts[i] {
                alpha[i] = 0;
                i += 1;
            }
            if i == alpha.len() {
                break;
            }
            alpha[i] += 1;
        }
        if !total.is_zero() {
            dom.insert(nu, total);
        }
    }
    expand_dominant(dom, n).expect("a product of Schur polynomials is symmetric")
}

/// Littlewood–Richardson tableaux of shape `ν / λ` and content `μ`.
pub fn lr_count(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    let rows = nu.length();
    let pad = |p: &Partition| (1..=rows).map(|i| p.part(i)).collect::<Vec<u32>>();
    let outer = pad(nu);
    // fill[r][v] = number of entries v+1 in row r
    fn go(
        shape: &[u32],
        outer: &[u32],
        content: &[u32],
        v: usize,
        fill: &mut Vec<Vec<u32>>,
        count: &mut u64,
    ) {
        if v == content.len() {
            if shape == outer && lattice(fill, content.len()) {
                *count += 1;
            }
            return;
        }
        // add a horizontal strip of size content[v] inside outer
        fn strips(shape: &[u32], outer: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if i == shape.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let cap = if i == 0 { outer[0] } else { outer[i].min(shape[i - 1]) };
            for take in 0..=cap.saturating_sub(shape[i]).min(left) {
                cur.push(take);
                strips(shape, outer, i + 1, left - take, cur, out);
                cur.pop();
            }
        }
        let mut options = Vec::new();
        strips(shape, outer, 0, content[v], &mut Vec::new(), &mut options);
        for add in options {
            let next: Vec<u32> = shape.iter().zip(&add).map(|(s, a)| s + a).collect();
            for (r, a) in add.iter().enumerate() {
                fill[r][v] = *a;
            }
            go(&next, outer, content, v + 1, fill, count);
            for row in fill.iter_mut().take(add.len()) {
                row[v] = 0;
            }
        }
    }
    fn lattice(fill: &[Vec<u32>], kinds: usize) -> bool {
        let mut seen = vec![0u32; kinds + 1];
        for row in fill {
            for v in (0..kinds).rev() {
                for _ in 0..row[v] {
                    seen[v] += 1;
                    if v > 0 && seen[v] > seen[v - 1] {
                        return false;
                    }
                }
            }
        }
        true
    }
    let mut fill = vec![vec![0; mu.length()]; rows];
    let mut count = 0;
    go(&pad(lambda), &outer, mu.parts(), 0, &mut fill, &mut count);
    count
}

fn require_positive(w: &PermutationZ) {
    assert!(w.is_positive(), "{w} moves a non-positive integer");
}

/// `𝔖_w(x_1, ..., x_m, 0, 0, ...)` from compatible sequences.
pub fn schubert_poly(w: &PermutationZ, m: usize) -> MonomialMap {
    require_positive(w);
    fn go(h: &[i64], j: usize, floor: i64, m: i64, exp: &mut Vec<u32>, out: &mut MonomialMap) {
        if j == h.len() {
            out.add_term(exp.clone(), BigInt::one());
            return;
        }
        for a in floor..=h[j].min(m) {
            exp[(a - 1) as usize] += 1;
            let next = if j + 1 < h.len() && h[j] < h[j + 1] { a + 1 } else { a };
            go(h, j + 1, next, m, exp, out);
            exp[(a - 1) as usize] -= 1;
        }
    }
    let mut out = MonomialMap::zero_in(m);
    for h in reduced_words(w) {
        go(&h, 0, 1, m as i64, &mut vec![0; m], &mut out);
    }
    out
}

/// `𝔖_w(x_1, ..., x_m, 0, ...)` as a sum over reduced pipe dreams.
pub fn schubert_poly_pipe_dreams(w: &PermutationZ, m: usize) -> MonomialMap {
    require_positive(w);
    let mut out = MonomialMap::zero_in(m);
    if w.is_identity() {
        out.add_term(vec![0; m], BigInt::one());
        return out;
    }
    let n = w.window_end();
    // staircase cells in reading order: rows downwards, right to left
    let mut cells = Vec::new();
    for i in 1..n {
        for j in (1..=n - i).rev() {
            cells.push((i, i + j - 1));
        }
    }
    let len = w.length();
    #[allow(clippy::too_many_arguments)]
    fn go(
        cells: &[(i64, i64)],
        idx: usize,
        left: usize,
        cur: &PermutationZ,
        exp: &mut Vec<u32>,
        target: &PermutationZ,
        m: i64,
        out: &mut MonomialMap,
    ) {
        if left == 0 {
            if cur == target {
                out.add_term(exp.clone(), BigInt::one());
            }
            return;
        }
        if cells.len() - idx < left {
            return;
        }
        let (row, letter) = cells[idx];
        if row <= m && !cur.has_descent(letter) {
            exp[(row - 1) as usize] += 1;
            go(cells, idx + 1, left - 1, &cur.right_s(letter).0, exp, target, m, out);
            exp[(row - 1) as usize] -= 1;
        }
        go(cells, idx + 1, left, cur, exp, target, m, out);
    }
    go(&cells, 0, len, &PermutationZ::identity(), &mut vec![0; m], w, m as i64, &mut out);
    out
}

/// Writes a polynomial in `x_1, x_2, ...` as a combination of Schubert
/// polynomials by peeling leading monomials, each read as a Lehmer code.
pub fn schubert_basis_expand(p: &MonomialMap) -> Result<FormalSum<PermutationZ>> {
    if p.range().0 != 1 {
        return Err(Error::NotInSpan("variables must start at x_1".into()));
    }
    let m = p.nvars();
    let mut rest = p.clone();
    let mut out = FormalSum::zero();
    let guard = 4 * p.len() + 16;
    for _ in 0..guard {
        let Some((e, c)) = rest.leading().map(|(e, c)| (e.clone(), c.clone())) else {
            return Ok(out);
        };
        let code: Vec<usize> = e.iter().map(|&x| x as usize).collect();
        let w = PermutationZ::from_lehmer_code(1, &code);
        let s = schubert_poly(&w, m);
        if s.coeff(&e) != BigInt::one() {
            return Err(Error::NotInSpan(format!("leading monomial {e:?} is not a Lehmer code")));
        }
        rest.add_scaled(&-c.clone(), &s);
        out.add_term(w, Rational::from(c));
    }
    Err(Error::NotInSpan("Schubert expansion did not terminate".into()))
}

/// Monk's rule: `𝔖_{s_k} 𝔖_w = Σ 𝔖_{w t_{ab}}` over `a ≤ k < b` with
/// `ℓ(w t_{ab}) = ℓ(w) + 1`.
pub fn monk_rule(k: i64, w: &PermutationZ) -> FormalSum<PermutationZ> {
    let (start, end) = if w.is_identity() { (k, k) } else { (w.window_start(), w.window_end()) };
    let lo = (start - 1).min(k);
    let hi = (end + 1).max(k + 1);
    let mut out = FormalSum::zero();
    for a in lo..=k {
        for b in k + 1..=hi {
            let (wa, wb) = (w.apply(a), w.apply(b));
            if wa < wb && !(a + 1..b).any(|c| (wa..wb).contains(&w.apply(c))) {
                let word: Vec<i64> = (lo..=hi)
                    .map(|i| if i == a { wb } else if i == b { wa } else { w.apply(i) })
                    .collect();
                let v = PermutationZ::from_window(lo, word).expect("transposition of a permutation");
                out.add_term(v, Rational::one());
            }
        }
    }
    out
}

/// Schur expansion of the Stanley symmetric function of `w`, read off the
/// Schubert polynomial of a sufficiently shifted copy of `w`.
pub fn stanley_schur_expand(w: &PermutationZ) -> FormalSum<Partition> {
    let n = w.length();
    if n == 0 {
        return FormalSum::basis(Partition::empty());
    }
    let shifted = w.shift_tau(w.positive_shift() + n as i64);
    ssyt_expand(&schubert_poly(&shifted, n)).expect("Stanley symmetric functions are symmetric")
}

/// The shift that moves `s_λ · 𝔖_w` entirely into positive permutations.
///
/// Every term of the product has window start at least `min(start(w), 1) - |λ|`,
/// since `s_λ` appears in `s_(1)^{|λ|}` and each Monk factor lowers the start by
/// at most one.
pub fn positive_product_shift(lambda: &Partition, w: &PermutationZ) -> i64 {
    let start = if w.is_identity() { 1 } else { w.window_start().min(1) };
    lambda.size() as i64 + 1 - start
}

/// `s_λ · 𝔖_w` in the back-stable Schubert basis via polynomial
/// multiplication after a shift by `positive_product_shift + extra`.
pub fn schur_times_schubert_oracle(
    lambda: &Partition,
    w: &PermutationZ,
    extra: i64,
) -> Result<FormalSum<PermutationZ>> {
    assert!(extra >= 0, "extra shift must be nonnegative");
    let n = positive_product_shift(lambda, w) + extra;
    let ws = w.shift_tau(n);
    let last = if ws.is_identity() { 0 } else { ws.window_end() };
    let m = (n.max(last)) as usize;
    let prod = poly_multiply(&schur_poly(lambda, n as usize).widen(m), &schubert_poly(&ws, m));
    Ok(schubert_basis_expand(&prod)?.map_keys(|v| v.shift_tau(-n)))
}

impl MonomialMap {
    /// The same polynomial in `x_1..x_m`, `m ≥` current count.
    pub fn widen(&self, m: usize) -> MonomialMap {
        assert!(self.lo == 1 && m >= self.nvars(), "can only widen x_1.. ranges");
        let mut out = MonomialMap::zero_in(m);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.resize(m, 0);
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Largest absolute coefficient, for reporting.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{grass_encode, permutations_of_window, GrassCode};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn w(s: &str) -> PermutationZ {
        s.parse().unwrap()
    }

    fn mono(m: usize, terms: &[(&[u32], i64)]) -> MonomialMap {
        let mut out = MonomialMap::zero_in(m);
        for (e, c) in terms {
            out.add_term(e.to_vec(), BigInt::from(*c));
        }
        out
    }

    #[test]
    fn schur_polynomials() {
        assert_eq!(schur_poly(&p(&[1, 1]), 2), mono(2, &[(&[1, 1], 1)]));
        assert_eq!(schur_poly(&p(&[2]), 2), mono(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)]));
        let prod = poly_multiply(&schur_poly(&p(&[2, 1]), 3), &schur_poly(&p(&[1]), 3));
        // (2,2,... ) truncated: three variables miss no shape of length ≤ 3
        assert_eq!(
            ssyt_expand(&prod).unwrap(),
            FormalSum::parse_text("3,1 + 2,2 + 2,1,1").unwrap()
        );
        assert!(matches!(ssyt_expand(&mono(2, &[(&[1, 0], 1)])), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn lr_counts() {
        assert_eq!(lr_count(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_count(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(lr_count(&p(&[2, 1]), &p(&[2, 1]), &p(&[4, 2])), 1);
        assert_eq!(lr_count(&p(&[2, 1]), &p(&[2, 1]), &p(&[5, 1])), 0);
        for lam in crate::young::partitions_up_to(3) {
            for mu in crate::young::partitions_up_to(3) {
                let e = schur_product_expand(&lam, &mu);
                for nu in partitions_of(lam.size() + mu.size()) {
                    assert_eq!(e.coeff(&nu), Rational::from(lr_count(&lam, &mu, &nu) as i64));
                }
            }
        }
    }

    #[test]
    fn schubert_polynomials() {
        assert_eq!(schubert_poly(&w("2,1"), 1), mono(1, &[(&[1], 1)]));
        assert_eq!(schubert_poly(&w("1,3,2"), 2), mono(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
        assert_eq!(schubert_poly(&w("2,3,1"), 2), mono(2, &[(&[1, 1], 1)]));
        assert_eq!(schubert_poly(&w("3,1,2"), 2), mono(2, &[(&[2, 0], 1)]));
        let fig2 = schubert_poly(&w("3,2,6,1,5,4,7"), 6);
        assert!(fig2.coeff(&[2, 2, 2, 1, 0, 0]) >= BigInt::one());
        for u in permutations_of_window(1, 4) {
            assert_eq!(schubert_poly(&u, 4), schubert_poly_pipe_dreams(&u, 4), "{u}");
        }
    }

    #[test]
    fn schubert_expansion() {
        assert_eq!(
            schubert_basis_expand(&mono(1, &[(&[1], 1)])).unwrap(),
            FormalSum::basis(w("2,1"))
        );
        for u in permutations_of_window(1, 4) {
            assert_eq!(schubert_basis_expand(&schubert_poly(&u, 4)).unwrap(), FormalSum::basis(u.clone()));
        }
        let sq = poly_multiply(&schubert_poly(&w("2,1"), 2), &schubert_poly(&w("2,1"), 2));
        // finite truncation drops the term that lives below position 1
        assert_eq!(schubert_basis_expand(&sq).unwrap(), FormalSum::basis(w("3,1,2")));
    }

    #[test]
    fn schur_is_grassmannian_schubert() {
        for lam in crate::young::partitions_up_to(4) {
            let n = lam.length().max(1) as i64 + 1;
            let u = grass_encode(&GrassCode::new(n, lam.clone()));
            assert_eq!(schubert_poly(&u, n as usize), schur_poly(&lam, n as usize), "{lam}");
        }
    }

    #[test]
    fn monk_examples() {
        let s0 = w("1,0@0");
        let expected = FormalSum::parse_text("0,1,-1@-1 + 2,0,1@0").unwrap();
        assert_eq!(monk_rule(0, &s0), expected);
        let s1 = w("2,1");
        assert_eq!(monk_rule(1, &s1), FormalSum::parse_text("3,1,2@1 + 1,2,0@0").unwrap());
        assert_eq!(monk_rule(3, &PermutationZ::identity()), FormalSum::basis(PermutationZ::simple(3)));
    }

    #[test]
    fn stanley_examples() {
        assert_eq!(stanley_schur_expand(&w("2,1,4,3")), FormalSum::parse_text("2 + 1,1").unwrap());
        assert_eq!(stanley_schur_expand(&w("3,2,1")), FormalSum::parse_text("2,1").unwrap());
        assert_eq!(stanley_schur_expand(&w("2,1,4,3").shift_tau(-5)), stanley_schur_expand(&w("2,1,4,3")));
    }

    #[test]
    fn product_oracle_examples() {
        let s0 = grass_encode(&GrassCode::new(0, p(&[1])));
        let got = schur_times_schubert_oracle(&p(&[1]), &s0, 0).unwrap();
        assert_eq!(got, FormalSum::parse_text("0,1,-1@-1 + 2,0,1@0").unwrap());
        for extra in 0..3 {
            assert_eq!(schur_times_schubert_oracle(&p(&[1]), &s0, extra).unwrap(), got);
        }
    }

    #[test]
    fn json_round_trip() {
        let s = schur_poly(&p(&[2, 1]), 3);
        assert_eq!(MonomialMap::from_json(&s.to_json()).unwrap(), s);
    }
}
