//! The ring of Young diagrams and the operators ξ, ∇, ρ^(k), ξ^λ acting on it.
//!
//! Multiplication is never taken from a combinatorial rule: it is the unique
//! product for which ξ and ∇ obey the Leibniz rule, recovered degree by degree
//! from `(ξ(X), ∇(X))`.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{rank, solve_nullspace, FormalSum, Rational};
use crate::memo::Memo;
use crate::young::{border_strips, partitions_of, Partition};

/// Formal sums of diagrams.
pub type DiagElement = FormalSum<Partition>;

fn diag(lambda: &Partition) -> DiagElement {
    FormalSum::basis(lambda.clone())
}

/// `ξ`: sum over removable corners.
pub fn xi(x: &DiagElement) -> DiagElement {
    x.map(|lam| {
        FormalSum::from_terms(lam.removable_corners().into_iter().map(|(_, p)| (p, Rational::one())))
    })
}

/// `∇`: removable corners weighted by their content.
pub fn nabla(x: &DiagElement) -> DiagElement {
    nabla_shifted(x, 0)
}

/// `∇` with every content shifted by `shift`.
pub fn nabla_shifted(x: &DiagElement, shift: i64) -> DiagElement {
    x.map(|lam| {
        FormalSum::from_terms(
            lam.removable_corners()
                .into_iter()
                .map(|(c, p)| (p, Rational::from(c.content() + shift))),
        )
    })
}

fn rho_memo() -> &'static Memo<(usize, Partition), DiagElement> {
    static M: OnceLock<Memo<(usize, Partition), DiagElement>> = OnceLock::new();
    M.get_or_init(Memo::new)
}

fn rho_basis(k: usize, lam: &Partition) -> DiagElement {
    if k == 1 {
        return xi(&diag(lam));
    }
    if lam.size() < k {
        return FormalSum::zero();
    }
    let key = (k, lam.clone());
    if let Some(v) = rho_memo().get(&key) {
        return v;
    }
    // ρ^(k) = (ρ^(k-1) ∇ - ∇ ρ^(k-1)) / (k-1)
    let prev = |x: &DiagElement| x.map(|mu| rho_basis(k - 1, mu));
    let x = diag(lam);
    let mut out = prev(&nabla(&x));
    out -= &nabla(&prev(&x));
    let out = out.scale(&Rational::new(1, k as i64 - 1));
    rho_memo().insert(key, out)
}

/// `ρ^(k)` by the commutator recursion `ρ^(1) = ξ`, `ρ^(k+1) = [ρ^(k), ∇] / k`.
pub fn rho(k: usize, x: &DiagElement) -> DiagElement {
    assert!(k >= 1, "ρ^(k) needs k ≥ 1");
    x.map(|lam| rho_basis(k, lam))
}

/// `ρ^(k)` as the signed sum over removable border strips of size `k`.
pub fn rho_border_strip(k: usize, x: &DiagElement) -> DiagElement {
    assert!(k >= 1, "ρ^(k) needs k ≥ 1");
    x.map(|lam| {
        FormalSum::from_terms(
            border_strips(lam, k)
                .into_iter()
                .map(|s| (s.inner.clone(), Rational::from(s.sign()))),
        )
    })
}

/// `p_k = Σ_a (-1)^a (k - a, 1^a)`.
pub fn power_sum(k: usize) -> DiagElement {
    assert!(k >= 1, "p_k needs k ≥ 1");
    FormalSum::from_terms((0..k).map(|a| {
        let sign = if a % 2 == 0 { 1 } else { -1 };
        (Partition::hook((k - a - 1) as u32, a as u32), Rational::from(sign))
    }))
}

/// A character value together with the centralizer order of the class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharValue {
    pub lambda: Partition,
    pub mu: Partition,
    pub chi: BigInt,
    pub z: BigInt,
}

/// `z_μ = Π i^{m_i} m_i!`.
pub fn z_mu(mu: &Partition) -> BigInt {
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_default() += 1;
    }
    let mut z = BigInt::one();
    for (i, m) in counts {
        for j in 1..=m {
            z *= BigInt::from(i) * BigInt::from(j);
        }
    }
    z
}

fn mn_chi(lam: &Partition, mu: &[u32], memo: &mut HashMap<(Partition, usize), BigInt>) -> BigInt {
    let Some((&k, rest)) = mu.split_first() else {
        return if lam.is_empty() { BigInt::one() } else { BigInt::zero() };
    };
    let key = (lam.clone(), mu.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for s in border_strips(lam, k as usize) {
        total += BigInt::from(s.sign()) * mn_chi(&s.inner, rest, memo);
    }
    memo.insert(key, total.clone());
    total
}

/// `χ^λ_μ` by the Murnaghan–Nakayama recursion, removing strips of the
/// largest part of `μ` first.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<CharValue> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.to_string(), mu.to_string()));
    }
    let chi = mn_chi(lambda, mu.parts(), &mut HashMap::new());
    Ok(CharValue { lambda: lambda.clone(), mu: mu.clone(), chi, z: z_mu(mu) })
}

/// `ρ^{μ_1} ∘ ρ^{μ_2} ∘ ⋯` applied to `x`; the smallest part acts first.
pub fn rho_composite(mu: &Partition, x: &DiagElement) -> DiagElement {
    mu.parts().iter().rev().fold(x.clone(), |acc, &k| rho(k as usize, &acc))
}

/// `ξ^ν = Σ_μ (χ^ν_μ / z_μ) ρ^{μ_1} ∘ ρ^{μ_2} ∘ ⋯`.
pub fn xi_lambda(nu: &Partition, x: &DiagElement) -> DiagElement {
    if nu.is_empty() {
        return x.clone();
    }
    let mut out = FormalSum::zero();
    for mu in partitions_of(nu.size()) {
        let cv = character(nu, &mu).expect("sizes agree");
        if cv.chi.is_zero() {
            continue;
        }
        let c = Rational::from(cv.chi) / Rational::from(cv.z);
        out.add_scaled(&c, &rho_composite(&mu, x));
    }
    out
}

/// Recovers `X` from `(ξ(X), ∇(X))` when `X` has nonnegative coefficients and
/// no ∅ term.
pub fn recover(d: &DiagElement, n: &DiagElement) -> Result<DiagElement> {
    let mut degrees: Vec<usize> = d.homogeneous_components().into_keys().collect();
    degrees.extend(n.homogeneous_components().into_keys());
    degrees.sort_unstable();
    degrees.dedup();
    let mut x = FormalSum::zero();
    for deg in degrees {
        let dd = d.filter(|p| p.size() == deg);
        let nn = n.filter(|p| p.size() == deg);
        x += &recover_homogeneous(dd, nn)?;
    }
    Ok(x)
}

fn recover_homogeneous(mut d: DiagElement, mut n: DiagElement) -> Result<DiagElement> {
    let mut x = FormalSum::zero();
    let mut previous: Option<Partition> = None;
    while let Some((mu, dc)) = d.leading() {
        let (mu, dc) = (mu.clone(), dc.clone());
        if previous.as_ref().is_some_and(|p| &mu >= p) {
            return Err(Error::NonRecoverable(format!("leading term {mu} did not decrease")));
        }
        let nc = n.coeff(&mu);
        let k = mu.length();
        let mut new_row = mu.parts().to_vec();
        new_row.push(1);
        let mu1 = Partition::new(new_row);
        let extends_last_row = k >= 1 && (k == 1 || mu.part(k - 1) > mu.part(k));
        let mut step = FormalSum::zero();
        if extends_last_row {
            let mut parts = mu.parts().to_vec();
            parts[k - 1] += 1;
            let mu2 = Partition::new(parts);
            // a' + a'' = d and -k a' + (μ_k + 1 - k) a'' = n
            let a2 = (&nc + &(Rational::from(k as i64) * &dc)) / Rational::from(mu.part(k) as i64 + 1);
            let a1 = &dc - &a2;
            step.add_term(mu1, a1);
            step.add_term(mu2, a2);
        } else {
            if nc != Rational::from(-(k as i64)) * &dc {
                return Err(Error::NonRecoverable(format!(
                    "coefficients {dc} and {nc} of {mu} are inconsistent"
                )));
            }
            step.add_term(mu1, dc);
        }
        if step.iter().any(|(_, c)| c.is_negative()) {
            return Err(Error::NonRecoverable(format!("negative coefficient recovered at {mu}: {step}")));
        }
        d -= &xi(&step);
        n -= &nabla(&step);
        x += &step;
        previous = Some(mu);
    }
    if !n.is_zero() {
        return Err(Error::NonRecoverable(format!("∇ data left over: {n}")));
    }
    Ok(x)
}

/// The product of diagrams defined through ξ, ∇ and recovery, with a memo
/// table on unordered pairs.
pub struct SchurRing {
    memo: Memo<(Partition, Partition), DiagElement>,
}

impl Default for SchurRing {
    fn default() -> Self {
        Self::new()
    }
}

impl SchurRing {
    pub fn new() -> Self {
        SchurRing { memo: Memo::new() }
    }

    pub fn clear(&self) {
        self.memo.clear();
    }

    /// Number of memoized pairs.
    pub fn cached_pairs(&self) -> usize {
        self.memo.len()
    }

    pub fn multiply(&self, lambda: &Partition, mu: &Partition) -> DiagElement {
        if lambda.is_empty() {
            return diag(mu);
        }
        if mu.is_empty() {
            return diag(lambda);
        }
        let key = if lambda <= mu { (lambda.clone(), mu.clone()) } else { (mu.clone(), lambda.clone()) };
        if let Some(v) = self.memo.get(&key) {
            return v;
        }
        let mut d = FormalSum::zero();
        let mut n = FormalSum::zero();
        for (cell, l2) in lambda.removable_corners() {
            let prod = self.multiply(&l2, mu);
            d += &prod;
            n.add_scaled(&Rational::from(cell.content()), &prod);
        }
        for (cell, m2) in mu.removable_corners() {
            let prod = self.multiply(lambda, &m2);
            d += &prod;
            n.add_scaled(&Rational::from(cell.content()), &prod);
        }
        let out = recover(&d, &n).expect("Leibniz data of a product is always recoverable");
        self.memo.insert(key, out)
    }

    /// Bilinear extension of [`SchurRing::multiply`].
    pub fn mul_elements(&self, x: &DiagElement, y: &DiagElement) -> DiagElement {
        let mut out = FormalSum::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                out.add_scaled(&(ca * cb), &self.multiply(a, b));
            }
        }
        out
    }
}

/// The process-wide product table.
pub fn ring() -> &'static SchurRing {
    static R: OnceLock<SchurRing> = OnceLock::new();
    R.get_or_init(SchurRing::new)
}

/// Littlewood–Richardson expansion of `s_λ s_μ`.
pub fn multiply(lambda: &Partition, mu: &Partition) -> DiagElement {
    ring().multiply(lambda, mu)
}

pub fn mul_elements(x: &DiagElement, y: &DiagElement) -> DiagElement {
    ring().mul_elements(x, y)
}

/// Empties the product and ρ memo tables.
pub fn clear_caches() {
    ring().clear();
    rho_memo().clear();
}

/// Determinant of an `n × n` matrix with entries in the ring, by Laplace
/// expansion along rows, memoized on the set of remaining columns.
pub fn determinant<F>(n: usize, entry: F) -> DiagElement
where
    F: Fn(usize, usize) -> DiagElement,
{
    fn go<F: Fn(usize, usize) -> DiagElement>(
        n: usize,
        cols: u32,
        entry: &F,
        memo: &mut HashMap<u32, DiagElement>,
    ) -> DiagElement {
        let row = n - cols.count_ones() as usize;
        if row == n {
            return diag(&Partition::empty());
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut out = FormalSum::zero();
        let mut sign = 1;
        for j in 0..n {
            if cols & (1 << j) == 0 {
                continue;
            }
            let a = entry(row, j);
            if !a.is_zero() {
                let minor = go(n, cols & !(1 << j), entry, memo);
                out.add_scaled(&Rational::from(sign), &mul_elements(&a, &minor));
            }
            sign = -sign;
        }
        memo.insert(cols, out.clone());
        out
    }
    assert!(n < 32, "determinant too large");
    go(n, (1u32 << n) - 1, &entry, &mut HashMap::new())
}

fn h(r: i64) -> DiagElement {
    if r < 0 {
        FormalSum::zero()
    } else {
        diag(&Partition::row(r as u32))
    }
}

fn e(r: i64) -> DiagElement {
    if r < 0 {
        FormalSum::zero()
    } else {
        diag(&Partition::column(r as u32))
    }
}

/// `det[h_{λ_i - i + j}]`.
pub fn jacobi_trudi_h(lambda: &Partition) -> DiagElement {
    let l = lambda.length();
    determinant(l, |i, j| h(lambda.part(i + 1) as i64 - i as i64 + j as i64))
}

/// `det[e_{λ'_i - i + j}]`.
pub fn jacobi_trudi_e(lambda: &Partition) -> DiagElement {
    let conj = lambda.conjugate();
    let l = conj.length();
    determinant(l, |i, j| e(conj.part(i + 1) as i64 - i as i64 + j as i64))
}

/// `det[s_{(a_i | b_j)}]` over the Frobenius coordinates of `λ`.
pub fn giambelli(lambda: &Partition) -> DiagElement {
    let (a, b) = lambda.frobenius();
    determinant(a.len(), |i, j| diag(&Partition::hook(a[i], b[j])))
}

/// Result of solving for every derivation-like operator on the ring.
#[derive(Clone, Debug)]
pub struct LeibnizSpace {
    /// Corner pairs `λ → λ'` indexing the unknowns.
    pub unknowns: Vec<(Partition, Partition)>,
    pub dimension: usize,
    pub basis: Vec<Vec<Rational>>,
    pub xi_vector: Vec<Rational>,
    pub nabla_vector: Vec<Rational>,
    /// Whether the solution space is exactly the span of ξ and ∇.
    pub spans_xi_nabla: bool,
}

/// Solves for all `ζ(λ) = Σ a_{λ→λ'} λ'` on diagrams of size `1..=d` that
/// satisfy `ζ(λμ) = ζ(λ)μ + λζ(μ)` for `|λ| + |μ| ≤ d`.
pub fn leibniz_operator_space(d: usize) -> LeibnizSpace {
    let mut unknowns = Vec::new();
    let mut index: HashMap<(Partition, Partition), usize> = HashMap::new();
    let mut xi_vector = Vec::new();
    let mut nabla_vector = Vec::new();
    for size in 1..=d {
        for lam in partitions_of(size) {
            for (cell, lower) in lam.removable_corners() {
                index.insert((lam.clone(), lower.clone()), unknowns.len());
                unknowns.push((lam.clone(), lower));
                xi_vector.push(Rational::one());
                nabla_vector.push(Rational::from(cell.content()));
            }
        }
    }
    let ncols = unknowns.len();
    // ζ(x) as a map from output diagram to a linear form in the unknowns.
    let zeta = |x: &DiagElement, sign: i64, rows: &mut BTreeMap<Partition, Vec<Rational>>, times: Option<&Partition>| {
        for (lam, c) in x.iter() {
            for (_, lower) in lam.removable_corners() {
                let col = index[&(lam.clone(), lower.clone())];
                let image = match times {
                    Some(m) => multiply(&lower, m),
                    None => diag(&lower),
                };
                for (nu, c2) in image.iter() {
                    let row = rows.entry(nu.clone()).or_insert_with(|| vec![Rational::zero(); ncols]);
                    row[col] += &(Rational::from(sign) * c * c2);
                }
            }
        }
    };
    let mut equations = Vec::new();
    let nonempty: Vec<Partition> = (1..d).flat_map(partitions_of).collect();
    for (i, lam) in nonempty.iter().enumerate() {
        for mu in &nonempty[i..] {
            if lam.size() + mu.size() > d {
                continue;
            }
            let mut rows = BTreeMap::new();
            zeta(&multiply(lam, mu), 1, &mut rows, None);
            zeta(&diag(lam), -1, &mut rows, Some(mu));
            zeta(&diag(mu), -1, &mut rows, Some(lam));
            equations.extend(rows.into_values().filter(|r| r.iter().any(|c| !c.is_zero())));
        }
    }
    let basis = solve_nullspace(&equations, ncols);
    let dimension = basis.len();
    let mut stacked = basis.clone();
    stacked.push(xi_vector.clone());
    stacked.push(nabla_vector.clone());
    let spans_xi_nabla = dimension == 2 && rank(&stacked, ncols) == 2;
    LeibnizSpace { unknowns, dimension, basis, xi_vector, nabla_vector, spans_xi_nabla }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn sum(s: &str) -> DiagElement {
        DiagElement::parse_text(s).unwrap()
    }

    #[test]
    fn operators_on_431() {
        let x = diag(&p(&[4, 3, 1]));
        assert_eq!(xi(&x), sum("3,3,1 + 4,2,1 + 4,3"));
        assert_eq!(nabla(&x), sum("3*3,3,1 + 4,2,1 + -2*4,3"));
        assert!(xi(&diag(&Partition::empty())).is_zero());
        assert_eq!(nabla(&diag(&p(&[2]))), sum("1"));
        assert!(nabla(&diag(&p(&[1]))).is_zero());
    }

    #[test]
    fn recovery_examples() {
        assert_eq!(recover(&sum("1,1 + 2"), &sum("1,1 + -1*2")).unwrap(), sum("2,1"));
        assert!(recover(&sum(""), &sum("")).unwrap().is_zero());
        assert_eq!(recover(&sum("2*1"), &sum("")).unwrap(), sum("2 + 1,1"));
        assert!(matches!(recover(&sum(""), &sum("1")), Err(Error::NonRecoverable(_))));
        assert!(matches!(recover(&sum("1"), &sum("5*1")), Err(Error::NonRecoverable(_))));
    }

    #[test]
    fn products() {
        assert_eq!(multiply(&p(&[1]), &p(&[1])), sum("2 + 1,1"));
        assert_eq!(multiply(&p(&[2, 1]), &p(&[1])), sum("3,1 + 2,2 + 2,1,1"));
        assert_eq!(multiply(&p(&[2, 1]), &p(&[2, 1])).coeff(&p(&[3, 2, 1])), Rational::from(2));
        assert_eq!(multiply(&Partition::empty(), &p(&[3])), sum("3"));
    }

    #[test]
    fn bosonic_examples() {
        assert_eq!(rho(2, &sum("2")), sum("0"));
        assert_eq!(rho(2, &sum("1,1")), sum("-1*0"));
        assert!(rho(2, &sum("2,1")).is_zero());
        assert_eq!(power_sum(1), sum("1"));
        assert_eq!(power_sum(2), sum("2 + -1*1,1"));
        assert_eq!(power_sum(3), sum("3 + -1*2,1 + 1,1,1"));
        for lam in crate::young::partitions_up_to(6) {
            for k in 1..=6 {
                assert_eq!(rho(k, &diag(&lam)), rho_border_strip(k, &diag(&lam)), "{lam} {k}");
            }
        }
    }

    #[test]
    fn characters() {
        let cv = character(&p(&[2]), &p(&[1, 1])).unwrap();
        assert_eq!((cv.chi, cv.z), (BigInt::from(1), BigInt::from(2)));
        let cv = character(&p(&[1, 1]), &p(&[2])).unwrap();
        assert_eq!((cv.chi, cv.z), (BigInt::from(-1), BigInt::from(2)));
        let cv = character(&p(&[2, 1]), &p(&[3])).unwrap();
        assert_eq!((cv.chi, cv.z), (BigInt::from(-1), BigInt::from(3)));
        assert!(matches!(character(&p(&[2]), &p(&[1])), Err(Error::SizeMismatch(..))));
        // column orthogonality at n = 5
        for mu in partitions_of(5) {
            let total: BigInt = partitions_of(5)
                .iter()
                .map(|l| {
                    let c = character(l, &mu).unwrap().chi;
                    &c * &c
                })
                .sum();
            assert_eq!(total, z_mu(&mu));
        }
    }

    #[test]
    fn xi_lambda_examples() {
        assert_eq!(xi_lambda(&p(&[2]), &sum("2")), sum("0"));
        assert!(xi_lambda(&p(&[2]), &sum("1,1")).is_zero());
        assert_eq!(xi_lambda(&p(&[1, 1]), &sum("1,1")), sum("0"));
        assert_eq!(xi_lambda(&Partition::empty(), &sum("3,1")), sum("3,1"));
    }

    #[test]
    fn determinantal_identities() {
        for lam in [p(&[2, 1]), p(&[3, 2]), p(&[1]), p(&[2, 2, 1])] {
            assert_eq!(jacobi_trudi_h(&lam), diag(&lam));
            assert_eq!(jacobi_trudi_e(&lam), diag(&lam));
            assert_eq!(giambelli(&lam), diag(&lam));
        }
        assert_eq!(jacobi_trudi_h(&Partition::empty()), sum("0"));
    }

    #[test]
    fn leibniz_space_small() {
        for d in 2..=4 {
            let space = leibniz_operator_space(d);
            assert_eq!(space.dimension, 2, "d = {d}");
            assert!(space.spans_xi_nabla);
        }
    }
}
