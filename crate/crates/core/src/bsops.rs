//! ξ, ∇, ρ^(k) and ξ^λ on the back-stable Schubert basis.
//!
//! On `𝔖_w` the operator ξ sums `𝔖_{s_k w}` over the left descents `k` of `w`,
//! and ∇ weights the same terms by `k`.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{FormalSum, Rational};
use crate::memo::Memo;
use crate::perm::{reduced_word_count, reduced_words, PermutationZ, SchubElement};
use crate::young::{partitions_of, Partition};
use crate::yops::{character, DiagElement};

fn schub(w: &PermutationZ) -> SchubElement {
    FormalSum::basis(w.clone())
}

pub fn xi_perm(x: &SchubElement) -> SchubElement {
    x.map(|w| {
        FormalSum::from_terms(w.left_descents().into_iter().map(|k| (w.left_s(k).0, Rational::one())))
    })
}

pub fn nabla_perm(x: &SchubElement) -> SchubElement {
    x.map(|w| {
        FormalSum::from_terms(w.left_descents().into_iter().map(|k| (w.left_s(k).0, Rational::from(k))))
    })
}

fn rho_memo() -> &'static Memo<(usize, PermutationZ), SchubElement> {
    static M: OnceLock<Memo<(usize, PermutationZ), SchubElement>> = OnceLock::new();
    M.get_or_init(Memo::new)
}

fn rho_basis(k: usize, w: &PermutationZ) -> SchubElement {
    if k == 1 {
        return xi_perm(&schub(w));
    }
    if w.length() < k {
        return FormalSum::zero();
    }
    let key = (k, w.clone());
    if let Some(v) = rho_memo().get(&key) {
        return v;
    }
    let prev = |x: &SchubElement| x.map(|u| rho_basis(k - 1, u));
    let x = schub(w);
    let mut out = prev(&nabla_perm(&x));
    out -= &nabla_perm(&prev(&x));
    let out = out.scale(&Rational::new(1, k as i64 - 1));
    rho_memo().insert(key, out)
}

/// `ρ^(k)` by the commutator recursion from ξ and ∇.
pub fn rho_perm(k: usize, x: &SchubElement) -> SchubElement {
    assert!(k >= 1, "ρ^(k) needs k ≥ 1");
    x.map(|w| rho_basis(k, w))
}

/// Peak position (1-based) of a word `b_1 < ⋯ < b_i > ⋯ > b_k` in which every
/// integer of `(min(b_1, b_k), b_i]` occurs.
fn unimodal_peak(b: &[i64]) -> Option<usize> {
    let peak = (0..b.len()).max_by_key(|&i| b[i])?;
    let rising = b[..=peak].windows(2).all(|p| p[0] < p[1]);
    let falling = b[peak..].windows(2).all(|p| p[0] > p[1]);
    let letters: BTreeSet<i64> = b.iter().copied().collect();
    let lo = b[0].min(b[b.len() - 1]);
    let covered = (lo + 1..=b[peak]).all(|x| letters.contains(&x));
    (rising && falling && covered).then_some(peak + 1)
}

/// `ρ^(k) 𝔖_w` by the direct formula: a signed sum over `g` with
/// `ℓ(g w) = ℓ(w) - k` that admit a reduced word as in [`unimodal_peak`],
/// with sign `(-1)^{k-i}`.
///
/// Each `g` contributes once; if two admissible words disagree on the sign the
/// call fails.
pub fn rho_perm_direct(k: usize, w: &PermutationZ) -> Result<SchubElement> {
    assert!(k >= 1, "ρ^(k) needs k ≥ 1");
    let mut layer: BTreeSet<PermutationZ> = BTreeSet::from([w.clone()]);
    for _ in 0..k {
        layer = layer
            .iter()
            .flat_map(|v| v.left_descents().into_iter().map(move |j| v.left_s(j).0))
            .collect();
    }
    let w_inv = w.inverse();
    let mut out = FormalSum::zero();
    for v in layer {
        let g = v.compose(&w_inv);
        let mut sign = None;
        for word in reduced_words(&g) {
            if let Some(i) = unimodal_peak(&word) {
                let s = if (k - i).is_multiple_of(2) { 1 } else { -1 };
                if sign.is_some_and(|t| t != s) {
                    return Err(Error::InternalInconsistency(format!(
                        "unimodal words of {g} give opposite signs"
                    )));
                }
                sign = Some(s);
            }
        }
        if let Some(s) = sign {
            out.add_term(v, Rational::from(s));
        }
    }
    Ok(out)
}

/// `ρ^{μ_1} ∘ ρ^{μ_2} ∘ ⋯` on the Schubert basis.
pub fn rho_perm_composite(mu: &Partition, x: &SchubElement) -> SchubElement {
    mu.parts().iter().rev().fold(x.clone(), |acc, &k| rho_perm(k as usize, &acc))
}

/// `ξ^ν = Σ_μ (χ^ν_μ / z_μ) ρ^{μ_1} ∘ ρ^{μ_2} ∘ ⋯` on the Schubert basis.
pub fn xi_lambda_perm(nu: &Partition, x: &SchubElement) -> SchubElement {
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
        out.add_scaled(&c, &rho_perm_composite(&mu, x));
    }
    out
}

/// Schur expansion `Σ_λ a_{λ,w} λ` of the Stanley symmetric function of `w`,
/// where `a_{λ,w}` is the constant term of `ξ^λ 𝔖_w`.
pub fn stanley_coeffs(w: &PermutationZ) -> DiagElement {
    let n = w.length();
    let id = PermutationZ::identity();
    let x = schub(w);
    let shapes = partitions_of(n);
    let constants: Vec<(Partition, Rational)> = shapes
        .iter()
        .map(|mu| (mu.clone(), rho_perm_composite(mu, &x).coeff(&id)))
        .collect();
    let mut out = FormalSum::zero();
    for lam in &shapes {
        let mut a = Rational::zero();
        for (mu, c) in &constants {
            if c.is_zero() {
                continue;
            }
            let cv = character(lam, mu).expect("sizes agree");
            a += &(Rational::from(cv.chi) * c / Rational::from(cv.z));
        }
        out.add_term(lam.clone(), a);
    }
    out
}

fn binomial(n: usize, k: usize) -> BigUint {
    let mut out = BigUint::from(1u32);
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// Checks `C(ℓ(u)+ℓ(v), ℓ(v)) |R(u)| |R(v)| = Σ_w c^w |R(w)|` for a product
/// `𝔖_u 𝔖_v = Σ_w c^w 𝔖_w`.
pub fn reduced_word_identity_check(u: &PermutationZ, v: &PermutationZ, product: &SchubElement) -> bool {
    let (lhs, rhs) = reduced_word_identity_sides(u, v, product);
    lhs == rhs
}

/// Both sides of the reduced-word counting identity.
pub fn reduced_word_identity_sides(
    u: &PermutationZ,
    v: &PermutationZ,
    product: &SchubElement,
) -> (Rational, Rational) {
    let lhs = binomial(u.length() + v.length(), v.length())
        * reduced_word_count(u)
        * reduced_word_count(v);
    let mut rhs = Rational::zero();
    for (w, c) in product.iter() {
        rhs += &(c * &Rational::from(num_bigint::BigInt::from(reduced_word_count(w))));
    }
    (Rational::from(num_bigint::BigInt::from(lhs)), rhs)
}

/// Empties the ρ memo table.
pub fn clear_caches() {
    rho_memo().clear();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{grass_decode, grass_encode, permutations_of_window, GrassCode};
    use crate::yops;

    fn w(s: &str) -> PermutationZ {
        s.parse().unwrap()
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn xi_nabla_examples() {
        let s2 = schub(&w("0,1,3,2,4@0"));
        let id = schub(&PermutationZ::identity());
        assert_eq!(xi_perm(&s2), id);
        assert_eq!(nabla_perm(&s2), id.scale(&Rational::from(2)));
        assert_eq!(xi_perm(&schub(&w("0,2,3,1,4@0"))), schub(&w("0,1,3,2,4@0")));
        assert!(xi_perm(&id).is_zero());
        assert!(nabla_perm(&id).is_zero());
    }

    #[test]
    fn grassmannian_operators_match_diagrams() {
        for lam in crate::young::partitions_up_to(6) {
            for k in -3..=3 {
                let u = grass_encode(&GrassCode::new(k, lam.clone()));
                let expected_xi = yops::xi(&FormalSum::basis(lam.clone()));
                let expected_nabla = yops::nabla_shifted(&FormalSum::basis(lam.clone()), k);
                let enc = |x: &DiagElement| x.map_keys(|m| grass_encode(&GrassCode::new(k, m.clone())));
                assert_eq!(xi_perm(&schub(&u)), enc(&expected_xi), "{lam} {k}");
                assert_eq!(nabla_perm(&schub(&u)), enc(&expected_nabla), "{lam} {k}");
            }
        }
    }

    #[test]
    fn rho_examples() {
        let u = grass_encode(&GrassCode::new(0, p(&[2])));
        assert_eq!(rho_perm(2, &schub(&u)), schub(&PermutationZ::identity()));
        let x = schub(&w("3,1,4,2@1"));
        assert_eq!(rho_perm(1, &x), xi_perm(&x));
        assert!(rho_perm(4, &x).is_zero());
        assert_eq!(grass_decode(&u).unwrap().shape, p(&[2]));
    }

    #[test]
    fn direct_formula_small() {
        for u in permutations_of_window(0, 4) {
            for k in 1..=4 {
                assert_eq!(rho_perm_direct(k, &u).unwrap(), rho_perm(k, &schub(&u)), "{u} k={k}");
            }
        }
    }

    #[test]
    fn stanley_examples() {
        assert_eq!(stanley_coeffs(&w("2,1,4,3@1")), DiagElement::parse_text("2 + 1,1").unwrap());
        assert_eq!(stanley_coeffs(&w("2,1@1")), DiagElement::parse_text("1").unwrap());
        assert_eq!(stanley_coeffs(&w("3,2,1@1")), DiagElement::parse_text("2,1").unwrap());
    }

    #[test]
    fn reduced_word_identity_examples() {
        let s1 = w("2,1@1");
        let monk = SchubElement::parse_text("3,1,2@1 + 1,2,0@0").unwrap();
        assert!(reduced_word_identity_check(&s1, &s1, &monk));
        let v = w("3,1,2@1");
        assert!(reduced_word_identity_check(&PermutationZ::identity(), &v, &schub(&v)));
        assert!(!reduced_word_identity_check(&s1, &s1, &schub(&v)));
    }
}
