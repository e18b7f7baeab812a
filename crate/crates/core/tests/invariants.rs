//! Exhaustive invariants over small shapes and windows.

use diffschub::bsops;
use diffschub::exact::{FormalSum, Rational};
use diffschub::oracle;
use diffschub::perm::{grass_decode, grass_encode, permutations_of_window, reduced_words, GrassCode, PermutationZ};
use diffschub::young::{border_strips_removable, hook_syt_count, partitions_of, partitions_up_to, Partition};
use diffschub::yops::{self, DiagElement};

fn d(lam: &Partition) -> DiagElement {
    FormalSum::basis(lam.clone())
}

#[test]
fn conjugation_is_an_involution() {
    for lam in partitions_up_to(12) {
        assert_eq!(lam.conjugate().conjugate(), lam);
    }
}

#[test]
fn corners_are_dual() {
    for lam in partitions_up_to(9) {
        for (b, smaller) in lam.removable_corners() {
            assert!(smaller.addable_corners().contains(&(b, lam.clone())), "{lam} {smaller}");
        }
    }
}

#[test]
fn tableau_count_recursion() {
    for lam in partitions_up_to(10).into_iter().filter(|l| !l.is_empty()) {
        let below: num_bigint::BigUint = lam.removable_corners().iter().map(|(_, m)| hook_syt_count(m)).sum();
        assert_eq!(hook_syt_count(&lam), below, "{lam}");
    }
}

#[test]
fn removable_strips_are_ribbons() {
    for lam in partitions_up_to(9) {
        for k in 1..=lam.size() {
            for (inner, _) in border_strips_removable(&lam, k) {
                let cells: Vec<_> = lam.cells().filter(|c| !inner.has_cell(c.row, c.col)).collect();
                let mut contents: Vec<i64> = cells.iter().map(|c| c.content()).collect();
                contents.sort();
                assert!(contents.windows(2).all(|w| w[1] == w[0] + 1), "{lam} / {inner}");
                let has = |r: usize, c: usize| cells.iter().any(|x| x.row == r && x.col == c);
                for c in &cells {
                    assert!(!(has(c.row + 1, c.col) && has(c.row, c.col + 1) && has(c.row + 1, c.col + 1)));
                }
            }
        }
    }
}

#[test]
fn multiplication_satisfies_leibniz() {
    for lam in partitions_up_to(8) {
        for mu in partitions_up_to(8 - lam.size()) {
            let (x, y) = (d(&lam), d(&mu));
            let xy = yops::multiply(&lam, &mu);
            for op in [yops::xi as fn(&DiagElement) -> DiagElement, yops::nabla] {
                let rule = &yops::mul_elements(&op(&x), &y) + &yops::mul_elements(&x, &op(&y));
                assert_eq!(op(&xy), rule, "{lam} · {mu}");
            }
        }
    }
}

#[test]
fn multiplication_is_commutative_and_associative() {
    for a in partitions_up_to(9) {
        for b in partitions_up_to(9 - a.size()) {
            let ab = yops::multiply(&a, &b);
            assert_eq!(ab, yops::multiply(&b, &a));
            for c in partitions_up_to(9 - a.size() - b.size()) {
                let left = yops::mul_elements(&ab, &d(&c));
                let right = yops::mul_elements(&d(&a), &yops::multiply(&b, &c));
                assert_eq!(left, right, "({a} {b}) {c}");
            }
        }
    }
}

#[test]
fn xi_lambda_operators_multiply_like_schur_functions() {
    let diagrams = partitions_up_to(7);
    for nu in partitions_up_to(4).into_iter().filter(|l| !l.is_empty()) {
        for mu in partitions_up_to(7 - nu.size()).into_iter().filter(|l| !l.is_empty()) {
            let n = nu.size() + mu.size();
            let lams: Vec<(Partition, i64)> = partitions_of(n)
                .into_iter()
                .map(|l| {
                    let c = oracle::lr_count(&mu, &nu, &l) as i64;
                    (l, c)
                })
                .filter(|(_, c)| *c != 0)
                .collect();
            for x in diagrams.iter().filter(|x| x.size() >= n) {
                let lhs = yops::xi_lambda(&nu, &yops::xi_lambda(&mu, &d(x)));
                let mut rhs = FormalSum::zero();
                for (l, c) in &lams {
                    rhs.add_scaled(&Rational::from(*c), &yops::xi_lambda(l, &d(x)));
                }
                assert_eq!(lhs, rhs, "ξ^{nu} ξ^{mu} on {x}");
            }
        }
    }
}

#[test]
fn length_matches_reduced_words() {
    for a in [-1, 1] {
        for w in permutations_of_window(a, 6).into_iter().filter(|w| w.length() <= 8) {
            let words = reduced_words(&w);
            assert!(!words.is_empty());
            assert!(words.iter().all(|r| r.len() == w.length() && PermutationZ::from_word(r) == w), "{w}");
        }
    }
}

#[test]
fn grassmannian_codec_round_trips() {
    for lam in partitions_up_to(8) {
        for k in -4..=4 {
            let g = GrassCode::new(k, lam.clone());
            let w = grass_encode(&g);
            if lam.is_empty() {
                assert!(w.is_identity());
                continue;
            }
            assert_eq!(grass_decode(&w).unwrap(), g);
            let (start, code) = w.lehmer_code();
            let mut read: Vec<u32> = code
                .iter()
                .enumerate()
                .filter(|(i, &c)| start + *i as i64 <= k && c > 0)
                .map(|(_, &c)| c as u32)
                .collect();
            read.reverse();
            assert_eq!(read, lam.parts(), "{k} {lam}");
        }
    }
}

#[test]
fn bosonic_schubert_operators_commute() {
    let perms: Vec<PermutationZ> = (-1..=1)
        .flat_map(|a| permutations_of_window(a, 5))
        .filter(|w| w.length() <= 6)
        .collect();
    for w in perms {
        let x = FormalSum::basis(w.clone());
        for j in 1..=w.length() {
            for k in j + 1..=w.length() - j {
                let jk = bsops::rho_perm(j, &bsops::rho_perm(k, &x));
                assert_eq!(jk, bsops::rho_perm(k, &bsops::rho_perm(j, &x)), "{w} {j} {k}");
            }
        }
    }
}

#[test]
fn schubert_polynomials_two_ways() {
    for w in permutations_of_window(1, 5).into_iter().filter(|w| w.length() <= 7) {
        assert_eq!(oracle::schubert_poly(&w, 5), oracle::schubert_poly_pipe_dreams(&w, 5), "{w}");
    }
}

#[test]
fn polynomial_lr_products() {
    for lam in partitions_up_to(5) {
        for mu in partitions_up_to(5) {
            let m = lam.size() + mu.size();
            let prod = oracle::poly_multiply(&oracle::schur_poly(&lam, m), &oracle::schur_poly(&mu, m));
            let got = oracle::ssyt_expand(&prod).unwrap();
            for nu in partitions_of(m) {
                let c = oracle::lr_count(&lam, &mu, &nu) as i64;
                assert_eq!(got.coeff(&nu), Rational::from(c), "{lam} {mu} {nu}");
            }
        }
    }
}
