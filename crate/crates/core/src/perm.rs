//! Finite-support permutations of ℤ.
//!
//! A [`PermutationZ`] is stored as a window `a..=b` together with the images
//! `w(a), ..., w(b)`; every point outside the window is fixed. The canonical
//! form trims fixed points from both ends of the window, so the identity has an
//! empty word (and window start 0).
//!
//! Products follow function composition: `s_{h_1} ⋯ s_{h_l}` is the map
//! `i ↦ s_{h_1}(⋯ s_{h_l}(i))`, and the one-line notation lists `w(a), w(a+1), …`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, ParseError, Result};
use crate::exact::{BasisKey, FormalSum};
use crate::young::Partition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationZ {
    start: i64,
    word: Vec<i64>,
}

/// Formal sums in the back-stable Schubert basis.
pub type SchubElement = FormalSum<PermutationZ>;

impl PermutationZ {
    pub fn identity() -> Self {
        PermutationZ { start: 0, word: Vec::new() }
    }

    /// The simple transposition `s_k = (k, k+1)`.
    pub fn simple(k: i64) -> Self {
        PermutationZ { start: k, word: vec![k + 1, k] }
    }

    /// Builds a permutation from the images of `start, start+1, ...`.
    pub fn from_window(start: i64, word: Vec<i64>) -> Result<Self> {
        let n = word.len() as i64;
        let mut seen = vec![false; word.len()];
        for &v in &word {
            let idx = v - start;
            if idx < 0 || idx >= n || seen[idx as usize] {
                return Err(Error::MalformedWord(format!(
                    "{:?}@{start} is not a permutation of {start}..={}",
                    word,
                    start + n - 1
                )));
            }
            seen[idx as usize] = true;
        }
        Ok(Self::canonical(start, word))
    }

    fn canonical(mut start: i64, mut word: Vec<i64>) -> Self {
        let lead = word.iter().enumerate().take_while(|&(i, &v)| v == start + i as i64).count();
        word.drain(..lead);
        start += lead as i64;
        while let Some(&last) = word.last() {
            if last == start + word.len() as i64 - 1 {
                word.pop();
            } else {
                break;
            }
        }
        if word.is_empty() {
            return Self::identity();
        }
        PermutationZ { start, word }
    }

    /// Product `s_{h_1} s_{h_2} ⋯ s_{h_l}`.
    pub fn from_word(letters: &[i64]) -> Self {
        letters
            .iter()
            .rev()
            .fold(Self::identity(), |acc, &k| acc.left_s(k).0)
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// First position of the canonical window.
    pub fn window_start(&self) -> i64 {
        self.start
    }

    /// Last position of the canonical window (`start - 1` for the identity).
    pub fn window_end(&self) -> i64 {
        self.start + self.word.len() as i64 - 1
    }

    pub fn word(&self) -> &[i64] {
        &self.word
    }

    /// `w(i)`.
    pub fn apply(&self, i: i64) -> i64 {
        let idx = i - self.start;
        if idx >= 0 && (idx as usize) < self.word.len() {
            self.word[idx as usize]
        } else {
            i
        }
    }

    /// `w^{-1}(v)`, the position of value `v`.
    pub fn position(&self, v: i64) -> i64 {
        let idx = v - self.start;
        if idx >= 0 && (idx as usize) < self.word.len() {
            self.start + self.word.iter().position(|&x| x == v).unwrap() as i64
        } else {
            v
        }
    }

    /// Images of `lo..=hi`; the range must cover the window.
    pub fn images(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).map(|i| self.apply(i)).collect()
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.word;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
            .sum()
    }

    /// Right descents `{i : w(i) > w(i+1)}`, ascending.
    pub fn descents(&self) -> Vec<i64> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] > p[1])
            .map(|(i, _)| self.start + i as i64)
            .collect()
    }

    pub fn has_descent(&self, i: i64) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    /// Left descents: `k` with `ℓ(s_k w) < ℓ(w)`, i.e. `k+1` appears before `k`.
    pub fn left_descents(&self) -> Vec<i64> {
        if self.is_identity() {
            return Vec::new();
        }
        (self.start..self.window_end())
            .filter(|&k| self.position(k) > self.position(k + 1))
            .collect()
    }

    /// `s_k w` (swap the values `k` and `k+1`) and the change in length.
    pub fn left_s(&self, k: i64) -> (Self, i32) {
        let lo = self.start.min(k);
        let hi = self.window_end().max(k + 1);
        let delta = if self.position(k) > self.position(k + 1) { -1 } else { 1 };
        let word = self
            .images(lo, hi)
            .into_iter()
            .map(|v| if v == k { k + 1 } else if v == k + 1 { k } else { v })
            .collect();
        (Self::canonical(lo, word), delta)
    }

    /// `w s_k` (swap the positions `k` and `k+1`) and the change in length.
    pub fn right_s(&self, k: i64) -> (Self, i32) {
        let lo = self.start.min(k);
        let hi = self.window_end().max(k + 1);
        let delta = if self.has_descent(k) { -1 } else { 1 };
        let mut word = self.images(lo, hi);
        let i = (k - lo) as usize;
        word.swap(i, i + 1);
        (Self::canonical(lo, word), delta)
    }

    /// `τ^n w`, where `τw(i+1) = w(i) + 1`.
    pub fn shift_tau(&self, n: i64) -> Self {
        if self.is_identity() {
            return Self::identity();
        }
        PermutationZ {
            start: self.start + n,
            word: self.word.iter().map(|&v| v + n).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        if self.is_identity() {
            return Self::identity();
        }
        let mut word = vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[(v - self.start) as usize] = self.start + i as i64;
        }
        PermutationZ { start: self.start, word }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        if self.is_identity() {
            return other.clone();
        }
        if other.is_identity() {
            return self.clone();
        }
        let lo = self.start.min(other.start);
        let hi = self.window_end().max(other.window_end());
        let word = (lo..=hi).map(|i| self.apply(other.apply(i))).collect();
        Self::canonical(lo, word)
    }

    /// Lehmer code `d_i = #{j > i : w(j) < w(i)}` over the window, returned
    /// with the window start.
    pub fn lehmer_code(&self) -> (i64, Vec<usize>) {
        let w = &self.word;
        (
            self.start,
            (0..w.len()).map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count()).collect(),
        )
    }

    /// The permutation whose Lehmer code starts at position `start` with the
    /// given entries and vanishes elsewhere.
    pub fn from_lehmer_code(start: i64, code: &[usize]) -> Self {
        let n = code
            .iter()
            .enumerate()
            .map(|(i, &c)| i + c + 1)
            .max()
            .unwrap_or(0);
        let mut avail: Vec<i64> = (0..n as i64).map(|i| start + i).collect();
        let mut word = Vec::with_capacity(n);
        for i in 0..n {
            let c = code.get(i).copied().unwrap_or(0);
            word.push(avail.remove(c));
        }
        Self::canonical(start, word)
    }

    /// Whether the permutation fixes every `i ≤ 0`.
    pub fn is_positive(&self) -> bool {
        self.is_identity() || self.start >= 1
    }

    /// Shifts the permutation by the smallest `τ^n` that makes it fix `i ≤ 0`.
    pub fn positive_shift(&self) -> i64 {
        if self.is_positive() {
            0
        } else {
            1 - self.start
        }
    }
}

impl BasisKey for PermutationZ {
    const BASIS: &'static str = "permutation";

    fn degree(&self) -> usize {
        self.length()
    }
}

impl fmt::Display for PermutationZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.word.iter().map(i64::to_string).collect();
        write!(f, "{}@{}", strs.join(","), self.start)
    }
}

impl fmt::Debug for PermutationZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for PermutationZ {
    type Err = ParseError;

    /// `"c1,...,cn@a"`; the `@a` suffix defaults to `@1`. An empty word (or
    /// `"id"`) is the identity.
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        parse_perm(s).map_err(|e| match e {
            Error::Parse(p) => p,
            other => ParseError::new(other.to_string(), 0),
        })
    }
}

pub fn parse_perm(s: &str) -> Result<PermutationZ> {
    let t = s.trim();
    if t == "id" {
        return Ok(PermutationZ::identity());
    }
    let (body, start) = match t.rsplit_once('@') {
        Some((b, a)) => {
            let a: i64 = a
                .trim()
                .parse()
                .map_err(|_| ParseError::new(format!("invalid window start '{a}'"), b.len() + 1))?;
            (b.trim(), a)
        }
        None => (t, 1),
    };
    if body.is_empty() {
        return Ok(PermutationZ::identity());
    }
    let mut word = Vec::new();
    let mut offset = 0;
    for piece in body.split(',') {
        let v: i64 = piece
            .trim()
            .parse()
            .map_err(|_| ParseError::new(format!("invalid entry '{}'", piece.trim()), offset))?;
        word.push(v);
        offset += piece.len() + 1;
    }
    PermutationZ::from_window(start, word)
}

/// All reduced words of `w`, built by stripping right descents.
pub fn reduced_words(w: &PermutationZ) -> Vec<Vec<i64>> {
    fn go(w: &PermutationZ, memo: &mut HashMap<PermutationZ, Vec<Vec<i64>>>) -> Vec<Vec<i64>> {
        if w.is_identity() {
            return vec![Vec::new()];
        }
        if let Some(v) = memo.get(w) {
            return v.clone();
        }
        let mut out = Vec::new();
        for j in w.descents() {
            let (shorter, _) = w.right_s(j);
            for mut word in go(&shorter, memo) {
                word.push(j);
                out.push(word);
            }
        }
        out.sort();
        memo.insert(w.clone(), out.clone());
        out
    }
    go(w, &mut HashMap::new())
}

/// `|R(w)|` without materializing the words.
pub fn reduced_word_count(w: &PermutationZ) -> BigUint {
    fn go(w: &PermutationZ, memo: &mut HashMap<PermutationZ, BigUint>) -> BigUint {
        if w.is_identity() {
            return BigUint::one();
        }
        if let Some(v) = memo.get(w) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for j in w.descents() {
            total += go(&w.right_s(j).0, memo);
        }
        memo.insert(w.clone(), total.clone());
        total
    }
    go(w, &mut HashMap::new())
}

/// `∂_i`: `𝔖_w ↦ 𝔖_{w s_i}` when `i` is a descent of `w`, else 0.
pub fn divided_difference(i: i64, x: &SchubElement) -> SchubElement {
    x.map(|w| {
        if w.has_descent(i) {
            FormalSum::basis(w.right_s(i).0)
        } else {
            FormalSum::zero()
        }
    })
}

/// A Grassmannian permutation described by its descent and shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrassCode {
    pub descent: i64,
    pub shape: Partition,
}

impl GrassCode {
    pub fn new(descent: i64, shape: Partition) -> Self {
        GrassCode { descent, shape }
    }
}

/// Reads `λ(u) = (u(k) - k, u(k-1) - k + 1, ...)` off a Grassmannian
/// permutation with descent `k`. The identity decodes to `(0, ∅)`.
pub fn grass_decode(w: &PermutationZ) -> Result<GrassCode> {
    let des = w.descents();
    match des.as_slice() {
        [] => Ok(GrassCode::new(0, Partition::empty())),
        [k] => {
            let k = *k;
            let parts = (0..)
                .map(|i| w.apply(k - i) - (k - i))
                .take_while(|&p| p > 0)
                .map(|p| p as u32)
                .collect();
            Ok(GrassCode::new(k, Partition::new(parts)))
        }
        _ => Err(Error::NotGrassmannian(w.to_string())),
    }
}

/// The Grassmannian permutation with descent at `g.descent` and shape `g.shape`.
pub fn grass_encode(g: &GrassCode) -> PermutationZ {
    let lam = &g.shape;
    if lam.is_empty() {
        return PermutationZ::identity();
    }
    let k = g.descent;
    let len = lam.length() as i64;
    let lo = k - len + 1;
    let hi = k + lam.part(1) as i64;
    let top: BTreeSet<i64> = (1..=len).map(|i| lam.part(i as usize) as i64 + k - i + 1).collect();
    let mut word: Vec<i64> = top.iter().copied().collect();
    word.extend((lo..=hi).filter(|v| !top.contains(v)));
    PermutationZ::from_window(lo, word).expect("grassmannian window is a permutation")
}

/// `𝔖` of the Grassmannian permutation `(0, λ)`, i.e. the Schur function `s_λ`.
pub fn schur_as_schubert(lambda: &Partition) -> PermutationZ {
    grass_encode(&GrassCode::new(0, lambda.clone()))
}

/// Canonical forms of all permutations of the window `start..start+width`.
pub fn permutations_of_window(start: i64, width: usize) -> Vec<PermutationZ> {
    let mut word: Vec<i64> = (0..width as i64).map(|i| start + i).collect();
    let mut out = vec![PermutationZ::canonical(start, word.clone())];
    while next_permutation(&mut word) {
        out.push(PermutationZ::canonical(start, word.clone()));
    }
    out
}

fn next_permutation(a: &mut [i64]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> PermutationZ {
        s.parse().unwrap()
    }

    #[test]
    fn parse_length_descents() {
        assert_eq!(w("3,2,7,1,5,4,6@1").length(), 8);
        assert_eq!(w("2,5,7,1,3,4,6@1").descents(), vec![3]);
        let id = w("");
        assert!(id.is_identity());
        assert_eq!(id.length(), 0);
        assert!(id.descents().is_empty());
        assert_eq!(w("3,2,7,1,5,4,6"), w("3,2,7,1,5,4,6@1"));
        assert!(matches!(parse_perm("1,1@1"), Err(Error::MalformedWord(_))));
        assert!(matches!(parse_perm("0,2@1"), Err(Error::MalformedWord(_))));
        assert!("1,x".parse::<PermutationZ>().is_err());
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(w("1,3,2@1").to_string(), "3,2@2");
        assert_eq!(PermutationZ::identity().to_string(), "@0");
        assert_eq!(w("@0"), PermutationZ::identity());
        assert_eq!(w("0,1,-1@-1").to_string(), "0,1,-1@-1");
    }

    #[test]
    fn simple_reflection_actions() {
        let (id, d) = w("2,1@1").left_s(1);
        assert!(id.is_identity());
        assert_eq!(d, -1);
        assert_eq!(w("2,1@1").shift_tau(1), w("1,3,2@1"));
        assert_eq!(w("2,1@1").shift_tau(1).to_string(), "3,2@2");
        let (v, d) = w("0,2,3,1,4@0").left_s(1);
        assert_eq!(v, w("0,1,3,2,4@0"));
        assert_eq!(d, -1);
        let (v, d) = w("2,1@1").right_s(2);
        assert_eq!(v, w("2,3,1@1"));
        assert_eq!(d, 1);
    }

    #[test]
    fn words_and_codes() {
        let mut rw = reduced_words(&w("3,2,1@1"));
        rw.sort();
        assert_eq!(rw, vec![vec![1, 2, 1], vec![2, 1, 2]]);
        let w8 = w("3,2,7,1,5,4,6@1");
        assert!(reduced_words(&w8).contains(&vec![1, 2, 1, 4, 6, 5, 4, 3]));
        assert_eq!(PermutationZ::from_word(&[1, 2, 1, 4, 6, 5, 4, 3]), w8);
        assert_eq!(reduced_word_count(&w8), BigUint::from(reduced_words(&w8).len()));
        assert_eq!(w("2,1,4,3@1").lehmer_code(), (1, vec![1, 0, 1, 0]));
        let x = FormalSum::basis(w("2,1@1"));
        assert_eq!(divided_difference(1, &x), FormalSum::basis(PermutationZ::identity()));
        assert!(divided_difference(2, &x).is_zero());
    }

    #[test]
    fn grassmannian_codec() {
        let g = grass_decode(&w("2,5,7,1,3,4,6@1")).unwrap();
        assert_eq!(g, GrassCode::new(3, Partition::new(vec![4, 3, 1])));
        assert_eq!(grass_encode(&g), w("2,5,7,1,3,4,6@1"));
        let s0 = grass_encode(&GrassCode::new(0, Partition::new(vec![1])));
        assert_eq!(s0, w("1,0@0"));
        assert_eq!(grass_decode(&PermutationZ::identity()).unwrap(), GrassCode::new(0, Partition::empty()));
        assert!(matches!(grass_decode(&w("2,1,4,3")), Err(Error::NotGrassmannian(_))));
    }

    #[test]
    fn grass_round_trip() {
        for lam in crate::young::partitions_up_to(8) {
            for k in -4..=4 {
                let g = GrassCode::new(k, lam.clone());
                let u = grass_encode(&g);
                let back = grass_decode(&u).unwrap();
                if lam.is_empty() {
                    assert!(u.is_identity());
                } else {
                    assert_eq!(back, g);
                    assert_eq!(u.length(), lam.size());
                    // code at positions ≤ k is λ reversed
                    let (start, code) = u.lehmer_code();
                    let head: Vec<usize> = (start..=k).map(|i| code[(i - start) as usize]).collect();
                    let mut rev: Vec<usize> = lam.parts().iter().map(|&p| p as usize).collect();
                    rev.reverse();
                    let head: Vec<usize> = head.into_iter().skip_while(|&c| c == 0).collect();
                    assert_eq!(head, rev);
                }
            }
        }
    }

    #[test]
    fn lehmer_code_round_trip() {
        for u in permutations_of_window(-2, 5) {
            let (start, code) = u.lehmer_code();
            assert_eq!(PermutationZ::from_lehmer_code(start, &code), u);
        }
    }

    #[test]
    fn window_enumeration() {
        assert_eq!(permutations_of_window(0, 4).len(), 24);
        assert_eq!(permutations_of_window(0, 4).iter().filter(|u| u.is_identity()).count(), 1);
    }
}
