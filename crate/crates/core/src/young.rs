//! Young diagrams and their local combinatorics.
//!
//! Rows and columns are 1-based with row 1 on top, so the box `(i, j)` has
//! content `j - i`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::ParseError;
use crate::exact::BasisKey;

/// A partition: weakly decreasing positive parts. The empty partition is the
/// unit of the ring of diagrams.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, sorting the parts and dropping zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: u32) -> Self {
        Partition::new(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    /// The hook `(arm + 1, 1^leg)`.
    pub fn hook(arm: u32, leg: u32) -> Self {
        let mut v = vec![arm + 1];
        v.extend(std::iter::repeat_n(1, leg as usize));
        Partition(v)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (1-based); zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Whether box `(i, j)` (1-based) lies in the diagram.
    pub fn has_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.part(i) as usize >= j
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// Whether `other` fits inside `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length()
            && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Boxes `(b, λ - b)` whose removal leaves a partition, ordered by row.
    pub fn removable_corners(&self) -> Vec<(Cell, Partition)> {
        let n = self.0.len();
        (0..n)
            .filter(|&i| i + 1 == n || self.0[i] > self.0[i + 1])
            .map(|i| {
                let mut parts = self.0.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                (Cell::new(i + 1, self.0[i] as usize), Partition(parts))
            })
            .collect()
    }

    /// Boxes `(b, λ + b)` whose addition yields a partition, ordered by row.
    pub fn addable_corners(&self) -> Vec<(Cell, Partition)> {
        let n = self.0.len();
        (0..=n)
            .filter(|&i| i == 0 || self.0[i - 1] > self.part(i + 1))
            .map(|i| {
                let mut parts = self.0.clone();
                if i == n {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                (Cell::new(i + 1, parts[i] as usize), Partition(parts))
            })
            .collect()
    }

    /// Hook length of the box `(i, j)`.
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let arm = self.part(i) as usize - j;
        let leg = (i + 1..=self.length()).take_while(|&r| self.part(r) as usize >= j).count();
        arm + leg + 1
    }

    /// Rim box with content `c`: the box on that diagonal with no box to its
    /// lower right.
    fn rim_cell(&self, c: i64) -> Option<Cell> {
        // On diagonal c the boxes are (i, i + c); the rim box is the last one.
        let start = if c >= 0 { 1 } else { (1 - c) as usize };
        let mut last = None;
        let mut i = start;
        while self.has_cell(i, (i as i64 + c) as usize) {
            last = Some(Cell::new(i, (i as i64 + c) as usize));
            i += 1;
        }
        last
    }

    /// Frobenius coordinates `(a_1 > ... > a_d | b_1 > ... > b_d)` with
    /// `a_i = λ_i - i` and `b_i = λ'_i - i`.
    pub fn frobenius(&self) -> (Vec<u32>, Vec<u32>) {
        let conj = self.conjugate();
        let d = (1..=self.length()).take_while(|&i| self.part(i) as usize >= i).count();
        (
            (1..=d).map(|i| self.part(i) - i as u32).collect(),
            (1..=d).map(|i| conj.part(i) - i as u32).collect(),
        )
    }
}

impl BasisKey for Partition {
    const BASIS: &'static str = "partition";

    fn degree(&self) -> usize {
        self.size()
    }
}

/// Size first, then lexicographic on the (weakly decreasing) part list.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn lex_compare(a: &Partition, b: &Partition) -> Ordering {
    a.cmp(b)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = ParseError;

    /// Accepts `"4,3,1"`; `"0"` or the empty string is the empty partition.
    /// Parts must be weakly decreasing; zero parts are only allowed as the
    /// single `"0"`.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let t = s.trim();
        let t = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(t);
        if t.is_empty() || t == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let mut offset = 0;
        for piece in t.split(',') {
            let v: u32 = piece
                .trim()
                .parse()
                .map_err(|_| ParseError::new(format!("invalid part '{}'", piece.trim()), offset))?;
            if v == 0 {
                return Err(ParseError::new("zero part", offset));
            }
            if parts.last().is_some_and(|&prev| prev < v) {
                return Err(ParseError::new("parts must be weakly decreasing", offset));
            }
            parts.push(v);
            offset += piece.len() + 1;
        }
        Ok(Partition(parts))
    }
}

/// A box of a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// A connected skew shape `λ / μ` without 2×2 blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderStrip {
    pub outer: Partition,
    pub inner: Partition,
    pub cells: Vec<Cell>,
    pub height: usize,
}

impl BorderStrip {
    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// `(-1)^(ht - 1)`.
    pub fn sign(&self) -> i64 {
        if self.height % 2 == 1 {
            1
        } else {
            -1
        }
    }
}

/// All border strips of size `k` removable from `λ`.
///
/// The rim of `λ` has exactly one box per content in `[1 - ℓ(λ), λ_1 - 1]`; a
/// removable strip is a contiguous content window of the rim whose top end has
/// no box to its right and whose bottom end has no box below it.
pub fn border_strips(lambda: &Partition, k: usize) -> Vec<BorderStrip> {
    assert!(k >= 1, "border strips have at least one box");
    if lambda.is_empty() {
        return Vec::new();
    }
    let lo = 1 - lambda.length() as i64;
    let hi = lambda.part(1) as i64 - 1;
    let mut out = Vec::new();
    let mut a = lo;
    while a + k as i64 - 1 <= hi {
        let b = a + k as i64 - 1;
        let bottom = lambda.rim_cell(a).expect("rim is contiguous");
        let top = lambda.rim_cell(b).expect("rim is contiguous");
        if !lambda.has_cell(top.row, top.col + 1) && !lambda.has_cell(bottom.row + 1, bottom.col) {
            let cells: Vec<Cell> = (a..=b).map(|c| lambda.rim_cell(c).unwrap()).collect();
            let mut parts = lambda.0.clone();
            for c in &cells {
                parts[c.row - 1] -= 1;
            }
            let mut rows: Vec<usize> = cells.iter().map(|c| c.row).collect();
            rows.dedup();
            out.push(BorderStrip {
                outer: lambda.clone(),
                inner: Partition::new(parts),
                height: rows.len(),
                cells,
            });
        }
        a += 1;
    }
    out
}

/// `(μ, ht)` for every border strip `λ / μ` of size `k`.
pub fn border_strips_removable(lambda: &Partition, k: usize) -> Vec<(Partition, usize)> {
    border_strips(lambda, k).into_iter().map(|s| (s.inner, s.height)).collect()
}

/// Number of standard Young tableaux of shape `λ`, by the hook length formula.
pub fn hook_syt_count(lambda: &Partition) -> BigUint {
    let mut num = BigUint::one();
    for i in 2..=lambda.size() {
        num *= i;
    }
    let mut den = BigUint::one();
    for c in lambda.cells() {
        den *= lambda.hook_length(c.row, c.col);
    }
    num / den
}

/// All partitions of `n`, in ascending canonical order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n as u32, n as u32, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All partitions of size at most `n`.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// Partitions fitting in a box with `rows` rows and `cols` columns.
pub fn partitions_in_box(rows: usize, cols: u32) -> Vec<Partition> {
    fn go(rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()));
        if rows == 0 {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            go(rows - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Complement of `λ` in the `rows × cols` rectangle, rotated by a half turn.
pub fn rotated_complement(lambda: &Partition, rows: usize, cols: u32) -> Partition {
    assert!(lambda.length() <= rows && lambda.part(1) <= cols, "{lambda:?} exceeds the box");
    Partition::new((1..=rows).map(|i| cols - lambda.part(rows + 1 - i)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn removable_corners_of_431() {
        let rc = p(&[4, 3, 1]).removable_corners();
        assert_eq!(
            rc,
            vec![
                (Cell::new(1, 4), p(&[3, 3, 1])),
                (Cell::new(2, 3), p(&[4, 2, 1])),
                (Cell::new(3, 1), p(&[4, 3])),
            ]
        );
        let contents: Vec<i64> = rc.iter().map(|(c, _)| c.content()).collect();
        assert_eq!(contents, vec![3, 1, -2]);
        assert!(Partition::empty().removable_corners().is_empty());
        assert_eq!(p(&[1]).removable_corners(), vec![(Cell::new(1, 1), Partition::empty())]);
    }

    #[test]
    fn addable_corners_examples() {
        assert_eq!(Partition::empty().addable_corners(), vec![(Cell::new(1, 1), p(&[1]))]);
        let cells: Vec<Cell> = p(&[2, 1]).addable_corners().into_iter().map(|(c, _)| c).collect();
        assert_eq!(cells, vec![Cell::new(1, 3), Cell::new(2, 2), Cell::new(3, 1)]);
        let cells: Vec<Cell> = p(&[2, 2]).addable_corners().into_iter().map(|(c, _)| c).collect();
        assert_eq!(cells, vec![Cell::new(1, 3), Cell::new(3, 1)]);
    }

    #[test]
    fn border_strip_examples() {
        assert_eq!(border_strips_removable(&p(&[2]), 2), vec![(Partition::empty(), 1)]);
        assert_eq!(border_strips_removable(&p(&[1, 1]), 2), vec![(Partition::empty(), 2)]);
        assert!(border_strips_removable(&p(&[2, 1]), 2).is_empty());
        assert_eq!(border_strips_removable(&p(&[2, 1]), 3), vec![(Partition::empty(), 2)]);
    }

    #[test]
    fn hook_counts() {
        assert_eq!(hook_syt_count(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(hook_syt_count(&p(&[2, 2])), BigUint::from(2u32));
        assert_eq!(hook_syt_count(&p(&[7])), BigUint::from(1u32));
        assert_eq!(hook_syt_count(&Partition::empty()), BigUint::from(1u32));
        assert_eq!(hook_syt_count(&p(&[3, 2, 1])), BigUint::from(16u32));
    }

    #[test]
    fn conjugate_order_contains() {
        assert_eq!(p(&[4, 3, 1]).conjugate(), p(&[3, 2, 2, 1]));
        assert_eq!(lex_compare(&p(&[3]), &p(&[2, 1])), Ordering::Greater);
        assert!(p(&[4, 3, 1]).contains(&p(&[2, 2])));
        assert!(!p(&[4, 3, 1]).contains(&p(&[2, 2, 2])));
        assert_eq!(lex_compare(&p(&[1, 1, 1, 1]), &p(&[3])), Ordering::Greater);
    }

    #[test]
    fn string_form() {
        assert_eq!(p(&[4, 3, 1]).to_string(), "4,3,1");
        assert_eq!(Partition::empty().to_string(), "0");
        assert_eq!("4,3,1".parse::<Partition>().unwrap(), p(&[4, 3, 1]));
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn frobenius_coordinates() {
        assert_eq!(p(&[4, 3, 1]).frobenius(), (vec![3, 1], vec![2, 0]));
        assert_eq!(p(&[1]).frobenius(), (vec![0], vec![0]));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions_in_box(3, 3).len(), 20);
        assert_eq!(rotated_complement(&p(&[2, 1]), 3, 3), p(&[3, 2, 1]));
        assert_eq!(rotated_complement(&p(&[3, 1]), 3, 3), p(&[3, 2]));
    }

    #[test]
    fn conjugation_is_involutive() {
        for lam in partitions_up_to(12) {
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }

    #[test]
    fn corners_are_mutually_inverse() {
        for lam in partitions_up_to(9) {
            for (b, smaller) in lam.removable_corners() {
                assert!(smaller.addable_corners().contains(&(b, lam.clone())));
            }
        }
    }

    /// Brute force: every μ ⊂ λ of the right size whose skew shape is
    /// edge-connected with no 2×2 block.
    fn brute_strips(lam: &Partition, k: usize) -> Vec<(Partition, usize)> {
        let mut out = Vec::new();
        if lam.size() < k {
            return out;
        }
        for mu in partitions_of(lam.size() - k) {
            if !lam.contains(&mu) {
                continue;
            }
            let cells: Vec<Cell> = lam.cells().filter(|c| !mu.has_cell(c.row, c.col)).collect();
            let inside = |r: usize, c: usize| cells.contains(&Cell::new(r, c));
            let square = cells.iter().any(|c| {
                inside(c.row + 1, c.col) && inside(c.row, c.col + 1) && inside(c.row + 1, c.col + 1)
            });
            let mut seen = vec![cells[0]];
            let mut stack = vec![cells[0]];
            while let Some(c) = stack.pop() {
                for n in &cells {
                    let adj = (n.row == c.row && n.col.abs_diff(c.col) == 1)
                        || (n.col == c.col && n.row.abs_diff(c.row) == 1);
                    if adj && !seen.contains(n) {
                        seen.push(*n);
                        stack.push(*n);
                    }
                }
            }
            if !square && seen.len() == cells.len() {
                let mut rows: Vec<usize> = cells.iter().map(|c| c.row).collect();
                rows.sort();
                rows.dedup();
                out.push((mu, rows.len()));
            }
        }
        out.sort();
        out
    }

    #[test]
    fn border_strips_match_brute_force() {
        for lam in partitions_up_to(9) {
            for k in 1..=lam.size().max(1) {
                let mut fast = border_strips_removable(&lam, k);
                fast.sort();
                assert_eq!(fast, brute_strips(&lam, k), "λ={lam:?} k={k}");
            }
        }
    }

    #[test]
    fn border_strips_are_structurally_valid() {
        for lam in partitions_up_to(10) {
            for k in 1..=lam.size() {
                for s in border_strips(&lam, k) {
                    let mut contents: Vec<i64> = s.cells.iter().map(Cell::content).collect();
                    contents.sort();
                    assert!(contents.windows(2).all(|w| w[1] == w[0] + 1));
                    assert!(!s.cells.iter().any(|c| {
                        s.cells.contains(&Cell::new(c.row + 1, c.col))
                            && s.cells.contains(&Cell::new(c.row, c.col + 1))
                            && s.cells.contains(&Cell::new(c.row + 1, c.col + 1))
                    }));
                    assert_eq!(s.inner.size() + k, lam.size());
                }
            }
        }
    }

    #[test]
    fn syt_branching_recursion() {
        for lam in partitions_up_to(10) {
            if lam.is_empty() {
                continue;
            }
            let sum: BigUint = lam.removable_corners().iter().map(|(_, m)| hook_syt_count(m)).sum();
            assert_eq!(sum, hook_syt_count(&lam), "{lam:?}");
        }
    }
}
