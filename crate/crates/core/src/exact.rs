//! Exact rational arithmetic and formal linear combinations over an ordered basis.
//!
//! Everything in the crate is built on [`FormalSum`], a finite map from basis
//! keys to nonzero [`Rational`] coefficients. Keys are kept in a `BTreeMap`, so
//! iteration (and therefore every printed or serialized form) follows the key's
//! `Ord` implementation.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::ParseError;

/// An exact rational number, always stored in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let den = den.into();
        assert!(!den.is_zero(), "zero denominator");
        Rational(BigRational::new(num.into(), den))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// The value as an `i64`, if it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let t = s.trim();
        let bad = || ParseError::new(format!("invalid rational '{s}'"), 0);
        match t.split_once('/') {
            None => Ok(Rational::from_integer(t.parse::<BigInt>().map_err(|_| bad())?)),
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(ParseError::new(format!("zero denominator in '{s}'"), 0));
                }
                Ok(Rational::new(p, q))
            }
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

/// A basis key that can live in a [`FormalSum`] and be serialized.
pub trait BasisKey: Ord + Clone + fmt::Display + FromStr<Err = ParseError> {
    /// Name of the basis in the JSON form (`"partition"` or `"permutation"`).
    const BASIS: &'static str;

    /// Grading used to split sums into homogeneous components.
    fn degree(&self) -> usize;
}

/// A finite formal linear combination of basis keys with rational coefficients.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FormalSum<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for FormalSum<K> {
    fn default() -> Self {
        FormalSum { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> FormalSum<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `1·key`.
    pub fn basis(key: K) -> Self {
        Self::term(key, Rational::one())
    }

    pub fn term(key: K, coeff: Rational) -> Self {
        let mut s = Self::zero();
        s.add_term(key, coeff);
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Rational)>>(terms: I) -> Self {
        let mut s = Self::zero();
        for (k, c) in terms {
            s.add_term(k, c);
        }
        s
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

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// The largest key in the canonical order.
    pub fn leading(&self) -> Option<(&K, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), c * v);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FormalSum {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), c * v)).collect(),
        }
    }

    /// Linear extension of `f` to formal sums.
    pub fn map<K2: Ord + Clone, F>(&self, mut f: F) -> FormalSum<K2>
    where
        F: FnMut(&K) -> FormalSum<K2>,
    {
        let mut out = FormalSum::zero();
        for (k, c) in &self.terms {
            out.add_scaled(c, &f(k));
        }
        out
    }

    /// Relabels keys through `f`, merging coefficients of collisions.
    pub fn map_keys<K2: Ord + Clone, F: FnMut(&K) -> K2>(&self, mut f: F) -> FormalSum<K2> {
        FormalSum::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    pub fn filter<F: FnMut(&K) -> bool>(&self, mut keep: F) -> Self {
        FormalSum {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn all_coeffs<F: FnMut(&Rational) -> bool>(&self, pred: F) -> bool {
        self.terms.values().all(pred)
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn is_nonnegative_integral(&self) -> bool {
        self.all_coeffs(|c| c.is_integer() && !c.is_negative())
    }

    /// Panics if any coefficient has a nontrivial denominator.
    pub fn assert_integral(&self)
    where
        K: fmt::Debug,
    {
        for (k, c) in &self.terms {
            assert!(c.is_integer(), "non-integral coefficient {c} at {k:?}");
        }
    }
}

impl<K: BasisKey> FormalSum<K> {
    /// Splits the sum by key degree.
    pub fn homogeneous_components(&self) -> BTreeMap<usize, FormalSum<K>> {
        let mut out: BTreeMap<usize, FormalSum<K>> = BTreeMap::new();
        for (k, c) in &self.terms {
            out.entry(k.degree()).or_default().add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(k, c)| json!({"key": k.to_string(), "coeff": c.to_string()}))
            .collect();
        json!({"basis": K::BASIS, "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self, ParseError> {
        let basis = v.get("basis").and_then(Value::as_str).unwrap_or_default();
        if basis != K::BASIS {
            return Err(ParseError::new(
                format!("expected basis '{}', found '{basis}'", K::BASIS),
                0,
            ));
        }
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| ParseError::new("missing 'terms' array", 0))?;
        let mut out = Self::zero();
        for t in terms {
            let key = t
                .get("key")
                .and_then(Value::as_str)
                .ok_or_else(|| ParseError::new("term without string 'key'", 0))?;
            let coeff = t
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| ParseError::new("term without string 'coeff'", 0))?;
            out.add_term(key.parse()?, coeff.parse()?);
        }
        Ok(out)
    }

    /// Parses the compact text form `c1*key1 + c2*key2 + ...`.
    ///
    /// A term without `*` has coefficient 1. Keys never contain `+`, so terms
    /// are split on it; negative coefficients are written `-2*key`.
    pub fn parse_text(s: &str) -> Result<Self, ParseError> {
        let mut out = Self::zero();
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(out);
        }
        let mut offset = 0;
        for raw in trimmed.split('+') {
            let term = raw.trim();
            if term.is_empty() {
                return Err(ParseError::new("empty term", offset));
            }
            let (coeff, key) = match term.split_once('*') {
                Some((c, k)) => (c.trim().parse::<Rational>()?, k.trim()),
                None => (Rational::one(), term),
            };
            let key: K = key.parse().map_err(|e: ParseError| e.shifted(offset))?;
            out.add_term(key, coeff);
            offset += raw.len() + 1;
        }
        Ok(out)
    }
}

impl<K: Ord + Clone> Add<&FormalSum<K>> for &FormalSum<K> {
    type Output = FormalSum<K>;
    fn add(self, rhs: &FormalSum<K>) -> FormalSum<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Sub<&FormalSum<K>> for &FormalSum<K> {
    type Output = FormalSum<K>;
    fn sub(self, rhs: &FormalSum<K>) -> FormalSum<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> AddAssign<&FormalSum<K>> for FormalSum<K> {
    fn add_assign(&mut self, rhs: &FormalSum<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), v.clone());
        }
    }
}

impl<K: Ord + Clone> SubAssign<&FormalSum<K>> for FormalSum<K> {
    fn sub_assign(&mut self, rhs: &FormalSum<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), -v);
        }
    }
}

impl<K: Ord + Clone> Neg for &FormalSum<K> {
    type Output = FormalSum<K>;
    fn neg(self) -> FormalSum<K> {
        self.scale(&Rational::from(-1))
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Display for FormalSum<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // The zero sum prints as the empty string, which parses back to zero.
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{k}")?;
        }
        Ok(())
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Debug for FormalSum<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

pub fn sum_add<K: Ord + Clone>(a: &FormalSum<K>, b: &FormalSum<K>) -> FormalSum<K> {
    a + b
}

pub fn sum_scale<K: Ord + Clone>(c: &Rational, a: &FormalSum<K>) -> FormalSum<K> {
    a.scale(c)
}

pub fn sum_map<K, K2, F>(a: &FormalSum<K>, f: F) -> FormalSum<K2>
where
    K: Ord + Clone,
    K2: Ord + Clone,
    F: FnMut(&K) -> FormalSum<K2>,
{
    a.map(f)
}

/// Row-reduces `m` in place to reduced row echelon form and returns the pivot
/// columns. Pivots are chosen leftmost column first, then smallest row index.
pub fn rref(m: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (x, p) in other.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// An exact basis of the right nullspace `{v : M v = 0}` of a rectangular
/// matrix given by rows; `ncols` is needed when `rows` is empty.
///
/// One basis vector per free column, with a 1 in that column.
pub fn solve_nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    for r in &m {
        assert_eq!(r.len(), ncols, "ragged matrix");
    }
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rational::zero(); ncols];
            v[fc] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[r][fc];
            }
            v
        })
        .collect()
}

/// Rank of a matrix given by rows.
pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::young::Partition;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn rational_display_and_parse() {
        assert_eq!(Rational::new(6, -4).to_string(), "-3/2");
        assert_eq!(r(5).to_string(), "5");
        assert_eq!("-3/2".parse::<Rational>().unwrap(), Rational::new(-3, 2));
        assert_eq!("4/2".parse::<Rational>().unwrap(), r(2));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        assert_eq!(Rational::zero().denom(), &BigInt::from(1));
    }

    #[test]
    fn cancellation_purges_terms() {
        let a = FormalSum::from_terms([(p(&[2, 1]), r(2)), (p(&[3]), r(1))]);
        let b = FormalSum::term(p(&[2, 1]), r(-2));
        let s = sum_add(&a, &b);
        assert_eq!(s, FormalSum::basis(p(&[3])));
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn scaling_by_zero_annihilates() {
        let a = FormalSum::from_terms([(p(&[2, 1]), r(2)), (p(&[3]), r(1))]);
        assert!(sum_scale(&Rational::zero(), &a).is_zero());
    }

    #[test]
    fn sum_map_is_linear_extension() {
        let a = FormalSum::basis(p(&[1]));
        let out = sum_map(&a, |k| FormalSum::basis(Partition::new(k.parts()[..0].to_vec())));
        assert_eq!(out, FormalSum::basis(Partition::empty()));
    }

    #[test]
    fn nullspace_examples() {
        let ns = solve_nullspace(&[vec![r(1), r(-1)]], 2);
        assert_eq!(ns, vec![vec![r(1), r(1)]]);

        let id: Vec<Vec<Rational>> = (0..3)
            .map(|i| (0..3).map(|j| r((i == j) as i64)).collect())
            .collect();
        assert!(solve_nullspace(&id, 3).is_empty());

        let ns = solve_nullspace(&[vec![r(1), r(2)], vec![r(2), r(4)]], 2);
        assert_eq!(ns.len(), 1);
        // proportional to (2, -1)
        assert_eq!(&ns[0][0] * &r(-1), &ns[0][1] * &r(2));
    }

    #[test]
    fn empty_matrix_has_full_nullspace() {
        assert_eq!(solve_nullspace(&[], 3).len(), 3);
    }

    #[test]
    fn json_and_text_forms() {
        let a = FormalSum::from_terms([(p(&[2, 1]), Rational::new(1, 3)), (p(&[]), r(-2))]);
        let v = a.to_json();
        assert_eq!(v["basis"], "partition");
        assert_eq!(v["terms"][0]["key"], "0");
        assert_eq!(v["terms"][1]["coeff"], "1/3");
        assert_eq!(FormalSum::<Partition>::from_json(&v).unwrap(), a);
        let t = FormalSum::<Partition>::parse_text("1/3*2,1 + -2*0").unwrap();
        assert_eq!(t, a);
        assert_eq!(FormalSum::<Partition>::parse_text("4,3,1").unwrap(), FormalSum::basis(p(&[4, 3, 1])));
    }
}
