//! Exact rational vectors and small dense linear algebra over Q.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// A vector of `V = X ⊗ Q` stored as an integer numerator over a common
/// positive denominator, always in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QVec {
    num: Vec<i64>,
    den: i64,
}

impl QVec {
    pub fn new(num: Vec<i64>, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let mut q = QVec { num, den };
        q.normalize();
        q
    }

    pub fn from_int(v: &[i64]) -> Self {
        QVec { num: v.to_vec(), den: 1 }
    }

    pub fn zero(rank: usize) -> Self {
        QVec { num: vec![0; rank], den: 1 }
    }

    fn normalize(&mut self) {
        if self.den < 0 {
            self.den = -self.den;
            self.num.iter_mut().for_each(|x| *x = -*x);
        }
        let g = self.num.iter().fold(self.den, |g, &x| g.gcd(&x));
        if g > 1 {
            self.den /= g;
            self.num.iter_mut().for_each(|x| *x /= g);
        }
    }

    pub fn numerator(&self) -> &[i64] {
        &self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn len(&self) -> usize {
        self.num.len()
    }

    pub fn is_empty(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|&x| x == 0)
    }

    /// Returns the integer vector if every coordinate is integral.
    pub fn as_integral(&self) -> Option<Vec<i64>> {
        (self.den == 1).then(|| self.num.clone())
    }

    pub fn coord(&self, i: usize) -> Rational64 {
        Rational64::new(self.num[i], self.den)
    }

    /// Pairing with an integral linear functional.
    pub fn pair(&self, functional: &[i64]) -> Rational64 {
        Rational64::new(dot(functional, &self.num), self.den)
    }

    pub fn add(&self, other: &QVec) -> QVec {
        let den = self.den.lcm(&other.den);
        let (a, b) = (den / self.den, den / other.den);
        let num = self.num.iter().zip(&other.num).map(|(x, y)| x * a + y * b).collect();
        QVec::new(num, den)
    }

    pub fn neg(&self) -> QVec {
        QVec { num: self.num.iter().map(|x| -x).collect(), den: self.den }
    }

    pub fn sub(&self, other: &QVec) -> QVec {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Rational64) -> QVec {
        let num = self.num.iter().map(|x| x * c.numer()).collect();
        QVec::new(num, self.den * c.denom())
    }

    /// Applies an integer matrix (row-major, `rank × rank`).
    pub fn apply(&self, mat: &[i64]) -> QVec {
        QVec { num: mat_vec(mat, &self.num), den: self.den }
    }

    pub fn to_big(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|&x| BigRational::new(BigInt::from(x), BigInt::from(self.den)))
            .collect()
    }
}

impl Ord for QVec {
    /// Lexicographic comparison of the coordinates as rational numbers.
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.num.iter().zip(&other.num) {
            let lhs = *a as i128 * other.den as i128;
            let rhs = *b as i128 * self.den as i128;
            match lhs.cmp(&rhs) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.num.len().cmp(&other.num.len())
    }
}

impl PartialOrd for QVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 0..self.num.len() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", fmt_rational(self.coord(i)))?;
        }
        write!(f, ")")
    }
}

pub fn fmt_rational(r: Rational64) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational64> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let q: i64 = q.trim().parse().ok()?;
            (q != 0).then_some(())?;
            Some(Rational64::new(p.trim().parse().ok()?, q))
        }
        None => Some(Rational64::from_integer(s.parse().ok()?)),
    }
}

impl Serialize for QVec {
    /// Integral coordinates serialize as JSON integers, the rest as `"p/q"`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.num.len()))?;
        for i in 0..self.num.len() {
            let c = self.coord(i);
            if *c.denom() == 1 {
                seq.serialize_element(c.numer())?;
            } else {
                seq.serialize_element(&fmt_rational(c))?;
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for QVec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coord {
            Int(i64),
            Str(String),
        }
        let coords: Vec<Coord> = Vec::deserialize(deserializer)?;
        let mut rats = Vec::with_capacity(coords.len());
        for c in coords {
            rats.push(match c {
                Coord::Int(i) => Rational64::from_integer(i),
                Coord::Str(s) => parse_rational(&s)
                    .ok_or_else(|| de::Error::custom(format!("bad rational {s:?}")))?,
            });
        }
        Ok(QVec::from_rationals(&rats))
    }
}

impl QVec {
    pub fn from_rationals(coords: &[Rational64]) -> QVec {
        let den = coords.iter().fold(1i64, |l, c| l.lcm(c.denom()));
        let num = coords.iter().map(|c| c.numer() * (den / c.denom())).collect();
        QVec::new(num, den)
    }
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Row-major square matrix times vector.
pub fn mat_vec(mat: &[i64], v: &[i64]) -> Vec<i64> {
    let n = v.len();
    (0..n).map(|i| dot(&mat[i * n..(i + 1) * n], v)).collect()
}

/// Row-major square matrix product.
pub fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

pub fn identity(n: usize) -> Vec<i64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(rows: &mut [Vec<BigRational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let (head, tail) = rows.split_at_mut(r.max(i));
                let (src, dst) = if i < r { (&tail[0], &mut head[i]) } else { (&head[r], &mut tail[0]) };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d = &*d - &f * s;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a rational matrix given as rows.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Result of solving `A x = b` exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub particular: Vec<BigRational>,
    /// Dimension of the solution space.
    pub nullity: usize,
}

/// Solves `A x = b` over Q; `None` when inconsistent.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Solution> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![BigRational::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][ncols].clone();
    }
    Some(Solution { particular: x, nullity: ncols - pivots.len() })
}

pub fn big(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

pub fn is_nonneg(x: &BigRational) -> bool {
    !x.is_negative()
}

pub fn is_integer(x: &BigRational) -> bool {
    x.denom().is_one()
}
