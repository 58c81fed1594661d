//! Exact dense linear algebra over N, Z and Q.
//!
//! Every entry is stored as a reduced [`BigRational`]; the [`Semiring`] tag
//! restricts which values are admissible (non-negative integers for N,
//! integers for Z). Arithmetic never overflows and never rounds.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient semiring of a matrix, vector or series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Semiring {
    N,
    Z,
    Q,
}

impl Semiring {
    /// Whether every value of `self` is also a value of `to`.
    pub fn embeds_into(self, to: Semiring) -> bool {
        self <= to
    }

    /// Whether `value` is an element of this semiring.
    pub fn admits(self, value: &BigRational) -> bool {
        match self {
            Semiring::N => value.is_integer() && !value.is_negative(),
            Semiring::Z => value.is_integer(),
            Semiring::Q => true,
        }
    }

    /// The smallest of the three semirings containing both arguments.
    pub fn join(self, other: Semiring) -> Semiring {
        self.max(other)
    }

    fn check(self, value: &BigRational) -> Result<()> {
        if self.admits(value) {
            Ok(())
        } else {
            Err(Error::OutOfSemiring {
                value: format_rational(value),
                semiring: self,
            })
        }
    }
}

impl fmt::Display for Semiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Semiring::N => "N",
            Semiring::Z => "Z",
            Semiring::Q => "Q",
        })
    }
}

impl std::str::FromStr for Semiring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "N" => Ok(Semiring::N),
            "Z" => Ok(Semiring::Z),
            "Q" => Ok(Semiring::Q),
            other => Err(Error::SeriesFormat(format!("unknown semiring {other:?}"))),
        }
    }
}

/// Renders an integer as `n` and a proper fraction as `p/q`.
pub fn format_rational(value: &BigRational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses `n`, `-n` or `p/q` into a reduced rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = || Error::SeriesFormat(format!("not an exact number: {text:?}"));
    match text.split_once('/') {
        None => text
            .parse::<BigInt>()
            .map(BigRational::from_integer)
            .map_err(|_| bad()),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// A single exact value tagged with its semiring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    semiring: Semiring,
    value: BigRational,
}

impl Scalar {
    pub fn new(semiring: Semiring, value: BigRational) -> Result<Self> {
        semiring.check(&value)?;
        Ok(Scalar { semiring, value })
    }

    pub fn natural(n: impl Into<BigUint>) -> Self {
        let n: BigUint = n.into();
        Scalar {
            semiring: Semiring::N,
            value: BigRational::from_integer(BigInt::from(n)),
        }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Scalar {
            semiring: Semiring::Z,
            value: BigRational::from_integer(n.into()),
        }
    }

    pub fn rational(value: BigRational) -> Self {
        Scalar {
            semiring: Semiring::Q,
            value,
        }
    }

    pub fn zero(semiring: Semiring) -> Self {
        Scalar {
            semiring,
            value: BigRational::zero(),
        }
    }

    pub fn semiring(&self) -> Semiring {
        self.semiring
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// The value as a natural number, if it is one.
    pub fn to_biguint(&self) -> Option<BigUint> {
        if self.value.is_integer() {
            self.value.numer().to_biguint()
        } else {
            None
        }
    }

    pub fn to_bigint(&self) -> Option<BigInt> {
        self.value.is_integer().then(|| self.value.numer().clone())
    }

    pub fn embed(&self, to: Semiring) -> Result<Scalar> {
        if !self.semiring.embeds_into(to) {
            return Err(Error::Narrowing {
                from: self.semiring,
                to,
            });
        }
        Ok(Scalar {
            semiring: to,
            value: self.value.clone(),
        })
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.value))
    }
}

fn same_semiring(left: Semiring, right: Semiring) -> Result<Semiring> {
    if left == right {
        Ok(left)
    } else {
        Err(Error::SemiringMismatch { left, right })
    }
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    semiring: Semiring,
    entries: Vec<BigRational>,
}

impl Matrix {
    pub fn new(
        semiring: Semiring,
        rows: usize,
        cols: usize,
        entries: Vec<BigRational>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        for e in &entries {
            semiring.check(e)?;
        }
        Ok(Matrix {
            rows,
            cols,
            semiring,
            entries,
        })
    }

    /// Builds a matrix from small integer literals, row-major.
    pub fn from_i64(semiring: Semiring, rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        let entries = entries
            .iter()
            .map(|&v| BigRational::from_integer(v.into()))
            .collect();
        Matrix::new(semiring, rows, cols, entries)
    }

    pub fn zeros(semiring: Semiring, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            semiring,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(semiring: Semiring, n: usize) -> Self {
        let mut m = Matrix::zeros(semiring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn semiring(&self) -> Semiring {
        self.semiring
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        Scalar {
            semiring: self.semiring,
            value: self.get(i, j).clone(),
        }
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn mat_mul(&self, other: &Matrix) -> Result<Matrix> {
        let semiring = same_semiring(self.semiring, other.semiring)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(semiring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        let semiring = same_semiring(self.semiring, other.semiring)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} plus {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            semiring,
            entries,
        })
    }

    /// `self^exponent` by repeated squaring; `self^0` is the identity.
    pub fn pow(&self, exponent: u64) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut result = Matrix::identity(self.semiring, self.rows);
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mat_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mat_mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn embed(&self, to: Semiring) -> Result<Matrix> {
        if !self.semiring.embeds_into(to) {
            return Err(Error::Narrowing {
                from: self.semiring,
                to,
            });
        }
        Ok(Matrix {
            semiring: to,
            ..self.clone()
        })
    }

    /// Entry-wise negation; N has no additive inverses.
    pub fn negated(&self) -> Result<Matrix> {
        if self.semiring == Semiring::N && !self.is_zero() {
            return Err(Error::OutOfSemiring {
                value: "negated natural matrix".into(),
                semiring: Semiring::N,
            });
        }
        Ok(Matrix {
            entries: self.entries.iter().map(|e| -e).collect(),
            ..self.clone()
        })
    }

    /// Kronecker (tensor) product.
    pub fn kronecker(&self, other: &Matrix) -> Result<Matrix> {
        let semiring = same_semiring(self.semiring, other.semiring)?;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut entries = Vec::with_capacity(rows * cols);
        for i1 in 0..self.rows {
            for i2 in 0..other.rows {
                for j1 in 0..self.cols {
                    let a = self.get(i1, j1);
                    for j2 in 0..other.cols {
                        entries.push(a * other.get(i2, j2));
                    }
                }
            }
        }
        Ok(Matrix {
            rows,
            cols,
            semiring,
            entries,
        })
    }

    /// Block-diagonal matrix `diag(self, other)`.
    pub fn direct_sum(&self, other: &Matrix) -> Result<Matrix> {
        let semiring = same_semiring(self.semiring, other.semiring)?;
        let mut out = Matrix::zeros(semiring, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    /// The submatrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        Matrix {
            rows: rows.len(),
            cols: cols.len(),
            semiring: self.semiring,
            entries,
        }
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.entries[i * self.cols + j] = value;
    }

    /// Applies the matrix to a column vector: `self · v`.
    pub fn mat_vec(&self, v: &Vector) -> Result<Vector> {
        if v.orientation != Orientation::Column {
            return Err(Error::DimensionMismatch("matrix times row vector".into()));
        }
        let semiring = same_semiring(self.semiring, v.semiring)?;
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times column of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let entries = (0..self.rows)
            .map(|i| dot_slices(self.row(i), &v.entries))
            .collect();
        Ok(Vector {
            orientation: Orientation::Column,
            semiring,
            entries,
        })
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "({})", row.join(" "))?;
        }
        Ok(())
    }
}

fn dot_slices(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Row,
    Column,
}

/// A row or column vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    orientation: Orientation,
    semiring: Semiring,
    entries: Vec<BigRational>,
}

impl Vector {
    pub fn new(
        orientation: Orientation,
        semiring: Semiring,
        entries: Vec<BigRational>,
    ) -> Result<Self> {
        for e in &entries {
            semiring.check(e)?;
        }
        Ok(Vector {
            orientation,
            semiring,
            entries,
        })
    }

    pub fn row_i64(semiring: Semiring, entries: &[i64]) -> Result<Self> {
        Vector::new(Orientation::Row, semiring, to_rationals(entries))
    }

    pub fn column_i64(semiring: Semiring, entries: &[i64]) -> Result<Self> {
        Vector::new(Orientation::Column, semiring, to_rationals(entries))
    }

    pub fn zeros(orientation: Orientation, semiring: Semiring, len: usize) -> Self {
        Vector {
            orientation,
            semiring,
            entries: vec![BigRational::zero(); len],
        }
    }

    /// The `index`-th unit vector.
    pub fn unit(orientation: Orientation, semiring: Semiring, len: usize, index: usize) -> Self {
        let mut v = Vector::zeros(orientation, semiring, len);
        v.entries[index] = BigRational::one();
        v
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn semiring(&self) -> Semiring {
        self.semiring
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &BigRational {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Entries as naturals; `None` if some entry is not a natural number.
    pub fn to_naturals(&self) -> Option<Vec<BigUint>> {
        self.entries
            .iter()
            .map(|e| {
                if e.is_integer() {
                    e.numer().to_biguint()
                } else {
                    None
                }
            })
            .collect()
    }

    /// Entries as machine integers, for small-valued vectors such as path indicators.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.entries
            .iter()
            .map(|e| {
                if e.is_integer() {
                    e.numer().to_u64()
                } else {
                    None
                }
            })
            .collect()
    }

    /// `self · m` for a row vector.
    pub fn vec_mat(&self, m: &Matrix) -> Result<Vector> {
        if self.orientation != Orientation::Row {
            return Err(Error::DimensionMismatch(
                "column vector times matrix".into(),
            ));
        }
        let semiring = same_semiring(self.semiring, m.semiring)?;
        if self.len() != m.rows {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} times {}x{} matrix",
                self.len(),
                m.rows,
                m.cols
            )));
        }
        let mut entries = vec![BigRational::zero(); m.cols];
        for (i, x) in self.entries.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, out) in entries.iter_mut().enumerate() {
                let y = m.get(i, j);
                if !y.is_zero() {
                    *out += x * y;
                }
            }
        }
        Ok(Vector {
            orientation: Orientation::Row,
            semiring,
            entries,
        })
    }

    /// Contraction of a row vector with a column vector.
    pub fn dot(&self, column: &Vector) -> Result<Scalar> {
        if self.orientation != Orientation::Row || column.orientation != Orientation::Column {
            return Err(Error::DimensionMismatch(
                "dot needs a row and a column".into(),
            ));
        }
        let semiring = same_semiring(self.semiring, column.semiring)?;
        if self.len() != column.len() {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} against column of length {}",
                self.len(),
                column.len()
            )));
        }
        Ok(Scalar {
            semiring,
            value: dot_slices(&self.entries, &column.entries),
        })
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        let semiring = same_semiring(self.semiring, other.semiring)?;
        if self.orientation != other.orientation || self.len() != other.len() {
            return Err(Error::DimensionMismatch("vector sum".into()));
        }
        Ok(Vector {
            orientation: self.orientation,
            semiring,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, factor: &Scalar) -> Result<Vector> {
        let semiring = same_semiring(self.semiring, factor.semiring)?;
        Ok(Vector {
            orientation: self.orientation,
            semiring,
            entries: self.entries.iter().map(|e| e * &factor.value).collect(),
        })
    }

    pub fn embed(&self, to: Semiring) -> Result<Vector> {
        if !self.semiring.embeds_into(to) {
            return Err(Error::Narrowing {
                from: self.semiring,
                to,
            });
        }
        Ok(Vector {
            semiring: to,
            ..self.clone()
        })
    }

    pub fn negated(&self) -> Result<Vector> {
        if self.semiring == Semiring::N && !self.is_zero() {
            return Err(Error::OutOfSemiring {
                value: "negated natural vector".into(),
                semiring: Semiring::N,
            });
        }
        Ok(Vector {
            entries: self.entries.iter().map(|e| -e).collect(),
            ..self.clone()
        })
    }

    pub fn kronecker(&self, other: &Vector) -> Result<Vector> {
        let semiring = same_semiring(self.semiring, other.semiring)?;
        if self.orientation != other.orientation {
            return Err(Error::DimensionMismatch(
                "kronecker of row and column".into(),
            ));
        }
        let entries = self
            .entries
            .iter()
            .flat_map(|a| other.entries.iter().map(move |b| a * b))
            .collect();
        Ok(Vector {
            orientation: self.orientation,
            semiring,
            entries,
        })
    }

    /// Concatenation of two vectors of the same orientation.
    pub fn concat(&self, other: &Vector) -> Result<Vector> {
        let semiring = same_semiring(self.semiring, other.semiring)?;
        if self.orientation != other.orientation {
            return Err(Error::DimensionMismatch(
                "concatenating row and column".into(),
            ));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Vector {
            orientation: self.orientation,
            semiring,
            entries,
        })
    }

    pub fn select(&self, indices: &[usize]) -> Vector {
        Vector {
            orientation: self.orientation,
            semiring: self.semiring,
            entries: indices.iter().map(|&i| self.entries[i].clone()).collect(),
        }
    }

    /// Indices of the nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn to_rationals(values: &[i64]) -> Vec<BigRational> {
    values
        .iter()
        .map(|&v| BigRational::from_integer(v.into()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ones(n: usize) -> Matrix {
        Matrix::from_i64(Semiring::N, n, n, &vec![1; n * n]).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let m = Matrix::from_i64(Semiring::Z, 2, 2, &[3, -1, 4, 7]).unwrap();
        assert_eq!(Matrix::identity(Semiring::Z, 2).mat_mul(&m).unwrap(), m);
    }

    #[test]
    fn swap_matrix_is_an_involution() {
        let swap = Matrix::from_i64(Semiring::N, 2, 2, &[0, 1, 1, 0]).unwrap();
        assert_eq!(
            swap.mat_mul(&swap).unwrap(),
            Matrix::identity(Semiring::N, 2)
        );
    }

    #[test]
    fn zero_annihilates() {
        let a = Matrix::zeros(Semiring::N, 2, 3);
        let b = Matrix::zeros(Semiring::N, 3, 2);
        assert_eq!(a.mat_mul(&b).unwrap(), Matrix::zeros(Semiring::N, 2, 2));
    }

    #[test]
    fn mat_mul_rejects_mismatches() {
        let a = Matrix::zeros(Semiring::N, 2, 3);
        assert!(matches!(a.mat_mul(&a), Err(Error::DimensionMismatch(_))));
        let z = Matrix::zeros(Semiring::Z, 3, 2);
        assert!(matches!(a.mat_mul(&z), Err(Error::SemiringMismatch { .. })));
    }

    #[test]
    fn powers() {
        let m = ones(2);
        assert_eq!(m.pow(0).unwrap(), Matrix::identity(Semiring::N, 2));
        assert_eq!(m.pow(1).unwrap(), m);
        let cube = m.pow(3).unwrap();
        assert!(cube
            .entries()
            .iter()
            .all(|e| *e == BigRational::from_integer(4.into())));
        assert!(matches!(
            Matrix::zeros(Semiring::N, 2, 3).pow(2),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn large_powers_do_not_overflow() {
        // 2x2 all-ones matrix: entries of m^e are 2^(e-1).
        let p = ones(2).pow(200).unwrap();
        let expected = BigInt::from(2u8).pow(199);
        assert_eq!(p.get(0, 0).numer(), &expected);
    }

    #[test]
    fn vector_products() {
        let lambda = Vector::row_i64(Semiring::N, &[1, 0]).unwrap();
        let swap = Matrix::from_i64(Semiring::N, 2, 2, &[0, 1, 1, 0]).unwrap();
        assert_eq!(
            lambda.vec_mat(&swap).unwrap(),
            Vector::row_i64(Semiring::N, &[0, 1]).unwrap()
        );
        assert_eq!(
            lambda.vec_mat(&Matrix::identity(Semiring::N, 2)).unwrap(),
            lambda
        );
        let gamma = Vector::row_i64(Semiring::N, &[29, 29]).unwrap();
        let nu = Vector::column_i64(Semiring::N, &[1, 0]).unwrap();
        assert_eq!(
            gamma.dot(&nu).unwrap().to_biguint(),
            Some(BigUint::from(29u8))
        );
        assert!(gamma
            .dot(&Vector::column_i64(Semiring::N, &[1]).unwrap())
            .is_err());
        assert!(nu.vec_mat(&swap).is_err());
        assert_eq!(
            swap.mat_vec(&nu).unwrap(),
            Vector::column_i64(Semiring::N, &[0, 1]).unwrap()
        );
    }

    #[test]
    fn embeddings() {
        let n = ones(2);
        let z = n.embed(Semiring::Z).unwrap();
        assert_eq!(z.semiring(), Semiring::Z);
        assert_eq!(z.entries(), n.entries());
        let neg = Matrix::from_i64(Semiring::Z, 1, 1, &[-1]).unwrap();
        let q = neg.embed(Semiring::Q).unwrap();
        assert_eq!(q.get(0, 0), &BigRational::new((-1).into(), 1.into()));
        assert!(matches!(
            q.embed(Semiring::N),
            Err(Error::Narrowing {
                from: Semiring::Q,
                to: Semiring::N
            })
        ));
    }

    #[test]
    fn semiring_membership_is_enforced() {
        assert!(Matrix::from_i64(Semiring::N, 1, 1, &[-2]).is_err());
        let half = BigRational::new(1.into(), 2.into());
        assert!(Matrix::new(Semiring::Z, 1, 1, vec![half.clone()]).is_err());
        assert!(Matrix::new(Semiring::Q, 1, 1, vec![half]).is_ok());
        assert!(Matrix::from_i64(Semiring::N, 2, 2, &[1]).is_err());
        assert!(ones(2).negated().is_err());
    }

    #[test]
    fn rational_text_round_trip() {
        let v = parse_rational("6/-4").unwrap();
        assert_eq!(format_rational(&v), "-3/2");
        assert_eq!(format_rational(&parse_rational(" 12 ").unwrap()), "12");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn kronecker_dimensions() {
        let a = ones(5);
        let b = Matrix::identity(Semiring::N, 2);
        let k = a.kronecker(&b).unwrap();
        assert_eq!((k.rows(), k.cols()), (10, 10));
        assert_eq!(k.get(1, 3), &BigRational::one());
        assert_eq!(k.get(1, 2), &BigRational::zero());
    }
}
