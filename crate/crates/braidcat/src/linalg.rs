//! Exact rational linear algebra: the substrate for every other module.
//!
//! Scalars are arbitrary-precision rationals (`num_rational::BigRational`),
//! always in lowest terms with positive denominator, so equality is exact.
//! Matrices are stored column-sparse because coaction and coherence matrices
//! on tensor powers are large but very thin; elimination converts to a dense
//! working copy internally.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

pub type Scalar = BigRational;

/// Rational from an integer.
pub fn qi(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational n/d.
pub fn q(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a scalar as `p` or `p/q`, the exact-fraction string used by every
/// JSON interface in this crate.
pub fn format_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Parses `p` or `p/q`. Rejects floats: these interfaces are exact only.
pub fn parse_scalar(text: &str) -> Result<Scalar, LinalgError> {
    let text = text.trim();
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let numer: BigInt = n
        .parse()
        .map_err(|_| LinalgError::BadFraction(text.to_string()))?;
    let denom: BigInt = d
        .parse()
        .map_err(|_| LinalgError::BadFraction(text.to_string()))?;
    if denom.is_zero() {
        return Err(LinalgError::BadFraction(text.to_string()));
    }
    Ok(BigRational::new(numer, denom))
}

/// Exact square root of a rational, if it exists in the rationals.
pub fn rational_sqrt(s: &Scalar) -> Option<Scalar> {
    if s.is_negative() {
        return None;
    }
    let np = s.numer().sqrt();
    let dp = s.denom().sqrt();
    if &(&np * &np) == s.numer() && &(&dp * &dp) == s.denom() {
        Some(BigRational::new(np, dp))
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("not an exact fraction: {0}")]
    BadFraction(String),
    #[error("matrix is singular")]
    Singular,
}

/// Dense row-major view is the conceptual model; storage is per column as
/// sorted `(row, value)` pairs with no explicit zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, Scalar)>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.columns[i].push((i, Scalar::one()));
        }
        m
    }

    /// Diagonal matrix from entries.
    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            if !e.is_zero() {
                m.columns[i].push((i, e.clone()));
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        let mut m = Matrix::zeros(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                if !v.is_zero() {
                    m.columns[j].push((i, v));
                }
            }
        }
        for col in &mut m.columns {
            col.sort_by_key(|(i, _)| *i);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for j in 0..cols {
            for i in 0..rows {
                let v = f(i, j);
                if !v.is_zero() {
                    m.columns[j].push((i, v));
                }
            }
        }
        m
    }

    /// Column vector from a dense slice.
    pub fn column_vector(v: &[Scalar]) -> Self {
        Matrix::from_fn(v.len(), 1, |i, _| v[i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        assert!(i < self.rows && j < self.cols, "index out of range");
        match self.columns[j].binary_search_by_key(&i, |(r, _)| *r) {
            Ok(k) => self.columns[j][k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        let col = &mut self.columns[j];
        match col.binary_search_by_key(&i, |(r, _)| *r) {
            Ok(k) => {
                if v.is_zero() {
                    col.remove(k);
                } else {
                    col[k].1 = v;
                }
            }
            Err(k) => {
                if !v.is_zero() {
                    col.insert(k, (i, v));
                }
            }
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Scalar) {
        if v.is_zero() {
            return;
        }
        let cur = self.get(i, j);
        self.set(i, j, cur + v);
    }

    pub fn column_entries(&self, j: usize) -> &[(usize, Scalar)] {
        &self.columns[j]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self
                .columns
                .iter()
                .enumerate()
                .all(|(j, c)| c.len() == 1 && c[0].0 == j && c[0].1.is_one())
    }

    pub fn transpose(&self) -> Matrix {
        let mut m = Matrix::zeros(self.cols, self.rows);
        for j in 0..self.cols {
            for (i, v) in &self.columns[j] {
                m.columns[*i].push((j, v.clone()));
            }
        }
        for col in &mut m.columns {
            col.sort_by_key(|(i, _)| *i);
        }
        m
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        if s.is_zero() {
            return Matrix::zeros(self.rows, self.cols);
        }
        let mut m = self.clone();
        for col in &mut m.columns {
            for (_, v) in col.iter_mut() {
                *v *= s;
            }
        }
        m
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-Scalar::one())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "add shape");
        let mut m = self.clone();
        for j in 0..other.cols {
            for (i, v) in &other.columns[j] {
                m.add_to(*i, j, v);
            }
        }
        m
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "mul shape: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut m = Matrix::zeros(self.rows, other.cols);
        for j in 0..other.cols {
            let mut acc: Vec<(usize, Scalar)> = Vec::new();
            for (k, b) in &other.columns[j] {
                for (i, a) in &self.columns[*k] {
                    acc.push((*i, a * b));
                }
            }
            acc.sort_by_key(|(i, _)| *i);
            let mut col: Vec<(usize, Scalar)> = Vec::new();
            for (i, v) in acc {
                match col.last_mut() {
                    Some((li, lv)) if *li == i => *lv += v,
                    _ => col.push((i, v)),
                }
            }
            col.retain(|(_, v)| !v.is_zero());
            m.columns[j] = col;
        }
        m
    }

    /// Applies the matrix to a dense vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "apply shape");
        let mut out = vec![Scalar::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, a) in &self.columns[j] {
                out[*i] += a * x;
            }
        }
        out
    }

    /// Kronecker product under the row-major convention: the left factor is
    /// the slow index, so `(a ⊗ b)[(i,k),(j,l)] = a[i,j] b[k,l]`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for j in 0..self.cols {
            for l in 0..other.cols {
                let col = &mut m.columns[j * other.cols + l];
                for (i, a) in &self.columns[j] {
                    for (k, b) in &other.columns[l] {
                        col.push((i * other.rows + k, a * b));
                    }
                }
                col.sort_by_key(|(i, _)| *i);
            }
        }
        m
    }

    pub fn to_dense_rows(&self) -> Vec<Vec<Scalar>> {
        let mut rows = vec![vec![Scalar::zero(); self.cols]; self.rows];
        for j in 0..self.cols {
            for (i, v) in &self.columns[j] {
                rows[*i][j] = v.clone();
            }
        }
        rows
    }

    /// Horizontal concatenation [self | other].
    pub fn hcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hcat shape");
        let mut m = Matrix::zeros(self.rows, self.cols + other.cols);
        m.columns[..self.cols].clone_from_slice(&self.columns);
        m.columns[self.cols..].clone_from_slice(&other.columns);
        m
    }

    pub fn rank(&self) -> usize {
        let (_, pivots) = rref_dense(self.to_dense_rows(), self.cols);
        pivots.len()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hcat(&Matrix::identity(n));
        let (red, pivots) = rref_dense(aug.to_dense_rows(), aug.cols);
        if pivots.len() != n || pivots.iter().enumerate().any(|(k, p)| *p != k) {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| red[i][n + j].clone()))
    }

    /// First entry where the two matrices differ, for failure witnesses.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize, Scalar, Scalar)> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Some((0, 0, Scalar::zero(), Scalar::zero()));
        }
        for j in 0..self.cols {
            let mut ia = self.columns[j].iter().peekable();
            let mut ib = other.columns[j].iter().peekable();
            loop {
                match (ia.peek(), ib.peek()) {
                    (None, None) => break,
                    (Some((i, v)), None) => return Some((*i, j, v.clone(), Scalar::zero())),
                    (None, Some((i, v))) => return Some((*i, j, Scalar::zero(), v.clone())),
                    (Some((i1, v1)), Some((i2, v2))) => {
                        if i1 < i2 {
                            return Some((*i1, j, v1.clone(), Scalar::zero()));
                        } else if i2 < i1 {
                            return Some((*i2, j, Scalar::zero(), v2.clone()));
                        } else if v1 != v2 {
                            return Some((*i1, j, v1.clone(), v2.clone()));
                        } else {
                            ia.next();
                            ib.next();
                        }
                    }
                }
            }
        }
        None
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        if self.rows <= 16 && self.cols <= 16 {
            for row in self.to_dense_rows() {
                let entries: Vec<String> = row.iter().map(format_scalar).collect();
                writeln!(f, "  [{}]", entries.join(", "))?;
            }
        } else {
            writeln!(f, "  nnz = {}", self.nnz())?;
        }
        write!(f, "]")
    }
}

/// Multi-index flattening for tensor factors: row-major, leftmost factor
/// slowest. Fixes the basis order of V ⊗ W once for all modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorIndex {
    dims: Vec<usize>,
}

impl TensorIndex {
    pub fn new(dims: Vec<usize>) -> Self {
        TensorIndex { dims }
    }

    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn flatten(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.dims.len());
        let mut out = 0;
        for (i, d) in idx.iter().zip(&self.dims) {
            assert!(i < d, "tensor index out of range");
            out = out * d + i;
        }
        out
    }

    pub fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        assert!(flat < self.total().max(1));
        let mut out = vec![0; self.dims.len()];
        for (slot, d) in self.dims.iter().enumerate().rev() {
            out[slot] = flat % d;
            flat /= d;
        }
        out
    }
}

/// Reduced row echelon form of a dense matrix; returns the reduced rows and
/// the pivot columns. Pivots are normalized to 1.
fn rref_dense(mut rows: Vec<Vec<Scalar>>, cols: usize) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = rows[r][c].clone();
        for v in rows[r].iter_mut() {
            *v /= &inv;
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in 0..cols {
                    let t = &rows[r][j] * &factor;
                    rows[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (rows, pivots)
}

/// Basis of the null space `{v : m v = 0}`, in reduced echelon normalization:
/// one vector per free column, with +1 at the free coordinate, ordered by
/// free column index.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    let cols = m.cols();
    let (red, pivots) = rref_dense(m.to_dense_rows(), cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![Scalar::zero(); cols];
        v[free] = Scalar::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -red[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solves `m x = b` exactly: a particular solution plus a kernel basis, or
/// `None` if the system is inconsistent. Every solution is
/// `particular + span(kernel)`.
pub fn solve_affine(m: &Matrix, b: &[Scalar]) -> Option<(Vec<Scalar>, Vec<Vec<Scalar>>)> {
    assert_eq!(m.rows(), b.len(), "solve shape");
    let aug = m.hcat(&Matrix::column_vector(b));
    let (red, pivots) = rref_dense(aug.to_dense_rows(), aug.cols());
    let n = m.cols();
    // A pivot in the augmented column means inconsistency.
    if pivots.iter().any(|&p| p == n) {
        return None;
    }
    let mut particular = vec![Scalar::zero(); n];
    for (row, &p) in pivots.iter().enumerate() {
        particular[p] = red[row][n].clone();
    }
    Some((particular, kernel_basis(m)))
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn format_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(format_scalar).collect();
    format!("({})", parts.join(", "))
}
