use std::collections::BTreeMap;
use std::fmt;

use super::{Field, LinalgError, Scalar};

/// A column vector of scalars.
pub type Vector = Vec<Scalar>;

type SparseRow = BTreeMap<usize, Scalar>;

/// Row-sparse matrix over a single field. Only nonzero entries are stored, so
/// structural equality is entrywise equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<SparseRow>,
    zero: Scalar,
}

/// Reduced row echelon form together with its rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

fn axpy(target: &mut SparseRow, factor: &Scalar, source: &SparseRow) {
    for (&j, b) in source {
        let delta = factor * b;
        match target.get_mut(&j) {
            Some(t) => {
                *t = &*t + &delta;
                if t.is_zero() {
                    target.remove(&j);
                }
            }
            None => {
                if !delta.is_zero() {
                    target.insert(j, delta);
                }
            }
        }
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![SparseRow::new(); rows],
            zero: field.zero(),
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i].insert(i, field.one());
        }
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let s = f(i, j);
                assert_eq!(s.field(), field, "entry ({i},{j}) is not over {field}");
                if !s.is_zero() {
                    m.data[i].insert(j, s);
                }
            }
        }
        m
    }

    /// Builds a matrix from row-major entries, checking shape and field.
    pub fn new(
        field: Field,
        rows: usize,
        cols: usize,
        data: Vec<Scalar>,
    ) -> Result<Matrix, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        if let Some(bad) = data.iter().find(|s| s.field() != field) {
            return Err(LinalgError::FieldMismatch {
                expected: field,
                found: bad.field(),
            });
        }
        Ok(Matrix::from_fn(field, rows, cols, |i, j| {
            data[i * cols + j].clone()
        }))
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(row) = rows.iter().find(|row| row.len() != c) {
            return Err(LinalgError::DimensionMismatch {
                expected: c,
                found: row.len(),
            });
        }
        Matrix::new(field, r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from small integer rows.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Matrix::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, s) in col.iter().enumerate() {
                if !s.is_zero() {
                    m.set(i, j, s.clone());
                }
            }
        }
        m
    }

    pub fn column_vector(field: Field, v: &[Scalar]) -> Matrix {
        Matrix::from_columns(field, v.len(), &[v.to_vec()])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        self.data[i].get(&j).unwrap_or(&self.zero)
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        assert_eq!(value.field(), self.field);
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        if value.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, value);
        }
    }

    /// Nonzero entries `(row, col, value)` in row-major order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(&j, s)| (i, j, s)))
    }

    pub fn row(&self, i: usize) -> Vector {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self
                .data
                .iter()
                .enumerate()
                .all(|(i, row)| row.len() == 1 && row.get(&i).is_some_and(Scalar::is_one))
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for (i, j, s) in self.nonzero_entries() {
            t.data[j].insert(i, s.clone());
        }
        t
    }

    /// Matrix product `self · rhs`.
    ///
    /// # Panics
    /// If the inner dimensions disagree.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product {}x{} · {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        assert_eq!(self.field, rhs.field);
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for (i, row) in self.data.iter().enumerate() {
            let target = &mut out.data[i];
            for (&k, a) in row {
                axpy(target, a, &rhs.data[k]);
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len());
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|(&j, _)| !v[j].is_zero())
                    .fold(self.field.zero(), |acc, (&j, a)| &acc + &(a * &v[j]))
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        self.combine(rhs, &self.field.one())
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        self.combine(rhs, &self.field.from_i64(-1))
    }

    fn combine(&self, rhs: &Matrix, factor: &Scalar) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        assert_eq!(self.field, rhs.field);
        let mut out = self.clone();
        for (target, source) in out.data.iter_mut().zip(&rhs.data) {
            axpy(target, factor, source);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        if c.is_zero() {
            return Matrix::zeros(self.field, self.rows, self.cols);
        }
        let mut out = self.clone();
        for row in &mut out.data {
            for s in row.values_mut() {
                *s = &*s * c;
            }
        }
        out
    }

    /// Kronecker product with the row-major tensor index `i·dim₂ + j`.
    pub fn kronecker(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.field, rhs.field);
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Matrix::zeros(self.field, rows, cols);
        for (i, row) in self.data.iter().enumerate() {
            for (&j, a) in row {
                for (k, rrow) in rhs.data.iter().enumerate() {
                    let target = &mut out.data[i * rhs.rows + k];
                    for (&l, b) in rrow {
                        target.insert(j * rhs.cols + l, a * b);
                    }
                }
            }
        }
        out
    }

    pub fn vstack(blocks: &[Matrix]) -> Matrix {
        let first = blocks.first().expect("vstack of no blocks");
        let cols = first.cols;
        let mut data = Vec::new();
        for b in blocks {
            assert_eq!(b.cols, cols);
            assert_eq!(b.field, first.field);
            data.extend(b.data.iter().cloned());
        }
        Matrix {
            field: first.field,
            rows: data.len(),
            cols,
            data,
            zero: first.zero.clone(),
        }
    }

    /// First entry, in row-major order, where two equally shaped matrices differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (i, (a, b)) in self.data.iter().zip(&other.data).enumerate() {
            if a == b {
                continue;
            }
            let j = a
                .keys()
                .chain(b.keys())
                .copied()
                .filter(|j| a.get(j) != b.get(j))
                .min()
                .expect("rows differ");
            return Some((i, j));
        }
        None
    }

    /// Unique reduced row echelon form, pivots chosen left to right.
    pub fn rref(&self) -> Rref {
        let mut rows: Vec<SparseRow> = self
            .data
            .iter()
            .filter(|r| !r.is_empty())
            .cloned()
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        while r < rows.len() {
            // Leftmost column with a nonzero entry among the remaining rows.
            let Some((p, c)) = rows[r..]
                .iter()
                .enumerate()
                .filter_map(|(off, row)| row.keys().next().map(|&c| (r + off, c)))
                .min_by_key(|&(_, c)| c)
            else {
                break;
            };
            rows.swap(r, p);
            let inv = rows[r][&c].inv().expect("pivot is nonzero");
            for s in rows[r].values_mut() {
                *s = &*s * &inv;
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r {
                    continue;
                }
                if let Some(f) = row.get(&c) {
                    let factor = -f;
                    axpy(row, &factor, &pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        let mut reduced = Matrix::zeros(self.field, self.rows, self.cols);
        for (i, row) in rows.into_iter().take(pivots.len()).enumerate() {
            reduced.data[i] = row;
        }
        Rref {
            reduced,
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the null space, one vector per free column in increasing order.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let Rref {
            reduced, pivots, ..
        } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (row, &p) in pivots.iter().enumerate() {
                    if let Some(e) = reduced.data[row].get(&f) {
                        v[p] = -e;
                    }
                }
                v
            })
            .collect()
    }

    /// Solves `self · x = b`. Free variables are set to zero; `None` when
    /// the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vector>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut augmented = self.clone();
        augmented.cols += 1;
        for (i, s) in b.iter().enumerate() {
            if !s.is_zero() {
                augmented.data[i].insert(self.cols, s.clone());
            }
        }
        let Rref {
            reduced, pivots, ..
        } = augmented.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = reduced.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Exact two-sided inverse, `None` when singular.
    pub fn invert(&self) -> Result<Option<Matrix>, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Some(self.clone()));
        }
        let mut augmented = self.clone();
        augmented.cols = 2 * n;
        for i in 0..n {
            augmented.data[i].insert(n + i, self.field.one());
        }
        let Rref {
            reduced, pivots, ..
        } = augmented.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Ok(None);
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for (i, row) in reduced.data.into_iter().enumerate() {
            inv.data[i] = row
                .into_iter()
                .filter(|(j, _)| *j >= n)
                .map(|(j, s)| (j - n, s))
                .collect();
        }
        Ok(Some(inv))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Matrix {}x{} over {} [",
            self.rows, self.cols, self.field
        )?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
