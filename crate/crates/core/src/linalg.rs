//! Sparse exact matrices and Gaussian elimination over fields.
//!
//! Matrices over any ring support evaluation; elimination (rref, kernels, solving)
//! needs a [`Field`], so truncated coefficient rings are rejected at compile time.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::{row_combine, scale_to_monic, Field, Ring, SparseRow};
use crate::tensor::TensorMap;

/// Sparse matrix stored column by column; no explicit zeros.
#[derive(Clone, Debug)]
pub struct ExactMatrix<R: Ring> {
    ring: R,
    rows: usize,
    cols: usize,
    columns: Vec<SparseRow<R::Elem>>,
}

impl<R: Ring> PartialEq for ExactMatrix<R> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.columns == other.columns
    }
}

impl<R: Ring> ExactMatrix<R> {
    pub fn zero(ring: &R, rows: usize, cols: usize) -> Self {
        ExactMatrix { ring: ring.clone(), rows, cols, columns: vec![Vec::new(); cols] }
    }

    /// From dense columns.
    pub fn from_columns(ring: &R, rows: usize, columns: Vec<Vec<R::Elem>>) -> Result<Self> {
        let mut out = Vec::with_capacity(columns.len());
        for (j, col) in columns.into_iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Input(format!("column {j} has length {}, expected {rows}", col.len())));
            }
            out.push(col.into_iter().enumerate().filter(|(_, v)| !ring.is_zero(v)).collect());
        }
        Ok(ExactMatrix { ring: ring.clone(), rows, cols: out.len(), columns: out })
    }

    /// From dense rows (convenient in tests and small examples).
    pub fn from_rows(ring: &R, rows: &[Vec<R::Elem>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut columns = vec![Vec::new(); cols];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Input(format!("row {i} has length {}, expected {cols}", row.len())));
            }
            for (j, v) in row.iter().enumerate() {
                if !ring.is_zero(v) {
                    columns[j].push((i, v.clone()));
                }
            }
        }
        Ok(ExactMatrix { ring: ring.clone(), rows: rows.len(), cols, columns })
    }

    pub fn from_triples(
        ring: &R,
        rows: usize,
        cols: usize,
        triples: impl IntoIterator<Item = (usize, usize, R::Elem)>,
    ) -> Result<Self> {
        let mut acc: Vec<BTreeMap<usize, R::Elem>> = vec![BTreeMap::new(); cols];
        for (r, c, v) in triples {
            if r >= rows || c >= cols {
                return Err(Error::Input(format!("entry ({r},{c}) outside a {rows}x{cols} matrix")));
            }
            let slot = acc[c].entry(r).or_insert_with(|| ring.zero());
            ring.add_assign(slot, &v);
        }
        let columns = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, v)| !ring.is_zero(v)).collect())
            .collect();
        Ok(ExactMatrix { ring: ring.clone(), rows, cols, columns })
    }

    /// The grid of a tensor map as a matrix.
    pub fn from_tensor_map(m: &TensorMap<R>) -> Self {
        let ring = m.ring();
        let mut columns = vec![Vec::new(); m.cols()];
        for (r, c, v) in m.triples() {
            columns[c].push((r, v.clone()));
        }
        ExactMatrix { ring: ring.clone(), rows: m.rows(), cols: m.cols(), columns }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn column(&self, j: usize) -> &[(usize, R::Elem)] {
        &self.columns[j]
    }

    pub fn dense_column(&self, j: usize) -> Vec<R::Elem> {
        let mut v = vec![self.ring.zero(); self.rows];
        for (i, x) in &self.columns[j] {
            v[*i] = x.clone();
        }
        v
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// Entries in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R::Elem)> + '_ {
        self.columns.iter().enumerate().flat_map(|(j, col)| col.iter().map(move |(i, v)| (*i, j, v)))
    }

    pub fn get(&self, row: usize, col: usize) -> R::Elem {
        match self.columns[col].binary_search_by_key(&row, |(i, _)| *i) {
            Ok(k) => self.columns[col][k].1.clone(),
            Err(_) => self.ring.zero(),
        }
    }

    /// Sparse rows, each sorted by column.
    pub fn sparse_rows(&self) -> Vec<SparseRow<R::Elem>> {
        let mut rows = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                rows[*i].push((j, v.clone()));
            }
        }
        rows
    }

    pub fn to_dense_rows(&self) -> Vec<Vec<R::Elem>> {
        let mut out = vec![vec![self.ring.zero(); self.cols]; self.rows];
        for (i, j, v) in self.entries() {
            out[i][j] = v.clone();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let rows = self.sparse_rows();
        ExactMatrix { ring: self.ring.clone(), rows: self.cols, cols: self.rows, columns: rows }
    }

    pub fn mul_vec(&self, x: &[R::Elem]) -> Result<Vec<R::Elem>> {
        if x.len() != self.cols {
            return Err(Error::Input(format!("vector of length {} for a matrix with {} columns", x.len(), self.cols)));
        }
        let mut out = vec![self.ring.zero(); self.rows];
        for (j, xj) in x.iter().enumerate() {
            if self.ring.is_zero(xj) {
                continue;
            }
            for (i, v) in &self.columns[j] {
                self.ring.mul_add_assign(&mut out[*i], v, xj);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Input(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let ring = &self.ring;
        let mut columns = Vec::with_capacity(other.cols);
        let mut acc = vec![ring.zero(); self.rows];
        let mut touched = vec![false; self.rows];
        for col in &other.columns {
            let mut idx = Vec::new();
            for (k, b) in col {
                for (i, a) in &self.columns[*k] {
                    if !touched[*i] {
                        touched[*i] = true;
                        idx.push(*i);
                    }
                    ring.mul_add_assign(&mut acc[*i], a, b);
                }
            }
            idx.sort_unstable();
            let mut out = Vec::new();
            for i in idx {
                let v = std::mem::replace(&mut acc[i], ring.zero());
                touched[i] = false;
                if !ring.is_zero(&v) {
                    out.push((i, v));
                }
            }
            columns.push(out);
        }
        Ok(ExactMatrix { ring: ring.clone(), rows: self.rows, cols: other.cols, columns })
    }
}

/// Row echelon state: pivot rows keyed by leading column.
struct Echelon<F: Field> {
    field: F,
    pivots: BTreeMap<usize, SparseRow<F::Elem>>,
}

impl<F: Field> Echelon<F> {
    fn new(field: &F) -> Self {
        Echelon { field: field.clone(), pivots: BTreeMap::new() }
    }

    fn reduce(&self, mut row: SparseRow<F::Elem>) -> SparseRow<F::Elem> {
        let mut pos = 0;
        while let Some(k) = row[pos..].iter().position(|(c, _)| self.pivots.contains_key(c)) {
            let c = row[pos + k].0;
            self.field.eliminate(&mut row, &self.pivots[&c], c);
            pos = row.partition_point(|(cc, _)| *cc <= c);
        }
        row
    }

    /// Returns the new pivot column, if the row was independent.
    fn insert(&mut self, row: SparseRow<F::Elem>) -> Option<usize> {
        let mut row = self.reduce(row);
        if row.is_empty() {
            return None;
        }
        self.field.prepare_pivot(&mut row);
        let c = row[0].0;
        self.pivots.insert(c, row);
        Some(c)
    }

    /// Back substitution: monic, fully reduced rows in pivot order.
    fn into_rref(self) -> Vec<(usize, SparseRow<F::Elem>)> {
        let field = self.field;
        let mut done: BTreeMap<usize, SparseRow<F::Elem>> = BTreeMap::new();
        for (c, mut row) in self.pivots.into_iter().rev() {
            scale_to_monic(&field, &mut row);
            let hits: Vec<(usize, F::Elem)> =
                row.iter().filter(|(j, _)| *j != c && done.contains_key(j)).cloned().collect();
            for (j, t) in hits {
                let t = field.neg(&t);
                row = row_combine(&field, &field.one(), &row, &t, &done[&j]);
            }
            done.insert(c, row);
        }
        done.into_iter().collect()
    }
}

/// Result of [`ExactMatrix::rref`].
#[derive(Clone, Debug)]
pub struct Rref<F: Field> {
    pub reduced: ExactMatrix<F>,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Outcome of [`ExactMatrix::solve`].
#[derive(Clone, Debug, PartialEq)]
pub enum Solution<E> {
    /// Particular solution with all free variables zero.
    Solved(Vec<E>),
    /// A vector `y` with `yᵀM = 0` and `yᵀb = 1`, proving `b ∉ im M`.
    Inconsistent { certificate: Vec<E> },
}

impl<E> Solution<E> {
    pub fn is_solved(&self) -> bool {
        matches!(self, Solution::Solved(_))
    }
}

impl<F: Field> ExactMatrix<F> {
    fn echelon(&self) -> Echelon<F> {
        let mut e = Echelon::new(&self.ring);
        for row in self.sparse_rows() {
            if !row.is_empty() {
                e.insert(row);
            }
        }
        e
    }

    pub fn rank(&self) -> usize {
        // eliminate along the shorter side
        if self.cols < self.rows {
            return self.transpose().echelon().pivots.len();
        }
        self.echelon().pivots.len()
    }

    /// Reduced row echelon form; zero rows are placed at the bottom.
    pub fn rref(&self) -> Rref<F> {
        let rows = self.echelon().into_rref();
        let pivots: Vec<usize> = rows.iter().map(|(c, _)| *c).collect();
        let triples = rows.iter().enumerate().flat_map(|(i, (_, row))| row.iter().map(move |(j, v)| (i, *j, v.clone())));
        let reduced = ExactMatrix::from_triples(&self.ring, self.rows, self.cols, triples).expect("in range");
        Rref { rank: pivots.len(), pivots, reduced }
    }

    /// Null space basis, one vector per free column in increasing order; the vector for
    /// free column `f` has a 1 in position `f` and zeros in the other free positions.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let field = &self.ring;
        let rows = self.echelon().into_rref();
        let mut is_pivot = vec![false; self.cols];
        for (c, _) in &rows {
            is_pivot[*c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&j| !is_pivot[j]).collect();
        let mut slot = vec![usize::MAX; self.cols];
        for (k, &f) in free.iter().enumerate() {
            slot[f] = k;
        }
        let mut basis = vec![vec![field.zero(); self.cols]; free.len()];
        for (k, &f) in free.iter().enumerate() {
            basis[k][f] = field.one();
        }
        for (c, row) in &rows {
            for (j, v) in row {
                if *j != *c {
                    basis[slot[*j]][*c] = field.neg(v);
                }
            }
        }
        basis
    }

    /// Indices of a maximal set of independent columns (the pivot columns).
    pub fn independent_columns(&self) -> Vec<usize> {
        self.echelon().pivots.keys().copied().collect()
    }

    pub fn solve(&self, b: &[F::Elem]) -> Result<Solution<F::Elem>> {
        if b.len() != self.rows {
            return Err(Error::Input(format!("right-hand side of length {} for {} rows", b.len(), self.rows)));
        }
        let field = &self.ring;
        let mut rows = self.sparse_rows();
        for (row, bi) in rows.iter_mut().zip(b) {
            if !field.is_zero(bi) {
                row.push((self.cols, bi.clone()));
            }
        }
        let mut e = Echelon::new(field);
        let mut inconsistent = false;
        for row in rows {
            if !row.is_empty() && e.insert(row) == Some(self.cols) {
                inconsistent = true;
            }
        }
        if !inconsistent {
            let mut x = vec![field.zero(); self.cols];
            for (c, row) in e.into_rref() {
                if let Some((_, v)) = row.iter().find(|(j, _)| *j == self.cols) {
                    x[c] = v.clone();
                }
            }
            return Ok(Solution::Solved(x));
        }
        // Fredholm alternative: [Mᵀ; bᵀ] y = e_last is solvable exactly when b ∉ im M.
        let mt = self.transpose();
        let mut triples: Vec<(usize, usize, F::Elem)> = mt.entries().map(|(i, j, v)| (i, j, v.clone())).collect();
        for (i, bi) in b.iter().enumerate() {
            if !field.is_zero(bi) {
                triples.push((self.cols, i, bi.clone()));
            }
        }
        let dual = ExactMatrix::from_triples(field, self.cols + 1, self.rows, triples)?;
        let mut rhs = vec![field.zero(); self.cols + 1];
        rhs[self.cols] = field.one();
        match dual.solve(&rhs)? {
            Solution::Solved(y) => Ok(Solution::Inconsistent { certificate: y }),
            Solution::Inconsistent { .. } => Err(Error::Internal("both a system and its dual are unsolvable".into())),
        }
    }
}

/// Check that `y` certifies `b ∉ im M`.
pub fn certificate_is_valid<F: Field>(m: &ExactMatrix<F>, b: &[F::Elem], y: &[F::Elem]) -> bool {
    let field = m.ring();
    if y.len() != m.rows() || b.len() != m.rows() {
        return false;
    }
    let left = m.transpose().mul_vec(y).expect("lengths checked");
    let mut dot = field.zero();
    for (u, v) in y.iter().zip(b) {
        field.mul_add_assign(&mut dot, u, v);
    }
    left.iter().all(|v| field.is_zero(v)) && dot == field.one()
}

/// Exact span membership: coordinates `c` with `Σ c_i basis_i = v`, or `None`.
pub fn in_span<F: Field>(field: &F, basis: &[Vec<F::Elem>], v: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
    for (i, b) in basis.iter().enumerate() {
        if b.len() != v.len() {
            return Err(Error::Input(format!("basis vector {i} has length {}, expected {}", b.len(), v.len())));
        }
    }
    if basis.is_empty() {
        return Ok(if v.iter().all(|x| field.is_zero(x)) { Some(Vec::new()) } else { None });
    }
    let m = ExactMatrix::from_columns(field, v.len(), basis.to_vec())?;
    Ok(match m.solve(v)? {
        Solution::Solved(x) => Some(x),
        Solution::Inconsistent { .. } => None,
    })
}

/// Inverse of a square tensor map, if it exists.
pub fn invert<F: Field>(m: &TensorMap<F>) -> Option<TensorMap<F>> {
    let n = m.rows();
    if n != m.cols() {
        return None;
    }
    let field = m.ring();
    let mat = ExactMatrix::from_tensor_map(m);
    let mut e = Echelon::new(field);
    for (i, mut row) in mat.sparse_rows().into_iter().enumerate() {
        row.push((n + i, field.one()));
        e.insert(row);
    }
    let rows = e.into_rref();
    if rows.len() != n || rows.iter().enumerate().any(|(i, (c, _))| *c != i) {
        return None;
    }
    let mut inv = TensorMap::zero(field, m.dim(), m.out_arity(), m.in_arity());
    for (i, (_, row)) in rows.into_iter().enumerate() {
        for (j, v) in row {
            if j >= n {
                inv.set(i, j - n, v);
            }
        }
    }
    Some(inv)
}
