//! Exact linear algebra over the coefficient fields.
//!
//! [`ExactMatrix`] is a small dense matrix with fraction-free-free Gaussian
//! elimination (coefficients are exact, so plain division is safe).
//! [`SparseEchelon`] is an incremental row-echelon accumulator for the large
//! sparse systems produced by the skew-primitive solver: rows are inserted one
//! at a time, reduced against the pivots seen so far, and the kernel of the
//! whole system can be read off at the end.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::coeff::{CoeffError, FieldElement, FieldSpec};

/// Dense matrix with row-major storage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
    spec: FieldSpec,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize, spec: &FieldSpec) -> ExactMatrix {
        let data = alloc::vec![spec.zero(); rows * cols];
        ExactMatrix { rows, cols, data, spec: spec.clone() }
    }

    pub fn from_rows(rows: &[Vec<FieldElement>], spec: &FieldSpec) -> ExactMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = ExactMatrix::zero(r, c, spec);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>, CoeffError> {
        assert_eq!(v.len(), self.cols);
        let mut out = alloc::vec![self.spec.zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.get(i, j);
                if !e.is_zero() {
                    let prod = e.checked_mul(&v[j])?;
                    out[i] = out[i].checked_add(&prod)?;
                }
            }
        }
        Ok(out)
    }

    pub fn multiply(&self, other: &ExactMatrix) -> Result<ExactMatrix, CoeffError> {
        assert_eq!(self.cols, other.rows);
        let mut out = ExactMatrix::zero(self.rows, other.cols, &self.spec);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.checked_mul(b)?;
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur.checked_add(&prod)?);
                }
            }
        }
        Ok(out)
    }

    /// In-place reduced row echelon form; returns the rank and pivot columns.
    pub fn rref(&mut self) -> (usize, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(src) = (pivot_row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(pivot_row, src);
            let inv = self
                .get(pivot_row, col)
                .inverse()
                .expect("pivot is nonzero");
            self.scale_row(pivot_row, &inv);
            for r in 0..self.rows {
                if r != pivot_row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).negated();
                    self.add_scaled_row(r, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (pivot_row, pivots)
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().0
    }

    /// A basis of the right kernel. Each vector is normalized so that its
    /// first nonzero entry is 1.
    pub fn nullspace(&self) -> Vec<Vec<FieldElement>> {
        let mut m = self.clone();
        let (_, pivots) = m.rref();
        let mut is_pivot = alloc::vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = alloc::vec![self.spec.zero(); self.cols];
            v[free] = self.spec.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = m.get(r, free).negated();
            }
            normalize_first_nonzero(&mut v);
            basis.push(v);
        }
        basis
    }

    /// Solve M·x = b; `None` when the system is inconsistent.
    pub fn solve(&self, b: &[FieldElement]) -> Option<Vec<FieldElement>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = ExactMatrix::zero(self.rows, self.cols + 1, &self.spec);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (_, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = alloc::vec![self.spec.zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &FieldElement) {
        for j in 0..self.cols {
            let v = self.get(r, j);
            if !v.is_zero() {
                let scaled = v.mul(factor);
                self.set(r, j, scaled);
            }
        }
    }

    /// row[dst] += factor * row[src]
    fn add_scaled_row(&mut self, dst: usize, src: usize, factor: &FieldElement) {
        for j in 0..self.cols {
            let s = self.get(src, j);
            if !s.is_zero() {
                let add = s.mul(factor);
                let cur = self.get(dst, j).clone();
                self.set(dst, j, cur.add(&add));
            }
        }
    }
}

fn normalize_first_nonzero(v: &mut [FieldElement]) {
    if let Some(first) = v.iter().find(|e| !e.is_zero()) {
        let inv = first.inverse().expect("nonzero entry");
        for e in v.iter_mut() {
            if !e.is_zero() {
                *e = e.mul(&inv);
            }
        }
    }
}

/// Incremental sparse row echelon over a fixed column set.
///
/// Rows are sparse maps column → coefficient. Each inserted row is reduced by
/// the stored pivot rows; a surviving row becomes a new pivot. The kernel of
/// all inserted rows (viewed as linear functionals on the column space) comes
/// from [`SparseEchelon::kernel_basis`].
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    cols: usize,
    spec: FieldSpec,
    /// pivot column → row (normalized to pivot coefficient 1)
    pivots: BTreeMap<usize, BTreeMap<usize, FieldElement>>,
}

impl SparseEchelon {
    pub fn new(cols: usize, spec: &FieldSpec) -> SparseEchelon {
        SparseEchelon { cols, spec: spec.clone(), pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Reduce `row` by the current pivots without inserting it.
    pub fn reduce(&self, row: &BTreeMap<usize, FieldElement>) -> BTreeMap<usize, FieldElement> {
        let mut work = row.clone();
        loop {
            let Some((&col, coeff)) = work.iter().next() else {
                return work;
            };
            let Some(pivot_row) = self.pivots.get(&col) else {
                return work;
            };
            let factor = coeff.negated();
            for (&c, v) in pivot_row {
                let add = v.mul(&factor);
                match work.remove(&c) {
                    None => {
                        if !add.is_zero() {
                            work.insert(c, add);
                        }
                    }
                    Some(cur) => {
                        let sum = cur.add(&add);
                        if !sum.is_zero() {
                            work.insert(c, sum);
                        }
                    }
                }
            }
        }
    }

    /// Insert a row; returns true when it was independent of the rows so far.
    pub fn insert(&mut self, row: BTreeMap<usize, FieldElement>) -> bool {
        let mut reduced = self.reduce(&row);
        let Some((&col, coeff)) = reduced.iter().next() else {
            return false;
        };
        let inv = coeff.inverse().expect("leading coefficient nonzero");
        for v in reduced.values_mut() {
            *v = v.mul(&inv);
        }
        // back-substitute into existing pivot rows to keep them reduced
        let mut updates = Vec::new();
        for (&p, prow) in &self.pivots {
            if let Some(c) = prow.get(&col) {
                let factor = c.negated();
                let mut new_row = prow.clone();
                for (&cc, v) in &reduced {
                    let add = v.mul(&factor);
                    match new_row.remove(&cc) {
                        None => {
                            if !add.is_zero() {
                                new_row.insert(cc, add);
                            }
                        }
                        Some(cur) => {
                            let sum = cur.add(&add);
                            if !sum.is_zero() {
                                new_row.insert(cc, sum);
                            }
                        }
                    }
                }
                updates.push((p, new_row));
            }
        }
        for (p, row) in updates {
            self.pivots.insert(p, row);
        }
        self.pivots.insert(col, reduced);
        true
    }

    /// Basis of the common kernel of all inserted rows, one vector per free
    /// column, each with first nonzero entry 1.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if self.pivots.contains_key(&free) {
                continue;
            }
            let mut v = alloc::vec![self.spec.zero(); self.cols];
            v[free] = self.spec.one();
            for (&p, prow) in &self.pivots {
                if let Some(c) = prow.get(&free) {
                    v[p] = c.negated();
                }
            }
            normalize_first_nonzero(&mut v);
            basis.push(v);
        }
        basis
    }

    /// The stored pivot rows as dense vectors, ordered by pivot column. Each
    /// row has pivot coefficient 1.
    pub fn row_basis(&self) -> Vec<Vec<FieldElement>> {
        self.pivots
            .values()
            .map(|row| {
                let mut v = alloc::vec![self.spec.zero(); self.cols];
                for (&c, e) in row {
                    v[c] = e.clone();
                }
                v
            })
            .collect()
    }

    /// Whether the dense vector lies in the row span accumulated so far.
    pub fn contains(&self, vector: &[FieldElement]) -> bool {
        let row: BTreeMap<usize, FieldElement> = vector
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        self.reduce(&row).is_empty()
    }
}
