//! Dense exact linear algebra by fraction-free elimination.
//!
//! Bareiss elimination only ever divides exactly, so it runs unchanged over
//! the integers and over polynomial rings. Rank over `Q` of an integer matrix
//! and nonvanishing of a polynomial determinant are the two questions asked.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::polyring::Polynomial;
use crate::scalar::{Coefficient, IntegralDomain};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

pub type IntMatrix<C> = Matrix<C>;
pub type PolyMatrix<C> = Matrix<Polynomial<C>>;

impl<T: IntegralDomain> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![T::zero_element(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one_element();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        Matrix { rows: n, cols, entries: rows.into_iter().flatten().collect() }
    }

    /// An empty matrix with a fixed column count, to be filled by `push_row`.
    pub fn with_cols(cols: usize) -> Self {
        Matrix { rows: 0, cols, entries: Vec::new() }
    }

    pub fn push_row(&mut self, row: Vec<T>) {
        assert_eq!(row.len(), self.cols, "row length");
        self.entries.extend(row);
        self.rows += 1;
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn map<U: IntegralDomain>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    fn into_rows(self) -> Vec<Vec<T>> {
        if self.cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        self.entries.chunks(self.cols).map(<[T]>::to_vec).collect()
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.entries[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.entries[i * self.cols + j]
    }
}

/// Bareiss elimination to row echelon form. Returns the rank and the last
/// pivot, which for a square matrix of full rank is `±det`.
fn bareiss<T: IntegralDomain>(m: Matrix<T>) -> (usize, T, bool) {
    let cols = m.cols;
    let mut rows = m.into_rows();
    let mut prev = T::one_element();
    let mut rank = 0;
    let mut swaps = false;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero_element()) else {
            continue;
        };
        if p != rank {
            rows.swap(p, rank);
            swaps = !swaps;
        }
        let (top, rest) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[col].clone();
        for row in rest.iter_mut() {
            let a = row[col].clone();
            for j in col + 1..cols {
                let keep = !row[j].is_zero_element();
                let elim = !a.is_zero_element() && !pivot_row[j].is_zero_element();
                if !keep && !elim {
                    continue;
                }
                let mut v = row[j].mul_ref(&pivot);
                if elim {
                    v = v.sub_ref(&a.mul_ref(&pivot_row[j]));
                }
                row[j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
            row[col] = T::zero_element();
        }
        prev = pivot;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    (rank, prev, swaps)
}

/// Rank over the fraction field.
pub fn rank<T: IntegralDomain>(m: &Matrix<T>) -> usize {
    bareiss(m.clone()).0
}

/// Rank over `Q` of an integer matrix by sparse row echelon reduction,
/// dividing every new row by its content. Agrees with [`rank`]; much faster
/// on the sparse, small-entry constraint matrices of graph cohomology.
pub fn integer_rank<C: Coefficient>(m: &Matrix<C>) -> usize {
    let mut echelon = SparseEchelon::new();
    for i in 0..m.rows {
        let row = m.row(i).iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| (j, c.clone())).collect();
        echelon.insert(row);
    }
    echelon.rank()
}

/// Rows kept in echelon form, indexed by leading column.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon<C> {
    pivots: std::collections::BTreeMap<usize, Vec<(usize, C)>>,
}

impl<C: Coefficient> SparseEchelon<C> {
    pub fn new() -> Self {
        SparseEchelon { pivots: std::collections::BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces a sparse row (sorted by column, no zeros) against the stored
    /// pivots and keeps it if something survives. Returns whether the rank
    /// grew.
    pub fn insert(&mut self, mut row: Vec<(usize, C)>) -> bool {
        loop {
            let Some(&(lead, _)) = row.first() else { return false };
            let Some(pivot) = self.pivots.get(&lead) else { break };
            row = eliminate(&row, pivot);
        }
        let lead = row[0].0;
        self.pivots.insert(lead, row);
        true
    }
}

/// `p*row - a*pivot` with `a`, `p` the leading entries, divided by its content.
fn eliminate<C: Coefficient>(row: &[(usize, C)], pivot: &[(usize, C)]) -> Vec<(usize, C)> {
    let g = row[0].1.gcd(&pivot[0].1);
    let a = row[0].1.div_exact(&g).expect("gcd divides");
    let p = pivot[0].1.div_exact(&g).expect("gcd divides");
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        let (col, v) = if ci < cj {
            i += 1;
            (ci, row[i - 1].1.mul_ref(&p))
        } else if cj < ci {
            j += 1;
            (cj, C::zero_element().sub_ref(&pivot[j - 1].1.mul_ref(&a)))
        } else {
            i += 1;
            j += 1;
            (ci, row[i - 1].1.mul_ref(&p).sub_ref(&pivot[j - 1].1.mul_ref(&a)))
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    let content = out.iter().fold(C::zero_element(), |acc, (_, c)| acc.gcd(c));
    if !content.is_zero() && !content.is_one() {
        for (_, c) in &mut out {
            *c = c.div_exact(&content).expect("content divides");
        }
    }
    out
}

/// `cols - rank`.
pub fn kernel_dimension<T: IntegralDomain>(m: &Matrix<T>) -> usize {
    m.cols - rank(m)
}

/// Exact determinant of a square matrix.
pub fn determinant<T: IntegralDomain>(m: &Matrix<T>) -> T {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    if m.rows == 0 {
        return T::one_element();
    }
    let (rank, last, swapped) = bareiss(m.clone());
    if rank < m.rows {
        T::zero_element()
    } else if swapped {
        T::zero_element().sub_ref(&last)
    } else {
        last
    }
}

/// Whether the determinant of a square polynomial matrix is a nonzero
/// polynomial. Tries a few seeded random integer points first; only if every
/// evaluation vanishes does it expand the determinant exactly.
pub fn nonzero_determinant<C: Coefficient>(m: &PolyMatrix<C>, seed: u64) -> bool {
    const TRIALS: usize = 4;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..TRIALS {
        let point = [(); 3].map(|_| C::from_int(rng.gen_range(-1000..=1000)));
        let evaluated = m.map(|p| p.evaluate(&point));
        if !determinant(&evaluated).is_zero_element() {
            return true;
        }
    }
    !determinant(m).is_zero()
}
