//! Dense matrices over a [`Field`] with exact Gaussian elimination.
//!
//! Pivoting takes the first nonzero entry of each column; there is no
//! rounding in a finite field, so no magnitude pivoting is needed.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};

/// Row-major `rows x cols` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

/// Outcome of solving `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Fe>),
    NoSolution,
    Underdetermined,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut entry: impl FnMut(usize, usize) -> Fe) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(entry(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from integer rows, checking every entry against the
    /// field. All rows must have the same length.
    pub fn from_values(f: &Field, rows: &[&[u32]]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    actual: row.len(),
                });
            }
            for &v in *row {
                data.push(f.elem(v as u64)?);
            }
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// `rows x cols` matrix with entry `(i, j) = seq[i + j]`.
    ///
    /// # Panics
    /// If `seq` is shorter than `rows + cols - 1`.
    pub fn hankel(seq: &[Fe], rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |i, j| seq[i + j])
    }

    /// The Vandermonde matrix of `points` of order `order`: entry
    /// `(i, j) = points[j]^i` for `i < order`.
    pub fn vandermonde(points: &[Fe], order: usize, f: &Field) -> Matrix {
        let mut m = Matrix::zeros(order, points.len());
        for (j, &x) in points.iter().enumerate() {
            let mut acc = Fe::ONE;
            for i in 0..order {
                m.data[i * points.len() + j] = acc;
                acc = f.mul(acc, x);
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

    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, other: &Matrix, f: &Field) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                actual: other.rows,
            });
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Fe::ZERO, |acc, l| {
                f.add(acc, f.mul(self.get(i, l), other.get(l, j)))
            })
        }))
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Fe], f: &Field) -> Result<Vec<Fe>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                actual: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Fe::ZERO, |acc, (&a, &x)| f.add(acc, f.mul(a, x)))
            })
            .collect())
    }

    /// Rank by row reduction. Matrices with no rows or no columns have rank 0.
    pub fn rank(&self, f: &Field) -> usize {
        let mut work = self.data.clone();
        forward_eliminate(&mut work, self.rows, self.cols, self.cols, f).rank
    }

    /// Determinant by elimination, tracking the sign of row swaps. The
    /// empty `0 x 0` matrix has determinant 1.
    pub fn det(&self, f: &Field) -> Result<Fe> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut work = self.data.clone();
        let echelon = forward_eliminate(&mut work, n, n, n, f);
        if echelon.rank < n {
            return Ok(Fe::ZERO);
        }
        let mut det = (0..n).fold(Fe::ONE, |acc, i| f.mul(acc, work[i * n + i]));
        if echelon.swaps % 2 == 1 {
            det = f.neg(det);
        }
        Ok(det)
    }

    /// Solves `self * x = b` by elimination on the augmented
    /// matrix.
    pub fn solve(&self, b: &[Fe], f: &Field) -> Result<Solution> {
        if b.len() != self.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                actual: b.len(),
            });
        }
        let (rows, cols) = (self.rows, self.cols);
        let width = cols + 1;
        let mut work = Vec::with_capacity(rows * width);
        for i in 0..rows {
            work.extend_from_slice(self.row(i));
            work.push(b[i]);
        }
        let echelon = forward_eliminate(&mut work, rows, width, cols, f);
        // an all-zero coefficient row with a nonzero right side
        if (echelon.rank..rows).any(|i| !work[i * width + cols].is_zero()) {
            return Ok(Solution::NoSolution);
        }
        if echelon.rank < cols {
            return Ok(Solution::Underdetermined);
        }
        // back substitution; pivots are on the diagonal when rank == cols
        let mut x = vec![Fe::ZERO; cols];
        for i in (0..cols).rev() {
            let mut acc = work[i * width + cols];
            for j in i + 1..cols {
                acc = f.sub(acc, f.mul(work[i * width + j], x[j]));
            }
            x[i] = f.div(acc, work[i * width + i])?;
        }
        Ok(Solution::Unique(x))
    }
}

struct Echelon {
    rank: usize,
    swaps: usize,
}

// Reduces `work` (rows x width, row-major) to row echelon form, pivoting
// only within the first `pivot_cols` columns.
fn forward_eliminate(
    work: &mut [Fe],
    rows: usize,
    width: usize,
    pivot_cols: usize,
    f: &Field,
) -> Echelon {
    let mut rank = 0;
    let mut swaps = 0;
    for col in 0..pivot_cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !work[r * width + col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            for j in 0..width {
                work.swap(pivot * width + j, rank * width + j);
            }
            swaps += 1;
        }
        let inv = f.inv(work[rank * width + col]).expect("pivot is nonzero");
        for r in rank + 1..rows {
            let lead = work[r * width + col];
            if lead.is_zero() {
                continue;
            }
            let factor = f.mul(lead, inv);
            for j in col..width {
                let v = f.mul(factor, work[rank * width + j]);
                work[r * width + j] = f.sub(work[r * width + j], v);
            }
        }
        rank += 1;
    }
    Echelon { rank, swaps }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f7() -> Field {
        Field::prime(7).unwrap().with_alpha(Fe(5)).unwrap()
    }

    fn m(f: &Field, rows: &[&[u32]]) -> Matrix {
        Matrix::from_values(f, rows).unwrap()
    }

    fn fes(v: &[u32]) -> Vec<Fe> {
        v.iter().map(|&x| Fe(x)).collect()
    }

    // Laplace expansion along the first row.
    fn cofactor_det(a: &Matrix, f: &Field) -> Fe {
        let n = a.rows();
        if n == 0 {
            return Fe::ONE;
        }
        let mut acc = Fe::ZERO;
        for j in 0..n {
            let minor = Matrix::from_fn(n - 1, n - 1, |r, c| a.get(r + 1, if c < j { c } else { c + 1 }));
            let term = f.mul(a.get(0, j), cofactor_det(&minor, f));
            acc = if j % 2 == 0 { f.add(acc, term) } else { f.sub(acc, term) };
        }
        acc
    }

    #[test]
    fn rank_examples() {
        let f = f7();
        assert_eq!(m(&f, &[&[3], &[1], &[5], &[4]]).rank(&f), 1);
        assert_eq!(m(&f, &[&[0, 1], &[1, 5]]).rank(&f), 2);
        assert_eq!(m(&f, &[&[0, 1, 5], &[1, 5, 5]]).rank(&f), 2);
        assert_eq!(Matrix::zeros(3, 4).rank(&f), 0);
        assert_eq!(Matrix::zeros(4, 0).rank(&f), 0);
        assert_eq!(Matrix::zeros(0, 3).rank(&f), 0);
    }

    #[test]
    fn det_examples() {
        let f = f7();
        assert_eq!(m(&f, &[&[3]]).det(&f).unwrap(), Fe(3));
        assert_eq!(m(&f, &[&[0, 1], &[1, 5]]).det(&f).unwrap(), Fe(6));
        assert_eq!(m(&f, &[&[3, 1], &[1, 5]]).det(&f).unwrap(), Fe(0));
        let v = Matrix::vandermonde(&fes(&[1, 5]), 2, &f);
        assert_eq!(v, m(&f, &[&[1, 1], &[1, 5]]));
        assert_eq!(v.det(&f).unwrap(), Fe(4));
        assert_eq!(
            Matrix::zeros(2, 3).det(&f),
            Err(Error::NonSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn solve_examples() {
        let f = f7();
        assert_eq!(
            m(&f, &[&[3]]).solve(&fes(&[6]), &f).unwrap(),
            Solution::Unique(fes(&[2]))
        );
        assert_eq!(
            m(&f, &[&[0, 1], &[1, 5]]).solve(&fes(&[2, 2]), &f).unwrap(),
            Solution::Unique(fes(&[6, 2]))
        );
        assert_eq!(
            m(&f, &[&[0]]).solve(&fes(&[1]), &f).unwrap(),
            Solution::NoSolution
        );
        assert_eq!(
            m(&f, &[&[1, 1], &[2, 2]]).solve(&fes(&[1, 2]), &f).unwrap(),
            Solution::Underdetermined
        );
        // overdetermined but consistent
        assert_eq!(
            m(&f, &[&[1], &[2], &[3]]).solve(&fes(&[4, 1, 5]), &f).unwrap(),
            Solution::Unique(fes(&[4]))
        );
        assert!(matches!(
            m(&f, &[&[1]]).solve(&fes(&[1, 2]), &f),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn vandermonde_order_one_is_all_ones() {
        let f = f7();
        let v = Matrix::vandermonde(&fes(&[1, 5, 4, 6, 2, 3]), 1, &f);
        assert_eq!(v, m(&f, &[&[1, 1, 1, 1, 1, 1]]));
    }

    #[test]
    fn vandermonde_determinant_product_formula() {
        let f = f7();
        let elems: Vec<Fe> = f.elements().collect();
        // every ordered selection of distinct points of size <= 4
        fn walk(f: &Field, elems: &[Fe], chosen: &mut Vec<Fe>) {
            if !chosen.is_empty() {
                let r = chosen.len();
                let det = Matrix::vandermonde(chosen, r, f).det(f).unwrap();
                let mut expected = Fe::ONE;
                for i in 0..r {
                    for j in i + 1..r {
                        expected = f.mul(expected, f.sub(chosen[j], chosen[i]));
                    }
                }
                assert_eq!(det, expected, "{chosen:?}");
            }
            if chosen.len() == 4 {
                return;
            }
            for &x in elems {
                if !chosen.contains(&x) {
                    chosen.push(x);
                    walk(f, elems, chosen);
                    chosen.pop();
                }
            }
        }
        walk(&f, &elems, &mut Vec::new());
    }

    #[test]
    fn det_rank_and_solve_agree_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for q in [4u32, 7, 13, 256] {
            let f = Field::from_order(q).unwrap();
            for _ in 0..1000 {
                let n = rng.gen_range(1..=8);
                // bias toward singular matrices by drawing from a small range
                let hi = if rng.gen_bool(0.5) { 2.min(f.order()) } else { f.order() };
                let a = Matrix::from_fn(n, n, |_, _| Fe(rng.gen_range(0..hi)));
                let det = a.det(&f).unwrap();
                assert_eq!(!det.is_zero(), a.rank(&f) == n);
                if n <= 5 {
                    assert_eq!(det, cofactor_det(&a, &f));
                }
                let b: Vec<Fe> = (0..n).map(|_| Fe(rng.gen_range(0..f.order()))).collect();
                match a.solve(&b, &f).unwrap() {
                    Solution::Unique(x) => {
                        assert!(!det.is_zero());
                        assert_eq!(a.apply(&x, &f).unwrap(), b);
                    }
                    _ => assert!(det.is_zero()),
                }
            }
        }
    }
}
