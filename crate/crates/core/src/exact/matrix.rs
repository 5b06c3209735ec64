//! Dense matrices over an exact ring.

use std::fmt;

use super::ring::{Field, Ring};
use super::AlgebraError;

#[derive(Clone, PartialEq)]
pub struct ExactMatrix<R: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> ExactMatrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, R::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::Ragged);
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[R]) -> Result<Vec<R>, AlgebraError> {
        if v.len() != self.cols {
            return Err(AlgebraError::ArityMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(R::zero(), |acc, (a, b)| acc.plus(&a.times(b)))
            })
            .collect())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::ArityMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = R::zero();
                for k in 0..self.cols {
                    acc = acc.plus(&self.get(i, k).times(other.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Fraction-free (Bareiss) determinant. Every intermediate division is
    /// exact, so this works over any integral domain with `div_exact`.
    pub fn determinant(&self) -> Result<R, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(R::one());
        }
        let mut a = self.data.clone();
        let mut negate = false;
        let mut prev = R::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                    return Ok(R::zero());
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                negate = !negate;
            }
            let pivot = a[k * n + k].clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = pivot
                        .times(&a[i * n + j])
                        .minus(&a[i * n + k].times(&a[k * n + j]));
                    a[i * n + j] = num.div_exact(&prev).ok_or(AlgebraError::InexactDivision)?;
                }
                a[i * n + k] = R::zero();
            }
            prev = pivot;
        }
        let det = a[n * n - 1].clone();
        Ok(if negate { det.negate() } else { det })
    }
}

impl<F: Field> ExactMatrix<F> {
    /// Gauss-Jordan inverse; `Singular` when the determinant vanishes.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for k in 0..n {
            let p = (k..n).find(|&i| !a.get(i, k).is_zero()).ok_or(AlgebraError::Singular)?;
            if p != k {
                for j in 0..n {
                    a.data.swap(k * n + j, p * n + j);
                    inv.data.swap(k * n + j, p * n + j);
                }
            }
            let s = a.get(k, k).inv().expect("nonzero pivot");
            for j in 0..n {
                a.set(k, j, a.get(k, j).times(&s));
                inv.set(k, j, inv.get(k, j).times(&s));
            }
            for i in 0..n {
                if i == k || a.get(i, k).is_zero() {
                    continue;
                }
                let f = a.get(i, k).clone();
                for j in 0..n {
                    a.set(i, j, a.get(i, j).minus(&f.times(a.get(k, j))));
                    inv.set(i, j, inv.get(i, j).minus(&f.times(inv.get(k, j))));
                }
            }
        }
        Ok(inv)
    }
}

impl<R: Ring> fmt::Debug for ExactMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::{rat, ratio};
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn m(rows: &[&[i64]]) -> ExactMatrix<BigRational> {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
            .unwrap()
    }

    /// Laplace expansion along the first row; exponential, test-only.
    fn cofactor_det(a: &ExactMatrix<BigRational>) -> BigRational {
        let n = a.rows();
        if n == 1 {
            return a.get(0, 0).clone();
        }
        let mut total = rat(0);
        for j in 0..n {
            let minor = ExactMatrix::from_rows(
                (1..n)
                    .map(|i| (0..n).filter(|&c| c != j).map(|c| a.get(i, c).clone()).collect())
                    .collect(),
            )
            .unwrap();
            let term = a.get(0, j) * cofactor_det(&minor);
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    #[test]
    fn identity_and_rank_one() {
        assert_eq!(ExactMatrix::<BigRational>::identity(3).determinant().unwrap(), rat(1));
        assert_eq!(m(&[&[1, 2, 3], &[2, 4, 6], &[-1, -2, -3]]).determinant().unwrap(), rat(0));
    }

    #[test]
    fn non_square_is_an_error() {
        assert!(matches!(
            m(&[&[1, 2, 3], &[4, 5, 6]]).determinant(),
            Err(AlgebraError::NotSquare { .. })
        ));
    }

    #[test]
    fn bareiss_matches_cofactor_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let rows: Vec<Vec<BigRational>> = (0..4)
                .map(|_| {
                    (0..4)
                        .map(|_| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
                        .collect()
                })
                .collect();
            let a = ExactMatrix::from_rows(rows).unwrap();
            assert_eq!(a.determinant().unwrap(), cofactor_det(&a));
        }
    }

    #[test]
    fn zero_pivot_requires_swap() {
        let a = m(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_eq!(a.determinant().unwrap(), cofactor_det(&a));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), ExactMatrix::identity(3));
        assert!(matches!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(AlgebraError::Singular)));
    }
}
