//! Binary forms, elementary symmetric functions of points of `P^1`,
//! resultants and discriminants.

use num_rational::BigRational;

use super::matrix::ExactMatrix;
use super::point::ProjectivePoint;
use super::ring::{Field, Ring};
use super::unipoly::UniPoly;
use super::AlgebraError;

/// `sum_j c_j A^j B^(n-j)`; `coeffs[j]` multiplies `A^j B^(n-j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> BinaryForm<R> {
    pub fn new(coeffs: Vec<R>) -> Result<Self, AlgebraError> {
        if coeffs.is_empty() {
            return Err(AlgebraError::EmptyInput);
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }

    /// `dP/dA`, a form of degree `n - 1`.
    pub fn derivative_a(&self) -> Self {
        let n = self.degree();
        BinaryForm {
            coeffs: (1..=n.max(1))
                .map(|j| {
                    if j > n {
                        R::zero()
                    } else {
                        self.coeffs[j].times(&R::from_i64(j as i64))
                    }
                })
                .collect(),
        }
    }

    /// `dP/dB`, a form of degree `n - 1`.
    pub fn derivative_b(&self) -> Self {
        let n = self.degree();
        BinaryForm {
            coeffs: (0..n.max(1))
                .map(|j| {
                    if j >= n {
                        R::zero()
                    } else {
                        self.coeffs[j].times(&R::from_i64((n - j) as i64))
                    }
                })
                .collect(),
        }
    }

    /// Dehomogenization `P(A, 1)`.
    pub fn dehomogenize(&self) -> UniPoly<R> {
        UniPoly::new(self.coeffs.clone())
    }

    pub fn eval(&self, a: &R, b: &R) -> R {
        let n = self.degree() as u32;
        self.coeffs.iter().enumerate().fold(R::zero(), |acc, (j, c)| {
            acc.plus(&c.times(&a.pow(j as u32)).times(&b.pow(n - j as u32)))
        })
    }

    /// Discriminant normalized as `(-1)^(n(n-1)/2) * Res(P_A, P_B) / n^(n-2)`,
    /// so that `a A^2 + b AB + c B^2` has discriminant `b^2 - 4ac` and
    /// `prod (u_i A - v_i B)` has discriminant `prod_{i<j} (u_i v_j - u_j v_i)^2`.
    pub fn discriminant(&self) -> Result<R, AlgebraError> {
        let n = self.degree();
        if n < 2 {
            return Err(AlgebraError::DegreeTooSmall { degree: n, min: 2 });
        }
        let res = binary_resultant(self.derivative_a().coeffs(), self.derivative_b().coeffs())?;
        let norm = R::from_i64((n as i64).pow(n as u32 - 2));
        let q = res.div_exact(&norm).ok_or(AlgebraError::InexactDivision)?;
        Ok(if (n * (n - 1) / 2) % 2 == 1 { q.negate() } else { q })
    }
}

impl<F: Field> BinaryForm<F> {
    /// `prod_i (u_i A - v_i B)` for points `[u_i : v_i]`.
    pub fn from_roots(points: &[ProjectivePoint<F>]) -> Result<Self, AlgebraError> {
        if points.is_empty() {
            return Err(AlgebraError::EmptyInput);
        }
        let mut coeffs = vec![F::one()];
        for p in points {
            let (u, v) = p1_coords(p)?;
            let mut next = vec![F::zero(); coeffs.len() + 1];
            for (j, c) in coeffs.iter().enumerate() {
                // multiplying by A shifts up, by -vB keeps the index
                next[j + 1] = next[j + 1].plus(&c.times(u));
                next[j] = next[j].minus(&c.times(v));
            }
            coeffs = next;
        }
        Ok(BinaryForm { coeffs })
    }
}

fn p1_coords<F: Field>(p: &ProjectivePoint<F>) -> Result<(&F, &F), AlgebraError> {
    match p.coords() {
        [x, y] => Ok((x, y)),
        c => Err(AlgebraError::NotOnLine { len: c.len() }),
    }
}

/// `sigma_j(p_1..p_n) = sum_{|S|=j} prod_{a in S} x_a prod_{b not in S} y_b`
/// with the given representatives `p_i = [x_i : y_i]`.
pub fn elementary_symmetric<F: Field>(
    j: usize,
    points: &[ProjectivePoint<F>],
) -> Result<F, AlgebraError> {
    let n = points.len();
    if j > n {
        return Err(AlgebraError::IndexOutOfRange { index: j, max: n });
    }
    Ok(elementary_symmetric_all(points)?.swap_remove(j))
}

/// All of `sigma_0..sigma_n` at once: coefficients of `prod (x_i T + y_i)`.
pub fn elementary_symmetric_all<F: Field>(
    points: &[ProjectivePoint<F>],
) -> Result<Vec<F>, AlgebraError> {
    let mut acc = vec![F::one()];
    for p in points {
        let (x, y) = p1_coords(p)?;
        let mut next = vec![F::zero(); acc.len() + 1];
        for (k, c) in acc.iter().enumerate() {
            next[k + 1] = next[k + 1].plus(&c.times(x));
            next[k] = next[k].plus(&c.times(y));
        }
        acc = next;
    }
    Ok(acc)
}

/// Sylvester matrix of two coefficient vectors given lowest degree first,
/// with formal degrees `f.len() - 1` and `g.len() - 1`.
pub fn sylvester_matrix<R: Ring>(f: &[R], g: &[R]) -> ExactMatrix<R> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut s = ExactMatrix::zeros(size, size);
    for i in 0..n {
        for (k, c) in f.iter().rev().enumerate() {
            s.set(i, i + k, c.clone());
        }
    }
    for i in 0..m {
        for (k, c) in g.iter().rev().enumerate() {
            s.set(n + i, i + k, c.clone());
        }
    }
    s
}

/// Resultant of two forms of formal degrees `f.len()-1`, `g.len()-1`.
pub fn binary_resultant<R: Ring>(f: &[R], g: &[R]) -> Result<R, AlgebraError> {
    if f.iter().all(R::is_zero) || g.iter().all(R::is_zero) {
        return Err(AlgebraError::ZeroPolynomial);
    }
    sylvester_matrix(f, g).determinant()
}

/// Resultant of two univariate polynomials (Sylvester determinant), so that
/// `res(x - a, x - b) = a - b`.
pub fn resultant<R: Ring>(f: &UniPoly<R>, g: &UniPoly<R>) -> Result<R, AlgebraError> {
    if f.is_zero() || g.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    binary_resultant(f.coeffs(), g.coeffs())
}

/// Convenience: discriminant of the form with roots `points`.
pub fn discriminant_of_roots(points: &[ProjectivePoint<BigRational>]) -> Result<BigRational, AlgebraError> {
    BinaryForm::from_roots(points)?.discriminant()
}
