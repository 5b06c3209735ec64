//! Points of projective space over an exact field.

use std::fmt;

use num_rational::BigRational;

use super::ring::{rat, Field};
use super::AlgebraError;

/// Nonzero coordinate vector up to a nonzero scalar. Equality is
/// proportionality, tested without division.
#[derive(Clone)]
pub struct ProjectivePoint<F: Field> {
    coords: Vec<F>,
}

impl<F: Field> ProjectivePoint<F> {
    pub fn new(coords: Vec<F>) -> Result<Self, AlgebraError> {
        if coords.is_empty() {
            return Err(AlgebraError::EmptyPoint);
        }
        if coords.iter().all(F::is_zero) {
            return Err(AlgebraError::ZeroPoint);
        }
        Ok(ProjectivePoint { coords })
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<F> {
        self.coords
    }

    /// Number of homogeneous coordinates (`n + 1` for a point of `P^n`).
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first_nonzero(&self) -> usize {
        self.coords
            .iter()
            .position(|c| !c.is_zero())
            .expect("projective points are nonzero")
    }

    /// Representative whose first nonzero coordinate is 1.
    pub fn normalized(&self) -> Self {
        let k = self.first_nonzero();
        let s = self.coords[k].inv().expect("nonzero");
        ProjectivePoint {
            coords: self.coords.iter().map(|c| c.times(&s)).collect(),
        }
    }

    /// Coordinate-wise `b`-th power.
    pub fn power(&self, b: u32) -> Self {
        ProjectivePoint {
            coords: self.coords.iter().map(|c| c.pow(b)).collect(),
        }
    }
}

impl ProjectivePoint<BigRational> {
    /// The point `[x : y]` of the projective line.
    pub fn p1(x: i64, y: i64) -> Result<Self, AlgebraError> {
        Self::new(vec![rat(x), rat(y)])
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self, AlgebraError> {
        Self::new(coords.iter().map(|&c| rat(c)).collect())
    }
}

impl<F: Field> PartialEq for ProjectivePoint<F> {
    fn eq(&self, other: &Self) -> bool {
        if self.coords.len() != other.coords.len() {
            return false;
        }
        let k = self.first_nonzero();
        if other.coords[k].is_zero() {
            return false;
        }
        let (a, b) = (&self.coords[k], &other.coords[k]);
        self.coords
            .iter()
            .zip(&other.coords)
            .all(|(x, y)| x.times(b) == y.times(a))
    }
}

impl<F: Field> fmt::Debug for ProjectivePoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " : ")?;
            }
            write!(f, "{c:?}")?;
        }
        write!(f, "]")
    }
}
