//! The symmetric map `phi: (P^1)^n -> P^n`, the power map `psi_b`, the
//! hyperplanes `H_q`, the projective Vandermonde frame change, the
//! discriminant hypersurface `D_n` with its lifts `D_n^(b)`, and the
//! parametrized strata `D_{n,k}`.

mod sample;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_integer::binomial;
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::exact::{
    elementary_symmetric_all, rat, AlgebraError, BigRational, BinaryForm, ExactMatrix,
    HomogeneousPoly, Poly, ProjectivePoint, Ring,
};

pub use sample::{Sampler, DEFAULT_SEED};

pub type Point = ProjectivePoint<BigRational>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("need at least {min} points, got {found}")]
    TooFewPoints { min: usize, found: usize },
    #[error("marked points {0} and {1} coincide")]
    DuplicateMarkedPoints(usize, usize),
    #[error("expected {expected} marked points, got {found}")]
    MarkedPointCount { expected: usize, found: usize },
    #[error("hypersurface is in the {found} frame, expected {expected}")]
    WrongFrame { expected: Frame, found: Frame },
    #[error("stratum index k = {k} outside 1..={n}")]
    BadStratum { n: usize, k: usize },
    #[error("stratum needs {expected} free parameters, got {found}")]
    ParameterCount { expected: usize, found: usize },
    #[error("membership in D_(n,k) for 1 < k < n - 1 has no implicit test")]
    UnsupportedStratum { n: usize, k: usize },
    #[error("power exponent must be positive")]
    ZeroPower,
}

/// Coordinates a hypersurface is written in: `X` (the `sigma` coordinates),
/// `Y = Van X`, or `Z` with `Y_j = Z_j^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Frame {
    X,
    Y,
    Z,
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Hypersurface {
    poly: HomogeneousPoly,
    frame: Frame,
}

impl Hypersurface {
    pub fn new(poly: HomogeneousPoly, frame: Frame) -> Self {
        Hypersurface { poly, frame }
    }

    pub fn poly(&self) -> &HomogeneousPoly {
        &self.poly
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn degree(&self) -> u32 {
        self.poly.degree()
    }

    /// Ambient dimension `n` of `P^n`.
    pub fn dimension(&self) -> usize {
        self.poly.nvars() - 1
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.len() == self.poly.nvars() && self.poly.eval(p.coords()).is_zero()
    }
}

/// `n + 1` pairwise distinct points `q_j = [x_j : y_j]` of `P^1`.
#[derive(Clone, Debug, PartialEq)]
pub struct MarkedPoints {
    points: Vec<Point>,
}

impl MarkedPoints {
    pub fn new(points: Vec<Point>) -> Result<Self, GeometryError> {
        for p in &points {
            if p.len() != 2 {
                return Err(AlgebraError::NotOnLine { len: p.len() }.into());
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(GeometryError::DuplicateMarkedPoints(i, j));
                }
            }
        }
        Ok(MarkedPoints { points })
    }

    /// `q_j = [j : 1]` for `j = 0..=n`.
    pub fn standard(n: usize) -> Self {
        MarkedPoints {
            points: (0..=n as i64)
                .map(|j| Point::p1(j, 1).expect("nonzero"))
                .collect(),
        }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn xy(&self, j: usize) -> (&BigRational, &BigRational) {
        let c = self.points[j].coords();
        (&c[0], &c[1])
    }
}

fn check_p1(points: &[Point]) -> Result<(), GeometryError> {
    for p in points {
        if p.len() != 2 {
            return Err(AlgebraError::NotOnLine { len: p.len() }.into());
        }
    }
    Ok(())
}

/// `[sigma_0 : ... : sigma_n]`.
pub fn phi_map(points: &[Point]) -> Result<Point, GeometryError> {
    if points.is_empty() {
        return Err(GeometryError::TooFewPoints { min: 1, found: 0 });
    }
    Ok(Point::new(elementary_symmetric_all(points)?)?)
}

/// True iff two of the points coincide projectively.
pub fn is_on_diagonal(points: &[Point]) -> Result<bool, GeometryError> {
    if points.len() < 2 {
        return Err(GeometryError::TooFewPoints {
            min: 2,
            found: points.len(),
        });
    }
    check_p1(points)?;
    Ok((0..points.len()).any(|i| (i + 1..points.len()).any(|j| points[i] == points[j])))
}

/// Coordinate-wise `b`-th power.
pub fn psi_power(p: &Point, b: u32) -> Result<Point, GeometryError> {
    if b == 0 {
        return Err(GeometryError::ZeroPower);
    }
    Ok(p.power(b))
}

fn hyperplane_row(x: &BigRational, y: &BigRational, n: usize) -> Vec<BigRational> {
    (0..=n)
        .map(|j| {
            let v = Ring::pow(y, j as u32).times(&Ring::pow(x, (n - j) as u32));
            if (n - j) % 2 == 1 {
                v.negate()
            } else {
                v
            }
        })
        .collect()
}

/// `H_q: sum_j (-1)^(n-j) y^j x^(n-j) X_j = 0` for `q = [x : y]`, the
/// hyperplane of `sigma`-images of tuples containing `q`.
pub fn hyperplane_h(q: &Point, n: usize) -> Result<Hypersurface, GeometryError> {
    check_p1(std::slice::from_ref(q))?;
    let c = q.coords();
    let poly = Poly::linear(&hyperplane_row(&c[0], &c[1], n));
    Ok(Hypersurface::new(HomogeneousPoly::new(n + 1, poly)?, Frame::X))
}

/// Row `i` holds the coefficients of `H_{q_i}`.
pub fn vandermonde(qs: &MarkedPoints) -> Result<ExactMatrix<BigRational>, GeometryError> {
    if qs.len() < 2 {
        return Err(GeometryError::TooFewPoints {
            min: 2,
            found: qs.len(),
        });
    }
    let n = qs.len() - 1;
    let rows = (0..=n)
        .map(|i| {
            let (x, y) = qs.xy(i);
            hyperplane_row(x, y, n)
        })
        .collect();
    Ok(ExactMatrix::from_rows(rows)?)
}

static DISCRIMINANTS: Lazy<Mutex<HashMap<usize, Arc<Hypersurface>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// `D_n`: discriminant of `sum_j (-1)^(n-j) X_j A^j B^(n-j)` as a form of
/// degree `2(n-1)` in `X_0..X_n`.
pub fn discriminant_hypersurface(n: usize) -> Result<Arc<Hypersurface>, GeometryError> {
    if n < 2 {
        return Err(AlgebraError::DegreeTooSmall { degree: n, min: 2 }.into());
    }
    if let Some(h) = DISCRIMINANTS.lock().expect("cache lock").get(&n) {
        return Ok(h.clone());
    }
    let coeffs = (0..=n)
        .map(|j| {
            let x = Poly::var(j);
            if (n - j) % 2 == 1 {
                x.negate()
            } else {
                x
            }
        })
        .collect();
    let disc = BinaryForm::new(coeffs)?.discriminant()?;
    let h = Arc::new(Hypersurface::new(HomogeneousPoly::new(n + 1, disc)?, Frame::X));
    DISCRIMINANTS
        .lock()
        .expect("cache lock")
        .insert(n, h.clone());
    Ok(h)
}

fn linear_images(m: &ExactMatrix<BigRational>) -> Vec<Poly> {
    (0..m.rows()).map(|i| Poly::linear(m.row(i))).collect()
}

/// Rewrites an `X`-frame hypersurface in `Y = Van X` by substituting
/// `X = Van^-1 Y`.
pub fn change_frame_to_y(h: &Hypersurface, qs: &MarkedPoints) -> Result<Hypersurface, GeometryError> {
    if h.frame != Frame::X {
        return Err(GeometryError::WrongFrame {
            expected: Frame::X,
            found: h.frame,
        });
    }
    let n = h.dimension();
    if qs.len() != n + 1 {
        return Err(GeometryError::MarkedPointCount {
            expected: n + 1,
            found: qs.len(),
        });
    }
    let inv = vandermonde(qs)?.inverse()?;
    let poly = h.poly.poly().substitute(&linear_images(&inv))?;
    Ok(Hypersurface::new(HomogeneousPoly::new(n + 1, poly)?, Frame::Y))
}

/// Inverse of [`change_frame_to_y`]: substitutes `Y = Van X`.
pub fn change_frame_to_x(h: &Hypersurface, qs: &MarkedPoints) -> Result<Hypersurface, GeometryError> {
    if h.frame != Frame::Y {
        return Err(GeometryError::WrongFrame {
            expected: Frame::Y,
            found: h.frame,
        });
    }
    let n = h.dimension();
    if qs.len() != n + 1 {
        return Err(GeometryError::MarkedPointCount {
            expected: n + 1,
            found: qs.len(),
        });
    }
    let van = vandermonde(qs)?;
    let poly = h.poly.poly().substitute(&linear_images(&van))?;
    Ok(Hypersurface::new(HomogeneousPoly::new(n + 1, poly)?, Frame::X))
}

/// `psi_b^-1(h)`: substitutes `Y_j = Z_j^b`.
pub fn power_lift(h: &Hypersurface, b: u32) -> Result<Hypersurface, GeometryError> {
    if h.frame != Frame::Y {
        return Err(GeometryError::WrongFrame {
            expected: Frame::Y,
            found: h.frame,
        });
    }
    if b == 0 {
        return Err(GeometryError::ZeroPower);
    }
    let poly = h.poly.poly().inflate(b);
    Ok(Hypersurface::new(
        HomogeneousPoly::new(h.poly.nvars(), poly)?,
        Frame::Z,
    ))
}

/// `D_n^(b)` in the `Z` frame for the given marked points.
pub fn lifted_discriminant(n: usize, b: u32, qs: &MarkedPoints) -> Result<Hypersurface, GeometryError> {
    let d = discriminant_hypersurface(n)?;
    power_lift(&change_frame_to_y(&d, qs)?, b)
}

/// Parameters of a point of `D_{n,k}`: free points `p_1..p_{k-1}` and the
/// point `[u : v]` of multiplicity `n - k + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct StratumParams {
    n: usize,
    k: usize,
    free: Vec<Point>,
    uv: Point,
}

impl StratumParams {
    pub fn new(n: usize, k: usize, free: Vec<Point>, uv: Point) -> Result<Self, GeometryError> {
        if k == 0 || k > n {
            return Err(GeometryError::BadStratum { n, k });
        }
        if free.len() != k - 1 {
            return Err(GeometryError::ParameterCount {
                expected: k - 1,
                found: free.len(),
            });
        }
        check_p1(&free)?;
        check_p1(std::slice::from_ref(&uv))?;
        Ok(StratumParams { n, k, free, uv })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The underlying tuple of `n` points of `P^1`.
    pub fn tuple(&self) -> Vec<Point> {
        let mut t = self.free.clone();
        t.extend(std::iter::repeat_n(self.uv.clone(), self.n - self.k + 1));
        t
    }
}

/// `Y_j = (u y_j - v x_j)^(n-k+1) prod_{i<k} (u_i y_j - v_i x_j)`.
pub fn param_stratum(sp: &StratumParams, qs: &MarkedPoints) -> Result<Point, GeometryError> {
    if qs.len() != sp.n + 1 {
        return Err(GeometryError::MarkedPointCount {
            expected: sp.n + 1,
            found: qs.len(),
        });
    }
    let factor = |p: &Point, x: &BigRational, y: &BigRational| {
        let c = p.coords();
        c[0].times(y).minus(&c[1].times(x))
    };
    let coords = (0..=sp.n)
        .map(|j| {
            let (x, y) = qs.xy(j);
            sp.free.iter().fold(
                Ring::pow(&factor(&sp.uv, x, y), (sp.n - sp.k + 1) as u32),
                |acc, p| acc.times(&factor(p, x, y)),
            )
        })
        .collect();
    Ok(Point::new(coords)?)
}

/// Whether `psi_b(z)` lies on the `Y`-frame image of `D_{n,k}`.
///
/// `k = n` is all of `P^n`; `k = n - 1` is `D_n` itself; for `k = 1` the
/// point `Van^-1 psi_b(z)` must be `[C(n,j) u^j v^(n-j)]_j` for some `[u : v]`.
pub fn is_on_lifted_stratum(
    z: &Point,
    n: usize,
    k: usize,
    b: u32,
    qs: &MarkedPoints,
) -> Result<bool, GeometryError> {
    if k == 0 || k > n {
        return Err(GeometryError::BadStratum { n, k });
    }
    if z.len() != n + 1 {
        return Err(AlgebraError::ArityMismatch {
            expected: n + 1,
            found: z.len(),
        }
        .into());
    }
    if qs.len() != n + 1 {
        return Err(GeometryError::MarkedPointCount {
            expected: n + 1,
            found: qs.len(),
        });
    }
    let y = psi_power(z, b)?;
    if k == n {
        return Ok(true);
    }
    // D_n^Y(y) = D_n(Van^-1 y), evaluated without expanding D_n^Y
    let x = vandermonde(qs)?.inverse()?.mul_vec(y.coords())?;
    if k + 1 == n {
        return Ok(discriminant_hypersurface(n)?.poly().eval(&x).is_zero());
    }
    if k == 1 {
        let w: Vec<BigRational> = x
            .iter()
            .enumerate()
            .map(|(j, c)| c.clone() / rat(binomial(n as i64, j as i64)))
            .collect();
        // rank one Hankel matrix [[w_0 .. w_{n-1}], [w_1 .. w_n]]
        let rank_one = (0..n).all(|i| {
            (i + 1..n).all(|j| (&w[i] * &w[j + 1] - &w[i + 1] * &w[j]).is_zero())
        });
        return Ok(rank_one);
    }
    Err(GeometryError::UnsupportedStratum { n, k })
}

/// A point of `D_{n,1}^(b)` with marked points chosen so that the lift is
/// rational: `u y_j - v x_j = w_j^b`, hence `Y_j = w_j^(bn)` and
/// `Z_j = w_j^n`.
#[derive(Clone, Debug)]
pub struct LiftedSample {
    pub qs: MarkedPoints,
    pub uv: Point,
    pub z: Point,
}

pub fn sample_lifted_curve_point(
    sampler: &mut Sampler,
    n: usize,
    b: u32,
) -> Result<LiftedSample, GeometryError> {
    loop {
        let u = sampler.scalar();
        let v = rat(sampler.nonzero());
        let ws: Vec<BigRational> = (0..=n).map(|_| rat(sampler.nonzero())).collect();
        let points: Vec<Point> = ws
            .iter()
            .map(|w| {
                let y = sampler.scalar();
                let x = (&u * &y - Ring::pow(w, b)) / &v;
                Point::new(vec![x, y])
            })
            .collect::<Result<_, _>>()?;
        let Ok(qs) = MarkedPoints::new(points) else {
            continue;
        };
        let z = Point::new(ws.iter().map(|w| Ring::pow(w, n as u32)).collect())?;
        let uv = Point::new(vec![u, v])?;
        return Ok(LiftedSample { qs, uv, z });
    }
}

#[cfg(test)]
mod tests;
