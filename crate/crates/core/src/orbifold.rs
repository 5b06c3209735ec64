//! Orbifolds `(P^1, b_0 q_0 + ... + b_m q_m)`: Euler characteristics, the
//! uniformization trichotomy, and the closed-form group orders and Euler
//! numbers attached to the coverings of the discriminant complement.

use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{rat, ratio};
use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrbifoldError {
    #[error("branch weight {0} is below 2")]
    WeightTooSmall(u64),
    #[error("n = {0} is below the minimum 2")]
    TooFewStrands(u64),
    #[error("b must be positive")]
    ZeroB,
    #[error("gcd(n, b) = gcd({n}, {b}) != 1")]
    NotCoprime { n: u64, b: u64 },
    #[error("finite weights required")]
    InfiniteWeight,
    #[error("arithmetic overflow")]
    Overflow,
    #[error("cover label {label} disagrees with Euler number {euler}")]
    InconsistentCover { label: CoverLabel, euler: i128 },
}

/// Branch weights on distinct marked points of `P^1`; each weight is at
/// least 2 or infinite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbifoldSignature {
    weights: Vec<Weight>,
}

impl OrbifoldSignature {
    pub fn new(weights: Vec<Weight>) -> Result<Self, OrbifoldError> {
        if let Some(b) = weights.iter().filter_map(|w| w.finite()).find(|&b| b < 2) {
            return Err(OrbifoldError::WeightTooSmall(b));
        }
        Ok(OrbifoldSignature { weights })
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }
}

impl fmt::Display for OrbifoldSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self.weights.iter().map(Weight::to_string).collect();
        write!(f, "F({})", ws.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum UniformizationType {
    Sphere,
    Euclidean,
    Hyperbolic,
    Bad,
}

impl fmt::Display for UniformizationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            UniformizationType::Sphere => "SPHERE",
            UniformizationType::Euclidean => "EUCLIDEAN",
            UniformizationType::Hyperbolic => "HYPERBOLIC",
            UniformizationType::Bad => "BAD",
        };
        write!(f, "{s}")
    }
}

/// `2 - sum (1 - 1/b_i)`.
pub fn orb_euler_char(sig: &OrbifoldSignature) -> BigRational {
    sig.weights
        .iter()
        .fold(rat(2), |acc, w| acc - (rat(1) - w.reciprocal()))
}

fn reciprocal_sum(ws: &[Weight]) -> BigRational {
    ws.iter().map(|w| w.reciprocal()).fold(rat(0), |a, b| a + b)
}

/// Uniformization type following the explicit case lists: two equal finite
/// weights or a spherical triple are covered by `P^1`; Euclidean triples,
/// `(2,2,2,2)`, `(inf,inf)` and `(2,2,inf)` by `C`; everything else with at
/// least three points by the disc. One point, or two unequal weights, is bad.
pub fn classify_orbifold(sig: &OrbifoldSignature) -> UniformizationType {
    use UniformizationType::*;
    let ws = sig.weights();
    match ws {
        [] => Sphere,
        [_] => Bad,
        [x, y] => match (x, y) {
            (Weight::Finite(p), Weight::Finite(q)) if p == q => Sphere,
            (Weight::Infinite, Weight::Infinite) => Euclidean,
            _ => Bad,
        },
        [_, _, _] => {
            if ws.iter().any(|w| w.is_infinite()) {
                let mut sorted = ws.to_vec();
                sorted.sort();
                if sorted == [Weight::Finite(2), Weight::Finite(2), Weight::Infinite] {
                    Euclidean
                } else {
                    Hyperbolic
                }
            } else {
                let s = reciprocal_sum(ws);
                match s.cmp(&rat(1)) {
                    std::cmp::Ordering::Greater => Sphere,
                    std::cmp::Ordering::Equal => Euclidean,
                    std::cmp::Ordering::Less => Hyperbolic,
                }
            }
        }
        [_, _, _, _] if ws.iter().all(|w| *w == Weight::Finite(2)) => Euclidean,
        _ => Hyperbolic,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TriangleOrder {
    Finite(u64),
    Infinite,
}

impl fmt::Display for TriangleOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangleOrder::Finite(k) => write!(f, "{k}"),
            TriangleOrder::Infinite => write!(f, "INFINITE"),
        }
    }
}

fn integer_value(q: &BigRational) -> Option<u64> {
    if q.is_integer() {
        q.to_integer().to_u64()
    } else {
        None
    }
}

/// `2 (1/b0 + 1/b1 + 1/b2 - 1)^-1` for spherical triples.
pub fn triangle_order(b0: Weight, b1: Weight, b2: Weight) -> Result<TriangleOrder, OrbifoldError> {
    let ws = [b0, b1, b2];
    if let Some(b) = ws.iter().filter_map(|w| w.finite()).find(|&b| b < 2) {
        return Err(OrbifoldError::WeightTooSmall(b));
    }
    let excess = reciprocal_sum(&ws) - rat(1);
    if !excess.is_positive() {
        return Ok(TriangleOrder::Infinite);
    }
    let order = rat(2) / excess;
    Ok(TriangleOrder::Finite(
        integer_value(&order).expect("spherical triangle orders are integers"),
    ))
}

fn factorial(n: u64) -> Result<u128, OrbifoldError> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k).ok_or(OrbifoldError::Overflow))
}

fn upow(b: u64, e: u64) -> Result<u128, OrbifoldError> {
    let e = u32::try_from(e).map_err(|_| OrbifoldError::Overflow)?;
    (b as u128).checked_pow(e).ok_or(OrbifoldError::Overflow)
}

/// `n! b^n`, the order of the braid group of `F(b, b)` on `n` strands.
pub fn corollary_order_hbb(n: u64, b: u64) -> Result<u128, OrbifoldError> {
    if n < 2 {
        return Err(OrbifoldError::TooFewStrands(n));
    }
    if b == 0 {
        return Err(OrbifoldError::ZeroB);
    }
    factorial(n)?
        .checked_mul(upow(b, n)?)
        .ok_or(OrbifoldError::Overflow)
}

/// `n! 2^n (1/b0 + 1/b1 + 1/b2 - 1)^-n`, reading the bracket with
/// reciprocals; `Infinite` off the spherical range.
pub fn corollary_order_htriple(
    n: u64,
    b0: u64,
    b1: u64,
    b2: u64,
) -> Result<TriangleOrder, OrbifoldError> {
    if n < 2 {
        return Err(OrbifoldError::TooFewStrands(n));
    }
    for b in [b0, b1, b2] {
        if b < 2 {
            return Err(OrbifoldError::WeightTooSmall(b));
        }
    }
    let excess = ratio(1, b0 as i64) + ratio(1, b1 as i64) + ratio(1, b2 as i64) - rat(1);
    if !excess.is_positive() {
        return Ok(TriangleOrder::Infinite);
    }
    let base = rat(2) / excess;
    let value = rat(factorial(n)? as i64) * num_traits::pow(base, n as usize);
    integer_value(&value)
        .map(TriangleOrder::Finite)
        .ok_or(OrbifoldError::Overflow)
}

/// The same order with the bracket read literally as `b0 + b1 + b2 - 1`;
/// kept only to show that this reading is not integral.
pub fn corollary_order_htriple_literal(n: u64, b0: u64, b1: u64, b2: u64) -> BigRational {
    let bracket = rat((b0 + b1 + b2) as i64 - 1);
    rat(factorial(n).unwrap_or(0) as i64) * rat(2i64.pow(n as u32)) / num_traits::pow(bracket, n as usize)
}

fn check_coprime(n: u64, b: u64) -> Result<(), OrbifoldError> {
    if n < 2 {
        return Err(OrbifoldError::TooFewStrands(n));
    }
    if b == 0 {
        return Err(OrbifoldError::ZeroB);
    }
    if n.gcd(&b) != 1 {
        return Err(OrbifoldError::NotCoprime { n, b });
    }
    Ok(())
}

/// `e = b^(n-1) (n + 1 + b - n b)`, the Euler number of the lifted
/// rational normal curve.
pub fn euler_dn1b(n: u64, b: u64) -> Result<i128, OrbifoldError> {
    check_coprime(n, b)?;
    let p = i128::try_from(upow(b, n - 1)?).map_err(|_| OrbifoldError::Overflow)?;
    let (n, b) = (n as i128, b as i128);
    p.checked_mul(n + 1 + b - n * b).ok_or(OrbifoldError::Overflow)
}

/// Riemann-Hurwitz for the maximal abelian cover of `P^1` branched with
/// index `b` over `n + 1` points: degree `d = b^n`,
/// `e = d (2 - (n + 1)) + (n + 1) d / b`.
pub fn riemann_hurwitz_euler(n: u64, b: u64) -> Result<i128, OrbifoldError> {
    check_coprime(n, b)?;
    let d = i128::try_from(upow(b, n)?).map_err(|_| OrbifoldError::Overflow)?;
    let points = n as i128 + 1;
    let ramified = points * d / b as i128;
    Ok(d * (2 - points) + ramified)
}

/// Component degrees of the uniformization of the lifted discriminant
/// orbifold and the resulting degree `n! b^(n^2 - n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringDegree {
    /// maximal abelian cover of the curve, `b^(n^2)`
    pub abelian: u128,
    /// symmetric covering, `n!`
    pub symmetric: u128,
    /// power map, `b^n`
    pub power: u128,
    pub degree: u128,
}

pub fn covering_degree_theorem5(n: u64, b: u64) -> Result<CoveringDegree, OrbifoldError> {
    check_coprime(n, b)?;
    let abelian = upow(b, n * n)?;
    let symmetric = factorial(n)?;
    let power = upow(b, n)?;
    let degree = abelian
        .checked_mul(symmetric)
        .ok_or(OrbifoldError::Overflow)?
        / power;
    let closed = symmetric
        .checked_mul(upow(b, n * n - n)?)
        .ok_or(OrbifoldError::Overflow)?;
    assert_eq!(degree, closed, "component degrees disagree with n! b^(n^2-n)");
    Ok(CoveringDegree {
        abelian,
        symmetric,
        power,
        degree,
    })
}

/// Universal cover of the `n`-fold product of the lifted curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoverLabel {
    #[serde(rename = "(P1)^n")]
    ProjectiveLines,
    #[serde(rename = "C^n")]
    AffineSpace,
    #[serde(rename = "(B1)^n")]
    Balls,
}

impl fmt::Display for CoverLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CoverLabel::ProjectiveLines => "(P1)^n",
            CoverLabel::AffineSpace => "C^n",
            CoverLabel::Balls => "(B1)^n",
        };
        write!(f, "{s}")
    }
}

impl CoverLabel {
    pub fn render(self, n: u64) -> String {
        match self {
            CoverLabel::ProjectiveLines => format!("(P1)^{n}"),
            CoverLabel::AffineSpace => format!("C^{n}"),
            CoverLabel::Balls => format!("(B1)^{n}"),
        }
    }
}

pub fn universal_cover_label(n: u64, b: u64) -> Result<CoverLabel, OrbifoldError> {
    let euler = euler_dn1b(n, b)?;
    let label = if b == 1 {
        CoverLabel::ProjectiveLines
    } else if (n, b) == (3, 2) || (n, b) == (2, 3) {
        CoverLabel::AffineSpace
    } else {
        CoverLabel::Balls
    };
    let consistent = match label {
        CoverLabel::ProjectiveLines => euler > 0,
        CoverLabel::AffineSpace => euler == 0,
        CoverLabel::Balls => euler < 0,
    };
    if !consistent {
        return Err(OrbifoldError::InconsistentCover { label, euler });
    }
    Ok(label)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerReport {
    pub n: u64,
    pub b: u64,
    pub euler: i128,
    pub degree: u128,
    pub cover: String,
}

pub fn euler_report(n: u64, b: u64) -> Result<EulerReport, OrbifoldError> {
    Ok(EulerReport {
        n,
        b,
        euler: euler_dn1b(n, b)?,
        degree: covering_degree_theorem5(n, b)?.degree,
        cover: universal_cover_label(n, b)?.render(n),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ConjectureVerdict {
    Finite,
    Solvable,
    Big,
}

/// `2(n-1)/a + sum 1/b_i - (n + m - 2)` for weights `b_0..b_m`.
pub fn conjecture_margin(n: u64, a: Weight, bs: &[Weight]) -> Result<BigRational, OrbifoldError> {
    if n < 2 {
        return Err(OrbifoldError::TooFewStrands(n));
    }
    let m = bs.len() as i64 - 1;
    let lhs = rat(2 * (n as i64 - 1)) * a.reciprocal() + reciprocal_sum(bs);
    Ok(lhs - rat(n as i64 + m - 2))
}

pub fn conjecture_verdict(margin: &BigRational) -> ConjectureVerdict {
    if margin.is_positive() {
        ConjectureVerdict::Finite
    } else if margin.is_zero() {
        ConjectureVerdict::Solvable
    } else {
        ConjectureVerdict::Big
    }
}
