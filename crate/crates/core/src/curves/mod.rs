//! The curves `L^(r/s)`: the `(Z/s)^2` orbit of a line `ax + by + cz = 0`,
//! its exact intersection census over `Q(w_s)`, the nodality certificate
//! for `L^(1/s)`, and the singularity census of `L^(r/s)`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::exact::{
    rational_text, AlgebraError, BigRational, CyclotomicScalar, ProjectivePoint, Ring,
};

pub type CyclotomicPoint = ProjectivePoint<CyclotomicScalar>;

/// Coefficient triples tried in order when the default is rejected.
pub const COEFFICIENT_TRIPLES: [(i64, i64, i64); 4] = [(1, 2, 5), (1, 3, 7), (2, 3, 11), (3, 5, 13)];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error("line coefficients must be nonzero")]
    ZeroCoefficient,
    #[error("orbit size s must be positive")]
    ZeroOrder,
    #[error("lines {0} and {1} are proportional")]
    ProportionalLines(usize, usize),
    #[error("r = {r} and s = {s} are not coprime")]
    NotCoprime { r: u64, s: u64 },
    #[error("r and s must be at least 1")]
    NonPositive,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `L_ij: a w^i x + b w^j y + c z = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitLine {
    pub i: u32,
    pub j: u32,
    pub coeffs: [CyclotomicScalar; 3],
}

pub fn build_orbit(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    s: u32,
) -> Result<Vec<OrbitLine>, CurveError> {
    if s == 0 {
        return Err(CurveError::ZeroOrder);
    }
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(CurveError::ZeroCoefficient);
    }
    let scalar = |q: &BigRational| CyclotomicScalar::rational(q.clone()).embed(s);
    let (a, b, c) = (scalar(a), scalar(b), scalar(c));
    let mut lines = Vec::with_capacity((s * s) as usize);
    for i in 0..s {
        for j in 0..s {
            lines.push(OrbitLine {
                i,
                j,
                coeffs: [
                    a.times(&CyclotomicScalar::omega_pow(s, i as i64)),
                    b.times(&CyclotomicScalar::omega_pow(s, j as i64)),
                    c.clone(),
                ],
            });
        }
    }
    Ok(lines)
}

fn cross(l: &[CyclotomicScalar; 3], m: &[CyclotomicScalar; 3]) -> [CyclotomicScalar; 3] {
    let det = |p: usize, q: usize| l[p].times(&m[q]).minus(&l[q].times(&m[p]));
    [det(1, 2), det(2, 0), det(0, 1)]
}

fn point_key(p: &CyclotomicPoint) -> Vec<(u32, Vec<BigRational>)> {
    p.coords().iter().map(CyclotomicScalar::key).collect()
}

fn is_vertex(p: &CyclotomicPoint) -> bool {
    p.coords().iter().filter(|c| c.is_zero()).count() == 2
}

#[derive(Clone, Debug)]
pub struct IntersectionPoint {
    /// Normalized so the first nonzero coordinate is 1.
    pub point: CyclotomicPoint,
    /// Indices into the line list, ascending.
    pub lines: Vec<usize>,
    pub on_triangle: bool,
}

impl IntersectionPoint {
    pub fn multiplicity(&self) -> usize {
        self.lines.len()
    }
}

#[derive(Clone, Debug)]
pub struct IntersectionCensus {
    pub points: Vec<IntersectionPoint>,
    /// Orbits of off-triangle points under the index translations.
    pub off_triangle_orbits: usize,
}

impl IntersectionCensus {
    pub fn off_triangle(&self) -> impl Iterator<Item = &IntersectionPoint> {
        self.points.iter().filter(|p| !p.on_triangle)
    }
}

/// Solves every pairwise intersection exactly and merges coincident points.
pub fn intersection_census(lines: &[OrbitLine]) -> Result<IntersectionCensus, CurveError> {
    let mut index: HashMap<Vec<(u32, Vec<BigRational>)>, usize> = HashMap::new();
    let mut points: Vec<IntersectionPoint> = Vec::new();
    let mut incidence: Vec<BTreeSet<usize>> = Vec::new();
    for p in 0..lines.len() {
        for q in p + 1..lines.len() {
            let meet = CyclotomicPoint::new(cross(&lines[p].coeffs, &lines[q].coeffs).to_vec())
                .map_err(|_| CurveError::ProportionalLines(p, q))?
                .normalized();
            let key = point_key(&meet);
            let slot = *index.entry(key).or_insert_with(|| {
                let on_triangle = meet.coords().iter().any(|c| c.is_zero());
                points.push(IntersectionPoint {
                    point: meet.clone(),
                    lines: Vec::new(),
                    on_triangle,
                });
                incidence.push(BTreeSet::new());
                points.len() - 1
            });
            incidence[slot].insert(p);
            incidence[slot].insert(q);
        }
    }
    for (pt, set) in points.iter_mut().zip(incidence) {
        pt.lines = set.into_iter().collect();
    }
    let off_triangle_orbits = count_orbits(lines, &points);
    Ok(IntersectionCensus {
        points,
        off_triangle_orbits,
    })
}

/// A point is determined by any two of its lines, so translating the index
/// pairs of its lines translates the point. The orbit representative is the
/// lexicographically least translate of the incidence set.
fn count_orbits(lines: &[OrbitLine], points: &[IntersectionPoint]) -> usize {
    let s = lines.iter().map(|l| l.i.max(l.j) + 1).max().unwrap_or(1);
    let mut reps = BTreeSet::new();
    for pt in points.iter().filter(|p| !p.on_triangle) {
        let rep = (0..s)
            .flat_map(|di| (0..s).map(move |dj| (di, dj)))
            .map(|(di, dj)| {
                let mut v: Vec<(u32, u32)> = pt
                    .lines
                    .iter()
                    .map(|&k| ((lines[k].i + di) % s, (lines[k].j + dj) % s))
                    .collect();
                v.sort_unstable();
                v
            })
            .min()
            .expect("nonempty translation group");
        reps.insert(rep);
    }
    reps.len()
}

/// No line passes through a vertex of the coordinate triangle and no two
/// lines meet at one.
///
/// Lines of the orbit with a common index `i` always meet on `y = 0` (and on
/// `x = 0` for a common `j`), so the condition cannot ask that pairs avoid the
/// triangle altogether.
pub fn genericity_check(lines: &[OrbitLine]) -> bool {
    if lines.iter().any(|l| l.coeffs.iter().any(Ring::is_zero)) {
        return false;
    }
    for p in 0..lines.len() {
        for q in p + 1..lines.len() {
            match CyclotomicPoint::new(cross(&lines[p].coeffs, &lines[q].coeffs).to_vec()) {
                Ok(meet) if !is_vertex(&meet) => {}
                _ => return false,
            }
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq)]
pub enum NodalCertificate {
    Nodal(usize),
    TriplePointFound(CyclotomicPoint),
    NotGeneric,
}

impl fmt::Display for NodalCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodalCertificate::Nodal(k) => write!(f, "NODAL({k})"),
            NodalCertificate::TriplePointFound(_) => write!(f, "TRIPLE_POINT_FOUND"),
            NodalCertificate::NotGeneric => write!(f, "NOT_GENERIC"),
        }
    }
}

pub fn point_text(p: &CyclotomicPoint) -> String {
    let parts: Vec<String> = p.coords().iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(" : "))
}

/// Certifies that the orbit of `ax + by + cz = 0` has only double points off
/// `xyz = 0`, returning the number of orbits of such points.
pub fn nodal_certificate(
    s: u32,
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
) -> Result<NodalCertificate, CurveError> {
    let lines = build_orbit(a, b, c, s)?;
    if !genericity_check(&lines) {
        return Ok(NodalCertificate::NotGeneric);
    }
    let census = intersection_census(&lines)?;
    if let Some(p) = census.off_triangle().find(|p| p.multiplicity() >= 3) {
        return Ok(NodalCertificate::TriplePointFound(p.point.clone()));
    }
    Ok(NodalCertificate::Nodal(census.off_triangle_orbits))
}

/// First triple from [`COEFFICIENT_TRIPLES`] (or the given one) that passes
/// [`genericity_check`], with its certificate.
pub fn certify_with_fallback(
    s: u32,
    preferred: Option<(BigRational, BigRational, BigRational)>,
) -> Result<((BigRational, BigRational, BigRational), NodalCertificate), CurveError> {
    let defaults = COEFFICIENT_TRIPLES.iter().map(|&(a, b, c)| {
        (
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
            BigRational::from_integer(c.into()),
        )
    });
    let mut last = None;
    for (a, b, c) in preferred.into_iter().chain(defaults) {
        let cert = nodal_certificate(s, &a, &b, &c)?;
        if cert != NodalCertificate::NotGeneric {
            return Ok(((a, b, c), cert));
        }
        last = Some(((a, b, c), cert));
    }
    Ok(last.expect("at least one triple"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityCensus {
    pub r: u64,
    pub s: u64,
    pub degree: u64,
    pub genus: u64,
    /// singular points of type `x^r = y^s`
    pub cusps: u64,
    pub nodes: u64,
}

fn check_pair(r: u64, s: u64) -> Result<(), CurveError> {
    if r == 0 || s == 0 {
        return Err(CurveError::NonPositive);
    }
    if r.gcd(&s) != 1 {
        return Err(CurveError::NotCoprime { r, s });
    }
    Ok(())
}

pub fn singularity_census(r: u64, s: u64) -> Result<SingularityCensus, CurveError> {
    check_pair(r, s)?;
    Ok(SingularityCensus {
        r,
        s,
        degree: s * r,
        genus: (r - 1) * r.saturating_sub(2) / 2,
        cusps: 3 * r,
        nodes: r * r * (s - 1) * s.saturating_sub(2) / 2,
    })
}

/// Plane-curve genus formula with `delta = (r-1)(s-1)/2` at each `x^r = y^s`
/// point: `(d-1)(d-2)/2 - nodes - 3r delta = genus`.
pub fn genus_balance(r: u64, s: u64) -> Result<bool, CurveError> {
    let c = singularity_census(r, s)?;
    let d = c.degree as i128;
    let arithmetic = (d - 1) * (d - 2) / 2;
    let cusp_delta = 3 * r as i128 * ((r as i128 - 1) * (s as i128 - 1)) / 2;
    Ok(arithmetic - c.nodes as i128 - cusp_delta == c.genus as i128)
}

pub fn coefficient_text(t: &(BigRational, BigRational, BigRational)) -> String {
    format!("{},{},{}", rational_text(&t.0), rational_text(&t.1), rational_text(&t.2))
}
