//! One entry point per verification subcommand.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{anchors, timed, Expected, GroupEvidence, Provenance, Report};
use crate::curves::{
    certify_with_fallback, coefficient_text, genus_balance, point_text, singularity_census,
    CurveError, NodalCertificate,
};
use crate::exact::{rat, ratio, rational_text, BigRational};
use crate::geometry::{
    change_frame_to_y, discriminant_hypersurface, is_on_lifted_stratum, lifted_discriminant,
    param_stratum, psi_power, sample_lifted_curve_point, GeometryError, MarkedPoints, Sampler,
    StratumParams,
};
use crate::groups::{GroupError, GroupSpec, MixedConvention};
use crate::orbifold::{
    classify_orbifold, conjecture_margin, conjecture_verdict, corollary_order_hbb,
    corollary_order_htriple, covering_degree_theorem5, euler_dn1b, euler_report, orb_euler_char,
    riemann_hurwitz_euler, triangle_order, universal_cover_label, ConjectureVerdict, CoverLabel,
    OrbifoldError, OrbifoldSignature, TriangleOrder, UniformizationType,
};
use crate::weight::Weight;

/// Sampled points per incidence check.
pub const INCIDENCE_SAMPLES: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CommandError {
    #[error("curve order s = {0} is too large")]
    OrderTooLarge(u64),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Orbifold(#[from] OrbifoldError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

fn fraction(k: usize) -> String {
    format!("{k}/{INCIDENCE_SAMPLES}")
}

/// Degree of `D_n^(b)` and exact incidence of sampled points of `D_{n,1}`
/// and `D_{n,1}^(b)`.
pub fn cmd_discriminant(
    n: usize,
    b: u32,
    qs: Option<MarkedPoints>,
    seed: u64,
) -> Result<Vec<Report>, CommandError> {
    // same preconditions as the Euler number
    euler_dn1b(n as u64, b as u64)?;
    let qs = qs.unwrap_or_else(|| MarkedPoints::standard(n));
    let tag = format!("n={n} b={b}");
    let mut out = Vec::new();

    let mut lifted = None;
    out.extend(timed(|| {
        let h = lifted_discriminant(n, b, &qs);
        let computed = h.as_ref().map_or_else(|e| e.to_string(), |h| h.degree().to_string());
        let mut r = Report::compare(
            format!("D_n^(b) degree {tag}"),
            anchors::HYPERSURFACE_DEGREE,
            computed,
            (2 * b as usize * (n - 1)).to_string(),
            Provenance::Formula,
        );
        if let Ok(h) = &h {
            r = r
                .with_detail("frame", h.frame())
                .with_detail("terms", h.poly().poly().num_terms());
        }
        lifted = Some(h.clone());
        vec![r]
    }));
    let lifted = lifted.expect("set by the degree check")?;

    let dy = change_frame_to_y(&*discriminant_hypersurface(n)?, &qs)?;
    out.extend(timed(|| {
        let mut s = Sampler::new(seed);
        let mut hits = 0;
        for _ in 0..INCIDENCE_SAMPLES {
            let y = StratumParams::new(n, 1, vec![], s.p1())
                .and_then(|sp| param_stratum(&sp, &qs));
            hits += y.is_ok_and(|y| dy.contains(&y)) as usize;
        }
        vec![Report::compare(
            format!("D_(n,1) on D_n in Y frame n={n}"),
            anchors::PARAMETRIZATION,
            fraction(hits),
            fraction(INCIDENCE_SAMPLES),
            Provenance::Oracle,
        )]
    }));

    out.extend(timed(|| {
        let mut s = Sampler::new(seed.wrapping_add(1));
        let mut hits = 0;
        for _ in 0..INCIDENCE_SAMPLES {
            let Ok(sample) = sample_lifted_curve_point(&mut s, n, b) else {
                continue;
            };
            let y = StratumParams::new(n, 1, vec![], sample.uv.clone())
                .and_then(|sp| param_stratum(&sp, &sample.qs));
            let lifts = matches!((psi_power(&sample.z, b), y), (Ok(p), Ok(y)) if p == y);
            let on_curve = is_on_lifted_stratum(&sample.z, n, 1, b, &sample.qs) == Ok(true);
            let on_surface = is_on_lifted_stratum(&sample.z, n, n - 1, b, &sample.qs) == Ok(true);
            hits += (lifts && on_curve && on_surface) as usize;
        }
        vec![Report::compare(
            format!("D_(n,1)^(b) on D_n^(b) in Z frame {tag}"),
            anchors::PARAMETRIZATION,
            fraction(hits),
            fraction(INCIDENCE_SAMPLES),
            Provenance::Oracle,
        )]
    }));

    out.extend(timed(|| {
        let mut s = Sampler::new(seed.wrapping_add(2));
        let (mut by_test, mut by_poly) = (0, 0);
        for _ in 0..INCIDENCE_SAMPLES {
            let z = s.point(n + 1);
            by_test += (is_on_lifted_stratum(&z, n, n - 1, b, &qs) == Ok(true)) as usize;
            by_poly += lifted.contains(&z) as usize;
        }
        vec![Report::compare(
            format!("random points on D_n^(b) {tag}"),
            anchors::PARAMETRIZATION,
            fraction(by_test),
            fraction(by_poly),
            Provenance::Oracle,
        )]
    }));

    Ok(out.into_iter().map(|r| r.with_seed(seed)).collect())
}

fn label_by_sign(euler: i128) -> CoverLabel {
    match euler.signum() {
        1 => CoverLabel::ProjectiveLines,
        0 => CoverLabel::AffineSpace,
        _ => CoverLabel::Balls,
    }
}

fn text<T: ToString, E: ToString>(v: Result<T, E>) -> String {
    v.map_or_else(|e| e.to_string(), |v| v.to_string())
}

/// Euler number, covering degree and universal cover of `D_{n,1}^(b)`.
pub fn cmd_euler(n: u64, b: u64) -> Result<Vec<Report>, CommandError> {
    let summary = euler_report(n, b)?;
    let tag = format!("n={n} b={b}");
    let mut out = timed(|| {
        vec![Report::compare(
            format!("euler number {tag}"),
            anchors::RIEMANN_HURWITZ,
            text(euler_dn1b(n, b)),
            text(riemann_hurwitz_euler(n, b)),
            Provenance::Oracle,
        )
        .with_detail("degree", summary.degree)
        .with_detail("cover", &summary.cover)]
    });
    out.extend(timed(|| {
        let closed = (1..=n as u128)
            .product::<u128>()
            .checked_mul((b as u128).pow((n * n - n) as u32));
        vec![Report::compare(
            format!("covering degree {tag}"),
            anchors::COVERING_DEGREE,
            text(covering_degree_theorem5(n, b).map(|d| d.degree)),
            closed.map_or("overflow".to_string(), |d| d.to_string()),
            Provenance::Formula,
        )]
    }));
    out.extend(timed(|| {
        vec![Report::compare(
            format!("universal cover {tag}"),
            anchors::EULER_NUMBER,
            text(universal_cover_label(n, b).map(|l| l.render(n))),
            label_by_sign(summary.euler).render(n),
            Provenance::Oracle,
        )]
    }));
    Ok(out)
}

/// Census of `L^(r/s)`, with the node count re-derived from the line orbit
/// of `L^(1/s)`.
pub fn cmd_curve(
    r: u64,
    s: u64,
    coeffs: Option<(BigRational, BigRational, BigRational)>,
) -> Result<Vec<Report>, CommandError> {
    let census = singularity_census(r, s)?;
    let order = u32::try_from(s).map_err(|_| CommandError::OrderTooLarge(s))?;
    let tag = format!("r={r} s={s}");
    let mut certified = None;
    let mut out = timed(|| {
        let (used, cert) = match certify_with_fallback(order, coeffs) {
            Ok(c) => c,
            Err(e) => {
                return vec![Report::compare(
                    format!("L^(1/s) nodality s={s}"),
                    anchors::DOUBLE_POINTS,
                    e.to_string(),
                    "",
                    Provenance::Formula,
                )]
            }
        };
        let orbits = (s - 1) * s.saturating_sub(2) / 2;
        let mut rep = Report::compare(
            format!("L^(1/s) nodality s={s}"),
            anchors::DOUBLE_POINTS,
            cert.to_string(),
            NodalCertificate::Nodal(orbits as usize).to_string(),
            Provenance::Formula,
        )
        .with_detail("coefficients", coefficient_text(&used));
        if let NodalCertificate::TriplePointFound(p) = &cert {
            rep = rep.with_detail("witness", point_text(p));
        }
        certified = Some(cert);
        vec![rep]
    });

    let nodes = match &certified {
        Some(NodalCertificate::Nodal(k)) => (r * r * *k as u64).to_string(),
        Some(other) => other.to_string(),
        None => "unavailable".to_string(),
    };
    out.push(
        Report::compare(
            format!("L^(r/s) nodes {tag}"),
            anchors::CURVE_CENSUS,
            nodes,
            census.nodes.to_string(),
            Provenance::Formula,
        )
        .with_detail("degree", census.degree)
        .with_detail("genus", census.genus)
        .with_detail("cusps", census.cusps)
        .with_detail("nodes", census.nodes),
    );
    out.push(Report::compare(
        format!("L^(r/s) genus formula {tag}"),
        anchors::CURVE_CENSUS,
        genus_balance(r, s)?.to_string(),
        "true",
        Provenance::Oracle,
    ));

    let stated = match (r, s) {
        (2, 3) => Some((6, 0, 6, 4)),
        (b, 2) => Some((2 * b, (b - 1) * b.saturating_sub(2) / 2, 3 * b, 0)),
        _ => None,
    };
    if let Some((d, g, c, k)) = stated {
        let show = |d: u64, g: u64, c: u64, k: u64| format!("degree {d}, genus {g}, cusps {c}, nodes {k}");
        out.push(Report::compare(
            format!("L^(r/s) census {tag}"),
            anchors::CURVE_CENSUS,
            show(census.degree, census.genus, census.cusps, census.nodes),
            show(d, g, c, k),
            Provenance::Stated,
        ));
    }
    Ok(out)
}

fn type_by_sign(chi: &BigRational) -> UniformizationType {
    if chi.is_positive() {
        UniformizationType::Sphere
    } else if chi.is_zero() {
        UniformizationType::Euclidean
    } else {
        UniformizationType::Hyperbolic
    }
}

/// Uniformization type, checked against the sign of the orbifold Euler
/// characteristic.
pub fn cmd_classify(weights: &[Weight]) -> Result<Report, CommandError> {
    let sig = OrbifoldSignature::new(weights.to_vec())?;
    let mut out = timed(|| {
        let chi = orb_euler_char(&sig);
        // one cone point, or two with different weights, is a bad orbifold
        let expected = match weights {
            [_] => UniformizationType::Bad,
            [x, y] if x != y => UniformizationType::Bad,
            _ => type_by_sign(&chi),
        };
        vec![Report::compare(
            format!("uniformization of {sig}"),
            anchors::UNIFORMIZATION,
            classify_orbifold(&sig).to_string(),
            expected.to_string(),
            Provenance::Oracle,
        )
        .with_detail("orbifold euler characteristic", rational_text(&chi))]
    });
    Ok(out.remove(0))
}

/// Predicted finiteness from the margin against enumeration evidence.
pub fn cmd_conjecture(
    n: usize,
    a: Weight,
    bs: &[Weight],
    convention: MixedConvention,
    max_cosets: usize,
) -> Result<Report, CommandError> {
    let spec = GroupSpec::Braid { n, a, bs: bs.to_vec() };
    let p = spec.presentation(convention)?;
    let margin = conjecture_margin(n as u64, a, bs)?;
    let mut out = timed(|| {
        let verdict = conjecture_verdict(&margin);
        let predicted = if verdict == ConjectureVerdict::Finite { "finite" } else { "infinite" };
        let ev = GroupEvidence::gather(&p, max_cosets);
        let observed = match ev.computed().as_str() {
            "infinite" => "infinite",
            "EXCEEDED" => "EXCEEDED",
            _ => "finite",
        };
        let mut rep = Report::compare(
            format!("finiteness of {spec}"),
            anchors::CONJECTURE,
            observed,
            predicted,
            Provenance::Formula,
        )
        .with_detail("margin", rational_text(&margin))
        .with_detail("verdict", format!("{verdict:?}").to_uppercase())
        .with_detail("enumeration", ev.outcome)
        .with_detail("abelianization", &ev.abelian);
        if spec.depends_on_convention() {
            rep = rep.with_detail("mixed relations", convention.label());
        }
        if observed == "EXCEEDED" {
            rep = rep.inconclusive();
        }
        vec![rep]
    });
    Ok(out.remove(0))
}

fn from_triangle(t: TriangleOrder) -> Expected {
    match t {
        TriangleOrder::Finite(k) => Expected::Order(k),
        TriangleOrder::Infinite => Expected::Infinite,
    }
}

/// Closed-form order where one is available.
pub fn known_order(spec: &GroupSpec) -> Option<Expected> {
    use Weight::Finite as F;
    match spec {
        GroupSpec::Triangle(p, q, r) => triangle_order(*p, *q, *r).ok().map(from_triangle),
        GroupSpec::B1(bs) => match bs.as_slice() {
            [_] => Some(Expected::Order(1)),
            [F(x), F(y)] => Some(Expected::Order(x.gcd(y))),
            [x, y, z] => triangle_order(*x, *y, *z).ok().map(from_triangle),
            _ => None,
        },
        GroupSpec::B2Abc(F(a), F(b), F(c)) if b == c && *a >= 2 && *b >= 2 => {
            let excess = ratio(1, *a as i64) + ratio(1, *b as i64) - ratio(1, 2);
            if excess.is_zero() {
                return Some(Expected::Infinite);
            }
            let k = (rat(2 * *b as i64) / excess.clone()).to_integer();
            (excess.is_positive()).then(|| Expected::Order(k.try_into().unwrap_or(0)))
        }
        GroupSpec::Braid { n, a: F(2), bs } => {
            let finite: Option<Vec<u64>> = bs.iter().map(|w| w.finite()).collect();
            match finite?.as_slice() {
                [] => Some(Expected::Order((1..=*n as u64).product())),
                [b, c] if b == c => corollary_order_hbb(*n as u64, *b)
                    .ok()
                    .and_then(|k| u64::try_from(k).ok())
                    .map(Expected::Order),
                [b, c, d] => corollary_order_htriple(*n as u64, *b, *c, *d).ok().map(from_triangle),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Order of a group given by a spec string, compared with its closed form
/// when one is known.
pub fn cmd_order(spec: &GroupSpec, convention: MixedConvention, max_cosets: usize) -> Result<Report, CommandError> {
    let p = spec.presentation(convention)?;
    let (expected, provenance) = match known_order(spec) {
        Some(e) => (e, Provenance::Formula),
        None => (Expected::Unknown, Provenance::Oracle),
    };
    let mut out = timed(|| {
        let ev = GroupEvidence::gather(&p, max_cosets);
        let mut rep = ev.report(format!("order of {spec}"), anchors::PRESENTATION, &expected, provenance);
        if spec.depends_on_convention() {
            rep = rep.with_detail("mixed relations", convention.label());
        }
        vec![rep]
    });
    Ok(out.remove(0))
}
