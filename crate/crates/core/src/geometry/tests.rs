use super::*;
use crate::exact::{ratio, Monomial};

fn pt(c: &[i64]) -> Point {
    Point::from_ints(c).unwrap()
}

fn p1s(c: &[(i64, i64)]) -> Vec<Point> {
    c.iter().map(|&(x, y)| Point::p1(x, y).unwrap()).collect()
}

/// `prod_{i<j} (u_i v_j - u_j v_i)^2`, computed directly.
fn root_difference_product(points: &[Point]) -> BigRational {
    let mut acc = rat(1);
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let (a, b) = (points[i].coords(), points[j].coords());
            let d = &a[0] * &b[1] - &b[0] * &a[1];
            acc *= &d * &d;
        }
    }
    acc
}

/// Half the samples repeat a point up to scaling.
fn sample_tuple(s: &mut Sampler, n: usize) -> Vec<Point> {
    let mut pts = s.p1_points(n);
    if s.below(2) == 0 {
        let i = s.below(n);
        let mut j = s.below(n);
        if i == j {
            j = (j + 1) % n;
        }
        let k = rat(s.nonzero());
        let c = pts[i].coords();
        pts[j] = Point::new(vec![&c[0] * &k, &c[1] * &k]).unwrap();
    }
    pts
}

#[test]
fn phi_examples() {
    assert_eq!(phi_map(&p1s(&[(1, 1), (2, 1)])).unwrap().coords(), pt(&[1, 3, 2]).coords());
    let (u, v) = (3, -7);
    let image = phi_map(&p1s(&[(u, v), (u, v)])).unwrap();
    assert_eq!(image.coords(), pt(&[v * v, 2 * u * v, u * u]).coords());
    let d2 = discriminant_hypersurface(2).unwrap();
    assert!(d2.contains(&image));
}

#[test]
fn phi_is_symmetric() {
    let mut s = Sampler::new(1);
    for n in 1..=5 {
        for _ in 0..20 {
            let pts = s.p1_points(n);
            let base = phi_map(&pts).unwrap();
            let mut shuffled = pts.clone();
            for i in (1..n).rev() {
                let j = s.below(i + 1);
                shuffled.swap(i, j);
            }
            assert_eq!(phi_map(&shuffled).unwrap(), base);
        }
    }
}

#[test]
fn diagonal_examples() {
    assert!(is_on_diagonal(&p1s(&[(1, 1), (2, 2)])).unwrap());
    assert!(!is_on_diagonal(&p1s(&[(1, 0), (0, 1)])).unwrap());
    assert!(is_on_diagonal(&p1s(&[(1, 0)])).is_err());
}

#[test]
fn discriminant_vanishes_exactly_on_the_diagonal() {
    let mut s = Sampler::new(2);
    for n in 2..=5 {
        let d = discriminant_hypersurface(n).unwrap();
        let samples = if n == 5 { 200 } else { 500 };
        for _ in 0..samples {
            let pts = sample_tuple(&mut s, n);
            let value = d.poly().eval(phi_map(&pts).unwrap().coords());
            assert_eq!(value.is_zero(), is_on_diagonal(&pts).unwrap());
            assert_eq!(value, root_difference_product(&pts));
        }
    }
}

#[test]
fn discriminant_degrees_and_quadratic_case() {
    for n in 2..=5 {
        assert_eq!(discriminant_hypersurface(n).unwrap().degree(), 2 * (n as u32 - 1));
    }
    let d2 = discriminant_hypersurface(2).unwrap();
    assert_eq!(d2.poly().to_text(), "-4 * x0^1 x2^1 + 1 * x1^2");
    assert_eq!(d2.frame(), Frame::X);
    assert!(discriminant_hypersurface(1).is_err());
}

#[test]
fn psi_examples() {
    let p = pt(&[1, 2, 3]);
    assert_eq!(psi_power(&p, 1).unwrap().coords(), p.coords());
    assert_eq!(psi_power(&p, 2).unwrap().coords(), pt(&[1, 4, 9]).coords());
    assert!(psi_power(&p, 0).is_err());
    let mut s = Sampler::new(3);
    for _ in 0..20 {
        let q = s.point(4);
        let (b, c) = (1 + s.below(4) as u32, 1 + s.below(4) as u32);
        let lhs = psi_power(&psi_power(&q, c).unwrap(), b).unwrap();
        assert_eq!(lhs, psi_power(&q, b * c).unwrap());
    }
}

#[test]
fn hyperplane_examples() {
    let h = hyperplane_h(&Point::p1(1, 0).unwrap(), 2).unwrap();
    assert_eq!(h.poly().poly(), &Poly::var(0));
    let h = hyperplane_h(&Point::p1(0, 1).unwrap(), 2).unwrap();
    assert_eq!(h.poly().poly(), &Poly::var(2));
    let mut s = Sampler::new(4);
    for n in 1..=5 {
        for _ in 0..20 {
            let pts = s.p1_points(n);
            let h = hyperplane_h(&pts[0], n).unwrap();
            assert!(h.contains(&phi_map(&pts).unwrap()));
        }
    }
}

#[test]
fn vandermonde_rows_and_general_position() {
    let qs = MarkedPoints::new(p1s(&[(2, 3), (5, -1)])).unwrap();
    let det = vandermonde(&qs).unwrap().determinant().unwrap();
    assert_eq!(det, rat(5 * 3 - -2));
    let mut s = Sampler::new(5);
    for n in 1..=5 {
        for _ in 0..10 {
            let qs = MarkedPoints::new(s.distinct_p1_points(n + 1)).unwrap();
            let van = vandermonde(&qs).unwrap();
            assert!(!van.determinant().unwrap().is_zero());
            for (i, q) in qs.points().iter().enumerate() {
                let h = hyperplane_h(q, n).unwrap();
                let row: Vec<BigRational> =
                    (0..=n).map(|j| h.poly().poly().coeff(&Monomial::var(j))).collect();
                assert_eq!(van.row(i), row.as_slice());
            }
        }
    }
    assert!(MarkedPoints::new(p1s(&[(1, 2), (2, 4)])).is_err());
}

#[test]
fn frame_change_is_coherent() {
    let mut s = Sampler::new(6);
    for n in 2..=4 {
        let d = discriminant_hypersurface(n).unwrap();
        let qs = MarkedPoints::new(s.distinct_p1_points(n + 1)).unwrap();
        let dy = change_frame_to_y(&d, &qs).unwrap();
        assert_eq!(dy.frame(), Frame::Y);
        assert_eq!(dy.degree(), d.degree());
        let van = vandermonde(&qs).unwrap();
        for _ in 0..20 {
            let p = s.point(n + 1);
            let y = van.mul_vec(p.coords()).unwrap();
            assert_eq!(dy.poly().eval(&y), d.poly().eval(p.coords()));
        }
        let back = change_frame_to_x(&dy, &qs).unwrap();
        assert_eq!(back.poly().poly(), d.poly().poly());
    }
}

#[test]
fn frame_change_on_a_permutation_frame() {
    // q = [1:0], [0:1] makes Van = diag(-1, 1)
    let qs = MarkedPoints::new(p1s(&[(1, 0), (0, 1)])).unwrap();
    let h = Hypersurface::new(
        HomogeneousPoly::new(2, Poly::var(0).add(&Poly::var(1).scale(&rat(3)))).unwrap(),
        Frame::X,
    );
    let hy = change_frame_to_y(&h, &qs).unwrap();
    assert_eq!(hy.poly().poly(), &Poly::var(0).negate().add(&Poly::var(1).scale(&rat(3))));
    assert!(change_frame_to_y(&hy, &qs).is_err());
}

#[test]
fn power_lift_degrees() {
    for n in 2..=3usize {
        let qs = MarkedPoints::standard(n);
        let dy = change_frame_to_y(&discriminant_hypersurface(n).unwrap(), &qs).unwrap();
        let same = power_lift(&dy, 1).unwrap();
        assert_eq!(same.poly().poly(), dy.poly().poly());
        assert_eq!(same.frame(), Frame::Z);
        for b in [2u32, 3, 5] {
            let lifted = power_lift(&dy, b).unwrap();
            assert_eq!(lifted.degree(), 2 * b * (n as u32 - 1));
            assert_eq!(lifted.degree(), b * dy.degree());
        }
    }
    assert_eq!(lifted_discriminant(2, 3, &MarkedPoints::standard(2)).unwrap().degree(), 6);
}

#[test]
fn stratum_matches_van_phi() {
    let mut s = Sampler::new(7);
    for n in 1..=5 {
        let qs = MarkedPoints::new(s.distinct_p1_points(n + 1)).unwrap();
        let van = vandermonde(&qs).unwrap();
        for k in 1..=n {
            for _ in 0..5 {
                let sp = StratumParams::new(n, k, s.p1_points(k - 1), s.p1()).unwrap();
                let y = param_stratum(&sp, &qs).unwrap();
                let x = phi_map(&sp.tuple()).unwrap();
                let vx = Point::new(van.mul_vec(x.coords()).unwrap()).unwrap();
                assert_eq!(y.coords(), vx.coords());
            }
        }
    }
}

#[test]
fn rational_normal_curve_in_x_frame() {
    let mut s = Sampler::new(8);
    for n in 1..=5usize {
        let qs = MarkedPoints::new(s.distinct_p1_points(n + 1)).unwrap();
        let inv = vandermonde(&qs).unwrap().inverse().unwrap();
        let uv = s.p1();
        let y = param_stratum(&StratumParams::new(n, 1, vec![], uv.clone()).unwrap(), &qs).unwrap();
        let x = inv.mul_vec(y.coords()).unwrap();
        let (u, v) = (&uv.coords()[0], &uv.coords()[1]);
        let expected: Vec<BigRational> = (0..=n)
            .map(|j| {
                rat(binomial(n as i64, j as i64)) * Ring::pow(u, j as u32) * Ring::pow(v, (n - j) as u32)
            })
            .collect();
        assert_eq!(x, expected);
    }
}

#[test]
fn curve_points_lie_on_the_y_frame_discriminant() {
    let mut s = Sampler::new(9);
    for n in 2..=4 {
        let qs = MarkedPoints::new(s.distinct_p1_points(n + 1)).unwrap();
        let dy = change_frame_to_y(&discriminant_hypersurface(n).unwrap(), &qs).unwrap();
        for _ in 0..100 {
            let sp = StratumParams::new(n, 1, vec![], s.p1()).unwrap();
            assert!(dy.contains(&param_stratum(&sp, &qs).unwrap()));
        }
    }
}

#[test]
fn lifted_membership() {
    let mut s = Sampler::new(10);
    for n in 2..=4usize {
        for b in 1..=4u32 {
            for _ in 0..10 {
                let sample = sample_lifted_curve_point(&mut s, n, b).unwrap();
                let sp = StratumParams::new(n, 1, vec![], sample.uv.clone()).unwrap();
                let y = param_stratum(&sp, &sample.qs).unwrap();
                assert_eq!(psi_power(&sample.z, b).unwrap(), y);
                assert!(is_on_lifted_stratum(&sample.z, n, 1, b, &sample.qs).unwrap());
                assert!(is_on_lifted_stratum(&sample.z, n, n - 1, b, &sample.qs).unwrap());
            }
            let sample = sample_lifted_curve_point(&mut s, n, b).unwrap();
            let lifted = lifted_discriminant(n, b, &sample.qs).unwrap();
            assert!(lifted.contains(&sample.z));
        }
    }
}

#[test]
fn random_points_are_off_the_lift() {
    let mut s = Sampler::new(11);
    for n in 2..=4usize {
        let qs = MarkedPoints::standard(n);
        let dy = change_frame_to_y(&discriminant_hypersurface(n).unwrap(), &qs).unwrap();
        for b in 1..=3u32 {
            for _ in 0..10 {
                let z = s.point(n + 1);
                assert!(!is_on_lifted_stratum(&z, n, 1, b, &qs).unwrap());
                let on = is_on_lifted_stratum(&z, n, n - 1, b, &qs).unwrap();
                assert_eq!(on, dy.contains(&psi_power(&z, b).unwrap()));
            }
        }
        let z = s.point(n + 1);
        assert!(is_on_lifted_stratum(&z, n, n, 2, &qs).unwrap());
    }
    assert!(matches!(
        is_on_lifted_stratum(&pt(&[1, 2, 3, 4, 5, 6]), 5, 2, 1, &MarkedPoints::standard(5)),
        Err(GeometryError::UnsupportedStratum { .. })
    ));
}

#[test]
fn standard_marked_points() {
    let qs = MarkedPoints::standard(3);
    assert_eq!(qs.len(), 4);
    assert_eq!(qs.points()[2].coords(), &[rat(2), rat(1)]);
    // H_{[0:1]} is the last coordinate hyperplane
    assert_eq!(vandermonde(&qs).unwrap().row(0), &[rat(0), rat(0), rat(0), rat(1)]);
    let _ = ratio(1, 2);
}
