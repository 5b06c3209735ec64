use super::*;
use crate::groups::{GroupSpec, MixedConvention};
use crate::weight::Weight::{Finite as F, Infinite as Inf};

#[test]
fn compare_is_exact_string_equality() {
    let r = Report::compare("c", anchors::EULER_NUMBER, "12", "12", Provenance::Stated);
    assert_eq!(r.status, Status::Match);
    let r = Report::compare("c", anchors::EULER_NUMBER, "12", "12.0", Provenance::Stated);
    assert_eq!(r.status, Status::Mismatch);
}

#[test]
fn report_json_round_trip() {
    let r = Report::compare("c", anchors::EULER_NUMBER, "1", "2", Provenance::Oracle)
        .with_detail("k", 3)
        .with_seed(7);
    let text = serde_json::to_string(&r).unwrap();
    assert!(text.contains("\"status\":\"MISMATCH\""));
    assert!(text.contains("\"provenance\":\"oracle\""));
    let back: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
    assert_eq!(serde_json::to_string(&back).unwrap(), text);
}

#[test]
fn small_orders_match_formulas() {
    let cases = [
        GroupSpec::Triangle(F(2), F(3), F(5)),
        GroupSpec::B1(vec![F(4), F(6)]),
        GroupSpec::B2Abc(F(2), F(5), F(5)),
        GroupSpec::Braid { n: 3, a: F(2), bs: vec![] },
        GroupSpec::Braid { n: 2, a: F(2), bs: vec![F(3), F(3)] },
    ];
    for spec in cases {
        let r = cmd_order(&spec, MixedConvention::FromOne, 200_000).unwrap();
        assert_eq!(r.status, Status::Match, "{}", r.line());
    }
}

#[test]
fn unknown_order_is_inconclusive() {
    let spec = GroupSpec::Braid { n: 3, a: F(3), bs: vec![Inf] };
    let r = cmd_order(&spec, MixedConvention::FromOne, 100_000).unwrap();
    assert_eq!(r.computed, "24");
    assert_eq!(r.status, Status::Inconclusive);
}

#[test]
fn euclidean_triangle_is_infinite_not_exceeded() {
    let r = cmd_order(&GroupSpec::Triangle(F(3), F(3), F(3)), MixedConvention::FromOne, 2_000).unwrap();
    assert_eq!(r.expected, "infinite");
    // T(3,3,3) abelianizes to Z/3 x Z/3, so enumeration cannot certify it
    assert_eq!(r.status, Status::Inconclusive);
}

#[test]
fn euler_reports_match() {
    for (n, b) in [(2, 1), (2, 3), (3, 2), (4, 3)] {
        for r in cmd_euler(n, b).unwrap() {
            assert_eq!(r.status, Status::Match, "{}", r.line());
        }
    }
    assert!(cmd_euler(2, 2).is_err());
}

#[test]
fn curve_reports_match() {
    for (r, s) in [(2, 3), (3, 2), (1, 4), (2, 5)] {
        for rep in cmd_curve(r, s, None).unwrap() {
            assert_eq!(rep.status, Status::Match, "{}", rep.line());
        }
    }
}

#[test]
fn classify_reports_match() {
    for ws in [vec![F(2), F(3), F(5)], vec![F(2), F(3)], vec![Inf, Inf], vec![F(2); 4], vec![F(7)]] {
        let r = cmd_classify(&ws).unwrap();
        assert_eq!(r.status, Status::Match, "{}", r.line());
    }
}

#[test]
fn discriminant_reports_match() {
    for (n, b) in [(2, 1), (2, 3), (3, 2)] {
        for r in cmd_discriminant(n, b, None, 5).unwrap() {
            assert_eq!(r.status, Status::Match, "{}", r.line());
            assert_eq!(r.seed, 5);
        }
    }
}

#[test]
fn conjecture_small_case() {
    let r = cmd_conjecture(2, F(2), &[F(3), F(3)], MixedConvention::FromOne, 100_000).unwrap();
    assert_eq!(r.computed, "finite");
    assert_eq!(r.status, Status::Match, "{}", r.line());
}

#[test]
fn table_rows_cover_both_conventions() {
    let off = table1_rows(ConventionChoice::Off);
    let both = table1_rows(ConventionChoice::Both);
    assert!(both.len() > off.len());
    assert!(off
        .iter()
        .filter(|r| r.convention == MixedConvention::FromZero)
        .all(|r| r.claim.starts_with("H_4(") || r.claim.starts_with("H_5(4)")));
    assert!(both.iter().any(|r| r.claim.ends_with("[mixed i>=0]")));
}

#[test]
fn cheap_table_rows_match() {
    let rows = table1_rows(ConventionChoice::Off);
    let row = rows.iter().find(|r| r.claim.starts_with("H_3(3,inf) ")).unwrap();
    let r = row.evaluate(100_000);
    assert_eq!(r.status, Status::Match, "{}", r.line());
    let row = rows.iter().find(|r| r.claim == "H_2(2,3,3) central extension").unwrap();
    let r = row.evaluate(100_000);
    assert_eq!(r.status, Status::Match, "{}", r.line());
}
