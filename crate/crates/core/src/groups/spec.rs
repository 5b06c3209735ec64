//! Compact group descriptions such as `B(n=3; a=4; b=[inf])` or `T(2,3,5)`.

use std::fmt;
use std::str::FromStr;

use super::presentation::{
    presentation_b1, presentation_b2_abc, presentation_b2_abcd, presentation_bn,
    presentation_triangle, MixedConvention, Presentation,
};
use super::GroupError;
use crate::weight::{parse_weights, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Braid { n: usize, a: Weight, bs: Vec<Weight> },
    B1(Vec<Weight>),
    B2Abc(Weight, Weight, Weight),
    B2Abcd(Weight, Weight, Weight, Weight),
    Triangle(Weight, Weight, Weight),
}

impl GroupSpec {
    pub fn presentation(&self, convention: MixedConvention) -> Result<Presentation, GroupError> {
        match self {
            GroupSpec::Braid { n, a, bs } => presentation_bn(*n, *a, bs, convention),
            GroupSpec::B1(bs) => presentation_b1(bs),
            GroupSpec::B2Abc(a, b, c) => presentation_b2_abc(*a, *b, *c),
            GroupSpec::B2Abcd(a, b, c, d) => presentation_b2_abcd(*a, *b, *c, *d),
            GroupSpec::Triangle(p, q, r) => presentation_triangle(*p, *q, *r),
        }
    }

    /// Whether the mixed-relation convention changes the presentation.
    pub fn depends_on_convention(&self) -> bool {
        matches!(self, GroupSpec::Braid { bs, .. } if !bs.is_empty())
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |ws: &[Weight]| ws.iter().map(Weight::to_string).collect::<Vec<_>>().join(",");
        match self {
            GroupSpec::Braid { n, a, bs } => write!(f, "B(n={n}; a={a}; b=[{}])", join(bs)),
            GroupSpec::B1(bs) => write!(f, "B1({})", join(bs)),
            GroupSpec::B2Abc(a, b, c) => write!(f, "B2({a},{b},{c})"),
            GroupSpec::B2Abcd(a, b, c, d) => write!(f, "B2({a},{b},{c},{d})"),
            GroupSpec::Triangle(p, q, r) => write!(f, "T({p},{q},{r})"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |why: &str| GroupError::Parse(format!("{s:?}: {why}"));
        let t = s.trim();
        let open = t.find('(').ok_or_else(|| bad("missing '('"))?;
        let body = t[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| bad("missing ')'"))?;
        let head = t[..open].trim();
        let weights = |body: &str| parse_weights(body).map_err(|e| bad(&e.to_string()));
        match head {
            "B" => {
                let (mut n, mut a, mut bs) = (None, None, None);
                for field in body.split(';') {
                    let (k, v) = field.split_once('=').ok_or_else(|| bad("expected key=value"))?;
                    let v = v.trim();
                    match k.trim() {
                        "n" => n = Some(v.parse::<usize>().map_err(|_| bad("bad n"))?),
                        "a" => a = Some(v.parse::<Weight>().map_err(|e| bad(&e.to_string()))?),
                        "b" => {
                            let inner = v
                                .strip_prefix('[')
                                .and_then(|v| v.strip_suffix(']'))
                                .ok_or_else(|| bad("b must be a [..] list"))?;
                            bs = Some(weights(inner)?);
                        }
                        other => return Err(bad(&format!("unknown key {other}"))),
                    }
                }
                Ok(GroupSpec::Braid {
                    n: n.ok_or_else(|| bad("missing n"))?,
                    a: a.unwrap_or(Weight::Infinite),
                    bs: bs.unwrap_or_default(),
                })
            }
            "B1" => Ok(GroupSpec::B1(weights(body)?)),
            "B2" => match weights(body)?.as_slice() {
                [a, b, c] => Ok(GroupSpec::B2Abc(*a, *b, *c)),
                [a, b, c, d] => Ok(GroupSpec::B2Abcd(*a, *b, *c, *d)),
                _ => Err(bad("B2 takes 3 or 4 weights")),
            },
            "T" => match weights(body)?.as_slice() {
                [p, q, r] => Ok(GroupSpec::Triangle(*p, *q, *r)),
                _ => Err(bad("T takes 3 weights")),
            },
            _ => Err(bad("unknown group family")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Weight::{Finite as F, Infinite as Inf};

    #[test]
    fn parse_grammar() {
        assert_eq!(
            "B(n=3; a=4; b=[inf])".parse::<GroupSpec>().unwrap(),
            GroupSpec::Braid { n: 3, a: F(4), bs: vec![Inf] }
        );
        assert_eq!(
            "B(n=4; a=5; b=[])".parse::<GroupSpec>().unwrap(),
            GroupSpec::Braid { n: 4, a: F(5), bs: vec![] }
        );
        assert_eq!("B2(3,3,3)".parse::<GroupSpec>().unwrap(), GroupSpec::B2Abc(F(3), F(3), F(3)));
        assert_eq!(
            "B2(3,3,2,2)".parse::<GroupSpec>().unwrap(),
            GroupSpec::B2Abcd(F(3), F(3), F(2), F(2))
        );
        assert_eq!("T(2,3,inf)".parse::<GroupSpec>().unwrap(), GroupSpec::Triangle(F(2), F(3), Inf));
        assert_eq!("B1(2,3,5)".parse::<GroupSpec>().unwrap(), GroupSpec::B1(vec![F(2), F(3), F(5)]));
        for bad in ["B(3)", "T(2,3)", "X(1)", "B2(1,2", "B(n=3; q=2)"] {
            assert!(bad.parse::<GroupSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["B(n=5; a=3; b=[inf])", "B1(2,2)", "B2(2,4,4)", "B2(inf,2,2,2)", "T(2,3,7)"] {
            let g: GroupSpec = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
        }
    }
}
