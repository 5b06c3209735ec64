//! Finite presentations and the builders for the orbifold braid groups.

use std::fmt;

use super::word::{Letter, Word};
use super::GroupError;
use crate::weight::Weight;

/// Generators plus relators. Relators are stored freely and cyclically
/// reduced; trivial relators are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, GroupError> {
        for (i, g) in generators.iter().enumerate() {
            if g.is_empty() || g.chars().any(|c| c.is_uppercase() || c.is_whitespace()) {
                return Err(GroupError::BadGeneratorName(g.clone()));
            }
            if generators[..i].contains(g) {
                return Err(GroupError::DuplicateGenerator(g.clone()));
            }
        }
        let mut p = Presentation {
            generators,
            relators: Vec::new(),
        };
        for r in relators {
            p.push_relator(r)?;
        }
        Ok(p)
    }

    fn push_relator(&mut self, r: Word) -> Result<(), GroupError> {
        if let Some(l) = r.letters().iter().find(|l| l.generator >= self.generators.len()) {
            return Err(GroupError::UnknownGenerator(format!("#{}", l.generator)));
        }
        let r = r.cyclically_reduced();
        if !r.is_empty() {
            self.relators.push(r);
        }
        Ok(())
    }

    /// Returns a copy with one more relator.
    pub fn with_relator(&self, r: Word) -> Result<Self, GroupError> {
        let mut p = self.clone();
        p.push_relator(r)?;
        Ok(p)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Line-oriented text form: one `gen ...` line, then one `rel ...` line
    /// per relator, inverses written as uppercased names.
    pub fn to_text(&self) -> String {
        let mut out = format!("gen {}\n", self.generators.join(" "));
        for r in &self.relators {
            out.push_str(&format!("rel {}\n", r.render(&self.generators)));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let mut generators: Option<Vec<String>> = None;
        let mut rel_lines = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut toks = line.split_whitespace();
            match toks.next() {
                Some("gen") => {
                    if generators.is_some() {
                        return Err(GroupError::Parse(format!("line {}: second gen line", lineno + 1)));
                    }
                    generators = Some(toks.map(str::to_string).collect());
                }
                Some("rel") => rel_lines.push(toks.map(str::to_string).collect::<Vec<_>>()),
                _ => return Err(GroupError::Parse(format!("line {}: {line:?}", lineno + 1))),
            }
        }
        let generators = generators.ok_or_else(|| GroupError::Parse("missing gen line".into()))?;
        let mut relators = Vec::new();
        for toks in rel_lines {
            let mut letters = Vec::new();
            for t in toks {
                if let Some(g) = generators.iter().position(|g| *g == t) {
                    letters.push(Letter::gen(g));
                } else if let Some(g) = generators.iter().position(|g| g.to_uppercase() == t) {
                    letters.push(Letter::inv(g));
                } else {
                    return Err(GroupError::UnknownGenerator(t));
                }
            }
            relators.push(Word::new(letters));
        }
        Presentation::new(generators, relators)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

fn power_relator(w: &Word, e: Weight) -> Option<Word> {
    e.finite().map(|k| w.pow(k))
}

/// Which `tau_i` take part in the mixed relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum MixedConvention {
    /// `1 <= i <= m`, as printed.
    FromOne,
    /// `0 <= i <= m`.
    FromZero,
}

impl MixedConvention {
    pub fn includes_tau0(self) -> bool {
        matches!(self, MixedConvention::FromZero)
    }

    pub fn label(self) -> &'static str {
        match self {
            MixedConvention::FromOne => "mixed i>=1",
            MixedConvention::FromZero => "mixed i>=0",
        }
    }
}

/// The orbifold braid group `B_n(a, b_0, ..., b_m)` on generators
/// `s1..s{n-1}, t0..tm`:
///
/// * braid relations among the `s_i`;
/// * mixed relations `(s1 t_i)^2 = (t_i s1)^2`, `[t_i, s_j] = 1` for
///   `j != 1`, `[s1 t_i s1^-1, t_j] = 1` for `i < j`;
/// * the projective relation `s1 .. s{n-1} t0 .. tm s{n-1} .. s1 = 1`;
/// * `t_i^{b_i} = s1^a = 1`, omitted for infinite weights.
pub fn presentation_bn(
    n: usize,
    a: Weight,
    bs: &[Weight],
    convention: MixedConvention,
) -> Result<Presentation, GroupError> {
    if n < 2 {
        return Err(GroupError::TooFewStrands(n));
    }
    let mut names: Vec<String> = (1..n).map(|i| format!("s{i}")).collect();
    names.extend((0..bs.len()).map(|i| format!("t{i}")));
    // s_i is generator i-1, t_i is generator n-1+i
    let s = |i: usize| Word::gen(i - 1);
    let t = |i: usize| Word::gen(n - 1 + i);
    let mut rels = Vec::new();

    for i in 1..n {
        for j in i + 2..n {
            rels.push(Word::commutator(&s(i), &s(j)));
        }
    }
    for i in 1..n.saturating_sub(1) {
        let lhs = s(i).concat(&s(i + 1)).concat(&s(i));
        let rhs = s(i + 1).concat(&s(i)).concat(&s(i + 1));
        rels.push(lhs.concat(&rhs.inverse()));
    }

    let m = bs.len();
    let first = if convention.includes_tau0() { 0 } else { 1 };
    for i in first..m {
        let st = s(1).concat(&t(i));
        let ts = t(i).concat(&s(1));
        rels.push(st.pow(2).concat(&ts.pow(2).inverse()));
        for j in 2..n {
            rels.push(Word::commutator(&t(i), &s(j)));
        }
    }
    for i in first..m {
        for j in i + 1..m {
            let conj = s(1).concat(&t(i)).concat(&s(1).inverse());
            rels.push(Word::commutator(&conj, &t(j)));
        }
    }

    let mut proj = Word::identity();
    for i in 1..n {
        proj = proj.concat(&s(i));
    }
    for i in 0..m {
        proj = proj.concat(&t(i));
    }
    for i in (1..n).rev() {
        proj = proj.concat(&s(i));
    }
    rels.push(proj);

    for (i, b) in bs.iter().enumerate() {
        rels.extend(power_relator(&t(i), *b));
    }
    rels.extend(power_relator(&s(1), a));
    Presentation::new(names, rels)
}

/// `B_1(b_0..b_m) = < t0..tm | t_i^{b_i}, t0 t1 .. tm >`.
pub fn presentation_b1(bs: &[Weight]) -> Result<Presentation, GroupError> {
    if bs.is_empty() {
        return Err(GroupError::EmptyWeights);
    }
    let names = (0..bs.len()).map(|i| format!("t{i}")).collect();
    let mut rels: Vec<Word> = bs
        .iter()
        .enumerate()
        .filter_map(|(i, b)| power_relator(&Word::gen(i), *b))
        .collect();
    rels.push((0..bs.len()).fold(Word::identity(), |w, i| w.concat(&Word::gen(i))));
    Presentation::new(names, rels)
}

/// `B_2(a,b,c) = < t, s | (ts)^2 = (st)^2, t^b = (t s^2)^c = s^a = 1 >`.
pub fn presentation_b2_abc(a: Weight, b: Weight, c: Weight) -> Result<Presentation, GroupError> {
    let (t, s) = (Word::gen(0), Word::gen(1));
    let ts = t.concat(&s);
    let st = s.concat(&t);
    let mut rels = vec![ts.pow(2).concat(&st.pow(2).inverse())];
    rels.extend(power_relator(&t, b));
    rels.extend(power_relator(&t.concat(&s.pow(2)), c));
    rels.extend(power_relator(&s, a));
    Presentation::new(vec!["t".into(), "s".into()], rels)
}

/// `B_2(a,b,c,d)` on `t, r, s` with `(ts)^2=(st)^2`, `(rs)^2=(sr)^2`,
/// `[r,t]=1`, `t^b = (s t s r)^d = r^c = s^a = 1`.
pub fn presentation_b2_abcd(
    a: Weight,
    b: Weight,
    c: Weight,
    d: Weight,
) -> Result<Presentation, GroupError> {
    let (t, r, s) = (Word::gen(0), Word::gen(1), Word::gen(2));
    let mut rels = vec![
        t.concat(&s).pow(2).concat(&s.concat(&t).pow(2).inverse()),
        r.concat(&s).pow(2).concat(&s.concat(&r).pow(2).inverse()),
        Word::commutator(&r, &t),
    ];
    rels.extend(power_relator(&t, b));
    rels.extend(power_relator(&s.concat(&t).concat(&s).concat(&r), d));
    rels.extend(power_relator(&r, c));
    rels.extend(power_relator(&s, a));
    Presentation::new(vec!["t".into(), "r".into(), "s".into()], rels)
}

/// `< x, y | x^p = y^q = (xy)^r = 1 >`.
pub fn presentation_triangle(p: Weight, q: Weight, r: Weight) -> Result<Presentation, GroupError> {
    let (x, y) = (Word::gen(0), Word::gen(1));
    let mut rels = Vec::new();
    rels.extend(power_relator(&x, p));
    rels.extend(power_relator(&y, q));
    rels.extend(power_relator(&x.concat(&y), r));
    Presentation::new(vec!["x".into(), "y".into()], rels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Weight::{Finite as F, Infinite as Inf};

    #[test]
    fn two_strand_sphere_group_collapses() {
        let p = presentation_bn(2, Inf, &[], MixedConvention::FromOne).unwrap();
        assert_eq!(p.generators(), &["s1".to_string()]);
        assert_eq!(p.to_text(), "gen s1\nrel s1 s1\n");
    }

    #[test]
    fn bn_relator_inventory() {
        let p = presentation_bn(3, F(3), &[F(2), F(2)], MixedConvention::FromOne).unwrap();
        assert_eq!(p.generators().join(" "), "s1 s2 t0 t1");
        let text = p.to_text();
        assert!(text.contains("rel s1 s2 s1 S2 S1 S2\n"));
        // (s1 t1)^2 (t1 s1)^-2
        assert!(text.contains("rel s1 t1 s1 t1 S1 T1 S1 T1\n"));
        assert!(text.contains("rel t1 s2 T1 S2\n"));
        assert!(!text.contains("rel t0 s2 T0 S2\n"));
        assert!(text.contains("rel s1 s2 t0 t1 s2 s1\n"));
        assert!(text.contains("rel t0 t0\n"));
        assert!(text.contains("rel s1 s1 s1\n"));
        let q = presentation_bn(3, F(3), &[F(2), F(2)], MixedConvention::FromZero).unwrap();
        assert!(q.to_text().contains("rel t0 s2 T0 S2\n"));
        assert!(q.relators().len() > p.relators().len());
        assert!(presentation_bn(1, F(2), &[], MixedConvention::FromOne).is_err());
    }

    #[test]
    fn text_round_trip() {
        let p = presentation_b2_abcd(F(3), F(3), F(2), Inf).unwrap();
        assert_eq!(Presentation::parse(&p.to_text()).unwrap(), p);
        assert!(Presentation::parse("gen a\nrel a b\n").is_err());
        assert!(Presentation::parse("rel a\n").is_err());
    }

    #[test]
    fn b1_with_single_weight_is_trivial_shape() {
        let p = presentation_b1(&[F(5)]).unwrap();
        assert_eq!(p.relators().len(), 2);
    }
}
