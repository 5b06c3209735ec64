//! Sparse multivariate polynomials over the rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use super::ring::{rational_text, Ring};
use super::AlgebraError;

/// Exponent vector with trailing zeros removed, so that a monomial does not
/// depend on how many variables the ambient ring is thought to have.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        let mut v = vec![0; i + 1];
        v[i] = 1;
        Monomial(v)
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of variables actually used (index of last nonzero exponent + 1).
    pub fn span(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        Monomial::new((0..n).map(|i| self.exponent(i) + other.exponent(i)).collect())
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut out = self.0.clone();
        for (i, e) in other.0.iter().enumerate() {
            out[i] = out[i].checked_sub(*e)?;
        }
        Some(Monomial::new(out))
    }
}

/// A polynomial in `x0, x1, ...` with rational coefficients. Terms are kept
/// in lexicographic order on exponent vectors (`x0` most significant) and no
/// stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(i: usize) -> Self {
        Self::term(BigRational::one(), Monomial::var(i))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// Linear form `sum c_i x_i`.
    pub fn linear(coeffs: &[BigRational]) -> Self {
        let mut p = Poly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(i), c.clone());
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(it: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading term in lex order.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Number of variables the polynomial mentions.
    pub fn span(&self) -> usize {
        self.terms.keys().map(Monomial::span).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m1, c1)| (m1.mul(m), c1 * c))
                .collect(),
        }
    }

    /// Exact division in lex order; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lm, lc) = divisor.leading()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.leading() {
            let qm = m.div(&lm)?;
            let qc = c / &lc;
            rem = rem.sub(&divisor.mul_term(&qm, &qc));
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Evaluates at a rational point; missing coordinates count as zero.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in m.exponents().iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                let x = point.get(i).cloned().unwrap_or_else(BigRational::zero);
                t *= Ring::pow(&x, *e);
            }
            total += t;
        }
        total
    }

    /// Evaluates over any ring containing the rationals.
    pub fn eval_in<R: Ring + From<BigRational>>(&self, point: &[R]) -> R {
        let mut total = R::zero();
        for (m, c) in &self.terms {
            let mut t = R::from(c.clone());
            for (i, e) in m.exponents().iter().enumerate() {
                if *e > 0 {
                    t = t.times(&point.get(i).cloned().unwrap_or_else(R::zero).pow(*e));
                }
            }
            total = total.plus(&t);
        }
        total
    }

    /// Simultaneous substitution `x_i -> images[i]`.
    pub fn substitute(&self, images: &[Poly]) -> Result<Self, AlgebraError> {
        if self.span() > images.len() {
            return Err(AlgebraError::ArityMismatch {
                expected: self.span(),
                found: images.len(),
            });
        }
        // powers of each image are shared across terms
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one_poly(), p.clone()]).collect();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Replaces every exponent `e` by `k * e`, i.e. substitutes `x_i -> x_i^k`.
    pub fn inflate(&self, k: u32) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.exponents().iter().map(|e| e * k).collect()), c.clone()))
                .collect(),
        }
    }

    /// Renames variables: `x_i -> x_{perm[i]}`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        Poly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0u32; perm.iter().copied().max().map_or(0, |x| x + 1)];
            for (i, e) in m.exponents().iter().enumerate() {
                exps[perm[i]] += e;
            }
            (Monomial::new(exps), c.clone())
        }))
    }

    /// Partial derivative with respect to `x_i`.
    pub fn derivative(&self, i: usize) -> Self {
        Poly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(i);
            if e == 0 {
                return None;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            Some((Monomial::new(exps), c * BigRational::from_integer(e.into())))
        }))
    }

    fn one_poly() -> Self {
        Poly::constant(BigRational::one())
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// True if `self = c * other` for some nonzero rational `c`.
    pub fn proportional_to(&self, other: &Self) -> bool {
        self.monic() == other.monic() && self.is_zero() == other.is_zero()
    }

    /// Canonical text: `c * x0^e0 ... xk^ek` terms joined by ` + `, in
    /// descending lexicographic order.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let vars: Vec<String> = m
                    .exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| **e > 0)
                    .map(|(i, e)| format!("x{i}^{e}"))
                    .collect();
                if vars.is_empty() {
                    rational_text(c)
                } else {
                    format!("{} * {}", rational_text(c), vars.join(" "))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Parses the canonical text form back.
    pub fn parse(text: &str) -> Result<Self, AlgebraError> {
        let text = text.trim();
        if text == "0" {
            return Ok(Poly::zero());
        }
        let bad = || AlgebraError::Parse(text.to_string());
        let mut p = Poly::zero();
        for term in text.split(" + ") {
            let (coef, vars) = match term.split_once(" * ") {
                Some((c, v)) => (c, v),
                None => (term, ""),
            };
            let c: BigRational = coef.trim().parse().map_err(|_| bad())?;
            let mut exps = Vec::new();
            for v in vars.split_whitespace() {
                let (name, e) = v.split_once('^').ok_or_else(bad)?;
                let idx: usize = name.strip_prefix('x').ok_or_else(bad)?.parse().map_err(|_| bad())?;
                let e: u32 = e.parse().map_err(|_| bad())?;
                if exps.len() <= idx {
                    exps.resize(idx + 1, 0);
                }
                exps[idx] += e;
            }
            p.add_term(Monomial::new(exps), c);
        }
        Ok(p)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl From<BigRational> for Poly {
    fn from(c: BigRational) -> Self {
        Poly::constant(c)
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one_poly()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn negate(&self) -> Self {
        self.scale(&BigRational::from_integer((-1).into()))
    }
    fn from_i64(n: i64) -> Self {
        Poly::constant(BigRational::from_integer(n.into()))
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        Poly::div_exact(self, other)
    }
}

/// A polynomial known to be homogeneous of a fixed degree in a fixed number
/// of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousPoly {
    nvars: usize,
    degree: u32,
    poly: Poly,
}

impl HomogeneousPoly {
    pub fn new(nvars: usize, poly: Poly) -> Result<Self, AlgebraError> {
        if poly.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        if !poly.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous);
        }
        if poly.span() > nvars {
            return Err(AlgebraError::ArityMismatch {
                expected: nvars,
                found: poly.span(),
            });
        }
        let degree = poly.total_degree().unwrap_or(0);
        Ok(HomogeneousPoly { nvars, degree, poly })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        self.poly.eval(point)
    }

    pub fn to_text(&self) -> String {
        self.poly.to_text()
    }
}
