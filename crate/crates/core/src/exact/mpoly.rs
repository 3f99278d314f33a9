//! Sparse multivariate polynomials over Q in the fixed variable set.
//!
//! Terms are kept sorted strictly descending in the active monomial order,
//! zero coefficients are never stored, and the zero polynomial has an empty
//! term list.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{rat_gcd, Rational};
use super::vars::{MonoOrder, Var};
use super::Monomial;

#[derive(Clone, Debug)]
pub struct MPoly {
    terms: Vec<(Monomial, Rational)>,
    ord: MonoOrder,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    /// An operation that rejects the zero polynomial received it.
    ZeroPolynomial,
    /// `uni_resultant` requires positive degree in the eliminated variable.
    DegreeZero(Var),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ZeroPolynomial => write!(f, "zero polynomial rejected"),
            PolyError::DegreeZero(v) => {
                write!(f, "operand has degree zero in {}", v)
            }
        }
    }
}

impl std::error::Error for PolyError {}

impl MPoly {
    pub fn zero() -> Self {
        MPoly {
            terms: Vec::new(),
            ord: MonoOrder::default(),
        }
    }

    pub fn zero_in(ord: MonoOrder) -> Self {
        MPoly {
            terms: Vec::new(),
            ord,
        }
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((Monomial::one(), c));
        }
        MPoly {
            terms,
            ord: MonoOrder::default(),
        }
    }

    pub fn one() -> Self {
        MPoly::constant(Rational::one())
    }

    pub fn var(v: Var) -> Self {
        MPoly {
            terms: vec![(Monomial::var(v), Rational::one())],
            ord: MonoOrder::default(),
        }
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        MPoly {
            terms: vec![(Monomial::var_pow(v, e), Rational::one())],
            ord: MonoOrder::default(),
        }
    }

    /// Build from arbitrary (monomial, coefficient) pairs; combines duplicates.
    pub fn from_terms(terms: Vec<(Monomial, Rational)>, ord: MonoOrder) -> Self {
        let mut map: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            let e = map.entry(m).or_insert_with(Rational::zero);
            *e += c;
        }
        let mut terms: Vec<(Monomial, Rational)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp_in(&a.0, &ord));
        MPoly { terms, ord }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn ord(&self) -> MonoOrder {
        self.ord
    }

    /// Re-sort the terms under a different monomial order.
    pub fn with_order(&self, ord: MonoOrder) -> MPoly {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| b.0.cmp_in(&a.0, &ord));
        MPoly { terms, ord }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    /// Leading (monomial, coefficient) under the active order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_coeff(&self) -> Rational {
        self.terms
            .first()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) > 0)
    }

    /// Variables with nonzero exponent somewhere in the polynomial.
    pub fn vars_present(&self) -> Vec<Var> {
        let mut out = Vec::new();
        for v in Var::ALL {
            if self.contains_var(v) {
                out.push(v);
            }
        }
        out
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero_in(self.ord);
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
            ord: self.ord,
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero_in(self.ord);
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
            ord: self.ord,
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one().with_order(self.ord);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, k: u32) -> MPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(v) == k)
            .map(|(m, c)| {
                (
                    m.div(&Monomial::var_pow(v, k)).expect("exponent matches"),
                    c.clone(),
                )
            })
            .collect();
        MPoly::from_terms(terms, self.ord)
    }

    /// Dense coefficient list in `v`, from degree 0 upward.
    pub fn coeffs_in(&self, v: Var) -> Vec<MPoly> {
        let d = self.degree(v) as usize;
        let mut out = vec![MPoly::zero_in(self.ord); d + 1];
        for (m, c) in &self.terms {
            let k = m.exp(v) as usize;
            let rest = m.div(&Monomial::var_pow(v, k as u32)).unwrap();
            out[k].terms.push((rest, c.clone()));
        }
        for p in &mut out {
            let ord = self.ord;
            p.terms.sort_by(|a, b| b.0.cmp_in(&a.0, &ord));
        }
        out
    }

    /// Rebuild from a dense coefficient list in `v`.
    pub fn from_coeffs_in(v: Var, coeffs: &[MPoly], ord: MonoOrder) -> MPoly {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, q) in &c.terms {
                terms.push((m.mul(&Monomial::var_pow(v, k as u32)), q.clone()));
            }
        }
        MPoly::from_terms(terms, ord)
    }

    /// Partial derivative.
    pub fn deriv(&self, v: Var) -> MPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(v) > 0)
            .map(|(m, c)| {
                let e = m.exp(v);
                (
                    m.div(&Monomial::var(v)).unwrap(),
                    c * Rational::from_integer(e.into()),
                )
            })
            .collect();
        MPoly::from_terms(terms, self.ord)
    }

    /// Substitute rational values for some variables.
    pub fn eval_partial(&self, assign: &[(Var, Rational)]) -> MPoly {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Monomial::one();
            for v in m.vars() {
                let e = m.exp(v);
                if let Some((_, val)) = assign.iter().find(|(w, _)| *w == v) {
                    let mut p = Rational::one();
                    for _ in 0..e {
                        p *= val;
                    }
                    coeff *= p;
                } else {
                    rest = rest.mul(&Monomial::var_pow(v, e));
                }
            }
            terms.push((rest, coeff));
        }
        MPoly::from_terms(terms, self.ord)
    }

    /// Signed content: the rational `c` with `self = c * primitive part`,
    /// where the primitive part has coprime integer coefficients and positive
    /// leading coefficient. Zero polynomial has content zero.
    pub fn content(&self) -> Rational {
        let mut g = Rational::zero();
        for (_, c) in &self.terms {
            g = rat_gcd(&g, c);
        }
        if self.leading_coeff().is_negative() {
            g = -g;
        }
        g
    }

    /// `self / content`: coprime integer coefficients, positive leading
    /// coefficient. The zero polynomial is returned unchanged.
    pub fn primitive(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        self.scale(&c.recip())
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn try_div_exact(&self, d: &MPoly) -> Option<MPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(MPoly::zero_in(self.ord));
        }
        let (dm, dc) = d.leading().unwrap();
        let dm = dm.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut q_terms = Vec::new();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().unwrap();
            let qm = rm.div(&dm)?;
            let qc = rc / &dc;
            rem = &rem - &d.mul_term(&qm, &qc);
            q_terms.push((qm, qc));
        }
        Some(MPoly::from_terms(q_terms, self.ord))
    }

    /// Evaluate with `Rational` values for every present variable.
    pub fn eval_all(&self, assign: &[(Var, Rational)]) -> Option<Rational> {
        let r = self.eval_partial(assign);
        r.as_constant()
    }
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.ord == other.ord {
            return self.terms == other.terms;
        }
        // same term multiset regardless of the active order
        let mut a = self.terms.clone();
        let mut b = other.terms.clone();
        a.sort_by(|x, y| x.0.cmp(&y.0));
        b.sort_by(|x, y| x.0.cmp(&y.0));
        a == b
    }
}

impl Eq for MPoly {}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let ord = self.ord;
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &rhs.terms[j];
            match ma.cmp_in(mb, &ord) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(rhs.terms[j..].iter().cloned());
        MPoly { terms: out, ord }
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self + &(-rhs)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
            ord: self.ord,
        }
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero_in(self.ord);
        }
        let mut map: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let e = map.entry(m).or_insert_with(Rational::zero);
                *e += ca * cb;
            }
        }
        let ord = self.ord;
        let mut terms: Vec<(Monomial, Rational)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp_in(&a.0, &ord));
        MPoly { terms, ord }
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, m: &Monomial, c: &Rational) -> fmt::Result {
    if m.is_one() {
        return write!(f, "{}", c);
    }
    if c.is_one() {
        write!(f, "{}", fmt_monomial(m))
    } else {
        write!(f, "{} * {}", c, fmt_monomial(m))
    }
}

fn fmt_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for v in m.vars() {
        let e = m.exp(v);
        if e == 1 {
            parts.push(v.name().to_string());
        } else {
            parts.push(format!("{}^{}", v, e));
        }
    }
    parts.join(" * ")
}

impl fmt::Display for MPoly {
    /// Canonical text form: sum of `c * x^a * lam^b * mu1^c * mu2^d * tau^e`
    /// terms in descending order, unit exponents and unit coefficients
    /// omitted. Parses back to an identical polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            fmt_term(f, m, &c.abs())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::{rat, rat_int};
    use super::*;

    fn lam() -> MPoly {
        MPoly::var(Var::Lam)
    }
    fn x() -> MPoly {
        MPoly::var(Var::X)
    }

    #[test]
    fn arithmetic_basics() {
        let p = &(&lam() + &MPoly::one()).pow(2) - &MPoly::one();
        // lam^2 + 2 lam
        assert_eq!(p.degree(Var::Lam), 2);
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coeff_of(Var::Lam, 1), MPoly::constant(rat_int(2)));
    }

    #[test]
    fn content_and_primitive() {
        let p = &x().scale(&rat(3, 2)) + &MPoly::constant(rat(9, 4));
        assert_eq!(p.content(), rat(3, 4));
        let pp = p.primitive();
        assert_eq!(pp, &x().scale(&rat_int(2)) + &MPoly::constant(rat_int(3)));
        let q = -&p;
        assert_eq!(q.content(), rat(-3, 4));
        assert_eq!(q.primitive(), pp);
    }

    #[test]
    fn exact_division() {
        let a = &(&lam() - &MPoly::one()) * &(&lam() + &x());
        assert_eq!(
            a.try_div_exact(&(&lam() - &MPoly::one())).unwrap(),
            &lam() + &x()
        );
        assert!(a.try_div_exact(&(&lam() + &MPoly::one())).is_none());
    }

    #[test]
    fn display_canonical() {
        // lam^4 - 4 lam^3 + ... - mu1^3 + 1 ordering under the default order
        let lam1 = &lam() - &MPoly::one();
        let f1 = &(-&MPoly::var_pow(Var::Mu1, 3)) + &lam1.pow(4);
        assert_eq!(
            f1.to_string(),
            "lam^4 - 4 * lam^3 + 6 * lam^2 - 4 * lam - mu1^3 + 1"
        );
        assert_eq!(MPoly::zero().to_string(), "0");
        assert_eq!(MPoly::constant(rat(-1, 2)).to_string(), "-1/2");
    }

    #[test]
    fn eval_partial_collapses() {
        let p = &(&lam() * &x()) + &MPoly::var(Var::Mu1);
        let q = p.eval_partial(&[(Var::Lam, rat_int(2)), (Var::Mu1, rat_int(5))]);
        assert_eq!(q, &x().scale(&rat_int(2)) + &MPoly::constant(rat_int(5)));
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(200))]
        #[test]
        fn add_sub_roundtrip(a in crate::exact::testutil::arb_mpoly(), b in crate::exact::testutil::arb_mpoly()) {
            let s = &(&a + &b) - &b;
            proptest::prop_assert_eq!(s, a);
        }

        #[test]
        fn mul_div_roundtrip(a in crate::exact::testutil::arb_mpoly(), b in crate::exact::testutil::arb_mpoly()) {
            proptest::prop_assume!(!b.is_zero());
            let p = &a * &b;
            let q = p.try_div_exact(&b).expect("product divisible by factor");
            proptest::prop_assert_eq!(q, a);
        }
    }
}
