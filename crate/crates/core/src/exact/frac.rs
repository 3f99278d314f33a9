//! Reduced fractions of multivariate polynomials: the coefficient field for
//! differential operators, with the derivation d/dx.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Signed;

use super::gcd::{mpoly_gcd, mpoly_lcm};
use super::mpoly::MPoly;
use super::rational::Rational;
use super::vars::Var;

/// `num/den` with `den` nonzero, `gcd(num, den)` a unit, and `den` primitive
/// with positive leading coefficient. Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frac {
    num: MPoly,
    den: MPoly,
}

impl Frac {
    pub fn new(num: MPoly, den: MPoly) -> Frac {
        assert!(!den.is_zero(), "fraction with zero denominator");
        if num.is_zero() {
            return Frac {
                num,
                den: MPoly::one(),
            };
        }
        let g = mpoly_gcd(&num, &den);
        let num = num.try_div_exact(&g).expect("gcd divides");
        let den = den.try_div_exact(&g).expect("gcd divides");
        let c = den.content();
        let den = den.scale(&c.recip());
        let num = num.scale(&c.recip());
        Frac { num, den }
    }

    pub fn from_mpoly(p: MPoly) -> Frac {
        Frac {
            num: p,
            den: MPoly::one(),
        }
    }

    pub fn zero() -> Frac {
        Frac::from_mpoly(MPoly::zero())
    }

    pub fn one() -> Frac {
        Frac::from_mpoly(MPoly::one())
    }

    pub fn constant(c: Rational) -> Frac {
        Frac::from_mpoly(MPoly::constant(c))
    }

    pub fn var(v: Var) -> Frac {
        Frac::from_mpoly(MPoly::var(v))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in Q.
    pub fn is_rational(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    pub fn is_negative_lead(&self) -> bool {
        self.num.leading_coeff().is_negative()
    }

    pub fn abs_lead(&self) -> Frac {
        if self.is_negative_lead() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn inv(&self) -> Option<Frac> {
        if self.is_zero() {
            None
        } else {
            Some(Frac::new(self.den.clone(), self.num.clone()))
        }
    }

    pub fn pow(&self, e: u32) -> Frac {
        Frac::new(self.num.pow(e), self.den.pow(e))
    }

    /// Derivative with respect to `x`; all other variables are constants.
    pub fn deriv_x(&self) -> Frac {
        let n = &self.num;
        let d = &self.den;
        let num = &(&n.deriv(Var::X) * d) - &(n * &d.deriv(Var::X));
        Frac::new(num, &(d * d))
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.num.contains_var(v) || self.den.contains_var(v)
    }

    /// Substitute fractions for variables; `None` if a denominator vanishes.
    pub fn subst(&self, assign: &[(Var, Frac)]) -> Option<Frac> {
        let num = mpoly_subst(&self.num, assign);
        let den = mpoly_subst(&self.den, assign);
        if den.is_zero() {
            return None;
        }
        Some(num / den)
    }

    /// Substitute rational values for some variables.
    pub fn eval_partial(&self, assign: &[(Var, Rational)]) -> Option<Frac> {
        let num = self.num.eval_partial(assign);
        let den = self.den.eval_partial(assign);
        if den.is_zero() {
            return None;
        }
        Some(Frac::new(num, den))
    }

    /// String that parses as a multiplicative factor (parenthesized if the
    /// plain form has a top-level sum).
    pub fn factor_string(&self) -> String {
        if self.den.is_one() && self.num.num_terms() > 1 {
            format!("({})", self.num)
        } else {
            self.to_string()
        }
    }
}

/// Evaluate a polynomial with fractions substituted for variables.
pub fn mpoly_subst(p: &MPoly, assign: &[(Var, Frac)]) -> Frac {
    let mut acc = Frac::zero();
    for (m, c) in p.terms() {
        let mut term = Frac::constant(c.clone());
        for v in m.vars() {
            let e = m.exp(v);
            match assign.iter().find(|(w, _)| *w == v) {
                Some((_, f)) => term = &term * &f.pow(e),
                None => {
                    term = &term * &Frac::from_mpoly(MPoly::var_pow(v, e));
                }
            }
        }
        acc = &acc + &term;
    }
    acc
}

impl Add for &Frac {
    type Output = Frac;
    fn add(self, rhs: &Frac) -> Frac {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Frac::new(num, &self.den * &rhs.den)
    }
}

impl Sub for &Frac {
    type Output = Frac;
    fn sub(self, rhs: &Frac) -> Frac {
        self + &(-rhs)
    }
}

impl Neg for &Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        Frac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &Frac {
    type Output = Frac;
    fn mul(self, rhs: &Frac) -> Frac {
        Frac::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &Frac {
    type Output = Frac;
    fn div(self, rhs: &Frac) -> Frac {
        assert!(!rhs.is_zero(), "division by zero fraction");
        Frac::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

fn needs_parens_as_den(p: &MPoly) -> bool {
    if p.num_terms() != 1 {
        return true;
    }
    let (m, c) = p.leading().expect("nonzero");
    // a bare power like x^3 binds correctly after '/', anything else does not
    !(c.is_one() && m.vars().count() <= 1)
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if needs_parens_as_den(&self.den) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}
