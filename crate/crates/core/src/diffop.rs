//! The noncommutative ring of ordinary differential operators with rational
//! function coefficients: d * a = a * d + a'.
//!
//! Operators are finite coefficient lists in powers of d, lowest first. The
//! coefficient field is the full fraction field of Q[x, lam, mu1, mu2, tau],
//! so Euclidean division with symbolic parameters needs no special casing.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

use crate::exact::{Frac, MPoly, Rational, Var};

/// Order of an operator. The zero operator gets a dedicated sentinel rather
/// than an integer, so accidental arithmetic on it fails to compile.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    NegInf,
    Finite(usize),
}

impl Order {
    pub fn finite(self) -> Option<usize> {
        match self {
            Order::NegInf => None,
            Order::Finite(n) => Some(n),
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::NegInf => write!(f, "-inf"),
            Order::Finite(n) => write!(f, "{}", n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OpError {
    DivisionByZeroOperator,
    GcrdOfZeroPair,
}

impl fmt::Display for OpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpError::DivisionByZeroOperator => write!(f, "right division by the zero operator"),
            OpError::GcrdOfZeroPair => write!(f, "gcrd of two zero operators"),
        }
    }
}

impl std::error::Error for OpError {}

/// An ordinary differential operator sum c_k d^k. Trailing zero coefficients
/// are trimmed; the zero operator has an empty list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOp {
    coeffs: Vec<Frac>,
}

impl DiffOp {
    pub fn zero() -> DiffOp {
        DiffOp { coeffs: Vec::new() }
    }

    pub fn one() -> DiffOp {
        DiffOp::from_frac(Frac::one())
    }

    /// The derivation d.
    pub fn d() -> DiffOp {
        DiffOp {
            coeffs: vec![Frac::zero(), Frac::one()],
        }
    }

    pub fn d_pow(k: usize) -> DiffOp {
        let mut coeffs = vec![Frac::zero(); k + 1];
        coeffs[k] = Frac::one();
        DiffOp { coeffs }
    }

    pub fn from_frac(c: Frac) -> DiffOp {
        let mut op = DiffOp { coeffs: vec![c] };
        op.trim();
        op
    }

    pub fn from_coeffs(coeffs: Vec<Frac>) -> DiffOp {
        let mut op = DiffOp { coeffs };
        op.trim();
        op
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Frac::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn order(&self) -> Order {
        if self.coeffs.is_empty() {
            Order::NegInf
        } else {
            Order::Finite(self.coeffs.len() - 1)
        }
    }

    /// Coefficient of d^k (zero beyond the order).
    pub fn coeff(&self, k: usize) -> Frac {
        self.coeffs.get(k).cloned().unwrap_or_else(Frac::zero)
    }

    pub fn coeffs(&self) -> &[Frac] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Frac> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(Frac::is_one)
    }

    /// True when every coefficient lies in Q (a constant-coefficient operator).
    pub fn has_constant_coeffs(&self) -> bool {
        self.coeffs.iter().all(Frac::is_rational)
    }

    pub fn scale(&self, c: &Frac) -> DiffOp {
        DiffOp::from_coeffs(self.coeffs.iter().map(|k| k * c).collect())
    }

    pub fn map_coeffs(&self, f: impl Fn(&Frac) -> Frac) -> DiffOp {
        DiffOp::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> DiffOp {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, e: u32) -> DiffOp {
        let mut acc = DiffOp::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// AB - BA.
    pub fn commutator(&self, other: &DiffOp) -> DiffOp {
        &(self * other) - &(other * self)
    }

    /// Right division: `self = q * rhs + r` with ord(r) < ord(rhs).
    pub fn right_divmod(&self, rhs: &DiffOp) -> Result<(DiffOp, DiffOp), OpError> {
        let m = match rhs.order() {
            Order::NegInf => return Err(OpError::DivisionByZeroOperator),
            Order::Finite(m) => m,
        };
        let lc_inv = rhs
            .leading_coeff()
            .unwrap()
            .inv()
            .expect("leading coefficient nonzero");
        let mut r = self.clone();
        let mut q = DiffOp::zero();
        while let Order::Finite(n) = r.order() {
            if n < m {
                break;
            }
            let c = r.leading_coeff().unwrap() * &lc_inv;
            let t = DiffOp::d_pow(n - m).scale(&c);
            q = &q + &t;
            r = &r - &(&t * rhs);
        }
        debug_assert_eq!(&(&q * rhs) + &r, *self, "division recomposition");
        Ok((q, r))
    }

    /// Monic greatest common right divisor by the right Euclidean algorithm.
    pub fn gcrd(&self, other: &DiffOp) -> Result<DiffOp, OpError> {
        if self.is_zero() && other.is_zero() {
            return Err(OpError::GcrdOfZeroPair);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        if a.is_zero() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (_, r) = a.right_divmod(&b)?;
            // normalizing each remainder keeps coefficient growth in check
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Substitute fractions for parameter variables in every coefficient.
    /// `None` if a coefficient denominator vanishes under the substitution.
    pub fn subst(&self, assign: &[(Var, Frac)]) -> Option<DiffOp> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c.subst(assign)?);
        }
        Some(DiffOp::from_coeffs(coeffs))
    }

    pub fn eval_params(&self, assign: &[(Var, Rational)]) -> Option<DiffOp> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c.eval_partial(assign)?);
        }
        Some(DiffOp::from_coeffs(coeffs))
    }

    /// Evaluate a constant-coefficient polynomial in lam at this operator.
    pub fn eval_poly(p: &MPoly, at: &DiffOp) -> DiffOp {
        let mut acc = DiffOp::zero();
        for (m, c) in p.terms() {
            let e = m.exp(Var::Lam);
            debug_assert_eq!(m.total_degree(), e, "univariate in lam");
            acc = &acc + &at.pow(e).scale(&Frac::constant(c.clone()));
        }
        acc
    }
}

impl Add for &DiffOp {
    type Output = DiffOp;
    fn add(self, rhs: &DiffOp) -> DiffOp {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(&self.coeff(k) + &rhs.coeff(k));
        }
        DiffOp::from_coeffs(coeffs)
    }
}

impl Sub for &DiffOp {
    type Output = DiffOp;
    fn sub(self, rhs: &DiffOp) -> DiffOp {
        self + &(-rhs)
    }
}

impl Neg for &DiffOp {
    type Output = DiffOp;
    fn neg(self) -> DiffOp {
        DiffOp {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &DiffOp {
    type Output = DiffOp;
    /// Noncommutative product under d(a) = a d + a'. Expanding
    /// d^i a = sum_k C(i,k) a^(k) d^(i-k).
    fn mul(self, rhs: &DiffOp) -> DiffOp {
        if self.is_zero() || rhs.is_zero() {
            return DiffOp::zero();
        }
        let n = self.coeffs.len() - 1;
        let m = rhs.coeffs.len() - 1;
        let mut out = vec![Frac::zero(); n + m + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let mut der = b.clone(); // k-th derivative of b
                let mut binom = Rational::one();
                for k in 0..=i {
                    if !der.is_zero() {
                        let term = &(a * &der) * &Frac::constant(binom.clone());
                        out[i - k + j] = &out[i - k + j] + &term;
                    } else {
                        break;
                    }
                    if k < i {
                        // C(i, k+1) = C(i, k) * (i - k) / (k + 1)
                        binom = binom * Rational::from_integer(BigInt::from(i - k))
                            / Rational::from_integer(BigInt::from(k + 1));
                        der = der.deriv_x();
                    }
                }
            }
        }
        DiffOp::from_coeffs(out)
    }
}

impl fmt::Display for DiffOp {
    /// Operator grammar text: `coef * D^k` terms, highest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative_lead();
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.abs_lead();
            let dpart = match k {
                0 => String::new(),
                1 => "D".to_string(),
                _ => format!("D^{}", k),
            };
            if k == 0 {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                f.write_str(&dpart)?;
            } else {
                write!(f, "{} * {}", mag.factor_string(), dpart)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_int, MPoly};

    fn xf() -> Frac {
        Frac::var(Var::X)
    }

    fn inv_x(k: u32) -> Frac {
        Frac::new(MPoly::one(), MPoly::var_pow(Var::X, k))
    }

    #[test]
    fn leibniz_base_case() {
        // d * a(x) = a d + a'
        let a = DiffOp::from_frac(inv_x(2));
        let p = &DiffOp::d() * &a;
        assert_eq!(p.coeff(1), inv_x(2));
        assert_eq!(p.coeff(0), inv_x(2).deriv_x());
    }

    #[test]
    fn first_order_product() {
        // (d - a)(d + a) = d^2 + (a' - a^2)
        let a = xf();
        let lhs = &(&DiffOp::d() - &DiffOp::from_frac(a.clone()))
            * &(&DiffOp::d() + &DiffOp::from_frac(a.clone()));
        assert_eq!(lhs.coeff(2), Frac::one());
        assert!(lhs.coeff(1).is_zero());
        assert_eq!(lhs.coeff(0), &a.deriv_x() - &(&a * &a));
    }

    #[test]
    fn constant_coefficient_ops_commute() {
        let a = DiffOp::d_pow(2);
        let b = DiffOp::d_pow(3);
        assert!(a.commutator(&b).is_zero());
    }

    #[test]
    fn commutator_with_function() {
        // [d, f] = f'
        let fop = DiffOp::from_frac(inv_x(1));
        let c = DiffOp::d().commutator(&fop);
        assert_eq!(c, DiffOp::from_frac(inv_x(1).deriv_x()));
    }

    #[test]
    fn divmod_contract() {
        // d^2 by (d + a): quotient d - a, remainder a^2 - a'
        let a = xf();
        let b = &DiffOp::d() + &DiffOp::from_frac(a.clone());
        let (q, r) = DiffOp::d_pow(2).right_divmod(&b).unwrap();
        assert_eq!(q, &DiffOp::d() - &DiffOp::from_frac(a.clone()));
        assert_eq!(
            r,
            DiffOp::from_frac(&(&a * &a) - &a.deriv_x())
        );
    }

    #[test]
    fn divmod_self_and_low_order() {
        let a = &DiffOp::d_pow(2) - &DiffOp::from_frac(xf());
        let (q, r) = a.right_divmod(&a).unwrap();
        assert_eq!(q, DiffOp::one());
        assert!(r.is_zero());
        // order drop: a0(x) by d -> (0, a0)
        let a0 = DiffOp::from_frac(inv_x(3));
        let (q, r) = a0.right_divmod(&DiffOp::d()).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, a0);
    }

    #[test]
    fn divmod_by_zero_rejected() {
        assert_eq!(
            DiffOp::d().right_divmod(&DiffOp::zero()),
            Err(OpError::DivisionByZeroOperator)
        );
    }

    #[test]
    fn gcrd_cases() {
        let p = &DiffOp::d_pow(2) - &DiffOp::from_frac(xf());
        assert_eq!(p.gcrd(&p).unwrap(), p.monic());
        assert_eq!(p.gcrd(&DiffOp::one()).unwrap(), DiffOp::one());
        assert_eq!(
            DiffOp::zero().gcrd(&DiffOp::zero()),
            Err(OpError::GcrdOfZeroPair)
        );
        // common right factor is recovered
        let f = &DiffOp::d() + &DiffOp::from_frac(inv_x(1));
        let a = &(&DiffOp::d() + &DiffOp::from_frac(xf())) * &f;
        let b = &(&DiffOp::d_pow(2) + &DiffOp::from_frac(Frac::constant(rat_int(3)))) * &f;
        assert_eq!(a.gcrd(&b).unwrap(), f.monic());
    }

    #[test]
    fn order_sentinel() {
        assert_eq!(DiffOp::zero().order(), Order::NegInf);
        assert_eq!(DiffOp::zero().order().finite(), None);
        assert_eq!(DiffOp::d_pow(4).order(), Order::Finite(4));
    }

    #[test]
    fn eval_poly_at_operator() {
        // p(lam) = lam^2 - 1 at d: d^2 - 1
        let p = &MPoly::var_pow(Var::Lam, 2) - &MPoly::one();
        let e = DiffOp::eval_poly(&p, &DiffOp::d());
        assert_eq!(e, &DiffOp::d_pow(2) - &DiffOp::one());
    }

    proptest::proptest! {
        #[test]
        fn order_additivity(a in arb_op(), b in arb_op()) {
            proptest::prop_assume!(!a.is_zero() && !b.is_zero());
            let (Order::Finite(na), Order::Finite(nb)) = (a.order(), b.order()) else { unreachable!() };
            let p = &a * &b;
            proptest::prop_assert_eq!(p.order(), Order::Finite(na + nb));
        }

        #[test]
        fn associativity_distributivity(a in arb_op(), b in arb_op(), c in arb_op()) {
            proptest::prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            proptest::prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn divmod_roundtrip(a in arb_op(), b in arb_op()) {
            proptest::prop_assume!(!b.is_zero());
            let (q, r) = a.right_divmod(&b).unwrap();
            proptest::prop_assert_eq!(&(&q * &b) + &r, a);
            if let (Order::Finite(nr), Order::Finite(nb)) = (r.order(), b.order()) {
                proptest::prop_assert!(nr < nb);
            }
        }

        #[test]
        fn gcrd_divides_both(a in arb_op(), b in arb_op()) {
            proptest::prop_assume!(!a.is_zero() || !b.is_zero());
            let g = a.gcrd(&b).unwrap();
            for t in [&a, &b] {
                if !t.is_zero() {
                    let (_, r) = t.right_divmod(&g).unwrap();
                    proptest::prop_assert!(r.is_zero());
                }
            }
        }
    }

    #[cfg(test)]
    fn arb_op() -> impl proptest::prelude::Strategy<Value = DiffOp> {
        use proptest::prelude::*;
        proptest::collection::vec(crate::exact::testutil::arb_frac(), 0..4)
            .prop_map(DiffOp::from_coeffs)
    }
}
