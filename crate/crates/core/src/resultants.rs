//! Differential Sylvester matrices, the differential resultant, the first
//! differential subresultant and Bezout cofactors.
//!
//! For operators P, Q of orders n, m the matrix S0 has the coefficients of
//! the extended system Xi0 = {d^{m-1}P, ..., dP, P, d^{n-1}Q, ..., dQ, Q} as
//! rows, in the basis d^{n+m-1}, ..., d, 1 (columns descending). S1 drops one
//! derivative from each block and has n+m-2 rows and n+m-1 columns.
//!
//! Sign conventions: the first subresultant pair is the raw minor pair
//! (phi0, phi1) = (det of S1 without the d column, det of S1 without the 1
//! column). Prepending the row (0, ..., 0, 1, -d) to S1 gives a square
//! matrix whose determinant is (-1)^(n+m-1) * (phi0 + phi1 d), so the two
//! conventions agree up to that global sign.

use std::fmt;

use crate::diffop::{DiffOp, Order};
use crate::exact::{mpoly_lcm, Frac, MPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResultantError {
    /// S0 needs both operands of positive order.
    OrderZeroOperand,
    /// S1 needs at least one operand of order two or more.
    DegenerateSystem,
    /// The exact determinant value left the polynomial ring.
    NonPolynomialResultant,
}

impl fmt::Display for ResultantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResultantError::OrderZeroOperand => {
                write!(f, "sylvester matrix requires operands of positive order")
            }
            ResultantError::DegenerateSystem => {
                write!(f, "first subresultant requires an operand of order >= 2")
            }
            ResultantError::NonPolynomialResultant => {
                write!(f, "determinant is not polynomial after clearing")
            }
        }
    }
}

impl std::error::Error for ResultantError {}

/// A differential Sylvester matrix with denominator-cleared rows. The
/// tracked row multipliers are divided back out of determinants, so the
/// resultant values match the fraction-field determinants exactly.
#[derive(Clone, Debug)]
pub struct SylvesterMatrix {
    entries: Vec<Vec<MPoly>>,
    rows: usize,
    cols: usize,
    row_labels: Vec<String>,
    row_multipliers: Vec<MPoly>,
    /// Orders of (P, Q).
    orders: (usize, usize),
    /// Number of rows built from P (the rest come from Q).
    p_rows: usize,
}

impl SylvesterMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &MPoly {
        &self.entries[i][j]
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn row_multipliers(&self) -> &[MPoly] {
        &self.row_multipliers
    }

    fn multiplier_product(&self) -> MPoly {
        let mut p = MPoly::one();
        for d in &self.row_multipliers {
            p = &p * d;
        }
        p
    }

    fn minor(&self, skip_row: Option<usize>, skip_col: Option<usize>) -> MPoly {
        let m: Vec<Vec<MPoly>> = self
            .entries
            .iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != skip_row)
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| Some(*j) != skip_col)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        crate::exact::bareiss_det(m)
    }
}

impl fmt::Display for SylvesterMatrix {
    /// Debug dump: row-major entries with row and column labels.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            write!(f, "{}:", self.row_labels[i])?;
            for (j, e) in row.iter().enumerate() {
                let power = self.cols - 1 - j;
                write!(f, " [D^{}] {}", power, e)?;
                if j + 1 < row.len() {
                    f.write_str(" |")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Successive left compositions d^k * T for k = 0..count-1.
fn derivative_stack(t: &DiffOp, count: usize) -> Vec<DiffOp> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return out;
    }
    out.push(t.clone());
    for _ in 1..count {
        out.push(&DiffOp::d() * out.last().unwrap());
    }
    out
}

/// Clear one operator row to polynomial entries; returns the entries in
/// descending column order and the multiplier used.
fn cleared_row(t: &DiffOp, cols: usize) -> (Vec<MPoly>, MPoly) {
    let mut den = MPoly::one();
    for c in t.coeffs() {
        den = mpoly_lcm(&den, c.den());
    }
    let mut row = vec![MPoly::zero(); cols];
    for (k, c) in t.coeffs().iter().enumerate() {
        let scale = den.try_div_exact(c.den()).expect("lcm divisible");
        row[cols - 1 - k] = c.num() * &scale;
    }
    (row, den)
}

fn build(
    p: &DiffOp,
    q: &DiffOp,
    p_count: usize,
    q_count: usize,
    cols: usize,
) -> SylvesterMatrix {
    let mut entries = Vec::with_capacity(p_count + q_count);
    let mut labels = Vec::new();
    let mut mults = Vec::new();
    for (stack, name, count) in [(p, "P", p_count), (q, "Q", q_count)] {
        let ops = derivative_stack(stack, count);
        for (k, t) in ops.iter().enumerate().rev() {
            let (row, d) = cleared_row(t, cols);
            entries.push(row);
            mults.push(d);
            labels.push(if k == 0 {
                name.to_string()
            } else {
                format!("d^{}*{}", k, name)
            });
        }
    }
    SylvesterMatrix {
        rows: entries.len(),
        cols,
        entries,
        row_labels: labels,
        row_multipliers: mults,
        orders: (0, 0),
        p_rows: p_count,
    }
}

fn positive_orders(p: &DiffOp, q: &DiffOp) -> Result<(usize, usize), ResultantError> {
    match (p.order(), q.order()) {
        (Order::Finite(n), Order::Finite(m)) if n >= 1 && m >= 1 => Ok((n, m)),
        _ => Err(ResultantError::OrderZeroOperand),
    }
}

/// The square matrix S0(P, Q) of size n+m.
pub fn sylvester0(p: &DiffOp, q: &DiffOp) -> Result<SylvesterMatrix, ResultantError> {
    let (n, m) = positive_orders(p, q)?;
    let mut s = build(p, q, m, n, n + m);
    s.orders = (n, m);
    s.p_rows = m;
    Ok(s)
}

/// The matrix S1(P, Q) with n+m-2 rows and n+m-1 columns.
pub fn sylvester1(p: &DiffOp, q: &DiffOp) -> Result<SylvesterMatrix, ResultantError> {
    let (n, m) = positive_orders(p, q)?;
    if n < 2 && m < 2 {
        return Err(ResultantError::DegenerateSystem);
    }
    let mut s = build(p, q, m - 1, n - 1, n + m - 1);
    s.orders = (n, m);
    s.p_rows = m - 1;
    Ok(s)
}

/// Differential resultant: det(S0(P, Q)), an element of Q[x, lam, mu1, mu2].
pub fn dres(p: &DiffOp, q: &DiffOp) -> Result<MPoly, ResultantError> {
    let s = sylvester0(p, q)?;
    let det = crate::exact::bareiss_det(s.entries.clone());
    let value = Frac::new(det, s.multiplier_product());
    match value.den().as_constant() {
        Some(_) => Ok(value.num().scale(&value.den().as_constant().unwrap().recip())),
        None => Err(ResultantError::NonPolynomialResultant),
    }
}

/// First differential subresultant coefficient pair (phi0, phi1), the
/// fraction-field minors jointly cleared by the least common denominator,
/// so the ratio phi0/phi1 is preserved exactly.
pub fn subres1(p: &DiffOp, q: &DiffOp) -> Result<(MPoly, MPoly), ResultantError> {
    let s = sylvester1(p, q)?;
    let prod = s.multiplier_product();
    let cols = s.cols;
    let phi0 = Frac::new(s.minor(None, Some(cols - 2)), prod.clone());
    let phi1 = Frac::new(s.minor(None, Some(cols - 1)), prod);
    let den = mpoly_lcm(phi0.den(), phi1.den());
    let f0 = phi0.num() * &den.try_div_exact(phi0.den()).expect("lcm divisible");
    let f1 = phi1.num() * &den.try_div_exact(phi1.den()).expect("lcm divisible");
    Ok((f0, f1))
}

/// Bezout cofactors: operators (C0, D0) of orders m-1 and n-1 with
/// C0 * P + D0 * Q = dres(P, Q), from the cofactor expansion of S0 along the
/// appended operator column.
pub fn bezout_cofactors(p: &DiffOp, q: &DiffOp) -> Result<(DiffOp, DiffOp), ResultantError> {
    let s = sylvester0(p, q)?;
    let (n, m) = s.orders;
    let size = n + m;
    let prod = s.multiplier_product();
    let mut c0 = DiffOp::zero();
    let mut d0 = DiffOp::zero();
    for i in 0..size {
        let minor = s.minor(Some(i), Some(size - 1));
        if minor.is_zero() {
            continue;
        }
        // cofactor sign for entry (i, size-1), 0-indexed
        let negate = (i + size - 1) % 2 == 1;
        let minor = if negate { -&minor } else { minor };
        // divide by the product of the other rows' multipliers
        let mut others = MPoly::one();
        for (j, d) in s.row_multipliers.iter().enumerate() {
            if j != i {
                others = &others * d;
            }
        }
        let coeff = Frac::new(minor, others);
        if i < s.p_rows {
            let k = s.p_rows - 1 - i; // row i is d^k * P
            c0 = &c0 + &DiffOp::d_pow(k).scale(&coeff);
        } else {
            let k = size - 1 - i; // row i is d^k * Q
            d0 = &d0 + &DiffOp::d_pow(k).scale(&coeff);
        }
    }
    debug_assert!({
        let lhs = &(&c0 * p) + &(&d0 * q);
        let r = dres(p, q).map(|v| DiffOp::from_frac(Frac::from_mpoly(v)));
        r.map(|v| lhs == v).unwrap_or(true)
    });
    let _ = prod;
    Ok((c0, d0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_int, Var};

    fn xf() -> Frac {
        Frac::var(Var::X)
    }

    fn d_plus(f: Frac) -> DiffOp {
        &DiffOp::d() + &DiffOp::from_frac(f)
    }

    #[test]
    fn sylvester0_base_case() {
        // P = d + a, Q = d + b -> [[1, a], [1, b]]
        let a = xf();
        let b = &xf() * &xf();
        let s = sylvester0(&d_plus(a.clone()), &d_plus(b.clone())).unwrap();
        assert_eq!((s.rows(), s.cols()), (2, 2));
        assert_eq!(s.entry(0, 0), &MPoly::one());
        assert_eq!(s.entry(0, 1), a.num());
        assert_eq!(s.entry(1, 0), &MPoly::one());
        assert_eq!(s.entry(1, 1), b.num());
    }

    #[test]
    fn sylvester0_shape_for_worked_pair() {
        // orders 3 and 4 force a 7x7 matrix
        let p = &DiffOp::d_pow(3) - &DiffOp::from_frac(Frac::var(Var::Lam));
        let q = &DiffOp::d_pow(4) - &DiffOp::from_frac(Frac::var(Var::Mu1));
        let s = sylvester0(&p, &q).unwrap();
        assert_eq!((s.rows(), s.cols()), (7, 7));
    }

    #[test]
    fn sylvester0_rejects_order_zero() {
        assert_eq!(
            sylvester0(&DiffOp::one(), &DiffOp::d()),
            Err(ResultantError::OrderZeroOperand)
        );
    }

    #[test]
    fn dres_first_order_pair() {
        let a = xf();
        let b = &xf() * &xf();
        let r = dres(&d_plus(a.clone()), &d_plus(b.clone())).unwrap();
        assert_eq!(Frac::from_mpoly(r), &b - &a);
    }

    #[test]
    fn dres_noncommuting_pair_keeps_x() {
        // dres(d^2 - x, d) = -x: 3x3 determinant, rows (dP, P, Q)
        let p = &DiffOp::d_pow(2) - &DiffOp::from_frac(xf());
        let r = dres(&p, &DiffOp::d()).unwrap();
        assert_eq!(r, -&MPoly::var(Var::X));
    }

    #[test]
    fn subres1_order_zero_pair() {
        // (d^2 + b, d^2 + c) -> (c - b, 0)
        let b = xf();
        let c = &xf() * &xf();
        let p = &DiffOp::d_pow(2) + &DiffOp::from_frac(b.clone());
        let q = &DiffOp::d_pow(2) + &DiffOp::from_frac(c.clone());
        let (f0, f1) = subres1(&p, &q).unwrap();
        assert_eq!(Frac::from_mpoly(f0), &c - &b);
        assert!(f1.is_zero());
    }

    #[test]
    fn subres1_degenerate_rejected() {
        assert_eq!(
            subres1(&DiffOp::d(), &DiffOp::d()),
            Err(ResultantError::DegenerateSystem)
        );
    }

    #[test]
    fn subres1_finds_common_factor() {
        // (d + a)(d + c) and (d + b)(d + c) share d + c
        let a = DiffOp::from_frac(xf());
        let b = DiffOp::from_frac(&xf() * &xf());
        let c = Frac::new(MPoly::one(), MPoly::var(Var::X));
        let cf = d_plus(c.clone());
        let p = &(&DiffOp::d() + &a) * &cf;
        let q = &(&DiffOp::d() + &b) * &cf;
        assert!(dres(&p, &q).unwrap().is_zero());
        let (f0, f1) = subres1(&p, &q).unwrap();
        assert!(!f1.is_zero());
        let ratio = &Frac::from_mpoly(f0) / &Frac::from_mpoly(f1);
        assert_eq!(ratio, c);
    }

    #[test]
    fn bezout_first_order() {
        // (d+a, d+b) -> C0 = -1, D0 = 1
        let a = xf();
        let b = &xf() * &xf();
        let (c0, d0) = bezout_cofactors(&d_plus(a.clone()), &d_plus(b.clone())).unwrap();
        assert_eq!(c0, DiffOp::from_frac(Frac::constant(rat_int(-1))));
        assert_eq!(d0, DiffOp::one());
    }

    #[test]
    fn bezout_identical_operands() {
        let p = &DiffOp::d_pow(2) - &DiffOp::from_frac(xf());
        let (c0, d0) = bezout_cofactors(&p, &p).unwrap();
        let lhs = &(&c0 * &p) + &(&d0 * &p);
        assert!(lhs.is_zero());
    }

    #[test]
    fn bezout_recomposition_with_fractions() {
        let p = &DiffOp::d_pow(2) + &DiffOp::from_frac(Frac::new(MPoly::one(), MPoly::var(Var::X)));
        let q = &(&DiffOp::d_pow(3) - &DiffOp::from_frac(xf())) + &DiffOp::d();
        let (c0, d0) = bezout_cofactors(&p, &q).unwrap();
        let lhs = &(&c0 * &p) + &(&d0 * &q);
        let r = dres(&p, &q).unwrap();
        assert_eq!(lhs, DiffOp::from_frac(Frac::from_mpoly(r)));
    }

    #[test]
    fn matrix_dump_has_labels() {
        let p = &DiffOp::d_pow(2) - &DiffOp::from_frac(xf());
        let s = sylvester0(&p, &DiffOp::d()).unwrap();
        let dump = s.to_string();
        assert!(dump.contains("d^1*P") || dump.contains("P:"));
        assert!(dump.contains("[D^2]"));
    }
}
