//! Fraction-free determinants and the classical Sylvester resultant.

use super::mpoly::{MPoly, PolyError};
use super::vars::Var;

/// Determinant by Bareiss elimination with exact divisions. Entries stay in
/// the polynomial ring throughout; row swaps track the sign.
pub fn bareiss_det(mut m: Vec<Vec<MPoly>>) -> MPoly {
    let n = m.len();
    if n == 0 {
        return MPoly::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut negate = false;
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return MPoly::zero(),
            }
        }
        let pivot_row = m[k].clone();
        let pivot = pivot_row[k].clone();
        for i in k + 1..n {
            let lead = m[i][k].clone();
            for j in k + 1..n {
                let t = &(&m[i][j] * &pivot) - &(&lead * &pivot_row[j]);
                m[i][j] = t
                    .try_div_exact(&prev)
                    .expect("Bareiss division is exact");
            }
            m[i][k] = MPoly::zero();
        }
        prev = pivot;
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// Classical algebraic resultant of `f` and `g` with respect to `v`:
/// determinant of the Sylvester matrix with deg_v(f) rows of `g`-shifts above
/// deg_v(g) rows of `f`-shifts, columns in descending powers of `v`. The row
/// convention is fixed so that `Res_v(v - a, v - b) = b - a`.
pub fn uni_resultant(f: &MPoly, g: &MPoly, v: Var) -> Result<MPoly, PolyError> {
    let n = f.degree(v) as usize;
    let m = g.degree(v) as usize;
    if n == 0 || m == 0 {
        return Err(PolyError::DegreeZero(v));
    }
    let size = n + m;
    let ord = f.ord();
    let zero = MPoly::zero_in(ord);
    let mut mat = vec![vec![zero; size]; size];
    let fc: Vec<MPoly> = f.coeffs_in(v).into_iter().rev().collect(); // descending
    let gc: Vec<MPoly> = g.coeffs_in(v).into_iter().rev().collect();
    for i in 0..n {
        for (j, c) in gc.iter().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in fc.iter().enumerate() {
            mat[n + i][i + j] = c.clone();
        }
    }
    Ok(bareiss_det(mat))
}

#[cfg(test)]
mod tests {
    use super::super::rational::rat_int;
    use super::*;
    use crate::exact::gcd::mpoly_gcd;

    fn lam() -> MPoly {
        MPoly::var(Var::Lam)
    }
    fn mu1() -> MPoly {
        MPoly::var(Var::Mu1)
    }
    fn mu2() -> MPoly {
        MPoly::var(Var::Mu2)
    }

    #[test]
    fn det_small() {
        let c = |k: i64| MPoly::constant(rat_int(k));
        let m = vec![vec![c(1), c(2)], vec![c(3), c(4)]];
        assert_eq!(bareiss_det(m), c(-2));
        let s = vec![
            vec![c(0), c(1), c(0)],
            vec![c(1), c(0), c(0)],
            vec![c(0), c(0), c(5)],
        ];
        assert_eq!(bareiss_det(s), c(-5));
    }

    #[test]
    fn det_singular() {
        let c = |k: i64| MPoly::constant(rat_int(k));
        let m = vec![vec![c(1), c(2)], vec![c(2), c(4)]];
        assert_eq!(bareiss_det(m), MPoly::zero());
    }

    #[test]
    fn resultant_linear_row_convention() {
        // Res_lam(lam - a, lam - b) = b - a with a = mu1, b = mu2
        let f = &lam() - &mu1();
        let g = &lam() - &mu2();
        assert_eq!(
            uni_resultant(&f, &g, Var::Lam).unwrap(),
            &mu2() - &mu1()
        );
    }

    #[test]
    fn resultant_quadratic() {
        let f = &lam().pow(2) - &mu1();
        assert_eq!(
            uni_resultant(&f, &lam(), Var::Lam).unwrap(),
            -&mu1()
        );
    }

    #[test]
    fn resultant_rejects_degree_zero() {
        assert_eq!(
            uni_resultant(&lam(), &mu1(), Var::Lam),
            Err(PolyError::DegreeZero(Var::Lam))
        );
    }

    #[test]
    fn resultant_of_worked_example_generators() {
        // Res_lam(f1, f2) = p * f3 with p = mu1^10 + mu1^5 mu2^4 + mu2^8
        let lam1 = &lam() - &MPoly::one();
        let f1 = &(-&mu1().pow(3)) + &lam1.pow(4);
        let f2 = &(-&mu2().pow(3)) + &lam1.pow(5);
        let f3 = &mu2().pow(4) - &mu1().pow(5);
        let p = &(&mu1().pow(10) + &(&mu1().pow(5) * &mu2().pow(4))) + &mu2().pow(8);
        let r = uni_resultant(&f1, &f2, Var::Lam).unwrap();
        assert_eq!(r, &p * &f3);
    }

    proptest::proptest! {
        // resultant vanishes iff the pair has a common factor of positive
        // degree in v, checked through the gcd
        #[test]
        fn resultant_vs_gcd(a in crate::exact::testutil::arb_unipoly(Var::Lam),
                            b in crate::exact::testutil::arb_unipoly(Var::Lam),
                            c in crate::exact::testutil::arb_unipoly(Var::Lam)) {
            let f = &a * &c;
            let g = &b * &c;
            if f.degree(Var::Lam) >= 1 && g.degree(Var::Lam) >= 1 {
                let r = uni_resultant(&f, &g, Var::Lam).unwrap();
                let has_common = mpoly_gcd(&f, &g).degree(Var::Lam) >= 1;
                proptest::prop_assert_eq!(r.is_zero(), has_common);
            }
        }
    }
}
