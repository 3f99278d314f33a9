//! Polynomial gcd via primitive pseudo-remainder sequences, and the
//! square-free part kernel built on it.

use super::mpoly::{MPoly, PolyError};
use super::vars::Var;

/// Content of `p` with respect to `v`: the gcd of its `v`-coefficients,
/// a polynomial in the remaining variables.
fn content_in(p: &MPoly, v: Var) -> MPoly {
    let mut g = MPoly::zero_in(p.ord());
    for c in p.coeffs_in(v) {
        if c.is_zero() {
            continue;
        }
        g = mpoly_gcd(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Pseudo-remainder of `p` by `q` in the variable `v` (`q` of positive
/// degree in `v`). Each reduction step scales by the leading coefficient of
/// `q`, keeping everything polynomial.
fn pseudo_rem(p: &MPoly, q: &MPoly, v: Var) -> MPoly {
    let dq = q.degree(v);
    let lq = q.coeff_of(v, dq);
    let mut r = p.clone();
    while !r.is_zero() && r.degree(v) >= dq {
        let dr = r.degree(v);
        let lr = r.coeff_of(v, dr);
        let shift = &MPoly::var_pow(v, dr - dq) * &lr;
        r = &(&r * &lq) - &(&shift * q);
        debug_assert!(r.is_zero() || r.degree(v) < dr);
    }
    r
}

fn gcd_in(a: &MPoly, b: &MPoly, v: Var) -> MPoly {
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let cg = mpoly_gcd(&ca, &cb);
    let mut p = a.try_div_exact(&ca).expect("content divides");
    let mut q = b.try_div_exact(&cb).expect("content divides");
    if p.degree(v) < q.degree(v) {
        std::mem::swap(&mut p, &mut q);
    }
    // primitive PRS
    loop {
        if q.is_zero() {
            break;
        }
        if q.degree(v) == 0 {
            // primitive and v-free: coprime in v
            p = MPoly::one();
            break;
        }
        let r = pseudo_rem(&p, &q, v);
        let r = if r.is_zero() {
            r
        } else {
            let c = content_in(&r, v);
            r.try_div_exact(&c).expect("content divides")
        };
        p = q;
        q = r;
    }
    (&cg * &p).primitive()
}

/// Greatest common divisor, primitive with positive leading coefficient
/// under the active order. `gcd(0, b)` is the normalized `b`; `gcd(0, 0) = 0`.
pub fn mpoly_gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    let main = a
        .ord()
        .priority()
        .iter()
        .copied()
        .find(|&v| a.contains_var(v) || b.contains_var(v));
    match main {
        None => MPoly::one(),
        Some(v) => gcd_in(a, b, v),
    }
}

/// Least common multiple, normalized like `mpoly_gcd`.
pub fn mpoly_lcm(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() || b.is_zero() {
        return MPoly::zero_in(a.ord());
    }
    let g = mpoly_gcd(a, b);
    let q = a.try_div_exact(&g).expect("gcd divides");
    (&q * b).primitive()
}

/// Product of the distinct irreducible factors of `h`: `h` divided by the
/// gcd of `h` with its partial derivatives over every present variable.
/// The result is primitive with positive leading coefficient.
pub fn squarefree_part(h: &MPoly) -> Result<MPoly, PolyError> {
    if h.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut g = h.clone();
    for v in h.vars_present() {
        g = mpoly_gcd(&g, &h.deriv(v));
        if g.is_one() {
            break;
        }
    }
    Ok(h.try_div_exact(&g)
        .expect("gcd with derivatives divides")
        .primitive())
}
