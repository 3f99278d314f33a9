//! Power products in the fixed variable set, stored sparsely.

use std::cmp::Ordering;
use std::fmt;

use super::vars::{MonoOrder, Var};

/// A power product. Exponents are stored sparsely: no zero exponents are
/// kept and entries are sorted by the canonical variable index, so equal
/// monomials are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: Var) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial { exps: vec![(v, e)] }
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.exps
            .iter()
            .find(|(w, _)| *w == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|(_, e)| e).sum()
    }

    /// Variables with nonzero exponent, in canonical order.
    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.exps.iter().map(|(v, _)| *v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (va, ea) = self.exps[i];
            let (vb, eb) = other.exps[j];
            match va.cmp(&vb) {
                Ordering::Less => {
                    exps.push((va, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push((vb, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((va, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial { exps }
    }

    /// Exact quotient, `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        let mut j = 0;
        for &(v, e) in &self.exps {
            let mut e = e;
            while j < other.exps.len() && other.exps[j].0 < v {
                return None; // divisor has a variable self lacks
            }
            if j < other.exps.len() && other.exps[j].0 == v {
                let eo = other.exps[j].1;
                if eo > e {
                    return None;
                }
                e -= eo;
                j += 1;
            }
            if e > 0 {
                exps.push((v, e));
            }
        }
        if j < other.exps.len() {
            return None;
        }
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        other.div(self).is_some()
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (va, ea) = self.exps[i];
            let (vb, eb) = other.exps[j];
            match va.cmp(&vb) {
                Ordering::Less => {
                    exps.push((va, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push((vb, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((va, ea.max(eb)));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial { exps }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|(v, _)| other.exp(*v) == 0)
    }

    /// Comparison under the given lexicographic order.
    pub fn cmp_in(&self, other: &Monomial, ord: &MonoOrder) -> Ordering {
        for &v in ord.priority() {
            match self.exp(v).cmp(&other.exp(v)) {
                Ordering::Equal => continue,
                non_eq => return non_eq,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for &(v, e) in &self.exps {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_div_roundtrip() {
        let a = Monomial::var(Var::Lam).mul(&Monomial::var_pow(Var::X, 3));
        let b = Monomial::var_pow(Var::Mu1, 2);
        let p = a.mul(&b);
        assert_eq!(p.div(&b).unwrap(), a);
        assert_eq!(p.div(&a).unwrap(), b);
        assert!(b.div(&a).is_none());
    }

    #[test]
    fn default_order_priority() {
        let ord = MonoOrder::default();
        let lam = Monomial::var(Var::Lam);
        let mu1_5 = Monomial::var_pow(Var::Mu1, 5);
        // any lam power beats any mu-only monomial under lam > mu1 > ...
        assert_eq!(lam.cmp_in(&mu1_5, &ord), Ordering::Greater);
        let x = Monomial::var(Var::X);
        let tau9 = Monomial::var_pow(Var::Tau, 9);
        assert_eq!(x.cmp_in(&tau9, &ord), Ordering::Greater);
    }

    #[test]
    fn lcm_and_coprime() {
        let a = Monomial::var_pow(Var::Lam, 2).mul(&Monomial::var(Var::Mu1));
        let b = Monomial::var(Var::Mu1).mul(&Monomial::var_pow(Var::Mu2, 4));
        let l = a.lcm(&b);
        assert!(a.divides(&l) && b.divides(&l));
        assert_eq!(l.total_degree(), 7);
        assert!(!a.coprime(&b));
        assert!(Monomial::var(Var::X).coprime(&b));
    }
}
