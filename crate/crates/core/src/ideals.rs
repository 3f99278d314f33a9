//! Commutative ideal machinery over Q[lam, mu1, mu2]: Buchberger bases under
//! the pure lexicographic order lam > mu1 > mu2, normal forms (also for
//! dividends with x-dependent coefficients against constant bases),
//! membership, and the constant-coefficient certificate.

use std::fmt;

use num_traits::One;

use crate::exact::{MPoly, Monomial, Rational, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealError {
    /// Generators must be free of x and tau.
    NonConstantGenerator(Var),
    ZeroGenerator,
}

impl fmt::Display for IdealError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealError::NonConstantGenerator(v) => {
                write!(f, "generator depends on {}", v)
            }
            IdealError::ZeroGenerator => write!(f, "zero generator"),
        }
    }
}

impl std::error::Error for IdealError {}

/// A reduced Groebner basis under lex lam > mu1 > mu2. Generators are monic,
/// mutually irreducible, and sorted descending by leading term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    gens: Vec<MPoly>,
}

impl GroebnerBasis {
    pub fn gens(&self) -> &[MPoly] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", g)?;
        }
        Ok(())
    }
}

fn leading(p: &MPoly) -> (Monomial, Rational) {
    let (m, c) = p.leading().expect("nonzero polynomial");
    (m.clone(), c.clone())
}

/// Full multivariate division of `work` by `divisors`; subtracted multiples
/// are recorded through `on_use`. Ties among divisible leading terms go to
/// the first divisor in the list.
fn divide_full(
    work: &MPoly,
    divisors: &[MPoly],
    mut on_use: impl FnMut(usize, &Monomial, &Rational),
) -> MPoly {
    let mut rem = MPoly::zero_in(work.ord());
    let mut work = work.clone();
    'outer: while !work.is_zero() {
        let (lm, lc) = leading(&work);
        for (i, d) in divisors.iter().enumerate() {
            let (dm, dc) = leading(d);
            if let Some(qm) = lm.div(&dm) {
                let qc = &lc / &dc;
                work = &work - &d.mul_term(&qm, &qc);
                on_use(i, &qm, &qc);
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the remainder
        let t = MPoly::from_terms(vec![(lm, lc)], work.ord());
        rem = &rem + &t;
        work = &work - &t;
    }
    rem
}

/// Remainder of multivariate division of `g` by the basis. The dividend may
/// carry x (or tau) in its coefficients; the basis leading terms are
/// constant-coefficient monomials in lam, mu1, mu2, so the division treats
/// x and tau as scalars riding along.
pub fn normal_form(g: &MPoly, basis: &GroebnerBasis) -> MPoly {
    divide_full(g, &basis.gens, |_, _, _| {})
}

/// True iff the normal form of `g` vanishes.
pub fn ideal_member(g: &MPoly, basis: &GroebnerBasis) -> bool {
    normal_form(g, basis).is_zero()
}

/// True iff `h` has degree zero in x and tau.
pub fn constant_certify(h: &MPoly) -> bool {
    !h.contains_var(Var::X) && !h.contains_var(Var::Tau)
}

struct Tracked {
    poly: MPoly,
    combo: Vec<MPoly>,
    sugar: u32,
}

fn spoly_parts(f: &MPoly, g: &MPoly) -> (Monomial, (Monomial, Rational), (Monomial, Rational)) {
    let (fm, fc) = leading(f);
    let (gm, gc) = leading(g);
    let l = fm.lcm(&gm);
    let uf = (l.div(&fm).unwrap(), fc.recip());
    let ug = (l.div(&gm).unwrap(), gc.recip());
    (l, uf, ug)
}

/// Buchberger with the sugar selection strategy. Returns the reduced basis
/// and, for each generator, its representation as a combination of the
/// input generators.
pub fn buchberger_tracked(
    gens: &[MPoly],
) -> Result<(GroebnerBasis, Vec<Vec<MPoly>>), IdealError> {
    let ngens = gens.len();
    let mut basis: Vec<Tracked> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            return Err(IdealError::ZeroGenerator);
        }
        for v in [Var::X, Var::Tau] {
            if g.contains_var(v) {
                return Err(IdealError::NonConstantGenerator(v));
            }
        }
        // content normalization keeps coefficients small during the run
        let c = g.content();
        let mut combo = vec![MPoly::zero(); ngens];
        combo[i] = MPoly::constant(c.recip());
        basis.push(Tracked {
            poly: g.primitive(),
            combo,
            sugar: g.total_degree(),
        });
    }

    let mut pairs: Vec<(usize, usize, u32)> = Vec::new();
    let mut push_pairs = |pairs: &mut Vec<(usize, usize, u32)>, basis: &[Tracked], k: usize| {
        for i in 0..k {
            let (lm_i, _) = leading(&basis[i].poly);
            let (lm_k, _) = leading(&basis[k].poly);
            if lm_i.coprime(&lm_k) {
                continue; // product criterion
            }
            let l = lm_i.lcm(&lm_k);
            let s = (basis[i].sugar + l.div(&lm_i).unwrap().total_degree())
                .max(basis[k].sugar + l.div(&lm_k).unwrap().total_degree());
            pairs.push((i, k, s));
        }
    };
    for k in 0..basis.len() {
        push_pairs(&mut pairs, &basis, k);
    }

    while !pairs.is_empty() {
        // sugar strategy: smallest sugar first, then smallest lcm
        let ord = basis[0].poly.ord();
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.2.cmp(&b.2).then_with(|| {
                    let la = leading(&basis[a.0].poly).0.lcm(&leading(&basis[a.1].poly).0);
                    let lb = leading(&basis[b.0].poly).0.lcm(&leading(&basis[b.1].poly).0);
                    la.cmp_in(&lb, &ord)
                })
            })
            .map(|(idx, _)| idx)
            .unwrap();
        let (i, j, sugar) = pairs.swap_remove(best);

        let (_, (mi, ci), (mj, cj)) = spoly_parts(&basis[i].poly, &basis[j].poly);
        let s = &basis[i].poly.mul_term(&mi, &ci) - &basis[j].poly.mul_term(&mj, &cj);
        let mut combo: Vec<MPoly> = (0..ngens)
            .map(|k| {
                &basis[i].combo[k].mul_term(&mi, &ci) - &basis[j].combo[k].mul_term(&mj, &cj)
            })
            .collect();
        let divisors: Vec<MPoly> = basis.iter().map(|t| t.poly.clone()).collect();
        let mut uses: Vec<(usize, Monomial, Rational)> = Vec::new();
        let rem = divide_full(&s, &divisors, |k, m, c| {
            uses.push((k, m.clone(), c.clone()));
        });
        if rem.is_zero() {
            continue;
        }
        for (k, m, c) in &uses {
            for g in 0..ngens {
                let delta = basis[*k].combo[g].mul_term(m, c);
                combo[g] = &combo[g] - &delta;
            }
        }
        // normalize the new element to content 1
        let cont = rem.content();
        let rem = rem.primitive();
        for c in &mut combo {
            *c = c.scale(&cont.recip());
        }
        basis.push(Tracked {
            sugar,
            poly: rem,
            combo,
        });
        push_pairs(&mut pairs, &basis, basis.len() - 1);
    }

    // inter-reduce to the unique reduced basis
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        let (lm_i, _) = leading(&basis[i].poly);
        for j in 0..basis.len() {
            if i != j && keep[j] {
                let (lm_j, _) = leading(&basis[j].poly);
                if lm_j.divides(&lm_i) && (lm_j != lm_i || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
    }
    let mut reduced: Vec<Tracked> = Vec::new();
    for (i, t) in basis.into_iter().enumerate() {
        if keep[i] {
            reduced.push(t);
        }
    }
    // reduce the tail of each element against the others
    for i in 0..reduced.len() {
        let others: Vec<MPoly> = reduced
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, t)| t.poly.clone())
            .collect();
        let other_idx: Vec<usize> = (0..reduced.len()).filter(|j| *j != i).collect();
        let mut uses: Vec<(usize, Monomial, Rational)> = Vec::new();
        let r = divide_full(&reduced[i].poly, &others, |k, m, c| {
            uses.push((other_idx[k], m.clone(), c.clone()));
        });
        for (k, m, c) in &uses {
            for g in 0..ngens {
                let delta = reduced[*k].combo[g].mul_term(m, c);
                reduced[i].combo[g] = &reduced[i].combo[g] - &delta;
            }
        }
        reduced[i].poly = r;
    }
    // make monic and sort descending by leading term
    for t in &mut reduced {
        let lc = t.poly.leading_coeff();
        if !lc.is_one() {
            t.poly = t.poly.scale(&lc.recip());
            for c in &mut t.combo {
                *c = c.scale(&lc.recip());
            }
        }
    }
    let ord = reduced[0].poly.ord();
    reduced.sort_by(|a, b| leading(&b.poly).0.cmp_in(&leading(&a.poly).0, &ord));
    let combos = reduced.iter().map(|t| t.combo.clone()).collect();
    let gens = reduced.into_iter().map(|t| t.poly).collect();
    Ok((GroebnerBasis { gens }, combos))
}

/// Reduced lex Groebner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[MPoly]) -> Result<GroebnerBasis, IdealError> {
    buchberger_tracked(gens).map(|(b, _)| b)
}
