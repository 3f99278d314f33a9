//! The fixed variable set and configurable lexicographic monomial orders.

use std::fmt;

/// The five symbols of the computation domain: `x` carries the derivation,
/// the others are differential constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Lam,
    Mu1,
    Mu2,
    Tau,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::X, Var::Lam, Var::Mu1, Var::Mu2, Var::Tau];

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Lam => "lam",
            Var::Mu1 => "mu1",
            Var::Mu2 => "mu2",
            Var::Tau => "tau",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == s)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Lexicographic order with a configurable variable priority.
///
/// The default priority is `lam > mu1 > mu2 > x > tau`, so that constant
/// polynomials over the curve variables sort the way the elimination
/// machinery expects while `x` and `tau` ride along in coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonoOrder {
    priority: [Var; 5],
}

impl Default for MonoOrder {
    fn default() -> Self {
        MonoOrder {
            priority: [Var::Lam, Var::Mu1, Var::Mu2, Var::X, Var::Tau],
        }
    }
}

impl MonoOrder {
    /// Lex order with the given priority; every variable must appear once.
    pub fn lex(priority: [Var; 5]) -> Self {
        let mut seen = [false; 5];
        for v in priority {
            let i = v as usize;
            assert!(!seen[i], "duplicate variable in monomial order");
            seen[i] = true;
        }
        MonoOrder { priority }
    }

    pub fn priority(&self) -> &[Var; 5] {
        &self.priority
    }
}
