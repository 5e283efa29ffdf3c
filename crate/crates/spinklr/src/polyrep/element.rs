use std::fmt;

use crate::scalar::Scalar;

/// A generator; strand indices are 0-based, so `Tau(r)` crosses strands
/// `r` and `r + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    Idem(usize),
    Y(usize),
    Tau(usize),
}

/// `coeff * g_1 ... g_k e(comp)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenWord<T> {
    pub coeff: T,
    pub letters: Vec<Gen>,
    pub comp: usize,
}

impl<T: Scalar> GenWord<T> {
    pub fn new(coeff: T, letters: Vec<Gen>, comp: usize) -> Self {
        GenWord { coeff, letters, comp }
    }

    pub fn idem(comp: usize) -> Self {
        Self::new(T::one(), vec![], comp)
    }
}

/// A formal linear combination of words.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct HElement<T> {
    pub terms: Vec<GenWord<T>>,
}

impl<T: Scalar> HElement<T> {
    pub fn zero() -> Self {
        HElement { terms: vec![] }
    }

    pub fn word(coeff: T, letters: Vec<Gen>, comp: usize) -> Self {
        HElement { terms: vec![GenWord::new(coeff, letters, comp)] }
    }

    pub fn idem(comp: usize) -> Self {
        Self::word(T::one(), vec![], comp)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        HElement { terms }
    }

    pub fn scale(&self, c: &T) -> Self {
        HElement {
            terms: self.terms.iter().map(|w| GenWord::new(w.coeff.clone() * c.clone(), w.letters.clone(), w.comp)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-T::one()))
    }

    /// Product; the left factor's idempotent is kept as a letter.
    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = Vec::new();
        for a in &self.terms {
            for b in &other.terms {
                let mut letters = a.letters.clone();
                letters.push(Gen::Idem(a.comp));
                letters.extend_from_slice(&b.letters);
                terms.push(GenWord::new(a.coeff.clone() * b.coeff.clone(), letters, b.comp));
            }
        }
        HElement { terms }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::Idem(c) => write!(f, "e[{c}]"),
            Gen::Y(r) => write!(f, "y{}", r + 1),
            Gen::Tau(r) => write!(f, "t{}", r + 1),
        }
    }
}

impl<T: Scalar> fmt::Display for HElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|w| {
                let letters: Vec<String> = w.letters.iter().map(|g| g.to_string()).collect();
                format!("({}) {} e[{}]", w.coeff, letters.join(" "), w.comp)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
