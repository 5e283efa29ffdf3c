use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// An element of `k<u, v> / (uv - eps vu)` with `eps = +-1`, stored on the
/// normal-form monomials `u^a v^b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewBivarPoly<T> {
    /// True when `uv = -vu`.
    pub anticommuting: bool,
    terms: BTreeMap<(u32, u32), T>,
}

impl<T: Scalar> SkewBivarPoly<T> {
    pub fn zero(anticommuting: bool) -> Self {
        SkewBivarPoly { anticommuting, terms: BTreeMap::new() }
    }

    pub fn monomial(anticommuting: bool, a: u32, b: u32, c: T) -> Self {
        let mut p = Self::zero(anticommuting);
        p.add_term(a, b, c);
        p
    }

    pub fn one(anticommuting: bool) -> Self {
        Self::monomial(anticommuting, 0, 0, T::one())
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: T) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((a, b)).or_insert_with(T::zero);
        *e = e.clone() + c;
        if e.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms `(a, b, c)` of `c u^a v^b`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &T)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn coeff(&self, a: u32, b: u32) -> T {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(T::zero)
    }

    fn reorder_sign(&self, k: u64) -> T {
        if self.anticommuting {
            T::sign(k as i64)
        } else {
            T::one()
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (a, b, c) in other.terms() {
            p.add_term(a, b, c.clone());
        }
        p
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut p = Self::zero(self.anticommuting);
        for (a, b, x) in self.terms() {
            p.add_term(a, b, x.clone() * c.clone());
        }
        p
    }

    /// Product in the skew ring: `u^a v^b u^c v^d = eps^{bc} u^{a+c} v^{b+d}`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut p = Self::zero(self.anticommuting);
        for (a, b, x) in self.terms() {
            for (c, d, y) in other.terms() {
                let sign = self.reorder_sign(b as u64 * c as u64);
                p.add_term(a + c, b + d, sign * x.clone() * y.clone());
            }
        }
        p
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(self.anticommuting), |acc, _| acc.mul(self))
    }

    /// `f(-u, v)`.
    pub fn negate_u(&self) -> Self {
        let mut p = Self::zero(self.anticommuting);
        for (a, b, x) in self.terms() {
            p.add_term(a, b, T::sign(a as i64) * x.clone());
        }
        p
    }

    /// `f(v, u)` rewritten in normal form.
    pub fn swap_variables(&self) -> Self {
        let mut p = Self::zero(self.anticommuting);
        for (a, b, x) in self.terms() {
            // v^a u^b = eps^{ab} u^b v^a
            p.add_term(b, a, self.reorder_sign(a as u64 * b as u64) * x.clone());
        }
        p
    }

    /// Largest total degree `a * deg_u + b * deg_v` among the terms.
    pub fn max_weighted_degree(&self, deg_u: u32, deg_v: u32) -> u32 {
        self.terms().map(|(a, b, _)| a * deg_u + b * deg_v).max().unwrap_or(0)
    }
}

impl<T: Scalar> fmt::Display for SkewBivarPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (a, b, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            if a > 0 {
                write!(f, "*u^{a}")?;
            }
            if b > 0 {
                write!(f, "*v^{b}")?;
            }
        }
        Ok(())
    }
}
