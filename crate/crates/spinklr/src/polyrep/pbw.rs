use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{Exps, GenWord, HElement, PolyRep, PolyRepError, PolyVector, SkewMonomial};
use crate::linalg::{Echelon, SparseVec};
use crate::perm::Perm;
use crate::scalar::Scalar;

/// The PBW element `tau_w y^a e(ui)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwIndex {
    pub w: Perm,
    pub exps: Exps,
    pub comp: usize,
}

type Key = (usize, SkewMonomial);

/// PBW elements whose polynomial part has degree at most `window`, with
/// their actions on the monomials of degree at most `cap` in echelon form.
pub struct PbwSolver<'a, T: Scalar> {
    pub rep: &'a PolyRep<T>,
    pub basis: Vec<PbwIndex>,
    pub independent: bool,
    tests: Vec<SkewMonomial>,
    echelon: Echelon<Key, T>,
}

impl<T: Scalar> PolyRep<T> {
    pub fn pbw_word(&self, b: &PbwIndex) -> GenWord<T> {
        let mut letters = Self::tau_w(&b.w);
        letters.extend(self.y_word(&b.exps, b.comp).letters);
        GenWord::new(T::one(), letters, b.comp)
    }

    pub fn pbw_element(&self, b: &PbwIndex) -> HElement<T> {
        HElement { terms: vec![self.pbw_word(b)] }
    }

    pub fn pbw_basis(&self, window: i64) -> Vec<PbwIndex> {
        let perms = Perm::all(self.n());
        let mut out = Vec::new();
        for c in 0..self.comps.len() {
            for m in self.monomials(c, window) {
                for w in &perms {
                    out.push(PbwIndex { w: w.clone(), exps: m.exps.clone(), comp: c });
                }
            }
        }
        out
    }

    /// A test cap that separates the PBW elements of a window: the divided
    /// differences in `tau_{w0}` lower the degree by at most this much.
    pub fn default_cap(&self, window: i64) -> i64 {
        let n = self.n() as i64;
        let max_norm = self.comps.iter().flatten().map(|&i| self.datum.pairing[i][i]).max().unwrap_or(2);
        window + max_norm * n * (n - 1) / 2 + max_norm
    }

    pub fn pbw_independence(&self, window: i64, cap: i64) -> bool {
        PbwSolver::new(self, window, cap).independent
    }
}

impl<'a, T: Scalar> PbwSolver<'a, T> {
    pub fn new(rep: &'a PolyRep<T>, window: i64, cap: i64) -> Self {
        let basis = rep.pbw_basis(window);
        let tests = rep.all_monomials(cap);
        let vectors: Vec<SparseVec<Key, T>> =
            basis.par_iter().map(|b| action_vector(rep, &rep.pbw_element(b), &tests, Some(b.comp))).collect();
        let mut echelon = Echelon::new();
        let mut independent = true;
        for v in &vectors {
            independent &= echelon.insert(v);
        }
        PbwSolver { rep, basis, independent, tests, echelon }
    }

    /// Coordinates of `x` in the PBW basis, keyed by basis element.
    pub fn coordinates(&self, x: &HElement<T>) -> Result<BTreeMap<PbwIndex, T>, PolyRepError> {
        if !self.independent {
            return Err(PolyRepError::Dependent(format!("window of {} elements", self.basis.len())));
        }
        let v = action_vector(self.rep, x, &self.tests, None);
        let coords = self.echelon.solve(&v).ok_or(PolyRepError::NotInSpan)?;
        Ok(coords.into_iter().map(|(k, c)| (self.basis[k].clone(), c)).collect())
    }
}

fn action_vector<T: Scalar>(rep: &PolyRep<T>, x: &HElement<T>, tests: &[SkewMonomial], only: Option<usize>) -> SparseVec<Key, T> {
    let mut out = BTreeMap::new();
    for (t, m) in tests.iter().enumerate() {
        if only.is_some_and(|c| c != m.comp) {
            continue;
        }
        let y = rep.act(x, &PolyVector::monomial(m.clone()));
        for (k, c) in y.terms {
            out.insert((t, k), c);
        }
    }
    out
}
