//! Exact linear algebra: dense rank over any field and an incremental sparse
//! echelon basis over a scalar field.

use std::collections::BTreeMap;

use crate::scalar::{Field, Scalar};
use crate::ring::RationalFunc;

/// Rank of a dense matrix by Gaussian elimination. `cost` ranks candidate
/// pivots so that simple entries are preferred.
pub fn rank_with<F: Field>(mut rows: Vec<Vec<F>>, cost: impl Fn(&F) -> usize) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let pivot = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| cost(&rows[r][col]));
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let inv = F::one() / rows[rank][col].clone();
        let pivot_row: Vec<F> = rows[rank].iter().map(|x| x.clone() * inv.clone()).collect();
        for r in (rank + 1)..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..ncols {
                if !pivot_row[c].is_zero() {
                    let v = rows[r][c].clone() - factor.clone() * pivot_row[c].clone();
                    rows[r][c] = v;
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

pub fn rank<F: Field>(rows: Vec<Vec<F>>) -> usize {
    rank_with(rows, |_| 0)
}

pub fn ratfunc_rank<T: Scalar>(rows: Vec<Vec<RationalFunc<T>>>) -> usize {
    rank_with(rows, |x| x.complexity())
}

pub type SparseVec<K, T> = BTreeMap<K, T>;

/// An echelon basis of sparse vectors, keyed by their leading (smallest) key.
/// Each stored vector remembers which inserted vectors it combines, so a
/// dependency can be turned into explicit coordinates.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone, T> {
    rows: BTreeMap<K, (SparseVec<K, T>, SparseVec<usize, T>)>,
    inserted: usize,
}

fn axpy<K: Ord + Clone, T: Scalar>(target: &mut SparseVec<K, T>, c: &T, src: &SparseVec<K, T>) {
    for (k, v) in src {
        let entry = target.entry(k.clone()).or_insert_with(T::zero);
        *entry = entry.clone() + c.clone() * v.clone();
        if entry.is_zero() {
            target.remove(k);
        }
    }
}

impl<K: Ord + Clone, T: Scalar> Default for Echelon<K, T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone, T: Scalar> Echelon<K, T> {
    pub fn new() -> Self {
        Echelon { rows: BTreeMap::new(), inserted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis and returns the remainder together with
    /// the combination of inserted vectors that was subtracted.
    pub fn reduce(&self, v: &SparseVec<K, T>) -> (SparseVec<K, T>, SparseVec<usize, T>) {
        let mut rem = v.clone();
        let mut combo: SparseVec<usize, T> = BTreeMap::new();
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => rem.iter().find(|(k, _)| self.rows.contains_key(*k)),
                Some(c) => rem
                    .range((std::ops::Bound::Excluded(c.clone()), std::ops::Bound::Unbounded))
                    .find(|(k, _)| self.rows.contains_key(*k)),
            };
            let Some((k, c)) = next.map(|(k, c)| (k.clone(), c.clone())) else { break };
            let (row, row_combo) = &self.rows[&k];
            let factor = -c;
            axpy(&mut rem, &factor, row);
            axpy(&mut combo, &factor, row_combo);
            cursor = Some(k);
        }
        (rem, combo)
    }

    /// Inserts `v`; returns `true` if it was independent of the basis.
    pub fn insert(&mut self, v: &SparseVec<K, T>) -> bool {
        let id = self.inserted;
        self.inserted += 1;
        let (mut rem, mut combo) = self.reduce(v);
        let Some((lead, c)) = rem.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let entry = combo.entry(id).or_insert_with(T::zero);
        *entry = entry.clone() + T::one();
        let inv = T::one() / c;
        for x in rem.values_mut() {
            *x = x.clone() * inv.clone();
        }
        for x in combo.values_mut() {
            *x = x.clone() * inv.clone();
        }
        self.rows.insert(lead, (rem, combo));
        true
    }

    /// Coordinates of `v` in terms of the inserted vectors, if it lies in
    /// their span.
    pub fn solve(&self, v: &SparseVec<K, T>) -> Option<SparseVec<usize, T>> {
        let (rem, combo) = self.reduce(v);
        rem.is_empty().then(|| combo.into_iter().map(|(k, c)| (k, -c)).collect())
    }
}
