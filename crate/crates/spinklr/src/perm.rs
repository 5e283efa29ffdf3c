//! Permutations in one-line notation, reduced words and the Bruhat order.

use std::fmt;

/// A permutation of `0..n`; `self.0[m]` is the image of `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// The transposition `s_k` swapping `k` and `k + 1`.
    pub fn simple(n: usize, k: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(k, k + 1);
        p
    }

    /// The longest element `m -> n - 1 - m`.
    pub fn longest(n: usize) -> Self {
        Perm((0..n).rev().collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `(self * other)(m) = self(other(m))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&m| self.0[m]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.n()];
        for (m, &w) in self.0.iter().enumerate() {
            inv[w] = m;
        }
        Perm(inv)
    }

    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|a| (a + 1..w.len()).filter(|&b| w[a] > w[b]).count()).sum()
    }

    /// Whether `l(s_k w) < l(w)`.
    pub fn has_left_descent(&self, k: usize) -> bool {
        let inv = self.inverse();
        inv.0[k] > inv.0[k + 1]
    }

    /// `s_k w`.
    pub fn left_mul_simple(&self, k: usize) -> Perm {
        Perm::simple(self.n(), k).compose(self)
    }

    /// The lexicographically smallest reduced word `[k_1, ..., k_t]` with
    /// `w = s_{k_1} ... s_{k_t}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut out = Vec::with_capacity(self.length());
        while let Some(k) = (0..w.n().saturating_sub(1)).find(|&k| w.has_left_descent(k)) {
            out.push(k);
            w = w.left_mul_simple(k);
        }
        out
    }

    pub fn from_word(n: usize, word: &[usize]) -> Perm {
        word.iter().fold(Perm::identity(n), |acc, &k| acc.compose(&Perm::simple(n, k)))
    }

    /// Bruhat order by the rank-matrix criterion.
    pub fn bruhat_le(&self, other: &Perm) -> bool {
        let n = self.n();
        assert_eq!(n, other.n());
        (0..n).all(|i| {
            (0..n).all(|k| {
                let count = |p: &Perm| p.0[..=i].iter().filter(|&&v| v >= k).count();
                count(self) <= count(other)
            })
        })
    }

    /// `(w . seq)_{w(m)} = seq_m`.
    pub fn act<T: Clone>(&self, seq: &[T]) -> Vec<T> {
        let mut out = seq.to_vec();
        for (m, x) in seq.iter().enumerate() {
            out[self.0[m]] = x.clone();
        }
        out
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
            if cur.len() == n {
                out.push(Perm(cur.clone()));
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }

    /// Every reduced word of `self`.
    pub fn all_reduced_words(&self) -> Vec<Vec<usize>> {
        if self.length() == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for k in 0..self.n() - 1 {
            if self.has_left_descent(k) {
                for mut rest in self.left_mul_simple(k).all_reduced_words() {
                    rest.insert(0, k);
                    out.push(rest);
                }
            }
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "[{}]", s.join(" "))
    }
}
