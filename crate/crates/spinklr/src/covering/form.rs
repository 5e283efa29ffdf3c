use dashmap::DashMap;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use super::algebra::{generator_norm, word, FreeElement, TensorElement, Word};
use crate::linalg::ratfunc_rank;
use crate::ring::{PiScalar, RationalFunc};
use crate::rootdata::{enumerate_sequences, RootDatum, Weight};
use crate::scalar::Scalar;

/// The bilinear form on the free algebra for one root datum, with a shared
/// memo table of word pairings.
pub struct Form<T: Scalar> {
    pub datum: RootDatum,
    memo: DashMap<(Word, Word), PiScalar<T>>,
    norms: Vec<PiScalar<T>>,
}

fn same_letters(x: &[u8], y: &[u8]) -> bool {
    if x.len() != y.len() {
        return false;
    }
    let mut a: Word = x.into();
    let mut b: Word = y.into();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

impl<T: Scalar> Form<T> {
    pub fn new(datum: &RootDatum) -> Self {
        let norms = (0..datum.rank()).map(|i| generator_norm(datum, i)).collect();
        Form { datum: datum.clone(), memo: DashMap::new(), norms }
    }

    /// `(x, y)` for words, by peeling the first letter of `y`:
    /// `(x, theta_j y'') = sum_k twist_k (theta_j, theta_j) (x - x_k, y'')`
    /// over the positions `k` of `j` in `x`.
    pub fn pair_words(&self, x: &[u8], y: &[u8]) -> PiScalar<T> {
        if !same_letters(x, y) {
            return PiScalar::zero();
        }
        if y.is_empty() {
            return PiScalar::one();
        }
        let key = (Word::from(x), Word::from(y));
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let d = &self.datum;
        let j = y[0] as usize;
        let mut total = PiScalar::zero();
        let (mut pi, mut q) = (0i64, 0i64);
        for k in 0..x.len() {
            let xk = x[k] as usize;
            if xk == j {
                let mut rest: Word = Word::with_capacity(x.len() - 1);
                rest.extend_from_slice(&x[..k]);
                rest.extend_from_slice(&x[k + 1..]);
                let sub = self.pair_words(&rest, &y[1..]);
                if !sub.is_zero() {
                    total = &total + &(&sub * &PiScalar::monomial(pi, q as i32));
                }
            }
            pi += d.parity[xk] as i64 * d.parity[j] as i64;
            q -= d.pairing[xk][j];
        }
        let value = &total * &self.norms[j];
        self.memo.insert(key, value.clone());
        value
    }

    pub fn pair(&self, x: &FreeElement<T>, y: &FreeElement<T>) -> PiScalar<T> {
        let mut total = PiScalar::zero();
        for (a, c) in &x.terms {
            for (b, e) in &y.terms {
                let p = self.pair_words(a, b);
                if !p.is_zero() {
                    total = &total + &(&(c * e) * &p);
                }
            }
        }
        total
    }

    /// `(x' (x) x'', y' (x) y'') = (x', y')(x'', y'')`, extended bilinearly.
    pub fn pair_tensors(&self, x: &TensorElement<T>, y: &TensorElement<T>) -> PiScalar<T> {
        let mut total = PiScalar::zero();
        for ((a1, a2), c) in &x.terms {
            for ((b1, b2), e) in &y.terms {
                let p = self.pair_words(a1, b1);
                if p.is_zero() {
                    continue;
                }
                let p2 = self.pair_words(a2, b2);
                if !p2.is_zero() {
                    total = &total + &(&(c * e) * &(&p * &p2));
                }
            }
        }
        total
    }

    pub fn words(&self, weight: &Weight) -> Vec<Word> {
        enumerate_sequences(weight).iter().map(|s| word(s)).collect()
    }

    /// Gram matrix of all words of the given weight, in enumeration order.
    pub fn gram(&self, weight: &Weight) -> Vec<Vec<PiScalar<T>>> {
        let words = self.words(weight);
        words.par_iter().map(|a| words.iter().map(|b| self.pair_words(a, b)).collect()).collect()
    }

    /// Rank of the Gram matrix at `pi = sign`, which is the dimension of the
    /// weight space of the quotient by the radical.
    pub fn radical_rank(&self, weight: &Weight, sign: i8) -> usize {
        let gram = self.gram(weight);
        rank_at(&gram, sign)
    }

    /// True when `x` pairs to zero with every word of each weight it meets.
    pub fn in_radical(&self, x: &FreeElement<T>) -> bool {
        x.weights(&self.datum).iter().all(|w| {
            self.words(w).par_iter().all(|b| self.pair(x, &FreeElement::from_word(b.clone())).is_zero())
        })
    }

    pub fn gram_report(&self, weight: &Weight) -> Value {
        let words = self.words(weight);
        let gram = self.gram(weight);
        let names: Vec<String> = words
            .iter()
            .map(|w| w.iter().map(|&i| self.datum.nodes[i as usize].clone()).collect::<Vec<_>>().join(","))
            .collect();
        json!({
            "datum": self.datum.name,
            "weight": weight.to_json(&self.datum),
            "words": names,
            "rank_plus": rank_at(&gram, 1),
            "rank_minus": rank_at(&gram, -1),
            "gram": gram.iter().map(|row| row.iter().map(|x| x.to_json()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

pub fn rank_at<T: Scalar>(gram: &[Vec<PiScalar<T>>], sign: i8) -> usize {
    let rows: Vec<Vec<RationalFunc<T>>> =
        gram.iter().map(|row| row.iter().map(|x| x.at(sign).clone()).collect()).collect();
    ratfunc_rank(rows)
}
