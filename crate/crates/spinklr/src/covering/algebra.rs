use std::collections::BTreeMap;

use num_traits::One;
use smallvec::SmallVec;

use crate::ring::{quantum_factorial, PiScalar};
use crate::rootdata::{RootDatum, Weight};
use crate::scalar::Scalar;

/// A word `theta_{i_1} ... theta_{i_n}` in the generators, by node index.
pub type Word = SmallVec<[u8; 8]>;

pub fn word(letters: &[usize]) -> Word {
    letters.iter().map(|&i| i as u8).collect()
}

pub fn word_weight(datum: &RootDatum, w: &[u8]) -> Weight {
    let mut v = Weight::zero(datum.rank());
    for &i in w {
        v.0[i as usize] += 1;
    }
    v
}

pub fn word_parity(datum: &RootDatum, w: &[u8]) -> u8 {
    (w.iter().map(|&i| datum.parity[i as usize] as u32).sum::<u32>() % 2) as u8
}

/// `(|x|, |y|)` for words `x`, `y`.
pub fn word_pairing(datum: &RootDatum, x: &[u8], y: &[u8]) -> i64 {
    x.iter().map(|&a| y.iter().map(|&b| datum.pairing[a as usize][b as usize]).sum::<i64>()).sum()
}

fn accumulate<K: Ord, T: Scalar>(map: &mut BTreeMap<K, PiScalar<T>>, key: K, c: PiScalar<T>) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let v = e.get() + &c;
            if v.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
    }
}

/// A linear combination of words with scalar coefficients.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct FreeElement<T: Scalar> {
    pub terms: BTreeMap<Word, PiScalar<T>>,
}

impl<T: Scalar> FreeElement<T> {
    pub fn zero() -> Self {
        FreeElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_word(Word::new())
    }

    pub fn from_word(w: Word) -> Self {
        Self::monomial(w, PiScalar::one())
    }

    pub fn monomial(w: Word, c: PiScalar<T>) -> Self {
        let mut x = Self::zero();
        x.add_term(w, c);
        x
    }

    pub fn generator(i: usize) -> Self {
        Self::from_word(word(&[i]))
    }

    pub fn add_term(&mut self, w: Word, c: PiScalar<T>) {
        accumulate(&mut self.terms, w, c);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut x = self.clone();
        for (w, c) in &other.terms {
            x.add_term(w.clone(), c.clone());
        }
        x
    }

    pub fn scale(&self, c: &PiScalar<T>) -> Self {
        let mut x = Self::zero();
        for (w, d) in &self.terms {
            x.add_term(w.clone(), d * c);
        }
        x
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut x = Self::zero();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                x.add_term(w, c * d);
            }
        }
        x
    }

    /// Applies the bar involution to every coefficient; generators are fixed.
    pub fn bar(&self) -> Self {
        let mut x = Self::zero();
        for (w, c) in &self.terms {
            x.add_term(w.clone(), c.bar());
        }
        x
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.bar() == *self
    }

    /// The weights of the words that occur.
    pub fn weights(&self, datum: &RootDatum) -> Vec<Weight> {
        let mut ws: Vec<Weight> = self.terms.keys().map(|w| word_weight(datum, w)).collect();
        ws.sort();
        ws.dedup();
        ws
    }
}

/// An element of the twisted tensor square.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct TensorElement<T: Scalar> {
    pub terms: BTreeMap<(Word, Word), PiScalar<T>>,
}

impl<T: Scalar> TensorElement<T> {
    pub fn zero() -> Self {
        TensorElement { terms: BTreeMap::new() }
    }

    pub fn pure(left: Word, right: Word, c: PiScalar<T>) -> Self {
        let mut x = Self::zero();
        x.add_term(left, right, c);
        x
    }

    pub fn add_term(&mut self, left: Word, right: Word, c: PiScalar<T>) {
        accumulate(&mut self.terms, (left, right), c);
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut x = self.clone();
        for ((a, b), c) in &other.terms {
            x.add_term(a.clone(), b.clone(), c.clone());
        }
        x
    }

    /// `(x1 (x) x2)(y1 (x) y2) = pi^{p(x2)p(y1)} q^{-(|x2|,|y1|)} x1 y1 (x) x2 y2`.
    pub fn mul(&self, other: &Self, datum: &RootDatum) -> Self {
        let mut out = Self::zero();
        for ((x1, x2), c) in &self.terms {
            for ((y1, y2), d) in &other.terms {
                let pi = word_parity(datum, x2) as i64 * word_parity(datum, y1) as i64;
                let q = -word_pairing(datum, x2, y1);
                let twist = PiScalar::monomial(pi, q as i32);
                let mut left = x1.clone();
                left.extend_from_slice(y1);
                let mut right = x2.clone();
                right.extend_from_slice(y2);
                out.add_term(left, right, &(c * d) * &twist);
            }
        }
        out
    }
}

/// Exponents `(a, b)` of the twist `pi^a q^b` for sending the letters
/// selected by `mask` to the left factor past the earlier letters that stay
/// on the right.
fn subset_twist(datum: &RootDatum, w: &[u8], mask: u32) -> (i64, i64) {
    let (mut pi, mut q) = (0i64, 0i64);
    for k in 0..w.len() {
        if mask >> k & 1 == 0 {
            continue;
        }
        for m in 0..k {
            if mask >> m & 1 == 0 {
                let (a, b) = (w[m] as usize, w[k] as usize);
                pi += datum.parity[a] as i64 * datum.parity[b] as i64;
                q -= datum.pairing[a][b];
            }
        }
    }
    (pi, q)
}

/// The algebra map `r` with `r(theta_i) = theta_i (x) 1 + 1 (x) theta_i`.
pub fn coproduct<T: Scalar>(datum: &RootDatum, x: &FreeElement<T>) -> TensorElement<T> {
    let mut out = TensorElement::zero();
    for (w, c) in &x.terms {
        let n = w.len();
        for mask in 0u32..(1 << n) {
            let (pi, q) = subset_twist(datum, w, mask);
            let left: Word = (0..n).filter(|k| mask >> k & 1 == 1).map(|k| w[k]).collect();
            let right: Word = (0..n).filter(|k| mask >> k & 1 == 0).map(|k| w[k]).collect();
            out.add_term(left, right, c * &PiScalar::monomial(pi, q as i32));
        }
    }
    out
}

/// `theta_{i_1}^{(k_1)} ... theta_{i_t}^{(k_t)}` expanded in words.
pub fn divided_word<T: Scalar>(datum: &RootDatum, nodes: &[usize], powers: &[u32]) -> FreeElement<T> {
    assert_eq!(nodes.len(), powers.len());
    let mut w = Word::new();
    let mut c = PiScalar::one();
    for (&i, &k) in nodes.iter().zip(powers) {
        for _ in 0..k {
            w.push(i as u8);
        }
        c = &c * &quantum_factorial(k, datum.sym[i], datum.parity[i]);
    }
    FreeElement::monomial(w, c.inv().expect("quantum factorials are invertible"))
}

/// `theta_i^{(a)}`.
pub fn divided_power<T: Scalar>(datum: &RootDatum, i: usize, a: u32) -> FreeElement<T> {
    divided_word(datum, &[i], &[a])
}

/// `(1 - pi_i q_i^2)^{-1}`, the value of `(theta_i, theta_i)`.
pub fn generator_norm<T: Scalar>(datum: &RootDatum, i: usize) -> PiScalar<T> {
    let x = PiScalar::one() - PiScalar::monomial(datum.parity[i] as i64, 2 * datum.sym[i] as i32);
    x.inv().expect("1 - pi q^2 is invertible")
}
