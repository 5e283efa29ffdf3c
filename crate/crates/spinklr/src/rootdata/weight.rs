use serde_json::{json, Value};

use super::datum::RootDatum;
use super::RootDataError;

/// An element `sum_i n_i alpha_i` of the positive root cone.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<u32>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn height(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn of_sequence(rank: usize, seq: &[usize]) -> Self {
        let mut w = Self::zero(rank);
        for &i in seq {
            w.0[i] += 1;
        }
        w
    }

    pub fn add(&self, other: &Self) -> Self {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `other <= self` componentwise, returning the difference.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Weight)
    }

    /// Parses `i:2,j:1`; a bare name counts once, and `odd`/`even` resolve
    /// when that parity class has a single node.
    pub fn parse(datum: &RootDatum, text: &str) -> Result<Self, RootDataError> {
        let mut w = Self::zero(datum.rank());
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, count) = match part.rsplit_once(':') {
                Some((n, c)) => {
                    let c = c.trim().parse::<u32>().map_err(|_| {
                        RootDataError::InvalidInput(format!("bad multiplicity in weight entry {part}"))
                    })?;
                    (n.trim(), c)
                }
                None => (part, 1),
            };
            let i = datum
                .resolve_node(name)
                .ok_or_else(|| RootDataError::InvalidInput(format!("unknown node {name}")))?;
            w.0[i] += count;
        }
        Ok(w)
    }

    pub fn to_json(&self, datum: &RootDatum) -> Value {
        let mut m = serde_json::Map::new();
        for (i, &n) in self.0.iter().enumerate() {
            if n > 0 {
                m.insert(datum.nodes[i].clone(), json!(n));
            }
        }
        Value::Object(m)
    }

    pub fn display(&self, datum: &RootDatum) -> String {
        let parts: Vec<String> =
            (0..self.0.len()).filter(|&i| self.0[i] > 0).map(|i| format!("{}:{}", datum.nodes[i], self.0[i])).collect();
        parts.join(",")
    }

    /// All weights of the given height.
    pub fn all_of_height(rank: usize, height: u32) -> Vec<Weight> {
        fn rec(rank: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Weight>) {
            if cur.len() + 1 == rank {
                cur.push(left);
                out.push(Weight(cur.clone()));
                cur.pop();
                return;
            }
            for k in (0..=left).rev() {
                cur.push(k);
                rec(rank, left - k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if rank > 0 {
            rec(rank, height, &mut Vec::new(), &mut out);
        }
        out
    }
}

/// Every sequence `(i_1, ..., i_n)` with `alpha_{i_1} + ... + alpha_{i_n} = nu`,
/// in lexicographic order of node indices.
pub fn enumerate_sequences(weight: &Weight) -> Vec<Vec<usize>> {
    fn rec(left: &mut Vec<u32>, cur: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                cur.push(i);
                rec(left, cur, n, out);
                cur.pop();
                left[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    let n = weight.height() as usize;
    rec(&mut weight.0.clone(), &mut Vec::with_capacity(n), n, &mut out);
    out
}
