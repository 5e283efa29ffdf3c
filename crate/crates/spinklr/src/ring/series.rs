use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use super::pi::PiScalar;
use super::ratfunc::RationalFunc;
use super::RingError;
use crate::scalar::Scalar;

/// A truncated Laurent series in `q` with coefficients in `T[pi]/(pi^2-1)`,
/// written as `sum_e (coeff0[e] + pi * coeff1[e]) q^e` for `e <= order`.
#[derive(Clone, Debug)]
pub struct PiSeries<T> {
    pub lower: i32,
    pub order: i32,
    pub coeff0: BTreeMap<i32, T>,
    pub coeff1: BTreeMap<i32, T>,
}

fn bump<T: Scalar>(map: &mut BTreeMap<i32, T>, e: i32, c: T) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(e).or_insert_with(T::zero);
    *entry = entry.clone() + c;
    if entry.is_zero() {
        map.remove(&e);
    }
}

impl<T: Scalar> PiSeries<T> {
    pub fn zero(order: i32) -> Self {
        PiSeries { lower: order, order, coeff0: BTreeMap::new(), coeff1: BTreeMap::new() }
    }

    /// Adds `c * pi^parity * q^e`; terms above the truncation order are dropped.
    pub fn add_term(&mut self, e: i32, parity: u8, c: T) {
        if e > self.order {
            return;
        }
        self.lower = self.lower.min(e);
        if parity % 2 == 0 {
            bump(&mut self.coeff0, e, c);
        } else {
            bump(&mut self.coeff1, e, c);
        }
    }

    /// Builds a series from per-bidegree counts, e.g. a dimension count.
    pub fn from_counts<I: IntoIterator<Item = ((i32, u8), usize)>>(order: i32, counts: I) -> Self {
        let mut s = Self::zero(order);
        for ((e, p), n) in counts {
            s.add_term(e, p, T::from_int(n as i64));
        }
        s
    }

    /// Coefficients `(1-part, pi-part)` at `q^e`.
    pub fn coeff(&self, e: i32) -> (T, T) {
        (
            self.coeff0.get(&e).cloned().unwrap_or_else(T::zero),
            self.coeff1.get(&e).cloned().unwrap_or_else(T::zero),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeff0.is_empty() && self.coeff1.is_empty()
    }

    pub fn truncate(&self, order: i32) -> Self {
        let order = order.min(self.order);
        let mut s = Self::zero(order);
        for (e, c) in self.coeff0.iter() {
            s.add_term(*e, 0, c.clone());
        }
        for (e, c) in self.coeff1.iter() {
            s.add_term(*e, 1, c.clone());
        }
        s
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut s = Self::zero(self.order.min(other.order));
        for src in [self, other] {
            for (e, c) in src.coeff0.iter() {
                s.add_term(*e, 0, c.clone());
            }
            for (e, c) in src.coeff1.iter() {
                s.add_term(*e, 1, c.clone());
            }
        }
        s
    }

    pub fn neg(&self) -> Self {
        PiSeries {
            lower: self.lower,
            order: self.order,
            coeff0: self.coeff0.iter().map(|(e, c)| (*e, -c.clone())).collect(),
            coeff1: self.coeff1.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product, truncated at the largest order at which every coefficient is
    /// determined by the retained terms of both factors.
    pub fn mul(&self, other: &Self) -> Self {
        let order = (self.order + other.lower).min(other.order + self.lower);
        let mut s = Self::zero(order);
        let parts = |x: &Self| {
            let mut v: Vec<(i32, u8, T)> = x.coeff0.iter().map(|(e, c)| (*e, 0, c.clone())).collect();
            v.extend(x.coeff1.iter().map(|(e, c)| (*e, 1, c.clone())));
            v
        };
        let lhs = parts(self);
        let rhs = parts(other);
        for (ea, pa, ca) in lhs.iter() {
            for (eb, pb, cb) in rhs.iter() {
                if ea + eb <= order {
                    s.add_term(ea + eb, (pa + pb) % 2, ca.clone() * cb.clone());
                }
            }
        }
        s
    }

    /// Multiplies by `pi^a q^e`.
    pub fn shift(&self, q_exp: i32, pi_exp: u8) -> Self {
        let mut s = Self::zero(self.order + q_exp);
        for (e, c) in self.coeff0.iter() {
            s.add_term(e + q_exp, pi_exp % 2, c.clone());
        }
        for (e, c) in self.coeff1.iter() {
            s.add_term(e + q_exp, (1 + pi_exp) % 2, c.clone());
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let side = |m: &BTreeMap<i32, T>| {
            Value::Array(m.iter().map(|(e, c)| json!([e, c.to_string()])).collect())
        };
        json!({
            "lower": self.lower,
            "order": self.order,
            "coeff0": side(&self.coeff0),
            "coeff1": side(&self.coeff1),
        })
    }
}

/// Series agree when every retained coefficient agrees; the stored lower
/// bound is only a bound and does not take part.
impl<T: Scalar> PartialEq for PiSeries<T> {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.coeff0 == other.coeff0 && self.coeff1 == other.coeff1
    }
}

impl<T: Scalar> serde::Serialize for PiSeries<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<T: Scalar> fmt::Display for PiSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut exps: Vec<i32> = self.coeff0.keys().chain(self.coeff1.keys()).copied().collect();
        exps.sort_unstable();
        exps.dedup();
        let mut first = true;
        for e in exps {
            let (c0, c1) = self.coeff(e);
            for (c, pi) in [(c0, ""), (c1, "pi*")] {
                if c.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "({c}){pi}q^{e}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

/// Coefficients of the Laurent expansion of `f` at `q = 0`, up to `q^order`.
fn expand_component<T: Scalar>(f: &RationalFunc<T>, order: i32) -> Result<BTreeMap<i32, T>, RingError> {
    let mut out = BTreeMap::new();
    if f.is_zero() {
        return Ok(out);
    }
    let den = f.denom();
    let vd = den.valuation().unwrap();
    let d0 = den.coeff(vd);
    if d0.is_zero() {
        return Err(RingError::NotExpandable);
    }
    let num = f.numer().shift(-vd);
    let vn = num.valuation().unwrap();
    if vn > order {
        return Ok(out);
    }
    let len = (order - vn) as usize + 1;
    let dcoef: Vec<T> = (0..len as i32).map(|k| den.coeff(vd + k)).collect();
    let mut inv: Vec<T> = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = if k == 0 { T::one() } else { T::zero() };
        for j in 1..=k {
            acc = acc - dcoef[j].clone() * inv[k - j].clone();
        }
        inv.push(acc / d0.clone());
    }
    for (e, c) in num.terms() {
        for k in 0..len {
            let t = e + k as i32;
            if t > order {
                break;
            }
            bump(&mut out, t, c.clone() * inv[k].clone());
        }
    }
    Ok(out)
}

/// Expands both specializations of `x` at `q = 0` and recombines them into
/// the `1`- and `pi`-parts.
pub fn series_expand<T: Scalar>(x: &PiScalar<T>, order: i32) -> Result<PiSeries<T>, RingError> {
    let plus = expand_component(&x.plus, order)?;
    let minus = expand_component(&x.minus, order)?;
    let half = T::one() / T::from_int(2);
    let mut s = PiSeries::zero(order);
    let mut exps: Vec<i32> = plus.keys().chain(minus.keys()).copied().collect();
    exps.sort_unstable();
    exps.dedup();
    for e in exps {
        let a = plus.get(&e).cloned().unwrap_or_else(T::zero);
        let b = minus.get(&e).cloned().unwrap_or_else(T::zero);
        s.add_term(e, 0, (a.clone() + b.clone()) * half.clone());
        s.add_term(e, 1, (a - b) * half.clone());
    }
    if let Some(lo) = [x.plus.numer().valuation(), x.minus.numer().valuation()].into_iter().flatten().min() {
        s.lower = s.lower.min(lo);
    }
    Ok(s)
}
