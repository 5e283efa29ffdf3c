use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::laurent::LaurentPoly;
use super::ratfunc::RationalFunc;
use crate::scalar::Scalar;

/// An element of `T(q)[pi]/(pi^2 - 1)`, stored through its two
/// specializations `pi = 1` and `pi = -1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PiScalar<T> {
    pub plus: RationalFunc<T>,
    pub minus: RationalFunc<T>,
}

impl<T: Scalar> PiScalar<T> {
    pub fn new(plus: RationalFunc<T>, minus: RationalFunc<T>) -> Self {
        PiScalar { plus, minus }
    }

    /// The same function at both specializations (no `pi` dependence).
    pub fn uniform(f: RationalFunc<T>) -> Self {
        PiScalar { plus: f.clone(), minus: f }
    }

    pub fn from_laurent_pair(plus: LaurentPoly<T>, minus: LaurentPoly<T>) -> Self {
        PiScalar { plus: RationalFunc::from_laurent(plus), minus: RationalFunc::from_laurent(minus) }
    }

    pub fn constant(c: T) -> Self {
        Self::uniform(RationalFunc::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(T::from_int(n))
    }

    /// `pi^a q^e`.
    pub fn monomial(pi_exp: i64, q_exp: i32) -> Self {
        let plus = RationalFunc::q_pow(q_exp);
        let minus = if pi_exp.rem_euclid(2) == 1 { -&plus } else { plus.clone() };
        PiScalar { plus, minus }
    }

    pub fn q_pow(e: i32) -> Self {
        Self::monomial(0, e)
    }

    pub fn pi() -> Self {
        Self::monomial(1, 0)
    }

    pub fn pi_pow(a: i64) -> Self {
        Self::monomial(a, 0)
    }

    /// Value at `pi = sign`.
    pub fn at(&self, sign: i8) -> &RationalFunc<T> {
        if sign >= 0 {
            &self.plus
        } else {
            &self.minus
        }
    }

    pub fn is_zero(&self) -> bool {
        self.plus.is_zero() && self.minus.is_zero()
    }

    pub fn is_invertible(&self) -> bool {
        !self.plus.is_zero() && !self.minus.is_zero()
    }

    pub fn inv(&self) -> Option<Self> {
        Some(PiScalar { plus: self.plus.inv()?, minus: self.minus.inv()? })
    }

    pub fn scale(&self, c: &T) -> Self {
        PiScalar { plus: self.plus.scale(c), minus: self.minus.scale(c) }
    }

    pub fn pow(&self, n: i32) -> Self {
        PiScalar { plus: self.plus.pow(n), minus: self.minus.pow(n) }
    }

    /// The bar involution: `q -> pi q^{-1}`, `pi -> pi`.
    pub fn bar(&self) -> Self {
        PiScalar { plus: self.plus.invert_variable(1), minus: self.minus.invert_variable(-1) }
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.bar() == *self
    }

    pub fn to_json(&self) -> Value {
        json!({ "plus": ratfunc_json(&self.plus), "minus": ratfunc_json(&self.minus) })
    }
}

fn laurent_json<T: Scalar>(p: &LaurentPoly<T>) -> Value {
    Value::Array(p.terms().map(|(e, c)| json!([e, c.to_string()])).collect())
}

fn ratfunc_json<T: Scalar>(f: &RationalFunc<T>) -> Value {
    json!({ "num": laurent_json(f.numer()), "den": laurent_json(f.denom()) })
}

fn laurent_from_json<T: Scalar>(v: &Value) -> Option<LaurentPoly<T>> {
    let mut p = LaurentPoly::zero();
    for term in v.as_array()? {
        let e = i32::try_from(term.get(0)?.as_i64()?).ok()?;
        let c: T = term.get(1)?.as_str()?.parse().ok()?;
        p.add_term(e, c);
    }
    Some(p)
}

fn ratfunc_from_json<T: Scalar>(v: &Value) -> Option<RationalFunc<T>> {
    let den = laurent_from_json(v.get("den")?)?;
    if den.is_zero() {
        return None;
    }
    Some(RationalFunc::new(laurent_from_json(v.get("num")?)?, den))
}

impl<T: Scalar> PiScalar<T> {
    pub fn from_json(v: &Value) -> Option<Self> {
        Some(PiScalar {
            plus: ratfunc_from_json(v.get("plus")?)?,
            minus: ratfunc_from_json(v.get("minus")?)?,
        })
    }
}

impl<T: Scalar> serde::Serialize for PiScalar<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<T: Scalar> Zero for PiScalar<T> {
    fn zero() -> Self {
        Self::uniform(RationalFunc::zero())
    }
    fn is_zero(&self) -> bool {
        PiScalar::is_zero(self)
    }
}

impl<T: Scalar> One for PiScalar<T> {
    fn one() -> Self {
        Self::uniform(RationalFunc::one())
    }
}

macro_rules! pi_binop {
    ($($tr:ident $m:ident),*) => {$(
        impl<'a, T: Scalar> $tr<&'a PiScalar<T>> for &'a PiScalar<T> {
            type Output = PiScalar<T>;
            fn $m(self, rhs: &PiScalar<T>) -> PiScalar<T> {
                PiScalar { plus: (&self.plus).$m(&rhs.plus), minus: (&self.minus).$m(&rhs.minus) }
            }
        }
        impl<T: Scalar> $tr for PiScalar<T> {
            type Output = PiScalar<T>;
            fn $m(self, rhs: Self) -> Self {
                (&self).$m(&rhs)
            }
        }
    )*};
}
pi_binop!(Add add, Sub sub, Mul mul, Div div);

impl<T: Scalar> Neg for &PiScalar<T> {
    type Output = PiScalar<T>;
    fn neg(self) -> PiScalar<T> {
        PiScalar { plus: -&self.plus, minus: -&self.minus }
    }
}

impl<T: Scalar> Neg for PiScalar<T> {
    type Output = PiScalar<T>;
    fn neg(self) -> Self {
        -&self
    }
}

impl<T: Scalar> fmt::Display for PiScalar<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.plus == self.minus {
            write!(f, "{}", self.plus)
        } else {
            write!(f, "[pi=+1: {}; pi=-1: {}]", self.plus, self.minus)
        }
    }
}
