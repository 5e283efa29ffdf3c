use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use crate::scalar::Scalar;

/// An element of `T(q)` in canonical form.
///
/// The numerator is a Laurent polynomial; the denominator is a monic
/// polynomial with nonzero constant term, coprime to the numerator. Any power
/// of `q` is carried by the numerator, so equal functions have equal
/// representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunc<T> {
    num: LaurentPoly<T>,
    den: LaurentPoly<T>,
}

impl<T: Scalar> RationalFunc<T> {
    /// Builds `num / den`, panicking if `den` is zero.
    pub fn new(num: LaurentPoly<T>, den: LaurentPoly<T>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let vn = num.valuation().unwrap();
        let vd = den.valuation().unwrap();
        let n0 = num.shift(-vn);
        let d0 = den.shift(-vd);
        let g = LaurentPoly::gcd(&n0, &d0);
        let (n1, d1) = if g.is_one() {
            (n0, d0)
        } else {
            (n0.div_rem(&g).0, d0.div_rem(&g).0)
        };
        let lc = d1.leading_coeff().unwrap().clone();
        let inv = T::one() / lc;
        RationalFunc { num: n1.scale(&inv).shift(vn - vd), den: d1.scale(&inv) }
    }

    pub fn from_laurent(p: LaurentPoly<T>) -> Self {
        RationalFunc { num: p, den: LaurentPoly::one() }
    }

    pub fn constant(c: T) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(T::from_int(n))
    }

    pub fn q_pow(e: i32) -> Self {
        Self::from_laurent(LaurentPoly::q_pow(e))
    }

    pub fn numer(&self) -> &LaurentPoly<T> {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is 1.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_laurent(&self) -> Option<LaurentPoly<T>> {
        self.is_laurent().then(|| self.num.clone())
    }

    pub fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Self::new(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Substitutes `q -> sign * q^{-1}`.
    pub fn invert_variable(&self, sign: i8) -> Self {
        Self::new(self.num.invert_variable(sign), self.den.invert_variable(sign))
    }

    pub fn pow(&self, n: i32) -> Self {
        let base = if n < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// A rough size measure used for pivot selection.
    pub fn complexity(&self) -> usize {
        self.num.num_terms() + self.den.num_terms()
    }
}

impl<T: Scalar> Zero for RationalFunc<T> {
    fn zero() -> Self {
        RationalFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<T: Scalar> One for RationalFunc<T> {
    fn one() -> Self {
        RationalFunc { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }
}

impl<'a, T: Scalar> Add<&'a RationalFunc<T>> for &'a RationalFunc<T> {
    type Output = RationalFunc<T>;
    fn add(self, rhs: &RationalFunc<T>) -> RationalFunc<T> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunc::new(num, &self.den * &rhs.den)
    }
}

impl<'a, T: Scalar> Sub<&'a RationalFunc<T>> for &'a RationalFunc<T> {
    type Output = RationalFunc<T>;
    fn sub(self, rhs: &RationalFunc<T>) -> RationalFunc<T> {
        self + &(-rhs)
    }
}

impl<'a, T: Scalar> Mul<&'a RationalFunc<T>> for &'a RationalFunc<T> {
    type Output = RationalFunc<T>;
    fn mul(self, rhs: &RationalFunc<T>) -> RationalFunc<T> {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunc::from_laurent(&self.num * &rhs.num);
        }
        RationalFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a, T: Scalar> Div<&'a RationalFunc<T>> for &'a RationalFunc<T> {
    type Output = RationalFunc<T>;
    fn div(self, rhs: &RationalFunc<T>) -> RationalFunc<T> {
        self * &rhs.inv().expect("division by zero rational function")
    }
}

impl<T: Scalar> Neg for &RationalFunc<T> {
    type Output = RationalFunc<T>;
    fn neg(self) -> RationalFunc<T> {
        RationalFunc { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Scalar> $tr for RationalFunc<T> {
            type Output = RationalFunc<T>;
            fn $m(self, rhs: Self) -> Self {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl<T: Scalar> Neg for RationalFunc<T> {
    type Output = RationalFunc<T>;
    fn neg(self) -> Self {
        -&self
    }
}

impl<T: Scalar> fmt::Display for RationalFunc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
