use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::pi::PiScalar;
use super::RingError;
use crate::scalar::Scalar;

/// Numerator and denominator of `[a]_i` at `pi = sign`, with `q_i = q^s`.
fn quantum_parts<T: Scalar>(a: u32, s: u32, parity: u8, sign: i8) -> (LaurentPoly<T>, LaurentPoly<T>) {
    let pi_factor = |k: u32| {
        if sign < 0 && parity % 2 == 1 && k % 2 == 1 {
            -T::one()
        } else {
            T::one()
        }
    };
    let (a, s) = (a as i32, s as i32);
    let mut num = LaurentPoly::monomial(pi_factor(a as u32), s * a);
    num.add_term(-s * a, -T::one());
    let mut den = LaurentPoly::monomial(pi_factor(1), s);
    den.add_term(-s, -T::one());
    (num, den)
}

fn laurent_quotient<T: Scalar>(num: &LaurentPoly<T>, den: &LaurentPoly<T>) -> Result<LaurentPoly<T>, RingError> {
    num.div_exact(den).ok_or(RingError::InexactDivision)
}

/// The quantum integer `[a]_i = (pi_i^a q_i^a - q_i^{-a}) / (pi_i q_i - q_i^{-1})`
/// for a node with `q_i = q^s` and `pi_i = pi^parity`.
pub fn quantum_integer<T: Scalar>(a: u32, s: u32, parity: u8) -> PiScalar<T> {
    let component = |sign| {
        let (num, den) = quantum_parts::<T>(a, s, parity, sign);
        laurent_quotient(&num, &den).expect("quantum integers are Laurent polynomials")
    };
    PiScalar::from_laurent_pair(component(1), component(-1))
}

pub fn quantum_factorial<T: Scalar>(a: u32, s: u32, parity: u8) -> PiScalar<T> {
    (1..=a).fold(PiScalar::one(), |acc, k| &acc * &quantum_integer(k, s, parity))
}

/// `[a choose t]_i`, computed as a ratio of factorials with exact division in
/// both specializations.
pub fn quantum_binomial<T: Scalar>(a: u32, t: u32, s: u32, parity: u8) -> Result<PiScalar<T>, RingError> {
    if t > a {
        return Ok(PiScalar::zero());
    }
    let top = quantum_factorial::<T>(a, s, parity);
    let bottom = &quantum_factorial::<T>(t, s, parity) * &quantum_factorial::<T>(a - t, s, parity);
    let part = |sign: i8| {
        let n = top.at(sign).to_laurent().expect("factorials are Laurent polynomials");
        let d = bottom.at(sign).to_laurent().expect("factorials are Laurent polynomials");
        laurent_quotient(&n, &d)
    };
    Ok(PiScalar::from_laurent_pair(part(1)?, part(-1)?))
}

/// `q_i = q^s` as a scalar.
pub fn q_node<T: Scalar>(s: u32) -> PiScalar<T> {
    PiScalar::q_pow(s as i32)
}

/// `pi_i = pi^parity` as a scalar.
pub fn pi_node<T: Scalar>(parity: u8) -> PiScalar<T> {
    PiScalar::pi_pow(parity as i64)
}
