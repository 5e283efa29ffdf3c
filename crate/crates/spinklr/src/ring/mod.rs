//! Exact arithmetic over `Z[q, q^-1]`, its fraction field, the ring obtained
//! by adjoining `pi` with `pi^2 = 1`, quantum integers and truncated series.

mod laurent;
mod pi;
mod quantum;
mod ratfunc;
mod series;

pub use laurent::{power, LaurentPoly};
pub use pi::PiScalar;
pub use quantum::{pi_node, q_node, quantum_binomial, quantum_factorial, quantum_integer};
pub use ratfunc::RationalFunc;
pub use series::{series_expand, PiSeries};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("denominator vanishes at q = 0")]
    NotExpandable,
}

/// Applies the bar involution `q -> pi q^{-1}`.
pub fn bar<T: crate::Scalar>(x: &PiScalar<T>) -> PiScalar<T> {
    x.bar()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use crate::{Pi, Rat};
    use num_traits::One;
    use proptest::prelude::*;

    fn geometric(pi_exp: i64, q_exp: i32) -> Pi {
        (&Pi::one() - &Pi::monomial(pi_exp, q_exp)).inv().unwrap()
    }

    #[test]
    fn geometric_series_with_pi() {
        let s = series_expand(&geometric(1, 2), 4).unwrap();
        let mut expected = PiSeries::zero(4);
        expected.add_term(0, 0, Rat::one());
        expected.add_term(2, 1, Rat::one());
        expected.add_term(4, 0, Rat::one());
        assert_eq!(s, expected);
        let one = series_expand(&Pi::one(), 3).unwrap();
        assert_eq!(one.coeff(0), (Rat::one(), Rat::from_int(0)));
        assert_eq!(one.coeff0.len() + one.coeff1.len(), 1);
    }

    #[test]
    fn nilhecke_two_expansion() {
        // pi q^{-1} [2] / (1 - pi q^2)^2 with s = p = 1. Oracle: multiply
        // (1 + pi q^{-2}) by sum_k (k+1) pi^k q^{2k} by hand.
        let x = &(&(&Pi::pi() * &Pi::q_pow(-1)) * &quantum_integer(2, 1, 1)) * &geometric(1, 2).pow(2);
        let s = series_expand(&x, 3).unwrap();
        let mut expected = PiSeries::zero(3);
        expected.add_term(-2, 1, Rat::one());
        expected.add_term(0, 0, Rat::from_int(3));
        expected.add_term(2, 1, Rat::from_int(5));
        assert_eq!(s, expected);
    }

    fn small_pi() -> impl Strategy<Value = Pi> {
        let term = (0i64..2, -3i32..4, -3i64..4);
        (prop::collection::vec(term, 1..4), 0i64..2, 1i32..4, prop::bool::ANY).prop_map(
            |(terms, dp, de, with_den)| {
                let mut x = Pi::from_int(0);
                for (p, e, c) in terms {
                    x = &x + &Pi::monomial(p, e).scale(&Rat::from_int(c));
                }
                if with_den {
                    x = &x * &geometric(dp, de);
                }
                x
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_pi(), b in small_pi(), c in small_pi()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn bar_is_a_ring_involution(a in small_pi(), b in small_pi()) {
            prop_assert_eq!(a.bar().bar(), a.clone());
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
            prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
        }

        #[test]
        fn expansion_is_multiplicative(a in small_pi(), b in small_pi()) {
            let d = 6;
            let sa = series_expand(&a, d).unwrap();
            let sb = series_expand(&b, d).unwrap();
            let prod = sa.mul(&sb);
            let direct = series_expand(&(&a * &b), prod.order).unwrap();
            prop_assert_eq!(prod, direct);
        }
    }
}
