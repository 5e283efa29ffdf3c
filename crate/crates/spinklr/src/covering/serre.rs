use num_traits::{One, Zero};

use super::algebra::{coproduct, divided_power, divided_word, generator_norm, FreeElement, TensorElement};
use super::form::Form;
use crate::ring::{quantum_factorial, PiScalar};
use crate::rootdata::RootDatum;
use crate::scalar::Scalar;

/// `p(k; i, j) = k p(i) p(j) + k(k-1)/2 p(i)`.
pub fn serre_parity(datum: &RootDatum, k: u32, i: usize, j: usize) -> i64 {
    let (pi, pj) = (datum.parity[i] as i64, datum.parity[j] as i64);
    let k = k as i64;
    k * pi * pj + k * (k - 1) / 2 * pi
}

/// `sum_{a + a' = 1 - a_ij} (-1)^{a'} pi^{p(a'; i, j)} theta_i^{(a)} theta_j theta_i^{(a')}`.
pub fn serre_element<T: Scalar>(datum: &RootDatum, i: usize, j: usize) -> FreeElement<T> {
    assert_ne!(i, j);
    let n = (1 - datum.cartan(i, j)) as u32;
    let mut out = FreeElement::zero();
    for ap in 0..=n {
        let a = n - ap;
        let c = PiScalar::monomial(serre_parity(datum, ap, i, j), 0).scale(&T::sign(ap as i64));
        out = out.add(&divided_word(datum, &[i, j, i], &[a, 1, ap]).scale(&c));
    }
    out
}

/// Sign prefactor of the closed form for `(theta_i^{(a)} theta_j theta_i^{(a')}, ...)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lu12Sign {
    /// `(-1)^{n+1}`, the literal reading.
    Literal,
    /// `(-1)^n`, as obtained by multiplying the four closed-form norms.
    Derived,
}

/// The closed sum for `(theta_i^{(a)} theta_j theta_i^{(a')}, theta_i^{(b)} theta_j theta_i^{(b')})`
/// with `i` odd, summed over `t + s = b`, `t' + s' = b'`, `t + t' = a`, `s + s' = a'`.
pub fn lu12_closed_form<T: Scalar>(
    datum: &RootDatum,
    i: usize,
    j: usize,
    (a, ap, b, bp): (u32, u32, u32, u32),
    sign: Lu12Sign,
) -> Option<PiScalar<T>> {
    if a + ap != b + bp || !datum.is_odd(i) || i == j {
        return None;
    }
    let n = (a + ap) as i64;
    let si = datum.sym[i];
    let qi = |e: i64| PiScalar::<T>::q_pow((e * si as i64) as i32);
    let aij = datum.cartan(i, j);
    let pj = datum.parity[j] as i64;
    let base = &(&PiScalar::pi() * &qi(1)) - &qi(-1);
    let prefactor_sign = match sign {
        Lu12Sign::Literal => T::sign(n + 1),
        Lu12Sign::Derived => T::sign(n),
    };
    let denom_common = &base.pow(n as i32) * &generator_norm::<T>(datum, j).inv().unwrap();
    let fact = |k: u32| quantum_factorial::<T>(k, si, 1);
    let mut total = PiScalar::<T>::zero();
    let lo = a.saturating_sub(bp);
    for t in lo..=a.min(b) {
        let (t, tp, s) = (t as i64, (a - t) as i64, (b - t) as i64);
        let sp = bp as i64 - tp;
        if sp < 0 || s < 0 {
            continue;
        }
        let spade = (s * (s - 1) + sp * (sp - 1) + t * (t - 1) + tp * (tp - 1)) / 2;
        let club = s * sp + t * tp + t * s + tp * sp + 2 * tp * s + (spade + n) + (tp + s) * aij;
        let heart = s * sp + t * tp + t * s + tp * sp + tp * s + (s + tp) * pj + spade;
        let num = &qi(-club) * &PiScalar::pi_pow(heart);
        let den = &(&(&denom_common * &fact(s as u32)) * &fact(sp as u32)) * &(&fact(t as u32) * &fact(tp as u32));
        total = &total + &(&num / &den);
    }
    Some(total.scale(&prefactor_sign))
}

/// The right side of the coproduct formula for divided powers,
/// `sum_{t + t' = a} (pi_i q_i)^{-t t'} theta_i^{(t)} (x) theta_i^{(t')}`.
pub fn divided_coproduct_closed<T: Scalar>(datum: &RootDatum, i: usize, a: u32) -> TensorElement<T> {
    let pq = &PiScalar::<T>::pi_pow(datum.parity[i] as i64) * &PiScalar::q_pow(datum.sym[i] as i32);
    let mut out = TensorElement::zero();
    for t in 0..=a {
        let tp = a - t;
        let c = pq.pow(-((t * tp) as i32));
        let left = divided_power::<T>(datum, i, t);
        let right = divided_power::<T>(datum, i, tp);
        for (w1, c1) in &left.terms {
            for (w2, c2) in &right.terms {
                out.add_term(w1.clone(), w2.clone(), &(&c * c1) * c2);
            }
        }
    }
    out
}

/// Checks `r(theta_i^{(a)})` against the closed formula coefficientwise.
pub fn rtheta_check<T: Scalar>(datum: &RootDatum, i: usize, a: u32) -> bool {
    coproduct(datum, &divided_power::<T>(datum, i, a)) == divided_coproduct_closed(datum, i, a)
}

/// `pi_i^{a(a-1)/2} prod_{s=1}^a (1 - pi_i^s q_i^{2s})^{-1}`.
pub fn divided_norm_product<T: Scalar>(datum: &RootDatum, i: usize, a: u32) -> PiScalar<T> {
    let (p, s) = (datum.parity[i] as i64, datum.sym[i] as i32);
    let mut x = PiScalar::pi_pow(p * (a as i64) * (a as i64 - 1) / 2);
    for k in 1..=a as i64 {
        let f = PiScalar::one() - PiScalar::monomial(p * k, 2 * s * k as i32);
        x = &x / &f;
    }
    x
}

/// `(-1)^a pi_i^{a(a-1)/2} q_i^{-a(a+1)/2} (pi_i q_i - q_i^{-1})^{-a} ([a]_i!)^{-1}`.
pub fn divided_norm_factorial<T: Scalar>(datum: &RootDatum, i: usize, a: u32) -> PiScalar<T> {
    let (p, s) = (datum.parity[i] as i64, datum.sym[i]);
    let a64 = a as i64;
    let base = &(&PiScalar::<T>::pi_pow(p) * &PiScalar::q_pow(s as i32)) - &PiScalar::q_pow(-(s as i32));
    let head = &PiScalar::pi_pow(p * a64 * (a64 - 1) / 2) * &PiScalar::q_pow(-(s as i64 * a64 * (a64 + 1) / 2) as i32);
    let x = &head / &(&base.pow(a as i32) * &quantum_factorial(a, s, datum.parity[i]));
    x.scale(&T::sign(a64))
}

/// `(theta_i^{(a)}, theta_i^{(a)})` by the recursive form.
pub fn divided_norm_recursive<T: Scalar>(form: &Form<T>, i: usize, a: u32) -> PiScalar<T> {
    let x = divided_power::<T>(&form.datum, i, a);
    form.pair(&x, &x)
}
