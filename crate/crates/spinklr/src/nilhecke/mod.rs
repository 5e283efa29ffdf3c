//! The (spin) nilHecke algebra of a single node: divided differences,
//! Demazure operators, the primitive idempotent, odd symmetric functions and
//! graded dimensions.

use std::collections::BTreeMap;

use num_traits::One;
use serde_json::{json, Value};

use crate::linalg::Echelon;
use crate::perm::Perm;
use crate::polyrep::{Gen, GenWord, HElement, PolyRep, PolyVector, SkewMonomial};
use crate::ring::{quantum_factorial, series_expand, PiScalar, PiSeries, RingError};
use crate::rootdata::{RootDatum, Weight};
use crate::scalar::{sign_i64, Scalar};

/// Sign in front of `d_r y_r` in the Demazure operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DemazureSign {
    /// `-d_r y_r` for both parities, the literal reading.
    Literal,
    /// `-d_r y_r` in the even case and `+d_r y_r` in the odd case; the
    /// reading under which the operator is idempotent.
    Signed,
}

/// `NH_n` or its spin version, acting on (skew) polynomials in `n` variables.
pub struct NilHecke<T: Scalar> {
    pub n: usize,
    pub parity: u8,
    pub sym: u32,
    pub rep: PolyRep<T>,
}

/// The fixed reduced word of the longest element: `w0<n> = s_1 ... s_{n-1} w0<n-1>`
/// (0-based letters).
pub fn w0_word(n: usize) -> Vec<usize> {
    if n <= 1 {
        return vec![];
    }
    let mut w: Vec<usize> = (0..n - 1).collect();
    w.extend(w0_word(n - 1));
    w
}

/// The constants `c` in `d_{n-1} ... d_1 y_1^{n-1} e_n = c e_n` and
/// `d_1 ... d_{n-1} y_n^{n-1} e_n = c e_n`, in that order.
pub fn annihilator_signs(n: usize, parity: u8) -> (i64, i64) {
    let n = n as i64;
    match parity {
        1 => (sign_i64(binom(n - 1, 2)), sign_i64(binom(n - 1, 2))),
        _ => (sign_i64(n - 1), 1),
    }
}

/// Shifts letters of `S_k` into the subgroup permuting the last `k` of `n` strands.
pub fn dagger(letters: &[usize], k: usize, n: usize) -> Vec<usize> {
    letters.iter().map(|&r| r + n - k).collect()
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

/// All partitions with parts at most `max_part` and size at most `max_size`.
pub fn partitions(max_part: usize, max_size: usize) -> Vec<Vec<usize>> {
    fn rec(max_part: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for p in (1..=max_part.min(left)).rev() {
            cur.push(p);
            rec(p, left - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_part, max_size, &mut Vec::new(), &mut out);
    out
}

impl<T: Scalar> NilHecke<T> {
    pub fn new(n: usize, parity: u8) -> Self {
        Self::with_symmetrizer(n, parity, 1)
    }

    pub fn with_symmetrizer(n: usize, parity: u8, sym: u32) -> Self {
        let datum = RootDatum::from_parts_unchecked(
            if parity == 1 { "nh-odd" } else { "nh-even" },
            vec!["i".into()],
            vec![parity],
            vec![sym],
            vec![vec![2 * sym as i64]],
            vec![vec![0]],
        );
        NilHecke { n, parity, sym, rep: PolyRep::new(&datum, &Weight(vec![n as u32])) }
    }

    fn sign(&self) -> T {
        T::sign(self.parity as i64)
    }

    pub fn one(&self) -> HElement<T> {
        HElement::idem(0)
    }

    pub fn word(&self, letters: Vec<Gen>) -> HElement<T> {
        HElement::word(T::one(), letters, 0)
    }

    /// `d_{r_1} ... d_{r_k}`.
    pub fn d_word(&self, letters: &[usize]) -> HElement<T> {
        self.word(letters.iter().map(|&r| Gen::Tau(r)).collect())
    }

    pub fn y_pow(&self, r: usize, a: u32) -> HElement<T> {
        self.word(vec![Gen::Y(r); a as usize])
    }

    pub fn demazure(&self, r: usize, sign: DemazureSign) -> HElement<T> {
        let c = match sign {
            DemazureSign::Literal => -T::one(),
            DemazureSign::Signed => -self.sign(),
        };
        HElement::word(c, vec![Gen::Tau(r), Gen::Y(r)], 0)
    }

    pub fn demazure_word(&self, letters: &[usize], sign: DemazureSign) -> HElement<T> {
        letters.iter().fold(self.one(), |acc, &r| acc.mul(&self.demazure(r, sign)))
    }

    /// `d_{w0}` for the fixed reduced word.
    pub fn delta_w0(&self) -> HElement<T> {
        self.d_word(&w0_word(self.n))
    }

    /// `(-1)^{C(n-1,2)} y_1^{n-1} y_2^{n-2} ... y_{n-1}`.
    pub fn y_delta(&self) -> HElement<T> {
        let n = self.n;
        let letters: Vec<Gen> = (0..n).flat_map(|r| std::iter::repeat(Gen::Y(r)).take(n - 1 - r)).collect();
        HElement::word(T::sign(binom(n as i64 - 1, 2)), letters, 0)
    }

    /// `e_n`, the Demazure operator of the longest element.
    pub fn idempotent(&self, sign: DemazureSign) -> HElement<T> {
        self.demazure_word(&w0_word(self.n), sign)
    }

    /// `e_{n-1}` on the first `n - 1` strands, or on the last `n - 1` when `shifted`.
    pub fn sub_idempotent(&self, shifted: bool, sign: DemazureSign) -> HElement<T> {
        let w = w0_word(self.n.saturating_sub(1));
        let w = if shifted { dagger(&w, self.n - 1, self.n) } else { w };
        self.demazure_word(&w, sign)
    }

    pub fn equal(&self, x: &HElement<T>, y: &HElement<T>, cap: i64) -> bool {
        self.rep.acts_equal(x, y, cap)
    }

    /// The odd (or ordinary) elementary symmetric function as an operator of
    /// left multiplication.
    pub fn elementary(&self, k: usize) -> HElement<T> {
        let n = self.n;
        let mut out = HElement::zero();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let rs: Vec<usize> = (0..n).filter(|r| mask >> r & 1 == 1).collect();
            let exp: usize = rs.iter().map(|r| r + 1).sum::<usize>() - k;
            let c = if self.parity == 1 { T::sign(exp as i64) } else { T::one() };
            out.terms.push(GenWord::new(c, rs.into_iter().map(Gen::Y).collect(), 0));
        }
        out
    }

    pub fn constant(&self) -> PolyVector<T> {
        PolyVector::monomial(SkewMonomial { comp: 0, exps: std::iter::repeat(0).take(self.n).collect() })
    }

    pub fn elementary_poly(&self, k: usize) -> PolyVector<T> {
        self.rep.act(&self.elementary(k), &self.constant())
    }

    /// `eps_lambda = eps_{lambda_1} ... eps_{lambda_h}` as a polynomial.
    pub fn elementary_product(&self, lambda: &[usize]) -> PolyVector<T> {
        let x = lambda.iter().fold(self.one(), |acc, &k| acc.mul(&self.elementary(k)));
        self.rep.act(&x, &self.constant())
    }

    /// Whether every divided difference kills `v`.
    pub fn is_symmetric(&self, v: &PolyVector<T>) -> bool {
        (0..self.n.saturating_sub(1)).all(|r| self.rep.act_tau(r, v).is_zero())
    }

    /// Whether the products `eps_lambda` with `|lambda| <= max_size` are
    /// linearly independent.
    pub fn elementary_basis_independent(&self, max_size: usize) -> bool {
        let mut e: Echelon<SkewMonomial, T> = Echelon::new();
        partitions(self.n, max_size).iter().all(|l| e.insert(&self.elementary_product(l).terms))
    }

    fn q_i(&self, e: i64) -> PiScalar<T> {
        PiScalar::q_pow((e * self.sym as i64) as i32)
    }

    fn pi_i(&self, e: i64) -> PiScalar<T> {
        PiScalar::pi_pow(e * self.parity as i64)
    }

    fn base_denominator(&self) -> PiScalar<T> {
        let d = &PiScalar::<T>::one() - &(&self.pi_i(1) * &self.q_i(2));
        d.pow(self.n as i32)
    }

    /// `(pi_i q_i)^{-C(n,2)} [n]_i! / (1 - pi_i q_i^2)^n`.
    pub fn dim_closed_form(&self) -> PiScalar<T> {
        let c = binom(self.n as i64, 2);
        let num = &(&self.pi_i(-c) * &self.q_i(-c)) * &quantum_factorial(self.n as u32, self.sym, self.parity);
        &num / &self.base_denominator()
    }

    /// Closed form for the graded dimension of the symmetric functions. With
    /// `literal` the prefactor is `(pi_i q_i)^{-C(n,2)}`, otherwise `q_i^{-C(n,2)}`.
    pub fn lambda_closed_form(&self, literal: bool) -> PiScalar<T> {
        let c = binom(self.n as i64, 2);
        let pre = if literal { &self.pi_i(-c) * &self.q_i(-c) } else { self.q_i(-c) };
        let den = &quantum_factorial::<T>(self.n as u32, self.sym, self.parity) * &self.base_denominator();
        &pre / &den
    }

    /// Bidegree count of the PBW basis `tau_w y^a` up to `q`-degree `cap`.
    pub fn pbw_dim_series(&self, cap: i64) -> PiSeries<T> {
        let norm = 2 * self.sym as i64;
        let mut counts: BTreeMap<(i32, u8), usize> = BTreeMap::new();
        let lengths: Vec<usize> = Perm::all(self.n).iter().map(Perm::length).collect();
        let max_len = lengths.iter().copied().max().unwrap_or(0) as i64;
        for m in self.rep.monomials(0, cap + norm * max_len) {
            let a = m.exps.iter().map(|&x| x as i64).sum::<i64>();
            for &l in &lengths {
                let deg = norm * (a - l as i64);
                if deg <= cap {
                    let par = ((a + l as i64) * self.parity as i64 % 2) as u8;
                    *counts.entry((deg as i32, par)).or_default() += 1;
                }
            }
        }
        PiSeries::from_counts(cap as i32, counts)
    }

    /// Bidegree count of the products `eps_lambda` up to `q`-degree `cap`.
    pub fn lambda_dim_series(&self, cap: i64) -> PiSeries<T> {
        let norm = 2 * self.sym as usize;
        let mut counts: BTreeMap<(i32, u8), usize> = BTreeMap::new();
        for l in partitions(self.n, cap.max(0) as usize / norm) {
            let size: usize = l.iter().sum();
            *counts.entry(((norm * size) as i32, (size * self.parity as usize % 2) as u8)).or_default() += 1;
        }
        PiSeries::from_counts(cap as i32, counts)
    }

    pub fn dim_report(&self, cap: i64) -> Result<Value, RingError> {
        let closed = self.dim_closed_form();
        let expanded = series_expand(&closed, cap as i32)?;
        let counted = self.pbw_dim_series(cap);
        let lambda_closed = self.lambda_closed_form(false);
        let lambda_expanded = series_expand(&lambda_closed, cap as i32)?;
        let lambda_counted = self.lambda_dim_series(cap);
        Ok(json!({
            "n": self.n,
            "parity": self.parity,
            "D": cap,
            "closed_form": closed.to_json(),
            "series": counted.to_json(),
            "agreement": expanded == counted,
            "lambda": {
                "closed_form": lambda_closed.to_json(),
                "series": lambda_counted.to_json(),
                "agreement": lambda_expanded == lambda_counted,
            },
        }))
    }

    /// `d_{n-1} ... d_1 d_{dagger w0<n-1>}`, the reduced alternative word for `d_{w0}`.
    pub fn delta_w0_dagger(&self) -> HElement<T> {
        let n = self.n;
        let mut w: Vec<usize> = (0..n.saturating_sub(1)).rev().collect();
        w.extend(dagger(&w0_word(n.saturating_sub(1)), n.saturating_sub(1), n));
        self.d_word(&w)
    }

    /// `d_1 ... d_{n-1} d_{dagger w0<n-1>}`, read literally; not reduced for `n >= 3`.
    pub fn delta_w0_dagger_literal(&self) -> HElement<T> {
        let n = self.n;
        let mut w: Vec<usize> = (0..n.saturating_sub(1)).collect();
        w.extend(dagger(&w0_word(n.saturating_sub(1)), n.saturating_sub(1), n));
        self.d_word(&w)
    }

    /// The scalar `d_{w0}(y^delta)`; its inverse is the constant `c` in `e_n = c d_{w0} y^delta`.
    pub fn delta_w0_of_y_delta(&self) -> Option<T> {
        let v = self.rep.act(&self.delta_w0().mul(&self.y_delta()), &self.constant());
        let key = self.constant().terms.into_keys().next()?;
        (v.terms.len() == 1).then(|| v.terms.get(&key).cloned()).flatten()
    }

    fn annihilator_constants(&self) -> (T, T) {
        let (down, up) = annihilator_signs(self.n, self.parity);
        (T::from_int(down), T::from_int(up))
    }

    /// Every idempotent identity with its resolved constants, together with
    /// whether the literal constants also satisfy it.
    pub fn idempotent_suite(&self, cap: i64) -> Vec<IdentityCheck> {
        let n = self.n;
        let e = self.idempotent(DemazureSign::Signed);
        let dw0 = self.delta_w0();
        let mut out = Vec::new();
        let mut push = |name: &str, holds: bool, literal: bool| {
            out.push(IdentityCheck { name: format!("{name} (n={n})"), holds, literal })
        };
        let literal_e = self.idempotent(DemazureSign::Literal);
        push("e_n^2 = e_n", self.equal(&e.mul(&e), &e, cap), self.equal(&literal_e.mul(&literal_e), &literal_e, cap));
        push(
            "d_w0 = d_{n-1}..d_1 d_{dagger w0<n-1>}",
            self.equal(&dw0, &self.delta_w0_dagger(), cap),
            self.equal(&dw0, &self.delta_w0_dagger_literal(), cap),
        );
        let yd = dw0.mul(&self.y_delta());
        let resolved = self.delta_w0_of_y_delta().filter(|c| *c == T::one() || *c == -T::one());
        let literal_c = if self.parity == 1 { T::sign(binom(n as i64, 3)) } else { T::one() };
        push(
            "e_n = c d_w0 y^delta",
            resolved.is_some_and(|c| self.equal(&e, &yd.scale(&c), cap)),
            self.equal(&e, &yd.scale(&literal_c), cap),
        );
        let ok = self.equal(&e.mul(&dw0), &dw0, cap);
        push("e_n d_w0 = d_w0", ok, ok);
        if n >= 2 {
            let hook = self.d_word(&(0..n - 1).collect::<Vec<_>>());
            for (label, sub) in [("", self.sub_idempotent(false, DemazureSign::Signed)), ("dagger ", self.sub_idempotent(true, DemazureSign::Signed))] {
                let ok = self.equal(&sub.mul(&e), &e, cap);
                push(&format!("{label}e_{{n-1}} e_n = e_n"), ok, ok);
                let rhs = hook.mul(&sub);
                let ok = self.equal(&e.mul(&rhs), &rhs, cap);
                push(&format!("e_n d_1..d_{{n-1}} {label}e_{{n-1}} = d_1..d_{{n-1}} {label}e_{{n-1}}"), ok, ok);
            }
        }
        let (down_c, up_c) = self.annihilator_constants();
        let down_word: Vec<usize> = (0..n.saturating_sub(1)).rev().collect();
        let up_word: Vec<usize> = (0..n.saturating_sub(1)).collect();
        for a in 0..n as u32 {
            let top = a as usize + 1 == n;
            let expect = |c: T| if top { e.scale(&c) } else { HElement::zero() };
            let down = self.d_word(&down_word).mul(&self.y_pow(0, a)).mul(&e);
            push(
                &format!("d_{{n-1}}..d_1 y_1^{a} e_n"),
                self.equal(&down, &expect(down_c.clone()), cap),
                self.equal(&down, &expect(T::sign(n as i64 - 1)), cap),
            );
            let up = self.d_word(&up_word).mul(&self.y_pow(n - 1, a)).mul(&e);
            push(
                &format!("d_1..d_{{n-1}} y_n^{a} e_n"),
                self.equal(&up, &expect(up_c.clone()), cap),
                self.equal(&up, &expect(T::one()), cap),
            );
        }
        out
    }
}

/// One identity of the idempotent suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    /// Holds with the resolved signs.
    pub holds: bool,
    /// Holds with the literal signs.
    pub literal: bool,
}

#[cfg(test)]
mod tests;
