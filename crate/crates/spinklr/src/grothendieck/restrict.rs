use serde_json::{json, Value};

use super::{proj_pairing, GrothendieckError, ProjClass};
use crate::ring::PiScalar;
use crate::rootdata::{RootDatum, Weight};
use crate::scalar::Scalar;

/// Sign of the degree shift carried by a summand of the restriction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RestrictionShift {
    /// `q^{deg(tau_w e(ui uj))}`.
    Degree,
    /// `q^{-deg(tau_w e(ui uj))}`.
    NegatedDegree,
}

/// One summand `Pi^pi q^q P_ui (x) P_uj` of a restriction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub q_shift: i64,
    pub pi_shift: u8,
}

impl Summand {
    pub fn to_json(&self, datum: &RootDatum) -> Value {
        let names = |s: &[usize]| s.iter().map(|&i| datum.nodes[i].clone()).collect::<Vec<_>>();
        json!({"left": names(&self.left), "right": names(&self.right), "q_shift": self.q_shift, "pi_shift": self.pi_shift})
    }
}

/// The `m`-element subsets of `0..n` in lexicographic order; each one lists
/// the strands sent to the left factor, and together they index the minimal
/// coset representatives of `S_m x S_{n-m}` in `S_n`.
pub fn shuffles(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for a in start..n {
            if n - a < m - cur.len() {
                break;
            }
            cur.push(a);
            rec(a + 1, n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m <= n {
        rec(0, n, m, &mut Vec::new(), &mut out);
    }
    out
}

/// `Res^{mu+nu}_{mu,nu} P_uk` as a list of summands. The shift of a summand
/// is the grading of `tau_w e(ui uj)` for the shuffle `w` with
/// `w . (ui uj) = uk`, accumulated over the crossings of its reduced word.
pub fn restrict_decomposition(
    datum: &RootDatum,
    uk: &[usize],
    mu: &Weight,
    reading: RestrictionShift,
) -> Result<Vec<Summand>, GrothendieckError> {
    let total = Weight::of_sequence(datum.rank(), uk);
    if total.checked_sub(mu).is_none() {
        return Err(GrothendieckError::WeightMismatch(mu.display(datum), total.display(datum)));
    }
    let m = mu.height() as usize;
    let mut out = Vec::new();
    for left_pos in shuffles(uk.len(), m) {
        let left: Vec<usize> = left_pos.iter().map(|&a| uk[a]).collect();
        if Weight::of_sequence(datum.rank(), &left) != *mu {
            continue;
        }
        let right_pos: Vec<usize> = (0..uk.len()).filter(|a| !left_pos.contains(a)).collect();
        let right: Vec<usize> = right_pos.iter().map(|&a| uk[a]).collect();
        let (mut deg, mut par) = (0i64, 0u64);
        for &s in &left_pos {
            for &t in right_pos.iter().filter(|&&t| t < s) {
                deg -= datum.pairing[uk[s]][uk[t]];
                par += datum.parity[uk[s]] as u64 * datum.parity[uk[t]] as u64;
            }
        }
        if reading == RestrictionShift::NegatedDegree {
            deg = -deg;
        }
        out.push(Summand { left, right, q_shift: deg, pi_shift: (par % 2) as u8 });
    }
    Ok(out)
}

/// `([P_uk], [Y][Y']) - ([Res P_uk], [Y] (x) [Y'])` for word classes.
pub fn restriction_form_check<T: Scalar>(
    datum: &RootDatum,
    uk: &[usize],
    y: &[usize],
    y2: &[usize],
    reading: RestrictionShift,
) -> Result<(PiScalar<T>, PiScalar<T>), GrothendieckError> {
    let x = ProjClass::word(uk);
    let (py, py2) = (ProjClass::word(y), ProjClass::word(y2));
    let lhs = proj_pairing::<T>(datum, &x, &py.induce(&py2))?;
    let mu = py.weight(datum.rank());
    let mut rhs = PiScalar::<T>::from_int(0);
    for s in restrict_decomposition(datum, uk, &mu, reading)? {
        let (l, r) = (ProjClass::word(&s.left), ProjClass::word(&s.right));
        if l.weight(datum.rank()) != mu || r.weight(datum.rank()) != py2.weight(datum.rank()) {
            continue;
        }
        let term = &proj_pairing::<T>(datum, &l, &py)? * &proj_pairing::<T>(datum, &r, &py2)?;
        rhs = &rhs + &(&term * &PiScalar::monomial(s.pi_shift as i64, s.q_shift as i32));
    }
    Ok((lhs, rhs))
}
