use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{GrothendieckError, ParityShift, ProjClass};
use crate::linalg::{Echelon, SparseVec};
use crate::nilhecke::w0_word;
use crate::perm::Perm;
use crate::polyrep::{Exps, Gen, GenWord, HElement, PolyRep, PolyRepError, PolyVector, SkewMonomial};
use crate::ring::{series_expand, PiSeries};
use crate::scalar::Scalar;

/// Graded dimensions `dim e(uj) M`, keyed by the sequence `uj`.
pub type CharSeries<T> = BTreeMap<Vec<usize>, PiSeries<T>>;

/// The idempotent of a divided-power class on its component: the product
/// over blocks of the Demazure projector `prod (+-tau_r y_r)` along a reduced
/// word of the longest element, with `-` on even strands.
pub fn block_idempotent<T: Scalar>(rep: &PolyRep<T>, class: &ProjClass) -> GenWord<T> {
    let comp = rep.comp_of(&class.seq).expect("class sequence lies in the weight");
    let mut letters = Vec::new();
    let mut flips = 0i64;
    for (start, k) in class.block_starts() {
        let even = rep.datum.parity[class.seq[start]] == 0;
        for r in w0_word(k) {
            letters.push(Gen::Tau(start + r));
            letters.push(Gen::Y(start + r));
            flips += even as i64;
        }
    }
    GenWord::new(T::sign(flips), letters, comp)
}

fn action_vector<T: Scalar>(rep: &PolyRep<T>, x: &HElement<T>, tests: &[SkewMonomial]) -> SparseVec<(usize, SkewMonomial), T> {
    let mut out = BTreeMap::new();
    for (t, m) in tests.iter().enumerate() {
        for (k, c) in rep.act(x, &PolyVector::monomial(m.clone())).terms {
            out.insert((t, k), c);
        }
    }
    out
}

/// `y^b tau_w e(ui)` as a word.
fn y_left<T: Scalar>(rep: &PolyRep<T>, exps: &[u16], w: &Perm, comp: usize, target: usize) -> HElement<T> {
    let mut letters = rep.y_word(exps, target).letters;
    letters.extend(PolyRep::<T>::tau_w(w));
    HElement::word(T::one(), letters, comp)
}

fn mono_degree<T: Scalar>(rep: &PolyRep<T>, c: usize, exps: &Exps) -> (i64, u8) {
    let m = SkewMonomial { comp: c, exps: exps.clone() };
    (rep.degree(&m), rep.parity(&m))
}

/// Coordinates of `tau_w e` in the left `k[y]`-basis `{y^b tau_w' e(ui)}`
/// for each `w` with `w . ui = uj`.
struct Coordinates<T> {
    grading: Vec<(i64, u8)>,
    rows: Vec<SparseVec<(usize, Exps), T>>,
}

fn coordinates<T: Scalar>(
    rep: &PolyRep<T>,
    e: &GenWord<T>,
    perms: &[(Perm, (i64, u8))],
) -> Result<Coordinates<T>, GrothendieckError> {
    let ci = e.comp;
    let Some(cj) = perms.first().map(|p| rep.act_perm_on_comp(&p.0, ci)) else {
        return Ok(Coordinates { grading: vec![], rows: vec![] });
    };
    let min_tau = perms.iter().map(|p| p.1 .0).min().unwrap_or(0);
    let max_tau = perms.iter().map(|p| p.1 .0).max().unwrap_or(0);
    let window = max_tau - min_tau;
    let candidates = rep.monomials(cj, window);
    let bases: Vec<Vec<(usize, Exps)>> = perms
        .iter()
        .map(|(_, (dw, pw))| {
            let mut basis = Vec::new();
            for (k, (_, (d2, p2))) in perms.iter().enumerate() {
                for m in &candidates {
                    let (db, pb) = mono_degree(rep, cj, &m.exps);
                    if db + d2 == *dw && (pb + p2) % 2 == *pw {
                        basis.push((k, m.exps.clone()));
                    }
                }
            }
            basis
        })
        .collect();
    // The left basis separates on monomials of bounded degree; the smallest
    // such bound is found by raising it one strand norm at a time.
    let limit = rep.default_cap(window);
    let step = rep.comps[ci].iter().map(|&i| rep.datum.pairing[i][i]).max().unwrap_or(2);
    let mut cap = window;
    loop {
        let tests = rep.monomials(ci, cap);
        let mut rows = Vec::with_capacity(perms.len());
        let mut dependent = false;
        for ((w, _), basis) in perms.iter().zip(&bases) {
            let vectors: Vec<_> =
                basis.par_iter().map(|(k, b)| action_vector(rep, &y_left(rep, b, &perms[*k].0, ci, cj), &tests)).collect();
            let mut ech = Echelon::new();
            if !vectors.iter().all(|v| ech.insert(v)) {
                dependent = true;
                break;
            }
            let mut x = HElement::word(e.coeff.clone(), PolyRep::<T>::tau_w(w), ci);
            x.terms[0].letters.extend(e.letters.iter().copied());
            let coords = ech
                .solve(&action_vector(rep, &x, &tests))
                .ok_or_else(|| GrothendieckError::TruncationTooSmall(format!("tau_w e is not in the left span at cap {cap}")))?;
            rows.push(coords.into_iter().map(|(k, c)| (basis[k].clone(), c)).collect());
        }
        if !dependent {
            return Ok(Coordinates { grading: perms.iter().map(|p| p.1).collect(), rows });
        }
        if cap >= limit {
            return Err(PolyRepError::Dependent(format!("left basis on component {} with cap {cap}", rep.comp_name(cj))).into());
        }
        cap = (cap + step).min(limit);
    }
}

/// The graded character of `H e` for the idempotent `e` of a class, without
/// any shift, up to `q^order`.
pub fn raw_char<T: Scalar>(rep: &PolyRep<T>, class: &ProjClass, order: i64) -> Result<CharSeries<T>, GrothendieckError> {
    class.validate()?;
    let e = block_idempotent(rep, class);
    let ci = e.comp;
    let mut by_target: BTreeMap<usize, Vec<(Perm, (i64, u8))>> = BTreeMap::new();
    for w in Perm::all(rep.n()) {
        let cj = rep.act_perm_on_comp(&w, ci);
        let g = rep.word_grading(&GenWord::new(T::one(), PolyRep::<T>::tau_w(&w), ci)).expect("pure crossing word");
        by_target.entry(cj).or_default().push((w, g));
    }
    let mut out = CharSeries::new();
    for (cj, perms) in by_target {
        let coords = coordinates(rep, &e, &perms)?;
        let lowest = coords.grading.iter().map(|g| g.0).min().unwrap_or(0);
        let monos = rep.monomials(cj, (order - lowest).max(0));
        let mut slices: BTreeMap<(i64, u8), Echelon<(usize, Exps), T>> = BTreeMap::new();
        for (row, (dw, pw)) in coords.rows.iter().zip(&coords.grading) {
            for a in &monos {
                let (da, pa) = mono_degree(rep, cj, &a.exps);
                if da + dw > order {
                    continue;
                }
                let mut v: SparseVec<(usize, Exps), T> = BTreeMap::new();
                for ((k, b), c) in row {
                    let (neg, ab) = rep.mul_exps(cj, &a.exps, b);
                    let c = if neg { -c.clone() } else { c.clone() };
                    let entry = v.entry((*k, ab)).or_insert_with(T::zero);
                    *entry = entry.clone() + c;
                }
                v.retain(|_, c| !c.is_zero());
                slices.entry((da + dw, (pa + pw) % 2)).or_default().insert(&v);
            }
        }
        let counts = slices.iter().map(|(&(d, p), ech)| ((d as i32, p), ech.rank()));
        out.insert(rep.comps[cj].clone(), PiSeries::from_counts(order as i32, counts));
    }
    Ok(out)
}

/// `ch P` for a class, shifted by its intrinsic shift and its extra shift,
/// up to `q^order`.
pub fn idempotent_char<T: Scalar>(
    rep: &PolyRep<T>,
    class: &ProjClass,
    order: i64,
    reading: ParityShift,
) -> Result<CharSeries<T>, GrothendieckError> {
    let (dq, dp) = class.intrinsic_shift(&rep.datum, reading);
    let (q, p) = (dq + class.q_shift, (dp + class.pi_shift) % 2);
    let raw = raw_char(rep, class, order - q)?;
    Ok(raw.into_iter().map(|(k, s)| (k, s.shift(q as i32, p))).collect())
}

/// Checks `ch(H e(ui)) = prod_a [k_a]!_{i_a} ch(P_{ui^(uk)})` up to
/// `q^order`; returns the sequences on which the two sides differ.
pub fn character_check<T: Scalar>(
    rep: &PolyRep<T>,
    class: &ProjClass,
    order: i64,
    reading: ParityShift,
) -> Result<Vec<Vec<usize>>, GrothendieckError> {
    let datum = &rep.datum;
    let whole = raw_char(rep, &ProjClass::word(&class.seq), order)?;
    let fact = super::factorials::<T>(datum, &ProjClass { q_shift: 0, pi_shift: 0, ..class.clone() });
    let low = class.blocks().iter().map(|&(i, k)| -(datum.sym[i] as i64) * (k as i64) * (k as i64 - 1) / 2).sum::<i64>();
    let divided = idempotent_char(rep, &ProjClass { q_shift: 0, pi_shift: 0, ..class.clone() }, order - low, reading)?;
    let lowest = divided.values().map(|s| s.lower as i64).min().unwrap_or(order);
    let fact = series_expand(&fact, (order - lowest) as i32).map_err(|e| GrothendieckError::Input(e.to_string()))?;
    let mut bad = Vec::new();
    for (seq, s) in &whole {
        let rhs = divided.get(seq).map(|d| d.mul(&fact)).unwrap_or_else(|| PiSeries::zero(order as i32));
        if s.truncate(order as i32) != rhs.truncate(order as i32) {
            bad.push(seq.clone());
        }
    }
    Ok(bad)
}
