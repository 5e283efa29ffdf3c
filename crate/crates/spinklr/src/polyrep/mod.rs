//! The spin quiver Hecke algebra of a weight, realized on its skew
//! polynomial representation. Elements are formal words in the generators;
//! equality is decided by comparing actions on all monomials up to a degree
//! cap.

mod element;
mod pbw;
mod relations;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use smallvec::SmallVec;

use crate::perm::Perm;
use crate::rootdata::{enumerate_sequences, RootDatum, SkewBivarPoly, Weight};
use crate::scalar::Scalar;

pub use element::{Gen, GenWord, HElement};
pub use pbw::{PbwIndex, PbwSolver};
pub use relations::{BraidForm, Relation, RelationFailure, RelationReport};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PolyRepError {
    #[error("element is not in the span of the PBW window at the given cap; raise the window or the cap")]
    NotInSpan,
    #[error("PBW elements are dependent at the given cap: {0}")]
    Dependent(String),
    #[error("relation failures: {0}")]
    RelationFailure(String),
}

/// Exponent vector of `y_1^{a_1} ... y_n^{a_n}`.
pub type Exps = SmallVec<[u16; 8]>;

/// `y^a e(ui)` in normal form; `comp` indexes the component sequence `ui`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewMonomial {
    pub comp: usize,
    pub exps: Exps,
}

/// A vector of the polynomial representation.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct PolyVector<T> {
    pub terms: BTreeMap<SkewMonomial, T>,
}

impl<T: Scalar> PolyVector<T> {
    pub fn zero() -> Self {
        PolyVector { terms: BTreeMap::new() }
    }

    pub fn monomial(m: SkewMonomial) -> Self {
        let mut v = Self::zero();
        v.add_term(m, T::one());
        v
    }

    pub fn add_term(&mut self, m: SkewMonomial, c: T) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &T) {
        for (m, d) in &other.terms {
            self.add_term(m.clone(), d.clone() * c.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Sign parameters of the intertwiner action: `even` and `odd` multiply the
/// divided differences on equal neighbours, `cross` multiplies the action on
/// unequal neighbours.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conventions {
    pub even: i8,
    pub odd: i8,
    pub cross: i8,
}

impl Default for Conventions {
    fn default() -> Self {
        Conventions { even: 1, odd: 1, cross: 1 }
    }
}

impl Conventions {
    pub fn all() -> Vec<Conventions> {
        let mut out = Vec::new();
        for even in [1, -1] {
            for odd in [1, -1] {
                for cross in [1, -1] {
                    out.push(Conventions { even, odd, cross });
                }
            }
        }
        out
    }
}

/// The representation of the algebra attached to one weight.
pub struct PolyRep<T: Scalar> {
    pub datum: RootDatum,
    pub weight: Weight,
    pub comps: Vec<Vec<usize>>,
    pub conventions: Conventions,
    index: HashMap<Vec<usize>, usize>,
    p_polys: Vec<Vec<SkewBivarPoly<T>>>,
    q_polys: Vec<Vec<SkewBivarPoly<T>>>,
}

fn odd(k: u64) -> bool {
    k % 2 == 1
}

impl<T: Scalar> PolyRep<T> {
    pub fn new(datum: &RootDatum, weight: &Weight) -> Self {
        Self::with_conventions(datum, weight, Conventions::default())
    }

    pub fn with_conventions(datum: &RootDatum, weight: &Weight, conventions: Conventions) -> Self {
        let comps = enumerate_sequences(weight);
        let index = comps.iter().enumerate().map(|(k, c)| (c.clone(), k)).collect();
        PolyRep {
            datum: datum.clone(),
            weight: weight.clone(),
            comps,
            conventions,
            index,
            p_polys: datum.p_matrix(),
            q_polys: datum.q_matrix(),
        }
    }

    /// Number of strands.
    pub fn n(&self) -> usize {
        self.weight.height() as usize
    }

    pub fn comp_of(&self, seq: &[usize]) -> Option<usize> {
        self.index.get(seq).copied()
    }

    pub fn comp_name(&self, c: usize) -> String {
        self.comps[c].iter().map(|&i| self.datum.nodes[i].as_str()).collect::<Vec<_>>().join(",")
    }

    pub fn q_poly(&self, i: usize, j: usize) -> &SkewBivarPoly<T> {
        &self.q_polys[i][j]
    }

    fn par(&self, c: usize, r: usize) -> u64 {
        self.datum.parity[self.comps[c][r]] as u64
    }

    /// Component index of `w . ui`.
    pub fn act_perm_on_comp(&self, w: &Perm, c: usize) -> usize {
        self.index[&w.act(&self.comps[c])]
    }

    pub fn swap_comp(&self, c: usize, r: usize) -> usize {
        let mut s = self.comps[c].clone();
        s.swap(r, r + 1);
        self.index[&s]
    }

    /// `Z`-degree `sum_r a_r (alpha_{i_r}, alpha_{i_r})` of a monomial.
    pub fn degree(&self, m: &SkewMonomial) -> i64 {
        m.exps.iter().enumerate().map(|(r, &a)| a as i64 * self.datum.pairing[self.comps[m.comp][r]][self.comps[m.comp][r]]).sum()
    }

    pub fn parity(&self, m: &SkewMonomial) -> u8 {
        (m.exps.iter().enumerate().map(|(r, &a)| a as u64 * self.par(m.comp, r)).sum::<u64>() % 2) as u8
    }

    /// Degree and parity in which the component `e(ui)` is generated, so that
    /// every generator acts homogeneously: inversions of `ui` weighted by the
    /// pairing and by the product of parities.
    pub fn component_shift(&self, c: usize) -> (i64, u8) {
        let s = &self.comps[c];
        let (mut deg, mut par) = (0i64, 0u64);
        for a in 0..s.len() {
            for b in a + 1..s.len() {
                if s[a] > s[b] {
                    deg += self.datum.pairing[s[a]][s[b]];
                    par += self.datum.parity[s[a]] as u64 * self.datum.parity[s[b]] as u64;
                }
            }
        }
        (deg, (par % 2) as u8)
    }

    /// All monomials of component `c` with degree at most `cap`.
    pub fn monomials(&self, c: usize, cap: i64) -> Vec<SkewMonomial> {
        let n = self.n();
        let degs: Vec<i64> = (0..n).map(|r| self.datum.pairing[self.comps[c][r]][self.comps[c][r]]).collect();
        let mut out = Vec::new();
        let mut cur: Exps = SmallVec::from_elem(0, n);
        fn rec(r: usize, left: i64, degs: &[i64], cur: &mut Exps, c: usize, out: &mut Vec<SkewMonomial>) {
            if r == degs.len() {
                out.push(SkewMonomial { comp: c, exps: cur.clone() });
                return;
            }
            let mut a = 0;
            while a as i64 * degs[r] <= left {
                cur[r] = a;
                rec(r + 1, left - a as i64 * degs[r], degs, cur, c, out);
                a += 1;
            }
            cur[r] = 0;
        }
        rec(0, cap, &degs, &mut cur, c, &mut out);
        out
    }

    pub fn all_monomials(&self, cap: i64) -> Vec<SkewMonomial> {
        (0..self.comps.len()).flat_map(|c| self.monomials(c, cap)).collect()
    }

    /// Normal form of the product of the letters `y_{l_1} y_{l_2} ...` in
    /// component `c`; returns whether the sign is negative.
    fn normalize_letters(&self, c: usize, letters: &[usize]) -> (bool, Exps) {
        let n = self.n();
        let mut exps: Exps = SmallVec::from_elem(0, n);
        let mut flips = 0u64;
        for &x in letters {
            if self.par(c, x) == 1 {
                flips += (x + 1..n).filter(|&y| self.par(c, y) == 1).map(|y| exps[y] as u64).sum::<u64>();
            }
            exps[x] += 1;
        }
        (odd(flips), exps)
    }

    /// `y^a y^b` in component `c`; the flag is set when the normal form carries a minus sign.
    pub fn mul_exps(&self, c: usize, a: &[u16], b: &[u16]) -> (bool, Exps) {
        let n = self.n();
        let mut flips = 0u64;
        for r in 0..n {
            if b[r] == 0 || self.par(c, r) == 0 {
                continue;
            }
            let later: u64 = (r + 1..n).filter(|&s| self.par(c, s) == 1).map(|s| a[s] as u64).sum();
            flips += later * b[r] as u64;
        }
        (odd(flips), a.iter().zip(b).map(|(x, y)| x + y).collect())
    }

    fn letters(exps: &[u16]) -> Vec<usize> {
        exps.iter().enumerate().flat_map(|(r, &a)| std::iter::repeat(r).take(a as usize)).collect()
    }

    fn signed(neg: bool, c: T) -> T {
        if neg {
            -c
        } else {
            c
        }
    }

    /// The symmetric group action `s_r` on a monomial.
    pub fn s_action(&self, r: usize, m: &SkewMonomial) -> (T, SkewMonomial) {
        let c = m.comp;
        let pp = self.par(c, r) * self.par(c, r + 1);
        let mut flips = m.exps[r] as u64 * m.exps[r + 1] as u64 * pp;
        if pp == 1 {
            flips += (0..self.n()).map(|k| m.exps[k] as u64 * self.par(c, k)).sum::<u64>();
        }
        let mut exps = m.exps.clone();
        exps.swap(r, r + 1);
        (T::sign(flips as i64), SkewMonomial { comp: self.swap_comp(c, r), exps })
    }

    pub fn act_y(&self, s: usize, v: &PolyVector<T>) -> PolyVector<T> {
        let mut out = PolyVector::zero();
        for (m, c) in &v.terms {
            let flips: u64 = if self.par(m.comp, s) == 1 {
                (0..s).map(|r| self.par(m.comp, r) * m.exps[r] as u64).sum()
            } else {
                0
            };
            let mut exps = m.exps.clone();
            exps[s] += 1;
            out.add_term(SkewMonomial { comp: m.comp, exps }, Self::signed(odd(flips), c.clone()));
        }
        out
    }

    pub fn act_idem(&self, comp: usize, v: &PolyVector<T>) -> PolyVector<T> {
        PolyVector { terms: v.terms.iter().filter(|(m, _)| m.comp == comp).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    /// `(f - s_r f) / (y_{r+1} - y_r)` on a monomial whose strands `r`, `r+1`
    /// carry the same even node.
    fn even_divided_difference(&self, r: usize, m: &SkewMonomial, out: &mut PolyVector<T>, scale: &T) {
        let (a, b) = (m.exps[r], m.exps[r + 1]);
        if a == b {
            return;
        }
        let (lo, d, sign) = if a > b { (b, a - b, -T::one()) } else { (a, b - a, T::one()) };
        for k in 0..d {
            let mut exps = m.exps.clone();
            exps[r] = lo + k;
            exps[r + 1] = lo + d - 1 - k;
            out.add_term(SkewMonomial { comp: m.comp, exps }, sign.clone() * scale.clone());
        }
    }

    /// Odd divided difference by the Leibniz rule with `s_r(y_k) = -y_{s_r(k)}`
    /// on odd strands.
    fn odd_divided_difference(&self, r: usize, m: &SkewMonomial, out: &mut PolyVector<T>, scale: &T) {
        let c = m.comp;
        let letters = Self::letters(&m.exps);
        let swap = |x: usize| if x == r { r + 1 } else if x == r + 1 { r } else { x };
        let mut prefix_flips = 0u64;
        for k in 0..letters.len() {
            let x = letters[k];
            if x == r || x == r + 1 {
                let mut word: Vec<usize> = letters[..k].iter().map(|&l| swap(l)).collect();
                word.extend_from_slice(&letters[k + 1..]);
                let (neg, exps) = self.normalize_letters(c, &word);
                let sign = T::sign((prefix_flips + neg as u64) as i64);
                out.add_term(SkewMonomial { comp: c, exps }, sign * scale.clone());
            }
            prefix_flips += self.par(c, x);
        }
    }

    pub fn act_tau(&self, r: usize, v: &PolyVector<T>) -> PolyVector<T> {
        let mut out = PolyVector::zero();
        for (m, coeff) in &v.terms {
            let (i, j) = (self.comps[m.comp][r], self.comps[m.comp][r + 1]);
            if i == j {
                if self.datum.parity[i] == 0 {
                    let s = coeff.clone() * T::from_int(self.conventions.even as i64);
                    self.even_divided_difference(r, m, &mut out, &s);
                } else {
                    let s = coeff.clone() * T::from_int(self.conventions.odd as i64);
                    self.odd_divided_difference(r, m, &mut out, &s);
                }
                continue;
            }
            let (sign, sm) = self.s_action(r, m);
            let base = sign * coeff.clone() * T::from_int(self.conventions.cross as i64);
            let c2 = sm.comp;
            let pp = self.par(c2, r) * self.par(c2, r + 1);
            for (a, b, pc) in self.p_polys[i][j].terms() {
                // y_{r+1}^a y_r^b in the swapped component
                let mut e: Exps = SmallVec::from_elem(0, self.n());
                e[r] = b as u16;
                e[r + 1] = a as u16;
                let neg1 = odd(a as u64 * b as u64 * pp);
                let (neg2, exps) = self.mul_exps(c2, &e, &sm.exps);
                out.add_term(SkewMonomial { comp: c2, exps }, Self::signed(neg1 ^ neg2, base.clone() * pc.clone()));
            }
        }
        out
    }

    pub fn act_gen(&self, g: Gen, v: &PolyVector<T>) -> PolyVector<T> {
        match g {
            Gen::Idem(c) => self.act_idem(c, v),
            Gen::Y(s) => self.act_y(s, v),
            Gen::Tau(r) => self.act_tau(r, v),
        }
    }

    pub fn act_word(&self, w: &GenWord<T>, v: &PolyVector<T>) -> PolyVector<T> {
        let mut cur = self.act_idem(w.comp, v);
        for &g in w.letters.iter().rev() {
            if cur.is_zero() {
                break;
            }
            cur = self.act_gen(g, &cur);
        }
        let mut out = PolyVector::zero();
        out.add_scaled(&cur, &w.coeff);
        out
    }

    pub fn act(&self, x: &HElement<T>, v: &PolyVector<T>) -> PolyVector<T> {
        let mut out = PolyVector::zero();
        for w in &x.terms {
            let y = self.act_word(w, v);
            out.add_scaled(&y, &T::one());
        }
        out
    }

    /// Whether `x` and `y` act identically on every monomial of degree at
    /// most `cap`; returns the first monomial on which they differ.
    pub fn first_difference(&self, x: &HElement<T>, y: &HElement<T>, cap: i64) -> Option<SkewMonomial> {
        self.all_monomials(cap).into_iter().find(|m| {
            let v = PolyVector::monomial(m.clone());
            self.act(x, &v) != self.act(y, &v)
        })
    }

    pub fn acts_equal(&self, x: &HElement<T>, y: &HElement<T>, cap: i64) -> bool {
        self.first_difference(x, y, cap).is_none()
    }

    /// `Z`-degree and parity of a word, or `None` if its idempotents clash.
    pub fn word_grading(&self, w: &GenWord<T>) -> Option<(i64, u8)> {
        let mut comp = w.comp;
        let (mut deg, mut par) = (0i64, 0u64);
        for &g in w.letters.iter().rev() {
            let s = &self.comps[comp];
            match g {
                Gen::Idem(c) => {
                    if c != comp {
                        return None;
                    }
                }
                Gen::Y(r) => {
                    deg += self.datum.pairing[s[r]][s[r]];
                    par += self.datum.parity[s[r]] as u64;
                }
                Gen::Tau(r) => {
                    deg -= self.datum.pairing[s[r]][s[r + 1]];
                    par += self.datum.parity[s[r]] as u64 * self.datum.parity[s[r + 1]] as u64;
                    comp = self.swap_comp(comp, r);
                }
            }
        }
        Some((deg, (par % 2) as u8))
    }

    /// Component reached by a word from its rightmost idempotent.
    pub fn word_target(&self, w: &GenWord<T>) -> Option<usize> {
        let mut comp = w.comp;
        for &g in w.letters.iter().rev() {
            match g {
                Gen::Idem(c) if c != comp => return None,
                Gen::Tau(r) => comp = self.swap_comp(comp, r),
                _ => {}
            }
        }
        Some(comp)
    }

    /// `sum_ui x e(ui)` for a letter sequence `x`.
    pub fn generator_sum(&self, letters: &[Gen]) -> HElement<T> {
        HElement { terms: (0..self.comps.len()).map(|c| GenWord::new(T::one(), letters.to_vec(), c)).collect() }
    }

    /// `f(y_{r1}, y_{r2}) e(ui)` for a two-variable skew polynomial `f(u, v)`.
    pub fn poly_element(&self, f: &SkewBivarPoly<T>, r1: usize, r2: usize, comp: usize) -> HElement<T> {
        let mut x = HElement::zero();
        for (a, b, c) in f.terms() {
            let mut letters = vec![Gen::Y(r1); a as usize];
            letters.extend(std::iter::repeat(Gen::Y(r2)).take(b as usize));
            x.terms.push(GenWord::new(c.clone(), letters, comp));
        }
        x
    }

    /// `y^a e(ui)` as a word.
    pub fn y_word(&self, exps: &[u16], comp: usize) -> GenWord<T> {
        GenWord::new(T::one(), Self::letters(exps).into_iter().map(Gen::Y).collect(), comp)
    }

    /// `tau_w` with the canonical reduced word of `w`.
    pub fn tau_w(w: &Perm) -> Vec<Gen> {
        w.reduced_word().into_iter().map(Gen::Tau).collect()
    }

    /// The automorphism `phi` with sign `(-1)^{1 + p(i_r) p(i_{r+1})}` on
    /// `tau_r e(ui)`.
    pub fn phi(&self, x: &HElement<T>) -> HElement<T> {
        self.phi_with(x, |pp| 1 + pp)
    }

    /// `phi` with the sign exponent given as a function of `p(i_r) p(i_{r+1})`.
    pub fn phi_with(&self, x: &HElement<T>, sign: impl Fn(u64) -> u64) -> HElement<T> {
        let n = self.n();
        let w0 = Perm::longest(n);
        let mut out = HElement::zero();
        for w in &x.terms {
            let mut comp = w.comp;
            let mut flips = 0u64;
            let mut letters = Vec::with_capacity(w.letters.len());
            let mut clash = false;
            for &g in w.letters.iter().rev() {
                letters.push(match g {
                    Gen::Idem(c) => {
                        clash |= c != comp;
                        Gen::Idem(self.act_perm_on_comp(&w0, c))
                    }
                    Gen::Y(r) => Gen::Y(n - 1 - r),
                    Gen::Tau(r) => {
                        flips += sign(self.par(comp, r) * self.par(comp, r + 1));
                        comp = self.swap_comp(comp, r);
                        Gen::Tau(n - 2 - r)
                    }
                });
            }
            if clash {
                continue;
            }
            letters.reverse();
            let c = w.coeff.clone() * T::sign(flips as i64);
            out.terms.push(GenWord::new(c, letters, self.act_perm_on_comp(&w0, w.comp)));
        }
        out
    }

    /// The anti-automorphism `psi` fixing every generator.
    pub fn psi(&self, x: &HElement<T>) -> HElement<T> {
        let mut out = HElement::zero();
        for w in &x.terms {
            let Some(target) = self.word_target(w) else { continue };
            let mut letters = vec![Gen::Idem(w.comp)];
            letters.extend(w.letters.iter().rev().copied());
            out.terms.push(GenWord::new(w.coeff.clone(), letters, target));
        }
        out
    }
}

impl fmt::Display for SkewMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(r, &a)| if a == 1 { format!("y{}", r + 1) } else { format!("y{}^{}", r + 1, a) })
            .collect();
        if parts.is_empty() {
            write!(f, "e[{}]", self.comp)
        } else {
            write!(f, "{} e[{}]", parts.join(" "), self.comp)
        }
    }
}

#[cfg(test)]
mod tests;
