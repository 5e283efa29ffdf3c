use rayon::prelude::*;
use serde_json::{json, Value};

use super::{Gen, GenWord, HElement, PolyRep, PolyVector, SkewMonomial};
use crate::scalar::Scalar;

/// Orientation of the braid relation's left side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidForm {
    /// `tau_r tau_{r+1} tau_r - tau_{r+1} tau_r tau_{r+1}`, the literal reading.
    Literal,
    /// `tau_{r+1} tau_r tau_{r+1} - tau_r tau_{r+1} tau_r`, the orientation
    /// satisfied by the polynomial representation.
    Reversed,
}

/// A defining relation `lhs = rhs`, restricted to one idempotent.
#[derive(Clone, Debug)]
pub struct Relation<T> {
    pub name: String,
    pub comp: usize,
    pub lhs: HElement<T>,
    pub rhs: HElement<T>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationFailure {
    pub relation: String,
    pub monomial: String,
}

#[derive(Clone, Debug)]
pub struct RelationReport {
    pub datum: String,
    pub weight: Value,
    pub cap: i64,
    pub checked: usize,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "datum": self.datum,
            "weight": self.weight,
            "D": self.cap,
            "checked": self.checked,
            "failures": self.failures.iter().map(|f| json!({"relation": f.relation, "monomial": f.monomial})).collect::<Vec<_>>(),
        })
    }
}

impl<T: Scalar> PolyRep<T> {
    fn w(&self, c: T, letters: Vec<Gen>, comp: usize) -> HElement<T> {
        HElement::word(c, letters, comp)
    }

    fn sgn(k: u64) -> T {
        T::sign(k as i64)
    }

    /// Right side of the braid relation on `e(ui)` at strands `r, r+1, r+2`.
    pub fn braid_rhs(&self, r: usize, comp: usize) -> HElement<T> {
        let s = &self.comps[comp];
        let (i, j) = (s[r], s[r + 1]);
        let mut out = HElement::zero();
        if s[r + 2] != i || i == j {
            return out;
        }
        let q = self.q_poly(i, j);
        let odd_i = self.datum.parity[i] == 1;
        for (a, b, c) in q.terms() {
            let tail = vec![Gen::Y(r + 1); b as usize];
            if !odd_i {
                for k in 0..a {
                    let mut letters = vec![Gen::Y(r + 2); k as usize];
                    letters.extend(std::iter::repeat(Gen::Y(r)).take((a - 1 - k) as usize));
                    letters.extend_from_slice(&tail);
                    out.terms.push(GenWord::new(c.clone(), letters, comp));
                }
            } else {
                assert!(a % 2 == 0, "odd node with odd power in Q");
                let sign = Self::sgn(self.datum.parity[j] as u64);
                for k in 0..a / 2 {
                    let mut body = vec![Gen::Y(r + 2); 2 * k as usize];
                    body.extend(std::iter::repeat(Gen::Y(r)).take(2 * (a / 2 - 1 - k) as usize));
                    body.extend_from_slice(&tail);
                    for (front, sc) in [(Gen::Y(r + 2), T::one()), (Gen::Y(r), -T::one())] {
                        let mut letters = vec![front];
                        letters.extend_from_slice(&body);
                        out.terms.push(GenWord::new(c.clone() * sign.clone() * sc, letters, comp));
                    }
                }
            }
        }
        out
    }

    /// Every defining relation, instantiated on every idempotent.
    pub fn relations(&self) -> Vec<Relation<T>> {
        self.relations_with(BraidForm::Reversed)
    }

    pub fn relations_with(&self, braid: BraidForm) -> Vec<Relation<T>> {
        let n = self.n();
        let mut out = Vec::new();
        let mut push = |name: String, comp: usize, lhs: HElement<T>, rhs: HElement<T>| {
            out.push(Relation { name, comp, lhs, rhs })
        };
        let one = T::one;
        for c in 0..self.comps.len() {
            for d in 0..self.comps.len() {
                let rhs = if c == d { self.w(one(), vec![], c) } else { HElement::zero() };
                push(format!("e(uj)e(ui) = delta e(ui) [{d},{c}]"), c, self.w(one(), vec![Gen::Idem(d)], c), rhs);
            }
            let total = HElement { terms: (0..self.comps.len()).map(|d| GenWord::new(one(), vec![Gen::Idem(d)], c)).collect() };
            push("sum e(ui) = 1".into(), c, total, self.w(one(), vec![], c));
            for r in 0..n {
                push(format!("y{} e = e y{}", r + 1, r + 1), c, self.w(one(), vec![Gen::Y(r), Gen::Idem(c)], c), self.w(one(), vec![Gen::Idem(c), Gen::Y(r)], c));
                for s in 0..n {
                    if s != r {
                        let sign = Self::sgn(self.par(c, r) * self.par(c, s));
                        push(format!("y{} y{} skew", r + 1, s + 1), c, self.w(one(), vec![Gen::Y(r), Gen::Y(s)], c), self.w(sign, vec![Gen::Y(s), Gen::Y(r)], c));
                    }
                }
            }
            for r in 0..n.saturating_sub(1) {
                let sc = self.swap_comp(c, r);
                let pr = self.par(c, r) * self.par(c, r + 1);
                push(format!("t{} e = e t{}", r + 1, r + 1), c, self.w(one(), vec![Gen::Tau(r)], c), self.w(one(), vec![Gen::Idem(sc), Gen::Tau(r)], c));
                for s in 0..n {
                    if s != r && s != r + 1 {
                        let sign = Self::sgn(pr * self.par(c, s));
                        push(format!("t{} y{} distant", r + 1, s + 1), c, self.w(one(), vec![Gen::Tau(r), Gen::Y(s)], c), self.w(sign, vec![Gen::Y(s), Gen::Tau(r)], c));
                    }
                }
                for s in 0..n - 1 {
                    if s.abs_diff(r) > 1 {
                        let sign = Self::sgn(pr * self.par(c, s) * self.par(c, s + 1));
                        push(format!("t{} t{} distant", r + 1, s + 1), c, self.w(one(), vec![Gen::Tau(r), Gen::Tau(s)], c), self.w(sign, vec![Gen::Tau(s), Gen::Tau(r)], c));
                    }
                }
                let equal = self.comps[c][r] == self.comps[c][r + 1];
                let sign = Self::sgn(pr);
                let mut rhs8 = self.w(sign.clone(), vec![Gen::Y(r), Gen::Tau(r)], c);
                let mut rhs9 = self.w(sign, vec![Gen::Tau(r), Gen::Y(r)], c);
                if equal {
                    rhs8 = rhs8.add(&self.w(one(), vec![], c));
                    rhs9 = rhs9.add(&self.w(one(), vec![], c));
                }
                push(format!("t{} y{}", r + 1, r + 2), c, self.w(one(), vec![Gen::Tau(r), Gen::Y(r + 1)], c), rhs8);
                push(format!("y{} t{}", r + 2, r + 1), c, self.w(one(), vec![Gen::Y(r + 1), Gen::Tau(r)], c), rhs9);
                let (i, j) = (self.comps[c][r], self.comps[c][r + 1]);
                let q = self.poly_element(self.q_poly(i, j), r, r + 1, c);
                push(format!("t{}^2 = Q", r + 1), c, self.w(one(), vec![Gen::Tau(r), Gen::Tau(r)], c), q);
            }
            for r in 0..n.saturating_sub(2) {
                let (a, b) = (vec![Gen::Tau(r), Gen::Tau(r + 1), Gen::Tau(r)], vec![Gen::Tau(r + 1), Gen::Tau(r), Gen::Tau(r + 1)]);
                let (a, b) = if braid == BraidForm::Literal { (a, b) } else { (b, a) };
                let lhs = self.w(one(), a, c).sub(&self.w(one(), b, c));
                push(format!("braid at {}", r + 1), c, lhs, self.braid_rhs(r, c));
            }
        }
        out
    }

    fn check_pairs(&self, pairs: &[(String, usize, HElement<T>, HElement<T>)], cap: i64) -> (usize, Vec<RelationFailure>) {
        let jobs: Vec<(usize, SkewMonomial)> = pairs
            .iter()
            .enumerate()
            .flat_map(|(k, (_, comp, _, _))| self.monomials(*comp, cap).into_iter().map(move |m| (k, m)))
            .collect();
        let failures: Vec<RelationFailure> = jobs
            .par_iter()
            .filter_map(|(k, m)| {
                let (name, _, lhs, rhs) = &pairs[*k];
                let v = PolyVector::monomial(m.clone());
                (self.act(lhs, &v) != self.act(rhs, &v)).then(|| RelationFailure {
                    relation: format!("{name} on e({})", self.comp_name(m.comp)),
                    monomial: m.to_string(),
                })
            })
            .collect();
        (jobs.len(), failures)
    }

    fn report(&self, cap: i64, checked: usize, failures: Vec<RelationFailure>) -> RelationReport {
        RelationReport { datum: self.datum.name.clone(), weight: self.weight.to_json(&self.datum), cap, checked, failures }
    }

    /// Applies every relation to every monomial of degree at most `cap`.
    pub fn verify_relations(&self, cap: i64) -> RelationReport {
        self.verify_relations_with(cap, BraidForm::Reversed)
    }

    pub fn verify_relations_with(&self, cap: i64, braid: BraidForm) -> RelationReport {
        let pairs: Vec<_> = self.relations_with(braid).into_iter().map(|r| (r.name, r.comp, r.lhs, r.rhs)).collect();
        let (checked, failures) = self.check_pairs(&pairs, cap);
        self.report(cap, checked, failures)
    }

    /// Checks that `map` sends every relation to an identity; `target` gives
    /// the idempotent of the image of `e(ui)`.
    pub fn verify_map(&self, map: impl Fn(&HElement<T>) -> HElement<T>, target: impl Fn(usize) -> usize, cap: i64) -> RelationReport {
        let pairs: Vec<_> = self.relations().into_iter().map(|r| (r.name, target(r.comp), map(&r.lhs), map(&r.rhs))).collect();
        let (checked, failures) = self.check_pairs(&pairs, cap);
        self.report(cap, checked, failures)
    }

    /// `sum_ui e_k(y_1^{1+p(i_1)}, ..., y_n^{1+p(i_n)}) e(ui)`.
    pub fn central_elementary(&self, k: usize) -> HElement<T> {
        let n = self.n();
        let mut out = HElement::zero();
        for c in 0..self.comps.len() {
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != k {
                    continue;
                }
                let mut letters = Vec::new();
                for r in (0..n).filter(|r| mask >> r & 1 == 1) {
                    for _ in 0..=self.par(c, r) {
                        letters.push(Gen::Y(r));
                    }
                }
                out.terms.push(GenWord::new(T::one(), letters, c));
            }
        }
        out
    }

    /// Whether each elementary symmetric function of the even family commutes
    /// with every generator on monomials of degree at most `cap`.
    pub fn center_check(&self, cap: i64) -> bool {
        let n = self.n();
        let mut gens: Vec<Vec<Gen>> = (0..n).map(|r| vec![Gen::Y(r)]).collect();
        gens.extend((0..n.saturating_sub(1)).map(|r| vec![Gen::Tau(r)]));
        (1..=n).all(|k| {
            let z = self.central_elementary(k);
            gens.iter().all(|g| {
                let g = self.generator_sum(g);
                self.acts_equal(&z.mul(&g), &g.mul(&z), cap)
            })
        })
    }
}
