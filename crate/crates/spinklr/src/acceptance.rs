//! The acceptance suite: twelve end-to-end checks over the built-in fixtures,
//! each producing a `CriterionReport`.

use std::time::Instant;

use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::covering::{
    coproduct, divided_norm_factorial, divided_norm_product, divided_norm_recursive, divided_power, divided_word,
    lu12_closed_form, serre_element, Form, FreeElement, Lu12Sign, TensorElement, Word,
};
use crate::grothendieck::{categorical_serre, gamma_check, proj_pairing, raw_char, type_m_check, ProjClass};
use crate::nilhecke::NilHecke;
use crate::polyrep::PolyRep;
use crate::ring::{quantum_integer, series_expand};
use crate::rootdata::{self, all_builtins, builtin, RootDatum, Weight, C6_VIOLATING};
use crate::{Pi, Rat};

/// Identifier and title of each criterion, in suite order.
pub const CRITERIA: [(u8, &str); 12] = [
    (1, "form closed forms"),
    (2, "quantum Serre elements lie in the radical"),
    (3, "closed form for twisted Serre words"),
    (4, "nilHecke graded dimensions"),
    (5, "idempotent identities"),
    (6, "relations in the polynomial representation"),
    (7, "PBW independence"),
    (8, "categorification of the form"),
    (9, "categorical Serre relation"),
    (10, "type-M rank equality"),
    (11, "bar invariance and the C6 negative test"),
    (12, "random property suites"),
];

const MAX_FAILURES: usize = 20;

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
    pub seconds: f64,
    /// Wall-clock limit, when the criterion sets one.
    pub budget_seconds: Option<f64>,
    pub detail: Value,
}

impl CriterionReport {
    pub fn within_budget(&self) -> bool {
        self.budget_seconds.is_none_or(|b| self.seconds <= b)
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked > 0 && self.within_budget()
    }

    /// `PASS`/`FAIL`, the id, title, check count and time on one line.
    pub fn summary_line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{status} criterion {:>2}: {} ({} checks, {:.2}s",
            self.id, self.title, self.checked, self.seconds
        );
        if let Some(b) = self.budget_seconds {
            line.push_str(&format!(", budget {b}s"));
        }
        line.push(')');
        if let Some(f) = self.failures.first() {
            line.push_str(&format!(" first failure: {f}"));
        }
        line
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "title": self.title,
            "passed": self.passed(),
            "checked": self.checked,
            "failures": self.failures,
            "seconds": self.seconds,
            "budget_seconds": self.budget_seconds,
            "within_budget": self.within_budget(),
            "detail": self.detail,
        })
    }
}

/// Results of a batch of independent checks, merged in input order.
#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < MAX_FAILURES {
            self.failures.push(what());
        }
    }

    fn merge(&mut self, results: Vec<(bool, String)>) {
        for (ok, what) in results {
            self.record(ok, || what);
        }
    }
}

pub fn run(id: u8) -> Option<CriterionReport> {
    let (_, title) = *CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let mut tally = Tally::default();
    let (budget, detail) = match id {
        1 => (Some(1.0), form_closed_forms(&mut tally)),
        2 => (Some(60.0), serre_in_radical(&mut tally)),
        3 => (None, lu12(&mut tally)),
        4 => (Some(10.0), nilhecke_dims(&mut tally)),
        5 => (None, idempotents(&mut tally)),
        6 => (None, relations(&mut tally)),
        7 => (None, pbw(&mut tally)),
        8 => (None, gamma(&mut tally)),
        9 => (None, cat_serre(&mut tally)),
        10 => (None, type_m(&mut tally)),
        11 => (None, bar_invariance(&mut tally)),
        _ => (None, properties(&mut tally)),
    };
    Some(CriterionReport {
        id,
        title,
        checked: tally.checked,
        failures: tally.failures,
        seconds: start.elapsed().as_secs_f64(),
        budget_seconds: budget,
        detail,
    })
}

pub fn run_all() -> Vec<CriterionReport> {
    CRITERIA.iter().filter_map(|&(id, _)| run(id)).collect()
}

fn form_closed_forms(t: &mut Tally) -> Value {
    for d in all_builtins() {
        let f = Form::<Rat>::new(&d);
        for i in 0..d.rank() {
            let expected = (Pi::one() - Pi::monomial(d.parity[i] as i64, 2 * d.sym[i] as i32)).inv().unwrap();
            t.record(f.pair_words(&[i as u8], &[i as u8]) == expected, || format!("{} (theta_{i}, theta_{i})", d.name));
            for a in 0..=4 {
                let r = divided_norm_recursive(&f, i, a);
                let ok = r == divided_norm_product(&d, i, a) && r == divided_norm_factorial(&d, i, a);
                t.record(ok, || format!("{} divided norm i={i} a={a}", d.name));
            }
        }
    }
    json!({"fixtures": rootdata::builtin_names(), "max_power": 4})
}

fn serre_in_radical(t: &mut Tally) -> Value {
    let mut pairs = Vec::new();
    for d in all_builtins() {
        for i in 0..d.rank() {
            for j in 0..d.rank() {
                if i != j {
                    let sub = d.restrict(&[i.min(j), i.max(j)]);
                    let (a, b) = if i < j { (0, 1) } else { (1, 0) };
                    pairs.push((sub, a, b, format!("{} ({},{})", d.name, d.nodes[i], d.nodes[j])));
                }
            }
        }
    }
    let results: Vec<(bool, String)> = pairs
        .par_iter()
        .map(|(sub, i, j, label)| {
            let f = Form::<Rat>::new(sub);
            let s = serre_element::<Rat>(sub, *i, *j);
            (radical_at_both(&f, &s), label.clone())
        })
        .collect();
    t.merge(results);
    json!({"pairs": pairs.len()})
}

/// Orthogonality of `x` to every word of its weight, separately at `pi = 1`
/// and at `pi = -1`.
fn radical_at_both(f: &Form<Rat>, x: &FreeElement<Rat>) -> bool {
    x.weights(&f.datum).iter().all(|w| {
        f.words(w).iter().all(|b| {
            let v = f.pair(x, &FreeElement::from_word(b.clone()));
            v.at(1).is_zero() && v.at(-1).is_zero()
        })
    })
}

fn lu12(t: &mut Tally) -> Value {
    let d = builtin("b01").unwrap();
    let f = Form::<Rat>::new(&d);
    let i = d.nodes_of_parity(1)[0];
    let j = d.nodes_of_parity(0)[0];
    for n in 0..=3u32 {
        for a in 0..=n {
            for b in 0..=n {
                let (ap, bp) = (n - a, n - b);
                let x = divided_word::<Rat>(&d, &[i, j, i], &[a, 1, ap]);
                let y = divided_word::<Rat>(&d, &[i, j, i], &[b, 1, bp]);
                let closed = lu12_closed_form::<Rat>(&d, i, j, (a, ap, b, bp), Lu12Sign::Derived);
                t.record(closed == Some(f.pair(&x, &y)), || format!("(a,a',b,b') = ({a},{ap},{b},{bp})"));
            }
        }
    }
    json!({"datum": "b01", "sign": "derived"})
}

fn nilhecke_dims(t: &mut Tally) -> Value {
    let mut reports = Vec::new();
    for parity in [0, 1] {
        for n in 1..=4 {
            let nh = NilHecke::<Rat>::new(n, parity);
            match nh.dim_report(20) {
                Ok(r) => {
                    t.record(r["agreement"] == true, || format!("dim n={n} p={parity}"));
                    t.record(r["lambda"]["agreement"] == true, || format!("symmetric dim n={n} p={parity}"));
                    reports.push(json!({"n": n, "parity": parity, "agreement": r["agreement"], "lambda": r["lambda"]["agreement"]}));
                }
                Err(e) => t.record(false, || format!("n={n} p={parity}: {e}")),
            }
        }
    }
    json!({"D": 20, "runs": reports})
}

fn idempotents(t: &mut Tally) -> Value {
    let runs: Vec<(u8, usize)> = [0u8, 1].iter().flat_map(|&p| (1..=4).map(move |n| (p, n))).collect();
    let results: Vec<Vec<(bool, String)>> = runs
        .par_iter()
        .map(|&(parity, n)| {
            NilHecke::<Rat>::new(n, parity)
                .idempotent_suite(16)
                .into_iter()
                .map(|c| (c.holds, format!("{} n={n} p={parity}", c.name)))
                .collect()
        })
        .collect();
    for r in results {
        t.merge(r);
    }
    json!({"D": 16, "max_n": 4})
}

fn fixture_weights(max_height: u32) -> Vec<(RootDatum, Weight)> {
    let mut out = Vec::new();
    for d in all_builtins() {
        for h in 1..=max_height {
            for w in Weight::all_of_height(d.rank(), h) {
                out.push((d.clone(), w));
            }
        }
    }
    out
}

fn relations(t: &mut Tally) -> Value {
    let jobs = fixture_weights(3);
    let results: Vec<(bool, String, usize)> = jobs
        .par_iter()
        .map(|(d, w)| {
            let r = PolyRep::<Rat>::new(d, w).verify_relations(12);
            let what = format!("{} {}: {:?}", d.name, w.display(d), r.failures.first());
            (r.passed() && r.checked > 0, what, r.checked)
        })
        .collect();
    let instances: usize = results.iter().map(|r| r.2).sum();
    t.merge(results.into_iter().map(|(ok, s, _)| (ok, s)).collect());
    json!({"D": 12, "weights": jobs.len(), "relation_instances": instances})
}

/// Window of the PBW independence check.
pub const PBW_WINDOW: i64 = 4;

fn pbw(t: &mut Tally) -> Value {
    let jobs = fixture_weights(3);
    let results: Vec<(bool, String)> = jobs
        .par_iter()
        .map(|(d, w)| {
            let rep = PolyRep::<Rat>::new(d, w);
            (rep.pbw_independence(PBW_WINDOW, rep.default_cap(PBW_WINDOW)), format!("{} {}", d.name, w.display(d)))
        })
        .collect();
    t.merge(results);
    json!({"window": PBW_WINDOW, "weights": jobs.len()})
}

/// `pi q^{-1} [2] / (1 - pi q^2)^2`, the pairing of `P_{oo}` with itself for
/// the odd singleton.
pub fn odd_square_example() -> Pi {
    let base = Pi::one() - Pi::monomial(1, 2);
    &(&Pi::monomial(1, -1) * &quantum_integer::<Rat>(2, 1, 1)) / &(&base * &base)
}

fn gamma(t: &mut Tally) -> Value {
    let jobs = fixture_weights(3);
    let results: Vec<(bool, String)> = jobs
        .par_iter()
        .map(|(d, w)| {
            let r = gamma_check::<Rat>(d, w);
            (r.passed() && r.checked > 0, format!("{} {}: {} mismatches", d.name, w.display(d), r.mismatches.len()))
        })
        .collect();
    t.merge(results);
    let d = builtin("osp12").unwrap();
    let expected = odd_square_example();
    let oo = ProjClass::word(&[0, 0]);
    t.record(proj_pairing::<Rat>(&d, &oo, &oo).ok() == Some(expected.clone()), || "osp12 (P_oo, P_oo) by PBW".into());
    t.record(Form::<Rat>::new(&d).pair_words(&[0, 0], &[0, 0]) == expected, || "osp12 (theta^2, theta^2)".into());
    let order = 12;
    let rep = PolyRep::<Rat>::new(&d, &Weight(vec![2]));
    let by_char = raw_char(&rep, &oo, order).ok().and_then(|c| c.get(&vec![0, 0]).cloned());
    t.record(by_char == series_expand(&expected, order as i32).ok(), || "osp12 ch P_oo".into());
    json!({"weights": jobs.len(), "example": expected.to_json()})
}

/// Truncation of the categorical Serre checks.
pub const SERRE_CAP: i64 = 16;

fn cat_serre(t: &mut Tally) -> Value {
    let b01 = builtin("b01").unwrap();
    let (o, e) = (b01.nodes_of_parity(1)[0], b01.nodes_of_parity(0)[0]);
    let affc = builtin("aff-c").unwrap();
    let orthogonal = (0..affc.rank())
        .flat_map(|i| (0..affc.rank()).map(move |j| (i, j)))
        .find(|&(i, j)| i != j && affc.cartan(i, j) == 0)
        .unwrap();
    let mut reports = Vec::new();
    for (d, i, j) in [(&b01, o, e), (&affc, orthogonal.0, orthogonal.1)] {
        match categorical_serre::<Rat>(d, i, j, SERRE_CAP) {
            Ok(r) => {
                for c in &r.clauses {
                    t.record(c.holds, || format!("{} {}", d.name, c.name));
                }
                reports.push(r.to_json());
            }
            Err(err) => t.record(false, || format!("{}: {err}", d.name)),
        }
    }
    json!({"D": SERRE_CAP, "reports": reports})
}

fn type_m(t: &mut Tally) -> Value {
    let jobs = fixture_weights(4);
    let results: Vec<(bool, String)> = jobs
        .par_iter()
        .map(|(d, w)| {
            let (plus, minus) = type_m_check::<Rat>(d, w);
            (plus == minus, format!("{} {}: {plus} vs {minus}", d.name, w.display(d)))
        })
        .collect();
    t.merge(results);
    json!({"weights": jobs.len()})
}

fn bar_invariance(t: &mut Tally) -> Value {
    for d in all_builtins() {
        for i in 0..d.rank() {
            for k in 0..=4 {
                t.record(divided_power::<Rat>(&d, i, k).is_bar_invariant(), || format!("{} theta_{i}^({k})", d.name));
            }
        }
    }
    let input = rootdata::parse_quiver_json(C6_VIOLATING).expect("bundled quiver parses");
    let rejected = RootDatum::from_quiver(&input).is_err();
    t.record(rejected, || "C6-violating quiver accepted".into());
    let bad = RootDatum::from_quiver_unchecked(&input).expect("structurally sound");
    let odd = bad.nodes_of_parity(1)[0];
    let bracket = quantum_integer::<Rat>(2, bad.sym[odd], bad.parity[odd]);
    t.record(!bracket.is_bar_invariant(), || "[2]_i is bar-invariant on the C6-violating datum".into());
    json!({"negative": {"datum": bad.name, "rejected": rejected, "bracket": bracket.to_json()}})
}

fn random_triple(rng: &mut StdRng, d: &RootDatum) -> (Word, Word, Word) {
    let n = rng.gen_range(0..=4usize);
    let x: Vec<u8> = (0..n).map(|_| rng.gen_range(0..d.rank()) as u8).collect();
    let mut y = x.clone();
    for k in (1..y.len()).rev() {
        y.swap(k, rng.gen_range(0..=k));
    }
    let cut = rng.gen_range(0..=n);
    (Word::from(&x[..]), Word::from(&y[..cut]), Word::from(&y[cut..]))
}

/// The form properties on one word triple `x`, `y' y''` of equal weight;
/// returns the names of the failing ones.
pub fn form_property_failures(f: &Form<Rat>, x: &Word, y1: &Word, y2: &Word) -> Vec<&'static str> {
    let d = &f.datum;
    let xe = FreeElement::<Rat>::from_word(x.clone());
    let (y1e, y2e) = (FreeElement::<Rat>::from_word(y1.clone()), FreeElement::<Rat>::from_word(y2.clone()));
    let split = TensorElement::pure(y1.clone(), y2.clone(), Pi::one());
    let mut bad = Vec::new();
    if f.pair(&xe, &y1e.mul(&y2e)) != f.pair_tensors(&coproduct(d, &xe), &split) {
        bad.push("b");
    }
    if f.pair(&y1e.mul(&y2e), &xe) != f.pair_tensors(&split, &coproduct(d, &xe)) {
        bad.push("c");
    }
    let factorizes = f.pair_tensors(&split, &split) == &f.pair_words(y1, y1) * &f.pair_words(y2, y2);
    let twisted = coproduct(d, &y1e).mul(&coproduct(d, &y2e), d);
    if !factorizes || f.pair_tensors(&twisted, &split) != f.pair_tensors(&coproduct(d, &y1e.mul(&y2e)), &split) {
        bad.push("d");
    }
    bad
}

/// Number of random word triples and of random quivers.
pub const PROPERTY_CASES: (usize, u64) = (256, 64);

fn properties(t: &mut Tally) -> Value {
    let fixtures = all_builtins();
    let forms: Vec<Form<Rat>> = fixtures.iter().map(Form::new).collect();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let cases: Vec<(usize, Word, Word, Word)> = (0..PROPERTY_CASES.0)
        .map(|_| {
            let k = rng.gen_range(0..fixtures.len());
            let (x, y1, y2) = random_triple(&mut rng, &fixtures[k]);
            (k, x, y1, y2)
        })
        .collect();
    let results: Vec<(bool, String)> = cases
        .par_iter()
        .map(|(k, x, y1, y2)| {
            let bad = form_property_failures(&forms[*k], x, y1, y2);
            (bad.is_empty(), format!("{} x={x:?} y'={y1:?} y''={y2:?}: {bad:?}", fixtures[*k].name))
        })
        .collect();
    t.merge(results);
    let results: Vec<(bool, String)> = (0..PROPERTY_CASES.1)
        .into_par_iter()
        .map(|seed| {
            let (_, d) = rootdata::random::random_quiver(seed);
            let v = d.check_q_conditions();
            (v.is_empty(), format!("random quiver {seed}: {v:?}"))
        })
        .collect();
    t.merge(results);
    json!({"word_triples": PROPERTY_CASES.0, "random_quivers": PROPERTY_CASES.1})
}
