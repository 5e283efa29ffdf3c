use std::fmt;
use std::fs;

use rayon::prelude::*;
use serde_json::{json, Value};

use spinklr::acceptance;
use spinklr::covering::{divided_word, serre_element, Form};
use spinklr::grothendieck::{
    categorical_serre, proj_pairing, restrict_decomposition, type_m_check, ProjClass, RestrictionShift,
};
use spinklr::nilhecke::NilHecke;
use spinklr::polyrep::PolyRep;
use spinklr::ring::series_expand;
use spinklr::rootdata::{self, RootDatum, Weight};
use spinklr::Rat;

use crate::{Command, PairArgs, RunArgs};

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Computation(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) => "input",
            CliError::Computation(_) => "computation",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(s) | CliError::Computation(s) => f.write_str(s),
        }
    }
}

fn input(e: impl fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

pub struct Report {
    pub passed: bool,
    pub body: Value,
}

impl Report {
    fn new(passed: bool, mut body: Value) -> Self {
        body["passed"] = json!(passed);
        Report { passed, body }
    }
}

pub fn dispatch(command: &Command, run: &RunArgs) -> Result<Report, CliError> {
    match command {
        Command::Validate => validate(run),
        Command::Gram => gram(run),
        Command::SerreCheck(pair) => serre_check(run, pair),
        Command::NilheckeDims { n, parity } => nilhecke_dims(run, *n, *parity),
        Command::RelationsVerify => relations(run),
        Command::PbwVerify { window } => pbw(run, *window),
        Command::Pair { left, right } => pair(run, left, right),
        Command::Restrict { class, left_weight } => restrict(run, class, left_weight),
        Command::CatSerre(pair) => cat_serre(run, pair),
        Command::TypeM => type_m(run),
        Command::ReportAll { only } => report_all(only),
    }
}

fn quiver(run: &RunArgs) -> Result<rootdata::QuiverInput, CliError> {
    let text = match (&run.builtin, &run.datum_file) {
        (Some(name), _) => rootdata::builtin_source(name)
            .ok_or_else(|| input(format!("unknown builtin {name}; known: {}", rootdata::builtin_names().join(", "))))?
            .to_string(),
        (None, Some(path)) => fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?,
        (None, None) => return Err(input("one of --builtin or --datum-file is required")),
    };
    rootdata::parse_quiver_json(&text).map_err(input)
}

fn datum(run: &RunArgs) -> Result<RootDatum, CliError> {
    RootDatum::from_quiver(&quiver(run)?).map_err(input)
}

/// The requested weight, or every weight up to the height bound.
fn weights(run: &RunArgs, d: &RootDatum, default_height: Option<u32>) -> Result<Vec<Weight>, CliError> {
    if let Some(w) = &run.weight {
        return Ok(vec![Weight::parse(d, w).map_err(input)?]);
    }
    let h = run.height.or(default_height).ok_or_else(|| input("--weight or --height is required"))?;
    Ok((1..=h).flat_map(|k| Weight::all_of_height(d.rank(), k)).collect())
}

fn node(d: &RootDatum, token: Option<&String>, flag: &str) -> Result<Option<usize>, CliError> {
    token
        .map(|t| d.resolve_node(t).ok_or_else(|| input(format!("{flag}: no node {t} in {}", d.name))))
        .transpose()
}

/// The pairs `(i, j)` with `i != j` selected by the node flags.
fn pairs(d: &RootDatum, args: &PairArgs) -> Result<Vec<(usize, usize)>, CliError> {
    let (i, j) = (node(d, args.i.as_ref(), "--i")?, node(d, args.j.as_ref(), "--j")?);
    let all: Vec<usize> = (0..d.rank()).collect();
    let is = i.map_or(all.clone(), |x| vec![x]);
    let js = j.map_or(all, |x| vec![x]);
    let out: Vec<_> = is.iter().flat_map(|&a| js.iter().map(move |&b| (a, b))).filter(|(a, b)| a != b).collect();
    if out.is_empty() {
        return Err(input("no pair of distinct nodes selected"));
    }
    Ok(out)
}

fn validate(run: &RunArgs) -> Result<Report, CliError> {
    let d = RootDatum::from_quiver_unchecked(&quiver(run)?).map_err(input)?;
    let violations: Vec<String> = d.violations().iter().map(|e| e.to_string()).collect();
    let q: Vec<Value> = if violations.is_empty() {
        d.check_q_conditions().iter().map(|v| json!({"clause": v.clause.to_string(), "i": d.nodes[v.i], "j": d.nodes[v.j]})).collect()
    } else {
        Vec::new()
    };
    let passed = violations.is_empty() && q.is_empty();
    let mut body = json!({"datum": d.name, "violations": violations, "q_violations": q});
    if passed {
        body["data"] = d.to_json();
    }
    Ok(Report::new(passed, body))
}

fn gram(run: &RunArgs) -> Result<Report, CliError> {
    let d = datum(run)?;
    let form = Form::<Rat>::new(&d);
    let grams: Vec<Value> = weights(run, &d, None)?.iter().map(|w| form.gram_report(w)).collect();
    Ok(Report::new(true, json!({"datum": d.name, "weights": grams})))
}

fn serre_check(run: &RunArgs, args: &PairArgs) -> Result<Report, CliError> {
    let d = datum(run)?;
    let form = Form::<Rat>::new(&d);
    let rows: Vec<(bool, Value)> = pairs(&d, args)?
        .into_par_iter()
        .map(|(i, j)| {
            let s = serre_element::<Rat>(&d, i, j);
            let (radical, bar) = (form.in_radical(&s), s.is_bar_invariant());
            let row = json!({"i": d.nodes[i], "j": d.nodes[j], "a_ij": d.cartan(i, j), "in_radical": radical, "bar_invariant": bar});
            (radical && bar, row)
        })
        .collect();
    let in_radical = rows.iter().all(|r| r.1["in_radical"] == true);
    let passed = rows.iter().all(|r| r.0);
    let rows: Vec<Value> = rows.into_iter().map(|r| r.1).collect();
    Ok(Report::new(passed, json!({"datum": d.name, "in_radical": in_radical, "pairs": rows})))
}

fn nilhecke_dims(run: &RunArgs, n: Option<usize>, parity: Option<u8>) -> Result<Report, CliError> {
    let cap = run.degree_cap.unwrap_or(20);
    let ns: Vec<usize> = n.map_or((1..=4).collect(), |n| vec![n]);
    if ns.contains(&0) {
        return Err(input("--n must be positive"));
    }
    let parities: Vec<u8> = parity.map_or(vec![0, 1], |p| vec![p]);
    let jobs: Vec<(usize, u8)> = parities.iter().flat_map(|&p| ns.iter().map(move |&n| (n, p))).collect();
    let rows = jobs
        .par_iter()
        .map(|&(n, p)| NilHecke::<Rat>::new(n, p).dim_report(cap).map_err(|e| CliError::Computation(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let passed = rows.iter().all(|r| r["agreement"] == true && r["lambda"]["agreement"] == true);
    Ok(Report::new(passed, json!({"D": cap, "runs": rows})))
}

fn relations(run: &RunArgs) -> Result<Report, CliError> {
    let d = datum(run)?;
    let cap = run.degree_cap.unwrap_or(12);
    let rows: Vec<(bool, Value)> = weights(run, &d, Some(3))?
        .par_iter()
        .map(|w| {
            let r = PolyRep::<Rat>::new(&d, w).verify_relations(cap);
            let mut v = r.to_json();
            v["weight"] = w.to_json(&d);
            (r.passed(), v)
        })
        .collect();
    let passed = rows.iter().all(|r| r.0);
    let rows: Vec<Value> = rows.into_iter().map(|r| r.1).collect();
    Ok(Report::new(passed, json!({"datum": d.name, "D": cap, "weights": rows})))
}

fn pbw(run: &RunArgs, window: i64) -> Result<Report, CliError> {
    let d = datum(run)?;
    let rows: Vec<(bool, Value)> = weights(run, &d, Some(3))?
        .par_iter()
        .map(|w| {
            let rep = PolyRep::<Rat>::new(&d, w);
            let cap = run.degree_cap.unwrap_or_else(|| rep.default_cap(window));
            let ok = rep.pbw_independence(window, cap);
            let size = rep.pbw_basis(window).len();
            (ok, json!({"weight": w.to_json(&d), "window": window, "D": cap, "elements": size, "independent": ok}))
        })
        .collect();
    let passed = rows.iter().all(|r| r.0);
    let rows: Vec<Value> = rows.into_iter().map(|r| r.1).collect();
    Ok(Report::new(passed, json!({"datum": d.name, "weights": rows})))
}

fn pair(run: &RunArgs, left: &str, right: &str) -> Result<Report, CliError> {
    let d = datum(run)?;
    let x = ProjClass::parse(&d, left).map_err(input)?;
    let y = ProjClass::parse(&d, right).map_err(input)?;
    let value = proj_pairing::<Rat>(&d, &x, &y).map_err(input)?;
    let divided = |c: &ProjClass| {
        let (nodes, powers): (Vec<usize>, Vec<u32>) = c.blocks().into_iter().unzip();
        divided_word::<Rat>(&d, &nodes, &powers)
    };
    let form = &Form::<Rat>::new(&d).pair(&divided(&x), &divided(&y)) * &(&x.shift_scalar() * &y.shift_scalar());
    let order = run.degree_cap.unwrap_or(8) as i32;
    let series = series_expand(&value, order).map_err(|e| CliError::Computation(e.to_string()))?;
    Ok(Report::new(
        value == form,
        json!({
            "datum": d.name,
            "left": x.display(&d),
            "right": y.display(&d),
            "value": value.to_json(),
            "text": value.to_string(),
            "series": series.to_json(),
            "series_text": series.to_string(),
            "form_agrees": value == form,
        }),
    ))
}

fn restrict(run: &RunArgs, class: &str, left_weight: &str) -> Result<Report, CliError> {
    let d = datum(run)?;
    let c = ProjClass::parse(&d, class).map_err(input)?;
    if c.blocks().iter().any(|b| b.1 > 1) {
        return Err(input("restrict takes a word class"));
    }
    let mu = Weight::parse(&d, left_weight).map_err(input)?;
    let summands = restrict_decomposition(&d, &c.seq, &mu, RestrictionShift::Degree).map_err(input)?;
    let rows: Vec<Value> = summands.iter().map(|s| s.to_json(&d)).collect();
    Ok(Report::new(true, json!({"datum": d.name, "class": c.display(&d), "left_weight": mu.to_json(&d), "summands": rows})))
}

fn cat_serre(run: &RunArgs, args: &PairArgs) -> Result<Report, CliError> {
    let d = datum(run)?;
    let cap = run.degree_cap.unwrap_or(acceptance::SERRE_CAP);
    let mut rows = Vec::new();
    let mut passed = true;
    for (i, j) in pairs(&d, args)? {
        if 1 - d.cartan(i, j) > 5 {
            return Err(input(format!("N = {} exceeds 5 for ({}, {})", 1 - d.cartan(i, j), d.nodes[i], d.nodes[j])));
        }
        let r = categorical_serre::<Rat>(&d, i, j, cap).map_err(|e| CliError::Computation(e.to_string()))?;
        passed &= r.passed();
        rows.push(r.to_json());
    }
    Ok(Report::new(passed, json!({"datum": d.name, "D": cap, "pairs": rows})))
}

fn type_m(run: &RunArgs) -> Result<Report, CliError> {
    let d = datum(run)?;
    let rows: Vec<(bool, Value)> = weights(run, &d, Some(4))?
        .par_iter()
        .map(|w| {
            let (plus, minus) = type_m_check::<Rat>(&d, w);
            (plus == minus, json!({"weight": w.to_json(&d), "rank_plus": plus, "rank_minus": minus}))
        })
        .collect();
    let passed = rows.iter().all(|r| r.0);
    let rows: Vec<Value> = rows.into_iter().map(|r| r.1).collect();
    Ok(Report::new(passed, json!({"datum": d.name, "weights": rows})))
}

fn report_all(only: &[u8]) -> Result<Report, CliError> {
    let ids: Vec<u8> = if only.is_empty() { acceptance::CRITERIA.iter().map(|c| c.0).collect() } else { only.to_vec() };
    let mut rows = Vec::new();
    let mut passed = true;
    for id in ids {
        let r = acceptance::run(id).ok_or_else(|| input(format!("no criterion {id}")))?;
        eprintln!("{}", r.summary_line());
        passed &= r.passed();
        let mut v = r.to_json();
        v.as_object_mut().expect("object").remove("seconds");
        rows.push(v);
    }
    Ok(Report::new(passed, json!({"criteria": rows})))
}
