//! Classes of projective modules over the spin quiver Hecke algebras: their
//! pairing, graded characters, restriction, the comparison with the covering
//! form, categorical Serre relations and the type-M rank equality.

mod character;
mod restrict;
mod serre;

use num_traits::One;
use serde_json::{json, Value};

use crate::covering::{Form, Word};
use crate::perm::Perm;
use crate::polyrep::PolyRepError;
use crate::ring::{quantum_factorial, PiScalar};
use crate::rootdata::{RootDataError, RootDatum, Weight};
use crate::scalar::Scalar;

pub use character::{block_idempotent, character_check, idempotent_char, raw_char, CharSeries};
pub use restrict::{restrict_decomposition, restriction_form_check, shuffles, RestrictionShift, Summand};
pub use serre::{categorical_serre, categorical_serre_maps, CatSerreReport, Clause, LiteralChecks, SerreConstants};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GrothendieckError {
    #[error("weights differ: {0} and {1}")]
    WeightMismatch(String, String),
    #[error("invalid grouping: {0}")]
    InvalidGrouping(String),
    #[error("truncation too small: {0}")]
    TruncationTooSmall(String),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    PolyRep(#[from] PolyRepError),
}

impl From<RootDataError> for GrothendieckError {
    fn from(e: RootDataError) -> Self {
        GrothendieckError::Input(e.to_string())
    }
}

/// Reading of the parity shift `Pi^{p(ui,uk) C(uk,2)}` in the definition of
/// `P_{ui^(uk)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParityShift {
    /// `(sum_a p(i_a)) (sum_a C(k_a, 2))`.
    Literal,
    /// `sum_a p(i_a) C(k_a, 2)`, one factor per block.
    PerBlock,
}

/// The class `Pi^pi q^q P_{ui^(uk)}`: a sequence, a grouping of it into
/// constant blocks, and an extra shift.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjClass {
    pub seq: Vec<usize>,
    pub grouping: Vec<u32>,
    pub q_shift: i64,
    pub pi_shift: u8,
}

impl ProjClass {
    /// `P_ui` with every block of size one.
    pub fn word(seq: &[usize]) -> Self {
        ProjClass { seq: seq.to_vec(), grouping: vec![1; seq.len()], q_shift: 0, pi_shift: 0 }
    }

    /// `P_{i_1^(k_1) ... i_t^(k_t)}`; empty blocks are dropped.
    pub fn divided(blocks: &[(usize, u32)]) -> Self {
        let mut seq = Vec::new();
        let mut grouping = Vec::new();
        for &(i, k) in blocks.iter().filter(|b| b.1 > 0) {
            seq.extend(std::iter::repeat(i).take(k as usize));
            grouping.push(k);
        }
        ProjClass { seq, grouping, q_shift: 0, pi_shift: 0 }
    }

    fn is_single_token(datum: &RootDatum, text: &str) -> bool {
        let (name, power) = text.split_once('^').unwrap_or((text, "1"));
        datum.resolve_node(name).is_some() && power.chars().all(|c| c.is_ascii_digit() || c == '(' || c == ')')
    }

    /// Parses `o,o,e`, `ooe` (single-letter names) or `o^2,e` (a divided power).
    pub fn parse(datum: &RootDatum, text: &str) -> Result<Self, GrothendieckError> {
        let text = text.trim();
        let tokens: Vec<String> = if text.contains(',') {
            text.split(',').map(|t| t.trim().to_string()).filter(|t| !t.is_empty()).collect()
        } else if Self::is_single_token(datum, text) {
            vec![text.to_string()]
        } else {
            let mut out: Vec<String> = Vec::new();
            for ch in text.chars() {
                match out.last_mut() {
                    Some(last) if last.contains('^') && (ch.is_ascii_digit() || ch == '(' || ch == ')') => last.push(ch),
                    Some(last) if ch == '^' => last.push(ch),
                    _ => out.push(ch.to_string()),
                }
            }
            out
        };
        if tokens.is_empty() {
            return Ok(Self::divided(&[]));
        }
        let mut blocks = Vec::new();
        for t in &tokens {
            let (name, k) = match t.split_once('^') {
                Some((n, k)) => {
                    let k = k.trim_matches(|c| c == '(' || c == ')').parse::<u32>();
                    (n, k.map_err(|_| GrothendieckError::Input(format!("bad divided power in {t}")))?)
                }
                None => (t.as_str(), 1),
            };
            let i = datum.resolve_node(name).ok_or_else(|| GrothendieckError::Input(format!("unknown node {name}")))?;
            blocks.push((i, k));
        }
        Ok(Self::divided(&blocks))
    }

    pub fn validate(&self) -> Result<(), GrothendieckError> {
        if self.grouping.iter().sum::<u32>() as usize != self.seq.len() || self.grouping.contains(&0) {
            return Err(GrothendieckError::InvalidGrouping(format!("{:?} does not partition {:?}", self.grouping, self.seq)));
        }
        for (start, k) in self.block_starts() {
            if self.seq[start..start + k].iter().any(|&x| x != self.seq[start]) {
                return Err(GrothendieckError::InvalidGrouping(format!("block at {start} is not constant")));
            }
        }
        Ok(())
    }

    /// `(first strand, size)` of each block.
    pub fn block_starts(&self) -> Vec<(usize, usize)> {
        let mut start = 0;
        self.grouping
            .iter()
            .map(|&k| {
                let b = (start, k as usize);
                start += k as usize;
                b
            })
            .collect()
    }

    /// `(node, size)` of each block.
    pub fn blocks(&self) -> Vec<(usize, u32)> {
        self.block_starts().into_iter().map(|(s, k)| (self.seq[s], k as u32)).collect()
    }

    pub fn weight(&self, rank: usize) -> Weight {
        Weight::of_sequence(rank, &self.seq)
    }

    pub fn shifted(&self, q: i64, pi: u8) -> Self {
        ProjClass { q_shift: self.q_shift + q, pi_shift: (self.pi_shift + pi) % 2, ..self.clone() }
    }

    /// The class of the induced module: sequences and groupings concatenate,
    /// shifts add.
    pub fn induce(&self, other: &Self) -> Self {
        let mut seq = self.seq.clone();
        seq.extend_from_slice(&other.seq);
        let mut grouping = self.grouping.clone();
        grouping.extend_from_slice(&other.grouping);
        ProjClass { seq, grouping, q_shift: self.q_shift + other.q_shift, pi_shift: (self.pi_shift + other.pi_shift) % 2 }
    }

    /// The dual class: `(q^a M)^# = Pi^a q^{-a} M^#`, the projectives
    /// `P_{ui^(uk)}` being self-dual.
    pub fn dual(&self) -> Self {
        let flip = self.q_shift.rem_euclid(2) as u8;
        ProjClass { q_shift: -self.q_shift, pi_shift: (self.pi_shift + flip) % 2, ..self.clone() }
    }

    /// `pi^{pi_shift} q^{q_shift}`.
    pub fn shift_scalar<T: Scalar>(&self) -> PiScalar<T> {
        PiScalar::monomial(self.pi_shift as i64, self.q_shift as i32)
    }

    /// The shift `Pi^{p(ui,uk) C(uk,2)} {-C(uk,2)}` built into `P_{ui^(uk)}`,
    /// as `(q-degree, parity)`; the degree shift is measured in `q_i`.
    pub fn intrinsic_shift(&self, datum: &RootDatum, reading: ParityShift) -> (i64, u8) {
        let blocks = self.blocks();
        let c2 = |k: u32| (k as i64) * (k as i64 - 1) / 2;
        let deg = -blocks.iter().map(|&(i, k)| datum.sym[i] as i64 * c2(k)).sum::<i64>();
        let par = match reading {
            ParityShift::Literal => {
                blocks.iter().map(|&(i, _)| datum.parity[i] as i64).sum::<i64>() * blocks.iter().map(|&(_, k)| c2(k)).sum::<i64>()
            }
            ParityShift::PerBlock => blocks.iter().map(|&(i, k)| datum.parity[i] as i64 * c2(k)).sum(),
        };
        (deg, (par % 2) as u8)
    }

    pub fn display(&self, datum: &RootDatum) -> String {
        let body: Vec<String> = self
            .blocks()
            .iter()
            .map(|&(i, k)| if k == 1 { datum.nodes[i].clone() } else { format!("{}^({k})", datum.nodes[i]) })
            .collect();
        let mut s = format!("P[{}]", body.join(","));
        if self.q_shift != 0 {
            s = format!("q^{} {s}", self.q_shift);
        }
        if self.pi_shift == 1 {
            s = format!("pi {s}");
        }
        s
    }
}

/// `(deg, parity)` of `tau_{r_1} ... tau_{r_k} e(seq)`, accumulated from the
/// rightmost letter, together with the target sequence.
pub fn tau_grading(datum: &RootDatum, seq: &[usize], letters: &[usize]) -> (i64, u8, Vec<usize>) {
    let mut s = seq.to_vec();
    let (mut deg, mut par) = (0i64, 0u64);
    for &r in letters.iter().rev() {
        deg -= datum.pairing[s[r]][s[r + 1]];
        par += datum.parity[s[r]] as u64 * datum.parity[s[r + 1]] as u64;
        s.swap(r, r + 1);
    }
    (deg, (par % 2) as u8, s)
}

/// `prod_r (1 - pi_{i_r} q_{i_r}^2)^{-1}`, the graded dimension of the
/// polynomials on a sequence.
fn polynomial_factor<T: Scalar>(datum: &RootDatum, seq: &[usize]) -> PiScalar<T> {
    let mut x = PiScalar::one();
    for &i in seq {
        let f = PiScalar::one() - PiScalar::monomial(datum.parity[i] as i64, 2 * datum.sym[i] as i32);
        x = &x / &f;
    }
    x
}

fn factorials<T: Scalar>(datum: &RootDatum, class: &ProjClass) -> PiScalar<T> {
    class.blocks().iter().fold(PiScalar::one(), |acc, &(i, k)| &acc * &quantum_factorial(k, datum.sym[i], datum.parity[i]))
}

/// `(P_ui, P_uj) = dim e(uj) H e(ui)` by the PBW basis: a sum over
/// `w . ui = uj` of `pi^{p(tau_w e(ui))} q^{deg(tau_w e(ui))}`, times the
/// polynomial factor.
pub fn word_pairing<T: Scalar>(datum: &RootDatum, ui: &[usize], uj: &[usize]) -> PiScalar<T> {
    let mut total = PiScalar::<T>::from_int(0);
    if ui.len() != uj.len() {
        return total;
    }
    for w in Perm::all(ui.len()) {
        let (deg, par, target) = tau_grading(datum, ui, &w.reduced_word());
        if target == uj {
            total = &total + &PiScalar::monomial(par as i64, deg as i32);
        }
    }
    &total * &polynomial_factor(datum, ui)
}

/// The pairing of two classes; divided powers contribute the inverse
/// quantum factorials of their blocks.
pub fn proj_pairing<T: Scalar>(datum: &RootDatum, x: &ProjClass, y: &ProjClass) -> Result<PiScalar<T>, GrothendieckError> {
    x.validate()?;
    y.validate()?;
    let (wx, wy) = (x.weight(datum.rank()), y.weight(datum.rank()));
    if wx != wy {
        return Err(GrothendieckError::WeightMismatch(wx.display(datum), wy.display(datum)));
    }
    let base = word_pairing::<T>(datum, &x.seq, &y.seq);
    let denom = &factorials::<T>(datum, x) * &factorials::<T>(datum, y);
    let shift = &x.shift_scalar::<T>() * &y.shift_scalar::<T>();
    Ok(&(&base * &shift) / &denom)
}

/// Pairs of words of a weight on which the covering form and the pairing of
/// projectives disagree.
pub fn gamma_check<T: Scalar>(datum: &RootDatum, weight: &Weight) -> GammaReport {
    let form = Form::<T>::new(datum);
    let words = form.words(weight);
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for x in &words {
        for y in &words {
            checked += 1;
            let lhs = form.pair_words(x, y);
            let xs: Vec<usize> = x.iter().map(|&a| a as usize).collect();
            let ys: Vec<usize> = y.iter().map(|&a| a as usize).collect();
            let rhs = proj_pairing::<T>(datum, &ProjClass::word(&xs), &ProjClass::word(&ys)).expect("same weight");
            if lhs != rhs {
                mismatches.push((x.clone(), y.clone()));
            }
        }
    }
    GammaReport { datum: datum.name.clone(), weight: weight.display(datum), checked, mismatches }
}

#[derive(Clone, Debug)]
pub struct GammaReport {
    pub datum: String,
    pub weight: String,
    pub checked: usize,
    pub mismatches: Vec<(Word, Word)>,
}

impl GammaReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json(&self, datum: &RootDatum) -> Value {
        let name = |w: &Word| w.iter().map(|&a| datum.nodes[a as usize].clone()).collect::<Vec<_>>().join(",");
        json!({
            "datum": self.datum,
            "weight": self.weight,
            "checked": self.checked,
            "mismatches": self.mismatches.iter().map(|(x, y)| json!([name(x), name(y)])).collect::<Vec<_>>(),
        })
    }
}

/// Ranks of the Gram matrix of a weight at `pi = 1` and `pi = -1`.
pub fn type_m_check<T: Scalar>(datum: &RootDatum, weight: &Weight) -> (usize, usize) {
    let form = Form::<T>::new(datum);
    let gram = form.gram(weight);
    (crate::covering::rank_at(&gram, 1), crate::covering::rank_at(&gram, -1))
}

#[cfg(test)]
mod tests;
