use num_integer::Integer;
use serde_json::{json, Value};

use super::quiver::{Quiver, QuiverInput};
use super::skewpoly::SkewBivarPoly;
use super::RootDataError;
use crate::scalar::Scalar;

/// A Z2-graded symmetrizable Cartan datum together with the edge counts
/// that determine the Q-polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    pub name: String,
    /// Node names in the fixed total order.
    pub nodes: Vec<String>,
    pub parity: Vec<u8>,
    /// Symmetrizing constants `s_i`.
    pub sym: Vec<u32>,
    /// The pairing `(alpha_i, alpha_j)`.
    pub pairing: Vec<Vec<i64>>,
    /// Oriented orbit-edge counts `d_ij`.
    pub edge_orbits: Vec<Vec<u32>>,
}

impl RootDatum {
    /// Derives and validates the datum of a quiver with automorphism.
    pub fn from_quiver(input: &QuiverInput) -> Result<Self, RootDataError> {
        let datum = Self::from_quiver_unchecked(input)?;
        datum.validate()?;
        Ok(datum)
    }

    /// Derives the datum of a structurally sound quiver with automorphism
    /// without checking the Cartan conditions.
    pub fn from_quiver_unchecked(input: &QuiverInput) -> Result<Self, RootDataError> {
        let quiver = Quiver::from_input(input)?;
        quiver.check_compatible()?;
        let orbits = quiver.orbits();
        let mut orbit_of = vec![0usize; quiver.vertices.len()];
        for (k, orbit) in orbits.iter().enumerate() {
            for &v in orbit {
                orbit_of[v] = k;
            }
        }
        let rep_name = |k: usize| quiver.vertices[orbits[k][0]].clone();
        let find_orbit = |v: &Value| -> Result<usize, RootDataError> {
            let id = match v {
                Value::String(s) => s.clone(),
                Value::Number(n) => n.to_string(),
                _ => return Err(RootDataError::InvalidInput("order entries must be vertex ids".into())),
            };
            quiver
                .vertices
                .iter()
                .position(|x| *x == id)
                .map(|p| orbit_of[p])
                .ok_or_else(|| RootDataError::InvalidInput(format!("unknown vertex {id} in order")))
        };
        let order: Vec<usize> = match &input.order {
            Some(list) => {
                let ord = list.iter().map(find_orbit).collect::<Result<Vec<_>, _>>()?;
                let mut sorted = ord.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != ord.len() || ord.len() != orbits.len() {
                    return Err(RootDataError::InvalidInput("order must list each orbit exactly once".into()));
                }
                ord
            }
            None => (0..orbits.len()).collect(),
        };
        let mut parity_of: Vec<Option<u8>> = vec![None; orbits.len()];
        for (v, &p) in &input.parity {
            if p > 1 {
                return Err(RootDataError::InvalidInput(format!("parity of {v} must be 0 or 1")));
            }
            let k = find_orbit(&Value::String(v.clone()))?;
            if parity_of[k].is_some_and(|q| q != p) {
                return Err(RootDataError::InvalidInput(format!("conflicting parities for orbit of {v}")));
            }
            parity_of[k] = Some(p);
        }
        let n = orbits.len();
        let mut between = vec![vec![0i64; n]; n];
        // Edge orbits counted with weight 1/L, accumulated as numerators over
        // a common denominator.
        let period = orbits.iter().map(|o| o.len() as u64).fold(1u64, |a, b| a.lcm(&b));
        let mut oriented = vec![vec![0u64; n]; n];
        for &(s, t) in &quiver.edges {
            let (i, j) = (orbit_of[s], orbit_of[t]);
            between[i][j] += 1;
            between[j][i] += 1;
            let len = orbits[i].len().lcm(&orbits[j].len()) as u64;
            let mut l = 1u64;
            let (mut x, mut y) = (quiver.automorphism[s], quiver.automorphism[t]);
            while (x, y) != (s, t) {
                x = quiver.automorphism[x];
                y = quiver.automorphism[y];
                l += 1;
            }
            debug_assert!(l <= len);
            oriented[i][j] += period / l;
        }
        let mut nodes = Vec::with_capacity(n);
        let mut parity = Vec::with_capacity(n);
        let mut sym = Vec::with_capacity(n);
        for &k in &order {
            nodes.push(rep_name(k));
            parity.push(parity_of[k].ok_or_else(|| {
                RootDataError::InvalidInput(format!("no parity given for orbit of {}", rep_name(k)))
            })?);
            sym.push(orbits[k].len() as u32);
        }
        let mut pairing = vec![vec![0i64; n]; n];
        let mut edge_orbits = vec![vec![0u32; n]; n];
        for (a, &i) in order.iter().enumerate() {
            for (b, &j) in order.iter().enumerate() {
                pairing[a][b] = if a == b { 2 * sym[a] as i64 } else { -between[i][j] };
                if oriented[i][j] % period != 0 {
                    return Err(RootDataError::InvalidInput("edge multiset is not a union of orbits".into()));
                }
                edge_orbits[a][b] = (oriented[i][j] / period) as u32;
            }
        }
        let name = input.name.clone().unwrap_or_else(|| "quiver".into());
        Ok(RootDatum { name, nodes, parity, sym, pairing, edge_orbits })
    }

    /// Builds a datum without any validation, for counterexamples.
    pub fn from_parts_unchecked(
        name: &str,
        nodes: Vec<String>,
        parity: Vec<u8>,
        sym: Vec<u32>,
        pairing: Vec<Vec<i64>>,
        edge_orbits: Vec<Vec<u32>>,
    ) -> Self {
        RootDatum { name: name.into(), nodes, parity, sym, pairing, edge_orbits }
    }

    pub fn rank(&self) -> usize {
        self.nodes.len()
    }

    /// Entry `a_ij = (alpha_i, alpha_j) / s_i` of the Cartan matrix.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.pairing[i][j] / self.sym[i] as i64
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.rank()).map(|i| (0..self.rank()).map(|j| self.cartan(i, j)).collect()).collect()
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.parity[i] == 1
    }

    /// `(alpha_i, alpha_i)`.
    pub fn norm(&self, i: usize) -> u32 {
        2 * self.sym[i]
    }

    /// `m(i, j) = lcm((alpha_i, alpha_i), (alpha_j, alpha_j))`.
    pub fn lcm_norm(&self, i: usize, j: usize) -> u32 {
        self.norm(i).lcm(&self.norm(j))
    }

    pub fn node_index(&self, name: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n == name)
    }

    /// Every violated condition, in the order C1 through C6, followed by the
    /// gcd normalization and the edge-count identity.
    pub fn violations(&self) -> Vec<RootDataError> {
        let n = self.rank();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.pairing[i][j] % self.sym[i] as i64 != 0 {
                    out.push(RootDataError::ConditionViolated(format!(
                        "a_{{{},{}}} is not an integer",
                        self.nodes[i], self.nodes[j]
                    )));
                }
            }
        }
        for i in 0..n {
            if self.cartan(i, i) != 2 {
                out.push(RootDataError::ConditionViolated(format!("C1: a_ii != 2 at {}", self.nodes[i])));
            }
            for j in 0..n {
                if i != j && self.cartan(i, j) > 0 {
                    out.push(RootDataError::ConditionViolated(format!(
                        "C2: a_{{{},{}}} > 0",
                        self.nodes[i], self.nodes[j]
                    )));
                }
                if (self.cartan(i, j) == 0) != (self.cartan(j, i) == 0) {
                    out.push(RootDataError::ConditionViolated(format!(
                        "C3: a_{{{},{}}} and a_{{{},{}}} disagree on vanishing",
                        self.nodes[i], self.nodes[j], self.nodes[j], self.nodes[i]
                    )));
                }
                if self.pairing[i][j] != self.pairing[j][i] {
                    out.push(RootDataError::ConditionViolated(format!(
                        "C5: pairing not symmetric at {},{}",
                        self.nodes[i], self.nodes[j]
                    )));
                }
            }
        }
        for i in 0..n {
            if self.is_odd(i) {
                for j in 0..n {
                    if self.cartan(i, j) % 2 != 0 {
                        out.push(RootDataError::C4Violation(format!(
                            "a_{{{},{}}} = {} is odd at an odd node",
                            self.nodes[i],
                            self.nodes[j],
                            self.cartan(i, j)
                        )));
                    }
                }
            }
        }
        if !self.parity.contains(&1) {
            out.push(RootDataError::C6Violation("there is no odd node".into()));
        }
        for i in 0..n {
            if (self.sym[i] % 2 == 1) != self.is_odd(i) {
                out.push(RootDataError::C6Violation(format!(
                    "s_{} = {} but the node has parity {}",
                    self.nodes[i], self.sym[i], self.parity[i]
                )));
            }
        }
        let g = self.sym.iter().fold(0u32, |a, &b| a.gcd(&b));
        if g != 1 {
            out.push(RootDataError::GcdNotOne(g));
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let lhs = (self.edge_orbits[i][j] + self.edge_orbits[j][i]) as i64;
                let rhs = -2 * self.pairing[i][j];
                if lhs * self.lcm_norm(i, j) as i64 != rhs {
                    out.push(RootDataError::ConditionViolated(format!(
                        "d_ij + d_ji != -2(alpha_i, alpha_j)/m(i,j) at {},{}",
                        self.nodes[i], self.nodes[j]
                    )));
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), RootDataError> {
        match self.violations().into_iter().next() {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }

    /// The exponents `(m/(alpha_i,alpha_i), m/(alpha_j,alpha_j), outer)` of
    /// `Q_ij`, or `None` when the outer exponent is not a nonnegative integer.
    pub fn q_exponents(&self, i: usize, j: usize) -> Option<(u32, u32, u32)> {
        let m = self.lcm_norm(i, j);
        let outer = -2 * self.pairing[i][j];
        if outer < 0 || outer % m as i64 != 0 {
            return None;
        }
        Some((m / self.norm(i), m / self.norm(j), (outer / m as i64) as u32))
    }

    /// `Q_ij(u, v)` in `k_ij{u, v}`.
    pub fn q_poly<T: Scalar>(&self, i: usize, j: usize) -> SkewBivarPoly<T> {
        let anti = self.is_odd(i) && self.is_odd(j);
        if i == j {
            return SkewBivarPoly::zero(anti);
        }
        let (eu, ev, outer) = self.q_exponents(i, j).expect("Q-exponents of a valid datum are integral");
        let mut base = SkewBivarPoly::monomial(anti, eu, 0, T::one());
        base.add_term(0, ev, -T::one());
        base.pow(outer).scale(&T::sign(self.edge_orbits[i][j] as i64))
    }

    /// `P_ij`: zero on the diagonal, `Q_ij` above it and `1` below it.
    pub fn p_poly<T: Scalar>(&self, i: usize, j: usize) -> SkewBivarPoly<T> {
        let anti = self.is_odd(i) && self.is_odd(j);
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => SkewBivarPoly::zero(anti),
            std::cmp::Ordering::Less => self.q_poly(i, j),
            std::cmp::Ordering::Greater => SkewBivarPoly::one(anti),
        }
    }

    pub fn q_matrix<T: Scalar>(&self) -> Vec<Vec<SkewBivarPoly<T>>> {
        (0..self.rank()).map(|i| (0..self.rank()).map(|j| self.q_poly(i, j)).collect()).collect()
    }

    pub fn p_matrix<T: Scalar>(&self) -> Vec<Vec<SkewBivarPoly<T>>> {
        (0..self.rank()).map(|i| (0..self.rank()).map(|j| self.p_poly(i, j)).collect()).collect()
    }

    /// Checks the four properties of the Q-matrix by normal-form comparison
    /// and returns the violated clauses.
    pub fn check_q_conditions(&self) -> Vec<QViolation> {
        let n = self.rank();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.q_exponents(i, j).is_none() {
                    out.push(QViolation { clause: 'a', i, j });
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        for i in 0..n {
            if !self.q_poly::<SmallRat>(i, i).is_zero() {
                out.push(QViolation { clause: 'b', i, j: i });
            }
            for j in 0..n {
                let q = self.q_poly::<SmallRat>(i, j);
                if q != self.q_poly::<SmallRat>(j, i).swap_variables() {
                    out.push(QViolation { clause: 'c', i, j });
                }
                if self.is_odd(i) && q.negate_u() != q {
                    out.push(QViolation { clause: 'd', i, j });
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let q: Vec<Vec<String>> =
            self.q_matrix::<SmallRat>().iter().map(|row| row.iter().map(|p| p.to_string()).collect()).collect();
        json!({
            "name": self.name,
            "nodes": self.nodes,
            "parity": self.parity,
            "s": self.sym,
            "pairing": self.pairing,
            "cartan": self.cartan_matrix(),
            "d": self.edge_orbits,
            "q_matrix": q,
        })
    }

    /// Nodes with the given parity.
    pub fn nodes_of_parity(&self, p: u8) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.parity[i] == p).collect()
    }

    /// Resolves a node by name, or by `odd`/`even` when that parity class has
    /// exactly one node.
    pub fn resolve_node(&self, token: &str) -> Option<usize> {
        if let Some(i) = self.node_index(token) {
            return Some(i);
        }
        let p = match token {
            "odd" => 1,
            "even" => 0,
            _ => return None,
        };
        match self.nodes_of_parity(p).as_slice() {
            [i] => Some(*i),
            _ => None,
        }
    }

    /// Restriction to a subset of nodes, keeping their relative order.
    pub fn restrict(&self, keep: &[usize]) -> RootDatum {
        let pick = |m: &Vec<Vec<i64>>| keep.iter().map(|&i| keep.iter().map(|&j| m[i][j]).collect()).collect();
        RootDatum {
            name: format!("{}[{}]", self.name, keep.iter().map(|&i| self.nodes[i].clone()).collect::<Vec<_>>().join(",")),
            nodes: keep.iter().map(|&i| self.nodes[i].clone()).collect(),
            parity: keep.iter().map(|&i| self.parity[i]).collect(),
            sym: keep.iter().map(|&i| self.sym[i]).collect(),
            pairing: pick(&self.pairing),
            edge_orbits: keep.iter().map(|&i| keep.iter().map(|&j| self.edge_orbits[i][j]).collect()).collect(),
        }
    }
}

type SmallRat = num_rational::Ratio<i64>;

/// A failed clause of the Q-matrix properties at the node pair `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QViolation {
    pub clause: char,
    pub i: usize,
    pub j: usize,
}
